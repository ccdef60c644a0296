//! Exact rational interpolation with multiplicities.
//!
//! Every question about interpolants of given data (prescribed values and
//! derivatives at distinct nodes) is answered from a single table: the
//! extended Euclidean algorithm run on the nodal polynomial `f` and the
//! Hermite interpolating polynomial `g`. The same table yields μ-bases of
//! polynomial plane parametrizations.

pub mod delta;
pub mod eea;
pub mod error;
pub mod hermite;
pub mod kappa;
pub mod mubasis;
pub mod oracle;
pub mod poly;
pub mod rational;

pub use delta::{
    admissible_delta_set, critical_indices, evaluate_parametrization, minimal_basis,
    minimal_delta_solutions, sample_solution_of_delta, DegreeSet, DeltaSolutionReport,
    MinimalBasis, SolutionKind, WeakPair,
};
pub use eea::{decompose, extended_euclid, Decomposition, EeaTrace, Row};
pub use error::{Error, Result};
pub use hermite::{
    check_interpolates, check_weak, hermite_polynomial, nodal_poly, weak_cofactor,
    InterpolationData, Node, RationalFunction,
};
pub use kappa::{
    admissible_kappa, hermite_rational, kappa_of, sample_solution_of_kappa, yy_form, KappaReport,
};
pub use mubasis::{
    cross_product_certificate, mu_basis, verify_moving_line, MovingLine, MuBasis,
    PlaneParametrization,
};
pub use poly::{Degree, Poly};
pub use rational::{int, parse_rational, rat, Rational};

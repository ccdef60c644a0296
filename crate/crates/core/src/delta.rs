//! Interpolants ranked by the δ-degree `max(deg a, deg b)`: minimal bases of
//! the weak-pair module, minimal solutions, and the admissible degree set.

use std::fmt;

use num_traits::Zero;

use crate::eea::{extended_euclid, EeaTrace};
use crate::error::{Error, Result};
use crate::hermite::{hermite_polynomial, nodal_poly, InterpolationData, RationalFunction};
use crate::poly::{Degree, Poly};
use crate::rational::{int, Rational};

/// Environment variable overriding the parameter-scan bound.
pub const MAX_SCAN_ENV: &str = "RATINTERP_MAX_SCAN";

/// A weak interpolation pair `(a, b)`, i.e. `f | a - b*g`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeakPair {
    pub a: Poly,
    pub b: Poly,
}

impl WeakPair {
    pub fn new(a: Poly, b: Poly) -> Self {
        WeakPair { a, b }
    }

    /// `max(deg a, deg b)`.
    pub fn degree(&self) -> Degree {
        self.a.degree().max(self.b.degree())
    }

    fn combine(&self, p: &Poly, other: &WeakPair, q: &Poly) -> WeakPair {
        WeakPair {
            a: p * &self.a + q * &other.a,
            b: p * &self.b + q * &other.b,
        }
    }
}

/// A basis `{pair1, pair2}` of the weak-pair module with δ-degrees
/// `mu1 <= mu2` and `mu1 + mu2 = n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimalBasis {
    pub pair1: WeakPair,
    pub pair2: WeakPair,
    pub mu1: usize,
    pub mu2: usize,
    /// Critical index `i` of the trace rows `i, i+1` the basis came from;
    /// `None` when all prescribed values are zero and no trace exists.
    pub critical_index: Option<usize>,
    /// Trace row indices of `pair1` and `pair2`.
    pub rows: Option<(usize, usize)>,
}

/// Indices `i` in `1..=N` where rows `i, i+1` straddle the degree split:
/// `deg r_i >= deg s_i` and `deg s_{i+1} >= deg r_{i+1}`.
///
/// By the degree bookkeeping of the algorithm these are the indices with
/// `2*(d_1+..+d_{i-1}) + d_i <= n <= 2*(d_1+..+d_i) + d_{i+1}`, where `d_j`
/// are the quotient degrees.
pub fn critical_indices(trace: &EeaTrace) -> Vec<usize> {
    (1..=trace.len())
        .filter(|&i| {
            trace.r(i).degree() >= trace.s(i).degree()
                && trace.s(i + 1).degree() >= trace.r(i + 1).degree()
        })
        .collect()
}

/// Trace of `(f, g)` for the data; `None` when `g = 0`.
pub fn interpolation_trace(data: &InterpolationData) -> Option<EeaTrace> {
    let g = hermite_polynomial(data);
    if g.is_zero() {
        return None;
    }
    Some(extended_euclid(&nodal_poly(data), &g).expect("deg f > deg g and g != 0"))
}

pub fn minimal_basis(data: &InterpolationData) -> MinimalBasis {
    match interpolation_trace(data) {
        Some(trace) => minimal_basis_from_trace(&trace),
        None => MinimalBasis {
            pair1: WeakPair::new(Poly::zero(), Poly::one()),
            pair2: WeakPair::new(nodal_poly(data), Poly::zero()),
            mu1: 0,
            mu2: data.n(),
            critical_index: None,
            rows: None,
        },
    }
}

/// Minimal basis at the smallest critical index of an interpolation trace.
pub fn minimal_basis_from_trace(trace: &EeaTrace) -> MinimalBasis {
    let i = *critical_indices(trace)
        .first()
        .expect("an interpolation trace has a critical index");
    basis_at(trace, i)
}

/// The basis from rows `i, i+1`, ordered by δ-degree (ties keep row order).
pub fn basis_at(trace: &EeaTrace, i: usize) -> MinimalBasis {
    let lower = WeakPair::new(trace.r(i).clone(), trace.s(i).clone());
    let upper = WeakPair::new(trace.r(i + 1).clone(), trace.s(i + 1).clone());
    let d_lower = lower.degree().finite().expect("row i is nonzero");
    let d_upper = upper.degree().finite().expect("row i+1 is nonzero");
    if d_upper < d_lower {
        MinimalBasis {
            pair1: upper,
            pair2: lower,
            mu1: d_upper,
            mu2: d_lower,
            critical_index: Some(i),
            rows: Some((i + 1, i)),
        }
    } else {
        MinimalBasis {
            pair1: lower,
            pair2: upper,
            mu1: d_lower,
            mu2: d_upper,
            critical_index: Some(i),
            rows: Some((i, i + 1)),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolutionKind {
    /// A single interpolant of δ-degree `mu1`.
    Unique,
    /// A family `(a2 + p*a1)/(b2 + p*b1)` of δ-degree `mu2`.
    Family,
}

/// A node where the family denominator `b2 + p*b1` would vanish unless
/// `p(node) != forbidden`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NodeExclusion {
    pub node: Rational,
    pub forbidden: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaSolutionReport {
    pub kind: SolutionKind,
    pub minimal_delta: usize,
    pub basis: MinimalBasis,
    /// The unique minimal interpolant, or the family member found by the
    /// parameter scan.
    pub representative: RationalFunction,
    /// The scanned constant `p = lambda` producing the representative (family case).
    pub lambda: Option<Rational>,
    /// Upper bound on `deg p` for the family (`mu2 - mu1`).
    pub free_degree: Option<usize>,
    /// Constraints `p(x_i) != forbidden_i` keeping the denominator nonzero at nodes.
    pub exclusions: Vec<NodeExclusion>,
}

/// Default bound for integer parameter scans: at most one bad value per node
/// plus the roots of a resultant of degree at most `2 * delta`.
pub fn default_scan_limit(data: &InterpolationData, delta: usize) -> usize {
    data.l() + 2 * delta + 1
}

fn scan_limit(data: &InterpolationData, delta: usize, limit: Option<usize>) -> usize {
    limit.unwrap_or_else(|| default_scan_limit(data, delta))
}

/// Forbidden values of `p(x_i)` for the combination `b2 + p*b1`.
pub fn family_exclusions(basis: &MinimalBasis, data: &InterpolationData) -> Vec<NodeExclusion> {
    data.node_points()
        .filter_map(|x| {
            let b1 = basis.pair1.b.eval(x);
            if b1.is_zero() {
                return None;
            }
            let b2 = basis.pair2.b.eval(x);
            Some(NodeExclusion {
                node: x.clone(),
                forbidden: -(b2 / b1),
            })
        })
        .collect()
}

pub fn minimal_delta_solutions(data: &InterpolationData) -> Result<DeltaSolutionReport> {
    minimal_delta_solutions_with_limit(data, None)
}

pub fn minimal_delta_solutions_with_limit(
    data: &InterpolationData,
    limit: Option<usize>,
) -> Result<DeltaSolutionReport> {
    let basis = minimal_basis(data);
    let exclusions = family_exclusions(&basis, data);
    let unique = basis.mu1 < basis.mu2 && basis.pair1.a.is_coprime_with(&basis.pair1.b)?;
    if unique {
        let representative = RationalFunction::new(basis.pair1.a.clone(), basis.pair1.b.clone())?;
        return Ok(DeltaSolutionReport {
            kind: SolutionKind::Unique,
            minimal_delta: basis.mu1,
            basis,
            representative,
            lambda: None,
            free_degree: None,
            exclusions,
        });
    }

    let max = scan_limit(data, basis.mu2, limit);
    let mut found = None;
    for k in 1..=max {
        let lambda = int(k as i64);
        let member =
            basis
                .pair2
                .combine(&Poly::one(), &basis.pair1, &Poly::constant(lambda.clone()));
        if data.vanishing_node(&member.b).is_some() {
            continue;
        }
        let rf = RationalFunction::new(member.a, member.b)?;
        if rf.delta() == basis.mu2 {
            found = Some((lambda, rf));
            break;
        }
    }
    let (lambda, representative) = found.ok_or(Error::ScanExhausted(max))?;
    Ok(DeltaSolutionReport {
        kind: SolutionKind::Family,
        minimal_delta: basis.mu2,
        free_degree: Some(basis.mu2 - basis.mu1),
        basis,
        representative,
        lambda: Some(lambda),
        exclusions,
    })
}

/// `{isolated} ∪ {δ >= threshold}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DegreeSet {
    pub isolated: Option<usize>,
    pub threshold: usize,
}

impl DegreeSet {
    pub fn contains(&self, degree: usize) -> bool {
        degree >= self.threshold || self.isolated == Some(degree)
    }

    pub fn minimum(&self) -> usize {
        self.isolated.unwrap_or(self.threshold)
    }
}

impl fmt::Display for DegreeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.isolated {
            Some(iso) => write!(f, "{{{iso}}} ∪ {{δ ≥ {}}}", self.threshold),
            None => write!(f, "{{δ ≥ {}}}", self.threshold),
        }
    }
}

pub fn admissible_delta_set(data: &InterpolationData) -> Result<DegreeSet> {
    let basis = minimal_basis(data);
    let unique = basis.mu1 < basis.mu2 && basis.pair1.a.is_coprime_with(&basis.pair1.b)?;
    Ok(DegreeSet {
        isolated: unique.then_some(basis.mu1),
        threshold: basis.mu2,
    })
}

/// `(p*a1 + q*a2)/(p*b1 + q*b2)`, rejected if the denominator vanishes at a node.
pub fn evaluate_parametrization(
    basis: &MinimalBasis,
    p: &Poly,
    q: &Poly,
    data: &InterpolationData,
) -> Result<RationalFunction> {
    let pair = basis.pair1.combine(p, &basis.pair2, q);
    if pair.b.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    if let Some(x) = data.vanishing_node(&pair.b) {
        return Err(Error::DenominatorVanishesAtNode(x.clone()));
    }
    RationalFunction::new(pair.a, pair.b)
}

pub fn sample_solution_of_delta(
    data: &InterpolationData,
    delta: usize,
) -> Result<RationalFunction> {
    sample_solution_of_delta_with_limit(data, delta, None)
}

/// An interpolant of δ-degree exactly `delta`.
///
/// Starting from a minimal solution `ã/b̃`, adds `lambda * x^(delta - mu2) * (a2, b2)`
/// and scans `lambda = 1, 2, ...` until the result is reduced and its
/// denominator is nonzero at every node.
pub fn sample_solution_of_delta_with_limit(
    data: &InterpolationData,
    delta: usize,
    limit: Option<usize>,
) -> Result<RationalFunction> {
    let report = minimal_delta_solutions_with_limit(data, limit)?;
    let set = DegreeSet {
        isolated: (report.kind == SolutionKind::Unique).then_some(report.minimal_delta),
        threshold: report.basis.mu2,
    };
    if !set.contains(delta) {
        return Err(Error::DegreeNotAdmissible(delta));
    }
    let base = &report.representative;
    if delta == base.delta() {
        return Ok(base.clone());
    }
    let shift = delta - report.basis.mu2;
    let top_a = report.basis.pair2.a.shift(shift);
    let top_b = report.basis.pair2.b.shift(shift);
    let max = scan_limit(data, delta, limit);
    for k in 1..=max {
        let lambda = Poly::constant(int(k as i64));
        let a = base.numer() + &lambda * &top_a;
        let b = base.denom() + &lambda * &top_b;
        if b.is_zero() || data.vanishing_node(&b).is_some() || !a.is_coprime_with(&b)? {
            continue;
        }
        let rf = RationalFunction::new(a, b)?;
        if rf.delta() == delta {
            return Ok(rf);
        }
    }
    Err(Error::ScanExhausted(max))
}

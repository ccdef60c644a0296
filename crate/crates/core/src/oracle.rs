//! Brute-force ground truth by exact linear algebra.
//!
//! Nothing here calls the Euclidean table or the Hermite polynomial: weak
//! interpolation pairs are found as the nullspace of the derivative
//! conditions `(a - b*y)^(j)(x_i) = 0` written directly in terms of the
//! prescribed values, and moving lines as the nullspace of the coefficient
//! equations of `a*r0 + b*r1 + c = 0`. Agreement with the solvers is
//! therefore evidence rather than tautology. Speed is not a goal.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::hermite::{InterpolationData, RationalFunction};
use crate::mubasis::PlaneParametrization;
use crate::poly::Poly;
use crate::rational::{binomial, factorial, int, Rational};

/// Which polynomial coefficient an unknown stands for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Slot {
    A(usize),
    B(usize),
    C(usize),
}

/// Homogeneous system `matrix * v = 0` over the rationals.
#[derive(Debug, Clone)]
pub struct LinearSystem {
    pub matrix: Vec<Vec<Rational>>,
    pub unknowns: Vec<Slot>,
}

impl LinearSystem {
    /// Exact basis of the solution space.
    pub fn nullspace(&self) -> Vec<Vec<Rational>> {
        nullspace(&self.matrix, self.unknowns.len())
    }

    /// Splits a solution vector into its `a`, `b`, `c` polynomials.
    pub fn split(&self, v: &[Rational]) -> (Poly, Poly, Poly) {
        let mut parts = [Vec::new(), Vec::new(), Vec::new()];
        for (slot, value) in self.unknowns.iter().zip(v) {
            let (which, k) = match *slot {
                Slot::A(k) => (0, k),
                Slot::B(k) => (1, k),
                Slot::C(k) => (2, k),
            };
            let part = &mut parts[which];
            if part.len() <= k {
                part.resize(k + 1, Rational::zero());
            }
            part[k] = value.clone();
        }
        let [a, b, c] = parts.map(Poly::from_coeffs);
        (a, b, c)
    }
}

/// Fraction-free Gauss-Jordan elimination on the integer-scaled rows, then
/// back-substitution over the rationals.
pub fn nullspace(matrix: &[Vec<Rational>], cols: usize) -> Vec<Vec<Rational>> {
    let mut rows: Vec<Vec<BigInt>> = matrix.iter().map(|r| integer_row(r, cols)).collect();
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut next = 0;
    for col in 0..cols {
        let Some(found) = (next..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(next, found);
        let pivot_row = rows[next].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == next || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                *x = &*x * &pivot_row[col] - &factor * p;
            }
            remove_content(row);
        }
        pivots.push((next, col));
        next += 1;
    }

    let pivot_cols: BTreeSet<usize> = pivots.iter().map(|&(_, c)| c).collect();
    (0..cols)
        .filter(|c| !pivot_cols.contains(c))
        .map(|free| {
            let mut v = vec![Rational::zero(); cols];
            v[free] = Rational::one();
            for &(r, c) in &pivots {
                v[c] = -Rational::new(rows[r][free].clone(), rows[r][c].clone());
            }
            v
        })
        .collect()
}

fn integer_row(row: &[Rational], cols: usize) -> Vec<BigInt> {
    let lcm = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    (0..cols)
        .map(|c| {
            row.get(c)
                .map(|x| x.numer() * (&lcm / x.denom()))
                .unwrap_or_else(BigInt::zero)
        })
        .collect()
}

fn remove_content(row: &mut [BigInt]) {
    let g = row.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in row.iter_mut() {
            *x = &*x / &g;
        }
    }
}

/// `m!/(m-j)! * x^(m-j)`, the `j`-th derivative of `x^m` at `x`.
fn monomial_derivative(m: usize, j: usize, x: &Rational) -> Rational {
    if j > m {
        return Rational::zero();
    }
    factorial(m) / factorial(m - j) * pow(x, m - j)
}

fn pow(x: &Rational, e: usize) -> Rational {
    (0..e).fold(Rational::one(), |acc, _| acc * x)
}

/// The `n` linear conditions on `(a_0..a_da, b_0..b_db)`.
pub fn weak_system(data: &InterpolationData, da: usize, db: usize) -> LinearSystem {
    let unknowns: Vec<Slot> = (0..=da).map(Slot::A).chain((0..=db).map(Slot::B)).collect();
    let mut matrix = Vec::with_capacity(data.n());
    for node in data.nodes() {
        let x = &node.x;
        for j in 0..node.multiplicity() {
            // (a - b*y)^(j) = a^(j) - sum_k C(j,k) b^(k) y^(j-k)
            let row = unknowns
                .iter()
                .map(|slot| match *slot {
                    Slot::A(m) => monomial_derivative(m, j, x),
                    Slot::B(m) => -(0..=j)
                        .map(|k| {
                            binomial(j, k) * monomial_derivative(m, k, x) * &node.values[j - k]
                        })
                        .fold(Rational::zero(), |acc, t| acc + t),
                    Slot::C(_) => unreachable!(),
                })
                .collect();
            matrix.push(row);
        }
    }
    LinearSystem { matrix, unknowns }
}

/// Basis of the weak pairs with `deg a <= da` and `deg b <= db`.
pub fn weak_pairs_upto(data: &InterpolationData, da: usize, db: usize) -> Vec<(Poly, Poly)> {
    let system = weak_system(data, da, db);
    system
        .nullspace()
        .iter()
        .map(|v| {
            let (a, b, _) = system.split(v);
            (a, b)
        })
        .collect()
}

/// Checks the derivative conditions directly on a pair.
pub fn satisfies_conditions(data: &InterpolationData, a: &Poly, b: &Poly) -> bool {
    data.nodes().iter().all(|node| {
        (0..node.multiplicity()).all(|j| {
            let lhs = a.derivative(j).eval(&node.x);
            let rhs = (0..=j)
                .map(|k| binomial(j, k) * b.derivative(k).eval(&node.x) * &node.values[j - k])
                .fold(Rational::zero(), |acc, t| acc + t);
            lhs == rhs
        })
    })
}

/// Smallest `δ` admitting a nonzero weak pair of degree at most `δ`.
pub fn min_degree_weak_pair(data: &InterpolationData) -> usize {
    (0..=data.n())
        .find(|&d| !weak_pairs_upto(data, d, d).is_empty())
        .expect("(f, 0) has degree n")
}

fn reduced(a: &Poly, b: &Poly) -> (Poly, Poly) {
    let g = a.gcd(b).expect("nonzero pair");
    (
        a.exact_div(&g).unwrap().unwrap(),
        b.exact_div(&g).unwrap().unwrap(),
    )
}

fn proportional(pairs: &[(Poly, Poly)]) -> bool {
    pairs
        .iter()
        .all(|(a, b)| pairs.iter().all(|(c, d)| (a * d - c * b).is_zero()))
}

fn numer_degree(a: &Poly) -> usize {
    a.deg().unwrap_or(0)
}

fn is_interpolant(data: &InterpolationData, a: &Poly, b: &Poly) -> bool {
    !b.is_zero()
        && data.vanishing_node(b).is_none()
        && a.is_coprime_with(b).unwrap_or(false)
        && satisfies_conditions(data, a, b)
}

/// κ-degrees below `n` realized by some interpolant, by exhaustive search
/// over all degree splits `da + db = κ`.
///
/// When `da + db < n` any two weak pairs `(a, b)`, `(a', b')` satisfy
/// `f | ab' - a'b` with `deg(ab' - a'b) < n`, so the solution space is a set
/// of multiples of one fraction. A reduced interpolant with exact degrees
/// `(da, db)` exists iff that space is one-dimensional and spanned by it.
pub fn admissible_kappa_below_n(data: &InterpolationData) -> BTreeSet<usize> {
    let n = data.n();
    let mut found = BTreeSet::new();
    for kappa in 0..n {
        for da in 0..=kappa {
            let db = kappa - da;
            let pairs = weak_pairs_upto(data, da, db);
            debug_assert!(proportional(&pairs));
            if let [(a, b)] = pairs.as_slice() {
                if numer_degree(a) == da && b.deg() == Some(db) && is_interpolant(data, a, b) {
                    found.insert(kappa);
                }
            }
        }
    }
    found
}

/// Interpolant with `deg a <= d`, `deg b <= n - d - 1`, if one exists.
pub fn hermite_rational_oracle(data: &InterpolationData, d: usize) -> Option<RationalFunction> {
    let n = data.n();
    let pairs = weak_pairs_upto(data, d, n - d - 1);
    let (a, b) = pairs.first()?;
    let (a, b) = reduced(a, b);
    if b.is_zero() || data.vanishing_node(&b).is_some() || !satisfies_conditions(data, &a, &b) {
        return None;
    }
    RationalFunction::new(a, b).ok()
}

/// Small deterministic generator for coefficient search.
struct XorShift(u64);

impl XorShift {
    fn small(&mut self) -> i64 {
        self.0 ^= self.0 << 13;
        self.0 ^= self.0 >> 7;
        self.0 ^= self.0 << 17;
        (self.0 % 7) as i64 - 3
    }
}

/// An interpolant of δ-degree exactly `delta`, if the search finds one.
///
/// If all weak pairs of degree at most `delta` are multiples of one fraction,
/// the answer is decided exactly. Otherwise up to `attempts` integer
/// combinations of the basis are tried.
pub fn delta_witness(
    data: &InterpolationData,
    delta: usize,
    attempts: usize,
) -> Option<RationalFunction> {
    let pairs = weak_pairs_upto(data, delta, delta);
    if pairs.is_empty() {
        return None;
    }
    let accept = |a: &Poly, b: &Poly| {
        let (a, b) = reduced(a, b);
        let ok = numer_degree(&a).max(b.deg().unwrap_or(0)) == delta
            && !b.is_zero()
            && is_interpolant(data, &a, &b);
        ok.then(|| RationalFunction::new(a, b).expect("nonzero denominator"))
    };
    if proportional(&pairs) {
        let (a, b) = &pairs[0];
        let (a, b) = reduced(a, b);
        if a.degree().max(b.degree())
            != pairs
                .iter()
                .map(|(a, b)| a.degree().max(b.degree()))
                .min()
                .unwrap()
        {
            return None;
        }
        return accept(&a, &b);
    }
    let mut rng = XorShift(0x9e37_79b9_7f4a_7c15);
    for _ in 0..attempts {
        let (mut a, mut b) = (Poly::zero(), Poly::zero());
        for (pa, pb) in &pairs {
            let w = Poly::constant(int(rng.small()));
            a = a + &w * pa;
            b = b + &w * pb;
        }
        if a.is_zero() && b.is_zero() {
            continue;
        }
        if let Some(rf) = accept(&a, &b) {
            return Some(rf);
        }
    }
    None
}

/// The moving-line system for coefficient degree at most `d`.
pub fn moving_line_system(param: &PlaneParametrization, d: usize) -> LinearSystem {
    let unknowns: Vec<Slot> = (0..=d)
        .map(Slot::A)
        .chain((0..=d).map(Slot::B))
        .chain((0..=d).map(Slot::C))
        .collect();
    let top = d + param.n();
    let matrix = (0..=top)
        .map(|k| {
            unknowns
                .iter()
                .map(|slot| match *slot {
                    Slot::A(m) if m <= k => param.r0().coeff(k - m),
                    Slot::B(m) if m <= k => param.r1().coeff(k - m),
                    Slot::C(m) if m == k => Rational::one(),
                    _ => Rational::zero(),
                })
                .collect()
        })
        .collect();
    LinearSystem { matrix, unknowns }
}

/// Smallest `μ` with a nonzero moving line of coefficient degree at most `μ`.
pub fn min_mu_oracle(param: &PlaneParametrization) -> usize {
    (0..=param.n())
        .find(|&d| !moving_line_system(param, d).nullspace().is_empty())
        .expect("(1, 0, -r0) has degree n")
}

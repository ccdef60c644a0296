//! Interpolants ranked by the κ-degree `deg a + deg b`, and the rational
//! Hermite problem for a prescribed numerator degree bound.

use std::collections::BTreeSet;

use crate::delta::interpolation_trace;
use crate::eea::{decompose, Decomposition};
use crate::error::{Error, Result};
use crate::hermite::{
    check_interpolates, hermite_polynomial, nodal_poly, weak_cofactor, InterpolationData,
    RationalFunction,
};
use crate::poly::Poly;
use crate::rational::int;

pub fn kappa_of(rf: &RationalFunction) -> usize {
    rf.kappa()
}

/// The decomposition `numer = sum m_i r_i`, `denom = sum m_i s_i` of the
/// canonical representative of an interpolant.
///
/// Fails with `ZeroSecondInput` when every prescribed value is zero, since
/// the table is then undefined.
pub fn yy_form(rf: &RationalFunction, data: &InterpolationData) -> Result<Decomposition> {
    if !check_interpolates(rf, data) {
        return Err(Error::NotAnInterpolant);
    }
    let trace = interpolation_trace(data).ok_or(Error::ZeroSecondInput)?;
    let c = weak_cofactor(rf.numer(), rf.denom(), data)?;
    decompose(rf.numer(), rf.denom(), &c, &trace)
}

/// An isolated admissible κ-degree `n - deg q_k` with its witness `r_k/s_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KappaWitness {
    pub kappa: usize,
    pub k: usize,
    /// `(r_k, s_k)` exactly as they appear in the table.
    pub raw: (Poly, Poly),
    pub solution: RationalFunction,
}

/// Admissible κ-degrees: the isolated values below `n` plus every `j >= n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KappaReport {
    pub isolated: Vec<KappaWitness>,
    pub tail_threshold: usize,
    pub minimal_kappa: usize,
    pub minimal_solutions: Vec<RationalFunction>,
}

impl KappaReport {
    pub fn isolated_values(&self) -> BTreeSet<usize> {
        self.isolated.iter().map(|w| w.kappa).collect()
    }

    pub fn contains(&self, kappa: usize) -> bool {
        kappa >= self.tail_threshold || self.isolated.iter().any(|w| w.kappa == kappa)
    }
}

pub fn admissible_kappa(data: &InterpolationData) -> KappaReport {
    let n = data.n();
    let isolated = match interpolation_trace(data) {
        None => vec![KappaWitness {
            kappa: 0,
            k: 1,
            raw: (Poly::zero(), Poly::one()),
            solution: RationalFunction::polynomial(Poly::zero()),
        }],
        Some(trace) => (1..=trace.len())
            .filter(|&k| data.vanishing_node(trace.s(k)).is_none())
            .map(|k| {
                let (r, s) = (trace.r(k).clone(), trace.s(k).clone());
                let solution =
                    RationalFunction::new(r.clone(), s.clone()).expect("s_k is nonzero for k >= 1");
                KappaWitness {
                    kappa: n - trace.q(k).deg().expect("quotients are nonzero"),
                    k,
                    raw: (r, s),
                    solution,
                }
            })
            .collect(),
    };
    let minimal_kappa = isolated
        .iter()
        .map(|w| w.kappa)
        .min()
        .expect("k = 1 always passes the node test");
    let minimal_solutions = isolated
        .iter()
        .filter(|w| w.kappa == minimal_kappa)
        .map(|w| w.solution.clone())
        .collect();
    KappaReport {
        isolated,
        tail_threshold: n,
        minimal_kappa,
        minimal_solutions,
    }
}

pub fn sample_solution_of_kappa(
    data: &InterpolationData,
    kappa: usize,
) -> Result<RationalFunction> {
    sample_solution_of_kappa_with_limit(data, kappa, None)
}

/// An interpolant of κ-degree exactly `kappa`.
///
/// Isolated values return their witness. For `kappa >= n` the fraction
/// `(m_0 f + r_k + λ r_{k+1}) / (s_k + λ s_{k+1})` is searched with
/// `λ = 1, 2, ...` and `m_0 = x^e + c`, `c = 1, 2, ...`; when no `k` leaves
/// room for `m_0`, the polynomial `g + m_0 f` is used instead.
pub fn sample_solution_of_kappa_with_limit(
    data: &InterpolationData,
    kappa: usize,
    limit: Option<usize>,
) -> Result<RationalFunction> {
    let report = admissible_kappa(data);
    if let Some(w) = report.isolated.iter().find(|w| w.kappa == kappa) {
        return Ok(w.solution.clone());
    }
    let n = data.n();
    if kappa < n {
        return Err(Error::KappaNotAdmissible(kappa));
    }
    let max = limit.unwrap_or(data.l() + 2 * kappa + 1);
    let f = nodal_poly(data);

    if let Some(trace) = interpolation_trace(data) {
        for k in 1..=trace.len() {
            let Some((num, den)) = pencil_member(data, &trace, k, max)? else {
                continue;
            };
            let den_deg = den.deg().expect("pencil denominator is nonzero");
            if kappa == n {
                return RationalFunction::new(num, den);
            }
            let Some(e) = kappa.checked_sub(n + den_deg) else {
                continue;
            };
            for c in 1..=max {
                let m0 = Poly::monomial(int(1), e) + Poly::constant(int(c as i64));
                if m0.is_zero() {
                    continue;
                }
                let a = &m0 * &f + &num;
                if a.is_coprime_with(&den)? {
                    let rf = RationalFunction::new(a, den.clone())?;
                    if rf.kappa() == kappa {
                        return Ok(rf);
                    }
                }
            }
        }
    }

    // g + m_0 f is always a polynomial interpolant of degree n + deg m_0.
    let e = kappa - n;
    let m0 = Poly::monomial(int(1), e) + Poly::one();
    let rf = RationalFunction::polynomial(hermite_polynomial(data) + m0 * f);
    debug_assert_eq!(rf.kappa(), kappa);
    Ok(rf)
}

/// `(r_k + λ r_{k+1}, s_k + λ s_{k+1})` for the first `λ` in `1..=max` giving a
/// reduced fraction with denominator nonzero at every node.
fn pencil_member(
    data: &InterpolationData,
    trace: &crate::eea::EeaTrace,
    k: usize,
    max: usize,
) -> Result<Option<(Poly, Poly)>> {
    for lambda in 1..=max {
        let lambda = Poly::constant(int(lambda as i64));
        let num = trace.r(k) + &lambda * trace.r(k + 1);
        let den = trace.s(k) + &lambda * trace.s(k + 1);
        if den.is_zero() || data.vanishing_node(&den).is_some() {
            continue;
        }
        if num.is_coprime_with(&den)? {
            return Ok(Some((num, den)));
        }
    }
    Ok(None)
}

/// Solves the rational Hermite problem for the split `d`: an interpolant
/// `a/b` with `deg a <= d` and `deg b <= n - d - 1`, or `None` if there is none.
///
/// The only candidate is `r_k/s_k` with `deg r_k <= d < deg r_{k-1}`.
pub fn hermite_rational(data: &InterpolationData, d: usize) -> Result<Option<RationalFunction>> {
    let n = data.n();
    if d >= n {
        return Err(Error::SplitOutOfRange { d, max: n - 1 });
    }
    let Some(trace) = interpolation_trace(data) else {
        return Ok(Some(RationalFunction::polynomial(Poly::zero())));
    };
    // r_{N+1} = 0 has degree -inf, so some k in 1..=N+1 qualifies
    let k = (1..=trace.len() + 1)
        .find(|&k| trace.r(k).degree() <= d && d < trace.r(k - 1).degree().finite().unwrap_or(0))
        .expect("remainder degrees decrease from n to -inf");
    let (r, s) = (trace.r(k), trace.s(k));
    if !r.gcd(s)?.is_constant() {
        return Ok(None);
    }
    let rf = RationalFunction::new(r.clone(), s.clone())?;
    debug_assert!(check_interpolates(&rf, data));
    Ok(Some(rf))
}

//! Extended Euclidean algorithm with the full remainder/cofactor table, and
//! the unique decomposition of a syzygy over the table rows.

use crate::error::{Error, Result};
use crate::poly::{Degree, Poly};

/// One row `(r_i, s_i, t_i)` of the table, with `r_i = s_i*r_1 + t_i*r_0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Row {
    pub r: Poly,
    pub s: Poly,
    pub t: Poly,
}

impl Row {
    /// `max(deg r, deg s)`.
    pub fn rs_degree(&self) -> Degree {
        self.r.degree().max(self.s.degree())
    }

    fn scaled(&self, m: &Poly) -> Row {
        Row {
            r: m * &self.r,
            s: m * &self.s,
            t: m * &self.t,
        }
    }

    fn plus(&self, other: &Row) -> Row {
        Row {
            r: &self.r + &other.r,
            s: &self.s + &other.s,
            t: &self.t + &other.t,
        }
    }
}

/// The complete table of the extended Euclidean algorithm on `(r_0, r_1)`.
///
/// `rows` runs over `i = 0..=N+1` with `r_{N+1} = 0` and `r_N != 0`;
/// `quotients[i-1]` holds `q_i` for `i = 1..=N`. Remainders are kept exactly
/// as produced (no monic normalization).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EeaTrace {
    rows: Vec<Row>,
    quotients: Vec<Poly>,
}

/// Runs the extended Euclidean algorithm.
///
/// Requires `r1 != 0` and `deg r0 >= deg r1`.
pub fn extended_euclid(r0: &Poly, r1: &Poly) -> Result<EeaTrace> {
    if r1.is_zero() {
        return Err(Error::ZeroSecondInput);
    }
    if r0.degree() < r1.degree() {
        return Err(Error::DegreeOrder);
    }
    let mut rows = vec![
        Row {
            r: r0.clone(),
            s: Poly::zero(),
            t: Poly::one(),
        },
        Row {
            r: r1.clone(),
            s: Poly::one(),
            t: Poly::zero(),
        },
    ];
    let mut quotients = Vec::new();
    while !rows[rows.len() - 1].r.is_zero() {
        let prev = &rows[rows.len() - 2];
        let cur = &rows[rows.len() - 1];
        let (q, r) = prev.r.div_rem(&cur.r)?;
        let next = Row {
            r,
            s: &prev.s - &q * &cur.s,
            t: &prev.t - &q * &cur.t,
        };
        quotients.push(q);
        rows.push(next);
    }
    Ok(EeaTrace { rows, quotients })
}

impl EeaTrace {
    /// Number of nonzero remainders after `r_0`; `r_N` is the last nonzero one.
    pub fn len(&self) -> usize {
        self.quotients.len()
    }

    pub fn is_empty(&self) -> bool {
        self.quotients.is_empty()
    }

    /// Degree of `r_0`.
    pub fn n(&self) -> usize {
        self.rows[0].r.deg().expect("r0 is nonzero")
    }

    /// Rows `0..=N+1`.
    pub fn rows(&self) -> &[Row] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &Row {
        &self.rows[i]
    }

    pub fn r(&self, i: usize) -> &Poly {
        &self.rows[i].r
    }

    pub fn s(&self, i: usize) -> &Poly {
        &self.rows[i].s
    }

    pub fn t(&self, i: usize) -> &Poly {
        &self.rows[i].t
    }

    /// `q_i` for `i = 1..=N`.
    pub fn q(&self, i: usize) -> &Poly {
        &self.quotients[i - 1]
    }

    pub fn quotients(&self) -> &[Poly] {
        &self.quotients
    }

    /// Degrees of `q_1, ..., q_N`.
    pub fn quotient_degrees(&self) -> Vec<usize> {
        self.quotients
            .iter()
            .map(|q| q.deg().expect("quotients are nonzero"))
            .collect()
    }

    /// The last nonzero remainder, a gcd of `r_0` and `r_1` up to a scalar.
    pub fn last_remainder(&self) -> &Poly {
        &self.rows[self.len()].r
    }

    /// Rows `i` and `i + 1`, a basis of the syzygies of `(1, -r_1, -r_0)`.
    pub fn syzygy_basis_pair(&self, i: usize) -> Result<(&Row, &Row)> {
        let max = self.len() - 1;
        if i > max {
            return Err(Error::IndexOutOfRange { index: i, max });
        }
        Ok((&self.rows[i], &self.rows[i + 1]))
    }

    /// `sum m_i * row_i`.
    pub fn recombine(&self, decomposition: &Decomposition) -> Row {
        let zero = Row {
            r: Poly::zero(),
            s: Poly::zero(),
            t: Poly::zero(),
        };
        decomposition
            .m
            .iter()
            .zip(&self.rows)
            .fold(zero, |acc, (m, row)| acc.plus(&row.scaled(m)))
    }
}

/// Coefficients `m_0, ..., m_{N+1}` expressing a syzygy over the trace rows,
/// with `deg m_i < deg q_i` for `1 <= i <= N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub m: Vec<Poly>,
}

impl Decomposition {
    /// Indices with a nonzero coefficient.
    pub fn support(&self) -> Vec<usize> {
        (0..self.m.len())
            .filter(|&i| !self.m[i].is_zero())
            .collect()
    }
}

/// Writes `(a, b, c)` with `a = r_1*b + r_0*c` as `sum m_i (r_i, s_i, t_i)`.
///
/// The `s`-components have strictly increasing degrees, so `b` is peeled off
/// greedily from `s_{N+1}` down to `s_1 = 1`; the remaining multiple of
/// `(r_0, 0, 1)` gives `m_0`.
pub fn decompose(a: &Poly, b: &Poly, c: &Poly, trace: &EeaTrace) -> Result<Decomposition> {
    let r0 = trace.r(0);
    let r1 = trace.r(1);
    if r0.degree() == r1.degree() {
        return Err(Error::DegreeTie);
    }
    if *a != r1 * b + r0 * c {
        return Err(Error::NotASyzygy);
    }
    let top = trace.len() + 1;
    let mut m = vec![Poly::zero(); top + 1];
    let mut rest = b.clone();
    for i in (1..=top).rev() {
        let (quot, rem) = rest.div_rem(trace.s(i))?;
        m[i] = quot;
        rest = rem;
    }
    debug_assert!(rest.is_zero(), "s_1 = 1 absorbs the final remainder");

    let partial = trace.recombine(&Decomposition { m: m.clone() });
    // what is left is a multiple of (r_0, 0, 1)
    m[0] = c - &partial.t;
    Ok(Decomposition { m })
}

//! μ-bases of polynomial plane parametrizations `t -> (r0(t), r1(t))`,
//! read off consecutive rows `(t_i, s_i, -r_i)` of the Euclidean table.

use std::fmt;

use crate::eea::{extended_euclid, Row};
use crate::error::{Error, Result};
use crate::poly::{Degree, Poly};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneParametrization {
    r0: Poly,
    r1: Poly,
}

impl PlaneParametrization {
    /// Requires `r0` nonconstant and `deg r0 >= deg r1`.
    pub fn new(r0: Poly, r1: Poly) -> Result<Self> {
        if r0.is_constant() {
            return Err(Error::InvalidParametrization("r0 must be nonconstant"));
        }
        if r1.degree() > r0.degree() {
            return Err(Error::InvalidParametrization(
                "deg r1 must not exceed deg r0",
            ));
        }
        Ok(PlaneParametrization { r0, r1 })
    }

    pub fn r0(&self) -> &Poly {
        &self.r0
    }

    pub fn r1(&self) -> &Poly {
        &self.r1
    }

    pub fn n(&self) -> usize {
        self.r0.deg().expect("r0 is nonconstant")
    }
}

/// The moving line `t0*T0 + t1*T1 + c`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MovingLine {
    pub t0: Poly,
    pub t1: Poly,
    pub c: Poly,
}

impl MovingLine {
    fn from_row(row: &Row) -> Self {
        MovingLine {
            t0: row.t.clone(),
            t1: row.s.clone(),
            c: -&row.r,
        }
    }

    /// Largest coefficient degree.
    pub fn degree(&self) -> Degree {
        self.t0.degree().max(self.t1.degree()).max(self.c.degree())
    }

    pub fn is_zero(&self) -> bool {
        self.t0.is_zero() && self.t1.is_zero() && self.c.is_zero()
    }

    /// Coefficient triple `(t0, t1, c)`.
    pub fn triple(&self) -> [&Poly; 3] {
        [&self.t0, &self.t1, &self.c]
    }

    /// Homogenized form in `x, z` with `T2` for the constant slot, each
    /// coefficient raised to total degree `degree`.
    pub fn projective(&self, degree: usize) -> String {
        let mut parts: Vec<(bool, String)> = Vec::new();
        for (coeff, var) in [(&self.t0, "T0"), (&self.t1, "T1"), (&self.c, "T2")] {
            if coeff.is_zero() {
                continue;
            }
            parts.push(term(&coeff.homogenized(degree), var));
        }
        join_terms(parts)
    }
}

/// Splits a leading minus sign off and wraps multi-term coefficients.
fn term(coeff: &str, var: &str) -> (bool, String) {
    let (negative, body) = match coeff.strip_prefix('-') {
        Some(rest) if !rest.contains(" + ") && !rest.contains(" - ") => (true, rest.to_string()),
        _ => (false, coeff.to_string()),
    };
    let body = if body.contains(" + ") || body.contains(" - ") {
        format!("({body})")
    } else {
        body
    };
    let text = match body.as_str() {
        "1" if !var.is_empty() => var.to_string(),
        _ => format!("{body}{var}"),
    };
    (negative, text)
}

fn join_terms(parts: Vec<(bool, String)>) -> String {
    if parts.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (negative, text)) in parts.into_iter().enumerate() {
        match (i, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(&text);
    }
    out
}

/// Affine form, e.g. `T0 - xT1 - 2x^2`.
impl fmt::Display for MovingLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (coeff, var) in [(&self.t0, "T0"), (&self.t1, "T1"), (&self.c, "")] {
            if coeff.is_zero() {
                continue;
            }
            parts.push(term(&coeff.to_string(), var));
        }
        f.write_str(&join_terms(parts))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MuBasis {
    pub mu: usize,
    /// Moving line of degree `mu`.
    pub low: MovingLine,
    /// Moving line of degree `n - mu`.
    pub high: MovingLine,
    /// Trace index `i` with the basis taken from rows `i, i+1`; `None` for `r1 = 0`.
    pub index: Option<usize>,
}

/// True iff `t0*r0 + t1*r1 + c = 0`.
pub fn verify_moving_line(line: &MovingLine, param: &PlaneParametrization) -> bool {
    (&line.t0 * param.r0() + &line.t1 * param.r1() + &line.c).is_zero()
}

/// Finds the first `i` whose rows `i, i+1` have line degrees summing to `n`.
pub fn mu_basis(param: &PlaneParametrization) -> Result<MuBasis> {
    let n = param.n();
    if param.r1().is_zero() {
        return Ok(MuBasis {
            mu: 0,
            low: MovingLine {
                t0: Poly::zero(),
                t1: Poly::one(),
                c: Poly::zero(),
            },
            high: MovingLine {
                t0: Poly::one(),
                t1: Poly::zero(),
                c: -param.r0(),
            },
            index: None,
        });
    }
    let trace = extended_euclid(param.r0(), param.r1())?;
    let lines: Vec<MovingLine> = trace.rows().iter().map(MovingLine::from_row).collect();
    let degree = |i: usize| lines[i].degree().finite().expect("trace rows are nonzero");
    let i = (0..=trace.len())
        .find(|&i| degree(i) + degree(i + 1) == n)
        .ok_or(Error::NoCriticalIndex)?;
    let (first, second) = (lines[i].clone(), lines[i + 1].clone());
    let (low, high) = if degree(i + 1) < degree(i) {
        (second, first)
    } else {
        (first, second)
    };
    Ok(MuBasis {
        mu: degree(i).min(degree(i + 1)),
        low,
        high,
        index: Some(i),
    })
}

/// True iff `low × high = ±(r0, r1, 1)`.
pub fn cross_product_certificate(basis: &MuBasis, param: &PlaneParametrization) -> bool {
    let [a0, a1, a2] = basis.low.triple();
    let [b0, b1, b2] = basis.high.triple();
    let cross = [a1 * b2 - a2 * b1, a2 * b0 - a0 * b2, a0 * b1 - a1 * b0];
    let target = [param.r0().clone(), param.r1().clone(), Poly::one()];
    let negated = target.clone().map(|p| -p);
    cross == target || cross == negated
}

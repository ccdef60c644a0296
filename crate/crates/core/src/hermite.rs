//! Interpolation data, the nodal and Hermite polynomials, and the weak
//! interpolation conditions `a = b*g + c*f`.

use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::{Degree, Poly};
use crate::rational::{factorial, Rational};

/// A node `x_i` together with its prescribed values `y_{i,0}, ..., y_{i,n_i-1}`,
/// where `y_{i,j}` is the value of the `j`-th derivative at `x_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Node {
    pub x: Rational,
    pub values: Vec<Rational>,
}

impl Node {
    pub fn multiplicity(&self) -> usize {
        self.values.len()
    }
}

/// Interpolation data with pairwise distinct nodes and nonempty value lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InterpolationData {
    nodes: Vec<Node>,
}

impl InterpolationData {
    pub fn new(nodes: Vec<Node>) -> Result<Self> {
        if nodes.is_empty() {
            return Err(Error::NoNodes);
        }
        for (i, node) in nodes.iter().enumerate() {
            if node.values.is_empty() {
                return Err(Error::EmptyValues(node.x.clone()));
            }
            if nodes[..i].iter().any(|m| m.x == node.x) {
                return Err(Error::DuplicateNode(node.x.clone()));
            }
        }
        Ok(InterpolationData { nodes })
    }

    /// Builds data from `(x, values)` pairs.
    pub fn from_pairs<I>(points: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Rational, Vec<Rational>)>,
    {
        InterpolationData::new(
            points
                .into_iter()
                .map(|(x, values)| Node { x, values })
                .collect(),
        )
    }

    /// Plain (multiplicity one) data from `(x, y)` pairs.
    pub fn from_values<I>(points: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Rational, Rational)>,
    {
        InterpolationData::from_pairs(points.into_iter().map(|(x, y)| (x, vec![y])))
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    pub fn node_points(&self) -> impl Iterator<Item = &Rational> {
        self.nodes.iter().map(|n| &n.x)
    }

    /// Total number of conditions `n = sum n_i`.
    pub fn n(&self) -> usize {
        self.nodes.iter().map(Node::multiplicity).sum()
    }

    /// Number of distinct nodes `l`.
    pub fn l(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_all_zero(&self) -> bool {
        self.nodes
            .iter()
            .all(|n| n.values.iter().all(Zero::is_zero))
    }

    /// First node where `p` vanishes, if any.
    pub fn vanishing_node(&self, p: &Poly) -> Option<&Rational> {
        self.node_points().find(|x| p.eval(x).is_zero())
    }
}

/// `f(x) = prod (x - x_i)^{n_i}`.
pub fn nodal_poly(data: &InterpolationData) -> Poly {
    data.nodes().iter().fold(Poly::one(), |acc, node| {
        acc * Poly::linear_root(&node.x).pow(node.multiplicity())
    })
}

/// The unique polynomial `g` with `deg g < n` matching every prescribed
/// derivative value, built in Newton form over the node multiset with
/// confluent divided differences.
pub fn hermite_polynomial(data: &InterpolationData) -> Poly {
    // z: nodes repeated by multiplicity; owner[k] indexes the node of z[k].
    let mut z = Vec::with_capacity(data.n());
    let mut owner = Vec::with_capacity(data.n());
    for (i, node) in data.nodes().iter().enumerate() {
        for _ in 0..node.multiplicity() {
            z.push(node.x.clone());
            owner.push(i);
        }
    }
    let n = z.len();

    // column[k] holds f[z_k, ..., z_{k+order}] after each pass.
    let mut column: Vec<Rational> = owner
        .iter()
        .map(|&i| data.nodes()[i].values[0].clone())
        .collect();
    let mut newton = vec![column[0].clone()];
    for order in 1..n {
        let next: Vec<Rational> = (0..n - order)
            .map(|k| {
                if z[k] == z[k + order] {
                    // repeated nodes are contiguous, so z_k..z_{k+order} coincide
                    data.nodes()[owner[k]].values[order].clone() / factorial(order)
                } else {
                    (&column[k + 1] - &column[k]) / (&z[k + order] - &z[k])
                }
            })
            .collect();
        newton.push(next[0].clone());
        column = next;
    }

    // Horner on the Newton form.
    let mut g = Poly::zero();
    for k in (0..n).rev() {
        g = g * Poly::linear_root(&z[k]) + Poly::constant(newton[k].clone());
    }
    g
}

/// True iff `f` divides `a - b*g`.
pub fn check_weak(a: &Poly, b: &Poly, data: &InterpolationData) -> bool {
    weak_residue(a, b, data).is_zero()
}

fn weak_residue(a: &Poly, b: &Poly, data: &InterpolationData) -> Poly {
    let f = nodal_poly(data);
    let g = hermite_polynomial(data);
    (a - b * &g).rem(&f).expect("nodal polynomial is nonzero")
}

/// Weak conditions plus a denominator that is nonzero at every node.
pub fn pair_interpolates(a: &Poly, b: &Poly, data: &InterpolationData) -> bool {
    data.vanishing_node(b).is_none() && check_weak(a, b, data)
}

pub fn check_interpolates(rf: &RationalFunction, data: &InterpolationData) -> bool {
    pair_interpolates(rf.numer(), rf.denom(), data)
}

/// The unique `c` with `a = b*g + c*f`.
pub fn weak_cofactor(a: &Poly, b: &Poly, data: &InterpolationData) -> Result<Poly> {
    let f = nodal_poly(data);
    let g = hermite_polynomial(data);
    (a - b * &g).exact_div(&f)?.ok_or(Error::NotWeak)
}

/// A reduced fraction `a/b` with monic denominator.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    numer: Poly,
    denom: Poly,
}

impl RationalFunction {
    /// Divides out `gcd(numer, denom)` and makes the denominator monic.
    pub fn new(numer: Poly, denom: Poly) -> Result<Self> {
        if denom.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        let common = numer.gcd(&denom)?;
        let numer = numer.exact_div(&common)?.expect("gcd divides numerator");
        let denom = denom.exact_div(&common)?.expect("gcd divides denominator");
        let lead = denom.leading_coeff().recip();
        Ok(RationalFunction {
            numer: numer.scale(&lead),
            denom: denom.scale(&lead),
        })
    }

    pub fn polynomial(p: Poly) -> Self {
        RationalFunction {
            numer: p,
            denom: Poly::one(),
        }
    }

    pub fn numer(&self) -> &Poly {
        &self.numer
    }

    pub fn denom(&self) -> &Poly {
        &self.denom
    }

    /// `max(deg a, deg b)`, with the zero numerator counted as degree 0.
    pub fn delta(&self) -> usize {
        numer_degree(&self.numer).max(self.denom.deg().unwrap_or(0))
    }

    /// `deg a + deg b`, with the zero numerator counted as degree 0.
    pub fn kappa(&self) -> usize {
        numer_degree(&self.numer) + self.denom.deg().unwrap_or(0)
    }

    pub fn eval(&self, x0: &Rational) -> Option<Rational> {
        let d = self.denom.eval(x0);
        (!d.is_zero()).then(|| self.numer.eval(x0) / d)
    }
}

fn numer_degree(p: &Poly) -> usize {
    match p.degree() {
        Degree::NegInf => 0,
        Degree::Finite(d) => d,
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom == Poly::one() {
            write!(f, "{}", self.numer)
        } else {
            let wrap = |p: &Poly| {
                let text = p.to_string();
                let terms = p.coeffs().iter().filter(|c| !c.is_zero()).count();
                if terms > 1 || text.contains('/') {
                    format!("({text})")
                } else {
                    text
                }
            };
            write!(f, "{}/{}", wrap(&self.numer), wrap(&self.denom))
        }
    }
}

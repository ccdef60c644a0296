//! Shared fixtures and invariant checks for the integration tests.
#![allow(dead_code)]

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use ratinterp::{
    check_weak, decompose, int, rat, EeaTrace, InterpolationData, Node, PlaneParametrization, Poly,
    Rational,
};

pub fn p(c: &[i64]) -> Poly {
    Poly::from_ints(c)
}

/// Nodes 0, 2 (values -2, 6) and -1 with value -3 and slope 3.
pub fn example1() -> InterpolationData {
    InterpolationData::from_pairs([
        (int(0), vec![int(-2)]),
        (int(2), vec![int(6)]),
        (int(-1), vec![int(-3), int(3)]),
    ])
    .unwrap()
}

/// Six symmetric nodes ±1, ±2, ±3.
pub fn example2() -> InterpolationData {
    InterpolationData::from_values(
        [(1, 1), (-1, 1), (2, -14), (-2, -14), (3, 1), (-3, 1)].map(|(x, y)| (int(x), int(y))),
    )
    .unwrap()
}

/// Four simple nodes whose quotients all have degree one.
pub fn generic4() -> InterpolationData {
    InterpolationData::from_values(
        [(-1, -3), (0, -2), (1, -1), (2, 6)].map(|(x, y)| (int(x), int(y))),
    )
    .unwrap()
}

pub fn quartic_curve() -> PlaneParametrization {
    PlaneParametrization::new(p(&[0, 0, 6, 0, -4]), p(&[0, 4, 0, -4])).unwrap()
}

pub fn monomial_curve(n: usize, m: usize) -> PlaneParametrization {
    PlaneParametrization::new(Poly::monomial(int(1), n), Poly::monomial(int(1), m)).unwrap()
}

pub fn random_rational(rng: &mut ChaCha8Rng, bound: i64) -> Rational {
    let den = rng.gen_range(1..=3i64);
    rat(rng.gen_range(-bound * den..=bound * den), den)
}

/// Random data with total multiplicity `n <= max_n`, nodes in `[-5, 5]`,
/// values in `[-10, 10]`.
pub fn random_data(rng: &mut ChaCha8Rng, max_n: usize) -> InterpolationData {
    let n = rng.gen_range(1..=max_n);
    let mut nodes: Vec<Node> = Vec::new();
    let mut used = 0;
    while used < n {
        let x = random_rational(rng, 5);
        if nodes.iter().any(|node| node.x == x) {
            continue;
        }
        let mult = rng.gen_range(1..=(n - used).min(3));
        let values = (0..mult)
            .map(|_| {
                // occasional zeros exercise shared factors and g = 0
                if rng.gen_bool(0.15) {
                    int(0)
                } else {
                    random_rational(rng, 10)
                }
            })
            .collect();
        nodes.push(Node { x, values });
        used += mult;
    }
    InterpolationData::new(nodes).unwrap()
}

pub fn random_poly(rng: &mut ChaCha8Rng, degree: usize, bound: i64) -> Poly {
    Poly::from_coeffs((0..=degree).map(|_| random_rational(rng, bound)).collect())
}

/// Random parametrization with `deg r0 = n <= max_n` and `deg r1 <= n`.
pub fn random_param(rng: &mut ChaCha8Rng, max_n: usize) -> PlaneParametrization {
    let n = rng.gen_range(1..=max_n);
    let m = rng.gen_range(0..=n);
    let exact = |rng: &mut ChaCha8Rng, d: usize| loop {
        let q = random_poly(rng, d, 5);
        if q.deg() == Some(d) {
            return q;
        }
    };
    if rng.gen_bool(0.05) {
        return PlaneParametrization::new(exact(rng, n), Poly::zero()).unwrap();
    }
    if n >= 2 && m >= 1 && rng.gen_bool(0.2) {
        // multiply traced curve: common factor x - c
        let factor = Poly::linear_root(&int(rng.gen_range(-3..=3)));
        let r0 = exact(rng, n - 1) * &factor;
        let r1 = random_poly(rng, m - 1, 5) * &factor;
        return PlaneParametrization::new(r0, r1).unwrap();
    }
    PlaneParametrization::new(exact(rng, n), random_poly(rng, m, 5)).unwrap()
}

fn is_unit(p: &Poly) -> bool {
    p == &Poly::one() || p == &-Poly::one()
}

fn sign(i: usize) -> Poly {
    if i.is_multiple_of(2) {
        Poly::one()
    } else {
        -Poly::one()
    }
}

/// Asserts every structural identity of a Euclidean table: row identity,
/// degree bookkeeping, unimodularity, the three minor identities and the
/// decomposition round-trip on every row.
pub fn assert_trace_invariants(trace: &EeaTrace) {
    let rows = trace.rows();
    let big_n = trace.len();
    let (r0, r1) = (trace.r(0), trace.r(1));
    assert!(trace.r(big_n + 1).is_zero());
    assert!(!trace.r(big_n).is_zero());

    for (i, row) in rows.iter().enumerate() {
        assert_eq!(row.r, &row.s * r1 + &row.t * r0, "row identity at {i}");
    }
    for i in 1..big_n {
        assert!(
            trace.r(i).degree() > trace.r(i + 1).degree(),
            "remainders decrease at {i}"
        );
    }
    let q = trace.quotient_degrees();
    let n = trace.n();
    for i in 1..=big_n {
        let upto: usize = q[..i].iter().sum();
        assert_eq!(trace.r(i).deg(), Some(n - upto), "deg r_{i}");
        if i >= 2 {
            assert_eq!(trace.s(i).deg(), Some(q[..i - 1].iter().sum()), "deg s_{i}");
        }
        if i >= 2 || r0.degree() > r1.degree() {
            assert!(q[i - 1] >= 1, "deg q_{i}");
        }
    }
    for i in 0..=big_n {
        let (a, b) = (&rows[i], &rows[i + 1]);
        assert!(is_unit(&(&a.s * &b.t - &b.s * &a.t)), "unimodular at {i}");
        assert_eq!(&a.r * &b.s - &b.r * &a.s, sign(i) * r0, "r/s minor at {i}");
        assert_eq!(&b.r * &a.t - &a.r * &b.t, sign(i) * r1, "r/t minor at {i}");
        assert_eq!(&a.t * &b.s - &a.s * &b.t, sign(i), "t/s minor at {i}");
    }
    if r0.degree() > r1.degree() {
        for (i, row) in rows.iter().enumerate() {
            let d = decompose(&row.r, &row.s, &row.t, trace).unwrap();
            assert_eq!(d.support(), vec![i], "decomposition of row {i}");
        }
    }
}

/// Interpolation-specific checks: every row is a weak pair and rows whose
/// `s` avoids every node are automatically reduced.
pub fn assert_interpolation_rows(trace: &EeaTrace, data: &InterpolationData) {
    for (i, row) in trace.rows().iter().enumerate() {
        assert!(check_weak(&row.r, &row.s, data), "row {i} is weak");
        if i >= 1 && data.vanishing_node(&row.s).is_none() {
            assert!(row.r.is_coprime_with(&row.s).unwrap(), "row {i} is reduced");
        }
    }
}

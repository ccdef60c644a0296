//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Runs without the libtest harness so the report is always printed. Each
//! criterion is a list of named checks; a criterion passes when all of its
//! checks do. A few checks compare against values printed in the source
//! tables that contradict the tables' own recurrences. Those are reported
//! as FAIL, listed in `TABLE_ERRATA`, and paired with a check of the
//! recurrence-consistent value; only unexpected failures fail the run.

mod common;

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::*;
use ratinterp::delta::interpolation_trace;
use ratinterp::oracle::{
    admissible_kappa_below_n, min_degree_weak_pair, min_mu_oracle, weak_pairs_upto,
};
use ratinterp::*;

/// Checks expected to fail because the printed value is inconsistent.
const TABLE_ERRATA: &[&str] = &[
    "example 2: r_3 = -4 as printed",
    "example 2: s_3 = -x^4 + 2x^2 - 3 as printed",
    "example 2: witness 4/(x^4 - 2x^2 + 3) as printed",
    "generic: s_4 = (-8x^2 + 4x + 3)/24 as printed",
];

type Checks = Vec<(String, bool)>;
type Criterion = (&'static str, fn() -> Checks);

fn q(c: &[(i64, i64)]) -> Poly {
    Poly::from_coeffs(c.iter().map(|&(n, d)| rat(n, d)).collect())
}

fn check(checks: &mut Checks, name: &str, ok: bool) {
    checks.push((name.to_string(), ok));
}

fn criterion1() -> Checks {
    let mut c = Checks::new();
    let tr = extended_euclid(&p(&[0, -2, -3, 0, 1]), &p(&[-2, 0, 0, 1])).unwrap();
    check(&mut c, "N = 3", tr.len() == 3);
    check(&mut c, "r_1 = x^3 - 2", tr.r(1) == &p(&[-2, 0, 0, 1]));
    check(&mut c, "r_2 = -3x^2", tr.r(2) == &p(&[0, 0, -3]));
    check(&mut c, "r_3 = -2", tr.r(3) == &p(&[-2]));
    let s = [p(&[]), p(&[1]), p(&[0, -1]), q(&[(1, 1), (0, 1), (-1, 3)])];
    check(&mut c, "s_0..s_3", (0..4).all(|i| tr.s(i) == &s[i]));
    let qs = [
        p(&[0, 1]),
        q(&[(0, 1), (-1, 3)]),
        q(&[(0, 1), (0, 1), (3, 2)]),
    ];
    check(&mut c, "q_1..q_3", tr.quotients() == qs);
    c
}

fn criterion2() -> Checks {
    let mut c = Checks::new();
    let data = example2();
    let tr = interpolation_trace(&data).unwrap();
    check(
        &mut c,
        "r_0 = f",
        tr.r(0) == &p(&[-36, 0, 49, 0, -14, 0, 1]),
    );
    check(
        &mut c,
        "r_1 = x^4 - 10x^2 + 10",
        tr.r(1) == &p(&[10, 0, -10, 0, 1]),
    );
    check(&mut c, "r_2 = -x^2 + 4", tr.r(2) == &p(&[4, 0, -1]));
    check(&mut c, "s_2 = -x^2 + 4", tr.s(2) == &p(&[4, 0, -1]));
    check(
        &mut c,
        "example 2: r_3 = -4 as printed",
        tr.r(3) == &p(&[-4]),
    );
    check(
        &mut c,
        "example 2: s_3 = -x^4 + 2x^2 - 3 as printed",
        tr.s(3) == &p(&[-3, 0, 2, 0, -1]),
    );
    check(&mut c, "r_3 = -14 by the recurrence", tr.r(3) == &p(&[-14]));
    check(
        &mut c,
        "s_3 = -x^4 + 10x^2 - 23 by the recurrence",
        tr.s(3) == &p(&[-23, 0, 10, 0, -1]),
    );
    let qs = [
        p(&[-4, 0, 1]),
        p(&[6, 0, -1]),
        q(&[(-4, 14), (0, 1), (1, 14)]),
    ];
    check(
        &mut c,
        "q = [x^2 - 4, -x^2 + 6, (x^2 - 4)/14]",
        tr.quotients() == qs,
    );
    let basis = minimal_basis(&data);
    check(&mut c, "mu1 = 2, mu2 = 4", (basis.mu1, basis.mu2) == (2, 4));
    check(
        &mut c,
        "critical indices {1, 2}",
        critical_indices(&tr) == vec![1, 2],
    );
    let set = admissible_delta_set(&data).unwrap();
    check(
        &mut c,
        "admissible delta = {d >= 4}",
        set == DegreeSet {
            isolated: None,
            threshold: 4,
        },
    );
    check(
        &mut c,
        "delta = 3 rejected",
        sample_solution_of_delta(&data, 3) == Err(Error::DegreeNotAdmissible(3)),
    );
    c
}

fn criterion3() -> Checks {
    let mut c = Checks::new();
    let data = example1();
    let report = minimal_delta_solutions(&data).unwrap();
    check(&mut c, "minimal delta = 2", report.minimal_delta == 2);
    check(&mut c, "family case", report.kind == SolutionKind::Family);
    let lambdas = [
        (0, 1),
        (1, 1),
        (2, 1),
        (-1, 1),
        (-2, 1),
        (3, 1),
        (-1, 6),
        (-2, 3),
        (1, 6),
        (2, 3),
    ];
    let mut rejected = BTreeSet::new();
    let mut members_ok = true;
    for (num, den) in lambdas {
        let lambda = rat(num, den);
        match evaluate_parametrization(
            &report.basis,
            &Poly::constant(lambda.clone()),
            &Poly::one(),
            &data,
        ) {
            Ok(rf) => members_ok &= check_interpolates(&rf, &data) && rf.delta() == 2,
            Err(Error::DenominatorVanishesAtNode(_)) => {
                rejected.insert(lambda);
            }
            Err(_) => members_ok = false,
        }
    }
    check(
        &mut c,
        "rejects exactly {-1/6, -2/3}",
        rejected == BTreeSet::from([rat(-1, 6), rat(-2, 3)]),
    );
    check(
        &mut c,
        "accepted members interpolate with delta 2",
        members_ok,
    );
    let forbidden: BTreeSet<_> = report
        .exclusions
        .iter()
        .map(|e| e.forbidden.clone())
        .collect();
    check(
        &mut c,
        "reported exclusions",
        forbidden == BTreeSet::from([rat(-1, 6), rat(-2, 3)]),
    );
    c
}

fn criterion4() -> Checks {
    let mut c = Checks::new();
    let six = RationalFunction::new(p(&[6]), p(&[-3, 0, 1])).unwrap();
    let r1 = admissible_kappa(&example1());
    check(
        &mut c,
        "example 1: minimal kappa = 2",
        r1.minimal_kappa == 2,
    );
    check(
        &mut c,
        "example 1: witness 6/(x^2 - 3)",
        r1.minimal_solutions == vec![six],
    );

    let data2 = example2();
    let r2 = admissible_kappa(&data2);
    let g2 = RationalFunction::polynomial(p(&[10, 0, -10, 0, 1]));
    check(
        &mut c,
        "example 2: minimal kappa = 4",
        r2.minimal_kappa == 4,
    );
    check(
        &mut c,
        "example 2: witness x^4 - 10x^2 + 10",
        r2.minimal_solutions.first() == Some(&g2),
    );
    let printed = RationalFunction::new(p(&[4]), p(&[3, 0, -2, 0, 1])).unwrap();
    check(
        &mut c,
        "example 2: witness 4/(x^4 - 2x^2 + 3) as printed",
        r2.minimal_solutions.get(1) == Some(&printed),
    );
    let actual = RationalFunction::new(p(&[14]), p(&[23, 0, -10, 0, 1])).unwrap();
    check(
        &mut c,
        "example 2: witness 14/(x^4 - 10x^2 + 23) from the recurrence",
        r2.minimal_solutions == vec![g2, actual.clone()] && check_interpolates(&actual, &data2),
    );
    check(
        &mut c,
        "printed witness does not interpolate",
        !check_interpolates(&printed, &data2),
    );

    let data = generic4();
    let tr = interpolation_trace(&data).unwrap();
    let r = [
        p(&[0, 2, -1, -2, 1]),
        p(&[-2, 0, 0, 1]),
        p(&[-4, 4, -1]),
        p(&[-18, 12]),
        q(&[(-1, 4)]),
    ];
    check(
        &mut c,
        "generic: r_0..r_4",
        tr.len() == 4 && (0..5).all(|i| tr.r(i) == &r[i]),
    );
    let s = [p(&[]), p(&[1]), p(&[2, -1]), p(&[9, -2, -1])];
    check(
        &mut c,
        "generic: s_0..s_3",
        (0..4).all(|i| tr.s(i) == &s[i]),
    );
    check(
        &mut c,
        "generic: s_4 = (-8x^2 + 4x + 3)/24 as printed",
        tr.s(4) == &q(&[(3, 24), (4, 24), (-8, 24)]),
    );
    check(
        &mut c,
        "generic: s_4 = (-2x^3 + x^2 + 4x + 3)/24 by the recurrence",
        tr.s(4) == &q(&[(3, 24), (4, 24), (1, 24), (-2, 24)]),
    );
    let report = minimal_delta_solutions(&data).unwrap();
    let family_ok = report.basis.pair1 == WeakPair::new(r[2].clone(), s[2].clone())
        && report.basis.pair2 == WeakPair::new(r[3].clone(), s[3].clone());
    check(
        &mut c,
        "generic: family (r_3 + l r_2)/(s_3 + l s_2)",
        family_ok,
    );
    let forbidden: BTreeSet<_> = report
        .exclusions
        .iter()
        .map(|e| e.forbidden.clone())
        .collect();
    check(
        &mut c,
        "generic: excludes {-10/3, -9/2, -6}",
        forbidden == BTreeSet::from([rat(-10, 3), rat(-9, 2), rat(-6, 1)]),
    );
    for lambda in [rat(-10, 3), rat(-9, 2), rat(-6, 1)] {
        let res =
            evaluate_parametrization(&report.basis, &Poly::constant(lambda), &Poly::one(), &data);
        check(
            &mut c,
            "generic: excluded value rejected",
            matches!(res, Err(Error::DenominatorVanishesAtNode(_))),
        );
    }
    check(
        &mut c,
        "generic: minimal kappa = n - 1",
        admissible_kappa(&data).minimal_kappa == 3,
    );
    c
}

fn criterion5() -> Checks {
    let mut c = Checks::new();
    let data = example1();
    check(
        &mut c,
        "example 1, d = 2: none",
        hermite_rational(&data, 2) == Ok(None),
    );
    check(
        &mut c,
        "example 1, d = 3: x^3 - 2",
        hermite_rational(&data, 3) == Ok(Some(RationalFunction::polynomial(p(&[-2, 0, 0, 1])))),
    );
    let data = example2();
    check(
        &mut c,
        "example 2, d = 2: none",
        hermite_rational(&data, 2) == Ok(None),
    );
    check(
        &mut c,
        "example 2, d = 3: none",
        hermite_rational(&data, 3) == Ok(None),
    );
    c
}

fn criterion6() -> Checks {
    let mut c = Checks::new();
    let param = quartic_curve();
    let b = mu_basis(&param).unwrap();
    check(&mut c, "quartic: mu = 2", b.mu == 2);
    check(
        &mut c,
        "quartic: low line",
        b.low.to_string() == "T0 - xT1 - 2x^2",
    );
    check(
        &mut c,
        "quartic: high line",
        b.high.to_string() == "2xT0 + (-2x^2 + 1)T1 - 4x",
    );
    check(
        &mut c,
        "quartic: certificate",
        cross_product_certificate(&b, &param),
    );
    let tr = extended_euclid(param.r0(), param.r1()).unwrap();
    check(
        &mut c,
        "quartic: r_2 = 2x^2 forces r_1 = -4x^3 + 4x",
        tr.r(2) == &p(&[0, 0, 2]),
    );
    for (n, m) in [(5usize, 2usize), (7, 3), (6, 3), (2, 1)] {
        let param = monomial_curve(n, m);
        let b = mu_basis(&param).unwrap();
        let t1_line = MovingLine {
            t0: Poly::zero(),
            t1: Poly::one(),
            c: -Poly::monomial(int(1), m),
        };
        let t0_line = MovingLine {
            t0: Poly::one(),
            t1: -Poly::monomial(int(1), n - m),
            c: Poly::zero(),
        };
        let shape = BTreeSet::from([b.low.to_string(), b.high.to_string()])
            == BTreeSet::from([t1_line.to_string(), t0_line.to_string()]);
        check(
            &mut c,
            &format!(
                "(x^{n}, x^{m}): mu = {} with basis {{{t1_line}, {t0_line}}}",
                m.min(n - m)
            ),
            b.mu == m.min(n - m) && shape && cross_product_certificate(&b, &param),
        );
    }
    c
}

fn criterion7() -> Checks {
    let mut c = Checks::new();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0007);
    let (mut mu1_ok, mut dim_ok, mut kappa_ok) = (0, 0, 0);
    const INSTANCES: usize = 220;
    for _ in 0..INSTANCES {
        let data = random_data(&mut rng, 7);
        let basis = minimal_basis(&data);
        mu1_ok += usize::from(min_degree_weak_pair(&data) == basis.mu1);
        let dims = (0..=data.n()).all(|delta| {
            let expected =
                (delta + 1).saturating_sub(basis.mu1) + (delta + 1).saturating_sub(basis.mu2);
            weak_pairs_upto(&data, delta, delta).len() == expected
        });
        dim_ok += usize::from(dims);
        let below: BTreeSet<usize> = admissible_kappa(&data)
            .isolated_values()
            .into_iter()
            .filter(|&k| k < data.n())
            .collect();
        kappa_ok += usize::from(admissible_kappa_below_n(&data) == below);
    }
    check(
        &mut c,
        &format!("(a) min weak degree = mu1 on {mu1_ok}/{INSTANCES}"),
        mu1_ok == INSTANCES,
    );
    check(
        &mut c,
        &format!("(b) dimension formula on {dim_ok}/{INSTANCES}"),
        dim_ok == INSTANCES,
    );
    check(
        &mut c,
        &format!("(c) kappa below n on {kappa_ok}/{INSTANCES}"),
        kappa_ok == INSTANCES,
    );
    const PARAMS: usize = 120;
    let mu_ok = (0..PARAMS)
        .filter(|_| {
            let param = random_param(&mut rng, 8);
            mu_basis(&param).unwrap().mu == min_mu_oracle(&param)
        })
        .count();
    check(
        &mut c,
        &format!("(d) mu = oracle on {mu_ok}/{PARAMS}"),
        mu_ok == PARAMS,
    );
    c
}

fn criterion8() -> Checks {
    let mut c = Checks::new();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0008);
    let mut corpus = vec![example1(), example2(), generic4()];
    corpus.extend((0..200).map(|_| random_data(&mut rng, 7)));
    let mut traces = 0;
    for data in &corpus {
        let basis = minimal_basis(data);
        assert_eq!(basis.mu1 + basis.mu2, data.n());
        if let Some(tr) = interpolation_trace(data) {
            assert_trace_invariants(&tr);
            assert_interpolation_rows(&tr, data);
            traces += 1;
        }
    }
    let mut params = vec![quartic_curve(), monomial_curve(5, 2), monomial_curve(7, 3)];
    params.extend((0..100).map(|_| random_param(&mut rng, 8)));
    for param in &params {
        if !param.r1().is_zero() {
            assert_trace_invariants(&extended_euclid(param.r0(), param.r1()).unwrap());
            traces += 1;
        }
    }
    check(&mut c, &format!("identities on {traces} traces"), true);
    c
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("worked example table", criterion1),
        ("symmetric six-node example", criterion2),
        ("delta family and exclusions", criterion3),
        ("kappa results and generic example", criterion4),
        ("rational Hermite splits", criterion5),
        ("mu-bases", criterion6),
        ("oracle equivalence", criterion7),
        ("trace invariants", criterion8),
    ];
    let mut unexpected = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let checks = match catch_unwind(AssertUnwindSafe(run)) {
            Ok(checks) => checks,
            Err(_) => vec![("panicked".to_string(), false)],
        };
        let failed: Vec<&String> = checks
            .iter()
            .filter(|(_, ok)| !ok)
            .map(|(n, _)| n)
            .collect();
        if failed.is_empty() {
            println!(
                "criterion {}: PASS  {name} ({} checks)",
                i + 1,
                checks.len()
            );
            continue;
        }
        println!(
            "criterion {}: FAIL  {name} ({}/{} checks failed)",
            i + 1,
            failed.len(),
            checks.len()
        );
        for f in failed {
            let known = TABLE_ERRATA.contains(&f.as_str());
            println!(
                "    failed: {f}{}",
                if known {
                    "  [printed value is inconsistent]"
                } else {
                    ""
                }
            );
            unexpected += usize::from(!known);
        }
    }
    if unexpected > 0 {
        println!("{unexpected} unexpected failure(s)");
        return ExitCode::FAILURE;
    }
    ExitCode::SUCCESS
}

//! JSON encodings and the human-readable trace table.

use serde_json::{json, Value};

use ratinterp::delta::{DeltaSolutionReport, NodeExclusion};
use ratinterp::kappa::KappaWitness;
use ratinterp::{
    DegreeSet, EeaTrace, KappaReport, MinimalBasis, MovingLine, MuBasis, Poly, Rational,
    RationalFunction, SolutionKind, WeakPair,
};

pub fn rat(r: &Rational) -> Value {
    Value::String(r.to_string())
}

/// Ascending coefficient array of rational strings.
pub fn poly(p: &Poly) -> Value {
    Value::Array(p.coeffs().iter().map(rat).collect())
}

pub fn function(rf: &RationalFunction) -> Value {
    json!({
        "numer": poly(rf.numer()),
        "denom": poly(rf.denom()),
        "text": rf.to_string(),
        "delta": rf.delta(),
        "kappa": rf.kappa(),
    })
}

fn pair(p: &WeakPair) -> Value {
    json!({ "a": poly(&p.a), "b": poly(&p.b) })
}

pub fn basis(b: &MinimalBasis, critical: &[usize]) -> Value {
    json!({
        "mu1": b.mu1,
        "mu2": b.mu2,
        "critical_index": b.critical_index,
        "critical_indices": critical,
        "rows": b.rows.map(|(i, j)| vec![i, j]),
        "pair1": pair(&b.pair1),
        "pair2": pair(&b.pair2),
    })
}

fn exclusion(e: &NodeExclusion) -> Value {
    json!({ "node": rat(&e.node), "forbidden": rat(&e.forbidden) })
}

pub fn delta_report(r: &DeltaSolutionReport, critical: &[usize]) -> Value {
    json!({
        "kind": match r.kind { SolutionKind::Unique => "unique", SolutionKind::Family => "family" },
        "minimal_delta": r.minimal_delta,
        "basis": basis(&r.basis, critical),
        "representative": function(&r.representative),
        "lambda": r.lambda.as_ref().map(rat),
        "free_degree": r.free_degree,
        "exclusions": r.exclusions.iter().map(exclusion).collect::<Vec<_>>(),
    })
}

pub fn degree_set(s: &DegreeSet) -> Value {
    json!({ "isolated": s.isolated, "threshold": s.threshold, "text": s.to_string() })
}

fn witness(w: &KappaWitness) -> Value {
    json!({
        "kappa": w.kappa,
        "k": w.k,
        "raw": { "r": poly(&w.raw.0), "s": poly(&w.raw.1) },
        "solution": function(&w.solution),
    })
}

pub fn kappa_report(r: &KappaReport) -> Value {
    json!({
        "isolated": r.isolated.iter().map(witness).collect::<Vec<_>>(),
        "tail_threshold": r.tail_threshold,
        "minimal_kappa": r.minimal_kappa,
        "minimal_solutions": r.minimal_solutions.iter().map(function).collect::<Vec<_>>(),
    })
}

pub fn trace(t: &EeaTrace) -> Value {
    let rows: Vec<Value> = t
        .rows()
        .iter()
        .enumerate()
        .map(|(i, row)| {
            json!({
                "i": i,
                "deg_r": row.r.deg(),
                "r": poly(&row.r),
                "s": poly(&row.s),
                "t": poly(&row.t),
                "q": (1..=t.len()).contains(&i).then(|| poly(t.q(i))),
            })
        })
        .collect();
    json!({ "n": t.n(), "N": t.len(), "rows": rows })
}

fn line(l: &MovingLine, degree: usize, projective: bool) -> Value {
    let mut v = json!({
        "t0": poly(&l.t0),
        "t1": poly(&l.t1),
        "c": poly(&l.c),
        "degree": degree,
        "text": l.to_string(),
    });
    if projective {
        v["projective"] = Value::String(l.projective(degree));
    }
    v
}

pub fn mu_basis(b: &MuBasis, n: usize, projective: bool) -> Value {
    json!({
        "mu": b.mu,
        "n": n,
        "index": b.index,
        "low": line(&b.low, b.mu, projective),
        "high": line(&b.high, n - b.mu, projective),
    })
}

/// Fixed-width table with columns `i, deg r_i, r_i, s_i, t_i, q_i`.
pub fn trace_table(t: &EeaTrace) -> String {
    let header = ["i", "deg r_i", "r_i", "s_i", "t_i", "q_i"].map(String::from);
    let mut cells: Vec<[String; 6]> = vec![header];
    for (i, row) in t.rows().iter().enumerate() {
        let q = if (1..=t.len()).contains(&i) {
            t.q(i).to_string()
        } else {
            String::new()
        };
        cells.push([
            i.to_string(),
            row.r.degree().to_string(),
            row.r.to_string(),
            row.s.to_string(),
            row.t.to_string(),
            q,
        ]);
    }
    let widths: Vec<usize> = (0..6)
        .map(|c| {
            cells
                .iter()
                .map(|r| r[c].chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for (k, row) in cells.iter().enumerate() {
        let line: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(cell, &w)| format!("{cell:<w$}"))
            .collect();
        out.push_str(line.join(" | ").trim_end());
        out.push('\n');
        if k == 0 {
            let rule: Vec<String> = widths.iter().map(|&w| "-".repeat(w)).collect();
            out.push_str(&rule.join("-+-"));
            out.push('\n');
        }
    }
    out
}

//! Text and `key=value` renderings of solver output. Vertices are printed
//! 1-indexed and rationals as `p/q` (plain integers when `q = 1`).

use std::fmt::Write;
use std::str::FromStr;

use kpack_core::bounds::{BoundKind, BoundsReport};
use kpack_core::lp::rational_string;
use kpack_core::matrix::{Theorem2Outcome, Theorem2Report};
use kpack_core::{LpResult, Rational, SolveResult, TuVerdict, Witness};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Text,
    Kv,
}

impl FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<OutputFormat, String> {
        match s {
            "text" => Ok(OutputFormat::Text),
            "kv" => Ok(OutputFormat::Kv),
            other => Err(format!("unknown output format `{}` (expected text or kv)", other)),
        }
    }
}

fn witness_entries(w: &Witness) -> Vec<(usize, String)> {
    match w {
        Witness::Function(f) => f.nonzero().map(|(v, x)| (v + 1, x.to_string())).collect(),
        Witness::LimitedSet(s) => s.members.iter().map(|&v| (v + 1, "1".to_string())).collect(),
        Witness::IndependentSet(s) => s.iter().map(|&v| (v + 1, "1".to_string())).collect(),
    }
}

fn rational_entries(xs: &[Rational]) -> Vec<(usize, String)> {
    xs.iter()
        .enumerate()
        .filter(|(_, x)| *x != &Rational::from_integer(0.into()))
        .map(|(v, x)| (v + 1, rational_string(x)))
        .collect()
}

fn block(out: &mut String, title: &str, entries: &[(usize, String)]) {
    let _ = writeln!(out, "{}", title);
    for (v, x) in entries {
        let _ = writeln!(out, "  {}: {}", v, x);
    }
}

fn joined(entries: &[(usize, String)]) -> String {
    entries.iter().map(|(v, x)| format!("{}:{}", v, x)).collect::<Vec<_>>().join(",")
}

pub fn render_solve(r: &SolveResult, k: u64, format: OutputFormat) -> String {
    let entries = witness_entries(&r.witness);
    let mut out = String::new();
    match format {
        OutputFormat::Text => {
            let _ = writeln!(out, "optimum {}", r.optimum);
            let _ = writeln!(out, "k {}", k);
            let _ = writeln!(out, "method {}", r.method.name());
            let _ = writeln!(out, "nodes {}", r.nodes_explored);
            block(&mut out, "witness", &entries);
        }
        OutputFormat::Kv => {
            let _ = writeln!(out, "optimum={}", r.optimum);
            let _ = writeln!(out, "k={}", k);
            let _ = writeln!(out, "method={}", r.method.name());
            let _ = writeln!(out, "nodes={}", r.nodes_explored);
            let _ = writeln!(out, "witness={}", joined(&entries));
        }
    }
    out
}

pub fn render_relaxation(lp: &LpResult, certified: bool, format: OutputFormat) -> String {
    let primal = rational_entries(&lp.primal);
    let dual = rational_entries(&lp.dual);
    let verdict = if certified { "ok" } else { "FAILED" };
    let mut out = String::new();
    match format {
        OutputFormat::Text => {
            let _ = writeln!(out, "objective {}", lp.objective_string());
            let _ = writeln!(out, "q {}", lp.q);
            let _ = writeln!(out, "certificate {}", verdict);
            block(&mut out, "primal", &primal);
            block(&mut out, "dual", &dual);
        }
        OutputFormat::Kv => {
            let _ = writeln!(out, "objective={}", lp.objective_string());
            let _ = writeln!(out, "q={}", lp.q);
            let _ = writeln!(out, "certificate={}", verdict);
            let _ = writeln!(out, "primal={}", joined(&primal));
            let _ = writeln!(out, "dual={}", joined(&dual));
        }
    }
    out
}

fn names(kinds: &[BoundKind]) -> String {
    kinds.iter().map(|k| k.name()).collect::<Vec<_>>().join(",")
}

pub fn render_bounds(r: &BoundsReport, format: OutputFormat) -> String {
    let opt = |x: Option<u64>| x.map_or_else(|| "-".to_string(), |v| v.to_string());
    let mut out = String::new();
    match format {
        OutputFormat::Text => {
            let rows = [
                (BoundKind::Diameter, opt(r.lower_diam), &r.tight_lower),
                (BoundKind::KTimesL1, r.lower_k_l1.to_string(), &r.tight_lower),
                (BoundKind::Degree, r.upper_degree.to_string(), &r.tight_upper),
                (BoundKind::Lp, r.upper_lp.to_string(), &r.tight_upper),
            ];
            let _ = writeln!(out, "k {}", r.k);
            let _ = writeln!(out, "{:<14}{:>8}  tight", "bound", "value");
            for (kind, value, tight) in rows {
                let flag = match r.exact {
                    None => "-",
                    Some(_) if tight.contains(&kind) => "yes",
                    Some(_) => "no",
                };
                let _ = writeln!(out, "{:<14}{:>8}  {}", kind.name(), value, flag);
            }
            let _ = writeln!(out, "{:<14}{:>8}", "exact", opt(r.exact));
        }
        OutputFormat::Kv => {
            let _ = writeln!(out, "k={}", r.k);
            let _ = writeln!(out, "lower_diam={}", opt(r.lower_diam));
            let _ = writeln!(out, "lower_k_l1={}", r.lower_k_l1);
            let _ = writeln!(out, "upper_degree={}", r.upper_degree);
            let _ = writeln!(out, "upper_lp={}", r.upper_lp);
            let _ = writeln!(out, "exact={}", opt(r.exact));
            let _ = writeln!(out, "tight_lower={}", names(&r.tight_lower));
            let _ = writeln!(out, "tight_upper={}", names(&r.tight_upper));
        }
    }
    out
}

fn outcome_name(o: Theorem2Outcome) -> &'static str {
    match o {
        Theorem2Outcome::Confirmed => "confirmed",
        Theorem2Outcome::Violated => "VIOLATED",
        Theorem2Outcome::EqualityWithoutTu => "equality without TU",
        Theorem2Outcome::NoClaim => "condition not met, no claim",
    }
}

pub fn render_tu(det: &num_bigint::BigInt, verdict: &TuVerdict, thm: &Theorem2Report, format: OutputFormat) -> String {
    let mut out = String::new();
    match format {
        OutputFormat::Text => {
            let _ = writeln!(out, "det {}", det);
            let _ = writeln!(out, "{}", verdict);
            let _ = writeln!(out, "submatrices {}", verdict.submatrices_checked);
            let _ = writeln!(out, "k {}", thm.k);
            let _ = writeln!(out, "L1 {}", thm.l1);
            let _ = writeln!(out, "Lk {}", thm.lk);
            let _ = writeln!(out, "zrlx {}", rational_string(&thm.z_rlx));
            let _ = writeln!(out, "equality {}", outcome_name(thm.outcome));
        }
        OutputFormat::Kv => {
            let _ = writeln!(out, "det={}", det);
            let _ = writeln!(out, "tu={}", verdict.is_tu);
            let _ = writeln!(out, "verdict={}", verdict);
            let _ = writeln!(out, "submatrices={}", verdict.submatrices_checked);
            let _ = writeln!(out, "k={}", thm.k);
            let _ = writeln!(out, "l1={}", thm.l1);
            let _ = writeln!(out, "lk={}", thm.lk);
            let _ = writeln!(out, "zrlx={}", rational_string(&thm.z_rlx));
            let _ = writeln!(out, "equality={}", outcome_name(thm.outcome));
        }
    }
    out
}

//! Replays every reproducible claim about `{k}`-packing functions against the
//! exact solvers, with brute force as the independent oracle wherever one
//! exists. Each criterion yields a list of checks with expected and actual
//! values; a criterion passes when all of its checks do.

use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use kpack_core::bounds::{cycle_witness, family_formula, lower_bound_diameter, upper_bound_degree};
use kpack_core::lp::rational_string;
use kpack_core::matrix::{DEFAULT_TU_CAP, Theorem2Outcome, check_theorem2};
use kpack_core::{
    Family, Graph, IntMatrix, LpResult, Rational, SolverConfig, branch_and_bound_lk, brute_force_limited_lk,
    brute_force_lk, determinant, is_totally_unimodular, l1_via_square, make_family, solve_relaxation,
    verify_certificate, verify_theorem3,
};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::formats::{ParseError, read_graph, Format};

pub const DEFAULT_SEED: u64 = 0x6b70_6163_6b21;

/// Wall-clock budget for the exact solve on the 30-vertex fixture. Past it,
/// optimality is pinned by the LP bound instead.
pub const SCALING_BUDGET: Duration = Duration::from_secs(60);

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("fixture {path}: {source}")]
    Fixture {
        path: String,
        #[source]
        source: ParseError,
    },
    #[error("fixture {path}: {msg}")]
    FixtureShape { path: String, msg: String },
    #[error(transparent)]
    Solver(#[from] kpack_core::Error),
}

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub fixtures: PathBuf,
    pub seed: u64,
    pub config: SolverConfig,
    /// Swaps the cycle formula for a wrong one, to prove the harness can fail.
    pub mutate: bool,
}

impl VerifyOptions {
    pub fn new(fixtures: impl Into<PathBuf>) -> VerifyOptions {
        VerifyOptions {
            fixtures: fixtures.into(),
            seed: DEFAULT_SEED,
            config: SolverConfig::default(),
            mutate: false,
        }
    }
}

#[derive(Debug, Clone)]
pub struct Check {
    pub claim: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

impl Check {
    fn eq<T: PartialEq + ToString>(claim: impl Into<String>, expected: T, actual: T) -> Check {
        Check {
            claim: claim.into(),
            pass: expected == actual,
            expected: expected.to_string(),
            actual: actual.to_string(),
        }
    }

    /// Bulk check over a corpus: `failures` holds descriptions of the
    /// counterexamples, if any.
    fn all(claim: impl Into<String>, total: usize, failures: Vec<String>) -> Check {
        let actual = match failures.first() {
            None => format!("{}/{}", total, total),
            Some(first) => format!("{}/{} (first failure: {})", total - failures.len(), total, first),
        };
        Check {
            claim: claim.into(),
            expected: format!("{}/{}", total, total),
            actual,
            pass: failures.is_empty(),
        }
    }
}

#[derive(Debug, Clone)]
pub struct CriterionResult {
    pub id: u32,
    pub title: &'static str,
    pub checks: Vec<Check>,
    pub elapsed: Duration,
}

impl CriterionResult {
    pub fn pass(&self) -> bool {
        !self.checks.is_empty() && self.checks.iter().all(|c| c.pass)
    }
}

pub struct Fixtures {
    pub claw: Graph,
    pub fig2: Graph,
}

pub fn load_fixtures(dir: &Path) -> Result<Fixtures, VerifyError> {
    let load = |name: &str, format: Format, n: usize| -> Result<Graph, VerifyError> {
        let path = dir.join(name);
        let g = read_graph(&path, format).map_err(|source| VerifyError::Fixture {
            path: path.display().to_string(),
            source,
        })?;
        if g.n() != n {
            return Err(VerifyError::FixtureShape {
                path: path.display().to_string(),
                msg: format!("expected {} vertices, found {}", n, g.n()),
            });
        }
        Ok(g)
    };
    Ok(Fixtures {
        claw: load("claw.edges", Format::Edges, 4)?,
        fig2: load("fig2.adj", Format::Adj, 30)?,
    })
}

/// The fractional optimum listed for the 30-vertex fixture (1-indexed).
pub fn fixture30_listed_primal() -> Vec<Rational> {
    let listed: [(usize, i64, i64); 13] = [
        (3, 1, 7),
        (4, 1, 7),
        (5, 2, 21),
        (6, 2, 21),
        (8, 4, 21),
        (13, 4, 21),
        (20, 4, 21),
        (24, 4, 21),
        (10, 5, 21),
        (16, 5, 21),
        (18, 5, 21),
        (19, 1, 21),
        (11, 1, 3),
    ];
    let mut x = vec![ratio(0, 1); 30];
    for (v, p, q) in listed {
        x[v - 1] = ratio(p, q);
    }
    x
}

fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

fn int(x: u64) -> Rational {
    Rational::from_integer(BigInt::from(x))
}

fn describe(g: &Graph) -> String {
    let edges: Vec<String> = g.edges().map(|(u, v)| format!("{}-{}", u + 1, v + 1)).collect();
    format!("n={} [{}]", g.n(), edges.join(" "))
}

fn gnp(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("generated pairs are valid")
}

fn connected_gnp(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    loop {
        let g = gnp(rng, n, p);
        if g.is_connected() {
            return g;
        }
    }
}

fn disjoint_union(parts: &[Graph]) -> Graph {
    let mut edges = Vec::new();
    let mut offset = 0;
    for g in parts {
        edges.extend(g.edges().map(|(u, v)| (u + offset, v + offset)));
        offset += g.n();
    }
    Graph::from_edges(offset, edges).expect("union of valid graphs")
}

const PROBABILITIES: [f64; 3] = [0.2, 0.5, 0.8];

/// Seeded random instances shared by the criteria.
pub struct Corpus {
    /// 200 connected graphs, n <= 10.
    pub reduction: Vec<Graph>,
    /// 100 connected graphs, n <= 10.
    pub sandwich: Vec<Graph>,
    /// 50 unions of 2-3 connected components with at most 6 vertices each.
    pub unions: Vec<Vec<Graph>>,
    /// Graphs with n <= 5 for the strong product identity.
    pub small: Vec<Graph>,
}

impl Corpus {
    pub fn generate(seed: u64) -> Corpus {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let reduction = (0..200)
            .map(|i| {
                let n = rng.gen_range(2..=10);
                connected_gnp(&mut rng, n, PROBABILITIES[i % 3])
            })
            .collect();
        let sandwich = (0..100)
            .map(|i| {
                let n = rng.gen_range(2..=10);
                connected_gnp(&mut rng, n, PROBABILITIES[i % 3])
            })
            .collect();
        let unions = (0..50)
            .map(|i| {
                let parts = rng.gen_range(2..=3);
                (0..parts)
                    .map(|_| {
                        let n = rng.gen_range(1..=6);
                        connected_gnp(&mut rng, n, PROBABILITIES[i % 3])
                    })
                    .collect()
            })
            .collect();
        let small = (0..40)
            .map(|i| {
                let n = rng.gen_range(1..=5);
                gnp(&mut rng, n, PROBABILITIES[i % 3])
            })
            .collect();
        Corpus {
            reduction,
            sandwich,
            unions,
            small,
        }
    }
}

/// Criterion 4's instances: paths and cycles with 3 <= n <= 12 and cliques
/// with n <= 8.
fn family_instances() -> Vec<(Family, usize)> {
    let mut out = Vec::new();
    for n in 3..=12 {
        out.push((Family::Path, n));
        out.push((Family::Cycle, n));
    }
    for n in 1..=8 {
        out.push((Family::Clique, n));
    }
    out
}

struct Ctx<'a> {
    fixtures: &'a Fixtures,
    corpus: &'a Corpus,
    opts: &'a VerifyOptions,
}

type Outcome = Result<Vec<Check>, VerifyError>;

fn claw_example(ctx: &Ctx) -> Outcome {
    let g = &ctx.fixtures.claw;
    let cfg = &ctx.opts.config;
    let a = IntMatrix::from(&g.neighborhood_matrix());
    let det = determinant(&a)?;
    let tu = is_totally_unimodular(&a, DEFAULT_TU_CAP)?;
    let l1 = brute_force_lk(g, 1, cfg)?.optimum;
    let l2 = brute_force_lk(g, 2, cfg)?.optimum;
    let z = solve_relaxation(g, 1)?.objective;
    let mut checks = vec![
        Check::eq("det(A_G)", BigInt::from(-2), det),
        Check::eq("A_G totally unimodular", false, tu.is_tu),
        Check::eq("L{1}", 1, l1),
        Check::eq("L{2}", 2, l2),
        Check::eq("Z*_rlx", "1".to_string(), rational_string(&z)),
    ];
    for k in 1..=3u64 {
        let lk = brute_force_lk(g, k, cfg)?.optimum;
        let equal = lk == k * l1 && int(lk) == &z * int(k);
        checks.push(Check::eq(format!("k={} k*L{{1}} = L{{k}} = k*Z*_rlx", k), true, equal));
    }
    Ok(checks)
}

fn fixture30_gap(ctx: &Ctx) -> Outcome {
    let g = &ctx.fixtures.fig2;
    let cfg = &ctx.opts.config;
    let bnb = branch_and_bound_lk(g, 1, cfg)?;
    let via_square = l1_via_square(g, cfg)?;
    let lp = solve_relaxation(g, 1)?;
    let listed = LpResult {
        objective: lp.objective.clone(),
        primal: fixture30_listed_primal(),
        dual: lp.dual.clone(),
        q: kpack_core::compute_q(&fixture30_listed_primal()),
    };
    let listed_sum: Rational = listed.primal.iter().sum();
    let floor_z = lp.objective.floor();
    Ok(vec![
        Check::eq("L{1} by branch and bound", 1, bnb.optimum),
        Check::eq("witness feasible", true, bnb.function().is_some_and(|f| f.is_feasible(g, 1))),
        Check::eq("L{1} as alpha(G^2)", 1, via_square.optimum),
        Check::eq("Z*_rlx", "7/3".to_string(), rational_string(&lp.objective)),
        Check::eq("floor(Z*_rlx) > L{1}", true, floor_z > int(bnb.optimum)),
        Check::eq("floor(Z*_rlx)", "2".to_string(), rational_string(&floor_z)),
        Check::eq("listed vector sums to", "7/3".to_string(), rational_string(&listed_sum)),
        Check::eq("listed vector q", "21".to_string(), listed.q.to_string()),
        // primal feasibility plus a dual of equal value: the listed vector is optimal
        Check::eq("listed vector certified with solver dual", true, verify_certificate(g, 1, &listed)?),
    ])
}

fn fixture30_scaling(ctx: &Ctx) -> Outcome {
    let g = &ctx.fixtures.fig2;
    let started = Instant::now();
    let report = verify_theorem3(g, 1, &ctx.opts.config)?;
    let elapsed = started.elapsed();
    let mut checks = vec![
        Check::eq("scaled primal integral", true, report.scaled_witness.is_some()),
        Check::eq("scaled primal feasible for k=q", true, report.witness_feasible),
        Check::eq("scaled total = q*Z*_rlx", true, report.witness_attains_lp_bound()),
    ];
    let expected = rational_string(&report.expected_total);
    if elapsed <= SCALING_BUDGET && report.exact.is_some() {
        checks.push(Check {
            claim: format!("L{{q}} by branch and bound (q={})", report.q),
            expected,
            actual: report.exact.map(|e| e.to_string()).unwrap_or_default(),
            pass: report.holds(),
        });
    } else {
        // floor(q * 7/3) = q * 7/3 is attained by the witness: optimal without search
        let bound = report.expected_total.floor();
        checks.push(Check::eq(
            format!("LP bound matches scaled total (q={}, over budget)", report.q),
            expected,
            rational_string(&bound),
        ));
    }

    // the listed optimum is a different vertex, with q = 21
    let scaled: Vec<Rational> = fixture30_listed_primal().iter().map(|x| x * int(21)).collect();
    let integral = scaled.iter().all(|x| x.is_integer());
    let f = kpack_core::PackingFunction::new(scaled.iter().map(|x| u64::try_from(x.to_integer()).unwrap_or(0)).collect());
    checks.push(Check::eq("listed vector times 21 integral and feasible for k=21", true, integral && f.is_feasible(g, 21)));
    checks.push(Check::eq("listed vector times 21 total", 49, f.total()));
    if elapsed <= SCALING_BUDGET {
        let exact = branch_and_bound_lk(g, 21, &ctx.opts.config)?.optimum;
        checks.push(Check::eq("L{21} by branch and bound", 49, exact));
    }
    Ok(checks)
}

fn family_formulas(ctx: &Ctx) -> Outcome {
    let cfg = &ctx.opts.config;
    let mut checks = Vec::new();
    for family in [Family::Path, Family::Cycle, Family::Clique] {
        let mut failures = Vec::new();
        let mut total = 0;
        for (fam, n) in family_instances().into_iter().filter(|(f, _)| *f == family) {
            let g = make_family(fam, n)?;
            for k in 1..=5u64 {
                total += 1;
                let expected = if ctx.opts.mutate && fam == Family::Cycle {
                    (n as u64 * k).div_ceil(3)
                } else {
                    family_formula(fam, n, k)?
                };
                let brute = brute_force_lk(&g, k, cfg)?.optimum;
                let bnb = branch_and_bound_lk(&g, k, cfg)?.optimum;
                if brute != expected || bnb != expected {
                    failures.push(format!("{} n={} k={}: formula {} brute {} bnb {}", fam, n, k, expected, brute, bnb));
                }
            }
        }
        checks.push(Check::all(format!("{} formula = brute = bnb", family), total, failures));
    }

    let mut classes = [[false; 3]; 3];
    let mut failures = Vec::new();
    let mut total = 0;
    for n in 3..=12 {
        let g = make_family(Family::Cycle, n)?;
        for k in 1..=5u64 {
            total += 1;
            classes[n % 3][(k % 3) as usize] = true;
            let f = cycle_witness(n, k)?;
            if !f.is_feasible(&g, k) || f.total() != n as u64 * k / 3 {
                failures.push(format!("C{} k={}", n, k));
            }
        }
    }
    checks.push(Check::all("cycle witness feasible with total floor(nk/3)", total, failures));
    let covered = classes.iter().flatten().filter(|&&c| c).count();
    checks.push(Check::eq("(n mod 3, k mod 3) classes covered", 9, covered));
    Ok(checks)
}

fn square_reduction(ctx: &Ctx) -> Outcome {
    let cfg = &ctx.opts.config;
    let mut failures = Vec::new();
    for g in &ctx.corpus.reduction {
        let brute = brute_force_lk(g, 1, cfg)?.optimum;
        let alpha = l1_via_square(g, cfg)?.optimum;
        if brute != alpha {
            failures.push(format!("{}: L{{1}} {} alpha(G^2) {}", describe(g), brute, alpha));
        }
    }
    Ok(vec![Check::all("L{1} = alpha(G^2)", ctx.corpus.reduction.len(), failures)])
}

fn sandwich(ctx: &Ctx) -> Outcome {
    let cfg = &ctx.opts.config;
    let mut failures = Vec::new();
    let mut total = 0;
    for g in &ctx.corpus.sandwich {
        let l1 = brute_force_lk(g, 1, cfg)?.optimum;
        let z = solve_relaxation(g, 1)?.objective;
        let limited1 = brute_force_limited_lk(g, 1, cfg)?.optimum;
        for k in 1..=3u64 {
            total += 1;
            let lk = brute_force_lk(g, k, cfg)?.optimum;
            let limited = brute_force_limited_lk(g, k, cfg)?.optimum;
            let upper = (&z * int(k)).floor();
            let ok = k * l1 <= lk && int(lk) <= upper && lk >= limited && lk >= k * limited1;
            if !ok {
                failures.push(format!(
                    "{} k={}: kL1={} Lk={} floor(kZ)={} L_k={} kL_1={}",
                    describe(g),
                    k,
                    k * l1,
                    lk,
                    upper,
                    limited,
                    k * limited1
                ));
            }
        }
    }
    Ok(vec![Check::all("k*L{1} <= L{k} <= floor(k*Z*), L{k} >= L_k, L{k} >= k*L_1", total, failures)])
}

fn strict_gap(ctx: &Ctx) -> Outcome {
    let cfg = &ctx.opts.config;
    let c5 = make_family(Family::Cycle, 5)?;
    let l1 = brute_force_lk(&c5, 1, cfg)?.optimum;
    let l2 = brute_force_lk(&c5, 2, cfg)?.optimum;
    Ok(vec![
        Check::eq("2*L{1}(C5)", 2, 2 * l1),
        Check::eq("L{2}(C5)", 3, l2),
        Check::eq("2*L{1} < L{2}", true, 2 * l1 < l2),
    ])
}

fn tu_contrapositive(ctx: &Ctx) -> Outcome {
    let cfg = &ctx.opts.config;
    let mut tested: Vec<Graph> = vec![ctx.fixtures.claw.clone(), ctx.fixtures.fig2.clone()];
    tested.extend(ctx.corpus.reduction.iter().cloned());
    tested.extend(ctx.corpus.sandwich.iter().cloned());
    for (fam, n) in family_instances() {
        tested.push(make_family(fam, n)?);
    }

    let mut failures = Vec::new();
    let mut gaps = 0;
    for g in &tested {
        let l1 = l1_via_square(g, cfg)?.optimum;
        let z = solve_relaxation(g, 1)?.objective;
        if int(l1) != z {
            gaps += 1;
            // a violation turns up among small submatrices, so the size cap
            // is lifted to the full dimension here
            let verdict = is_totally_unimodular(&IntMatrix::from(&g.neighborhood_matrix()), g.n())?;
            if verdict.is_tu {
                failures.push(format!("{}: L1={} Z*={} but TU", describe(g), l1, rational_string(&z)));
            }
        }
    }
    let mut checks = vec![Check::all("L{1} != Z*_rlx implies A_G not TU", gaps, failures)];

    let mut failures = Vec::new();
    for n in 1..=8 {
        let p = make_family(Family::Path, n)?;
        for k in 1..=3u64 {
            let r = check_theorem2(&p, k, DEFAULT_TU_CAP, cfg)?;
            if r.outcome != Theorem2Outcome::Confirmed {
                failures.push(format!("P{} k={}: {:?}", n, k, r.outcome));
            }
        }
    }
    checks.push(Check::all("P_n (n<=8): TU and L{k} = k*L{1} = k*Z*", 24, failures));
    Ok(checks)
}

fn additivity(ctx: &Ctx) -> Outcome {
    let cfg = &ctx.opts.config;
    let mut failures = Vec::new();
    let mut total = 0;
    for parts in &ctx.corpus.unions {
        let union = disjoint_union(parts);
        for k in 1..=2u64 {
            total += 1;
            // brute force on the whole union does not decompose by components
            let whole = brute_force_lk(&union, k, cfg)?.optimum;
            let mut sum = 0;
            for p in parts {
                sum += brute_force_lk(p, k, cfg)?.optimum;
            }
            if whole != sum {
                failures.push(format!("{} k={}: union {} sum {}", describe(&union), k, whole, sum));
            }
        }
    }
    Ok(vec![Check::all("L{k}(union) = sum over components", total, failures)])
}

fn bounds_sanity(ctx: &Ctx) -> Outcome {
    let cfg = &ctx.opts.config;
    let mut instances: Vec<(Graph, Vec<u64>)> = Vec::new();
    for (fam, n) in family_instances() {
        instances.push((make_family(fam, n)?, (1..=5).collect()));
    }
    for g in ctx.corpus.reduction.iter() {
        instances.push((g.clone(), vec![1]));
    }
    for g in ctx.corpus.sandwich.iter() {
        instances.push((g.clone(), vec![1, 2, 3]));
    }

    let mut failures = Vec::new();
    let mut limited_failures = Vec::new();
    let mut total = 0;
    let mut limited_total = 0;
    for (g, ks) in &instances {
        let diam = g.diameter()? as u64;
        for &k in ks {
            total += 1;
            let exact = brute_force_lk(g, k, cfg)?.optimum;
            let lower = lower_bound_diameter(g, k)?;
            let upper = upper_bound_degree(g, k);
            if !(lower <= exact && exact <= upper) {
                failures.push(format!("{} k={}: {} <= {} <= {}", describe(g), k, lower, exact, upper));
            }
            if k <= 2 {
                limited_total += 1;
                let limited = brute_force_limited_lk(g, k, cfg)?.optimum;
                let bound = (k * diam + k).div_ceil(3);
                if limited < bound {
                    limited_failures.push(format!("{} k={}: L_k {} < {}", describe(g), k, limited, bound));
                }
            }
        }
    }
    Ok(vec![
        Check::all("ceil((1+diam)/3)*k <= L{k} <= floor(nk/(1+delta))", total, failures),
        Check::all("L_k >= ceil((k*diam+k)/3), k <= 2", limited_total, limited_failures),
    ])
}

fn strong_product(ctx: &Ctx) -> Outcome {
    let cfg = &ctx.opts.config;
    let mut failures = Vec::new();
    let mut total = 0;
    for g in &ctx.corpus.small {
        for k in 1..=2u64 {
            total += 1;
            let product = g.strong_product_with_clique(k as usize)?;
            let lhs = brute_force_lk(g, k, cfg)?.optimum;
            let rhs = brute_force_limited_lk(&product, k, cfg)?.optimum;
            if lhs != rhs {
                failures.push(format!("{} k={}: L{{k}} {} L_k(GxK_k) {}", describe(g), k, lhs, rhs));
            }
        }
    }
    Ok(vec![Check::all("L{k}(G) = L_k(G x K_k)", total, failures)])
}

fn dual_certificates(ctx: &Ctx) -> Outcome {
    let mut graphs: Vec<Graph> = vec![ctx.fixtures.claw.clone(), ctx.fixtures.fig2.clone()];
    for (fam, n) in family_instances() {
        graphs.push(make_family(fam, n)?);
    }
    graphs.extend(ctx.corpus.reduction.iter().cloned());
    graphs.extend(ctx.corpus.sandwich.iter().cloned());
    graphs.extend(ctx.corpus.unions.iter().map(|p| disjoint_union(p)));
    graphs.extend(ctx.corpus.small.iter().cloned());

    let mut failures = Vec::new();
    let mut total = 0;
    for g in &graphs {
        for k in 1..=3u64 {
            total += 1;
            let lp = solve_relaxation(g, k)?;
            let primal: Rational = lp.primal.iter().sum();
            let dual: Rational = lp.dual.iter().sum();
            if !verify_certificate(g, k, &lp)? || primal != dual * int(k) {
                failures.push(format!("{} k={}", describe(g), k));
            }
        }
    }
    Ok(vec![Check::all("certificate verified, sum(x) = k*sum(y)", total, failures)])
}

type CriterionFn = fn(&Ctx) -> Outcome;

const CRITERIA: [(u32, &str, CriterionFn); 12] = [
    (1, "claw: det -2, not TU, k*L{1} = L{k} = k*Z*", claw_example),
    (2, "30-vertex fixture: L{1} = 1 < floor(7/3)", fixture30_gap),
    (3, "30-vertex fixture: L{q} = q*Z*_rlx", fixture30_scaling),
    (4, "path, cycle and clique formulas; cycle witness", family_formulas),
    (5, "L{1} = alpha(G^2) on 200 random graphs", square_reduction),
    (6, "LP sandwich and limited packing relations", sandwich),
    (7, "C5: 2*L{1} < L{2}", strict_gap),
    (8, "total unimodularity contrapositive; paths", tu_contrapositive),
    (9, "additivity over connected components", additivity),
    (10, "diameter and degree bounds", bounds_sanity),
    (11, "strong product identity", strong_product),
    (12, "dual certificates and strong duality", dual_certificates),
];

pub fn criterion_ids() -> impl Iterator<Item = u32> {
    CRITERIA.iter().map(|c| c.0)
}

/// Runs the selected criteria (all when `only` is empty) in order.
pub fn run(opts: &VerifyOptions, only: &[u32]) -> Result<Vec<CriterionResult>, VerifyError> {
    let fixtures = load_fixtures(&opts.fixtures)?;
    let corpus = Corpus::generate(opts.seed);
    let ctx = Ctx {
        fixtures: &fixtures,
        corpus: &corpus,
        opts,
    };
    let mut results = Vec::new();
    for (id, title, f) in CRITERIA {
        if !only.is_empty() && !only.contains(&id) {
            continue;
        }
        let started = Instant::now();
        let checks = f(&ctx)?;
        results.push(CriterionResult {
            id,
            title,
            checks,
            elapsed: started.elapsed(),
        });
    }
    Ok(results)
}

pub fn render(results: &[CriterionResult]) -> String {
    let mut out = String::new();
    for r in results {
        for c in &r.checks {
            out.push_str(&format!(
                "{} {:>2} {}: expected {} actual {}\n",
                if c.pass { "PASS" } else { "FAIL" },
                r.id,
                c.claim,
                c.expected,
                c.actual
            ));
        }
        out.push_str(&format!(
            "{} criterion {} ({})\n",
            if r.pass() { "PASS" } else { "FAIL" },
            r.id,
            r.title
        ));
    }
    let passed = results.iter().filter(|r| r.pass()).count();
    out.push_str(&format!("{}/{} criteria passed\n", passed, results.len()));
    out
}

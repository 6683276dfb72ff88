use kpack_core::bounds::{bounds_report, lower_bound_diameter, upper_bound_degree};
use kpack_core::matrix::{check_theorem2, Theorem2Outcome, DEFAULT_TU_CAP};
use kpack_core::*;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

fn cfg() -> SolverConfig {
    SolverConfig::default()
}

/// Random simple graph on `lo..=hi` vertices, encoded as (n, edge mask).
fn graph(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    (lo..=hi).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |mask| {
            let mut edges = Vec::new();
            let mut i = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if mask[i] {
                        edges.push((u, v));
                    }
                    i += 1;
                }
            }
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

fn connected(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    // a random tree spine plus random extra edges
    (lo..=hi).prop_flat_map(|n| {
        let parents = proptest::collection::vec(any::<proptest::sample::Index>(), n - 1);
        (parents, graph(n, n)).prop_map(move |(parents, extra)| {
            let mut edges: Vec<_> = extra.edges().collect();
            for (i, p) in parents.iter().enumerate() {
                edges.push((p.index(i + 1), i + 1));
            }
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

fn int(x: u64) -> Rational {
    Rational::from_integer(BigInt::from(x))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn graph_structure_invariants(g in graph(1, 9), k in 1usize..4) {
        let a = g.neighborhood_matrix();
        prop_assert!(a.is_symmetric());
        prop_assert!((0..g.n()).all(|i| a.get(i, i) == 1));

        let comps = g.connected_components();
        prop_assert_eq!(comps.iter().map(|c| c.graph.n()).sum::<usize>(), g.n());
        prop_assert_eq!(comps.iter().map(|c| c.graph.edge_count()).sum::<usize>(), g.edge_count());
        for c in &comps {
            prop_assert!(c.graph.is_connected());
            for (u, v) in c.graph.edges() {
                prop_assert!(g.has_edge(c.labels[u], c.labels[v]));
            }
        }

        let co = g.complement();
        prop_assert_eq!(co.edge_count() + g.edge_count(), g.n() * (g.n() - 1) / 2);
        prop_assert_eq!(co.complement(), g.clone());

        let sq = g.square();
        prop_assert!(g.edges().all(|(u, v)| sq.has_edge(u, v)));
        for u in 0..g.n() {
            let d = g.bfs_distances(u).unwrap();
            for (v, dv) in d.iter().enumerate() {
                let near = u != v && matches!(dv, Some(1) | Some(2));
                prop_assert_eq!(sq.has_edge(u, v), near);
            }
        }

        let p = g.strong_product_with_clique(k).unwrap();
        prop_assert_eq!(p.n(), g.n() * k);
        prop_assert_eq!(p.edge_count(), k * k * g.edge_count() + g.n() * k * (k - 1) / 2);
    }

    #[test]
    fn branch_and_bound_matches_brute_force(g in graph(1, 10), k in 1u64..=3) {
        let bnb = branch_and_bound_lk(&g, k, &cfg()).unwrap();
        let brute = brute_force_lk(&g, k, &cfg()).unwrap();
        prop_assert_eq!(bnb.optimum, brute.optimum);
        for r in [&bnb, &brute] {
            let f = r.function().unwrap();
            prop_assert!(f.is_feasible(&g, k));
            prop_assert_eq!(f.total(), r.optimum);
        }
    }

    #[test]
    fn l1_is_independence_number_of_square(g in graph(1, 12)) {
        let reduced = l1_via_square(&g, &cfg()).unwrap();
        prop_assert_eq!(reduced.optimum, brute_force_lk(&g, 1, &cfg()).unwrap().optimum);
        prop_assert!(reduced.function().unwrap().is_feasible(&g, 1));
        prop_assert_eq!(rho2(&g, &cfg()).unwrap(), reduced.optimum);
    }

    #[test]
    fn sandwich_and_limited_packing_relations(g in graph(1, 9), k in 1u64..=3) {
        let lk = brute_force_lk(&g, k, &cfg()).unwrap().optimum;
        let l1 = brute_force_lk(&g, 1, &cfg()).unwrap().optimum;
        let z = solve_relaxation(&g, 1).unwrap().objective;
        prop_assert!(k * l1 <= lk);
        prop_assert!(int(lk) <= (z * int(k)).floor());

        let limited_k = brute_force_limited_lk(&g, k, &cfg()).unwrap();
        let limited_1 = brute_force_limited_lk(&g, 1, &cfg()).unwrap().optimum;
        prop_assert!(lk >= limited_k.optimum);
        prop_assert!(lk >= k * limited_1);
        let Witness::LimitedSet(set) = &limited_k.witness else { unreachable!() };
        prop_assert!(set.is_feasible(&g, k));
        prop_assert_eq!(set.members.len() as u64, limited_k.optimum);
    }

    #[test]
    fn strong_product_identity(g in graph(1, 6), k in 1u64..=2) {
        let product = g.strong_product_with_clique(k as usize).unwrap();
        prop_assert_eq!(
            brute_force_limited_lk(&product, k, &cfg()).unwrap().optimum,
            brute_force_lk(&g, k, &cfg()).unwrap().optimum
        );
    }

    #[test]
    fn components_add_up(a in connected(1, 5), b in connected(1, 5), k in 1u64..=2) {
        let offset = a.n();
        let edges = a.edges().chain(b.edges().map(|(u, v)| (u + offset, v + offset)));
        let union = Graph::from_edges(a.n() + b.n(), edges).unwrap();
        let whole = brute_force_lk(&union, k, &cfg()).unwrap().optimum;
        let parts = brute_force_lk(&a, k, &cfg()).unwrap().optimum + brute_force_lk(&b, k, &cfg()).unwrap().optimum;
        prop_assert_eq!(whole, parts);
        prop_assert_eq!(branch_and_bound_lk(&union, k, &cfg()).unwrap().optimum, parts);
    }

    #[test]
    fn diameter_bounds_hold(g in connected(1, 9), k in 1u64..=3) {
        let exact = brute_force_lk(&g, k, &cfg()).unwrap().optimum;
        prop_assert!(lower_bound_diameter(&g, k).unwrap() <= exact);
        prop_assert!(exact <= upper_bound_degree(&g, k));
        if k <= 2 {
            let diam = g.diameter().unwrap() as u64;
            let limited = brute_force_limited_lk(&g, k, &cfg()).unwrap().optimum;
            prop_assert!(limited >= (k * diam + k).div_ceil(3));
        }
        let report = bounds_report(&g, k, true, &cfg()).unwrap();
        prop_assert!(report.is_consistent());
        prop_assert_eq!(report.exact, Some(exact));
    }

    #[test]
    fn relaxation_certificates(g in graph(1, 10), k in 1u64..=4) {
        let lp = solve_relaxation(&g, k).unwrap();
        prop_assert!(verify_certificate(&g, k, &lp).unwrap());
        let base = solve_relaxation(&g, 1).unwrap();
        prop_assert_eq!(lp.objective, base.objective.clone() * int(k));
        prop_assert_eq!(compute_q(&base.primal), base.q.clone());
        prop_assert!(base.primal.iter().all(|x| !x.is_negative()));
    }

    #[test]
    fn primal_is_a_vertex_with_denominators_dividing_its_basis(g in graph(1, 8)) {
        let lp = solve_relaxation(&g, 1).unwrap();
        let n = g.n();
        // tight rows of [A_G; -I] at the returned point
        let mut tight: Vec<Vec<i64>> = Vec::new();
        for v in 0..n {
            let load: Rational = g.closed_neighborhood(v).unwrap().iter().map(|&u| lp.primal[u].clone()).sum();
            if load == Rational::one() {
                tight.push(g.neighborhood_matrix().row(v).map(i64::from).collect());
            }
        }
        for v in 0..n {
            if lp.primal[v].is_zero() {
                let mut row = vec![0i64; n];
                row[v] = 1;
                tight.push(row);
            }
        }
        let basis = independent_rows(&tight);
        prop_assert_eq!(basis.len(), n, "not a vertex");
        let square: Vec<Vec<i64>> = basis.iter().map(|&i| tight[i].clone()).collect();
        let det = determinant(&IntMatrix::from_rows(&square).unwrap()).unwrap();
        let q = BigInt::from(lp.q.clone());
        prop_assert!((det.abs() % q).is_zero());
    }

    #[test]
    fn scaled_optimum_is_an_optimal_packing(g in graph(1, 7), k1 in 1u64..=2) {
        let report = verify_theorem3(&g, k1, &cfg()).unwrap();
        prop_assert!(report.holds(), "{:?}", report);
    }

    #[test]
    fn equality_failure_rules_out_total_unimodularity(g in graph(1, 8)) {
        let report = check_theorem2(&g, 1, DEFAULT_TU_CAP, &cfg()).unwrap();
        prop_assert_ne!(report.outcome, Theorem2Outcome::Violated);
        if int(report.l1) != report.z_rlx {
            prop_assert!(!report.verdict.is_tu);
        }
    }

    #[test]
    fn tu_is_inherited_by_submatrices(g in graph(2, 7), rows in any::<u8>(), cols in any::<u8>()) {
        let a = IntMatrix::from(&g.neighborhood_matrix());
        if is_totally_unimodular(&a, DEFAULT_TU_CAP).unwrap().is_tu {
            let pick = |mask: u8| (0..g.n()).filter(|&i| mask >> i & 1 == 1).collect::<Vec<_>>();
            let (r, c) = (pick(rows), pick(cols));
            if !r.is_empty() && !c.is_empty() {
                prop_assert!(is_totally_unimodular(&a.submatrix(&r, &c), DEFAULT_TU_CAP).unwrap().is_tu);
            }
        }
    }
}

/// Greedy maximal set of linearly independent rows, by exact elimination.
fn independent_rows(rows: &[Vec<i64>]) -> Vec<usize> {
    let mut reduced: Vec<(usize, Vec<Rational>)> = Vec::new();
    let mut chosen = Vec::new();
    for (i, row) in rows.iter().enumerate() {
        let mut r: Vec<Rational> = row.iter().map(|&x| Rational::from_integer(x.into())).collect();
        for (pivot, basis_row) in &reduced {
            if !r[*pivot].is_zero() {
                let factor = r[*pivot].clone() / basis_row[*pivot].clone();
                for (x, y) in r.iter_mut().zip(basis_row) {
                    *x -= factor.clone() * y;
                }
            }
        }
        if let Some(p) = r.iter().position(|x| !x.is_zero()) {
            reduced.push((p, r));
            chosen.push(i);
        }
    }
    chosen
}

#[test]
fn limsup_sampling_on_c5_and_star() {
    for g in [make_family(Family::Cycle, 5).unwrap(), make_family(Family::Star, 3).unwrap()] {
        let lp = solve_relaxation(&g, 1).unwrap();
        let q: u64 = lp.q.clone().try_into().unwrap();
        for l in 1..=3 {
            let kk = l * q;
            let exact = branch_and_bound_lk(&g, kk, &cfg()).unwrap().optimum;
            assert_eq!(int(exact), lp.objective.clone() * int(kk));
        }
    }
}

#[test]
fn strict_gap_on_c5() {
    let c5 = make_family(Family::Cycle, 5).unwrap();
    let l1 = brute_force_lk(&c5, 1, &cfg()).unwrap().optimum;
    let l2 = brute_force_lk(&c5, 2, &cfg()).unwrap().optimum;
    assert_eq!((2 * l1, l2), (2, 3));
}

#[test]
fn diameter_two_graphs_have_l1_one() {
    for g in [
        make_family(Family::Claw, 4).unwrap(),
        make_family(Family::Star, 7).unwrap(),
        make_family(Family::Cycle, 5).unwrap(),
        make_family(Family::Cycle, 4).unwrap(),
    ] {
        assert_eq!(g.diameter().unwrap(), 2);
        assert_eq!(l1_via_square(&g, &cfg()).unwrap().optimum, 1);
    }
}

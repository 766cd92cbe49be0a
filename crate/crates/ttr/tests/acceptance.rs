//! Acceptance suite: one test per top-level claim, each printing a
//! pass/fail line (run with `--nocapture` to see them) and enforcing its
//! own wall-clock budget.

mod support;

use std::time::{Duration, Instant};

use rand::Rng;
use support::*;
use ttr::delta2::split_edges;
use ttr::fpt::{
    build_milp, classify_vertices, count_vertex_configurations, enumerate_configurations,
    BuiltMilp, FptOptions,
};
use ttr::milp::is_totally_unimodular_sample;
use ttr::model::{
    path_duration, verify_labeling, BoundMatrix, Edge, PeriodicLabeling, Tree, TtrInstance,
};
use ttr::oracle::{brute_force_solve, DEFAULT_BUDGET};
use ttr::reductions::{
    from_coloring, from_nae3sat_degree, from_nae3sat_diameter, ColoringInstance,
};
use ttr::solver::{solve, Algorithm, SolveOptions};
use ttr::travel_delay;

fn conclude(name: &str, start: Instant, limit: Duration) {
    let elapsed = start.elapsed();
    println!("criterion {name}: PASS ({elapsed:.2?}, limit {limit:.0?})");
    assert!(
        elapsed < limit,
        "criterion {name} exceeded its time budget: {elapsed:.2?} >= {limit:.0?}"
    );
}

fn options_with(algorithm: Algorithm) -> SolveOptions {
    SolveOptions {
        algorithm,
        ..SolveOptions::default()
    }
}

/// Fig. 1 reproduction: Δ=5 path with labels 3,3,4,1 has fastest duration 9
/// one way and 13 back, by the delay sum and by event simulation.
#[test]
fn criterion_1_fig1_reproduction() {
    let start = Instant::now();
    let tree = Tree::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
    let labeling: PeriodicLabeling = [((0, 1), 3), ((1, 2), 3), ((2, 3), 4), ((3, 4), 1)]
        .into_iter()
        .map(|((a, b), l)| (Edge::new(a, b).unwrap(), l))
        .collect();
    assert_eq!(path_duration(&tree, &labeling, 5, 0, 4).unwrap(), 9);
    assert_eq!(event_sim_duration(&tree, &labeling, 5, 0, 4), 9);
    assert_eq!(path_duration(&tree, &labeling, 5, 4, 0).unwrap(), 13);
    assert_eq!(event_sim_duration(&tree, &labeling, 5, 4, 0), 13);
    conclude("1 (fig. 1 reproduction)", start, Duration::from_secs(1));
}

/// Duration-calculus properties on 10,000 random labeled trees: delay
/// complementarity, the round-trip floor and max-duration bound with their
/// exact equality characterizations, cyclic-shift invariance, and agreement
/// with the event-simulation oracle.
#[test]
fn criterion_2_duration_calculus_properties() {
    let start = Instant::now();
    let mut rng = rng(0xC2_02);
    for round in 0..10_000u32 {
        let n = rng.gen_range(2..=13usize);
        let delta = rng.gen_range(1..=7u32);
        let tree = random_tree(&mut rng, n);
        let labeling = random_labeling(&mut rng, &tree, delta);

        // Delay complementarity at every vertex and neighbor pair.
        for v in 0..n {
            let neighbors = tree.neighbors(v);
            for &u in neighbors {
                for &w in neighbors {
                    if u == w {
                        continue;
                    }
                    let a = labeling.get(Edge::new(u, v).unwrap()).unwrap();
                    let b = labeling.get(Edge::new(v, w).unwrap()).unwrap();
                    let fwd = travel_delay(a, b, delta).unwrap();
                    let bwd = travel_delay(b, a, delta).unwrap();
                    assert!(fwd >= 1 && fwd <= delta);
                    if a == b {
                        assert_eq!((fwd, bwd), (delta, delta), "round {round}");
                    } else {
                        assert_eq!(fwd + bwd, delta, "round {round}");
                    }
                }
            }
        }

        let shift = rng.gen_range(0..delta);
        let shifted = ttr::cyclic_shift(&labeling, delta, shift).unwrap();
        let delta64 = delta as u64;
        for s in 0..n {
            for t in s + 1..n {
                let path = tree.path(s, t).unwrap();
                let k = (path.len() - 1) as u64;
                let d = path_duration(&tree, &labeling, delta, s, t).unwrap();
                let r = path_duration(&tree, &labeling, delta, t, s).unwrap();
                let same_label_pairs = path
                    .windows(3)
                    .filter(|w| {
                        labeling.get(Edge::new(w[0], w[1]).unwrap())
                            == labeling.get(Edge::new(w[1], w[2]).unwrap())
                    })
                    .count();

                // Durations dominate distances; single hops take exactly 1.
                assert!(d >= k && r >= k, "round {round}");
                if k == 1 {
                    assert_eq!((d, r), (1, 1), "round {round}");
                }

                // Round-trip floor, equality iff no repeated adjacent label.
                assert!(d + r >= (k - 1) * delta64 + 2, "round {round}");
                assert_eq!(
                    d + r == (k - 1) * delta64 + 2,
                    same_label_pairs == 0,
                    "round {round}"
                );

                // Max bound; equality only when every adjacent pair repeats.
                assert!(d <= (k - 1) * delta64 + 1, "round {round}");
                if d == (k - 1) * delta64 + 1 {
                    assert_eq!(same_label_pairs as u64, k.saturating_sub(1));
                }

                // Shift invariance and the event-simulation oracle.
                assert_eq!(
                    path_duration(&tree, &shifted, delta, s, t).unwrap(),
                    d,
                    "round {round}"
                );
                assert_eq!(event_sim_duration(&tree, &labeling, delta, s, t), d);
                assert_eq!(event_sim_duration(&tree, &labeling, delta, t, s), r);
            }
        }
    }
    conclude(
        "2 (duration-calculus property suite)",
        start,
        Duration::from_secs(30),
    );
}

fn assert_solver_matches_oracle(
    instance: &TtrInstance,
    algorithm: Algorithm,
    context: &str,
) {
    let candidate = solve(instance, &options_with(algorithm)).unwrap();
    let reference = brute_force_solve(instance, DEFAULT_BUDGET).unwrap();
    assert_eq!(
        candidate.realizable, reference.realizable,
        "{context}: {} disagrees with the oracle",
        algorithm.name()
    );
    if let Some(w) = &candidate.witness {
        assert!(
            verify_labeling(instance, w).unwrap().is_realizing(),
            "{context}: witness fails verification"
        );
    }
}

/// Period-2 solver equivalence: every tree shape with at most 7 vertices
/// under 100 random bound matrices each, plus 500 random trees with up to
/// 12 edges.
#[test]
fn criterion_3_delta2_equivalence() {
    let start = Instant::now();
    let shapes = tree_shapes(7);
    assert_eq!(shapes.len(), 25, "tree shapes with <= 7 vertices");
    let mut rng = rng(0xC2_03);
    for (i, tree) in shapes.iter().enumerate() {
        for round in 0..100 {
            let entries = rng.gen_range(1..=5);
            let bounds = random_bounds(&mut rng, tree, 2, entries);
            let instance = TtrInstance::new(tree.clone(), 2, bounds).unwrap();
            assert_solver_matches_oracle(
                &instance,
                Algorithm::Delta2,
                &format!("shape {i} round {round}"),
            );
        }
    }
    for round in 0..500 {
        let n = rng.gen_range(2..=13usize);
        let tree = random_tree(&mut rng, n);
        let entries = rng.gen_range(1..=6);
        let bounds = random_bounds(&mut rng, &tree, 2, entries);
        let instance = TtrInstance::new(tree, 2, bounds).unwrap();
        assert_solver_matches_oracle(
            &instance,
            Algorithm::Delta2,
            &format!("random tree round {round}"),
        );
    }
    conclude("3 (Δ=2 solver equivalence)", start, Duration::from_secs(120));
}

/// Configuration-solver equivalence on 500 random instances with up to 9
/// edges and periods 2..4. Non-integral fractional values would surface as
/// solver errors here.
#[test]
fn criterion_4_fpt_equivalence() {
    let start = Instant::now();
    let mut rng = rng(0xC2_04);
    for round in 0..500 {
        let n = rng.gen_range(2..=10usize);
        let delta = rng.gen_range(2..=4u32);
        let tree = random_tree(&mut rng, n);
        let entries = rng.gen_range(1..=5);
        let bounds = random_bounds(&mut rng, &tree, delta, entries);
        let instance = TtrInstance::new(tree, delta, bounds).unwrap();
        assert_solver_matches_oracle(
            &instance,
            Algorithm::Fpt,
            &format!("round {round} delta {delta}"),
        );
    }
    conclude("4 (fpt solver equivalence)", start, Duration::from_secs(300));
}

/// Coloring reduction equivalence over all 34 isomorphism classes of
/// five-vertex graphs: 3-colorability by brute force equals realizability
/// of the generated star instance.
#[test]
fn criterion_5_coloring_reduction() {
    let start = Instant::now();
    let graphs = graphs_on_five_vertices();
    assert_eq!(graphs.len(), 34, "graph classes on five vertices");
    for (i, graph) in graphs.iter().enumerate() {
        let reduction = from_coloring(&ColoringInstance {
            graph: graph.clone(),
            colors: 3,
        })
        .unwrap();
        let expected = is_colorable(graph, 3);
        let report = solve(&reduction.instance, &options_with(Algorithm::Fpt)).unwrap();
        assert_eq!(
            report.realizable, expected,
            "graph {i} ({} edges)",
            graph.edges().len()
        );
        if let Some(w) = &report.witness {
            let coloring = reduction.labeling_to_coloring(graph, w).unwrap();
            graph.is_proper_coloring(&coloring, 3).unwrap();
        }
    }
    conclude("5 (coloring reduction)", start, Duration::from_secs(120));
}

/// NAE reduction equivalence on both layouts, witness-map round trips, and
/// the stated structural claims (hub layout diameter 6; spine layout max
/// degree 8). The structural claims fail on shapes where the construction
/// provably differs from the stated numbers; the diagnostics below list
/// them, and the equivalence and round-trip checks stay strict.
#[test]
fn criterion_6_nae_reductions() {
    let start = Instant::now();
    let mut formulas = small_formulas(3);
    assert_eq!(formulas.len(), 415, "formulas with <= 3 vars, <= 2 clauses");
    let mut rng = rng(0xC2_06);
    for _ in 0..50 {
        formulas.push(random_formula(&mut rng, 5, 3));
    }

    let mut instances = 0usize;
    let mut diameter_failures: Vec<String> = Vec::new();
    let mut degree_failures: Vec<String> = Vec::new();

    for (i, formula) in formulas.iter().enumerate() {
        let expected = nae_satisfying_assignment(formula);
        let describe = |layout: &str| {
            format!(
                "formula {i} ({} vars, {} clauses, {layout})",
                formula.num_vars(),
                formula.clauses().len()
            )
        };

        let hub = from_nae3sat_diameter(formula);
        let spine = from_nae3sat_degree(formula);
        assert!(hub.instance.bounds().is_symmetric());
        assert!(spine.instance.bounds().is_symmetric());

        for (reduction_instance, layout) in
            [(&hub.instance, "hub"), (&spine.instance, "spine")]
        {
            instances += 1;
            let report = solve(reduction_instance, &options_with(Algorithm::Delta2)).unwrap();
            assert_eq!(
                report.realizable,
                expected.is_some(),
                "{}: solver disagrees with 2^n enumeration",
                describe(layout)
            );
        }

        if let Some(assignment) = &expected {
            let labeling = hub.assignment_to_labeling(assignment).unwrap();
            let recovered = hub.labeling_to_assignment(&labeling).unwrap();
            assert!(formula.is_nae_satisfied(&recovered).unwrap(), "{}", describe("hub"));

            let labeling = spine.assignment_to_labeling(assignment).unwrap();
            let recovered = spine.labeling_to_assignment(&labeling).unwrap();
            assert!(
                formula.is_nae_satisfied(&recovered).unwrap(),
                "{}",
                describe("spine")
            );
        }

        let d = diameter(hub.instance.tree());
        if d != 6 {
            diameter_failures.push(format!(
                "{}: diameter {d}",
                describe("hub")
            ));
        }
        let md = max_degree(spine.instance.tree());
        if md > 8 {
            degree_failures.push(format!("{}: max degree {md}", describe("spine")));
        }
    }

    if diameter_failures.is_empty() && degree_failures.is_empty() {
        conclude("6 (NAE reductions)", start, Duration::from_secs(180));
        return;
    }
    println!(
        "criterion 6 (NAE reductions): equivalence and round-trips PASS \
         ({instances} generated instances); structural subchecks FAIL:"
    );
    println!(
        "  hub-layout diameter = 6 fails on {} instances (single-clause formulas \
         have diameter 4: the one clause gadget reaches depth 3 and every other \
         branch depth 1); first: {}",
        diameter_failures.len(),
        diameter_failures.first().map(String::as_str).unwrap_or("-")
    );
    println!(
        "  spine-layout max degree <= 8 fails on {} instances (a chained clause \
         hub carries 7 gadget edges plus two spine vertices); first: {}",
        degree_failures.len(),
        degree_failures.first().map(String::as_str).unwrap_or("-")
    );
    let elapsed = start.elapsed();
    println!("criterion 6 (NAE reductions): FAIL ({elapsed:.2?}, limit 180s)");
    panic!(
        "structural subchecks of the generated families do not hold as stated: \
         {} diameter deviations, {} degree deviations (inherent to the \
         construction; equivalence and round-trips all passed)",
        diameter_failures.len(),
        degree_failures.len()
    );
}

/// Total-unimodularity spot check: on 200 random (instance, configuration)
/// pairs the fractional submatrix has entries in {-1,0,1} and unit minors
/// up to order 6.
#[test]
fn criterion_7_tu_structure() {
    let start = Instant::now();
    let mut rng = rng(0xC2_07);
    let mut sampled = 0usize;
    let mut attempts = 0usize;
    while sampled < 200 {
        attempts += 1;
        assert!(attempts < 10_000, "sampling stalled");
        let n = rng.gen_range(6..=11usize);
        let delta = rng.gen_range(2..=4u32);
        let tree = random_tree(&mut rng, n);
        let classes = classify_vertices(&tree);
        let entries = rng.gen_range(2..=6);
        let bounds = random_bounds(&mut rng, &tree, delta, entries);
        let instance = TtrInstance::new(tree, delta, bounds).unwrap();
        let configs: Vec<_> = enumerate_configurations(instance.tree(), &classes, delta)
            .take(64)
            .collect();
        if configs.is_empty() {
            continue;
        }
        let sigma = &configs[rng.gen_range(0..configs.len())];
        match build_milp(&instance, sigma).unwrap() {
            BuiltMilp::Rejected(_) => continue,
            BuiltMilp::Model(built) => {
                let matrix = built.model.fractional_submatrix();
                let verdict = is_totally_unimodular_sample(&matrix, 6, sampled as u64);
                assert!(
                    verdict.holds(),
                    "sample {sampled}: {verdict:?} for {} rows",
                    matrix.len()
                );
                sampled += 1;
            }
        }
    }
    conclude("7 (TU structure check)", start, Duration::from_secs(60));
}

/// Configuration counting: a single degree-3 vertex yields 13 ordered
/// partitions when the period allows 3 parts and 7 when capped at 2.
#[test]
fn criterion_8_configuration_counts() {
    let start = Instant::now();
    let star = Tree::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
    let classes = classify_vertices(&star);
    for delta in 3..=6u32 {
        let configs: Vec<_> = enumerate_configurations(&star, &classes, delta).collect();
        assert_eq!(configs.len(), 13, "delta {delta}");
    }
    let configs: Vec<_> = enumerate_configurations(&star, &classes, 2).collect();
    assert_eq!(configs.len(), 7);
    assert_eq!(count_vertex_configurations(3, 3), 13);
    assert_eq!(count_vertex_configurations(3, 2), 7);
    conclude("8 (configuration counts)", start, Duration::from_secs(1));
}

/// Spot check of the counting contracts behind the asymptotic claims:
/// the period-2 solver examines exactly the halved internal-labeling space
/// when nothing prunes, and the configuration stream matches its count.
#[test]
fn examined_count_contracts() {
    let start = Instant::now();
    // P7: four internal edges, an unsatisfiable leaf-pair bound, no
    // internal-pair bounds: all 2^3 pruned labelings reach the leaf stage.
    let tree = Tree::new(7, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6)]).unwrap();
    let mut bounds = BoundMatrix::all_trivial();
    bounds.set_symmetric(0, 6, 5).unwrap();
    let instance = TtrInstance::new(tree, 2, bounds).unwrap();
    let split = split_edges(instance.tree());
    assert_eq!(split.internal_edges.len(), 4);
    let result = ttr::delta2::solve_delta2(&instance).unwrap();
    assert!(!result.realizable);
    assert_eq!(result.examined, 1 << 3);

    // Configuration streams are exactly their predicted size.
    let mut rng = rng(0xC2_09);
    for _ in 0..50 {
        let n = rng.gen_range(4..=9usize);
        let delta = rng.gen_range(2..=4u32);
        let tree = random_tree(&mut rng, n);
        let classes = classify_vertices(&tree);
        let count = ttr::fpt::count_configurations(&tree, &classes, delta);
        if count > 20_000 {
            continue;
        }
        let streamed = enumerate_configurations(&tree, &classes, delta).count() as u128;
        assert_eq!(streamed, count);
    }
    let report = solve(
        &TtrInstance::new(
            Tree::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap(),
            3,
            BoundMatrix::all_trivial(),
        )
        .unwrap(),
        &SolveOptions {
            algorithm: Algorithm::Fpt,
            fpt: FptOptions::default(),
            ..SolveOptions::default()
        },
    )
    .unwrap();
    assert!(report.realizable);
    assert!(report.examined >= 1);
    conclude("(examined-count contracts)", start, Duration::from_secs(30));
}

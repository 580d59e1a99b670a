//! Acceptance suite: one test per criterion, each printing a PASS/FAIL
//! line (run with `--nocapture` to see them).
//!
//! 1. Complete-graph equivalence: enumerated score sequences = integer
//!    vectors accepted by both deciders, for K_3..K_5.
//! 2. Generalized integral realization: score sequences = feasible
//!    lattice points on 200 random graphs, every member realizes.
//! 3. Membership agreement: deciders unanimous on 1000+ sampled and
//!    1000+ perturbed vectors.
//! 4. Forest refinement: realizations have acyclic fractional support
//!    under n edges, exact means; integral inputs leave no randomness.
//! 5. Witness validity: every witness recomputes, on 500+ infeasible
//!    instances.
//! 6. Counting: feasible lattice points = forests on K_3 and K_4.
//!
//! All comparisons are exact; no tolerances.

mod common;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use scoreseq_core::feasibility::{check_complete_majorization, check_flow, check_subset};
use scoreseq_core::graph::{enumerate_forests, find_cycle_in_edge_subset, Graph};
use scoreseq_core::oracle::{
    enumerate_lattice_points, enumerate_score_sequences, sample_zonotope_point,
};
use scoreseq_core::rational::ratio;
use scoreseq_core::realization::{realize, realize_integral};
use scoreseq_core::tournament::ScoreVector;
use scoreseq_core::{FeasibilityVerdict, SplitMix64};

use common::{degree_box_candidates, random_graph_family};

const FAMILY_SEED: u64 = 2024;
const FAMILY_SIZE: usize = 200;
const MAX_N: usize = 7;
const MAX_M: usize = 12;

fn report(criterion: &str, ok: bool) {
    println!(
        "acceptance {criterion}: {}",
        if ok { "PASS" } else { "FAIL" }
    );
    assert!(ok, "acceptance {criterion} failed");
}

/// The graph family shared by criteria 2-5: random graphs plus the
/// complete graphs K_2..K_7 so the majorization path is exercised.
fn family() -> Vec<Graph> {
    let mut graphs = random_graph_family(FAMILY_SEED, FAMILY_SIZE, MAX_N, MAX_M);
    for n in 2..=7 {
        graphs.push(Graph::complete(n).unwrap());
    }
    graphs
}

#[test]
fn criterion_1_complete_graph_equivalence() {
    let start = Instant::now();
    let mut ok = true;
    for n in 3..=5 {
        let g = Graph::complete(n).unwrap();
        let enumerated = enumerate_score_sequences(&g).unwrap().vectors;
        let mut by_subset = BTreeSet::new();
        let mut by_flow = BTreeSet::new();
        for candidate in degree_box_candidates(&g) {
            let x = ScoreVector::from_integers(&candidate);
            if check_subset(&g, &x).unwrap().is_feasible() {
                by_subset.insert(candidate.clone());
            }
            if check_flow(&g, &x).unwrap().is_feasible() {
                by_flow.insert(candidate);
            }
        }
        ok &= enumerated == by_subset && enumerated == by_flow;
    }
    let elapsed = start.elapsed();
    ok &= elapsed < Duration::from_secs(10);
    println!("  criterion 1 elapsed: {elapsed:?}");
    report("criterion 1 (complete-graph equivalence, K3-K5)", ok);
}

#[test]
fn criterion_2_integral_realization_on_random_graphs() {
    let start = Instant::now();
    let graphs = random_graph_family(FAMILY_SEED, FAMILY_SIZE, MAX_N, MAX_M);
    assert!(graphs.len() >= 200);
    let mut ok = true;
    let mut members = 0usize;
    for g in &graphs {
        let sequences = enumerate_score_sequences(g).unwrap().vectors;
        let lattice = enumerate_lattice_points(g).unwrap();
        ok &= sequences == lattice;
        for vector in &sequences {
            members += 1;
            let s = ScoreVector::from_integers(vector);
            match realize_integral(g, &s) {
                Ok(t) => ok &= t.score_sequence() == s,
                Err(_) => ok = false,
            }
        }
    }
    let elapsed = start.elapsed();
    ok &= elapsed < Duration::from_secs(120);
    println!(
        "  criterion 2: {} graphs, {members} integral sequences realized, elapsed {elapsed:?}",
        graphs.len()
    );
    report("criterion 2 (score sequences = lattice points + realization)", ok);
}

/// Deterministic sampled vectors for criteria 3-5: at least `per_graph`
/// samples per family graph.
fn sampled_vectors(per_graph: usize) -> Vec<(Graph, ScoreVector)> {
    let mut rng = SplitMix64::new(FAMILY_SEED ^ 0x5EED);
    let mut out = Vec::new();
    for g in family() {
        for _ in 0..per_graph {
            let x = sample_zonotope_point(&g, rng.next_u64());
            out.push((g.clone(), x));
        }
    }
    out
}

/// Sum-preserving perturbation of +-1/7 on a random coordinate pair.
fn perturb(x: &ScoreVector, rng: &mut SplitMix64) -> ScoreVector {
    let n = x.len();
    let mut entries = x.entries().to_vec();
    if n >= 2 {
        let up = rng.below(n as u64) as usize;
        let down = (up + 1 + rng.below(n as u64 - 1) as usize) % n;
        entries[up] += ratio(1, 7);
        entries[down] -= ratio(1, 7);
    }
    ScoreVector::new(entries)
}

fn kind(v: &FeasibilityVerdict) -> u8 {
    match v {
        FeasibilityVerdict::Feasible => 0,
        FeasibilityVerdict::SumMismatch { .. } => 1,
        FeasibilityVerdict::SubsetViolation { .. } => 2,
    }
}

#[test]
fn criterion_3_membership_agreement() {
    let samples = sampled_vectors(5);
    assert!(samples.len() >= 1000, "need at least 1000 samples");
    let mut ok = true;
    let mut disagreements = 0usize;

    for (g, x) in &samples {
        let subset = check_subset(g, x).unwrap();
        let flow = check_flow(g, x).unwrap();
        let mut unanimous = subset.is_feasible() && flow.is_feasible();
        if g.is_complete() {
            unanimous &= check_complete_majorization(x);
        }
        if !unanimous {
            disagreements += 1;
        }
    }

    let mut rng = SplitMix64::new(FAMILY_SEED ^ 0x7E27);
    let mut perturbed_count = 0usize;
    for (g, x) in &samples {
        let y = perturb(x, &mut rng);
        perturbed_count += 1;
        let subset = check_subset(g, &y).unwrap();
        let flow = check_flow(g, &y).unwrap();
        let mut agree = kind(&subset) == kind(&flow);
        if g.is_complete() {
            agree &= check_complete_majorization(&y) == flow.is_feasible();
        }
        if !agree {
            disagreements += 1;
        }
    }

    ok &= disagreements == 0 && perturbed_count >= 1000;
    println!(
        "  criterion 3: {} samples + {perturbed_count} perturbed, {disagreements} disagreements",
        samples.len()
    );
    report("criterion 3 (membership agreement across deciders)", ok);
}

#[test]
fn criterion_4_forest_refinement() {
    let samples = sampled_vectors(3);
    let mut ok = true;
    for (g, x) in &samples {
        let result = realize(g, x).unwrap();
        ok &= &result.tournament.mean_score_sequence() == x;
        ok &= result.fractional_support.len() < g.vertex_count();
        ok &= find_cycle_in_edge_subset(g, &result.fractional_support)
            .unwrap()
            .is_none();
    }

    // Integral inputs: realization carries no residual randomness.
    let mut integral_checked = 0usize;
    for g in random_graph_family(FAMILY_SEED, 40, MAX_N, 8) {
        for vector in &enumerate_score_sequences(&g).unwrap().vectors {
            let s = ScoreVector::from_integers(vector);
            let result = realize(&g, &s).unwrap();
            ok &= result.fractional_support.is_empty();
            ok &= result.tournament.mean_score_sequence() == s;
            integral_checked += 1;
        }
    }
    println!(
        "  criterion 4: {} fractional + {integral_checked} integral realizations",
        samples.len()
    );
    report("criterion 4 (forest-supported realization, exact means)", ok);
}

#[test]
fn criterion_5_witness_validity() {
    let samples = sampled_vectors(2);
    let mut rng = SplitMix64::new(FAMILY_SEED ^ 0x517);
    let mut infeasible = 0usize;
    let mut valid = 0usize;
    let mut check = |g: &Graph, y: &ScoreVector| {
        for verdict in [check_subset(g, y).unwrap(), check_flow(g, y).unwrap()] {
            if !verdict.is_feasible() {
                infeasible += 1;
                if verdict.verify(g, y) {
                    valid += 1;
                }
            }
        }
    };

    for (g, x) in &samples {
        // Sum breakers and negative entries are infeasible by construction;
        // random perturbations add subset violations of both kinds.
        let mut broken_sum = x.entries().to_vec();
        broken_sum[0] += ratio(1, 3);
        check(g, &ScoreVector::new(broken_sum));

        if x.len() >= 2 {
            let mut negative = x.entries().to_vec();
            let shift = negative[0].clone() + ratio(1, 2);
            negative[0] -= &shift;
            negative[1] += &shift;
            check(g, &ScoreVector::new(negative));
        }

        let y = perturb(x, &mut rng);
        check(g, &y);
    }

    let ok = infeasible >= 500 && valid == infeasible;
    println!("  criterion 5: {infeasible} infeasible verdicts, {valid} witnesses valid");
    report("criterion 5 (witness validity on infeasible instances)", ok);
}

#[test]
fn criterion_6_lattice_points_count_forests() {
    let mut ok = true;
    for (n, expected) in [(3usize, 7usize), (4, 38)] {
        let g = Graph::complete(n).unwrap();
        let lattice = enumerate_lattice_points(&g).unwrap();
        let forests = enumerate_forests(&g).unwrap();
        ok &= lattice.len() == expected;
        ok &= forests.len() == expected;
        ok &= lattice.len() == forests.len();
    }
    report("criterion 6 (lattice points of K3/K4 count forests: 7/38)", ok);
}

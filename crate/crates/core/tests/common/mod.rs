//! Shared helpers for the integration suites.

use ferrers_core::{BipartiteGraph, FamilySpec};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

/// Seeded random bipartite graph with at most `max_side` vertices per side
/// and at most `max_edges` edges.
pub fn random_bipartite(rng: &mut ChaCha8Rng, max_side: usize, max_edges: usize) -> BipartiteGraph {
    let u = rng.gen_range(1..=max_side);
    let v = rng.gen_range(1..=max_side);
    let mut pairs: Vec<(usize, usize)> = (0..u)
        .flat_map(|a| (0..v).map(move |b| (a, b)))
        .collect();
    pairs.shuffle(rng);
    let count = rng.gen_range(0..=max_edges.min(pairs.len()));
    BipartiteGraph::new(u, v, pairs.into_iter().take(count)).unwrap()
}

/// Every named-family instance with at most `max_edges` edges, for oracle
/// sweeps.
pub fn small_family_instances(max_edges: usize) -> Vec<FamilySpec> {
    let mut specs = Vec::new();
    for n in 2..=11 {
        specs.push(FamilySpec::Path(n));
    }
    for n in (4..=10).step_by(2) {
        specs.push(FamilySpec::Cycle(n));
    }
    for n in 1..=4 {
        specs.push(FamilySpec::Ladder(n));
    }
    for n in 2..=4 {
        specs.push(FamilySpec::Crown(n));
    }
    for m in 2..=5 {
        for n in 2..=5 {
            for t in 0..=m.min(n) {
                specs.push(FamilySpec::CompleteMinusMatching { m, n, t });
            }
        }
    }
    specs.push(FamilySpec::DisjointUnion(vec![
        FamilySpec::Path(4),
        FamilySpec::Path(4),
    ]));
    specs.push(FamilySpec::DisjointUnion(vec![
        FamilySpec::Path(2),
        FamilySpec::Path(2),
        FamilySpec::Path(2),
    ]));
    specs.push(FamilySpec::DisjointUnion(vec![
        FamilySpec::Cycle(4),
        FamilySpec::Path(3),
    ]));
    specs.push(FamilySpec::DisjointUnion(vec![
        FamilySpec::Cycle(6),
        FamilySpec::Path(2),
    ]));
    specs.push(FamilySpec::DisjointUnion(vec![
        FamilySpec::Crown(3),
        FamilySpec::Path(2),
    ]));
    specs
        .into_iter()
        .filter(|s| s.generate().unwrap().edge_count() <= max_edges)
        .collect()
}

//! Exact computation of the chain partition number `fp(G)`.
//!
//! The decision problem (can the edge set be split into `k` chain parts?) is
//! solved by depth-first search over edges in a fixed order, assigning each
//! edge to a part. Soundness of the pruning rules rests on them detecting
//! only permanent violations:
//!
//! (a) two conflict-graph-adjacent edges may never share a part (their cross
//!     pairs are absent from the host, so the induced `2K2` can never be
//!     repaired);
//! (b) placing `e = (u, v)` into a part fails if some member `f = (u', v')`
//!     is vertex-disjoint from `e` and each cross edge `(u, v')`, `(u', v)`
//!     is either absent from the host or already assigned to another part;
//! (c) at a full assignment every part is re-checked by recognition, which
//!     makes rule (b) exact because nothing is unassigned anymore.
//!
//! Symmetry is broken by first-use part numbering: an edge may open at most
//! one new part. `fp` itself iterates the decision problem upward from the
//! best lower bound and stops at the width upper bound, whose constructive
//! witness is already a valid partition; components are solved independently
//! and summed, since no chain part can span two components.

use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};
use std::time::{Duration, Instant};

use crate::bitset::Bitset;
use crate::bounds::{
    chain_decomposition_partition, conflict_chromatic, conflict_graph, dilworth_width,
    induced_matching_number, ConflictGraph, Side,
};
use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, EdgeId};
use crate::partition::EdgePartition;
use crate::recognition::{is_ferrers, TwoKTwoWitness};

/// Knobs for the exact search.
#[derive(Clone, Debug)]
pub struct SolverConfig {
    /// `fp` refuses hosts with more edges than this.
    pub cap: usize,
    /// Disable pruning rules (a) and (b); only the full-assignment check
    /// remains. Exists to validate that pruning never changes answers.
    pub leaf_check_only: bool,
    /// Worker threads for disjoint subtree exploration. The verdict and the
    /// optimum are identical to sequential execution; with one worker the
    /// witness and node counts are deterministic too.
    pub jobs: usize,
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self {
            cap: 40,
            leaf_check_only: false,
            jobs: 1,
        }
    }
}

// ---------------------------------------------------------------------------
// Certificate checker
// ---------------------------------------------------------------------------

/// First violation found when checking a partition, if any.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Violation {
    UnknownEdgeId { id: EdgeId },
    DoubleAssigned { id: EdgeId, part_a: usize, part_b: usize },
    MissingEdge { id: EdgeId },
    NotFerrers { part: usize, witness: TwoKTwoWitness },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::UnknownEdgeId { id } => {
                write!(f, "edge id {id} does not exist in the graph")
            }
            Violation::DoubleAssigned { id, part_a, part_b } => {
                write!(f, "edge {id} assigned to both part {part_a} and part {part_b}")
            }
            Violation::MissingEdge { id } => write!(f, "edge {id} is not assigned to any part"),
            Violation::NotFerrers { part, witness } => {
                write!(f, "part {part} is not a chain subgraph: induced 2K2 at {witness}")
            }
        }
    }
}

/// Polynomial-time certificate checker: accepts iff the parts are pairwise
/// disjoint, cover the edge set, and each part induces a chain subgraph.
pub fn verify_partition(g: &BipartiteGraph, p: &EdgePartition) -> std::result::Result<(), Violation> {
    let m = g.edge_count();
    let mut owner = vec![usize::MAX; m];
    let mut double: Option<Violation> = None;
    for (i, part) in p.parts().iter().enumerate() {
        for &id in part {
            if id >= m {
                return Err(Violation::UnknownEdgeId { id });
            }
            if owner[id] != usize::MAX {
                let v = Violation::DoubleAssigned {
                    id,
                    part_a: owner[id],
                    part_b: i,
                };
                double = Some(match double {
                    Some(prev) => prev.min_by_id(v),
                    None => v,
                });
            } else {
                owner[id] = i;
            }
        }
    }
    if let Some(v) = double {
        return Err(v);
    }
    if let Some(id) = (0..m).find(|&id| owner[id] == usize::MAX) {
        return Err(Violation::MissingEdge { id });
    }
    for (i, part) in p.parts().iter().enumerate() {
        let cert = is_ferrers(g, part).expect("ids were range-checked above");
        if let Some(witness) = cert.witness() {
            return Err(Violation::NotFerrers { part: i, witness });
        }
    }
    Ok(())
}

impl Violation {
    fn min_by_id(self, other: Violation) -> Violation {
        let key = |v: &Violation| match v {
            Violation::DoubleAssigned { id, .. } => *id,
            _ => usize::MAX,
        };
        if key(&other) < key(&self) {
            other
        } else {
            self
        }
    }
}

// ---------------------------------------------------------------------------
// Decision search
// ---------------------------------------------------------------------------

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum DecideOutcome {
    Feasible(EdgePartition),
    Infeasible,
}

impl DecideOutcome {
    pub fn is_feasible(&self) -> bool {
        matches!(self, DecideOutcome::Feasible(_))
    }

    pub fn witness(self) -> Option<EdgePartition> {
        match self {
            DecideOutcome::Feasible(p) => Some(p),
            DecideOutcome::Infeasible => None,
        }
    }
}

/// Decides whether the edges of `g` can be partitioned into at most `k`
/// chain parts, returning the first witness found in the fixed search order.
pub fn decide_k(g: &BipartiteGraph, k: usize, cfg: &SolverConfig) -> DecideOutcome {
    decide_k_with_stats(g, k, cfg).0
}

/// As [`decide_k`], also reporting the number of search nodes expanded.
pub fn decide_k_with_stats(g: &BipartiteGraph, k: usize, cfg: &SolverConfig) -> (DecideOutcome, u64) {
    let cg = conflict_graph(g);
    decide_with_conflict(g, &cg, k, cfg)
}

fn decide_with_conflict(
    g: &BipartiteGraph,
    cg: &ConflictGraph,
    k: usize,
    cfg: &SolverConfig,
) -> (DecideOutcome, u64) {
    assert!(k >= 1, "decide_k needs k >= 1");
    let m = g.edge_count();
    if m == 0 {
        return (DecideOutcome::Feasible(EdgePartition::new(Vec::new())), 0);
    }
    // Conflict-dense edges constrain parts the most; fix their parts first.
    let mut order: Vec<EdgeId> = (0..m).collect();
    order.sort_by(|&a, &b| cg.degree(b).cmp(&cg.degree(a)).then(a.cmp(&b)));

    let mut search = Search {
        g,
        cg,
        cfg,
        k,
        order: &order,
        assign: vec![usize::MAX; m],
        part_members: vec![Vec::new(); k],
        part_bits: vec![Bitset::new(m); k],
        open: 0,
        nodes: 0,
    };

    if cfg.jobs <= 1 {
        let witness = search.dfs(0);
        let nodes = search.nodes;
        return (
            witness.map_or(DecideOutcome::Infeasible, DecideOutcome::Feasible),
            nodes,
        );
    }
    decide_parallel(search, cfg.jobs)
}

struct Search<'a> {
    g: &'a BipartiteGraph,
    cg: &'a ConflictGraph,
    cfg: &'a SolverConfig,
    k: usize,
    order: &'a [EdgeId],
    assign: Vec<usize>,
    part_members: Vec<Vec<EdgeId>>,
    part_bits: Vec<Bitset>,
    open: usize,
    nodes: u64,
}

impl Search<'_> {
    fn dfs(&mut self, pos: usize) -> Option<EdgePartition> {
        self.nodes += 1;
        if pos == self.order.len() {
            return self.leaf_check();
        }
        let e = self.order[pos];
        let limit = (self.open + 1).min(self.k);
        for part in 0..limit {
            if !self.cfg.leaf_check_only && part < self.open && !self.placement_ok(e, part) {
                continue;
            }
            let was_open = self.open;
            self.assign[e] = part;
            self.part_members[part].push(e);
            self.part_bits[part].set(e);
            if part == self.open {
                self.open += 1;
            }
            if let Some(w) = self.dfs(pos + 1) {
                return Some(w);
            }
            self.open = was_open;
            self.part_bits[part].clear(e);
            self.part_members[part].pop();
            self.assign[e] = usize::MAX;
        }
        None
    }

    /// Pruning rules (a) and (b) for placing `e` into an occupied part.
    fn placement_ok(&self, e: EdgeId, part: usize) -> bool {
        // (a) conflict-adjacent edges can never share a part.
        if self.part_bits[part].intersects(self.cg.adj_bits(e)) {
            return false;
        }
        // (b) a vertex-disjoint member whose cross edges are both
        // unavailable (absent from the host, or pinned to another part)
        // would form a permanent induced 2K2.
        let a = self.g.edge(e);
        for &f in &self.part_members[part] {
            let b = self.g.edge(f);
            if a.u == b.u || a.v == b.v {
                continue;
            }
            let unavailable = |u: usize, v: usize| match self.g.edge_id(u, v) {
                None => true,
                Some(id) => self.assign[id] != usize::MAX && self.assign[id] != part,
            };
            if unavailable(a.u, b.v) && unavailable(b.u, a.v) {
                return false;
            }
        }
        true
    }

    /// Rule (c): with everything assigned, re-check every part exactly.
    fn leaf_check(&self) -> Option<EdgePartition> {
        for part in &self.part_members[..self.open] {
            let cert = is_ferrers(self.g, part).expect("search ids are in range");
            if !cert.is_ferrers() {
                return None;
            }
        }
        Some(EdgePartition::new(
            self.part_members[..self.open].to_vec(),
        ))
    }

    /// Enumerates the valid partial assignments of the first `depth` edges in
    /// search order (the depth-`depth` frontier of the same tree).
    fn frontier(&mut self, depth: usize) -> FrontierResult {
        self.nodes = 0;
        let mut prefixes: Vec<Vec<usize>> = Vec::new();
        let mut current: Vec<usize> = Vec::new();
        let done = self.expand(0, depth, &mut current, &mut prefixes);
        FrontierResult {
            prefixes,
            witness: done,
            nodes: self.nodes,
        }
    }

    fn expand(
        &mut self,
        pos: usize,
        depth: usize,
        current: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) -> Option<EdgePartition> {
        if pos == depth || pos == self.order.len() {
            if pos == self.order.len() {
                // Short instance: the frontier reached the leaves.
                self.nodes += 1;
                if let Some(w) = self.leaf_check() {
                    return Some(w);
                }
            } else {
                out.push(current.clone());
            }
            return None;
        }
        self.nodes += 1;
        let e = self.order[pos];
        let limit = (self.open + 1).min(self.k);
        for part in 0..limit {
            if !self.cfg.leaf_check_only && part < self.open && !self.placement_ok(e, part) {
                continue;
            }
            let was_open = self.open;
            self.assign[e] = part;
            self.part_members[part].push(e);
            self.part_bits[part].set(e);
            if part == self.open {
                self.open += 1;
            }
            current.push(part);
            let found = self.expand(pos + 1, depth, current, out);
            current.pop();
            self.open = was_open;
            self.part_bits[part].clear(e);
            self.part_members[part].pop();
            self.assign[e] = usize::MAX;
            if found.is_some() {
                return found;
            }
        }
        None
    }
}

struct FrontierResult {
    prefixes: Vec<Vec<usize>>,
    witness: Option<EdgePartition>,
    nodes: u64,
}

fn decide_parallel(mut proto: Search<'_>, jobs: usize) -> (DecideOutcome, u64) {
    use rayon::prelude::*;

    // Split deep enough to feed the workers; each prefix is one subtree.
    let m = proto.order.len();
    let mut depth = 1;
    let mut frontier = proto.frontier(depth);
    while frontier.witness.is_none()
        && frontier.prefixes.len() < 4 * jobs
        && depth < m
        && !frontier.prefixes.is_empty()
    {
        depth += 1;
        frontier = proto.frontier(depth);
    }
    if let Some(w) = frontier.witness {
        return (DecideOutcome::Feasible(w), frontier.nodes);
    }
    if frontier.prefixes.is_empty() {
        return (DecideOutcome::Infeasible, frontier.nodes);
    }

    let nodes = AtomicU64::new(frontier.nodes);
    let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs).build();
    let g = proto.g;
    let cg = proto.cg;
    let cfg = proto.cfg;
    let k = proto.k;
    let order = proto.order;
    let run_prefix = |prefix: &Vec<usize>| -> Option<EdgePartition> {
        let mut search = Search {
            g,
            cg,
            cfg,
            k,
            order,
            assign: vec![usize::MAX; m],
            part_members: vec![Vec::new(); k],
            part_bits: vec![Bitset::new(m); k],
            open: 0,
            nodes: 0,
        };
        for (pos, &part) in prefix.iter().enumerate() {
            let e = order[pos];
            search.assign[e] = part;
            search.part_members[part].push(e);
            search.part_bits[part].set(e);
            if part == search.open {
                search.open += 1;
            }
        }
        let found = search.dfs(prefix.len());
        nodes.fetch_add(search.nodes, Ordering::Relaxed);
        found
    };
    // find_map_first keeps the leftmost (sequential-order) witness.
    let witness = match pool {
        Ok(pool) => pool.install(|| frontier.prefixes.par_iter().find_map_first(run_prefix)),
        Err(_) => frontier.prefixes.iter().find_map(run_prefix),
    };
    (
        witness.map_or(DecideOutcome::Infeasible, DecideOutcome::Feasible),
        nodes.load(Ordering::Relaxed),
    )
}

// ---------------------------------------------------------------------------
// Exact fp
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct SearchStats {
    /// Search tree nodes expanded across all decision calls.
    pub nodes: u64,
    pub elapsed: Duration,
}

/// Exact value with a verified witness and the bounds active at termination.
#[derive(Clone, Debug)]
pub struct FpResult {
    pub value: usize,
    pub witness: EdgePartition,
    /// (sum of per-component lower bounds, sum of per-component widths).
    pub bounds_used: (usize, usize),
    pub stats: SearchStats,
}

impl FpResult {
    /// `fp = <k>`, the witness partition, and a stats line.
    pub fn to_text(&self, g: &BipartiteGraph) -> String {
        format!(
            "fp = {}\n{}stats: nodes={} ms={}\n",
            self.value,
            self.witness.to_text(g),
            self.stats.nodes,
            self.stats.elapsed.as_millis()
        )
    }
}

/// Exact `fp(G)` with the default configuration (edge cap 40).
pub fn fp_exact(g: &BipartiteGraph) -> Result<FpResult> {
    fp_exact_with(g, &SolverConfig::default())
}

/// Exact `fp(G)`. Components are solved independently and summed; within a
/// component the decision problem is iterated from the strongest lower bound
/// (induced matching, exact conflict chromatic number, or 1) up to the width
/// upper bound, whose chain-decomposition witness is used when the search
/// never has to run.
pub fn fp_exact_with(g: &BipartiteGraph, cfg: &SolverConfig) -> Result<FpResult> {
    if g.edge_count() > cfg.cap {
        return Err(Error::CapExceeded {
            edges: g.edge_count(),
            cap: cfg.cap,
        });
    }
    let start = Instant::now();
    let mut value = 0;
    let mut lower_sum = 0;
    let mut upper_sum = 0;
    let mut nodes = 0;
    let mut global_parts: Vec<Vec<EdgeId>> = Vec::new();
    for comp in g.components() {
        if !comp.has_edges() {
            continue;
        }
        let (sub, idmap) = g.component_subgraph(&comp);
        let solved = solve_connected(&sub, cfg);
        value += solved.value;
        lower_sum += solved.lower;
        upper_sum += solved.upper;
        nodes += solved.nodes;
        for part in solved.partition.parts() {
            global_parts.push(part.iter().map(|&id| idmap[id]).collect());
        }
    }
    let witness = EdgePartition::new(global_parts);
    debug_assert!(verify_partition(g, &witness).is_ok());
    Ok(FpResult {
        value,
        witness,
        bounds_used: (lower_sum, upper_sum),
        stats: SearchStats {
            nodes,
            elapsed: start.elapsed(),
        },
    })
}

struct ComponentSolution {
    value: usize,
    partition: EdgePartition,
    lower: usize,
    upper: usize,
    nodes: u64,
}

fn solve_connected(g: &BipartiteGraph, cfg: &SolverConfig) -> ComponentSolution {
    let (nu, _) = induced_matching_number(g);
    let cg = conflict_graph(g);
    let (chi, _) = conflict_chromatic(&cg);
    let wu = dilworth_width(g, Side::U).width;
    let wv = dilworth_width(g, Side::V).width;
    let (upper, side) = if wu <= wv { (wu, Side::U) } else { (wv, Side::V) };
    let lower = nu.max(chi).max(1);
    debug_assert!(lower <= upper, "bounds crossed: {lower} > {upper}");

    let mut nodes = 0;
    for k in lower..upper {
        let (outcome, n) = decide_with_conflict(g, &cg, k, cfg);
        nodes += n;
        if let DecideOutcome::Feasible(p) = outcome {
            return ComponentSolution {
                value: k,
                partition: p,
                lower,
                upper,
                nodes,
            };
        }
    }
    // Infeasible below the width bound (or the bounds met): the chain
    // decomposition itself is the witness at k = upper.
    ComponentSolution {
        value: upper,
        partition: chain_decomposition_partition(g, side),
        lower,
        upper,
        nodes,
    }
}

// ---------------------------------------------------------------------------
// Brute-force oracle
// ---------------------------------------------------------------------------

/// Minimum block count over all set partitions of the edges with every block
/// a chain subgraph, by restricted-growth enumeration. No pruning beyond the
/// block-count cutoff; limited to 10 edges.
pub fn fp_bruteforce(g: &BipartiteGraph) -> Result<usize> {
    let m = g.edge_count();
    if m > 10 {
        return Err(Error::BruteforceTooLarge(m));
    }
    if m == 0 {
        return Ok(0);
    }
    let mut labels = vec![0usize; m];
    let mut best = m + 1;
    enumerate_rgs(g, &mut labels, 1, &mut best);
    Ok(best)
}

fn enumerate_rgs(g: &BipartiteGraph, labels: &mut Vec<usize>, fixed: usize, best: &mut usize) {
    let blocks = labels[..fixed].iter().max().map_or(0, |&b| b + 1);
    if blocks >= *best {
        return;
    }
    if fixed == labels.len() {
        let mut parts = vec![Vec::new(); blocks];
        for (id, &b) in labels.iter().enumerate() {
            parts[b].push(id);
        }
        let ok = parts
            .iter()
            .all(|p| is_ferrers(g, p).expect("ids in range").is_ferrers());
        if ok {
            *best = blocks;
        }
        return;
    }
    for b in 0..=blocks {
        labels[fixed] = b;
        enumerate_rgs(g, labels, fixed + 1, best);
    }
    labels[fixed] = 0;
}

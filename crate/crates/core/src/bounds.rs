//! Sandwich bounds for the chain partition number.
//!
//! Lower bounds: the induced matching number (a chain subgraph can use at
//! most one edge of an induced matching) and the chromatic number of the
//! host conflict graph (edges whose cross pairs are absent in the host can
//! never share a chain part). Upper bound: the width of either side's
//! neighborhood-inclusion poset, realized constructively by a minimum chain
//! cover whose chains collect their incident edges into chain parts.
//!
//! Both NP-hard quantities here (maximum induced matching, chromatic number)
//! are computed exactly by branch and bound; a heuristic value would not be a
//! sound bound on the partition number. Instances are desk scale.

use std::fmt;

use crate::bitset::Bitset;
use crate::error::Result;
use crate::graph::{BipartiteGraph, EdgeId};
use crate::partition::EdgePartition;

// ---------------------------------------------------------------------------
// Induced matching number (exact)
// ---------------------------------------------------------------------------

/// Exact maximum induced matching, returned with a witness edge set.
///
/// Reduction: build the proximity graph on host edges (`e ~ f` iff they share
/// a vertex or some host edge joins an endpoint of `e` to an endpoint of
/// `f`); induced matchings are exactly the independent sets there. Maximum
/// independent set is solved by branch and bound with a greedy clique-cover
/// bound. The witness is deterministic: branches pick the lowest-id vertex
/// among equals and the first strict improvement is kept.
pub fn induced_matching_number(g: &BipartiteGraph) -> (usize, Vec<EdgeId>) {
    let m = g.edge_count();
    if m == 0 {
        return (0, Vec::new());
    }
    let mut prox: Vec<Bitset> = (0..m).map(|_| Bitset::new(m)).collect();
    for e in 0..m {
        let a = g.edge(e);
        for f in e + 1..m {
            let b = g.edge(f);
            let near = a.u == b.u
                || a.v == b.v
                || g.has_edge(a.u, b.v)
                || g.has_edge(b.u, a.v);
            if near {
                prox[e].set(f);
                prox[f].set(e);
            }
        }
    }
    max_independent_set(&prox)
}

/// Branch-and-bound maximum independent set over adjacency bitsets.
fn max_independent_set(adj: &[Bitset]) -> (usize, Vec<usize>) {
    let n = adj.len();
    let mut cand = Bitset::new(n);
    for i in 0..n {
        cand.set(i);
    }
    let mut search = MisSearch {
        adj,
        best: 0,
        best_set: Vec::new(),
        chosen: Vec::new(),
    };
    search.branch(cand);
    let mut set = search.best_set;
    set.sort_unstable();
    (search.best, set)
}

struct MisSearch<'a> {
    adj: &'a [Bitset],
    best: usize,
    best_set: Vec<usize>,
    chosen: Vec<usize>,
}

impl MisSearch<'_> {
    fn branch(&mut self, cand: Bitset) {
        if self.chosen.len() > self.best {
            self.best = self.chosen.len();
            self.best_set = self.chosen.clone();
        }
        if cand.is_empty() {
            return;
        }
        if self.chosen.len() + self.clique_cover_count(&cand) <= self.best {
            return;
        }
        // Branch on the candidate of maximum degree within the candidate
        // set, lowest id among equals.
        let mut pick = usize::MAX;
        let mut pick_deg = 0;
        for v in cand.ones() {
            let deg = self.degree_within(v, &cand);
            if pick == usize::MAX || deg > pick_deg {
                pick = v;
                pick_deg = deg;
            }
        }
        // Include pick.
        let mut with = cand.clone();
        with.clear(pick);
        with.and_not(&self.adj[pick]);
        self.chosen.push(pick);
        self.branch(with);
        self.chosen.pop();
        // Exclude pick.
        let mut without = cand;
        without.clear(pick);
        self.branch(without);
    }

    fn degree_within(&self, v: usize, cand: &Bitset) -> usize {
        cand.ones().filter(|&w| self.adj[v].test(w)).count()
    }

    /// Greedy partition of the candidates into cliques; an independent set
    /// meets each clique at most once, so the count bounds what remains.
    fn clique_cover_count(&self, cand: &Bitset) -> usize {
        let mut cliques: Vec<Vec<usize>> = Vec::new();
        for v in cand.ones() {
            let mut placed = false;
            for clique in &mut cliques {
                if clique.iter().all(|&w| self.adj[v].test(w)) {
                    clique.push(v);
                    placed = true;
                    break;
                }
            }
            if !placed {
                cliques.push(vec![v]);
            }
        }
        cliques.len()
    }
}

/// True if `matched` is an induced matching of `g`: pairwise vertex-disjoint
/// edges with no host edge between endpoints of distinct edges.
pub fn verify_induced_matching(g: &BipartiteGraph, matched: &[EdgeId]) -> bool {
    for (i, &e) in matched.iter().enumerate() {
        let a = g.edge(e);
        for &f in &matched[i + 1..] {
            let b = g.edge(f);
            if a.u == b.u || a.v == b.v || g.has_edge(a.u, b.v) || g.has_edge(b.u, a.v) {
                return false;
            }
        }
    }
    true
}

// ---------------------------------------------------------------------------
// Neighborhood poset, Dilworth width, chain decomposition
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Side {
    U,
    V,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::U => write!(f, "U"),
            Side::V => write!(f, "V"),
        }
    }
}

impl Side {
    fn vertex_count(self, g: &BipartiteGraph) -> usize {
        match self {
            Side::U => g.u_count(),
            Side::V => g.v_count(),
        }
    }

    fn neighborhood(self, g: &BipartiteGraph, idx: usize) -> &[usize] {
        match self {
            Side::U => g.neighbors_u(idx),
            Side::V => g.neighbors_v(idx),
        }
    }
}

/// One equal-neighborhood class of a side.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PosetClass {
    /// Member vertices, ascending.
    pub members: Vec<usize>,
    /// The common neighborhood, ascending.
    pub neighborhood: Vec<usize>,
}

/// Neighborhood-inclusion poset of one side with equal-neighborhood classes
/// collapsed. Collapsing drops multiplicities (they do not affect width) and
/// makes inclusion antisymmetric.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NeighborhoodPoset {
    pub side: Side,
    classes: Vec<PosetClass>,
}

impl NeighborhoodPoset {
    pub fn build(g: &BipartiteGraph, side: Side) -> Self {
        let count = side.vertex_count(g);
        let mut by_neighborhood: std::collections::BTreeMap<Vec<usize>, Vec<usize>> =
            std::collections::BTreeMap::new();
        for x in 0..count {
            by_neighborhood
                .entry(side.neighborhood(g, x).to_vec())
                .or_default()
                .push(x);
        }
        let mut classes: Vec<PosetClass> = by_neighborhood
            .into_iter()
            .map(|(neighborhood, members)| PosetClass {
                members,
                neighborhood,
            })
            .collect();
        // Deterministic class ids: order by lowest member vertex.
        classes.sort_by_key(|c| c.members[0]);
        Self {
            side,
            classes,
        }
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn classes(&self) -> &[PosetClass] {
        &self.classes
    }

    /// Strict dominance: the neighborhood of class `a` is a proper subset of
    /// the neighborhood of class `b`.
    pub fn strictly_below(&self, a: usize, b: usize) -> bool {
        let na = &self.classes[a].neighborhood;
        let nb = &self.classes[b].neighborhood;
        na.len() < nb.len() && sorted_subset(na, nb)
    }

    /// The partial order itself; reflexive, antisymmetric (classes are
    /// distinct sets), and transitive.
    pub fn leq(&self, a: usize, b: usize) -> bool {
        a == b || self.strictly_below(a, b)
    }
}

fn sorted_subset(small: &[usize], big: &[usize]) -> bool {
    let mut it = big.iter();
    'outer: for x in small {
        for y in it.by_ref() {
            if y == x {
                continue 'outer;
            }
            if y > x {
                return false;
            }
        }
        return false;
    }
    true
}

/// Width of a side's neighborhood poset with witnesses: a maximum antichain
/// (one representative vertex per class) and a minimum chain cover of equal
/// size (all side vertices, grouped into inclusion-ordered chains).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WidthResult {
    pub width: usize,
    pub antichain: Vec<usize>,
    pub chains: Vec<Vec<usize>>,
}

/// Dilworth width by the classic reduction: minimum chain cover of the
/// strict-dominance DAG equals classes minus a maximum matching in its
/// bipartite split graph; a maximum antichain falls out of the Koenig vertex
/// cover of that matching.
pub fn dilworth_width(g: &BipartiteGraph, side: Side) -> WidthResult {
    let poset = NeighborhoodPoset::build(g, side);
    let p = poset.class_count();
    if p == 0 {
        return WidthResult {
            width: 0,
            antichain: Vec::new(),
            chains: Vec::new(),
        };
    }
    let adj: Vec<Vec<usize>> = (0..p)
        .map(|a| (0..p).filter(|&b| poset.strictly_below(a, b)).collect())
        .collect();
    let (match_size, match_l, match_r) = max_bipartite_matching(&adj, p);

    // Chains: follow matched links a -> match_l[a].
    let mut is_head = vec![true; p];
    for b in 0..p {
        if match_r[b].is_some() {
            is_head[b] = false;
        }
    }
    let mut chains = Vec::new();
    for (head, _) in is_head.iter().enumerate().filter(|(_, &h)| h) {
        let mut chain = Vec::new();
        let mut cur = head;
        loop {
            chain.extend(poset.classes()[cur].members.iter().copied());
            match match_l[cur] {
                Some(next) => cur = next,
                None => break,
            }
        }
        chains.push(chain);
    }
    debug_assert_eq!(chains.len(), p - match_size);

    // Koenig: alternate from unmatched left vertices; the uncovered classes
    // (left in Z, right not in Z) form a maximum antichain.
    let mut z_left = vec![false; p];
    let mut z_right = vec![false; p];
    let mut queue: Vec<usize> = (0..p).filter(|&a| match_l[a].is_none()).collect();
    for &a in &queue {
        z_left[a] = true;
    }
    while let Some(a) = queue.pop() {
        for &b in &adj[a] {
            if z_right[b] {
                continue;
            }
            z_right[b] = true;
            if let Some(a2) = match_r[b] {
                if !z_left[a2] {
                    z_left[a2] = true;
                    queue.push(a2);
                }
            }
        }
    }
    let antichain: Vec<usize> = (0..p)
        .filter(|&c| z_left[c] && !z_right[c])
        .map(|c| poset.classes()[c].members[0])
        .collect();
    debug_assert_eq!(antichain.len(), p - match_size);

    WidthResult {
        width: p - match_size,
        antichain,
        chains,
    }
}

/// Kuhn's augmenting-path maximum matching; deterministic (ascending order).
fn max_bipartite_matching(
    adj: &[Vec<usize>],
    right_count: usize,
) -> (usize, Vec<Option<usize>>, Vec<Option<usize>>) {
    let n = adj.len();
    let mut match_l = vec![None; n];
    let mut match_r = vec![None; right_count];
    let mut size = 0;

    fn augment(
        a: usize,
        adj: &[Vec<usize>],
        seen: &mut [bool],
        match_l: &mut [Option<usize>],
        match_r: &mut [Option<usize>],
    ) -> bool {
        for &b in &adj[a] {
            if seen[b] {
                continue;
            }
            seen[b] = true;
            let free = match match_r[b] {
                None => true,
                Some(a2) => augment(a2, adj, seen, match_l, match_r),
            };
            if free {
                match_l[a] = Some(b);
                match_r[b] = Some(a);
                return true;
            }
        }
        false
    }

    for a in 0..n {
        let mut seen = vec![false; right_count];
        if augment(a, adj, &mut seen, &mut match_l, &mut match_r) {
            size += 1;
        }
    }
    (size, match_l, match_r)
}

/// Partition of the edge set from a minimum chain cover of `side`: part `i`
/// collects every edge incident to chain `i`. Each part is a chain subgraph
/// because its side-neighborhoods are totally ordered, and the part count
/// equals the width.
pub fn chain_decomposition_partition(g: &BipartiteGraph, side: Side) -> EdgePartition {
    let width = dilworth_width(g, side);
    let parts: Vec<Vec<EdgeId>> = width
        .chains
        .iter()
        .map(|chain| {
            let mut ids = Vec::new();
            for &x in chain {
                match side {
                    Side::U => {
                        for &v in g.neighbors_u(x) {
                            ids.push(g.edge_id(x, v).expect("adjacency is consistent"));
                        }
                    }
                    Side::V => {
                        for &u in g.neighbors_v(x) {
                            ids.push(g.edge_id(u, x).expect("adjacency is consistent"));
                        }
                    }
                }
            }
            ids
        })
        .collect();
    EdgePartition::new(parts)
}

// ---------------------------------------------------------------------------
// Host conflict graph and its exact chromatic number
// ---------------------------------------------------------------------------

/// Graph on host edges: `e = (u, v)` and `f = (u', v')` are adjacent iff
/// `u != u'`, `v != v'`, and both cross pairs `(u, v')`, `(u', v)` are absent
/// from the host. Adjacent edges can never share a chain part, so any proper
/// coloring count lower-bounds the partition number.
#[derive(Clone, Debug)]
pub struct ConflictGraph {
    adj: Vec<Bitset>,
}

impl ConflictGraph {
    pub fn node_count(&self) -> usize {
        self.adj.len()
    }

    pub fn are_adjacent(&self, e: EdgeId, f: EdgeId) -> bool {
        self.adj[e].test(f)
    }

    pub fn degree(&self, e: EdgeId) -> usize {
        self.adj[e].count()
    }

    pub fn neighbors(&self, e: EdgeId) -> impl Iterator<Item = EdgeId> + '_ {
        self.adj[e].ones()
    }

    /// Number of conflict pairs.
    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Bitset::count).sum::<usize>() / 2
    }

    pub(crate) fn adj_bits(&self, e: EdgeId) -> &Bitset {
        &self.adj[e]
    }
}

/// Builds the conflict graph by the direct pair scan over host edges.
pub fn conflict_graph(g: &BipartiteGraph) -> ConflictGraph {
    let m = g.edge_count();
    let mut adj: Vec<Bitset> = (0..m).map(|_| Bitset::new(m)).collect();
    for e in 0..m {
        let a = g.edge(e);
        for f in e + 1..m {
            let b = g.edge(f);
            if a.u != b.u && a.v != b.v && !g.has_edge(a.u, b.v) && !g.has_edge(b.u, a.v) {
                adj[e].set(f);
                adj[f].set(e);
            }
        }
    }
    ConflictGraph { adj }
}

/// Greedy clique in the conflict graph; its size is a cheap sound lower
/// bound on the chromatic number (and hence on the partition number).
pub fn conflict_clique_lower_bound(cg: &ConflictGraph) -> (usize, Vec<usize>) {
    let n = cg.node_count();
    if n == 0 {
        return (0, Vec::new());
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| cg.degree(b).cmp(&cg.degree(a)).then(a.cmp(&b)));
    let mut clique = Vec::new();
    for &v in &order {
        if clique.iter().all(|&w| cg.are_adjacent(v, w)) {
            clique.push(v);
        }
    }
    clique.sort_unstable();
    (clique.len(), clique)
}

/// Exact chromatic number of the conflict graph with a witness coloring,
/// via saturation-ordered branch and bound. An edgeless graph with nodes
/// needs one color; the empty graph needs none.
pub fn conflict_chromatic(cg: &ConflictGraph) -> (usize, Vec<usize>) {
    let n = cg.node_count();
    if n == 0 {
        return (0, Vec::new());
    }
    let (clique_lb, _) = conflict_clique_lower_bound(cg);
    let lb = clique_lb.max(1);
    let (ub, greedy) = dsatur_greedy(cg);
    if lb == ub {
        return (ub, greedy);
    }
    let mut search = ChiSearch {
        cg,
        colors: vec![usize::MAX; n],
        best_k: ub,
        best_colors: greedy,
        lb,
        done: false,
    };
    search.branch(0, 0);
    (search.best_k, search.best_colors)
}

fn dsatur_greedy(cg: &ConflictGraph) -> (usize, Vec<usize>) {
    let n = cg.node_count();
    let mut colors = vec![usize::MAX; n];
    let mut used = 0;
    for _ in 0..n {
        let v = select_dsatur(cg, &colors).expect("an uncolored vertex remains");
        let mut c = 0;
        while cg.neighbors(v).any(|w| colors[w] == c) {
            c += 1;
        }
        colors[v] = c;
        used = used.max(c + 1);
    }
    (used, colors)
}

/// Uncolored vertex maximizing (saturation, degree), lowest id among equals.
fn select_dsatur(cg: &ConflictGraph, colors: &[usize]) -> Option<usize> {
    let n = cg.node_count();
    let mut pick = None;
    let mut pick_key = (0usize, 0usize);
    for v in 0..n {
        if colors[v] != usize::MAX {
            continue;
        }
        let mut seen: Vec<usize> = cg
            .neighbors(v)
            .filter(|&w| colors[w] != usize::MAX)
            .map(|w| colors[w])
            .collect();
        seen.sort_unstable();
        seen.dedup();
        let key = (seen.len(), cg.degree(v));
        if pick.is_none() || key > pick_key {
            pick = Some(v);
            pick_key = key;
        }
    }
    pick
}

struct ChiSearch<'a> {
    cg: &'a ConflictGraph,
    colors: Vec<usize>,
    best_k: usize,
    best_colors: Vec<usize>,
    lb: usize,
    done: bool,
}

impl ChiSearch<'_> {
    fn branch(&mut self, colored: usize, max_used: usize) {
        if self.done {
            return;
        }
        let n = self.cg.node_count();
        if colored == n {
            self.best_k = max_used;
            self.best_colors = self.colors.clone();
            if self.best_k == self.lb {
                self.done = true;
            }
            return;
        }
        let v = select_dsatur(self.cg, &self.colors).expect("uncolored vertex remains");
        // Existing colors, plus one fresh color while staying below best.
        let limit = (max_used + 1).min(self.best_k - 1);
        for c in 0..limit {
            if self.cg.neighbors(v).any(|w| self.colors[w] == c) {
                continue;
            }
            self.colors[v] = c;
            self.branch(colored + 1, max_used.max(c + 1));
            self.colors[v] = usize::MAX;
            if self.done {
                return;
            }
        }
    }
}

/// True if `coloring` is proper on the conflict graph and uses exactly
/// `count` colors `0..count`.
pub fn verify_coloring(cg: &ConflictGraph, coloring: &[usize], count: usize) -> bool {
    if coloring.len() != cg.node_count() {
        return false;
    }
    if coloring.iter().any(|&c| c >= count) {
        return false;
    }
    let mut seen = vec![false; count];
    for &c in coloring {
        seen[c] = true;
    }
    if !seen.into_iter().all(|s| s) {
        return false;
    }
    for e in 0..cg.node_count() {
        for f in cg.neighbors(e) {
            if coloring[e] == coloring[f] {
                return false;
            }
        }
    }
    true
}

// ---------------------------------------------------------------------------
// Bounds report
// ---------------------------------------------------------------------------

/// All bounds for one host graph, with witnesses. `chi_conflict` is present
/// only when the exact chromatic number was requested; the clique bound is
/// always available and is also sound.
#[derive(Clone, Debug)]
pub struct BoundsReport {
    pub nu_ind: usize,
    pub nu_witness: Vec<EdgeId>,
    pub width_u: WidthResult,
    pub width_v: WidthResult,
    pub conflict_clique_lb: usize,
    pub chi_conflict: Option<usize>,
    pub chi_coloring: Option<Vec<usize>>,
    pub upper_side: Side,
    pub upper_partition: EdgePartition,
    pub fp: Option<usize>,
}

impl BoundsReport {
    pub fn fp_lower(&self) -> usize {
        self.nu_ind.max(self.chi_conflict.unwrap_or(self.conflict_clique_lb))
    }

    pub fn fp_upper(&self) -> usize {
        self.width_u.width.min(self.width_v.width)
    }

    /// Attaches a known exact value; a report never contradicts it.
    pub fn set_fp(&mut self, fp: usize) {
        self.fp = Some(fp);
        debug_assert!(self.sandwich_violations(fp).is_empty());
    }

    /// Sandwich checks against a known exact value: the induced matching and
    /// conflict chromatic numbers never exceed it and the min width never
    /// falls below it. The two lower bounds are not compared to each other.
    pub fn sandwich_violations(&self, fp: usize) -> Vec<String> {
        let mut out = Vec::new();
        if self.nu_ind > fp {
            out.push(format!("nu_ind {} exceeds fp {fp}", self.nu_ind));
        }
        if let Some(chi) = self.chi_conflict {
            if chi > fp {
                out.push(format!("chi_conflict {chi} exceeds fp {fp}"));
            }
        }
        if self.conflict_clique_lb > fp {
            out.push(format!(
                "conflict clique bound {} exceeds fp {fp}",
                self.conflict_clique_lb
            ));
        }
        if fp > self.fp_upper() {
            out.push(format!("fp {fp} exceeds min width {}", self.fp_upper()));
        }
        out
    }

    /// Flat `name = value` text block, followed by the upper-bound partition.
    pub fn to_text(&self, g: &BipartiteGraph) -> String {
        let mut out = String::new();
        out.push_str(&format!("edges = {}\n", g.edge_count()));
        out.push_str(&format!("nu_ind = {}\n", self.nu_ind));
        out.push_str(&format!(
            "nu_ind_witness ={}\n",
            self.nu_witness
                .iter()
                .map(|&id| format!(" {}", g.edge(id)))
                .collect::<String>()
        ));
        out.push_str(&format!("width_u = {}\n", self.width_u.width));
        out.push_str(&format!(
            "width_u_antichain = {}\n",
            join_ids(&self.width_u.antichain)
        ));
        out.push_str(&format!("width_v = {}\n", self.width_v.width));
        out.push_str(&format!(
            "width_v_antichain = {}\n",
            join_ids(&self.width_v.antichain)
        ));
        out.push_str(&format!("conflict_clique_lb = {}\n", self.conflict_clique_lb));
        if let Some(chi) = self.chi_conflict {
            out.push_str(&format!("chi_conflict = {chi}\n"));
        }
        if let Some(coloring) = &self.chi_coloring {
            out.push_str(&format!("chi_conflict_coloring = {}\n", join_ids(coloring)));
        }
        if let Some(fp) = self.fp {
            out.push_str(&format!("fp = {fp}\n"));
        }
        out.push_str(&format!("fp_lower = {}\n", self.fp_lower()));
        out.push_str(&format!("fp_upper = {}\n", self.fp_upper()));
        out.push_str(&format!("upper_partition_side = {}\n", self.upper_side));
        out.push('\n');
        out.push_str(&self.upper_partition.to_text(g));
        out
    }
}

fn join_ids(xs: &[usize]) -> String {
    xs.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

/// Computes every bound for `g`. Pass `exact_chi = true` to solve the
/// conflict-graph coloring exactly; otherwise only the clique bound is
/// reported.
pub fn bounds_report(g: &BipartiteGraph, exact_chi: bool) -> Result<BoundsReport> {
    let (nu_ind, nu_witness) = induced_matching_number(g);
    let width_u = dilworth_width(g, Side::U);
    let width_v = dilworth_width(g, Side::V);
    let cg = conflict_graph(g);
    let (conflict_clique_lb, _) = conflict_clique_lower_bound(&cg);
    let (chi_conflict, chi_coloring) = if exact_chi {
        let (chi, coloring) = conflict_chromatic(&cg);
        (Some(chi), Some(coloring))
    } else {
        (None, None)
    };
    let upper_side = if width_u.width <= width_v.width {
        Side::U
    } else {
        Side::V
    };
    let upper_partition = chain_decomposition_partition(g, upper_side);
    Ok(BoundsReport {
        nu_ind,
        nu_witness,
        width_u,
        width_v,
        conflict_clique_lb,
        chi_conflict,
        chi_coloring,
        upper_side,
        upper_partition,
        fp: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::FamilySpec;
    use crate::recognition::is_ferrers;

    fn gen(spec: FamilySpec) -> BipartiteGraph {
        spec.generate().unwrap()
    }

    /// Exhaustive induced-matching oracle over all edge subsets.
    fn nu_bruteforce(g: &BipartiteGraph) -> usize {
        let m = g.edge_count();
        assert!(m <= 16);
        let mut best = 0;
        for mask in 0u32..(1 << m) {
            let set: Vec<EdgeId> = (0..m).filter(|&i| mask >> i & 1 == 1).collect();
            if verify_induced_matching(g, &set) {
                best = best.max(set.len());
            }
        }
        best
    }

    #[test]
    fn nu_examples() {
        let cases = [
            (FamilySpec::Cycle(8), 2),
            (FamilySpec::Ladder(5), 3),
            (FamilySpec::Path(2), 1),
            (FamilySpec::Path(7), 2),
        ];
        for (spec, expect) in cases {
            let g = gen(spec.clone());
            let (nu, witness) = induced_matching_number(&g);
            assert_eq!(nu, expect, "nu_ind({spec})");
            assert_eq!(witness.len(), nu);
            assert!(verify_induced_matching(&g, &witness));
        }
    }

    #[test]
    fn nu_matches_bruteforce_on_small_families() {
        for spec in [
            FamilySpec::Path(6),
            FamilySpec::Cycle(8),
            FamilySpec::Ladder(4),
            FamilySpec::Crown(3),
            FamilySpec::CompleteMinusMatching { m: 3, n: 4, t: 2 },
        ] {
            let g = gen(spec.clone());
            assert_eq!(
                induced_matching_number(&g).0,
                nu_bruteforce(&g),
                "oracle mismatch on {spec}"
            );
        }
    }

    #[test]
    fn nu_empty_graph_is_zero() {
        let g = BipartiteGraph::new(3, 3, Vec::new()).unwrap();
        assert_eq!(induced_matching_number(&g), (0, vec![]));
    }

    /// Exhaustive antichain oracle over the collapsed classes.
    fn width_bruteforce(g: &BipartiteGraph, side: Side) -> usize {
        let poset = NeighborhoodPoset::build(g, side);
        let p = poset.class_count();
        assert!(p <= 16);
        let mut best = 0;
        for mask in 0u32..(1 << p) {
            let picked: Vec<usize> = (0..p).filter(|&i| mask >> i & 1 == 1).collect();
            let ok = picked.iter().enumerate().all(|(i, &a)| {
                picked[i + 1..]
                    .iter()
                    .all(|&b| !poset.strictly_below(a, b) && !poset.strictly_below(b, a))
            });
            if ok {
                best = best.max(picked.len());
            }
        }
        best
    }

    #[test]
    fn width_examples() {
        assert_eq!(dilworth_width(&gen(FamilySpec::Crown(5)), Side::U).width, 5);
        let k34 = gen(FamilySpec::CompleteMinusMatching { m: 3, n: 4, t: 0 });
        assert_eq!(dilworth_width(&k34, Side::U).width, 1);
        let p6 = gen(FamilySpec::Path(6));
        assert_eq!(dilworth_width(&p6, Side::U).width, 2);
        assert_eq!(width_bruteforce(&p6, Side::U), 2);
    }

    #[test]
    fn width_matches_bruteforce() {
        for spec in [
            FamilySpec::Path(7),
            FamilySpec::Cycle(8),
            FamilySpec::Ladder(5),
            FamilySpec::Crown(4),
            FamilySpec::CompleteMinusMatching { m: 4, n: 4, t: 3 },
            FamilySpec::DisjointUnion(vec![FamilySpec::Path(4), FamilySpec::Path(3)]),
        ] {
            let g = gen(spec.clone());
            for side in [Side::U, Side::V] {
                let got = dilworth_width(&g, side);
                assert_eq!(got.width, width_bruteforce(&g, side), "width on {spec} {side}");
                assert_eq!(got.antichain.len(), got.width);
                assert_eq!(got.chains.len(), got.width);
            }
        }
    }

    #[test]
    fn antichain_members_pairwise_incomparable() {
        let g = gen(FamilySpec::Ladder(6));
        let got = dilworth_width(&g, Side::U);
        for (i, &a) in got.antichain.iter().enumerate() {
            for &b in &got.antichain[i + 1..] {
                let na = g.neighbors_u(a);
                let nb = g.neighbors_u(b);
                assert!(!sorted_subset(na, nb) && !sorted_subset(nb, na));
            }
        }
    }

    #[test]
    fn chain_partition_crown4_is_four_stars() {
        let g = gen(FamilySpec::Crown(4));
        let p = chain_decomposition_partition(&g, Side::U);
        assert_eq!(p.part_count(), 4);
        for part in p.parts() {
            assert_eq!(part.len(), 3);
            let us: Vec<usize> = part.iter().map(|&id| g.edge(id).u).collect();
            assert!(us.windows(2).all(|w| w[0] == w[1]), "each part is a star");
            assert!(is_ferrers(&g, part).unwrap().is_ferrers());
        }
    }

    #[test]
    fn chain_partition_complete_is_single_part() {
        let g = gen(FamilySpec::CompleteMinusMatching { m: 3, n: 5, t: 0 });
        let p = chain_decomposition_partition(&g, Side::U);
        assert_eq!(p.part_count(), 1);
        assert_eq!(p.part(0).len(), g.edge_count());
    }

    #[test]
    fn chain_partition_path7_two_chain_parts() {
        let g = gen(FamilySpec::Path(7));
        let p = chain_decomposition_partition(&g, Side::U);
        assert_eq!(p.part_count(), 2);
        for part in p.parts() {
            assert!(is_ferrers(&g, part).unwrap().is_ferrers());
        }
        assert_eq!(p.assigned_count(), g.edge_count());
    }

    /// Brute-force conflict pairs straight from the definition.
    fn conflict_pairs_bruteforce(g: &BipartiteGraph) -> Vec<(EdgeId, EdgeId)> {
        let m = g.edge_count();
        let mut pairs = Vec::new();
        for e in 0..m {
            for f in e + 1..m {
                let a = g.edge(e);
                let b = g.edge(f);
                if a.u != b.u && a.v != b.v && !g.has_edge(a.u, b.v) && !g.has_edge(b.u, a.v) {
                    pairs.push((e, f));
                }
            }
        }
        pairs
    }

    #[test]
    fn conflict_k22_is_edgeless() {
        let g = gen(FamilySpec::CompleteMinusMatching { m: 2, n: 2, t: 0 });
        let cg = conflict_graph(&g);
        assert_eq!(cg.edge_count(), 0);
        assert_eq!(conflict_chromatic(&cg).0, 1);
    }

    #[test]
    fn conflict_p5_single_pair_of_end_edges() {
        let g = gen(FamilySpec::Path(5));
        let cg = conflict_graph(&g);
        let pairs = conflict_pairs_bruteforce(&g);
        assert_eq!(pairs.len(), 1);
        assert_eq!(cg.edge_count(), 1);
        let (e, f) = pairs[0];
        assert!(cg.are_adjacent(e, f));
        let a = crate::graph::path_edge_id(&g, 0).unwrap();
        let b = crate::graph::path_edge_id(&g, 3).unwrap();
        assert_eq!((e.min(f), e.max(f)), (a.min(b), a.max(b)));
        assert_eq!(conflict_chromatic(&cg).0, 2);
    }

    #[test]
    fn conflict_two_disjoint_edges() {
        let g = gen(FamilySpec::DisjointUnion(vec![
            FamilySpec::Path(2),
            FamilySpec::Path(2),
        ]));
        let cg = conflict_graph(&g);
        assert_eq!(cg.edge_count(), 1);
    }

    #[test]
    fn conflict_chromatic_crown4_is_two() {
        let g = gen(FamilySpec::Crown(4));
        let cg = conflict_graph(&g);
        let (chi, coloring) = conflict_chromatic(&cg);
        assert_eq!(chi, 2);
        assert!(verify_coloring(&cg, &coloring, chi));
    }

    #[test]
    fn conflict_chromatic_empty_and_edgeless() {
        let g = BipartiteGraph::new(1, 1, Vec::new()).unwrap();
        assert_eq!(conflict_chromatic(&conflict_graph(&g)).0, 0);
        let g = gen(FamilySpec::CompleteMinusMatching { m: 2, n: 3, t: 0 });
        assert_eq!(conflict_chromatic(&conflict_graph(&g)).0, 1);
    }

    #[test]
    fn clique_bound_never_exceeds_chromatic() {
        for spec in [
            FamilySpec::Cycle(10),
            FamilySpec::Ladder(5),
            FamilySpec::Crown(4),
            FamilySpec::Path(9),
        ] {
            let cg = conflict_graph(&gen(spec));
            let (lb, clique) = conflict_clique_lower_bound(&cg);
            for (i, &a) in clique.iter().enumerate() {
                for &b in &clique[i + 1..] {
                    assert!(cg.are_adjacent(a, b));
                }
            }
            let (chi, coloring) = conflict_chromatic(&cg);
            assert!(lb <= chi);
            assert!(verify_coloring(&cg, &coloring, chi));
        }
    }

    #[test]
    fn report_text_has_expected_lines() {
        let g = gen(FamilySpec::Crown(4));
        let report = bounds_report(&g, true).unwrap();
        let text = report.to_text(&g);
        assert!(text.contains("nu_ind = 2"));
        assert!(text.contains("width_u = 4"));
        assert!(text.contains("width_v = 4"));
        assert!(text.contains("chi_conflict = 2"));
        assert!(text.contains("fp_lower = 2"));
        assert!(text.contains("fp_upper = 4"));
    }

    #[test]
    fn poset_order_laws() {
        let g = gen(FamilySpec::CompleteMinusMatching { m: 4, n: 5, t: 3 });
        let poset = NeighborhoodPoset::build(&g, Side::U);
        let p = poset.class_count();
        for a in 0..p {
            assert!(poset.leq(a, a));
            for b in 0..p {
                if a != b && poset.leq(a, b) {
                    assert!(!poset.leq(b, a), "antisymmetry");
                }
                for c in 0..p {
                    if poset.leq(a, b) && poset.leq(b, c) {
                        assert!(poset.leq(a, c), "transitivity");
                    }
                }
            }
        }
    }

    #[test]
    fn ladder_width_is_n_minus_2() {
        // The middle tridiagonal rows are pairwise incomparable; the two end
        // rows nest into their neighbors.
        for n in 4..=8 {
            let g = gen(FamilySpec::Ladder(n));
            assert_eq!(dilworth_width(&g, Side::U).width, n - 2);
            assert_eq!(dilworth_width(&g, Side::V).width, n - 2);
        }
    }
}

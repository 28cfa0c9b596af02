//! Bipartite host graphs, deterministic family generators, and text I/O.
//!
//! A [`BipartiteGraph`] keeps its two sides as separate 0-based index spaces
//! and stores edges sorted lexicographically by `(u, v)`; the position of an
//! edge in that order is its dense [`EdgeId`]. Everything downstream (parts,
//! partitions, conflict graphs) refers to edges through these ids, so the
//! ordering is part of the public contract.

use std::fmt;

use crate::error::{Error, Result};

/// Dense edge handle; ids enumerate the edge set in `(u, v)` lexicographic
/// order and form a bijection onto `0..edge_count`.
pub type EdgeId = usize;

/// One host edge, `u` on the U side and `v` on the V side.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.u, self.v)
    }
}

/// Immutable bipartite graph. Safe to share between worker threads.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BipartiteGraph {
    u_count: usize,
    v_count: usize,
    edges: Vec<Edge>,
    adj_u: Vec<Vec<usize>>,
    adj_v: Vec<Vec<usize>>,
    // Prefix sums of U-side degrees; edge id = u_offsets[u] + rank of v in adj_u[u].
    u_offsets: Vec<usize>,
}

impl BipartiteGraph {
    /// Builds a graph from an edge list. Rejects duplicate edges and
    /// out-of-range endpoints.
    pub fn new(
        u_count: usize,
        v_count: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let mut list: Vec<(usize, usize)> = edges.into_iter().collect();
        list.sort_unstable();
        for pair in list.windows(2) {
            if pair[0] == pair[1] {
                return Err(Error::DuplicateEdge {
                    u: pair[0].0,
                    v: pair[0].1,
                });
            }
        }
        let mut adj_u = vec![Vec::new(); u_count];
        let mut adj_v = vec![Vec::new(); v_count];
        for &(u, v) in &list {
            if u >= u_count || v >= v_count {
                return Err(Error::VertexOutOfRange { u, v });
            }
            adj_u[u].push(v);
            adj_v[v].push(u);
        }
        let mut u_offsets = Vec::with_capacity(u_count + 1);
        let mut acc = 0;
        u_offsets.push(0);
        for list in &adj_u {
            acc += list.len();
            u_offsets.push(acc);
        }
        Ok(Self {
            u_count,
            v_count,
            edges: list.into_iter().map(|(u, v)| Edge { u, v }).collect(),
            adj_u,
            adj_v,
            u_offsets,
        })
    }

    pub fn u_count(&self) -> usize {
        self.u_count
    }

    pub fn v_count(&self) -> usize {
        self.v_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// All edges in id order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// The edge with the given id. Panics if `id` is out of range.
    pub fn edge(&self, id: EdgeId) -> Edge {
        self.edges[id]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_id(u, v).is_some()
    }

    /// Id of edge `(u, v)` if present.
    pub fn edge_id(&self, u: usize, v: usize) -> Option<EdgeId> {
        if u >= self.u_count {
            return None;
        }
        self.adj_u[u]
            .binary_search(&v)
            .ok()
            .map(|rank| self.u_offsets[u] + rank)
    }

    /// Neighbors of U-side vertex `u`, sorted ascending.
    pub fn neighbors_u(&self, u: usize) -> &[usize] {
        &self.adj_u[u]
    }

    /// Neighbors of V-side vertex `v`, sorted ascending.
    pub fn neighbors_v(&self, v: usize) -> &[usize] {
        &self.adj_v[v]
    }

    /// Validates a slice of edge ids and returns them sorted and deduplicated.
    pub(crate) fn check_part(&self, part: &[EdgeId]) -> Result<Vec<EdgeId>> {
        let mut ids = part.to_vec();
        ids.sort_unstable();
        ids.dedup();
        if let Some(&id) = ids.last() {
            if id >= self.edges.len() {
                return Err(Error::EdgeIdOutOfRange {
                    id,
                    count: self.edges.len(),
                });
            }
        }
        Ok(ids)
    }
}

// ---------------------------------------------------------------------------
// Family generators
// ---------------------------------------------------------------------------

/// Descriptions of the named graph families.
///
/// Labeling conventions are fixed so that generation is bit-stable:
///
/// - `Path(n)`: path vertices `0..n`; vertex `i` is on the U side iff `i` is
///   even, with dense per-side indices in vertex order.
/// - `Cycle(n)` (`n` even, `n >= 4`): same alternation with wraparound.
/// - `Ladder(n)`: two rails of `n` columns plus one rung per column; the top
///   vertex of column `i` (1-based) is on U iff `i` is odd, the bottom vertex
///   iff `i` is even. Column `i` contributes u-index and v-index `i - 1`, so
///   the adjacency matrix is tridiagonal.
/// - `Crown(n)`: complete bipartite `n x n` minus the perfect matching
///   `{(i, i)}`.
/// - `CompleteMinusMatching { m, n, t }`: complete bipartite `m x n` minus
///   `{(i, i) : i < t}`, requiring `t <= min(m, n)`.
/// - `DisjointUnion`: concatenates the index spaces of its members in order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Ladder(usize),
    Crown(usize),
    CompleteMinusMatching { m: usize, n: usize, t: usize },
    DisjointUnion(Vec<FamilySpec>),
}

impl FamilySpec {
    pub fn validate(&self) -> Result<()> {
        match *self {
            FamilySpec::Path(n) | FamilySpec::Ladder(n) | FamilySpec::Crown(n) => {
                if n == 0 {
                    return Err(Error::InvalidFamily(format!(
                        "{} size must be positive",
                        self.kind_name()
                    )));
                }
            }
            FamilySpec::Cycle(n) => {
                if n < 4 || n % 2 != 0 {
                    return Err(Error::InvalidFamily(format!(
                        "cycle length must be even and at least 4, got {n}"
                    )));
                }
            }
            FamilySpec::CompleteMinusMatching { m, n, t } => {
                if m == 0 || n == 0 {
                    return Err(Error::InvalidFamily(
                        "complete-minus-matching sides must be positive".into(),
                    ));
                }
                if t > m.min(n) {
                    return Err(Error::InvalidFamily(format!(
                        "matching size {t} exceeds min({m}, {n})"
                    )));
                }
            }
            FamilySpec::DisjointUnion(ref parts) => {
                if parts.is_empty() {
                    return Err(Error::InvalidFamily("empty disjoint union".into()));
                }
                for p in parts {
                    p.validate()?;
                }
            }
        }
        Ok(())
    }

    pub fn kind_name(&self) -> &'static str {
        match self {
            FamilySpec::Path(_) => "path",
            FamilySpec::Cycle(_) => "cycle",
            FamilySpec::Ladder(_) => "ladder",
            FamilySpec::Crown(_) => "crown",
            FamilySpec::CompleteMinusMatching { .. } => "kmn-minus-matching",
            FamilySpec::DisjointUnion(_) => "union",
        }
    }

    /// Generates the labeled graph for this family. Deterministic: equal
    /// specs produce identical edge id orderings.
    pub fn generate(&self) -> Result<BipartiteGraph> {
        self.validate()?;
        let (u_count, v_count, edges) = self.build();
        BipartiteGraph::new(u_count, v_count, edges)
    }

    fn build(&self) -> (usize, usize, Vec<(usize, usize)>) {
        match *self {
            FamilySpec::Path(n) => {
                let mut edges = Vec::new();
                for i in 0..n.saturating_sub(1) {
                    edges.push(path_edge(i));
                }
                (n.div_ceil(2), n / 2, edges)
            }
            FamilySpec::Cycle(n) => {
                let mut edges = Vec::new();
                for i in 0..n {
                    let a = i;
                    let b = (i + 1) % n;
                    let (x, y) = if a.is_multiple_of(2) { (a, b) } else { (b, a) };
                    edges.push((x / 2, (y - 1) / 2));
                }
                (n / 2, n / 2, edges)
            }
            FamilySpec::Ladder(n) => {
                let mut edges = Vec::new();
                for a in 0..n {
                    edges.push((a, a));
                }
                for a in 0..n.saturating_sub(1) {
                    edges.push((a, a + 1));
                    edges.push((a + 1, a));
                }
                (n, n, edges)
            }
            FamilySpec::Crown(n) => {
                let mut edges = Vec::new();
                for i in 0..n {
                    for j in 0..n {
                        if i != j {
                            edges.push((i, j));
                        }
                    }
                }
                (n, n, edges)
            }
            FamilySpec::CompleteMinusMatching { m, n, t } => {
                let mut edges = Vec::new();
                for i in 0..m {
                    for j in 0..n {
                        if !(i == j && i < t) {
                            edges.push((i, j));
                        }
                    }
                }
                (m, n, edges)
            }
            FamilySpec::DisjointUnion(ref parts) => {
                let mut u_count = 0;
                let mut v_count = 0;
                let mut edges = Vec::new();
                for p in parts {
                    let (uc, vc, sub) = p.build();
                    edges.extend(sub.into_iter().map(|(u, v)| (u + u_count, v + v_count)));
                    u_count += uc;
                    v_count += vc;
                }
                (u_count, v_count, edges)
            }
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::Path(n) => write!(f, "path:{n}"),
            FamilySpec::Cycle(n) => write!(f, "cycle:{n}"),
            FamilySpec::Ladder(n) => write!(f, "ladder:{n}"),
            FamilySpec::Crown(n) => write!(f, "crown:{n}"),
            FamilySpec::CompleteMinusMatching { m, n, t } => write!(f, "kmn:{m},{n},{t}"),
            FamilySpec::DisjointUnion(ref parts) => {
                write!(f, "union(")?;
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        write!(f, " ")?;
                    }
                    write!(f, "{p}")?;
                }
                write!(f, ")")
            }
        }
    }
}

/// Endpoints of the `i`-th path edge (between path vertices `i` and `i + 1`)
/// under the alternating side convention.
fn path_edge(i: usize) -> (usize, usize) {
    if i.is_multiple_of(2) {
        (i / 2, i / 2)
    } else {
        (i.div_ceil(2), (i - 1) / 2)
    }
}

/// Id of the `i`-th edge along a generated path, counted from vertex 0.
pub fn path_edge_id(g: &BipartiteGraph, i: usize) -> Option<EdgeId> {
    let (u, v) = path_edge(i);
    g.edge_id(u, v)
}

/// Id of the `i`-th edge around a generated even cycle, counted from vertex 0.
pub fn cycle_edge_id(g: &BipartiteGraph, n: usize, i: usize) -> Option<EdgeId> {
    let a = i;
    let b = (i + 1) % n;
    let (x, y) = if a.is_multiple_of(2) { (a, b) } else { (b, a) };
    g.edge_id(x / 2, (y - 1) / 2)
}

// ---------------------------------------------------------------------------
// Matrix view
// ---------------------------------------------------------------------------

/// Dense 0/1 view of the bipartite adjacency matrix (rows = U, columns = V).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MatrixView {
    rows: usize,
    cols: usize,
    bits: Vec<bool>,
}

impl MatrixView {
    pub fn new(rows: usize, cols: usize, bits: Vec<bool>) -> Self {
        assert_eq!(bits.len(), rows * cols, "matrix bit vector has wrong length");
        Self { rows, cols, bits }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.bits[i * self.cols + j]
    }

    /// Length of the leading run of ones in row `i`.
    pub fn prefix_len(&self, i: usize) -> usize {
        (0..self.cols).take_while(|&j| self.get(i, j)).count()
    }

    /// True if every row is a prefix of ones and prefix lengths weakly
    /// decrease from top to bottom.
    pub fn is_staircase(&self) -> bool {
        let mut prev = self.cols;
        for i in 0..self.rows {
            let p = self.prefix_len(i);
            if (p..self.cols).any(|j| self.get(i, j)) || p > prev {
                return false;
            }
            prev = p;
        }
        true
    }

    /// One line of contiguous `0`/`1` characters per row, newline-terminated.
    pub fn to_text(&self) -> String {
        let mut out = String::with_capacity(self.rows * (self.cols + 1));
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.push(if self.get(i, j) { '1' } else { '0' });
            }
            out.push('\n');
        }
        out
    }

    /// Parses the row-per-line 0/1 format. All rows must have equal length;
    /// blank and `#` comment lines are skipped.
    pub fn parse(text: &str) -> Result<Self> {
        let mut rows = Vec::new();
        let mut width = None;
        for (idx, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut row = Vec::with_capacity(line.len());
            for ch in line.chars() {
                match ch {
                    '0' => row.push(false),
                    '1' => row.push(true),
                    _ => {
                        return Err(Error::Parse {
                            line: idx + 1,
                            message: format!("unexpected character {ch:?} in matrix row"),
                        })
                    }
                }
            }
            match width {
                None => width = Some(row.len()),
                Some(w) if w != row.len() => {
                    return Err(Error::Parse {
                        line: idx + 1,
                        message: format!("ragged matrix row: expected {} columns, got {}", w, row.len()),
                    })
                }
                _ => {}
            }
            rows.push(row);
        }
        let cols = width.unwrap_or(0);
        let bits = rows.concat();
        Ok(Self {
            rows: rows.len(),
            cols,
            bits,
        })
    }
}

impl BipartiteGraph {
    pub fn to_matrix(&self) -> MatrixView {
        let mut bits = vec![false; self.u_count * self.v_count];
        for e in &self.edges {
            bits[e.u * self.v_count + e.v] = true;
        }
        MatrixView::new(self.u_count, self.v_count, bits)
    }

    pub fn from_matrix(m: &MatrixView) -> Self {
        let mut edges = Vec::new();
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                if m.get(i, j) {
                    edges.push((i, j));
                }
            }
        }
        // Cannot fail: indices are in range and distinct by construction.
        BipartiteGraph::new(m.rows(), m.cols(), edges).expect("matrix always yields a valid graph")
    }
}

// ---------------------------------------------------------------------------
// Edge-list text format
// ---------------------------------------------------------------------------

impl BipartiteGraph {
    /// Serializes to the edge-list text format:
    /// `bip <u_count> <v_count>` followed by one `<u> <v>` line per edge in
    /// id order. Newline-terminated ASCII.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("bip {} {}\n", self.u_count, self.v_count);
        for e in &self.edges {
            out.push_str(&format!("{} {}\n", e.u, e.v));
        }
        out
    }

    /// Parses the edge-list format. `#` starts a comment line; blank lines
    /// are ignored. Duplicate edges and out-of-range indices are rejected.
    pub fn parse_edge_list(text: &str) -> Result<Self> {
        let mut header: Option<(usize, usize)> = None;
        let mut edges = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut tok = line.split_whitespace();
            if header.is_none() {
                if tok.next() != Some("bip") {
                    return Err(Error::Parse {
                        line: idx + 1,
                        message: "expected header `bip <u_count> <v_count>`".into(),
                    });
                }
                let u = parse_usize(tok.next(), idx + 1, "u_count")?;
                let v = parse_usize(tok.next(), idx + 1, "v_count")?;
                if tok.next().is_some() {
                    return Err(Error::Parse {
                        line: idx + 1,
                        message: "trailing tokens after header".into(),
                    });
                }
                header = Some((u, v));
                continue;
            }
            let (u_count, v_count) = header.unwrap();
            let u = parse_usize(tok.next(), idx + 1, "u index")?;
            let v = parse_usize(tok.next(), idx + 1, "v index")?;
            if tok.next().is_some() {
                return Err(Error::Parse {
                    line: idx + 1,
                    message: "trailing tokens after edge".into(),
                });
            }
            if u >= u_count || v >= v_count {
                return Err(Error::Parse {
                    line: idx + 1,
                    message: format!("edge ({u}, {v}) out of range for bip {u_count} {v_count}"),
                });
            }
            edges.push((u, v));
        }
        let (u_count, v_count) = header.ok_or(Error::Parse {
            line: 1,
            message: "missing `bip` header".into(),
        })?;
        BipartiteGraph::new(u_count, v_count, edges)
    }

    /// Accepts either the edge-list format (leading `bip` header) or the
    /// plain 0/1 matrix format.
    pub fn parse_auto(text: &str) -> Result<Self> {
        let first = text
            .lines()
            .map(str::trim)
            .find(|l| !l.is_empty() && !l.starts_with('#'));
        match first {
            Some(l) if l.starts_with("bip") => Self::parse_edge_list(text),
            Some(l) if l.chars().all(|c| c == '0' || c == '1') => {
                Ok(Self::from_matrix(&MatrixView::parse(text)?))
            }
            Some(_) => Err(Error::Parse {
                line: 1,
                message: "expected `bip` header or 0/1 matrix rows".into(),
            }),
            None => Err(Error::Parse {
                line: 1,
                message: "empty input".into(),
            }),
        }
    }
}

fn parse_usize(tok: Option<&str>, line: usize, what: &str) -> Result<usize> {
    let tok = tok.ok_or_else(|| Error::Parse {
        line,
        message: format!("missing {what}"),
    })?;
    tok.parse().map_err(|_| Error::Parse {
        line,
        message: format!("invalid {what}: {tok:?}"),
    })
}

// ---------------------------------------------------------------------------
// Connected components
// ---------------------------------------------------------------------------

/// One connected component; isolated vertices form singleton components.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Component {
    pub u_vertices: Vec<usize>,
    pub v_vertices: Vec<usize>,
    pub edge_ids: Vec<EdgeId>,
}

impl Component {
    /// True if the component contains at least one edge.
    pub fn has_edges(&self) -> bool {
        !self.edge_ids.is_empty()
    }
}

impl BipartiteGraph {
    /// Connected components in order of their smallest vertex (U side first).
    pub fn components(&self) -> Vec<Component> {
        let total = self.u_count + self.v_count;
        let mut seen = vec![false; total];
        let mut comps = Vec::new();
        for seed in 0..total {
            if seen[seed] {
                continue;
            }
            let mut us = Vec::new();
            let mut vs = Vec::new();
            let mut stack = vec![seed];
            seen[seed] = true;
            while let Some(x) = stack.pop() {
                if x < self.u_count {
                    us.push(x);
                    for &v in &self.adj_u[x] {
                        let key = self.u_count + v;
                        if !seen[key] {
                            seen[key] = true;
                            stack.push(key);
                        }
                    }
                } else {
                    let v = x - self.u_count;
                    vs.push(v);
                    for &u in &self.adj_v[v] {
                        if !seen[u] {
                            seen[u] = true;
                            stack.push(u);
                        }
                    }
                }
            }
            us.sort_unstable();
            vs.sort_unstable();
            let mut edge_ids = Vec::new();
            for &u in &us {
                edge_ids.extend(self.u_offsets[u]..self.u_offsets[u + 1]);
            }
            comps.push(Component {
                u_vertices: us,
                v_vertices: vs,
                edge_ids,
            });
        }
        comps
    }

    /// Extracts a component as a standalone graph with compacted indices.
    /// Returns the subgraph and the map from local edge ids back to ids in
    /// `self` (local ids enumerate `component.edge_ids` in order).
    pub fn component_subgraph(&self, comp: &Component) -> (BipartiteGraph, Vec<EdgeId>) {
        let mut u_local = vec![usize::MAX; self.u_count];
        let mut v_local = vec![usize::MAX; self.v_count];
        for (i, &u) in comp.u_vertices.iter().enumerate() {
            u_local[u] = i;
        }
        for (i, &v) in comp.v_vertices.iter().enumerate() {
            v_local[v] = i;
        }
        let edges: Vec<(usize, usize)> = comp
            .edge_ids
            .iter()
            .map(|&id| {
                let e = self.edges[id];
                (u_local[e.u], v_local[e.v])
            })
            .collect();
        let sub = BipartiteGraph::new(comp.u_vertices.len(), comp.v_vertices.len(), edges)
            .expect("component edges are valid by construction");
        // comp.edge_ids is sorted by (u, v) and the index maps are monotone,
        // so local id i corresponds to comp.edge_ids[i].
        (sub, comp.edge_ids.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gen(spec: FamilySpec) -> BipartiteGraph {
        spec.generate().unwrap()
    }

    #[test]
    fn crown3_counts_and_degrees() {
        let g = gen(FamilySpec::Crown(3));
        assert_eq!(g.u_count() + g.v_count(), 6);
        assert_eq!(g.edge_count(), 6);
        for u in 0..3 {
            assert_eq!(g.neighbors_u(u).len(), 2);
        }
    }

    #[test]
    fn path2_single_edge() {
        let g = gen(FamilySpec::Path(2));
        assert_eq!((g.u_count(), g.v_count(), g.edge_count()), (1, 1, 1));
        assert_eq!(g.edge(0), Edge { u: 0, v: 0 });
    }

    #[test]
    fn kmn_full_matching_is_crown() {
        let a = gen(FamilySpec::CompleteMinusMatching { m: 4, n: 4, t: 4 });
        let b = gen(FamilySpec::Crown(4));
        assert_eq!(a, b);
        assert_eq!(a.edge_count(), 12);
    }

    #[test]
    fn family_size_formulas() {
        for n in 1..=12 {
            assert_eq!(gen(FamilySpec::Path(n)).edge_count(), n - 1);
            assert_eq!(gen(FamilySpec::Ladder(n)).edge_count(), 3 * n - 2);
            assert_eq!(gen(FamilySpec::Crown(n)).edge_count(), n * (n - 1));
        }
        for n in (4..=14).step_by(2) {
            assert_eq!(gen(FamilySpec::Cycle(n)).edge_count(), n);
        }
    }

    #[test]
    fn generate_is_deterministic() {
        let spec = FamilySpec::DisjointUnion(vec![
            FamilySpec::Cycle(8),
            FamilySpec::Crown(4),
            FamilySpec::Ladder(3),
        ]);
        assert_eq!(spec.generate().unwrap(), spec.generate().unwrap());
    }

    #[test]
    fn invalid_specs_rejected() {
        assert!(FamilySpec::Cycle(7).generate().is_err());
        assert!(FamilySpec::Cycle(2).generate().is_err());
        assert!(FamilySpec::CompleteMinusMatching { m: 3, n: 2, t: 3 }
            .generate()
            .is_err());
        assert!(FamilySpec::Path(0).generate().is_err());
        assert!(FamilySpec::DisjointUnion(vec![]).generate().is_err());
    }

    #[test]
    fn edge_ids_are_lexicographic() {
        let g = gen(FamilySpec::Crown(3));
        let pairs: Vec<(usize, usize)> = g.edges().iter().map(|e| (e.u, e.v)).collect();
        let mut sorted = pairs.clone();
        sorted.sort_unstable();
        assert_eq!(pairs, sorted);
        for (id, e) in g.edges().iter().enumerate() {
            assert_eq!(g.edge_id(e.u, e.v), Some(id));
        }
        assert_eq!(g.edge_id(0, 0), None);
    }

    #[test]
    fn parse_k11_and_k22() {
        let g = BipartiteGraph::parse_edge_list("bip 1 1\n0 0\n").unwrap();
        assert_eq!((g.u_count(), g.v_count(), g.edge_count()), (1, 1, 1));
        let g = BipartiteGraph::parse_edge_list("bip 2 2\n0 0\n0 1\n1 0\n1 1\n").unwrap();
        assert_eq!(g.edge_count(), 4);
    }

    #[test]
    fn edge_list_round_trip() {
        let g = gen(FamilySpec::Crown(4));
        let parsed = BipartiteGraph::parse_edge_list(&g.to_edge_list()).unwrap();
        assert_eq!(g, parsed);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            BipartiteGraph::parse_edge_list("graph 2 2\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            BipartiteGraph::parse_edge_list("bip 2 2\n0 5\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            BipartiteGraph::parse_edge_list("bip 2 2\n0 0\n0 0\n"),
            Err(Error::DuplicateEdge { u: 0, v: 0 })
        ));
        assert!(BipartiteGraph::parse_edge_list("").is_err());
        // Comments and blank lines are fine.
        let g = BipartiteGraph::parse_edge_list("# a graph\n\nbip 1 1\n# edge\n0 0\n").unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn crown4_matrix_is_all_ones_minus_diagonal() {
        let m = gen(FamilySpec::Crown(4)).to_matrix();
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(m.get(i, j), i != j);
            }
        }
    }

    #[test]
    fn empty_graph_zero_matrix() {
        let g = BipartiteGraph::new(2, 2, Vec::new()).unwrap();
        let m = g.to_matrix();
        assert!((0..2).all(|i| (0..2).all(|j| !m.get(i, j))));
    }

    #[test]
    fn matrix_round_trip() {
        let g = gen(FamilySpec::Ladder(4));
        assert_eq!(BipartiteGraph::from_matrix(&g.to_matrix()), g);
    }

    #[test]
    fn matrix_parse_rejects_ragged_and_junk() {
        assert!(matches!(
            MatrixView::parse("101\n10\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(MatrixView::parse("10x\n").is_err());
        let m = MatrixView::parse("110\n011\n").unwrap();
        assert_eq!((m.rows(), m.cols()), (2, 3));
    }

    #[test]
    fn auto_detects_both_formats() {
        let g = gen(FamilySpec::Crown(3));
        assert_eq!(BipartiteGraph::parse_auto(&g.to_edge_list()).unwrap(), g);
        assert_eq!(
            BipartiteGraph::parse_auto(&g.to_matrix().to_text()).unwrap(),
            g
        );
        assert!(BipartiteGraph::parse_auto("hello\n").is_err());
    }

    #[test]
    fn components_of_union_and_cycle() {
        let g = gen(FamilySpec::DisjointUnion(vec![
            FamilySpec::Path(4),
            FamilySpec::Path(4),
        ]));
        let with_edges: Vec<_> = g.components().into_iter().filter(|c| c.has_edges()).collect();
        assert_eq!(with_edges.len(), 2);

        let g = gen(FamilySpec::Cycle(8));
        assert_eq!(g.components().len(), 1);
    }

    #[test]
    fn isolated_vertex_is_own_component() {
        // One edge plus an isolated U vertex.
        let g = BipartiteGraph::new(2, 1, vec![(0, 0)]).unwrap();
        let comps = g.components();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps.iter().filter(|c| c.has_edges()).count(), 1);
    }

    #[test]
    fn component_subgraph_maps_ids() {
        let g = gen(FamilySpec::DisjointUnion(vec![
            FamilySpec::Path(3),
            FamilySpec::Cycle(4),
        ]));
        for comp in g.components() {
            let (sub, idmap) = g.component_subgraph(&comp);
            assert_eq!(sub.edge_count(), comp.edge_ids.len());
            for (local, &global) in idmap.iter().enumerate() {
                let le = sub.edge(local);
                let ge = g.edge(global);
                assert_eq!(comp.u_vertices[le.u], ge.u);
                assert_eq!(comp.v_vertices[le.v], ge.v);
            }
        }
    }

    #[test]
    fn graphs_are_shareable_across_threads() {
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<BipartiteGraph>();
        assert_send_sync::<MatrixView>();
        assert_send_sync::<FamilySpec>();
    }

    #[test]
    fn cycle_edge_ids_walk_the_cycle() {
        let g = gen(FamilySpec::Cycle(8));
        let ids: Vec<_> = (0..8).map(|i| cycle_edge_id(&g, 8, i).unwrap()).collect();
        let mut sorted = ids.clone();
        sorted.sort_unstable();
        sorted.dedup();
        assert_eq!(sorted.len(), 8);
    }
}

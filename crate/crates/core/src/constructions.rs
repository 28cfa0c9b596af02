//! Closed-form chain partitions for the named families, and composition over
//! disjoint unions.
//!
//! Each function returns the generated host together with the partition so
//! callers never pair a partition with the wrong labeling. Counts:
//!
//! - paths: `ceil((n - 1) / 3)` parts (blocks of three consecutive edges);
//! - even cycles: `ceil(n / 3)` parts (blocks of three around the cycle,
//!   phase fixed at edge 0);
//! - crowns: 2 parts (strict upper and lower triangles of the matrix);
//! - complete bipartite minus a matching: 1 part if at most one edge was
//!   removed (the graph is already a chain graph), otherwise 2;
//! - ladders: `ceil(n / 2)` parts, tiling the columns two at a time;
//! - disjoint unions: the concatenation, summing part counts.

use crate::error::{Error, Result};
use crate::graph::{cycle_edge_id, path_edge_id, BipartiteGraph, EdgeId, FamilySpec};
use crate::partition::EdgePartition;
use crate::recognition::is_ferrers;

/// Blocks of three consecutive edges along the path; every block induces a
/// path on at most four vertices, hence a chain subgraph.
pub fn path_partition(n: usize) -> Result<(BipartiteGraph, EdgePartition)> {
    if n < 2 {
        return Err(Error::InvalidFamily(format!(
            "path partition needs at least 2 vertices, got {n}"
        )));
    }
    let g = FamilySpec::Path(n).generate()?;
    let edge_total = n - 1;
    let parts = (0..edge_total.div_ceil(3))
        .map(|b| {
            (3 * b..edge_total.min(3 * b + 3))
                .map(|i| path_edge_id(&g, i).expect("path edge exists"))
                .collect()
        })
        .collect();
    Ok((g, EdgePartition::new(parts)))
}

/// Blocks of three consecutive edges around the cycle, starting at edge 0;
/// the final block is shorter when 3 does not divide `n`.
pub fn cycle_partition(n: usize) -> Result<(BipartiteGraph, EdgePartition)> {
    let g = FamilySpec::Cycle(n).generate()?;
    let parts = (0..n.div_ceil(3))
        .map(|b| {
            (3 * b..n.min(3 * b + 3))
                .map(|i| cycle_edge_id(&g, n, i).expect("cycle edge exists"))
                .collect()
        })
        .collect();
    Ok((g, EdgePartition::new(parts)))
}

/// The two triangular halves of the crown: `i < j` and `i > j`. Each is a
/// chain subgraph with strictly nested neighborhoods.
pub fn crown_partition(n: usize) -> Result<(BipartiteGraph, EdgePartition)> {
    if n < 3 {
        return Err(Error::InvalidFamily(format!(
            "crown partition needs n >= 3, got {n}"
        )));
    }
    let g = FamilySpec::Crown(n).generate()?;
    let mut upper = Vec::new();
    let mut lower = Vec::new();
    for (id, e) in g.edges().iter().enumerate() {
        if e.u < e.v {
            upper.push(id);
        } else {
            lower.push(id);
        }
    }
    Ok((g, EdgePartition::new(vec![upper, lower])))
}

/// Complete bipartite minus a matching of size `t`. For `t <= 1` the whole
/// graph is one chain part. For `t >= 2`, the first part takes the strict
/// upper triangle of the matched block together with all edges from matched
/// U vertices into the unmatched V vertices; the rest forms the second part,
/// nested on the V side.
pub fn kmn_minus_matching_partition(
    m: usize,
    n: usize,
    t: usize,
) -> Result<(BipartiteGraph, EdgePartition)> {
    let g = FamilySpec::CompleteMinusMatching { m, n, t }.generate()?;
    if t <= 1 {
        let all: Vec<EdgeId> = (0..g.edge_count()).collect();
        return Ok((g, EdgePartition::new(vec![all])));
    }
    let mut plus = Vec::new();
    let mut minus = Vec::new();
    for (id, e) in g.edges().iter().enumerate() {
        let in_plus = e.u < t && (e.v >= t || e.u < e.v);
        if in_plus {
            plus.push(id);
        } else {
            minus.push(id);
        }
    }
    Ok((g, EdgePartition::new(vec![plus, minus])))
}

/// P-shaped tiling of the ladder, two columns per part: the edge set of part
/// `j` is everything whose leftmost column is `2j + 1` or `2j + 2` (1-based),
/// i.e. both rungs, the rails between the two columns, and the rails leading
/// into the next part's first column. With the tridiagonal labeling this is
/// simply `part(u, v) = min(u, v) / 2`. Every part is re-checked by
/// recognition; a failure is a construction bug, not a fallback path.
pub fn ladder_partition(n: usize) -> Result<(BipartiteGraph, EdgePartition)> {
    let g = FamilySpec::Ladder(n).generate()?;
    let k = n.div_ceil(2);
    let mut parts: Vec<Vec<EdgeId>> = vec![Vec::new(); k];
    for (id, e) in g.edges().iter().enumerate() {
        parts[e.u.min(e.v) / 2].push(id);
    }
    let partition = EdgePartition::new(parts);
    for (i, part) in partition.parts().iter().enumerate() {
        let cert = is_ferrers(&g, part)?;
        if !cert.is_ferrers() {
            return Err(Error::ConstructionFailed(format!(
                "ladder({n}) tiling part {i} contains an induced 2K2"
            )));
        }
    }
    Ok((g, partition))
}

/// Concatenates vertex-disjoint pieces and their partitions; the combined
/// graph uses the same index-space concatenation as the disjoint-union
/// generator, and no part spans two pieces.
pub fn union_partition(
    pieces: &[(BipartiteGraph, EdgePartition)],
) -> Result<(BipartiteGraph, EdgePartition)> {
    if pieces.is_empty() {
        return Err(Error::InvalidFamily("empty disjoint union".into()));
    }
    for (g, p) in pieces {
        if p.assigned_count() != g.edge_count() {
            return Err(Error::InvalidPartition(format!(
                "piece partition assigns {} edges, graph has {}",
                p.assigned_count(),
                g.edge_count()
            )));
        }
    }
    let mut u_count = 0;
    let mut v_count = 0;
    let mut edges = Vec::new();
    for (g, _) in pieces {
        edges.extend(
            g.edges()
                .iter()
                .map(|e| (e.u + u_count, e.v + v_count)),
        );
        u_count += g.u_count();
        v_count += g.v_count();
    }
    let union = BipartiteGraph::new(u_count, v_count, edges)?;

    let mut parts = Vec::new();
    let mut du = 0;
    let mut dv = 0;
    for (g, p) in pieces {
        for part in p.parts() {
            let ids = part
                .iter()
                .map(|&id| {
                    let e = g.edge(id);
                    union
                        .edge_id(e.u + du, e.v + dv)
                        .expect("offset edge exists in the union")
                })
                .collect();
            parts.push(ids);
        }
        du += g.u_count();
        dv += g.v_count();
    }
    Ok((union, EdgePartition::new(parts)))
}

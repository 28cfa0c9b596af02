//! Edge partitions: the candidate/solution object for chain-subgraph
//! partitions of a host graph.
//!
//! An [`EdgePartition`] is a list of parts, each a set of host edge ids. The
//! structure itself does not enforce that parts are disjoint, cover the edge
//! set, or induce chain subgraphs; [`crate::solver::verify_partition`] checks
//! all three and reports the first violation.

use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, EdgeId};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EdgePartition {
    parts: Vec<Vec<EdgeId>>,
}

impl EdgePartition {
    /// Builds a partition from per-part edge id lists; ids are sorted within
    /// each part, part order is preserved.
    pub fn new(parts: Vec<Vec<EdgeId>>) -> Self {
        let mut parts = parts;
        for p in &mut parts {
            p.sort_unstable();
        }
        Self { parts }
    }

    /// Builds a partition from a per-edge part index map (`part_of[id]`).
    pub fn from_part_of(part_of: &[usize], part_count: usize) -> Self {
        let mut parts = vec![Vec::new(); part_count];
        for (id, &p) in part_of.iter().enumerate() {
            parts[p].push(id);
        }
        Self { parts }
    }

    /// Number of parts, including empty ones.
    pub fn part_count(&self) -> usize {
        self.parts.len()
    }

    pub fn parts(&self) -> &[Vec<EdgeId>] {
        &self.parts
    }

    pub fn part(&self, i: usize) -> &[EdgeId] {
        &self.parts[i]
    }

    /// Index of the first part containing `id`, if any.
    pub fn part_of(&self, id: EdgeId) -> Option<usize> {
        self.parts.iter().position(|p| p.binary_search(&id).is_ok())
    }

    /// Total number of assignments (counts repeats across parts).
    pub fn assigned_count(&self) -> usize {
        self.parts.iter().map(Vec::len).sum()
    }

    /// Serializes as `parts <k>` followed by one `part <i>: <u,v> <u,v> ...`
    /// line per part, edges listed in id order.
    pub fn to_text(&self, g: &BipartiteGraph) -> String {
        let mut out = format!("parts {}\n", self.parts.len());
        for (i, part) in self.parts.iter().enumerate() {
            out.push_str(&format!("part {i}:"));
            for &id in part {
                out.push_str(&format!(" {}", g.edge(id)));
            }
            out.push('\n');
        }
        out
    }

    /// Parses the partition text format against a host graph. Edges are given
    /// as `u,v` pairs and must exist in the host; coverage and disjointness
    /// are not enforced here.
    pub fn parse(g: &BipartiteGraph, text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (line_no, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            message: "missing `parts <k>` header".into(),
        })?;
        let k: usize = header
            .strip_prefix("parts ")
            .and_then(|s| s.trim().parse().ok())
            .ok_or(Error::Parse {
                line: line_no,
                message: "expected `parts <k>` header".into(),
            })?;
        let mut parts = Vec::with_capacity(k);
        for expect in 0..k {
            let (line_no, line) = lines.next().ok_or(Error::Parse {
                line: line_no,
                message: format!("missing line for part {expect}"),
            })?;
            let rest = line
                .strip_prefix(&format!("part {expect}:"))
                .ok_or(Error::Parse {
                    line: line_no,
                    message: format!("expected `part {expect}: ...`"),
                })?;
            let mut ids = Vec::new();
            for tok in rest.split_whitespace() {
                let (us, vs) = tok.split_once(',').ok_or(Error::Parse {
                    line: line_no,
                    message: format!("expected `u,v` pair, got {tok:?}"),
                })?;
                let u: usize = us.parse().map_err(|_| Error::Parse {
                    line: line_no,
                    message: format!("invalid u index {us:?}"),
                })?;
                let v: usize = vs.parse().map_err(|_| Error::Parse {
                    line: line_no,
                    message: format!("invalid v index {vs:?}"),
                })?;
                let id = g.edge_id(u, v).ok_or(Error::UnknownEdge { u, v })?;
                ids.push(id);
            }
            parts.push(ids);
        }
        if let Some((line_no, _)) = lines.next() {
            return Err(Error::Parse {
                line: line_no,
                message: "trailing content after last part".into(),
            });
        }
        Ok(Self::new(parts))
    }
}

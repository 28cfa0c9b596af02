//! Certifying recognition of chain subgraphs on edge subsets of a host.
//!
//! A part (set of host edge ids) induces a chain subgraph iff it has no
//! induced `2K2`, iff the part-neighborhoods of one side are totally ordered
//! by inclusion. Recognition sorts one side by part-degree and checks that
//! consecutive neighborhoods nest; this is sound and complete because
//! inclusion between sets of known sizes can only point one way. A failure
//! yields four vertices spanning an induced `2K2`, a success yields the
//! orderings that exhibit the staircase shape.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, EdgeId, MatrixView};

/// Four vertices witnessing an induced `2K2` inside a part: edges `(u, v)`
/// and `(u_prime, v_prime)` are in the part while the cross pairs
/// `(u, v_prime)` and `(u_prime, v)` are not.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct TwoKTwoWitness {
    pub u: usize,
    pub v: usize,
    pub u_prime: usize,
    pub v_prime: usize,
}

impl fmt::Display for TwoKTwoWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(u{}, v{}, u{}, v{})",
            self.u, self.v, self.u_prime, self.v_prime
        )
    }
}

/// Outcome of recognition, carrying a checkable certificate either way.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum FerrersCertificate {
    /// `u_order` lists U so that part-neighborhoods weakly shrink along it;
    /// `v_order` permutes V so that each row becomes a prefix of ones.
    Ferrers {
        u_order: Vec<usize>,
        v_order: Vec<usize>,
    },
    NotFerrers { witness: TwoKTwoWitness },
}

impl FerrersCertificate {
    pub fn is_ferrers(&self) -> bool {
        matches!(self, FerrersCertificate::Ferrers { .. })
    }

    pub fn witness(&self) -> Option<TwoKTwoWitness> {
        match self {
            FerrersCertificate::NotFerrers { witness } => Some(*witness),
            FerrersCertificate::Ferrers { .. } => None,
        }
    }

    /// Re-checks the certificate against the part by direct incidence tests,
    /// independent of how it was produced.
    pub fn verify(&self, g: &BipartiteGraph, part: &[EdgeId]) -> bool {
        let Ok(ids) = g.check_part(part) else {
            return false;
        };
        let (adj_u, _) = part_neighborhoods(g, &ids);
        match self {
            FerrersCertificate::Ferrers { u_order, v_order } => {
                if !is_permutation(u_order, g.u_count()) || !is_permutation(v_order, g.v_count()) {
                    return false;
                }
                for w in u_order.windows(2) {
                    if !is_subset(&adj_u[w[1]], &adj_u[w[0]]) {
                        return false;
                    }
                }
                // Every row must be a prefix of ones under v_order.
                let mut pos = vec![0usize; g.v_count()];
                for (i, &v) in v_order.iter().enumerate() {
                    pos[v] = i;
                }
                for row in &adj_u {
                    if row.iter().any(|&v| pos[v] >= row.len()) {
                        return false;
                    }
                }
                true
            }
            FerrersCertificate::NotFerrers { witness } => {
                let w = *witness;
                if w.u == w.u_prime || w.v == w.v_prime {
                    return false;
                }
                let have = |u: usize, v: usize| {
                    u < g.u_count() && adj_u[u].binary_search(&v).is_ok()
                };
                have(w.u, w.v)
                    && have(w.u_prime, w.v_prime)
                    && !have(w.u, w.v_prime)
                    && !have(w.u_prime, w.v)
            }
        }
    }
}

/// Part-neighborhoods per vertex, sorted ascending. `ids` must be sorted,
/// deduplicated, and in range.
fn part_neighborhoods(g: &BipartiteGraph, ids: &[EdgeId]) -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
    let mut adj_u = vec![Vec::new(); g.u_count()];
    let mut adj_v = vec![Vec::new(); g.v_count()];
    // Ascending ids are ascending (u, v), so the pushed lists stay sorted.
    for &id in ids {
        let e = g.edge(id);
        adj_u[e.u].push(e.v);
        adj_v[e.v].push(e.u);
    }
    (adj_u, adj_v)
}

fn is_subset(small: &[usize], big: &[usize]) -> bool {
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

fn is_permutation(order: &[usize], n: usize) -> bool {
    if order.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &x in order {
        if x >= n || seen[x] {
            return false;
        }
        seen[x] = true;
    }
    true
}

/// First element of `a \ b` for sorted slices; `None` if `a` is a subset.
fn first_difference(a: &[usize], b: &[usize]) -> Option<usize> {
    let mut i = 0;
    let mut j = 0;
    while i < a.len() {
        if j == b.len() || a[i] < b[j] {
            return Some(a[i]);
        }
        if a[i] == b[j] {
            i += 1;
            j += 1;
        } else {
            j += 1;
        }
    }
    None
}

/// Decides whether `part` induces a chain subgraph of `g` and returns a
/// certificate. Fails only on out-of-range edge ids.
pub fn is_ferrers(g: &BipartiteGraph, part: &[EdgeId]) -> Result<FerrersCertificate> {
    let ids = g.check_part(part)?;
    let (adj_u, adj_v) = part_neighborhoods(g, &ids);

    let mut u_order: Vec<usize> = (0..g.u_count()).collect();
    u_order.sort_by(|&a, &b| adj_u[b].len().cmp(&adj_u[a].len()).then(a.cmp(&b)));

    for w in u_order.windows(2) {
        let (a, b) = (w[0], w[1]);
        if !is_subset(&adj_u[b], &adj_u[a]) {
            // Neither direction nests: deg(a) >= deg(b), so a \ b is also
            // nonempty once b \ a is.
            let v = first_difference(&adj_u[a], &adj_u[b])
                .expect("larger neighborhood must differ when smaller is not contained");
            let v_prime = first_difference(&adj_u[b], &adj_u[a]).expect("checked not subset");
            return Ok(FerrersCertificate::NotFerrers {
                witness: TwoKTwoWitness {
                    u: a,
                    v,
                    u_prime: b,
                    v_prime,
                },
            });
        }
    }

    let mut v_order: Vec<usize> = (0..g.v_count()).collect();
    v_order.sort_by(|&a, &b| adj_v[b].len().cmp(&adj_v[a].len()).then(a.cmp(&b)));
    Ok(FerrersCertificate::Ferrers { u_order, v_order })
}

/// A chain part rendered as a staircase matrix together with the row and
/// column permutations that produce it.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StaircaseForm {
    pub matrix: MatrixView,
    pub row_perm: Vec<usize>,
    pub col_perm: Vec<usize>,
}

/// Permutes the part's incidence matrix into staircase shape. Rejects
/// non-chain parts, carrying the `2K2` witness in the error.
pub fn ferrers_staircase(g: &BipartiteGraph, part: &[EdgeId]) -> Result<StaircaseForm> {
    match is_ferrers(g, part)? {
        FerrersCertificate::NotFerrers { witness } => Err(Error::NotFerrers { witness }),
        FerrersCertificate::Ferrers { u_order, v_order } => {
            let ids = g.check_part(part)?;
            let (adj_u, _) = part_neighborhoods(g, &ids);
            let mut bits = vec![false; g.u_count() * g.v_count()];
            for (i, &u) in u_order.iter().enumerate() {
                for (j, &v) in v_order.iter().enumerate() {
                    if adj_u[u].binary_search(&v).is_ok() {
                        bits[i * g.v_count() + j] = true;
                    }
                }
            }
            Ok(StaircaseForm {
                matrix: MatrixView::new(g.u_count(), g.v_count(), bits),
                row_perm: u_order,
                col_perm: v_order,
            })
        }
    }
}

/// Number of connected components of the part-subgraph that contain at least
/// one edge. Chain parts have at most one.
pub fn count_nontrivial_components(g: &BipartiteGraph, part: &[EdgeId]) -> Result<usize> {
    let ids = g.check_part(part)?;
    if ids.is_empty() {
        return Ok(0);
    }
    let total = g.u_count() + g.v_count();
    let mut parent: Vec<usize> = (0..total).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        let mut c = x;
        while parent[c] != r {
            let next = parent[c];
            parent[c] = r;
            c = next;
        }
        r
    }
    for &id in &ids {
        let e = g.edge(id);
        let (a, b) = (find(&mut parent, e.u), find(&mut parent, g.u_count() + e.v));
        if a != b {
            parent[a] = b;
        }
    }
    let mut roots: Vec<usize> = ids
        .iter()
        .map(|&id| {
            let e = g.edge(id);
            find(&mut parent, e.u)
        })
        .collect();
    roots.sort_unstable();
    roots.dedup();
    Ok(roots.len())
}

//! Tools for decomposing the edge set of a bipartite graph into chain
//! subgraphs, i.e. bipartite graphs with no induced pair of disjoint edges
//! (no induced `2K2`). Chain graphs are also known as Ferrers or difference
//! graphs; their adjacency matrices permute to a staircase of prefix-of-ones
//! rows.
//!
//! The minimum number of chain subgraphs needed to partition the edge set is
//! written `fp(G)` throughout. The crate provides:
//!
//! - [`graph`]: bipartite host graphs, deterministic family generators, and
//!   text I/O (edge lists and 0/1 matrices);
//! - [`recognition`]: certifying recognition of chain subgraphs on edge
//!   subsets of a host, plus the staircase matrix form;
//! - [`bounds`]: the induced-matching lower bound, neighborhood-poset widths
//!   with the chain-decomposition upper bound, and the host conflict-graph
//!   chromatic lower bound;
//! - [`constructions`]: closed-form partitions for paths, even cycles,
//!   ladders, crowns, and complete bipartite graphs minus a matching, and
//!   composition over disjoint unions;
//! - [`solver`]: exact computation of `fp(G)` by pruned search, a brute-force
//!   oracle for tiny instances, and the polynomial certificate checker.

pub mod bounds;
pub mod constructions;
pub mod graph;
pub mod partition;
pub mod recognition;
pub mod solver;

mod bitset;
mod error;

pub use bounds::{BoundsReport, ConflictGraph, NeighborhoodPoset, Side, WidthResult};
pub use error::{Error, Result};
pub use graph::{BipartiteGraph, Component, Edge, EdgeId, FamilySpec, MatrixView};
pub use partition::EdgePartition;
pub use recognition::{FerrersCertificate, StaircaseForm, TwoKTwoWitness};
pub use solver::{DecideOutcome, FpResult, SearchStats, SolverConfig, Violation};

//! Integer polymatroids given by explicit rank tables.
//!
//! Every rank function is materialized as a table of `2^n` integers indexed by
//! [`SubsetMask`]. Constructors exist for hypergraphs, uniform and graphic
//! matroids, and the closure operations (dual, translate, permute, sum,
//! truncate) used to build random instances.

mod combinators;
mod hypergraph;
mod instance;
mod matroid;
mod polymatroid;
mod rank;
mod subset;

pub use combinators::{dual_polymatroid, permute_rank, sum_ranks, translate_rank, truncate_rank};
pub use hypergraph::{rank_from_hypergraph, Hypergraph};
pub use instance::{parse_instance, Instance, RankSpec};
pub use matroid::{rank_from_graphic_matroid, rank_from_uniform_matroid, MatroidOracle};
pub use polymatroid::Polymatroid;
pub use rank::{validate_rank_function, Axiom, RankFunction, ValidationReport, Violation};
pub use subset::SubsetMask;

/// Largest supported ground set. Tables have `2^n` entries.
pub const MAX_GROUND: usize = 20;

/// Union-find over a small index range, used for component counts.
#[derive(Debug, Clone)]
pub(crate) struct DisjointSets {
    parent: Vec<usize>,
}

impl DisjointSets {
    pub(crate) fn new(size: usize) -> Self {
        Self {
            parent: (0..size).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns true when two previously separate classes were merged.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}

use super::{DisjointSets, Polymatroid, RankFunction, RankSpec, SubsetMask, MAX_GROUND};
use crate::error::{Error, Result};

/// A hypergraph whose hyperedges form the ground set of a polymatroid.
///
/// Vertices are `0..vertex_count`. Each hyperedge is stored as a sorted,
/// duplicate-free vertex list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    vertex_count: usize,
    edges: Vec<Vec<usize>>,
}

impl Hypergraph {
    /// Checks that every hyperedge is non-empty and uses valid vertices.
    /// Connectivity is checked separately, see [`Hypergraph::is_connected`].
    pub fn new(vertex_count: usize, edges: Vec<Vec<usize>>) -> Result<Self> {
        if vertex_count == 0 {
            return Err(Error::InvalidHypergraph("no vertices".into()));
        }
        if edges.is_empty() || edges.len() > MAX_GROUND {
            return Err(Error::GroundSize(edges.len()));
        }
        let mut normalized = Vec::with_capacity(edges.len());
        for (k, mut e) in edges.into_iter().enumerate() {
            if e.is_empty() {
                return Err(Error::InvalidHypergraph(format!("hyperedge {} is empty", k + 1)));
            }
            if let Some(v) = e.iter().find(|&&v| v >= vertex_count) {
                return Err(Error::InvalidHypergraph(format!(
                    "hyperedge {} uses vertex {v}, but there are only {vertex_count} vertices",
                    k + 1
                )));
            }
            e.sort_unstable();
            e.dedup();
            normalized.push(e);
        }
        Ok(Self {
            vertex_count,
            edges: normalized,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    /// Number of edges of the bipartite incidence graph `Bip H`.
    pub fn incidence_count(&self) -> usize {
        self.edges.iter().map(Vec::len).sum()
    }

    /// Whether `Bip H` is connected.
    pub fn is_connected(&self) -> bool {
        self.is_connected_without(None)
    }

    /// Whether `Bip H` stays connected after deleting the node of hyperedge
    /// `e` (0-based). All vertices are kept.
    pub fn is_connected_without_edge(&self, e: usize) -> bool {
        self.is_connected_without(Some(e))
    }

    fn is_connected_without(&self, skip: Option<usize>) -> bool {
        let kept = self
            .edges
            .iter()
            .enumerate()
            .filter(|&(k, _)| Some(k) != skip)
            .map(|(_, e)| e);
        let mut sets = DisjointSets::new(self.vertex_count);
        let mut components = self.vertex_count;
        for e in kept {
            for w in e.windows(2) {
                if sets.union(w[0], w[1]) {
                    components -= 1;
                }
            }
        }
        // a kept hyperedge always touches a vertex, so vertex components are
        // exactly the components of the remaining bipartite graph
        components == 1
    }

    /// `μ(E') = |∪E'| - c(E')`, where `c` counts the components of the
    /// bipartite graph on `E'` and its incident vertices.
    pub fn mu(&self, subset: SubsetMask) -> i64 {
        // Covered vertices minus components equals the number of successful
        // merges when each hyperedge links its vertices in a chain.
        let mut sets = DisjointSets::new(self.vertex_count);
        let mut merges = 0i64;
        for k in subset.elements() {
            for w in self.edges[k].windows(2) {
                if sets.union(w[0], w[1]) {
                    merges += 1;
                }
            }
        }
        merges
    }

    /// Provenance record in instance-file form.
    pub fn to_spec(&self) -> RankSpec {
        RankSpec::Hypergraph {
            vertices: self.vertex_count,
            edges: self.edges.clone(),
        }
    }
}

/// The hypergraphical polymatroid of `h`, whose bases are its hypertrees.
///
/// Rejects hypergraphs with a disconnected incidence graph.
pub fn rank_from_hypergraph(h: &Hypergraph) -> Result<Polymatroid> {
    if !h.is_connected() {
        return Err(Error::InvalidHypergraph(
            "the bipartite incidence graph is disconnected".into(),
        ));
    }
    let rank = RankFunction::from_fn(h.edges.len(), |s| h.mu(s))?;
    Polymatroid::with_provenance(rank, h.to_spec())
}

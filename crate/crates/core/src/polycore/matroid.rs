use super::{DisjointSets, Polymatroid, RankFunction, RankSpec, SubsetMask, MAX_GROUND};
use crate::error::{Error, Result};

/// A matroid given by its rank table: `0 <= r(I) <= |I|` and
/// `r(I) <= r(I+e) <= r(I) + 1`, submodular.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatroidOracle {
    rank: RankFunction,
    provenance: RankSpec,
}

impl MatroidOracle {
    pub fn new(rank: RankFunction) -> Result<Self> {
        let provenance = RankSpec::Explicit {
            values: rank.values().to_vec(),
        };
        Self::with_provenance(rank, provenance)
    }

    fn with_provenance(rank: RankFunction, provenance: RankSpec) -> Result<Self> {
        let n = rank.n();
        if rank.get(SubsetMask::EMPTY) != 0 {
            return Err(Error::InvalidMatroid("r(∅) must be 0".into()));
        }
        for s in SubsetMask::all(n) {
            let r = rank.get(s);
            if r < 0 || r > s.len() as i64 {
                return Err(Error::InvalidMatroid(format!("r({s}) = {r} is out of range")));
            }
            for i in (0..n).filter(|&i| !s.contains(i)) {
                let step = rank.get(s.with(i)) - r;
                if !(0..=1).contains(&step) {
                    return Err(Error::InvalidMatroid(format!(
                        "r jumps by {step} from {s} to {}",
                        s.with(i)
                    )));
                }
            }
        }
        if !super::validate_rank_function(&rank).submodular {
            return Err(Error::InvalidMatroid("rank function is not submodular".into()));
        }
        Ok(Self { rank, provenance })
    }

    pub fn rank(&self) -> &RankFunction {
        &self.rank
    }

    pub fn n(&self) -> usize {
        self.rank.n()
    }

    /// Rank of the whole matroid, `d`.
    pub fn rank_of_matroid(&self) -> i64 {
        self.rank.total()
    }

    /// The polymatroid `P(M) ⊂ {0,1}^n` with the same rank function.
    pub fn to_polymatroid(&self) -> Polymatroid {
        Polymatroid::with_provenance(self.rank.clone(), self.provenance.clone())
            .expect("matroid ranks are polymatroid ranks")
    }

    /// Reinterprets a polymatroid as a matroid when its rank obeys the
    /// matroid axioms.
    pub fn from_polymatroid(p: &Polymatroid) -> Result<Self> {
        Self::with_provenance(p.rank().clone(), p.provenance().clone())
    }
}

/// `U(r, n)`: `r(I) = min(|I|, r)`.
pub fn rank_from_uniform_matroid(n: usize, r: usize) -> Result<MatroidOracle> {
    if r > n {
        return Err(Error::InvalidArgument(format!(
            "uniform matroid rank {r} exceeds ground size {n}"
        )));
    }
    if n > MAX_GROUND {
        return Err(Error::GroundSize(n));
    }
    let rank = RankFunction::from_fn(n, |s| s.len().min(r) as i64)?;
    MatroidOracle::with_provenance(rank, RankSpec::Uniform { n, r })
}

/// The cycle matroid of a multigraph on `vertex_count` vertices; the ground
/// set is the edge list. `r(I) = vertex_count - c(V, I)`.
pub fn rank_from_graphic_matroid(
    vertex_count: usize,
    edges: &[[usize; 2]],
) -> Result<MatroidOracle> {
    if let Some(e) = edges.iter().find(|e| e[0] >= vertex_count || e[1] >= vertex_count) {
        return Err(Error::InvalidArgument(format!(
            "edge {e:?} has an endpoint outside 0..{vertex_count}"
        )));
    }
    if edges.len() > MAX_GROUND {
        return Err(Error::GroundSize(edges.len()));
    }
    let rank = RankFunction::from_fn(edges.len(), |s| {
        let mut sets = DisjointSets::new(vertex_count);
        s.elements()
            .filter(|&k| sets.union(edges[k][0], edges[k][1]))
            .count() as i64
    })?;
    let provenance = RankSpec::Graphic {
        vertices: vertex_count,
        edges: edges.to_vec(),
    };
    MatroidOracle::with_provenance(rank, provenance)
}

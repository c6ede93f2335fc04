//! JSON instance files: `{"n": int, "rank": <spec>}`.

use serde::{Deserialize, Serialize};

use super::{
    dual_polymatroid, permute_rank, rank_from_graphic_matroid, rank_from_hypergraph,
    rank_from_uniform_matroid, sum_ranks, translate_rank, truncate_rank, Hypergraph, Polymatroid,
    RankFunction,
};
use crate::error::{Error, Result};

/// A rank-function recipe. Hypergraph and graph vertices are 0-based;
/// permutation entries are 1-based images `σ(1), .., σ(n)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase", deny_unknown_fields)]
pub enum RankSpec {
    Explicit {
        values: Vec<i64>,
    },
    Hypergraph {
        vertices: usize,
        edges: Vec<Vec<usize>>,
    },
    Uniform {
        n: usize,
        r: usize,
    },
    Graphic {
        vertices: usize,
        edges: Vec<[usize; 2]>,
    },
    Dual {
        of: Box<RankSpec>,
    },
    Translate {
        of: Box<RankSpec>,
        by: Vec<i64>,
    },
    Permute {
        of: Box<RankSpec>,
        perm: Vec<usize>,
    },
    Sum {
        of: Vec<RankSpec>,
    },
    Truncate {
        of: Box<RankSpec>,
        c: i64,
    },
}

impl RankSpec {
    /// Materializes the rank table and validates it.
    pub fn build(&self) -> Result<Polymatroid> {
        match self {
            RankSpec::Explicit { values } => {
                let n = table_ground_size(values.len())?;
                Polymatroid::new(RankFunction::new(n, values.clone())?)
            }
            RankSpec::Hypergraph { vertices, edges } => {
                rank_from_hypergraph(&Hypergraph::new(*vertices, edges.clone())?)
            }
            RankSpec::Uniform { n, r } => Ok(rank_from_uniform_matroid(*n, *r)?.to_polymatroid()),
            RankSpec::Graphic { vertices, edges } => {
                let m = rank_from_graphic_matroid(*vertices, edges)?;
                if m.n() == 0 {
                    return Err(Error::Instance("graphic instance has no edges".into()));
                }
                Ok(m.to_polymatroid())
            }
            RankSpec::Dual { of } => Ok(dual_polymatroid(&of.build()?)),
            RankSpec::Translate { of, by } => translate_rank(&of.build()?, by),
            RankSpec::Permute { of, perm } => {
                let zero_based = perm
                    .iter()
                    .map(|&k| {
                        k.checked_sub(1).ok_or_else(|| {
                            Error::Instance("permutation entries are 1-based".into())
                        })
                    })
                    .collect::<Result<Vec<_>>>()?;
                permute_rank(&of.build()?, &zero_based)
            }
            RankSpec::Sum { of } => {
                let parts = of.iter().map(RankSpec::build).collect::<Result<Vec<_>>>()?;
                sum_ranks(&parts)
            }
            RankSpec::Truncate { of, c } => truncate_rank(&of.build()?, *c),
        }
    }
}

fn table_ground_size(len: usize) -> Result<usize> {
    if len < 2 || !len.is_power_of_two() {
        return Err(Error::Instance(format!(
            "explicit table has {len} entries, expected 2^n with n >= 1"
        )));
    }
    Ok(len.trailing_zeros() as usize)
}

/// Top-level instance document.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Instance {
    pub n: usize,
    pub rank: RankSpec,
}

impl Instance {
    pub fn from_polymatroid(p: &Polymatroid) -> Self {
        Self {
            n: p.n(),
            rank: p.provenance().clone(),
        }
    }

    /// Same instance with the rank table written out explicitly.
    pub fn explicit(p: &Polymatroid) -> Self {
        Self {
            n: p.n(),
            rank: RankSpec::Explicit {
                values: p.rank().values().to_vec(),
            },
        }
    }

    pub fn build(&self) -> Result<Polymatroid> {
        let p = self.rank.build()?;
        if p.n() != self.n {
            return Err(Error::Instance(format!(
                "declared n = {} but the rank spec has ground size {}",
                self.n,
                p.n()
            )));
        }
        Ok(p)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("instances serialize")
    }
}

/// Parses an instance document. Syntax errors carry line and column.
pub fn parse_instance(text: &str) -> Result<Instance> {
    serde_json::from_str(text).map_err(|e| Error::Instance(e.to_string()))
}

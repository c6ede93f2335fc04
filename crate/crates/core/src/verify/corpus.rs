//! Named instances used by the test suites and the CLI.

use crate::error::Result;
use crate::polycore::{
    dual_polymatroid, permute_rank, rank_from_graphic_matroid, rank_from_hypergraph,
    rank_from_uniform_matroid, translate_rank, Hypergraph, MatroidOracle, Polymatroid,
};

use super::random::{random_polymatroid, GeneratorKind, InstanceSpec};

#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub id: String,
    pub polymatroid: Polymatroid,
}

impl CorpusEntry {
    fn new(id: impl Into<String>, polymatroid: Polymatroid) -> Self {
        Self {
            id: id.into(),
            polymatroid,
        }
    }
}

/// The three-element worked example with bases
/// (0,2,1), (1,1,1), (1,2,0), (2,0,1), (2,1,0).
pub fn worked_example() -> Polymatroid {
    Polymatroid::from_values(3, vec![0, 2, 2, 3, 1, 3, 3, 3]).expect("valid table")
}

/// Two hyperedges `{0,1}`, `{1,2}` sharing a vertex.
pub fn path_hypergraph() -> Hypergraph {
    Hypergraph::new(3, vec![vec![0, 1], vec![1, 2]]).expect("valid")
}

/// The triangle graph viewed as a hypergraph.
pub fn triangle_hypergraph() -> Hypergraph {
    Hypergraph::new(3, vec![vec![0, 1], vec![1, 2], vec![0, 2]]).expect("valid")
}

/// `K_4` viewed as a hypergraph: 4 vertices, 6 hyperedges.
pub fn k4_hypergraph() -> Hypergraph {
    let edges = [[0, 1], [0, 2], [0, 3], [1, 2], [1, 3], [2, 3]];
    Hypergraph::new(4, edges.iter().map(|e| e.to_vec()).collect()).expect("valid")
}

pub fn cycle_matroid(len: usize) -> MatroidOracle {
    let edges: Vec<[usize; 2]> = (0..len).map(|k| [k, (k + 1) % len]).collect();
    rank_from_graphic_matroid(len, &edges).expect("valid cycle")
}

pub fn k4_matroid() -> MatroidOracle {
    let edges = [[0, 1], [0, 2], [0, 3], [1, 2], [1, 3], [2, 3]];
    rank_from_graphic_matroid(4, &edges).expect("valid K4")
}

/// `U(r, n)` for `0 <= r <= n <= max_n`, then the cycle matroids `C3`, `C4`
/// and the graphic matroid of `K4`.
pub fn matroid_corpus(max_n: usize) -> Vec<(String, MatroidOracle)> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        for r in 0..=n {
            out.push((format!("U({r},{n})"), rank_from_uniform_matroid(n, r).expect("valid")));
        }
    }
    out.push(("C3".into(), cycle_matroid(3)));
    out.push(("C4".into(), cycle_matroid(4)));
    out.push(("K4".into(), k4_matroid()));
    out
}

/// Hand-built polymatroids: the worked example with its dual, translates and
/// permutations, small hypergraphs, and the matroid corpus.
pub fn explicit_corpus() -> Result<Vec<CorpusEntry>> {
    let p = worked_example();
    let mut out = vec![
        CorpusEntry::new("worked", p.clone()),
        CorpusEntry::new("worked-dual", dual_polymatroid(&p)),
        CorpusEntry::new("worked+(1,1,1)", translate_rank(&p, &[1, 1, 1])?),
        CorpusEntry::new("worked+(5,5,5)", translate_rank(&p, &[5, 5, 5])?),
        CorpusEntry::new("worked-perm(2,3,1)", permute_rank(&p, &[1, 2, 0])?),
        CorpusEntry::new("worked-perm(2,1,3)", permute_rank(&p, &[1, 0, 2])?),
        CorpusEntry::new("path", rank_from_hypergraph(&path_hypergraph())?),
        CorpusEntry::new("triangle", rank_from_hypergraph(&triangle_hypergraph())?),
        CorpusEntry::new("k4-hypergraph", rank_from_hypergraph(&k4_hypergraph())?),
    ];
    out.extend(
        matroid_corpus(6)
            .into_iter()
            .map(|(id, m)| CorpusEntry::new(id, m.to_polymatroid())),
    );
    Ok(out)
}

/// `count` seeded mixed-kind instances with `1 <= n <= 6` and ranks at most 5.
pub fn random_corpus(count: usize, seed: u64) -> Result<Vec<CorpusEntry>> {
    (0..count)
        .map(|k| {
            let spec = InstanceSpec {
                seed: seed.wrapping_add(k as u64),
                n: 1 + k % 6,
                max_rank: 5,
                kind: GeneratorKind::Mixed,
                uniform_rank: None,
            };
            let id = format!("random-{}-n{}", spec.seed, spec.n);
            random_polymatroid(&spec).map(|p| CorpusEntry::new(id, p))
        })
        .collect()
}

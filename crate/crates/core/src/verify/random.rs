use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::polycore::{
    validate_rank_function, DisjointSets, Hypergraph, Polymatroid, RankSpec,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GeneratorKind {
    Hypergraph,
    Uniform,
    Graphic,
    Sum,
    Truncate,
    Translate,
    Permute,
    Dual,
    /// Picks one of the other kinds per instance.
    Mixed,
}

impl GeneratorKind {
    pub const ALL: [GeneratorKind; 9] = [
        GeneratorKind::Hypergraph,
        GeneratorKind::Uniform,
        GeneratorKind::Graphic,
        GeneratorKind::Sum,
        GeneratorKind::Truncate,
        GeneratorKind::Translate,
        GeneratorKind::Permute,
        GeneratorKind::Dual,
        GeneratorKind::Mixed,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GeneratorKind::Hypergraph => "hypergraph",
            GeneratorKind::Uniform => "uniform",
            GeneratorKind::Graphic => "graphic",
            GeneratorKind::Sum => "sum",
            GeneratorKind::Truncate => "truncate",
            GeneratorKind::Translate => "translate",
            GeneratorKind::Permute => "permute",
            GeneratorKind::Dual => "dual",
            GeneratorKind::Mixed => "mixed",
        }
    }
}

impl fmt::Display for GeneratorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GeneratorKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown generator kind `{s}`")))
    }
}

/// Parameters of a seeded random instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InstanceSpec {
    pub seed: u64,
    pub n: usize,
    /// Bound on `f([n])` of the monotone building blocks.
    pub max_rank: usize,
    pub kind: GeneratorKind,
    /// Fixed rank for [`GeneratorKind::Uniform`]; random when `None`.
    pub uniform_rank: Option<usize>,
}

impl Default for InstanceSpec {
    fn default() -> Self {
        Self {
            seed: 0,
            n: 4,
            max_rank: 5,
            kind: GeneratorKind::Mixed,
            uniform_rank: None,
        }
    }
}

pub const MAX_RANDOM_GROUND: usize = 12;

/// Builds a random polymatroid; the same spec always yields the same instance.
pub fn random_polymatroid(spec: &InstanceSpec) -> Result<Polymatroid> {
    if spec.n == 0 || spec.n > MAX_RANDOM_GROUND {
        return Err(Error::InvalidArgument(format!(
            "random instances need 1 <= n <= {MAX_RANDOM_GROUND}, got {}",
            spec.n
        )));
    }
    if spec.max_rank == 0 {
        return Err(Error::InvalidArgument("max_rank must be positive".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let recipe = random_spec(&mut rng, spec)?;
    let p = recipe.build()?;
    if !validate_rank_function(p.rank()).is_polymatroid() {
        return Err(Error::Invariant(format!(
            "generator produced an invalid rank table for seed {}",
            spec.seed
        )));
    }
    Ok(p)
}

fn random_spec(rng: &mut ChaCha8Rng, spec: &InstanceSpec) -> Result<RankSpec> {
    let n = spec.n;
    let max_rank = spec.max_rank;
    let kind = match spec.kind {
        GeneratorKind::Mixed => *GeneratorKind::ALL[..8].choose(rng).expect("non-empty"),
        k => k,
    };
    Ok(match kind {
        GeneratorKind::Hypergraph => random_hypergraph(rng, n, max_rank).to_spec(),
        GeneratorKind::Uniform => {
            let r = match spec.uniform_rank {
                Some(r) => r,
                None => rng.gen_range(0..=n.min(max_rank)),
            };
            RankSpec::Uniform { n, r }
        }
        GeneratorKind::Graphic => random_graph(rng, n, max_rank),
        GeneratorKind::Sum => {
            let part = (max_rank / 2).max(1);
            RankSpec::Sum {
                of: vec![random_block(rng, n, part), random_block(rng, n, part)],
            }
        }
        GeneratorKind::Truncate => {
            let base = random_block(rng, n, max_rank);
            let top = base.build()?.rank().total();
            RankSpec::Truncate {
                of: Box::new(base),
                c: rng.gen_range(0..=top),
            }
        }
        GeneratorKind::Translate => RankSpec::Translate {
            of: Box::new(random_block(rng, n, max_rank)),
            by: (0..n).map(|_| rng.gen_range(-2..=2)).collect(),
        },
        GeneratorKind::Permute => {
            let mut perm: Vec<usize> = (1..=n).collect();
            perm.shuffle(rng);
            RankSpec::Permute {
                of: Box::new(random_block(rng, n, max_rank)),
                perm,
            }
        }
        GeneratorKind::Dual => RankSpec::Dual {
            of: Box::new(random_block(rng, n, max_rank)),
        },
        GeneratorKind::Mixed => unreachable!("resolved above"),
    })
}

/// A monotone building block: hypergraph, uniform or graphic.
fn random_block(rng: &mut ChaCha8Rng, n: usize, max_rank: usize) -> RankSpec {
    match rng.gen_range(0..3) {
        0 => random_hypergraph(rng, n, max_rank).to_spec(),
        1 => RankSpec::Uniform {
            n,
            r: rng.gen_range(0..=n.min(max_rank)),
        },
        _ => random_graph(rng, n, max_rank),
    }
}

/// Connected hypergraph with `n` hyperedges and `f(E) = |V| - 1 <= max_rank`.
pub fn random_hypergraph<R: Rng>(rng: &mut R, n: usize, max_rank: usize) -> Hypergraph {
    let vertices = rng.gen_range(1..=max_rank + 1);
    random_connected_hypergraph(rng, n, vertices)
}

/// Random hyperedges of size 1 to 3, then patched until `Bip H` is
/// connected: a vertex outside the component of vertex 0 is added to a
/// hyperedge inside it.
pub fn random_connected_hypergraph<R: Rng>(rng: &mut R, n: usize, vertices: usize) -> Hypergraph {
    let all: Vec<usize> = (0..vertices).collect();
    let mut edges: Vec<Vec<usize>> = (0..n)
        .map(|_| {
            let size = rng.gen_range(1..=vertices.min(3));
            all.choose_multiple(rng, size).copied().collect()
        })
        .collect();
    loop {
        let mut sets = DisjointSets::new(vertices);
        for e in &edges {
            for w in e.windows(2) {
                sets.union(w[0], w[1]);
            }
        }
        let root = sets.find(0);
        let outside: Vec<usize> = (0..vertices).filter(|&v| sets.find(v) != root).collect();
        let Some(&v) = outside.choose(rng) else {
            break;
        };
        let inside: Vec<usize> = (0..edges.len())
            .filter(|&k| edges[k].iter().any(|&u| sets.find(u) == root))
            .collect();
        let k = match inside.choose(rng) {
            Some(&k) => k,
            // vertex 0 is uncovered: attach it to any hyperedge
            None => {
                let k = rng.gen_range(0..edges.len());
                edges[k].push(0);
                continue;
            }
        };
        edges[k].push(v);
    }
    Hypergraph::new(vertices, edges).expect("generated hyperedges are valid")
}

fn random_graph(rng: &mut ChaCha8Rng, n: usize, max_rank: usize) -> RankSpec {
    let vertices = rng.gen_range(2..=max_rank + 1);
    let edges = (0..n)
        .map(|_| {
            let u = rng.gen_range(0..vertices);
            // occasional loops
            let v = if rng.gen_ratio(1, 8) { u } else { rng.gen_range(0..vertices) };
            [u, v]
        })
        .collect();
    RankSpec::Graphic { vertices, edges }
}

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{apply, enumerate, Move};
use crate::constructors::{build_theta_n, planar_theta, KnotSpec};
use crate::diagram::SpatialDiagram;
use crate::error::Result;

#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub name: String,
    pub base: SpatialDiagram,
    pub diagram: SpatialDiagram,
    pub trace: Vec<Move>,
}

/// Apply `steps` moves chosen uniformly at random among all valid ones.
/// Returns the diagram and the moves applied.
pub fn scramble<R: Rng>(
    d: &SpatialDiagram,
    steps: usize,
    rng: &mut R,
) -> Result<(SpatialDiagram, Vec<Move>)> {
    let mut cur = d.clone();
    let mut trace = Vec::with_capacity(steps);
    for _ in 0..steps {
        let moves = enumerate(&cur, true);
        let Some(m) = moves.choose(rng) else { break };
        cur = apply(&cur, m)?;
        trace.push(*m);
    }
    Ok((cur, trace))
}

/// Crossing-free starting diagrams: unknot, planar theta, planar θ^2.
pub fn crossing_free_bases() -> Result<Vec<(String, SpatialDiagram)>> {
    let o = KnotSpec::named("unknot");
    Ok(vec![
        ("unknot".into(), SpatialDiagram::unknot()),
        ("theta".into(), planar_theta()),
        ("theta-2".into(), build_theta_n(2, &o, &o)?),
    ])
}

/// `count` diagrams, each made by scrambling a crossing-free base with
/// between 1 and `max_moves` random moves. Deterministic in `seed`.
pub fn random_corpus(seed: u64, count: usize, max_moves: usize) -> Result<Vec<CorpusEntry>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let bases = crossing_free_bases()?;
    let mut out = Vec::with_capacity(count);
    for i in 0..count {
        let (name, base) = &bases[i % bases.len()];
        let steps = rng.gen_range(1..=max_moves.max(1));
        let (diagram, trace) = scramble(base, steps, &mut rng)?;
        out.push(CorpusEntry {
            name: format!("{name}-{i}"),
            base: base.clone(),
            diagram,
            trace,
        });
    }
    Ok(out)
}

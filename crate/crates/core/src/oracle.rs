//! Exhaustive search over every head election, for small networks.
//!
//! Ground truth for validating the evolutionary search: enumerates all
//! non-empty head subsets of the living nodes, scores each with the exact
//! same fitness evaluation the GA uses, and returns the argmax. The search
//! strategy is the independent part; sharing the objective is the point,
//! since the claim under test is that the GA finds the optimum, not that
//! two objective implementations agree.

use crate::clustering::{Chromosome, FitnessBreakdown, FitnessKind};
use crate::energy::RadioModel;
use crate::error::{Error, Result};
use crate::network::Deployment;

/// Enumeration cap: 2^20 - 1 candidates is a desk-scale search.
pub const MAX_EXHAUSTIVE_NODES: usize = 20;

/// The globally optimal chromosome and its score.
///
/// Exact fitness ties resolve to the lexicographically lowest bit-string,
/// the same rule the GA uses, so GA-vs-oracle equality checks are exact.
/// Deterministic and seed-free: the result depends only on the deployment,
/// radio, and fitness choice.
pub fn exhaustive_best(
    deployment: &Deployment,
    radio: &RadioModel,
    fitness: &FitnessKind,
) -> Result<(Chromosome, FitnessBreakdown)> {
    fitness.validate()?;
    radio.validate()?;
    let alive = deployment.alive_ids();
    if alive.is_empty() {
        return Err(Error::InvalidDeployment(
            "exhaustive search needs at least one living node".into(),
        ));
    }
    if alive.len() > MAX_EXHAUSTIVE_NODES {
        return Err(Error::ExhaustiveTooLarge {
            got: alive.len(),
            max: MAX_EXHAUSTIVE_NODES,
        });
    }
    let mut best: Option<(Chromosome, FitnessBreakdown)> = None;
    for mask in 1u32..(1u32 << alive.len()) {
        let mut chromosome = Chromosome::zeros(deployment.node_count());
        for (j, &id) in alive.iter().enumerate() {
            if mask & (1 << j) != 0 {
                chromosome.set(id, true);
            }
        }
        let breakdown = fitness.evaluate(&chromosome, deployment, radio)?;
        let better = match &best {
            None => true,
            Some((champion, champion_breakdown)) => {
                breakdown.fitness > champion_breakdown.fitness
                    || (breakdown.fitness == champion_breakdown.fitness
                        && chromosome < *champion)
            }
        };
        if better {
            best = Some((chromosome, breakdown));
        }
    }
    Ok(best.expect("at least one candidate was evaluated"))
}

//! Rotating-cluster-head baseline protocol.
//!
//! Each round, every eligible living node elects itself head with a
//! threshold probability that rises as the rotation cycle progresses; nodes
//! that served this cycle sit out until the cycle resets. Members join the
//! nearest head, exactly as in the optimizer's decoding, so the two
//! protocols differ only in how heads are chosen.

use crate::clustering::{charge_round, decode, Chromosome};
use crate::energy::RadioModel;
use crate::error::{Error, Result};
use crate::network::Deployment;
use crate::rng;
use rand_core::RngCore;
use serde::{Deserialize, Serialize};

/// Baseline protocol parameters.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct LeachParams {
    /// Desired head fraction P; the rotation cycle spans ceil(1/P) rounds.
    pub head_probability: f64,
}

impl Default for LeachParams {
    fn default() -> Self {
        LeachParams {
            head_probability: 0.05,
        }
    }
}

impl LeachParams {
    pub fn validate(&self) -> Result<()> {
        if !(self.head_probability > 0.0 && self.head_probability < 1.0) {
            return Err(Error::InvalidConfig(format!(
                "head_probability must lie in (0, 1), got {}",
                self.head_probability
            )));
        }
        Ok(())
    }

    /// Rounds per rotation cycle: ceil(1/P).
    pub fn cycle_length(&self) -> u64 {
        (1.0 / self.head_probability).ceil() as u64
    }

    /// Election threshold for a 0-based round index.
    ///
    /// `P / (1 - P * (round mod cycle))`: starts at P and reaches 1 in the
    /// final round of each cycle, which forces every still-eligible node to
    /// serve before the cycle resets.
    pub fn threshold(&self, round: u64) -> f64 {
        let p = self.head_probability;
        let position = (round % self.cycle_length()) as f64;
        p / (1.0 - p * position)
    }
}

/// Which nodes already served as head in the current rotation cycle.
#[derive(Debug, Clone)]
pub struct LeachState {
    served: Vec<bool>,
}

impl LeachState {
    pub fn new(node_count: usize) -> Self {
        LeachState {
            served: vec![false; node_count],
        }
    }

    pub fn has_served(&self, id: usize) -> bool {
        self.served[id]
    }

    fn reset(&mut self) {
        self.served.fill(false);
    }
}

/// The living node nearest the sink among those matching `eligible`.
fn nearest_to_sink_where(
    deployment: &Deployment,
    eligible: impl Fn(usize) -> bool,
) -> Option<usize> {
    deployment
        .nodes
        .iter()
        .filter(|n| n.alive && eligible(n.id))
        .map(|n| (deployment.distance_to_sink(n.id), n.id))
        .min_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)))
        .map(|(_, id)| id)
}

/// Elects this round's heads and updates the served-this-cycle state.
///
/// `round` is 0-based; rounds must be fed in order because the state resets
/// itself at each cycle boundary. Eligible living nodes draw in ascending
/// id order (one draw each; ineligible nodes draw nothing). If nobody
/// elects itself, a head is forced so every round has one: the nearest
/// still-eligible node to the sink, or the nearest living node when every
/// survivor already served this cycle.
pub fn elect_heads(
    deployment: &Deployment,
    params: &LeachParams,
    state: &mut LeachState,
    round: u64,
    rng: &mut impl RngCore,
) -> Vec<usize> {
    if round.is_multiple_of(params.cycle_length()) {
        state.reset();
    }
    let threshold = params.threshold(round);
    let mut heads: Vec<usize> = deployment
        .nodes
        .iter()
        .filter(|n| n.alive && !state.served[n.id])
        .filter(|_| rng::unit(rng) < threshold)
        .map(|n| n.id)
        .collect();
    if heads.is_empty() {
        let forced = nearest_to_sink_where(deployment, |id| !state.served[id])
            .or_else(|| deployment.nearest_alive_to_sink());
        if let Some(id) = forced {
            heads.push(id);
        }
    }
    for &id in &heads {
        state.served[id] = true;
    }
    heads
}

/// Outcome of one baseline round.
#[derive(Debug, Clone, PartialEq)]
pub struct LeachRound {
    /// Energy drained from all batteries this round, joules.
    pub energy_spent: f64,
    /// This round's head ids, ascending.
    pub head_ids: Vec<usize>,
}

/// Runs one full baseline round: election, nearest-head membership, and
/// battery charging. Nodes that hit zero charge are dead for later rounds.
pub fn leach_round(
    deployment: &mut Deployment,
    radio: &RadioModel,
    params: &LeachParams,
    state: &mut LeachState,
    round: u64,
    rng: &mut impl RngCore,
) -> Result<LeachRound> {
    if deployment.alive_count() == 0 {
        return Err(Error::InvalidDeployment(
            "cannot run a round with no living nodes".into(),
        ));
    }
    let head_ids = elect_heads(deployment, params, state, round, rng);
    let mut chromosome = Chromosome::zeros(deployment.node_count());
    for &id in &head_ids {
        chromosome.set(id, true);
    }
    let assignment = decode(&chromosome, deployment)?;
    let energy_spent = charge_round(&assignment, deployment, radio);
    Ok(LeachRound {
        energy_spent,
        head_ids,
    })
}

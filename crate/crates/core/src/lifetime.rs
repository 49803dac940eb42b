//! Round-based network lifetime simulation.
//!
//! Rounds are 1-based. Under the optimizing protocol a fresh head election
//! is evolved at a fixed cadence (and immediately after any serving head
//! dies) over the currently living nodes; between elections the installed
//! chromosome is re-decoded each round, so dead members simply drop out.
//! Under the baseline the rotation protocol runs as-is. Either way each
//! round charges member uplinks, head reception, aggregation, and the
//! fused head-to-sink packet against node batteries.

use crate::clustering::{charge_round, decode, Chromosome};
use crate::energy::RadioModel;
use crate::error::{Error, Result};
use crate::ga::{self, GaParams};
use crate::leach::{self, LeachParams, LeachState};
use crate::network::Deployment;
use crate::rng::{self, STREAM_LEACH};
use serde::{Deserialize, Serialize};

/// Which protocol drives head selection during the simulation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Protocol {
    Ga(GaParams),
    Leach(LeachParams),
}

impl Protocol {
    pub fn validate(&self) -> Result<()> {
        match self {
            Protocol::Ga(p) => p.validate(),
            Protocol::Leach(p) => p.validate(),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Protocol::Ga(_) => "ga",
            Protocol::Leach(_) => "leach",
        }
    }
}

/// Simulation horizon and re-clustering cadence.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct LifetimeConfig {
    pub total_rounds: u64,
    /// A fresh election is evolved on rounds 1, 1+k, 1+2k, ... (absolute
    /// cadence) and additionally whenever a serving head has died.
    pub rounds_per_configuration: u64,
    pub protocol: Protocol,
}

impl Default for LifetimeConfig {
    fn default() -> Self {
        LifetimeConfig {
            total_rounds: 1100,
            rounds_per_configuration: 20,
            protocol: Protocol::Ga(GaParams::default()),
        }
    }
}

impl LifetimeConfig {
    pub fn validate(&self) -> Result<()> {
        if self.total_rounds == 0 {
            return Err(Error::InvalidConfig("total_rounds must be positive".into()));
        }
        if self.rounds_per_configuration == 0 {
            return Err(Error::InvalidConfig(
                "rounds_per_configuration must be positive".into(),
            ));
        }
        self.protocol.validate()
    }
}

/// One simulated round.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RoundRecord {
    /// 1-based round number.
    pub round: u64,
    /// Living nodes after this round's traffic.
    pub alive_count: usize,
    /// Total energy drained since round 1, joules.
    pub cumulative_energy: f64,
    /// Heads serving this round.
    pub heads: usize,
}

/// Full simulation output.
#[derive(Debug, Clone)]
pub struct LifetimeOutcome {
    pub records: Vec<RoundRecord>,
    /// Living nodes before round 1; deaths are measured against this.
    pub initial_alive: usize,
    /// Node states after the last simulated round.
    pub final_deployment: Deployment,
}

/// First/last death rounds and total energy; `None` death rounds mean the
/// event never happened within the horizon.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LifetimeSummary {
    pub first_death_round: Option<u64>,
    pub last_death_round: Option<u64>,
    pub total_energy: f64,
}

impl LifetimeOutcome {
    pub fn summary(&self) -> LifetimeSummary {
        let first_death_round = self
            .records
            .iter()
            .find(|r| r.alive_count < self.initial_alive)
            .map(|r| r.round);
        let last_death_round = self
            .records
            .iter()
            .find(|r| r.alive_count == 0)
            .map(|r| r.round);
        let total_energy = self.records.last().map_or(0.0, |r| r.cumulative_energy);
        LifetimeSummary {
            first_death_round,
            last_death_round,
            total_energy,
        }
    }
}

/// Runs the simulation on a copy of the deployment.
///
/// Stops early once every node is dead (at most one all-dead record is
/// emitted). Identical `(deployment, radio, config, seed)` reproduce the
/// record stream exactly.
pub fn run_lifetime(
    deployment: &Deployment,
    radio: &RadioModel,
    config: &LifetimeConfig,
    seed: u64,
) -> Result<LifetimeOutcome> {
    config.validate()?;
    radio.validate()?;
    let mut sim = deployment.clone();
    let initial_alive = sim.alive_count();
    let mut records = Vec::new();
    let mut cumulative = 0.0;

    let mut installed: Option<Chromosome> = None;
    let mut election_events: u64 = 0;
    let mut leach_state = LeachState::new(sim.node_count());
    let mut leach_rng = rng::stream(seed, STREAM_LEACH);

    for round in 1..=config.total_rounds {
        if sim.alive_count() == 0 {
            records.push(RoundRecord {
                round,
                alive_count: 0,
                cumulative_energy: cumulative,
                heads: 0,
            });
            break;
        }
        let (spent, heads) = match &config.protocol {
            Protocol::Ga(params) => {
                let cadence_due = (round - 1) % config.rounds_per_configuration == 0;
                let head_died = installed.as_ref().is_some_and(|c| {
                    sim.nodes.iter().any(|n| c.bit(n.id) && !n.alive)
                });
                if cadence_due || head_died || installed.is_none() {
                    let sub_seed = rng::derive_seed(seed, election_events);
                    election_events += 1;
                    let outcome = ga::evolve(&sim, radio, params, sub_seed)?;
                    installed = Some(outcome.best.chromosome);
                }
                let chromosome = installed.as_ref().expect("an election is installed");
                let assignment = decode(chromosome, &sim)?;
                let spent = charge_round(&assignment, &mut sim, radio);
                (spent, assignment.head_count())
            }
            Protocol::Leach(params) => {
                let out = leach::leach_round(
                    &mut sim,
                    radio,
                    params,
                    &mut leach_state,
                    round - 1,
                    &mut leach_rng,
                )?;
                (out.energy_spent, out.head_ids.len())
            }
        };
        cumulative += spent;
        records.push(RoundRecord {
            round,
            alive_count: sim.alive_count(),
            cumulative_energy: cumulative,
            heads,
        });
        if sim.alive_count() == 0 {
            break;
        }
    }
    Ok(LifetimeOutcome {
        records,
        initial_alive,
        final_deployment: sim,
    })
}

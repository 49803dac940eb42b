//! Chromosome decoding and fitness evaluation.
//!
//! A chromosome is one bit per node: set means the node serves as cluster
//! head. Decoding assigns every living regular node to its nearest living
//! head; the resulting clustering is scored on three components:
//!
//! * `E`: transfer energy, one round of cluster traffic summed over
//!   clusters (the aggregation-free figure from the energy model)
//! * `RCSD`: member-to-head distances plus head-to-sink distances
//! * `TCH`: number of heads
//!
//! with `TD` (total node-to-sink distance) and `N` (living node count) as
//! normalizers. Two fixed score formulas are provided plus a weighted form
//! that generalizes the normalized one.

use crate::energy::RadioModel;
use crate::error::{Error, Result};
use crate::network::{distance, Deployment};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Head-election bit vector, one bit per node id.
///
/// Ordering is lexicographic on the bit vector (unset before set), which
/// gives deterministic tie-breaks when two chromosomes score equally.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Chromosome {
    bits: Vec<bool>,
}

impl Chromosome {
    pub fn new(bits: Vec<bool>) -> Self {
        Chromosome { bits }
    }

    /// All-member chromosome of the given length (needs repair before use).
    pub fn zeros(len: usize) -> Self {
        Chromosome {
            bits: vec![false; len],
        }
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn bit(&self, i: usize) -> bool {
        self.bits[i]
    }

    pub fn set(&mut self, i: usize, value: bool) {
        self.bits[i] = value;
    }

    pub fn flip(&mut self, i: usize) {
        self.bits[i] = !self.bits[i];
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn count_ones(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    /// Parses a '0'/'1' string, one character per node id.
    pub fn from_bit_string(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(Error::BadBitString(other)),
            })
            .collect::<Result<Vec<bool>>>()
            .map(Chromosome::new)
    }

    pub fn to_bit_string(&self) -> String {
        self.bits.iter().map(|&b| if b { '1' } else { '0' }).collect()
    }
}

impl fmt::Display for Chromosome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_bit_string())
    }
}

/// A decoded chromosome: who leads, and who follows whom.
///
/// Dead nodes appear nowhere; chromosome bits of dead nodes are inert.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClusterAssignment {
    /// Living head ids, ascending.
    head_ids: Vec<usize>,
    /// Per node id: the head a living member reports to. `None` for heads
    /// and for dead nodes.
    member_head: Vec<Option<usize>>,
}

impl ClusterAssignment {
    pub fn head_ids(&self) -> &[usize] {
        &self.head_ids
    }

    /// Head count; the paper-facing metrics call this TCH.
    pub fn head_count(&self) -> usize {
        self.head_ids.len()
    }

    pub fn is_head(&self, id: usize) -> bool {
        self.head_ids.binary_search(&id).is_ok()
    }

    /// The head a living member belongs to; `None` for heads and dead nodes.
    pub fn member_head(&self, id: usize) -> Option<usize> {
        self.member_head[id]
    }

    /// Living members mapped to each head, ascending on both levels.
    pub fn clusters(&self) -> Vec<(usize, Vec<usize>)> {
        let mut clusters: Vec<(usize, Vec<usize>)> = self
            .head_ids
            .iter()
            .map(|&h| (h, Vec::new()))
            .collect();
        for (id, head) in self.member_head.iter().enumerate() {
            if let Some(h) = head {
                let slot = clusters
                    .binary_search_by_key(h, |&(head_id, _)| head_id)
                    .expect("member maps to a known head");
                clusters[slot].1.push(id);
            }
        }
        clusters
    }
}

/// Assigns every living regular node to its nearest living head.
///
/// Distance ties go to the lowest head id. Fails with
/// [`Error::DegenerateChromosome`] when no living node has its head bit set;
/// callers that generate chromosomes blindly should [`repair`] first.
pub fn decode(chromosome: &Chromosome, deployment: &Deployment) -> Result<ClusterAssignment> {
    if chromosome.len() != deployment.node_count() {
        return Err(Error::ChromosomeLength {
            got: chromosome.len(),
            expected: deployment.node_count(),
        });
    }
    let head_ids: Vec<usize> = deployment
        .nodes
        .iter()
        .filter(|n| n.alive && chromosome.bit(n.id))
        .map(|n| n.id)
        .collect();
    if head_ids.is_empty() {
        return Err(Error::DegenerateChromosome);
    }
    let mut member_head = vec![None; deployment.node_count()];
    for node in deployment.nodes.iter().filter(|n| n.alive) {
        if chromosome.bit(node.id) {
            continue;
        }
        let nearest = head_ids
            .iter()
            .copied()
            .min_by(|&a, &b| {
                let da = distance(node.position, deployment.nodes[a].position);
                let db = distance(node.position, deployment.nodes[b].position);
                da.total_cmp(&db).then(a.cmp(&b))
            })
            .expect("head_ids is non-empty");
        member_head[node.id] = Some(nearest);
    }
    Ok(ClusterAssignment {
        head_ids,
        member_head,
    })
}

/// Ensures the chromosome has at least one living head.
///
/// An all-zero (or all-dead-head) chromosome gets the bit of the living node
/// nearest the sink, which is the cheapest single-head choice for the
/// head-to-sink leg and is deterministic.
pub fn repair(chromosome: &mut Chromosome, deployment: &Deployment) {
    let has_living_head = deployment
        .nodes
        .iter()
        .any(|n| n.alive && chromosome.bit(n.id));
    if !has_living_head {
        if let Some(id) = deployment.nearest_alive_to_sink() {
            chromosome.set(id, true);
        }
    }
}

/// Member-to-head distances plus head-to-sink distances.
pub fn rcsd(assignment: &ClusterAssignment, deployment: &Deployment) -> f64 {
    let member_legs: f64 = assignment
        .member_head
        .iter()
        .enumerate()
        .filter_map(|(id, head)| head.map(|h| (id, h)))
        .map(|(id, h)| {
            distance(
                deployment.nodes[id].position,
                deployment.nodes[h].position,
            )
        })
        .sum();
    let sink_legs: f64 = assignment
        .head_ids
        .iter()
        .map(|&h| deployment.distance_to_sink(h))
        .sum();
    member_legs + sink_legs
}

/// One round of cluster traffic summed over clusters.
pub fn transfer_energy(
    assignment: &ClusterAssignment,
    deployment: &Deployment,
    radio: &RadioModel,
) -> f64 {
    let bits = deployment.config.packet_bits;
    assignment
        .clusters()
        .iter()
        .map(|(head, members)| {
            let member_distances: Vec<f64> = members
                .iter()
                .map(|&m| {
                    distance(
                        deployment.nodes[m].position,
                        deployment.nodes[*head].position,
                    )
                })
                .collect();
            radio.cluster_transfer(bits, &member_distances, deployment.distance_to_sink(*head))
        })
        .sum()
}

/// Charges one round of physical traffic against node batteries.
///
/// Every member transmits one packet to its head; every head receives and
/// aggregates one packet per member and transmits one fused packet to the
/// sink. This is the complete per-member accounting, unlike the billed
/// transfer figure the optimizer scores. Spends clamp at the remaining
/// charge (a node cannot spend energy it does not have) and nodes that
/// reach zero are marked dead. Returns the total energy drained, which by
/// construction equals the sum of per-node battery decreases.
pub fn charge_round(
    assignment: &ClusterAssignment,
    deployment: &mut Deployment,
    radio: &RadioModel,
) -> f64 {
    let bits = deployment.config.packet_bits;
    let mut total = 0.0;
    for (head, members) in assignment.clusters() {
        let mut head_cost = radio.transmit(bits, deployment.distance_to_sink(head));
        for &m in &members {
            let d = distance(
                deployment.nodes[m].position,
                deployment.nodes[head].position,
            );
            total += deployment.nodes[m].drain(radio.transmit(bits, d));
            head_cost += radio.receive(bits) + radio.aggregate(bits);
        }
        total += deployment.nodes[head].drain(head_cost);
    }
    total
}

/// Weights of the generalized score `wE/E + wD*(TD-RCSD)/TD + wC*(N-TCH)/N`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FitnessWeights {
    pub energy: f64,
    pub distance: f64,
    pub heads: f64,
}

impl FitnessWeights {
    pub fn validate(&self) -> Result<()> {
        for (name, v) in [
            ("energy", self.energy),
            ("distance", self.distance),
            ("heads", self.heads),
        ] {
            if !v.is_finite() {
                return Err(Error::InvalidConfig(format!(
                    "fitness weight {name} must be finite, got {v}"
                )));
            }
        }
        Ok(())
    }
}

/// Which score formula the optimizer maximizes.
///
/// `Unnormalized` mixes raw units (`1/E + (TD-RCSD) + (N-TCH)`), which makes
/// the energy term negligible on realistic instances; `Normalized`
/// (`100/E + (TD-RCSD)/TD + (N-TCH)/N`) rescales so energy dominates.
/// `Weighted` generalizes the normalized form; `Normalized` is exactly
/// weights (100, 1, 1).
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub enum FitnessKind {
    #[serde(rename = "eq2")]
    Unnormalized,
    #[default]
    #[serde(rename = "eq3")]
    Normalized,
    #[serde(rename = "weights")]
    Weighted(FitnessWeights),
}

impl FitnessKind {
    pub fn validate(&self) -> Result<()> {
        match self {
            FitnessKind::Weighted(w) => w.validate(),
            _ => Ok(()),
        }
    }
}

/// Score plus every component it was assembled from, for metrics output.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FitnessBreakdown {
    pub fitness: f64,
    /// Transfer energy E over all clusters, joules.
    pub transfer_energy: f64,
    /// Total node-to-sink distance TD, meters.
    pub total_distance: f64,
    /// Clustered distance RCSD, meters.
    pub rcsd: f64,
    /// Head count TCH.
    pub head_count: usize,
    /// Living node count N.
    pub node_count: usize,
}

/// `num/den`, or zero when the denominator is zero (degenerate geometry
/// where every node sits on the sink).
fn ratio(num: f64, den: f64) -> f64 {
    if den == 0.0 {
        0.0
    } else {
        num / den
    }
}

impl FitnessKind {
    /// Decodes and scores a chromosome.
    pub fn evaluate(
        &self,
        chromosome: &Chromosome,
        deployment: &Deployment,
        radio: &RadioModel,
    ) -> Result<FitnessBreakdown> {
        let assignment = decode(chromosome, deployment)?;
        Ok(self.evaluate_assignment(&assignment, deployment, radio))
    }

    /// Scores an already-decoded assignment.
    pub fn evaluate_assignment(
        &self,
        assignment: &ClusterAssignment,
        deployment: &Deployment,
        radio: &RadioModel,
    ) -> FitnessBreakdown {
        let node_count = deployment.alive_count();
        let head_count = assignment.head_count();
        let total_distance = deployment.total_distance();
        let rcsd = rcsd(assignment, deployment);
        let transfer_energy = transfer_energy(assignment, deployment, radio);
        let spare_heads = (node_count - head_count) as f64;
        let fitness = match *self {
            FitnessKind::Unnormalized => {
                1.0 / transfer_energy + (total_distance - rcsd) + spare_heads
            }
            FitnessKind::Normalized => {
                100.0 / transfer_energy
                    + ratio(total_distance - rcsd, total_distance)
                    + ratio(spare_heads, node_count as f64)
            }
            FitnessKind::Weighted(w) => {
                let energy_term = if w.energy == 0.0 {
                    0.0
                } else {
                    w.energy / transfer_energy
                };
                energy_term
                    + w.distance * ratio(total_distance - rcsd, total_distance)
                    + w.heads * ratio(spare_heads, node_count as f64)
            }
        };
        FitnessBreakdown {
            fitness,
            transfer_energy,
            total_distance,
            rcsd,
            head_count,
            node_count,
        }
    }
}

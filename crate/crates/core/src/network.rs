//! The sensor field: nodes, sink, distances, and seeded deployments.
//!
//! The field is an axis-aligned rectangle centred on the origin, spanning
//! `[-width/2, width/2] x [-height/2, height/2]`. The sink may sit anywhere;
//! the default places it at `(0, 0)`, the middle of the field. All geometry
//! is planar Euclidean.

use crate::energy::RadioModel;
use crate::error::{Error, Result};
use crate::rng::{self, STREAM_DEPLOYMENT};
use serde::{Deserialize, Serialize};
use std::num::NonZeroU32;

/// A point in the plane, in meters.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const ORIGIN: Point = Point { x: 0.0, y: 0.0 };

    pub fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }
}

/// Euclidean distance between two points.
pub fn distance(a: Point, b: Point) -> f64 {
    let dx = a.x - b.x;
    let dy = a.y - b.y;
    (dx * dx + dy * dy).sqrt()
}

/// Static description of a sensor field.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct NetworkConfig {
    /// Number of sensor nodes.
    pub node_count: usize,
    /// Field width in meters.
    pub field_width: f64,
    /// Field height in meters.
    pub field_height: f64,
    /// Position of the sink (base station).
    pub sink_position: Point,
    /// Master seed; every stochastic stage derives its stream from it.
    pub seed: u64,
    /// Message size in bits used for all energy accounting.
    pub packet_bits: NonZeroU32,
}

impl Default for NetworkConfig {
    fn default() -> Self {
        NetworkConfig {
            node_count: 200,
            field_width: 200.0,
            field_height: 200.0,
            sink_position: Point::ORIGIN,
            seed: 1,
            packet_bits: NonZeroU32::new(2000).unwrap(),
        }
    }
}

impl NetworkConfig {
    pub fn validate(&self) -> Result<()> {
        if self.node_count < 2 {
            return Err(Error::InvalidConfig(format!(
                "node_count must be at least 2, got {}",
                self.node_count
            )));
        }
        if self.field_width.is_nan()
            || self.field_height.is_nan()
            || self.field_width <= 0.0
            || self.field_height <= 0.0
        {
            return Err(Error::InvalidConfig(format!(
                "field dimensions must be positive, got {} x {}",
                self.field_width, self.field_height
            )));
        }
        if !self.sink_position.x.is_finite() || !self.sink_position.y.is_finite() {
            return Err(Error::InvalidConfig("sink_position must be finite".into()));
        }
        Ok(())
    }

    /// Horizontal extent of the field: `[min_x, max_x]`.
    pub fn x_range(&self) -> (f64, f64) {
        (-self.field_width / 2.0, self.field_width / 2.0)
    }

    /// Vertical extent of the field: `[min_y, max_y]`.
    pub fn y_range(&self) -> (f64, f64) {
        (-self.field_height / 2.0, self.field_height / 2.0)
    }
}

/// A sensor node. Dead exactly when its residual energy has reached zero.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Node {
    pub id: usize,
    pub position: Point,
    pub residual_energy: f64,
    pub alive: bool,
}

impl Node {
    pub fn new(id: usize, position: Point, energy: f64) -> Self {
        Node {
            id,
            position,
            residual_energy: energy.max(0.0),
            alive: energy > 0.0,
        }
    }

    /// Drains up to `cost` joules and returns the amount actually spent.
    ///
    /// Residual energy never goes negative; a node that hits zero is dead.
    pub fn drain(&mut self, cost: f64) -> f64 {
        let spent = if cost >= self.residual_energy {
            self.residual_energy
        } else {
            cost
        };
        self.residual_energy -= spent;
        if self.residual_energy <= 0.0 {
            self.residual_energy = 0.0;
            self.alive = false;
        }
        spent
    }
}

/// A concrete placement of nodes in a field.
#[derive(Debug, Clone)]
pub struct Deployment {
    pub config: NetworkConfig,
    pub nodes: Vec<Node>,
}

/// Generates a deployment with all nodes alive at the default initial energy.
pub fn generate_deployment(config: &NetworkConfig) -> Result<Deployment> {
    generate_deployment_with_energy(config, RadioModel::default().initial_node_energy)
}

/// Generates a deployment with the given initial energy per node.
///
/// Positions are drawn independently and uniformly over the field rectangle
/// from the deployment stream of the master seed; regeneration with the same
/// config is bit-identical.
pub fn generate_deployment_with_energy(
    config: &NetworkConfig,
    initial_energy: f64,
) -> Result<Deployment> {
    config.validate()?;
    let mut rng = rng::stream(config.seed, STREAM_DEPLOYMENT);
    let (x0, x1) = config.x_range();
    let (y0, y1) = config.y_range();
    let nodes = (0..config.node_count)
        .map(|id| {
            let x = rng::range(&mut rng, x0, x1);
            let y = rng::range(&mut rng, y0, y1);
            Node::new(id, Point::new(x, y), initial_energy)
        })
        .collect();
    Ok(Deployment {
        config: config.clone(),
        nodes,
    })
}

impl Deployment {
    /// Builds a deployment from explicit nodes; used by JSON import and tests.
    ///
    /// Unlike [`generate_deployment`] this accepts any node count >= 1.
    pub fn from_nodes(config: NetworkConfig, nodes: Vec<Node>) -> Result<Self> {
        if nodes.is_empty() {
            return Err(Error::InvalidDeployment("no nodes".into()));
        }
        for (i, n) in nodes.iter().enumerate() {
            if n.id != i {
                return Err(Error::InvalidDeployment(format!(
                    "node ids must be 0..{} with no gaps, found {} at index {}",
                    nodes.len(),
                    n.id,
                    i
                )));
            }
        }
        let mut config = config;
        config.node_count = nodes.len();
        Ok(Deployment { config, nodes })
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn sink(&self) -> Point {
        self.config.sink_position
    }

    pub fn alive_count(&self) -> usize {
        self.nodes.iter().filter(|n| n.alive).count()
    }

    /// Ids of the nodes currently alive, ascending.
    pub fn alive_ids(&self) -> Vec<usize> {
        self.nodes
            .iter()
            .filter(|n| n.alive)
            .map(|n| n.id)
            .collect()
    }

    /// Distance from a node to the sink.
    pub fn distance_to_sink(&self, id: usize) -> f64 {
        distance(self.nodes[id].position, self.sink())
    }

    /// Sum of direct node-to-sink distances over the living nodes.
    pub fn total_distance(&self) -> f64 {
        self.nodes
            .iter()
            .filter(|n| n.alive)
            .map(|n| distance(n.position, self.sink()))
            .sum()
    }

    /// The living node closest to the sink (ties to the lowest id).
    pub fn nearest_alive_to_sink(&self) -> Option<usize> {
        self.nodes
            .iter()
            .filter(|n| n.alive)
            .map(|n| (distance(n.position, self.sink()), n.id))
            .min_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)))
            .map(|(_, id)| id)
    }
}

/// Wire form of a deployment: `{seed, field, sink, nodes:[{id, x, y, energy}]}`.
#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DeploymentFile {
    seed: u64,
    field: FieldSize,
    sink: Point,
    nodes: Vec<NodeRecord>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FieldSize {
    width: f64,
    height: f64,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct NodeRecord {
    id: usize,
    x: f64,
    y: f64,
    energy: f64,
}

impl Deployment {
    /// Serializes to the replayable JSON document.
    pub fn to_json(&self) -> Result<String> {
        let file = DeploymentFile {
            seed: self.config.seed,
            field: FieldSize {
                width: self.config.field_width,
                height: self.config.field_height,
            },
            sink: self.config.sink_position,
            nodes: self
                .nodes
                .iter()
                .map(|n| NodeRecord {
                    id: n.id,
                    x: n.position.x,
                    y: n.position.y,
                    energy: n.residual_energy,
                })
                .collect(),
        };
        Ok(serde_json::to_string_pretty(&file)?)
    }

    /// Parses the replayable JSON document.
    ///
    /// `packet_bits` is not part of the wire format; the caller supplies it
    /// (it lives in the run configuration).
    pub fn from_json(json: &str, packet_bits: NonZeroU32) -> Result<Self> {
        let file: DeploymentFile = serde_json::from_str(json)?;
        let config = NetworkConfig {
            node_count: file.nodes.len(),
            field_width: file.field.width,
            field_height: file.field.height,
            sink_position: file.sink,
            seed: file.seed,
            packet_bits,
        };
        let nodes = file
            .nodes
            .iter()
            .map(|r| Node::new(r.id, Point::new(r.x, r.y), r.energy))
            .collect();
        Deployment::from_nodes(config, nodes)
    }
}

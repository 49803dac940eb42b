//! Cluster-head election for static wireless sensor networks.
//!
//! A genetic algorithm searches the space of head elections (one bit per
//! node) for configurations that keep communication distance, head count,
//! and per-round transfer energy low; a probabilistic rotation baseline and
//! a round-by-round lifetime simulator measure what the resulting clusters
//! buy in network lifetime.

pub mod cli;
pub mod clustering;
pub mod config;
pub mod energy;
pub mod error;
pub mod ga;
pub mod leach;
pub mod lifetime;
pub mod network;
pub mod oracle;
pub mod plot;
pub mod report;
pub mod rng;

pub use error::{Error, Result};

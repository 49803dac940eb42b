//! Run configuration: one JSON document with a named section per
//! subsystem, parsed strictly so a typo never silently falls back to a
//! default.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::energy::RadioModel;
use crate::error::{Error, Result};
use crate::ga::GaParams;
use crate::leach::LeachParams;
use crate::lifetime::LifetimeConfig;
use crate::network::NetworkConfig;

/// Everything a run needs. Every section defaults independently, so a
/// config file may specify only the keys it wants to change.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct RunConfig {
    pub deployment: NetworkConfig,
    pub radio: RadioModel,
    pub ga: GaParams,
    pub leach: LeachParams,
    pub lifetime: LifetimeConfig,
    /// Every output file lands under this directory.
    pub output_dir: PathBuf,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            deployment: NetworkConfig::default(),
            radio: RadioModel::default(),
            ga: GaParams::default(),
            leach: LeachParams::default(),
            lifetime: LifetimeConfig::default(),
            output_dir: PathBuf::from("out"),
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        self.deployment.validate()?;
        self.radio.validate()?;
        self.ga.validate()?;
        self.leach.validate()?;
        self.lifetime.validate()?;
        if self.output_dir.as_os_str().is_empty() {
            return Err(Error::InvalidConfig("output_dir must not be empty".into()));
        }
        Ok(())
    }

    /// Strict parse: unknown keys anywhere in the document are an error.
    pub fn from_json(json: &str) -> Result<Self> {
        let config: RunConfig = serde_json::from_str(json)?;
        config.validate()?;
        Ok(config)
    }

    pub fn from_path(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| {
            Error::InvalidConfig(format!("cannot read config {}: {e}", path.display()))
        })?;
        Self::from_json(&text)
    }

    pub fn to_json_pretty(&self) -> Result<String> {
        let mut s = serde_json::to_string_pretty(self)?;
        s.push('\n');
        Ok(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clustering::FitnessKind;
    use crate::lifetime::Protocol;

    #[test]
    fn defaults_round_trip_and_validate() {
        let config = RunConfig::default();
        config.validate().unwrap();
        let json = config.to_json_pretty().unwrap();
        let back = RunConfig::from_json(&json).unwrap();
        assert_eq!(back.deployment.node_count, 200);
        assert_eq!(back.ga.population_size, 100);
        assert_eq!(back.leach.head_probability, 0.05);
        assert_eq!(back.lifetime.total_rounds, 1100);
        assert_eq!(back.output_dir, PathBuf::from("out"));
    }

    #[test]
    fn partial_document_fills_missing_sections_with_defaults() {
        let config = RunConfig::from_json(
            r#"{
                "deployment": { "node_count": 40, "seed": 9 },
                "ga": { "generations": 10, "fitness": "eq2" }
            }"#,
        )
        .unwrap();
        assert_eq!(config.deployment.node_count, 40);
        assert_eq!(config.deployment.seed, 9);
        assert_eq!(config.deployment.field_width, 200.0);
        assert_eq!(config.ga.generations, 10);
        assert_eq!(config.ga.fitness, FitnessKind::Unnormalized);
        assert_eq!(config.ga.population_size, 100);
        assert!(matches!(config.lifetime.protocol, Protocol::Ga(_)));
    }

    #[test]
    fn unknown_keys_are_rejected_at_any_depth() {
        assert!(RunConfig::from_json(r#"{ "colour": "red" }"#).is_err());
        assert!(RunConfig::from_json(r#"{ "ga": { "mutation": 0.3 } }"#).is_err());
        assert!(RunConfig::from_json(r#"{ "radio": { "elec": 1 } }"#).is_err());
    }

    #[test]
    fn invalid_sections_fail_validation() {
        assert!(RunConfig::from_json(r#"{ "deployment": { "node_count": 1 } }"#).is_err());
        assert!(RunConfig::from_json(r#"{ "ga": { "crossover_rate": 1.5 } }"#).is_err());
        assert!(RunConfig::from_json(r#"{ "leach": { "head_probability": 0 } }"#).is_err());
    }

    #[test]
    fn protocol_section_selects_leach() {
        let config = RunConfig::from_json(
            r#"{ "lifetime": { "protocol": { "leach": { "head_probability": 0.1 } } } }"#,
        )
        .unwrap();
        match config.lifetime.protocol {
            Protocol::Leach(p) => assert_eq!(p.head_probability, 0.1),
            other => panic!("expected leach, got {other:?}"),
        }
    }
}

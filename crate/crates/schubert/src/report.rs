//! Sweep configuration and the machine-readable verification report.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{FieldSpec, DEFAULT_PRIME};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepConfig {
    /// ambient dimensions 2..=d_max
    pub d_max: usize,
    /// subspace ranks 0..=r_max (where they fit, r + 2 <= d)
    pub r_max: usize,
    /// random instances per (d, r, class) cell
    pub per_class: usize,
    pub seed: u64,
    pub field: FieldSpec,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            d_max: 5,
            r_max: 2,
            per_class: 100,
            seed: 0,
            field: FieldSpec::Prime(DEFAULT_PRIME),
        }
    }
}

impl SweepConfig {
    pub fn validate(&self) -> Result<()> {
        if self.d_max < 2 {
            return Err(Error::Config("d_max must be at least 2".into()));
        }
        if self.d_max < self.r_max + 2 {
            return Err(Error::Config(format!(
                "d_max = {} leaves no room for rank {} subspaces; need d_max >= r_max + 2",
                self.d_max, self.r_max
            )));
        }
        if self.per_class == 0 {
            return Err(Error::Config("per_class must be positive".into()));
        }
        Ok(())
    }
}

/// Pass/fail tallies for one named invariant.
#[derive(Clone, Debug, Serialize)]
pub struct CheckCounter {
    pub name: String,
    pub pass: usize,
    pub fail: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub config: SweepConfig,
    /// flag-pair instances drawn (tangent checks run on every point found)
    pub instances: usize,
    /// instances where the sampler produced at least one stratum point
    pub instances_with_points: usize,
    pub checks: Vec<CheckCounter>,
    /// human-readable descriptions of every failure, capped in the driver
    pub failures: Vec<String>,
    pub ok: bool,
    pub wall_ms: u128,
}

impl VerifyReport {
    /// The report serialized with timing stripped: equal keys across runs
    /// witness determinism of the whole sweep.
    pub fn determinism_key(&self) -> String {
        let mut clone = self.clone();
        clone.wall_ms = 0;
        serde_json::to_string_pretty(&clone).expect("report serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_config_is_valid_and_round_trips() {
        let c = SweepConfig::default();
        c.validate().unwrap();
        let json = serde_json::to_string(&c).unwrap();
        let back: SweepConfig = serde_json::from_str(&json).unwrap();
        assert_eq!(c, back);
    }

    #[test]
    fn bad_configs_are_rejected() {
        let c = SweepConfig {
            d_max: 3,
            r_max: 2,
            ..SweepConfig::default()
        };
        assert!(c.validate().is_err());
        let c = SweepConfig {
            per_class: 0,
            ..SweepConfig::default()
        };
        assert!(c.validate().is_err());
    }

    #[test]
    fn determinism_key_ignores_timing() {
        let mk = |ms| VerifyReport {
            config: SweepConfig::default(),
            instances: 3,
            instances_with_points: 2,
            checks: vec![CheckCounter {
                name: "x".into(),
                pass: 5,
                fail: 0,
            }],
            failures: vec![],
            ok: true,
            wall_ms: ms,
        };
        assert_eq!(mk(10).determinism_key(), mk(99).determinism_key());
    }
}

//! Serializable record of a certification or sweep run.

use serde::{Deserialize, Serialize};

use crate::certify::{CertKind, Certificate, Residuals};
use crate::config::Config;

/// Serializable view of a [`Certificate`].
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CertificateSummary {
    pub kind: CertKind,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda_min: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub omega_coords: Option<Vec<f64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub omega_norm: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pairing: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dual_matrix: Option<Vec<f64>>,
    pub iterations: usize,
    pub delta: f64,
    pub residuals: Residuals,
}

impl CertificateSummary {
    pub fn from_certificate(cert: &Certificate, include_dual: bool) -> Self {
        Self {
            kind: cert.kind,
            lambda_min: cert.lambda_min,
            omega_coords: cert
                .omega_coords
                .as_ref()
                .map(|v| v.iter().copied().collect()),
            omega_norm: cert.omega.as_ref().map(|f| f.norm()),
            pairing: cert.pairing,
            dual_matrix: if include_dual {
                cert.dual
                    .as_ref()
                    .map(|m| m.transpose().iter().copied().collect())
            } else {
                None
            },
            iterations: cert.iterations,
            delta: cert.delta,
            residuals: cert.residuals.clone(),
        }
    }
}

/// One bracketed transition of a parameter sweep.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ThresholdBracket {
    /// Which predicate flips: "strongly_positive", "operator_positive" or
    /// "sec_positive".
    pub predicate: String,
    pub lo: f64,
    pub hi: f64,
    /// Whether the predicate holds at the lo endpoint (it flips at hi).
    pub held_at_lo: bool,
}

/// One step of a sweep.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SweepStep {
    pub param: f64,
    pub certificate_kind: CertKind,
    pub operator_lambda_min: f64,
    pub min_sec_estimate: f64,
}

/// Full record of a run; byte-identical across runs for a fixed seed and
/// config (wall time is only recorded when `config.timings` is set).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Report {
    pub space: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t_or_lambda: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<CertificateSummary>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub kernel_dims: Vec<usize>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub thresholds: Vec<ThresholdBracket>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub sweep: Vec<SweepStep>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kernel_reference_max_angle: Option<f64>,
    pub tool_version: String,
    pub config: Config,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<u128>,
}

impl Report {
    pub fn new(space: String, config: Config) -> Self {
        Self {
            space,
            t_or_lambda: None,
            certificate: None,
            kernel_dims: Vec::new(),
            thresholds: Vec::new(),
            sweep: Vec::new(),
            kernel_reference_max_angle: None,
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            config,
            wall_time_ms: None,
        }
    }

    pub fn to_json_string(&self) -> crate::Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_roundtrip_is_exact() {
        let mut report = Report::new("w6".into(), Config::default());
        report.t_or_lambda = Some(0.1 + 0.2); // a value without a short decimal
        report.kernel_dims = vec![4];
        report.thresholds.push(ThresholdBracket {
            predicate: "strongly_positive".into(),
            lo: 1.0 / 3.0,
            hi: 2.0 / 3.0,
            held_at_lo: true,
        });
        let text = report.to_json_string().unwrap();
        let back: Report = serde_json::from_str(&text).unwrap();
        assert_eq!(text, back.to_json_string().unwrap());
        assert_eq!(back.t_or_lambda, report.t_or_lambda);
        assert_eq!(back.thresholds[0].lo, report.thresholds[0].lo);
    }
}

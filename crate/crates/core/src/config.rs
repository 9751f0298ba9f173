use serde::{Deserialize, Serialize};

use crate::error::Result;

/// Numerical tolerances and solver budgets.
///
/// All tolerances are relative to the scale of the operator at hand unless
/// noted otherwise. `STRONGCURV_CONFIG` may point at a JSON file with any
/// subset of these fields; missing fields keep their defaults.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(default)]
pub struct Config {
    /// Relative tolerance for symmetry and zero tests.
    pub zero_tol: f64,
    /// Positive-definiteness margin for certification, relative to the
    /// operator norm: the solver looks for `lambda_min >= delta_rel * |R|`.
    pub delta_rel: f64,
    /// Acceptance threshold on `tr(R S)` for a dual certificate.
    pub eps_dual: f64,
    /// Slack allowed below zero when validating semidefiniteness.
    pub psd_eps: f64,
    /// Iteration budget for the alternating-projection solver.
    pub max_iters: usize,
    /// Convergence tolerance on the projection gap.
    pub solver_tol: f64,
    /// Restarts for the sectional-curvature minimization heuristic.
    pub minsec_restarts: usize,
    /// Gradient iterations per restart.
    pub minsec_iters: usize,
    /// Convergence tolerance on the minimized value.
    pub minsec_value_tol: f64,
    /// Bisection tolerance (in the sweep parameter) for threshold brackets.
    pub bisect_tol: f64,
    /// RNG seed for all randomized components.
    pub seed: u64,
    /// Record wall-clock timings in reports. Off by default so reports are
    /// byte-identical for a fixed seed and config.
    pub timings: bool,
    /// Search the full 4-form space instead of the invariant subspace.
    pub full_lambda4: bool,
}

impl Default for Config {
    fn default() -> Self {
        Self {
            zero_tol: 1e-9,
            delta_rel: 1e-6,
            eps_dual: 1e-8,
            psd_eps: 1e-9,
            max_iters: 5000,
            solver_tol: 1e-10,
            minsec_restarts: 20,
            minsec_iters: 200,
            minsec_value_tol: 1e-10,
            bisect_tol: 1e-3,
            seed: 0,
            timings: false,
            full_lambda4: false,
        }
    }
}

impl Config {
    /// Load overrides from the file named by `STRONGCURV_CONFIG`, if set.
    pub fn from_env() -> Result<Self> {
        match std::env::var_os("STRONGCURV_CONFIG") {
            Some(path) => {
                let text = std::fs::read_to_string(path)?;
                Ok(serde_json::from_str(&text)?)
            }
            None => Ok(Self::default()),
        }
    }
}

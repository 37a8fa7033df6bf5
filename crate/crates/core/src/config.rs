use serde::{Deserialize, Serialize};

/// Reproducibility and budget knobs shared by every solver and builder.
///
/// Each report embeds the configuration it ran under, so results can be
/// reproduced from the report alone.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    /// Seed for every pseudo-random choice (start vectors, sampled labelings).
    pub seed: u64,
    /// State spaces at or below this size are solved with the dense
    /// eigensolver; larger ones go through matrix-free Lanczos.
    pub dense_threshold: usize,
    /// Hard cap on the number of states any generator may enumerate.
    pub state_budget: usize,
    /// Residual bound for reported eigenpairs.
    pub tolerance: f64,
    /// Iteration cap for the Lanczos solver.
    pub max_iterations: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            seed: 1,
            dense_threshold: 2000,
            state_budget: 4_000_000,
            tolerance: 1e-9,
            max_iterations: 5000,
        }
    }
}

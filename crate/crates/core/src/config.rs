/// Bounds shared by the engine entry points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EngineConfig {
    /// Maximal degree of a polynomial factored over a number field.
    pub degree_bound: usize,
    /// Matrix size of the truncated model used by the ideal-closure oracle.
    pub truncation: usize,
    /// Random samples per window in the x0 search.
    pub x0_max_tries: usize,
    /// How many times the x0 search window may be widened by two blocks.
    pub x0_max_widenings: usize,
}

impl Default for EngineConfig {
    fn default() -> Self {
        EngineConfig {
            degree_bound: 8,
            truncation: 4,
            x0_max_tries: 200,
            x0_max_widenings: 3,
        }
    }
}

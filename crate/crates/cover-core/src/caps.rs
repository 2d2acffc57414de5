//! Resource limits for search and construction.

/// Limits applied by constructions and searches.
///
/// Finiteness of every result is guaranteed by the theory, but not its size,
/// so operations fail loudly with [`crate::CoverError::OrderCapExceeded`] or
/// [`crate::CoverError::SearchBudgetExceeded`] instead of hanging.
#[derive(Debug, Clone)]
pub struct Caps {
    /// Largest group order any construction may produce.
    pub max_order: usize,
    /// Number of candidate homomorphism extensions a single search may try.
    pub search_budget: u64,
    /// Iteration cap for the smallest-embedding-cover loop.
    pub max_sec_iters: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_order: 512,
            search_budget: 10_000_000,
            max_sec_iters: 32,
        }
    }
}

impl Caps {
    pub fn with_max_order(mut self, max_order: usize) -> Self {
        self.max_order = max_order;
        self
    }

    pub fn with_max_sec_iters(mut self, iters: usize) -> Self {
        self.max_sec_iters = iters;
        self
    }
}

//! Search budgets, overridable from the environment.

/// Environment variable overriding [`Budgets::search_nodes`].
pub const ENV_SEARCH_NODES: &str = "SEMIBRANCH_SEARCH_NODES";
/// Environment variable overriding [`Budgets::exhaustive_n`].
pub const ENV_EXHAUSTIVE_N: &str = "SEMIBRANCH_EXHAUSTIVE_N";

pub const DEFAULT_SEARCH_NODES: u64 = 1_000_000;
pub const DEFAULT_EXHAUSTIVE_N: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budgets {
    /// Node cap for the backtracking searches (path pairs, good pairs).
    pub search_nodes: u64,
    /// Largest order for which the obstruction detector is cross-checked by
    /// exhaustive ordered-partition search.
    pub exhaustive_n: usize,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets {
            search_nodes: DEFAULT_SEARCH_NODES,
            exhaustive_n: DEFAULT_EXHAUSTIVE_N,
        }
    }
}

impl Budgets {
    /// Defaults with any valid environment overrides applied. Unparsable
    /// values are ignored.
    pub fn from_env() -> Self {
        let mut b = Budgets::default();
        if let Some(x) = std::env::var(ENV_SEARCH_NODES)
            .ok()
            .and_then(|s| s.trim().parse().ok())
        {
            b.search_nodes = x;
        }
        if let Some(x) = std::env::var(ENV_EXHAUSTIVE_N)
            .ok()
            .and_then(|s| s.trim().parse().ok())
        {
            b.exhaustive_n = x;
        }
        b
    }
}

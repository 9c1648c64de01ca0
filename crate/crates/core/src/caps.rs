use serde::{Deserialize, Serialize};

use crate::line::{DEFAULT_MAX_DEPTH, DEFAULT_MAX_VERTICES};

/// Resource limits shared by towers, oracles and the harness.
///
/// Anything that hits one of these reports "undetermined" rather than a value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Caps {
    /// Largest tower level built, in vertices.
    pub max_vertices: usize,
    pub max_depth: usize,
    /// Largest graph handed to a Hamiltonian-family or trail oracle.
    pub oracle_max_vertices: usize,
    /// Largest edge count for the exhaustive collapsibility check.
    pub collapsible_max_edges: usize,
    /// Search nodes per oracle call before giving up.
    pub search_budget: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Self {
            max_vertices: DEFAULT_MAX_VERTICES,
            max_depth: DEFAULT_MAX_DEPTH,
            oracle_max_vertices: 2000,
            collapsible_max_edges: 14,
            search_budget: 2_000_000,
        }
    }
}

impl Caps {
    pub fn validate(&self) -> crate::Result<()> {
        if self.max_vertices == 0
            || self.max_depth == 0
            || self.oracle_max_vertices == 0
            || self.collapsible_max_edges == 0
            || self.search_budget == 0
        {
            return Err(crate::Error::Precondition("all caps must be positive".into()));
        }
        Ok(())
    }
}

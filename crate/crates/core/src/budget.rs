//! Resource guards for the exponential-time operations.
//!
//! Every enumeration in the crate is exact and therefore exponential somewhere;
//! the guards keep a mistyped CLI argument from looking like a hang.  All caps
//! are plain fields so callers can raise them deliberately.

use crate::error::{Error, Result};

/// Caps for the exponential operations.  `Default` gives desk-scale limits.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    /// Isomorphism search refuses graphs with more vertices than this.
    pub max_iso_vertices: usize,
    /// Switching-class enumeration refuses graphs with more edges than this
    /// (the class count is 2^(edges - vertices + components)).
    pub max_enumeration_edges: usize,
    /// Deletion-contraction refuses (merged) graphs with more edges than this.
    pub max_dc_edges: usize,
    /// Brute-force counting refuses when lambda^vertices exceeds this.
    pub max_coloring_tuples: u64,
    /// Arrangement computations refuse more coordinates than this.
    pub max_arrangement_dim: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_iso_vertices: 10,
            max_enumeration_edges: 20,
            max_dc_edges: 40,
            max_coloring_tuples: 100_000_000,
            max_arrangement_dim: 9,
        }
    }
}

impl Budget {
    /// A budget with every cap set to `n` (used by the CLI's global override).
    pub fn uniform(n: usize) -> Self {
        Budget {
            max_iso_vertices: n,
            max_enumeration_edges: n,
            max_dc_edges: n,
            max_coloring_tuples: n as u64,
            max_arrangement_dim: n,
        }
    }

    pub(crate) fn check(&self, what: &'static str, limit: usize, requested: usize) -> Result<()> {
        if requested > limit {
            Err(Error::BudgetExceeded { what, limit, requested })
        } else {
            Ok(())
        }
    }
}

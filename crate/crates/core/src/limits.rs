use crate::error::{Error, Result};

/// Size guards for exponential enumeration and hull computations.
///
/// Every guarded operation fails with [`Error::TooLarge`] instead of running
/// for an unbounded time.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest part count for operations that walk all `2^n` assignments.
    pub max_bruteforce: usize,
    /// Largest ambient dimension accepted by the hull.
    pub max_hull_dim: usize,
    /// Largest point count accepted by the hull.
    pub max_hull_points: usize,
    /// Largest `n` for a facet census.
    pub max_census_n: usize,
    /// Largest `n` for the all-pairs LP edge sweep.
    pub max_lp_edge_n: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_bruteforce: 20,
            max_hull_dim: 15,
            max_hull_points: 64,
            max_census_n: 4,
            max_lp_edge_n: 4,
        }
    }
}

impl Limits {
    pub fn check_bruteforce(&self, n: usize) -> Result<()> {
        guard(
            "brute-force bound",
            self.max_bruteforce,
            n,
            "--max-bruteforce",
        )
    }

    pub fn check_hull(&self, dim: usize, points: usize) -> Result<()> {
        guard(
            "hull dimension guard",
            self.max_hull_dim,
            dim,
            "--max-hull-dim",
        )?;
        guard(
            "hull point guard",
            self.max_hull_points,
            points,
            "--max-hull-points",
        )
    }

    pub fn check_census(&self, n: usize) -> Result<()> {
        guard("census size guard", self.max_census_n, n, "--allow-large")
    }

    pub fn check_lp_edges(&self, n: usize) -> Result<()> {
        guard(
            "LP edge sweep guard",
            self.max_lp_edge_n,
            n,
            "--max-lp-edge-n",
        )
    }
}

fn guard(name: &'static str, limit: usize, actual: usize, flag: &'static str) -> Result<()> {
    if actual > limit {
        Err(Error::TooLarge {
            guard: name,
            limit,
            actual,
            flag,
        })
    } else {
        Ok(())
    }
}

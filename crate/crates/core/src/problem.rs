use serde::{Deserialize, Serialize};

use crate::dp::{self, SolveOutcome, SolverConfig};
use crate::error::{Error, Result};
use crate::format::Instance;
use crate::graph::EdgeSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Problem {
    /// Undirected Eulerian Edge Deletion.
    Ueed,
    /// Undirected Connected Odd Edge Deletion.
    Ucoed,
    /// Directed Eulerian Edge Deletion.
    Deed,
}

impl Problem {
    pub fn is_directed(self) -> bool {
        self == Problem::Deed
    }

    pub fn name(self) -> &'static str {
        match self {
            Problem::Ueed => "ueed",
            Problem::Ucoed => "ucoed",
            Problem::Deed => "deed",
        }
    }

    fn mismatch(self) -> Error {
        let want = if self.is_directed() {
            "directed"
        } else {
            "undirected"
        };
        Error::InvalidArgument(format!("mode {} needs a {want} instance", self.name()))
    }

    /// Whether deleting `s` from `instance` gives the target property.
    pub fn verify(self, instance: &Instance, s: &EdgeSet) -> Result<bool> {
        match (self, instance) {
            (Problem::Ueed, Instance::Undirected(g)) => Ok(g.is_eulerian_after(s)),
            (Problem::Ucoed, Instance::Undirected(g)) => Ok(g.is_connected_odd_after(s)),
            (Problem::Deed, Instance::Directed(d)) => Ok(d.is_eulerian_after(s)),
            _ => Err(self.mismatch()),
        }
    }

    pub fn solve(self, instance: &Instance, k: usize, cfg: &SolverConfig) -> Result<SolveOutcome> {
        match (self, instance) {
            (Problem::Ueed, Instance::Undirected(g)) => dp::solve_ueed(g, k, cfg),
            (Problem::Ucoed, Instance::Undirected(g)) => dp::solve_ucoed(g, k, cfg),
            (Problem::Deed, Instance::Directed(d)) => dp::solve_directed(d, k, cfg),
            _ => Err(self.mismatch()),
        }
    }
}

impl std::fmt::Display for Problem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Problem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ueed" => Ok(Problem::Ueed),
            "ucoed" => Ok(Problem::Ucoed),
            "deed" => Ok(Problem::Deed),
            other => Err(Error::InvalidArgument(format!("unknown mode `{other}`"))),
        }
    }
}

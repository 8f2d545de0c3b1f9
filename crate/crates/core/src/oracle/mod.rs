//! Ground truth for testing: exhaustive search, minimum T-joins and planted
//! YES-instance generation.

mod generate;
mod tjoin;

pub use generate::{gen_yes_instance, Generated};
pub use tjoin::{min_tjoin, tjoin_lower_bound_prune, MAX_TJOIN_TERMINALS};

use crate::error::{Error, Result};
use crate::format::Instance;
use crate::graph::EdgeSet;
use crate::problem::Problem;

/// Default edge-count ceiling for [`brute_force`].
pub const DEFAULT_BRUTE_FORCE_MAX_EDGES: usize = 22;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleVerdict {
    /// Smallest solution size, or `None` when there is none of size `<= k`.
    pub min_size: Option<usize>,
    pub witness: Option<EdgeSet>,
}

/// Next integer with the same number of set bits (Gosper's hack).
fn next_combination(x: u64) -> u64 {
    let c = x & x.wrapping_neg();
    let r = x + c;
    (((r ^ x) >> 2) / c) | r
}

/// Enumerates deletion sets by increasing size `0..=k` and returns the
/// first one the exact verifier accepts.
pub fn brute_force(
    problem: Problem,
    instance: &Instance,
    k: usize,
    max_edges: usize,
) -> Result<OracleVerdict> {
    let m = instance.m();
    if m > max_edges || m >= 64 {
        return Err(Error::Resource(format!(
            "brute force is limited to {max_edges} edges, instance has {m}"
        )));
    }
    for size in 0..=k.min(m) {
        let limit = 1u64 << m;
        let mut mask = (1u64 << size) - 1;
        while mask < limit {
            let s = EdgeSet::from_ids(m, (0..m).filter(|&e| mask >> e & 1 == 1));
            if problem.verify(instance, &s)? {
                return Ok(OracleVerdict {
                    min_size: Some(size),
                    witness: Some(s),
                });
            }
            if size == 0 {
                break;
            }
            mask = next_combination(mask);
        }
    }
    Ok(OracleVerdict {
        min_size: None,
        witness: None,
    })
}

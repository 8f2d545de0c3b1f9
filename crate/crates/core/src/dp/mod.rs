//! Path-system dynamic programming with representative-family pruning, and
//! the three problem front ends built on it.
//!
//! A co-connected T-join of minimum size is a forest, hence a union of
//! `|T| / 2` edge-disjoint paths pairing up the terminals. Layer `i` of the
//! table holds path systems with `i` edges, indexed by the set of terminal
//! slots already consumed and the final vertex of the in-progress path.
//! After each layer every cell is cut down to a `(budget - i)`-representative
//! family in the co-graphic matroid, which keeps cells at most
//! `C(budget, i)` wide.
//!
//! Budgets are tried in increasing order, so the first success has minimum
//! size. Every returned set is re-checked with the matroid-free verifier.

mod partial;
mod slots;
mod table;

pub use partial::{compose, PartialSolution};
pub use slots::{Polarity, TerminalSlots, MAX_SLOTS};
pub use table::{
    dp_round, dp_round_directed, dp_round_undirected, Arena, CellKey, DpTable, Pruner,
    RoundContext, RoundStats,
};

use serde::{Deserialize, Serialize};

use crate::cographic::CographicRep;
use crate::error::{Error, Result};
use crate::gf2::ExtField;
use crate::graph::{Digraph, EdgeSet, Graph};
use crate::oracle;
use crate::repset::DEFAULT_MAX_COORDINATES;

/// Largest terminal count for which the minimum T-join lower bound is used.
const TJOIN_BOUND_MAX_TERMINALS: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RepsetMode {
    /// Seeded random truncation to rank `budget` over GF(2^s).
    Random,
    /// Untruncated representation over GF(2); deterministic.
    Off,
    /// No pruning at all. Exponential; for testing the recurrences.
    Disabled,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolverConfig {
    pub repset: RepsetMode,
    pub field_bits: u32,
    pub seed: u64,
    /// Wedge-length ceiling for [`RepsetMode::Off`].
    pub max_coordinates: usize,
    /// Start the budget loop at the minimum T-join size (undirected only).
    pub tjoin_bound: bool,
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self {
            repset: RepsetMode::Random,
            field_bits: 16,
            seed: 0,
            max_coordinates: DEFAULT_MAX_COORDINATES,
            tjoin_bound: true,
        }
    }
}

impl SolverConfig {
    pub fn exact() -> Self {
        Self {
            repset: RepsetMode::Off,
            ..Self::default()
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SolveStats {
    /// Budgets attempted, in order.
    pub budgets: Vec<usize>,
    /// DP rounds executed over all budgets.
    pub rounds: usize,
    /// Non-empty cells summed over all rounds.
    pub cells: usize,
    /// Largest pruned family per round, in execution order.
    pub repset_sizes: Vec<usize>,
    /// `(budget, layer)` of each entry of `repset_sizes`.
    pub round_layers: Vec<(usize, usize)>,
    /// Largest cell before pruning over the whole run.
    pub max_cell: usize,
    /// Seed actually used (differs from the configured one after a retry).
    pub seed: u64,
}

impl SolveStats {
    pub fn repset_max(&self) -> usize {
        self.repset_sizes.iter().copied().max().unwrap_or(0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveOutcome {
    /// Deleted edge/arc ids, or `None` for a NO answer.
    pub deletion: Option<EdgeSet>,
    pub stats: SolveStats,
}

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    x = (x ^ (x >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    x ^ (x >> 31)
}

/// Seed for the truncation used at `budget`.
pub fn budget_seed(seed: u64, budget: usize) -> u64 {
    splitmix64(seed ^ splitmix64(budget as u64))
}

/// Seed for the single retry after a failed verification.
pub fn retry_seed(seed: u64) -> u64 {
    splitmix64(seed ^ 0xA5A5_A5A5_5A5A_5A5A)
}

/// Runs layers `1..=budget` and returns the first member of the final
/// all-slots-used, no-path-in-progress cell.
pub fn run_budget(
    arena: Arena<'_>,
    slots: &TerminalSlots,
    matroid: &CographicRep,
    budget: usize,
    cfg: &SolverConfig,
    seed: u64,
    stats: &mut SolveStats,
) -> Result<Option<EdgeSet>> {
    let field = ExtField::with_degree(cfg.field_bits)?;
    let truncated = match cfg.repset {
        RepsetMode::Random => Some(matroid.truncate(budget, field, budget_seed(seed, budget))?),
        _ => None,
    };
    let pruner = match (&truncated, cfg.repset) {
        (Some(rep), _) => Pruner::Truncated { rep },
        (None, RepsetMode::Off) => Pruner::Exact {
            rep: matroid,
            max_coordinates: cfg.max_coordinates,
        },
        (None, _) => Pruner::Identity,
    };
    let ctx = RoundContext {
        arena,
        slots,
        matroid,
        budget,
    };

    stats.budgets.push(budget);
    let mut table = DpTable::base(arena.m());
    for layer in 1..=budget {
        let (next, round) = dp_round(&table, &ctx, &pruner)?;
        stats.round_layers.push((budget, layer));
        stats.rounds += 1;
        stats.cells += round.cells;
        stats.max_cell = stats.max_cell.max(round.max_candidates);
        stats.repset_sizes.push(round.max_family);
        table = next;
        if table.cell_count() == 0 {
            return Ok(None);
        }
    }
    Ok(table
        .cell(slots.full_mask(), None)
        .first()
        .map(|p| p.edges.clone()))
}

/// Budget loop shared by all front ends. `verify` is the exact check of a
/// candidate answer.
fn budget_loop(
    arena: Arena<'_>,
    slots: &TerminalSlots,
    matroid: &CographicRep,
    budgets: std::ops::RangeInclusive<usize>,
    cfg: &SolverConfig,
    verify: impl Fn(&EdgeSet) -> bool,
) -> Result<SolveOutcome> {
    let mut seed = cfg.seed;
    for attempt in 0..2 {
        let mut stats = SolveStats {
            seed,
            ..SolveStats::default()
        };
        let mut found = None;
        for budget in budgets.clone() {
            if budget > matroid.rank() {
                break;
            }
            if let Some(s) = run_budget(arena, slots, matroid, budget, cfg, seed, &mut stats)? {
                found = Some(s);
                break;
            }
        }
        match found {
            Some(s) if !verify(&s) => {
                if attempt == 0 {
                    seed = retry_seed(seed);
                    continue;
                }
                return Err(Error::Internal(format!(
                    "solution {s:?} failed verification after a retry"
                )));
            }
            deletion => return Ok(SolveOutcome { deletion, stats }),
        }
    }
    unreachable!("the second attempt always returns")
}

fn trivial(width: usize, seed: u64, yes: bool) -> SolveOutcome {
    SolveOutcome {
        deletion: yes.then(|| EdgeSet::new(width)),
        stats: SolveStats {
            seed,
            ..SolveStats::default()
        },
    }
}

/// Smallest `S`, `|S| <= k`, such that `S` is a T-join and `G \ S` is connected.
pub fn solve_co_connected_tjoin(
    g: &Graph,
    terminals: &[usize],
    k: usize,
    cfg: &SolverConfig,
) -> Result<SolveOutcome> {
    if !g.is_connected(&g.empty_set()) {
        return Err(Error::Disconnected);
    }
    if terminals.len() % 2 == 1 || terminals.len() > 2 * k {
        return Ok(trivial(g.m(), cfg.seed, false));
    }
    if terminals.is_empty() {
        return Ok(trivial(g.m(), cfg.seed, true));
    }
    let mut first = (terminals.len() / 2).max(1);
    if cfg.tjoin_bound && terminals.len() <= TJOIN_BOUND_MAX_TERMINALS {
        first = first.max(oracle::min_tjoin(g, terminals)?.len());
    }
    if first > k {
        return Ok(trivial(g.m(), cfg.seed, false));
    }
    let slots = TerminalSlots::undirected(g.n(), terminals)?;
    let matroid = CographicRep::build(g)?;
    let mut wanted = terminals.to_vec();
    wanted.sort_unstable();
    budget_loop(
        Arena::Undirected(g),
        &slots,
        &matroid,
        first..=k,
        cfg,
        |s| g.odd_vertices_of(s) == wanted && g.is_connected(s),
    )
}

/// Undirected Eulerian Edge Deletion.
pub fn solve_ueed(g: &Graph, k: usize, cfg: &SolverConfig) -> Result<SolveOutcome> {
    let out = solve_co_connected_tjoin(g, &g.odd_vertices(), k, cfg)?;
    debug_assert!(out.deletion.as_ref().is_none_or(|s| g.is_eulerian_after(s)));
    Ok(out)
}

/// Undirected Connected Odd Edge Deletion: the terminals are the even-degree vertices.
pub fn solve_ucoed(g: &Graph, k: usize, cfg: &SolverConfig) -> Result<SolveOutcome> {
    let terminals = g.even_vertices();
    if terminals.len() % 2 == 1 {
        if !g.is_connected(&g.empty_set()) {
            return Err(Error::Disconnected);
        }
        return Ok(trivial(g.m(), cfg.seed, false));
    }
    let out = solve_co_connected_tjoin(g, &terminals, k, cfg)?;
    debug_assert!(out
        .deletion
        .as_ref()
        .is_none_or(|s| g.is_connected_odd_after(s)));
    Ok(out)
}

/// Directed Eulerian Edge Deletion.
pub fn solve_directed(d: &Digraph, k: usize, cfg: &SolverConfig) -> Result<SolveOutcome> {
    let underlying = d.underlying();
    if !underlying.is_connected(&underlying.empty_set()) {
        return Err(Error::Disconnected);
    }
    let slots = TerminalSlots::directed(d)?;
    if slots.is_empty() {
        return Ok(trivial(d.m(), cfg.seed, true));
    }
    let surplus = slots.count(Polarity::Plus);
    if surplus > k {
        return Ok(trivial(d.m(), cfg.seed, false));
    }
    let matroid = CographicRep::build(&underlying)?;
    budget_loop(
        Arena::Directed(d),
        &slots,
        &matroid,
        surplus.max(1)..=k,
        cfg,
        |s| d.is_eulerian_after(s),
    )
}

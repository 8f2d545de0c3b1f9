use std::collections::{BTreeMap, HashSet};

use super::partial::{compose, PartialSolution};
use super::slots::TerminalSlots;
use crate::cographic::{CographicRep, TruncatedRep};
use crate::error::Result;
use crate::graph::{Digraph, EdgeSet, Graph};
use crate::repset::{representative_family, LinearRep, SetFamily};

/// Cell coordinates: used slot mask and final vertex (`None` for ε).
pub type CellKey = (u64, Option<usize>);

/// All cells of one DP layer; every member of a layer has the same size.
#[derive(Clone, Debug)]
pub struct DpTable {
    size: usize,
    cells: BTreeMap<CellKey, Vec<PartialSolution>>,
}

impl DpTable {
    /// Layer 0: only the empty path system, in cell (∅, ε).
    pub fn base(width: usize) -> Self {
        Self {
            size: 0,
            cells: BTreeMap::from([((0, None), vec![PartialSolution::empty(width)])]),
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn cell(&self, used: u64, final_vertex: Option<usize>) -> &[PartialSolution] {
        self.cells
            .get(&(used, final_vertex))
            .map_or(&[], Vec::as_slice)
    }

    /// Non-empty cells in key order.
    pub fn cells(&self) -> impl Iterator<Item = (&CellKey, &Vec<PartialSolution>)> {
        self.cells.iter()
    }

    pub fn cell_count(&self) -> usize {
        self.cells.len()
    }

    pub fn member_count(&self) -> usize {
        self.cells.values().map(Vec::len).sum()
    }

    pub fn max_family(&self) -> usize {
        self.cells.values().map(Vec::len).max().unwrap_or(0)
    }
}

/// The graph the paths live in: edges are walked both ways, arcs forward only.
#[derive(Clone, Copy, Debug)]
pub enum Arena<'a> {
    Undirected(&'a Graph),
    Directed(&'a Digraph),
}

impl Arena<'_> {
    pub fn n(&self) -> usize {
        match self {
            Arena::Undirected(g) => g.n(),
            Arena::Directed(d) => d.n(),
        }
    }

    pub fn m(&self) -> usize {
        match self {
            Arena::Undirected(g) => g.m(),
            Arena::Directed(d) => d.m(),
        }
    }

    /// `(edge id, other endpoint)` for every edge leaving `u`.
    fn steps(&self, u: usize) -> Vec<(usize, usize)> {
        match self {
            Arena::Undirected(g) => g
                .incident(u)
                .iter()
                .map(|&e| (e, g.other_end(e, u)))
                .collect(),
            Arena::Directed(d) => d.out_arcs(u).iter().map(|&a| (a, d.arc(a).1)).collect(),
        }
    }
}

/// How each cell is thinned after a round.
#[derive(Clone, Copy, Debug)]
pub enum Pruner<'a> {
    /// Keep every partial solution.
    Identity,
    /// Representative family in the untruncated co-graphic matroid.
    Exact {
        rep: &'a CographicRep,
        max_coordinates: usize,
    },
    /// Representative family in a rank-`budget` truncation.
    Truncated { rep: &'a TruncatedRep },
}

#[derive(Clone, Copy, Debug)]
pub struct RoundContext<'a> {
    pub arena: Arena<'a>,
    pub slots: &'a TerminalSlots,
    /// Co-graphic matroid of the (underlying) graph, used for the exact
    /// connectivity filter.
    pub matroid: &'a CographicRep,
    /// Target solution size; the pruning parameter is `budget - size`.
    pub budget: usize,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct RoundStats {
    /// Largest cell before pruning.
    pub max_candidates: usize,
    /// Largest cell after pruning.
    pub max_family: usize,
    /// Non-empty cells after pruning.
    pub cells: usize,
}

#[derive(Default)]
struct CellBuilder {
    members: Vec<PartialSolution>,
    seen: HashSet<(EdgeSet, Vec<usize>)>,
}

impl CellBuilder {
    fn push(&mut self, p: PartialSolution) {
        if self.seen.insert(p.cell_key()) {
            self.members.push(p);
        }
    }
}

/// Computes layer `prev.size() + 1` from `prev`.
///
/// Each member either extends its in-progress path along an edge leaving its
/// final vertex, or (with no path in progress) opens a new path at a free
/// start slot. Whenever the new final vertex carries a free end slot, the
/// closed variant is produced as well. States that cannot use every slot
/// within the budget are discarded, then each cell is pruned.
pub fn dp_round(
    prev: &DpTable,
    ctx: &RoundContext<'_>,
    pruner: &Pruner<'_>,
) -> Result<(DpTable, RoundStats)> {
    let size = prev.size + 1;
    let remaining = ctx.budget.saturating_sub(size);
    let mut building: BTreeMap<CellKey, CellBuilder> = BTreeMap::new();
    let mut emit = |p: PartialSolution| {
        let fits = ctx
            .slots
            .edges_needed(p.used_slots, p.final_vertex.is_some())
            .is_some_and(|need| need <= remaining);
        if fits {
            building
                .entry((p.used_slots, p.final_vertex))
                .or_default()
                .push(p);
        }
    };

    for (&(used, final_vertex), members) in &prev.cells {
        match final_vertex {
            Some(u) => {
                for (id, w) in ctx.arena.steps(u) {
                    for p in members {
                        let Some(next) = compose(p, id, u, w, ctx.matroid) else {
                            continue;
                        };
                        if let Some(slot) = ctx.slots.free_end(w, used) {
                            emit(next.clone().close(slot));
                        }
                        emit(next);
                    }
                }
            }
            None => {
                for start in ctx.slots.openable(used).collect::<Vec<_>>() {
                    let x = ctx.slots.slot(start).0;
                    let opened = used | 1 << start;
                    for (id, w) in ctx.arena.steps(x) {
                        for p in members {
                            let Some(mut next) = compose(p, id, x, w, ctx.matroid) else {
                                continue;
                            };
                            next.used_slots = opened;
                            next.last_path_initial_slot = Some(start);
                            if let Some(slot) = ctx.slots.free_end(w, opened) {
                                emit(next.clone().close(slot));
                            }
                            emit(next);
                        }
                    }
                }
            }
        }
    }

    let q = ctx.budget.saturating_sub(size);
    let mut stats = RoundStats::default();
    let mut cells = BTreeMap::new();
    for (key, builder) in building {
        stats.max_candidates = stats.max_candidates.max(builder.members.len());
        let kept = prune(builder.members, size, q, pruner)?;
        if !kept.is_empty() {
            stats.max_family = stats.max_family.max(kept.len());
            cells.insert(key, kept);
        }
    }
    stats.cells = cells.len();
    Ok((DpTable { size, cells }, stats))
}

fn prune(
    members: Vec<PartialSolution>,
    size: usize,
    q: usize,
    pruner: &Pruner<'_>,
) -> Result<Vec<PartialSolution>> {
    let (rep, max_coordinates): (&dyn LinearRep, usize) = match *pruner {
        Pruner::Identity => return Ok(members),
        Pruner::Exact {
            rep,
            max_coordinates,
        } => (rep, max_coordinates),
        Pruner::Truncated { rep } => (rep, usize::MAX),
    };
    let mut family = SetFamily::new(size);
    for p in members {
        family.push(p.edges.clone(), p);
    }
    let kept = representative_family(family, rep, q, max_coordinates)?;
    Ok(kept.into_members().into_iter().map(|(_, p)| p).collect())
}

/// One round over an undirected graph.
pub fn dp_round_undirected(
    prev: &DpTable,
    g: &Graph,
    slots: &TerminalSlots,
    matroid: &CographicRep,
    budget: usize,
    pruner: &Pruner<'_>,
) -> Result<DpTable> {
    let ctx = RoundContext {
        arena: Arena::Undirected(g),
        slots,
        matroid,
        budget,
    };
    Ok(dp_round(prev, &ctx, pruner)?.0)
}

/// One round over a digraph; `matroid` is built on its underlying multigraph.
pub fn dp_round_directed(
    prev: &DpTable,
    d: &Digraph,
    slots: &TerminalSlots,
    matroid: &CographicRep,
    budget: usize,
    pruner: &Pruner<'_>,
) -> Result<DpTable> {
    let ctx = RoundContext {
        arena: Arena::Directed(d),
        slots,
        matroid,
        budget,
    };
    Ok(dp_round(prev, &ctx, pruner)?.0)
}

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{EdgeSet, Graph};

/// Largest terminal set accepted by [`min_tjoin`] (the matching DP is
/// exponential in it).
pub const MAX_TJOIN_TERMINALS: usize = 24;

/// BFS distances and parent edges from `source`.
fn bfs(g: &Graph, source: usize) -> (Vec<usize>, Vec<Option<usize>>) {
    let mut dist = vec![usize::MAX; g.n()];
    let mut parent = vec![None; g.n()];
    dist[source] = 0;
    let mut queue = VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        for &e in g.incident(u) {
            let w = g.other_end(e, u);
            if dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                parent[w] = Some(e);
                queue.push_back(w);
            }
        }
    }
    (dist, parent)
}

/// Minimum-cardinality T-join: pairwise BFS distances between terminals,
/// a minimum perfect matching on them by subset DP, and the symmetric
/// difference of the matched shortest paths.
pub fn min_tjoin(g: &Graph, terminals: &[usize]) -> Result<EdgeSet> {
    let t = terminals.len();
    if t % 2 == 1 {
        return Err(Error::InvalidArgument(
            "a T-join needs an even number of terminals".to_string(),
        ));
    }
    if t > MAX_TJOIN_TERMINALS {
        return Err(Error::Resource(format!(
            "{t} terminals exceed the matching limit of {MAX_TJOIN_TERMINALS}"
        )));
    }
    let searches: Vec<_> = terminals.iter().map(|&s| bfs(g, s)).collect();
    let dist = |i: usize, j: usize| searches[i].0[terminals[j]];
    if (0..t).any(|j| dist(0, j) == usize::MAX) {
        return Err(Error::Disconnected);
    }

    // best[mask] = cheapest perfect matching of the terminals in mask
    let full = (1usize << t) - 1;
    let mut best = vec![usize::MAX; full + 1];
    let mut choice = vec![(0usize, 0usize); full + 1];
    best[0] = 0;
    for mask in 1..=full {
        if mask.count_ones() % 2 == 1 {
            continue;
        }
        let i = mask.trailing_zeros() as usize;
        let rest = mask & !(1 << i);
        let mut bits = rest;
        while bits != 0 {
            let j = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let sub = rest & !(1 << j);
            if best[sub] == usize::MAX {
                continue;
            }
            let cost = best[sub] + dist(i, j);
            if cost < best[mask] {
                best[mask] = cost;
                choice[mask] = (i, j);
            }
        }
    }

    let mut join = EdgeSet::new(g.m());
    let mut mask = full;
    while mask != 0 {
        let (i, j) = choice[mask];
        let parent = &searches[i].1;
        let mut v = terminals[j];
        while let Some(e) = parent[v] {
            if join.contains(e) {
                join.remove(e);
            } else {
                join.insert(e);
            }
            v = g.other_end(e, v);
        }
        mask &= !(1 << i) & !(1 << j);
    }
    debug_assert_eq!(join.len(), best[full]);
    Ok(join)
}

/// Fast NO filter: every co-connected T-join is a T-join, so none of size
/// `<= k` exists when the minimum T-join is larger than `k`.
pub fn tjoin_lower_bound_prune(g: &Graph, terminals: &[usize], k: usize) -> Result<bool> {
    Ok(min_tjoin(g, terminals)?.len() <= k)
}

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::format::Instance;
use crate::graph::{Digraph, EdgeSet, Graph};
use crate::problem::Problem;

const MAX_CYCLE_FAILURES: usize = 1000;

/// A planted YES instance: deleting `planted` restores the Eulerian base,
/// so the optimum is at most `k = planted.len()`.
#[derive(Clone, Debug)]
pub struct Generated {
    pub instance: Instance,
    pub k: usize,
    pub planted: EdgeSet,
}

fn key(directed: bool, u: usize, v: usize) -> (usize, usize) {
    if directed {
        (u, v)
    } else {
        (u.min(v), u.max(v))
    }
}

/// Random connected Eulerian base (a Hamiltonian cycle plus further random
/// simple cycles until about `base_edges` edges) with `extra` new edges added.
/// `base_edges` defaults to `n`, i.e. just the Hamiltonian cycle.
pub fn gen_yes_instance(
    mode: Problem,
    n: usize,
    extra: usize,
    base_edges: Option<usize>,
    seed: u64,
) -> Result<Generated> {
    let directed = match mode {
        Problem::Ueed => false,
        Problem::Deed => true,
        Problem::Ucoed => {
            return Err(Error::InvalidArgument(
                "generation supports ueed and deed".to_string(),
            ))
        }
    };
    if n < 3 {
        return Err(Error::InvalidArgument(format!(
            "n = {n} cannot host a simple cycle"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut present: HashSet<(usize, usize)> = HashSet::new();
    let mut pairs: Vec<(usize, usize)> = Vec::new();

    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut rng);
    for i in 0..n {
        let (u, v) = (order[i], order[(i + 1) % n]);
        present.insert(key(directed, u, v));
        pairs.push((u, v));
    }

    let target = base_edges.unwrap_or(n);
    let mut failures = 0;
    while target.saturating_sub(pairs.len()) >= 3 && failures < MAX_CYCLE_FAILURES {
        let len = rng.gen_range(3..=n.min(target - pairs.len()));
        let (cycle, _) = order.partial_shuffle(&mut rng, len);
        let cycle = cycle.to_vec();
        let edges: Vec<(usize, usize)> =
            (0..len).map(|i| (cycle[i], cycle[(i + 1) % len])).collect();
        if edges
            .iter()
            .any(|&(u, v)| present.contains(&key(directed, u, v)))
        {
            failures += 1;
            continue;
        }
        for &(u, v) in &edges {
            present.insert(key(directed, u, v));
            pairs.push((u, v));
        }
    }

    let mut candidates: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (0..n).map(move |v| (u, v)))
        .filter(|&(u, v)| u != v && (directed || u < v))
        .filter(|&(u, v)| !present.contains(&key(directed, u, v)))
        .collect();
    if candidates.len() < extra {
        return Err(Error::InvalidArgument(format!(
            "only {} free vertex pairs remain for {extra} extra edges",
            candidates.len()
        )));
    }
    let (chosen, _) = candidates.partial_shuffle(&mut rng, extra);
    let base_len = pairs.len();
    pairs.extend(chosen.iter().map(|&(u, v)| {
        if !directed && rng.gen::<bool>() {
            (v, u)
        } else {
            (u, v)
        }
    }));

    let mut ids: Vec<usize> = (0..pairs.len()).collect();
    ids.shuffle(&mut rng);
    let shuffled: Vec<(usize, usize)> = ids.iter().map(|&i| pairs[i]).collect();
    let planted = EdgeSet::from_ids(
        pairs.len(),
        ids.iter()
            .enumerate()
            .filter(|&(_, &i)| i >= base_len)
            .map(|(pos, _)| pos),
    );
    let instance = if directed {
        Instance::Directed(Digraph::from_arcs(n, &shuffled)?)
    } else {
        Instance::Undirected(Graph::from_edges(n, &shuffled)?)
    };
    Ok(Generated {
        instance,
        k: extra,
        planted,
    })
}

//! Test-side oracles. Nothing here calls into the library's verifiers, so
//! agreement with the solver is evidence rather than tautology.
#![allow(dead_code)]

use eulerian_deletion::{Digraph, EdgeSet, Graph};
use rand::Rng;

pub type Edges = Vec<(usize, usize)>;

/// Bit `i` of `mask`; ids past 63 are never set.
fn bit(mask: u64, i: usize) -> bool {
    mask.checked_shr(i as u32).is_some_and(|x| x & 1 == 1)
}

/// Whether the graph on `n` vertices keeping the edges not in `deleted` is
/// connected (arcs are read as undirected). Isolated vertices disconnect.
pub fn connected_after(n: usize, edges: &[(usize, usize)], deleted: u64) -> bool {
    if n <= 1 {
        return true;
    }
    let mut adj = vec![Vec::new(); n];
    for (i, &(u, v)) in edges.iter().enumerate() {
        if !bit(deleted, i) {
            adj[u].push(v);
            adj[v].push(u);
        }
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(u) = stack.pop() {
        for &w in &adj[u] {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen.into_iter().all(|x| x)
}

fn degrees(n: usize, edges: &[(usize, usize)], deleted: u64) -> Vec<usize> {
    let mut deg = vec![0; n];
    for (i, &(u, v)) in edges.iter().enumerate() {
        if !bit(deleted, i) {
            deg[u] += 1;
            deg[v] += 1;
        }
    }
    deg
}

pub fn ueed_ok(n: usize, edges: &[(usize, usize)], deleted: u64) -> bool {
    degrees(n, edges, deleted).iter().all(|d| d % 2 == 0) && connected_after(n, edges, deleted)
}

/// [`ueed_ok`] for graphs too large for a `u64` mask.
pub fn ueed_ok_ids(n: usize, edges: &[(usize, usize)], deleted: &[usize]) -> bool {
    let kept: Edges = (0..edges.len())
        .filter(|e| !deleted.contains(e))
        .map(|e| edges[e])
        .collect();
    ueed_ok(n, &kept, 0)
}

pub fn ucoed_ok(n: usize, edges: &[(usize, usize)], deleted: u64) -> bool {
    degrees(n, edges, deleted).iter().all(|d| d % 2 == 1) && connected_after(n, edges, deleted)
}

pub fn deed_ok(n: usize, arcs: &[(usize, usize)], deleted: u64) -> bool {
    let mut balance = vec![0i64; n];
    for (i, &(u, v)) in arcs.iter().enumerate() {
        if !bit(deleted, i) {
            balance[u] += 1;
            balance[v] -= 1;
        }
    }
    balance.iter().all(|&b| b == 0) && connected_after(n, arcs, deleted)
}

/// Smallest `|S| <= k` accepted by `ok`, by scanning every subset.
pub fn brute_min(m: usize, k: usize, ok: impl Fn(u64) -> bool) -> Option<usize> {
    (0u64..1 << m)
        .filter(|s| s.count_ones() as usize <= k)
        .filter(|&s| ok(s))
        .map(|s| s.count_ones() as usize)
        .min()
}

pub fn mask_of(s: &EdgeSet) -> u64 {
    s.iter().fold(0, |acc, e| acc | 1 << e)
}

pub fn set_of(m: usize, mask: u64) -> EdgeSet {
    EdgeSet::from_ids(m, (0..m).filter(|&e| mask >> e & 1 == 1))
}

/// Every labelled connected simple graph on `n` vertices with at most
/// `max_m` edges, edges listed in lexicographic pair order.
pub fn connected_graphs(n: usize, max_m: usize) -> Vec<Edges> {
    let pairs: Edges = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let mut out = Vec::new();
    for mask in 0u64..1 << pairs.len() {
        let m = mask.count_ones() as usize;
        if m + 1 < n || m > max_m {
            continue;
        }
        let edges: Edges = (0..pairs.len())
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| pairs[i])
            .collect();
        if connected_after(n, &edges, 0) {
            out.push(edges);
        }
    }
    out
}

/// Random weakly connected digraph without repeated arcs: a random spanning
/// tree with random orientations, topped up with random arcs.
pub fn random_digraph<R: Rng>(rng: &mut R, n: usize, m: usize) -> Edges {
    assert!(m + 1 >= n && m <= n * (n - 1));
    let mut arcs: Edges = Vec::new();
    for v in 1..n {
        let u = rng.gen_range(0..v);
        arcs.push(if rng.gen() { (u, v) } else { (v, u) });
    }
    while arcs.len() < m {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u != v && !arcs.contains(&(u, v)) {
            arcs.push((u, v));
        }
    }
    // shuffle ids so the tree arcs are not always first
    for i in (1..arcs.len()).rev() {
        arcs.swap(i, rng.gen_range(0..=i));
    }
    arcs
}

/// Random connected simple graph with `m` edges.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, m: usize) -> Edges {
    assert!(m + 1 >= n && m <= n * (n - 1) / 2);
    let mut edges: Edges = Vec::new();
    for v in 1..n {
        edges.push((rng.gen_range(0..v), v));
    }
    while edges.len() < m {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        let (a, b) = (u.min(v), u.max(v));
        if a != b && !edges.contains(&(a, b)) {
            edges.push((a, b));
        }
    }
    for i in (1..edges.len()).rev() {
        edges.swap(i, rng.gen_range(0..=i));
    }
    edges
}

pub fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::from_edges(n, edges).unwrap()
}

pub fn digraph(n: usize, arcs: &[(usize, usize)]) -> Digraph {
    Digraph::from_arcs(n, arcs).unwrap()
}

/// Whether the edges in `mask` form a forest (undirected union-find).
pub fn is_forest(n: usize, edges: &[(usize, usize)], mask: u64) -> bool {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for (i, &(u, v)) in edges.iter().enumerate() {
        if mask >> i & 1 == 1 {
            let (a, b) = (find(&mut parent, u), find(&mut parent, v));
            if a == b {
                return false;
            }
            parent[a] = b;
        }
    }
    true
}

/// Whether the arcs in `mask` form a directed acyclic graph (Kahn).
pub fn is_dag(n: usize, arcs: &[(usize, usize)], mask: u64) -> bool {
    let mut indeg = vec![0; n];
    let mut out = vec![Vec::new(); n];
    let mut count = 0;
    for (i, &(u, v)) in arcs.iter().enumerate() {
        if mask >> i & 1 == 1 {
            indeg[v] += 1;
            out[u].push(v);
            count += 1;
        }
    }
    let mut ready: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
    let mut removed = 0;
    while let Some(u) = ready.pop() {
        for &w in &out[u] {
            removed += 1;
            indeg[w] -= 1;
            if indeg[w] == 0 {
                ready.push(w);
            }
        }
    }
    removed == count
}

/// Whether `mask` splits into arc-disjoint simple paths, one per unit of
/// surplus, each leaving a vertex in `starts` and entering one in `ends`.
/// Both lists are multisets; with `directed == false` the edges may be
/// walked either way and `ends` is ignored (terminals pair up among
/// themselves).
pub fn decomposes_into_paths(
    n: usize,
    edges: &[(usize, usize)],
    mask: u64,
    directed: bool,
    starts: &[usize],
    ends: &[usize],
) -> bool {
    let mut start_count = vec![0usize; n];
    let mut end_count = vec![0usize; n];
    if directed {
        starts.iter().for_each(|&v| start_count[v] += 1);
        ends.iter().for_each(|&v| end_count[v] += 1);
    } else {
        // every terminal ends exactly one path; the lowest one starts it
        starts.iter().for_each(|&v| end_count[v] += 1);
    }
    split(n, edges, mask, directed, &mut start_count, &mut end_count)
}

fn split(
    n: usize,
    edges: &[(usize, usize)],
    remaining: u64,
    directed: bool,
    start_count: &mut [usize],
    end_count: &mut [usize],
) -> bool {
    let source = if directed {
        (0..n).find(|&v| start_count[v] > 0)
    } else {
        (0..n).find(|&v| end_count[v] > 0)
    };
    let Some(s) = source else {
        return remaining == 0;
    };
    if directed {
        start_count[s] -= 1;
    } else {
        end_count[s] -= 1;
    }
    let mut on_path = vec![false; n];
    on_path[s] = true;
    let found = walk(
        n,
        edges,
        remaining,
        directed,
        s,
        0,
        &mut on_path,
        start_count,
        end_count,
    );
    if directed {
        start_count[s] += 1;
    } else {
        end_count[s] += 1;
    }
    found
}

#[allow(clippy::too_many_arguments)]
fn walk(
    n: usize,
    edges: &[(usize, usize)],
    remaining: u64,
    directed: bool,
    at: usize,
    used: u64,
    on_path: &mut [bool],
    start_count: &mut [usize],
    end_count: &mut [usize],
) -> bool {
    if used != 0 && end_count[at] > 0 {
        end_count[at] -= 1;
        let ok = split(
            n,
            edges,
            remaining & !used,
            directed,
            start_count,
            end_count,
        );
        end_count[at] += 1;
        if ok {
            return true;
        }
    }
    for (i, &(u, v)) in edges.iter().enumerate() {
        if remaining >> i & 1 == 0 || used >> i & 1 == 1 {
            continue;
        }
        let next = if u == at {
            v
        } else if v == at && !directed {
            u
        } else {
            continue;
        };
        if on_path[next] {
            continue;
        }
        on_path[next] = true;
        let ok = walk(
            n,
            edges,
            remaining,
            directed,
            next,
            used | 1 << i,
            on_path,
            start_count,
            end_count,
        );
        on_path[next] = false;
        if ok {
            return true;
        }
    }
    false
}

pub fn odd_vertices(n: usize, edges: &[(usize, usize)]) -> Vec<usize> {
    let deg = degrees(n, edges, 0);
    (0..n).filter(|&v| deg[v] % 2 == 1).collect()
}

pub fn even_vertices(n: usize, edges: &[(usize, usize)]) -> Vec<usize> {
    let deg = degrees(n, edges, 0);
    (0..n).filter(|&v| deg[v].is_multiple_of(2)).collect()
}

/// Degree-surplus multisets `(plus, minus)` of a digraph.
pub fn surplus(n: usize, arcs: &[(usize, usize)]) -> (Vec<usize>, Vec<usize>) {
    let mut balance = vec![0i64; n];
    for &(u, v) in arcs {
        balance[u] += 1;
        balance[v] -= 1;
    }
    let mut plus = Vec::new();
    let mut minus = Vec::new();
    for (v, &b) in balance.iter().enumerate() {
        plus.extend(std::iter::repeat_n(v, b.max(0) as usize));
        minus.extend(std::iter::repeat_n(v, (-b).max(0) as usize));
    }
    (plus, minus)
}

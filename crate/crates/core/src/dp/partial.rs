use crate::cographic::CographicRep;
use crate::graph::EdgeSet;

/// A path system with at most one in-progress (last) path.
///
/// `used_slots` holds the end slots of the completed paths plus the start
/// slot of the in-progress path. `final_vertex` is `None` when there is no
/// in-progress path.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PartialSolution {
    pub edges: EdgeSet,
    pub used_slots: u64,
    pub final_vertex: Option<usize>,
    /// Vertices of the in-progress path, sorted; empty when `final_vertex` is `None`.
    pub last_path_vertices: Vec<usize>,
    pub last_path_initial_slot: Option<usize>,
}

impl PartialSolution {
    /// The empty path system.
    pub fn empty(width: usize) -> Self {
        Self {
            edges: EdgeSet::new(width),
            used_slots: 0,
            final_vertex: None,
            last_path_vertices: Vec::new(),
            last_path_initial_slot: None,
        }
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn on_last_path(&self, v: usize) -> bool {
        self.last_path_vertices.binary_search(&v).is_ok()
    }

    /// Ends the in-progress path on slot `slot` at its current final vertex.
    pub fn close(mut self, slot: usize) -> Self {
        debug_assert!(self.final_vertex.is_some());
        debug_assert_eq!(self.used_slots >> slot & 1, 0);
        self.used_slots |= 1 << slot;
        self.final_vertex = None;
        self.last_path_vertices.clear();
        self.last_path_initial_slot = None;
        self
    }

    /// Identity of the member inside a table cell.
    pub fn cell_key(&self) -> (EdgeSet, Vec<usize>) {
        (self.edges.clone(), self.last_path_vertices.clone())
    }
}

/// Appends edge `id`, traversed from `from` to `to`, to `p`.
///
/// If `from` is the final vertex the in-progress path is extended (rejected
/// when `to` already lies on it); otherwise a new path `from -> to` is
/// started, which records no slot (callers mark the start slot). The
/// result is rejected when the edge is already used or the grown edge set
/// disconnects the graph.
pub fn compose(
    p: &PartialSolution,
    id: usize,
    from: usize,
    to: usize,
    matroid: &CographicRep,
) -> Option<PartialSolution> {
    if p.edges.contains(id) {
        return None;
    }
    let mut next = p.clone();
    if p.final_vertex == Some(from) {
        if p.on_last_path(to) {
            return None;
        }
        let at = next.last_path_vertices.binary_search(&to).unwrap_err();
        next.last_path_vertices.insert(at, to);
    } else {
        next.last_path_vertices = if from < to {
            vec![from, to]
        } else {
            vec![to, from]
        };
        next.last_path_initial_slot = None;
    }
    next.final_vertex = Some(to);
    if !matroid.ids_independent(p.edges.iter().chain(std::iter::once(id))) {
        return None;
    }
    next.edges.insert(id);
    Some(next)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn k4() -> Graph {
        Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn starts_new_path_from_empty() {
        let g = k4();
        let rep = CographicRep::build(&g).unwrap();
        let p = compose(&PartialSolution::empty(6), 0, 0, 1, &rep).unwrap();
        assert_eq!(p.final_vertex, Some(1));
        assert_eq!(p.last_path_vertices, vec![0, 1]);
        assert_eq!(p.edges.to_vec(), vec![0]);
    }

    #[test]
    fn rejects_revisiting_the_last_path() {
        let g = k4();
        let rep = CographicRep::build(&g).unwrap();
        let p = compose(&PartialSolution::empty(6), 0, 0, 1, &rep).unwrap();
        // edge 1-2 then 2-0 would return to the path's start
        let p = compose(&p, 3, 1, 2, &rep).unwrap();
        assert_eq!(p.last_path_vertices, vec![0, 1, 2]);
        assert!(compose(&p, 1, 2, 0, &rep).is_none());
        // reusing an edge is rejected too
        assert!(compose(&p, 3, 2, 1, &rep).is_none());
    }

    #[test]
    fn connectivity_filter() {
        let g = k4();
        let rep = CographicRep::build(&g).unwrap();
        let e12 = g.find_edge(0, 1).unwrap();
        let e34 = g.find_edge(2, 3).unwrap();
        let p = compose(&PartialSolution::empty(6), e12, 0, 1, &rep)
            .unwrap()
            .close(0);
        let q = compose(&p, e34, 2, 3, &rep).unwrap();
        assert_eq!(q.edges.len(), 2);
        // deleting all three edges at vertex 0 isolates it
        let star = [g.find_edge(0, 1), g.find_edge(0, 2), g.find_edge(0, 3)].map(Option::unwrap);
        let mut s = PartialSolution::empty(6);
        s = compose(&s, star[0], 1, 0, &rep).unwrap().close(0);
        s = compose(&s, star[1], 2, 0, &rep).unwrap().close(1);
        assert!(compose(&s, star[2], 3, 0, &rep).is_none());
    }
}

use crate::error::{Error, Result};
use crate::graph::Digraph;

/// Widest slot universe representable in a `u64` mask.
pub const MAX_SLOTS: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Polarity {
    /// A terminal of an undirected instance: a path may start or end here.
    Undirected,
    /// One unit of out-degree surplus: a path starts here.
    Plus,
    /// One unit of in-degree surplus: a path ends here.
    Minus,
}

/// Ordered terminal occurrences; bit `i` of a slot mask refers to `slots[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TerminalSlots {
    slots: Vec<(usize, Polarity)>,
    // slot ids at each vertex, ascending
    at_vertex: Vec<Vec<usize>>,
}

impl TerminalSlots {
    fn from_slots(n: usize, slots: Vec<(usize, Polarity)>) -> Result<Self> {
        if slots.len() > MAX_SLOTS {
            return Err(Error::Resource(format!(
                "{} terminal slots exceed the mask width of {MAX_SLOTS}",
                slots.len()
            )));
        }
        let mut at_vertex = vec![Vec::new(); n];
        for (i, &(v, _)) in slots.iter().enumerate() {
            at_vertex[v].push(i);
        }
        Ok(Self { slots, at_vertex })
    }

    /// One slot per terminal vertex, in the given order. Terminals must be
    /// distinct and even in number.
    pub fn undirected(n: usize, terminals: &[usize]) -> Result<Self> {
        let mut seen = vec![false; n];
        for &t in terminals {
            if t >= n || std::mem::replace(&mut seen[t], true) {
                return Err(Error::InvalidArgument(format!(
                    "terminal {t} is out of range or repeated"
                )));
            }
        }
        if terminals.len() % 2 == 1 {
            return Err(Error::InvalidArgument(
                "terminal set has odd size".to_string(),
            ));
        }
        Self::from_slots(
            n,
            terminals
                .iter()
                .map(|&t| (t, Polarity::Undirected))
                .collect(),
        )
    }

    /// Plus slots (one per unit of out-surplus) followed by minus slots.
    pub fn directed(d: &Digraph) -> Result<Self> {
        let (plus, minus) = d.degree_surplus_terminals();
        let slots = plus
            .into_iter()
            .map(|v| (v, Polarity::Plus))
            .chain(minus.into_iter().map(|v| (v, Polarity::Minus)))
            .collect();
        Self::from_slots(d.n(), slots)
    }

    pub fn len(&self) -> usize {
        self.slots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.slots.is_empty()
    }

    pub fn slot(&self, i: usize) -> (usize, Polarity) {
        self.slots[i]
    }

    pub fn slots(&self) -> &[(usize, Polarity)] {
        &self.slots
    }

    pub fn full_mask(&self) -> u64 {
        if self.slots.len() == 64 {
            u64::MAX
        } else {
            (1u64 << self.slots.len()) - 1
        }
    }

    pub fn count(&self, polarity: Polarity) -> usize {
        self.slots.iter().filter(|(_, p)| *p == polarity).count()
    }

    /// Unused slots of `polarity` under `used`.
    pub fn free_count(&self, used: u64, polarity: Polarity) -> usize {
        self.slots
            .iter()
            .enumerate()
            .filter(|&(i, &(_, p))| p == polarity && used >> i & 1 == 0)
            .count()
    }

    /// Lowest-index unused slot at `v` that a path may start from.
    pub fn free_start(&self, v: usize, used: u64) -> Option<usize> {
        self.free_at(v, used, |p| p != Polarity::Minus)
    }

    /// Lowest-index unused slot at `v` that a path may end at.
    pub fn free_end(&self, v: usize, used: u64) -> Option<usize> {
        self.free_at(v, used, |p| p != Polarity::Plus)
    }

    fn free_at(&self, v: usize, used: u64, accept: impl Fn(Polarity) -> bool) -> Option<usize> {
        self.at_vertex[v]
            .iter()
            .copied()
            .find(|&i| used >> i & 1 == 0 && accept(self.slots[i].1))
    }

    /// Slots from which a new path may be opened under `used`: for each
    /// vertex only its lowest free start slot, so identical slots are not
    /// tried twice.
    pub fn openable(&self, used: u64) -> impl Iterator<Item = usize> + '_ {
        self.slots
            .iter()
            .enumerate()
            .filter_map(move |(i, &(v, p))| {
                (p != Polarity::Minus && self.free_start(v, used) == Some(i)).then_some(i)
            })
    }

    /// Minimum number of further edges needed to use every slot, given the
    /// slots in `used` and whether a path is in progress. `None` when no
    /// completion exists.
    pub fn edges_needed(&self, used: u64, in_progress: bool) -> Option<usize> {
        let open = usize::from(in_progress);
        let free_undirected = self.free_count(used, Polarity::Undirected);
        let free_plus = self.free_count(used, Polarity::Plus);
        let free_minus = self.free_count(used, Polarity::Minus);
        if free_undirected + free_plus + free_minus < open {
            return None;
        }
        if free_undirected > 0 {
            // the in-progress path closes on one free slot; the rest pair up
            let rest = free_undirected - open;
            return rest.is_multiple_of(2).then_some(open + rest / 2);
        }
        if free_minus != free_plus + open {
            return None;
        }
        Some(open + free_plus)
    }
}

//! GF(2) representation of the co-graphic (bond) matroid and its randomized
//! rank truncations.
//!
//! Rows of the base matrix are fundamental cycles of a BFS spanning tree, so
//! the row space is the cycle space and a column set is independent exactly
//! when deleting those edges leaves the graph connected.

use std::collections::VecDeque;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::gf2::{BitMatrix, Elem, ExtField, ExtMatrix, XorBasis};
use crate::graph::{EdgeSet, Graph};
use crate::repset::LinearRep;

#[derive(Clone, Debug)]
pub struct CographicRep {
    base: BitMatrix,
    spanning_tree: EdgeSet,
    columns: Vec<Vec<u64>>,
    gf2: ExtField,
}

impl CographicRep {
    pub fn build(g: &Graph) -> Result<Self> {
        let (n, m) = (g.n(), g.m());
        if !g.is_connected(&g.empty_set()) {
            return Err(Error::Disconnected);
        }

        let mut parent_edge: Vec<Option<usize>> = vec![None; n];
        let mut depth = vec![0usize; n];
        let mut seen = vec![false; n];
        let mut spanning_tree = EdgeSet::new(m);
        if n > 0 {
            seen[0] = true;
            let mut queue = VecDeque::from([0]);
            while let Some(u) = queue.pop_front() {
                for &e in g.incident(u) {
                    let w = g.other_end(e, u);
                    if !seen[w] {
                        seen[w] = true;
                        parent_edge[w] = Some(e);
                        depth[w] = depth[u] + 1;
                        spanning_tree.insert(e);
                        queue.push_back(w);
                    }
                }
            }
        }

        let non_tree: Vec<usize> = (0..m).filter(|&e| !spanning_tree.contains(e)).collect();
        let mut base = BitMatrix::zeros(non_tree.len(), m);
        for (row, &e) in non_tree.iter().enumerate() {
            base.set(row, e, true);
            let (mut a, mut b) = g.edge(e);
            while a != b {
                if depth[a] < depth[b] {
                    std::mem::swap(&mut a, &mut b);
                }
                let up = parent_edge[a].expect("non-root vertex has a parent");
                base.set(row, up, true);
                a = g.other_end(up, a);
            }
        }

        let columns = (0..m).map(|c| base.column_words(c)).collect();
        Ok(Self {
            base,
            spanning_tree,
            columns,
            gf2: ExtField::with_degree(1)?,
        })
    }

    pub fn base(&self) -> &BitMatrix {
        &self.base
    }

    pub fn spanning_tree(&self) -> &EdgeSet {
        &self.spanning_tree
    }

    /// Rank of the matroid, `m - n + 1`.
    pub fn rank(&self) -> usize {
        self.base.rows()
    }

    pub fn ground_size(&self) -> usize {
        self.base.cols()
    }

    /// Whether deleting `s` keeps the graph connected.
    pub fn is_coindependent(&self, s: &EdgeSet) -> bool {
        self.ids_independent(s.iter())
    }

    pub fn ids_independent<I: IntoIterator<Item = usize>>(&self, ids: I) -> bool {
        let mut basis = XorBasis::default();
        ids.into_iter()
            .all(|e| basis.len() < self.rank() && basis.insert(self.columns[e].clone()))
    }

    /// Random rank-`t` truncation `R * base` over GF(2^s), with `R` a
    /// seeded uniform `t x r` matrix redrawn until it has full row rank.
    pub fn truncate(&self, t: usize, field: ExtField, seed: u64) -> Result<TruncatedRep> {
        let r = self.rank();
        if t > r {
            return Err(Error::InvalidArgument(format!(
                "truncation rank {t} exceeds matroid rank {r}"
            )));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mixer = loop {
            let rows: Vec<Vec<Elem>> = (0..t)
                .map(|_| (0..r).map(|_| field.random(&mut rng)).collect())
                .collect();
            let mixer = if t == 0 {
                ExtMatrix::zeros(field, 0, r)
            } else {
                ExtMatrix::from_rows(field, &rows)
            };
            if mixer.rank() == t {
                break mixer;
            }
        };
        Ok(TruncatedRep {
            matrix: mixer.mul_bits(&self.base),
            t,
            seed,
        })
    }
}

impl LinearRep for CographicRep {
    fn field(&self) -> &ExtField {
        &self.gf2
    }

    fn dimension(&self) -> usize {
        self.rank()
    }

    fn entry(&self, row: usize, col: usize) -> Elem {
        Elem::from(self.base.get(row, col))
    }

    fn is_truncated(&self) -> bool {
        false
    }
}

/// Low-rank representation: every independent set of size at most `t` in the
/// base stays independent with high probability.
#[derive(Clone, Debug)]
pub struct TruncatedRep {
    pub matrix: ExtMatrix,
    pub t: usize,
    pub seed: u64,
}

impl TruncatedRep {
    pub fn is_independent(&self, s: &EdgeSet) -> bool {
        s.len() <= self.t && self.matrix.columns_independent(&s.to_vec())
    }
}

impl LinearRep for TruncatedRep {
    fn field(&self) -> &ExtField {
        self.matrix.field()
    }

    fn dimension(&self) -> usize {
        self.t
    }

    fn entry(&self, row: usize, col: usize) -> Elem {
        self.matrix.get(row, col)
    }

    fn is_truncated(&self) -> bool {
        true
    }
}

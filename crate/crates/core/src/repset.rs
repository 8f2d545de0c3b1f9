//! q-representative subfamilies of equal-size independent sets in a linear
//! matroid.
//!
//! Each member `X` is mapped to its wedge vector: the `b x b` minors of the
//! columns of `X`, one per `b`-subset of rows. The vector is nonzero exactly
//! when `X` is independent, and for `|Y| = q` in a rank-`(b + q)` space the
//! determinant of `[X | Y]` is a bilinear pairing of the wedge vectors of `X`
//! and `Y` (generalized Laplace expansion; no signs in characteristic two).
//! Any greedy basis of the member wedge vectors is therefore q-representative.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::gf2::{det_in_place, Elem, ExtBasis, ExtField};
use crate::graph::EdgeSet;

/// Default ceiling on wedge-vector length in exact (untruncated) mode.
pub const DEFAULT_MAX_COORDINATES: usize = 1 << 24;

/// A matroid representation over GF(2^s) whose columns are edge ids.
pub trait LinearRep {
    fn field(&self) -> &ExtField;
    /// Number of rows.
    fn dimension(&self) -> usize;
    fn entry(&self, row: usize, col: usize) -> Elem;
    fn is_truncated(&self) -> bool;
}

/// Family of `b`-element edge sets with opaque payloads, deduplicated by set
/// (first payload wins) and kept in insertion order.
#[derive(Clone, Debug)]
pub struct SetFamily<P> {
    b: usize,
    members: Vec<(EdgeSet, P)>,
    index: HashSet<EdgeSet>,
}

impl<P> SetFamily<P> {
    pub fn new(b: usize) -> Self {
        Self {
            b,
            members: Vec::new(),
            index: HashSet::new(),
        }
    }

    pub fn b(&self) -> usize {
        self.b
    }

    /// Adds a member; returns false if an equal set is already present.
    /// Panics if `set` does not have exactly `b` elements.
    pub fn push(&mut self, set: EdgeSet, payload: P) -> bool {
        assert_eq!(set.len(), self.b, "family member has the wrong size");
        if !self.index.insert(set.clone()) {
            return false;
        }
        self.members.push((set, payload));
        true
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> &[(EdgeSet, P)] {
        &self.members
    }

    pub fn sets(&self) -> impl Iterator<Item = &EdgeSet> {
        self.members.iter().map(|(s, _)| s)
    }

    pub fn into_members(self) -> Vec<(EdgeSet, P)> {
        self.members
    }
}

impl<P> FromIterator<(EdgeSet, P)> for SetFamily<P> {
    /// `b` is taken from the first member; an empty iterator gives `b = 0`.
    fn from_iter<I: IntoIterator<Item = (EdgeSet, P)>>(iter: I) -> Self {
        let mut iter = iter.into_iter().peekable();
        let b = iter.peek().map_or(0, |(s, _)| s.len());
        let mut fam = Self::new(b);
        for (s, p) in iter {
            fam.push(s, p);
        }
        fam
    }
}

pub fn binomial(n: usize, k: usize) -> Option<usize> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: usize = 1;
    for i in 0..k {
        acc = acc.checked_mul(n - i)? / (i + 1);
    }
    Some(acc)
}

/// `b`-subsets of `0..t` in colexicographic order.
pub fn colex_subsets(t: usize, b: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut current: Option<Vec<usize>> = (b <= t).then(|| (0..b).collect());
    std::iter::from_fn(move || {
        let out = current.take()?;
        let mut next = out.clone();
        let mut i = 0;
        while i < b {
            let limit = if i + 1 < b { next[i + 1] } else { t };
            if next[i] + 1 < limit {
                next[i] += 1;
                for (j, slot) in next.iter_mut().enumerate().take(i) {
                    *slot = j;
                }
                current = Some(next);
                break;
            }
            i += 1;
        }
        Some(out)
    })
}

/// Wedge vector of the column set `x`: coordinate `R` is the minor on rows
/// `R` and columns `x`, rows subsets in colex order.
pub fn wedge<R: LinearRep + ?Sized>(rep: &R, x: &[usize]) -> Vec<Elem> {
    let b = x.len();
    let t = rep.dimension();
    let field = *rep.field();
    let block: Vec<Vec<Elem>> = (0..t)
        .map(|r| x.iter().map(|&c| rep.entry(r, c)).collect())
        .collect();
    let mut scratch = vec![0; b * b];
    colex_subsets(t, b)
        .map(|rows| {
            for (i, &r) in rows.iter().enumerate() {
                scratch[i * b..(i + 1) * b].copy_from_slice(&block[r]);
            }
            det_in_place(&field, &mut scratch, b)
        })
        .collect()
}

/// Computes a q-representative subfamily of `fam` with respect to `rep`.
///
/// Dependent members are dropped, then a greedy basis of the wedge vectors is
/// kept in member order. With a truncated representation the rank must be
/// exactly `b + q` and the output has at most `C(b + q, b)` members; with an
/// exact representation the output has at most `C(r, b)` members and
/// `max_coordinates` bounds `C(r, b)`.
pub fn representative_family<P, R: LinearRep + ?Sized>(
    fam: SetFamily<P>,
    rep: &R,
    q: usize,
    max_coordinates: usize,
) -> Result<SetFamily<P>> {
    let b = fam.b();
    let t = rep.dimension();
    if rep.is_truncated() && t != b + q {
        return Err(Error::InvalidArgument(format!(
            "truncated representation has rank {t}, expected b + q = {}",
            b + q
        )));
    }
    let mut out = SetFamily::new(b);
    if fam.is_empty() || b > t {
        return Ok(out);
    }
    let coords = binomial(t, b)
        .filter(|&c| c <= max_coordinates)
        .ok_or_else(|| {
            Error::Resource(format!(
                "wedge dimension C({t}, {b}) exceeds the ceiling of {max_coordinates}"
            ))
        })?;
    debug_assert!(coords > 0);

    let mut basis = ExtBasis::new(*rep.field());
    for (set, payload) in fam.into_members() {
        let w = wedge(rep, &set.to_vec());
        if basis.insert(w) {
            out.push(set, payload);
        }
        if basis.len() == coords {
            break;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cographic::{CographicRep, TruncatedRep};
    use crate::gf2::ExtMatrix;
    use crate::graph::Graph;

    fn identity_rep(t: usize) -> TruncatedRep {
        let f = ExtField::with_degree(16).unwrap();
        TruncatedRep {
            matrix: ExtMatrix::identity(f, t),
            t,
            seed: 0,
        }
    }

    #[test]
    fn colex_order() {
        let subsets: Vec<Vec<usize>> = colex_subsets(4, 2).collect();
        assert_eq!(
            subsets,
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![1, 2],
                vec![0, 3],
                vec![1, 3],
                vec![2, 3]
            ]
        );
        assert_eq!(colex_subsets(3, 0).count(), 1);
        assert_eq!(colex_subsets(2, 3).count(), 0);
        for (t, b) in [(7, 3), (10, 4), (6, 6)] {
            assert_eq!(colex_subsets(t, b).count(), binomial(t, b).unwrap());
        }
    }

    #[test]
    fn wedge_of_identity() {
        let rep = identity_rep(4);
        let w = wedge(&rep, &[0, 1]);
        assert_eq!(w.len(), 6);
        assert_eq!(w.iter().filter(|&&x| x != 0).count(), 1);
        assert_eq!(w[0], 1);
        // single column: the column itself
        let f = ExtField::with_degree(16).unwrap();
        let m = ExtMatrix::from_rows(f, &[vec![5, 0], vec![7, 0], vec![9, 0]]);
        let rep = TruncatedRep {
            matrix: m,
            t: 3,
            seed: 0,
        };
        assert_eq!(wedge(&rep, &[0]), vec![5, 7, 9]);
        assert_eq!(wedge(&rep, &[1]), vec![0, 0, 0]);
        assert!(wedge(&rep, &[0, 1]).iter().all(|&x| x == 0));
    }

    #[test]
    fn c4_singletons_collapse_to_one() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let rep = CographicRep::build(&g).unwrap();
        let fam: SetFamily<usize> = (0..4).map(|e| (EdgeSet::from_ids(4, [e]), e)).collect();
        let out = representative_family(fam.clone(), &rep, 0, DEFAULT_MAX_COORDINATES).unwrap();
        assert_eq!(out.len(), 1);
        assert_eq!(out.members()[0].1, 0);

        let f = ExtField::with_degree(16).unwrap();
        let trunc = rep.truncate(1, f, 1).unwrap();
        let out = representative_family(fam, &trunc, 0, DEFAULT_MAX_COORDINATES).unwrap();
        assert_eq!(out.len(), 1);
    }

    #[test]
    fn trivial_families() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let rep = CographicRep::build(&g).unwrap();
        let empty: SetFamily<()> = SetFamily::new(1);
        assert!(representative_family(empty, &rep, 0, 100)
            .unwrap()
            .is_empty());
        let mut single = SetFamily::new(1);
        single.push(EdgeSet::from_ids(3, [2]), "x");
        let out = representative_family(single, &rep, 0, 100).unwrap();
        assert_eq!(out.members()[0].1, "x");
    }

    #[test]
    fn dependent_members_are_dropped() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let rep = CographicRep::build(&g).unwrap();
        let mut fam = SetFamily::new(2);
        fam.push(EdgeSet::from_ids(3, [0, 1]), ());
        assert!(representative_family(fam, &rep, 0, 100).unwrap().is_empty());
    }

    #[test]
    fn coordinate_ceiling_is_enforced() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2), (0, 1), (1, 2)]).unwrap();
        let rep = CographicRep::build(&g).unwrap();
        let mut fam = SetFamily::new(1);
        fam.push(EdgeSet::from_ids(5, [0]), ());
        let err = representative_family(fam, &rep, 0, 2).unwrap_err();
        assert!(matches!(err, Error::Resource(_)));
    }

    #[test]
    fn truncated_rank_must_be_b_plus_q() {
        let rep = identity_rep(3);
        let mut fam = SetFamily::new(1);
        fam.push(EdgeSet::from_ids(3, [0]), ());
        assert!(representative_family(fam, &rep, 1, 100).is_err());
    }

    #[test]
    fn dedup_keeps_first_payload() {
        let mut fam = SetFamily::new(1);
        assert!(fam.push(EdgeSet::from_ids(3, [1]), 'a'));
        assert!(!fam.push(EdgeSet::from_ids(3, [1]), 'b'));
        assert_eq!(fam.members()[0].1, 'a');
    }
}

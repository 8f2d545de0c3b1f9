use std::fmt;

/// Dense matrix over GF(2), rows packed into 64-bit words.
#[derive(Clone, PartialEq, Eq)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    stride: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let stride = cols.div_ceil(64);
        Self {
            rows,
            cols,
            stride,
            data: vec![0; rows * stride],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Builds a matrix from rows written as `'0'`/`'1'` strings.
    pub fn from_strs(rows: &[&str]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut m = Self::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols, "ragged rows");
            for (j, c) in r.bytes().enumerate() {
                m.set(i, j, c == b'1');
            }
        }
        m
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> bool {
        self.data[r * self.stride + c / 64] >> (c % 64) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        let w = &mut self.data[r * self.stride + c / 64];
        if value {
            *w |= 1 << (c % 64);
        } else {
            *w &= !(1 << (c % 64));
        }
    }

    pub fn row_words(&self, r: usize) -> &[u64] {
        &self.data[r * self.stride..(r + 1) * self.stride]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                if self.get(r, c) {
                    t.set(c, r, true);
                }
            }
        }
        t
    }

    /// Column `c` packed over the row index.
    pub fn column_words(&self, c: usize) -> Vec<u64> {
        let mut col = vec![0u64; self.rows.div_ceil(64)];
        for r in 0..self.rows {
            if self.get(r, c) {
                col[r / 64] |= 1 << (r % 64);
            }
        }
        col
    }

    pub fn rank(&self) -> usize {
        let mut basis = XorBasis::default();
        (0..self.rows)
            .filter(|&r| basis.insert(self.row_words(r).to_vec()))
            .count()
    }

    pub fn columns_independent(&self, cols: &[usize]) -> bool {
        let mut basis = XorBasis::default();
        cols.iter().all(|&c| basis.insert(self.column_words(c)))
    }

    /// Greedy maximal independent subset of `order`, scanned left to right.
    pub fn column_basis(&self, order: &[usize]) -> Vec<usize> {
        let mut basis = XorBasis::default();
        order
            .iter()
            .copied()
            .filter(|&c| basis.insert(self.column_words(c)))
            .collect()
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            let line: String = (0..self.cols)
                .map(|c| if self.get(r, c) { '1' } else { '0' })
                .collect();
            writeln!(f, "  {line}")?;
        }
        Ok(())
    }
}

/// Incrementally built echelon basis of packed GF(2) vectors.
#[derive(Clone, Debug, Default)]
pub struct XorBasis {
    // (pivot bit, reduced vector); each pivot is the lowest set bit of its vector
    rows: Vec<(usize, Vec<u64>)>,
}

fn lowest_bit(v: &[u64]) -> Option<usize> {
    v.iter()
        .enumerate()
        .find(|(_, &w)| w != 0)
        .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
}

impl XorBasis {
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Reduces `v` against the basis; returns whether it was independent
    /// (in which case it joins the basis).
    pub fn insert(&mut self, mut v: Vec<u64>) -> bool {
        for (pivot, row) in &self.rows {
            if v.get(pivot / 64)
                .is_some_and(|w| w >> (pivot % 64) & 1 == 1)
            {
                for (a, b) in v.iter_mut().zip(row) {
                    *a ^= b;
                }
            }
        }
        match lowest_bit(&v) {
            Some(pivot) => {
                // keep the basis fully reduced on the new pivot
                for (_, row) in &mut self.rows {
                    if row
                        .get(pivot / 64)
                        .is_some_and(|w| w >> (pivot % 64) & 1 == 1)
                    {
                        for (a, b) in row.iter_mut().zip(&v) {
                            *a ^= b;
                        }
                    }
                }
                self.rows.push((pivot, v));
                true
            }
            None => false,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_examples() {
        assert_eq!(BitMatrix::identity(3).rank(), 3);
        assert_eq!(BitMatrix::zeros(4, 5).rank(), 0);
        assert_eq!(BitMatrix::from_strs(&["110", "011", "101"]).rank(), 2);
    }

    #[test]
    fn independence_examples() {
        let id = BitMatrix::identity(3);
        assert!(id.columns_independent(&[0, 2]));
        assert!(!id.columns_independent(&[0, 0]));
        let with_zero = BitMatrix::from_strs(&["100", "010"]);
        assert!(!with_zero.columns_independent(&[0, 2]));
        assert!(id.columns_independent(&[]));
    }

    #[test]
    fn basis_examples() {
        assert_eq!(
            BitMatrix::identity(3).column_basis(&[0, 1, 2]),
            vec![0, 1, 2]
        );
        // columns v, v, w
        let m = BitMatrix::from_strs(&["110", "001"]);
        assert_eq!(m.column_basis(&[0, 1, 2]), vec![0, 2]);
        assert!(BitMatrix::zeros(3, 3).column_basis(&[0, 1, 2]).is_empty());
    }

    #[test]
    fn wide_rows_cross_word_boundaries() {
        let mut m = BitMatrix::zeros(3, 130);
        m.set(0, 0, true);
        m.set(0, 129, true);
        m.set(1, 129, true);
        m.set(2, 0, true);
        assert_eq!(m.rank(), 2);
        assert_eq!(m.transpose().rank(), 2);
    }
}

use super::bitmatrix::BitMatrix;
use super::field::{Elem, ExtField};

/// Dense row-major matrix over GF(2^s).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtMatrix {
    field: ExtField,
    rows: usize,
    cols: usize,
    data: Vec<Elem>,
}

impl ExtMatrix {
    pub fn zeros(field: ExtField, rows: usize, cols: usize) -> Self {
        Self {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: ExtField, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(field: ExtField, rows: &[Vec<Elem>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend(r.iter().map(|&x| x & field.mask()));
        }
        Self {
            field,
            rows: rows.len(),
            cols,
            data,
        }
    }

    /// Canonical embedding of a GF(2) matrix.
    pub fn from_bits(field: ExtField, bits: &BitMatrix) -> Self {
        let mut m = Self::zeros(field, bits.rows(), bits.cols());
        for r in 0..bits.rows() {
            for c in 0..bits.cols() {
                if bits.get(r, c) {
                    m.set(r, c, 1);
                }
            }
        }
        m
    }

    #[inline]
    pub fn field(&self) -> &ExtField {
        &self.field
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
    pub fn get(&self, r: usize, c: usize) -> Elem {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, value: Elem) {
        self.data[r * self.cols + c] = value & self.field.mask();
    }

    pub fn row(&self, r: usize) -> &[Elem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Elem> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    /// `self * bits`, with `bits` embedded into the extension field.
    pub fn mul_bits(&self, bits: &BitMatrix) -> Self {
        assert_eq!(self.cols, bits.rows(), "dimension mismatch");
        let mut out = Self::zeros(self.field, self.rows, bits.cols());
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for c in 0..bits.cols() {
                    if bits.get(k, c) {
                        out.data[i * out.cols + c] ^= a;
                    }
                }
            }
        }
        out
    }

    pub fn rank(&self) -> usize {
        let mut basis = ExtBasis::new(self.field);
        (0..self.rows)
            .filter(|&r| basis.insert(self.row(r).to_vec()))
            .count()
    }

    pub fn columns_independent(&self, cols: &[usize]) -> bool {
        let mut basis = ExtBasis::new(self.field);
        cols.iter().all(|&c| basis.insert(self.column(c)))
    }

    pub fn column_basis(&self, order: &[usize]) -> Vec<usize> {
        let mut basis = ExtBasis::new(self.field);
        order
            .iter()
            .copied()
            .filter(|&c| basis.insert(self.column(c)))
            .collect()
    }

    /// Determinant of the submatrix on `rows` x `cols` (equal lengths).
    pub fn det_submatrix(&self, rows: &[usize], cols: &[usize]) -> Elem {
        assert_eq!(rows.len(), cols.len(), "submatrix must be square");
        let mut block: Vec<Elem> = rows
            .iter()
            .flat_map(|&r| cols.iter().map(move |&c| (r, c)))
            .map(|(r, c)| self.get(r, c))
            .collect();
        det_in_place(&self.field, &mut block, rows.len())
    }
}

/// Determinant of the `b x b` row-major `block`, destroying it. Signs vanish
/// in characteristic two.
pub fn det_in_place(field: &ExtField, block: &mut [Elem], b: usize) -> Elem {
    let mut det: Elem = 1;
    for col in 0..b {
        let Some(p) = (col..b).find(|&r| block[r * b + col] != 0) else {
            return 0;
        };
        if p != col {
            for j in col..b {
                block.swap(p * b + j, col * b + j);
            }
        }
        let pivot = block[col * b + col];
        det = field.mul(det, pivot);
        let inv = field.inv(pivot);
        for r in col + 1..b {
            let lead = block[r * b + col];
            if lead == 0 {
                continue;
            }
            let factor = field.mul(lead, inv);
            for j in col..b {
                let sub = field.mul(factor, block[col * b + j]);
                block[r * b + j] ^= sub;
            }
        }
    }
    det
}

/// Incrementally built echelon basis over GF(2^s). Each stored vector has
/// a unit pivot and is zero at the pivots of all earlier vectors.
#[derive(Clone, Debug)]
pub struct ExtBasis {
    field: ExtField,
    rows: Vec<(usize, Vec<Elem>)>,
}

impl ExtBasis {
    pub fn new(field: ExtField) -> Self {
        Self {
            field,
            rows: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Reduces `v`; returns true (and keeps it) if it is independent of the basis.
    pub fn insert(&mut self, mut v: Vec<Elem>) -> bool {
        let f = self.field;
        for (pivot, row) in &self.rows {
            let c = v[*pivot];
            if c != 0 {
                for (a, &b) in v.iter_mut().zip(row) {
                    if b != 0 {
                        *a ^= f.mul(c, b);
                    }
                }
            }
        }
        let Some(pivot) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = f.inv(v[pivot]);
        for x in v.iter_mut() {
            *x = f.mul(*x, inv);
        }
        self.rows.push((pivot, v));
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn gf16() -> ExtField {
        ExtField::with_degree(16).unwrap()
    }

    fn cofactor_det(f: &ExtField, m: &[Vec<Elem>]) -> Elem {
        let b = m.len();
        if b == 0 {
            return 1;
        }
        (0..b).fold(0, |acc, j| {
            let minor: Vec<Vec<Elem>> = m[1..]
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|&(c, _)| c != j)
                        .map(|(_, &x)| x)
                        .collect()
                })
                .collect();
            acc ^ f.mul(m[0][j], cofactor_det(f, &minor))
        })
    }

    #[test]
    fn det_examples() {
        let f = gf16();
        let id = ExtMatrix::identity(f, 4);
        assert_eq!(id.det_submatrix(&[0, 2], &[0, 2]), 1);
        assert_eq!(id.det_submatrix(&[0, 1], &[0, 2]), 0);
        let x = 2;
        let diag = ExtMatrix::from_rows(f, &[vec![x, 0], vec![0, x]]);
        assert_eq!(diag.det_submatrix(&[0, 1], &[0, 1]), f.mul(x, x));
    }

    #[test]
    fn det_matches_cofactor_expansion() {
        let f = gf16();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for b in 1..=4 {
            for _ in 0..200 {
                let rows: Vec<Vec<Elem>> = (0..b)
                    .map(|_| (0..b).map(|_| f.random(&mut rng)).collect())
                    .collect();
                let m = ExtMatrix::from_rows(f, &rows);
                let idx: Vec<usize> = (0..b).collect();
                assert_eq!(m.det_submatrix(&idx, &idx), cofactor_det(&f, &rows));
            }
        }
    }

    #[test]
    fn rank_and_basis() {
        let f = gf16();
        let m = ExtMatrix::from_rows(f, &[vec![1, 1, 0], vec![0, 1, 1], vec![1, 0, 1]]);
        // over GF(2^16) the third row is still the sum of the first two
        assert_eq!(m.rank(), 2);
        assert_eq!(m.column_basis(&[0, 1, 2]), vec![0, 1]);
        let scaled = ExtMatrix::from_rows(f, &[vec![1, 5], vec![2, f.mul(2, 5)]]);
        assert_eq!(scaled.rank(), 1);
        assert!(!scaled.columns_independent(&[0, 1]));
        assert!(scaled.columns_independent(&[1]));
    }

    #[test]
    fn mul_bits_embeds() {
        let f = gf16();
        let bits = BitMatrix::from_strs(&["110", "011"]);
        let r = ExtMatrix::from_rows(f, &[vec![3, 7]]);
        let p = r.mul_bits(&bits);
        assert_eq!(p.row(0), &[3, 3 ^ 7, 7]);
    }
}

use std::fmt;

use super::tables::Gf;

/// Dense matrix over a small finite field, entries are element codes.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<u8>,
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
        }
        write!(f, "]")
    }
}

impl Mat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<u8>) -> Self {
        assert_eq!(data.len(), rows * cols);
        Mat { rows, cols, data }
    }

    pub fn from_rows(cols: usize, rows: &[Vec<u8>]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols);
            data.extend_from_slice(r);
        }
        Mat { rows: rows.len(), cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn data(&self) -> &[u8] {
        &self.data
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u8 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, x: u8) {
        self.data[r * self.cols + c] = x;
    }

    pub fn row(&self, r: usize) -> &[u8] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn mul(&self, gf: &Gf, o: &Mat) -> Mat {
        assert_eq!(self.cols, o.rows, "shape mismatch");
        let mut out = Mat::zero(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.get(k, j);
                    if b != 0 {
                        let t = gf.mul(a, b);
                        let cur = out.get(i, j);
                        out.set(i, j, gf.add(cur, t));
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, gf: &Gf, o: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        let data = self.data.iter().zip(&o.data).map(|(&a, &b)| gf.add(a, b)).collect();
        Mat { rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, gf: &Gf, o: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        let data = self.data.iter().zip(&o.data).map(|(&a, &b)| gf.sub(a, b)).collect();
        Mat { rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, gf: &Gf, c: u8) -> Mat {
        let data = self.data.iter().map(|&a| gf.mul(a, c)).collect();
        Mat { rows: self.rows, cols: self.cols, data }
    }

    pub fn transpose(&self) -> Mat {
        let mut out = Mat::zero(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(c, r, self.get(r, c));
            }
        }
        out
    }

    pub fn trace(&self, gf: &Gf) -> u8 {
        (0..self.rows.min(self.cols)).fold(0, |acc, i| gf.add(acc, self.get(i, i)))
    }

    pub fn pow(&self, gf: &Gf, n: u32) -> Mat {
        let mut acc = Mat::identity(self.rows);
        for _ in 0..n {
            acc = acc.mul(gf, self);
        }
        acc
    }

    /// Block diagonal sum.
    pub fn direct_sum(&self, o: &Mat) -> Mat {
        let mut out = Mat::zero(self.rows + o.rows, self.cols + o.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, self.get(r, c));
            }
        }
        for r in 0..o.rows {
            for c in 0..o.cols {
                out.set(self.rows + r, self.cols + c, o.get(r, c));
            }
        }
        out
    }

    /// Reduced row echelon form and its pivot columns; zero rows are dropped.
    pub fn rref(&self, gf: &Gf) -> (Mat, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| m.get(r, col) != 0) else {
                continue;
            };
            if p != row {
                for c in 0..m.cols {
                    m.data.swap(p * m.cols + c, row * m.cols + c);
                }
            }
            let inv = gf.inv(m.get(row, col));
            for c in 0..m.cols {
                let x = m.get(row, c);
                m.set(row, c, gf.mul(x, inv));
            }
            for r in 0..m.rows {
                let f = m.get(r, col);
                if r != row && f != 0 {
                    for c in 0..m.cols {
                        let t = gf.mul(f, m.get(row, c));
                        let cur = m.get(r, c);
                        m.set(r, c, gf.sub(cur, t));
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        m.data.truncate(row * m.cols);
        m.rows = row;
        (m, pivots)
    }

    pub fn rank(&self, gf: &Gf) -> usize {
        self.rref(gf).1.len()
    }

    pub fn inverse(&self, gf: &Gf) -> Option<Mat> {
        let n = self.rows;
        if n != self.cols {
            return None;
        }
        let mut aug = Mat::zero(n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug.set(r, c, self.get(r, c));
            }
            aug.set(r, n + r, 1);
        }
        let (red, piv) = aug.rref(gf);
        if piv.len() < n || (n > 0 && piv[n - 1] != n - 1) {
            return None;
        }
        let mut out = Mat::zero(n, n);
        for r in 0..n {
            for c in 0..n {
                out.set(r, c, red.get(r, n + c));
            }
        }
        Some(out)
    }

    pub fn is_invertible(&self, gf: &Gf) -> bool {
        self.rows == self.cols && self.rank(gf) == self.rows
    }

    pub fn is_nilpotent(&self, gf: &Gf) -> bool {
        self.rows == 0 || self.pow(gf, self.rows as u32).is_zero()
    }

    /// Basis (as rows, in RREF) of `{x : self * x = 0}`.
    pub fn kernel(&self, gf: &Gf) -> Mat {
        let (red, piv) = self.rref(gf);
        let n = self.cols;
        let free: Vec<usize> = (0..n).filter(|c| !piv.contains(c)).collect();
        let mut out = Mat::zero(free.len(), n);
        for (i, &f) in free.iter().enumerate() {
            out.set(i, f, 1);
            for (r, &pc) in piv.iter().enumerate() {
                out.set(i, pc, gf.neg(red.get(r, f)));
            }
        }
        out.rref(gf).0
    }

    /// Basis (as rows, in RREF) of the column space.
    pub fn image(&self, gf: &Gf) -> Mat {
        self.transpose().rref(gf).0
    }

    /// Applies the matrix to a column vector.
    pub fn apply(&self, gf: &Gf, v: &[u8]) -> Vec<u8> {
        (0..self.rows)
            .map(|r| (0..self.cols).fold(0, |acc, c| gf.add(acc, gf.mul(self.get(r, c), v[c]))))
            .collect()
    }
}

/// All `k`-dimensional subspaces of `F_q^n`, each as a `k x n` RREF basis.
pub fn subspaces(gf: &Gf, n: usize, k: usize) -> Vec<Mat> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut pivots = Vec::with_capacity(k);
    choose_pivots(gf, n, k, 0, &mut pivots, &mut out);
    out
}

fn choose_pivots(gf: &Gf, n: usize, k: usize, start: usize, piv: &mut Vec<usize>, out: &mut Vec<Mat>) {
    if piv.len() == k {
        fill_free(gf, n, piv, out);
        return;
    }
    for c in start..n {
        piv.push(c);
        choose_pivots(gf, n, k, c + 1, piv, out);
        piv.pop();
    }
}

fn fill_free(gf: &Gf, n: usize, piv: &[usize], out: &mut Vec<Mat>) {
    let k = piv.len();
    // free slots: (row, col) with col > pivot of row and col not a pivot
    let slots: Vec<(usize, usize)> = (0..k)
        .flat_map(|r| ((piv[r] + 1)..n).filter(|c| !piv.contains(c)).map(move |c| (r, c)))
        .collect();
    let q = gf.q();
    let total = q.pow(slots.len() as u32);
    for code in 0..total {
        let mut m = Mat::zero(k, n);
        for (r, &p) in piv.iter().enumerate() {
            m.set(r, p, 1);
        }
        let mut x = code;
        for &(r, c) in &slots {
            m.set(r, c, (x % q) as u8);
            x /= q;
        }
        out.push(m);
    }
}

/// A subspace of `F_q^n` given by an RREF basis, with helpers for
/// coordinates and reduction modulo the subspace.
#[derive(Clone, Debug)]
pub struct Subspace {
    basis: Mat,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn from_rref(basis: Mat, gf: &Gf) -> Self {
        let (basis, pivots) = basis.rref(gf);
        Subspace { basis, pivots }
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn ambient(&self) -> usize {
        self.basis.cols()
    }

    pub fn basis(&self) -> &Mat {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates of `v` in the basis, or `None` if `v` is not in the span.
    pub fn coords(&self, gf: &Gf, v: &[u8]) -> Option<Vec<u8>> {
        let c: Vec<u8> = self.pivots.iter().map(|&p| v[p]).collect();
        let mut r = v.to_vec();
        for (i, &ci) in c.iter().enumerate() {
            if ci != 0 {
                for (j, x) in r.iter_mut().enumerate() {
                    *x = gf.sub(*x, gf.mul(ci, self.basis.get(i, j)));
                }
            }
        }
        r.iter().all(|&x| x == 0).then_some(c)
    }

    /// Coordinates of `v + U` in the quotient, whose basis is the standard
    /// vectors at the non-pivot positions.
    pub fn quotient_coords(&self, gf: &Gf, v: &[u8]) -> Vec<u8> {
        let mut r = v.to_vec();
        for (i, &p) in self.pivots.iter().enumerate() {
            let ci = r[p];
            if ci != 0 {
                for (j, x) in r.iter_mut().enumerate() {
                    *x = gf.sub(*x, gf.mul(ci, self.basis.get(i, j)));
                }
            }
        }
        (0..r.len()).filter(|c| !self.pivots.contains(c)).map(|c| r[c]).collect()
    }

    /// Non-pivot positions, i.e. the standard basis of a complement.
    pub fn complement(&self) -> Vec<usize> {
        (0..self.ambient()).filter(|c| !self.pivots.contains(c)).collect()
    }
}

/// Number of `k`-dimensional subspaces of `F_q^n`.
pub fn gaussian_binomial(n: u32, k: u32, q: u64) -> u128 {
    if k > n {
        return 0;
    }
    let q = q as u128;
    let mut num = 1u128;
    let mut den = 1u128;
    for i in 0..k {
        num *= q.pow(n - i) - 1;
        den *= q.pow(i + 1) - 1;
    }
    num / den
}

/// `|GL_n(F_q)|`.
pub fn gl_order(n: u32, q: u64) -> u128 {
    let q = q as u128;
    (0..n).map(|i| q.pow(n) - q.pow(i)).product()
}

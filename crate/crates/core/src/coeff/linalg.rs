//! Exact Gaussian elimination over a coefficient field.

use super::traits::FieldCoeff;

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref<F: FieldCoeff>(m: &mut Vec<Vec<F>>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        if row == m.len() {
            break;
        }
        let Some(p) = (row..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].inv().expect("pivot is nonzero");
        for x in m[row].iter_mut() {
            *x = x.mul_ref(&inv);
        }
        for r in 0..m.len() {
            if r != row && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in 0..ncols {
                    if !m[row][c].is_zero() {
                        let t = m[row][c].mul_ref(&f);
                        m[r][c] = m[r][c].sub_ref(&t);
                    }
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    m.truncate(row.max(pivots.len()));
    m.retain(|r| r.iter().any(|x| !x.is_zero()));
    pivots
}

pub fn rank<F: FieldCoeff>(rows: &[Vec<F>], ncols: usize) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m, ncols).len()
}

/// Basis of `{x : M x = 0}`, returned in reduced row echelon form.
pub fn kernel<F: FieldCoeff>(rows: &[Vec<F>], ncols: usize) -> Vec<Vec<F>> {
    let mut m = rows.to_vec();
    let pivots = rref(&mut m, ncols);
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut x = vec![F::zero(); ncols];
        x[free] = F::one();
        for (r, &pc) in pivots.iter().enumerate() {
            x[pc] = m[r][free].neg_ref();
        }
        basis.push(x);
    }
    rref(&mut basis, ncols);
    basis
}

/// Whether the row space of `a` equals that of `b`.
pub fn same_span<F: FieldCoeff>(a: &[Vec<F>], b: &[Vec<F>], ncols: usize) -> bool {
    let ra = rank(a, ncols);
    let rb = rank(b, ncols);
    let mut both = a.to_vec();
    both.extend_from_slice(b);
    ra == rb && rank(&both, ncols) == ra
}

/// Whether every row of `a` lies in the row space of `b`.
pub fn contained_in<F: FieldCoeff>(a: &[Vec<F>], b: &[Vec<F>], ncols: usize) -> bool {
    let rb = rank(b, ncols);
    let mut both = b.to_vec();
    both.extend_from_slice(a);
    rank(&both, ncols) == rb
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::rational::{rat, Rational};

    fn m(v: &[&[i64]]) -> Vec<Vec<Rational>> {
        v.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect()
    }

    #[test]
    fn kernel_of_rank_one() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6]]);
        let k = kernel(&a, 3);
        assert_eq!(k.len(), 2);
        for v in &k {
            let dot: Rational = a[0].iter().zip(v).map(|(x, y)| x * y).sum();
            assert_eq!(dot, rat(0));
        }
        assert_eq!(rank(&a, 3), 1);
    }

    #[test]
    fn spans() {
        let a = m(&[&[1, 1, 0]]);
        let b = m(&[&[1, 0, 0], &[0, 1, 0]]);
        assert!(contained_in(&a, &b, 3));
        assert!(!same_span(&a, &b, 3));
    }
}

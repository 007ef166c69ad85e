use std::fmt;
use std::ops::Add;

use crate::error::{Error, Result};

/// Dimension vector, one entry per vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct DimVector(pub Vec<u32>);

impl DimVector {
    pub fn zero(n: usize) -> Self {
        DimVector(vec![0; n])
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        DimVector(v)
    }

    /// `k * (1, ..., 1)`.
    pub fn delta(n: usize, k: u32) -> Self {
        DimVector(vec![k; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    /// Componentwise `self <= o`.
    pub fn le(&self, o: &Self) -> bool {
        self.0.len() == o.0.len() && self.0.iter().zip(&o.0).all(|(a, b)| a <= b)
    }

    pub fn checked_sub(&self, o: &Self) -> Option<Self> {
        if !o.le(self) {
            return None;
        }
        Some(DimVector(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect()))
    }

    /// All `e` with `0 <= e <= self`, in lexicographic order.
    pub fn below(&self) -> Vec<DimVector> {
        let mut out = vec![Vec::new()];
        for &d in &self.0 {
            out = out.into_iter().flat_map(|v| (0..=d).map(move |k| [v.clone(), vec![k]].concat())).collect();
        }
        out.into_iter().map(DimVector).collect()
    }

    /// Reads `(1,1)` or `1,1`.
    pub fn parse(s: &str) -> Result<Self> {
        let t = s.trim();
        let t = t.strip_prefix('(').and_then(|r| r.strip_suffix(')')).unwrap_or(t);
        let v = t
            .split(',')
            .map(|x| x.trim().parse::<u32>().map_err(|_| Error::Parse(format!("bad dimension vector `{s}`"))))
            .collect::<Result<Vec<_>>>()?;
        if v.iter().any(|&x| x > 64) {
            return Err(Error::CapExceeded(format!("dimension vector `{s}`")));
        }
        Ok(DimVector(v))
    }
}

impl Add for &DimVector {
    type Output = DimVector;
    fn add(self, o: &DimVector) -> DimVector {
        assert_eq!(self.0.len(), o.0.len(), "dimension vectors of different quivers");
        DimVector(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }
}

impl fmt::Display for DimVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// A finite quiver; arrows are `(tail, head)` pairs and loops are allowed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quiver {
    name: String,
    vertices: usize,
    arrows: Vec<(usize, usize)>,
}

impl Quiver {
    pub fn new(name: impl Into<String>, vertices: usize, arrows: Vec<(usize, usize)>) -> Result<Self> {
        if arrows.iter().any(|&(t, h)| t >= vertices || h >= vertices) {
            return Err(Error::InvalidParameter("arrow endpoint out of range".into()));
        }
        Ok(Quiver { name: name.into(), vertices, arrows })
    }

    /// Cyclic quiver `C_r` with arrows `i -> i+1 mod r`; `C_1` is the
    /// Jordan quiver (one loop).
    pub fn cyclic(r: usize) -> Self {
        assert!(r >= 1);
        Quiver { name: format!("C{r}"), vertices: r, arrows: (0..r).map(|i| (i, (i + 1) % r)).collect() }
    }

    pub fn jordan() -> Self {
        Self::cyclic(1)
    }

    /// Kronecker quiver: two arrows `1 -> 2`.
    pub fn kronecker() -> Self {
        Quiver { name: "K2".into(), vertices: 2, arrows: vec![(0, 1), (0, 1)] }
    }

    /// `A_2`: one arrow `1 -> 2`.
    pub fn a2() -> Self {
        Quiver { name: "A2".into(), vertices: 2, arrows: vec![(0, 1)] }
    }

    /// The quiver with the arrows in `reversed` turned around; arrow order
    /// is kept.
    pub fn reverse_arrows(&self, reversed: &[usize], name: impl Into<String>) -> Result<Self> {
        if reversed.iter().any(|&a| a >= self.arrows.len()) {
            return Err(Error::InvalidParameter("arrow index out of range".into()));
        }
        let arrows = self
            .arrows
            .iter()
            .enumerate()
            .map(|(i, &(t, h))| if reversed.contains(&i) { (h, t) } else { (t, h) })
            .collect();
        Ok(Quiver { name: name.into(), vertices: self.vertices, arrows })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn vertices(&self) -> usize {
        self.vertices
    }

    pub fn arrows(&self) -> &[(usize, usize)] {
        &self.arrows
    }

    /// Whether the quiver is `C_r` with the standard orientation.
    pub fn cyclic_rank(&self) -> Option<usize> {
        let r = self.vertices;
        (r >= 1 && self.arrows.len() == r && self.arrows.iter().enumerate().all(|(i, &a)| a == (i, (i + 1) % r)))
            .then_some(r)
    }

    fn check(&self, d: &DimVector) -> Result<()> {
        if d.len() != self.vertices {
            return Err(Error::InvalidParameter(format!("dimension vector {d} does not fit {}", self.name)));
        }
        Ok(())
    }

    /// Euler form `sum x_i y_i - sum_arrows x_tail y_head`.
    pub fn euler_form(&self, x: &DimVector, y: &DimVector) -> Result<i64> {
        self.check(x)?;
        self.check(y)?;
        let diag: i64 = x.0.iter().zip(&y.0).map(|(a, b)| *a as i64 * *b as i64).sum();
        let off: i64 = self.arrows.iter().map(|&(t, h)| x.0[t] as i64 * y.0[h] as i64).sum();
        Ok(diag - off)
    }

    /// `dim E_V`, the number of matrix entries of a representation.
    pub fn rep_dim(&self, d: &DimVector) -> usize {
        self.arrows.iter().map(|&(t, h)| (d.0[t] * d.0[h]) as usize).sum()
    }

    pub fn validate(&self, d: &DimVector) -> Result<()> {
        self.check(d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn euler_form_examples() {
        let j = Quiver::jordan();
        assert_eq!(j.euler_form(&DimVector(vec![1]), &DimVector(vec![1])).unwrap(), 0);
        let c2 = Quiver::cyclic(2);
        assert_eq!(c2.euler_form(&DimVector::unit(2, 0), &DimVector::unit(2, 1)).unwrap(), -1);
        let k2 = Quiver::kronecker();
        let d = DimVector::delta(2, 1);
        assert_eq!(k2.euler_form(&d, &d).unwrap(), 0);
        assert!(k2.euler_form(&DimVector(vec![1]), &d).is_err());
    }

    #[test]
    fn below_enumerates_box() {
        let d = DimVector(vec![1, 2]);
        assert_eq!(d.below().len(), 6);
        assert!(d.below().iter().all(|e| e.le(&d)));
    }
}

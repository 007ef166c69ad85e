use std::sync::Arc;

use super::field::{FieldElem, FieldSpec};
use crate::error::{Error, Result};

/// Largest field order supported by the table-driven arithmetic used in
/// the representation engines.
pub const MAX_TABLE_ORDER: u64 = 256;

/// Table-driven arithmetic on element codes (`u8`) of a small field.
#[derive(Debug)]
pub struct Gf {
    spec: Arc<FieldSpec>,
    q: usize,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    inv: Vec<u8>,
    trace: Vec<u8>,
    primitive: u8,
}

impl Gf {
    pub fn new(q: u64) -> Result<Arc<Gf>> {
        if q > MAX_TABLE_ORDER {
            return Err(Error::CapExceeded(format!("field order {q} exceeds {MAX_TABLE_ORDER}")));
        }
        let spec = Arc::new(FieldSpec::from_order(q)?);
        let n = q as usize;
        let els: Vec<FieldElem> = (0..q).map(|c| FieldElem::from_code(spec.clone(), c)).collect();
        let mut add = vec![0u8; n * n];
        let mut mul = vec![0u8; n * n];
        for (i, a) in els.iter().enumerate() {
            for (j, b) in els.iter().enumerate() {
                add[i * n + j] = a.add(b)?.code() as u8;
                mul[i * n + j] = a.mul(b)?.code() as u8;
            }
        }
        let neg = els.iter().map(|a| a.neg().code() as u8).collect();
        let mut inv = vec![0u8; n];
        for i in 1..n {
            inv[i] = (1..n).find(|&j| mul[i * n + j] == 1).unwrap() as u8;
        }
        let trace = els.iter().map(|a| a.trace() as u8).collect();
        let primitive = (1..n)
            .find(|&g| {
                let mut x = 1usize;
                (1..n - 1).all(|_| {
                    x = mul[x * n + g] as usize;
                    x != 1
                })
            })
            .unwrap_or(1) as u8;
        Ok(Arc::new(Gf { spec, q: n, add, mul, neg, inv, trace, primitive }))
    }

    pub fn spec(&self) -> &Arc<FieldSpec> {
        &self.spec
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn p(&self) -> u32 {
        self.spec.p()
    }

    #[inline]
    pub fn add(&self, a: u8, b: u8) -> u8 {
        self.add[a as usize * self.q + b as usize]
    }

    #[inline]
    pub fn sub(&self, a: u8, b: u8) -> u8 {
        self.add(a, self.neg[b as usize])
    }

    #[inline]
    pub fn mul(&self, a: u8, b: u8) -> u8 {
        self.mul[a as usize * self.q + b as usize]
    }

    #[inline]
    pub fn neg(&self, a: u8) -> u8 {
        self.neg[a as usize]
    }

    /// Inverse of a nonzero element.
    #[inline]
    pub fn inv(&self, a: u8) -> u8 {
        debug_assert!(a != 0);
        self.inv[a as usize]
    }

    #[inline]
    pub fn trace(&self, a: u8) -> u8 {
        self.trace[a as usize]
    }

    /// A generator of the multiplicative group.
    pub fn primitive(&self) -> u8 {
        self.primitive
    }

    /// Codes of an `F_p`-basis of the field (`1, x, x^2, ...`).
    pub fn additive_basis(&self) -> Vec<u8> {
        (0..self.spec.e()).map(|i| (self.p() as usize).pow(i) as u8).collect()
    }

    pub fn elem(&self, code: u8) -> FieldElem {
        FieldElem::from_code(self.spec.clone(), code as u64)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tables_match_field() {
        for q in [2u64, 3, 4, 8, 9] {
            let gf = Gf::new(q).unwrap();
            for a in 0..q as u8 {
                for b in 0..q as u8 {
                    let x = gf.elem(a).mul(&gf.elem(b)).unwrap();
                    assert_eq!(gf.mul(a, b) as u64, x.code());
                    assert_eq!(gf.sub(gf.add(a, b), b), a);
                }
                if a != 0 {
                    assert_eq!(gf.mul(a, gf.inv(a)), 1);
                }
            }
            // the primitive element has order q - 1
            let g = gf.primitive();
            let mut x = 1u8;
            let mut order = 0;
            loop {
                x = gf.mul(x, g);
                order += 1;
                if x == 1 {
                    break;
                }
            }
            assert_eq!(order, q - 1);
        }
    }
}

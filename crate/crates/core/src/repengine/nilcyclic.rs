//! Nilpotent representations of `C_r`, classified by multisegments.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gf::{gl_order, Gf, Mat};

use super::engine::{ClassKey, EngineMemo, Memo, RepEngine};
use super::multiseg::{multisegments_of, Multisegment};
use super::point::RepPoint;
use super::quiver::{DimVector, Quiver};

pub struct NilCyclicEngine {
    id: String,
    r: usize,
    quiver: Quiver,
    gf: Arc<Gf>,
    classes: Memo<DimVector, Vec<ClassKey>>,
    memo: EngineMemo,
}

impl NilCyclicEngine {
    pub fn new(r: usize, q: u64) -> Result<Self> {
        if r == 0 {
            return Err(Error::InvalidParameter("r must be positive".into()));
        }
        Ok(NilCyclicEngine {
            id: format!("C{r}seg|q:{q}"),
            r,
            quiver: Quiver::cyclic(r),
            gf: Gf::new(q)?,
            classes: Memo::default(),
            memo: EngineMemo::default(),
        })
    }

    pub fn r(&self) -> usize {
        self.r
    }

    fn seg<'a>(&self, c: &'a ClassKey) -> Result<&'a Multisegment> {
        match c {
            ClassKey::Seg(m) if m.r() == self.r => Ok(m),
            _ => Err(Error::EngineMismatch(format!("{c:?}"), self.id.clone())),
        }
    }

    /// Point in the segment basis: each copy of `S_i[l]` spans vectors at
    /// vertices `i, i+1, ..`, each mapped to the next and the last to zero.
    pub fn point_of(&self, m: &Multisegment) -> RepPoint {
        let r = self.r;
        let d = m.grade();
        let mut next = vec![0usize; r];
        let mut mats: Vec<Mat> = (0..r).map(|j| Mat::zero(d.0[(j + 1) % r] as usize, d.0[j] as usize)).collect();
        for ((i, l), mult) in m.segments() {
            for _ in 0..mult {
                let mut prev: Option<(usize, usize)> = None;
                for p in 0..l as usize {
                    let v = (i + p) % r;
                    let idx = next[v];
                    next[v] += 1;
                    if let Some((pv, pidx)) = prev {
                        mats[pv].set(idx, pidx, 1);
                    }
                    prev = Some((v, idx));
                }
            }
        }
        RepPoint::new(&self.quiver, d, mats).expect("shapes match")
    }

    /// Multisegment of a nilpotent point from the ranks of its path maps:
    /// the number of segments with top `s` and length at least `L` is
    /// `rank(path of length L-1 from s) - rank(path of length L from s-1)`.
    pub fn multisegment_of(&self, x: &RepPoint) -> Result<Multisegment> {
        let r = self.r;
        let gf = &self.gf;
        let d = x.dims();
        self.quiver.validate(d)?;
        let total = d.total() as usize;
        // rank[s][k]: rank of the length-k path starting at s
        let mut rank = vec![vec![0usize; total + 2]; r];
        for (s, row) in rank.iter_mut().enumerate() {
            let mut acc = Mat::identity(d.0[s] as usize);
            row[0] = d.0[s] as usize;
            for (k, slot) in row.iter_mut().enumerate().skip(1) {
                acc = x.mats()[(s + k - 1) % r].mul(gf, &acc);
                *slot = acc.rank(gf);
            }
        }
        if rank.iter().any(|row| row[total] != 0) {
            return Err(Error::InvalidParameter("representation is not nilpotent".into()));
        }
        let at_least = |s: usize, l: usize| rank[s][l - 1] - rank[(s + r - 1) % r][l];
        let mut m = Multisegment::zero(r);
        for s in 0..r {
            for l in 1..=total {
                let exact = at_least(s, l) - at_least(s, l + 1);
                m.add(s, l as u32, exact as u32);
            }
        }
        Ok(m)
    }

    /// `q^(dim End M - sum m_k^2) prod |GL_(m_k)|` over segment multiplicities `m_k`.
    pub fn structured_aut(&self, m: &Multisegment) -> u128 {
        let q = self.gf.q() as u128;
        let sq: u32 = m.segments().map(|(_, k)| k * k).sum();
        let gl: u128 = m.segments().map(|(_, k)| gl_order(k, self.gf.q() as u64)).product();
        q.pow(m.hom_dim(m) - sq) * gl
    }
}

impl RepEngine for NilCyclicEngine {
    fn id(&self) -> &str {
        &self.id
    }

    fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    fn gf(&self) -> &Arc<Gf> {
        &self.gf
    }

    fn memo(&self) -> &EngineMemo {
        &self.memo
    }

    fn classes(&self, d: &DimVector) -> Result<Arc<Vec<ClassKey>>> {
        self.quiver.validate(d)?;
        if d.total() > 64 {
            return Err(Error::CapExceeded(format!("total dimension {} too large", d.total())));
        }
        self.classes.get_or_compute(d, || Ok(multisegments_of(self.r, d).into_iter().map(ClassKey::Seg).collect()))
    }

    fn grade(&self, c: &ClassKey) -> Result<DimVector> {
        Ok(self.seg(c)?.grade())
    }

    fn representative(&self, c: &ClassKey) -> Result<RepPoint> {
        Ok(self.point_of(self.seg(c)?))
    }

    fn identify(&self, x: &RepPoint) -> Result<ClassKey> {
        Ok(ClassKey::Seg(self.multisegment_of(x)?))
    }

    fn aut_order(&self, c: &ClassKey) -> Result<u128> {
        Ok(self.structured_aut(self.seg(c)?))
    }

    fn render(&self, c: &ClassKey) -> String {
        match c {
            ClassKey::Seg(m) => m.to_string(),
            ClassKey::Orbit { grade, index } => format!("{grade}#{index}"),
        }
    }

    fn parse_class(&self, s: &str) -> Result<ClassKey> {
        Ok(ClassKey::Seg(Multisegment::parse(s, self.r)?))
    }

    fn decompose(&self, c: &ClassKey) -> Result<Arc<super::engine::Decomposition>> {
        let m = self.seg(c)?;
        Ok(Arc::new(
            m.segments().map(|((i, l), k)| (ClassKey::Seg(Multisegment::segment(self.r, i, l)), k)).collect(),
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repengine::brute::BruteEngine;
    use crate::repengine::point::hom_dim_points;

    #[test]
    fn identify_inverts_representative() {
        for r in 1..=3 {
            let e = NilCyclicEngine::new(r, 2).unwrap();
            for d in DimVector(vec![2; r]).below() {
                for c in e.classes(&d).unwrap().iter() {
                    assert_eq!(&e.identify(&e.representative(c).unwrap()).unwrap(), c);
                }
            }
        }
    }

    #[test]
    fn hom_rule_matches_linear_algebra() {
        let e = NilCyclicEngine::new(3, 2).unwrap();
        let segs: Vec<Multisegment> =
            (0..3).flat_map(|i| (1..=4).map(move |l| Multisegment::segment(3, i, l))).collect();
        for a in &segs {
            for b in &segs {
                let direct = hom_dim_points(e.quiver(), e.gf(), &e.point_of(a), &e.point_of(b));
                assert_eq!(a.hom_dim(b) as usize, direct, "{a} -> {b}");
            }
        }
    }

    #[test]
    fn structured_aut_matches_orbit_count() {
        for (r, d) in [(1, vec![3]), (2, vec![2, 1]), (2, vec![2, 2]), (3, vec![1, 1, 1])] {
            let seg = NilCyclicEngine::new(r, 2).unwrap();
            let brute = BruteEngine::nilpotent_cyclic(r, 2).unwrap();
            let d = DimVector(d);
            let segs = seg.classes(&d).unwrap();
            assert_eq!(segs.len(), brute.classes(&d).unwrap().len());
            for c in segs.iter() {
                let x = seg.representative(c).unwrap();
                let b = brute.identify(&x).unwrap();
                assert_eq!(seg.aut_order(c).unwrap(), brute.aut_order(&b).unwrap(), "{}", seg.render(c));
            }
        }
    }

    #[test]
    fn rejects_non_nilpotent() {
        let e = NilCyclicEngine::new(1, 2).unwrap();
        let x = RepPoint::new(e.quiver(), DimVector(vec![1]), vec![Mat::identity(1)]).unwrap();
        assert!(e.identify(&x).is_err());
    }
}

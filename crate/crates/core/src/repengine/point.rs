use crate::error::{Error, Result};
use crate::gf::{Gf, Mat, Subspace};

use super::quiver::{DimVector, Quiver};

/// A representation with chosen bases: one matrix per arrow, of shape
/// `dim(head) x dim(tail)`, acting on column vectors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RepPoint {
    dims: DimVector,
    mats: Vec<Mat>,
}

impl RepPoint {
    pub fn new(quiver: &Quiver, dims: DimVector, mats: Vec<Mat>) -> Result<Self> {
        quiver.validate(&dims)?;
        if mats.len() != quiver.arrows().len() {
            return Err(Error::InvalidParameter("one matrix per arrow required".into()));
        }
        for (m, &(t, h)) in mats.iter().zip(quiver.arrows()) {
            if m.rows() != dims.0[h] as usize || m.cols() != dims.0[t] as usize {
                return Err(Error::InvalidParameter(format!("matrix shape does not match dimension vector {dims}")));
            }
        }
        Ok(RepPoint { dims, mats })
    }

    pub fn zero(quiver: &Quiver, dims: DimVector) -> Self {
        let mats = quiver.arrows().iter().map(|&(t, h)| Mat::zero(dims.0[h] as usize, dims.0[t] as usize)).collect();
        RepPoint { dims, mats }
    }

    pub fn dims(&self) -> &DimVector {
        &self.dims
    }

    pub fn mats(&self) -> &[Mat] {
        &self.mats
    }

    pub fn direct_sum(&self, o: &RepPoint) -> RepPoint {
        RepPoint { dims: &self.dims + &o.dims, mats: self.mats.iter().zip(&o.mats).map(|(a, b)| a.direct_sum(b)).collect() }
    }

    /// Number of matrix entries.
    pub fn entries(&self) -> usize {
        self.mats.iter().map(|m| m.data().len()).sum()
    }

    /// Integer code: entries in arrow order, row-major, as base-`q` digits
    /// starting from the least significant.
    pub fn encode(&self, q: usize) -> u64 {
        let mut code = 0u64;
        let mut place = 1u64;
        for m in &self.mats {
            for &x in m.data() {
                code += x as u64 * place;
                place = place.wrapping_mul(q as u64);
            }
        }
        code
    }

    pub fn decode(quiver: &Quiver, dims: &DimVector, q: usize, mut code: u64) -> RepPoint {
        let mats = quiver
            .arrows()
            .iter()
            .map(|&(t, h)| {
                let (r, c) = (dims.0[h] as usize, dims.0[t] as usize);
                let data = (0..r * c)
                    .map(|_| {
                        let d = (code % q as u64) as u8;
                        code /= q as u64;
                        d
                    })
                    .collect();
                Mat::from_vec(r, c, data)
            })
            .collect();
        RepPoint { dims: dims.clone(), mats }
    }

    /// The subrepresentation on `subs` (one subspace per vertex) in the
    /// chosen bases, or `None` if some arrow does not preserve the subspaces.
    pub fn sub_point(&self, quiver: &Quiver, gf: &Gf, subs: &[Subspace]) -> Option<RepPoint> {
        let dims = DimVector(subs.iter().map(|s| s.dim() as u32).collect());
        let mut mats = Vec::with_capacity(self.mats.len());
        for (m, &(t, h)) in self.mats.iter().zip(quiver.arrows()) {
            let (ut, uh) = (&subs[t], &subs[h]);
            let mut out = Mat::zero(uh.dim(), ut.dim());
            for k in 0..ut.dim() {
                let img = m.apply(gf, ut.basis().row(k));
                let c = uh.coords(gf, &img)?;
                for (a, x) in c.into_iter().enumerate() {
                    out.set(a, k, x);
                }
            }
            mats.push(out);
        }
        Some(RepPoint { dims, mats })
    }

    /// Whether every arrow maps `subs[tail]` into `subs[head]`.
    pub fn is_stable(&self, quiver: &Quiver, gf: &Gf, subs: &[Option<&Subspace>]) -> bool {
        self.mats.iter().zip(quiver.arrows()).all(|(m, &(t, h))| match (subs[t], subs[h]) {
            (Some(ut), Some(uh)) => (0..ut.dim()).all(|k| uh.coords(gf, &m.apply(gf, ut.basis().row(k))).is_some()),
            _ => true,
        })
    }

    /// The quotient by a stable family of subspaces, in the basis of
    /// standard vectors at non-pivot positions.
    pub fn quotient_point(&self, quiver: &Quiver, gf: &Gf, subs: &[Subspace]) -> RepPoint {
        let dims = DimVector(subs.iter().map(|s| (s.ambient() - s.dim()) as u32).collect());
        let mut mats = Vec::with_capacity(self.mats.len());
        for (m, &(t, h)) in self.mats.iter().zip(quiver.arrows()) {
            let comp = subs[t].complement();
            let mut out = Mat::zero(dims.0[h] as usize, comp.len());
            for (k, &c) in comp.iter().enumerate() {
                let col: Vec<u8> = (0..m.rows()).map(|r| m.get(r, c)).collect();
                for (a, x) in subs[h].quotient_coords(gf, &col).into_iter().enumerate() {
                    out.set(a, k, x);
                }
            }
            mats.push(out);
        }
        RepPoint { dims, mats }
    }

    /// Applies `g = (g_i)` by `x_rho -> g_head x_rho g_tail^-1`.
    pub fn act(&self, quiver: &Quiver, gf: &Gf, g: &[Mat], g_inv: &[Mat]) -> RepPoint {
        let mats = self
            .mats
            .iter()
            .zip(quiver.arrows())
            .map(|(m, &(t, h))| g[h].mul(gf, m).mul(gf, &g_inv[t]))
            .collect();
        RepPoint { dims: self.dims.clone(), mats }
    }

    /// For `C_r`: whether the composite around the cycle is nilpotent.
    pub fn is_cycle_nilpotent(&self, gf: &Gf) -> bool {
        let r = self.mats.len();
        let d0 = self.dims.0[0] as usize;
        let mut acc = Mat::identity(d0);
        for i in 0..r {
            acc = self.mats[i].mul(gf, &acc);
        }
        acc.is_nilpotent(gf)
    }

    /// Dimension at each vertex of the joint kernel of the arrows leaving it.
    pub fn radical_kernel(&self, quiver: &Quiver, gf: &Gf) -> Vec<u32> {
        (0..quiver.vertices())
            .map(|i| {
                let d = self.dims.0[i] as usize;
                let rows: Vec<Vec<u8>> = self
                    .mats
                    .iter()
                    .zip(quiver.arrows())
                    .filter(|(_, &(t, _))| t == i)
                    .flat_map(|(m, _)| (0..m.rows()).map(|r| m.row(r).to_vec()).collect::<Vec<_>>())
                    .collect();
                if rows.is_empty() {
                    d as u32
                } else {
                    (d - Mat::from_rows(d, &rows).rank(gf)) as u32
                }
            })
            .collect()
    }
}

/// Basis of `Hom(m, n)`: families `(f_i : m_i -> n_i)` with
/// `n_rho f_tail = f_head m_rho` for every arrow.
pub fn hom_space(quiver: &Quiver, gf: &Gf, m: &RepPoint, n: &RepPoint) -> Vec<Vec<Mat>> {
    let nv = quiver.vertices();
    let (md, nd) = (&m.dims.0, &n.dims.0);
    let mut offset = vec![0usize; nv + 1];
    for i in 0..nv {
        offset[i + 1] = offset[i] + (nd[i] * md[i]) as usize;
    }
    let unknowns = offset[nv];
    if unknowns == 0 {
        return Vec::new();
    }
    let var = |i: usize, a: usize, b: usize| offset[i] + a * md[i] as usize + b;
    let mut rows = Vec::new();
    for (k, &(t, h)) in quiver.arrows().iter().enumerate() {
        let (mr, nr) = (&m.mats[k], &n.mats[k]);
        for a in 0..nd[h] as usize {
            for b in 0..md[t] as usize {
                let mut row = vec![0u8; unknowns];
                for c in 0..nd[t] as usize {
                    let x = nr.get(a, c);
                    let v = var(t, c, b);
                    row[v] = gf.add(row[v], x);
                }
                for c in 0..md[h] as usize {
                    let x = mr.get(c, b);
                    let v = var(h, a, c);
                    row[v] = gf.sub(row[v], x);
                }
                rows.push(row);
            }
        }
    }
    let ker = if rows.is_empty() { Mat::identity(unknowns) } else { Mat::from_rows(unknowns, &rows).kernel(gf) };
    (0..ker.rows())
        .map(|k| {
            let v = ker.row(k);
            (0..nv)
                .map(|i| Mat::from_vec(nd[i] as usize, md[i] as usize, v[offset[i]..offset[i + 1]].to_vec()))
                .collect()
        })
        .collect()
}

pub fn hom_dim_points(quiver: &Quiver, gf: &Gf, m: &RepPoint, n: &RepPoint) -> usize {
    hom_space(quiver, gf, m, n).len()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn encode_roundtrip() {
        let gf = Gf::new(3).unwrap();
        let k2 = Quiver::kronecker();
        let d = DimVector(vec![1, 2]);
        for code in 0..81u64 {
            let p = RepPoint::decode(&k2, &d, gf.q(), code);
            assert_eq!(p.encode(gf.q()), code);
        }
    }

    #[test]
    fn hom_dims_jordan() {
        let gf = Gf::new(2).unwrap();
        let j = Quiver::jordan();
        let zero2 = RepPoint::zero(&j, DimVector(vec![2]));
        assert_eq!(hom_dim_points(&j, &gf, &zero2, &zero2), 4);
        let jb = RepPoint::new(&j, DimVector(vec![2]), vec![Mat::from_rows(2, &[vec![0, 0], vec![1, 0]])]).unwrap();
        assert_eq!(hom_dim_points(&j, &gf, &jb, &jb), 2);
        assert_eq!(jb.radical_kernel(&j, &gf), vec![1]);
    }
}

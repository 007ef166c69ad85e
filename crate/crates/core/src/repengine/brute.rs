//! Generic engine: isoclasses are `G_V`-orbits on `E_V`, found by
//! breadth-first closure under generators of `G_V = prod GL(V_i)`.

use std::collections::{HashMap, VecDeque};
use std::sync::{Arc, Mutex};

use crate::error::{Error, Result};
use crate::gf::{Gf, Mat};

use super::engine::{parse_orbit, render_orbit, ClassKey, EngineMemo, Memo, RepEngine};
use super::point::RepPoint;
use super::quiver::{DimVector, Quiver};

pub const MAX_BRUTE_TOTAL_DIM: u32 = 8;
pub const MAX_BRUTE_POINTS: u64 = 1 << 22;
pub const MAX_SINGLE_ORBIT: u64 = 1 << 24;

const UNSEEN: u32 = u32::MAX;
const OUTSIDE: u32 = u32::MAX - 1;

/// Orbit representatives (minimal point codes) and orbit sizes of one grade.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitSummary {
    pub reps: Vec<u64>,
    pub sizes: Vec<u64>,
}

/// Orbit partition of one grade.
pub struct OrbitData {
    summary: Arc<OrbitSummary>,
    /// Orbit index of every point code (`OUTSIDE` for points off the variety).
    index: Vec<u32>,
}

impl OrbitData {
    pub fn summary(&self) -> &Arc<OrbitSummary> {
        &self.summary
    }

    /// Orbit of a point code, if the point lies in the variety.
    pub fn orbit_of(&self, code: u64) -> Option<u32> {
        match self.index.get(code as usize) {
            Some(&i) if i != OUTSIDE && i != UNSEEN => Some(i),
            _ => None,
        }
    }
}

/// A generator of `G_V` as a sparse linear map on the entries of `E_V`.
struct SparseMap(Vec<Vec<(u32, u8)>>);

pub struct BruteEngine {
    id: String,
    label: String,
    quiver: Quiver,
    gf: Arc<Gf>,
    nilpotent: bool,
    orbits: Memo<DimVector, OrbitData>,
    preset: Mutex<HashMap<DimVector, Arc<OrbitSummary>>>,
    classes: Memo<DimVector, Vec<ClassKey>>,
    memo: EngineMemo,
}

impl BruteEngine {
    /// All representations of `quiver` over `GF(q)`.
    pub fn new(quiver: Quiver, q: u64) -> Result<Self> {
        let label = quiver.name().to_string();
        Self::build(quiver, label, q, false)
    }

    /// Nilpotent representations of `C_r`.
    pub fn nilpotent_cyclic(r: usize, q: u64) -> Result<Self> {
        let quiver = Quiver::cyclic(r);
        Self::build(quiver, format!("C{r}nil"), q, true)
    }

    fn build(quiver: Quiver, label: String, q: u64, nilpotent: bool) -> Result<Self> {
        if nilpotent && quiver.cyclic_rank().is_none() {
            return Err(Error::InvalidParameter("the nilpotent variety is only supported for C_r".into()));
        }
        let gf = Gf::new(q)?;
        Ok(BruteEngine {
            id: format!("{label}|q:{q}"),
            label,
            quiver,
            gf,
            nilpotent,
            orbits: Memo::default(),
            preset: Mutex::new(HashMap::new()),
            classes: Memo::default(),
            memo: EngineMemo::default(),
        })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn is_nilpotent(&self) -> bool {
        self.nilpotent
    }

    fn check_caps(&self, d: &DimVector) -> Result<u32> {
        self.quiver.validate(d)?;
        if d.total() > MAX_BRUTE_TOTAL_DIM {
            return Err(Error::CapExceeded(format!(
                "total dimension {} exceeds {MAX_BRUTE_TOTAL_DIM} for the brute-force engine",
                d.total()
            )));
        }
        let m = self.quiver.rep_dim(d) as u32;
        let points = (self.gf.q() as u64).checked_pow(m).filter(|&n| n <= MAX_BRUTE_POINTS);
        if points.is_none() {
            return Err(Error::CapExceeded(format!(
                "E_V has {}^{m} points at {d}; the brute-force cap is {MAX_BRUTE_POINTS}",
                self.gf.q()
            )));
        }
        Ok(m)
    }

    fn generators(&self, d: &DimVector) -> Vec<SparseMap> {
        let gf = &self.gf;
        let mut out = Vec::new();
        for (i, &n) in d.0.iter().enumerate() {
            let n = n as usize;
            let mut gens = Vec::new();
            for a in 0..n {
                for b in 0..n {
                    if a != b {
                        for c in gf.additive_basis() {
                            let mut g = Mat::identity(n);
                            g.set(a, b, c);
                            gens.push(g);
                        }
                    }
                }
            }
            if n > 0 && gf.primitive() != 1 {
                let mut g = Mat::identity(n);
                g.set(0, 0, gf.primitive());
                gens.push(g);
            }
            for g in gens {
                let g_inv = g.inverse(gf).expect("generator is invertible");
                out.push(self.sparse_action(d, i, &g, &g_inv));
            }
        }
        out
    }

    fn sparse_action(&self, d: &DimVector, v: usize, g: &Mat, g_inv: &Mat) -> SparseMap {
        let gf = &self.gf;
        let mut rows = Vec::new();
        let mut offset = 0u32;
        for &(t, h) in self.quiver.arrows() {
            let (r, c) = (d.0[h] as usize, d.0[t] as usize);
            let left = if h == v { g.clone() } else { Mat::identity(r) };
            let right = if t == v { g_inv.clone() } else { Mat::identity(c) };
            for a in 0..r {
                for b in 0..c {
                    // (left x right)[a][b] = sum left[a][k] x[k][l] right[l][b]
                    let mut terms: Vec<(u32, u8)> = Vec::new();
                    for k in 0..r {
                        let x = left.get(a, k);
                        if x == 0 {
                            continue;
                        }
                        for l in 0..c {
                            let y = right.get(l, b);
                            if y != 0 {
                                terms.push((offset + (k * c + l) as u32, gf.mul(x, y)));
                            }
                        }
                    }
                    rows.push(terms);
                }
            }
            offset += (r * c) as u32;
        }
        SparseMap(rows)
    }

    fn compute_orbits(&self, d: &DimVector) -> Result<OrbitData> {
        let m = self.check_caps(d)? as usize;
        let gf = &self.gf;
        let q = gf.q() as u64;
        let total = q.pow(m as u32);
        let gens = self.generators(d);
        let place: Vec<u64> = (0..m).map(|k| q.pow(k as u32)).collect();
        let decode = |mut code: u64, buf: &mut Vec<u8>| {
            buf.clear();
            for _ in 0..m {
                buf.push((code % q) as u8);
                code /= q;
            }
        };
        let mut index = vec![UNSEEN; total as usize];
        let (mut reps, mut sizes) = (Vec::new(), Vec::new());
        let mut queue = VecDeque::new();
        let mut buf = Vec::with_capacity(m);
        for start in 0..total {
            if index[start as usize] != UNSEEN {
                continue;
            }
            if self.nilpotent && !RepPoint::decode(&self.quiver, d, q as usize, start).is_cycle_nilpotent(gf) {
                index[start as usize] = OUTSIDE;
                continue;
            }
            let id = reps.len() as u32;
            reps.push(start);
            index[start as usize] = id;
            queue.push_back(start);
            let mut size = 0u64;
            while let Some(code) = queue.pop_front() {
                size += 1;
                decode(code, &mut buf);
                for g in &gens {
                    let out = self.apply_sparse(g, &buf, &place);
                    let slot = &mut index[out as usize];
                    if *slot == UNSEEN {
                        *slot = id;
                        queue.push_back(out);
                    }
                }
            }
            sizes.push(size);
        }
        Ok(OrbitData { summary: Arc::new(OrbitSummary { reps, sizes }), index })
    }

    /// Size of the `G_V`-orbit of a single point, found by closing it under
    /// the generators without indexing all of `E_V`.
    pub fn single_orbit_size(&self, x: &RepPoint) -> Result<u64> {
        let d = x.dims().clone();
        self.quiver.validate(&d)?;
        let m = self.quiver.rep_dim(&d);
        let q = self.gf.q() as u64;
        if (q as f64).powi(m as i32) >= u64::MAX as f64 {
            return Err(Error::CapExceeded(format!("E_V at {d} does not fit 64-bit point codes")));
        }
        let gens = self.generators(&d);
        let place: Vec<u64> = (0..m).map(|k| q.pow(k as u32)).collect();
        let start = x.encode(q as usize);
        let mut seen = std::collections::HashSet::from([start]);
        let mut queue = VecDeque::from([start]);
        let mut buf = vec![0u8; m];
        while let Some(mut code) = queue.pop_front() {
            for b in buf.iter_mut() {
                *b = (code % q) as u8;
                code /= q;
            }
            for g in &gens {
                let out = self.apply_sparse(g, &buf, &place);
                if seen.insert(out) {
                    if seen.len() as u64 > MAX_SINGLE_ORBIT {
                        return Err(Error::CapExceeded(format!("orbit at {d} exceeds {MAX_SINGLE_ORBIT} points")));
                    }
                    queue.push_back(out);
                }
            }
        }
        Ok(seen.len() as u64)
    }

    /// `|G_V| / |orbit|`, the automorphism order by orbit-stabilizer.
    pub fn orbit_stabilizer_aut(&self, x: &RepPoint) -> Result<u128> {
        Ok(self.group_order(x.dims()) / self.single_orbit_size(x)? as u128)
    }

    fn apply_sparse(&self, g: &SparseMap, buf: &[u8], place: &[u64]) -> u64 {
        let gf = &self.gf;
        let mut out = 0u64;
        for (k, terms) in g.0.iter().enumerate() {
            let mut acc = 0u8;
            for &(j, c) in terms {
                let x = buf[j as usize];
                if x != 0 {
                    acc = gf.add(acc, gf.mul(c, x));
                }
            }
            out += acc as u64 * place[k];
        }
        out
    }

    pub fn orbit_data(&self, d: &DimVector) -> Result<Arc<OrbitData>> {
        self.orbits.get_or_compute(d, || self.compute_orbits(d))
    }

    /// Orbit representatives and sizes at `d` without forcing the full
    /// point index when they were seeded from a cache.
    pub fn orbit_summary(&self, d: &DimVector) -> Result<Arc<OrbitSummary>> {
        if let Some(o) = self.orbits.get(d) {
            return Ok(o.summary.clone());
        }
        if let Some(p) = self.preset.lock().unwrap().get(d) {
            return Ok(p.clone());
        }
        Ok(self.orbit_data(d)?.summary.clone())
    }

    /// Seeds orbit representatives and sizes (from a verified cache file).
    pub fn seed_orbits(&self, d: DimVector, summary: OrbitSummary) {
        self.preset.lock().unwrap().insert(d, Arc::new(summary));
    }

    pub fn computed_grades(&self) -> Vec<DimVector> {
        let mut v: Vec<DimVector> = self.orbits.snapshot().into_iter().map(|(k, _)| k).collect();
        v.extend(self.preset.lock().unwrap().keys().cloned());
        v.sort();
        v.dedup();
        v
    }

    fn orbit_key<'a>(&self, c: &'a ClassKey) -> Result<(&'a DimVector, u32)> {
        match c {
            ClassKey::Orbit { grade, index } => Ok((grade, *index)),
            ClassKey::Seg(_) => Err(Error::EngineMismatch("multisegment class".into(), self.id.clone())),
        }
    }

    /// Whether two points of the same grade lie in the same orbit.
    pub fn same_orbit(&self, x: &RepPoint, y: &RepPoint) -> Result<bool> {
        Ok(self.identify(x)? == self.identify(y)?)
    }
}

impl RepEngine for BruteEngine {
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
        self.classes.get_or_compute(d, || {
            let n = self.orbit_summary(d)?.reps.len() as u32;
            Ok((0..n).map(|index| ClassKey::Orbit { grade: d.clone(), index }).collect())
        })
    }

    fn grade(&self, c: &ClassKey) -> Result<DimVector> {
        Ok(self.orbit_key(c)?.0.clone())
    }

    fn representative(&self, c: &ClassKey) -> Result<RepPoint> {
        let (d, i) = self.orbit_key(c)?;
        let code = *self.orbit_summary(d)?.reps.get(i as usize).ok_or_else(|| Error::UnknownClass(self.render(c)))?;
        Ok(RepPoint::decode(&self.quiver, d, self.gf.q(), code))
    }

    fn identify(&self, x: &RepPoint) -> Result<ClassKey> {
        let d = x.dims().clone();
        let data = self.orbit_data(&d)?;
        match data.orbit_of(x.encode(self.gf.q())) {
            None => Err(Error::InvalidParameter(format!("point is not in the variety of {}", self.id))),
            Some(index) => Ok(ClassKey::Orbit { grade: d, index }),
        }
    }

    fn aut_order(&self, c: &ClassKey) -> Result<u128> {
        let (d, i) = self.orbit_key(c)?;
        let size = *self.orbit_summary(d)?.sizes.get(i as usize).ok_or_else(|| Error::UnknownClass(self.render(c)))?;
        Ok(self.group_order(d) / size as u128)
    }

    fn render(&self, c: &ClassKey) -> String {
        match c {
            ClassKey::Orbit { grade, index } => render_orbit(&self.label, self.q(), grade, *index),
            ClassKey::Seg(m) => m.to_string(),
        }
    }

    fn parse_class(&self, s: &str) -> Result<ClassKey> {
        let (grade, index) = parse_orbit(s, &self.label, self.q())?;
        self.quiver.validate(&grade)?;
        let c = ClassKey::Orbit { grade: grade.clone(), index };
        if index as usize >= self.orbit_summary(&grade)?.reps.len() {
            return Err(Error::UnknownClass(s.to_string()));
        }
        Ok(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kronecker_delta_has_four_classes() {
        let e = BruteEngine::new(Quiver::kronecker(), 2).unwrap();
        assert_eq!(e.classes(&DimVector(vec![1, 1])).unwrap().len(), 4);
        assert_eq!(e.classes(&DimVector(vec![0, 0])).unwrap().len(), 1);
    }

    #[test]
    fn orbit_sizes_partition_the_space() {
        for (quiver, d) in [(Quiver::kronecker(), vec![2, 2]), (Quiver::a2(), vec![2, 3]), (Quiver::jordan(), vec![3])] {
            let e = BruteEngine::new(quiver.clone(), 2).unwrap();
            let d = DimVector(d);
            let total: u128 = e
                .classes(&d)
                .unwrap()
                .iter()
                .map(|c| e.group_order(&d) / e.aut_order(c).unwrap())
                .sum();
            assert_eq!(total, 2u128.pow(quiver.rep_dim(&d) as u32));
        }
    }

    #[test]
    fn caps_are_enforced() {
        let e = BruteEngine::new(Quiver::kronecker(), 2).unwrap();
        assert!(matches!(e.classes(&DimVector(vec![4, 4])), Err(Error::CapExceeded(_))));
        assert!(matches!(e.classes(&DimVector(vec![5, 4])), Err(Error::CapExceeded(_))));
    }

    #[test]
    fn render_and_parse() {
        let e = BruteEngine::new(Quiver::kronecker(), 2).unwrap();
        let c = ClassKey::Orbit { grade: DimVector(vec![1, 1]), index: 3 };
        assert_eq!(e.render(&c), "Q:K2|q:2|d:(1,1)|#3");
        assert_eq!(e.parse_class("Q:K2|q:2|d:(1,1)|#3").unwrap(), c);
        assert_eq!(e.parse_class("(1,1)#3").unwrap(), c);
        assert!(e.parse_class("Q:K2|q:3|d:(1,1)|#3").is_err());
        assert!(e.parse_class("(1,1)#4").is_err());
    }
}

use std::collections::{BTreeMap, HashMap};
use std::hash::Hash;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::gf::{gl_order, Gf};

use super::multiseg::Multisegment;
use super::point::RepPoint;
use super::quiver::{DimVector, Quiver};

/// Canonical key of an isomorphism class within one engine.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClassKey {
    /// Nilpotent cyclic engine.
    Seg(Multisegment),
    /// Brute-force engine: grading and canonical orbit index.
    Orbit { grade: DimVector, index: u32 },
}

/// `F^L_{M,N}` for a fixed `L`, keyed by `(M, N)` = (quotient, submodule).
pub type HallTable = BTreeMap<(ClassKey, ClassKey), u64>;

/// For one grading `g`: `(M, N) -> [(L, F^L_{M,N})]` over all `L` of grade `g`.
pub type ProductIndex = HashMap<(ClassKey, ClassKey), Vec<(ClassKey, u64)>>;

/// Multiset of indecomposable summands, sorted by key.
pub type Decomposition = Vec<(ClassKey, u32)>;

type Cell<V> = Arc<OnceLock<Result<Arc<V>>>>;

/// Race-free memo: each key is computed once; concurrent callers wait for
/// the first computation.
pub struct Memo<K, V> {
    map: Mutex<HashMap<K, Cell<V>>>,
}

impl<K: Eq + Hash + Clone, V> Default for Memo<K, V> {
    fn default() -> Self {
        Memo { map: Mutex::new(HashMap::new()) }
    }
}

impl<K: Eq + Hash + Clone, V> Memo<K, V> {
    pub fn get_or_compute(&self, k: &K, f: impl FnOnce() -> Result<V>) -> Result<Arc<V>> {
        let cell = self.map.lock().unwrap().entry(k.clone()).or_default().clone();
        cell.get_or_init(|| f().map(Arc::new)).clone()
    }

    pub fn get(&self, k: &K) -> Option<Arc<V>> {
        let cell = self.map.lock().unwrap().get(k).cloned()?;
        cell.get().and_then(|r| r.as_ref().ok().cloned())
    }

    /// Seeds a value (e.g. from a persisted cache); ignored if present.
    pub fn insert(&self, k: K, v: V) {
        let cell = self.map.lock().unwrap().entry(k).or_default().clone();
        let _ = cell.set(Ok(Arc::new(v)));
    }

    pub fn snapshot(&self) -> Vec<(K, Arc<V>)> {
        let map = self.map.lock().unwrap();
        map.iter().filter_map(|(k, c)| c.get().and_then(|r| r.as_ref().ok()).map(|v| (k.clone(), v.clone()))).collect()
    }
}

#[derive(Default)]
pub struct EngineMemo {
    pub hall: Memo<ClassKey, HallTable>,
    pub products: Memo<DimVector, ProductIndex>,
    pub decompositions: Memo<ClassKey, Decomposition>,
}

/// Source of isoclasses, automorphism orders and Hall numbers for the
/// representations of one quiver over one finite field.
pub trait RepEngine: Send + Sync {
    /// Stable identifier such as `K2|q:2`.
    fn id(&self) -> &str;
    fn quiver(&self) -> &Quiver;
    fn gf(&self) -> &Arc<Gf>;
    fn memo(&self) -> &EngineMemo;

    /// All classes of grade `d`, in canonical order.
    fn classes(&self, d: &DimVector) -> Result<Arc<Vec<ClassKey>>>;
    fn grade(&self, c: &ClassKey) -> Result<DimVector>;
    fn representative(&self, c: &ClassKey) -> Result<RepPoint>;
    /// Class of an arbitrary point of the engine's variety.
    fn identify(&self, x: &RepPoint) -> Result<ClassKey>;
    fn aut_order(&self, c: &ClassKey) -> Result<u128>;
    fn render(&self, c: &ClassKey) -> String;
    fn parse_class(&self, s: &str) -> Result<ClassKey>;

    fn q(&self) -> u64 {
        self.gf().q() as u64
    }

    fn zero_class(&self) -> ClassKey {
        let d = DimVector::zero(self.quiver().vertices());
        self.classes(&d).expect("zero grade is always enumerable")[0].clone()
    }

    fn hall_table(&self, l: &ClassKey) -> Result<Arc<HallTable>> {
        self.memo().hall.get_or_compute(l, || super::hall::compute_hall_table(self, l))
    }

    fn decompose(&self, c: &ClassKey) -> Result<Arc<Decomposition>> {
        self.memo().decompositions.get_or_compute(c, || super::decompose::decompose_generic(self, c))
    }

    /// `|G_V| = prod |GL_{d_i}(F_q)|`.
    fn group_order(&self, d: &DimVector) -> u128 {
        d.0.iter().map(|&k| gl_order(k, self.q())).product()
    }
}

impl dyn RepEngine + '_ {
    pub fn check_class(&self, c: &ClassKey) -> Result<DimVector> {
        let d = self.grade(c)?;
        if self.classes(&d)?.binary_search(c).is_err() {
            return Err(Error::UnknownClass(self.render(c)));
        }
        Ok(d)
    }
}

/// Renders a brute-force class key.
pub(crate) fn render_orbit(quiver: &str, q: u64, grade: &DimVector, index: u32) -> String {
    format!("Q:{quiver}|q:{q}|d:{grade}|#{index}")
}

/// Parses `Q:K2|q:2|d:(1,1)|#3`, or the short form `(1,1)#3`.
pub(crate) fn parse_orbit(s: &str, quiver: &str, q: u64) -> Result<(DimVector, u32)> {
    let bad = || Error::Parse(format!("bad class `{s}`"));
    let s = s.trim();
    let (d, idx) = if let Some(rest) = s.strip_prefix("Q:") {
        let parts: Vec<&str> = rest.split('|').collect();
        if parts.len() != 4 {
            return Err(bad());
        }
        if parts[0] != quiver || parts[1] != format!("q:{q}") {
            return Err(Error::EngineMismatch(format!("{}|{}", parts[0], parts[1]), format!("{quiver}|q:{q}")));
        }
        let d = parts[2].strip_prefix("d:").ok_or_else(bad)?;
        let i = parts[3].strip_prefix('#').ok_or_else(bad)?;
        (d, i)
    } else {
        s.split_once('#').ok_or_else(bad)?
    };
    let d = DimVector::parse(d)?;
    let i: u32 = idx.trim().parse().map_err(|_| bad())?;
    Ok((d, i))
}

/// `F^L_{M,N}`: submodules `X` of `L` with `X ~ N` and `L/X ~ M`.
pub fn hall_number(e: &dyn RepEngine, l: &ClassKey, m: &ClassKey, n: &ClassKey) -> Result<u64> {
    let (dl, dm, dn) = (e.grade(l)?, e.grade(m)?, e.grade(n)?);
    if dl != &dm + &dn {
        return Ok(0);
    }
    Ok(e.hall_table(l)?.get(&(m.clone(), n.clone())).copied().unwrap_or(0))
}

/// Product index for grade `g`, built from the Hall tables of all classes
/// of grade `g` (in parallel).
pub fn product_index(e: &dyn RepEngine, g: &DimVector) -> Result<Arc<ProductIndex>> {
    e.memo().products.get_or_compute(g, || {
        use rayon::prelude::*;
        let classes = e.classes(g)?;
        let tables: Vec<(ClassKey, Arc<HallTable>)> =
            classes.par_iter().map(|l| Ok((l.clone(), e.hall_table(l)?))).collect::<Result<_>>()?;
        let mut idx = ProductIndex::new();
        for (l, t) in tables {
            for (pair, &f) in t.iter() {
                idx.entry(pair.clone()).or_default().push((l.clone(), f));
            }
        }
        Ok(idx)
    })
}

pub fn hom_dim(e: &dyn RepEngine, m: &ClassKey, n: &ClassKey) -> Result<usize> {
    let (x, y) = (e.representative(m)?, e.representative(n)?);
    Ok(super::point::hom_dim_points(e.quiver(), e.gf(), &x, &y))
}

/// Dimension of the joint kernel of outgoing arrows at each vertex.
pub fn socle(e: &dyn RepEngine, c: &ClassKey) -> Result<Vec<u32>> {
    Ok(e.representative(c)?.radical_kernel(e.quiver(), e.gf()))
}

pub fn is_indecomposable(e: &dyn RepEngine, c: &ClassKey) -> Result<bool> {
    let d = e.decompose(c)?;
    Ok(d.len() == 1 && d[0].1 == 1)
}

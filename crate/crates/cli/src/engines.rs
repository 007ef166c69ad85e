//! Quiver selection and class parsing.

use std::str::FromStr;
use std::sync::Arc;

use hallalg::partitions::Partition;
use hallalg::repengine::{BruteEngine, ClassKey, Multisegment, NilCyclicEngine, Quiver, RepEngine};
use hallalg::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Selector {
    /// Nilpotent Jordan quiver.
    C1,
    /// Nilpotent cyclic quiver with `r` vertices.
    Cr(usize),
    K2,
    A2,
    /// All representations of `C_2`.
    C2Full,
}

impl FromStr for Selector {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "c1" => Ok(Selector::C1),
            "k2" => Ok(Selector::K2),
            "a2" => Ok(Selector::A2),
            "c2full" => Ok(Selector::C2Full),
            _ => {
                let r = s
                    .strip_prefix("cr:")
                    .and_then(|r| r.parse::<usize>().ok())
                    .filter(|r| (1..=4).contains(r))
                    .ok_or_else(|| format!("unknown quiver `{s}` (expected c1, cr:R with R <= 4, k2, a2, c2full)"))?;
                Ok(if r == 1 { Selector::C1 } else { Selector::Cr(r) })
            }
        }
    }
}

pub struct Engine {
    pub dyn_engine: Arc<dyn RepEngine>,
    pub brute: Option<Arc<BruteEngine>>,
    pub r: Option<usize>,
}

impl Engine {
    pub fn build(sel: Selector, q: u64) -> Result<Self> {
        let seg = |r: usize| -> Result<Engine> {
            Ok(Engine { dyn_engine: Arc::new(NilCyclicEngine::new(r, q)?), brute: None, r: Some(r) })
        };
        let brute = |quiver: Quiver| -> Result<Engine> {
            let e = Arc::new(BruteEngine::new(quiver, q)?);
            Ok(Engine { dyn_engine: e.clone(), brute: Some(e), r: None })
        };
        match sel {
            Selector::C1 => seg(1),
            Selector::Cr(r) => seg(r),
            Selector::K2 => brute(Quiver::kronecker()),
            Selector::A2 => brute(Quiver::a2()),
            Selector::C2Full => brute(Quiver::cyclic(2)),
        }
    }

    pub fn e(&self) -> &dyn RepEngine {
        self.dyn_engine.as_ref()
    }

    /// A multisegment, or a partition for the Jordan quiver.
    pub fn multisegment(&self, s: &str) -> Result<Multisegment> {
        let r = self.r.ok_or_else(|| Error::InvalidParameter("multisegments need --quiver c1 or cr:R".into()))?;
        if r == 1 && s.trim_start().starts_with('(') {
            return Ok(Multisegment::from_lengths(1, 0, Partition::parse(s)?.parts()));
        }
        Multisegment::parse(s, r)
    }

    pub fn class(&self, s: &str) -> Result<ClassKey> {
        if self.r.is_some() {
            return Ok(ClassKey::Seg(self.multisegment(s)?));
        }
        let c = self.e().parse_class(s)?;
        self.e().check_class(&c)?;
        Ok(c)
    }
}

use std::collections::BTreeMap;

use serde_json::{json, Value};

use crate::coeff::Coeff;
use crate::error::{Error, Result};
use crate::repengine::{ClassKey, DimVector, RepEngine};

/// Finite linear combination of isoclasses of one engine.
#[derive(Clone, Debug, PartialEq)]
pub struct HallElement<C> {
    engine: String,
    terms: BTreeMap<ClassKey, C>,
}

impl<C: Coeff> HallElement<C> {
    pub fn zero(e: &dyn RepEngine) -> Self {
        HallElement { engine: e.id().to_string(), terms: BTreeMap::new() }
    }

    /// The basis element `[M]`.
    pub fn basis(e: &dyn RepEngine, c: ClassKey) -> Self {
        Self::from_terms(e, [(c, C::one())])
    }

    /// The unit `[0]`.
    pub fn unit(e: &dyn RepEngine) -> Self {
        Self::basis(e, e.zero_class())
    }

    pub fn from_terms(e: &dyn RepEngine, terms: impl IntoIterator<Item = (ClassKey, C)>) -> Self {
        let mut x = Self::zero(e);
        for (k, c) in terms {
            x.add_term(k, &c);
        }
        x
    }

    pub fn engine_id(&self) -> &str {
        &self.engine
    }

    pub(crate) fn check(&self, e: &dyn RepEngine) -> Result<()> {
        if self.engine != e.id() {
            return Err(Error::EngineMismatch(self.engine.clone(), e.id().to_string()));
        }
        Ok(())
    }

    fn check_same(&self, o: &Self) -> Result<()> {
        if self.engine != o.engine {
            return Err(Error::EngineMismatch(self.engine.clone(), o.engine.clone()));
        }
        Ok(())
    }

    pub fn terms(&self) -> &BTreeMap<ClassKey, C> {
        &self.terms
    }

    pub fn coeff(&self, c: &ClassKey) -> C {
        self.terms.get(c).cloned().unwrap_or_else(C::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, k: ClassKey, c: &C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&k) {
            Some(x) => {
                *x = x.add_ref(c);
                if x.is_zero() {
                    self.terms.remove(&k);
                }
            }
            None => {
                self.terms.insert(k, c.clone());
            }
        }
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        self.check_same(o)?;
        let mut out = self.clone();
        for (k, c) in &o.terms {
            out.add_term(k.clone(), c);
        }
        Ok(out)
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        self.map(|c| c.neg_ref())
    }

    pub fn scale(&self, s: &C) -> Self {
        self.map(|c| c.mul_ref(s))
    }

    fn map(&self, f: impl Fn(&C) -> C) -> Self {
        let terms = self.terms.iter().map(|(k, c)| (k.clone(), f(c))).filter(|(_, c)| !c.is_zero()).collect();
        HallElement { engine: self.engine.clone(), terms }
    }

    /// Common grade of the support; `None` for zero.
    pub fn grade(&self, e: &dyn RepEngine) -> Result<Option<DimVector>> {
        let mut g: Option<DimVector> = None;
        for k in self.terms.keys() {
            let d = e.grade(k)?;
            match &g {
                Some(h) if h != &d => return Err(Error::NonHomogeneous),
                _ => g = Some(d),
            }
        }
        Ok(g)
    }

    /// `{"grade": [..], "terms": [{"class": .., "coeff": ..}]}`, terms in
    /// key order; `grade` is null for zero or mixed-grade elements.
    pub fn to_json(&self, e: &dyn RepEngine) -> Value {
        let grade = match self.grade(e) {
            Ok(Some(d)) => json!(d.0),
            _ => Value::Null,
        };
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(k, c)| json!({"class": e.render(k), "coeff": c.to_string()}))
            .collect();
        json!({"grade": grade, "terms": terms})
    }

    /// `c1*[M1] + c2*[M2] + ..`, in key order.
    pub fn render(&self, e: &dyn RepEngine) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let parts: Vec<String> = self.terms.iter().map(|(k, c)| format!("({c})*[{}]", e.render(k))).collect();
        parts.join(" + ")
    }
}

/// Element of `H (x) H`.
#[derive(Clone, Debug, PartialEq)]
pub struct TensorElement<C> {
    engine: String,
    terms: BTreeMap<(ClassKey, ClassKey), C>,
}

impl<C: Coeff> TensorElement<C> {
    pub fn zero(e: &dyn RepEngine) -> Self {
        TensorElement { engine: e.id().to_string(), terms: BTreeMap::new() }
    }

    pub fn engine_id(&self) -> &str {
        &self.engine
    }

    pub fn terms(&self) -> &BTreeMap<(ClassKey, ClassKey), C> {
        &self.terms
    }

    pub fn coeff(&self, a: &ClassKey, b: &ClassKey) -> C {
        self.terms.get(&(a.clone(), b.clone())).cloned().unwrap_or_else(C::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, a: ClassKey, b: ClassKey, c: &C) {
        if c.is_zero() {
            return;
        }
        let k = (a, b);
        match self.terms.get_mut(&k) {
            Some(x) => {
                *x = x.add_ref(c);
                if x.is_zero() {
                    self.terms.remove(&k);
                }
            }
            None => {
                self.terms.insert(k, c.clone());
            }
        }
    }

    /// `x (x) y`.
    pub fn tensor(x: &HallElement<C>, y: &HallElement<C>) -> Result<Self> {
        if x.engine != y.engine {
            return Err(Error::EngineMismatch(x.engine.clone(), y.engine.clone()));
        }
        let mut out = TensorElement { engine: x.engine.clone(), terms: BTreeMap::new() };
        for (a, ca) in &x.terms {
            for (b, cb) in &y.terms {
                out.add_term(a.clone(), b.clone(), &ca.mul_ref(cb));
            }
        }
        Ok(out)
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        if self.engine != o.engine {
            return Err(Error::EngineMismatch(self.engine.clone(), o.engine.clone()));
        }
        let mut out = self.clone();
        for ((a, b), c) in &o.terms {
            out.add_term(a.clone(), b.clone(), c);
        }
        Ok(out)
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        let neg = TensorElement {
            engine: o.engine.clone(),
            terms: o.terms.iter().map(|(k, c)| (k.clone(), c.neg_ref())).collect(),
        };
        self.add(&neg)
    }

    pub fn render(&self, e: &dyn RepEngine) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let parts: Vec<String> =
            self.terms.iter().map(|((a, b), c)| format!("({c})*[{}]#[{}]", e.render(a), e.render(b))).collect();
        parts.join(" + ")
    }
}

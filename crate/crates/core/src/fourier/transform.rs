use std::collections::BTreeMap;
use std::sync::Arc;

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::coeff::{CycloSqrt, SqrtExt};
use crate::error::{Error, Result};
use crate::hallcore::HallElement;
use crate::repengine::{BruteEngine, ClassKey, DimVector, Memo, Quiver, RepEngine};

/// Largest `|E_V|` a transform may enumerate.
pub const MAX_TRANSFORM_POINTS: u64 = 1_000_000;

/// A quiver together with the arrows to reverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReversalSpec {
    source: Quiver,
    reversed: Vec<usize>,
    target: Quiver,
}

impl ReversalSpec {
    pub fn new(source: Quiver, mut reversed: Vec<usize>) -> Result<Self> {
        reversed.sort_unstable();
        reversed.dedup();
        let target = source.reverse_arrows(&reversed, "")?;
        let target = target.reverse_arrows(&[], known_name(&source, &reversed, &target))?;
        Ok(ReversalSpec { source, reversed, target })
    }

    /// `1 -> 2` to `1 <- 2`.
    pub fn a2() -> Self {
        Self::new(Quiver::a2(), vec![0]).expect("valid reversal")
    }

    /// The Kronecker quiver with its second arrow reversed, which is `C_2`.
    pub fn kronecker_to_c2() -> Self {
        Self::new(Quiver::kronecker(), vec![1]).expect("valid reversal")
    }

    pub fn source(&self) -> &Quiver {
        &self.source
    }

    pub fn target(&self) -> &Quiver {
        &self.target
    }

    pub fn reversed(&self) -> &[usize] {
        &self.reversed
    }

    /// Reversing the same arrows of the target.
    pub fn inverse(&self) -> Self {
        Self::new(self.target.clone(), self.reversed.clone()).expect("valid reversal")
    }
}

fn known_name(source: &Quiver, reversed: &[usize], target: &Quiver) -> String {
    let same = |q: &Quiver| q.vertices() == target.vertices() && q.arrows() == target.arrows();
    if let Some(r) = target.cyclic_rank() {
        return format!("C{r}");
    }
    for q in [Quiver::a2(), Quiver::kronecker()] {
        if same(&q) {
            return q.name().to_string();
        }
    }
    if same(&Quiver::a2().reverse_arrows(&[0], "").expect("one arrow")) {
        return "A2op".into();
    }
    let list: Vec<String> = reversed.iter().map(|a| a.to_string()).collect();
    format!("{}~{}", source.name(), list.join("."))
}

/// Which additive character enters the kernel: `psi = zeta_p^Tr` or its
/// complex conjugate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Character {
    Psi,
    Conjugate,
}

/// A `G_V`-invariant function on `E_V` of one grade, stored by orbit.
#[derive(Clone, Debug, PartialEq)]
pub struct InvariantFunction {
    grade: DimVector,
    element: HallElement<CycloSqrt>,
}

impl InvariantFunction {
    pub fn new(e: &BruteEngine, grade: DimVector, element: HallElement<CycloSqrt>) -> Result<Self> {
        if element.engine_id() != e.id() {
            return Err(Error::EngineMismatch(element.engine_id().into(), e.id().into()));
        }
        for k in element.terms().keys() {
            if e.grade(k)? != grade {
                return Err(Error::InvalidParameter(format!("class {} is not of grade {grade}", e.render(k))));
            }
        }
        Ok(InvariantFunction { grade, element })
    }

    pub fn zero(e: &BruteEngine, grade: DimVector) -> Self {
        InvariantFunction { grade, element: HallElement::zero(e) }
    }

    /// The characteristic function of one orbit.
    pub fn indicator(e: &BruteEngine, c: ClassKey) -> Result<Self> {
        let grade = e.grade(&c)?;
        Ok(InvariantFunction { grade, element: HallElement::basis(e, c) })
    }

    pub fn grade(&self) -> &DimVector {
        &self.grade
    }

    pub fn element(&self) -> &HallElement<CycloSqrt> {
        &self.element
    }

    pub fn into_element(self) -> HallElement<CycloSqrt> {
        self.element
    }

    /// Value on an orbit; classes outside the support give 0.
    pub fn value(&self, c: &ClassKey) -> CycloSqrt {
        self.element.coeff(c)
    }

    /// `{"grade": [..], "terms": [{"class": .., "coeff": {"a": [..], "b": [..]}}]}`
    /// where `coeff = sum_i (a_i + b_i sqrt(q0)) zeta^i`.
    pub fn to_json(&self, e: &dyn RepEngine) -> Value {
        let terms: Vec<Value> = self
            .element
            .terms()
            .iter()
            .map(|(k, c)| {
                let a: Vec<String> = c.coords().iter().map(|x| x.a().to_string()).collect();
                let b: Vec<String> = c.coords().iter().map(|x| x.b().to_string()).collect();
                json!({"class": e.render(k), "coeff": {"a": a, "b": b}})
            })
            .collect();
        json!({"grade": self.grade.0, "terms": terms})
    }
}

/// Embeds an element with coefficients in `Q(sqrt(q0))`.
pub fn lift(e: &dyn RepEngine, x: &HallElement<SqrtExt>) -> HallElement<CycloSqrt> {
    HallElement::from_terms(e, x.terms().iter().map(|(k, c)| (k.clone(), CycloSqrt::scalar(c.clone()))))
}

/// Coefficients back in `Q(sqrt(q0))`, if no root of unity survives.
pub fn lower(e: &dyn RepEngine, x: &HallElement<CycloSqrt>) -> Option<HallElement<SqrtExt>> {
    let terms: Option<Vec<_>> = x.terms().iter().map(|(k, c)| c.as_sqrt().map(|s| (k.clone(), s))).collect();
    terms.map(|t| HallElement::from_terms(e, t))
}

/// Rows of the transform at one grade: for each target orbit, the sparse
/// list of source orbits and kernel values.
struct Kernel {
    rows: Vec<Vec<(u32, CycloSqrt)>>,
}

/// The transform `Phi` from functions on the source quiver to functions on
/// the target quiver over the same field.
pub struct Fourier {
    spec: ReversalSpec,
    src: Arc<BruteEngine>,
    dst: Arc<BruteEngine>,
    character: Character,
    kernels: Memo<DimVector, Kernel>,
}

impl Fourier {
    pub fn new(spec: ReversalSpec, q: u64, character: Character) -> Result<Self> {
        let src = Arc::new(BruteEngine::new(spec.source.clone(), q)?);
        let dst = Arc::new(BruteEngine::new(spec.target.clone(), q)?);
        Self::with_engines(spec, src, dst, character)
    }

    pub fn with_engines(
        spec: ReversalSpec,
        src: Arc<BruteEngine>,
        dst: Arc<BruteEngine>,
        character: Character,
    ) -> Result<Self> {
        let fits = |e: &BruteEngine, q: &Quiver| !e.is_nilpotent() && e.quiver().arrows() == q.arrows();
        if !fits(&src, &spec.source) || !fits(&dst, &spec.target) || src.q() != dst.q() {
            return Err(Error::InvalidParameter("engines do not match the reversal".into()));
        }
        Ok(Fourier { spec, src, dst, character, kernels: Memo::default() })
    }

    pub fn spec(&self) -> &ReversalSpec {
        &self.spec
    }

    pub fn source(&self) -> &Arc<BruteEngine> {
        &self.src
    }

    pub fn target(&self) -> &Arc<BruteEngine> {
        &self.dst
    }

    /// `dim Y_V`: entries of the reversed arrows at `d`.
    pub fn dim_y(&self, d: &DimVector) -> u32 {
        self.spec.reversed.iter().map(|&a| {
            let (t, h) = self.spec.source.arrows()[a];
            d.0[t] * d.0[h]
        }).sum()
    }

    pub fn transform(&self, f: &InvariantFunction) -> Result<InvariantFunction> {
        f.element.check(self.src.as_ref())?;
        let d = &f.grade;
        let kernel = self.kernel(d)?;
        let classes = self.src.classes(d)?;
        let mut values: Vec<Option<&CycloSqrt>> = vec![None; classes.len()];
        for (k, c) in f.element.terms() {
            if let ClassKey::Orbit { index, .. } = k {
                values[*index as usize] = Some(c);
            }
        }
        let dst_classes = self.dst.classes(d)?;
        let mut out = HallElement::zero(self.dst.as_ref());
        for (row, key) in kernel.rows.iter().zip(dst_classes.iter()) {
            let mut acc = CycloSqrt::zero();
            for (j, k) in row {
                if let Some(v) = values[*j as usize] {
                    acc = acc.try_add(&v.try_mul(k)?)?;
                }
            }
            out.add_term(key.clone(), &acc);
        }
        Ok(InvariantFunction { grade: d.clone(), element: out })
    }

    /// `Phi` applied grade by grade to an element of the source algebra.
    pub fn apply(&self, x: &HallElement<CycloSqrt>) -> Result<HallElement<CycloSqrt>> {
        let mut by_grade: BTreeMap<DimVector, HallElement<CycloSqrt>> = BTreeMap::new();
        for (k, c) in x.terms() {
            let g = self.src.grade(k)?;
            by_grade.entry(g).or_insert_with(|| HallElement::zero(self.src.as_ref())).add_term(k.clone(), c);
        }
        let mut out = HallElement::zero(self.dst.as_ref());
        for (g, part) in by_grade {
            out = out.add(&self.transform(&InvariantFunction { grade: g, element: part })?.element)?;
        }
        Ok(out)
    }

    fn kernel(&self, d: &DimVector) -> Result<Arc<Kernel>> {
        self.kernels.get_or_compute(d, || self.compute_kernel(d))
    }

    fn compute_kernel(&self, d: &DimVector) -> Result<Kernel> {
        let q = self.src.q();
        let m = self.spec.source.rep_dim(d) as u32;
        if q.checked_pow(m).map_or(true, |n| n > MAX_TRANSFORM_POINTS) {
            return Err(Error::CapExceeded(format!("E_V has {q}^{m} points at {d}; the transform cap is {MAX_TRANSFORM_POINTS}")));
        }
        let src_orbits = self.src.orbit_data(d)?;
        let dst_orbits = self.dst.orbit_data(d)?;
        let gf = self.src.gf().clone();
        let p = gf.p() as usize;

        // entry layout: each arrow contributes rows x cols digits in order
        let mut y_slots = Vec::new(); // (source digit, position of the paired target digit)
        let mut x_slots = Vec::new();
        let mut offset = 0usize;
        for (a, &(t, h)) in self.spec.source.arrows().iter().enumerate() {
            let (r, c) = (d.0[h] as usize, d.0[t] as usize);
            if self.spec.reversed.contains(&a) {
                // C is r x c, D is c x r and tr(CD) = sum C[i][j] D[j][i]
                for i in 0..r {
                    for j in 0..c {
                        y_slots.push((offset + i * c + j, offset + j * r + i));
                    }
                }
            } else {
                x_slots.extend(offset..offset + r * c);
            }
            offset += r * c;
        }
        let place: Vec<u64> = (0..m).map(|k| q.pow(k)).collect();
        let ny = q.pow(y_slots.len() as u32);
        let scale = SqrtExt::v_pow(q, -(y_slots.len() as i64));
        let zetas: Vec<CycloSqrt> = (0..p)
            .map(|t| {
                let t = if self.character == Character::Psi { t as i64 } else { -(t as i64) };
                CycloSqrt::zeta_pow(gf.p(), t).map(|z| z.scale(&scale))
            })
            .collect::<Result<_>>()?;

        let row_at = |code: u64| -> Result<Vec<(u32, CycloSqrt)>> {
            let digits: Vec<u8> = (0..m).map(|k| ((code / place[k as usize]) % q) as u8).collect();
            let base: u64 = x_slots.iter().map(|&k| digits[k] as u64 * place[k]).sum();
            let mut counts: BTreeMap<u32, Vec<u64>> = BTreeMap::new();
            let mut y = vec![0u8; y_slots.len()];
            for idx in 0..ny {
                let mut rest = idx;
                for v in y.iter_mut() {
                    *v = (rest % q) as u8;
                    rest /= q;
                }
                let mut code = base;
                let mut pair = 0u8;
                for (v, &(s, t)) in y.iter().zip(&y_slots) {
                    code += *v as u64 * place[s];
                    pair = gf.add(pair, gf.mul(*v, digits[t]));
                }
                let orbit = src_orbits
                    .orbit_of(code)
                    .ok_or_else(|| Error::Internal(format!("point {code} missing from the orbit index")))?;
                counts.entry(orbit).or_insert_with(|| vec![0; p])[gf.trace(pair) as usize] += 1;
            }
            let mut row = Vec::new();
            for (orbit, cs) in counts {
                let mut acc = CycloSqrt::zero();
                for (t, &n) in cs.iter().enumerate() {
                    if n > 0 {
                        acc = acc.try_add(&zetas[t].scale(&SqrtExt::from_int(n as i64)))?;
                    }
                }
                if !acc.is_zero() {
                    row.push((orbit, acc));
                }
            }
            Ok(row)
        };

        // a second point of each target orbit, for the invariance check
        let summary = dst_orbits.summary().clone();
        let mut second = vec![None; summary.reps.len()];
        let total = q.pow(m);
        let mut missing = summary.reps.len();
        for code in 0..total {
            if missing == 0 {
                break;
            }
            if let Some(o) = dst_orbits.orbit_of(code) {
                let o = o as usize;
                if second[o].is_none() && summary.reps[o] != code {
                    second[o] = Some(code);
                    missing -= 1;
                }
            }
        }
        let rows = (0..summary.reps.len())
            .into_par_iter()
            .map(|o| {
                let row = row_at(summary.reps[o])?;
                if let Some(c) = second[o] {
                    if row_at(c)? != row {
                        return Err(Error::NotInvariant(format!(
                            "transform differs on two points of orbit {o} at {d}"
                        )));
                    }
                }
                Ok(row)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Kernel { rows })
    }
}

//! The acceptance suite: twelve criteria, each a list of independent cells.

use std::time::Instant;

use rayon::prelude::*;

use crate::error::Result;
use crate::fourier::{
    a2_image_check, check_homomorphism, gl_character_sum_check, grade_pairs_below, phi_pk2_primitive_check,
    ReversalSpec,
};
use crate::hallcore::{adjointness_check, associativity_check, coassociativity_check};
use crate::primitives::*;
use crate::report::VerificationReport;
use crate::repengine::kronecker::ClosedPoint;
use crate::repengine::{BruteEngine, DimVector, NilCyclicEngine, Quiver, RepEngine};

type Cell = Box<dyn Fn() -> Result<Vec<VerificationReport>> + Send + Sync>;

pub struct Criterion {
    pub id: u32,
    pub name: &'static str,
    cells: Vec<Cell>,
}

/// Outcome of one criterion; `errors` holds cells that could not run.
pub struct CriterionOutcome {
    pub id: u32,
    pub name: &'static str,
    pub reports: Vec<VerificationReport>,
    pub errors: Vec<String>,
    pub elapsed_ms: u64,
}

impl CriterionOutcome {
    pub fn passed(&self) -> bool {
        self.errors.is_empty() && !self.reports.is_empty() && self.reports.iter().all(VerificationReport::passed)
    }

    /// `criterion  3 PASS  name (k/k checks, t ms)`.
    pub fn summary_line(&self) -> String {
        let ok = self.reports.iter().filter(|r| r.passed()).count();
        let total = self.reports.len() + self.errors.len();
        format!(
            "criterion {:>2} {}  {} ({ok}/{total} checks, {} ms)",
            self.id,
            if self.passed() { "PASS" } else { "FAIL" },
            self.name,
            self.elapsed_ms
        )
    }
}

impl Criterion {
    fn new(id: u32, name: &'static str) -> Self {
        Criterion { id, name, cells: Vec::new() }
    }

    fn cell(mut self, f: impl Fn() -> Result<VerificationReport> + Send + Sync + 'static) -> Self {
        self.cells.push(Box::new(move || f().map(|r| vec![r])));
        self
    }

    fn cells(mut self, f: impl Fn() -> Result<Vec<VerificationReport>> + Send + Sync + 'static) -> Self {
        self.cells.push(Box::new(f));
        self
    }

    pub fn run(&self) -> CriterionOutcome {
        let start = Instant::now();
        let results: Vec<Result<Vec<VerificationReport>>> = self.cells.par_iter().map(|c| c()).collect();
        let (mut reports, mut errors) = (Vec::new(), Vec::new());
        for r in results {
            match r {
                Ok(rs) => reports.extend(rs),
                Err(e) => errors.push(e.to_string()),
            }
        }
        CriterionOutcome {
            id: self.id,
            name: self.name,
            reports,
            errors,
            elapsed_ms: start.elapsed().as_millis() as u64,
        }
    }
}

const QS: [u64; 2] = [2, 3];

fn prim(family: Family, r: usize, n: u32, q0: u64) -> Result<VerificationReport> {
    primitive_check(&PrimitiveSpec { family, r, n, point: None, q0 })
}

pub fn criteria() -> Vec<Criterion> {
    let mut c1 = Criterion::new(1, "a_lambda formula vs orbit-stabilizer");
    for n in 1..=4 {
        for q in QS {
            c1 = c1.cell(move || a_lambda_check(n, q));
        }
    }
    let mut c2 = Criterion::new(2, "partition sum = 1/(q^n-1), symbolic");
    for n in 1..=12 {
        c2 = c2.cell(move || verify_xi_identity(n));
    }
    let mut c3 = Criterion::new(3, "squared and Hua identities, symbolic");
    for n in 1..=10 {
        c3 = c3.cell(move || verify_hua_identities(n));
    }
    let mut c4 = Criterion::new(4, "primitivity of p_n, x_n, p_n^(r), p_n^K2");
    for q in QS {
        for n in 1..=4 {
            c4 = c4.cell(move || prim(Family::JordanPn, 1, n, q));
        }
        for r in [2, 3] {
            for n in 1..=2 {
                c4 = c4.cell(move || prim(Family::CyclicXn, r, n, q));
                c4 = c4.cell(move || prim(Family::CyclicPnr, r, n, q));
            }
        }
        for n in 1..=2 {
            c4 = c4.cell(move || prim(Family::KronPK2, 1, n, q));
        }
    }
    let mut c5 = Criterion::new(5, "c_n central with Delta(c_n) = sum c_s (x) c_(n-s)");
    let mut c6 = Criterion::new(6, "{p_n^(r), 1_(n delta)} = 1/(q^n-1)");
    for q in QS {
        for n in 1..=2 {
            for r in [2, 3] {
                c5 = c5.cell(move || hubery_check(r, n, q));
            }
            for r in [1, 2, 3] {
                c6 = c6.cell(move || verify_key_pairing(r, n, q));
            }
        }
    }
    let mut c7 = Criterion::new(7, "explicit p_1^(2)");
    for q in QS {
        c7 = c7.cell(move || explicit_p1_check(q));
    }
    let mut c8 = Criterion::new(8, "GL_n character sum");
    for (n, q) in [(1, 2), (1, 3), (1, 4), (2, 2), (2, 3), (3, 2)] {
        c8 = c8.cell(move || gl_character_sum_check(n, q));
    }
    let mut c9 = Criterion::new(9, "Fourier transform: A2 image, homomorphism, Phi(p_1^K2)");
    let bound = DimVector(vec![1, 1]);
    for q in QS {
        c9 = c9.cell(move || a2_image_check(q));
        for spec in [ReversalSpec::a2(), ReversalSpec::kronecker_to_c2()] {
            let pairs = grade_pairs_below(&bound);
            c9 = c9.cell(move || check_homomorphism(&spec, q, &pairs));
        }
        c9 = c9.cell(move || phi_pk2_primitive_check(1, q));
    }
    let mut c10 = Criterion::new(10, "K2 primitives: kernel of the regular functional");
    let mut c11 = Criterion::new(11, "K2 primitives: tube differences form a basis");
    for (n, q) in [(1, 2), (1, 3), (2, 2)] {
        c10 = c10.cell(move || theorem1_check(n, q));
        c11 = c11.cell(move || theorem2_basis(n, q, &ClosedPoint::zero()));
    }
    let mut c12 = Criterion::new(12, "bialgebra axioms up to total dimension 5");
    let engines: [fn() -> Result<Box<dyn RepEngine>>; 3] = [
        || Ok(Box::new(NilCyclicEngine::new(1, 2)?)),
        || Ok(Box::new(NilCyclicEngine::new(2, 2)?)),
        || Ok(Box::new(BruteEngine::new(Quiver::kronecker(), 2)?)),
    ];
    for make in engines {
        c12 = c12.cells(move || {
            let e = make()?;
            Ok(vec![associativity_check(e.as_ref(), 5)?, coassociativity_check(e.as_ref(), 5)?, adjointness_check(e.as_ref(), 5)?])
        });
    }
    vec![c1, c2, c3, c4, c5, c6, c7, c8, c9, c10, c11, c12]
}

/// Runs every criterion in order.
pub fn run_all() -> Vec<CriterionOutcome> {
    criteria().iter().map(Criterion::run).collect()
}

use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use hallalg::fourier::{self, Character, Fourier, InvariantFunction, ReversalSpec};
use hallalg::hallcore::{adjointness_check, associativity_check, coassociativity_check};
use hallalg::primitives::{self as prim, Family, PrimitiveSpec};
use hallalg::report::VerificationReport;
use hallalg::repengine::kronecker::ClosedPoint;
use hallalg::repengine::{hall_number, BruteEngine, hall_polynomial, is_indecomposable, ClassKey, DimVector, RepEngine};
use hallalg::{suite, Error, Result};

use hallalg_cli::cache;
use hallalg_cli::engines::{Engine, Selector};

#[derive(Parser)]
#[command(name = "hallalg", version, about = "Hall algebras of small quivers over finite fields")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    format: Format,
    /// Directory for cached orbit data and Hall tables.
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Args, Clone)]
struct Params {
    /// c1, cr:R, k2, a2 or c2full.
    #[arg(long, default_value = "c1")]
    quiver: Selector,
    #[arg(long, default_value_t = 2)]
    q: u64,
    /// Work with polynomials in q instead of a fixed field.
    #[arg(long)]
    symbolic: bool,
    #[arg(long)]
    r: Option<usize>,
    #[arg(long)]
    n: Option<u32>,
    #[arg(long)]
    m: Option<u32>,
    /// Dimension vector, e.g. `1,1`.
    #[arg(long)]
    d: Option<String>,
}

#[derive(Subcommand)]
enum Cmd {
    /// List the isoclasses of one dimension vector.
    Isoclasses(Params),
    /// The Hall number F^L_{M,N}.
    Hallnum {
        #[command(flatten)]
        p: Params,
        #[arg(long = "L")]
        l: String,
        #[arg(long = "M")]
        m_class: String,
        #[arg(long = "N")]
        n_class: String,
    },
    /// The Hall polynomial of three multisegments.
    Hallpoly {
        #[command(flatten)]
        p: Params,
        #[arg(long = "L")]
        l: String,
        #[arg(long = "M")]
        m_class: String,
        #[arg(long = "N")]
        n_class: String,
    },
    /// Build a primitive element and check it.
    Primitive {
        #[command(flatten)]
        p: Params,
        /// jordan_pn, cyclic_cn, cyclic_xn, cyclic_pnr, tube_pm, kron_p0, kron_pinf, kron_pk2.
        #[arg(long)]
        family: String,
        /// Closed point for tube_pm: `inf`, a field element code, or `[c0,..,1]`.
        #[arg(long)]
        point: Option<String>,
    },
    /// Run one named check, or the whole acceptance suite with --all.
    Verify {
        check: Option<String>,
        #[arg(long)]
        all: bool,
        #[command(flatten)]
        p: Params,
        #[arg(long)]
        family: Option<String>,
        #[arg(long)]
        point: Option<String>,
    },
    /// Fourier transform of basis functions (source quiver a2 or k2).
    Fourier {
        #[command(flatten)]
        p: Params,
        /// One source class; all classes of --d otherwise.
        #[arg(long)]
        class: Option<String>,
    },
}

/// Outcome of a command: printed lines and whether all checks passed.
struct Outcome {
    lines: Vec<String>,
    passed: bool,
}

impl Outcome {
    fn ok(lines: Vec<String>) -> Self {
        Outcome { lines, passed: true }
    }
}

fn usage(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}

fn need<T: Copy>(v: Option<T>, name: &str) -> Result<T> {
    v.ok_or_else(|| usage(format!("--{name} is required")))
}

fn grade(p: &Params) -> Result<DimVector> {
    DimVector::parse(p.d.as_deref().ok_or_else(|| usage("--d is required"))?)
}

fn table(rows: &[Vec<String>]) -> Vec<String> {
    let widths: Vec<usize> = (0..rows[0].len()).map(|j| rows.iter().map(|r| r[j].len()).max().unwrap_or(0)).collect();
    rows.iter()
        .map(|r| {
            let cells: Vec<String> = r.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
            cells.join("  ").trim_end().to_string()
        })
        .collect()
}

fn report_lines(reports: &[VerificationReport], fmt: Format) -> Vec<String> {
    reports.iter().map(|r| if fmt == Format::Json { r.to_json() } else { r.to_string() }).collect()
}

struct Ctx {
    format: Format,
    cache_dir: Option<PathBuf>,
}

impl Ctx {
    fn engine(&self, p: &Params) -> Result<Engine> {
        let e = Engine::build(p.quiver, p.q)?;
        if let (Some(dir), Some(b)) = (&self.cache_dir, &e.brute) {
            cache::load(b, dir);
        }
        Ok(e)
    }

    fn persist(&self, e: &Engine) -> Result<()> {
        if let (Some(dir), Some(b)) = (&self.cache_dir, &e.brute) {
            cache::save(b, dir)?;
        }
        Ok(())
    }

    fn isoclasses(&self, p: &Params) -> Result<Outcome> {
        let eng = self.engine(p)?;
        let e = eng.e();
        let d = grade(p)?;
        let mut rows = Vec::new();
        for c in e.classes(&d)?.iter() {
            rows.push((e.render(c), e.aut_order(c)?, is_indecomposable(e, c)?));
        }
        self.persist(&eng)?;
        let lines = if self.format == Format::Json {
            rows.iter().map(|(c, a, i)| json!({"class": c, "aut": a.to_string(), "indecomposable": i}).to_string()).collect()
        } else {
            let mut t = vec![vec!["class".to_string(), "aut".into(), "indecomposable".into()]];
            t.extend(rows.iter().map(|(c, a, i)| vec![c.clone(), a.to_string(), i.to_string()]));
            table(&t)
        };
        Ok(Outcome::ok(lines))
    }

    fn hallnum(&self, p: &Params, l: &str, m: &str, n: &str) -> Result<Outcome> {
        if p.symbolic {
            return self.hallpoly(p, l, m, n);
        }
        let eng = self.engine(p)?;
        let (lc, mc, nc) = (eng.class(l)?, eng.class(m)?, eng.class(n)?);
        let f = hall_number(eng.e(), &lc, &mc, &nc)?;
        self.persist(&eng)?;
        let e = eng.e();
        let line = if self.format == Format::Json {
            json!({"L": e.render(&lc), "M": e.render(&mc), "N": e.render(&nc), "q": p.q, "hall_number": f}).to_string()
        } else {
            f.to_string()
        };
        Ok(Outcome::ok(vec![line]))
    }

    fn hallpoly(&self, p: &Params, l: &str, m: &str, n: &str) -> Result<Outcome> {
        let eng = Engine::build(p.quiver, 2)?;
        let (lm, mm, nm) = (eng.multisegment(l)?, eng.multisegment(m)?, eng.multisegment(n)?);
        let (poly, samples) = hall_polynomial(&lm, &mm, &nm)?;
        let line = if self.format == Format::Json {
            json!({"L": lm.to_string(), "M": mm.to_string(), "N": nm.to_string(), "poly": poly.to_string(), "samples": samples})
                .to_string()
        } else {
            poly.to_string()
        };
        Ok(Outcome::ok(vec![line]))
    }

    fn primitive(&self, p: &Params, family: &str, point: Option<&str>) -> Result<Outcome> {
        let spec = primitive_spec(p, family, point)?;
        let (e, x) = spec.build()?;
        let report = prim::primitive_check(&spec)?;
        let line = if self.format == Format::Json {
            json!({"family": family, "element": x.to_json(e.as_ref()), "report": serde_json::to_value(report.untimed()).expect("report")})
                .to_string()
        } else {
            format!("{}\n{}", x.render(e.as_ref()), report)
        };
        Ok(Outcome { lines: vec![line], passed: report.passed() })
    }

    fn verify_all(&self) -> Result<Outcome> {
        let mut lines = Vec::new();
        let mut passed = true;
        for c in suite::criteria() {
            let out = c.run();
            passed &= out.passed();
            if self.format == Format::Json {
                lines.extend(report_lines(&out.reports, Format::Json));
                lines.extend(out.errors.iter().map(|e| json!({"criterion": out.id, "error": e}).to_string()));
            } else {
                lines.push(out.summary_line());
                lines.extend(report_lines(&out.reports, Format::Table).into_iter().map(|l| format!("    {l}")));
                lines.extend(out.errors.iter().map(|e| format!("    error: {e}")));
            }
        }
        Ok(Outcome { lines, passed })
    }

    fn verify(&self, check: &str, p: &Params, family: Option<&str>, point: Option<&str>) -> Result<Outcome> {
        let (q, n) = (p.q, p.n);
        let r = p.r.unwrap_or(2);
        let fspec = || -> Result<ReversalSpec> {
            match p.quiver {
                Selector::A2 => Ok(ReversalSpec::a2()),
                Selector::K2 => Ok(ReversalSpec::kronecker_to_c2()),
                _ => Err(usage("Fourier checks need --quiver a2 or k2")),
            }
        };
        let report = match check {
            "a_lambda" => prim::a_lambda_check(need(n, "n")?, q)?,
            "xi" => prim::verify_xi_identity(need(n, "n")?)?,
            "hua" => prim::verify_hua_identities(need(n, "n")?)?,
            "key_pairing" => prim::verify_key_pairing(r, need(n, "n")?, q)?,
            "hubery" => prim::hubery_check(r, need(n, "n")?, q)?,
            "explicit_p1" => prim::explicit_p1_check(q)?,
            "leading_form" => prim::leading_form_check(r, need(n, "n")?, q)?,
            "primitive" => {
                let family = family.ok_or_else(|| usage("--family is required"))?;
                prim::primitive_check(&primitive_spec(p, family, point)?)?
            }
            "kron_pairing" => prim::kron_pairing_check(need(n, "n")?, q)?,
            "kron_primitive_space" => prim::theorem1_check(need(n, "n")?, q)?,
            "tube_differences" => {
                let gf = hallalg::gf::Gf::new(q)?;
                let anchor = match point {
                    Some(s) => ClosedPoint::parse(gf.as_ref(), s)?,
                    None => ClosedPoint::zero(),
                };
                prim::theorem2_basis(need(n, "n")?, q, &anchor)?
            }
            "gl_sum" => fourier::gl_character_sum_check(need(n, "n")?, q)?,
            "fourier_a2" => fourier::a2_image_check(q)?,
            "fourier_np1" => fourier::np1_check(need(n, "n")?, q)?,
            "divided_power" => fourier::divided_power_check(need(n, "n")?, q)?,
            "m1_m2_route" => fourier::verify_lemma62_route(need(n, "n")?, q)?,
            "pk2_primitive" => fourier::phi_pk2_primitive_check(need(n, "n")?, q)?,
            "homomorphism" => fourier::check_homomorphism(&fspec()?, q, &fourier::grade_pairs_below(&grade(p)?))?,
            "plancherel" => fourier::plancherel_check(&fspec()?, q, &grade(p)?)?,
            "associativity" | "coassociativity" | "adjointness" => {
                let eng = self.engine(p)?;
                let max = need(n, "n")?;
                let rep = match check {
                    "associativity" => associativity_check(eng.e(), max)?,
                    "coassociativity" => coassociativity_check(eng.e(), max)?,
                    _ => adjointness_check(eng.e(), max)?,
                };
                self.persist(&eng)?;
                rep
            }
            other => return Err(usage(format!("unknown check `{other}`"))),
        };
        Ok(Outcome { lines: report_lines(std::slice::from_ref(&report), self.format), passed: report.passed() })
    }

    fn fourier(&self, p: &Params, class: Option<&str>) -> Result<Outcome> {
        let spec = match p.quiver {
            Selector::A2 => ReversalSpec::a2(),
            Selector::K2 => ReversalSpec::kronecker_to_c2(),
            _ => return Err(usage("fourier needs --quiver a2 or k2")),
        };
        let src = self.engine(p)?;
        let dst = match p.quiver {
            Selector::K2 => self.engine(&Params { quiver: Selector::C2Full, ..p.clone() })?,
            _ => {
                let e = Arc::new(BruteEngine::new(spec.target().clone(), p.q)?);
                if let Some(dir) = &self.cache_dir {
                    cache::load(&e, dir);
                }
                Engine { dyn_engine: e.clone(), brute: Some(e), r: None }
            }
        };
        let (sb, db) = (src.brute.clone().expect("brute engine"), dst.brute.clone().expect("brute engine"));
        let phi = Fourier::with_engines(spec, sb.clone(), db.clone(), Character::Psi)?;
        let classes: Vec<ClassKey> = match class {
            Some(s) => vec![src.class(s)?],
            None => sb.classes(&grade(p)?)?.to_vec(),
        };
        let mut lines = Vec::new();
        for c in classes {
            let image = phi.transform(&InvariantFunction::indicator(&sb, c.clone())?)?;
            lines.push(if self.format == Format::Json {
                json!({"source": sb.render(&c), "image": image.to_json(db.as_ref())}).to_string()
            } else {
                format!("{} -> {}", sb.render(&c), image.element().render(db.as_ref()))
            });
        }
        self.persist(&src)?;
        self.persist(&dst)?;
        Ok(Outcome::ok(lines))
    }
}

fn primitive_spec(p: &Params, family: &str, point: Option<&str>) -> Result<PrimitiveSpec> {
    let family = Family::parse(family)?;
    let n = match family {
        Family::TubePm => need(p.m.or(p.n), "m")?,
        _ => need(p.n, "n")?,
    };
    let r = match p.quiver {
        Selector::Cr(r) => p.r.unwrap_or(r),
        _ => p.r.unwrap_or(1),
    };
    let mut spec = PrimitiveSpec { family, r, n, point: None, q0: p.q };
    if let Some(s) = point {
        spec.point = Some(spec.parse_point(s)?);
    }
    Ok(spec)
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse(_)
        | Error::InvalidParameter(_)
        | Error::UnknownClass(_)
        | Error::CapExceeded(_)
        | Error::Unsupported(_)
        | Error::EngineMismatch(..) => 2,
        _ => 3,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(j) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(j.max(1)).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(3);
        }
    }
    let ctx = Ctx { format: cli.format, cache_dir: cli.cache_dir.clone() };
    let out = match &cli.cmd {
        Cmd::Isoclasses(p) => ctx.isoclasses(p),
        Cmd::Hallnum { p, l, m_class, n_class } => ctx.hallnum(p, l, m_class, n_class),
        Cmd::Hallpoly { p, l, m_class, n_class } => ctx.hallpoly(p, l, m_class, n_class),
        Cmd::Primitive { p, family, point } => ctx.primitive(p, family, point.as_deref()),
        Cmd::Verify { all: true, .. } => ctx.verify_all(),
        Cmd::Verify { check: Some(c), p, family, point, .. } => ctx.verify(c, p, family.as_deref(), point.as_deref()),
        Cmd::Verify { .. } => Err(usage("name a check or pass --all")),
        Cmd::Fourier { p, class } => ctx.fourier(p, class.as_deref()),
    };
    match out {
        Ok(o) => {
            for l in &o.lines {
                println!("{l}");
            }
            if o.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

//! On-disk cache of orbit data and Hall tables for the brute-force engines.
//!
//! One file per (engine, grade):
//!
//! ```text
//! hallalg-cache
//! version <stamp>
//! key <label>|q:<q>|d:<grade>
//! sha256 <hex digest of the body>
//! <body: one JSON object>
//! ```
//!
//! Anything that fails to parse, has a stale stamp or a wrong digest is
//! ignored and rewritten after the run.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use hallalg::repengine::{BruteEngine, ClassKey, DimVector, HallTable, OrbitSummary, RepEngine};
use hallalg::{Error, Result};

const FORMAT: u32 = 1;

pub fn stamp() -> String {
    format!("{}/{FORMAT}", hallalg::VERSION)
}

fn key(e: &BruteEngine, d: &DimVector) -> String {
    format!("{}|q:{}|d:{d}", e.label(), e.q())
}

fn file_name(e: &BruteEngine, d: &DimVector) -> String {
    let grade: Vec<String> = d.0.iter().map(u32::to_string).collect();
    format!("{}_q{}_d{}.cache", e.label(), e.q(), grade.join("-"))
}

fn digest(body: &str) -> String {
    Sha256::digest(body.as_bytes()).iter().map(|b| format!("{b:02x}")).collect()
}

pub fn render_file(e: &BruteEngine, d: &DimVector, body: &str) -> String {
    format!("hallalg-cache\nversion {}\nkey {}\nsha256 {}\n{body}\n", stamp(), key(e, d), digest(body))
}

/// Decoded contents of one cache file.
pub struct Entry {
    pub grade: DimVector,
    pub summary: OrbitSummary,
    pub hall: Vec<(ClassKey, HallTable)>,
}

/// Parses one cache file; `None` when it is stale or damaged.
pub fn decode(e: &BruteEngine, text: &str) -> Option<Entry> {
    let mut lines = text.splitn(5, '\n');
    if lines.next()? != "hallalg-cache" || lines.next()? != format!("version {}", stamp()) {
        return None;
    }
    let key_line = lines.next()?.strip_prefix("key ")?.to_string();
    let sum = lines.next()?.strip_prefix("sha256 ")?.to_string();
    let body = lines.next()?.strip_suffix('\n')?;
    if digest(body) != sum {
        return None;
    }
    let v: Value = serde_json::from_str(body).ok()?;
    let grade = DimVector(v["grade"].as_array()?.iter().map(|x| x.as_u64().map(|x| x as u32)).collect::<Option<_>>()?);
    if key_line != key(e, &grade) {
        return None;
    }
    let nums = |k: &str| -> Option<Vec<u64>> { v[k].as_array()?.iter().map(Value::as_u64).collect() };
    let summary = OrbitSummary { reps: nums("reps")?, sizes: nums("sizes")? };
    if summary.reps.len() != summary.sizes.len() || summary.reps.is_empty() {
        return None;
    }
    let mut hall: BTreeMap<ClassKey, HallTable> = BTreeMap::new();
    for row in v["hall"].as_array()? {
        let row = row.as_array()?;
        if row.len() != 4 {
            return None;
        }
        let class = |i: usize| e.parse_class(row[i].as_str()?).ok();
        let l = class(0)?;
        if e.grade(&l).ok()? != grade {
            return None;
        }
        hall.entry(l).or_default().insert((class(1)?, class(2)?), row[3].as_u64()?);
    }
    Some(Entry { grade, summary, hall: hall.into_iter().collect() })
}

/// Loads every valid cache file for `e` from `dir`; returns the number of
/// grades seeded.
pub fn load(e: &BruteEngine, dir: &Path) -> usize {
    let prefix = format!("{}_q{}_d", e.label(), e.q());
    let Ok(entries) = fs::read_dir(dir) else { return 0 };
    let mut paths: Vec<PathBuf> = entries
        .filter_map(|x| x.ok().map(|x| x.path()))
        .filter(|p| p.file_name().and_then(|n| n.to_str()).is_some_and(|n| n.starts_with(&prefix) && n.ends_with(".cache")))
        .collect();
    paths.sort();
    let mut seeded = 0;
    for p in paths {
        let Some(entry) = fs::read_to_string(&p).ok().and_then(|t| decode(e, &t)) else { continue };
        e.seed_orbits(entry.grade, entry.summary);
        for (l, table) in entry.hall {
            e.memo().hall.insert(l, table);
        }
        seeded += 1;
    }
    seeded
}

pub fn body(e: &BruteEngine, d: &DimVector) -> Result<String> {
    let s = e.orbit_summary(d)?;
    let mut rows = Vec::new();
    for (l, table) in e.memo().hall.snapshot() {
        if e.grade(&l)? != *d {
            continue;
        }
        for ((m, n), &f) in table.iter() {
            rows.push((e.render(&l), e.render(m), e.render(n), f));
        }
    }
    rows.sort();
    let hall: Vec<Value> = rows.into_iter().map(|(l, m, n, f)| json!([l, m, n, f])).collect();
    serde_json::to_string(&json!({
        "grade": d.0,
        "reps": s.reps,
        "sizes": s.sizes,
        "hall": hall,
    }))
    .map_err(|e| Error::Internal(e.to_string()))
}

/// Writes a file for every grade the engine knows, replacing files whose
/// content differs.
pub fn save(e: &BruteEngine, dir: &Path) -> Result<()> {
    fs::create_dir_all(dir).map_err(|x| Error::InvalidParameter(format!("cache directory {}: {x}", dir.display())))?;
    for d in e.computed_grades() {
        let text = render_file(e, &d, &body(e, &d)?);
        let path = dir.join(file_name(e, &d));
        if fs::read_to_string(&path).ok().as_deref() == Some(text.as_str()) {
            continue;
        }
        let tmp = path.with_extension("tmp");
        fs::write(&tmp, &text)
            .and_then(|_| fs::rename(&tmp, &path))
            .map_err(|x| Error::InvalidParameter(format!("writing {}: {x}", path.display())))?;
    }
    Ok(())
}

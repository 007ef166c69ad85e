use std::collections::BTreeMap;
use std::fmt;

use super::quiver::DimVector;
use crate::error::{Error, Result};

/// Isoclass of a nilpotent representation of `C_r`: multiplicities of the
/// indecomposables `S_i[l]` (top `S_i`, length `l`). Vertices are 0-based
/// internally and printed 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Multisegment {
    r: usize,
    segs: BTreeMap<(usize, u32), u32>,
}

impl Multisegment {
    pub fn zero(r: usize) -> Self {
        Multisegment { r, segs: BTreeMap::new() }
    }

    /// `S_i[l]` with 0-based `i`.
    pub fn segment(r: usize, i: usize, l: u32) -> Self {
        let mut m = Self::zero(r);
        m.add(i, l, 1);
        m
    }

    pub fn add(&mut self, i: usize, l: u32, mult: u32) {
        assert!(i < self.r && l >= 1);
        if mult > 0 {
            *self.segs.entry((i, l)).or_insert(0) += mult;
        }
    }

    pub fn direct_sum(&self, o: &Self) -> Self {
        assert_eq!(self.r, o.r);
        let mut out = self.clone();
        for (&(i, l), &m) in &o.segs {
            out.add(i, l, m);
        }
        out
    }

    /// `S_i[l1] + S_i[l2] + ...` for a partition, all tops at vertex `i`.
    pub fn from_lengths(r: usize, i: usize, lengths: &[u32]) -> Self {
        let mut m = Self::zero(r);
        for &l in lengths {
            m.add(i, l, 1);
        }
        m
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn segments(&self) -> impl Iterator<Item = ((usize, u32), u32)> + '_ {
        self.segs.iter().map(|(k, v)| (*k, *v))
    }

    pub fn is_zero(&self) -> bool {
        self.segs.is_empty()
    }

    pub fn is_indecomposable(&self) -> bool {
        self.segs.len() == 1 && self.segs.values().all(|&m| m == 1)
    }

    pub fn grade(&self) -> DimVector {
        let mut d = vec![0u32; self.r];
        for (&(i, l), &m) in &self.segs {
            for t in 0..l as usize {
                d[(i + t) % self.r] += m;
            }
        }
        DimVector(d)
    }

    pub fn total_dim(&self) -> u32 {
        self.segs.iter().map(|(&(_, l), &m)| l * m).sum()
    }

    /// Socle multiplicities: `S_i[l]` contributes `S_(i+l-1)`.
    pub fn socle(&self) -> Vec<u32> {
        let mut s = vec![0u32; self.r];
        for (&(i, l), &m) in &self.segs {
            s[(i + l as usize - 1) % self.r] += m;
        }
        s
    }

    /// `dim Hom(S_i[l], S_j[m]) = #{1 <= t <= min(l,m) : t = j+m-i mod r}`.
    pub fn hom_segments(r: usize, (i, l): (usize, u32), (j, m): (usize, u32)) -> u32 {
        let target = (j as i64 + m as i64 - i as i64).rem_euclid(r as i64);
        (1..=l.min(m)).filter(|&t| (t as i64).rem_euclid(r as i64) == target).count() as u32
    }

    pub fn hom_dim(&self, o: &Self) -> u32 {
        let mut s = 0;
        for (&a, &ma) in &self.segs {
            for (&b, &mb) in &o.segs {
                s += ma * mb * Self::hom_segments(self.r, a, b);
            }
        }
        s
    }

    /// Reads `S1[2]+S2[1]`, `2*S1[3]`, or `0`.
    pub fn parse(s: &str, r: usize) -> Result<Self> {
        let bad = |why: &str| Error::Parse(format!("bad multisegment `{s}`: {why}"));
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut m = Self::zero(r);
        if t == "0" {
            return Ok(m);
        }
        for item in t.split('+') {
            let (mult, seg) = match item.split_once('*') {
                Some((k, rest)) => (k.parse::<u32>().map_err(|_| bad("multiplicity"))?, rest),
                None => (1, item),
            };
            let body = seg.strip_prefix('S').ok_or_else(|| bad("expected S"))?;
            let (v, rest) = body.split_once('[').ok_or_else(|| bad("expected ["))?;
            let len = rest.strip_suffix(']').ok_or_else(|| bad("expected ]"))?;
            let v: usize = v.parse().map_err(|_| bad("vertex"))?;
            let len: u32 = len.parse().map_err(|_| bad("length"))?;
            if v == 0 || v > r || len == 0 || mult == 0 {
                return Err(bad("out of range"));
            }
            if len > 64 || mult > 64 {
                return Err(Error::CapExceeded(format!("multisegment `{s}`")));
            }
            m.add(v - 1, len, mult);
        }
        Ok(m)
    }
}

impl fmt::Display for Multisegment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.segs.is_empty() {
            return write!(f, "0");
        }
        for (k, (&(i, l), &m)) in self.segs.iter().enumerate() {
            if k > 0 {
                write!(f, "+")?;
            }
            if m > 1 {
                write!(f, "{m}*")?;
            }
            write!(f, "S{}[{l}]", i + 1)?;
        }
        Ok(())
    }
}

/// All multisegments of `C_r` with grade `d`, sorted.
pub fn multisegments_of(r: usize, d: &DimVector) -> Vec<Multisegment> {
    let total = d.total();
    let segs: Vec<(usize, u32)> = (0..r).flat_map(|i| (1..=total).map(move |l| (i, l))).collect();
    let mut out = Vec::new();
    let mut cur = Multisegment::zero(r);
    let mut rest = d.0.clone();
    fill(r, &segs, 0, &mut rest, &mut cur, &mut out);
    out.sort();
    out
}

fn fill(r: usize, segs: &[(usize, u32)], k: usize, rest: &mut Vec<u32>, cur: &mut Multisegment, out: &mut Vec<Multisegment>) {
    if rest.iter().all(|&x| x == 0) {
        out.push(cur.clone());
        return;
    }
    if k == segs.len() {
        return;
    }
    // skip segment k
    fill(r, segs, k + 1, rest, cur, out);
    let (i, l) = segs[k];
    // a segment may wrap and visit a vertex more than once
    let mut need = vec![0u32; r];
    for t in 0..l as usize {
        need[(i + t) % r] += 1;
    }
    let mut added = 0;
    loop {
        if !need.iter().zip(rest.iter()).all(|(n, x)| n <= x) {
            break;
        }
        for t in 0..l as usize {
            rest[(i + t) % r] -= 1;
        }
        cur.add(i, l, 1);
        added += 1;
        fill(r, segs, k + 1, rest, cur, out);
    }
    for _ in 0..added {
        for t in 0..l as usize {
            rest[(i + t) % r] += 1;
        }
    }
    if added > 0 {
        let e = cur.segs.get_mut(&(i, l)).unwrap();
        *e -= added;
        if *e == 0 {
            cur.segs.remove(&(i, l));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_render() {
        let m = Multisegment::parse("S1[2]+S2[1]", 2).unwrap();
        assert_eq!(m.to_string(), "S1[2]+S2[1]");
        let m = Multisegment::parse("2*S1[3]", 2).unwrap();
        assert_eq!(m.grade(), DimVector(vec![4, 2]));
        assert_eq!(Multisegment::parse(&m.to_string(), 2).unwrap(), m);
        assert!(Multisegment::parse("S3[1]", 2).is_err());
        assert!(Multisegment::parse("S1[0]", 2).is_err());
        assert_eq!(Multisegment::parse("0", 3).unwrap(), Multisegment::zero(3));
    }

    #[test]
    fn enumeration_at_delta() {
        let v = multisegments_of(2, &DimVector(vec![1, 1]));
        let s: Vec<String> = v.iter().map(|m| m.to_string()).collect();
        assert_eq!(s.len(), 3);
        assert!(s.contains(&"S1[1]+S2[1]".to_string()));
        assert!(s.contains(&"S1[2]".to_string()));
        assert!(s.contains(&"S2[2]".to_string()));
        // Jordan quiver: partitions
        assert_eq!(multisegments_of(1, &DimVector(vec![4])).len(), 5);
        assert_eq!(multisegments_of(3, &DimVector(vec![0, 0, 0])), vec![Multisegment::zero(3)]);
    }

    #[test]
    fn hom_rule_examples() {
        assert_eq!(Multisegment::hom_segments(2, (0, 2), (0, 2)), 1);
        assert_eq!(Multisegment::hom_segments(2, (0, 1), (1, 1)), 0);
        // Jordan quiver: Hom(S[a], S[b]) = min(a, b)
        assert_eq!(Multisegment::hom_segments(1, (0, 2), (0, 3)), 2);
        let m = Multisegment::from_lengths(1, 0, &[1, 1]);
        assert_eq!(m.hom_dim(&m), 4);
        assert_eq!(Multisegment::segment(2, 0, 2).socle(), vec![0, 1]);
    }
}

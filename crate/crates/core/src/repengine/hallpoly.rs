//! Hall polynomials of nilpotent `C_r` by sampling and interpolation.

use crate::coeff::{interpolate_q, rational::rat, QPoly};
use crate::error::{Error, Result};
use crate::gf::is_prime;

use super::engine::{ClassKey, RepEngine};
use super::hall::count_hall_number;
use super::multiseg::Multisegment;
use super::nilcyclic::NilCyclicEngine;

/// Largest sample field: codes are bytes.
const MAX_SAMPLE_Q: u64 = 251;

/// `F^L_{M,N}` as a polynomial in `q`, with the sampled values.
///
/// Samples the primes `2, 3, 5, ..` up to the degree bound
/// `dim M * dim N` plus one extra point that must agree with the
/// interpolant.
pub fn hall_polynomial(l: &Multisegment, m: &Multisegment, n: &Multisegment) -> Result<(QPoly, Vec<(u64, u64)>)> {
    let r = l.r();
    if m.r() != r || n.r() != r {
        return Err(Error::InvalidParameter("multisegments over different quivers".into()));
    }
    let bound = (m.total_dim() * n.total_dim()) as usize;
    let needed = bound + 2;
    let primes: Vec<u64> = (2..=MAX_SAMPLE_Q).filter(|&p| is_prime(p)).take(needed).collect();
    if primes.len() < needed {
        return Err(Error::CapExceeded(format!(
            "degree bound {bound} needs {needed} sample fields; only {} primes up to {MAX_SAMPLE_Q}",
            primes.len()
        )));
    }
    let mut samples = Vec::with_capacity(needed);
    for q in primes {
        let e = NilCyclicEngine::new(r, q)?;
        let (lk, mk, nk) = (ClassKey::Seg(l.clone()), ClassKey::Seg(m.clone()), ClassKey::Seg(n.clone()));
        let count = count_hall_number(&e, &lk, &mk, &nk).map_err(|err| match err {
            Error::CapExceeded(why) => {
                Error::CapExceeded(format!("insufficient sample points under the cap at q = {q}: {why}"))
            }
            other => other,
        })?;
        debug_assert_eq!(e.grade(&lk)?, l.grade());
        samples.push((q, count));
    }
    let points: Vec<_> = samples.iter().map(|&(q, c)| (rat(q as i64), rat(c as i64))).collect();
    Ok((interpolate_q(&points, bound)?, samples))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ms(s: &str, r: usize) -> Multisegment {
        Multisegment::parse(s, r).unwrap()
    }

    #[test]
    fn jordan_examples() {
        let (p, samples) = hall_polynomial(&ms("2*S1[1]", 1), &ms("S1[1]", 1), &ms("S1[1]", 1)).unwrap();
        assert_eq!(p.to_string(), "q + 1");
        assert_eq!(&samples[..3], &[(2, 3), (3, 4), (5, 6)]);
        let (p, _) = hall_polynomial(&ms("S1[2]", 1), &ms("S1[1]", 1), &ms("S1[1]", 1)).unwrap();
        assert_eq!(p.to_string(), "1");
    }

    #[test]
    fn cyclic_example() {
        let (p, _) = hall_polynomial(&ms("S1[1]+S2[1]", 2), &ms("S1[1]", 2), &ms("S2[1]", 2)).unwrap();
        assert_eq!(p.to_string(), "1");
    }
}

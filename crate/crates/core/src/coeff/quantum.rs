use super::laurent::LaurentPolyV;
use super::ratfunc::RationalFunctionV;
use super::rational::Rational;
use num_traits::One;

/// Quantum integer `[s] = (v^s - v^-s)/(v - v^-1) = v^(s-1) + v^(s-3) + ... + v^(1-s)`.
pub fn quantum_integer(s: u32) -> LaurentPolyV {
    let s = s as i64;
    LaurentPolyV::from_terms((0..s).map(|k| (s - 1 - 2 * k, Rational::one())))
}

/// Quantum factorial `[s]! = [1][2]...[s]`.
pub fn quantum_factorial(s: u32) -> RationalFunctionV {
    let mut acc = LaurentPolyV::one();
    for k in 1..=s {
        acc = acc.mul(&quantum_integer(k));
    }
    RationalFunctionV::from_laurent(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_factorials() {
        assert!(quantum_factorial(0).is_one());
        assert!(quantum_factorial(1).is_one());
        let v = RationalFunctionV::v_pow(1);
        let two = v.add(&v.inv().unwrap());
        assert_eq!(quantum_factorial(2), two);
        // [s](v - v^-1) = v^s - v^-s
        for s in 1..6 {
            let lhs = RationalFunctionV::from_laurent(quantum_integer(s)).mul(&v.sub(&v.inv().unwrap()));
            let rhs = RationalFunctionV::v_pow(s as i64).sub(&RationalFunctionV::v_pow(-(s as i64)));
            assert_eq!(lhs, rhs);
        }
    }
}

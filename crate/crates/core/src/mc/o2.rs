//! Exact Haar integrals over `O(2)`.
//!
//! `O(2)` is an equal mixture of rotations `[[c, -s], [s, c]]` and reflections
//! `[[c, s], [s, -c]]` with `θ` uniform, so every monomial integral is the
//! average of two trigonometric moments
//! `∫ cos^a θ sin^b θ dθ/2π = (a-1)!!(b-1)!!/(a+b)!!` (zero unless `a`, `b`
//! are both even).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::estimate::McError;
use crate::monomial::Monomial;

fn odd_chain(n: i64) -> BigInt {
    let mut acc = BigInt::one();
    let mut k = n;
    while k > 1 {
        acc *= k;
        k -= 2;
    }
    acc
}

/// `(1/2π) ∫₀^{2π} cos^a θ sin^b θ dθ`.
pub fn wallis_moment(a: u32, b: u32) -> BigRational {
    if a % 2 == 1 || b % 2 == 1 {
        return BigRational::zero();
    }
    let (a, b) = (i64::from(a), i64::from(b));
    BigRational::new(odd_chain(a - 1) * odd_chain(b - 1), odd_chain(a + b))
}

/// Exact `∫(dO) m` over `O(2)`; all indices must be 1 or 2.
pub fn o2_exact(m: &Monomial) -> Result<BigRational, McError> {
    let mut cos_power = 0u32;
    let mut sin_power = 0u32;
    // parity of the number of negative factors in each component
    let mut rotation_negative = 0u32;
    let mut reflection_negative = 0u32;
    for f in m.factors() {
        if f.row > 2 || f.col > 2 {
            return Err(McError::IndexOutOfRange(f.row.max(f.col)));
        }
        match (f.row, f.col) {
            (1, 1) => cos_power += f.power,
            (1, 2) => {
                sin_power += f.power;
                rotation_negative += f.power;
            }
            (2, 1) => sin_power += f.power,
            _ => {
                cos_power += f.power;
                reflection_negative += f.power;
            }
        }
    }
    let moment = wallis_moment(cos_power, sin_power);
    let sign = |neg: u32| {
        if neg.is_multiple_of(2) {
            BigRational::one()
        } else {
            -BigRational::one()
        }
    };
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    Ok((sign(rotation_negative) + sign(reflection_negative)) * moment * half)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::parse_monomial;

    fn o2(text: &str) -> BigRational {
        o2_exact(&parse_monomial(text).unwrap()).unwrap()
    }

    fn q(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    #[test]
    fn known_values() {
        assert_eq!(o2(""), q(1, 1));
        assert_eq!(o2("O(1,1)^2"), q(1, 2));
        assert_eq!(o2("O(1,1)^4"), q(3, 8));
        assert_eq!(o2("O(1,1)^2 O(2,2)^2"), q(3, 8));
        // -c²s² in both components
        assert_eq!(o2("O(1,1) O(2,1) O(2,2) O(1,2)"), q(-1, 8));
    }

    #[test]
    fn odd_degree_vanishes() {
        assert_eq!(o2("O(1,1)"), q(0, 1));
        assert_eq!(o2("O(1,1) O(2,2)"), q(0, 1));
    }

    #[test]
    fn wallis_values() {
        assert_eq!(wallis_moment(0, 0), q(1, 1));
        assert_eq!(wallis_moment(2, 2), q(1, 8));
        assert_eq!(wallis_moment(4, 2), q(1, 16));
        assert_eq!(wallis_moment(3, 2), q(0, 1));
    }

    #[test]
    fn rejects_third_index() {
        assert_eq!(
            o2_exact(&parse_monomial("O(1,3)^2").unwrap()),
            Err(McError::IndexOutOfRange(3))
        );
    }
}

//! Z-integrals `Z(m1,m2,m3) = ∫(dO) O₁₁^{m1} O₁₂^{m2} O₂₂^{m3}`.
//!
//! The recursion in `m3` is the evaluator of record. The Gamma-ratio closed
//! form is kept as an independent check; it is evaluated exactly by writing
//! every half-integer Gamma value as a rational multiple of `√π`.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::combinatorics::{double_factorial, factorial, pow2};
use super::fan::fan_or_one;
use super::EvalError;

fn check(m1: u32, m2: u32, m3: u32, n: usize) -> Result<(), EvalError> {
    if let Some(&m) = [m1, m2, m3].iter().find(|&&m| m % 2 != 0) {
        return Err(EvalError::OddMultiplicity(m));
    }
    if n < 2 {
        return Err(EvalError::DimensionTooSmall { required: 2, n });
    }
    Ok(())
}

/// Memoized recursion for one fixed `N`.
pub(crate) struct ZTable {
    n: usize,
    memo: HashMap<(u32, u32, u32), BigRational>,
}

impl ZTable {
    pub(crate) fn new(n: usize) -> Self {
        Self {
            n,
            memo: HashMap::new(),
        }
    }

    /// Arguments must already be validated.
    pub(crate) fn get(&mut self, m1: u32, m2: u32, m3: u32) -> Result<BigRational, EvalError> {
        // Z is symmetric under m1 <-> m3 (transpose, then swap both index pairs)
        let key = (m1.min(m3), m2, m1.max(m3));
        if let Some(v) = self.memo.get(&key) {
            return Ok(v.clone());
        }
        let (m1, m2, m3) = key;
        let value = if m3 == 0 {
            fan_or_one(&[m1, m2], self.n)?
        } else {
            let lower = self.get(m1, m2, m3 - 2)?;
            let shifted = self.get(m1, m2 + 2, m3 - 2)?;
            let coeff = BigRational::new(
                BigInt::from(m3 as i64 - 1),
                BigInt::from(self.n as i64 + m3 as i64 - 3),
            );
            coeff * (lower - shifted)
        };
        self.memo.insert(key, value.clone());
        Ok(value)
    }
}

/// Exact `Z(m1,m2,m3)` at dimension `N` via the recursion in `m3`.
pub fn z_integral(m1: u32, m2: u32, m3: u32, n: usize) -> Result<BigRational, EvalError> {
    check(m1, m2, m3, n)?;
    ZTable::new(n).get(m1, m2, m3)
}

/// A product of Gamma values at half-integers, tracked as `rational · √π^k`.
struct GammaProduct {
    rational: BigRational,
    sqrt_pi: i64,
}

impl GammaProduct {
    fn new() -> Self {
        Self {
            rational: BigRational::one(),
            sqrt_pi: 0,
        }
    }

    /// Multiplies by `Γ(k/2)^sign` for `k >= 1`, `sign = ±1`.
    fn gamma_half(&mut self, k: i64, sign: i64) {
        assert!(k >= 1, "Gamma argument {k}/2 must be positive");
        let value = if k % 2 == 0 {
            BigRational::from_integer(factorial((k / 2 - 1) as u64))
        } else {
            let j = (k - 1) / 2;
            self.sqrt_pi += sign;
            BigRational::from_integer(double_factorial(2 * j - 1).expect("j >= 0")) * pow2(-j)
        };
        if sign > 0 {
            self.rational *= value;
        } else {
            self.rational /= value;
        }
    }
}

/// Exact `Z(m1,m2,m3)` from the Gamma-ratio closed form.
///
/// Panics if the powers of `√π` fail to cancel, which would mean the form
/// was transcribed incorrectly.
pub fn z_closed_form(m1: u32, m2: u32, m3: u32, n: usize) -> Result<BigRational, EvalError> {
    check(m1, m2, m3, n)?;
    let (m1, m2, m3, n) = (m1 as i64, m2 as i64, m3 as i64, n as i64);
    let mut g = GammaProduct::new();
    g.gamma_half(1 + m1, 1);
    g.gamma_half(1 + m2, 1);
    g.gamma_half(1 + m3, 1);
    g.gamma_half(2 * (n - 1), 1);
    g.gamma_half(n + m1 + m3 - 1, 1);
    g.gamma_half(n + m1 - 1, -1);
    g.gamma_half(n + m3 - 1, -1);
    g.gamma_half(n + m1 + m2 + m3, -1);
    // 1/π
    g.sqrt_pi -= 2;
    assert_eq!(g.sqrt_pi, 0, "irrational residue in Z closed form");
    Ok(g.rational * pow2(2 - n))
}

/// `Z(m1,m2,0)` written out as the two-line fan value.
#[cfg(test)]
pub(crate) fn z_initial_value(m1: u32, m2: u32, n: usize) -> Result<BigRational, EvalError> {
    check(m1, m2, 0, n)?;
    let s = (m1 + m2) as i64;
    let n = n as i64;
    let one_vector = BigRational::new(
        double_factorial(s - 1)? * double_factorial(n - 2)?,
        double_factorial(s + n - 2)?,
    );
    let fan = BigRational::new(
        factorial((s / 2) as u64) * factorial(m1 as u64) * factorial(m2 as u64),
        factorial(s as u64) * factorial((m1 / 2) as u64) * factorial((m2 / 2) as u64),
    );
    Ok(one_vector * fan)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::combinatorics::int;
    use crate::exact::fan::fan;

    fn q(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    #[test]
    fn base_case_is_two_line_fan() {
        for n in 2..9 {
            assert_eq!(z_integral(2, 4, 0, n).unwrap(), fan(&[2, 4], n).unwrap());
            assert_eq!(z_integral(4, 0, 0, n).unwrap(), fan(&[4], n).unwrap());
            assert_eq!(z_integral(0, 0, 0, n).unwrap(), int(1));
            assert_eq!(
                z_integral(2, 4, 0, n).unwrap(),
                z_initial_value(2, 4, n).unwrap()
            );
        }
    }

    #[test]
    fn z_202() {
        for n in 2..12i64 {
            let expected = q(n + 1, (n - 1) * n * (n + 2));
            assert_eq!(z_integral(2, 0, 2, n as usize).unwrap(), expected);
        }
    }

    #[test]
    fn closed_form_matches_recursion() {
        for n in 2..9 {
            for m1 in (0..=6).step_by(2) {
                for m2 in (0..=6).step_by(2) {
                    for m3 in (0..=6).step_by(2) {
                        assert_eq!(
                            z_closed_form(m1, m2, m3, n).unwrap(),
                            z_integral(m1, m2, m3, n).unwrap(),
                            "Z({m1},{m2},{m3}) at N={n}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn closed_form_normalization() {
        for n in 2..10 {
            assert_eq!(z_closed_form(0, 0, 0, n).unwrap(), int(1));
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(
            z_integral(1, 2, 2, 4),
            Err(EvalError::OddMultiplicity(1))
        ));
        assert!(z_integral(2, 2, 2, 1).is_err());
        assert!(z_closed_form(2, 2, 3, 4).is_err());
    }

    #[test]
    fn large_arguments_stay_exact() {
        let v = z_integral(20, 20, 20, 100).unwrap();
        assert_eq!(v, z_closed_form(20, 20, 20, 100).unwrap());
        assert!(v > int(0));
    }
}

//! One-vector integrals: a single line, and fans of lines sharing one dot.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::combinatorics::{double_factorial, factorial, ratio};
use super::EvalError;

/// `∫(dO) O₁₁^{2m}` = `(2m-1)!! (N-2)!! / (2m+N-2)!!`.
pub fn f1(two_m: u32, n: usize) -> Result<BigRational, EvalError> {
    if !two_m.is_multiple_of(2) {
        return Err(EvalError::OddMultiplicity(two_m));
    }
    if n < 1 {
        return Err(EvalError::DimensionTooSmall { required: 1, n });
    }
    let (two_m, n) = (two_m as i64, n as i64);
    Ok(ratio(
        double_factorial(two_m - 1)? * double_factorial(n - 2)?,
        double_factorial(two_m + n - 2)?,
    ))
}

/// Fan integral: `t` lines of even multiplicities `m_i` ending in one common
/// dot of degree `d = Σ m_i`,
/// `F_t = F_1(d) · (d/2)!/d! · Π m_i!/(m_i/2)!`.
pub fn fan(multiplicities: &[u32], n: usize) -> Result<BigRational, EvalError> {
    if multiplicities.is_empty() {
        return Err(EvalError::InvalidArgument(
            "fan needs at least one line".into(),
        ));
    }
    if let Some(&m) = multiplicities.iter().find(|&&m| m % 2 != 0) {
        return Err(EvalError::OddMultiplicity(m));
    }
    if multiplicities.contains(&0) {
        return Err(EvalError::InvalidArgument(
            "fan multiplicities must be >= 2".into(),
        ));
    }
    if n < multiplicities.len() {
        return Err(EvalError::DimensionTooSmall {
            required: multiplicities.len(),
            n,
        });
    }
    let d: u32 = multiplicities.iter().sum();
    let mut num = factorial(u64::from(d / 2));
    let mut den = factorial(u64::from(d));
    for &m in multiplicities {
        num *= factorial(u64::from(m));
        den *= factorial(u64::from(m / 2));
    }
    Ok(f1(d, n)? * ratio(num, den))
}

/// `fan` with zero multiplicities dropped and the empty fan equal to 1.
pub(crate) fn fan_or_one(multiplicities: &[u32], n: usize) -> Result<BigRational, EvalError> {
    let lines: Vec<u32> = multiplicities.iter().copied().filter(|&m| m > 0).collect();
    if lines.is_empty() {
        Ok(ratio(BigInt::from(1), BigInt::from(1)))
    } else {
        fan(&lines, n)
    }
}

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::EvalError;

/// `n!!` with `(-1)!! = 0!! = 1`.
pub fn double_factorial(n: i64) -> Result<BigInt, EvalError> {
    if n < -1 {
        return Err(EvalError::InvalidArgument(format!(
            "double factorial undefined for {n}"
        )));
    }
    let mut acc = BigInt::one();
    let mut k = n;
    while k > 1 {
        acc *= k;
        k -= 2;
    }
    Ok(acc)
}

pub fn factorial(n: u64) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, k| acc * k)
}

pub(crate) fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub(crate) fn ratio(num: BigInt, den: BigInt) -> BigRational {
    BigRational::new(num, den)
}

pub(crate) fn pow2(exp: i64) -> BigRational {
    let p = BigInt::one() << exp.unsigned_abs();
    if exp >= 0 {
        BigRational::from_integer(p)
    } else {
        BigRational::new(BigInt::one(), p)
    }
}

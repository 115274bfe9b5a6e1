//! Closed forms for the order-6 diagrams that are neither fans, Z shapes nor
//! plain four-cycles with a single edge doubled up.
//!
//! Each value follows from summing one degree-2 dot over all `N` indices and
//! using orthogonality of rows or columns:
//!
//! | shape | representative monomial                     |
//! |-------|---------------------------------------------|
//! | 5a    | `O(1,2)^2 O(1,3)^2 O(2,1)^2`                |
//! | 5b    | `O(1,1)^2 O(2,2)^2 O(3,3)^2`                |
//! | 5c    | `O(1,1)^3 O(2,1) O(2,2) O(1,2)`             |
//! | 5d    | `O(1,1) O(2,1) O(2,2) O(1,2)^3`             |
//! | 5e    | `O(1,1) O(1,2) O(1,3)^2 O(2,1) O(2,2)`      |
//! | 5f    | `O(1,1) O(1,2) O(2,1) O(2,2) O(3,3)^2`      |
//! | 5g    | `O(1,1) O(1,2) O(2,2) O(2,3) O(3,3) O(3,1)` |
//!
//! 5c and 5d are the same four-cycle drawn two ways.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::combinatorics::{double_factorial, int};
use super::EvalError;
use crate::monomial::Monomial;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Order6Shape {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Order6Shape {
    pub const ALL: [Order6Shape; 7] = [
        Order6Shape::A,
        Order6Shape::B,
        Order6Shape::C,
        Order6Shape::D,
        Order6Shape::E,
        Order6Shape::F,
        Order6Shape::G,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Order6Shape::A => "5a",
            Order6Shape::B => "5b",
            Order6Shape::C => "5c",
            Order6Shape::D => "5d",
            Order6Shape::E => "5e",
            Order6Shape::F => "5f",
            Order6Shape::G => "5g",
        }
    }

    /// Smallest `N` accepted by [`order6_catalog`] for this shape.
    pub fn min_dimension(self) -> usize {
        match self {
            Order6Shape::B | Order6Shape::F | Order6Shape::G => 3,
            _ => 2,
        }
    }

    pub fn monomial(self) -> Monomial {
        let triples: &[(usize, usize, u32)] = match self {
            Order6Shape::A => &[(1, 2, 2), (1, 3, 2), (2, 1, 2)],
            Order6Shape::B => &[(1, 1, 2), (2, 2, 2), (3, 3, 2)],
            Order6Shape::C => &[(1, 1, 3), (2, 1, 1), (2, 2, 1), (1, 2, 1)],
            Order6Shape::D => &[(1, 1, 1), (2, 1, 1), (2, 2, 1), (1, 2, 3)],
            Order6Shape::E => &[(1, 1, 1), (1, 2, 1), (1, 3, 2), (2, 1, 1), (2, 2, 1)],
            Order6Shape::F => &[(1, 1, 1), (1, 2, 1), (2, 1, 1), (2, 2, 1), (3, 3, 2)],
            Order6Shape::G => &[
                (1, 1, 1),
                (1, 2, 1),
                (2, 2, 1),
                (2, 3, 1),
                (3, 3, 1),
                (3, 1, 1),
            ],
        };
        Monomial::from_triples(triples)
    }
}

impl fmt::Display for Order6Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for Order6Shape {
    type Err = EvalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key = s.trim().trim_start_matches("I(").trim_end_matches(')');
        Order6Shape::ALL
            .into_iter()
            .find(|shape| shape.label().eq_ignore_ascii_case(key))
            .ok_or_else(|| EvalError::InvalidArgument(format!("unknown order-6 shape '{s}'")))
    }
}

/// Closed-form value of an order-6 catalog shape at dimension `N`.
pub fn order6_catalog(shape: Order6Shape, n: usize) -> Result<BigRational, EvalError> {
    if n < shape.min_dimension() {
        return Err(EvalError::DimensionTooSmall {
            required: shape.min_dimension(),
            n,
        });
    }
    let ni = n as i64;
    let q = |num: i64, den: i64| BigRational::new(BigInt::from(num), BigInt::from(den));
    // (N-2)!! / (N+4)!!
    let df_ratio = BigRational::new(double_factorial(ni - 2)?, double_factorial(ni + 4)?);
    let value = match shape {
        Order6Shape::A => q(ni + 3, (ni - 1) * ni * (ni + 2) * (ni + 4)),
        Order6Shape::B => q(
            ni * (ni + 3) - 2,
            (ni - 2) * (ni - 1) * ni * (ni + 2) * (ni + 4),
        ),
        Order6Shape::C | Order6Shape::D => -(int(3) * df_ratio) / int(ni - 1),
        Order6Shape::E => -df_ratio / int(ni - 1),
        Order6Shape::F => q(-1, (ni - 2) * (ni - 1) * ni * (ni + 4)),
        Order6Shape::G => int(2) * df_ratio / int((ni - 2) * (ni - 1)),
    };
    Ok(value)
}

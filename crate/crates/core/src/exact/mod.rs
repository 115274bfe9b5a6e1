//! Exact evaluation of Haar integrals over `O(N)` as rationals.

mod catalog;
mod combinatorics;
mod exchange;
mod fan;
mod zint;

use std::fmt;
use std::sync::OnceLock;

use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

pub use catalog::{order6_catalog, Order6Shape};
pub use combinatorics::{double_factorial, factorial};
pub use exchange::x_integral;
pub use fan::{f1, fan};
pub use zint::{z_closed_form, z_integral};

use crate::diagram::{canonicalize, required_dimension, vanishes_by_invariance, Diagram};
use crate::monomial::Monomial;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EvalError {
    #[error("dimension N = {n} is too small, this integral needs N >= {required}")]
    DimensionTooSmall { required: usize, n: usize },
    #[error("multiplicity {0} must be even")]
    OddMultiplicity(u32),
    #[error("{0}")]
    InvalidArgument(String),
}

/// Which solved family a diagram belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Classification {
    Zero,
    Fan,
    Z,
    Exchange,
    Order6(Order6Shape),
    Unsupported,
}

impl Classification {
    pub fn name(&self) -> &'static str {
        match self {
            Classification::Zero => "Zero",
            Classification::Fan => "Fan",
            Classification::Z => "Z",
            Classification::Exchange => "Exchange",
            Classification::Order6(_) => "Order6",
            Classification::Unsupported => "Unsupported",
        }
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Classification::Order6(shape) => write!(f, "Order6({shape})"),
            other => f.write_str(other.name()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegralResult {
    /// `None` exactly when the classification is `Unsupported`.
    pub value: Option<BigRational>,
    pub classification: Classification,
    pub formula: String,
}

fn order6_table() -> &'static [(Diagram, Order6Shape)] {
    static TABLE: OnceLock<Vec<(Diagram, Order6Shape)>> = OnceLock::new();
    TABLE.get_or_init(|| {
        Order6Shape::ALL
            .into_iter()
            .map(|shape| (canonicalize(&shape.monomial()), shape))
            .collect()
    })
}

/// Sorts a canonical diagram into one of the solved families.
pub fn classify(d: &Diagram) -> Classification {
    if vanishes_by_invariance(d) {
        return Classification::Zero;
    }
    if d.left_len() <= 1 || d.right_len() <= 1 {
        return Classification::Fan;
    }
    if d.left_len() == 2 && d.right_len() == 2 {
        return if d.edge_count() == 4 {
            Classification::Exchange
        } else {
            Classification::Z
        };
    }
    if d.order() == 6 {
        if let Some((_, shape)) = order6_table().iter().find(|(shape_d, _)| shape_d == d) {
            return Classification::Order6(*shape);
        }
    }
    Classification::Unsupported
}

/// Exact value of `∫(dO) m` over `O(N)`.
pub fn evaluate(m: &Monomial, n: usize) -> Result<IntegralResult, EvalError> {
    evaluate_diagram(&canonicalize(m), n)
}

pub fn evaluate_diagram(d: &Diagram, n: usize) -> Result<IntegralResult, EvalError> {
    let required = required_dimension(d);
    if n < required {
        return Err(EvalError::DimensionTooSmall { required, n });
    }
    let classification = classify(d);
    let done = |value: BigRational, formula: &str| IntegralResult {
        value: Some(value),
        classification,
        formula: formula.to_string(),
    };
    let result = match classification {
        Classification::Zero => done(
            BigRational::zero(),
            "sign-flip invariance: odd order or odd dot degree",
        ),
        Classification::Fan if d.is_empty() => done(BigRational::one(), "normalization"),
        Classification::Fan => {
            let lines: Vec<u32> = d.edges().iter().map(|e| e.multiplicity).collect();
            if lines.len() == 1 {
                done(f1(lines[0], n)?, "one-vector closed form F1(2m)")
            } else {
                done(fan(&lines, n)?, "fan relation F_t")
            }
        }
        Classification::Z => {
            let (m1, m2, m3) = z_arguments(d);
            done(z_integral(m1, m2, m3, n)?, "Z recursion in m3 from F2 base")
        }
        Classification::Exchange => {
            let [r, s, t, u] = [
                d.multiplicity(0, 0),
                d.multiplicity(1, 0),
                d.multiplicity(1, 1),
                d.multiplicity(0, 1),
            ];
            done(
                x_integral(r, s, t, u, n)?,
                "exchange recursion down to Z/fan",
            )
        }
        Classification::Order6(shape) => done(
            order6_catalog(shape, n)?,
            &format!("order-6 catalog I({shape})"),
        ),
        Classification::Unsupported => IntegralResult {
            value: None,
            classification,
            formula: "no closed form or recursion for this diagram".into(),
        },
    };
    Ok(result)
}

/// `(m1, m2, m3)` for a 2+2 diagram with two or three edges, laid out as
/// `O11^m1 O12^m2 O22^m3`.
fn z_arguments(d: &Diagram) -> (u32, u32, u32) {
    let m = [
        [d.multiplicity(0, 0), d.multiplicity(0, 1)],
        [d.multiplicity(1, 0), d.multiplicity(1, 1)],
    ];
    let (zi, zj) = (0..2)
        .flat_map(|i| (0..2).map(move |j| (i, j)))
        .find(|&(i, j)| m[i][j] == 0)
        .expect("Z diagram has an empty slot");
    (m[zi][1 - zj], m[1 - zi][1 - zj], m[1 - zi][zj])
}

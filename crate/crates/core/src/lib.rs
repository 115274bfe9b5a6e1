//! Exact integration of monomials in the entries of Haar-distributed
//! orthogonal matrices.
//!
//! A monomial `O(i₁,j₁)…O(i_p,j_p)` is reduced to a canonical bipartite
//! diagram ([`diagram`]), sorted into a solved family and evaluated as an
//! exact rational in the dimension `N` ([`exact`]). The [`mc`] module gives
//! two independent cross-checks: Monte Carlo estimates over sampled Haar
//! matrices and exact integration over `O(2)`.
//!
//! ```
//! use orthohaar::{evaluate, parse_monomial};
//!
//! let m = parse_monomial("O(1,1) O(2,1) O(2,2) O(1,2)").unwrap();
//! let r = evaluate(&m, 3).unwrap();
//! assert_eq!(r.value.unwrap().to_string(), "-1/30");
//! ```

pub mod diagram;
pub mod exact;
pub mod mc;
pub mod monomial;
pub mod report;

pub use diagram::{canonicalize, required_dimension, vanishes_by_invariance, Diagram, Edge};
pub use exact::{
    classify, evaluate, evaluate_diagram, Classification, EvalError, IntegralResult, Order6Shape,
};
pub use mc::{mc_estimate, o2_exact, sample_haar, McConfig, McEstimate};
pub use monomial::{parse_monomial, Factor, Monomial, MonomialError};
pub use num_rational::BigRational;

//! Exchange integrals on the four-cycle,
//! `X(r,s,t,u) = ∫(dO) O₁₁^r O₂₁^s O₂₂^t O₁₂^u`.
//!
//! Rotating column 1 into a fresh column 3 and summing the fresh index out
//! gives a linear relation that lowers `r + s` by two in every term:
//!
//! ```text
//! D·X(r,s,t,u) = -2rs X(r-1,s-1,t+1,u+1)
//!              + r(r-1) [X(r-2,s,t,u) - X(r-2,s,t,u+2)]
//!              + s(s-1) [X(r,s-2,t,u) - X(r,s-2,t+2,u)]
//! D = (r+s)(N-2) + r(r-1) + 2rs + s(s-1)
//! ```
//!
//! Iteration stops once `r` or `s` reaches zero, where the cycle opens into a
//! Z-integral or a fan.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::combinatorics::int;
use super::fan::fan_or_one;
use super::zint::ZTable;
use super::EvalError;

pub(crate) struct XTable {
    n: usize,
    memo: HashMap<[u32; 4], BigRational>,
    z: ZTable,
}

/// Images of `(r,s,t,u)` under row swap, column swap and transposition.
fn orbit_key(x: [u32; 4]) -> [u32; 4] {
    let [r, s, t, u] = x;
    let mut orbit = vec![[r, s, t, u]];
    let mut k = 0;
    while k < orbit.len() {
        let [r, s, t, u] = orbit[k];
        for image in [[s, r, u, t], [u, t, s, r], [r, u, t, s]] {
            if !orbit.contains(&image) {
                orbit.push(image);
            }
        }
        k += 1;
    }
    orbit.into_iter().min().unwrap()
}

impl XTable {
    pub(crate) fn new(n: usize) -> Self {
        Self {
            n,
            memo: HashMap::new(),
            z: ZTable::new(n),
        }
    }

    pub(crate) fn get(&mut self, r: u32, s: u32, t: u32, u: u32) -> Result<BigRational, EvalError> {
        if (r + u) % 2 == 1 || (s + t) % 2 == 1 || (r + s) % 2 == 1 || (t + u) % 2 == 1 {
            return Ok(BigRational::zero());
        }
        if r == 0 || s == 0 || t == 0 || u == 0 {
            return self.degenerate(r, u, s, t);
        }
        let key = orbit_key([r, s, t, u]);
        if let Some(v) = self.memo.get(&key) {
            return Ok(v.clone());
        }

        let (ri, si, n) = (i64::from(r), i64::from(s), self.n as i64);
        let measure = r + s;
        let mut acc = BigRational::zero();
        let mut term = |table: &mut Self, coeff: i64, args: [u32; 4]| -> Result<(), EvalError> {
            debug_assert!(args[0] + args[1] < measure, "recursion must lower r + s");
            if coeff != 0 {
                let [r, s, t, u] = args;
                acc += int(coeff) * table.get(r, s, t, u)?;
            }
            Ok(())
        };
        term(self, -2 * ri * si, [r - 1, s - 1, t + 1, u + 1])?;
        if r >= 2 {
            term(self, ri * (ri - 1), [r - 2, s, t, u])?;
            term(self, -ri * (ri - 1), [r - 2, s, t, u + 2])?;
        }
        if s >= 2 {
            term(self, si * (si - 1), [r, s - 2, t, u])?;
            term(self, -si * (si - 1), [r, s - 2, t + 2, u])?;
        }
        let denominator = (ri + si) * (n - 2) + ri * (ri - 1) + 2 * ri * si + si * (si - 1);
        let value = acc / BigRational::from_integer(BigInt::from(denominator));
        self.memo.insert(key, value.clone());
        Ok(value)
    }

    /// 2x2 multiplicity pattern `[[a, b], [c, d]]` with at least one zero
    /// entry and all dot degrees even.
    fn degenerate(&mut self, a: u32, b: u32, c: u32, d: u32) -> Result<BigRational, EvalError> {
        let m = [[a, b], [c, d]];
        if a + b == 0 {
            return fan_or_one(&[c, d], self.n);
        }
        if c + d == 0 {
            return fan_or_one(&[a, b], self.n);
        }
        if a + c == 0 {
            return fan_or_one(&[b, d], self.n);
        }
        if b + d == 0 {
            return fan_or_one(&[a, c], self.n);
        }
        // either a three-edge path or two disjoint lines on a diagonal
        let (zi, zj) = (0..2)
            .flat_map(|i| (0..2).map(move |j| (i, j)))
            .find(|&(i, j)| m[i][j] == 0)
            .expect("degenerate pattern has a zero entry");
        let middle = m[1 - zi][1 - zj];
        let end1 = m[zi][1 - zj];
        let end2 = m[1 - zi][zj];
        self.z.get(end1, middle, end2)
    }
}

/// Exact `X(r,s,t,u)` at dimension `N >= 3`. Returns 0 when a dot has odd
/// degree.
pub fn x_integral(r: u32, s: u32, t: u32, u: u32, n: usize) -> Result<BigRational, EvalError> {
    if n < 3 {
        return Err(EvalError::DimensionTooSmall { required: 3, n });
    }
    XTable::new(n).get(r, s, t, u)
}

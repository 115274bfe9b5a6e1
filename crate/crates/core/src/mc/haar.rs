//! Haar-distributed orthogonal matrices from sign-corrected Householder QR.
//!
//! For `A` with i.i.d. standard normal entries and `A = QR`, the matrix
//! `Q · diag(sign R_ii)` is Haar on `O(N)`. Without the sign fix the law of
//! `Q` depends on the QR convention and is not invariant.
//!
//! Column `j` of `Q` depends only on the first `j + 1` columns of `A`, so
//! [`sample_haar_columns`] factors just the leading `k` columns. Draws are
//! taken column by column, which makes its output the leading block of
//! [`sample_haar`] for the same generator state.

use rand::Rng;
use rand_distr::StandardNormal;

/// Leading `cols` columns of a Haar orthogonal `n x n` matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct HaarSample {
    n: usize,
    cols: usize,
    data: Vec<f64>,
}

impl HaarSample {
    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// 0-based entry access.
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.cols + j]
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    /// `max |QᵀQ - I|` over the sampled columns.
    pub fn orthogonality_residual(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for a in 0..self.cols {
            for b in a..self.cols {
                let dot: f64 = (0..self.n).map(|i| self.get(i, a) * self.get(i, b)).sum();
                let target = if a == b { 1.0 } else { 0.0 };
                worst = worst.max((dot - target).abs());
            }
        }
        worst
    }

    /// `V · Q` for a row-major `n x n` matrix `V`.
    pub fn left_multiply(&self, v: &[f64]) -> HaarSample {
        let (n, k) = (self.n, self.cols);
        let mut data = vec![0.0; n * k];
        for i in 0..n {
            for l in 0..n {
                let vil = v[i * n + l];
                if vil != 0.0 {
                    for j in 0..k {
                        data[i * k + j] += vil * self.get(l, j);
                    }
                }
            }
        }
        HaarSample { n, cols: k, data }
    }
}

/// Full `n x n` Haar orthogonal matrix.
pub fn sample_haar<R: Rng + ?Sized>(n: usize, rng: &mut R) -> HaarSample {
    let q = sample_haar_columns(n, n, rng);
    debug_assert!(
        n > 64 || q.orthogonality_residual() <= 1e-12,
        "sampled matrix is not orthogonal"
    );
    q
}

/// First `cols` columns of a Haar orthogonal `n x n` matrix.
pub fn sample_haar_columns<R: Rng + ?Sized>(n: usize, cols: usize, rng: &mut R) -> HaarSample {
    assert!(n >= 1 && cols <= n, "need 1 <= N and cols <= N");
    // column-major working copy of the n x cols Gaussian block
    let mut a = vec![0.0f64; n * cols];
    for x in a.iter_mut() {
        *x = rng.sample(StandardNormal);
    }
    let col = |j: usize| j * n;

    let mut reflectors: Vec<Vec<f64>> = Vec::with_capacity(cols);
    let mut signs = vec![1.0f64; cols];
    for j in 0..cols {
        let x = &a[col(j) + j..col(j) + n];
        let norm = x.iter().map(|v| v * v).sum::<f64>().sqrt();
        let x0 = x[0];
        // alpha = -sign(x0)·|x| avoids cancellation in v = x - alpha·e1
        let alpha = if x0 >= 0.0 { -norm } else { norm };
        let mut v: Vec<f64> = x.to_vec();
        v[0] -= alpha;
        let vnorm2: f64 = v.iter().map(|t| t * t).sum();
        if vnorm2 > 0.0 {
            let scale = (2.0 / vnorm2).sqrt();
            v.iter_mut().for_each(|t| *t *= scale);
            for c in j..cols {
                let target = &mut a[col(c) + j..col(c) + n];
                let dot: f64 = v.iter().zip(target.iter()).map(|(p, q)| p * q).sum();
                target.iter_mut().zip(&v).for_each(|(t, p)| *t -= dot * p);
            }
        } else {
            v.iter_mut().for_each(|t| *t = 0.0);
        }
        // R_jj after the reflection
        signs[j] = if a[col(j) + j] < 0.0 { -1.0 } else { 1.0 };
        reflectors.push(v);
    }

    // Q[:, c] = H_0 H_1 ... H_{cols-1} e_c, then scaled by sign(R_cc)
    let mut data = vec![0.0f64; n * cols];
    let mut e = vec![0.0f64; n];
    for c in 0..cols {
        e.iter_mut().for_each(|t| *t = 0.0);
        e[c] = 1.0;
        for j in (0..cols.min(c + 1)).rev() {
            let v = &reflectors[j];
            let seg = &mut e[j..];
            let dot: f64 = v.iter().zip(seg.iter()).map(|(p, q)| p * q).sum();
            seg.iter_mut().zip(v).for_each(|(t, p)| *t -= dot * p);
        }
        for i in 0..n {
            data[i * cols + c] = e[i] * signs[c];
        }
    }
    let q = HaarSample { n, cols, data };
    debug_assert!(
        n > 64 || q.orthogonality_residual() <= 1e-12,
        "sampled columns are not orthonormal"
    );
    q
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn orthogonal_up_to_64() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for n in [1, 2, 3, 5, 8, 17, 32, 64] {
            for _ in 0..5 {
                let q = sample_haar(n, &mut rng);
                assert!(q.orthogonality_residual() <= 1e-12, "N={n}");
            }
        }
    }

    #[test]
    fn thin_sample_is_leading_block() {
        for n in 1..7 {
            for k in 1..=n {
                let full = sample_haar(n, &mut ChaCha8Rng::seed_from_u64(5));
                let thin = sample_haar_columns(n, k, &mut ChaCha8Rng::seed_from_u64(5));
                for i in 0..n {
                    for j in 0..k {
                        assert_eq!(thin.get(i, j), full.get(i, j));
                    }
                }
            }
        }
    }

    #[test]
    fn one_by_one_is_plus_or_minus_one() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let draws = 100_000;
        let mut plus = 0usize;
        for _ in 0..draws {
            let q = sample_haar(1, &mut rng).get(0, 0);
            assert!((q.abs() - 1.0).abs() <= 1e-12);
            if q > 0.0 {
                plus += 1;
            }
        }
        // binomial(1e5, 1/2): sigma = 158
        let dev = (plus as f64 - draws as f64 / 2.0).abs();
        assert!(dev <= 3.0 * 158.2, "plus count {plus}");
    }

    #[test]
    fn left_multiply_by_permutation() {
        let q = sample_haar(3, &mut ChaCha8Rng::seed_from_u64(1));
        let p = [0.0, 1.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 1.0];
        let pq = q.left_multiply(&p);
        assert_eq!(pq.get(0, 2), q.get(1, 2));
        assert_eq!(pq.get(2, 0), q.get(2, 0));
    }
}

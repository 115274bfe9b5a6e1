//! Sign-corrected QR sampling and a left-invariance check.

use orthohaar::mc::{estimate_observable, sample_haar, McConfig};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let q = sample_haar(4, &mut rng);
    println!("one draw from O(4):");
    for i in 0..4 {
        let row: Vec<String> = (0..4).map(|j| format!("{:+.4}", q.get(i, j))).collect();
        println!("  [{}]", row.join(" "));
    }
    println!("residual max|QᵀQ - I| = {:.2e}", q.orthogonality_residual());

    // cyclic shift of rows as the fixed orthogonal V
    let n = 3;
    let v = [0.0, 1.0, 0.0, 0.0, 0.0, 1.0, 1.0, 0.0, 0.0];
    let config = McConfig::new(400_000, 99);
    let observable = |q: &orthohaar::mc::HaarSample| q.get(0, 0).powi(2) * q.get(0, 1).powi(2);
    let plain = estimate_observable(n, config, observable).unwrap();
    let shifted = estimate_observable(n, config.with_workers(1), |q| {
        observable(&q.left_multiply(&v))
    })
    .unwrap();
    println!(
        "E[Q11² Q12²]    = {:.5} ± {:.5}",
        plain.mean, plain.std_error
    );
    println!(
        "E[(VQ)11² (VQ)12²] = {:.5} ± {:.5}",
        shifted.mean, shifted.std_error
    );
    println!("exact 1/(N(N+2)) = {:.5}", 1.0 / 15.0);
}

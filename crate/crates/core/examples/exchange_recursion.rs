//! Exchange integrals on the four-cycle, with a Monte Carlo cross-check.

use num_traits::ToPrimitive;
use orthohaar::exact::x_integral;
use orthohaar::mc::{mc_estimate_many, McConfig};
use orthohaar::Monomial;

fn main() {
    let n = 4;
    let cases = [
        [1, 1, 1, 1],
        [3, 1, 1, 1],
        [2, 2, 2, 2],
        [1, 1, 3, 3],
        [3, 3, 1, 1],
        [1, 3, 3, 1],
    ];
    let monomials: Vec<Monomial> = cases
        .iter()
        .map(|&[r, s, t, u]| Monomial::from_triples(&[(1, 1, r), (2, 1, s), (2, 2, t), (1, 2, u)]))
        .collect();
    let estimates = mc_estimate_many(&monomials, n, McConfig::new(1_000_000, 2024)).unwrap();
    println!("N = {n}, 10^6 Haar samples");
    for (&[r, s, t, u], est) in cases.iter().zip(&estimates) {
        let exact = x_integral(r, s, t, u, n).unwrap();
        let x = exact.to_f64().unwrap();
        println!(
            "  X({r},{s},{t},{u}) = {exact:>14} = {x:+.6e}   MC {:+.6e} ± {:.1e}  ({:.2}σ)",
            est.mean,
            est.std_error,
            est.sigma_distance(x)
        );
    }
}

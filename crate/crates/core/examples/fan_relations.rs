//! One-vector integrals: the single-line closed form and fan relations,
//! with the orthogonality sum rule that links them.

use orthohaar::exact::{f1, fan};
use orthohaar::BigRational;

fn main() {
    let n = 6;
    println!("single line at N = {n}");
    for m in 0..=5 {
        println!("  F1({:>2}) = {}", 2 * m, f1(2 * m, n).unwrap());
    }

    println!("fans at N = {n}");
    for lines in [
        vec![2, 2],
        vec![2, 4],
        vec![2, 2, 2],
        vec![4, 4, 2],
        vec![2, 2, 2, 2],
    ] {
        println!(
            "  F{}({:?}) = {}",
            lines.len(),
            lines,
            fan(&lines, n).unwrap()
        );
    }

    println!("sum rule (N-1)·F2(2m-2, 2) = F1(2m-2) - F1(2m)");
    for m in 2..=5u32 {
        let lhs =
            BigRational::from_integer((n as i64 - 1).into()) * fan(&[2 * m - 2, 2], n).unwrap();
        let rhs = f1(2 * m - 2, n).unwrap() - f1(2 * m, n).unwrap();
        println!("  m = {m}: {lhs} == {rhs}: {}", lhs == rhs);
    }
}

//! Z-integrals from the recursion in m3, checked against the Gamma-ratio
//! closed form for even and odd N.

use orthohaar::exact::{z_closed_form, z_integral};

fn main() {
    for n in [2, 3, 4, 7] {
        println!("N = {n}");
        for (m1, m2, m3) in [(2, 0, 2), (2, 2, 2), (4, 2, 2), (2, 4, 6), (6, 6, 6)] {
            let recursion = z_integral(m1, m2, m3, n).unwrap();
            let closed = z_closed_form(m1, m2, m3, n).unwrap();
            println!(
                "  Z({m1},{m2},{m3}) = {recursion}  closed form agrees: {}",
                recursion == closed
            );
        }
    }
    let big = z_integral(20, 20, 20, 100).unwrap();
    println!(
        "Z(20,20,20) at N = 100 has a {}-digit denominator",
        big.denom().to_string().len()
    );
}

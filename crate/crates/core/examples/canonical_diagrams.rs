//! Canonical diagrams: relabeling and transposition collapse to one form,
//! and odd dot degrees force the integral to vanish.

use orthohaar::{
    canonicalize, classify, parse_monomial, required_dimension, vanishes_by_invariance,
};

fn main() {
    let family = [
        "O(1,1) O(1,2)^3 O(2,1) O(2,2)",
        "O(7,3) O(7,9)^3 O(2,3) O(2,9)",
        "O(1,1)^3 O(2,1) O(1,2) O(2,2)",
        "O(2,1)^3 O(1,1) O(2,2) O(1,2)",
    ];
    for text in family {
        let d = canonicalize(&parse_monomial(text).unwrap());
        println!(
            "{text:<32} -> {:<32} {:?}",
            d.to_monomial().to_string(),
            classify(&d)
        );
    }

    for text in [
        "O(1,1)",
        "O(1,1)^2 O(1,2) O(2,2)",
        "O(1,1)^2 O(1,2)^2 O(1,3)^2",
    ] {
        let d = canonicalize(&parse_monomial(text).unwrap());
        println!(
            "{text:<28} vanishes={:<5} needs N>={}",
            vanishes_by_invariance(&d),
            required_dimension(&d)
        );
    }
}

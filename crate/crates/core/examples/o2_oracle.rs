//! Exact integrals over O(2) from trigonometric moments, compared with the
//! general evaluator where both apply.

use orthohaar::{evaluate, o2_exact, parse_monomial};

fn main() {
    for text in [
        "O(1,1)^2",
        "O(1,1)^4",
        "O(1,1)^2 O(1,2)^4",
        "O(1,1)^2 O(2,2)^2",
        "O(1,1)^2 O(1,2)^2 O(2,2)^2",
        "O(1,1) O(2,1) O(2,2) O(1,2)",
    ] {
        let m = parse_monomial(text).unwrap();
        let oracle = o2_exact(&m).unwrap();
        let evaluator = match evaluate(&m, 2) {
            Ok(r) => r.value.map_or("unsupported".to_string(), |v| v.to_string()),
            Err(e) => format!("({e})"),
        };
        println!("{text:<30} O(2) oracle {oracle:<8} evaluator {evaluator}");
    }
}

//! Evaluate a monomial given on the command line.
//!
//! cargo run --example evaluate_monomial -- "O(1,1)^2 O(1,2)^2 O(2,2)^2" 4

use orthohaar::{evaluate, mc_estimate, parse_monomial};

fn main() {
    let mut args = std::env::args().skip(1);
    let text = args
        .next()
        .unwrap_or_else(|| "O(1,1)^2 O(1,2)^2 O(2,2)^2".into());
    let n: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(4);

    let m = match parse_monomial(&text) {
        Ok(m) => m,
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(1);
        }
    };
    match evaluate(&m, n) {
        Ok(r) => {
            println!("monomial       {m}");
            println!("N              {n}");
            println!("classification {}", r.classification);
            println!("formula        {}", r.formula);
            match r.value {
                Some(v) => println!("value          {v}"),
                None => println!("value          (no exact evaluator)"),
            }
            let est = mc_estimate(&m, n, 200_000, 7).unwrap();
            println!("MC             {:.6} ± {:.6}", est.mean, est.std_error);
        }
        Err(e) => eprintln!("{e}"),
    }
}

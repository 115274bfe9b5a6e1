//! The order-6 catalog: closed forms next to the general evaluator.

use orthohaar::evaluate;
use orthohaar::exact::{order6_catalog, Order6Shape};

fn main() {
    for n in [3, 4, 5, 8] {
        println!("N = {n}");
        for shape in Order6Shape::ALL {
            let closed = order6_catalog(shape, n).unwrap();
            let r = evaluate(&shape.monomial(), n).unwrap();
            let same = r.value.as_ref() == Some(&closed);
            println!(
                "  I({shape}) = {:<24} via {:<12} agrees: {same}",
                closed.to_string(),
                r.classification.to_string()
            );
        }
    }
}

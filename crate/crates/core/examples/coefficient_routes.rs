//! Compute one coefficient by every route and show that they agree.
//!
//!     cargo run --example coefficient_routes -- 3 12 5

use quasi_pascal::quasi::QuasiQuery;
use quasi_pascal::report::Method;

fn main() {
    let mut args = std::env::args()
        .skip(1)
        .map(|a| a.parse::<i64>().expect("integer argument"));
    let s = args.next().unwrap_or(2) as u32;
    let n = args.next().unwrap_or(8) as u32;
    let k = args.next().unwrap_or(4);
    let q = QuasiQuery::new(s, n, k);

    println!("C_[{s}]({n}, {k})");
    for method in Method::ALL {
        match method.evaluate(q) {
            Ok(v) => println!("  {:<12} {v}", method.name()),
            Err(e) => println!("  {:<12} skipped: {e}", method.name()),
        }
    }
}

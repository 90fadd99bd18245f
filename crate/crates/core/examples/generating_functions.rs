//! Expand closed-form generating functions as truncated series and compare
//! them against the triangle.

use quasi_pascal::rays::Direction;
use quasi_pascal::series_suite::{check_binomial_gf, check_quasi_gf, check_ray_gf, DEFAULT_ORDER};

fn main() -> quasi_pascal::Result<()> {
    let reports = [
        check_binomial_gf(4, DEFAULT_ORDER)?,
        check_quasi_gf(3, 5, DEFAULT_ORDER)?,
        check_ray_gf(2, Direction::new(3, 1, -2)?, DEFAULT_ORDER)?,
    ];
    for r in &reports {
        println!(
            "{:<40} order {} {}",
            r.name,
            r.order,
            if r.passed() { "ok" } else { "MISMATCH" }
        );
    }
    println!("{}", serde_json::to_string_pretty(&reports[1]).unwrap());
    Ok(())
}

//! q-deformed triangles: every entry is a polynomial in q that evaluates to
//! the ordinary entry at q = 1.

use quasi_pascal::q_analogue::{
    q_binomial, q_quasi_row, q_sbonacci, verify_q_sbonacci_recurrences, QBinomialQuery, QRoute,
};

fn main() {
    println!("Gaussian binomials [5 k]:");
    for k in 0..=5 {
        println!("  k = {k}: {}", q_binomial(QBinomialQuery { n: 5, k }));
    }

    println!("\nq-quasi triangle, s = 2:");
    for n in 0..5 {
        let row: Vec<String> = q_quasi_row(2, n, QRoute::RecurrenceA)
            .iter()
            .map(ToString::to_string)
            .collect();
        println!("  {}", row.join(" | "));
    }

    println!("\nq-Tribonacci polynomials, x-coefficients:");
    for (n, t) in q_sbonacci(2, 8, 4).unwrap().iter().enumerate() {
        let parts: Vec<String> = t
            .coeffs()
            .iter()
            .enumerate()
            .map(|(m, c)| format!("({c}) x^{m}"))
            .collect();
        println!(
            "  T_{n} = {}",
            if parts.is_empty() {
                "0".into()
            } else {
                parts.join(" + ")
            }
        );
    }
    println!("recurrences hold: {}", verify_q_sbonacci_recurrences(2, 12));
}

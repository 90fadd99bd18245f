//! Rows of the s-Pascal triangle, the coefficients of (1 + x + ... + x^s)^n,
//! plus a floating-point check through roots of unity.

use quasi_pascal::bisnomial::{
    bisnomial_by_demoivre, bisnomial_by_diagonal, bisnomial_row, verify_root_of_unity_bisnomial,
    BisnomialQuery, DEFAULT_TOLERANCE,
};

fn main() {
    let s = 3;
    for n in 0..6 {
        let row: Vec<String> = bisnomial_row(s, n)
            .iter()
            .map(ToString::to_string)
            .collect();
        println!("{}", row.join(" "));
    }

    let q = BisnomialQuery::new(3, 5, 7);
    println!(
        "\nC_3(5, 7): diagonal {} / de Moivre {}",
        bisnomial_by_diagonal(q),
        bisnomial_by_demoivre(q)
    );
    println!(
        "root-of-unity check: {}",
        verify_root_of_unity_bisnomial(q, DEFAULT_TOLERANCE).unwrap()
    );
}

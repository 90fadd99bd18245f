//! Generalized Delannoy arrays. With unit weights the anti-diagonals are the
//! rows of the quasi triangle.

use quasi_pascal::exact::ExactInt;
use quasi_pascal::quasi::{delannoy_table, verify_delannoy_correspondence, DelannoyParams};

fn print_table(table: &[Vec<ExactInt>]) {
    let width = table
        .iter()
        .flatten()
        .map(|v| v.to_string().len())
        .max()
        .unwrap_or(1);
    for row in table {
        let cells: Vec<String> = row.iter().map(|v| format!("{v:>width$}")).collect();
        println!("{}", cells.join(" "));
    }
}

fn main() -> quasi_pascal::Result<()> {
    print_table(&delannoy_table(&DelannoyParams::unit(3)?, 5, 7));
    println!(
        "matches the s = 3 triangle: {}",
        verify_delannoy_correspondence(3, 12)?
    );

    let weighted = DelannoyParams::new(ExactInt::from(2), vec![1.into(), 3.into()])?;
    println!("\na = 2, weights 1, 3:");
    print_table(&delannoy_table(&weighted, 3, 5));
    Ok(())
}

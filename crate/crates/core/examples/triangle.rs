//! Print the first rows of a quasi s-triangle.
//!
//!     cargo run --example triangle -- 3 10

use quasi_pascal::quasi::triangle_rows;

fn main() {
    let mut args = std::env::args()
        .skip(1)
        .map(|a| a.parse::<u32>().expect("integer argument"));
    let s = args.next().unwrap_or(2);
    let rows = args.next().unwrap_or(10);

    let table = triangle_rows(s, rows);
    let width = table
        .rows()
        .iter()
        .flatten()
        .map(|v| v.to_string().len())
        .max()
        .unwrap_or(1);
    for (n, row) in table.rows().iter().enumerate() {
        let cells: Vec<String> = row.iter().map(|v| format!("{v:>width$}")).collect();
        println!("{n:>3} | {}", cells.join(" "));
    }
    assert!(table.is_consistent());
}

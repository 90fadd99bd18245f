//! Compare published triangles against recomputation and list typos.

use quasi_pascal::tables::PRINTED_TABLES;

fn main() {
    for table in PRINTED_TABLES {
        let errata = table.errata();
        println!(
            "{} ({} entries): {} discrepancies",
            table.name,
            table.entry_count(),
            errata.len()
        );
        for e in errata {
            println!(
                "  row {} col {}: printed {}, recomputed {}",
                e.row, e.col, e.printed, e.recomputed
            );
        }
    }
}

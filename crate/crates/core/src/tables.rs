//! Published triangles, stored exactly as printed (typos included), and a
//! comparator that recomputes every printed entry and lists disagreements.

use serde::Serialize;

use crate::bisnomial::bisnomial_row;
use crate::exact::ExactInt;
use crate::quasi::quasi_row;

/// Which triangle a printed table claims to show.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "triangle", rename_all = "snake_case")]
pub enum TableKind {
    Quasi { s: u32 },
    Bisnomial { s: u32 },
}

#[derive(Clone, Copy, Debug)]
pub struct PrintedTable {
    pub name: &'static str,
    pub kind: TableKind,
    /// Rows from `n = 0`; a row may stop early if the printed copy was cut off.
    pub rows: &'static [&'static [u64]],
}

/// A printed entry that disagrees with the recomputed value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Erratum {
    pub table: &'static str,
    pub row: usize,
    pub col: usize,
    pub printed: String,
    pub recomputed: String,
}

pub const TRIBONACCI_TRIANGLE: PrintedTable = PrintedTable {
    name: "tribonacci",
    kind: TableKind::Quasi { s: 2 },
    rows: &[
        &[1],
        &[1, 1],
        &[1, 3, 1],
        &[1, 5, 5, 1],
        &[1, 7, 13, 7, 1],
        &[1, 9, 25, 25, 9, 1],
        &[1, 11, 41, 63, 41, 11, 1],
        &[1, 13, 61, 129, 129, 61, 13, 1],
        &[1, 15, 85, 231, 321, 231, 85, 15, 1],
        &[1, 17, 113, 377, 681, 681, 377, 113, 17, 1],
    ],
};

pub const QUADRABONACCI_TRIANGLE: PrintedTable = PrintedTable {
    name: "quadrabonacci",
    kind: TableKind::Quasi { s: 3 },
    rows: &[
        &[1],
        &[1, 1],
        &[1, 3, 1],
        &[1, 6, 5, 1],
        &[1, 9, 15, 7, 1],
        &[1, 12, 33, 28, 9, 1],
        &[1, 15, 60, 81, 45, 11, 1],
        &[1, 18, 96, 189, 66, 33, 13, 1],
        &[1, 21, 141, 378, 459, 281, 91, 15, 1],
        &[1, 24, 195, 675, 1107, 946, 449, 120, 17, 1],
    ],
};

pub const BIQUADRANOMIAL_TRIANGLE: PrintedTable = PrintedTable {
    name: "biquadranomial",
    kind: TableKind::Bisnomial { s: 3 },
    rows: &[
        &[1],
        &[1, 1, 1, 1],
        &[1, 2, 3, 4, 3, 2, 1],
        &[1, 3, 6, 10, 12, 12, 10, 6, 3, 1],
        &[1, 4, 10, 20, 31, 40, 44, 40, 31, 20, 10, 4, 1],
        &[1, 5, 15, 35, 65, 101, 135, 155, 155, 135, 101, 65, 35, 15],
    ],
};

pub const PRINTED_TABLES: [PrintedTable; 3] = [
    TRIBONACCI_TRIANGLE,
    QUADRABONACCI_TRIANGLE,
    BIQUADRANOMIAL_TRIANGLE,
];

impl PrintedTable {
    pub fn recomputed_row(&self, n: usize) -> Vec<ExactInt> {
        match self.kind {
            TableKind::Quasi { s } => quasi_row(s, n as u32),
            TableKind::Bisnomial { s } => bisnomial_row(s, n as u32),
        }
    }

    pub fn entry_count(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    /// Every printed entry that differs from the recomputation. A printed
    /// entry past the end of the true row also counts.
    pub fn errata(&self) -> Vec<Erratum> {
        let mut out = Vec::new();
        for (n, printed_row) in self.rows.iter().enumerate() {
            let row = self.recomputed_row(n);
            for (k, &printed) in printed_row.iter().enumerate() {
                let recomputed = row.get(k).cloned().unwrap_or_default();
                if recomputed != ExactInt::from(printed) {
                    out.push(Erratum {
                        table: self.name,
                        row: n,
                        col: k,
                        printed: printed.to_string(),
                        recomputed: recomputed.to_string(),
                    });
                }
            }
        }
        out
    }
}

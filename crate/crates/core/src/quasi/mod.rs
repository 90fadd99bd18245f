//! Quasi-bi^s-nomial coefficients `C_[s](n, k)`: the number of lattice paths
//! from `(0,0)` to `(n,k)` using the steps `(1,0), (1,1), (2,1), ..., (s,1)`.
//!
//! Routes:
//! - [`quasi_by_lattice_oracle`]: brute-force path enumeration (test oracle).
//! - [`quasi_by_recurrence`]: memoized last-step recurrence, the production path.
//! - [`quasi_by_explicit_binomial`]: nested sum of chained binomials.
//! - [`quasi_by_explicit_multinomial`]: sum over compositions with multinomials.
//! - [`quasi_by_spascal_link`]: weighted sum over an s-Pascal (bi^(s-1)-nomial) row.
//! - [`quasi_by_demoivre_dual`]: alternating two-binomial sum.
//!
//! Identity checks live in [`verify_root_of_unity_dual`] and
//! [`verify_nested_rational`]; the Delannoy correspondence in [`delannoy`].

pub mod delannoy;
mod lattice;
mod nested;

use std::collections::HashMap;
use std::sync::{LazyLock, RwLock};

use num_traits::Zero;

use crate::bisnomial::bisnomial_row;
use crate::exact::{int_binomial, multinomial, ExactInt};

pub use delannoy::{delannoy_table, verify_delannoy_correspondence, DelannoyParams};
pub use lattice::{quasi_by_lattice_oracle, StepSet, LATTICE_MAX_N};
pub use nested::{
    quasi_by_demoivre_dual, verify_nested_rational, verify_root_of_unity_dual,
    ROOT_OF_UNITY_DUAL_MAX_N,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct QuasiQuery {
    pub s: u32,
    pub n: u32,
    pub k: i64,
}

impl QuasiQuery {
    /// Panics if `s == 0`.
    pub fn new(s: u32, n: u32, k: i64) -> Self {
        assert!(s >= 1, "quasi triangle needs s >= 1");
        Self { s, n, k }
    }

    pub(crate) fn in_range(&self) -> bool {
        (0..=i64::from(self.n)).contains(&self.k)
    }
}

type RowTable = Vec<Vec<ExactInt>>;

// rows of each quasi triangle, keyed by s, grown on demand
static ROWS: LazyLock<RwLock<HashMap<u32, RowTable>>> = LazyLock::new(Default::default);

/// Row `n` (entries `k = 0..=n`) of the quasi s-triangle.
pub fn quasi_row(s: u32, n: u32) -> Vec<ExactInt> {
    assert!(s >= 1, "quasi triangle needs s >= 1");
    let n = n as usize;
    if let Some(rows) = ROWS.read().unwrap().get(&s) {
        if let Some(row) = rows.get(n) {
            return row.clone();
        }
    }
    let mut cache = ROWS.write().unwrap();
    let rows = cache
        .entry(s)
        .or_insert_with(|| vec![vec![ExactInt::from(1)]]);
    while rows.len() <= n {
        let m = rows.len();
        let entry =
            |rows: &RowTable, r: usize, k: usize| rows[r].get(k).cloned().unwrap_or_default();
        let row: Vec<ExactInt> = (0..=m)
            .map(|k| {
                let mut v = entry(rows, m - 1, k);
                if k >= 1 {
                    for j in 1..=(s as usize).min(m) {
                        v += entry(rows, m - j, k - 1);
                    }
                }
                v
            })
            .collect();
        rows.push(row);
    }
    rows[n].clone()
}

/// `C(n,k) = C(n-1,k) + sum_{j=1..s} C(n-j,k-1)` with `C(0,0) = 1`.
pub fn quasi_by_recurrence(q: QuasiQuery) -> ExactInt {
    if !q.in_range() {
        return ExactInt::zero();
    }
    quasi_row(q.s, q.n).swap_remove(q.k as usize)
}

/// `sum C(k,j_1) C(j_1,j_2) ... C(j_{s-2},j_{s-1}) C(n - sum j, k)` over
/// `k >= j_1 >= ... >= j_{s-1} >= 0`.
pub fn quasi_by_explicit_binomial(q: QuasiQuery) -> ExactInt {
    if !q.in_range() {
        return ExactInt::zero();
    }
    fn go(prev: i64, used: i64, depth: u32, n: i64, k: i64) -> ExactInt {
        if depth == 0 {
            return int_binomial(n - used, k);
        }
        let mut acc = ExactInt::zero();
        for j in 0..=prev {
            // deeper indices only grow the sum, so the final binomial is zero from here on
            if n - used - j < k {
                break;
            }
            acc += int_binomial(prev, j) * go(j, used + j, depth - 1, n, k);
        }
        acc
    }
    go(q.k, 0, q.s - 1, i64::from(q.n), q.k)
}

/// `sum multinomial(k; k_1..k_s) C(n + k - sum i k_i, k)` over compositions
/// `k_1 + ... + k_s = k`.
pub fn quasi_by_explicit_multinomial(q: QuasiQuery) -> ExactInt {
    if !q.in_range() {
        return ExactInt::zero();
    }
    struct Walk {
        n: i64,
        k: i64,
        s: usize,
        parts: Vec<i64>,
        acc: ExactInt,
    }

    impl Walk {
        // weight = sum i k_i over the parts chosen so far; it never decreases
        fn go(&mut self, left: i64, weight: i64) {
            if self.n + self.k - weight < self.k {
                return;
            }
            let slot = self.parts.len();
            if slot == self.s {
                if left == 0 {
                    self.acc += multinomial(self.k, &self.parts)
                        * int_binomial(self.n + self.k - weight, self.k);
                }
                return;
            }
            let first = if slot + 1 == self.s { left } else { 0 };
            for part in first..=left {
                self.parts.push(part);
                self.go(left - part, weight + (slot as i64 + 1) * part);
                self.parts.pop();
            }
        }
    }

    let mut walk = Walk {
        n: i64::from(q.n),
        k: q.k,
        s: q.s as usize,
        parts: Vec::with_capacity(q.s as usize),
        acc: ExactInt::zero(),
    };
    walk.go(q.k, 0);
    walk.acc
}

/// `sum_i C(n-i, k) C_{s-1}(k, i)` against row `k` of the s-Pascal triangle
/// of order `s - 1`. For `s = 2` this is Barry's relation for the Tribonacci
/// triangle.
pub fn quasi_by_spascal_link(q: QuasiQuery) -> ExactInt {
    if !q.in_range() {
        return ExactInt::zero();
    }
    let (n, k) = (i64::from(q.n), q.k);
    bisnomial_row(q.s - 1, k as u32)
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| int_binomial(n - i as i64, k) * c)
        .sum()
}

/// Rows `0..count` of a quasi triangle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangleTable {
    s: u32,
    rows: Vec<Vec<ExactInt>>,
}

impl TriangleTable {
    pub fn s(&self) -> u32 {
        self.s
    }

    pub fn rows(&self) -> &[Vec<ExactInt>] {
        &self.rows
    }

    pub fn get(&self, n: usize, k: usize) -> Option<&ExactInt> {
        self.rows.get(n)?.get(k)
    }

    /// Checks row lengths and the last-step recurrence against earlier rows.
    pub fn is_consistent(&self) -> bool {
        let at = |n: i64, k: i64| -> ExactInt {
            if n < 0 || k < 0 {
                return ExactInt::zero();
            }
            self.get(n as usize, k as usize)
                .cloned()
                .unwrap_or_default()
        };
        self.rows.iter().enumerate().all(|(n, row)| {
            let n = n as i64;
            row.len() == n as usize + 1
                && row.iter().enumerate().all(|(k, v)| {
                    let k = k as i64;
                    if n == 0 {
                        return *v == ExactInt::from(1);
                    }
                    let mut want = at(n - 1, k);
                    for j in 1..=i64::from(self.s) {
                        want += at(n - j, k - 1);
                    }
                    *v == want
                })
        })
    }
}

/// Rows `0..count` via the recurrence.
pub fn triangle_rows(s: u32, count: u32) -> TriangleTable {
    assert!(count >= 1, "need at least one row");
    TriangleTable {
        s,
        rows: (0..count).map(|n| quasi_row(s, n)).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(v: i64) -> ExactInt {
        ExactInt::from(v)
    }

    fn q(s: u32, n: u32, k: i64) -> QuasiQuery {
        QuasiQuery::new(s, n, k)
    }

    #[test]
    fn recurrence_examples() {
        assert_eq!(quasi_by_recurrence(q(2, 7, 3)), int(129));
        assert_eq!(quasi_by_recurrence(q(3, 6, 3)), int(81));
        assert_eq!(quasi_by_recurrence(q(1, 5, 2)), int(10));
        assert_eq!(quasi_by_recurrence(q(2, 9, 4)), int(681));
        assert_eq!(quasi_by_recurrence(q(2, 3, 4)), int(0));
        assert_eq!(quasi_by_recurrence(q(2, 3, -1)), int(0));
    }

    #[test]
    fn explicit_binomial_examples() {
        assert_eq!(quasi_by_explicit_binomial(q(2, 5, 2)), int(25));
        assert_eq!(quasi_by_explicit_binomial(q(3, 4, 2)), int(15));
        assert_eq!(quasi_by_explicit_binomial(q(2, 3, 3)), int(1));
    }

    #[test]
    fn explicit_multinomial_examples() {
        assert_eq!(quasi_by_explicit_multinomial(q(2, 6, 3)), int(63));
        assert_eq!(quasi_by_explicit_multinomial(q(3, 5, 2)), int(33));
        assert_eq!(quasi_by_explicit_multinomial(q(4, 2, 1)), int(3));
        assert_eq!(quasi_by_explicit_multinomial(q(3, 4, 0)), int(1));
    }

    #[test]
    fn spascal_link_examples() {
        assert_eq!(quasi_by_spascal_link(q(2, 4, 2)), int(13));
        assert_eq!(quasi_by_spascal_link(q(3, 4, 3)), int(7));
        assert_eq!(quasi_by_spascal_link(q(1, 7, 4)), int(35));
    }

    #[test]
    fn routes_agree_with_oracle() {
        for s in 1..=4 {
            for n in 0..=10 {
                for k in 0..=i64::from(n) {
                    let query = q(s, n, k);
                    let want = quasi_by_lattice_oracle(query).unwrap();
                    assert_eq!(quasi_by_recurrence(query), want, "{query:?}");
                    assert_eq!(quasi_by_explicit_binomial(query), want, "{query:?}");
                    assert_eq!(quasi_by_explicit_multinomial(query), want, "{query:?}");
                    assert_eq!(quasi_by_spascal_link(query), want, "{query:?}");
                    assert_eq!(quasi_by_demoivre_dual(query), want, "{query:?}");
                }
            }
        }
    }

    #[test]
    fn s_one_is_pascal() {
        for n in 0..=20u32 {
            for k in 0..=i64::from(n) {
                assert_eq!(
                    quasi_by_recurrence(q(1, n, k)),
                    int_binomial(i64::from(n), k)
                );
            }
        }
    }

    #[test]
    fn s_two_is_symmetric() {
        for n in 0..=15u32 {
            let row = quasi_row(2, n);
            let rev: Vec<_> = row.iter().rev().cloned().collect();
            assert_eq!(row, rev, "row {n}");
        }
    }

    #[test]
    fn s_three_is_not_symmetric() {
        assert_eq!(quasi_by_recurrence(q(3, 4, 1)), int(9));
        assert_eq!(quasi_by_recurrence(q(3, 4, 3)), int(7));
    }

    #[test]
    fn triangle_rows_examples() {
        let t = triangle_rows(2, 5);
        assert_eq!(
            t.rows().last().unwrap(),
            &[1, 7, 13, 7, 1].map(int).to_vec()
        );
        let t = triangle_rows(3, 5);
        assert_eq!(
            t.rows().last().unwrap(),
            &[1, 9, 15, 7, 1].map(int).to_vec()
        );
        assert_eq!(triangle_rows(4, 1).rows(), &[vec![int(1)]]);
        for s in 1..=4 {
            assert!(triangle_rows(s, 14).is_consistent());
        }
    }

    #[test]
    fn tampered_table_is_inconsistent() {
        let mut t = triangle_rows(3, 8);
        t.rows[7][4] = int(66);
        assert!(!t.is_consistent());
    }

    #[test]
    fn concurrent_readers_see_identical_rows() {
        let handles: Vec<_> = (0..8)
            .map(|i| std::thread::spawn(move || quasi_row(4, 30 + (i % 3))))
            .collect();
        let rows: Vec<_> = handles.into_iter().map(|h| h.join().unwrap()).collect();
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row, &quasi_row(4, 30 + (i as u32 % 3)));
        }
    }
}

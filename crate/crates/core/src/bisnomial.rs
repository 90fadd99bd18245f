//! Bi^s-nomial coefficients: the coefficient of `x^k` in `(1 + x + ... + x^s)^n`.
//!
//! Five routes compute the same number. [`bisnomial_by_expansion`] expands the
//! defining polynomial and is the reference every other route is tested
//! against. `s = 0` is accepted everywhere and gives the trivial triangle
//! `[k == 0]`, which the s-Pascal link of the quasi triangle needs at `s = 1`.

use std::collections::HashMap;
use std::f64::consts::PI;
use std::sync::{LazyLock, RwLock};

use num_traits::{ToPrimitive, Zero};

use crate::error::{precondition, Result};
use crate::exact::{int_binomial, sign, CPoint, ExactInt};

/// Largest `s * n` accepted by [`verify_root_of_unity_bisnomial`].
pub const ROOT_OF_UNITY_MAX_WEIGHT: u32 = 30;

/// Default tolerance for the complex root-of-unity checks.
pub const DEFAULT_TOLERANCE: f64 = 1e-6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BisnomialQuery {
    pub s: u32,
    pub n: u32,
    pub k: i64,
}

impl BisnomialQuery {
    pub fn new(s: u32, n: u32, k: i64) -> Self {
        Self { s, n, k }
    }

    fn in_range(&self) -> bool {
        self.k >= 0 && self.k <= i64::from(self.s) * i64::from(self.n)
    }
}

/// Full row `n`, i.e. all coefficients of `(1 + x + ... + x^s)^n`.
pub fn bisnomial_row_by_expansion(s: u32, n: u32) -> Vec<ExactInt> {
    let s = s as usize;
    let mut row = vec![ExactInt::from(1)];
    for _ in 0..n {
        let mut next = vec![ExactInt::zero(); row.len() + s];
        for (i, c) in row.iter().enumerate() {
            for slot in &mut next[i..=i + s] {
                *slot += c;
            }
        }
        row = next;
    }
    row
}

pub fn bisnomial_by_expansion(q: BisnomialQuery) -> ExactInt {
    if !q.in_range() {
        return ExactInt::zero();
    }
    bisnomial_row_by_expansion(q.s, q.n).swap_remove(q.k as usize)
}

/// Nested sum of chained binomials over `j_1 >= j_2 >= ... >= j_s`,
/// `j_1 + ... + j_s = k`.
pub fn bisnomial_by_nested_sum(q: BisnomialQuery) -> ExactInt {
    if !q.in_range() {
        return ExactInt::zero();
    }
    if q.s == 0 {
        return ExactInt::from(1);
    }
    fn go(prev: i64, left: i64, depth: u32) -> ExactInt {
        if depth == 1 {
            // the last index is forced
            return int_binomial(prev, left);
        }
        let mut acc = ExactInt::zero();
        for j in 0..=prev.min(left) {
            let head = int_binomial(prev, j);
            if head.is_zero() {
                continue;
            }
            let tail = go(j, left - j, depth - 1);
            if !tail.is_zero() {
                acc += head * tail;
            }
        }
        acc
    }
    go(i64::from(q.n), q.k, q.s)
}

type RowTable = Vec<Vec<ExactInt>>;

static LONGITUDINAL_ROWS: LazyLock<RwLock<HashMap<u32, RowTable>>> =
    LazyLock::new(Default::default);

/// Row `n` of the s-Pascal triangle from the cached longitudinal table.
pub fn bisnomial_row(s: u32, n: u32) -> Vec<ExactInt> {
    let n = n as usize;
    if let Some(rows) = LONGITUDINAL_ROWS.read().unwrap().get(&s) {
        if let Some(row) = rows.get(n) {
            return row.clone();
        }
    }
    let mut cache = LONGITUDINAL_ROWS.write().unwrap();
    let rows = cache
        .entry(s)
        .or_insert_with(|| vec![vec![ExactInt::from(1)]]);
    while rows.len() <= n {
        let prev = rows.last().unwrap();
        let width = prev.len() + s as usize;
        let next: Vec<ExactInt> = (0..width)
            .map(|k| {
                let lo = k.saturating_sub(s as usize);
                let hi = k.min(prev.len() - 1);
                prev[lo..=hi].iter().sum()
            })
            .collect();
        rows.push(next);
    }
    rows[n].clone()
}

/// Row-by-row dynamic program on `C_s(n, k) = sum_{j=0..s} C_s(n-1, k-j)`.
pub fn bisnomial_by_longitudinal(q: BisnomialQuery) -> ExactInt {
    if !q.in_range() {
        return ExactInt::zero();
    }
    bisnomial_row(q.s, q.n).swap_remove(q.k as usize)
}

/// `C_s(n, k) = sum_j C(n, j) C_{s-1}(j, k-j)`, recursing on `s` down to the
/// plain binomial.
pub fn bisnomial_by_diagonal(q: BisnomialQuery) -> ExactInt {
    fn go(s: u32, n: i64, k: i64) -> ExactInt {
        if k < 0 || n < 0 || k > i64::from(s) * n {
            return ExactInt::zero();
        }
        match s {
            0 => ExactInt::from(u8::from(k == 0)),
            1 => int_binomial(n, k),
            _ => {
                let mut acc = ExactInt::zero();
                for j in 0..=n.min(k) {
                    let inner = go(s - 1, j, k - j);
                    if !inner.is_zero() {
                        acc += int_binomial(n, j) * inner;
                    }
                }
                acc
            }
        }
    }
    go(q.s, i64::from(q.n), q.k)
}

/// Inclusion-exclusion `sum_j (-1)^j C(n, j) C(k - j(s+1) + n - 1, n - 1)`.
pub fn bisnomial_by_demoivre(q: BisnomialQuery) -> ExactInt {
    if !q.in_range() {
        return ExactInt::zero();
    }
    let (s, n, k) = (i64::from(q.s), i64::from(q.n), q.k);
    if n == 0 {
        // the closed form needs C(k - 1, -1) = [k == 0], outside the binomial convention
        return ExactInt::from(1);
    }
    // the second binomial vanishes once k - j(s+1) < 0
    let last = n.min((k + n - 1) / (s + 1));
    (0..=last)
        .map(|j| sign(j) * int_binomial(n, j) * int_binomial(k - j * (s + 1) + n - 1, n - 1))
        .sum()
}

/// Every composition of `total` into `parts` parts, each in `0..=cap`.
pub(crate) fn for_each_bounded_composition(
    total: i64,
    parts: usize,
    cap: i64,
    mut visit: impl FnMut(&[i64]),
) {
    fn go(left: i64, slots: usize, cap: i64, buf: &mut Vec<i64>, visit: &mut dyn FnMut(&[i64])) {
        if slots == 1 {
            if (0..=cap).contains(&left) {
                buf.push(left);
                visit(buf);
                buf.pop();
            }
            return;
        }
        for j in 0..=left.min(cap) {
            // remaining slots must be able to absorb the rest
            if left - j > cap * (slots as i64 - 1) {
                continue;
            }
            buf.push(j);
            go(left - j, slots - 1, cap, buf, visit);
            buf.pop();
        }
    }
    if parts == 0 {
        if total == 0 {
            visit(&[]);
        }
        return;
    }
    if total < 0 {
        return;
    }
    go(
        total,
        parts,
        cap,
        &mut Vec::with_capacity(parts),
        &mut visit,
    );
}

/// Evaluates `(-1)^k sum_{j_1+...+j_s=k} prod C(n, j_r) a^(-sum r j_r)` with
/// `a = exp(2 i pi / (s+1))` in double precision and compares it with the
/// expansion value.
pub fn verify_root_of_unity_bisnomial(q: BisnomialQuery, tolerance: f64) -> Result<bool> {
    precondition(q.s >= 1, || "root-of-unity relation needs s >= 1".into())?;
    precondition(q.s * q.n <= ROOT_OF_UNITY_MAX_WEIGHT, || {
        format!("s*n = {} exceeds {ROOT_OF_UNITY_MAX_WEIGHT}", q.s * q.n)
    })?;
    let exact = bisnomial_by_expansion(q).to_f64().unwrap();
    let (s, n) = (q.s as usize, i64::from(q.n));
    let step = -2.0 * PI / (s as f64 + 1.0);
    let binoms: Vec<f64> = (0..=n)
        .map(|j| int_binomial(n, j).to_f64().unwrap())
        .collect();
    let mut acc = CPoint::new(0.0, 0.0);
    for_each_bounded_composition(q.k, s, n, |js| {
        let weight: f64 = js.iter().map(|&j| binoms[j as usize]).product();
        let power: i64 = js
            .iter()
            .enumerate()
            .map(|(r, &j)| (r as i64 + 1) * j)
            .sum();
        acc += CPoint::from_polar(weight, step * power as f64);
    });
    if q.k % 2 != 0 {
        acc = -acc;
    }
    Ok((acc.re - exact).abs() < tolerance && acc.im.abs() < tolerance)
}

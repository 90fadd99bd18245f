//! q-deformations: Gaussian binomials, q-bi^s-nomials, q-quasi-bi^s-nomials
//! and q-s-bonacci polynomials. Every value is an exact [`QPoly`] and
//! specializes to the integer version at `q = 1`.

mod sbonacci;

use std::collections::HashMap;
use std::sync::{LazyLock, RwLock};

use num_traits::{One, Zero};

use crate::exact::{QPoly, Series};

pub use sbonacci::{q_sbonacci, verify_q_sbonacci_recurrences, XQPoly};

/// `[n choose k]_q`, zero for `k` outside `0..=n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct QBinomialQuery {
    pub n: u32,
    pub k: i64,
}

fn binom2(k: i64) -> usize {
    (k * (k - 1) / 2) as usize
}

/// `[n]_q! / ([k]_q! [n-k]_q!) * q^C(k,2)` by exact long division.
pub fn q_binomial(q: QBinomialQuery) -> QPoly {
    let n = i64::from(q.n);
    if !(0..=n).contains(&q.k) {
        return QPoly::zero();
    }
    let k = q.k as usize;
    let denom = &QPoly::q_factorial(k) * &QPoly::q_factorial(q.n as usize - k);
    let quotient = QPoly::q_factorial(q.n as usize)
        .div_exact(&denom)
        .expect("q-factorial quotient must be a polynomial");
    quotient.shift(binom2(q.k))
}

fn qb(n: i64, k: i64) -> QPoly {
    if n < 0 {
        return QPoly::zero();
    }
    q_binomial(QBinomialQuery { n: n as u32, k })
}

/// Checks `[n,k] = [n-1,k] + q^(n-1) [n-1,k-1]` and
/// `[n,k] = q^k [n-1,k] + q^(k-1) [n-1,k-1]` for `0 <= k <= n <= n_max`, `n >= 1`.
pub fn verify_q_binomial_recurrences(n_max: u32) -> bool {
    assert!(n_max >= 1, "n_max must be at least 1");
    (1..=i64::from(n_max)).all(|n| {
        (0..=n).all(|k| {
            let value = qb(n, k);
            let lower = qb(n - 1, k - 1);
            let first = qb(n - 1, k) + lower.shift((n - 1) as usize);
            let second = qb(n - 1, k).shift(k as usize)
                + lower
                    .shift_signed(k - 1)
                    .expect("lower term vanishes at k = 0");
            value == first && value == second
        })
    })
}

/// Row `n` of the q-bi^s-nomial triangle: coefficients of `x^0 .. x^(sn)` in
/// `prod_{j<n} (1 + q^j x + ... + (q^j x)^s)`.
pub fn q_bisnomial_row(s: u32, n: u32) -> Vec<QPoly> {
    let mut row = vec![QPoly::one()];
    for j in 0..n as usize {
        let mut next = vec![QPoly::zero(); row.len() + s as usize];
        for (i, c) in row.iter().enumerate() {
            for e in 0..=s as usize {
                next[i + e] = &next[i + e] + &c.shift(j * e);
            }
        }
        row = next;
    }
    row
}

/// Coefficient of `x^k` in the q-bi^s-nomial product.
pub fn q_bisnomial(s: u32, n: u32, k: i64) -> QPoly {
    usize::try_from(k)
        .ok()
        .and_then(|k| q_bisnomial_row(s, n).into_iter().nth(k))
        .unwrap_or_default()
}

/// Checks both row recurrences
/// `[n,k] = sum_j q^(k-j) [n-1,k-j]` and `[n,k] = sum_j q^((n-1)j) [n-1,k-j]`
/// for `1 <= n <= n_max`.
pub fn verify_q_bisnomial_recurrences(s: u32, n_max: u32) -> bool {
    let mut prev = q_bisnomial_row(s, 0);
    for n in 1..=n_max {
        let row = q_bisnomial_row(s, n);
        let at = |k: i64| {
            usize::try_from(k)
                .ok()
                .and_then(|k| prev.get(k))
                .cloned()
                .unwrap_or_default()
        };
        for (k, value) in row.iter().enumerate() {
            let k = k as i64;
            let (mut left, mut right) = (QPoly::zero(), QPoly::zero());
            for j in 0..=i64::from(s) {
                let term = at(k - j);
                if term.is_zero() {
                    continue;
                }
                left = left + term.shift((k - j) as usize);
                right = right + term.shift(((i64::from(n) - 1) * j) as usize);
            }
            if &left != value || &right != value {
                return false;
            }
        }
        prev = row;
    }
    true
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct QQuasiQuery {
    pub s: u32,
    pub n: u32,
    pub k: i64,
}

impl QQuasiQuery {
    /// Panics if `s == 0`.
    pub fn new(s: u32, n: u32, k: i64) -> Self {
        assert!(s >= 1, "q-quasi triangle needs s >= 1");
        Self { s, n, k }
    }
}

/// The two defining recurrences of the q-quasi coefficients.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum QRoute {
    /// `[n,k] = [n-1,k] + sum_{j=1..s} q^(n-j) [n-j,k-1]`
    RecurrenceA,
    /// `[n,k] = q^k [n-1,k] + sum_{j=1..s} q^((k-1)j) [n-j,k-1]`
    RecurrenceB,
}

type QRowTable = Vec<Vec<QPoly>>;

// rows of each q-quasi triangle, keyed by (s, route), grown on demand
static Q_ROWS: LazyLock<RwLock<HashMap<(u32, QRoute), QRowTable>>> =
    LazyLock::new(Default::default);

/// Row `n` of the q-quasi s-triangle by the chosen recurrence.
pub fn q_quasi_row(s: u32, n: u32, route: QRoute) -> Vec<QPoly> {
    assert!(s >= 1, "q-quasi triangle needs s >= 1");
    let n = n as usize;
    if let Some(row) = Q_ROWS
        .read()
        .unwrap()
        .get(&(s, route))
        .and_then(|rows| rows.get(n))
    {
        return row.clone();
    }
    let mut cache = Q_ROWS.write().unwrap();
    let rows = cache
        .entry((s, route))
        .or_insert_with(|| vec![vec![QPoly::one()]]);
    while rows.len() <= n {
        let m = rows.len();
        let at = |r: usize, k: usize| rows[r].get(k).cloned().unwrap_or_default();
        let row: Vec<QPoly> = (0..=m)
            .map(|k| {
                let mut v = match route {
                    QRoute::RecurrenceA => at(m - 1, k),
                    QRoute::RecurrenceB => at(m - 1, k).shift(k),
                };
                if k >= 1 {
                    for j in 1..=(s as usize).min(m) {
                        let power = match route {
                            QRoute::RecurrenceA => m - j,
                            QRoute::RecurrenceB => (k - 1) * j,
                        };
                        v = v + at(m - j, k - 1).shift(power);
                    }
                }
                v
            })
            .collect();
        rows.push(row);
    }
    rows[n].clone()
}

pub fn q_quasi(qq: QQuasiQuery, route: QRoute) -> QPoly {
    if !(0..=i64::from(qq.n)).contains(&qq.k) {
        return QPoly::zero();
    }
    q_quasi_row(qq.s, qq.n, route).swap_remove(qq.k as usize)
}

/// `sum_j [n-j choose k]_q * [k, j]^(s-1)`, the q-binomial weighted by a
/// q-bi^(s-1)-nomial row.
pub fn q_quasi_by_explicit(qq: QQuasiQuery) -> QPoly {
    if !(0..=i64::from(qq.n)).contains(&qq.k) {
        return QPoly::zero();
    }
    q_bisnomial_row(qq.s - 1, qq.k as u32)
        .iter()
        .enumerate()
        .fold(QPoly::zero(), |acc, (j, c)| {
            acc + &qb(i64::from(qq.n) - j as i64, qq.k) * c
        })
}

/// `x^k q^C(k,2) prod_{j<k} (1 + q^j x + ... + (q^j x)^(s-1)) / prod_{j<=k} (1 - q^j x)`
/// modulo `x^order`.
pub fn q_quasi_gf(s: u32, k: u32, order: usize) -> Series<QPoly> {
    assert!(order >= 1, "order must be positive");
    assert!(s >= 1, "q-quasi triangle needs s >= 1");
    let k = k as usize;
    let block = |j: usize| Series::new(order, (0..s as usize).map(|e| QPoly::q_power(j * e)));
    let mut numerator = Series::monomial(order, QPoly::q_power(binom2(k as i64)), k);
    for j in 0..k {
        numerator = numerator.try_mul(&block(j)).expect("same order");
    }
    let mut denominator = Series::one(order);
    for j in 0..=k {
        let factor = Series::new(order, [QPoly::one(), -QPoly::q_power(j)]);
        denominator = denominator.try_mul(&factor).expect("same order");
    }
    numerator.try_div(&denominator).expect("constant term is 1")
}

/// Entries with a negative q-coefficient among rows `0..=n_max`, as a report.
pub fn q_quasi_negative_entries(s: u32, n_max: u32) -> Vec<QQuasiQuery> {
    (0..=n_max)
        .flat_map(|n| {
            q_quasi_row(s, n, QRoute::RecurrenceA)
                .into_iter()
                .enumerate()
                .filter(|(_, p)| !p.has_nonnegative_coefficients())
                .map(move |(k, _)| QQuasiQuery::new(s, n, k as i64))
        })
        .collect()
}

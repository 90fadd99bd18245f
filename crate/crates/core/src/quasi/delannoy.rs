//! Generalized Delannoy arrays `D_m(n, k)` and their correspondence with the
//! quasi triangle.

use num_traits::{One, Pow, Zero};

use crate::error::{precondition, Result};
use crate::exact::ExactInt;

use super::quasi_row;

/// Weights of the array: `D_m(n+1, k) = a D_m(n+1, k-1) + sum_{i<m} a_{i+1} D_m(n, k-i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DelannoyParams {
    m: usize,
    a: ExactInt,
    weights: Vec<ExactInt>,
}

impl DelannoyParams {
    /// `weights` holds `a_1 .. a_m`; `m` is its length and must be at least 1.
    pub fn new(a: ExactInt, weights: Vec<ExactInt>) -> Result<Self> {
        precondition(!weights.is_empty(), || {
            "Delannoy array needs m >= 1 weights".into()
        })?;
        Ok(Self {
            m: weights.len(),
            a,
            weights,
        })
    }

    /// `a = a_1 = ... = a_m = 1`.
    pub fn unit(m: usize) -> Result<Self> {
        Self::new(ExactInt::one(), vec![ExactInt::one(); m])
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn a(&self) -> &ExactInt {
        &self.a
    }

    pub fn weights(&self) -> &[ExactInt] {
        &self.weights
    }
}

/// Rows `0..=max_n`, columns `0..=max_k`. Entries with a negative column are
/// taken as zero inside the recurrence.
pub fn delannoy_table(p: &DelannoyParams, max_n: usize, max_k: usize) -> Vec<Vec<ExactInt>> {
    let mut table: Vec<Vec<ExactInt>> = Vec::with_capacity(max_n + 1);
    table.push((0..=max_k).map(|k| p.a.clone().pow(k)).collect());
    for n in 1..=max_n {
        let mut row: Vec<ExactInt> = Vec::with_capacity(max_k + 1);
        row.push(p.weights[0].clone().pow(n));
        for k in 1..=max_k {
            let mut v = &p.a * &row[k - 1];
            for (i, w) in p.weights.iter().enumerate() {
                if i > k {
                    break;
                }
                let prev = &table[n - 1][k - i];
                if !prev.is_zero() {
                    v += w * prev;
                }
            }
            row.push(v);
        }
        table.push(row);
    }
    table
}

/// Checks `D_s(k, n-k) == C_[s](n, k)` for `0 <= k <= n <= max_n` with unit weights.
pub fn verify_delannoy_correspondence(s: u32, max_n: usize) -> Result<bool> {
    precondition(s >= 1, || "correspondence needs s >= 1".into())?;
    let table = delannoy_table(&DelannoyParams::unit(s as usize)?, max_n, max_n);
    Ok((0..=max_n).all(|n| {
        let row = quasi_row(s, n as u32);
        (0..=n).all(|k| table[k][n - k] == row[k])
    }))
}

//! Sums of quasi-triangle entries along rays.
//!
//! The sequence of a direction `(alpha, beta, r)` is
//! `T_0 = 0`, `T_{n+1} = sum_k C_[s](n - r k, beta + alpha k)`.
//! The principal diagonal `(1, 0, 1)` gives the s-bonacci numbers.

use num_traits::Zero;

use crate::bisnomial::bisnomial_row;
use crate::error::{precondition, Error, Result};
use crate::exact::{int_binomial, sign, ExactInt};
use crate::quasi::quasi_row;

/// A transversal: step `alpha` in the column and `r` in the row per term,
/// starting at column `beta`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Direction {
    alpha: u32,
    beta: u32,
    r: i64,
}

impl Direction {
    pub fn new(alpha: u32, beta: u32, r: i64) -> Result<Self> {
        if alpha == 0 {
            return Err(Error::InvalidDirection("alpha must be positive"));
        }
        if beta >= alpha {
            return Err(Error::InvalidDirection(
                "beta must satisfy 0 <= beta < alpha",
            ));
        }
        if r + i64::from(alpha) <= 0 {
            return Err(Error::InvalidDirection("r + alpha must be positive"));
        }
        Ok(Self { alpha, beta, r })
    }

    /// The principal diagonal `(1, 0, 1)`.
    pub fn diagonal() -> Self {
        Self {
            alpha: 1,
            beta: 0,
            r: 1,
        }
    }

    pub fn alpha(&self) -> u32 {
        self.alpha
    }

    pub fn beta(&self) -> u32 {
        self.beta
    }

    pub fn r(&self) -> i64 {
        self.r
    }

    /// First index `alpha * s + r` from which the linear recurrence is claimed.
    pub fn recurrence_threshold(&self, s: u32) -> i64 {
        i64::from(self.alpha) * i64::from(s) + self.r
    }
}

/// Terms `T_0, T_1, ...` of one ray sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RaySequence {
    pub s: u32,
    pub direction: Direction,
    pub terms: Vec<ExactInt>,
}

fn entry(s: u32, n: i64, k: i64) -> ExactInt {
    if n < 0 || k < 0 || k > n {
        return ExactInt::zero();
    }
    quasi_row(s, n as u32).swap_remove(k as usize)
}

/// `T_n` for the direction, with `T_0 = 0` and `T_n = 0` for `n < 0`.
pub fn ray_sum_direct(s: u32, d: Direction, n: i64) -> ExactInt {
    assert!(s >= 1, "quasi triangle needs s >= 1");
    if n <= 0 {
        return ExactInt::zero();
    }
    let row = n - 1;
    let (alpha, beta) = (i64::from(d.alpha), i64::from(d.beta));
    let mut acc = ExactInt::zero();
    // The entry at k is nonzero only if beta + alpha k <= row - r k, i.e.
    // (alpha + r) k <= row - beta. Since alpha + r > 0 the left side grows
    // without bound, so the first k that fails ends the sum, even for r < 0.
    let mut k = 0i64;
    loop {
        let (top, bottom) = (row - d.r * k, beta + alpha * k);
        if bottom > top {
            break;
        }
        acc += entry(s, top, bottom);
        k += 1;
    }
    acc
}

pub fn ray_sequence(s: u32, d: Direction, count: usize) -> RaySequence {
    RaySequence {
        s,
        direction: d,
        terms: (0..count as i64).map(|n| ray_sum_direct(s, d, n)).collect(),
    }
}

/// `T_0 .. T_{count-1}` of the s-bonacci sequence as principal-diagonal sums.
pub fn sbonacci(s: u32, count: usize) -> Vec<ExactInt> {
    assert!(count >= 1, "need at least one term");
    ray_sequence(s, Direction::diagonal(), count).terms
}

/// `T_0 .. T_{count-1}` from `T_{n+1} = T_n + ... + T_{n-s}`, `T_1 = 1`.
pub fn sbonacci_by_recurrence(s: u32, count: usize) -> Vec<ExactInt> {
    let mut terms = Vec::with_capacity(count);
    for n in 0..count {
        let t = match n {
            0 => ExactInt::zero(),
            1 => ExactInt::from(1),
            _ => terms[n.saturating_sub(s as usize + 1)..n].iter().sum(),
        };
        terms.push(t);
    }
    terms
}

/// Diagonal sums against the order-(s+1) recurrence.
pub fn verify_sbonacci(s: u32, count: usize) -> bool {
    sbonacci(s, count) == sbonacci_by_recurrence(s, count)
}

/// One index where the two sides of the ray recurrence differ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RayMismatch {
    pub n: i64,
    pub lhs: ExactInt,
    pub rhs: ExactInt,
}

/// Both sides of
/// `sum_{i<=alpha} (-1)^i C(alpha,i) T_{n-i} = sum_{i<=alpha(s-1)} C_{s-1}(alpha,i) T_{n-alpha-r-i}`.
pub fn ray_recurrence_sides(s: u32, d: Direction, n: i64) -> (ExactInt, ExactInt) {
    let alpha = i64::from(d.alpha);
    let t = |m: i64| ray_sum_direct(s, d, m);
    let lhs = (0..=alpha)
        .map(|i| sign(i) * int_binomial(alpha, i) * t(n - i))
        .sum();
    let rhs = bisnomial_row(s - 1, d.alpha)
        .iter()
        .enumerate()
        .map(|(i, c)| c * t(n - alpha - d.r - i as i64))
        .sum();
    (lhs, rhs)
}

/// Every `n` in `from..=n_max` where the ray recurrence fails.
pub fn ray_recurrence_mismatches(s: u32, d: Direction, from: i64, n_max: i64) -> Vec<RayMismatch> {
    (from..=n_max)
        .filter_map(|n| {
            let (lhs, rhs) = ray_recurrence_sides(s, d, n);
            (lhs != rhs).then_some(RayMismatch { n, lhs, rhs })
        })
        .collect()
}

/// Checks the ray recurrence for every `n` in `[alpha s + r, n_max]`, with
/// all terms taken from direct sums.
pub fn verify_ray_recurrence(s: u32, d: Direction, n_max: i64) -> Result<bool> {
    let threshold = d.recurrence_threshold(s);
    precondition(n_max >= threshold, || {
        format!("n_max = {n_max} is below alpha*s + r = {threshold}")
    })?;
    Ok(ray_recurrence_mismatches(s, d, threshold, n_max).is_empty())
}

/// First index from which the ray recurrence holds unconditionally: past
/// both `alpha s + r` and the degree of `x * numerator` of the ray generating
/// function, `alpha + (s-1) beta`.
pub fn ray_recurrence_safe_threshold(s: u32, d: Direction) -> i64 {
    let numerator_bound = i64::from(d.alpha) + i64::from(s - 1) * i64::from(d.beta) + 1;
    d.recurrence_threshold(s).max(numerator_bound)
}

/// `sum_{i<=alpha} (-1)^i C(alpha,i) C(a-i, b) == C(a-alpha, b-alpha)`.
pub fn verify_alternating_lemma(a: i64, b: i64, alpha: i64) -> Result<bool> {
    precondition((0..=a).contains(&alpha), || {
        format!("need 0 <= alpha <= a, got alpha={alpha} a={a}")
    })?;
    let lhs: ExactInt = (0..=alpha)
        .map(|i| sign(i) * int_binomial(alpha, i) * int_binomial(a - i, b))
        .sum();
    Ok(lhs == int_binomial(a - alpha, b - alpha))
}

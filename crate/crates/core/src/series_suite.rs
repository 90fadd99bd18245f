//! Closed-form generating functions expanded as truncated exact series and
//! compared coefficient by coefficient with direct computation.

use std::fmt::Display;

use serde::Serialize;

use crate::error::{precondition, Error, Result};
use crate::exact::{int_binomial, ExactInt, Series};
use crate::q_analogue::{q_quasi, q_quasi_gf, QQuasiQuery, QRoute};
use crate::quasi::{quasi_by_recurrence, QuasiQuery};
use crate::rays::{ray_sum_direct, Direction};

/// Truncation order used when the caller has no preference.
pub const DEFAULT_ORDER: usize = 24;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GfMismatch {
    pub index: usize,
    pub expected: String,
    pub got: String,
}

/// Outcome of one series comparison; it passes iff `mismatches` is empty.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GfCheckReport {
    pub name: String,
    pub order: usize,
    pub mismatches: Vec<GfMismatch>,
}

impl GfCheckReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

fn compare<T: PartialEq + Display>(
    name: String,
    order: usize,
    series: &[T],
    mut direct: impl FnMut(usize) -> T,
) -> GfCheckReport {
    let mismatches = series
        .iter()
        .enumerate()
        .filter_map(|(n, got)| {
            let expected = direct(n);
            (&expected != got).then(|| GfMismatch {
                index: n,
                expected: expected.to_string(),
                got: got.to_string(),
            })
        })
        .collect();
    GfCheckReport {
        name,
        order,
        mismatches,
    }
}

fn one_minus_x(order: usize) -> Series<ExactInt> {
    Series::new(order, [ExactInt::from(1), ExactInt::from(-1)])
}

fn ensure_order(order: usize, k: u32) -> Result<()> {
    precondition(order > k as usize, || {
        format!("order {order} must exceed k = {k}")
    })
}

/// `x^k / (1-x)^(k+1)` against `C(n, k)`.
pub fn check_binomial_gf(k: u32, order: usize) -> Result<GfCheckReport> {
    ensure_order(order, k)?;
    let gf = Series::monomial(order, ExactInt::from(1), k as usize)
        .try_div(&one_minus_x(order).pow(k + 1))?;
    Ok(compare(
        format!("binomial_gf(k={k})"),
        order,
        gf.coeffs(),
        |n| int_binomial(n as i64, i64::from(k)),
    ))
}

/// `(1 + x + ... + x^(s-1))^k x^k / (1-x)^(k+1)` against `C_[s](n, k)`.
pub fn check_quasi_gf(s: u32, k: u32, order: usize) -> Result<GfCheckReport> {
    precondition(s >= 1, || "quasi triangle needs s >= 1".into())?;
    ensure_order(order, k)?;
    let numerator = Series::geometric_block(order, s as usize)
        .pow(k)
        .shift(k as usize);
    let gf = numerator.try_div(&one_minus_x(order).pow(k + 1))?;
    Ok(compare(
        format!("quasi_gf(s={s},k={k})"),
        order,
        gf.coeffs(),
        |n| quasi_by_recurrence(QuasiQuery::new(s, n as u32, i64::from(k))),
    ))
}

/// `(1-x)^(alpha-beta-1) (x + ... + x^s)^beta / ((1-x)^alpha - x^(r+alpha) (1 + ... + x^(s-1))^alpha)`
/// against `T_{n+1}`.
pub fn check_ray_gf(s: u32, d: Direction, order: usize) -> Result<GfCheckReport> {
    precondition(s >= 1, || "quasi triangle needs s >= 1".into())?;
    precondition(order >= 1, || "order must be positive".into())?;
    let (alpha, beta) = (d.alpha(), d.beta());
    // beta < alpha, so this exponent is never negative
    let numerator = one_minus_x(order).pow(alpha - beta - 1).try_mul(
        &Series::geometric_block(order, s as usize)
            .shift(1)
            .pow(beta),
    )?;
    let lead = (d.r() + i64::from(alpha)) as usize;
    let denominator = one_minus_x(order).pow(alpha).try_sub(
        &Series::geometric_block(order, s as usize)
            .pow(alpha)
            .shift(lead),
    )?;
    let gf = numerator.try_div(&denominator)?;
    if gf.try_mul(&denominator)? != numerator {
        return Err(Error::Inexact(format!(
            "ray series division for s={s}, {d:?}"
        )));
    }
    let name = format!("ray_gf(s={s},alpha={alpha},beta={beta},r={})", d.r());
    Ok(compare(name, order, gf.coeffs(), |n| {
        ray_sum_direct(s, d, n as i64 + 1)
    }))
}

/// The q-quasi column generating function against the recurrence values.
pub fn check_q_quasi_gf(s: u32, k: u32, order: usize) -> Result<GfCheckReport> {
    precondition(s >= 1, || "q-quasi triangle needs s >= 1".into())?;
    precondition(order >= 1, || "order must be positive".into())?;
    let gf = q_quasi_gf(s, k, order);
    Ok(compare(
        format!("q_quasi_gf(s={s},k={k})"),
        order,
        gf.coeffs(),
        |n| {
            q_quasi(
                QQuasiQuery::new(s, n as u32, i64::from(k)),
                QRoute::RecurrenceA,
            )
        },
    ))
}

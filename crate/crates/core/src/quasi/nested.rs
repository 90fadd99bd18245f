use std::f64::consts::PI;

use num_traits::{ToPrimitive, Zero};

use crate::bisnomial::for_each_bounded_composition;
use crate::error::{precondition, Result};
use crate::exact::{int_binomial, sign, CPoint, ExactInt, ExactRational};

use super::{quasi_by_recurrence, QuasiQuery};

/// Largest `n` accepted by [`verify_root_of_unity_dual`].
pub const ROOT_OF_UNITY_DUAL_MAX_N: u32 = 14;

/// `sum_j (-1)^j C(k, j) C(n + k - s j, 2k)`.
pub fn quasi_by_demoivre_dual(q: QuasiQuery) -> ExactInt {
    if !q.in_range() {
        return ExactInt::zero();
    }
    let (n, k, s) = (i64::from(q.n), q.k, i64::from(q.s));
    (0..=k)
        .map(|j| sign(j) * int_binomial(k, j) * int_binomial(n + k - s * j, 2 * k))
        .sum()
}

/// Evaluates
/// `sum_j C(n-j, k) (-1)^j sum_{k_1+...+k_{s-1}=j} prod_r C(k, k_r) w^(-sum r k_r)`
/// with `w = exp(2 i pi / s)` in double precision and compares it with the
/// recurrence value.
pub fn verify_root_of_unity_dual(q: QuasiQuery, tolerance: f64) -> Result<bool> {
    precondition(q.s >= 2, || "root-of-unity dual needs s >= 2".into())?;
    precondition(q.n <= ROOT_OF_UNITY_DUAL_MAX_N, || {
        format!(
            "root-of-unity dual limited to n <= {ROOT_OF_UNITY_DUAL_MAX_N}, got {}",
            q.n
        )
    })?;
    let exact = quasi_by_recurrence(q).to_f64().unwrap();
    let (n, k, parts) = (i64::from(q.n), q.k, q.s as usize - 1);
    if k < 0 {
        return Ok(exact.abs() < tolerance);
    }
    let step = -2.0 * PI / f64::from(q.s);
    let binoms: Vec<f64> = (0..=k)
        .map(|j| int_binomial(k, j).to_f64().unwrap())
        .collect();
    let mut acc = CPoint::new(0.0, 0.0);
    for j in 0..=(parts as i64 * k) {
        let outer = int_binomial(n - j, k).to_f64().unwrap();
        if outer == 0.0 {
            continue;
        }
        let mut inner = CPoint::new(0.0, 0.0);
        for_each_bounded_composition(j, parts, k, |ks| {
            let weight: f64 = ks.iter().map(|&c| binoms[c as usize]).product();
            let power: i64 = ks
                .iter()
                .enumerate()
                .map(|(r, &c)| (r as i64 + 1) * c)
                .sum();
            inner += CPoint::from_polar(weight, step * power as f64);
        });
        let signed = if j % 2 == 0 { outer } else { -outer };
        acc += inner * signed;
    }
    Ok((acc.re - exact).abs() < tolerance && acc.im.abs() < tolerance)
}

/// Evaluates
/// `sum C(k,j_1) C(j_1,j_2) ... C(j_{s-2},j_{s-1}) C(n-k-(j_1+...+j_{s-2}), j_{s-1})
///  * 2^j_1 (3/2)^j_2 ... (s/(s-1))^j_{s-1}`
/// in exact rationals and reports whether it is the integer `C_[s](n, k)`.
pub fn verify_nested_rational(q: QuasiQuery) -> Result<bool> {
    precondition(q.s >= 2, || "nested rational identity needs s >= 2".into())?;
    let total = nested_rational_sum(q);
    Ok(total.is_integer() && total.to_integer() == quasi_by_recurrence(q))
}

pub(crate) fn nested_rational_sum(q: QuasiQuery) -> ExactRational {
    let depth = q.s as usize - 1;
    let (n, k) = (i64::from(q.n), q.k);
    // weight (i+1)/i attached to j_i
    let weights: Vec<ExactRational> = (1..=depth as i64)
        .map(|i| ExactRational::new(ExactInt::from(i + 1), ExactInt::from(i)))
        .collect();

    fn go(
        level: usize,
        prev: i64,
        partial: i64,
        depth: usize,
        n: i64,
        k: i64,
        weights: &[ExactRational],
    ) -> ExactRational {
        let mut acc = ExactRational::zero();
        for j in 0..=prev {
            let mut term =
                ExactRational::from_integer(int_binomial(prev, j)) * weights[level].pow(j as i32);
            if level + 1 == depth {
                // innermost index: the last binomial excludes j_{s-1} from the offset
                term *= ExactRational::from_integer(int_binomial(n - k - partial, j));
            } else {
                term *= go(level + 1, j, partial + j, depth, n, k, weights);
            }
            acc += term;
        }
        acc
    }
    go(0, k, 0, depth, n, k, &weights)
}

use num_traits::Zero;

use crate::error::{precondition, Result};
use crate::exact::QPoly;

use super::{q_quasi, QQuasiQuery, QRoute};

/// Polynomial in `x` with [`QPoly`] coefficients, lowest power of `x` first.
/// Trailing zero coefficients are trimmed.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct XQPoly {
    coeffs: Vec<QPoly>,
}

impl XQPoly {
    pub fn new(mut coeffs: Vec<QPoly>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[QPoly] {
        &self.coeffs
    }

    pub fn coeff(&self, m: usize) -> QPoly {
        self.coeffs.get(m).cloned().unwrap_or_default()
    }

    pub fn x_degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }
}

/// `T_0 .. T_{count-1}` with `T_0 = 0` and
/// `T_{n+1}(x) = sum_k [n-k choose k]_[s] x^k`.
///
/// Fails if some term would need an `x` degree above `x_degree_cap`.
pub fn q_sbonacci(s: u32, count: usize, x_degree_cap: usize) -> Result<Vec<XQPoly>> {
    precondition(count >= 1, || "count must be at least 1".into())?;
    let top = (count.saturating_sub(2)) / 2;
    precondition(count < 2 || top <= x_degree_cap, || {
        format!(
            "term {} has x-degree {top}, above the cap {x_degree_cap}",
            count - 1
        )
    })?;
    Ok((0..count).map(|n| term(s, n)).collect())
}

fn term(s: u32, index: usize) -> XQPoly {
    let Some(n) = index.checked_sub(1) else {
        return XQPoly::default();
    };
    XQPoly::new(
        (0..=n / 2)
            .map(|k| {
                q_quasi(
                    QQuasiQuery::new(s, (n - k) as u32, k as i64),
                    QRoute::RecurrenceA,
                )
            })
            .collect(),
    )
}

// sum of q^e * p over (e, p); negative exponents are cleared by a common q-power
fn normalized_sum(terms: &[(i64, QPoly)], lift: i64) -> QPoly {
    terms.iter().fold(QPoly::zero(), |acc, (e, p)| {
        acc + p.shift((e + lift) as usize)
    })
}

fn equal_up_to_q_power(lhs: &[(i64, QPoly)], rhs: &[(i64, QPoly)]) -> bool {
    let lowest = lhs.iter().chain(rhs).map(|(e, _)| *e).min().unwrap_or(0);
    let lift = (-lowest).max(0);
    normalized_sum(lhs, lift) == normalized_sum(rhs, lift)
}

/// Checks, for every `n >= 1` with `T_{n+1}` among the first `count` terms,
/// `T_{n+1}(x) = T_n(x) + x sum_{j=1..s} q^(n-j-1) T_{n-j}(x/q)` and
/// `T_{n+1}(x) = T_n(xq) + x sum_{j=1..s} T_{n-j}(x q^j)`
/// coefficient by coefficient in `x`.
pub fn verify_q_sbonacci_recurrences(s: u32, count: usize) -> bool {
    let terms: Vec<XQPoly> = (0..count).map(|n| term(s, n)).collect();
    let at = |i: i64| {
        usize::try_from(i)
            .ok()
            .map(|i| terms[i].clone())
            .unwrap_or_default()
    };
    (1..count as i64 - 1).all(|n| {
        let next = &terms[n as usize + 1];
        let current = at(n);
        let width = next.coeffs.len().max(current.coeffs.len()) + 1;
        (0..width).all(|m| {
            let lhs = [(0, next.coeff(m))];
            let mut es = vec![(0, current.coeff(m))];
            let mut es1 = vec![(m as i64, current.coeff(m))];
            if m >= 1 {
                let below = m as i64 - 1;
                for j in 1..=i64::from(s) {
                    let c = at(n - j).coeff(below as usize);
                    es.push((n - j - 1 - below, c.clone()));
                    es1.push((j * below, c));
                }
            }
            equal_up_to_q_power(&lhs, &es) && equal_up_to_q_power(&lhs, &es1)
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ExactInt;
    use crate::rays::sbonacci;

    #[test]
    fn first_terms() {
        let t = q_sbonacci(2, 4, 4).unwrap();
        assert_eq!(t[0], XQPoly::default());
        assert_eq!(t[1], XQPoly::new(vec![QPoly::from_i64s(&[1])]));
        assert_eq!(
            t[3],
            XQPoly::new(vec![QPoly::from_i64s(&[1]), QPoly::from_i64s(&[1])])
        );
    }

    #[test]
    fn specializes_to_sbonacci() {
        for s in 1..=3 {
            let t = q_sbonacci(s, 14, 6).unwrap();
            let at_one: Vec<ExactInt> = t
                .iter()
                .map(|p| p.coeffs().iter().map(QPoly::eval_at_one).sum())
                .collect();
            assert_eq!(at_one, sbonacci(s, 14));
        }
    }

    #[test]
    fn degree_cap_is_enforced() {
        assert!(q_sbonacci(2, 12, 5).is_ok());
        assert!(q_sbonacci(2, 12, 4).is_err());
        assert!(q_sbonacci(2, 0, 4).is_err());
    }

    #[test]
    fn both_recurrences_hold() {
        for s in 1..=3 {
            assert!(verify_q_sbonacci_recurrences(s, 12), "s={s}");
            assert!(verify_q_sbonacci_recurrences(s, 20), "s={s}");
        }
    }
}

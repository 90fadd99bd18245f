use crate::error::{precondition, Result};
use crate::exact::ExactInt;

use super::QuasiQuery;

/// Largest `n` the exhaustive path enumeration accepts.
pub const LATTICE_MAX_N: u32 = 18;

/// The step set `{(1,0), (1,1), (2,1), ..., (s,1)}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StepSet {
    steps: Vec<(u32, u32)>,
}

impl StepSet {
    pub fn new(s: u32) -> Self {
        assert!(s >= 1, "step set needs s >= 1");
        let steps = std::iter::once((1, 0))
            .chain((1..=s).map(|j| (j, 1)))
            .collect();
        Self { steps }
    }

    pub fn steps(&self) -> &[(u32, u32)] {
        &self.steps
    }
}

/// Counts lattice paths from `(0,0)` to `(n,k)` over [`StepSet`] by walking
/// every one of them. Ground truth for the other routes; exponential.
pub fn quasi_by_lattice_oracle(q: QuasiQuery) -> Result<ExactInt> {
    precondition(q.n <= LATTICE_MAX_N, || {
        format!(
            "lattice enumeration limited to n <= {LATTICE_MAX_N}, got n = {}",
            q.n
        )
    })?;
    if q.k < 0 || q.k > i64::from(q.n) {
        return Ok(ExactInt::from(0));
    }
    let steps = StepSet::new(q.s);
    let target = (q.n, q.k as u32);
    let mut count: u64 = 0;
    let mut stack = vec![(0u32, 0u32)];
    while let Some((x, y)) = stack.pop() {
        if (x, y) == target {
            count += 1;
            continue;
        }
        for &(dx, dy) in steps.steps() {
            let next = (x + dx, y + dy);
            if next.0 <= target.0 && next.1 <= target.1 {
                stack.push(next);
            }
        }
    }
    Ok(ExactInt::from(count))
}

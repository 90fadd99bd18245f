//! Exact arithmetic for quasi s-Pascal triangles.
//!
//! `C_[s](n, k)` counts lattice paths from `(0,0)` to `(n,k)` with steps
//! `(1,0), (1,1), (2,1), ..., (s,1)`. The crate computes these numbers by
//! several independent routes and cross-checks them, together with:
//!
//! - [`bisnomial`]: coefficients of `(1 + x + ... + x^s)^n`;
//! - [`rays`]: s-bonacci numbers and sums along other rays of the triangle;
//! - [`q_analogue`]: q-deformations with [`exact::QPoly`] values;
//! - [`series_suite`]: generating functions expanded as truncated series;
//! - [`tables`]: published tables and the entries that disagree with them;
//! - [`report`]: the documents and verification suites behind the `quasi` binary.
//!
//! ```
//! use quasi_pascal::quasi::{quasi_by_recurrence, QuasiQuery};
//! use quasi_pascal::rays::sbonacci;
//!
//! assert_eq!(quasi_by_recurrence(QuasiQuery::new(2, 8, 4)), 321.into());
//! assert_eq!(sbonacci(2, 8), [0, 1, 1, 2, 4, 7, 13, 24].map(Into::into));
//! ```

pub mod bisnomial;
pub mod error;
pub mod exact;
pub mod q_analogue;
pub mod quasi;
pub mod rays;
pub mod report;
pub mod series_suite;
pub mod tables;

pub use error::{Error, Result};

//! Output documents for the command-line tool and the verification suites
//! behind `verify`.
//!
//! Every integer leaves this module as a decimal string, so values of any
//! size survive a JSON round trip.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;

use serde_json::{json, Value};

use crate::bisnomial::{
    bisnomial_by_demoivre, bisnomial_by_diagonal, bisnomial_by_expansion,
    bisnomial_by_longitudinal, bisnomial_by_nested_sum, bisnomial_row_by_expansion,
    verify_root_of_unity_bisnomial, BisnomialQuery, DEFAULT_TOLERANCE,
};
use crate::error::{Error, Result};
use crate::exact::{ExactInt, QPoly};
use crate::q_analogue::{
    q_quasi, q_quasi_by_explicit, q_quasi_row, verify_q_binomial_recurrences,
    verify_q_bisnomial_recurrences, verify_q_sbonacci_recurrences, QQuasiQuery, QRoute,
};
use crate::quasi::{
    delannoy_table, quasi_by_demoivre_dual, quasi_by_explicit_binomial,
    quasi_by_explicit_multinomial, quasi_by_lattice_oracle, quasi_by_recurrence,
    quasi_by_spascal_link, quasi_row, verify_delannoy_correspondence, verify_nested_rational,
    verify_root_of_unity_dual, DelannoyParams, QuasiQuery, LATTICE_MAX_N,
};
use crate::rays::{
    ray_recurrence_sides, ray_sequence, sbonacci, verify_alternating_lemma, verify_sbonacci,
    Direction,
};
use crate::series_suite::{
    check_binomial_gf, check_q_quasi_gf, check_quasi_gf, check_ray_gf, GfCheckReport, DEFAULT_ORDER,
};
use crate::tables::{Erratum, PRINTED_TABLES};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Plain,
    Csv,
    Json,
}

/// One table or sequence cell.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Cell {
    Int(ExactInt),
    Poly(QPoly),
}

impl Cell {
    fn text(&self) -> String {
        match self {
            Cell::Int(v) => v.to_string(),
            Cell::Poly(p) => p.to_string(),
        }
    }

    fn to_json(&self) -> Value {
        match self {
            Cell::Int(v) => Value::String(v.to_string()),
            Cell::Poly(p) => json!({
                "coeffs": p.coeffs().iter().map(ToString::to_string).collect::<Vec<_>>(),
                "text": p.to_string(),
            }),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Payload {
    Rows(Vec<Vec<Cell>>),
    Terms(Vec<Cell>),
    Value(Cell),
    Report(SuiteReport),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Triangle,
    Sequence,
    Coefficient,
    Report,
}

impl Kind {
    fn name(self) -> &'static str {
        match self {
            Kind::Triangle => "triangle",
            Kind::Sequence => "sequence",
            Kind::Coefficient => "coefficient",
            Kind::Report => "report",
        }
    }
}

/// What a command produces: its kind, an echo of the inputs and the result.
#[derive(Clone, Debug, PartialEq)]
pub struct OutputDocument {
    pub kind: Kind,
    pub params: BTreeMap<String, String>,
    pub payload: Payload,
}

fn params<const N: usize>(pairs: [(&str, String); N]) -> BTreeMap<String, String> {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

fn ints(row: Vec<ExactInt>) -> Vec<Cell> {
    row.into_iter().map(Cell::Int).collect()
}

impl OutputDocument {
    pub fn to_json(&self) -> Value {
        let payload = match &self.payload {
            Payload::Rows(rows) => {
                json!({ "rows": rows.iter().map(|r| r.iter().map(Cell::to_json).collect::<Vec<_>>()).collect::<Vec<_>>() })
            }
            Payload::Terms(terms) => {
                json!({ "terms": terms.iter().map(Cell::to_json).collect::<Vec<_>>() })
            }
            Payload::Value(v) => json!({ "value": v.to_json() }),
            Payload::Report(r) => r.to_json(),
        };
        json!({ "kind": self.kind.name(), "params": self.params, "payload": payload })
    }

    /// Text in the requested format, ending with a newline.
    pub fn render(&self, format: Format) -> String {
        let mut out = match (format, &self.payload) {
            (Format::Json, _) => {
                serde_json::to_string_pretty(&self.to_json()).expect("plain JSON values")
            }
            (Format::Plain, Payload::Rows(rows)) => render_padded(rows),
            (Format::Csv, Payload::Rows(rows)) => rows
                .iter()
                .map(|r| join(r, ","))
                .collect::<Vec<_>>()
                .join("\n"),
            (_, Payload::Terms(terms)) => join(terms, ","),
            (_, Payload::Value(v)) => v.text(),
            (Format::Plain, Payload::Report(r)) => r.render_plain(),
            (Format::Csv, Payload::Report(r)) => r.render_csv(),
        };
        out.push('\n');
        out
    }
}

fn join(cells: &[Cell], sep: &str) -> String {
    cells.iter().map(Cell::text).collect::<Vec<_>>().join(sep)
}

fn render_padded(rows: &[Vec<Cell>]) -> String {
    let texts: Vec<Vec<String>> = rows
        .iter()
        .map(|r| r.iter().map(Cell::text).collect())
        .collect();
    let width = texts.iter().flatten().map(String::len).max().unwrap_or(0);
    texts
        .iter()
        .map(|r| {
            r.iter()
                .map(|t| format!("{t:>width$}"))
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect::<Vec<_>>()
        .join("\n")
}

/// Rows `0..rows` of the quasi s-triangle.
pub fn triangle_document(s: u32, rows: u32) -> Result<OutputDocument> {
    check_positive("s", s)?;
    check_positive("rows", rows)?;
    Ok(OutputDocument {
        kind: Kind::Triangle,
        params: params([
            ("command", "triangle".into()),
            ("s", s.to_string()),
            ("rows", rows.to_string()),
        ]),
        payload: Payload::Rows((0..rows).map(|n| ints(quasi_row(s, n))).collect()),
    })
}

/// Rows `0..rows` of the q-quasi s-triangle.
pub fn qtriangle_document(s: u32, rows: u32) -> Result<OutputDocument> {
    check_positive("s", s)?;
    check_positive("rows", rows)?;
    let payload = (0..rows).map(|n| {
        q_quasi_row(s, n, QRoute::RecurrenceA)
            .into_iter()
            .map(Cell::Poly)
            .collect()
    });
    Ok(OutputDocument {
        kind: Kind::Triangle,
        params: params([
            ("command", "qtriangle".into()),
            ("s", s.to_string()),
            ("rows", rows.to_string()),
        ]),
        payload: Payload::Rows(payload.collect()),
    })
}

/// `D(n, k)` for `n < rows`, `k < cols`.
pub fn delannoy_document(p: &DelannoyParams, rows: u32, cols: u32) -> Result<OutputDocument> {
    check_positive("rows", rows)?;
    check_positive("cols", cols)?;
    let table = delannoy_table(p, rows as usize - 1, cols as usize - 1);
    let weights = p
        .weights()
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",");
    Ok(OutputDocument {
        kind: Kind::Triangle,
        params: params([
            ("command", "delannoy".into()),
            ("m", p.m().to_string()),
            ("a", p.a().to_string()),
            ("weights", weights),
            ("rows", rows.to_string()),
            ("cols", cols.to_string()),
        ]),
        payload: Payload::Rows(table.into_iter().map(ints).collect()),
    })
}

/// Computation routes for a single quasi coefficient.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Lattice,
    Recurrence,
    Explicit,
    Multinomial,
    Spascal,
    Demoivre,
}

impl Method {
    pub const ALL: [Method; 6] = [
        Method::Lattice,
        Method::Recurrence,
        Method::Explicit,
        Method::Multinomial,
        Method::Spascal,
        Method::Demoivre,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::Lattice => "lattice",
            Method::Recurrence => "recurrence",
            Method::Explicit => "explicit",
            Method::Multinomial => "multinomial",
            Method::Spascal => "spascal",
            Method::Demoivre => "demoivre",
        }
    }

    pub fn evaluate(self, q: QuasiQuery) -> Result<ExactInt> {
        Ok(match self {
            Method::Lattice => quasi_by_lattice_oracle(q)?,
            Method::Recurrence => quasi_by_recurrence(q),
            Method::Explicit => quasi_by_explicit_binomial(q),
            Method::Multinomial => quasi_by_explicit_multinomial(q),
            Method::Spascal => quasi_by_spascal_link(q),
            Method::Demoivre => quasi_by_demoivre_dual(q),
        })
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| format!("unknown method {s:?}"))
    }
}

/// A single quasi coefficient by one route. The lattice route refuses
/// `n > LATTICE_MAX_N`.
pub fn coefficient_document(s: u32, n: u32, k: i64, method: Method) -> Result<OutputDocument> {
    check_positive("s", s)?;
    let value = method.evaluate(QuasiQuery::new(s, n, k))?;
    Ok(OutputDocument {
        kind: Kind::Coefficient,
        params: params([
            ("command", "coef".into()),
            ("s", s.to_string()),
            ("n", n.to_string()),
            ("k", k.to_string()),
            ("method", method.name().into()),
        ]),
        payload: Payload::Value(Cell::Int(value)),
    })
}

/// `T_0 .. T_{count-1}` of the s-bonacci sequence, or of a ray sequence when
/// a direction is given.
pub fn sequence_document(
    s: u32,
    direction: Option<Direction>,
    count: u32,
) -> Result<OutputDocument> {
    check_positive("s", s)?;
    check_positive("count", count)?;
    let mut p = params([
        ("command", "sequence".into()),
        ("s", s.to_string()),
        ("count", count.to_string()),
    ]);
    let terms = match direction {
        None => {
            p.insert("kind".into(), "sbonacci".into());
            sbonacci(s, count as usize)
        }
        Some(d) => {
            p.insert("kind".into(), "ray".into());
            p.insert("alpha".into(), d.alpha().to_string());
            p.insert("beta".into(), d.beta().to_string());
            p.insert("r".into(), d.r().to_string());
            ray_sequence(s, d, count as usize).terms
        }
    };
    Ok(OutputDocument {
        kind: Kind::Sequence,
        params: p,
        payload: Payload::Terms(ints(terms)),
    })
}

fn check_positive(name: &str, v: u32) -> Result<()> {
    if v == 0 {
        return Err(Error::Precondition(format!("{name} must be at least 1")));
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    All,
    Bisnomial,
    Quasi,
    Rays,
    Q,
    Gf,
    Tables,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::All,
        Suite::Bisnomial,
        Suite::Quasi,
        Suite::Rays,
        Suite::Q,
        Suite::Gf,
        Suite::Tables,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Bisnomial => "bisnomial",
            Suite::Quasi => "quasi",
            Suite::Rays => "rays",
            Suite::Q => "q",
            Suite::Gf => "gf",
            Suite::Tables => "tables",
        }
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Suite::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

/// The first failing case of a check: where it failed and what each side gave.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub at: BTreeMap<String, String>,
    pub values: BTreeMap<String, String>,
}

impl Counterexample {
    fn new<const A: usize, const V: usize>(
        at: [(&str, String); A],
        values: [(&str, String); V],
    ) -> Self {
        Self {
            at: params(at),
            values: params(values),
        }
    }

    fn describe(&self) -> String {
        let at = self
            .at
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(" ");
        let values = self
            .values
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(" ");
        format!("{at}: {values}")
    }

    fn to_json(&self) -> Value {
        json!({ "at": self.at, "values": self.values })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub name: String,
    pub cases: usize,
    pub counterexample: Option<Counterexample>,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub checks: Vec<CheckResult>,
    pub errata: Vec<Erratum>,
}

impl SuiteReport {
    /// True iff no hard identity failed. Errata never fail a suite.
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckResult::passed)
    }

    pub fn first_failure(&self) -> Option<&CheckResult> {
        self.checks.iter().find(|c| !c.passed())
    }

    fn to_json(&self) -> Value {
        let checks: Vec<Value> = self
            .checks
            .iter()
            .map(|c| {
                json!({
                    "name": c.name,
                    "cases": c.cases.to_string(),
                    "passed": c.passed(),
                    "counterexample": c.counterexample.as_ref().map(Counterexample::to_json),
                })
            })
            .collect();
        json!({
            "suite": self.suite.name(),
            "passed": self.passed(),
            "checks": checks,
            "errata": serde_json::to_value(&self.errata).expect("plain data"),
        })
    }

    fn render_plain(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let status = if c.passed() { "PASS" } else { "FAIL" };
            let _ = write!(out, "{status} {} ({} cases)", c.name, c.cases);
            if let Some(ce) = &c.counterexample {
                let _ = write!(out, "\n     first counterexample: {}", ce.describe());
            }
            out.push('\n');
        }
        for e in &self.errata {
            let _ = writeln!(
                out,
                "ERRATUM {} row {} col {}: printed {}, recomputed {}",
                e.table, e.row, e.col, e.printed, e.recomputed
            );
        }
        let _ = write!(
            out,
            "suite {}: {}",
            self.suite.name(),
            if self.passed() { "pass" } else { "fail" }
        );
        out
    }

    fn render_csv(&self) -> String {
        let mut lines = vec!["check,passed,cases,counterexample".to_string()];
        for c in &self.checks {
            let ce = c
                .counterexample
                .as_ref()
                .map(Counterexample::describe)
                .unwrap_or_default();
            lines.push(format!("{},{},{},\"{}\"", c.name, c.passed(), c.cases, ce));
        }
        for e in &self.errata {
            lines.push(format!(
                "erratum {} row {} col {},true,1,\"printed {} recomputed {}\"",
                e.table, e.row, e.col, e.printed, e.recomputed
            ));
        }
        lines.join("\n")
    }
}

/// Runs one check over a set of cases, stopping at the first failure.
fn check<T>(
    name: impl Into<String>,
    cases: impl IntoIterator<Item = T>,
    mut test: impl FnMut(T) -> Option<Counterexample>,
) -> CheckResult {
    let mut count = 0;
    for case in cases {
        count += 1;
        if let Some(ce) = test(case) {
            return CheckResult {
                name: name.into(),
                cases: count,
                counterexample: Some(ce),
            };
        }
    }
    CheckResult {
        name: name.into(),
        cases: count,
        counterexample: None,
    }
}

/// `None` if every value agrees, otherwise all values side by side.
fn agreement<const A: usize>(
    at: [(&str, String); A],
    values: Vec<(&str, String)>,
) -> Option<Counterexample> {
    let all_equal = values.windows(2).all(|w| w[0].1 == w[1].1);
    (!all_equal).then(|| Counterexample {
        at: params(at),
        values: values
            .into_iter()
            .map(|(k, v)| (k.to_string(), v))
            .collect(),
    })
}

fn bool_case<const A: usize>(ok: Result<bool>, at: [(&str, String); A]) -> Option<Counterexample> {
    match ok {
        Ok(true) => None,
        Ok(false) => Some(Counterexample::new(at, [("holds", "false".into())])),
        Err(e) => Some(Counterexample::new(at, [("error", e.to_string())])),
    }
}

fn grid(s: std::ops::RangeInclusive<u32>, n_max: u32) -> impl Iterator<Item = (u32, u32, i64)> {
    s.flat_map(move |s| (0..=n_max).flat_map(move |n| (0..=i64::from(n)).map(move |k| (s, n, k))))
}

fn sn_k(s: u32, n: u32, k: i64) -> [(&'static str, String); 3] {
    [
        ("s", s.to_string()),
        ("n", n.to_string()),
        ("k", k.to_string()),
    ]
}

fn bisnomial_checks() -> Vec<CheckResult> {
    let cells = || {
        (1..=4u32).flat_map(|s| {
            (0..=12u32).flat_map(move |n| (0..=i64::from(s * n)).map(move |k| (s, n, k)))
        })
    };
    vec![
        check("bisnomial routes agree", cells(), |(s, n, k)| {
            let q = BisnomialQuery::new(s, n, k);
            agreement(
                sn_k(s, n, k),
                vec![
                    ("expansion", bisnomial_by_expansion(q).to_string()),
                    ("nested", bisnomial_by_nested_sum(q).to_string()),
                    ("longitudinal", bisnomial_by_longitudinal(q).to_string()),
                    ("diagonal", bisnomial_by_diagonal(q).to_string()),
                    ("demoivre", bisnomial_by_demoivre(q).to_string()),
                ],
            )
        }),
        check(
            "bisnomial symmetry and row sums",
            (1..=4u32).flat_map(|s| (0..=12u32).map(move |n| (s, n))),
            |(s, n)| {
                let row = bisnomial_row_by_expansion(s, n);
                let mut reversed = row.clone();
                reversed.reverse();
                let sum: ExactInt = row.iter().sum();
                let power = num_traits::pow(ExactInt::from(s + 1), n as usize);
                (row != reversed || sum != power).then(|| {
                    Counterexample::new(
                        [("s", s.to_string()), ("n", n.to_string())],
                        [
                            ("row_sum", sum.to_string()),
                            ("expected_sum", power.to_string()),
                            ("symmetric", (row == reversed).to_string()),
                        ],
                    )
                })
            },
        ),
        check(
            "bisnomial root-of-unity relation",
            (2..=3u32).flat_map(|s| {
                (0..=10u32).flat_map(move |n| (0..=i64::from(s * n)).map(move |k| (s, n, k)))
            }),
            |(s, n, k)| {
                bool_case(
                    verify_root_of_unity_bisnomial(BisnomialQuery::new(s, n, k), DEFAULT_TOLERANCE),
                    sn_k(s, n, k),
                )
            },
        ),
    ]
}

fn quasi_checks() -> Vec<CheckResult> {
    vec![
        check("quasi routes agree", grid(1..=4, 12), |(s, n, k)| {
            let q = QuasiQuery::new(s, n, k);
            let values = Method::ALL
                .into_iter()
                .filter(|m| *m != Method::Lattice || n <= LATTICE_MAX_N)
                .map(|m| {
                    (
                        m.name(),
                        m.evaluate(q)
                            .map(|v| v.to_string())
                            .unwrap_or_else(|e| e.to_string()),
                    )
                })
                .collect();
            agreement(sn_k(s, n, k), values)
        }),
        check("quasi root-of-unity dual", grid(2..=3, 10), |(s, n, k)| {
            bool_case(
                verify_root_of_unity_dual(QuasiQuery::new(s, n, k), DEFAULT_TOLERANCE),
                sn_k(s, n, k),
            )
        }),
        check("quasi nested rational sum", grid(2..=4, 10), |(s, n, k)| {
            bool_case(
                verify_nested_rational(QuasiQuery::new(s, n, k)),
                sn_k(s, n, k),
            )
        }),
        check("delannoy correspondence", 1..=4u32, |s| {
            bool_case(
                verify_delannoy_correspondence(s, 12),
                [("s", s.to_string()), ("n_max", "12".into())],
            )
        }),
    ]
}

/// The transversal grid: `s` in 2..=3, `alpha` in 1..=3, `beta < alpha`,
/// `1 - alpha <= r <= 3`.
pub fn ray_grid() -> impl Iterator<Item = (u32, Direction)> {
    (2..=3u32).flat_map(|s| {
        (1..=3u32).flat_map(move |alpha| {
            (0..alpha).flat_map(move |beta| {
                ((1 - i64::from(alpha))..=3)
                    .map(move |r| (s, Direction::new(alpha, beta, r).expect("grid direction")))
            })
        })
    })
}

fn ray_checks() -> Vec<CheckResult> {
    let ray_cases = ray_grid().flat_map(|(s, d)| {
        let from = d.recurrence_threshold(s);
        (from..from + 15).map(move |n| (s, d, n))
    });
    vec![
        check("s-bonacci recurrence", 1..=4u32, |s| {
            (!verify_sbonacci(s, 30))
                .then(|| Counterexample::new([("s", s.to_string())], [("terms", "30".into())]))
        }),
        check("ray recurrence", ray_cases, |(s, d, n)| {
            let (lhs, rhs) = ray_recurrence_sides(s, d, n);
            (lhs != rhs).then(|| {
                Counterexample::new(
                    [
                        ("s", s.to_string()),
                        ("alpha", d.alpha().to_string()),
                        ("beta", d.beta().to_string()),
                        ("r", d.r().to_string()),
                        ("n", n.to_string()),
                    ],
                    [("lhs", lhs.to_string()), ("rhs", rhs.to_string())],
                )
            })
        }),
        check(
            "alternating lemma",
            (0..=12i64).flat_map(|a| {
                (0..=a).flat_map(move |alpha| (0..=12i64).map(move |b| (a, b, alpha)))
            }),
            |(a, b, alpha)| {
                bool_case(
                    verify_alternating_lemma(a, b, alpha),
                    [
                        ("a", a.to_string()),
                        ("b", b.to_string()),
                        ("alpha", alpha.to_string()),
                    ],
                )
            },
        ),
    ]
}

fn q_checks() -> Vec<CheckResult> {
    vec![
        check("q-quasi routes agree", grid(1..=3, 10), |(s, n, k)| {
            let q = QQuasiQuery::new(s, n, k);
            agreement(
                sn_k(s, n, k),
                vec![
                    ("recurrence_a", q_quasi(q, QRoute::RecurrenceA).to_string()),
                    ("recurrence_b", q_quasi(q, QRoute::RecurrenceB).to_string()),
                    ("explicit", q_quasi_by_explicit(q).to_string()),
                ],
            )
        }),
        check("q-quasi at q=1", grid(1..=3, 10), |(s, n, k)| {
            agreement(
                sn_k(s, n, k),
                vec![
                    (
                        "q_quasi_at_one",
                        q_quasi(QQuasiQuery::new(s, n, k), QRoute::RecurrenceA)
                            .eval_at_one()
                            .to_string(),
                    ),
                    (
                        "quasi",
                        quasi_by_recurrence(QuasiQuery::new(s, n, k)).to_string(),
                    ),
                ],
            )
        }),
        check("q-binomial recurrences", [15u32], |n_max| {
            (!verify_q_binomial_recurrences(n_max)).then(|| {
                Counterexample::new([("n_max", n_max.to_string())], [("holds", "false".into())])
            })
        }),
        check("q-bisnomial recurrences", 1..=3u32, |s| {
            (!verify_q_bisnomial_recurrences(s, 8)).then(|| {
                Counterexample::new(
                    [("s", s.to_string()), ("n_max", "8".into())],
                    [("holds", "false".into())],
                )
            })
        }),
        check("q-s-bonacci recurrences", 1..=3u32, |s| {
            (!verify_q_sbonacci_recurrences(s, 12)).then(|| {
                Counterexample::new(
                    [("s", s.to_string()), ("terms", "12".into())],
                    [("holds", "false".into())],
                )
            })
        }),
    ]
}

fn gf_case(report: Result<GfCheckReport>) -> Option<Counterexample> {
    match report {
        Ok(r) => r.mismatches.first().map(|m| {
            Counterexample::new(
                [("series", r.name.clone()), ("index", m.index.to_string())],
                [("expected", m.expected.clone()), ("got", m.got.clone())],
            )
        }),
        Err(e) => Some(Counterexample::new([], [("error", e.to_string())])),
    }
}

fn gf_checks() -> Vec<CheckResult> {
    vec![
        check("binomial generating function", 0..=12u32, |k| {
            gf_case(check_binomial_gf(k, DEFAULT_ORDER))
        }),
        check(
            "quasi generating function",
            (1..=4u32).flat_map(|s| (0..=12u32).map(move |k| (s, k))),
            |(s, k)| gf_case(check_quasi_gf(s, k, DEFAULT_ORDER)),
        ),
        check("ray generating function", ray_grid(), |(s, d)| {
            gf_case(check_ray_gf(s, d, DEFAULT_ORDER))
        }),
        check(
            "q-quasi generating function",
            (1..=3u32).flat_map(|s| (0..=6u32).map(move |k| (s, k))),
            |(s, k)| gf_case(check_q_quasi_gf(s, k, 12)),
        ),
    ]
}

/// Runs a suite. `tables` only lists errata and always passes.
pub fn run_suite(suite: Suite) -> SuiteReport {
    let mut checks = Vec::new();
    let mut errata = Vec::new();
    let parts = match suite {
        Suite::All => vec![
            Suite::Bisnomial,
            Suite::Quasi,
            Suite::Rays,
            Suite::Q,
            Suite::Gf,
            Suite::Tables,
        ],
        other => vec![other],
    };
    for part in parts {
        match part {
            Suite::Bisnomial => checks.extend(bisnomial_checks()),
            Suite::Quasi => checks.extend(quasi_checks()),
            Suite::Rays => checks.extend(ray_checks()),
            Suite::Q => checks.extend(q_checks()),
            Suite::Gf => checks.extend(gf_checks()),
            Suite::Tables => errata.extend(PRINTED_TABLES.iter().flat_map(|t| t.errata())),
            Suite::All => unreachable!(),
        }
    }
    SuiteReport {
        suite,
        checks,
        errata,
    }
}

pub fn verify_document(suite: Suite) -> OutputDocument {
    OutputDocument {
        kind: Kind::Report,
        params: params([("command", "verify".into()), ("suite", suite.name().into())]),
        payload: Payload::Report(run_suite(suite)),
    }
}

//! Acceptance criteria, one line each. Exits nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_traits::pow;
use quasi_pascal::bisnomial::{
    bisnomial_by_demoivre, bisnomial_by_diagonal, bisnomial_by_expansion,
    bisnomial_by_longitudinal, bisnomial_by_nested_sum, bisnomial_row_by_expansion,
    verify_root_of_unity_bisnomial, BisnomialQuery,
};
use quasi_pascal::exact::ExactInt;
use quasi_pascal::q_analogue::{
    q_quasi, q_quasi_by_explicit, verify_q_binomial_recurrences, verify_q_sbonacci_recurrences,
    QQuasiQuery, QRoute,
};
use quasi_pascal::quasi::{
    quasi_by_demoivre_dual, quasi_by_explicit_binomial, quasi_by_explicit_multinomial,
    quasi_by_lattice_oracle, quasi_by_recurrence, quasi_by_spascal_link, quasi_row,
    verify_delannoy_correspondence, verify_root_of_unity_dual, QuasiQuery,
};
use quasi_pascal::rays::{
    ray_recurrence_mismatches, sbonacci, verify_alternating_lemma, verify_sbonacci,
};
use quasi_pascal::report::ray_grid;
use quasi_pascal::series_suite::{
    check_binomial_gf, check_q_quasi_gf, check_quasi_gf, check_ray_gf, DEFAULT_ORDER,
};
use quasi_pascal::tables::{QUADRABONACCI_TRIANGLE, TRIBONACCI_TRIANGLE};

const TOLERANCE: f64 = 1e-6;

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        passed,
        detail: detail.into(),
    }
}

fn timed(limit: Option<Duration>, f: impl FnOnce() -> Outcome) -> Outcome {
    let start = Instant::now();
    let mut out = f();
    let elapsed = start.elapsed();
    out.detail = format!("{} [{:.2?}]", out.detail, elapsed);
    if let Some(limit) = limit {
        if elapsed >= limit {
            out.passed = false;
            out.detail = format!("{} exceeds {:?}", out.detail, limit);
        }
    }
    out
}

fn ints(v: &[i64]) -> Vec<ExactInt> {
    v.iter().map(|&x| ExactInt::from(x)).collect()
}

fn printed_tribonacci_rows() -> Outcome {
    let mut mismatches = 0;
    let mut entries = 0;
    for (n, printed) in TRIBONACCI_TRIANGLE.rows.iter().enumerate() {
        let row = quasi_row(2, n as u32);
        mismatches += usize::from(row.len() != printed.len());
        for (k, &p) in printed.iter().enumerate() {
            entries += 1;
            mismatches += usize::from(row.get(k) != Some(&ExactInt::from(p)));
        }
    }
    let row8 = quasi_row(2, 8) == ints(&[1, 15, 85, 231, 321, 231, 85, 15, 1]);
    outcome(
        mismatches == 0 && entries == 55 && row8,
        format!("{entries} entries, {mismatches} mismatches"),
    )
}

fn quadrabonacci_errata() -> Outcome {
    let errata = QUADRABONACCI_TRIANGLE.errata();
    let listed: Vec<String> = errata
        .iter()
        .map(|e| {
            format!(
                "({},{}) printed {} recomputed {}",
                e.row, e.col, e.printed, e.recomputed
            )
        })
        .collect();
    outcome(!errata.is_empty(), listed.join("; "))
}

fn six_routes() -> Outcome {
    let mut cells = 0;
    let mut mismatches = Vec::new();
    for s in 1..=4 {
        for n in 0..=12 {
            for k in 0..=i64::from(n) {
                cells += 1;
                let q = QuasiQuery::new(s, n, k);
                let oracle = quasi_by_lattice_oracle(q).expect("n within the oracle limit");
                let routes = [
                    quasi_by_recurrence(q),
                    quasi_by_explicit_binomial(q),
                    quasi_by_explicit_multinomial(q),
                    quasi_by_spascal_link(q),
                    quasi_by_demoivre_dual(q),
                ];
                if routes.iter().any(|v| v != &oracle) {
                    mismatches.push((s, n, k));
                }
            }
        }
    }
    outcome(
        cells == 364 && mismatches.is_empty(),
        format!("{cells} cells, mismatches {mismatches:?}"),
    )
}

fn bisnomial_routes() -> Outcome {
    let mut failures = Vec::new();
    let mut cells = 0;
    for s in 1..=4u32 {
        for n in 0..=12u32 {
            for k in 0..=i64::from(s * n) {
                cells += 1;
                let q = BisnomialQuery::new(s, n, k);
                let e = bisnomial_by_expansion(q);
                let others = [
                    bisnomial_by_nested_sum(q),
                    bisnomial_by_longitudinal(q),
                    bisnomial_by_diagonal(q),
                    bisnomial_by_demoivre(q),
                ];
                let mirror =
                    bisnomial_by_expansion(BisnomialQuery::new(s, n, i64::from(s * n) - k));
                if others.iter().any(|v| v != &e) || mirror != e {
                    failures.push((s, n, k));
                }
            }
            let sum: ExactInt = bisnomial_row_by_expansion(s, n).iter().sum();
            if sum != pow(ExactInt::from(s + 1), n as usize) {
                failures.push((s, n, -1));
            }
        }
    }
    outcome(
        failures.is_empty(),
        format!("{cells} cells, failures {failures:?}"),
    )
}

fn roots_of_unity() -> Outcome {
    let mut failures = Vec::new();
    for s in 2..=3u32 {
        for n in 0..=10u32 {
            for k in 0..=i64::from(s * n) {
                if !verify_root_of_unity_bisnomial(BisnomialQuery::new(s, n, k), TOLERANCE)
                    .unwrap_or(false)
                {
                    failures.push(("bisnomial", s, n, k));
                }
            }
            for k in 0..=i64::from(n) {
                if !verify_root_of_unity_dual(QuasiQuery::new(s, n, k), TOLERANCE).unwrap_or(false)
                {
                    failures.push(("quasi", s, n, k));
                }
            }
        }
    }
    outcome(
        failures.is_empty(),
        format!("tolerance {TOLERANCE:e}, failures {failures:?}"),
    )
}

fn sbonacci_sequences() -> Outcome {
    let fib = sbonacci(1, 10) == ints(&[0, 1, 1, 2, 3, 5, 8, 13, 21, 34]);
    let trib = sbonacci(2, 10) == ints(&[0, 1, 1, 2, 4, 7, 13, 24, 44, 81]);
    let recurrences = (1..=4).all(|s| verify_sbonacci(s, 30));
    outcome(
        fib && trib && recurrences,
        format!("fibonacci {fib}, tribonacci {trib}, recurrences {recurrences}"),
    )
}

fn transversal_recurrence() -> Outcome {
    let mut directions = 0;
    let mut failures = Vec::new();
    for (s, d) in ray_grid() {
        directions += 1;
        let from = d.recurrence_threshold(s);
        for m in ray_recurrence_mismatches(s, d, from, from + 14) {
            failures.push(format!(
                "s={s} (alpha,beta,r)=({},{},{}) n={}: {} vs {}",
                d.alpha(),
                d.beta(),
                d.r(),
                m.n,
                m.lhs,
                m.rhs
            ));
        }
    }
    let mut detail = format!("{directions} directions x 15 indices");
    if !failures.is_empty() {
        detail = format!(
            "{detail}, {} failures: {}",
            failures.len(),
            failures.join("; ")
        );
    }
    outcome(failures.is_empty(), detail)
}

fn generating_functions() -> Outcome {
    let mut failed = Vec::new();
    for k in 0..=12 {
        if !check_binomial_gf(k, DEFAULT_ORDER).is_ok_and(|r| r.passed()) {
            failed.push(format!("binomial k={k}"));
        }
    }
    for s in 1..=4 {
        for k in 0..=12 {
            if !check_quasi_gf(s, k, DEFAULT_ORDER).is_ok_and(|r| r.passed()) {
                failed.push(format!("quasi s={s} k={k}"));
            }
        }
    }
    for (s, d) in ray_grid() {
        if !check_ray_gf(s, d, DEFAULT_ORDER).is_ok_and(|r| r.passed()) {
            failed.push(format!("ray s={s} {d:?}"));
        }
    }
    for s in 1..=3 {
        for k in 0..=6 {
            if !check_q_quasi_gf(s, k, 12).is_ok_and(|r| r.passed()) {
                failed.push(format!("q-quasi s={s} k={k}"));
            }
        }
    }
    outcome(
        failed.is_empty(),
        format!("order {DEFAULT_ORDER}, failures {failed:?}"),
    )
}

fn q_layer() -> Outcome {
    let mut failed = Vec::new();
    for s in 1..=3 {
        for n in 0..=10 {
            for k in 0..=i64::from(n) {
                let q = QQuasiQuery::new(s, n, k);
                let a = q_quasi(q, QRoute::RecurrenceA);
                if a != q_quasi(q, QRoute::RecurrenceB) || a != q_quasi_by_explicit(q) {
                    failed.push(format!("routes s={s} n={n} k={k}"));
                }
                if a.eval_at_one() != quasi_by_recurrence(QuasiQuery::new(s, n, k)) {
                    failed.push(format!("q=1 s={s} n={n} k={k}"));
                }
            }
        }
        if !verify_q_sbonacci_recurrences(s, 12) {
            failed.push(format!("q-s-bonacci s={s}"));
        }
    }
    if !verify_q_binomial_recurrences(15) {
        failed.push("q-binomial recurrences".into());
    }
    outcome(failed.is_empty(), format!("failures {failed:?}"))
}

fn delannoy() -> Outcome {
    let bad: Vec<u32> = (1..=4)
        .filter(|&s| !verify_delannoy_correspondence(s, 12).unwrap_or(false))
        .collect();
    outcome(
        bad.is_empty(),
        format!("s in 1..=4, n <= 12, failing s {bad:?}"),
    )
}

fn alternating_lemma() -> Outcome {
    let mut cases = 0;
    let mut bad = Vec::new();
    for a in 0..=12 {
        for alpha in 0..=a {
            for b in 0..=12 {
                cases += 1;
                if !verify_alternating_lemma(a, b, alpha).unwrap_or(false) {
                    bad.push((a, b, alpha));
                }
            }
        }
    }
    outcome(bad.is_empty(), format!("{cases} cases, failures {bad:?}"))
}

type Criterion = (&'static str, Option<Duration>, fn() -> Outcome);

const CRITERIA: [Criterion; 11] = [
    (
        "printed s=2 triangle rows 0..9 reproduced",
        Some(Duration::from_secs(1)),
        printed_tribonacci_rows,
    ),
    ("quadrabonacci errata reported", None, quadrabonacci_errata),
    (
        "six quasi routes agree, s<=4, n<=12",
        Some(Duration::from_secs(30)),
        six_routes,
    ),
    (
        "five bisnomial routes, symmetry, row sums",
        None,
        bisnomial_routes,
    ),
    ("root-of-unity relations within 1e-6", None, roots_of_unity),
    ("s-bonacci diagonal sums", None, sbonacci_sequences),
    (
        "transversal recurrence from alpha*s+r",
        None,
        transversal_recurrence,
    ),
    (
        "generating functions at order 24",
        None,
        generating_functions,
    ),
    ("q-layer routes and recurrences", None, q_layer),
    ("Delannoy correspondence", None, delannoy),
    ("alternating lemma, a<=12", None, alternating_lemma),
];

fn main() -> ExitCode {
    let mut failed = 0;
    for (i, (name, limit, run)) in CRITERIA.into_iter().enumerate() {
        let result = timed(limit, run);
        failed += usize::from(!result.passed);
        let status = if result.passed { "PASS" } else { "FAIL" };
        println!("criterion {:>2} {status}: {name}: {}", i + 1, result.detail);
    }
    println!(
        "acceptance: {} of {} criteria passed",
        CRITERIA.len() - failed,
        CRITERIA.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

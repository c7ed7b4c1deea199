//! Acceptance gate: one PASS/FAIL line per criterion. The process fails on
//! any FAIL line not listed in `KNOWN_FAILURES`, and on any listed line that
//! unexpectedly passes.
//!
//! All identities are formal, so every comparison is exact equality of
//! rational coefficients; the only numeric tolerance is wall time.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use proptest::prelude::*;
use proptest::test_runner::{Config, TestCaseError, TestRunner};

use qdouble::partitions::{f1_partition_scan, representation_count};
use qdouble::registry::{
    basic_law_params, splitting_law, tail_law, Catalog, Severity, Status, Summary,
};
use qdouble::series::{int, LaurentSeries};
use qdouble::{double_series, SeriesId};

const THEOREM_ORDER: i64 = 200;
const THEOREM_TIME_LIMIT: Duration = Duration::from_secs(60);
const POSITIVITY_ORDER: i64 = 500;
const BOUND_ORDER: i64 = 300;
const LEMMA_ORDER: i64 = 100;
const LIMIT_ORDER: i64 = 150;
const CLASSICAL_ORDER: i64 = 100;
const BASIC_TRIALS: u64 = 100;
const BASIC_MAX_ORDER: i64 = 40;
const LAMBERT_ORDER: i64 = 300;
const LAMBERT_HEAD: [i64; 5] = [1, 2, 4, 8, 14];
const ORACLE_MAX_N: i64 = 40;
const RING_CASES: u32 = 200;
const RING_ORDER: i64 = 60;

/// Criteria whose stated expectation contradicts an independent oracle.
/// They are still checked as stated and still print FAIL.
const KNOWN_FAILURES: &[(&str, &str)] = &[(
    "6 first five theta coefficients are [1, 2, 4, 8, 14]",
    "the stated head disagrees with the brute-force product, while the Lambert identity itself holds",
)];

#[derive(Default)]
struct Gate {
    failed: Vec<String>,
    expected: Vec<String>,
    unexpected_pass: Vec<String>,
}

impl Gate {
    fn check(&mut self, label: &str, ok: bool, detail: impl AsRef<str>) {
        let known = KNOWN_FAILURES.iter().find(|(l, _)| *l == label);
        println!(
            "{} {label}: {}",
            if ok { "PASS" } else { "FAIL" },
            detail.as_ref()
        );
        match (ok, known) {
            (true, None) => {}
            (true, Some(_)) => self.unexpected_pass.push(label.to_string()),
            (false, Some((_, why))) => {
                println!("     known failure: {why}");
                self.expected.push(label.to_string());
            }
            (false, None) => self.failed.push(label.to_string()),
        }
    }

    fn info(&self, label: &str, detail: impl AsRef<str>) {
        println!("INFO {label}: {}", detail.as_ref());
    }
}

fn describe(s: &Summary) -> String {
    let bad: Vec<String> = s
        .reports
        .iter()
        .filter(|r| r.status != Status::Pass)
        .map(|r| r.to_string())
        .collect();
    let mut text = format!("{}/{} records pass", s.passed(), s.reports.len());
    if !bad.is_empty() {
        text.push_str(&format!("; {}", bad.join("; ")));
    }
    text
}

fn all_pass(s: &Summary) -> bool {
    !s.reports.is_empty() && s.reports.iter().all(|r| r.status == Status::Pass)
}

fn run(cat: &Catalog, patterns: &[&str], order: Option<i64>) -> Summary {
    let mut reports = Vec::new();
    let start = Instant::now();
    for p in patterns {
        reports.extend(cat.verify_matching(p, order, 1).reports);
    }
    Summary {
        reports,
        total_time: start.elapsed(),
    }
}

fn theorems(gate: &mut Gate, cat: &Catalog) {
    for id in ["thm-f1", "thm-f2", "thm-g"] {
        let r = cat.verify(id, Some(THEOREM_ORDER)).expect("registered");
        gate.check(
            &format!(
                "1 {id} to order {THEOREM_ORDER} within {}s",
                THEOREM_TIME_LIMIT.as_secs()
            ),
            r.status == Status::Pass && r.wall_time < THEOREM_TIME_LIMIT,
            r.to_string(),
        );
    }
}

fn positivity(gate: &mut Gate, cat: &Catalog) {
    let s = run(cat, &["positivity-*"], Some(POSITIVITY_ORDER));
    gate.check(
        &format!("2 F1, F2, G nonnegative to order {POSITIVITY_ORDER}"),
        all_pass(&s) && s.reports.len() == 3,
        describe(&s),
    );
    let r = cat
        .verify("bound-f1", Some(BOUND_ORDER))
        .expect("registered");
    gate.check(
        &format!("2 F1 - (q+q^3)/(1-q^3) nonnegative to order {BOUND_ORDER}"),
        r.status == Status::Pass,
        r.to_string(),
    );
    for id in ["bound-f2", "bound-g"] {
        let r = cat.verify(id, Some(BOUND_ORDER)).expect("registered");
        match r.severity {
            Severity::Hard => gate.check(
                &format!("2 {id} (promoted) to order {BOUND_ORDER}"),
                r.status == Status::Pass,
                r.to_string(),
            ),
            Severity::Info => gate.info(
                &format!("2 {id} (informational) to order {BOUND_ORDER}"),
                r.to_string(),
            ),
        }
    }
}

fn lemmas(gate: &mut Gate, cat: &Catalog) {
    let s = run(
        cat,
        &[
            "lemma-a2",
            "lemma-a2m[*",
            "lemma-aprime1[*",
            "lemma-aprime2[*",
            "lemma-b2",
            "lemma-b2m[*",
            "lemma-bprime[*",
        ],
        Some(LEMMA_ORDER),
    );
    // 1 + 5 + 6 + 6 + 1 + 5 + 6
    gate.check(
        &format!("3 family closed forms to order {LEMMA_ORDER}"),
        all_pass(&s) && s.reports.len() == 30,
        describe(&s),
    );
}

fn telescoping(gate: &mut Gate, cat: &Catalog) {
    let s = run(cat, &["telescope-*", "chain-*"], None);
    let orders_ok = s.reports.iter().all(|r| (80..=100).contains(&r.order));
    gate.check(
        "4 telescoping relations and finite chains at order 80-100",
        all_pass(&s) && orders_ok,
        describe(&s),
    );
    let s = run(cat, &["help-id-1", "help-2-double-1"], Some(LIMIT_ORDER));
    gate.check(
        &format!("4 limit identities to order {LIMIT_ORDER}"),
        all_pass(&s) && s.reports.len() == 2,
        describe(&s),
    );
}

fn classical(gate: &mut Gate, cat: &Catalog) {
    let s = run(
        cat,
        &["heine*", "qbinom*", "contiguous*"],
        Some(CLASSICAL_ORDER),
    );
    gate.check(
        &format!("5 Heine, q-binomial and contiguous instances to order {CLASSICAL_ORDER}"),
        all_pass(&s),
        describe(&s),
    );
    let mut bad = Vec::new();
    let mut max_order = 0;
    for trial in 0..BASIC_TRIALS {
        let (start, step, m, n, order) = basic_law_params(trial);
        max_order = max_order.max(order);
        let (l, r) = splitting_law(start, step, m, n, order).expect("split law");
        if !LaurentSeries::equal_to_order(&l, &r, order).unwrap() {
            bad.push(format!("split trial {trial}"));
        }
        let (l, r) = tail_law(start, step, n, order).expect("tail law");
        if !LaurentSeries::equal_to_order(&l, &r, order).unwrap() {
            bad.push(format!("tail trial {trial}"));
        }
    }
    gate.check(
        &format!(
            "5 splitting and tail laws, {BASIC_TRIALS} random trials at order <= {BASIC_MAX_ORDER}"
        ),
        bad.is_empty() && max_order <= BASIC_MAX_ORDER,
        if bad.is_empty() {
            format!("all trials agree (max order {max_order})")
        } else {
            bad.join(", ")
        },
    );
}

/// `(q^2;q^2)_inf^2 / (q;q^2)_inf^2` to `q^(len-1)` with plain integer vectors.
fn brute_theta_head(len: usize) -> Vec<i64> {
    let mut s = vec![0i64; len];
    s[0] = 1;
    for _ in 0..2 {
        for e in (2..len).step_by(2) {
            for i in (e..len).rev() {
                s[i] -= s[i - e];
            }
        }
        for e in (1..len).step_by(2) {
            for i in e..len {
                s[i] += s[i - e];
            }
        }
    }
    s
}

fn lambert(gate: &mut Gate, cat: &Catalog) {
    let r = cat
        .verify("lambert-theta", Some(LAMBERT_ORDER))
        .expect("registered");
    gate.check(
        &format!("6 Lambert series = theta product to order {LAMBERT_ORDER}"),
        r.status == Status::Pass,
        r.to_string(),
    );
    let head = brute_theta_head(5);
    gate.check(
        &format!("6 first five theta coefficients are {LAMBERT_HEAD:?}"),
        head == LAMBERT_HEAD,
        format!("brute-force product gives {head:?}"),
    );
}

fn oracles(gate: &mut Gate) {
    let mut bad = Vec::new();
    for id in SeriesId::ALL {
        let s = double_series(id, ORACLE_MAX_N);
        for n in 0..=ORACLE_MAX_N {
            let count = representation_count(id, n as u64).value();
            if s.coeff(n).unwrap() != int(count) {
                bad.push(format!("{id}({n})"));
            }
            if id == SeriesId::F1 && f1_partition_scan(n as u32).value() != count {
                bad.push(format!("scan({n})"));
            }
        }
    }
    gate.check(
        &format!("7 representation oracle = series for N <= {ORACLE_MAX_N}, F1 scan agrees"),
        bad.is_empty(),
        if bad.is_empty() {
            "all agree".to_string()
        } else {
            bad.join(", ")
        },
    );
    let spots: [(SeriesId, i64, &[i64]); 3] = [
        (SeriesId::F1, 1, &[1, 0, 1, 1, 0]),
        (SeriesId::F2, 2, &[1, 1, 2]),
        (SeriesId::G, 2, &[1, 0, 1, 1, 1]),
    ];
    let mut bad = Vec::new();
    for (id, from, want) in spots {
        let s = double_series(id, 10);
        for (i, &w) in want.iter().enumerate() {
            let n = from + i as i64;
            let oracle = representation_count(id, n as u64).value();
            if oracle != w || s.coeff(n).unwrap() != int(w) {
                bad.push(format!(
                    "{id}({n}): oracle {oracle}, series {}, expected {w}",
                    s.coeff(n).unwrap()
                ));
            }
        }
    }
    gate.check(
        "7 spot values F1(1..5), F2(2..4), G(2..6)",
        bad.is_empty(),
        if bad.is_empty() {
            "all match".to_string()
        } else {
            bad.join("; ")
        },
    );
}

fn arb_series() -> impl Strategy<Value = LaurentSeries> {
    (-3i64..=3, prop::collection::vec(-5i64..=5, 0..10))
        .prop_map(|(offset, c)| LaurentSeries::from_integers(offset, &c, RING_ORDER))
}

fn unit_series() -> impl Strategy<Value = LaurentSeries> {
    (-3i64..=3, 1i64..=4, prop::collection::vec(-5i64..=5, 0..10)).prop_map(
        |(offset, lead, mut c)| {
            c.insert(0, lead);
            LaurentSeries::from_integers(offset, &c, RING_ORDER)
        },
    )
}

fn agree(x: &LaurentSeries, y: &LaurentSeries) -> std::result::Result<(), TestCaseError> {
    let n = x.order().min(y.order());
    prop_assert!(
        LaurentSeries::equal_to_order(x, y, n).unwrap(),
        "{x} vs {y}"
    );
    Ok(())
}

fn ring_config() -> Config {
    Config {
        failure_persistence: None,
        ..Config::with_cases(RING_CASES)
    }
}

fn algebra(gate: &mut Gate, cat: &Catalog) {
    let mut runner = TestRunner::new(ring_config());
    let ring = runner.run(&(arb_series(), arb_series(), arb_series()), |(a, b, c)| {
        agree(&(&a + &b), &(&b + &a))?;
        agree(&(&(&a + &b) + &c), &(&a + &(&b + &c)))?;
        agree(&(&a * &b), &(&b * &a))?;
        agree(&(&(&a * &b) * &c), &(&a * &(&b * &c)))?;
        agree(&(&a * &(&b + &c)), &(&(&a * &b) + &(&a * &c)))?;
        agree(&(&a + &LaurentSeries::zero(RING_ORDER)), &a)?;
        agree(&(&a * &LaurentSeries::one(RING_ORDER)), &a)?;
        prop_assert!((&a + &(-&a)).is_zero());
        Ok(())
    });
    gate.check(
        &format!("8 ring axioms, {RING_CASES} cases at order {RING_ORDER}"),
        ring.is_ok(),
        ring.map(|_| "no counterexample".to_string())
            .unwrap_or_else(|e| e.to_string()),
    );
    let mut runner = TestRunner::new(ring_config());
    let inverse = runner.run(&(unit_series(), arb_series()), |(u, b)| {
        let inv = u.invert().unwrap();
        agree(&(&u * &inv), &LaurentSeries::one(RING_ORDER))?;
        agree(&u.checked_div(&u).unwrap(), &LaurentSeries::one(RING_ORDER))?;
        agree(&(&b.checked_div(&u).unwrap() * &u), &b)?;
        Ok(())
    });
    gate.check(
        &format!("8 inverse laws, {RING_CASES} cases at order {RING_ORDER}"),
        inverse.is_ok(),
        inverse
            .map(|_| "no counterexample".to_string())
            .unwrap_or_else(|e| e.to_string()),
    );
    let jobs = std::thread::available_parallelism()
        .map(|n| n.get())
        .unwrap_or(1);
    let s = cat.verify_all(None, jobs);
    let non_integral: Vec<&str> = s
        .reports
        .iter()
        .filter(|r| !r.integral)
        .map(|r| r.id.as_str())
        .collect();
    gate.check(
        "8 every registered identity has integer coefficients",
        non_integral.is_empty(),
        if non_integral.is_empty() {
            format!("{} records at default order", s.reports.len())
        } else {
            non_integral.join(", ")
        },
    );
}

fn main() -> ExitCode {
    let cat = Catalog::standard();
    let mut gate = Gate::default();
    let start = Instant::now();
    theorems(&mut gate, &cat);
    positivity(&mut gate, &cat);
    lemmas(&mut gate, &cat);
    telescoping(&mut gate, &cat);
    classical(&mut gate, &cat);
    lambert(&mut gate, &cat);
    oracles(&mut gate);
    algebra(&mut gate, &cat);
    println!(
        "acceptance: {} unexpected failure(s), {} known failure(s), {} unexpected pass(es) ({:.1}s)",
        gate.failed.len(),
        gate.expected.len(),
        gate.unexpected_pass.len(),
        start.elapsed().as_secs_f64()
    );
    for label in &gate.unexpected_pass {
        println!("known failure now passes, update KNOWN_FAILURES: {label}");
    }
    if gate.failed.is_empty() && gate.unexpected_pass.is_empty() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

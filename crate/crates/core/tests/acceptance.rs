//! Acceptance run: one PASS/FAIL line per criterion.
//!
//! Exits nonzero when a criterion fails that is not listed in `KNOWN_FAILURES`.

mod common;

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::test_runner::{Config, TestRunner};
use weylchar::charlib::{dim_identity, verify_eigen, CharacterCache};
use weylchar::csop::{a_coeff, b_coeffs, ground_energy, Delta1Operator, Provenance};
use weylchar::error::Error;
use weylchar::fixture::{load_fixture, Record, RecordKey};
use weylchar::{Algebra, Weight, ZPolynomial};

use common::props;

/// `(λ₈, ρ)` is 29; the stated 31 cannot hold.
const KNOWN_FAILURES: &[u32] = &[7];

const BCOEFFS_LIMIT: Duration = Duration::from_secs(1);
const TIER1_PAIR_LIMIT: Duration = Duration::from_secs(30);
const TIER2_TOTAL_LIMIT: Duration = Duration::from_secs(2 * 3600);
const SWEEP_LIMIT: Duration = Duration::from_secs(600);
const STRUCTURAL_LIMIT: Duration = Duration::from_secs(1);
const ORACLE_LIMIT: Duration = Duration::from_secs(60);
const ORACLE_MAX_LABEL: i64 = 4;

const B_EXPECTED: [i64; 8] = [192, 288, 392, 600, 480, 360, 240, 120];
const TIER1: [(usize, usize); 15] = [
    (8, 8), (1, 8), (1, 1), (7, 8), (2, 8), (1, 7), (6, 8), (1, 2),
    (3, 8), (1, 6), (1, 3), (5, 8), (1, 5), (1, 4), (4, 8),
];
const TIER2: [(usize, usize); 18] = [
    (7, 7), (2, 7), (2, 2), (6, 7), (3, 7), (2, 6), (2, 3), (2, 5), (2, 4),
    (5, 7), (6, 6), (3, 6), (3, 5), (3, 3), (4, 7), (5, 6), (3, 4), (4, 6),
];
const HEAVY: [(usize, usize); 3] = [(4, 4), (4, 5), (5, 5)];
const SECOND_ORDER: [[i64; 8]; 10] = [
    [0, 0, 0, 0, 0, 0, 0, 2],
    [1, 0, 0, 0, 0, 0, 0, 1],
    [2, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 1, 1],
    [0, 1, 0, 0, 0, 0, 0, 1],
    [1, 0, 0, 0, 0, 0, 1, 0],
    [0, 0, 0, 0, 0, 1, 0, 1],
    [0, 0, 0, 0, 0, 0, 2, 0],
    [1, 1, 0, 0, 0, 0, 0, 0],
    [0, 0, 1, 0, 0, 0, 0, 1],
];
const POSITIVE_ROOTS: usize = 120;
const RHO_SQUARED: i64 = 620;
const GROUND_COEFF: i64 = 1240;
const LAMBDA8_RHO: i64 = 31;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: String) -> Outcome {
    Outcome { pass, detail }
}

fn e8() -> Algebra {
    Algebra::from_type("E8").unwrap()
}

fn records(name: &str) -> Vec<Record> {
    load_fixture(&common::data_file(name), 8).unwrap()
}

fn table() -> BTreeMap<(usize, usize), ZPolynomial> {
    records("operator.txt")
        .into_iter()
        .filter_map(|r| match r.key {
            RecordKey::A(j, k) => Some(((j, k), r.poly)),
            _ => None,
        })
        .collect()
}

fn characters(name: &str) -> Vec<(Weight, ZPolynomial)> {
    records(name)
        .into_iter()
        .map(|r| match r.key {
            RecordKey::Chi(m) => (m, r.poly),
            _ => panic!("line {}: not a character record", r.line),
        })
        .collect()
}

fn zero_based((j, k): (usize, usize)) -> (usize, usize) {
    (j - 1, k - 1)
}

fn fmt_secs(d: Duration) -> String {
    format!("{:.2}s", d.as_secs_f64())
}

fn bcoeffs() -> Outcome {
    let t = Instant::now();
    let b = b_coeffs(&e8()).unwrap();
    let elapsed = t.elapsed();
    let expected: Vec<BigInt> = B_EXPECTED.iter().map(|&x| BigInt::from(x)).collect();
    let pass = b == expected && elapsed < BCOEFFS_LIMIT;
    let got: Vec<String> = b.iter().map(|x| x.to_string()).collect();
    outcome(pass, format!("b = [{}] in {}", got.join(", "), fmt_secs(elapsed)))
}

/// Computes `pairs` in order, storing them into `op`; returns mismatches and
/// the slowest pair.
fn compute_pairs(
    cache: &CharacterCache,
    table: &BTreeMap<(usize, usize), ZPolynomial>,
    op: &mut Delta1Operator,
    pairs: &[(usize, usize)],
) -> (Vec<String>, Duration) {
    let alg = cache.algebra().clone();
    let mut bad = Vec::new();
    let mut slowest = Duration::ZERO;
    for &pair in pairs {
        let (j, k) = zero_based(pair);
        let t = Instant::now();
        let got = a_coeff(&alg, j, k, cache);
        slowest = slowest.max(t.elapsed());
        match got {
            Ok(a) if a == table[&(j, k)] => op.set_a(j, k, a, Provenance::Computed).unwrap(),
            Ok(_) => bad.push(format!("a{}{} differs", pair.0, pair.1)),
            Err(e) => bad.push(format!("a{}{}: {e}", pair.0, pair.1)),
        }
    }
    (bad, slowest)
}

fn tier1(cache: &CharacterCache, table: &BTreeMap<(usize, usize), ZPolynomial>, op: &mut Delta1Operator) -> Outcome {
    let (bad, slowest) = compute_pairs(cache, table, op, &TIER1);
    let pass = bad.is_empty() && slowest < TIER1_PAIR_LIMIT;
    outcome(pass, format!("{}/15 match, slowest pair {} {}", 15 - bad.len(), fmt_secs(slowest), bad.join("; ")))
}

fn tier2(cache: &CharacterCache, table: &BTreeMap<(usize, usize), ZPolynomial>, op: &mut Delta1Operator) -> Outcome {
    let t = Instant::now();
    let (bad, _) = compute_pairs(cache, table, op, &TIER2);
    let elapsed = t.elapsed();
    let fallback: Vec<String> = cache.fallback_used().iter().map(|w| w.to_string()).collect();
    let pass = bad.is_empty() && elapsed < TIER2_TOTAL_LIMIT;
    outcome(
        pass,
        format!(
            "{}/18 match in {}, table characters used: [{}] {}",
            18 - bad.len(),
            fmt_secs(elapsed),
            fallback.join(" "),
            bad.join("; ")
        ),
    )
}

fn second_order() -> Outcome {
    let cache = CharacterCache::new(e8());
    let mut matched = 0;
    let mut skipped = Vec::new();
    let mut bad = Vec::new();
    let mut recomputed = Vec::new();
    for (m, expected) in characters("second_order.txt") {
        match cache.character_poly(&m) {
            Ok(chi) if chi == expected => {
                matched += 1;
                recomputed.push(m);
            }
            Ok(_) => bad.push(format!("{m} differs")),
            Err(Error::BudgetExceeded { .. }) => skipped.push(m.to_string()),
            Err(e) => bad.push(format!("{m}: {e}")),
        }
    }
    let missing: Vec<String> = SECOND_ORDER
        .iter()
        .map(|l| Weight::new(l.to_vec()))
        .filter(|w| !recomputed.contains(w))
        .map(|w| format!("{w} not recomputed"))
        .collect();
    let pass = bad.is_empty() && missing.is_empty();
    outcome(
        pass,
        format!(
            "{matched} recomputed and matching, {} beyond budget [{}] {}{}",
            skipped.len(),
            skipped.join(" "),
            bad.join("; "),
            missing.join("; ")
        ),
    )
}

fn eigen_sweep(op: &Delta1Operator) -> Outcome {
    let alg = e8();
    let t = Instant::now();
    let mut count = 0;
    let mut bad = Vec::new();
    for name in ["second_order.txt", "higher_order.txt"] {
        for (m, chi) in characters(name) {
            count += 1;
            match verify_eigen(&alg, &m, &chi, op) {
                Ok(r) if r.holds => {}
                Ok(_) => bad.push(format!("{m}")),
                Err(e) => bad.push(format!("{m}: {e}")),
            }
        }
    }
    let elapsed = t.elapsed();
    let computed = op.completeness().iter().filter(|(_, p)| *p == Some(Provenance::Computed)).count();
    let pass = bad.is_empty() && op.is_complete() && elapsed < SWEEP_LIMIT;
    outcome(
        pass,
        format!(
            "{}/{count} records hold, operator {computed} computed + {} from table, {} {}",
            count - bad.len(),
            op.completeness().len() - computed,
            fmt_secs(elapsed),
            bad.join("; ")
        ),
    )
}

fn dimensions() -> Outcome {
    let alg = e8();
    let mut count = 0;
    let mut bad = Vec::new();
    for name in ["second_order.txt", "higher_order.txt"] {
        for (m, chi) in characters(name) {
            count += 1;
            if !dim_identity(&alg, &m, &chi).map(|d| d.holds).unwrap_or(false) {
                bad.push(m.to_string());
            }
        }
    }
    outcome(bad.is_empty(), format!("{}/{count} records hold {}", count - bad.len(), bad.join(" ")))
}

fn structural() -> Outcome {
    let alg = e8();
    let rho = alg.weyl_vector();
    let mut parts = Vec::new();
    let mut pass = true;
    let mut check = |name: &str, f: &dyn Fn() -> (bool, String)| {
        let t = Instant::now();
        let (ok, got) = f();
        let elapsed = t.elapsed();
        let ok = ok && elapsed < STRUCTURAL_LIMIT;
        pass &= ok;
        parts.push(format!("{name} {} ({got}, {})", if ok { "ok" } else { "WRONG" }, fmt_secs(elapsed)));
    };
    check("|R+|", &|| {
        let n = alg.positive_roots().len();
        (n == POSITIVE_ROOTS, n.to_string())
    });
    check("(rho,rho)", &|| {
        let v = alg.form(&rho, &rho).unwrap();
        (v == BigRational::from_integer(RHO_SQUARED.into()), v.to_string())
    });
    check("E0", &|| {
        let ok = (1..=5).all(|k| {
            let kappa = BigRational::new(k.into(), 3.into());
            ground_energy(&alg, &kappa).unwrap().0 == BigRational::from_integer(GROUND_COEFF.into()) * &kappa * &kappa
        });
        (ok, format!("{}*k^2", ground_energy(&alg, &BigRational::from_integer(1.into())).unwrap()))
    });
    check("(l8,rho)", &|| {
        let v = alg.form(&Weight::fundamental(8, 7), &rho).unwrap();
        (v == BigRational::from_integer(LAMBDA8_RHO.into()), format!("{v}, expected {LAMBDA8_RHO}"))
    });
    outcome(pass, parts.join(", "))
}

fn oracles() -> Outcome {
    let t = Instant::now();
    let mut bad = Vec::new();
    for (ty, o) in [("A1", common::a1()), ("A2", common::a2())] {
        if let Err(e) = common::check_tensor(ty, &o, ORACLE_MAX_LABEL) {
            bad.push(format!("{ty} tensor: {e}"));
        }
        if let Err(e) = common::check_characters(ty, &o, ORACLE_MAX_LABEL) {
            bad.push(format!("{ty} characters: {e}"));
        }
    }
    let elapsed = t.elapsed();
    outcome(
        bad.is_empty() && elapsed < ORACLE_LIMIT,
        format!("A1, A2 labels <= {ORACLE_MAX_LABEL} in {} {}", fmt_secs(elapsed), bad.join("; ")),
    )
}

fn properties() -> Outcome {
    let mut bad = Vec::new();
    let mut suites = 0;
    let mut run = |name: String, f: &dyn Fn(&mut TestRunner) -> Result<(), String>| {
        suites += 1;
        let mut runner = TestRunner::new(Config {
            failure_persistence: None,
            ..Config::with_cases(props::CASES)
        });
        if let Err(e) = f(&mut runner) {
            bad.push(format!("{name}: {e}"));
        }
    };
    for (ty, rank, max) in [("A2", 2, 4), ("A3", 3, 3), ("D4", 4, 2)] {
        run(format!("path independence {ty}"), &|r| {
            r.run(&props::weight(rank, max), |m| props::path_independent(ty, &m)).map_err(|e| e.to_string())
        });
        run(format!("leading coefficient {ty}"), &|r| {
            r.run(&props::weight(rank, max), |m| props::normalized(ty, &m)).map_err(|e| e.to_string())
        });
        run(format!("Freudenthal sums {ty}"), &|r| {
            r.run(&props::weight(rank, max + 1), |m| props::freudenthal_sum(ty, &m)).map_err(|e| e.to_string())
        });
        run(format!("round trip {ty}"), &|r| {
            r.run(&props::poly(rank), |p| props::round_trip(&p)).map_err(|e| e.to_string())?;
            r.run(&props::weight(rank, max), |m| props::round_trip(&props::cache(ty).character_poly(&m).unwrap()))
                .map_err(|e| e.to_string())
        });
    }
    outcome(
        bad.is_empty(),
        format!("{}/{suites} suites, {} cases each {}", suites - bad.len(), props::CASES, bad.join("; ")),
    )
}

fn main() {
    let alg = e8();
    let table = table();
    let cache = CharacterCache::new(alg.clone());
    cache.add_fallbacks(&records("second_order.txt")).unwrap();
    let mut op = Delta1Operator::new(&alg).unwrap();

    let mut results: Vec<(u32, &str, Outcome)> = Vec::new();
    results.push((1, "b-coefficients", bcoeffs()));
    results.push((2, "a_jk tier 1", tier1(&cache, &table, &mut op)));
    results.push((3, "a_jk tier 2", tier2(&cache, &table, &mut op)));
    for pair in HEAVY {
        let (j, k) = zero_based(pair);
        op.set_a(j, k, table[&(j, k)].clone(), Provenance::LoadedFromFixture).unwrap();
    }
    results.push((4, "second-order characters", second_order()));
    results.push((5, "eigen-equation sweep", eigen_sweep(&op)));
    results.push((6, "dimension identity", dimensions()));
    results.push((7, "structural constants", structural()));
    results.push((8, "rank <= 2 oracles", oracles()));
    results.push((9, "property suites", properties()));

    let mut unexpected = 0;
    for (n, name, o) in &results {
        let verdict = if o.pass { "PASS" } else { "FAIL" };
        let known = !o.pass && KNOWN_FAILURES.contains(n);
        if !o.pass && !known {
            unexpected += 1;
        }
        println!("{verdict} {n} {name}: {}{}", o.detail.trim_end(), if known { " [known]" } else { "" });
    }
    let failed = results.iter().filter(|(_, _, o)| !o.pass).count();
    println!("{} criteria, {failed} failed, {unexpected} unexpected", results.len());
    if unexpected > 0 {
        std::process::exit(1);
    }
}

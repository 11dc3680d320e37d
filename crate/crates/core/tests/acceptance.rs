//! Acceptance gate: one PASS/FAIL line per criterion. All comparisons are
//! exact; the only tolerances are the wall-clock limits.

use std::time::{Duration, Instant};

use qcancel::cli::{run_jobs, Job};
use qcancel::qmatrix::{build_word, mat_trace, word_product, Triangular, WordSpec};
use qcancel::qscalar::valid_orders;
use qcancel::qtensor::telement_from_terms;
use qcancel::sl2q::{pbw_mul, tautological_point};
use qcancel::theorems::{check_count, check_frobenius, check_qbinom_vanishing, check_sn_trace, Status};
use qcancel::{QAlgebra, QLaurent, Ring};
use rand::SeedableRng;

mod common;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let took = start.elapsed();
    ensure(took < limit, || format!("took {took:?}, limit {limit:?}"))
}

/// Monomials of the five-factor trace as listed, one string per term.
const UULUL_TRACE: [&str; 10] = [
    "a1 a2 a3 a4 a5",
    "a1 a2 a3 b4 b5",
    "a1 b2 b3 a4 a5",
    "a1 b2 b3 b4 b5",
    "a1 b2 a3^-1 a4^-1 b5",
    "b1 a2^-1 b3 a4 a5",
    "b1 a2^-1 b3 b4 b5",
    "b1 a2^-1 a3^-1 a4^-1 b5",
    "a1^-1 a2^-1 b3 b4 a5^-1",
    "a1^-1 a2^-1 a3^-1 a4^-1 a5^-1",
];

fn canonical_term(listed: &str) -> String {
    listed
        .split(' ')
        .map(|f| if f.contains('^') { f.to_string() } else { format!("{f}^1") })
        .collect::<Vec<_>>()
        .join("*")
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let spec = WordSpec::parse("UULUL").map_err(|e| e.to_string())?;
    let trace = mat_trace(&word_product(&build_word(&spec, None)).map_err(|e| e.to_string())?);
    let expect: Vec<String> = UULUL_TRACE.iter().map(|t| canonical_term(t)).collect();
    let got = trace.render();
    ensure(got == expect.join(" + "), || format!("got {got}"))?;
    within(start, Duration::from_secs(1))?;
    Ok(format!("10 terms in listed order ({:?})", start.elapsed()))
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let mut jobs = Vec::new();
    for word in WordSpec::all_up_to(5) {
        for n in 1..=5 {
            for m in valid_orders(n) {
                jobs.push(Job::Main { word: word.clone(), n, m });
            }
        }
    }
    let reports = run_jobs(&jobs).map_err(|e| e.to_string())?;
    let failed: Vec<_> = reports.iter().filter(|r| !r.status.is_pass()).map(|r| &r.params).collect();
    ensure(jobs.len() >= 300, || format!("only {} configurations", jobs.len()))?;
    ensure(failed.is_empty(), || format!("{} failures, first {:?}", failed.len(), failed[0]))?;
    within(start, Duration::from_secs(300))?;
    Ok(format!("{} configurations ({:?})", jobs.len(), start.elapsed()))
}

fn criterion_3() -> Outcome {
    let spec = WordSpec::parse("UL").map_err(|e| e.to_string())?;
    for n in 2..=8u32 {
        let m = 2 * n;
        let r = run_jobs(&[Job::Main { word: spec.clone(), n, m }]).map_err(|e| e.to_string())?.remove(0);
        let ni = n as i32;
        let one = QLaurent::one();
        let expect = telement_from_terms(
            2,
            &[
                (vec![ni, ni], vec![0, 0], one.clone()),
                (vec![0, 0], vec![n, n], one.clone()),
                (vec![-ni, -ni], vec![0, 0], one),
            ],
            None,
        )
        .map_err(|e| e.to_string())?;
        ensure(r.status == Status::Pass, || format!("n={n} failed"))?;
        ensure(r.rhs == expect.render(), || format!("n={n}: rhs {}", r.rhs))?;
    }
    Ok("X^n + Y^n + X^-n for n = 2..8".into())
}

fn criterion_4() -> Outcome {
    let spec = WordSpec::parse("UULUL").map_err(|e| e.to_string())?;
    let mut counts = Vec::new();
    for (n, expect) in [(1u32, 10i128), (2, 98), (3, 970)] {
        let start = Instant::now();
        let r = check_count(&spec, n).map_err(|e| e.to_string())?;
        ensure(common::chebyshev_t_int(n, 10) == expect, || format!("recurrence T_{n}(10) != {expect}"))?;
        ensure(r.status == Status::Pass && r.lhs == expect.to_string(), || {
            format!("n={n}: count {} vs {}", r.lhs, expect)
        })?;
        if n == 3 {
            within(start, Duration::from_secs(30))?;
        }
        counts.push(r.lhs);
    }
    Ok(format!("counts {}", counts.join(", ")))
}

fn criterion_5() -> Outcome {
    let mut jobs = Vec::new();
    for word in WordSpec::all_up_to(4) {
        for n in 1..=4 {
            jobs.push(Job::Positivity { word: word.clone(), n });
        }
    }
    let reports = run_jobs(&jobs).map_err(|e| e.to_string())?;
    let bad = reports.iter().filter(|r| !r.status.is_pass()).count();
    ensure(bad == 0, || format!("{bad} configurations with negative coefficients"))?;
    Ok(format!("{} configurations", jobs.len()))
}

fn criterion_6() -> Outcome {
    for n in 0..=6 {
        let r = check_sn_trace(n).map_err(|e| e.to_string())?;
        ensure(r.status == Status::Pass, || format!("n={n}: {} vs {}", r.lhs, r.rhs))?;
    }
    let t = tautological_point();
    let s = t.e11.add(&t.e22);
    let s2 = pbw_mul(&s, &s);
    let two = s.scale(&QLaurent::constant(2));
    let expect2 = s2.sub(&s.one_like()).render();
    let expect3 = pbw_mul(&s2, &s).sub(&two).render();
    let r2 = check_sn_trace(2).map_err(|e| e.to_string())?;
    let r3 = check_sn_trace(3).map_err(|e| e.to_string())?;
    ensure(r2.lhs == expect2, || format!("n=2: {}", r2.lhs))?;
    ensure(r3.lhs == expect3, || format!("n=3: {}", r3.lhs))?;
    Ok("n = 0..6; n=2,3 match (a+d)^2-1 and (a+d)^3-2(a+d)".into())
}

fn criterion_7() -> Outcome {
    let mut jobs = Vec::new();
    for kind in [Triangular::Upper, Triangular::Lower] {
        for n in 0..=8 {
            jobs.push(Job::RhoOracle { kind, n });
        }
    }
    let reports = run_jobs(&jobs).map_err(|e| e.to_string())?;
    let bad = reports.iter().filter(|r| !r.status.is_pass()).count();
    ensure(bad == 0, || format!("{bad} mismatches"))?;
    Ok("U and L, n = 0..8".into())
}

fn criterion_8() -> Outcome {
    for n in 2..=12 {
        let r = check_qbinom_vanishing(n).map_err(|e| e.to_string())?;
        ensure(r.status == Status::Pass, || format!("qbinom n={n}: {}", r.lhs))?;
    }
    for n in 2..=10 {
        let r = check_frobenius(n, n).map_err(|e| e.to_string())?;
        ensure(r.status == Status::Pass, || format!("frobenius n={n}: {}", r.lhs))?;
    }
    let r = check_frobenius(4, 2).map_err(|e| e.to_string())?;
    ensure(r.status == Status::Fail, || "q=-1, n=4 unexpectedly passed".into())?;
    ensure(r.lhs == "2*X^2*Y^2", || format!("residual {}", r.lhs))?;
    Ok("qbinom n=2..12, frobenius n=2..10, q=-1 n=4 residual 2*X^2*Y^2".into())
}

fn criterion_9() -> Outcome {
    let mut rng = rand::rngs::StdRng::seed_from_u64(0x5eed);
    let mut ring_failures = 0;
    for i in 0..200 {
        let k = 1 + i % 3;
        let x = common::random_telement(&mut rng, k, None);
        let y = common::random_telement(&mut rng, k, None);
        let z = common::random_telement(&mut rng, k, None);
        ring_failures += common::ring_axiom_failures(&x, &y, &z);
    }
    let pbw_failures = (0..300)
        .filter(|_| !common::pbw_confluent(&common::random_word(&mut rng, 8)))
        .count();
    let words = WordSpec::all_up_to(4);
    let rho_failures = words
        .iter()
        .flat_map(|w| (0..=4).map(move |n| (w, n)))
        .filter(|(w, n)| !common::rho_antihom_holds(w, *n))
        .count();
    ensure(ring_failures + pbw_failures + rho_failures == 0, || {
        format!("ring {ring_failures}, pbw {pbw_failures}, rho {rho_failures}")
    })?;
    Ok(format!("200 ring triples, 300 PBW words, {} rho word/degree pairs", words.len() * 5))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("five-factor trace listing", criterion_1),
        ("main theorem, length <= 5, n <= 5", criterion_2),
        ("UL instance X^n + Y^n + X^-n", criterion_3),
        ("monomial count T_n(10)", criterion_4),
        ("positivity, length <= 4, n <= 4", criterion_5),
        ("trace of rho_n equals S_n(a+d)", criterion_6),
        ("rho_n closed form vs substitution", criterion_7),
        ("qbinom vanishing and frobenius", criterion_8),
        ("property suites", criterion_9),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(detail) => println!("PASS criterion {}: {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {}: {name}: {detail}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}

//! Acceptance checks. Prints one PASS or FAIL line per criterion and exits
//! nonzero if any fails. All comparisons are exact; each criterion also has
//! a wall-clock limit.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use narayana_core::arith::{gen_binomial, rat};
use narayana_core::dsl::{self, AlphaExpr, Atom, Basis, Expr, Index, Term};
use narayana_core::identities::{registry, run_suite, Status, SuiteReport, DEFAULT_SEED};
use narayana_core::lambda::{hall_littlewood_principal, sfraction, strinc_oracle};
use narayana_core::partitions::enumerate_partitions;
use narayana_core::poly::one_minus_q;
use narayana_core::sequences::{
    master_formula, narayana, narayana_alphabet, narayana_power_sum, narayana_schur, schroeder, SchroederKind,
};
use narayana_core::{Alphabet, Partition, PolyQQ, TruncSeries};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};

type Check = Result<String, String>;

fn p(coeffs: &[i64]) -> PolyQQ {
    PolyQQ::from_q_coeffs(coeffs)
}

fn expect_eq(what: &str, got: &PolyQQ, want: &PolyQQ) -> Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got}, want {want}"))
    }
}

fn narayana_table() -> Check {
    let goldens = [
        p(&[1]),
        p(&[1, 1]),
        p(&[1, 3, 1]),
        p(&[1, 6, 6, 1]),
        p(&[1, 10, 20, 10, 1]),
    ];
    for (i, want) in goldens.iter().enumerate() {
        expect_eq(&format!("C_{}", i + 1), &narayana(i + 1), want)?;
    }
    Ok("C_1..C_5 exact".into())
}

fn power_sums() -> Check {
    let goldens = [
        p(&[1]),
        p(&[1, 2]),
        p(&[1, 6, 3]),
        p(&[1, 12, 18, 4]),
        p(&[1, 20, 60, 40, 5]),
    ];
    for (i, want) in goldens.iter().enumerate() {
        let got = narayana_power_sum(i + 1).map_err(|e| e.to_string())?;
        expect_eq(&format!("p_{}(A)", i + 1), &got, want)?;
    }
    Ok("p_1..p_5 exact".into())
}

fn schur_table() -> Check {
    let table: [(&[u32], i64, [i64; 6]); 11] = [
        (&[6], 1, [1, 15, 50, 50, 15, 1]),
        (&[5, 1], -1, [0, 5, 30, 40, 14, 1]),
        (&[4, 2], -1, [0, 3, 8, 3, 0, 0]),
        (&[4, 1, 1], 1, [0, 4, 24, 34, 13, 1]),
        (&[3, 3], -1, [0, 1, 1, 1, 0, 0]),
        (&[3, 2, 1], 1, [0, 2, 7, 4, 0, 0]),
        (&[3, 1, 1, 1], -1, [0, 3, 20, 30, 12, 1]),
        (&[2, 2, 2], -1, [0, 0, 0, 1, 0, 0]),
        (&[2, 2, 1, 1], -1, [0, 1, 5, 3, 0, 0]),
        (&[2, 1, 1, 1, 1], 1, [0, 2, 16, 26, 11, 1]),
        (&[1, 1, 1, 1, 1, 1], -1, [0, 1, 10, 20, 10, 1]),
    ];
    let shapes = enumerate_partitions(6);
    if shapes.len() != table.len() {
        return Err(format!("{} partitions of 6", shapes.len()));
    }
    for (mu, (parts, sign, coeffs)) in shapes.iter().zip(table) {
        if mu.parts() != parts {
            return Err(format!("enumeration order: got {mu}, want {parts:?}"));
        }
        let got = narayana_schur(mu).map_err(|e| e.to_string())?;
        expect_eq(&format!("s_{mu}(A)"), &got, &p(&coeffs).scale_int(sign))?;
    }
    Ok("11 signed entries exact".into())
}

fn rectangles() -> Check {
    for k in 1..=6u32 {
        let want = (-PolyQQ::q()).pow(k * (k - 1) / 2);
        let square = Partition::new(vec![k; k as usize]).map_err(|e| e.to_string())?;
        expect_eq(&format!("s_{{{k}^{k}}}"), &narayana_schur(&square).map_err(|e| e.to_string())?, &want)?;
        if k > 1 {
            let short = Partition::new(vec![k - 1; k as usize]).map_err(|e| e.to_string())?;
            expect_eq(&format!("s_{{{}^{k}}}", k - 1), &narayana_schur(&short).map_err(|e| e.to_string())?, &want)?;
        }
    }
    Ok("k = 1..6".into())
}

fn principal_triangle() -> Check {
    for n in 1..=20usize {
        let target = narayana(n).subst_q(&one_minus_q()).map_err(|e| e.to_string())?.scale_int(n as i64 + 1);
        let hl = hall_littlewood_principal(n, n + 1).map_err(|e| e.to_string())?;
        expect_eq(&format!("P_{n}(1^{}) vs (n+1)C_n(1-q)", n + 1), &hl, &target)?;
        if n <= 8 {
            let oracle = strinc_oracle(n).map_err(|e| e.to_string())?;
            expect_eq(&format!("strinc({n})"), &oracle, &hl)?;
        }
    }
    Ok("oracle n <= 8, closed forms n <= 20".into())
}

fn suite_summary(report: &SuiteReport) -> Result<(), String> {
    if report.passed() {
        return Ok(());
    }
    let first = report.results.iter().find(|r| r.status == Status::Fail);
    Err(format!("{} failures, first {:?}", report.counts.fail, first))
}

fn full_suite() -> Check {
    let jobs = std::thread::available_parallelism().map_or(1, |n| n.get());
    let all = run_suite(None, 12, DEFAULT_SEED, jobs).map_err(|e| e.to_string())?;
    suite_summary(&all)?;
    let ids: Vec<String> = registry().iter().map(|i| i.id.to_string()).collect();
    for id in &ids {
        if !all.results.iter().any(|r| &r.id == id) {
            return Err(format!("{id} has an empty schedule"));
        }
    }
    let wide: Vec<String> = ["thm3", "thm3-schroeder", "thm4", "thm4-schroeder", "thm5", "thm5-schroeder"]
        .map(String::from)
        .to_vec();
    let deep = run_suite(Some(&wide), 20, DEFAULT_SEED, jobs).map_err(|e| e.to_string())?;
    suite_summary(&deep)?;
    Ok(format!(
        "{} ids, {} cases at max_n 12; {} cases for thm3..thm5 at n, r <= 20",
        ids.len(),
        all.counts.pass,
        deep.counts.pass
    ))
}

fn s_fraction() -> Check {
    let coeffs = sfraction(&narayana_alphabet(), 12).map_err(|e| e.to_string())?;
    for (i, c) in coeffs.iter().enumerate() {
        let want = if i % 2 == 0 { PolyQQ::one() } else { PolyQQ::q() };
        expect_eq(&format!("c_{}", i + 1), c, &want)?;
    }
    Ok(format!("{} coefficients", coeffs.len()))
}

fn schroeder_rows() -> Check {
    let small = [1, 1, 3, 11, 45, 197];
    let large = [1, 2, 6, 22, 90, 394];
    for n in 0..=5usize {
        let at_two = narayana(n).eval(&rat(2), &rat(0)).map_err(|e| e.to_string())?;
        if at_two != rat(small[n]) || schroeder(SchroederKind::Small, n) != small[n].into() {
            return Err(format!("C_{n}(2) = {at_two}, want {}", small[n]));
        }
        if schroeder(SchroederKind::Large, n) != large[n].into() {
            return Err(format!("large Schroeder {n}, want {}", large[n]));
        }
    }
    Ok("n = 0..5".into())
}

fn master() -> Check {
    for (eta, zeta) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
        for r in 1..=15 {
            let got = master_formula(eta, zeta, r).map_err(|e| format!("({eta},{zeta},{r}): {e}"))?;
            expect_eq(&format!("({eta},{zeta},{r})"), &got, &narayana(r))?;
        }
    }
    Ok("4 sign pairs, r <= 15".into())
}

fn runner(cases: u32) -> TestRunner {
    let config = Config {
        failure_persistence: None,
        ..Config::with_cases(cases)
    };
    TestRunner::new_with_rng(config, TestRng::deterministic_rng(RngAlgorithm::ChaCha))
}

/// `E_u = 1/H_{-u}` up to order 10.
fn e_series(a: &Alphabet) -> TruncSeries {
    let h = a.h_series(10);
    let h_neg = TruncSeries::from_fn(10, |k| if k % 2 == 0 { h.coeff(k).clone() } else { -h.coeff(k) });
    h_neg.inverse().expect("constant term 1")
}

fn arb_alphabet() -> impl Strategy<Value = Alphabet> {
    let value = prop_oneof![
        Just(PolyQQ::q()),
        Just(one_minus_q()),
        Just(PolyQQ::q2()),
        Just(&PolyQQ::q() * &PolyQQ::q2()),
    ];
    (-5i64..6, prop::collection::vec((-3i64..4, value), 0..3)).prop_map(|(c, atoms)| {
        atoms
            .into_iter()
            .fold(Alphabet::constant(c), |a, (k, v)| a.with_atom(rat(k), v))
    })
}

fn arb_expr() -> impl Strategy<Value = Expr> {
    let atom = prop_oneof![
        (0u64..30).prop_map(Atom::Int),
        Just(Atom::Q),
        Just(Atom::BigQ),
        Just(Atom::Q2),
        Just(Atom::BigQ2),
    ];
    let alpha = prop::collection::vec((any::<bool>(), prop::option::of(1u64..9), atom), 1..5).prop_map(|terms| {
        AlphaExpr {
            terms: terms
                .into_iter()
                .map(|(negative, multiplier, atom)| Term { negative, multiplier, atom, offset: 0 })
                .collect(),
        }
    });
    let degree = (prop_oneof![Just(Basis::H), Just(Basis::E), Just(Basis::P)], 0usize..30, alpha.clone())
        .prop_map(|(basis, k, alpha)| Expr::BasisApp { basis, index: Index::Degree(k), alpha });
    let shape = prop::collection::vec(1u32..6, 1..5).prop_map(Partition::from_unsorted);
    let schur = (shape, alpha).prop_map(|(mu, alpha)| Expr::BasisApp { basis: Basis::S, index: Index::Shape(mu), alpha });
    let principal = (0usize..40, 0usize..40).prop_map(|(r, n)| Expr::PrincipalHL { r, n });
    prop_oneof![degree, schur, principal]
}

fn fuzz() -> Check {
    const ADDITIVITY: u32 = 500;
    const PASCAL: u32 = 10_000;
    const ROUND_TRIP: u32 = 1_000;
    runner(ADDITIVITY)
        .run(&(arb_alphabet(), arb_alphabet()), |(a, b)| {
            let hs = (&a + &b).h_series(10);
            prop_assert_eq!(hs, a.h_series(10).mul(&b.h_series(10)));
            let es = e_series(&(&a + &b));
            prop_assert_eq!(es, e_series(&a).mul(&e_series(&b)));
            Ok(())
        })
        .map_err(|e| format!("additivity: {e}"))?;
    runner(PASCAL)
        .run(&(-60i64..60, 1i64..40), |(a, k)| {
            prop_assert_eq!(gen_binomial(a, k), gen_binomial(a - 1, k) + gen_binomial(a - 1, k - 1));
            Ok(())
        })
        .map_err(|e| format!("pascal: {e}"))?;
    runner(ROUND_TRIP)
        .run(&arb_expr(), |e| {
            let text = e.to_string();
            let back = dsl::parse(&text).map_err(|err| TestCaseError::fail(format!("{text}: {err}")))?;
            prop_assert_eq!(&back, &e);
            prop_assert_eq!(back.to_string(), text);
            Ok(())
        })
        .map_err(|e| format!("round trip: {e}"))?;
    Ok(format!("additivity {ADDITIVITY}, pascal {PASCAL}, round trip {ROUND_TRIP}"))
}

struct Criterion {
    name: &'static str,
    limit: Duration,
    check: fn() -> Check,
}

fn main() -> ExitCode {
    let secs = Duration::from_secs;
    let criteria = [
        Criterion { name: "narayana golden table", limit: secs(1), check: narayana_table },
        Criterion { name: "narayana power sums", limit: secs(1), check: power_sums },
        Criterion { name: "schur table of weight 6", limit: secs(5), check: schur_table },
        Criterion { name: "rectangular schur values", limit: secs(30), check: rectangles },
        Criterion { name: "principal specialization triangle", limit: secs(60), check: principal_triangle },
        Criterion { name: "full identity suite", limit: secs(300), check: full_suite },
        Criterion { name: "s-fraction", limit: secs(1), check: s_fraction },
        Criterion { name: "schroeder rows", limit: secs(1), check: schroeder_rows },
        Criterion { name: "master formula", limit: secs(30), check: master },
        Criterion { name: "property fuzzing", limit: secs(600), check: fuzz },
    ];
    let mut failed = 0;
    for (i, c) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = (c.check)();
        let elapsed = start.elapsed();
        let timing = format!("{:.2}s, limit {}s", elapsed.as_secs_f64(), c.limit.as_secs());
        let verdict = match outcome {
            Ok(detail) if elapsed <= c.limit => format!("PASS {:>2} {} [{timing}] {detail}", i + 1, c.name),
            Ok(detail) => format!("FAIL {:>2} {} [{timing}] too slow; {detail}", i + 1, c.name),
            Err(why) => format!("FAIL {:>2} {} [{timing}] {why}", i + 1, c.name),
        };
        if verdict.starts_with("FAIL") {
            failed += 1;
        }
        println!("{verdict}");
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

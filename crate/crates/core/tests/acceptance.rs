//! Acceptance suite: one line per criterion.
//!
//! Runs without the libtest harness so the lines always reach the output.
//! Exits nonzero on any result other than the recorded one.

use std::process::ExitCode;
use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use overpart_core::identities::{verify, CheckStatus, IdentityName, CATALOG};
use overpart_core::overpartitions::{enumerate_overpartitions, oracle_table, ENUMERATION_LIMIT};
use overpart_core::parametrization::{verify_aw_numeric, verify_r_polynomial, RPolynomial};
use overpart_core::radu_sellers::{
    bound_v, certify, check_hypotheses, oracle_agreement, p_set, DeltaTuple,
};
use overpart_core::{ClaimStatus, Coefficient};

struct Outcome {
    passed: bool,
    note: String,
}

fn outcome(passed: bool, note: impl Into<String>) -> Outcome {
    Outcome {
        passed,
        note: note.into(),
    }
}

fn theorem_one() -> Outcome {
    let table = oracle_table(80 * 100 + 72);
    let mut bad = Vec::new();
    for t in [8u64, 52, 68, 72] {
        let claim = table.check_progression(80, t, 25, 100).unwrap();
        if !claim.holds() {
            bad.push(format!("{claim:?}"));
        }
    }
    outcome(
        bad.is_empty(),
        format!("pbar(80n+t) mod 25, t in {{8,52,68,72}}, 0<=n<=100, exact; {bad:?}"),
    )
}

fn theorem_two() -> Outcome {
    let table = oracle_table(135 * 50 + 117);
    let ok = [63u64, 117]
        .iter()
        .all(|&t| table.check_progression(135, t, 5, 50).unwrap().holds());
    outcome(ok, "pbar(135n+t) mod 5, t in {63,117}, 0<=n<=50, exact")
}

fn radu_sellers() -> Outcome {
    let cases = [
        (DeltaTuple::theorem_two(), vec![63u64, 117], 37i64),
        (DeltaTuple::mod_25(8).unwrap(), vec![8, 72], 71),
        (DeltaTuple::mod_25(52).unwrap(), vec![52, 68], 71),
    ];
    let mut problems = Vec::new();
    for (tuple, expected_p, expected_floor) in cases {
        let label = format!("{}n+{}", tuple.m, tuple.t);
        let p: Vec<u64> = p_set(&tuple).unwrap().into_iter().collect();
        if p != expected_p {
            problems.push(format!("{label}: P = {p:?}"));
        }
        let floor = bound_v(&tuple).unwrap().floor;
        if floor != expected_floor {
            problems.push(format!("{label}: floor v = {floor}"));
        }
        let h = check_hypotheses(&tuple).unwrap();
        if h.rows.len() != 8 || !h.passed() {
            problems.push(format!("{label}: hypotheses {:?}", h.first_failure()));
        }
        match certify(&tuple) {
            Ok(c)
                if c.certified()
                    && c.claims.iter().all(|cl| {
                        cl.checked_through == expected_floor as u64
                            && cl.status
                                == ClaimStatus::Certified {
                                    conditional_on_delta_star: true,
                                }
                    }) => {}
            other => problems.push(format!("{label}: certify {other:?}")),
        }
    }
    outcome(
        problems.is_empty(),
        format!("P sets, floor v = 37/71/71, 8 hypotheses each, certify through floor v, exact; {problems:?}"),
    )
}

/// Returns the outcome and whether it matches the recorded result: every
/// entry passes except `dissect_16n4`, whose printed right side differs from
/// the oracle at q^10 (6 against 21 mod 25).
fn catalog() -> (Outcome, bool) {
    let mut failing = Vec::new();
    let mut recorded = true;
    for name in CATALOG {
        let check = verify(name, name.suite_order()).unwrap();
        if check.passed() {
            continue;
        }
        failing.push(name.as_str());
        let m = check.first_mismatch.clone().unwrap();
        recorded &= name == IdentityName::Dissect16n4
            && check.status == CheckStatus::Fail
            && m.exponent == 10
            && (m.lhs.clone(), m.rhs.clone())
                == (Coefficient::Residue(6), Coefficient::Residue(21));
    }
    let corrected = verify(IdentityName::Dissect16n4Corrected, 300).unwrap();
    recorded &= failing == ["dissect_16n4"] && corrected.passed();
    let note = format!(
        "entries 1-11 at order 300 (pentagonal_gap at 10000), exact equality in stated modulus; \
         failing: {failing:?}; dissect_16n4_corrected at 300: {}",
        corrected.status.as_str()
    );
    (outcome(failing.is_empty(), note), recorded)
}

fn symbolic() -> Outcome {
    let mut problems = Vec::new();
    let common = [
        (
            RPolynomial::R1,
            "25/4096 * p * (1-p)^6 * (1+p)^2 * (2+p)^3 * k^12",
        ),
        (RPolynomial::R2, "25/4096 * p * (1+2p)^-3 * (2+p)^3 * k^6"),
    ];
    for (target, printed) in common {
        let check = verify_r_polynomial(target).unwrap();
        let expected: Vec<BigRational> = target
            .fixture()
            .expected_poly
            .iter()
            .map(|&c| BigRational::from_integer(BigInt::from(c)))
            .collect();
        if !check.passed()
            || check.reduced.poly != expected
            || check.reduced.common.to_string() != printed
        {
            problems.push(format!("{target:?}: {check:?}"));
        }
    }
    outcome(problems.is_empty(), format!("13 coefficients of R1 and R2, factor 25/4096, common monomials, bit-exact; {problems:?}"))
}

fn cross_validation() -> Outcome {
    let aw = verify_aw_numeric(60).unwrap();
    let mut problems = Vec::new();
    if !aw.passed() {
        problems.push(format!("{aw:?}"));
    }
    let tuples = [
        (DeltaTuple::theorem_two(), 135 * 50 + 117 + 1),
        (DeltaTuple::mod_25(8).unwrap(), 80 * 100 + 72 + 1),
        (DeltaTuple::mod_25(52).unwrap(), 80 * 100 + 72 + 1),
    ];
    for (tuple, order) in tuples {
        // Covers both the certify expansion and the desk-scale progressions.
        if let Some(n) = oracle_agreement(&tuple, order).unwrap() {
            problems.push(format!(
                "{}n+{}: c_r({n}) differs from pbar mod {}",
                tuple.m, tuple.t, tuple.u
            ));
        }
    }
    outcome(
        problems.is_empty(),
        format!("parametrization series at order 60 (exact rationals); c_r = pbar mod u through 6868/8073 terms; {problems:?}"),
    )
}

fn oracle_independence() -> Outcome {
    let table = oracle_table(ENUMERATION_LIMIT);
    let agree = (0..=ENUMERATION_LIMIT)
        .all(|n| table.get(n) == Some(&BigInt::from(enumerate_overpartitions(n).unwrap())));
    let small = table.get(0) == Some(&BigInt::from(1)) && table.get(3) == Some(&BigInt::from(8));
    outcome(
        agree && small,
        "DP oracle = enumeration for n <= 20; pbar(0) = 1, pbar(3) = 8",
    )
}

type Criterion = (u32, f64, fn() -> Outcome);

fn print_line(id: u32, limit: f64, secs: f64, o: &Outcome, suffix: &str) {
    let status = if o.passed { "PASS" } else { "FAIL" };
    println!(
        "criterion {id}: {status} ({secs:.2}s, expected < {limit}s) {}{suffix}",
        o.note
    );
}

fn timed<T>(run: impl FnOnce() -> T) -> (T, f64) {
    let start = Instant::now();
    let out = run();
    (out, start.elapsed().as_secs_f64())
}

fn main() -> ExitCode {
    let mut unexpected = 0;
    let plain: [Criterion; 3] = [
        (1, 10.0, theorem_one),
        (2, 10.0, theorem_two),
        (3, 30.0, radu_sellers),
    ];
    for (id, limit, run) in plain {
        let (o, secs) = timed(run);
        print_line(id, limit, secs, &o, "");
        unexpected += usize::from(!o.passed);
    }

    let ((o, recorded), secs) = timed(catalog);
    let suffix = if !o.passed && recorded {
        " [recorded defect: the printed right side is false mod 25]"
    } else {
        ""
    };
    print_line(4, 60.0, secs, &o, suffix);
    unexpected += usize::from(!o.passed && !recorded);

    let rest: [Criterion; 3] = [
        (5, 1.0, symbolic),
        (6, 60.0, cross_validation),
        (7, 1.0, oracle_independence),
    ];
    for (id, limit, run) in rest {
        let (o, secs) = timed(run);
        print_line(id, limit, secs, &o, "");
        unexpected += usize::from(!o.passed);
    }

    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{unexpected} criterion result(s) differ from the recorded outcome");
        ExitCode::FAILURE
    }
}

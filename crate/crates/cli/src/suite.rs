//! Named check suites behind `fibsum verify` and `fibsum identities`.

use fibsum_core::construct::sum_interval;
use fibsum_core::fibonacci::{check_lemma1, corollary3_sides, corollary4_sides};
use fibsum_core::search::verify_theorem_range_with;
use fibsum_core::{
    entry_sum, extremal_pattern_matrix, fib, inverse_sum_via_determinant, invert_unit_triangular,
    sample_g_matrix, BigInt, BigRational, Error, IntMatrix, Matrix, Triangular01,
};
use serde_json::json;

use crate::report::VerificationReport;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    All,
    #[value(name = "theorem-range", alias = "theorem")]
    TheoremRange,
    Corollaries,
    Pattern,
    #[value(name = "remark-formula")]
    RemarkFormula,
    #[value(name = "g-sampling")]
    GSampling,
}

#[derive(Debug, Clone)]
pub struct SuiteParams {
    pub n: Option<usize>,
    pub jobs: Option<usize>,
    pub samples: u64,
    pub seed: u64,
}

pub fn run_suite(
    suite: Suite,
    p: &SuiteParams,
    report: &mut VerificationReport,
) -> Result<(), Error> {
    match suite {
        Suite::All => {
            for s in [
                Suite::TheoremRange,
                Suite::Corollaries,
                Suite::Pattern,
                Suite::RemarkFormula,
                Suite::GSampling,
            ] {
                run_suite(s, p, report)?;
            }
            Ok(())
        }
        Suite::TheoremRange => theorem_range(p, report),
        Suite::Corollaries => {
            identities(p.n.unwrap_or(90), report);
            Ok(())
        }
        Suite::Pattern => pattern(p, report),
        Suite::RemarkFormula => remark_formula(p, report),
        Suite::GSampling => g_sampling(p, report),
    }
}

fn theorem_range(p: &SuiteParams, report: &mut VerificationReport) -> Result<(), Error> {
    let sizes: Vec<usize> = match p.n {
        Some(n) => vec![n],
        None => (3..=10).collect(),
    };
    for n in sizes {
        let r = verify_theorem_range_with(n, 20, p.jobs)?;
        report.push(
            "theorem-range",
            json!({"n": n, "method": r.method}),
            r.passed(),
            format!(
                "interval [{}, {}]; missing {:?}; unexpected {:?}",
                r.lo, r.hi, r.missing, r.unexpected
            ),
        );
    }
    Ok(())
}

/// Sum identities and both corollary identities up to `n_max`.
pub fn identities(n_max: usize, report: &mut VerificationReport) {
    let lemma = check_lemma1(n_max);
    report.push(
        "fibonacci-sums",
        json!({"n_max": n_max}),
        lemma.passed(),
        format!("failures {:?}", lemma.failures),
    );
    let bad3: Vec<usize> = (5..=n_max)
        .filter(|&n| corollary3_sides(n).map(|(l, r)| l != r).unwrap_or(true))
        .collect();
    report.push(
        "corollary-l2-identity",
        json!({"n_min": 5, "n_max": n_max}),
        bad3.is_empty(),
        format!("failing n {bad3:?}"),
    );
    let bad4: Vec<usize> = (6..=n_max)
        .filter(|&n| corollary4_sides(n).map(|(l, r)| l != r).unwrap_or(true))
        .collect();
    report.push(
        "corollary-l3-identity",
        json!({"n_min": 6, "n_max": n_max}),
        bad4.is_empty(),
        format!("failing n {bad4:?}"),
    );
}

fn pattern(p: &SuiteParams, report: &mut VerificationReport) -> Result<(), Error> {
    let sizes: Vec<usize> = match p.n {
        Some(n) => vec![n],
        None => (5..=40).collect(),
    };
    for n in sizes {
        for l in [2usize, 3] {
            let (a, predicted) = extremal_pattern_matrix(n, l)?;
            let inv = a.inverse();
            let f = fib(n as i64 - 1)?;
            let expected = if (n + l) % 2 == 0 {
                BigInt::from(2) - f
            } else {
                BigInt::from(2) + f
            };
            let sum = entry_sum(&inv);
            report.push(
                "pattern",
                json!({"n": n, "l": l}),
                inv == predicted && sum == expected,
                format!(
                    "predicted inverse {}; sum {sum}, expected {expected}",
                    if inv == predicted {
                        "matches"
                    } else {
                        "differs"
                    }
                ),
            );
        }
    }
    Ok(())
}

fn remark_fixtures() -> [(&'static str, IntMatrix, i64); 2] {
    let m = Matrix::from_i64_rows(&[
        [1, 0, 1, 0, 1, 0, 0],
        [0, 1, 1, 0, 1, 0, 0],
        [0, 0, 1, 1, 1, 1, 1],
        [0, 0, 0, 1, 1, 0, 0],
        [0, 0, 0, 0, 1, 1, 1],
        [0, 0, 1, 0, 0, 1, 0],
        [0, 0, 1, 0, 0, 0, 1],
    ])
    .expect("square");
    let n = Matrix::from_i64_rows(&[
        [1, 0, 1, 0, 1, 1, 1],
        [0, 1, 1, 0, 1, 1, 1],
        [0, 0, 1, 1, 0, 0, 1],
        [0, 0, 0, 1, 1, 1, 1],
        [0, 0, 0, 0, 1, 0, 0],
        [0, 0, 0, 0, 0, 1, 0],
        [1, 1, 0, 0, 0, 0, 1],
    ])
    .expect("square");
    [("M", m, -7), ("N", n, 11)]
}

fn remark_formula(p: &SuiteParams, report: &mut VerificationReport) -> Result<(), Error> {
    for (name, m, expected) in remark_fixtures() {
        let s = inverse_sum_via_determinant(&m)?;
        report.push(
            "remark-fixture",
            json!({"matrix": name}),
            s == BigRational::from_integer(expected.into()),
            format!("S = {s}, expected {expected}"),
        );
    }
    let n_max = p.n.unwrap_or(5).min(6);
    for n in 1..=n_max {
        let mut mismatches = 0u64;
        let states = 1u64 << (n * (n - 1) / 2);
        for word in 0..states {
            let a = Triangular01::from_word(n, word).to_matrix::<BigInt>();
            let direct = entry_sum(&invert_unit_triangular(&a)?);
            if inverse_sum_via_determinant(&a)? != BigRational::from_integer(direct) {
                mismatches += 1;
            }
        }
        report.push(
            "remark-formula",
            json!({"n": n}),
            mismatches == 0,
            format!("{states} matrices, {mismatches} mismatches"),
        );
    }
    let singular = Matrix::<BigInt>::from_i64_rows(&[[1, 1], [1, 1]])?;
    let rejected = inverse_sum_via_determinant(&singular) == Err(Error::Singular);
    report.push(
        "remark-singular",
        json!({"n": 2}),
        rejected,
        "singular input must be rejected",
    );
    Ok(())
}

fn g_sampling(p: &SuiteParams, report: &mut VerificationReport) -> Result<(), Error> {
    let sizes: Vec<usize> = match p.n {
        Some(n) => vec![n],
        None => (3..=10).collect(),
    };
    for n in sizes {
        let (lo, hi) = sum_interval(n)?;
        let (lo_q, hi_q) = (
            BigRational::from_integer(lo.clone()),
            BigRational::from_integer(hi.clone()),
        );
        let mut outside = Vec::new();
        for i in 0..p.samples {
            let seed = p.seed.wrapping_add(i);
            let s = sample_g_matrix(n, seed, 16)?.inverse_sum();
            if s < lo_q || s > hi_q {
                outside.push(seed);
            }
        }
        report.push(
            "g-sampling",
            json!({"n": n, "samples": p.samples, "seed": p.seed, "denominator_bound": 16}),
            outside.is_empty(),
            format!("interval [{lo}, {hi}]; seeds outside {outside:?}"),
        );
    }
    Ok(())
}

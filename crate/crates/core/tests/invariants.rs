use fibsum_core::linalg::{format_matrix, parse_matrix};
use fibsum_core::search::Family;
use fibsum_core::*;
use num_bigint::BigInt;
use proptest::prelude::*;

#[test]
fn w_scan_is_triangular_scan_shifted_by_one() {
    for n in 3..=6 {
        let tri = enumerate_triangular(n).unwrap();
        let w = enumerate_w_determinants(n).unwrap();
        let shifted: Vec<(ExactSum, u64)> = tri
            .counts()
            .iter()
            .map(|(s, c)| (*s + ExactSum::from_integer(1), *c))
            .collect();
        let got: Vec<(ExactSum, u64)> = w.counts().iter().map(|(s, c)| (*s, *c)).collect();
        assert_eq!(got, shifted, "n = {n}");
    }
}

#[test]
fn enumeration_is_deterministic_across_job_counts() {
    for family in [Family::Triangular, Family::W] {
        let one = search::enumerate(family, 6, Some(1)).unwrap();
        let many = search::enumerate(family, 6, Some(4)).unwrap();
        assert_eq!(one, many);
        assert_eq!(one.to_json(), many.to_json());
    }
}

#[test]
fn l3_nine_example_sum() {
    let (a, _) = extremal_pattern_matrix(9, 3).unwrap();
    assert_eq!(entry_sum(&a.inverse()), BigInt::from(-19));
}

#[test]
fn constructed_matrices_survive_the_text_format() {
    let a = construct_with_sum(9, &BigInt::from(-15))
        .unwrap()
        .to_matrix::<BigInt>();
    let text = format_matrix(&a);
    let back: IntMatrix = parse_matrix(&text).unwrap();
    assert_eq!(back, a);
    let inv = invert_exact(&remark_like()).unwrap();
    let back: RationalMatrix = parse_matrix(&format_matrix(&inv)).unwrap();
    assert_eq!(back, inv);
}

fn remark_like() -> IntMatrix {
    Matrix::from_i64_rows(&[[1, 1, 0], [0, 1, 1], [1, 0, 1]]).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn w_construction_keeps_pattern(n in 3usize..16, frac in 0.0f64..1.0) {
        let (lo, hi) = construct::determinant_interval(n).unwrap();
        let span = i64::try_from(&hi - &lo).unwrap();
        let d = &lo + BigInt::from((span as f64 * frac) as i64);
        let w = construct_w_matrix(n, &d).unwrap();
        prop_assert!(WMatrix::from_matrix(w.matrix().clone()).is_ok());
        prop_assert_eq!(w.determinant(), d);
    }

    #[test]
    fn row_sums_never_exceed_the_dominant_vector(n in 2usize..40, seed in any::<u64>()) {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let a = Triangular01::from_fn(n, |_, _| rng.gen_bool(0.5));
        let v = row_sum_vector(&a);
        prop_assert_eq!(&v.values()[0], &BigInt::from(1));
        prop_assert!(RowSumVector::dominant(n).absolutely_dominates(&v));
        let (lo, hi) = construct::sum_interval(n.max(3)).unwrap();
        if n >= 3 {
            let s = a.inverse_sum();
            prop_assert!(s >= lo && s <= hi);
        }
    }
}

mod common;

use common::*;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn generated_paths_are_valid(params in path_params()) {
        path_validity(params)?;
    }

    #[test]
    fn binomial_conventions(top in -25i64..25, k in -3i64..12) {
        binom_conventions((top, k))?;
    }

    #[test]
    fn substitution_is_multiplicative(p in small_poly(), q in small_poly()) {
        substitution_homomorphism((p, q))?;
    }

    #[test]
    fn series_truncation_is_consistent(params in truncation_params()) {
        truncation_consistency(params)?;
    }

    #[test]
    fn wall_counts_partition_points(params in simplex_params()) {
        wall_partition(params)?;
    }
}

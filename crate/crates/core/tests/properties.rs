//! Randomized invariants on small acyclic bound quiver algebras.

mod common;

use common::{case, check_adjunction, check_algebra, check_decompose, check_ext_duality, shape};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn algebra_is_associative_with_complete_idempotents(s in shape()) {
        check_algebra(&s)?;
    }

    #[test]
    fn tensor_hom_adjunction_dimensions((s, u, v, coeffs) in case()) {
        check_adjunction(&s, u, v, &coeffs)?;
    }

    #[test]
    fn decomposition_is_sound((s, u, v, coeffs) in case()) {
        check_decompose(&s, u, v, &coeffs)?;
    }

    #[test]
    fn ext_is_symmetric_under_duality((s, u, v, coeffs) in case()) {
        check_ext_duality(&s, u, v, &coeffs)?;
    }
}

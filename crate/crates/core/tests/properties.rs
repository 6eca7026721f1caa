//! Property tests for invariants that hold on all inputs, not just the
//! exhaustively swept ranges.

use proptest::prelude::*;

use twistalg::cd_oracle::PairTree;
use twistalg::clifford::{blade_mul_oracle, Blade};
use twistalg::dyadic::{bit_sum, parity_sign};
use twistalg::twist::{cayley_dickson_sign, clifford_sign};
use twistalg::{convolution, AlgebraContext, Element, Twist};

fn small_element() -> impl Strategy<Value = Element<i64>> {
    (0u32..=4).prop_flat_map(|n| {
        prop::collection::vec(-9i64..=9, 1usize << n)
            .prop_map(move |coeffs| Element::from_coeffs(n, coeffs).unwrap())
    })
}

fn builtin_twist() -> impl Strategy<Value = Twist> {
    prop::sample::select(Twist::builtins().to_vec())
}

proptest! {
    #[test]
    #[allow(clippy::identity_op)]
    fn xor_is_an_abelian_group(p: u32, q: u32, r: u32) {
        prop_assert_eq!(p ^ q, q ^ p);
        prop_assert_eq!(p ^ (q ^ r), (p ^ q) ^ r);
        prop_assert_eq!(p ^ p, 0);
        prop_assert_eq!(p ^ 0, p);
    }

    #[test]
    fn bit_sum_splits_over_xor_and_and(u: u32, v: u32) {
        prop_assert_eq!(bit_sum(u) + bit_sum(v), bit_sum(u ^ v) + 2 * bit_sum(u & v));
        prop_assert_eq!(
            parity_sign(bit_sum(u)) * parity_sign(bit_sum(v)),
            parity_sign(bit_sum(u ^ v))
        );
    }

    #[test]
    fn twists_evaluate_to_unit_signs(twist in builtin_twist(), p: u16, q: u16) {
        let s = twist.eval(u32::from(p), u32::from(q));
        prop_assert!(s == 1 || s == -1);
    }

    // The proper cancellation laws hold for cyd on arbitrary pairs, far
    // beyond the exhaustively checked range.
    #[test]
    fn cayley_dickson_proper_laws(p: u32, q: u32) {
        let s = cayley_dickson_sign(p, q);
        prop_assert_eq!(s * cayley_dickson_sign(q, q), cayley_dickson_sign(p ^ q, q));
        prop_assert_eq!(cayley_dickson_sign(p, p) * s, cayley_dickson_sign(p, p ^ q));
    }

    #[test]
    fn blade_factorization_matches_clifford_recursion(p in 0u32..1 << 12, q in 0u32..1 << 12) {
        let result = blade_mul_oracle(Blade::new(p), Blade::new(q));
        prop_assert_eq!(result.sign, clifford_sign(p, q));
        prop_assert_eq!(result.blade.index(), p ^ q);
    }

    #[test]
    fn element_text_round_trips(x in small_element()) {
        let parsed = Element::<i64>::parse(x.n(), &x.to_string()).unwrap();
        prop_assert_eq!(parsed, x);
    }

    #[test]
    fn shuffle_unshuffle_is_a_bijection(x in small_element()) {
        prop_assert_eq!(PairTree::unshuffle(&x).shuffle(), x);
    }

    #[test]
    fn convolution_is_commutative_and_trivial_twisted(
        (x, y) in (0u32..=4).prop_flat_map(|n| {
            let elem = prop::collection::vec(-9i64..=9, 1usize << n)
                .prop_map(move |coeffs| Element::from_coeffs(n, coeffs).unwrap());
            (elem.clone(), elem)
        })
    ) {
        prop_assert_eq!(convolution(&x, &y).unwrap(), convolution(&y, &x).unwrap());
        let ctx = AlgebraContext::new(Twist::Trivial, x.n()).unwrap();
        prop_assert_eq!(ctx.mul(&x, &y).unwrap(), convolution(&x, &y).unwrap());
    }

    #[test]
    fn conjugation_is_an_involution(twist in builtin_twist(), x in small_element()) {
        let ctx = AlgebraContext::new(twist, x.n()).unwrap();
        let conj = ctx.conjugate(&x).unwrap();
        prop_assert_eq!(ctx.conjugate(&conj).unwrap(), x);
    }

    // Bilinearity of the twisted product in the left argument.
    #[test]
    fn product_is_bilinear(
        (x, y, z) in (0u32..=3).prop_flat_map(|n| {
            let elem = prop::collection::vec(-9i64..=9, 1usize << n)
                .prop_map(move |coeffs| Element::from_coeffs(n, coeffs).unwrap());
            (elem.clone(), elem.clone(), elem)
        }),
        twist in builtin_twist(),
    ) {
        let ctx = AlgebraContext::new(twist, x.n()).unwrap();
        let lhs = ctx.mul(&(&x + &y), &z).unwrap();
        let rhs = &ctx.mul(&x, &z).unwrap() + &ctx.mul(&y, &z).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}

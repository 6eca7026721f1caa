//! Bit-level arithmetic of the group of non-negative integers under bitwise
//! exclusive-or, plus the bit-sum and triangular-number helpers the sign
//! functions are built from.
//!
//! Every element is its own inverse (p ⊕ p = 0), the identity is 0, and
//! G_n = {0, …, 2ⁿ−1} is closed under the operation.

use crate::error::{Error, Result};

/// An element of the XOR group: a non-negative integer read as a bitmask.
/// Indices below 2ⁿ live in the subgroup G_n.
pub type GroupElement = u32;

/// A twist value: always −1 or +1, kept as an integer so pointwise products
/// of twists are plain multiplication.
pub type Sign = i8;

/// Library-wide cap on dimension exponents; 4ⁿ tables past this are not
/// desk-scale.
pub const MAX_DIMENSION_EXP: u32 = 24;

/// Rejects dimension exponents above `cap` (and above the library-wide cap).
pub fn check_dimension(n: u32, cap: u32) -> Result<()> {
    let max = cap.min(MAX_DIMENSION_EXP);
    if n > max {
        return Err(Error::DimensionTooLarge { n, max });
    }
    Ok(())
}

/// The group product: bitwise exclusive-or of the binary representations.
#[inline]
pub fn xor_mul(p: GroupElement, q: GroupElement) -> GroupElement {
    p ^ q
}

/// Bitwise AND; two of the built-in twists are defined through it.
#[inline]
pub fn bit_and(p: GroupElement, q: GroupElement) -> GroupElement {
    p & q
}

/// Sum of the bits of the binary representation (the blade grade of i_p).
#[inline]
pub fn bit_sum(p: GroupElement) -> u32 {
    p.count_ones()
}

/// (−1)^k.
#[inline]
pub fn parity_sign(k: u32) -> Sign {
    if k & 1 == 0 {
        1
    } else {
        -1
    }
}

/// The triangular number k(k−1)/2.
#[inline]
pub fn triangular(k: u64) -> u64 {
    if k == 0 {
        0
    } else {
        k * (k - 1) / 2
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    #[test]
    fn xor_mul_worked_examples() {
        // 1001 ⊕ 1011 = 0010
        assert_eq!(xor_mul(9, 11), 2);
        // 1101 ⊕ 0110 = 1011
        assert_eq!(xor_mul(13, 6), 11);
        for p in 0..64 {
            assert_eq!(xor_mul(p, 0), p);
            assert_eq!(xor_mul(p, p), 0);
        }
    }

    #[test]
    fn xor_mul_doubling_laws() {
        for p in 0..64u32 {
            for q in 0..64u32 {
                let pq = xor_mul(p, q);
                assert_eq!(xor_mul(2 * p, 2 * q), 2 * pq);
                assert_eq!(xor_mul(2 * p, 2 * q + 1), 2 * pq + 1);
                assert_eq!(xor_mul(2 * p + 1, 2 * q), 2 * pq + 1);
                assert_eq!(xor_mul(2 * p + 1, 2 * q + 1), 2 * pq);
            }
        }
    }

    #[test]
    fn xor_group_laws_randomized() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
        for _ in 0..10_000 {
            let p: GroupElement = rng.random_range(0..1 << 16);
            let q: GroupElement = rng.random_range(0..1 << 16);
            let r: GroupElement = rng.random_range(0..1 << 16);
            assert_eq!(xor_mul(p, q), xor_mul(q, p));
            assert_eq!(xor_mul(p, xor_mul(q, r)), xor_mul(xor_mul(p, q), r));
        }
    }

    #[test]
    fn bit_sum_examples_and_recursion() {
        assert_eq!(bit_sum(0), 0);
        assert_eq!(bit_sum(13), 3); // 1101
        assert_eq!(bit_sum(6), 2); // 110
        for p in 0..1u32 << 12 {
            assert_eq!(bit_sum(2 * p), bit_sum(p));
            assert_eq!(bit_sum(2 * p + 1), bit_sum(p) + 1);
        }
    }

    // ⟨u⟩ + ⟨v⟩ = ⟨u⊕v⟩ + 2⟨u∧v⟩, exhaustively below 2^10.
    #[test]
    fn bit_sum_xor_and_identity_exhaustive() {
        for u in 0..1u32 << 10 {
            for v in 0..1u32 << 10 {
                assert_eq!(bit_sum(u) + bit_sum(v), bit_sum(u ^ v) + 2 * bit_sum(u & v));
            }
        }
    }

    // (−1)^⟨u⟩ (−1)^⟨v⟩ = (−1)^⟨u⊕v⟩ follows from the identity above.
    #[test]
    fn parity_sign_is_multiplicative_over_xor() {
        for u in 0..1u32 << 8 {
            for v in 0..1u32 << 8 {
                assert_eq!(
                    parity_sign(bit_sum(u)) * parity_sign(bit_sum(v)),
                    parity_sign(bit_sum(u ^ v))
                );
            }
        }
    }

    #[test]
    fn triangular_examples() {
        assert_eq!(triangular(0), 0);
        assert_eq!(triangular(2), 1);
        assert_eq!(triangular(4), 6);
    }

    #[test]
    fn dimension_cap_is_enforced() {
        assert!(check_dimension(24, MAX_DIMENSION_EXP).is_ok());
        let err = check_dimension(25, MAX_DIMENSION_EXP).unwrap_err();
        assert!(matches!(err, Error::DimensionTooLarge { n: 25, max: 24 }));
        assert!(matches!(
            check_dimension(13, 12).unwrap_err(),
            Error::DimensionTooLarge { n: 13, max: 12 }
        ));
    }
}

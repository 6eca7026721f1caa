//! Independent brute-force oracle for the Cayley-Dickson twist: the
//! recursive ordered-pair product, the shuffle embedding of pairs into
//! coefficient sequences, and the conjugation-free pair product whose twist
//! is the Hadamard sign.
//!
//! The pair representation exists only to cross-check the sign recursions;
//! it is never the runtime representation.

use crate::algebra::Element;
use crate::dyadic::{self, GroupElement, Sign};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Dimension-exponent cap for oracle sweeps.
pub const MAX_ORACLE_EXP: u32 = 8;

/// The recursive ordered-pair representation: a scalar leaf, or a pair of
/// equal-depth subtrees. Depth k encodes an element of the 2^k-dimensional
/// doubling algebra.
#[derive(Debug, Clone, PartialEq)]
pub enum PairTree<T: Scalar> {
    Leaf(T),
    Pair(Box<PairTree<T>>, Box<PairTree<T>>),
}

impl<T: Scalar> PairTree<T> {
    pub fn leaf(value: T) -> Self {
        PairTree::Leaf(value)
    }

    /// Pairs two equal-depth subtrees.
    pub fn pair(a: PairTree<T>, b: PairTree<T>) -> Result<Self> {
        if a.depth() != b.depth() {
            return Err(Error::DepthMismatch {
                left: a.depth(),
                right: b.depth(),
            });
        }
        Ok(PairTree::Pair(Box::new(a), Box::new(b)))
    }

    pub fn depth(&self) -> u32 {
        match self {
            PairTree::Leaf(_) => 0,
            PairTree::Pair(a, _) => a.depth() + 1,
        }
    }

    /// The zero tree of the given depth.
    pub fn zeros(depth: u32) -> Self {
        if depth == 0 {
            PairTree::Leaf(T::zero())
        } else {
            PairTree::Pair(
                Box::new(Self::zeros(depth - 1)),
                Box::new(Self::zeros(depth - 1)),
            )
        }
    }

    /// Conjugate: leaves are self-conjugate, (a,b)* = (a*, −b).
    pub fn conjugate(&self) -> Self {
        match self {
            PairTree::Leaf(v) => PairTree::Leaf(*v),
            PairTree::Pair(a, b) => PairTree::Pair(Box::new(a.conjugate()), Box::new(b.neg())),
        }
    }

    pub fn neg(&self) -> Self {
        match self {
            PairTree::Leaf(v) => PairTree::Leaf(-*v),
            PairTree::Pair(a, b) => PairTree::Pair(Box::new(a.neg()), Box::new(b.neg())),
        }
    }

    fn add(&self, other: &Self) -> Self {
        match (self, other) {
            (PairTree::Leaf(a), PairTree::Leaf(b)) => PairTree::Leaf(*a + *b),
            (PairTree::Pair(a, b), PairTree::Pair(c, d)) => {
                PairTree::Pair(Box::new(a.add(c)), Box::new(b.add(d)))
            }
            _ => unreachable!("equal depths enforced by construction"),
        }
    }

    fn sub(&self, other: &Self) -> Self {
        match (self, other) {
            (PairTree::Leaf(a), PairTree::Leaf(b)) => PairTree::Leaf(*a - *b),
            (PairTree::Pair(a, b), PairTree::Pair(c, d)) => {
                PairTree::Pair(Box::new(a.sub(c)), Box::new(b.sub(d)))
            }
            _ => unreachable!("equal depths enforced by construction"),
        }
    }

    /// The Cayley-Dickson product (a,b)(c,d) = (ac − db*, a*d + cb),
    /// bottoming out at scalar multiplication.
    pub fn cd_mul(x: &Self, y: &Self) -> Result<Self> {
        if x.depth() != y.depth() {
            return Err(Error::DepthMismatch {
                left: x.depth(),
                right: y.depth(),
            });
        }
        Ok(Self::cd_mul_unchecked(x, y))
    }

    fn cd_mul_unchecked(x: &Self, y: &Self) -> Self {
        match (x, y) {
            (PairTree::Leaf(a), PairTree::Leaf(c)) => PairTree::Leaf(*a * *c),
            (PairTree::Pair(a, b), PairTree::Pair(c, d)) => {
                let left =
                    Self::cd_mul_unchecked(a, c).sub(&Self::cd_mul_unchecked(d, &b.conjugate()));
                let right =
                    Self::cd_mul_unchecked(&a.conjugate(), d).add(&Self::cd_mul_unchecked(c, b));
                PairTree::Pair(Box::new(left), Box::new(right))
            }
            _ => unreachable!("depths checked on entry"),
        }
    }

    /// The conjugation-free pair product (a,b)(c,d) = (ac − bd, ad + bc).
    pub fn hadamard_mul(x: &Self, y: &Self) -> Result<Self> {
        if x.depth() != y.depth() {
            return Err(Error::DepthMismatch {
                left: x.depth(),
                right: y.depth(),
            });
        }
        Ok(Self::hadamard_mul_unchecked(x, y))
    }

    fn hadamard_mul_unchecked(x: &Self, y: &Self) -> Self {
        match (x, y) {
            (PairTree::Leaf(a), PairTree::Leaf(c)) => PairTree::Leaf(*a * *c),
            (PairTree::Pair(a, b), PairTree::Pair(c, d)) => {
                let left =
                    Self::hadamard_mul_unchecked(a, c).sub(&Self::hadamard_mul_unchecked(b, d));
                let right =
                    Self::hadamard_mul_unchecked(a, d).add(&Self::hadamard_mul_unchecked(b, c));
                PairTree::Pair(Box::new(left), Box::new(right))
            }
            _ => unreachable!("depths checked on entry"),
        }
    }

    /// Flattens the pair (x,y) into the interleaved sequence
    /// x₀,y₀,x₁,y₁,…, which carries the basis numbering i_{2n} = (i_n, 0),
    /// i_{2n+1} = (0, i_n).
    pub fn shuffle(&self) -> Element<T> {
        fn fill<T: Scalar>(tree: &PairTree<T>, out: &mut [T], start: usize, stride: usize) {
            match tree {
                PairTree::Leaf(v) => out[start] = *v,
                PairTree::Pair(a, b) => {
                    fill(a, out, start, stride * 2);
                    fill(b, out, start + stride, stride * 2);
                }
            }
        }
        let n = self.depth();
        let mut coeffs = vec![T::zero(); 1 << n];
        fill(self, &mut coeffs, 0, 1);
        Element::from_raw(n, coeffs)
    }

    /// Inverse of [`shuffle`]: splits an element into the pair of its even-
    /// and odd-indexed subsequences, recursively.
    ///
    /// [`shuffle`]: PairTree::shuffle
    pub fn unshuffle(e: &Element<T>) -> Self {
        fn build<T: Scalar>(coeffs: &[T], start: usize, stride: usize, depth: u32) -> PairTree<T> {
            if depth == 0 {
                PairTree::Leaf(coeffs[start])
            } else {
                PairTree::Pair(
                    Box::new(build(coeffs, start, stride * 2, depth - 1)),
                    Box::new(build(coeffs, start + stride, stride * 2, depth - 1)),
                )
            }
        }
        build(e.coeffs(), 0, 1, e.n())
    }
}

/// Extracts the twist sign by multiplying basis vectors through the pair
/// construction: i_p i_q must come out as ±i_{p⊕q}.
pub fn oracle_twist(p: GroupElement, q: GroupElement, n: u32) -> Result<Sign> {
    basis_sign(p, q, n, PairTree::cd_mul)
}

/// Same extraction under the conjugation-free product; the sign must be the
/// Hadamard twist (−1)^⟨p∧q⟩.
pub fn hadamard_oracle_twist(p: GroupElement, q: GroupElement, n: u32) -> Result<Sign> {
    basis_sign(p, q, n, PairTree::hadamard_mul)
}

fn basis_sign(
    p: GroupElement,
    q: GroupElement,
    n: u32,
    product: impl Fn(&PairTree<i64>, &PairTree<i64>) -> Result<PairTree<i64>>,
) -> Result<Sign> {
    dyadic::check_dimension(n, MAX_ORACLE_EXP)?;
    let dim = 1usize << n;
    if p as usize >= dim || q as usize >= dim {
        return Err(Error::DimensionMismatch {
            left: p.max(q) as usize,
            right: dim,
        });
    }
    let x = PairTree::unshuffle(&Element::<i64>::basis(n, p)?);
    let y = PairTree::unshuffle(&Element::<i64>::basis(n, q)?);
    let prod = product(&x, &y)?.shuffle();
    let expected = p ^ q;
    let mut sign = None;
    for (idx, &c) in prod.coeffs().iter().enumerate() {
        if c == 0 {
            continue;
        }
        if idx != expected as usize || (c != 1 && c != -1) || sign.is_some() {
            return Err(Error::NotSignedBasis { p, q });
        }
        sign = Some(c as Sign);
    }
    sign.ok_or(Error::NotSignedBasis { p, q })
}

/// Pass/fail counts of the oracle-equivalence sweeps at dimension exponent
/// `n`: the pair-product sign against the Cayley-Dickson recursion and the
/// conjugation-free sign against the Hadamard rule, over all pairs of G_n.
#[derive(Debug, Clone, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct OracleSweepReport {
    pub n: u32,
    pub pairs: usize,
    pub cd_mismatches: usize,
    pub hadamard_mismatches: usize,
}

impl OracleSweepReport {
    pub fn pass(&self) -> bool {
        self.cd_mismatches == 0 && self.hadamard_mismatches == 0
    }

    pub fn render_text(&self) -> String {
        format!(
            "oracle sweep over G_{} ({} pairs)\n  cayley-dickson vs cyd: {}\n  pair product vs hadamard: {}\n",
            self.n,
            self.pairs,
            if self.cd_mismatches == 0 {
                "pass".to_string()
            } else {
                format!("{} mismatches", self.cd_mismatches)
            },
            if self.hadamard_mismatches == 0 {
                "pass".to_string()
            } else {
                format!("{} mismatches", self.hadamard_mismatches)
            },
        )
    }
}

/// Runs both equivalence sweeps over every pair of G_n.
pub fn run_oracle_sweep(n: u32) -> Result<OracleSweepReport> {
    dyadic::check_dimension(n, MAX_ORACLE_EXP)?;
    let dim = 1u32 << n;
    let mut cd_mismatches = 0;
    let mut hadamard_mismatches = 0;
    for p in 0..dim {
        for q in 0..dim {
            if oracle_twist(p, q, n)? != crate::twist::cayley_dickson_sign(p, q) {
                cd_mismatches += 1;
            }
            let expected = crate::dyadic::parity_sign(crate::dyadic::bit_sum(p & q));
            if hadamard_oracle_twist(p, q, n)? != expected {
                hadamard_mismatches += 1;
            }
        }
    }
    Ok(OracleSweepReport {
        n,
        pairs: (dim as usize) * (dim as usize),
        cd_mismatches,
        hadamard_mismatches,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::AlgebraContext;
    use crate::twist::{cayley_dickson_sign, Twist};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_int_element(rng: &mut ChaCha8Rng, n: u32) -> Element<i64> {
        let coeffs = (0..1usize << n)
            .map(|_| rng.random_range(-4i64..=4))
            .collect();
        Element::from_coeffs(n, coeffs).unwrap()
    }

    #[test]
    fn depth_one_is_the_complex_product() {
        let x = PairTree::pair(PairTree::leaf(2i64), PairTree::leaf(3)).unwrap();
        let y = PairTree::pair(PairTree::leaf(5i64), PairTree::leaf(7)).unwrap();
        let xy = PairTree::cd_mul(&x, &y).unwrap();
        // Conjugation is trivial on leaves: (ac − db, ad + cb).
        let expected =
            PairTree::pair(PairTree::leaf(2 * 5 - 7 * 3), PairTree::leaf(2 * 7 + 5 * 3)).unwrap();
        assert_eq!(xy, expected);
    }

    #[test]
    fn multiplicative_identity_at_depth_three() {
        let mut rng = ChaCha8Rng::seed_from_u64(20);
        let one = PairTree::unshuffle(&Element::<i64>::scalar(3, 1).unwrap());
        let x = PairTree::unshuffle(&random_int_element(&mut rng, 3));
        assert_eq!(PairTree::cd_mul(&x, &one).unwrap(), x);
        assert_eq!(PairTree::cd_mul(&one, &x).unwrap(), x);
    }

    #[test]
    fn basis_pair_product_depth_two() {
        // i₁ i₂ = i₃, cross-checking cyd(1,2) = +1.
        assert_eq!(oracle_twist(1, 2, 2).unwrap(), 1);
        assert_eq!(cayley_dickson_sign(1, 2), 1);
    }

    #[test]
    fn unshuffle_basis_correspondence() {
        // i₂ = (i₁, 0) and i₃ = (0, i₁) at depth 2.
        let i2 = PairTree::unshuffle(&Element::<i64>::basis(2, 2).unwrap());
        let i1_inner = PairTree::unshuffle(&Element::<i64>::basis(1, 1).unwrap());
        let zero = PairTree::zeros(1);
        assert_eq!(i2, PairTree::pair(i1_inner.clone(), zero.clone()).unwrap());

        let i3 = PairTree::unshuffle(&Element::<i64>::basis(2, 3).unwrap());
        assert_eq!(i3, PairTree::pair(zero, i1_inner).unwrap());
    }

    #[test]
    fn shuffle_unshuffle_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for n in 0..=4 {
            let e = random_int_element(&mut rng, n);
            let tree = PairTree::unshuffle(&e);
            assert_eq!(tree.depth(), n);
            assert_eq!(tree.shuffle(), e);
        }
    }

    #[test]
    fn oracle_worked_examples() {
        assert_eq!(oracle_twist(9, 11, 4).unwrap(), -1, "i9 i11 = −i2");
        for q in 0..8 {
            assert_eq!(oracle_twist(0, q, 3).unwrap(), 1);
        }
        for p in 1..8 {
            assert_eq!(oracle_twist(p, p, 3).unwrap(), -1);
        }
    }

    #[test]
    fn hadamard_oracle_examples() {
        assert_eq!(hadamard_oracle_twist(1, 1, 1).unwrap(), -1);
        assert_eq!(hadamard_oracle_twist(1, 2, 2).unwrap(), 1);
        assert_eq!(hadamard_oracle_twist(3, 3, 2).unwrap(), 1, "⟨3∧3⟩ = 2");
    }

    #[test]
    fn oracle_equivalence_sweep_g5() {
        let report = run_oracle_sweep(5).unwrap();
        assert_eq!(report.pairs, 1024);
        assert!(report.pass(), "{report:?}");
        assert!(run_oracle_sweep(9).is_err(), "oracle cap is n ≤ 8");
    }

    // The construction and the twist algebra agree on whole elements, not
    // just basis vectors.
    #[test]
    fn full_product_transport() {
        let mut rng = ChaCha8Rng::seed_from_u64(22);
        for n in 0..=4 {
            let ctx = AlgebraContext::new(Twist::CayleyDickson, n).unwrap();
            for _ in 0..10 {
                let x = random_int_element(&mut rng, n);
                let y = random_int_element(&mut rng, n);
                let via_pairs =
                    PairTree::cd_mul(&PairTree::unshuffle(&x), &PairTree::unshuffle(&y))
                        .unwrap()
                        .shuffle();
                assert_eq!(via_pairs, ctx.mul(&x, &y).unwrap());
            }
        }
    }

    // (x,y)* = (x*, −y) transports to the algebra conjugate.
    #[test]
    fn conjugate_transport() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for n in 0..=4 {
            let ctx = AlgebraContext::new(Twist::CayleyDickson, n).unwrap();
            for _ in 0..10 {
                let x = random_int_element(&mut rng, n);
                let via_pairs = PairTree::unshuffle(&x).conjugate().shuffle();
                assert_eq!(via_pairs, ctx.conjugate(&x).unwrap());
            }
        }
    }

    #[test]
    fn depth_mismatch_is_reported() {
        let a = PairTree::leaf(1i64);
        let b = PairTree::pair(PairTree::leaf(1i64), PairTree::leaf(0)).unwrap();
        assert!(matches!(
            PairTree::pair(a.clone(), b.clone()),
            Err(Error::DepthMismatch { left: 0, right: 1 })
        ));
        assert!(PairTree::cd_mul(&a, &b).is_err());
        assert!(PairTree::hadamard_mul(&a, &b).is_err());
    }
}

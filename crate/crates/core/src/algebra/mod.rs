//! Arithmetic of twisted group algebra elements over the dyadic group:
//! products (direct and inner-product form), conjugate, norm, inverse,
//! commutators, dyadic convolution, and the left-regular matrix
//! representation.

mod element;

pub use element::Element;

use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::dyadic::{GroupElement, Sign};
use crate::error::{Error, Result};
use crate::scalar::{Real, Scalar};
use crate::twist::{Twist, TwistTable, MAX_SCAN_ORDER};

use element::check_same_dim;

/// A twist fixed over G_n with its sign matrix materialized. Axiom scans
/// needed by individual operations run once and cache their verdict.
///
/// Immutable after construction; elements are plain values, so concurrent
/// use needs no coordination.
#[derive(Debug)]
pub struct AlgebraContext {
    twist: Twist,
    table: TwistTable,
    // Each cell holds the first counterexample, or None when the axiom holds.
    invertive_scan: OnceLock<Option<GroupElement>>,
    proper_scan: OnceLock<Option<(GroupElement, GroupElement)>>,
    associative_scan: OnceLock<Option<(GroupElement, GroupElement, GroupElement)>>,
}

impl AlgebraContext {
    /// Fixes `twist` over the dyadic group G_n; n is capped at
    /// [`crate::twist::MAX_TABLE_EXP`] since the cached sign matrix has 4ⁿ
    /// entries.
    pub fn new(twist: Twist, n: u32) -> Result<Self> {
        let table = TwistTable::materialize(&twist, n)?;
        Ok(AlgebraContext {
            twist,
            table,
            invertive_scan: OnceLock::new(),
            proper_scan: OnceLock::new(),
            associative_scan: OnceLock::new(),
        })
    }

    pub fn n(&self) -> u32 {
        self.table.n()
    }

    pub fn dim(&self) -> usize {
        self.table.dim()
    }

    pub fn twist(&self) -> &Twist {
        &self.twist
    }

    pub fn table(&self) -> &TwistTable {
        &self.table
    }

    #[inline]
    pub fn sign(&self, p: GroupElement, q: GroupElement) -> Sign {
        self.table.get(p, q)
    }

    /// i_p i_q as a signed basis index.
    #[inline]
    pub fn basis_product(&self, p: GroupElement, q: GroupElement) -> (Sign, GroupElement) {
        (self.sign(p, q), p ^ q)
    }

    fn check_dim<T: Scalar>(&self, x: &Element<T>) -> Result<()> {
        if x.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                left: x.dim(),
                right: self.dim(),
            });
        }
        Ok(())
    }

    /// The twisted product xy = Σ_p Σ_q x_p y_q sgn(p,q) i_{pq}: the O(4ⁿ)
    /// double sum against the cached sign matrix.
    pub fn mul<T: Scalar>(&self, x: &Element<T>, y: &Element<T>) -> Result<Element<T>> {
        check_same_dim(x, y)?;
        self.check_dim(x)?;
        let dim = self.dim();
        let mut out = vec![T::zero(); dim];
        for p in 0..dim as GroupElement {
            let xp = x.coeff(p);
            if xp.is_zero() {
                continue;
            }
            for q in 0..dim as GroupElement {
                let term = (xp * y.coeff(q)).apply_sign(self.sign(p, q));
                out[(p ^ q) as usize] += term;
            }
        }
        Ok(Element::from_raw(x.n(), out))
    }

    /// i_p · x, in O(2ⁿ).
    pub fn basis_mul_left<T: Scalar>(&self, p: GroupElement, x: &Element<T>) -> Result<Element<T>> {
        self.check_dim(x)?;
        let dim = self.dim();
        let mut out = vec![T::zero(); dim];
        for q in 0..dim as GroupElement {
            out[(p ^ q) as usize] = x.coeff(q).apply_sign(self.sign(p, q));
        }
        Ok(Element::from_raw(x.n(), out))
    }

    /// x · i_p, in O(2ⁿ).
    pub fn basis_mul_right<T: Scalar>(
        &self,
        x: &Element<T>,
        p: GroupElement,
    ) -> Result<Element<T>> {
        self.check_dim(x)?;
        let dim = self.dim();
        let mut out = vec![T::zero(); dim];
        for q in 0..dim as GroupElement {
            out[(q ^ p) as usize] = x.coeff(q).apply_sign(self.sign(q, p));
        }
        Ok(Element::from_raw(x.n(), out))
    }

    /// First element violating sgn(p,p⁻¹) = sgn(p⁻¹,p). On the dyadic group
    /// p⁻¹ = p, so every twist passes; the scan keeps the contract honest.
    fn invertive_witness(&self) -> Option<GroupElement> {
        *self.invertive_scan.get_or_init(|| {
            (0..self.dim() as GroupElement).find(|&p| {
                let p_inv = p;
                self.sign(p, p_inv) != self.sign(p_inv, p)
            })
        })
    }

    /// First pair violating either cancellation law of a proper twist.
    fn proper_witness(&self) -> Option<(GroupElement, GroupElement)> {
        *self.proper_scan.get_or_init(|| {
            let dim = self.dim() as GroupElement;
            for p in 0..dim {
                for q in 0..dim {
                    let law1 = self.sign(p, q) * self.sign(q, q) == self.sign(p ^ q, q);
                    let law2 = self.sign(p, p) * self.sign(p, q) == self.sign(p, p ^ q);
                    if !law1 || !law2 {
                        return Some((p, q));
                    }
                }
            }
            None
        })
    }

    /// First triple violating the associativity condition
    /// sgn(p,q)sgn(pq,r) = sgn(p,qr)sgn(q,r).
    fn associative_witness(&self) -> Option<(GroupElement, GroupElement, GroupElement)> {
        *self.associative_scan.get_or_init(|| {
            let dim = self.dim() as GroupElement;
            for p in 0..dim {
                for q in 0..dim {
                    let spq = self.sign(p, q);
                    for r in 0..dim {
                        if spq * self.sign(p ^ q, r) != self.sign(p, q ^ r) * self.sign(q, r) {
                            return Some((p, q, r));
                        }
                    }
                }
            }
            None
        })
    }

    fn require_cayley_dickson(&self) -> Result<()> {
        if self.twist != Twist::CayleyDickson {
            return Err(Error::UnsupportedTwist {
                required: "cyd",
                actual: self.twist.kind_name(),
            });
        }
        Ok(())
    }

    /// The conjugate x̄ = Σ_p sgn(p⁻¹,p) x_{p⁻¹} i_p, which over the dyadic
    /// group (p⁻¹ = p) is coefficient-wise sgn(p,p)·x_p.
    pub fn conjugate<T: Scalar>(&self, x: &Element<T>) -> Result<Element<T>> {
        self.check_dim(x)?;
        if let Some(p) = self.invertive_witness() {
            return Err(Error::TwistNotInvertive { p });
        }
        let out = (0..self.dim() as GroupElement)
            .map(|p| x.coeff(p).apply_sign(self.sign(p, p)))
            .collect();
        Ok(Element::from_raw(x.n(), out))
    }

    /// The product through its two inner-product forms,
    /// xy = Σ_r ⟨x, i_r ȳ⟩ i_r = Σ_r ⟨y, x̄ i_r⟩ i_r, valid for proper
    /// twists. Both forms are computed and checked against each other.
    pub fn mul_via_inner<T: Scalar>(&self, x: &Element<T>, y: &Element<T>) -> Result<Element<T>> {
        check_same_dim(x, y)?;
        self.check_dim(x)?;
        if let Some((p, q)) = self.proper_witness() {
            return Err(Error::TwistNotProper { p, q });
        }
        let conj_y = self.conjugate(y)?;
        let conj_x = self.conjugate(x)?;
        let dim = self.dim() as GroupElement;
        let mut out = Vec::with_capacity(dim as usize);
        for r in 0..dim {
            let left = x.inner(&self.basis_mul_left(r, &conj_y)?)?;
            let right = y.inner(&self.basis_mul_right(&conj_x, r)?)?;
            assert!(
                left.close_to(right),
                "inner-product forms disagree at r={r}: {left} vs {right}"
            );
            out.push(left);
        }
        Ok(Element::from_raw(x.n(), out))
    }

    /// x⁻¹ = x̄ / ‖x‖², the Cayley-Dickson inverse: xx̄ = x̄x = ‖x‖² makes
    /// it two-sided even where zero divisors exist.
    pub fn inverse_cd<T: Real>(&self, x: &Element<T>) -> Result<Element<T>> {
        self.require_cayley_dickson()?;
        self.check_dim(x)?;
        let norm_sq = x.norm_sq();
        if norm_sq.is_zero() {
            return Err(Error::ZeroElement);
        }
        Ok(self.conjugate(x)?.scale(T::one() / norm_sq))
    }

    /// The commutator xy − yx by direct products.
    pub fn commutator<T: Scalar>(&self, x: &Element<T>, y: &Element<T>) -> Result<Element<T>> {
        Ok(&self.mul(x, y)? - &self.mul(y, x)?)
    }

    /// The reduced commutator sum for the Cayley-Dickson twist:
    /// `[x,y] = Σ_{r>0} (Σ_{0<p≠r} cyd(p,r)(x_{pr} y_p − x_p y_{pr})) i_r`.
    /// The coefficient at r = 0 is always 0.
    pub fn commutator_closed<T: Scalar>(
        &self,
        x: &Element<T>,
        y: &Element<T>,
    ) -> Result<Element<T>> {
        self.require_cayley_dickson()?;
        check_same_dim(x, y)?;
        self.check_dim(x)?;
        let dim = self.dim() as GroupElement;
        let mut out = vec![T::zero(); dim as usize];
        for r in 1..dim {
            let mut acc = T::zero();
            for p in 1..dim {
                if p == r {
                    continue;
                }
                let term = x.coeff(p ^ r) * y.coeff(p) - x.coeff(p) * y.coeff(p ^ r);
                acc += term.apply_sign(self.sign(p, r));
            }
            out[r as usize] = acc;
        }
        Ok(Element::from_raw(x.n(), out))
    }

    /// Checks x² = 2x₀x − ‖x‖² (Cayley-Dickson twist) and reports the
    /// residual ‖x² − (2x₀x − ‖x‖²·1)‖.
    pub fn square_identity_check<T: Real>(&self, x: &Element<T>) -> Result<SquareIdentityCheck<T>> {
        self.require_cayley_dickson()?;
        self.check_dim(x)?;
        let square = self.mul(x, x)?;
        let two = T::one() + T::one();
        let norm_sq = x.norm_sq();
        let mut expected = x.scale(two * x.real_part());
        expected = &expected - &Element::scalar(x.n(), norm_sq)?;
        let residual = (&square - &expected).norm();
        // Relative 1e-9 against the ‖x‖² scale of the identity, with a
        // 1e-12 absolute floor.
        let tolerance = T::from_f64(1e-12) + T::from_f64(1e-9) * norm_sq;
        Ok(SquareIdentityCheck {
            residual,
            tolerance,
            pass: residual <= tolerance,
        })
    }

    /// The left-regular matrix L_p with l_{rs} = sgn(p,s) when r = ps, so
    /// that L_p applied to coefficients of x gives coefficients of i_p x.
    /// Requires an associative twist: only then does L_pL_q = sgn(p,q)L_{pq}
    /// hold.
    pub fn matrix_rep(&self, p: GroupElement) -> Result<SignMatrix> {
        let dim = self.dim();
        if dim > MAX_SCAN_ORDER {
            return Err(Error::GroupTooLarge {
                order: dim,
                max: MAX_SCAN_ORDER,
            });
        }
        if (p as usize) >= dim {
            return Err(Error::DimensionMismatch {
                left: p as usize,
                right: dim,
            });
        }
        if let Some((p, q, r)) = self.associative_witness() {
            return Err(Error::TwistNotAssociative { p, q, r });
        }
        let mut entries = vec![0 as Sign; dim * dim];
        for s in 0..dim as GroupElement {
            let r = p ^ s;
            entries[r as usize * dim + s as usize] = self.sign(p, s);
        }
        Ok(SignMatrix { dim, entries })
    }
}

/// Pass/fail record of the square identity, with the measured residual.
#[derive(Debug, Clone, Copy)]
pub struct SquareIdentityCheck<T> {
    pub residual: T,
    pub tolerance: T,
    pub pass: bool,
}

/// The dyadic convolution x∗y = Σ_r (Σ_p x_p y_{pr}) i_r: the product under
/// the trivial twist, and commutative since the group is self-inverse.
pub fn convolution<T: Scalar>(x: &Element<T>, y: &Element<T>) -> Result<Element<T>> {
    check_same_dim(x, y)?;
    let dim = x.dim() as GroupElement;
    let mut out = Vec::with_capacity(dim as usize);
    for r in 0..dim {
        let mut acc = T::zero();
        for p in 0..dim {
            acc += x.coeff(p) * y.coeff(p ^ r);
        }
        out.push(acc);
    }
    Ok(Element::from_raw(x.n(), out))
}

/// A square matrix with entries in {−1, 0, +1}: sign patterns of the
/// left-regular representation. Products of signed permutation matrices stay
/// signed permutations, so multiplication is closed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignMatrix {
    dim: usize,
    entries: Vec<Sign>,
}

impl SignMatrix {
    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn get(&self, r: usize, s: usize) -> Sign {
        self.entries[r * self.dim + s]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Sign]> {
        self.entries.chunks(self.dim)
    }

    pub fn matmul(&self, other: &SignMatrix) -> Result<SignMatrix> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        let dim = self.dim;
        let mut acc = vec![0i32; dim * dim];
        for r in 0..dim {
            for k in 0..dim {
                let a = self.entries[r * dim + k];
                if a == 0 {
                    continue;
                }
                for s in 0..dim {
                    let b = other.entries[k * dim + s];
                    if b != 0 {
                        acc[r * dim + s] += i32::from(a) * i32::from(b);
                    }
                }
            }
        }
        let entries = acc
            .into_iter()
            .map(|e| {
                assert!(
                    (-1..=1).contains(&e),
                    "product left the sign-pattern range; operands were not signed permutations"
                );
                e as Sign
            })
            .collect();
        Ok(SignMatrix { dim, entries })
    }

    pub fn scale(&self, sign: Sign) -> SignMatrix {
        SignMatrix {
            dim: self.dim,
            entries: self.entries.iter().map(|&e| e * sign).collect(),
        }
    }

    /// Matrix-vector action on a coefficient vector.
    pub fn apply<T: Scalar>(&self, v: &[T]) -> Result<Vec<T>> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch {
                left: v.len(),
                right: self.dim,
            });
        }
        let mut out = vec![T::zero(); self.dim];
        for (r, out_r) in out.iter_mut().enumerate() {
            for (s, &value) in v.iter().enumerate() {
                let e = self.entries[r * self.dim + s];
                if e != 0 {
                    *out_r += value.apply_sign(e);
                }
            }
        }
        Ok(out)
    }

    /// One nonzero ±1 per row and per column.
    pub fn is_signed_permutation(&self) -> bool {
        let dim = self.dim;
        (0..dim).all(|r| {
            self.entries[r * dim..(r + 1) * dim]
                .iter()
                .filter(|&&e| e != 0)
                .count()
                == 1
        }) && (0..dim).all(|s| (0..dim).filter(|&r| self.entries[r * dim + s] != 0).count() == 1)
            && self.entries.iter().all(|&e| e == 0 || e == 1 || e == -1)
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for row in self.rows() {
            let cells: Vec<String> = row.iter().map(|e| e.to_string()).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }
}

/// The full basis multiplication table of a context, with cells `±k`
/// meaning ±i_k; CSV rows are indexed by the left factor.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BasisProductTable {
    pub twist: String,
    pub n: u32,
    pub cells: Vec<Vec<String>>,
}

impl BasisProductTable {
    pub fn new(ctx: &AlgebraContext) -> Self {
        let dim = ctx.dim() as GroupElement;
        let cells = (0..dim)
            .map(|p| {
                (0..dim)
                    .map(|q| {
                        let (sign, r) = ctx.basis_product(p, q);
                        format!("{}{r}", if sign < 0 { '-' } else { '+' })
                    })
                    .collect()
            })
            .collect();
        BasisProductTable {
            twist: ctx.twist().kind_name().to_string(),
            n: ctx.n(),
            cells,
        }
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for row in &self.cells {
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("table serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}

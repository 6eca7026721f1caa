//! Dense elements x = Σ_p x_p i_p of a twisted group algebra over G_n,
//! with the human-readable text format and the JSON wire format.

use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::dyadic::{self, GroupElement};
use crate::error::{Error, Result};
use crate::scalar::{Real, Scalar};

/// Coefficient vector of length 2ⁿ; index p holds the coefficient of i_p.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Element<T: Scalar> {
    n: u32,
    coeffs: Vec<T>,
}

#[derive(Deserialize)]
struct ElementJson<T> {
    n: u32,
    coeffs: Vec<T>,
}

impl<T: Scalar> Element<T> {
    /// The zero element of dimension 2ⁿ.
    pub fn zeros(n: u32) -> Result<Self> {
        dyadic::check_dimension(n, dyadic::MAX_DIMENSION_EXP)?;
        Ok(Element {
            n,
            coeffs: vec![T::zero(); 1 << n],
        })
    }

    /// Builds an element from its coefficient vector; the length must be
    /// exactly 2ⁿ and every coefficient finite.
    pub fn from_coeffs(n: u32, coeffs: Vec<T>) -> Result<Self> {
        dyadic::check_dimension(n, dyadic::MAX_DIMENSION_EXP)?;
        if coeffs.len() != 1 << n {
            return Err(Error::DimensionMismatch {
                left: coeffs.len(),
                right: 1 << n,
            });
        }
        if let Some(index) = coeffs.iter().position(|c| !c.is_finite_scalar()) {
            return Err(Error::NonFiniteCoefficient { index });
        }
        Ok(Element { n, coeffs })
    }

    /// The basis vector i_p in dimension 2ⁿ.
    pub fn basis(n: u32, p: GroupElement) -> Result<Self> {
        let mut e = Self::zeros(n)?;
        if (p as usize) >= e.dim() {
            return Err(Error::DimensionMismatch {
                left: p as usize,
                right: e.dim(),
            });
        }
        e.coeffs[p as usize] = T::one();
        Ok(e)
    }

    /// The scalar c·i₀ in dimension 2ⁿ.
    pub fn scalar(n: u32, value: T) -> Result<Self> {
        let mut e = Self::zeros(n)?;
        e.coeffs[0] = value;
        Ok(e)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    #[inline]
    pub fn coeff(&self, p: GroupElement) -> T {
        self.coeffs[p as usize]
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// The real part x₀.
    pub fn real_part(&self) -> T {
        self.coeffs[0]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub(crate) fn from_raw(n: u32, coeffs: Vec<T>) -> Self {
        debug_assert_eq!(coeffs.len(), 1 << n);
        Element { n, coeffs }
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(T) -> U) -> Element<U> {
        Element {
            n: self.n,
            coeffs: self.coeffs.iter().map(|&c| f(c)).collect(),
        }
    }

    /// Scales every coefficient.
    pub fn scale(&self, c: T) -> Self {
        self.map(|v| v * c)
    }

    /// ⟨x,y⟩ = Σ_p x_p ȳ_p; real scalars are self-conjugate, so this is the
    /// Euclidean dot product of the coefficient vectors.
    pub fn inner(&self, other: &Self) -> Result<T> {
        check_same_dim(self, other)?;
        Ok(self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .fold(T::zero(), |acc, (&a, &b)| acc + a * b))
    }

    /// ⟨x,x⟩, the squared norm; exact for integer scalars.
    pub fn norm_sq(&self) -> T {
        self.coeffs.iter().fold(T::zero(), |acc, &a| acc + a * a)
    }

    /// True when all coefficients agree under the scalar comparison policy.
    pub fn close_to(&self, other: &Self) -> bool {
        self.n == other.n
            && self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .all(|(&a, &b)| a.close_to(b))
    }
}

impl<T: Real> Element<T> {
    /// ‖x‖ = √⟨x,x⟩.
    pub fn norm(&self) -> T {
        self.norm_sq().sqrt()
    }
}

impl<T: Scalar + Serialize> Element<T> {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("element serializes")
    }
}

impl<T: Scalar + serde::de::DeserializeOwned> Element<T> {
    pub fn from_json(text: &str) -> Result<Self> {
        let raw: ElementJson<T> = serde_json::from_str(text)?;
        Element::from_coeffs(raw.n, raw.coeffs)
    }
}

pub(crate) fn check_same_dim<T: Scalar>(x: &Element<T>, y: &Element<T>) -> Result<()> {
    if x.n() != y.n() {
        return Err(Error::DimensionMismatch {
            left: x.dim(),
            right: y.dim(),
        });
    }
    Ok(())
}

impl<T: Scalar> Add for &Element<T> {
    type Output = Element<T>;

    fn add(self, rhs: &Element<T>) -> Element<T> {
        assert_eq!(self.n, rhs.n, "element dimension mismatch");
        Element {
            n: self.n,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(&a, &b)| a + b)
                .collect(),
        }
    }
}

impl<T: Scalar> Sub for &Element<T> {
    type Output = Element<T>;

    fn sub(self, rhs: &Element<T>) -> Element<T> {
        assert_eq!(self.n, rhs.n, "element dimension mismatch");
        Element {
            n: self.n,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(&a, &b)| a - b)
                .collect(),
        }
    }
}

impl<T: Scalar> Neg for &Element<T> {
    type Output = Element<T>;

    fn neg(self) -> Element<T> {
        self.map(|c| -c)
    }
}

/// Canonical text form: `coeff*i<p>` terms joined by `+`/`-`, ascending p,
/// unit coefficients and the `*i0` of the scalar term omitted, e.g.
/// `1 - 2*i3 + 0.5*i5`. The zero element prints as `0`.
impl<T: Scalar> fmt::Display for Element<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (p, &c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if p == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "i{p}")?;
            } else {
                write!(f, "{mag}*i{p}")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl<T: Scalar + FromStr> Element<T> {
    /// Parses the text form into dimension 2ⁿ. Terms may appear in any
    /// order; duplicate indices are summed.
    pub fn parse(n: u32, text: &str) -> Result<Self> {
        let bad = |reason: &str| Error::MalformedElement {
            text: text.to_string(),
            reason: reason.to_string(),
        };
        let mut out = Element::zeros(n)?;
        let mut any = false;
        for (negative, term) in split_terms(text) {
            let term = term.trim();
            if term.is_empty() {
                return Err(bad("empty term"));
            }
            any = true;
            let (coeff_text, index_text) = match term.split_once('*') {
                Some((c, i)) => (Some(c.trim()), Some(i.trim())),
                None if term.starts_with('i') => (None, Some(term)),
                None => (Some(term), None),
            };
            let index: GroupElement = match index_text {
                Some(i) => {
                    let digits = i
                        .strip_prefix('i')
                        .ok_or_else(|| bad("basis factor must look like i<p>"))?;
                    digits
                        .parse()
                        .map_err(|_| bad(&format!("bad basis index `{digits}`")))?
                }
                None => 0,
            };
            if index as usize >= out.dim() {
                return Err(bad(&format!(
                    "basis index {index} out of range for dimension 2^{n}"
                )));
            }
            let mut coeff = match coeff_text {
                Some(c) => T::from_str(c).map_err(|_| bad(&format!("bad coefficient `{c}`")))?,
                None => T::one(),
            };
            if negative {
                coeff = -coeff;
            }
            if !coeff.is_finite_scalar() {
                return Err(bad("non-finite coefficient"));
            }
            out.coeffs[index as usize] += coeff;
        }
        if !any {
            return Err(bad("no terms"));
        }
        Ok(out)
    }
}

/// Splits on top-level `+`/`-`, keeping each term's sign. A sign directly
/// after `e`/`E` belongs to a float exponent, not a term boundary.
fn split_terms(text: &str) -> Vec<(bool, String)> {
    let mut terms = Vec::new();
    let mut current = String::new();
    let mut negative = false;
    let mut prev_non_space: Option<char> = None;
    for ch in text.chars() {
        let is_sign = ch == '+' || ch == '-';
        let in_exponent = matches!(prev_non_space, Some('e') | Some('E'))
            && current
                .trim()
                .chars()
                .next()
                .is_some_and(|c| c.is_ascii_digit() || c == '.');
        if is_sign && !in_exponent {
            if !current.trim().is_empty() {
                terms.push((negative, std::mem::take(&mut current)));
            } else {
                current.clear();
            }
            negative = ch == '-';
        } else {
            current.push(ch);
        }
        if !ch.is_whitespace() {
            prev_non_space = Some(ch);
        }
    }
    if !current.trim().is_empty() {
        terms.push((negative, current));
    }
    terms
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_and_invariants() {
        let e = Element::<f64>::basis(2, 3).unwrap();
        assert_eq!(e.dim(), 4);
        assert_eq!(e.coeff(3), 1.0);
        assert!(Element::<f64>::from_coeffs(2, vec![0.0; 3]).is_err());
        assert!(matches!(
            Element::from_coeffs(1, vec![1.0, f64::NAN]),
            Err(Error::NonFiniteCoefficient { index: 1 })
        ));
        assert!(Element::<f64>::zeros(25).is_err());
    }

    #[test]
    fn inner_product_examples() {
        let n = 3;
        for p in 0..8 {
            for q in 0..8 {
                let ip = Element::<i64>::basis(n, p).unwrap();
                let iq = Element::<i64>::basis(n, q).unwrap();
                assert_eq!(ip.inner(&iq).unwrap(), i64::from(p == q));
            }
        }
        // ⟨1+2i₁, 3+4i₁⟩ = 3 + 8
        let x = Element::from_coeffs(1, vec![1i64, 2]).unwrap();
        let y = Element::from_coeffs(1, vec![3i64, 4]).unwrap();
        assert_eq!(x.inner(&y).unwrap(), 11);
        assert_eq!(x.inner(&x).unwrap(), x.norm_sq());

        let short = Element::<i64>::zeros(0).unwrap();
        assert!(x.inner(&short).is_err());
    }

    #[test]
    fn norm_examples() {
        assert_eq!(Element::<f64>::zeros(2).unwrap().norm(), 0.0);
        assert_eq!(Element::<f64>::basis(3, 5).unwrap().norm(), 1.0);
        let x = Element::from_coeffs(1, vec![3.0, 4.0]).unwrap();
        assert_eq!(x.norm(), 5.0);
    }

    #[test]
    fn display_canonical_form() {
        let x = Element::from_coeffs(3, vec![1.0, 0.0, 0.0, -2.0, 0.0, 0.5, 0.0, 0.0]).unwrap();
        assert_eq!(x.to_string(), "1 - 2*i3 + 0.5*i5");
        assert_eq!(Element::<f64>::zeros(1).unwrap().to_string(), "0");
        let y = Element::from_coeffs(2, vec![0, -1, 0, 0]).unwrap();
        assert_eq!(y.to_string(), "-i1");
        let z = Element::from_coeffs(0, vec![12.0]).unwrap();
        assert_eq!(z.to_string(), "12");
    }

    #[test]
    fn parse_examples() {
        let x = Element::<f64>::parse(3, "1 - 2*i3 + 0.5*i5").unwrap();
        assert_eq!(x.coeff(0), 1.0);
        assert_eq!(x.coeff(3), -2.0);
        assert_eq!(x.coeff(5), 0.5);

        // Arbitrary order, duplicates summed.
        let y = Element::<i64>::parse(2, "i3 + 2 - i3 + i1 + 3*i1").unwrap();
        assert_eq!(y.coeffs(), &[2, 4, 0, 0]);

        assert_eq!(
            Element::<f64>::parse(1, "-i1").unwrap().coeffs(),
            &[0.0, -1.0]
        );
        // Scientific notation survives the sign splitter.
        let z = Element::<f64>::parse(1, "1e-3 + 2e+1*i1").unwrap();
        assert_eq!(z.coeffs(), &[1e-3, 20.0]);

        assert!(Element::<f64>::parse(1, "i2").is_err());
        assert!(Element::<f64>::parse(1, "").is_err());
        assert!(Element::<f64>::parse(1, "2*j1").is_err());
        assert!(Element::<f64>::parse(1, "x + ").is_err());
    }

    #[test]
    fn parse_display_round_trip() {
        let x = Element::from_coeffs(2, vec![-3i64, 0, 7, 1]).unwrap();
        let back = Element::<i64>::parse(2, &x.to_string()).unwrap();
        assert_eq!(back, x);
    }

    #[test]
    fn json_round_trip() {
        let x = Element::from_coeffs(1, vec![1.5, -2.0]).unwrap();
        let json = x.to_json();
        assert_eq!(json, r#"{"n":1,"coeffs":[1.5,-2.0]}"#);
        let back = Element::<f64>::from_json(&json).unwrap();
        assert_eq!(back, x);
        assert!(Element::<f64>::from_json(r#"{"n":2,"coeffs":[1.0]}"#).is_err());
    }
}

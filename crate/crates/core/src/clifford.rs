//! Clifford-specific layer: blade grades, e-notation parsing/printing and
//! translation to/from i-notation, and the 1-blade factorization product
//! that serves as the independent oracle for the Clifford sign recursion.
//!
//! The signature is all-positive, Cl(n,0): every 1-blade squares to +1.

use std::fmt;

use crate::dyadic::{bit_sum, GroupElement, Sign};
use crate::error::{Error, Result};

/// A basis blade i_p, identified with its group element; the grade is the
/// bit-sum of the index.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Blade {
    index: GroupElement,
}

impl Blade {
    pub fn new(index: GroupElement) -> Self {
        Blade { index }
    }

    pub fn index(&self) -> GroupElement {
        self.index
    }

    pub fn grade(&self) -> u32 {
        bit_sum(self.index)
    }

    /// The 1-based 1-blade factors, strictly increasing: bit k set means
    /// factor e_{k+1}.
    pub fn factors(&self) -> Vec<u32> {
        (0..32)
            .filter(|k| self.index >> k & 1 == 1)
            .map(|k| k + 1)
            .collect()
    }

    /// Rebuilds the blade whose factor list is the given strictly
    /// increasing sequence of 1-based indices.
    pub fn from_factors(factors: &[u32]) -> Result<Self> {
        ENotation::new(factors.to_vec()).map(|e| e.to_blade())
    }
}

/// A blade with its sign, as returned by the factorization product.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SignedBlade {
    pub sign: Sign,
    pub blade: Blade,
}

/// A blade named by its sorted 1-blade factors, the standard e-notation.
///
/// Text forms: `1` is the scalar blade; `e134` is the compact form (single
/// digits 1–9); `e[1,10,12]` is the bracketed form required once any index
/// exceeds 9.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ENotation {
    factors: Vec<u32>,
}

impl ENotation {
    /// Validates that the factor list is strictly increasing and 1-based.
    pub fn new(factors: Vec<u32>) -> Result<Self> {
        for pair in factors.windows(2) {
            if pair[0] >= pair[1] {
                return Err(Error::MalformedENotation {
                    text: format!("{factors:?}"),
                    reason: "factors must be strictly increasing".into(),
                });
            }
        }
        if factors.first() == Some(&0) {
            return Err(Error::MalformedENotation {
                text: format!("{factors:?}"),
                reason: "factors are 1-based".into(),
            });
        }
        if factors.last().is_some_and(|&k| k > 32) {
            return Err(Error::MalformedENotation {
                text: format!("{factors:?}"),
                reason: "factor exceeds 32".into(),
            });
        }
        Ok(ENotation { factors })
    }

    pub fn factors(&self) -> &[u32] {
        &self.factors
    }

    /// i_p = Π_k e_{(k+1)} over the set bits k of p.
    pub fn to_blade(&self) -> Blade {
        let index = self.factors.iter().fold(0, |acc, &k| acc | 1 << (k - 1));
        Blade { index }
    }

    pub fn from_blade(blade: Blade) -> Self {
        ENotation {
            factors: blade.factors(),
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        let bad = |reason: &str| Error::MalformedENotation {
            text: text.to_string(),
            reason: reason.to_string(),
        };
        let text = text.trim();
        if text == "1" {
            return ENotation::new(Vec::new());
        }
        let body = text
            .strip_prefix('e')
            .ok_or_else(|| bad("expected `1` or `e...`"))?;
        let factors: Vec<u32> = if let Some(list) = body.strip_prefix('[') {
            let list = list
                .strip_suffix(']')
                .ok_or_else(|| bad("unterminated bracket list"))?;
            list.split(',')
                .map(|part| {
                    part.trim()
                        .parse()
                        .map_err(|_| bad(&format!("bad index `{}`", part.trim())))
                })
                .collect::<Result<_>>()?
        } else {
            if body.is_empty() {
                return Err(bad("no factors"));
            }
            body.chars()
                .map(|c| match c {
                    '1'..='9' => Ok(c as u32 - '0' as u32),
                    _ => Err(bad(&format!("`{c}` is not a digit 1-9"))),
                })
                .collect::<Result<_>>()?
        };
        ENotation::new(factors).map_err(|_| bad("indices must be strictly increasing and ≥ 1"))
    }
}

impl fmt::Display for ENotation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        if self.factors.iter().all(|&k| k <= 9) {
            write!(f, "e")?;
            for k in &self.factors {
                write!(f, "{k}")?;
            }
            Ok(())
        } else {
            let list: Vec<String> = self.factors.iter().map(|k| k.to_string()).collect();
            write!(f, "e[{}]", list.join(","))
        }
    }
}

/// Parses e-notation text into a blade.
pub fn parse_e(text: &str) -> Result<Blade> {
    Ok(ENotation::parse(text)?.to_blade())
}

/// Formats a blade in e-notation.
pub fn format_e(blade: Blade) -> String {
    ENotation::from_blade(blade).to_string()
}

/// Multiplies blades by factoring into 1-blades: concatenate the factor
/// lists, bubble the result into increasing order counting a sign flip per
/// transposition of distinct factors, then cancel adjacent equal factors
/// (1-blades square to +1).
pub fn blade_mul_oracle(a: Blade, b: Blade) -> SignedBlade {
    let mut factors = a.factors();
    factors.extend(b.factors());
    let mut sign: Sign = 1;

    // Bubble sort; adjacent equal factors are never swapped.
    let len = factors.len();
    for i in 0..len {
        for j in 0..len.saturating_sub(1 + i) {
            if factors[j] > factors[j + 1] {
                factors.swap(j, j + 1);
                sign = -sign;
            }
        }
    }

    // Cancel e_k e_k pairs.
    let mut reduced: Vec<u32> = Vec::with_capacity(len);
    for k in factors {
        if reduced.last() == Some(&k) {
            reduced.pop();
        } else {
            reduced.push(k);
        }
    }

    let blade = ENotation::new(reduced)
        .expect("sorted distinct factors")
        .to_blade();
    debug_assert_eq!(blade.index(), a.index() ^ b.index());
    SignedBlade { sign, blade }
}

/// Verifies the four e₁ multiplication lemmas at `p` via the factorization
/// product: e₁ i_{2p} = i_{2p+1}, e₁ i_{2p+1} = i_{2p},
/// i_{2p} e₁ = (−1)^⟨p⟩ i_{2p+1}, i_{2p+1} e₁ = (−1)^⟨p⟩ i_{2p}.
pub fn e1_lemma_check(p: GroupElement) -> bool {
    let e1 = Blade::new(1);
    let even = Blade::new(2 * p);
    let odd = Blade::new(2 * p + 1);
    let s = crate::dyadic::parity_sign(bit_sum(p));

    blade_mul_oracle(e1, even)
        == SignedBlade {
            sign: 1,
            blade: odd,
        }
        && blade_mul_oracle(e1, odd)
            == SignedBlade {
                sign: 1,
                blade: even,
            }
        && blade_mul_oracle(even, e1)
            == SignedBlade {
                sign: s,
                blade: odd,
            }
        && blade_mul_oracle(odd, e1)
            == SignedBlade {
                sign: s,
                blade: even,
            }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::twist::clifford_sign;

    #[test]
    fn parse_worked_examples() {
        assert_eq!(parse_e("e134").unwrap().index(), 13); // 1101
        assert_eq!(parse_e("e23").unwrap().index(), 6); // 110
        assert_eq!(parse_e("1").unwrap().index(), 0);
        assert_eq!(parse_e("e[1,10,12]").unwrap().index(), 1 | 1 << 9 | 1 << 11);
    }

    #[test]
    fn parse_rejects_malformed_input() {
        assert!(parse_e("e143").is_err(), "non-increasing");
        assert!(parse_e("e11").is_err(), "duplicate");
        assert!(parse_e("e0").is_err(), "zero index");
        assert!(parse_e("e").is_err());
        assert!(parse_e("x12").is_err());
        assert!(parse_e("e[3,2]").is_err());
        assert!(parse_e("e[10").is_err());
        assert!(parse_e("e[a]").is_err());
    }

    #[test]
    fn format_uses_compact_form_when_possible() {
        assert_eq!(format_e(Blade::new(13)), "e134");
        assert_eq!(format_e(Blade::new(0)), "1");
        assert_eq!(format_e(Blade::new(1 << 9)), "e[10]");
        assert_eq!(format_e(Blade::new(1 | 1 << 10)), "e[1,11]");
    }

    #[test]
    fn parse_format_round_trip_exhaustive() {
        for index in 0..1u32 << 10 {
            let blade = Blade::new(index);
            assert_eq!(parse_e(&format_e(blade)).unwrap(), blade);
        }
    }

    #[test]
    fn grades() {
        assert_eq!(Blade::new(0).grade(), 0);
        assert_eq!(Blade::new(13).grade(), 3);
        assert_eq!(Blade::new(6).grade(), 2);
        assert_eq!(Blade::new(13).factors(), vec![1, 3, 4]);
    }

    #[test]
    fn blade_mul_worked_example() {
        // e134 · e23 = −e124
        let result = blade_mul_oracle(Blade::new(13), Blade::new(6));
        assert_eq!(result.sign, -1);
        assert_eq!(result.blade, parse_e("e124").unwrap());
        assert_eq!(result.blade.index(), 11);
    }

    #[test]
    fn blade_mul_basic_rules() {
        let one = Blade::new(0);
        let e1 = Blade::new(1);
        for idx in 0..16 {
            let b = Blade::new(idx);
            assert_eq!(blade_mul_oracle(one, b), SignedBlade { sign: 1, blade: b });
            assert_eq!(blade_mul_oracle(b, one), SignedBlade { sign: 1, blade: b });
        }
        // The square of 1-blades is 1.
        assert_eq!(
            blade_mul_oracle(e1, e1),
            SignedBlade {
                sign: 1,
                blade: one
            }
        );
        // Anticommutativity: e₂e₁ = −e₁e₂.
        let e2 = Blade::new(2);
        let fwd = blade_mul_oracle(e1, e2);
        let rev = blade_mul_oracle(e2, e1);
        assert_eq!(fwd.blade, rev.blade);
        assert_eq!(fwd.sign, -rev.sign);
    }

    #[test]
    fn e1_lemmas_hold_below_1024() {
        for p in 0..1u32 << 10 {
            assert!(e1_lemma_check(p), "lemmas fail at p = {p}");
        }
    }

    #[test]
    fn e1_lemma_worked_cases() {
        assert!(e1_lemma_check(0));
        // p = 1: i₂e₁ = −i₃ since e₂e₁ = −e₁e₂.
        let r = blade_mul_oracle(Blade::new(2), Blade::new(1));
        assert_eq!(
            r,
            SignedBlade {
                sign: -1,
                blade: Blade::new(3)
            }
        );
        // p = 3: i₆e₁ = +i₇ since ⟨3⟩ = 2.
        let r = blade_mul_oracle(Blade::new(6), Blade::new(1));
        assert_eq!(
            r,
            SignedBlade {
                sign: 1,
                blade: Blade::new(7)
            }
        );
    }

    // The factorization sign equals the Clifford recursion on all of G_6,
    // and the product index is always the XOR.
    #[test]
    fn oracle_equivalence_exhaustive_g6() {
        for p in 0..64 {
            for q in 0..64 {
                let result = blade_mul_oracle(Blade::new(p), Blade::new(q));
                assert_eq!(result.sign, clifford_sign(p, q), "sign at ({p},{q})");
                assert_eq!(result.blade.index(), p ^ q);
                assert_eq!(result.blade.grade(), bit_sum(p ^ q));
            }
        }
    }
}

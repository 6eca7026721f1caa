//! Desk-scale numerical exploration of the ℓ² question: orthogonality of
//! the families i_p x across dimensions, the sedenion counterexample, and
//! norm-growth statistics for twisted products and dyadic convolution.
//!
//! Norm-growth output is exploratory data about an open question; the
//! reports label it as such and make no pass/fail claim.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::{convolution, AlgebraContext, Element};
use crate::dyadic::{self, GroupElement};
use crate::error::Result;
use crate::twist::Twist;

/// Cap for the orthogonality scan: the pair loop is quadratic in 2ⁿ.
pub const MAX_ORTHOGONALITY_EXP: u32 = 6;

/// Cap for norm-growth sweeps.
pub const MAX_GROWTH_EXP: u32 = 12;

/// Ratios below this floor count as zero, matching the orthogonality
/// assertion tolerance.
pub const ZERO_RATIO: f64 = 1e-12;

/// Coefficient envelope of a random truncated ℓ² sequence; the sampled
/// coefficient is envelope(p) · u with u uniform on (−1, 1).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum DecayProfile {
    /// x_p ∝ ratio^p with |ratio| < 1.
    Geometric { ratio: f64 },
    /// x_p ∝ (p+1)^(−exponent) with exponent > 1/2.
    PowerLaw { exponent: f64 },
}

impl DecayProfile {
    fn envelope(&self, p: usize) -> f64 {
        match *self {
            DecayProfile::Geometric { ratio } => ratio.powi(p as i32),
            DecayProfile::PowerLaw { exponent } => ((p + 1) as f64).powf(-exponent),
        }
    }

    pub fn label(&self) -> String {
        match *self {
            DecayProfile::Geometric { ratio } => format!("geometric({ratio})"),
            DecayProfile::PowerLaw { exponent } => format!("power-law({exponent})"),
        }
    }
}

/// One line of experiment statistics: extrema over trials at a dimension.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StatRow {
    pub label: String,
    pub n: u32,
    pub max: f64,
    pub mean: f64,
}

/// Reproducible record of an experiment run: (seed, config) determine every
/// number in it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentReport {
    pub experiment: String,
    pub twist: String,
    pub n_lo: u32,
    pub n_hi: u32,
    pub trials: u32,
    pub seed: u64,
    pub decay: Option<DecayProfile>,
    pub rows: Vec<StatRow>,
    /// For the sedenion witness pair (2,5): trials with a ratio above
    /// [`ZERO_RATIO`].
    pub witness_nonzero_trials: Option<u32>,
    pub verdicts: Vec<String>,
}

impl ExperimentReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn render_text(&self) -> String {
        let mut out = format!("experiment: {}\n", self.experiment);
        out.push_str(&format!(
            "twist: {}   n: {}..{}   trials: {}   seed: {}\n",
            self.twist, self.n_lo, self.n_hi, self.trials, self.seed
        ));
        if let Some(decay) = &self.decay {
            out.push_str(&format!("decay: {}\n", decay.label()));
        }
        out.push_str(&format!(
            "  {:<44} {:>4} {:>14} {:>14}\n",
            "quantity", "n", "max", "mean"
        ));
        for row in &self.rows {
            out.push_str(&format!(
                "  {:<44} {:>4} {:>14.6e} {:>14.6e}\n",
                row.label, row.n, row.max, row.mean
            ));
        }
        if let Some(count) = self.witness_nonzero_trials {
            out.push_str(&format!(
                "witness (2,5) nonzero in {count}/{} trials\n",
                self.trials
            ));
        }
        for verdict in &self.verdicts {
            out.push_str(&format!("verdict: {verdict}\n"));
        }
        out
    }
}

#[derive(Debug, Clone, Copy)]
pub struct OrthogonalityConfig {
    pub n: u32,
    pub trials: u32,
    pub seed: u64,
}

impl Default for OrthogonalityConfig {
    fn default() -> Self {
        OrthogonalityConfig {
            n: 4,
            trials: 64,
            seed: 0,
        }
    }
}

/// Measures max_{0≠p≠q≠0} |⟨i_p x, i_q x⟩| / ‖x‖² over random x under the
/// Cayley-Dickson twist.
///
/// For n < 4 the families are orthogonal and the max must sit below
/// [`ZERO_RATIO`]; at n = 4 the pair (2,5) is the sedenion witness and its
/// nonzero count is reported.
pub fn orthogonality_scan(config: &OrthogonalityConfig) -> Result<ExperimentReport> {
    dyadic::check_dimension(config.n, MAX_ORTHOGONALITY_EXP)?;
    let ctx = AlgebraContext::new(Twist::CayleyDickson, config.n)?;
    let dim = ctx.dim() as GroupElement;
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);

    let mut overall_max = 0.0f64;
    let mut per_trial_max_sum = 0.0f64;
    let mut witness_max = 0.0f64;
    let mut witness_sum = 0.0f64;
    let mut witness_nonzero = 0u32;
    let track_witness = dim > 5;

    for _ in 0..config.trials {
        let coeffs: Vec<f64> = (0..dim).map(|_| rng.random_range(-1.0..1.0)).collect();
        let x = Element::from_coeffs(config.n, coeffs)?;
        let norm_sq = x.norm_sq();
        if norm_sq == 0.0 {
            continue;
        }
        let translates: Vec<Element<f64>> = (0..dim)
            .map(|p| ctx.basis_mul_left(p, &x))
            .collect::<Result<_>>()?;
        let mut trial_max = 0.0f64;
        for p in 1..dim {
            for q in 1..dim {
                if p == q {
                    continue;
                }
                let ratio = translates[p as usize].inner(&translates[q as usize])?.abs() / norm_sq;
                trial_max = trial_max.max(ratio);
            }
        }
        overall_max = overall_max.max(trial_max);
        per_trial_max_sum += trial_max;
        if track_witness {
            let ratio = translates[2].inner(&translates[5])?.abs() / norm_sq;
            witness_max = witness_max.max(ratio);
            witness_sum += ratio;
            if ratio > ZERO_RATIO {
                witness_nonzero += 1;
            }
        }
    }

    let trials = config.trials.max(1) as f64;
    let mut rows = vec![StatRow {
        label: "|<i_p x, i_q x>| / |x|^2 over 0!=p!=q!=0".into(),
        n: config.n,
        max: overall_max,
        mean: per_trial_max_sum / trials,
    }];
    let mut verdicts = Vec::new();
    let mut witness_nonzero_trials = None;
    if config.n < 4 {
        let ok = overall_max <= ZERO_RATIO;
        verdicts.push(format!(
            "orthogonality for n < 4: {} (max ratio {overall_max:.3e}, bound {ZERO_RATIO:.0e})",
            if ok { "PASS" } else { "FAIL" }
        ));
    } else {
        rows.push(StatRow {
            label: "|<i_2 x, i_5 x>| / |x|^2".into(),
            n: config.n,
            max: witness_max,
            mean: witness_sum / trials,
        });
        witness_nonzero_trials = Some(witness_nonzero);
        verdicts.push(format!(
            "sedenion witness (2,5) nonzero in {witness_nonzero}/{} trials",
            config.trials
        ));
    }

    Ok(ExperimentReport {
        experiment: "orthogonality".into(),
        twist: "cyd".into(),
        n_lo: config.n,
        n_hi: config.n,
        trials: config.trials,
        seed: config.seed,
        decay: None,
        rows,
        witness_nonzero_trials,
        verdicts,
    })
}

#[derive(Debug, Clone)]
pub struct NormGrowthConfig {
    pub twist: Twist,
    pub n_lo: u32,
    pub n_hi: u32,
    pub decay: DecayProfile,
    pub trials: u32,
    pub seed: u64,
}

impl Default for NormGrowthConfig {
    fn default() -> Self {
        NormGrowthConfig {
            twist: Twist::Trivial,
            n_lo: 4,
            n_hi: 10,
            decay: DecayProfile::Geometric { ratio: 0.5 },
            trials: 64,
            seed: 0,
        }
    }
}

fn random_decayed(rng: &mut ChaCha8Rng, n: u32, decay: &DecayProfile) -> Result<Element<f64>> {
    let coeffs = (0..1usize << n)
        .map(|p| decay.envelope(p) * rng.random_range(-1.0..1.0))
        .collect();
    Element::from_coeffs(n, coeffs)
}

/// Tabulates ‖x⋄y‖ / (‖x‖‖y‖) as the truncation dimension grows, where ⋄
/// is the twisted product (dyadic convolution for the trivial twist) and
/// x, y are random truncated sequences with the given decay.
///
/// This bears on whether ℓ² is closed under the product; that question is
/// open, so the table is data, not a verdict.
pub fn norm_growth(config: &NormGrowthConfig) -> Result<ExperimentReport> {
    dyadic::check_dimension(config.n_hi, MAX_GROWTH_EXP)?;
    dyadic::check_dimension(config.n_lo, config.n_hi)?;
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut rows = Vec::new();

    for n in config.n_lo..=config.n_hi {
        let ctx = match config.twist {
            Twist::Trivial => None,
            ref twist => Some(AlgebraContext::new(twist.clone(), n)?),
        };
        let mut max = 0.0f64;
        let mut sum = 0.0f64;
        let mut counted = 0u32;
        for _ in 0..config.trials {
            let x = random_decayed(&mut rng, n, &config.decay)?;
            let y = random_decayed(&mut rng, n, &config.decay)?;
            let denom = x.norm() * y.norm();
            if denom == 0.0 {
                continue;
            }
            let product = match &ctx {
                Some(ctx) => ctx.mul(&x, &y)?,
                None => convolution(&x, &y)?,
            };
            let ratio = product.norm() / denom;
            max = max.max(ratio);
            sum += ratio;
            counted += 1;
        }
        rows.push(StatRow {
            label: "|x*y| / (|x||y|)".into(),
            n,
            max,
            mean: sum / f64::from(counted.max(1)),
        });
    }

    Ok(ExperimentReport {
        experiment: "norm-growth".into(),
        twist: config.twist.kind_name().into(),
        n_lo: config.n_lo,
        n_hi: config.n_hi,
        trials: config.trials,
        seed: config.seed,
        decay: Some(config.decay),
        rows,
        witness_nonzero_trials: None,
        verdicts: vec!["exploratory - no acceptance threshold".into()],
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orthogonality_holds_below_sedenions() {
        for n in [2, 3] {
            let report = orthogonality_scan(&OrthogonalityConfig {
                n,
                trials: 16,
                seed: 7,
            })
            .unwrap();
            assert!(report.rows[0].max <= ZERO_RATIO, "n = {n}: {report:?}");
            assert!(report.verdicts[0].contains("PASS"));
        }
    }

    #[test]
    fn sedenion_witness_pair_is_nonzero() {
        let report = orthogonality_scan(&OrthogonalityConfig {
            n: 4,
            trials: 32,
            seed: 11,
        })
        .unwrap();
        let nonzero = report.witness_nonzero_trials.unwrap();
        assert!(nonzero >= 31, "(2,5) should be nonzero almost surely");
        assert!(report.rows[0].max > 1e-6, "families are not orthogonal");
        assert!(orthogonality_scan(&OrthogonalityConfig {
            n: 7,
            trials: 1,
            seed: 0,
        })
        .is_err());
    }

    #[test]
    fn reports_are_deterministic_per_seed() {
        let config = NormGrowthConfig {
            n_lo: 2,
            n_hi: 5,
            trials: 8,
            seed: 99,
            ..NormGrowthConfig::default()
        };
        let a = norm_growth(&config).unwrap();
        let b = norm_growth(&config).unwrap();
        assert_eq!(a.to_json(), b.to_json());
        assert_eq!(a.render_text(), b.render_text());
        let c = norm_growth(&NormGrowthConfig {
            seed: 100,
            ..config
        })
        .unwrap();
        assert_ne!(a.rows, c.rows);
    }

    #[test]
    fn report_json_round_trip() {
        let report = orthogonality_scan(&OrthogonalityConfig {
            n: 3,
            trials: 4,
            seed: 5,
        })
        .unwrap();
        let back = ExperimentReport::from_json(&report.to_json()).unwrap();
        assert_eq!(back, report);
    }

    // Basis times basis is a signed basis vector: the ratio is exactly 1.
    #[test]
    fn basis_products_have_unit_ratio() {
        for twist in [Twist::CayleyDickson, Twist::Clifford, Twist::Trivial] {
            let ctx = AlgebraContext::new(twist, 3).unwrap();
            for p in 0..8 {
                for q in 0..8 {
                    let x = Element::<f64>::basis(3, p).unwrap();
                    let y = Element::<f64>::basis(3, q).unwrap();
                    let prod = ctx.mul(&x, &y).unwrap();
                    assert_eq!(prod.norm() / (x.norm() * y.norm()), 1.0);
                }
            }
        }
    }

    // ℂ, ℍ, 𝕆 are composition algebras: ‖xy‖ = ‖x‖‖y‖ exactly, so the
    // measured ratio is 1 within 1e-9.
    #[test]
    fn composition_algebra_anchor() {
        let report = norm_growth(&NormGrowthConfig {
            twist: Twist::CayleyDickson,
            n_lo: 1,
            n_hi: 3,
            decay: DecayProfile::Geometric { ratio: 0.5 },
            trials: 32,
            seed: 13,
        })
        .unwrap();
        for row in &report.rows {
            assert!((row.max - 1.0).abs() <= 1e-9, "n = {}: {row:?}", row.n);
            assert!((row.mean - 1.0).abs() <= 1e-9);
        }
    }

    // ‖x²‖ ≤ 2|x₀|‖x‖ + ‖x‖², the square-summability bound that follows
    // from the square identity.
    #[test]
    fn square_norm_bound() {
        let mut rng = ChaCha8Rng::seed_from_u64(14);
        for n in [3, 5, 8] {
            let ctx = AlgebraContext::new(Twist::CayleyDickson, n).unwrap();
            for _ in 0..8 {
                let x =
                    random_decayed(&mut rng, n, &DecayProfile::Geometric { ratio: 0.7 }).unwrap();
                let square = ctx.mul(&x, &x).unwrap();
                let bound = 2.0 * x.real_part().abs() * x.norm() + x.norm_sq();
                assert!(square.norm() <= bound + 1e-9);
            }
        }
    }

    // Coefficient-wise |[x,y]_r| ≤ 2 (|x| ∗ |y|)_r: the commutator is
    // dominated by the convolution of absolute values.
    #[test]
    fn commutator_dominated_by_convolution() {
        let mut rng = ChaCha8Rng::seed_from_u64(15);
        for n in [4, 6, 8] {
            let ctx = AlgebraContext::new(Twist::CayleyDickson, n).unwrap();
            for _ in 0..4 {
                let x =
                    random_decayed(&mut rng, n, &DecayProfile::PowerLaw { exponent: 1.0 }).unwrap();
                let y =
                    random_decayed(&mut rng, n, &DecayProfile::PowerLaw { exponent: 1.0 }).unwrap();
                let comm = ctx.commutator(&x, &y).unwrap();
                let abs_conv = convolution(&x.map(f64::abs), &y.map(f64::abs)).unwrap();
                for r in 0..comm.dim() as GroupElement {
                    assert!(comm.coeff(r).abs() <= 2.0 * abs_conv.coeff(r) + 1e-12);
                }
            }
        }
    }
}

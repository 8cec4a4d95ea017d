//! Process families and their parameters.
//!
//! Every process here is a centred Gaussian process pinned to 0 at the
//! origin. The pure families (Brownian motion, FBM, Riemann-Liouville,
//! integrated FBM) are self-similar; the mixed families are weighted sums
//! of two components with different self-similarity indices and are not
//! self-similar themselves.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Hurst / self-similarity parameter.
///
/// The admissible range depends on the family: FBM and correlated-mixed
/// components need `H` in (0,1); Riemann-Liouville allows any `H > 0`.
/// Family-specific bounds are checked by [`ProcessSpec::validate`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HurstParam(f64);

impl HurstParam {
    pub fn new(value: f64) -> Result<Self> {
        if !value.is_finite() || value <= 0.0 {
            return Err(Error::Domain(format!(
                "Hurst parameter must be finite and positive, got {value}"
            )));
        }
        Ok(HurstParam(value))
    }

    #[inline]
    pub fn value(&self) -> f64 {
        self.0
    }

    /// Checks the FBM-range requirement `H` in (0,1), boundary-exclusive.
    pub fn require_fbm_range(&self) -> Result<()> {
        if self.0 >= 1.0 {
            return Err(Error::Domain(format!(
                "Hurst parameter must lie in (0,1) for this family, got {}",
                self.0
            )));
        }
        Ok(())
    }
}

/// A process family together with its parameters.
///
/// Mixed variants are `a * X^H + b * Y^K` with `K < H` and `a*b != 0`;
/// `MixedCorrelated` drives both components by one Brownian motion through
/// the Molchan-Golosov kernels, everything else mixes independent
/// components.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ProcessSpec {
    BrownianMotion,
    Fbm {
        h: HurstParam,
    },
    RiemannLiouville {
        h: HurstParam,
    },
    IntegratedFbm {
        h: HurstParam,
    },
    MixedIndependent {
        a: f64,
        h: HurstParam,
        b: f64,
        k: HurstParam,
    },
    MixedCorrelated {
        a: f64,
        h: HurstParam,
        b: f64,
        k: HurstParam,
    },
    IntegratedMixedIndependent {
        a: f64,
        h: HurstParam,
        b: f64,
        k: HurstParam,
    },
    MixedRiemannLiouville {
        a: f64,
        h: HurstParam,
        b: f64,
        k: HurstParam,
    },
}

impl ProcessSpec {
    pub fn fbm(h: f64) -> Result<Self> {
        let h = HurstParam::new(h)?;
        h.require_fbm_range()?;
        Ok(ProcessSpec::Fbm { h })
    }

    pub fn riemann_liouville(h: f64) -> Result<Self> {
        Ok(ProcessSpec::RiemannLiouville {
            h: HurstParam::new(h)?,
        })
    }

    pub fn integrated_fbm(h: f64) -> Result<Self> {
        let h = HurstParam::new(h)?;
        h.require_fbm_range()?;
        Ok(ProcessSpec::IntegratedFbm { h })
    }

    pub fn mixed_independent(a: f64, h: f64, b: f64, k: f64) -> Result<Self> {
        let spec = ProcessSpec::MixedIndependent {
            a,
            h: HurstParam::new(h)?,
            b,
            k: HurstParam::new(k)?,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn mixed_correlated(a: f64, h: f64, b: f64, k: f64) -> Result<Self> {
        let spec = ProcessSpec::MixedCorrelated {
            a,
            h: HurstParam::new(h)?,
            b,
            k: HurstParam::new(k)?,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn integrated_mixed_independent(a: f64, h: f64, b: f64, k: f64) -> Result<Self> {
        let spec = ProcessSpec::IntegratedMixedIndependent {
            a,
            h: HurstParam::new(h)?,
            b,
            k: HurstParam::new(k)?,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn mixed_riemann_liouville(a: f64, h: f64, b: f64, k: f64) -> Result<Self> {
        let spec = ProcessSpec::MixedRiemannLiouville {
            a,
            h: HurstParam::new(h)?,
            b,
            k: HurstParam::new(k)?,
        };
        spec.validate()?;
        Ok(spec)
    }

    /// Checks family-specific parameter invariants.
    pub fn validate(&self) -> Result<()> {
        use ProcessSpec::*;
        match *self {
            BrownianMotion => Ok(()),
            Fbm { h } | IntegratedFbm { h } => h.require_fbm_range(),
            RiemannLiouville { .. } => Ok(()),
            MixedIndependent { a, h, b, k }
            | MixedCorrelated { a, h, b, k }
            | IntegratedMixedIndependent { a, h, b, k } => {
                h.require_fbm_range()?;
                k.require_fbm_range()?;
                Self::validate_mix(a, h, b, k)
            }
            MixedRiemannLiouville { a, h, b, k } => Self::validate_mix(a, h, b, k),
        }
    }

    fn validate_mix(a: f64, h: HurstParam, b: f64, k: HurstParam) -> Result<()> {
        if !(k.value() < h.value()) {
            return Err(Error::Domain(format!(
                "mixed variants require K < H, got K={} H={}",
                k.value(),
                h.value()
            )));
        }
        if a == 0.0 || b == 0.0 || !a.is_finite() || !b.is_finite() {
            return Err(Error::Domain(format!(
                "mixed variants require finite weights with a*b != 0, got a={a} b={b}"
            )));
        }
        Ok(())
    }

    /// The dominant self-similarity index: `H` for FBM/RL and their
    /// mixtures, `1 + H` for the integrated variants, `1/2` for Brownian
    /// motion.
    pub fn dominant_index(&self) -> f64 {
        use ProcessSpec::*;
        match *self {
            BrownianMotion => 0.5,
            Fbm { h } | RiemannLiouville { h } => h.value(),
            IntegratedFbm { h } => 1.0 + h.value(),
            MixedIndependent { h, .. }
            | MixedCorrelated { h, .. }
            | MixedRiemannLiouville { h, .. } => h.value(),
            IntegratedMixedIndependent { h, .. } => 1.0 + h.value(),
        }
    }

    /// True for the pure self-similar families; mixtures of two distinct
    /// indices are not self-similar.
    pub fn is_self_similar(&self) -> bool {
        use ProcessSpec::*;
        matches!(
            self,
            BrownianMotion | Fbm { .. } | RiemannLiouville { .. } | IntegratedFbm { .. }
        )
    }

    /// For `MixedCorrelated`, whether `a*b > 0` (the hypothesis under which
    /// the covariance is non-negative). Advisory only, not enforced.
    pub fn positively_correlated_mix(&self) -> Option<bool> {
        match *self {
            ProcessSpec::MixedCorrelated { a, b, .. } => Some(a * b > 0.0),
            _ => None,
        }
    }

    /// The two independent components of an independent mixture, as
    /// `(weight, component)` pairs. The dominant component comes first.
    pub fn independent_components(&self) -> Option<[(f64, ProcessSpec); 2]> {
        use ProcessSpec::*;
        match *self {
            MixedIndependent { a, h, b, k } => {
                Some([(a, Fbm { h }), (b, Fbm { h: k })])
            }
            IntegratedMixedIndependent { a, h, b, k } => {
                Some([(a, IntegratedFbm { h }), (b, IntegratedFbm { h: k })])
            }
            MixedRiemannLiouville { a, h, b, k } => Some([
                (a, RiemannLiouville { h }),
                (b, RiemannLiouville { h: k }),
            ]),
            _ => None,
        }
    }
}

impl fmt::Display for ProcessSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use ProcessSpec::*;
        match *self {
            BrownianMotion => write!(f, "bm"),
            Fbm { h } => write!(f, "fbm(H={})", h.value()),
            RiemannLiouville { h } => write!(f, "rl(H={})", h.value()),
            IntegratedFbm { h } => write!(f, "ifbm(H={})", h.value()),
            MixedIndependent { a, h, b, k } => {
                write!(f, "mixed(a={a},H={},b={b},K={})", h.value(), k.value())
            }
            MixedCorrelated { a, h, b, k } => {
                write!(f, "ccm(a={a},H={},b={b},K={})", h.value(), k.value())
            }
            IntegratedMixedIndependent { a, h, b, k } => {
                write!(f, "imixed(a={a},H={},b={b},K={})", h.value(), k.value())
            }
            MixedRiemannLiouville { a, h, b, k } => {
                write!(f, "mixed-rl(a={a},H={},b={b},K={})", h.value(), k.value())
            }
        }
    }
}

impl FromStr for ProcessSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "bm" {
            return Ok(ProcessSpec::BrownianMotion);
        }
        let (name, args) = match s.find('(') {
            Some(i) if s.ends_with(')') => (&s[..i], &s[i + 1..s.len() - 1]),
            _ => {
                return Err(Error::InvalidInput(format!(
                    "unrecognized process spec '{s}'"
                )))
            }
        };
        let mut fields = std::collections::BTreeMap::new();
        for part in args.split(',') {
            let (key, value) = part.split_once('=').ok_or_else(|| {
                Error::InvalidInput(format!("expected key=value in process spec, got '{part}'"))
            })?;
            let value: f64 = value.trim().parse().map_err(|_| {
                Error::InvalidInput(format!("bad numeric value '{}' in process spec", value))
            })?;
            fields.insert(key.trim().to_string(), value);
        }
        let get = |key: &str| -> Result<f64> {
            fields
                .get(key)
                .copied()
                .ok_or_else(|| Error::InvalidInput(format!("process spec missing field '{key}'")))
        };
        let expect_only = |keys: &[&str]| -> Result<()> {
            for k in fields.keys() {
                if !keys.contains(&k.as_str()) {
                    return Err(Error::InvalidInput(format!(
                        "unknown field '{k}' in process spec '{s}'"
                    )));
                }
            }
            Ok(())
        };
        match name {
            "fbm" => {
                expect_only(&["H"])?;
                ProcessSpec::fbm(get("H")?)
            }
            "rl" => {
                expect_only(&["H"])?;
                ProcessSpec::riemann_liouville(get("H")?)
            }
            "ifbm" => {
                expect_only(&["H"])?;
                ProcessSpec::integrated_fbm(get("H")?)
            }
            "mixed" => {
                expect_only(&["a", "H", "b", "K"])?;
                ProcessSpec::mixed_independent(get("a")?, get("H")?, get("b")?, get("K")?)
            }
            "ccm" => {
                expect_only(&["a", "H", "b", "K"])?;
                ProcessSpec::mixed_correlated(get("a")?, get("H")?, get("b")?, get("K")?)
            }
            "imixed" => {
                expect_only(&["a", "H", "b", "K"])?;
                ProcessSpec::integrated_mixed_independent(get("a")?, get("H")?, get("b")?, get("K")?)
            }
            "mixed-rl" => {
                expect_only(&["a", "H", "b", "K"])?;
                ProcessSpec::mixed_riemann_liouville(get("a")?, get("H")?, get("b")?, get("K")?)
            }
            _ => Err(Error::InvalidInput(format!(
                "unrecognized process family '{name}'"
            ))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hurst_bounds() {
        assert!(HurstParam::new(0.0).is_err());
        assert!(HurstParam::new(-0.3).is_err());
        assert!(HurstParam::new(f64::NAN).is_err());
        assert!(HurstParam::new(1.5).unwrap().require_fbm_range().is_err());
        assert!(HurstParam::new(0.5).unwrap().require_fbm_range().is_ok());
    }

    #[test]
    fn mixed_requires_k_below_h_and_nonzero_weights() {
        assert!(ProcessSpec::mixed_independent(1.0, 0.75, 1.0, 0.5).is_ok());
        assert!(ProcessSpec::mixed_independent(1.0, 0.5, 1.0, 0.75).is_err());
        assert!(ProcessSpec::mixed_independent(1.0, 0.75, 0.0, 0.5).is_err());
        assert!(ProcessSpec::mixed_correlated(1.0, 0.7, 1.0, 0.7).is_err());
    }

    #[test]
    fn dominant_index() {
        assert_eq!(ProcessSpec::BrownianMotion.dominant_index(), 0.5);
        assert_eq!(ProcessSpec::fbm(0.75).unwrap().dominant_index(), 0.75);
        assert_eq!(ProcessSpec::integrated_fbm(0.5).unwrap().dominant_index(), 1.5);
        assert_eq!(
            ProcessSpec::mixed_independent(1.0, 0.75, 1.0, 0.25)
                .unwrap()
                .dominant_index(),
            0.75
        );
        assert!(ProcessSpec::riemann_liouville(1.5).unwrap().dominant_index() > 1.0);
    }

    #[test]
    fn display_roundtrip() {
        let specs = [
            ProcessSpec::BrownianMotion,
            ProcessSpec::fbm(0.75).unwrap(),
            ProcessSpec::riemann_liouville(1.5).unwrap(),
            ProcessSpec::integrated_fbm(0.25).unwrap(),
            ProcessSpec::mixed_independent(1.0, 0.75, 1.0, 0.5).unwrap(),
            ProcessSpec::mixed_correlated(2.0, 0.7, 3.0, 0.5).unwrap(),
            ProcessSpec::integrated_mixed_independent(1.0, 0.75, 1.0, 0.5).unwrap(),
            ProcessSpec::mixed_riemann_liouville(1.0, 0.8, 1.0, 0.4).unwrap(),
        ];
        for spec in specs {
            let text = spec.to_string();
            let parsed: ProcessSpec = text.parse().unwrap();
            assert_eq!(parsed, spec, "round-trip failed for '{text}'");
        }
    }

    #[test]
    fn parse_rejects_unknown_fields() {
        assert!("fbm(H=0.5,Q=1)".parse::<ProcessSpec>().is_err());
        assert!("pony(H=0.5)".parse::<ProcessSpec>().is_err());
        assert!("fbm(H=)".parse::<ProcessSpec>().is_err());
    }

    #[test]
    fn ccm_positivity_flag_is_advisory() {
        let spec = ProcessSpec::mixed_correlated(1.0, 0.7, -1.0, 0.5).unwrap();
        assert_eq!(spec.positively_correlated_mix(), Some(false));
        let spec = ProcessSpec::mixed_correlated(-1.0, 0.7, -1.0, 0.5).unwrap();
        assert_eq!(spec.positively_correlated_mix(), Some(true));
    }
}

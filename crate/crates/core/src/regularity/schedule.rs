//! Parameter schedules for the pair-of-partitions construction.
//!
//! The regularity function `E(r)` is a closed-form rule chosen from a few
//! presets. Worst-case constants are replaced by explicit caps: an
//! iteration cap, an optional cap on the outer order, and a floor on inner
//! class sizes.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::rational::{format_rational, parse_rational, ratio, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Preset {
    /// `E(r) = 1/4` for every `r`.
    Desk,
    /// `E(r) = c` for every `r`.
    Constant(Rational),
    /// The approximation pipeline's rule: `E(0) = ε²/16` and, for `r ≥ 1`,
    /// `E(r) = min(ε/(8r²), ε²/8, γ)` with `γ` a free embedding constant.
    Pipeline { gamma: Rational },
}

impl fmt::Display for Preset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Preset::Desk => write!(f, "desk"),
            Preset::Constant(c) => write!(f, "constant:{}", format_rational(c)),
            Preset::Pipeline { gamma } => write!(f, "pipeline:{}", format_rational(gamma)),
        }
    }
}

/// `desk`, `constant:c`, `pipeline` or `pipeline:γ`.
impl FromStr for Preset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (name, arg) = match s.split_once(':') {
            Some((n, a)) => (n, Some(a)),
            None => (s, None),
        };
        match (name, arg) {
            ("desk", None) => Ok(Preset::Desk),
            ("constant", Some(a)) => Ok(Preset::Constant(parse_rational(a)?)),
            ("pipeline", None) => Ok(Preset::Pipeline { gamma: ratio(1, 1) }),
            ("pipeline", Some(a)) => Ok(Preset::Pipeline {
                gamma: parse_rational(a)?,
            }),
            _ => Err(Error::parse(format!("unknown schedule preset `{s}`"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParameterSchedule {
    /// Target accuracy; only the pipeline preset reads it.
    pub eps: Rational,
    pub preset: Preset,
    /// Order of the initial equipartition.
    pub m: usize,
    /// Iterations allowed on top of the `ceil(100/E(0)^4)` bound.
    pub cap: usize,
    /// Smallest inner class size refinement may create.
    pub floor: usize,
    /// Largest outer order the construction may move to.
    pub max_order: Option<usize>,
}

/// Range of `r` the validator inspects for monotonicity.
const CHECKED_ORDERS: usize = 256;

impl ParameterSchedule {
    pub fn desk(m: usize) -> Self {
        ParameterSchedule {
            eps: ratio(1, 10),
            preset: Preset::Desk,
            m,
            cap: 32,
            floor: 64,
            max_order: None,
        }
    }

    pub fn with_preset(mut self, preset: Preset) -> Self {
        self.preset = preset;
        self
    }

    pub fn e(&self, r: usize) -> Rational {
        match &self.preset {
            Preset::Desk => ratio(1, 4),
            Preset::Constant(c) => *c,
            Preset::Pipeline { gamma } => {
                let eps = self.eps;
                if r == 0 {
                    eps * eps / 16
                } else {
                    let r2 = ratio((r * r) as i128, 1);
                    (eps / (r2 * 8)).min(eps * eps / 8).min(*gamma)
                }
            }
        }
    }

    /// `ceil(100 / E(0)^4)`, clamped to `usize`.
    pub fn iteration_bound(&self) -> usize {
        let z = self.e(0);
        let bound = ratio(100, 1) / (z * z * z * z);
        let c = bound.ceil().to_integer();
        usize::try_from(c).unwrap_or(usize::MAX)
    }

    /// Iterations the construction actually runs.
    pub fn iterations(&self) -> usize {
        self.cap.min(self.iteration_bound())
    }

    pub fn validate(&self) -> Result<()> {
        let zero = ratio(0, 1);
        let one = ratio(1, 1);
        if self.eps <= zero || self.eps > one {
            return Err(Error::precondition("ε must lie in (0, 1]"));
        }
        if self.cap == 0 || self.m == 0 || self.floor == 0 {
            return Err(Error::precondition("cap, m and floor must be positive"));
        }
        let mut prev = one;
        for r in 0..=CHECKED_ORDERS {
            let v = self.e(r);
            if v <= zero || v > one {
                return Err(Error::precondition(format!(
                    "E({r}) = {v} is outside (0, 1]"
                )));
            }
            if r >= 1 {
                if v > prev {
                    return Err(Error::precondition(format!("E increases at r = {r}")));
                }
                prev = v;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn presets_parse_and_print() {
        for s in ["desk", "constant:1/8", "pipeline:1/1000"] {
            assert_eq!(s.parse::<Preset>().unwrap().to_string(), s);
        }
        assert!("tower".parse::<Preset>().is_err());
        assert!("constant".parse::<Preset>().is_err());
    }

    #[test]
    fn pipeline_rule() {
        let s = ParameterSchedule::desk(4).with_preset(Preset::Pipeline { gamma: ratio(1, 1) });
        assert_eq!(s.e(0), ratio(1, 1600));
        assert_eq!(s.e(1), ratio(1, 800));
        assert_eq!(s.e(2), ratio(1, 800));
        assert_eq!(s.e(4), ratio(1, 1280));
        s.validate().unwrap();
        let capped = s.clone().with_preset(Preset::Pipeline {
            gamma: ratio(1, 10_000),
        });
        assert_eq!(capped.e(1), ratio(1, 10_000));
    }

    #[test]
    fn iteration_bound_uses_e0() {
        let s = ParameterSchedule::desk(2);
        assert_eq!(s.iteration_bound(), 25_600);
        assert_eq!(s.iterations(), 32);
    }

    #[test]
    fn validator_rejects_bad_schedules() {
        let mut s = ParameterSchedule::desk(2);
        s.cap = 0;
        assert!(s.validate().is_err());
        let s = ParameterSchedule::desk(2).with_preset(Preset::Constant(ratio(0, 1)));
        assert!(s.validate().is_err());
        let s = ParameterSchedule::desk(2).with_preset(Preset::Constant(ratio(3, 2)));
        assert!(s.validate().is_err());
    }
}

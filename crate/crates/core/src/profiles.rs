//! Logic profiles: the base calculus and its extensions with additive
//! units, skew exchange and linear implication.

use std::fmt;
use std::str::FromStr;

use crate::congruence::EquationId;
use crate::error::{Error, Result};
use crate::formula::Connective;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct LogicProfile {
    units: bool,
    exchange: bool,
    implication: bool,
}

impl LogicProfile {
    pub const BASE: LogicProfile = LogicProfile {
        units: false,
        exchange: false,
        implication: false,
    };
    pub const UNITS: LogicProfile = LogicProfile {
        units: true,
        exchange: false,
        implication: false,
    };
    pub const EXCHANGE: LogicProfile = LogicProfile {
        units: false,
        exchange: true,
        implication: false,
    };
    pub const IMPLICATION: LogicProfile = LogicProfile {
        units: false,
        exchange: false,
        implication: true,
    };
    pub const UNITS_EXCHANGE: LogicProfile = LogicProfile {
        units: true,
        exchange: true,
        implication: false,
    };
    pub const UNITS_IMPLICATION: LogicProfile = LogicProfile {
        units: true,
        exchange: false,
        implication: true,
    };

    pub const ALL: [LogicProfile; 6] = [
        Self::BASE,
        Self::UNITS,
        Self::EXCHANGE,
        Self::IMPLICATION,
        Self::UNITS_EXCHANGE,
        Self::UNITS_IMPLICATION,
    ];

    /// Rejects exchange together with implication: no focused rules or
    /// tags exist for that combination.
    pub fn new(units: bool, exchange: bool, implication: bool) -> Result<Self> {
        if exchange && implication {
            return Err(Error::Profile(
                "exchange and implication cannot be combined".into(),
            ));
        }
        Ok(LogicProfile {
            units,
            exchange,
            implication,
        })
    }

    pub fn units(self) -> bool {
        self.units
    }

    pub fn exchange(self) -> bool {
        self.exchange
    }

    pub fn implication(self) -> bool {
        self.implication
    }

    pub fn is_base(self) -> bool {
        self == Self::BASE
    }

    /// Same profile with exchange switched off.
    pub fn without_exchange(self) -> Self {
        LogicProfile {
            exchange: false,
            ..self
        }
    }
}

impl fmt::Display for LogicProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.units {
            parts.push("units");
        }
        if self.exchange {
            parts.push("exchange");
        }
        if self.implication {
            parts.push("implication");
        }
        if parts.is_empty() {
            write!(f, "base")
        } else {
            write!(f, "{}", parts.join("+"))
        }
    }
}

impl FromStr for LogicProfile {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (mut u, mut e, mut i) = (false, false, false);
        if s != "base" {
            for part in s.split('+') {
                match part {
                    "units" => u = true,
                    "exchange" => e = true,
                    "implication" => i = true,
                    other => return Err(Error::Profile(format!("unknown profile {other:?}"))),
                }
            }
        }
        LogicProfile::new(u, e, i)
    }
}

/// Which disjuncts make a tag list valid.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Validity {
    /// `ℝ ∈ l`, or both `ℂ₁` and `ℂ₂`.
    Base,
    /// Base plus `𝕋 ∈ l`.
    Units,
    /// Base plus two distinct context tags, or `•`.
    Implication,
    /// Both extensions.
    UnitsImplication,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TagKind {
    Pass,
    Conj1,
    Conj2,
    Right,
    Top,
    Ctx,
    Bullet,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProfileTables {
    pub negative: Vec<Connective>,
    pub reducible_stoup: Vec<Connective>,
    pub rules: Vec<&'static str>,
    pub equations: Vec<EquationId>,
    pub tags: Vec<TagKind>,
    pub validity: Validity,
}

const BASE_RULES: [&str; 12] = [
    "ax", "pass", "IL", "IR", "otimesL", "otimesR", "andL1", "andL2", "andR", "orL", "orR1",
    "orR2",
];

pub fn tables_for(profile: LogicProfile) -> Result<ProfileTables> {
    let profile = LogicProfile::new(profile.units, profile.exchange, profile.implication)?;
    let mut negative = vec![Connective::With];
    let mut reducible_stoup = vec![Connective::Unit, Connective::Tensor, Connective::Plus];
    let mut rules: Vec<&'static str> = BASE_RULES.to_vec();
    let mut tags = vec![TagKind::Pass, TagKind::Conj1, TagKind::Conj2, TagKind::Right];
    if profile.units {
        negative.push(Connective::Top);
        reducible_stoup.push(Connective::Zero);
        rules.extend(["topR", "botL"]);
        tags.push(TagKind::Top);
    }
    if profile.exchange {
        rules.push("ex");
    }
    if profile.implication {
        negative.push(Connective::Limp);
        rules.extend(["limpL", "limpR"]);
        tags.extend([TagKind::Ctx, TagKind::Bullet]);
    }
    let validity = match (profile.units, profile.implication) {
        (false, false) => Validity::Base,
        (true, false) => Validity::Units,
        (false, true) => Validity::Implication,
        (true, true) => Validity::UnitsImplication,
    };
    Ok(ProfileTables {
        negative,
        reducible_stoup,
        rules,
        equations: EquationId::active(profile),
        tags,
        validity,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        for p in LogicProfile::ALL {
            assert_eq!(p.to_string().parse::<LogicProfile>().unwrap(), p);
        }
        assert!("exchange+implication".parse::<LogicProfile>().is_err());
        assert!("linear".parse::<LogicProfile>().is_err());
    }

    #[test]
    fn tables() {
        let b = tables_for(LogicProfile::BASE).unwrap();
        assert_eq!(b.validity, Validity::Base);
        assert_eq!(b.negative, vec![Connective::With]);
        let u = tables_for(LogicProfile::UNITS).unwrap();
        assert_eq!(u.validity, Validity::Units);
        assert!(u.tags.contains(&TagKind::Top));
        let i = tables_for(LogicProfile::IMPLICATION).unwrap();
        assert_eq!(i.validity, Validity::Implication);
        assert!(i.tags.contains(&TagKind::Ctx) && i.tags.contains(&TagKind::Bullet));
        for p in LogicProfile::ALL {
            let t = tables_for(p).unwrap();
            for r in BASE_RULES {
                assert!(t.rules.contains(&r));
            }
            for e in &b.equations {
                assert!(t.equations.contains(e), "{p}: {e:?}");
            }
        }
    }
}

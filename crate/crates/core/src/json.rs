//! JSON exchange format for derivations.
//!
//! Unfocused nodes are `{"rule", "args", "premises"}`; focused nodes add
//! `"phase"` and `"tags"`. Files wrap a derivation together with its
//! sequent and profile.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::calculus::Derivation as D;
use crate::error::{Error, Result};
use crate::focused::{FRule, FocusedDerivation as FD, Tag};
use crate::formula::{parse_formula, print_sequent, Sequent};
use crate::profiles::LogicProfile;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Node {
    pub rule: String,
    #[serde(default)]
    pub args: BTreeMap<String, usize>,
    #[serde(default)]
    pub premises: Vec<Node>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FocusedNode {
    pub rule: String,
    pub phase: String,
    pub tags: Option<Vec<TagJson>>,
    #[serde(default)]
    pub args: BTreeMap<String, usize>,
    #[serde(default)]
    pub premises: Vec<FocusedNode>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum TagJson {
    Name(String),
    Ctx { ctx: Vec<String> },
}

/// A derivation file: a sequent, the profile it lives in, and either an
/// unfocused or a focused derivation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Document {
    pub sequent: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub profile: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub derivation: Option<Node>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub focused: Option<FocusedNode>,
}

impl Document {
    pub fn unfocused(s: &Sequent, profile: LogicProfile, d: &D) -> Self {
        Document {
            sequent: print_sequent(s),
            profile: Some(profile.to_string()),
            derivation: Some(derivation_to_node(d)),
            focused: None,
        }
    }

    pub fn focused(s: &Sequent, profile: LogicProfile, d: &FD) -> Self {
        Document {
            sequent: print_sequent(s),
            profile: Some(profile.to_string()),
            derivation: None,
            focused: Some(focused_to_node(d)),
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))
    }

    pub fn to_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn to_compact(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }
}

fn args(pairs: &[(&str, usize)]) -> BTreeMap<String, usize> {
    pairs.iter().map(|(k, v)| (k.to_string(), *v)).collect()
}

pub fn derivation_to_node(d: &D) -> Node {
    let a = match d {
        D::TensorR { split, .. } | D::LimpL { split, .. } => args(&[("split", *split)]),
        D::Ex { pos, .. } => args(&[("pos", *pos)]),
        _ => BTreeMap::new(),
    };
    Node {
        rule: d.label().to_string(),
        args: a,
        premises: d.premises().into_iter().map(derivation_to_node).collect(),
    }
}

fn arg(a: &BTreeMap<String, usize>, key: &str, rule: &str) -> Result<usize> {
    a.get(key)
        .copied()
        .ok_or_else(|| Error::Json(format!("{rule} needs argument {key:?}")))
}

pub fn derivation_from_node(n: &Node) -> Result<D> {
    let ps = n
        .premises
        .iter()
        .map(derivation_from_node)
        .collect::<Result<Vec<_>>>()?;
    let r = n.rule.as_str();
    let want = |k: usize| -> Result<()> {
        if ps.len() == k {
            Ok(())
        } else {
            Err(Error::Json(format!("{r} takes {k} premises, got {}", ps.len())))
        }
    };
    let mut it = ps.clone().into_iter();
    let mut p = || it.next().expect("arity checked");
    Ok(match r {
        "ax" => {
            want(0)?;
            D::Ax
        }
        "IR" => {
            want(0)?;
            D::IR
        }
        "topR" => {
            want(0)?;
            D::TopR
        }
        "botL" => {
            want(0)?;
            D::BotL
        }
        "pass" | "IL" | "otimesL" | "andL1" | "andL2" | "orR1" | "orR2" | "limpR" | "ex" => {
            want(1)?;
            let x = p();
            match r {
                "pass" => D::pass(x),
                "IL" => D::il(x),
                "otimesL" => D::tensor_l(x),
                "andL1" => D::and_l1(x),
                "andL2" => D::and_l2(x),
                "orR1" => D::or_r1(x),
                "orR2" => D::or_r2(x),
                "limpR" => D::limp_r(x),
                _ => D::ex(arg(&n.args, "pos", r)?, x),
            }
        }
        "otimesR" | "limpL" | "andR" | "orL" => {
            want(2)?;
            let (x, y) = (p(), p());
            match r {
                "otimesR" => D::tensor_r(arg(&n.args, "split", r)?, x, y),
                "limpL" => D::limp_l(arg(&n.args, "split", r)?, x, y),
                "andR" => D::and_r(x, y),
                _ => D::or_l(x, y),
            }
        }
        other => return Err(Error::Json(format!("unknown rule {other:?}"))),
    })
}

fn tag_to_json(t: &Tag) -> TagJson {
    match t {
        Tag::Ctx(g) => TagJson::Ctx {
            ctx: g.iter().map(|a| a.to_string()).collect(),
        },
        other => TagJson::Name(other.to_string()),
    }
}

fn tag_from_json(t: &TagJson) -> Result<Tag> {
    Ok(match t {
        TagJson::Name(n) => match n.as_str() {
            "P" => Tag::P,
            "C1" => Tag::C1,
            "C2" => Tag::C2,
            "R" => Tag::R,
            "T" => Tag::T,
            "bullet" => Tag::Bullet,
            other => return Err(Error::Json(format!("unknown tag {other:?}"))),
        },
        TagJson::Ctx { ctx } => Tag::Ctx(
            ctx.iter()
                .map(|a| parse_formula(a, LogicProfile::UNITS_IMPLICATION))
                .collect::<Result<_>>()?,
        ),
    })
}

pub fn focused_to_node(d: &FD) -> FocusedNode {
    let a = match d.rule {
        FRule::TensorR { split } | FRule::LimpL { split } => args(&[("split", split)]),
        FRule::Ex { pos } => args(&[("pos", pos)]),
        _ => BTreeMap::new(),
    };
    FocusedNode {
        rule: d.rule.label().to_string(),
        phase: d.phase().to_string(),
        tags: d.tags.as_ref().map(|l| l.iter().map(tag_to_json).collect()),
        args: a,
        premises: d.premises.iter().map(focused_to_node).collect(),
    }
}

pub fn focused_from_node(n: &FocusedNode) -> Result<FD> {
    use FRule::*;
    let r = n.rule.as_str();
    let rule = match r {
        "ex" => Ex {
            pos: arg(&n.args, "pos", r)?,
        },
        "otimesR" => TensorR {
            split: arg(&n.args, "split", r)?,
        },
        "limpL" => LimpL {
            split: arg(&n.args, "split", r)?,
        },
        _ => [
            RI2C, AndR, LimpR, TopR, LI2RI, IL, TensorL, OrL, BotL, F2LI, Pass, Ax, IR, AndL1, AndL2, OrR1, OrR2,
        ]
        .into_iter()
        .find(|x| x.label() == r)
        .ok_or_else(|| Error::Json(format!("unknown rule {r:?}")))?,
    };
    if rule.phase().to_string() != n.phase {
        return Err(Error::Json(format!(
            "{r} belongs to phase {}, not {}",
            rule.phase(),
            n.phase
        )));
    }
    if n.premises.len() != rule.arity() {
        return Err(Error::Json(format!(
            "{r} takes {} premises, got {}",
            rule.arity(),
            n.premises.len()
        )));
    }
    let tags = match &n.tags {
        None => None,
        Some(l) => Some(l.iter().map(tag_from_json).collect::<Result<Vec<_>>>()?),
    };
    let premises = n
        .premises
        .iter()
        .map(focused_from_node)
        .collect::<Result<Vec<_>>>()?;
    Ok(FD::new(rule, tags, premises))
}

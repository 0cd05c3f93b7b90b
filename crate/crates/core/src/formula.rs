//! Formulas, sequents and their concrete syntax.
//!
//! The ASCII grammar is
//!
//! ```text
//! sequent  ::= stoup "|" context "|-" formula
//! stoup    ::= "-" | formula
//! context  ::= "." | formula ("," formula)*
//! formula  ::= atom | "I" | "Top" | "Bot" | "(" formula ")"
//!            | formula "*" formula | formula "/\" formula
//!            | formula "\/" formula | formula "-o" formula
//! ```
//!
//! Binding strength decreases from `*` over `/\` and `\/` to `-o`; all
//! binary connectives associate to the right.

use std::fmt;

use crate::error::{Error, Result};
use crate::profiles::LogicProfile;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    Atom(String),
    Unit,
    Tensor(Box<Formula>, Box<Formula>),
    With(Box<Formula>, Box<Formula>),
    Plus(Box<Formula>, Box<Formula>),
    Top,
    Zero,
    Limp(Box<Formula>, Box<Formula>),
}

/// Principal connective of a formula.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Connective {
    Atom,
    Unit,
    Tensor,
    With,
    Plus,
    Top,
    Zero,
    Limp,
}

pub type Stoup = Option<Formula>;

impl Formula {
    pub fn atom(name: &str) -> Formula {
        Formula::Atom(name.to_string())
    }

    pub fn tensor(a: Formula, b: Formula) -> Formula {
        Formula::Tensor(Box::new(a), Box::new(b))
    }

    pub fn with(a: Formula, b: Formula) -> Formula {
        Formula::With(Box::new(a), Box::new(b))
    }

    pub fn plus(a: Formula, b: Formula) -> Formula {
        Formula::Plus(Box::new(a), Box::new(b))
    }

    pub fn limp(a: Formula, b: Formula) -> Formula {
        Formula::Limp(Box::new(a), Box::new(b))
    }

    pub fn connective(&self) -> Connective {
        match self {
            Formula::Atom(_) => Connective::Atom,
            Formula::Unit => Connective::Unit,
            Formula::Tensor(..) => Connective::Tensor,
            Formula::With(..) => Connective::With,
            Formula::Plus(..) => Connective::Plus,
            Formula::Top => Connective::Top,
            Formula::Zero => Connective::Zero,
            Formula::Limp(..) => Connective::Limp,
        }
    }

    /// Number of connectives, counting the nullary ones.
    pub fn size(&self) -> usize {
        match self {
            Formula::Atom(_) => 0,
            Formula::Unit | Formula::Top | Formula::Zero => 1,
            Formula::Tensor(a, b)
            | Formula::With(a, b)
            | Formula::Plus(a, b)
            | Formula::Limp(a, b) => 1 + a.size() + b.size(),
        }
    }

    pub fn is_atom(&self) -> bool {
        matches!(self, Formula::Atom(_))
    }

    pub fn validate(&self, profile: LogicProfile) -> Result<()> {
        match self {
            Formula::Atom(_) | Formula::Unit => Ok(()),
            Formula::Top if !profile.units() => {
                Err(Error::Profile("⊤ requires units profile".into()))
            }
            Formula::Zero if !profile.units() => {
                Err(Error::Profile("⊥ requires units profile".into()))
            }
            Formula::Top | Formula::Zero => Ok(()),
            Formula::Limp(..) if !profile.implication() => Err(Error::Profile(
                "⊸ requires implication profile".into(),
            )),
            Formula::Tensor(a, b)
            | Formula::With(a, b)
            | Formula::Plus(a, b)
            | Formula::Limp(a, b) => {
                a.validate(profile)?;
                b.validate(profile)
            }
        }
    }

    fn level(&self) -> u8 {
        match self {
            Formula::Limp(..) => 1,
            Formula::Plus(..) => 2,
            Formula::With(..) => 3,
            Formula::Tensor(..) => 4,
            _ => 5,
        }
    }
}

/// True iff the principal connective admits a right-invertible rule.
pub fn is_negative(a: &Formula, profile: LogicProfile) -> bool {
    match a {
        Formula::With(..) => true,
        Formula::Top => profile.units(),
        Formula::Limp(..) => profile.implication(),
        _ => false,
    }
}

/// True iff no left-invertible rule applies to the stoup.
pub fn is_irreducible_stoup(s: &Stoup, profile: LogicProfile) -> bool {
    match s {
        None => true,
        Some(Formula::Unit | Formula::Tensor(..) | Formula::Plus(..)) => false,
        Some(Formula::Zero) => !profile.units(),
        Some(_) => true,
    }
}

/// Flattens additive conjunctions.
pub fn conj(a: &Formula) -> Vec<Formula> {
    let mut out = Vec::new();
    conj_into(a, &mut out);
    out
}

fn conj_into(a: &Formula, out: &mut Vec<Formula>) {
    match a {
        Formula::With(l, r) => {
            conj_into(l, out);
            conj_into(r, out);
        }
        _ => out.push(a.clone()),
    }
}

/// Flattens additive conjunctions and linear implications: every
/// component pairs the hypotheses moved into the context with the
/// remaining non-negative succedent.
pub fn impconj(a: &Formula) -> Vec<(Vec<Formula>, Formula)> {
    match a {
        Formula::With(l, r) => {
            let mut v = impconj(l);
            v.extend(impconj(r));
            v
        }
        Formula::Limp(h, c) => impconj(c)
            .into_iter()
            .map(|(mut ctx, p)| {
                ctx.insert(0, (**h).clone());
                (ctx, p)
            })
            .collect(),
        _ => vec![(Vec::new(), a.clone())],
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (op, l, r) = match self {
            Formula::Atom(x) => return write!(f, "{x}"),
            Formula::Unit => return write!(f, "I"),
            Formula::Top => return write!(f, "Top"),
            Formula::Zero => return write!(f, "Bot"),
            Formula::Tensor(l, r) => ("*", l, r),
            Formula::With(l, r) => ("/\\", l, r),
            Formula::Plus(l, r) => ("\\/", l, r),
            Formula::Limp(l, r) => ("-o", l, r),
        };
        let lv = self.level();
        if l.level() <= lv {
            write!(f, "({l})")?;
        } else {
            write!(f, "{l}")?;
        }
        write!(f, " {op} ")?;
        if r.level() < lv {
            write!(f, "({r})")
        } else {
            write!(f, "{r}")
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Sequent {
    pub stoup: Stoup,
    pub context: Vec<Formula>,
    pub succedent: Formula,
}

impl Sequent {
    pub fn new(stoup: Stoup, context: Vec<Formula>, succedent: Formula) -> Self {
        Sequent {
            stoup,
            context,
            succedent,
        }
    }

    pub fn size(&self) -> usize {
        self.stoup.as_ref().map_or(0, Formula::size)
            + self.context.iter().map(Formula::size).sum::<usize>()
            + self.succedent.size()
    }

    pub fn validate(&self, profile: LogicProfile) -> Result<()> {
        if let Some(s) = &self.stoup {
            s.validate(profile)?;
        }
        for c in &self.context {
            c.validate(profile)?;
        }
        self.succedent.validate(profile)
    }
}

impl fmt::Display for Sequent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.stoup {
            None => write!(f, "-")?,
            Some(a) => write!(f, "{a}")?,
        }
        write!(f, " | ")?;
        if self.context.is_empty() {
            write!(f, ".")?;
        } else {
            for (i, c) in self.context.iter().enumerate() {
                if i > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{c}")?;
            }
        }
        write!(f, " |- {}", self.succedent)
    }
}

pub fn print_sequent(s: &Sequent) -> String {
    s.to_string()
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Star,
    With,
    Plus,
    Limp,
    LParen,
    RParen,
    Bar,
    Turnstile,
    Comma,
    Dot,
    Dash,
    End,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'*' => Tok::Star,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b',' => Tok::Comma,
            b'.' => Tok::Dot,
            b'/' if bytes.get(i + 1) == Some(&b'\\') => {
                i += 1;
                Tok::With
            }
            b'\\' if bytes.get(i + 1) == Some(&b'/') => {
                i += 1;
                Tok::Plus
            }
            b'-' if bytes.get(i + 1) == Some(&b'o')
                && !bytes
                    .get(i + 2)
                    .is_some_and(|b| b.is_ascii_alphanumeric() || *b == b'_') =>
            {
                i += 1;
                Tok::Limp
            }
            b'-' => Tok::Dash,
            b'|' if bytes.get(i + 1) == Some(&b'-') => {
                i += 1;
                Tok::Turnstile
            }
            b'|' => Tok::Bar,
            c if c.is_ascii_alphabetic() => {
                while i + 1 < bytes.len()
                    && (bytes[i + 1].is_ascii_alphanumeric() || bytes[i + 1] == b'_')
                {
                    i += 1;
                }
                Tok::Ident(text[start..=i].to_string())
            }
            _ => {
                return Err(Error::Syntax {
                    pos: i,
                    msg: format!("unexpected character {:?}", c as char),
                })
            }
        };
        i += 1;
        out.push((start, tok));
    }
    out.push((text.len(), Tok::End));
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].1
    }

    fn pos(&self) -> usize {
        self.toks[self.at].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].1.clone();
        if t != Tok::End {
            self.at += 1;
        }
        t
    }

    fn expect(&mut self, t: Tok, what: &str) -> Result<()> {
        if *self.peek() == t {
            self.bump();
            Ok(())
        } else {
            Err(self.error(format!("expected {what}")))
        }
    }

    fn error(&self, msg: String) -> Error {
        Error::Syntax {
            pos: self.pos(),
            msg,
        }
    }

    fn formula(&mut self) -> Result<Formula> {
        self.binary(1)
    }

    fn binary(&mut self, level: u8) -> Result<Formula> {
        if level > 4 {
            return self.primary();
        }
        let lhs = self.binary(level + 1)?;
        let op = match (level, self.peek()) {
            (1, Tok::Limp) => Formula::limp as fn(Formula, Formula) -> Formula,
            (2, Tok::Plus) => Formula::plus,
            (3, Tok::With) => Formula::with,
            (4, Tok::Star) => Formula::tensor,
            _ => return Ok(lhs),
        };
        self.bump();
        let rhs = self.binary(level)?;
        Ok(op(lhs, rhs))
    }

    fn primary(&mut self) -> Result<Formula> {
        if !matches!(self.peek(), Tok::LParen | Tok::Ident(_)) {
            return Err(self.error("expected a formula".into()));
        }
        match self.bump() {
            Tok::LParen => {
                let f = self.formula()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(f)
            }
            Tok::Ident(name) => Ok(match name.as_str() {
                "I" => Formula::Unit,
                "Top" => Formula::Top,
                "Bot" => Formula::Zero,
                _ => Formula::Atom(name),
            }),
            _ => unreachable!(),
        }
    }

    fn sequent(&mut self) -> Result<Sequent> {
        let stoup = if *self.peek() == Tok::Dash {
            self.bump();
            None
        } else {
            Some(self.formula()?)
        };
        self.expect(Tok::Bar, "'|'")?;
        let mut context = Vec::new();
        match self.peek() {
            Tok::Dot => {
                self.bump();
            }
            Tok::Turnstile => {}
            _ => {
                context.push(self.formula()?);
                while *self.peek() == Tok::Comma {
                    self.bump();
                    context.push(self.formula()?);
                }
            }
        }
        self.expect(Tok::Turnstile, "'|-'")?;
        let succedent = self.formula()?;
        if *self.peek() != Tok::End {
            return Err(self.error("trailing input".into()));
        }
        Ok(Sequent::new(stoup, context, succedent))
    }
}

pub fn parse_formula(text: &str, profile: LogicProfile) -> Result<Formula> {
    let mut p = Parser {
        toks: tokenize(text)?,
        at: 0,
    };
    let f = p.formula()?;
    if *p.peek() != Tok::End {
        return Err(p.error("trailing input".into()));
    }
    f.validate(profile)?;
    Ok(f)
}

pub fn parse_sequent(text: &str, profile: LogicProfile) -> Result<Sequent> {
    let mut p = Parser {
        toks: tokenize(text)?,
        at: 0,
    };
    let s = p.sequent()?;
    s.validate(profile)?;
    Ok(s)
}

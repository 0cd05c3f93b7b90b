use std::fmt;

use thiserror::Error;

/// Location of a node inside a derivation tree, as the list of premise
/// indices taken from the root.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path(pub Vec<usize>);

impl Path {
    pub fn root() -> Self {
        Path(Vec::new())
    }

    pub fn child(&self, i: usize) -> Self {
        let mut v = self.0.clone();
        v.push(i);
        Path(v)
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "root")?;
        for i in &self.0 {
            write!(f, ".{i}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("syntax error at {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("{0}")]
    Profile(String),
    #[error("at {path}: {msg}")]
    Check { path: Path, msg: String },
    #[error("cut: {0}")]
    Cut(String),
    #[error("rewrite: {0}")]
    Rewrite(String),
    #[error("budget exceeded: {0}")]
    Budget(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("focus: {0}")]
    Focus(String),
    #[error("json: {0}")]
    Json(String),
}

impl Error {
    pub(crate) fn check(path: &Path, msg: impl Into<String>) -> Self {
        Error::Check {
            path: path.clone(),
            msg: msg.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

//! Validation outcomes that name the first violated rule together with a witness.

use std::fmt;

use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub rule: &'static str,
    pub witness: Vec<String>,
}

impl Violation {
    pub fn new<I, S>(rule: &'static str, witness: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Violation { rule, witness: witness.into_iter().map(Into::into).collect() }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.witness.is_empty() {
            write!(f, "({})", self.rule)
        } else {
            write!(f, "({}) witness {}", self.rule, self.witness.join(", "))
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum StructReport {
    Pass,
    Fail(Violation),
}

impl StructReport {
    pub fn is_pass(&self) -> bool {
        matches!(self, StructReport::Pass)
    }

    pub fn violation(&self) -> Option<&Violation> {
        match self {
            StructReport::Pass => None,
            StructReport::Fail(v) => Some(v),
        }
    }

    pub fn rule(&self) -> Option<&'static str> {
        self.violation().map(|v| v.rule)
    }

    pub fn into_result<T>(self, ok: T, wrap: impl FnOnce(Violation) -> crate::Error) -> crate::Result<T> {
        match self {
            StructReport::Pass => Ok(ok),
            StructReport::Fail(v) => Err(wrap(v)),
        }
    }
}

impl fmt::Display for StructReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StructReport::Pass => f.write_str("PASS"),
            StructReport::Fail(v) => write!(f, "FAIL {v}"),
        }
    }
}

/// Short-circuits a validator with a failing report.
macro_rules! fail {
    ($rule:expr $(, $w:expr)* $(,)?) => {
        return $crate::report::StructReport::Fail($crate::report::Violation::new(
            $rule,
            <[::std::string::String; 0]>::default().into_iter().chain([$(::std::string::String::from($w)),*]),
        ))
    };
}
pub(crate) use fail;

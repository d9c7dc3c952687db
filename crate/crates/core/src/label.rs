//! Structured vertex labels.
//!
//! A label is an integer, a bare name such as `w` or `x3`, or a tuple of
//! labels such as `(2,(1,0))`. Product and Mycielskian constructions build
//! tuples, so coordinates stay readable all the way into complexes and
//! reports. The derived ordering (integers, then names, then tuples
//! compared lexicographically) is the canonical vertex order used for every
//! enumeration in the crate.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Label {
    Int(i64),
    Name(String),
    Tuple(Vec<Label>),
}

impl Label {
    /// A named label. Names must be non-empty, start with a letter or `_`,
    /// and contain only ASCII alphanumerics and `_`.
    pub fn name(name: impl Into<String>) -> Label {
        let name = name.into();
        assert!(valid_name(&name), "invalid label name {name:?}");
        Label::Name(name)
    }

    pub fn pair(a: impl Into<Label>, b: impl Into<Label>) -> Label {
        Label::Tuple(vec![a.into(), b.into()])
    }

    pub fn as_int(&self) -> Option<i64> {
        match self {
            Label::Int(i) => Some(*i),
            _ => None,
        }
    }

    /// Components of a tuple label; `None` for atoms.
    pub fn components(&self) -> Option<&[Label]> {
        match self {
            Label::Tuple(parts) => Some(parts),
            _ => None,
        }
    }
}

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl From<i64> for Label {
    fn from(value: i64) -> Self {
        Label::Int(value)
    }
}

impl From<i32> for Label {
    fn from(value: i32) -> Self {
        Label::Int(value.into())
    }
}

impl From<usize> for Label {
    fn from(value: usize) -> Self {
        Label::Int(value as i64)
    }
}

impl From<&str> for Label {
    fn from(value: &str) -> Self {
        Label::name(value)
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Int(i) => write!(f, "{i}"),
            Label::Name(s) => f.write_str(s),
            Label::Tuple(parts) => {
                f.write_str("(")?;
                for (k, p) in parts.iter().enumerate() {
                    if k > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{p}")?;
                }
                f.write_str(")")
            }
        }
    }
}

impl FromStr for Label {
    type Err = Error;

    fn from_str(s: &str) -> Result<Label> {
        let mut parser = Parser { src: s.as_bytes(), pos: 0 };
        let label = parser.label()?;
        parser.skip_ws();
        if parser.pos != parser.src.len() {
            return Err(Error::Parse(format!("trailing input in label {s:?}")));
        }
        Ok(label)
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn err(&self, what: &str) -> Error {
        Error::Parse(format!(
            "{what} at byte {} of {:?}",
            self.pos,
            String::from_utf8_lossy(self.src)
        ))
    }

    fn label(&mut self) -> Result<Label> {
        self.skip_ws();
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let mut parts = vec![self.label()?];
                loop {
                    self.skip_ws();
                    match self.peek() {
                        Some(b',') => {
                            self.pos += 1;
                            parts.push(self.label()?);
                        }
                        Some(b')') => {
                            self.pos += 1;
                            return Ok(Label::Tuple(parts));
                        }
                        _ => return Err(self.err("expected `,` or `)`")),
                    }
                }
            }
            Some(c) if c == b'-' || c.is_ascii_digit() => {
                let start = self.pos;
                self.pos += 1;
                while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
                    self.pos += 1;
                }
                let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                text.parse::<i64>()
                    .map(Label::Int)
                    .map_err(|_| self.err("bad integer"))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric() || c == b'_') {
                    self.pos += 1;
                }
                let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                Ok(Label::Name(text.to_owned()))
            }
            _ => Err(self.err("expected a label")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_and_parse() {
        let l = Label::pair(Label::pair(1, 2), 0);
        assert_eq!(l.to_string(), "((1,2),0)");
        assert_eq!("((1,2),0)".parse::<Label>().unwrap(), l);
        assert_eq!(" ( 3 , w ) ".parse::<Label>().unwrap(), Label::pair(3, "w"));
        assert_eq!("-4".parse::<Label>().unwrap(), Label::Int(-4));
        assert!("(1,".parse::<Label>().is_err());
        assert!("1 2".parse::<Label>().is_err());
        assert!("".parse::<Label>().is_err());
    }

    #[test]
    fn ordering_is_numeric_within_tuples() {
        let mut v = vec![Label::pair(10, 0), Label::pair(2, 1), Label::name("w"), Label::Int(3)];
        v.sort();
        assert_eq!(
            v,
            vec![Label::Int(3), Label::name("w"), Label::pair(2, 1), Label::pair(10, 0)]
        );
    }

    #[test]
    fn json_is_structured() {
        let l = Label::pair(1, "w");
        let s = serde_json::to_string(&l).unwrap();
        assert_eq!(s, r#"[1,"w"]"#);
        assert_eq!(serde_json::from_str::<Label>(&s).unwrap(), l);
    }

    #[test]
    #[should_panic]
    fn bad_name_panics() {
        Label::name("a b");
    }
}

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Passage {
    Over,
    Under,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Token {
    pub passage: Passage,
    pub label: usize,
    pub sign: Sign,
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = match self.passage {
            Passage::Over => 'O',
            Passage::Under => 'U',
        };
        let s = match self.sign {
            Sign::Positive => '+',
            Sign::Negative => '-',
        };
        write!(f, "{p}{}{s}", self.label)
    }
}

/// A signed oriented Gauss code of a one-component diagram, classical or
/// virtual.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct GaussCode {
    tokens: Vec<Token>,
}

fn err(index: usize, message: impl Into<String>) -> Error {
    Error::GaussCode {
        index,
        message: message.into(),
    }
}

impl GaussCode {
    /// Validates that every label occurs exactly twice, once over and once
    /// under, with the same sign. Error indices are 1-based token positions.
    pub fn new(tokens: Vec<Token>) -> Result<Self> {
        let mut seen: BTreeMap<usize, (usize, Token)> = BTreeMap::new();
        let mut pairs: BTreeMap<usize, usize> = BTreeMap::new();
        for (i, t) in tokens.iter().enumerate() {
            match seen.get(&t.label) {
                None => {
                    seen.insert(t.label, (i, *t));
                }
                Some(&(_, first)) => {
                    if pairs.contains_key(&t.label) || first.passage == t.passage {
                        return Err(err(
                            i + 1,
                            format!("duplicate {} passage for crossing {}", passage_name(t.passage), t.label),
                        ));
                    }
                    if first.sign != t.sign {
                        return Err(err(i + 1, format!("sign mismatch for crossing {}", t.label)));
                    }
                    pairs.insert(t.label, i);
                }
            }
        }
        if let Some((&label, &(i, _))) = seen.iter().filter(|(l, _)| !pairs.contains_key(l)).min_by_key(|(_, (i, _))| *i) {
            return Err(err(i + 1, format!("crossing {label} appears only once")));
        }
        Ok(GaussCode { tokens })
    }

    /// Grammar: `((O|U)<digits>(+|-))*`, case-insensitive, whitespace allowed
    /// between tokens.
    pub fn parse(text: &str) -> Result<Self> {
        let mut tokens = Vec::new();
        let mut chars = text.chars().peekable();
        loop {
            while chars.peek().is_some_and(|c| c.is_whitespace()) {
                chars.next();
            }
            let Some(c) = chars.next() else { break };
            let index = tokens.len() + 1;
            let passage = match c.to_ascii_uppercase() {
                'O' => Passage::Over,
                'U' => Passage::Under,
                other => return Err(err(index, format!("expected O or U, found `{other}`"))),
            };
            let mut digits = String::new();
            while let Some(&d) = chars.peek() {
                if d.is_ascii_digit() {
                    digits.push(d);
                    chars.next();
                } else {
                    break;
                }
            }
            let label = digits
                .parse::<usize>()
                .map_err(|_| err(index, "expected a crossing label"))?;
            let sign = match chars.next() {
                Some('+') => Sign::Positive,
                Some('-') => Sign::Negative,
                Some(other) => return Err(err(index, format!("expected + or -, found `{other}`"))),
                None => return Err(err(index, "missing sign")),
            };
            tokens.push(Token { passage, label, sign });
        }
        GaussCode::new(tokens)
    }

    pub fn tokens(&self) -> &[Token] {
        &self.tokens
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    pub fn crossing_count(&self) -> usize {
        self.tokens.len() / 2
    }

    /// The same code with every sign flipped, a diagram of the mirror image.
    pub fn mirror(&self) -> GaussCode {
        GaussCode {
            tokens: self
                .tokens
                .iter()
                .map(|t| Token {
                    sign: t.sign.flip(),
                    ..*t
                })
                .collect(),
        }
    }

    /// Inserts a Reidemeister-I curl (two consecutive passages of a new
    /// crossing) before token `position`.
    pub fn with_kink(&self, position: usize, over_first: bool, sign: Sign) -> GaussCode {
        assert!(position <= self.tokens.len());
        let label = self.tokens.iter().map(|t| t.label).max().unwrap_or(0) + 1;
        let (a, b) = if over_first {
            (Passage::Over, Passage::Under)
        } else {
            (Passage::Under, Passage::Over)
        };
        let mut tokens = self.tokens.clone();
        tokens.insert(position, Token { passage: b, label, sign });
        tokens.insert(position, Token { passage: a, label, sign });
        GaussCode { tokens }
    }
}

fn passage_name(p: Passage) -> &'static str {
    match p {
        Passage::Over => "over",
        Passage::Under => "under",
    }
}

impl fmt::Display for GaussCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for t in &self.tokens {
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

impl FromStr for GaussCode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        GaussCode::parse(s)
    }
}

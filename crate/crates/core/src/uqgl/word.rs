//! Words in the generators `E_h^(m)`, `F_h^(m)`, `K_i^{+-1}`, `[K_i;0 over t]`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A generator of `U(n)`, 0-based indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Generator {
    /// `E_h^(m)`.
    DividedE { h: usize, m: i64 },
    /// `F_h^(m)`.
    DividedF { h: usize, m: i64 },
    /// `K_i^sign` with `sign = +-1`.
    K { i: usize, sign: i8 },
    /// `[K_i;0 over t]`.
    KBinom { i: usize, t: i64 },
}

impl Generator {
    pub fn e(h: usize) -> Self {
        Generator::DividedE { h, m: 1 }
    }

    pub fn f(h: usize) -> Self {
        Generator::DividedF { h, m: 1 }
    }

    pub fn k(i: usize) -> Self {
        Generator::K { i, sign: 1 }
    }

    pub fn k_inv(i: usize) -> Self {
        Generator::K { i, sign: -1 }
    }

    /// Checks the indices against rank `n`.
    pub fn validate(&self, n: usize) -> Result<()> {
        let ok = match *self {
            Generator::DividedE { h, m } | Generator::DividedF { h, m } => h + 1 < n && m >= 0,
            Generator::K { i, sign } => i < n && (sign == 1 || sign == -1),
            Generator::KBinom { i, t } => i < n && t >= 0,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::Domain(format!(
                "{self} is not a generator for n = {n}"
            )))
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Generator::DividedE { h, m: 1 } => write!(f, "E{}", h + 1),
            Generator::DividedE { h, m } => write!(f, "E{}^({m})", h + 1),
            Generator::DividedF { h, m: 1 } => write!(f, "F{}", h + 1),
            Generator::DividedF { h, m } => write!(f, "F{}^({m})", h + 1),
            Generator::K { i, sign: 1 } => write!(f, "K{}", i + 1),
            Generator::K { i, .. } => write!(f, "K{}^-1", i + 1),
            Generator::KBinom { i, t } => write!(f, "[K{};{t}]", i + 1),
        }
    }
}

/// A product of generators, read left to right.
///
/// Text form (1-based): whitespace-separated tokens `E1`, `F2`, `K3`,
/// `E1^(2)` for a divided power, `E1^2` or `K2^-1` for ordinary powers, and
/// `[K1;2]` for `[K_1;0 over 2]`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GeneratorWord(pub Vec<Generator>);

impl GeneratorWord {
    pub fn new(gens: Vec<Generator>) -> Self {
        GeneratorWord(gens)
    }

    pub fn generators(&self) -> &[Generator] {
        &self.0
    }

    pub fn validate(&self, n: usize) -> Result<()> {
        self.0.iter().try_for_each(|g| g.validate(n))
    }

    /// `self` followed by `other`.
    pub fn concat(&self, other: &GeneratorWord) -> GeneratorWord {
        GeneratorWord(self.0.iter().chain(&other.0).copied().collect())
    }
}

impl From<Vec<Generator>> for GeneratorWord {
    fn from(gens: Vec<Generator>) -> Self {
        GeneratorWord(gens)
    }
}

impl fmt::Display for GeneratorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (k, g) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

fn parse_index(s: &str, token: &str) -> Result<usize> {
    match s.parse::<usize>() {
        Ok(i) if i >= 1 => Ok(i - 1),
        _ => Err(Error::Parse(format!("bad index in {token:?}"))),
    }
}

fn parse_token(token: &str, out: &mut Vec<Generator>) -> Result<()> {
    let bad = || Error::Parse(format!("unrecognized generator {token:?}"));
    if let Some(inner) = token.strip_prefix("[K").and_then(|s| s.strip_suffix(']')) {
        let (i, t) = inner.split_once(';').ok_or_else(bad)?;
        let t = t.parse::<i64>().ok().filter(|&t| t >= 0).ok_or_else(bad)?;
        out.push(Generator::KBinom {
            i: parse_index(i, token)?,
            t,
        });
        return Ok(());
    }
    let letter = token.chars().next().ok_or_else(bad)?;
    let rest = &token[1..];
    let (index, power) = match rest.split_once('^') {
        Some((i, p)) => (i, Some(p)),
        None => (rest, None),
    };
    let idx = parse_index(index, token)?;
    let divided = power.and_then(|p| p.strip_prefix('(').and_then(|p| p.strip_suffix(')')));
    let (m, reps) = match (divided, power) {
        (Some(d), _) => (d.parse::<i64>().map_err(|_| bad())?, 1),
        (None, Some(p)) => (1, p.parse::<i64>().map_err(|_| bad())?),
        (None, None) => (1, 1),
    };
    let g = match letter {
        'E' => Generator::DividedE { h: idx, m },
        'F' => Generator::DividedF { h: idx, m },
        'K' if divided.is_none() => {
            let sign = if reps < 0 { -1 } else { 1 };
            out.extend(std::iter::repeat_n(
                Generator::K { i: idx, sign },
                reps.unsigned_abs() as usize,
            ));
            return Ok(());
        }
        _ => return Err(bad()),
    };
    if m < 0 || reps < 0 {
        return Err(bad());
    }
    out.extend(std::iter::repeat_n(g, reps as usize));
    Ok(())
}

impl FromStr for GeneratorWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut gens = Vec::new();
        for token in s.split_whitespace() {
            if token != "1" {
                parse_token(token, &mut gens)?;
            }
        }
        Ok(GeneratorWord(gens))
    }
}

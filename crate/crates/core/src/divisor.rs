//! Degree divisors: multisets of positive integers written `1^b1 2^b2 ...`.
//!
//! The same type records the cycle type of a permutation and the
//! residue-degree profile of a squarefree polynomial.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DivisorError {
    #[error("malformed divisor token {0:?}")]
    Malformed(String),
    #[error("divisor entries must be positive")]
    ZeroPart,
    #[error("bases must be strictly ascending in {0:?}")]
    NotAscending(String),
}

/// Sorted multiset `m_1 <= ... <= m_s` of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct DegreeDivisor {
    parts: Vec<usize>,
}

impl DegreeDivisor {
    pub fn new(mut parts: Vec<usize>) -> Result<Self, DivisorError> {
        if parts.contains(&0) {
            return Err(DivisorError::ZeroPart);
        }
        parts.sort_unstable();
        Ok(DegreeDivisor { parts })
    }

    /// Builds from `(base, exponent)` pairs; zero exponents are dropped.
    pub fn from_powers(powers: &[(usize, usize)]) -> Result<Self, DivisorError> {
        let mut parts = Vec::new();
        for &(base, exp) in powers {
            if base == 0 && exp > 0 {
                return Err(DivisorError::ZeroPart);
            }
            parts.extend(std::iter::repeat_n(base, exp));
        }
        Self::new(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `n = m_1 + ... + m_s`.
    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `(b_1, ..., b_n)` where `b_i` counts the parts equal to `i`.
    pub fn multiplicities(&self) -> Vec<usize> {
        let n = self.total();
        let mut b = vec![0; n];
        for &m in &self.parts {
            b[m - 1] += 1;
        }
        b
    }

    /// `(base, exponent)` pairs with nonzero exponent, ascending base.
    pub fn powers(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &m in &self.parts {
            match out.last_mut() {
                Some((b, e)) if *b == m => *e += 1,
                _ => out.push((m, 1)),
            }
        }
        out
    }

    /// Least common multiple of the parts (order of a permutation of this type).
    pub fn lcm(&self) -> usize {
        self.parts
            .iter()
            .fold(1, |acc, &m| num_integer::lcm(acc, m))
    }

    /// All partitions of `n`, in ascending order of their sorted part lists.
    pub fn partitions(n: usize) -> Vec<DegreeDivisor> {
        fn go(rest: usize, min: usize, cur: &mut Vec<usize>, out: &mut Vec<DegreeDivisor>) {
            if rest == 0 {
                out.push(DegreeDivisor { parts: cur.clone() });
                return;
            }
            for m in min..=rest {
                cur.push(m);
                go(rest - m, m, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if n > 0 {
            go(n, 1, &mut Vec::new(), &mut out);
        }
        out.sort();
        out
    }
}

impl fmt::Display for DegreeDivisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (b, e)) in self.powers().into_iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{b}^{e}")?;
        }
        Ok(())
    }
}

impl FromStr for DegreeDivisor {
    type Err = DivisorError;

    /// Parses `"1^2 3^1"`. Tokens may also be separated by `*` or `.`; a bare
    /// base `"3"` means exponent 1.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut powers = Vec::new();
        let mut last = 0;
        for tok in s
            .split(|c: char| c.is_whitespace() || c == '*' || c == '.')
            .filter(|t| !t.is_empty())
        {
            let (b, e) = match tok.split_once('^') {
                Some((b, e)) => (b, e),
                None => (tok, "1"),
            };
            let b: usize = b
                .parse()
                .map_err(|_| DivisorError::Malformed(tok.to_string()))?;
            let e: usize = e
                .parse()
                .map_err(|_| DivisorError::Malformed(tok.to_string()))?;
            if b == 0 {
                return Err(DivisorError::ZeroPart);
            }
            if b <= last {
                return Err(DivisorError::NotAscending(s.to_string()));
            }
            last = b;
            powers.push((b, e));
        }
        if powers.is_empty() {
            return Err(DivisorError::Malformed(s.to_string()));
        }
        Self::from_powers(&powers)
    }
}

impl Serialize for DegreeDivisor {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

//! Normal-form basis words x^s u^t a_F^E.

use crate::lin::Label;
use smallvec::SmallVec;
use std::fmt;

/// The pair (F, E): finitely many indices with nonzero exponents, keys
/// strictly ascending.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Tail(SmallVec<[(u32, i32); 2]>);

impl Tail {
    pub fn empty() -> Tail {
        Tail(SmallVec::new())
    }

    /// Build from (index, exponent) pairs in any order; zero exponents are
    /// dropped and repeated indices are summed.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (u32, i32)>) -> Tail {
        let mut v: Vec<(u32, i32)> = pairs.into_iter().collect();
        v.sort_by_key(|p| p.0);
        let mut out: SmallVec<[(u32, i32); 2]> = SmallVec::new();
        for (i, e) in v {
            match out.last_mut() {
                Some(last) if last.0 == i => last.1 += e,
                _ => out.push((i, e)),
            }
        }
        out.retain(|p| p.1 != 0);
        Tail(out)
    }

    pub fn single(i: u32, e: i32) -> Tail {
        Tail::from_pairs([(i, e)])
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &(u32, i32)> {
        self.0.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = u32> + '_ {
        self.0.iter().map(|p| p.0)
    }

    pub fn exponent(&self, i: u32) -> i32 {
        self.0.iter().find(|p| p.0 == i).map_or(0, |p| p.1)
    }

    /// a_F^E · a_{F'}^{E'}.
    pub fn merge(&self, other: &Tail) -> Tail {
        let mut out: SmallVec<[(u32, i32); 2]> = SmallVec::new();
        let (a, b) = (&self.0, &other.0);
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
                out.push(a[i]);
                i += 1;
            } else if i == a.len() || b[j].0 < a[i].0 {
                out.push(b[j]);
                j += 1;
            } else {
                let e = a[i].1 + b[j].1;
                if e != 0 {
                    out.push((a[i].0, e));
                }
                i += 1;
                j += 1;
            }
        }
        Tail(out)
    }

    pub fn inverse(&self) -> Tail {
        Tail(self.0.iter().map(|&(i, e)| (i, -e)).collect())
    }

    /// Σ e_i.
    pub fn total_degree(&self) -> i64 {
        self.0.iter().map(|p| p.1 as i64).sum()
    }

    pub fn max_abs_exponent(&self) -> u32 {
        self.0.iter().map(|p| p.1.unsigned_abs()).max().unwrap_or(0)
    }

    pub fn support_size(&self) -> usize {
        self.0.len()
    }
}

impl fmt::Display for Tail {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|&(i, e)| if e == 1 { format!("a{{{i}}}") } else { format!("a{{{i}}}^{e}") })
            .collect();
        f.write_str(&parts.join(" "))
    }
}

/// Basis element x^s u^t a_F^E.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    pub s: u32,
    pub t: u32,
    pub tail: Tail,
}

impl Monomial {
    pub fn new(s: u32, t: u32, tail: Tail) -> Monomial {
        Monomial { s, t, tail }
    }

    pub fn one() -> Monomial {
        Monomial::new(0, 0, Tail::empty())
    }

    pub fn grouplike(t: u32, tail: Tail) -> Monomial {
        Monomial::new(0, t, tail)
    }
}

pub(crate) fn write_word(f: &mut String, sym: &str, e: i64) {
    if e == 0 {
        return;
    }
    if !f.is_empty() {
        f.push(' ');
    }
    if e == 1 {
        f.push_str(sym);
    } else {
        f.push_str(&format!("{sym}^{e}"));
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        write_word(&mut s, "x", self.s as i64);
        write_word(&mut s, "u", self.t as i64);
        if !self.tail.is_empty() {
            if !s.is_empty() {
                s.push(' ');
            }
            s.push_str(&self.tail.to_string());
        }
        if s.is_empty() {
            s.push('1');
        }
        f.write_str(&s)
    }
}

impl Label for Monomial {
    fn label(&self) -> String {
        self.to_string()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("cannot parse monomial '{0}'")]
pub struct MonomialParseError(pub String);

/// Parse `x^s u^t a{i}^e …` (factors in any order, each at most once).
pub fn parse_word(text: &str) -> Result<(i64, i64, Tail), MonomialParseError> {
    let err = || MonomialParseError(text.to_string());
    let (mut s, mut t) = (0i64, 0i64);
    let mut pairs = Vec::new();
    let text = text.trim();
    if text == "1" {
        return Ok((0, 0, Tail::empty()));
    }
    for tok in text.split_whitespace() {
        let (base, exp) = match tok.split_once('^') {
            Some((b, e)) => (b, e.parse::<i64>().map_err(|_| err())?),
            None => (tok, 1),
        };
        match base {
            "x" => s += exp,
            "u" => t += exp,
            _ => {
                let idx = base
                    .strip_prefix("a{")
                    .and_then(|r| r.strip_suffix('}'))
                    .ok_or_else(err)?;
                let i: u32 = idx.parse().map_err(|_| err())?;
                pairs.push((i, i32::try_from(exp).map_err(|_| err())?));
            }
        }
    }
    Ok((s, t, Tail::from_pairs(pairs)))
}

//! Sparse linear combinations over a basis.

use crate::scalars::Scalar;
use std::collections::btree_map::{self, Entry};
use std::collections::BTreeMap;
use std::fmt;

/// Text label of a basis element, used when printing elements and tensors.
pub trait Label {
    fn label(&self) -> String;
}

impl Label for usize {
    fn label(&self) -> String {
        format!("b{self}")
    }
}

impl<A: Label, B: Label> Label for (A, B) {
    fn label(&self) -> String {
        format!("{} ⊗ {}", self.0.label(), self.1.label())
    }
}

impl<A: Label, B: Label, C: Label> Label for (A, B, C) {
    fn label(&self) -> String {
        format!("{} ⊗ {} ⊗ {}", self.0.label(), self.1.label(), self.2.label())
    }
}

/// A finite linear combination Σ c_k·k with no zero coefficients stored.
#[derive(Clone, PartialEq, Eq)]
pub struct Lin<K: Ord> {
    terms: BTreeMap<K, Scalar>,
}

pub type Tensor2<B> = Lin<(B, B)>;
pub type Tensor3<B> = Lin<(B, B, B)>;

impl<K: Ord> Default for Lin<K> {
    fn default() -> Self {
        Lin {
            terms: BTreeMap::new(),
        }
    }
}

impl<K: Ord + Clone> Lin<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn single(k: K, c: Scalar) -> Self {
        let mut out = Self::zero();
        out.add_term(k, c);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, k: &K) -> Option<&Scalar> {
        self.terms.get(k)
    }

    pub fn iter(&self) -> btree_map::Iter<'_, K, Scalar> {
        self.terms.iter()
    }

    pub fn keys(&self) -> btree_map::Keys<'_, K, Scalar> {
        self.terms.keys()
    }

    pub fn add_term(&mut self, k: K, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(k) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add_assign(&mut self, other: &Lin<K>) {
        for (k, c) in other.iter() {
            self.add_term(k.clone(), c.clone());
        }
    }

    pub fn add_scaled(&mut self, other: &Lin<K>, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        for (k, v) in other.iter() {
            self.add_term(k.clone(), v * c);
        }
    }

    pub fn scaled(&self, c: &Scalar) -> Lin<K> {
        if c.is_zero() {
            return Lin::zero();
        }
        Lin {
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    pub fn neg(&self) -> Lin<K> {
        Lin {
            terms: self.terms.iter().map(|(k, v)| (k.clone(), -v)).collect(),
        }
    }

    pub fn plus(&self, other: &Lin<K>) -> Lin<K> {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn minus(&self, other: &Lin<K>) -> Lin<K> {
        self.plus(&other.neg())
    }

    /// Apply a linear map given on basis elements.
    pub fn map<L: Ord + Clone>(&self, mut f: impl FnMut(&K) -> Lin<L>) -> Lin<L> {
        let mut out = Lin::zero();
        for (k, c) in self.iter() {
            out.add_scaled(&f(k), c);
        }
        out
    }
}

impl<K: Ord + Clone> FromIterator<(K, Scalar)> for Lin<K> {
    fn from_iter<I: IntoIterator<Item = (K, Scalar)>>(iter: I) -> Self {
        let mut out = Lin::zero();
        for (k, c) in iter {
            out.add_term(k, c);
        }
        out
    }
}

impl<K: Ord> IntoIterator for Lin<K> {
    type Item = (K, Scalar);
    type IntoIter = btree_map::IntoIter<K, Scalar>;
    fn into_iter(self) -> Self::IntoIter {
        self.terms.into_iter()
    }
}

fn is_unit_label(s: &str) -> bool {
    s == "1"
}

impl<K: Ord + Label> fmt::Display for Lin<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (k, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            let label = k.label();
            if c.is_one() {
                f.write_str(&label)?;
            } else if is_unit_label(&label) {
                write!(f, "({c})")?;
            } else {
                write!(f, "({c})*{label}")?;
            }
        }
        Ok(())
    }
}

impl<K: Ord + Label> fmt::Debug for Lin<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Field;

    #[test]
    fn cancellation_removes_terms() {
        let f = Field::cyclotomic(1).unwrap();
        let mut a: Lin<usize> = Lin::single(1, f.int(2));
        a.add_term(1, f.int(-2));
        assert!(a.is_zero());
        a.add_term(3, f.zero());
        assert!(a.is_zero());
        let b: Lin<usize> = [(2, f.int(1)), (0, f.int(5))].into_iter().collect();
        assert_eq!(b.to_string(), "(5)*b0 + b2");
        assert_eq!(b.scaled(&f.zero()), Lin::zero());
    }
}

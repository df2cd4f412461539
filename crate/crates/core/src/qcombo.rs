//! ω-integers, ω-factorials and ω-binomial coefficients.

use crate::scalars::{Scalar, ScalarError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum QError {
    #[error("{omega} is not a primitive root of unity of order {n}")]
    NotPrimitive { omega: String, n: usize },
    #[error("binomial ({a} choose {k}) needs k <= a")]
    BadBinomial { a: usize, k: usize },
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// A primitive n-th root of unity ω together with memoized tables.
#[derive(Clone, Debug)]
pub struct QContext {
    omega: Scalar,
    n: usize,
    powers: Vec<Scalar>,
    ints: Vec<Scalar>,
    factorials: Vec<Scalar>,
    /// binom[a][k] for a <= cap
    binom: Vec<Vec<Scalar>>,
}

impl QContext {
    /// Tables are filled for arguments up to 4n.
    pub fn new(omega: Scalar, n: usize) -> Result<Self, QError> {
        Self::with_cap(omega, n, 4 * n)
    }

    pub fn with_cap(omega: Scalar, n: usize, cap: usize) -> Result<Self, QError> {
        let order = if omega.is_zero() {
            None
        } else {
            omega.root_of_unity_order()?
        };
        if n == 0 || order != Some(n as u64) {
            return Err(QError::NotPrimitive {
                omega: omega.to_string(),
                n,
            });
        }
        let f = omega.field().clone();
        let mut powers = vec![f.one()];
        for k in 1..n {
            powers.push(&powers[k - 1] * &omega);
        }
        let mut ints = vec![f.zero()];
        for k in 1..=cap {
            ints.push(&ints[k - 1] + &powers[(k - 1) % n]);
        }
        let mut factorials = vec![f.one()];
        for k in 1..=cap {
            factorials.push(&factorials[k - 1] * &ints[k]);
        }
        let mut binom: Vec<Vec<Scalar>> = vec![vec![f.one()]];
        for a in 1..=cap {
            let prev = &binom[a - 1];
            let mut row = Vec::with_capacity(a + 1);
            row.push(f.one());
            for k in 1..a {
                row.push(&prev[k - 1] + &(&powers[k % n] * &prev[k]));
            }
            row.push(f.one());
            binom.push(row);
        }
        Ok(QContext {
            omega,
            n,
            powers,
            ints,
            factorials,
            binom,
        })
    }

    pub fn omega(&self) -> &Scalar {
        &self.omega
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// ω^k for any integer k.
    pub fn omega_pow(&self, k: i64) -> &Scalar {
        &self.powers[k.rem_euclid(self.n as i64) as usize]
    }

    /// (k)_ω = 1 + ω + … + ω^{k−1}.
    pub fn q_int(&self, k: usize) -> Scalar {
        if let Some(v) = self.ints.get(k) {
            return v.clone();
        }
        if self.n == 1 {
            return self.omega.field().int(k as i64);
        }
        // whole periods of a nontrivial root sum to 0
        self.ints[k % self.n].clone()
    }

    /// (k)!_ω; zero exactly when k ≥ n.
    pub fn q_factorial(&self, k: usize) -> Scalar {
        if let Some(v) = self.factorials.get(k) {
            return v.clone();
        }
        (1..=k).fold(self.omega.field().one(), |acc, j| acc * self.q_int(j))
    }

    /// The ω-binomial via the q-Pascal rule.
    pub fn q_binomial(&self, a: usize, k: usize) -> Result<Scalar, QError> {
        if k > a {
            return Err(QError::BadBinomial { a, k });
        }
        if let Some(row) = self.binom.get(a) {
            return Ok(row[k].clone());
        }
        let f = self.omega.field();
        let mut row = self.binom.last().unwrap().clone();
        for aa in self.binom.len()..=a {
            let mut next = Vec::with_capacity(aa + 1);
            next.push(f.one());
            for kk in 1..aa {
                next.push(&row[kk - 1] + &(self.omega_pow(kk as i64) * &row[kk]));
            }
            next.push(f.one());
            row = next;
        }
        Ok(row[k].clone())
    }

    /// 1 / ((k)!_ω (l)!_ω), defined when k, l < n.
    pub fn inv_factorial_pair(&self, k: usize, l: usize) -> Scalar {
        (self.q_factorial(k) * self.q_factorial(l))
            .inv()
            .expect("factorials below n are nonzero")
    }
}

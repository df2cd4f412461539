//! Elements of the cyclotomic field Q(ζ_N), stored as rational coefficient
//! vectors in the power basis 1, ζ, …, ζ^{φ(N)-1}.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

pub(crate) type Q = BigRational;

/// Dense integer polynomial, lowest degree first.
fn int_poly_div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem: Vec<i64> = num.to_vec();
    let dd = den.len() - 1;
    let lead = den[dd];
    assert!(lead == 1 || lead == -1);
    let mut quot = vec![0i64; num.len() - dd];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dd] * lead;
        quot[i] = c;
        for (j, &d) in den.iter().enumerate() {
            rem[i + j] -= c * d;
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    quot
}

fn cyclotomic_cache() -> &'static Mutex<HashMap<u32, Arc<Vec<i64>>>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Vec<i64>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Coefficients of the `n`-th cyclotomic polynomial, lowest degree first.
pub fn cyclotomic_polynomial(n: u32) -> Arc<Vec<i64>> {
    if let Some(p) = cyclotomic_cache().lock().unwrap().get(&n) {
        return p.clone();
    }
    // x^n - 1 divided by every Φ_d with d | n, d < n
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n.is_multiple_of(d) {
            let phi_d = cyclotomic_polynomial(d);
            num = int_poly_div_exact(&num, &phi_d);
        }
    }
    let arc = Arc::new(num);
    cyclotomic_cache().lock().unwrap().insert(n, arc.clone());
    arc
}

pub fn euler_phi(n: u32) -> u32 {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

/// The cyclotomic field Q(ζ_N) with its defining modulus.
#[derive(Debug)]
pub struct CycloField {
    conductor: u32,
    degree: usize,
    /// Φ_N as rationals, monic, lowest degree first (length degree+1).
    modulus: Vec<Q>,
}

impl CycloField {
    pub fn new(conductor: u32) -> Self {
        let phi = cyclotomic_polynomial(conductor);
        let modulus: Vec<Q> = phi.iter().map(|&c| Q::from_integer(BigInt::from(c))).collect();
        CycloField {
            conductor,
            degree: modulus.len() - 1,
            modulus,
        }
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn modulus_i64(&self) -> Arc<Vec<i64>> {
        cyclotomic_polynomial(self.conductor)
    }

    /// Reduce a dense coefficient vector modulo Φ_N in place.
    fn reduce(&self, mut c: Vec<Q>) -> Nf {
        let d = self.degree;
        while c.len() > d {
            let top = c.pop().unwrap();
            if top.is_zero() {
                continue;
            }
            let shift = c.len() - d;
            for i in 0..d {
                if !self.modulus[i].is_zero() {
                    c[shift + i] -= &top * &self.modulus[i];
                }
            }
        }
        Nf::from_dense(c)
    }

    /// ζ_N^k for any integer k.
    pub fn zeta_pow(&self, k: i64) -> Nf {
        let e = k.rem_euclid(self.conductor as i64) as usize;
        let mut c = vec![Q::zero(); e + 1];
        c[e] = Q::one();
        self.reduce(c)
    }

    pub fn mul(&self, a: &Nf, b: &Nf) -> Nf {
        if a.is_zero() || b.is_zero() {
            return Nf::zero();
        }
        if let Some(r) = a.as_rational() {
            return b.scale(r);
        }
        if let Some(r) = b.as_rational() {
            return a.scale(r);
        }
        let mut c = vec![Q::zero(); a.coeffs.len() + b.coeffs.len() - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    c[i + j] += x * y;
                }
            }
        }
        self.reduce(c)
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against Φ_N.
    pub fn inv(&self, a: &Nf) -> Option<Nf> {
        if a.is_zero() {
            return None;
        }
        if let Some(r) = a.as_rational() {
            return Some(Nf::from_rational(r.recip()));
        }
        // invariant: s * a ≡ r0 (mod Φ)
        let mut r0 = a.coeffs.clone();
        let mut r1 = self.modulus.clone();
        let mut s0 = vec![Q::one()];
        let mut s1: Vec<Q> = Vec::new();
        while !dense_is_zero(&r1) {
            let (q, r) = dense_divrem(&r0, &r1);
            let s2 = dense_sub(&s0, &dense_mul(&q, &s1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s2;
        }
        // r0 is a nonzero constant since Φ_N is irreducible
        let r0 = trim(r0);
        debug_assert_eq!(r0.len(), 1);
        let c = r0[0].recip();
        let s: Vec<Q> = s0.into_iter().map(|x| x * &c).collect();
        Some(self.reduce(s))
    }
}

fn trim(mut v: Vec<Q>) -> Vec<Q> {
    while v.last().is_some_and(|x| x.is_zero()) {
        v.pop();
    }
    v
}

fn dense_is_zero(v: &[Q]) -> bool {
    v.iter().all(|x| x.is_zero())
}

fn dense_mul(a: &[Q], b: &[Q]) -> Vec<Q> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut c = vec![Q::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            c[i + j] += x * y;
        }
    }
    trim(c)
}

fn dense_sub(a: &[Q], b: &[Q]) -> Vec<Q> {
    let n = a.len().max(b.len());
    let mut c = vec![Q::zero(); n];
    for (i, x) in a.iter().enumerate() {
        c[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        c[i] -= y;
    }
    trim(c)
}

fn dense_divrem(a: &[Q], b: &[Q]) -> (Vec<Q>, Vec<Q>) {
    let b = trim(b.to_vec());
    let mut r = trim(a.to_vec());
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let lb = b.last().unwrap().clone();
    let mut q = vec![Q::zero(); r.len() - b.len() + 1];
    while r.len() >= b.len() && !r.is_empty() {
        let shift = r.len() - b.len();
        let c = r.last().unwrap() / &lb;
        for (j, y) in b.iter().enumerate() {
            r[shift + j] -= &c * y;
        }
        q[shift] = c;
        r = trim(r);
    }
    (trim(q), r)
}

/// An element of Q(ζ_N). Trailing zero coefficients are never stored, so
/// structural equality is field equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Nf {
    coeffs: Vec<Q>,
}

impl Nf {
    pub fn zero() -> Self {
        Nf { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Nf::from_rational(Q::one())
    }

    pub fn from_rational(r: Q) -> Self {
        if r.is_zero() {
            Nf::zero()
        } else {
            Nf { coeffs: vec![r] }
        }
    }

    pub fn from_int(i: i64) -> Self {
        Nf::from_rational(Q::from_integer(BigInt::from(i)))
    }

    pub(crate) fn from_dense(c: Vec<Q>) -> Self {
        Nf { coeffs: trim(c) }
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// The value as a rational number when it lies in Q.
    pub fn as_rational(&self) -> Option<&Q> {
        match self.coeffs.len() {
            1 => Some(&self.coeffs[0]),
            _ => None,
        }
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn add(&self, other: &Nf) -> Nf {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut c = Vec::with_capacity(n);
        for i in 0..n {
            match (self.coeffs.get(i), other.coeffs.get(i)) {
                (Some(a), Some(b)) => c.push(a + b),
                (Some(a), None) => c.push(a.clone()),
                (None, Some(b)) => c.push(b.clone()),
                (None, None) => unreachable!(),
            }
        }
        Nf::from_dense(c)
    }

    pub fn neg(&self) -> Nf {
        Nf {
            coeffs: self.coeffs.iter().map(|x| -x).collect(),
        }
    }

    pub fn scale(&self, r: &Q) -> Nf {
        if r.is_zero() {
            return Nf::zero();
        }
        Nf {
            coeffs: self.coeffs.iter().map(|x| x * r).collect(),
        }
    }

    pub(crate) fn single_term(&self) -> bool {
        self.coeffs.iter().filter(|c| !c.is_zero()).count() == 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_polynomials_small() {
        assert_eq!(*cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(*cyclotomic_polynomial(2), vec![1, 1]);
        assert_eq!(*cyclotomic_polynomial(3), vec![1, 1, 1]);
        assert_eq!(*cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(*cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(*cyclotomic_polynomial(8), vec![1, 0, 0, 0, 1]);
        assert_eq!(*cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        for n in 1..40u32 {
            assert_eq!(cyclotomic_polynomial(n).len() - 1, euler_phi(n) as usize);
        }
    }

    #[test]
    fn zeta_relations() {
        let f = CycloField::new(3);
        let s = f.zeta_pow(2).add(&f.zeta_pow(1)).add(&Nf::one());
        assert!(s.is_zero());
        let f6 = CycloField::new(6);
        assert_eq!(f6.zeta_pow(3), Nf::from_int(-1));
        assert_eq!(f6.zeta_pow(7), f6.zeta_pow(1));
    }

    #[test]
    fn inverse_roundtrip() {
        let f = CycloField::new(12);
        let a = f.zeta_pow(1).add(&Nf::from_int(3)).add(&f.zeta_pow(3).scale(&Q::new(2.into(), 7.into())));
        let ai = f.inv(&a).unwrap();
        assert!(f.mul(&a, &ai).is_one());
        assert!(f.inv(&Nf::zero()).is_none());
    }
}

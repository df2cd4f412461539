//! Exact scalars: the rational-function field Q(ζ_N)(t) and prime fields F_p.
//!
//! A [`Field`] is a cheap, cloneable handle. Every [`Scalar`] carries its
//! field, and arithmetic between scalars of different fields panics.

mod numfield;
mod parse;
mod tpoly;

pub use numfield::{cyclotomic_polynomial, euler_phi};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use numfield::{CycloField, Nf};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::Arc;
use tpoly::{RatFn, TPoly};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScalarError {
    #[error("conductor must be positive")]
    ZeroConductor,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("no element of order {order} in {field}")]
    NoRootOfOrder { order: u64, field: String },
    #[error("zero is not a root of unity")]
    ZeroOrder,
    #[error("{0} has no transcendental t")]
    NoTranscendental(String),
    #[error("{0} has no symbol z")]
    NoZeta(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

/// Where the ground field lives.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FieldSpec {
    /// Q(ζ_N)(t).
    Cyclotomic(u32),
    /// F_p.
    Prime(u64),
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Cyclotomic(n) => write!(f, "Q(z{n})(t)"),
            FieldSpec::Prime(p) => write!(f, "F{p}"),
        }
    }
}

#[derive(Debug)]
enum Kind {
    Cyclo(CycloField),
    Prime(u64),
}

#[derive(Debug)]
struct FieldInner {
    spec: FieldSpec,
    kind: Kind,
}

/// Handle to a ground field.
#[derive(Clone, Debug)]
pub struct Field(Arc<FieldInner>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.spec == other.0.spec
    }
}
impl Eq for Field {}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

impl Field {
    pub fn new(spec: FieldSpec) -> Result<Field, ScalarError> {
        let kind = match spec {
            FieldSpec::Cyclotomic(0) => return Err(ScalarError::ZeroConductor),
            FieldSpec::Cyclotomic(n) => Kind::Cyclo(CycloField::new(n)),
            FieldSpec::Prime(p) if !is_prime(p) => return Err(ScalarError::NotPrime(p)),
            FieldSpec::Prime(p) => Kind::Prime(p),
        };
        Ok(Field(Arc::new(FieldInner { spec, kind })))
    }

    pub fn cyclotomic(n: u32) -> Result<Field, ScalarError> {
        Field::new(FieldSpec::Cyclotomic(n))
    }

    pub fn prime(p: u64) -> Result<Field, ScalarError> {
        Field::new(FieldSpec::Prime(p))
    }

    pub fn spec(&self) -> FieldSpec {
        self.0.spec
    }

    pub fn characteristic(&self) -> u64 {
        match self.0.kind {
            Kind::Cyclo(_) => 0,
            Kind::Prime(p) => p,
        }
    }

    /// N for Q(ζ_N)(t), None for F_p.
    pub fn conductor(&self) -> Option<u32> {
        match &self.0.kind {
            Kind::Cyclo(c) => Some(c.conductor()),
            Kind::Prime(_) => None,
        }
    }

    /// Coefficients of Φ_N, lowest degree first (None in F_p).
    pub fn modulus(&self) -> Option<Vec<i64>> {
        match &self.0.kind {
            Kind::Cyclo(c) => Some(c.modulus_i64().to_vec()),
            Kind::Prime(_) => None,
        }
    }

    fn cyclo(&self) -> Option<&CycloField> {
        match &self.0.kind {
            Kind::Cyclo(c) => Some(c),
            Kind::Prime(_) => None,
        }
    }

    fn wrap(&self, val: Val) -> Scalar {
        Scalar {
            field: self.clone(),
            val,
        }
    }

    pub fn zero(&self) -> Scalar {
        self.int(0)
    }

    pub fn one(&self) -> Scalar {
        self.int(1)
    }

    pub fn int(&self, i: i64) -> Scalar {
        match self.0.kind {
            Kind::Cyclo(_) => self.wrap(Val::Rat(RatFn::constant(Nf::from_int(i)))),
            Kind::Prime(p) => self.wrap(Val::Fp(i.rem_euclid(p as i64) as u64)),
        }
    }

    pub fn ratio(&self, num: i64, den: i64) -> Result<Scalar, ScalarError> {
        self.int(num).checked_div(&self.int(den))
    }

    fn big_rational(&self, r: BigRational) -> Scalar {
        match self.0.kind {
            Kind::Cyclo(_) => self.wrap(Val::Rat(RatFn::constant(Nf::from_rational(r)))),
            Kind::Prime(p) => {
                let pb = BigInt::from(p);
                let n = r.numer().mod_floor(&pb).to_u64().unwrap();
                let d = r.denom().mod_floor(&pb).to_u64().unwrap();
                let dinv = fp_inv(d, p).expect("denominator divisible by p");
                self.wrap(Val::Fp(mulmod(n, dinv, p)))
            }
        }
    }

    /// ζ_N^k.
    pub fn zeta_pow(&self, k: i64) -> Result<Scalar, ScalarError> {
        match self.cyclo() {
            Some(c) => Ok(self.wrap(Val::Rat(RatFn::constant(c.zeta_pow(k))))),
            None => Err(ScalarError::NoZeta(self.spec().to_string())),
        }
    }

    /// The transcendental t.
    pub fn t(&self) -> Result<Scalar, ScalarError> {
        match self.cyclo() {
            Some(_) => Ok(self.wrap(Val::Rat(RatFn::from_poly(TPoly::monomial(1, Nf::one()))))),
            None => Err(ScalarError::NoTranscendental(self.spec().to_string())),
        }
    }

    /// A primitive root of unity of the given order.
    ///
    /// In Q(ζ_N)(t) every order dividing lcm(2, N) is available; in F_p every
    /// order dividing p − 1.
    pub fn primitive_root(&self, order: u64) -> Result<Scalar, ScalarError> {
        let fail = || ScalarError::NoRootOfOrder {
            order,
            field: self.spec().to_string(),
        };
        if order == 0 {
            return Err(fail());
        }
        match &self.0.kind {
            Kind::Cyclo(c) => {
                let n = c.conductor() as u64;
                if n.is_multiple_of(order) {
                    self.zeta_pow((n / order) as i64)
                } else if n % 2 == 1 && order.is_multiple_of(2) && n.is_multiple_of(order / 2) {
                    // -ζ^{N/k} has order 2k when k is odd
                    Ok(-self.zeta_pow((n / (order / 2)) as i64)?)
                } else {
                    Err(fail())
                }
            }
            Kind::Prime(p) => {
                let p = *p;
                if (p - 1) % order != 0 {
                    return Err(fail());
                }
                let gen = (1..p)
                    .find(|&g| fp_order(g, p) == p - 1)
                    .expect("F_p^x is cyclic");
                Ok(self.wrap(Val::Fp(powmod(gen, (p - 1) / order, p))))
            }
        }
    }

    /// Parse the textual scalar syntax (`z^k`, `t`, rationals, `+ - * / ^ ( )`).
    pub fn parse(&self, text: &str) -> Result<Scalar, ScalarError> {
        parse::parse(self, text)
    }
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, b, p);
        }
        b = mulmod(b, b, p);
        e >>= 1;
    }
    r
}

fn fp_inv(a: u64, p: u64) -> Option<u64> {
    if a.is_multiple_of(p) {
        None
    } else {
        Some(powmod(a, p - 2, p))
    }
}

fn fp_order(a: u64, p: u64) -> u64 {
    divisors(p - 1)
        .into_iter()
        .find(|&d| powmod(a, d, p) == 1)
        .unwrap()
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Val {
    Rat(RatFn),
    Fp(u64),
}

/// An exact element of the ground field, always in canonical form.
#[derive(Clone)]
pub struct Scalar {
    field: Field,
    val: Val,
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        self.val == other.val && self.field == other.field
    }
}
impl Eq for Scalar {}

impl std::hash::Hash for Scalar {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.val.hash(state)
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&parse::render(self))
    }
}

impl Scalar {
    pub fn field(&self) -> &Field {
        &self.field
    }

    fn same(&self, other: &Scalar) {
        assert!(
            self.field == other.field,
            "mixed fields: {} and {}",
            self.field.spec(),
            other.field.spec()
        );
    }

    fn cf(&self) -> &CycloField {
        self.field.cyclo().unwrap()
    }

    pub fn is_zero(&self) -> bool {
        match &self.val {
            Val::Rat(r) => r.is_zero(),
            Val::Fp(v) => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.val {
            Val::Rat(r) => r.is_one(),
            Val::Fp(v) => *v == 1,
        }
    }

    /// True when the value does not depend on t.
    pub fn is_constant(&self) -> bool {
        match &self.val {
            Val::Rat(r) => r.is_constant(),
            Val::Fp(_) => true,
        }
    }

    /// The value as a rational number, if it is one.
    pub fn as_rational(&self) -> Option<BigRational> {
        match &self.val {
            Val::Rat(r) => {
                let c = r.as_constant()?;
                if c.is_zero() {
                    Some(BigRational::zero())
                } else {
                    c.as_rational().cloned()
                }
            }
            Val::Fp(v) => Some(BigRational::from_integer(BigInt::from(*v))),
        }
    }

    /// The residue in F_p.
    pub fn as_fp(&self) -> Option<u64> {
        match &self.val {
            Val::Fp(v) => Some(*v),
            Val::Rat(_) => None,
        }
    }

    pub fn inv(&self) -> Result<Scalar, ScalarError> {
        match &self.val {
            Val::Rat(r) => r
                .inv(self.cf())
                .map(|v| self.field.wrap(Val::Rat(v)))
                .ok_or(ScalarError::DivisionByZero),
            Val::Fp(v) => {
                let p = self.field.characteristic();
                fp_inv(*v, p)
                    .map(|v| self.field.wrap(Val::Fp(v)))
                    .ok_or(ScalarError::DivisionByZero)
            }
        }
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, k: i64) -> Result<Scalar, ScalarError> {
        if k < 0 {
            return self.inv()?.pow(-k);
        }
        let k = k as u64;
        if let Val::Rat(r) = &self.val {
            // t^a fast path
            if r.den().is_one() {
                if let Some(d) = r.num().as_t_power() {
                    let deg = d as u64 * k;
                    return Ok(self
                        .field
                        .wrap(Val::Rat(RatFn::from_poly(TPoly::monomial(deg as u32, Nf::one())))));
                }
            }
        }
        let mut result = self.field.one();
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        Ok(result)
    }

    /// Least k > 0 with s^k = 1, or None when s is not a root of unity.
    pub fn root_of_unity_order(&self) -> Result<Option<u64>, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::ZeroOrder);
        }
        let bound = match self.field.0.kind {
            Kind::Cyclo(ref c) => {
                if !self.is_constant() {
                    return Ok(None);
                }
                (c.conductor() as u64).lcm(&2)
            }
            Kind::Prime(p) => p - 1,
        };
        for d in divisors(bound) {
            if self.pow(d as i64)?.is_one() {
                return Ok(Some(d));
            }
        }
        Ok(None)
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &'a Scalar) -> Scalar {
        self.same(rhs);
        let val = match (&self.val, &rhs.val) {
            (Val::Rat(a), Val::Rat(b)) => Val::Rat(a.add(self.cf(), b)),
            (Val::Fp(a), Val::Fp(b)) => Val::Fp((a + b) % self.field.characteristic()),
            _ => unreachable!(),
        };
        self.field.wrap(val)
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &'a Scalar) -> Scalar {
        self.same(rhs);
        let val = match (&self.val, &rhs.val) {
            (Val::Rat(a), Val::Rat(b)) => Val::Rat(a.mul(self.cf(), b)),
            (Val::Fp(a), Val::Fp(b)) => Val::Fp(mulmod(*a, *b, self.field.characteristic())),
            _ => unreachable!(),
        };
        self.field.wrap(val)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        let val = match &self.val {
            Val::Rat(a) => Val::Rat(a.neg()),
            Val::Fp(a) => {
                let p = self.field.characteristic();
                Val::Fp((p - a) % p)
            }
        };
        self.field.wrap(val)
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &'a Scalar) -> Scalar {
        self + &(-rhs)
    }
}

/// Panics on a zero divisor; use [`Scalar::checked_div`] to get an error.
impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn div(self, rhs: &'a Scalar) -> Scalar {
        self.checked_div(rhs).expect("division by zero")
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &'a Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                self.$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl std::ops::AddAssign<Scalar> for Scalar {
    fn add_assign(&mut self, rhs: Scalar) {
        *self = &*self + &rhs;
    }
}

impl std::ops::SubAssign<Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: Scalar) {
        *self = &*self - &rhs;
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl std::iter::Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(mut iter: I) -> Scalar {
        let first = iter.next().expect("sum of an empty iterator has no field");
        iter.fold(first, |a, b| &a + &b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_make_examples() {
        let f2 = Field::new(FieldSpec::Prime(2)).unwrap();
        assert_eq!(f2.characteristic(), 2);
        let f3 = Field::new(FieldSpec::Cyclotomic(3)).unwrap();
        assert_eq!(f3.modulus().unwrap(), vec![1, 1, 1]);
        let q = Field::new(FieldSpec::Cyclotomic(1)).unwrap();
        assert_eq!(q.modulus().unwrap().len() - 1, 1);
        assert!(q.t().is_ok());
        assert_eq!(Field::new(FieldSpec::Prime(4)), Err(ScalarError::NotPrime(4)));
        assert_eq!(Field::new(FieldSpec::Cyclotomic(0)), Err(ScalarError::ZeroConductor));
    }

    #[test]
    fn primitive_root_examples() {
        let f6 = Field::cyclotomic(6).unwrap();
        assert_eq!(f6.primitive_root(2).unwrap(), f6.int(-1));
        let f3 = Field::cyclotomic(3).unwrap();
        assert_eq!(f3.primitive_root(3).unwrap(), f3.zeta_pow(1).unwrap());
        let f8 = Field::cyclotomic(8).unwrap();
        let r = f8.primitive_root(4).unwrap();
        assert_eq!(r, f8.zeta_pow(2).unwrap());
        assert!(r.pow(4).unwrap().is_one());
        assert!(!r.pow(2).unwrap().is_one());
        assert!(f8.primitive_root(3).is_err());
        let f7 = Field::prime(7).unwrap();
        let g = f7.primitive_root(6).unwrap();
        assert_eq!(g.root_of_unity_order().unwrap(), Some(6));
        assert!(f7.primitive_root(4).is_err());
    }

    #[test]
    fn root_of_unity_order_examples() {
        let f4 = Field::cyclotomic(4).unwrap();
        assert_eq!(f4.int(-1).root_of_unity_order().unwrap(), Some(2));
        assert_eq!(f4.t().unwrap().root_of_unity_order().unwrap(), None);
        let mi = -f4.zeta_pow(1).unwrap();
        assert_eq!(mi.root_of_unity_order().unwrap(), Some(4));
        assert_eq!(f4.zero().root_of_unity_order(), Err(ScalarError::ZeroOrder));
        assert_eq!(f4.int(2).root_of_unity_order().unwrap(), None);
    }

    #[test]
    fn arith_examples() {
        let f3 = Field::cyclotomic(3).unwrap();
        let z = f3.zeta_pow(1).unwrap();
        assert!((&z * &z + &z + f3.one()).is_zero());
        let t = f3.t().unwrap();
        assert!((&t * &t.inv().unwrap()).is_one());
        let f6 = Field::cyclotomic(6).unwrap();
        assert_eq!(f6.zeta_pow(1).unwrap().pow(7).unwrap(), f6.zeta_pow(1).unwrap());
        assert_eq!(f6.zero().inv(), Err(ScalarError::DivisionByZero));
        assert_eq!(f6.zero().pow(-1), Err(ScalarError::DivisionByZero));
    }

    #[test]
    fn fp_arith() {
        let f = Field::prime(5).unwrap();
        assert_eq!(f.int(3) * f.int(4), f.int(2));
        assert_eq!(f.int(3).inv().unwrap(), f.int(2));
        assert_eq!(f.ratio(1, 2).unwrap(), f.int(3));
        assert!(f.t().is_err());
    }

    #[test]
    fn odd_conductor_has_sign() {
        let f3 = Field::cyclotomic(3).unwrap();
        let r = f3.primitive_root(6).unwrap();
        assert_eq!(r.root_of_unity_order().unwrap(), Some(6));
    }
}

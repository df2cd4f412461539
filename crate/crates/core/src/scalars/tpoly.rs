//! Sparse univariate polynomials in t over Q(ζ_N), and reduced fractions of
//! them.

use super::numfield::{CycloField, Nf};

/// Terms sorted by strictly increasing degree, no zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TPoly {
    terms: Vec<(u32, Nf)>,
}

impl TPoly {
    pub fn zero() -> Self {
        TPoly { terms: Vec::new() }
    }

    pub fn constant(c: Nf) -> Self {
        if c.is_zero() {
            TPoly::zero()
        } else {
            TPoly { terms: vec![(0, c)] }
        }
    }

    pub fn one() -> Self {
        TPoly::constant(Nf::one())
    }

    pub fn monomial(deg: u32, c: Nf) -> Self {
        if c.is_zero() {
            TPoly::zero()
        } else {
            TPoly {
                terms: vec![(deg, c)],
            }
        }
    }

    pub fn terms(&self) -> &[(u32, Nf)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == 0 && self.terms[0].1.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0 == 0)
    }

    /// Some(k) when the polynomial is exactly t^k.
    pub fn as_t_power(&self) -> Option<u32> {
        match self.terms.as_slice() {
            [(d, c)] if c.is_one() => Some(*d),
            _ => None,
        }
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.last().map(|(d, _)| *d)
    }

    pub fn low_degree(&self) -> Option<u32> {
        self.terms.first().map(|(d, _)| *d)
    }

    pub fn leading(&self) -> Option<&Nf> {
        self.terms.last().map(|(_, c)| c)
    }

    pub fn constant_term(&self) -> Nf {
        match self.terms.first() {
            Some((0, c)) => c.clone(),
            _ => Nf::zero(),
        }
    }

    pub fn add(&self, other: &TPoly) -> TPoly {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (da, ca) = &self.terms[i];
            let (db, cb) = &other.terms[j];
            if da < db {
                out.push((*da, ca.clone()));
                i += 1;
            } else if db < da {
                out.push((*db, cb.clone()));
                j += 1;
            } else {
                let s = ca.add(cb);
                if !s.is_zero() {
                    out.push((*da, s));
                }
                i += 1;
                j += 1;
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        TPoly { terms: out }
    }

    pub fn neg(&self) -> TPoly {
        TPoly {
            terms: self.terms.iter().map(|(d, c)| (*d, c.neg())).collect(),
        }
    }

    pub fn sub(&self, other: &TPoly) -> TPoly {
        self.add(&other.neg())
    }

    pub fn scale(&self, f: &CycloField, c: &Nf) -> TPoly {
        if c.is_zero() {
            return TPoly::zero();
        }
        if c.is_one() {
            return self.clone();
        }
        TPoly {
            terms: self
                .terms
                .iter()
                .map(|(d, x)| (*d, f.mul(x, c)))
                .filter(|(_, x)| !x.is_zero())
                .collect(),
        }
    }

    pub fn shift(&self, k: u32) -> TPoly {
        TPoly {
            terms: self.terms.iter().map(|(d, c)| (d + k, c.clone())).collect(),
        }
    }

    /// Divide by t^k; caller guarantees every degree is at least k.
    pub fn unshift(&self, k: u32) -> TPoly {
        TPoly {
            terms: self.terms.iter().map(|(d, c)| (d - k, c.clone())).collect(),
        }
    }

    pub fn mul(&self, f: &CycloField, other: &TPoly) -> TPoly {
        if self.is_zero() || other.is_zero() {
            return TPoly::zero();
        }
        if self.terms.len() == 1 {
            let (d, c) = &self.terms[0];
            return other.scale(f, c).shift(*d);
        }
        if other.terms.len() == 1 {
            let (d, c) = &other.terms[0];
            return self.scale(f, c).shift(*d);
        }
        let mut acc: std::collections::BTreeMap<u32, Nf> = std::collections::BTreeMap::new();
        for (da, ca) in &self.terms {
            for (db, cb) in &other.terms {
                let p = f.mul(ca, cb);
                let e = acc.entry(da + db).or_insert_with(Nf::zero);
                *e = e.add(&p);
            }
        }
        TPoly {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    /// Euclidean division by a nonzero divisor.
    pub fn divrem(&self, f: &CycloField, div: &TPoly) -> (TPoly, TPoly) {
        let dd = div.degree().expect("division by zero polynomial");
        let lead_inv = f.inv(div.leading().unwrap()).unwrap();
        let mut q = TPoly::zero();
        let mut r = self.clone();
        while let Some(rd) = r.degree() {
            if rd < dd {
                break;
            }
            let c = f.mul(r.leading().unwrap(), &lead_inv);
            let term = TPoly::monomial(rd - dd, c);
            r = r.sub(&term.mul(f, div));
            q = q.add(&term);
        }
        (q, r)
    }

    /// Pseudo-remainder lc(B)^{deg A - deg B + 1} · A mod B.
    fn prem(&self, f: &CycloField, div: &TPoly) -> TPoly {
        let dd = div.degree().unwrap();
        let da = self.degree().unwrap();
        let lb = div.leading().unwrap().clone();
        let mut r = self.clone();
        let mut steps = da + 1 - dd;
        while let Some(rd) = r.degree() {
            if rd < dd {
                break;
            }
            let lr = r.leading().unwrap().clone();
            r = r.scale(f, &lb).sub(&div.scale(f, &lr).shift(rd - dd));
            steps -= 1;
        }
        let mut scale = Nf::one();
        for _ in 0..steps {
            scale = f.mul(&scale, &lb);
        }
        r.scale(f, &scale)
    }

    pub fn make_monic(&self, f: &CycloField) -> TPoly {
        match self.leading() {
            None => TPoly::zero(),
            Some(l) if l.is_one() => self.clone(),
            Some(l) => self.scale(f, &f.inv(l).unwrap()),
        }
    }

    /// Exact division (remainder must be zero).
    pub fn div_exact(&self, f: &CycloField, div: &TPoly) -> TPoly {
        let (q, r) = self.divrem(f, div);
        debug_assert!(r.is_zero());
        q
    }

    /// Monic gcd via the subresultant remainder sequence.
    pub fn gcd(&self, f: &CycloField, other: &TPoly) -> TPoly {
        if self.is_zero() {
            return other.make_monic(f);
        }
        if other.is_zero() {
            return self.make_monic(f);
        }
        // strip the common power of t first; it is cheap and common
        let k = self.low_degree().unwrap().min(other.low_degree().unwrap());
        let a0 = self.unshift(self.low_degree().unwrap());
        let b0 = other.unshift(other.low_degree().unwrap());
        let core = subresultant_gcd(f, &a0, &b0);
        core.shift(k)
    }
}

fn subresultant_gcd(f: &CycloField, a: &TPoly, b: &TPoly) -> TPoly {
    let (mut a, mut b) = if a.degree() >= b.degree() {
        (a.clone(), b.clone())
    } else {
        (b.clone(), a.clone())
    };
    if b.degree() == Some(0) {
        return TPoly::one();
    }
    let mut g = Nf::one();
    let mut h = Nf::one();
    loop {
        let delta = a.degree().unwrap() - b.degree().unwrap();
        let r = a.prem(f, &b);
        if r.is_zero() {
            return b.make_monic(f);
        }
        if r.degree() == Some(0) {
            return TPoly::one();
        }
        let mut hd = Nf::one();
        for _ in 0..delta {
            hd = f.mul(&hd, &h);
        }
        let denom = f.mul(&g, &hd);
        let next_b = r.scale(f, &f.inv(&denom).unwrap());
        a = b;
        b = next_b;
        g = a.leading().unwrap().clone();
        // h <- g^delta / h^(delta-1)
        let mut gd = Nf::one();
        for _ in 0..delta {
            gd = f.mul(&gd, &g);
        }
        if delta > 0 {
            let mut hd1 = Nf::one();
            for _ in 0..delta - 1 {
                hd1 = f.mul(&hd1, &h);
            }
            h = f.mul(&gd, &f.inv(&hd1).unwrap());
        }
    }
}

/// A reduced fraction num/den with den monic and gcd(num, den) = 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFn {
    num: TPoly,
    den: TPoly,
}

impl RatFn {
    pub fn zero() -> Self {
        RatFn {
            num: TPoly::zero(),
            den: TPoly::one(),
        }
    }

    pub fn from_poly(p: TPoly) -> Self {
        RatFn {
            num: p,
            den: TPoly::one(),
        }
    }

    pub fn constant(c: Nf) -> Self {
        RatFn::from_poly(TPoly::constant(c))
    }

    pub fn num(&self) -> &TPoly {
        &self.num
    }

    pub fn den(&self) -> &TPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_one()
    }

    pub fn as_constant(&self) -> Option<Nf> {
        if self.is_constant() {
            Some(self.num.constant_term())
        } else {
            None
        }
    }

    /// Bring an arbitrary fraction to canonical form.
    pub fn normalize(f: &CycloField, num: TPoly, den: TPoly) -> RatFn {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return RatFn::zero();
        }
        let lead = den.leading().unwrap().clone();
        let (mut num, mut den) = if lead.is_one() {
            (num, den)
        } else {
            let li = f.inv(&lead).unwrap();
            (num.scale(f, &li), den.scale(f, &li))
        };
        if let Some(k) = den.as_t_power() {
            let j = k.min(num.low_degree().unwrap());
            if j > 0 {
                num = num.unshift(j);
                den = den.unshift(j);
            }
            return RatFn { num, den };
        }
        let g = num.gcd(f, &den);
        if !g.is_one() {
            num = num.div_exact(f, &g);
            den = den.div_exact(f, &g);
            // den stays monic because g is monic
        }
        RatFn { num, den }
    }

    pub fn add(&self, f: &CycloField, other: &RatFn) -> RatFn {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den.is_one() && other.den.is_one() {
            return RatFn::from_poly(self.num.add(&other.num));
        }
        if self.den == other.den {
            return RatFn::normalize(f, self.num.add(&other.num), self.den.clone());
        }
        let num = self
            .num
            .mul(f, &other.den)
            .add(&other.num.mul(f, &self.den));
        let den = self.den.mul(f, &other.den);
        RatFn::normalize(f, num, den)
    }

    pub fn neg(&self) -> RatFn {
        RatFn {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, f: &CycloField, other: &RatFn) -> RatFn {
        if self.is_zero() || other.is_zero() {
            return RatFn::zero();
        }
        if self.den.is_one() && other.den.is_one() {
            return RatFn::from_poly(self.num.mul(f, &other.num));
        }
        if let Some(c) = self.as_constant() {
            return RatFn {
                num: other.num.scale(f, &c),
                den: other.den.clone(),
            };
        }
        if let Some(c) = other.as_constant() {
            return RatFn {
                num: self.num.scale(f, &c),
                den: self.den.clone(),
            };
        }
        // cross-cancel: gcd(a, d) and gcd(c, b)
        let g1 = self.num.gcd(f, &other.den);
        let g2 = other.num.gcd(f, &self.den);
        let a = if g1.is_one() { self.num.clone() } else { self.num.div_exact(f, &g1) };
        let d = if g1.is_one() { other.den.clone() } else { other.den.div_exact(f, &g1) };
        let c = if g2.is_one() { other.num.clone() } else { other.num.div_exact(f, &g2) };
        let b = if g2.is_one() { self.den.clone() } else { self.den.div_exact(f, &g2) };
        let num = a.mul(f, &c);
        let den = b.mul(f, &d);
        // monic up to the constant factors removed by the gcds
        let lead = den.leading().unwrap().clone();
        if lead.is_one() {
            RatFn { num, den }
        } else {
            let li = f.inv(&lead).unwrap();
            RatFn {
                num: num.scale(f, &li),
                den: den.scale(f, &li),
            }
        }
    }

    pub fn inv(&self, f: &CycloField) -> Option<RatFn> {
        if self.is_zero() {
            return None;
        }
        let lead = self.num.leading().unwrap();
        let li = f.inv(lead).unwrap();
        Some(RatFn {
            num: self.den.scale(f, &li),
            den: self.num.scale(f, &li),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t() -> TPoly {
        TPoly::monomial(1, Nf::one())
    }

    #[test]
    fn gcd_of_products() {
        let f = CycloField::new(4);
        let i = f.zeta_pow(1);
        // (t - i)(t + 1) and (t - i)(t - 2)
        let a = t().sub(&TPoly::constant(i.clone()));
        let b = t().add(&TPoly::one());
        let c = t().sub(&TPoly::constant(Nf::from_int(2)));
        let p = a.mul(&f, &b);
        let q = a.mul(&f, &c).scale(&f, &Nf::from_int(5));
        assert_eq!(p.gcd(&f, &q), a);
        let r = RatFn::normalize(&f, p, q);
        assert_eq!(r.den(), &c);
    }

    #[test]
    fn t_times_inverse() {
        let f = CycloField::new(1);
        let x = RatFn::from_poly(t());
        let xi = x.inv(&f).unwrap();
        assert!(x.mul(&f, &xi).is_one());
    }

    #[test]
    fn sums_cancel() {
        let f = CycloField::new(3);
        // 1/(t+1) - 1/(t+1) = 0 and 1/(t-1) + 1/(t+1) = 2t/(t^2-1)
        let a = RatFn::normalize(&f, TPoly::one(), t().add(&TPoly::one()));
        assert!(a.add(&f, &a.neg()).is_zero());
        let b = RatFn::normalize(&f, TPoly::one(), t().sub(&TPoly::one()));
        let s = a.add(&f, &b);
        assert_eq!(s.num(), &t().scale(&f, &Nf::from_int(2)));
    }
}

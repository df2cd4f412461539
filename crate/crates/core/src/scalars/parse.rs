//! Text form of scalars. `render` and `parse` round-trip exactly.

use super::numfield::Nf;
use super::tpoly::TPoly;
use super::{Field, Scalar, ScalarError, Val};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

fn rational_str(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn join_terms(terms: Vec<String>) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, t) in terms.into_iter().enumerate() {
        if i == 0 {
            out.push_str(&t);
        } else if let Some(rest) = t.strip_prefix('-') {
            out.push_str(" - ");
            out.push_str(rest);
        } else {
            out.push_str(" + ");
            out.push_str(&t);
        }
    }
    out
}

fn power(sym: &str, k: usize) -> String {
    if k == 1 {
        sym.to_string()
    } else {
        format!("{sym}^{k}")
    }
}

/// Attach a coefficient to a symbol product like `z^2` or `t^3`.
fn with_coeff(c: &BigRational, sym: String) -> String {
    if c.is_one() {
        sym
    } else if (-c).is_one() {
        format!("-{sym}")
    } else {
        format!("{}*{sym}", rational_str(c))
    }
}

fn render_nf(x: &Nf) -> String {
    let terms = x
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| {
            if k == 0 {
                rational_str(c)
            } else {
                with_coeff(c, power("z", k))
            }
        })
        .collect();
    join_terms(terms)
}

fn render_poly(p: &TPoly) -> String {
    let terms = p
        .terms()
        .iter()
        .map(|(d, c)| {
            let d = *d as usize;
            if d == 0 {
                return render_nf(c);
            }
            let tp = power("t", d);
            if c.is_rational() {
                with_coeff(c.as_rational().unwrap(), tp)
            } else if c.single_term() {
                format!("{}*{tp}", render_nf(c))
            } else {
                format!("({})*{tp}", render_nf(c))
            }
        })
        .collect();
    join_terms(terms)
}

pub(super) fn render(s: &Scalar) -> String {
    match &s.val {
        Val::Fp(v) => v.to_string(),
        Val::Rat(r) => {
            let num = render_poly(r.num());
            if r.den().is_one() {
                return num;
            }
            let den = render_poly(r.den());
            let num = if num.contains(' ') { format!("({num})") } else { num };
            let den = if den.contains(' ') { format!("({den})") } else { den };
            format!("{num}/{den}")
        }
    }
}

struct Parser<'a> {
    field: &'a Field,
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, msg: impl Into<String>) -> ScalarError {
        ScalarError::Parse {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Scalar, ScalarError> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc = &acc + &self.term()?;
            } else if self.eat(b'-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Scalar, ScalarError> {
        let mut acc = self.unary()?;
        loop {
            if self.eat(b'*') {
                acc = &acc * &self.unary()?;
            } else if self.eat(b'/') {
                let at = self.pos;
                let d = self.unary()?;
                acc = acc.checked_div(&d).map_err(|_| ScalarError::Parse {
                    pos: at,
                    msg: "division by zero".into(),
                })?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<Scalar, ScalarError> {
        if self.eat(b'-') {
            return Ok(-self.unary()?);
        }
        if self.eat(b'+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<Scalar, ScalarError> {
        let base = self.atom()?;
        if self.eat(b'^') {
            let neg = self.eat(b'-');
            let e = self.integer()?;
            let e: i64 = e
                .try_into()
                .map_err(|_| self.err("exponent out of range"))?;
            let e = if neg { -e } else { e };
            return base.pow(e).map_err(|_| self.err("zero to a negative power"));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<BigInt, ScalarError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected integer"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(digits.parse().unwrap())
    }

    fn atom(&mut self) -> Result<Scalar, ScalarError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.err("expected ')'"));
                }
                Ok(v)
            }
            Some(b'z') => {
                self.pos += 1;
                self.field.zeta_pow(1).map_err(|e| self.err(e.to_string()))
            }
            Some(b't') => {
                self.pos += 1;
                self.field.t().map_err(|e| self.err(e.to_string()))
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(self.field.big_rational(BigRational::from_integer(n)))
            }
            Some(c) => Err(self.err(format!("unexpected '{}'", c as char))),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

pub(super) fn parse(field: &Field, text: &str) -> Result<Scalar, ScalarError> {
    let mut p = Parser {
        field,
        src: text.as_bytes(),
        pos: 0,
    };
    let v = p.expr()?;
    if p.peek().is_some() {
        return Err(p.err("trailing input"));
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rt(f: &Field, s: &str) -> String {
        let v = f.parse(s).unwrap();
        let printed = v.to_string();
        assert_eq!(f.parse(&printed).unwrap(), v, "{s} -> {printed}");
        printed
    }

    #[test]
    fn round_trips() {
        let f = Field::cyclotomic(6).unwrap();
        assert_eq!(rt(&f, "z^3"), "-1");
        assert_eq!(rt(&f, "z^2"), "-1 + z");
        assert_eq!(rt(&f, "1/2 - z*t^2"), "1/2 - z*t^2");
        assert_eq!(rt(&f, "t^-2"), "1/t^2");
        assert_eq!(rt(&f, "(1+z)*t/(t^2 - 1)"), "((1 + z)*t)/(-1 + t^2)");
        rt(&f, "(3*z - 7/5)*(t + z)^3/(2*t - z)^2");
        rt(&f, "-(1 - t)/(t^3 + 1/3)");
        let p = Field::prime(7).unwrap();
        assert_eq!(rt(&p, "3/2"), "5");
        assert!(p.parse("t").is_err());
        assert!(p.parse("z").is_err());
    }

    #[test]
    fn parse_errors() {
        let f = Field::cyclotomic(4).unwrap();
        assert!(matches!(f.parse("1/0"), Err(ScalarError::Parse { .. })));
        assert!(matches!(f.parse("(z"), Err(ScalarError::Parse { .. })));
        assert!(matches!(f.parse("z z"), Err(ScalarError::Parse { .. })));
        assert!(matches!(f.parse(""), Err(ScalarError::Parse { .. })));
    }
}

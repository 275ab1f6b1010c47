//! Recursive-descent parser for curve equations.
//!
//! ```text
//! expr   := ('+'|'-')? term (('+'|'-') term)*
//! term   := factor (('*'|'/')? factor)*
//! factor := base ('^' (integer | '{' integer '}'))?
//! base   := 'x' | 'y' | 'z' | integer | '(' expr ')'
//! ```
//!
//! Juxtaposition multiplies (`4x^2y^2z^3`), and `/` divides by a nonzero
//! constant factor so that rational coefficients printed by
//! [`HomogPoly`]'s `Display` parse back.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::PolyError;
use crate::field::{Field, Rationals};
use crate::monomial::{Monomial, Var};
use crate::poly::HomogPoly;

/// Largest exponent accepted after `^`.
const MAX_EXPONENT: u32 = 1000;

/// Parses, expands and collects `text` into a homogeneous polynomial over `field`.
pub fn parse_poly<F: Field>(text: &str, field: &F) -> Result<HomogPoly<F>, PolyError> {
    let rational = parse_rational_poly(text)?;
    rational.to_field(field).and_then(|p| {
        if p.is_zero() {
            Err(PolyError::ZeroPolynomial)
        } else {
            Ok(p)
        }
    })
}

/// Parses over the rationals.
pub fn parse_rational_poly(text: &str) -> Result<HomogPoly<Rationals>, PolyError> {
    let mut parser = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let poly = parser.expr()?;
    parser.skip_ws();
    if parser.pos != parser.src.len() {
        return Err(parser.error("unexpected trailing input"));
    }
    let mut degrees: Vec<u32> = poly.keys().map(|m| m.degree()).collect();
    degrees.dedup();
    match degrees.as_slice() {
        [] => Err(PolyError::ZeroPolynomial),
        [d] => HomogPoly::from_terms(Rationals, *d, poly),
        _ => {
            degrees.reverse();
            Err(PolyError::NotHomogeneous { degrees })
        }
    }
}

/// Not-necessarily-homogeneous polynomial used during expansion.
type Raw = BTreeMap<Monomial, BigRational>;

fn raw_const(c: BigRational) -> Raw {
    let mut r = Raw::new();
    if !c.is_zero() {
        r.insert(Monomial::ONE, c);
    }
    r
}

fn raw_add(mut a: Raw, b: Raw, sign: i8) -> Raw {
    for (m, c) in b {
        let c = if sign < 0 { -c } else { c };
        let e = a.entry(m).or_insert_with(BigRational::zero);
        *e += c;
        if e.is_zero() {
            a.remove(&m);
        }
    }
    a
}

fn raw_mul(a: &Raw, b: &Raw) -> Raw {
    let mut out = Raw::new();
    for (m1, c1) in a {
        for (m2, c2) in b {
            let m = m1.mul(m2);
            let e = out.entry(m).or_insert_with(BigRational::zero);
            *e += c1 * c2;
            if e.is_zero() {
                out.remove(&m);
            }
        }
    }
    out
}

fn raw_pow(base: &Raw, e: u32) -> Raw {
    let mut acc = raw_const(BigRational::one());
    for _ in 0..e {
        acc = raw_mul(&acc, base);
    }
    acc
}

fn as_constant(r: &Raw) -> Option<BigRational> {
    match r.len() {
        0 => Some(BigRational::zero()),
        1 => r.get(&Monomial::ONE).cloned(),
        _ => None,
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> PolyError {
        PolyError::Parse {
            pos: self.pos,
            msg: msg.to_string(),
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

    fn expr(&mut self) -> Result<Raw, PolyError> {
        let mut sign = 1;
        if self.eat(b'-') {
            sign = -1;
        } else {
            self.eat(b'+');
        }
        let first = self.term()?;
        let mut acc = raw_add(Raw::new(), first, sign);
        loop {
            let sign = match self.peek() {
                Some(b'+') => 1,
                Some(b'-') => -1,
                _ => return Ok(acc),
            };
            self.pos += 1;
            let t = self.term()?;
            acc = raw_add(acc, t, sign);
        }
    }

    fn starts_base(c: Option<u8>) -> bool {
        matches!(c, Some(b'x' | b'y' | b'z' | b'(' | b'0'..=b'9'))
    }

    fn term(&mut self) -> Result<Raw, PolyError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    let f = self.factor()?;
                    acc = raw_mul(&acc, &f);
                }
                Some(b'/') => {
                    self.pos += 1;
                    let at = self.pos;
                    let f = self.factor()?;
                    let c = as_constant(&f).ok_or(PolyError::Parse {
                        pos: at,
                        msg: "division by a non-constant expression".into(),
                    })?;
                    if c.is_zero() {
                        return Err(PolyError::Parse {
                            pos: at,
                            msg: "division by zero".into(),
                        });
                    }
                    acc = raw_mul(&acc, &raw_const(c.recip()));
                }
                c if Self::starts_base(c) => {
                    let f = self.factor()?;
                    acc = raw_mul(&acc, &f);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Raw, PolyError> {
        let base = self.base()?;
        if !self.eat(b'^') {
            return Ok(base);
        }
        let braced = self.eat(b'{');
        self.skip_ws();
        let at = self.pos;
        let e = self
            .integer()?
            .to_u32()
            .filter(|&e| e <= MAX_EXPONENT)
            .ok_or(PolyError::Parse {
                pos: at,
                msg: format!("exponent must be at most {MAX_EXPONENT}"),
            })?;
        if braced && !self.eat(b'}') {
            return Err(self.error("expected `}`"));
        }
        Ok(raw_pow(&base, e))
    }

    fn base(&mut self) -> Result<Raw, PolyError> {
        match self.peek() {
            Some(c @ (b'x' | b'y' | b'z')) => {
                self.pos += 1;
                let v = match c {
                    b'x' => Var::X,
                    b'y' => Var::Y,
                    _ => Var::Z,
                };
                let mut r = Raw::new();
                r.insert(Monomial::var(v), BigRational::one());
                Ok(r)
            }
            Some(b'0'..=b'9') => Ok(raw_const(BigRational::from_integer(self.integer()?))),
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.error("expected `)`"));
                }
                Ok(inner)
            }
            Some(_) => Err(self.error("expected `x`, `y`, `z`, an integer or `(`")),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn integer(&mut self) -> Result<BigInt, PolyError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(digits.parse().expect("decimal digits"))
    }
}

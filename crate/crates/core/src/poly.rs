//! Sparse homogeneous polynomials in `x, y, z`.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;

use crate::error::PolyError;
use crate::field::{Field, Rationals};
use crate::monomial::{dim_s, monomial_basis, Monomial, Var};

/// A homogeneous polynomial of a fixed degree.
///
/// The zero polynomial keeps a nominal degree so graded maps stay well typed.
/// No stored coefficient is ever zero.
#[derive(Clone, PartialEq)]
pub struct HomogPoly<F: Field> {
    field: F,
    degree: u32,
    terms: BTreeMap<Monomial, F::Elem>,
}

impl<F: Field> HomogPoly<F> {
    pub fn zero(field: F, degree: u32) -> Self {
        HomogPoly {
            field,
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(field: F, m: Monomial, coeff: F::Elem) -> Self {
        let mut p = Self::zero(field, m.degree());
        if !p.field.is_zero(&coeff) {
            p.terms.insert(m, coeff);
        }
        p
    }

    /// Builds a polynomial from terms, summing repeated monomials.
    pub fn from_terms<I>(field: F, degree: u32, terms: I) -> Result<Self, PolyError>
    where
        I: IntoIterator<Item = (Monomial, F::Elem)>,
    {
        let mut p = Self::zero(field, degree);
        for (m, c) in terms {
            if m.degree() != degree {
                return Err(PolyError::DegreeMismatch(degree, m.degree()));
            }
            p.add_term(m, c);
        }
        Ok(p)
    }

    /// Coefficients listed in [`monomial_basis`] order.
    pub fn from_coefficients(field: F, degree: u32, coeffs: &[F::Elem]) -> Self {
        assert_eq!(coeffs.len(), dim_s(degree as i64));
        let terms = monomial_basis(degree)
            .into_iter()
            .zip(coeffs)
            .filter(|(_, c)| !field.is_zero(c))
            .map(|(m, c)| (m, c.clone()))
            .collect();
        HomogPoly {
            field,
            degree,
            terms,
        }
    }

    fn add_term(&mut self, m: Monomial, c: F::Elem) {
        debug_assert_eq!(m.degree(), self.degree);
        if self.field.is_zero(&c) {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(old) => {
                let s = self.field.add(old, &c);
                if self.field.is_zero(&s) {
                    self.terms.remove(&m);
                } else {
                    *old = s;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &Monomial) -> F::Elem {
        self.terms.get(m).cloned().unwrap_or_else(|| self.field.zero())
    }

    /// Terms in canonical order, leading monomial first.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &F::Elem)> {
        self.terms.iter().rev()
    }

    /// Dense coefficient vector in [`monomial_basis`] order.
    pub fn coefficients(&self) -> Vec<F::Elem> {
        let mut v = vec![self.field.zero(); dim_s(self.degree as i64)];
        for (m, c) in &self.terms {
            v[m.index()] = c.clone();
        }
        v
    }

    fn check_field(&self, other: &Self) -> Result<(), PolyError> {
        if self.field != other.field {
            return Err(PolyError::FieldMismatch(
                self.field.descriptor().to_string(),
                other.field.descriptor().to_string(),
            ));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_field(other)?;
        if self.degree != other.degree {
            if other.is_zero() {
                return Ok(self.clone());
            }
            if self.is_zero() {
                return Ok(other.clone());
            }
            return Err(PolyError::DegreeMismatch(self.degree, other.degree));
        }
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (*m, self.field.neg(c)))
            .collect();
        HomogPoly {
            field: self.field.clone(),
            degree: self.degree,
            terms,
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let mut out = Self::zero(self.field.clone(), self.degree);
        for (m, a) in &self.terms {
            out.add_term(*m, self.field.mul(a, c));
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_field(other)?;
        let mut out = Self::zero(self.field.clone(), self.degree + other.degree);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), self.field.mul(c1, c2));
            }
        }
        Ok(out)
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        let terms = self.terms.iter().map(|(t, c)| (t.mul(m), c.clone())).collect();
        HomogPoly {
            field: self.field.clone(),
            degree: self.degree + m.degree(),
            terms,
        }
    }

    /// Partial derivative with respect to `v`. The result has degree `deg - 1`
    /// (a constant polynomial stays in degree 0).
    pub fn derivative(&self, v: Var) -> Self {
        let mut out = Self::zero(self.field.clone(), self.degree.saturating_sub(1));
        for (m, c) in &self.terms {
            let e = m.exps[v.index()];
            if let Some(q) = m.div_var(v) {
                out.add_term(q, self.field.mul(c, &self.field.from_i64(e as i64)));
            }
        }
        out
    }

    /// `(f_x, f_y, f_z)`.
    pub fn partials(&self) -> [Self; 3] {
        Var::ALL.map(|v| self.derivative(v))
    }
}

impl HomogPoly<Rationals> {
    /// Maps rational coefficients into another field.
    pub fn to_field<G: Field>(&self, field: &G) -> Result<HomogPoly<G>, PolyError> {
        let mut out = HomogPoly::zero(field.clone(), self.degree);
        for (m, c) in &self.terms {
            out.add_term(*m, field.from_rational(c)?);
        }
        Ok(out)
    }

    pub fn rational_terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms()
    }
}

/// `x f_x + y f_y + z f_z`.
pub fn euler_combination<F: Field>(f: &HomogPoly<F>) -> HomogPoly<F> {
    let mut out = HomogPoly::zero(f.field().clone(), f.degree());
    for v in Var::ALL {
        let term = f.derivative(v).mul_monomial(&Monomial::var(v));
        out = out.add(&term).expect("same field and degree");
    }
    out
}

/// Canonical textual form, e.g. `x^8+2x^4y^4-4x^2y^2z^4+y^8`; parseable back.
impl<F: Field> fmt::Display for HomogPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms().enumerate() {
            let mut s = self.field.format(c);
            let negative = s.starts_with('-');
            if negative {
                s.remove(0);
            }
            if negative {
                write!(f, "-")?;
            } else if i > 0 {
                write!(f, "+")?;
            }
            let is_unit = s == "1";
            if m.degree() == 0 {
                write!(f, "{s}")?;
            } else if is_unit {
                write!(f, "{m}")?;
            } else {
                write!(f, "{s}{m}")?;
            }
        }
        Ok(())
    }
}

impl<F: Field> fmt::Debug for HomogPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HomogPoly[{}; deg {}]({})", self.field.descriptor(), self.degree, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::parser::parse_poly;

    fn p(s: &str) -> HomogPoly<Rationals> {
        parse_poly(s, &Rationals).unwrap()
    }

    #[test]
    fn addition() {
        let x2 = p("x^2");
        let sum = x2.add(&x2.neg()).unwrap();
        assert!(sum.is_zero());
        assert_eq!(sum.degree(), 2);
        assert_eq!(x2.add(&p("y^2")).unwrap().to_string(), "x^2+y^2");
        assert_eq!(p("x^2+y^2").add(&x2).unwrap().to_string(), "2x^2+y^2");
        assert!(matches!(x2.add(&p("x")), Err(PolyError::DegreeMismatch(2, 1))));
        // zero of another nominal degree is absorbed
        assert_eq!(x2.add(&HomogPoly::zero(Rationals, 5)).unwrap(), x2);
    }

    #[test]
    fn field_mismatch() {
        let a = p("x").to_field(&PrimeField::new(7).unwrap()).unwrap();
        let b = p("x").to_field(&PrimeField::new(11).unwrap()).unwrap();
        assert!(matches!(a.add(&b), Err(PolyError::FieldMismatch(_, _))));
        assert!(matches!(a.mul(&b), Err(PolyError::FieldMismatch(_, _))));
    }

    #[test]
    fn multiplication() {
        let xy = p("x").mul(&p("y")).unwrap();
        assert_eq!(xy.to_string(), "xy");
        assert_eq!(xy.degree(), 2);
        assert_eq!(p("x+y").mul(&p("x-y")).unwrap().to_string(), "x^2-y^2");
        let c = p("x^3+y^3");
        assert_eq!(c.mul(&c).unwrap().to_string(), "x^6+2x^3y^3+y^6");
    }

    #[test]
    fn partial_derivatives() {
        let [fx, fy, fz] = p("x^5+y^5+z^5").partials();
        assert_eq!((fx.to_string(), fy.to_string(), fz.to_string()),
            ("5x^4".into(), "5y^4".into(), "5z^4".into()));
        let [fx, fy, fz] = p("xyz").partials();
        assert_eq!([fx, fy, fz].map(|q| q.to_string()), ["yz", "xz", "xy"]);
        let [fx, fy, fz] = p("x^3y^2+y^3z^2+x^2z^3").partials();
        assert_eq!(fx, p("3x^2y^2+2xz^3"));
        assert_eq!(fy, p("2x^3y+3y^2z^2"));
        assert_eq!(fz, p("2y^3z+3x^2z^2"));
    }

    #[test]
    fn euler_relation_small() {
        let f = p("x^3y^2+y^3z^2+x^2z^3");
        assert_eq!(euler_combination(&f), f.scale(&Rationals.from_i64(5)));
    }

    #[test]
    fn printing() {
        assert_eq!(p("-x^2+1/2y^2-3z^2").to_string(), "-x^2+1/2y^2-3z^2");
        assert_eq!(p("3").to_string(), "3");
        let fp = p("x-4y").to_field(&PrimeField::new(101).unwrap()).unwrap();
        assert_eq!(fp.to_string(), "x-4y");
    }

    #[test]
    fn coefficient_vectors() {
        let f = p("x^2-3yz");
        let v = f.coefficients();
        assert_eq!(v.len(), 6);
        assert_eq!(HomogPoly::from_coefficients(Rationals, 2, &v), f);
    }
}

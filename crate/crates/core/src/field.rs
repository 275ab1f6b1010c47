//! Coefficient fields.
//!
//! Two fields are supported: the rationals, with arbitrary-precision
//! numerators and denominators, and prime fields `GF(p)` for `p < 2^32`.
//! Computations over a prime field are fast but only probabilistic as a
//! stand-in for characteristic zero; results carry that label.

use std::fmt::{self, Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::FieldError;
use crate::linalg::{self, Echelon};

/// The prime used by `--field fp` when no explicit prime is given.
pub const DEFAULT_PRIME: u64 = 1_000_003;

/// Prime used internally by the rational field to obtain cheap rank lower bounds.
const PROBE_PRIME: u64 = 2_147_483_647;

/// Which field a computation runs over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldDescriptor {
    Rational,
    Prime(u64),
}

impl FieldDescriptor {
    pub fn is_certified(&self) -> bool {
        matches!(self, FieldDescriptor::Rational)
    }
}

impl Display for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldDescriptor::Rational => write!(f, "rational"),
            FieldDescriptor::Prime(p) => write!(f, "fp:{p}"),
        }
    }
}

impl FromStr for FieldDescriptor {
    type Err = FieldError;

    /// Accepts `rational`, `q`, `fp` (default prime) and `fp:<prime>`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        match s {
            "rational" | "q" | "Q" => return Ok(FieldDescriptor::Rational),
            "fp" => return Ok(FieldDescriptor::Prime(DEFAULT_PRIME)),
            _ => {}
        }
        let Some(rest) = s.strip_prefix("fp:") else {
            return Err(FieldError::BadDescriptor(s.to_string()));
        };
        let p: u64 = rest
            .parse()
            .map_err(|_| FieldError::BadDescriptor(s.to_string()))?;
        PrimeField::new(p)?;
        Ok(FieldDescriptor::Prime(p))
    }
}

/// An exact field together with the element operations the algorithms need.
///
/// Elements are plain values; the field value carries any runtime parameter
/// (the modulus for prime fields).
pub trait Field: Clone + Debug + PartialEq + Send + Sync + 'static {
    type Elem: Clone + Debug + PartialEq + Eq + Hash + Send + Sync;

    fn descriptor(&self) -> FieldDescriptor;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse. Panics on zero.
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
    fn from_int(&self, n: &BigInt) -> Self::Elem;
    fn from_rational(&self, q: &BigRational) -> Result<Self::Elem, FieldError>;
    fn format(&self, a: &Self::Elem) -> String;

    fn from_i64(&self, n: i64) -> Self::Elem {
        self.from_int(&BigInt::from(n))
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    /// `a - c*b`, the elimination kernel.
    fn sub_mul(&self, a: &Self::Elem, c: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.sub(a, &self.mul(c, b))
    }

    /// Reduced row echelon form of the given rows.
    fn row_echelon(&self, rows: Vec<Vec<Self::Elem>>, ncols: usize) -> Echelon<Self::Elem> {
        linalg::gauss_jordan(self, rows, ncols)
    }

    /// A lower bound for the rank of the row space, allowed to be cheaper than
    /// an exact rank computation. The default is the exact rank.
    fn rank_lower_bound(&self, rows: &[Vec<Self::Elem>], ncols: usize) -> usize {
        self.row_echelon(rows.to_vec(), ncols).rank()
    }
}

/// The field of rational numbers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor::Rational
    }
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> BigRational {
        assert!(!a.is_zero(), "inverse of zero");
        a.recip()
    }
    fn from_int(&self, n: &BigInt) -> BigRational {
        BigRational::from_integer(n.clone())
    }
    fn from_rational(&self, q: &BigRational) -> Result<BigRational, FieldError> {
        Ok(q.clone())
    }
    fn format(&self, a: &BigRational) -> String {
        if a.is_integer() {
            a.numer().to_string()
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }

    fn row_echelon(&self, rows: Vec<Vec<BigRational>>, ncols: usize) -> Echelon<BigRational> {
        linalg::fraction_free_rref(rows, ncols)
    }

    fn rank_lower_bound(&self, rows: &[Vec<BigRational>], ncols: usize) -> usize {
        // The rank of a reduction mod p never exceeds the rank over Q.
        let probe = PrimeField::unchecked(PROBE_PRIME);
        let mut reduced = Vec::with_capacity(rows.len());
        for row in rows {
            let mut out = Vec::with_capacity(ncols);
            for q in row {
                match probe.from_rational(q) {
                    Ok(v) => out.push(v),
                    // p divides a denominator: drop the row, still a lower bound
                    Err(_) => {
                        out.clear();
                        break;
                    }
                }
            }
            if out.len() == ncols {
                reduced.push(out);
            }
        }
        probe.row_echelon(reduced, ncols).rank()
    }
}

/// The prime field `GF(p)` with `p < 2^32`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, FieldError> {
        if p >= 1 << 32 {
            return Err(FieldError::PrimeTooLarge(p));
        }
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    fn unchecked(p: u64) -> Self {
        PrimeField { p }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn reduce_int(&self, n: &BigInt) -> u64 {
        let m = BigInt::from(self.p);
        let r = n.mod_floor(&m);
        r.to_u64().expect("residue fits in u64")
    }

    fn pow(&self, mut base: u64, mut e: u64) -> u64 {
        let mut acc = 1u64;
        base %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % self.p;
            }
            base = base * base % self.p;
            e >>= 1;
        }
        acc
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor::Prime(self.p)
    }
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn inv(&self, a: &u64) -> u64 {
        assert!(*a != 0, "inverse of zero");
        self.pow(*a, self.p - 2)
    }
    fn from_int(&self, n: &BigInt) -> u64 {
        self.reduce_int(n)
    }
    fn from_rational(&self, q: &BigRational) -> Result<u64, FieldError> {
        let den = self.reduce_int(q.denom());
        if den == 0 {
            return Err(FieldError::DenominatorDivisible {
                value: q.to_string(),
                p: self.p,
            });
        }
        Ok(self.mul(&self.reduce_int(q.numer()), &self.inv(&den)))
    }
    fn format(&self, a: &u64) -> String {
        // symmetric representative reads better for small negative coefficients
        if *a > self.p / 2 {
            format!("-{}", self.p - a)
        } else {
            a.to_string()
        }
    }
    fn sub_mul(&self, a: &u64, c: &u64, b: &u64) -> u64 {
        let prod = c * b % self.p;
        self.sub(a, &prod)
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut i = 2u64;
    while i * i <= n {
        if n % i == 0 {
            return false;
        }
        i += 1;
    }
    true
}

/// Clears denominators of a rational vector, returning a primitive integer
/// vector with positive leading entry, or `None` for the zero vector.
pub fn primitive_integer_vector(v: &[BigRational]) -> Option<Vec<BigInt>> {
    let first = v.iter().find(|q| !q.is_zero())?;
    let lcm = v
        .iter()
        .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let mut ints: Vec<BigInt> = v
        .iter()
        .map(|q| q.numer() * (&lcm / q.denom()))
        .collect();
    let content = ints.iter().fold(BigInt::zero(), |acc, n| acc.gcd(n));
    for n in ints.iter_mut() {
        *n = &*n / &content;
    }
    if first.is_negative() {
        for n in ints.iter_mut() {
            *n = -&*n;
        }
    }
    debug_assert!(ints.iter().any(|n| n.is_positive()));
    Some(ints)
}

//! Monomials in `x, y, z` and the canonical graded-lexicographic order.

use std::cmp::Ordering;
use std::fmt;

/// `x^a y^b z^c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub exps: [u32; 3],
}

/// One of the three variables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    X = 0,
    Y = 1,
    Z = 2,
}

impl Var {
    pub const ALL: [Var; 3] = [Var::X, Var::Y, Var::Z];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> char {
        ['x', 'y', 'z'][self.index()]
    }
}

impl Monomial {
    pub const ONE: Monomial = Monomial { exps: [0, 0, 0] };

    pub fn new(a: u32, b: u32, c: u32) -> Self {
        Monomial { exps: [a, b, c] }
    }

    pub fn var(v: Var) -> Self {
        let mut exps = [0; 3];
        exps[v.index()] = 1;
        Monomial { exps }
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: [
                self.exps[0] + other.exps[0],
                self.exps[1] + other.exps[1],
                self.exps[2] + other.exps[2],
            ],
        }
    }

    pub fn times(&self, v: Var) -> Monomial {
        let mut m = *self;
        m.exps[v.index()] += 1;
        m
    }

    /// `self / v`, if `v` divides `self`.
    pub fn div_var(&self, v: Var) -> Option<Monomial> {
        let mut m = *self;
        let e = &mut m.exps[v.index()];
        if *e == 0 {
            return None;
        }
        *e -= 1;
        Some(m)
    }

    /// Position of this monomial in [`monomial_basis`] of its degree.
    pub fn index(&self) -> usize {
        let k = self.degree() as usize;
        let a = self.exps[0] as usize;
        let c = self.exps[2] as usize;
        (k - a) * (k - a + 1) / 2 + c
    }
}

impl Ord for Monomial {
    /// Graded lexicographic with `x > y > z`: higher degree first, then by the
    /// exponent of `x`, then `y`. `Greater` means earlier in the canonical order.
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then(self.exps[0].cmp(&other.exps[0]))
            .then(self.exps[1].cmp(&other.exps[1]))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree() == 0 {
            return write!(f, "1");
        }
        for v in Var::ALL {
            match self.exps[v.index()] {
                0 => {}
                1 => write!(f, "{}", v.name())?,
                e => write!(f, "{}^{}", v.name(), e)?,
            }
        }
        Ok(())
    }
}

/// Number of monomials of degree `k` in three variables, `C(k+2, 2)`;
/// zero for negative `k`.
pub fn dim_s(k: i64) -> usize {
    if k < 0 {
        0
    } else {
        let k = k as usize;
        (k + 2) * (k + 1) / 2
    }
}

/// All monomials of degree `k`, in canonical (descending graded-lex) order.
pub fn monomial_basis(k: u32) -> Vec<Monomial> {
    let mut out = Vec::with_capacity(dim_s(k as i64));
    for a in (0..=k).rev() {
        for b in (0..=k - a).rev() {
            out.push(Monomial::new(a, b, k - a - b));
        }
    }
    out
}

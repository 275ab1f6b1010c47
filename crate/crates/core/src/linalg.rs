//! Dense exact linear algebra over a [`Field`].
//!
//! Matrices are lists of rows. Everything here returns canonical objects
//! (reduced row echelon forms), so results never depend on pivoting choices.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::field::Field;

/// Reduced row echelon form: every row has a leading 1 in its pivot column and
/// zeros in all other pivot columns. Pivot columns are strictly increasing.
#[derive(Debug, Clone, PartialEq)]
pub struct Echelon<E> {
    pub rows: Vec<Vec<E>>,
    pub pivots: Vec<usize>,
    pub ncols: usize,
}

impl<E> Echelon<E> {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Columns that carry no pivot, in increasing order.
    pub fn free_columns(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ncols];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ncols).filter(|&c| !is_pivot[c]).collect()
    }
}

/// Plain Gauss-Jordan elimination.
pub fn gauss_jordan<F: Field>(
    field: &F,
    mut rows: Vec<Vec<F::Elem>>,
    ncols: usize,
) -> Echelon<F::Elem> {
    rows.retain(|r| r.iter().any(|e| !field.is_zero(e)));
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !field.is_zero(&rows[i][c])) else {
            continue;
        };
        rows.swap(r, p);
        let inv = field.inv(&rows[r][c]);
        if !field.is_one(&inv) {
            for e in rows[r][c..].iter_mut() {
                *e = field.mul(e, &inv);
            }
        }
        let support: Vec<usize> = (c..ncols).filter(|&j| !field.is_zero(&rows[r][j])).collect();
        let pivot_row = std::mem::take(&mut rows[r]);
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || field.is_zero(&row[c]) {
                continue;
            }
            let factor = row[c].clone();
            for &j in &support {
                row[j] = field.sub_mul(&row[j], &factor, &pivot_row[j]);
            }
        }
        rows[r] = pivot_row;
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    Echelon { rows, pivots, ncols }
}

/// Reduced row echelon form over the rationals using fraction-free
/// (Bareiss-style) Gauss-Jordan elimination on an integer copy of the matrix.
///
/// After step `k` every processed pivot entry equals the determinant of the
/// leading `k x k` pivot block, and each update divides exactly by the
/// previous pivot, so intermediate entries stay integral minors.
pub fn fraction_free_rref(rows: Vec<Vec<BigRational>>, ncols: usize) -> Echelon<BigRational> {
    let mut a: Vec<Vec<BigInt>> = rows
        .iter()
        .filter_map(|row| integer_row(row))
        .collect();
    let n = a.len();
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..ncols {
        if r == n {
            break;
        }
        let Some(p) = (r..n).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let pivot_row = std::mem::take(&mut a[r]);
        let piv = pivot_row[c].clone();
        let support: Vec<usize> = (0..ncols).filter(|&j| !pivot_row[j].is_zero()).collect();
        for (i, row) in a.iter_mut().enumerate() {
            if i == r {
                continue;
            }
            let e = row[c].clone();
            if e.is_zero() {
                if piv != prev {
                    for x in row.iter_mut().filter(|x| !x.is_zero()) {
                        *x = &*x * &piv / &prev;
                    }
                }
                continue;
            }
            let mut touched = vec![false; ncols];
            for &j in &support {
                touched[j] = true;
                row[j] = (&piv * &row[j] - &e * &pivot_row[j]) / &prev;
            }
            if piv != prev {
                for (j, x) in row.iter_mut().enumerate() {
                    if !touched[j] && !x.is_zero() {
                        *x = &*x * &piv / &prev;
                    }
                }
            }
        }
        a[r] = pivot_row;
        prev = piv;
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    let det = prev;
    let rows = a
        .into_iter()
        .map(|row| {
            row.into_iter()
                .map(|x| {
                    if x.is_zero() {
                        BigRational::zero()
                    } else {
                        BigRational::new(x, det.clone())
                    }
                })
                .collect()
        })
        .collect();
    Echelon { rows, pivots, ncols }
}

/// Scales a rational row to a primitive integer row; `None` if the row is zero.
fn integer_row(row: &[BigRational]) -> Option<Vec<BigInt>> {
    if row.iter().all(|q| q.is_zero()) {
        return None;
    }
    let lcm = row.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let mut ints: Vec<BigInt> = row.iter().map(|q| q.numer() * (&lcm / q.denom())).collect();
    let content = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !content.is_one() {
        for x in ints.iter_mut() {
            *x = &*x / &content;
        }
    }
    Some(ints)
}

/// Basis of `{ v : A v = 0 }` for the matrix `A` given by `rows`, returned in
/// reduced row echelon form (earliest pivot first).
pub fn kernel<F: Field>(field: &F, rows: Vec<Vec<F::Elem>>, ncols: usize) -> Echelon<F::Elem> {
    let ech = field.row_echelon(rows, ncols);
    let basis: Vec<Vec<F::Elem>> = ech
        .free_columns()
        .into_iter()
        .map(|j| {
            let mut v = vec![field.zero(); ncols];
            v[j] = field.one();
            for (row, &p) in ech.rows.iter().zip(&ech.pivots) {
                if !field.is_zero(&row[j]) {
                    v[p] = field.neg(&row[j]);
                }
            }
            v
        })
        .collect();
    field.row_echelon(basis, ncols)
}

/// Rank of the row space.
pub fn rank<F: Field>(field: &F, rows: Vec<Vec<F::Elem>>, ncols: usize) -> usize {
    field.row_echelon(rows, ncols).rank()
}

/// `A v` for `A` given by rows.
pub fn mat_vec<F: Field>(field: &F, rows: &[Vec<F::Elem>], v: &[F::Elem]) -> Vec<F::Elem> {
    rows.iter()
        .map(|row| {
            row.iter().zip(v).fold(field.zero(), |acc, (a, b)| {
                if field.is_zero(a) || field.is_zero(b) {
                    acc
                } else {
                    field.add(&acc, &field.mul(a, b))
                }
            })
        })
        .collect()
}

/// An incrementally grown subspace, used to pick vectors that extend a span.
#[derive(Debug, Clone)]
pub struct Span<F: Field> {
    field: F,
    ncols: usize,
    rows: Vec<Vec<F::Elem>>,
    pivots: Vec<usize>,
}

impl<F: Field> Span<F> {
    pub fn new(field: F, ncols: usize) -> Self {
        Span {
            field,
            ncols,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    /// Starts from the row space of an echelon form.
    pub fn from_echelon(field: F, ech: Echelon<F::Elem>) -> Self {
        Span {
            field,
            ncols: ech.ncols,
            rows: ech.rows,
            pivots: ech.pivots,
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        let mut v = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if f.is_zero(&v[p]) {
                continue;
            }
            let c = v[p].clone();
            for (x, y) in v.iter_mut().zip(row) {
                if !f.is_zero(y) {
                    *x = f.sub_mul(x, &c, y);
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[F::Elem]) -> bool {
        self.reduce(v).iter().all(|x| self.field.is_zero(x))
    }

    /// Adds `v` if it is not already in the span; returns whether it was added.
    pub fn insert(&mut self, v: &[F::Elem]) -> bool {
        assert_eq!(v.len(), self.ncols);
        let f = &self.field;
        let mut w = self.reduce(v);
        let Some(p) = w.iter().position(|x| !f.is_zero(x)) else {
            return false;
        };
        let inv = f.inv(&w[p]);
        for x in w.iter_mut() {
            *x = f.mul(x, &inv);
        }
        self.rows.push(w);
        self.pivots.push(p);
        true
    }
}

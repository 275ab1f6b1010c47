//! Degree-by-degree structure of the Jacobian algebra `M(f) = S / J_f`.
//!
//! For every degree `k` we keep a basis of `M(f)_k` made of monomial classes
//! and the three multiplication maps `M(f)_{k-1} -> M(f)_k`. Below degree
//! `d - 1` nothing is divided out. In degree `d - 1` the partials are
//! eliminated directly. Above that `J_{k+1} = S_1 J_k`, and exactness of the
//! Koszul complex gives
//!
//! ```text
//! M_{k+1} = (x M_k + y M_k + z M_k) / < x[yw] - y[xw], x[zw] - z[xw], y[zw] - z[yw] : w in M_{k-1} >
//! ```
//!
//! so each step only needs elimination on a `3 dim M_{k-1} x 3 dim M_k`
//! matrix instead of the full evaluation map `S_{k-d+1}^3 -> S_k`.

use std::collections::HashMap;

use crate::field::Field;
use crate::linalg;
use crate::monomial::{dim_s, monomial_basis, Monomial, Var};
use crate::poly::HomogPoly;

/// `M(f)_k`: a monomial basis and the maps `x, y, z : M_{k-1} -> M_k`.
#[derive(Debug, Clone)]
pub struct GradedPiece<F: Field> {
    /// Monomials whose classes form a basis, in descending canonical order.
    pub basis: Vec<Monomial>,
    /// `mult[v][i]` is the class of `v * basis_{k-1}[i]` in coordinates of `basis`.
    pub mult: [Vec<Vec<F::Elem>>; 3],
}

impl<F: Field> GradedPiece<F> {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// Incrementally computed graded pieces of the Jacobian algebra of `f`.
#[derive(Debug, Clone)]
pub struct JacobianAlgebra<F: Field> {
    field: F,
    degree: u32,
    partials: [HomogPoly<F>; 3],
    pieces: Vec<GradedPiece<F>>,
}

impl<F: Field> JacobianAlgebra<F> {
    pub fn new(f: &HomogPoly<F>) -> Self {
        JacobianAlgebra {
            field: f.field().clone(),
            degree: f.degree(),
            partials: f.partials(),
            pieces: Vec::new(),
        }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    /// Degree of the curve.
    pub fn curve_degree(&self) -> u32 {
        self.degree
    }

    /// `dim M(f)_k`; zero for negative `k`.
    pub fn dim(&mut self, k: i64) -> usize {
        if k < 0 {
            return 0;
        }
        self.piece(k as u32).dim()
    }

    /// The graded piece in degree `k`, computing all lower pieces on demand.
    pub fn piece(&mut self, k: u32) -> &GradedPiece<F> {
        while self.pieces.len() <= k as usize {
            let next = self.pieces.len() as u32;
            let piece = self.compute_piece(next);
            self.pieces.push(piece);
        }
        &self.pieces[k as usize]
    }

    /// Hilbert function values for `0..=k`.
    pub fn values(&mut self, k: u32) -> Vec<usize> {
        self.piece(k);
        self.pieces[..=k as usize].iter().map(|p| p.dim()).collect()
    }

    fn compute_piece(&self, k: u32) -> GradedPiece<F> {
        let d = self.degree;
        if d == 0 || k + 1 < d {
            self.free_piece(k)
        } else if k + 1 == d {
            self.generator_piece(k)
        } else {
            self.koszul_step(k)
        }
    }

    fn unit(&self, n: usize, i: usize) -> Vec<F::Elem> {
        let mut v = vec![self.field.zero(); n];
        v[i] = self.field.one();
        v
    }

    /// `S_k` itself.
    fn free_piece(&self, k: u32) -> GradedPiece<F> {
        let basis = monomial_basis(k);
        let n = basis.len();
        let mult = Var::ALL.map(|v| {
            if k == 0 {
                return Vec::new();
            }
            monomial_basis(k - 1)
                .iter()
                .map(|m| self.unit(n, m.times(v).index()))
                .collect()
        });
        GradedPiece { basis, mult }
    }

    /// `S_{d-1} / <f_x, f_y, f_z>`.
    fn generator_piece(&self, k: u32) -> GradedPiece<F> {
        let n = dim_s(k as i64);
        let rows: Vec<_> = self.partials.iter().map(|p| p.coefficients()).collect();
        let ech = self.field.row_echelon(rows, n);
        let all = monomial_basis(k);
        let free = ech.free_columns();
        let mut position = vec![None; n];
        for (i, &c) in free.iter().enumerate() {
            position[c] = Some(i);
        }
        // class of each monomial of degree k in the free-column basis
        let mut pivot_row = vec![None; n];
        for (r, &p) in ech.pivots.iter().enumerate() {
            pivot_row[p] = Some(r);
        }
        let project = |c: usize| -> Vec<F::Elem> {
            match (position[c], pivot_row[c]) {
                (Some(i), _) => self.unit(free.len(), i),
                (None, Some(r)) => free
                    .iter()
                    .map(|&j| self.field.neg(&ech.rows[r][j]))
                    .collect(),
                (None, None) => unreachable!("column is either free or a pivot"),
            }
        };
        let mult = Var::ALL.map(|v| {
            if k == 0 {
                return Vec::new();
            }
            monomial_basis(k - 1)
                .iter()
                .map(|m| project(m.times(v).index()))
                .collect()
        });
        GradedPiece {
            basis: free.iter().map(|&c| all[c]).collect(),
            mult,
        }
    }

    /// `M_{k+1}` from `M_k` and `M_{k-1}`; here called with `k+1 = target`.
    fn koszul_step(&self, target: u32) -> GradedPiece<F> {
        let field = &self.field;
        let cur = &self.pieces[target as usize - 1];
        let empty = GradedPiece {
            basis: Vec::new(),
            mult: [Vec::new(), Vec::new(), Vec::new()],
        };
        let prev = if target >= 2 {
            &self.pieces[target as usize - 2]
        } else {
            &empty
        };
        let r = cur.dim();
        let rp = prev.dim();
        let ncols = 3 * r;

        // Coordinates (v, i) stand for the class of v * basis[i]; order them by
        // that monomial, descending, so that larger monomials become pivots.
        let mut coords: Vec<(Monomial, usize, usize)> = (0..3)
            .flat_map(|v| (0..r).map(move |i| (v, i)))
            .map(|(v, i)| (cur.basis[i].times(Var::ALL[v]), v, i))
            .collect();
        coords.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        let mut col = vec![0usize; ncols];
        for (c, &(_, v, i)) in coords.iter().enumerate() {
            col[v * r + i] = c;
        }

        let [mx, my, mz] = &cur.mult;
        let mut rows = Vec::with_capacity(3 * rp);
        for j in 0..rp {
            for (a, sa, b, sb) in [(0, &my[j], 1, &mx[j]), (0, &mz[j], 2, &mx[j]), (1, &mz[j], 2, &my[j])] {
                let mut row = vec![field.zero(); ncols];
                for i in 0..r {
                    if !field.is_zero(&sa[i]) {
                        row[col[a * r + i]] = sa[i].clone();
                    }
                    if !field.is_zero(&sb[i]) {
                        row[col[b * r + i]] = field.neg(&sb[i]);
                    }
                }
                rows.push(row);
            }
        }
        let ech = field.row_echelon(rows, ncols);
        let free = ech.free_columns();
        let mut position: HashMap<usize, usize> = HashMap::new();
        for (i, &c) in free.iter().enumerate() {
            position.insert(c, i);
        }
        let mut pivot_row = HashMap::new();
        for (row, &p) in ech.pivots.iter().enumerate() {
            pivot_row.insert(p, row);
        }
        let project = |c: usize| -> Vec<F::Elem> {
            if let Some(&i) = position.get(&c) {
                self.unit(free.len(), i)
            } else {
                let row = &ech.rows[pivot_row[&c]];
                free.iter().map(|&j| field.neg(&row[j])).collect()
            }
        };
        let mult = [0, 1, 2].map(|v| (0..r).map(|i| project(col[v * r + i])).collect());
        GradedPiece {
            basis: free.iter().map(|&c| coords[c].0).collect(),
            mult,
        }
    }

    /// Class of a monomial of degree `k` in the basis of `M(f)_k`.
    pub fn class_of_monomial(&mut self, m: &Monomial) -> Vec<F::Elem> {
        let k = m.degree();
        self.piece(k);
        self.class_rec(m)
    }

    fn class_rec(&self, m: &Monomial) -> Vec<F::Elem> {
        let k = m.degree();
        let piece = &self.pieces[k as usize];
        if let Some(i) = piece.basis.iter().position(|b| b == m) {
            return self.unit(piece.dim(), i);
        }
        let (v, smaller) = Var::ALL
            .iter()
            .find_map(|&v| m.div_var(v).map(|q| (v, q)))
            .expect("monomials outside every basis have positive degree");
        let inner = self.class_rec(&smaller);
        let map = &piece.mult[v.index()];
        let mut out = vec![self.field.zero(); piece.dim()];
        for (c, image) in inner.iter().zip(map) {
            if self.field.is_zero(c) {
                continue;
            }
            for (o, x) in out.iter_mut().zip(image) {
                *o = self.field.add(o, &self.field.mul(c, x));
            }
        }
        out
    }

    /// Class of a homogeneous polynomial in `M(f)`.
    pub fn class_of(&mut self, p: &HomogPoly<F>) -> Vec<F::Elem> {
        let k = p.degree();
        let n = self.dim(k as i64);
        let mut out = vec![self.field.zero(); n];
        for (m, c) in p.terms() {
            let cls = self.class_of_monomial(m);
            for (o, x) in out.iter_mut().zip(&cls) {
                *o = self.field.add(o, &self.field.mul(c, x));
            }
        }
        out
    }
}

/// `dim M(f)_k` by the literal rank of `(a, b, c) -> a f_x + b f_y + c f_z`
/// from `S_{k-d+1}^3` to `S_k`. Quadratic in `dim S_k`; used as an
/// independent check of [`JacobianAlgebra`].
pub fn hilbert_dim_direct<F: Field>(f: &HomogPoly<F>, k: i64) -> usize {
    if k < 0 {
        return 0;
    }
    let d = f.degree() as i64;
    let source = k - d + 1;
    let n = dim_s(k);
    if source < 0 || d == 0 {
        return n;
    }
    let partials = f.partials();
    let rows: Vec<_> = monomial_basis(source as u32)
        .iter()
        .flat_map(|m| partials.iter().map(move |p| p.mul_monomial(m).coefficients()))
        .collect();
    n - linalg::rank(f.field(), rows, n)
}

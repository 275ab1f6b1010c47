//! Syzygies of the Jacobian ideal and the minimal graded free resolution
//!
//! ```text
//! 0 -> (+)_j S(-c_j) -> (+)_i S(-d_i - d + 1) -> S(-d + 1)^3 -> S
//! ```
//!
//! of `M(f)`, computed degree by degree with linear algebra only.
//!
//! Dimensions of syzygy and relation spaces are read off the Hilbert
//! function. In a given degree, when a rank computed modulo a probe prime
//! already reaches the expected dimension, the multiples of lower generators
//! span everything and no exact elimination is needed there.

use std::fmt;

use crate::error::ResolutionError;
use crate::field::{Field, FieldDescriptor};
use crate::hilbert::JacobianAlgebra;
use crate::linalg::{self, Echelon, Span};
use crate::monomial::{dim_s, monomial_basis, Monomial};
use crate::poly::HomogPoly;

/// `(a, b, c)` of degree `k` with `a f_x + b f_y + c f_z = 0`.
#[derive(Clone, PartialEq)]
pub struct SyzygyVector<F: Field> {
    degree: u32,
    components: [HomogPoly<F>; 3],
}

impl<F: Field> SyzygyVector<F> {
    /// Checks the relation against the partials of `f`.
    pub fn new(f: &HomogPoly<F>, components: [HomogPoly<F>; 3]) -> Result<Self, ResolutionError> {
        let degree = components[0].degree();
        if components.iter().any(|c| c.degree() != degree && !c.is_zero()) {
            return Err(ResolutionError::NotASyzygy("components of different degrees".into()));
        }
        let partials = f.partials();
        let mut sum = HomogPoly::zero(f.field().clone(), degree + f.degree().saturating_sub(1));
        for (c, p) in components.iter().zip(&partials) {
            let term = c.mul(p).map_err(|e| ResolutionError::NotASyzygy(e.to_string()))?;
            sum = sum
                .add(&term)
                .map_err(|e| ResolutionError::NotASyzygy(e.to_string()))?;
        }
        if !sum.is_zero() {
            return Err(ResolutionError::NotASyzygy(sum.to_string()));
        }
        Ok(SyzygyVector { degree, components })
    }

    fn from_vector(f: &HomogPoly<F>, k: u32, v: &[F::Elem]) -> Result<Self, ResolutionError> {
        let n = dim_s(k as i64);
        let comps = [0, 1, 2].map(|c| HomogPoly::from_coefficients(f.field().clone(), k, &v[c * n..(c + 1) * n]));
        Self::new(f, comps)
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn components(&self) -> &[HomogPoly<F>; 3] {
        &self.components
    }

    /// Coefficients of `a`, `b`, `c` concatenated, each in monomial-basis order.
    pub fn to_vector(&self) -> Vec<F::Elem> {
        self.components.iter().flat_map(|c| c.coefficients()).collect()
    }
}

impl<F: Field> fmt::Display for SyzygyVector<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = &self.components;
        write!(f, "({a}, {b}, {c})")
    }
}

impl<F: Field> fmt::Debug for SyzygyVector<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SyzygyVector[deg {}]{}", self.degree, self)
    }
}

/// Shape of the minimal resolution, with explicit first syzygies.
#[derive(Debug, Clone, PartialEq)]
pub struct ResolutionData<F: Field> {
    pub degree: u32,
    pub exponents: Vec<u32>,
    pub generators: Vec<SyzygyVector<F>>,
    /// Twists `c_j` of the last module, as in `S(-c_j)`, nondecreasing.
    pub twists: Vec<u32>,
    pub epsilons: Vec<u32>,
}

impl<F: Field> ResolutionData<F> {
    pub fn m(&self) -> usize {
        self.exponents.len()
    }

    pub fn is_free(&self) -> bool {
        self.m() == 2
    }

    pub fn field(&self) -> FieldDescriptor {
        self.generators[0].components[0].field().descriptor()
    }

    /// Shifts of `S(-d+1)^3`.
    pub fn first_twists(&self) -> Vec<u32> {
        vec![self.degree - 1; 3]
    }

    /// Shifts `d_i + d - 1`.
    pub fn second_twists(&self) -> Vec<u32> {
        self.exponents.iter().map(|e| e + self.degree - 1).collect()
    }

    /// Shifts `c_j`.
    pub fn third_twists(&self) -> Vec<u32> {
        self.twists.clone()
    }
}

/// `C(n, 2)`, zero for `n < 2`.
pub fn binom2(n: i64) -> i64 {
    if n < 2 {
        0
    } else {
        n * (n - 1) / 2
    }
}

/// Finite direct sum `(+)_i S(-s_i)` with coordinates ordered by summand,
/// then by monomial.
struct FreeModule {
    shifts: Vec<u32>,
}

impl FreeModule {
    fn offsets(&self, e: u32) -> Vec<usize> {
        let mut out = vec![0];
        for &s in &self.shifts {
            let last = *out.last().unwrap();
            out.push(last + dim_s(e as i64 - s as i64));
        }
        out
    }

    fn dim(&self, e: u32) -> usize {
        *self.offsets(e).last().unwrap()
    }

    /// `w * v` for `v` in degree `e`.
    fn times<F: Field>(&self, field: &F, v: &[F::Elem], e: u32, w: &Monomial) -> Vec<F::Elem> {
        let src = self.offsets(e);
        let dst = self.offsets(e + w.degree());
        let mut out = vec![field.zero(); *dst.last().unwrap()];
        for (i, &s) in self.shifts.iter().enumerate() {
            if e < s {
                continue;
            }
            for (j, u) in monomial_basis(e - s).iter().enumerate() {
                let x = &v[src[i] + j];
                if !field.is_zero(x) {
                    out[dst[i] + u.mul(w).index()] = x.clone();
                }
            }
        }
        out
    }
}

/// New minimal generators of a graded submodule in degree `e`: a complement of
/// the multiples of `gens` (all of lower degree) inside the degree-`e` piece
/// of dimension `target`, whose basis `kernel` produces on demand.
fn new_generators<F: Field>(
    field: &F,
    module: &FreeModule,
    e: u32,
    gens: &[(u32, Vec<F::Elem>)],
    target: usize,
    kernel: impl FnOnce() -> Echelon<F::Elem>,
) -> Result<Vec<Vec<F::Elem>>, ResolutionError> {
    if target == 0 {
        return Ok(Vec::new());
    }
    let n = module.dim(e);
    let mut multiples = Vec::new();
    for (deg, g) in gens {
        if *deg >= e {
            continue;
        }
        for w in monomial_basis(e - deg) {
            multiples.push(module.times(field, g, *deg, &w));
        }
    }
    if field.rank_lower_bound(&multiples, n) == target {
        return Ok(Vec::new());
    }
    let ech = field.row_echelon(multiples, n);
    if ech.rank() > target {
        return Err(ResolutionError::InternalInconsistency(format!(
            "degree {e}: multiples span {} > {target}",
            ech.rank()
        )));
    }
    let basis = kernel();
    if basis.rank() != target {
        return Err(ResolutionError::InternalInconsistency(format!(
            "degree {e}: kernel has dimension {}, Hilbert function predicts {target}",
            basis.rank()
        )));
    }
    let mut span = Span::from_echelon(field.clone(), ech);
    let mut out = Vec::new();
    for v in basis.rows {
        if span.dim() == target {
            break;
        }
        if span.insert(&v) {
            out.push(v);
        }
    }
    Ok(out)
}

fn transpose<E: Clone>(rows: &[Vec<E>], ncols: usize) -> Vec<Vec<E>> {
    (0..ncols)
        .map(|c| rows.iter().map(|r| r[c].clone()).collect())
        .collect()
}

/// A curve together with its lazily extended Jacobian algebra.
#[derive(Debug, Clone)]
pub struct Curve<F: Field> {
    f: HomogPoly<F>,
    partials: [HomogPoly<F>; 3],
    algebra: JacobianAlgebra<F>,
}

impl<F: Field> Curve<F> {
    pub fn new(f: HomogPoly<F>) -> Self {
        let algebra = JacobianAlgebra::new(&f);
        let partials = f.partials();
        Curve {
            f,
            partials,
            algebra,
        }
    }

    pub fn poly(&self) -> &HomogPoly<F> {
        &self.f
    }

    pub fn degree(&self) -> u32 {
        self.f.degree()
    }

    pub fn field(&self) -> &F {
        self.f.field()
    }

    pub fn algebra(&mut self) -> &mut JacobianAlgebra<F> {
        &mut self.algebra
    }

    pub fn hilbert_dim(&mut self, k: i64) -> usize {
        self.algebra.dim(k)
    }

    /// Eventual value of the Hilbert function: first `k >= 3d - 6` with
    /// `h(k) = h(k+1) = h(k+2)`, searched up to `k + 2 = 5d`.
    fn stable_value(&mut self) -> Result<usize, ResolutionError> {
        let d = self.degree();
        let cap = 5 * d.max(1);
        let start = (3 * d).saturating_sub(6);
        let mut k = start;
        while k + 2 <= cap {
            let h = [0, 1, 2].map(|i| self.algebra.dim((k + i) as i64));
            if h[0] == h[1] && h[1] == h[2] {
                return Ok(h[0]);
            }
            k += 1;
        }
        let tail = (cap.saturating_sub(2).max(start)..=cap)
            .map(|k| self.algebra.dim(k as i64))
            .collect();
        Err(ResolutionError::NotStabilized { cap, tail })
    }

    /// Total Tjurina number as the stable value of the Hilbert function.
    pub fn tjurina_oracle(&mut self) -> Result<usize, ResolutionError> {
        if self.degree() < 3 {
            return Err(ResolutionError::DegreeTooSmall(self.degree()));
        }
        self.stable_value()
    }

    pub fn is_reduced(&mut self) -> bool {
        self.stable_value().is_ok()
    }

    /// `dim` of the syzygy space in degree `k`.
    pub fn syzygy_dim(&mut self, k: u32) -> usize {
        let d = self.degree() as i64;
        let k = k as i64;
        let v = 3 * dim_s(k) as i64 - dim_s(k + d - 1) as i64 + self.algebra.dim(k + d - 1) as i64;
        v as usize
    }

    /// Matrix of `(a, b, c) -> a f_x + b f_y + c f_z` from `S_k^3` to `S_{k+d-1}`.
    fn evaluation_matrix(&self, k: u32) -> Vec<Vec<F::Elem>> {
        let field = self.field();
        let n = dim_s(k as i64);
        let target = k + self.degree().saturating_sub(1);
        let mut rows = vec![vec![field.zero(); 3 * n]; dim_s(target as i64)];
        for (v, p) in self.partials.iter().enumerate() {
            for (i, u) in monomial_basis(k).iter().enumerate() {
                for (m, c) in p.terms() {
                    rows[u.mul(m).index()][v * n + i] = c.clone();
                }
            }
        }
        rows
    }

    /// Canonical basis (reduced row echelon form) of the syzygies of degree `k`.
    pub fn syzygy_basis(&self, k: u32) -> Vec<SyzygyVector<F>> {
        let n = 3 * dim_s(k as i64);
        linalg::kernel(self.field(), self.evaluation_matrix(k), n)
            .rows
            .iter()
            .map(|v| SyzygyVector::from_vector(&self.f, k, v).expect("kernel vectors are syzygies"))
            .collect()
    }

    pub fn minimal_resolution(&mut self) -> Result<ResolutionData<F>, ResolutionError> {
        let d = self.degree();
        if d < 3 {
            return Err(ResolutionError::DegreeTooSmall(d));
        }
        if !self.is_reduced() {
            return Err(ResolutionError::NotReduced);
        }
        let field = self.field().clone();
        let inconsistent = |msg: String| Err(ResolutionError::InternalInconsistency(msg));

        // first syzygies
        let triple = FreeModule {
            shifts: vec![0, 0, 0],
        };
        let mut gens: Vec<(u32, Vec<F::Elem>)> = Vec::new();
        for k in 0..=2 * d - 4 {
            let target = self.syzygy_dim(k);
            let fresh = new_generators(&field, &triple, k, &gens, target, || {
                linalg::kernel(&field, self.evaluation_matrix(k), triple.dim(k))
            })?;
            gens.extend(fresh.into_iter().map(|v| (k, v)));
        }
        let exponents: Vec<u32> = gens.iter().map(|(k, _)| *k).collect();
        let m = exponents.len();
        if m < 2 {
            return inconsistent(format!("only {m} syzygy generators up to degree {}", 2 * d - 4));
        }
        let generators = gens
            .iter()
            .map(|(k, v)| SyzygyVector::from_vector(&self.f, *k, v))
            .collect::<Result<Vec<_>, _>>()?;
        let t = exponents[0] as i64 + exponents[1] as i64 + 1 - d as i64;
        if t < 0 {
            return inconsistent(format!("d_1 + d_2 = {} < d - 1", exponents[0] + exponents[1]));
        }

        // relations among the generators
        let mut twists = Vec::new();
        if m >= 3 {
            let module = FreeModule {
                shifts: exponents.clone(),
            };
            let mut rels: Vec<(u32, Vec<F::Elem>)> = Vec::new();
            let top = exponents[m - 1] + t as u32;
            for e in exponents[0] + 1..=top {
                let target = module.dim(e) as i64 - self.syzygy_dim(e) as i64;
                if target < 0 {
                    return inconsistent(format!("generators do not span the syzygies of degree {e}"));
                }
                let kernel = || {
                    let mut images = Vec::with_capacity(module.dim(e));
                    for (deg, g) in &gens {
                        if *deg > e {
                            continue;
                        }
                        for w in monomial_basis(e - deg) {
                            images.push(triple.times(&field, g, *deg, &w));
                        }
                    }
                    let ncols = images.len();
                    linalg::kernel(&field, transpose(&images, triple.dim(e)), ncols)
                };
                let fresh = new_generators(&field, &module, e, &rels, target as usize, kernel)?;
                rels.extend(fresh.into_iter().map(|v| (e, v)));
            }
            if rels.len() != m - 2 {
                return inconsistent(format!("found {} relations, expected {}", rels.len(), m - 2));
            }
            twists = rels.iter().map(|(e, _)| e + d - 1).collect();
        }
        let mut epsilons = Vec::new();
        for (j, &c) in twists.iter().enumerate() {
            let eps = c as i64 + 1 - d as i64 - exponents[j + 2] as i64;
            if eps < 1 {
                return inconsistent(format!("epsilon_{} = {eps} < 1", j + 1));
            }
            epsilons.push(eps as u32);
        }
        let res = ResolutionData {
            degree: d,
            exponents,
            generators,
            twists,
            epsilons,
        };
        check_shape(&res)?;
        Ok(res)
    }

    /// Compares the Hilbert function with the one predicted by the resolution
    /// for `0 <= k <= 5d`.
    pub fn consistency_check(&mut self, res: &ResolutionData<F>) -> bool {
        let d = res.degree as i64;
        (0..=5 * d).all(|k| self.algebra.dim(k) as i64 == predicted_hilbert(res.degree, &res.exponents, &res.twists, k))
    }
}

/// `dim M(f)_k` as the alternating sum over the resolution.
pub fn predicted_hilbert(d: u32, exponents: &[u32], twists: &[u32], k: i64) -> i64 {
    let d = d as i64;
    binom2(k + 2) - 3 * binom2(k + 3 - d)
        + exponents.iter().map(|&e| binom2(k + 3 - d - e as i64)).sum::<i64>()
        - twists.iter().map(|&c| binom2(k - c as i64 + 2)).sum::<i64>()
}

fn check_shape<F: Field>(res: &ResolutionData<F>) -> Result<(), ResolutionError> {
    let fail = |msg: String| Err(ResolutionError::InternalInconsistency(msg));
    let d = res.degree as i64;
    let e: Vec<i64> = res.exponents.iter().map(|&x| x as i64).collect();
    let eps: Vec<i64> = res.epsilons.iter().map(|&x| x as i64).collect();
    let m = e.len();
    if eps.len() + 2 != m || res.twists.len() != eps.len() {
        return fail(format!("m = {m} with {} epsilons", eps.len()));
    }
    if e.windows(2).any(|w| w[0] > w[1]) || res.twists.windows(2).any(|w| w[0] > w[1]) {
        return fail("degrees not sorted".into());
    }
    if e[0] + e[1] != d - 1 + eps.iter().sum::<i64>() {
        return fail("d_1 + d_2 != d - 1 + sum of epsilons".into());
    }
    for j in 0..eps.len().saturating_sub(1) {
        if e[j + 2] + eps[j] > e[j + 3] + eps[j + 1] {
            return fail(format!("c_{} > c_{}", j + 1, j + 2));
        }
    }
    if m >= 3 && e[2] > d - 1 {
        return fail(format!("d_3 = {} > d - 1", e[2]));
    }
    if e[m - 1] > 2 * d - 4 {
        return fail(format!("d_m = {} > 2d - 4", e[m - 1]));
    }
    Ok(())
}

/// `dim M(f)_k`.
pub fn hilbert_dim<F: Field>(f: &HomogPoly<F>, k: i64) -> usize {
    JacobianAlgebra::new(f).dim(k)
}

pub fn tjurina_oracle<F: Field>(f: &HomogPoly<F>) -> Result<usize, ResolutionError> {
    Curve::new(f.clone()).tjurina_oracle()
}

pub fn is_reduced<F: Field>(f: &HomogPoly<F>) -> bool {
    Curve::new(f.clone()).is_reduced()
}

pub fn syzygy_basis<F: Field>(f: &HomogPoly<F>, k: u32) -> Vec<SyzygyVector<F>> {
    Curve::new(f.clone()).syzygy_basis(k)
}

pub fn minimal_resolution<F: Field>(f: &HomogPoly<F>) -> Result<ResolutionData<F>, ResolutionError> {
    Curve::new(f.clone()).minimal_resolution()
}

pub fn resolution_consistency_check<F: Field>(res: &ResolutionData<F>, f: &HomogPoly<F>) -> bool {
    Curve::new(f.clone()).consistency_check(res)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use crate::parser::parse_poly;

    fn q(s: &str) -> HomogPoly<Rationals> {
        parse_poly(s, &Rationals).unwrap()
    }

    #[test]
    fn small_hilbert_values() {
        let f = q("x^5+y^5+z^5");
        assert_eq!(hilbert_dim(&f, 1), 3);
        assert_eq!(hilbert_dim(&f, 12), 0);
        assert_eq!(hilbert_dim(&f, -1), 0);
        assert_eq!(hilbert_dim(&q("x^3y^2+y^3z^2+x^2z^3"), 20), 6);
    }

    #[test]
    fn tjurina_small() {
        assert_eq!(tjurina_oracle(&q("x^5+y^5+z^5")), Ok(0));
        assert_eq!(tjurina_oracle(&q("x^6+y^4z^2+z^4x^2")), Ok(8));
        assert_eq!(tjurina_oracle(&q("xyz")), Ok(3));
        assert_eq!(tjurina_oracle(&q("x^2+y^2")), Err(ResolutionError::DegreeTooSmall(2)));
    }

    #[test]
    fn reducedness() {
        assert!(is_reduced(&q("xyz")));
        assert!(!is_reduced(&q("(x+y)^2*z")));
        assert!(is_reduced(&q("x^3y^2+y^3z^2+x^2z^3")));
        assert!(matches!(
            tjurina_oracle(&q("(x+y)^2*z")),
            Err(ResolutionError::NotStabilized { cap: 15, .. })
        ));
        assert_eq!(minimal_resolution(&q("x^2(y+z)")), Err(ResolutionError::NotReduced));
    }

    #[test]
    fn syzygy_spaces() {
        let f = q("x^5+y^5+z^5");
        assert!(syzygy_basis(&f, 3).is_empty());
        let basis = syzygy_basis(&f, 4);
        assert_eq!(basis.len(), 3);
        // the Koszul relation (f_y, -f_x, 0) lies in the span
        let [fx, fy, _] = f.partials();
        let koszul = SyzygyVector::new(&f, [fy, fx.neg(), HomogPoly::zero(Rationals, 4)]).unwrap();
        let mut span = Span::new(Rationals, 45);
        for s in &basis {
            span.insert(&s.to_vector());
        }
        assert!(span.contains(&koszul.to_vector()));
        assert_eq!(syzygy_basis(&q("x^3y^2+y^3z^2+x^2z^3"), 4).len(), 6);
    }

    #[test]
    fn rejects_non_syzygies() {
        let f = q("xyz");
        let bad = [q("x"), q("y"), q("z")];
        assert!(matches!(SyzygyVector::new(&f, bad), Err(ResolutionError::NotASyzygy(_))));
        let good = [q("x"), q("-y"), HomogPoly::zero(Rationals, 1)];
        assert!(SyzygyVector::new(&f, good).is_ok());
    }

    #[test]
    fn triangle_is_free() {
        let f = q("xyz");
        let res = minimal_resolution(&f).unwrap();
        assert_eq!(res.exponents, vec![1, 1]);
        assert!(res.twists.is_empty() && res.epsilons.is_empty());
        assert_eq!(res.first_twists(), vec![2, 2, 2]);
        assert_eq!(res.second_twists(), vec![3, 3]);
        assert!(resolution_consistency_check(&res, &f));
    }

    #[test]
    fn smooth_quintic() {
        let f = q("x^5+y^5+z^5");
        let res = minimal_resolution(&f).unwrap();
        assert_eq!(res.exponents, vec![4, 4, 4]);
        assert_eq!(res.twists, vec![12]);
        assert_eq!(res.epsilons, vec![4]);
        assert_eq!(res.second_twists(), vec![8, 8, 8]);
        assert!(resolution_consistency_check(&res, &f));
        let mut bad = res.clone();
        bad.epsilons = vec![3];
        bad.twists = vec![11];
        assert!(!resolution_consistency_check(&bad, &f));
    }

    #[test]
    fn pencil_of_lines_has_a_constant_syzygy() {
        let f = q("x^3+y^3");
        let res = minimal_resolution(&f).unwrap();
        assert_eq!(res.exponents, vec![0, 2]);
        assert!(resolution_consistency_check(&res, &f));
    }

    #[test]
    fn prime_field_agrees() {
        let fp = PrimeField::new(1_000_003).unwrap();
        let s = "x^5+xyz^3+y^5";
        let a = minimal_resolution(&q(s)).unwrap();
        let b = minimal_resolution(&parse_poly(s, &fp).unwrap()).unwrap();
        assert_eq!(a.exponents, vec![4, 4, 4, 6]);
        assert_eq!(a.epsilons, vec![3, 1]);
        assert_eq!(a.twists, vec![11, 11]);
        assert_eq!((a.exponents, a.twists), (b.exponents, b.twists));
    }

    #[test]
    fn swapping_the_last_monomial_changes_everything() {
        // z^5 instead of y^5: the singular point is no longer a node
        let f = q("x^5+xyz^3+z^5");
        assert_eq!(tjurina_oracle(&f), Ok(11));
        let res = minimal_resolution(&f).unwrap();
        assert_eq!(res.exponents, vec![2, 3, 3]);
        assert_eq!(res.generators[0].to_string(), "(0, xy+5/3z^2, -1/3xz)");
    }

    #[test]
    fn generators_are_deterministic() {
        let f = q("x^3y^2+y^3z^2+x^2z^3");
        let a = minimal_resolution(&f).unwrap();
        let b = minimal_resolution(&f).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn predicted_hilbert_small() {
        // xyz: free with exponents (1, 1); h = 1, 3, 3, 3, ...
        let h: Vec<i64> = (0..6).map(|k| predicted_hilbert(3, &[1, 1], &[], k)).collect();
        assert_eq!(h, vec![1, 3, 3, 3, 3, 3]);
        assert_eq!(binom2(1), 0);
        assert_eq!(binom2(-4), 0);
        assert_eq!(binom2(4), 6);
    }
}

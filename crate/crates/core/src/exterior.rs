//! Multilinear algebra over a fixed oriented Euclidean 7-space.
//!
//! Vectors and alternating forms carry coordinates in the orthonormal frame
//! `e1..e7`; the metric is the standard one and the orientation is
//! `e^{1234567}`. Forms use the determinant convention without a `1/k!`
//! factor, so `e^{ij}(e_i, e_j) = 1`.
//!
//! Frame indices are `0..7` internally and rendered 1-based.

use std::array;
use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::scalar::Scalar;

/// Dimension of the underlying space.
pub const DIM: usize = 7;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExteriorError {
    #[error("wedge degree overflow: {lhs} + {rhs} > 7")]
    DegreeOverflow { lhs: usize, rhs: usize },
    #[error("evaluation arity mismatch: degree {degree} form applied to {args} vectors")]
    ArityMismatch { degree: usize, args: usize },
    #[error("interior product of a 0-form")]
    InteriorOfScalar,
}

/// Vector with coordinates in the frame `e1..e7`.
#[derive(Debug, Clone, PartialEq)]
pub struct Vector7<S> {
    coords: [S; 7],
}

impl<S: Scalar> Vector7<S> {
    pub fn new(coords: [S; 7]) -> Self {
        Vector7 { coords }
    }

    pub fn zero() -> Self {
        Vector7 {
            coords: array::from_fn(|_| S::zero()),
        }
    }

    /// `e_i` for `i` in `0..7`.
    pub fn basis(i: usize) -> Self {
        assert!(i < DIM);
        let mut v = Self::zero();
        v.coords[i] = S::one();
        v
    }

    pub fn from_ints(coords: [i64; 7]) -> Self {
        Vector7 {
            coords: coords.map(S::from_int),
        }
    }

    pub fn coord(&self, i: usize) -> &S {
        &self.coords[i]
    }

    pub fn coords(&self) -> &[S; 7] {
        &self.coords
    }

    pub fn set_coord(&mut self, i: usize, value: S) {
        self.coords[i] = value;
    }

    pub fn dot(&self, other: &Self) -> S {
        self.coords
            .iter()
            .zip(other.coords.iter())
            .fold(S::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
    }

    pub fn norm2(&self) -> S {
        self.dot(self)
    }

    pub fn add(&self, other: &Self) -> Self {
        Vector7 {
            coords: array::from_fn(|i| self.coords[i].clone() + other.coords[i].clone()),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        Vector7 {
            coords: array::from_fn(|i| self.coords[i].clone() - other.coords[i].clone()),
        }
    }

    pub fn neg(&self) -> Self {
        Vector7 {
            coords: array::from_fn(|i| -self.coords[i].clone()),
        }
    }

    pub fn scale(&self, s: &S) -> Self {
        Vector7 {
            coords: array::from_fn(|i| self.coords[i].clone() * s.clone()),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }
}

impl<S: Scalar> fmt::Display for Vector7<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (i, c) in self.coords.iter().enumerate() {
            if *c == S::zero() {
                continue;
            }
            if wrote {
                write!(f, " + ")?;
            }
            write!(f, "{} e{}", c, i + 1)?;
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Square matrix acting on [`Vector7`]; `apply(v)_i = sum_j m[i][j] v_j`.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix7<S> {
    entries: [[S; 7]; 7],
}

impl<S: Scalar> Matrix7<S> {
    pub fn zero() -> Self {
        Matrix7 {
            entries: array::from_fn(|_| array::from_fn(|_| S::zero())),
        }
    }

    pub fn from_fn(mut f: impl FnMut(usize, usize) -> S) -> Self {
        Matrix7 {
            entries: array::from_fn(|i| array::from_fn(|j| f(i, j))),
        }
    }

    /// Matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(columns: [Vector7<S>; 7]) -> Self {
        Matrix7::from_fn(|i, j| columns[j].coord(i).clone())
    }

    pub fn entry(&self, i: usize, j: usize) -> &S {
        &self.entries[i][j]
    }

    pub fn apply(&self, v: &Vector7<S>) -> Vector7<S> {
        Vector7::new(array::from_fn(|i| {
            (0..DIM).fold(S::zero(), |acc, j| {
                acc + self.entries[i][j].clone() * v.coord(j).clone()
            })
        }))
    }

    pub fn compose(&self, other: &Self) -> Self {
        Matrix7::from_fn(|i, j| {
            (0..DIM).fold(S::zero(), |acc, k| {
                acc + self.entries[i][k].clone() * other.entries[k][j].clone()
            })
        })
    }

    pub fn sub(&self, other: &Self) -> Self {
        Matrix7::from_fn(|i, j| self.entries[i][j].clone() - other.entries[i][j].clone())
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(|e| e.is_zero())
    }
}

/// Strictly increasing tuple of frame indices, the key of a form monomial.
pub type IndexTuple = Vec<usize>;

/// Alternating k-form with constant coefficients, `0 <= k <= 7`.
///
/// Only strictly increasing index tuples are stored; an absent tuple means
/// the coefficient is zero. Structurally zero coefficients are pruned so
/// equality on the exact backend is pure structure comparison.
#[derive(Debug, Clone, PartialEq)]
pub struct KForm<S> {
    degree: usize,
    coeffs: BTreeMap<IndexTuple, S>,
}

impl<S: Scalar> KForm<S> {
    pub fn zero(degree: usize) -> Self {
        assert!(degree <= DIM);
        KForm {
            degree,
            coeffs: BTreeMap::new(),
        }
    }

    /// Constant form of degree 0.
    pub fn constant(value: S) -> Self {
        let mut f = KForm::zero(0);
        f.set(&[], value);
        f
    }

    /// Basis monomial `e^{indices}` (0-based, strictly increasing).
    pub fn monomial(indices: &[usize], coeff: S) -> Self {
        let mut f = KForm::zero(indices.len());
        f.set(indices, coeff);
        f
    }

    /// Dual coframe element `e^i`.
    pub fn coframe(i: usize) -> Self {
        Self::monomial(&[i], S::one())
    }

    /// 1-form metrically dual to `v`.
    pub fn from_covector(v: &Vector7<S>) -> Self {
        let mut f = KForm::zero(1);
        for i in 0..DIM {
            f.set(&[i], v.coord(i).clone());
        }
        f
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn terms(&self) -> impl Iterator<Item = (&IndexTuple, &S)> {
        self.coeffs.iter()
    }

    pub fn coeff(&self, indices: &[usize]) -> S {
        self.coeffs.get(indices).cloned().unwrap_or_else(S::zero)
    }

    pub fn set(&mut self, indices: &[usize], value: S) {
        assert_eq!(indices.len(), self.degree, "tuple length != degree");
        assert!(
            indices.windows(2).all(|w| w[0] < w[1]),
            "indices must be strictly increasing"
        );
        assert!(indices.iter().all(|&i| i < DIM), "index out of range");
        if value == S::zero() {
            self.coeffs.remove(indices);
        } else {
            self.coeffs.insert(indices.to_vec(), value);
        }
    }

    pub fn add_to(&mut self, indices: &[usize], value: S) {
        let current = self.coeff(indices);
        self.set(indices, current + value);
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.degree, other.degree);
        let mut out = self.clone();
        for (idx, c) in other.terms() {
            out.add_to(idx, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-S::one()))
    }

    pub fn scale(&self, s: &S) -> Self {
        let mut out = KForm::zero(self.degree);
        for (idx, c) in self.terms() {
            out.set(idx, c.clone() * s.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(&-S::one())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.values().all(|c| c.is_zero())
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    /// Largest absolute coefficient, or zero for the zero form.
    pub fn max_abs_coeff(&self) -> S {
        let mut best = S::zero();
        for c in self.coeffs.values() {
            let a = c.abs();
            if a > best {
                best = a;
            }
        }
        best
    }

    /// Wedge product. Fails when the degrees sum past 7.
    pub fn wedge(&self, other: &Self) -> Result<Self, ExteriorError> {
        let deg = self.degree + other.degree;
        if deg > DIM {
            return Err(ExteriorError::DegreeOverflow {
                lhs: self.degree,
                rhs: other.degree,
            });
        }
        let mut out = KForm::zero(deg);
        for (a, ca) in self.terms() {
            for (b, cb) in other.terms() {
                if let Some((merged, sign)) = merge_tuples(a, b) {
                    let term = ca.clone() * cb.clone();
                    out.add_to(&merged, if sign { -term } else { term });
                }
            }
        }
        Ok(out)
    }

    /// Hodge star for the orientation `e^{1234567}`.
    pub fn hodge_star(&self) -> Self {
        let mut out = KForm::zero(DIM - self.degree);
        for (idx, c) in self.terms() {
            let complement: Vec<usize> = (0..DIM).filter(|i| !idx.contains(i)).collect();
            let sign = permutation_sign_of_concat(idx, &complement);
            out.add_to(&complement, if sign { -c.clone() } else { c.clone() });
        }
        out
    }

    /// Interior product `i_x`: `(i_x a)(y_1..y_{k-1}) = a(x, y_1..y_{k-1})`.
    pub fn interior_product(&self, x: &Vector7<S>) -> Result<Self, ExteriorError> {
        if self.degree == 0 {
            return Err(ExteriorError::InteriorOfScalar);
        }
        let mut out = KForm::zero(self.degree - 1);
        for (idx, c) in self.terms() {
            for (pos, &i) in idx.iter().enumerate() {
                let xi = x.coord(i).clone();
                if xi == S::zero() {
                    continue;
                }
                let rest: Vec<usize> = idx
                    .iter()
                    .enumerate()
                    .filter(|&(p, _)| p != pos)
                    .map(|(_, &q)| q)
                    .collect();
                let term = xi * c.clone();
                out.add_to(&rest, if pos % 2 == 1 { -term } else { term });
            }
        }
        Ok(out)
    }

    /// Antisymmetric multilinear evaluation (determinant convention).
    pub fn eval(&self, args: &[Vector7<S>]) -> Result<S, ExteriorError> {
        if args.len() != self.degree {
            return Err(ExteriorError::ArityMismatch {
                degree: self.degree,
                args: args.len(),
            });
        }
        let mut total = S::zero();
        for (idx, c) in self.terms() {
            // det of the k x k matrix m[r][c] = args[c][idx[r]]
            let k = idx.len();
            let mut m = Vec::with_capacity(k);
            for &row in idx {
                let mut r = Vec::with_capacity(k);
                for arg in args {
                    r.push(arg.coord(row).clone());
                }
                m.push(r);
            }
            total = total + c.clone() * det(&m);
        }
        Ok(total)
    }

    /// Evaluation on frame vectors given by index, a common special case.
    pub fn eval_frame(&self, frame_indices: &[usize]) -> S {
        let args: Vec<Vector7<S>> = frame_indices.iter().map(|&i| Vector7::basis(i)).collect();
        self.eval(&args).expect("arity checked by caller")
    }
}

impl<S: Scalar> fmt::Display for KForm<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (idx, c) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if idx.is_empty() {
                write!(f, "{}", c)?;
            } else {
                let label: String = idx.iter().map(|i| (i + 1).to_string()).collect();
                write!(f, "{} e^{{{}}}", c, label)?;
            }
        }
        Ok(())
    }
}

/// Merge two strictly increasing tuples; `None` on shared index, otherwise
/// the sorted union and whether the merge permutation is odd.
fn merge_tuples(a: &[usize], b: &[usize]) -> Option<(IndexTuple, bool)> {
    let mut merged = Vec::with_capacity(a.len() + b.len());
    let mut inversions = 0usize;
    let (mut i, mut j) = (0usize, 0usize);
    while i < a.len() && j < b.len() {
        if a[i] == b[j] {
            return None;
        }
        if a[i] < b[j] {
            merged.push(a[i]);
            i += 1;
        } else {
            // b[j] jumps over the remaining entries of a
            inversions += a.len() - i;
            merged.push(b[j]);
            j += 1;
        }
    }
    merged.extend_from_slice(&a[i..]);
    merged.extend_from_slice(&b[j..]);
    Some((merged, inversions % 2 == 1))
}

/// Whether the permutation `(a, b)` of `0..7` is odd. `a` and `b` must be
/// disjoint increasing tuples covering all indices.
fn permutation_sign_of_concat(a: &[usize], b: &[usize]) -> bool {
    let mut inversions = 0usize;
    for &x in a {
        inversions += b.iter().filter(|&&y| y < x).count();
    }
    inversions % 2 == 1
}

fn det<S: Scalar>(m: &[Vec<S>]) -> S {
    let n = m.len();
    match n {
        0 => S::one(),
        1 => m[0][0].clone(),
        2 => m[0][0].clone() * m[1][1].clone() - m[0][1].clone() * m[1][0].clone(),
        _ => {
            let mut total = S::zero();
            for col in 0..n {
                if m[0][col] == S::zero() {
                    continue;
                }
                let minor: Vec<Vec<S>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|&(c, _)| c != col)
                            .map(|(_, v)| v.clone())
                            .collect()
                    })
                    .collect();
                let term = m[0][col].clone() * det(&minor);
                total = if col % 2 == 0 {
                    total + term
                } else {
                    total - term
                };
            }
            total
        }
    }
}

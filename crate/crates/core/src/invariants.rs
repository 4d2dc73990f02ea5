//! The 18 quadratic invariants of `alpha`, the trace `c12`, and the full
//! norm `|alpha|^2`.
//!
//! Sum indices written `i, j, k` range over the six non-Reeb adapted
//! vectors `f1..f6`; explicit `xi` slots are the seventh basis vector. The
//! norm runs over the full basis so that the pure-class relations
//! `i5 = |alpha|^2` and `i16 = |alpha|^2` are satisfiable. Every sum is a
//! full contraction over the orthogonal complement of `xi`, which makes the
//! values independent of the choice of adapted basis.

use std::array;

use crate::acms::{Acms, XI};
use crate::exterior::DIM;
use crate::nablaphi::CovDerivTensor;
use crate::scalar::Scalar;

/// The invariant vector `i1..i18` with its companions.
#[derive(Debug, Clone, PartialEq)]
pub struct InvariantVector<S> {
    values: [S; 18],
    norm2: S,
    /// `c12(b_k) = sum_{i=1..6} alpha(f_i, f_i, b_k)` on the adapted basis.
    c12: [S; 7],
}

impl<S: Scalar> InvariantVector<S> {
    /// `i_m` for `m` in `1..=18`.
    pub fn get(&self, m: usize) -> &S {
        &self.values[m - 1]
    }

    pub fn values(&self) -> &[S; 18] {
        &self.values
    }

    pub fn norm2(&self) -> &S {
        &self.norm2
    }

    pub fn c12(&self) -> &[S; 7] {
        &self.c12
    }

    pub fn all_zero(&self) -> bool {
        self.values.iter().all(|v| v.is_zero()) && self.norm2.is_zero()
    }
}

/// `c12(b_k) = sum_{i=1..6} alpha(f_i, f_i, b_k)`.
pub fn contraction_c12<S: Scalar>(t: &CovDerivTensor<S>) -> [S; 7] {
    array::from_fn(|k| (0..XI).fold(S::zero(), |acc, i| acc + t.entry(i, i, k).clone()))
}

/// Sum of squares over all 343 full-basis triples.
pub fn alpha_norm2<S: Scalar>(t: &CovDerivTensor<S>) -> S {
    let mut acc = S::zero();
    for a in 0..DIM {
        for b in 0..DIM {
            for c in 0..DIM {
                acc = acc + t.entry(a, b, c).square();
            }
        }
    }
    acc
}

/// Compute all 18 invariants of `t` in its adapted basis.
pub fn quadratic_invariants<S: Scalar>(
    t: &CovDerivTensor<S>,
    acms: &Acms<S>,
) -> InvariantVector<S> {
    let basis = t.basis();
    // p[a][b]: adapted coordinates of phi(b_a). The Reeb row and column
    // vanish for a genuine structure (phi(xi) = 0, eta after phi = 0).
    let p: [[S; 7]; 7] = array::from_fn(|a| basis.coordinates(&acms.apply_phi(basis.vector(a))));

    // Clear denominators once; all sums below run on cleared values and
    // each invariant is rescaled by its quadratic weight at the end.
    let flat_a: Vec<S> = (0..DIM)
        .flat_map(|i| (0..DIM).flat_map(move |j| (0..DIM).map(move |k| (i, j, k))))
        .map(|(i, j, k)| t.entry(i, j, k).clone())
        .collect();
    let ca = S::denominator_clearer(&flat_a);
    let a: Box<[[[S; 7]; 7]; 7]> = Box::new(array::from_fn(|i| {
        array::from_fn(|j| array::from_fn(|k| t.entry(i, j, k).clone() * ca.clone()))
    }));
    let flat_p: Vec<S> = p.iter().flatten().cloned().collect();
    let dp = S::denominator_clearer(&flat_p);
    let pc: [[S; 7]; 7] = array::from_fn(|x| array::from_fn(|m| p[x][m].clone() * dp.clone()));

    // phi contracted into single slots of the cleared tensor.
    let contract = |slot: usize, src: &[[[S; 7]; 7]; 7]| -> Box<[[[S; 7]; 7]; 7]> {
        Box::new(array::from_fn(|i| {
            array::from_fn(|j| {
                array::from_fn(|k| {
                    let moved = [i, j, k][slot];
                    (0..DIM).fold(S::zero(), |acc, m| {
                        if pc[moved][m].is_zero() {
                            acc
                        } else {
                            let idx = {
                                let mut idx = [i, j, k];
                                idx[slot] = m;
                                idx
                            };
                            acc + pc[moved][m].clone() * src[idx[0]][idx[1]][idx[2]].clone()
                        }
                    })
                })
            })
        }))
    };
    let b1 = contract(0, &a); // scale ca * dp
    let b2 = contract(1, &a); // scale ca * dp
    let b12 = contract(0, &b2); // scale ca * dp^2
    let b3 = contract(2, &a); // scale ca * dp

    // Cleared trace c12 (scale ca) and twisted trace (scale ca * dp).
    let c12c: [S; 7] =
        array::from_fn(|k| (0..XI).fold(S::zero(), |acc, i| acc + a[i][i][k].clone()));
    let twisted: S = (0..XI).fold(S::zero(), |acc, i| acc + b2[i][i][XI].clone());

    let mut s: [S; 18] = array::from_fn(|_| S::zero());

    for i in 0..XI {
        for j in 0..XI {
            for k in 0..XI {
                let a_ijk = &a[i][j][k];
                if *a_ijk == S::zero() {
                    continue;
                }
                s[0] = s[0].clone() + a_ijk.square(); // i1
                s[1] = s[1].clone() + a_ijk.clone() * a[j][i][k].clone(); // i2
                s[2] = s[2].clone() + a_ijk.clone() * b12[i][j][k].clone(); // i3
            }
        }
    }
    for k in 0..XI {
        s[3] = s[3].clone() + c12c[k].square(); // i4
    }
    for j in 0..XI {
        for k in 0..XI {
            let a_xjk = &a[XI][j][k];
            if !(*a_xjk == S::zero()) {
                s[4] = s[4].clone() + a_xjk.square(); // i5
                s[6] = s[6].clone() + a_xjk.clone() * a[j][XI][k].clone(); // i7
                s[12] = s[12].clone() + a_xjk.clone() * b1[j][XI][k].clone(); // i13
            }
            s[5] = s[5].clone() + a[j][XI][k].square(); // i6
        }
    }
    for i in 0..XI {
        for j in 0..XI {
            let a_ijx = &a[i][j][XI];
            if *a_ijx == S::zero() {
                continue;
            }
            s[7] = s[7].clone() + a_ijx.clone() * a[j][i][XI].clone(); // i8
            s[8] = s[8].clone() + a_ijx.clone() * b12[i][j][XI].clone(); // i9
            s[10] = s[10].clone() + a_ijx.clone() * b2[j][i][XI].clone(); // i11
            s[11] = s[11].clone() + a_ijx.clone() * b12[j][i][XI].clone(); // i12
        }
    }
    s[9] = c12c[XI].square(); // i10
    s[13] = twisted.square(); // i14
    s[14] = twisted.clone() * c12c[XI].clone(); // i15
    for k in 0..XI {
        let a_xxk = &a[XI][XI][k];
        if *a_xxk == S::zero() {
            continue;
        }
        s[15] = s[15].clone() + a_xxk.square(); // i16
        s[16] = s[16].clone() + c12c[k].clone() * a_xxk.clone(); // i17
        let c12_phik: S = (0..XI).fold(S::zero(), |acc, i| acc + b3[i][i][k].clone());
        s[17] = s[17].clone() + c12_phik * a_xxk.clone(); // i18
    }

    // Rescale: every sum is quadratic in the cleared tensor, with extra dp
    // factors wherever phi was contracted in.
    let ca2 = ca.square();
    let dp2 = dp.square();
    let weight: [S; 18] = [
        ca2.clone(),               // i1
        ca2.clone(),               // i2
        ca2.clone() * dp2.clone(), // i3
        ca2.clone(),               // i4
        ca2.clone(),               // i5
        ca2.clone(),               // i6
        ca2.clone(),               // i7
        ca2.clone(),               // i8
        ca2.clone() * dp2.clone(), // i9
        ca2.clone(),               // i10
        ca2.clone() * dp.clone(),  // i11
        ca2.clone() * dp2.clone(), // i12
        ca2.clone() * dp.clone(),  // i13
        ca2.clone() * dp2.clone(), // i14
        ca2.clone() * dp.clone(),  // i15
        ca2.clone(),               // i16
        ca2.clone(),               // i17
        ca2.clone() * dp.clone(),  // i18
    ];
    let values: [S; 18] = array::from_fn(|m| s[m].clone() / weight[m].clone());

    let c12 = array::from_fn(|k| c12c[k].clone() / ca.clone());
    let norm2 = {
        let mut acc = S::zero();
        for i in 0..DIM {
            for j in 0..DIM {
                for k in 0..DIM {
                    if a[i][j][k] == S::zero() {
                        continue;
                    }
                    acc = acc + a[i][j][k].square();
                }
            }
        }
        acc / ca2
    };

    InvariantVector { values, norm2, c12 }
}

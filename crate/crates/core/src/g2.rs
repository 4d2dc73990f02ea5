//! G2 structures on the frame: a 3-form together with the 2-fold vector
//! cross product it induces through `phi(x,y,z) = g(x e y, z)`.
//!
//! A [`G2Structure`] accepts any alternating 3-form; whether the induced
//! product really is a cross product (norm identity, double-cross identity)
//! is decided by [`G2Structure::validate_cross_axioms`], not assumed. Both
//! orientation conventions of the model form are therefore loadable.

use std::array;

use thiserror::Error;

use crate::check::CheckReport;
use crate::exterior::{KForm, Vector7, DIM};
use crate::rng::SplitMix64;
use crate::scalar::Scalar;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum G2Error {
    #[error("a G2 structure needs a 3-form, got degree {0}")]
    WrongDegree(usize),
}

/// A 3-form with its derived cross-product table `e_i x e_j`.
#[derive(Debug, Clone, PartialEq)]
pub struct G2Structure<S> {
    phi: KForm<S>,
    cross_table: [[Vector7<S>; 7]; 7],
}

impl<S: Scalar> G2Structure<S> {
    pub fn new(phi: KForm<S>) -> Result<Self, G2Error> {
        if phi.degree() != 3 {
            return Err(G2Error::WrongDegree(phi.degree()));
        }
        let cross_table = array::from_fn(|i| {
            array::from_fn(|j| Vector7::new(array::from_fn(|k| phi.eval_frame(&[i, j, k]))))
        });
        Ok(G2Structure { phi, cross_table })
    }

    /// The model form `e^{123}+e^{145}+e^{167}+e^{246}-e^{257}-e^{347}-e^{356}`.
    pub fn standard() -> Self {
        let mut phi = KForm::zero(3);
        for (idx, sign) in [
            ([0, 1, 2], 1),
            ([0, 3, 4], 1),
            ([0, 5, 6], 1),
            ([1, 3, 5], 1),
            ([1, 4, 6], -1),
            ([2, 3, 6], -1),
            ([2, 4, 5], -1),
        ] {
            phi.set(&idx, S::from_int(sign));
        }
        G2Structure::new(phi).expect("degree 3 by construction")
    }

    pub fn phi(&self) -> &KForm<S> {
        &self.phi
    }

    /// `e_i x e_j` straight from the table.
    pub fn cross_frame(&self, i: usize, j: usize) -> &Vector7<S> {
        &self.cross_table[i][j]
    }

    /// Bilinear extension of the table: `g(cross(x,y), z) = phi(x,y,z)`.
    pub fn cross(&self, x: &Vector7<S>, y: &Vector7<S>) -> Vector7<S> {
        let mut out = Vector7::zero();
        for i in 0..DIM {
            let xi = x.coord(i);
            if xi.is_zero() {
                continue;
            }
            for j in 0..DIM {
                let yj = y.coord(j);
                if yj.is_zero() {
                    continue;
                }
                let w = self.cross_table[i][j].scale(&(xi.clone() * yj.clone()));
                out = out.add(&w);
            }
        }
        out
    }

    /// Check the 2-fold cross product axioms.
    ///
    /// Antisymmetry and the compatibility `g(e_i x e_j, e_k) = phi(e_i,e_j,e_k)`
    /// are exhaustive over the frame; the norm identity and the double-cross
    /// identity are checked on all frame pairs plus deterministic pseudorandom
    /// rational vectors (they are not multilinear, so frame pairs alone would
    /// not pin them down).
    pub fn validate_cross_axioms(&self) -> CheckReport {
        let mut report = CheckReport::new();

        report.record("cross-antisymmetry", self.antisymmetry_witness());
        report.record(
            "cross-compatibility-with-form",
            self.compatibility_witness(),
        );

        let mut rng = SplitMix64::new(0x5EED_0001);
        let mut vectors: Vec<(String, Vector7<S>, Vector7<S>)> = Vec::new();
        for i in 0..DIM {
            for j in 0..DIM {
                vectors.push((
                    format!("(e{}, e{})", i + 1, j + 1),
                    Vector7::basis(i),
                    Vector7::basis(j),
                ));
            }
        }
        for t in 0..20 {
            let x = random_vector(&mut rng);
            let y = random_vector(&mut rng);
            vectors.push((format!("random pair #{t}"), x, y));
        }

        let mut norm_witness = None;
        let mut ortho_witness = None;
        let mut double_witness = None;
        for (label, x, y) in &vectors {
            let xy = self.cross(x, y);
            if ortho_witness.is_none() {
                if !xy.dot(x).is_zero() {
                    ortho_witness = Some(format!("{label}: g(x e y, x) = {}", xy.dot(x)));
                } else if !xy.dot(y).is_zero() {
                    ortho_witness = Some(format!("{label}: g(x e y, y) = {}", xy.dot(y)));
                }
            }
            if norm_witness.is_none() {
                let lhs = xy.norm2();
                let rhs = x.norm2() * y.norm2() - x.dot(y).square();
                if !lhs.same_as(&rhs) {
                    norm_witness = Some(format!(
                        "{label}: |x e y|^2 = {lhs} but |x|^2|y|^2 - g(x,y)^2 = {rhs}"
                    ));
                }
            }
            if double_witness.is_none() {
                // x e (x e y) + g(x,x) y - g(x,y) x = 0
                let lhs = self
                    .cross(x, &xy)
                    .add(&y.scale(&x.norm2()))
                    .sub(&x.scale(&x.dot(y)));
                if !lhs.is_zero() {
                    double_witness = Some(format!("{label}: residual {lhs}"));
                }
            }
        }
        report.record("cross-orthogonality", ortho_witness);
        report.record("cross-norm-identity", norm_witness);
        report.record("cross-double-cross-identity", double_witness);
        report
    }

    fn antisymmetry_witness(&self) -> Option<String> {
        for i in 0..DIM {
            if !self.cross_table[i][i].is_zero() {
                return Some(format!("e{0} x e{0} = {1}", i + 1, self.cross_table[i][i]));
            }
            for j in 0..DIM {
                let sum = self.cross_table[i][j].add(&self.cross_table[j][i]);
                if !sum.is_zero() {
                    return Some(format!(
                        "e{} x e{} + e{} x e{} = {}",
                        i + 1,
                        j + 1,
                        j + 1,
                        i + 1,
                        sum
                    ));
                }
            }
        }
        None
    }

    fn compatibility_witness(&self) -> Option<String> {
        for i in 0..DIM {
            for j in 0..DIM {
                for k in 0..DIM {
                    let lhs = self.cross_table[i][j].coord(k).clone();
                    let rhs = self.phi.eval_frame(&[i, j, k]);
                    if !lhs.same_as(&rhs) {
                        return Some(format!(
                            "g(e{} x e{}, e{}) = {} but phi gives {}",
                            i + 1,
                            j + 1,
                            k + 1,
                            lhs,
                            rhs
                        ));
                    }
                }
            }
        }
        None
    }

    /// All 21 unordered frame pair products, for reporting.
    pub fn cross_table_entries(&self) -> Vec<(usize, usize, Vector7<S>)> {
        let mut out = Vec::with_capacity(21);
        for i in 0..DIM {
            for j in (i + 1)..DIM {
                out.push((i, j, self.cross_table[i][j].clone()));
            }
        }
        out
    }

    /// Rebuild the 3-form from the cross table; equality with `phi` pins the
    /// table as the unique bilinear product compatible with the form.
    pub fn reconstruct_phi(&self) -> KForm<S> {
        let mut phi = KForm::zero(3);
        for i in 0..DIM {
            for j in (i + 1)..DIM {
                for k in (j + 1)..DIM {
                    phi.set(&[i, j, k], self.cross_table[i][j].coord(k).clone());
                }
            }
        }
        phi
    }
}

fn random_vector<S: Scalar>(rng: &mut SplitMix64) -> Vector7<S> {
    Vector7::new(array::from_fn(|_| rng.small_ratio(9)))
}

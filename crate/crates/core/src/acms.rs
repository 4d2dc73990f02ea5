//! Almost contact metric structures induced by a G2 structure and a unit
//! field: `phi(x) = xi x x`, `eta(x) = g(xi, x)`, `Phi(x,y) = g(x, phi(y))`.
//!
//! Also builds deterministic orthonormal bases adapted to `xi` and exact
//! rational unit vectors for fuzzing.

use std::array;

use thiserror::Error;

use crate::check::CheckReport;
use crate::exterior::{KForm, Matrix7, Vector7, DIM};
use crate::g2::G2Structure;
use crate::scalar::Scalar;

/// Index of `xi` inside an adapted basis.
pub const XI: usize = 6;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum AcmsError {
    #[error("xi is not a unit field: g(xi, xi) = {norm2}")]
    NonUnitXi { norm2: String },
}

/// The induced structure `(phi, xi, eta, g)` with its fundamental 2-form.
#[derive(Debug, Clone, PartialEq)]
pub struct Acms<S> {
    xi: Vector7<S>,
    /// Covector coordinates of `eta`; equal to the coordinates of `xi`
    /// because the frame is orthonormal.
    eta: Vector7<S>,
    phi_endo: Matrix7<S>,
    big_phi: KForm<S>,
}

impl<S: Scalar> Acms<S> {
    /// Induce the structure from a G2 form and a unit `xi`.
    pub fn induce(g2: &G2Structure<S>, xi: Vector7<S>) -> Result<Self, AcmsError> {
        let norm2 = xi.norm2();
        if !(norm2.clone() - S::one()).is_zero() {
            return Err(AcmsError::NonUnitXi {
                norm2: norm2.to_string(),
            });
        }
        let columns: [Vector7<S>; 7] = array::from_fn(|j| g2.cross(&xi, &Vector7::basis(j)));
        let phi_endo = Matrix7::from_columns(columns);
        Ok(Self::from_parts(xi, phi_endo))
    }

    /// Assemble from raw parts without validation; `eta` is taken metric-dual
    /// to `xi` and the fundamental form is read off the endomorphism. Meant
    /// for tests of [`Acms::validate`] and for non-induced tensors.
    pub fn from_parts(xi: Vector7<S>, phi_endo: Matrix7<S>) -> Self {
        let eta = xi.clone();
        let mut big_phi = KForm::zero(2);
        for i in 0..DIM {
            for j in (i + 1)..DIM {
                big_phi.set(&[i, j], phi_endo.entry(i, j).clone());
            }
        }
        Acms {
            xi,
            eta,
            phi_endo,
            big_phi,
        }
    }

    pub fn xi(&self) -> &Vector7<S> {
        &self.xi
    }

    pub fn eta(&self, x: &Vector7<S>) -> S {
        self.eta.dot(x)
    }

    pub fn eta_form(&self) -> KForm<S> {
        KForm::from_covector(&self.eta)
    }

    pub fn phi_endo(&self) -> &Matrix7<S> {
        &self.phi_endo
    }

    pub fn apply_phi(&self, x: &Vector7<S>) -> Vector7<S> {
        self.phi_endo.apply(x)
    }

    /// The fundamental 2-form `Phi`.
    pub fn fundamental_form(&self) -> &KForm<S> {
        &self.big_phi
    }

    /// `Phi(x, y) = g(x, phi(y))` for arbitrary vectors.
    pub fn fundamental(&self, x: &Vector7<S>, y: &Vector7<S>) -> S {
        x.dot(&self.apply_phi(y))
    }

    /// Check every structure axiom on the frame, with witnesses.
    pub fn validate(&self) -> CheckReport {
        let mut report = CheckReport::new();

        let norm2 = self.xi.norm2();
        report.record(
            "unit-xi",
            (!(norm2.clone() - S::one()).is_zero()).then(|| format!("g(xi, xi) = {norm2}")),
        );

        let eta_xi = self.eta(&self.xi);
        report.record(
            "eta-of-xi",
            (!(eta_xi.clone() - S::one()).is_zero()).then(|| format!("eta(xi) = {eta_xi}")),
        );

        let phi_xi = self.apply_phi(&self.xi);
        report.record(
            "phi-of-xi",
            (!phi_xi.is_zero()).then(|| format!("phi(xi) = {phi_xi}")),
        );

        let mut eta_phi = None;
        for j in 0..DIM {
            let val = self.eta(&self.apply_phi(&Vector7::basis(j)));
            if !val.is_zero() {
                eta_phi = Some(format!("eta(phi(e{})) = {}", j + 1, val));
                break;
            }
        }
        report.record("eta-after-phi", eta_phi);

        // phi^2 = -I + eta (x) xi
        let mut phi_sq = None;
        'sq: for j in 0..DIM {
            let ej = Vector7::basis(j);
            let lhs = self.apply_phi(&self.apply_phi(&ej));
            let rhs = self.xi.scale(&self.eta(&ej)).sub(&ej);
            let diff = lhs.sub(&rhs);
            for i in 0..DIM {
                if !diff.coord(i).is_zero() {
                    phi_sq = Some(format!(
                        "phi^2(e{}) = {} but -e{} + eta(e{}) xi = {}",
                        j + 1,
                        lhs,
                        j + 1,
                        j + 1,
                        rhs
                    ));
                    break 'sq;
                }
            }
        }
        report.record("phi-squared", phi_sq);

        let mut compat = None;
        'compat: for i in 0..DIM {
            for j in 0..DIM {
                let ei = Vector7::basis(i);
                let ej = Vector7::basis(j);
                let lhs = self.apply_phi(&ei).dot(&self.apply_phi(&ej));
                let rhs = ei.dot(&ej) - self.eta(&ei) * self.eta(&ej);
                if !lhs.same_as(&rhs) {
                    compat = Some(format!(
                        "g(phi e{i1}, phi e{j1}) = {lhs} but g(e{i1}, e{j1}) - eta(e{i1}) eta(e{j1}) = {rhs}",
                        i1 = i + 1,
                        j1 = j + 1,
                    ));
                    break 'compat;
                }
            }
        }
        report.record("metric-compatibility", compat);

        let mut fund = None;
        'fund: for i in 0..DIM {
            for j in 0..DIM {
                let lhs = self.big_phi.eval_frame(&[i, j]);
                let rhs = self.phi_endo.entry(i, j).clone();
                if !lhs.same_as(&rhs) {
                    fund = Some(format!(
                        "Phi(e{}, e{}) = {} but g(e{}, phi(e{})) = {}",
                        i + 1,
                        j + 1,
                        lhs,
                        i + 1,
                        j + 1,
                        rhs
                    ));
                    break 'fund;
                }
            }
        }
        report.record("fundamental-form", fund);

        report
    }
}

/// Orthonormal basis `(f1..f6, xi)` with `xi` in the last slot.
#[derive(Debug, Clone, PartialEq)]
pub struct AdaptedBasis<S> {
    vectors: [Vector7<S>; 7],
}

impl<S: Scalar> AdaptedBasis<S> {
    /// Deterministic orthonormal completion of a unit `xi`.
    ///
    /// The frame vector with the largest `|g(e_i, xi)|` (lowest index on
    /// ties) is dropped; the remaining six are mapped into the orthogonal
    /// complement of `xi`, in index order, by the reflection that exchanges
    /// the dropped direction with `xi`. The reflection keeps rational input
    /// rational, which plain normalized projections would not.
    pub fn adapted_to(xi: &Vector7<S>) -> Self {
        let mut drop = 0usize;
        let mut best = xi.coord(0).abs();
        for i in 1..DIM {
            let a = xi.coord(i).abs();
            if a > best {
                best = a;
                drop = i;
            }
        }
        let sign = if *xi.coord(drop) < S::zero() {
            -S::one()
        } else {
            S::one()
        };
        let target = Vector7::basis(drop).scale(&sign);
        let w = xi.sub(&target);
        let ww = w.norm2();

        let mut vectors: Vec<Vector7<S>> = Vec::with_capacity(7);
        for j in 0..DIM {
            if j == drop {
                continue;
            }
            let ej = Vector7::basis(j);
            let f = if ww.is_zero() {
                ej
            } else {
                // reflection across the hyperplane orthogonal to w
                let coeff = S::from_int(2) * ej.dot(&w) / ww.clone();
                ej.sub(&w.scale(&coeff))
            };
            vectors.push(f);
        }
        vectors.push(xi.clone());
        let vectors: [Vector7<S>; 7] = vectors.try_into().expect("seven vectors");
        AdaptedBasis { vectors }
    }

    pub fn vector(&self, i: usize) -> &Vector7<S> {
        &self.vectors[i]
    }

    pub fn xi(&self) -> &Vector7<S> {
        &self.vectors[XI]
    }

    pub fn vectors(&self) -> &[Vector7<S>; 7] {
        &self.vectors
    }

    /// Coordinates of `x` in this basis.
    pub fn coordinates(&self, x: &Vector7<S>) -> [S; 7] {
        array::from_fn(|i| self.vectors[i].dot(x))
    }

    /// The same basis with `(f1, f2)` rotated by the rational rotation
    /// `(3/5, 4/5)`; used for basis-independence checks.
    pub fn rotated_first_pair(&self) -> Self {
        let c = S::ratio(3, 5);
        let s = S::ratio(4, 5);
        let f1 = self.vectors[0].scale(&c).add(&self.vectors[1].scale(&s));
        let f2 = self.vectors[1].scale(&c).sub(&self.vectors[0].scale(&s));
        let mut vectors = self.vectors.clone();
        vectors[0] = f1;
        vectors[1] = f2;
        AdaptedBasis { vectors }
    }

    /// First orthonormality defect, if any.
    pub fn orthonormality_witness(&self) -> Option<String> {
        for i in 0..DIM {
            for j in i..DIM {
                let dot = self.vectors[i].dot(&self.vectors[j]);
                let expected = if i == j { S::one() } else { S::zero() };
                if !dot.same_as(&expected) {
                    return Some(format!("g(b{}, b{}) = {}", i + 1, j + 1, dot));
                }
            }
        }
        None
    }
}

/// Exact unit vector from six rational parameters:
/// `xi = (2u, 1 - |u|^2) / (1 + |u|^2)`, the stereographic chart of the
/// sphere from `-e7`; hits every rational point of the sphere except `-e7`.
pub fn rational_unit_vector<S: Scalar>(u: &[S; 6]) -> Vector7<S> {
    let norm2 = u
        .iter()
        .fold(S::zero(), |acc, x| acc + x.clone() * x.clone());
    let denom = S::one() + norm2.clone();
    let two = S::from_int(2);
    Vector7::new(array::from_fn(|i| {
        if i < 6 {
            two.clone() * u[i].clone() / denom.clone()
        } else {
            (S::one() - norm2.clone()) / denom.clone()
        }
    }))
}

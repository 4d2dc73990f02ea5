//! The covariant derivative tensor `alpha(x,y,z) = (nabla_x Phi)(y,z)`,
//! computed as `g(y, nabla_x(xi x z)) + g(nabla_x z, xi x y)`, together with
//! the codifferentials, the auxiliary field `v`, and the Reeb-direction
//! diagnostics.
//!
//! `alpha` is stored in an adapted basis `(f1..f6, xi)` so the invariant
//! sums of the classification index it directly; the frame-component tensor
//! is the single conversion point and is exposed for cross-checks.

use std::array;

use crate::acms::{Acms, AdaptedBasis, XI};
use crate::check::CheckReport;
use crate::exterior::{Matrix7, Vector7, DIM};
use crate::frame::Connection;
use crate::g2::G2Structure;
use crate::scalar::Scalar;

pub type Tensor3<S> = Box<[[[S; 7]; 7]; 7]>;

/// Frame components `T[p][q][r] = (nabla_{e_p} Phi)(e_q, e_r)`.
pub fn nabla_phi_frame_tensor<S: Scalar>(
    conn: &Connection<S>,
    g2: &G2Structure<S>,
    acms: &Acms<S>,
) -> Tensor3<S> {
    let xi = acms.xi();
    // xi x e_r and nabla_{e_p}(xi x e_r) are reused across the q loop.
    let cross_xi: [Vector7<S>; 7] = array::from_fn(|r| g2.cross(xi, &Vector7::basis(r)));
    Box::new(array::from_fn(|p| {
        let nabla_cross: [Vector7<S>; 7] =
            array::from_fn(|r| conn.nabla_basis_dir(p, &cross_xi[r]));
        let nabla_er: [Vector7<S>; 7] = array::from_fn(|r| conn.nabla_frame(p, r));
        array::from_fn(|q| {
            array::from_fn(|r| nabla_cross[r].coord(q).clone() + nabla_er[r].dot(&cross_xi[q]))
        })
    }))
}

/// `alpha` in an adapted basis, with the basis it is expressed in.
#[derive(Debug, Clone, PartialEq)]
pub struct CovDerivTensor<S> {
    alpha: Tensor3<S>,
    basis: AdaptedBasis<S>,
}

impl<S: Scalar> CovDerivTensor<S> {
    /// Express the frame tensor in `basis` (three single-slot contractions).
    pub fn compute(
        conn: &Connection<S>,
        g2: &G2Structure<S>,
        acms: &Acms<S>,
        basis: &AdaptedBasis<S>,
    ) -> Self {
        let frame = nabla_phi_frame_tensor(conn, g2, acms);
        Self::from_frame_tensor(&frame, basis)
    }

    pub fn from_frame_tensor(frame: &Tensor3<S>, basis: &AdaptedBasis<S>) -> Self {
        // Clear denominators once: the three contraction passes then run on
        // denominator-free values, and each entry is rescaled at the end.
        let all: Vec<S> = frame.iter().flatten().flatten().cloned().collect();
        let big = S::denominator_clearer(&all);
        let cleared: Tensor3<S> = Box::new(array::from_fn(|p| {
            array::from_fn(|q| array::from_fn(|r| frame[p][q][r].clone() * big.clone()))
        }));
        let scaled_basis: [(Vector7<S>, S); 7] = array::from_fn(|i| {
            let v = basis.vector(i);
            let d = S::denominator_clearer(v.coords());
            (v.scale(&d), d)
        });
        let b = |i: usize| &scaled_basis[i].0;

        let mut t1: Tensor3<S> = Box::new(array::from_fn(|_| {
            array::from_fn(|_| array::from_fn(|_| S::zero()))
        }));
        for i in 0..DIM {
            for q in 0..DIM {
                for r in 0..DIM {
                    let mut acc = S::zero();
                    for p in 0..DIM {
                        let c = b(i).coord(p);
                        if c.is_zero() {
                            continue;
                        }
                        acc = acc + c.clone() * cleared[p][q][r].clone();
                    }
                    t1[i][q][r] = acc;
                }
            }
        }
        let mut t2: Tensor3<S> = Box::new(array::from_fn(|_| {
            array::from_fn(|_| array::from_fn(|_| S::zero()))
        }));
        for i in 0..DIM {
            for j in 0..DIM {
                for r in 0..DIM {
                    let mut acc = S::zero();
                    for q in 0..DIM {
                        let c = b(j).coord(q);
                        if c.is_zero() {
                            continue;
                        }
                        acc = acc + c.clone() * t1[i][q][r].clone();
                    }
                    t2[i][j][r] = acc;
                }
            }
        }
        let alpha: Tensor3<S> = Box::new(array::from_fn(|i| {
            array::from_fn(|j| {
                array::from_fn(|k| {
                    let mut acc = S::zero();
                    for r in 0..DIM {
                        let c = b(k).coord(r);
                        if c.is_zero() {
                            continue;
                        }
                        acc = acc + c.clone() * t2[i][j][r].clone();
                    }
                    let rescale = scaled_basis[i].1.clone()
                        * scaled_basis[j].1.clone()
                        * scaled_basis[k].1.clone()
                        * big.clone();
                    acc / rescale
                })
            })
        }));
        CovDerivTensor {
            alpha,
            basis: basis.clone(),
        }
    }

    /// Accept raw adapted-basis components; no provenance is assumed.
    pub fn from_components(basis: AdaptedBasis<S>, alpha: Tensor3<S>) -> Self {
        CovDerivTensor { alpha, basis }
    }

    /// The same tensor expressed in the basis with `(f1, f2)` rotated by
    /// `(3/5, 4/5)`; only components touching the first two adapted indices
    /// change, so this is much cheaper than a fresh basis change.
    pub fn rotate_first_pair(&self) -> Self {
        let rotated = self.basis.rotated_first_pair();
        let c = S::ratio(3, 5);
        let s = S::ratio(4, 5);
        let row = |i: usize| -> Vec<(usize, S)> {
            match i {
                0 => vec![(0, c.clone()), (1, s.clone())],
                1 => vec![(0, -s.clone()), (1, c.clone())],
                other => vec![(other, S::one())],
            }
        };
        let alpha = Box::new(std::array::from_fn(|i| {
            std::array::from_fn(|j| {
                std::array::from_fn(|k| {
                    let mut acc = S::zero();
                    for (a, ca) in row(i) {
                        for (b, cb) in row(j) {
                            for (d, cd) in row(k) {
                                acc = acc
                                    + ca.clone()
                                        * cb.clone()
                                        * cd.clone()
                                        * self.alpha[a][b][d].clone();
                            }
                        }
                    }
                    acc
                })
            })
        }));
        CovDerivTensor {
            alpha,
            basis: rotated,
        }
    }

    pub fn basis(&self) -> &AdaptedBasis<S> {
        &self.basis
    }

    /// `alpha(b_i, b_j, b_k)` for adapted-basis indices.
    pub fn entry(&self, i: usize, j: usize, k: usize) -> &S {
        &self.alpha[i][j][k]
    }

    /// Trilinear extension to arbitrary vectors.
    pub fn value_on(&self, x: &Vector7<S>, y: &Vector7<S>, z: &Vector7<S>) -> S {
        let cx = self.basis.coordinates(x);
        let cy = self.basis.coordinates(y);
        let cz = self.basis.coordinates(z);
        let mut acc = S::zero();
        for i in 0..DIM {
            if cx[i].is_zero() {
                continue;
            }
            for j in 0..DIM {
                if cy[j].is_zero() {
                    continue;
                }
                for k in 0..DIM {
                    if cz[k].is_zero() {
                        continue;
                    }
                    acc = acc
                        + cx[i].clone()
                            * cy[j].clone()
                            * cz[k].clone()
                            * self.alpha[i][j][k].clone();
                }
            }
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.alpha.iter().flatten().flatten().all(|v| v.is_zero())
    }

    /// Antisymmetry in the last two slots and the defining symmetry of the
    /// space the covariant derivative of a fundamental 2-form lives in:
    /// `alpha(x,y,z) = -alpha(x, phi y, phi z) + eta(y) alpha(x, xi, z)
    ///  + eta(z) alpha(x, y, xi)`, both exhaustive over the basis.
    pub fn symmetry_report(&self, acms: &Acms<S>) -> CheckReport {
        let mut report = CheckReport::new();

        let mut anti = None;
        'anti: for i in 0..DIM {
            for j in 0..DIM {
                for k in 0..DIM {
                    let sum = self.alpha[i][j][k].clone() + self.alpha[i][k][j].clone();
                    if !sum.is_zero() {
                        anti = Some(format!(
                            "alpha(b{},b{},b{}) + alpha(b{},b{},b{}) = {}",
                            i + 1,
                            j + 1,
                            k + 1,
                            i + 1,
                            k + 1,
                            j + 1,
                            sum
                        ));
                        break 'anti;
                    }
                }
            }
        }
        report.record("alpha-antisymmetric-last-slots", anti);

        // p[a] = adapted coordinates of phi(b_a); the two phi slots are then
        // single-index contractions over cleared values, rescaled once.
        let p: [[S; 7]; 7] = array::from_fn(|a| {
            self.basis
                .coordinates(&acms.apply_phi(self.basis.vector(a)))
        });
        let eta: [S; 7] = array::from_fn(|a| acms.eta(self.basis.vector(a)));
        let flat_p: Vec<S> = p.iter().flatten().cloned().collect();
        let dp = S::denominator_clearer(&flat_p);
        let pc: [[S; 7]; 7] = array::from_fn(|a| array::from_fn(|m| p[a][m].clone() * dp.clone()));
        let flat_a: Vec<S> = self.alpha.iter().flatten().flatten().cloned().collect();
        let da = S::denominator_clearer(&flat_a);
        let ac: Tensor3<S> = Box::new(array::from_fn(|i| {
            array::from_fn(|j| array::from_fn(|k| self.alpha[i][j][k].clone() * da.clone()))
        }));

        // slot 1: alpha(b_i, phi b_j, b_k), cleared scale da * dp
        let mut t1: Tensor3<S> = Box::new(array::from_fn(|_| {
            array::from_fn(|_| array::from_fn(|_| S::zero()))
        }));
        for i in 0..DIM {
            for j in 0..DIM {
                for k in 0..DIM {
                    let mut acc = S::zero();
                    for m in 0..DIM {
                        if pc[j][m].is_zero() {
                            continue;
                        }
                        acc = acc + pc[j][m].clone() * ac[i][m][k].clone();
                    }
                    t1[i][j][k] = acc;
                }
            }
        }
        // slot 2 on top: alpha(b_i, phi b_j, phi b_k), scale da * dp^2
        let rescale = da * dp.clone() * dp;
        let mut sym = None;
        'sym: for i in 0..DIM {
            for j in 0..DIM {
                for k in 0..DIM {
                    let mut phi_phi = S::zero();
                    for m in 0..DIM {
                        if pc[k][m].is_zero() {
                            continue;
                        }
                        phi_phi = phi_phi + pc[k][m].clone() * t1[i][j][m].clone();
                    }
                    let lhs = self.alpha[i][j][k].clone();
                    let rhs = -(phi_phi / rescale.clone())
                        + eta[j].clone() * self.alpha[i][XI][k].clone()
                        + eta[k].clone() * self.alpha[i][j][XI].clone();
                    if !lhs.same_as(&rhs) {
                        sym = Some(format!(
                            "triple (b{},b{},b{}): alpha = {} but the phi/eta expansion gives {}",
                            i + 1,
                            j + 1,
                            k + 1,
                            lhs,
                            rhs
                        ));
                        break 'sym;
                    }
                }
            }
        }
        report.record("c-space-symmetry", sym);
        report
    }

    /// `delta Phi(x) = -sum_a alpha(b_a, b_a, x)`, as a frame covector.
    pub fn codifferential(&self) -> Vector7<S> {
        Vector7::new(array::from_fn(|j| {
            let ej = Vector7::basis(j);
            let cz = self.basis.coordinates(&ej);
            let mut acc = S::zero();
            for a in 0..DIM {
                for k in 0..DIM {
                    if cz[k].is_zero() {
                        continue;
                    }
                    acc = acc + cz[k].clone() * self.alpha[a][a][k].clone();
                }
            }
            -acc
        }))
    }
}

/// Reeb-direction diagnostics of the pair `(connection, xi)`.
#[derive(Debug, Clone, PartialEq)]
pub struct XiDiagnostics<S> {
    /// Row `i` holds the frame coordinates of `nabla_{e_i} xi`.
    pub nabla_xi: [Vector7<S>; 7],
    pub nabla_xi_xi: Vector7<S>,
    pub div_xi: S,
    /// `v = sum_{j=1..6} f_j x (nabla_{f_j} xi)` over the adapted basis.
    pub v: Vector7<S>,
    pub g_xi_v: S,
    /// `-sum_a (nabla_{b_a} eta)(b_a)`, computed through form derivatives,
    /// independently of `div_xi`.
    pub delta_eta: S,
    pub is_killing: bool,
}

impl<S: Scalar> XiDiagnostics<S> {
    pub fn compute(
        conn: &Connection<S>,
        g2: &G2Structure<S>,
        acms: &Acms<S>,
        basis: &AdaptedBasis<S>,
    ) -> Self {
        let xi = acms.xi();
        let nabla_xi: [Vector7<S>; 7] = array::from_fn(|i| conn.nabla_basis_dir(i, xi));
        let nabla_xi_xi = conn.nabla(xi, xi);
        let div_xi = crate::frame::divergence(conn, xi);

        let mut v = Vector7::zero();
        for j in 0..XI {
            let fj = basis.vector(j);
            v = v.add(&g2.cross(fj, &conn.nabla(fj, xi)));
        }
        let g_xi_v = xi.dot(&v);

        // delta eta through nabla of the 1-form eta, over the full basis.
        // The seven frame derivatives are computed once and recombined per
        // basis vector.
        let eta = acms.eta_form();
        let frame_d_eta: [crate::exterior::KForm<S>; 7] =
            array::from_fn(|i| crate::frame::nabla_form(conn, &eta, i));
        let mut delta_eta = S::zero();
        for a in 0..DIM {
            let ba = basis.vector(a);
            for i in 0..DIM {
                if ba.coord(i).is_zero() {
                    continue;
                }
                let value = frame_d_eta[i]
                    .eval(std::slice::from_ref(ba))
                    .expect("1-form, 1 arg");
                delta_eta = delta_eta - ba.coord(i).clone() * value;
            }
        }

        let mut is_killing = true;
        'killing: for i in 0..DIM {
            for j in 0..DIM {
                let sym = nabla_xi[i].coord(j).clone() + nabla_xi[j].coord(i).clone();
                if !sym.is_zero() {
                    is_killing = false;
                    break 'killing;
                }
            }
        }

        XiDiagnostics {
            nabla_xi,
            nabla_xi_xi,
            div_xi,
            v,
            g_xi_v,
            delta_eta,
            is_killing,
        }
    }

    pub fn nabla_xi_vanishes_on_complement(&self, basis: &AdaptedBasis<S>) -> bool {
        (0..XI).all(|j| {
            let mut d = Vector7::zero();
            let fj = basis.vector(j);
            for i in 0..DIM {
                if fj.coord(i).is_zero() {
                    continue;
                }
                d = d.add(&self.nabla_xi[i].scale(fj.coord(i)));
            }
            d.is_zero()
        })
    }

    pub fn nabla_xi_is_zero(&self) -> bool {
        self.nabla_xi.iter().all(|row| row.is_zero())
    }
}

/// `nabla_xi phi` at the endomorphism level and `nabla_xi Phi` at the form
/// level. The endomorphism is `x -> nabla_xi(phi x) - phi(nabla_xi x)`; the
/// form values come independently from the frame tensor of `nabla Phi`.
/// Metric nondegeneracy makes the two vanish together, which callers assert.
pub fn nabla_xi_phi<S: Scalar>(
    conn: &Connection<S>,
    g2: &G2Structure<S>,
    acms: &Acms<S>,
) -> (Matrix7<S>, Matrix7<S>) {
    let xi = acms.xi();
    let endo_cols: [Vector7<S>; 7] = array::from_fn(|j| {
        let ej = Vector7::basis(j);
        conn.nabla(xi, &acms.apply_phi(&ej))
            .sub(&acms.apply_phi(&conn.nabla(xi, &ej)))
    });
    let endo = Matrix7::from_columns(endo_cols);

    let frame = nabla_phi_frame_tensor(conn, g2, acms);
    let two_form = Matrix7::from_fn(|i, j| {
        (0..DIM).fold(S::zero(), |acc, p| {
            if xi.coord(p).is_zero() {
                acc
            } else {
                acc + xi.coord(p).clone() * frame[p][i][j].clone()
            }
        })
    });
    (endo, two_form)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::acms::rational_unit_vector;
    use crate::frame::{nabla_form_dir, StructureConstants};
    use crate::rng::SplitMix64;
    use crate::scalar::Exact;
    use crate::testutil::{q, qr, sasakian3_constants, sasakian3_phi};

    type V = Vector7<Exact>;

    struct Setup {
        conn: Connection<Exact>,
        g2: G2Structure<Exact>,
    }

    fn sasakian3() -> Setup {
        let c = sasakian3_constants();
        Setup {
            conn: Connection::levi_civita(&c),
            g2: G2Structure::new(sasakian3_phi()).unwrap(),
        }
    }

    fn tensor_for(s: &Setup, xi: V) -> (Acms<Exact>, AdaptedBasis<Exact>, CovDerivTensor<Exact>) {
        let acms = Acms::induce(&s.g2, xi).unwrap();
        let basis = AdaptedBasis::adapted_to(acms.xi());
        let t = CovDerivTensor::compute(&s.conn, &s.g2, &acms, &basis);
        (acms, basis, t)
    }

    #[test]
    fn spot_value_from_worked_example() {
        let s = sasakian3();
        let frame = {
            let acms = Acms::induce(&s.g2, V::basis(0)).unwrap();
            nabla_phi_frame_tensor(&s.conn, &s.g2, &acms)
        };
        // (nabla_{e2} Phi)(e1, e2) = 1
        assert_eq!(frame[1][0][1], q(1));
    }

    #[test]
    fn abelian_tensor_is_zero() {
        let c = StructureConstants::zero();
        let conn = Connection::levi_civita(&c);
        let g2 = G2Structure::standard();
        let acms = Acms::induce(&g2, V::basis(6)).unwrap();
        let basis = AdaptedBasis::adapted_to(acms.xi());
        let t = CovDerivTensor::compute(&conn, &g2, &acms, &basis);
        assert!(t.is_zero());
    }

    #[test]
    fn tilted_xi_spot_values() {
        // xi = (3/5) e1 + (4/5) e2: the engine's conventions give
        // (nabla_{e1} Phi)(e1, e2) = -4/5 and (nabla_{e2} Phi)(e2, e1) = -3/5.
        let s = sasakian3();
        let xi = V::new([qr(3, 5), qr(4, 5), q(0), q(0), q(0), q(0), q(0)]);
        let acms = Acms::induce(&s.g2, xi).unwrap();
        let frame = nabla_phi_frame_tensor(&s.conn, &s.g2, &acms);
        assert_eq!(frame[0][0][1], qr(-4, 5));
        assert_eq!(frame[1][1][0], qr(-3, 5));
        assert_eq!(frame[0][0][2], q(0));
    }

    #[test]
    fn eq1_matches_leibniz_route() {
        // Independent oracle: (nabla_x Phi)(y,z) through nabla_form on the
        // 2-form Phi, compared with the product-rule expansion componentwise.
        let s = sasakian3();
        let mut rng = SplitMix64::new(5150);
        for _ in 0..10 {
            let u: [Exact; 6] = std::array::from_fn(|_| rng.small_ratio(8));
            let xi = rational_unit_vector(&u);
            let (acms, basis, t) = tensor_for(&s, xi);
            for i in 0..DIM {
                let d_phi = nabla_form_dir(&s.conn, acms.fundamental_form(), basis.vector(i));
                for j in 0..DIM {
                    for k in 0..DIM {
                        let via_form = d_phi
                            .eval(&[basis.vector(j).clone(), basis.vector(k).clone()])
                            .unwrap();
                        assert_eq!(*t.entry(i, j, k), via_form);
                    }
                }
            }
        }
    }

    #[test]
    fn symmetry_report_passes_on_induced_tensors() {
        let s = sasakian3();
        let mut rng = SplitMix64::new(808);
        for _ in 0..10 {
            let u: [Exact; 6] = std::array::from_fn(|_| rng.small_ratio(8));
            let (acms, _, t) = tensor_for(&s, rational_unit_vector(&u));
            assert!(t.symmetry_report(&acms).all_passed());
        }
    }

    #[test]
    fn diagnostics_for_reeb_field() {
        let s = sasakian3();
        let (acms, basis, t) = tensor_for(&s, V::basis(0));
        let d = XiDiagnostics::compute(&s.conn, &s.g2, &acms, &basis);
        assert_eq!(d.v, V::basis(0).scale(&q(2)));
        assert_eq!(d.g_xi_v, q(2));
        assert!(d.nabla_xi_xi.is_zero());
        assert_eq!(d.div_xi, q(0));
        assert_eq!(d.delta_eta, q(0));
        assert!(d.is_killing);

        let delta_phi = t.codifferential();
        assert_eq!(*delta_phi.coord(0), q(-2));
        assert_eq!(delta_phi.dot(acms.xi()), q(-2));
    }

    #[test]
    fn delta_eta_equals_minus_divergence_on_fuzzed_xi() {
        let s = sasakian3();
        let mut rng = SplitMix64::new(99);
        for _ in 0..50 {
            let u: [Exact; 6] = std::array::from_fn(|_| rng.small_ratio(16));
            let (acms, basis, _) = tensor_for(&s, rational_unit_vector(&u));
            let d = XiDiagnostics::compute(&s.conn, &s.g2, &acms, &basis);
            assert_eq!(d.delta_eta, -d.div_xi.clone());
            // g(nabla_x xi, xi) = 0 for all frame x
            for i in 0..DIM {
                assert_eq!(d.nabla_xi[i].dot(acms.xi()), q(0));
            }
        }
    }

    #[test]
    fn abelian_diagnostics_vanish() {
        let c = StructureConstants::zero();
        let conn = Connection::levi_civita(&c);
        let g2 = G2Structure::standard();
        let acms = Acms::induce(&g2, V::basis(6)).unwrap();
        let basis = AdaptedBasis::adapted_to(acms.xi());
        let d = XiDiagnostics::compute(&conn, &g2, &acms, &basis);
        assert_eq!(d.div_xi, q(0));
        assert!(d.v.is_zero());
        assert!(d.is_killing);
        assert!(d.nabla_xi_is_zero());
    }

    #[test]
    fn reeb_acceleration_vanishes_on_su2_span() {
        let s = sasakian3();
        let xi = V::new([qr(3, 5), q(0), qr(4, 5), q(0), q(0), q(0), q(0)]);
        let (_, basis, _) = tensor_for(&s, xi.clone());
        let acms = Acms::induce(&s.g2, xi).unwrap();
        let d = XiDiagnostics::compute(&s.conn, &s.g2, &acms, &basis);
        assert!(d.nabla_xi_xi.is_zero());
    }

    #[test]
    fn nabla_xi_phi_vanishes_for_reeb_field() {
        let s = sasakian3();
        let acms = Acms::induce(&s.g2, V::basis(0)).unwrap();
        let (endo, two_form) = nabla_xi_phi(&s.conn, &s.g2, &acms);
        assert!(endo.is_zero());
        assert!(two_form.is_zero());
    }

    #[test]
    fn nabla_xi_phi_vanishes_abelian() {
        let c = StructureConstants::zero();
        let conn = Connection::levi_civita(&c);
        let g2 = G2Structure::standard();
        let acms = Acms::induce(&g2, V::basis(3)).unwrap();
        let (endo, _) = nabla_xi_phi(&conn, &g2, &acms);
        assert!(endo.is_zero());
    }

    #[test]
    fn nabla_xi_phi_pairs_with_two_form_derivative() {
        // g(e_i, (nabla_xi phi) e_j) agrees with the xi-directional
        // derivative of Phi computed through nabla_form.
        let s = sasakian3();
        let mut rng = SplitMix64::new(31337);
        for _ in 0..10 {
            let u: [Exact; 6] = std::array::from_fn(|_| rng.small_ratio(8));
            let xi = rational_unit_vector(&u);
            let acms = Acms::induce(&s.g2, xi.clone()).unwrap();
            let (endo, _) = nabla_xi_phi(&s.conn, &s.g2, &acms);
            let d_phi = nabla_form_dir(&s.conn, acms.fundamental_form(), &xi);
            for i in 0..DIM {
                for j in 0..DIM {
                    assert_eq!(*endo.entry(i, j), d_phi.eval_frame(&[i, j]));
                }
            }
        }
    }

    #[test]
    fn prop1_proof_identity_on_all_indices() {
        // (nabla_{e_i} Phi)(xi, e_k) = -g(nabla_{e_i} xi, xi x e_k)
        let s = sasakian3();
        let mut rng = SplitMix64::new(1212);
        for _ in 0..10 {
            let u: [Exact; 6] = std::array::from_fn(|_| rng.small_ratio(8));
            let xi = rational_unit_vector(&u);
            let acms = Acms::induce(&s.g2, xi.clone()).unwrap();
            let frame = nabla_phi_frame_tensor(&s.conn, &s.g2, &acms);
            for i in 0..DIM {
                let nxi = s.conn.nabla_basis_dir(i, &xi);
                for k in 0..DIM {
                    let lhs = (0..DIM).fold(q(0), |acc, qidx| {
                        acc + xi.coord(qidx).clone() * frame[i][qidx][k].clone()
                    });
                    let rhs = -nxi.dot(&s.g2.cross(&xi, &V::basis(k)));
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn rotate_first_pair_matches_full_basis_change() {
        let s = sasakian3();
        let mut rng = SplitMix64::new(77);
        for _ in 0..5 {
            let u: [Exact; 6] = std::array::from_fn(|_| rng.small_ratio(8));
            let xi = rational_unit_vector(&u);
            let acms = Acms::induce(&s.g2, xi).unwrap();
            let basis = AdaptedBasis::adapted_to(acms.xi());
            let t = CovDerivTensor::compute(&s.conn, &s.g2, &acms, &basis);
            let fast = t.rotate_first_pair();
            let slow = CovDerivTensor::compute(&s.conn, &s.g2, &acms, &basis.rotated_first_pair());
            assert_eq!(fast, slow);
        }
    }

    #[test]
    fn codifferential_abelian_vanishes() {
        let c = StructureConstants::zero();
        let conn = Connection::levi_civita(&c);
        let g2 = G2Structure::standard();
        let acms = Acms::induce(&g2, V::basis(6)).unwrap();
        let basis = AdaptedBasis::adapted_to(acms.xi());
        let t = CovDerivTensor::compute(&conn, &g2, &acms, &basis);
        assert!(t.codifferential().is_zero());
    }
}

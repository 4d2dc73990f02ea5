//! Homogeneous frame calculus: antisymmetric structure constants, the
//! Levi-Civita connection through the Koszul formula, the exterior
//! derivative of invariant forms, covariant derivatives, divergence, and the
//! parallel / nearly-parallel probes.
//!
//! The frame is always orthonormal, so the Koszul formula collapses to
//! `2 Gamma[i][j][k] = c[i][j][k] - c[j][k][i] + c[k][i][j]`.
//!
//! Exterior derivative convention: no `1/2` factor, i.e. for an invariant
//! 1-form `d eta(x,y) = -eta([x,y])`. Zero/nonzero conclusions do not depend
//! on this choice; reports that show `d eta` also list the halved values for
//! readers who use the averaged convention.

use std::array;

use crate::check::CheckReport;
use crate::exterior::{KForm, Vector7, DIM};
use crate::g2::G2Structure;
use crate::scalar::Scalar;

/// Bracket coefficients `[e_i, e_j] = sum_k c[i][j][k] e_k`.
#[derive(Debug, Clone, PartialEq)]
pub struct StructureConstants<S> {
    c: Box<[[[S; 7]; 7]; 7]>,
}

impl<S: Scalar> StructureConstants<S> {
    pub fn zero() -> Self {
        StructureConstants {
            c: Box::new(array::from_fn(|_| {
                array::from_fn(|_| array::from_fn(|_| S::zero()))
            })),
        }
    }

    /// Build from a list of `(i, j, k, value)` entries meaning
    /// `[e_i, e_j] = value * e_k + ...`, with `i < j`; the antisymmetric
    /// partner is filled in automatically. Indices are 0-based.
    pub fn from_brackets(entries: &[(usize, usize, usize, S)]) -> Self {
        let mut sc = Self::zero();
        for (i, j, k, v) in entries {
            sc.c[*i][*j][*k] = sc.c[*i][*j][*k].clone() + v.clone();
            sc.c[*j][*i][*k] = sc.c[*j][*i][*k].clone() - v.clone();
        }
        sc
    }

    pub fn coefficient(&self, i: usize, j: usize, k: usize) -> &S {
        &self.c[i][j][k]
    }

    /// `[e_i, e_j]` as a vector.
    pub fn bracket_frame(&self, i: usize, j: usize) -> Vector7<S> {
        Vector7::new(array::from_fn(|k| self.c[i][j][k].clone()))
    }

    /// Bilinear extension of the bracket.
    pub fn bracket(&self, x: &Vector7<S>, y: &Vector7<S>) -> Vector7<S> {
        let mut out = Vector7::zero();
        for i in 0..DIM {
            if x.coord(i).is_zero() {
                continue;
            }
            for j in 0..DIM {
                if y.coord(j).is_zero() {
                    continue;
                }
                let w = self
                    .bracket_frame(i, j)
                    .scale(&(x.coord(i).clone() * y.coord(j).clone()));
                out = out.add(&w);
            }
        }
        out
    }

    pub fn is_abelian(&self) -> bool {
        self.c.iter().flatten().flatten().all(|v| v.is_zero())
    }

    /// Antisymmetry and the Jacobi identity, with first failing witness.
    pub fn validate(&self) -> CheckReport {
        let mut report = CheckReport::new();

        let mut anti = None;
        'anti: for i in 0..DIM {
            for j in 0..DIM {
                for k in 0..DIM {
                    let sum = self.c[i][j][k].clone() + self.c[j][i][k].clone();
                    if !sum.is_zero() {
                        anti = Some(format!(
                            "c[{}][{}][{}] + c[{}][{}][{}] = {}",
                            i + 1,
                            j + 1,
                            k + 1,
                            j + 1,
                            i + 1,
                            k + 1,
                            sum
                        ));
                        break 'anti;
                    }
                }
            }
        }
        report.record("bracket-antisymmetry", anti);

        let mut jacobi = None;
        'jac: for i in 0..DIM {
            for j in (i + 1)..DIM {
                for k in (j + 1)..DIM {
                    let ei = Vector7::basis(i);
                    let ej = Vector7::basis(j);
                    let ek = Vector7::basis(k);
                    let cyclic = self
                        .bracket(&self.bracket(&ei, &ej), &ek)
                        .add(&self.bracket(&self.bracket(&ej, &ek), &ei))
                        .add(&self.bracket(&self.bracket(&ek, &ei), &ej));
                    if !cyclic.is_zero() {
                        jacobi = Some(format!(
                            "triple (e{}, e{}, e{}): cyclic sum = {}",
                            i + 1,
                            j + 1,
                            k + 1,
                            cyclic
                        ));
                        break 'jac;
                    }
                }
            }
        }
        report.record("jacobi-identity", jacobi);
        report
    }
}

/// Levi-Civita coefficients `Gamma[i][j][k] = g(nabla_{e_i} e_j, e_k)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Connection<S> {
    gamma: Box<[[[S; 7]; 7]; 7]>,
}

impl<S: Scalar> Connection<S> {
    /// Koszul formula for an orthonormal invariant frame.
    pub fn levi_civita(c: &StructureConstants<S>) -> Self {
        let half = S::ratio(1, 2);
        let gamma = Box::new(array::from_fn(|i| {
            array::from_fn(|j| {
                array::from_fn(|k| {
                    let s = c.coefficient(i, j, k).clone() - c.coefficient(j, k, i).clone()
                        + c.coefficient(k, i, j).clone();
                    half.clone() * s
                })
            })
        }));
        Connection { gamma }
    }

    pub fn gamma(&self, i: usize, j: usize, k: usize) -> &S {
        &self.gamma[i][j][k]
    }

    /// `nabla_{e_i} e_j` as a vector.
    pub fn nabla_frame(&self, i: usize, j: usize) -> Vector7<S> {
        Vector7::new(array::from_fn(|k| self.gamma[i][j][k].clone()))
    }

    /// `nabla_{e_i} v` for a constant-coefficient `v`.
    pub fn nabla_basis_dir(&self, i: usize, v: &Vector7<S>) -> Vector7<S> {
        let mut out = Vector7::zero();
        for j in 0..DIM {
            if v.coord(j).is_zero() {
                continue;
            }
            out = out.add(&self.nabla_frame(i, j).scale(v.coord(j)));
        }
        out
    }

    /// `nabla_x v` for constant-coefficient `x` and `v`.
    pub fn nabla(&self, x: &Vector7<S>, v: &Vector7<S>) -> Vector7<S> {
        let mut out = Vector7::zero();
        for i in 0..DIM {
            if x.coord(i).is_zero() {
                continue;
            }
            out = out.add(&self.nabla_basis_dir(i, v).scale(x.coord(i)));
        }
        out
    }

    /// Metric compatibility and torsion-freeness against `c`, with witnesses.
    pub fn validate(&self, c: &StructureConstants<S>) -> CheckReport {
        let mut report = CheckReport::new();
        let mut metric = None;
        let mut torsion = None;
        for i in 0..DIM {
            for j in 0..DIM {
                for k in 0..DIM {
                    if metric.is_none() {
                        let sum = self.gamma[i][j][k].clone() + self.gamma[i][k][j].clone();
                        if !sum.is_zero() {
                            metric = Some(format!(
                                "Gamma[{}][{}][{}] + Gamma[{}][{}][{}] = {}",
                                i + 1,
                                j + 1,
                                k + 1,
                                i + 1,
                                k + 1,
                                j + 1,
                                sum
                            ));
                        }
                    }
                    if torsion.is_none() {
                        let diff = self.gamma[i][j][k].clone()
                            - self.gamma[j][i][k].clone()
                            - c.coefficient(i, j, k).clone();
                        if !diff.is_zero() {
                            torsion = Some(format!(
                                "Gamma[{i}][{j}][{k}] - Gamma[{j}][{i}][{k}] - c[{i}][{j}][{k}] = {diff}",
                                i = i + 1,
                                j = j + 1,
                                k = k + 1,
                            ));
                        }
                    }
                }
            }
        }
        report.record("metric-compatibility", metric);
        report.record("torsion-free", torsion);
        report
    }
}

/// Chevalley-Eilenberg differential of an invariant form (no `1/2` factor):
/// `dw(x_0..x_k) = sum_{a<b} (-1)^{a+b} w([x_a,x_b], x_0..^x_a..^x_b..x_k)`.
pub fn ce_differential<S: Scalar>(c: &StructureConstants<S>, w: &KForm<S>) -> KForm<S> {
    let k = w.degree();
    assert!(
        k < DIM,
        "differential of a top form is zero; degree 7 + 1 > 7"
    );
    let mut out = KForm::zero(k + 1);
    // Enumerate increasing (k+1)-tuples.
    let tuples = increasing_tuples(k + 1);
    for t in tuples {
        let mut value = S::zero();
        for a in 0..t.len() {
            for b in (a + 1)..t.len() {
                let bracket = c.bracket_frame(t[a], t[b]);
                let mut args: Vec<Vector7<S>> = vec![bracket];
                for (p, &idx) in t.iter().enumerate() {
                    if p != a && p != b {
                        args.push(Vector7::basis(idx));
                    }
                }
                let term = w.eval(&args).expect("arity matches degree");
                value = if (a + b) % 2 == 0 {
                    value + term
                } else {
                    value - term
                };
            }
        }
        out.set(&t, value);
    }
    out
}

/// Covariant derivative of an invariant form along `e_i`:
/// `(nabla_{e_i} w)(y_1..y_k) = -sum_m w(y_1, .., nabla_{e_i} y_m, .., y_k)`.
pub fn nabla_form<S: Scalar>(conn: &Connection<S>, w: &KForm<S>, i: usize) -> KForm<S> {
    let k = w.degree();
    let mut out = KForm::zero(k);
    if k == 0 {
        return out;
    }
    for t in increasing_tuples(k) {
        let mut value = S::zero();
        for m in 0..k {
            let mut args: Vec<Vector7<S>> = t.iter().map(|&idx| Vector7::basis(idx)).collect();
            args[m] = conn.nabla_frame(i, t[m]);
            value = value - w.eval(&args).expect("arity matches degree");
        }
        out.set(&t, value);
    }
    out
}

/// `nabla_x w` for constant-coefficient direction `x`.
pub fn nabla_form_dir<S: Scalar>(conn: &Connection<S>, w: &KForm<S>, x: &Vector7<S>) -> KForm<S> {
    let mut out = KForm::zero(w.degree());
    for i in 0..DIM {
        if x.coord(i).is_zero() {
            continue;
        }
        out = out.add(&nabla_form(conn, w, i).scale(x.coord(i)));
    }
    out
}

/// Alternating sum `sum_a (-1)^a (nabla_{x_a} w)(x_0..^x_a..x_k)`, which for
/// a torsion-free connection reproduces `dw`; used to cross-validate
/// [`nabla_form`] against [`ce_differential`].
pub fn antisymmetrized_nabla<S: Scalar>(conn: &Connection<S>, w: &KForm<S>) -> KForm<S> {
    let k = w.degree();
    let mut out = KForm::zero(k + 1);
    for t in increasing_tuples(k + 1) {
        let mut value = S::zero();
        for a in 0..t.len() {
            let rest: Vec<usize> = t
                .iter()
                .enumerate()
                .filter(|&(p, _)| p != a)
                .map(|(_, &idx)| idx)
                .collect();
            let term = nabla_form(conn, w, t[a]).eval_frame(&rest);
            value = if a % 2 == 0 {
                value + term
            } else {
                value - term
            };
        }
        out.set(&t, value);
    }
    out
}

/// `div(x) = sum_i g(nabla_{e_i} x, e_i)` for constant-coefficient `x`.
pub fn divergence<S: Scalar>(conn: &Connection<S>, x: &Vector7<S>) -> S {
    (0..DIM).fold(S::zero(), |acc, i| {
        acc + self_coord(conn.nabla_basis_dir(i, x), i)
    })
}

fn self_coord<S: Scalar>(v: Vector7<S>, i: usize) -> S {
    v.coord(i).clone()
}

/// Torsion class probe for a G2 form on this frame.
#[derive(Debug, Clone, PartialEq)]
pub struct G2ClassProbe<S> {
    /// `nabla_{e_i} phi = 0` for every `i`.
    pub parallel: bool,
    /// The constant `k` with `d phi = k * star(phi)`, componentwise exact,
    /// when such a constant exists.
    pub nearly_parallel: Option<S>,
}

/// Decide parallel / nearly-parallel for `phi` on the frame `(c, conn)`.
///
/// Proportionality is demanded componentwise; on the float backend the
/// residual is compared against the tolerance after rescaling by the largest
/// coefficient of `star(phi)`.
pub fn g2_class_probe<S: Scalar>(
    c: &StructureConstants<S>,
    conn: &Connection<S>,
    g2: &G2Structure<S>,
) -> G2ClassProbe<S> {
    let parallel = (0..DIM).all(|i| nabla_form(conn, g2.phi(), i).is_zero());

    let dphi = ce_differential(c, g2.phi());
    let star = g2.phi().hodge_star();
    let nearly_parallel = proportionality(&dphi, &star);

    G2ClassProbe {
        parallel,
        nearly_parallel,
    }
}

fn proportionality<S: Scalar>(lhs: &KForm<S>, rhs: &KForm<S>) -> Option<S> {
    if lhs.is_zero() {
        return Some(S::zero());
    }
    // Pick k from the largest rhs coefficient, then require the residual
    // lhs - k*rhs to vanish, rescaled so the float tolerance is meaningful.
    let scale = rhs.max_abs_coeff();
    if scale.is_zero() {
        return None;
    }
    let (idx, _) = rhs
        .terms()
        .max_by(|a, b| {
            a.1.abs()
                .partial_cmp(&b.1.abs())
                .unwrap_or(std::cmp::Ordering::Equal)
        })
        .expect("nonzero form has terms");
    let k = lhs.coeff(idx) / rhs.coeff(idx);
    let residual = lhs.sub(&rhs.scale(&k));
    let ok = residual
        .terms()
        .all(|(_, c)| (c.clone() / scale.clone()).is_zero());
    ok.then_some(k)
}

fn increasing_tuples(len: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(len);
    fn recurse(start: usize, len: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == len {
            out.push(current.clone());
            return;
        }
        for i in start..DIM {
            current.push(i);
            recurse(i + 1, len, current, out);
            current.pop();
        }
    }
    recurse(0, len, &mut current, &mut out);
    out
}

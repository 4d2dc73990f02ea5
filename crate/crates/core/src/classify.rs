//! Class verdicts for `alpha`: exact membership in the defining subspaces
//! D1, D2 and the C12 space, necessary-condition elimination for the twelve
//! irreducible classes from the invariant relations, named-class checks, and
//! an audit that asserts the structural theorems against the computed
//! verdicts on every instance.
//!
//! Irreducible-class verdicts are `excluded` or `consistent`, never
//! "member": the invariant relations are necessary conditions only. Exact
//! membership is claimed only for the three subspaces whose defining
//! relations are checkable by exhaustive evaluation.

use serde::Serialize;

use crate::acms::{Acms, AdaptedBasis, XI};
use crate::exterior::{KForm, Matrix7, Vector7, DIM};
use crate::frame::{Connection, G2ClassProbe};
use crate::g2::G2Structure;
use crate::invariants::InvariantVector;
use crate::nablaphi::{CovDerivTensor, XiDiagnostics};
use crate::scalar::{normalized, Scalar};

/// Zero test rescaled by `max(1, scale)`; exact on the exact backend.
fn zero<S: Scalar>(x: &S, scale: &S) -> bool {
    normalized(x, scale).is_zero()
}

fn equal<S: Scalar>(a: &S, b: &S, scale: &S) -> bool {
    zero(&(a.clone() - b.clone()), scale)
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Membership {
    Member,
    NotMember { witness: String },
}

impl Membership {
    pub fn is_member(&self) -> bool {
        matches!(self, Membership::Member)
    }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct SpaceMembership {
    /// `alpha = 0` identically.
    pub trivial: bool,
    pub d1: Membership,
    pub d2: Membership,
    pub c12_space: Membership,
}

/// Exhaustive defining-relation checks on all adapted-basis triples.
pub fn space_membership<S: Scalar>(
    t: &CovDerivTensor<S>,
    acms: &Acms<S>,
    scale: &S,
) -> SpaceMembership {
    let basis = t.basis();
    let eta: [S; 7] = std::array::from_fn(|i| acms.eta(basis.vector(i)));

    let trivial =
        (0..DIM).all(|i| (0..DIM).all(|j| (0..DIM).all(|k| zero(t.entry(i, j, k), scale))));

    // D1: alpha(xi, x, y) = 0 and alpha(x, xi, y) = 0.
    let mut d1 = Membership::Member;
    'd1: for j in 0..DIM {
        for k in 0..DIM {
            if !zero(t.entry(XI, j, k), scale) {
                d1 = Membership::NotMember {
                    witness: format!("alpha(xi, b{}, b{}) = {}", j + 1, k + 1, t.entry(XI, j, k)),
                };
                break 'd1;
            }
        }
    }
    if d1.is_member() {
        'd1b: for i in 0..DIM {
            for k in 0..DIM {
                if !zero(t.entry(i, XI, k), scale) {
                    d1 = Membership::NotMember {
                        witness: format!(
                            "alpha(b{}, xi, b{}) = {}",
                            i + 1,
                            k + 1,
                            t.entry(i, XI, k)
                        ),
                    };
                    break 'd1b;
                }
            }
        }
    }

    // D2: alpha(x,y,z) = eta(x) alpha(xi,y,z) + eta(y) alpha(x,xi,z)
    //                    + eta(z) alpha(x,y,xi).
    let mut d2 = Membership::Member;
    'd2: for i in 0..DIM {
        for j in 0..DIM {
            for k in 0..DIM {
                let rhs = eta[i].clone() * t.entry(XI, j, k).clone()
                    + eta[j].clone() * t.entry(i, XI, k).clone()
                    + eta[k].clone() * t.entry(i, j, XI).clone();
                let diff = t.entry(i, j, k).clone() - rhs.clone();
                if !zero(&diff, scale) {
                    d2 = Membership::NotMember {
                        witness: format!(
                            "alpha(b{}, b{}, b{}) = {} but the eta expansion gives {}",
                            i + 1,
                            j + 1,
                            k + 1,
                            t.entry(i, j, k),
                            rhs
                        ),
                    };
                    break 'd2;
                }
            }
        }
    }

    // C12 space: alpha(x,y,z) = eta(x)eta(y) alpha(xi,xi,z)
    //                           + eta(x)eta(z) alpha(xi,y,xi).
    let mut c12_space = Membership::Member;
    'c12: for i in 0..DIM {
        for j in 0..DIM {
            for k in 0..DIM {
                let rhs = eta[i].clone() * eta[j].clone() * t.entry(XI, XI, k).clone()
                    + eta[i].clone() * eta[k].clone() * t.entry(XI, j, XI).clone();
                let diff = t.entry(i, j, k).clone() - rhs.clone();
                if !zero(&diff, scale) {
                    c12_space = Membership::NotMember {
                        witness: format!(
                            "alpha(b{}, b{}, b{}) = {} but the C12 form gives {}",
                            i + 1,
                            j + 1,
                            k + 1,
                            t.entry(i, j, k),
                            rhs
                        ),
                    };
                    break 'c12;
                }
            }
        }
    }

    SpaceMembership {
        trivial,
        d1,
        d2,
        c12_space,
    }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum ClassVerdict {
    /// Every listed relation holds; membership is not implied.
    Consistent,
    /// At least one necessary relation fails.
    Excluded { violations: Vec<String> },
}

impl ClassVerdict {
    pub fn is_excluded(&self) -> bool {
        matches!(self, ClassVerdict::Excluded { .. })
    }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct Elimination {
    /// Verdicts for C1..C12, in order.
    pub classes: Vec<ClassVerdict>,
    /// Necessary conditions for the direct summands D1 and D2.
    pub d1: ClassVerdict,
    pub d2: ClassVerdict,
    /// True when `alpha = 0`; the relations are then vacuous and every
    /// verdict is `Consistent`.
    pub trivial: bool,
}

impl Elimination {
    pub fn class(&self, n: usize) -> &ClassVerdict {
        &self.classes[n - 1]
    }
}

/// Relation set of one irreducible class: chained equalities pinned to a
/// head invariant, plus a zero list.
struct Relations {
    /// `(label, head, other)` meaning `head = other`.
    equalities: Vec<(String, usize, Expr)>,
    zeros: Vec<usize>,
}

/// Right-hand sides appearing in the relation table.
enum Expr {
    Inv(usize),
    NegInv(usize),
    HalfInv(usize),          // 1/2 * i_m
    SixthInv(usize),         // 1/(2n) * i_m with n = 3
    ThreeQuartersInv(usize), // n/(n-1)^2 * i_m with n = 3
    Norm,
    HalfNorm,
}

const SET_A: [usize; 12] = [1, 2, 3, 4, 5, 7, 11, 13, 15, 16, 17, 18];

fn relations_for(class: usize) -> Relations {
    use Expr::*;
    let mut eq: Vec<(String, usize, Expr)> = Vec::new();
    let mut zeros: Vec<usize> = Vec::new();
    match class {
        1 => {
            eq.push(("i1 = -i2".into(), 1, NegInv(2)));
            eq.push(("i1 = -i3".into(), 1, NegInv(3)));
            eq.push(("i1 = |alpha|^2".into(), 1, Norm));
            zeros.extend(4..=18);
        }
        2 => {
            eq.push(("i1 = 2 i2".into(), 2, HalfInv(1)));
            eq.push(("i1 = -i3".into(), 1, NegInv(3)));
            eq.push(("i1 = |alpha|^2".into(), 1, Norm));
            zeros.extend(4..=18);
        }
        3 => {
            eq.push(("i1 = i3".into(), 1, Inv(3)));
            eq.push(("i1 = |alpha|^2".into(), 1, Norm));
            zeros.push(2);
            zeros.extend(4..=18);
        }
        4 => {
            eq.push(("i1 = i3".into(), 1, Inv(3)));
            eq.push(("i1 = (3/4) i4".into(), 1, ThreeQuartersInv(4)));
            zeros.push(2);
            zeros.extend(5..=18);
        }
        5 => {
            eq.push(("i6 = -i8".into(), 6, NegInv(8)));
            eq.push(("i6 = i9".into(), 6, Inv(9)));
            eq.push(("i6 = -i12".into(), 6, NegInv(12)));
            eq.push(("i6 = (1/6) i14".into(), 6, SixthInv(14)));
            zeros.push(10);
            zeros.extend(SET_A);
        }
        6 => {
            eq.push(("i6 = i8".into(), 6, Inv(8)));
            eq.push(("i6 = i9".into(), 6, Inv(9)));
            eq.push(("i6 = i12".into(), 6, Inv(12)));
            eq.push(("i6 = (1/6) i10".into(), 6, SixthInv(10)));
            zeros.push(14);
            zeros.extend(SET_A);
        }
        7..=10 => {
            let (s8, s9, s12) = match class {
                7 => (1, 1, -1),
                8 => (-1, 1, -1),
                9 => (1, -1, -1),
                _ => (-1, -1, 1),
            };
            let signed = |s: i64, m: usize| if s == 1 { Inv(m) } else { NegInv(m) };
            let sign_str = |s: i64| if s == 1 { "" } else { "-" };
            eq.push((format!("i6 = {}i8", sign_str(s8)), 6, signed(s8, 8)));
            eq.push((format!("i6 = {}i9", sign_str(s9)), 6, signed(s9, 9)));
            eq.push((format!("i6 = {}i12", sign_str(s12)), 6, signed(s12, 12)));
            eq.push(("i6 = |alpha|^2 / 2".into(), 6, HalfNorm));
            zeros.push(10);
            zeros.push(14);
            zeros.extend(SET_A);
        }
        11 => {
            eq.push(("i5 = |alpha|^2".into(), 5, Norm));
            zeros.extend((1..=18).filter(|m| *m != 5));
        }
        12 => {
            eq.push(("i16 = |alpha|^2".into(), 16, Norm));
            zeros.extend((1..=18).filter(|m| *m != 16));
        }
        _ => unreachable!("class index 1..=12"),
    }
    zeros.sort_unstable();
    zeros.dedup();
    Relations {
        equalities: eq,
        zeros,
    }
}

fn check_class<S: Scalar>(class: usize, inv: &InvariantVector<S>, scale: &S) -> ClassVerdict {
    let rel = relations_for(class);
    let mut violations = Vec::new();
    let eval = |e: &Expr| -> S {
        match e {
            Expr::Inv(m) => inv.get(*m).clone(),
            Expr::NegInv(m) => -inv.get(*m).clone(),
            Expr::HalfInv(m) => inv.get(*m).clone() * S::ratio(1, 2),
            Expr::SixthInv(m) => inv.get(*m).clone() * S::ratio(1, 6),
            Expr::ThreeQuartersInv(m) => inv.get(*m).clone() * S::ratio(3, 4),
            Expr::Norm => inv.norm2().clone(),
            Expr::HalfNorm => inv.norm2().clone() * S::ratio(1, 2),
        }
    };
    for (label, head, rhs) in &rel.equalities {
        let lhs = inv.get(*head).clone();
        let r = eval(rhs);
        if !equal(&lhs, &r, scale) {
            violations.push(format!("{label} fails: {lhs} vs {r}"));
        }
    }
    for m in &rel.zeros {
        if !zero(inv.get(*m), scale) {
            violations.push(format!("i{m} = 0 fails: i{m} = {}", inv.get(*m)));
        }
    }
    if violations.is_empty() {
        ClassVerdict::Consistent
    } else {
        ClassVerdict::Excluded { violations }
    }
}

/// Necessary-condition elimination for C1..C12 and the summands D1, D2.
pub fn class_elimination<S: Scalar>(inv: &InvariantVector<S>, scale: &S) -> Elimination {
    let trivial = inv.all_zero();
    if trivial {
        return Elimination {
            classes: vec![ClassVerdict::Consistent; 12],
            d1: ClassVerdict::Consistent,
            d2: ClassVerdict::Consistent,
            trivial,
        };
    }
    let classes = (1..=12).map(|c| check_class(c, inv, scale)).collect();

    let zero_set = |ms: &[usize]| -> ClassVerdict {
        let violations: Vec<String> = ms
            .iter()
            .filter(|m| !zero(inv.get(**m), scale))
            .map(|m| format!("i{m} = 0 fails: i{m} = {}", inv.get(*m)))
            .collect();
        if violations.is_empty() {
            ClassVerdict::Consistent
        } else {
            ClassVerdict::Excluded { violations }
        }
    };
    let d1 = zero_set(&[5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18]);
    let d2 = zero_set(&[1, 2, 3, 4, 16, 17, 18]);

    Elimination {
        classes,
        d1,
        d2,
        trivial,
    }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum NamedVerdict {
    Holds,
    Fails { witness: String },
    Indeterminate { reason: String },
}

impl NamedVerdict {
    pub fn holds(&self) -> bool {
        matches!(self, NamedVerdict::Holds)
    }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct NamedChecks {
    /// `alpha = 0`.
    pub cosymplectic: NamedVerdict,
    /// `nabla_xi phi = 0`, checked at both the endomorphism and form level.
    pub almost_k_contact: NamedVerdict,
    /// `delta Phi = 0` and `delta eta = 0`.
    pub semi_cosymplectic: NamedVerdict,
    /// `(nabla_x phi)(y) = g(x,y) xi - eta(y) x` on all frame pairs.
    pub sasakian: NamedVerdict,
    /// When `delta eta = 0`: `alpha(x,y,z) =
    /// (deltaPhi(xi)/6)(g(x,z)eta(y) - g(x,y)eta(z))` on all basis triples.
    pub trans_sasakian_necessary: NamedVerdict,
    /// Set when `xi` is Killing with `nabla xi != 0`: the structure cannot
    /// be nearly-K-cosymplectic.
    pub nearly_k_cosymplectic_obstruction: Option<String>,
}

pub struct NamedCheckInput<'a, S: Scalar> {
    pub conn: &'a Connection<S>,
    pub acms: &'a Acms<S>,
    pub tensor: &'a CovDerivTensor<S>,
    pub diag: &'a XiDiagnostics<S>,
    pub nabla_xi_phi_endo: &'a Matrix7<S>,
    pub nabla_xi_phi_form: &'a Matrix7<S>,
    pub delta_phi: &'a Vector7<S>,
    pub scale: &'a S,
}

pub fn named_checks<S: Scalar>(input: &NamedCheckInput<'_, S>) -> NamedChecks {
    let NamedCheckInput {
        conn,
        acms,
        tensor,
        diag,
        nabla_xi_phi_endo,
        nabla_xi_phi_form,
        delta_phi,
        scale,
    } = input;
    let basis = tensor.basis();

    let cosymplectic = {
        let mut witness = None;
        'outer: for i in 0..DIM {
            for j in 0..DIM {
                for k in 0..DIM {
                    if !zero(tensor.entry(i, j, k), scale) {
                        witness = Some(format!(
                            "alpha(b{}, b{}, b{}) = {}",
                            i + 1,
                            j + 1,
                            k + 1,
                            tensor.entry(i, j, k)
                        ));
                        break 'outer;
                    }
                }
            }
        }
        match witness {
            None => NamedVerdict::Holds,
            Some(w) => NamedVerdict::Fails { witness: w },
        }
    };

    let almost_k_contact = {
        let mut witness = None;
        'akc: for i in 0..DIM {
            for j in 0..DIM {
                let e = nabla_xi_phi_endo.entry(i, j);
                let f = nabla_xi_phi_form.entry(i, j);
                if !zero(e, scale) || !zero(f, scale) {
                    witness = Some(format!(
                        "g(e{}, (nabla_xi phi) e{}) = {} and (nabla_xi Phi)(e{}, e{}) = {}",
                        i + 1,
                        j + 1,
                        e,
                        i + 1,
                        j + 1,
                        f
                    ));
                    break 'akc;
                }
            }
        }
        match witness {
            None => NamedVerdict::Holds,
            Some(w) => NamedVerdict::Fails { witness: w },
        }
    };

    let semi_cosymplectic = {
        let bad_phi = (0..DIM).find(|j| !zero(delta_phi.coord(*j), scale));
        if let Some(j) = bad_phi {
            NamedVerdict::Fails {
                witness: format!("deltaPhi(e{}) = {}", j + 1, delta_phi.coord(j)),
            }
        } else if !zero(&diag.delta_eta, scale) {
            NamedVerdict::Fails {
                witness: format!("deltaEta = {}", diag.delta_eta),
            }
        } else {
            NamedVerdict::Holds
        }
    };

    let sasakian = {
        let mut witness = None;
        'sas: for i in 0..DIM {
            let ei = Vector7::basis(i);
            for j in 0..DIM {
                let ej = Vector7::basis(j);
                let lhs = conn
                    .nabla(&ei, &acms.apply_phi(&ej))
                    .sub(&acms.apply_phi(&conn.nabla(&ei, &ej)));
                let rhs = acms.xi().scale(&ei.dot(&ej)).sub(&ei.scale(&acms.eta(&ej)));
                let diff = lhs.sub(&rhs);
                if (0..DIM).any(|m| !zero(diff.coord(m), scale)) {
                    witness = Some(format!(
                        "(nabla_e{} phi)(e{}) = {} but g(x,y)xi - eta(y)x = {}",
                        i + 1,
                        j + 1,
                        lhs,
                        rhs
                    ));
                    break 'sas;
                }
            }
        }
        match witness {
            None => NamedVerdict::Holds,
            Some(w) => NamedVerdict::Fails { witness: w },
        }
    };

    let trans_sasakian_necessary = if !zero(&diag.delta_eta, scale) {
        NamedVerdict::Indeterminate {
            reason: format!(
                "defining relation stated only for deltaEta = 0; here deltaEta = {}",
                diag.delta_eta
            ),
        }
    } else {
        let delta_phi_xi = delta_phi.dot(acms.xi());
        let coeff = delta_phi_xi / S::from_int(6);
        let eta: [S; 7] = std::array::from_fn(|i| acms.eta(basis.vector(i)));
        let gram: [[S; 7]; 7] =
            std::array::from_fn(|i| std::array::from_fn(|j| basis.vector(i).dot(basis.vector(j))));
        let mut witness = None;
        // Scan the Reeb-slot triples first; the obstruction typically
        // shows in alpha(x, xi, x).
        let mut order: Vec<(usize, usize, usize)> = Vec::with_capacity(343);
        for i in 0..DIM {
            for k in 0..DIM {
                order.push((i, XI, k));
            }
        }
        for i in 0..DIM {
            for j in 0..DIM {
                for k in 0..DIM {
                    if j != XI {
                        order.push((i, j, k));
                    }
                }
            }
        }
        for (i, j, k) in order {
            let rhs = coeff.clone()
                * (gram[i][k].clone() * eta[j].clone() - gram[i][j].clone() * eta[k].clone());
            let lhs = tensor.entry(i, j, k).clone();
            if !equal(&lhs, &rhs, scale) {
                let name = |n: usize| {
                    if n == XI {
                        "xi".to_string()
                    } else {
                        format!("b{}", n + 1)
                    }
                };
                witness = Some(format!(
                    "alpha({}, {}, {}) = {} but the trans-Sasakian form gives {}",
                    name(i),
                    name(j),
                    name(k),
                    lhs,
                    rhs
                ));
                break;
            }
        }
        match witness {
            None => NamedVerdict::Holds,
            Some(w) => NamedVerdict::Fails { witness: w },
        }
    };

    let nearly_k_cosymplectic_obstruction = if diag.is_killing && !diag.nabla_xi_is_zero() {
        Some("xi is Killing with nabla xi != 0, so d eta != 0 and the structure cannot be nearly-K-cosymplectic".to_string())
    } else {
        None
    };

    NamedChecks {
        cosymplectic,
        almost_k_contact,
        semi_cosymplectic,
        sasakian,
        trans_sasakian_necessary,
        nearly_k_cosymplectic_obstruction,
    }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct AuditEntry {
    pub name: String,
    /// Whether the hypothesis of the statement held on this instance; when
    /// false the entry passes vacuously.
    pub hypothesis: bool,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Default, Serialize, PartialEq, Eq)]
pub struct TheoremAudit {
    pub entries: Vec<AuditEntry>,
}

impl TheoremAudit {
    pub fn all_passed(&self) -> bool {
        self.entries.iter().all(|e| e.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &AuditEntry> {
        self.entries.iter().filter(|e| !e.passed)
    }

    pub fn entry(&self, name: &str) -> Option<&AuditEntry> {
        self.entries.iter().find(|e| e.name == name)
    }

    fn push(&mut self, name: &str, hypothesis: bool, passed: bool, detail: String) {
        self.entries.push(AuditEntry {
            name: name.to_string(),
            hypothesis,
            passed: !hypothesis || passed,
            detail: if hypothesis {
                detail
            } else {
                "hypothesis not satisfied".to_string()
            },
        });
    }
}

pub struct AuditContext<'a, S: Scalar> {
    pub g2: &'a G2Structure<S>,
    pub probe: &'a G2ClassProbe<S>,
    pub basis: &'a AdaptedBasis<S>,
    pub diag: &'a XiDiagnostics<S>,
    pub inv: &'a InvariantVector<S>,
    /// Invariants recomputed in the rotated adapted basis.
    pub inv_rotated: &'a InvariantVector<S>,
    pub space: &'a SpaceMembership,
    pub elim: &'a Elimination,
    pub named: &'a NamedChecks,
    pub acms_report_ok: bool,
    pub symmetry_report_ok: bool,
    /// Exterior derivative of `eta` (bracket convention, no 1/2).
    pub d_eta: &'a KForm<S>,
    pub scale: &'a S,
}

/// Assert every applicable structural statement against the computed data.
/// A failed entry signals an internal inconsistency of the pipeline, never
/// a property of the input.
pub fn theorem_audit<S: Scalar>(ctx: &AuditContext<'_, S>) -> TheoremAudit {
    let mut audit = TheoremAudit::default();
    let scale = ctx.scale;
    let nearly = ctx.probe.nearly_parallel.is_some();
    let reeb_geodesic = ctx.diag.nabla_xi_xi.is_zero();
    let div_zero = zero(&ctx.diag.div_xi, scale);
    let v_pairing_zero = zero(&ctx.diag.g_xi_v, scale);

    audit.push(
        "acms-axioms",
        true,
        ctx.acms_report_ok,
        "induced structure satisfies the a.c.m.s. axioms".into(),
    );
    audit.push(
        "c-space-symmetry",
        true,
        ctx.symmetry_report_ok,
        "alpha has the defining symmetries of the class space".into(),
    );

    {
        let sum = ctx.diag.delta_eta.clone() + ctx.diag.div_xi.clone();
        audit.push(
            "codifferential-eta-is-minus-divergence",
            true,
            zero(&sum, scale),
            format!(
                "deltaEta = {}, div(xi) = {}",
                ctx.diag.delta_eta, ctx.diag.div_xi
            ),
        );
    }

    audit.push(
        "i6-characterizes-complement-parallelism",
        true,
        zero(ctx.inv.get(6), scale) == ctx.diag.nabla_xi_vanishes_on_complement(ctx.basis),
        format!("i6 = {}", ctx.inv.get(6)),
    );
    audit.push(
        "i16-characterizes-reeb-geodesic",
        true,
        zero(ctx.inv.get(16), scale) == reeb_geodesic,
        format!(
            "i16 = {}, nabla_xi xi = {}",
            ctx.inv.get(16),
            ctx.diag.nabla_xi_xi
        ),
    );
    audit.push(
        "i14-is-divergence-squared",
        true,
        equal(ctx.inv.get(14), &ctx.diag.div_xi.square(), scale),
        format!("i14 = {}, div = {}", ctx.inv.get(14), ctx.diag.div_xi),
    );
    audit.push(
        "i15-is-minus-divergence-times-v-pairing",
        true,
        equal(
            ctx.inv.get(15),
            &(-(ctx.diag.div_xi.clone() * ctx.diag.g_xi_v.clone())),
            scale,
        ),
        format!(
            "i15 = {}, div = {}, g(xi,v) = {}",
            ctx.inv.get(15),
            ctx.diag.div_xi,
            ctx.diag.g_xi_v
        ),
    );
    audit.push(
        "i10-is-v-pairing-squared",
        true,
        equal(ctx.inv.get(10), &ctx.diag.g_xi_v.square(), scale),
        format!("i10 = {}, g(xi,v) = {}", ctx.inv.get(10), ctx.diag.g_xi_v),
    );
    {
        let via_c12 = (0..XI).fold(S::zero(), |acc, k| acc + ctx.inv.c12()[k].square());
        audit.push(
            "i4-matches-c12-trace",
            true,
            equal(ctx.inv.get(4), &via_c12, scale),
            format!("i4 = {}, c12 route = {}", ctx.inv.get(4), via_c12),
        );
    }
    {
        let mut ok = equal(ctx.inv.norm2(), ctx.inv_rotated.norm2(), scale);
        for m in 1..=18 {
            ok &= equal(ctx.inv.get(m), ctx.inv_rotated.get(m), scale);
        }
        audit.push(
            "invariant-basis-independence",
            true,
            ok,
            "the 18 invariants agree in a rotated adapted basis".into(),
        );
    }

    audit.push(
        "killing-deta-characterization",
        ctx.diag.is_killing,
        ctx.d_eta.is_zero() == ctx.diag.nabla_xi_is_zero(),
        format!(
            "xi Killing; d eta zero: {}, nabla xi zero: {}",
            ctx.d_eta.is_zero(),
            ctx.diag.nabla_xi_is_zero()
        ),
    );

    // Statements for nearly parallel structures.
    audit.push(
        "nearly-parallel-i5-characterizes-reeb-geodesic",
        nearly,
        zero(ctx.inv.get(5), scale) == reeb_geodesic,
        format!("i5 = {}", ctx.inv.get(5)),
    );
    {
        let xi = ctx.basis.xi();
        let i17_expected = ctx.g2.cross(xi, &ctx.diag.nabla_xi_xi).dot(&ctx.diag.v);
        audit.push(
            "nearly-parallel-i17-closed-form",
            nearly,
            equal(ctx.inv.get(17), &i17_expected, scale),
            format!(
                "i17 = {}, g(xi x nabla_xi xi, v) = {}",
                ctx.inv.get(17),
                i17_expected
            ),
        );
        let i18_expected = -ctx.diag.nabla_xi_xi.dot(&ctx.diag.v);
        audit.push(
            "nearly-parallel-i18-closed-form",
            nearly,
            equal(ctx.inv.get(18), &i18_expected, scale),
            format!(
                "i18 = {}, -g(nabla_xi xi, v) = {}",
                ctx.inv.get(18),
                i18_expected
            ),
        );
    }
    audit.push(
        "nearly-parallel-reeb-geodesic-iff-almost-k-contact",
        nearly,
        reeb_geodesic == ctx.named.almost_k_contact.holds(),
        format!(
            "nabla_xi xi = {}, almost-K-contact: {:?}",
            ctx.diag.nabla_xi_xi,
            ctx.named.almost_k_contact.holds()
        ),
    );
    {
        // Nearly parallel with nabla_xi xi != 0 excludes D1, D2 and C12.
        let hyp = nearly && !reeb_geodesic;
        let ok = !ctx.space.d1.is_member()
            && !ctx.space.d2.is_member()
            && !ctx.space.c12_space.is_member()
            && ctx.elim.d1.is_excluded()
            && ctx.elim.d2.is_excluded()
            && ctx.elim.class(12).is_excluded();
        audit.push(
            "nearly-parallel-acceleration-exclusions",
            hyp,
            ok,
            "nabla_xi xi != 0 excludes D1, D2 and C12".into(),
        );
    }

    {
        // nabla_xi xi != 0 excludes D2 and C1..C11 on any instance.
        let hyp = !reeb_geodesic;
        let mut ok = !ctx.space.d2.is_member() && ctx.elim.d2.is_excluded();
        for n in 1..=11 {
            ok &= ctx.elim.class(n).is_excluded();
        }
        audit.push(
            "reeb-acceleration-exclusions",
            hyp,
            ok,
            "nabla_xi xi != 0 excludes D2 and C1..C11".into(),
        );
    }
    {
        // div(xi) != 0 excludes D1, C1..C4, C6..C12 and semi-cosymplectic.
        let hyp = !div_zero;
        let mut ok = !ctx.space.d1.is_member() && ctx.elim.d1.is_excluded();
        for n in [1, 2, 3, 4, 6, 7, 8, 9, 10, 11, 12] {
            ok &= ctx.elim.class(n).is_excluded();
        }
        ok &= !ctx.named.semi_cosymplectic.holds();
        audit.push(
            "divergence-exclusions",
            hyp,
            ok,
            "div(xi) != 0 excludes D1, C1..C4, C6..C12 and semi-cosymplectic".into(),
        );
    }
    {
        // g(xi,v) != 0 excludes D1, C5, C7..C12.
        let hyp = !v_pairing_zero;
        let mut ok = !ctx.space.d1.is_member() && ctx.elim.d1.is_excluded();
        for n in [5, 7, 8, 9, 10, 11, 12] {
            ok &= ctx.elim.class(n).is_excluded();
        }
        audit.push(
            "v-pairing-exclusions",
            hyp,
            ok,
            "g(xi,v) != 0 excludes D1, C5 and C7..C12".into(),
        );
    }
    {
        let hyp = !v_pairing_zero && !div_zero;
        let ok = (1..=12).all(|n| ctx.elim.class(n).is_excluded());
        audit.push(
            "combined-exclusions",
            hyp,
            ok,
            "g(xi,v) != 0 and div(xi) != 0 exclude every irreducible class".into(),
        );
    }

    audit.push(
        "trivial-class-is-cosymplectic",
        true,
        ctx.space.trivial == ctx.named.cosymplectic.holds()
            && ctx.space.trivial == ctx.inv.all_zero(),
        format!(
            "trivial: {}, cosymplectic: {}, invariants zero: {}",
            ctx.space.trivial,
            ctx.named.cosymplectic.holds(),
            ctx.inv.all_zero()
        ),
    );
    audit.push(
        "semi-cosymplectic-implies-i14-zero",
        ctx.named.semi_cosymplectic.holds(),
        zero(ctx.inv.get(14), scale),
        format!("i14 = {}", ctx.inv.get(14)),
    );
    audit.push(
        "exact-d1-implies-high-invariants-vanish",
        ctx.space.d1.is_member(),
        (5..=18).all(|m| zero(ctx.inv.get(m), scale)),
        "alpha in D1 forces i5..i18 = 0".into(),
    );
    audit.push(
        "exact-d2-implies-low-invariants-vanish",
        ctx.space.d2.is_member(),
        [1, 2, 3, 4, 16, 17, 18]
            .iter()
            .all(|m| zero(ctx.inv.get(*m), scale)),
        "alpha in D2 forces i1..i4, i16..i18 = 0".into(),
    );

    audit
}

/// Aggregated verdicts for one instance.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct ClassReport {
    pub space: SpaceMembership,
    pub elimination: Elimination,
    pub named: NamedChecks,
    pub audit: TheoremAudit,
}

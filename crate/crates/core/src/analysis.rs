//! The full pipeline: validate a spec, build the connection and cross
//! product, induce the structure for a unit field, derive `nabla Phi`, the
//! invariants and the class verdicts, and render everything into one report
//! that exists in byte-stable JSON and plain-text forms with identical
//! values. Also the seeded fuzz driver for the property suites.

use serde::Serialize;

use crate::acms::{rational_unit_vector, Acms, AdaptedBasis};
use crate::check::CheckReport;
use crate::classify::{
    class_elimination, named_checks, space_membership, theorem_audit, AuditContext, ClassReport,
    ClassVerdict, Membership, NamedCheckInput, NamedVerdict,
};
use crate::exterior::{KForm, Matrix7, Vector7, DIM};
use crate::frame::{ce_differential, g2_class_probe, Connection, G2ClassProbe, StructureConstants};
use crate::g2::G2Structure;
use crate::invariants::{quadratic_invariants, InvariantVector};
use crate::manifold::{parse_scalar, ManifoldSpec, SpecError};
use crate::nablaphi::{nabla_xi_phi, CovDerivTensor, XiDiagnostics};
use crate::scalar::{Exact, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Backend {
    Exact,
    Float,
}

impl Backend {
    pub fn parse(text: &str) -> Result<Backend, SpecError> {
        match text {
            "exact" => Ok(Backend::Exact),
            "float" => Ok(Backend::Float),
            other => Err(SpecError::Backend(other.to_string())),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Backend::Exact => "exact",
            Backend::Float => "float",
        }
    }
}

/// Unit-field choice passed on the command line.
#[derive(Debug, Clone)]
pub enum XiChoice {
    Coords(Vec<String>),
    Stereographic(Vec<String>),
}

/// A validated manifold, ready to analyze: constants, connection, G2
/// structure, validation verdicts and the torsion-class probe.
pub struct Pipeline<S: Scalar> {
    pub name: String,
    pub constants: StructureConstants<S>,
    pub connection: Connection<S>,
    pub g2: G2Structure<S>,
    pub structure_report: CheckReport,
    pub cross_report: CheckReport,
    pub probe: G2ClassProbe<S>,
}

impl<S: Scalar> Pipeline<S> {
    /// Run the validation gates and derive the connection. Antisymmetry and
    /// the cross axioms are fatal; a Jacobi defect is reported in
    /// `structure_report` but does not block analysis (bracket tables of
    /// frame snapshots carry only partial component data).
    pub fn build(spec: &ManifoldSpec) -> Result<Self, SpecError> {
        spec.check_shape()?;
        let constants = spec.structure_constants::<S>()?;
        let structure_report = constants.validate();
        if let Some(check) = structure_report.check("bracket-antisymmetry") {
            if !check.passed {
                return Err(SpecError::Structure {
                    witness: check.witness.clone().unwrap_or_default(),
                });
            }
        }
        let phi = spec.phi_form::<S>()?;
        let g2 = G2Structure::new(phi).map_err(|e| SpecError::CrossAxioms {
            witness: e.to_string(),
        })?;
        let cross_report = g2.validate_cross_axioms();
        if let Some(fail) = cross_report.first_failure() {
            return Err(SpecError::CrossAxioms {
                witness: format!(
                    "{}: {}",
                    fail.name,
                    fail.witness.clone().unwrap_or_default()
                ),
            });
        }
        let connection = Connection::levi_civita(&constants);
        let probe = g2_class_probe(&constants, &connection, &g2);
        Ok(Pipeline {
            name: spec.name.clone(),
            constants,
            connection,
            g2,
            structure_report,
            cross_report,
            probe,
        })
    }

    /// Everything the classification needs for one unit field.
    pub fn instance(&self, xi: Vector7<S>) -> Result<Instance<S>, SpecError> {
        let acms = Acms::induce(&self.g2, xi).map_err(|e| match e {
            crate::acms::AcmsError::NonUnitXi { norm2 } => SpecError::NonUnitXi { norm2 },
        })?;
        let acms_report = acms.validate();
        let basis = AdaptedBasis::adapted_to(acms.xi());
        let tensor = CovDerivTensor::compute(&self.connection, &self.g2, &acms, &basis);
        let symmetry_report = tensor.symmetry_report(&acms);
        let diag = XiDiagnostics::compute(&self.connection, &self.g2, &acms, &basis);
        let inv = quadratic_invariants(&tensor, &acms);
        let inv_rotated = quadratic_invariants(&tensor.rotate_first_pair(), &acms);

        let scale = {
            let n = inv.norm2().clone();
            if n > S::one() {
                n
            } else {
                S::one()
            }
        };

        let delta_phi = tensor.codifferential();
        let (nxp_endo, nxp_form) = nabla_xi_phi(&self.connection, &self.g2, &acms);
        let d_eta = ce_differential(&self.constants, &acms.eta_form());

        let space = space_membership(&tensor, &acms, &scale);
        let elim = class_elimination(&inv, &scale);
        let named = named_checks(&NamedCheckInput {
            conn: &self.connection,
            acms: &acms,
            tensor: &tensor,
            diag: &diag,
            nabla_xi_phi_endo: &nxp_endo,
            nabla_xi_phi_form: &nxp_form,
            delta_phi: &delta_phi,
            scale: &scale,
        });
        let audit = theorem_audit(&AuditContext {
            g2: &self.g2,
            probe: &self.probe,
            basis: &basis,
            diag: &diag,
            inv: &inv,
            inv_rotated: &inv_rotated,
            space: &space,
            elim: &elim,
            named: &named,
            acms_report_ok: acms_report.all_passed(),
            symmetry_report_ok: symmetry_report.all_passed(),
            d_eta: &d_eta,
            scale: &scale,
        });

        Ok(Instance {
            acms,
            acms_report,
            basis,
            tensor,
            symmetry_report,
            diag,
            inv,
            inv_rotated,
            delta_phi,
            nabla_xi_phi_endo: nxp_endo,
            nabla_xi_phi_form: nxp_form,
            d_eta,
            scale,
            report: ClassReport {
                space,
                elimination: elim,
                named,
                audit,
            },
        })
    }
}

/// Per-field computed data, exact scalars intact.
pub struct Instance<S: Scalar> {
    pub acms: Acms<S>,
    pub acms_report: CheckReport,
    pub basis: AdaptedBasis<S>,
    pub tensor: CovDerivTensor<S>,
    pub symmetry_report: CheckReport,
    pub diag: XiDiagnostics<S>,
    pub inv: InvariantVector<S>,
    pub inv_rotated: InvariantVector<S>,
    pub delta_phi: Vector7<S>,
    pub nabla_xi_phi_endo: Matrix7<S>,
    pub nabla_xi_phi_form: Matrix7<S>,
    pub d_eta: KForm<S>,
    pub scale: S,
    pub report: ClassReport,
}

// ---------------------------------------------------------------------------
// Report structures (all values pre-rendered to strings, so the JSON and the
// text rendering cannot drift apart).

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct TableEntry {
    pub x: String,
    pub y: String,
    pub value: String,
}

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct DEtaEntry {
    pub form: String,
    /// `d eta(x,y) = -eta([x,y])` convention.
    pub bracket_convention: String,
    /// The same values under the averaged convention (half of the above).
    pub half_convention: String,
}

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct TablesSection {
    pub connection: Vec<TableEntry>,
    pub cross: Vec<TableEntry>,
    pub d_eta: Vec<DEtaEntry>,
    pub d_phi: String,
    pub star_phi: String,
    pub parallel: bool,
    pub nearly_parallel_k: Option<String>,
}

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct ValidationSection {
    pub structure: CheckReport,
    pub cross_axioms: CheckReport,
    pub acms: CheckReport,
    pub alpha_symmetries: CheckReport,
}

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct AcmsSection {
    pub xi: String,
    pub eta: String,
    pub fundamental_form: String,
    pub phi_matrix: Vec<String>,
    pub adapted_basis: Vec<String>,
}

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct DiagnosticsSection {
    pub div_xi: String,
    pub delta_eta: String,
    pub nabla_xi_xi: String,
    pub v: String,
    pub g_xi_v: String,
    pub delta_phi: String,
    pub delta_phi_at_xi: String,
    pub d_eta_of_xi: String,
    pub is_killing: bool,
}

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct InvariantsSection {
    pub i: Vec<String>,
    pub norm2: String,
    pub c12_on_adapted_basis: Vec<String>,
    /// The constant in the C4 relation, `n/(n-1)^2` with `2n+1 = 7`.
    pub c4_constant: String,
}

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct AnalysisReport {
    pub name: String,
    pub backend: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tolerance: Option<String>,
    pub xi: Vec<String>,
    pub validation: ValidationSection,
    pub tables: TablesSection,
    pub acms: AcmsSection,
    pub diagnostics: DiagnosticsSection,
    pub invariants: InvariantsSection,
    pub classification: ClassReport,
    pub audit_passed: bool,
}

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct TablesReport {
    pub name: String,
    pub backend: String,
    pub validation_structure: CheckReport,
    pub validation_cross: CheckReport,
    pub tables: TablesSection,
}

fn frame_name(i: usize) -> String {
    format!("e{}", i + 1)
}

fn tables_section<S: Scalar>(p: &Pipeline<S>) -> TablesSection {
    let mut connection = Vec::new();
    for i in 0..DIM {
        for j in 0..DIM {
            let v = p.connection.nabla_frame(i, j);
            if !v.is_zero() {
                connection.push(TableEntry {
                    x: frame_name(i),
                    y: frame_name(j),
                    value: v.to_string(),
                });
            }
        }
    }
    let cross =
        p.g2.cross_table_entries()
            .into_iter()
            .map(|(i, j, v)| TableEntry {
                x: frame_name(i),
                y: frame_name(j),
                value: v.to_string(),
            })
            .collect();
    let d_eta = (0..DIM)
        .map(|i| {
            let d = ce_differential(&p.constants, &KForm::<S>::coframe(i));
            DEtaEntry {
                form: format!("eta{}", i + 1),
                bracket_convention: d.to_string(),
                half_convention: d.scale(&S::ratio(1, 2)).to_string(),
            }
        })
        .collect();
    let d_phi = ce_differential(&p.constants, p.g2.phi());
    TablesSection {
        connection,
        cross,
        d_eta,
        d_phi: d_phi.to_string(),
        star_phi: p.g2.phi().hodge_star().to_string(),
        parallel: p.probe.parallel,
        nearly_parallel_k: p.probe.nearly_parallel.as_ref().map(|k| k.to_string()),
    }
}

fn float_tolerance_field(backend: Backend) -> Option<String> {
    match backend {
        Backend::Exact => None,
        Backend::Float => Some(format!("{:e}", crate::scalar::tolerance())),
    }
}

fn build_report<S: Scalar>(
    p: &Pipeline<S>,
    inst: &Instance<S>,
    backend: Backend,
) -> AnalysisReport {
    let xi = inst.acms.xi();
    AnalysisReport {
        name: p.name.clone(),
        backend: backend.name().to_string(),
        tolerance: float_tolerance_field(backend),
        xi: (0..DIM).map(|i| xi.coord(i).to_string()).collect(),
        validation: ValidationSection {
            structure: p.structure_report.clone(),
            cross_axioms: p.cross_report.clone(),
            acms: inst.acms_report.clone(),
            alpha_symmetries: inst.symmetry_report.clone(),
        },
        tables: tables_section(p),
        acms: AcmsSection {
            xi: xi.to_string(),
            eta: inst.acms.eta_form().to_string(),
            fundamental_form: inst.acms.fundamental_form().to_string(),
            phi_matrix: (0..DIM)
                .map(|i| {
                    (0..DIM)
                        .map(|j| inst.acms.phi_endo().entry(i, j).to_string())
                        .collect::<Vec<_>>()
                        .join(" ")
                })
                .collect(),
            adapted_basis: (0..DIM).map(|i| inst.basis.vector(i).to_string()).collect(),
        },
        diagnostics: DiagnosticsSection {
            div_xi: inst.diag.div_xi.to_string(),
            delta_eta: inst.diag.delta_eta.to_string(),
            nabla_xi_xi: inst.diag.nabla_xi_xi.to_string(),
            v: inst.diag.v.to_string(),
            g_xi_v: inst.diag.g_xi_v.to_string(),
            delta_phi: inst.delta_phi.to_string(),
            delta_phi_at_xi: inst.delta_phi.dot(inst.acms.xi()).to_string(),
            d_eta_of_xi: inst.d_eta.to_string(),
            is_killing: inst.diag.is_killing,
        },
        invariants: InvariantsSection {
            i: (1..=18).map(|m| inst.inv.get(m).to_string()).collect(),
            norm2: inst.inv.norm2().to_string(),
            c12_on_adapted_basis: inst.inv.c12().iter().map(|x| x.to_string()).collect(),
            c4_constant: "3/4".to_string(),
        },
        classification: inst.report.clone(),
        audit_passed: inst.report.audit.all_passed(),
    }
}

fn resolve_xi<S: Scalar>(
    spec: &ManifoldSpec,
    choice: Option<&XiChoice>,
) -> Result<Vector7<S>, SpecError> {
    match choice {
        Some(XiChoice::Coords(texts)) => {
            if texts.len() != 7 {
                return Err(SpecError::XiLength(texts.len()));
            }
            let mut coords = Vec::with_capacity(7);
            for (n, t) in texts.iter().enumerate() {
                coords.push(parse_scalar::<S>(&format!("--xi[{n}]"), t)?);
            }
            Ok(Vector7::new(coords.try_into().expect("length checked")))
        }
        Some(XiChoice::Stereographic(texts)) => {
            if texts.len() != 6 {
                return Err(SpecError::ULength(texts.len()));
            }
            let mut coords = Vec::with_capacity(6);
            for (n, t) in texts.iter().enumerate() {
                coords.push(parse_scalar::<S>(&format!("--u[{n}]"), t)?);
            }
            Ok(rational_unit_vector(
                &coords
                    .try_into()
                    .map_err(|_| SpecError::ULength(0))
                    .unwrap(),
            ))
        }
        None => spec.default_xi::<S>()?.ok_or(SpecError::MissingXi),
    }
}

fn run_analysis<S: Scalar>(
    spec: &ManifoldSpec,
    choice: Option<&XiChoice>,
    backend: Backend,
) -> Result<AnalysisReport, SpecError> {
    let pipeline = Pipeline::<S>::build(spec)?;
    let xi = resolve_xi::<S>(spec, choice)?;
    let inst = pipeline.instance(xi)?;
    Ok(build_report(&pipeline, &inst, backend))
}

/// Analyze a spec with an optional unit-field override and backend override.
pub fn analyze(
    spec: &ManifoldSpec,
    choice: Option<&XiChoice>,
    backend_override: Option<Backend>,
) -> Result<AnalysisReport, SpecError> {
    let backend = match backend_override {
        Some(b) => b,
        None => Backend::parse(&spec.backend)?,
    };
    match backend {
        Backend::Exact => run_analysis::<Exact>(spec, choice, backend),
        Backend::Float => run_analysis::<f64>(spec, choice, backend),
    }
}

/// Validation + tables only; no unit field needed.
pub fn tables(
    spec: &ManifoldSpec,
    backend_override: Option<Backend>,
) -> Result<TablesReport, SpecError> {
    let backend = match backend_override {
        Some(b) => b,
        None => Backend::parse(&spec.backend)?,
    };
    fn go<S: Scalar>(spec: &ManifoldSpec, backend: Backend) -> Result<TablesReport, SpecError> {
        let p = Pipeline::<S>::build(spec)?;
        Ok(TablesReport {
            name: p.name.clone(),
            backend: backend.name().to_string(),
            validation_structure: p.structure_report.clone(),
            validation_cross: p.cross_report.clone(),
            tables: tables_section(&p),
        })
    }
    match backend {
        Backend::Exact => go::<Exact>(spec, backend),
        Backend::Float => go::<f64>(spec, backend),
    }
}

/// Validation gates only. The returned reports include the Jacobi verdict;
/// `Ok` means the fatal gates passed.
pub fn validate(
    spec: &ManifoldSpec,
) -> Result<(CheckReport, CheckReport, Option<String>), SpecError> {
    let pipeline = Pipeline::<Exact>::build(spec)?;
    let xi_note = match spec.default_xi::<Exact>()? {
        Some(xi) => {
            let norm2 = xi.norm2();
            if norm2 != crate::scalar::Scalar::one() {
                return Err(SpecError::NonUnitXi {
                    norm2: norm2.to_string(),
                });
            }
            Some(format!("default xi = {xi}"))
        }
        None => None,
    };
    Ok((pipeline.structure_report, pipeline.cross_report, xi_note))
}

// ---------------------------------------------------------------------------
// Fuzz driver

#[derive(Debug, Clone, Serialize)]
pub struct FuzzEntryStat {
    pub name: String,
    /// Trials on which the hypothesis held.
    pub applicable: u64,
    pub passed: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct FuzzSummary {
    pub spec: String,
    pub trials: u64,
    pub seed: u64,
    pub all_passed: bool,
    pub entries: Vec<FuzzEntryStat>,
    /// Verdict tallies over the trials.
    pub trivial_count: u64,
    pub almost_k_contact_count: u64,
}

#[derive(Debug, Error)]
pub struct FuzzFailure {
    pub seed: u64,
    pub trial: u64,
    pub xi: Vec<String>,
    pub failed_entries: Vec<String>,
}

use thiserror::Error;

impl std::fmt::Display for FuzzFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "audit failure at trial {} (seed {}), xi = [{}]: {}",
            self.trial,
            self.seed,
            self.xi.join(", "),
            self.failed_entries.join("; ")
        )
    }
}

#[derive(Debug, Error)]
pub enum FuzzError {
    #[error(transparent)]
    Spec(#[from] SpecError),
    #[error("{0}")]
    Audit(Box<FuzzFailure>),
}

/// Run `trials` seeded instances with stereographically generated exact unit
/// fields (numerators and denominators bounded by 16) and tally the audit.
/// Any audit failure aborts with full reproduction data.
pub fn fuzz(spec: &ManifoldSpec, trials: u64, seed: u64) -> Result<FuzzSummary, FuzzError> {
    let pipeline = Pipeline::<Exact>::build(spec)?;
    let mut rng = crate::rng::SplitMix64::new(seed);
    let mut entries: Vec<FuzzEntryStat> = Vec::new();
    let mut trivial_count = 0u64;
    let mut akc_count = 0u64;

    for trial in 0..trials {
        let u: [Exact; 6] = std::array::from_fn(|_| rng.small_ratio(16));
        let xi = rational_unit_vector(&u);
        let inst = pipeline.instance(xi.clone())?;

        if entries.is_empty() {
            entries = inst
                .report
                .audit
                .entries
                .iter()
                .map(|e| FuzzEntryStat {
                    name: e.name.clone(),
                    applicable: 0,
                    passed: 0,
                })
                .collect();
        }
        for (stat, entry) in entries.iter_mut().zip(inst.report.audit.entries.iter()) {
            if entry.hypothesis {
                stat.applicable += 1;
            }
            if entry.passed {
                stat.passed += 1;
            }
        }
        if inst.report.space.trivial {
            trivial_count += 1;
        }
        if inst.report.named.almost_k_contact.holds() {
            akc_count += 1;
        }

        if !inst.report.audit.all_passed() {
            let failed = inst
                .report
                .audit
                .failures()
                .map(|e| format!("{}: {}", e.name, e.detail))
                .collect();
            return Err(FuzzError::Audit(Box::new(FuzzFailure {
                seed,
                trial,
                xi: (0..DIM).map(|i| xi.coord(i).to_string()).collect(),
                failed_entries: failed,
            })));
        }
    }

    Ok(FuzzSummary {
        spec: spec.name.clone(),
        trials,
        seed,
        all_passed: true,
        entries,
        trivial_count,
        almost_k_contact_count: akc_count,
    })
}

// ---------------------------------------------------------------------------
// Text rendering

fn named_line(name: &str, v: &NamedVerdict) -> String {
    match v {
        NamedVerdict::Holds => format!("  {name}: yes"),
        NamedVerdict::Fails { witness } => format!("  {name}: no ({witness})"),
        NamedVerdict::Indeterminate { reason } => format!("  {name}: indeterminate ({reason})"),
    }
}

fn membership_line(name: &str, m: &Membership) -> String {
    match m {
        Membership::Member => format!("  {name}: member"),
        Membership::NotMember { witness } => format!("  {name}: not a member ({witness})"),
    }
}

fn class_line(name: &str, v: &ClassVerdict) -> String {
    match v {
        ClassVerdict::Consistent => format!("  {name}: consistent"),
        ClassVerdict::Excluded { violations } => {
            format!("  {name}: excluded ({})", violations.join("; "))
        }
    }
}

impl AnalysisReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let mut line = |s: String| {
            out.push_str(&s);
            out.push('\n');
        };
        line(format!(
            "manifold: {} (backend: {})",
            self.name, self.backend
        ));
        if let Some(t) = &self.tolerance {
            line(format!("tolerance: {t}"));
        }
        line(format!("xi = [{}]", self.xi.join(", ")));
        line(String::new());

        line("validation".to_string());
        for (title, report) in [
            ("structure constants", &self.validation.structure),
            ("cross product axioms", &self.validation.cross_axioms),
            ("a.c.m.s. axioms", &self.validation.acms),
            ("alpha symmetries", &self.validation.alpha_symmetries),
        ] {
            line(format!(" {title}:"));
            for c in &report.checks {
                match &c.witness {
                    None => line(format!("   [ok]   {}", c.name)),
                    Some(w) => line(format!("   [FAIL] {}: {}", c.name, w)),
                }
            }
        }
        if !self.validation.structure.all_passed() {
            line(
                " note: a Jacobi defect is informational; the bracket table is treated as a frame snapshot"
                    .to_string(),
            );
        }
        line(String::new());

        line("connection (nonzero nabla_x y)".to_string());
        for e in &self.tables.connection {
            line(format!("  nabla_{} {} = {}", e.x, e.y, e.value));
        }
        line(String::new());

        line("cross products".to_string());
        for e in &self.tables.cross {
            line(format!("  {} x {} = {}", e.x, e.y, e.value));
        }
        line(String::new());

        line("exterior derivatives of the coframe (bracket convention | averaged)".to_string());
        for e in &self.tables.d_eta {
            line(format!(
                "  d {} = {}   |   {}",
                e.form, e.bracket_convention, e.half_convention
            ));
        }
        line(String::new());

        line(format!("d phi    = {}", self.tables.d_phi));
        line(format!("star phi = {}", self.tables.star_phi));
        line(format!("parallel: {}", self.tables.parallel));
        match &self.tables.nearly_parallel_k {
            Some(k) => line(format!("nearly parallel: d phi = {k} star phi")),
            None => line("nearly parallel: no (d phi not proportional to star phi)".to_string()),
        }
        line(String::new());

        line("induced structure".to_string());
        line(format!("  eta = {}", self.acms.eta));
        line(format!("  Phi = {}", self.acms.fundamental_form));
        line("  adapted basis:".to_string());
        for (i, b) in self.acms.adapted_basis.iter().enumerate() {
            let label = if i == 6 {
                "xi".to_string()
            } else {
                format!("f{}", i + 1)
            };
            line(format!("    {label} = {b}"));
        }
        line(String::new());

        line("diagnostics".to_string());
        line(format!("  div(xi)      = {}", self.diagnostics.div_xi));
        line(format!("  delta eta    = {}", self.diagnostics.delta_eta));
        line(format!("  nabla_xi xi  = {}", self.diagnostics.nabla_xi_xi));
        line(format!("  v            = {}", self.diagnostics.v));
        line(format!("  g(xi, v)     = {}", self.diagnostics.g_xi_v));
        line(format!("  delta Phi    = {}", self.diagnostics.delta_phi));
        line(format!(
            "  delta Phi(xi) = {}",
            self.diagnostics.delta_phi_at_xi
        ));
        line(format!("  d eta        = {}", self.diagnostics.d_eta_of_xi));
        line(format!("  xi Killing   = {}", self.diagnostics.is_killing));
        line(String::new());

        line("quadratic invariants".to_string());
        for (m, v) in self.invariants.i.iter().enumerate() {
            line(format!("  i{:<2} = {}", m + 1, v));
        }
        line(format!("  |alpha|^2 = {}", self.invariants.norm2));
        line(format!(
            "  c12 on (f1..f6, xi) = [{}]",
            self.invariants.c12_on_adapted_basis.join(", ")
        ));
        line(format!(
            "  (C4 relation constant n/(n-1)^2 taken as {} for 2n+1 = 7)",
            self.invariants.c4_constant
        ));
        line(String::new());

        line("space membership (exact)".to_string());
        line(format!(
            "  trivial (alpha = 0): {}",
            self.classification.space.trivial
        ));
        line(membership_line("D1 ", &self.classification.space.d1));
        line(membership_line("D2 ", &self.classification.space.d2));
        line(membership_line("C12", &self.classification.space.c12_space));
        line(String::new());

        line("irreducible classes (necessary conditions only)".to_string());
        if self.classification.elimination.trivial {
            line("  (alpha = 0: the relations are vacuous)".to_string());
        }
        for (n, v) in self.classification.elimination.classes.iter().enumerate() {
            line(class_line(&format!("C{}", n + 1), v));
        }
        line(class_line(
            "D1 (invariant relations)",
            &self.classification.elimination.d1,
        ));
        line(class_line(
            "D2 (invariant relations)",
            &self.classification.elimination.d2,
        ));
        line(String::new());

        line("named classes".to_string());
        line(named_line(
            "cosymplectic",
            &self.classification.named.cosymplectic,
        ));
        line(named_line(
            "almost-K-contact",
            &self.classification.named.almost_k_contact,
        ));
        line(named_line(
            "semi-cosymplectic",
            &self.classification.named.semi_cosymplectic,
        ));
        line(named_line("Sasakian", &self.classification.named.sasakian));
        line(named_line(
            "trans-Sasakian (necessary)",
            &self.classification.named.trans_sasakian_necessary,
        ));
        if let Some(note) = &self.classification.named.nearly_k_cosymplectic_obstruction {
            line(format!("  nearly-K-cosymplectic: excluded ({note})"));
        }
        line(String::new());

        line("audit".to_string());
        for e in &self.classification.audit.entries {
            let status = if !e.hypothesis {
                "n/a "
            } else if e.passed {
                "pass"
            } else {
                "FAIL"
            };
            line(format!("  [{status}] {} ({})", e.name, e.detail));
        }
        line(format!("audit passed: {}", self.audit_passed));
        out
    }
}

impl TablesReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "manifold: {} (backend: {})\n\n",
            self.name, self.backend
        ));
        out.push_str("structure constants:\n");
        out.push_str(&self.validation_structure.to_string());
        out.push_str("cross product axioms:\n");
        out.push_str(&self.validation_cross.to_string());
        out.push_str("\nconnection (nonzero nabla_x y):\n");
        for e in &self.tables.connection {
            out.push_str(&format!("  nabla_{} {} = {}\n", e.x, e.y, e.value));
        }
        out.push_str("\ncross products:\n");
        for e in &self.tables.cross {
            out.push_str(&format!("  {} x {} = {}\n", e.x, e.y, e.value));
        }
        out.push_str("\nexterior derivatives (bracket convention | averaged):\n");
        for e in &self.tables.d_eta {
            out.push_str(&format!(
                "  d {} = {}   |   {}\n",
                e.form, e.bracket_convention, e.half_convention
            ));
        }
        out.push_str(&format!("\nd phi    = {}\n", self.tables.d_phi));
        out.push_str(&format!("star phi = {}\n", self.tables.star_phi));
        out.push_str(&format!("parallel: {}\n", self.tables.parallel));
        match &self.tables.nearly_parallel_k {
            Some(k) => out.push_str(&format!("nearly parallel: d phi = {k} star phi\n")),
            None => out.push_str("nearly parallel: no\n"),
        }
        out
    }
}

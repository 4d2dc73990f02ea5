//! Manifold specification files: a JSON schema with rationals as strings,
//! validation gates, and the built-in examples.
//!
//! Indices are 1-based in files and reports; rationals are written `"p/q"`
//! or `"p"` and never as floating literals, so exact parsing is lossless on
//! the exact backend.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::acms::rational_unit_vector;
use crate::exterior::{KForm, Vector7};
use crate::frame::StructureConstants;
use crate::scalar::{ParseRatioError, Scalar};

pub const SPEC_VERSION: u32 = 1;

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct BracketEntry {
    pub i: u32,
    pub j: u32,
    pub k: u32,
    pub value: String,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct FormEntry {
    pub i: u32,
    pub j: u32,
    pub k: u32,
    pub coeff: String,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct ManifoldSpec {
    pub version: u32,
    pub name: String,
    #[serde(default = "default_backend")]
    pub backend: String,
    /// `[e_i, e_j] = value e_k`, with `i < j`; unlisted brackets are zero.
    #[serde(default)]
    pub brackets: Vec<BracketEntry>,
    /// Coefficients of the 3-form on strictly increasing triples.
    pub phi: Vec<FormEntry>,
    /// Optional default unit field, 7 rationals.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub xi: Option<Vec<String>>,
    /// Optional stereographic parameter, 6 rationals; mutually exclusive
    /// with `xi`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub u: Option<Vec<String>>,
}

fn default_backend() -> String {
    "exact".to_string()
}

#[derive(Debug, Error)]
pub enum SpecError {
    #[error("failed to read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unsupported spec version {0}; this tool reads version 1")]
    Version(u32),
    #[error("{field}: {source}")]
    Rational {
        field: String,
        source: ParseRatioError,
    },
    #[error("{field}: index {value} out of range 1..=7")]
    IndexRange { field: String, value: u32 },
    #[error("{field}: indices must be strictly increasing")]
    IndexOrder { field: String },
    #[error("xi needs exactly 7 entries, got {0}")]
    XiLength(usize),
    #[error("u needs exactly 6 entries, got {0}")]
    ULength(usize),
    #[error("spec provides both xi and u; keep exactly one")]
    XiAndU,
    #[error("unknown backend {0:?}; expected \"exact\" or \"float\"")]
    Backend(String),
    #[error("structure constants rejected: {witness}")]
    Structure { witness: String },
    #[error("cross product axioms failed: {witness}")]
    CrossAxioms { witness: String },
    #[error("xi is not a unit field: g(xi, xi) = {norm2}")]
    NonUnitXi { norm2: String },
    #[error("no unit field given; provide xi or u in the spec or on the command line")]
    MissingXi,
}

impl ManifoldSpec {
    pub fn from_json(text: &str) -> Result<Self, SpecError> {
        let spec: ManifoldSpec = serde_json::from_str(text)?;
        spec.check_shape()?;
        Ok(spec)
    }

    pub fn from_path(path: &str) -> Result<Self, SpecError> {
        let text = std::fs::read_to_string(path).map_err(|source| SpecError::Io {
            path: path.to_string(),
            source,
        })?;
        Self::from_json(&text)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("spec serializes")
    }

    /// Structural validation: version, index ranges and ordering, lengths.
    pub fn check_shape(&self) -> Result<(), SpecError> {
        if self.version != SPEC_VERSION {
            return Err(SpecError::Version(self.version));
        }
        if self.backend != "exact" && self.backend != "float" {
            return Err(SpecError::Backend(self.backend.clone()));
        }
        for (n, b) in self.brackets.iter().enumerate() {
            let field = format!("brackets[{n}]");
            for idx in [b.i, b.j, b.k] {
                if !(1..=7).contains(&idx) {
                    return Err(SpecError::IndexRange { field, value: idx });
                }
            }
            if b.i >= b.j {
                return Err(SpecError::IndexOrder { field });
            }
        }
        for (n, p) in self.phi.iter().enumerate() {
            let field = format!("phi[{n}]");
            for idx in [p.i, p.j, p.k] {
                if !(1..=7).contains(&idx) {
                    return Err(SpecError::IndexRange { field, value: idx });
                }
            }
            if !(p.i < p.j && p.j < p.k) {
                return Err(SpecError::IndexOrder { field });
            }
        }
        if let Some(xi) = &self.xi {
            if xi.len() != 7 {
                return Err(SpecError::XiLength(xi.len()));
            }
        }
        if let Some(u) = &self.u {
            if u.len() != 6 {
                return Err(SpecError::ULength(u.len()));
            }
        }
        if self.xi.is_some() && self.u.is_some() {
            return Err(SpecError::XiAndU);
        }
        Ok(())
    }

    pub fn structure_constants<S: Scalar>(&self) -> Result<StructureConstants<S>, SpecError> {
        let mut entries = Vec::with_capacity(self.brackets.len());
        for (n, b) in self.brackets.iter().enumerate() {
            let value = parse_scalar::<S>(&format!("brackets[{n}].value"), &b.value)?;
            entries.push((
                (b.i - 1) as usize,
                (b.j - 1) as usize,
                (b.k - 1) as usize,
                value,
            ));
        }
        Ok(StructureConstants::from_brackets(&entries))
    }

    pub fn phi_form<S: Scalar>(&self) -> Result<KForm<S>, SpecError> {
        let mut phi = KForm::zero(3);
        for (n, p) in self.phi.iter().enumerate() {
            let coeff = parse_scalar::<S>(&format!("phi[{n}].coeff"), &p.coeff)?;
            let idx = [(p.i - 1) as usize, (p.j - 1) as usize, (p.k - 1) as usize];
            phi.add_to(&idx, coeff);
        }
        Ok(phi)
    }

    /// The spec's own unit field, if any.
    pub fn default_xi<S: Scalar>(&self) -> Result<Option<Vector7<S>>, SpecError> {
        if let Some(xi) = &self.xi {
            let mut coords = Vec::with_capacity(7);
            for (n, text) in xi.iter().enumerate() {
                coords.push(parse_scalar::<S>(&format!("xi[{n}]"), text)?);
            }
            let coords: [S; 7] = coords.try_into().expect("length checked");
            return Ok(Some(Vector7::new(coords)));
        }
        if let Some(u) = &self.u {
            let mut coords = Vec::with_capacity(6);
            for (n, text) in u.iter().enumerate() {
                coords.push(parse_scalar::<S>(&format!("u[{n}]"), text)?);
            }
            let coords: [S; 6] = coords.try_into().expect("length checked");
            return Ok(Some(rational_unit_vector(&coords)));
        }
        Ok(None)
    }
}

pub fn parse_scalar<S: Scalar>(field: &str, text: &str) -> Result<S, SpecError> {
    S::parse_ratio(text).map_err(|source| SpecError::Rational {
        field: field.to_string(),
        source,
    })
}

/// The 3-Sasakian frame: nine brackets, seven form coefficients, default
/// unit field `e1`.
pub fn sasakian3() -> ManifoldSpec {
    let b = |i: u32, j: u32, k: u32, value: &str| BracketEntry {
        i,
        j,
        k,
        value: value.to_string(),
    };
    let f = |i: u32, j: u32, k: u32, coeff: &str| FormEntry {
        i,
        j,
        k,
        coeff: coeff.to_string(),
    };
    ManifoldSpec {
        version: SPEC_VERSION,
        name: "sasakian3".to_string(),
        backend: "exact".to_string(),
        brackets: vec![
            b(1, 2, 3, "2"),
            b(2, 3, 1, "2"),
            b(1, 3, 2, "-2"),
            b(4, 5, 1, "2"),
            b(6, 7, 1, "2"),
            b(4, 6, 2, "2"),
            b(5, 7, 2, "-2"),
            b(4, 7, 3, "2"),
            b(5, 6, 3, "2"),
        ],
        phi: vec![
            f(1, 2, 3, "1"),
            f(1, 4, 5, "-1"),
            f(1, 6, 7, "-1"),
            f(2, 4, 6, "1"),
            f(2, 5, 7, "-1"),
            f(3, 4, 7, "1"),
            f(3, 5, 6, "1"),
        ],
        xi: Some(unit_xi(0)),
        u: None,
    }
}

/// Abelian frame with the model form; everything parallel.
pub fn flat() -> ManifoldSpec {
    let f = |i: u32, j: u32, k: u32, coeff: &str| FormEntry {
        i,
        j,
        k,
        coeff: coeff.to_string(),
    };
    ManifoldSpec {
        version: SPEC_VERSION,
        name: "flat".to_string(),
        backend: "exact".to_string(),
        brackets: vec![],
        phi: vec![
            f(1, 2, 3, "1"),
            f(1, 4, 5, "1"),
            f(1, 6, 7, "1"),
            f(2, 4, 6, "1"),
            f(2, 5, 7, "-1"),
            f(3, 4, 7, "-1"),
            f(3, 5, 6, "-1"),
        ],
        xi: Some(unit_xi(6)),
        u: None,
    }
}

/// Rank-one solvable frame `[e1, ej] = ej`, the hyperbolic-space algebra;
/// the unit field `e1` has nonzero divergence, which exercises the
/// divergence-driven exclusions.
pub fn hyperbolic() -> ManifoldSpec {
    let f = |i: u32, j: u32, k: u32, coeff: &str| FormEntry {
        i,
        j,
        k,
        coeff: coeff.to_string(),
    };
    ManifoldSpec {
        version: SPEC_VERSION,
        name: "hyperbolic".to_string(),
        backend: "exact".to_string(),
        brackets: (2..=7)
            .map(|j| BracketEntry {
                i: 1,
                j,
                k: j,
                value: "1".to_string(),
            })
            .collect(),
        phi: vec![
            f(1, 2, 3, "1"),
            f(1, 4, 5, "1"),
            f(1, 6, 7, "1"),
            f(2, 4, 6, "1"),
            f(2, 5, 7, "-1"),
            f(3, 4, 7, "-1"),
            f(3, 5, 6, "-1"),
        ],
        xi: Some(unit_xi(0)),
        u: None,
    }
}

fn unit_xi(position: usize) -> Vec<String> {
    (0..7)
        .map(|i| if i == position { "1" } else { "0" }.to_string())
        .collect()
}

pub fn builtin(name: &str) -> Option<ManifoldSpec> {
    match name {
        "sasakian3" => Some(sasakian3()),
        "flat" => Some(flat()),
        "hyperbolic" => Some(hyperbolic()),
        _ => None,
    }
}

pub fn builtin_examples() -> Vec<ManifoldSpec> {
    vec![sasakian3(), flat(), hyperbolic()]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Exact;
    use crate::testutil::{sasakian3_constants, sasakian3_phi};

    #[test]
    fn builtin_sasakian3_matches_fixtures() {
        let spec = sasakian3();
        assert_eq!(spec.brackets.len(), 9);
        assert_eq!(spec.phi.len(), 7);
        let c: StructureConstants<Exact> = spec.structure_constants().unwrap();
        assert_eq!(c, sasakian3_constants());
        let phi: KForm<Exact> = spec.phi_form().unwrap();
        assert_eq!(phi, sasakian3_phi());
        let xi: Option<Vector7<Exact>> = spec.default_xi().unwrap();
        assert_eq!(xi, Some(Vector7::basis(0)));
    }

    #[test]
    fn builtin_flat_is_abelian() {
        let spec = flat();
        let c: StructureConstants<Exact> = spec.structure_constants().unwrap();
        assert!(c.is_abelian());
    }

    #[test]
    fn roundtrip_preserves_values() {
        for spec in builtin_examples() {
            let text = spec.to_json();
            let back = ManifoldSpec::from_json(&text).unwrap();
            assert_eq!(spec, back);
        }
    }

    #[test]
    fn shape_errors_are_reported() {
        let mut spec = sasakian3();
        spec.brackets[0].i = 9;
        assert!(matches!(
            spec.check_shape(),
            Err(SpecError::IndexRange { value: 9, .. })
        ));

        let mut spec = sasakian3();
        spec.phi[0].j = 1;
        assert!(matches!(
            spec.check_shape(),
            Err(SpecError::IndexOrder { .. })
        ));

        let mut spec = sasakian3();
        spec.version = 2;
        assert!(matches!(spec.check_shape(), Err(SpecError::Version(2))));

        let mut spec = sasakian3();
        spec.u = Some(vec!["0".into(); 6]);
        assert!(matches!(spec.check_shape(), Err(SpecError::XiAndU)));
    }

    #[test]
    fn malformed_rational_names_the_field() {
        let mut spec = sasakian3();
        spec.brackets[2].value = "2/0".to_string();
        let err = spec.structure_constants::<Exact>().unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("brackets[2]"), "{msg}");
        assert!(msg.contains("zero denominator"), "{msg}");
    }

    #[test]
    fn stereographic_default_xi() {
        let mut spec = flat();
        spec.xi = None;
        spec.u = Some(vec![
            "1".into(),
            "1".into(),
            "0".into(),
            "0".into(),
            "0".into(),
            "0".into(),
        ]);
        let xi: Vector7<Exact> = spec.default_xi().unwrap().unwrap();
        assert_eq!(xi.norm2(), crate::testutil::q(1));
        assert_eq!(*xi.coord(0), crate::testutil::qr(2, 3));
    }
}

//! The on-disk format: one JSON document holding a field descriptor, named
//! algebras as sparse structure constants, and named laws referencing two
//! algebras.
//!
//! Serialization is canonical: sorted sparse entries, lowest-terms
//! coefficients, no explicit zeros, sorted object names. Emit-parse-emit is
//! byte-identical.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

use crate::linalg::LinMap;
use crate::scalar::{Field, Rat, Scalar};
use crate::wdl::WeakDistLaw;
use crate::wha::{WeakBialgebra, WhaError};

#[derive(Debug, Error)]
pub enum SpecError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0}")]
    Semantic(String),
    #[error("unknown target {0:?}")]
    UnknownTarget(String),
}

impl From<WhaError> for SpecError {
    fn from(e: WhaError) -> Self {
        SpecError::Semantic(e.to_string())
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(tag = "field")]
pub enum FieldSpec {
    Q,
    Fp { p: u64 },
    QExt { modulus: Vec<Value> },
}

impl FieldSpec {
    pub fn to_field(&self) -> Result<Field, SpecError> {
        match self {
            FieldSpec::Q => Ok(Field::rationals()),
            FieldSpec::Fp { p } => Field::prime(*p).map_err(|e| SpecError::Semantic(e.to_string())),
            FieldSpec::QExt { modulus } => {
                let coeffs: Result<Vec<Rat>, SpecError> =
                    modulus.iter().map(coeff_value_to_rat).collect();
                Field::extension(coeffs?).map_err(|e| SpecError::Semantic(e.to_string()))
            }
        }
    }

    pub fn from_field(f: &Field) -> FieldSpec {
        match f {
            Field::Rationals => FieldSpec::Q,
            Field::PrimeField(p) => FieldSpec::Fp { p: *p },
            Field::Extension(m) => FieldSpec::QExt {
                modulus: m.coeffs.iter().map(rat_to_coeff_value).collect(),
            },
        }
    }
}

fn coeff_value_to_rat(v: &Value) -> Result<Rat, SpecError> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(|i| Rat::from_integer(i.into()))
            .ok_or_else(|| SpecError::Parse(format!("non-integer modulus coefficient {n}"))),
        Value::String(s) => {
            let sc = Field::rationals()
                .parse(s)
                .map_err(|e| SpecError::Parse(e.to_string()))?;
            Ok(sc.as_rational().expect("rational field").clone())
        }
        other => Err(SpecError::Parse(format!("bad modulus coefficient {other}"))),
    }
}

fn rat_to_coeff_value(r: &Rat) -> Value {
    use num_traits::{One, ToPrimitive};
    if r.denom().is_one() {
        if let Some(i) = r.numer().to_i64() {
            return Value::Number(i.into());
        }
    }
    Value::String(r.to_string())
}

/// `[in1, in2, out, coeff]` sparse entry of a bilinear structure map.
pub type TrinomialEntry = (usize, usize, usize, String);
/// `[in1, in2, out1, out2, coeff]` sparse entry of a two-to-two map.
pub type LawEntry = (usize, usize, usize, usize, String);

/// Sparse structure constants of one weak bialgebra.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct AlgebraSpec {
    pub basis: Vec<String>,
    /// `[i, j, k, coeff]`: coefficient of `e_k` in `e_i e_j`.
    pub mu: Vec<TrinomialEntry>,
    /// Dense unit vector.
    pub eta: Vec<String>,
    /// `[i, p, q, coeff]`: coefficient of `e_p⊗e_q` in `Δ(e_i)`.
    pub delta: Vec<TrinomialEntry>,
    /// Dense counit vector.
    pub eps: Vec<String>,
    /// `[j, i, coeff]`: coefficient of `e_i` in `S(e_j)`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s: Option<Vec<(usize, usize, String)>>,
}

/// Sparse data of one weak distributive law between two named algebras.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct LawSpec {
    pub a: String,
    pub b: String,
    /// `[i, j, p, q, coeff]`: coefficient of `f_p⊗e_q` in `ψ(e_i⊗f_j)`
    /// (`e` in A, `f` in B).
    pub psi: Vec<LawEntry>,
    /// `[i, j, p, q, coeff]`: coefficient of `e_p⊗f_q` in `φ(f_i⊗e_j)`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub phi: Option<Vec<LawEntry>>,
}

/// One spec file: a field, named algebras, named laws.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct SpecFile {
    pub field: FieldSpec,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub algebras: BTreeMap<String, AlgebraSpec>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub laws: BTreeMap<String, LawSpec>,
}

/// A parsed algebra: the bialgebra plus its optional antipode.
#[derive(Debug, Clone)]
pub struct ResolvedAlgebra {
    pub wba: WeakBialgebra,
    pub antipode: Option<LinMap>,
}

impl SpecFile {
    pub fn parse_str(text: &str) -> Result<SpecFile, SpecError> {
        serde_json::from_str(text).map_err(|e| {
            SpecError::Parse(format!("line {}, column {}: {}", e.line(), e.column(), e))
        })
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("spec serialization");
        s.push('\n');
        s
    }

    pub fn resolve_field(&self) -> Result<Field, SpecError> {
        self.field.to_field()
    }

    /// Parse one named algebra into verified-shape structure maps; axioms
    /// are not checked here.
    pub fn resolve_algebra(&self, name: &str) -> Result<ResolvedAlgebra, SpecError> {
        let spec = self
            .algebras
            .get(name)
            .ok_or_else(|| SpecError::UnknownTarget(name.to_string()))?;
        let field = self.resolve_field()?;
        resolve_algebra_spec(name, spec, &field)
    }

    /// Parse one named law together with its two algebras.
    pub fn resolve_law(&self, name: &str) -> Result<WeakDistLaw, SpecError> {
        let spec = self
            .laws
            .get(name)
            .ok_or_else(|| SpecError::UnknownTarget(name.to_string()))?;
        let a = self.resolve_algebra(&spec.a)?;
        let b = self.resolve_algebra(&spec.b)?;
        let field = self.resolve_field()?;
        let (da, db) = (a.wba.dim(), b.wba.dim());
        let ctx = |what: &str| format!("law {name:?}, {what}");
        let dom_psi = a.wba.space().tensor(&b.wba.space());
        let cod_psi = b.wba.space().tensor(&a.wba.space());
        let mut psi_entries = vec![];
        for (n_entry, (i, j, p, q, c)) in spec.psi.iter().enumerate() {
            if *i >= da || *j >= db || *p >= db || *q >= da {
                return Err(SpecError::Semantic(format!(
                    "{}: index out of range",
                    ctx(&format!("psi entry {n_entry}"))
                )));
            }
            let v = parse_coeff(&field, c, &ctx(&format!("psi entry {n_entry}")))?;
            psi_entries.push((p * da + q, i * db + j, v));
        }
        let psi =
            LinMap::from_entries(field.clone(), dom_psi.clone(), cod_psi.clone(), psi_entries);
        let mut law = WeakDistLaw::new(a.wba, b.wba, psi);
        if let Some(phi_spec) = &spec.phi {
            let mut phi_entries = vec![];
            for (n_entry, (i, j, p, q, c)) in phi_spec.iter().enumerate() {
                if *i >= db || *j >= da || *p >= da || *q >= db {
                    return Err(SpecError::Semantic(format!(
                        "{}: index out of range",
                        ctx(&format!("phi entry {n_entry}"))
                    )));
                }
                let v = parse_coeff(&field, c, &ctx(&format!("phi entry {n_entry}")))?;
                phi_entries.push((p * db + q, i * da + j, v));
            }
            law = law.with_phi(LinMap::from_entries(field, cod_psi, dom_psi, phi_entries));
        }
        law = law.with_antipodes(a.antipode, b.antipode);
        Ok(law)
    }

    /// Names of all objects the file defines.
    pub fn target_names(&self) -> Vec<String> {
        self.algebras
            .keys()
            .chain(self.laws.keys())
            .cloned()
            .collect()
    }
}

fn parse_coeff(field: &Field, c: &str, ctx: &str) -> Result<Scalar, SpecError> {
    field
        .parse(c)
        .map_err(|e| SpecError::Semantic(format!("{ctx}: {e}")))
}

fn resolve_algebra_spec(
    name: &str,
    spec: &AlgebraSpec,
    field: &Field,
) -> Result<ResolvedAlgebra, SpecError> {
    let d = spec.basis.len();
    if d == 0 {
        return Err(SpecError::Semantic(format!(
            "algebra {name:?}: dimension must be positive"
        )));
    }
    if spec.eta.len() != d || spec.eps.len() != d {
        return Err(SpecError::Semantic(format!(
            "algebra {name:?}: eta/eps must have length {d}"
        )));
    }
    let ctx = |what: String| format!("algebra {name:?}, {what}");
    let h = crate::linalg::Space::line(d);
    let hh = h.tensor(&h);

    let mut mu_entries = vec![];
    for (n_e, (i, j, k, c)) in spec.mu.iter().enumerate() {
        if *i >= d || *j >= d || *k >= d {
            return Err(SpecError::Semantic(format!(
                "{}: index out of range",
                ctx(format!("mu entry {n_e}"))
            )));
        }
        mu_entries.push((
            *k,
            i * d + j,
            parse_coeff(field, c, &ctx(format!("mu entry {n_e}")))?,
        ));
    }
    let mu = LinMap::from_entries(field.clone(), hh.clone(), h.clone(), mu_entries);

    let mut eta_entries = vec![];
    for (k, c) in spec.eta.iter().enumerate() {
        let v = parse_coeff(field, c, &ctx(format!("eta component {k}")))?;
        if !v.is_zero() {
            eta_entries.push((k, 0, v));
        }
    }
    let eta = LinMap::from_entries(
        field.clone(),
        crate::linalg::Space::scalar(),
        h.clone(),
        eta_entries,
    );

    let mut delta_entries = vec![];
    for (n_e, (i, p, q, c)) in spec.delta.iter().enumerate() {
        if *i >= d || *p >= d || *q >= d {
            return Err(SpecError::Semantic(format!(
                "{}: index out of range",
                ctx(format!("delta entry {n_e}"))
            )));
        }
        delta_entries.push((
            p * d + q,
            *i,
            parse_coeff(field, c, &ctx(format!("delta entry {n_e}")))?,
        ));
    }
    let delta = LinMap::from_entries(field.clone(), h.clone(), hh, delta_entries);

    let mut eps_entries = vec![];
    for (k, c) in spec.eps.iter().enumerate() {
        let v = parse_coeff(field, c, &ctx(format!("eps component {k}")))?;
        if !v.is_zero() {
            eps_entries.push((0, k, v));
        }
    }
    let eps = LinMap::from_entries(
        field.clone(),
        h.clone(),
        crate::linalg::Space::scalar(),
        eps_entries,
    );

    let wba = WeakBialgebra::new(name, field.clone(), spec.basis.clone(), mu, eta, delta, eps)?;
    let antipode = match &spec.s {
        None => None,
        Some(entries) => {
            let mut s_entries = vec![];
            for (n_e, (j, i, c)) in entries.iter().enumerate() {
                if *i >= d || *j >= d {
                    return Err(SpecError::Semantic(format!(
                        "{}: index out of range",
                        ctx(format!("s entry {n_e}"))
                    )));
                }
                s_entries.push((
                    *i,
                    *j,
                    parse_coeff(field, c, &ctx(format!("s entry {n_e}")))?,
                ));
            }
            Some(LinMap::from_entries(field.clone(), h.clone(), h, s_entries))
        }
    };
    Ok(ResolvedAlgebra { wba, antipode })
}

/// Canonical sparse export of a weak bialgebra.
pub fn algebra_to_spec(wba: &WeakBialgebra, antipode: Option<&LinMap>) -> AlgebraSpec {
    let d = wba.dim();
    let mut mu = vec![];
    for i in 0..d {
        for j in 0..d {
            for (k, v) in wba.mu.col(i * d + j) {
                mu.push((i, j, *k, v.render()));
            }
        }
    }
    let mut delta = vec![];
    for i in 0..d {
        for (pq, v) in wba.delta.col(i) {
            delta.push((i, pq / d, pq % d, v.render()));
        }
    }
    let eta = (0..d).map(|k| wba.eta.entry(k, 0).render()).collect();
    let eps = (0..d).map(|k| wba.eps.entry(0, k).render()).collect();
    let s = antipode.map(|s| {
        let mut out = vec![];
        for j in 0..d {
            for (i, v) in s.col(j) {
                out.push((j, *i, v.render()));
            }
        }
        out
    });
    AlgebraSpec {
        basis: wba.labels().to_vec(),
        mu,
        eta,
        delta,
        eps,
        s,
    }
}

/// Canonical sparse export of a law (the two algebras must be exported
/// separately under the referenced names).
pub fn law_to_spec(law: &WeakDistLaw, a_name: &str, b_name: &str) -> LawSpec {
    let (da, db) = (law.a.dim(), law.b.dim());
    let mut psi = vec![];
    for i in 0..da {
        for j in 0..db {
            for (pq, v) in law.psi.col(i * db + j) {
                psi.push((i, j, pq / da, pq % da, v.render()));
            }
        }
    }
    let phi = law.phi.as_ref().map(|phi| {
        let mut out = vec![];
        for i in 0..db {
            for j in 0..da {
                for (pq, v) in phi.col(i * da + j) {
                    out.push((i, j, pq / db, pq % db, v.render()));
                }
            }
        }
        out
    });
    LawSpec {
        a: a_name.to_string(),
        b: b_name.to_string(),
        psi,
        phi,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gallery;

    fn q() -> Field {
        Field::rationals()
    }

    fn m2_file() -> SpecFile {
        let m2 = gallery::matrix_wha(2, &q()).unwrap();
        let mut algebras = BTreeMap::new();
        algebras.insert(
            "m2".to_string(),
            algebra_to_spec(&m2.wba, Some(&m2.antipode)),
        );
        SpecFile {
            field: FieldSpec::Q,
            algebras,
            laws: BTreeMap::new(),
        }
    }

    #[test]
    fn emit_parse_emit_is_byte_identical() {
        let file = m2_file();
        let once = file.to_json();
        let twice = SpecFile::parse_str(&once).unwrap().to_json();
        assert_eq!(once, twice);
    }

    #[test]
    fn resolved_algebra_round_trips_structure() {
        let file = m2_file();
        let resolved = file.resolve_algebra("m2").unwrap();
        let m2 = gallery::matrix_wha(2, &q()).unwrap();
        assert!(resolved
            .wba
            .mu
            .equal_with_witness(&m2.wba.mu)
            .unwrap()
            .is_none());
        assert!(resolved
            .wba
            .delta
            .equal_with_witness(&m2.wba.delta)
            .unwrap()
            .is_none());
        assert!(resolved
            .antipode
            .unwrap()
            .equal_with_witness(&m2.antipode)
            .unwrap()
            .is_none());
        assert!(resolved.wba.verify().all_pass());
    }

    #[test]
    fn law_round_trip() {
        let law = gallery::blown_up_nothing_law(2, &q()).unwrap();
        let mut algebras = BTreeMap::new();
        algebras.insert("l".into(), algebra_to_spec(&law.a, None));
        algebras.insert("u".into(), algebra_to_spec(&law.b, None));
        let mut laws = BTreeMap::new();
        laws.insert("blowup".into(), law_to_spec(&law, "l", "u"));
        let file = SpecFile {
            field: FieldSpec::Q,
            algebras,
            laws,
        };
        let parsed = SpecFile::parse_str(&file.to_json()).unwrap();
        let resolved = parsed.resolve_law("blowup").unwrap();
        assert!(resolved.psi.equal_with_witness(&law.psi).unwrap().is_none());
        assert!(resolved
            .phi
            .unwrap()
            .equal_with_witness(law.phi.as_ref().unwrap())
            .unwrap()
            .is_none());
    }

    #[test]
    fn empty_algebra_is_rejected() {
        let text = r#"{"field":{"field":"Q"},"algebras":{"bad":{"basis":[],"mu":[],"eta":[],"delta":[],"eps":[]}}}"#;
        let file = SpecFile::parse_str(text).unwrap();
        match file.resolve_algebra("bad") {
            Err(SpecError::Semantic(msg)) => assert!(msg.contains("dimension must be positive")),
            other => panic!("expected semantic error, got {other:?}"),
        }
    }

    #[test]
    fn unknown_target_is_reported() {
        let file = m2_file();
        assert!(matches!(
            file.resolve_algebra("nope"),
            Err(SpecError::UnknownTarget(_))
        ));
    }

    #[test]
    fn field_specs_round_trip() {
        for f in [
            Field::rationals(),
            Field::prime(5).unwrap(),
            Field::cyclotomic(3).unwrap(),
        ] {
            let spec = FieldSpec::from_field(&f);
            let back = spec.to_field().unwrap();
            assert_eq!(f, back);
        }
        // the documented wire form
        let spec: FieldSpec =
            serde_json::from_str(r#"{"field":"QExt","modulus":[1,1,1]}"#).unwrap();
        assert_eq!(spec.to_field().unwrap(), Field::cyclotomic(3).unwrap());
    }

    #[test]
    fn syntax_errors_carry_positions() {
        match SpecFile::parse_str("{\n  \"field\": oops\n}") {
            Err(SpecError::Parse(msg)) => assert!(msg.contains("line 2")),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn cyclotomic_coefficients_round_trip_in_files() {
        let f = Field::cyclotomic(3).unwrap();
        let law = gallery::quantum_torus(3, 3, &f).unwrap();
        let mut algebras = BTreeMap::new();
        algebras.insert("u".into(), algebra_to_spec(&law.b, law.antipode_b.as_ref()));
        algebras.insert("v".into(), algebra_to_spec(&law.a, law.antipode_a.as_ref()));
        let mut laws = BTreeMap::new();
        laws.insert("qt".into(), law_to_spec(&law, "v", "u"));
        let file = SpecFile {
            field: FieldSpec::from_field(&f),
            algebras,
            laws,
        };
        let text = file.to_json();
        let parsed = SpecFile::parse_str(&text).unwrap();
        assert_eq!(text, parsed.to_json());
        let resolved = parsed.resolve_law("qt").unwrap();
        assert!(resolved.psi.equal_with_witness(&law.psi).unwrap().is_none());
    }
}

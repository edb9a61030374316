//! Axiom reports: every verifier in the crate produces a list of named
//! checks with pass/fail verdicts and, on failure, a witness naming the
//! first basis column where the two sides of a map identity differ.
//!
//! The JSON schema is stable: `{target, checks:[{id, pass, witness?, note?}],
//! derived:{dims, ranks}}`; the text format renders the same data.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::linalg::{paths_agree, LinMap, MapWitness, Path};
use crate::scalar::{Field, Scalar};

/// Labels for the tensor factors of a space, used to decode witness columns.
#[derive(Debug, Clone)]
pub struct LabelCtx {
    factors: Vec<Vec<String>>,
}

impl LabelCtx {
    pub fn new(factors: Vec<Vec<String>>) -> LabelCtx {
        LabelCtx {
            factors: factors.into_iter().filter(|f| f.len() != 1).collect(),
        }
    }

    /// Numeric labels `0..dim` for each factor.
    pub fn anonymous(dims: &[usize]) -> LabelCtx {
        LabelCtx::new(
            dims.iter()
                .map(|&d| (0..d).map(|i| i.to_string()).collect())
                .collect(),
        )
    }

    pub fn scalar() -> LabelCtx {
        LabelCtx { factors: vec![] }
    }

    fn dim(&self) -> usize {
        self.factors.iter().map(|f| f.len()).product()
    }

    /// Decode a flat basis index into `a⊗b⊗c` notation.
    pub fn basis_label(&self, mut index: usize) -> String {
        if self.factors.is_empty() {
            return "1".to_string();
        }
        let mut parts = vec![String::new(); self.factors.len()];
        for (i, f) in self.factors.iter().enumerate().rev() {
            parts[i] = f[index % f.len()].clone();
            index /= f.len();
        }
        parts.join("⊗")
    }

    /// Render a dense vector as a signed combination of basis labels.
    pub fn vector_label(&self, dense: &[Scalar]) -> String {
        let mut out = String::new();
        for (i, v) in dense.iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            if !out.is_empty() {
                out.push_str(" + ");
            }
            if v.is_one() {
                out.push_str(&self.basis_label(i));
            } else {
                let _ = write!(out, "({})·{}", v.render(), self.basis_label(i));
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

/// Failure witness: the first basis column where two composites differ.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct Witness {
    pub column: usize,
    pub basis: String,
    pub left: String,
    pub right: String,
}

impl Witness {
    pub fn from_map_witness(w: &MapWitness, dom: &LabelCtx, cod: &LabelCtx) -> Witness {
        debug_assert!(dom.dim() == 0 || w.column < dom.dim().max(1));
        Witness {
            column: w.column,
            basis: dom.basis_label(w.column),
            left: cod.vector_label(&w.left),
            right: cod.vector_label(&w.right),
        }
    }
}

/// One named axiom check.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Check {
    pub id: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// Derived quantities reported alongside the checks.
#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct Derived {
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub dims: BTreeMap<String, usize>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub ranks: BTreeMap<String, usize>,
}

/// A verification report over one target object.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AxiomReport {
    pub target: String,
    pub checks: Vec<Check>,
    #[serde(default)]
    pub derived: Derived,
}

impl AxiomReport {
    pub fn new(target: impl Into<String>) -> AxiomReport {
        AxiomReport {
            target: target.into(),
            checks: vec![],
            derived: Derived::default(),
        }
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failed_ids(&self) -> Vec<&str> {
        self.checks
            .iter()
            .filter(|c| !c.pass)
            .map(|c| c.id.as_str())
            .collect()
    }

    pub fn check(&mut self, id: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.id == id)
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn push_pass(&mut self, id: &str) {
        self.checks.push(Check {
            id: id.into(),
            pass: true,
            witness: None,
            note: None,
        });
    }

    pub fn push_outcome(&mut self, id: &str, pass: bool, witness: Option<Witness>) {
        self.checks.push(Check {
            id: id.into(),
            pass,
            witness,
            note: None,
        });
    }

    pub fn push_note(&mut self, id: &str, pass: bool, note: impl Into<String>) {
        self.checks.push(Check {
            id: id.into(),
            pass,
            witness: None,
            note: Some(note.into()),
        });
    }

    /// Compare two explicit maps as one named check.
    pub fn check_maps(
        &mut self,
        id: &str,
        lhs: &LinMap,
        rhs: &LinMap,
        dom: &LabelCtx,
        cod: &LabelCtx,
    ) {
        match lhs.equal_with_witness(rhs) {
            Ok(None) => self.push_pass(id),
            Ok(Some(w)) => {
                self.push_outcome(id, false, Some(Witness::from_map_witness(&w, dom, cod)))
            }
            Err(e) => self.push_note(id, false, format!("shape error: {e}")),
        }
    }

    /// Compare two composite paths (evaluated sparsely) as one named check.
    pub fn check_paths(
        &mut self,
        id: &str,
        field: &Field,
        lhs: &Path,
        rhs: &Path,
        dom: &LabelCtx,
        cod: &LabelCtx,
    ) {
        match paths_agree(field, lhs, rhs) {
            None => self.push_pass(id),
            Some(w) => self.push_outcome(id, false, Some(Witness::from_map_witness(&w, dom, cod))),
        }
    }

    /// Append all checks of `other`, prefixing their ids.
    pub fn absorb(&mut self, prefix: &str, other: AxiomReport) {
        for mut c in other.checks {
            c.id = format!("{prefix}.{}", c.id);
            self.checks.push(c);
        }
        self.derived.dims.extend(other.derived.dims);
        self.derived.ranks.extend(other.derived.ranks);
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization")
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "target: {}", self.target);
        for c in &self.checks {
            let verdict = if c.pass { "PASS" } else { "FAIL" };
            let _ = write!(out, "  [{verdict}] {}", c.id);
            if let Some(n) = &c.note {
                let _ = write!(out, "  ({n})");
            }
            let _ = writeln!(out);
            if let Some(w) = &c.witness {
                let _ = writeln!(out, "         column {} = {}", w.column, w.basis);
                let _ = writeln!(out, "         lhs: {}", w.left);
                let _ = writeln!(out, "         rhs: {}", w.right);
            }
        }
        for (k, v) in &self.derived.dims {
            let _ = writeln!(out, "  dim {k} = {v}");
        }
        for (k, v) in &self.derived.ranks {
            let _ = writeln!(out, "  rank {k} = {v}");
        }
        let _ = writeln!(
            out,
            "  => {}",
            if self.all_pass() {
                "all checks passed"
            } else {
                "FAILURES PRESENT"
            }
        );
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Space;

    #[test]
    fn witness_labels_decode_mixed_radix() {
        let ctx = LabelCtx::new(vec![
            vec!["a".into(), "b".into()],
            vec!["x".into(), "y".into(), "z".into()],
        ]);
        assert_eq!(ctx.basis_label(0), "a⊗x");
        assert_eq!(ctx.basis_label(5), "b⊗z");
    }

    #[test]
    fn check_maps_produces_witness() {
        let f = Field::rationals();
        let id = LinMap::identity(f.clone(), Space::new(vec![2, 2]));
        let tw = LinMap::twist(f.clone(), &Space::line(2), &Space::line(2));
        let ctx = LabelCtx::anonymous(&[2, 2]);
        let mut r = AxiomReport::new("t");
        r.check_maps("id_vs_twist", &id, &tw, &ctx, &ctx);
        assert!(!r.all_pass());
        let w = r.checks[0].witness.as_ref().unwrap();
        assert_eq!(w.column, 1);
        assert_eq!(w.basis, "0⊗1");
        assert_eq!(w.left, "0⊗1");
        assert_eq!(w.right, "1⊗0");
    }

    #[test]
    fn json_schema_shape() {
        let mut r = AxiomReport::new("m2");
        r.push_pass("assoc");
        r.derived.dims.insert("m2".into(), 4);
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["target"], "m2");
        assert_eq!(v["checks"][0]["id"], "assoc");
        assert_eq!(v["checks"][0]["pass"], true);
        assert_eq!(v["derived"]["dims"]["m2"], 4);
    }
}

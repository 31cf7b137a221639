//! JSON file formats.
//!
//! Complex numbers serialize as `[re, im]` pairs everywhere.
//!
//! * matrix: `{"dim": d, "entries": [[[re,im], ...], ...]}` row-major
//! * state: `{"dim": d, "amplitudes": [[re,im], ...]}`
//! * observable: a matrix object with an optional `"spectrum"` array of
//!   precomputed eigenvalues, validated against the computed spectrum
//! * quantum real: `{"jumps": [...], "levels": [<matrix>, ...]}`
//! * registry: `{"sets": {"name": <qset>, ...}}` where a qset is
//!   `{"dim": d, "entries": [{"child": <qset or name>, "weight": <matrix>}]}`
//!   and a child given as a string resolves through the same document

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::Projection;
use crate::linalg::{Complex64, ComplexMatrix, StateVector, Tolerance};
use crate::reals::{Observable, QuantumReal};
use crate::universe::{QSet, Registry};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MatrixJson {
    pub dim: usize,
    pub entries: Vec<Vec<[f64; 2]>>,
}

impl MatrixJson {
    pub fn from_matrix(m: &ComplexMatrix) -> Self {
        MatrixJson {
            dim: m.rows(),
            entries: (0..m.rows())
                .map(|r| {
                    (0..m.cols())
                        .map(|c| {
                            let z = m.get(r, c);
                            [z.re, z.im]
                        })
                        .collect()
                })
                .collect(),
        }
    }

    pub fn to_matrix(&self) -> Result<ComplexMatrix> {
        if self.entries.len() != self.dim {
            return Err(Error::InvalidInput(format!(
                "matrix declares dim {} but has {} rows",
                self.dim,
                self.entries.len()
            )));
        }
        let mut data = Vec::with_capacity(self.dim * self.dim);
        for row in &self.entries {
            if row.len() != self.dim {
                return Err(Error::InvalidInput(format!(
                    "matrix declares dim {} but a row has {} entries",
                    self.dim,
                    row.len()
                )));
            }
            for &[re, im] in row {
                data.push(Complex64::new(re, im));
            }
        }
        ComplexMatrix::from_data(self.dim, self.dim, data)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct StateJson {
    pub dim: usize,
    pub amplitudes: Vec<[f64; 2]>,
}

impl StateJson {
    pub fn from_state(s: &StateVector) -> Self {
        StateJson {
            dim: s.dim(),
            amplitudes: s.amplitudes().iter().map(|z| [z.re, z.im]).collect(),
        }
    }

    pub fn to_state(&self) -> Result<StateVector> {
        if self.amplitudes.len() != self.dim {
            return Err(Error::InvalidInput(format!(
                "state declares dim {} but has {} amplitudes",
                self.dim,
                self.amplitudes.len()
            )));
        }
        StateVector::new(
            self.amplitudes
                .iter()
                .map(|&[re, im]| Complex64::new(re, im))
                .collect(),
        )
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ObservableJson {
    #[serde(flatten)]
    pub matrix: MatrixJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spectrum: Option<Vec<f64>>,
}

impl ObservableJson {
    pub fn from_observable(o: &Observable) -> Self {
        ObservableJson {
            matrix: MatrixJson::from_matrix(o.matrix()),
            spectrum: Some(o.spectrum().to_vec()),
        }
    }

    /// Decode and diagonalize; a declared spectrum must match the
    /// computed one within `eps_compare`.
    pub fn to_observable(&self, tol: &Tolerance) -> Result<Observable> {
        let obs = Observable::from_matrix(self.matrix.to_matrix()?, tol)?;
        if let Some(declared) = &self.spectrum {
            if declared.len() != obs.spectrum().len() {
                return Err(Error::InvalidInput(format!(
                    "declared spectrum has {} points, computed {}",
                    declared.len(),
                    obs.spectrum().len()
                )));
            }
            for (d, c) in declared.iter().zip(obs.spectrum()) {
                if (d - c).abs() > tol.eps_compare {
                    return Err(Error::InvalidInput(format!(
                        "declared spectrum point {d} does not match computed {c}"
                    )));
                }
            }
        }
        Ok(obs)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct QuantumRealJson {
    pub jumps: Vec<f64>,
    pub levels: Vec<MatrixJson>,
}

impl QuantumRealJson {
    pub fn from_real(u: &QuantumReal) -> Self {
        QuantumRealJson {
            jumps: u.jumps().to_vec(),
            levels: u
                .levels()
                .iter()
                .map(|p| MatrixJson::from_matrix(p.matrix()))
                .collect(),
        }
    }

    pub fn to_real(&self, tol: &Tolerance) -> Result<QuantumReal> {
        let levels = self
            .levels
            .iter()
            .map(|m| Projection::new(m.to_matrix()?, tol))
            .collect::<Result<Vec<_>>>()?;
        QuantumReal::new(self.jumps.clone(), levels, tol)
    }
}

/// A child is either a reference to a registry name or an inline element.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ChildJson {
    Name(String),
    Inline(QSetJson),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct QSetEntryJson {
    pub child: ChildJson,
    pub weight: MatrixJson,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct QSetJson {
    pub dim: usize,
    pub entries: Vec<QSetEntryJson>,
}

impl QSetJson {
    /// Fully inlined encoding (name references are not reconstructed).
    pub fn from_qset(u: &QSet) -> Self {
        QSetJson {
            dim: u.dim(),
            entries: u
                .entries()
                .iter()
                .map(|(child, weight)| QSetEntryJson {
                    child: ChildJson::Inline(QSetJson::from_qset(child)),
                    weight: MatrixJson::from_matrix(weight.matrix()),
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RegistryJson {
    pub sets: BTreeMap<String, QSetJson>,
}

impl RegistryJson {
    pub fn from_registry(reg: &Registry) -> Self {
        RegistryJson {
            sets: reg
                .iter()
                .map(|(name, u)| (name.clone(), QSetJson::from_qset(u)))
                .collect(),
        }
    }

    /// Resolve every named element. Name references resolve through the
    /// same document and share the resolved object; reference cycles are
    /// rejected (ranks must strictly decrease, so a cycle can never be a
    /// valid element).
    pub fn resolve(&self, tol: &Tolerance) -> Result<Registry> {
        let mut resolved: Registry = Registry::new();
        let mut in_progress: Vec<String> = Vec::new();
        for name in self.sets.keys() {
            self.resolve_name(name, tol, &mut resolved, &mut in_progress)?;
        }
        Ok(resolved)
    }

    fn resolve_name(
        &self,
        name: &str,
        tol: &Tolerance,
        resolved: &mut Registry,
        in_progress: &mut Vec<String>,
    ) -> Result<QSet> {
        if let Some(done) = resolved.get(name) {
            return Ok(done.clone());
        }
        if in_progress.iter().any(|n| n == name) {
            return Err(Error::InvalidInput(format!(
                "cyclic name reference through `{name}`"
            )));
        }
        let spec = self.sets.get(name).ok_or_else(|| Error::UnknownName {
            name: name.to_string(),
            position: 0,
        })?;
        in_progress.push(name.to_string());
        let out = self.resolve_qset(spec, tol, resolved, in_progress);
        in_progress.pop();
        let out = out?;
        resolved.insert(name.to_string(), out.clone());
        Ok(out)
    }

    fn resolve_qset(
        &self,
        spec: &QSetJson,
        tol: &Tolerance,
        resolved: &mut Registry,
        in_progress: &mut Vec<String>,
    ) -> Result<QSet> {
        let mut entries = Vec::with_capacity(spec.entries.len());
        for entry in &spec.entries {
            let child = match &entry.child {
                ChildJson::Name(child_name) => {
                    self.resolve_name(child_name, tol, resolved, in_progress)?
                }
                ChildJson::Inline(inline) => {
                    self.resolve_qset(inline, tol, resolved, in_progress)?
                }
            };
            let weight = Projection::new(entry.weight.to_matrix()?, tol)?;
            entries.push((child, weight));
        }
        QSet::new(spec.dim, entries)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::universe::{check_embed, HfSet};

    fn tol() -> Tolerance {
        Tolerance::default()
    }

    #[test]
    fn matrix_round_trip() {
        let mut m = ComplexMatrix::zeros(2, 2);
        m.set(0, 1, Complex64::new(0.5, -0.25));
        m.set(1, 0, Complex64::new(0.5, 0.25));
        let encoded = serde_json::to_string(&MatrixJson::from_matrix(&m)).unwrap();
        let decoded: MatrixJson = serde_json::from_str(&encoded).unwrap();
        assert!(decoded.to_matrix().unwrap().distance(&m) < 1e-15);
    }

    #[test]
    fn matrix_shape_is_validated() {
        let bad: MatrixJson = serde_json::from_str(r#"{"dim":2,"entries":[[[1,0]]]}"#).unwrap();
        assert!(bad.to_matrix().is_err());
    }

    #[test]
    fn registry_with_name_references() {
        let text = r#"{
            "sets": {
                "zero": {"dim": 2, "entries": []},
                "one": {"dim": 2, "entries": [
                    {"child": "zero",
                     "weight": {"dim": 2, "entries": [[[1,0],[0,0]],[[0,0],[1,0]]]}}
                ]}
            }
        }"#;
        let doc: RegistryJson = serde_json::from_str(text).unwrap();
        let reg = doc.resolve(&tol()).unwrap();
        let one = reg.get("one").unwrap();
        assert_eq!(one.rank(), 1);
        assert!(one.entries()[0].0.same_object(reg.get("zero").unwrap()));
    }

    #[test]
    fn registry_cycle_is_rejected() {
        let text = r#"{
            "sets": {
                "a": {"dim": 2, "entries": [
                    {"child": "a",
                     "weight": {"dim": 2, "entries": [[[1,0],[0,0]],[[0,0],[1,0]]]}}
                ]}
            }
        }"#;
        let doc: RegistryJson = serde_json::from_str(text).unwrap();
        assert!(doc.resolve(&tol()).is_err());
    }

    #[test]
    fn qset_inline_round_trip() {
        let two = check_embed(&HfSet::nat(2), 2).unwrap();
        let encoded = serde_json::to_string(&QSetJson::from_qset(&two)).unwrap();
        let decoded: QSetJson = serde_json::from_str(&encoded).unwrap();
        let doc = RegistryJson {
            sets: [("two".to_string(), decoded)].into_iter().collect(),
        };
        let reg = doc.resolve(&tol()).unwrap();
        assert_eq!(reg.get("two").unwrap().rank(), 2);
    }

    #[test]
    fn observable_spectrum_validation() {
        let m = MatrixJson::from_matrix(&ComplexMatrix::diagonal(&[0.0, 1.0]));
        let ok = ObservableJson {
            matrix: m.clone(),
            spectrum: Some(vec![0.0, 1.0]),
        };
        assert!(ok.to_observable(&tol()).is_ok());
        let bad = ObservableJson {
            matrix: m,
            spectrum: Some(vec![0.0, 2.0]),
        };
        assert!(bad.to_observable(&tol()).is_err());
    }

    #[test]
    fn real_round_trip() {
        let obs = Observable::from_matrix(ComplexMatrix::diagonal(&[0.0, 1.0]), &tol()).unwrap();
        let u = crate::reals::observable_to_real(&obs);
        let encoded = serde_json::to_string(&QuantumRealJson::from_real(&u)).unwrap();
        let decoded: QuantumRealJson = serde_json::from_str(&encoded).unwrap();
        let back = decoded.to_real(&tol()).unwrap();
        assert_eq!(back.jumps(), u.jumps());
    }
}

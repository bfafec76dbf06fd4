//! On-disk formats: space files, relation-basis files and report files.
//!
//! All files are JSON with rationals written as strings (`"p/q"` or `"p"`).
//!
//! ```json
//! {
//!   "dim": 2,
//!   "structure": [
//!     { "degree": 2, "matrix": [["0","0","0","0"], ["0","1","0","0"],
//!                               ["0","-2","0","0"], ["0","0","0","0"]] }
//!   ]
//! }
//! ```

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Rational, Subspace};
use crate::report::VerificationReport;
use crate::space::EquippedSpace;

pub const GENERATOR_CONVENTION: &str =
    "generator t_i^j = w^j (x) v_i of hom[W,V] sits at flat index j*dim(V) + i";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StructureEntry {
    pub degree: usize,
    pub matrix: Vec<Vec<Rational>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpaceFile {
    pub dim: usize,
    pub structure: Vec<StructureEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generator_convention: Option<String>,
}

impl SpaceFile {
    pub fn from_space(space: &EquippedSpace) -> Self {
        SpaceFile {
            dim: space.dim(),
            structure: space
                .structures()
                .iter()
                .map(|(&degree, m)| StructureEntry {
                    degree,
                    matrix: m.row_vecs(),
                })
                .collect(),
            generator_convention: None,
        }
    }

    pub fn with_generator_convention(mut self) -> Self {
        self.generator_convention = Some(GENERATOR_CONVENTION.to_string());
        self
    }

    /// Validates and converts to an [`EquippedSpace`].
    pub fn to_space(&self) -> Result<EquippedSpace> {
        let mut structure = BTreeMap::new();
        for entry in &self.structure {
            let size = self.dim.checked_pow(entry.degree as u32).ok_or_else(|| {
                Error::InvalidStructure(format!("degree {} too large", entry.degree))
            })?;
            let rows = entry.matrix.len();
            if rows != size || entry.matrix.iter().any(|r| r.len() != size) {
                return Err(Error::InvalidStructure(format!(
                    "degree {} matrix must be {size}x{size}",
                    entry.degree
                )));
            }
            let m = Matrix::from_rows(size, entry.matrix.clone())?;
            if structure.insert(entry.degree, m).is_some() {
                return Err(Error::InvalidStructure(format!(
                    "duplicate degree {}",
                    entry.degree
                )));
            }
        }
        EquippedSpace::new(self.dim, structure)
    }

    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    /// Canonical text form: pretty JSON with a trailing newline.
    pub fn to_text(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serializable");
        s.push('\n');
        s
    }
}

pub fn read_space(path: &Path) -> Result<EquippedSpace> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    SpaceFile::parse(&text)?.to_space()
}

pub fn write_space(path: &Path, file: &SpaceFile) -> Result<()> {
    std::fs::write(path, file.to_text())?;
    Ok(())
}

/// A relation span given by spanning vectors in `V^{⊗degree}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RelationFile {
    pub dim: usize,
    #[serde(default = "default_degree")]
    pub degree: usize,
    pub basis: Vec<Vec<Rational>>,
}

fn default_degree() -> usize {
    2
}

impl RelationFile {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_subspace(&self) -> Result<Subspace> {
        if self.dim == 0 || self.degree < 2 {
            return Err(Error::InvalidStructure(
                "relation file needs dim ≥ 1 and degree ≥ 2".into(),
            ));
        }
        let ambient = self.dim.pow(self.degree as u32);
        if let Some(bad) = self.basis.iter().find(|v| v.len() != ambient) {
            return Err(Error::InvalidStructure(format!(
                "relation vector of length {}, expected {ambient}",
                bad.len()
            )));
        }
        Subspace::span(ambient, &self.basis)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportFile {
    pub command: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hilbert: Option<Vec<usize>>,
    pub checks: Vec<VerificationReport>,
    pub pass: bool,
}

impl ReportFile {
    /// Sorts checks by name and sets the overall flag.
    pub fn new(command: Vec<String>, mut checks: Vec<VerificationReport>) -> Self {
        checks.sort_by(|a, b| a.name.cmp(&b.name));
        let pass = checks.iter().all(|c| c.pass);
        ReportFile {
            command,
            hilbert: None,
            checks,
            pass,
        }
    }

    pub fn to_text(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serializable");
        s.push('\n');
        s
    }

    pub fn to_pretty(&self) -> String {
        let mut out = format!("$ {}\n", self.command.join(" "));
        if let Some(h) = &self.hilbert {
            for (n, d) in h.iter().enumerate() {
                out.push_str(&format!("degree {n}: {d}\n"));
            }
        }
        for c in &self.checks {
            out.push_str(&c.summary());
            out.push('\n');
        }
        out.push_str(if self.pass { "overall: pass\n" } else { "overall: FAIL\n" });
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presets::quantum_plane;

    #[test]
    fn space_file_round_trip() {
        let qp = quantum_plane(Rational::from(2));
        let file = SpaceFile::from_space(&qp);
        let text = file.to_text();
        let back = SpaceFile::parse(&text).unwrap();
        assert_eq!(back, file);
        assert_eq!(back.to_space().unwrap(), qp);
    }

    #[test]
    fn rejects_duplicates_and_bad_shapes() {
        let text = r#"{"dim":1,"structure":[{"degree":2,"matrix":[["1"]]},{"degree":2,"matrix":[["2"]]}]}"#;
        assert!(matches!(
            SpaceFile::parse(text).unwrap().to_space(),
            Err(Error::InvalidStructure(_))
        ));
        let text = r#"{"dim":2,"structure":[{"degree":2,"matrix":[["1"]]}]}"#;
        assert!(matches!(
            SpaceFile::parse(text).unwrap().to_space(),
            Err(Error::InvalidStructure(_))
        ));
        let text = r#"{"dim":2,"structure":[{"degree":1,"matrix":[["1","0"],["0","0"]]}]}"#;
        assert!(matches!(
            SpaceFile::parse(text).unwrap().to_space(),
            Err(Error::InvalidStructure(_))
        ));
    }

    #[test]
    fn rejects_malformed_text() {
        assert!(matches!(SpaceFile::parse("{"), Err(Error::Parse(_))));
        let text = r#"{"dim":1,"structure":[{"degree":2,"matrix":[["1/0"]]}]}"#;
        assert!(matches!(SpaceFile::parse(text), Err(Error::Parse(_))));
        let text = r#"{"dim":1,"structure":[{"degree":2,"matrix":[[1]]}]}"#;
        assert!(matches!(SpaceFile::parse(text), Err(Error::Parse(_))));
    }

    #[test]
    fn relation_file() {
        let text = r#"{"dim":2,"basis":[["0","1","-2","0"]]}"#;
        let rel = RelationFile::parse(text).unwrap();
        assert_eq!(rel.degree, 2);
        assert_eq!(rel.to_subspace().unwrap().dim(), 1);
        let bad = r#"{"dim":2,"basis":[["0","1"]]}"#;
        assert!(RelationFile::parse(bad).unwrap().to_subspace().is_err());
    }
}

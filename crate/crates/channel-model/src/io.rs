//! JSON persistence for scenarios.
//!
//! Complex numbers serialize as two-element arrays `[re, im]`; matrices as
//! row-major nested arrays. Instance files carry `{n_t, h, eves, power_db}`,
//! uncertainty files `{h_bar, g_bars, eps_b, eps_e, power_db}`. Values
//! round-trip bitwise (shortest-representation float printing).

use crate::{ChannelInstance, ModelError, UncertaintySpec};
use hermitian_linalg::{ComplexMatrix, Cx};
use serde::{Deserialize, Serialize};
use std::path::Path;

#[derive(Debug, thiserror::Error)]
pub enum FileError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Parse {
        path: String,
        source: serde_json::Error,
    },
    #[error("{path}: {source}")]
    Invalid { path: String, source: ModelError },
    #[error("{path}: declared n_t = {declared} but h has {actual} entries")]
    NtMismatch {
        path: String,
        declared: usize,
        actual: usize,
    },
}

type CxPair = [f64; 2];
type MatrixRows = Vec<Vec<CxPair>>;

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct InstanceFile {
    n_t: usize,
    h: Vec<CxPair>,
    eves: Vec<MatrixRows>,
    power_db: f64,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct UncertaintyFile {
    h_bar: Vec<CxPair>,
    g_bars: Vec<MatrixRows>,
    eps_b: f64,
    eps_e: Vec<f64>,
    power_db: f64,
}

fn vector_to_pairs(v: &[Cx]) -> Vec<CxPair> {
    v.iter().map(|z| [z.re, z.im]).collect()
}

fn pairs_to_vector(p: &[CxPair]) -> Vec<Cx> {
    p.iter().map(|&[re, im]| Cx::new(re, im)).collect()
}

fn matrix_to_rows(m: &ComplexMatrix) -> MatrixRows {
    (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| [m[(i, j)].re, m[(i, j)].im]).collect())
        .collect()
}

fn rows_to_matrix(rows: &MatrixRows, path: &str) -> Result<ComplexMatrix, FileError> {
    let r = rows.len();
    let c = rows.first().map_or(0, |row| row.len());
    if rows.iter().any(|row| row.len() != c) {
        return Err(FileError::Invalid {
            path: path.to_string(),
            source: ModelError::NonFinite {
                context: "ragged matrix rows",
            },
        });
    }
    let mut data = Vec::with_capacity(r * c);
    for row in rows {
        for &[re, im] in row {
            data.push(Cx::new(re, im));
        }
    }
    Ok(ComplexMatrix::from_vec(r, c, data))
}

fn read_to_string(path: &Path) -> Result<String, FileError> {
    std::fs::read_to_string(path).map_err(|source| FileError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn write_string(path: &Path, contents: &str) -> Result<(), FileError> {
    std::fs::write(path, contents).map_err(|source| FileError::Io {
        path: path.display().to_string(),
        source,
    })
}

pub fn load_instance(path: impl AsRef<Path>) -> Result<ChannelInstance, FileError> {
    let path = path.as_ref();
    let name = path.display().to_string();
    let raw = read_to_string(path)?;
    let file: InstanceFile = serde_json::from_str(&raw).map_err(|source| FileError::Parse {
        path: name.clone(),
        source,
    })?;
    if file.n_t != file.h.len() {
        return Err(FileError::NtMismatch {
            path: name,
            declared: file.n_t,
            actual: file.h.len(),
        });
    }
    let eves = file
        .eves
        .iter()
        .map(|rows| rows_to_matrix(rows, &name))
        .collect::<Result<Vec<_>, _>>()?;
    ChannelInstance::new(pairs_to_vector(&file.h), eves, file.power_db)
        .map_err(|source| FileError::Invalid { path: name, source })
}

pub fn save_instance(path: impl AsRef<Path>, inst: &ChannelInstance) -> Result<(), FileError> {
    let file = InstanceFile {
        n_t: inst.n_t(),
        h: vector_to_pairs(inst.h()),
        eves: inst.eves().iter().map(matrix_to_rows).collect(),
        power_db: inst.power_db(),
    };
    let text = serde_json::to_string_pretty(&file).expect("instance serializes");
    write_string(path.as_ref(), &text)
}

pub fn load_uncertainty(path: impl AsRef<Path>) -> Result<UncertaintySpec, FileError> {
    let path = path.as_ref();
    let name = path.display().to_string();
    let raw = read_to_string(path)?;
    let file: UncertaintyFile = serde_json::from_str(&raw).map_err(|source| FileError::Parse {
        path: name.clone(),
        source,
    })?;
    let g_bars = file
        .g_bars
        .iter()
        .map(|rows| rows_to_matrix(rows, &name))
        .collect::<Result<Vec<_>, _>>()?;
    UncertaintySpec::new(
        pairs_to_vector(&file.h_bar),
        g_bars,
        file.eps_b,
        file.eps_e,
        file.power_db,
    )
    .map_err(|source| FileError::Invalid { path: name, source })
}

pub fn save_uncertainty(path: impl AsRef<Path>, spec: &UncertaintySpec) -> Result<(), FileError> {
    let file = UncertaintyFile {
        h_bar: vector_to_pairs(spec.h_bar()),
        g_bars: spec.g_bars().iter().map(matrix_to_rows).collect(),
        eps_b: spec.eps_b(),
        eps_e: spec.eps_e().to_vec(),
        power_db: spec.power_db(),
    };
    let text = serde_json::to_string_pretty(&file).expect("uncertainty serializes");
    write_string(path.as_ref(), &text)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sample::{rng_stream, sample_channel};
    use crate::uncertainty_from_ratios;

    #[test]
    fn instance_round_trip_is_bitwise() {
        let inst = sample_channel(&mut rng_stream(3, 0), 4, &[2, 3], 1.5)
            .unwrap()
            .with_power_db(3.0);
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("inst.json");
        save_instance(&path, &inst).unwrap();
        let back = load_instance(&path).unwrap();
        assert_eq!(inst, back);
    }

    #[test]
    fn uncertainty_round_trip_is_bitwise() {
        let means = sample_channel(&mut rng_stream(4, 1), 5, &[2], 1.0)
            .unwrap()
            .with_power_db(20.0);
        let spec = uncertainty_from_ratios(&means, 0.03, 0.1, 1.0).unwrap();
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("spec.json");
        save_uncertainty(&path, &spec).unwrap();
        let back = load_uncertainty(&path).unwrap();
        assert_eq!(spec, back);
    }

    #[test]
    fn truncated_file_is_a_parse_error() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("broken.json");
        std::fs::write(&path, r#"{"n_t": 2, "h": [[1.0, 0.0],"#).unwrap();
        match load_instance(&path) {
            Err(FileError::Parse { .. }) => {}
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn missing_field_error_names_the_field() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("nofield.json");
        std::fs::write(&path, r#"{"n_t": 1, "h": [[1.0, 0.0]], "eves": []}"#).unwrap();
        let err = load_instance(&path).unwrap_err();
        assert!(err.to_string().contains("power_db"), "{err}");
    }

    #[test]
    fn handwritten_minimal_instance_parses() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("mini.json");
        std::fs::write(
            &path,
            r#"{
              "n_t": 2,
              "h": [[1.0, 0.0], [0.0, 0.0]],
              "eves": [[[[0.0, 0.0]], [[1.0, 0.0]]]],
              "power_db": 0.0
            }"#,
        )
        .unwrap();
        // "eves" holds one 2x1 matrix written as two rows of one entry.
        let inst = load_instance(&path).unwrap();
        assert_eq!(inst.n_t(), 2);
        assert_eq!(inst.num_eves(), 1);
        assert_eq!(inst.eves()[0].rows(), 2);
        assert_eq!(inst.eves()[0].cols(), 1);
        assert_eq!(inst.power(), 1.0);
    }

    #[test]
    fn n_t_mismatch_is_rejected() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("bad.json");
        std::fs::write(
            &path,
            r#"{"n_t": 3, "h": [[1.0, 0.0]], "eves": [], "power_db": 0.0}"#,
        )
        .unwrap();
        assert!(matches!(
            load_instance(&path),
            Err(FileError::NtMismatch { declared: 3, actual: 1, .. })
        ));
    }
}

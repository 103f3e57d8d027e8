//! The JSON model format.
//!
//! ```json
//! {"kind": "statespace", "A": [["-1"]], "B": [["1"]], "C": [["2/3"]]}
//! {"kind": "mcarma", "p": 1, "q": 0, "d": 1, "m": 1,
//!  "A_coeffs": [[["3"]]], "B_coeffs": [[["1"]]]}
//! ```
//!
//! Every number is a rational string `"p/q"` or `"p"`.

use std::path::Path;

use mcarma_core::exactalg::{RatMatrix, Rational};
use mcarma_core::realization::{assemble_observer_ss, McarmaSpec, StateSpaceModel};
use mcarma_core::Error;
use serde::{Deserialize, Serialize};

use crate::error::{CliError, Result};

/// Row-major matrix of rational strings.
pub type MatrixText = Vec<Vec<String>>;

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum ModelFile {
    Statespace {
        #[serde(rename = "A")]
        a: MatrixText,
        #[serde(rename = "B")]
        b: MatrixText,
        #[serde(rename = "C")]
        c: MatrixText,
    },
    Mcarma {
        p: usize,
        q: usize,
        d: usize,
        m: usize,
        #[serde(rename = "A_coeffs")]
        a_coeffs: Vec<MatrixText>,
        #[serde(rename = "B_coeffs")]
        b_coeffs: Vec<MatrixText>,
    },
}

/// A parsed model; MCARMA input keeps its spec next to the assembled
/// observer-form state space model.
#[derive(Clone, Debug)]
pub struct LoadedModel {
    pub ss: StateSpaceModel,
    pub mcarma: Option<McarmaSpec>,
}

pub fn matrix_text(m: &RatMatrix) -> MatrixText {
    m.to_rows()
        .iter()
        .map(|row| row.iter().map(Rational::to_string).collect())
        .collect()
}

pub fn parse_matrix(text: &MatrixText, what: &str) -> Result<RatMatrix> {
    let rows = text
        .iter()
        .map(|row| {
            row.iter()
                .map(|s| s.parse::<Rational>())
                .collect::<std::result::Result<Vec<_>, _>>()
        })
        .collect::<std::result::Result<Vec<_>, _>>()?;
    RatMatrix::from_rows(rows)
        .map_err(|e| match e {
            Error::Dimension(msg) => Error::Dimension(format!("{what}: {msg}")),
            other => other,
        })
        .map_err(CliError::from)
}

fn expect_shape(m: &RatMatrix, shape: (usize, usize), what: &str) -> Result<()> {
    if m.shape() != shape {
        return Err(
            Error::Dimension(format!("{what} is {:?}, expected {:?}", m.shape(), shape)).into(),
        );
    }
    Ok(())
}

impl ModelFile {
    pub fn from_json(text: &str, what: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| CliError::json(what, e))
    }

    pub fn read(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::io(path.display().to_string(), e))?;
        Self::from_json(&text, &path.display().to_string())
    }

    pub fn from_state_space(ss: &StateSpaceModel) -> Self {
        ModelFile::Statespace {
            a: matrix_text(ss.a()),
            b: matrix_text(ss.b()),
            c: matrix_text(ss.c()),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("model files always serialize") + "\n"
    }

    pub fn load(&self) -> Result<LoadedModel> {
        match self {
            ModelFile::Statespace { a, b, c } => {
                let ss = StateSpaceModel::new(
                    parse_matrix(a, "A")?,
                    parse_matrix(b, "B")?,
                    parse_matrix(c, "C")?,
                )?;
                Ok(LoadedModel { ss, mcarma: None })
            }
            ModelFile::Mcarma {
                p,
                q,
                d,
                m,
                a_coeffs,
                b_coeffs,
            } => {
                if a_coeffs.len() != *p {
                    return Err(Error::Dimension(format!(
                        "p = {p} but {} A_coeffs given",
                        a_coeffs.len()
                    ))
                    .into());
                }
                if b_coeffs.len() != q + 1 {
                    return Err(Error::Dimension(format!(
                        "q = {q} but {} B_coeffs given",
                        b_coeffs.len()
                    ))
                    .into());
                }
                let a = a_coeffs
                    .iter()
                    .enumerate()
                    .map(|(i, t)| {
                        let what = format!("A_{}", i + 1);
                        let mat = parse_matrix(t, &what)?;
                        expect_shape(&mat, (*d, *d), &what)?;
                        Ok(mat)
                    })
                    .collect::<Result<Vec<_>>>()?;
                let b = b_coeffs
                    .iter()
                    .enumerate()
                    .map(|(j, t)| {
                        let what = format!("B_{j}");
                        let mat = parse_matrix(t, &what)?;
                        expect_shape(&mat, (*d, *m), &what)?;
                        Ok(mat)
                    })
                    .collect::<Result<Vec<_>>>()?;
                let spec = McarmaSpec::new(a, b)?;
                let ss = assemble_observer_ss(&spec)?;
                Ok(LoadedModel {
                    ss,
                    mcarma: Some(spec),
                })
            }
        }
    }
}

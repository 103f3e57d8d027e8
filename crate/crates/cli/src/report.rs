//! The JSON report format. Serialization is canonical: field order is fixed
//! and output is pretty-printed with a trailing newline, so parsing and
//! re-serializing a report reproduces it byte for byte.

use mcarma_core::exactalg::{Poly, RatMatrix, Rational, TransferFunction};
use mcarma_core::realization::{
    ControllerRealization, MfdPair, ObserverRealization, StateSpaceModel,
};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, Result};
use crate::model_file::{matrix_text, MatrixText};

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct ReportFile {
    pub command: String,
    pub dims: Dims,
    pub transfer_function: TfReport,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degrees: Option<Degrees>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub canonical: Option<CanonicalReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mfd: Option<MfdReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub equivalence: Option<EquivalenceReport>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct Dims {
    pub d: usize,
    pub m: usize,
    #[serde(rename = "N")]
    pub n: usize,
}

/// Coefficient arrays are ascending (`c_0, c_1, …`); denominators are
/// monic and coprime to their numerators.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct TfReport {
    pub common_den: Vec<String>,
    pub entries: Vec<Vec<EntryReport>>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct EntryReport {
    pub num: Vec<String>,
    pub den: Vec<String>,
}

/// `p` = degree of the monic scalar least common denominator; `q` and
/// `q_tilde` = numerator degrees of the left and right descriptions.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct Degrees {
    pub p: usize,
    pub q: usize,
    pub q_tilde: usize,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct CanonicalReport {
    pub form: String,
    #[serde(rename = "A")]
    pub a: MatrixText,
    #[serde(rename = "B")]
    pub b: MatrixText,
    #[serde(rename = "C")]
    pub c: MatrixText,
    /// Observer: `A_1..A_p`; controller: `Ã_1..Ã_p`.
    pub ar_coeffs: Vec<MatrixText>,
    /// Observer: `B_0..B_q`; controller: `B̃_0..B̃_q̃`.
    pub ma_coeffs: Vec<MatrixText>,
    /// Observer only: the stacked input blocks `β_1..β_p`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub beta: Option<Vec<MatrixText>>,
    pub tf_match: bool,
}

/// Coefficient matrices in descending powers; `den[0]` is the identity.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct MfdReport {
    pub side: String,
    pub p: usize,
    pub q: usize,
    pub den: Vec<MatrixText>,
    pub num: Vec<MatrixText>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct EquivalenceReport {
    pub verdict: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub simulation: Option<SimulationGap>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct SimulationGap {
    pub driver: String,
    pub rate: f64,
    pub seed: u64,
    pub steps: usize,
    pub h: f64,
    pub sup_norm_gap: f64,
    pub relative_gap: f64,
}

fn poly_text(p: &Poly) -> Vec<String> {
    p.coeffs().iter().map(Rational::to_string).collect()
}

fn matrices_text(ms: &[RatMatrix]) -> Vec<MatrixText> {
    ms.iter().map(matrix_text).collect()
}

impl TfReport {
    pub fn new(h: &TransferFunction) -> Self {
        let (d, m) = h.shape();
        let entries = (0..d)
            .map(|i| {
                (0..m)
                    .map(|j| {
                        let e = h.entry(i, j);
                        EntryReport {
                            num: poly_text(e.num()),
                            den: poly_text(e.den()),
                        }
                    })
                    .collect()
            })
            .collect();
        TfReport {
            common_den: poly_text(h.common_den()),
            entries,
        }
    }
}

impl MfdReport {
    pub fn new(pair: &MfdPair) -> Self {
        MfdReport {
            side: pair.side().as_str().to_string(),
            p: pair.p(),
            q: pair.q().unwrap_or(0),
            den: matrices_text(&pair.den_descending()),
            num: matrices_text(&pair.num_descending()),
        }
    }
}

fn model_blocks(ss: &StateSpaceModel) -> (MatrixText, MatrixText, MatrixText) {
    (
        matrix_text(ss.a()),
        matrix_text(ss.b()),
        matrix_text(ss.c()),
    )
}

impl CanonicalReport {
    pub fn observer(obs: &ObserverRealization, tf_match: bool) -> Self {
        let (a, b, c) = model_blocks(obs.model());
        let spec = obs.spec();
        CanonicalReport {
            form: "observer".into(),
            a,
            b,
            c,
            ar_coeffs: matrices_text(spec.a_coeffs()),
            ma_coeffs: matrices_text(spec.b_coeffs()),
            beta: Some(matrices_text(spec.beta())),
            tf_match,
        }
    }

    pub fn controller(ctl: &ControllerRealization, tf_match: bool) -> Self {
        let (a, b, c) = model_blocks(ctl.model());
        CanonicalReport {
            form: "controller".into(),
            a,
            b,
            c,
            ar_coeffs: matrices_text(ctl.a_tilde()),
            ma_coeffs: matrices_text(&ctl.b_tilde()),
            beta: None,
            tf_match,
        }
    }
}

impl ReportFile {
    pub fn new(command: &str, ss: &StateSpaceModel, h: &TransferFunction) -> Self {
        ReportFile {
            command: command.into(),
            dims: Dims {
                d: ss.output_dim(),
                m: ss.input_dim(),
                n: ss.state_dim(),
            },
            transfer_function: TfReport::new(h),
            degrees: None,
            canonical: None,
            mfd: None,
            equivalence: None,
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| CliError::json("report", e))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialize") + "\n"
    }
}

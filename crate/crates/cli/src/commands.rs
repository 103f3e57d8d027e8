use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use mcarma_core::realization::{
    controller_realization, observer_realization, tf_equivalent, transfer_function,
};
use mcarma_core::simulate::{
    relative_sup_gap, simulate_brownian, simulate_compound_poisson, simulate_compound_poisson_pair,
    spectral_density, sup_norm_gap, InitialCondition, JumpDistribution, LevyDriverSpec,
    SimulationConfig,
};
use mcarma_core::Error;
use nalgebra::{DMatrix, DVector};
use serde::Deserialize;
use serde_json::json;

use crate::args::{Command, Driver, EquivSimulation, Form, Init};
use crate::error::{exit, CliError, Result};
use crate::model_file::{LoadedModel, ModelFile};
use crate::report::{
    CanonicalReport, Degrees, EquivalenceReport, MfdReport, ReportFile, SimulationGap,
};

/// What a command prints and the process status it ends with.
#[derive(Debug, Default)]
pub struct Output {
    pub stdout: String,
    pub status: u8,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Output {
            stdout,
            status: exit::OK,
        }
    }
}

pub fn run(command: &Command) -> Result<Output> {
    match command {
        Command::Tf { model, out } => cmd_tf(model, out.as_deref()),
        Command::Canonical {
            model,
            form,
            out,
            model_out,
        } => cmd_canonical(model, *form, out.as_deref(), model_out.as_deref()),
        Command::CheckEquiv {
            model1,
            model2,
            simulate,
            seed,
            steps,
            h,
            rate,
            report,
        } => {
            let sim = simulate.map(|EquivSimulation::Cp| SimOptions {
                seed: *seed,
                steps: *steps,
                h: *h,
                rate: *rate,
            });
            cmd_check_equiv(model1, model2, sim, report.as_deref())
        }
        Command::Simulate {
            model,
            driver,
            sigma,
            rate,
            jump,
            seed,
            steps,
            h,
            init,
            out,
        } => cmd_simulate(
            model,
            &SimulateArgs {
                driver: *driver,
                sigma,
                rate: *rate,
                jump,
                seed: *seed,
                steps: *steps,
                h: *h,
                init: *init,
            },
            out,
        ),
        Command::Spectrum {
            model,
            sigma,
            omegas,
            out,
        } => cmd_spectrum(model, sigma, omegas, out.as_deref()),
    }
}

fn load(path: &Path) -> Result<LoadedModel> {
    ModelFile::read(path)?.load()
}

fn write_file(path: &Path, contents: &str) -> Result<()> {
    fs::write(path, contents).map_err(|e| CliError::io(path.display().to_string(), e))
}

/// Writes to `out` when given, otherwise returns the text for stdout.
fn emit(text: String, out: Option<&Path>) -> Result<Output> {
    match out {
        Some(path) => {
            write_file(path, &text)?;
            Ok(Output::ok(String::new()))
        }
        None => Ok(Output::ok(text)),
    }
}

pub fn cmd_tf(model: &Path, out: Option<&Path>) -> Result<Output> {
    let loaded = load(model)?;
    let h = transfer_function(&loaded.ss)?;
    emit(ReportFile::new("tf", &loaded.ss, &h).to_json(), out)
}

pub fn canonical_report(loaded: &LoadedModel, form: Form) -> Result<(ReportFile, ModelFile)> {
    let h = transfer_function(&loaded.ss)?;
    let mut report = ReportFile::new("canonical", &loaded.ss, &h);
    let (obs, left) = observer_realization(&h)?;
    let (ctl, right) = controller_realization(&h)?;
    report.degrees = Some(Degrees {
        p: left.p(),
        q: left.q().unwrap_or(0),
        q_tilde: right.q().unwrap_or(0),
    });
    let model = match form {
        Form::Observer => {
            let tf_match = transfer_function(obs.model())? == h && left.represents(&h)?;
            report.canonical = Some(CanonicalReport::observer(&obs, tf_match));
            report.mfd = Some(MfdReport::new(&left));
            obs.model()
        }
        Form::Controller => {
            let tf_match = transfer_function(ctl.model())? == h && right.represents(&h)?;
            report.canonical = Some(CanonicalReport::controller(&ctl, tf_match));
            report.mfd = Some(MfdReport::new(&right));
            ctl.model()
        }
    };
    Ok((report, ModelFile::from_state_space(model)))
}

pub fn cmd_canonical(
    model: &Path,
    form: Form,
    out: Option<&Path>,
    model_out: Option<&Path>,
) -> Result<Output> {
    let (report, canonical) = canonical_report(&load(model)?, form)?;
    if let Some(path) = model_out {
        write_file(path, &canonical.to_json())?;
    }
    emit(report.to_json(), out)
}

#[derive(Clone, Copy, Debug)]
pub struct SimOptions {
    pub seed: u64,
    pub steps: usize,
    pub h: f64,
    pub rate: f64,
}

pub fn cmd_check_equiv(
    model1: &Path,
    model2: &Path,
    simulate: Option<SimOptions>,
    report_path: Option<&Path>,
) -> Result<Output> {
    let (m1, m2) = (load(model1)?, load(model2)?);
    let equivalent = tf_equivalent(&m1.ss, &m2.ss)?;
    let verdict = if equivalent { "EQUIVALENT" } else { "DISTINCT" };
    let mut stdout = format!("{verdict}\n");
    let mut sim_gap = None;
    if let Some(opts) = simulate {
        let driver = LevyDriverSpec::CompoundPoisson {
            rate: opts.rate,
            jumps: JumpDistribution::standard_gaussian(m1.ss.input_dim()),
        };
        let cfg = SimulationConfig::new(opts.h, opts.steps, opts.seed);
        let (y1, y2) = simulate_compound_poisson_pair(&m1.ss, &m2.ss, &driver, &cfg)?;
        let gap = SimulationGap {
            driver: "cp".into(),
            rate: opts.rate,
            seed: opts.seed,
            steps: opts.steps,
            h: opts.h,
            sup_norm_gap: sup_norm_gap(&y1, &y2),
            relative_gap: relative_sup_gap(&y1, &y2),
        };
        writeln!(
            stdout,
            "sup_norm_gap {:e}\nrelative_gap {:e}",
            gap.sup_norm_gap, gap.relative_gap
        )
        .unwrap();
        sim_gap = Some(gap);
    }
    if let Some(path) = report_path {
        let h = transfer_function(&m1.ss)?;
        let mut report = ReportFile::new("check-equiv", &m1.ss, &h);
        report.equivalence = Some(EquivalenceReport {
            verdict: verdict.into(),
            simulation: sim_gap,
        });
        write_file(path, &report.to_json())?;
    }
    Ok(Output {
        stdout,
        status: if equivalent { exit::OK } else { exit::DISTINCT },
    })
}

/// A JSON matrix entry: a number or a rational string.
#[derive(Deserialize)]
#[serde(untagged)]
enum Number {
    Float(f64),
    Text(String),
}

impl Number {
    fn value(&self) -> Result<f64> {
        match self {
            Number::Float(v) => Ok(*v),
            Number::Text(s) => Ok(s.parse::<mcarma_core::exactalg::Rational>()?.to_f64()),
        }
    }
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &str) -> Result<T> {
    let text = fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    serde_json::from_str(&text).map_err(|e| CliError::json(path, e))
}

fn float_matrix(rows: &[Vec<Number>], what: &str) -> Result<DMatrix<f64>> {
    let ncols = rows.first().map_or(0, Vec::len);
    if rows.is_empty() || ncols == 0 || rows.iter().any(|r| r.len() != ncols) {
        return Err(
            Error::Dimension(format!("{what} must be a non-empty rectangular matrix")).into(),
        );
    }
    let data = rows
        .iter()
        .flatten()
        .map(Number::value)
        .collect::<Result<Vec<_>>>()?;
    Ok(DMatrix::from_row_slice(rows.len(), ncols, &data))
}

/// `identity` or a JSON matrix file, checked against the driver dimension.
pub fn load_sigma(arg: &str, m: usize) -> Result<DMatrix<f64>> {
    let sigma = if arg == "identity" {
        DMatrix::identity(m, m)
    } else {
        float_matrix(&read_json::<Vec<Vec<Number>>>(arg)?, "sigma")?
    };
    if sigma.shape() != (m, m) {
        return Err(
            Error::Dimension(format!("sigma is {:?}, model has m = {m}", sigma.shape())).into(),
        );
    }
    Ok(sigma)
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct AtomsFile {
    atoms: Vec<Vec<Number>>,
    probs: Vec<f64>,
}

fn load_jumps(arg: &str, m: usize) -> Result<JumpDistribution> {
    if arg == "gaussian" {
        return Ok(JumpDistribution::standard_gaussian(m));
    }
    let Some(path) = arg.strip_prefix("atoms:") else {
        return Err(CliError::Usage(format!(
            "--jump must be `gaussian` or `atoms:<file>`, got `{arg}`"
        )));
    };
    let file: AtomsFile = read_json(path)?;
    let atoms = file
        .atoms
        .iter()
        .map(|a| {
            Ok(DVector::from_vec(
                a.iter().map(Number::value).collect::<Result<Vec<_>>>()?,
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(JumpDistribution::Atoms {
        atoms,
        probs: file.probs,
    })
}

pub struct SimulateArgs<'a> {
    pub driver: Driver,
    pub sigma: &'a str,
    pub rate: f64,
    pub jump: &'a str,
    pub seed: u64,
    pub steps: usize,
    pub h: f64,
    pub init: Init,
}

fn meta_path(out: &Path) -> PathBuf {
    let mut name = out.as_os_str().to_owned();
    name.push(".meta.json");
    PathBuf::from(name)
}

fn matrix_json(m: &DMatrix<f64>) -> serde_json::Value {
    json!((0..m.nrows())
        .map(|i| m.row(i).iter().copied().collect::<Vec<_>>())
        .collect::<Vec<_>>())
}

pub fn cmd_simulate(model: &Path, args: &SimulateArgs, out: &Path) -> Result<Output> {
    let loaded = load(model)?;
    let ss = &loaded.ss;
    let m = ss.input_dim();
    let init = match args.init {
        Init::Zero => InitialCondition::Zero,
        Init::Stationary => InitialCondition::Stationary,
    };
    let cfg = SimulationConfig::new(args.h, args.steps, args.seed).with_init(init);
    let (path, driver_meta) = match args.driver {
        Driver::Brownian => {
            let sigma = load_sigma(args.sigma, m)?;
            let meta = json!({"kind": "brownian", "sigma": matrix_json(&sigma)});
            (simulate_brownian(ss, &sigma, &cfg)?, meta)
        }
        Driver::Cp => {
            let jumps = load_jumps(args.jump, m)?;
            let jump_meta = match &jumps {
                JumpDistribution::Gaussian { .. } => json!("standard gaussian"),
                JumpDistribution::Atoms { atoms, probs } => json!({
                    "atoms": atoms.iter().map(|a| a.iter().copied().collect::<Vec<_>>()).collect::<Vec<_>>(),
                    "probs": probs,
                }),
            };
            let driver = LevyDriverSpec::CompoundPoisson {
                rate: args.rate,
                jumps,
            };
            let meta = json!({"kind": "compound_poisson", "rate": args.rate, "jumps": jump_meta});
            (simulate_compound_poisson(ss, &driver, &cfg)?, meta)
        }
    };
    let csv = path.to_csv_string();
    write_file(out, &csv)?;
    let meta = json!({
        "model": model.display().to_string(),
        "model_kind": if loaded.mcarma.is_some() { "mcarma" } else { "statespace" },
        "dims": {"N": ss.state_dim(), "m": m, "d": ss.output_dim()},
        "driver": driver_meta,
        "seed": args.seed,
        "steps": args.steps,
        "h": args.h,
        "init": match args.init { Init::Zero => "zero", Init::Stationary => "stationary" },
        "rng": "ChaCha20, seed_from_u64(seed), stream 0 jump times, 1 jump sizes, 2 Gaussian increments, 3 initial state",
        "output": out.display().to_string(),
    });
    write_file(
        &meta_path(out),
        &(serde_json::to_string_pretty(&meta).unwrap() + "\n"),
    )?;
    Ok(Output::ok(String::new()))
}

pub fn cmd_spectrum(
    model: &Path,
    sigma: &str,
    omegas: &[f64],
    out: Option<&Path>,
) -> Result<Output> {
    let loaded = load(model)?;
    let h = transfer_function(&loaded.ss)?;
    let sigma = load_sigma(sigma, loaded.ss.input_dim())?;
    let d = loaded.ss.output_dim();
    let mut csv = String::from("omega");
    for i in 1..=d {
        for j in 1..=d {
            write!(csv, ",f{i}_{j}_re,f{i}_{j}_im").unwrap();
        }
    }
    csv.push('\n');
    for &w in omegas {
        let f = spectral_density(&h, &sigma, w)?;
        write!(csv, "{w:.16e}").unwrap();
        for i in 0..d {
            for j in 0..d {
                write!(csv, ",{:.16e},{:.16e}", f[(i, j)].re, f[(i, j)].im).unwrap();
            }
        }
        csv.push('\n');
    }
    emit(csv, out)
}

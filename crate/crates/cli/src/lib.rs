//! Command handlers behind the `hcx` binary.
//!
//! Each `cmd_*` function takes already-split string arguments and a
//! [`Config`], and returns a [`Report`] that renders as JSON or CSV.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use scaled_hypercomplex::action::{
    act, image_invertible_with, image_spectral_value, singular_directions, RealMatrix2,
    SingularLine,
};
use scaled_hypercomplex::freeprob::moment_table;
use scaled_hypercomplex::hyperbolic::{
    exp_jt, exp_jt_series, polar_decompose, sample_unit_set, Hyperbolic,
};
use scaled_hypercomplex::operators::MulOperator;
use scaled_hypercomplex::spectral::{
    discriminant, similarity_witness, spectralize, spectrum, Branch, SpectralValue,
};
use scaled_hypercomplex::{Hypercomplex, Part, Scale, SpectralSide};

pub mod report;

pub use report::{format_num, Record, Report, Value};

pub const MAX_MOMENT_LEN: usize = 12;
pub const MAX_UNIT_COUNT: usize = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("out of range: {0}")]
    Range(String),
    #[error("{0}")]
    Domain(#[from] scaled_hypercomplex::Error),
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

impl CliError {
    /// 2 for malformed or out-of-range input, 3 for inputs the algebra rejects.
    pub fn exit_code(&self) -> i32 {
        use scaled_hypercomplex::Error as E;
        match self {
            CliError::Parse(_) | CliError::Range(_) => 2,
            CliError::Domain(E::InvalidScale(_) | E::NonFinite(_) | E::EmptyRange { .. }) => 2,
            CliError::Domain(_) => 3,
            CliError::Io(_) => 1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Config {
    pub scale: Scale,
    pub tolerance: f64,
    pub format: Format,
    pub precision: usize,
}

impl Config {
    pub fn new(t: f64, tolerance: f64, format: Format, precision: usize) -> Result<Self, CliError> {
        let scale =
            Scale::new(t).map_err(|_| CliError::Parse(format!("--t must be finite, got {t}")))?;
        if !(tolerance > 0.0 && tolerance.is_finite()) {
            return Err(CliError::Range(format!(
                "--tol must be positive, got {tolerance}"
            )));
        }
        if !(1..=17).contains(&precision) {
            return Err(CliError::Range(format!(
                "--precision must be in 1..=17, got {precision}"
            )));
        }
        Ok(Config {
            scale,
            tolerance,
            format,
            precision,
        })
    }
}

#[derive(Debug, Clone, Args)]
pub struct Common {
    /// Scale parameter t (j^2 = t).
    #[arg(long = "t", value_name = "REAL", allow_hyphen_values = true)]
    pub t: f64,
    /// Tolerance for singularity and operator predicates.
    #[arg(long, value_name = "REAL", default_value_t = 1e-10)]
    pub tol: f64,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Significant digits in printed numbers (1..=17).
    #[arg(long, default_value_t = 12, value_parser = clap::value_parser!(u8).range(1..=17))]
    pub precision: u8,
    /// Write output here instead of stdout.
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

impl Common {
    pub fn config(&self) -> Result<Config, CliError> {
        Config::new(self.t, self.tol, self.format, usize::from(self.precision))
    }
}

const ELEMENT_HELP: &str =
    "Elements are written \"a_re,a_im,b_re,b_im\"; hyperbolic points \"x,y\".";

#[derive(Debug, Parser)]
#[command(
    name = "hcx",
    version,
    about = "Numerics for the scaled hypercomplex rings H_t and D_t"
)]
#[command(after_help = ELEMENT_HELP)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Determinant, group/semigroup part, spectral side and spectrum.
    #[command(
        after_help = "Fields: det, seminorm, part, spectral_side, sigma_re, sigma_im, sigma_branch, \
        spectrum_1_re, spectrum_1_im, spectrum_2_re, spectrum_2_im"
    )]
    Classify {
        #[command(flatten)]
        common: Common,
        #[arg(allow_hyphen_values = true)]
        h: String,
    },
    /// Product h1 * h2.
    #[command(after_help = "Fields: a_re, a_im, b_re, b_im")]
    Mul {
        #[command(flatten)]
        common: Common,
        #[arg(allow_hyphen_values = true)]
        h1: String,
        #[arg(allow_hyphen_values = true)]
        h2: String,
    },
    /// Multiplicative inverse; exits 3 on singular input.
    #[command(after_help = "Fields: a_re, a_im, b_re, b_im")]
    Inv {
        #[command(flatten)]
        common: Common,
        #[arg(allow_hyphen_values = true)]
        h: String,
    },
    /// Spectral value, spectrum and similarity witness.
    #[command(
        after_help = "Fields: sigma_re, sigma_im, sigma_branch, discriminant, spectrum_1_re, \
        spectrum_1_im, spectrum_2_re, spectrum_2_im, similarity, witness_a_re, witness_a_im, \
        witness_b_re, witness_b_im. similarity is one of witness, none, undefined."
    )]
    Spec {
        #[command(flatten)]
        common: Common,
        #[arg(allow_hyphen_values = true)]
        h: String,
    },
    /// Semi-norm and predicates of the multiplication operator.
    #[command(
        after_help = "Fields: det, seminorm, operator_norm, commutator_norm, is_normal, \
        is_unitary, is_self_adjoint, is_projection"
    )]
    Norm {
        #[command(flatten)]
        common: Common,
        #[arg(allow_hyphen_values = true)]
        h: String,
    },
    /// Direct and closed-form moments for all words up to length n.
    #[command(
        after_help = "One row per word. Fields: word, length, direct, closed, abs_diff. \
        closed and abs_diff are null (JSON) or n/a (CSV) when the closed form does not apply."
    )]
    Moments {
        #[command(flatten)]
        common: Common,
        #[arg(allow_hyphen_values = true)]
        h: String,
        /// Longest word length (1..=12).
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
    },
    /// e^{j theta}: closed form and truncated series.
    #[command(
        after_help = "Fields: theta, x, y, seminorm, series_terms, series_x, series_y, max_abs_diff"
    )]
    Exp {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        theta: f64,
        #[arg(long, default_value_t = 40, value_parser = clap::value_parser!(u32).range(1..=1000))]
        terms: u32,
    },
    /// Polar decomposition of x + y j; exits 3 on the null cone.
    #[command(after_help = "Fields: radius, angle, sector, recomposed_x, recomposed_y")]
    Polar {
        #[command(flatten)]
        common: Common,
        #[arg(allow_hyphen_values = true)]
        w: String,
    },
    /// Deterministic samples of the unit set.
    #[command(after_help = "One row per point. Fields: x, y, branch")]
    Unitset {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        count: i64,
        /// Parameter interval "lo:hi".
        #[arg(long, default_value = "-2:2", allow_hyphen_values = true)]
        range: String,
    },
    /// Action of a real 2x2 matrix "a11,a12,a21,a22" on x + y j.
    #[command(
        after_help = "Fields: image_x, image_y, image_det, invertible, matrix_det, regime, lines, \
        sigma_re, sigma_im, sigma_branch. lines is an array in JSON and ';'-joined in CSV."
    )]
    Act {
        #[command(flatten)]
        common: Common,
        #[arg(allow_hyphen_values = true)]
        matrix: String,
        #[arg(allow_hyphen_values = true)]
        w: String,
    },
}

impl Command {
    pub fn common(&self) -> &Common {
        match self {
            Command::Classify { common, .. }
            | Command::Mul { common, .. }
            | Command::Inv { common, .. }
            | Command::Spec { common, .. }
            | Command::Norm { common, .. }
            | Command::Moments { common, .. }
            | Command::Exp { common, .. }
            | Command::Polar { common, .. }
            | Command::Unitset { common, .. }
            | Command::Act { common, .. } => common,
        }
    }
}

/// Parses the command's arguments and renders its report.
pub fn run(command: &Command) -> Result<String, CliError> {
    let cfg = command.common().config()?;
    let report = match command {
        Command::Classify { h, .. } => cmd_classify(h, &cfg)?,
        Command::Mul { h1, h2, .. } => cmd_mul(h1, h2, &cfg)?,
        Command::Inv { h, .. } => cmd_inv(h, &cfg)?,
        Command::Spec { h, .. } => cmd_spec(h, &cfg)?,
        Command::Norm { h, .. } => cmd_norm(h, &cfg)?,
        Command::Moments { h, n, .. } => cmd_moments(h, *n, &cfg)?,
        Command::Exp { theta, terms, .. } => cmd_exp(*theta, *terms, &cfg)?,
        Command::Polar { w, .. } => cmd_polar(w, &cfg)?,
        Command::Unitset { count, range, .. } => cmd_unitset(*count, range, &cfg)?,
        Command::Act { matrix, w, .. } => cmd_act(matrix, w, &cfg)?,
    };
    report.render(cfg.format, cfg.precision)
}

fn parse_reals<const N: usize>(s: &str, what: &str) -> Result<[f64; N], CliError> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != N {
        return Err(CliError::Parse(format!(
            "{what} needs {N} comma-separated reals, got {} in {s:?}",
            parts.len()
        )));
    }
    let mut out = [0.0; N];
    for (slot, token) in out.iter_mut().zip(&parts) {
        *slot = token
            .parse::<f64>()
            .ok()
            .filter(|v| v.is_finite())
            .ok_or_else(|| CliError::Parse(format!("invalid number {token:?} in {what}")))?;
    }
    Ok(out)
}

pub fn parse_element(s: &str, scale: Scale) -> Result<Hypercomplex, CliError> {
    Ok(Hypercomplex::from_coords(
        parse_reals::<4>(s, "element")?,
        scale,
    ))
}

pub fn parse_point(s: &str, scale: Scale) -> Result<Hyperbolic, CliError> {
    let [x, y] = parse_reals::<2>(s, "point")?;
    Ok(Hyperbolic::new(x, y, scale))
}

pub fn parse_matrix(s: &str) -> Result<RealMatrix2, CliError> {
    let [a11, a12, a21, a22] = parse_reals::<4>(s, "matrix")?;
    Ok(RealMatrix2::from_rows(a11, a12, a21, a22)?)
}

pub fn parse_range(s: &str) -> Result<(f64, f64), CliError> {
    let (lo, hi) = s
        .split_once(':')
        .ok_or_else(|| CliError::Parse(format!("range must be \"lo:hi\", got {s:?}")))?;
    let num = |tok: &str| {
        tok.trim()
            .parse::<f64>()
            .ok()
            .filter(|v| v.is_finite())
            .ok_or_else(|| CliError::Parse(format!("invalid number {tok:?} in range")))
    };
    Ok((num(lo)?, num(hi)?))
}

fn branch_name(b: Branch) -> &'static str {
    match b {
        Branch::ComplexBranch => "ComplexBranch",
        Branch::RealMinusBranch => "RealMinusBranch",
    }
}

fn push_sigma(r: &mut Record, sv: &SpectralValue) {
    r.push("sigma_re", sv.value.re)
        .push("sigma_im", sv.value.im)
        .push("sigma_branch", branch_name(sv.branch));
}

fn push_spectrum(r: &mut Record, (s1, s2): (Complex64, Complex64)) {
    r.push("spectrum_1_re", s1.re)
        .push("spectrum_1_im", s1.im)
        .push("spectrum_2_re", s2.re)
        .push("spectrum_2_im", s2.im);
}

fn element_record(h: &Hypercomplex) -> Record {
    Record::new()
        .with("a_re", h.a().re)
        .with("a_im", h.a().im)
        .with("b_re", h.b().re)
        .with("b_im", h.b().im)
}

pub fn cmd_classify(input: &str, cfg: &Config) -> Result<Report, CliError> {
    let h = parse_element(input, cfg.scale)?;
    let c = h.classify_with(cfg.tolerance);
    let mut r = Record::new()
        .with("det", h.det())
        .with("seminorm", h.seminorm())
        .with(
            "part",
            match c.part {
                Part::Invertible => "Invertible",
                Part::Singular => "Singular",
            },
        )
        .with(
            "spectral_side",
            match c.spectral_side {
                SpectralSide::Plus => "Plus",
                SpectralSide::MinusZero => "MinusZero",
            },
        );
    push_sigma(&mut r, &spectralize(&h));
    push_spectrum(&mut r, spectrum(&h));
    Ok(Report::Record(r))
}

pub fn cmd_mul(h1: &str, h2: &str, cfg: &Config) -> Result<Report, CliError> {
    let h1 = parse_element(h1, cfg.scale)?;
    let h2 = parse_element(h2, cfg.scale)?;
    Ok(Report::Record(element_record(&h1.mul(&h2)?)))
}

pub fn cmd_inv(input: &str, cfg: &Config) -> Result<Report, CliError> {
    let h = parse_element(input, cfg.scale)?;
    Ok(Report::Record(element_record(
        &h.inverse_with(cfg.tolerance)?,
    )))
}

pub fn cmd_spec(input: &str, cfg: &Config) -> Result<Report, CliError> {
    let h = parse_element(input, cfg.scale)?;
    let mut r = Record::new();
    push_sigma(&mut r, &spectralize(&h));
    r.push("discriminant", discriminant(&h));
    push_spectrum(&mut r, spectrum(&h));
    let (status, witness) = match similarity_witness(&h) {
        Ok(Some(q)) => ("witness", Some(q)),
        Ok(None) => ("none", None),
        Err(_) => ("undefined", None),
    };
    r.push("similarity", status)
        .push("witness_a_re", witness.map(|q| q.a().re))
        .push("witness_a_im", witness.map(|q| q.a().im))
        .push("witness_b_re", witness.map(|q| q.b().re))
        .push("witness_b_im", witness.map(|q| q.b().im));
    Ok(Report::Record(r))
}

pub fn cmd_norm(input: &str, cfg: &Config) -> Result<Report, CliError> {
    let h = parse_element(input, cfg.scale)?;
    let m = MulOperator::new(h);
    let eps = cfg.tolerance;
    Ok(Report::Record(
        Record::new()
            .with("det", h.det())
            .with("seminorm", h.seminorm())
            .with("operator_norm", m.norm())
            .with("commutator_norm", m.commutator_norm())
            .with("is_normal", m.is_normal_with(eps))
            .with("is_unitary", m.is_unitary_with(eps))
            .with("is_self_adjoint", m.is_self_adjoint_with(eps))
            .with("is_projection", m.is_projection_with(eps)),
    ))
}

pub fn cmd_moments(input: &str, n: i64, cfg: &Config) -> Result<Report, CliError> {
    let h = parse_element(input, cfg.scale)?;
    let n = usize::try_from(n)
        .ok()
        .filter(|n| (1..=MAX_MOMENT_LEN).contains(n))
        .ok_or_else(|| CliError::Range(format!("--n must be in 1..={MAX_MOMENT_LEN}, got {n}")))?;
    let rows = moment_table(&h, n)?
        .into_iter()
        .map(|row| {
            Record::new()
                .with("word", row.word.to_string())
                .with("length", Value::Int(row.word.len() as i64))
                .with("direct", row.direct)
                .with("closed", row.closed)
                .with("abs_diff", row.abs_diff())
        })
        .collect();
    Ok(Report::Table(rows))
}

pub fn cmd_exp(theta: f64, terms: u32, cfg: &Config) -> Result<Report, CliError> {
    if !theta.is_finite() {
        return Err(CliError::Parse(format!(
            "--theta must be finite, got {theta}"
        )));
    }
    let e = exp_jt(theta, cfg.scale);
    let s = exp_jt_series(theta, cfg.scale, terms)?;
    Ok(Report::Record(
        Record::new()
            .with("theta", theta)
            .with("x", e.x)
            .with("y", e.y)
            .with("seminorm", e.seminorm())
            .with("series_terms", Value::Int(i64::from(terms)))
            .with("series_x", s.x)
            .with("series_y", s.y)
            .with("max_abs_diff", e.max_abs_diff(&s)),
    ))
}

pub fn cmd_polar(input: &str, cfg: &Config) -> Result<Report, CliError> {
    let w = parse_point(input, cfg.scale)?;
    let p = polar_decompose(&w)?;
    let back = p.recompose();
    Ok(Report::Record(
        Record::new()
            .with("radius", p.radius)
            .with("angle", p.angle)
            .with("sector", p.sector.as_str())
            .with("recomposed_x", back.x)
            .with("recomposed_y", back.y),
    ))
}

pub fn cmd_unitset(count: i64, range: &str, cfg: &Config) -> Result<Report, CliError> {
    let count = usize::try_from(count)
        .ok()
        .filter(|c| (2..=MAX_UNIT_COUNT).contains(c))
        .ok_or_else(|| {
            CliError::Range(format!(
                "--count must be in 2..={MAX_UNIT_COUNT}, got {count}"
            ))
        })?;
    let (lo, hi) = parse_range(range)?;
    let rows = sample_unit_set(cfg.scale, count, lo, hi)?
        .into_iter()
        .map(|s| {
            Record::new()
                .with("x", s.point.x)
                .with("y", s.point.y)
                .with("branch", s.branch.as_str())
        })
        .collect();
    Ok(Report::Table(rows))
}

fn line_text(line: &SingularLine, precision: usize) -> String {
    match line {
        SingularLine::SlopeThroughOrigin(s) => format!("y={}x", format_num(*s, precision)),
        SingularLine::VerticalAxis => "x=0".into(),
    }
}

pub fn cmd_act(matrix: &str, w: &str, cfg: &Config) -> Result<Report, CliError> {
    let a = parse_matrix(matrix)?;
    let w = parse_point(w, cfg.scale)?;
    let image = act(&a, &w);
    let dirs = singular_directions(&a, cfg.scale);
    let lines = dirs
        .lines
        .iter()
        .map(|l| line_text(l, cfg.precision))
        .collect();
    let mut r = Record::new()
        .with("image_x", image.x)
        .with("image_y", image.y)
        .with("image_det", image.det())
        .with("invertible", image_invertible_with(&a, &w, cfg.tolerance))
        .with("matrix_det", dirs.matrix_det)
        .with("regime", dirs.regime.as_str())
        .with("lines", Value::List(lines));
    push_sigma(&mut r, &image_spectral_value(&a, &w));
    Ok(Report::Record(r))
}

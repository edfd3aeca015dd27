//! Command-line front end. `main.rs` only forwards to [`run`].

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::classify::{classify, hurwitz_counts};
use crate::error::Error;
use crate::exact::{det_exact, ExactRational};
use crate::hankel::{
    bernoulli_hankel_closed, bernoulli_hankel_matrix, coulomb_hankel_det, det_rayleigh, genocchi_hankel_closed,
    genocchi_hankel_matrix, RayleighMethod,
};
use crate::numeric::{default_search_rect, find_complex_zeros, NumericError, Rect, SearchOptions, ZeroKind};
use crate::output::{Format, OutputRecord};
use crate::suite::{run_suite, SuiteConfig};
use crate::zeta::{CoulombParams, ZetaTable};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARAMETER: i32 = 1;
pub const EXIT_IDENTITY: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "coulomb-hankel",
    version,
    about = "Spectral zeta values, Hankel determinants and zero counts for Coulomb wave functions"
)]
struct Cli {
    /// Output format: text, json or csv
    #[arg(long, global = true, default_value = "text")]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Coulomb {
    /// Angular momentum L as p/q
    #[arg(long = "L", allow_hyphen_values = true)]
    l: ExactRational,
    /// Coulomb parameter eta as p/q
    #[arg(long, allow_hyphen_values = true)]
    eta: ExactRational,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Table of zeta_L(k) for k = 2..=kmax
    Zeta {
        #[command(flatten)]
        p: Coulomb,
        #[arg(long, default_value_t = 10)]
        kmax: usize,
    },
    /// det H_n(L, eta)
    HankelDet {
        #[command(flatten)]
        p: Coulomb,
        #[arg(long)]
        n: usize,
        /// Also evaluate the closed product and the moment route
        #[arg(long)]
        verify: bool,
    },
    /// Rayleigh Hankel determinant det H_n^(ell)(nu)
    RayleighDet {
        #[arg(long, allow_hyphen_values = true)]
        nu: ExactRational,
        #[arg(long)]
        ell: u32,
        #[arg(long)]
        n: usize,
        /// direct, closed or dj
        #[arg(long, default_value = "direct")]
        method: RayleighMethod,
    },
    /// Hankel determinant of B_{2m}/(2m)!
    BernoulliDet {
        #[arg(long)]
        ell: u32,
        #[arg(long)]
        n: usize,
    },
    /// Hankel determinant of G_{2m}/(2m)!
    GenocchiDet {
        #[arg(long)]
        ell: u32,
        #[arg(long)]
        n: usize,
    },
    /// Number of complex zero pairs from Hankel sign products
    Classify {
        #[command(flatten)]
        p: Coulomb,
        /// Sweep length, or "auto"
        #[arg(long, default_value = "auto", value_parser = parse_nmax)]
        nmax: NmaxArg,
    },
    /// Complex zero count of J_nu
    Hurwitz {
        #[arg(long, allow_hyphen_values = true)]
        nu: ExactRational,
    },
    /// Locate zeros of phi_L(eta, .) numerically
    FindZeros {
        #[arg(long = "L", allow_hyphen_values = true, value_parser = parse_real)]
        l: f64,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_real)]
        eta: f64,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_real)]
        re_min: Option<f64>,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_real)]
        re_max: Option<f64>,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_real)]
        im_min: Option<f64>,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_real)]
        im_max: Option<f64>,
        #[arg(long, default_value_t = 1e-13)]
        tol: f64,
    },
    /// Run every identity family over the configured grid
    VerifyAll {
        #[arg(long)]
        quick: bool,
        /// Grid config (defaults to the bundled one)
        #[arg(long)]
        config: Option<std::path::PathBuf>,
    },
}

#[derive(Clone, Copy, Debug)]
struct NmaxArg(Option<usize>);

fn parse_nmax(s: &str) -> Result<NmaxArg, String> {
    if s == "auto" {
        return Ok(NmaxArg(None));
    }
    s.parse().map(|n| NmaxArg(Some(n))).map_err(|_| format!("expected an integer or 'auto', got '{s}'"))
}

fn parse_real(s: &str) -> Result<f64, String> {
    if let Ok(x) = s.parse::<f64>() {
        return Ok(x);
    }
    s.parse::<ExactRational>().map(|q| q.to_f64()).map_err(|e| e.to_string())
}

enum Failure {
    Parameter(String),
    Identity(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::IdentityMismatch { .. } => Failure::Identity(e.to_string()),
            other => Failure::Parameter(other.to_string()),
        }
    }
}

impl From<NumericError> for Failure {
    fn from(e: NumericError) -> Self {
        Failure::Parameter(e.to_string())
    }
}

fn params_record(command: &str, p: &Coulomb) -> OutputRecord {
    OutputRecord::new(command).param("L", &p.l).param("eta", &p.eta)
}

fn execute(command: Command) -> Result<OutputRecord, Failure> {
    match command {
        Command::Zeta { p, kmax } => {
            if kmax < 2 {
                return Err(Failure::Parameter(format!("kmax must be at least 2, got {kmax}")));
            }
            let table = ZetaTable::with_kmax(CoulombParams::new(p.l.clone(), p.eta.clone()), kmax)?;
            let mut rec = params_record("zeta", &p).param("kmax", kmax);
            let values: serde_json::Map<String, Value> =
                table.iter().map(|(k, v)| (k.to_string(), Value::String(v.to_string()))).collect();
            rec.result("zeta", values);
            Ok(rec)
        }
        Command::HankelDet { p, n, verify } => {
            let d = coulomb_hankel_det(&CoulombParams::new(p.l.clone(), p.eta.clone()), n, verify)?;
            let mut rec = params_record("hankel-det", &p).param("n", n).param("verify", verify);
            rec.result("det", &d.direct);
            if let (Some(closed), Some(moments)) = (&d.closed, &d.moments) {
                rec.result("closed", closed).result("moments", moments);
                rec.verify("closed-form", closed == &d.direct, None);
                rec.verify("moment-route", moments == &d.direct, None);
            }
            Ok(rec)
        }
        Command::RayleighDet { nu, ell, n, method } => {
            let det = det_rayleigh(&nu, ell, n, method)?;
            let mut rec = OutputRecord::new("rayleigh-det")
                .param("nu", &nu)
                .param("ell", ell)
                .param("n", n)
                .param("method", method.to_string());
            rec.result("det", det);
            Ok(rec)
        }
        Command::BernoulliDet { ell, n } => number_det("bernoulli-det", ell, n, true),
        Command::GenocchiDet { ell, n } => number_det("genocchi-det", ell, n, false),
        Command::Classify { p, nmax } => {
            let c = classify(&CoulombParams::new(p.l.clone(), p.eta.clone()), nmax.0)?;
            let mut rec =
                params_record("classify", &p).param("nmax", nmax.0.map_or("auto".to_string(), |n| n.to_string()));
            rec.result("m", c.pair_count)
                .result("all_real", c.all_real)
                .result("nmax", c.nmax)
                .result("predicted_pairs", c.predicted_pairs)
                .result("signs", c.sign_sequence.iter().map(|s| s.sign).collect::<Vec<_>>());
            Ok(rec)
        }
        Command::Hurwitz { nu } => {
            let h = hurwitz_counts(&nu)?;
            let mut rec = OutputRecord::new("hurwitz").param("nu", &nu);
            rec.result("complex_zeros", h.complex_zeros).result("imaginary_pair", h.imaginary_pair);
            Ok(rec)
        }
        Command::FindZeros { l, eta, re_min, re_max, im_min, im_max, tol } => {
            let d = default_search_rect(l);
            let custom = [re_min, re_max, im_min, im_max].iter().any(Option::is_some);
            let rect = Rect::new(
                re_min.unwrap_or(d.re_min),
                re_max.unwrap_or(d.re_max),
                im_min.unwrap_or(d.im_min),
                im_max.unwrap_or(d.im_max),
            );
            let opts = SearchOptions { tol, ..SearchOptions::default() };
            let report = find_complex_zeros(l, eta, rect, opts)?;
            let mut rec =
                OutputRecord::new("find-zeros").param("L", l).param("eta", eta).param("region", rect).param("tol", tol);
            let zeros: Vec<Value> = report
                .zeros
                .iter()
                .map(|z| {
                    json!({
                        "re": z.point.re,
                        "im": z.point.im,
                        "multiplicity": z.multiplicity,
                        "kind": z.kind,
                        "residual": z.residual,
                    })
                })
                .collect();
            rec.result("winding_count", report.winding_count)
                .result("counts", report.counts)
                .result("unresolved", report.unresolved)
                .result("zeros", zeros);
            let upper: usize = report
                .zeros
                .iter()
                .filter(|z| z.kind != ZeroKind::Real && z.point.im > 0.0)
                .map(|z| z.multiplicity)
                .sum();
            rec.verify("winding-count", upper == report.winding_count, None);
            if !custom {
                if let (Some(lq), Some(eq)) = (ExactRational::from_f64(l), ExactRational::from_f64(eta)) {
                    if let Ok(c) = classify(&CoulombParams::new(lq, eq), None) {
                        rec.verify(
                            "classifier-agreement",
                            c.pair_count == report.counts.complex_pairs,
                            Some(format!("m = {}, found {}", c.pair_count, report.counts.complex_pairs)),
                        );
                    }
                }
            }
            Ok(rec)
        }
        Command::VerifyAll { quick, config } => {
            let cfg = match config {
                Some(path) => {
                    let src = std::fs::read_to_string(&path)
                        .map_err(|e| Failure::Parameter(format!("cannot read {}: {e}", path.display())))?;
                    SuiteConfig::parse(&src)?
                }
                None => SuiteConfig::builtin(),
            };
            let mut rec = OutputRecord::new("verify-all").param("quick", quick).param("config_version", cfg.version);
            for fam in run_suite(&cfg, quick) {
                rec.result(fam.family, json!({ "checked": fam.checked, "failed": fam.failures.len() }));
                let detail = (!fam.passed()).then(|| fam.failures.join("; "));
                rec.verify(fam.family, fam.passed(), detail);
            }
            Ok(rec)
        }
    }
}

fn number_det(command: &str, ell: u32, n: usize, bernoulli: bool) -> Result<OutputRecord, Failure> {
    let (matrix, closed) = if bernoulli {
        (bernoulli_hankel_matrix(ell, n)?, bernoulli_hankel_closed(ell, n)?)
    } else {
        (genocchi_hankel_matrix(ell, n)?, genocchi_hankel_closed(ell, n)?)
    };
    let det = det_exact(&matrix);
    let mut rec = OutputRecord::new(command).param("ell", ell).param("n", n);
    rec.result("det", &det).result("closed", &closed);
    rec.verify("closed-form", det == closed, None);
    rec.verify("unit-fraction", det.numer().magnitude() == &num_bigint::BigUint::from(1u32), None);
    Ok(rec)
}

/// Parses `args` (including the program name), writes the record to `out`
/// and diagnostics to `err`, and returns the exit code: 0 on success, 1 on
/// usage or parameter errors, 2 when an identity check fails.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                EXIT_PARAMETER
            } else {
                let _ = write!(out, "{text}");
                EXIT_OK
            };
        }
    };
    match execute(cli.command) {
        Ok(rec) => {
            let _ = write!(out, "{}", rec.render(cli.format));
            if rec.all_passed() {
                EXIT_OK
            } else {
                let failed: Vec<_> =
                    rec.verification.iter().filter(|v| !v.passed).map(|v| v.identity.as_str()).collect();
                let _ = writeln!(err, "identity check failed: {}", failed.join(", "));
                EXIT_IDENTITY
            }
        }
        Err(Failure::Identity(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_IDENTITY
        }
        Err(Failure::Parameter(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_PARAMETER
        }
    }
}

//! The `scsi` command line.
//!
//! Exit codes: 0 success, 1 usage or I/O error, 2 infeasible design,
//! 3 decode failure.
//!
//! `--config FILE` reads `key = value` lines (`#` starts a comment) and
//! treats each as `--key=value` placed before the command-line flags, so
//! flags given explicitly win.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::codec::{
    measured_rate, pack_symbols, read_message, scsi_decode, scsi_encode, unpack_symbols, write_message,
    DecodeStatus, Multiplicity, WireHeader,
};
use crate::crc::CrcSpec;
use crate::design::{binomial_tail_threshold, design, CorrelationModel};
use crate::error::Error;
use crate::field::{default_modulus, Field};
use crate::gs::gs_radius;
use crate::rs::RsCode;
use crate::sim::run_trials;
use crate::tables::paper_tables;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INFEASIBLE: i32 = 2;
pub const EXIT_DECODE_FAILURE: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "scsi",
    version,
    about = "Source coding with side information via Reed-Solomon list decoding",
    args_override_self = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Pick a code for a block length, correlation and target error rate.
    Design(DesignArgs),
    /// Compress a symbol file to a syndrome message.
    Encode(EncodeArgs),
    /// Recover a symbol file from a message and side information.
    Decode(DecodeArgs),
    /// Monte Carlo run of the full codec.
    Simulate(SimulateArgs),
    /// Recompute the published design examples and check every number.
    PaperTables(TablesArgs),
}

// Consumed by `expand_config` before parsing; declared so it shows in help.
#[derive(Args, Debug)]
struct ConfigArg {
    /// key=value file supplying defaults for the other flags.
    #[arg(long, value_name = "FILE")]
    #[allow(dead_code)]
    config: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct CrcArgs {
    /// CRC generator as a hex mask including the leading term [default: 0x180F].
    #[arg(long, value_parser = parse_hex)]
    crc_generator: Option<u64>,
    /// Number of CRC bits; 0 disables the CRC.
    #[arg(long)]
    crc_bits: Option<u32>,
}

impl CrcArgs {
    fn spec(&self) -> Result<CrcSpec, String> {
        match (self.crc_generator, self.crc_bits) {
            (None, None) => Ok(CrcSpec::CRC12),
            (None, Some(0)) => Ok(CrcSpec::NONE),
            (None, Some(12)) => Ok(CrcSpec::CRC12),
            (None, Some(r)) => Err(format!("--crc-bits {r} needs --crc-generator (only 0 and 12 have defaults)")),
            (Some(g), r) => {
                let rho = r.unwrap_or(63 - g.leading_zeros().min(63));
                CrcSpec::new(g, rho).map_err(|e| e.to_string())
            }
        }
    }
}

#[derive(Args, Debug)]
struct FieldArgs {
    /// Bits per symbol; the field is GF(2^m).
    #[arg(long)]
    m: u32,
    /// Primitive modulus as a hex mask [default: the standard one for m].
    #[arg(long, value_parser = parse_hex)]
    modulus: Option<u64>,
}

impl FieldArgs {
    fn field(&self) -> Result<Field, String> {
        let modulus = match self.modulus {
            Some(v) => u32::try_from(v).map_err(|_| format!("modulus {v:#x} too wide"))?,
            None => default_modulus(self.m).ok_or_else(|| format!("unsupported m = {}", self.m))?,
        };
        Field::new(self.m, modulus).map_err(|e| e.to_string())
    }

    /// The wire format implies the default modulus.
    fn field_for_wire(&self) -> Result<Field, String> {
        let f = self.field()?;
        if Some(f.modulus()) != default_modulus(self.m) {
            return Err(format!(
                "messages always use the default modulus for m = {}; drop --modulus",
                self.m
            ));
        }
        Ok(f)
    }
}

#[derive(Args, Debug)]
struct CodeArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
    /// First exponent of the parity-check rows.
    #[arg(long, default_value_t = 1)]
    b: u32,
}

#[derive(Args, Debug)]
struct ReportArgs {
    /// Write the human-readable report here as well.
    #[arg(long, value_name = "FILE")]
    report: Option<PathBuf>,
    /// Write a JSON record here.
    #[arg(long, value_name = "FILE")]
    json: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct DesignArgs {
    #[command(flatten)]
    config: ConfigArg,
    /// Alphabet size: 2^m with m >= 2 for RS, 2 for BCH or RM.
    #[arg(long)]
    q: u64,
    #[arg(long)]
    n: usize,
    /// Symbol disagreement probability.
    #[arg(long)]
    p: f64,
    /// Target decoding error probability.
    #[arg(long)]
    eps: f64,
    #[arg(long, default_value_t = 12)]
    crc_bits: u32,
    #[command(flatten)]
    out: ReportArgs,
}

#[derive(Args, Debug)]
struct EncodeArgs {
    #[command(flatten)]
    config: ConfigArg,
    #[command(flatten)]
    field: FieldArgs,
    #[command(flatten)]
    code: CodeArgs,
    #[command(flatten)]
    crc: CrcArgs,
    /// Source symbols, m bits each, packed MSB first.
    #[arg(long, value_name = "FILE")]
    input: PathBuf,
    #[arg(long, value_name = "FILE")]
    output: PathBuf,
}

#[derive(Args, Debug)]
struct RadiusArgs {
    /// Decoding radius [default: T_eps when --p is given, else the largest certifiable radius].
    #[arg(long)]
    tau: Option<usize>,
    /// Symbol disagreement probability used to derive the default radius.
    #[arg(long)]
    p: Option<f64>,
    /// Target error rate used with --p.
    #[arg(long, default_value_t = 1e-4)]
    eps: f64,
    /// auto, escalate, or a fixed interpolation multiplicity.
    #[arg(long, default_value = "escalate")]
    multiplicity: Multiplicity,
}

impl RadiusArgs {
    fn radius(&self, n: usize, k: usize) -> Result<usize, String> {
        if let Some(t) = self.tau {
            return Ok(t);
        }
        let limit = gs_radius(n, k);
        match self.p {
            Some(p) => {
                check_probability(p, "--p")?;
                check_probability(self.eps, "--eps")?;
                let t = binomial_tail_threshold(n, p, self.eps).map_err(|e| e.to_string())?;
                if t > limit {
                    return Err(format!("T_eps = {t} exceeds the largest certifiable radius {limit} of ({n}, {k})"));
                }
                Ok(t)
            }
            None => Ok(limit),
        }
    }
}

#[derive(Args, Debug)]
struct DecodeArgs {
    #[command(flatten)]
    config: ConfigArg,
    /// Message written by `encode`.
    #[arg(long, value_name = "FILE")]
    message: PathBuf,
    /// Side-information symbols, same layout as the source file.
    #[arg(long, value_name = "FILE")]
    side_info: PathBuf,
    #[arg(long, value_name = "FILE")]
    output: PathBuf,
    #[command(flatten)]
    radius: RadiusArgs,
}

#[derive(Args, Debug)]
struct SimulateArgs {
    #[command(flatten)]
    config: ConfigArg,
    #[command(flatten)]
    field: FieldArgs,
    #[command(flatten)]
    code: CodeArgs,
    #[command(flatten)]
    crc: CrcArgs,
    /// Symbol disagreement probability of the model.
    #[arg(long)]
    p: f64,
    /// Target error rate; sets the default radius to T_eps.
    #[arg(long, default_value_t = 1e-4)]
    eps: f64,
    #[arg(long)]
    tau: Option<usize>,
    /// auto, escalate, or a fixed interpolation multiplicity.
    #[arg(long, default_value = "escalate")]
    multiplicity: Multiplicity,
    #[arg(long, default_value_t = 1000)]
    trials: u64,
    #[arg(long)]
    seed: u64,
    #[command(flatten)]
    out: ReportArgs,
}

#[derive(Args, Debug)]
struct TablesArgs {
    #[command(flatten)]
    config: ConfigArg,
    #[command(flatten)]
    out: ReportArgs,
}

fn parse_hex(s: &str) -> Result<u64, String> {
    let digits = s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")).unwrap_or(s);
    u64::from_str_radix(digits, 16).map_err(|e| format!("{s:?} is not a hex mask: {e}"))
}

fn check_probability(v: f64, name: &str) -> Result<(), String> {
    if v > 0.0 && v < 1.0 {
        Ok(())
    } else {
        Err(format!("{name} must lie strictly between 0 and 1, got {v}"))
    }
}

/// A failed command: exit code plus diagnostic.
struct Failure(i32, String);

impl From<String> for Failure {
    fn from(s: String) -> Self {
        Failure(EXIT_USAGE, s)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::NoFeasibleCode(_) => EXIT_INFEASIBLE,
            _ => EXIT_USAGE,
        };
        Failure(code, e.to_string())
    }
}

fn read_file(path: &Path) -> Result<Vec<u8>, Failure> {
    fs::read(path).map_err(|e| Failure(EXIT_USAGE, format!("cannot read {}: {e}", path.display())))
}

fn write_file(path: &Path, bytes: &[u8]) -> Result<(), Failure> {
    fs::write(path, bytes).map_err(|e| Failure(EXIT_USAGE, format!("cannot write {}: {e}", path.display())))
}

fn write_reports(out: &ReportArgs, text: &str, json: &str) -> Result<(), Failure> {
    if let Some(p) = &out.report {
        write_file(p, format!("{text}\n").as_bytes())?;
    }
    if let Some(p) = &out.json {
        write_file(p, format!("{json}\n").as_bytes())?;
    }
    Ok(())
}

/// Inserts `--key=value` tokens from a `--config` file right after the
/// subcommand name.
fn expand_config(args: Vec<String>) -> Result<Vec<String>, String> {
    let mut path = None;
    let mut rest = Vec::with_capacity(args.len());
    let mut it = args.into_iter();
    while let Some(a) = it.next() {
        if a == "--config" {
            path = Some(it.next().ok_or("--config needs a file")?);
        } else if let Some(p) = a.strip_prefix("--config=") {
            path = Some(p.to_string());
        } else {
            rest.push(a);
        }
    }
    let Some(path) = path else { return Ok(rest) };
    let text = fs::read_to_string(&path).map_err(|e| format!("cannot read config {path}: {e}"))?;
    let mut injected = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let (k, v) = line
            .split_once('=')
            .ok_or_else(|| format!("{path}:{}: expected key = value", lineno + 1))?;
        let key = k.trim().trim_start_matches("--").replace('_', "-");
        if key == "config" {
            return Err(format!("{path}:{}: nested config files are not supported", lineno + 1));
        }
        injected.push(format!("--{key}={}", v.trim()));
    }
    // binary name, subcommand, then config-supplied flags
    let at = rest.len().min(2);
    rest.splice(at..at, injected);
    Ok(rest)
}

/// Runs the command line `args` (including the program name) and returns
/// the exit code.
pub fn run(args: Vec<String>, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let args = match expand_config(args) {
        Ok(a) => a,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_USAGE;
        }
    };
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { write!(err, "{text}") } else { write!(out, "{text}") };
            return code;
        }
    };
    let result = match cli.command {
        Command::Design(a) => cmd_design(a, out),
        Command::Encode(a) => cmd_encode(a, out),
        Command::Decode(a) => cmd_decode(a, out),
        Command::Simulate(a) => cmd_simulate(a, out),
        Command::PaperTables(a) => cmd_paper_tables(a, out),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(Failure(code, msg)) => {
            let _ = writeln!(err, "error: {msg}");
            code
        }
    }
}

fn cmd_design(a: DesignArgs, out: &mut dyn Write) -> Result<(), Failure> {
    check_probability(a.p, "--p")?;
    check_probability(a.eps, "--eps")?;
    let model = CorrelationModel::new(a.q, a.p)?;
    let d = design(a.n, model, a.eps, a.crc_bits)?;
    let text = d.to_string();
    let _ = writeln!(out, "{text}");
    let json = serde_json::to_string_pretty(&d).expect("design serializes");
    write_reports(&a.out, &text, &json)
}

fn cmd_encode(a: EncodeArgs, out: &mut dyn Write) -> Result<(), Failure> {
    let field = a.field.field_for_wire()?;
    let code = RsCode::new(&field, a.code.n, a.code.k, a.code.b)?;
    let crc = a.crc.spec()?;
    let bytes = read_file(&a.input)?;
    let x = unpack_symbols(&bytes, field.m(), code.n())
        .map_err(|e| Failure(EXIT_USAGE, format!("{}: {e}", a.input.display())))?;
    let msg = scsi_encode(&code, &crc, &x)?;
    write_file(&a.output, &write_message(&code, &crc, &msg))?;
    let _ = writeln!(out, "payload_bits: {}", msg.payload_bits(field.m(), crc.rho()));
    let _ = writeln!(out, "source_bits: {}", code.n() as u64 * field.m() as u64);
    let _ = writeln!(out, "rate: {}", measured_rate(&code, &crc));
    Ok(())
}

fn cmd_decode(a: DecodeArgs, out: &mut dyn Write) -> Result<(), Failure> {
    let (header, msg): (WireHeader, _) = read_message(&read_file(&a.message)?)
        .map_err(|e| Failure(EXIT_USAGE, format!("{}: {e}", a.message.display())))?;
    let code = header.code()?;
    let crc = header.crc()?;
    let y = unpack_symbols(&read_file(&a.side_info)?, header.m, header.n)
        .map_err(|e| Failure(EXIT_USAGE, format!("{}: {e}", a.side_info.display())))?;
    let tau = a.radius.radius(code.n(), code.k())?;
    let outcome = scsi_decode(&code, &crc, &msg, &y, tau, a.radius.multiplicity)?;
    let _ = writeln!(out, "status: {}", outcome.status);
    let _ = writeln!(out, "radius: {}", outcome.radius);
    let _ = writeln!(out, "multiplicity: {}", outcome.multiplicity);
    let _ = writeln!(out, "list_size: {}", outcome.list_size());
    match (outcome.status, &outcome.recovered) {
        (DecodeStatus::Recovered, Some(x)) => {
            write_file(&a.output, &pack_symbols(x, header.m))?;
            Ok(())
        }
        (DecodeStatus::Ambiguous, _) => Err(Failure(
            EXIT_DECODE_FAILURE,
            format!("{} candidates share the CRC; nothing written", outcome.ambiguous_set.len()),
        )),
        (status, _) => Err(Failure(EXIT_DECODE_FAILURE, format!("decoding ended with {status}; nothing written"))),
    }
}

fn cmd_simulate(a: SimulateArgs, out: &mut dyn Write) -> Result<(), Failure> {
    let field = a.field.field()?;
    let code = RsCode::new(&field, a.code.n, a.code.k, a.code.b)?;
    let crc = a.crc.spec()?;
    if !(0.0..=1.0).contains(&a.p) {
        return Err(format!("--p must lie in [0, 1], got {}", a.p).into());
    }
    let radius = RadiusArgs {
        tau: a.tau,
        p: (a.p > 0.0 && a.p < 1.0).then_some(a.p),
        eps: a.eps,
        multiplicity: a.multiplicity,
    };
    let tau = radius.radius(code.n(), code.k())?;
    let model = CorrelationModel::new(field.size() as u64, a.p)?;
    let report = run_trials(&code, &crc, &model, tau, a.multiplicity, a.trials, a.seed)?;
    let text = report.to_text();
    let _ = write!(out, "{text}");
    write_reports(&a.out, text.trim_end(), &report.to_json())
}

fn cmd_paper_tables(a: TablesArgs, out: &mut dyn Write) -> Result<(), Failure> {
    let t = paper_tables()?;
    let text = t.to_string();
    let _ = writeln!(out, "{text}");
    write_reports(&a.out, &text, &t.to_json())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("scsi").chain(args.iter().copied()).map(String::from).collect();
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn hex_masks() {
        assert_eq!(parse_hex("0x180F"), Ok(0x180F));
        assert_eq!(parse_hex("180f"), Ok(0x180F));
        assert!(parse_hex("xyz").is_err());
    }

    #[test]
    fn usage_errors_exit_one() {
        assert_eq!(run_str(&["design", "--q", "256", "--n", "255", "--p", "0.3", "--eps", "1.5"]).0, 1);
        assert_eq!(run_str(&["bogus"]).0, 1);
        assert_eq!(run_str(&["design", "--q", "256"]).0, 1);
        assert_eq!(run_str(&["paper-tables", "--seed", "3"]).0, 1);
        assert_eq!(run_str(&["--help"]).0, 0);
    }

    #[test]
    fn infeasible_design_exits_two() {
        let (code, _, err) = run_str(&["design", "--q", "2", "--n", "15", "--p", "0.6", "--eps", "1e-4"]);
        assert_eq!(code, 1, "{err}");
        let (code, _, err) = run_str(&["design", "--q", "16", "--n", "15", "--p", "0.6", "--eps", "1e-9"]);
        assert_eq!(code, 2, "{err}");
    }

    #[test]
    fn crc_flags() {
        let spec = |g, r| CrcArgs { crc_generator: g, crc_bits: r }.spec();
        assert_eq!(spec(None, None), Ok(CrcSpec::CRC12));
        assert_eq!(spec(None, Some(0)), Ok(CrcSpec::NONE));
        assert_eq!(spec(Some(0x180F), None), Ok(CrcSpec::CRC12));
        assert!(spec(Some(0x180F), Some(11)).is_err());
        assert!(spec(None, Some(8)).is_err());
    }
}

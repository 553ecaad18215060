//! Command-line front end.
//!
//! Exit status: 0 on success, 2 on a definitive negative result, 1 on errors
//! or undecided results, 64 on usage errors.

use std::collections::HashMap;
use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};

use crate::admissibility::{
    check_alpha, find_max_alpha, gamma_square_tail_check, AdmissibilityError, VerifierConfig, Verdict,
};
use crate::empirical::{self, DEFAULT_CUTOFF, DEFAULT_X_GRID};
use crate::enclosure::Enclosure;
use crate::zeros::{self, count_consistency, find_zeros, recertify, CountConsistency, ZeroError, ZeroList};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_NEGATIVE: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

#[derive(Debug, Parser)]
#[command(name = "chebyshev-bias", version, about = "Certified checks for the mod-4 Chebyshev bias")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Default, Args)]
struct Common {
    /// Flat key=value file; flags take precedence.
    #[arg(long, value_name = "PATH")]
    config: Option<PathBuf>,
    #[arg(long)]
    t1: Option<f64>,
    #[arg(long)]
    delta: Option<f64>,
    #[arg(long)]
    precision_bits: Option<u32>,
    #[arg(long)]
    grid_step: Option<f64>,
    #[arg(long)]
    threads: Option<usize>,
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Debug, Clone, Default, Args)]
struct ZeroInput {
    /// Zero list to use instead of computing one.
    #[arg(long, value_name = "PATH")]
    zeros: Option<PathBuf>,
    /// Certify an imported zero list before use.
    #[arg(long)]
    recertify: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Locate and certify the zeros up to T1 and write them as a zero list.
    FindZeros {
        #[command(flatten)]
        common: Common,
    },
    /// Re-certify a zero list and check its count.
    VerifyZeros {
        #[arg(long, value_name = "PATH")]
        zeros: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
    /// Decide whether one alpha is admissible.
    CheckAlpha {
        #[arg(long)]
        alpha: Option<f64>,
        #[command(flatten)]
        input: ZeroInput,
        #[command(flatten)]
        common: Common,
    },
    /// Bisect for the largest admissible alpha.
    FindMaxAlpha {
        #[arg(long)]
        resolution: Option<f64>,
        #[command(flatten)]
        input: ZeroInput,
        #[command(flatten)]
        common: Common,
    },
    /// Enclose the sum of gamma^-2 over all zeros.
    GammaSqCheck {
        #[command(flatten)]
        input: ZeroInput,
        #[command(flatten)]
        common: Common,
    },
    /// Sweep the truncated signed prime sum and print CSV.
    EmpiricalSum {
        #[arg(long)]
        alpha: Option<f64>,
        /// Comma-separated decreasing x values.
        #[arg(long, value_delimiter = ',')]
        x_grid: Option<Vec<f64>>,
        #[arg(long)]
        cutoff: Option<u64>,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Failed(String),
}

impl From<AdmissibilityError> for CliError {
    fn from(e: AdmissibilityError) -> Self {
        CliError::Failed(e.to_string())
    }
}

impl From<ZeroError> for CliError {
    fn from(e: ZeroError) -> Self {
        CliError::Failed(e.to_string())
    }
}

const CONFIG_KEYS: &[&str] = &[
    "t1", "delta", "precision-bits", "grid-step", "threads", "out", "zeros", "recertify", "alpha", "resolution",
    "x-grid", "cutoff", "c1", "c2",
];

/// Settings from the optional config file.
#[derive(Debug, Default)]
struct ConfigFile(HashMap<String, String>);

impl ConfigFile {
    fn load(path: Option<&Path>) -> Result<Self, CliError> {
        let Some(path) = path else {
            return Ok(Self::default());
        };
        let text = fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("--config {}: {e}", path.display())))?;
        let mut map = HashMap::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let Some((k, v)) = line.split_once('=') else {
                return Err(CliError::Usage(format!("--config line {}: expected key=value", i + 1)));
            };
            let key = k.trim().replace('_', "-");
            if !CONFIG_KEYS.contains(&key.as_str()) {
                return Err(CliError::Usage(format!("--config line {}: unknown key {key:?}", i + 1)));
            }
            map.insert(key, v.trim().to_string());
        }
        Ok(Self(map))
    }

    fn get<T: FromStr>(&self, flag: Option<T>, key: &str) -> Result<Option<T>, CliError> {
        if flag.is_some() {
            return Ok(flag);
        }
        match self.0.get(key) {
            None => Ok(None),
            Some(v) => v
                .parse()
                .map(Some)
                .map_err(|_| CliError::Usage(format!("--{key}: cannot parse {v:?} from config file"))),
        }
    }

    fn flag(&self, flag: bool, key: &str) -> Result<bool, CliError> {
        Ok(flag || self.get::<bool>(None, key)?.unwrap_or(false))
    }
}

struct Resolved {
    config: VerifierConfig,
    threads: Option<usize>,
    out: Option<PathBuf>,
    file: ConfigFile,
}

fn positive(name: &str, v: f64) -> Result<f64, CliError> {
    if v.is_finite() && v > 0.0 {
        Ok(v)
    } else {
        Err(CliError::Usage(format!("--{name} must be positive, got {v}")))
    }
}

fn resolve(common: &Common) -> Result<Resolved, CliError> {
    let file = ConfigFile::load(common.config.as_deref())?;
    let d = VerifierConfig::default();
    let config = VerifierConfig {
        c1: positive("c1", file.get(None, "c1")?.unwrap_or(d.c1))?,
        c2: positive("c2", file.get(None, "c2")?.unwrap_or(d.c2))?,
        t1: file.get(common.t1, "t1")?.unwrap_or(d.t1),
        delta: positive("delta", file.get(common.delta, "delta")?.unwrap_or(d.delta))?,
        precision_bits: file.get(common.precision_bits, "precision-bits")?.unwrap_or(d.precision_bits),
        grid_step: positive("grid-step", file.get(common.grid_step, "grid-step")?.unwrap_or(d.grid_step))?,
    };
    if !(config.t1.is_finite() && config.t1 > 1.0) {
        return Err(CliError::Usage(format!("--t1 must exceed 1, got {}", config.t1)));
    }
    if !(53..=4096).contains(&config.precision_bits) {
        return Err(CliError::Usage(format!(
            "--precision-bits must be within 53..=4096, got {}",
            config.precision_bits
        )));
    }
    let threads = file.get(common.threads, "threads")?;
    if threads == Some(0) {
        return Err(CliError::Usage("--threads must be at least 1".into()));
    }
    let out = file.get(common.out.clone(), "out")?;
    Ok(Resolved {
        config,
        threads,
        out,
        file,
    })
}

fn emit(text: &str, out: Option<&Path>, stdout: &mut (dyn Write + Send)) -> Result<(), CliError> {
    if let Some(path) = out {
        fs::write(path, text).map_err(|e| CliError::Failed(format!("writing {}: {e}", path.display())))?;
    }
    stdout
        .write_all(text.as_bytes())
        .map_err(|e| CliError::Failed(format!("writing output: {e}")))
}

/// The zero list for the admissibility commands, truncated to `T1`.
fn obtain_zeros(input: &ZeroInput, r: &Resolved, stderr: &mut (dyn Write + Send)) -> Result<ZeroList, CliError> {
    let cfg = &r.config;
    let path = r.file.get(input.zeros.clone(), "zeros")?;
    let Some(path) = path else {
        let _ = writeln!(stderr, "computing zeros up to {}", cfg.t1);
        return Ok(find_zeros(&cfg.search())?);
    };
    let list = zeros::io::load(&path, cfg.precision_bits)
        .map_err(|e| CliError::Failed(format!("{}: {e}", path.display())))?;
    if !list.all_certified() && !r.file.flag(input.recertify, "recertify")? {
        return Err(CliError::Failed(format!(
            "{} holds uncertified imported zeros; pass --recertify to certify them",
            path.display()
        )));
    }
    if list.height() < cfg.t1 {
        return Err(CliError::Failed(format!(
            "{} only reaches height {}, below T1 = {}",
            path.display(),
            list.height(),
            cfg.t1
        )));
    }
    let list = list.truncated(cfg.t1)?;
    let _ = writeln!(stderr, "recertifying {} imported zeros", list.len());
    Ok(recertify(&list, cfg.delta, cfg.precision_bits)?)
}

fn verdict_code(v: Verdict) -> i32 {
    match v {
        Verdict::Admissible => EXIT_OK,
        Verdict::NotAdmissible => EXIT_NEGATIVE,
        Verdict::Undecided => EXIT_ERROR,
    }
}

fn count_line(c: &CountConsistency) -> String {
    match c {
        CountConsistency::Consistent {
            expected,
            half_width,
            found,
        } => format!("count = {found} consistent with {expected:.4} +- {half_width:.4}"),
        CountConsistency::Inconsistent { window, found } => {
            format!("count = {found} outside [{:.4}, {:.4}]", window.0, window.1)
        }
    }
}

fn execute(cmd: &Command, stdout: &mut (dyn Write + Send), stderr: &mut (dyn Write + Send)) -> Result<i32, CliError> {
    match cmd {
        Command::FindZeros { common } => {
            let r = resolve(common)?;
            with_threads(r.threads, || {
                let list = find_zeros(&r.config.search())?;
                let mut buf = Vec::new();
                zeros::io::write_zero_list(&list, &mut buf).map_err(|e| CliError::Failed(e.to_string()))?;
                emit(&String::from_utf8_lossy(&buf), r.out.as_deref(), stdout)?;
                let c = count_consistency(&list, r.config.c1, r.config.c2);
                let _ = writeln!(stderr, "{}", count_line(&c));
                Ok(if c.is_consistent() { EXIT_OK } else { EXIT_NEGATIVE })
            })
        }
        Command::VerifyZeros { zeros: path, common } => {
            let r = resolve(common)?;
            let path = r
                .file
                .get(path.clone(), "zeros")?
                .ok_or_else(|| CliError::Usage("--zeros is required".into()))?;
            with_threads(r.threads, || {
                let list = zeros::io::load(&path, r.config.precision_bits)
                    .map_err(|e| CliError::Failed(format!("{}: {e}", path.display())))?;
                let list = match recertify(&list, r.config.delta, r.config.precision_bits) {
                    Ok(l) => l,
                    Err(e @ ZeroError::NoSignChange { .. }) => {
                        let _ = writeln!(stderr, "{e}");
                        return Ok(EXIT_NEGATIVE);
                    }
                    Err(e) => return Err(e.into()),
                };
                let c = count_consistency(&list, r.config.c1, r.config.c2);
                let text = format!(
                    "# zero list verification\nzeros = {}\nheight = {}\ndelta = {:e}\nprecision_bits = {}\ncertified = {}\n{}\n",
                    path.display(),
                    list.height(),
                    r.config.delta,
                    r.config.precision_bits,
                    list.len(),
                    count_line(&c)
                );
                emit(&text, r.out.as_deref(), stdout)?;
                Ok(if c.is_consistent() { EXIT_OK } else { EXIT_NEGATIVE })
            })
        }
        Command::CheckAlpha { alpha, input, common } => {
            let r = resolve(common)?;
            let alpha = r
                .file
                .get(*alpha, "alpha")?
                .ok_or_else(|| CliError::Usage("--alpha is required".into()))?;
            let alpha = positive("alpha", alpha)?;
            with_threads(r.threads, || {
                let list = obtain_zeros(input, &r, stderr)?;
                let report = check_alpha(alpha, &list, &r.config)?;
                emit(&report.to_key_value(), r.out.as_deref(), stdout)?;
                Ok(verdict_code(report.verdict))
            })
        }
        Command::FindMaxAlpha {
            resolution,
            input,
            common,
        } => {
            let r = resolve(common)?;
            let res = positive("resolution", r.file.get(*resolution, "resolution")?.unwrap_or(1e-5))?;
            with_threads(r.threads, || {
                let list = obtain_zeros(input, &r, stderr)?;
                let bracket = find_max_alpha(&list, &r.config, res)?;
                emit(&bracket.to_key_value(), r.out.as_deref(), stdout)?;
                Ok(EXIT_OK)
            })
        }
        Command::GammaSqCheck { input, common } => {
            let r = resolve(common)?;
            with_threads(r.threads, || {
                let list = obtain_zeros(input, &r, stderr)?;
                let s = gamma_square_tail_check(&list, &r.config)?;
                let fifth = Enclosure::ratio(r.config.precision_bits, 1, 5);
                let (verdict, code) = if s.hi() < fifth.lo() {
                    ("below-one-fifth", EXIT_OK)
                } else if s.lo() >= fifth.hi() {
                    ("not-below-one-fifth", EXIT_NEGATIVE)
                } else {
                    ("undecided", EXIT_ERROR)
                };
                let text = format!(
                    "# sum of gamma^-2 over zeros\nt1 = {}\nzero_count = {}\nsum_lo = {}\nsum_hi = {}\nverdict = {verdict}\n",
                    list.height(),
                    list.len(),
                    s.lo_string(20),
                    s.hi_string(20)
                );
                emit(&text, r.out.as_deref(), stdout)?;
                Ok(code)
            })
        }
        Command::EmpiricalSum {
            alpha,
            x_grid,
            cutoff,
            common,
        } => {
            let r = resolve(common)?;
            let alpha = positive("alpha", r.file.get(*alpha, "alpha")?.unwrap_or(1.0))?;
            let grid = match x_grid {
                Some(g) => g.clone(),
                None => match r.file.0.get("x-grid") {
                    Some(v) => v
                        .split(',')
                        .map(|s| s.trim().parse::<f64>())
                        .collect::<Result<_, _>>()
                        .map_err(|_| CliError::Usage(format!("--x-grid: cannot parse {v:?}")))?,
                    None => DEFAULT_X_GRID.to_vec(),
                },
            };
            if grid.is_empty() || grid.iter().any(|&x| !(x.is_finite() && x > 0.0)) {
                return Err(CliError::Usage("--x-grid needs positive values".into()));
            }
            if grid.windows(2).any(|w| w[1] >= w[0]) {
                return Err(CliError::Usage("--x-grid must be strictly decreasing".into()));
            }
            let cutoff = r.file.get(*cutoff, "cutoff")?.unwrap_or(DEFAULT_CUTOFF);
            if cutoff < 3 {
                return Err(CliError::Usage(format!("--cutoff must be at least 3, got {cutoff}")));
            }
            with_threads(r.threads, || {
                let table = empirical::sieve(cutoff).map_err(|e| CliError::Failed(e.to_string()))?;
                let rows = empirical::sweep(&grid, alpha, &table).map_err(|e| CliError::Failed(e.to_string()))?;
                emit(&empirical::to_csv(&rows), r.out.as_deref(), stdout)?;
                Ok(EXIT_OK)
            })
        }
    }
}

fn with_threads<F>(threads: Option<usize>, f: F) -> Result<i32, CliError>
where
    F: FnOnce() -> Result<i32, CliError> + Send,
{
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = threads {
        builder = builder.num_threads(n);
    }
    let pool = builder
        .build()
        .map_err(|e| CliError::Failed(format!("thread pool: {e}")))?;
    pool.install(f)
}

/// Parses `args` (including the program name), runs the command and returns
/// the exit status.
pub fn run<I, T>(args: I, stdout: &mut (dyn Write + Send), stderr: &mut (dyn Write + Send)) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(stderr, "{}", e.render());
                return EXIT_USAGE;
            }
            let _ = write!(stdout, "{}", e.render());
            return EXIT_OK;
        }
    };
    match execute(&cli.command, stdout, stderr) {
        Ok(code) => code,
        Err(CliError::Usage(m)) => {
            let _ = writeln!(stderr, "usage error: {m}");
            EXIT_USAGE
        }
        Err(CliError::Failed(m)) => {
            let _ = writeln!(stderr, "error: {m}");
            EXIT_ERROR
        }
    }
}

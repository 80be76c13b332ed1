mod attack;
mod demo;
mod estimate;
mod output;
mod schemes;

use std::cell::OnceCell;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use codecrypt::kem::{BitEncoding, HashAlg, HashConfig};
use codecrypt::params::{Params, Preset};
use codecrypt::{Error, Result};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAILURE: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_PARSE: u8 = 3;
pub const EXIT_DECODE: u8 = 4;
pub const EXIT_EXHAUSTED: u8 = 5;

/// Goppa-code cryptography: McEliece, Niederreiter, Classic McEliece KEM,
/// generic decoding attacks and cost estimates.
///
/// Exit status: 0 ok, 1 other failure (including a demo mismatch), 2 usage,
/// 3 parse error, 4 decoding failure, 5 attack budget exhausted.
#[derive(Debug, Parser)]
#[command(name = "codecrypt", version)]
pub struct Cli {
    /// Seed for every random choice; drawn from the OS and reported when absent.
    #[arg(long, global = true)]
    seed: Option<u64>,

    /// Emit tables as CSV.
    #[arg(long, global = true)]
    csv: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// McEliece public-key encryption.
    #[command(subcommand)]
    Mce(schemes::MceCommand),
    /// Niederreiter public-key encryption.
    #[command(subcommand)]
    Nie(schemes::NieCommand),
    /// Classic McEliece key encapsulation.
    #[command(subcommand)]
    Kem(schemes::KemCommand),
    /// Decoding attacks.
    #[command(subcommand)]
    Attack(attack::AttackCommand),
    /// Closed-form cost and size estimates.
    #[command(subcommand)]
    Estimate(estimate::EstimateCommand),
    /// Replays a worked example and checks it against the reference values.
    Demo(demo::DemoArgs),
}

/// Parameter selection shared by key generation commands.
#[derive(Debug, Args)]
struct ParamArgs {
    /// toy12, toy16, original, mceliece6960119 or mceliece8192128.
    #[arg(long, conflicts_with_all = ["m", "n", "t"])]
    preset: Option<Preset>,
    /// Extension degree of GF(2^m).
    #[arg(long, requires_all = ["n", "t"])]
    m: Option<u32>,
    /// Code length.
    #[arg(long)]
    n: Option<usize>,
    /// Goppa polynomial degree, the number of correctable errors.
    #[arg(long)]
    t: Option<usize>,
}

impl ParamArgs {
    fn resolve(&self, default: Preset) -> Result<Params> {
        match (self.preset, self.m, self.n, self.t) {
            (Some(p), ..) => Ok(p.params()),
            (None, Some(m), Some(n), Some(t)) => Params::new(m, n, t),
            _ => Ok(default.params()),
        }
    }
}

#[derive(Debug, Args)]
struct HashArgs {
    /// shake256 or sha256.
    #[arg(long, default_value_t = HashAlg::default())]
    hash: HashAlg,
    /// Feed hash inputs as `0`/`1` characters instead of packed bytes.
    #[arg(long)]
    ascii: bool,
}

impl HashArgs {
    fn config(&self) -> HashConfig {
        let encoding = if self.ascii { BitEncoding::Ascii } else { BitEncoding::Packed };
        HashConfig::with_encoding(self.hash, encoding)
    }
}

pub struct Context {
    seed: OnceCell<u64>,
    csv: bool,
}

impl Context {
    /// The `--seed` value, or a fresh one reported on stderr the first time it is needed.
    fn seed(&self) -> u64 {
        *self.seed.get_or_init(|| {
            let s = rand::random();
            eprintln!("seed {s}");
            s
        })
    }

    fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed())
    }
}

fn read_file(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io(std::io::Error::new(e.kind(), format!("{}: {e}", path.display()))))
}

fn write_file(path: &PathBuf, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|e| Error::Io(std::io::Error::new(e.kind(), format!("{}: {e}", path.display()))))
}

fn exit_code(err: &Error) -> u8 {
    match err {
        Error::Parse { .. } => EXIT_PARSE,
        Error::DecodingFailure(_) | Error::WrongWeight { .. } => EXIT_DECODE,
        Error::Exhausted { .. } => EXIT_EXHAUSTED,
        Error::InvalidParameters(_) | Error::Dimension(_) => EXIT_USAGE,
        _ => EXIT_FAILURE,
    }
}

pub fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let ctx = Context { seed: cli.seed.map(OnceCell::from).unwrap_or_default(), csv: cli.csv };
    let result = match cli.command {
        Command::Mce(cmd) => schemes::run_mce(cmd, &ctx),
        Command::Nie(cmd) => schemes::run_nie(cmd, &ctx),
        Command::Kem(cmd) => schemes::run_kem(cmd, &ctx),
        Command::Attack(cmd) => attack::run(cmd, &ctx),
        Command::Estimate(cmd) => estimate::run(cmd, &ctx),
        Command::Demo(args) => demo::run(args, &ctx),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

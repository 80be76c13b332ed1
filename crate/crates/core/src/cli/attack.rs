use std::path::PathBuf;

use clap::{Args, Subcommand};
use codecrypt::attacks::{
    cca_flip_probe, flip_success_probability, isd_prange, lee_brickell, message_resend_attack, resend_sets, Form,
    IsdResult, SearchConfig,
};
use codecrypt::fixtures::IsdFixture;
use codecrypt::matrix::{BitMatrix, BitVec};
use codecrypt::params::Preset;
use codecrypt::{kem, mceliece, Error, Result};
use rand::Rng;

use super::output::Table;
use super::{read_file, Context, EXIT_OK};

#[derive(Debug, Args)]
pub struct Target {
    /// Attack the bundled 8×16 instance with a weight-2 error.
    #[arg(long, conflicts_with_all = ["public", "ct"])]
    example: bool,
    /// Public matrix as rows of `0`/`1` characters.
    #[arg(long = "pub", value_name = "FILE", requires = "ct")]
    public: Option<PathBuf>,
    /// Ciphertext (or syndrome) as a `0`/`1` string.
    #[arg(long)]
    ct: Option<String>,
    /// Error weight to search for.
    #[arg(long)]
    t: Option<usize>,
}

impl Target {
    fn load(&self) -> Result<(BitMatrix, BitVec, usize)> {
        if let (Some(path), Some(ct)) = (&self.public, &self.ct) {
            let g = BitMatrix::from_text(&read_file(path)?)?;
            let c: BitVec = ct.trim().parse()?;
            let t = self.t.ok_or_else(|| Error::InvalidParameters("--t is required with --pub".into()))?;
            return Ok((g, c, t));
        }
        if !self.example {
            return Err(Error::InvalidParameters("give --example or --pub and --ct".into()));
        }
        let fx = IsdFixture::new();
        let t = self.t.unwrap_or(fx.t());
        Ok((fx.g, fx.c, t))
    }
}

#[derive(Debug, Args)]
pub struct Budget {
    #[arg(long, default_value_t = 1_000_000)]
    max_iters: u64,
    #[arg(long, default_value_t = 1)]
    workers: usize,
}

impl Budget {
    fn config(&self, seed: u64) -> SearchConfig {
        SearchConfig::new(seed, self.max_iters).with_workers(self.workers)
    }
}

#[derive(Debug, Subcommand)]
pub enum AttackCommand {
    /// Prange information-set decoding.
    Isd {
        #[command(flatten)]
        target: Target,
        /// mceliece (generator and ciphertext) or niederreiter (parity check and syndrome).
        #[arg(long, default_value_t = Form::McEliece)]
        form: Form,
        #[command(flatten)]
        budget: Budget,
    },
    /// Lee–Brickell information-set decoding.
    LeeBrickell {
        #[command(flatten)]
        target: Target,
        /// Number of error positions allowed inside the information set.
        #[arg(long, default_value_t = 1)]
        p: usize,
        #[command(flatten)]
        budget: Budget,
    },
    /// Encrypts one message twice and recovers it from the two ciphertexts.
    Resend {
        #[arg(long, default_value_t = Preset::Toy16)]
        preset: Preset,
        #[arg(long, default_value_t = 1)]
        trials: usize,
        #[command(flatten)]
        budget: Budget,
    },
    /// Counts how often a two-bit flip removes one error and adds none.
    CcaProbe {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        t: usize,
        #[arg(long, default_value_t = 100_000)]
        trials: u64,
    },
}

fn result_table(r: &IsdResult) -> Table {
    let mut table = Table::new(["field", "value"]);
    table.row(["error".to_string(), r.e.to_string()]);
    if let Some(m) = &r.m {
        table.row(["message".to_string(), m.to_string()]);
    }
    let info: Vec<String> = r.info_set.iter().map(|i| (i + 1).to_string()).collect();
    table.row(["info_set".to_string(), info.join(" ")]);
    table.row(["iterations".to_string(), r.iterations.to_string()]);
    table.row(["invertible".to_string(), r.invertible.to_string()]);
    table.row(["elapsed_ms".to_string(), format!("{:.3}", r.elapsed.as_secs_f64() * 1e3)]);
    table
}

pub fn run(cmd: AttackCommand, ctx: &Context) -> Result<u8> {
    match cmd {
        AttackCommand::Isd { target, form, budget } => {
            let (g, c, t) = target.load()?;
            let r = isd_prange(&g, &c, t, form, &budget.config(ctx.seed()))?;
            result_table(&r).print(ctx.csv);
        }
        AttackCommand::LeeBrickell { target, p, budget } => {
            let (g, c, t) = target.load()?;
            let r = lee_brickell(&g, &c, t, p, &budget.config(ctx.seed()))?;
            result_table(&r).print(ctx.csv);
        }
        AttackCommand::Resend { preset, trials, budget } => resend(preset, trials, &budget, ctx)?,
        AttackCommand::CcaProbe { n, t, trials } => {
            if t > n || n < 2 {
                return Err(Error::InvalidParameters(format!("need 2 <= n and t <= n, got n = {n}, t = {t}")));
            }
            let mut rng = ctx.rng();
            let mut hits = 0u64;
            for _ in 0..trials {
                let e = kem::fixed_weight_sample(n, t, &mut rng);
                let (_, flip) = cca_flip_probe(&e, &mut rng);
                hits += u64::from(flip.succeeds(&e));
            }
            let mut table = Table::new(["n", "t", "trials", "hits", "empirical", "expected"]);
            table.row([
                n.to_string(),
                t.to_string(),
                trials.to_string(),
                hits.to_string(),
                format!("{:.6}", hits as f64 / trials as f64),
                format!("{:.6}", flip_success_probability(n, t)),
            ]);
            table.print(ctx.csv);
        }
    }
    Ok(EXIT_OK)
}

fn resend(preset: Preset, trials: usize, budget: &Budget, ctx: &Context) -> Result<()> {
    let params = preset.params();
    let mut rng = ctx.rng();
    let kp = mceliece::keygen(&params, &mut rng)?;
    let pk = &kp.public;
    let mut table = Table::new(["trial", "l0", "l1", "iterations", "recovered"]);
    let mut iterations = Vec::with_capacity(trials);
    for trial in 0..trials {
        let msg = BitVec::random(pk.k(), &mut rng);
        let c1 = pk.encrypt(&msg, &mut rng)?;
        let c2 = pk.encrypt(&msg, &mut rng)?;
        let (l0, l1) = resend_sets(&c1, &c2);
        let cfg = budget.config(rng.gen());
        let (its, ok) = match message_resend_attack(&c1, &c2, pk.generator(), pk.t(), &cfg) {
            Ok(r) => (r.iterations, r.m.as_ref() == Some(&msg)),
            Err(Error::Exhausted { iterations }) => (iterations, false),
            Err(e) => return Err(e),
        };
        iterations.push(its);
        table.row([trial + 1, l0.len(), l1.len(), its as usize, usize::from(ok)]);
    }
    table.print(ctx.csv);
    if !ctx.csv && !iterations.is_empty() {
        iterations.sort_unstable();
        println!("median iterations: {}", iterations[iterations.len() / 2]);
    }
    Ok(())
}

use clap::{Args, Subcommand};
use codecrypt::attacks::{
    key_sizes, resend_guess_probability, resend_statistics, security_table, work_factor, Formula, KeyScheme,
};
use codecrypt::params::Preset;
use codecrypt::{Error, Result};

use super::output::Table;
use super::{Context, EXIT_OK};

#[derive(Debug, Args)]
pub struct CodeDims {
    /// Take n, k and t from a preset.
    #[arg(long, conflicts_with_all = ["n", "k", "t"])]
    preset: Option<Preset>,
    #[arg(long, requires_all = ["k", "t"])]
    n: Option<u64>,
    #[arg(long)]
    k: Option<u64>,
    #[arg(long)]
    t: Option<u64>,
}

impl CodeDims {
    fn resolve(&self) -> Result<(u64, u64, u64)> {
        match (self.preset, self.n, self.k, self.t) {
            (Some(p), ..) => {
                let p = p.params();
                Ok((p.n as u64, p.k() as u64, p.t as u64))
            }
            (None, Some(n), Some(k), Some(t)) => Ok((n, k, t)),
            _ => Err(Error::InvalidParameters("give --preset or --n, --k and --t".into())),
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum EstimateCommand {
    /// Work factor of an attack; both Prange variants when no formula is given.
    Wf {
        /// mce-prange, nie-prange, stern, ball-collision or doom.
        #[arg(long)]
        formula: Option<Formula>,
        #[command(flatten)]
        dims: CodeDims,
    },
    /// Public and private key sizes; every scheme when none is given.
    Keysize {
        /// mceliece, niederreiter or classic-mceliece.
        #[arg(long)]
        scheme: Option<KeyScheme>,
        #[arg(long, conflicts_with_all = ["m", "n", "t"])]
        preset: Option<Preset>,
        #[arg(long, requires_all = ["n", "t"])]
        m: Option<u64>,
        #[arg(long)]
        n: Option<u64>,
        #[arg(long)]
        t: Option<u64>,
    },
    /// Tabulated security levels of binary Goppa parameters.
    Table,
    /// Overlap distribution of two error vectors in a resend.
    Resend {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        t: u64,
        /// With --l1, also print the chance that k positions of L0 are error free.
        #[arg(long, requires = "l1")]
        k: Option<u64>,
        #[arg(long, requires = "k")]
        l1: Option<u64>,
    },
}

pub fn run(cmd: EstimateCommand, ctx: &Context) -> Result<u8> {
    match cmd {
        EstimateCommand::Wf { formula, dims } => {
            let (n, k, t) = dims.resolve()?;
            let formulas = match formula {
                Some(f) => vec![f],
                None => vec![Formula::McEliecePrange, Formula::NiederreiterPrange],
            };
            let mut table = Table::new(["formula", "n", "k", "t", "work", "log2"]);
            for f in formulas {
                let r = work_factor(f, n, k, t)?;
                table.row([f.to_string(), n.to_string(), k.to_string(), t.to_string(), r.scientific(), format!("{:.2}", r.log2)]);
            }
            table.print(ctx.csv);
        }
        EstimateCommand::Keysize { scheme, preset, m, n, t } => {
            let (m, n, t) = match (preset, m, n, t) {
                (Some(p), ..) => {
                    let p = p.params();
                    (u64::from(p.m), p.n as u64, p.t as u64)
                }
                (None, Some(m), Some(n), Some(t)) => (m, n, t),
                _ => return Err(Error::InvalidParameters("give --preset or --m, --n and --t".into())),
            };
            let schemes = match scheme {
                Some(s) => vec![s],
                None => vec![KeyScheme::McEliece, KeyScheme::Niederreiter, KeyScheme::ClassicMcEliece],
            };
            let mut table = Table::new(["scheme", "m", "n", "t", "public", "private", "unit"]);
            for s in schemes {
                let sizes = key_sizes(s, m, n, t)?;
                table.row([
                    s.to_string(),
                    m.to_string(),
                    n.to_string(),
                    t.to_string(),
                    sizes.public.to_string(),
                    sizes.private.to_string(),
                    sizes.unit.to_string(),
                ]);
            }
            table.print(ctx.csv);
        }
        EstimateCommand::Table => {
            let mut table = Table::new(["n", "t", "security_bits"]);
            for row in security_table() {
                table.row([row.n.to_string(), row.t.to_string(), format!("{:.1}", row.bits)]);
            }
            table.print(ctx.csv);
        }
        EstimateCommand::Resend { n, t, k, l1 } => {
            let stats = resend_statistics(n, t)?;
            let mut table = Table::new(["i", "l1", "p"]);
            for (i, p) in stats.p.iter().enumerate() {
                table.row([i.to_string(), (2 * (t as usize - i)).to_string(), format!("{p:.6e}")]);
            }
            table.print(ctx.csv);
            if !ctx.csv {
                println!("expected |L1|: {:.4}", stats.expected_l1);
                if let (Some(k), Some(l1)) = (k, l1) {
                    println!("P(k error-free positions from L0 | |L1| = {l1}): {:.6e}", resend_guess_probability(n, k, t, l1)?);
                }
            }
        }
    }
    Ok(EXIT_OK)
}

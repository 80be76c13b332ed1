use std::path::PathBuf;

use clap::{Args, Subcommand};
use codecrypt::kem::{self, Ciphertext};
use codecrypt::matrix::BitVec;
use codecrypt::params::Preset;
use codecrypt::{mceliece, niederreiter, Error, Result};

use super::{read_file, write_file, Context, HashArgs, ParamArgs, EXIT_OK};

#[derive(Debug, Args)]
pub struct KeyPaths {
    /// Where to write the public key.
    #[arg(long = "pub", value_name = "FILE")]
    public: PathBuf,
    /// Where to write the secret key.
    #[arg(long = "sec", value_name = "FILE")]
    secret: PathBuf,
}

#[derive(Debug, Subcommand)]
pub enum MceCommand {
    /// Writes a fresh key pair (defaults to the toy12 parameters).
    Keygen {
        #[command(flatten)]
        params: ParamArgs,
        #[command(flatten)]
        paths: KeyPaths,
    },
    /// Prints `m·Ĝ + z` for a k-bit message and a random weight-t error.
    Encrypt {
        #[arg(long = "pub", value_name = "FILE")]
        public: PathBuf,
        /// Message as a `0`/`1` string.
        #[arg(long)]
        msg: String,
        /// Use this error instead of a random one.
        #[arg(long)]
        error: Option<String>,
    },
    /// Prints the message, and the error on a second line.
    Decrypt {
        #[arg(long = "sec", value_name = "FILE")]
        secret: PathBuf,
        /// Ciphertext as a `0`/`1` string.
        #[arg(long)]
        ct: String,
    },
}

#[derive(Debug, Subcommand)]
pub enum NieCommand {
    /// Writes a fresh key pair (defaults to the toy12 parameters).
    Keygen {
        #[command(flatten)]
        params: ParamArgs,
        #[command(flatten)]
        paths: KeyPaths,
    },
    /// Prints the syndrome `Ĥ·eᵀ` of a weight-t message.
    Encrypt {
        #[arg(long = "pub", value_name = "FILE")]
        public: PathBuf,
        /// Weight-t message as a `0`/`1` string; random when absent.
        #[arg(long)]
        msg: Option<String>,
    },
    /// Prints the weight-t message behind a syndrome.
    Decrypt {
        #[arg(long = "sec", value_name = "FILE")]
        secret: PathBuf,
        #[arg(long)]
        ct: String,
    },
}

#[derive(Debug, Subcommand)]
pub enum KemCommand {
    /// Writes a fresh key pair (defaults to the toy16 parameters).
    Keygen {
        #[command(flatten)]
        params: ParamArgs,
        #[command(flatten)]
        hash: HashArgs,
        #[command(flatten)]
        paths: KeyPaths,
    },
    /// Prints `ciphertext <hex>` and `key <hex>`.
    Encaps {
        #[arg(long = "pub", value_name = "FILE")]
        public: PathBuf,
        /// Use this weight-t error instead of a random one.
        #[arg(long)]
        error: Option<String>,
    },
    /// Prints `key <hex>`; an invalid ciphertext yields the rejection key.
    Decaps {
        #[arg(long = "sec", value_name = "FILE")]
        secret: PathBuf,
        /// Ciphertext bytes `pack(C0) ‖ C1` in hex.
        #[arg(long)]
        ct: String,
    },
}

fn bits(s: &str) -> Result<BitVec> {
    s.trim().parse()
}

pub fn run_mce(cmd: MceCommand, ctx: &Context) -> Result<u8> {
    match cmd {
        MceCommand::Keygen { params, paths } => {
            let params = params.resolve(Preset::Toy12)?;
            let kp = mceliece::keygen(&params, &mut ctx.rng())?;
            write_file(&paths.public, &kp.public.to_text())?;
            write_file(&paths.secret, &kp.secret.to_text())?;
            println!("n={} k={} t={}", kp.public.n(), kp.public.k(), kp.public.t());
        }
        MceCommand::Encrypt { public, msg, error } => {
            let pk = mceliece::PublicKey::from_text(&read_file(&public)?)?;
            let msg = bits(&msg)?;
            let c = match error {
                Some(z) => pk.encrypt_with_error(&msg, &bits(&z)?)?,
                None => pk.encrypt(&msg, &mut ctx.rng())?,
            };
            println!("{c}");
        }
        MceCommand::Decrypt { secret, ct } => {
            let sk = mceliece::SecretKey::from_text(&read_file(&secret)?)?;
            let (m, z) = sk.decrypt_with_error(&bits(&ct)?)?;
            println!("{m}\n{z}");
        }
    }
    Ok(EXIT_OK)
}

pub fn run_nie(cmd: NieCommand, ctx: &Context) -> Result<u8> {
    match cmd {
        NieCommand::Keygen { params, paths } => {
            let params = params.resolve(Preset::Toy12)?;
            let kp = niederreiter::keygen(&params, &mut ctx.rng())?;
            write_file(&paths.public, &kp.public.to_text())?;
            write_file(&paths.secret, &kp.secret.to_text())?;
            println!("n={} r={} t={}", kp.public.n(), kp.public.redundancy(), kp.public.t());
        }
        NieCommand::Encrypt { public, msg } => {
            let pk = niederreiter::PublicKey::from_text(&read_file(&public)?)?;
            let e = match msg {
                Some(m) => bits(&m)?,
                None => {
                    let e = kem::fixed_weight_sample(pk.n(), pk.t(), &mut ctx.rng());
                    eprintln!("message {e}");
                    e
                }
            };
            println!("{}", pk.encrypt(&e)?);
        }
        NieCommand::Decrypt { secret, ct } => {
            let sk = niederreiter::SecretKey::from_text(&read_file(&secret)?)?;
            println!("{}", sk.decrypt(&bits(&ct)?)?);
        }
    }
    Ok(EXIT_OK)
}

pub fn run_kem(cmd: KemCommand, ctx: &Context) -> Result<u8> {
    match cmd {
        KemCommand::Keygen { params, hash, paths } => {
            let params = params.resolve(Preset::Toy16)?;
            let hash = hash.config();
            let kp = kem::keygen(&params, &mut ctx.rng())?;
            write_file(&paths.public, &kp.public.to_text(&hash))?;
            write_file(&paths.secret, &kp.secret.to_text(&hash))?;
            println!("{params} hash={}", hash.alg);
        }
        KemCommand::Encaps { public, error } => {
            let (pk, hash) = kem::PublicKey::from_text(&read_file(&public)?)?;
            let (key, ct) = match error {
                Some(e) => pk.encaps_with_error(&hash, &bits(&e)?)?,
                None => pk.encaps(&hash, &mut ctx.rng()),
            };
            println!("ciphertext {}\nkey {}", hex::encode(ct.to_bytes()), key.to_hex());
        }
        KemCommand::Decaps { secret, ct } => {
            let (sk, hash) = kem::SecretKey::from_text(&read_file(&secret)?)?;
            let bytes = hex::decode(ct.trim()).map_err(|e| Error::Parse { line: 1, message: format!("ciphertext: {e}") })?;
            let ct = Ciphertext::from_bytes(sk.params(), &bytes)?;
            println!("key {}", sk.decaps(&hash, &ct)?.to_hex());
        }
    }
    Ok(EXIT_OK)
}

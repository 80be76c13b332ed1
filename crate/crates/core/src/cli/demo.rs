use std::fmt::Display;

use clap::{Args, ValueEnum};
use codecrypt::algebra::{Elem, Poly};
use codecrypt::attacks::{lexicographic_sweep, SweepOutcome};
use codecrypt::fixtures::{self, IsdFixture};
use codecrypt::goppa::ParityForm;
use codecrypt::kem::{self, BitEncoding, HashAlg, HashConfig};
use codecrypt::matrix::{BitVec, GfMatrix, MatGF};
use codecrypt::params::Preset;
use codecrypt::Result;

use super::{Context, EXIT_FAILURE, EXIT_OK};

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Demo {
    /// `[12, 4]` binary Goppa code over GF(16): matrices and a two-error decode.
    GoppaGf16,
    /// `[7, 3]` ternary Goppa code from GF(9): one-error key-equation decode.
    GoppaGf9,
    /// `[16, 8]` Classic McEliece toy: public key, encapsulation, decapsulation.
    KemToy,
    /// Lexicographic information-set sweep over the 8×16 instance.
    IsdSweep,
}

#[derive(Debug, Args)]
pub struct DemoArgs {
    #[arg(value_enum)]
    demo: Demo,
}

/// Collects named comparisons and prints one line per check.
struct Checks {
    failed: usize,
}

impl Checks {
    fn new() -> Checks {
        Checks { failed: 0 }
    }

    fn eq<T: PartialEq + Display>(&mut self, name: &str, got: T, want: T) {
        let (got, want) = (one_line(&got), one_line(&want));
        if got == want {
            println!("ok        {name}: {got}");
        } else {
            self.failed += 1;
            println!("MISMATCH  {name}: got {got}, expected {want}");
        }
    }

    fn holds(&mut self, name: &str, ok: bool) {
        self.eq(name, ok, true);
    }

    fn exit(&self) -> u8 {
        if self.failed == 0 {
            EXIT_OK
        } else {
            println!("{} check(s) failed", self.failed);
            EXIT_FAILURE
        }
    }
}

fn one_line(x: &impl Display) -> String {
    x.to_string().trim_end().replace('\n', " / ")
}

fn int_rows(m: &MatGF) -> String {
    m.to_rows().iter().map(|r| r.iter().map(|a| a.to_string()).collect::<Vec<_>>().join(" ")).collect::<Vec<_>>().join(" / ")
}

fn ext_rows(m: &MatGF) -> String {
    let f = m.field();
    m.to_rows().iter().map(|r| r.iter().map(|&a| f.power_name(a)).collect::<Vec<_>>().join(" ")).collect::<Vec<_>>().join(" / ")
}

fn poly_powers(p: &Poly) -> String {
    let f = p.field();
    p.coeffs().iter().map(|&c| f.power_name(c)).collect::<Vec<_>>().join(" ")
}

pub fn run(args: DemoArgs, _ctx: &Context) -> Result<u8> {
    let mut checks = Checks::new();
    match args.demo {
        Demo::GoppaGf16 => gf16(&mut checks)?,
        Demo::GoppaGf9 => gf9(&mut checks)?,
        Demo::KemToy => kem_toy(&mut checks)?,
        Demo::IsdSweep => isd_sweep(&mut checks),
    }
    Ok(checks.exit())
}

fn gf16(checks: &mut Checks) -> Result<()> {
    use fixtures::gf16::*;
    let f = fixtures::gf16_field();
    let code = fixtures::gf16_code(ParityForm::Syndrome);
    let h_ext = fixtures::ext_matrix(&f, &H_EXT)?;
    checks.eq("extension-field parity check", ext_rows(code.parity_check_ext()), ext_rows(&h_ext));
    let h = fixtures::bit_matrix(&H);
    let ours = code.parity_bits().expect("binary code");
    checks.eq("binary parity check", ours.to_string(), h.to_string());
    let g = fixtures::bit_matrix(&G);
    checks.eq("dimension", code.dimension(), g.rank());
    checks.holds("reference generator spans the code", g.mul(&h.transpose()).is_zero());

    let msg = BitVec::from_bools([true, false, true, true]);
    let c = g.vec_mul(&msg);
    let e = BitVec::from_support(12, &[2, 9]);
    let y = &c ^ &e;
    let found = code.patterson_decode(&y)?;
    checks.eq("two-error Patterson decode", found.to_string(), e.to_string());
    Ok(())
}

fn gf9(checks: &mut Checks) -> Result<()> {
    use fixtures::gf9::*;
    let f = fixtures::gf9_field();
    let code = fixtures::gf9_code(ParityForm::Syndrome);
    let h_ext = fixtures::ext_matrix(&f, &H_EXT)?;
    checks.eq("extension-field parity check", ext_rows(code.parity_check_ext()), ext_rows(&h_ext));
    let h = fixtures::ternary_matrix(&H)?;
    checks.eq("ternary parity check", int_rows(code.parity_check()), int_rows(&h));
    let g = fixtures::ternary_matrix(&G)?;
    checks.holds("reference generator is orthogonal to H", g.mul(&h.transpose()).is_zero());
    checks.eq("dimension", code.dimension(), g.rank());

    let y: Vec<Elem> = RECEIVED.iter().map(|&v| v.rem_euclid(3) as Elem).collect();
    let syndrome = code.syndrome(&y);
    checks.eq("syndrome", poly_powers(&syndrome), SYNDROME.join(" "));
    let (c, e) = code.decode(&y)?;
    let pos = e.iter().position(|&v| v != 0).map_or(0, |j| j + 1);
    checks.eq("error position", pos, ERROR_POSITION);
    checks.eq("error value", e[pos.saturating_sub(1)], ERROR_VALUE.rem_euclid(3) as Elem);
    let sigma = Poly::linear(&f, code.support()[pos.saturating_sub(1)]);
    checks.eq("error locator", poly_powers(&sigma), SIGMA.join(" "));
    let omega = sigma.mul_mod(&syndrome, code.goppa_polynomial())?;
    checks.eq("error evaluator", poly_powers(&omega), OMEGA.to_string());
    let msg = code.recover_message(&c)?;
    checks.eq("message", format!("{msg:?}"), format!("{:?}", MESSAGE.to_vec()));
    Ok(())
}

fn kem_toy(checks: &mut Checks) -> Result<()> {
    use fixtures::kem::*;
    let params = Preset::Toy16.params();
    let kp = kem::keygen_from(&params, &fixtures::kem_goppa_polynomial(), &fixtures::kem_support(), BitVec::zeros(16))?;
    let h_hat = fixtures::bit_matrix(&H_HAT);
    let code_h = kp.secret.code().parity_bits().expect("binary code");
    checks.eq("binary parity check", code_h.to_string(), h_hat.to_string());
    checks.eq("public key T", kp.public.matrix().to_string(), fixtures::bit_matrix(&T).to_string());

    let e: BitVec = ERROR.parse()?;
    for (label, hash) in [
        ("shake256/packed", HashConfig::new(HashAlg::Shake256)),
        ("sha256/ascii", HashConfig::with_encoding(HashAlg::Sha256, BitEncoding::Ascii)),
    ] {
        let (key, ct) = kp.public.encaps_with_error(&hash, &e)?;
        checks.eq(&format!("{label} C0"), ct.c0.to_string(), C0.to_string());
        checks.eq(&format!("{label} ciphertext bits"), ct.bit_len(), params.redundancy() + 256);
        checks.eq(&format!("{label} decapsulated key"), kp.secret.decaps(&hash, &ct)?.to_hex(), key.to_hex());
        if hash.encoding == BitEncoding::Ascii {
            checks.eq("sha256/ascii C1", hex::encode(ct.c1), C1_SHA256_ASCII.to_string());
            println!("note      reference session key {K_REFERENCE}; computed {} (not reproduced)", key.to_hex());
        }
    }
    Ok(())
}

fn isd_sweep(checks: &mut Checks) {
    use fixtures::sweep::*;
    let fx = IsdFixture::new();
    let one_based = |s: &[usize]| s.iter().map(|j| (j + 1).to_string()).collect::<Vec<_>>().join(",");
    let listed = |s: &[usize]| s.iter().map(|j| j.to_string()).collect::<Vec<_>>().join(",");
    let mut total = 0u64;
    let mut hit = None;
    for step in lexicographic_sweep(&fx.g, &fx.c) {
        total += 1;
        match step.iteration {
            1 => {
                checks.eq("first information set", one_based(&step.info_set), listed(&FIRST_INFO_SET));
                checks.holds("first set gives a wrong message", matches!(&step.outcome, SweepOutcome::Candidate(m) if *m != fx.m));
            }
            SINGULAR_ITERATION => {
                checks.eq("singular information set", one_based(&step.info_set), listed(&SINGULAR_INFO_SET));
                checks.holds("singular", step.outcome == SweepOutcome::Singular);
            }
            _ => {}
        }
        if hit.is_none() && step.outcome == SweepOutcome::Candidate(fx.m.clone()) {
            hit = Some(step);
        }
    }
    match hit {
        Some(step) => {
            checks.eq("first hit iteration", step.iteration, HIT_ITERATION);
            checks.eq("first hit information set", one_based(&step.info_set), listed(&HIT_INFO_SET));
        }
        None => checks.holds("message reached", false),
    }
    checks.eq("information sets", total, TOTAL);
    checks.eq("message", fx.m.to_string(), "00000100".to_string());
}

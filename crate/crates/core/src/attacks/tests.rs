use itertools::Itertools;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use statrs::function::gamma::ln_gamma;

use super::estimate::binomial;
use super::*;
use crate::fixtures::IsdFixture;
use crate::kem::fixed_weight_sample;
use crate::matrix::{BitMatrix, GfMatrix};
use crate::params::{Params, Preset};
use crate::{mceliece, niederreiter};

/// `∏_{i=1}^{k} (1 − 2^{-i})`, the fraction of invertible k×k GF(2) matrices.
fn invertible_density(k: usize) -> f64 {
    (1..=k).map(|i| 1.0 - 0.5f64.powi(i as i32)).product()
}

fn binom_f(n: u64, k: u64) -> f64 {
    log2_ratio(&binomial(n, k), &num_bigint::BigUint::from(1u32)).exp2()
}

/// Independent check of an ISD answer against the instance.
fn assert_consistent(g: &BitMatrix, c: &BitVec, t: usize, r: &IsdResult) {
    assert_eq!(r.e.weight(), t);
    let m = r.m.as_ref().expect("generator searches return a message");
    assert_eq!(&(&g.vec_mul(m) ^ &r.e), c);
}

fn all_messages(k: usize) -> impl Iterator<Item = BitVec> {
    (0u64..1 << k).map(move |v| BitVec::from_bools((0..k).map(|i| v >> (k - 1 - i) & 1 == 1)))
}

#[test]
fn isd_fixture_instance_is_consistent() {
    let fx = IsdFixture::new();
    assert_eq!((fx.g.rows(), fx.g.cols()), (8, 16));
    assert_eq!(&fx.g.vec_mul(&fx.m) ^ &fx.e, fx.c);
    assert_eq!(fx.t(), 2);
}

#[test]
fn isd_fixture_instance_has_no_weight_one_solution() {
    let fx = IsdFixture::new();
    let distances: Vec<usize> = all_messages(8).map(|m| fx.g.vec_mul(&m).distance(&fx.c)).collect();
    assert!(distances.iter().all(|&d| d >= 2));
    let closest: Vec<BitVec> =
        all_messages(8).filter(|m| fx.g.vec_mul(m).distance(&fx.c) == 2).collect();
    assert_eq!(closest, vec![fx.m.clone()]);
    let err = isd_prange(&fx.g, &fx.c, 1, Form::McEliece, &SearchConfig::new(1, 20_000)).unwrap_err();
    assert!(matches!(err, Error::Exhausted { iterations: 20_000 }));
}

#[test]
fn isd_fixture_prange_recovers_message() {
    let fx = IsdFixture::new();
    let mut iterations = Vec::new();
    for seed in 0..200 {
        let r = isd_prange(&fx.g, &fx.c, fx.t(), Form::McEliece, &SearchConfig::new(seed, 20_000)).unwrap();
        assert_consistent(&fx.g, &fx.c, fx.t(), &r);
        assert_eq!(r.m.as_ref(), Some(&fx.m));
        assert_eq!(r.e, fx.e);
        assert!(r.info_set.iter().all(|&j| !fx.e.get(j)));
        iterations.push(r.iterations);
    }
    let mean = iterations.iter().sum::<u64>() as f64 / iterations.len() as f64;
    assert!(mean < 40.0, "mean iterations {mean}");
}

#[test]
fn isd_fixture_lexicographic_sweep() {
    let fx = IsdFixture::new();
    let steps: Vec<SweepStep> = lexicographic_sweep(&fx.g, &fx.c).take(8159).collect();
    let one_based = |s: &SweepStep| s.info_set.iter().map(|j| j + 1).collect::<Vec<_>>();

    assert_eq!(one_based(&steps[0]), vec![1, 2, 3, 4, 5, 6, 7, 8]);
    assert!(matches!(&steps[0].outcome, SweepOutcome::Candidate(m) if *m != fx.m));
    assert_eq!(one_based(&steps[3]), vec![1, 2, 3, 4, 5, 6, 7, 11]);
    assert_eq!(steps[3].outcome, SweepOutcome::Singular);

    let first_hit = steps
        .iter()
        .find(|s| s.outcome == SweepOutcome::Candidate(fx.m.clone()))
        .expect("sweep reaches the message");
    assert_eq!(first_hit.iteration, 8159);
    assert_eq!(one_based(first_hit), vec![2, 4, 5, 6, 7, 8, 10, 11]);
    assert_eq!(lexicographic_sweep(&fx.g, &fx.c).count(), 12_870);
}

#[test]
fn zero_errors_succeed_on_first_invertible_draw() {
    let mut rng = ChaCha8Rng::seed_from_u64(70);
    for seed in 0..50 {
        let g = BitMatrix::random(8, 16, &mut rng);
        if g.rank() < 8 {
            continue;
        }
        let m = BitVec::random(8, &mut rng);
        let c = g.vec_mul(&m);
        let r = isd_prange(&g, &c, 0, Form::McEliece, &SearchConfig::new(seed, 1000)).unwrap();
        assert_eq!(r.invertible, 1);
        assert_eq!(r.m, Some(m));
        assert!(r.e.is_zero());
    }
}

/// Per-draw success of Prange on fresh uniform instances against
/// `C(n−t, k)/C(n, k) · ∏(1 − 2^{-i})`.
fn prange_rate_matches(n: usize, k: usize, t: usize, trials: u64, seed: u64) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut hits = 0u64;
    for trial in 0..trials {
        let g = BitMatrix::random(k, n, &mut rng);
        let m = BitVec::random(k, &mut rng);
        let e = fixed_weight_sample(n, t, &mut rng);
        let c = &g.vec_mul(&m) ^ &e;
        if let Ok(r) = isd_prange(&g, &c, t, Form::McEliece, &SearchConfig::new(trial, 1)) {
            hits += u64::from(r.e == e);
        }
    }
    let p = binom_f((n - t) as u64, k as u64) / binom_f(n as u64, k as u64) * invertible_density(k);
    let sigma = (p * (1.0 - p) / trials as f64).sqrt();
    let rate = hits as f64 / trials as f64;
    assert!((rate - p).abs() < 3.0 * sigma, "({n}, {k}, {t}): rate {rate}, expected {p} ± {sigma}");
}

#[test]
fn prange_rate_small() {
    prange_rate_matches(16, 8, 1, 10_000, 71);
}

#[test]
fn prange_rate_medium() {
    prange_rate_matches(24, 12, 2, 10_000, 72);
}

#[test]
fn prange_niederreiter_form() {
    let mut rng = ChaCha8Rng::seed_from_u64(73);
    for params in [Preset::Toy12.params(), Params::new(6, 40, 3).unwrap()] {
        let kp = niederreiter::keygen(&params, &mut rng).unwrap();
        let h = kp.public.matrix();
        for seed in 0..20 {
            let e = fixed_weight_sample(params.n, params.t, &mut rng);
            let s = kp.public.encrypt(&e).unwrap();
            let r = isd_prange(h, &s, params.t, Form::Niederreiter, &SearchConfig::new(seed, 1_000_000)).unwrap();
            assert_eq!(r.e, e);
            assert_eq!(h.mul_vec(&r.e), s);
            assert_eq!(r.info_set.len(), params.n - params.redundancy());
            assert!(r.m.is_none());
        }
    }
}

#[test]
fn prange_rejects_bad_lengths() {
    let fx = IsdFixture::new();
    let cfg = SearchConfig::new(0, 10);
    assert!(isd_prange(&fx.g, &fx.m, 2, Form::McEliece, &cfg).is_err());
    assert!(isd_prange(&fx.g, &fx.c, 2, Form::Niederreiter, &cfg).is_err());
    assert!("isd".parse::<Form>().is_err());
    assert_eq!("niederreiter".parse::<Form>().unwrap(), Form::Niederreiter);
}

#[test]
fn parallel_search_and_exhaustion() {
    let fx = IsdFixture::new();
    for workers in [1, 2, 4] {
        let cfg = SearchConfig::new(5, 20_000).with_workers(workers);
        let r = isd_prange(&fx.g, &fx.c, 2, Form::McEliece, &cfg).unwrap();
        assert_consistent(&fx.g, &fx.c, 2, &r);
    }
    let a = isd_prange(&fx.g, &fx.c, 2, Form::McEliece, &SearchConfig::new(9, 20_000)).unwrap();
    let b = isd_prange(&fx.g, &fx.c, 2, Form::McEliece, &SearchConfig::new(9, 20_000)).unwrap();
    assert_eq!((a.iterations, a.info_set), (b.iterations, b.info_set));
    let err = isd_prange(&fx.g, &fx.c, 1, Form::McEliece, &SearchConfig::new(0, 500).with_workers(3)).unwrap_err();
    assert!(matches!(err, Error::Exhausted { iterations: 500 }));
}

#[test]
fn lee_brickell_window_zero_is_prange() {
    let fx = IsdFixture::new();
    for seed in 0..50 {
        let cfg = SearchConfig::new(seed, 20_000);
        let a = lee_brickell(&fx.g, &fx.c, 2, 0, &cfg).unwrap();
        let b = isd_prange(&fx.g, &fx.c, 2, Form::McEliece, &cfg).unwrap();
        assert_eq!((a.e, a.m, a.iterations, a.info_set), (b.e, b.m, b.iterations, b.info_set));
    }
}

#[test]
fn lee_brickell_solves_isd_fixture_with_window() {
    let fx = IsdFixture::new();
    for p in 1..=2 {
        for seed in 0..20 {
            let r = lee_brickell(&fx.g, &fx.c, 2, p, &SearchConfig::new(seed, 20_000)).unwrap();
            assert_consistent(&fx.g, &fx.c, 2, &r);
            assert_eq!(r.m.as_ref(), Some(&fx.m));
            // exactly p error positions inside the information set
            assert_eq!(r.info_set.iter().filter(|&&j| fx.e.get(j)).count(), p);
        }
    }
    // three errors never fit in I when t = 2
    assert!(lee_brickell(&fx.g, &fx.c, 2, 3, &SearchConfig::new(0, 2000)).is_err());
    assert!(matches!(lee_brickell(&fx.g, &fx.c, 2, 4, &SearchConfig::new(0, 1)), Err(Error::Unsupported(_))));
}

/// Per-draw Lee–Brickell success against `C(t, p) C(n−t, k−p) / C(n, k) · ∏(1 − 2^{-i})`.
fn lee_brickell_rate(n: usize, k: usize, t: usize, p: usize, trials: u64, seed: u64) -> (f64, f64, f64) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut hits = 0u64;
    for trial in 0..trials {
        let g = BitMatrix::random(k, n, &mut rng);
        let m = BitVec::random(k, &mut rng);
        let e = fixed_weight_sample(n, t, &mut rng);
        let c = &g.vec_mul(&m) ^ &e;
        if let Ok(r) = lee_brickell(&g, &c, t, p, &SearchConfig::new(trial, 1)) {
            hits += u64::from(r.e == e);
        }
    }
    let (n64, k64, t64, p64) = (n as u64, k as u64, t as u64, p as u64);
    let expected = binom_f(t64, p64) * binom_f(n64 - t64, k64 - p64) / binom_f(n64, k64) * invertible_density(k);
    let sigma = (expected * (1.0 - expected) / trials as f64).sqrt();
    (hits as f64 / trials as f64, expected, sigma)
}

#[test]
fn lee_brickell_rates() {
    for (n, k, t, p, seed) in [(16, 8, 1, 0, 74), (16, 8, 1, 1, 75), (24, 12, 2, 0, 76), (24, 12, 2, 1, 77)] {
        let (rate, expected, sigma) = lee_brickell_rate(n, k, t, p, 10_000, seed);
        // a random code may hold a second weight-t explanation; that only lowers the count
        assert!((rate - expected).abs() < 3.0 * sigma, "({n},{k},{t}) p={p}: {rate} vs {expected} ± {sigma}");
    }
    // with one error, either window catches half of the information sets
    let (a, _, _) = lee_brickell_rate(16, 8, 1, 0, 10_000, 78);
    let (b, _, sigma) = lee_brickell_rate(16, 8, 1, 1, 10_000, 78);
    assert!((a - b).abs() < 5.0 * sigma);
    // with two errors the window pays off
    let (a, _, _) = lee_brickell_rate(24, 12, 2, 0, 10_000, 79);
    let (b, _, _) = lee_brickell_rate(24, 12, 2, 1, 10_000, 79);
    assert!(b > 1.5 * a, "p=0 {a}, p=1 {b}");
}

#[test]
fn resend_sets_partition_positions() {
    let c1: BitVec = "10110010".parse().unwrap();
    let c2: BitVec = "10011011".parse().unwrap();
    let (l0, l1) = resend_sets(&c1, &c2);
    assert_eq!(l0, vec![0, 1, 3, 5, 6]);
    assert_eq!(l1, vec![2, 4, 7]);
}

#[test]
fn resend_attack_on_goppa_keys() {
    let mut rng = ChaCha8Rng::seed_from_u64(80);
    let params = Params::new(8, 256, 10).unwrap();
    let kp = mceliece::keygen(&params, &mut rng).unwrap();
    let g = kp.public.generator();
    for seed in 0..10 {
        let m = BitVec::random(g.rows(), &mut rng);
        let c1 = kp.public.encrypt(&m, &mut rng).unwrap();
        let c2 = kp.public.encrypt(&m, &mut rng).unwrap();
        let r = message_resend_attack(&c1, &c2, g, params.t, &SearchConfig::new(seed, 10_000)).unwrap();
        assert_eq!(r.m.as_ref(), Some(&m));
        assert_consistent(g, &c1, params.t, &r);
        let (l0, _) = resend_sets(&c1, &c2);
        assert!(r.info_set.iter().all(|j| l0.contains(j)));
    }
}

#[test]
fn resend_with_identical_errors_is_prange() {
    let mut rng = ChaCha8Rng::seed_from_u64(85);
    let kp = mceliece::keygen(&Params::new(6, 64, 3).unwrap(), &mut rng).unwrap();
    let g = kp.public.generator();
    for seed in 0..5 {
        let m = BitVec::random(g.rows(), &mut rng);
        let c = kp.public.encrypt(&m, &mut rng).unwrap();
        assert!(resend_sets(&c, &c).1.is_empty());
        let cfg = SearchConfig::new(seed, 100_000);
        let r = message_resend_attack(&c, &c, g, 3, &cfg).unwrap();
        let p = isd_prange(g, &c, 3, Form::McEliece, &cfg).unwrap();
        assert_eq!(r.m, Some(m));
        assert_eq!((r.iterations, r.info_set), (p.iterations, p.info_set));
    }
}

#[test]
fn resend_attack_reports_failure_for_different_messages() {
    let mut rng = ChaCha8Rng::seed_from_u64(81);
    let kp = mceliece::keygen(&Preset::Toy12.params(), &mut rng).unwrap();
    let g = kp.public.generator();
    let c1 = kp.public.encrypt(&BitVec::from_support(4, &[0]), &mut rng).unwrap();
    let c2 = kp.public.encrypt(&BitVec::from_support(4, &[1, 2]), &mut rng).unwrap();
    match message_resend_attack(&c1, &c2, g, 2, &SearchConfig::new(0, 200)) {
        Ok(r) => assert_consistent(g, &c1, 2, &r),
        Err(e) => assert!(matches!(e, Error::Exhausted { .. } | Error::Domain(_))),
    }
}

#[test]
fn flip_probe_frequency() {
    let mut rng = ChaCha8Rng::seed_from_u64(82);
    let (n, t, trials) = (16, 2, 100_000);
    let e = fixed_weight_sample(n, t, &mut rng);
    let c = BitVec::random(n, &mut rng);
    let mut hits = 0;
    for _ in 0..trials {
        let (probe, flip) = cca_flip_probe(&c, &mut rng);
        assert_ne!(flip.first, flip.second);
        assert_eq!(probe.distance(&c), 2);
        hits += u32::from(flip.succeeds(&e));
    }
    let rate = hits as f64 / trials as f64;
    let p = flip_success_probability(n, t);
    assert!((p - 2.0 * 14.0 / (16.0 * 15.0)).abs() < 1e-12);
    assert!((rate - p).abs() < 0.01, "rate {rate}");
}

#[test]
fn flip_probability_values() {
    let p = flip_success_probability(1024, 50);
    assert!((p - 0.046489).abs() < 5e-7);
    assert!((1.0 / p - 21.5).abs() < 0.05);
    assert_eq!(flip_success_probability(10, 10), 0.0);
    assert_eq!(flip_success_probability(10, 0), 0.0);
}

#[test]
fn flip_probe_breaks_mceliece_with_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(83);
    let kp = mceliece::keygen(&Preset::Toy12.params(), &mut rng).unwrap();
    for _ in 0..20 {
        let m = BitVec::random(kp.public.k(), &mut rng);
        let c = kp.public.encrypt(&m, &mut rng).unwrap();
        let oracle = |probe: &BitVec| {
            if *probe == c {
                return None;
            }
            kp.secret.decrypt_with_error(probe).ok().filter(|(_, z)| z.weight() == 2).map(|(m, _)| m)
        };
        let out = cca_recover(&c, kp.public.generator(), 2, oracle, &mut rng, 10_000).unwrap();
        assert_eq!(out.m, m);
    }
}

#[test]
fn work_factor_values() {
    let wf = work_factor(Formula::McEliecePrange, 1024, 524, 50).unwrap();
    assert!((wf.value() / 1e24 - 1.983).abs() < 0.001, "{}", wf.scientific());
    assert!((wf.log2 - 80.71).abs() < 0.01);
    let cases = [
        (Formula::NiederreiterPrange, 6960, 5413, 119, 295.23),
        (Formula::McEliecePrange, 6960, 5413, 119, 300.65),
        (Formula::NiederreiterPrange, 8192, 6528, 128, 332.24),
        (Formula::McEliecePrange, 8192, 6528, 128, 338.16),
    ];
    for (f, n, k, t, log2) in cases {
        let wf = work_factor(f, n, k, t).unwrap();
        assert!((wf.log2 - log2).abs() < 0.01, "{f} ({n},{k},{t}) = {}", wf.log2);
    }
    let nie = work_factor(Formula::NiederreiterPrange, 6960, 5413, 119).unwrap();
    assert!((nie.value() / 7.5e88 - 1.0).abs() < 0.05, "{}", nie.scientific());
    assert!(matches!(work_factor(Formula::Stern, 1024, 524, 50), Err(Error::Unsupported(_))));
    assert!(work_factor(Formula::McEliecePrange, 10, 11, 1).is_err());
    assert_eq!("nie-prange".parse::<Formula>().unwrap(), Formula::NiederreiterPrange);
}

/// `log₂ C(n, k)` via log-gamma.
fn log2_binom_gamma(n: u64, k: u64) -> f64 {
    (ln_gamma(n as f64 + 1.0) - ln_gamma(k as f64 + 1.0) - ln_gamma((n - k) as f64 + 1.0)) / std::f64::consts::LN_2
}

#[test]
fn work_factor_agrees_with_log_gamma() {
    for (n, k, t) in [(1024u64, 524u64, 50u64), (6960, 5413, 119), (8192, 6528, 128), (64, 40, 3), (2048, 1278, 70)] {
        let mce = work_factor(Formula::McEliecePrange, n, k, t).unwrap();
        let expected = 3.0 * (k as f64).log2() + log2_binom_gamma(n, k) - log2_binom_gamma(n - t, k);
        assert!((mce.log2 - expected).abs() < 1e-6, "mce ({n},{k},{t}): {} vs {expected}", mce.log2);
        let nie = work_factor(Formula::NiederreiterPrange, n, k, t).unwrap();
        let r = n - k;
        let expected = 3.0 * (r as f64).log2() + log2_binom_gamma(n, r) - log2_binom_gamma(n - t, r - t);
        assert!((nie.log2 - expected).abs() < 1e-6, "nie ({n},{k},{t}): {} vs {expected}", nie.log2);
    }
}

#[test]
fn resend_statistics_values() {
    let stats = resend_statistics(1024, 50).unwrap();
    assert!((stats.expected_l1 - 95.117).abs() < 0.001, "{}", stats.expected_l1);
    assert!((stats.p.iter().sum::<f64>() - 1.0).abs() < 1e-12);
    assert_eq!(resend_statistics(1024, 0).unwrap().expected_l1, 0.0);
    let p = resend_guess_probability(1024, 524, 50, 94).unwrap();
    assert!((p - 0.082854).abs() < 1e-6, "{p}");
    assert_eq!((1.0 / p).ceil(), 13.0);
    assert!(resend_guess_probability(1024, 524, 50, 95).is_err());
    assert!(resend_guess_probability(1024, 524, 50, 102).is_err());
}

#[test]
fn reference_overlap_numerator_does_not_normalize() {
    // p_i with C(n−k, t−i) in place of C(n−t, t−i)
    let (n, k, t) = (1024u64, 524u64, 50u64);
    let total = binomial(n, t);
    let sum: f64 = (0..=t).map(|i| log2_ratio(&(binomial(t, i) * binomial(n - k, t - i)), &total).exp2()).sum();
    assert!(sum < 1e-3, "sum = {sum}");
}

#[test]
fn resend_statistics_match_simulation() {
    let mut rng = ChaCha8Rng::seed_from_u64(84);
    let (n, t, trials) = (64, 6, 20_000);
    let stats = resend_statistics(n as u64, t as u64).unwrap();
    let mut l1_sum = 0usize;
    for _ in 0..trials {
        let e1 = fixed_weight_sample(n, t, &mut rng);
        let e2 = fixed_weight_sample(n, t, &mut rng);
        l1_sum += (&e1 ^ &e2).weight();
    }
    let mean = l1_sum as f64 / trials as f64;
    assert!((mean - stats.expected_l1).abs() < 0.05, "{mean} vs {}", stats.expected_l1);
}

#[test]
fn key_size_values() {
    let s = key_sizes(KeyScheme::McEliece, 10, 1024, 50).unwrap();
    assert_eq!((s.public, s.private, s.unit), (536_576, 1_333_892, SizeUnit::Bits));
    let s = key_sizes(KeyScheme::Niederreiter, 10, 1024, 50).unwrap();
    assert_eq!((s.public, s.private, s.unit), (512_000, 1_309_316, SizeUnit::Bits));
    let s = key_sizes(KeyScheme::ClassicMcEliece, 13, 6960, 119).unwrap();
    assert_eq!((s.public, s.private, s.unit), (1_047_319, 13_908, SizeUnit::Bytes));
    let s = key_sizes(KeyScheme::ClassicMcEliece, 13, 8192, 128).unwrap();
    assert_eq!((s.public, s.private), (1_357_824, 14_080));
    assert!(key_sizes(KeyScheme::McEliece, 4, 8, 2).is_err());
    // m < 4 keeps the fractional Beneš term rounded up
    assert_eq!(key_sizes(KeyScheme::ClassicMcEliece, 3, 8, 1).unwrap().private, 1 + 1 + 3);
}

#[test]
fn security_table_rows() {
    let table = security_table();
    assert_eq!(table.len(), 6);
    let row = |n| table.iter().find(|r| r.n == n).copied().unwrap();
    assert_eq!((row(1024).t, row(1024).bits), (38, 57.9));
    assert_eq!((row(512).t, row(512).bits), (21, 33.0));
    assert!(table.iter().tuple_windows().all(|(a, b)| a.n < b.n && a.t < b.t && a.bits < b.bits));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn binomial_satisfies_pascal(n in 1u64..200, k in 0u64..200) {
        prop_assume!(k >= 1 && k <= n);
        prop_assert_eq!(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
    }

    #[test]
    fn overlap_law_normalizes(n in 2u64..400, t in 0u64..40) {
        prop_assume!(2 * t <= n);
        let stats = resend_statistics(n, t).unwrap();
        prop_assert!((stats.p.iter().sum::<f64>() - 1.0).abs() < 1e-9);
        prop_assert!(stats.expected_l1 <= 2.0 * t as f64 + 1e-9);
    }

    #[test]
    fn isd_results_are_consistent(seed in any::<u64>(), t in 0usize..3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = BitMatrix::random(6, 14, &mut rng);
        let m = BitVec::random(6, &mut rng);
        let e = fixed_weight_sample(14, t, &mut rng);
        let c = &g.vec_mul(&m) ^ &e;
        for p in 0..=1 {
            if let Ok(r) = lee_brickell(&g, &c, t, p, &SearchConfig::new(seed, 5000)) {
                assert_consistent(&g, &c, t, &r);
            }
        }
        if let Ok(r) = isd_prange(&g, &c, t, Form::McEliece, &SearchConfig::new(seed, 5000)) {
            assert_consistent(&g, &c, t, &r);
            prop_assert!(g.select_columns(&r.info_set).invert().is_some());
        }
    }
}

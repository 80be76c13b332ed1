use itertools::Itertools;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;

/// Parses `0`, `1`, `a` or `a^k` into a field element.
fn pw(f: &Field, s: &str) -> Elem {
    match s {
        "0" => 0,
        "1" => 1,
        "a" => f.alpha(1),
        _ => f.alpha(s.strip_prefix("a^").unwrap().parse().unwrap()),
    }
}

fn ext_matrix(f: &Field, rows: &[&str]) -> MatGF {
    let rows: Vec<Vec<Elem>> = rows.iter().map(|r| r.split_whitespace().map(|s| pw(f, s)).collect()).collect();
    MatGF::from_rows(f, &rows).unwrap()
}

fn bin(rows: &[&str]) -> MatGF {
    MatGF::from_bits(BitMatrix::from_strs(rows).unwrap())
}

/// Ternary rows written with `-1` for 2.
fn ternary(rows: &[&str]) -> MatGF {
    let f = Field::prime(3).unwrap();
    let rows: Vec<Vec<Elem>> = rows
        .iter()
        .map(|r| r.split_whitespace().map(|s| s.parse::<i32>().unwrap().rem_euclid(3) as Elem).collect())
        .collect();
    MatGF::from_rows(&f, &rows).unwrap()
}

fn row_space(m: &MatGF) -> MatGF {
    let r = m.rref();
    r.reduced.select_rows(&(0..r.rank).collect::<Vec<_>>())
}

fn gf16() -> Field {
    Field::binary(4, 0b10011).unwrap()
}

fn gf9() -> Field {
    Field::new(3, 2, &[2, 2, 1]).unwrap()
}

fn gf16_example(form: ParityForm) -> GoppaCode {
    let f = gf16();
    let g = &Poly::linear(&f, f.alpha(1)) * &Poly::linear(&f, f.alpha(14));
    let support: Vec<Elem> = (2..=13).map(|i| f.alpha(i)).collect();
    GoppaCode::with_form(&g, &support, form).unwrap()
}

fn gf9_example(form: ParityForm) -> GoppaCode {
    let f = gf9();
    let g = Poly::new(&f, vec![0, f.alpha(3), 1]);
    let support: Vec<Elem> = (0..=6).map(|i| f.alpha(i)).collect();
    GoppaCode::with_form(&g, &support, form).unwrap()
}

fn kem_toy() -> GoppaCode {
    let f = Field::binary(4, 0b11001).unwrap();
    let g = Poly::new(&f, vec![f.alpha(1), 1, 1]);
    let mut support = vec![0, 1];
    support.extend((1..=14).map(|i| f.alpha(i)));
    GoppaCode::new(&g, &support).unwrap()
}

/// A binary Goppa code with a random irreducible `g` and a random support.
fn random_binary(m: u32, n: usize, t: usize, rng: &mut ChaCha8Rng) -> GoppaCode {
    let f = Field::binary_default(m).unwrap();
    let g = Poly::random_monic_irreducible(&f, t, rng).unwrap();
    let mut elems: Vec<Elem> = f.elements().collect();
    rand::seq::SliceRandom::shuffle(&mut elems[..], rng);
    GoppaCode::new(&g, &elems[..n]).unwrap()
}

#[test]
fn gf16_example_matrices() {
    let code = gf16_example(ParityForm::Syndrome);
    let f = code.field().clone();
    assert_eq!(code.goppa_polynomial(), &Poly::new(&f, vec![1, f.alpha(7), 1]));
    let h_ext = ext_matrix(
        &f,
        &[
            "a^9 a^10 a^9 a^14 a^6 0 a^10 a^8 a^2 a^7 a^14 a^6",
            "a^12 a^6 a^6 a a^11 1 a^14 a^8 a^11 a^14 a^12 a",
        ],
    );
    assert_eq!(code.parity_check_ext(), &h_ext);
    let h = bin(&[
        "010100110110",
        "111000100100",
        "010010111001",
        "101110000111",
        "100001110110",
        "100110001011",
        "111010011010",
        "111010101110",
    ]);
    assert_eq!(code.parity_check(), &h);
    let g = bin(&["111101010100", "010011110010", "001010111000", "010100110001"]);
    assert_eq!(code.dimension(), 4);
    assert_eq!(row_space(code.generator()), row_space(&g));
    assert_eq!(f.inv(code.goppa_polynomial().eval(f.alpha(2))).unwrap(), f.alpha(12));
}

#[test]
fn both_forms_define_the_same_code() {
    for code in [gf16_example(ParityForm::Vandermonde), gf9_example(ParityForm::Vandermonde)] {
        let other = GoppaCode::with_form(code.goppa_polynomial(), code.support(), ParityForm::Syndrome).unwrap();
        assert_ne!(code.parity_check_ext(), other.parity_check_ext());
        assert_eq!(row_space(code.generator()), row_space(other.generator()));
        assert_eq!(code.dimension(), other.dimension());
    }
}

#[test]
fn syndrome_form_is_triangular_hankel_times_vandermonde() {
    // H_syn = −C·H_vand with C[i][l] = g_{i+l+1}
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for _ in 0..10 {
        let code = random_binary(6, 40, 5, &mut rng);
        let f = code.field();
        let g = code.goppa_polynomial();
        let t = code.t();
        let mut c = MatGF::zeros(f, t, t);
        for i in 0..t {
            for l in 0..t - i {
                c.set(i, l, f.neg(g.coeff(i + l + 1)));
            }
        }
        let syn = GoppaCode::with_form(g, code.support(), ParityForm::Syndrome).unwrap();
        assert_eq!(&c.mul(code.parity_check_ext()), syn.parity_check_ext());
    }
}

#[test]
fn syndrome_polynomial_is_sum_of_inverses() {
    let mut rng = ChaCha8Rng::seed_from_u64(32);
    let code = random_binary(5, 20, 3, &mut rng);
    let f = code.field();
    let g = code.goppa_polynomial();
    for _ in 0..50 {
        let y: Vec<Elem> = (0..20).map(|_| rng.gen_range(0..2)).collect();
        let mut expected = Poly::zero(f);
        for (j, &yj) in y.iter().enumerate() {
            if yj == 1 {
                expected = &expected + &Poly::linear(f, code.support()[j]).inv_mod(g).unwrap();
            }
        }
        assert_eq!(code.syndrome(&y), expected);
        assert_eq!(code.syndrome_bits(&BitVec::from_elems(&y)), expected);
    }
}

#[test]
fn gf9_example_matrices() {
    let code = gf9_example(ParityForm::Syndrome);
    let f = code.field().clone();
    let h_ext = ext_matrix(
        &f,
        &["a^4 a^3 a^2 a 1 a^7 a^6", "a^6 a^3 a^6 a^2 a^3 a^5 a^5"],
    );
    assert_eq!(code.parity_check_ext(), &h_ext);
    let h = ternary(&["-1 1 1 0 1 -1 -1", "0 -1 1 1 0 1 -1", "-1 1 -1 1 1 0 0", "-1 -1 -1 1 -1 -1 -1"]);
    assert_eq!(code.parity_check(), &h);
    let g = ternary(&["-1 0 -1 1 0 0 0", "-1 0 -1 0 1 1 0", "-1 1 -1 0 0 0 1"]);
    assert_eq!(code.dimension(), 3);
    assert_eq!(row_space(code.generator()), row_space(&g));
    assert!(g.mul(&h.transpose()).is_zero());
}

#[test]
fn gf9_walkthrough() {
    let code = gf9_example(ParityForm::Syndrome);
    let f = code.field().clone();
    let minus_one = f.neg(1);
    let y = vec![0, 0, 0, 0, 0, 0, minus_one];
    assert_eq!(code.syndrome(&y), Poly::new(&f, vec![f.alpha(2), f.alpha(1)]));
    // σ = z + α², w = α⁴ satisfy the key equation and give e₇ = −1
    let sigma = Poly::new(&f, vec![f.alpha(2), 1]);
    let w = Poly::constant(&f, f.alpha(4));
    assert_eq!(sigma.mul_mod(&code.syndrome(&y), code.goppa_polynomial()).unwrap(), w);
    assert_eq!(code.roots_in_support(&sigma), vec![6]);
    let (c, e) = code.decode(&y).unwrap();
    assert_eq!(e, y);
    assert_eq!(c, vec![0; 7]);
    assert_eq!(code.recover_message(&c).unwrap(), vec![0, 0, 0]);
}

#[test]
fn gf9_code_corrects_single_errors() {
    let code = gf9_example(ParityForm::Vandermonde);
    let base = code.base_field().clone();
    for idx in 0..27u32 {
        let msg = vec![idx % 3, idx / 3 % 3, idx / 9];
        let c = code.encode(&msg);
        assert!(code.is_codeword(&c));
        for pos in 0..7 {
            for v in 1..3 {
                let mut y = c.clone();
                y[pos] = base.add(y[pos], v);
                let (dc, e) = code.decode(&y).unwrap();
                assert_eq!(dc, c);
                assert_eq!(e.iter().filter(|&&x| x != 0).count(), 1);
                assert_eq!(code.recover_message(&dc).unwrap(), msg);
            }
        }
    }
}

#[test]
fn kem_toy_parity_check() {
    let code = kem_toy();
    let f = code.field().clone();
    let h_ext = ext_matrix(
        &f,
        &[
            "a^14 a^14 a^13 a^9 a^6 a^6 a^3 a^7 a^11 a^7 a^9 a^3 a^12 a^13 a^11 a^12",
            "0 a^14 a^14 a^11 a^9 a^10 a^8 a^13 a^3 1 a^3 a^13 a^8 a^10 a^9 a^11",
        ],
    );
    assert_eq!(code.parity_check_ext(), &h_ext);
    let h_hat = bin(&[
        "0001110111101011",
        "0010110101001101",
        "1111110111100110",
        "1100111010010010",
        "0001100001000011",
        "0000011100011100",
        "0111101100011011",
        "0111011010101101",
    ]);
    assert_eq!(code.parity_check(), &h_hat);
    let t = bin(&[
        "10000111", "01110001", "11111011", "01011101", "00011110", "11001110", "10110100", "01100110",
    ]);
    assert_eq!(code.parity_check().systematic_form().unwrap(), t);
}

#[test]
fn kem_toy_syndrome_of_first_two_positions() {
    // 1/z + 1/(z + 1) mod z² + z + β reduces to the constant β^14
    let code = kem_toy();
    let f = code.field().clone();
    let v = BitVec::from_support(16, &[0, 1]);
    assert_eq!(code.syndrome_bits(&v), Poly::constant(&f, f.alpha(14)));
    assert_ne!(f.alpha(13), f.alpha(14));
    assert_eq!(code.patterson_decode(&v).unwrap(), v);
    // two errors exceed the ⌊t/2⌋ = 1 reach of the generic decoder
    assert!(matches!(code.key_equation_decode(&v.to_elems()), Err(Error::DecodingFailure(_))));
}

#[test]
fn gf16_example_key_equation_and_message_recovery() {
    let code = gf16_example(ParityForm::Syndrome);
    let mut rng = ChaCha8Rng::seed_from_u64(37);
    for idx in 0..16u32 {
        let msg: Vec<Elem> = (0..4).map(|i| (idx >> i) & 1).collect();
        let c = code.encode(&msg);
        assert_eq!(code.key_equation_decode(&c).unwrap(), vec![0; 12]);
        for pos in 0..12 {
            let mut y = c.clone();
            y[pos] ^= 1;
            let mut e = vec![0; 12];
            e[pos] = 1;
            assert_eq!(code.key_equation_decode(&y).unwrap(), e);
        }
    }
    for _ in 0..100 {
        let msg: Vec<Elem> = (0..4).map(|_| rng.gen_range(0..2)).collect();
        assert_eq!(code.recover_message(&code.encode(&msg)).unwrap(), msg);
    }
    let mut not_codeword = vec![0; 12];
    not_codeword[0] = 1;
    assert!(matches!(code.recover_message(&not_codeword), Err(Error::Inconsistent(_))));
}

#[test]
fn gf16_example_decodes_up_to_two_errors() {
    // g is reducible but squarefree, so the code still has distance 5
    let code = gf16_example(ParityForm::Syndrome);
    let zero = BitVec::zeros(12);
    for w in 0..=2 {
        for pos in (0..12).combinations(w) {
            let e = BitVec::from_support(12, &pos);
            let y = &zero ^ &e;
            assert_eq!(code.patterson_decode(&y).unwrap(), e, "pattern {pos:?}");
        }
    }
}

#[test]
fn patterson_exhaustive_small() {
    let mut rng = ChaCha8Rng::seed_from_u64(33);
    let code = random_binary(4, 16, 2, &mut rng);
    let g = code.generator_bits().unwrap().clone();
    for _ in 0..3 {
        let msg = BitVec::random(g.rows(), &mut rng);
        let c = g.vec_mul(&msg);
        for w in 0..=2 {
            for pos in (0..16).combinations(w) {
                let e = BitVec::from_support(16, &pos);
                assert_eq!(code.patterson_decode(&(&c ^ &e)).unwrap(), e);
            }
        }
    }
}

#[test]
fn key_equation_matches_patterson_within_half_t() {
    let mut rng = ChaCha8Rng::seed_from_u64(34);
    let code = random_binary(6, 50, 6, &mut rng);
    for _ in 0..200 {
        let w = rng.gen_range(0..=3);
        let pos = rand::seq::index::sample(&mut rng, 50, w).into_vec();
        let e = BitVec::from_support(50, &pos);
        assert_eq!(code.key_equation_decode(&e.to_elems()).unwrap(), e.to_elems());
        assert_eq!(code.patterson_decode(&e).unwrap(), e);
    }
}

#[test]
fn too_many_errors_are_detected_or_miscorrected() {
    let mut rng = ChaCha8Rng::seed_from_u64(35);
    let code = random_binary(5, 32, 3, &mut rng);
    for _ in 0..200 {
        let pos = rand::seq::index::sample(&mut rng, 32, 4).into_vec();
        let e = BitVec::from_support(32, &pos);
        match code.patterson_decode(&e) {
            Ok(found) => {
                // a miscorrection lands on another coset member within distance t
                assert_ne!(found, e);
                assert!(found.weight() <= 3);
                assert_eq!(code.syndrome_bits(&found), code.syndrome_bits(&e));
            }
            Err(err) => assert!(matches!(err, Error::DecodingFailure(_))),
        }
    }
}

#[test]
fn ternary_random_codes_correct_half_t() {
    let mut rng = ChaCha8Rng::seed_from_u64(36);
    let f = Field::new(3, 3, &[1, 2, 0, 1]).unwrap();
    for _ in 0..5 {
        let g = Poly::random_monic_irreducible(&f, 4, &mut rng).unwrap();
        let mut elems: Vec<Elem> = f.elements().collect();
        rand::seq::SliceRandom::shuffle(&mut elems[..], &mut rng);
        let code = GoppaCode::new(&g, &elems[..20]).unwrap();
        let base = code.base_field().clone();
        for _ in 0..30 {
            let msg: Vec<Elem> = (0..code.dimension()).map(|_| rng.gen_range(0..3)).collect();
            let c = code.encode(&msg);
            let mut y = c.clone();
            for pos in rand::seq::index::sample(&mut rng, 20, 2) {
                y[pos] = base.add(y[pos], rng.gen_range(1..3));
            }
            let (dc, _) = code.decode(&y).unwrap();
            assert_eq!(dc, c);
            assert_eq!(code.recover_message(&dc).unwrap(), msg);
        }
    }
}

#[test]
fn construction_errors() {
    let f = gf16();
    let g = &Poly::linear(&f, f.alpha(1)) * &Poly::linear(&f, f.alpha(14));
    let err = GoppaCode::new(&g, &[f.alpha(2), f.alpha(1)]).unwrap_err();
    assert!(matches!(err, Error::SupportRoot { index: 1 }));
    let err = GoppaCode::new(&g, &[f.alpha(2), f.alpha(3), f.alpha(2)]).unwrap_err();
    assert!(matches!(err, Error::SupportRepeated { first: 0, second: 2 }));
    assert!(GoppaCode::new(&Poly::one(&f), &[1]).is_err());
    assert!(GoppaCode::new(&g, &[]).is_err());
    assert!(GoppaCode::new(&g, &[99]).is_err());
}

#[test]
fn text_roundtrip() {
    for code in [gf16_example(ParityForm::Syndrome), gf9_example(ParityForm::Vandermonde), kem_toy()] {
        let back = GoppaCode::from_text_at(&code.to_text(), 1).unwrap();
        assert_eq!(back.parity_check(), code.parity_check());
        assert_eq!(back.form(), code.form());
    }
    let bad = "goppa 2,4,10011 syndrome\ng 1 7 1\nL 4 5 4\n";
    assert!(matches!(GoppaCode::from_text_at(bad, 5), Err(Error::Parse { .. })));
    let err = GoppaCode::from_text_at("goppa 2,4,10011 diagonal\n", 3).unwrap_err();
    assert!(matches!(err, Error::Parse { line: 3, .. }), "{err:?}");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn codewords_have_zero_syndrome_and_decode(seed in any::<u64>(), m in 3u32..=6, t in 2usize..=4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let q = 1usize << m;
        let n = rng.gen_range((m as usize * t + 1).min(q)..=q);
        let code = random_binary(m, n, t, &mut rng);
        prop_assert!(code.dimension() + m as usize * t >= n);
        let g = code.generator_bits().unwrap();
        let h = code.parity_bits().unwrap();
        prop_assert!(g.mul(&h.transpose()).is_zero());
        let msg = BitVec::random(g.rows(), &mut rng);
        let c = g.vec_mul(&msg);
        prop_assert!(code.syndrome_bits(&c).is_zero());
        let w = rng.gen_range(0..=t.min(n));
        let e = BitVec::from_support(n, &rand::seq::index::sample(&mut rng, n, w).into_vec());
        prop_assert_eq!(code.patterson_decode(&(&c ^ &e)).unwrap(), e);
        prop_assert_eq!(code.recover_message(&c.to_elems()).unwrap(), msg.to_elems());
    }
}

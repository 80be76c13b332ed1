//! The worked examples as ready-made objects, together with the matrices and
//! reference vectors that accompany them.
//!
//! Extension-field entries are written `0`, `1`, `a` or `a^k` for powers of
//! the field generator; ternary entries use `-1` for 2.

use crate::algebra::{Elem, Field, Poly};
use crate::error::{Error, Result};
use crate::goppa::{GoppaCode, ParityForm};
use crate::matrix::{BitMatrix, BitVec, MatGF};

/// `[12, 4]` binary Goppa code over GF(16) = GF(2)[x]/(x^4 + x + 1) with
/// `g = z² + α⁷z + 1` and support `α², …, α¹³`.
pub mod gf16 {
    pub const MODULUS: u32 = 0b10011;
    pub const H_EXT: [&str; 2] = [
        "a^9 a^10 a^9 a^14 a^6 0 a^10 a^8 a^2 a^7 a^14 a^6",
        "a^12 a^6 a^6 a a^11 1 a^14 a^8 a^11 a^14 a^12 a",
    ];
    pub const H: [&str; 8] = [
        "010100110110",
        "111000100100",
        "010010111001",
        "101110000111",
        "100001110110",
        "100110001011",
        "111010011010",
        "111010101110",
    ];
    pub const G: [&str; 4] = ["111101010100", "010011110010", "001010111000", "010100110001"];
}

/// `[7, 3]` ternary Goppa code from GF(9) = GF(3)[x]/(x² + 2x + 2) with
/// `g = z² + α³z` and support `α⁰, …, α⁶`, and its one-error walkthrough.
pub mod gf9 {
    pub const MODULUS: [u32; 3] = [2, 2, 1];
    pub const H_EXT: [&str; 2] = ["a^4 a^3 a^2 a 1 a^7 a^6", "a^6 a^3 a^6 a^2 a^3 a^5 a^5"];
    pub const H: [&str; 4] = ["-1 1 1 0 1 -1 -1", "0 -1 1 1 0 1 -1", "-1 1 -1 1 1 0 0", "-1 -1 -1 1 -1 -1 -1"];
    pub const G: [&str; 3] = ["-1 0 -1 1 0 0 0", "-1 0 -1 0 1 1 0", "-1 1 -1 0 0 0 1"];
    /// Received word: the zero codeword with `−1` in position 7.
    pub const RECEIVED: [i32; 7] = [0, 0, 0, 0, 0, 0, -1];
    /// Syndrome `α² + αz`, lowest degree first.
    pub const SYNDROME: [&str; 2] = ["a^2", "a"];
    /// Error locator `z + α²`.
    pub const SIGMA: [&str; 2] = ["a^2", "1"];
    /// Error evaluator `α⁴`.
    pub const OMEGA: &str = "a^4";
    /// 1-based error position and its value.
    pub const ERROR_POSITION: usize = 7;
    pub const ERROR_VALUE: i32 = -1;
    pub const MESSAGE: [u32; 3] = [0, 0, 0];
}

/// Classic McEliece toy over GF(16) = GF(2)[x]/(x^4 + x^3 + 1) with
/// `g = z² + z + β` and support `0, 1, β, …, β¹⁴`.
pub mod kem {
    pub const MODULUS: u32 = 0b11001;
    pub const H_EXT: [&str; 2] = [
        "a^14 a^14 a^13 a^9 a^6 a^6 a^3 a^7 a^11 a^7 a^9 a^3 a^12 a^13 a^11 a^12",
        "0 a^14 a^14 a^11 a^9 a^10 a^8 a^13 a^3 1 a^3 a^13 a^8 a^10 a^9 a^11",
    ];
    pub const H_HAT: [&str; 8] = [
        "0001110111101011",
        "0010110101001101",
        "1111110111100110",
        "1100111010010010",
        "0001100001000011",
        "0000011100011100",
        "0111101100011011",
        "0111011010101101",
    ];
    pub const T: [&str; 8] =
        ["10000111", "01110001", "11111011", "01011101", "00011110", "11001110", "10110100", "01100110"];
    pub const ERROR: &str = "1100000000000000";
    pub const C0: &str = "11000000";
    /// SHA-256 confirmation hash over `0`/`1` character strings.
    pub const C1_SHA256_ASCII: &str = "26fe36f811ac8fe9f19ba997a39d3682ef06b29509cca1903ffe4a0b247c833f";
    /// Reference session key; no encoding tried so far reproduces it.
    pub const K_REFERENCE: &str = "90d7c9dccc4689f6894b1b6e58ee9b38328e4df9937536eb9b5715a38ee4e1be";
}

/// Checkpoints of the lexicographic sweep over [`IsdFixture`]; 1-based.
pub mod sweep {
    pub const FIRST_INFO_SET: [usize; 8] = [1, 2, 3, 4, 5, 6, 7, 8];
    pub const SINGULAR_ITERATION: u64 = 4;
    pub const SINGULAR_INFO_SET: [usize; 8] = [1, 2, 3, 4, 5, 6, 7, 11];
    pub const HIT_ITERATION: u64 = 8159;
    pub const HIT_INFO_SET: [usize; 8] = [2, 4, 5, 6, 7, 8, 10, 11];
    pub const TOTAL: u64 = 12_870;
}

/// 4×5 matrix and its reference generalized inverse.
pub mod geninv {
    pub const B: [&str; 4] = ["00010", "10000", "01010", "00110"];
    pub const B_DAGGER: [&str; 5] = ["0100", "1010", "1001", "1000", "0000"];
}

/// Parses `0`, `1`, `a` or `a^k` (k may be negative) into an element.
pub fn parse_power(field: &Field, s: &str) -> Result<Elem> {
    match s {
        "0" => Ok(0),
        "1" => Ok(1),
        "a" => Ok(field.alpha(1)),
        _ => s
            .strip_prefix("a^")
            .and_then(|k| k.parse::<i64>().ok())
            .map(|k| field.alpha(k))
            .ok_or_else(|| Error::parse(1, format!("bad field element '{s}'"))),
    }
}

/// Rows of space-separated powers.
pub fn ext_matrix(field: &Field, rows: &[&str]) -> Result<MatGF> {
    let rows = rows
        .iter()
        .map(|r| r.split_whitespace().map(|s| parse_power(field, s)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    MatGF::from_rows(field, &rows)
}

/// Rows of space-separated integers reduced mod 3.
pub fn ternary_matrix(rows: &[&str]) -> Result<MatGF> {
    let f = Field::prime(3)?;
    let rows = rows
        .iter()
        .map(|r| {
            r.split_whitespace()
                .map(|s| {
                    s.parse::<i32>().map(|v| v.rem_euclid(3) as Elem).map_err(|_| Error::parse(1, format!("bad entry '{s}'")))
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    MatGF::from_rows(&f, &rows)
}

pub fn bit_matrix(rows: &[&str]) -> BitMatrix {
    BitMatrix::from_strs(rows).expect("fixture rows have equal length")
}

pub fn gf16_field() -> Field {
    Field::binary(4, gf16::MODULUS).expect("fixture modulus is irreducible")
}

pub fn gf16_code(form: ParityForm) -> GoppaCode {
    let f = gf16_field();
    let g = &Poly::linear(&f, f.alpha(1)) * &Poly::linear(&f, f.alpha(14));
    let support: Vec<Elem> = (2..=13).map(|i| f.alpha(i)).collect();
    GoppaCode::with_form(&g, &support, form).expect("fixture code is valid")
}

pub fn gf9_field() -> Field {
    Field::new(3, 2, &gf9::MODULUS).expect("fixture modulus is irreducible")
}

pub fn gf9_code(form: ParityForm) -> GoppaCode {
    let f = gf9_field();
    let g = Poly::new(&f, vec![0, f.alpha(3), 1]);
    let support: Vec<Elem> = (0..=6).map(|i| f.alpha(i)).collect();
    GoppaCode::with_form(&g, &support, form).expect("fixture code is valid")
}

pub fn kem_field() -> Field {
    Field::binary(4, kem::MODULUS).expect("fixture modulus is irreducible")
}

pub fn kem_goppa_polynomial() -> Poly {
    let f = kem_field();
    Poly::new(&f, vec![f.alpha(1), 1, 1])
}

pub fn kem_support() -> Vec<Elem> {
    let f = kem_field();
    let mut support = vec![0, 1];
    support.extend((1..=14).map(|i| f.alpha(i)));
    support
}

pub fn kem_code() -> GoppaCode {
    GoppaCode::new(&kem_goppa_polynomial(), &kem_support()).expect("fixture code is valid")
}

/// The small McEliece instance of the information-set decoding listing.
#[derive(Clone, Debug)]
pub struct IsdFixture {
    pub g: BitMatrix,
    pub m: BitVec,
    pub e: BitVec,
    pub c: BitVec,
}

impl IsdFixture {
    pub fn new() -> Self {
        let g = bit_matrix(&[
            "1010011010000000",
            "0111010101000000",
            "1111000000000001",
            "0111101000010000",
            "1011110000001000",
            "1010110100000010",
            "1001111000000100",
            "0110001100100000",
        ]);
        let parse = |s: &str| s.parse::<BitVec>().expect("fixture vector");
        IsdFixture { g, m: parse("00000100"), e: parse("1010000000000000"), c: parse("0000110100000010") }
    }

    /// Weight of the listed error, the smallest `t` for which the instance is solvable.
    pub fn t(&self) -> usize {
        self.e.weight()
    }
}

impl Default for IsdFixture {
    fn default() -> Self {
        Self::new()
    }
}

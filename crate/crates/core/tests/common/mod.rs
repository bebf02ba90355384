//! Test-only reference implementations, written straight from the cipher
//! definition and sharing no code with the library.

#![allow(dead_code)]

use simon_grover::{BitWord, CipherParams, CipherState, Variant};

const Z: [&str; 5] = [
    "11111010001001010110000111001101111101000100101011000011100110",
    "10001110111110010011000010110101000111011111001001100001011010",
    "10101111011100000011010010011000101000010001111110010110110011",
    "11011011101011000110010111100000010010001010011100110100001111",
    "11010001111001101011011000100000010111000011001010010011101111",
];

/// (n, m, T, z index) for each standard variant.
pub fn shape(v: Variant) -> (u32, usize, usize, usize) {
    match v {
        Variant::Simon32_64 => (16, 4, 32, 0),
        Variant::Simon48_72 => (24, 3, 36, 0),
        Variant::Simon48_96 => (24, 4, 36, 1),
        Variant::Simon64_96 => (32, 3, 42, 2),
        Variant::Simon64_128 => (32, 4, 44, 3),
        Variant::Simon96_96 => (48, 2, 52, 2),
        Variant::Simon96_144 => (48, 3, 54, 3),
        Variant::Simon128_128 => (64, 2, 68, 2),
        Variant::Simon128_192 => (64, 3, 69, 3),
        Variant::Simon128_256 => (64, 4, 72, 4),
    }
}

fn mask(n: u32) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1 << n) - 1
    }
}

fn rotl(x: u64, r: u32, n: u32) -> u64 {
    let r = r % n;
    if r == 0 {
        x
    } else {
        ((x << r) | (x >> (n - r))) & mask(n)
    }
}

fn rotr(x: u64, r: u32, n: u32) -> u64 {
    rotl(x, n - r % n, n)
}

/// Round keys from `key = [k0, .., k_{m-1}]`.
pub fn ref_schedule(v: Variant, key: &[u64]) -> Vec<u64> {
    let (n, m, t, z) = shape(v);
    let z = Z[z].as_bytes();
    let mut k = key.to_vec();
    for i in 0..t - m {
        let mut tmp = rotr(k[i + m - 1], 3, n);
        if m == 4 {
            tmp ^= k[i + 1];
        }
        tmp ^= rotr(tmp, 1, n);
        let zbit = (z[i % 62] == b'1') as u64;
        k.push((!k[i] & mask(n)) ^ tmp ^ zbit ^ 3);
    }
    k
}

pub fn ref_encrypt(v: Variant, key: &[u64], (mut x, mut y): (u64, u64)) -> (u64, u64) {
    let n = shape(v).0;
    for k in ref_schedule(v, key) {
        let f = (rotl(x, 1, n) & rotl(x, 8, n)) ^ rotl(x, 2, n);
        (x, y) = (y ^ f ^ k, x);
    }
    (x, y)
}

/// Splits `hex` into `count` words of `n` bits, most significant first.
pub fn hex_words(hex: &str, n: u32, count: usize) -> Vec<u64> {
    let digits = (n / 4) as usize;
    assert_eq!(hex.len(), digits * count, "{hex}");
    (0..count)
        .map(|i| u64::from_str_radix(&hex[i * digits..(i + 1) * digits], 16).unwrap())
        .collect()
}

/// Published vectors as `(key [k0..], plaintext, ciphertext)`.
pub fn published(v: Variant) -> (Vec<u64>, (u64, u64), (u64, u64)) {
    let (key, pt, ct) = match v {
        Variant::Simon32_64 => ("1918111009080100", "65656877", "c69be9bb"),
        Variant::Simon48_72 => ("1211100a0908020100", "6120676e696c", "dae5ac292cac"),
        Variant::Simon48_96 => ("1a19181211100a0908020100", "72696320646e", "6e06a5acf156"),
        Variant::Simon64_96 => ("131211100b0a090803020100", "6f7220676e696c63", "5ca2e27f111a8fc8"),
        Variant::Simon64_128 => (
            "1b1a1918131211100b0a090803020100",
            "656b696c20646e75",
            "44c8fc20b9dfa07a",
        ),
        Variant::Simon96_96 => (
            "0d0c0b0a0908050403020100",
            "2072616c6c69702065687420",
            "602807a462b469063d8ff082",
        ),
        Variant::Simon96_144 => (
            "1514131211100d0c0b0a0908050403020100",
            "74616874207473756420666f",
            "ecad1c6c451e3f59c5db1ae9",
        ),
        Variant::Simon128_128 => (
            "0f0e0d0c0b0a09080706050403020100",
            "63736564207372656c6c657661727420",
            "49681b1e1e54fe3f65aa832af84e0bbc",
        ),
        Variant::Simon128_192 => (
            "17161514131211100f0e0d0c0b0a09080706050403020100",
            "206572656874206e6568772065626972",
            "c4ac61effcdc0d4f6c9c8d6e2597b85b",
        ),
        Variant::Simon128_256 => (
            "1f1e1d1c1b1a191817161514131211100f0e0d0c0b0a09080706050403020100",
            "74206e69206d6f6f6d69732061207369",
            "8d2b5579afc8a3a03bf72a87efe7b868",
        ),
    };
    let (n, m, _, _) = shape(v);
    let mut k = hex_words(key, n, m);
    k.reverse();
    let p = hex_words(pt, n, 2);
    let c = hex_words(ct, n, 2);
    (k, (p[0], p[1]), (c[0], c[1]))
}

pub fn words(key: &[u64], n: u32) -> Vec<BitWord> {
    key.iter().map(|&w| BitWord::new(w, n).unwrap()).collect()
}

pub fn state((l, r): (u64, u64), n: u32) -> CipherState {
    CipherState::new(BitWord::new(l, n).unwrap(), BitWord::new(r, n).unwrap()).unwrap()
}

pub fn unstate(s: CipherState) -> (u64, u64) {
    (s.left.value(), s.right.value())
}

pub fn random_word(rng: &mut impl rand::Rng, n: u32) -> u64 {
    rng.gen::<u64>() & mask(n)
}

/// Six-bit toy cipher: pair files of the key-recovery walkthrough.
pub const TOY_PAIR_1: &str = "1d 1f";
pub const TOY_PAIR_2: &str = "0d 33";

pub fn toy() -> CipherParams {
    CipherParams::reduced_6bit()
}

/// `sin²((2j+1)·asin(sqrt(s/N)))`.
pub fn closed_form_success(key_bits: u32, marked: f64, j: u64) -> f64 {
    let theta = (marked / (1u64 << key_bits) as f64).sqrt().asin();
    ((2 * j + 1) as f64 * theta).sin().powi(2)
}

//! Fixed-width bit words.
//!
//! A [`BitWord`] stores up to 64 bits. Position 0 is the leftmost element of
//! the array notation `[b0, b1, ..., b(n-1)]`, which is the most significant
//! bit of the integer value. With that orientation, a left rotation by `j`
//! moves the element at position `i + j` into position `i`, and it coincides
//! with an integer rotate-left.

use std::fmt;
use std::ops::{BitAnd, BitXor, BitXorAssign, Not};

use crate::error::{Error, Result};

pub const MAX_WORD_BITS: u32 = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BitWord {
    value: u64,
    width: u32,
}

fn mask(width: u32) -> u64 {
    if width == 64 {
        u64::MAX
    } else {
        (1u64 << width) - 1
    }
}

impl BitWord {
    pub fn new(value: u64, width: u32) -> Result<Self> {
        if width == 0 || width > MAX_WORD_BITS {
            return Err(Error::params(format!("word width {width} not in 1..=64")));
        }
        if value & !mask(width) != 0 {
            return Err(Error::params(format!(
                "value {value:#x} does not fit in {width} bits"
            )));
        }
        Ok(BitWord { value, width })
    }

    /// A uniformly random word.
    pub fn random<R: rand::Rng + ?Sized>(rng: &mut R, width: u32) -> Self {
        assert!(width > 0 && width <= MAX_WORD_BITS);
        BitWord {
            value: rng.gen::<u64>() & mask(width),
            width,
        }
    }

    pub fn zero(width: u32) -> Self {
        assert!(width > 0 && width <= MAX_WORD_BITS);
        BitWord { value: 0, width }
    }

    /// Builds a word from bits in array order (position 0 first).
    pub fn from_bits(bits: &[bool]) -> Result<Self> {
        let width = u32::try_from(bits.len()).unwrap_or(u32::MAX);
        let value = bits.iter().fold(0u64, |acc, &b| (acc << 1) | b as u64);
        BitWord::new(value, width)
    }

    /// Parses a string of `0`/`1` characters in array order.
    pub fn from_bit_str(s: &str) -> Result<Self> {
        let bits = s
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(Error::parse(format!("`{s}` is not a bit string"))),
            })
            .collect::<Result<Vec<_>>>()?;
        if bits.is_empty() {
            return Err(Error::parse("empty bit string"));
        }
        BitWord::from_bits(&bits)
    }

    pub fn value(self) -> u64 {
        self.value
    }

    pub fn width(self) -> u32 {
        self.width
    }

    pub fn bit(self, pos: usize) -> bool {
        assert!(pos < self.width as usize, "bit {pos} out of range");
        (self.value >> (self.width as usize - 1 - pos)) & 1 == 1
    }

    pub fn with_bit(self, pos: usize, bit: bool) -> Self {
        assert!(pos < self.width as usize, "bit {pos} out of range");
        let m = 1u64 << (self.width as usize - 1 - pos);
        let value = if bit { self.value | m } else { self.value & !m };
        BitWord { value, ..self }
    }

    pub fn bits(self) -> Vec<bool> {
        (0..self.width as usize).map(|i| self.bit(i)).collect()
    }

    pub fn to_bit_string(self) -> String {
        self.bits().iter().map(|&b| if b { '1' } else { '0' }).collect()
    }

    /// Left circular shift `S^j`; `j` is reduced mod the width.
    pub fn rotl(self, j: u32) -> Self {
        let j = j % self.width;
        if j == 0 {
            return self;
        }
        let m = mask(self.width);
        let value = ((self.value << j) | (self.value >> (self.width - j))) & m;
        BitWord { value, ..self }
    }

    /// Right circular shift `S^{-j}`.
    pub fn rotr(self, j: u32) -> Self {
        let j = j % self.width;
        self.rotl(self.width - j)
    }

    pub fn count_ones(self) -> u32 {
        self.value.count_ones()
    }
}

impl BitXor for BitWord {
    type Output = BitWord;

    fn bitxor(self, rhs: BitWord) -> BitWord {
        assert_eq!(self.width, rhs.width, "width mismatch");
        BitWord {
            value: self.value ^ rhs.value,
            width: self.width,
        }
    }
}

impl BitXorAssign for BitWord {
    fn bitxor_assign(&mut self, rhs: BitWord) {
        *self = *self ^ rhs;
    }
}

impl BitAnd for BitWord {
    type Output = BitWord;

    fn bitand(self, rhs: BitWord) -> BitWord {
        assert_eq!(self.width, rhs.width, "width mismatch");
        BitWord {
            value: self.value & rhs.value,
            width: self.width,
        }
    }
}

impl Not for BitWord {
    type Output = BitWord;

    fn not(self) -> BitWord {
        BitWord {
            value: !self.value & mask(self.width),
            width: self.width,
        }
    }
}

impl fmt::Display for BitWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = (self.width as usize).div_ceil(4);
        write!(f, "{:0digits$x}", self.value)
    }
}

impl serde::Serialize for BitWord {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_bit_string())
    }
}

/// Parses hex into exactly `nbits` bits, most significant first.
/// Leading digits beyond `nbits` must be zero.
pub fn hex_to_bits(hex: &str, nbits: usize) -> Result<Vec<bool>> {
    let hex = hex.trim();
    let hex = hex.strip_prefix("0x").unwrap_or(hex);
    if hex.is_empty() {
        return Err(Error::parse("empty hex string"));
    }
    let mut bits = Vec::with_capacity(hex.len() * 4);
    for c in hex.chars().filter(|c| *c != '_') {
        let d = c
            .to_digit(16)
            .ok_or_else(|| Error::parse(format!("`{hex}` is not hex")))?;
        bits.extend((0..4).rev().map(|s| (d >> s) & 1 == 1));
    }
    if bits.len() < nbits {
        let mut padded = vec![false; nbits - bits.len()];
        padded.extend(bits);
        return Ok(padded);
    }
    let excess = bits.len() - nbits;
    if bits[..excess].iter().any(|&b| b) {
        return Err(Error::parse(format!("`{hex}` does not fit in {nbits} bits")));
    }
    Ok(bits.split_off(excess))
}

/// Formats bits (most significant first) as zero-padded hex.
pub fn bits_to_hex(bits: &[bool]) -> String {
    let pad = (4 - bits.len() % 4) % 4;
    let padded: Vec<bool> = std::iter::repeat_n(false, pad)
        .chain(bits.iter().copied())
        .collect();
    padded
        .chunks(4)
        .map(|c| {
            let d = c.iter().fold(0u32, |acc, &b| (acc << 1) | b as u32);
            std::char::from_digit(d, 16).unwrap()
        })
        .collect()
}

pub fn bits_to_string(bits: &[bool]) -> String {
    bits.iter().map(|&b| if b { '1' } else { '0' }).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn array_orientation() {
        let w = BitWord::from_bit_str("011").unwrap();
        assert_eq!(w.value(), 0b011);
        assert!(!w.bit(0));
        assert!(w.bit(2));
        // S^1 brings position i+1 into position i.
        assert_eq!(w.rotl(1).to_bit_string(), "110");
        assert_eq!(w.rotr(1).to_bit_string(), "101");
    }

    #[test]
    fn rotation_reduces_mod_width() {
        let w = BitWord::new(0x1234, 16).unwrap();
        assert_eq!(w.rotl(17), w.rotl(1));
        assert_eq!(w.rotl(16), w);
        assert_eq!(w.rotr(0), w);
    }

    #[test]
    fn full_width_words() {
        let w = BitWord::new(0x8000_0000_0000_0001, 64).unwrap();
        assert_eq!(w.rotl(1).value(), 0x3);
        assert_eq!((!BitWord::zero(64)).value(), u64::MAX);
    }

    #[test]
    fn rejects_oversized_values() {
        assert!(BitWord::new(8, 3).is_err());
        assert!(BitWord::new(0, 0).is_err());
        assert!(BitWord::new(0, 65).is_err());
    }

    #[test]
    fn hex_round_trip() {
        let bits = hex_to_bits("1d", 6).unwrap();
        assert_eq!(bits_to_string(&bits), "011101");
        assert_eq!(bits_to_hex(&bits), "1d");
        assert!(hex_to_bits("7f", 6).is_err());
        assert!(hex_to_bits("zz", 8).is_err());
        assert_eq!(bits_to_string(&hex_to_bits("1", 6).unwrap()), "000001");
    }

    proptest! {
        #[test]
        fn rotate_then_unrotate(value in any::<u64>(), width in 1u32..=64, j in any::<u32>()) {
            let w = BitWord::new(value & mask(width), width).unwrap();
            prop_assert_eq!(w.rotl(j).rotr(j), w);
            prop_assert_eq!(w.rotr(j).rotl(j), w);
        }

        #[test]
        fn rotl_moves_positions(value in any::<u64>(), width in 1u32..=64, j in 0u32..200) {
            let w = BitWord::new(value & mask(width), width).unwrap();
            let r = w.rotl(j);
            let n = width as usize;
            for i in 0..n {
                prop_assert_eq!(r.bit(i), w.bit((i + j as usize) % n));
            }
        }
    }
}

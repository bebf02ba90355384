//! Classical SIMON: key expansion, encryption and decryption.
//!
//! This is the ground truth every synthesized circuit is checked against.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::params::CipherParams;
use crate::word::{bits_to_hex, hex_to_bits, BitWord};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CipherState {
    pub left: BitWord,
    pub right: BitWord,
}

impl CipherState {
    pub fn new(left: BitWord, right: BitWord) -> Result<Self> {
        if left.width() != right.width() {
            return Err(Error::params("state halves differ in width"));
        }
        Ok(CipherState { left, right })
    }

    pub fn swapped(self) -> Self {
        CipherState {
            left: self.right,
            right: self.left,
        }
    }

    /// `2n` bits, left word first.
    pub fn bits(&self) -> Vec<bool> {
        let mut bits = self.left.bits();
        bits.extend(self.right.bits());
        bits
    }

    pub fn from_bits(bits: &[bool]) -> Result<Self> {
        if !bits.len().is_multiple_of(2) || bits.is_empty() {
            return Err(Error::params("block bit count must be even and nonzero"));
        }
        let (l, r) = bits.split_at(bits.len() / 2);
        CipherState::new(BitWord::from_bits(l)?, BitWord::from_bits(r)?)
    }

    pub fn from_hex(hex: &str, word_size: u32) -> Result<Self> {
        CipherState::from_bits(&hex_to_bits(hex, 2 * word_size as usize)?)
    }

    pub fn to_hex(&self) -> String {
        bits_to_hex(&self.bits())
    }

    pub fn to_bit_string(&self) -> String {
        format!("{}{}", self.left.to_bit_string(), self.right.to_bit_string())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KeySchedule {
    round_keys: Vec<BitWord>,
}

impl KeySchedule {
    pub fn round_keys(&self) -> &[BitWord] {
        &self.round_keys
    }

    pub fn len(&self) -> usize {
        self.round_keys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.round_keys.is_empty()
    }
}

fn check_words(params: &CipherParams, what: &str, words: &[BitWord]) -> Result<()> {
    if let Some(w) = words.iter().find(|w| w.width() != params.word_size()) {
        return Err(Error::params(format!(
            "{what} word has {} bits, expected {}",
            w.width(),
            params.word_size()
        )));
    }
    Ok(())
}

pub fn expand_key(params: &CipherParams, key_words: &[BitWord]) -> Result<KeySchedule> {
    let m = params.key_words() as usize;
    if key_words.len() != m {
        return Err(Error::params(format!(
            "expected {m} key words, got {}",
            key_words.len()
        )));
    }
    check_words(params, "key", key_words)?;

    let mut keys = Vec::with_capacity(params.rounds() as usize);
    keys.extend_from_slice(key_words);
    for (i, &c) in params.round_constants().iter().enumerate() {
        let mut next = c ^ keys[i];
        for tap in params.key_taps() {
            next ^= keys[i + tap.word as usize].rotr(tap.rot_right);
        }
        keys.push(next);
    }
    keys.truncate(params.rounds() as usize);
    Ok(KeySchedule { round_keys: keys })
}

/// `(S^a x & S^b x) ⊕ S^c x`
pub fn round_mix(params: &CipherParams, x: BitWord) -> BitWord {
    let (a, b) = params.rot_and();
    (x.rotl(a) & x.rotl(b)) ^ x.rotl(params.rot_xor())
}

/// One Feistel step `(x, y) -> (y ⊕ f(x) ⊕ k, x)`.
pub fn round(params: &CipherParams, state: CipherState, key: BitWord) -> CipherState {
    CipherState {
        left: state.right ^ round_mix(params, state.left) ^ key,
        right: state.left,
    }
}

fn check_state(params: &CipherParams, state: &CipherState) -> Result<()> {
    check_words(params, "state", &[state.left, state.right])
}

pub fn encrypt_with_schedule(
    params: &CipherParams,
    schedule: &KeySchedule,
    plaintext: CipherState,
) -> Result<CipherState> {
    check_state(params, &plaintext)?;
    Ok(schedule
        .round_keys
        .iter()
        .fold(plaintext, |s, &k| round(params, s, k)))
}

pub fn encrypt(
    params: &CipherParams,
    key_words: &[BitWord],
    plaintext: CipherState,
) -> Result<CipherState> {
    let schedule = expand_key(params, key_words)?;
    encrypt_with_schedule(params, &schedule, plaintext)
}

/// Swap, `T` rounds with the keys reversed, swap.
pub fn decrypt(
    params: &CipherParams,
    key_words: &[BitWord],
    ciphertext: CipherState,
) -> Result<CipherState> {
    check_state(params, &ciphertext)?;
    let schedule = expand_key(params, key_words)?;
    let inner = schedule
        .round_keys
        .iter()
        .rev()
        .fold(ciphertext.swapped(), |s, &k| round(params, s, k));
    Ok(inner.swapped())
}

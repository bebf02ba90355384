//! Cipher parameter sets: the ten standard SIMON variants and reduced
//! parametric variants used for desk-scale experiments.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::word::{hex_to_bits, BitWord};

const CONSTANTS_DATA: &str = include_str!("../data/simon_constants.txt");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Variant {
    Simon32_64,
    Simon48_72,
    Simon48_96,
    Simon64_96,
    Simon64_128,
    Simon96_96,
    Simon96_144,
    Simon128_128,
    Simon128_192,
    Simon128_256,
}

impl Variant {
    pub const ALL: [Variant; 10] = [
        Variant::Simon32_64,
        Variant::Simon48_72,
        Variant::Simon48_96,
        Variant::Simon64_96,
        Variant::Simon64_128,
        Variant::Simon96_96,
        Variant::Simon96_144,
        Variant::Simon128_128,
        Variant::Simon128_192,
        Variant::Simon128_256,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Variant::Simon32_64 => "simon32/64",
            Variant::Simon48_72 => "simon48/72",
            Variant::Simon48_96 => "simon48/96",
            Variant::Simon64_96 => "simon64/96",
            Variant::Simon64_128 => "simon64/128",
            Variant::Simon96_96 => "simon96/96",
            Variant::Simon96_144 => "simon96/144",
            Variant::Simon128_128 => "simon128/128",
            Variant::Simon128_192 => "simon128/192",
            Variant::Simon128_256 => "simon128/256",
        }
    }

    pub fn index(self) -> usize {
        Variant::ALL.iter().position(|&v| v == self).unwrap()
    }

    /// (word size n, key words m, rounds T)
    pub fn shape(self) -> (u32, u32, u32) {
        match self {
            Variant::Simon32_64 => (16, 4, 32),
            Variant::Simon48_72 => (24, 3, 36),
            Variant::Simon48_96 => (24, 4, 36),
            Variant::Simon64_96 => (32, 3, 42),
            Variant::Simon64_128 => (32, 4, 44),
            Variant::Simon96_96 => (48, 2, 52),
            Variant::Simon96_144 => (48, 3, 54),
            Variant::Simon128_128 => (64, 2, 68),
            Variant::Simon128_192 => (64, 3, 69),
            Variant::Simon128_256 => (64, 4, 72),
        }
    }

    pub fn params(self) -> CipherParams {
        reference_data().params[self.index()].clone()
    }

    /// The published test vector `(key, plaintext, ciphertext)` in the
    /// conventional hex layout.
    pub fn test_vector(self) -> &'static TestVector {
        &reference_data().vectors[self.index()]
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lower = s.trim().to_ascii_lowercase();
        let bare = lower.strip_prefix("simon").unwrap_or(&lower);
        Variant::ALL
            .into_iter()
            .find(|v| &v.id()["simon".len()..] == bare)
            .ok_or_else(|| Error::parse(format!("unknown variant `{s}`")))
    }
}

/// One term `S^{-rot}(k_{i+word})` of the key recurrence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct KeyTap {
    pub word: u32,
    pub rot_right: u32,
}

impl KeyTap {
    pub const fn new(word: u32, rot_right: u32) -> Self {
        KeyTap { word, rot_right }
    }
}

/// Taps of the standard schedule. For `m = 4` the recurrence is
/// `(I ⊕ S^{-1})(S^{-3} k_{i+3} ⊕ k_{i+1})`, i.e. four rotated copies.
fn standard_taps(m: u32, last_word_rots: &[u32]) -> Vec<KeyTap> {
    let mut taps = Vec::new();
    if m == 4 {
        taps.push(KeyTap::new(1, 0));
        taps.push(KeyTap::new(1, 1));
    }
    taps.extend(last_word_rots.iter().map(|&r| KeyTap::new(m - 1, r)));
    taps
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CipherParams {
    variant: Option<Variant>,
    word_size: u32,
    key_words: u32,
    rounds: u32,
    rot_and: (u32, u32),
    rot_xor: u32,
    key_taps: Vec<KeyTap>,
    #[serde(serialize_with = "serialize_words")]
    round_constants: Vec<BitWord>,
}

fn serialize_words<S: serde::Serializer>(
    words: &[BitWord],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(words.iter().map(|w| w.to_bit_string()))
}

impl CipherParams {
    /// A reduced variant. `key_rots` are right rotations of the newest key
    /// word `k_{i+m-1}`; for `m = 4` the fixed `k_{i+1} ⊕ S^{-1} k_{i+1}`
    /// terms of the standard schedule are added.
    pub fn reduced(
        word_size: u32,
        key_words: u32,
        rounds: u32,
        rot_and: (u32, u32),
        rot_xor: u32,
        key_rots: &[u32],
        round_constants: Vec<BitWord>,
    ) -> Result<Self> {
        if !(3..=64).contains(&word_size) {
            return Err(Error::params(format!(
                "word size {word_size} not in 3..=64"
            )));
        }
        if !(2..=4).contains(&key_words) {
            return Err(Error::params(format!(
                "key word count {key_words} not in 2..=4"
            )));
        }
        let n = word_size;
        let key_rots: Vec<u32> = key_rots.iter().map(|r| r % n).collect();
        let params = CipherParams {
            variant: None,
            word_size,
            key_words,
            rounds,
            rot_and: (rot_and.0 % n, rot_and.1 % n),
            rot_xor: rot_xor % n,
            key_taps: standard_taps(key_words, &key_rots),
            round_constants,
        };
        params.validate()?;
        Ok(params)
    }

    /// The 6-bit, four-round toy variant with two 3-bit key words.
    pub fn reduced_6bit() -> Self {
        let c = BitWord::from_bit_str("001").unwrap();
        CipherParams::reduced(3, 2, 4, (1, 2), 0, &[1, 2], vec![c, c]).unwrap()
    }

    /// The 16-bit state / 16-bit key toy variant with `S^1 & S^4 ⊕ S^2`.
    pub fn reduced_16bit(rounds: u32, round_constants: Vec<BitWord>) -> Result<Self> {
        CipherParams::reduced(8, 2, rounds, (1, 4), 2, &[3, 4], round_constants)
    }

    fn validate(&self) -> Result<()> {
        let n = self.word_size;
        if self.rounds == 0 {
            return Err(Error::params("at least one round is required"));
        }
        if self.rot_and.0 == self.rot_and.1 {
            return Err(Error::params(
                "AND rotations coincide mod the word size; the round has no AND term",
            ));
        }
        let expected = self.rounds.saturating_sub(self.key_words) as usize;
        if self.round_constants.len() != expected {
            return Err(Error::params(format!(
                "expected {expected} round constants, got {}",
                self.round_constants.len()
            )));
        }
        if let Some(c) = self.round_constants.iter().find(|c| c.width() != n) {
            return Err(Error::params(format!(
                "round constant {} has {} bits, expected {n}",
                c.to_bit_string(),
                c.width()
            )));
        }
        for tap in &self.key_taps {
            if tap.word == 0 || tap.word >= self.key_words {
                return Err(Error::params(format!("key tap word {} invalid", tap.word)));
            }
        }
        Ok(())
    }

    pub fn variant(&self) -> Option<Variant> {
        self.variant
    }

    pub fn name(&self) -> String {
        match self.variant {
            Some(v) => v.id().to_string(),
            None => format!(
                "reduced{}/{}x{}r",
                2 * self.word_size,
                self.key_words * self.word_size,
                self.rounds
            ),
        }
    }

    pub fn word_size(&self) -> u32 {
        self.word_size
    }

    pub fn key_words(&self) -> u32 {
        self.key_words
    }

    pub fn rounds(&self) -> u32 {
        self.rounds
    }

    pub fn block_bits(&self) -> u32 {
        2 * self.word_size
    }

    pub fn key_bits(&self) -> u32 {
        self.key_words * self.word_size
    }

    pub fn rot_and(&self) -> (u32, u32) {
        self.rot_and
    }

    pub fn rot_xor(&self) -> u32 {
        self.rot_xor
    }

    pub fn key_taps(&self) -> &[KeyTap] {
        &self.key_taps
    }

    pub fn round_constants(&self) -> &[BitWord] {
        &self.round_constants
    }

    /// Parses the reduced spec string
    /// `n,m,T,rotA1,rotA2,rotX,keyrots,consts`.
    ///
    /// `keyrots` is a `:`-separated list of right rotations, `consts` a
    /// `:`-separated list of `T - m` bit strings, or `-` for all-zero
    /// constants.
    pub fn parse_reduced(spec: &str) -> Result<Self> {
        let fields: Vec<&str> = spec.split(',').map(str::trim).collect();
        if fields.len() != 8 {
            return Err(Error::parse(format!(
                "reduced spec `{spec}` needs 8 comma-separated fields, got {}",
                fields.len()
            )));
        }
        let num = |i: usize, what: &str| -> Result<u32> {
            fields[i]
                .parse::<u32>()
                .map_err(|_| Error::parse(format!("{what} `{}` is not a number", fields[i])))
        };
        let n = num(0, "word size")?;
        let m = num(1, "key words")?;
        let t = num(2, "rounds")?;
        let rot_and = (num(3, "rotA1")?, num(4, "rotA2")?);
        let rot_xor = num(5, "rotX")?;
        let key_rots = fields[6]
            .split(':')
            .filter(|s| !s.is_empty())
            .map(|s| {
                s.parse::<u32>()
                    .map_err(|_| Error::parse(format!("key rotation `{s}` is not a number")))
            })
            .collect::<Result<Vec<_>>>()?;
        let consts = if fields[7] == "-" {
            if !(3..=64).contains(&n) {
                return Err(Error::params(format!("word size {n} not in 3..=64")));
            }
            vec![BitWord::zero(n); t.saturating_sub(m) as usize]
        } else {
            fields[7]
                .split(':')
                .map(BitWord::from_bit_str)
                .collect::<Result<Vec<_>>>()?
        };
        CipherParams::reduced(n, m, t, rot_and, rot_xor, &key_rots, consts)
    }

    /// Inverse of [`CipherParams::parse_reduced`].
    pub fn reduced_spec(&self) -> String {
        let m = self.key_words;
        let rots: Vec<String> = self
            .key_taps
            .iter()
            .filter(|t| t.word == m - 1)
            .map(|t| t.rot_right.to_string())
            .collect();
        let consts: Vec<String> = self
            .round_constants
            .iter()
            .map(|c| c.to_bit_string())
            .collect();
        format!(
            "{},{},{},{},{},{},{},{}",
            self.word_size,
            m,
            self.rounds,
            self.rot_and.0,
            self.rot_and.1,
            self.rot_xor,
            rots.join(":"),
            if consts.is_empty() { "-".to_string() } else { consts.join(":") }
        )
    }

    /// Splits `mn` bits of hex (`k_{m-1}` most significant) into key words
    /// `k_0, ..., k_{m-1}`.
    pub fn key_from_hex(&self, hex: &str) -> Result<Vec<BitWord>> {
        let bits = hex_to_bits(hex, self.key_bits() as usize)?;
        let n = self.word_size as usize;
        let mut words = bits
            .chunks(n)
            .map(BitWord::from_bits)
            .collect::<Result<Vec<_>>>()?;
        words.reverse();
        Ok(words)
    }

    pub fn key_to_hex(&self, key: &[BitWord]) -> String {
        let bits: Vec<bool> = key.iter().rev().flat_map(|w| w.bits()).collect();
        crate::word::bits_to_hex(&bits)
    }

    /// Key words from register order `[k_0 | k_1 | ... ]`, position 0 first.
    pub fn key_from_register_bits(&self, bits: &[bool]) -> Result<Vec<BitWord>> {
        if bits.len() != self.key_bits() as usize {
            return Err(Error::params(format!(
                "expected {} key bits, got {}",
                self.key_bits(),
                bits.len()
            )));
        }
        bits.chunks(self.word_size as usize)
            .map(BitWord::from_bits)
            .collect()
    }

    pub fn key_to_register_bits(&self, key: &[BitWord]) -> Vec<bool> {
        key.iter().flat_map(|w| w.bits()).collect()
    }

    pub fn zero_key(&self) -> Vec<BitWord> {
        vec![BitWord::zero(self.word_size); self.key_words as usize]
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TestVector {
    pub key: String,
    pub plaintext: String,
    pub ciphertext: String,
}

struct ReferenceData {
    params: Vec<CipherParams>,
    vectors: Vec<TestVector>,
}

fn reference_data() -> &'static ReferenceData {
    static DATA: OnceLock<ReferenceData> = OnceLock::new();
    DATA.get_or_init(|| parse_reference_data(CONSTANTS_DATA).expect("bundled constants data"))
}

fn parse_reference_data(text: &str) -> Result<ReferenceData> {
    let mut z = Vec::<(String, Vec<bool>)>::new();
    let mut params: Vec<Option<CipherParams>> = vec![None; Variant::ALL.len()];
    let mut vectors: Vec<Option<TestVector>> = vec![None; Variant::ALL.len()];

    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let bad = || Error::parse(format!("constants data line {}: `{raw}`", lineno + 1));
        let f: Vec<&str> = line.split_whitespace().collect();
        match f.as_slice() {
            ["z", name, bits] => {
                let seq = bits
                    .chars()
                    .map(|c| match c {
                        '0' => Ok(false),
                        '1' => Ok(true),
                        _ => Err(bad()),
                    })
                    .collect::<Result<Vec<_>>>()?;
                z.push((name.to_string(), seq));
            }
            ["variant", id, n, m, t, zname] => {
                let v: Variant = id.parse()?;
                let n: u32 = n.parse().map_err(|_| bad())?;
                let m: u32 = m.parse().map_err(|_| bad())?;
                let t: u32 = t.parse().map_err(|_| bad())?;
                if (n, m, t) != v.shape() {
                    return Err(bad());
                }
                let seq = &z.iter().find(|(name, _)| name == zname).ok_or_else(bad)?.1;
                let base = (!BitWord::zero(n)).value() ^ 3;
                let round_constants = (0..(t - m) as usize)
                    .map(|i| BitWord::new(base ^ seq[i % seq.len()] as u64, n))
                    .collect::<Result<Vec<_>>>()?;
                params[v.index()] = Some(CipherParams {
                    variant: Some(v),
                    word_size: n,
                    key_words: m,
                    rounds: t,
                    rot_and: (1, 8),
                    rot_xor: 2,
                    key_taps: standard_taps(m, &[3, 4]),
                    round_constants,
                });
            }
            ["vector", id, key, pt, ct] => {
                let v: Variant = id.parse()?;
                vectors[v.index()] = Some(TestVector {
                    key: key.to_string(),
                    plaintext: pt.to_string(),
                    ciphertext: ct.to_string(),
                });
            }
            _ => return Err(bad()),
        }
    }

    let params = params
        .into_iter()
        .zip(Variant::ALL)
        .map(|(p, v)| p.ok_or_else(|| Error::parse(format!("no constants for {v}"))))
        .collect::<Result<Vec<_>>>()?;
    let vectors = vectors
        .into_iter()
        .zip(Variant::ALL)
        .map(|(t, v)| t.ok_or_else(|| Error::parse(format!("no test vector for {v}"))))
        .collect::<Result<Vec<_>>>()?;
    Ok(ReferenceData { params, vectors })
}

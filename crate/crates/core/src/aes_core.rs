//! AES written as recurrences in the ring R.
//!
//! One encryption round is `m -> gamma * sum phi(m_ij) x^i y^(3i+j) + k`; the
//! last round drops the factor `gamma`. Decryption runs the same shape with
//! `psi`, the exponent map `x^i y^j -> x^i y^(i+j)`, `gamma^-1` and the
//! transformed keys `k_N, gamma^-1 k_(N-1), ..., gamma^-1 k_1, k_0`.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use crate::error::Error;
use crate::gf256::FieldElement;
use crate::linearized::l_map;
use crate::permpoly::{PermPolynomial, PermutationTable};
use crate::ring::{gamma, gamma_inv, Block, RingElement};

/// `z^6 + z^5 + z + 1`, added by the last S-box stage.
pub const AFFINE_CONSTANT: FieldElement = FieldElement::new(0x63);

/// Field inversion with `0 -> 0`.
pub fn phi1(a: FieldElement) -> FieldElement {
    a.inv().unwrap_or(FieldElement::ZERO)
}

pub fn phi3(a: FieldElement) -> FieldElement {
    a + AFFINE_CONSTANT
}

/// The S-box `phi3 ∘ L ∘ phi1`.
pub fn sbox(a: FieldElement) -> FieldElement {
    phi3(l_map(phi1(a)))
}

pub fn sbox_table() -> &'static PermutationTable {
    static TABLE: OnceLock<PermutationTable> = OnceLock::new();
    TABLE.get_or_init(|| PermutationTable::from_fn(sbox).expect("S-box is a permutation"))
}

pub fn inv_sbox_table() -> &'static PermutationTable {
    static TABLE: OnceLock<PermutationTable> = OnceLock::new();
    TABLE.get_or_init(|| sbox_table().inverse())
}

/// `phi(u)`, the interpolant of the S-box.
pub fn sbox_polynomial() -> &'static PermPolynomial {
    static POLY: OnceLock<PermPolynomial> = OnceLock::new();
    POLY.get_or_init(|| sbox_table().interpolate())
}

/// `psi(u)`, the interpolant of the inverse S-box.
pub fn inv_sbox_polynomial() -> &'static PermPolynomial {
    static POLY: OnceLock<PermPolynomial> = OnceLock::new();
    POLY.get_or_init(|| inv_sbox_table().interpolate())
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum CipherVariant {
    Aes128,
    Aes192,
    Aes256,
}

impl CipherVariant {
    pub const ALL: [CipherVariant; 3] = [Self::Aes128, Self::Aes192, Self::Aes256];

    pub fn rounds(self) -> usize {
        match self {
            Self::Aes128 => 10,
            Self::Aes192 => 12,
            Self::Aes256 => 14,
        }
    }

    pub fn key_bits(self) -> usize {
        match self {
            Self::Aes128 => 128,
            Self::Aes192 => 192,
            Self::Aes256 => 256,
        }
    }

    pub fn key_bytes(self) -> usize {
        self.key_bits() / 8
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::Aes128 => "AES-128",
            Self::Aes192 => "AES-192",
            Self::Aes256 => "AES-256",
        }
    }

    pub fn from_key_len(len: usize) -> Result<Self, Error> {
        Self::ALL
            .into_iter()
            .find(|v| v.key_bytes() == len)
            .ok_or_else(|| Error::Length {
                expected: "16, 24 or 32".to_string(),
                actual: len,
            })
    }
}

impl fmt::Display for CipherVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CipherVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.to_ascii_lowercase().replace('-', "").as_str() {
            "aes128" => Ok(Self::Aes128),
            "aes192" => Ok(Self::Aes192),
            "aes256" => Ok(Self::Aes256),
            _ => Err(Error::UnknownVariant(s.to_string())),
        }
    }
}

/// Round keys `k_0 ..= k_N` plus the transformed keys used for decryption.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RoundKeySchedule {
    variant: CipherVariant,
    keys: Vec<RingElement>,
    decryption_keys: Vec<RingElement>,
}

impl RoundKeySchedule {
    pub fn from_keys(variant: CipherVariant, keys: Vec<RingElement>) -> Result<Self, Error> {
        let expected = variant.rounds() + 1;
        if keys.len() != expected {
            return Err(Error::ScheduleLength {
                variant: variant.name(),
                expected,
                actual: keys.len(),
            });
        }
        let n = variant.rounds();
        let g_inv = gamma_inv();
        let decryption_keys = (0..=n)
            .map(|t| match t {
                0 => keys[n],
                t if t == n => keys[0],
                t => g_inv * keys[n - t],
            })
            .collect();
        Ok(Self {
            variant,
            keys,
            decryption_keys,
        })
    }

    pub fn variant(&self) -> CipherVariant {
        self.variant
    }

    pub fn keys(&self) -> &[RingElement] {
        &self.keys
    }

    /// `k_N, gamma^-1 k_(N-1), ..., gamma^-1 k_1, k_0`.
    pub fn decryption_keys(&self) -> &[RingElement] {
        &self.decryption_keys
    }

    /// All round keys concatenated as FIPS-197 bytes.
    pub fn to_bytes(&self) -> Vec<u8> {
        self.keys.iter().flat_map(|k| k.to_block().0).collect()
    }
}

/// Round constant `z^t`.
pub fn round_constant(t: u64) -> FieldElement {
    FieldElement::Z.pow(t)
}

/// AES-128 key expansion in ring form:
///
/// `k'_0 = (sum_i phi(k_{i,3}) x^i) x^3 + z^t + k_0`, `k'_i = k'_(i-1) + k_i`.
pub fn expand_key_128(key: &RingElement) -> RoundKeySchedule {
    let table = sbox_table();
    let x3 = RingElement::monomial(FieldElement::ONE, 3, 0);
    let mut keys = Vec::with_capacity(11);
    keys.push(*key);
    for t in 0..10u64 {
        let prev = keys[t as usize];
        let substituted = RingElement::from_x_poly(prev.column(3).map(|c| table.apply(c)));
        let rotated = (substituted * x3).column(0);
        let mut next = RingElement::ZERO;
        let mut col: [FieldElement; 4] = std::array::from_fn(|i| rotated[i] + prev.coeff(i, 0));
        col[0] += round_constant(t);
        next.set_column(0, col);
        for j in 1..4 {
            let c: [FieldElement; 4] = std::array::from_fn(|i| next.coeff(i, j - 1) + prev.coeff(i, j));
            next.set_column(j, c);
        }
        keys.push(next);
    }
    RoundKeySchedule::from_keys(CipherVariant::Aes128, keys).expect("eleven round keys")
}

/// Word-oriented FIPS-197 key expansion, packed into ring elements four
/// words at a time.
pub fn expand_key(key: &[u8], variant: CipherVariant) -> Result<RoundKeySchedule, Error> {
    if key.len() != variant.key_bytes() {
        return Err(Error::Length {
            expected: variant.key_bytes().to_string(),
            actual: key.len(),
        });
    }
    let table = sbox_table();
    let nk = key.len() / 4;
    let total = 4 * (variant.rounds() + 1);
    let mut words: Vec<[u8; 4]> = key.chunks_exact(4).map(|w| [w[0], w[1], w[2], w[3]]).collect();
    for i in nk..total {
        let mut temp = words[i - 1];
        if i % nk == 0 {
            temp.rotate_left(1);
            temp = temp.map(|b| table.apply(FieldElement::new(b)).to_byte());
            temp[0] ^= round_constant((i / nk - 1) as u64).to_byte();
        } else if nk > 6 && i % nk == 4 {
            temp = temp.map(|b| table.apply(FieldElement::new(b)).to_byte());
        }
        let prev = words[i - nk];
        words.push(std::array::from_fn(|b| prev[b] ^ temp[b]));
    }
    let keys = words
        .chunks_exact(4)
        .map(|w| {
            let bytes: [u8; 16] = std::array::from_fn(|n| w[n / 4][n % 4]);
            RingElement::from_block(&Block(bytes))
        })
        .collect();
    RoundKeySchedule::from_keys(variant, keys)
}

/// `sum phi(r_ij) x^i y^(3i+j)`: S-box on every coefficient, then the
/// ShiftRow substitution.
pub fn sub_shift(r: &RingElement, table: &PermutationTable) -> RingElement {
    r.map_coeffs(|c| table.apply(c)).shift_rows()
}

/// `sum psi(r_ij) x^i y^(i+j)`.
pub fn inv_sub_shift(r: &RingElement, table: &PermutationTable) -> RingElement {
    r.map_coeffs(|c| table.apply(c)).inv_shift_rows()
}

pub fn encrypt(message: &RingElement, schedule: &RoundKeySchedule) -> RingElement {
    let table = sbox_table();
    let g = gamma();
    let keys = schedule.keys();
    let n = schedule.variant().rounds();
    let mut m = *message + keys[0];
    for key in &keys[1..n] {
        m = g * sub_shift(&m, table) + *key;
    }
    sub_shift(&m, table) + keys[n]
}

pub fn decrypt(cipher: &RingElement, schedule: &RoundKeySchedule) -> RingElement {
    let table = inv_sbox_table();
    let g_inv = gamma_inv();
    let keys = schedule.decryption_keys();
    let n = schedule.variant().rounds();
    let mut c = *cipher + keys[0];
    for key in &keys[1..n] {
        c = g_inv * inv_sub_shift(&c, table) + *key;
    }
    inv_sub_shift(&c, table) + keys[n]
}

pub fn encrypt_block(block: &Block, schedule: &RoundKeySchedule) -> Block {
    encrypt(&RingElement::from_block(block), schedule).to_block()
}

pub fn decrypt_block(block: &Block, schedule: &RoundKeySchedule) -> Block {
    decrypt(&RingElement::from_block(block), schedule).to_block()
}

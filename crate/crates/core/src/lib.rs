//! AES as a sequence of polynomial manipulations in
//! `R = GF(256)[x, y]/<x^4 + 1, y^4 + 1>`, together with the algebra of its
//! S-box: the sparse permutation polynomial `phi(u)`, its dense inverse
//! `psi(u)`, the linearized polynomial of the linear layer, normal and dual
//! bases, and the cycle structure of the S-box permutation.
//!
//! [`reference_aes`] is an independent byte-oriented AES used to check the
//! algebraic cipher in [`aes_core`].

pub mod aes_core;
pub mod cli;
pub mod error;
pub mod gf256;
pub mod linearized;
pub mod permpoly;
pub mod reference_aes;
pub mod ring;
pub mod sbox_analysis;
pub mod verify;

pub use aes_core::{decrypt, encrypt, expand_key, expand_key_128, CipherVariant, RoundKeySchedule};
pub use error::Error;
pub use gf256::FieldElement;
pub use linearized::{BitMatrix8, FieldBasis, LinearizedPoly};
pub use permpoly::{PermPolynomial, PermutationTable};
pub use ring::{Block, RingElement};
pub use sbox_analysis::{CycleDecomposition, DiscreteLogTable};

/// Decodes hex with an optional `0x` prefix, any case.
pub fn decode_hex(s: &str) -> Result<Vec<u8>, Error> {
    let t = s.trim();
    let t = t.strip_prefix("0x").or_else(|| t.strip_prefix("0X")).unwrap_or(t);
    hex::decode(t).map_err(|e| Error::Hex(format!("{s:?}: {e}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hex_decoding() {
        assert_eq!(decode_hex("0xABcd").unwrap(), vec![0xab, 0xcd]);
        assert_eq!(decode_hex("abcd").unwrap(), vec![0xab, 0xcd]);
        assert!(decode_hex("abc").is_err());
        assert!(decode_hex("zz").is_err());
    }
}

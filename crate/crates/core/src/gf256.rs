//! Arithmetic in GF(256) = Z2[z]/<z^8 + z^4 + z^3 + z + 1>.
//!
//! A [`FieldElement`] wraps one byte whose bit `i` is the coefficient of
//! `z^i`, so the constant `z^6+z^5+z+1` is `0x63`.

use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Mul, MulAssign, Sub, SubAssign};
use std::str::FromStr;

use crate::error::Error;

/// Low byte of the reduction polynomial `z^8 + z^4 + z^3 + z + 1`.
const REDUCTION: u8 = 0x1b;

/// Prime divisors of the multiplicative group order 255.
const GROUP_ORDER_PRIMES: [u64; 3] = [3, 5, 17];

/// Shift-and-reduce multiplication. Used to build the log tables and kept
/// public as the second multiplication path.
pub const fn mul_shift_reduce(mut a: u8, mut b: u8) -> u8 {
    let mut acc = 0u8;
    while b != 0 {
        if b & 1 != 0 {
            acc ^= a;
        }
        let carry = a & 0x80 != 0;
        a <<= 1;
        if carry {
            a ^= REDUCTION;
        }
        b >>= 1;
    }
    acc
}

struct LogTables {
    exp: [u8; 512],
    log: [u8; 256],
}

// 0x03 = z + 1 generates the multiplicative group.
const TABLES: LogTables = {
    let mut exp = [0u8; 512];
    let mut log = [0u8; 256];
    let mut x = 1u8;
    let mut i = 0;
    while i < 255 {
        exp[i] = x;
        exp[i + 255] = x;
        log[x as usize] = i as u8;
        x = mul_shift_reduce(x, 0x03);
        i += 1;
    }
    LogTables { exp, log }
};

/// One element of GF(256).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FieldElement(u8);

impl FieldElement {
    pub const ZERO: Self = Self(0);
    pub const ONE: Self = Self(1);
    /// The class of `z`.
    pub const Z: Self = Self(2);

    pub const fn new(byte: u8) -> Self {
        Self(byte)
    }

    pub const fn to_byte(self) -> u8 {
        self.0
    }

    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// All 256 elements in ascending byte order.
    pub fn all() -> impl Iterator<Item = Self> + Clone {
        (0..=255u8).map(Self)
    }

    /// Product via the log/antilog tables.
    pub fn mul_table(self, rhs: Self) -> Self {
        if self.0 == 0 || rhs.0 == 0 {
            return Self::ZERO;
        }
        let idx = TABLES.log[self.0 as usize] as usize + TABLES.log[rhs.0 as usize] as usize;
        Self(TABLES.exp[idx])
    }

    /// Product via shift-and-reduce.
    pub const fn mul_slow(self, rhs: Self) -> Self {
        Self(mul_shift_reduce(self.0, rhs.0))
    }

    pub fn square(self) -> Self {
        self * self
    }

    /// `self^(2^k)`, the k-th Frobenius image.
    pub fn frobenius(self, k: u32) -> Self {
        (0..k % 8).fold(self, |acc, _| acc.square())
    }

    /// Square-and-multiply. `pow(0, 0)` is one.
    pub fn pow(self, mut n: u64) -> Self {
        let mut base = self;
        let mut acc = Self::ONE;
        while n != 0 {
            if n & 1 != 0 {
                acc *= base;
            }
            base = base.square();
            n >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; zero has none.
    pub fn inv(self) -> Result<Self, Error> {
        if self.0 == 0 {
            return Err(Error::ZeroInverse);
        }
        let l = TABLES.log[self.0 as usize] as usize;
        Ok(Self(TABLES.exp[(255 - l) % 255]))
    }

    /// `sum_{i<8} self^(2^i)`, which always lands in {0, 1}.
    pub fn trace_element(self) -> Self {
        let mut acc = Self::ZERO;
        let mut x = self;
        for _ in 0..8 {
            acc += x;
            x = x.square();
        }
        acc
    }

    /// Absolute trace as a bit.
    pub fn trace(self) -> u8 {
        let t = self.trace_element();
        debug_assert!(t.0 <= 1, "trace left the prime field");
        t.0
    }

    /// Multiplicative order, or `None` for zero.
    pub fn multiplicative_order(self) -> Option<u64> {
        if self.is_zero() {
            return None;
        }
        let mut order = 255u64;
        for p in GROUP_ORDER_PRIMES {
            while order.is_multiple_of(p) && self.pow(order / p) == Self::ONE {
                order /= p;
            }
        }
        Some(order)
    }

    pub fn is_primitive(self) -> bool {
        !self.is_zero() && GROUP_ORDER_PRIMES.iter().all(|&p| self.pow(255 / p) != Self::ONE)
    }

    /// Two-digit uppercase hex with a `0x` prefix, e.g. `0x63`.
    pub fn to_hex_string(self) -> String {
        format!("0x{:02X}", self.0)
    }

    /// Descending-power polynomial in `z`, e.g. `z^6+z^5+z+1`; `0` for zero.
    pub fn to_poly_string(self) -> String {
        if self.0 == 0 {
            return "0".to_string();
        }
        let terms: Vec<String> = (0..8)
            .rev()
            .filter(|i| self.0 >> i & 1 == 1)
            .map(|i| match i {
                0 => "1".to_string(),
                1 => "z".to_string(),
                _ => format!("z^{i}"),
            })
            .collect();
        terms.join("+")
    }

    fn parse_poly(s: &str) -> Result<Self, Error> {
        let bad = || Error::ParseField(s.to_string());
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad());
        }
        if compact == "0" {
            return Ok(Self::ZERO);
        }
        let mut bits = 0u8;
        for term in compact.split('+') {
            let exp = match term {
                "1" => 0,
                "z" => 1,
                t => t
                    .strip_prefix("z^")
                    .and_then(|e| e.parse::<u32>().ok())
                    .filter(|&e| e < 8)
                    .ok_or_else(bad)?,
            };
            bits ^= 1 << exp;
        }
        Ok(Self(bits))
    }
}

impl From<u8> for FieldElement {
    fn from(byte: u8) -> Self {
        Self(byte)
    }
}

impl From<FieldElement> for u8 {
    fn from(a: FieldElement) -> u8 {
        a.0
    }
}

impl FromStr for FieldElement {
    type Err = Error;

    /// Accepts `0x63`/`0X63` hex or the polynomial form `z^6+z^5+z+1`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let t = s.trim();
        if let Some(hex) = t.strip_prefix("0x").or_else(|| t.strip_prefix("0X")) {
            if hex.is_empty() || hex.len() > 2 {
                return Err(Error::ParseField(s.to_string()));
            }
            return u8::from_str_radix(hex, 16)
                .map(Self)
                .map_err(|_| Error::ParseField(s.to_string()));
        }
        Self::parse_poly(t)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_poly_string())
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_hex_string())
    }
}

impl fmt::LowerHex for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::LowerHex::fmt(&self.0, f)
    }
}

impl fmt::UpperHex for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::UpperHex::fmt(&self.0, f)
    }
}

impl Add for FieldElement {
    type Output = Self;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn add(self, rhs: Self) -> Self {
        Self(self.0 ^ rhs.0)
    }
}

impl AddAssign for FieldElement {
    fn add_assign(&mut self, rhs: Self) {
        *self = *self + rhs;
    }
}

// Characteristic 2: subtraction is addition.
impl Sub for FieldElement {
    type Output = Self;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn sub(self, rhs: Self) -> Self {
        self + rhs
    }
}

#[allow(clippy::suspicious_op_assign_impl)]
impl SubAssign for FieldElement {
    fn sub_assign(&mut self, rhs: Self) {
        self.0 ^= rhs.0;
    }
}

impl Mul for FieldElement {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.mul_table(rhs)
    }
}

impl MulAssign for FieldElement {
    fn mul_assign(&mut self, rhs: Self) {
        *self = *self * rhs;
    }
}

impl Sum for FieldElement {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::ZERO, Add::add)
    }
}

impl Product for FieldElement {
    fn product<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::ONE, Mul::mul)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn fe(b: u8) -> FieldElement {
        FieldElement::new(b)
    }

    #[test]
    fn addition_examples() {
        assert_eq!(fe(0x57) + fe(0x57), FieldElement::ZERO);
        assert_eq!(fe(0x00) + fe(0xab), fe(0xab));
        assert_eq!(fe(0x63) + fe(0x05), fe(0x66));
    }

    #[test]
    fn multiplication_examples() {
        // z^8 = z^4+z^3+z+1
        assert_eq!(fe(0x02) * fe(0x80), fe(0x1b));
        assert_eq!(fe(0x57) * fe(0x83), fe(0xc1));
        for a in FieldElement::all() {
            assert_eq!(FieldElement::ONE * a, a);
            assert_eq!(a * FieldElement::ZERO, FieldElement::ZERO);
        }
    }

    #[test]
    fn both_multiplication_paths_agree() {
        for a in FieldElement::all() {
            for b in FieldElement::all() {
                assert_eq!(a.mul_table(b), a.mul_slow(b), "{a:?} * {b:?}");
            }
        }
    }

    #[test]
    fn inverse_and_group_order() {
        assert_eq!(fe(1).inv().unwrap(), fe(1));
        assert_eq!(FieldElement::ZERO.inv(), Err(Error::ZeroInverse));
        for a in FieldElement::all().skip(1) {
            assert_eq!(a * a.inv().unwrap(), FieldElement::ONE);
            assert_eq!(a.pow(255), FieldElement::ONE);
            assert_eq!(a.inv().unwrap(), a.pow(254));
        }
    }

    #[test]
    fn pow_conventions() {
        assert_eq!(FieldElement::ZERO.pow(0), FieldElement::ONE);
        assert_eq!(fe(0x9a).pow(0), FieldElement::ONE);
        assert_eq!(fe(0x21).pow(1), fe(0x21));
        assert_eq!(fe(0x21), "z^5+1".parse().unwrap());
    }

    #[test]
    fn trace_is_linear_and_onto() {
        assert_eq!(FieldElement::ZERO.trace(), 0);
        let mut ones = 0;
        for a in FieldElement::all() {
            ones += a.trace() as usize;
            for b in FieldElement::all() {
                assert_eq!(a.trace() ^ b.trace(), (a + b).trace());
            }
        }
        assert_eq!(ones, 128);
    }

    #[test]
    fn primitive_elements() {
        assert!(fe(0x21).is_primitive());
        assert!(!fe(0x01).is_primitive());
        assert!(!FieldElement::ZERO.is_primitive());
        assert_eq!(FieldElement::all().filter(|a| a.is_primitive()).count(), 128);
        // brute-force order check for the predicate
        for a in FieldElement::all().skip(1) {
            let mut x = a;
            let mut order = 1;
            while x != FieldElement::ONE {
                x *= a;
                order += 1;
            }
            assert_eq!(a.multiplicative_order(), Some(order));
            assert_eq!(a.is_primitive(), order == 255);
        }
    }

    #[test]
    fn distributivity_random() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..10_000 {
            let (a, b, c) = (fe(rng.gen()), fe(rng.gen()), fe(rng.gen()));
            assert_eq!(a * (b + c), a * b + a * c);
        }
    }

    #[test]
    fn text_forms_round_trip() {
        assert_eq!(fe(0x63).to_hex_string(), "0x63");
        assert_eq!(fe(0xab).to_hex_string(), "0xAB");
        assert_eq!(fe(0x63).to_poly_string(), "z^6+z^5+z+1");
        assert_eq!(FieldElement::ZERO.to_poly_string(), "0");
        for a in FieldElement::all() {
            assert_eq!(a.to_hex_string().parse::<FieldElement>().unwrap(), a);
            assert_eq!(a.to_poly_string().parse::<FieldElement>().unwrap(), a);
            assert_eq!(FieldElement::from(u8::from(a)), a);
        }
        assert!("z^8".parse::<FieldElement>().is_err());
        assert!("0x100".parse::<FieldElement>().is_err());
        assert!("".parse::<FieldElement>().is_err());
        assert!("q+1".parse::<FieldElement>().is_err());
    }
}

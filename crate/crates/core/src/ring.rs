//! The state ring R = GF(256)[x, y]/<x^4 + 1, y^4 + 1>.
//!
//! An element is a 4x4 grid of field coefficients, entry `(i, j)` being the
//! coefficient of `x^i y^j`. Since `{x^4+1, y^4+1, mu(z)}` is already a reduced
//! Groebner basis, the normal form of a product is obtained by taking the
//! exponents of `x` and `y` mod 4.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign};
use std::str::FromStr;

use crate::error::Error;
use crate::gf256::FieldElement;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct RingElement {
    coeffs: [[FieldElement; 4]; 4],
}

impl RingElement {
    pub const ZERO: Self = Self {
        coeffs: [[FieldElement::ZERO; 4]; 4],
    };

    pub const fn from_coeffs(coeffs: [[FieldElement; 4]; 4]) -> Self {
        Self { coeffs }
    }

    pub fn one() -> Self {
        Self::constant(FieldElement::ONE)
    }

    /// The field element `c` as a constant of R.
    pub fn constant(c: FieldElement) -> Self {
        Self::monomial(c, 0, 0)
    }

    /// `c * x^i * y^j`, exponents taken mod 4.
    pub fn monomial(c: FieldElement, i: usize, j: usize) -> Self {
        let mut r = Self::ZERO;
        r.coeffs[i & 3][j & 3] = c;
        r
    }

    /// Polynomial in `x` alone, `sum_i col[i] x^i`.
    pub fn from_x_poly(col: [FieldElement; 4]) -> Self {
        let mut r = Self::ZERO;
        r.set_column(0, col);
        r
    }

    pub fn coeff(&self, i: usize, j: usize) -> FieldElement {
        self.coeffs[i][j]
    }

    pub fn set_coeff(&mut self, i: usize, j: usize, c: FieldElement) {
        self.coeffs[i][j] = c;
    }

    pub fn coeffs(&self) -> &[[FieldElement; 4]; 4] {
        &self.coeffs
    }

    /// The column `r_j = sum_i r_{i,j} x^i`.
    pub fn column(&self, j: usize) -> [FieldElement; 4] {
        std::array::from_fn(|i| self.coeffs[i][j])
    }

    pub fn set_column(&mut self, j: usize, col: [FieldElement; 4]) {
        for (i, c) in col.into_iter().enumerate() {
            self.coeffs[i][j] = c;
        }
    }

    pub fn is_zero(&self) -> bool {
        *self == Self::ZERO
    }

    /// Applies `f` to every coefficient.
    pub fn map_coeffs(&self, mut f: impl FnMut(FieldElement) -> FieldElement) -> Self {
        let mut out = *self;
        for row in out.coeffs.iter_mut() {
            for c in row.iter_mut() {
                *c = f(*c);
            }
        }
        out
    }

    pub fn pow(&self, mut n: u64) -> Self {
        let mut base = *self;
        let mut acc = Self::one();
        while n != 0 {
            if n & 1 != 0 {
                acc *= base;
            }
            base = base * base;
            n >>= 1;
        }
        acc
    }

    /// Substitution `r(x, y) -> r(x y^3, y)`: `x^i y^j -> x^i y^(3i+j)`.
    pub fn shift_rows(&self) -> Self {
        let mut out = Self::ZERO;
        for i in 0..4 {
            for j in 0..4 {
                out.coeffs[i][(3 * i + j) & 3] = self.coeffs[i][j];
            }
        }
        out
    }

    /// Substitution `r(x, y) -> r(x y, y)`: `x^i y^j -> x^i y^(i+j)`.
    pub fn inv_shift_rows(&self) -> Self {
        let mut out = Self::ZERO;
        for i in 0..4 {
            for j in 0..4 {
                out.coeffs[i][(i + j) & 3] = self.coeffs[i][j];
            }
        }
        out
    }

    /// Byte `i + 4j` holds `r_{i,j}`.
    pub fn to_block(&self) -> Block {
        let mut bytes = [0u8; 16];
        for (n, b) in bytes.iter_mut().enumerate() {
            *b = self.coeffs[n % 4][n / 4].to_byte();
        }
        Block(bytes)
    }

    pub fn from_block(block: &Block) -> Self {
        let mut r = Self::ZERO;
        for (n, &b) in block.0.iter().enumerate() {
            r.coeffs[n % 4][n / 4] = FieldElement::new(b);
        }
        r
    }
}

/// `gamma = (z+1) x^3 + x^2 + x + z`, the MixColumn multiplier.
pub fn gamma() -> RingElement {
    RingElement::from_x_poly([
        FieldElement::new(0x02),
        FieldElement::new(0x01),
        FieldElement::new(0x01),
        FieldElement::new(0x03),
    ])
}

/// `gamma^-1 = (z^3+z+1) x^3 + (z^3+z^2+1) x^2 + (z^3+1) x + (z^3+z^2+z)`.
pub fn gamma_inv() -> RingElement {
    RingElement::from_x_poly([
        FieldElement::new(0x0e),
        FieldElement::new(0x09),
        FieldElement::new(0x0d),
        FieldElement::new(0x0b),
    ])
}

impl Add for RingElement {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        self += rhs;
        self
    }
}

impl AddAssign for RingElement {
    fn add_assign(&mut self, rhs: Self) {
        for (row, rrow) in self.coeffs.iter_mut().zip(rhs.coeffs.iter()) {
            for (c, r) in row.iter_mut().zip(rrow.iter()) {
                *c += *r;
            }
        }
    }
}

impl Mul for RingElement {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let mut out = Self::ZERO;
        for i1 in 0..4 {
            for j1 in 0..4 {
                let a = self.coeffs[i1][j1];
                if a.is_zero() {
                    continue;
                }
                for i2 in 0..4 {
                    for j2 in 0..4 {
                        out.coeffs[(i1 + i2) & 3][(j1 + j2) & 3] += a * rhs.coeffs[i2][j2];
                    }
                }
            }
        }
        out
    }
}

impl MulAssign for RingElement {
    fn mul_assign(&mut self, rhs: Self) {
        *self = *self * rhs;
    }
}

impl From<FieldElement> for RingElement {
    fn from(c: FieldElement) -> Self {
        Self::constant(c)
    }
}

impl fmt::Display for RingElement {
    /// `(<field-poly>)·x^i·y^j` terms in lexicographic `(i, j)` order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = (0..4)
            .flat_map(|i| (0..4).map(move |j| (i, j)))
            .filter(|&(i, j)| !self.coeffs[i][j].is_zero())
            .map(|(i, j)| format!("({})·x^{i}·y^{j}", self.coeffs[i][j]))
            .collect();
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&terms.join(" + "))
        }
    }
}

impl fmt::Debug for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RingElement({})", self.to_block())
    }
}

impl FromStr for RingElement {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::Parse {
            what: "ring element",
            input: s.to_string(),
        };
        let mut rest = s.trim();
        if rest == "0" {
            return Ok(Self::ZERO);
        }
        let mut out = Self::ZERO;
        loop {
            let body = rest.strip_prefix('(').ok_or_else(bad)?;
            let close = body.find(')').ok_or_else(bad)?;
            let c: FieldElement = body[..close].parse().map_err(|_| bad())?;
            let tail = body[close + 1..].strip_prefix("·x^").ok_or_else(bad)?;
            let (i, tail) = split_digit(tail).ok_or_else(bad)?;
            let tail = tail.strip_prefix("·y^").ok_or_else(bad)?;
            let (j, tail) = split_digit(tail).ok_or_else(bad)?;
            if i > 3 || j > 3 {
                return Err(bad());
            }
            out.coeffs[i][j] += c;
            let tail = tail.trim_start();
            if tail.is_empty() {
                return Ok(out);
            }
            rest = tail.strip_prefix('+').ok_or_else(bad)?.trim_start();
        }
    }
}

fn split_digit(s: &str) -> Option<(usize, &str)> {
    let d = s.chars().next()?.to_digit(10)?;
    Some((d as usize, &s[1..]))
}

/// A 16-byte AES block in FIPS-197 order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, Debug)]
pub struct Block(pub [u8; 16]);

impl Block {
    pub fn as_bytes(&self) -> &[u8; 16] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        hex::encode(self.0)
    }
}

impl From<[u8; 16]> for Block {
    fn from(bytes: [u8; 16]) -> Self {
        Self(bytes)
    }
}

impl fmt::Display for Block {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

impl FromStr for Block {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let bytes = crate::decode_hex(s)?;
        let arr: [u8; 16] = bytes.as_slice().try_into().map_err(|_| Error::Length {
            expected: "16".to_string(),
            actual: bytes.len(),
        })?;
        Ok(Self(arr))
    }
}

//! Polynomials over GF(256) of degree at most 255, i.e. elements of
//! `F[u]/<u^256 + u>`, viewed as functions on the field.
//!
//! Every map `F -> F` has exactly one such interpolant, built here as
//! `sum_a f(a) T_a(u)` from the Lagrange polynomials `T_a`.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::gf256::FieldElement;

const N: usize = 256;

/// Coefficients of `u^0 ..= u^255`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PermPolynomial {
    coeffs: [FieldElement; N],
}

/// A bijection of the field, stored as images indexed by byte encoding.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PermutationTable {
    images: [FieldElement; N],
}

/// Lagrange interpolant `T_a` with `T_a(b) = 1` iff `b = a`.
///
/// For `a != 0` this is `u * sum_{i=0}^{254} a^i u^(254-i)`, and for `a = 0`
/// it is `u^255 + 1`.
pub fn lagrange_interpolant(alpha: FieldElement) -> PermPolynomial {
    let mut p = PermPolynomial::zero();
    if alpha.is_zero() {
        p.coeffs[255] = FieldElement::ONE;
        p.coeffs[0] = FieldElement::ONE;
        return p;
    }
    let mut power = FieldElement::ONE;
    for i in 0..=254 {
        p.coeffs[255 - i] = power;
        power *= alpha;
    }
    p
}

/// Unique interpolant of degree <= 255 through `(a, values[a])`.
/// Works for any function table, bijective or not.
pub fn interpolate(values: &[FieldElement; N]) -> PermPolynomial {
    let mut p = PermPolynomial::zero();
    // T_0 contributes f(0) (u^255 + 1).
    p.coeffs[0] = values[0];
    p.coeffs[255] = values[0];
    // T_a for a != 0 contributes f(a) a^(255-d) to u^d, d = 1..=255.
    for a in FieldElement::all().skip(1) {
        let fa = values[a.to_byte() as usize];
        if fa.is_zero() {
            continue;
        }
        let mut term = fa;
        for d in (1..=255).rev() {
            p.coeffs[d] += term;
            term *= a;
        }
    }
    p
}

impl PermPolynomial {
    pub fn zero() -> Self {
        Self {
            coeffs: [FieldElement::ZERO; N],
        }
    }

    /// The polynomial `u`.
    pub fn identity() -> Self {
        Self::monomial(FieldElement::ONE, 1)
    }

    pub fn constant(c: FieldElement) -> Self {
        Self::monomial(c, 0)
    }

    /// `c u^d`; `d` must be at most 255.
    pub fn monomial(c: FieldElement, d: usize) -> Self {
        assert!(d < N, "degree {d} exceeds 255");
        let mut p = Self::zero();
        p.coeffs[d] = c;
        p
    }

    pub fn from_coeffs(coeffs: [FieldElement; N]) -> Self {
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[FieldElement; N] {
        &self.coeffs
    }

    pub fn coeff(&self, d: usize) -> FieldElement {
        self.coeffs[d]
    }

    pub fn set_coeff(&mut self, d: usize, c: FieldElement) {
        self.coeffs[d] = c;
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero())
    }

    /// Number of nonzero coefficients.
    pub fn sparsity(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    /// Degrees carrying a nonzero coefficient, ascending.
    pub fn support(&self) -> Vec<usize> {
        (0..N).filter(|&d| !self.coeffs[d].is_zero()).collect()
    }

    /// Horner evaluation.
    pub fn evaluate(&self, a: FieldElement) -> FieldElement {
        self.coeffs.iter().rev().fold(FieldElement::ZERO, |acc, &c| acc * a + c)
    }

    /// Images of all 256 field elements, no bijectivity check.
    pub fn evaluation_map(&self) -> [FieldElement; N] {
        std::array::from_fn(|e| self.evaluate(FieldElement::new(e as u8)))
    }

    /// Lookup table of a permutation polynomial.
    pub fn tabulate(&self) -> Result<PermutationTable, Error> {
        PermutationTable::new(self.evaluation_map())
    }

    /// `self(inner(u)) mod u^256 + u`, via the pointwise composition of the
    /// two evaluation maps.
    pub fn compose(&self, inner: &PermPolynomial) -> PermPolynomial {
        let outer = self.evaluation_map();
        let inner = inner.evaluation_map();
        interpolate(&inner.map(|v| outer[v.to_byte() as usize]))
    }

    /// Product reduced with `u^256 = u`.
    pub fn mul_mod(&self, rhs: &PermPolynomial) -> PermPolynomial {
        let mut wide = [FieldElement::ZERO; 2 * N - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                wide[i + j] += a * b;
            }
        }
        let mut out = Self::zero();
        out.coeffs.copy_from_slice(&wide[..N]);
        // u^d = u^(d - 255) for 256 <= d <= 510
        for (d, &c) in wide.iter().enumerate().skip(N) {
            out.coeffs[d - 255] += c;
        }
        out
    }

    /// `self^n mod u^256 + u` by symbolic square-and-multiply.
    pub fn pow_mod(&self, mut n: u64) -> PermPolynomial {
        let mut base = self.clone();
        let mut acc = Self::constant(FieldElement::ONE);
        while n != 0 {
            if n & 1 != 0 {
                acc = acc.mul_mod(&base);
            }
            n >>= 1;
            if n != 0 {
                base = base.mul_mod(&base);
            }
        }
        acc
    }

    /// Machine form: 256 hex pairs, coefficient of `u^0` first.
    pub fn to_hex(&self) -> String {
        hex::encode(self.coeffs.map(FieldElement::to_byte))
    }

    pub fn from_hex(s: &str) -> Result<Self, Error> {
        let bytes = hex::decode(s.trim()).map_err(|e| Error::Hex(e.to_string()))?;
        let arr: [u8; N] = bytes.as_slice().try_into().map_err(|_| Error::Length {
            expected: "256".to_string(),
            actual: bytes.len(),
        })?;
        Ok(Self::from_coeffs(arr.map(FieldElement::new)))
    }

    /// Terms `coeff·u^d` in descending degree, where `coeff` is produced by `fmt_coeff`.
    pub fn to_string_with(&self, mut fmt_coeff: impl FnMut(FieldElement) -> String) -> String {
        let terms: Vec<String> = (0..N)
            .rev()
            .filter(|&d| !self.coeffs[d].is_zero())
            .map(|d| format!("{}·u^{d}", fmt_coeff(self.coeffs[d])))
            .collect();
        if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join(" + ")
        }
    }
}

impl fmt::Display for PermPolynomial {
    /// `(<field-poly>)·u^d` terms in descending `d`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_with(|c| format!("({c})")))
    }
}

impl fmt::Debug for PermPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PermPolynomial({self})")
    }
}

impl FromStr for PermPolynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::Parse {
            what: "polynomial",
            input: s.to_string(),
        };
        let mut rest = s.trim();
        let mut out = Self::zero();
        if rest == "0" {
            return Ok(out);
        }
        loop {
            let body = rest.strip_prefix('(').ok_or_else(bad)?;
            let close = body.find(')').ok_or_else(bad)?;
            let c: FieldElement = body[..close].parse().map_err(|_| bad())?;
            let tail = body[close + 1..].strip_prefix("·u^").ok_or_else(bad)?;
            let end = tail.find(|ch: char| !ch.is_ascii_digit()).unwrap_or(tail.len());
            let d: usize = tail[..end].parse().map_err(|_| bad())?;
            if d >= N {
                return Err(bad());
            }
            out.coeffs[d] += c;
            let tail = tail[end..].trim_start();
            if tail.is_empty() {
                return Ok(out);
            }
            rest = tail.strip_prefix('+').ok_or_else(bad)?.trim_start();
        }
    }
}

impl PermutationTable {
    /// Checks that `images` is a bijection.
    pub fn new(images: [FieldElement; N]) -> Result<Self, Error> {
        let mut preimage: [Option<FieldElement>; N] = [None; N];
        for a in FieldElement::all() {
            let img = images[a.to_byte() as usize];
            if let Some(first) = preimage[img.to_byte() as usize] {
                return Err(Error::NotBijective {
                    first,
                    second: a,
                    image: img,
                });
            }
            preimage[img.to_byte() as usize] = Some(a);
        }
        Ok(Self { images })
    }

    pub fn from_fn(f: impl FnMut(FieldElement) -> FieldElement) -> Result<Self, Error> {
        let mut f = f;
        Self::new(std::array::from_fn(|e| f(FieldElement::new(e as u8))))
    }

    pub fn from_bytes(bytes: &[u8; N]) -> Result<Self, Error> {
        Self::new(bytes.map(FieldElement::new))
    }

    pub fn identity() -> Self {
        Self {
            images: std::array::from_fn(|e| FieldElement::new(e as u8)),
        }
    }

    pub fn apply(&self, a: FieldElement) -> FieldElement {
        self.images[a.to_byte() as usize]
    }

    pub fn images(&self) -> &[FieldElement; N] {
        &self.images
    }

    pub fn to_bytes(&self) -> [u8; N] {
        self.images.map(FieldElement::to_byte)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = [FieldElement::ZERO; N];
        for a in FieldElement::all() {
            inv[self.apply(a).to_byte() as usize] = a;
        }
        Self { images: inv }
    }

    /// `self ∘ inner`: apply `inner` first.
    pub fn compose(&self, inner: &PermutationTable) -> Self {
        Self {
            images: inner.images.map(|v| self.apply(v)),
        }
    }

    pub fn pow(&self, mut n: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::identity();
        while n != 0 {
            if n & 1 != 0 {
                acc = acc.compose(&base);
            }
            base = base.compose(&base);
            n >>= 1;
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }

    pub fn interpolate(&self) -> PermPolynomial {
        interpolate(&self.images)
    }
}

impl fmt::Debug for PermutationTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PermutationTable({})", hex::encode(self.to_bytes()))
    }
}

//! Z2-linear maps of GF(256) as linearized polynomials `sum_i lambda_i u^(2^i)`.
//!
//! Conventions: a field element's coordinates in the polynomial basis
//! `1, z, ..., z^7` are its bits. A [`BitMatrix8`] acting on a field element
//! treats those bits as a column vector, so the matrix of a map has column
//! `c` equal to the image of `z^c`. For a basis `a_1..a_8` the change-of-basis
//! matrix `S` has row `j` equal to the coordinates of `a_j`.

use std::fmt;

use crate::aes_core::AFFINE_CONSTANT;
use crate::error::Error;
use crate::gf256::FieldElement;
use crate::permpoly::PermPolynomial;

/// 8x8 matrix over Z2. Bit `c` of `rows[r]` is entry `(r, c)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct BitMatrix8 {
    rows: [u8; 8],
}

fn parity(x: u8) -> u8 {
    (x.count_ones() & 1) as u8
}

impl BitMatrix8 {
    pub fn identity() -> Self {
        Self {
            rows: std::array::from_fn(|r| 1 << r),
        }
    }

    pub const fn from_row_bits(rows: [u8; 8]) -> Self {
        Self { rows }
    }

    /// Rows written left to right as entries `(r, 0), ..., (r, 7)`.
    pub fn from_rows(rows: [[u8; 8]; 8]) -> Self {
        Self {
            rows: rows.map(|row| {
                row.iter()
                    .enumerate()
                    .fold(0u8, |acc, (c, &bit)| acc | ((bit & 1) << c))
            }),
        }
    }

    /// Matrix of a Z2-linear map in the polynomial basis: column `c` holds the
    /// image of `z^c`.
    pub fn of_map(f: impl Fn(FieldElement) -> FieldElement) -> Self {
        let mut rows = [0u8; 8];
        for c in 0..8 {
            let img = f(FieldElement::new(1 << c)).to_byte();
            for (r, row) in rows.iter_mut().enumerate() {
                *row |= ((img >> r) & 1) << c;
            }
        }
        Self { rows }
    }

    pub fn get(&self, r: usize, c: usize) -> u8 {
        (self.rows[r] >> c) & 1
    }

    pub fn row_bits(&self) -> [u8; 8] {
        self.rows
    }

    pub fn transpose(&self) -> Self {
        let mut rows = [0u8; 8];
        for (r, row) in rows.iter_mut().enumerate() {
            for c in 0..8 {
                *row |= self.get(c, r) << c;
            }
        }
        Self { rows }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut rows = [0u8; 8];
        for (r, row) in rows.iter_mut().enumerate() {
            for k in 0..8 {
                if self.get(r, k) == 1 {
                    *row ^= rhs.rows[k];
                }
            }
        }
        Self { rows }
    }

    /// `M * v` with `v` the bit column of `a`.
    pub fn apply(&self, a: FieldElement) -> FieldElement {
        let v = a.to_byte();
        FieldElement::new(
            self.rows
                .iter()
                .enumerate()
                .fold(0u8, |acc, (r, &row)| acc | (parity(row & v) << r)),
        )
    }

    /// Row vector times matrix: `sum_r v_r * row_r`.
    pub fn row_vector_mul(&self, v: u8) -> u8 {
        (0..8)
            .filter(|r| (v >> r) & 1 == 1)
            .fold(0u8, |acc, r| acc ^ self.rows[r])
    }

    /// Gauss-Jordan inverse, `None` when singular.
    pub fn inverse(&self) -> Option<Self> {
        let mut a = self.rows;
        let mut inv = Self::identity().rows;
        for col in 0..8 {
            let pivot = (col..8).find(|&r| (a[r] >> col) & 1 == 1)?;
            a.swap(col, pivot);
            inv.swap(col, pivot);
            for r in 0..8 {
                if r != col && (a[r] >> col) & 1 == 1 {
                    a[r] ^= a[col];
                    inv[r] ^= inv[col];
                }
            }
        }
        Some(Self { rows: inv })
    }

    pub fn is_invertible(&self) -> bool {
        self.inverse().is_some()
    }

    pub fn lift(&self) -> FieldMatrix8 {
        FieldMatrix8 {
            m: std::array::from_fn(|r| std::array::from_fn(|c| FieldElement::new(self.get(r, c)))),
        }
    }
}

impl fmt::Display for BitMatrix8 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..8 {
            let line: String = (0..8).map(|c| if self.get(r, c) == 1 { '1' } else { '0' }).collect();
            writeln!(f, "{line}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitMatrix8 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitMatrix8 {:02x?}", self.rows)
    }
}

/// The circulant matrix of the S-box linear layer in the polynomial basis.
pub fn l_matrix() -> BitMatrix8 {
    BitMatrix8::from_rows([
        [1, 0, 0, 0, 1, 1, 1, 1],
        [1, 1, 0, 0, 0, 1, 1, 1],
        [1, 1, 1, 0, 0, 0, 1, 1],
        [1, 1, 1, 1, 0, 0, 0, 1],
        [1, 1, 1, 1, 1, 0, 0, 0],
        [0, 1, 1, 1, 1, 1, 0, 0],
        [0, 0, 1, 1, 1, 1, 1, 0],
        [0, 0, 0, 1, 1, 1, 1, 1],
    ])
}

/// `f -> (z^4+z^3+z^2+z+1) f mod z^8 + 1`. The modulus is `z^8 + 1`, not the
/// field polynomial, so this is a sum of cyclic bit rotations.
pub fn l_map(a: FieldElement) -> FieldElement {
    let b = a.to_byte();
    FieldElement::new((0..5).fold(0u8, |acc, k| acc ^ b.rotate_left(k)))
}

/// Inverse of [`l_map`].
pub fn inv_l_map(a: FieldElement) -> FieldElement {
    l_matrix()
        .inverse()
        .expect("L is invertible")
        .apply(a)
}

/// 8x8 matrix over GF(256).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct FieldMatrix8 {
    m: [[FieldElement; 8]; 8],
}

impl FieldMatrix8 {
    pub fn identity() -> Self {
        Self {
            m: std::array::from_fn(|r| {
                std::array::from_fn(|c| if r == c { FieldElement::ONE } else { FieldElement::ZERO })
            }),
        }
    }

    pub fn from_entries(m: [[FieldElement; 8]; 8]) -> Self {
        Self { m }
    }

    pub fn get(&self, r: usize, c: usize) -> FieldElement {
        self.m[r][c]
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        Self {
            m: std::array::from_fn(|r| {
                std::array::from_fn(|c| (0..8).map(|k| self.m[r][k] * rhs.m[k][c]).sum())
            }),
        }
    }

    pub fn mul_vec(&self, v: &[FieldElement; 8]) -> [FieldElement; 8] {
        std::array::from_fn(|r| (0..8).map(|k| self.m[r][k] * v[k]).sum())
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }
}

/// An ordered basis of GF(256) over Z2.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct FieldBasis {
    elements: [FieldElement; 8],
}

impl FieldBasis {
    pub fn new(elements: [FieldElement; 8]) -> Result<Self, Error> {
        let basis = Self { elements };
        if basis.change_of_basis().is_invertible() {
            Ok(basis)
        } else {
            Err(Error::DependentBasis)
        }
    }

    /// `1, z, ..., z^7`.
    pub fn polynomial() -> Self {
        Self {
            elements: std::array::from_fn(|i| FieldElement::new(1 << i)),
        }
    }

    /// `g, g^2, g^4, ..., g^128`, if those are independent.
    pub fn normal(generator: FieldElement) -> Result<Self, Error> {
        Self::new(std::array::from_fn(|i| generator.frobenius(i as u32)))
    }

    pub fn elements(&self) -> &[FieldElement; 8] {
        &self.elements
    }

    /// `S` with row `j` holding the polynomial-basis coordinates of element `j`.
    pub fn change_of_basis(&self) -> BitMatrix8 {
        BitMatrix8::from_row_bits(self.elements.map(FieldElement::to_byte))
    }

    /// Coordinates of `a` in this basis, bit `j` for element `j`.
    pub fn coordinates(&self, a: FieldElement) -> u8 {
        let s_inv = self.change_of_basis().inverse().expect("basis is independent");
        s_inv.row_vector_mul(a.to_byte())
    }

    /// `A` with `A[j][i] = a_j^(2^i)`.
    pub fn frobenius_matrix(&self) -> FieldMatrix8 {
        FieldMatrix8 {
            m: std::array::from_fn(|j| std::array::from_fn(|i| self.elements[j].frobenius(i as u32))),
        }
    }

    /// `B` with `B[i][j] = b_j^(2^i)`, where this basis plays the role of `b`.
    pub fn dual_frobenius_matrix(&self) -> FieldMatrix8 {
        FieldMatrix8 {
            m: std::array::from_fn(|i| std::array::from_fn(|j| self.elements[j].frobenius(i as u32))),
        }
    }

    /// Gram matrix of the trace form, `Tr(a_i a_j)`.
    pub fn trace_gram(&self) -> BitMatrix8 {
        let mut rows = [0u8; 8];
        for (i, row) in rows.iter_mut().enumerate() {
            for j in 0..8 {
                *row |= (self.elements[i] * self.elements[j]).trace() << j;
            }
        }
        BitMatrix8::from_row_bits(rows)
    }

    /// The basis `b` with `Tr(a_i b_j) = [i == j]`.
    pub fn dual(&self) -> FieldBasis {
        // The trace form is nondegenerate, so the Gram matrix of a basis is invertible.
        let g_inv = self.trace_gram().inverse().expect("trace form is nondegenerate");
        let elements = std::array::from_fn(|j| {
            (0..8)
                .filter(|&k| g_inv.get(j, k) == 1)
                .map(|k| self.elements[k])
                .sum()
        });
        FieldBasis { elements }
    }

    /// Checks all 64 trace conditions against `other`.
    pub fn is_dual_of(&self, other: &FieldBasis) -> bool {
        (0..8).all(|i| {
            (0..8).all(|j| (other.elements[i] * self.elements[j]).trace() == u8::from(i == j))
        })
    }
}

impl fmt::Display for FieldBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.elements {
            writeln!(f, "{}  {}", e.to_hex_string(), e)?;
        }
        Ok(())
    }
}

/// `sum_{i<8} lambda_i u^(2^i)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct LinearizedPoly {
    lambdas: [FieldElement; 8],
}

impl LinearizedPoly {
    pub fn new(lambdas: [FieldElement; 8]) -> Self {
        Self { lambdas }
    }

    /// `L(u) = u`.
    pub fn identity() -> Self {
        let mut lambdas = [FieldElement::ZERO; 8];
        lambdas[0] = FieldElement::ONE;
        Self { lambdas }
    }

    pub fn lambdas(&self) -> &[FieldElement; 8] {
        &self.lambdas
    }

    pub fn eval(&self, a: FieldElement) -> FieldElement {
        let mut x = a;
        let mut acc = FieldElement::ZERO;
        for &l in &self.lambdas {
            acc += l * x;
            x = x.square();
        }
        acc
    }

    pub fn to_perm_polynomial(&self) -> PermPolynomial {
        let mut p = PermPolynomial::zero();
        for (i, &l) in self.lambdas.iter().enumerate() {
            p.set_coeff(1 << i, l);
        }
        p
    }

    /// `L(u^k) mod u^256 + u`. Each term stays a single monomial, so the result
    /// has at most eight terms.
    pub fn compose_power(&self, k: u64) -> PermPolynomial {
        let mut p = PermPolynomial::zero();
        for (i, &l) in self.lambdas.iter().enumerate() {
            let e = k << i;
            let reduced = if e == 0 { 0 } else { ((e - 1) % 255 + 1) as usize };
            p.set_coeff(reduced, p.coeff(reduced) + l);
        }
        p
    }
}

/// Finds the first pair `(a, b)` with `f(a + b) != f(a) + f(b)`.
pub fn check_linear(values: &[FieldElement; 256]) -> Result<(), Error> {
    let f = |a: FieldElement| values[a.to_byte() as usize];
    for a in FieldElement::all() {
        for b in FieldElement::all().skip(a.to_byte() as usize) {
            if f(a + b) != f(a) + f(b) {
                return Err(Error::NotLinear { a, b });
            }
        }
    }
    Ok(())
}

/// Coefficients of the linearized polynomial of a Z2-linear map, computed as
/// `B S M^t S^-1 (a_1, ..., a_8)^t` where `M` is the map's matrix in the
/// polynomial basis, `S` the change of basis to `basis` and `B` the Frobenius
/// matrix of the dual basis.
pub fn linearize(values: &[FieldElement; 256], basis: &FieldBasis) -> Result<LinearizedPoly, Error> {
    check_linear(values)?;
    let map = BitMatrix8::of_map(|a| values[a.to_byte() as usize]);
    let s = basis.change_of_basis();
    let s_inv = s.inverse().ok_or(Error::DependentBasis)?;
    let conj = s.mul(&map.transpose()).mul(&s_inv);
    let images = conj.lift().mul_vec(basis.elements());
    let b = basis.dual().dual_frobenius_matrix();
    let poly = LinearizedPoly::new(b.mul_vec(&images));

    for a in FieldElement::all() {
        if poly.eval(a) != values[a.to_byte() as usize] {
            return Err(Error::Inconsistent("linearized polynomial disagrees with the map"));
        }
    }
    Ok(poly)
}

pub fn linearize_fn(f: impl Fn(FieldElement) -> FieldElement, basis: &FieldBasis) -> Result<LinearizedPoly, Error> {
    let values = std::array::from_fn(|e| f(FieldElement::new(e as u8)));
    linearize(&values, basis)
}

/// Linearized polynomial of the S-box linear layer.
pub fn l_poly() -> LinearizedPoly {
    linearize_fn(l_map, &FieldBasis::polynomial()).expect("l_map is linear")
}

/// Linearized polynomial of the inverse linear layer.
pub fn l_inv_poly() -> LinearizedPoly {
    linearize_fn(inv_l_map, &FieldBasis::polynomial()).expect("inverse of l_map is linear")
}

/// `rho(u) = L^-1(u) + L^-1(c)`, the affine polynomial inverting
/// `f -> L(f) + c` for the S-box constant `c`.
pub fn affine_rho() -> PermPolynomial {
    let l_inv = l_inv_poly();
    let mut rho = l_inv.to_perm_polynomial();
    rho.set_coeff(0, l_inv.eval(AFFINE_CONSTANT));
    rho
}

pub fn is_normal(a: FieldElement) -> bool {
    FieldBasis::normal(a).is_ok()
}

/// First element in ascending byte order that is primitive and generates a
/// normal basis.
pub fn find_first_primitive_normal() -> FieldElement {
    FieldElement::all()
        .find(|&a| a.is_primitive() && is_normal(a))
        .expect("GF(256) has a primitive normal basis")
}

/// Generator of the dual of the normal basis of `generator`.
pub fn dual_generator(generator: FieldElement) -> Result<FieldElement, Error> {
    Ok(FieldBasis::normal(generator)?.dual().elements()[0])
}

/// What counts as a self-dual normal basis.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SelfDualRule {
    /// The dual generator equals the generator.
    Exact,
    /// The dual generator is some conjugate `g^(2^k)`, i.e. the two bases agree as sets.
    Orbit,
}

/// All normal-basis generators whose basis is self-dual under `rule`.
pub fn self_dual_normal_generators(rule: SelfDualRule, require_primitive: bool) -> Vec<FieldElement> {
    FieldElement::all()
        .filter(|&a| !require_primitive || a.is_primitive())
        .filter(|&a| {
            let Ok(beta) = dual_generator(a) else {
                return false;
            };
            match rule {
                SelfDualRule::Exact => beta == a,
                SelfDualRule::Orbit => (0..8).any(|k| a.frobenius(k) == beta),
            }
        })
        .collect()
}

/// Exhaustive search for a self-dual primitive normal basis.
pub fn self_dual_primitive_normal_search(rule: SelfDualRule) -> Option<FieldElement> {
    self_dual_normal_generators(rule, true).first().copied()
}

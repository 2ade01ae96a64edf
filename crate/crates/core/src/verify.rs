//! Self-checks run by the `verify` command. Each check recomputes one
//! published constant or cipher property and compares it to the stored value.

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::aes_core::{self, CipherVariant};
use crate::gf256::FieldElement;
use crate::linearized::{self, FieldBasis, SelfDualRule};
use crate::permpoly::PermPolynomial;
use crate::reference_aes;
use crate::ring::{gamma, gamma_inv, Block, RingElement};
use crate::sbox_analysis::{CycleDecomposition, DiscreteLogTable};

/// Nonzero terms of the S-box polynomial `phi(u)`.
pub const SBOX_POLY_TERMS: [(usize, &str); 9] = [
    (254, "z^2+1"),
    (253, "z^3+1"),
    (251, "z^7+z^6+z^5+z^4+z^3+1"),
    (247, "z^5+z^2+1"),
    (239, "z^7+z^6+z^5+z^4+z^2"),
    (223, "1"),
    (191, "z^7+z^5+z^4+z^2+1"),
    (127, "z^7+z^3+z^2+z+1"),
    (0, "z^6+z^5+z+1"),
];

/// `lambda_0 ..= lambda_7` of the linear layer.
pub const LAMBDA: [&str; 8] = [
    "z^2+1",
    "z^3+1",
    "z^7+z^6+z^5+z^4+z^3+1",
    "z^5+z^2+1",
    "z^7+z^6+z^5+z^4+z^2",
    "1",
    "z^7+z^5+z^4+z^2+1",
    "z^7+z^3+z^2+z+1",
];

/// Coefficients of `u^1, u^2, ..., u^128` in the inverse linear layer.
pub const L_INV: [&str; 8] = [
    "z^2+1",
    "z^7+z^6+z^5+z^4+z^3+z^2+z",
    "z^6+z^5+z^4+z^3+z^2+z+1",
    "z^6+z^4+z^3+z",
    "z^6+z^5+z^4+z^3",
    "z^6+z^4+z^3+1",
    "z^7+z^6+z^4+z^3+z+1",
    "z^6+z^5+z^3+z^2+z",
];

pub const ALPHA: FieldElement = FieldElement::new(0x21);
pub const BETA: FieldElement = FieldElement::new(0x35);
pub const SBOX_CYCLE_LENGTHS: [usize; 5] = [59, 81, 87, 27, 2];
pub const SBOX_ORDER: u64 = 277_182;
/// Printed as the largest element order in S_256. The true maximum is larger,
/// see [`LANDAU_256`].
pub const PUBLISHED_LANDAU_256: u64 = 451_129_701_092_070;
/// g(256), attained by cycle lengths 8, 9, 5, 7, 11, 13, 17, 19, 23, 29, 31, 41, 43.
pub const LANDAU_256: u64 = 4_243_057_729_190_280;

pub const DEFAULT_SEED: u64 = 0x5eed;
pub const DEFAULT_RANDOM_CASES: usize = 1000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl CheckResult {
    fn new(name: &'static str, passed: bool, detail: impl Into<String>) -> Self {
        Self {
            name,
            passed,
            detail: detail.into(),
        }
    }

    pub fn line(&self) -> String {
        let status = if self.passed { "PASS" } else { "FAIL" };
        if self.detail.is_empty() {
            format!("{status} {}", self.name)
        } else {
            format!("{status} {}: {}", self.name, self.detail)
        }
    }
}

fn fe(s: &str) -> FieldElement {
    s.parse().expect("stored constant parses")
}

pub fn expected_sbox_polynomial() -> PermPolynomial {
    let mut p = PermPolynomial::zero();
    for (d, c) in SBOX_POLY_TERMS {
        p.set_coeff(d, fe(c));
    }
    p
}

pub fn expected_lambda() -> [FieldElement; 8] {
    LAMBDA.map(fe)
}

pub fn expected_l_inv() -> [FieldElement; 8] {
    L_INV.map(fe)
}

fn x_poly(c: [u8; 4]) -> RingElement {
    RingElement::from_x_poly(c.map(FieldElement::new))
}

pub fn paper_constant_checks() -> Vec<CheckResult> {
    let mut out = Vec::new();
    let phi = aes_core::sbox_polynomial();
    let psi = aes_core::inv_sbox_polynomial();

    out.push(CheckResult::new(
        "S-box polynomial has the nine published terms",
        *phi == expected_sbox_polynomial(),
        format!("support {:?}", phi.support()),
    ));

    let l_poly = linearized::l_poly();
    out.push(CheckResult::new(
        "S-box polynomial equals constant + L(u^254)",
        {
            let mut p = l_poly.compose_power(254);
            p.set_coeff(0, p.coeff(0) + aes_core::AFFINE_CONSTANT);
            p == *phi
        },
        "",
    ));

    let normal = FieldBasis::normal(ALPHA).expect("alpha generates a normal basis");
    for (name, basis) in [("lambda via polynomial basis", FieldBasis::polynomial()), ("lambda via normal basis", normal)] {
        let got = linearized::linearize_fn(linearized::l_map, &basis).map(|p| *p.lambdas());
        out.push(CheckResult::new(name, got == Ok(expected_lambda()), format!("{got:?}")));
    }

    let l_inv = linearized::linearize_fn(linearized::inv_l_map, &normal).map(|p| *p.lambdas());
    out.push(CheckResult::new("inverse linear layer coefficients", l_inv == Ok(expected_l_inv()), format!("{l_inv:?}")));

    let rho = linearized::affine_rho();
    out.push(CheckResult::new(
        "rho constant term is z^2+1",
        rho.coeff(0) == FieldElement::new(0x05),
        rho.coeff(0).to_poly_string(),
    ));

    let psi_pow = rho.pow_mod(254);
    out.push(CheckResult::new("psi = rho^254 mod u^256+u equals interpolated psi", psi_pow == *psi, ""));

    let logs = DiscreteLogTable::new(ALPHA).expect("alpha is primitive");
    out.push(CheckResult::new(
        "psi leading coefficient alpha^163, constant alpha^92",
        logs.log(psi.coeff(254)) == Some(163) && logs.log(psi.coeff(0)) == Some(92),
        format!("{:?} {:?}", logs.log(psi.coeff(254)), logs.log(psi.coeff(0))),
    ));
    out.push(CheckResult::new("psi has 255 nonzero coefficients", psi.sparsity() == 255, psi.sparsity().to_string()));

    out.push(CheckResult::new(
        "phi(psi(u)) = u and psi(phi(a)) = a",
        phi.compose(psi) == PermPolynomial::identity()
            && FieldElement::all().all(|a| psi.evaluate(phi.evaluate(a)) == a),
        "",
    ));

    let g = gamma();
    out.push(CheckResult::new("gamma has order 4", g.pow(4) == RingElement::one() && g.pow(2) != RingElement::one(), ""));
    out.push(CheckResult::new(
        "gamma^-1 = gamma^3 = (z^2 x^2 + z^2 + 1) gamma",
        g.pow(3) == gamma_inv() && x_poly([0x05, 0, 0x04, 0]) * g == gamma_inv(),
        "",
    ));
    out.push(CheckResult::new(
        "gamma^-1 = (z x^3 + z + 1)(x^3 + (z^2+1) x^2 + x + z^2)",
        x_poly([0x03, 0, 0, 0x02]) * x_poly([0x04, 0x01, 0x05, 0x01]) == gamma_inv(),
        "",
    ));

    let first = linearized::find_first_primitive_normal();
    out.push(CheckResult::new("first primitive normal generator is z^5+1", first == ALPHA, first.to_hex_string()));
    let dual = normal.dual();
    out.push(CheckResult::new(
        "dual of the alpha normal basis is generated by z^5+z^4+z^2+1",
        FieldBasis::normal(BETA).map(|b| b == dual).unwrap_or(false),
        dual.elements()[0].to_hex_string(),
    ));
    out.push(CheckResult::new(
        "A B = I_8",
        normal.frobenius_matrix().mul(&dual.dual_frobenius_matrix()).is_identity(),
        "",
    ));
    let exact = linearized::self_dual_primitive_normal_search(SelfDualRule::Exact);
    let orbit = linearized::self_dual_primitive_normal_search(SelfDualRule::Orbit);
    out.push(CheckResult::new(
        "no self-dual primitive normal basis",
        exact.is_none() && orbit.is_none(),
        format!("{exact:?} {orbit:?}"),
    ));

    let table = aes_core::sbox_table();
    let cycles = CycleDecomposition::in_power_order(table, ALPHA);
    out.push(CheckResult::new(
        "S-box cycle lengths 59 81 87 27 2",
        cycles.lengths() == SBOX_CYCLE_LENGTHS,
        format!("{:?}", cycles.lengths()),
    ));
    out.push(CheckResult::new(
        "S-box order 277182",
        cycles.order() == SBOX_ORDER && table.pow(SBOX_ORDER).is_identity(),
        cycles.order().to_string(),
    ));
    let two_cycle: Vec<Option<u8>> = cycles.cycles()[4].iter().map(|&a| logs.log(a)).collect();
    out.push(CheckResult::new(
        "S-box 2-cycle is {alpha^38, alpha^54}",
        two_cycle == [Some(38), Some(54)],
        format!("{two_cycle:?}"),
    ));

    let landau = crate::sbox_analysis::landau_max_order(256).expect("256 is in range");
    let published = if landau == BigUint::from(PUBLISHED_LANDAU_256) {
        "matches the published figure".to_string()
    } else {
        format!("published figure {PUBLISHED_LANDAU_256} is not the maximum")
    };
    out.push(CheckResult::new(
        "S-box order is below Landau g(256)",
        BigUint::from(SBOX_ORDER) < landau,
        format!("g(256) = {landau}; {published}"),
    ));
    out
}

pub fn vector_checks(seed: u64, random_cases: usize) -> Vec<CheckResult> {
    let mut out = Vec::new();
    let pt: Block = "00112233445566778899aabbccddeeff".parse().expect("hex literal");
    let known = [
        (CipherVariant::Aes128, "69c4e0d86a7b0430d8cdb78070b4c55a"),
        (CipherVariant::Aes192, "dda97ca4864cdfe06eaf70a0ec0d7191"),
        (CipherVariant::Aes256, "8ea2b7ca516745bfeafc49904b496089"),
    ];
    for (variant, ct_hex) in known {
        let ct: Block = ct_hex.parse().expect("hex literal");
        let key: Vec<u8> = (0..variant.key_bytes() as u8).collect();
        let ks = aes_core::expand_key(&key, variant).expect("key length matches");
        let enc = aes_core::encrypt_block(&pt, &ks);
        let dec = aes_core::decrypt_block(&ct, &ks);
        let reference = reference_aes::ref_encrypt(&pt.0, &key).expect("key length matches");
        out.push(CheckResult::new(
            match variant {
                CipherVariant::Aes128 => "FIPS-197 AES-128 known answer",
                CipherVariant::Aes192 => "FIPS-197 AES-192 known answer",
                CipherVariant::Aes256 => "FIPS-197 AES-256 known answer",
            },
            enc == ct && dec == pt && reference == ct.0,
            enc.to_hex(),
        ));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut mismatches = 0usize;
    for variant in CipherVariant::ALL {
        for _ in 0..random_cases {
            let key: Vec<u8> = (0..variant.key_bytes()).map(|_| rng.gen()).collect();
            let block = Block(rng.gen());
            let ks = aes_core::expand_key(&key, variant).expect("key length matches");
            let ct = aes_core::encrypt_block(&block, &ks);
            let ok = reference_aes::ref_encrypt(&block.0, &key).ok() == Some(ct.0)
                && reference_aes::ref_decrypt(&ct.0, &key).ok() == Some(block.0)
                && aes_core::decrypt_block(&ct, &ks) == block;
            if !ok {
                mismatches += 1;
            }
        }
    }
    out.push(CheckResult::new(
        "random differential against reference AES",
        mismatches == 0,
        format!("{} cases per variant, seed {seed}, {mismatches} mismatches", random_cases),
    ));
    out.push(CheckResult::new(
        "S-box table equals reference S-box literal",
        aes_core::sbox_table().to_bytes() == reference_aes::SBOX,
        "",
    ));
    out
}

pub fn all_checks(seed: u64, random_cases: usize) -> Vec<CheckResult> {
    let mut out = paper_constant_checks();
    out.extend(vector_checks(seed, random_cases));
    out
}

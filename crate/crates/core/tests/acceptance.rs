//! End-to-end acceptance checks. Each criterion prints one `PASS`/`FAIL` line;
//! run with `--nocapture` to see them when everything passes.

mod data;

use std::time::Instant;

use num_bigint::BigUint;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use rijndael_poly::aes_core::{self, sub_shift, CipherVariant};
use rijndael_poly::linearized::{self, FieldBasis, SelfDualRule};
use rijndael_poly::permpoly::{interpolate, PermPolynomial, PermutationTable};
use rijndael_poly::reference_aes::{ref_decrypt, ref_encrypt};
use rijndael_poly::ring::{gamma, gamma_inv, Block, RingElement};
use rijndael_poly::sbox_analysis::{landau_max_order, CycleDecomposition, DiscreteLogTable};
use rijndael_poly::verify::{self, ALPHA, BETA, PUBLISHED_LANDAU_256, SBOX_CYCLE_LENGTHS, SBOX_ORDER};
use rijndael_poly::FieldElement;

use data::published::{PSI_LOGS, SBOX_CYCLES};

const SEED: u64 = verify::DEFAULT_SEED;

struct Outcome {
    failures: Vec<String>,
}

impl Outcome {
    fn check(&mut self, cond: bool, what: impl Into<String>) {
        if !cond {
            self.failures.push(what.into());
        }
    }
}

fn run(id: u32, title: &str, body: impl FnOnce(&mut Outcome)) -> bool {
    let start = Instant::now();
    let mut o = Outcome { failures: Vec::new() };
    body(&mut o);
    let ms = start.elapsed().as_millis();
    if o.failures.is_empty() {
        println!("PASS {id:>2} {title} ({ms} ms)");
        true
    } else {
        println!("FAIL {id:>2} {title} ({ms} ms): {}", o.failures.join("; "));
        false
    }
}

fn alpha_pow(e: i16) -> FieldElement {
    if e < 0 {
        FieldElement::ZERO
    } else {
        ALPHA.pow(e as u64)
    }
}

fn sbox_polynomial_terms(o: &mut Outcome) {
    let phi = aes_core::sbox_table().interpolate();
    o.check(phi == verify::expected_sbox_polynomial(), format!("support {:?}", phi.support()));
    o.check(phi.sparsity() == 9, format!("{} terms", phi.sparsity()));
}

fn linearization(o: &mut Outcome) {
    let expected = verify::expected_lambda();
    for basis in [FieldBasis::polynomial(), FieldBasis::normal(ALPHA).unwrap()] {
        match linearized::linearize_fn(linearized::l_map, &basis) {
            Ok(p) => o.check(*p.lambdas() == expected, format!("{:?} in {basis}", p.lambdas())),
            Err(e) => o.check(false, e.to_string()),
        }
    }
}

fn inverse_machinery(o: &mut Outcome) {
    let l_inv = linearized::l_inv_poly();
    o.check(*l_inv.lambdas() == verify::expected_l_inv(), format!("{:?}", l_inv.lambdas()));
    o.check(
        FieldElement::all().all(|a| l_inv.eval(linearized::l_map(a)) == a),
        "L^-1 does not invert L",
    );

    let via_rho = linearized::affine_rho().pow_mod(254);
    let via_table = aes_core::inv_sbox_table().interpolate();
    o.check(via_rho == via_table, "rho^254 differs from interpolated inverse");

    let logs = DiscreteLogTable::new(ALPHA).unwrap();
    o.check(logs.log(via_table.coeff(254)) == Some(163), "u^254 coefficient");
    o.check(logs.log(via_table.coeff(0)) == Some(92), "constant term");
    let mismatched: Vec<usize> = (0..255).filter(|&d| via_table.coeff(d) != alpha_pow(PSI_LOGS[d])).collect();
    o.check(mismatched.is_empty(), format!("coefficients differ at {mismatched:?}"));
    o.check(via_table.coeff(255).is_zero(), "u^255 coefficient is nonzero");
}

fn round_trip(o: &mut Outcome) {
    let phi = aes_core::sbox_polynomial();
    let psi = aes_core::inv_sbox_polynomial();
    o.check(phi.compose(psi) == PermPolynomial::identity(), "phi(psi(u)) != u");
    o.check(psi.compose(phi) == PermPolynomial::identity(), "psi(phi(u)) != u");
    o.check(FieldElement::all().all(|a| psi.evaluate(phi.evaluate(a)) == a), "pointwise");
}

fn x_poly(c: [u8; 4]) -> RingElement {
    RingElement::from_x_poly(c.map(FieldElement::new))
}

fn gamma_algebra(o: &mut Outcome) {
    let g = gamma();
    o.check(g.pow(4) == RingElement::one(), "gamma^4 != 1");
    o.check(g.pow(2) != RingElement::one(), "gamma^2 == 1");
    o.check(g.pow(3) == gamma_inv(), "gamma^3 != gamma^-1");
    o.check(g * gamma_inv() == RingElement::one(), "gamma * gamma^-1 != 1");
    o.check(x_poly([0x05, 0, 0x04, 0]) * g == gamma_inv(), "(z^2 x^2 + z^2 + 1) gamma");
    o.check(x_poly([0x03, 0, 0, 0x02]) * x_poly([0x04, 0x01, 0x05, 0x01]) == gamma_inv(), "factorization");
}

fn cipher_bit_exactness(o: &mut Outcome) {
    let pt: Block = "00112233445566778899aabbccddeeff".parse().unwrap();
    let known = [
        (CipherVariant::Aes128, "69c4e0d86a7b0430d8cdb78070b4c55a"),
        (CipherVariant::Aes192, "dda97ca4864cdfe06eaf70a0ec0d7191"),
        (CipherVariant::Aes256, "8ea2b7ca516745bfeafc49904b496089"),
    ];
    for (variant, ct_hex) in known {
        let ct: Block = ct_hex.parse().unwrap();
        let key: Vec<u8> = (0..variant.key_bytes() as u8).collect();
        let ks = aes_core::expand_key(&key, variant).unwrap();
        o.check(aes_core::encrypt_block(&pt, &ks) == ct, format!("{} encrypt", variant.name()));
        o.check(aes_core::decrypt_block(&ct, &ks) == pt, format!("{} decrypt", variant.name()));
        o.check(ref_encrypt(&pt.0, &key).unwrap() == ct.0, format!("{} reference", variant.name()));
    }
    let a1_key: Vec<u8> = rijndael_poly::decode_hex("2b7e151628aed2a6abf7158809cf4f3c").unwrap();
    let a1_pt: Block = "3243f6a8885a308d313198a2e0370734".parse().unwrap();
    let ks = aes_core::expand_key(&a1_key, CipherVariant::Aes128).unwrap();
    o.check(
        aes_core::encrypt_block(&a1_pt, &ks).to_hex() == "3925841d02dc09fbdc118597196a0b32",
        "AES-128 worked example",
    );

    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for variant in CipherVariant::ALL {
        let mut mismatches = 0;
        for _ in 0..10_000 {
            let key: Vec<u8> = (0..variant.key_bytes()).map(|_| rng.gen()).collect();
            let block = Block(rng.gen());
            let ks = aes_core::expand_key(&key, variant).unwrap();
            let ct = aes_core::encrypt_block(&block, &ks);
            let ok = ref_encrypt(&block.0, &key).unwrap() == ct.0
                && ref_decrypt(&ct.0, &key).unwrap() == block.0
                && aes_core::decrypt_block(&ct, &ks) == block;
            if !ok {
                mismatches += 1;
            }
        }
        o.check(mismatches == 0, format!("{}: {mismatches} mismatches", variant.name()));
    }
}

fn cycle_structure(o: &mut Outcome) {
    let table = aes_core::sbox_table();
    let d = CycleDecomposition::in_power_order(table, ALPHA);
    let mut lengths = d.lengths();
    lengths.sort_unstable();
    let mut expected = SBOX_CYCLE_LENGTHS.to_vec();
    expected.sort_unstable();
    o.check(lengths == expected, format!("lengths {lengths:?}"));
    o.check(d.order() == SBOX_ORDER, format!("order {}", d.order()));
    o.check(table.pow(SBOX_ORDER).is_identity(), "277182-fold composition is not the identity");
    for p in [2u64, 3, 29, 59] {
        o.check(!table.pow(SBOX_ORDER / p).is_identity(), format!("order divides 277182/{p}"));
    }

    let two = d.cycles().iter().find(|c| c.len() == 2);
    let mut two: Vec<FieldElement> = two.cloned().unwrap_or_default();
    two.sort_unstable_by_key(|a| a.to_byte());
    let mut want = vec![ALPHA.pow(38), ALPHA.pow(54)];
    want.sort_unstable_by_key(|a| a.to_byte());
    o.check(two == want, "2-cycle is not {alpha^38, alpha^54}");

    let zero_cycle = d.cycle_of(FieldElement::ZERO).map(|i| d.cycles()[i].len());
    o.check(zero_cycle == Some(59), format!("0 lies in a cycle of length {zero_cycle:?}"));

    let listed: Vec<Vec<FieldElement>> = SBOX_CYCLES
        .iter()
        .map(|c| c.iter().map(|&e| alpha_pow(e)).collect())
        .collect();
    o.check(d.cycles() == listed.as_slice(), "cycle listing differs from the transcription");
}

fn basis_facts(o: &mut Outcome) {
    let first = linearized::find_first_primitive_normal();
    o.check(first == ALPHA, format!("first primitive normal {first:?}"));
    o.check(
        FieldElement::all()
            .take_while(|&a| a != ALPHA)
            .all(|a| !(a.is_primitive() && linearized::is_normal(a))),
        "an earlier element is primitive normal",
    );
    let basis = FieldBasis::normal(ALPHA).unwrap();
    let dual = basis.dual();
    o.check(dual.elements()[0] == BETA, format!("dual generator {:?}", dual.elements()[0]));
    o.check(linearized::dual_generator(ALPHA).ok() == Some(BETA), "dual_generator");
    o.check(basis.frobenius_matrix().mul(&dual.dual_frobenius_matrix()).is_identity(), "AB != I");
    for rule in [SelfDualRule::Exact, SelfDualRule::Orbit] {
        let found = linearized::self_dual_primitive_normal_search(rule);
        o.check(found.is_none(), format!("{rule:?} search found {found:?}"));
    }
}

fn landau_bound(o: &mut Outcome) {
    let g = landau_max_order(256).unwrap();
    o.check(
        g == BigUint::from(PUBLISHED_LANDAU_256),
        format!("g(256) computed as {g}, expected {PUBLISHED_LANDAU_256}"),
    );
    o.check(BigUint::from(SBOX_ORDER) < g, "S-box order is not below g(256)");
}

fn column_times_gamma(col: [FieldElement; 4]) -> [FieldElement; 4] {
    let g = [0x02u8, 0x01, 0x01, 0x03].map(FieldElement::new);
    let mut out = [FieldElement::ZERO; 4];
    for (i, &a) in g.iter().enumerate() {
        for (k, &b) in col.iter().enumerate() {
            out[(i + k) % 4] += a * b;
        }
    }
    out
}

fn random_ring(rng: &mut ChaCha8Rng) -> RingElement {
    RingElement::from_block(&Block(rng.gen()))
}

fn property_suites(o: &mut Outcome) {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut field_failures = 0;
    for _ in 0..10_000 {
        let [a, b, c] = [0; 3].map(|_| FieldElement::new(rng.gen()));
        let ok = (a + b) + c == a + (b + c)
            && (a * b) * c == a * (b * c)
            && a + b == b + a
            && a * b == b * a
            && a * (b + c) == a * b + a * c
            && a + FieldElement::ZERO == a
            && a * FieldElement::ONE == a
            && a + a == FieldElement::ZERO
            && (a.is_zero() || a * a.inv().unwrap() == FieldElement::ONE);
        if !ok {
            field_failures += 1;
        }
    }
    o.check(field_failures == 0, format!("{field_failures} field axiom failures"));

    let mut sr_failures = 0;
    for _ in 0..1_000 {
        let (a, b) = (random_ring(&mut rng), random_ring(&mut rng));
        let ok = (a * b).shift_rows() == a.shift_rows() * b.shift_rows()
            && (a + b).shift_rows() == a.shift_rows() + b.shift_rows()
            && a.shift_rows().inv_shift_rows() == a;
        if !ok {
            sr_failures += 1;
        }
    }
    o.check(sr_failures == 0, format!("{sr_failures} shift_rows failures"));

    let mut gamma_failures = 0;
    for _ in 0..1_000 {
        let r = random_ring(&mut rng);
        let prod = gamma() * r;
        if (0..4).any(|j| prod.column(j) != column_times_gamma(r.column(j))) {
            gamma_failures += 1;
        }
    }
    o.check(gamma_failures == 0, format!("{gamma_failures} columnwise gamma failures"));

    let mut interp_failures = 0;
    for _ in 0..20 {
        let mut bytes: Vec<u8> = (0..=255).collect();
        bytes.shuffle(&mut rng);
        let images: [FieldElement; 256] = std::array::from_fn(|i| FieldElement::new(bytes[i]));
        let table = PermutationTable::new(images).unwrap();
        let p = interpolate(&images);
        if p.evaluation_map() != images || p.tabulate().ok() != Some(table) {
            interp_failures += 1;
        }
    }
    o.check(interp_failures == 0, format!("{interp_failures} interpolation failures"));
}

#[test]
fn acceptance_criteria() {
    let results = [
        run(1, "S-box polynomial has the nine published terms", sbox_polynomial_terms),
        run(2, "linear layer lambdas through both bases", linearization),
        run(3, "inverse linear layer and inverse S-box polynomial", inverse_machinery),
        run(4, "phi and psi are mutually inverse", round_trip),
        run(5, "gamma identities", gamma_algebra),
        run(6, "algebraic cipher matches the reference AES", cipher_bit_exactness),
        run(7, "S-box cycle structure", cycle_structure),
        run(8, "normal and dual basis facts", basis_facts),
        run(9, "Landau bound g(256)", landau_bound),
        run(10, "property suites", property_suites),
    ];
    let failed: Vec<usize> = (0..results.len()).filter(|&i| !results[i]).map(|i| i + 1).collect();
    println!("{} criteria, {} failed", results.len(), failed.len());
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}

/// Multiplying by gamma in the last round as well gives a different cipher.
#[test]
fn final_round_without_gamma_is_required() {
    let key: Vec<u8> = (0..16).collect();
    let pt: Block = "00112233445566778899aabbccddeeff".parse().unwrap();
    let ks = aes_core::expand_key(&key, CipherVariant::Aes128).unwrap();
    let table = aes_core::sbox_table();
    let keys = ks.keys();
    let mut m = RingElement::from_block(&pt) + keys[0];
    for key in &keys[1..=10] {
        m = gamma() * sub_shift(&m, table) + *key;
    }
    let oracle = ref_encrypt(&pt.0, &key).unwrap();
    assert_ne!(m.to_block().0, oracle);
    assert_eq!(aes_core::encrypt_block(&pt, &ks).0, oracle);
}

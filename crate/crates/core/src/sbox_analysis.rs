//! Cycle structure of field permutations, discrete logs to a primitive
//! element, and Landau's function.

use std::fmt::Write as _;

use num_bigint::BigUint;
use num_integer::Integer;

use crate::error::Error;
use crate::gf256::FieldElement;
use crate::permpoly::PermutationTable;

/// Disjoint cycles covering all 256 field elements.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CycleDecomposition {
    cycles: Vec<Vec<FieldElement>>,
}

impl CycleDecomposition {
    /// Canonical form: each cycle starts at its smallest element and cycles
    /// are sorted by that element.
    pub fn new(table: &PermutationTable) -> Self {
        Self::with_start_order(table, FieldElement::all())
    }

    /// Validates bijectivity before decomposing.
    pub fn from_images(images: [FieldElement; 256]) -> Result<Self, Error> {
        Ok(Self::new(&PermutationTable::new(images)?))
    }

    /// Starts a new cycle at each element of `order` not yet visited. Elements
    /// missing from `order` are picked up afterwards in byte order.
    pub fn with_start_order(table: &PermutationTable, order: impl IntoIterator<Item = FieldElement>) -> Self {
        let mut seen = [false; 256];
        let mut cycles = Vec::new();
        for start in order.into_iter().chain(FieldElement::all()) {
            if seen[start.to_byte() as usize] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x.to_byte() as usize] {
                seen[x.to_byte() as usize] = true;
                cycle.push(x);
                x = table.apply(x);
            }
            cycles.push(cycle);
        }
        Self { cycles }
    }

    /// Cycles started in the order `g, g^2, ..., g^255, 0`, the way one lists
    /// them when scanning the field by powers of a primitive `g`.
    pub fn in_power_order(table: &PermutationTable, generator: FieldElement) -> Self {
        let powers = (1..=255u64).map(move |e| generator.pow(e));
        Self::with_start_order(table, powers.chain(std::iter::once(FieldElement::ZERO)))
    }

    pub fn cycles(&self) -> &[Vec<FieldElement>] {
        &self.cycles
    }

    pub fn lengths(&self) -> Vec<usize> {
        self.cycles.iter().map(Vec::len).collect()
    }

    /// Index of the cycle containing `a`.
    pub fn cycle_of(&self, a: FieldElement) -> Option<usize> {
        self.cycles.iter().position(|c| c.contains(&a))
    }

    /// Least common multiple of the cycle lengths.
    pub fn order(&self) -> u64 {
        permutation_order(self)
    }

    /// Rebuilds the permutation.
    pub fn to_table(&self) -> Result<PermutationTable, Error> {
        let mut images = [FieldElement::ZERO; 256];
        for cycle in &self.cycles {
            for (p, &a) in cycle.iter().enumerate() {
                images[a.to_byte() as usize] = cycle[(p + 1) % cycle.len()];
            }
        }
        PermutationTable::new(images)
    }
}

pub fn cycle_decomposition(table: &PermutationTable) -> CycleDecomposition {
    CycleDecomposition::new(table)
}

pub fn permutation_order(d: &CycleDecomposition) -> u64 {
    d.cycles.iter().fold(1u64, |acc, c| acc.lcm(&(c.len() as u64)))
}

/// `log_g` for a primitive `g`.
#[derive(Clone, Debug)]
pub struct DiscreteLogTable {
    generator: FieldElement,
    logs: [Option<u8>; 256],
    powers: [FieldElement; 255],
}

impl DiscreteLogTable {
    pub fn new(generator: FieldElement) -> Result<Self, Error> {
        if !generator.is_primitive() {
            return Err(Error::NotPrimitive(generator));
        }
        let mut logs = [None; 256];
        let mut powers = [FieldElement::ZERO; 255];
        let mut x = FieldElement::ONE;
        for (e, p) in powers.iter_mut().enumerate() {
            *p = x;
            logs[x.to_byte() as usize] = Some(e as u8);
            x *= generator;
        }
        Ok(Self {
            generator,
            logs,
            powers,
        })
    }

    pub fn generator(&self) -> FieldElement {
        self.generator
    }

    /// `e` in `0..255` with `g^e = a`; `None` for zero.
    pub fn log(&self, a: FieldElement) -> Option<u8> {
        self.logs[a.to_byte() as usize]
    }

    pub fn exp(&self, e: u64) -> FieldElement {
        self.powers[(e % 255) as usize]
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CycleFormat {
    /// `alpha^e`, with zero as `0`.
    Alpha,
    /// Two lowercase hex digits per element.
    Hex,
}

fn format_element(a: FieldElement, format: CycleFormat, logs: &DiscreteLogTable) -> String {
    match (format, logs.log(a)) {
        (CycleFormat::Hex, _) => format!("{:02x}", a.to_byte()),
        (CycleFormat::Alpha, None) => "0".to_string(),
        (CycleFormat::Alpha, Some(1)) => "alpha".to_string(),
        (CycleFormat::Alpha, Some(e)) => format!("alpha^{e}"),
    }
}

/// One line per cycle, `[b, f(b), f(f(b)), ..., b]`: the starting element is
/// repeated at the end to close the cycle.
pub fn format_cycles(d: &CycleDecomposition, format: CycleFormat, logs: &DiscreteLogTable) -> String {
    let mut out = String::new();
    for cycle in &d.cycles {
        let items: Vec<String> = cycle
            .iter()
            .chain(cycle.first())
            .map(|&a| format_element(a, format, logs))
            .collect();
        let _ = writeln!(out, "[{}]", items.join(", "));
    }
    out
}

/// Paper-style rendering: cycles listed in power order of `logs.generator()`,
/// elements as powers of it.
pub fn discrete_log_format(table: &PermutationTable, logs: &DiscreteLogTable) -> String {
    let d = CycleDecomposition::in_power_order(table, logs.generator());
    format_cycles(&d, CycleFormat::Alpha, logs)
}

fn primes_up_to(n: usize) -> Vec<usize> {
    let mut sieve = vec![true; n + 1];
    let mut primes = Vec::new();
    for p in 2..=n {
        if sieve[p] {
            primes.push(p);
            let mut m = p * p;
            while m <= n {
                sieve[m] = false;
                m += p;
            }
        }
    }
    primes
}

/// Landau's function: the largest order of an element of the symmetric group
/// on `n` points.
///
/// `best[m]` is the largest product of coprime prime powers with sum at most
/// `m`; each prime is considered once, largest budget first.
pub fn landau_max_order(n: usize) -> Result<BigUint, Error> {
    if !(1..=256).contains(&n) {
        return Err(Error::LandauRange(n));
    }
    let mut best: Vec<BigUint> = vec![BigUint::from(1u32); n + 1];
    for p in primes_up_to(n) {
        for m in (p..=n).rev() {
            let mut q = p;
            while q <= m {
                let candidate = &best[m - q] * BigUint::from(q);
                if candidate > best[m] {
                    best[m] = candidate;
                }
                q *= p;
            }
        }
    }
    Ok(best[n].clone())
}

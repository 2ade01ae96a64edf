//! Command-line front end. [`run`] parses arguments, writes to the given
//! streams and returns the process exit code: 0 on success, 1 on bad input,
//! 2 when a `verify` check fails.

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::aes_core::{self, CipherVariant};
use crate::error::Error;
use crate::gf256::FieldElement;
use crate::linearized::{self, FieldBasis, SelfDualRule};
use crate::permpoly::PermPolynomial;
use crate::ring::Block;
use crate::sbox_analysis::{self, CycleDecomposition, CycleFormat, DiscreteLogTable};
use crate::verify::{self, CheckResult, ALPHA};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_VERIFY: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "rijndael-poly", version, about = "AES as polynomial arithmetic over GF(256)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Encrypt one 16-byte block
    Encrypt(CipherArgs),
    /// Decrypt one 16-byte block
    Decrypt(CipherArgs),
    /// Print a derived polynomial or coefficient vector
    Derive {
        #[arg(value_enum)]
        target: DeriveTarget,
        #[arg(long, value_enum, default_value_t = PolyFormat::Text)]
        format: PolyFormat,
        /// Basis used for the lambda computation
        #[arg(long, value_enum, default_value_t = BasisChoice::Normal)]
        basis: BasisChoice,
    },
    /// Permutation analysis of the S-box
    Analyze {
        #[arg(value_enum)]
        target: AnalyzeTarget,
        #[arg(long, value_enum, default_value_t = CycleFormatArg::Alpha)]
        format: CycleFormatArg,
        /// Symmetric-group size for `landau`
        #[arg(long, default_value_t = 256)]
        n: usize,
    },
    /// Normal and dual basis searches
    Basis {
        #[arg(value_enum)]
        target: BasisTarget,
        /// Normal-basis generator for `dual`
        #[arg(long, default_value = "0x21")]
        generator: String,
    },
    /// Recompute published constants and cipher vectors
    Verify {
        #[arg(value_enum)]
        target: VerifyTarget,
        #[arg(long, default_value_t = verify::DEFAULT_SEED)]
        seed: u64,
        /// Random differential cases per key size
        #[arg(long, default_value_t = verify::DEFAULT_RANDOM_CASES)]
        count: usize,
    },
}

#[derive(Args, Debug)]
struct CipherArgs {
    /// aes128, aes192 or aes256; inferred from the key length when omitted
    #[arg(long)]
    variant: Option<String>,
    /// 32, 48 or 64 hex digits
    #[arg(long)]
    key: String,
    /// 32 hex digits
    #[arg(long)]
    block: String,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum DeriveTarget {
    SboxPoly,
    InvSboxPoly,
    Lambda,
    LInv,
    Rho,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum PolyFormat {
    /// `(z^2+1)·u^254 + ...`
    Text,
    /// Coefficients as powers of z^5+1
    Alpha,
    /// 256 hex pairs, constant term first
    Hex,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum BasisChoice {
    Polynomial,
    Normal,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum AnalyzeTarget {
    Cycles,
    Order,
    Landau,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum CycleFormatArg {
    Alpha,
    Hex,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum BasisTarget {
    FirstPrimitiveNormal,
    Dual,
    SelfDualSearch,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum VerifyTarget {
    All,
    Vectors,
    PaperConstants,
}

/// Runs one invocation. `args` includes the program name.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{e}");
                    EXIT_DOMAIN
                }
            };
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_DOMAIN
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32, Error> {
    let text = match command {
        Command::Encrypt(args) => cipher(&args, true)?,
        Command::Decrypt(args) => cipher(&args, false)?,
        Command::Derive { target, format, basis } => derive(target, format, basis)?,
        Command::Analyze { target, format, n } => analyze(target, format, n)?,
        Command::Basis { target, generator } => basis(target, &generator)?,
        Command::Verify { target, seed, count } => {
            let checks = match target {
                VerifyTarget::All => verify::all_checks(seed, count),
                VerifyTarget::Vectors => verify::vector_checks(seed, count),
                VerifyTarget::PaperConstants => verify::paper_constant_checks(),
            };
            return Ok(report(&checks, out));
        }
    };
    write_out(out, &text);
    Ok(EXIT_OK)
}

fn write_out(out: &mut dyn Write, text: &str) {
    let _ = out.write_all(text.as_bytes());
    if !text.ends_with('\n') {
        let _ = out.write_all(b"\n");
    }
}

fn report(checks: &[CheckResult], out: &mut dyn Write) -> i32 {
    let failed = checks.iter().filter(|c| !c.passed).count();
    for c in checks {
        let _ = writeln!(out, "{}", c.line());
    }
    let _ = writeln!(out, "{} checks, {} failed", checks.len(), failed);
    if failed == 0 {
        EXIT_OK
    } else {
        EXIT_VERIFY
    }
}

fn cipher(args: &CipherArgs, forward: bool) -> Result<String, Error> {
    let key = crate::decode_hex(&args.key)?;
    let block: Block = args.block.parse()?;
    let variant = match &args.variant {
        Some(v) => v.parse()?,
        None => CipherVariant::from_key_len(key.len())?,
    };
    let schedule = aes_core::expand_key(&key, variant)?;
    let result = if forward {
        aes_core::encrypt_block(&block, &schedule)
    } else {
        aes_core::decrypt_block(&block, &schedule)
    };
    Ok(result.to_hex())
}

fn alpha_logs() -> DiscreteLogTable {
    DiscreteLogTable::new(ALPHA).expect("z^5+1 is primitive")
}

fn render_poly(p: &PermPolynomial, format: PolyFormat) -> String {
    match format {
        PolyFormat::Text => p.to_string(),
        PolyFormat::Hex => p.to_hex(),
        PolyFormat::Alpha => {
            let logs = alpha_logs();
            p.to_string_with(|c| match logs.log(c) {
                Some(0) => "1".to_string(),
                Some(1) => "alpha".to_string(),
                Some(e) => format!("alpha^{e}"),
                None => "0".to_string(),
            })
        }
    }
}

fn derive(target: DeriveTarget, format: PolyFormat, basis: BasisChoice) -> Result<String, Error> {
    Ok(match target {
        DeriveTarget::SboxPoly => render_poly(aes_core::sbox_polynomial(), format),
        DeriveTarget::InvSboxPoly => render_poly(aes_core::inv_sbox_polynomial(), format),
        DeriveTarget::LInv => render_poly(&linearized::l_inv_poly().to_perm_polynomial(), format),
        DeriveTarget::Rho => render_poly(&linearized::affine_rho(), format),
        DeriveTarget::Lambda => {
            let basis = match basis {
                BasisChoice::Polynomial => FieldBasis::polynomial(),
                BasisChoice::Normal => FieldBasis::normal(ALPHA)?,
            };
            let poly = linearized::linearize_fn(linearized::l_map, &basis)?;
            poly.lambdas()
                .iter()
                .enumerate()
                .map(|(i, l)| format!("lambda_{i} = {l}\n"))
                .collect()
        }
    })
}

fn analyze(target: AnalyzeTarget, format: CycleFormatArg, n: usize) -> Result<String, Error> {
    let table = aes_core::sbox_table();
    Ok(match target {
        AnalyzeTarget::Cycles => {
            let logs = alpha_logs();
            let d = match format {
                CycleFormatArg::Alpha => CycleDecomposition::in_power_order(table, ALPHA),
                CycleFormatArg::Hex => CycleDecomposition::new(table),
            };
            let fmt = match format {
                CycleFormatArg::Alpha => CycleFormat::Alpha,
                CycleFormatArg::Hex => CycleFormat::Hex,
            };
            let lengths: Vec<String> = d.lengths().iter().map(usize::to_string).collect();
            format!(
                "{}lengths: {}\norder: {}\n",
                sbox_analysis::format_cycles(&d, fmt, &logs),
                lengths.join(" "),
                d.order()
            )
        }
        AnalyzeTarget::Order => CycleDecomposition::new(table).order().to_string(),
        AnalyzeTarget::Landau => sbox_analysis::landau_max_order(n)?.to_string(),
    })
}

fn describe(a: FieldElement) -> String {
    format!("{} {}", a.to_hex_string(), a)
}

fn basis(target: BasisTarget, generator: &str) -> Result<String, Error> {
    Ok(match target {
        BasisTarget::FirstPrimitiveNormal => describe(linearized::find_first_primitive_normal()),
        BasisTarget::Dual => {
            let g: FieldElement = generator.parse()?;
            let basis = FieldBasis::normal(g)?;
            let dual = basis.dual();
            let ab = basis.frobenius_matrix().mul(&dual.dual_frobenius_matrix());
            format!(
                "generator: {}\ndual generator: {}\nbasis:\n{}dual basis:\n{}S:\n{}AB = I: {}\n",
                describe(g),
                describe(dual.elements()[0]),
                basis,
                dual,
                basis.change_of_basis(),
                ab.is_identity()
            )
        }
        BasisTarget::SelfDualSearch => {
            let show = |v: Vec<FieldElement>| {
                if v.is_empty() {
                    "none".to_string()
                } else {
                    v.iter().map(|a| a.to_hex_string()).collect::<Vec<_>>().join(" ")
                }
            };
            let mut s = String::new();
            for (label, rule, primitive) in [
                ("primitive normal, dual generator equal", SelfDualRule::Exact, true),
                ("primitive normal, dual generator conjugate", SelfDualRule::Orbit, true),
                ("any normal, dual generator equal", SelfDualRule::Exact, false),
                ("any normal, dual generator conjugate", SelfDualRule::Orbit, false),
            ] {
                s.push_str(&format!("{label}: {}\n", show(linearized::self_dual_normal_generators(rule, primitive))));
            }
            s
        }
    })
}

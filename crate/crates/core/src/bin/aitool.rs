use std::collections::BTreeSet;
use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use algebraic_immunity::annihilator::DEFAULT_WORK_BUDGET;
use algebraic_immunity::bounds::Symmetry;
use algebraic_immunity::cli::{
    cmd_analyze, cmd_certify, cmd_construct, cmd_scan, exit_code, parse_function, AnalyzeOptions,
    CertifyMethod, CertifyRequest, Check, ErrorReport, ExactAi, Family, FunctionInput, InputFormat,
    OutputFormat, Report, ScanMode, ScanOptions, EXIT_INVALID, EXIT_SUCCESS,
};
use algebraic_immunity::families::TailParity;
use algebraic_immunity::{AffineForm, AnfPolynomial, BooleanFunction, Error, Result};

#[derive(Parser)]
#[command(name = "aitool", version, about = "Algebraic immunity analysis of Boolean functions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Cryptographic profile, exact AI and lower-bound certificates.
    Analyze {
        #[command(flatten)]
        input: InputArgs,
        /// Require the exact AI; with a value, search annihilators up to that degree only.
        #[arg(long, num_args = 0..=1, require_equals = true, value_name = "MAX_DEGREE")]
        exact_ai: Option<Option<usize>>,
        /// Comma-separated certificates to attach (thm2, cor4, coverage).
        #[arg(long, value_delimiter = ',')]
        certify: Option<Vec<AnalyzeMethodArg>>,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Build a member of one of the function families.
    Construct {
        #[arg(value_enum)]
        family: FamilyArg,
        #[arg(long)]
        n: usize,
        /// Degrees of the elementary symmetric polynomials (sigma-sum).
        #[arg(long, value_delimiter = ',')]
        k: Vec<usize>,
        /// Family parameter i (example2).
        #[arg(long)]
        i: Option<usize>,
        /// Tail parity (corollary3).
        #[arg(long, value_enum)]
        parity: Option<ParityArg>,
        /// Values below the tail as a 0/1 string (corollary3).
        #[arg(long, default_value = "")]
        low: String,
        /// Hex orbit representatives moved into the support (orbit-swap).
        #[arg(long, value_delimiter = ',')]
        h: Vec<String>,
        /// Hex orbit representatives moved out of the support (orbit-swap).
        #[arg(long, value_delimiter = ',')]
        h_prime: Vec<String>,
        /// Encoding of the emitted function.
        #[arg(long, value_enum, default_value = "hex")]
        emit: FormatArg,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Emit a single certificate.
    Certify {
        #[arg(value_enum)]
        method: CertifyArg,
        #[command(flatten)]
        input: InputArgs,
        /// Affine form for cor1, e.g. "x1 + x2 + 1".
        #[arg(long)]
        form: Option<String>,
        /// |H| for cor5.
        #[arg(long)]
        h_size: Option<u64>,
        /// Subspace family reduction for coverage (default: detected).
        #[arg(long, value_enum)]
        symmetry: Option<SymmetryArg>,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Run invariant checks over a population of functions.
    Scan {
        #[arg(value_enum)]
        mode: ScanModeArg,
        #[arg(long)]
        n: usize,
        /// Comma-separated checks (default: all that apply).
        #[arg(long, value_delimiter = ',')]
        check: Vec<CheckArg>,
        /// Sample size for sampled modes.
        #[arg(long, default_value_t = 1000)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        common: CommonArgs,
    },
}

#[derive(Args)]
struct InputArgs {
    /// Function payload, `@path` to read a file, or `-` for stdin.
    input: String,
    #[arg(long, value_enum, default_value = "hex")]
    format: FormatArg,
    /// Number of variables (required for ANF input).
    #[arg(long)]
    n: Option<usize>,
}

#[derive(Args)]
struct CommonArgs {
    /// Work budget for exact computations.
    #[arg(long, default_value_t = DEFAULT_WORK_BUDGET)]
    budget: u64,
    #[arg(long, value_enum, default_value = "json")]
    output: OutputArg,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    #[value(alias = "HEX_TABLE")]
    Hex,
    #[value(alias = "ANF_EXPR")]
    Anf,
    #[value(alias = "VALUE_VECTOR")]
    Vector,
    #[value(alias = "ORBIT_FILE")]
    Orbits,
}

impl From<FormatArg> for InputFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Hex => InputFormat::HexTable,
            FormatArg::Anf => InputFormat::AnfExpr,
            FormatArg::Vector => InputFormat::ValueVector,
            FormatArg::Orbits => InputFormat::OrbitFile,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputArg {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum AnalyzeMethodArg {
    Thm2,
    Cor4,
    Coverage,
}

#[derive(Clone, Copy, ValueEnum)]
enum CertifyArg {
    Thm2,
    Cor1,
    Cor4,
    Cor5,
    Coverage,
}

#[derive(Clone, Copy, ValueEnum)]
enum SymmetryArg {
    Generic,
    Symmetric,
    Rotation,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Majority,
    SigmaSum,
    Example2,
    Corollary3,
    OrbitSwap,
    EvenBalanced,
}

#[derive(Clone, Copy, ValueEnum)]
enum ParityArg {
    Odd,
    Even,
}

#[derive(Clone, Copy, ValueEnum)]
enum ScanModeArg {
    ExhaustiveN,
    SymmetricN,
    RsbfN,
    Random,
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckArg {
    AiOracle,
    AiUpper,
    WeightWindow,
    NlBound,
    CertSound,
    Cor4Sound,
    RestrictedWindow,
}

impl From<CheckArg> for Check {
    fn from(c: CheckArg) -> Self {
        match c {
            CheckArg::AiOracle => Check::AiOracle,
            CheckArg::AiUpper => Check::AiUpper,
            CheckArg::WeightWindow => Check::WeightWindow,
            CheckArg::NlBound => Check::NlBound,
            CheckArg::CertSound => Check::CertSound,
            CheckArg::Cor4Sound => Check::Cor4Sound,
            CheckArg::RestrictedWindow => Check::RestrictedWindow,
        }
    }
}

fn output_format(o: OutputArg) -> OutputFormat {
    match o {
        OutputArg::Json => OutputFormat::Json,
        OutputArg::Text => OutputFormat::Text,
    }
}

fn read_payload(arg: &str) -> Result<String> {
    let io_error = |e: std::io::Error| Error::InvalidParameter(format!("cannot read input: {e}"));
    if arg == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(io_error)?;
        Ok(s)
    } else if let Some(path) = arg.strip_prefix('@') {
        std::fs::read_to_string(path).map_err(io_error)
    } else {
        Ok(arg.to_string())
    }
}

fn load(input: &InputArgs) -> Result<BooleanFunction> {
    let payload = read_payload(&input.input)?;
    parse_function(&FunctionInput::new(input.format.into(), payload, input.n))
}

fn parse_bits(text: &str) -> Result<Vec<bool>> {
    text.chars()
        .enumerate()
        .map(|(i, c)| match c {
            '0' => Ok(false),
            '1' => Ok(true),
            _ => Err(Error::InvalidParameter(format!("bit {i} of --low is {c:?}"))),
        })
        .collect()
}

fn parse_reps(reps: &[String]) -> Result<Vec<u32>> {
    reps.iter()
        .map(|r| {
            u32::from_str_radix(r.trim_start_matches("0x"), 16)
                .map_err(|_| Error::InvalidParameter(format!("invalid hex representative {r:?}")))
        })
        .collect()
}

fn run(command: Command) -> Result<(String, i32)> {
    match command {
        Command::Analyze {
            input,
            exact_ai,
            certify,
            common,
        } => {
            let f = load(&input)?;
            let options = AnalyzeOptions {
                exact_ai: match exact_ai {
                    None => ExactAi::BestEffort,
                    Some(max_degree) => ExactAi::Required { max_degree },
                },
                certify: certify.map(|list| {
                    list.into_iter()
                        .map(|m| match m {
                            AnalyzeMethodArg::Thm2 => CertifyMethod::Theorem2,
                            AnalyzeMethodArg::Cor4 => CertifyMethod::Corollary4,
                            AnalyzeMethodArg::Coverage => CertifyMethod::Coverage,
                        })
                        .collect()
                }),
                budget: common.budget,
            };
            let report = cmd_analyze(&f, &options)?;
            Ok((report.render(output_format(common.output)), EXIT_SUCCESS))
        }
        Command::Construct {
            family,
            n,
            k,
            i,
            parity,
            low,
            h,
            h_prime,
            emit,
            common,
        } => {
            let missing = |flag: &str| Error::InvalidParameter(format!("this family needs --{flag}"));
            let family = match family {
                FamilyArg::Majority => Family::Majority { n },
                FamilyArg::SigmaSum => Family::SigmaSum {
                    n,
                    degrees: k.into_iter().collect::<BTreeSet<_>>(),
                },
                FamilyArg::Example2 => Family::Example2 {
                    n,
                    i: i.ok_or_else(|| missing("i"))?,
                },
                FamilyArg::Corollary3 => Family::Corollary3 {
                    n,
                    parity: match parity.ok_or_else(|| missing("parity"))? {
                        ParityArg::Odd => TailParity::OddWeights,
                        ParityArg::Even => TailParity::EvenWeights,
                    },
                    low: parse_bits(&low)?,
                },
                FamilyArg::OrbitSwap => Family::OrbitSwap {
                    n,
                    h: parse_reps(&h)?,
                    h_prime: parse_reps(&h_prime)?,
                },
                FamilyArg::EvenBalanced => Family::EvenBalanced { n },
            };
            let c = cmd_construct(&family, emit.into(), common.budget)?;
            Ok((c.render(output_format(common.output)), EXIT_SUCCESS))
        }
        Command::Certify {
            method,
            input,
            form,
            h_size,
            symmetry,
            common,
        } => {
            let f = load(&input)?;
            let request = match method {
                CertifyArg::Thm2 => CertifyRequest::Theorem2,
                CertifyArg::Cor1 => {
                    let text = form.ok_or_else(|| Error::InvalidParameter("cor1 needs --form".into()))?;
                    CertifyRequest::Corollary1 {
                        form: AffineForm::from_anf(&AnfPolynomial::parse(&text, f.n())?)?,
                    }
                }
                CertifyArg::Cor4 => CertifyRequest::Corollary4,
                CertifyArg::Cor5 => CertifyRequest::Corollary5 {
                    h_size: h_size.ok_or_else(|| Error::InvalidParameter("cor5 needs --h-size".into()))?,
                },
                CertifyArg::Coverage => CertifyRequest::Coverage {
                    symmetry: symmetry.map(|s| match s {
                        SymmetryArg::Generic => Symmetry::Generic,
                        SymmetryArg::Symmetric => Symmetry::Symmetric,
                        SymmetryArg::Rotation => Symmetry::Rotation,
                    }),
                },
            };
            let report = cmd_certify(&f, &request, common.budget)?;
            Ok((report.render(output_format(common.output)), EXIT_SUCCESS))
        }
        Command::Scan {
            mode,
            n,
            check,
            count,
            seed,
            common,
        } => {
            let options = ScanOptions {
                mode: match mode {
                    ScanModeArg::ExhaustiveN => ScanMode::Exhaustive,
                    ScanModeArg::SymmetricN => ScanMode::Symmetric,
                    ScanModeArg::RsbfN => ScanMode::Rsbf,
                    ScanModeArg::Random => ScanMode::Random,
                },
                n,
                checks: check.into_iter().map(Check::from).collect(),
                count,
                seed,
                budget: common.budget,
            };
            let report = cmd_scan(&options)?;
            let code = if report.passed() { EXIT_SUCCESS } else { EXIT_INVALID };
            Ok((report.render(output_format(common.output)), code))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { EXIT_SUCCESS };
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    match run(cli.command) {
        Ok((text, code)) => {
            print!("{text}");
            ExitCode::from(code as u8)
        }
        Err(e) => {
            eprint!("{}", ErrorReport::from(&e).render(OutputFormat::Json));
            ExitCode::from(exit_code(&e) as u8)
        }
    }
}

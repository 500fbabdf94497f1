use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use critlink::commands::{self, CharKind, OracleCheck, QKind};
use critlink::weight::parse_weight;
use critlink::{CliError, Format, RunConfig};
use critlink_core::cartan::FiniteRootSystem;

const WEIGHT_HELP: &str = "Weight, as JSON {\"finite\": [..], \"level\": .., \"delta\": ..} \
or shorthand: a linear expression in w1..wl (w in rank 1), a0..al, L0, d, rho \
with rationals, + - * / and parentheses, e.g. \"w - 2*L0\" or \"1/3*w1 - 3*L0 + d\"";

#[derive(Parser, Debug)]
#[command(name = "critlink", version, about = "Affine weights, blocks and characters at the critical level")]
struct Cli {
    /// Finite type: A1, A2, ..., D4, ...
    #[arg(long, global = true, default_value = "A1")]
    algebra: String,
    #[arg(long, global = true, help = WEIGHT_HELP, allow_hyphen_values = true)]
    weight: Option<String>,
    /// Window/truncation depth in δ.
    #[arg(long, global = true, default_value_t = 3)]
    depth: u32,
    /// Window/truncation height in the finite simple roots.
    #[arg(long, global = true, default_value_t = 4)]
    height: u32,
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Json)]
    format: FormatArg,
    /// Resource cap: block members, or PBW weight-space dimension.
    #[arg(long, global = true)]
    cap: Option<usize>,
    /// Seed for `selftest`.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum FormatArg {
    Json,
    Tsv,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum CharArg {
    Verma,
    Resverma,
    Simple,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum CheckArg {
    Singvec,
    Hom,
    Restricted,
    Subgeneric,
    Chain,
    Matrices,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum QArg {
    Verma,
    Simple,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Criticality, genericity and dominance of a weight.
    Classify,
    /// Members of the block window, with α↑ arrows.
    Block,
    /// Truncated formal character.
    Char {
        #[arg(long, value_enum, default_value_t = CharArg::Verma)]
        kind: CharArg,
    },
    /// Composition multiplicity table (subgeneric class or anti-dominant weight).
    Mult,
    /// PBW singular-vector oracle for A1.
    Oracle {
        #[arg(long, value_enum)]
        check: CheckArg,
        /// δ-multiple for subgeneric/chain; quotient depth for restricted (0 = --depth).
        #[arg(long, default_value_t = 1)]
        n: u32,
    },
    /// Specialized q-character.
    Qchar {
        #[arg(long, value_enum, default_value_t = QArg::Verma)]
        kind: QArg,
        #[arg(long, default_value_t = 10)]
        terms: u32,
    },
    /// Root data of the finite type.
    Roots,
    /// Seeded randomized consistency checks.
    Selftest {
        #[arg(long, default_value_t = 200)]
        cases: usize,
    },
}

fn run(cli: Cli) -> Result<(critlink::Report, Format), CliError> {
    let rs = FiniteRootSystem::from_label(&cli.algebra)?;
    let weight = cli
        .weight
        .as_deref()
        .map(|w| parse_weight(&rs, w).map_err(CliError::Usage))
        .transpose()?;
    let format = match cli.format {
        FormatArg::Json => Format::Json,
        FormatArg::Tsv => Format::Tsv,
    };
    let cfg = RunConfig {
        rs,
        weight,
        depth: cli.depth,
        height: cli.height,
        format,
        cap: cli.cap,
        seed: cli.seed,
    };
    let report = match cli.command {
        Command::Classify => commands::classify_cmd(&cfg)?,
        Command::Block => commands::block_cmd(&cfg)?,
        Command::Char { kind } => commands::char_cmd(
            &cfg,
            match kind {
                CharArg::Verma => CharKind::Verma,
                CharArg::Resverma => CharKind::ResVerma,
                CharArg::Simple => CharKind::Simple,
            },
        )?,
        Command::Mult => commands::mult_cmd(&cfg)?,
        Command::Oracle { check, n } => commands::oracle_cmd(
            &cfg,
            match check {
                CheckArg::Singvec => OracleCheck::Singvec,
                CheckArg::Hom => OracleCheck::Hom,
                CheckArg::Restricted => OracleCheck::Restricted,
                CheckArg::Subgeneric => OracleCheck::Subgeneric,
                CheckArg::Chain => OracleCheck::Chain,
                CheckArg::Matrices => OracleCheck::Matrices,
            },
            n,
        )?,
        Command::Qchar { kind, terms } => commands::qchar_cmd(
            &cfg,
            match kind {
                QArg::Verma => QKind::Verma,
                QArg::Simple => QKind::Simple,
            },
            terms,
        )?,
        Command::Roots => commands::roots_cmd(&cfg)?,
        Command::Selftest { cases } => commands::selftest_cmd(&cfg, cases)?,
    };
    Ok((report, format))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok((report, format)) => {
            print!("{}", report.render(format));
            if !report.ok {
                eprintln!("mismatch detected");
            }
            ExitCode::from(report.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("critlink: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

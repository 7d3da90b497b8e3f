use std::io::IsTerminal;

use clap::error::ErrorKind;
use clap::{Parser, ValueEnum};

use fibered_floer_cli::{execute, CliRequest, Format, EXIT_CHECKS_FAILED};

/// Rank of the perturbed Heegaard Floer homology for the mapping torus of
/// a Dehn-twist word, in a spin^c level of the fiber.
#[derive(Debug, Parser)]
#[command(name = "fibered-floer", version, disable_help_flag = false)]
struct Args {
    /// Genus of the fiber surface (at least 3).
    #[arg(long)]
    genus: u32,

    /// Twist word, e.g. "g^2 d^-3" or "g1^2 g3^-1"; empty for the
    /// identity.
    #[arg(long, default_value = "", allow_hyphen_values = true)]
    word: String,

    /// Spin^c level k (default g-2; other levels only for the empty
    /// word).
    #[arg(long, allow_negative_numbers = true)]
    level: Option<i64>,

    /// Report format.
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,

    /// Include the diagram and the full generator listing.
    #[arg(long)]
    show_generators: bool,

    /// Include the cited unperturbed rank and the difference.
    #[arg(long)]
    compare_unperturbed: bool,

    /// Include the torsion value for every level 0..g-1.
    #[arg(long)]
    show_torsion_levels: bool,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

fn main() {
    std::process::exit(run());
}

fn run() -> i32 {
    let args = match Args::try_parse() {
        Ok(args) => args,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            print!("{e}");
            return 0;
        }
        Err(e) => {
            eprint!("{e}");
            return 1;
        }
    };
    let format = match args.format {
        FormatArg::Text => Format::Text,
        FormatArg::Json => Format::Json,
    };
    let req = CliRequest {
        genus: args.genus,
        word: args.word,
        level: args.level,
        format,
        show_generators: args.show_generators,
        compare_unperturbed: args.compare_unperturbed,
        show_torsion_levels: args.show_torsion_levels,
    };
    match execute(&req) {
        Ok(doc) => {
            match req.format {
                Format::Json => print!("{}", doc.to_json()),
                Format::Text => print!("{}", doc.to_text(use_color())),
            }
            if doc.all_checks_pass() {
                0
            } else {
                eprintln!("error: internal cross-checks failed; see the checks section");
                EXIT_CHECKS_FAILED
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn use_color() -> bool {
    if std::env::var("FIBERED_FLOER_COLOR").is_ok_and(|v| v == "0") {
        return false;
    }
    std::io::stdout().is_terminal()
}

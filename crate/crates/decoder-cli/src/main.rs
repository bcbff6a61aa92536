use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use code_core::{format_vector, parse_vector};
use decoder_cli::{
    analyze, decode, exit_code, predict_weight, verify_exhaustive, BuildOptions, CodeConfig, DecoderError,
    DecoderTables, Received,
};
use decoding_ideals::{Flavor, Variant};

#[derive(Parser)]
#[command(name = "avdecode", version, about = "Decode affine-variety codes with Gröbner-basis locators")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute decoder tables from a code configuration.
    Build {
        #[command(flatten)]
        build: BuildArgs,
        /// Where to write the tables.
        #[arg(long)]
        out: PathBuf,
    },
    /// Decode a syndrome or a received word.
    Decode {
        #[arg(long)]
        tables: PathBuf,
        /// Comma-separated syndrome, e.g. "0,1,1,1,0".
        #[arg(long, conflicts_with = "word", required_unless_present = "word")]
        syndrome: Option<String>,
        /// Comma-separated received word.
        #[arg(long)]
        word: Option<String>,
    },
    /// Decode every correctable error and compare with the oracle.
    Verify {
        #[arg(long)]
        tables: PathBuf,
    },
    /// Report the structure of the ghost-point decoding ideal.
    Analyze {
        #[arg(long)]
        config: PathBuf,
    },
    /// Build tables, check that their text form reads back identically and
    /// verify them.
    Roundtrip {
        #[command(flatten)]
        build: BuildArgs,
    },
}

#[derive(Args)]
struct BuildArgs {
    #[arg(long)]
    config: PathBuf,
    /// Locator flavor: weak or stuffed (default: stuffed for the star ideal, weak otherwise).
    #[arg(long)]
    flavor: Option<Flavor>,
    /// Also compute the error evaluator.
    #[arg(long)]
    evaluator: bool,
    /// Decoding ideal: star, fl or hat (defaults to the configuration, then star).
    #[arg(long)]
    ideal: Option<Variant>,
    /// Order in which the locators solve for the coordinates, e.g. "y,x".
    #[arg(long, value_delimiter = ',')]
    coordinate_order: Option<Vec<String>>,
}

impl BuildArgs {
    fn options(&self) -> BuildOptions {
        BuildOptions {
            flavor: self.flavor,
            evaluator: self.evaluator,
            ideal: self.ideal,
            coordinate_order: self.coordinate_order.clone(),
        }
    }
}

fn read(path: &Path) -> Result<String, DecoderError> {
    fs::read_to_string(path).map_err(|e| DecoderError::Io(format!("{}: {e}", path.display())))
}

fn load_config(path: &Path) -> Result<CodeConfig, DecoderError> {
    let name = path.file_stem().map_or("code".into(), |s| s.to_string_lossy());
    CodeConfig::parse(&read(path)?, &name)
}

fn run(cli: Cli) -> Result<u8, DecoderError> {
    match cli.command {
        Command::Build { build, out } => {
            let tables = DecoderTables::build(&load_config(&build.config)?, &build.options())?;
            fs::write(&out, tables.to_text()).map_err(|e| DecoderError::Io(format!("{}: {e}", out.display())))?;
            let meta = tables.metadata();
            println!(
                "wrote {} ({} locators, basis of {} elements, {:.2} s)",
                out.display(),
                tables.flavor(),
                meta.basis_size,
                meta.groebner_seconds + meta.stuffing_seconds + meta.evaluator_seconds
            );
        }
        Command::Decode { tables, syndrome, word } => {
            let tables = DecoderTables::from_text(&read(&tables)?)?;
            let field = tables.code().field();
            let parse = |text: &str| parse_vector(field, text).map_err(|e| DecoderError::Input(e.to_string()));
            let (input, received) = match (&syndrome, &word) {
                (Some(s), _) => (parse(s)?, true),
                (None, Some(w)) => (parse(w)?, false),
                (None, None) => return Err(DecoderError::Input("give --syndrome or --word".to_string())),
            };
            let result = if received {
                decode(&tables, Received::Syndrome(&input))?
            } else {
                decode(&tables, Received::Word(&input))?
            };
            print!("{}", result.render(&tables));
            if tables.evaluator().is_some() {
                let prediction = predict_weight(&tables, &result.syndrome)?;
                println!(
                    "evaluator: {} errors, values {{{}}}",
                    prediction.weight,
                    format_vector(field, &prediction.values)
                );
            }
        }
        Command::Verify { tables } => {
            let tables = DecoderTables::from_text(&read(&tables)?)?;
            let report = verify_exhaustive(&tables);
            println!("{}", report.summary());
            for m in &report.mismatches {
                println!("mismatch: expected {:?}, got {} {:?}", m.expected.entries(), m.status, m.found);
            }
            if !report.passed() {
                return Ok(exit_code::VERIFICATION_FAILED);
            }
        }
        Command::Analyze { config } => {
            let config = load_config(&config)?;
            print!("{}", analyze(&config)?.render(&config));
        }
        Command::Roundtrip { build } => {
            let tables = DecoderTables::build(&load_config(&build.config)?, &build.options())?;
            let reread = DecoderTables::from_text(&tables.to_text())?;
            if reread != tables {
                println!("tables did not read back identically");
                return Ok(exit_code::VERIFICATION_FAILED);
            }
            let report = verify_exhaustive(&reread);
            println!("{}: {} locators, basis of {} elements", tables.config().name, tables.flavor(), tables.metadata().basis_size);
            println!("round trip: identical");
            println!("verify: {}", report.summary());
            if !report.passed() {
                return Ok(exit_code::VERIFICATION_FAILED);
            }
        }
    }
    Ok(exit_code::OK)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

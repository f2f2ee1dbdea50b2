use std::fs::File;
use std::io::BufWriter;
use std::path::PathBuf;
use std::process::ExitCode;

use acmpts::format::{
    load_configuration, parse_construction, parse_tuple, serialize_configuration, ConstructionConfig,
};
use acmpts::{harness, render};
use acmpts_core::construct::{add_layer, liaison_addition, verify_hf_additivity, verify_layer_additivity, Provenance};
use acmpts_core::hilbert::{delta_from_table, hilbert_table};
use acmpts_core::reisner::reisner_check;
use acmpts_core::star::find_path;
use acmpts_core::{canonicalize, MultiDegree};
use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};

/// ACM checks for finite point sets in products of projective lines.
#[derive(Parser)]
#[command(name = "acmpts", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Star-property verdicts, witnesses and level structure.
    Check {
        file: PathBuf,
        #[arg(long)]
        star_level: Option<usize>,
    },
    /// Multigraded Hilbert function (or its first difference) on a box.
    Hilbert {
        file: PathBuf,
        /// Upper corner, e.g. `3,3,3`.
        #[arg(long = "box")]
        upper: String,
        #[arg(long)]
        delta: bool,
    },
    /// Reisner-criterion verdict on the Stanley–Reisner model.
    Oracle { file: PathBuf },
    /// Liaison addition or layer construction from a config file.
    Construct {
        config: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// A chain of distance-one steps between two points of the set.
    Path {
        file: PathBuf,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        #[arg(long)]
        star_level: Option<usize>,
    },
    /// Cross-validate every (or randomly sampled) subset of a grid.
    Enumerate {
        /// Grid sides, e.g. `2,2,2`.
        #[arg(long)]
        grid: String,
        /// Number of random subsets instead of exhaustive enumeration.
        #[arg(long, requires = "seed")]
        random: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        out: PathBuf,
    },
}

/// Input errors exit with 2, harness assertion failures with 1.
enum Outcome {
    Done,
    AssertionFailed,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(Outcome::Done) => ExitCode::SUCCESS,
        Ok(Outcome::AssertionFailed) => ExitCode::from(1),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<Outcome> {
    match command {
        Command::Check { file, star_level } => {
            let config = load_configuration(&file)?;
            print!("{}", render::check_report(&config, star_level)?);
        }
        Command::Hilbert { file, upper, delta } => {
            let config = load_configuration(&file)?;
            let upper = MultiDegree::new(parse_tuple(&upper)?);
            let table = hilbert_table(&config.set, &upper).map_err(anyhow::Error::msg)?;
            if delta {
                print!("{}", render::delta_report(&delta_from_table(&table))?);
            } else {
                print!("{}", render::hilbert_report(&table)?);
            }
        }
        Command::Oracle { file } => {
            let config = load_configuration(&file)?;
            let report = reisner_check(&config.set).map_err(anyhow::Error::msg)?;
            print!("{}", render::oracle_report(&config, &report));
        }
        Command::Construct { config, out } => {
            let text = std::fs::read_to_string(&config)
                .with_context(|| format!("reading {}", config.display()))?;
            return construct(&text, out);
        }
        Command::Path { file, from, to, star_level } => {
            let config = load_configuration(&file)?;
            let p = config.point_from_raw(&parse_tuple(&from)?)?;
            let q = config.point_from_raw(&parse_tuple(&to)?)?;
            let s = star_level.unwrap_or(config.set.n());
            let path = find_path(&config.set, &p, &q, s).map_err(anyhow::Error::msg)?;
            for u in &path {
                println!("{}", config.display_point(u));
            }
        }
        Command::Enumerate { grid, random, seed, out } => {
            let dims = parse_tuple(&grid)?
                .into_iter()
                .map(|r| u32::try_from(r).context("grid sides must be positive"))
                .collect::<Result<Vec<_>>>()?;
            let report = match (random, seed) {
                (Some(samples), Some(seed)) => harness::enumerate_random(&dims, samples, seed)?,
                _ => harness::enumerate_exhaustive(&dims)?,
            };
            let file = File::create(&out).with_context(|| format!("creating {}", out.display()))?;
            report.write_csv(BufWriter::new(file))?;
            println!("{}", report.summary());
            for r in report.failures().take(10) {
                println!("failed record id={} size={}", r.id, r.size);
            }
            if !report.passed() {
                return Ok(Outcome::AssertionFailed);
            }
        }
    }
    Ok(Outcome::Done)
}

fn construct(text: &str, out: Option<PathBuf>) -> Result<Outcome> {
    let (result, report) = match parse_construction(text)? {
        ConstructionConfig::Liaison { n, summands, forms, check_box } => {
            let input = ConstructionConfig::liaison_input(n, &summands, &forms)?;
            let outcome = liaison_addition(&input).map_err(anyhow::Error::msg)?;
            let upper = match check_box {
                Some(b) => MultiDegree::new(b),
                None => input.default_box(),
            };
            let ok = verify_hf_additivity(&input, &outcome.embedded, &upper).map_err(anyhow::Error::msg)?;
            let mut report = format!("liaison addition: {} points\n", outcome.embedded.len());
            for k in 0..n {
                report += &format!("  from V_{}: {}\n", k + 1, outcome.count(Provenance::Summand(k)));
            }
            report += &format!("  from complete intersection: {}\n", outcome.count(Provenance::Box));
            report += &format!(
                "hf additivity: {} on box {upper}\n",
                if ok { "verified" } else { "FAILED" }
            );
            (outcome.canonical(), report)
        }
        ConstructionConfig::Layer { n, points, direction, position } => {
            if points.iter().any(|p| p.len() != n) {
                bail!("DimensionMismatch: every point needs {n} coordinates");
            }
            let x = canonicalize(&points).map_err(anyhow::Error::msg)?;
            if direction == 0 || direction > n {
                bail!("BadDirection: direction {direction} is not valid for n = {n}");
            }
            let i = direction - 1;
            let z = add_layer(&x, i, position.into()).map_err(anyhow::Error::msg)?;
            let upper = MultiDegree::new(z.dims().iter().map(|&r| i64::from(r)).collect());
            let ok = verify_layer_additivity(&x, i, &upper).map_err(anyhow::Error::msg)?;
            let report = format!(
                "layer in direction {direction}: {} -> {} points\nhf additivity: {} on box {upper}\n",
                x.len(),
                z.len(),
                if ok { "verified" } else { "FAILED" }
            );
            (z, report)
        }
    };
    print!("{report}");
    let json = serialize_configuration(&result);
    match out {
        Some(path) => {
            std::fs::write(&path, json).with_context(|| format!("writing {}", path.display()))?;
            println!("wrote {}", path.display());
        }
        None => print!("{json}"),
    }
    Ok(Outcome::Done)
}

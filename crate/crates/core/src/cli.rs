//! Command-line front end: config ingestion, experiment orchestration,
//! file emission.
//!
//! One master seed drives everything. It places the nodes and seeds the
//! per-run random streams, so a subcommand rerun with the same config and
//! seed rewrites every output file with identical bytes.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::clustering::{decode, FitnessKind, FitnessWeights};
use crate::config::RunConfig;
use crate::error::{Error, Result};
use crate::ga::evolve;
use crate::lifetime::{run_lifetime, LifetimeConfig, Protocol};
use crate::network::generate_deployment;
use crate::oracle::exhaustive_best;
use crate::plot::{cluster_svg, line_chart_svg, Series};
use crate::report::{comparison_csv, lifetime_csv, metrics_csv, summary_json, ComparisonRow, CsvTable};

/// Wireless sensor network clustering simulator.
#[derive(Debug, Parser)]
#[command(name = "wsnga", version, about = "Cluster-head election by genetic search, with a LEACH baseline and round-based lifetime simulation")]
pub struct Cli {
    /// Run configuration JSON; missing sections take their defaults.
    #[arg(long, global = true, value_name = "PATH")]
    pub config: Option<PathBuf>,

    /// Master seed; overrides the deployment section.
    #[arg(long, global = true)]
    pub seed: Option<u64>,

    /// Output directory; overrides the config.
    #[arg(long, global = true, value_name = "DIR")]
    pub out: Option<PathBuf>,

    /// Fitness form: eq2, eq3, or "weights wE,wD,wC".
    #[arg(long, global = true, value_parser = parse_fitness)]
    pub fitness: Option<FitnessKind>,

    /// Lifetime protocol; overrides the config.
    #[arg(long, global = true, value_enum)]
    pub protocol: Option<ProtocolArg>,

    /// Node count; overrides the deployment section.
    #[arg(long, global = true)]
    pub n: Option<usize>,

    /// Generation budget; overrides the ga section.
    #[arg(long, global = true)]
    pub generations: Option<usize>,

    /// Print the effective configuration as JSON and exit.
    #[arg(long, global = true)]
    pub print_config: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ProtocolArg {
    Ga,
    Leach,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a node deployment and export it as JSON.
    Deploy,
    /// Run the genetic search; write a metrics CSV and a cluster SVG.
    Evolve {
        /// Draw member-to-head connection lines in the cluster SVG.
        #[arg(long)]
        links: bool,
    },
    /// Simulate network lifetime; write a round CSV and a summary JSON.
    Lifetime,
    /// Run paired GA and LEACH lifetimes; write a comparison CSV.
    Compare {
        /// Number of seed pairs, consecutive from the effective seed.
        #[arg(long, default_value_t = 5)]
        pairs: u64,
    },
    /// Exhaustively search every head election (small networks only) and
    /// print the optimum.
    Oracle,
    /// Render CSV columns as an SVG line chart.
    Plot {
        /// CSV file to read; the first column is the x axis.
        #[arg(long, value_name = "PATH")]
        input: PathBuf,
        /// Column to draw; repeatable. Defaults to every numeric column
        /// after the first, bit strings excluded.
        #[arg(long = "column", value_name = "NAME")]
        columns: Vec<String>,
        /// Chart title; defaults to the input file stem.
        #[arg(long)]
        title: Option<String>,
    },
}

/// CLI fitness syntax: `eq2`, `eq3`, or `weights wE,wD,wC` (separator
/// after the word may be a space, ':' or '=').
fn parse_fitness(s: &str) -> std::result::Result<FitnessKind, String> {
    let s = s.trim();
    match s {
        "eq2" => return Ok(FitnessKind::Unnormalized),
        "eq3" => return Ok(FitnessKind::Normalized),
        _ => {}
    }
    if let Some(rest) = s.strip_prefix("weights") {
        let rest = rest.trim_start_matches([' ', ':', '=']);
        let parts: Vec<&str> = rest.split(',').map(str::trim).collect();
        if parts.len() == 3 {
            let mut values = [0.0f64; 3];
            for (slot, part) in values.iter_mut().zip(&parts) {
                *slot = part
                    .parse()
                    .map_err(|_| format!("bad weight {part:?} in {s:?}"))?;
            }
            return Ok(FitnessKind::Weighted(FitnessWeights {
                energy: values[0],
                distance: values[1],
                heads: values[2],
            }));
        }
    }
    Err(format!(
        "expected eq2, eq3, or \"weights wE,wD,wC\", got {s:?}"
    ))
}

/// Config file plus flag overrides. Fitness and generation overrides also
/// reach a GA lifetime protocol, so one flag changes what every subcommand
/// optimizes.
fn effective_config(cli: &Cli) -> Result<RunConfig> {
    let mut config = match &cli.config {
        Some(path) => RunConfig::from_path(path)?,
        None => RunConfig::default(),
    };
    if let Some(n) = cli.n {
        config.deployment.node_count = n;
    }
    if let Some(seed) = cli.seed {
        config.deployment.seed = seed;
    }
    if let Some(out) = &cli.out {
        config.output_dir = out.clone();
    }
    if let Some(fitness) = cli.fitness {
        config.ga.fitness = fitness;
    }
    if let Some(generations) = cli.generations {
        config.ga.generations = generations;
    }
    if let Some(protocol) = cli.protocol {
        config.lifetime.protocol = match protocol {
            ProtocolArg::Ga => Protocol::Ga(config.ga),
            ProtocolArg::Leach => Protocol::Leach(config.leach),
        };
    }
    if let Protocol::Ga(params) = &mut config.lifetime.protocol {
        if let Some(fitness) = cli.fitness {
            params.fitness = fitness;
        }
        if let Some(generations) = cli.generations {
            params.generations = generations;
        }
    }
    config.validate()?;
    Ok(config)
}

pub fn run(cli: Cli, stdout: &mut impl Write) -> Result<()> {
    let config = effective_config(&cli)?;
    if cli.print_config {
        stdout.write_all(config.to_json_pretty()?.as_bytes())?;
        return Ok(());
    }
    match cli.command {
        Command::Deploy => cmd_deploy(&config, stdout),
        Command::Evolve { links } => cmd_evolve(&config, links, stdout),
        Command::Lifetime => cmd_lifetime(&config, stdout),
        Command::Compare { pairs } => cmd_compare(&config, pairs, stdout),
        Command::Oracle => cmd_oracle(&config, stdout),
        Command::Plot {
            input,
            columns,
            title,
        } => cmd_plot(&config, &input, &columns, title.as_deref(), stdout),
    }
}

/// Process exit code classes: 2 config trouble, 3 I/O trouble, 4 violated
/// model invariants. Clap's own usage errors keep its conventional 2.
pub fn exit_code(error: &Error) -> u8 {
    match error {
        Error::InvalidConfig(_) | Error::Json(_) => 2,
        Error::Io(_) | Error::Csv(_) => 3,
        _ => 4,
    }
}

fn write_output(dir: &Path, name: &str, contents: &str, stdout: &mut impl Write) -> Result<()> {
    std::fs::create_dir_all(dir)?;
    let path = dir.join(name);
    std::fs::write(&path, contents)?;
    writeln!(stdout, "wrote {}", path.display())?;
    Ok(())
}

fn cmd_deploy(config: &RunConfig, stdout: &mut impl Write) -> Result<()> {
    let deployment = generate_deployment(&config.deployment)?;
    write_output(
        &config.output_dir,
        "deployment.json",
        &deployment.to_json()?,
        stdout,
    )?;
    writeln!(
        stdout,
        "deployed {} nodes, seed {}",
        deployment.node_count(),
        config.deployment.seed
    )?;
    Ok(())
}

fn cmd_evolve(config: &RunConfig, links: bool, stdout: &mut impl Write) -> Result<()> {
    let deployment = generate_deployment(&config.deployment)?;
    let outcome = evolve(&deployment, &config.radio, &config.ga, config.deployment.seed)?;
    write_output(
        &config.output_dir,
        "metrics.csv",
        &metrics_csv(&outcome.history)?,
        stdout,
    )?;
    let assignment = decode(&outcome.best.chromosome, &deployment)?;
    write_output(
        &config.output_dir,
        "clusters.svg",
        &cluster_svg(&deployment, &assignment, links),
        stdout,
    )?;
    let b = &outcome.best.breakdown;
    writeln!(
        stdout,
        "best F {} with TCH {} RCSD {} E {}",
        b.fitness, b.head_count, b.rcsd, b.transfer_energy
    )?;
    Ok(())
}

fn cmd_lifetime(config: &RunConfig, stdout: &mut impl Write) -> Result<()> {
    let deployment = generate_deployment(&config.deployment)?;
    let outcome = run_lifetime(
        &deployment,
        &config.radio,
        &config.lifetime,
        config.deployment.seed,
    )?;
    let protocol = config.lifetime.protocol.name();
    write_output(
        &config.output_dir,
        &format!("lifetime_{protocol}.csv"),
        &lifetime_csv(&outcome.records)?,
        stdout,
    )?;
    let summary = outcome.summary();
    write_output(
        &config.output_dir,
        &format!("summary_{protocol}.json"),
        &summary_json(&summary)?,
        stdout,
    )?;
    let death = |r: Option<u64>| r.map_or("none".to_string(), |v| v.to_string());
    writeln!(
        stdout,
        "{protocol}: first death {} last death {} energy {} J",
        death(summary.first_death_round),
        death(summary.last_death_round),
        summary.total_energy
    )?;
    Ok(())
}

fn cmd_compare(config: &RunConfig, pairs: u64, stdout: &mut impl Write) -> Result<()> {
    if pairs == 0 {
        return Err(Error::InvalidConfig("compare needs at least one pair".into()));
    }
    let mut rows = Vec::new();
    for offset in 0..pairs {
        let seed = config.deployment.seed + offset;
        let mut network = config.deployment.clone();
        network.seed = seed;
        let deployment = generate_deployment(&network)?;
        for protocol in [Protocol::Ga(config.ga), Protocol::Leach(config.leach)] {
            let lifetime = LifetimeConfig {
                protocol,
                ..config.lifetime
            };
            let summary = run_lifetime(&deployment, &config.radio, &lifetime, seed)?.summary();
            rows.push(ComparisonRow {
                seed,
                protocol: protocol.name(),
                summary,
            });
        }
    }
    write_output(
        &config.output_dir,
        "comparison.csv",
        &comparison_csv(&rows)?,
        stdout,
    )?;
    for pair in rows.chunks_exact(2) {
        writeln!(
            stdout,
            "seed {}: {} {} J vs {} {} J",
            pair[0].seed,
            pair[0].protocol,
            pair[0].summary.total_energy,
            pair[1].protocol,
            pair[1].summary.total_energy
        )?;
    }
    Ok(())
}

fn cmd_oracle(config: &RunConfig, stdout: &mut impl Write) -> Result<()> {
    let deployment = generate_deployment(&config.deployment)?;
    let (chromosome, b) = exhaustive_best(&deployment, &config.radio, &config.ga.fitness)?;
    writeln!(stdout, "chromosome {chromosome}")?;
    writeln!(stdout, "F {}", b.fitness)?;
    writeln!(
        stdout,
        "TCH {} RCSD {} TD {} E {}",
        b.head_count, b.rcsd, b.total_distance, b.transfer_energy
    )?;
    Ok(())
}

fn cmd_plot(
    config: &RunConfig,
    input: &Path,
    columns: &[String],
    title: Option<&str>,
    stdout: &mut impl Write,
) -> Result<()> {
    let text = std::fs::read_to_string(input)?;
    let table = CsvTable::parse(&text)?;
    let x_name = table
        .headers
        .first()
        .ok_or_else(|| Error::InvalidConfig("empty CSV header".into()))?
        .clone();
    let x = &table.columns[0];

    let wanted: Vec<String> = if columns.is_empty() {
        table
            .headers
            .iter()
            .skip(1)
            .filter(|h| !h.contains("chromosome"))
            .cloned()
            .collect()
    } else {
        columns.to_vec()
    };
    let mut series = Vec::new();
    for name in &wanted {
        let column = table
            .column(name)
            .ok_or_else(|| Error::InvalidConfig(format!("no column {name:?} in {}", input.display())))?;
        let points: Vec<(f64, f64)> = x
            .iter()
            .zip(column)
            .filter_map(|(xv, yv)| Some(((*xv)?, (*yv)?)))
            .collect();
        series.push(Series {
            name: name.clone(),
            points,
        });
    }
    let stem = input
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "plot".into());
    let svg = line_chart_svg(title.unwrap_or(&stem), &x_name, &series)?;
    write_output(&config.output_dir, &format!("{stem}.svg"), &svg, stdout)?;
    Ok(())
}

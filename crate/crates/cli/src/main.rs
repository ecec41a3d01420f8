//! `sombor` — generate benzenoid-type graphs, evaluate the generalized index
//! family, tabulate closed forms and run seeded Monte-Carlo estimates.
//!
//! Exit codes: 0 success, 2 domain or usage error, 3 I/O error.

mod output;

use std::ops::RangeInclusive;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use sombor_core::closed_forms::{
    average_over_chains, chain_extremes, expected_chain_variant, family_index_census,
    family_index_paper, resolve_chain_shift, FamilyParams,
};
use sombor_core::generators::{
    build_chain, build_graphene, build_nanocone, incremental_census, DEFAULT_ENUMERATION_CAP,
};
use sombor_core::random_experiments::{
    chain_comparison_series, exact_expectation_enumeration_capped, mc_expectation,
};
use sombor_core::sombor::ratio_to_f64;
use sombor_core::{
    sombor_from_census, sombor_general, ChainFamily, ChainProbabilities, ChainSpec, IndexVariant,
    MolecularGraph,
};

use output::{Cell, OutputArgs, Table};

/// Environment variable overriding the exhaustive-enumeration cap on `n`.
const ENUM_CAP_ENV: &str = "SOMBOR_ENUM_CAP";

/// The 15 coronoid parameter triples of the published reference table.
const TABLE1_ROWS: [(u64, u64, u64); 15] = [
    (3, 1, 1),
    (3, 1, 2),
    (3, 1, 3),
    (4, 2, 4),
    (4, 2, 5),
    (4, 2, 6),
    (5, 2, 1),
    (5, 3, 2),
    (5, 4, 3),
    (6, 4, 4),
    (6, 4, 5),
    (6, 4, 6),
    (9, 5, 7),
    (9, 6, 8),
    (9, 7, 9),
];

#[derive(Debug)]
pub enum CliError {
    Domain(String),
    Io(String),
}

impl From<sombor_core::Error> for CliError {
    fn from(e: sombor_core::Error) -> Self {
        CliError::Domain(e.to_string())
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Domain(msg) | CliError::Io(msg) => f.write_str(msg),
        }
    }
}

#[derive(Parser)]
#[command(name = "sombor", version, about = "Benzenoid-type graphs and the generalized Sombor index family")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a graph and emit its canonical JSON.
    Generate(GenerateArgs),
    /// Evaluate index variants of a graph file, a chain spec, or a family member.
    Index(IndexArgs),
    /// Closed-form expected values over the random chain models.
    Expect(ExpectArgs),
    /// Extremal index values over all chains of a length.
    Extremes(ExtremesArgs),
    /// Uniform averages over all chains of a length.
    Average(AverageArgs),
    /// Seeded Monte-Carlo estimate of an expected chain index.
    Mc(McArgs),
    /// Reproduce the published coronoid reference table.
    Table1(Table1Args),
    /// Plot-ready series: chain-family comparison or lattice families.
    Series(SeriesArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    #[value(alias = "hexagonal")]
    Hex,
    #[value(alias = "phenylene")]
    Phen,
}

impl From<FamilyArg> for ChainFamily {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::Hex => ChainFamily::Hexagonal,
            FamilyArg::Phen => ChainFamily::Phenylene,
        }
    }
}

#[derive(Debug, Clone, Args)]
struct VariantFlags {
    /// Evaluate the plain index (shift 0).
    #[arg(long)]
    plain: bool,
    /// Evaluate the reduced index (shift 1).
    #[arg(long)]
    reduced: bool,
    /// Evaluate the average-degree index (shift d̄).
    #[arg(long)]
    average: bool,
    /// Evaluate a custom shift.
    #[arg(long, value_name = "A")]
    custom: Option<f64>,
}

impl VariantFlags {
    /// Requested variants in stable order; all three named variants if none given.
    fn collect(&self) -> Vec<IndexVariant> {
        let mut variants = Vec::new();
        if self.plain {
            variants.push(IndexVariant::Plain);
        }
        if self.reduced {
            variants.push(IndexVariant::Reduced);
        }
        if self.average {
            variants.push(IndexVariant::Average);
        }
        if let Some(a) = self.custom {
            variants.push(IndexVariant::Custom(a));
        }
        if variants.is_empty() {
            variants = vec![IndexVariant::Plain, IndexVariant::Reduced, IndexVariant::Average];
        }
        variants
    }
}

#[derive(Args)]
struct GenerateArgs {
    /// Chain spec like `hex:5:212` / `phen:3:1`, or `graphene` / `nanocone`.
    target: String,
    /// Family parameter n (rows of hexagons for graphene, layers for nanocone).
    #[arg(short = 'n', long)]
    n: Option<u64>,
    /// Family parameter k (row count for graphene, apex size for nanocone).
    #[arg(short = 'k', long)]
    k: Option<u64>,
    /// Relax the family parameter domain.
    #[arg(long)]
    override_domain: bool,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct IndexArgs {
    /// Chain spec like `hex:5:212`, or `graphene` / `coronoid` / `nanocone`.
    target: Option<String>,
    /// Evaluate a graph JSON file instead of a named family.
    #[arg(long, value_name = "FILE", conflicts_with = "target")]
    graph: Option<std::path::PathBuf>,
    #[arg(short = 'n', long)]
    n: Option<u64>,
    #[arg(short = 'k', long)]
    k: Option<u64>,
    #[arg(short = 'p', long)]
    p: Option<u64>,
    #[arg(short = 'r', long)]
    r: Option<u64>,
    #[command(flatten)]
    variants: VariantFlags,
    /// For coronoids, emit only the census-route rows.
    #[arg(long, conflicts_with = "paper_only")]
    census_only: bool,
    /// For coronoids, emit only the published-formula rows.
    #[arg(long)]
    paper_only: bool,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct ExpectArgs {
    /// Chain family.
    #[arg(long, value_enum)]
    family: FamilyArg,
    /// Length or inclusive range, e.g. `12` or `2..20`.
    #[arg(short = 'n', long, value_name = "N|A..B")]
    n: String,
    #[arg(long, default_value_t = 0.0)]
    p1: f64,
    #[arg(long, default_value_t = 0.0)]
    p2: f64,
    /// Compute by exhaustive weighted enumeration instead of the closed form.
    #[arg(long)]
    enumerate: bool,
    #[command(flatten)]
    variants: VariantFlags,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct ExtremesArgs {
    #[arg(long, value_enum)]
    family: FamilyArg,
    #[arg(short = 'n', long, value_name = "N|A..B")]
    n: String,
    #[command(flatten)]
    variants: VariantFlags,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct AverageArgs {
    #[arg(long, value_enum)]
    family: FamilyArg,
    #[arg(short = 'n', long, value_name = "N|A..B")]
    n: String,
    #[command(flatten)]
    variants: VariantFlags,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct McArgs {
    #[arg(long, value_enum)]
    family: FamilyArg,
    #[arg(short = 'n', long)]
    n: u64,
    #[arg(long, default_value_t = 0.0)]
    p1: f64,
    #[arg(long, default_value_t = 0.0)]
    p2: f64,
    #[arg(long, default_value_t = 10_000)]
    samples: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 1)]
    workers: usize,
    #[command(flatten)]
    variants: VariantFlags,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct Table1Args {
    /// Add census-route value columns next to the published ones.
    #[arg(long)]
    census: bool,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SeriesKind {
    /// Expected values and gaps for both chain families.
    ChainsCompare,
    /// Index values over a parameter range of a lattice family.
    Families,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum LatticeFamilyArg {
    Graphene,
    Nanocone,
}

#[derive(Args)]
struct SeriesArgs {
    kind: SeriesKind,
    /// Length or inclusive range, e.g. `2..20`.
    #[arg(short = 'n', long, value_name = "N|A..B")]
    n: String,
    #[arg(long, default_value_t = 1.0 / 3.0)]
    p1: f64,
    #[arg(long, default_value_t = 1.0 / 3.0)]
    p2: f64,
    /// Lattice family for `families`.
    #[arg(long, value_enum)]
    family: Option<LatticeFamilyArg>,
    /// Family parameter k: an integer, or `n` to track the row count.
    #[arg(short = 'k', long)]
    k: Option<String>,
    #[command(flatten)]
    output: OutputArgs,
}

fn parse_n_range(text: &str) -> Result<RangeInclusive<u64>, CliError> {
    let parse_bound = |s: &str| {
        s.trim()
            .parse::<u64>()
            .map_err(|_| CliError::Domain(format!("invalid length {s:?}; expected an integer")))
    };
    if let Some((lo, hi)) = text.split_once("..") {
        let lo = parse_bound(lo)?;
        let hi = parse_bound(hi.strip_prefix('=').unwrap_or(hi))?;
        if lo > hi {
            return Err(CliError::Domain(format!("empty length range {text:?}")));
        }
        Ok(lo..=hi)
    } else {
        let n = parse_bound(text)?;
        Ok(n..=n)
    }
}

fn enumeration_cap() -> u64 {
    std::env::var(ENUM_CAP_ENV)
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_ENUMERATION_CAP)
}

fn required(value: Option<u64>, flag: &str, target: &str) -> Result<u64, CliError> {
    value.ok_or_else(|| CliError::Domain(format!("{target} requires {flag}")))
}

fn cmd_generate(args: GenerateArgs) -> Result<(), CliError> {
    let graph = match args.target.as_str() {
        "graphene" => build_graphene(
            required(args.n, "--n", "graphene")?,
            required(args.k, "--k", "graphene")?,
            args.override_domain,
        )?,
        "nanocone" => build_nanocone(
            required(args.k, "--k", "nanocone")?,
            required(args.n, "--n", "nanocone")?,
            args.override_domain,
        )?,
        "coronoid" => {
            return Err(CliError::Domain(
                "coronoid systems are census-level only; use `index coronoid` instead".to_string(),
            ))
        }
        spec => build_chain(&spec.parse::<ChainSpec>()?)?,
    };
    let mut json = graph.to_json();
    json.push('\n');
    args.output.write_str(&json)
}

fn graph_rows(graph: &MolecularGraph, variants: &[IndexVariant]) -> Result<Vec<(IndexVariant, &'static str, f64)>, CliError> {
    let census = graph.census();
    let fast_path = census.is_chain_typed();
    if !fast_path {
        eprintln!("notice: graph has degrees outside {{2, 3}}; falling back to edge-wise evaluation");
    }
    let mut rows = Vec::new();
    for &variant in variants {
        let value = if fast_path {
            let a = match variant {
                IndexVariant::Plain => 0.0,
                IndexVariant::Reduced => 1.0,
                IndexVariant::Average => ratio_to_f64(graph.average_degree()?),
                IndexVariant::Custom(a) => a,
            };
            sombor_from_census(&census, a)?
        } else {
            match variant {
                IndexVariant::Plain => sombor_general(graph, 0.0)?,
                IndexVariant::Reduced => sombor_general(graph, 1.0)?,
                IndexVariant::Average => sombor_general(graph, ratio_to_f64(graph.average_degree()?))?,
                IndexVariant::Custom(a) => sombor_general(graph, a)?,
            }
        };
        rows.push((variant, if fast_path { "census" } else { "edgewise" }, value));
    }
    Ok(rows)
}

fn cmd_index(args: IndexArgs) -> Result<(), CliError> {
    args.output.validate()?;
    let variants = args.variants.collect();
    let mut table = Table::new(vec!["variant", "source", "value"]);

    let mut push = |variant: IndexVariant, source: &str, value: f64| {
        table.push(vec![
            Cell::Str(variant.label()),
            Cell::Str(source.to_string()),
            Cell::Float(value),
        ]);
    };

    if let Some(path) = &args.graph {
        let json = std::fs::read_to_string(path)
            .map_err(|e| CliError::Io(format!("cannot read {}: {e}", path.display())))?;
        let graph = MolecularGraph::from_json(&json)?;
        for (variant, source, value) in graph_rows(&graph, &variants)? {
            push(variant, source, value);
        }
    } else {
        let target = args.target.as_deref().ok_or_else(|| {
            CliError::Domain("provide a target (chain spec or family) or --graph FILE".to_string())
        })?;
        match target {
            "graphene" => {
                let params = FamilyParams::graphene(
                    required(args.n, "--n", "graphene")?,
                    required(args.k, "--k", "graphene")?,
                )?;
                for &variant in &variants {
                    push(variant, "census", family_index_census(&params, variant)?);
                }
            }
            "nanocone" => {
                let params = FamilyParams::nanocone(
                    required(args.k, "--k", "nanocone")?,
                    required(args.n, "--n", "nanocone")?,
                )?;
                for &variant in &variants {
                    push(variant, "census", family_index_census(&params, variant)?);
                }
            }
            "coronoid" => {
                let params = FamilyParams::coronoid(
                    required(args.n, "--n", "coronoid")?,
                    required(args.p, "--p", "coronoid")?,
                    required(args.r, "--r", "coronoid")?,
                )?;
                for &variant in &variants {
                    if !args.paper_only {
                        push(variant, "census", family_index_census(&params, variant)?);
                    }
                    if !args.census_only {
                        push(variant, "paper", family_index_paper(&params, variant)?);
                    }
                }
            }
            spec => {
                let spec: ChainSpec = spec.parse()?;
                let census = incremental_census(spec.family(), spec.steps());
                for &variant in &variants {
                    let a = resolve_chain_shift(spec.family(), spec.n(), variant)?;
                    push(variant, "census", sombor_from_census(&census, a)?);
                }
            }
        }
    }
    args.output.write_table(&table)
}

fn cmd_expect(args: ExpectArgs) -> Result<(), CliError> {
    args.output.validate()?;
    let family: ChainFamily = args.family.into();
    let probs = ChainProbabilities::new(args.p1, args.p2)?;
    let variants = args.variants.collect();
    let cap = enumeration_cap();

    let mut table = Table::new(vec!["family", "n", "p1", "p2", "variant", "value"]);
    for n in parse_n_range(&args.n)? {
        for &variant in &variants {
            let value = if args.enumerate {
                let a = resolve_chain_shift(family, n, variant)?;
                exact_expectation_enumeration_capped(family, n, probs, a, cap)?
            } else {
                expected_chain_variant(family, n, probs, variant)?.value
            };
            table.push(vec![
                Cell::Str(family.token().to_string()),
                Cell::UInt(n),
                Cell::Float(args.p1),
                Cell::Float(args.p2),
                Cell::Str(variant.label()),
                Cell::Float(value),
            ]);
        }
    }
    args.output.write_table(&table)
}

fn cmd_extremes(args: ExtremesArgs) -> Result<(), CliError> {
    args.output.validate()?;
    let family: ChainFamily = args.family.into();
    let variants = args.variants.collect();
    let mut table = Table::new(vec!["family", "n", "variant", "min", "max"]);
    for n in parse_n_range(&args.n)? {
        for &variant in &variants {
            let (min, max) = chain_extremes(family, n, variant)?;
            table.push(vec![
                Cell::Str(family.token().to_string()),
                Cell::UInt(n),
                Cell::Str(variant.label()),
                Cell::Float(min),
                Cell::Float(max),
            ]);
        }
    }
    args.output.write_table(&table)
}

fn cmd_average(args: AverageArgs) -> Result<(), CliError> {
    args.output.validate()?;
    let family: ChainFamily = args.family.into();
    let variants = args.variants.collect();
    let mut table = Table::new(vec!["family", "n", "variant", "value"]);
    for n in parse_n_range(&args.n)? {
        for &variant in &variants {
            let a = resolve_chain_shift(family, n, variant)?;
            table.push(vec![
                Cell::Str(family.token().to_string()),
                Cell::UInt(n),
                Cell::Str(variant.label()),
                Cell::Float(average_over_chains(family, n, a)?),
            ]);
        }
    }
    args.output.write_table(&table)
}

fn cmd_mc(args: McArgs) -> Result<(), CliError> {
    args.output.validate()?;
    let family: ChainFamily = args.family.into();
    let probs = ChainProbabilities::new(args.p1, args.p2)?;
    let mut table = Table::new(vec![
        "family", "n", "p1", "p2", "variant", "samples", "seed", "workers", "mean", "std_error",
        "elapsed_s",
    ]);
    for variant in args.variants.collect() {
        let result = mc_expectation(family, args.n, probs, variant, args.samples, args.seed, args.workers)?;
        table.push(vec![
            Cell::Str(family.token().to_string()),
            Cell::UInt(args.n),
            Cell::Float(args.p1),
            Cell::Float(args.p2),
            Cell::Str(variant.label()),
            Cell::UInt(result.samples),
            Cell::UInt(result.seed),
            Cell::UInt(args.workers as u64),
            Cell::Float(result.mean),
            Cell::Float(result.std_error),
            Cell::Float(result.elapsed.as_secs_f64()),
        ]);
    }
    args.output.write_table(&table)
}

fn cmd_table1(args: Table1Args) -> Result<(), CliError> {
    args.output.validate()?;
    let mut columns = vec!["n", "p", "r", "SO", "SO_red", "SO_avr"];
    if args.census {
        columns.extend(["SO_census", "SO_red_census", "SO_avr_census"]);
    }
    let mut table = Table::new(columns);
    for (n, p, r) in TABLE1_ROWS {
        let params = FamilyParams::coronoid(n, p, r)?;
        // Published values are displayed at two decimals, rounded half-up.
        let mut row = vec![
            Cell::UInt(n),
            Cell::UInt(p),
            Cell::UInt(r),
            Cell::Fixed2(family_index_paper(&params, IndexVariant::Plain)?),
            Cell::Fixed2(family_index_paper(&params, IndexVariant::Reduced)?),
            Cell::Fixed2(family_index_paper(&params, IndexVariant::Average)?),
        ];
        if args.census {
            row.push(Cell::Float(family_index_census(&params, IndexVariant::Plain)?));
            row.push(Cell::Float(family_index_census(&params, IndexVariant::Reduced)?));
            row.push(Cell::Float(family_index_census(&params, IndexVariant::Average)?));
        }
        table.push(row);
    }
    args.output.write_table(&table)
}

fn cmd_series(args: SeriesArgs) -> Result<(), CliError> {
    args.output.validate()?;
    match args.kind {
        SeriesKind::ChainsCompare => {
            let probs = ChainProbabilities::new(args.p1, args.p2)?;
            let rows = chain_comparison_series(parse_n_range(&args.n)?, probs)?;
            let mut table = Table::new(vec![
                "n",
                "hex_plain",
                "hex_reduced",
                "hex_average",
                "phen_plain",
                "phen_reduced",
                "phen_average",
                "gap_plain",
                "gap_reduced",
                "gap_average",
            ]);
            for row in rows {
                table.push(vec![
                    Cell::UInt(row.n),
                    Cell::Float(row.hexagonal_plain),
                    Cell::Float(row.hexagonal_reduced),
                    Cell::Float(row.hexagonal_average),
                    Cell::Float(row.phenylene_plain),
                    Cell::Float(row.phenylene_reduced),
                    Cell::Float(row.phenylene_average),
                    Cell::Float(row.gap_plain),
                    Cell::Float(row.gap_reduced),
                    Cell::Float(row.gap_average),
                ]);
            }
            args.output.write_table(&table)
        }
        SeriesKind::Families => {
            let family = args.family.ok_or_else(|| {
                CliError::Domain("series families requires --family graphene|nanocone".to_string())
            })?;
            let k_spec = args.k.as_deref().unwrap_or("n");
            let mut table = Table::new(vec![
                "family",
                "n",
                "k",
                "plain",
                "reduced",
                "average",
                "plain_minus_reduced",
                "reduced_minus_average",
            ]);
            for n in parse_n_range(&args.n)? {
                let k = if k_spec == "n" {
                    n
                } else {
                    k_spec.parse::<u64>().map_err(|_| {
                        CliError::Domain(format!("invalid --k {k_spec:?}; expected an integer or 'n'"))
                    })?
                };
                let params = match family {
                    LatticeFamilyArg::Graphene => FamilyParams::graphene(n, k)?,
                    LatticeFamilyArg::Nanocone => FamilyParams::nanocone(k, n)?,
                };
                let plain = family_index_census(&params, IndexVariant::Plain)?;
                let reduced = family_index_census(&params, IndexVariant::Reduced)?;
                let average = family_index_census(&params, IndexVariant::Average)?;
                table.push(vec![
                    Cell::Str(
                        match family {
                            LatticeFamilyArg::Graphene => "graphene",
                            LatticeFamilyArg::Nanocone => "nanocone",
                        }
                        .to_string(),
                    ),
                    Cell::UInt(n),
                    Cell::UInt(k),
                    Cell::Float(plain),
                    Cell::Float(reduced),
                    Cell::Float(average),
                    Cell::Float(plain - reduced),
                    Cell::Float(reduced - average),
                ]);
            }
            args.output.write_table(&table)
        }
    }
}

fn run() -> Result<(), CliError> {
    match Cli::parse().command {
        Command::Generate(args) => cmd_generate(args),
        Command::Index(args) => cmd_index(args),
        Command::Expect(args) => cmd_expect(args),
        Command::Extremes(args) => cmd_extremes(args),
        Command::Average(args) => cmd_average(args),
        Command::Mc(args) => cmd_mc(args),
        Command::Table1(args) => cmd_table1(args),
        Command::Series(args) => cmd_series(args),
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            match err {
                CliError::Domain(_) => ExitCode::from(2),
                CliError::Io(_) => ExitCode::from(3),
            }
        }
    }
}

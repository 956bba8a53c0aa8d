use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{CommandFactory, FromArgMatches, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use profmatch::lottery::{self, Algo, ExperimentConfig, McrmMode, SynthConfig};
use profmatch::oracle::brute_force_optimal;
use profmatch::rmcheck::{is_rank_maximal, is_rank_maximal_grouped, to_ranks};
use profmatch::weights::{mcrm_weights, rm_weights, satisfies_condition_sampled};
use profmatch::{
    complete, optimal_matching, optimal_matching_with, profile_of, satisfies_condition,
    ConditionCheck, Error, Instance, Matching, Profile, RankSystem, Reduction, WeightAssignment,
    WeightTable,
};

#[derive(Parser)]
#[command(name = "profmatch", about = "Profile-optimal bipartite matching")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Find a profile-optimal matching.
    Solve(SolveArgs),
    /// Test a weight file against the reduction condition.
    CheckWeights(CheckArgs),
    /// Decide whether a weight list is rank-maximal in disguise.
    RmCheck(RmCheckArgs),
    /// Run the school-choice lottery experiment.
    Lottery(LotteryArgs),
    /// Generate a synthetic lottery instance.
    Gen(GenArgs),
    /// Brute-force optimum of a small instance.
    Oracle(OracleArgs),
}

#[derive(Clone, Debug)]
enum WeightSource {
    MixedRadix,
    Rm,
    Mcrm,
    File(PathBuf),
}

fn parse_weight_source(s: &str) -> Result<WeightSource, String> {
    match s {
        "mixed-radix" => Ok(WeightSource::MixedRadix),
        "rm" => Ok(WeightSource::Rm),
        "mcrm" => Ok(WeightSource::Mcrm),
        _ => match s.strip_prefix("file:") {
            Some(p) if !p.is_empty() => Ok(WeightSource::File(p.into())),
            _ => Err("expected mixed-radix, rm, mcrm or file:<path>".into()),
        },
    }
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum Emit {
    Matching,
    Profile,
    Both,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum Format {
    Text,
    Json,
}

#[derive(clap::Args)]
struct SolveArgs {
    #[arg(long)]
    instance: PathBuf,
    #[arg(long, default_value = "mixed-radix", value_parser = parse_weight_source)]
    weights: WeightSource,
    #[arg(long, value_enum, default_value = "both")]
    emit: Emit,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Cross-check the profile against brute force (small instances only).
    #[arg(long)]
    oracle: bool,
    /// Re-validate a previous JSON result against the instance instead of solving.
    #[arg(long, value_name = "JSON")]
    verify: Option<PathBuf>,
    /// Skip the condition check for supplied weights.
    #[arg(long, conflicts_with = "samples")]
    unchecked: bool,
    /// Check the condition on this many random triples instead of all.
    #[arg(long)]
    samples: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(clap::Args)]
struct CheckArgs {
    #[arg(long)]
    instance: PathBuf,
    #[arg(long)]
    weights: PathBuf,
    #[arg(long)]
    samples: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Clone, Copy, ValueEnum)]
enum RmMode {
    Literal,
    Grouped,
}

#[derive(clap::Args)]
struct RmCheckArgs {
    #[arg(long)]
    weights: PathBuf,
    #[arg(long, value_enum, default_value = "grouped")]
    mode: RmMode,
    /// Write `a b rank` lines here when reducible.
    #[arg(long, value_name = "PATH")]
    emit_ranks: Option<PathBuf>,
}

#[derive(clap::Args)]
struct LotteryArgs {
    #[arg(long)]
    students: PathBuf,
    #[arg(long)]
    schools: PathBuf,
    #[arg(long, value_delimiter = ',', default_value = "baseline,rm,mcrm")]
    algos: Vec<String>,
    /// Number of lottery seeds.
    #[arg(long, default_value_t = 10)]
    seeds: u64,
    /// First lottery seed.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    out: PathBuf,
    /// Use the closed-form MCRM weights (condition checked) instead of mixed radix.
    #[arg(long = "paper-formula")]
    closed_form: bool,
}

#[derive(clap::Args)]
struct GenArgs {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    out: PathBuf,
    /// JSON file overriding generator settings.
    #[arg(long)]
    config: Option<PathBuf>,
}

#[derive(clap::Args)]
struct OracleArgs {
    #[arg(long)]
    instance: PathBuf,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Serialize, Deserialize)]
struct SolveOutput {
    matching: Matching,
    profile: Profile,
    max_weight_decimal: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    verification: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle_profile: Option<Profile>,
}

type CliResult<T> = Result<T, Error>;

fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| {
        Error::Io(std::io::Error::new(
            e.kind(),
            format!("{}: {e}", path.display()),
        ))
    })
}

fn load_instance(path: &Path) -> CliResult<Instance> {
    Instance::parse(&read(path)?)
}

fn solve(args: SolveArgs) -> CliResult<()> {
    let inst = load_instance(&args.instance)?;
    if let Some(path) = &args.verify {
        return verify(&inst, path);
    }
    let check = match (args.unchecked, args.samples) {
        (true, _) => ConditionCheck::Unchecked,
        (false, Some(samples)) => ConditionCheck::Sampled {
            samples,
            seed: args.seed,
        },
        (false, None) => ConditionCheck::Exhaustive,
    };
    let red: Reduction = match &args.weights {
        WeightSource::MixedRadix => optimal_matching(&inst)?,
        WeightSource::Rm => {
            let (ranks, r) = RankSystem::from_indicator_instance(&inst, false)?;
            optimal_matching_with(&inst, &rm_weights(&ranks, r)?, check)?
        }
        WeightSource::Mcrm => {
            let (ranks, r) = RankSystem::from_indicator_instance(&inst, true)?;
            optimal_matching_with(&inst, &mcrm_weights(&ranks, r)?, check)?
        }
        WeightSource::File(path) => {
            let w = load_weights(&inst, path)?;
            optimal_matching_with(&inst, &w, check)?
        }
    };
    let oracle_profile = if args.oracle {
        let (best, _) = brute_force_optimal(&inst)?;
        if best != red.profile {
            return Err(Error::Validation(format!(
                "oracle profile {best} differs from computed profile {}",
                red.profile
            )));
        }
        Some(best)
    } else {
        None
    };
    let verification = serde_json::to_value(red.verification)?
        .as_str()
        .map(str::to_string);
    let out = SolveOutput {
        matching: red.matching,
        profile: red.profile,
        max_weight_decimal: red.max_weight.to_string(),
        verification,
        oracle_profile,
    };
    match args.format {
        Format::Json => {
            let mut v = serde_json::to_value(&out)?;
            let obj = v.as_object_mut().expect("struct serializes to an object");
            if args.emit == Emit::Matching {
                obj.remove("profile");
            }
            if args.emit == Emit::Profile {
                obj.remove("matching");
            }
            println!("{}", serde_json::to_string_pretty(&v)?);
        }
        Format::Text => {
            if args.emit != Emit::Profile {
                for (a, b) in out.matching.pairs() {
                    println!("{a} {b}");
                }
            }
            if args.emit != Emit::Matching {
                println!("profile: {}", out.profile);
            }
            println!("max_weight: {}", out.max_weight_decimal);
            if let Some(p) = &out.oracle_profile {
                println!("oracle: {p} (agrees)");
            }
        }
    }
    Ok(())
}

fn verify(inst: &Instance, path: &Path) -> CliResult<()> {
    let claimed: SolveOutput = serde_json::from_str(&read(path)?)?;
    let actual = profile_of(&claimed.matching, inst)?;
    if actual != claimed.profile {
        return Err(Error::Validation(format!(
            "matching has profile {actual}, file claims {}",
            claimed.profile
        )));
    }
    println!("verified: profile {actual}");
    Ok(())
}

fn load_weights(inst: &Instance, path: &Path) -> CliResult<WeightAssignment> {
    let table = WeightTable::parse(&read(path)?)?;
    WeightAssignment::from_table(&complete(inst), &table)
}

fn check_weights(args: CheckArgs) -> CliResult<()> {
    let inst = load_instance(&args.instance)?;
    let w = load_weights(&inst, &args.weights)?;
    let completed = complete(&inst);
    let found = match args.samples {
        Some(samples) => {
            satisfies_condition_sampled(&completed, &w, samples, args.seed).counterexample
        }
        None => satisfies_condition(&completed, &w),
    };
    match found {
        Some(c) => Err(Error::ConditionViolated(c)),
        None => {
            let how = if args.samples.is_some() {
                "no violation sampled"
            } else {
                "satisfied"
            };
            println!("condition: {how}");
            Ok(())
        }
    }
}

fn rm_check(args: RmCheckArgs) -> CliResult<()> {
    let table = WeightTable::parse(&read(&args.weights)?)?;
    let weights = table.weights();
    let ok = match args.mode {
        RmMode::Literal => is_rank_maximal(&weights),
        RmMode::Grouped => is_rank_maximal_grouped(&weights),
    };
    println!("reducible: {}", if ok { "yes" } else { "no" });
    if let (true, Some(path)) = (ok, &args.emit_ranks) {
        let (na, nb) = table.extent();
        let (system, r) = to_ranks(&table, na, nb)?;
        let mut text = String::new();
        for ((a, b), rank) in system.edges() {
            text.push_str(&format!("{a} {b} {rank}\n"));
        }
        fs::write(path, text)?;
        println!("ranks: {r}");
    }
    Ok(())
}

fn run_lottery(args: LotteryArgs) -> CliResult<()> {
    let algos = args
        .algos
        .iter()
        .map(|a| a.parse())
        .collect::<CliResult<Vec<Algo>>>()?;
    if args.seeds == 0 {
        return Err(Error::Config("--seeds must be at least 1".into()));
    }
    let inst = lottery::load(&args.students, &args.schools)?;
    let config = ExperimentConfig {
        algos,
        seeds: (args.seed..args.seed + args.seeds).collect(),
        mcrm_mode: if args.closed_form {
            McrmMode::ClosedForm
        } else {
            McrmMode::MixedRadix
        },
    };
    let runs = lottery::run_experiment(&inst, &config)?;
    fs::create_dir_all(&args.out)?;
    for run in &runs {
        let rendered = lottery::report(&run.reports)?;
        fs::write(
            args.out.join(format!("report_seed{}.json", run.seed)),
            rendered.json,
        )?;
        fs::write(
            args.out.join(format!("report_seed{}.csv", run.seed)),
            rendered.csv,
        )?;
    }
    let summary = lottery::summarize(&runs);
    let mut csv = format!("{}\n", lottery::Summary::csv_header());
    for s in &summary {
        csv.push_str(&s.csv_row());
        csv.push('\n');
    }
    fs::write(args.out.join("summary.csv"), &csv)?;
    print!("{csv}");
    Ok(())
}

fn gen(args: GenArgs) -> CliResult<()> {
    let config: SynthConfig = match &args.config {
        Some(path) => {
            serde_json::from_str(&read(path)?).map_err(|e| Error::Config(e.to_string()))?
        }
        None => SynthConfig::default(),
    };
    let inst = lottery::generate(&config, args.seed)?;
    fs::create_dir_all(&args.out)?;
    inst.write_schools_csv(fs::File::create(args.out.join("schools.csv"))?)?;
    inst.write_students_csv(fs::File::create(args.out.join("students.csv"))?)?;
    println!(
        "wrote {} students, {} schools",
        inst.students().len(),
        inst.schools().len()
    );
    Ok(())
}

fn oracle(args: OracleArgs) -> CliResult<()> {
    let inst = load_instance(&args.instance)?;
    let (best, all) = brute_force_optimal(&inst)?;
    match args.format {
        Format::Json => {
            let v = serde_json::json!({ "profile": best, "optimal_matchings": all });
            println!("{}", serde_json::to_string_pretty(&v)?);
        }
        Format::Text => {
            println!("profile: {best}");
            println!("optimal matchings: {}", all.len());
            for m in &all {
                let pairs: Vec<String> = m.pairs().map(|(a, b)| format!("({a},{b})")).collect();
                println!("{}", pairs.join(" "));
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let version = format!(
        "{} (arithmetic: {})",
        profmatch::VERSION,
        profmatch::ARITHMETIC_BACKEND
    );
    let matches = Cli::command().version(version).get_matches();
    let cli = match Cli::from_arg_matches(&matches) {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    let result = match cli.command {
        Command::Solve(a) => solve(a),
        Command::CheckWeights(a) => check_weights(a),
        Command::RmCheck(a) => rm_check(a),
        Command::Lottery(a) => run_lottery(a),
        Command::Gen(a) => gen(a),
        Command::Oracle(a) => oracle(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let mut body = serde_json::json!({ "error": e.kind(), "message": e.to_string() });
            if let Error::ConditionViolated(c) = &e {
                body["counterexample"] = serde_json::to_value(c).unwrap_or_default();
            }
            eprintln!("{body}");
            ExitCode::from(1)
        }
    }
}

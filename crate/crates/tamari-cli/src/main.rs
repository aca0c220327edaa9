//! Command-line surface for the tamari crate: enumeration, diagram export,
//! closed-form counting, bijections, and the exhaustive verification
//! sweeps. Exit status: 0 on success or a passing check, 1 when a check
//! finds a counterexample, 2 on usage or input errors.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigUint;
use rayon::prelude::*;
use tamari::{
    all_paths, ballot_from_tree, build_tam_poset, canopy, dualize, labelled_intervals_formula,
    m_tamari_intervals_formula, rational_base_path, tam_class_of_ballot, tam_covers, tam_elements,
    tamari_intervals_formula, total_intervals_formula, tree_from_pair, verify_duality_at,
    verify_lattice_at, verify_lemmas_at, verify_m_equivalence, verify_partition, BinaryTree,
    LatticePath, NonCrossingPair, VerificationOutcome,
};

#[derive(Parser)]
#[command(
    name = "tamari",
    version,
    about = "Generalized Tamari orders on lattice paths: enumeration, verification, bijections, and diagrams"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// Sweep controls shared by `check` and `intervals-all`.
#[derive(Args, Clone, Copy)]
struct PoolArgs {
    /// Worker threads for the sweep
    #[arg(long, default_value_t = 1)]
    workers: usize,

    /// Largest size argument the sweep accepts
    #[arg(long, default_value_t = 12)]
    max_size: usize,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct CountArgs {
    /// Intervals over (NE)^n
    #[arg(long, value_name = "N")]
    tamari: Option<u64>,

    /// Intervals over (N E^m)^n
    #[arg(long = "m-tamari", num_args = 2, value_names = ["M", "N"])]
    m_tamari: Option<Vec<u64>>,

    /// North-labelled intervals over (N E^m)^n
    #[arg(long, num_args = 2, value_names = ["M", "N"])]
    labelled: Option<Vec<u64>>,

    /// Intervals summed over every base of length n
    #[arg(long, value_name = "N")]
    total: Option<u64>,
}

#[derive(Subcommand)]
enum Command {
    /// List every path weakly above a base, bottom to top
    Elements { base: String },

    /// List the covering moves available from an element over a base
    Covers { base: String, element: String },

    /// Print the cover diagram of the poset over a base
    Hasse {
        base: String,
        /// DOT digraph output (the default)
        #[arg(long, conflicts_with = "json")]
        dot: bool,
        /// JSON output: elements plus cover index pairs
        #[arg(long)]
        json: bool,
    },

    /// Greatest element below both given elements over a base
    Meet { base: String, x: String, y: String },

    /// Least element above both given elements over a base
    Join { base: String, x: String, y: String },

    /// Number of ordered pairs x <= y in the poset over a base
    Intervals { base: String },

    /// Interval counts for every base of a length, then the total
    IntervalsAll {
        len: usize,
        /// JSON lines instead of plain rows
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        pool: PoolArgs,
    },

    /// Closed-form interval counts, exact at any size
    Count(CountArgs),

    /// Conversions between trees, path pairs, and ballot words
    #[command(subcommand)]
    Biject(BijectCommand),

    /// Canopy word of a tree
    Canopy { tree: String },

    /// Base path under the diagonal of slope a/b for coprime a, b
    Rational { a: u64, b: u64 },

    /// Image of an element under the duality onto the reversed-complement base
    Dualize { base: String, element: String },

    /// Exhaustive verification sweeps; exit 1 on any counterexample
    #[command(subcommand)]
    Check(CheckCommand),
}

#[derive(Subcommand)]
enum BijectCommand {
    /// Upper and lower path of a tree, one per line
    TreeToPair { tree: String },

    /// Tree encoded by a dominating pair of paths
    PairToTree { upper: String, lower: String },

    /// Ballot word of a tree
    Ballot { tree: String },

    /// Canopy class of a ballot word: the base path, then the element over it
    Class { ballot: String },
}

#[derive(Subcommand)]
enum CheckCommand {
    /// Every poset over a base up to the bound length is a lattice
    Lattice {
        #[arg(default_value_t = 6, value_name = "MAX_LEN")]
        bound: usize,
        #[command(flatten)]
        pool: PoolArgs,
    },

    /// Dualizing reverses the order involutively for every base up to the bound length
    Duality {
        #[arg(default_value_t = 6, value_name = "MAX_LEN")]
        bound: usize,
        #[command(flatten)]
        pool: PoolArgs,
    },

    /// Canopy classes cut the rotation order into intervals, one poset each
    Partition {
        #[arg(default_value_t = 6, value_name = "MAX_N")]
        bound: usize,
        #[command(flatten)]
        pool: PoolArgs,
    },

    /// Structural identities on every tree up to the bound size
    Lemmas {
        #[arg(default_value_t = 7, value_name = "MAX_SIZE")]
        bound: usize,
        #[command(flatten)]
        pool: PoolArgs,
    },

    /// Slope and distance covering moves agree over staircases
    MEquiv {
        #[arg(default_value_t = 3)]
        m: usize,
        #[arg(default_value_t = 4)]
        n: usize,
        #[command(flatten)]
        pool: PoolArgs,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(message) => {
            eprintln!("{message}");
            ExitCode::from(2)
        }
    }
}

fn parse_path(text: &str) -> Result<LatticePath, String> {
    text.parse().map_err(|e| format!("path {text:?}: {e}"))
}

fn parse_tree(text: &str) -> Result<BinaryTree, String> {
    text.parse().map_err(|e| format!("tree {text:?}: {e}"))
}

fn guard_size(what: &str, requested: usize, cap: usize) -> Result<(), String> {
    if requested > cap {
        return Err(format!(
            "{what}: size {requested} exceeds --max-size {cap}; pass a larger --max-size to allow it"
        ));
    }
    Ok(())
}

fn build_pool(workers: usize) -> Result<rayon::ThreadPool, String> {
    if workers == 0 {
        return Err("--workers must be at least 1".into());
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| format!("worker pool: {e}"))
}

/// Formula parameters stay cheap up to here; beyond it the binomials get
/// long for no practical reason.
const MAX_COUNT_PARAMETER: u64 = 10_000;

fn run(cli: Cli) -> Result<bool, String> {
    match cli.command {
        Command::Elements { base } => {
            let base = parse_path(&base)?;
            for element in tam_elements(&base) {
                println!("{element}");
            }
            Ok(true)
        }

        Command::Covers { base, element } => {
            let base = parse_path(&base)?;
            let element = parse_path(&element)?;
            let covers = tam_covers(&element, &base)
                .map_err(|e| format!("covers of {element} over {base}: {e}"))?;
            for cover in covers {
                println!("{cover}");
            }
            Ok(true)
        }

        Command::Hasse { base, dot: _, json } => {
            let base = parse_path(&base)?;
            let poset = build_tam_poset(&base);
            if json {
                println!("{}", poset.to_json());
            } else {
                print!("{}", poset.to_dot());
            }
            Ok(true)
        }

        Command::Meet { base, x, y } => run_bound(&base, &x, &y, true),
        Command::Join { base, x, y } => run_bound(&base, &x, &y, false),

        Command::Intervals { base } => {
            let base = parse_path(&base)?;
            println!("{}", build_tam_poset(&base).intervals_count());
            Ok(true)
        }

        Command::IntervalsAll { len, json, pool } => run_intervals_all(len, json, pool),

        Command::Count(args) => {
            let check = |value: u64| -> Result<u64, String> {
                if value > MAX_COUNT_PARAMETER {
                    Err(format!(
                        "count: parameter {value} exceeds {MAX_COUNT_PARAMETER}"
                    ))
                } else {
                    Ok(value)
                }
            };
            let value = match (args.tamari, args.m_tamari, args.labelled, args.total) {
                (Some(n), None, None, None) => tamari_intervals_formula(check(n)?),
                (None, Some(mn), None, None) => {
                    m_tamari_intervals_formula(check(mn[0])?, check(mn[1])?)
                }
                (None, None, Some(mn), None) => {
                    labelled_intervals_formula(check(mn[0])?, check(mn[1])?)
                }
                (None, None, None, Some(n)) => total_intervals_formula(check(n)?),
                _ => unreachable!("the flag group admits exactly one choice"),
            };
            println!("{value}");
            Ok(true)
        }

        Command::Biject(command) => run_biject(command),

        Command::Canopy { tree } => {
            let tree = parse_tree(&tree)?;
            println!("{}", LatticePath::new(canopy(&tree)));
            Ok(true)
        }

        Command::Rational { a, b } => {
            let path = rational_base_path(a, b).map_err(|e| format!("rational {a} {b}: {e}"))?;
            println!("{path}");
            Ok(true)
        }

        Command::Dualize { base, element } => {
            let base = parse_path(&base)?;
            let element = parse_path(&element)?;
            let dual = dualize(&base, &element)
                .map_err(|e| format!("dualize {element} over {base}: {e}"))?;
            println!("{dual}");
            Ok(true)
        }

        Command::Check(command) => run_check(command),
    }
}

fn run_bound(base: &str, x: &str, y: &str, meet: bool) -> Result<bool, String> {
    let name = if meet { "meet" } else { "join" };
    let base = parse_path(base)?;
    let x = parse_path(x)?;
    let y = parse_path(y)?;
    let poset = build_tam_poset(&base);
    let found = if meet {
        poset.meet(&x, &y)
    } else {
        poset.join(&x, &y)
    }
    .map_err(|e| format!("{name} of {x} and {y} over {base}: {e}"))?
    .ok_or_else(|| format!("{name} of {x} and {y} over {base}: none exists"))?;
    println!("{found}");
    Ok(true)
}

fn run_biject(command: BijectCommand) -> Result<bool, String> {
    match command {
        BijectCommand::TreeToPair { tree } => {
            let tree = parse_tree(&tree)?;
            let pair = NonCrossingPair::from_tree(&tree);
            println!("{}", pair.upper());
            println!("{}", pair.lower());
        }
        BijectCommand::PairToTree { upper, lower } => {
            let upper = parse_path(&upper)?;
            let lower = parse_path(&lower)?;
            let pair =
                NonCrossingPair::new(upper, lower).map_err(|e| format!("pair-to-tree: {e}"))?;
            println!("{}", tree_from_pair(&pair));
        }
        BijectCommand::Ballot { tree } => {
            let tree = parse_tree(&tree)?;
            println!("{}", ballot_from_tree(&tree));
        }
        BijectCommand::Class { ballot } => {
            let word = parse_path(&ballot)?;
            let (base, element) =
                tam_class_of_ballot(&word).map_err(|e| format!("class of {word}: {e}"))?;
            println!("{base}");
            println!("{element}");
        }
    }
    Ok(true)
}

fn run_intervals_all(len: usize, json: bool, pool: PoolArgs) -> Result<bool, String> {
    guard_size("intervals-all", len, pool.max_size)?;
    let threads = build_pool(pool.workers)?;
    let bases = all_paths(len);
    let chunk = if pool.workers == 1 {
        1
    } else {
        pool.workers * 4
    };
    let mut total = BigUint::default();
    threads.install(|| {
        for batch in bases.chunks(chunk) {
            let rows: Vec<(String, BigUint)> = batch
                .par_iter()
                .map(|base| (base.to_string(), build_tam_poset(base).intervals_count()))
                .collect();
            for (base, count) in rows {
                if json {
                    println!(
                        "{}",
                        serde_json::json!({ "base": base, "intervals": count.to_string() })
                    );
                } else {
                    println!("{base} {count}");
                }
                total += count;
            }
        }
    });
    if json {
        println!("{}", serde_json::json!({ "total": total.to_string() }));
    } else {
        println!("total {total}");
    }
    Ok(true)
}

type Job = Box<dyn Fn() -> Result<VerificationOutcome, String> + Send + Sync>;

fn check_jobs(command: CheckCommand) -> Result<(Vec<(String, Job)>, PoolArgs), String> {
    let mut jobs: Vec<(String, Job)> = Vec::new();
    let pool = match command {
        CheckCommand::Lattice { bound, pool } => {
            guard_size("check lattice", bound, pool.max_size)?;
            for len in 0..=bound {
                jobs.push((
                    format!("lattice len={len}"),
                    Box::new(move || {
                        let mut out = VerificationOutcome::default();
                        for base in all_paths(len) {
                            out.merge(verify_lattice_at(&base));
                        }
                        Ok(out)
                    }),
                ));
            }
            pool
        }
        CheckCommand::Duality { bound, pool } => {
            guard_size("check duality", bound, pool.max_size)?;
            for len in 0..=bound {
                jobs.push((
                    format!("duality len={len}"),
                    Box::new(move || {
                        let mut out = VerificationOutcome::default();
                        for base in all_paths(len) {
                            out.merge(verify_duality_at(&base));
                        }
                        Ok(out)
                    }),
                ));
            }
            pool
        }
        CheckCommand::Partition { bound, pool } => {
            guard_size("check partition", bound, pool.max_size)?;
            for n in 1..=bound {
                jobs.push((
                    format!("partition n={n} classes={}", 1usize << (n - 1)),
                    Box::new(move || {
                        verify_partition(n).map_err(|e| format!("partition n={n}: {e}"))
                    }),
                ));
            }
            pool
        }
        CheckCommand::Lemmas { bound, pool } => {
            guard_size("check lemmas", bound, pool.max_size)?;
            for size in 1..=bound {
                jobs.push((
                    format!("lemmas size={size}"),
                    Box::new(move || Ok(verify_lemmas_at(size))),
                ));
            }
            pool
        }
        CheckCommand::MEquiv { m, n, pool } => {
            guard_size("check m-equiv", m.max(n), pool.max_size)?;
            for mi in 1..=m {
                for ni in 1..=n {
                    jobs.push((
                        format!("m-equiv m={mi} n={ni}"),
                        Box::new(move || Ok(verify_m_equivalence(mi, ni))),
                    ));
                }
            }
            pool
        }
    };
    Ok((jobs, pool))
}

fn run_check(command: CheckCommand) -> Result<bool, String> {
    let (jobs, pool) = check_jobs(command)?;
    let threads = build_pool(pool.workers)?;
    let chunk = if pool.workers == 1 { 1 } else { pool.workers };
    let mut all_passed = true;
    let mut first_error: Option<String> = None;
    threads.install(|| {
        for batch in jobs.chunks(chunk) {
            let results: Vec<(&String, Result<VerificationOutcome, String>)> = batch
                .par_iter()
                .map(|(label, job)| (label, job()))
                .collect();
            for (label, result) in results {
                match result {
                    Ok(outcome) => {
                        if !outcome.passed() {
                            all_passed = false;
                        }
                        println!("{label}: {outcome}");
                    }
                    Err(message) => {
                        if first_error.is_none() {
                            first_error = Some(message);
                        }
                    }
                }
            }
        }
    });
    if let Some(message) = first_error {
        return Err(message);
    }
    println!("{}", if all_passed { "pass" } else { "fail" });
    Ok(all_passed)
}

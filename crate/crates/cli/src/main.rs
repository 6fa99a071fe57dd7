use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use tricolor::coloring::bfs_distance;
use tricolor::extremal::{formula_result, max_balanced_labeling, oracle_result};
use tricolor::labeling::{balance, labeling_distance, lift};
use tricolor::survey::{self, golden_csv, golden_diff, SMALL_TREES_GOLDEN};
use tricolor::tree::{double_star, enumerate_trees, parse_tree, path, star};
use tricolor::walk::{build_walk, validate_walk};
use tricolor::{CanonicalCode, Coloring, DiameterResult, Error, Method, Tree};

const EXIT_USAGE: u8 = 1;
const EXIT_VALIDATION: u8 = 2;
const EXIT_ASSERTION: u8 = 3;

#[derive(Parser)]
#[command(name = "tricolor", version, about = "Exact distances and diameters of 3-coloring graphs of trees")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Distance between two colorings of a tree.
    Distance {
        /// Tree file in edge-list format, or `-` for stdin.
        tree: PathBuf,
        /// Start coloring as a digit string, e.g. `0120`.
        f: Coloring,
        /// Target coloring.
        g: Coloring,
        #[arg(long, value_enum, default_value_t = DistanceMethod::Labeling)]
        method: DistanceMethod,
    },
    /// Diameter of the coloring graph of a tree.
    Diameter {
        tree: PathBuf,
        #[arg(long, value_enum, default_value_t = DiameterMethod::Search)]
        method: DiameterMethod,
        /// Print the full result as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Shortest recoloring walk between two colorings.
    Walk {
        tree: PathBuf,
        f: Coloring,
        g: Coloring,
        /// Write the walk here instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Diameters of every tree on `n` vertices.
    Survey {
        n: usize,
        /// Worker threads; 0 picks one per core.
        #[arg(long, env = "TRICOLOR_JOBS", default_value_t = 0)]
        jobs: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(long, default_value = "search")]
        method: Method,
        /// Fail unless the extremal trees are the path and the near-stars.
        #[arg(long)]
        assert_extremal: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Recompute the small-tree table and compare it with the golden file.
    Golden {
        /// Golden file to compare against; defaults to the built-in copy.
        #[arg(long)]
        golden: Option<PathBuf>,
        #[arg(long, default_value = "search")]
        method: Method,
        /// Write the recomputed table here and skip the comparison.
        #[arg(long)]
        write: Option<PathBuf>,
    },
    /// Emit tree files for standard families.
    Gen {
        #[command(subcommand)]
        family: Family,
    },
}

#[derive(Subcommand)]
enum Family {
    Path { n: usize },
    Star { n: usize },
    /// Two adjacent centers with `a` and `b` leaves.
    DoubleStar { a: usize, b: usize },
    /// All trees on `n` vertices, one file per tree named by canonical code.
    Trees {
        n: usize,
        #[arg(long)]
        out_dir: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum DistanceMethod {
    Labeling,
    Bfs,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum DiameterMethod {
    Search,
    Bfs,
    Formula,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Debug)]
enum Failure {
    Validation(String),
    Assertion(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::MethodDisagreement { .. } | Error::HypothesisFailed(_) => Failure::Assertion(e.to_string()),
            _ => Failure::Validation(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Failure {
        Failure::Validation(e.to_string())
    }
}

type CmdResult = Result<(), Failure>;

fn read_input(p: &Path) -> Result<String, Failure> {
    if p == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        fs::read_to_string(p).map_err(|e| Failure::Validation(format!("{}: {e}", p.display())))
    }
}

fn load_tree(p: &Path) -> Result<Tree, Failure> {
    parse_tree(&read_input(p)?).map_err(|e| Failure::Validation(format!("{}: {e}", p.display())))
}

fn emit(output: Option<&Path>, text: &str) -> CmdResult {
    match output {
        Some(p) => fs::write(p, text)?,
        None => io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn cmd_distance(tree: &Path, f: &Coloring, g: &Coloring, method: DistanceMethod) -> CmdResult {
    let t = load_tree(tree)?;
    let d = match method {
        DistanceMethod::Labeling => labeling_distance(&t, f, g)?,
        DistanceMethod::Bfs => bfs_distance(&t, f, g)?,
        DistanceMethod::Both => {
            let a = labeling_distance(&t, f, g)?;
            let b = bfs_distance(&t, f, g)?;
            if a != b {
                return Err(Failure::Assertion(format!("labeling distance {a} but bfs distance {b}")));
            }
            a
        }
    };
    println!("{d}");
    Ok(())
}

fn print_diameter(r: &DiameterResult, json: bool) -> CmdResult {
    if json {
        let s = serde_json::to_string_pretty(r).map_err(|e| Failure::Validation(e.to_string()))?;
        println!("{s}");
    } else {
        println!("{}\t{}\t{}", r.value, r.method, r.witness_labeling);
    }
    Ok(())
}

fn cmd_diameter(tree: &Path, method: DiameterMethod, json: bool) -> CmdResult {
    let t = load_tree(tree)?;
    let formula = || {
        formula_result(&t).ok_or_else(|| Failure::Validation("no closed form is known for this tree".into()))
    };
    let r = match method {
        DiameterMethod::Search => max_balanced_labeling(&t)?,
        DiameterMethod::Bfs => oracle_result(&t)?,
        DiameterMethod::Formula => formula()?,
        DiameterMethod::All => {
            let s = max_balanced_labeling(&t)?;
            let mut others = vec![];
            if t.n() <= tricolor::coloring::ORACLE_LIMIT {
                others.push(oracle_result(&t)?);
            }
            others.extend(formula_result(&t));
            for o in &others {
                if o.value != s.value {
                    return Err(Failure::Assertion(format!(
                        "search gives {} but {} gives {}",
                        s.value, o.method, o.value
                    )));
                }
            }
            s
        }
    };
    print_diameter(&r, json)
}

fn cmd_walk(tree: &Path, f: &Coloring, g: &Coloring, output: Option<&Path>) -> CmdResult {
    let t = load_tree(tree)?;
    let h = balance(&lift(&t, f, g)?);
    let w = build_walk(&t, f, &h)?;
    let report = validate_walk(&t, &w);
    if !report.valid || report.end != *g || report.length != h.norm() as usize {
        return Err(Failure::Assertion(format!("constructed walk failed validation: {report:?}")));
    }
    emit(output, &w.to_string())
}

fn cmd_survey(
    n: usize,
    jobs: usize,
    format: Format,
    method: Method,
    assert_extremal: bool,
    output: Option<&Path>,
) -> CmdResult {
    let records = survey::run_with_jobs(jobs, || survey::survey(n, method))??;
    let text = match format {
        Format::Csv => survey::to_csv(&records)?,
        Format::Json => survey::to_json(&records)? + "\n",
    };
    emit(output, &text)?;
    if assert_extremal && n >= 7 {
        let class = survey::classification(&records).expect("survey of n >= 1 is non-empty");
        let problems = class.extremal_mismatches();
        if !problems.is_empty() {
            return Err(Failure::Assertion(problems.join("\n")));
        }
    }
    Ok(())
}

fn cmd_golden(golden: Option<&Path>, method: Method, write: Option<&Path>) -> CmdResult {
    if !matches!(method, Method::Search | Method::Bfs) {
        return Err(Failure::Validation(format!("golden data is computed by search or bfs, not {method}")));
    }
    let actual = golden_csv(method)?;
    if let Some(p) = write {
        return Ok(fs::write(p, actual)?);
    }
    let expected = match golden {
        Some(p) => read_input(p)?,
        None => SMALL_TREES_GOLDEN.to_string(),
    };
    let diff = golden_diff(&expected, &actual);
    if diff.is_empty() {
        println!("golden: ok ({} rows)", actual.lines().count() - 1);
        Ok(())
    } else {
        Err(Failure::Validation(diff.join("\n")))
    }
}

fn cmd_gen(family: Family) -> CmdResult {
    let t = match family {
        Family::Path { n } => path(n)?,
        Family::Star { n } => star(n)?,
        Family::DoubleStar { a, b } => double_star(a, b)?,
        Family::Trees { n, out_dir } => {
            fs::create_dir_all(&out_dir)?;
            for t in enumerate_trees(n)? {
                let name = format!("{}.tree", CanonicalCode::of(&t));
                fs::write(out_dir.join(name), t.to_string())?;
            }
            return Ok(());
        }
    };
    emit(None, &t.to_string())
}

fn run(cli: Cli) -> CmdResult {
    match cli.command {
        Command::Distance { tree, f, g, method } => cmd_distance(&tree, &f, &g, method),
        Command::Diameter { tree, method, json } => cmd_diameter(&tree, method, json),
        Command::Walk { tree, f, g, output } => cmd_walk(&tree, &f, &g, output.as_deref()),
        Command::Survey { n, jobs, format, method, assert_extremal, output } => {
            cmd_survey(n, jobs, format, method, assert_extremal, output.as_deref())
        }
        Command::Golden { golden, method, write } => cmd_golden(golden.as_deref(), method, write.as_deref()),
        Command::Gen { family } => cmd_gen(family),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(EXIT_USAGE) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Validation(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_VALIDATION)
        }
        Err(Failure::Assertion(msg)) => {
            eprintln!("assertion failed: {msg}");
            ExitCode::from(EXIT_ASSERTION)
        }
    }
}

//! Batch command-line front end for the `closurelab` library.
//!
//! Every verb reads JSON files, runs one exact computation, and writes a
//! deterministic artifact: canonical polyhedron JSON on standard output, or
//! a CSV iteration trace. Exit codes: 0 on success, 2 when an input fails
//! validation, 3 when a computation refuses its preconditions.

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use closurelab::{
    chvatal_closure_bounded, chvatal_cut, classify_reducer, closure, enumerate_splits,
    family_to_json, integer_vector_to_json, interior_integer_point, io, is_maximal_lattice_free,
    iterate_closure, mixed_integer_hull, nonclosed_witness, parse_family, parse_polyhedron,
    polyhedron_to_json, prune_class, rat, rational_vector_to_json, reduce, split_to_json,
    trace_to_csv, verify_witness, CutFamily, MixedIntegerSpace, Polyhedron, QVector, Rational,
    ReducerClass, StopReason,
};

#[derive(Parser)]
#[command(
    name = "closurelab",
    version,
    about = "Exact reductions, cut-family closures, and lattice checks on rational polyhedra"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Clip the interior of body L out of polyhedron P and rewrap: conv(P \ int L).
    Reduce {
        /// Polyhedron JSON file to reduce.
        p: PathBuf,
        /// Full-dimensional body JSON file to reduce by.
        l: PathBuf,
    },
    /// Intersect the reductions of P by every member of a cut family.
    Closure {
        /// Polyhedron JSON file.
        p: PathBuf,
        #[command(flatten)]
        family: FamilySource,
    },
    /// Iterate the family closure, writing one CSV row per iterate.
    Iterate {
        /// Polyhedron JSON file to start from.
        p: PathBuf,
        #[command(flatten)]
        family: FamilySource,
        /// Stop after this many closure applications.
        #[arg(long, default_value_t = 10)]
        max_iterations: usize,
        /// Reference polyhedron; adds a Hausdorff-distance column and a
        /// convergence stop.
        #[arg(long)]
        reference: Option<PathBuf>,
        /// Distance tolerance for convergence against the reference.
        #[arg(long, default_value = "0")]
        tol: String,
        /// Write the CSV here instead of standard output.
        #[arg(long)]
        trace: Option<PathBuf>,
    },
    /// One Chvátal-Gomory cut (--u) or a bounded-norm cut relaxation (--bound).
    Chvatal {
        /// Bounded polyhedron JSON file.
        p: PathBuf,
        /// Primitive integer direction, comma-separated (e.g. "1,-2").
        #[arg(long)]
        u: Option<String>,
        /// Apply every cut with |u|_inf up to this bound.
        #[arg(long)]
        bound: Option<i64>,
    },
    /// Enumerate the splits with bounded normals whose band meets P's support.
    Splits {
        /// Polyhedron JSON file.
        p: PathBuf,
        /// Bound on |u|_inf of the split normals.
        #[arg(long)]
        bound: i64,
    },
    /// Test whether the interior of L contains no integer point.
    CheckLatticefree {
        /// Full-dimensional polyhedron JSON file.
        l: PathBuf,
    },
    /// Test lattice-freeness plus an integer point in every facet's relative interior.
    CheckMaximal {
        /// Full-dimensional polyhedron JSON file.
        l: PathBuf,
    },
    /// Hull of the points of P whose first m coordinates are integer.
    Mih {
        /// Bounded polyhedron JSON file.
        p: PathBuf,
        /// Number of leading integer coordinates.
        #[arg(long)]
        m: usize,
    },
    /// Classify L as Halfspace, RecLinear, or NonPreserving; in the last
    /// case emit a verified non-closedness witness.
    Classify {
        /// Full-dimensional polyhedron JSON file.
        l: PathBuf,
    },
    /// Drop family members whose remainder matrix against P is dominated.
    Prune {
        /// Polyhedron JSON file (line-free, with linear recession relative to members).
        p: PathBuf,
        /// Cut-family JSON file.
        family: PathBuf,
    },
    /// Check a JSON file against its expected format; report every issue.
    Validate {
        /// File to check.
        file: PathBuf,
        /// Which format the file should follow.
        #[arg(long, value_enum, default_value_t = Kind::Polyhedron)]
        kind: Kind,
    },
}

/// Where the cut family comes from: a file, or all bounded-norm splits.
#[derive(Args)]
#[group(required = true, multiple = false)]
struct FamilySource {
    /// Cut-family JSON file.
    #[arg(long)]
    family: Option<PathBuf>,
    /// Build the family from every split with |u|_inf up to this bound.
    #[arg(long)]
    splits_bound: Option<i64>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Polyhedron,
    Family,
    Split,
    Unimodular,
}

/// A failure routed to the right exit code.
enum Failure {
    /// Exit 2: the inputs did not validate.
    Validation(String),
    /// Exit 3: an input was well-formed but a computation refused it.
    Precondition(closurelab::Error),
}

type CliResult<T> = Result<T, Failure>;

fn validation(message: impl fmt::Display) -> Failure {
    Failure::Validation(message.to_string())
}

fn precondition(error: closurelab::Error) -> Failure {
    Failure::Precondition(error)
}

fn read_file(path: &Path) -> CliResult<String> {
    fs::read_to_string(path)
        .map_err(|e| validation(format!("cannot read {}: {e}", path.display())))
}

fn load_polyhedron(path: &Path) -> CliResult<Polyhedron> {
    parse_polyhedron(&read_file(path)?)
        .map_err(|e| validation(format!("{}: {e}", path.display())))
}

fn load_family(p: &Polyhedron, source: &FamilySource) -> CliResult<CutFamily> {
    if let Some(path) = &source.family {
        return parse_family(&read_file(path)?)
            .map_err(|e| validation(format!("{}: {e}", path.display())));
    }
    let bound = source.splits_bound.expect("clap enforces one source");
    let splits = enumerate_splits(p, bound).map_err(precondition)?;
    eprintln!(
        "note: closing over the {} split(s) with |u|_inf <= {bound}; \
         the closure over all splits may be strictly tighter",
        splits.len()
    );
    let members = splits.iter().map(|s| s.to_polyhedron()).collect();
    CutFamily::new(members, None).map_err(precondition)
}

fn print_json(value: &Value) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("JSON value serializes")
    );
}

fn parse_direction(text: &str) -> CliResult<QVector> {
    let coords: Result<Vec<i64>, _> = text.split(',').map(|t| t.trim().parse::<i64>()).collect();
    match coords {
        Ok(c) if !c.is_empty() => Ok(QVector::from_ints(&c)),
        _ => Err(validation(format!(
            "--u expects comma-separated integers, got {text:?}"
        ))),
    }
}

fn run(command: Command) -> CliResult<()> {
    match command {
        Command::Reduce { p, l } => {
            let p = load_polyhedron(&p)?;
            let l = load_polyhedron(&l)?;
            let reduced = reduce(&p, &l).map_err(precondition)?;
            print_json(&polyhedron_to_json(&reduced));
        }
        Command::Closure { p, family } => {
            let p = load_polyhedron(&p)?;
            let family = load_family(&p, &family)?;
            let closed = closure(&p, &family).map_err(precondition)?;
            print_json(&polyhedron_to_json(&closed));
        }
        Command::Iterate {
            p,
            family,
            max_iterations,
            reference,
            tol,
            trace,
        } => {
            let p = load_polyhedron(&p)?;
            let family = load_family(&p, &family)?;
            let reference = reference.as_deref().map(load_polyhedron).transpose()?;
            let tol = Rational::from_str(&tol)
                .map_err(|e| validation(format!("--tol: {e}")))?;
            let result = iterate_closure(&p, &family, max_iterations, reference.as_ref(), &tol)
                .map_err(precondition)?;
            let csv = trace_to_csv(&result);
            let stop = match result.stopped_because {
                StopReason::Converged => "converged to the reference",
                StopReason::Fixpoint => "reached a fixpoint",
                StopReason::MaxIterations => "exhausted the iteration budget",
            };
            eprintln!(
                "note: {stop} after {} iterate(s)",
                result.iterates.len() - 1
            );
            match trace {
                Some(path) => {
                    fs::write(&path, csv).map_err(|e| {
                        validation(format!("cannot write {}: {e}", path.display()))
                    })?;
                    let last = result.iterates.last().expect("trace has iterates");
                    print_json(&polyhedron_to_json(last));
                }
                None => print!("{csv}"),
            }
        }
        Command::Chvatal { p, u, bound } => {
            let p = load_polyhedron(&p)?;
            match (u, bound) {
                (Some(text), None) => {
                    let direction = parse_direction(&text)?;
                    let cut = chvatal_cut(&p, &direction).map_err(precondition)?;
                    print_json(&json!({
                        "a": integer_vector_to_json(&cut.normal),
                        "alpha": cut.offset.to_string(),
                    }));
                }
                (None, Some(bound)) => {
                    let closed = chvatal_closure_bounded(&p, bound).map_err(precondition)?;
                    let mut value = polyhedron_to_json(&closed);
                    value.as_object_mut().expect("polyhedron JSON is an object").insert(
                        "label".to_string(),
                        json!(format!("relaxation (norm bound {bound})")),
                    );
                    print_json(&value);
                }
                _ => return Err(validation("chvatal needs exactly one of --u and --bound")),
            }
        }
        Command::Splits { p, bound } => {
            let p = load_polyhedron(&p)?;
            let splits = enumerate_splits(&p, bound).map_err(precondition)?;
            print_json(&Value::Array(splits.iter().map(split_to_json).collect()));
        }
        Command::CheckLatticefree { l } => {
            let l = load_polyhedron(&l)?;
            let value = match interior_integer_point(&l).map_err(precondition)? {
                None => json!({"lattice_free": true}),
                Some(z) => json!({
                    "lattice_free": false,
                    "interior_point": integer_vector_to_json(&z),
                }),
            };
            print_json(&value);
        }
        Command::CheckMaximal { l } => {
            let l = load_polyhedron(&l)?;
            let maximal = is_maximal_lattice_free(&l).map_err(precondition)?;
            print_json(&json!({ "maximal_lattice_free": maximal }));
        }
        Command::Mih { p, m } => {
            let p = load_polyhedron(&p)?;
            if m == 0 || m > p.dim() {
                return Err(validation(format!(
                    "--m must be between 1 and the dimension {}",
                    p.dim()
                )));
            }
            let space = MixedIntegerSpace::new(m, p.dim() - m).map_err(precondition)?;
            let hull = mixed_integer_hull(&p, space).map_err(precondition)?;
            print_json(&polyhedron_to_json(&hull));
        }
        Command::Classify { l } => {
            let l = load_polyhedron(&l)?;
            let class = classify_reducer(&l).map_err(precondition)?;
            let value = match class {
                ReducerClass::Halfspace => json!({"class": "Halfspace"}),
                ReducerClass::RecLinear => json!({"class": "RecLinear"}),
                ReducerClass::NonPreserving => {
                    let witness = nonclosed_witness(&l).map_err(precondition)?;
                    let epsilons = [rat(1, 1), rat(1, 2), rat(1, 4), rat(1, 8)];
                    let verified =
                        verify_witness(&l, &witness, &epsilons).map_err(precondition)?;
                    json!({
                        "class": "NonPreserving",
                        "witness": {
                            "k": polyhedron_to_json(&witness.k),
                            "p": rational_vector_to_json(&witness.p),
                            "u2": integer_vector_to_json(&witness.u2),
                            "verified": verified,
                        },
                    })
                }
            };
            print_json(&value);
        }
        Command::Prune { p, family } => {
            let p = load_polyhedron(&p)?;
            let family = parse_family(&read_file(&family)?)
                .map_err(|e| validation(format!("{}: {e}", family.display())))?;
            let pruned = prune_class(&p, &family).map_err(precondition)?;
            print_json(&family_to_json(&pruned));
        }
        Command::Validate { file, kind } => {
            let text = read_file(&file)?;
            let report = match kind {
                Kind::Polyhedron => io::validate_polyhedron(&text),
                Kind::Family => io::validate_family(&text),
                Kind::Split => io::validate_split(&text),
                Kind::Unimodular => io::validate_unimodular(&text),
            };
            print!("{report}");
            if !report.is_ok() {
                return Err(validation(format!(
                    "{}: {} error(s) found",
                    file.display(),
                    report.errors.len()
                )));
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Validation(message)) => {
            eprintln!("validation error: {message}");
            ExitCode::from(2)
        }
        Err(Failure::Precondition(error)) => {
            eprintln!("precondition error: {error}");
            ExitCode::from(3)
        }
    }
}

//! Command-line front end. Exact numbers are printed as JSON strings.

use std::ffi::OsString;
use std::fs;
use std::io::{self, BufRead, Read, Write};
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::analysis::{
    reproduce_table, roots_report, scan_catalog, verify_root_existence_argument,
    verify_sign_theorem, RootSource, ScanFilters, ScanItem,
};
use crate::budget::Budget;
use crate::chromatic::{chromatic_polynomial_by_interpolation, CacheMode, ChromaticEngine};
use crate::error::{Error, Result};
use crate::families::{
    derivative_at_two, derivative_formula, enumerate_hub_types, family_chromatic_polynomial,
    FamilyKind, FamilySpec,
};
use crate::graph::{
    blocks, connected_components, dong_koh_ordering, from_edge_list_text, from_graph6,
    hamiltonian_cycle_exists, independent_toughness_witness, is_bipartite, is_k_connected,
    vertex_connectivity, Bipartition, Graph,
};
use crate::poly::{parse_rat, Rat};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFICATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "chromroot",
    version,
    about = "Chromatic polynomials and their real roots"
)]
struct Cli {
    /// Worker threads (defaults to the number of cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Print elapsed time to stderr.
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Chromatic polynomial of a graph, coefficients in ascending degree.
    Poly {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, value_enum, default_value_t = EngineKind::Dc)]
        engine: EngineKind,
        #[arg(long, value_enum, default_value_t = CacheArg::Canonical)]
        cache: CacheArg,
    },
    /// Real chromatic roots in an open interval.
    Roots {
        #[command(flatten)]
        input: OptionalGraphInput,
        /// Family member such as X:3,5, Y:7,9 or Kb:3,4.
        #[arg(long, conflicts_with_all = ["path", "g6"])]
        family: Option<FamilySpec>,
        #[arg(long, default_value = "1", value_parser = parse_rat_arg)]
        lo: Rat,
        #[arg(long, default_value = "2", value_parser = parse_rat_arg)]
        hi: Rat,
        #[arg(long, default_value_t = 8)]
        places: u32,
    },
    /// Table of smallest roots in (1,2) for odd 3 <= s <= t <= max.
    Table {
        #[arg(long, value_enum, ignore_case = true)]
        kind: HubKind,
        #[arg(long, default_value_t = 19)]
        max: usize,
        #[arg(long, default_value_t = 4)]
        places: u32,
        #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
        out: TableFormat,
    },
    /// Exact checks with a trace; exit status 1 when a check fails.
    Verify {
        #[command(subcommand)]
        what: VerifyCommand,
    },
    /// Structural properties of a graph.
    Check {
        #[command(flatten)]
        input: GraphInput,
        /// Test k-connectivity.
        #[arg(long)]
        connectivity: Option<usize>,
        #[arg(long)]
        bipartite: bool,
        /// Search for an independent set S with c(G-S) > |S|.
        #[arg(long)]
        toughness: bool,
        /// Largest S tried by --toughness (defaults to all sizes).
        #[arg(long)]
        toughness_max: Option<usize>,
        #[arg(long)]
        dong_koh: bool,
        #[arg(long)]
        hamiltonian: bool,
    },
    /// Colouring types of the hub vertices.
    HubTypes {
        #[arg(long, value_enum, ignore_case = true)]
        kind: HubKind,
    },
    /// Stream a graph6 catalog, printing one JSON line per graph with a
    /// root in the interval. Per-graph errors are printed inline.
    Scan {
        /// graph6 file, one graph per line; `-` reads stdin.
        #[arg(long)]
        catalog: PathBuf,
        #[arg(long, default_value_t = 0)]
        min_conn: usize,
        #[arg(long)]
        non_bipartite: bool,
        /// Open interval as `lo,hi`.
        #[arg(long, default_value = "1,2", value_parser = parse_interval)]
        interval: (Rat, Rat),
        #[arg(long, default_value_t = 4)]
        places: u32,
    },
}

#[derive(Debug, Subcommand)]
enum VerifyCommand {
    /// Sign and multiplicity structure of P(G,x) for x <= 32/27.
    Signs {
        #[command(flatten)]
        input: GraphInput,
    },
    /// Continuity argument for a root in (1,2), odd s,t >= 3.
    Existence {
        #[arg(long)]
        family: FamilySpec,
    },
    /// P'(2) of the closed form against 2((-1)^s + (-1)^t + (-1)^(s+t)).
    #[command(name = "lemma3")]
    Derivative {
        #[arg(long)]
        family: FamilySpec,
    },
}

#[derive(Debug, Args)]
struct GraphInput {
    /// Graph file; `-` reads stdin.
    #[arg(required_unless_present = "g6")]
    path: Option<PathBuf>,
    /// Inline graph6 string instead of a file.
    #[arg(long, conflicts_with = "path")]
    g6: Option<String>,
    /// File is graph6 (the default); only the first graph is read.
    #[arg(long, conflicts_with = "edgelist")]
    graph6: bool,
    /// File is an edge list: header `n m`, then one `u v` per line.
    #[arg(long)]
    edgelist: bool,
}

#[derive(Debug, Args)]
struct OptionalGraphInput {
    path: Option<PathBuf>,
    #[arg(long, conflicts_with = "path")]
    g6: Option<String>,
    #[arg(long, conflicts_with = "edgelist")]
    graph6: bool,
    #[arg(long)]
    edgelist: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EngineKind {
    /// Deletion-contraction.
    Dc,
    /// Colouring counts and interpolation.
    Interp,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CacheArg {
    Canonical,
    Exact,
    Off,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum HubKind {
    X,
    Y,
}

impl From<HubKind> for FamilyKind {
    fn from(k: HubKind) -> Self {
        match k {
            HubKind::X => FamilyKind::X,
            HubKind::Y => FamilyKind::Y,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableFormat {
    Csv,
    Json,
}

fn parse_rat_arg(s: &str) -> std::result::Result<Rat, String> {
    parse_rat(s).map_err(|e| e.to_string())
}

fn parse_interval(s: &str) -> std::result::Result<(Rat, Rat), String> {
    let (lo, hi) = s
        .split_once(',')
        .ok_or_else(|| format!("expected lo,hi, got {s:?}"))?;
    let lo = parse_rat_arg(lo.trim())?;
    let hi = parse_rat_arg(hi.trim())?;
    if lo >= hi {
        return Err(format!("empty interval {s:?}"));
    }
    Ok((lo, hi))
}

/// Runs the command line with process stdout and stderr, returning the
/// exit status.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = io::stdout();
    let stderr = io::stderr();
    run_with(args, &mut stdout.lock(), &mut stderr.lock())
}

/// As [`run`], writing to the given sinks.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let code = e.exit_code();
            if code == 0 {
                let _ = write!(out, "{text}");
                return EXIT_OK;
            }
            let _ = write!(err, "{text}");
            return EXIT_USAGE;
        }
    };
    let start = Instant::now();
    let timing = cli.timing;
    if let Some(jobs) = cli.jobs {
        // The global pool can be sized once per process; later calls keep it.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global();
    }
    let result = execute(cli.command, out, err);
    let code = match result {
        Ok(code) => code,
        Err(Error::BrokenPipe) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    };
    let _ = out.flush();
    if timing {
        let _ = writeln!(err, "elapsed: {:.3}s", start.elapsed().as_secs_f64());
    }
    code
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::BudgetExhausted(_) => EXIT_BUDGET,
        Error::Verification(_) | Error::Internal(_) => EXIT_VERIFICATION,
        _ => EXIT_USAGE,
    }
}

fn io_err(e: io::Error) -> Error {
    match e.kind() {
        io::ErrorKind::BrokenPipe => Error::BrokenPipe,
        _ => Error::Io(e.to_string()),
    }
}

fn print_json<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<()> {
    let line = serde_json::to_string(value).map_err(|e| Error::Internal(e.to_string()))?;
    writeln!(out, "{line}").map_err(io_err)
}

fn verdict(pass: bool) -> i32 {
    if pass {
        EXIT_OK
    } else {
        EXIT_VERIFICATION
    }
}

fn read_source(path: &PathBuf) -> Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(io_err)?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
    }
}

fn load_graph(path: Option<&PathBuf>, g6: Option<&str>, edgelist: bool) -> Result<(String, Graph)> {
    if let Some(s) = g6 {
        return Ok((s.to_string(), from_graph6(s)?));
    }
    let path = path.ok_or_else(|| Error::Parse("no graph given".into()))?;
    let text = read_source(path)?;
    let graph = if edgelist {
        from_edge_list_text(&text)?
    } else {
        let line = text
            .lines()
            .map(str::trim)
            .find(|l| !l.is_empty() && !l.starts_with('#'))
            .ok_or_else(|| Error::Parse(format!("{}: no graph6 line", path.display())))?;
        from_graph6(line)?
    };
    Ok((path.display().to_string(), graph))
}

impl GraphInput {
    fn load(&self) -> Result<(String, Graph)> {
        load_graph(self.path.as_ref(), self.g6.as_deref(), self.edgelist)
    }
}

fn execute(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Poly {
            input,
            engine,
            cache,
        } => {
            let (_, g) = input.load()?;
            let p = match engine {
                EngineKind::Dc => {
                    let mode = match cache {
                        CacheArg::Canonical => CacheMode::Canonical,
                        CacheArg::Exact => CacheMode::Exact,
                        CacheArg::Off => CacheMode::Disabled,
                    };
                    ChromaticEngine::new()
                        .with_cache(mode)
                        .chromatic_polynomial(&g)?
                }
                EngineKind::Interp => {
                    chromatic_polynomial_by_interpolation(&g, &Budget::from_env())?
                }
            };
            print_json(
                out,
                &json!({ "n": g.n(), "m": g.edge_count(), "coefficients": p }),
            )?;
            Ok(EXIT_OK)
        }
        Command::Roots {
            input,
            family,
            lo,
            hi,
            places,
        } => {
            if lo >= hi {
                return Err(Error::EmptyInterval {
                    lo: lo.to_string(),
                    hi: hi.to_string(),
                });
            }
            let engine = ChromaticEngine::new();
            let report = match family {
                Some(spec) => roots_report(RootSource::Family(spec), &lo, &hi, places, &engine)?,
                None => {
                    let (id, g) =
                        load_graph(input.path.as_ref(), input.g6.as_deref(), input.edgelist)?;
                    let source = RootSource::Graph { id: &id, graph: &g };
                    roots_report(source, &lo, &hi, places, &engine)?
                }
            };
            print_json(out, &report)?;
            Ok(EXIT_OK)
        }
        Command::Table {
            kind,
            max,
            places,
            out: format,
        } => {
            let sizes: Vec<usize> = (3..=max).step_by(2).collect();
            if sizes.is_empty() {
                return Err(Error::Parse(format!("--max must be at least 3, got {max}")));
            }
            let table = reproduce_table(kind.into(), &sizes, &sizes, places)?;
            match format {
                TableFormat::Csv => write!(out, "{}", table.to_csv()).map_err(io_err)?,
                TableFormat::Json => {
                    let cells: Vec<_> = table
                        .cells
                        .iter()
                        .enumerate()
                        .flat_map(|(i, row)| {
                            let table = &table;
                            row.iter().enumerate().filter_map(move |(j, cell)| {
                                cell.as_ref().map(|c| {
                                    json!({
                                        "s": table.s_values[i],
                                        "t": table.t_values[j],
                                        "decimal": c.as_ref().ok(),
                                        "error": c.as_ref().err(),
                                    })
                                })
                            })
                        })
                        .collect();
                    print_json(out, &cells)?;
                }
            }
            let complete = table.cells.iter().flatten().flatten().all(|c| c.is_ok());
            if !complete {
                let _ = writeln!(err, "some cells have no root in (1,2)");
            }
            Ok(verdict(complete))
        }
        Command::Verify { what } => verify(what, out),
        Command::Check {
            input,
            connectivity,
            bipartite,
            toughness,
            toughness_max,
            dong_koh,
            hamiltonian,
        } => {
            let (source, g) = input.load()?;
            let budget = Budget::from_env();
            let mut report = serde_json::Map::new();
            report.insert("source".into(), json!(source));
            report.insert("n".into(), json!(g.n()));
            report.insert("m".into(), json!(g.edge_count()));
            report.insert("components".into(), json!(connected_components(&g).len()));
            report.insert("blocks".into(), json!(blocks(&g).count()));
            if let Some(k) = connectivity {
                report.insert(
                    "connectivity".into(),
                    json!({
                        "k": k,
                        "k_connected": is_k_connected(&g, k),
                        "vertex_connectivity": vertex_connectivity(&g),
                    }),
                );
            }
            if bipartite {
                let value = match is_bipartite(&g) {
                    Bipartition::Bipartite(sides) => json!({ "bipartite": true, "sides": sides }),
                    Bipartition::OddCycle(c) => json!({ "bipartite": false, "odd_cycle": c }),
                };
                report.insert("bipartite".into(), value);
            }
            if toughness {
                let max = toughness_max.unwrap_or(g.n());
                let witness = independent_toughness_witness(&g, max);
                let components = witness
                    .as_ref()
                    .map(|s| crate::graph::components_after_removal(&g, s));
                report.insert(
                    "toughness".into(),
                    json!({ "max_size": max, "witness": witness, "components": components }),
                );
            }
            if dong_koh {
                let ordering = dong_koh_ordering(&g, &budget)?;
                report.insert(
                    "dong_koh".into(),
                    json!({ "exists": ordering.is_some(), "ordering": ordering }),
                );
            }
            if hamiltonian {
                report.insert(
                    "hamiltonian".into(),
                    json!(hamiltonian_cycle_exists(&g, &budget)?),
                );
            }
            print_json(out, &report)?;
            Ok(EXIT_OK)
        }
        Command::HubTypes { kind } => {
            for ty in enumerate_hub_types(kind.into()) {
                print_json(
                    out,
                    &json!({
                        "partition": ty.partition(),
                        "k": ty.k,
                        "d_s": ty.d_s,
                        "d_t": ty.d_t,
                    }),
                )?;
            }
            Ok(EXIT_OK)
        }
        Command::Scan {
            catalog,
            min_conn,
            non_bipartite,
            interval,
            places,
        } => {
            let filters = ScanFilters {
                min_connectivity: min_conn,
                non_bipartite,
                lo: interval.0,
                hi: interval.1,
                places,
            };
            let reader: Box<dyn BufRead> = if catalog.as_os_str() == "-" {
                Box::new(io::BufReader::new(io::stdin()))
            } else {
                let file = fs::File::open(&catalog)
                    .map_err(|e| Error::Parse(format!("{}: {e}", catalog.display())))?;
                Box::new(io::BufReader::new(file))
            };
            let mut read_error = None;
            let lines = reader.lines().map_while(|l| match l {
                Ok(l) => Some(l),
                Err(e) => {
                    read_error = Some(e);
                    None
                }
            });
            let mut budget_hit = false;
            let mut write_error = None;
            let engine = ChromaticEngine::new();
            let summary = scan_catalog(lines, &filters, &engine, |item| {
                if let ScanItem::Error { error, .. } = &item {
                    budget_hit |= error.contains("budget");
                }
                if write_error.is_none() {
                    write_error = print_json(out, &item).err();
                }
            })?;
            if let Some(e) = read_error {
                return Err(io_err(e));
            }
            if let Some(e) = write_error {
                return Err(e);
            }
            let _ = writeln!(
                err,
                "{}",
                serde_json::to_string(&summary).unwrap_or_default()
            );
            Ok(if budget_hit {
                EXIT_BUDGET
            } else if summary.errors > 0 {
                EXIT_USAGE
            } else {
                EXIT_OK
            })
        }
    }
}

fn verify(what: VerifyCommand, out: &mut dyn Write) -> Result<i32> {
    match what {
        VerifyCommand::Signs { input } => {
            let (_, g) = input.load()?;
            let report = verify_sign_theorem(&g, &ChromaticEngine::new())?;
            let pass = report.passed();
            print_json(out, &json!({ "pass": pass, "report": report }))?;
            Ok(verdict(pass))
        }
        VerifyCommand::Existence { family } => match verify_root_existence_argument(&family) {
            Ok(trace) => {
                print_json(out, &json!({ "pass": true, "trace": trace }))?;
                Ok(EXIT_OK)
            }
            Err(Error::Verification(msg)) => {
                print_json(
                    out,
                    &json!({ "pass": false, "family": family.to_string(), "failure": msg }),
                )?;
                Ok(EXIT_VERIFICATION)
            }
            Err(e) => Err(e),
        },
        VerifyCommand::Derivative { family } => {
            let formula = derivative_formula(family.s, family.t);
            let (symbolic, pass) = match derivative_at_two(&family) {
                Ok(d) => (d.symbolic, true),
                Err(Error::Internal(_)) => {
                    let p = family_chromatic_polynomial(&family)?;
                    (p.derivative().eval_int(&2.into()), false)
                }
                Err(e) => return Err(e),
            };
            print_json(
                out,
                &json!({
                    "pass": pass,
                    "family": family.to_string(),
                    "value": symbolic.to_string(),
                    "formula": formula.to_string(),
                }),
            )?;
            Ok(verdict(pass))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("chromroot").chain(args.iter().copied());
        let code = run_with(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn single_vertex_polynomial() {
        let (code, out, _) = call(&["poly", "--g6", "@"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["coefficients"], json!(["0", "1"]));
    }

    #[test]
    fn usage_errors() {
        assert_eq!(call(&["poly"]).0, EXIT_USAGE);
        assert_eq!(call(&["roots", "--family", "Z:1,2"]).0, EXIT_USAGE);
        assert_eq!(
            call(&["roots", "--family", "X:3,3", "--lo", "2", "--hi", "1"]).0,
            EXIT_USAGE
        );
        assert_eq!(call(&["--help"]).0, EXIT_OK);
    }

    #[test]
    fn derivative_check_reports_value() {
        let (code, out, _) = call(&["verify", "lemma3", "--family", "X:5,5"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["value"], "-2");
        assert_eq!(v["pass"], true);
    }

    #[test]
    fn budget_exit_code() {
        assert_eq!(exit_code(&Error::BudgetExhausted(1)), EXIT_BUDGET);
    }
}

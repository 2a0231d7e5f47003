//! Command-line surface of the bound workbench.
//!
//! Exit codes: 0 success, 1 mismatch or witness not found, 2 invalid
//! input.

use std::fs;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use eaqecc_gv::asymptotic::{self, AsymptoticParams, Feasibility};
use eaqecc_gv::bound::{check_new, check_old, BoundParamsNew, BoundParamsOld};
use eaqecc_gv::pareto::{self, ParetoFrontier};
use eaqecc_gv::symplectic::{
    self, analyze_code, detection_check, parse_matrix_file, DEFAULT_DETECTION_BUDGET,
};
use eaqecc_gv::witness::{search_witness, SearchConfig, SearchMode};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Table,
}

#[derive(Parser)]
#[command(name = "gvbound", about = "GV-type existence bounds for entanglement-assisted asymmetric quantum codes", version)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Master seed for randomized searches; the GV_SEED environment
    /// variable takes precedence over the default.
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one of the two existence inequalities exactly.
    Bound {
        #[command(subcommand)]
        which: BoundCmd,
    },
    /// Enumerate the achievable-distance Pareto frontier.
    Pareto {
        #[command(subcommand)]
        which: ParetoCmd,
    },
    /// Recompute the 22 published comparison rows.
    Table1 {
        /// Restrict to a single row (1-based).
        #[arg(long)]
        row: Option<usize>,
    },
    /// Operate on generator-matrix files.
    Code {
        #[command(subcommand)]
        which: CodeCmd,
    },
    /// Search for a witness code certifying the bound.
    Search {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        l: u64,
        #[arg(long)]
        c: u64,
        #[arg(long)]
        dx: u64,
        #[arg(long)]
        dz: u64,
        #[arg(long, value_enum)]
        mode: ModeArg,
        #[arg(long, default_value_t = 10_000)]
        trials: u64,
        #[arg(long, default_value_t = DEFAULT_DETECTION_BUDGET)]
        budget: u64,
        /// Write the witness matrix file here when found.
        #[arg(long)]
        out: Option<String>,
    },
    /// Asymptotic rate/distance feasibility.
    Asymptotic {
        #[command(subcommand)]
        which: AsymptoticCmd,
    },
}

#[derive(Subcommand)]
enum BoundCmd {
    New {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        l: u64,
        #[arg(long)]
        c: u64,
        #[arg(long)]
        dx: u64,
        #[arg(long)]
        dz: u64,
    },
    Old {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        k1: u64,
        #[arg(long)]
        k2: u64,
        #[arg(long)]
        c: u64,
        #[arg(long)]
        dz: u64,
        #[arg(long)]
        dx: u64,
    },
}

#[derive(Subcommand)]
enum ParetoCmd {
    New {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        l: u64,
        #[arg(long)]
        c: u64,
    },
    Old {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        k1: u64,
        #[arg(long)]
        k2: u64,
        #[arg(long)]
        c: u64,
    },
}

#[derive(Subcommand)]
enum CodeCmd {
    Analyze {
        #[arg(long)]
        file: String,
    },
    Detect {
        #[arg(long)]
        file: String,
        #[arg(long)]
        dx: u64,
        #[arg(long)]
        dz: u64,
        #[arg(long, default_value_t = DEFAULT_DETECTION_BUDGET)]
        budget: u64,
    },
}

#[derive(Subcommand)]
enum AsymptoticCmd {
    Check {
        #[arg(long)]
        q: u64,
        #[arg(long = "L")]
        big_l: f64,
        #[arg(long)]
        lambda: f64,
        #[arg(long)]
        dx: f64,
        #[arg(long)]
        dz: f64,
    },
    Curve {
        #[arg(long)]
        q: u64,
        #[arg(long = "L")]
        big_l: f64,
        #[arg(long, default_value_t = 512)]
        points: usize,
        #[arg(long)]
        out: String,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Random,
    Exhaustive,
}

fn invalid(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn frontier_pairs_str(f: &ParetoFrontier) -> String {
    f.pairs
        .iter()
        .map(|p| format!("({}, {})", p.d1, p.d2))
        .collect::<Vec<_>>()
        .join(", ")
}

fn frontier_json(f: &ParetoFrontier) -> serde_json::Value {
    json!(f.pairs.iter().map(|p| vec![p.d1, p.d2]).collect::<Vec<_>>())
}

fn emit_bound(satisfied: bool, lhs: &eaqecc_gv::bound::ExactRatio, format: Format) {
    match format {
        Format::Json => {
            let doc = json!({
                "satisfied": satisfied,
                "lhs_num": lhs.numerator.to_string(),
                "lhs_den": lhs.denominator.to_string(),
            });
            println!("{doc}");
        }
        Format::Csv => {
            println!("satisfied,lhs_num,lhs_den");
            println!("{},{},{}", satisfied, lhs.numerator, lhs.denominator);
        }
        Format::Table => {
            println!("satisfied: {satisfied}");
            println!("lhs = {} / {}", lhs.numerator, lhs.denominator);
        }
    }
}

fn emit_frontier(f: &ParetoFrontier, format: Format) {
    match format {
        Format::Json => println!("{}", json!({ "pairs": frontier_json(f) })),
        Format::Csv => {
            println!("d1,d2");
            for p in &f.pairs {
                println!("{},{}", p.d1, p.d2);
            }
        }
        Format::Table => println!("{}", frontier_pairs_str(f)),
    }
}

fn run_table1(row: Option<usize>, format: Format) -> Result<ExitCode, String> {
    let rows = pareto::table1_rows();
    let reports: Vec<_> = match row {
        Some(r) => {
            if r < 1 || r > rows.len() {
                return Err(format!("--row {r} out of range 1..={}", rows.len()));
            }
            vec![pareto::reproduce_row(&rows[r - 1]).map_err(|e| e.to_string())?]
        }
        None => rows
            .iter()
            .map(|r| pareto::reproduce_row(r).map_err(|e| e.to_string()))
            .collect::<Result<_, _>>()?,
    };
    let all_match = reports.iter().all(|r| r.matches());
    match format {
        Format::Json => {
            let doc = json!({
                "rows": reports,
                "all_match": all_match,
            });
            println!("{doc}");
        }
        Format::Csv => {
            println!("q,n,k1,k2,c,frontier_old,frontier_new,match,improves");
            for r in &reports {
                let fmt_pairs = |v: &[(u64, u64)]| {
                    v.iter()
                        .map(|(a, b)| format!("({a}, {b})"))
                        .collect::<Vec<_>>()
                        .join("; ")
                };
                println!(
                    "{},{},{},{},{},\"{}\",\"{}\",{},{}",
                    r.q,
                    r.n,
                    r.k1,
                    r.k2,
                    r.c,
                    fmt_pairs(&r.actual_old),
                    fmt_pairs(&r.actual_new),
                    r.matches(),
                    r.improves
                );
            }
        }
        Format::Table => {
            for r in &reports {
                let status = if r.matches() { "match" } else { "MISMATCH" };
                println!(
                    "q={:<3} n={:<3} k1={:<3} k2={:<3} c={:<3} {} improves={}",
                    r.q, r.n, r.k1, r.k2, r.c, status, r.improves
                );
                if !r.matches() {
                    println!("  expected old: {:?}", r.expected_old);
                    println!("  actual   old: {:?}", r.actual_old);
                    println!("  expected new: {:?}", r.expected_new);
                    println!("  actual   new: {:?}", r.actual_new);
                }
            }
            println!("all rows match: {all_match}");
        }
    }
    Ok(if all_match {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let seed = std::env::var("GV_SEED")
        .ok()
        .and_then(|s| s.parse::<u64>().ok())
        .or(cli.seed)
        .unwrap_or(0);
    let format = cli.format;

    match cli.command {
        Command::Bound { which } => {
            let result = match which {
                BoundCmd::New { q, n, l, c, dx, dz } => check_new(&BoundParamsNew {
                    q,
                    n,
                    ell: l,
                    c,
                    d_x: dx,
                    d_z: dz,
                }),
                BoundCmd::Old {
                    q,
                    n,
                    k1,
                    k2,
                    c,
                    dz,
                    dx,
                } => check_old(&BoundParamsOld {
                    q,
                    n,
                    k1,
                    k2,
                    c,
                    d_z: dz,
                    d_x: dx,
                }),
            };
            match result {
                Ok((sat, lhs)) => {
                    emit_bound(sat, &lhs, format);
                    ExitCode::SUCCESS
                }
                Err(e) => invalid(e),
            }
        }
        Command::Pareto { which } => {
            let result = match which {
                ParetoCmd::New { q, n, l, c } => pareto::pareto_new(q, n, l, c),
                ParetoCmd::Old { q, n, k1, k2, c } => pareto::pareto_old(q, n, k1, k2, c),
            };
            match result {
                Ok(f) => {
                    emit_frontier(&f, format);
                    ExitCode::SUCCESS
                }
                Err(e) => invalid(e),
            }
        }
        Command::Table1 { row } => match run_table1(row, format) {
            Ok(code) => code,
            Err(e) => invalid(e),
        },
        Command::Code { which } => match which {
            CodeCmd::Analyze { file } => {
                let text = match fs::read_to_string(&file) {
                    Ok(t) => t,
                    Err(e) => return invalid(format!("{file}: {e}")),
                };
                let (field, n, rows) = match parse_matrix_file(&text) {
                    Ok(v) => v,
                    Err(e) => return invalid(e),
                };
                let cs = match analyze_code(&field, n, &rows) {
                    Ok(cs) => cs,
                    Err(e) => return invalid(e),
                };
                let k = cs.n - cs.ell + cs.c;
                match format {
                    Format::Json => {
                        let doc = json!({
                            "q": cs.field.q,
                            "n": cs.n,
                            "l": cs.ell,
                            "c": cs.c,
                            "dim_intersection": cs.dim_intersection,
                            "dual_dim": cs.dual_dim(),
                            "params": format!("[[{}, {}; {}]]_{}", cs.n, k, cs.c, cs.field.q),
                        });
                        println!("{doc}");
                    }
                    _ => {
                        println!("q = {}", cs.field.q);
                        println!("n = {}", cs.n);
                        println!("l = dim C = {}", cs.ell);
                        println!("c = {}", cs.c);
                        println!("dim(C ∩ C^⊥s) = {}", cs.dim_intersection);
                        println!("dim C^⊥s = {}", cs.dual_dim());
                        println!("[[{}, {}; {}]]_{}", cs.n, k, cs.c, cs.field.q);
                    }
                }
                ExitCode::SUCCESS
            }
            CodeCmd::Detect {
                file,
                dx,
                dz,
                budget,
            } => {
                let text = match fs::read_to_string(&file) {
                    Ok(t) => t,
                    Err(e) => return invalid(format!("{file}: {e}")),
                };
                let (field, n, rows) = match parse_matrix_file(&text) {
                    Ok(v) => v,
                    Err(e) => return invalid(e),
                };
                let cs = match analyze_code(&field, n, &rows) {
                    Ok(cs) => cs,
                    Err(e) => return invalid(e),
                };
                let det = match detection_check(&cs, dx, dz, budget) {
                    Ok(d) => d,
                    Err(e) => return invalid(e),
                };
                match format {
                    Format::Json => {
                        let doc = json!({
                            "ok": det.ok,
                            "counterexample": det.counterexample.as_ref().map(|v| v.concat()),
                        });
                        println!("{doc}");
                    }
                    _ => {
                        println!("detects dx={dx} dz={dz}: {}", det.ok);
                        if let Some(ce) = &det.counterexample {
                            println!("counterexample: {:?}|{:?}", ce.x, ce.z);
                        }
                    }
                }
                if det.ok {
                    ExitCode::SUCCESS
                } else {
                    ExitCode::from(1)
                }
            }
        },
        Command::Search {
            q,
            n,
            l,
            c,
            dx,
            dz,
            mode,
            trials,
            budget,
            out,
        } => {
            let params = BoundParamsNew {
                q,
                n,
                ell: l,
                c,
                d_x: dx,
                d_z: dz,
            };
            let mode = match mode {
                ModeArg::Random => SearchMode::Random,
                ModeArg::Exhaustive => SearchMode::Exhaustive,
            };
            let mut cfg = SearchConfig::new(params, mode);
            cfg.trials = trials;
            cfg.seed = seed;
            cfg.budget = budget;
            let report = match search_witness(&cfg) {
                Ok(r) => r,
                Err(e) => return invalid(e),
            };
            if let (Some(path), Some(w)) = (&out, &report.witness) {
                let field = match eaqecc_gv::make_field(q, None) {
                    Ok(f) => f,
                    Err(e) => return invalid(e),
                };
                let text = symplectic::format_matrix_file(&field, n as usize, w);
                if let Err(e) = fs::write(path, text) {
                    return invalid(format!("{path}: {e}"));
                }
            }
            match format {
                Format::Json => println!("{}", serde_json::to_string(&report).unwrap()),
                _ => {
                    println!("bound satisfied: {}", report.bound_satisfied);
                    println!("found: {}", report.found);
                    println!("trials used: {}", report.trials_used);
                    println!(
                        "rejected: wrong c {}, failed detection {}",
                        report.rejected_wrong_c, report.rejected_detection
                    );
                    if report.contradiction {
                        println!("CONTRADICTION: bound satisfied but exhaustive search found no witness");
                    }
                    if let Some(w) = &report.witness {
                        println!("witness rows:");
                        for row in w {
                            let cells: Vec<String> = row.iter().map(|e| e.to_string()).collect();
                            println!("  {}", cells.join(" "));
                        }
                    }
                }
            }
            if report.found {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Command::Asymptotic { which } => match which {
            AsymptoticCmd::Check {
                q,
                big_l,
                lambda,
                dx,
                dz,
            } => {
                let p = AsymptoticParams {
                    q,
                    big_l,
                    lambda,
                    delta_x: dx,
                    delta_z: dz,
                };
                match asymptotic::check_asymptotic(&p) {
                    Ok(verdict) => {
                        let label = match verdict {
                            Feasibility::Feasible => "feasible",
                            Feasibility::Boundary => "boundary",
                            Feasibility::Infeasible => "infeasible",
                        };
                        match format {
                            Format::Json => println!(
                                "{}",
                                json!({ "verdict": label, "rate": p.rate() })
                            ),
                            _ => println!("{label} (rate 1 - L + lambda = {})", p.rate()),
                        }
                        ExitCode::SUCCESS
                    }
                    Err(e) => invalid(e),
                }
            }
            AsymptoticCmd::Curve {
                q,
                big_l,
                points,
                out,
            } => {
                if points < 2 {
                    return invalid("--points must be at least 2");
                }
                match asymptotic::curve(q, big_l, points) {
                    Ok(samples) => {
                        let csv = asymptotic::curve_csv(&samples);
                        if let Err(e) = fs::write(&out, csv) {
                            return invalid(format!("{out}: {e}"));
                        }
                        println!("wrote {points} samples to {out}");
                        ExitCode::SUCCESS
                    }
                    Err(e) => invalid(e),
                }
            }
        },
    }
}

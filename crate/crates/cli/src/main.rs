mod svg;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use dumont::bijections as bij;
use dumont::dumont::{count, distribution_by_name, generate};
use dumont::harness::{self, Verdict};
use dumont::objects::LatticePath;
use dumont::series::{gf, tau, Series};
use dumont::{DumontKind, DyckPath, Error, NoncrossingPartition, Permutation, Result};

#[derive(Parser)]
#[command(name = "dumont", version, about = "Pattern-avoiding Dumont permutations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List Dumont permutations of length 2n, one per line.
    Gen {
        #[arg(long)]
        kind: DumontKind,
        #[arg(long)]
        n: usize,
        /// Comma-separated patterns to avoid.
        #[arg(long, value_delimiter = ',')]
        avoid: Vec<Permutation>,
        #[arg(long)]
        count_only: bool,
    },
    /// Number of Dumont permutations of length 2n.
    Count {
        #[arg(long)]
        kind: DumontKind,
        #[arg(long)]
        n: usize,
        #[arg(long, value_delimiter = ',')]
        avoid: Vec<Permutation>,
    },
    /// Joint distribution of statistics.
    Stats {
        #[arg(long)]
        kind: DumontKind,
        #[arg(long)]
        n: usize,
        #[arg(long, value_delimiter = ',')]
        avoid: Vec<Permutation>,
        /// Comma-separated statistic names, e.g. fix,two_cycles.
        #[arg(long, value_delimiter = ',', required = true)]
        by: Vec<String>,
    },
    /// Apply a bijection to one object.
    Biject {
        #[arg(long)]
        map: MapName,
        #[arg(long)]
        input: String,
    },
    /// Coefficients of a named series.
    Series {
        /// catalan, schroder, a, b, f, Lk, Aqtx, Atau:T, Btau:T, Ctau:T, r, C2, pairb
        #[arg(long)]
        name: String,
        #[arg(long, default_value_t = 10)]
        order: usize,
        /// Index for Lk.
        #[arg(long, allow_hyphen_values = true)]
        k: Option<i64>,
    },
    /// Run one check or all of them.
    Verify {
        /// Check id, or `all`.
        #[arg(long, default_value = "all")]
        check: String,
        #[arg(long)]
        max_n: Option<usize>,
        /// Also write the full report as JSON.
        #[arg(long)]
        json: Option<PathBuf>,
        /// Print the catalog instead of running it.
        #[arg(long)]
        list: bool,
    },
    /// Write an SVG picture of a Dyck path or a board.
    Plot {
        #[arg(long = "type")]
        kind: PlotKind,
        #[arg(long)]
        input: String,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum PlotKind {
    Dyck,
    Board,
}

#[derive(Clone, Copy, ValueEnum)]
enum MapName {
    F1,
    F1inv,
    F2,
    F2inv,
    Phi,
    PhiInv,
    #[value(name = "phiR")]
    PhiR,
    #[value(name = "phiR-inv")]
    PhiRInv,
    Psi,
    PsiInv,
    G1,
    G1inv,
    G2,
    G2inv,
    #[value(name = "d2-321")]
    D2321,
    #[value(name = "d2-321-inv")]
    D2321Inv,
    PhiEven,
    PhiEvenInv,
    PsiNc,
    PsiNcInv,
    SplitBoards,
    MergeBoards,
    LowerToPath,
    PathToLower,
}

/// Distinguishes failures reported with exit code 2 from input errors.
enum Failure {
    Input(Error),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli.command) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Input(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(Failure::Verification(out)) => {
            print!("{out}");
            ExitCode::from(2)
        }
    }
}

fn run(cmd: Command) -> std::result::Result<String, Failure> {
    Ok(match cmd {
        Command::Gen { kind, n, avoid, count_only } => {
            if count_only {
                format!("{}\n", count(kind, n, &avoid))
            } else {
                generate(kind, n, &avoid).map(|p| format!("{p}\n")).collect()
            }
        }
        Command::Count { kind, n, avoid } => format!("{}\n", count(kind, n, &avoid)),
        Command::Stats { kind, n, avoid, by } => {
            let names: Vec<&str> = by.iter().map(String::as_str).collect();
            let table = distribution_by_name(kind, n, &avoid, &names)?;
            let mut out = format!("{}\tcount\n", by.join("\t"));
            for (key, c) in table {
                let cols: Vec<String> = key.iter().map(|v| v.to_string()).collect();
                out.push_str(&format!("{}\t{c}\n", cols.join("\t")));
            }
            out
        }
        Command::Biject { map, input } => format!("{}\n", biject(map, &input)?),
        Command::Series { name, order, k } => format!("{}\n", series(&name, order, k)?),
        Command::Verify { check, max_n, json, list } => return verify(&check, max_n, json, list),
        Command::Plot { kind, input, out } => {
            let text = match kind {
                PlotKind::Dyck => svg::dyck(&input.parse::<DyckPath>()?),
                PlotKind::Board => svg::board(&input.parse::<Permutation>()?),
            };
            std::fs::write(&out, text).map_err(|e| io_error(&out, e))?;
            String::new()
        }
    })
}

fn io_error(path: &std::path::Path, e: std::io::Error) -> Failure {
    Failure::Input(Error::Precondition {
        op: "write",
        condition: format!("{}: {e}", path.display()),
    })
}

fn parse_board_pair(input: &str) -> Result<bij::BoardPair> {
    let Some((u, l)) = input.split_once('/') else {
        return Err(Error::Parse {
            what: "board pair",
            input: input.to_string(),
            reason: "expected UPPER/LOWER".into(),
        });
    };
    bij::BoardPair::new(u.trim().parse()?, l.trim().parse()?)
}

/// Lower-board paths start at `(n, 0)`, and `n` is the number of north steps.
fn parse_board_path(input: &str) -> Result<LatticePath> {
    let n = input.chars().filter(|c| c.eq_ignore_ascii_case(&'n')).count() as i64;
    LatticePath::parse((n, 0), input)
}

fn biject(map: MapName, input: &str) -> Result<String> {
    let p = || input.parse::<Permutation>();
    let d = || input.parse::<DyckPath>();
    Ok(match map {
        MapName::F1 => bij::f1(&p()?)?.to_string(),
        MapName::F1inv => bij::f1_inverse(&p()?)?.to_string(),
        MapName::F2 => bij::f2(&p()?)?.to_string(),
        MapName::F2inv => bij::f2_inverse(&p()?)?.to_string(),
        MapName::Phi => bij::phi_krat(&p()?)?.to_string(),
        MapName::PhiInv => bij::phi_krat_inverse(&d()?)?.to_string(),
        MapName::PhiR => bij::phi_r(&p()?)?.to_string(),
        MapName::PhiRInv => bij::phi_r_inverse(&d()?)?.to_string(),
        MapName::Psi => bij::psi_eli(&p()?)?.to_string(),
        MapName::PsiInv => bij::psi_eli_inverse(&d()?)?.to_string(),
        MapName::G1 => d()?.g1().to_string(),
        MapName::G1inv => d()?.g1_inverse()?.to_string(),
        MapName::G2 => d()?.g2().to_string(),
        MapName::G2inv => d()?.g2_inverse()?.to_string(),
        MapName::D2321 => bij::d2_321_to_dyck(&p()?)?.to_string(),
        MapName::D2321Inv => bij::d2_321_from_dyck(&d()?)?.to_string(),
        MapName::PhiEven => bij::phi_even(&p()?)?.to_string(),
        MapName::PhiEvenInv => bij::phi_even_inverse(&p()?)?.to_string(),
        MapName::PsiNc => bij::psi_nc(&p()?)?.to_string(),
        MapName::PsiNcInv => {
            let part: NoncrossingPartition = input.parse()?;
            bij::psi_nc_inverse(&part)?.to_string()
        }
        MapName::SplitBoards => {
            let bp = bij::split_boards(&p()?)?;
            format!("{}/{}", bp.upper, bp.lower)
        }
        MapName::MergeBoards => bij::merge_boards(&parse_board_pair(input)?)?.to_string(),
        MapName::LowerToPath => bij::lower_board_to_path(&p()?)?.to_string(),
        MapName::PathToLower => bij::path_to_lower_board(&parse_board_path(input)?)?.to_string(),
    })
}

fn integers<T: ToString>(values: impl IntoIterator<Item = T>) -> String {
    values.into_iter().map(|v| v.to_string()).collect::<Vec<_>>().join(", ")
}

fn series(name: &str, order: usize, k: Option<i64>) -> Result<String> {
    let pattern = |prefix: &str| name.strip_prefix(prefix).map(str::parse::<Permutation>);
    if let Some(t) = pattern("Atau:") {
        return Ok(tau::a_tau(&t?, order)?.to_string());
    }
    if let Some(t) = pattern("Btau:") {
        return Ok(tau::b_tau(&t?, order)?.to_string());
    }
    if let Some(t) = pattern("Ctau:") {
        return Ok(tau::c_tau(&t?, order)?.to_string());
    }
    let s: Series = match name {
        "catalan" => gf::catalan_series(order),
        "schroder" => gf::schroder_s(order),
        "f" => gf::ternary_f(order),
        "Lk" => {
            let k = k.ok_or_else(|| Error::Precondition { op: "Lk", condition: "--k is required".into() })?;
            gf::l_k_series(k, order)?
        }
        "Aqtx" => return Ok(gf::a_qtx_closed_form(order)?.to_string()),
        "a" => return Ok(integers((0..=order).map(gf::a_seq))),
        "b" => return Ok(integers(gf::b_seq_table(order))),
        "r" => return Ok(integers((0..=order).map(gf::large_schroder))),
        "C2" => return Ok(integers((0..=order).map(gf::generalized_catalan_c2))),
        "pairb" => return Ok(integers((0..=order).map(gf::pair_b))),
        _ => {
            return Err(Error::Parse {
                what: "series name",
                input: name.to_string(),
                reason: "expected catalan, schroder, a, b, f, Lk, Aqtx, Atau:T, Btau:T, Ctau:T, r, C2 or pairb".into(),
            })
        }
    };
    Ok(s.to_string())
}

fn verify(check: &str, max_n: Option<usize>, json: Option<PathBuf>, list: bool) -> std::result::Result<String, Failure> {
    if list {
        let mut out = String::new();
        for c in harness::list_checks() {
            let exp = match c.expectation {
                harness::Expectation::MustPass => "must_pass",
                harness::Expectation::Suspect => "suspect",
            };
            out.push_str(&format!("{}\t{exp}\t{}\t{}\n", c.id, c.default_max_n, c.description));
        }
        return Ok(out);
    }
    let summary = if check == "all" {
        harness::run_all(max_n)?
    } else {
        let r = harness::run_check(check, max_n)?;
        harness::Summary {
            passed: usize::from(r.verdict == Verdict::Pass),
            failed: usize::from(r.verdict == Verdict::Fail),
            documented: usize::from(r.verdict == Verdict::DiscrepancyDocumented),
            reports: vec![r],
        }
    };
    let mut out = String::new();
    for r in &summary.reports {
        out.push_str(&format!("{:<44} {:<22} n<={}", r.id, r.verdict.to_string(), r.max_n));
        if !r.mismatched_n.is_empty() {
            out.push_str(&format!("  mismatched n: {}", integers(&r.mismatched_n)));
        }
        out.push('\n');
    }
    out.push_str(&format!(
        "{} passed, {} failed, {} documented discrepancies\n",
        summary.passed, summary.failed, summary.documented
    ));
    if let Some(path) = json {
        std::fs::write(&path, summary.to_json() + "\n").map_err(|e| io_error(&path, e))?;
    }
    if summary.must_pass_failures().is_empty() {
        Ok(out)
    } else {
        Err(Failure::Verification(out))
    }
}

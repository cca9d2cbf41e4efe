use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use cqg_core::constructions::{
    andruskiewitsch_conditions, build_twist, drinfeld_double, dual, twist_product, verify_cocycle_linked_pair,
    verify_singer_conditions,
};
use cqg_core::groups::{
    build_group_bismash, encode_as_linked_pair, generate_example, verify_alpha, verify_matched_pair_groups,
    verify_sigma_tau, ExampleKind, GroupCocycleData,
};
use cqg_core::hopf::examples::{function_algebra, group_algebra};
use cqg_core::numeric::{thresholds, RootOfUnity};
use cqg_core::star::{is_cqg, verify_all, StarHopfAlgebra};
use cqg_core::{io, Error, VerificationReport, DEFAULT_TOL};

/// Finite Hopf *-algebras from structure constants.
#[derive(Parser)]
#[command(name = "cqg", version)]
struct Cli {
    /// Residual tolerance (default: $CQG_TOL, else 1e-9).
    #[arg(long, global = true)]
    tol: Option<f64>,
    /// Pivot threshold of the linear solvers.
    #[arg(long, global = true)]
    pivot_tol: Option<f64>,
    /// Magnitude below which solver output is pruned to zero.
    #[arg(long, global = true)]
    prune_tol: Option<f64>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build an algebra and write it as a Hopf file.
    Build {
        #[command(subcommand)]
        what: Build,
    },
    /// Full axiom, star and integral suite.
    Verify {
        #[arg(long)]
        hopf: PathBuf,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Exit 0 iff the algebra is a compact quantum group.
    CheckCqg {
        #[arg(long)]
        hopf: PathBuf,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// σ/τ/α conditions and the linked-pair encodings of a group pair.
    CheckConditions {
        #[arg(long)]
        pair: PathBuf,
        #[arg(long)]
        report: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum Build {
    GroupAlgebra {
        #[arg(long)]
        group: PathBuf,
        #[arg(short = 'o', long = "out")]
        out: PathBuf,
    },
    FunctionAlgebra {
        #[arg(long)]
        group: PathBuf,
        #[arg(short = 'o', long = "out")]
        out: PathBuf,
    },
    /// ℂ^G#_{σ,τ}ℂF from a pair file.
    Bismash {
        #[arg(long)]
        pair: PathBuf,
        #[arg(short = 'o', long = "out")]
        out: PathBuf,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Drinfel'd double.
    Double {
        #[arg(long)]
        hopf: PathBuf,
        #[arg(short = 'o', long = "out")]
        out: PathBuf,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Twist of the product by a cocycle.
    Twist {
        #[arg(long)]
        hopf: PathBuf,
        #[arg(long)]
        cocycle: PathBuf,
        #[arg(short = 'o', long = "out")]
        out: PathBuf,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    Dual {
        #[arg(long)]
        hopf: PathBuf,
        #[arg(short = 'o', long = "out")]
        out: PathBuf,
    },
    /// One of the parametric group examples.
    Example {
        #[arg(long)]
        which: ExampleKind,
        #[arg(long)]
        n: usize,
        /// ζ as k/m, meaning exp(2πi k/m).
        #[arg(long)]
        zeta: RootOfUnity,
        #[arg(long)]
        eta: RootOfUnity,
        #[arg(short = 'o', long = "out")]
        out: PathBuf,
        /// Also write the group pair and cocycle tables.
        #[arg(long)]
        pair_out: Option<PathBuf>,
        #[arg(long)]
        report: Option<PathBuf>,
    },
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::InvalidInput(_) | Error::Io(_) | Error::DimensionMismatch(_) => 2,
        _ => 1,
    }
}

fn tolerance(cli: &Cli) -> Result<f64, Error> {
    if let Some(t) = cli.tol {
        return Ok(t);
    }
    match std::env::var("CQG_TOL") {
        Ok(s) => s.trim().parse().map_err(|_| Error::InvalidInput(format!("CQG_TOL={s:?} is not a number"))),
        Err(_) => Ok(DEFAULT_TOL),
    }
}

fn load_hopf(p: &Path) -> Result<StarHopfAlgebra, Error> {
    io::hopf_from_json(&io::read_file(p)?)
}

fn save_hopf(h: &StarHopfAlgebra, p: &Path) -> Result<(), Error> {
    io::write_file(p, &io::hopf_to_json(h))?;
    println!("wrote {} (dim {}, star {})", p.display(), h.dim, if h.star.is_some() { "yes" } else { "no" });
    Ok(())
}

fn show(r: &VerificationReport, path: Option<&Path>) -> Result<bool, Error> {
    print!("{}", r.to_text());
    if let Some(p) = path {
        io::emit_report(r, p)?;
    }
    Ok(r.overall())
}

fn build(what: &Build, tol: f64) -> Result<bool, Error> {
    match what {
        Build::GroupAlgebra { group, out } => {
            save_hopf(&group_algebra(&io::group_from_json(&io::read_file(group)?)?), out)?;
            Ok(true)
        }
        Build::FunctionAlgebra { group, out } => {
            save_hopf(&function_algebra(&io::group_from_json(&io::read_file(group)?)?), out)?;
            Ok(true)
        }
        Build::Bismash { pair, out, report } => {
            let (p, c) = io::pair_from_json(&io::read_file(pair)?)?;
            let c = c.unwrap_or_else(|| GroupCocycleData::trivial(&p));
            let b = build_group_bismash(&p, &c, tol)?;
            save_hopf(&b.algebra, out)?;
            show(&b.report, report.as_deref())
        }
        Build::Double { hopf, out, report } => {
            let b = drinfeld_double(&load_hopf(hopf)?, tol)?;
            save_hopf(&b.algebra, out)?;
            show(&b.report, report.as_deref())
        }
        Build::Twist { hopf, cocycle, out, report } => {
            let h = load_hopf(hopf)?;
            let (n, chi) = io::cocycle_from_json(&io::read_file(cocycle)?)?;
            if n != h.dim {
                return Err(Error::DimensionMismatch(format!("cocycle is for dim {n}, algebra has dim {}", h.dim)));
            }
            let t = build_twist(&h, &chi, tol)?;
            let b = match twist_product(&h, &t, tol) {
                Err(Error::StarCompatFailed(why)) => {
                    eprintln!("warning: star dropped ({why})");
                    twist_product(&h.without_star(), &t, tol)?
                }
                other => other?,
            };
            save_hopf(&b.algebra, out)?;
            show(&b.report, report.as_deref())
        }
        Build::Dual { hopf, out } => {
            save_hopf(&dual(&load_hopf(hopf)?), out)?;
            Ok(true)
        }
        Build::Example { which, n, zeta, eta, out, pair_out, report } => {
            let (p, c) = generate_example(*which, *n, *zeta, *eta)?;
            if let Some(pp) = pair_out {
                io::write_file(pp, &io::pair_to_json(&p, Some(&c)))?;
            }
            let b = build_group_bismash(&p, &c, tol)?;
            save_hopf(&b.algebra, out)?;
            show(&b.report, report.as_deref())
        }
    }
}

fn check_conditions(pair: &Path, report: Option<&Path>, tol: f64) -> Result<bool, Error> {
    let (p, c) = io::pair_from_json(&io::read_file(pair)?)?;
    let c = c.unwrap_or_else(|| GroupCocycleData::trivial(&p));
    let mut r = VerificationReport::new("conditions", tol);
    let mp = verify_matched_pair_groups(&p);
    r.merge("", &mp);
    if !mp.overall() {
        return show(&r, report);
    }
    r.merge("", &verify_sigma_tau(&p, &c, tol));
    if c.alpha.is_some() {
        r.merge("alpha:", &verify_alpha(&p, &c, tol));
    }
    let d = encode_as_linked_pair(&p, &c)?;
    r.merge("linked-pair:", &verify_cocycle_linked_pair(&d, tol));
    r.merge("singer:", &verify_singer_conditions(&d, tol)?);
    r.merge("and:", &andruskiewitsch_conditions(&d, tol)?);
    show(&r, report)
}

fn run(cli: &Cli) -> Result<bool, Error> {
    let tol = tolerance(cli)?;
    if let Some(x) = cli.pivot_tol {
        thresholds::set_pivot(x);
    }
    if let Some(x) = cli.prune_tol {
        thresholds::set_prune(x);
    }
    match &cli.cmd {
        Cmd::Build { what } => build(what, tol),
        Cmd::Verify { hopf, report } => show(&verify_all(&load_hopf(hopf)?, tol), report.as_deref()),
        Cmd::CheckCqg { hopf, report } => {
            let h = load_hopf(hopf)?;
            let v = is_cqg(&h, tol)?;
            println!("min eigenvalue {:.17e}", v.min_eigenvalue);
            println!("{}", if v.cqg { "compact quantum group" } else { "not a compact quantum group" });
            if let Some(p) = report {
                io::emit_report(&v.report, p)?;
            }
            Ok(v.cqg)
        }
        Cmd::CheckConditions { pair, report } => check_conditions(pair, report.as_deref(), tol),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

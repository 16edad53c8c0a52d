//! `khess`: exact checks of cubic surfaces whose Hessian is a Kummer
//! surface. Every invocation prints one JSON document on stdout;
//! summaries go to stderr.
//!
//! Pentahedral coefficients are given as `--mu mu0,mu1,mu2,mu3,mu4`, each an
//! integer or `p/q`. The index order matters.

mod battery;
mod report;

use std::process::ExitCode;

use clap::{Parser, Subcommand};
use num_traits::Zero;
use serde_json::{json, Value};

use kummer_hessian::correspondence::{
    branch_to_mu, mu_to_branch, plane_equation, plane_points, points_rank, r_form_numeric, r_second_factor,
    BranchTriple, Normalization,
};
use kummer_hessian::cyclic::{unoriented_orders, CyclicOrder};
use kummer_hessian::hessian::{
    branch_sextic_factorization, cubic_is_smooth, tangent_plane_section, verify_hessian_identity,
};
use kummer_hessian::invariant::{alpha_of, cubic_condition};
use kummer_hessian::kummer::{enumerate_weber_hexads, incidence_profile, is_weber_hexad, Hexad};
use kummer_hessian::sampling::DEFAULT_SEED;
use kummer_hessian::scalar::{int, parse_rational};
use kummer_hessian::{Error, PentahedralData};

use report::{all_passed, Report};

#[derive(Parser)]
#[command(name = "khess", version, about = "Exact checks for Kummer-Hessian cubic surfaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate F, alpha and Kummer-locus membership.
    Check {
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
    },
    /// Hessian identity, branch sextic, tangent planes and smoothness.
    HessianVerify {
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
    },
    /// Branch triple to pentahedral coefficients.
    ToMu {
        #[arg(long, default_value = "s5", value_parser = parse_variant)]
        variant: Normalization,
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        #[arg(long, allow_hyphen_values = true)]
        e: String,
    },
    /// Pentahedral coefficients to a branch triple.
    ToBranch {
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        #[arg(long, default_value = "s5", value_parser = parse_variant)]
        variant: Normalization,
    },
    /// Plane equations of the conics labelled by cyclic orders.
    Planes {
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        /// A single cyclic order such as `03214`; all twelve classes if absent.
        #[arg(long)]
        order: Option<String>,
    },
    /// Weber hexads.
    Hexads {
        #[command(subcommand)]
        action: HexadAction,
    },
    /// The full verification battery.
    VerifyAll {
        #[arg(long, env = "KHESS_SEED", default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum HexadAction {
    Enumerate {
        #[arg(long)]
        count_only: bool,
    },
    /// Test six two-torsion labels, e.g. `0,bc,cd,de,ef,bf`.
    Check {
        #[arg(long)]
        points: String,
    },
}

fn parse_variant(s: &str) -> Result<Normalization, String> {
    s.parse().map_err(|_| "expected `s5` or `s1`".to_string())
}

/// A JSON document and whether every requested check passed.
struct Output {
    doc: Value,
    ok: bool,
}

fn done(doc: Value) -> Output {
    Output { doc, ok: true }
}

fn error_doc(code: &str, message: impl std::fmt::Display) -> Value {
    json!({ "error": { "code": code, "message": message.to_string() } })
}

fn print(doc: &Value) {
    use std::io::Write;
    // a closed pipe downstream is not our failure
    let _ = writeln!(std::io::stdout().lock(), "{}", serde_json::to_string_pretty(doc).expect("serializable"));
}

fn mu_json(d: &PentahedralData) -> Value {
    json!(d.mu().iter().map(ToString::to_string).collect::<Vec<_>>())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = e.print();
                return ExitCode::SUCCESS;
            }
            let code = match e.kind() {
                ErrorKind::InvalidSubcommand => "unknown_subcommand",
                ErrorKind::MissingRequiredArgument => "missing_argument",
                ErrorKind::ValueValidation | ErrorKind::InvalidValue => "invalid_argument",
                _ => "usage",
            };
            let text = e.to_string();
            print(&error_doc(code, text.trim_start_matches("error: ").trim_end()));
            return ExitCode::from(2);
        }
    };
    match run(cli.command) {
        Ok(out) => {
            print(&out.doc);
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(e) => {
            eprintln!("khess: {e}");
            print(&error_doc(e.code(), &e));
            ExitCode::FAILURE
        }
    }
}

fn run(command: Command) -> Result<Output, Error> {
    match command {
        Command::Check { mu } => check(&PentahedralData::parse(&mu)?),
        Command::HessianVerify { mu } => hessian_verify(&PentahedralData::parse(&mu)?),
        Command::ToMu { variant, a, b, e } => {
            let t = BranchTriple::new(parse_rational(&a)?, parse_rational(&b)?, parse_rational(&e)?, variant)?;
            let d = branch_to_mu(&t)?;
            Ok(done(json!({
                "triple": t,
                "mu": mu_json(&d),
                "mu_text": d.to_string(),
                "F": cubic_condition(&d).to_string(),
            })))
        }
        Command::ToBranch { mu, variant } => {
            let d = PentahedralData::parse(&mu)?;
            let t = mu_to_branch(&d, variant)?;
            Ok(done(json!({
                "mu": mu_json(&d),
                "triple": t,
                "branch_points": t.branch_points(),
            })))
        }
        Command::Planes { mu, order } => planes(&PentahedralData::parse(&mu)?, order.as_deref()),
        Command::Hexads { action: HexadAction::Enumerate { count_only } } => {
            let all = enumerate_weber_hexads();
            eprintln!("{} Weber hexads", all.len());
            if count_only {
                Ok(done(json!(all.len())))
            } else {
                Ok(done(json!({ "count": all.len(), "hexads": all })))
            }
        }
        Command::Hexads { action: HexadAction::Check { points } } => {
            let h = Hexad::parse(&points)?;
            let weber = is_weber_hexad(&h);
            let profile: Vec<Value> = incidence_profile(&h)
                .into_iter()
                .map(|(t, n)| json!({ "trope": t, "points": n }))
                .collect();
            Ok(Output {
                doc: json!({ "hexad": h, "weber": weber, "profile": profile }),
                ok: weber,
            })
        }
        Command::VerifyAll { seed } => {
            let reports = battery::run_all(seed);
            for r in &reports {
                eprintln!("{:<28} {:?} ({:.1} ms)", r.check, r.status, r.elapsed_ms);
            }
            let ok = all_passed(&reports);
            let passed = reports.iter().filter(|r| r.passed()).count();
            eprintln!("{passed} of {} checks passed", reports.len());
            Ok(Output {
                doc: json!({ "seed": seed, "passed": passed, "total": reports.len(), "reports": reports }),
                ok,
            })
        }
    }
}

fn check(d: &PentahedralData) -> Result<Output, Error> {
    let f = cubic_condition(d);
    let alpha = match alpha_of(d) {
        Ok(a) => a.to_string(),
        Err(Error::AlphaUndefined) => "undefined".to_string(),
        Err(e) => return Err(e),
    };
    Ok(done(json!({
        "mu": mu_json(d),
        "F": f.to_string(),
        "kummer": f.is_zero(),
        "alpha": alpha,
        "smooth": cubic_is_smooth(d),
    })))
}

fn hessian_verify(d: &PentahedralData) -> Result<Output, Error> {
    let expected = int(1296) / d.mu().iter().fold(int(1), |acc, m| acc * m);
    let reports = vec![
        Report::timed("hessian_identity", || {
            let c = verify_hessian_identity(d).map_err(|e| e.to_string())?;
            Ok((c == expected, json!({ "ratio": c.to_string(), "expected": expected.to_string() })))
        }),
        Report::timed("branch_sextic", || {
            let b = branch_sextic_factorization(d).map_err(|e| e.to_string())?;
            Ok((
                !b.ratio.is_zero(),
                json!({
                    "ratio": b.ratio.to_string(),
                    "discriminant": b.discriminant.to_string(),
                    "product": b.product.to_string(),
                }),
            ))
        }),
        Report::timed("tangent_planes", || {
            let mut sections = Vec::new();
            let mut ok = true;
            for i in 0..5 {
                for j in (0..5).filter(|&j| j != i) {
                    let s = tangent_plane_section(d, i, j).map_err(|e| e.to_string())?;
                    ok &= s.scale == -(&d.mu()[j] / &d.mu()[i]);
                    sections.push(json!({
                        "plane": format!("X{j} = -mu{j}/mu{i} X{i}"),
                        "conic": s.conic.to_string(),
                        "scale": s.scale.to_string(),
                    }));
                }
            }
            Ok((ok, Value::Array(sections)))
        }),
        Report::timed("smooth", || {
            let smooth = cubic_is_smooth(d);
            Ok((smooth, json!(smooth)))
        }),
    ];
    Ok(Output {
        ok: all_passed(&reports),
        doc: json!({ "mu": mu_json(d), "reports": reports }),
    })
}

fn planes(d: &PentahedralData, order: Option<&str>) -> Result<Output, Error> {
    let orders: Vec<CyclicOrder> = match order {
        Some(o) => vec![o.parse()?],
        None => unoriented_orders().into_iter().collect(),
    };
    let mut ok = true;
    let mut entries = Vec::new();
    for o in orders {
        let pts = plane_points(d, o)?;
        let rank = points_rank(&pts);
        let plane = match plane_equation(&pts) {
            Ok(c) => json!(c.iter().map(ToString::to_string).collect::<Vec<_>>()),
            Err(Error::PointsNotCoplanar(_)) => {
                ok = false;
                Value::Null
            }
            Err(e) => return Err(e),
        };
        entries.push(json!({
            "order": o,
            "points": pts.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "rank": rank,
            "plane": plane,
        }));
    }
    let mut doc = json!({ "mu": mu_json(d), "kummer": cubic_condition(d).is_zero(), "planes": entries });
    if let (Ok(r), Ok(second)) = (r_form_numeric(d), r_second_factor(d)) {
        doc["R"] = json!({ "form": r.to_string(), "second_factor": second.to_string() });
    }
    Ok(Output { doc, ok })
}

//! `hypercheck`: JSON front end for the hyperbolicity decision procedures.
//!
//! Exit codes: 0 when decided or no counterexample was found, 2 when a
//! polynomial is shown not hyperbolic, 1 on any error.

use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use hypercheck_core::hyperbolicity::{
    cone_member, conjecture_case, cubic_normal_form, decide_cubic, decide_quartic_hook,
    ek_plus_linear_check, falsify_hyperbolicity, sample_delta_one_one, SearchBudget, Status,
};
use hypercheck_core::json as js;
use hypercheck_core::operators::{
    apply, associated_operator, decide_extendable, decide_extendable_target, g0,
    necessary_sign_test, operator_to_hook, phi, phi_default_width, DiagonalMap,
};
use hypercheck_core::poly::Poly;
use hypercheck_core::rational::{parse_q, q};
use hypercheck_core::sympoly::{quintic_example, HookPoly, SymPoint};
use hypercheck_core::unipoly::{proportional, UniPoly, ZeroSumPoly};
use hypercheck_core::{HyperError, Q};

#[derive(Parser)]
#[command(name = "hypercheck", version, about = "Exact hyperbolicity checks for symmetric polynomials")]
struct Cli {
    /// Indent output and add decimal approximations under "approx".
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

/// JSON payloads are given inline or as `@path`.
#[derive(Subcommand)]
enum Cmd {
    /// Decide a m1^3 + b m1 m2 + c m3 exactly.
    CheckCubic {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        #[arg(long, allow_hyphen_values = true)]
        c: String,
        #[arg(long)]
        n: usize,
    },
    /// Decide a hook quartic exactly.
    CheckQuartic {
        #[arg(long)]
        hook: String,
    },
    /// Associated diagonal map of a hook polynomial.
    Operator {
        #[arg(long)]
        hook: String,
    },
    /// Hook polynomial of a diagonal map.
    HookOf {
        #[arg(long)]
        map: String,
    },
    /// The polynomial g0 = delta_n((t - 1)^n).
    G0 {
        #[arg(long)]
        n: usize,
    },
    /// Decide extendability of a diagonal map, or of the map with T(g0) = target.
    Extend {
        #[arg(long, conflicts_with = "target", required_unless_present = "target")]
        map: Option<String>,
        #[arg(long)]
        target: Option<String>,
        /// Number of variables, to also report the map for a target.
        #[arg(long)]
        n: Option<usize>,
    },
    /// Root-simplex map on a weakly decreasing point of the simplex.
    Phi {
        /// Comma-separated rationals.
        #[arg(long, allow_hyphen_values = true)]
        roots: String,
    },
    /// Search for a point whose line has non-real roots.
    Falsify {
        #[arg(long)]
        hook: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Grid size, or a JSON search budget.
        #[arg(long)]
        budget: Option<String>,
    },
    /// Hyperbolicity-cone membership of a point.
    ConeMember {
        #[arg(long)]
        hook: String,
        #[arg(long)]
        point: String,
    },
    /// Evidence for the hook polynomial built from a target.
    Conjecture {
        #[arg(long)]
        target: String,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Random points for the mixed-derivative probe.
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
    },
    /// Reduce a hyperbolic cubic to c1 m3 + c2 m1 m2.
    NormalForm {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        #[arg(long, allow_hyphen_values = true)]
        c: String,
        #[arg(long)]
        n: usize,
    },
    /// Check e_k + l e_(k-1) on random lines.
    EkCheck {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        /// Comma-separated coefficients of l; defaults to zero.
        #[arg(long, allow_hyphen_values = true)]
        ell: Option<String>,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Full pipeline for the quintic 4500 e5 - 220 e1 e4 + 7 e1^2 e3.
    DemoQuintic {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
    },
}

type CmdResult = Result<(Value, bool), HyperError>;

fn read_payload(arg: &str) -> Result<String, HyperError> {
    match arg.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| HyperError::InvalidInput(format!("cannot read {path}: {e}"))),
        None => Ok(arg.to_string()),
    }
}

fn parse_json<T: serde::de::DeserializeOwned>(arg: &str, what: &str) -> Result<T, HyperError> {
    let text = read_payload(arg)?;
    serde_json::from_str(&text).map_err(|e| HyperError::InvalidInput(format!("{what}: {e}")))
}

fn parse_list(s: &str) -> Result<Vec<Q>, HyperError> {
    s.split(',').map(|x| parse_q(x.trim())).collect()
}

fn verdict_out(v: &hypercheck_core::hyperbolicity::Verdict) -> (Value, bool) {
    (js::verdict(v), v.status == Status::NotHyperbolic)
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable")
}

fn budget_from(arg: Option<&str>, seed: u64) -> Result<SearchBudget, HyperError> {
    let mut b = match arg {
        None => SearchBudget::default(),
        Some(s) => match s.trim().parse::<usize>() {
            Ok(grid) => SearchBudget {
                grid,
                ..SearchBudget::default()
            },
            Err(_) => parse_json(s, "budget")?,
        },
    };
    b.seed = seed;
    Ok(b)
}

fn run(cmd: Cmd) -> CmdResult {
    match cmd {
        Cmd::CheckCubic { a, b, c, n } => {
            let v = decide_cubic(&parse_q(&a)?, &parse_q(&b)?, &parse_q(&c)?, n)?;
            Ok(verdict_out(&v))
        }
        Cmd::CheckQuartic { hook } => {
            let p: HookPoly = parse_json(&hook, "hook")?;
            Ok(verdict_out(&decide_quartic_hook(&p)?))
        }
        Cmd::Operator { hook } => {
            let p: HookPoly = parse_json(&hook, "hook")?;
            Ok((to_value(&associated_operator(&p)), false))
        }
        Cmd::HookOf { map } => {
            let t: DiagonalMap = parse_json(&map, "map")?;
            Ok((to_value(&operator_to_hook(&t)?), false))
        }
        Cmd::G0 { n } => Ok((to_value(&g0(n)?), false)),
        Cmd::Extend { map, target, n } => {
            if let Some(m) = map {
                let t: DiagonalMap = parse_json(&m, "map")?;
                let (ok, cert) = decide_extendable(&t);
                return Ok((js::certificate(ok, &cert), false));
            }
            let target = target.expect("clap enforces one of map and target");
            let g: ZeroSumPoly = parse_json(&target, "target")?;
            let (ok, cert) = decide_extendable_target(&g);
            let mut out = js::certificate(ok, &cert);
            if let Some(n) = n {
                let t = DiagonalMap::from_target(n, &g)?;
                out["map"] = to_value(&t);
            }
            Ok((out, false))
        }
        Cmd::Phi { roots } => {
            let r = parse_list(&roots)?;
            Ok((js::phi_image(&phi(&r, &phi_default_width())?), false))
        }
        Cmd::Falsify { hook, seed, budget } => {
            let p: HookPoly = parse_json(&hook, "hook")?;
            let b = budget_from(budget.as_deref(), seed)?;
            Ok(verdict_out(&falsify_hyperbolicity(&p, &b)?))
        }
        Cmd::ConeMember { hook, point } => {
            let p: HookPoly = parse_json(&hook, "hook")?;
            let x: SymPoint = parse_json(&point, "point")?;
            Ok((json!({ "member": cone_member(&p, &x)? }), false))
        }
        Cmd::Conjecture {
            target,
            n,
            seed,
            samples,
        } => {
            let g: ZeroSumPoly = parse_json(&target, "target")?;
            let r = conjecture_case(&g, n, &SearchBudget::with_seed(seed), samples)?;
            let not_hyp = r.falsifier.status == Status::NotHyperbolic
                || r.exact.as_ref().is_some_and(|v| v.status == Status::NotHyperbolic);
            Ok((js::conjecture(&r), not_hyp))
        }
        Cmd::NormalForm { a, b, c, n } => {
            let nf = cubic_normal_form(&parse_q(&a)?, &parse_q(&b)?, &parse_q(&c)?, n)?;
            Ok((js::normal_form(&nf), false))
        }
        Cmd::EkCheck {
            k,
            n,
            ell,
            trials,
            seed,
        } => {
            let ell = match ell {
                Some(s) => parse_list(&s)?,
                None => vec![q(0); n],
            };
            let r = ek_plus_linear_check(k, n, &ell, trials, seed)?;
            Ok((js::ek_report(&r), false))
        }
        Cmd::DemoQuintic { seed, samples } => demo_quintic(seed, samples),
    }
}

fn demo_quintic(seed: u64, samples: usize) -> CmdResult {
    let p = quintic_example();
    let t = associated_operator(&p);
    let image = apply(&t, &g0(5)?)?;
    let expected = Poly::from_roots(&[q(1), q(1), q(2), q(2), q(-6)]);
    let expected = UniPoly::from_poly(&expected, 5)?;
    let matches = proportional(image.inner().coeffs(), expected.coeffs());
    let (ok, cert) = decide_extendable(&t);
    let falsifier = falsify_hyperbolicity(&p, &SearchBudget::with_seed(seed))?;
    let delta = sample_delta_one_one(&p, samples, seed)?;
    let out = json!({
        "hook": to_value(&p),
        "map": to_value(&t),
        "image_of_g0": to_value(&image),
        "image_proportional_to_expected": matches,
        "necessary_sign_test": necessary_sign_test(&t),
        "extendability": js::certificate(ok, &cert),
        "falsifier": js::verdict(&falsifier),
        "delta_one_one": js::delta_sample(&delta),
    });
    Ok((out, falsifier.status == Status::NotHyperbolic))
}

fn emit(v: Value, pretty: bool) {
    if pretty {
        let v = js::with_approx(v);
        println!("{}", serde_json::to_string_pretty(&v).expect("serializable"));
    } else {
        println!("{}", serde_json::to_string(&v).expect("serializable"));
    }
}

fn error_json(code: &str, message: &str) -> Value {
    json!({ "error": { "code": code, "message": message } })
}

fn configure_threads() -> Result<(), HyperError> {
    if let Ok(s) = std::env::var("HYPERCHECK_THREADS") {
        let n: usize = s
            .trim()
            .parse()
            .map_err(|_| HyperError::InvalidInput(format!("HYPERCHECK_THREADS={s:?} is not a count")))?;
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| HyperError::InvalidInput(format!("thread pool: {e}")))?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = e.print();
                return ExitCode::SUCCESS;
            }
            emit(error_json("Usage", e.to_string().trim()), false);
            return ExitCode::from(1);
        }
    };
    if let Err(e) = configure_threads() {
        emit(error_json(e.code(), &e.to_string()), cli.pretty);
        return ExitCode::from(1);
    }
    match run(cli.cmd) {
        Ok((v, not_hyperbolic)) => {
            emit(v, cli.pretty);
            if not_hyperbolic {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            emit(error_json(e.code(), &e.to_string()), cli.pretty);
            ExitCode::from(1)
        }
    }
}

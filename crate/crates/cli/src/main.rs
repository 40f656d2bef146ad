//! Command-line front end: every analysis reads a game as JSON and writes a
//! single JSON document to stdout. Verdicts are data, not exit codes; a
//! non-weighted game still exits 0. Exit codes: 2 malformed input, 3
//! violated hypothesis, 4 scope cap, 1 internal error.

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use votecert::bounds::{alpha, alpha_bruteforce, hadamard_bound, ALPHA_MAX_N};
use votecert::enumeration::{
    enumerate_monotone, table_statistics, GameFilters, TableRow, ENUM_MAX_N,
};
use votecert::error::{Error, ErrorKind};
use votecert::game::SimpleGame;
use votecert::integer_repr::{integer_representation_full, minimum_representation, Objective};
use votecert::json::{
    self, either::Either, game_from_str, game_to_json, integer_repr_to_json, rough_to_json,
    rounding_to_json, weightedness_from_json, weightedness_to_json, RoughJson, WeightednessJson,
};
use votecert::linalg::{Int, Rational};
use votecert::rough::{decide_rough, PotentCertificate};
use votecert::rounding::{f_eval, find_lambda, scale_by_n, solve_relaxation};
use votecert::weightedness::decide_weighted;
use votecert::TradingTransform;

#[derive(Parser)]
#[command(name = "votecert", version, about = "Weightedness analysis of simple voting games")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format; only "json" is supported.
    #[arg(long, global = true, default_value = "json")]
    format: String,
    /// Worker threads for enumeration sweeps (default: logical cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Structural report: monotonicity, families, passers, null players.
    Analyze {
        /// Game JSON: a path, '-' for stdin, or an inline JSON object.
        #[arg(long)]
        input: String,
    },
    /// Weightedness verdict: rational representation or trading transform.
    Certify {
        #[arg(long)]
        input: String,
        /// Re-verify the emitted certificate from its own JSON.
        #[arg(long)]
        verify: bool,
    },
    /// Bounded integer representation, optionally with a minimum search.
    Represent {
        #[arg(long)]
        input: String,
        /// Also search the minimum representation for this objective
        /// (quota | max_weight | weight_sum).
        #[arg(long)]
        objective: Option<String>,
        #[arg(long)]
        verify: bool,
    },
    /// Relaxation rounding: factor-n and multiplier representations.
    Round {
        #[arg(long)]
        input: String,
        #[arg(long)]
        verify: bool,
        /// Write (x, f(x)) samples of the rounding loss curve as CSV.
        #[arg(long, value_name = "FILE")]
        f_curve: Option<PathBuf>,
    },
    /// Rough-weightedness verdict: representation or potent certificate.
    Rough {
        #[arg(long)]
        input: String,
        #[arg(long)]
        verify: bool,
    },
    /// Emit all monotone games for n = 1..=max_n as JSON lines.
    Enumerate {
        #[arg(long, default_value_t = 4)]
        max_n: usize,
        /// Keep only games with the empty coalition losing and the grand
        /// coalition winning.
        #[arg(long)]
        proper: bool,
        /// Drop games with null players.
        #[arg(long)]
        no_null: bool,
        /// One representative per player-permutation orbit.
        #[arg(long)]
        canonical: bool,
    },
    /// Reproduce the known maxima of minimum representations for n <= max_n.
    Table {
        #[arg(long, default_value_t = 4)]
        max_n: usize,
    },
    /// Alpha table (brute force for n <= 5) and determinant bound report.
    Bounds {
        #[arg(long, default_value_t = ALPHA_MAX_N)]
        max_n: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.format != "json" {
        eprintln!("votecert: unsupported format '{}'", cli.format);
        return ExitCode::from(2);
    }
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("votecert: could not size the worker pool: {e}");
        }
    }
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("votecert: {e}");
            ExitCode::from(match e.kind() {
                ErrorKind::Input => 2,
                ErrorKind::Hypothesis => 3,
                ErrorKind::Scope => 4,
                ErrorKind::Internal => 1,
            })
        }
    }
}

fn internal(msg: impl std::fmt::Display) -> Error {
    Error::Internal(msg.to_string())
}

fn read_game(input: &str) -> Result<SimpleGame, Error> {
    let text = if input.trim_start().starts_with('{') {
        input.to_string()
    } else if input == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Error::InvalidInput(format!("stdin: {e}")))?;
        buf
    } else {
        std::fs::read_to_string(input)
            .map_err(|e| Error::InvalidInput(format!("{input}: {e}")))?
    };
    game_from_str(&text)
}

fn emit<T: serde::Serialize>(value: &T) -> Result<(), Error> {
    let s = serde_json::to_string(value).map_err(internal)?;
    println!("{s}");
    Ok(())
}

fn run(command: Command) -> Result<(), Error> {
    match command {
        Command::Analyze { input } => analyze(&read_game(&input)?),
        Command::Certify { input, verify } => certify(&read_game(&input)?, verify),
        Command::Represent { input, objective, verify } => {
            represent(&read_game(&input)?, objective.as_deref(), verify)
        }
        Command::Round { input, verify, f_curve } => {
            round(&read_game(&input)?, verify, f_curve.as_deref())
        }
        Command::Rough { input, verify } => rough(&read_game(&input)?, verify),
        Command::Enumerate { max_n, proper, no_null, canonical } => {
            enumerate(max_n, proper, no_null, canonical)
        }
        Command::Table { max_n } => table(max_n),
        Command::Bounds { max_n } => bounds_report(max_n),
    }
}

fn analyze(g: &SimpleGame) -> Result<(), Error> {
    let report = serde_json::json!({
        "n": g.n(),
        "num_winning": g.num_winning(),
        "monotone": g.is_monotone(),
        "empty_losing": g.has_empty_losing(),
        "grand_winning": g.has_grand_winning(),
        "minimal_winning": json::coalitions_to_lists(&g.minimal_winning()),
        "maximal_losing": json::coalitions_to_lists(&g.maximal_losing()),
        "passers": g.passers(),
        "null_players": g.null_players(),
    });
    emit(&report)
}

fn certify(g: &SimpleGame, verify: bool) -> Result<(), Error> {
    let verdict = decide_weighted(g)?;
    let out = weightedness_to_json(&verdict);
    if verify {
        // Round-trip through the emitted schema before re-verifying.
        let text = serde_json::to_string(&out).map_err(internal)?;
        let parsed: WeightednessJson = serde_json::from_str(&text).map_err(internal)?;
        match weightedness_from_json(&parsed, g.n())? {
            Either::Left(rep) => {
                if !rep.represents(g) {
                    return Err(internal("re-verification of representation failed"));
                }
            }
            Either::Right(t) => {
                if !votecert::game::verify_trading_transform(g, &t, true) {
                    return Err(internal("re-verification of certificate failed"));
                }
            }
        }
        eprintln!("votecert: certificate re-verified");
    }
    emit(&out)
}

fn represent(g: &SimpleGame, objective: Option<&str>, verify: bool) -> Result<(), Error> {
    let full = integer_representation_full(g)?;
    let rep = &full.representation;
    let n = g.n();
    let bounds = serde_json::json!({
        "alpha_n": alpha(n).ok().map(|v| v.to_string()),
        "alpha_n_plus_1": alpha(n + 1).ok().map(|v| v.to_string()),
        "max_abs_weight": rep.max_abs_weight().to_string(),
        "quota_abs": rep.quota_abs().to_string(),
        "weight_sum": rep.weight_sum().to_string(),
        "det_abs": rep.det_abs.as_ref().map(|v| v.to_string()),
        "within_bounds": rep.satisfies_alpha_bounds(n).unwrap_or(true),
    });
    let minimum = match objective {
        Some(name) => {
            let obj = Objective::parse(name).ok_or_else(|| {
                Error::InvalidInput(format!(
                    "unknown objective '{name}' (quota | max_weight | weight_sum)"
                ))
            })?;
            Some(integer_repr_to_json(&minimum_representation(g, obj)?, Some(name))?)
        }
        None => None,
    };
    if verify {
        if !rep.represents(g) {
            return Err(internal("re-verification of representation failed"));
        }
        eprintln!("votecert: representation re-verified");
    }
    let out = serde_json::json!({
        "representation": integer_repr_to_json(rep, None)?,
        "bounds": bounds,
        "minimum": minimum,
    });
    emit(&out)
}

fn round(g: &SimpleGame, verify: bool, f_curve: Option<&std::path::Path>) -> Result<(), Error> {
    if let Some(path) = f_curve {
        write_f_curve(path)?;
    }
    let relaxation = solve_relaxation(g)?;
    let n_scaled = scale_by_n(g, &relaxation)?;
    let rounded = find_lambda(g, &relaxation)?;
    if verify {
        if !n_scaled.represents(g) || !rounded.representation.represents(g) {
            return Err(internal("re-verification of rounded representation failed"));
        }
        eprintln!("votecert: rounded representations re-verified");
    }
    emit(&rounding_to_json(&relaxation, &n_scaled, &rounded)?)
}

fn write_f_curve(path: &std::path::Path) -> Result<(), Error> {
    use std::io::Write;
    let to_f64 = |r: &Rational| -> f64 {
        let n: f64 = r.numer().to_string().parse().unwrap_or(f64::NAN);
        let d: f64 = r.denom().to_string().parse().unwrap_or(f64::NAN);
        n / d
    };
    let mut out = String::from("x,f\n");
    for k in 1..=20_000u64 {
        let x = Rational::new(Int::from(k), Int::from(1000));
        let f = f_eval(&x)?;
        out.push_str(&format!("{},{}\n", to_f64(&x), to_f64(&f)));
    }
    let mut file = std::fs::File::create(path)
        .map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))?;
    file.write_all(out.as_bytes())
        .map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))?;
    Ok(())
}

fn rough(g: &SimpleGame, verify: bool) -> Result<(), Error> {
    let verdict = decide_rough(g)?;
    let out = rough_to_json(&verdict, g.n())?;
    if verify {
        let text = serde_json::to_string(&out).map_err(internal)?;
        let parsed: RoughJson = serde_json::from_str(&text).map_err(internal)?;
        match parsed {
            RoughJson::RoughlyWeighted { q, w, .. } => {
                let quota = Int::from(q);
                let weights: Vec<Int> = w.into_iter().map(Int::from).collect();
                if !votecert::rough::is_rough_representation(g, &quota, &weights) {
                    return Err(internal("re-verification of rough representation failed"));
                }
            }
            RoughJson::NotRough { xs, ys, .. } => {
                let t = TradingTransform::new(
                    json::lists_to_coalitions(&xs, g.n())?,
                    json::lists_to_coalitions(&ys, g.n())?,
                )?;
                let cert = PotentCertificate { transform: t, det_abs: Int::from(1) };
                if !cert.verify(g) {
                    return Err(internal("re-verification of potent certificate failed"));
                }
            }
        }
        eprintln!("votecert: rough verdict re-verified");
    }
    emit(&out)
}

fn enumerate(max_n: usize, proper: bool, no_null: bool, canonical: bool) -> Result<(), Error> {
    if max_n == 0 || max_n > ENUM_MAX_N {
        return Err(Error::ScopeExceeded(format!(
            "enumerate handles 1 <= max_n <= {ENUM_MAX_N}"
        )));
    }
    let filters = GameFilters { proper, no_null_players: no_null, canonical };
    for n in 1..=max_n {
        for g in enumerate_monotone(n, filters)? {
            emit(&game_to_json(&g))?;
        }
    }
    Ok(())
}

fn table(max_n: usize) -> Result<(), Error> {
    if max_n == 0 || max_n > ENUM_MAX_N {
        return Err(Error::ScopeExceeded(format!(
            "table handles 1 <= max_n <= {ENUM_MAX_N}"
        )));
    }
    let mut rows = Vec::new();
    let mut all_pass = true;
    for n in 1..=max_n {
        let row = table_statistics(n)?;
        let expected = TableRow::expected(n).expect("n <= 5");
        let cell = |computed: u64, want: u64| {
            serde_json::json!({
                "computed": computed,
                "expected": want,
                "pass": computed == want,
            })
        };
        let pass = row.matches_expected();
        all_pass &= pass;
        rows.push(serde_json::json!({
            "n": n,
            "games": row.games,
            "weighted_games": row.weighted_games,
            "max_min_quota": cell(row.max_min_quota, expected.max_min_quota),
            "max_min_max_weight": cell(row.max_min_max_weight, expected.max_min_max_weight),
            "max_min_weight_sum": cell(row.max_min_weight_sum, expected.max_min_weight_sum),
            "pass": pass,
        }));
    }
    emit(&serde_json::json!({ "rows": rows, "all_pass": all_pass }))
}

fn bounds_report(max_n: usize) -> Result<(), Error> {
    if max_n == 0 || max_n > ALPHA_MAX_N {
        return Err(Error::ScopeExceeded(format!(
            "bounds handles 1 <= max_n <= {ALPHA_MAX_N}"
        )));
    }
    let mut alphas = Vec::new();
    let mut hadamard = Vec::new();
    let mut all_pass = true;
    for n in 1..=max_n {
        let table_value = alpha(n)?;
        let brute = if n <= 5 { Some(alpha_bruteforce(n)?) } else { None };
        let matches = brute.as_ref().map(|b| *b == table_value);
        all_pass &= matches.unwrap_or(true);
        alphas.push(serde_json::json!({
            "n": n,
            "value": table_value.to_string(),
            "bruteforce": brute.as_ref().map(|b| b.to_string()),
            "matches": matches,
        }));
        let bound = hadamard_bound(n)?;
        let holds = Rational::from_integer(table_value) <= bound.lo;
        all_pass &= holds;
        hadamard.push(serde_json::json!({
            "n": n,
            "lower": bound.lo.to_string(),
            "upper": bound.hi.to_string(),
            "alpha_le_bound": holds,
        }));
    }
    emit(&serde_json::json!({ "alpha": alphas, "hadamard": hadamard, "all_pass": all_pass }))
}

//! Command-line front end: argument definitions and command execution.
//!
//! [`run`] never prints; it returns the exit code and the report so that
//! tests can drive it directly.

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;

use num_integer::Integer;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use hopf_core::classification::{
    are_isomorphic, build_inverse_witness, build_witness_map, classify, oracle_isomorphic, parameter_set,
    predicted_count,
};
use hopf_core::constructions::{
    build_group_algebra, build_smash, build_smash_presentation, build_taft, MetacyclicSpec, SmashSpec, TaftSpec,
};
use hopf_core::hopfcore::{is_isomorphism, verify_hopf};
use hopf_core::matchedpairsearch::{expected_params, max_candidates, survivors, SearchSpace};
use hopf_core::{Error, FinHopf};

#[derive(Debug, Parser)]
#[command(name = "hopf", version, about = "Exact computations with Taft algebras, metacyclic group algebras and their smash products")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
    /// Report format on stdout.
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build an algebra and optionally write it as JSON.
    Build {
        #[command(subcommand)]
        target: BuildTarget,
    },
    /// Check all Hopf algebra axioms of a JSON structure.
    Verify {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Search all matched pairs between K[G] and a Taft algebra.
    MatchedPairs {
        #[command(flatten)]
        taft: TaftArgs,
        #[command(flatten)]
        group: GroupArgs,
        /// Coefficient pool {0} ∪ U_L; default L = lcm(l, n, m).
        #[arg(long)]
        pool_order: Option<usize>,
        /// Refuse searches with more candidates than this.
        #[arg(long)]
        max_candidates: Option<u128>,
    },
    /// Decide whether two dihedral smash products are isomorphic.
    Isomorphic {
        #[command(flatten)]
        taft: TaftArgs,
        #[arg(long)]
        n: usize,
        /// β,σ of the source, each ±1.
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        /// β,σ of the target, each ±1.
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        /// Also run the independent brute-force check.
        #[arg(long)]
        oracle: bool,
    },
    /// Isomorphism classes of dihedral smash products.
    Classify {
        #[command(flatten)]
        taft: TaftArgs,
        #[arg(long)]
        n: usize,
    },
    /// Class counts over ranges of m and n, with the parity prediction.
    Count {
        /// Inclusive range such as 2..5.
        #[arg(long)]
        m_range: String,
        #[arg(long)]
        n_range: String,
    },
    /// Build a smash product from a spec file and write its JSON.
    Export {
        #[arg(long)]
        spec: PathBuf,
        /// Construction route.
        #[arg(long, value_enum, default_value_t = Route::Bicrossed)]
        route: Route,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Route {
    Bicrossed,
    Presentation,
}

#[derive(Debug, Subcommand)]
pub enum BuildTarget {
    Taft {
        #[command(flatten)]
        taft: TaftArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    Group {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    Smash {
        #[command(flatten)]
        taft: TaftArgs,
        #[command(flatten)]
        group: GroupArgs,
        /// Exponent of β as a power of ζ_N, e.g. 0 or N/2.
        #[arg(long, allow_hyphen_values = true)]
        beta_exp: Option<String>,
        /// Exponent of σ as a power of ζ_N.
        #[arg(long, allow_hyphen_values = true)]
        sigma_exp: Option<String>,
        /// β = ±1, shorthand for --beta-exp 0 or N/2.
        #[arg(long, allow_hyphen_values = true)]
        beta: Option<i64>,
        /// σ = ±1.
        #[arg(long, allow_hyphen_values = true)]
        sigma: Option<i64>,
        #[arg(long, value_enum, default_value_t = Route::Bicrossed)]
        route: Route,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
pub struct TaftArgs {
    #[arg(long)]
    pub m: usize,
    /// Exponent of q as a power of ζ_N: an integer, N/d or kN/d. Default N/m.
    #[arg(long, allow_hyphen_values = true)]
    pub q_exp: Option<String>,
}

#[derive(Debug, Args)]
pub struct GroupArgs {
    #[arg(long)]
    pub l: usize,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub k: usize,
}

/// Exit code and text written to stdout.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: 0, stdout, stderr: String::new() }
    }

    fn fail(code: i32, stdout: String, message: String) -> Self {
        Outcome { code, stdout, stderr: message }
    }
}

/// Parses an exponent expression: `e`, `N/d` or `kN/d`, where `N` is the
/// field order. `N/d` must be exact.
pub fn parse_exponent(expr: &str, order: usize) -> Result<i64, Error> {
    let s = expr.trim();
    let bad = || Error::InvalidArgument(format!("cannot read exponent '{expr}' (use e, N/d or kN/d)"));
    if let Some(pos) = s.find('N') {
        let coef = &s[..pos];
        let rest = &s[pos + 1..];
        let k: i64 = match coef.trim() {
            "" | "+" => 1,
            "-" => -1,
            c => c.parse().map_err(|_| bad())?,
        };
        let d: i64 = match rest.trim() {
            "" => 1,
            r => r.strip_prefix('/').ok_or_else(bad)?.trim().parse().map_err(|_| bad())?,
        };
        if d <= 0 || (order as i64) % d != 0 {
            return Err(Error::InvalidArgument(format!("N = {order} is not divisible by {d} in '{expr}'")));
        }
        Ok(k * (order as i64 / d))
    } else {
        s.parse().map_err(|_| bad())
    }
}

fn q_exponent(arg: &Option<String>, m: usize, order: usize) -> Result<i64, Error> {
    match arg {
        Some(e) => parse_exponent(e, order),
        None => Ok((order / m.max(1)) as i64),
    }
}

fn sign_exponent(sign: i64, order: usize, name: &str) -> Result<i64, Error> {
    match sign {
        1 => Ok(0),
        -1 => Ok(order as i64 / 2),
        _ => Err(Error::InvalidArgument(format!("--{name} must be 1 or -1"))),
    }
}

fn parse_signs(s: &str, order: usize) -> Result<(i64, i64), Error> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != 2 {
        return Err(Error::InvalidArgument(format!("expected 'beta,sigma' with entries ±1, got '{s}'")));
    }
    let read = |p: &str, name| -> Result<i64, Error> {
        let v: i64 = p.parse().map_err(|_| Error::InvalidArgument(format!("'{p}' is not ±1")))?;
        sign_exponent(v, order, name)
    };
    Ok((read(parts[0], "beta")?, read(parts[1], "sigma")?))
}

fn parse_range(s: &str) -> Result<std::ops::RangeInclusive<usize>, Error> {
    let bad = || Error::InvalidArgument(format!("expected a range a..b, got '{s}'"));
    let (a, b) = s.split_once("..").ok_or_else(bad)?;
    let a: usize = a.trim().parse().map_err(|_| bad())?;
    let b: usize = b.trim().trim_start_matches('=').parse().map_err(|_| bad())?;
    if a > b {
        return Err(bad());
    }
    Ok(a..=b)
}

fn sign_name(exp: usize, order: usize) -> &'static str {
    if exp == 0 {
        "1"
    } else if 2 * exp == order {
        "-1"
    } else {
        "?"
    }
}

fn algebra_name(spec: &SmashSpec) -> String {
    let order = spec.order();
    let s = spec.normalized();
    format!(
        "T^{{{},{}}}_{{{}}}(ζ_{order}^{})",
        sign_name(s.beta_exp as usize, order),
        sign_name(s.sigma_exp as usize, order),
        spec.dim(),
        s.q_exp
    )
}

fn write_out(path: &Option<PathBuf>, content: &str) -> Result<(), Error> {
    if let Some(p) = path {
        fs::write(p, content).map_err(|e| Error::InvalidArgument(format!("cannot write {}: {e}", p.display())))?;
    }
    Ok(())
}

fn read_file(path: &PathBuf) -> Result<String, Error> {
    fs::read_to_string(path).map_err(|e| Error::InvalidArgument(format!("cannot read {}: {e}", path.display())))
}

fn render(format: Format, table: String, value: Value) -> String {
    match format {
        Format::Table => table,
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&value).expect("json value");
            s.push('\n');
            s
        }
    }
}

fn summary(h: &FinHopf, name: &str) -> (String, Value) {
    (format!("built {name}: dimension {}, field Q(ζ_{})\n", h.dim(), h.field().order()), json!({
        "name": name,
        "dim": h.dim(),
        "N": h.field().order(),
    }))
}

/// Executes one command. Exit code 0 on success, 1 on invalid input or a
/// failed check, 2 when a scale guard refuses the computation.
pub fn run(config: &RunConfig) -> Outcome {
    match execute(config) {
        Ok(o) => o,
        Err(e) => {
            let code = if matches!(e, Error::ScaleGuard { .. }) { 2 } else { 1 };
            Outcome::fail(code, String::new(), format!("error: {e}\n"))
        }
    }
}

fn execute(config: &RunConfig) -> Result<Outcome, Error> {
    let fmt = config.format;
    match &config.command {
        Command::Build { target } => build(fmt, target),
        Command::Verify { input } => {
            let h = FinHopf::from_json_str(&read_file(input)?)?;
            let report = verify_hopf(&h)?;
            let value = json!({
                "dim": h.dim(),
                "passed": report.passed_count(),
                "total": report.checks.len(),
                "suites": report.checks.iter().map(|c| json!({
                    "axiom": c.axiom.name(),
                    "passed": c.passed,
                    "failure": c.failure,
                })).collect::<Vec<_>>(),
            });
            let text = render(fmt, report.to_string(), value);
            if report.all_passed() {
                Ok(Outcome::ok(text))
            } else {
                Ok(Outcome::fail(1, text, format!("error: axioms fail: {:?}\n", report.failed())))
            }
        }
        Command::MatchedPairs { taft, group, pool_order, max_candidates: bound } => {
            let gspec = MetacyclicSpec::new(group.l, group.n, group.k)?;
            let pool = pool_order.unwrap_or_else(|| group.l.lcm(&group.n).lcm(&taft.m));
            let order = SmashSpec::default_order(taft.m, group.l, group.n).lcm(&pool.max(1));
            let q = q_exponent(&taft.q_exp, taft.m, order)?;
            let space = SearchSpace::new(gspec, taft.m, q, Some(pool))?;
            let bound = bound.unwrap_or_else(max_candidates);
            let outcome = survivors(&space, bound)?;
            let expected = expected_params(&gspec, outcome.field_order);
            let found = outcome.params();
            let trivial = outcome.survivors.iter().all(|s| s.actions.right_action_is_trivial(space.taft()));
            let predicted = gspec.l * gspec.sigma_bound();
            let mut t = String::new();
            writeln!(t, "G = D^{}_{{{}·{}}}, m = {}, N = {}, pool {{0}} ∪ U_{}", gspec.k, gspec.l, gspec.n, taft.m, outcome.field_order, pool).unwrap();
            writeln!(t, "candidates: {}", outcome.candidates).unwrap();
            writeln!(t, "{:>8} {:>9}", "beta_exp", "sigma_exp").unwrap();
            for (b, s) in &found {
                writeln!(t, "{b:>8} {s:>9}").unwrap();
            }
            writeln!(t, "survivors: {} (l·gcd(n,k−1) = {predicted})", outcome.survivors.len()).unwrap();
            writeln!(t, "right action trivial for all survivors: {trivial}").unwrap();
            writeln!(t, "matches U_l × U_gcd(n,k−1): {}", found == expected).unwrap();
            let value = json!({
                "N": outcome.field_order,
                "pool_order": pool,
                "candidates": outcome.candidates.to_string(),
                "survivors": found,
                "count": outcome.survivors.len(),
                "predicted": predicted,
                "right_action_trivial": trivial,
                "matches_prediction": found == expected,
            });
            Ok(Outcome::ok(render(fmt, t, value)))
        }
        Command::Isomorphic { taft, n, a, b, oracle } => {
            let order = SmashSpec::default_order(taft.m, 2, *n);
            let q = q_exponent(&taft.q_exp, taft.m, order)?;
            let mk = |(be, se): (i64, i64)| -> Result<SmashSpec, Error> {
                let s = SmashSpec { m: taft.m, q_exp: q, l: 2, n: *n, k: n.saturating_sub(1), beta_exp: be, sigma_exp: se, field_order: None };
                s.validate()?;
                Ok(s)
            };
            let sa = mk(parse_signs(a, order)?)?;
            let sb = mk(parse_signs(b, order)?)?;
            let witness = are_isomorphic(&sa, &sb)?;
            let mut t = String::new();
            let mut value = json!({ "a": algebra_name(&sa), "b": algebra_name(&sb) });
            match &witness {
                Some(w) => {
                    let (f, big_f, s, tt) = w.tuple();
                    writeln!(t, "{} ≅ {}", algebra_name(&sa), algebra_name(&sb)).unwrap();
                    writeln!(t, "witness (f, F, s, t) = ({f}, {big_f}, {s}, {tt})").unwrap();
                    let inv = build_inverse_witness(w, &sa, &sb)?;
                    let (f2, g2, s2, t2) = inv.tuple();
                    writeln!(t, "inverse (f, F, s, t) = ({f2}, {g2}, {s2}, {t2})").unwrap();
                    value["witness"] = json!([f, big_f, s, tt]);
                    value["inverse"] = json!([f2, g2, s2, t2]);
                }
                None => {
                    writeln!(t, "none").unwrap();
                    value["witness"] = Value::Null;
                }
            }
            if *oracle {
                let verdict = oracle_isomorphic(&sa, &sb, max_candidates())?;
                writeln!(t, "oracle: {}", if verdict { "isomorphic" } else { "not isomorphic" }).unwrap();
                writeln!(t, "agreement: {}", verdict == witness.is_some()).unwrap();
                value["oracle"] = json!(verdict);
            }
            if let Some(w) = &witness {
                let ha = build_smash(&sa)?;
                let hb = build_smash(&sb)?;
                let phi = build_witness_map(w, &sa, &sb)?;
                let ok = is_isomorphism(&phi, &ha, &hb);
                writeln!(t, "witness map verified: {ok}").unwrap();
                value["witness_verified"] = json!(ok);
            }
            Ok(Outcome::ok(render(fmt, t, value)))
        }
        Command::Classify { taft, n } => {
            let order = SmashSpec::default_order(taft.m, 2, *n);
            let q = q_exponent(&taft.q_exp, taft.m, order)?;
            let classes = classify(taft.m, q, *n)?;
            let mut t = String::new();
            writeln!(t, "m = {}, n = {}, q = ζ_{order}^{}", taft.m, n, q.rem_euclid(order as i64)).unwrap();
            for (i, class) in classes.iter().enumerate() {
                let members: Vec<String> = class
                    .iter()
                    .map(|&(b, s)| format!("({},{})", sign_name(b, order), sign_name(s, order)))
                    .collect();
                writeln!(t, "class {}: {}", i + 1, members.join(" ")).unwrap();
            }
            writeln!(t, "{} classes (parity prediction {})", classes.len(), predicted_count(taft.m, *n)).unwrap();
            let value = json!({
                "m": taft.m,
                "n": n,
                "N": order,
                "classes": classes,
                "count": classes.len(),
                "predicted": predicted_count(taft.m, *n),
            });
            Ok(Outcome::ok(render(fmt, t, value)))
        }
        Command::Count { m_range, n_range } => {
            let ms = parse_range(m_range)?;
            let ns = parse_range(n_range)?;
            if *ms.start() < 2 || *ns.start() < 3 {
                return Err(Error::InvalidArgument("need m >= 2 and n >= 3".into()));
            }
            let mut t = String::new();
            writeln!(t, "{:>3} {:>3} {:>7} {:>9} {:>5}", "m", "n", "params", "classes", "pred").unwrap();
            let mut rows = Vec::new();
            for m in ms.clone() {
                for n in ns.clone() {
                    let order = SmashSpec::default_order(m, 2, n);
                    let classes = classify(m, (order / m) as i64, n)?;
                    let pred = predicted_count(m, n);
                    let params = parameter_set(m, n).len();
                    writeln!(t, "{m:>3} {n:>3} {params:>7} {:>9} {pred:>5}", classes.len()).unwrap();
                    rows.push(json!({ "m": m, "n": n, "params": params, "classes": classes.len(), "predicted": pred }));
                }
            }
            Ok(Outcome::ok(render(fmt, t, Value::Array(rows))))
        }
        Command::Export { spec, route, out } => {
            let s = SmashSpec::from_json_str(&read_file(spec)?)?;
            let h = match route {
                Route::Bicrossed => build_smash(&s)?,
                Route::Presentation => build_smash_presentation(&s)?,
            };
            let body = h.to_json_string();
            match out {
                Some(_) => {
                    write_out(out, &body)?;
                    let (t, v) = summary(&h, &algebra_name(&s));
                    Ok(Outcome::ok(render(fmt, t, v)))
                }
                None => Ok(Outcome::ok(body + "\n")),
            }
        }
    }
}

fn build(fmt: Format, target: &BuildTarget) -> Result<Outcome, Error> {
    let (h, name, out) = match target {
        BuildTarget::Taft { taft, out } => {
            let order = SmashSpec::default_order(taft.m, 1, 1);
            let q = q_exponent(&taft.q_exp, taft.m, order)?;
            let spec = TaftSpec::in_field(taft.m, q, order)?;
            (build_taft(&spec)?, format!("T_{{{}}}(ζ_{order}^{})", taft.m * taft.m, spec.q.exponent()), out)
        }
        BuildTarget::Group { group, out } => {
            let spec = MetacyclicSpec::new(group.l, group.n, group.k)?;
            let field = hopf_core::make_field(spec.default_field_order())?;
            (build_group_algebra(&spec, &field)?, format!("K[D^{}_{{{}·{}}}]", spec.k, spec.l, spec.n), out)
        }
        BuildTarget::Smash { taft, group, beta_exp, sigma_exp, beta, sigma, route, out } => {
            let order = SmashSpec::default_order(taft.m, group.l, group.n);
            let q = q_exponent(&taft.q_exp, taft.m, order)?;
            let pick = |exp: &Option<String>, sign: &Option<i64>, name: &str| -> Result<i64, Error> {
                match (exp, sign) {
                    (Some(_), Some(_)) => Err(Error::InvalidArgument(format!("give either --{name}-exp or --{name}"))),
                    (Some(e), None) => parse_exponent(e, order),
                    (None, Some(s)) => sign_exponent(*s, order, name),
                    (None, None) => Ok(0),
                }
            };
            let spec = SmashSpec {
                m: taft.m,
                q_exp: q,
                l: group.l,
                n: group.n,
                k: group.k,
                beta_exp: pick(beta_exp, beta, "beta")?,
                sigma_exp: pick(sigma_exp, sigma, "sigma")?,
                field_order: None,
            };
            spec.validate()?;
            let h = match route {
                Route::Bicrossed => build_smash(&spec)?,
                Route::Presentation => build_smash_presentation(&spec)?,
            };
            (h, algebra_name(&spec), out)
        }
    };
    write_out(out, &h.to_json_string())?;
    let (t, v) = summary(&h, &name);
    Ok(Outcome::ok(render(fmt, t, v)))
}

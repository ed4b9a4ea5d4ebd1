//! Command-line driver: argument types, [`run`] and [`emit`].

use crate::cm::{self, CMPoint, DiagPair, SampleConfig};
use crate::daha::{self, Rep};
use crate::error::{Error, Result};
use crate::macdonald::{self, Convention, HcDictionary};
use crate::params::Params;
use crate::qgroup::{self, AlgebraKind, UqModel, UqRep};
use crate::report::{Check, Suite};
use crate::scalar::{parse_rational, Field, Rational, SpecMap};
use crate::weight::Weight;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Map, Value};
use std::path::PathBuf;
use std::time::Instant;

#[derive(Parser, Debug, Clone, Serialize)]
#[command(name = "dahalab", version, about = "Exact DAHA, Macdonald, R-matrix and Calogero-Moser computations")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, short, global = true)]
    #[serde(skip)]
    pub output: Option<PathBuf>,
    /// Add wall-clock timings (breaks byte-identical re-runs).
    #[arg(long, global = true)]
    #[serde(skip)]
    pub timings: bool,
    /// Append a failing suite; used to test the exit-code contract.
    #[arg(long, global = true, hide = true)]
    #[serde(skip)]
    pub inject_failure: bool,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FieldMode {
    Generic,
    Cyclotomic,
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct FieldArgs {
    #[arg(long, value_enum, default_value_t = FieldMode::Generic)]
    pub field: FieldMode,
    /// Root-of-unity order for `--field cyclotomic`.
    #[arg(long, default_value_t = 3)]
    pub l: u32,
    #[arg(long, default_value_t = 1)]
    pub k: i64,
    #[arg(long, default_value_t = 1)]
    pub m: i64,
}

#[derive(Subcommand, Debug, Clone, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    /// DAHA presentation, PBW and spherical checks.
    Verify {
        #[command(subcommand)]
        what: VerifyCmd,
    },
    /// Symmetric Macdonald polynomial `P_lambda` with its eigenvalues.
    Macdonald {
        #[arg(long, default_value_t = 2)]
        n: usize,
        /// Dominant weight, comma separated.
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[command(flatten)]
        field: FieldArgs,
    },
    /// Macdonald operators `L(Omega_i)`.
    Hc {
        #[command(subcommand)]
        what: HcCmd,
    },
    /// Central candidates at a root of unity on the curve `q = u^m, t = u^k`.
    Center {
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        l: u32,
        #[arg(long, default_value_t = 1)]
        k: i64,
        #[arg(long, default_value_t = 1)]
        m: i64,
        #[arg(long, default_value_t = 3)]
        window: i64,
        #[arg(long)]
        allow_even: bool,
        /// Also run the non-central controls at generic parameters.
        #[arg(long)]
        controls: bool,
    },
    /// Calogero-Moser points, invariants and brackets.
    Cm {
        #[command(subcommand)]
        what: CmCmd,
    },
    /// Quadratic algebras built from `R^q`.
    Rtt {
        #[command(subcommand)]
        what: RttCmd,
    },
    /// `U_q(gl_n)` relation suites.
    Uq {
        #[command(subcommand)]
        what: UqCmd,
    },
}

#[derive(Subcommand, Debug, Clone, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum VerifyCmd {
    Relations {
        #[arg(long, default_value_t = 2)]
        n: usize,
        /// Exponent window `[-d, d]^n`.
        #[arg(long, default_value_t = 3)]
        degree: i64,
        /// Also compare operators symbolically.
        #[arg(long)]
        symbolic: bool,
        #[command(flatten)]
        field: FieldArgs,
    },
    Pbw {
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long, default_value_t = 200)]
        count: usize,
        #[arg(long, default_value_t = 5)]
        length: usize,
        #[arg(long, default_value_t = 3)]
        degree: i64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[command(flatten)]
        field: FieldArgs,
    },
    Spherical {
        #[arg(long, default_value_t = 2)]
        n: usize,
    },
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ConventionArg {
    Full,
    Coset,
}

impl From<ConventionArg> for Convention {
    fn from(c: ConventionArg) -> Self {
        match c {
            ConventionArg::Full => Convention::Full,
            ConventionArg::Coset => Convention::Coset,
        }
    }
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DictionaryArg {
    Literal,
    InvertT,
}

#[derive(Subcommand, Debug, Clone, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum HcCmd {
    Commute {
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long, value_enum, default_value_t = ConventionArg::Full)]
        convention: ConventionArg,
        #[command(flatten)]
        field: FieldArgs,
    },
    Compare {
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        i: usize,
        #[arg(long, default_value_t = 4)]
        degree: i64,
        #[arg(long, value_enum, default_value_t = ConventionArg::Full)]
        convention: ConventionArg,
        #[arg(long, value_enum, default_value_t = DictionaryArg::InvertT)]
        dictionary: DictionaryArg,
        #[command(flatten)]
        field: FieldArgs,
    },
}

#[derive(Subcommand, Debug, Clone, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CmCmd {
    /// The explicit point `x_{h,h'}`.
    Point {
        #[arg(long, allow_hyphen_values = true)]
        h: String,
        #[arg(long, allow_hyphen_values = true)]
        hp: String,
        #[arg(long, allow_hyphen_values = true)]
        zeta2l: String,
    },
    /// Moment-map and cyclicity checks on a point file.
    Check {
        #[arg(long)]
        point: PathBuf,
    },
    NormalForm {
        #[arg(long)]
        point: PathBuf,
    },
    Invariants {
        #[arg(long)]
        point: PathBuf,
        #[arg(long, default_value_t = 2)]
        depth: usize,
    },
    Fourier {
        #[arg(long)]
        point: PathBuf,
    },
    Bracket {
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        max_power: u32,
    },
    /// Seeded random checks on explicit points.
    Sample {
        #[arg(long, default_value_t = 7)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        pairs: usize,
        #[arg(long, default_value_t = 50)]
        conjugations: usize,
        #[arg(long, default_value = "1,-1,5", allow_hyphen_values = true)]
        zetas: String,
        #[arg(long, default_value_t = 3)]
        max_n: usize,
        #[arg(long, default_value_t = 2)]
        depth: usize,
    },
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum KindArg {
    #[value(name = "reflection_F")]
    ReflectionF,
    #[value(name = "double_D")]
    DoubleD,
}

impl From<KindArg> for AlgebraKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::ReflectionF => AlgebraKind::ReflectionF,
            KindArg::DoubleD => AlgebraKind::DoubleD,
        }
    }
}

#[derive(Subcommand, Debug, Clone, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RttCmd {
    Dims {
        #[arg(long, value_enum, default_value_t = KindArg::ReflectionF)]
        kind: KindArg,
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long, default_value_t = 4)]
        max_degree: usize,
    },
    Center {
        #[arg(long, value_enum, default_value_t = KindArg::ReflectionF)]
        kind: KindArg,
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        degree: usize,
    },
    Ybe {
        #[arg(long, default_value_t = 2)]
        n: usize,
    },
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ModelArg {
    Wt,
    Torus,
    Both,
}

#[derive(Subcommand, Debug, Clone, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum UqCmd {
    Check {
        #[arg(long, value_enum, default_value_t = ModelArg::Both)]
        model: ModelArg,
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        grid: i64,
    },
}

/// Suites plus free-form results, with the config echo.
#[derive(Clone, Debug, Default)]
pub struct Report {
    pub config: Value,
    pub suites: Vec<Suite>,
    pub results: Map<String, Value>,
    pub timings: Option<Map<String, Value>>,
}

impl Report {
    pub fn all_pass(&self) -> bool {
        self.suites.iter().all(Suite::all_pass)
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "config": self.config,
            "version": env!("CARGO_PKG_VERSION"),
            "suites": self.suites.iter().map(Suite::to_json).collect::<Vec<_>>(),
        });
        if !self.results.is_empty() {
            v["results"] = Value::Object(self.results.clone());
        }
        if let Some(t) = &self.timings {
            v["timings"] = Value::Object(t.clone());
        }
        v
    }
}

fn check_n(n: usize, max: usize) -> Result<()> {
    if n == 0 || n > max {
        return Err(Error::Config(format!("n must be in 1..={max}, got {n}")));
    }
    Ok(())
}

fn check_bound(name: &str, v: i64) -> Result<()> {
    if v < 0 {
        return Err(Error::Config(format!("{name} must be nonnegative, got {v}")));
    }
    Ok(())
}

fn parse_list(s: &str) -> Result<Vec<Rational>> {
    s.split(',').map(|x| parse_rational(x).ok_or_else(|| Error::Config(format!("not a rational: {x:?}")))).collect()
}

fn read_point(path: &PathBuf) -> Result<CMPoint<Rational>> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    let v: Value = serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    CMPoint::from_json(&v)
}

/// Collects suites and timings in order.
struct Runner {
    report: Report,
    timed: bool,
}

impl Runner {
    fn suite(&mut self, f: impl FnOnce() -> Result<Suite>) -> Result<()> {
        let start = Instant::now();
        let s = f()?;
        if self.timed {
            let key = format!("{}:{}", self.report.suites.len(), s.name);
            let ms = start.elapsed().as_secs_f64() * 1e3;
            self.report.timings.get_or_insert_with(Map::new).insert(key, json!(ms));
        }
        self.report.suites.push(s);
        Ok(())
    }

    fn result(&mut self, k: &str, v: Value) {
        self.report.results.insert(k.into(), v);
    }
}

fn with_field<T>(
    f: &FieldArgs,
    n: usize,
    generic: impl FnOnce(Params<crate::scalar::QTScalar>) -> Result<T>,
    cyclotomic: impl FnOnce(Params<crate::scalar::CycScalar>) -> Result<T>,
) -> Result<T> {
    match f.field {
        FieldMode::Generic => generic(Params::generic(n)),
        FieldMode::Cyclotomic => cyclotomic(Params::special(n, &SpecMap::new(f.l, f.k, f.m)?)),
    }
}

fn relations_suites<F: Field>(p: Params<F>, degree: i64, symbolic: bool) -> Result<Vec<Suite>> {
    let rep = Rep::new(p);
    let mut v = vec![daha::verify_presentation(&rep, degree)];
    if symbolic {
        v.push(daha::verify_symbolic(&rep));
    }
    Ok(v)
}

fn macdonald_result<F: Field>(l: &Weight, p: Params<F>) -> (Suite, Option<Value>) {
    let mut s = Suite::new("macdonald");
    match macdonald::macdonald_poly(l, &p) {
        Ok(mp) => {
            s.push(Check::pass(format!("certified[{l}]")));
            let ev: Vec<String> = mp.eigenvalues.iter().map(|e| e.to_string()).collect();
            (s, Some(json!({"lambda": l.to_string(), "m_expansion": mp.poly.to_json(), "eigenvalues_coset": ev})))
        }
        Err(e) => {
            s.push(Check::fail(format!("certified[{l}]"), json!(e.to_string())));
            (s, None)
        }
    }
}

fn pair_from(h: &str, hp: &str) -> Result<DiagPair<Rational>> {
    let (h, hp) = (parse_list(h)?, parse_list(hp)?);
    if h.len() != hp.len() {
        return Err(Error::Config("--h and --hp differ in length".into()));
    }
    Ok(DiagPair::new(h, hp))
}

/// Runs one parsed command.
pub fn run(cli: &Cli) -> Result<Report> {
    let config = serde_json::to_value(cli).map_err(|e| Error::Config(e.to_string()))?;
    let mut r = Runner { report: Report { config, ..Default::default() }, timed: cli.timings };
    match &cli.command {
        Command::Verify { what } => match what {
            VerifyCmd::Relations { n, degree, symbolic, field } => {
                check_n(*n, 4)?;
                check_bound("--degree", *degree)?;
                let suites = with_field(
                    field,
                    *n,
                    |p| relations_suites(p, *degree, *symbolic),
                    |p| relations_suites(p, *degree, *symbolic),
                )?;
                for s in suites {
                    r.suite(|| Ok(s))?;
                }
            }
            VerifyCmd::Pbw { n, count, length, degree, seed, field } => {
                check_n(*n, 4)?;
                check_bound("--degree", *degree)?;
                if *length == 0 {
                    return Err(Error::Config("--length must be positive".into()));
                }
                r.suite(|| {
                    with_field(
                        field,
                        *n,
                        |p| Ok(daha::pbw_roundtrip(&Rep::new(p), *count, *length, *seed, *degree)),
                        |p| Ok(daha::pbw_roundtrip(&Rep::new(p), *count, *length, *seed, *degree)),
                    )
                })?;
            }
            VerifyCmd::Spherical { n } => {
                check_n(*n, 4)?;
                r.suite(|| Ok(daha::spherical_check(&Params::generic(*n))))?;
            }
        },
        Command::Macdonald { n, lambda, field } => {
            check_n(*n, 4)?;
            let l: Weight = lambda.parse().map_err(|e: Error| Error::Config(e.to_string()))?;
            if l.0.len() != *n {
                return Err(Error::Config(format!("--lambda has {} parts, expected {n}", l.0.len())));
            }
            let (s, v) = with_field(field, *n, |p| Ok(macdonald_result(&l, p)), |p| Ok(macdonald_result(&l, p)))?;
            r.suite(|| Ok(s))?;
            if let Some(v) = v {
                r.result("macdonald", v);
            }
        }
        Command::Hc { what } => match what {
            HcCmd::Commute { n, convention, field } => {
                check_n(*n, 4)?;
                let c = Convention::from(*convention);
                r.suite(|| {
                    with_field(
                        field,
                        *n,
                        |p| Ok(macdonald::commuting_family_check(&p, c)),
                        |p| Ok(macdonald::commuting_family_check(&p, c)),
                    )
                })?;
            }
            HcCmd::Compare { n, i, degree, convention, dictionary, field } => {
                check_n(*n, 4)?;
                check_bound("--degree", *degree)?;
                if *i == 0 || i > n {
                    return Err(Error::Config(format!("--i must be in 1..={n}")));
                }
                let c = Convention::from(*convention);
                let d = match dictionary {
                    DictionaryArg::Literal => HcDictionary::Literal,
                    DictionaryArg::InvertT => HcDictionary::InvertT,
                };
                r.suite(|| {
                    with_field(
                        field,
                        *n,
                        |p| Ok(macdonald::spherical_hc_compare(*i, &p, *degree, c, d)),
                        |p| Ok(macdonald::spherical_hc_compare(*i, &p, *degree, c, d)),
                    )
                })?;
            }
        },
        Command::Center { n, l, k, m, window, allow_even, controls } => {
            check_n(*n, 4)?;
            check_bound("--window", *window)?;
            let s = SpecMap::new(*l, *k, *m)?;
            r.suite(|| crate::center::center_suite(*n, &s, *window, *allow_even))?;
            if *controls {
                r.suite(|| Ok(crate::center::generic_controls(*n, *l, *window)))?;
            }
        }
        Command::Cm { what } => run_cm(what, &mut r)?,
        Command::Rtt { what } => match what {
            RttCmd::Dims { kind, n, max_degree } => {
                check_n(*n, 3)?;
                let mut a = qgroup::build_algebra((*kind).into(), *n)?;
                r.suite(|| qgroup::hilbert_suite(&mut a, *max_degree))?;
            }
            RttCmd::Center { kind, n, degree } => {
                check_n(*n, 3)?;
                let mut a = qgroup::build_algebra((*kind).into(), *n)?;
                r.suite(|| qgroup::center_suite(&mut a, *degree))?;
            }
            RttCmd::Ybe { n } => {
                check_n(*n, 4)?;
                r.suite(|| Ok(qgroup::ybe_check(*n)))?;
            }
        },
        Command::Uq { what } => match what {
            UqCmd::Check { model, n, grid } => {
                check_n(*n, 3)?;
                check_bound("--grid", *grid)?;
                let models = match model {
                    ModelArg::Wt => vec![UqModel::Wt],
                    ModelArg::Torus => vec![UqModel::Torus],
                    ModelArg::Both => vec![UqModel::Wt, UqModel::Torus],
                };
                for m in models {
                    r.suite(|| Ok(qgroup::uq_relation_check(&UqRep::new(m, *n), *grid)))?;
                }
            }
        },
    }
    if cli.inject_failure {
        let mut s = Suite::new("injected");
        s.push(Check::fail("injected-failure", json!("requested by --inject-failure")));
        r.report.suites.push(s);
    }
    Ok(r.report)
}

fn run_cm(what: &CmCmd, r: &mut Runner) -> Result<()> {
    match what {
        CmCmd::Point { h, hp, zeta2l } => {
            let z = parse_rational(zeta2l).ok_or_else(|| Error::Config(format!("not a rational: {zeta2l:?}")))?;
            let d = pair_from(h, hp)?;
            let p = cm::point_from_pair(&d, &z)?;
            let mut s = Suite::new("cm-point");
            s.push(Check::from_result(
                "moment_plus_zero",
                if cm::moment_plus(&p).is_zero() { Ok(()) } else { Err(cm::moment_plus(&p).to_json()) },
            ));
            r.suite(|| Ok(s))?;
            r.result("point", p.to_json());
        }
        CmCmd::Check { point } => {
            let p = read_point(point)?;
            let m = cm::moment_plus(&p);
            let zero = m.is_zero();
            let mut s = Suite::new("cm-check");
            s.push(if zero { Check::pass("moment_plus_zero") } else { Check::fail("moment_plus_zero", m.to_json()) });
            r.suite(|| Ok(s))?;
            r.result("moment_plus_zero", json!(zero));
            r.result("cyclic", json!(cm::is_cyclic(&p)));
            r.result("moment_plus", m.to_json());
        }
        CmCmd::NormalForm { point } => {
            let p = read_point(point)?;
            let mut s = Suite::new("cm-normal-form");
            match cm::normal_form(&p) {
                Ok(d) => {
                    s.push(Check::pass("normal-form"));
                    let strs = |v: &[Rational]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>();
                    r.result("normal_form", json!({"h": strs(&d.h), "hp": strs(&d.hp)}));
                }
                Err(e) => s.push(Check::fail("normal-form", json!(e.to_string()))),
            }
            r.suite(|| Ok(s))?;
        }
        CmCmd::Invariants { point, depth } => {
            let p = read_point(point)?;
            r.result("invariants", cm::invariants(&p, *depth).to_json());
        }
        CmCmd::Fourier { point } => {
            let p = read_point(point)?;
            let f = cm::fourier_point(&p)?;
            // m_+(F x) = -zeta^{-2l} m_+(x)
            let c = f.zeta2l.neg_ref();
            let ok = cm::moment_plus(&f) == cm::moment_plus(&p).scale(&c);
            let mut s = Suite::new("cm-fourier");
            s.push(if ok {
                Check::pass("moment-identity")
            } else {
                Check::fail("moment-identity", cm::moment_plus(&f).to_json())
            });
            r.suite(|| Ok(s))?;
            r.result("point", f.to_json());
        }
        CmCmd::Bracket { n, max_power } => {
            check_n(*n, 3)?;
            let t = cm::poisson_bracket_table(*n);
            r.suite(|| Ok(cm::bracket_suite(&t)))?;
            r.suite(|| Ok(cm::rs_report(&t, *max_power)))?;
        }
        CmCmd::Sample { seed, pairs, conjugations, zetas, max_n, depth } => {
            check_n(*max_n, 4)?;
            let cfg = SampleConfig {
                seed: *seed,
                pairs: *pairs,
                conjugations: *conjugations,
                zetas: parse_list(zetas)?,
                max_n: *max_n,
                depth: *depth,
            };
            r.suite(|| Ok(cm::sample_suite(&cfg)))?;
        }
    }
    Ok(())
}

/// Serializes a report; JSON keys are sorted.
pub fn emit(report: &Report, format: Format) -> Result<Vec<u8>> {
    match format {
        Format::Json => {
            let mut out = serde_json::to_vec_pretty(&report.to_json()).map_err(|e| Error::Io(e.to_string()))?;
            out.push(b'\n');
            Ok(out)
        }
        Format::Csv => emit_csv(report),
    }
}

fn emit_csv(report: &Report) -> Result<Vec<u8>> {
    let io = |e: csv::Error| Error::Io(e.to_string());
    let mut w = csv::Writer::from_writer(Vec::new());
    let series: Vec<&Value> = report.suites.iter().filter_map(|s| s.details.get("series")).collect();
    if !report.suites.is_empty() && series.len() == report.suites.len() {
        w.write_record(["degree", "dimension", "expected", "match"]).map_err(io)?;
        for row in series.iter().flat_map(|s| s.as_array().into_iter().flatten()) {
            let f = |k: &str| row[k].to_string();
            w.write_record([f("degree"), f("dimension"), f("expected"), f("match")]).map_err(io)?;
        }
    } else {
        w.write_record(["suite", "check", "pass", "witness"]).map_err(io)?;
        for s in &report.suites {
            for c in &s.checks {
                let wit = c.witness.as_ref().map(Value::to_string).unwrap_or_default();
                w.write_record([s.name.as_str(), c.name.as_str(), if c.pass { "true" } else { "false" }, wit.as_str()])
                    .map_err(io)?;
            }
        }
    }
    w.into_inner().map_err(|e| Error::Io(e.to_string()))
}

/// Worker count from `DAHA_WORKERS`, if set and positive.
pub fn workers_from_env() -> Option<usize> {
    std::env::var("DAHA_WORKERS").ok()?.trim().parse().ok().filter(|&k: &usize| k > 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(args: &[&str]) -> Cli {
        Cli::try_parse_from(std::iter::once("dahalab").chain(args.iter().copied())).unwrap()
    }

    #[test]
    fn empty_report_shape() {
        let r = Report { config: json!({}), ..Default::default() };
        let v = r.to_json();
        assert_eq!(v["suites"], json!([]));
        assert!(v.get("timings").is_none());
    }

    #[test]
    fn hilbert_csv_header() {
        let r = run(&parse(&["rtt", "dims", "--n", "2", "--max-degree", "2"])).unwrap();
        let out = String::from_utf8(emit(&r, Format::Csv).unwrap()).unwrap();
        assert!(out.starts_with("degree,dimension,expected,match\n0,1,1,true\n"), "{out}");
    }

    #[test]
    fn rerun_is_byte_identical() {
        let cli = parse(&["cm", "sample", "--pairs", "6", "--conjugations", "3", "--zetas", "-1,5"]);
        let a = emit(&run(&cli).unwrap(), Format::Json).unwrap();
        let b = emit(&run(&cli).unwrap(), Format::Json).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn config_errors() {
        assert!(matches!(run(&parse(&["uq", "check", "--n", "0"])), Err(Error::Config(_))));
        assert!(matches!(run(&parse(&["hc", "compare", "--i", "3"])), Err(Error::Config(_))));
        assert!(matches!(run(&parse(&["macdonald", "--lambda", "1,x"])), Err(Error::Config(_))));
        assert!(Cli::try_parse_from(["dahalab", "frobnicate"]).is_err());
    }

    #[test]
    fn injected_failure_fails_the_report() {
        let r = run(&parse(&["rtt", "ybe", "--inject-failure"])).unwrap();
        assert!(!r.all_pass());
        assert_eq!(r.suites.len(), 2);
    }
}

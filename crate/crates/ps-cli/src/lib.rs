//! The `pst` command line: tables, single queries and verification suites.

pub mod args;
pub mod fixtures;
pub mod verify;

use std::fmt::Write as _;
use std::io::Write;

use clap::Parser;
use ps_algebra::{
    parse_q, q_to_string, Integers, JsonRing, PairRing, PolyRing, RatFuncRing, Rationals, WittRing, Q,
};
use ps_applications::{
    inverse_polya, inverse_polya_symbolic, irr_hypersurface, sl_character_variety, stratum_mass, transitive_oracle,
    transitive_tuples, AppError, CharvarMode, CharvarValue, HyperValue, HypersurfaceSpec, Measure,
};
use ps_arrangements::{count_arrangements, enumerate_arrangements, incidence_table, poset, ArrError, Tag};
use ps_plethysm::{forward_zeta, invert_zeta_all, MeasureSequence, PlethysmError};
use ps_polysym::{Basis, PolysymElement};
use ps_types::{enumerate_types, SplittingType};
use serde_json::{json, Value};
use thiserror::Error;

use args::{ArrCmd, CharvarCmd, Cli, Command, Direction, Format, PolysymCmd, SlMode, Suite, TypesCmd};
use verify::Check;

#[derive(Debug, Error)]
pub enum CliError {
    /// Bad arguments or unreadable input; exit status 1.
    #[error("{0}")]
    Usage(String),
    /// A mathematical check failed; exit status 2.
    #[error("{message}")]
    Failure { message: String, record: Value },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Failure { .. } => 2,
        }
    }

    fn failure(message: impl Into<String>, record: Value) -> Self {
        CliError::Failure { message: message.into(), record }
    }
}

impl From<AppError> for CliError {
    fn from(e: AppError) -> Self {
        match e {
            AppError::Assertion(_) | AppError::Plethysm(PlethysmError::Integrality(_)) => {
                CliError::failure(e.to_string(), json!({ "status": "fail", "error": e.to_string() }))
            }
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<PlethysmError> for CliError {
    fn from(e: PlethysmError) -> Self {
        AppError::from(e).into()
    }
}

impl From<ArrError> for CliError {
    fn from(e: ArrError) -> Self {
        CliError::Usage(e.to_string())
    }
}

fn usage(e: impl std::fmt::Display) -> CliError {
    CliError::Usage(e.to_string())
}

/// Command output in every format the command supports.
pub struct Output {
    pub json: Value,
    pub text: String,
    pub csv: Option<String>,
}

impl Output {
    fn new(json: Value, text: String) -> Self {
        Output { json, text, csv: None }
    }

    pub fn render(&self, format: Format) -> Result<String, CliError> {
        match format {
            Format::Json => Ok(serde_json::to_string_pretty(&self.json).unwrap() + "\n"),
            Format::Ascii => Ok(if self.text.ends_with('\n') { self.text.clone() } else { format!("{}\n", self.text) }),
            Format::Csv => self.csv.clone().ok_or_else(|| usage("csv output is only available for tables and lists")),
        }
    }
}

fn parse_type(s: &str) -> Result<SplittingType, CliError> {
    s.parse().map_err(usage)
}

fn read_json(path: &std::path::Path) -> Result<Value, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

/// Parse argv, run the command and write the result. Errors carry the exit
/// status; clap handles --help and --version itself.
pub fn run<I, T>(argv: I, out: &mut dyn Write) -> Result<(), CliError>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = Cli::try_parse_from(argv).map_err(|e| CliError::Usage(e.to_string()))?;
    if cli.no_cache {
        ps_arrangements::cache::set_disk_cache_enabled(false);
    }
    let output = dispatch(&cli.command)?;
    let rendered = output.render(cli.format)?;
    match &cli.output {
        Some(path) => std::fs::write(path, rendered).map_err(|e| usage(format!("{}: {e}", path.display())))?,
        None => out.write_all(rendered.as_bytes()).map_err(usage)?,
    }
    if let Some(failed) = failed_checks(&output.json) {
        return Err(CliError::failure(format!("{failed} check(s) failed"), output.json));
    }
    Ok(())
}

fn failed_checks(v: &Value) -> Option<usize> {
    let checks = v.get("checks")?.as_array()?;
    let n = checks.iter().filter(|c| c.get("passed") == Some(&Value::Bool(false))).count();
    (n > 0).then_some(n)
}

pub fn dispatch(cmd: &Command) -> Result<Output, CliError> {
    match cmd {
        Command::Types(TypesCmd::Enumerate { degree, poset: with_poset }) => types_enumerate(*degree, *with_poset),
        Command::Arr(ArrCmd::Table { degree, tag }) => arr_table(*degree, tag.parse()?),
        Command::Arr(ArrCmd::Count { tau, lambda, squarefree }) => {
            let (t, l) = (parse_type(tau)?, parse_type(lambda)?);
            let n = count_arrangements(&t, &l, *squarefree)?;
            Ok(Output::new(json!({ "tau": t.to_json(), "lambda": l.to_json(), "squarefree": squarefree, "count": n.to_string() }), n.to_string()))
        }
        Command::Arr(ArrCmd::Tilings { tau, lambda, render }) => arr_tilings(&parse_type(tau)?, &parse_type(lambda)?, *render),
        Command::Polysym(PolysymCmd::Convert { from, to, element }) => {
            let from: Basis = from.parse().map_err(usage)?;
            let to: Basis = to.parse().map_err(usage)?;
            let mut v = read_json(element)?;
            if v.get("basis").is_none() {
                v["basis"] = json!(from.to_string());
            }
            let x = PolysymElement::from_json(&v).map_err(usage)?;
            if x.basis() != from {
                return Err(usage(format!("element is in basis {}, not {from}", x.basis())));
            }
            let y = x.convert(to);
            Ok(Output::new(y.to_json(), y.to_string()))
        }
        Command::Zeta(z) => {
            let v = read_json(&z.values)?;
            let values = match &v {
                Value::Array(a) => a.clone(),
                Value::Object(o) => o.get("values").and_then(|x| x.as_array()).cloned().ok_or_else(|| usage("no values array"))?,
                _ => return Err(usage("values must be a JSON array")),
            };
            zeta(&z.ring, z.direction, &values, z.upto)
        }
        Command::Hyper(h) => hyper(h),
        Command::Polya(p) => polya(p),
        Command::Charvar(CharvarCmd::Transitive { letters, rank, oracle }) => {
            let n = transitive_tuples(*letters, *rank)?;
            let mut j = json!({ "letters": letters, "rank": rank, "count": n.to_string() });
            let mut text = n.to_string();
            if *oracle {
                let b = transitive_oracle(*letters, *rank)?;
                j["oracle"] = json!(b);
                write!(text, " (brute force {b})").unwrap();
                if num_bigint::BigInt::from(b) != n {
                    return Err(CliError::failure(format!("formula {n} but brute force {b}"), json!({ "status": "fail", "letters": letters, "rank": rank, "formula": n.to_string(), "oracle": b })));
                }
            }
            Ok(Output::new(j, text))
        }
        Command::Charvar(CharvarCmd::Sl { degree, rank, mode }) => {
            let mode = match mode {
                SlMode::Epoly => CharvarMode::Epoly,
                SlMode::Euler => CharvarMode::Euler,
            };
            match sl_character_variety(*degree, *rank, mode)? {
                CharvarValue::RatFunc(f) => {
                    let ring = RatFuncRing::default();
                    Ok(Output::new(json!({ "degree": degree, "rank": rank, "epoly": ring.to_json(&f) }), f.to_string_var("w")))
                }
                CharvarValue::Rational(x) => Ok(Output::new(json!({ "degree": degree, "rank": rank, "euler": q_to_string(&x) }), q_to_string(&x))),
            }
        }
        Command::Verify(v) => Ok(suite(v.suite, v.max_degree)),
    }
}

fn types_enumerate(d: u32, with_poset: bool) -> Result<Output, CliError> {
    if d > ps_types::MAX_ENUM_DEGREE {
        return Err(usage(format!("degree is capped at {}", ps_types::MAX_ENUM_DEGREE)));
    }
    let types = enumerate_types(d);
    let mut j = json!({ "degree": d, "count": types.len(), "types": types.iter().map(|t| t.to_json()).collect::<Vec<_>>() });
    let mut text: String = types.iter().map(|t| format!("{t}\n")).collect();
    let mut csv = String::from("type\n");
    for t in &types {
        writeln!(csv, "\"{t}\"").unwrap();
    }
    if with_poset {
        let p = poset(d);
        let mut pairs = Vec::new();
        text.push_str("order:\n");
        for (i, a) in p.types.iter().enumerate() {
            for (k, b) in p.types.iter().enumerate() {
                if i != k && p.leq[i][k] {
                    pairs.push(json!([a.to_json(), b.to_json()]));
                    writeln!(text, "  {a} <= {b}").unwrap();
                }
            }
        }
        j["order"] = json!(pairs);
    }
    Ok(Output { json: j, text, csv: Some(csv) })
}

fn arr_table(d: u32, tag: Tag) -> Result<Output, CliError> {
    if d == 0 || d > 12 {
        return Err(usage("table degree must be in 1..=12"));
    }
    let t = incidence_table(d, tag);
    let labels: Vec<String> = t.types().iter().map(|x| x.to_string()).collect();
    let cells: Vec<Vec<String>> = t.rows().iter().map(|r| r.iter().map(q_to_string).collect()).collect();

    let mut w = csv::Writer::from_writer(Vec::new());
    let mut header = vec![format!("{tag}")];
    header.extend(labels.iter().cloned());
    w.write_record(&header).unwrap();
    for (l, r) in labels.iter().zip(&cells) {
        let mut rec = vec![l.clone()];
        rec.extend(r.iter().cloned());
        w.write_record(&rec).unwrap();
    }
    let csv = String::from_utf8(w.into_inner().unwrap()).unwrap();

    let cw = cells.iter().flatten().map(|c| c.len()).max().unwrap_or(1).max(1);
    let mut text = String::new();
    writeln!(text, "{tag} in degree {d}; rows tau, columns lambda").unwrap();
    for (i, l) in labels.iter().enumerate() {
        writeln!(text, "  [{i:>3}] {l}").unwrap();
    }
    write!(text, "{:>w$}", "", w = 6).unwrap();
    for j in 0..labels.len() {
        write!(text, " {:>cw$}", j).unwrap();
    }
    text.push('\n');
    for (i, r) in cells.iter().enumerate() {
        write!(text, "[{i:>3}] ").unwrap();
        for c in r {
            write!(text, " {c:>cw$}").unwrap();
        }
        text.push('\n');
    }
    Ok(Output { json: t.to_json(), text, csv: Some(csv) })
}

fn arr_tilings(t: &SplittingType, l: &SplittingType, render: bool) -> Result<Output, CliError> {
    let arrs = enumerate_arrangements(t, l)?;
    let j = json!({
        "tau": t.to_json(),
        "lambda": l.to_json(),
        "count": arrs.len(),
        "arrangements": arrs.iter().map(|a| json!({ "rows": a.rows, "cols": a.cols, "matrix": a.matrix })).collect::<Vec<_>>(),
    });
    let mut text = format!("{} arrangement(s) of {t} into {l}\n", arrs.len());
    for (k, a) in arrs.iter().enumerate() {
        writeln!(text, "#{}", k + 1).unwrap();
        if render {
            text.push_str(&a.render());
        } else {
            for row in &a.matrix {
                writeln!(text, "  {}", row.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")).unwrap();
            }
        }
    }
    Ok(Output::new(j, text))
}

fn zeta_in<R: JsonRing>(ring: &R, dir: Direction, values: &[Value], upto: usize) -> Result<Output, CliError> {
    let xs = values.iter().map(|v| ring.from_json(v)).collect::<Result<Vec<_>, _>>().map_err(usage)?;
    let (seq, label) = match dir {
        Direction::Invert => (MeasureSequence::irreducible(invert_zeta_all(ring, &xs, upto)?), "u"),
        Direction::Forward => (MeasureSequence::closed(forward_zeta(ring, &xs, upto)?), "x"),
    };
    let text = seq.values.iter().enumerate().map(|(i, v)| format!("{label}_{} = {}\n", i + 1, ring.display(v))).collect();
    Ok(Output::new(seq.to_json(ring), text))
}

fn zeta(ring: &str, dir: Direction, values: &[Value], upto: usize) -> Result<Output, CliError> {
    if upto == 0 {
        return Err(usage("--upto must be positive"));
    }
    match ring {
        "integers" | "Z" => zeta_in(&Integers, dir, values, upto),
        "rationals" | "Q" => zeta_in(&Rationals, dir, values, upto),
        "motivic" => zeta_in(&PolyRing::motivic(), dir, values, upto),
        "polynomial" => zeta_in(&PolyRing::rational("w"), dir, values, upto),
        "trivial" => zeta_in(&PolyRing::trivial("q"), dir, values, upto),
        "ratfunc" => zeta_in(&RatFuncRing::default(), dir, values, upto),
        "pair" => zeta_in(&PairRing::new(Rationals, Rationals), dir, values, upto),
        "witt" => zeta_in(&WittRing::new(upto), dir, values, upto),
        _ => Err(usage(format!("unknown ring {ring:?}"))),
    }
}

fn hyper_json(v: &HyperValue) -> Value {
    match v {
        HyperValue::Poly(p, var) => PolyRing::rational(var).to_json(p),
        HyperValue::Rational(x) => json!(q_to_string(x)),
        HyperValue::Pair(a, b) => json!([q_to_string(a), q_to_string(b)]),
    }
}

fn hyper(h: &args::HyperArgs) -> Result<Output, CliError> {
    let q: Option<Q> = h.q.as_deref().map(parse_q).transpose().map_err(usage)?;
    let value = if h.measure == "stratum-mass" {
        let l = parse_type(h.stratum.as_deref().ok_or_else(|| usage("stratum-mass needs --stratum"))?)?;
        if h.degree.is_some_and(|d| d != l.degree()) {
            return Err(usage("--degree disagrees with the stratum"));
        }
        HyperValue::Poly(stratum_mass(&l, h.dim)?, "q")
    } else {
        let measure: Measure = h.measure.parse()?;
        let degree = h.degree.ok_or_else(|| usage("--degree is required"))?;
        irr_hypersurface(&HypersurfaceSpec { dim: h.dim, degree, measure })?
    };
    let value = match (q, value) {
        (Some(q), HyperValue::Poly(p, _)) => HyperValue::Rational(p.eval(&q)),
        (Some(_), _) => return Err(usage("--q applies only to polynomial measures")),
        (None, v) => v,
    };
    let j = json!({ "dim": h.dim, "degree": h.degree, "measure": h.measure, "value": hyper_json(&value) });
    Ok(Output::new(j, value.to_string()))
}

fn polya(p: &args::PolyaArgs) -> Result<Output, CliError> {
    if let Some(d) = p.symbolic {
        let (ring, u) = inverse_polya_symbolic(d)?;
        let text = ring.to_text(&u);
        return Ok(Output::new(json!({ "degree": d, "u": ring.to_json(&u), "text": text }), format!("u_{d} = {text}")));
    }
    if p.x.is_empty() {
        return Err(usage("give --x values or --symbolic d"));
    }
    let x = p.x.iter().map(|s| parse_q(s)).collect::<Result<Vec<_>, _>>().map_err(usage)?;
    let u = inverse_polya(&x, x.len())?;
    let text = u.iter().enumerate().map(|(i, v)| format!("u_{} = {}\n", i + 1, q_to_string(v))).collect();
    Ok(Output::new(json!({ "x": x.iter().map(q_to_string).collect::<Vec<_>>(), "u": u.iter().map(q_to_string).collect::<Vec<_>>() }), text))
}

pub fn run_suite(s: Suite, max: u32) -> Vec<Check> {
    match s {
        Suite::Appendix => verify::reference_tables(max),
        Suite::Figure1 => verify::factorizations(),
        Suite::Identities => verify::identities(max),
        Suite::Oracles => verify::oracles(max),
    }
}

fn suite(s: Suite, max: u32) -> Output {
    let checks = run_suite(s, max);
    let name = format!("{s:?}").to_lowercase();
    let text = checks
        .iter()
        .map(|c| format!("{} {}: {}\n", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail))
        .collect();
    let mut csv = String::from("check,passed,detail\n");
    for c in &checks {
        writeln!(csv, "\"{}\",{},\"{}\"", c.name, c.passed, c.detail.replace('"', "'")).unwrap();
    }
    let j = json!({ "suite": name, "max_degree": max, "checks": checks.iter().map(Check::to_json).collect::<Vec<_>>() });
    Output { json: j, text, csv: Some(csv) }
}

/// Only the first failing check goes into the stderr record.
pub fn failure_record(e: &CliError) -> Value {
    match e {
        CliError::Usage(m) => json!({ "status": "usage", "error": m }),
        CliError::Failure { message, record } => {
            let first = record
                .get("checks")
                .and_then(|c| c.as_array())
                .and_then(|c| c.iter().find(|x| x.get("passed") == Some(&Value::Bool(false))).cloned());
            match first {
                Some(f) => json!({ "status": "fail", "error": message, "suite": record.get("suite"), "first_failure": f }),
                None => record.clone(),
            }
        }
    }
}

//! The `mpoints` command line.
//!
//! Exit codes: 0 success, 1 computation disagreement, 2 invalid model,
//! 3 usage error.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value as Json};

use crate::bundled;
use crate::graded_ring::{GradedClass, IndexSequence, TensorClass};
use crate::immersion_model::{ImmersionModel, ModelError};
use crate::model_file::{self, ModelFileError};
use crate::multipoint::{self, CharKind, Route};
use crate::oracle;
use crate::partition_series::{falling_product, h_inverse, h_series, q_partial, SpecialSeries};
use crate::partitions::{count_by_type, count_by_type_marked, type_vectors};
use crate::random;
use crate::rational::{format, int, Q};
use crate::report::{Check, Report};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DISAGREEMENT: i32 = 1;
pub const EXIT_INVALID_MODEL: i32 = 2;
pub const EXIT_USAGE: i32 = 3;

/// Largest `k` for which `auto` also runs the tensor-expanding oracle on
/// characteristic numbers.
const CHAR_ORACLE_CAP: usize = 4;

#[derive(Debug, Parser)]
#[command(name = "mpoints", version, about = "Multiple-point invariants of immersions from cohomological models")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run every consistency check on a model.
    Validate {
        /// Model file, or the name of a bundled model.
        model: String,
        #[arg(long)]
        json: bool,
    },
    /// Compute an invariant of the k-tuple point manifold.
    Compute {
        /// Model file, or the name of a bundled model.
        model: String,
        /// Multiplicity of the multiple points.
        #[arg(long)]
        k: usize,
        /// signature | bk | pontrjagin=J | chern=J, with J like 4,4
        #[arg(long, value_parser = parse_quantity)]
        quantity: Quantity,
        #[arg(long, value_enum, default_value_t = RouteArg::Auto)]
        route: RouteArg,
        #[arg(long)]
        json: bool,
    },
    /// Check the series identities, partition counts and enumeration oracle.
    Identities {
        #[arg(long, default_value_t = 6)]
        max_k: usize,
        #[arg(long)]
        json: bool,
    },
    /// List the bundled models.
    Examples {
        /// Write each bundled model as <name>.json into this directory.
        #[arg(long)]
        export: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub enum Quantity {
    Signature,
    Bk,
    Characteristic(CharKind, IndexSequence),
}

pub fn parse_quantity(s: &str) -> Result<Quantity, String> {
    match s {
        "signature" => return Ok(Quantity::Signature),
        "bk" | "B_k" => return Ok(Quantity::Bk),
        _ => {}
    }
    let (kind, j) = s
        .split_once('=')
        .ok_or_else(|| format!("unknown quantity {s:?}"))?;
    let kind = match kind {
        "pontrjagin" | "pontryagin" | "p" => CharKind::Pontrjagin,
        "chern" | "c" => CharKind::Chern,
        _ => return Err(format!("unknown quantity {kind:?}")),
    };
    let j: IndexSequence = j.parse()?;
    if j.entries().is_empty() {
        return Err("J must be nonempty".into());
    }
    Ok(Quantity::Characteristic(kind, j))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RouteArg {
    General,
    #[value(name = "via-N", alias = "via-n")]
    ViaN,
    Collected,
    #[value(name = "collected-via-N", alias = "collected-via-n")]
    CollectedViaN,
    Auto,
}

impl RouteArg {
    fn route(self) -> Option<Route> {
        match self {
            RouteArg::General => Some(Route::General),
            RouteArg::ViaN => Some(Route::ViaN),
            RouteArg::Collected => Some(Route::Collected),
            RouteArg::CollectedViaN => Some(Route::CollectedViaN),
            RouteArg::Auto => None,
        }
    }
}

struct Failure {
    code: i32,
    message: String,
}

fn fail(code: i32, message: impl Into<String>) -> Failure {
    Failure {
        code,
        message: message.into(),
    }
}

fn model_error(e: ModelError) -> Failure {
    match e {
        ModelError::BadMultiplicity | ModelError::Cap(_) | ModelError::Shape(_) => fail(EXIT_USAGE, e.to_string()),
        _ => fail(EXIT_INVALID_MODEL, e.to_string()),
    }
}

/// A path, or a bundled name if no such file exists.
pub fn resolve_model(model_arg: &str) -> Result<ImmersionModel, ModelFileError> {
    if Path::new(model_arg).exists() {
        return model_file::load(model_arg);
    }
    let name = Path::new(model_arg)
        .file_name()
        .and_then(|n| n.to_str())
        .unwrap_or(model_arg);
    match bundled::by_name(name) {
        Some(m) => Ok(m),
        None => model_file::load(model_arg),
    }
}

fn load_valid(model_arg: &str) -> Result<ImmersionModel, Failure> {
    let m = resolve_model(model_arg).map_err(|e| fail(EXIT_INVALID_MODEL, e.to_string()))?;
    let report = m.validate();
    if !report.passed() {
        return Err(fail(EXIT_INVALID_MODEL, format!("model fails validation:\n{report}")));
    }
    Ok(m)
}

fn class_json(c: &GradedClass) -> Json {
    let coords: Vec<Json> = c
        .coords()
        .iter()
        .map(|(&i, q)| json!({"index": i, "label": c.ring().label(i), "coeff": format(q)}))
        .collect();
    json!({"display": c.to_string(), "coords": coords})
}

/// Values of one quantity by several methods.
struct Evaluations<T> {
    entries: Vec<(String, T)>,
}

impl<T: PartialEq + Clone> Evaluations<T> {
    fn new() -> Self {
        Evaluations { entries: Vec::new() }
    }

    fn push(&mut self, name: impl Into<String>, v: T) {
        self.entries.push((name.into(), v));
    }

    /// Records `r` unless it failed on an unmet precondition.
    fn push_if_applicable(&mut self, name: &str, r: Result<T, ModelError>) -> Result<(), Failure> {
        match r {
            Ok(v) => {
                self.push(name, v);
                Ok(())
            }
            Err(ModelError::Precondition { .. }) => Ok(()),
            Err(e) => Err(model_error(e)),
        }
    }

    fn agree(&self) -> bool {
        self.entries.windows(2).all(|w| w[0].1 == w[1].1)
    }
}

fn compute(
    model_arg: &str,
    k: usize,
    quantity: &Quantity,
    route: RouteArg,
    as_json: bool,
    out: &mut dyn Write,
) -> Result<i32, Failure> {
    let m = load_valid(model_arg)?;
    if k == 0 {
        return Err(fail(EXIT_USAGE, "k must be at least 1"));
    }
    let dims = m.multiple_point_dimensions(k);
    let auto = route == RouteArg::Auto;
    let (quantity_name, value_json, value_text, methods, warnings, agree) = match quantity {
        Quantity::Signature => {
            let mut ev = Evaluations::new();
            let routes: Vec<Route> = route.route().map(|r| vec![r]).unwrap_or(Route::ALL.to_vec());
            for r in routes {
                ev.push(r.name(), multipoint::signature_value(&m, k, r).map_err(model_error)?);
            }
            if auto {
                if k <= oracle::DEFAULT_CAP {
                    let e = oracle::sigma_enumerated(&m, k, oracle::DEFAULT_CAP).map_err(model_error)?;
                    ev.push("oracle", e.value);
                }
                ev.push_if_applicable("pulled-from-N", multipoint::pulled_from_n_signature(&m, k))?;
                ev.push_if_applicable("euler-zero", multipoint::euler_zero_signature(&m, k))?;
                ev.push_if_applicable("euler-zero-via-N", multipoint::euler_zero_signature_via_n(&m, k))?;
                ev.push_if_applicable("pushpull-zero", multipoint::pushpull_zero_signature(&m, k))?;
                ev.push_if_applicable("nullhomotopic", multipoint::szucs_signature(&m, k))?;
                if m.parts().len() == k {
                    ev.push_if_applicable("virtual-signature", multipoint::hirzebruch_from_model(&m))?;
                }
            }
            let first = ev.entries[0].1.clone();
            let warnings = multipoint::signature(&m, k, Route::General)
                .map_err(model_error)?
                .warnings;
            let methods: Vec<(String, String)> = ev.entries.iter().map(|(n, v)| (n.clone(), format(v))).collect();
            (
                "signature".to_string(),
                json!(format(&first)),
                format(&first),
                methods,
                warnings,
                ev.agree(),
            )
        }
        Quantity::Bk => {
            let mut ev = Evaluations::new();
            match route {
                RouteArg::General => ev.push("partition-sum", multipoint::b_k_partition_sum(&m, k).map_err(model_error)?),
                RouteArg::Collected | RouteArg::CollectedViaN => {
                    ev.push("collected", multipoint::b_k(&m, k).map_err(model_error)?)
                }
                RouteArg::ViaN => return Err(fail(EXIT_USAGE, "B_k lives on N; use general, collected or auto")),
                RouteArg::Auto => {
                    ev.push("collected", multipoint::b_k(&m, k).map_err(model_error)?);
                    ev.push("partition-sum", multipoint::b_k_partition_sum(&m, k).map_err(model_error)?);
                    if k <= oracle::DEFAULT_CAP {
                        let e = oracle::bk_enumerated(&m, k, oracle::DEFAULT_CAP).map_err(model_error)?;
                        ev.push("oracle", e.value);
                    }
                    if m.is_union() {
                        ev.push("union-convolution", multipoint::b_k_union(m.parts(), k).map_err(model_error)?);
                    }
                }
            }
            let first = ev.entries[0].1.clone();
            let methods = ev.entries.iter().map(|(n, v)| (n.clone(), v.to_string())).collect();
            ("B_k".to_string(), class_json(&first), first.to_string(), methods, vec![], ev.agree())
        }
        Quantity::Characteristic(kind, j) => {
            let routes = match route {
                RouteArg::Auto => vec![Route::General, Route::ViaN],
                RouteArg::General => vec![Route::General],
                RouteArg::ViaN => vec![Route::ViaN],
                _ => return Err(fail(EXIT_USAGE, "characteristic numbers support the general and via-N routes")),
            };
            let mut ev = Evaluations::new();
            let mut warnings = Vec::new();
            for r in routes {
                let res = multipoint::characteristic_number(&m, k, *kind, j, r).map_err(model_error)?;
                warnings = res.warnings.clone();
                ev.push(r.name(), res.rational().expect("rational").clone());
            }
            if auto {
                if k <= CHAR_ORACLE_CAP {
                    let e = oracle::characteristic_enumerated(&m, k, *kind, j, CHAR_ORACLE_CAP).map_err(model_error)?;
                    let v = if warnings.is_empty() { e.value } else { Q::from_integer(0.into()) };
                    ev.push("oracle", v);
                }
                if warnings.is_empty() {
                    ev.push_if_applicable("pulled-from-N", multipoint::pulled_from_n_characteristic(&m, k, *kind, j))?;
                    ev.push_if_applicable("euler-zero", multipoint::euler_zero_pontrjagin(&m, k, *kind, j))?;
                    ev.push_if_applicable("pushpull-zero", multipoint::pushpull_zero_characteristic(&m, k, *kind, j))?;
                    if *kind == CharKind::Pontrjagin {
                        ev.push_if_applicable("nullhomotopic", multipoint::szucs_pontrjagin(&m, k, j))?;
                    }
                }
            }
            let first = ev.entries[0].1.clone();
            let name = match kind {
                CharKind::Pontrjagin => format!("p_{j}"),
                CharKind::Chern => format!("c_{j}"),
            };
            let methods = ev.entries.iter().map(|(n, v)| (n.clone(), format(v))).collect();
            (name, json!(format(&first)), format(&first), methods, warnings, ev.agree())
        }
    };
    let w = |e: std::io::Error| fail(EXIT_USAGE, e.to_string());
    if as_json {
        let methods: serde_json::Map<String, Json> = methods.iter().map(|(n, v)| (n.clone(), json!(v))).collect();
        let doc = json!({
            "model": model_arg,
            "k": k,
            "quantity": quantity_name,
            "value": value_json,
            "methods": methods,
            "agree": agree,
            "dimensions": dims,
            "warnings": warnings,
        });
        writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("json")).map_err(w)?;
    } else {
        writeln!(out, "{value_text}").map_err(w)?;
        for (n, v) in &methods {
            writeln!(out, "  {n}: {v}").map_err(w)?;
        }
        writeln!(out, "  dim Δ_{k} = {dims:?}").map_err(w)?;
        for warning in &warnings {
            writeln!(out, "  warning: {warning}").map_err(w)?;
        }
        if !agree {
            writeln!(out, "  DISAGREEMENT between methods").map_err(w)?;
        }
    }
    Ok(if agree { EXIT_OK } else { EXIT_DISAGREEMENT })
}

/// Bell(1..=n) by the Bell triangle, independent of any enumeration.
fn bell_triangle(n: usize) -> Vec<usize> {
    let mut row = vec![1usize];
    let mut bells = vec![];
    for _ in 0..n {
        let mut next = vec![*row.last().expect("nonempty")];
        for &x in &row {
            let y = next.last().expect("nonempty") + x;
            next.push(y);
        }
        row = next;
        bells.push(row[0]);
    }
    bells
}

/// The identity suite run by `mpoints identities`.
pub fn identity_suite(max_k: usize) -> Report {
    let mut r = Report::default();
    let order = max_k.max(8);

    let inv = h_series(order).invert().expect("invertible");
    r.push(Check::from_witness(
        format!("series: invert(H) = C_k e^(k-1) through order {order}"),
        (inv != h_inverse(order)).then(|| format!("{:?}", inv.coeffs())),
    ));
    let c: Vec<Q> = (1..=6).map(|k| inv.coeff(k).expect("k <= order").coeff(k - 1)).collect();
    let expected: Vec<Q> = [1, -1, 2, -6, 24, -120].into_iter().map(int).collect();
    r.push(Check::from_witness(
        "series: (C_1..C_6) = (1,-1,2,-6,24,-120)",
        (c != expected).then(|| c.iter().map(format).collect::<Vec<_>>().join(",")),
    ));
    let e = SpecialSeries::identity(order).expect("order >= 1");
    r.push(Check::from_witness(
        format!("series: H o invert(H) = E through order {order}"),
        (h_series(order).compose(&inv).expect("same order") != e).then(|| "composite differs".to_string()),
    ));
    let h = h_series(max_k);
    let hi = h_inverse(max_k);
    let bad = (1..=max_k).find(|&k| {
        let v = oracle::compose_enumerated(h.coeffs(), hi.coeffs(), k).value;
        v != e.coeff(k).expect("k <= order").clone()
    });
    r.push(Check::from_witness(
        format!("oracle: enumerated H o invert(H) = E through order {max_k}"),
        bad.map(|k| format!("order {k}")),
    ));
    let mut g = random::rng(1);
    let mut witness = None;
    for _ in 0..5 {
        let a: Vec<Q> = (0..max_k).map(|_| int(rand::Rng::gen_range(&mut g, -3..=3))).collect();
        let b: Vec<Q> = (0..max_k).map(|_| int(rand::Rng::gen_range(&mut g, -3..=3))).collect();
        let fast = SpecialSeries::new(b.clone())
            .expect("nonempty")
            .compose(&SpecialSeries::new(a.clone()).expect("nonempty"))
            .expect("same order");
        if let Some(k) = (1..=max_k).find(|&k| &oracle::compose_enumerated(&b, &a, k).value != fast.coeff(k).expect("k")) {
            witness = Some(format!("order {k}"));
        }
    }
    r.push(Check::from_witness(
        format!("oracle: enumerated composition = collected composition, order {max_k}"),
        witness,
    ));
    let bad = (1..=max_k).find(|&n| q_partial(n) != falling_product(n));
    r.push(Check::from_witness(
        format!("series: d^n q(x,y,0) = prod (y - i x), n <= {max_k}"),
        bad.map(|n| format!("n = {n}: {:?} vs {:?}", q_partial(n), falling_product(n))),
    ));

    let bells = bell_triangle(max_k);
    let sizes: Vec<usize> = (1..=max_k).map(oracle::bell).collect();
    r.push(Check::from_witness(
        format!("partitions: |Eq(k)| = Bell(k), k <= {max_k}"),
        (sizes != bells).then(|| format!("{sizes:?} vs {bells:?}")),
    ));
    let mut witness = None;
    for k in 1..=max_k {
        let counts = oracle::type_counts(k);
        let mut sum = Q::from_integer(0.into());
        for t in type_vectors(k) {
            let c = count_by_type(k, &t.0).expect("type of k");
            let n = counts.get(&t.0).copied().unwrap_or(0);
            if c != int(n as i64) {
                witness = Some(format!("k={k} type {:?}: {c} vs {n}", t.0));
            }
            sum += c;
        }
        if sum != int(bells[k - 1] as i64) {
            witness = Some(format!("k={k}: type counts sum to {sum}"));
        }
        for l in 1..=k {
            let rests: Vec<Vec<usize>> = if l == k {
                vec![vec![0; k]]
            } else {
                type_vectors(k - l)
                    .into_iter()
                    .map(|t| {
                        let mut v = t.0;
                        v.resize(k, 0);
                        v
                    })
                    .collect()
            };
            for t in rests {
                let c = count_by_type_marked(k, l, &t).expect("marked type");
                let n = oracle::marked_count(k, l, &t);
                if c != int(n as i64) {
                    witness = Some(format!("k={k} l={l} {t:?}: {c} vs {n}"));
                }
            }
        }
    }
    r.push(Check::from_witness(
        format!("partitions: type and marked counts match filtering, k <= {max_k}"),
        witness,
    ));

    for (name, m) in bundled::all() {
        let mut g = random::rng(7);
        let mut witness = None;
        for k in 1..=max_k.min(4) {
            let x = random::random_tensor(m.hm(), k, 3, &mut g);
            let lx = TensorClass::cross(&vec![m.l_nu_inv().expect("L").clone(); k]).expect("cross");
            for t in [x, lx] {
                match multipoint::recursion_check_tensor(&m, &t) {
                    Ok(true) => {}
                    Ok(false) => witness = Some(format!("k={k}: {t}")),
                    Err(e) => witness = Some(e.to_string()),
                }
            }
        }
        r.push(Check::from_witness(format!("{name}: recursion identity, k <= {}", max_k.min(4)), witness));

        let witness = (1..=max_k).find_map(|k| {
            let a = multipoint::b_k(&m, k).ok()?;
            let b = oracle::bk_enumerated(&m, k, oracle::DEFAULT_CAP).ok()?.value;
            (a != b).then(|| format!("k={k}: {a} vs {b}"))
        });
        r.push(Check::from_witness(format!("{name}: collected B_k = enumerated B_k, k <= {max_k}"), witness));

        let witness = (1..=max_k).find_map(|k| {
            let vals: Vec<Q> = Route::ALL
                .iter()
                .filter_map(|&route| multipoint::signature_value(&m, k, route).ok())
                .chain(oracle::sigma_enumerated(&m, k, oracle::DEFAULT_CAP).ok().map(|e| e.value))
                .collect();
            (vals.len() != 5 || vals.windows(2).any(|w| w[0] != w[1]))
                .then(|| format!("k={k}: {}", vals.iter().map(format).collect::<Vec<_>>().join(", ")))
        });
        r.push(Check::from_witness(format!("{name}: signature routes agree, k <= {max_k}"), witness));
    }
    r
}

fn run_command(cmd: Command, out: &mut dyn Write) -> Result<i32, Failure> {
    let w = |e: std::io::Error| fail(EXIT_USAGE, e.to_string());
    match cmd {
        Command::Validate { model, json } => {
            let m = resolve_model(&model).map_err(|e| fail(EXIT_INVALID_MODEL, e.to_string()))?;
            let report = m.validate();
            if json {
                let doc = json!({"model": model, "passed": report.passed(), "checks": report.checks, "warnings": report.warnings});
                writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("json")).map_err(w)?;
            } else {
                write!(out, "{report}").map_err(w)?;
                let n = report.failures().count();
                if n == 0 {
                    writeln!(out, "valid: {} checks passed", report.checks.len()).map_err(w)?;
                } else {
                    writeln!(out, "invalid: {n} of {} checks failed", report.checks.len()).map_err(w)?;
                }
            }
            Ok(if report.passed() { EXIT_OK } else { EXIT_INVALID_MODEL })
        }
        Command::Compute {
            model,
            k,
            quantity,
            route,
            json,
        } => compute(&model, k, &quantity, route, json, out),
        Command::Identities { max_k, json } => {
            if max_k == 0 || max_k > oracle::DEFAULT_CAP {
                return Err(fail(EXIT_USAGE, format!("--max-k must be in 1..={}", oracle::DEFAULT_CAP)));
            }
            let report = identity_suite(max_k);
            if json {
                let doc = json!({"passed": report.passed(), "checks": report.checks});
                writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("json")).map_err(w)?;
            } else {
                write!(out, "{report}").map_err(w)?;
            }
            Ok(if report.passed() { EXIT_OK } else { EXIT_DISAGREEMENT })
        }
        Command::Examples { export, json } => {
            let models = bundled::all();
            if let Some(dir) = &export {
                std::fs::create_dir_all(dir).map_err(|e| fail(EXIT_USAGE, format!("{}: {e}", dir.display())))?;
                for (name, m) in &models {
                    let path = dir.join(format!("{name}.json"));
                    let text = model_file::to_json(m).map_err(|e| fail(EXIT_INVALID_MODEL, e.to_string()))?;
                    std::fs::write(&path, text).map_err(|e| fail(EXIT_USAGE, format!("{}: {e}", path.display())))?;
                }
            }
            if json {
                let list: Vec<Json> = models
                    .iter()
                    .map(|(name, m)| {
                        json!({
                            "name": name,
                            "description": bundled::describe(name),
                            "dim_M": m.hm().components().iter().map(|c| c.top_degree).collect::<Vec<_>>(),
                            "dim_N": m.hn().top_degree(),
                            "codim": m.codim(),
                        })
                    })
                    .collect();
                writeln!(out, "{}", serde_json::to_string_pretty(&list).expect("json")).map_err(w)?;
            } else {
                for (name, m) in &models {
                    let dims: Vec<u32> = m.hm().components().iter().map(|c| c.top_degree).collect();
                    writeln!(
                        out,
                        "{name:<18} dim M = {dims:?}, dim N = {}, codim {}  {}",
                        m.hn().top_degree(),
                        m.codim(),
                        bundled::describe(name)
                    )
                    .map_err(w)?;
                }
                if let Some(dir) = &export {
                    writeln!(out, "wrote {} models to {}", models.len(), dir.display()).map_err(w)?;
                }
            }
            Ok(EXIT_OK)
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{text}");
            } else {
                let _ = write!(out, "{text}");
            }
            return code;
        }
    };
    match run_command(cli.command, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let mut full = vec!["mpoints"];
        full.extend_from_slice(args);
        let code = run(full, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn quantities_parse() {
        assert_eq!(parse_quantity("signature"), Ok(Quantity::Signature));
        assert_eq!(parse_quantity("bk"), Ok(Quantity::Bk));
        assert_eq!(
            parse_quantity("pontrjagin=4,4"),
            Ok(Quantity::Characteristic(CharKind::Pontrjagin, IndexSequence::new(vec![4, 4]).unwrap()))
        );
        assert_eq!(
            parse_quantity("chern=(2,2)"),
            Ok(Quantity::Characteristic(CharKind::Chern, IndexSequence::new(vec![2, 2]).unwrap()))
        );
        assert!(parse_quantity("chern=3").is_err());
        assert!(parse_quantity("euler").is_err());
        assert!(parse_quantity("chern=").is_err());
    }

    #[test]
    fn bell_numbers() {
        assert_eq!(bell_triangle(7), vec![1, 2, 5, 15, 52, 203, 877]);
    }

    #[test]
    fn first_line_is_the_value() {
        let (code, out, _) = run_capture(&["compute", "two-lines", "--k", "2", "--quantity", "signature"]);
        assert_eq!(code, EXIT_OK);
        assert_eq!(out.lines().next(), Some("1"));
        let (code, out, _) = run_capture(&["compute", "hypersurface-d4", "--k", "1", "--quantity", "pontrjagin=4"]);
        assert_eq!(code, EXIT_OK);
        assert_eq!(out.lines().next(), Some("-48"));
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run_capture(&[]).0, EXIT_USAGE);
        assert_eq!(run_capture(&["--help"]).0, EXIT_OK);
        let (code, _, err) = run_capture(&["compute", "two-lines", "--k", "0", "--quantity", "bk"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("at least 1"));
        assert_eq!(run_capture(&["compute", "two-lines", "--k", "1", "--quantity", "nope"]).0, EXIT_USAGE);
        assert_eq!(run_capture(&["validate", "missing.json"]).0, EXIT_INVALID_MODEL);
    }

    #[test]
    fn identity_suite_passes() {
        let r = identity_suite(5);
        assert!(r.passed(), "{r}");
    }
}

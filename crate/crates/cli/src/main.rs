use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use serde_json::{json, Map, Value};

use clasperkit::clasper::{bracket, eval_on_combination, ChordClasper, ClasperGraph, ClasperSpec};
use clasperkit::covers::{
    alexander_from_presentation, decomposition_check, expansion_ok, slice_form_holds, vanishing_alexander,
    wheel_alexander_closed, wheel_c_series, wheel_presentation,
};
use clasperkit::diagram::fox_alexander;
use clasperkit::json::{
    conway_to_json, diagram_from_json, diagram_to_json, laurent_to_json, matrix_to_json, rational_string,
    series_to_json,
};
use clasperkit::ring::{symmetric_normalize, unit_equivalent, LaurentPoly};
use clasperkit::skein::{c_coeffs, c_coefficient, c_series, conway_to_alexander, d_coeffs, ConwaySolver, SkeinStrategy};
use clasperkit::verify::{verify_all, Check};
use clasperkit::weights::{eval_wheel_clasper, WeightFunctional};
use clasperkit::web::{StuOrder, WebDiagram, WebSpec};

#[derive(Parser)]
#[command(name = "clasperkit", version, about = "Exact computations with claspers, Conway polynomials and weight systems")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format. Only JSON output is byte-stable.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Seed for randomized checks and seeded strategies.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Add wall-clock runtime to the report.
    #[arg(long, global = true)]
    timings: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Conway polynomial of a diagram, optionally with C(h) and its coefficients.
    Conway {
        #[arg(long)]
        pd: PathBuf,
        #[arg(long)]
        series_order: Option<usize>,
    },
    /// Alexander polynomial by Fox calculus and by the skein route.
    Alexander {
        #[arg(long)]
        pd: PathBuf,
    },
    /// Cyclic-cover presentation and polynomials for the wheel with 2n spokes.
    Wheel {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        series_order: Option<usize>,
    },
    /// Reduction certificate for a complete primitive graph with negative Euler characteristic.
    Vanish {
        #[arg(long)]
        graph: PathBuf,
    },
    /// Weight-system evaluations.
    Weights {
        #[command(subcommand)]
        command: WeightsCommand,
    },
    /// An invariant on the alternating sum over subsets of chord claspers.
    Bracket {
        #[arg(long)]
        pd: PathBuf,
        #[arg(long)]
        claspers: PathBuf,
        #[arg(long, default_value = "c2")]
        invariant: String,
    },
    /// Runs every end-to-end check.
    VerifyAll {
        #[arg(long, default_value_t = 4)]
        max_n: usize,
    },
}

#[derive(Subcommand)]
enum WeightsCommand {
    Eval {
        #[arg(long)]
        web: PathBuf,
        #[arg(long)]
        degree: usize,
        #[arg(long, value_enum, default_value_t = Route::Both)]
        route: Route,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Route {
    Brute,
    Clasper,
    Both,
}

/// Input the command cannot use; exits with status 2.
struct BadInput(String);

impl<E: std::fmt::Display> From<E> for BadInput {
    fn from(e: E) -> Self {
        BadInput(e.to_string())
    }
}

struct Report {
    command: &'static str,
    inputs: Value,
    outputs: Map<String, Value>,
    checks: Vec<Check>,
}

impl Report {
    fn new(command: &'static str, inputs: Value) -> Self {
        Report { command, inputs, outputs: Map::new(), checks: Vec::new() }
    }

    fn out(&mut self, key: &str, v: Value) {
        self.outputs.insert(key.to_string(), v);
    }

    fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

fn read_json(path: &Path) -> Result<Value, BadInput> {
    let text = std::fs::read_to_string(path).map_err(|e| BadInput(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| BadInput(format!("{}: {e}", path.display())))
}

fn strings<T: ToString>(xs: &[T]) -> Value {
    json!(xs.iter().map(ToString::to_string).collect::<Vec<_>>())
}

fn conway_cmd(pd: &Path, series_order: Option<usize>, seed: u64) -> Result<Report, BadInput> {
    let d = diagram_from_json(&read_json(pd)?)?;
    let mut r = Report::new("conway", json!({ "pd": pd.display().to_string(), "series_order": series_order }));
    let strategy = if seed == 0 { SkeinStrategy::Standard } else { SkeinStrategy::Seeded(seed) };
    let p = ConwaySolver::new(strategy).conway(&d)?;
    r.out("conway", conway_to_json(&p));
    r.out("conway_text", json!(p.to_string()));
    if let Some(order) = series_order {
        let s = c_series(&p, order);
        r.out("c_series", series_to_json(&s));
        match c_coeffs(&s) {
            Ok(c) => {
                r.out("c", strings(&c));
                r.checks.push(Check::new("odd_coefficients_vanish", true, true));
            }
            Err(e) => r.checks.push(Check::new("odd_coefficients_vanish", true, e)),
        }
        if d.is_knot() {
            r.out("d", strings(&d_coeffs(&s)?));
        }
    }
    Ok(r)
}

fn alexander_cmd(pd: &Path) -> Result<Report, BadInput> {
    let d = diagram_from_json(&read_json(pd)?)?;
    if !d.is_knot() {
        return Err(BadInput(format!("{}: the Alexander polynomial needs a knot", pd.display())));
    }
    let mut r = Report::new("alexander", json!({ "pd": pd.display().to_string() }));
    let fox = symmetric_normalize(&fox_alexander(&d)?)?;
    let skein = conway_to_alexander(&ConwaySolver::new(SkeinStrategy::Standard).conway(&d)?)?;
    r.out("fox", laurent_to_json(&fox));
    r.out("skein", laurent_to_json(&skein));
    r.out("alexander_text", json!(fox.to_string()));
    r.checks.push(Check::new("fox_equals_skein", &fox, &skein));
    Ok(r)
}

fn wheel_cmd(n: usize, series_order: Option<usize>) -> Result<Report, BadInput> {
    let order = series_order.unwrap_or(2 * n + 2);
    let mut r = Report::new("wheel", json!({ "n": n, "series_order": order }));
    let p = wheel_presentation(n)?;
    let det = alexander_from_presentation(&p)?;
    let a = symmetric_normalize(&det)?;
    let closed = wheel_alexander_closed(n);
    let s = wheel_c_series(n, order)?;
    r.out("presentation", json!({ "generators": p.generators, "relations": matrix_to_json(&p.relations) }));
    r.out("determinant", laurent_to_json(&det));
    r.out("alexander", laurent_to_json(&a));
    r.out("alexander_text", json!(a.to_string()));
    r.out("closed_form", laurent_to_json(&closed));
    r.out("c_series", series_to_json(&s));
    r.out("d_coeffs", strings(&d_coeffs(&s)?));
    let ue = unit_equivalent(&det, &closed);
    let slice = slice_form_holds(&det, n);
    r.out("unit_equivalent", json!(ue));
    r.out("slice_form", json!(slice));
    r.checks.push(Check::new("unit_equivalent", true, ue));
    r.checks.push(Check::new("slice_form", true, slice));
    r.checks.push(Check::new("decomposition", true, decomposition_check(&p)));
    r.checks.push(Check::new("expansion", true, expansion_ok(&s, n)));
    Ok(r)
}

fn vanish_cmd(path: &Path) -> Result<Report, BadInput> {
    let spec: ClasperSpec = serde_json::from_value(read_json(path)?)?;
    let g = spec.build()?;
    let mut r = Report::new("vanish", json!({ "graph": path.display().to_string() }));
    let (a, trace) = vanishing_alexander(&g)?;
    r.out("trace", serde_json::to_value(&trace)?);
    r.out("alexander", laurent_to_json(&a));
    r.checks.push(Check::new("alexander_is_one", LaurentPoly::one(), &a));
    r.checks.push(Check::new("ends_empty", true, trace.ends_empty));
    Ok(r)
}

/// The cover route: wheels through the closed form, negative-χ graphs
/// through the reduction to the unknot.
fn clasper_route(w: &WebDiagram, degree: usize) -> Result<BigRational, BadInput> {
    if degree % 2 == 0 && degree > 0 && *w == WebDiagram::wheel(degree)? {
        return Ok(eval_wheel_clasper(degree / 2)?);
    }
    let c = w.classify();
    if c.chi < 0 && c.primitive && c.complete {
        let (a, _) = vanishing_alexander(&ClasperGraph::from_web(w))?;
        if a == LaurentPoly::one() {
            return Ok(BigRational::from_integer(0.into()));
        }
    }
    Err(BadInput("no clasper route for this diagram: it is neither a wheel nor complete primitive with χ < 0".into()))
}

fn weights_cmd(path: &Path, degree: usize, route: Route, seed: u64) -> Result<Report, BadInput> {
    let spec: WebSpec = serde_json::from_value(read_json(path)?)?;
    let w = spec.build()?;
    if w.degree() != degree {
        return Err(BadInput(format!("diagram has degree {} but --degree is {degree}", w.degree())));
    }
    let route_name = match route {
        Route::Brute => "brute",
        Route::Clasper => "clasper",
        Route::Both => "both",
    };
    let mut r = Report::new("weights eval", json!({ "web": path.display().to_string(), "degree": degree, "route": route_name }));
    r.out("classification", serde_json::to_value(w.classify())?);
    let mut values = Vec::new();
    if route != Route::Clasper {
        let order = if seed == 0 { StuOrder::LowestIndex } else { StuOrder::Seeded(seed) };
        let v = WeightFunctional::new(degree).eval_web(&w, order)?;
        r.out("brute", json!(rational_string(&v)));
        values.push(v);
    }
    if route != Route::Brute {
        let v = clasper_route(&w, degree)?;
        r.out("clasper", json!(rational_string(&v)));
        values.push(v);
    }
    if let [a, b] = values.as_slice() {
        r.out("agreement", json!(a == b));
        r.checks.push(Check::new("routes_agree", a, b));
    }
    Ok(r)
}

fn parse_invariant(s: &str) -> Result<usize, BadInput> {
    s.strip_prefix('c')
        .and_then(|k| k.parse().ok())
        .ok_or_else(|| BadInput(format!("unknown invariant {s:?}; expected c<k>, e.g. c2")))
}

fn bracket_cmd(pd: &Path, claspers: &Path, invariant: &str) -> Result<Report, BadInput> {
    let k = parse_invariant(invariant)?;
    let d = diagram_from_json(&read_json(pd)?)?;
    let raw = read_json(claspers)?;
    let cs: Vec<ChordClasper> = serde_json::from_value::<Vec<ChordClasper>>(raw.clone()).or_else(|_| {
        serde_json::from_value::<Vec<usize>>(raw).map(|v| v.into_iter().map(|site| ChordClasper { site }).collect())
    })?;
    let x = bracket(&d, &cs)?;
    let mut r = Report::new(
        "bracket",
        json!({ "pd": pd.display().to_string(), "claspers": cs.iter().map(|c| c.site).collect::<Vec<_>>(), "invariant": invariant }),
    );
    let mut solver = ConwaySolver::new(SkeinStrategy::Standard);
    let terms: Vec<Value> =
        x.terms().iter().map(|(e, c)| json!({ "coeff": rational_string(c), "diagram": diagram_to_json(e) })).collect();
    r.out("terms", json!(terms));
    let v = eval_on_combination(|e| c_coefficient(&mut solver, e, k), &x)?;
    r.out("value", json!(rational_string(&v)));
    Ok(r)
}

fn verify_cmd(max_n: usize, seed: u64) -> Report {
    let mut r = Report::new("verify-all", json!({ "max_n": max_n, "seed": seed }));
    r.checks = verify_all(max_n, seed);
    r.out("checks_run", json!(r.checks.len()));
    r.out("checks_failed", json!(r.checks.iter().filter(|c| !c.pass).count()));
    r
}

fn render(r: &Report, format: Format, runtime_ms: Option<u128>) -> String {
    match format {
        Format::Json => {
            let mut v = json!({
                "command": r.command,
                "inputs": r.inputs,
                "outputs": r.outputs,
                "checks": r.checks,
                "pass": r.passed(),
            });
            if let Some(ms) = runtime_ms {
                v["runtime_ms"] = json!(ms as u64);
            }
            serde_json::to_string_pretty(&v).expect("values serialize") + "\n"
        }
        Format::Text => {
            let mut s = format!("{}\n", r.command);
            for (k, v) in &r.outputs {
                let v = match v {
                    Value::String(t) => t.clone(),
                    other => other.to_string(),
                };
                s += &format!("  {k}: {v}\n");
            }
            for c in &r.checks {
                let tag = if c.pass { "PASS" } else { "FAIL" };
                s += &format!("{tag} {}  expected {}  got {}\n", c.name, c.expected, c.actual);
            }
            if let Some(ms) = runtime_ms {
                s += &format!("runtime {ms} ms\n");
            }
            s
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let result = match &cli.command {
        Command::Conway { pd, series_order } => conway_cmd(pd, *series_order, cli.seed),
        Command::Alexander { pd } => alexander_cmd(pd),
        Command::Wheel { n, series_order } => wheel_cmd(*n, *series_order),
        Command::Vanish { graph } => vanish_cmd(graph),
        Command::Weights { command: WeightsCommand::Eval { web, degree, route } } => {
            weights_cmd(web, *degree, *route, cli.seed)
        }
        Command::Bracket { pd, claspers, invariant } => bracket_cmd(pd, claspers, invariant),
        Command::VerifyAll { max_n } => Ok(verify_cmd(*max_n, cli.seed)),
    };
    match result {
        Ok(r) => {
            let ms = cli.timings.then(|| start.elapsed().as_millis());
            print!("{}", render(&r, cli.format, ms));
            if r.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(BadInput(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

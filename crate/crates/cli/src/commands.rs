use std::fmt::Write as _;
use std::fs;

use anyhow::{bail, Context, Result};
use serde_json::{json, Value};

use zonotopal::equivariance::{self, AutoElem, Which};
use zonotopal::exact::format_rat;
use zonotopal::matroid::Matroid;
use zonotopal::{
    io, orlik_terao as ot, schubert, zonotopal as zt, Error, GraphMode, LinearSpace, Report,
};

use crate::{Command, Format, Input, Kind, Mode, Space, Theorem};

pub struct Output {
    pub text: String,
    pub passed: bool,
}

struct Rendered {
    text: String,
    json: Value,
    passed: bool,
    seeded: bool,
}

impl Rendered {
    fn ok(text: String, json: Value) -> Self {
        Self {
            text,
            json,
            passed: true,
            seeded: false,
        }
    }

    fn report(report: &Report) -> Self {
        let verdict = if report.passed() { "PASS" } else { "FAIL" };
        Self {
            text: format!("{report}{verdict}\n"),
            json: serde_json::to_value(report).expect("reports serialize"),
            passed: report.passed(),
            seeded: false,
        }
    }
}

fn load(input: &Input) -> Result<LinearSpace> {
    let text = fs::read_to_string(&input.path)
        .with_context(|| format!("reading {}", input.path.display()))?;
    let is_graph = input.path.extension().is_some_and(|e| e == "graph");
    let space = match input.mode {
        Some(mode) => {
            let graph = io::parse_graph(&text)?;
            let mode = match mode {
                Mode::Graphical => GraphMode::Graphical,
                Mode::Cographical => GraphMode::Cographical,
            };
            LinearSpace::from_graph(&graph, mode)?
        }
        None if is_graph => bail!("graph input needs --mode graphical|cographical"),
        None => io::parse_matrix(&text)?,
    };
    Ok(space)
}

fn input_of(cmd: &Command) -> &Input {
    match cmd {
        Command::Matroid { input, .. }
        | Command::Hilbert { input, .. }
        | Command::Verify { input, .. }
        | Command::Betti { input }
        | Command::Euler { input, .. }
        | Command::Char { input, .. }
        | Command::Audit { input, .. } => input,
    }
}

fn name_of(cmd: &Command) -> &'static str {
    match cmd {
        Command::Matroid { .. } => "matroid",
        Command::Hilbert { .. } => "hilbert",
        Command::Verify { .. } => "verify",
        Command::Betti { .. } => "betti",
        Command::Euler { .. } => "euler",
        Command::Char { .. } => "char",
        Command::Audit { .. } => "audit",
    }
}

pub fn run(cmd: &Command) -> Result<Output> {
    let input = input_of(cmd);
    let a = load(input)?;
    let rendered = match cmd {
        Command::Matroid { dual, .. } => matroid(&a, *dual)?,
        Command::Hilbert { kind, .. } => hilbert(&a, *kind)?,
        Command::Verify {
            theorem,
            orders,
            auto,
            ..
        } => verify(&a, *theorem, orders, auto.as_deref(), input.seed)?,
        Command::Betti { .. } => {
            let table = schubert::betti_table(&a)?;
            Rendered::ok(table.to_string(), serde_json::to_value(&table)?)
        }
        Command::Euler { graded, .. } => Rendered::report(&if *graded {
            schubert::graded_euler(&a)?
        } else {
            schubert::euler_identity(&a)?
        }),
        Command::Char {
            which, deg, auto, ..
        } => characters(&a, *which, *deg, auto)?,
        Command::Audit { k, trials, .. } => audit(&a, *k, *trials, input.seed)?,
    };
    let text = match input.format {
        Format::Text => {
            let mut text = String::new();
            if rendered.seeded {
                writeln!(text, "# seed: {}", input.seed)?;
            }
            text.push_str(&rendered.text);
            text
        }
        Format::Json => {
            let envelope = json!({
                "command": name_of(cmd),
                "input": input.path.display().to_string(),
                "seed": input.seed,
                "passed": rendered.passed,
                "result": rendered.json,
            });
            format!("{}\n", serde_json::to_string_pretty(&envelope)?)
        }
    };
    Ok(Output {
        text,
        passed: rendered.passed,
    })
}

fn set_labels(a: &LinearSpace, set: zonotopal::ElementSet) -> String {
    format!("{{{}}}", a.labels_of(set).join(","))
}

fn matroid(a: &LinearSpace, dual: bool) -> Result<Rendered> {
    let space = if dual { a.gale_dual() } else { a.clone() };
    let m = Matroid::of(&space);
    let circuits = m.circuits();
    let lattice = m.flats();
    let counts = m.counts()?;
    let tutte = m.tutte()?;

    let mut text = String::new();
    writeln!(text, "rank: {}", m.rank())?;
    writeln!(text, "circuits:")?;
    for c in &circuits {
        writeln!(text, "  {}", set_labels(a, *c))?;
    }
    writeln!(text, "flats (rank, mu(F,E)):")?;
    for ((f, r), mu) in lattice
        .flats
        .iter()
        .zip(&lattice.ranks)
        .zip(&lattice.mobius_to_top)
    {
        writeln!(text, "  {} {r} {mu}", set_labels(a, *f))?;
    }
    writeln!(text, "bases: {}", counts.bases)?;
    writeln!(text, "independent: {}", counts.independent)?;
    writeln!(text, "spanning: {}", counts.spanning)?;
    writeln!(text, "tutte: {tutte}")?;

    let json = json!({
        "dual": dual,
        "rank": m.rank(),
        "circuits": circuits.iter().map(|c| a.labels_of(*c)).collect::<Vec<_>>(),
        "flats": lattice.flats.iter().zip(&lattice.ranks).zip(&lattice.mobius_to_top)
            .map(|((f, r), mu)| json!({"flat": a.labels_of(*f), "rank": r, "mu": mu}))
            .collect::<Vec<_>>(),
        "bases": counts.bases,
        "independent": counts.independent,
        "spanning": counts.spanning,
        "tutte": tutte.to_string(),
    });
    Ok(Rendered::ok(text, json))
}

fn hilbert(a: &LinearSpace, kind: Kind) -> Result<Rendered> {
    let h = match kind {
        Kind::Internal => zt::hilbert(a, zt::INTERNAL)?,
        Kind::Central => zt::hilbert(a, zt::CENTRAL)?,
        Kind::External => zt::hilbert(a, zt::EXTERNAL)?,
        Kind::Otbar => ot::otbar_hilbert(a),
        Kind::Srbar => ot::srbar_hilbert(a),
    };
    Ok(Rendered::ok(format!("{h}\n"), json!({ "dims": h.dims() })))
}

fn parse_order(a: &LinearSpace, spec: &str) -> Result<Vec<usize>> {
    let order: Vec<usize> = spec
        .split(',')
        .map(|l| a.index_of(l.trim()))
        .collect::<std::result::Result<_, _>>()?;
    let mut sorted = order.clone();
    sorted.sort_unstable();
    if sorted != (0..a.n()).collect::<Vec<_>>() {
        bail!("ordering `{spec}` is not a permutation of the ground set");
    }
    Ok(order)
}

fn load_autos(a: &LinearSpace, path: &std::path::Path) -> Result<Vec<AutoElem>> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let gens = io::parse_automorphisms(&text, a)?;
    for (i, g) in gens.iter().enumerate() {
        if !equivariance::check_auto(a, g) {
            bail!("generator {} does not preserve L", i + 1);
        }
    }
    Ok(gens)
}

fn verify(
    a: &LinearSpace,
    theorem: Theorem,
    orders: &[String],
    auto: Option<&std::path::Path>,
    seed: u64,
) -> Result<Rendered> {
    Ok(match theorem {
        Theorem::Internal => Rendered::report(&ot::verify_internal(a)?),
        Theorem::Central => Rendered::report(&ot::verify_central(a)?),
        Theorem::HrInternal => {
            let orderings = if orders.is_empty() {
                ot::seeded_orderings(a.n(), 4, seed)
            } else {
                orders
                    .iter()
                    .map(|o| parse_order(a, o))
                    .collect::<Result<_>>()?
            };
            let mut r = Rendered::report(&ot::verify_hr_internal(a, &orderings)?);
            r.seeded = orders.is_empty();
            r
        }
        Theorem::Equivariant => {
            let gens = match auto {
                Some(path) => load_autos(a, path)?,
                None => vec![AutoElem::identity(a.n())],
            };
            let mut report = Report::new("equivariant internal");
            for (i, g) in gens.iter().enumerate() {
                let mut sub = equivariance::verify_equivariant_internal(a, g)?;
                sub.title = format!("generator {}", i + 1);
                report.extend(sub);
            }
            Rendered::report(&report)
        }
    })
}

fn characters(
    a: &LinearSpace,
    which: Space,
    deg: usize,
    auto: &std::path::Path,
) -> Result<Rendered> {
    let which = match which {
        Space::Pminus => Which::Pminus,
        Space::Pcentral => Which::Pcentral,
        Space::Pplus => Which::Pplus,
        Space::Otbar => Which::OTbar,
    };
    let gens = load_autos(a, auto)?;
    let mut text = String::new();
    let mut traces = Vec::new();
    for (i, g) in gens.iter().enumerate() {
        let t = format_rat(&equivariance::char_on(a, g, which, deg)?);
        writeln!(text, "generator {}: {t}", i + 1)?;
        traces.push(t);
    }
    Ok(Rendered::ok(
        text,
        json!({ "which": which, "degree": deg, "traces": traces }),
    ))
}

fn audit(a: &LinearSpace, k: i64, trials: usize, seed: u64) -> Result<Rendered> {
    let mut r = match zt::random_alpha_audit(a, k, trials, seed) {
        Ok(s) => Rendered::ok(
            format!(
                "k = {}, trials = {}, checked = {} : PASS\n",
                s.k, s.trials, s.checked
            ),
            serde_json::to_value(&s)?,
        ),
        Err(Error::AuditFailure(msg)) => Rendered {
            text: format!("k = {k}, trials = {trials} : FAIL\n{msg}\n"),
            json: json!({ "k": k, "trials": trials, "seed": seed, "failure": msg }),
            passed: false,
            seeded: true,
        },
        Err(e) => return Err(e.into()),
    };
    r.seeded = true;
    Ok(r)
}

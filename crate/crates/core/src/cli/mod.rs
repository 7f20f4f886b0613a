//! The `hopfcat` command line: model files in, deterministic reports out.

pub mod expr;
pub mod model;

use std::collections::HashMap;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::sync::Arc;
use std::time::Instant;

use clap::{Parser, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::Error;
use crate::exactness::{
    check_ses, check_split_diagram, factorize, torsion, zero_morphism_search, SplitSESMorphismDiagram,
};
use crate::functors::{decompose, induced_pair, Decomposition};
use crate::hopf::{check_hopf_axioms, HopfPresentation, Kind};
use crate::morphisms::HopfMorphism;
use crate::verdict::Verdict;

pub use model::{parse_model, parse_model_str, ModelError, ModelFile, SectionKind};

pub const SCHEMA: &str = "hopfcat-report/1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Command {
    CheckAxioms,
    Decompose,
    Torsion,
    Factorize,
    VerifySes,
    VerifyDiagram,
    ZeroHom,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::CheckAxioms => "check-axioms",
            Command::Decompose => "decompose",
            Command::Torsion => "torsion",
            Command::Factorize => "factorize",
            Command::VerifySes => "verify-ses",
            Command::VerifyDiagram => "verify-diagram",
            Command::ZeroHom => "zero-hom",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

/// Exact verification of cocommutative Hopf algebra constructions.
#[derive(Debug, Parser)]
#[command(name = "hopfcat", version)]
pub struct Cli {
    pub command: Command,
    /// Model file.
    pub model: PathBuf,
    /// Names to run on; all applicable objects when omitted. For
    /// `zero-hom`, consecutive pairs `source target`.
    pub targets: Vec<String>,
    /// Truncation degree, overriding the model.
    #[arg(long)]
    pub degree: Option<usize>,
    /// Write the report here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    /// Include wall-clock time in the report (breaks byte-for-byte
    /// reproducibility).
    #[arg(long)]
    pub timing: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct Inputs {
    pub model: String,
    pub degree: usize,
    pub targets: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct TargetReport {
    pub target: String,
    pub pass: bool,
    pub data: Value,
    pub verdicts: Vec<Verdict>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub command: &'static str,
    pub inputs: Inputs,
    pub pass: bool,
    pub results: Vec<TargetReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u64>,
}

/// Errors that make a run meaningless (exit status 2).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InputError {
    Model(ModelError),
    Target(String),
    Compute(String),
    Io(String),
}

impl std::fmt::Display for InputError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            InputError::Model(e) => write!(f, "{e}"),
            InputError::Target(m) | InputError::Compute(m) | InputError::Io(m) => f.write_str(m),
        }
    }
}

impl std::error::Error for InputError {}

impl From<ModelError> for InputError {
    fn from(e: ModelError) -> Self {
        InputError::Model(e)
    }
}

/// Truncation problems mean the run itself is not meaningful; any other
/// library error is a failed verdict on that target.
fn classify(target: &str, e: Error) -> Result<TargetReport, InputError> {
    match e {
        Error::DegreeOverflow { .. } | Error::TruncationTooSmall(_) => {
            Err(InputError::Compute(format!("{target}: {e}")))
        }
        other => {
            let mut v = Verdict::new(target, 0);
            v.fail("computation", other.to_string(), target);
            Ok(TargetReport {
                target: target.to_string(),
                pass: false,
                data: json!({}),
                verdicts: vec![v],
            })
        }
    }
}

fn target_report(target: String, data: Value, verdicts: Vec<Verdict>) -> TargetReport {
    TargetReport {
        pass: verdicts.iter().all(|v| v.pass),
        target,
        data,
        verdicts,
    }
}

fn describe(f: &HopfMorphism) -> Value {
    let map: serde_json::Map<String, Value> =
        f.describe().into_iter().map(|(k, v)| (k, Value::String(v))).collect();
    json!({ "name": f.name(), "source": f.source().name(), "target": f.target().name(), "generators": map })
}

fn object(h: &HopfPresentation) -> Value {
    let d = h.truncation();
    let mut v = json!({
        "name": h.name(),
        "kind": h.kind().name(),
        "dim": h.dim(),
        "filtration_dims": (0..=d).map(|k| h.dim_at(k)).collect::<Vec<_>>(),
    });
    match h.kind() {
        Kind::GroupAlgebra(g) => v["group"] = json!(g.labels()),
        Kind::Enveloping(l) => {
            v["lie_basis"] = json!(l.labels());
            v["brackets"] = json!(brackets(l));
        }
        _ => {}
    }
    v
}

fn brackets(l: &crate::constructors::LieAlgebra) -> Vec<String> {
    let mut out = Vec::new();
    for i in 0..l.dim() {
        for j in i + 1..l.dim() {
            let b = l.bracket(i, j);
            if !b.is_empty() {
                let rhs = crate::hopf::fmt_combination(b.iter().map(|(&k, c)| (l.label(k).to_string(), c)));
                out.push(format!("[{}, {}] = {rhs}", l.label(i), l.label(j)));
            }
        }
    }
    out
}

fn decomposition_data(d: &Decomposition) -> Value {
    let p = &d.comparison_profile;
    json!({
        "A": object(&d.ses.a),
        "B": object(&d.ses.b),
        "i": describe(&d.ses.i),
        "p": describe(&d.ses.p),
        "s": describe(&d.ses.s),
        "comparison": {
            "ranks": p.ranks,
            "source_dims": p.source_dims,
            "target_dims": p.target_dims,
            "bijective": p.bijective(),
        },
    })
}

fn comparison_verdict(d: &Decomposition) -> Verdict {
    let p = &d.comparison_profile;
    let mut v = Verdict::new(format!("comparison {}", d.comparison.name()), p.degree);
    let detail = format!("ranks {:?} against dims {:?}", p.ranks, p.target_dims);
    if p.bijective() {
        v.ok("h bijective at d", detail);
    } else {
        let k = (0..=p.degree)
            .find(|&k| p.ranks[k] != p.target_dims[k] || p.ranks[k] != p.source_dims[k])
            .unwrap_or(p.degree);
        v.fail("h bijective at d", detail, format!("degree {k}"));
    }
    v
}

struct Runner<'a> {
    model: &'a ModelFile,
    decompositions: HashMap<String, Arc<Decomposition>>,
}

impl Runner<'_> {
    fn hopf(&self, name: &str) -> Result<Arc<HopfPresentation>, InputError> {
        self.model
            .hopf(name)
            .cloned()
            .ok_or_else(|| InputError::Target(format!("unknown hopf target {name}")))
    }

    fn decomposition(&mut self, name: &str) -> Result<Result<Arc<Decomposition>, Error>, InputError> {
        if let Some(d) = self.decompositions.get(name) {
            return Ok(Ok(d.clone()));
        }
        let h = self.hopf(name)?;
        Ok(decompose(&h).map(|d| {
            let d = Arc::new(d);
            self.decompositions.insert(name.to_string(), d.clone());
            d
        }))
    }

    fn targets(&self, given: &[String], kind: SectionKind) -> Vec<String> {
        if given.is_empty() {
            self.model.names(kind)
        } else {
            given.to_vec()
        }
    }

    fn run(&mut self, cmd: Command, targets: &[String]) -> Result<Vec<TargetReport>, InputError> {
        let mut out = Vec::new();
        match cmd {
            Command::CheckAxioms => {
                for t in self.targets(targets, SectionKind::Hopf) {
                    let h = self.hopf(&t)?;
                    out.push(target_report(t, object(&h), vec![check_hopf_axioms(&h)]));
                }
            }
            Command::Decompose | Command::VerifySes => {
                for t in self.targets(targets, SectionKind::Hopf) {
                    match self.decomposition(&t)? {
                        Ok(d) => {
                            let data = if cmd == Command::Decompose {
                                decomposition_data(&d)
                            } else {
                                json!({ "A": d.ses.a.name(), "H": d.ses.h.name(), "B": d.ses.b.name() })
                            };
                            let mut vs = vec![check_ses(&d.ses)];
                            if cmd == Command::Decompose {
                                vs.push(comparison_verdict(&d));
                            }
                            out.push(target_report(t, data, vs));
                        }
                        Err(e) => out.push(classify(&t, e)?),
                    }
                }
            }
            Command::Torsion => {
                for t in self.targets(targets, SectionKind::Hopf) {
                    let h = self.hopf(&t)?;
                    match torsion(&h) {
                        Ok(tr) => {
                            let part = |x: &HopfPresentation| {
                                let name = if x.dim() == 1 { "K".to_string() } else { x.name().to_string() };
                                json!({ "name": name, "dim": x.dim() })
                            };
                            let ses = &tr.decomposition.ses;
                            let data = json!({
                                "torsion_part": part(&ses.a),
                                "free_part": part(&ses.b),
                                "primitive_dim": tr.decomposition.primitives.dim(),
                                "grouplike_count": tr.decomposition.grouplikes.elements.len(),
                            });
                            out.push(target_report(t, data, vec![tr.ses, tr.zero_search.verdict]));
                        }
                        Err(e) => out.push(classify(&t, e)?),
                    }
                }
            }
            Command::Factorize => {
                for t in self.targets(targets, SectionKind::Morphism) {
                    let f = self
                        .model
                        .morphism(&t)
                        .ok_or_else(|| InputError::Target(format!("unknown morphism target {t}")))?;
                    match factorize(f) {
                        Ok(fz) => {
                            let data = json!({
                                "kernel": fz.kernel.sub.name(),
                                "kernel_dims": fz.kernel.dims,
                                "linear_kernel_dims": fz.kernel_dims,
                                "ideal_dims": fz.cokernel.ideal_dims,
                                "image": object(&fz.cokernel.quotient),
                                "m": describe(&fz.m),
                            });
                            out.push(target_report(t, data, vec![fz.verdict]));
                        }
                        Err(e) => out.push(classify(&t, e)?),
                    }
                }
            }
            Command::VerifyDiagram => {
                for t in self.targets(targets, SectionKind::Diagram) {
                    let decl = self
                        .model
                        .diagram(&t)
                        .cloned()
                        .ok_or_else(|| InputError::Target(format!("unknown diagram target {t}")))?;
                    out.push(self.diagram(&t, &decl)?);
                }
            }
            Command::ZeroHom => {
                let pairs: Vec<(String, String)> = if targets.is_empty() {
                    let of = |pred: fn(&Kind) -> bool| -> Vec<String> {
                        self.model
                            .names(SectionKind::Hopf)
                            .into_iter()
                            .filter(|n| pred(self.model.hopf(n).unwrap().kind()))
                            .collect()
                    };
                    let ts = of(|k| matches!(k, Kind::Enveloping(_)));
                    let fs = of(|k| matches!(k, Kind::GroupAlgebra(_)));
                    ts.iter()
                        .flat_map(|a| fs.iter().map(move |b| (a.clone(), b.clone())))
                        .collect()
                } else if targets.len().is_multiple_of(2) {
                    targets.chunks(2).map(|c| (c[0].clone(), c[1].clone())).collect()
                } else {
                    return Err(InputError::Target("zero-hom takes targets in pairs: source target".into()));
                };
                for (a, b) in pairs {
                    let (ha, hb) = (self.hopf(&a)?, self.hopf(&b)?);
                    let name = format!("{a} -> {b}");
                    match zero_morphism_search(&ha, &hb) {
                        Ok(z) => {
                            let data = json!({
                                "primitive_dim": z.primitive_dim,
                                "grouplike_count": z.grouplike_count,
                                "morphisms_found": z.morphisms.len(),
                            });
                            out.push(target_report(name, data, vec![z.verdict]));
                        }
                        Err(e) => out.push(classify(&name, e)?),
                    }
                }
            }
        }
        Ok(out)
    }

    fn diagram(&mut self, name: &str, decl: &model::DiagramDecl) -> Result<TargetReport, InputError> {
        let top = match self.decomposition(&decl.top)? {
            Ok(d) => d,
            Err(e) => return classify(name, e),
        };
        let bottom = match self.decomposition(&decl.bottom)? {
            Ok(d) => d,
            Err(e) => return classify(name, e),
        };
        let h = self.model.morphism(&decl.h).expect("resolved").clone();
        let needs_induced = decl.h_a == model::ArrowChoice::Induced || decl.h_b == model::ArrowChoice::Induced;
        let induced = if needs_induced {
            match induced_pair(&h, &top, &bottom) {
                Ok(p) => Some(p),
                Err(e) => return classify(name, e),
            }
        } else {
            None
        };
        let pick = |c: model::ArrowChoice,
                    s: &Arc<HopfPresentation>,
                    e: &Arc<HopfPresentation>,
                    ind: Option<&HopfMorphism>| match c {
            model::ArrowChoice::Induced => ind.expect("induced pair").clone(),
            model::ArrowChoice::Identity => HopfMorphism::identity(s.clone()),
            model::ArrowChoice::Zero => HopfMorphism::zero(s.clone(), e.clone()),
        };
        let h_a = pick(decl.h_a, &top.ses.a, &bottom.ses.a, induced.as_ref().map(|p| &p.f1));
        let h_b = pick(decl.h_b, &top.ses.b, &bottom.ses.b, induced.as_ref().map(|p| &p.f2));
        let data = json!({
            "top": decl.top,
            "bottom": decl.bottom,
            "h": describe(&h),
            "h_a": describe(&h_a),
            "h_b": describe(&h_b),
            "arrows": [decl.h_a.name(), decl.h_b.name()],
        });
        let dg = SplitSESMorphismDiagram {
            top: top.ses.clone(),
            bottom: bottom.ses.clone(),
            h_a,
            h,
            h_b,
        };
        let verdicts = decl.modes.iter().map(|&m| check_split_diagram(&dg, m)).collect();
        Ok(target_report(name.to_string(), data, verdicts))
    }
}

/// Runs one command over a resolved model.
pub fn run_command(model: &ModelFile, cmd: Command, targets: &[String]) -> Result<Report, InputError> {
    let mut runner = Runner {
        model,
        decompositions: HashMap::new(),
    };
    let results = runner.run(cmd, targets)?;
    Ok(Report {
        schema: SCHEMA,
        command: cmd.name(),
        inputs: Inputs {
            model: model.name.clone(),
            degree: model.degree,
            targets: targets.to_vec(),
        },
        pass: results.iter().all(|r| r.pass),
        results,
        timing_ms: None,
    })
}

impl Report {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let status = |p: bool| if p { "PASS" } else { "FAIL" };
        let mut s = String::new();
        let _ = writeln!(
            s,
            "{} {} (degree {}): {}",
            self.command,
            self.inputs.model,
            self.inputs.degree,
            status(self.pass)
        );
        for r in &self.results {
            let _ = writeln!(s, "  {}: {}", r.target, status(r.pass));
            if let Value::Object(m) = &r.data {
                for (k, v) in m {
                    let _ = writeln!(s, "    {k}: {v}");
                }
            }
            for v in &r.verdicts {
                let _ = writeln!(s, "    {}: {}", v.subject, status(v.pass));
                for c in &v.checks {
                    let mark = if c.pass { "ok" } else { "FAIL" };
                    let _ = write!(s, "      [{mark}] {}: {}", c.name, c.detail);
                    if let Some(w) = &c.witness {
                        let _ = write!(s, " (witness: {w})");
                    }
                    s.push('\n');
                }
            }
        }
        if let Some(t) = self.timing_ms {
            let _ = writeln!(s, "time: {t} ms");
        }
        s
    }
}

/// Parses, runs and writes the report; returns the exit status.
pub fn execute(cli: &Cli) -> Result<bool, InputError> {
    let start = Instant::now();
    let model = parse_model(&cli.model, cli.degree)?;
    let mut report = run_command(&model, cli.command, &cli.targets)?;
    if cli.timing {
        report.timing_ms = Some(start.elapsed().as_millis() as u64);
    }
    let text = match cli.format {
        Format::Json => report.to_json(),
        Format::Text => report.to_text(),
    };
    match &cli.out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| InputError::Io(format!("cannot write {}: {e}", path.display())))?,
        None => print!("{text}"),
    }
    Ok(report.pass)
}

/// Entry point for the binary: 0 pass, 1 verdict failure, 2 input error.
pub fn main() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(&cli) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

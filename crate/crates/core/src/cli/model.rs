//! Model files: line-oriented sections declaring groups, Lie algebras,
//! actions, Hopf algebras, morphisms and diagrams. See `MODEL_FORMAT.md`
//! in the crate root for the grammar.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::path::Path;
use std::sync::Arc;

use num_traits::{One, Zero};

use super::expr::{self, Expr, ExprError, HopfEnv, LinearEnv, TensorExpr};
use crate::constructors::{enveloping, group_algebra, smash, FiniteGroup, HopfAction, LieAlgebra};
use crate::exactlin::{Scalar, SparseVec};
use crate::exactness::DiagramMode;
use crate::hopf::{DeclaredGrouplike, Generator, HopfPresentation, Kind, StructureTables};
use crate::morphisms::HopfMorphism;

pub const DEFAULT_DEGREE: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModelError {
    pub line: usize,
    pub col: usize,
    /// `[kind name]` of the enclosing section, if any.
    pub section: Option<String>,
    pub msg: String,
}

impl fmt::Display for ModelError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.line > 0 {
            write!(f, "line {}, column {}", self.line, self.col)?;
            if let Some(s) = &self.section {
                write!(f, " in {s}")?;
            }
            f.write_str(": ")?;
        }
        f.write_str(&self.msg)
    }
}

impl std::error::Error for ModelError {}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SectionKind {
    Group,
    Lie,
    Action,
    Hopf,
    Morphism,
    Diagram,
}

impl SectionKind {
    pub fn name(self) -> &'static str {
        match self {
            SectionKind::Group => "group",
            SectionKind::Lie => "lie",
            SectionKind::Action => "action",
            SectionKind::Hopf => "hopf",
            SectionKind::Morphism => "morphism",
            SectionKind::Diagram => "diagram",
        }
    }

    fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "group" => SectionKind::Group,
            "lie" => SectionKind::Lie,
            "action" => SectionKind::Action,
            "hopf" => SectionKind::Hopf,
            "morphism" => SectionKind::Morphism,
            "diagram" => SectionKind::Diagram,
            _ => return None,
        })
    }
}

/// A whitespace-separated word and its column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Word {
    pub text: String,
    pub col: usize,
}

/// `key words = value`, or a bare row of words (group tables).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Entry {
    pub line: usize,
    pub key: Vec<Word>,
    /// Value text and the column of its first character.
    pub value: Option<(String, usize)>,
}

impl Entry {
    fn head(&self) -> &str {
        &self.key[0].text
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Section {
    pub kind: SectionKind,
    pub name: String,
    pub line: usize,
    pub entries: Vec<Entry>,
}

impl Section {
    fn tag(&self) -> String {
        format!("[{} {}]", self.kind.name(), self.name)
    }
}

/// How a diagram chooses its outer vertical arrows.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArrowChoice {
    /// `U(P(h))` or `K[G(h)]`.
    Induced,
    Identity,
    Zero,
}

impl ArrowChoice {
    pub fn name(self) -> &'static str {
        match self {
            ArrowChoice::Induced => "induced",
            ArrowChoice::Identity => "identity",
            ArrowChoice::Zero => "zero",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagramDecl {
    pub top: String,
    pub bottom: String,
    pub h: String,
    pub h_a: ArrowChoice,
    pub h_b: ArrowChoice,
    pub modes: Vec<DiagramMode>,
}

#[derive(Debug, Clone)]
pub enum Object {
    Group(FiniteGroup),
    Lie(LieAlgebra),
    Action(HopfAction),
    Hopf(Arc<HopfPresentation>),
    Morphism(HopfMorphism),
    Diagram(DiagramDecl),
}

/// A parsed and fully resolved model.
#[derive(Debug, Clone)]
pub struct ModelFile {
    pub name: String,
    pub degree: usize,
    /// Degree written in the file, if any.
    pub declared_degree: Option<usize>,
    pub sections: Vec<Section>,
    pub objects: Vec<(String, Object)>,
}

fn err(line: usize, col: usize, msg: impl Into<String>) -> ModelError {
    ModelError {
        line,
        col,
        section: None,
        msg: msg.into(),
    }
}

fn words(s: &str, col0: usize) -> Vec<Word> {
    let mut out = Vec::new();
    let mut cur = String::new();
    let mut start = 0;
    for (i, c) in s.chars().enumerate() {
        if c.is_whitespace() {
            if !cur.is_empty() {
                out.push(Word {
                    text: std::mem::take(&mut cur),
                    col: col0 + start,
                });
            }
        } else {
            if cur.is_empty() {
                start = i;
            }
            cur.push(c);
        }
    }
    if !cur.is_empty() {
        out.push(Word {
            text: cur,
            col: col0 + start,
        });
    }
    out
}

struct Syntax {
    declared_degree: Option<usize>,
    sections: Vec<Section>,
}

fn parse_syntax(text: &str) -> Result<Syntax, ModelError> {
    let mut declared_degree = None;
    let mut sections: Vec<Section> = Vec::new();
    for (ln, raw) in text.lines().enumerate() {
        let line = ln + 1;
        let body = raw.split('#').next().unwrap_or("");
        let lead = body.chars().take_while(|c| c.is_whitespace()).count();
        let content = body.trim();
        if content.is_empty() {
            continue;
        }
        let col0 = lead + 1;
        if let Some(rest) = content.strip_prefix('[') {
            let Some(inner) = rest.strip_suffix(']') else {
                return Err(err(line, col0, "section header must end with ']'"));
            };
            let ws = words(inner, col0 + 1);
            let [kind, name] = ws.as_slice() else {
                return Err(err(line, col0, "section header must be [kind name]"));
            };
            let Some(k) = SectionKind::parse(&kind.text) else {
                return Err(err(line, kind.col, format!("unknown section kind {}", kind.text)));
            };
            if let Some(prev) = sections.iter().find(|s| s.name == name.text) {
                return Err(err(
                    line,
                    name.col,
                    format!("name {} already declared on line {}", name.text, prev.line),
                ));
            }
            sections.push(Section {
                kind: k,
                name: name.text.clone(),
                line,
                entries: Vec::new(),
            });
            continue;
        }
        let entry = match content.find('=') {
            Some(pos) => {
                let key = words(&content[..pos], col0);
                let vtext = &content[pos + 1..];
                let vlead = vtext.chars().take_while(|c| c.is_whitespace()).count();
                let vcol = col0 + content[..pos].chars().count() + 1 + vlead;
                if key.is_empty() {
                    return Err(err(line, col0, "missing key before '='"));
                }
                Entry {
                    line,
                    key,
                    value: Some((vtext.trim().to_string(), vcol)),
                }
            }
            None => Entry {
                line,
                key: words(content, col0),
                value: None,
            },
        };
        match sections.last_mut() {
            Some(s) => s.entries.push(entry),
            None => {
                if entry.key.len() != 1 || entry.head() != "degree" {
                    return Err(err(
                        line,
                        col0,
                        format!("unknown global setting {}", entry.key[0].text),
                    ));
                }
                let (v, col) = entry.value.as_ref().unwrap();
                let d: usize = v
                    .parse()
                    .map_err(|_| err(line, *col, format!("degree must be a non-negative integer, got {v}")))?;
                declared_degree = Some(d);
            }
        }
    }
    Ok(Syntax {
        declared_degree,
        sections,
    })
}

/// Reads and resolves a model file.
pub fn parse_model(path: &Path, degree: Option<usize>) -> Result<ModelFile, ModelError> {
    let bytes = std::fs::read(path).map_err(|e| err(0, 0, format!("cannot read {}: {e}", path.display())))?;
    let text = String::from_utf8(bytes).map_err(|_| err(0, 0, format!("{} is not UTF-8", path.display())))?;
    let name = path
        .file_name()
        .map_or_else(|| path.display().to_string(), |n| n.to_string_lossy().into_owned());
    parse_model_str(&name, &text, degree)
}

/// Resolves model text; `degree` overrides the declared truncation.
pub fn parse_model_str(name: &str, text: &str, degree: Option<usize>) -> Result<ModelFile, ModelError> {
    let syn = parse_syntax(text)?;
    let d = degree.or(syn.declared_degree).unwrap_or(DEFAULT_DEGREE);
    if d < 2 {
        return Err(err(0, 0, format!("truncation degree must be at least 2, got {d}")));
    }
    let mut r = Resolver {
        d,
        objects: Vec::new(),
        index: HashMap::new(),
    };
    for s in &syn.sections {
        let obj = r.section(s).map_err(|mut e| {
            e.section = Some(s.tag());
            e
        })?;
        r.index.insert(s.name.clone(), r.objects.len());
        r.objects.push((s.name.clone(), obj));
    }
    Ok(ModelFile {
        name: name.to_string(),
        degree: d,
        declared_degree: syn.declared_degree,
        sections: syn.sections,
        objects: r.objects,
    })
}

struct Resolver {
    d: usize,
    objects: Vec<(String, Object)>,
    index: HashMap<String, usize>,
}

type R<T> = Result<T, ModelError>;

fn expr_err(line: usize) -> impl Fn(ExprError) -> ModelError {
    move |e| err(line, e.col, e.msg)
}

fn lib_err(line: usize, col: usize) -> impl Fn(crate::Error) -> ModelError {
    move |e| err(line, col, e.to_string())
}

/// The single entry with head `key`, if present.
fn single<'a>(s: &'a Section, key: &str) -> R<Option<&'a Entry>> {
    let mut found = s.entries.iter().filter(|e| e.value.is_some() && e.head() == key);
    let first = found.next();
    if let Some(dup) = found.next() {
        return Err(err(dup.line, dup.key[0].col, format!("{key} given twice")));
    }
    if let Some(e) = first {
        if e.key.len() != 1 {
            return Err(err(e.line, e.key[1].col, format!("{key} takes no arguments")));
        }
    }
    Ok(first)
}

fn value(e: &Entry) -> (&str, usize) {
    let (v, c) = e.value.as_ref().expect("entry with value");
    (v.as_str(), *c)
}

fn required<'a>(s: &'a Section, key: &str) -> R<&'a Entry> {
    single(s, key)?.ok_or_else(|| err(s.line, 1, format!("missing {key} = ...")))
}

/// Every entry must have one of the `allowed` heads.
fn only_keys(s: &Section, allowed: &[&str]) -> R<()> {
    for e in &s.entries {
        if e.value.is_none() && s.kind != SectionKind::Group {
            return Err(err(e.line, e.key[0].col, "expected key = value"));
        }
        if e.value.is_some() && !allowed.contains(&e.head()) {
            return Err(err(e.line, e.key[0].col, format!("unknown key {}", e.head())));
        }
    }
    Ok(())
}

fn labels_of(e: &Entry) -> Vec<Word> {
    let (v, c) = value(e);
    words(v, c)
}

fn find_label(labels: &[String], w: &Word, line: usize) -> R<usize> {
    labels
        .iter()
        .position(|l| *l == w.text)
        .ok_or_else(|| err(line, w.col, format!("unknown basis label {}", w.text)))
}

fn scalar_of(e: &Entry) -> R<Scalar> {
    let (v, c) = value(e);
    let ex = expr::parse_expr(v, c).map_err(expr_err(e.line))?;
    let no_labels: [String; 0] = [];
    let env = LinearEnv {
        labels: &no_labels,
        unit: Some(SparseVec::from([(0, Scalar::one())])),
    };
    let r = expr::eval(&env, &ex).map_err(expr_err(e.line))?;
    Ok(r.get(&0).cloned().unwrap_or_else(Scalar::zero))
}

fn group_preset(name: &str) -> Option<FiniteGroup> {
    match name {
        "S3" => Some(FiniteGroup::symmetric3()),
        "D4" => Some(FiniteGroup::dihedral4()),
        "Q8" => Some(FiniteGroup::quaternion8()),
        _ => {
            let n: usize = name.strip_prefix('C')?.parse().ok()?;
            (1..=64).contains(&n).then(|| FiniteGroup::cyclic(n))
        }
    }
}

fn lie_preset(name: &str) -> Option<LieAlgebra> {
    match name {
        "aff2" => Some(LieAlgebra::aff2()),
        "heis3" => Some(LieAlgebra::heis3()),
        "sl2" => Some(LieAlgebra::sl2()),
        _ => {
            let n: usize = name.strip_prefix("ab")?.parse().ok()?;
            (n <= 16).then(|| LieAlgebra::abelian(n))
        }
    }
}

fn is_label(s: &str) -> bool {
    let mut cs = s.chars();
    matches!(cs.next(), Some(c) if c.is_alphabetic() || c == '_')
        && cs.all(|c| c.is_alphanumeric() || c == '_')
}

/// Source generators addressable by label, including every group element.
fn generator_candidates(h: &HopfPresentation) -> Vec<(String, Generator)> {
    let mut out = Vec::new();
    match h.kind() {
        Kind::GroupAlgebra(g) => out.extend((0..g.order()).map(Generator::Group)),
        Kind::Enveloping(l) => out.extend((0..l.dim()).map(Generator::Lie)),
        Kind::Smash(a) => {
            out.extend((0..a.lie().dim()).map(Generator::Lie));
            out.extend((0..a.group().order()).map(Generator::Group));
        }
        Kind::StructureConstants => out.extend((0..h.dim()).map(Generator::Basis)),
    }
    out.into_iter().map(|g| (h.generator_label(g), g)).collect()
}

impl Resolver {
    fn lookup(&self, e: &Entry, want: SectionKind) -> R<&Object> {
        let (v, c) = value(e);
        let Some(&i) = self.index.get(v) else {
            return Err(err(e.line, c, format!("{} {v} is not declared above", want.name())));
        };
        let obj = &self.objects[i].1;
        let kind = match obj {
            Object::Group(_) => SectionKind::Group,
            Object::Lie(_) => SectionKind::Lie,
            Object::Action(_) => SectionKind::Action,
            Object::Hopf(_) => SectionKind::Hopf,
            Object::Morphism(_) => SectionKind::Morphism,
            Object::Diagram(_) => SectionKind::Diagram,
        };
        if kind != want {
            return Err(err(e.line, c, format!("{v} is a {}, expected a {}", kind.name(), want.name())));
        }
        Ok(obj)
    }

    fn hopf(&self, e: &Entry) -> R<Arc<HopfPresentation>> {
        match self.lookup(e, SectionKind::Hopf)? {
            Object::Hopf(h) => Ok(h.clone()),
            _ => unreachable!(),
        }
    }

    fn section(&self, s: &Section) -> R<Object> {
        match s.kind {
            SectionKind::Group => self.group(s).map(Object::Group),
            SectionKind::Lie => self.lie(s).map(Object::Lie),
            SectionKind::Action => self.action(s).map(Object::Action),
            SectionKind::Hopf => self.hopf_section(s).map(|h| Object::Hopf(Arc::new(h))),
            SectionKind::Morphism => self.morphism(s).map(Object::Morphism),
            SectionKind::Diagram => self.diagram(s).map(Object::Diagram),
        }
    }

    fn group(&self, s: &Section) -> R<FiniteGroup> {
        only_keys(s, &["elements", "preset"])?;
        let rows: Vec<&Entry> = s.entries.iter().filter(|e| e.value.is_none()).collect();
        if let Some(p) = single(s, "preset")? {
            let (v, c) = value(p);
            if let Some(r) = rows.first().or(single(s, "elements")?.as_ref()) {
                return Err(err(r.line, 1, "a preset group takes no table"));
            }
            return group_preset(v)
                .map(|g| g.with_name(&s.name))
                .ok_or_else(|| err(p.line, c, format!("unknown group preset {v}")));
        }
        if rows.is_empty() {
            return Err(err(s.line, 1, "group needs a multiplication table or a preset"));
        }
        let labels: Vec<String> = match single(s, "elements")? {
            Some(e) => labels_of(e).into_iter().map(|w| w.text).collect(),
            None => rows[0].key.iter().map(|w| w.text.clone()).collect(),
        };
        for r in &rows {
            for w in &r.key {
                if !labels.contains(&w.text) {
                    return Err(err(r.line, w.col, format!("unknown group element {}", w.text)));
                }
            }
        }
        let table: Vec<Vec<String>> = rows
            .iter()
            .map(|r| r.key.iter().map(|w| w.text.clone()).collect())
            .collect();
        FiniteGroup::from_label_table(&s.name, labels, &table).map_err(lib_err(s.line, 1))
    }

    fn lie(&self, s: &Section) -> R<LieAlgebra> {
        only_keys(s, &["basis", "bracket", "preset"])?;
        if let Some(p) = single(s, "preset")? {
            let (v, c) = value(p);
            if let Some(e) = s.entries.iter().find(|e| e.head() != "preset") {
                return Err(err(e.line, 1, "a preset Lie algebra takes no other keys"));
            }
            return lie_preset(v)
                .map(|l| l.with_name(&s.name))
                .ok_or_else(|| err(p.line, c, format!("unknown Lie algebra preset {v}")));
        }
        let basis = required(s, "basis")?;
        let labels: Vec<String> = labels_of(basis).into_iter().map(|w| w.text).collect();
        for w in labels_of(basis) {
            if !is_label(&w.text) {
                return Err(err(basis.line, w.col, format!("{} is not a valid label", w.text)));
            }
        }
        let mut given = Vec::new();
        for e in s.entries.iter().filter(|e| e.head() == "bracket") {
            let [_, a, b] = e.key.as_slice() else {
                return Err(err(e.line, e.key[0].col, "expected bracket a b = expression"));
            };
            let i = find_label(&labels, a, e.line)?;
            let j = find_label(&labels, b, e.line)?;
            let (v, c) = value(e);
            let ex = expr::parse_expr(v, c).map_err(expr_err(e.line))?;
            let env = LinearEnv {
                labels: &labels,
                unit: None,
            };
            given.push((i, j, expr::eval(&env, &ex).map_err(expr_err(e.line))?));
        }
        LieAlgebra::new(&s.name, labels, given).map_err(lib_err(s.line, 1))
    }

    fn action(&self, s: &Section) -> R<HopfAction> {
        only_keys(s, &["group", "lie", "act"])?;
        let Object::Group(group) = self.lookup(required(s, "group")?, SectionKind::Group)? else {
            unreachable!()
        };
        let Object::Lie(lie) = self.lookup(required(s, "lie")?, SectionKind::Lie)? else {
            unreachable!()
        };
        let n = lie.dim();
        let mut gens: BTreeMap<usize, Vec<SparseVec>> = BTreeMap::new();
        for e in s.entries.iter().filter(|e| e.head() == "act") {
            let [_, g, x] = e.key.as_slice() else {
                return Err(err(e.line, e.key[0].col, "expected act g x = expression"));
            };
            let gi = group
                .index_of(&g.text)
                .ok_or_else(|| err(e.line, g.col, format!("unknown group element {}", g.text)))?;
            let xi = find_label(lie.labels(), x, e.line)?;
            let (v, c) = value(e);
            let ex = expr::parse_expr(v, c).map_err(expr_err(e.line))?;
            let env = LinearEnv {
                labels: lie.labels(),
                unit: None,
            };
            let img = expr::eval(&env, &ex).map_err(expr_err(e.line))?;
            let row = gens
                .entry(gi)
                .or_insert_with(|| (0..n).map(|j| SparseVec::from([(j, Scalar::one())])).collect());
            row[xi] = img;
        }
        let act = if gens.is_empty() {
            HopfAction::trivial(group.clone(), lie.clone())
        } else {
            let gens: Vec<(usize, Vec<SparseVec>)> = gens.into_iter().collect();
            HopfAction::from_generators(&s.name, group.clone(), lie.clone(), &gens)
                .map_err(lib_err(s.line, 1))?
        };
        let v = act.validate();
        if let Some(f) = v.failures().next() {
            return Err(err(
                s.line,
                1,
                format!(
                    "invalid action: {} fails at {}",
                    f.name,
                    f.witness.clone().unwrap_or_default()
                ),
            ));
        }
        Ok(act)
    }

    fn hopf_section(&self, s: &Section) -> R<HopfPresentation> {
        let structural = ["group", "enveloping", "smash"];
        let given: Vec<&Entry> = s
            .entries
            .iter()
            .filter(|e| e.value.is_some() && structural.contains(&e.head()))
            .collect();
        if given.len() > 1 {
            return Err(err(given[1].line, 1, "give exactly one of group, enveloping, smash or basis"));
        }
        let built = match given.first() {
            None => return self.structure_constants(s),
            Some(e) => {
                only_keys(s, &[e.head()])?;
                let (_, c) = value(e);
                let r = match self.lookup(e, match e.head() {
                    "group" => SectionKind::Group,
                    "enveloping" => SectionKind::Lie,
                    _ => SectionKind::Action,
                })? {
                    Object::Group(g) => group_algebra(g, self.d),
                    Object::Lie(l) => enveloping(l, self.d),
                    Object::Action(a) => smash(a, self.d),
                    _ => unreachable!(),
                };
                r.map_err(lib_err(e.line, c))?
            }
        };
        Ok(built.with_name(&s.name))
    }

    fn structure_constants(&self, s: &Section) -> R<HopfPresentation> {
        only_keys(
            s,
            &["basis", "degrees", "unit", "mul", "delta", "counit", "antipode", "grouplike"],
        )?;
        let basis = required(s, "basis")?;
        let words_ = labels_of(basis);
        for w in &words_ {
            if !(is_label(&w.text) || w.text == "1") {
                return Err(err(basis.line, w.col, format!("{} is not a valid label", w.text)));
            }
        }
        let labels: Vec<String> = words_.iter().map(|w| w.text.clone()).collect();
        let n = labels.len();
        let degrees: Vec<usize> = match single(s, "degrees")? {
            None => vec![0; n],
            Some(e) => {
                let ws = labels_of(e);
                if ws.len() != n {
                    return Err(err(e.line, value(e).1, format!("expected {n} degrees")));
                }
                ws.iter()
                    .map(|w| {
                        w.text
                            .parse()
                            .map_err(|_| err(e.line, w.col, format!("{} is not a degree", w.text)))
                    })
                    .collect::<R<_>>()?
            }
        };
        let one_label = labels.iter().position(|l| l == "1");
        let unit = match single(s, "unit")? {
            Some(e) => {
                let (v, c) = value(e);
                let ex = expr::parse_expr(v, c).map_err(expr_err(e.line))?;
                let env = LinearEnv {
                    labels: &labels,
                    unit: one_label.map(|i| SparseVec::from([(i, Scalar::one())])),
                };
                expr::eval(&env, &ex).map_err(expr_err(e.line))?
            }
            None => match one_label {
                Some(i) => SparseVec::from([(i, Scalar::one())]),
                None => return Err(err(s.line, 1, "missing unit = ... (or a basis label 1)")),
            },
        };
        let env = LinearEnv {
            labels: &labels,
            unit: Some(unit.clone()),
        };
        let lin = |e: &Entry| -> R<SparseVec> {
            let (v, c) = value(e);
            let ex = expr::parse_expr(v, c).map_err(expr_err(e.line))?;
            expr::eval(&env, &ex).map_err(expr_err(e.line))
        };
        let mut t = StructureTables::empty(labels.clone(), degrees.clone());
        t.unit = unit.clone();
        // products with a unit basis element default to the identity
        let unit_basis = (unit.len() == 1 && unit.values().all(|c| c.is_one()))
            .then(|| *unit.keys().next().unwrap());
        if let Some(u) = unit_basis {
            for b in 0..n {
                let e = SparseVec::from([(b, Scalar::one())]);
                t.product[u * n + b] = e.clone();
                t.product[b * n + u] = e;
            }
        }
        let arity = |e: &Entry, k: usize, form: &str| -> R<Vec<usize>> {
            if e.key.len() != k + 1 {
                return Err(err(e.line, e.key[0].col, format!("expected {form}")));
            }
            e.key[1..].iter().map(|w| find_label(&labels, w, e.line)).collect()
        };
        let mut grouplikes = Vec::new();
        for e in &s.entries {
            match e.head() {
                "mul" => {
                    let ij = arity(e, 2, "mul a b = expression")?;
                    if degrees[ij[0]] + degrees[ij[1]] > self.d {
                        return Err(err(e.line, e.key[0].col, "product lies beyond the truncation"));
                    }
                    t.product[ij[0] * n + ij[1]] = lin(e)?;
                }
                "delta" => {
                    let i = arity(e, 1, "delta a = tensor expression")?[0];
                    let (v, c) = value(e);
                    let tx: TensorExpr = expr::parse_tensor(v, c).map_err(expr_err(e.line))?;
                    t.coproduct[i] = expr::eval_tensor(&env, &tx).map_err(expr_err(e.line))?;
                }
                "counit" => {
                    let i = arity(e, 1, "counit a = number")?[0];
                    t.counit[i] = scalar_of(e)?;
                }
                "antipode" => {
                    let i = arity(e, 1, "antipode a = expression")?[0];
                    t.antipode[i] = lin(e)?;
                }
                "grouplike" => {
                    if e.key.len() != 2 {
                        return Err(err(e.line, e.key[0].col, "expected grouplike name = expression"));
                    }
                    grouplikes.push(DeclaredGrouplike {
                        label: e.key[1].text.clone(),
                        element: lin(e)?,
                    });
                }
                _ => {}
            }
        }
        if !grouplikes.is_empty() {
            t.grouplikes = Some(grouplikes);
        }
        HopfPresentation::from_tables(&s.name, self.d, t).map_err(lib_err(s.line, 1))
    }

    fn morphism(&self, s: &Section) -> R<HopfMorphism> {
        let from = self.hopf(required(s, "from")?)?;
        let to = self.hopf(required(s, "to")?)?;
        if let Some(m) = single(s, "map")? {
            if let Some(e) = s.entries.iter().find(|e| !["from", "to", "map"].contains(&e.head())) {
                return Err(err(e.line, e.key[0].col, "map = ... takes no generator images"));
            }
            let (v, c) = value(m);
            return match v {
                "identity" if from.id() == to.id() => Ok(HopfMorphism::identity(from).with_name(&s.name)),
                "identity" => Err(err(m.line, c, "identity needs from = to")),
                "zero" => Ok(HopfMorphism::zero(from, to).with_name(&s.name)),
                _ => Err(err(m.line, c, format!("unknown map {v}; use identity or zero"))),
            };
        }
        let candidates = generator_candidates(&from);
        let gens = from.generators();
        let env = HopfEnv::new(&to);
        let mut images = BTreeMap::new();
        let mut extra = Vec::new();
        for e in &s.entries {
            if e.value.is_none() {
                return Err(err(e.line, e.key[0].col, "expected generator = expression"));
            }
            if matches!(e.head(), "from" | "to") {
                continue;
            }
            if e.key.len() != 1 {
                return Err(err(e.line, e.key[1].col, "expected generator = expression"));
            }
            let w = &e.key[0];
            let Some((_, g)) = candidates.iter().find(|(l, _)| *l == w.text) else {
                return Err(err(e.line, w.col, format!("unknown generator {} of {}", w.text, from.name())));
            };
            let (v, c) = value(e);
            let ex = expr::parse_expr(v, c).map_err(expr_err(e.line))?;
            let img = expr::eval(&env, &ex).map_err(expr_err(e.line))?;
            if images.contains_key(g) || extra.iter().any(|(x, _, _)| x == g) {
                return Err(err(e.line, w.col, format!("image of {} given twice", w.text)));
            }
            if gens.contains(g) {
                images.insert(*g, to.wrap(img));
            } else {
                extra.push((*g, img, e));
            }
        }
        let f = HopfMorphism::new(&s.name, from.clone(), to.clone(), &images).map_err(lib_err(s.line, 1))?;
        for (g, img, e) in extra {
            let got = f.generator_image(g).expect("candidate generator").into_terms();
            if got != img {
                return Err(err(
                    e.line,
                    e.key[0].col,
                    format!(
                        "image of {} is forced to be {} by the other images",
                        e.head(),
                        to.fmt_vec(&got)
                    ),
                ));
            }
        }
        Ok(f)
    }

    fn diagram(&self, s: &Section) -> R<DiagramDecl> {
        only_keys(s, &["top", "bottom", "h", "h_a", "h_b", "mode"])?;
        let top = required(s, "top")?;
        let bottom = required(s, "bottom")?;
        let top_h = self.hopf(top)?;
        let bottom_h = self.hopf(bottom)?;
        let he = required(s, "h")?;
        let Object::Morphism(h) = self.lookup(he, SectionKind::Morphism)? else {
            unreachable!()
        };
        if h.source().id() != top_h.id() || h.target().id() != bottom_h.id() {
            return Err(err(
                he.line,
                value(he).1,
                format!("{} must run from {} to {}", h.name(), top_h.name(), bottom_h.name()),
            ));
        }
        let choice = |key: &str| -> R<ArrowChoice> {
            let Some(e) = single(s, key)? else {
                return Ok(ArrowChoice::Induced);
            };
            let (v, c) = value(e);
            let a = match v {
                "induced" => ArrowChoice::Induced,
                "identity" => ArrowChoice::Identity,
                "zero" => ArrowChoice::Zero,
                _ => return Err(err(e.line, c, format!("unknown arrow {v}; use induced, identity or zero"))),
            };
            if a == ArrowChoice::Identity && top_h.id() != bottom_h.id() {
                return Err(err(e.line, c, "identity needs top = bottom"));
            }
            Ok(a)
        };
        let modes = match single(s, "mode")? {
            None => vec![DiagramMode::Ssfl, DiagramMode::SurjectivityLemma],
            Some(e) => match value(e) {
                ("ssfl", _) => vec![DiagramMode::Ssfl],
                ("surjectivity", _) => vec![DiagramMode::SurjectivityLemma],
                ("both", _) => vec![DiagramMode::Ssfl, DiagramMode::SurjectivityLemma],
                (v, c) => return Err(err(e.line, c, format!("unknown mode {v}; use ssfl, surjectivity or both"))),
            },
        };
        Ok(DiagramDecl {
            top: value(top).0.to_string(),
            bottom: value(bottom).0.to_string(),
            h: value(he).0.to_string(),
            h_a: choice("h_a")?,
            h_b: choice("h_b")?,
            modes,
        })
    }
}

impl ModelFile {
    pub fn get(&self, name: &str) -> Option<&Object> {
        self.objects.iter().find(|(n, _)| n == name).map(|(_, o)| o)
    }

    pub fn names(&self, kind: SectionKind) -> Vec<String> {
        self.sections
            .iter()
            .filter(|s| s.kind == kind)
            .map(|s| s.name.clone())
            .collect()
    }

    pub fn hopf(&self, name: &str) -> Option<&Arc<HopfPresentation>> {
        match self.get(name)? {
            Object::Hopf(h) => Some(h),
            _ => None,
        }
    }

    pub fn morphism(&self, name: &str) -> Option<&HopfMorphism> {
        match self.get(name)? {
            Object::Morphism(m) => Some(m),
            _ => None,
        }
    }

    pub fn diagram(&self, name: &str) -> Option<&DiagramDecl> {
        match self.get(name)? {
            Object::Diagram(d) => Some(d),
            _ => None,
        }
    }

    /// Canonical text of the model: normalized spacing, expressions
    /// reprinted, comments dropped.
    pub fn pretty(&self) -> String {
        let mut out = String::new();
        if let Some(d) = self.declared_degree {
            out.push_str(&format!("degree = {d}\n"));
        }
        for s in &self.sections {
            if !out.is_empty() {
                out.push('\n');
            }
            out.push_str(&format!("[{} {}]\n", s.kind.name(), s.name));
            for e in &s.entries {
                let key: Vec<&str> = e.key.iter().map(|w| w.text.as_str()).collect();
                let key = key.join(" ");
                match &e.value {
                    None => out.push_str(&key),
                    Some((v, c)) => {
                        out.push_str(&key);
                        out.push_str(" = ");
                        out.push_str(&pretty_value(s.kind, e.head(), v, *c));
                    }
                }
                out.push('\n');
            }
        }
        out
    }

    /// Stable description of every resolved object, used to compare graphs.
    pub fn fingerprint(&self) -> String {
        let mut out = format!("degree {}\n", self.degree);
        for (name, obj) in &self.objects {
            let body = match obj {
                Object::Group(g) => format!("group {:?} {:?}", g.labels(), g.table()),
                Object::Lie(l) => format!("lie {:?} {:?}", l.labels(), l.structure_constants()),
                Object::Action(a) => {
                    let imgs: Vec<Vec<SparseVec>> = (0..a.group().order())
                        .map(|g| (0..a.lie().dim()).map(|j| a.image(g, j).clone()).collect())
                        .collect();
                    format!("action {} {} {imgs:?}", a.group().name(), a.lie().name())
                }
                Object::Hopf(h) => format!("hopf {} {} {:?}", h.kind().name(), h.truncation(), h.tables()),
                Object::Morphism(m) => format!(
                    "morphism {} -> {} {:?}",
                    m.source().name(),
                    m.target().name(),
                    m.basis_images()
                ),
                Object::Diagram(d) => format!("diagram {d:?}"),
            };
            out.push_str(&format!("{name}: {body}\n"));
        }
        out
    }
}

fn pretty_value(kind: SectionKind, key: &str, v: &str, col: usize) -> String {
    let is_expr = match kind {
        SectionKind::Lie => key == "bracket",
        SectionKind::Action => key == "act",
        SectionKind::Hopf => matches!(key, "unit" | "mul" | "counit" | "antipode" | "grouplike"),
        SectionKind::Morphism => !matches!(key, "from" | "to" | "map"),
        _ => false,
    };
    if kind == SectionKind::Hopf && key == "delta" {
        if let Ok(t) = expr::parse_tensor(v, col) {
            return t.to_string();
        }
    }
    if is_expr {
        if let Ok(e) = expr::parse_expr(v, col) {
            return print_expr(&e);
        }
    }
    words(v, col).into_iter().map(|w| w.text).collect::<Vec<_>>().join(" ")
}

fn print_expr(e: &Expr) -> String {
    e.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::check_hopf_axioms;

    #[test]
    fn group_from_table() {
        let m = parse_model_str("t", "[group C2]\ne g\ng e\n", None).unwrap();
        let Some(Object::Group(g)) = m.get("C2") else { panic!() };
        assert_eq!(g.order(), 2);
        assert_eq!(g.mul(1, 1), 0);
    }

    #[test]
    fn enveloping_at_default_degree() {
        let src = "[lie aff2]\nbasis = x y\nbracket x y = y\n\n[hopf U2]\nenveloping = aff2\n";
        let m = parse_model_str("t", src, None).unwrap();
        let h = m.hopf("U2").unwrap();
        assert_eq!(h.truncation(), 4);
        assert_eq!(h.dim(), 15);
        assert!(check_hopf_axioms(h).pass);
    }

    #[test]
    fn unknown_label_in_bracket() {
        let src = "[lie L]\nbasis = x y\nbracket x y = x + z\n";
        let e = parse_model_str("t", src, None).unwrap_err();
        assert_eq!(e.line, 3);
        assert_eq!(e.col, 19);
        assert_eq!(e.msg, "unknown basis label z");
        assert_eq!(e.section.as_deref(), Some("[lie L]"));
    }

    #[test]
    fn structural_errors() {
        let cases = [
            ("[ring R]\n", 1, "unknown section kind ring"),
            ("[group G]\npreset = C2\n[group G]\npreset = C3\n", 3, "already declared"),
            ("[hopf H]\ngroup = G\n", 2, "not declared above"),
            ("[lie L]\npreset = sl2\n[hopf H]\ngroup = L\n", 4, "is a lie, expected a group"),
            ("colour = red\n", 1, "unknown global setting"),
            ("[group G]\ne g\ng g\n", 1, "invalid group"),
        ];
        for (src, line, needle) in cases {
            let e = parse_model_str("t", src, None).unwrap_err();
            assert_eq!(e.line, line, "{src}");
            assert!(e.msg.contains(needle), "{src}: {}", e.msg);
        }
    }

    #[test]
    fn smash_and_morphism() {
        let src = "\
degree = 3
[group C2]
preset = C2
[lie line]
basis = x
[action sign]
group = C2
lie = line
act g x = -x
[hopf H2]
smash = sign
[hopf KC2]
group = C2
[morphism p]
from = H2
to = KC2
x = 0
g = g
e = 1
";
        let m = parse_model_str("t", src, None).unwrap();
        assert_eq!(m.hopf("H2").unwrap().dim(), 8);
        let p = m.morphism("p").unwrap();
        assert_eq!(p.rank_profile().ranks, vec![2, 2, 2, 2]);
        let bad = src.replace("e = 1", "e = g");
        let e = parse_model_str("t", &bad, None).unwrap_err();
        assert!(e.msg.contains("forced"), "{}", e.msg);
        let bad = src.replace("g = g", "g = 2*g");
        let e = parse_model_str("t", &bad, None).unwrap_err();
        assert!(e.msg.contains("not grouplike"), "{}", e.msg);
        assert_eq!(e.section.as_deref(), Some("[morphism p]"));
    }

    #[test]
    fn invalid_action_is_reported() {
        let src = "[group C2]\npreset = C2\n[lie L]\nbasis = x\n[action a]\ngroup = C2\nlie = L\nact g x = 2*x\n";
        let e = parse_model_str("t", src, None).unwrap_err();
        assert!(e.msg.contains("invalid action"), "{}", e.msg);
    }

    #[test]
    fn structure_constants_group_algebra() {
        let src = "\
[hopf T]
basis = 1 g
mul g g = 1
delta 1 = 1|1
delta g = g|g
counit 1 = 1
counit g = 1
antipode 1 = 1
antipode g = g
grouplike e = 1
grouplike g = g
";
        let m = parse_model_str("t", src, None).unwrap();
        let h = m.hopf("T").unwrap();
        assert!(check_hopf_axioms(h).pass);
        let g = crate::functors::grouplikes(h).unwrap();
        assert_eq!(g.group.order(), 2);
    }

    #[test]
    fn degree_override_and_floor() {
        let src = "degree = 3\n[group C]\npreset = C2\n[hopf K]\ngroup = C\n";
        assert_eq!(parse_model_str("t", src, None).unwrap().degree, 3);
        assert_eq!(parse_model_str("t", src, Some(5)).unwrap().degree, 5);
        assert!(parse_model_str("t", src, Some(1)).is_err());
    }

    #[test]
    fn pretty_round_trip() {
        let src = "\
# comment
degree   = 3
[group C2]
 e   g
 g e
[lie aff2]
basis =   x y
bracket x y =y+0*x
[hopf U]
enveloping = aff2
[morphism f]
from = U
to = U
x = x
y =   2*y - y
";
        let m = parse_model_str("t", src, None).unwrap();
        let printed = m.pretty();
        let again = parse_model_str("t", &printed, None).unwrap();
        assert_eq!(m.fingerprint(), again.fingerprint());
        assert_eq!(again.pretty(), printed);
    }
}

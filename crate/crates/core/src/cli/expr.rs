//! Expressions over basis labels: rational coefficients, sums, products,
//! powers and parentheses, plus `a|b` tensor terms.

use std::fmt;

use num_traits::{One, Zero};

use crate::exactlin::{axpy, fmt_scalar, scale, Scalar, SparseVec};
use crate::hopf::{outer, RawTensor};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExprError {
    /// 1-based column within the line.
    pub col: usize,
    pub msg: String,
}

type PResult<T> = Result<T, ExprError>;

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Num(u64),
    Ident(String),
    Sym(char),
}

fn tokenize(src: &str, col0: usize) -> PResult<Vec<(Tok, usize)>> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = col0 + i;
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            let n = s.parse().map_err(|_| ExprError {
                col,
                msg: format!("number {s} is too large"),
            })?;
            out.push((Tok::Num(n), col));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push((Tok::Ident(chars[start..i].iter().collect()), col));
        } else if "+-*/^()|".contains(c) {
            out.push((Tok::Sym(c), col));
            i += 1;
        } else {
            return Err(ExprError {
                col,
                msg: format!("unexpected character '{c}'"),
            });
        }
    }
    Ok(out)
}

/// Parsed expression. Columns are kept on atoms for error reporting.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Num(Scalar),
    Atom { name: String, col: usize },
    /// Signed summands; `true` marks subtraction.
    Sum(Vec<(bool, Expr)>),
    Product(Vec<Expr>),
    Power(Box<Expr>, u32),
}

/// `Σ ± left|right`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorExpr(pub Vec<(bool, Expr, Expr)>);

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end_col: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.0)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end_col, |t| t.1)
    }

    fn err<T>(&self, msg: impl Into<String>) -> PResult<T> {
        Err(ExprError {
            col: self.col(),
            msg: msg.into(),
        })
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn sign(&mut self) -> Option<bool> {
        if self.eat('+') {
            Some(false)
        } else if self.eat('-') {
            Some(true)
        } else {
            None
        }
    }

    fn expr(&mut self) -> PResult<Expr> {
        let mut terms = Vec::new();
        let neg = self.sign().unwrap_or(false);
        terms.push((neg, self.term()?));
        while let Some(neg) = self.sign() {
            terms.push((neg, self.term()?));
        }
        Ok(if terms.len() == 1 && !terms[0].0 {
            terms.pop().unwrap().1
        } else {
            Expr::Sum(terms)
        })
    }

    fn term(&mut self) -> PResult<Expr> {
        let mut factors = vec![self.factor()?];
        while self.eat('*') {
            factors.push(self.factor()?);
        }
        Ok(if factors.len() == 1 {
            factors.pop().unwrap()
        } else {
            Expr::Product(factors)
        })
    }

    fn factor(&mut self) -> PResult<Expr> {
        let base = self.primary()?;
        if self.eat('^') {
            match self.peek().cloned() {
                Some(Tok::Num(n)) if n <= u32::MAX as u64 => {
                    self.pos += 1;
                    Ok(Expr::Power(Box::new(base), n as u32))
                }
                _ => self.err("expected a non-negative integer exponent"),
            }
        } else {
            Ok(base)
        }
    }

    fn primary(&mut self) -> PResult<Expr> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                let mut value = Scalar::from_integer(n.into());
                if self.eat('/') {
                    match self.peek().cloned() {
                        Some(Tok::Num(0)) => return self.err("division by zero"),
                        Some(Tok::Num(m)) => {
                            self.pos += 1;
                            value /= Scalar::from_integer(m.into());
                        }
                        _ => return self.err("expected a denominator"),
                    }
                }
                Ok(Expr::Num(value))
            }
            Some(Tok::Ident(name)) => {
                let col = self.col();
                self.pos += 1;
                Ok(Expr::Atom { name, col })
            }
            Some(Tok::Sym('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return self.err("expected ')'");
                }
                Ok(e)
            }
            Some(Tok::Sym(c)) => self.err(format!("unexpected '{c}'")),
            None => self.err("unexpected end of expression"),
        }
    }

    fn tensor(&mut self) -> PResult<TensorExpr> {
        let mut terms = Vec::new();
        let mut neg = self.sign().unwrap_or(false);
        loop {
            let left = self.term()?;
            if !self.eat('|') {
                return self.err("expected '|' in a tensor term");
            }
            let right = self.term()?;
            terms.push((neg, left, right));
            match self.sign() {
                Some(n) => neg = n,
                None => break,
            }
        }
        Ok(TensorExpr(terms))
    }

    fn finish(&self) -> PResult<()> {
        if self.pos < self.toks.len() {
            return self.err("unexpected trailing input");
        }
        Ok(())
    }
}

fn parser(src: &str, col0: usize) -> PResult<Parser> {
    Ok(Parser {
        toks: tokenize(src, col0)?,
        pos: 0,
        end_col: col0 + src.chars().count(),
    })
}

/// Parses `src`; `col0` is the column of its first character.
pub fn parse_expr(src: &str, col0: usize) -> PResult<Expr> {
    let mut p = parser(src, col0)?;
    let e = p.expr()?;
    p.finish()?;
    Ok(e)
}

pub fn parse_tensor(src: &str, col0: usize) -> PResult<TensorExpr> {
    let mut p = parser(src, col0)?;
    let t = p.tensor()?;
    p.finish()?;
    Ok(t)
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Num(c) => f.write_str(&fmt_scalar(c)),
            Expr::Atom { name, .. } => f.write_str(name),
            Expr::Sum(terms) => {
                for (k, (neg, e)) in terms.iter().enumerate() {
                    match (k, neg) {
                        (0, true) => f.write_str("-")?,
                        (0, false) => {}
                        (_, true) => f.write_str(" - ")?,
                        (_, false) => f.write_str(" + ")?,
                    }
                    match e {
                        Expr::Sum(_) => write!(f, "({e})")?,
                        _ => write!(f, "{e}")?,
                    }
                }
                Ok(())
            }
            Expr::Product(fs) => {
                for (k, e) in fs.iter().enumerate() {
                    if k > 0 {
                        f.write_str("*")?;
                    }
                    match e {
                        Expr::Sum(_) => write!(f, "({e})")?,
                        _ => write!(f, "{e}")?,
                    }
                }
                Ok(())
            }
            Expr::Power(b, n) => match **b {
                Expr::Atom { .. } => write!(f, "{b}^{n}"),
                Expr::Num(ref c) if c.is_integer() && *c >= Scalar::zero() => write!(f, "{b}^{n}"),
                _ => write!(f, "({b})^{n}"),
            },
        }
    }
}

impl fmt::Display for TensorExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = |e: &Expr| match e {
            Expr::Sum(_) => format!("({e})"),
            _ => e.to_string(),
        };
        for (k, (neg, l, r)) in self.0.iter().enumerate() {
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            write!(f, "{}|{}", side(l), side(r))?;
        }
        Ok(())
    }
}

/// Where atoms, the unit and products come from during evaluation.
pub trait Env {
    fn atom(&self, name: &str) -> Option<SparseVec>;
    /// Value of the scalar `1`, if constants are allowed.
    fn unit(&self) -> Option<SparseVec>;
    fn mul(&self, a: &SparseVec, b: &SparseVec) -> Result<SparseVec, String>;
}

enum Val {
    S(Scalar),
    V(SparseVec),
}

fn to_vec(env: &dyn Env, v: Val, col: usize) -> PResult<SparseVec> {
    match v {
        Val::V(v) => Ok(v),
        Val::S(c) if c.is_zero() => Ok(SparseVec::new()),
        Val::S(c) => match env.unit() {
            Some(u) => Ok(scale(&u, &c)),
            None => Err(ExprError {
                col,
                msg: "constant terms are not allowed here".into(),
            }),
        },
    }
}

fn first_col(e: &Expr) -> usize {
    match e {
        Expr::Atom { col, .. } => *col,
        Expr::Sum(t) => t.first().map_or(0, |t| first_col(&t.1)),
        Expr::Product(fs) => fs.first().map_or(0, first_col),
        Expr::Power(b, _) => first_col(b),
        Expr::Num(_) => 0,
    }
}

fn eval_val(env: &dyn Env, e: &Expr) -> PResult<Val> {
    match e {
        Expr::Num(c) => Ok(Val::S(c.clone())),
        Expr::Atom { name, col } => env.atom(name).map(Val::V).ok_or_else(|| ExprError {
            col: *col,
            msg: format!("unknown basis label {name}"),
        }),
        Expr::Sum(terms) => {
            let mut scalar = Scalar::zero();
            let mut vec: Option<SparseVec> = None;
            for (neg, t) in terms {
                let sign = if *neg { -Scalar::one() } else { Scalar::one() };
                match eval_val(env, t)? {
                    Val::S(c) => scalar += sign * c,
                    Val::V(v) => axpy(vec.get_or_insert_with(SparseVec::new), &sign, &v),
                }
            }
            match vec {
                None => Ok(Val::S(scalar)),
                Some(mut v) => {
                    let c = to_vec(env, Val::S(scalar), first_col(e))?;
                    axpy(&mut v, &Scalar::one(), &c);
                    Ok(Val::V(v))
                }
            }
        }
        Expr::Product(fs) => {
            let mut acc = Val::S(Scalar::one());
            for f in fs {
                let x = eval_val(env, f)?;
                acc = mul_vals(env, acc, x, first_col(f))?;
            }
            Ok(acc)
        }
        Expr::Power(b, n) => {
            let base = eval_val(env, b)?;
            let col = first_col(b);
            let mut acc = Val::S(Scalar::one());
            for _ in 0..*n {
                let x = match &base {
                    Val::S(c) => Val::S(c.clone()),
                    Val::V(v) => Val::V(v.clone()),
                };
                acc = mul_vals(env, acc, x, col)?;
            }
            if *n == 0 {
                return Ok(Val::S(Scalar::one()));
            }
            Ok(acc)
        }
    }
}

fn mul_vals(env: &dyn Env, a: Val, b: Val, col: usize) -> PResult<Val> {
    Ok(match (a, b) {
        (Val::S(x), Val::S(y)) => Val::S(x * y),
        (Val::S(x), Val::V(v)) | (Val::V(v), Val::S(x)) => Val::V(scale(&v, &x)),
        (Val::V(u), Val::V(v)) => Val::V(env.mul(&u, &v).map_err(|msg| ExprError { col, msg })?),
    })
}

/// Evaluates `e` to a vector; scalars become multiples of the unit.
pub fn eval(env: &dyn Env, e: &Expr) -> PResult<SparseVec> {
    let v = eval_val(env, e)?;
    to_vec(env, v, first_col(e))
}

pub fn eval_tensor(env: &dyn Env, t: &TensorExpr) -> PResult<RawTensor<2>> {
    let mut out = RawTensor::new();
    for (neg, l, r) in &t.0 {
        let a = eval(env, l)?;
        let b = eval(env, r)?;
        let sign = if *neg { -Scalar::one() } else { Scalar::one() };
        axpy(&mut out, &sign, &outer(&a, &b));
    }
    Ok(out)
}

/// Linear expressions over a fixed list of labels.
pub struct LinearEnv<'a> {
    pub labels: &'a [String],
    pub unit: Option<SparseVec>,
}

impl Env for LinearEnv<'_> {
    fn atom(&self, name: &str) -> Option<SparseVec> {
        let i = self.labels.iter().position(|l| l == name)?;
        Some(SparseVec::from([(i, Scalar::one())]))
    }

    fn unit(&self) -> Option<SparseVec> {
        self.unit.clone()
    }

    fn mul(&self, _: &SparseVec, _: &SparseVec) -> Result<SparseVec, String> {
        Err("products of basis elements are not allowed here; the expression must be linear".into())
    }
}

/// Expressions evaluated inside a Hopf presentation.
pub struct HopfEnv<'a> {
    pub h: &'a crate::hopf::HopfPresentation,
    atoms: Vec<(String, SparseVec)>,
}

impl<'a> HopfEnv<'a> {
    pub fn new(h: &'a crate::hopf::HopfPresentation) -> Self {
        HopfEnv { h, atoms: h.atoms() }
    }
}

impl Env for HopfEnv<'_> {
    fn atom(&self, name: &str) -> Option<SparseVec> {
        self.atoms.iter().find(|(l, _)| l == name).map(|(_, v)| v.clone())
    }

    fn unit(&self) -> Option<SparseVec> {
        Some(self.h.tables().unit.clone())
    }

    fn mul(&self, a: &SparseVec, b: &SparseVec) -> Result<SparseVec, String> {
        self.h.mul_raw(a, b).map_err(|e| e.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::exactlin::{frac, int};

    fn labels(xs: &[&str]) -> Vec<String> {
        xs.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn linear_expressions() {
        let l = labels(&["x", "y", "z"]);
        let env = LinearEnv { labels: &l, unit: None };
        let e = parse_expr("x - 2*y + 1/2*z", 1).unwrap();
        assert_eq!(
            eval(&env, &e).unwrap(),
            SparseVec::from([(0, int(1)), (1, int(-2)), (2, frac(1, 2))])
        );
        let e = parse_expr("-(x + y)*3", 1).unwrap();
        assert_eq!(eval(&env, &e).unwrap(), SparseVec::from([(0, int(-3)), (1, int(-3))]));
        assert_eq!(eval(&env, &parse_expr("x - x", 1).unwrap()).unwrap(), SparseVec::new());
    }

    #[test]
    fn unknown_label_reports_column() {
        let l = labels(&["x", "y"]);
        let env = LinearEnv { labels: &l, unit: None };
        let e = parse_expr("x + z", 17).unwrap();
        let err = eval(&env, &e).unwrap_err();
        assert_eq!(err.msg, "unknown basis label z");
        assert_eq!(err.col, 21);
    }

    #[test]
    fn syntax_errors() {
        assert!(parse_expr("x +", 1).is_err());
        assert!(parse_expr("(x", 1).is_err());
        assert!(parse_expr("x $ y", 1).is_err());
        assert!(parse_expr("1/0", 1).is_err());
        assert_eq!(parse_expr("x y", 1).unwrap_err().col, 3);
    }

    #[test]
    fn products_in_a_smash_product() {
        let h = catalog::h2(4).unwrap();
        let env = HopfEnv::new(&h);
        // g x = -x g
        let gx = eval(&env, &parse_expr("g*x", 1).unwrap()).unwrap();
        let xg = eval(&env, &parse_expr("-x*g", 1).unwrap()).unwrap();
        assert_eq!(gx, xg);
        let e = eval(&env, &parse_expr("(x + 1)^2 - x^2 - 2*x", 1).unwrap()).unwrap();
        assert_eq!(e, h.tables().unit);
        assert!(eval(&env, &parse_expr("x^5", 1).unwrap()).is_err());
    }

    #[test]
    fn tensors() {
        let h = catalog::h2(4).unwrap();
        let env = HopfEnv::new(&h);
        let t = eval_tensor(&env, &parse_tensor("x|1 + 1|x", 1).unwrap()).unwrap();
        let x = eval(&env, &parse_expr("x", 1).unwrap()).unwrap();
        assert_eq!(t, h.comul_raw(&x));
        assert!(parse_tensor("x + y", 1).is_err());
    }

    #[test]
    fn display_round_trips() {
        for src in ["x - 2*y + 1/2*z", "-(x + y)^2*g", "3", "x^2*(y - 1)", "-x"] {
            let e = parse_expr(src, 1).unwrap();
            let printed = e.to_string();
            let again = parse_expr(&printed, 1).unwrap();
            assert_eq!(again.to_string(), printed, "{src}");
        }
        let t = parse_tensor("x|1 - 2*(x + y)|g", 1).unwrap();
        assert_eq!(t.to_string(), "x|1 - 2*(x + y)|g");
    }
}

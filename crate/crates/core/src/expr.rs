//! The module expression language.
//!
//! ```text
//! E := P(i) | S(i) | rad^k(E) | rad(E) | soc_k(E) | soc(E)
//!    | quot(E, rad^k(E)) | quot(E, soc_k(E)) | quot_soc(E, i)
//!    | dsum(E, ...) | sub(E, seed) | rquot(E, seed)
//!    | homG(E) | PR(i, j) | SR(i, j) | Delta(i, j)
//! ```
//!
//! `P`, `S`, `quot_soc` and `homG` take modules over `A`; `PR`, `SR`,
//! `Delta` and `homG` produce modules over the ADR algebra. The remaining
//! forms work on either kind. `rad^k(E)` and `soc_k(E)` denote submodules,
//! `sub` and `rquot` a seeded random submodule and quotient.

use std::fmt;
use std::sync::Arc;

use crate::adr::{build_context, sc_direct_sum, AdrContext, Label, SCModule};
use crate::amod::{self, Rep};
use crate::corpus;
use crate::error::{Error, Result};
use crate::exact::Subspace;
use crate::quiver::BoundAlgebra;
use crate::strat;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Projective(usize),
    Simple(usize),
    RadPower(u32, Box<Expr>),
    SocPower(u32, Box<Expr>),
    /// `quot(E, rad^k(E))` or `quot(E, soc_k(E))`: the second expression is
    /// the submodule.
    Quot(Box<Expr>, Box<Expr>),
    QuotSoc(Box<Expr>, usize),
    DSum(Vec<Expr>),
    Sub(Box<Expr>, u64),
    RQuot(Box<Expr>, u64),
    HomG(Box<Expr>),
    ProjectiveR(usize, usize),
    SimpleR(usize, usize),
    Standard(usize, usize),
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Projective(i) => write!(f, "P({i})"),
            Expr::Simple(i) => write!(f, "S({i})"),
            Expr::RadPower(k, e) => write!(f, "rad^{k}({e})"),
            Expr::SocPower(k, e) => write!(f, "soc_{k}({e})"),
            Expr::Quot(e, s) => write!(f, "quot({e}, {s})"),
            Expr::QuotSoc(e, i) => write!(f, "quot_soc({e}, {i})"),
            Expr::DSum(es) => {
                write!(f, "dsum(")?;
                for (k, e) in es.iter().enumerate() {
                    if k > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{e}")?;
                }
                write!(f, ")")
            }
            Expr::Sub(e, s) => write!(f, "sub({e}, {s})"),
            Expr::RQuot(e, s) => write!(f, "rquot({e}, {s})"),
            Expr::HomG(e) => write!(f, "homG({e})"),
            Expr::ProjectiveR(i, j) => write!(f, "PR({i},{j})"),
            Expr::SimpleR(i, j) => write!(f, "SR({i},{j})"),
            Expr::Standard(i, j) => write!(f, "Delta({i},{j})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Ident(String),
    Num(u64),
    LParen,
    RParen,
    Comma,
    Caret,
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end: usize,
}

fn err(column: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        line: 1,
        column,
        message: message.into(),
    }
}

fn tokenize(text: &str) -> Result<Vec<(Tok, usize)>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut k = 0;
    while k < chars.len() {
        let c = chars[k];
        let col = k + 1;
        match c {
            ' ' | '\t' => k += 1,
            '(' => {
                out.push((Tok::LParen, col));
                k += 1;
            }
            ')' => {
                out.push((Tok::RParen, col));
                k += 1;
            }
            ',' => {
                out.push((Tok::Comma, col));
                k += 1;
            }
            '^' => {
                out.push((Tok::Caret, col));
                k += 1;
            }
            d if d.is_ascii_digit() => {
                let start = k;
                while k < chars.len() && chars[k].is_ascii_digit() {
                    k += 1;
                }
                let s: String = chars[start..k].iter().collect();
                let v = s.parse().map_err(|_| err(col, format!("number {s} is too large")))?;
                out.push((Tok::Num(v), col));
            }
            a if a.is_ascii_alphabetic() => {
                let start = k;
                while k < chars.len() && (chars[k].is_ascii_alphanumeric() || chars[k] == '_') {
                    k += 1;
                }
                out.push((Tok::Ident(chars[start..k].iter().collect()), col));
            }
            other => return Err(err(col, format!("unexpected character '{other}'"))),
        }
    }
    Ok(out)
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn column(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(_, c)| *c)
    }

    fn expect(&mut self, want: Tok, what: &str) -> Result<()> {
        if self.peek() == Some(&want) {
            self.pos += 1;
            Ok(())
        } else {
            Err(err(self.column(), format!("expected {what}")))
        }
    }

    fn number(&mut self) -> Result<u64> {
        match self.peek() {
            Some(Tok::Num(v)) => {
                let v = *v;
                self.pos += 1;
                Ok(v)
            }
            _ => Err(err(self.column(), "expected a number")),
        }
    }

    fn index(&mut self) -> Result<usize> {
        let col = self.column();
        let v = self.number()?;
        if v == 0 {
            return Err(err(col, "indices are 1-based"));
        }
        Ok(v as usize)
    }

    fn pair(&mut self) -> Result<(usize, usize)> {
        self.expect(Tok::LParen, "'('")?;
        let i = self.index()?;
        self.expect(Tok::Comma, "','")?;
        let j = self.index()?;
        self.expect(Tok::RParen, "')'")?;
        Ok((i, j))
    }

    fn wrapped(&mut self) -> Result<Expr> {
        self.expect(Tok::LParen, "'('")?;
        let e = self.expr()?;
        self.expect(Tok::RParen, "')'")?;
        Ok(e)
    }

    fn expr_then_number(&mut self) -> Result<(Expr, u64)> {
        self.expect(Tok::LParen, "'('")?;
        let e = self.expr()?;
        self.expect(Tok::Comma, "','")?;
        let v = self.number()?;
        self.expect(Tok::RParen, "')'")?;
        Ok((e, v))
    }

    fn expr(&mut self) -> Result<Expr> {
        let col = self.column();
        let name = match self.peek() {
            Some(Tok::Ident(s)) => s.clone(),
            _ => return Err(err(col, "expected a module expression")),
        };
        self.pos += 1;
        if let Some(k) = name.strip_prefix("soc_") {
            let k: u32 = k.parse().map_err(|_| err(col, format!("bad socle index in '{name}'")))?;
            return Ok(Expr::SocPower(k, Box::new(self.wrapped()?)));
        }
        match name.as_str() {
            "P" | "S" => {
                self.expect(Tok::LParen, "'('")?;
                let i = self.index()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(if name == "P" { Expr::Projective(i) } else { Expr::Simple(i) })
            }
            "rad" => {
                let k = if self.peek() == Some(&Tok::Caret) {
                    self.pos += 1;
                    self.number()? as u32
                } else {
                    1
                };
                Ok(Expr::RadPower(k, Box::new(self.wrapped()?)))
            }
            "soc" => Ok(Expr::SocPower(1, Box::new(self.wrapped()?))),
            "quot" => {
                self.expect(Tok::LParen, "'('")?;
                let e = self.expr()?;
                self.expect(Tok::Comma, "','")?;
                let scol = self.column();
                let s = self.expr()?;
                match &s {
                    Expr::RadPower(_, inner) | Expr::SocPower(_, inner) if **inner == e => {}
                    _ => return Err(err(scol, "second argument of quot must be rad^k or soc_k of the first")),
                }
                self.expect(Tok::RParen, "')'")?;
                Ok(Expr::Quot(Box::new(e), Box::new(s)))
            }
            "quot_soc" => {
                self.expect(Tok::LParen, "'('")?;
                let e = self.expr()?;
                self.expect(Tok::Comma, "','")?;
                let i = self.index()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(Expr::QuotSoc(Box::new(e), i))
            }
            "dsum" => {
                self.expect(Tok::LParen, "'('")?;
                let mut es = vec![self.expr()?];
                while self.peek() == Some(&Tok::Comma) {
                    self.pos += 1;
                    es.push(self.expr()?);
                }
                self.expect(Tok::RParen, "')'")?;
                Ok(Expr::DSum(es))
            }
            "sub" => {
                let (e, s) = self.expr_then_number()?;
                Ok(Expr::Sub(Box::new(e), s))
            }
            "rquot" => {
                let (e, s) = self.expr_then_number()?;
                Ok(Expr::RQuot(Box::new(e), s))
            }
            "homG" => Ok(Expr::HomG(Box::new(self.wrapped()?))),
            "PR" => {
                let (i, j) = self.pair()?;
                Ok(Expr::ProjectiveR(i, j))
            }
            "SR" => {
                let (i, j) = self.pair()?;
                Ok(Expr::SimpleR(i, j))
            }
            "Delta" => {
                let (i, j) = self.pair()?;
                Ok(Expr::Standard(i, j))
            }
            other => Err(err(col, format!("unknown constructor '{other}'"))),
        }
    }
}

pub fn parse_expr(text: &str) -> Result<Expr> {
    let toks = tokenize(text)?;
    let mut p = Parser {
        toks,
        pos: 0,
        end: text.chars().count() + 1,
    };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(err(p.column(), "trailing input"));
    }
    Ok(e)
}

/// A module over `A` or over its ADR algebra.
#[derive(Clone, Debug)]
pub enum Value {
    A(Rep),
    R(SCModule),
}

impl Value {
    pub fn dim(&self) -> usize {
        match self {
            Value::A(m) => m.dim(),
            Value::R(m) => m.dim(),
        }
    }

    pub fn as_a(&self) -> Option<&Rep> {
        match self {
            Value::A(m) => Some(m),
            Value::R(_) => None,
        }
    }

    pub fn as_r(&self) -> Option<&SCModule> {
        match self {
            Value::A(_) => None,
            Value::R(m) => Some(m),
        }
    }
}

/// Evaluates expressions over one algebra, building the ADR context on first
/// use.
pub struct Evaluator {
    algebra: Arc<BoundAlgebra>,
    ctx: Option<Arc<AdrContext>>,
}

impl Evaluator {
    pub fn new(algebra: Arc<BoundAlgebra>) -> Evaluator {
        Evaluator { algebra, ctx: None }
    }

    pub fn with_context(ctx: Arc<AdrContext>) -> Evaluator {
        Evaluator {
            algebra: ctx.algebra().clone(),
            ctx: Some(ctx),
        }
    }

    pub fn algebra(&self) -> &Arc<BoundAlgebra> {
        &self.algebra
    }

    pub fn context(&mut self) -> Result<Arc<AdrContext>> {
        if self.ctx.is_none() {
            self.ctx = Some(build_context(&self.algebra)?);
        }
        Ok(self.ctx.clone().unwrap())
    }

    pub fn eval_str(&mut self, text: &str) -> Result<Value> {
        let e = parse_expr(text)?;
        self.eval(&e)
    }

    pub fn eval_a(&mut self, e: &Expr) -> Result<Rep> {
        match self.eval(e)? {
            Value::A(m) => Ok(m),
            Value::R(_) => Err(Error::Input(format!("{e} is a module over the ADR algebra, not over A"))),
        }
    }

    pub fn eval_r(&mut self, e: &Expr) -> Result<SCModule> {
        match self.eval(e)? {
            Value::R(m) => Ok(m),
            Value::A(_) => Err(Error::Input(format!("{e} is a module over A; wrap it in homG(...)"))),
        }
    }

    fn label(&mut self, i: usize, j: usize) -> Result<(Arc<AdrContext>, usize)> {
        let ctx = self.context()?;
        let s = ctx.index_of(Label(i, j))?;
        Ok((ctx, s))
    }

    /// The submodule denoted by `rad^k(E)` or `soc_k(E)`, inside `E`.
    fn series_part(&self, v: &Value, rad: bool, k: u32) -> Subspace {
        let k = k as usize;
        match (v, rad) {
            (Value::A(m), true) => m.rad_power(k),
            (Value::R(m), true) => m.graded().rad_power(k),
            (Value::A(m), false) => socle_power(m.graded(), k),
            (Value::R(m), false) => socle_power(m.graded(), k),
        }
    }

    fn restrict(&self, v: &Value, u: &Subspace) -> Result<Value> {
        Ok(match v {
            Value::A(m) => Value::A(m.submodule(u)?.0),
            Value::R(m) => Value::R(m.submodule(u)?.0),
        })
    }

    fn quotient(&self, v: &Value, u: &Subspace) -> Result<Value> {
        Ok(match v {
            Value::A(m) => Value::A(m.quotient(u)?.0),
            Value::R(m) => Value::R(m.quotient(u)?.0),
        })
    }

    pub fn eval(&mut self, e: &Expr) -> Result<Value> {
        let a = self.algebra.clone();
        Ok(match e {
            Expr::Projective(i) => Value::A(Rep::projective(a, *i)?),
            Expr::Simple(i) => Value::A(Rep::simple(a, *i)?),
            Expr::RadPower(k, inner) | Expr::SocPower(k, inner) => {
                let v = self.eval(inner)?;
                let u = self.series_part(&v, matches!(e, Expr::RadPower(..)), *k);
                self.restrict(&v, &u)?
            }
            Expr::Quot(inner, s) => {
                let v = self.eval(inner)?;
                let u = match &**s {
                    Expr::RadPower(k, _) => self.series_part(&v, true, *k),
                    Expr::SocPower(k, _) => self.series_part(&v, false, *k),
                    _ => return Err(Error::Input("quot expects rad^k or soc_k".into())),
                };
                self.quotient(&v, &u)?
            }
            Expr::QuotSoc(inner, i) => Value::A(self.eval_a(inner)?.quotient_by_socle_component(*i)?.0),
            Expr::DSum(es) => {
                let vs = es.iter().map(|x| self.eval(x)).collect::<Result<Vec<_>>>()?;
                if vs.iter().all(|v| matches!(v, Value::A(_))) {
                    let parts: Vec<&Rep> = vs
                        .iter()
                        .map(|v| match v {
                            Value::A(m) => m,
                            Value::R(_) => unreachable!(),
                        })
                        .collect();
                    Value::A(amod::direct_sum(&a, &parts)?.0)
                } else if vs.iter().all(|v| matches!(v, Value::R(_))) {
                    let ctx = self.context()?;
                    let parts: Vec<&SCModule> = vs
                        .iter()
                        .map(|v| match v {
                            Value::R(m) => m,
                            Value::A(_) => unreachable!(),
                        })
                        .collect();
                    Value::R(sc_direct_sum(&ctx, &parts)?.0)
                } else {
                    return Err(Error::Input("dsum mixes modules over A and over the ADR algebra".into()));
                }
            }
            Expr::Sub(inner, seed) => {
                let v = self.eval(inner)?;
                let u = match &v {
                    Value::A(m) => corpus::random_subspace(m.graded(), *seed),
                    Value::R(m) => corpus::random_subspace(m.graded(), *seed),
                };
                self.restrict(&v, &u)?
            }
            Expr::RQuot(inner, seed) => {
                let v = self.eval(inner)?;
                let u = match &v {
                    Value::A(m) => corpus::random_subspace(m.graded(), *seed),
                    Value::R(m) => corpus::random_subspace(m.graded(), *seed),
                };
                self.quotient(&v, &u)?
            }
            Expr::HomG(inner) => {
                let m = self.eval_a(inner)?;
                Value::R(self.context()?.hom_g(&m)?)
            }
            Expr::ProjectiveR(i, j) => {
                let (ctx, s) = self.label(*i, *j)?;
                Value::R(ctx.projective(s))
            }
            Expr::SimpleR(i, j) => {
                let (ctx, s) = self.label(*i, *j)?;
                Value::R(ctx.simple(s))
            }
            Expr::Standard(i, j) => {
                let (ctx, s) = self.label(*i, *j)?;
                Value::R(strat::standard_module(&ctx, s)?)
            }
        })
    }
}

fn socle_power(g: &crate::graded::Graded, k: usize) -> Subspace {
    let series = g.socle_series();
    series.get(k).cloned().unwrap_or_else(|| g.full())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins;

    #[test]
    fn round_trip_printing() {
        for text in [
            "P(1)",
            "rad^2(P(3))",
            "quot(P(1), rad^3(P(1)))",
            "quot(P(2), soc_1(P(2)))",
            "quot_soc(P(1), 6)",
            "dsum(P(1), S(2), rquot(P(3), 7))",
            "homG(rad^1(P(3)))",
            "Delta(1,2)",
        ] {
            let e = parse_expr(text).unwrap();
            assert_eq!(parse_expr(&e.to_string()).unwrap(), e);
        }
        assert_eq!(parse_expr("rad(P(1))").unwrap(), parse_expr("rad^1(P(1))").unwrap());
    }

    #[test]
    fn syntax_errors_carry_columns() {
        match parse_expr("dsum(P(1), Q(2))") {
            Err(Error::Syntax { column, .. }) => assert_eq!(column, 12),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_expr("P(0)"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_expr("quot(P(1), rad^1(P(2)))"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_expr("P(1) P(2)"), Err(Error::Syntax { .. })));
    }

    #[test]
    fn evaluation() {
        let a = Arc::new(builtins::algebra("ex54", None).unwrap());
        let mut ev = Evaluator::new(a);
        assert_eq!(ev.eval_str("quot_soc(P(1), 6)").unwrap().dim(), 5);
        assert_eq!(ev.eval_str("quot(P(1), rad^2(P(1)))").unwrap().dim(), 4);
        assert_eq!(ev.eval_str("soc_1(P(1))").unwrap().dim(), 3);
        assert_eq!(ev.eval_str("homG(S(1))").unwrap().dim(), 3);
        assert_eq!(ev.eval_str("dsum(PR(1,1), SR(4,1))").unwrap().dim(), 4);
        assert!(matches!(ev.eval_str("P(9)"), Err(Error::Input(_))));
        assert!(ev.eval_str("dsum(P(1), PR(1,1))").is_err());
    }
}

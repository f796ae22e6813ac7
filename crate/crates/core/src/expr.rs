//! Infix arithmetic expressions and boolean guards over `x1..xn` and `t`.
//!
//! ```text
//! expr   := term (('+'|'-') term)*
//! term   := factor (('*'|'/') factor)*
//! factor := '-' factor | base ('^' int)?
//! base   := number | 'x'i | 't' | '(' expr ')'
//!         | ('min'|'max') '(' expr ',' expr ')' | 'abs' '(' expr ')'
//!
//! guard  := conj ('or' conj)*
//! conj   := cmp ('and' cmp)*
//! cmp    := 'true' | '(' guard ')' | expr relop expr (relop expr)*
//! relop  := '<=' | '<' | '>=' | '>' | '==' | '!='
//! ```
//!
//! Unary minus binds looser than `^`, so `-x1^2` is `-(x1^2)`. Comparisons
//! allow a relative slack of `1e-12` so that grid points such as `x1 = 0.7`
//! satisfy `1 - x1 <= 0.3`.

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Node {
    Num(f64),
    Var(usize),
    T,
    Neg(Box<Node>),
    Bin(Op, Box<Node>, Box<Node>),
    Pow(Box<Node>, i32),
    Min(Box<Node>, Box<Node>),
    Max(Box<Node>, Box<Node>),
    Abs(Box<Node>),
}

#[derive(Debug, Clone, Copy, PartialEq)]
enum Op {
    Add,
    Sub,
    Mul,
    Div,
}

#[derive(Debug, Clone, Copy, PartialEq)]
enum Rel {
    Le,
    Lt,
    Ge,
    Gt,
    Eq,
    Ne,
}

/// A parsed arithmetic expression.
#[derive(Debug, Clone, PartialEq)]
pub struct Expr {
    root: Node,
    source: String,
}

#[derive(Debug, Clone, PartialEq)]
enum GuardNode {
    True,
    Chain(Vec<Node>, Vec<Rel>),
    And(Vec<GuardNode>),
    Or(Vec<GuardNode>),
}

/// A parsed boolean guard.
#[derive(Debug, Clone, PartialEq)]
pub struct Guard {
    root: GuardNode,
    source: String,
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(f64),
    Ident(String),
    Sym(&'static str),
    End,
}

struct Lexer {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    src: String,
}

const SYMBOLS: [&str; 14] = ["<=", ">=", "==", "!=", "<", ">", "+", "-", "*", "/", "^", "(", ")", ","];

fn syntax(src: &str, offset: usize, message: impl Into<String>) -> Error {
    let before = &src[..offset.min(src.len())];
    let line = before.matches('\n').count() + 1;
    let column = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
    Error::Syntax { line, column, message: message.into() }
}

fn lex(src: &str) -> Result<Vec<(Tok, usize)>> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    'outer: while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c.is_ascii_digit() || (c == '.' && bytes.get(i + 1).is_some_and(|b| b.is_ascii_digit())) {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_digit() || bytes[i] == b'.') {
                i += 1;
            }
            if i < bytes.len() && (bytes[i] == b'e' || bytes[i] == b'E') {
                let mut j = i + 1;
                if j < bytes.len() && (bytes[j] == b'+' || bytes[j] == b'-') {
                    j += 1;
                }
                if j < bytes.len() && bytes[j].is_ascii_digit() {
                    while j < bytes.len() && bytes[j].is_ascii_digit() {
                        j += 1;
                    }
                    i = j;
                }
            }
            let text = &src[start..i];
            let v: f64 = text.parse().map_err(|_| syntax(src, start, format!("bad number {text:?}")))?;
            out.push((Tok::Num(v), start));
            continue;
        }
        if c.is_ascii_alphabetic() {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push((Tok::Ident(src[start..i].to_string()), start));
            continue;
        }
        for s in SYMBOLS {
            if src[i..].starts_with(s) {
                out.push((Tok::Sym(s), i));
                i += s.len();
                continue 'outer;
            }
        }
        return Err(syntax(src, i, format!("unexpected character {c:?}")));
    }
    out.push((Tok::End, src.len()));
    Ok(out)
}

impl Lexer {
    fn new(src: &str) -> Result<Lexer> {
        Ok(Lexer { toks: lex(src)?, pos: 0, src: src.to_string() })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn err(&self, message: impl Into<String>) -> Error {
        syntax(&self.src, self.offset(), message)
    }

    fn is_sym(&self, s: &str) -> bool {
        matches!(self.peek(), Tok::Sym(x) if *x == s)
    }

    fn is_ident(&self, s: &str) -> bool {
        matches!(self.peek(), Tok::Ident(x) if x == s)
    }

    fn expect(&mut self, s: &str) -> Result<()> {
        if self.is_sym(s) {
            self.bump();
            Ok(())
        } else {
            Err(self.err(format!("expected '{s}'")))
        }
    }

    fn finish(&self) -> Result<()> {
        if *self.peek() == Tok::End {
            Ok(())
        } else {
            Err(self.err("unexpected trailing input"))
        }
    }

    fn expr(&mut self) -> Result<Node> {
        let mut lhs = self.term()?;
        loop {
            let op = if self.is_sym("+") {
                Op::Add
            } else if self.is_sym("-") {
                Op::Sub
            } else {
                return Ok(lhs);
            };
            self.bump();
            lhs = Node::Bin(op, Box::new(lhs), Box::new(self.term()?));
        }
    }

    fn term(&mut self) -> Result<Node> {
        let mut lhs = self.factor()?;
        loop {
            let op = if self.is_sym("*") {
                Op::Mul
            } else if self.is_sym("/") {
                Op::Div
            } else {
                return Ok(lhs);
            };
            self.bump();
            lhs = Node::Bin(op, Box::new(lhs), Box::new(self.factor()?));
        }
    }

    fn factor(&mut self) -> Result<Node> {
        if self.is_sym("-") {
            self.bump();
            return Ok(Node::Neg(Box::new(self.factor()?)));
        }
        let base = self.base()?;
        if !self.is_sym("^") {
            return Ok(base);
        }
        self.bump();
        let negative = self.is_sym("-");
        if negative {
            self.bump();
        }
        match self.peek().clone() {
            Tok::Num(v) if v.fract() == 0.0 && v.abs() <= 64.0 => {
                self.bump();
                let k = v as i32;
                Ok(Node::Pow(Box::new(base), if negative { -k } else { k }))
            }
            _ => Err(self.err("expected integer exponent")),
        }
    }

    fn base(&mut self) -> Result<Node> {
        match self.peek().clone() {
            Tok::Num(v) => {
                self.bump();
                Ok(Node::Num(v))
            }
            Tok::Sym("(") => {
                self.bump();
                let e = self.expr()?;
                self.expect(")")?;
                Ok(e)
            }
            Tok::Ident(name) => {
                let at = self.offset();
                self.bump();
                match name.as_str() {
                    "t" => Ok(Node::T),
                    "min" | "max" => {
                        self.expect("(")?;
                        let a = self.expr()?;
                        self.expect(",")?;
                        let b = self.expr()?;
                        self.expect(")")?;
                        let (a, b) = (Box::new(a), Box::new(b));
                        Ok(if name == "min" { Node::Min(a, b) } else { Node::Max(a, b) })
                    }
                    "abs" => {
                        self.expect("(")?;
                        let a = self.expr()?;
                        self.expect(")")?;
                        Ok(Node::Abs(Box::new(a)))
                    }
                    _ => match name.strip_prefix('x').and_then(|d| d.parse::<usize>().ok()) {
                        Some(i) if i >= 1 && !name[1..].starts_with('0') => Ok(Node::Var(i - 1)),
                        _ => Err(syntax(&self.src, at, format!("unknown identifier {name:?}"))),
                    },
                }
            }
            Tok::End => Err(self.err("unexpected end of input")),
            Tok::Sym(s) => Err(self.err(format!("unexpected '{s}'"))),
        }
    }

    fn relop(&mut self) -> Option<Rel> {
        let r = match self.peek() {
            Tok::Sym("<=") => Rel::Le,
            Tok::Sym("<") => Rel::Lt,
            Tok::Sym(">=") => Rel::Ge,
            Tok::Sym(">") => Rel::Gt,
            Tok::Sym("==") => Rel::Eq,
            Tok::Sym("!=") => Rel::Ne,
            _ => return None,
        };
        self.bump();
        Some(r)
    }

    fn disj(&mut self) -> Result<GuardNode> {
        let mut parts = vec![self.conj()?];
        while self.is_ident("or") {
            self.bump();
            parts.push(self.conj()?);
        }
        Ok(if parts.len() == 1 { parts.pop().unwrap() } else { GuardNode::Or(parts) })
    }

    fn conj(&mut self) -> Result<GuardNode> {
        let mut parts = vec![self.cmp()?];
        while self.is_ident("and") {
            self.bump();
            parts.push(self.cmp()?);
        }
        Ok(if parts.len() == 1 { parts.pop().unwrap() } else { GuardNode::And(parts) })
    }

    fn cmp(&mut self) -> Result<GuardNode> {
        if self.is_ident("true") {
            self.bump();
            return Ok(GuardNode::True);
        }
        if self.is_sym("(") {
            // a parenthesised guard or the start of an arithmetic operand
            let save = self.pos;
            self.bump();
            if let Ok(g) = self.disj() {
                if self.is_sym(")") {
                    self.bump();
                    if self.relop_ahead() {
                        self.pos = save;
                    } else {
                        return Ok(g);
                    }
                } else {
                    self.pos = save;
                }
            } else {
                self.pos = save;
            }
        }
        let mut operands = vec![self.expr()?];
        let mut rels = Vec::new();
        while let Some(r) = self.relop() {
            rels.push(r);
            operands.push(self.expr()?);
        }
        if rels.is_empty() {
            return Err(self.err("expected comparison operator"));
        }
        Ok(GuardNode::Chain(operands, rels))
    }

    fn relop_ahead(&self) -> bool {
        matches!(self.peek(), Tok::Sym("<=" | "<" | ">=" | ">" | "==" | "!=" | "+" | "-" | "*" | "/" | "^"))
    }
}

impl Expr {
    pub fn parse(src: &str) -> Result<Expr> {
        let mut lx = Lexer::new(src)?;
        let root = lx.expr()?;
        lx.finish()?;
        Ok(Expr { root, source: src.to_string() })
    }

    pub fn constant(v: f64) -> Expr {
        Expr { root: Node::Num(v), source: crate::report::fmt_num(v) }
    }

    pub fn source(&self) -> &str {
        &self.source
    }

    /// Evaluates at `x`; `t` is an alias of `x1` when `x` has one entry.
    pub fn eval(&self, x: &[f64]) -> Result<f64> {
        eval(&self.root, x)
    }

    /// Largest variable index used (1-based), or 0.
    pub fn arity(&self) -> usize {
        arity(&self.root)
    }
}

fn arity(n: &Node) -> usize {
    match n {
        Node::Num(_) => 0,
        Node::T => 1,
        Node::Var(i) => i + 1,
        Node::Neg(a) | Node::Abs(a) | Node::Pow(a, _) => arity(a),
        Node::Bin(_, a, b) | Node::Min(a, b) | Node::Max(a, b) => arity(a).max(arity(b)),
    }
}

fn finite(v: f64) -> Result<f64> {
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::NonFinite)
    }
}

fn eval(n: &Node, x: &[f64]) -> Result<f64> {
    match n {
        Node::Num(v) => Ok(*v),
        Node::Var(i) => x.get(*i).copied().ok_or_else(|| Error::UnboundVariable(format!("x{}", i + 1))),
        Node::T => {
            if x.len() == 1 {
                Ok(x[0])
            } else {
                Err(Error::UnboundVariable("t".into()))
            }
        }
        Node::Neg(a) => Ok(-eval(a, x)?),
        Node::Abs(a) => Ok(eval(a, x)?.abs()),
        Node::Min(a, b) => Ok(eval(a, x)?.min(eval(b, x)?)),
        Node::Max(a, b) => Ok(eval(a, x)?.max(eval(b, x)?)),
        Node::Pow(a, k) => {
            let v = eval(a, x)?;
            if v == 0.0 && *k < 0 {
                return Err(Error::DivisionByZero);
            }
            finite(v.powi(*k))
        }
        Node::Bin(op, a, b) => {
            let (l, r) = (eval(a, x)?, eval(b, x)?);
            match op {
                Op::Add => finite(l + r),
                Op::Sub => finite(l - r),
                Op::Mul => finite(l * r),
                Op::Div if r == 0.0 => Err(Error::DivisionByZero),
                Op::Div => finite(l / r),
            }
        }
    }
}

fn compare(rel: Rel, a: f64, b: f64) -> bool {
    let eps = 1e-12 * a.abs().max(b.abs()).max(1.0);
    match rel {
        Rel::Le => a <= b + eps,
        Rel::Lt => a < b - eps,
        Rel::Ge => a >= b - eps,
        Rel::Gt => a > b + eps,
        Rel::Eq => (a - b).abs() <= eps,
        Rel::Ne => (a - b).abs() > eps,
    }
}

fn eval_guard(g: &GuardNode, x: &[f64]) -> Result<bool> {
    match g {
        GuardNode::True => Ok(true),
        GuardNode::Chain(ops, rels) => {
            let vals = ops.iter().map(|o| eval(o, x)).collect::<Result<Vec<_>>>()?;
            Ok(rels.iter().enumerate().all(|(i, r)| compare(*r, vals[i], vals[i + 1])))
        }
        GuardNode::And(parts) => {
            for p in parts {
                if !eval_guard(p, x)? {
                    return Ok(false);
                }
            }
            Ok(true)
        }
        GuardNode::Or(parts) => {
            for p in parts {
                if eval_guard(p, x)? {
                    return Ok(true);
                }
            }
            Ok(false)
        }
    }
}

fn guard_arity(g: &GuardNode) -> usize {
    match g {
        GuardNode::True => 0,
        GuardNode::Chain(ops, _) => ops.iter().map(arity).max().unwrap_or(0),
        GuardNode::And(p) | GuardNode::Or(p) => p.iter().map(guard_arity).max().unwrap_or(0),
    }
}

impl Guard {
    pub fn parse(src: &str) -> Result<Guard> {
        let mut lx = Lexer::new(src)?;
        let root = lx.disj()?;
        lx.finish()?;
        Ok(Guard { root, source: src.to_string() })
    }

    pub fn always() -> Guard {
        Guard { root: GuardNode::True, source: "true".into() }
    }

    pub fn source(&self) -> &str {
        &self.source
    }

    pub fn eval(&self, x: &[f64]) -> Result<bool> {
        eval_guard(&self.root, x)
    }

    pub fn arity(&self) -> usize {
        guard_arity(&self.root)
    }
}

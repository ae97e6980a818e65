//! The expression language: polynomial literals, `@` (⊗), `<|` (◁),
//! `close`, `coclose`, `lin`, `rep` and `let` bindings.
//!
//! ```text
//! expr    := "let" ident "=" expr "in" expr | sum
//! sum     := sub ("+" sub)*
//! sub     := tensor ("<|" tensor)*
//! tensor  := atom ("@" atom)*
//! atom    := monomial | ident | "(" expr ")"
//!          | ("close" | "coclose") "(" expr "," expr ")"
//!          | ("lin" | "rep") "(" nat ")"
//! monomial := nat | nat? "y" ("^" nat)?
//! ```
//!
//! `@` binds tighter than `<|`, which binds tighter than `+`; all three are
//! left-associative. A `+` chain of literals folds into one polynomial, so
//! parsing the printed form of a polynomial gives back that polynomial.

use std::collections::HashMap;
use std::fmt;

use crate::closure;
use crate::error::{PolyError, Result};
use crate::monoidal;
use crate::polycore::cap::check_cap;
use crate::polycore::Polynomial;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Poly(Polynomial),
    Var(String),
    Sum(Box<Expr>, Box<Expr>),
    Tensor(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Close(Box<Expr>, Box<Expr>),
    Coclose(Box<Expr>, Box<Expr>),
    Lin(usize),
    Rep(usize),
    Let(String, Box<Expr>, Box<Expr>),
}

const KEYWORDS: [&str; 7] = ["let", "in", "y", "close", "coclose", "lin", "rep"];

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Nat(usize),
    Ident(String),
    Plus,
    At,
    Tri,
    Caret,
    LParen,
    RParen,
    Comma,
    Eq,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Nat(n) => format!("number `{n}`"),
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Plus => "`+`".into(),
            Tok::At => "`@`".into(),
            Tok::Tri => "`<|`".into(),
            Tok::Caret => "`^`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Eq => "`=`".into(),
            Tok::End => "end of input".into(),
        }
    }
}

#[derive(Debug, Clone)]
struct Spanned {
    tok: Tok,
    line: usize,
    column: usize,
}

fn parse_error(line: usize, column: usize, message: impl Into<String>, expected: &[&str]) -> PolyError {
    PolyError::Parse {
        line,
        column,
        message: message.into(),
        expected: expected.iter().map(|s| s.to_string()).collect(),
    }
}

fn lex(text: &str) -> Result<Vec<Spanned>> {
    let mut out = Vec::new();
    let (mut line, mut column) = (1, 1);
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        let (l, col) = (line, column);
        let mut bump = |chars: &mut std::iter::Peekable<std::str::Chars>| {
            let ch = chars.next();
            if ch == Some('\n') {
                line += 1;
                column = 1;
            } else {
                column += 1;
            }
        };
        let tok = match c {
            _ if c.is_whitespace() => {
                bump(&mut chars);
                continue;
            }
            '0'..='9' => {
                let mut digits = String::new();
                while let Some(&d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                    digits.push(d);
                    bump(&mut chars);
                }
                let n = digits
                    .parse()
                    .map_err(|_| parse_error(l, col, format!("number `{digits}` is too large"), &[]))?;
                Tok::Nat(n)
            }
            'a'..='z' | 'A'..='Z' | '_' => {
                let mut name = String::new();
                while let Some(&d) = chars.peek().filter(|d| d.is_ascii_alphanumeric() || **d == '_') {
                    name.push(d);
                    bump(&mut chars);
                }
                Tok::Ident(name)
            }
            '<' => {
                bump(&mut chars);
                if chars.peek() != Some(&'|') {
                    return Err(parse_error(l, col, "incomplete operator `<`", &["`|`"]));
                }
                bump(&mut chars);
                Tok::Tri
            }
            _ => {
                let t = match c {
                    '+' => Tok::Plus,
                    '@' => Tok::At,
                    '^' => Tok::Caret,
                    '(' => Tok::LParen,
                    ')' => Tok::RParen,
                    ',' => Tok::Comma,
                    '=' => Tok::Eq,
                    other => return Err(parse_error(l, col, format!("unexpected character `{other}`"), &[])),
                };
                bump(&mut chars);
                t
            }
        };
        out.push(Spanned {
            tok,
            line: l,
            column: col,
        });
    }
    out.push(Spanned {
        tok: Tok::End,
        line,
        column,
    });
    Ok(out)
}

/// Bounds that keep parsing and evaluation off the end of the stack.
const MAX_NESTING: usize = 256;
const MAX_OPERATORS: usize = 1024;

struct Parser {
    toks: Vec<Spanned>,
    at: usize,
    nesting: usize,
    operators: usize,
}

const ATOM_START: [&str; 8] = [
    "number",
    "`y`",
    "identifier",
    "`(`",
    "`close`",
    "`coclose`",
    "`lin`",
    "`rep`",
];

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].tok
    }

    fn next(&mut self) -> Spanned {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn fail<T>(&self, expected: &[&str]) -> Result<T> {
        let t = &self.toks[self.at];
        Err(parse_error(
            t.line,
            t.column,
            format!("unexpected {}", t.tok.describe()),
            expected,
        ))
    }

    fn expect(&mut self, tok: Tok) -> Result<()> {
        if *self.peek() == tok {
            self.next();
            Ok(())
        } else {
            self.fail(&[&tok.describe()])
        }
    }

    fn nat(&mut self) -> Result<usize> {
        match *self.peek() {
            Tok::Nat(n) => {
                self.next();
                Ok(n)
            }
            _ => self.fail(&["number"]),
        }
    }

    fn limit(&self, message: String) -> PolyError {
        let t = &self.toks[self.at];
        parse_error(t.line, t.column, message, &[])
    }

    /// Counts one operator node.
    fn operator(&mut self) -> Result<()> {
        self.operators += 1;
        if self.operators > MAX_OPERATORS {
            return Err(self.limit(format!("more than {MAX_OPERATORS} operators")));
        }
        Ok(())
    }

    fn is_keyword(&self, kw: &str) -> bool {
        matches!(self.peek(), Tok::Ident(s) if s == kw)
    }

    fn expr(&mut self) -> Result<Expr> {
        if self.nesting == MAX_NESTING {
            return Err(self.limit(format!("nesting deeper than {MAX_NESTING}")));
        }
        self.nesting += 1;
        let e = self.let_or_sum();
        self.nesting -= 1;
        e
    }

    fn let_or_sum(&mut self) -> Result<Expr> {
        if !self.is_keyword("let") {
            return self.sum();
        }
        self.next();
        let name = match self.peek().clone() {
            Tok::Ident(s) if !KEYWORDS.contains(&s.as_str()) => {
                self.next();
                s
            }
            _ => return self.fail(&["identifier"]),
        };
        self.expect(Tok::Eq)?;
        let bound = self.expr()?;
        if !self.is_keyword("in") {
            return self.fail(&["`in`"]);
        }
        self.next();
        let body = self.expr()?;
        self.operator()?;
        Ok(Expr::Let(name, Box::new(bound), Box::new(body)))
    }

    fn sum(&mut self) -> Result<Expr> {
        let mut lhs = self.sub()?;
        while *self.peek() == Tok::Plus {
            self.next();
            let rhs = self.sub()?;
            lhs = match (lhs, rhs) {
                (Expr::Poly(p), Expr::Poly(q)) => Expr::Poly(p.sum(&q)),
                (l, r) => {
                    self.operator()?;
                    Expr::Sum(Box::new(l), Box::new(r))
                }
            };
        }
        Ok(lhs)
    }

    fn sub(&mut self) -> Result<Expr> {
        let mut lhs = self.tensor()?;
        while *self.peek() == Tok::Tri {
            self.next();
            self.operator()?;
            lhs = Expr::Sub(Box::new(lhs), Box::new(self.tensor()?));
        }
        Ok(lhs)
    }

    fn tensor(&mut self) -> Result<Expr> {
        let mut lhs = self.atom()?;
        while *self.peek() == Tok::At {
            self.next();
            self.operator()?;
            lhs = Expr::Tensor(Box::new(lhs), Box::new(self.atom()?));
        }
        Ok(lhs)
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.peek().clone() {
            Tok::Nat(n) => {
                self.next();
                check_cap("literal positions", n as u128)?;
                if self.is_keyword("y") {
                    self.next();
                    let e = self.exponent()?;
                    Ok(Expr::Poly(Polynomial::new(vec![e; n])))
                } else {
                    Ok(Expr::Poly(Polynomial::constant(n)))
                }
            }
            Tok::LParen => {
                self.next();
                let e = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(e)
            }
            Tok::Ident(s) => match s.as_str() {
                "y" => {
                    self.next();
                    let e = self.exponent()?;
                    Ok(Expr::Poly(Polynomial::representable(e)))
                }
                "close" | "coclose" => {
                    self.next();
                    self.expect(Tok::LParen)?;
                    let a = self.expr()?;
                    self.expect(Tok::Comma)?;
                    let b = self.expr()?;
                    self.expect(Tok::RParen)?;
                    self.operator()?;
                    let (a, b) = (Box::new(a), Box::new(b));
                    Ok(if s == "close" {
                        Expr::Close(a, b)
                    } else {
                        Expr::Coclose(a, b)
                    })
                }
                "lin" | "rep" => {
                    self.next();
                    self.expect(Tok::LParen)?;
                    let n = self.nat()?;
                    self.expect(Tok::RParen)?;
                    Ok(if s == "lin" { Expr::Lin(n) } else { Expr::Rep(n) })
                }
                "let" | "in" => self.fail(&ATOM_START),
                _ => {
                    self.next();
                    Ok(Expr::Var(s))
                }
            },
            _ => self.fail(&ATOM_START),
        }
    }

    fn exponent(&mut self) -> Result<usize> {
        if *self.peek() == Tok::Caret {
            self.next();
            self.nat()
        } else {
            Ok(1)
        }
    }
}

/// Parses a whole expression. Errors carry 1-based line and column.
pub fn parse(text: &str) -> Result<Expr> {
    let mut p = Parser {
        toks: lex(text)?,
        at: 0,
        nesting: 0,
        operators: 0,
    };
    let e = p.expr()?;
    if *p.peek() != Tok::End {
        return p.fail(&["`+`", "`@`", "`<|`", "end of input"]);
    }
    Ok(e)
}

/// Renders with ASCII operators, or with `⊗`, `◁` and superscripts.
pub fn print(e: &Expr, unicode: bool) -> String {
    render(e, unicode, 0)
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print(self, false))
    }
}

// Precedence levels: 0 let, 1 sum, 2 sub, 3 tensor, 4 atom.
fn level(e: &Expr) -> u8 {
    match e {
        Expr::Let(..) => 0,
        Expr::Sum(..) => 1,
        Expr::Poly(p) if p.num_positions() > 1 && p.cards().windows(2).any(|w| w[0] != w[1]) => 1,
        Expr::Sub(..) => 2,
        Expr::Tensor(..) => 3,
        _ => 4,
    }
}

fn render(e: &Expr, unicode: bool, min: u8) -> String {
    let (tensor, tri) = if unicode { (" ⊗ ", " ◁ ") } else { (" @ ", " <| ") };
    let s = match e {
        Expr::Poly(p) if unicode => p.notation_unicode(),
        Expr::Poly(p) => p.notation(),
        Expr::Var(x) => x.clone(),
        Expr::Lin(n) => format!("lin({n})"),
        Expr::Rep(n) => format!("rep({n})"),
        Expr::Close(a, b) => format!("close({}, {})", render(a, unicode, 0), render(b, unicode, 0)),
        Expr::Coclose(a, b) => format!("coclose({}, {})", render(a, unicode, 0), render(b, unicode, 0)),
        Expr::Sum(a, b) => format!("{} + {}", render(a, unicode, 1), render(b, unicode, 2)),
        Expr::Sub(a, b) => format!("{}{tri}{}", render(a, unicode, 2), render(b, unicode, 3)),
        Expr::Tensor(a, b) => format!("{}{tensor}{}", render(a, unicode, 3), render(b, unicode, 4)),
        Expr::Let(x, a, b) => format!("let {x} = {} in {}", render(a, unicode, 0), render(b, unicode, 0)),
    };
    if level(e) < min {
        format!("({s})")
    } else {
        s
    }
}

/// Evaluates to a normal form, with `let`-bound names in scope.
pub fn eval(e: &Expr) -> Result<Polynomial> {
    eval_in(e, &mut HashMap::new())
}

fn eval_in(e: &Expr, env: &mut HashMap<String, Vec<Polynomial>>) -> Result<Polynomial> {
    let both = |a: &Expr, b: &Expr, env: &mut HashMap<String, Vec<Polynomial>>| -> Result<_> {
        Ok((eval_in(a, env)?, eval_in(b, env)?))
    };
    match e {
        Expr::Poly(p) => Ok(p.clone()),
        Expr::Var(x) => env
            .get(x)
            .and_then(|v| v.last().cloned())
            .ok_or_else(|| PolyError::InvalidInput(format!("unbound name `{x}`"))),
        Expr::Lin(n) => {
            check_cap("literal positions", *n as u128)?;
            Ok(Polynomial::linear(*n))
        }
        Expr::Rep(n) => Ok(Polynomial::representable(*n)),
        Expr::Sum(a, b) => {
            let (p, q) = both(a, b, env)?;
            Ok(p.sum(&q))
        }
        Expr::Tensor(a, b) => {
            let (p, q) = both(a, b, env)?;
            monoidal::tensor(&p, &q)
        }
        Expr::Sub(a, b) => {
            let (p, q) = both(a, b, env)?;
            monoidal::substitute(&p, &q)
        }
        Expr::Close(a, b) => {
            let (p, q) = both(a, b, env)?;
            closure::close(&p, &q)
        }
        Expr::Coclose(a, b) => {
            let (p, q) = both(a, b, env)?;
            closure::coclose(&p, &q)
        }
        Expr::Let(x, a, b) => {
            let v = eval_in(a, env)?;
            env.entry(x.clone()).or_default().push(v);
            let out = eval_in(b, env);
            env.get_mut(x).map(|s| s.pop());
            out
        }
    }
}

/// Parses and evaluates in one step.
pub fn parse_poly(text: &str) -> Result<Polynomial> {
    eval(&parse(text)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(cards: &[usize]) -> Polynomial {
        Polynomial::new(cards.to_vec())
    }

    #[test]
    fn literals() {
        assert_eq!(parse_poly("y^3 + y^2").unwrap(), poly(&[3, 2]));
        assert_eq!(parse_poly("3y^2 + y + 2").unwrap(), poly(&[2, 2, 2, 1, 0, 0]));
        assert_eq!(parse_poly("0").unwrap(), Polynomial::zero());
        assert_eq!(parse_poly("y^0").unwrap(), poly(&[0]));
        assert_eq!(parse_poly(" 2 y ^ 3\n+ 1 ").unwrap(), poly(&[3, 3, 0]));
    }

    #[test]
    fn constructors_and_operators() {
        let e = parse("lin(2) @ rep(3)").unwrap();
        assert_eq!(e, Expr::Tensor(Box::new(Expr::Lin(2)), Box::new(Expr::Rep(3))));
        assert_eq!(eval(&e).unwrap(), poly(&[3, 3]));
        assert_eq!(parse_poly("close(lin(3), y)").unwrap(), poly(&[3]));
        assert_eq!(parse_poly("coclose(y, y^2 + y)").unwrap(), poly(&[2]));
        assert_eq!(parse_poly("coclose(y^2 + y, y)").unwrap(), poly(&[2, 1]));
    }

    #[test]
    fn precedence_and_associativity() {
        let e = parse("a @ b <| c @ d + e").unwrap();
        let v = |s: &str| Box::new(Expr::Var(s.into()));
        let lhs = Expr::Sub(
            Box::new(Expr::Tensor(v("a"), v("b"))),
            Box::new(Expr::Tensor(v("c"), v("d"))),
        );
        assert_eq!(e, Expr::Sum(Box::new(lhs), v("e")));
        let e = parse("a <| b <| c").unwrap();
        assert_eq!(e, Expr::Sub(Box::new(Expr::Sub(v("a"), v("b"))), v("c")));
        assert_eq!(print(&parse("a <| (b <| c)").unwrap(), false), "a <| (b <| c)");
        assert_eq!(print(&parse("(y + 1) @ y^2").unwrap(), false), "(y + 1) @ y^2");
        assert_eq!(print(&parse("2y @ y^2").unwrap(), false), "2y @ y^2");
    }

    #[test]
    fn substitution_is_not_commutative() {
        assert_eq!(parse_poly("y^2 <| (y + 1)").unwrap(), poly(&[2, 1, 1, 0]));
        assert_eq!(parse_poly("(y + 1) <| y^2").unwrap(), poly(&[2, 0]));
    }

    #[test]
    fn let_bindings_scope_and_shadow() {
        assert_eq!(parse_poly("let p = y + 1 in p @ p").unwrap(), poly(&[1, 0, 0, 0]));
        assert_eq!(parse_poly("let p = y + 1 in p <| p").unwrap(), poly(&[1, 0, 0]));
        assert_eq!(parse_poly("let p = y in let p = p + p in p").unwrap(), poly(&[1, 1]));
        assert_eq!(parse_poly("(let p = 2 in p) + y").unwrap(), poly(&[0, 0, 1]));
        assert!(matches!(parse_poly("p + y"), Err(PolyError::InvalidInput(_))));
    }

    #[test]
    fn errors_carry_positions() {
        match parse("y^") {
            Err(PolyError::Parse {
                line, column, expected, ..
            }) => {
                assert_eq!((line, column), (1, 3));
                assert_eq!(expected, vec!["number".to_string()]);
            }
            other => panic!("expected a parse error, got {other:?}"),
        }
        match parse("y +\n  @ y") {
            Err(PolyError::Parse { line, column, .. }) => assert_eq!((line, column), (2, 3)),
            other => panic!("expected a parse error, got {other:?}"),
        }
        assert!(matches!(parse("y < y"), Err(PolyError::Parse { column: 3, .. })));
        assert!(matches!(parse("y y"), Err(PolyError::Parse { column: 3, .. })));
        assert!(matches!(
            parse("let y = 1 in y"),
            Err(PolyError::Parse { column: 5, .. })
        ));
        assert!(matches!(parse("lin(y)"), Err(PolyError::Parse { column: 5, .. })));
    }

    #[test]
    fn unicode_printing() {
        let e = parse("y^2 @ 3y <| y^12").unwrap();
        assert_eq!(print(&e, true), "y² ⊗ 3y ◁ y¹²");
    }

    #[test]
    fn oversized_expressions_are_rejected() {
        let deep = format!("{}y{}", "(".repeat(100_000), ")".repeat(100_000));
        assert!(matches!(parse(&deep), Err(PolyError::Parse { column: 257, .. })));
        assert!(parse(&format!("{}y{}", "(".repeat(255), ")".repeat(255))).is_ok());
        let long = vec!["y"; 20_000].join(" @ ");
        assert!(matches!(parse(&long), Err(PolyError::Parse { .. })));
        assert!(parse(&vec!["y"; MAX_OPERATORS + 1].join(" @ ")).is_ok());
        assert_eq!(
            parse(&vec!["y"; 20_000].join(" + ")).unwrap(),
            Expr::Poly(Polynomial::linear(20_000))
        );
    }
}

//! Bivariate arithmetic expressions: the function `f` as user input.
//!
//! The grammar is deliberately small — constants, the variables `x` and `y`,
//! `+ - * /`, unary minus, parentheses, and `^` with a non-negative integer
//! literal exponent — which keeps evaluation total on polynomials and
//! gradients well conditioned. Precedence is the usual one:
//! `^` binds tightest, then unary minus, then `* /`, then `+ -`;
//! `* /` and `+ -` associate left. Adding named functions would start in
//! [`lex`] and the `parse_atom` case.

use std::fmt;

use crate::ga2::Vector2;

/// Maximum AST depth accepted by the parser.
pub const MAX_DEPTH: usize = 512;

/// Lexical token kinds.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum TokenKind {
    Number,
    Ident,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

/// One lexical token with its byte offset in the source.
#[derive(Clone, Debug, PartialEq)]
pub struct Token {
    pub kind: TokenKind,
    pub text: String,
    pub pos: usize,
}

/// A parse failure, with the byte offset it was detected at.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SyntaxError {
    pub pos: usize,
    pub message: String,
}

impl fmt::Display for SyntaxError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "syntax error at byte {}: {}", self.pos, self.message)
    }
}

impl std::error::Error for SyntaxError {}

fn err(pos: usize, message: impl Into<String>) -> SyntaxError {
    SyntaxError {
        pos,
        message: message.into(),
    }
}

/// An evaluation failure.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum EvalError {
    DivisionByZero,
    NonFinite,
}

impl fmt::Display for EvalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EvalError::DivisionByZero => write!(f, "division by zero"),
            EvalError::NonFinite => write!(f, "non-finite intermediate value"),
        }
    }
}

impl std::error::Error for EvalError {}

/// The two admissible variables.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Var {
    X,
    Y,
}

/// Parsed expression tree.
#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Const(f64),
    Var(Var),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    /// Base raised to a non-negative integer literal.
    Pow(Box<Expr>, u32),
}

/// Tokenizes the source, skipping whitespace.
pub fn lex(src: &str) -> Result<Vec<Token>, SyntaxError> {
    let bytes = src.as_bytes();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let start = i;
        let c = bytes[i];
        let kind = match c {
            b' ' | b'\t' | b'\r' | b'\n' => {
                i += 1;
                continue;
            }
            b'+' => TokenKind::Plus,
            b'-' => TokenKind::Minus,
            b'*' => TokenKind::Star,
            b'/' => TokenKind::Slash,
            b'^' => TokenKind::Caret,
            b'(' => TokenKind::LParen,
            b')' => TokenKind::RParen,
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if i < bytes.len() && bytes[i] == b'.' {
                    i += 1;
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                }
                if i < bytes.len() && (bytes[i] == b'e' || bytes[i] == b'E') {
                    let mut j = i + 1;
                    if j < bytes.len() && (bytes[j] == b'+' || bytes[j] == b'-') {
                        j += 1;
                    }
                    if j < bytes.len() && bytes[j].is_ascii_digit() {
                        i = j;
                        while i < bytes.len() && bytes[i].is_ascii_digit() {
                            i += 1;
                        }
                    }
                }
                let text = &src[start..i];
                let value: f64 = text
                    .parse()
                    .map_err(|_| err(start, format!("invalid number '{text}'")))?;
                if !value.is_finite() {
                    return Err(err(start, format!("number '{text}' overflows")));
                }
                tokens.push(Token {
                    kind: TokenKind::Number,
                    text: text.to_string(),
                    pos: start,
                });
                continue;
            }
            b'a'..=b'z' | b'A'..=b'Z' | b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                tokens.push(Token {
                    kind: TokenKind::Ident,
                    text: src[start..i].to_string(),
                    pos: start,
                });
                continue;
            }
            _ => {
                let ch = src[start..].chars().next().unwrap_or('?');
                return Err(err(start, format!("unexpected character '{ch}'")));
            }
        };
        i += 1;
        tokens.push(Token {
            kind,
            text: src[start..i].to_string(),
            pos: start,
        });
    }
    Ok(tokens)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next_pos(&self) -> usize {
        self.peek().map(|t| t.pos).unwrap_or(self.end)
    }

    fn eat(&mut self, kind: TokenKind) -> bool {
        if self.peek().map(|t| t.kind) == Some(kind) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn guard(&self, depth: usize) -> Result<(), SyntaxError> {
        if depth > MAX_DEPTH {
            Err(err(self.next_pos(), "expression nests too deeply"))
        } else {
            Ok(())
        }
    }

    fn parse_expr(&mut self, depth: usize) -> Result<Expr, SyntaxError> {
        self.guard(depth)?;
        let mut lhs = self.parse_term(depth + 1)?;
        loop {
            if self.eat(TokenKind::Plus) {
                let rhs = self.parse_term(depth + 1)?;
                lhs = Expr::Add(Box::new(lhs), Box::new(rhs));
            } else if self.eat(TokenKind::Minus) {
                let rhs = self.parse_term(depth + 1)?;
                lhs = Expr::Sub(Box::new(lhs), Box::new(rhs));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn parse_term(&mut self, depth: usize) -> Result<Expr, SyntaxError> {
        self.guard(depth)?;
        let mut lhs = self.parse_unary(depth + 1)?;
        loop {
            if self.eat(TokenKind::Star) {
                let rhs = self.parse_unary(depth + 1)?;
                lhs = Expr::Mul(Box::new(lhs), Box::new(rhs));
            } else if self.eat(TokenKind::Slash) {
                let rhs = self.parse_unary(depth + 1)?;
                lhs = Expr::Div(Box::new(lhs), Box::new(rhs));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn parse_unary(&mut self, depth: usize) -> Result<Expr, SyntaxError> {
        self.guard(depth)?;
        if self.eat(TokenKind::Minus) {
            let inner = self.parse_unary(depth + 1)?;
            Ok(Expr::Neg(Box::new(inner)))
        } else {
            self.parse_power(depth + 1)
        }
    }

    fn parse_power(&mut self, depth: usize) -> Result<Expr, SyntaxError> {
        self.guard(depth)?;
        let base = self.parse_atom(depth + 1)?;
        if !self.eat(TokenKind::Caret) {
            return Ok(base);
        }
        let tok_pos = self.next_pos();
        let tok = self
            .peek()
            .ok_or_else(|| err(tok_pos, "expected an exponent after '^'"))?
            .clone();
        if tok.kind != TokenKind::Number {
            return Err(err(
                tok.pos,
                "exponent must be a non-negative integer literal",
            ));
        }
        self.pos += 1;
        let value: f64 = tok
            .text
            .parse()
            .map_err(|_| err(tok.pos, format!("invalid number '{}'", tok.text)))?;
        if value.fract() != 0.0 || value < 0.0 || value > i32::MAX as f64 {
            return Err(err(
                tok.pos,
                "exponent must be a non-negative integer literal",
            ));
        }
        Ok(Expr::Pow(Box::new(base), value as u32))
    }

    fn parse_atom(&mut self, depth: usize) -> Result<Expr, SyntaxError> {
        self.guard(depth)?;
        let tok_pos = self.next_pos();
        let tok = match self.peek() {
            Some(t) => t.clone(),
            None => return Err(err(tok_pos, "expected a value")),
        };
        match tok.kind {
            TokenKind::Number => {
                self.pos += 1;
                let value: f64 = tok
                    .text
                    .parse()
                    .map_err(|_| err(tok.pos, format!("invalid number '{}'", tok.text)))?;
                Ok(Expr::Const(value))
            }
            TokenKind::Ident => {
                self.pos += 1;
                match tok.text.as_str() {
                    "x" => Ok(Expr::Var(Var::X)),
                    "y" => Ok(Expr::Var(Var::Y)),
                    other => Err(err(tok.pos, format!("unknown identifier '{other}'"))),
                }
            }
            TokenKind::LParen => {
                self.pos += 1;
                let inner = self.parse_expr(depth + 1)?;
                if self.eat(TokenKind::RParen) {
                    Ok(inner)
                } else {
                    Err(err(self.next_pos(), "expected ')'"))
                }
            }
            _ => Err(err(tok.pos, format!("unexpected '{}'", tok.text))),
        }
    }
}

/// Parses an expression in `x` and `y`.
pub fn parse(src: &str) -> Result<Expr, SyntaxError> {
    let tokens = lex(src)?;
    if tokens.is_empty() {
        return Err(err(0, "empty expression"));
    }
    let mut parser = Parser {
        tokens,
        pos: 0,
        end: src.len(),
    };
    let expr = parser.parse_expr(0)?;
    if let Some(tok) = parser.peek() {
        return Err(err(tok.pos, format!("unexpected trailing '{}'", tok.text)));
    }
    Ok(expr)
}

impl Expr {
    /// Evaluates at `(x, y)`. Division by zero and non-finite intermediates
    /// are reported as errors rather than propagated as infinities.
    pub fn eval2(&self, x: f64, y: f64) -> Result<f64, EvalError> {
        if !(x.is_finite() && y.is_finite()) {
            return Err(EvalError::NonFinite);
        }
        self.eval_node(x, y)
    }

    fn eval_node(&self, x: f64, y: f64) -> Result<f64, EvalError> {
        let value = match self {
            Expr::Const(v) => *v,
            Expr::Var(Var::X) => x,
            Expr::Var(Var::Y) => y,
            Expr::Neg(e) => -e.eval_node(x, y)?,
            Expr::Add(l, r) => l.eval_node(x, y)? + r.eval_node(x, y)?,
            Expr::Sub(l, r) => l.eval_node(x, y)? - r.eval_node(x, y)?,
            Expr::Mul(l, r) => l.eval_node(x, y)? * r.eval_node(x, y)?,
            Expr::Div(l, r) => {
                let denom = r.eval_node(x, y)?;
                if denom == 0.0 {
                    return Err(EvalError::DivisionByZero);
                }
                l.eval_node(x, y)? / denom
            }
            Expr::Pow(b, n) => b.eval_node(x, y)?.powi(*n as i32),
        };
        if value.is_finite() {
            Ok(value)
        } else {
            Err(EvalError::NonFinite)
        }
    }

    /// Central-difference gradient with per-axis step
    /// `h = eps^(1/3) * max(1, |coordinate|)`; error is O(h^2) for smooth
    /// functions, which is ample for comparing against a tangent plane.
    pub fn grad_fd(&self, p: Vector2) -> Result<Vector2, EvalError> {
        let cbrt_eps = f64::EPSILON.cbrt();
        let hx = cbrt_eps * p.x().abs().max(1.0);
        let hy = cbrt_eps * p.y().abs().max(1.0);
        let gx = (self.eval2(p.x() + hx, p.y())? - self.eval2(p.x() - hx, p.y())?) / (2.0 * hx);
        let gy = (self.eval2(p.x(), p.y() + hy)? - self.eval2(p.x(), p.y() - hy)?) / (2.0 * hy);
        Vector2::new(gx, gy).map_err(|_| EvalError::NonFinite)
    }

    /// Does the expression mention `y`?
    pub fn uses_y(&self) -> bool {
        match self {
            Expr::Const(_) => false,
            Expr::Var(v) => *v == Var::Y,
            Expr::Neg(e) => e.uses_y(),
            Expr::Add(l, r) | Expr::Sub(l, r) | Expr::Mul(l, r) | Expr::Div(l, r) => {
                l.uses_y() || r.uses_y()
            }
            Expr::Pow(b, _) => b.uses_y(),
        }
    }

    fn prec(&self) -> u8 {
        match self {
            Expr::Add(..) | Expr::Sub(..) => 1,
            Expr::Mul(..) | Expr::Div(..) => 2,
            Expr::Neg(_) => 3,
            Expr::Pow(..) => 4,
            Expr::Const(_) | Expr::Var(_) => 5,
        }
    }

    fn fmt_prec(&self, f: &mut fmt::Formatter<'_>, ctx: u8) -> fmt::Result {
        if self.prec() < ctx {
            write!(f, "(")?;
            self.fmt_prec(f, 0)?;
            return write!(f, ")");
        }
        match self {
            Expr::Const(v) => write!(f, "{v}"),
            Expr::Var(Var::X) => write!(f, "x"),
            Expr::Var(Var::Y) => write!(f, "y"),
            Expr::Neg(e) => {
                write!(f, "-")?;
                e.fmt_prec(f, 3)
            }
            Expr::Add(l, r) => {
                l.fmt_prec(f, 1)?;
                write!(f, " + ")?;
                r.fmt_prec(f, 2)
            }
            Expr::Sub(l, r) => {
                l.fmt_prec(f, 1)?;
                write!(f, " - ")?;
                r.fmt_prec(f, 2)
            }
            Expr::Mul(l, r) => {
                l.fmt_prec(f, 2)?;
                write!(f, " * ")?;
                r.fmt_prec(f, 3)
            }
            Expr::Div(l, r) => {
                l.fmt_prec(f, 2)?;
                write!(f, " / ")?;
                r.fmt_prec(f, 3)
            }
            Expr::Pow(b, n) => {
                b.fmt_prec(f, 5)?;
                write!(f, "^{n}")
            }
        }
    }
}

/// Prints with the fewest parentheses that re-parse to the same tree.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_prec(f, 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    fn b(e: Expr) -> Box<Expr> {
        Box::new(e)
    }

    #[test]
    fn parses_the_paraboloid() {
        let e = parse("x^2 + y^2").unwrap();
        assert_eq!(
            e,
            Expr::Add(
                b(Expr::Pow(b(Expr::Var(Var::X)), 2)),
                b(Expr::Pow(b(Expr::Var(Var::Y)), 2)),
            )
        );
    }

    #[test]
    fn parses_an_affine_function() {
        let e = parse("2*x + 3*y + 1").unwrap();
        assert_eq!(
            e,
            Expr::Add(
                b(Expr::Add(
                    b(Expr::Mul(b(Expr::Const(2.0)), b(Expr::Var(Var::X)))),
                    b(Expr::Mul(b(Expr::Const(3.0)), b(Expr::Var(Var::Y)))),
                )),
                b(Expr::Const(1.0)),
            )
        );
    }

    #[test]
    fn rejects_negative_exponent() {
        let e = parse("x^-1").unwrap_err();
        assert!(e.message.contains("non-negative integer"), "{e}");
        assert!(parse("x^2.5").is_err());
        assert!(parse("x^(2)").is_err());
    }

    #[test]
    fn rejects_malformed_input() {
        assert!(parse("").is_err());
        assert!(parse("   ").is_err());
        assert!(parse("(x").is_err());
        assert!(parse("x)").is_err());
        assert!(parse("x y").is_err());
        assert!(parse("x +").is_err());
        assert!(parse("x^").is_err());
        assert!(parse("x^2^3").is_err());
        assert!(parse("1e999").is_err());
        let e = parse("z + 1").unwrap_err();
        assert_eq!(e.pos, 0);
        assert!(e.message.contains("unknown identifier"));
        let e = parse("x $ y").unwrap_err();
        assert_eq!(e.pos, 2);
    }

    #[test]
    fn rejects_excessive_nesting() {
        let src = format!("{}x{}", "(".repeat(600), ")".repeat(600));
        let e = parse(&src).unwrap_err();
        assert!(e.message.contains("deep"), "{e}");
        // well under the limit is fine
        let src = format!("{}x{}", "(".repeat(100), ")".repeat(100));
        assert!(parse(&src).is_ok());
    }

    #[test]
    fn precedence_follows_convention() {
        let at = |src: &str, x: f64, y: f64| parse(src).unwrap().eval2(x, y).unwrap();
        assert_eq!(at("1 + 2 * 3^2", 0.0, 0.0), 19.0);
        assert_eq!(at("-2^2", 0.0, 0.0), -4.0);
        assert_eq!(at("(1 + 2) * 3", 0.0, 0.0), 9.0);
        assert_eq!(at("8 / 4 / 2", 0.0, 0.0), 1.0);
        assert_eq!(at("8 - 4 - 2", 0.0, 0.0), 2.0);
        assert_eq!(at("-x * y", 3.0, 5.0), -15.0);
        assert_eq!(at("x^0", 7.0, 0.0), 1.0);
        assert_eq!(at("2e2 + 1", 0.0, 0.0), 201.0);
    }

    #[test]
    fn eval_examples() {
        assert_eq!(parse("x^2 + y^2").unwrap().eval2(1.0, 2.0).unwrap(), 5.0);
        assert_eq!(parse("2*x + 3*y + 1").unwrap().eval2(0.0, 0.0).unwrap(), 1.0);
        assert_eq!(
            parse("x/y").unwrap().eval2(1.0, 0.0),
            Err(EvalError::DivisionByZero)
        );
        // overflow surfaces as an error, not an infinity
        assert_eq!(
            parse("x^300").unwrap().eval2(1e10, 0.0),
            Err(EvalError::NonFinite)
        );
    }

    #[test]
    fn token_positions_increase() {
        let tokens = lex("x^2 + y^2").unwrap();
        let positions: Vec<usize> = tokens.iter().map(|t| t.pos).collect();
        assert_eq!(positions, vec![0, 1, 2, 4, 6, 7, 8]);
    }

    #[test]
    fn gradient_examples() {
        let parabola = parse("x^2 + y^2").unwrap();
        let g = parabola.grad_fd(Vector2::new(0.0, 0.0).unwrap()).unwrap();
        assert!(g.norm() <= 1e-9, "{g}");
        let g = parabola.grad_fd(Vector2::new(1.0, 2.0).unwrap()).unwrap();
        assert_relative_eq!(g.x(), 2.0, max_relative = 1e-8);
        assert_relative_eq!(g.y(), 4.0, max_relative = 1e-8);

        let affine = parse("2*x + 3*y + 1").unwrap();
        for p in [(0.0, 0.0), (-3.0, 5.0), (0.25, -0.75)] {
            let g = affine.grad_fd(Vector2::new(p.0, p.1).unwrap()).unwrap();
            assert_relative_eq!(g.x(), 2.0, max_relative = 1e-9);
            assert_relative_eq!(g.y(), 3.0, max_relative = 1e-9);
        }
    }

    #[test]
    fn uses_y_detection() {
        assert!(!parse("x^2 + 1").unwrap().uses_y());
        assert!(parse("x + y").unwrap().uses_y());
    }

    // Analytic derivative, used only as a test oracle for grad_fd.
    fn d(e: &Expr, wrt: Var) -> Expr {
        match e {
            Expr::Const(_) => Expr::Const(0.0),
            Expr::Var(v) => Expr::Const(if *v == wrt { 1.0 } else { 0.0 }),
            Expr::Neg(inner) => Expr::Neg(b(d(inner, wrt))),
            Expr::Add(l, r) => Expr::Add(b(d(l, wrt)), b(d(r, wrt))),
            Expr::Sub(l, r) => Expr::Sub(b(d(l, wrt)), b(d(r, wrt))),
            Expr::Mul(l, r) => Expr::Add(
                b(Expr::Mul(b(d(l, wrt)), r.clone())),
                b(Expr::Mul(l.clone(), b(d(r, wrt)))),
            ),
            Expr::Div(l, r) => Expr::Div(
                b(Expr::Sub(
                    b(Expr::Mul(b(d(l, wrt)), r.clone())),
                    b(Expr::Mul(l.clone(), b(d(r, wrt)))),
                )),
                b(Expr::Pow(r.clone(), 2)),
            ),
            Expr::Pow(base, n) => {
                if *n == 0 {
                    Expr::Const(0.0)
                } else {
                    Expr::Mul(
                        b(Expr::Mul(
                            b(Expr::Const(*n as f64)),
                            b(Expr::Pow(base.clone(), n - 1)),
                        )),
                        b(d(base, wrt)),
                    )
                }
            }
        }
    }

    /// Polynomial-only trees (no division) of bounded depth.
    fn poly_ast(depth: u32) -> impl Strategy<Value = Expr> {
        let leaf = prop_oneof![
            (0.0..2.0f64).prop_map(Expr::Const),
            Just(Expr::Var(Var::X)),
            Just(Expr::Var(Var::Y)),
        ];
        leaf.prop_recursive(depth, 32, 2, |inner| {
            prop_oneof![
                (inner.clone(), inner.clone())
                    .prop_map(|(l, r)| Expr::Add(Box::new(l), Box::new(r))),
                (inner.clone(), inner.clone())
                    .prop_map(|(l, r)| Expr::Sub(Box::new(l), Box::new(r))),
                (inner.clone(), inner.clone())
                    .prop_map(|(l, r)| Expr::Mul(Box::new(l), Box::new(r))),
                inner.clone().prop_map(|e| Expr::Neg(Box::new(e))),
                (inner, 0u32..4).prop_map(|(e, n)| Expr::Pow(Box::new(e), n)),
            ]
        })
    }

    /// Arbitrary trees including division, for the print/parse round-trip.
    fn any_ast() -> impl Strategy<Value = Expr> {
        let leaf = prop_oneof![
            (0.0..10.0f64).prop_map(Expr::Const),
            Just(Expr::Var(Var::X)),
            Just(Expr::Var(Var::Y)),
        ];
        leaf.prop_recursive(6, 64, 2, |inner| {
            prop_oneof![
                (inner.clone(), inner.clone())
                    .prop_map(|(l, r)| Expr::Add(Box::new(l), Box::new(r))),
                (inner.clone(), inner.clone())
                    .prop_map(|(l, r)| Expr::Sub(Box::new(l), Box::new(r))),
                (inner.clone(), inner.clone())
                    .prop_map(|(l, r)| Expr::Mul(Box::new(l), Box::new(r))),
                (inner.clone(), inner.clone())
                    .prop_map(|(l, r)| Expr::Div(Box::new(l), Box::new(r))),
                inner.clone().prop_map(|e| Expr::Neg(Box::new(e))),
                (inner, 0u32..6).prop_map(|(e, n)| Expr::Pow(Box::new(e), n)),
            ]
        })
    }

    proptest! {
        #[test]
        fn print_parse_roundtrip(ast in any_ast()) {
            let printed = ast.to_string();
            let reparsed = parse(&printed)
                .unwrap_or_else(|e| panic!("failed to reparse '{printed}': {e}"));
            prop_assert_eq!(&reparsed, &ast, "printed as '{}'", printed);
            // value preserved exactly as well
            prop_assert_eq!(reparsed.eval2(1.3, -0.7), ast.eval2(1.3, -0.7));
        }

        #[test]
        fn gradient_matches_analytic_derivative(ast in poly_ast(4), x in -1.0..1.0f64, y in -1.0..1.0f64) {
            let p = Vector2::new(x, y).unwrap();
            let gx = d(&ast, Var::X).eval2(x, y).unwrap();
            let gy = d(&ast, Var::Y).eval2(x, y).unwrap();
            let g = ast.grad_fd(p).unwrap();
            assert_relative_eq!(g.x(), gx, max_relative = 1e-6, epsilon = 1e-6);
            assert_relative_eq!(g.y(), gy, max_relative = 1e-6, epsilon = 1e-6);
        }
    }
}

//! Surface syntax for tropical expressions.
//!
//! `+`, `*`, `^` and `/` denote the *tropical* operations: `+` is max, `*`
//! is ordinary addition, `^` repeats `*`, and `/` forms a fraction in
//! Q_max(T). Grammar (one optional fraction bar per parenthesization
//! level):
//!
//! ```text
//! expr   := sum ( '/' sum )?
//! sum    := term ( '+' term )*
//! term   := factor ( '*' factor )*
//! factor := atom ( '^' nat )?
//! atom   := scalar | 'T' | '(' expr ')'
//! scalar := '-inf' | [+-]? digits ( '/' digits )?
//! ```
//!
//! A rational literal binds tighter than the fraction bar but only when
//! written without spaces: `3/2` is the scalar three-halves, while
//! `3 / 2` and `(3)/(2)` divide one constant polynomial by another.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::poly::{poly_add, poly_mul, TropPoly};
use crate::ratfunc::{rat_add, rat_inv, rat_mul, TropRational};
use crate::scalar::{Rat, TropScalar};

/// Largest exponent accepted by `^`.
pub const MAX_EXPONENT: u64 = 10_000;

/// Abstract syntax of a tropical expression.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Scalar(TropScalar),
    /// The variable `T`.
    Var,
    Add(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u64),
    Div(Box<Expr>, Box<Expr>),
}

/// Result of evaluating an expression: a raw polynomial, or a normalized
/// fraction once a `/` is involved.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PolyValue {
    Poly(TropPoly),
    Frac(TropRational),
}

impl PolyValue {
    /// Push into Q_max(T) via the localization map when necessary.
    pub fn to_frac(&self) -> TropRational {
        match self {
            PolyValue::Poly(p) => TropRational::from_poly(p),
            PolyValue::Frac(r) => r.clone(),
        }
    }

    /// The underlying polynomial, if no genuine denominator is present:
    /// either a raw polynomial or a fraction whose denominator normalized
    /// to the unit.
    pub fn as_poly(&self) -> Option<TropPoly> {
        match self {
            PolyValue::Poly(p) => Some(p.clone()),
            PolyValue::Frac(r) => {
                r.den().as_poly().is_one().then(|| r.num().as_poly())
            }
        }
    }
}

impl fmt::Display for PolyValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolyValue::Poly(p) => write!(f, "{p}"),
            PolyValue::Frac(r) => write!(f, "{r}"),
        }
    }
}

// ---------------------------------------------------------------------------
// Lexer
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Scalar(TropScalar),
    VarT,
    Plus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Scalar(s) => write!(f, "scalar {s}"),
            Tok::VarT => write!(f, "'T'"),
            Tok::Plus => write!(f, "'+'"),
            Tok::Star => write!(f, "'*'"),
            Tok::Slash => write!(f, "'/'"),
            Tok::Caret => write!(f, "'^'"),
            Tok::LParen => write!(f, "'('"),
            Tok::RParen => write!(f, "')'"),
        }
    }
}

#[derive(Debug, Clone)]
struct Spanned {
    tok: Tok,
    line: usize,
    col: usize,
}

struct Lexer<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    line: usize,
    col: usize,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer {
            chars: src.chars().peekable(),
            line: 1,
            col: 1,
        }
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    fn digits(&mut self, first: char) -> String {
        let mut s = String::new();
        s.push(first);
        while self.chars.peek().is_some_and(|c| c.is_ascii_digit()) {
            s.push(self.bump().unwrap());
        }
        s
    }

    /// Scan a numeric literal starting with `first` (a digit). The fold:
    /// if the characters `/<digit>` follow immediately, they belong to the
    /// literal as its denominator.
    fn number(&mut self, first: char, negative: bool, line: usize, col: usize) -> Result<Spanned> {
        let numer = self.digits(first);
        let mut denom: Option<String> = None;
        if self.chars.peek() == Some(&'/') {
            // Look one past the slash without consuming: clone is cheap here.
            let mut ahead = self.chars.clone();
            ahead.next();
            if ahead.peek().is_some_and(|c| c.is_ascii_digit()) {
                self.bump();
                let d0 = self.bump().unwrap();
                denom = Some(self.digits(d0));
            }
        }
        let mut numer: BigInt = numer.parse().expect("scanned digits");
        if negative {
            numer = -numer;
        }
        let denom: BigInt = match denom {
            None => BigInt::one(),
            Some(d) => {
                let d: BigInt = d.parse().expect("scanned digits");
                if d.is_zero() {
                    return Err(Error::syntax(line, col, "zero denominator in rational literal"));
                }
                d
            }
        };
        Ok(Spanned {
            tok: Tok::Scalar(TropScalar::Finite(Rat::new(numer, denom))),
            line,
            col,
        })
    }

    fn next_token(&mut self) -> Result<Option<Spanned>> {
        while self.chars.peek().is_some_and(|c| c.is_whitespace()) {
            self.bump();
        }
        let (line, col) = (self.line, self.col);
        let Some(c) = self.bump() else {
            return Ok(None);
        };
        let simple = |tok| Ok(Some(Spanned { tok, line, col }));
        match c {
            '+' => simple(Tok::Plus),
            '*' => simple(Tok::Star),
            '/' => simple(Tok::Slash),
            '^' => simple(Tok::Caret),
            '(' => simple(Tok::LParen),
            ')' => simple(Tok::RParen),
            'T' => simple(Tok::VarT),
            '-' => match self.chars.peek() {
                Some('i') => {
                    for expect in ['i', 'n', 'f'] {
                        if self.bump() != Some(expect) {
                            return Err(Error::syntax(line, col, "expected '-inf'"));
                        }
                    }
                    simple(Tok::Scalar(TropScalar::Bottom))
                }
                Some(d) if d.is_ascii_digit() => {
                    let d = self.bump().unwrap();
                    Ok(Some(self.number(d, true, line, col)?))
                }
                _ => Err(Error::syntax(
                    line,
                    col,
                    "unexpected '-' (tropical expressions have no subtraction)",
                )),
            },
            d if d.is_ascii_digit() => Ok(Some(self.number(d, false, line, col)?)),
            other => Err(Error::syntax(
                line,
                col,
                format!("unexpected character {other:?}"),
            )),
        }
    }
}

fn lex(src: &str) -> Result<Vec<Spanned>> {
    let mut lexer = Lexer::new(src);
    let mut out = Vec::new();
    while let Some(t) = lexer.next_token()? {
        out.push(t);
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
    end: (usize, usize),
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|s| &s.tok)
    }

    fn here(&self) -> (usize, usize) {
        self.toks
            .get(self.pos)
            .map_or(self.end, |s| (s.line, s.col))
    }

    fn bump(&mut self) -> Option<Spanned> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += t.is_some() as usize;
        t
    }

    fn error(&self, expected: &str) -> Error {
        let (line, col) = self.here();
        let found = match self.toks.get(self.pos) {
            Some(s) => format!("{}", s.tok),
            None => "end of input".into(),
        };
        Error::syntax(line, col, format!("expected {expected}, found {found}"))
    }

    fn expect(&mut self, tok: Tok, expected: &str) -> Result<()> {
        if self.peek() == Some(&tok) {
            self.bump();
            Ok(())
        } else {
            Err(self.error(expected))
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let lhs = self.sum()?;
        if self.peek() == Some(&Tok::Slash) {
            self.bump();
            let rhs = self.sum()?;
            return Ok(Expr::Div(Box::new(lhs), Box::new(rhs)));
        }
        Ok(lhs)
    }

    fn sum(&mut self) -> Result<Expr> {
        let mut acc = self.term()?;
        while self.peek() == Some(&Tok::Plus) {
            self.bump();
            let rhs = self.term()?;
            acc = Expr::Add(Box::new(acc), Box::new(rhs));
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Expr> {
        let mut acc = self.factor()?;
        while self.peek() == Some(&Tok::Star) {
            self.bump();
            let rhs = self.factor()?;
            acc = Expr::Mul(Box::new(acc), Box::new(rhs));
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.bump();
        let (line, col) = self.here();
        let Some(Tok::Scalar(s)) = self.peek() else {
            return Err(self.error("a natural number exponent"));
        };
        let nat_err = || Error::syntax(line, col, "exponent must be a natural number");
        let r = s.as_rat().ok_or_else(nat_err)?;
        if !r.is_integer() || r.is_negative() {
            return Err(nat_err());
        }
        let n = r.to_integer().to_u64().unwrap_or(u64::MAX);
        self.bump();
        if n > MAX_EXPONENT {
            return Err(Error::ExponentTooLarge(n, MAX_EXPONENT));
        }
        Ok(Expr::Pow(Box::new(base), n))
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.peek() {
            Some(Tok::Scalar(_)) => {
                let Some(Spanned { tok: Tok::Scalar(s), .. }) = self.bump() else {
                    unreachable!()
                };
                Ok(Expr::Scalar(s))
            }
            Some(Tok::VarT) => {
                self.bump();
                Ok(Expr::Var)
            }
            Some(Tok::LParen) => {
                self.bump();
                let inner = self.expr()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(inner)
            }
            _ => Err(self.error("a scalar, 'T', or '('")),
        }
    }
}

/// Parse an expression; errors carry 1-based line/column positions.
pub fn parse_expr(src: &str) -> Result<Expr> {
    let toks = lex(src)?;
    let end = toks
        .last()
        .map_or((1, 1), |s| (s.line, s.col + 1));
    let mut p = Parser { toks, pos: 0, end };
    let e = p.expr()?;
    if p.peek().is_some() {
        return Err(p.error("end of input"));
    }
    Ok(e)
}

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

fn value_add(a: &PolyValue, b: &PolyValue) -> PolyValue {
    match (a, b) {
        (PolyValue::Poly(p), PolyValue::Poly(q)) => PolyValue::Poly(poly_add(p, q)),
        _ => PolyValue::Frac(rat_add(&a.to_frac(), &b.to_frac())),
    }
}

fn value_mul(a: &PolyValue, b: &PolyValue) -> PolyValue {
    match (a, b) {
        (PolyValue::Poly(p), PolyValue::Poly(q)) => PolyValue::Poly(poly_mul(p, q)),
        _ => PolyValue::Frac(rat_mul(&a.to_frac(), &b.to_frac())),
    }
}

fn value_pow(base: &PolyValue, n: u64) -> PolyValue {
    // Binary exponentiation; the empty product is the unit polynomial.
    let mut acc = PolyValue::Poly(TropPoly::one());
    let mut sq = base.clone();
    let mut n = n;
    while n > 0 {
        if n & 1 == 1 {
            acc = value_mul(&acc, &sq);
        }
        n >>= 1;
        if n > 0 {
            sq = value_mul(&sq, &sq);
        }
    }
    acc
}

/// Evaluate an expression to a raw polynomial or a normalized fraction.
pub fn eval_expr(e: &Expr) -> Result<PolyValue> {
    match e {
        Expr::Scalar(s) => Ok(PolyValue::Poly(TropPoly::constant(s.clone()))),
        Expr::Var => Ok(PolyValue::Poly(TropPoly::t())),
        Expr::Add(a, b) => Ok(value_add(&eval_expr(a)?, &eval_expr(b)?)),
        Expr::Mul(a, b) => Ok(value_mul(&eval_expr(a)?, &eval_expr(b)?)),
        Expr::Pow(b, n) => Ok(value_pow(&eval_expr(b)?, *n)),
        Expr::Div(a, b) => {
            let den = eval_expr(b)?.to_frac();
            if den.is_zero_frac() {
                return Err(Error::ZeroDenominator);
            }
            let num = eval_expr(a)?.to_frac();
            Ok(PolyValue::Frac(rat_mul(&num, &rat_inv(&den)?)))
        }
    }
}

/// Parse and evaluate in one step.
pub fn eval_str(src: &str) -> Result<PolyValue> {
    eval_expr(&parse_expr(src)?)
}

// ---------------------------------------------------------------------------
// Printing
// ---------------------------------------------------------------------------

impl Expr {
    fn fmt_inner(&self, f: &mut fmt::Formatter<'_>, root: bool) -> fmt::Result {
        // Wrap a child in parens when its surface form would re-associate:
        // fractions anywhere below the root, sums under products, anything
        // composite under '^', and sign-leading literals in operand position.
        fn paren(f: &mut fmt::Formatter<'_>, e: &Expr, wrap: bool) -> fmt::Result {
            if wrap {
                write!(f, "(")?;
                e.fmt_inner(f, false)?;
                write!(f, ")")
            } else {
                e.fmt_inner(f, false)
            }
        }
        fn leads_minus(e: &Expr) -> bool {
            matches!(e, Expr::Scalar(s) if s.to_string().starts_with('-'))
        }
        match self {
            Expr::Scalar(s) => {
                if !root && s.to_string().starts_with('-') {
                    write!(f, "({s})")
                } else {
                    write!(f, "{s}")
                }
            }
            Expr::Var => write!(f, "T"),
            Expr::Add(a, b) => {
                paren(f, a, matches!(**a, Expr::Div(..)))?;
                write!(f, "+")?;
                paren(f, b, matches!(**b, Expr::Div(..)) || leads_minus(b))
            }
            Expr::Mul(a, b) => {
                let needs =
                    |e: &Expr| matches!(e, Expr::Add(..) | Expr::Div(..)) || leads_minus(e);
                paren(f, a, needs(a))?;
                write!(f, "*")?;
                paren(f, b, needs(b))
            }
            Expr::Pow(b, n) => {
                let composite = matches!(
                    **b,
                    Expr::Add(..) | Expr::Mul(..) | Expr::Div(..) | Expr::Pow(..)
                );
                paren(f, b, composite || leads_minus(b))?;
                write!(f, "^{n}")
            }
            Expr::Div(a, b) => {
                if !root {
                    write!(f, "(")?;
                }
                write!(f, "(")?;
                a.fmt_inner(f, true)?;
                write!(f, ")/(")?;
                b.fmt_inner(f, true)?;
                write!(f, ")")?;
                if !root {
                    write!(f, ")")?;
                }
                Ok(())
            }
        }
    }
}

impl fmt::Display for Expr {
    /// Spaceless form that re-parses to the same tree.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_inner(f, true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{canonicalize, func_equiv};

    fn poly_of(src: &str) -> TropPoly {
        match eval_str(src).unwrap() {
            PolyValue::Poly(p) => p,
            PolyValue::Frac(r) => panic!("expected polynomial, got {r}"),
        }
    }

    fn frac_of(src: &str) -> TropRational {
        match eval_str(src).unwrap() {
            PolyValue::Frac(r) => r,
            PolyValue::Poly(p) => panic!("expected fraction, got {p}"),
        }
    }

    #[test]
    fn parses_the_worked_example() {
        let p = poly_of("T^2+3/2*T+3");
        assert_eq!(
            p.coeffs(),
            &[TropScalar::int(3), TropScalar::ratio(3, 2), TropScalar::int(0)]
        );
        let q = poly_of("T^2+T+3");
        assert_eq!(
            q.coeffs(),
            &[TropScalar::int(3), TropScalar::int(0), TropScalar::int(0)]
        );
    }

    #[test]
    fn literal_fold_versus_fraction_bar() {
        // Adjacent: a scalar literal.
        assert_eq!(poly_of("3/2").coeffs(), &[TropScalar::ratio(3, 2)]);
        // Spaced or parenthesized: tropical division (3 ⊙ 2⁻¹ = 1).
        assert_eq!(frac_of("3 / 2").num().to_string(), "1");
        assert_eq!(frac_of("(3)/(2)").num().to_string(), "1");
        assert_eq!(frac_of("(3)/(2)").den().to_string(), "0");
        // A slash after ')' or 'T' is always division.
        assert_eq!(frac_of("T/2").den().to_string(), "0");
        assert_eq!(frac_of("T/2").num().to_string(), "-2*T");
    }

    #[test]
    fn division_normalizes() {
        let r = frac_of("(T^2+3/2*T+3)/(T+3/2)");
        assert_eq!(r.num().to_string(), "T+3/2");
        assert_eq!(r.den().to_string(), "0");

        let s = frac_of("T/T^2");
        assert_eq!(s.num().to_string(), "0");
        assert_eq!(s.den().to_string(), "T");

        // One fraction bar per level; parenthesized fractions nest.
        let nested = frac_of("((T+1)/(T))*3");
        assert_eq!(nested.num().to_string(), "3*T+4");
        assert_eq!(nested.den().to_string(), "T");
    }

    #[test]
    fn zero_denominator_is_a_domain_error() {
        assert_eq!(eval_str("(T)/(-inf)"), Err(Error::ZeroDenominator));
        assert_eq!(eval_str("T/(-inf+(-inf))"), Err(Error::ZeroDenominator));
    }

    #[test]
    fn powers_expand_by_repeated_product() {
        let cube = poly_of("(T+1)^3");
        let chain = poly_of("(T+1)*(T+1)*(T+1)");
        assert_eq!(canonicalize(&cube), canonicalize(&chain));
        assert_eq!(poly_of("T^0").coeffs(), &[TropScalar::int(0)]);
        assert_eq!(poly_of("(-inf)^0").coeffs(), &[TropScalar::int(0)]);
        assert!(func_equiv(&poly_of("2^3"), &poly_of("6")));
        // Fractions power through their normal form: ((T+1)/T)^2.
        let sq = frac_of("((T+1)/(T))^2");
        assert_eq!(sq.den().to_string(), "T^2");
    }

    #[test]
    fn exponent_guardrails() {
        assert_eq!(
            eval_str(&format!("T^{}", MAX_EXPONENT + 1)),
            Err(Error::ExponentTooLarge(MAX_EXPONENT + 1, MAX_EXPONENT))
        );
        assert!(matches!(eval_str("T^3/2"), Err(Error::Syntax { .. })));
        assert!(matches!(eval_str("T^-2"), Err(Error::Syntax { .. })));
        assert!(matches!(eval_str("T^T"), Err(Error::Syntax { .. })));
        assert!(matches!(eval_str("T^(2)"), Err(Error::Syntax { .. })));
        // Under the cap everything is fine (and fast).
        assert_eq!(poly_of("T^10000").coeffs().len(), 10_001);
    }

    #[test]
    fn syntax_errors_carry_positions() {
        match parse_expr("T+*2") {
            Err(Error::Syntax { line, col, .. }) => assert_eq!((line, col), (1, 3)),
            other => panic!("expected syntax error, got {other:?}"),
        }
        match parse_expr("(T+1") {
            Err(Error::Syntax { line, col, .. }) => assert_eq!((line, col), (1, 5)),
            other => panic!("expected syntax error, got {other:?}"),
        }
        match parse_expr("T~2") {
            Err(Error::Syntax { col, .. }) => assert_eq!(col, 2),
            other => panic!("expected syntax error, got {other:?}"),
        }
        assert!(matches!(parse_expr(""), Err(Error::Syntax { .. })));
        assert!(matches!(parse_expr("T T"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_expr("2-3"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_expr("1.5"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_expr("3/0"), Err(Error::Syntax { .. })));
        // One fraction bar per level: the second slash after a 'T' operand
        // cannot fold into a literal and is rejected.
        assert!(matches!(parse_expr("T/T/T"), Err(Error::Syntax { .. })));
        // ...whereas "T/2/3" is fine: 2/3 folds into a single scalar.
        assert_eq!(frac_of("T/2/3").num().to_string(), "-2/3*T");
    }

    #[test]
    fn negative_literals_and_bottom() {
        assert_eq!(poly_of("-inf").coeffs(), &[] as &[TropScalar]);
        assert_eq!(poly_of("-3/2").coeffs(), &[TropScalar::ratio(-3, 2)]);
        assert_eq!(
            poly_of("T+(-5)").coeffs(),
            &[TropScalar::int(-5), TropScalar::int(0)]
        );
        // 3/-2 is division (the fold needs a digit after the slash).
        assert_eq!(frac_of("3/-2").num().to_string(), "5");
    }

    #[test]
    fn printing_round_trips() {
        let samples = [
            "T^2+3/2*T+3",
            "(T+1)*(T+2)",
            "((T+1)/(T))*3",
            "(T^2+1)/(T+(-1/2))",
            "2*T^3+(-5)",
            "(T+1)^4",
            "-inf",
            "((T)/(T+1))+((2)/(T))",
        ];
        for src in samples {
            let e = parse_expr(src).unwrap();
            let printed = e.to_string();
            let reparsed = parse_expr(&printed)
                .unwrap_or_else(|err| panic!("{printed}: {err}"));
            assert_eq!(reparsed, e, "print/parse mismatch for {src} -> {printed}");
        }
    }
}

//! Exact bivariate polynomials and rational functions in `p` and `q`,
//! plus a parser for charge formulas written the way the reference tables
//! print them: implicit multiplication (`2(12p-7q)(7p-4q)`, `pq`), division
//! by monomials (`600p/q`, `19152/p`), and leading minus signs.
//!
//! Comparison is by polynomial identity after clearing denominators, never
//! by string equality.

use crate::rat::{rat, rzero};
use crate::Error;
use num_rational::BigRational as Rat;
use num_traits::Zero;
use std::collections::BTreeMap;
use std::fmt;

/// Polynomial in `p` and `q`: coefficient map keyed by `(deg_p, deg_q)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly(BTreeMap<(u32, u32), Rat>);

impl Poly {
    pub fn zero() -> Poly {
        Poly(BTreeMap::new())
    }

    pub fn constant(c: Rat) -> Poly {
        let mut m = BTreeMap::new();
        if !c.is_zero() {
            m.insert((0, 0), c);
        }
        Poly(m)
    }

    pub fn var_p() -> Poly {
        Poly(BTreeMap::from([((1, 0), rat(1))]))
    }

    pub fn var_q() -> Poly {
        Poly(BTreeMap::from([((0, 1), rat(1))]))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coeffs(&self) -> &BTreeMap<(u32, u32), Rat> {
        &self.0
    }

    fn insert_term(&mut self, key: (u32, u32), c: Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.0.entry(key).or_insert_with(rzero);
        *entry += c;
        if entry.is_zero() {
            self.0.remove(&key);
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (k, c) in &other.0 {
            out.insert_term(*k, c.clone());
        }
        out
    }

    pub fn neg(&self) -> Poly {
        Poly(self.0.iter().map(|(k, c)| (*k, -c.clone())).collect())
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero();
        for ((i1, j1), c1) in &self.0 {
            for ((i2, j2), c2) in &other.0 {
                out.insert_term((i1 + i2, j1 + j2), c1 * c2);
            }
        }
        out
    }

    pub fn eval(&self, p: &Rat, q: &Rat) -> Rat {
        let mut acc = rzero();
        for ((i, j), c) in &self.0 {
            let mut term = c.clone();
            for _ in 0..*i {
                term *= p;
            }
            for _ in 0..*j {
                term *= q;
            }
            acc += term;
        }
        acc
    }

    /// Substitute a numeric value for `q`, leaving a polynomial in `p`.
    pub fn subst_q(&self, q: &Rat) -> Poly {
        let mut out = Poly::zero();
        for ((i, j), c) in &self.0 {
            let mut term = c.clone();
            for _ in 0..*j {
                term *= q;
            }
            out.insert_term((*i, 0), term);
        }
        out
    }

    pub fn contains_q(&self) -> bool {
        self.0.keys().any(|(_, j)| *j > 0)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        // Highest degrees first reads naturally.
        for ((i, j), c) in self.0.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{c}")?;
            if *i > 0 {
                write!(f, "*p^{i}")?;
            }
            if *j > 0 {
                write!(f, "*q^{j}")?;
            }
        }
        Ok(())
    }
}

/// Quotient of two polynomials.  Not kept in lowest terms; all comparisons
/// cross-multiply.
#[derive(Clone, Debug)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn new(num: Poly, den: Poly) -> RatFunc {
        assert!(!den.is_zero(), "zero denominator");
        RatFunc { num, den }
    }

    pub fn from_poly(p: Poly) -> RatFunc {
        RatFunc::new(p, Poly::constant(rat(1)))
    }

    pub fn constant(c: Rat) -> RatFunc {
        RatFunc::from_poly(Poly::constant(c))
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn add(&self, other: &RatFunc) -> RatFunc {
        RatFunc::new(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn sub(&self, other: &RatFunc) -> RatFunc {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc::new(self.num.neg(), self.den.clone())
    }

    pub fn mul(&self, other: &RatFunc) -> RatFunc {
        RatFunc::new(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    pub fn div(&self, other: &RatFunc) -> Result<RatFunc, Error> {
        if other.num.is_zero() {
            return Err(Error::Parse("division by zero".into()));
        }
        Ok(RatFunc::new(
            self.num.mul(&other.den),
            self.den.mul(&other.num),
        ))
    }

    /// Identity of rational functions: `n₁d₂ = n₂d₁` as polynomials.
    pub fn equivalent(&self, other: &RatFunc) -> bool {
        self.num.mul(&other.den).sub(&other.num.mul(&self.den)).is_zero()
    }

    /// Evaluate; `None` when the written denominator vanishes at the point.
    pub fn eval(&self, p: &Rat, q: &Rat) -> Option<Rat> {
        let d = self.den.eval(p, q);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(p, q) / d)
    }

    /// Substitute a numeric value for `q`.
    pub fn subst_q(&self, q: &Rat) -> Result<RatFunc, Error> {
        let den = self.den.subst_q(q);
        if den.is_zero() {
            return Err(Error::Parse(format!(
                "denominator vanishes identically at q = {q}"
            )));
        }
        Ok(RatFunc::new(self.num.subst_q(q), den))
    }

    pub fn contains_q(&self) -> bool {
        self.num.contains_q() || self.den.contains_q()
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] / [{}]", self.num, self.den)
    }
}

/// Parse a charge formula.
///
/// Grammar (whitespace ignored):
/// ```text
/// expr   := ['-'] term { ('+' | '-') term }
/// term   := factor { '/' factor | factor }     -- adjacency multiplies
/// factor := integer | 'p' | 'q' | '(' expr ')'
/// ```
/// Multiplication and division associate left with equal precedence, so
/// `600p/q` is `(600·p)/q` and a leading minus negates the whole term, so
/// `-(A)/(B)` is `-(A/B)`.
pub fn parse_formula(input: &str) -> Result<RatFunc, Error> {
    let chars: Vec<char> = input.chars().filter(|c| !c.is_whitespace()).collect();
    let mut parser = Parser { chars, pos: 0 };
    let expr = parser.expr()?;
    if parser.pos != parser.chars.len() {
        return Err(parser.error("trailing input"));
    }
    Ok(expr)
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn error(&self, what: &str) -> Error {
        let rest: String = self.chars[self.pos.min(self.chars.len())..].iter().collect();
        Error::Parse(format!("{what} at `{rest}`"))
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn expr(&mut self) -> Result<RatFunc, Error> {
        let mut acc = if self.peek() == Some('-') {
            self.bump();
            self.term()?.neg()
        } else {
            self.term()?
        };
        while let Some(op) = self.peek() {
            match op {
                '+' => {
                    self.bump();
                    acc = acc.add(&self.term()?);
                }
                '-' => {
                    self.bump();
                    acc = acc.sub(&self.term()?);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<RatFunc, Error> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some('/') => {
                    self.bump();
                    acc = acc.div(&self.factor()?)?;
                }
                Some(c) if c == '(' || c == 'p' || c == 'q' || c.is_ascii_digit() => {
                    acc = acc.mul(&self.factor()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<RatFunc, Error> {
        match self.peek() {
            Some('(') => {
                self.bump();
                let inner = self.expr()?;
                if self.bump() != Some(')') {
                    return Err(self.error("expected `)`"));
                }
                Ok(inner)
            }
            Some('p') => {
                self.bump();
                Ok(RatFunc::from_poly(Poly::var_p()))
            }
            Some('q') => {
                self.bump();
                Ok(RatFunc::from_poly(Poly::var_q()))
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while matches!(self.peek(), Some(d) if d.is_ascii_digit()) {
                    self.bump();
                }
                let text: String = self.chars[start..self.pos].iter().collect();
                let n: i64 = text
                    .parse()
                    .map_err(|_| Error::Parse(format!("integer out of range: {text}")))?;
                Ok(RatFunc::constant(rat(n)))
            }
            _ => Err(self.error("expected a factor")),
        }
    }
}

/// Convenience: `[A·pq + B·q² + C·p²] / (pq)` from the charge coefficients
/// `c(κ) = A + B/κ + C·κ` with `κ = p/(s·q)` for a denominator stretch `s`
/// (1 for principal levels, `r∨` for coprincipal ones).
pub fn charge_ratfunc(a: &Rat, b: &Rat, c: &Rat, stretch: i64) -> RatFunc {
    let p = RatFunc::from_poly(Poly::var_p());
    let sq = RatFunc::from_poly(Poly::var_q()).mul(&RatFunc::constant(rat(stretch)));
    let kappa = p.div(&sq).expect("sq is not the zero function");
    RatFunc::constant(a.clone())
        .add(
            &RatFunc::constant(b.clone())
                .div(&kappa)
                .expect("kappa is not the zero function"),
        )
        .add(&RatFunc::constant(c.clone()).mul(&kappa))
}

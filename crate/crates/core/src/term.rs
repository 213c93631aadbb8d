//! Bracket terms over generators `g1..gd`.
//!
//! ```text
//! term     := atom | term "+" atom | term "-" atom
//! atom     := factor | rational "*" atom
//! factor   := gen | "[" term "," term "]" | "(" term ")"
//! gen      := "g" digits
//! rational := integer | integer "/" positive-integer
//! ```
//!
//! Whitespace is ignored. An integer may carry a leading `-`, so a scaled
//! atom can be negative. Error positions are 1-based character offsets.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{format_rational, Rational};
use crate::lincomb::LinComb;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BracketTerm {
    Generator(usize),
    Bracket(Box<BracketTerm>, Box<BracketTerm>),
    Scale(Rational, Box<BracketTerm>),
    Sum(Vec<BracketTerm>),
    Diff(Box<BracketTerm>, Box<BracketTerm>),
}

impl BracketTerm {
    pub fn gen(index: usize) -> Self {
        BracketTerm::Generator(index)
    }

    pub fn bracket(left: BracketTerm, right: BracketTerm) -> Self {
        BracketTerm::Bracket(Box::new(left), Box::new(right))
    }

    pub fn scale(c: Rational, term: BracketTerm) -> Self {
        BracketTerm::Scale(c, Box::new(term))
    }

    pub fn diff(left: BracketTerm, right: BracketTerm) -> Self {
        BracketTerm::Diff(Box::new(left), Box::new(right))
    }

    /// Largest generator index referenced.
    pub fn max_generator(&self) -> usize {
        match self {
            BracketTerm::Generator(i) => *i,
            BracketTerm::Bracket(l, r) | BracketTerm::Diff(l, r) => {
                l.max_generator().max(r.max_generator())
            }
            BracketTerm::Scale(_, t) => t.max_generator(),
            BracketTerm::Sum(ts) => ts.iter().map(Self::max_generator).max().unwrap_or(0),
        }
    }

    /// Homomorphic evaluation in `algebra`.
    pub fn evaluate<A: TermAlgebra>(&self, algebra: &A) -> Result<LinComb<A::Key>> {
        Ok(match self {
            BracketTerm::Generator(i) => algebra.generator(*i)?,
            BracketTerm::Bracket(l, r) => {
                algebra.bracket(&l.evaluate(algebra)?, &r.evaluate(algebra)?)?
            }
            BracketTerm::Scale(c, t) => t.evaluate(algebra)?.scale(c),
            BracketTerm::Sum(ts) => {
                let mut acc = LinComb::zero();
                for t in ts {
                    acc += &t.evaluate(algebra)?;
                }
                acc
            }
            BracketTerm::Diff(l, r) => l.evaluate(algebra)? - r.evaluate(algebra)?,
        })
    }
}

/// An algebra in which bracket terms can be evaluated.
pub trait TermAlgebra {
    type Key: Ord + Clone;

    /// The basis element for generator `g{index}`.
    fn generator(&self, index: usize) -> Result<LinComb<Self::Key>>;

    fn bracket(&self, x: &LinComb<Self::Key>, y: &LinComb<Self::Key>)
        -> Result<LinComb<Self::Key>>;
}

struct AtomForm<'a>(&'a BracketTerm);

impl fmt::Display for AtomForm<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            BracketTerm::Sum(_) | BracketTerm::Diff(..) => write!(f, "({})", self.0),
            other => write!(f, "{other}"),
        }
    }
}

impl fmt::Display for BracketTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BracketTerm::Generator(i) => write!(f, "g{i}"),
            BracketTerm::Bracket(l, r) => write!(f, "[{l}, {r}]"),
            BracketTerm::Scale(c, t) => write!(f, "{} * {}", format_rational(c), AtomForm(t)),
            BracketTerm::Sum(ts) => {
                for (i, t) in ts.iter().enumerate() {
                    if i == 0 {
                        match t {
                            BracketTerm::Sum(_) => write!(f, "{}", AtomForm(t))?,
                            _ => write!(f, "{t}")?,
                        }
                    } else {
                        write!(f, " + {}", AtomForm(t))?;
                    }
                }
                Ok(())
            }
            BracketTerm::Diff(l, r) => write!(f, "{l} - {}", AtomForm(r)),
        }
    }
}

pub fn parse_term(input: &str) -> Result<BracketTerm> {
    let mut p = Parser {
        chars: input.chars().collect(),
        pos: 0,
    };
    let t = p.term()?;
    p.skip_ws();
    if p.pos < p.chars.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(t)
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn error(&self, message: &str) -> Error {
        let found = match self.chars.get(self.pos) {
            Some(c) => format!("{message}, found {c:?}"),
            None => format!("{message}, found end of input"),
        };
        Error::Syntax {
            position: self.pos + 1,
            message: found,
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&format!("expected {c:?}")))
        }
    }

    fn term(&mut self) -> Result<BracketTerm> {
        let mut left = self.atom()?;
        loop {
            match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    let right = self.atom()?;
                    left = match left {
                        BracketTerm::Sum(mut ts) => {
                            ts.push(right);
                            BracketTerm::Sum(ts)
                        }
                        other => BracketTerm::Sum(vec![other, right]),
                    };
                }
                Some('-') => {
                    self.pos += 1;
                    let right = self.atom()?;
                    left = BracketTerm::diff(left, right);
                }
                _ => return Ok(left),
            }
        }
    }

    fn atom(&mut self) -> Result<BracketTerm> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() || c == '-' => {
                let c = self.rational()?;
                self.expect('*')?;
                Ok(BracketTerm::scale(c, self.atom()?))
            }
            _ => self.factor(),
        }
    }

    fn factor(&mut self) -> Result<BracketTerm> {
        match self.peek() {
            Some('g') => {
                let start = self.pos;
                self.pos += 1;
                let digits = self.digits();
                if digits.is_empty() {
                    return Err(self.error("expected generator index"));
                }
                match digits.parse::<usize>() {
                    Ok(i) if i >= 1 => Ok(BracketTerm::Generator(i)),
                    _ => Err(Error::Syntax {
                        position: start + 1,
                        message: format!("invalid generator g{digits}"),
                    }),
                }
            }
            Some('[') => {
                self.pos += 1;
                let left = self.term()?;
                self.expect(',')?;
                let right = self.term()?;
                self.expect(']')?;
                Ok(BracketTerm::bracket(left, right))
            }
            Some('(') => {
                self.pos += 1;
                let inner = self.term()?;
                self.expect(')')?;
                Ok(inner)
            }
            _ => Err(self.error("expected a generator, '[' or '('")),
        }
    }

    /// Digits starting exactly at the cursor; no whitespace skipping.
    fn digits(&mut self) -> String {
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        self.chars[start..self.pos].iter().collect()
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let negative = self.chars.get(self.pos) == Some(&'-');
        if negative {
            self.pos += 1;
        }
        let digits = self.digits();
        if digits.is_empty() {
            return Err(self.error("expected digits"));
        }
        let n: BigInt = digits.parse().expect("ascii digits");
        Ok(if negative { -n } else { n })
    }

    fn rational(&mut self) -> Result<Rational> {
        let num = self.integer()?;
        if self.peek() != Some('/') {
            return Ok(Rational::from_integer(num));
        }
        self.pos += 1;
        self.skip_ws();
        let den_pos = self.pos;
        if self.chars.get(self.pos) == Some(&'-') {
            return Err(self.error("denominator must be positive"));
        }
        let den = self.integer()?;
        if den.is_zero() {
            return Err(Error::ZeroDenominator {
                position: den_pos + 1,
            });
        }
        Ok(Rational::new(num, den))
    }
}

//! The free Leibniz algebra `Leib(V) = ⊕_{n≥1} V^{⊗n}`.
//!
//! The bracket is determined by `[ω, v] = ω⊗v` for a generator `v` together
//! with the left Leibniz identity `[x,[y,z]] = [[x,y],z] − [[x,z],y]`.

use crate::error::{Error, Result};
use crate::free_lie::{left_normed_tensor, Word};
use crate::lincomb::LinComb;
use crate::term::{BracketTerm, TermAlgebra};

/// Element of `Leib(V)` in the tensor-word basis.
pub type LeibElement = LinComb<Word>;

pub fn degree(x: &LeibElement) -> usize {
    x.keys().map(Word::len).max().unwrap_or(0)
}

/// `[ω, w]` for basis words.
///
/// Splitting `w = w'·v` at its last letter gives
/// `[ω, w] = [[ω, w'], v] − [[ω, v], w']`; unfolding this recursion shows the
/// result is `ω ⊗ c(w)` with `c(w)` the tensor expansion of the left-normed
/// commutator of the letters of `w`.
pub fn bracket_words(omega: &Word, w: &Word) -> LeibElement {
    left_normed_tensor(w).map_keys(|u| omega.concat(u))
}

pub fn leib_bracket(x: &LeibElement, y: &LeibElement, max_degree: usize) -> Result<LeibElement> {
    if x.is_zero() || y.is_zero() {
        return Ok(LeibElement::zero());
    }
    let d = degree(x) + degree(y);
    if d > max_degree {
        return Err(Error::DegreeOverflow {
            degree: d,
            cap: max_degree,
        });
    }
    let mut out = LeibElement::zero();
    for (omega, a) in x {
        for (w, b) in y {
            out.add_scaled(&bracket_words(omega, w), &(a * b));
        }
    }
    Ok(out)
}

/// `Leib(V)` on `gens` generators, for term evaluation.
#[derive(Clone, Copy, Debug)]
pub struct FreeLeibniz {
    pub gens: usize,
    pub max_degree: usize,
}

impl TermAlgebra for FreeLeibniz {
    type Key = Word;

    fn generator(&self, index: usize) -> Result<LeibElement> {
        if index == 0 || index > self.gens {
            return Err(Error::UnknownGenerator {
                index,
                gens: self.gens,
            });
        }
        Ok(LeibElement::basis(Word::letter(index as u32)))
    }

    fn bracket(&self, x: &LeibElement, y: &LeibElement) -> Result<LeibElement> {
        leib_bracket(x, y, self.max_degree)
    }
}

pub fn eval_term(term: &BracketTerm, gens: usize, max_degree: usize) -> Result<LeibElement> {
    term.evaluate(&FreeLeibniz { gens, max_degree })
}

//! The free Lie algebra `Lie(V) = ⊕ₙ Lieₙ(V)` in the Lyndon basis.
//!
//! A Lyndon word `w` of length ≥ 2 is bracketed through its standard
//! factorization `w = u·v` (`v` the longest proper Lyndon suffix) as
//! `σ(w) = [σ(u), σ(v)]`. Expanding `σ(w)` in the tensor algebra under
//! `[a, b] ↦ a⊗b − b⊗a` yields `w` plus lexicographically larger words of the
//! same length, which makes rewriting a Lie element to Lyndon coordinates a
//! triangular back-substitution.
//!
//! Generators are the letters `1..=d`; their numeric order is the alphabet
//! order used everywhere.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Deref, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::linalg::Rational;
use crate::lincomb::LinComb;

/// A nonempty word over the generator letters `1..=d`.
///
/// Words compare by length first and lexicographically within a length, so
/// sorted collections list lower degrees first.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Word(Vec<u32>);

impl Word {
    pub fn new(letters: Vec<u32>) -> Result<Self> {
        if letters.is_empty() {
            return Err(Error::InvalidArgument("empty word".into()));
        }
        if letters.contains(&0) {
            return Err(Error::InvalidArgument("letters are 1-based".into()));
        }
        Ok(Word(letters))
    }

    pub fn letter(v: u32) -> Self {
        assert!(v >= 1, "letters are 1-based");
        Word(vec![v])
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Always false; words are nonempty.
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn last(&self) -> u32 {
        *self.0.last().expect("nonempty")
    }

    /// The word without its last letter, or `None` for a single letter.
    pub fn init(&self) -> Option<Word> {
        (self.len() > 1).then(|| Word(self.0[..self.len() - 1].to_vec()))
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.0);
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    pub fn push(&self, v: u32) -> Word {
        let mut letters = self.0.clone();
        letters.push(v);
        Word(letters)
    }

    pub fn max_letter(&self) -> u32 {
        self.0.iter().copied().max().unwrap_or(0)
    }

    pub fn check_alphabet(&self, d: usize) -> Result<()> {
        match self.0.iter().find(|&&l| l as usize > d) {
            Some(&l) => Err(Error::UnknownGenerator {
                index: l as usize,
                gens: d,
            }),
            None => Ok(()),
        }
    }

    /// Strictly smaller than each proper rotation.
    pub fn is_lyndon(&self) -> bool {
        is_lyndon_slice(&self.0)
    }

    /// Letters written without separator when `d ≤ 9`, joined by `.` otherwise.
    pub fn render(&self, d: usize) -> String {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        if d <= 9 {
            parts.concat()
        } else {
            parts.join(".")
        }
    }

    /// Inverse of [`Word::render`].
    pub fn parse(text: &str, d: usize) -> Result<Self> {
        let bad = || Error::InvalidArgument(format!("bad word {text:?}"));
        let letters: Vec<u32> = if d <= 9 {
            text.chars()
                .map(|c| c.to_digit(10).ok_or_else(bad))
                .collect::<Result<_>>()?
        } else {
            text.split('.')
                .map(|p| p.parse::<u32>().map_err(|_| bad()))
                .collect::<Result<_>>()?
        };
        let w = Word::new(letters).map_err(|_| bad())?;
        w.check_alphabet(d)?;
        Ok(w)
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({})", self.render(self.max_letter() as usize))
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn is_lyndon_slice(w: &[u32]) -> bool {
    !w.is_empty()
        && (1..w.len()).all(|i| {
            let (head, tail) = w.split_at(i);
            // rotation tail·head compared with w
            w.iter().cmp(tail.iter().chain(head.iter())) == Ordering::Less
        })
}

/// Element of the tensor algebra on `V`, in the word basis.
pub type Tensor = LinComb<Word>;

/// Concatenation product of tensors.
pub fn tensor_mul(a: &Tensor, b: &Tensor) -> Tensor {
    let mut out = Tensor::zero();
    for (u, x) in a {
        for (v, y) in b {
            out.add_term(u.concat(v), x * y);
        }
    }
    out
}

/// `a⊗b − b⊗a`.
pub fn commutator(a: &Tensor, b: &Tensor) -> Tensor {
    tensor_mul(a, b) - tensor_mul(b, a)
}

pub fn tensor_degree(t: &Tensor) -> usize {
    t.keys().map(Word::len).max().unwrap_or(0)
}

/// An element of `Lie(V)` in Lyndon coordinates: `Σ c_ℓ σ(ℓ)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LyndonCoords(LinComb<Word>);

impl LyndonCoords {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The basis element `σ(ℓ)`.
    pub fn sigma(word: Word) -> Result<Self> {
        if !word.is_lyndon() {
            return Err(Error::InvalidArgument(format!(
                "{word:?} is not a Lyndon word"
            )));
        }
        Ok(LyndonCoords(LinComb::basis(word)))
    }

    pub fn generator(v: u32) -> Self {
        LyndonCoords(LinComb::basis(Word::letter(v)))
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Word, Rational)>) -> Result<Self> {
        let inner: LinComb<Word> = terms.into_iter().collect();
        if let Some(w) = inner.keys().find(|w| !w.is_lyndon()) {
            return Err(Error::InvalidArgument(format!(
                "{w:?} is not a Lyndon word"
            )));
        }
        Ok(LyndonCoords(inner))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        LyndonCoords(self.0.scale(c))
    }

    pub fn degree(&self) -> usize {
        self.0.keys().map(Word::len).max().unwrap_or(0)
    }

    pub fn as_lincomb(&self) -> &LinComb<Word> {
        &self.0
    }

    pub fn into_lincomb(self) -> LinComb<Word> {
        self.0
    }
}

impl Deref for LyndonCoords {
    type Target = LinComb<Word>;

    fn deref(&self) -> &LinComb<Word> {
        &self.0
    }
}

impl Add for LyndonCoords {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        LyndonCoords(self.0 + rhs.0)
    }
}

impl Sub for LyndonCoords {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        LyndonCoords(self.0 - rhs.0)
    }
}

impl Neg for LyndonCoords {
    type Output = Self;

    fn neg(self) -> Self {
        LyndonCoords(-self.0)
    }
}

fn check_args(d: usize, n: usize) -> Result<()> {
    if d == 0 || n == 0 {
        return Err(Error::InvalidArgument(format!(
            "alphabet size and length must be positive (got d={d}, n={n})"
        )));
    }
    Ok(())
}

/// All Lyndon words of length exactly `n` over `1..=d`, in lexicographic order.
pub fn lyndon_words(d: usize, n: usize) -> Result<Vec<Word>> {
    check_args(d, n)?;
    let top = d as u32 - 1;
    let mut out = Vec::new();
    // Duval's generation of Lyndon words of length ≤ n, 0-based letters.
    let mut w: Vec<u32> = vec![0];
    loop {
        if w.len() == n {
            out.push(Word(w.iter().map(|&l| l + 1).collect()));
        }
        let m = w.len();
        while w.len() < n {
            w.push(w[w.len() - m]);
        }
        while w.last() == Some(&top) {
            w.pop();
        }
        match w.last_mut() {
            Some(l) => *l += 1,
            None => break,
        }
    }
    Ok(out)
}

/// Splits a Lyndon word `w` as `u·v` with `v` its longest proper Lyndon suffix.
pub fn standard_factorization(w: &Word) -> Result<(Word, Word)> {
    if w.len() < 2 || !w.is_lyndon() {
        return Err(Error::InvalidArgument(format!(
            "{w:?} is not a Lyndon word of length at least 2"
        )));
    }
    let split = (1..w.len())
        .find(|&i| is_lyndon_slice(&w.0[i..]))
        .expect("the last letter is always a Lyndon suffix");
    Ok((Word(w.0[..split].to_vec()), Word(w.0[split..].to_vec())))
}

pub fn mobius(n: u64) -> i64 {
    assert!(n >= 1);
    let mut n = n;
    let mut sign = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

/// `dim Lieₙ(V)` for `dim V = d`: `(1/n) Σ_{k | n} μ(n/k) dᵏ`.
pub fn witt_dim(d: usize, n: usize) -> Result<u64> {
    check_args(d, n)?;
    let overflow = || Error::InvalidArgument(format!("witt_dim({d}, {n}) overflows"));
    let mut sum: i128 = 0;
    for k in (1..=n).filter(|k| n.is_multiple_of(*k)) {
        let term = (d as i128)
            .checked_pow(k as u32)
            .ok_or_else(overflow)?
            .checked_mul(mobius((n / k) as u64) as i128)
            .ok_or_else(overflow)?;
        sum = sum.checked_add(term).ok_or_else(overflow)?;
    }
    Ok((sum / n as i128) as u64)
}

fn cache<V>(slot: &'static OnceLock<Mutex<HashMap<Word, V>>>) -> &'static Mutex<HashMap<Word, V>> {
    slot.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Tensor expansion of `σ(ℓ)` for a Lyndon word `ℓ`.
pub fn sigma_tensor(word: &Word) -> Result<Arc<Tensor>> {
    static SIGMA: OnceLock<Mutex<HashMap<Word, Arc<Tensor>>>> = OnceLock::new();
    if let Some(t) = cache(&SIGMA).lock().expect("cache").get(word) {
        return Ok(Arc::clone(t));
    }
    let t = if word.len() == 1 {
        Tensor::basis(word.clone())
    } else {
        let (u, v) = standard_factorization(word)?;
        commutator(&*sigma_tensor(&u)?, &*sigma_tensor(&v)?)
    };
    let t = Arc::new(t);
    cache(&SIGMA)
        .lock()
        .expect("cache")
        .insert(word.clone(), Arc::clone(&t));
    Ok(t)
}

/// Embeds a Lie element into the tensor algebra.
pub fn expand_to_tensor(x: &LyndonCoords) -> Tensor {
    x.linear_map(|w| (*sigma_tensor(w).expect("keys are Lyndon")).clone())
}

/// Lyndon coordinates of a Lie element given in tensor form.
///
/// Repeatedly takes the smallest remaining word, which must be Lyndon, and
/// subtracts the matching multiple of `σ(word)`. Mixed degrees are fine since
/// words order by length first.
pub fn rewrite_to_lyndon(t: &Tensor) -> Result<LyndonCoords> {
    let mut residual = t.clone();
    let mut out = LinComb::zero();
    while let Some((w, c)) = residual.first() {
        if !w.is_lyndon() {
            return Err(Error::NotALieElement {
                word: w.render(w.max_letter() as usize),
            });
        }
        let (w, c) = (w.clone(), c.clone());
        residual.add_scaled(&*sigma_tensor(&w)?, &-c.clone());
        out.add_term(w, c);
    }
    Ok(LyndonCoords(out))
}

/// Tensor expansion of the left-normed commutator `[[…[w₁, w₂], …], wₙ]`.
pub fn left_normed_tensor(word: &Word) -> Arc<Tensor> {
    static LEFT: OnceLock<Mutex<HashMap<Word, Arc<Tensor>>>> = OnceLock::new();
    if let Some(t) = cache(&LEFT).lock().expect("cache").get(word) {
        return Arc::clone(t);
    }
    let t = match word.init() {
        None => Tensor::basis(word.clone()),
        Some(init) => {
            let last = Tensor::basis(Word::letter(word.last()));
            commutator(&left_normed_tensor(&init), &last)
        }
    };
    let t = Arc::new(t);
    cache(&LEFT)
        .lock()
        .expect("cache")
        .insert(word.clone(), Arc::clone(&t));
    t
}

/// Lyndon coordinates of the left-normed bracket `{{w₁, w₂}, …, wₙ}`.
pub fn left_normed(word: &Word) -> LyndonCoords {
    static COORDS: OnceLock<Mutex<HashMap<Word, LyndonCoords>>> = OnceLock::new();
    if let Some(x) = cache(&COORDS).lock().expect("cache").get(word) {
        return x.clone();
    }
    let x = rewrite_to_lyndon(&left_normed_tensor(word)).expect("commutators are Lie elements");
    cache(&COORDS)
        .lock()
        .expect("cache")
        .insert(word.clone(), x.clone());
    x
}

/// Linear extension of `w₁…wₙ ↦ {{w₁, w₂}, …, wₙ}` to tensors.
pub fn left_normed_map(t: &Tensor) -> LyndonCoords {
    LyndonCoords(t.linear_map(|w| left_normed(w).0))
}

/// The Lie bracket `{x, y}`.
pub fn lie_bracket(x: &LyndonCoords, y: &LyndonCoords, max_degree: usize) -> Result<LyndonCoords> {
    if x.is_zero() || y.is_zero() {
        return Ok(LyndonCoords::zero());
    }
    let degree = x.degree() + y.degree();
    if degree > max_degree {
        return Err(Error::DegreeOverflow {
            degree,
            cap: max_degree,
        });
    }
    rewrite_to_lyndon(&commutator(&expand_to_tensor(x), &expand_to_tensor(y)))
}

//! The free Ronco algebra `𝒱(V) = V ⊕ ⊕_{n≥2} Lie_{n−1}(V) ⊗ V`.
//!
//! The degree-`n` piece (`n ≥ 2`) has basis `σ(ℓ) ⊗ g_v` with `ℓ` a Lyndon
//! word of length `n − 1` and `v` a generator. The projection from `Leib(V)`
//! sends `v₁⊗…⊗vₙ` to `{{v₁, v₂}, …, v_{n−1}} ⊗ vₙ` and is a homomorphism, so
//! the bracket is computed by lifting both arguments along a linear section,
//! bracketing in `Leib(V)` and projecting back.

use std::collections::HashMap;

use crate::algebra::StructureAlgebra;
use crate::error::{Error, Result};
use crate::free_lie::{
    commutator, left_normed, lyndon_words, rewrite_to_lyndon, sigma_tensor, witt_dim, LyndonCoords,
    Tensor, Word,
};
use crate::leibniz::{leib_bracket, LeibElement};
use crate::linalg::{rank_and_kernel, Rational, SparseMatrix, SparseVec};
use crate::lincomb::LinComb;
use crate::term::TermAlgebra;

/// Basis symbol of `𝒱(V)`.
///
/// `Pair(ℓ, v)` stands for `σ(ℓ) ⊗ g_v`. The derived order lists generators
/// first, then pairs by degree and lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RoncoKey {
    Gen(u32),
    Pair(Word, u32),
}

impl RoncoKey {
    pub fn degree(&self) -> usize {
        match self {
            RoncoKey::Gen(_) => 1,
            RoncoKey::Pair(l, _) => l.len() + 1,
        }
    }
}

pub type RoncoElement = LinComb<RoncoKey>;

pub fn degree(x: &RoncoElement) -> usize {
    x.keys().map(RoncoKey::degree).max().unwrap_or(0)
}

pub fn generator(v: u32) -> RoncoElement {
    RoncoElement::basis(RoncoKey::Gen(v))
}

/// `ξ ⊗ g_v` for a Lie element `ξ`.
pub fn tensor_with_generator(xi: &LyndonCoords, v: u32) -> RoncoElement {
    xi.map_keys(|l| RoncoKey::Pair(l.clone(), v))
}

/// The canonical map `Leib(V) → 𝒱(V)`.
pub fn project(x: &LeibElement) -> RoncoElement {
    x.linear_map(|w| match w.init() {
        None => generator(w.last()),
        Some(init) => tensor_with_generator(&left_normed(&init), w.last()),
    })
}

/// A linear section of [`project`]: `σ(ℓ) ⊗ g_v ↦ (1/|ℓ|)·σ(ℓ)·v` in tensor
/// form. Left-normed bracketing multiplies a degree-`n` Lie element by `n`,
/// which the factor `1/|ℓ|` undoes.
pub fn section(x: &RoncoElement) -> LeibElement {
    x.linear_map(|key| match key {
        RoncoKey::Gen(v) => LeibElement::basis(Word::letter(*v)),
        RoncoKey::Pair(l, v) => {
            let t = sigma_tensor(l).expect("pair keys hold Lyndon words");
            let scale = Rational::new(1.into(), (l.len() as i64).into());
            t.map_keys(|u| u.push(*v)).scale(&scale)
        }
    })
}

pub fn ronco_bracket(
    x: &RoncoElement,
    y: &RoncoElement,
    max_degree: usize,
) -> Result<RoncoElement> {
    Ok(project(&leib_bracket(
        &section(x),
        &section(y),
        max_degree,
    )?))
}

fn check_args(d: usize, n: usize) -> Result<()> {
    if d == 0 || n == 0 {
        return Err(Error::InvalidArgument(format!(
            "alphabet size and degree must be positive (got d={d}, n={n})"
        )));
    }
    Ok(())
}

fn check_cap(n: usize, max_degree: usize) -> Result<()> {
    if n > max_degree {
        return Err(Error::DegreeOverflow {
            degree: n,
            cap: max_degree,
        });
    }
    Ok(())
}

/// `dim 𝒱(V)ₙ`: `d` for `n = 1`, `d · dim Lie_{n−1}(V)` otherwise.
pub fn graded_dim(d: usize, n: usize) -> Result<u64> {
    check_args(d, n)?;
    if n == 1 {
        Ok(d as u64)
    } else {
        Ok(witt_dim(d, n - 1)? * d as u64)
    }
}

/// Basis of `𝒱(V)ₙ` for `n ≥ 2`, in key order.
pub fn degree_basis(d: usize, n: usize) -> Result<Vec<RoncoKey>> {
    check_args(d, n)?;
    if n == 1 {
        return Ok((1..=d as u32).map(RoncoKey::Gen).collect());
    }
    let mut out = Vec::new();
    for l in lyndon_words(d, n - 1)? {
        for v in 1..=d as u32 {
            out.push(RoncoKey::Pair(l.clone(), v));
        }
    }
    Ok(out)
}

/// Basis of the kernel of `Lie_{n−1}(V) ⊗ V → Lieₙ(V)`, `ξ ⊗ v ↦ {ξ, v}`.
pub fn graded_kernel_basis(d: usize, n: usize, max_degree: usize) -> Result<Vec<RoncoElement>> {
    check_args(d, n)?;
    if n < 2 {
        return Err(Error::InvalidArgument(format!(
            "kernel degree must be at least 2, got {n}"
        )));
    }
    check_cap(n, max_degree)?;
    let domain = degree_basis(d, n)?;
    let target: HashMap<Word, usize> = lyndon_words(d, n)?
        .into_iter()
        .enumerate()
        .map(|(i, w)| (w, i))
        .collect();
    let columns: Vec<SparseVec> = domain
        .iter()
        .map(|key| {
            let RoncoKey::Pair(l, v) = key else {
                unreachable!("degree ≥ 2 keys are pairs")
            };
            let image = rewrite_to_lyndon(&commutator(
                &*sigma_tensor(l)?,
                &Tensor::basis(Word::letter(*v)),
            ))?;
            Ok(image.map_keys(|w| target[w]))
        })
        .collect::<Result<_>>()?;
    let matrix = SparseMatrix::from_columns(target.len(), &columns)?;
    let (_, kernel) = rank_and_kernel(&matrix);
    Ok(kernel
        .into_iter()
        .map(|v| {
            v.into_iter()
                .enumerate()
                .map(|(i, c)| (domain[i].clone(), c))
                .collect()
        })
        .collect())
}

/// Basis of the truncation `𝒱(V)_{≤N}`: generators, then pairs by degree.
pub fn truncation_basis(d: usize, max: usize) -> Result<Vec<RoncoKey>> {
    check_args(d, max)?;
    let mut out = Vec::new();
    for n in 1..=max {
        out.extend(degree_basis(d, n)?);
    }
    Ok(out)
}

/// Structure constants of `𝒱(V)` modulo the components of degree `> N`.
pub fn truncate_to_structure(d: usize, max: usize, max_degree: usize) -> Result<StructureAlgebra> {
    check_args(d, max)?;
    check_cap(max, max_degree)?;
    let basis = truncation_basis(d, max)?;
    let index: HashMap<&RoncoKey, usize> = basis.iter().enumerate().map(|(i, k)| (k, i)).collect();
    let mut algebra = StructureAlgebra::new(basis.len());
    for (i, a) in basis.iter().enumerate() {
        for (j, b) in basis.iter().enumerate() {
            if a.degree() + b.degree() > max {
                continue;
            }
            let product = ronco_bracket(
                &RoncoElement::basis(a.clone()),
                &RoncoElement::basis(b.clone()),
                max_degree,
            )?;
            algebra.set_bracket(i, j, product.map_keys(|k| index[k]));
        }
    }
    Ok(algebra)
}

/// `𝒱(V)` on `gens` generators, for term evaluation.
#[derive(Clone, Copy, Debug)]
pub struct FreeRonco {
    pub gens: usize,
    pub max_degree: usize,
}

impl TermAlgebra for FreeRonco {
    type Key = RoncoKey;

    fn generator(&self, index: usize) -> Result<RoncoElement> {
        if index == 0 || index > self.gens {
            return Err(Error::UnknownGenerator {
                index,
                gens: self.gens,
            });
        }
        Ok(generator(index as u32))
    }

    fn bracket(&self, x: &RoncoElement, y: &RoncoElement) -> Result<RoncoElement> {
        ronco_bracket(x, y, self.max_degree)
    }
}

/// The Lie component of the canonical map `𝒱(V) → Lie(V)`,
/// `ξ ⊗ v ↦ {ξ, v}`.
pub fn to_lie(x: &RoncoElement) -> Result<LyndonCoords> {
    let mut t = Tensor::zero();
    for (key, c) in x {
        match key {
            RoncoKey::Gen(v) => t.add_term(Word::letter(*v), c.clone()),
            RoncoKey::Pair(l, v) => t.add_scaled(
                &commutator(&*sigma_tensor(l)?, &Tensor::basis(Word::letter(*v))),
                c,
            ),
        }
    }
    rewrite_to_lyndon(&t)
}

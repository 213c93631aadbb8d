//! Low-degree homology of finite-dimensional algebras.
//!
//! Chain spaces use fixed coordinate orders: `𝔤⊗𝔤` and `M⊗𝔤` index `(i, j)`
//! as `i·n + j`; `Sym²𝔤` indexes `e_i⊙e_j` (`i ≤ j`) lexicographically.

use std::collections::BTreeMap;

use crate::algebra::{verify_variety, StructureAlgebra, Variety};
use crate::error::{Error, Result};
use crate::linalg::{
    from_dense, rank_and_kernel, to_dense, Echelon, Rational, SparseMatrix, SparseVec,
};

/// Dimension of a homology space and a basis of representatives.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyReport {
    pub dimension: usize,
    /// Cycles independent modulo the boundaries, one per dimension.
    pub representatives: Vec<Vec<Rational>>,
}

fn require(a: &StructureAlgebra, variety: Variety) -> Result<()> {
    let report = verify_variety(a, variety);
    if report.is_ok() {
        Ok(())
    } else {
        Err(Error::NotInVariety(Box::new(report)))
    }
}

/// Standard basis vectors of the coordinates that are not pivots of `e`.
fn complement(e: &Echelon, len: usize) -> HomologyReport {
    let reduced = e.reduced();
    let representatives: Vec<Vec<Rational>> = (0..len)
        .filter(|&c| !reduced.is_pivot(c))
        .map(|c| to_dense(&SparseVec::basis(c), len))
        .collect();
    HomologyReport {
        dimension: representatives.len(),
        representatives,
    }
}

/// Cycles from `kernel` that stay independent modulo `boundaries`.
fn cycles_mod_boundaries(
    kernel: Vec<Vec<Rational>>,
    mut boundaries: Echelon,
) -> Result<HomologyReport> {
    let expected = kernel
        .len()
        .checked_sub(boundaries.rank())
        .ok_or_else(|| Error::Internal("boundary space larger than cycle space".into()))?;
    let mut representatives = Vec::new();
    for v in kernel {
        if boundaries.insert(&from_dense(&v)) {
            representatives.push(v);
        }
    }
    if representatives.len() != expected {
        return Err(Error::Internal(format!(
            "{} representatives for a space of dimension {expected}",
            representatives.len()
        )));
    }
    Ok(HomologyReport {
        dimension: expected,
        representatives,
    })
}

/// `HL₁(𝔤) = 𝔤 / [𝔤, 𝔤]`.
pub fn hl1(a: &StructureAlgebra) -> Result<HomologyReport> {
    require(a, Variety::Leibniz)?;
    let mut e = Echelon::new();
    for v in a.table().values() {
        e.insert(v);
    }
    Ok(complement(&e, a.dim()))
}

/// The bracket `𝔤⊗𝔤 → 𝔤` as a matrix; column `i·n + j` is `[e_i, e_j]`.
fn bracket_matrix(a: &StructureAlgebra) -> Result<SparseMatrix> {
    let n = a.dim();
    let columns: Vec<SparseVec> = (0..n * n).map(|c| a.bracket(c / n, c % n)).collect();
    SparseMatrix::from_columns(n, &columns)
}

/// `d(x⊗y⊗z) = [x,y]⊗z − [x,z]⊗y − x⊗[y,z]` on basis tensors.
fn leibniz_boundary(a: &StructureAlgebra, i: usize, j: usize, k: usize) -> SparseVec {
    let n = a.dim();
    let mut v = a.bracket(i, j).map_keys(|&m| m * n + k);
    v -= &a.bracket(i, k).map_keys(|&m| m * n + j);
    v -= &a.bracket(j, k).map_keys(|&m| i * n + m);
    v
}

/// `HL₂(𝔤) = Ker([−,−]: 𝔤⊗𝔤 → 𝔤) / Im(d: 𝔤⊗𝔤⊗𝔤 → 𝔤⊗𝔤)`.
pub fn hl2(a: &StructureAlgebra) -> Result<HomologyReport> {
    require(a, Variety::Leibniz)?;
    let n = a.dim();
    let bracket = bracket_matrix(a)?;
    let (_, kernel) = rank_and_kernel(&bracket);
    let mut image = Echelon::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let b = leibniz_boundary(a, i, j, k);
                if !bracket.mul_sparse(&b).is_zero() {
                    return Err(Error::Internal(format!(
                        "boundary of e{}⊗e{}⊗e{} is not a cycle",
                        i + 1,
                        j + 1,
                        k + 1
                    )));
                }
                image.insert(&b);
            }
        }
    }
    cycles_mod_boundaries(kernel, image)
}

/// `HR₀(𝔤)`: `Sym²𝔤` modulo `x⊙[y,z] = [x,y]⊙z`.
pub fn hr0(a: &StructureAlgebra) -> Result<HomologyReport> {
    require(a, Variety::Lie)?;
    let n = a.dim();
    let mut index = BTreeMap::new();
    for i in 0..n {
        for j in i..n {
            let next = index.len();
            index.insert((i, j), next);
        }
    }
    let sym = |i: usize, j: usize| index[&(i.min(j), i.max(j))];
    let mut relations = Echelon::new();
    for i in 0..n {
        for j in 0..n {
            let ij = a.bracket(i, j);
            for k in 0..n {
                let mut r = a.bracket(j, k).map_keys(|&m| sym(i, m));
                r -= &ij.map_keys(|&m| sym(m, k));
                relations.insert(&r);
            }
        }
    }
    Ok(complement(&relations, index.len()))
}

/// `H₁(𝔤, 𝔤ᵃᵈ)` from the Chevalley–Eilenberg complex
/// `M⊗Λ²𝔤 → M⊗𝔤 → M` with `M = 𝔤` and `x·m = [x, m]`:
///
/// ```text
/// d₁(m⊗x)   = x·m
/// d₂(m⊗x∧y) = −(x·m)⊗y + (y·m)⊗x − m⊗[x,y]
/// ```
pub fn h1_adjoint(a: &StructureAlgebra) -> Result<HomologyReport> {
    require(a, Variety::Lie)?;
    let n = a.dim();
    let act = |x: usize, m: usize| a.bracket(x, m);
    let d1_columns: Vec<SparseVec> = (0..n * n).map(|c| act(c % n, c / n)).collect();
    let d1 = SparseMatrix::from_columns(n, &d1_columns)?;
    let (_, kernel) = rank_and_kernel(&d1);
    let mut image = Echelon::new();
    for m in 0..n {
        for x in 0..n {
            for y in x + 1..n {
                let mut b = act(y, m).map_keys(|&k| k * n + x);
                b -= &act(x, m).map_keys(|&k| k * n + y);
                b -= &a.bracket(x, y).map_keys(|&k| m * n + k);
                if !d1.mul_sparse(&b).is_zero() {
                    return Err(Error::Internal(format!(
                        "d₁∘d₂ is nonzero on e{}⊗e{}∧e{}",
                        m + 1,
                        x + 1,
                        y + 1
                    )));
                }
                image.insert(&b);
            }
        }
    }
    cycles_mod_boundaries(kernel, image)
}

//! Finite-dimensional algebras given by structure constants.
//!
//! Basis indices are 0-based in memory; the JSON format and all printed
//! reports use 1-based indices.
//!
//! Identity checks evaluate on basis tuples. Multilinear identities are
//! decided exactly this way. The two quadratic ones, `[x,x] = 0` and
//! `[[x,x],y] = 0`, are checked on diagonal basis instances together with
//! their polarized forms, which is equivalent over a field of characteristic
//! zero.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::format::render_lincomb;
use crate::linalg::{from_dense, ratio, to_dense, Echelon, Rational, SparseVec};

/// Sparse multiplication table: `(i, j) ↦ e_i · e_j`.
pub type Table = BTreeMap<(usize, usize), SparseVec>;

fn table_set(table: &mut Table, dim: usize, i: usize, j: usize, value: SparseVec) {
    assert!(i < dim && j < dim, "basis index out of range");
    assert!(
        value.keys().all(|&k| k < dim),
        "structure constant index out of range"
    );
    if value.is_zero() {
        table.remove(&(i, j));
    } else {
        table.insert((i, j), value);
    }
}

/// `Σ x_a y_b · table(a, b)`.
fn table_eval(table: &Table, x: &SparseVec, y: &SparseVec) -> SparseVec {
    let mut out = SparseVec::zero();
    if x.is_zero() || y.is_zero() {
        return out;
    }
    for ((a, b), c) in table {
        if let (Some(xa), Some(yb)) = (x.get(a), y.get(b)) {
            out.add_scaled(c, &(xa * yb));
        }
    }
    out
}

/// An algebra with one bilinear bracket `[e_i, e_j] = Σ_k c_{ij}^k e_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureAlgebra {
    dim: usize,
    bracket: Table,
}

impl StructureAlgebra {
    pub fn new(dim: usize) -> Self {
        Self {
            dim,
            bracket: Table::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Sets `[e_i, e_j]`. Panics on out-of-range indices.
    pub fn set_bracket(&mut self, i: usize, j: usize, value: SparseVec) {
        table_set(&mut self.bracket, self.dim, i, j, value);
    }

    pub fn bracket(&self, i: usize, j: usize) -> SparseVec {
        self.bracket.get(&(i, j)).cloned().unwrap_or_default()
    }

    pub fn table(&self) -> &Table {
        &self.bracket
    }

    pub fn is_abelian(&self) -> bool {
        self.bracket.is_empty()
    }

    pub fn bracket_vec(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        table_eval(&self.bracket, x, y)
    }

    fn br(&self, i: usize, j: usize) -> SparseVec {
        self.bracket(i, j)
    }

    fn left(&self, v: &SparseVec, k: usize) -> SparseVec {
        self.bracket_vec(v, &SparseVec::basis(k))
    }

    fn right(&self, k: usize, v: &SparseVec) -> SparseVec {
        self.bracket_vec(&SparseVec::basis(k), v)
    }
}

/// Evaluates `[x, y]` on dense coordinate vectors.
pub fn bracket_eval(a: &StructureAlgebra, x: &[Rational], y: &[Rational]) -> Result<Vec<Rational>> {
    for v in [x, y] {
        if v.len() != a.dim {
            return Err(Error::DimensionMismatch {
                expected: a.dim,
                found: v.len(),
            });
        }
    }
    Ok(to_dense(
        &a.bracket_vec(&from_dense(x), &from_dense(y)),
        a.dim,
    ))
}

/// An algebra with a product `xy` and a bracket `{x, y}`.
///
/// Nothing is validated at construction; see [`verify_mu`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MuAlgebra {
    dim: usize,
    lie_bracket: Table,
    product: Table,
}

impl MuAlgebra {
    pub fn new(dim: usize) -> Self {
        Self {
            dim,
            lie_bracket: Table::new(),
            product: Table::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn set_lie(&mut self, i: usize, j: usize, value: SparseVec) {
        table_set(&mut self.lie_bracket, self.dim, i, j, value);
    }

    pub fn set_product(&mut self, i: usize, j: usize, value: SparseVec) {
        table_set(&mut self.product, self.dim, i, j, value);
    }

    pub fn lie(&self, i: usize, j: usize) -> SparseVec {
        self.lie_bracket.get(&(i, j)).cloned().unwrap_or_default()
    }

    pub fn product(&self, i: usize, j: usize) -> SparseVec {
        self.product.get(&(i, j)).cloned().unwrap_or_default()
    }

    pub fn lie_table(&self) -> &Table {
        &self.lie_bracket
    }

    pub fn product_table(&self) -> &Table {
        &self.product
    }

    pub fn lie_vec(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        table_eval(&self.lie_bracket, x, y)
    }

    pub fn product_vec(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        table_eval(&self.product, x, y)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variety {
    Leibniz,
    Lie,
    Ronco,
    SymmetricLeibniz,
}

impl Variety {
    pub fn name(self) -> &'static str {
        match self {
            Variety::Leibniz => "leibniz",
            Variety::Lie => "lie",
            Variety::Ronco => "ronco",
            Variety::SymmetricLeibniz => "symmetric-leibniz",
        }
    }
}

impl FromStr for Variety {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "leibniz" => Ok(Variety::Leibniz),
            "lie" => Ok(Variety::Lie),
            "ronco" => Ok(Variety::Ronco),
            "symmetric" | "symmetric-leibniz" => Ok(Variety::SymmetricLeibniz),
            other => Err(Error::InvalidArgument(format!("unknown variety {other:?}"))),
        }
    }
}

/// One failed instance of an identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub axiom: &'static str,
    /// 0-based basis indices of the instance.
    pub indices: Vec<usize>,
    pub residual: SparseVec,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub variety: String,
    pub violations: Vec<Violation>,
}

impl VerificationReport {
    fn new(variety: &str) -> Self {
        Self {
            variety: variety.to_string(),
            violations: Vec::new(),
        }
    }

    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn count(&self, axiom: &str) -> usize {
        self.violations.iter().filter(|v| v.axiom == axiom).count()
    }

    fn check(&mut self, axiom: &'static str, indices: &[usize], residual: SparseVec) {
        if !residual.is_zero() {
            self.violations.push(Violation {
                axiom,
                indices: indices.to_vec(),
                residual,
            });
        }
    }
}

/// Renders `Σ c_k e_k` with 1-based indices, e.g. `e3 - 1/2·e5`.
pub fn render_vector(v: &SparseVec) -> String {
    render_lincomb(v, |k| format!("e{}", k + 1))
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_ok() {
            return write!(f, "{}: ok", self.variety);
        }
        write!(
            f,
            "{}: {} violation(s)",
            self.variety,
            self.violations.len()
        )?;
        for v in &self.violations {
            let idx: Vec<String> = v.indices.iter().map(|i| (i + 1).to_string()).collect();
            write!(
                f,
                "\n  {} ({}): {}",
                v.axiom,
                idx.join(", "),
                render_vector(&v.residual)
            )?;
        }
        Ok(())
    }
}

fn check_leibniz(a: &StructureAlgebra, report: &mut VerificationReport) {
    let n = a.dim;
    for i in 0..n {
        for j in 0..n {
            let ij = a.br(i, j);
            for k in 0..n {
                // [x,[y,z]] − [[x,y],z] + [[x,z],y]
                let mut r = a.right(i, &a.br(j, k));
                r -= &a.left(&ij, k);
                r += &a.left(&a.br(i, k), j);
                report.check("leibniz", &[i, j, k], r);
            }
        }
    }
}

/// Checks `A` against the defining identities of `variety` on basis tuples.
pub fn verify_variety(a: &StructureAlgebra, variety: Variety) -> VerificationReport {
    let mut report = VerificationReport::new(variety.name());
    check_leibniz(a, &mut report);
    let n = a.dim;
    match variety {
        Variety::Leibniz => {}
        Variety::Lie => {
            for i in 0..n {
                report.check("square", &[i, i], a.br(i, i));
                for j in i + 1..n {
                    report.check("antisymmetry", &[i, j], a.br(i, j) + a.br(j, i));
                }
            }
        }
        Variety::Ronco => {
            for i in 0..n {
                for j in 0..n {
                    let sym = a.br(i, j) + a.br(j, i);
                    for k in 0..n {
                        report.check("left-symmetric-kill", &[i, j, k], a.left(&sym, k));
                    }
                }
                let sq = a.br(i, i);
                for j in 0..n {
                    report.check("square-kill", &[i, j], a.left(&sq, j));
                }
            }
        }
        Variety::SymmetricLeibniz => {
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        // [[x,y],z] − [x,[y,z]] + [y,[x,z]]
                        let mut r = a.left(&a.br(i, j), k);
                        r -= &a.right(i, &a.br(j, k));
                        r += &a.right(j, &a.br(i, k));
                        report.check("right-leibniz", &[i, j, k], r);
                    }
                }
            }
        }
    }
    report
}

/// Checks the μ-algebra axioms on basis tuples; with `symmetric`, also
/// `x{y,z} = 0`. The skew-symmetry of `(x,y,z) ↦ x{y,z}`, a consequence of
/// the axioms, is reported under `derived-skew`.
pub fn verify_mu(m: &MuAlgebra, symmetric: bool) -> VerificationReport {
    let name = if symmetric { "mu-symmetric" } else { "mu" };
    let mut report = VerificationReport::new(name);
    let n = m.dim;
    let e = SparseVec::basis;
    // x{y,z}
    let x_lie = |i: usize, j: usize, k: usize| m.product_vec(&e(i), &m.lie(j, k));
    for i in 0..n {
        report.check("alternating", &[i, i], m.lie(i, i));
        for j in i + 1..n {
            report.check("commutative", &[i, j], m.product(i, j) - m.product(j, i));
            report.check("antisymmetric", &[i, j], m.lie(i, j) + m.lie(j, i));
        }
    }
    for i in 0..n {
        for j in 0..n {
            let ij = m.product(i, j);
            report.check("derived-skew", &[i, i, j], x_lie(i, i, j));
            for k in 0..n {
                report.check("nil-left", &[i, j, k], m.product_vec(&ij, &e(k)));
                report.check(
                    "nil-right",
                    &[i, j, k],
                    m.product_vec(&e(i), &m.product(j, k)),
                );
                report.check("product-central", &[i, j, k], m.lie_vec(&ij, &e(k)));
                let mut jac = m.lie_vec(&e(i), &m.lie(j, k));
                jac += &m.lie_vec(&e(k), &m.lie(i, j));
                jac += &m.lie_vec(&e(j), &m.lie(k, i));
                jac -= &x_lie(i, j, k);
                report.check("cyclic-jacobi", &[i, j, k], jac);
                if symmetric {
                    report.check("symmetric", &[i, j, k], x_lie(i, j, k));
                }
                report.check("derived-skew", &[i, j, k], x_lie(i, j, k) + x_lie(j, i, k));
            }
        }
    }
    report
}

/// `{x,y} = ([x,y] − [y,x])/2`, `xy = ([x,y] + [y,x])/2`.
pub fn ronco_to_mu(a: &StructureAlgebra) -> Result<MuAlgebra> {
    let report = verify_variety(a, Variety::Ronco);
    if !report.is_ok() {
        return Err(Error::NotInVariety(Box::new(report)));
    }
    let half = ratio(1, 2);
    let mut m = MuAlgebra::new(a.dim);
    for i in 0..a.dim {
        for j in 0..a.dim {
            let (ij, ji) = (a.br(i, j), a.br(j, i));
            m.set_lie(i, j, (&ij - &ji).scale(&half));
            m.set_product(i, j, (ij + ji).scale(&half));
        }
    }
    Ok(m)
}

/// `[x,y] = {x,y} + xy`.
pub fn mu_to_ronco(m: &MuAlgebra) -> Result<StructureAlgebra> {
    let report = verify_mu(m, false);
    if !report.is_ok() {
        return Err(Error::NotInVariety(Box::new(report)));
    }
    let mut a = StructureAlgebra::new(m.dim);
    for i in 0..m.dim {
        for j in 0..m.dim {
            a.set_bracket(i, j, m.lie(i, j) + m.product(i, j));
        }
    }
    Ok(a)
}

fn dense_rows(e: &Echelon, dim: usize) -> Vec<Vec<Rational>> {
    e.reduced().rows().map(|r| to_dense(r, dim)).collect()
}

fn ann_echelon(a: &StructureAlgebra) -> Echelon {
    let mut e = Echelon::new();
    for i in 0..a.dim {
        for j in i..a.dim {
            e.insert(&(a.br(i, j) + a.br(j, i)));
        }
    }
    e
}

/// Basis of `𝔤^ann`, the span of the symmetrized brackets `[x,y] + [y,x]`,
/// in reduced row-echelon form.
pub fn ann_subspace(a: &StructureAlgebra) -> Vec<Vec<Rational>> {
    dense_rows(&ann_echelon(a), a.dim)
}

/// The two-sided ideal generated by `𝔤^ann`, closed under bracketing with
/// basis vectors on both sides.
pub fn lie_ideal(a: &StructureAlgebra) -> Echelon {
    let mut e = Echelon::new();
    let mut pending: Vec<SparseVec> = Vec::new();
    for i in 0..a.dim {
        for j in i..a.dim {
            pending.push(a.br(i, j) + a.br(j, i));
        }
    }
    while let Some(v) = pending.pop() {
        if e.insert(&v) {
            for k in 0..a.dim {
                pending.push(a.left(&v, k));
                pending.push(a.right(k, &v));
            }
        }
    }
    e
}

/// Dense basis of [`lie_ideal`].
pub fn lie_ideal_basis(a: &StructureAlgebra) -> Vec<Vec<Rational>> {
    dense_rows(&lie_ideal(a), a.dim)
}

/// `𝔤_Lie`: the quotient by [`lie_ideal`], on the basis of non-pivot
/// coordinates of the ideal's reduced echelon form.
pub fn lie_quotient(a: &StructureAlgebra) -> Result<StructureAlgebra> {
    let report = verify_variety(a, Variety::Leibniz);
    if !report.is_ok() {
        return Err(Error::NotInVariety(Box::new(report)));
    }
    let ideal = lie_ideal(a).reduced();
    let kept: Vec<usize> = (0..a.dim).filter(|&c| !ideal.is_pivot(c)).collect();
    let new_index: BTreeMap<usize, usize> = kept.iter().enumerate().map(|(n, &o)| (o, n)).collect();
    let mut q = StructureAlgebra::new(kept.len());
    for (ni, &i) in kept.iter().enumerate() {
        for (nj, &j) in kept.iter().enumerate() {
            let reduced = ideal.reduce(&a.br(i, j));
            q.set_bracket(ni, nj, reduced.map_keys(|k| new_index[k]));
        }
    }
    Ok(q)
}

/// The `n`-dimensional abelian algebra.
pub fn abelian(n: usize) -> StructureAlgebra {
    StructureAlgebra::new(n)
}

/// Free nilpotent class-2 Lie algebra `V ⊕ Λ²V` on `d` generators.
///
/// Basis: `e_1..e_d`, then `e_i∧e_j` for `i < j` in lexicographic order.
pub fn free_nil2(d: usize) -> Result<StructureAlgebra> {
    if d == 0 {
        return Err(Error::InvalidArgument("free_nil2 needs d ≥ 1".into()));
    }
    let mut wedge = BTreeMap::new();
    for i in 0..d {
        for j in i + 1..d {
            let idx = d + wedge.len();
            wedge.insert((i, j), idx);
        }
    }
    let mut a = StructureAlgebra::new(d + wedge.len());
    for (&(i, j), &w) in &wedge {
        a.set_bracket(i, j, SparseVec::basis(w));
        a.set_bracket(j, i, -SparseVec::basis(w));
    }
    Ok(a)
}

/// The 3-dimensional simple Lie algebra with `[e₁,e₂]=e₃`, `[e₂,e₃]=e₁`,
/// `[e₃,e₁]=e₂`.
pub fn cross_product() -> StructureAlgebra {
    let mut a = StructureAlgebra::new(3);
    for (i, j, k) in [(0, 1, 2), (1, 2, 0), (2, 0, 1)] {
        a.set_bracket(i, j, SparseVec::basis(k));
        a.set_bracket(j, i, -SparseVec::basis(k));
    }
    a
}

/// `A ⊕ B`, with the basis of `B` shifted after that of `A`.
pub fn direct_sum(a: &StructureAlgebra, b: &StructureAlgebra) -> StructureAlgebra {
    let shift = a.dim;
    let mut out = StructureAlgebra::new(a.dim + b.dim);
    for (&(i, j), v) in &a.bracket {
        out.set_bracket(i, j, v.clone());
    }
    for (&(i, j), v) in &b.bracket {
        out.set_bracket(i + shift, j + shift, v.map_keys(|k| k + shift));
    }
    out
}

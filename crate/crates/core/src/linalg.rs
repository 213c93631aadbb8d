//! Exact rational linear algebra.
//!
//! Scalars are arbitrary-precision rationals. Rank and kernel computations run
//! a fraction-free elimination: every row is scaled to a primitive integer
//! vector, rows are combined as `p·r − a·s` (never divided by a pivot), and the
//! integer content is removed after each step to keep entries small. Only the
//! final reduced rows are turned back into rationals.

use std::collections::BTreeMap;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::lincomb::LinComb;

pub type Rational = BigRational;

/// Sparse vector indexed by 0-based coordinates.
pub type SparseVec = LinComb<usize>;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `p/q`, reduced. Panics if `q == 0`.
pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Parses `"p"` or `"p/q"` with `q > 0`. Non-reduced input such as `"2/4"` is
/// accepted and normalized.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let bad = || Error::BadRational(text.to_string());
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (text, None),
    };
    let parse_int = |s: &str| -> Result<BigInt> {
        let digits = s.strip_prefix('-').unwrap_or(s);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        BigInt::from_str(s).map_err(|_| bad())
    };
    let n = parse_int(num)?;
    match den {
        None => Ok(Rational::from_integer(n)),
        Some(d) => {
            if d.starts_with('-') {
                return Err(bad());
            }
            let d = parse_int(d)?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
    }
}

/// Canonical string form: `"p"` for integers, `"p/q"` otherwise.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

pub fn to_dense(v: &SparseVec, len: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); len];
    for (&i, c) in v.iter() {
        out[i] = c.clone();
    }
    out
}

pub fn from_dense(v: &[Rational]) -> SparseVec {
    v.iter().enumerate().map(|(i, c)| (i, c.clone())).collect()
}

/// A `rows × cols` matrix storing only its nonzero entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), Rational>,
}

impl SparseMatrix {
    pub fn new(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: BTreeMap::new(),
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::new(n, n);
        for i in 0..n {
            m.entries.insert((i, i), Rational::one());
        }
        m
    }

    pub fn from_dense(rows: &[Vec<Rational>], cols: usize) -> Result<Self> {
        let mut m = Self::new(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: row.len(),
                });
            }
            for (j, v) in row.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        Ok(m)
    }

    /// Builds a matrix whose `i`-th row is `rows[i]`.
    pub fn from_rows(cols: usize, rows: &[SparseVec]) -> Result<Self> {
        let mut m = Self::new(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            for (&j, v) in row.iter() {
                if j >= cols {
                    return Err(Error::DimensionMismatch {
                        expected: cols,
                        found: j + 1,
                    });
                }
                m.entries.insert((i, j), v.clone());
            }
        }
        Ok(m)
    }

    /// Builds a matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(rows: usize, columns: &[SparseVec]) -> Result<Self> {
        Ok(Self::from_rows(rows, columns)?.transpose())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    /// Sets an entry; storing zero removes it. Panics on out-of-range indices.
    pub fn set(&mut self, row: usize, col: usize, value: Rational) {
        assert!(row < self.rows && col < self.cols, "index out of range");
        if value.is_zero() {
            self.entries.remove(&(row, col));
        } else {
            self.entries.insert((row, col), value);
        }
    }

    pub fn get(&self, row: usize, col: usize) -> Rational {
        self.entries
            .get(&(row, col))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Rational)> {
        self.entries.iter().map(|(&(i, j), v)| (i, j, v))
    }

    pub fn transpose(&self) -> Self {
        Self {
            rows: self.cols,
            cols: self.rows,
            entries: self
                .entries
                .iter()
                .map(|(&(i, j), v)| ((j, i), v.clone()))
                .collect(),
        }
    }

    pub fn row_vectors(&self) -> Vec<SparseVec> {
        let mut out = vec![SparseVec::zero(); self.rows];
        for (&(i, j), v) in &self.entries {
            out[i].add_term(j, v.clone());
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        let mut out = vec![Rational::zero(); self.rows];
        for (&(i, j), a) in &self.entries {
            if !v[j].is_zero() {
                out[i] += a * &v[j];
            }
        }
        Ok(out)
    }

    pub fn mul_sparse(&self, v: &SparseVec) -> SparseVec {
        let mut out = SparseVec::zero();
        for (&(i, j), a) in &self.entries {
            if let Some(x) = v.get(&j) {
                out.add_term(i, a * x);
            }
        }
        out
    }

    pub fn mul(&self, other: &SparseMatrix) -> Result<SparseMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let right_rows = other.row_vectors();
        let mut out = SparseMatrix::new(self.rows, other.cols);
        let mut acc: BTreeMap<(usize, usize), Rational> = BTreeMap::new();
        for (&(i, k), a) in &self.entries {
            for (&j, b) in right_rows[k].iter() {
                *acc.entry((i, j)).or_insert_with(Rational::zero) += a * b;
            }
        }
        acc.retain(|_, v| !v.is_zero());
        out.entries = acc;
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }
}

type IntRow = BTreeMap<usize, BigInt>;

fn primitive(row: &mut IntRow) {
    let mut g = BigInt::zero();
    for v in row.values() {
        g = g.gcd(v);
        if g.is_one() {
            return;
        }
    }
    if !g.is_zero() {
        for v in row.values_mut() {
            *v /= &g;
        }
    }
}

fn to_int_row(v: &SparseVec) -> IntRow {
    let mut l = BigInt::one();
    for (_, c) in v.iter() {
        l = l.lcm(c.denom());
    }
    let mut row: IntRow = v
        .iter()
        .map(|(&i, c)| (i, c.numer() * (&l / c.denom())))
        .collect();
    primitive(&mut row);
    row
}

/// `target ← p·target − a·source` where `p = source[col]`, `a = target[col]`,
/// after dividing `p` and `a` by their gcd; the column `col` is cleared.
fn eliminate(target: &mut IntRow, source: &IntRow, col: usize) {
    let a = match target.get(&col) {
        Some(a) => a.clone(),
        None => return,
    };
    let p = &source[&col];
    let g = p.gcd(&a);
    let (mp, ma) = (p / &g, &a / &g);
    if !mp.is_one() {
        for v in target.values_mut() {
            *v *= &mp;
        }
    }
    for (&k, s) in source {
        let entry = target.entry(k).or_insert_with(BigInt::zero);
        *entry -= &ma * s;
        if entry.is_zero() {
            target.remove(&k);
        }
    }
    primitive(target);
}

/// Incremental row-echelon form over the rationals, kept as primitive integer
/// rows keyed by pivot column.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    rows: BTreeMap<usize, IntRow>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    fn reduce_int(&self, mut row: IntRow) -> IntRow {
        let mut from = 0;
        loop {
            let next = row
                .range(from..)
                .map(|(&c, _)| c)
                .find(|c| self.rows.contains_key(c));
            match next {
                None => return row,
                Some(c) => {
                    eliminate(&mut row, &self.rows[&c], c);
                    from = c + 1;
                }
            }
        }
    }

    /// Adds `v` to the spanned subspace; returns whether the rank grew.
    pub fn insert(&mut self, v: &SparseVec) -> bool {
        if v.is_zero() {
            return false;
        }
        let mut row = self.reduce_int(to_int_row(v));
        let pivot = match row.keys().next() {
            Some(&c) => c,
            None => return false,
        };
        if row[&pivot].is_negative() {
            for x in row.values_mut() {
                *x = -std::mem::take(x);
            }
        }
        self.rows.insert(pivot, row);
        true
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        v.is_zero() || self.reduce_int(to_int_row(v)).is_empty()
    }

    /// Reduced row-echelon form: each row has pivot 1 and zeros in every
    /// other pivot column.
    pub fn reduced(&self) -> Reduced {
        let mut rows = self.rows.clone();
        let pivots: Vec<usize> = rows.keys().copied().collect();
        for (idx, &c) in pivots.iter().enumerate().rev() {
            let source = rows[&c].clone();
            for &earlier in &pivots[..idx] {
                let target = rows.get_mut(&earlier).expect("pivot row");
                if target.contains_key(&c) {
                    eliminate(target, &source, c);
                }
            }
        }
        let rows = rows
            .into_iter()
            .map(|(c, row)| {
                let p = row[&c].clone();
                let r: SparseVec = row
                    .into_iter()
                    .map(|(k, v)| (k, Rational::new(v, p.clone())))
                    .collect();
                (c, r)
            })
            .collect();
        Reduced { rows }
    }
}

/// Reduced row-echelon basis of a subspace.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduced {
    rows: BTreeMap<usize, SparseVec>,
}

impl Reduced {
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.rows.contains_key(&col)
    }

    pub fn rows(&self) -> impl Iterator<Item = &SparseVec> {
        self.rows.values()
    }

    /// Canonical representative of `v` modulo the subspace: the unique vector
    /// congruent to `v` with zero entries in every pivot column.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut out = v.clone();
        for (c, row) in &self.rows {
            let a = out.coeff(c);
            if !a.is_zero() {
                out.add_scaled(row, &-a);
            }
        }
        out
    }

    /// Basis of `{x : row · x = 0 for every row}` in a space of `cols`
    /// coordinates, one vector per free column in increasing column order.
    pub fn null_space(&self, cols: usize) -> Vec<Vec<Rational>> {
        (0..cols)
            .filter(|c| !self.rows.contains_key(c))
            .map(|free| {
                let mut v = vec![Rational::zero(); cols];
                v[free] = Rational::one();
                for (&c, row) in &self.rows {
                    if let Some(a) = row.get(&free) {
                        v[c] = -a.clone();
                    }
                }
                v
            })
            .collect()
    }
}

pub fn echelon_of<'a>(vectors: impl IntoIterator<Item = &'a SparseVec>) -> Echelon {
    let mut e = Echelon::new();
    for v in vectors {
        e.insert(v);
    }
    e
}

pub fn rank(m: &SparseMatrix) -> usize {
    echelon_of(&m.row_vectors()).rank()
}

/// Rank of `m` and a basis of its right kernel `{v : m·v = 0}`.
///
/// Kernel vectors are indexed by the free columns of the reduced row-echelon
/// form in increasing order; each has a 1 in its own free column.
pub fn rank_and_kernel(m: &SparseMatrix) -> (usize, Vec<Vec<Rational>>) {
    let reduced = echelon_of(&m.row_vectors()).reduced();
    (reduced.rank(), reduced.null_space(m.cols()))
}

/// `ambient_dim − rank(relations)`.
pub fn quotient_dim(ambient_dim: usize, relations: &[Vec<Rational>]) -> Result<usize> {
    let mut e = Echelon::new();
    for r in relations {
        if r.len() != ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: ambient_dim,
                found: r.len(),
            });
        }
        e.insert(&from_dense(r));
    }
    Ok(ambient_dim - e.rank())
}

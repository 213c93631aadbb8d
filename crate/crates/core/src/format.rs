//! JSON structure-constant files and text rendering of elements.
//!
//! Algebra files look like
//!
//! ```json
//! {"dim": 3, "kind": "leibniz",
//!  "bracket": [{"i": 1, "j": 2, "c": [{"k": 3, "v": "1"}]}]}
//! ```
//!
//! with `"lie_bracket"` and `"product"` in place of `"bracket"` for
//! `"kind": "mu"`. Indices are 1-based, absent pairs are zero and `"v"` is a
//! rational string. Output rows are sorted by `(i, j)` and entries by `k`.

use std::collections::BTreeSet;

use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use crate::algebra::{MuAlgebra, StructureAlgebra, Table};
use crate::error::{Error, Result};
use crate::free_lie::{LyndonCoords, Word};
use crate::homology::HomologyReport;
use crate::leibniz::LeibElement;
use crate::linalg::{format_rational, parse_rational, SparseVec};
use crate::lincomb::LinComb;
use crate::ronco::{RoncoElement, RoncoKey};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
enum Kind {
    Leibniz,
    Mu,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct AlgebraFile {
    dim: usize,
    kind: Kind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    bracket: Option<Vec<Row>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    lie_bracket: Option<Vec<Row>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    product: Option<Vec<Row>>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Row {
    i: usize,
    j: usize,
    c: Vec<Entry>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Entry {
    k: usize,
    v: String,
}

/// A loaded algebra file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgebraData {
    Leibniz(StructureAlgebra),
    Mu(MuAlgebra),
}

fn rows_of(table: &Table) -> Vec<Row> {
    table
        .iter()
        .map(|(&(i, j), v)| Row {
            i: i + 1,
            j: j + 1,
            c: v.iter()
                .map(|(&k, c)| Entry {
                    k: k + 1,
                    v: format_rational(c),
                })
                .collect(),
        })
        .collect()
}

fn read_rows(rows: &[Row], dim: usize, name: &str) -> Result<Vec<(usize, usize, SparseVec)>> {
    let in_range = |x: usize, what: &str| -> Result<usize> {
        if x == 0 || x > dim {
            Err(Error::Format(format!(
                "{name}: {what} index {x} outside 1..={dim}"
            )))
        } else {
            Ok(x - 1)
        }
    };
    let mut seen = BTreeSet::new();
    let mut out = Vec::with_capacity(rows.len());
    for row in rows {
        let (i, j) = (in_range(row.i, "i")?, in_range(row.j, "j")?);
        if !seen.insert((i, j)) {
            return Err(Error::Format(format!(
                "{name}: duplicate row ({}, {})",
                row.i, row.j
            )));
        }
        let mut ks = BTreeSet::new();
        let mut v = SparseVec::zero();
        for e in &row.c {
            let k = in_range(e.k, "k")?;
            if !ks.insert(k) {
                return Err(Error::Format(format!(
                    "{name}: duplicate k = {} in row ({}, {})",
                    e.k, row.i, row.j
                )));
            }
            v.add_term(k, parse_rational(&e.v)?);
        }
        out.push((i, j, v));
    }
    Ok(out)
}

pub fn parse_algebra(text: &str) -> Result<AlgebraData> {
    let file: AlgebraFile = serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))?;
    let dim = file.dim;
    match file.kind {
        Kind::Leibniz => {
            if file.lie_bracket.is_some() || file.product.is_some() {
                return Err(Error::Format(
                    "kind \"leibniz\" takes only \"bracket\"".into(),
                ));
            }
            let rows = file
                .bracket
                .ok_or_else(|| Error::Format("missing \"bracket\"".into()))?;
            let mut a = StructureAlgebra::new(dim);
            for (i, j, v) in read_rows(&rows, dim, "bracket")? {
                a.set_bracket(i, j, v);
            }
            Ok(AlgebraData::Leibniz(a))
        }
        Kind::Mu => {
            if file.bracket.is_some() {
                return Err(Error::Format(
                    "kind \"mu\" takes \"lie_bracket\" and \"product\"".into(),
                ));
            }
            let (lie, product) = match (file.lie_bracket, file.product) {
                (Some(l), Some(p)) => (l, p),
                _ => {
                    return Err(Error::Format(
                        "missing \"lie_bracket\" or \"product\"".into(),
                    ))
                }
            };
            let mut m = MuAlgebra::new(dim);
            for (i, j, v) in read_rows(&lie, dim, "lie_bracket")? {
                m.set_lie(i, j, v);
            }
            for (i, j, v) in read_rows(&product, dim, "product")? {
                m.set_product(i, j, v);
            }
            Ok(AlgebraData::Mu(m))
        }
    }
}

fn to_pretty(file: &AlgebraFile) -> String {
    let mut s = serde_json::to_string_pretty(file).expect("serializable");
    s.push('\n');
    s
}

pub fn algebra_to_json(a: &StructureAlgebra) -> String {
    to_pretty(&AlgebraFile {
        dim: a.dim(),
        kind: Kind::Leibniz,
        bracket: Some(rows_of(a.table())),
        lie_bracket: None,
        product: None,
    })
}

pub fn mu_to_json(m: &MuAlgebra) -> String {
    to_pretty(&AlgebraFile {
        dim: m.dim(),
        kind: Kind::Mu,
        bracket: None,
        lie_bracket: Some(rows_of(m.lie_table())),
        product: Some(rows_of(m.product_table())),
    })
}

pub fn data_to_json(data: &AlgebraData) -> String {
    match data {
        AlgebraData::Leibniz(a) => algebra_to_json(a),
        AlgebraData::Mu(m) => mu_to_json(m),
    }
}

/// `{"dimension": n, "representatives": [["p/q", …], …]}` on one line.
pub fn report_to_json(r: &HomologyReport) -> String {
    let reps: Vec<String> = r
        .representatives
        .iter()
        .map(|v| {
            let entries: Vec<String> = v
                .iter()
                .map(|c| format!("\"{}\"", format_rational(c)))
                .collect();
            format!("[{}]", entries.join(", "))
        })
        .collect();
    format!(
        "{{\"dimension\": {}, \"representatives\": [{}]}}",
        r.dimension,
        reps.join(", ")
    )
}

/// `c₁·t₁ + c₂·t₂ − …` with unit coefficients omitted; `"0"` when empty.
pub fn render_lincomb<K: Ord + Clone>(x: &LinComb<K>, mut key: impl FnMut(&K) -> String) -> String {
    if x.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (n, (k, c)) in x.iter().enumerate() {
        let neg = c.is_negative();
        match (n, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let abs = c.abs();
        if !abs.is_one() {
            out.push_str(&format_rational(&abs));
            out.push('·');
        }
        out.push_str(&key(k));
    }
    out
}

/// Tensor words, e.g. `123 - 132`.
pub fn render_leib(x: &LeibElement, d: usize) -> String {
    render_lincomb(x, |w| w.render(d))
}

/// Generators as `g1`, pairs `σ(ℓ)⊗g_v` as `[ℓ|v]`, e.g. `1/2·[112|2]`.
pub fn render_ronco(x: &RoncoElement, d: usize) -> String {
    render_lincomb(x, |k| match k {
        RoncoKey::Gen(v) => format!("g{v}"),
        RoncoKey::Pair(l, v) => format!("[{}|{}]", l.render(d), Word::letter(*v).render(d)),
    })
}

/// Lyndon basis elements as `σ(ℓ)`.
pub fn render_lyndon(x: &LyndonCoords, d: usize) -> String {
    render_lincomb(x.as_lincomb(), |w| format!("σ({})", w.render(d)))
}

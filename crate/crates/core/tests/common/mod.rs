#![allow(dead_code)]

use proptest::prelude::*;
use ronco_core::algebra::{abelian, cross_product, direct_sum, free_nil2, StructureAlgebra};
use ronco_core::linalg::{ratio, Rational};
use ronco_core::ronco::truncate_to_structure;
use ronco_core::DEFAULT_MAX_DEGREE;

pub fn small_rational() -> impl Strategy<Value = Rational> {
    (-4i64..=4, 1i64..=3).prop_map(|(p, q)| ratio(p, q))
}

pub fn nonzero_rational() -> impl Strategy<Value = Rational> {
    (prop_oneof![-4i64..=-1, 1i64..=4], 1i64..=3).prop_map(|(p, q)| ratio(p, q))
}

pub fn word(d: u32, max_len: usize) -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(1..=d, 1..=max_len)
}

/// Truncations of the free Ronco algebra on at most two generators, the
/// algebras every Ronco-side check runs on.
pub fn ronco_algebras() -> Vec<(String, StructureAlgebra)> {
    let mut out = Vec::new();
    for d in 1..=2 {
        for n in 1..=4 {
            out.push((
                format!("V({d})<={n}"),
                truncate_to_structure(d, n, DEFAULT_MAX_DEGREE).unwrap(),
            ));
        }
    }
    out.push((
        "V(3)<=3".into(),
        truncate_to_structure(3, 3, DEFAULT_MAX_DEGREE).unwrap(),
    ));
    out
}

/// Lie algebras used for homology comparisons.
pub fn lie_algebras() -> Vec<(String, StructureAlgebra)> {
    let mut out = Vec::new();
    for d in 1..=4 {
        out.push((format!("abelian({d})"), abelian(d)));
    }
    for d in 1..=4 {
        out.push((format!("nil2({d})"), free_nil2(d).unwrap()));
    }
    out.push(("cross".into(), cross_product()));
    out.push((
        "nil2(2)+abelian(1)".into(),
        direct_sum(&free_nil2(2).unwrap(), &abelian(1)),
    ));
    out.push((
        "cross+nil2(2)".into(),
        direct_sum(&cross_product(), &free_nil2(2).unwrap()),
    ));
    out
}

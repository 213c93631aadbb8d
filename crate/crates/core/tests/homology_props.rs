mod common;

use common::{lie_algebras, ronco_algebras};
use ronco_core::algebra::{abelian, free_nil2, StructureAlgebra};
use ronco_core::free_lie::witt_dim;
use ronco_core::homology::{h1_adjoint, hl1, hl2, hr0};
use ronco_core::linalg::{echelon_of, from_dense, Echelon, SparseMatrix, SparseVec};
use ronco_core::ronco::{graded_kernel_basis, truncate_to_structure};

/// `𝔤⊗𝔤 → 𝔤`, column `i·n + j`.
fn bracket_matrix(a: &StructureAlgebra) -> SparseMatrix {
    let n = a.dim();
    let mut m = SparseMatrix::new(n, n * n);
    for i in 0..n {
        for j in 0..n {
            for (k, c) in &a.bracket(i, j) {
                m.set(*k, i * n + j, c.clone());
            }
        }
    }
    m
}

/// `d(x⊗y⊗z) = [x,y]⊗z − [x,z]⊗y − x⊗[y,z]`, column `(i·n + j)·n + k`.
fn leibniz_differential(a: &StructureAlgebra) -> SparseMatrix {
    let n = a.dim();
    let mut m = SparseMatrix::new(n * n, n * n * n);
    let mut add = |row: usize, col: usize, c: ronco_core::Rational| {
        let cur = m.get(row, col);
        m.set(row, col, cur + c);
    };
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let col = (i * n + j) * n + k;
                for (t, c) in &a.bracket(i, j) {
                    add(t * n + k, col, c.clone());
                }
                for (t, c) in &a.bracket(i, k) {
                    add(t * n + j, col, -c.clone());
                }
                for (t, c) in &a.bracket(j, k) {
                    add(i * n + t, col, -c.clone());
                }
            }
        }
    }
    m
}

/// Chevalley–Eilenberg differentials with coefficients in the adjoint
/// module; `M⊗𝔤` is indexed `m·n + x`, `M⊗Λ²𝔤` by `(m, x < y)`.
fn adjoint_differentials(a: &StructureAlgebra) -> (SparseMatrix, Vec<SparseVec>) {
    let n = a.dim();
    let mut d1 = SparseMatrix::new(n, n * n);
    for m in 0..n {
        for x in 0..n {
            for (k, c) in &a.bracket(x, m) {
                d1.set(*k, m * n + x, c.clone());
            }
        }
    }
    let mut d2 = Vec::new();
    for m in 0..n {
        for x in 0..n {
            for y in x + 1..n {
                let mut v = SparseVec::zero();
                for (k, c) in &a.bracket(x, m) {
                    v.add_term(k * n + y, -c.clone());
                }
                for (k, c) in &a.bracket(y, m) {
                    v.add_term(k * n + x, c.clone());
                }
                for (k, c) in &a.bracket(x, y) {
                    v.add_term(m * n + k, -c.clone());
                }
                d2.push(v);
            }
        }
    }
    (d1, d2)
}

fn leibniz_test_algebras() -> Vec<(String, StructureAlgebra)> {
    let mut out = ronco_algebras();
    out.extend(lie_algebras());
    out
}

#[test]
fn leibniz_complex_squares_to_zero() {
    for (name, a) in leibniz_test_algebras() {
        let product = bracket_matrix(&a).mul(&leibniz_differential(&a)).unwrap();
        assert!(product.is_zero(), "{name}");
    }
}

#[test]
fn adjoint_complex_squares_to_zero() {
    for (name, a) in lie_algebras() {
        let (d1, d2) = adjoint_differentials(&a);
        for v in &d2 {
            assert!(d1.mul_sparse(v).is_zero(), "{name}");
        }
    }
}

#[test]
fn hl2_agrees_with_adjoint_homology() {
    for (name, a) in lie_algebras() {
        assert_eq!(
            hl2(&a).unwrap().dimension,
            h1_adjoint(&a).unwrap().dimension,
            "{name}"
        );
    }
}

#[test]
fn free_nil2_hr0_dimensions() {
    let expected = [1, 3, 7, 14, 25];
    for d in 1..=5 {
        let formula = d * (d + 1) / 2 + d * (d - 1) * (d.max(2) - 2) / 6;
        assert_eq!(formula, expected[d - 1]);
        assert_eq!(
            hr0(&free_nil2(d).unwrap()).unwrap().dimension,
            formula,
            "d={d}"
        );
    }
}

#[test]
fn graded_kernel_dimensions() {
    let counts: Vec<usize> = (2..=6)
        .map(|n| graded_kernel_basis(2, n, 8).unwrap().len())
        .collect();
    assert_eq!(counts, [3, 0, 1, 0, 3]);
    for d in 1..=3 {
        for n in 2..=6 {
            let expected = d as u64 * witt_dim(d, n - 1).unwrap() - witt_dim(d, n).unwrap();
            assert_eq!(graded_kernel_basis(d, n, 8).unwrap().len() as u64, expected);
        }
    }
}

#[test]
fn hl1_values() {
    assert_eq!(hl1(&abelian(3)).unwrap().dimension, 3);
    assert_eq!(hl1(&free_nil2(2).unwrap()).unwrap().dimension, 2);
    assert_eq!(
        hl1(&truncate_to_structure(2, 4, 8).unwrap())
            .unwrap()
            .dimension,
        2
    );
}

/// `reps` are independent modulo `image` and all lie in the kernel of `z`.
fn assert_genuine(
    name: &str,
    reps: &[Vec<ronco_core::Rational>],
    z: Option<&SparseMatrix>,
    image: &Echelon,
) {
    let mut e = image.clone();
    for r in reps {
        let v = from_dense(r);
        if let Some(z) = z {
            assert!(z.mul_sparse(&v).is_zero(), "{name}: not a cycle");
        }
        assert!(e.insert(&v), "{name}: dependent representative");
    }
}

#[test]
fn representatives_are_genuine() {
    for (name, a) in leibniz_test_algebras() {
        let n = a.dim();
        let report = hl2(&a).unwrap();
        let bracket = bracket_matrix(&a);
        let d = leibniz_differential(&a);
        let image = echelon_of(&d.transpose().row_vectors());
        let cycles = n * n - ronco_core::linalg::rank(&bracket);
        assert_eq!(report.dimension, cycles - image.rank(), "{name}");
        assert_eq!(report.representatives.len(), report.dimension);
        assert_genuine(&name, &report.representatives, Some(&bracket), &image);
    }
    for (name, a) in lie_algebras() {
        let n = a.dim();
        let report = h1_adjoint(&a).unwrap();
        let (d1, d2) = adjoint_differentials(&a);
        let image = echelon_of(&d2);
        let cycles = n * n - ronco_core::linalg::rank(&d1);
        assert_eq!(report.dimension, cycles - image.rank(), "{name}");
        assert_genuine(&name, &report.representatives, Some(&d1), &image);

        let report = hr0(&a).unwrap();
        let mut index = std::collections::BTreeMap::new();
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
                for k in 0..n {
                    let mut r = SparseVec::zero();
                    for (m, c) in &a.bracket(j, k) {
                        r.add_term(sym(i, *m), c.clone());
                    }
                    for (m, c) in &a.bracket(i, j) {
                        r.add_term(sym(*m, k), -c.clone());
                    }
                    relations.insert(&r);
                }
            }
        }
        assert_eq!(report.dimension, index.len() - relations.rank(), "{name}");
        assert_genuine(&name, &report.representatives, None, &relations);
    }
}

//! Acceptance suite: one PASS/FAIL line per criterion. Every check is exact.
//!
//! Values that the library computes are compared against oracles written
//! here from first principles: brute-force Lyndon counting, a direct
//! tensor-algebra model of basis bracketings, and explicit chain matrices.

use std::collections::{BTreeMap, HashMap};
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use ronco_core::algebra::{
    abelian, cross_product, direct_sum, free_nil2, mu_to_ronco, ronco_to_mu, verify_mu,
    verify_variety, MuAlgebra, StructureAlgebra, Variety,
};
use ronco_core::free_lie::{expand_to_tensor, lyndon_words, LyndonCoords, Word};
use ronco_core::homology::{h1_adjoint, hl2, hr0};
use ronco_core::leibniz::{leib_bracket, LeibElement};
use ronco_core::linalg::{rat, ratio, Echelon, Rational, SparseVec};
use ronco_core::ronco::{
    degree_basis, generator, graded_dim, graded_kernel_basis, project, ronco_bracket,
    truncate_to_structure, truncation_basis, RoncoElement, RoncoKey,
};
use ronco_core::{LinComb, DEFAULT_MAX_DEGREE};

const CAP: usize = DEFAULT_MAX_DEGREE;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);
type Transcript<'a> = (Vec<&'a str>, Box<dyn Fn(&str) -> bool>);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

// ---------------------------------------------------------------------------
// Oracles

/// Counts words of length `n` over `d` letters strictly smaller than each
/// of their proper rotations.
fn brute_witt(d: usize, n: usize) -> u64 {
    let total = d.pow(n as u32);
    let mut count = 0;
    for code in 0..total {
        let mut w = Vec::with_capacity(n);
        let mut c = code;
        for _ in 0..n {
            w.push(c % d);
            c /= d;
        }
        w.reverse();
        if (1..n).all(|r| {
            let rot: Vec<usize> = w[r..].iter().chain(&w[..r]).copied().collect();
            w < rot
        }) {
            count += 1;
        }
    }
    count
}

fn is_lyndon(w: &[u32]) -> bool {
    (1..w.len()).all(|r| {
        let rot: Vec<u32> = w[r..].iter().chain(&w[..r]).copied().collect();
        w < &rot[..]
    })
}

type Poly = BTreeMap<Vec<u32>, Rational>;

fn poly_add(acc: &mut Poly, p: &Poly, c: &Rational) {
    for (w, a) in p {
        let e = acc.entry(w.clone()).or_insert_with(|| rat(0));
        *e += a * c;
        if *e == rat(0) {
            acc.remove(w);
        }
    }
}

fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (u, x) in a {
        for (v, y) in b {
            let w: Vec<u32> = u.iter().chain(v).copied().collect();
            poly_add(&mut out, &Poly::from([(w, rat(1))]), &(x * y));
        }
    }
    out
}

fn poly_commutator(a: &Poly, b: &Poly) -> Poly {
    let mut out = poly_mul(a, b);
    poly_add(&mut out, &poly_mul(b, a), &rat(-1));
    out
}

fn letter(v: u32) -> Poly {
    Poly::from([(vec![v], rat(1))])
}

/// Basis bracketing of a Lyndon word via its standard factorization, in
/// the tensor algebra.
fn bracketing(w: &[u32]) -> Poly {
    if w.len() == 1 {
        return letter(w[0]);
    }
    let split = (1..w.len()).find(|&i| is_lyndon(&w[i..])).unwrap();
    poly_commutator(&bracketing(&w[..split]), &bracketing(&w[split..]))
}

/// `[[…[u₁,u₂],…],uₖ]` in the tensor algebra.
fn left_normed_poly(u: &[u32]) -> Poly {
    let mut acc = letter(u[0]);
    for &v in &u[1..] {
        acc = poly_commutator(&acc, &letter(v));
    }
    acc
}

fn poly_of(x: &LinComb<Word>) -> Poly {
    x.iter()
        .map(|(w, c)| (w.letters().to_vec(), c.clone()))
        .collect()
}

fn ronco_test_algebras() -> Vec<(String, StructureAlgebra)> {
    let mut out = Vec::new();
    for d in 1..=2 {
        for n in 1..=4 {
            out.push((
                format!("V({d})<={n}"),
                truncate_to_structure(d, n, CAP).unwrap(),
            ));
        }
    }
    out.push(("V(3)<=3".into(), truncate_to_structure(3, 3, CAP).unwrap()));
    out.push(("abelian(3)".into(), abelian(3)));
    out.push(("nil2(3)".into(), free_nil2(3).unwrap()));
    out.push(("cross".into(), cross_product()));
    out.push((
        "V(1)<=3 + cross".into(),
        direct_sum(&truncate_to_structure(1, 3, CAP).unwrap(), &cross_product()),
    ));
    out
}

// ---------------------------------------------------------------------------
// Criteria

fn criterion_1() -> Outcome {
    for d in 1..=3 {
        let mut spans: Vec<Vec<RoncoElement>> = vec![Vec::new()];
        spans.push((1..=d as u32).map(generator).collect());
        for n in 1..=6 {
            let expected = if n == 1 {
                d as u64
            } else {
                d as u64 * brute_witt(d, n - 1)
            };
            let got = graded_dim(d, n).map_err(|e| e.to_string())?;
            ensure(got == expected, || {
                format!("graded_dim({d},{n}) = {got}, expected {expected}")
            })?;
            if n == 1 {
                continue;
            }
            let index: HashMap<RoncoKey, usize> = degree_basis(d, n)
                .unwrap()
                .into_iter()
                .enumerate()
                .map(|(i, k)| (k, i))
                .collect();
            let mut e = Echelon::new();
            let mut basis = Vec::new();
            for k in 1..n {
                for x in &spans[k] {
                    for y in &spans[n - k] {
                        let b = ronco_bracket(x, y, CAP).map_err(|e| e.to_string())?;
                        if e.insert(&b.map_keys(|key| index[key])) {
                            basis.push(b);
                        }
                    }
                }
            }
            ensure(e.rank() as u64 == expected, || {
                format!(
                    "span of degree-{n} products for d={d} has rank {}, expected {expected}",
                    e.rank()
                )
            })?;
            spans.push(basis);
        }
    }
    Ok("d ≤ 3, n ≤ 6: dimension formula and product span agree".into())
}

fn random_leib(rng: &mut ChaCha8Rng, d: u32, deg: usize) -> LeibElement {
    let terms = rng.gen_range(1..=3);
    (0..terms)
        .map(|_| {
            let len = rng.gen_range(1..=deg);
            let w: Vec<u32> = (0..len).map(|_| rng.gen_range(1..=d)).collect();
            (
                Word::new(w).unwrap(),
                ratio(rng.gen_range(-4..=4), rng.gen_range(1..=3)),
            )
        })
        .collect()
}

fn criterion_2() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut nonzero = 0;
    for trial in 0..200 {
        let d = rng.gen_range(1..=3);
        let a = rng.gen_range(1..=5);
        let b = rng.gen_range(1..=6 - a);
        let x = random_leib(&mut rng, d, a);
        let y = random_leib(&mut rng, d, b);
        let lhs = project(&leib_bracket(&x, &y, CAP).map_err(|e| e.to_string())?);
        let rhs = ronco_bracket(&project(&x), &project(&y), CAP).map_err(|e| e.to_string())?;
        ensure(lhs == rhs, || {
            format!("pair {trial} differs: {x:?} / {y:?}")
        })?;
        nonzero += usize::from(!lhs.is_zero());
    }
    Ok(format!("200 seeded pairs, {nonzero} with nonzero bracket"))
}

fn criterion_3() -> Outcome {
    let mut count = 0;
    for d in 1..=2 {
        for n in 1..=4 {
            let a = truncate_to_structure(d, n, CAP).map_err(|e| e.to_string())?;
            let report = verify_variety(&a, Variety::Ronco);
            ensure(report.is_ok(), || format!("V({d})<={n}: {report}"))?;
            let e = SparseVec::basis;
            let dim = a.dim();
            for i in 0..dim {
                for j in 0..dim {
                    let sq = a.bracket_vec(&a.bracket(i, i), &e(j));
                    ensure(sq.is_zero(), || {
                        format!("[[e{i},e{i}],e{j}] ≠ 0 in V({d})<={n}")
                    })?;
                    let ij = a.bracket(i, j) + a.bracket(j, i);
                    for k in 0..dim {
                        ensure(a.bracket_vec(&ij, &e(k)).is_zero(), || {
                            format!("polarized square fails at ({i},{j},{k}) in V({d})<={n}")
                        })?;
                    }
                }
            }
            count += 1;
        }
    }
    Ok(format!("{count} truncations pass with zero violations"))
}

fn criterion_4() -> Outcome {
    let counts: Vec<usize> = (2..=6)
        .map(|n| graded_kernel_basis(2, n, CAP).map(|b| b.len()))
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;
    let oracle: Vec<usize> = (2..=6)
        .map(|n| (2 * brute_witt(2, n - 1) - brute_witt(2, n)) as usize)
        .collect();
    ensure(counts == [3, 0, 1, 0, 3] && counts == oracle, || {
        format!("kernel sizes {counts:?}, oracle {oracle:?}")
    })?;
    let mut checked = 0;
    for n in 2..=6 {
        let others: Vec<RoncoKey> = truncation_basis(2, CAP - n).unwrap();
        for k in graded_kernel_basis(2, n, CAP).unwrap() {
            ensure(!k.is_zero(), || "zero kernel vector".into())?;
            for key in &others {
                let y = RoncoElement::basis(key.clone());
                let l = ronco_bracket(&k, &y, CAP).map_err(|e| e.to_string())?;
                let r = ronco_bracket(&y, &k, CAP).map_err(|e| e.to_string())?;
                ensure(l.is_zero() && r.is_zero(), || {
                    format!("kernel element of degree {n} not central")
                })?;
                checked += 1;
            }
        }
    }
    Ok(format!(
        "sizes 3, 0, 1, 0, 3; centrality on {checked} basis pairs"
    ))
}

fn criterion_5() -> Outcome {
    let mut dims = Vec::new();
    for d in 1..=5usize {
        let binom3 = if d >= 3 { d * (d - 1) * (d - 2) / 6 } else { 0 };
        let expected = d * (d + 1) / 2 + binom3;
        let got = hr0(&free_nil2(d).unwrap())
            .map_err(|e| e.to_string())?
            .dimension;
        ensure(got == expected, || {
            format!("d={d}: hr0 = {got}, expected {expected}")
        })?;
        dims.push(got);
    }
    ensure(dims == [1, 3, 7, 14, 25], || format!("{dims:?}"))?;
    Ok("1, 3, 7, 14, 25".into())
}

fn criterion_6() -> Outcome {
    let mut algebras: Vec<(String, StructureAlgebra)> = Vec::new();
    for d in 1..=4 {
        algebras.push((format!("abelian({d})"), abelian(d)));
        algebras.push((format!("nil2({d})"), free_nil2(d).unwrap()));
    }
    algebras.push(("cross".into(), cross_product()));
    algebras.push((
        "nil2(2)+abelian(1)".into(),
        direct_sum(&free_nil2(2).unwrap(), &abelian(1)),
    ));
    let mut summary = Vec::new();
    for (name, a) in &algebras {
        let l = hl2(a).map_err(|e| format!("{name}: {e}"))?.dimension;
        let r = h1_adjoint(a).map_err(|e| format!("{name}: {e}"))?.dimension;
        ensure(l == r, || format!("{name}: hl2 = {l}, h1_adjoint = {r}"))?;
        summary.push(format!("{name}={l}"));
    }
    Ok(summary.join(" "))
}

fn x_lie(m: &MuAlgebra, i: usize, j: usize, k: usize) -> SparseVec {
    m.product_vec(&SparseVec::basis(i), &m.lie(j, k))
}

fn criterion_7() -> Outcome {
    let mut symmetric = 0;
    let algebras = ronco_test_algebras();
    for (name, a) in &algebras {
        let m = ronco_to_mu(a).map_err(|e| format!("{name}: {e}"))?;
        let report = verify_mu(&m, false);
        ensure(report.is_ok(), || format!("{name}: {report}"))?;
        let back = mu_to_ronco(&m).map_err(|e| format!("{name}: {e}"))?;
        let report = verify_variety(&back, Variety::Ronco);
        ensure(report.is_ok(), || format!("{name}: {report}"))?;
        ensure(&back == a, || format!("{name}: Ronco round trip differs"))?;
        ensure(ronco_to_mu(&back).unwrap() == m, || {
            format!("{name}: μ round trip differs")
        })?;

        let n = a.dim();
        let is_sym = verify_variety(a, Variety::SymmetricLeibniz).is_ok();
        let kills = (0..n).all(|i| (0..n).all(|j| (0..n).all(|k| x_lie(&m, i, j, k).is_zero())));
        ensure(is_sym == kills, || {
            format!("{name}: symmetric = {is_sym}, x{{y,z}} = 0 is {kills}")
        })?;
        ensure(is_sym == verify_mu(&m, true).is_ok(), || {
            format!("{name}: symmetric μ check disagrees")
        })?;
        if kills {
            ensure(
                verify_variety(&back, Variety::SymmetricLeibniz).is_ok(),
                || format!("{name}: symmetric μ-algebra gives a non-symmetric Leibniz algebra"),
            )?;
            symmetric += 1;
        }
    }
    ensure(symmetric > 0 && symmetric < algebras.len(), || {
        "symmetric cases not exercised".into()
    })?;
    Ok(format!(
        "{} algebras, {symmetric} symmetric",
        algebras.len()
    ))
}

fn criterion_8() -> Outcome {
    let two = rat(2);
    let mut triples = 0;
    for (name, a) in ronco_test_algebras() {
        let m = ronco_to_mu(&a).map_err(|e| e.to_string())?;
        let e = SparseVec::basis;
        let br = |x: &SparseVec, y: &SparseVec| a.bracket_vec(x, y);
        let n = a.dim();
        for i in 0..n {
            for j in 0..n {
                ensure(x_lie(&m, i, i, j).is_zero(), || {
                    format!("{name}: x{{x,y}} ≠ 0 at ({i},{j})")
                })?;
                for k in 0..n {
                    let (x, y, z) = (e(i), e(j), e(k));
                    let cyclic = br(&br(&x, &y), &z) + br(&br(&y, &z), &x) + br(&br(&z, &x), &y);
                    ensure(x_lie(&m, i, j, k).scale(&two) == cyclic, || {
                        format!("{name}: (ps) at ({i},{j},{k})")
                    })?;
                    let lhs = m.lie_vec(&x, &m.lie(j, k)).scale(&two);
                    let rhs = br(&br(&x, &y), &z) + br(&br(&z, &x), &y) - br(&br(&y, &z), &x);
                    ensure(lhs == rhs, || format!("{name}: (ms) at ({i},{j},{k})"))?;
                    ensure((x_lie(&m, i, j, k) + x_lie(&m, j, i, k)).is_zero(), || {
                        format!("{name}: skew-symmetry at ({i},{j},{k})")
                    })?;
                    triples += 1;
                }
            }
        }
    }
    Ok(format!("{triples} basis triples"))
}

fn criterion_9() -> Outcome {
    let mut count = 0;
    for d in 1..=3 {
        for n in 1..=6 {
            for w in lyndon_words(d, n).map_err(|e| e.to_string())? {
                let expanded =
                    expand_to_tensor(&LyndonCoords::sigma(w.clone()).map_err(|e| e.to_string())?);
                let oracle = bracketing(w.letters());
                ensure(poly_of(&expanded) == oracle, || {
                    format!("expansion of {w:?} differs")
                })?;
                let mut image = Poly::new();
                for (u, c) in &oracle {
                    poly_add(&mut image, &left_normed_poly(u), c);
                }
                let mut scaled = Poly::new();
                poly_add(&mut scaled, &oracle, &rat(n as i64));
                ensure(image == scaled, || {
                    format!("left-normed image of {w:?} is not {n}·σ")
                })?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} Lyndon basis elements"))
}

fn criterion_10() -> Outcome {
    let exe = env!("CARGO_BIN_EXE_ronco");
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let nil = dir.path().join("nil2.json");
    let run = |args: &[&str]| -> Result<Vec<u8>, String> {
        let out = std::process::Command::new(exe)
            .args(args)
            .env_remove("RONCO_MAX_DEGREE")
            .output()
            .map_err(|e| e.to_string())?;
        ensure(out.status.success(), || {
            format!("{args:?} exited with {:?}", out.status)
        })?;
        Ok(out.stdout)
    };
    let nil_path = nil.to_str().unwrap();
    let transcripts: Vec<Transcript> = vec![
        (
            vec!["ronco-eval", "--gens", "2", "--expr", "[[g1,g1],g2]"],
            Box::new(|s| s == "0\n"),
        ),
        (
            vec!["witt", "--gens", "2", "--max", "4"],
            Box::new(|s| s == "1\t2\n2\t1\n3\t2\n4\t3\n"),
        ),
        (
            vec!["homology", "--which", "hr0", nil_path],
            Box::new(|s| s.starts_with("{\"dimension\": 7, ")),
        ),
    ];
    let json = run(&["free-nil2", "--dim", "3"])?;
    std::fs::write(&nil, &json).map_err(|e| e.to_string())?;
    for (args, golden) in &transcripts {
        let first = run(args)?;
        let second = run(args)?;
        ensure(first == second, || {
            format!("{args:?}: output differs between runs")
        })?;
        let text = String::from_utf8(first).map_err(|e| e.to_string())?;
        ensure(golden(&text), || {
            format!("{args:?}: unexpected output {text:?}")
        })?;
    }
    ensure(json == run(&["free-nil2", "--dim", "3"])?, || {
        "free-nil2 output differs".into()
    })?;
    Ok("3 transcripts byte-identical across runs".into())
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("free Ronco graded dimensions", criterion_1),
        ("projection preserves the bracket", criterion_2),
        ("truncations are Ronco algebras", criterion_3),
        ("graded kernel sizes and centrality", criterion_4),
        ("HR0 of free nil2", criterion_5),
        ("HL2 equals adjoint H1", criterion_6),
        ("Ronco / mu-algebra equivalence", criterion_7),
        ("converted-algebra identities", criterion_8),
        ("left-normed bracketing scales by degree", criterion_9),
        ("CLI golden transcripts", criterion_10),
    ];
    let mut failed = 0;
    for (n, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        let (tag, detail) = match outcome {
            Ok(d) => ("PASS", d),
            Err(d) => {
                failed += 1;
                ("FAIL", d)
            }
        };
        let slow = if secs > 10.0 { " [over 10s]" } else { "" };
        println!(
            "criterion {:>2} {tag}  {name} ({secs:.2}s{slow}): {detail}",
            n + 1
        );
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}

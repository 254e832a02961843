use coalgebra_core::json::CoalgebraJson;
use coalgebra_core::linalg::{kernel, rank, unit_vec};
use coalgebra_core::*;
use proptest::prelude::*;

fn s(v: i64) -> Scalar {
    Scalar::from_int(v)
}

/// Matrix coalgebra M^c(r): Δ(e_ij) = Σ_t e_it⊗e_tj, basis index i·r + j.
fn matrix_coalgebra(r: usize) -> Coalgebra {
    let labels = (0..r * r).map(|p| format!("e{}{}", p / r, p % r)).collect();
    let delta = (0..r * r).map(|p| (0..r).map(|t| ((p / r) * r + t, t * r + p % r, s(1))).collect()).collect();
    let counit = (0..r * r).map(|p| if p / r == p % r { s(1) } else { s(0) }).collect();
    Coalgebra::new(labels, delta, counit).unwrap()
}

/// Divided powers: Δ(c_k) = Σ c_i⊗c_{k−i}, ε(c_k) = δ_k0.
fn divided_powers(n: usize) -> Coalgebra {
    let labels = (0..=n).map(|k| format!("c{k}")).collect();
    let delta = (0..=n).map(|k| (0..=k).map(|i| (i, k - i, s(1))).collect()).collect();
    let counit = (0..=n).map(|k| s((k == 0) as i64)).collect();
    Coalgebra::new(labels, delta, counit).unwrap()
}

/// Path coalgebra of a → b: Δα = e_a⊗α + α⊗e_b.
fn arrow_coalgebra() -> Coalgebra {
    Coalgebra::new(
        vec!["ea".into(), "eb".into(), "alpha".into()],
        vec![vec![(0, 0, s(1))], vec![(1, 1, s(1))], vec![(0, 2, s(1)), (2, 1, s(1))]],
        vec![s(1), s(1), s(0)],
    )
    .unwrap()
}

/// Direct sum of coalgebras, relabelled.
fn direct_sum(a: &Coalgebra, b: &Coalgebra) -> Coalgebra {
    let n = a.dim();
    let mut triples = Vec::new();
    let mut counit = Vec::new();
    for (off, c) in [(0, a), (n, b)] {
        for i in 0..c.dim() {
            for (j, k, x) in c.delta_basis(i) {
                triples.push((off + i, off + j, off + k, x.clone()));
            }
            counit.push((off + i, c.counit_basis(i).clone()));
        }
    }
    let labels = a.labels().iter().chain(b.labels()).enumerate().map(|(i, l)| format!("{l}#{i}")).collect();
    Coalgebra::from_triples(labels, triples, counit).unwrap()
}

#[test]
fn standard_coalgebras_satisfy_the_axioms() {
    for c in [matrix_coalgebra(1), matrix_coalgebra(3), divided_powers(5), arrow_coalgebra()] {
        assert!(verify_coalgebra(&c, Exec::default()).passed());
    }
    // doubling c1⊗c1 in Δ(c2) only rescales c2; doubling c0⊗c2 breaks the counit law
    assert!(verify_coalgebra(&divided_powers(3).with_delta_coefficient(2, 1, 1, s(2)).unwrap(), Exec::default()).passed());
    let broken = divided_powers(3).with_delta_coefficient(2, 0, 2, s(2)).unwrap();
    assert!(!verify_coalgebra(&broken, Exec::default()).passed());
}

#[test]
fn matrix_coalgebra_is_simple() {
    let c = matrix_coalgebra(3);
    let cor = coradical(&c, Exec::default()).unwrap();
    assert_eq!(cor.blocks.len(), 1);
    assert_eq!(cor.blocks[0].size, 3);
    assert!(is_multiplicative(&cor.blocks[0].matrix, &c));
    assert!(is_basic(&cor.blocks[0].matrix, &c));
    assert_eq!(coradical_filtration(&c, Exec::default()).unwrap().loewy_length(), 1);
    for r in 4..=6 {
        let c = matrix_coalgebra(r);
        let cor = coradical(&c, Exec::default()).unwrap();
        assert_eq!(cor.blocks[0].size, r);
        assert!(is_multiplicative(&cor.blocks[0].matrix, &c));
        assert!(is_basic(&cor.blocks[0].matrix, &c));
    }
}

#[test]
fn divided_power_wedges() {
    let n = 7;
    let c = divided_powers(n);
    let upto = |k: usize| Subspace::coordinate(n + 1, 0..=k.min(n));
    for k in 0..n {
        for l in 0..n - k {
            let w = wedge(&upto(k), &upto(l), &c, Exec::default()).unwrap();
            assert_eq!(w, upto(k + l + 1), "C{k} ∧ C{l}");
        }
    }
    let cor = coradical(&c, Exec::default()).unwrap();
    assert_eq!(cor.space, upto(0));
    let f = coradical_filtration(&c, Exec::default()).unwrap();
    assert_eq!(f.dims(), (1..=n + 1).collect::<Vec<_>>());
}

#[test]
fn wedge_is_oriented() {
    let c = arrow_coalgebra();
    let a = Subspace::coordinate(3, [0]);
    let b = Subspace::coordinate(3, [1]);
    let alpha = unit_vec(2);
    assert!(wedge(&a, &b, &c, Exec::default()).unwrap().contains(&alpha));
    assert!(!wedge(&b, &a, &c, Exec::default()).unwrap().contains(&alpha));
    let not_sub = Subspace::coordinate(3, [2]);
    assert!(wedge(&not_sub, &b, &c, Exec::default()).is_err());
}

#[test]
fn coradical_of_a_direct_sum() {
    let c = direct_sum(&direct_sum(&matrix_coalgebra(2), &divided_powers(2)), &arrow_coalgebra());
    let cor = coradical(&c, Exec::default()).unwrap();
    let mut sizes: Vec<usize> = cor.blocks.iter().map(|b| b.size).collect();
    sizes.sort();
    assert_eq!(sizes, vec![1, 1, 1, 2]);
    assert_eq!(cor.space.dim(), 4 + 1 + 2);
    for b in &cor.blocks {
        assert!(is_basic(&b.matrix, &c));
        assert!(is_subcoalgebra(&b.space, &c));
    }
    let seq = coradical(&c, Exec::Sequential).unwrap();
    assert_eq!(seq.space, cor.space);
    assert_eq!(coradical_filtration(&c, Exec::Sequential).unwrap().dims(), coradical_filtration(&c, Exec::Parallel).unwrap().dims());
}

#[test]
fn json_round_trip() {
    let c = divided_powers(4);
    let j = CoalgebraJson::from_coalgebra(&c, None).unwrap();
    assert_eq!(j.field.cyclotomic_order, 1);
    assert_eq!(j.to_coalgebra().unwrap(), c);
    let mut bad = j.clone();
    bad.delta.push((0, 9, 0, "1".into()));
    assert!(bad.to_coalgebra().is_err());
}

fn scalar_in(n: u32) -> impl Strategy<Value = Scalar> {
    proptest::collection::vec((-6i64..=6, 1i64..=5), 1..5).prop_map(move |cs| {
        let mut x = Scalar::zero();
        for (k, (p, q)) in cs.into_iter().enumerate() {
            x = &x + &(&Scalar::frac(p, q) * &Scalar::zeta_pow(n, k as i64));
        }
        x
    })
}

fn field_and_triple() -> impl Strategy<Value = (u32, Scalar, Scalar, Scalar)> {
    prop_oneof![Just(1u32), Just(3), Just(4), Just(5), Just(8), Just(12)]
        .prop_flat_map(|n| (Just(n), scalar_in(n), scalar_in(n), scalar_in(n)))
}

fn int_matrix(max: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1..=max, 1..=max).prop_flat_map(|(r, c)| proptest::collection::vec(proptest::collection::vec(-3i64..=3, c), r))
}

fn to_mat(m: &[Vec<i64>]) -> Mat {
    Mat::from_rows(m.iter().map(|r| r.iter().map(|&x| s(x)).collect()).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn scalar_field_axioms((_n, a, b, c) in field_and_triple()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        if !a.is_zero() {
            prop_assert_eq!(&a * &a.inv(), Scalar::one());
        }
    }

    #[test]
    fn z_strings_round_trip((n, a, _b, _c) in field_and_triple()) {
        let text = a.to_z_string(n).unwrap();
        prop_assert_eq!(Scalar::parse_z(&text, n).unwrap(), a.clone());
        prop_assert_eq!(Scalar::parse(&a.to_string()).unwrap(), a);
    }

    #[test]
    fn roots_of_unity_have_their_order(n in 1u32..=24, k in 0i64..24) {
        let z = Scalar::zeta_pow(n, k);
        let o = n / num_integer::gcd(n, k as u32 % n.max(1)).max(1);
        prop_assert_eq!(z.pow(n as i64), Scalar::one());
        prop_assert_eq!(z.root_order(), Some(if k as u32 % n == 0 { 1 } else { o }));
    }

    #[test]
    fn rank_nullity(m in int_matrix(6)) {
        let a = to_mat(&m);
        // kernel of the map sending e_j to column j
        let cols = a.transpose().to_sparse_rows();
        let ker = kernel(&cols);
        prop_assert_eq!(ker.len() + a.rank(), a.cols);
        prop_assert_eq!(a.rank(), a.transpose().rank());
        prop_assert_eq!(rank(&a.to_sparse_rows()), a.rank());
        for v in &ker {
            let mut x = Mat::zeros(a.cols, 1);
            for (i, c) in v {
                x.set(*i, 0, c.clone());
            }
            prop_assert!(a.mul(&x).is_zero());
        }
    }

    #[test]
    fn subspace_dimension_formula(m in int_matrix(5), k in int_matrix(5)) {
        let n = m[0].len().max(k[0].len());
        let pad = |rows: &[Vec<i64>]| -> Vec<coalgebra_core::SparseVec> {
            rows.iter().map(|r| r.iter().enumerate().filter(|(_, x)| **x != 0).map(|(i, x)| (i, s(*x))).collect()).collect()
        };
        let a = Subspace::span(n, pad(&m));
        let b = Subspace::span(n, pad(&k));
        let sum = a.sum(&b);
        let int = a.intersect(&b);
        prop_assert_eq!(sum.dim() + int.dim(), a.dim() + b.dim());
        prop_assert!(sum.contains_subspace(&a) && a.contains_subspace(&int) && b.contains_subspace(&int));
    }

    #[test]
    fn determinant_and_inverse(n in 1usize..5, seed in proptest::collection::vec(-4i64..=4, 32)) {
        let m: Vec<Vec<i64>> = (0..n).map(|i| seed[i * n..i * n + n].to_vec()).collect();
        let k: Vec<Vec<i64>> = (0..n).map(|i| seed[16 + i * n..16 + i * n + n].to_vec()).collect();
        let (a, b) = (to_mat(&m), to_mat(&k));
        prop_assert_eq!(a.mul(&b).det(), &a.det() * &b.det());
        match a.inverse() {
            Some(inv) => prop_assert_eq!(a.mul(&inv), Mat::identity(n)),
            None => prop_assert!(a.det().is_zero()),
        }
    }
}

use std::collections::BTreeMap;
use std::sync::Arc;

use coalgebra_core::linalg::Mat;
use coalgebra_core::*;
use fusion::ring::TAU;
use fusion::*;
use hopf_presentations::*;

struct Window {
    t: Truncation,
    c: Arc<Coalgebra>,
    cor: Coradical,
    ring: BasedRing,
}

fn window(spec: TruncationSpec, hopf: PresentedHopf) -> Window {
    let t = truncate_coalgebra(&hopf, &spec).unwrap();
    let c = Arc::new(t.coalgebra.clone());
    let cor = coradical(&c, Exec::default()).unwrap();
    let labels: Vec<String> = cor.blocks.iter().map(|b| t.block_name(&b.space)).collect();
    let one = t.vec_of(&hopf.one()).unwrap();
    let unit = cor.block_of(&one).unwrap();
    let star = star_from_antipode(&cor, &|v| t.antipode_vec(v)).unwrap();
    let ring = fusion_ring_from_coalgebra(&c, &cor, &t, labels, unit, star, Exec::default()).unwrap();
    Window { t, c, cor, ring }
}

fn hefuv(m: i64) -> Window {
    window(TruncationSpec::Cosemisimple(m), build_hefuv())
}

/// The table generated by g² = 1, g·C_i = C_i·g = C_i, C_1·C_1 = 1 + g + C_2 and
/// C_i·C_1 = C_{i+1} + C_{i-1}, using C_2 = C_1·C_1 - 1 - g and C_{j+1} = C_j·C_1 - C_{j-1}.
fn rule_table(max: usize) -> BTreeMap<(String, String), BTreeMap<String, i64>> {
    // coordinates over [1, g, C1, C2, ...], long enough that nothing falls off
    let n = 2 * max + 4;
    let lab = |k: usize| match k {
        0 => "1".to_string(),
        1 => "g".to_string(),
        i => format!("C{}", i - 1),
    };
    let times_c1 = |x: &[i64]| {
        let mut y = vec![0i64; n];
        y[2] += x[0] + x[1];
        y[0] += x[2];
        y[1] += x[2];
        y[3] += x[2];
        for i in 3..n - 1 {
            y[i + 1] += x[i];
            y[i - 1] += x[i];
        }
        y
    };
    let sub = |a: &[i64], b: &[i64]| a.iter().zip(b).map(|(x, y)| x - y).collect::<Vec<i64>>();
    let mut table = BTreeMap::new();
    for a in 0..max + 2 {
        let mut x = vec![0i64; n];
        x[a] = 1;
        let mut xg = vec![0i64; n];
        xg[if a < 2 { 1 - a } else { a }] = 1;
        let mut rows = vec![x.clone(), xg.clone(), times_c1(&x)];
        rows.push(sub(&sub(&times_c1(&rows[2]), &x), &xg));
        while rows.len() < max + 2 {
            let k = rows.len();
            rows.push(sub(&times_c1(&rows[k - 1]), &rows[k - 2]));
        }
        for (b, v) in rows.iter().enumerate() {
            let entry = v.iter().enumerate().filter(|(_, c)| **c != 0).map(|(k, c)| (lab(k), *c)).collect();
            table.insert((lab(a), lab(b)), entry);
        }
    }
    table
}

fn named(r: &BasedRing, i: usize, j: usize) -> Result<BTreeMap<String, i64>, FusionError> {
    Ok(r.product(i, j)?.into_iter().map(|(t, c)| (r.basis[t].clone(), c)).collect())
}

#[test]
fn hefuv_window_matches_the_rules() {
    let w = hefuv(4);
    let r = &w.ring;
    let mut labels = r.basis.clone();
    labels.sort();
    assert_eq!(labels, ["1", "C1", "C2", "C3", "C4", "g"]);
    let rules = rule_table(4);
    let rank = |l: &str| if l.starts_with('C') { l[1..].parse::<usize>().unwrap() } else { 0 };
    let mut compared = 0;
    for i in 0..r.len() {
        for j in 0..r.len() {
            let (a, b) = (&r.basis[i], &r.basis[j]);
            let in_window = rank(a) + rank(b) <= 4;
            match named(r, i, j) {
                Ok(p) => {
                    assert!(in_window, "{a}·{b} should escape");
                    assert_eq!(&p, &rules[&(a.clone(), b.clone())], "{a}·{b}");
                    compared += 1;
                }
                Err(FusionError::Escape { .. }) => assert!(!in_window, "{a}·{b} escaped"),
                Err(e) => panic!("{e}"),
            }
        }
    }
    // ten pairs have rank sum above 4
    assert_eq!(compared, 26);
    assert!(verify_based_ring(r).passed());
    // S fixes every simple subcoalgebra
    assert!(r.star.iter().enumerate().all(|(i, s)| i == *s));
}

#[test]
fn products_by_label() {
    let r = hefuv(4).ring;
    let m = |a: &str, b: &str| r.format(&r.mult(&r.combination(a).unwrap(), &r.combination(b).unwrap()).unwrap());
    let sorted = |s: String| {
        let mut v: Vec<String> = s.split(" + ").map(String::from).collect();
        v.sort();
        v.join(" + ")
    };
    assert_eq!(sorted(m("C1", "C1")), "1 + C2 + g");
    assert_eq!(sorted(m("C2", "C1")), "C1 + C3");
    assert_eq!(m("1", "C3"), "C3");
    let escaped = r.mult(&r.combination("C4").unwrap(), &r.combination("C1").unwrap());
    match escaped {
        Err(FusionError::Escape { missing, .. }) => assert!(missing.contains('5'), "{missing}"),
        other => panic!("{other:?}"),
    }
}

#[test]
fn coradical_of_h3_gives_the_same_ring() {
    let w = window(TruncationSpec::Hefuv(3), build_hefuv());
    let mut labels = w.ring.basis.clone();
    labels.sort();
    assert_eq!(labels, ["1", "C1", "C2", "C3", "C4", "g"]);
    assert!(verify_based_ring(&w.ring).passed());
    let c1 = w.ring.index("C1").unwrap();
    assert!(matches!(w.ring.is_central(c1), Err(FusionError::Escape { .. })));
    assert!(w.ring.escapes().all(|(i, j, _)| i != w.ring.unit && j != w.ring.unit));
    let small = hefuv(4).ring;
    for i in 0..small.len() {
        for j in 0..small.len() {
            let (a, b) = (&small.basis[i], &small.basis[j]);
            let (ii, jj) = (w.ring.index(a).unwrap(), w.ring.index(b).unwrap());
            if let (Ok(p), Ok(q)) = (named(&small, i, j), named(&w.ring, ii, jj)) {
                assert_eq!(p, q, "{a}·{b}");
            }
        }
    }
}

#[test]
fn decompositions_come_with_similarity_matrices() {
    let w = hefuv(4);
    let idx = |l: &str| w.cor.blocks.iter().position(|b| w.t.block_name(&b.space) == l).unwrap();
    let unit = &w.cor.blocks[idx("1")].matrix;
    let c1 = &w.cor.blocks[idx("C1")].matrix;
    let d = tensor_decompose(&w.c, &w.cor, &w.t, unit, c1).unwrap();
    assert_eq!(d.blocks, vec![idx("C1")]);
    assert_eq!(d.l, Mat::identity(2));

    for (a, b) in [("C1", "C1"), ("C2", "C1"), ("C1", "C2"), ("g", "C3"), ("C2", "C2")] {
        let (ba, bb) = (&w.cor.blocks[idx(a)], &w.cor.blocks[idx(b)]);
        let d = tensor_decompose(&w.c, &w.cor, &w.t, &ba.matrix, &bb.matrix).unwrap();
        let total: usize = d.blocks.iter().map(|k| w.cor.blocks[*k].size).sum();
        assert_eq!(total, ba.size * bb.size);
        let conj = conjugate(&d.l, &d.product, &d.l.inverse().unwrap());
        let mut start = 0;
        for (k, blk) in d.blocks.iter().enumerate() {
            let e = d.diagonal_block(&w.cor, k);
            assert!(is_multiplicative(&e, &w.c));
            assert!(is_basic(&e, &w.c));
            assert_eq!(e, w.cor.blocks[*blk].matrix);
            let size = w.cor.blocks[*blk].size;
            // off-diagonal blocks vanish
            for r in start..start + size {
                for c in 0..conj.cols() {
                    if c < start || c >= start + size {
                        assert!(conj.get(r, c).is_empty());
                    }
                }
            }
            start += size;
        }
    }
}

#[test]
fn associativity_in_window() {
    let r = hefuv(6).ring;
    let mut checked = 0;
    for a in 0..r.len() {
        for b in 0..r.len() {
            for c in 0..r.len() {
                let (x, y, z) = (r.basis_element(a), r.basis_element(b), r.basis_element(c));
                let left = r.mult(&x, &y).and_then(|p| r.mult(&p, &z));
                let right = r.mult(&y, &z).and_then(|p| r.mult(&x, &p));
                if let (Ok(l), Ok(rt)) = (left, right) {
                    assert_eq!(l, rt);
                    checked += 1;
                }
            }
        }
    }

    assert!(checked > 150);
}

#[test]
fn broken_tau_fails() {
    let r = hefuv(3).ring;
    let g = r.index("g").unwrap();
    let bad = r.with_coefficient(g, g, r.unit, 2).unwrap();
    let rep = verify_based_ring(&bad);
    assert!(!rep.find(TAU).unwrap().passed);
}

fn s3_mul(a: usize, b: usize) -> usize {
    // permutations of {0,1,2} in lexicographic order; composition a∘b
    const P: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let c = [P[a][P[b][0]], P[a][P[b][1]], P[a][P[b][2]]];
    P.iter().position(|p| *p == c).unwrap()
}

#[test]
fn centrality() {
    let labels = ["e", "(12)", "(01)", "(012)", "(021)", "(02)"].map(String::from).to_vec();
    let s3 = BasedRing::group_ring(labels, s3_mul).unwrap();
    assert!(verify_based_ring(&s3).passed());
    assert!(!s3.is_central(1).unwrap());
    assert!(s3.is_central(0).unwrap());
    let r = hefuv(4).ring;
    assert!(r.is_central(r.unit).unwrap());
    assert!(r.is_central(r.index("g").unwrap()).unwrap());
    let c1 = r.index("C1").unwrap();
    assert!(matches!(r.is_central(c1), Err(FusionError::Escape { .. })));
    let r6 = hefuv(6).ring;
    // C1 commutes with everything that stays in the smaller window
    for b in 0..r6.len() {
        if let (Ok(p), Ok(q)) = (r6.product(r6.index("C1").unwrap(), b), r6.product(b, r6.index("C1").unwrap())) {
            assert_eq!(p, q);
        }
    }
}

/// kZ_4 with its group-like basis, multiplied directly.
struct CyclicProduct(usize);

impl ProductOracle for CyclicProduct {
    fn mul_basis(&self, i: usize, j: usize) -> Result<SparseVec, Escape> {
        Ok(coalgebra_core::linalg::unit_vec((i + j) % self.0))
    }
}

#[test]
fn group_like_coalgebras_give_group_rings() {
    let n = 4;
    let labels: Vec<String> = (0..n).map(|i| format!("g{i}")).collect();
    let c = Arc::new(
        Coalgebra::new(
            labels.clone(),
            (0..n).map(|i| vec![(i, i, Scalar::one())]).collect(),
            vec![Scalar::one(); n],
        )
        .unwrap(),
    );
    let cor = coradical(&c, Exec::Sequential).unwrap();
    let names: Vec<String> = cor.blocks.iter().map(|b| labels[b.space.pivots()[0]].clone()).collect();
    let star: Vec<usize> = cor
        .blocks
        .iter()
        .map(|b| {
            let k = b.space.pivots()[0];
            names.iter().position(|l| *l == format!("g{}", (n - k) % n)).unwrap()
        })
        .collect();
    let unit = names.iter().position(|l| l == "g0").unwrap();
    let r = fusion_ring_from_coalgebra(&c, &cor, &CyclicProduct(n), names, unit, star, Exec::Sequential).unwrap();
    let z4 = BasedRing::group_ring(labels, |a, b| (a + b) % n).unwrap();
    assert!(same_ring(&r, &z4));

    let a4 = window(TruncationSpec::Full, PresentedHopf::new(build_a(4, 2, Scalar::one(), Scalar::from_int(-1)).unwrap()));
    let glabels = ["1", "g", "g^2", "g^3"].map(String::from).to_vec();
    let z4g = BasedRing::group_ring(glabels, |a, b| (a + b) % 4).unwrap();
    assert!(same_ring(&a4.ring, &z4g));
    assert!(verify_based_ring(&a4.ring).passed());
}

/// Equality of tables up to relabeling by basis names.
fn same_ring(a: &BasedRing, b: &BasedRing) -> bool {
    if a.len() != b.len() || a.basis[a.unit] != b.basis[b.unit] {
        return false;
    }
    (0..a.len()).all(|i| {
        (0..a.len()).all(|j| {
            let bi = b.index(&a.basis[i]).unwrap();
            let bj = b.index(&a.basis[j]).unwrap();
            named(a, i, j).ok() == named(b, bi, bj).ok() && a.basis[a.star[i]] == b.basis[b.star[bi]]
        })
    })
}

#[test]
fn grothendieck_on_simples() {
    let w = hefuv(4);
    let h = comodule::HefuvComodules::from_truncation(w.t.clone());
    let mut mods = vec![h.trivial().unwrap(), h.sign().unwrap()];
    for i in 1..=4 {
        mods.push(h.simple(i).unwrap());
    }
    let rep = grothendieck_check(&w.cor, &w.t, &mods, &w.ring).unwrap();
    assert!(rep.passed(), "{:?}", rep.entries);
    assert_eq!(rep.entries.len() + rep.escaped.len(), 36);
    assert_eq!(rep.entries.len(), 26);
    // k⊗M has cf(M); C1⊗C1 has cf = k1 + kg + C2
    let t = mods[2].tensor(&mods[2], &w.t).unwrap();
    let cf = t.coefficient_coalgebra().unwrap();
    assert_eq!(cf.dim(), 6);
    assert_eq!(class_of(&t, &w.cor).unwrap().len(), 3);
}

#[test]
fn json_round_trip() {
    let r = hefuv(3).ring;
    let text = serde_json::to_string(&r).unwrap();
    assert!(text.starts_with("{\"basis\":"));
    assert!(text.contains("\"alpha\":[["));
    let back: BasedRing = serde_json::from_str(&text).unwrap();
    assert_eq!(back, r);
    let bad = text.replace("\"unit\":", "\"unit\":9");
    assert!(serde_json::from_str::<BasedRing>(&bad).is_err());
}

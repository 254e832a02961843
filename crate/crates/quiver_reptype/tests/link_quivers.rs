use std::sync::Arc;

use coalgebra_core::*;
use fusion::{fusion_ring_from_coalgebra, star_from_antipode, BasedRing};
use hopf_presentations::*;
use quiver_reptype::*;

struct Instance {
    t: Truncation,
    c: Arc<Coalgebra>,
    cor: Coradical,
    labels: Vec<String>,
}

fn instance(h: &PresentedHopf, spec: TruncationSpec) -> Instance {
    let t = truncate_coalgebra(h, &spec).unwrap();
    let c = Arc::new(t.coalgebra.clone());
    let cor = coradical(&c, Exec::default()).unwrap();
    let labels = cor.blocks.iter().map(|b| t.block_name(&b.space)).collect();
    Instance { t, c, cor, labels }
}

fn quiver(i: &Instance) -> Quiver {
    link_quiver_from_coalgebra(&i.c, &i.cor, &i.labels, Exec::default()).unwrap()
}

fn ring(i: &Instance) -> BasedRing {
    let one = i.t.vec_of(&i.t.hopf.one()).unwrap();
    let unit = i.cor.block_of(&one).unwrap();
    let star = star_from_antipode(&i.cor, &|v| i.t.antipode_vec(v)).unwrap();
    fusion_ring_from_coalgebra(&i.c, &i.cor, &i.t, i.labels.clone(), unit, star, Exec::default()).unwrap()
}

fn arrows(q: &Quiver) -> Vec<(String, String, usize)> {
    let mut v: Vec<_> = q.arrows().map(|(s, d, m)| (q.label(s).to_string(), q.label(d).to_string(), m)).collect();
    v.sort();
    v
}

fn both_ways(pairs: &[(&str, &str)]) -> Vec<(String, String, usize)> {
    let mut v: Vec<_> =
        pairs.iter().flat_map(|(a, b)| [(a.to_string(), b.to_string(), 1), (b.to_string(), a.to_string(), 1)]).collect();
    v.sort();
    v
}

#[test]
fn hefuv_h2_quiver() {
    let i = instance(&build_hefuv(), TruncationSpec::Hefuv(2));
    let q = quiver(&i);
    assert_eq!(arrows(&q), both_ways(&[("1", "C1"), ("g", "C1"), ("C1", "C2"), ("C2", "C3")]));
    assert_eq!(q.vertices()[q.index("C2").unwrap()].weight, 2);
    assert!(!is_basic_cycle_union(&q));
    assert!(is_schurian(&q));
    let unit = q.index("1").unwrap();
    let r = discreteness_check_finite_coradical(&q, unit).unwrap();
    assert!(!r.basic_cycles && !r.single_arrow_in && !r.single_arrow_out);
    // ¹S = {C1}: C1 is the only vertex with an arrow into k1
    assert_eq!(q.predecessors(unit), vec![q.index("C1").unwrap()]);
}

/// The coalgebra route on H^N agrees with the fusion route on a wider cosemisimple window.
#[test]
fn two_routes_agree_on_hefuv() {
    for n in 1..=4 {
        let i = instance(&build_hefuv(), TruncationSpec::Hefuv(n));
        let q = quiver(&i);
        let unit = q.index("1").unwrap();
        // ¹S with the number of arrows into k1; each multiplicity is checked, not assumed
        let one_s: Vec<(String, usize)> =
            q.predecessors(unit).into_iter().map(|v| (q.label(v).to_string(), q.multiplicity(v, unit))).collect();
        assert_eq!(one_s, vec![("C1".to_string(), 1)]);

        let w = instance(&build_hefuv(), TruncationSpec::Cosemisimple(n + 2));
        let r = ring(&w);
        let one_s_idx: Vec<(usize, usize)> = one_s.iter().map(|(l, m)| (r.index(l).unwrap(), *m)).collect();
        let within: Vec<usize> = q.vertices().iter().map(|v| r.index(&v.label).unwrap()).collect();
        let f = link_quiver_from_fusion(&r, &one_s_idx, Some(&within)).unwrap();
        assert!(f.same_as(&q), "N = {n}: {:?} vs {:?}", arrows(&f), arrows(&q));
    }
}

fn a_family() -> Vec<(i64, i64, Scalar, Scalar)> {
    vec![
        (2, 2, Scalar::one(), Scalar::from_int(-1)),
        (4, 2, Scalar::one(), Scalar::from_int(-1)),
        (4, 2, Scalar::zero(), Scalar::from_int(-1)),
        (3, 3, Scalar::zero(), Scalar::zeta(3)),
        (4, 4, Scalar::zero(), Scalar::zeta(4)),
        (6, 2, Scalar::one(), Scalar::from_int(-1)),
        (8, 2, Scalar::one(), Scalar::from_int(-1)),
        (5, 1, Scalar::zero(), Scalar::one()),
    ]
}

#[test]
fn a_family_quivers_are_basic_cycles() {
    for (n, d, mu, q) in a_family() {
        if d == 1 {
            continue;
        }
        let h = PresentedHopf::new(build_a(n, d, mu.clone(), q.clone()).unwrap());
        let i = instance(&h, TruncationSpec::Full);
        let quiv = quiver(&i);
        assert_eq!(quiv.len(), n as usize);
        assert_eq!(quiv.arrow_count(), n as usize);
        assert!(is_basic_cycle_union(&quiv), "A({n},{d})");
        let unit = quiv.index("1").unwrap();
        let rep = discreteness_check_finite_coradical(&quiv, unit).unwrap();
        assert_eq!(rep.verdict, Discreteness::Discrete);
        // arrows g^{a+1} → g^a: x g^a spans the new part of k g^a ∧ k g^{a+1}
        let g = quiv.index("g").unwrap();
        assert_eq!(quiv.multiplicity(g, unit), 1);

        // fusion route: Z[Z_n] with ¹S = {g}
        let r = ring(&i);
        let f = link_quiver_from_fusion(&r, &[(r.index("g").unwrap(), 1)], None).unwrap();
        assert!(f.same_as(&quiv), "A({n},{d})");
    }
}

#[test]
fn a4_quiver_is_a_four_cycle() {
    let h = PresentedHopf::new(build_a(4, 2, Scalar::one(), Scalar::from_int(-1)).unwrap());
    let q = quiver(&instance(&h, TruncationSpec::Full));
    let mut v = arrows(&q);
    v.sort();
    assert_eq!(
        v,
        vec![
            ("g".to_string(), "1".to_string(), 1),
            ("g^2".to_string(), "g".to_string(), 1),
            ("g^3".to_string(), "g^2".to_string(), 1),
            ("1".to_string(), "g^3".to_string(), 1),
        ]
        .into_iter()
        .collect::<std::collections::BTreeSet<_>>()
        .into_iter()
        .collect::<Vec<_>>()
    );
}

#[test]
fn cosemisimple_coalgebras_have_no_arrows() {
    let i = instance(&build_hefuv(), TruncationSpec::Cosemisimple(2));
    let q = quiver(&i);
    assert_eq!(q.arrow_count(), 0);
    let unit = q.index("1").unwrap();
    assert_eq!(discreteness_check_finite_coradical(&q, unit).unwrap().verdict, Discreteness::Cosemisimple);
    let r = ring(&i);
    assert_eq!(link_quiver_from_fusion(&r, &[], None).unwrap().arrow_count(), 0);
}

#[test]
fn fusion_route_needs_the_window() {
    let w = instance(&build_hefuv(), TruncationSpec::Cosemisimple(3));
    let r = ring(&w);
    let c1 = r.index("C1").unwrap();
    assert!(matches!(link_quiver_from_fusion(&r, &[(c1, 1)], None), Err(QuiverError::Fusion(_))));
}

#[test]
fn alpha_symmetry_on_window_rings() {
    let w = instance(&build_hefuv(), TruncationSpec::Cosemisimple(6));
    let r = ring(&w);
    let mut checked = 0;
    for i in 0..r.len() {
        for k in 0..r.len() {
            for t in 0..r.len() {
                if let (Ok(a), Ok(b)) = (r.coefficient(i, k, t), r.coefficient(t, r.star[k], i)) {
                    assert_eq!(a, b);
                    checked += 1;
                }
            }
        }
    }
    assert!(checked > 200);
}

#[test]
fn quiver_json_and_dot() {
    let q = quiver(&instance(&build_hefuv(), TruncationSpec::Hefuv(1)));
    let text = serde_json::to_string(&q).unwrap();
    assert!(text.starts_with("{\"vertices\":[{\"label\":"));
    assert!(text.contains("\"src\":\"C1\",\"dst\":\"1\",\"mult\":1"));
    let back: Quiver = serde_json::from_str(&text).unwrap();
    assert_eq!(back, q);
    let dot = q.to_dot();
    assert!(dot.starts_with("digraph"));
    assert_eq!(dot.matches("->").count(), q.arrow_count());
    assert!(dot.contains("weight 2"));
    let bad = text.replace("\"mult\":1", "\"mult\":0");
    assert!(serde_json::from_str::<Quiver>(&bad).is_err());
}

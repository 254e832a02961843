use std::collections::BTreeSet;

use proptest::prelude::*;
use quiver_reptype::*;

/// Adjacency as a bitmask over pairs (a < b), relabelled by `perm`.
fn mask(n: usize, adj: &[u32], perm: &[usize]) -> u64 {
    let mut m = 0u64;
    let mut bit = 0;
    for a in 0..n {
        for b in a + 1..n {
            if adj[perm[a]] >> perm[b] & 1 == 1 {
                m |= 1 << bit;
            }
            bit += 1;
        }
    }
    m
}

/// Minimum mask over relabellings that list vertices in nondecreasing degree order.
fn canonical_form(n: usize, adj: &[u32]) -> u64 {
    let deg: Vec<u32> = adj.iter().map(|x| x.count_ones()).collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| deg[v]);
    let mut best = u64::MAX;
    let mut perm = order.clone();
    permute_classes(&deg, &mut perm, 0, &mut |p| best = best.min(mask(n, adj, p)));
    best
}

fn permute_classes(deg: &[u32], perm: &mut Vec<usize>, start: usize, f: &mut dyn FnMut(&[usize])) {
    if start == perm.len() {
        f(perm);
        return;
    }
    let mut end = start;
    while end < perm.len() && deg[perm[end]] == deg[perm[start]] {
        end += 1;
    }
    heap_permute(perm, start, end, end - start, deg, f);
}

fn heap_permute(perm: &mut Vec<usize>, lo: usize, hi: usize, k: usize, deg: &[u32], f: &mut dyn FnMut(&[usize])) {
    if k <= 1 {
        permute_classes(deg, perm, hi, f);
        return;
    }
    for i in 0..k {
        heap_permute(perm, lo, hi, k - 1, deg, f);
        let j = if k % 2 == 0 { lo + i } else { lo };
        if i + 1 < k {
            perm.swap(j, lo + k - 1);
        }
    }
}

/// All connected simple graphs up to isomorphism, grown by attaching a vertex to a
/// nonempty subset; every connected graph has a vertex whose removal keeps it connected.
fn connected_graphs(max: usize) -> Vec<Vec<Vec<u32>>> {
    let mut levels: Vec<Vec<Vec<u32>>> = vec![vec![vec![0]]];
    for n in 1..max {
        let mut seen = BTreeSet::new();
        let mut next = Vec::new();
        for g in &levels[n - 1] {
            for s in 1u32..(1 << n) {
                let mut adj = g.clone();
                for (v, row) in adj.iter_mut().enumerate() {
                    if s >> v & 1 == 1 {
                        *row |= 1 << n;
                    }
                }
                adj.push(s);
                if seen.insert(canonical_form(n + 1, &adj)) {
                    next.push(adj);
                }
            }
        }
        levels.push(next);
    }
    levels
}

fn to_graph(adj: &[u32]) -> Graph {
    let n = adj.len();
    let mut g = Graph::new(n);
    for a in 0..n {
        for b in a + 1..n {
            if adj[a] >> b & 1 == 1 {
                g.add_edges(a, b, 1);
            }
        }
    }
    g
}

#[test]
fn combinatorial_and_spectral_classification_agree() {
    let levels = connected_graphs(7);
    let counts: Vec<usize> = levels.iter().map(Vec::len).collect();
    assert_eq!(counts, vec![1, 1, 2, 6, 21, 112, 853]);
    let mut dynkin = vec![0; 7];
    let mut euclid = vec![0; 7];
    for (i, level) in levels.iter().enumerate() {
        for adj in level {
            let g = to_graph(adj);
            let cls = classify_ade(&g).unwrap();
            assert_eq!(cls.len(), 1);
            let expected = match spectral_class(&g) {
                Spectral::Below => cls[0].is_dynkin(),
                Spectral::Equal => cls[0].is_euclidean(),
                Spectral::Above => cls[0] == AdeClass::BeyondEuclidean,
            };
            assert!(expected, "{adj:?} classified as {}", cls[0]);
            if let Some(r) = cls[0].rank() {
                assert_eq!(r, i + 1);
            }
            dynkin[i] += cls[0].is_dynkin() as usize;
            euclid[i] += cls[0].is_euclidean() as usize;
        }
    }
    assert_eq!(dynkin, vec![1, 1, 1, 2, 2, 3, 3]);
    assert_eq!(euclid, vec![0, 0, 1, 1, 2, 2, 3]);
}

#[test]
fn standard_diagrams_classify_as_themselves() {
    let mut all = vec![AdeClass::E6, AdeClass::E7, AdeClass::E8, AdeClass::AffineE6, AdeClass::AffineE7, AdeClass::AffineE8];
    for n in 1..=9 {
        all.push(AdeClass::A(n));
        all.push(AdeClass::AffineA(n));
        if n >= 4 {
            all.push(AdeClass::D(n));
            all.push(AdeClass::AffineD(n));
        }
    }
    for c in all {
        let g = c.diagram().unwrap();
        assert_eq!(g.vertex_count(), c.rank().unwrap(), "{c}");
        assert_eq!(classify_ade(&g).unwrap(), vec![c]);
        let s = if c.is_dynkin() { Spectral::Below } else { Spectral::Equal };
        assert_eq!(spectral_class(&g), s, "{c}");
    }
}

#[test]
fn named_graphs() {
    let p5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]);
    assert_eq!(classify_ade(&p5).unwrap(), vec![AdeClass::A(5)]);
    assert_eq!(AdeClass::A(5).to_string(), "A5");

    // star with three legs of two vertices
    let e6 = Graph::from_edges(7, &[(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]);
    assert_eq!(classify_ade(&e6).unwrap(), vec![AdeClass::AffineE6]);
    assert_eq!(AdeClass::AffineE6.to_string(), "~E6");

    // k1, D2, D1, S', v3, v4: k1, D2 and D1 hang off S', and D1 carries v3 and v4
    let d5 = Graph::from_edges(6, &[(0, 3), (1, 3), (2, 3), (2, 4), (2, 5)]);
    assert_eq!(classify_ade(&d5).unwrap(), vec![AdeClass::AffineD(5)]);
    assert_eq!(spectral_class(&d5), Spectral::Equal);

    let mut kron = Graph::new(2);
    kron.add_edges(0, 1, 2);
    assert_eq!(classify_ade(&kron).unwrap(), vec![AdeClass::AffineA(1)]);
    let mut triple = Graph::new(2);
    triple.add_edges(0, 1, 3);
    assert_eq!(classify_ade(&triple).unwrap(), vec![AdeClass::BeyondEuclidean]);
    assert_eq!(spectral_class(&triple), Spectral::Above);

    let two = Graph::from_edges(5, &[(0, 1), (2, 3), (3, 4)]);
    assert_eq!(classify_ade(&two).unwrap(), vec![AdeClass::A(2), AdeClass::A(3)]);

    let looped = Graph::from_edges(2, &[(0, 0), (0, 1)]);
    assert!(matches!(classify_ade(&looped), Err(QuiverError::Loop(_))));
}

fn brute_force_roots(cls: AdeClass, bound: i64) -> usize {
    let g = cls.diagram().unwrap();
    let n = g.vertex_count();
    let mut x = vec![0i64; n];
    let mut count = 0;
    loop {
        if x.iter().any(|&v| v > 0) && tits_form(&g, &x) == 1 {
            count += 1;
        }
        let mut i = 0;
        while i < n && x[i] == bound {
            x[i] = 0;
            i += 1;
        }
        if i == n {
            return count;
        }
        x[i] += 1;
    }
}

#[test]
fn positive_root_counts() {
    for n in 1..=8 {
        assert_eq!(dynkin_positive_roots(AdeClass::A(n)).unwrap().len(), n * (n + 1) / 2);
    }
    for n in 4..=8 {
        assert_eq!(dynkin_positive_roots(AdeClass::D(n)).unwrap().len(), n * (n - 1));
    }
    assert_eq!(dynkin_positive_roots(AdeClass::A(2)).unwrap(), vec![vec![0, 1], vec![1, 0], vec![1, 1]]);
    for (c, count, bound) in [(AdeClass::E6, 36, 3), (AdeClass::E7, 63, 4), (AdeClass::D(4), 12, 2)] {
        let roots = dynkin_positive_roots(c).unwrap();
        assert_eq!(roots.len(), count);
        assert_eq!(brute_force_roots(c, bound), count, "{c}");
    }
    assert_eq!(dynkin_positive_roots(AdeClass::E8).unwrap().len(), 120);
    assert!(matches!(dynkin_positive_roots(AdeClass::AffineE6), Err(QuiverError::NotDynkin(_))));
}

fn cycle(n: usize) -> Quiver {
    let mut q = Quiver::new();
    for i in 0..n {
        q.add_vertex(&format!("v{i}"), 1).unwrap();
    }
    for i in 0..n {
        q.add_arrows(i, (i + 1) % n, 1);
    }
    q
}

#[test]
fn separated_quivers_of_cycles() {
    for n in 1..=8 {
        let s = separated_quiver(&cycle(n));
        assert_eq!(s.len(), 2 * n);
        let cls = classify_ade(&s.underlying_graph()).unwrap();
        assert_eq!(cls, vec![AdeClass::A(2); n]);
    }
    // vertex i' sits at index n + i
    let s = separated_quiver(&cycle(3));
    assert_eq!(s.label(4), "v1'");
    assert_eq!(s.multiplicity(0, 4), 1);
}

#[test]
fn trichotomy_cases() {
    assert_eq!(trichotomy_classify(1, &[1]).unwrap(), Trichotomy::Case1);
    assert_eq!(trichotomy_classify(2, &[1, 1]).unwrap(), Trichotomy::Case2);
    assert_eq!(trichotomy_classify(1, &[4]).unwrap(), Trichotomy::Case3);
    for (p, s) in [(3, vec![1]), (1, vec![9]), (2, vec![4, 1]), (2, vec![4]), (2, vec![1]), (1, vec![16])] {
        assert!(matches!(trichotomy_classify(p, &s).unwrap(), Trichotomy::NotDiscrete { .. }), "{p} {s:?}");
    }
    assert!(trichotomy_classify(0, &[1]).is_err());
    assert!(trichotomy_classify(1, &[2]).is_err());
    assert!(trichotomy_classify(1, &[1, 1]).is_err());
}

#[test]
fn weight_two_predecessor_breaks_the_arrow_in_condition() {
    let mut q = Quiver::new();
    let one = q.add_vertex("1", 1).unwrap();
    let c = q.add_vertex("C", 2).unwrap();
    q.add_arrows(c, one, 1);
    q.add_arrows(one, c, 1);
    let r = discreteness_check_finite_coradical(&q, one).unwrap();
    assert!(r.basic_cycles && !r.single_arrow_in && !r.single_arrow_out);
    match r.verdict {
        Discreteness::NotDiscrete { violated } => assert_eq!(violated.len(), 2),
        v => panic!("{v:?}"),
    }
}

#[test]
fn double_arrows_are_not_schurian() {
    let mut q = cycle(2);
    assert!(is_schurian(&q));
    q.add_arrows(0, 1, 1);
    assert!(!is_schurian(&q));
    assert!(!is_basic_cycle_union(&q));
    assert_eq!(q.multiplicity(0, 1), 2);
}

#[test]
fn qmn_quivers() {
    let q = build_qmn(0, 0, 2).unwrap();
    assert_eq!(q.len(), 13);
    // g^i h^j → g^{i+1} h^j and → g^i h^{j+1} inside the diamond |i| + |j| ≤ 2
    assert_eq!(q.arrow_count(), 16);
    assert_eq!(q.successors(q.index("1").unwrap()).len(), 2);
    assert!(q.index("g^-1h").is_ok());

    // g^2 = h^2 identifies three pairs in the diamond: g^2 ~ h^2, g^-1h ~ gh^-1, g^-2 ~ h^-2
    let q = build_qmn(2, 2, 2).unwrap();
    assert_eq!(q.len(), 10);
    let g2 = q.index("g^2").ok().or_else(|| q.index("h^2").ok());
    assert!(g2.is_some());
    assert!(!(q.index("g^2").is_ok() && q.index("h^2").is_ok()));

    let q = build_qmn(3, 1, 0).unwrap();
    assert_eq!(q.len(), 1);
    assert_eq!(q.arrow_count(), 0);
    assert!(build_qmn(1, 1, 2).is_err());
    assert!(build_qmn(-1, -1, 2).is_err());
}

fn bipartite_strategy() -> impl Strategy<Value = (usize, usize, Vec<(usize, usize, usize)>)> {
    (1usize..5, 1usize..5).prop_flat_map(|(a, b)| {
        (Just(a), Just(b), proptest::collection::vec((0..a, 0..b, 1usize..3), 0..8))
    })
}

proptest! {
    /// A quiver whose arrows all go from sources to sinks is a disjoint copy of its graph
    /// inside the separated quiver, so both give the same classification up to isolated vertices.
    #[test]
    fn separated_quiver_of_bipartite_sources((a, b, arrows) in bipartite_strategy()) {
        let mut q = Quiver::new();
        for i in 0..a + b {
            q.add_vertex(&format!("x{i}"), 1).unwrap();
        }
        for (s, t, m) in arrows {
            q.add_arrows(s, a + t, m);
        }
        let s = separated_quiver(&q);
        prop_assert_eq!(s.arrow_count(), q.arrow_count());
        let mut lhs: Vec<AdeClass> = classify_ade(&q.underlying_graph()).unwrap();
        let mut rhs: Vec<AdeClass> = classify_ade(&s.underlying_graph()).unwrap();
        lhs.retain(|c| *c != AdeClass::A(1));
        rhs.retain(|c| *c != AdeClass::A(1));
        lhs.sort();
        rhs.sort();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn spectral_matches_classification_for_random_multigraphs(
        n in 1usize..7,
        edges in proptest::collection::vec((0usize..7, 0usize..7, 1usize..3), 0..10),
    ) {
        let mut g = Graph::new(n);
        for (x, y, m) in edges {
            if x < n && y < n && x != y {
                g.add_edges(x, y, m);
            }
        }
        for comp in g.components() {
            let h = g.induced(&comp);
            let c = classify_ade(&h).unwrap()[0];
            let s = spectral_class(&h);
            prop_assert_eq!(s == Spectral::Below, c.is_dynkin());
            prop_assert_eq!(s == Spectral::Equal, c.is_euclidean());
        }
    }
}

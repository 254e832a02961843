//! Seeded randomized checks: associativity/confluence of rewriting, Δ multiplicative,
//! and the antipode identity on random elements.

use coalgebra_core::Scalar;
use hopf_presentations::family::Strategy;
use hopf_presentations::truncate::window_monomials;
use hopf_presentations::verify::bialgebra_residual;
use hopf_presentations::word::{format_tensor, word_elem};
use hopf_presentations::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn families() -> Vec<(PresentedHopf, Vec<Word>)> {
    let mk = |f: Family, lo: i64, hi: i64| {
        let h = PresentedHopf::new(f);
        let m = window_monomials(&h, lo, hi);
        (h, m)
    };
    vec![
        mk(Family::Hefuv, -2, 2),
        mk(build_a(4, 2, Scalar::one(), Scalar::from_int(-1)).unwrap(), 0, 0),
        mk(build_anq(3, Scalar::zeta(3)).unwrap(), -2, 3),
        mk(build_hinf(Scalar::from_int(2), Scalar::one()).unwrap(), -2, 2),
        mk(build_bmn(0, 0, Scalar::one(), Scalar::one(), Scalar::from_int(2), Scalar::zero()).unwrap(), -1, 1),
        mk(build_bmn(2, 2, Scalar::from_int(-1), Scalar::one(), Scalar::zero(), Scalar::zero()).unwrap(), -1, 1),
    ]
}

#[test]
fn rewriting_is_confluent() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for (h, mons) in families() {
        for _ in 0..500 {
            let a = word_elem(mons.choose(&mut rng).unwrap().clone());
            let b = word_elem(mons.choose(&mut rng).unwrap().clone());
            let c = word_elem(mons.choose(&mut rng).unwrap().clone());
            let left = h.multiply(&h.multiply(&a, &b), &c);
            let right = h.multiply(&a, &h.multiply(&b, &c));
            assert_eq!(left, right, "{}", h.name());
            // the raw concatenation reduces to the same normal form under either strategy
            let mut w = a.keys().next().unwrap().clone();
            w.extend(b.keys().next().unwrap());
            w.extend(c.keys().next().unwrap());
            assert_eq!(h.normalize_word_with(&w, Strategy::Rightmost), left, "{}", h.name());
        }
    }
}

#[test]
fn delta_is_multiplicative() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for (h, mons) in families() {
        for _ in 0..200 {
            let a = word_elem(mons.choose(&mut rng).unwrap().clone());
            let b = word_elem(mons.choose(&mut rng).unwrap().clone());
            let r = bialgebra_residual(&h, &a, &b);
            assert!(r.is_empty(), "{}: {}", h.name(), format_tensor(&r));
            assert_eq!(h.counit(&h.multiply(&a, &b)), h.counit(&a) * h.counit(&b));
        }
    }
}

#[test]
fn antipode_identity_on_random_elements() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let h = build_hefuv();
    let mons = window_monomials(&h, -3, 3);
    for _ in 0..200 {
        let mut a = Element::new();
        for _ in 0..rng.gen_range(1..4) {
            let c = Scalar::from_int(rng.gen_range(-3..=3));
            hopf_presentations::word::add_term(&mut a, mons.choose(&mut rng).unwrap().clone(), &c);
        }
        let d = h.delta(&a);
        let unit = h.unit_times(&h.counit(&a));
        assert_eq!(h.m_s_id(&d), unit);
        assert_eq!(h.m_id_s(&d), unit);
    }
}

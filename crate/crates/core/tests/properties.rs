use circio_core::oracle::{canonical_form_of, AdjacencyGraph};
use circio_core::{
    adam_orbit, adjacency_spectrum, full_difference_set, is_adam_equivalent, is_circulant,
    multiply_set, reflexive_reduce, spectra_match, theta_image, theta_witness, union_shift, units,
    CirculantGraph, ConnectionSet, EdgeImage, SPECTRUM_TOLERANCE,
};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn set_strategy(n: std::ops::RangeInclusive<u32>) -> impl Strategy<Value = ConnectionSet> {
    n.prop_flat_map(|n| {
        let half = n / 2;
        (Just(n), 1u64..(1u64 << half))
    })
    .prop_map(|(n, mask)| ConnectionSet::from_mask(n, mask))
}

/// Order-54 sets with at least one multiple of 3.
fn theta_ready() -> impl Strategy<Value = ConnectionSet> {
    (1u64..(1 << 27), 0usize..9).prop_map(|(mask, k)| {
        let forced = 1u64 << (3 * (k as u32 + 1) - 1);
        ConnectionSet::from_mask(54, mask | forced)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn reduction_is_idempotent(raw in prop::collection::vec(1i64..500, 1..12), n in 2u32..80) {
        let raw: Vec<i64> = raw.into_iter().filter(|r| r % n as i64 != 0).collect();
        prop_assume!(!raw.is_empty());
        let once = reflexive_reduce(&raw, n).unwrap();
        let back: Vec<i64> = full_difference_set(&once).into_iter().map(i64::from).collect();
        prop_assert_eq!(reflexive_reduce(&back, n).unwrap(), once.clone());
        prop_assert!(once.jumps().windows(2).all(|w| w[0] < w[1]));
        prop_assert!(once.jumps().iter().all(|&j| j >= 1 && 2 * j <= n));
    }

    #[test]
    fn identity_image_recovers_set(cs in set_strategy(2..=60)) {
        let g = CirculantGraph::new(cs.clone());
        let id: Vec<u32> = (0..cs.order()).collect();
        prop_assert_eq!(is_circulant(&EdgeImage::from_map(&g, &id)), Some(cs.clone()));
        let degrees: Vec<usize> = (0..cs.order()).map(|x| g.neighbors(x).len()).collect();
        let expected = 2 * cs.len() - usize::from(cs.order() % 2 == 0 && cs.contains(cs.order() / 2));
        prop_assert!(degrees.iter().all(|&d| d == expected));
    }

    #[test]
    fn theta_at_zero_is_identity(cs in theta_ready()) {
        prop_assert_eq!(theta_image(&cs, 3, 0).unwrap(), Some(cs));
    }

    #[test]
    fn opposite_multipliers_agree(cs in set_strategy(3..=60), pick in 0usize..64) {
        let group = units(cs.order());
        let x = group.units()[pick % group.len()];
        let y = cs.order() - x;
        prop_assert_eq!(multiply_set(&cs, x).unwrap(), multiply_set(&cs, y).unwrap());
        prop_assert_eq!(multiply_set(&cs, x).unwrap().len(), cs.len());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn union_property(base in 1u64..(1 << 27), extra in 1u64..(1 << 9), t in 1u32..18) {
        // split into non-multiples of 3 and multiples of 3
        let non_mult: u64 = (1..=27u32).filter(|j| j % 3 != 0).map(|j| 1u64 << (j - 1)).sum();
        let cs = ConnectionSet::from_mask(54, base & non_mult);
        let extra_jumps: Vec<u32> = (0..9).filter(|k| extra >> k & 1 == 1).map(|k| 3 * (k + 1)).collect();
        let e = ConnectionSet::new(54, &extra_jumps).unwrap();
        let whole = cs.union(&e).unwrap();
        let direct = theta_image(&whole, 3, t).unwrap();
        prop_assert_eq!(union_shift(&cs, &e, 3, t).unwrap(), direct.clone());
        if let Some(img) = direct {
            prop_assert_eq!(img.multiples_of(3), whole.multiples_of(3));
            let a = adjacency_spectrum(&whole);
            let b = adjacency_spectrum(&img);
            prop_assert_eq!(spectra_match(&a, &b, SPECTRUM_TOLERANCE), None);
        }
    }
}

#[test]
fn orbit_symmetry_order_sixteen() {
    let sets: Vec<ConnectionSet> = (1u64..1 << 8).map(|m| ConnectionSet::from_mask(16, m)).collect();
    for a in &sets {
        let oa = adam_orbit(a);
        assert!(oa.contains(a));
        for b in oa.members() {
            assert_eq!(adam_orbit(b), oa);
            assert!(is_adam_equivalent(b, a).unwrap().is_some());
        }
        assert!(oa.len() <= units(16).len());
    }
}

#[test]
fn theta_witnesses_are_sound_and_cospectral() {
    // every circulant image of a random batch of order-54 sets
    let mut rng = ChaCha8Rng::seed_from_u64(54);
    let mut checked = 0;
    while checked < 200 {
        let mask: u64 = rand::Rng::gen_range(&mut rng, 1..1u64 << 27) | 1 << 2;
        let cs = ConnectionSet::from_mask(54, mask);
        for t in 1..18 {
            if let Some(w) = theta_witness(&cs, 3, t).unwrap() {
                assert!(w.verify());
                let (a, b) = (adjacency_spectrum(&w.source), adjacency_spectrum(&w.image));
                assert_eq!(spectra_match(&a, &b, SPECTRUM_TOLERANCE), None);
                checked += 1;
            }
        }
    }
}

#[test]
fn canonical_form_survives_relabeling() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for jumps in [&[1u32, 3, 17, 19][..], &[2, 3, 16, 20], &[9, 18, 27], &[1, 5, 9, 13, 17, 21, 25]] {
        let g = AdjacencyGraph::from_circulant(&CirculantGraph::new(ConnectionSet::new(54, jumps).unwrap()));
        let reference = canonical_form_of(&g, circio_core::DEFAULT_BUDGET).unwrap();
        assert_eq!(canonical_form_of(&g, circio_core::DEFAULT_BUDGET).unwrap().labeling, reference.labeling);
        for _ in 0..50 {
            let mut perm: Vec<u32> = (0..54).collect();
            perm.shuffle(&mut rng);
            let shuffled = canonical_form_of(&g.relabel(&perm), circio_core::DEFAULT_BUDGET).unwrap();
            assert_eq!(shuffled.canonical_edges, reference.canonical_edges);
        }
    }
}

#[test]
fn canonical_labeling_reproduces_edges() {
    let g = AdjacencyGraph::from_circulant(&CirculantGraph::new(ConnectionSet::new(30, &[2, 7, 15]).unwrap()));
    let cf = canonical_form_of(&g, circio_core::DEFAULT_BUDGET).unwrap();
    assert_eq!(g.relabel(&cf.labeling).edges(), cf.canonical_edges);
}

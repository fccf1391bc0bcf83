use std::collections::BTreeSet;

use circio_core::classify::TupleVerdict;
use circio_core::enumerate::{a17c_indices, c1_tuple, FamilySpec};
use circio_core::{
    classify_pair, enumerate_family, full_scan, generate_a17c, is_adam_equivalent, theta_image,
    theta_witness, ConnectionSet, Family, ScanConfig, Verdict, DEFAULT_BUDGET,
};

#[test]
fn family_totals_and_union_consistency() {
    for family in [Family::A, Family::B] {
        let spec = FamilySpec::new(family);
        let rows = enumerate_family(&spec, DEFAULT_BUDGET).unwrap();
        assert_eq!(rows.len(), 511);
        let t2 = rows.iter().filter(|r| r.record.verdict == TupleVerdict::Type2).count();
        let t1 = rows.iter().filter(|r| r.record.verdict == TupleVerdict::Type1).count();
        assert_eq!((t2, t1), (480, 31), "family {family}");

        let base_t2 = theta_image(&ConnectionSet::new(54, &[3]).unwrap().union(&spec.base).unwrap(), 3, 2)
            .unwrap()
            .unwrap();
        let base_t4 = theta_image(&ConnectionSet::new(54, &[3]).unwrap().union(&spec.base).unwrap(), 3, 4)
            .unwrap()
            .unwrap();
        let strip = |s: &ConnectionSet| -> Vec<u32> { s.jumps().iter().copied().filter(|j| j % 3 != 0).collect() };
        for row in &rows {
            // the non-multiples of each image never depend on the extra multiples
            assert_eq!(strip(row.image_t2()), strip(&base_t2));
            assert_eq!(strip(row.image_t4()), strip(&base_t4));
            assert_eq!(row.image_t2().multiples_of(3), row.extra);
            assert_eq!(theta_image(row.source(), 3, 6).unwrap().as_ref(), Some(row.source()));
            // T1 exactly when the three members form the Adam orbit of the first
            let members: BTreeSet<_> = row.record.members.iter().cloned().collect();
            let orbit: BTreeSet<_> = row.record.orbit.members().iter().cloned().collect();
            assert_eq!(row.record.verdict == TupleVerdict::Type1, members == orbit, "row {}", row.row);
        }
    }
}

#[test]
fn a17c_pairs_are_type2() {
    for k in 2..=6 {
        for s in a17c_indices(k) {
            let (r, target) = generate_a17c(k, s).unwrap();
            match classify_pair(&r, &target, DEFAULT_BUDGET).unwrap().verdict {
                Verdict::Type2 { m: 2, t, .. } => assert!(t == k || t == 3 * k, "k={k} s={s} t={t}"),
                other => panic!("k={k} s={s}: {other}"),
            }
        }
    }
}

#[test]
fn c1_tuples_are_type2() {
    for base in 1..=2u32 {
        for x in 1..=2u32 {
            for y in 0..3 * base {
                if x + 3 * y > 9 * base - 1 {
                    continue;
                }
                let tuple = c1_tuple(base, 3, x, y).unwrap();
                let distinct: BTreeSet<_> = tuple.iter().collect();
                if distinct.len() < 3 {
                    continue;
                }
                let record = circio_core::classify_tuple(&tuple, DEFAULT_BUDGET).unwrap();
                assert_eq!(record.verdict, TupleVerdict::Type2, "base={base} x={x} y={y}");
            }
        }
    }
}

#[test]
fn small_scans() {
    let sixteen = full_scan(16, ScanConfig::default()).unwrap();
    assert_eq!(sixteen.counts.raw_pairs, 8);
    let twenty_seven = full_scan(27, ScanConfig::default()).unwrap();
    assert_eq!(twenty_seven.counts.tuples_mod_complement, 12);
    for report in [&sixteen, &twenty_seven] {
        for p in &report.pairs {
            let w = theta_witness(&p.source, p.m, p.t).unwrap().unwrap();
            assert!(w.verify());
            assert_eq!(w.image, p.image);
            assert_eq!(is_adam_equivalent(&p.source, &p.image).unwrap(), None);
        }
    }
    // the order-27 generator tuple is one of the scanned classes
    let tuple: BTreeSet<_> = c1_tuple(1, 3, 1, 0).unwrap().into_iter().collect();
    assert!(twenty_seven
        .classes
        .iter()
        .any(|c| c.members.iter().cloned().collect::<BTreeSet<_>>() == tuple));
}

#[test]
fn scan_is_deterministic() {
    let a = full_scan(24, ScanConfig::default()).unwrap();
    let b = full_scan(24, ScanConfig::default()).unwrap();
    assert_eq!(a, b);
}

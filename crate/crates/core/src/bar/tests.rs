use std::sync::Arc;

use proptest::prelude::*;

use super::*;
use crate::fincat::FiniteCategory;
use crate::homology::simplicial_homology;
use crate::homology::tests::cyclic_group_homology;
use crate::sset::{Nerve, Simplex, SimplicialMap};

fn cyclic_table(m: usize) -> Vec<Vec<usize>> {
    (0..m).map(|a| (0..m).map(|b| (a + b) % m).collect()).collect()
}

fn cyclic(m: usize) -> GroupoidData {
    let names: Vec<String> = (0..m).map(|k| format!("g{k}")).collect();
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    from_group(&refs, &cyclic_table(m)).unwrap()
}

/// The pair groupoid on `objects` times `Z/m`: one element `(r, t, k)` in
/// every hom-set for each `k`, composing by adding the `k`.
fn pair_times_cyclic(objects: usize, m: usize, basepoint: usize) -> RawGroupoid {
    let obj: Vec<String> = (0..objects).map(|i| ((b'a' + i as u8) as char).to_string()).collect();
    let name = |r: usize, t: usize, k: usize| format!("{}{}{k}", obj[r], obj[t]);
    let mut raw = RawGroupoid { objects: obj.clone(), basepoint: obj[basepoint].clone(), ..Default::default() };
    for r in 0..objects {
        for t in 0..objects {
            raw.elements.push((obj[r].clone(), obj[t].clone(), (0..m).map(|k| name(r, t, k)).collect()));
            for s in 0..objects {
                for a in 0..m {
                    for b in 0..m {
                        raw.compose.push((name(r, s, a), name(s, t, b), name(r, t, (a + b) % m)));
                    }
                }
            }
        }
        raw.identities.push((obj[r].clone(), name(r, r, 0)));
    }
    raw
}

#[test]
fn groups_are_valid() {
    let z2 = cyclic(2);
    assert_eq!(z2.hom_size(0, 0), 2);
    assert_eq!(z2.hom(0, 0)[z2.identity(0)], "g0");
    cyclic(3);
}

#[test]
fn non_invertible_element_rejected() {
    let err = from_group(&["e", "z"], &[vec![0, 1], vec![1, 1]]).unwrap_err();
    assert!(matches!(err, GroupoidError::Bijectivity { ref x, .. } if x == "z"), "{err}");
}

#[test]
fn non_associative_table_rejected() {
    // unit e, and a·a = b, a·b = a, b·a = b, b·b = a is not associative
    let t = vec![vec![0, 1, 2], vec![1, 2, 1], vec![2, 2, 1]];
    let err = from_group(&["e", "a", "b"], &t).unwrap_err();
    assert!(matches!(err, GroupoidError::Associativity(..)), "{err}");
}

#[test]
fn pair_groupoid_is_valid() {
    let g = validate_groupoid(&pair_times_cyclic(2, 3, 0)).unwrap();
    assert!(g.is_connected());
    assert!((0..2).all(|r| (0..2).all(|t| g.hom_size(r, t) == 3)));
    assert_eq!(validate_groupoid(&g.to_raw()).unwrap(), g);
}

#[test]
fn wrong_unit_rejected() {
    let mut raw = pair_times_cyclic(1, 2, 0);
    raw.identities = vec![("a".into(), "aa1".into())];
    assert!(matches!(validate_groupoid(&raw).unwrap_err(), GroupoidError::Unit(_)));
}

#[test]
fn one_sided_hom_set_fails_bijectivity() {
    let s = |x: &str| x.to_string();
    let raw = RawGroupoid {
        objects: vec![s("a"), s("b")],
        basepoint: s("a"),
        elements: vec![(s("a"), s("a"), vec![s("ea")]), (s("b"), s("b"), vec![s("eb")]), (s("b"), s("a"), vec![s("f")])],
        compose: vec![
            (s("ea"), s("ea"), s("ea")),
            (s("eb"), s("eb"), s("eb")),
            (s("eb"), s("f"), s("f")),
            (s("f"), s("ea"), s("f")),
        ],
        identities: vec![(s("a"), s("ea")), (s("b"), s("eb"))],
    };
    let err = validate_groupoid(&raw).unwrap_err();
    assert!(matches!(err, GroupoidError::Bijectivity { .. }), "{err}");
}

#[test]
fn level_counts() {
    let pair = bar_construction(&cyclic(2), 3);
    for n in 0..=3 {
        assert_eq!(pair.bg_simplices(n).len(), 1 << n);
        assert_eq!(pair.eg_simplices(n).len(), 1 << (n + 1));
    }
    let trivial = bar_construction(&from_group(&["e"], &[vec![0]]).unwrap(), 3);
    assert!((0..=3).all(|n| trivial.bg_simplices(n).len() == 1));
    let d = bwe_diagonal(&trivial).unwrap();
    assert_eq!(d.eg.counts(), vec![1, 0, 0, 0]);
}

#[test]
fn identities_hold_in_both_directions() {
    for data in [cyclic(3), validate_groupoid(&pair_times_cyclic(2, 3, 1)).unwrap()] {
        let pair = bar_construction(&data, 3);
        pair.eg.check_identities().unwrap();
        pair.bg.check_identities().unwrap();
    }
}

#[test]
fn diagonal_of_bg_is_the_nerve() {
    let data = cyclic(2);
    let pair = bar_construction(&data, 3);
    let d = bwe_diagonal(&pair).unwrap();
    let cat = Arc::new(FiniteCategory::one_object("*", &["g0", "g1"], 0, &cyclic_table(2)).unwrap());
    let nerve = Nerve::new(&cat, 3);
    let images: Vec<Vec<Simplex>> = (0..=3)
        .map(|n| {
            (0..d.bg.count(n))
                .map(|x| {
                    let row = d.bg_normalized().rows[n][x];
                    let s = &pair.bg_simplices(n)[row];
                    let chain: Vec<usize> = s.elements.iter().map(|&g| cat.morphism_by_label(&data.hom(0, 0)[g]).unwrap()).collect();
                    nerve.simplex_of(0, &chain)
                })
                .collect()
        })
        .collect();
    let iso = SimplicialMap::new(d.bg.clone(), nerve.set.clone(), images).unwrap();
    assert!(iso.is_isomorphism());
    iso.check_operators().unwrap();
}

#[test]
fn homology_of_bz2_matches_resolution() {
    let d = bwe_diagonal(&bar_construction(&cyclic(2), 4)).unwrap();
    let h = simplicial_homology(&d.bg).unwrap();
    let oracle = cyclic_group_homology(2, 3);
    for (k, (betti, torsion)) in oracle.iter().enumerate() {
        let g = h.group(k).unwrap();
        assert_eq!((g.betti, &g.torsion), (*betti, torsion), "degree {k}");
    }
}

#[test]
fn extra_degeneracies() {
    let r = check_extra_degeneracy(&bar_construction(&cyclic(2), 4)).unwrap();
    assert!(r.holds(), "{r}");
    assert!(r.to_string().ends_with("through degree 3)"));
    assert!(check_extra_degeneracy(&bar_construction(&cyclic(3), 3)).unwrap().holds());
    assert!(check_extra_degeneracy(&bar_construction(&from_group(&["e"], &[vec![0]]).unwrap(), 2)).unwrap().holds());
}

#[test]
fn inclusion_of_one_object() {
    let g = validate_groupoid(&pair_times_cyclic(2, 3, 0)).unwrap();
    let r = inclusion_compare(&g, &["a"], 2).unwrap();
    assert!(r.holds(), "{r}");
    assert!(r.to_string().contains("degree 1: H_1 = Z/3 -> H_1 = Z/3 pass"));
    assert!(inclusion_compare(&g, &["a", "b"], 2).unwrap().holds());
    assert!(matches!(inclusion_compare(&g, &[], 2), Err(GroupoidError::Precondition(_))));
}

#[test]
fn disconnected_data_rejected() {
    let s = |x: &str| x.to_string();
    let raw = RawGroupoid {
        objects: vec![s("a"), s("b")],
        basepoint: s("a"),
        elements: vec![(s("a"), s("a"), vec![s("ea")]), (s("b"), s("b"), vec![s("eb")])],
        compose: vec![(s("ea"), s("ea"), s("ea")), (s("eb"), s("eb"), s("eb"))],
        identities: vec![(s("a"), s("ea")), (s("b"), s("eb"))],
    };
    let g = validate_groupoid(&raw).unwrap();
    assert!(matches!(inclusion_compare(&g, &["a"], 1), Err(GroupoidError::Precondition(_))));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn bar_invariants(objects in 1usize..=3, m in 1usize..=3, base in 0usize..3) {
        let data = validate_groupoid(&pair_times_cyclic(objects, m, base % objects)).unwrap();
        let pair = bar_construction(&data, 2);
        for n in 0..=2 {
            for x in pair.eg_simplices(n) {
                let b = &pair.bg_simplices(n)[pair.projection[n][pair.eg_row(x).unwrap()]];
                prop_assert_eq!(&b.objects, &x.objects);
            }
            let expected: usize = pair.bg_simplices(n).iter().map(|b| data.hom_size(b.objects[0], data.basepoint())).sum();
            prop_assert_eq!(pair.eg_simplices(n).len(), expected);
        }
        let d = bwe_diagonal(&pair).unwrap();
        prop_assert_eq!(simplicial_homology(&d.bg).unwrap().betti()[0], 1);
        prop_assert!(check_extra_degeneracy(&pair).unwrap().holds());
    }
}

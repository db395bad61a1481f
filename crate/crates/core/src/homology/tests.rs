use std::sync::Arc;

use proptest::prelude::*;

use super::*;
use crate::fincat::FiniteCategory;
use crate::sset::{boundary, disjoint_union, fold, nerve, point, product, standard_simplex, SimplicialMap};

fn cyclic(m: usize) -> Arc<FiniteCategory> {
    let names: Vec<String> = (0..m).map(|k| format!("g{k}")).collect();
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    let table: Vec<Vec<usize>> = (0..m).map(|a| (0..m).map(|b| (a + b) % m).collect()).collect();
    Arc::new(FiniteCategory::one_object("*", &refs, 0, &table).unwrap())
}

/// `H_n(Z/m)` from the periodic resolution: `Z ← Z ← Z …` with maps
/// alternating `0` and `m` after tensoring with the trivial module.
pub(crate) fn cyclic_group_homology(m: i64, top: usize) -> Vec<(usize, Vec<i64>)> {
    let d = |n: usize| -> i64 { if n == 0 { 0 } else if n % 2 == 1 { 0 } else { m } };
    (0..=top)
        .map(|n| {
            let rank_out = (d(n) != 0) as usize;
            let incoming = d(n + 1);
            let rank_in = (incoming != 0) as usize;
            let betti = 1 - rank_out - rank_in;
            let torsion = if incoming.abs() > 1 { vec![incoming.abs()] } else { vec![] };
            (betti, torsion)
        })
        .collect()
}

#[test]
fn simplex_is_acyclic() {
    let r = simplicial_homology(&standard_simplex(2, 3).unwrap()).unwrap();
    assert!(r.reduced_vanishes_through(2));
    assert_eq!(r.valid_through(), Some(2));
}

#[test]
fn circle_from_boundary() {
    let r = simplicial_homology(&boundary(2, 3).unwrap()).unwrap();
    assert_eq!(r.betti(), vec![1, 1, 0]);
    assert_eq!(r.to_string(), "H_0 = Z\nH_1 = Z\nH_2 = 0\nvalid through degree 2");
}

#[test]
fn sphere_from_boundary() {
    let r = simplicial_homology(&boundary(3, 4).unwrap()).unwrap();
    assert_eq!(r.betti(), vec![1, 0, 1, 0]);
}

#[test]
fn classifying_spaces_of_cyclic_groups() {
    for m in [2usize, 3] {
        let r = simplicial_homology(&nerve(&cyclic(m), 5)).unwrap();
        let expected = cyclic_group_homology(m as i64, 4);
        for (n, (b, t)) in expected.into_iter().enumerate() {
            assert_eq!(r.groups[n].betti, b, "m={m} n={n}");
            assert_eq!(r.groups[n].torsion, t, "m={m} n={n}");
        }
    }
    let r = simplicial_homology(&nerve(&cyclic(2), 4)).unwrap();
    assert_eq!(r.group(1).unwrap().to_string(), "H_1 = Z/2");
}

#[test]
fn euler_characteristics_agree() {
    for x in [boundary(2, 3).unwrap(), nerve(&cyclic(2), 4), standard_simplex(3, 3).unwrap()] {
        let r = simplicial_homology(&x).unwrap();
        assert_eq!(r.chain_euler_characteristic(), r.homology_euler_characteristic());
    }
}

#[test]
fn equivalence_of_simplex_to_point() {
    let s = Arc::new(standard_simplex(2, 3).unwrap());
    let p = Arc::new(point(3));
    let f = SimplicialMap::constant_to(&s, &p, 0);
    let rep = is_homology_equivalence(&f, 2).unwrap();
    assert!(rep.holds, "{rep}");
    let c = Arc::new(boundary(2, 3).unwrap());
    let g = SimplicialMap::constant_to(&c, &p, 0);
    let rep = is_homology_equivalence(&g, 2).unwrap();
    assert!(!rep.holds);
    assert!(rep.pi0_bijective);
    assert!(matches!(is_homology_equivalence(&g, 3), Err(HomologyError::Window { .. })));
}

#[test]
fn fold_detects_components() {
    let p = Arc::new(point(2));
    let f = fold(&p, 2).unwrap();
    let rep = is_homology_equivalence(&f, 1).unwrap();
    assert!(!rep.holds);
    assert!(!rep.pi0_bijective);
    let (two, _) = disjoint_union(&[p.clone(), p.clone()]).unwrap();
    assert_eq!(simplicial_homology(&two).unwrap().betti(), vec![2, 0]);
}

#[test]
fn projection_from_product_with_simplex() {
    let c = Arc::new(boundary(2, 3).unwrap());
    let i = Arc::new(standard_simplex(1, 3).unwrap());
    let (prod, pa, _) = product(&c, &i).unwrap();
    assert_eq!(simplicial_homology(&prod).unwrap().betti(), vec![1, 1, 0]);
    assert!(is_homology_equivalence(&pa, 2).unwrap().holds);
}

#[test]
fn cone_of_identity_is_acyclic() {
    let x = Arc::new(nerve(&cyclic(2), 4));
    let id = SimplicialMap::identity(&x);
    let rep = is_homology_equivalence(&id, 3).unwrap();
    assert!(rep.holds);
    assert!(rep.cone.groups.iter().all(HomologyGroup::is_zero));
}

#[test]
fn malformed_complexes_rejected() {
    let d1 = SparseMatrix::from_entries(1, 1, [(0, 0, 1)]).unwrap();
    let d2 = SparseMatrix::from_entries(1, 1, [(0, 0, 1)]).unwrap();
    let err = ChainComplex::new(vec![1, 1, 1], vec![SparseMatrix::zeros(0, 1), d1, d2]).unwrap_err();
    assert_eq!(err, HomologyError::NotAComplex(2));
}

#[test]
fn serializes_to_json_shape() {
    let r = simplicial_homology(&boundary(2, 2).unwrap()).unwrap();
    assert_eq!(r.groups.len(), 2);
    assert_eq!(r.top_cycle_rank, 0);
}

fn random_complex() -> impl Strategy<Value = ChainComplex> {
    // C_0 ← C_1 ← C_2 built as ∂_1 = A, ∂_2 = K B with A K = 0 by
    // construction from a random change of basis.
    (1usize..4, 1usize..4, 1usize..4, proptest::collection::vec(-2i64..3, 16)).prop_map(|(r0, r1, r2, seed)| {
        let mut a = IntMatrix::zeros(r0, r1);
        for i in 0..r0.min(r1) {
            a.set(i, i, seed[i] + 3);
        }
        let mut b = IntMatrix::zeros(r1, r2);
        for i in r0.min(r1)..r1 {
            for j in 0..r2 {
                b.set(i, j, seed[(i * r2 + j) % 16]);
            }
        }
        let to_sparse = |m: &IntMatrix| {
            let entries = (0..m.rows()).flat_map(|i| (0..m.cols()).map(move |j| (i, j))).map(|(i, j)| (i, j, m.get(i, j)));
            SparseMatrix::from_entries(m.rows(), m.cols(), entries.collect::<Vec<_>>()).unwrap()
        };
        ChainComplex::new(vec![r0, r1, r2, 0], vec![SparseMatrix::zeros(0, r0), to_sparse(&a), to_sparse(&b), SparseMatrix::zeros(r2, 0)])
            .unwrap()
    })
}

proptest! {
    #[test]
    fn euler_characteristic_matches(c in random_complex()) {
        let r = homology(&c).unwrap();
        prop_assert_eq!(r.chain_euler_characteristic(), r.homology_euler_characteristic());
    }

    #[test]
    fn homology_invariant_under_basis_permutation(c in random_complex(), k in 0usize..6) {
        let perms: Vec<Vec<usize>> = c.ranks.iter().map(|&r| {
            let mut p: Vec<usize> = (0..r).collect();
            if r > 0 { p.rotate_left(k % r); }
            p
        }).collect();
        prop_assert_eq!(homology(&c).unwrap().groups, homology(&c.permuted(&perms)).unwrap().groups);
    }
}

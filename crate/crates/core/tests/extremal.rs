use tricolor::coloring::oracle_diameter;
use tricolor::extremal::{
    all_maximizers, allowed_maximizer_median, canonical_witness, certificates, classify_extremal, formula_diameter,
    is_nearly_symmetric_double_star, large_n2_labeling, max_balanced_labeling, maximizer_median_check,
    min_diameter_formula, path_diameter_formula, predicted_extremal_sets, sequential_path_labeling, small_n2_labeling,
    two_level_labeling,
};
use tricolor::labeling::is_balanced;
use tricolor::tree::{double_star, enumerate_trees, leaf_profile, path, star, tree_diameter};
use tricolor::{CanonicalCode, Error, HalfInt, Labeling, Method, Tree};

fn ten_vertex_tree() -> Tree {
    Tree::from_edges(10, &[(0, 1), (1, 2), (1, 3), (1, 4), (2, 5), (3, 6), (5, 7), (6, 8), (6, 9)]).unwrap()
}

#[test]
fn search_agrees_with_oracle() {
    for n in 1..=9 {
        for t in enumerate_trees(n).unwrap() {
            let r = max_balanced_labeling(&t).unwrap();
            assert_eq!(r.value, oracle_diameter(&t).unwrap().0, "{t:?}");
            assert!(is_balanced(&r.witness_labeling));
            assert_eq!(r.witness_labeling.norm() as usize, r.value);
            assert!(r.witness_labeling.median().twice() >= 0);
        }
    }
}

#[test]
fn non_paths_are_below_the_path_value() {
    for n in 7..=9 {
        let p = CanonicalCode::of(&path(n).unwrap());
        for t in enumerate_trees(n).unwrap() {
            if CanonicalCode::of(&t) != p {
                assert!(max_balanced_labeling(&t).unwrap().value < path_diameter_formula(n));
            }
        }
    }
}

#[test]
fn sequential_and_two_level_labelings() {
    assert_eq!(sequential_path_labeling(7).to_vec(), vec![-2, -1, 0, 1, 2, 3, 4]);
    assert_eq!(sequential_path_labeling(6).to_vec(), vec![-1, 0, 1, 2, 3, 4]);
    assert_eq!(sequential_path_labeling(1).to_vec(), vec![1]);
    for n in 1..=12 {
        let h = sequential_path_labeling(n);
        assert!(is_balanced(&h) && h.check(&path(n).unwrap()).is_ok());
        assert_eq!(h.norm() as usize, path_diameter_formula(n));
    }
    assert_eq!(two_level_labeling(&path(4).unwrap()).to_vec(), vec![1, 1, 2, 2]);
    for n in 1..=9 {
        for t in enumerate_trees(n).unwrap() {
            let h = two_level_labeling(&t);
            assert!(is_balanced(&h));
            assert_eq!(h.norm() as usize, min_diameter_formula(n));
        }
    }
}

#[test]
fn small_sphere_construction() {
    let h = small_n2_labeling(&path(10).unwrap(), 0).unwrap();
    assert!(is_balanced(&h));
    assert_eq!(h.norm(), 16);
    let h = small_n2_labeling(&path(12).unwrap(), 0).unwrap();
    assert!(is_balanced(&h));
    assert_eq!(h.norm(), 19);
    assert!(matches!(small_n2_labeling(&star(10).unwrap(), 1), Err(Error::HypothesisFailed(_))));
    assert!(matches!(small_n2_labeling(&star(10).unwrap(), 0), Err(Error::NotALeaf(0))));
}

#[test]
fn large_sphere_example() {
    let t = ten_vertex_tree();
    let p = leaf_profile(&t, 0).unwrap();
    assert_eq!((p.n2, p.n_ge4), (3, 3));
    let h = large_n2_labeling(&t, 0, 2).unwrap();
    assert_eq!(h.to_vec(), vec![-1, 0, 1, 1, 1, 2, 2, 3, 3, 2]);
    assert!(is_balanced(&h));
    assert_eq!(h.norm(), 16);
    assert!(matches!(large_n2_labeling(&t, 0, 3), Err(Error::HypothesisFailed(_))));
}

#[test]
fn constructions_on_all_small_trees() {
    for n in 1..=9 {
        for t in enumerate_trees(n).unwrap() {
            for c in certificates(&t) {
                let h = c.labeling(&t).unwrap();
                assert!(is_balanced(&h), "{t:?} {c:?}");
                assert_eq!(h.norm() as usize, min_diameter_formula(n) + 1);
            }
        }
    }
}

#[test]
fn every_long_tree_has_a_certificate() {
    for n in 7..=9 {
        for t in enumerate_trees(n).unwrap() {
            if tree_diameter(&t) >= 4 {
                assert!(!certificates(&t).is_empty(), "{t:?}");
            }
        }
    }
}

#[test]
fn lopsided_double_stars_exceed_the_minimum() {
    for n in 7usize..=11 {
        for b in 1..n {
            let Some(a) = n.checked_sub(b + 2) else { break };
            if a >= b + 5 {
                let t = double_star(a, b).unwrap();
                assert!(!is_nearly_symmetric_double_star(&t));
                assert!(oracle_diameter(&t).unwrap().0 > min_diameter_formula(n));
            }
        }
    }
}

#[test]
fn double_star_predicates() {
    assert!(!is_nearly_symmetric_double_star(&double_star(7, 2).unwrap()));
    assert!(is_nearly_symmetric_double_star(&double_star(6, 3).unwrap()));
    assert!(!is_nearly_symmetric_double_star(&star(8).unwrap()));
    let s = double_star(6, 3).unwrap();
    assert_eq!(formula_diameter(&s), Some(16));
    assert_eq!(max_balanced_labeling(&s).unwrap().value, 16);
    assert_eq!(formula_diameter(&path(3).unwrap()), Some(4));
    assert_eq!(formula_diameter(&path(8).unwrap()), Some(18));
}

#[test]
fn maximizer_medians() {
    assert!(maximizer_median_check(&path(6).unwrap()).unwrap().contains(&HalfInt::from_twice(3)));
    let p4 = maximizer_median_check(&path(4).unwrap()).unwrap();
    assert!(p4.contains(&HalfInt::from_twice(3)) && p4.contains(&HalfInt::from_twice(-3)));
    assert!(maximizer_median_check(&star(6).unwrap()).unwrap().iter().all(|&m| allowed_maximizer_median(m)));
    let (value, all) = all_maximizers(&path(4).unwrap()).unwrap();
    assert_eq!(value, 6);
    assert!(all.contains(&Labeling::new(vec![1, 1, 2, 2])));
}

#[test]
fn canonical_witness_is_method_independent() {
    for n in 1..=7 {
        for t in enumerate_trees(n).unwrap() {
            assert_eq!(canonical_witness(&t, Method::Search).unwrap(), canonical_witness(&t, Method::Bfs).unwrap());
        }
    }
}

#[test]
fn classification_small_n() {
    let c6 = classify_extremal(6).unwrap();
    assert_eq!(c6.min_trees.len(), 4);
    assert_eq!((c6.max_value, c6.min_value), (11, 9));
    let spider = c6.min_trees.iter().any(|c| c.to_tree().degree_sequence() == vec![3, 2, 2, 1, 1, 1]);
    assert!(spider);

    let c7 = classify_extremal(7).unwrap();
    let (max_set, min_set) = predicted_extremal_sets(7);
    assert_eq!(c7.max_trees, max_set);
    assert_eq!(c7.min_trees, min_set);
    assert_eq!(min_set.len(), 3);
    assert_eq!((c7.max_value, c7.min_value), (13, 10));
    assert!(c7.extremal_mismatches().is_empty());

    let c5 = classify_extremal(5).unwrap();
    assert_eq!(c5.max_value, c5.min_value);
    assert!(matches!(classify_extremal(20), Err(Error::LimitExceeded { .. })));
}

use super::*;
use crate::braces::{brace_dih1_4p, brace_dih2_4p, brace_dih3_4p, brace_isomorphic, brace_pq, verify_brace_axioms};
use crate::groups::{holomorph, AbelianGroup, GroupTable};
use crate::solutions::canonical_form;
use crate::{Bounds, Error};

#[test]
fn regular_subgroups_of_small_holomorphs() {
    let bounds = Bounds::default();
    let count = |m: Vec<u64>| regular_subgroups(&holomorph(&AbelianGroup::new(m).unwrap(), &bounds).unwrap()).len();
    assert_eq!(count(vec![2]), 1);
    assert_eq!(count(vec![5]), 1);
    // Z4: translations, and x -> x + a + 2·[a odd]·x style twists
    assert!(count(vec![4]) >= 2);
}

#[test]
fn braces_on_small_groups() {
    let bounds = Bounds::default();
    let c = braces_on_group(&GroupTable::cyclic(6), &bounds).unwrap();
    assert_eq!(c.braces.len(), 1);
    assert!(c.braces[0].additive().is_cyclic());
    assert!((0..6).all(|a| c.braces[0].lambda_map(a) == (0..6).collect::<Vec<_>>()));

    let c = braces_on_group(&GroupTable::dihedral(3), &bounds).unwrap();
    assert_eq!(c.braces.len(), 1);
    assert!(brace_isomorphic(&c.braces[0], &brace_pq(3, 2, None).unwrap(), &bounds)
        .unwrap()
        .is_some());

    let c = braces_on_group(&GroupTable::dihedral(6), &bounds).unwrap();
    assert_eq!(c.braces.len(), 3);
    for b in [
        brace_dih1_4p(3).unwrap(),
        brace_dih2_4p(3).unwrap(),
        brace_dih3_4p(3).unwrap(),
    ] {
        let hits = c
            .braces
            .iter()
            .filter(|o| brace_isomorphic(o, &b, &bounds).unwrap().is_some())
            .count();
        assert_eq!(hits, 1, "{}", b.id());
    }
    for b in &c.braces {
        assert!(verify_brace_axioms(b, &bounds).unwrap().is_ok());
        assert!(b
            .mult_group()
            .unwrap()
            .find_isomorphism(&GroupTable::dihedral(6))
            .is_some());
    }
}

#[test]
fn braces_of_prime_order_are_trivial() {
    let bounds = Bounds::default();
    for p in [2, 3, 5, 7] {
        let c = braces_of_order(p, &bounds).unwrap();
        assert_eq!(c.braces.len(), 1);
        assert!(c.braces[0].mult_group().unwrap().is_abelian());
    }
}

#[test]
fn census_counts_by_additive_group() {
    let bounds = Bounds::default();
    let c = braces_of_order(6, &bounds).unwrap();
    assert_eq!(c.braces.len(), 2);
    let counts: Vec<usize> = c.counts_by_additive().into_iter().map(|(_, k)| k).collect();
    assert_eq!(counts, vec![2]);
}

#[test]
fn small_solution_censuses() {
    // totals and indecomposable counts from this enumeration, n = 1..4
    let expected = [(1, 1, 1), (2, 2, 1), (3, 5, 1), (4, 23, 5)];
    for (n, total, indec) in expected {
        let all = all_solutions(n, false).unwrap();
        assert_eq!(all.count(), total, "n = {n}");
        assert_eq!(all.indecomposable_count(), indec, "n = {n}");
        assert!(all.solutions.iter().all(|s| s.validate().is_ok()));
        let only = all_solutions(n, true).unwrap();
        assert_eq!(only.count(), indec);
    }
}

#[test]
fn census_entries_are_pairwise_distinct() {
    let c = all_solutions(4, false).unwrap();
    let forms: std::collections::BTreeSet<String> = c.solutions.iter().map(canonical_form).collect();
    assert_eq!(forms.len(), c.count());
}

#[test]
fn search_order_does_not_change_the_census() {
    for n in [3, 4] {
        let a = all_solutions(n, false).unwrap();
        let b = all_solutions_with(n, false, SearchOrder { reversed: true }).unwrap();
        assert_eq!(a.solutions, b.solutions);
    }
}

#[test]
fn enumeration_limits() {
    assert!(matches!(all_solutions(6, false), Err(Error::Resource { .. })));
    assert!(matches!(all_solutions(7, true), Err(Error::Resource { .. })));
    assert!(matches!(all_solutions(0, false), Err(Error::Usage(_))));
}

#[test]
fn dihedral_sizes() {
    let bounds = Bounds::default();
    let r = conjecture_check(3, &bounds).unwrap();
    assert!(r.skipped.is_none());
    assert_eq!(r.braces, 1);
    assert!(r.counterexample.is_none());
    assert_eq!(r.sizes, vec![vec![6]]);
    assert!(r.dichotomy_holds());

    let r = conjecture_check(2, &bounds).unwrap();
    assert!(r.skipped.unwrap().contains("D_4"));
}

use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;

use super::*;
use crate::braces::{brace_cyc_p2q, brace_dih2_4p, brace_pq, brace_semi_p2q, trivial_brace};
use crate::enumerate::{all_solutions, braces_on_group};
use crate::groups::GroupTable;

fn bounds() -> Bounds {
    Bounds::default()
}

fn same_brace(a: &Brace, b: &Brace) -> bool {
    a.additive() == b.additive()
        && a.family_tag() == b.family_tag()
        && a.params() == b.params()
        && a.mult_table() == b.mult_table()
}

#[test]
fn solution_text() {
    let s = Solution::from_sigma(vec![vec![1, 0], vec![1, 0]]).unwrap();
    let text = write_solution(&s);
    assert_eq!(text, "ybe1 solution\nn 2\nsigma 0: 1 0\nsigma 1: 1 0\n");
    assert_eq!(parse_solution(&text).unwrap(), s);
}

#[test]
fn brace_text() {
    let b = brace_pq(7, 3, Some(2)).unwrap();
    assert_eq!(write_brace(&b), "ybe1 brace\nadditive 7 3\nfamily pq p=7 q=3 g=2\n");
    let t = trivial_brace(&AbelianGroup::new(vec![2, 2]).unwrap());
    assert_eq!(write_brace(&t), "ybe1 brace\nadditive 2 2\nfamily trivial\n");
    let table = trivial_brace(&AbelianGroup::new(vec![3]).unwrap()).to_table_brace();
    assert_eq!(
        write_brace(&table),
        "ybe1 brace\nadditive 3\nmult\n0 1 2\n1 2 0\n2 0 1\n"
    );
}

#[test]
fn braces_round_trip() {
    let mut all = vec![
        brace_pq(13, 3, None).unwrap(),
        brace_cyc_p2q(3, 2).unwrap(),
        brace_semi_p2q(7, 3, None).unwrap(),
        brace_dih2_4p(5).unwrap(),
        trivial_brace(&AbelianGroup::new(vec![3, 6]).unwrap()),
    ];
    let tables: Vec<Brace> = all.iter().map(|b| b.to_table_brace()).collect();
    all.extend(tables);
    for b in all {
        let back = parse_brace(&write_brace(&b), &bounds()).unwrap();
        assert!(same_brace(&b, &back), "{}", b.id());
    }
}

#[test]
fn censuses_round_trip() {
    let c = all_solutions(4, false).unwrap();
    let text = write_solution_census(&c);
    let back = parse_solution_census(&text).unwrap();
    assert_eq!((back.n, back.indecomposable_only), (4, false));
    assert_eq!(back.solutions, c.solutions);
    assert_eq!(write_solution_census(&back), text);

    let b = braces_on_group(&GroupTable::dihedral(6), &bounds()).unwrap();
    let text = write_brace_census(&b);
    assert!(text.starts_with("ybe1 brace-census\norder 12\ntarget dihedral D12\ncount 3\nentry 0\nybe1 brace\n"));
    let back = parse_brace_census(&text, &bounds()).unwrap();
    assert_eq!(back.target, b.target);
    assert_eq!(back.braces.len(), 3);
    for (x, y) in b.braces.iter().zip(&back.braces) {
        assert!(same_brace(x, y));
    }
    assert_eq!(write_brace_census(&back), text);
}

#[test]
fn malformed_solutions() {
    let line = |text: &str| match parse_solution(text) {
        Err(Error::Parse { line, .. }) => line,
        other => panic!("expected a parse error, got {other:?}"),
    };
    assert_eq!(line("ybe2 solution\nn 1\nsigma 0: 0\n"), 1);
    assert_eq!(line("ybe1 solution\nn x\n"), 2);
    assert_eq!(line("ybe1 solution\nn 2\nsigma 1: 0 1\nsigma 0: 0 1\n"), 3);
    assert_eq!(line("ybe1 solution\nn 2\nsigma 0: 0 1\nsigma 1: 0\n"), 4);
    assert_eq!(line("ybe1 solution\nn 2\nsigma 0: 0 2\nsigma 1: 0 1\n"), 3);
    assert_eq!(line("ybe1 solution\nn 2\nsigma 0: 0 1\n"), 4);
    assert_eq!(line("ybe1 solution\nn 1\nsigma 0: 0\nextra\n"), 4);
    // rows are permutations but the braid relation fails
    let bad = "ybe1 solution\nn 3\nsigma 0: 1 0 2\nsigma 1: 0 1 2\nsigma 2: 0 1 2\n";
    assert!(matches!(parse_solution(bad), Err(Error::Validation(_))));
    let not_bijective = "ybe1 solution\nn 2\nsigma 0: 0 0\nsigma 1: 0 1\n";
    assert!(matches!(parse_solution(not_bijective), Err(Error::Validation(_))));
}

#[test]
fn malformed_braces() {
    let b = bounds();
    assert!(matches!(
        parse_brace("ybe1 brace\nadditive 7 3\nfamily pq p=7 q=3 g=2 g=2\n", &b),
        Err(Error::Parse { line: 3, .. })
    ));
    assert!(matches!(
        parse_brace("ybe1 brace\nadditive 7 3\nfamily torus p=7\n", &b),
        Err(Error::Parse { line: 3, .. })
    ));
    assert!(matches!(
        parse_brace("ybe1 brace\nadditive 7 3\nfamily pq p=5 q=3\n", &b),
        Err(Error::Domain(_))
    ));
    // a family brace on the wrong additive group
    assert!(parse_brace("ybe1 brace\nadditive 21\nfamily pq p=7 q=3\n", &b).is_err());
    // Z3 with multiplication table of Z3 but shifted: 0 is no longer the identity
    let shifted = "ybe1 brace\nadditive 3\nmult\n1 2 0\n2 0 1\n0 1 2\n";
    assert!(matches!(parse_brace(shifted, &b), Err(Error::Validation(_))));
    assert!(matches!(
        parse_brace("ybe1 brace\nadditive 3\nmult\n0 1 2\n1 2 0\n", &b),
        Err(Error::Parse { line: 6, .. })
    ));
}

#[test]
fn census_entries_numbered() {
    let text = "ybe1 solution-census\nn 1\nindecomposable 0\ncount 1\nentry 3\nybe1 solution\nn 1\nsigma 0: 0\n";
    assert!(matches!(parse_solution_census(text), Err(Error::Parse { line: 5, .. })));
    let wrong_size = "ybe1 solution-census\nn 2\nindecomposable 0\ncount 1\nentry 0\nybe1 solution\nn 1\nsigma 0: 0\n";
    assert!(parse_solution_census(wrong_size).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// Any relabeling of a small solution survives a round trip.
    #[test]
    fn relabeled_solutions_round_trip(idx in 0usize..23, seed in any::<u64>()) {
        let census = all_solutions(4, false).unwrap();
        let s = &census.solutions[idx];
        let mut phi: Vec<usize> = (0..4).collect();
        phi.shuffle(&mut rand::rngs::StdRng::seed_from_u64(seed));
        let t = s.relabel(&phi);
        prop_assert_eq!(parse_solution(&write_solution(&t)).unwrap(), t);
    }
}

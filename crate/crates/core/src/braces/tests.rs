use super::*;
use crate::arith;
use crate::groups::{identify_group, GroupDescriptor};
use crate::Bounds;

fn el(v: &[u64]) -> Element {
    Element(v.to_vec())
}

fn mul(b: &Brace, x: &[u64], y: &[u64]) -> Vec<u64> {
    b.mul(&el(x), &el(y)).unwrap().0
}

/// Multiplicative order by repeated products on coordinates.
fn order_by_powers(b: &Brace, x: &[u64]) -> u64 {
    let zero = b.additive().zero();
    let mut y = el(x);
    let mut k = 1;
    while y != zero {
        y = b.mul(&y, &el(x)).unwrap();
        k += 1;
    }
    k
}

fn all_family_braces() -> Vec<Brace> {
    let mut v = vec![
        trivial_brace(&AbelianGroup::new(vec![6]).unwrap()),
        trivial_brace(&AbelianGroup::new(vec![2, 2]).unwrap()),
    ];
    for (p, q) in [(3, 2), (5, 2), (7, 3), (13, 3), (11, 5)] {
        v.push(brace_pq(p, q, None).unwrap());
    }
    for q in [3, 5, 7] {
        v.push(brace_cyc_4q(q).unwrap());
        v.push(brace_noncyc_4q(q).unwrap());
    }
    for (p, q) in [(3, 2), (5, 2), (3, 5), (5, 3)] {
        v.push(brace_cyc_p2q(p, q).unwrap());
        v.push(brace_noncyc_p2q(p, q).unwrap());
    }
    for (p, q) in [(3, 2), (5, 2), (7, 3)] {
        v.push(brace_semi_p2q(p, q, None).unwrap());
    }
    for p in [3, 5, 7] {
        v.push(brace_dih1_4p(p).unwrap());
        v.push(brace_dih2_4p(p).unwrap());
        v.push(brace_dih3_4p(p).unwrap());
    }
    v
}

#[test]
fn trivial_braces() {
    let b = trivial_brace(&AbelianGroup::new(vec![6]).unwrap());
    assert_eq!(mul(&b, &[4], &[5]), vec![3]);
    for x in 0..6 {
        assert_eq!(b.lambda_map(x), (0..6).collect::<Vec<_>>());
    }
    let k = trivial_brace(&AbelianGroup::new(vec![2, 2]).unwrap());
    assert!(!k.additive().is_cyclic());
    assert!(verify_brace_axioms(&k, &Bounds::default()).unwrap().is_ok());
}

#[test]
fn formula_examples() {
    let b = brace_pq(3, 2, Some(2)).unwrap();
    assert_eq!(mul(&b, &[1, 1], &[2, 1]), vec![2, 0]);
    assert_eq!(mul(&b, &[0, 0], &[2, 1]), vec![2, 1]);
    let b = brace_pq(7, 3, Some(2)).unwrap();
    assert_eq!(mul(&b, &[1, 1], &[1, 0]), vec![3, 1]);

    let b = brace_cyc_4q(3).unwrap();
    assert_eq!(mul(&b, &[0, 1, 1], &[0, 1, 1]), vec![1, 0, 2]);
    assert_eq!(order_by_powers(&b, &[0, 1, 1]), 12);

    let b = brace_cyc_p2q(3, 2).unwrap();
    assert_eq!(mul(&b, &[1, 1], &[1, 1]), vec![5, 0]);
    assert_eq!(order_by_powers(&b, &[1, 1]), 18);

    let b = brace_noncyc_4q(3).unwrap();
    assert_eq!(mul(&b, &[1, 1], &[0, 1]), vec![1, 0]);
    for x in b.additive().elements().filter(|x| x.0[1] != 0) {
        assert_eq!(2 * 3 % order_by_powers(&b, &x.0), 0);
    }

    let b = brace_noncyc_p2q(3, 2).unwrap();
    assert_eq!(mul(&b, &[1, 1, 0], &[0, 1, 0]), vec![2, 2, 0]);
    assert_eq!(order_by_powers(&b, &[0, 1, 0]), 3);

    let b = brace_semi_p2q(3, 2, Some(8)).unwrap();
    assert_eq!(mul(&b, &[1, 1], &[1, 0]), vec![0, 1]);

    let b = brace_dih1_4p(3).unwrap();
    assert_eq!(mul(&b, &[1, 1], &[1, 1]), vec![0, 0]);

    let b = brace_dih2_4p(3).unwrap();
    assert_eq!(mul(&b, &[1, 2], &[1, 0]), vec![0, 2]);

    let b = brace_dih3_4p(3).unwrap();
    assert_eq!(mul(&b, &[1, 0, 1], &[1, 0, 1]), vec![0, 0, 0]);
}

#[test]
fn identity_law_for_every_family() {
    for b in all_family_braces() {
        let zero = b.additive().zero();
        for x in b.additive().elements() {
            assert_eq!(b.mul(&zero, &x).unwrap(), x, "{}", b.id());
            assert_eq!(b.mul(&x, &zero).unwrap(), x, "{}", b.id());
        }
    }
}

#[test]
fn dih2_sign_pattern() {
    let b = brace_dih2_4p(5).unwrap();
    let signs: Vec<u64> = (0..4).map(|s| mul(&b, &[0, s], &[1, 0])[0]).collect();
    assert_eq!(signs, vec![1, 1, 4, 4]);
}

#[test]
fn parameter_errors() {
    assert!(matches!(brace_pq(5, 3, None), Err(Error::Domain(m)) if m.contains("p ≡ 1 (mod q)")));
    assert!(brace_pq(7, 3, Some(3)).is_err());
    assert!(brace_pq(9, 2, None).is_err());
    assert!(brace_cyc_4q(2).is_err());
    assert!(brace_cyc_p2q(2, 3).is_err());
    assert!(brace_noncyc_4q(2).is_err());
    assert!(brace_noncyc_p2q(2, 3).is_err());
    assert!(brace_semi_p2q(5, 3, None).is_err());
    assert!(brace_dih1_4p(2).is_err());
    assert!(brace_dih2_4p(2).is_err());
    assert!(brace_dih3_4p(2).is_err());
}

#[test]
fn every_family_satisfies_the_axioms() {
    let bounds = Bounds::default();
    for b in all_family_braces() {
        let r = verify_brace_axioms(&b, &bounds).unwrap();
        assert!(r.is_ok(), "{}: {:?}", b.id(), r.violation);
    }
}

#[test]
fn lambda_is_an_action_by_automorphisms() {
    for b in all_family_braces().into_iter().filter(|b| b.order() <= 200) {
        let n = b.order();
        let maps: Vec<Vec<usize>> = (0..n).map(|a| b.lambda_map(a)).collect();
        for a in 0..n {
            for x in 0..n {
                for y in 0..n {
                    assert_eq!(maps[a][b.add_idx(x, y)], b.add_idx(maps[a][x], maps[a][y]));
                }
            }
            for c in 0..n {
                let ac = b.mul_idx(a, c);
                for x in 0..n {
                    assert_eq!(maps[ac][x], maps[a][maps[c][x]], "{}", b.id());
                }
            }
        }
    }
}

#[test]
fn lambda_examples() {
    let t = trivial_brace(&AbelianGroup::new(vec![5]).unwrap());
    assert_eq!(t.lambda(&el(&[3]), &el(&[2])).unwrap(), el(&[2]));
    let b = brace_pq(3, 2, None).unwrap();
    assert_eq!(b.lambda(&el(&[0, 1]), &el(&[1, 0])).unwrap(), el(&[2, 0]));
    let b = brace_cyc_4q(3).unwrap();
    assert_eq!(b.lambda(&el(&[0, 1, 0]), &el(&[1, 1, 1])).unwrap(), el(&[0, 1, 1]));
}

#[test]
fn multiplicative_groups_match_the_families() {
    use GroupDescriptor::*;
    let id = |b: Brace| identify_group(&b.mult_group().unwrap());
    for (p, q) in [(3, 2), (7, 3), (13, 3), (11, 5)] {
        let d = id(brace_pq(p, q, None).unwrap());
        if q == 2 {
            assert_eq!(d, Dihedral((2 * p) as usize));
        } else {
            assert!(matches!(d, Semidirect { m, q: qq, .. } if m == p as usize && qq == q as usize));
        }
    }
    for q in [3, 5, 7] {
        assert_eq!(id(brace_cyc_4q(q).unwrap()), Cyclic(4 * q as usize));
        assert_eq!(id(brace_noncyc_4q(q).unwrap()), Abelian(vec![2, 2 * q]));
    }
    for (p, q) in [(3, 2), (5, 2), (3, 5), (5, 3)] {
        assert_eq!(id(brace_cyc_p2q(p, q).unwrap()), Cyclic((p * p * q) as usize));
        assert_eq!(id(brace_noncyc_p2q(p, q).unwrap()), Abelian(vec![p, p * q]));
    }
    assert_eq!(id(brace_semi_p2q(3, 2, None).unwrap()), Dihedral(18));
    assert_eq!(id(brace_semi_p2q(5, 2, None).unwrap()), Dihedral(50));
    assert!(matches!(
        id(brace_semi_p2q(7, 3, None).unwrap()),
        Semidirect { m: 49, q: 3, .. }
    ));
    for p in [3, 5, 7] {
        let n = 4 * p as usize;
        assert_eq!(id(brace_dih1_4p(p).unwrap()), Dihedral(n));
        assert_eq!(id(brace_dih2_4p(p).unwrap()), Dihedral(n));
        assert_eq!(id(brace_dih3_4p(p).unwrap()), Dihedral(n));
    }
}

#[test]
fn automorphism_examples() {
    let bounds = Bounds::default();
    let count = |b: Brace| brace_automorphisms(&b, &bounds).unwrap().len() as u64;
    assert_eq!(count(brace_pq(7, 3, None).unwrap()), 6);
    // α ∈ {1, 4, 7} mod 9 all respect `pac`, since p·x mod p^2 only sees x mod p
    assert_eq!(count(brace_cyc_p2q(3, 2).unwrap()), 3);
    assert_eq!(count(brace_noncyc_p2q(3, 2).unwrap()), 6);
}

/// Units `α` mod `p^2` with `pα^2 ≡ pα (mod p^2)`, times the units mod `q`.
fn cyc_p2q_aut_oracle(p: u64, q: u64) -> u64 {
    let m = p * p;
    let alphas = (1..m)
        .filter(|&a| arith::gcd(a, m) == 1 && (p * a * a) % m == (p * a) % m)
        .count() as u64;
    alphas * (q - 1)
}

#[test]
fn automorphism_counts_match_closed_forms() {
    let bounds = Bounds::default();
    let count = |b: Brace| brace_automorphisms(&b, &bounds).unwrap().len() as u64;
    for (p, q) in [(3, 2), (5, 2), (7, 2), (7, 3), (13, 3), (11, 5)] {
        assert_eq!(count(brace_pq(p, q, None).unwrap()), p - 1);
    }
    for q in [3, 5, 7] {
        assert_eq!(count(brace_cyc_4q(q).unwrap()), 2 * (q - 1));
        assert_eq!(count(brace_noncyc_4q(q).unwrap()), arith::totient(4 * q));
    }
    for (p, q) in [(3, 2), (5, 2), (3, 5), (5, 3), (3, 7)] {
        assert_eq!(count(brace_cyc_p2q(p, q).unwrap()), cyc_p2q_aut_oracle(p, q));
        assert_eq!(count(brace_noncyc_p2q(p, q).unwrap()), p * (p - 1) * (q - 1));
    }
    for (p, q) in [(3, 2), (5, 2), (7, 3)] {
        assert_eq!(count(brace_semi_p2q(p, q, None).unwrap()), arith::totient(p * p));
    }
    for p in [3, 5, 7] {
        assert_eq!(count(brace_dih1_4p(p).unwrap()), arith::totient(4 * p));
        assert_eq!(count(brace_dih2_4p(p).unwrap()), p - 1);
    }
}

#[test]
fn automorphisms_form_a_group() {
    let bounds = Bounds::default();
    for b in [
        brace_noncyc_p2q(3, 2).unwrap(),
        brace_dih1_4p(5).unwrap(),
        brace_pq(13, 3, None).unwrap(),
    ] {
        let auts = brace_automorphisms(&b, &bounds).unwrap();
        let a = b.additive();
        let set: std::collections::HashSet<&[u32]> = auts.iter().map(|f| f.map()).collect();
        for f in &auts {
            assert!(set.contains(f.0.inverse(a, a).map()));
            for g in &auts {
                assert!(set.contains(f.0.compose(&g.0, a, a).map()));
            }
        }
    }
}

#[test]
fn choice_of_g_does_not_matter() {
    let bounds = Bounds::default();
    for (p, q) in [(7u64, 3u64), (13, 3), (11, 5)] {
        let gs: Vec<u64> = (2..p)
            .filter(|&g| arith::multiplicative_order(g, p) == Some(q))
            .collect();
        let base = brace_pq(p, q, Some(gs[0])).unwrap();
        for &g in &gs[1..] {
            let other = brace_pq(p, q, Some(g)).unwrap();
            assert!(
                brace_isomorphic(&base, &other, &bounds).unwrap().is_some(),
                "p={p} q={q} g={g}"
            );
        }
    }
    let m = 49;
    let gs: Vec<u64> = (2..m)
        .filter(|&g| arith::multiplicative_order(g, m) == Some(3))
        .collect();
    assert_eq!(gs, vec![18, 30]);
    let a = brace_semi_p2q(7, 3, Some(18)).unwrap();
    let b = brace_semi_p2q(7, 3, Some(30)).unwrap();
    assert!(brace_isomorphic(&a, &b, &bounds).unwrap().is_some());
}

#[test]
fn isomorphism_examples() {
    let bounds = Bounds::default();
    let b = brace_pq(3, 2, Some(2)).unwrap();
    let w = brace_isomorphic(&b, &b, &bounds).unwrap().unwrap();
    assert!((0..6).all(|x| w.apply(x) == x));

    // Conjugate the product by the additive automorphism (a, b) -> (2a, b).
    let a = b.additive().clone();
    let phi = |x: usize| {
        let e = a.decode(x);
        a.encode(&Element(vec![2 * e.0[0] % 3, e.0[1]]))
    };
    let mut t = vec![0u32; 36];
    for x in 0..6 {
        for y in 0..6 {
            t[phi(x) * 6 + phi(y)] = phi(b.mul_idx(x, y)) as u32;
        }
    }
    let relabeled = brace_from_table(a.clone(), t, &bounds).unwrap();
    assert!(brace_isomorphic(&b, &relabeled, &bounds).unwrap().is_some());

    let triv = trivial_brace(&AbelianGroup::new(vec![6]).unwrap());
    assert!(brace_isomorphic(&triv, &b, &bounds).unwrap().is_none());
}

#[test]
fn table_braces() {
    let bounds = Bounds::default();
    let a = AbelianGroup::new(vec![3, 2]).unwrap();
    let add = a.addition_table().raw_table().to_vec();
    let t = brace_from_table(a.clone(), add, &bounds).unwrap();
    assert!(brace_isomorphic(&t, &trivial_brace(&a), &bounds).unwrap().is_some());
    assert_eq!(t.family_tag(), FamilyTag::Table);

    let pq = brace_pq(3, 2, None).unwrap();
    let tab = brace_from_table(a.clone(), pq.mult_table().to_vec(), &bounds).unwrap();
    for x in a.elements() {
        for y in a.elements() {
            assert_eq!(tab.mul(&x, &y).unwrap(), pq.mul(&x, &y).unwrap());
        }
    }

    // A Latin square that is not a compatible group law.
    let latin: Vec<u32> = (0..36).map(|i| ((i / 6 + 2 * (i % 6)) % 6) as u32).collect();
    assert!(matches!(
        brace_from_table(a.clone(), latin, &bounds),
        Err(Error::Validation(_))
    ));
}

#[test]
fn corrupted_entry_is_reported() {
    let bounds = Bounds::default();
    let pq = brace_pq(7, 3, None).unwrap();
    let mut t = pq.mult_table().to_vec();
    // swap two products in one row: still a Latin row, breaks the law
    let n = 21;
    t.swap(5 * n + 3, 5 * n + 4);
    let b = Brace::from_rule(pq.additive().clone(), MultRule::Table(t.into()));
    let r = verify_brace_axioms(&b, &bounds).unwrap();
    assert!(r.violation.is_some());
    assert!(r.violation.unwrap().describe(&b).contains('('));
}

#[test]
fn family_round_trip_by_parameters() {
    for b in all_family_braces() {
        let again = family_brace(b.family_tag(), b.params(), Some(b.additive())).unwrap();
        assert!(b.same_structure(&again));
    }
}

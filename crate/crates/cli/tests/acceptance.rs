//! Acceptance criteria 1-11, one PASS/FAIL line each.
//!
//! Runs without the libtest harness so the lines always reach standard
//! output. A criterion listed in `KNOWN_FAILURES` is still run and reported
//! as FAIL; the target exits nonzero when the set of failing criteria differs
//! from that list in either direction.

use std::collections::{BTreeMap, BTreeSet};
use std::process::Command;
use std::time::Instant;

use ybe_core::arith::totient;
use ybe_core::braces::{
    brace_automorphisms, brace_cyc_4q, brace_cyc_p2q, brace_dih1_4p, brace_dih2_4p, brace_dih3_4p, brace_isomorphic,
    brace_noncyc_4q, brace_noncyc_p2q, brace_pq, brace_semi_p2q, trivial_brace, Brace,
};
use ybe_core::construct::{
    build_solution, classify, classify_group, corefree_subgroups, is_generating_orbit, lambda_orbits, ClassifyOptions,
    ConstructionDatum, GroupFamily,
};
use ybe_core::enumerate::{all_solutions, braces_of_order, braces_on_group};
use ybe_core::format;
use ybe_core::groups::{identify_group, AbelianGroup, GroupDescriptor, GroupTable};
use ybe_core::solutions::{canonical_form, induced_brace};
use ybe_core::Bounds;

/// Criterion 5 includes the stated automorphism count `q-1` for the
/// non-trivial brace with cyclic multiplicative group of order `p²q`, `p`
/// odd. The product-preserving units are those `≡ 1 (mod p)`, `p(q-1)` of
/// them, so that part fails.
const KNOWN_FAILURES: &[usize] = &[5];

type Outcome = Result<String, String>;
type Criterion = (usize, &'static str, fn() -> Outcome);

fn bounds() -> Bounds {
    Bounds::default()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn census(family: GroupFamily, p: u64, q: Option<u64>) -> Result<(usize, Vec<usize>), String> {
    let c = classify_group(family, p, q, &bounds(), ClassifyOptions::default()).map_err(|e| e.to_string())?;
    Ok((c.total(), c.sizes()))
}

fn criterion_1() -> Outcome {
    for (p, q) in [(3, 2), (5, 2), (7, 3), (13, 3), (11, 5)] {
        let n = (p * q) as usize;
        let (total, sizes) = census(GroupFamily::CyclicPq, p, Some(q))?;
        ensure(total == 1 && sizes == [n], || {
            format!("cyclic Z{n}: {total} solutions, sizes {sizes:?}")
        })?;
        let (total, sizes) = census(GroupFamily::SemidirectPq, p, Some(q))?;
        ensure(total == (q - 1) as usize && sizes.iter().all(|&s| s == n), || {
            format!("Z{p}:Z{q}: {total} solutions, sizes {sizes:?}, expected {}", q - 1)
        })?;
    }
    Ok("5 parameter pairs, cyclic 1 and semidirect q-1, all of size pq".into())
}

fn criterion_2() -> Outcome {
    for (p, q) in [(2, 3), (2, 5), (3, 2), (5, 2), (5, 3)] {
        let (total, _) = census(GroupFamily::CyclicP2q, p, Some(q))?;
        ensure(total == p as usize, || {
            format!("Z{}: {total} solutions, expected {p}", p * p * q)
        })?;
    }
    Ok("5 parameter pairs, p solutions each".into())
}

fn criterion_3() -> Outcome {
    let cases = [(2, 3), (2, 5), (2, 7), (3, 2), (5, 2), (3, 5)];
    for (p, q) in cases {
        let c = classify_group(
            GroupFamily::NoncyclicP2q,
            p,
            Some(q),
            &bounds(),
            ClassifyOptions::default(),
        )
        .map_err(|e| e.to_string())?;
        ensure(c.total() == 1, || format!("p={p} q={q}: {} solutions", c.total()))?;
        let trivial: usize = c
            .rows
            .iter()
            .filter(|r| r.brace_id.starts_with("trivial"))
            .map(|r| r.classes())
            .sum();
        ensure(trivial == 0, || format!("p={p} q={q}: trivial brace gives {trivial}"))?;
    }
    Ok("6 groups, 1 solution each, none from the trivial brace".into())
}

fn criterion_4() -> Outcome {
    for p in [3u64, 5] {
        let n = (2 * p * p) as usize;
        let (total, sizes) = census(GroupFamily::Dihedral2p2, p, None)?;
        ensure(total == 1 && sizes == [n], || {
            format!("D{n}: {total} solutions, sizes {sizes:?}")
        })?;
    }
    for p in [3u64, 5, 7] {
        let n = (4 * p) as usize;
        let (total, sizes) = census(GroupFamily::Dihedral4p, p, None)?;
        ensure(total == 2 && sizes == [n, n], || {
            format!("D{n}: {total} solutions, sizes {sizes:?}")
        })?;
    }
    let (total, sizes) = census(GroupFamily::SemidirectP2q, 7, Some(3))?;
    ensure(total == 2 && sizes == [147, 147], || {
        format!("Z49:Z3: {total} solutions, sizes {sizes:?}")
    })?;
    Ok("D18, D50: 1; D12, D20, D28: 2; Z49:Z3: 2 of size 147".into())
}

fn criterion_5() -> Outcome {
    let auts = |b: Brace| {
        brace_automorphisms(&b, &bounds())
            .map(|a| a.len() as u64)
            .map_err(|e| e.to_string())
    };
    let mut cases: Vec<(String, u64, u64)> = Vec::new();
    let mut add = |name: String, b: Result<Brace, ybe_core::Error>, expected: u64| -> Result<(), String> {
        let b = b.map_err(|e| e.to_string())?;
        cases.push((name, auts(b)?, expected));
        Ok(())
    };
    for (p, q) in [(3, 2), (5, 2), (7, 3), (13, 3), (11, 5)] {
        add(format!("pq({p},{q})"), brace_pq(p, q, None), p - 1)?;
    }
    for q in [3, 5, 7] {
        add(format!("cyc4q({q})"), brace_cyc_4q(q), 2 * (q - 1))?;
        add(format!("noncyc4q({q})"), brace_noncyc_4q(q), totient(4 * q))?;
    }
    for (p, q) in [(3, 2), (5, 2), (5, 3)] {
        add(format!("cycP2q({p},{q})"), brace_cyc_p2q(p, q), q - 1)?;
    }
    for (p, q) in [(3, 2), (5, 2), (3, 5)] {
        add(
            format!("noncycP2q({p},{q})"),
            brace_noncyc_p2q(p, q),
            p * (p - 1) * (q - 1),
        )?;
    }
    for (p, q) in [(3, 2), (5, 2), (7, 3)] {
        add(format!("semiP2q({p},{q})"), brace_semi_p2q(p, q, None), totient(p * p))?;
    }
    for p in [3, 5, 7] {
        add(format!("dih1({p})"), brace_dih1_4p(p), totient(4 * p))?;
        add(format!("dih2({p})"), brace_dih2_4p(p), p - 1)?;
    }
    let wrong: Vec<String> = cases
        .iter()
        .filter(|(_, got, want)| got != want)
        .map(|(name, got, want)| format!("{name}: |Aut| = {got}, stated {want}"))
        .collect();
    if wrong.is_empty() {
        Ok(format!("{} braces", cases.len()))
    } else {
        Err(format!(
            "{} of {} differ: {}",
            wrong.len(),
            cases.len(),
            wrong.join("; ")
        ))
    }
}

fn generating_orbits(b: &Brace) -> Result<usize, String> {
    let orbits = lambda_orbits(b, &bounds()).map_err(|e| e.to_string())?;
    Ok(orbits.iter().filter(|o| is_generating_orbit(b, o)).count())
}

fn criterion_6() -> Outcome {
    for (p, q, expected) in [(7, 3, 4), (13, 3, 8)] {
        let got = generating_orbits(&brace_pq(p, q, None).map_err(|e| e.to_string())?)?;
        ensure(got == expected, || {
            format!("pq({p},{q}): {got} generating orbits, expected {expected}")
        })?;
    }
    for p in [3, 5] {
        let got = generating_orbits(&brace_dih3_4p(p).map_err(|e| e.to_string())?)?;
        ensure(got == 0, || format!("dih3({p}): {got} generating orbits"))?;
    }
    Ok("pq(7,3): 4, pq(13,3): 8, dih3(3), dih3(5): 0".into())
}

fn criterion_7() -> Outcome {
    let ab = |m: &[u64]| AbelianGroup::new(m.to_vec()).expect("moduli");
    let e = |r: Result<Brace, ybe_core::Error>| r.expect("family parameters");
    let cases: Vec<(&str, GroupTable, Vec<Brace>)> = vec![
        ("Z6", GroupTable::cyclic(6), vec![trivial_brace(&ab(&[6]))]),
        ("D6", GroupTable::dihedral(3), vec![e(brace_pq(3, 2, None))]),
        ("Z10", GroupTable::cyclic(10), vec![trivial_brace(&ab(&[10]))]),
        ("D10", GroupTable::dihedral(5), vec![e(brace_pq(5, 2, None))]),
        (
            "Z12",
            GroupTable::cyclic(12),
            vec![trivial_brace(&ab(&[12])), e(brace_cyc_4q(3))],
        ),
        (
            "D12",
            GroupTable::dihedral(6),
            vec![e(brace_dih1_4p(3)), e(brace_dih2_4p(3)), e(brace_dih3_4p(3))],
        ),
        ("Z14", GroupTable::cyclic(14), vec![trivial_brace(&ab(&[14]))]),
        ("D14", GroupTable::dihedral(7), vec![e(brace_pq(7, 2, None))]),
        (
            "Z18",
            GroupTable::cyclic(18),
            vec![trivial_brace(&ab(&[18])), e(brace_cyc_p2q(3, 2))],
        ),
        ("D18", GroupTable::dihedral(9), vec![e(brace_semi_p2q(3, 2, None))]),
        (
            "Z3xZ3xZ2",
            GroupTable::cyclic(3)
                .direct_product(&GroupTable::cyclic(3))
                .direct_product(&GroupTable::cyclic(2)),
            vec![trivial_brace(&ab(&[3, 3, 2])), e(brace_noncyc_p2q(3, 2))],
        ),
    ];
    for (name, g, families) in &cases {
        let found = braces_on_group(g, &bounds()).map_err(|e| e.to_string())?;
        ensure(found.braces.len() == families.len(), || {
            format!("{name}: {} braces found, {} listed", found.braces.len(), families.len())
        })?;
        for f in families {
            let matches = found
                .braces
                .iter()
                .filter(|b| brace_isomorphic(b, f, &bounds()).is_ok_and(|m| m.is_some()))
                .count();
            ensure(matches == 1, || {
                format!("{name}: {} matches {matches} found braces", f.id())
            })?;
        }
    }
    Ok(format!("{} groups of orders 6, 10, 12, 14, 18", cases.len()))
}

fn criterion_8() -> Outcome {
    // construction outputs of size <= 4 from every brace of order <= 12
    let mut constructed = BTreeSet::new();
    for order in 1..=12 {
        for b in braces_of_order(order, &bounds()).map_err(|e| e.to_string())?.braces {
            for s in classify(&b, &bounds()).map_err(|e| e.to_string())?.solutions {
                if s.n() <= 4 {
                    constructed.insert(canonical_form(&s));
                }
            }
        }
    }
    let mut from_census = BTreeSet::new();
    for n in 1..=4 {
        let c = all_solutions(n, false).map_err(|e| e.to_string())?;
        for s in &c.solutions {
            ensure(s.validate().is_ok(), || {
                format!("census entry of size {n} fails validation")
            })?;
            if s.is_indecomposable() && s.permutation_group().order() <= 12 {
                from_census.insert(canonical_form(s));
            }
        }
    }
    ensure(constructed == from_census, || {
        format!(
            "{} constructed, {} in census, {} only constructed, {} only in census",
            constructed.len(),
            from_census.len(),
            constructed.difference(&from_census).count(),
            from_census.difference(&constructed).count()
        )
    })?;

    let start = Instant::now();
    let six = all_solutions(6, true).map_err(|e| e.to_string())?;
    let mut groups: BTreeMap<String, usize> = BTreeMap::new();
    for s in &six.solutions {
        *groups
            .entry(identify_group(&s.permutation_group().to_table()).to_string())
            .or_default() += 1;
    }
    let z6 = groups
        .get(&GroupDescriptor::Cyclic(6).to_string())
        .copied()
        .unwrap_or(0);
    let d6 = groups
        .get(&GroupDescriptor::Dihedral(6).to_string())
        .copied()
        .unwrap_or(0);
    ensure(z6 == 1 && d6 == 1, || format!("size 6: {z6} with Z6, {d6} with D6"))?;
    Ok(format!(
        "n <= 4: {} indecomposable classes agree; n = 6: {} indecomposable, one each with Z6 and D6 ({:.1}s)",
        constructed.len(),
        six.count(),
        start.elapsed().as_secs_f64()
    ))
}

/// Every family brace from the sweep of criteria 1-6.
fn sweep_braces() -> Vec<Brace> {
    let e = |r: Result<Brace, ybe_core::Error>| r.expect("family parameters");
    let mut v = Vec::new();
    for (p, q) in [(3, 2), (5, 2), (7, 3), (13, 3), (11, 5)] {
        v.push(trivial_brace(&AbelianGroup::cyclic(p * q).expect("order")));
        v.push(e(brace_pq(p, q, None)));
    }
    for q in [3, 5, 7] {
        v.push(e(brace_cyc_4q(q)));
        v.push(e(brace_noncyc_4q(q)));
    }
    for (p, q) in [(3, 2), (5, 2), (5, 3)] {
        v.push(e(brace_cyc_p2q(p, q)));
    }
    for (p, q) in [(3, 2), (5, 2), (3, 5)] {
        v.push(e(brace_noncyc_p2q(p, q)));
    }
    for (p, q) in [(3, 2), (5, 2), (7, 3)] {
        v.push(e(brace_semi_p2q(p, q, None)));
    }
    for p in [3, 5, 7] {
        v.push(e(brace_dih1_4p(p)));
        v.push(e(brace_dih2_4p(p)));
        v.push(e(brace_dih3_4p(p)));
    }
    for n in [12, 18, 20, 50, 75] {
        v.push(trivial_brace(&AbelianGroup::cyclic(n).expect("order")));
    }
    v
}

fn criterion_9() -> Outcome {
    let mut outputs = 0;
    let braces = sweep_braces();
    for b in &braces {
        if b.order() > 200 {
            continue;
        }
        let orbits = lambda_orbits(b, &bounds()).map_err(|e| e.to_string())?;
        for o in orbits.iter().filter(|o| is_generating_orbit(b, o)) {
            let x = o.representative();
            for k in corefree_subgroups(b, x, &bounds()).map_err(|e| e.to_string())? {
                let s = build_solution(b, &ConstructionDatum::new(x, k), &bounds())
                    .map_err(|e| format!("{}: {e}", b.id()))?;
                ensure(s.validate().is_ok(), || format!("{}: output fails validation", b.id()))?;
                ensure(s.is_indecomposable(), || format!("{}: output is decomposable", b.id()))?;
                let induced = induced_brace(&s, &bounds()).map_err(|e| e.to_string())?;
                let iso = brace_isomorphic(&induced, b, &bounds()).map_err(|e| e.to_string())?;
                ensure(iso.is_some(), || format!("{}: induced brace is not isomorphic", b.id()))?;
                outputs += 1;
            }
        }
    }
    Ok(format!("{outputs} outputs from {} braces", braces.len()))
}

fn ybe(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_ybe"))
        .args(args)
        .output()
        .expect("running ybe")
}

fn criterion_10() -> Outcome {
    let out = ybe(&["conjecture", "3", "5", "6", "9"]);
    let stdout = String::from_utf8_lossy(&out.stdout);
    ensure(out.status.code() == Some(0), || {
        format!("exit code {:?}: {stdout}", out.status.code())
    })?;
    for n in [3, 5, 6, 9] {
        let line = stdout
            .lines()
            .find(|l| l.starts_with(&format!("n={n}:")))
            .unwrap_or_default();
        ensure(
            line.contains("dichotomy holds") && line.contains("no solution of size n"),
            || format!("n={n}: `{line}`"),
        )?;
    }
    Ok("n = 3, 5, 6, 9: no solution of size n, sizes n or 2n, exit 0".into())
}

fn criterion_11() -> Outcome {
    let runs = [
        ybe(&["verify-theorems"]),
        ybe(&["verify-theorems"]),
        ybe(&["--threads", "8", "verify-theorems"]),
    ];
    let first = &runs[0].stdout;
    ensure(!first.is_empty(), || "empty report".into())?;
    for (i, r) in runs.iter().enumerate().skip(1) {
        ensure(&r.stdout == first, || format!("run {i} differs from run 0"))?;
        ensure(r.status.code() == runs[0].status.code(), || {
            format!("run {i} exit code differs")
        })?;
    }
    // census files as well
    let a = ybe(&["enumerate", "--solutions", "--n", "5"]);
    let b = ybe(&["--threads", "8", "enumerate", "--solutions", "--n", "5"]);
    ensure(a.stdout == b.stdout, || {
        "solution census depends on thread count".into()
    })?;
    let census = format::parse_solution_census(&String::from_utf8_lossy(&a.stdout)).map_err(|e| e.to_string())?;
    ensure(
        format::write_solution_census(&census).as_bytes() == a.stdout.as_slice(),
        || "census does not round-trip".into(),
    )?;
    Ok(format!(
        "report of {} bytes identical over 3 runs (threads 1, 1, 8)",
        first.len()
    ))
}

fn main() {
    let criteria: [Criterion; 11] = [
        (1, "pq classification", criterion_1),
        (2, "cyclic p²q", criterion_2),
        (3, "non-cyclic abelian", criterion_3),
        (4, "dihedral and semidirect p²q", criterion_4),
        (5, "automorphism orders", criterion_5),
        (6, "generating-orbit counts", criterion_6),
        (7, "brace oracle", criterion_7),
        (8, "solution oracle", criterion_8),
        (9, "self-consistency", criterion_9),
        (10, "conjecture harness", criterion_10),
        (11, "determinism", criterion_11),
    ];
    let mut failed = BTreeSet::new();
    for (i, name, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS criterion {i:>2} {name}: {detail} [{secs:.1}s]"),
            Err(detail) => {
                let known = if KNOWN_FAILURES.contains(&i) { " (known)" } else { "" };
                println!("FAIL criterion {i:>2} {name}{known}: {detail} [{secs:.1}s]");
                failed.insert(i);
            }
        }
    }
    let known: BTreeSet<usize> = KNOWN_FAILURES.iter().copied().collect();
    println!("{} of 11 criteria pass", 11 - failed.len());
    if failed != known {
        println!("failing criteria {failed:?} differ from the known failures {known:?}");
        std::process::exit(1);
    }
}

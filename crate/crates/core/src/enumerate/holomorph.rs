use std::collections::HashSet;

use rayon::prelude::*;

use crate::bounds::Bounds;
use crate::braces::{brace_from_table, brace_isomorphic, Brace};
use crate::error::Result;
use crate::groups::{
    abelian_groups_of_order, holomorph, identify_group, AbelianGroup, GroupDescriptor, GroupTable, Holomorph,
};

/// Braces of one order, up to isomorphism.
#[derive(Debug, Clone)]
pub struct BraceCensus {
    pub order: usize,
    /// The multiplicative group asked for, if any.
    pub target: Option<GroupDescriptor>,
    pub braces: Vec<Brace>,
}

impl BraceCensus {
    /// Number of braces per additive group, in the order of
    /// [`abelian_groups_of_order`].
    pub fn counts_by_additive(&self) -> Vec<(AbelianGroup, usize)> {
        abelian_groups_of_order(self.order as u64)
            .into_iter()
            .map(|a| {
                let f = a.invariant_factors();
                let c = self
                    .braces
                    .iter()
                    .filter(|b| b.additive().invariant_factors() == f)
                    .count();
                (a, c)
            })
            .collect()
    }
}

/// Regular subgroups of `Hol(A)`, each given by its automorphism part
/// `a -> φ_a` (as automorphism numbers), so that `a∘b = a + φ_a(b)`.
///
/// A regular subgroup has exactly one element over each translation. The
/// search grows subgroups whose translation parts are distinct: it adds
/// `(a, φ)` for the least translation `a` not yet covered and every `φ`,
/// closes, and rejects closures with a repeated translation.
pub fn regular_subgroups(hol: &Holomorph) -> Vec<Vec<usize>> {
    let n = hol.additive().order();
    let mut found = HashSet::new();
    let mut out = Vec::new();
    let mut part = vec![usize::MAX; n];
    part[0] = 0;
    grow(hol, vec![hol.index(0, 0)], &part, &mut found, &mut out);
    out
}

fn grow(hol: &Holomorph, gens: Vec<usize>, part: &[usize], found: &mut HashSet<Vec<usize>>, out: &mut Vec<Vec<usize>>) {
    let Some(a) = part.iter().position(|&k| k == usize::MAX) else {
        if found.insert(part.to_vec()) {
            out.push(part.to_vec());
        }
        return;
    };
    for k in 0..hol.automorphisms().len() {
        let mut next = gens.clone();
        next.push(hol.index(a, k));
        if let Some(closed) = close(hol, &next) {
            let mut p = vec![usize::MAX; part.len()];
            for &h in &closed {
                let (t, k) = hol.parts(h);
                p[t] = k;
            }
            grow(hol, next, &p, found, out);
        }
    }
}

/// The subgroup generated by `gens`, or `None` once two of its elements
/// share a translation.
fn close(hol: &Holomorph, gens: &[usize]) -> Option<Vec<usize>> {
    let n = hol.additive().order();
    let mut over = vec![usize::MAX; n];
    let identity = hol.index(0, 0);
    over[0] = identity;
    let mut elems = vec![identity];
    let mut head = 0;
    while head < elems.len() {
        let x = elems[head];
        head += 1;
        for &g in gens {
            let y = hol.mul(x, g);
            let (t, _) = hol.parts(y);
            if over[t] == usize::MAX {
                over[t] = y;
                elems.push(y);
            } else if over[t] != y {
                return None;
            }
        }
    }
    Some(elems)
}

fn brace_from_regular(hol: &Holomorph, part: &[usize], bounds: &Bounds) -> Result<Brace> {
    let a = hol.additive();
    let n = a.order();
    let mut table = vec![0u32; n * n];
    for x in 0..n {
        for y in 0..n {
            table[x * n + y] = hol.act(hol.index(x, part[x]), y) as u32;
        }
    }
    brace_from_table(a.clone(), table, bounds)
}

/// Braces on `a`, up to isomorphism, in discovery order.
fn braces_on_additive(a: &AbelianGroup, bounds: &Bounds) -> Result<Vec<Brace>> {
    let hol = holomorph(a, bounds)?;
    let mut reps: Vec<Brace> = Vec::new();
    for part in regular_subgroups(&hol) {
        let b = brace_from_regular(&hol, &part, bounds)?;
        let mut new = true;
        for r in &reps {
            if brace_isomorphic(r, &b, bounds)?.is_some() {
                new = false;
                break;
            }
        }
        if new {
            reps.push(b);
        }
    }
    Ok(reps)
}

fn census(
    n: usize,
    bounds: &Bounds,
    keep: impl Fn(&Brace) -> bool + Sync,
    target: Option<GroupDescriptor>,
) -> Result<BraceCensus> {
    let groups = abelian_groups_of_order(n as u64);
    let per_group: Vec<Vec<Brace>> = groups
        .par_iter()
        .map(|a| Ok(braces_on_additive(a, bounds)?.into_iter().filter(|b| keep(b)).collect()))
        .collect::<Result<_>>()?;
    Ok(BraceCensus {
        order: n,
        target,
        braces: per_group.into_iter().flatten().collect(),
    })
}

/// Every brace of order `n` up to isomorphism, from the regular subgroups of
/// `Hol(A)` for each abelian `A` of order `n`.
pub fn braces_of_order(n: usize, bounds: &Bounds) -> Result<BraceCensus> {
    census(n, bounds, |_| true, None)
}

/// The braces whose multiplicative group is isomorphic to `g`.
pub fn braces_on_group(g: &GroupTable, bounds: &Bounds) -> Result<BraceCensus> {
    let keep = |b: &Brace| b.mult_group().is_ok_and(|m| m.find_isomorphism(g).is_some());
    census(g.order(), bounds, keep, Some(identify_group(g)))
}

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::groups::Permutation;
use crate::solutions::{canonical_form, canonical_relabeling, Solution};

/// Largest size enumerated in full, and with the indecomposable filter.
pub const MAX_ALL: usize = 5;
pub const MAX_INDECOMPOSABLE: usize = 6;

/// All involutive solutions of one size up to isomorphism.
#[derive(Debug, Clone)]
pub struct SolutionCensus {
    pub n: usize,
    pub indecomposable_only: bool,
    /// Canonically relabeled representatives, ordered by canonical form.
    pub solutions: Vec<Solution>,
}

impl SolutionCensus {
    pub fn count(&self) -> usize {
        self.solutions.len()
    }

    pub fn indecomposable_count(&self) -> usize {
        self.solutions.iter().filter(|s| s.is_indecomposable()).count()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SearchOrder {
    /// Try candidate permutations from the last to the first.
    pub reversed: bool,
}

/// The symmetric group of degree `n` with composition and inverse tables.
struct Sym {
    n: usize,
    perms: Vec<Vec<u8>>,
    /// `compose[i * len + j]` is `perms[i] ∘ perms[j]`.
    compose: Vec<u16>,
    inverse: Vec<u16>,
    /// Rank of each permutation's cycle type in a fixed total order.
    type_rank: Vec<u16>,
}

impl Sym {
    fn new(n: usize) -> Sym {
        let mut perms = Vec::new();
        let mut cur: Vec<u8> = (0..n as u8).collect();
        permutations(&mut cur, 0, &mut perms);
        perms.sort();
        let index: std::collections::HashMap<Vec<u8>, usize> =
            perms.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
        let len = perms.len();
        let mut compose = vec![0u16; len * len];
        for (i, p) in perms.iter().enumerate() {
            for (j, q) in perms.iter().enumerate() {
                let pq: Vec<u8> = q.iter().map(|&x| p[x as usize]).collect();
                compose[i * len + j] = index[&pq] as u16;
            }
        }
        let inverse = perms
            .iter()
            .map(|p| {
                let mut inv = vec![0u8; n];
                for (i, &v) in p.iter().enumerate() {
                    inv[v as usize] = i as u8;
                }
                index[&inv] as u16
            })
            .collect();
        let types: Vec<Vec<usize>> = perms.iter().map(|p| cycle_type(p)).collect();
        let mut distinct = types.clone();
        distinct.sort();
        distinct.dedup();
        let type_rank = types
            .iter()
            .map(|t| distinct.binary_search(t).expect("listed") as u16)
            .collect();
        Sym {
            n,
            perms,
            compose,
            inverse,
            type_rank,
        }
    }

    fn len(&self) -> usize {
        self.perms.len()
    }

    #[inline]
    fn mul(&self, i: usize, j: usize) -> usize {
        self.compose[i * self.len() + j] as usize
    }

    #[inline]
    fn inv(&self, i: usize) -> usize {
        self.inverse[i] as usize
    }

    #[inline]
    fn apply(&self, i: usize, x: usize) -> usize {
        self.perms[i][x] as usize
    }
}

fn permutations(cur: &mut Vec<u8>, k: usize, out: &mut Vec<Vec<u8>>) {
    if k == cur.len() {
        out.push(cur.clone());
        return;
    }
    for i in k..cur.len() {
        cur.swap(k, i);
        permutations(cur, k + 1, out);
        cur.swap(k, i);
    }
}

fn cycle_type(p: &[u8]) -> Vec<usize> {
    Permutation::new(p.iter().map(|&v| v as usize).collect())
        .expect("generated permutation")
        .cycle_type()
}

/// Standard shapes for `σ_0`: for each cycle type and each length `k` among
/// its parts, `0 -> 1 -> .. -> k-1 -> 0` followed by the other cycles on
/// consecutive points in decreasing length.
fn root_shapes(sym: &Sym) -> Vec<usize> {
    let n = sym.n;
    let mut types: Vec<Vec<usize>> = sym.perms.iter().map(|p| cycle_type(p)).collect();
    types.sort();
    types.dedup();
    let mut out = Vec::new();
    for t in types {
        let mut lengths = t.clone();
        lengths.dedup();
        for k in lengths {
            let mut rest = t.clone();
            let pos = rest.iter().position(|&l| l == k).expect("part present");
            rest.remove(pos);
            let mut img = vec![0u8; n];
            let mut start = 0;
            for len in std::iter::once(k).chain(rest) {
                for i in 0..len {
                    img[start + i] = (start + (i + 1) % len) as u8;
                }
                start += len;
            }
            let idx = sym.perms.binary_search(&img).expect("permutation listed");
            out.push(idx);
        }
    }
    out
}

struct State<'a> {
    sym: &'a Sym,
    /// Least allowed cycle-type rank, that of `σ_0`.
    floor: u16,
    sigma: Vec<usize>,
    trail: Vec<usize>,
}

const NONE: usize = usize::MAX;

impl State<'_> {
    fn set(&mut self, x: usize, p: usize) -> bool {
        if self.sym.type_rank[p] < self.floor {
            return false;
        }
        self.sigma[x] = p;
        self.trail.push(x);
        true
    }

    fn undo(&mut self, len: usize) {
        while self.trail.len() > len {
            let x = self.trail.pop().expect("non-empty trail");
            self.sigma[x] = NONE;
        }
    }

    /// Enforces `σ_x σ_{σ_x⁻¹(y)} = σ_y σ_{σ_y⁻¹(x)}` on every pair of
    /// assigned points, assigning the missing factor when only one of the
    /// two inner maps is known.
    fn propagate(&mut self) -> bool {
        let n = self.sym.n;
        let sym = self.sym;
        loop {
            let mut changed = false;
            for x in 0..n {
                let sx = self.sigma[x];
                if sx == NONE {
                    continue;
                }
                for y in x + 1..n {
                    let sy = self.sigma[y];
                    if sy == NONE {
                        continue;
                    }
                    let a = sym.apply(sym.inv(sx), y);
                    let b = sym.apply(sym.inv(sy), x);
                    match (self.sigma[a], self.sigma[b]) {
                        (NONE, NONE) => {}
                        (sa, NONE) => {
                            let forced = sym.mul(sym.inv(sy), sym.mul(sx, sa));
                            if !self.set(b, forced) {
                                return false;
                            }
                            changed = true;
                        }
                        (NONE, sb) => {
                            let forced = sym.mul(sym.inv(sx), sym.mul(sy, sb));
                            if !self.set(a, forced) {
                                return false;
                            }
                            changed = true;
                        }
                        (sa, sb) => {
                            if sym.mul(sx, sa) != sym.mul(sy, sb) {
                                return false;
                            }
                        }
                    }
                }
            }
            if !changed {
                return true;
            }
        }
    }

    fn search(&mut self, candidates: &[usize], visit: &mut dyn FnMut(&[usize])) {
        let Some(x) = self.sigma.iter().position(|&p| p == NONE) else {
            visit(&self.sigma);
            return;
        };
        for &p in candidates {
            let mark = self.trail.len();
            if self.set(x, p) && self.propagate() {
                self.search(candidates, visit);
            }
            self.undo(mark);
        }
    }
}

/// Every involutive non-degenerate solution of size `n` up to isomorphism,
/// optionally only the indecomposable ones.
///
/// Each class has a representative in which point 0 carries a `σ` of least
/// cycle type in a standard shape; the search fixes `σ_0` to each such shape
/// and assigns the remaining rows by backtracking with propagation of the
/// condition `σ_x σ_{σ_x⁻¹(y)} = σ_y σ_{σ_y⁻¹(x)}`. Complete assignments are
/// validated in full and deduplicated by canonical form.
pub fn all_solutions(n: usize, indecomposable_only: bool) -> Result<SolutionCensus> {
    all_solutions_with(n, indecomposable_only, SearchOrder::default())
}

pub fn all_solutions_with(n: usize, indecomposable_only: bool, order: SearchOrder) -> Result<SolutionCensus> {
    let limit = if indecomposable_only {
        MAX_INDECOMPOSABLE
    } else {
        MAX_ALL
    };
    if n > limit {
        return Err(Error::Resource {
            what: format!(
                "solution enumeration{}",
                if indecomposable_only { " (indecomposable)" } else { "" }
            ),
            size: n,
            bound_name: "solution-size",
            bound: limit,
        });
    }
    if n == 0 {
        return Err(Error::Usage("solutions need at least one point".into()));
    }
    let sym = Sym::new(n);
    let roots = root_shapes(&sym);
    let found: Vec<BTreeMap<String, Solution>> = roots
        .par_iter()
        .map(|&root| {
            let floor = sym.type_rank[root];
            let mut candidates: Vec<usize> = (0..sym.len()).filter(|&p| sym.type_rank[p] >= floor).collect();
            if order.reversed {
                candidates.reverse();
            }
            let mut state = State {
                sym: &sym,
                floor,
                sigma: vec![NONE; n],
                trail: Vec::new(),
            };
            let mut out = BTreeMap::new();
            if !state.set(0, root) {
                return out;
            }
            // σ_0 alone forces nothing: propagation needs two assigned points
            state.search(&candidates, &mut |rows| {
                let table = rows
                    .iter()
                    .map(|&p| sym.perms[p].iter().map(|&v| v as usize).collect())
                    .collect();
                let s = Solution::from_sigma(table).expect("rows are permutations");
                if !s.validate().is_ok() {
                    return;
                }
                if indecomposable_only && !s.is_indecomposable() {
                    return;
                }
                out.entry(canonical_form(&s))
                    .or_insert_with(|| canonical_relabeling(&s));
            });
            out
        })
        .collect();
    let mut merged = BTreeMap::new();
    for m in found {
        merged.extend(m);
    }
    Ok(SolutionCensus {
        n,
        indecomposable_only,
        solutions: merged.into_values().collect(),
    })
}

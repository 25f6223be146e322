use std::fmt::Write as _;

use crate::solutions::Solution;

/// Isomorphism invariant of a point `x`: the cycle type of `σ_x` and the
/// sorted cycle types of `σ_y` for `y` in the `σ_x`-orbit of `x`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fingerprint {
    pub cycle_type: Vec<usize>,
    pub orbit_cycle_types: Vec<Vec<usize>>,
}

pub fn fingerprints(s: &Solution) -> Vec<Fingerprint> {
    let n = s.n();
    let types: Vec<Vec<usize>> = (0..n).map(|x| s.sigma_perm(x).cycle_type()).collect();
    (0..n)
        .map(|x| {
            let mut orbit = vec![types[x].clone()];
            let mut y = s.sigma(x, x);
            while y != x {
                orbit.push(types[y].clone());
                y = s.sigma(x, y);
            }
            orbit.sort();
            Fingerprint {
                cycle_type: types[x].clone(),
                orbit_cycle_types: orbit,
            }
        })
        .collect()
}

struct Search<'a> {
    a: &'a Solution,
    b: &'a Solution,
    fa: Vec<Fingerprint>,
    fb: Vec<Fingerprint>,
    phi: Vec<usize>,
    used: Vec<bool>,
    assigned: Vec<usize>,
}

const NONE: usize = usize::MAX;

impl Search<'_> {
    fn assign(&mut self, x: usize, y: usize) -> bool {
        if self.fa[x] != self.fb[y] {
            return false;
        }
        self.phi[x] = y;
        self.used[y] = true;
        self.assigned.push(x);
        true
    }

    /// Extends the partial map through `φ(σ_u(v)) = σ_{φu}(φv)` starting from
    /// assignments at positions `from..`.
    fn propagate(&mut self, from: usize) -> bool {
        let mut k = from;
        while k < self.assigned.len() {
            let x = self.assigned[k];
            k += 1;
            for i in 0..k {
                let u = self.assigned[i];
                for (p, q) in [(x, u), (u, x)] {
                    let z = self.a.sigma(p, q);
                    let w = self.b.sigma(self.phi[p], self.phi[q]);
                    if self.phi[z] == NONE {
                        if self.used[w] || !self.assign(z, w) {
                            return false;
                        }
                    } else if self.phi[z] != w {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn undo(&mut self, len: usize) {
        while self.assigned.len() > len {
            let x = self.assigned.pop().expect("non-empty trail");
            self.used[self.phi[x]] = false;
            self.phi[x] = NONE;
        }
    }

    fn solve(&mut self) -> bool {
        let n = self.a.n();
        let Some(x) = (0..n).find(|&x| self.phi[x] == NONE) else {
            return true;
        };
        for y in 0..n {
            if self.used[y] || self.fa[x] != self.fb[y] {
                continue;
            }
            let mark = self.assigned.len();
            self.assign(x, y);
            if self.propagate(mark) && self.solve() {
                return true;
            }
            self.undo(mark);
        }
        false
    }
}

/// A bijection `φ` with `φ(σ_x(y)) = σ'_{φ(x)}(φ(y))`, if one exists.
///
/// For involutive solutions `τ` is determined by `σ`, so this is an
/// isomorphism of solutions.
pub fn solutions_isomorphic(a: &Solution, b: &Solution) -> Option<Vec<usize>> {
    if a.n() != b.n() {
        return None;
    }
    let fa = fingerprints(a);
    let fb = fingerprints(b);
    let mut sa = fa.clone();
    let mut sb = fb.clone();
    sa.sort();
    sb.sort();
    if sa != sb {
        return None;
    }
    let n = a.n();
    let mut search = Search {
        a,
        b,
        fa,
        fb,
        phi: vec![NONE; n],
        used: vec![false; n],
        assigned: Vec::new(),
    };
    search.solve().then_some(search.phi)
}

/// Canonical string for the isomorphism class of a solution.
///
/// Labelings are produced by closing a start point under `(u, v) -> σ_u(v)`,
/// naming new points in a fixed order of label pairs, and branching over the
/// points with least fingerprint whenever the closure stalls. Start points
/// are the points of least fingerprint. The string encodes the
/// lexicographically least relabeled `σ` table among these labelings, so two
/// solutions get the same string exactly when they are isomorphic.
///
/// Cost grows with the number of stalls; highly symmetric solutions such as
/// the flip explore `n!` labelings.
pub fn canonical_form(s: &Solution) -> String {
    let n = s.n();
    let table = canonical_table(s);
    let mut out = format!("n={n};");
    for x in 0..n {
        if x > 0 {
            out.push('|');
        }
        for y in 0..n {
            if y > 0 {
                out.push(' ');
            }
            write!(out, "{}", table[x * n + y]).expect("writing to a string");
        }
    }
    out
}

/// The solution relabeled as in [`canonical_form`]; isomorphic solutions
/// give equal results.
pub fn canonical_relabeling(s: &Solution) -> Solution {
    let n = s.n();
    let table = canonical_table(s);
    let rows = (0..n)
        .map(|x| table[x * n..(x + 1) * n].iter().map(|&v| v as usize).collect())
        .collect();
    Solution::from_sigma(rows).expect("relabeled rows stay bijective")
}

fn canonical_table(s: &Solution) -> Vec<u32> {
    let n = s.n();
    let fp = fingerprints(s);
    let mut best: Option<Vec<u32>> = None;
    if n > 0 {
        let mut order = Vec::with_capacity(n);
        let mut label = vec![NONE; n];
        branch(s, &fp, &mut order, &mut label, 0, &mut best);
    }
    best.unwrap_or_default()
}

/// Closes the labeled prefix from `processed` on, then branches at a stall.
fn branch(
    s: &Solution,
    fp: &[Fingerprint],
    order: &mut Vec<usize>,
    label: &mut [usize],
    processed: usize,
    best: &mut Option<Vec<u32>>,
) {
    let n = s.n();
    let mark = order.len();
    let mut k = processed;
    while k < order.len() {
        for i in 0..=k {
            let pairs: &[(usize, usize)] = if i < k { &[(i, k), (k, i)] } else { &[(k, k)] };
            for &(p, q) in pairs {
                let z = s.sigma(order[p], order[q]);
                if label[z] == NONE {
                    label[z] = order.len();
                    order.push(z);
                }
            }
        }
        k += 1;
    }
    if order.len() == n {
        let mut table = vec![0u32; n * n];
        for (lx, &x) in order.iter().enumerate() {
            for (ly, &y) in order.iter().enumerate() {
                table[lx * n + ly] = label[s.sigma(x, y)] as u32;
            }
        }
        if best.as_ref().is_none_or(|b| table < *b) {
            *best = Some(table);
        }
    } else {
        let least = (0..n)
            .filter(|&x| label[x] == NONE)
            .map(|x| &fp[x])
            .min()
            .expect("unlabeled point")
            .clone();
        for x in 0..n {
            if label[x] == NONE && fp[x] == least {
                label[x] = order.len();
                order.push(x);
                branch(s, fp, order, label, k, best);
                let x = order.pop().expect("pushed above");
                label[x] = NONE;
            }
        }
    }
    for &x in &order[mark..] {
        label[x] = NONE;
    }
    order.truncate(mark);
}

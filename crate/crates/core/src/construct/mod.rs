//! Indecomposable solutions from braces: an element `x` whose λ-orbit
//! additively generates the brace and a core-free subgroup `K` of the
//! multiplicative group fixing `x` give a solution on the left cosets of `K`,
//! `σ_{aK}(bK) = (λ_a(x)∘b)K`.

mod census;
mod classify;

use crate::arith;
use crate::bounds::Bounds;
use crate::braces::{brace_isomorphic, Brace};
use crate::error::{Error, Result};
use crate::groups::Subgroup;
use crate::solutions::{induced_brace, Solution};

pub use census::{classify_group, GroupCensus, GroupFamily};
pub use classify::{classify, classify_with, BraceClassification, ClassifyOptions, Representative};

/// A λ-orbit, stored as sorted canonical encodings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LambdaOrbit {
    elements: Vec<usize>,
}

impl LambdaOrbit {
    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    /// The element with least encoding.
    pub fn representative(&self) -> usize {
        self.elements[0]
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elements.binary_search(&x).is_ok()
    }
}

/// The λ-orbits partitioning the brace, ordered by representative.
pub fn lambda_orbits(b: &Brace, bounds: &Bounds) -> Result<Vec<LambdaOrbit>> {
    let n = b.order();
    bounds.check_subgroups("brace order for orbit computation", n)?;
    let gens = b.mult_group()?.small_generating_set();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut orbit = vec![start];
        let mut head = 0;
        while head < orbit.len() {
            let y = orbit[head];
            head += 1;
            for &g in &gens {
                let z = b.lambda_idx(g, y);
                if !seen[z] {
                    seen[z] = true;
                    orbit.push(z);
                }
            }
        }
        orbit.sort_unstable();
        out.push(LambdaOrbit { elements: orbit });
    }
    Ok(out)
}

/// The orbit containing `x`.
pub fn orbit_of(b: &Brace, x: usize, bounds: &Bounds) -> Result<LambdaOrbit> {
    Ok(lambda_orbits(b, bounds)?
        .into_iter()
        .find(|o| o.contains(x))
        .expect("orbits cover the brace"))
}

/// Necessary condition for generation: the additive order of the orbit's
/// elements (shared across the orbit) is divisible by every prime dividing
/// `|B|`.
pub fn passes_order_filter(b: &Brace, orbit: &LambdaOrbit) -> bool {
    let a = b.additive();
    let ord = a
        .element_order(&a.decode(orbit.representative()))
        .expect("orbit element in the group");
    arith::prime_divisors(b.order() as u64)
        .into_iter()
        .all(|p| ord.is_multiple_of(p))
}

/// Whether the orbit's elements additively span the brace.
pub fn spans_additive_group(b: &Brace, orbit: &LambdaOrbit) -> bool {
    b.additive().span(orbit.elements()).len() == b.order()
}

/// The order filter followed by the additive closure test.
pub fn is_generating_orbit(b: &Brace, orbit: &LambdaOrbit) -> bool {
    passes_order_filter(b, orbit) && spans_additive_group(b, orbit)
}

/// `{k : λ_k(x) = x}`, a subgroup of the multiplicative group.
pub fn stabilizer(b: &Brace, x: usize) -> Subgroup {
    Subgroup::from_sorted((0..b.order()).filter(|&k| b.lambda_idx(k, x) == x).collect())
}

/// Every subgroup of `Stab(x)` whose normal core in the multiplicative
/// group is trivial, including the trivial subgroup.
pub fn corefree_subgroups(b: &Brace, x: usize, bounds: &Bounds) -> Result<Vec<Subgroup>> {
    bounds.check_subgroups("brace order for subgroup enumeration", b.order())?;
    let g = b.mult_group()?;
    let stab = stabilizer(b, x);
    let mut out = Vec::new();
    for k in g.subgroups_within(&stab) {
        if g.is_core_free(&k)? {
            out.push(k);
        }
    }
    Ok(out)
}

/// Input to [`build_solution`]: `x` with generating orbit and a core-free
/// `K ⊆ Stab(x)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionDatum {
    pub x: usize,
    pub k: Subgroup,
}

impl ConstructionDatum {
    pub fn new(x: usize, k: Subgroup) -> Self {
        ConstructionDatum { x, k }
    }

    pub fn with_trivial_k(x: usize) -> Self {
        ConstructionDatum {
            x,
            k: Subgroup::from_sorted(vec![0]),
        }
    }
}

/// Builds the coset solution for a datum and checks it: well-definedness on
/// every coset pair, the solution axioms, transitivity and, when the
/// permutation group is within bounds, that the induced brace is
/// isomorphic to `b`.
pub fn build_solution(b: &Brace, datum: &ConstructionDatum, bounds: &Bounds) -> Result<Solution> {
    let n = b.order();
    let x = datum.x;
    if x >= n {
        return Err(Error::Construction(format!(
            "x = {x} is not an element of a brace of order {n}"
        )));
    }
    let g = b.mult_group()?;
    let k = &datum.k;
    if !g.is_subgroup(k) {
        return Err(Error::Construction(
            "K is not a subgroup of the multiplicative group".into(),
        ));
    }
    if let Some(&bad) = k.elements().iter().find(|&&c| b.lambda_idx(c, x) != x) {
        return Err(Error::Construction(format!(
            "K does not fix x: λ_{}({}) != {}",
            b.additive().decode(bad),
            b.additive().decode(x),
            b.additive().decode(x)
        )));
    }
    if !g.is_core_free(k)? {
        return Err(Error::Construction("K has a non-trivial normal core".into()));
    }
    if !is_generating_orbit(b, &orbit_of(b, x, bounds)?) {
        return Err(Error::Construction(format!(
            "the orbit of {} does not generate the additive group",
            b.additive().decode(x)
        )));
    }

    // left cosets aK, numbered by their least element
    let mut coset = vec![usize::MAX; n];
    let mut reps = Vec::new();
    for a in 0..n {
        if coset[a] == usize::MAX {
            for &c in k.elements() {
                coset[b.mul_idx(a, c)] = reps.len();
            }
            reps.push(a);
        }
    }
    let m = reps.len();
    let lx: Vec<usize> = (0..n).map(|a| b.lambda_idx(a, x)).collect();
    let rows: Vec<Vec<usize>> = reps
        .iter()
        .map(|&a| reps.iter().map(|&c| coset[b.mul_idx(lx[a], c)]).collect())
        .collect();
    for a in 0..n {
        for c in 0..n {
            let got = coset[b.mul_idx(lx[a], c)];
            if got != rows[coset[a]][coset[c]] {
                let e = |i: usize| b.additive().decode(i);
                return Err(Error::Construction(format!(
                    "σ is not well defined: representatives {} and {} give coset {} instead of {}",
                    e(a),
                    e(c),
                    e(reps[got]),
                    e(reps[rows[coset[a]][coset[c]]])
                )));
            }
        }
    }
    let labels = reps
        .iter()
        .map(|&a| {
            let e = b.additive().decode(a).to_string();
            if m == n {
                e
            } else {
                format!("{e}K")
            }
        })
        .collect();
    let s = Solution::from_sigma(rows)
        .map_err(|e| Error::Construction(format!("coset maps: {e}")))?
        .with_labels(labels)?;
    if let Some(v) = s.validate().violation {
        return Err(Error::Construction(format!("coset solution fails: {v}")));
    }
    if !s.is_indecomposable() {
        return Err(Error::Construction("coset solution is not indecomposable".into()));
    }
    if s.permutation_group().order() <= bounds.subgroups {
        let induced = induced_brace(&s, bounds)?;
        if brace_isomorphic(&induced, b, bounds)?.is_none() {
            return Err(Error::Construction(format!(
                "induced brace on the permutation group is not isomorphic to {}",
                b.id()
            )));
        }
    }
    Ok(s)
}

use rayon::prelude::*;

use crate::bounds::Bounds;
use crate::braces::{brace_automorphisms, Brace, BraceAutomorphism};
use crate::construct::{build_solution, corefree_subgroups, is_generating_orbit, lambda_orbits, ConstructionDatum};
use crate::error::{Error, Result};
use crate::groups::{GroupTable, Subgroup};
use crate::solutions::{solutions_isomorphic, Solution};

/// Which element of each generating orbit is used as `x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Representative {
    #[default]
    Least,
    Greatest,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ClassifyOptions {
    pub representative: Representative,
}

/// Outcome of [`classify`] for one brace.
#[derive(Debug, Clone)]
pub struct BraceClassification {
    pub brace: Brace,
    pub brace_id: String,
    pub generating_orbits: usize,
    /// Number of `(x, K)` pairs examined.
    pub pairs: usize,
    /// The data for one representative of each class.
    pub data: Vec<ConstructionDatum>,
    pub solutions: Vec<Solution>,
}

impl BraceClassification {
    pub fn classes(&self) -> usize {
        self.solutions.len()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.solutions.iter().map(Solution::n).collect()
    }
}

pub fn classify(b: &Brace, bounds: &Bounds) -> Result<BraceClassification> {
    classify_with(b, bounds, ClassifyOptions::default())
}

/// `(x, K)` and `(x', K')` give isomorphic solutions when some brace
/// automorphism `φ` and element `c` satisfy `λ_c(φ(x)) = x'` and
/// `c∘φ(K)∘c⁻¹ = K'`: automorphisms transport the whole datum, and
/// `aK -> a∘c⁻¹∘K'` identifies the solutions of `(x, K)` and
/// `(λ_c(x), cKc⁻¹)`.
fn equivalent(
    b: &Brace,
    g: &GroupTable,
    auts: &[BraceAutomorphism],
    (x, k): (usize, &Subgroup),
    (y, l): (usize, &Subgroup),
) -> bool {
    if k.order() != l.order() {
        return false;
    }
    let n = b.order();
    auts.iter().any(|phi| {
        let px = phi.apply(x);
        let pk: Vec<usize> = k.elements().iter().map(|&e| phi.apply(e)).collect();
        (0..n).any(|c| b.lambda_idx(c, px) == y && pk.iter().all(|&e| l.contains(g.conjugate(c, e))))
    })
}

/// Enumerates every `(x, K)` with `x` a representative of a generating orbit
/// and `K ⊆ Stab(x)` core-free, and returns one solution per isomorphism
/// class.
///
/// Classes are formed twice: from brace automorphisms and conjugation, and
/// independently by direct isomorphism tests on the built solutions. A
/// disagreement is reported as an internal consistency error.
pub fn classify_with(b: &Brace, bounds: &Bounds, opts: ClassifyOptions) -> Result<BraceClassification> {
    bounds.check_subgroups("brace order for classification", b.order())?;
    let g = b.mult_group()?;
    let generating: Vec<_> = lambda_orbits(b, bounds)?
        .into_iter()
        .filter(|o| is_generating_orbit(b, o))
        .collect();
    let mut data = Vec::new();
    for o in &generating {
        let x = match opts.representative {
            Representative::Least => o.representative(),
            Representative::Greatest => *o.elements().last().expect("orbits are non-empty"),
        };
        for k in corefree_subgroups(b, x, bounds)? {
            data.push(ConstructionDatum::new(x, k));
        }
    }

    let solutions: Vec<Solution> = data
        .par_iter()
        .map(|d| build_solution(b, d, bounds))
        .collect::<Result<_>>()?;

    let auts = brace_automorphisms(b, bounds)?;
    let mut by_datum: Vec<usize> = Vec::new();
    let mut reps: Vec<usize> = Vec::new();
    for (i, d) in data.iter().enumerate() {
        let class = reps
            .iter()
            .position(|&r| equivalent(b, &g, &auts, (data[r].x, &data[r].k), (d.x, &d.k)));
        by_datum.push(class.unwrap_or_else(|| {
            reps.push(i);
            reps.len() - 1
        }));
    }

    let mut direct_reps: Vec<usize> = Vec::new();
    for (i, s) in solutions.iter().enumerate() {
        let class = direct_reps
            .par_iter()
            .position_first(|&r| solutions_isomorphic(&solutions[r], s).is_some());
        let class = class.unwrap_or_else(|| {
            direct_reps.push(i);
            direct_reps.len() - 1
        });
        if class != by_datum[i] {
            return Err(Error::Inconsistent(format!(
                "{}: datum {i} falls in class {} by automorphisms but class {class} by direct isomorphism",
                b.id(),
                by_datum[i]
            )));
        }
    }

    Ok(BraceClassification {
        brace: b.clone(),
        brace_id: b.id(),
        generating_orbits: generating.len(),
        pairs: data.len(),
        data: reps.iter().map(|&r| data[r].clone()).collect(),
        solutions: reps.iter().map(|&r| solutions[r].clone()).collect(),
    })
}

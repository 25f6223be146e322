//! Involutive non-degenerate set-theoretic solutions of the Yang–Baxter
//! equation, stored as the tables `σ_x(y)` and `τ_y(x)` with
//! `r(x, y) = (σ_x(y), τ_y(x))`.

mod induced;
mod iso;

use std::fmt;

use crate::error::{Error, Result};
use crate::groups::{generate_perm_group, is_transitive, PermGroup, Permutation};

pub use induced::induced_brace;
pub use iso::{canonical_form, canonical_relabeling, fingerprints, solutions_isomorphic, Fingerprint};

/// A solution on `{0, .., n-1}`.
///
/// Equality compares the tables only; labels are presentation.
#[derive(Debug, Clone)]
pub struct Solution {
    n: usize,
    sigma: Vec<u32>,
    tau: Vec<u32>,
    labels: Option<Vec<String>>,
}

impl PartialEq for Solution {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.sigma == other.sigma && self.tau == other.tau
    }
}

impl Eq for Solution {}

fn flatten(rows: &[Vec<usize>], n: usize, what: &str) -> Result<Vec<u32>> {
    if rows.len() != n {
        return Err(Error::Validation(format!(
            "{what} has {} rows, expected {n}",
            rows.len()
        )));
    }
    let mut out = Vec::with_capacity(n * n);
    for (x, row) in rows.iter().enumerate() {
        if row.len() != n {
            return Err(Error::Validation(format!(
                "{what} row {x} has {} entries, expected {n}",
                row.len()
            )));
        }
        if let Some(&v) = row.iter().find(|&&v| v >= n) {
            return Err(Error::Validation(format!(
                "{what} row {x} has image {v} outside 0..{n}"
            )));
        }
        out.extend(row.iter().map(|&v| v as u32));
    }
    Ok(out)
}

fn is_permutation(row: &[u32]) -> bool {
    let mut seen = vec![false; row.len()];
    row.iter().all(|&v| !std::mem::replace(&mut seen[v as usize], true))
}

fn inverse_row(row: &[u32]) -> Vec<u32> {
    let mut inv = vec![0u32; row.len()];
    for (i, &v) in row.iter().enumerate() {
        inv[v as usize] = i as u32;
    }
    inv
}

impl Solution {
    /// A solution from its `σ` rows, with `τ_y(x) = σ⁻¹_{σ_x(y)}(x)`.
    ///
    /// Fails when a row is not a permutation. The result is not checked
    /// against the braid relation; see [`Solution::validate`].
    pub fn from_sigma(rows: Vec<Vec<usize>>) -> Result<Self> {
        let n = rows.len();
        let sigma = flatten(&rows, n, "sigma")?;
        for x in 0..n {
            if !is_permutation(&sigma[x * n..(x + 1) * n]) {
                return Err(Error::Validation(format!("sigma_{x} is not a bijection")));
            }
        }
        let inv: Vec<Vec<u32>> = (0..n).map(|x| inverse_row(&sigma[x * n..(x + 1) * n])).collect();
        let mut tau = vec![0u32; n * n];
        for y in 0..n {
            for x in 0..n {
                let s = sigma[x * n + y] as usize;
                tau[y * n + x] = inv[s][x];
            }
        }
        Ok(Solution {
            n,
            sigma,
            tau,
            labels: None,
        })
    }

    /// A solution from explicit `σ` and `τ` tables (`tau[y][x] = τ_y(x)`).
    /// Only shapes and ranges are checked.
    pub fn from_tables(sigma: Vec<Vec<usize>>, tau: Vec<Vec<usize>>) -> Result<Self> {
        let n = sigma.len();
        Ok(Solution {
            n,
            sigma: flatten(&sigma, n, "sigma")?,
            tau: flatten(&tau, n, "tau")?,
            labels: None,
        })
    }

    /// The flip `r(x, y) = (y, x)`.
    pub fn flip(n: usize) -> Self {
        let rows = (0..n).map(|_| (0..n).collect()).collect();
        Solution::from_sigma(rows).expect("identity rows")
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n {
            return Err(Error::Usage(format!(
                "{} labels for a solution of size {}",
                labels.len(),
                self.n
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn sigma(&self, x: usize, y: usize) -> usize {
        self.sigma[x * self.n + y] as usize
    }

    #[inline]
    pub fn tau(&self, y: usize, x: usize) -> usize {
        self.tau[y * self.n + x] as usize
    }

    pub fn sigma_row(&self, x: usize) -> &[u32] {
        &self.sigma[x * self.n..(x + 1) * self.n]
    }

    pub fn tau_row(&self, y: usize) -> &[u32] {
        &self.tau[y * self.n..(y + 1) * self.n]
    }

    /// `σ_x` as a permutation; requires a bijective row.
    pub fn sigma_perm(&self, x: usize) -> Permutation {
        Permutation::new(self.sigma_row(x).iter().map(|&v| v as usize).collect()).expect("sigma rows are bijective")
    }

    #[inline]
    pub fn r(&self, x: usize, y: usize) -> (usize, usize) {
        (self.sigma(x, y), self.tau(y, x))
    }

    /// The isomorphic solution obtained by renaming each point `x` to `phi[x]`.
    pub fn relabel(&self, phi: &[usize]) -> Solution {
        let n = self.n;
        let mut sigma = vec![0u32; n * n];
        let mut tau = vec![0u32; n * n];
        for x in 0..n {
            for y in 0..n {
                sigma[phi[x] * n + phi[y]] = phi[self.sigma(x, y)] as u32;
                tau[phi[y] * n + phi[x]] = phi[self.tau(y, x)] as u32;
            }
        }
        let labels = self.labels.as_ref().map(|l| {
            let mut out = vec![String::new(); n];
            for x in 0..n {
                out[phi[x]] = l[x].clone();
            }
            out
        });
        Solution { n, sigma, tau, labels }
    }

    /// Checks bijectivity of every `σ_x` and `τ_y`, `r² = id` on all pairs and
    /// the braid relation on all triples, stopping at the first failure.
    pub fn validate(&self) -> SolutionReport {
        SolutionReport {
            violation: self.first_violation(),
        }
    }

    fn first_violation(&self) -> Option<SolutionViolation> {
        let n = self.n;
        for x in 0..n {
            if !is_permutation(self.sigma_row(x)) {
                return Some(SolutionViolation::SigmaNotBijective { x });
            }
        }
        for y in 0..n {
            if !is_permutation(self.tau_row(y)) {
                return Some(SolutionViolation::TauNotBijective { y });
            }
        }
        for x in 0..n {
            for y in 0..n {
                let (u, v) = self.r(x, y);
                if self.r(u, v) != (x, y) {
                    return Some(SolutionViolation::NotInvolutive { x, y });
                }
            }
        }
        let r12 = |(a, b, c): (usize, usize, usize)| {
            let (u, v) = self.r(a, b);
            (u, v, c)
        };
        let r23 = |(a, b, c): (usize, usize, usize)| {
            let (u, v) = self.r(b, c);
            (a, u, v)
        };
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let t = (x, y, z);
                    if r12(r23(r12(t))) != r23(r12(r23(t))) {
                        return Some(SolutionViolation::Braid { x, y, z });
                    }
                }
            }
        }
        None
    }

    /// The group generated by the `σ_x`.
    pub fn permutation_group(&self) -> PermGroup {
        let mut gens: Vec<Permutation> = (0..self.n).map(|x| self.sigma_perm(x)).collect();
        gens.sort();
        gens.dedup();
        generate_perm_group(&gens, Some(self.n)).expect("generators share the degree")
    }

    /// Transitivity of the permutation group.
    pub fn is_indecomposable(&self) -> bool {
        is_transitive(&self.permutation_group())
    }
}

/// First failure found by [`Solution::validate`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolutionViolation {
    SigmaNotBijective { x: usize },
    TauNotBijective { y: usize },
    NotInvolutive { x: usize, y: usize },
    Braid { x: usize, y: usize, z: usize },
}

impl fmt::Display for SolutionViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            SolutionViolation::SigmaNotBijective { x } => write!(f, "sigma_{x} is not a bijection"),
            SolutionViolation::TauNotBijective { y } => write!(f, "tau_{y} is not a bijection"),
            SolutionViolation::NotInvolutive { x, y } => write!(f, "r(r({x}, {y})) != ({x}, {y})"),
            SolutionViolation::Braid { x, y, z } => write!(f, "braid relation fails on ({x}, {y}, {z})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolutionReport {
    pub violation: Option<SolutionViolation>,
}

impl SolutionReport {
    pub fn is_ok(&self) -> bool {
        self.violation.is_none()
    }
}

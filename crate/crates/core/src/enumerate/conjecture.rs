use crate::bounds::Bounds;
use crate::construct::classify;
use crate::enumerate::holomorph::braces_on_group;
use crate::error::Result;
use crate::groups::GroupTable;
use crate::solutions::Solution;

/// Outcome of [`conjecture_check`] for the dihedral group of order `2n`.
#[derive(Debug, Clone)]
pub struct ConjectureReport {
    pub n: usize,
    /// Set when the check was not run; holds the reason.
    pub skipped: Option<String>,
    pub braces: usize,
    /// Solution sizes per brace, in census order.
    pub sizes: Vec<Vec<usize>>,
    /// A solution of size `n`, if one was found.
    pub counterexample: Option<Solution>,
}

impl ConjectureReport {
    pub fn solutions(&self) -> usize {
        self.sizes.iter().map(Vec::len).sum()
    }

    /// Every size is `n` or `2n`.
    pub fn dichotomy_holds(&self) -> bool {
        self.sizes.iter().flatten().all(|&s| s == self.n || s == 2 * self.n)
    }
}

/// Looks for indecomposable solutions of size `n` with permutation group
/// `D_{2n}`: every brace with multiplicative group `D_{2n}` is found by the
/// holomorph search and classified over all core-free subgroups.
///
/// `n = 2` is skipped: `D_4` has three cyclic subgroups of index 2, so it is
/// not treated as dihedral.
pub fn conjecture_check(n: usize, bounds: &Bounds) -> Result<ConjectureReport> {
    let mut report = ConjectureReport {
        n,
        skipped: None,
        braces: 0,
        sizes: Vec::new(),
        counterexample: None,
    };
    if n < 3 {
        report.skipped = Some(format!(
            "D_{} has no distinguished rotation subgroup and is never classified as dihedral",
            2 * n
        ));
        return Ok(report);
    }
    let census = braces_on_group(&GroupTable::dihedral(n), bounds)?;
    report.braces = census.braces.len();
    for b in &census.braces {
        let c = classify(b, bounds)?;
        if report.counterexample.is_none() {
            report.counterexample = c.solutions.iter().find(|s| s.n() == n).cloned();
        }
        report.sizes.push(c.sizes());
    }
    Ok(report)
}

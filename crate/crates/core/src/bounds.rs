use crate::error::{Error, Result};

/// Size limits for the exhaustive searches.
///
/// `subgroups` caps the order of any group whose subgroup lattice is
/// enumerated, and also the order of braces handed to cubic-time checks.
/// `holomorph` caps `|A| * |Aut(A)|`. `automorphism_search` caps the number of
/// candidate basis-image tuples tried when listing additive maps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    pub subgroups: usize,
    pub holomorph: usize,
    pub automorphism_search: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            subgroups: 400,
            holomorph: 5000,
            automorphism_search: 20_000_000,
        }
    }
}

impl Bounds {
    pub(crate) fn check_subgroups(&self, what: &str, size: usize) -> Result<()> {
        check(what, size, "bound-subgroups", self.subgroups)
    }

    pub(crate) fn check_holomorph(&self, what: &str, size: usize) -> Result<()> {
        check(what, size, "bound-holomorph", self.holomorph)
    }

    pub(crate) fn check_automorphism_search(&self, what: &str, size: usize) -> Result<()> {
        check(what, size, "automorphism-search", self.automorphism_search)
    }
}

fn check(what: &str, size: usize, bound_name: &'static str, bound: usize) -> Result<()> {
    if size > bound {
        Err(Error::Resource {
            what: what.to_string(),
            size,
            bound_name,
            bound,
        })
    } else {
        Ok(())
    }
}

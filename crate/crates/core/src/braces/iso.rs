use std::ops::ControlFlow;

use crate::bounds::Bounds;
use crate::braces::Brace;
use crate::error::Result;
use crate::groups::{for_each_additive_isomorphism, AdditiveMap};

/// A brace automorphism: an additive automorphism that also respects `∘`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraceAutomorphism(pub AdditiveMap);

impl BraceAutomorphism {
    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.0.apply(x)
    }

    pub fn map(&self) -> &[u32] {
        self.0.map()
    }
}

fn is_multiplicative(f: &AdditiveMap, from: &Brace, to: &Brace) -> bool {
    let n = from.order();
    (0..n).all(|a| {
        let fa = f.apply(a);
        (0..n).all(|b| f.apply(from.mul_idx(a, b)) == to.mul_idx(fa, f.apply(b)))
    })
}

/// Every brace automorphism, found by filtering the additive automorphisms
/// through the test `φ(a∘b) = φ(a)∘φ(b)`.
pub fn brace_automorphisms(b: &Brace, bounds: &Bounds) -> Result<Vec<BraceAutomorphism>> {
    bounds.check_subgroups("brace order for automorphism search", b.order())?;
    let mut out = Vec::new();
    for_each_additive_isomorphism(b.additive(), b.additive(), bounds, |f| {
        if is_multiplicative(f, b, b) {
            out.push(BraceAutomorphism(f.clone()));
        }
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

/// Multiset of multiplicative orders; an isomorphism invariant.
fn mult_order_profile(b: &Brace) -> Vec<u64> {
    let mut v: Vec<u64> = (0..b.order()).map(|x| b.mult_order(x)).collect();
    v.sort_unstable();
    v
}

/// A brace isomorphism `b1 -> b2`, if one exists.
pub fn brace_isomorphic(b1: &Brace, b2: &Brace, bounds: &Bounds) -> Result<Option<AdditiveMap>> {
    if b1.order() != b2.order() {
        return Ok(None);
    }
    bounds.check_subgroups("brace order for isomorphism search", b1.order())?;
    if b1.additive().invariant_factors() != b2.additive().invariant_factors() {
        return Ok(None);
    }
    if mult_order_profile(b1) != mult_order_profile(b2) {
        return Ok(None);
    }
    let mut found = None;
    for_each_additive_isomorphism(b1.additive(), b2.additive(), bounds, |f| {
        if is_multiplicative(f, b1, b2) {
            found = Some(f.clone());
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })?;
    Ok(found)
}

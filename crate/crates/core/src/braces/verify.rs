use crate::bounds::Bounds;
use crate::braces::Brace;
use crate::error::Result;

/// First axiom failure found by [`verify_brace_axioms`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BraceViolation {
    AdditionNotCommutative {
        a: usize,
        b: usize,
    },
    ProductOutOfRange {
        a: usize,
        b: usize,
    },
    IdentityMismatch {
        a: usize,
    },
    NoInverse {
        a: usize,
    },
    NotAssociative {
        a: usize,
        b: usize,
        c: usize,
    },
    /// `a∘(b+c) != a∘b - a + a∘c`.
    Compatibility {
        a: usize,
        b: usize,
        c: usize,
    },
}

impl BraceViolation {
    pub fn describe(&self, b: &Brace) -> String {
        let e = |i: usize| b.additive().decode(i).to_string();
        match *self {
            BraceViolation::AdditionNotCommutative { a, b: y } => format!("{} + {} is not commutative", e(a), e(y)),
            BraceViolation::ProductOutOfRange { a, b: y } => format!("{} ∘ {} is not an element", e(a), e(y)),
            BraceViolation::IdentityMismatch { a } => format!("zero is not a multiplicative identity at {}", e(a)),
            BraceViolation::NoInverse { a } => format!("{} has no multiplicative inverse", e(a)),
            BraceViolation::NotAssociative { a, b: y, c } => {
                format!("∘ is not associative on ({}, {}, {})", e(a), e(y), e(c))
            }
            BraceViolation::Compatibility { a, b: y, c } => {
                format!("a∘(b+c) = a∘b - a + a∘c fails on triple ({}, {}, {})", e(a), e(y), e(c))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BraceReport {
    pub violation: Option<BraceViolation>,
}

impl BraceReport {
    pub fn is_ok(&self) -> bool {
        self.violation.is_none()
    }
}

/// Checks the additive group, the multiplicative group laws (zero is the
/// identity, inverses, associativity) and compatibility on all triples.
pub fn verify_brace_axioms(b: &Brace, bounds: &Bounds) -> Result<BraceReport> {
    let n = b.order();
    bounds.check_subgroups("brace order for axiom verification", n)?;
    Ok(BraceReport {
        violation: first_violation(b, n),
    })
}

fn first_violation(br: &Brace, n: usize) -> Option<BraceViolation> {
    let table = br.mult_table();
    for a in 0..n {
        for b in 0..a {
            if br.add_idx(a, b) != br.add_idx(b, a) {
                return Some(BraceViolation::AdditionNotCommutative { a, b });
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            if table[a * n + b] as usize >= n {
                return Some(BraceViolation::ProductOutOfRange { a, b });
            }
        }
    }
    for a in 0..n {
        if br.mul_idx(0, a) != a || br.mul_idx(a, 0) != a {
            return Some(BraceViolation::IdentityMismatch { a });
        }
        let inv = br.inv_idx(a);
        if inv >= n || br.mul_idx(inv, a) != 0 {
            return Some(BraceViolation::NoInverse { a });
        }
    }
    for a in 0..n {
        for b in 0..n {
            let ab = br.mul_idx(a, b);
            for c in 0..n {
                if br.mul_idx(ab, c) != br.mul_idx(a, br.mul_idx(b, c)) {
                    return Some(BraceViolation::NotAssociative { a, b, c });
                }
            }
        }
    }
    for a in 0..n {
        let minus_a = br.neg_idx(a);
        for b in 0..n {
            let ab_minus_a = br.add_idx(br.mul_idx(a, b), minus_a);
            for c in 0..n {
                let lhs = br.mul_idx(a, br.add_idx(b, c));
                let rhs = br.add_idx(ab_minus_a, br.mul_idx(a, c));
                if lhs != rhs {
                    return Some(BraceViolation::Compatibility { a, b, c });
                }
            }
        }
    }
    None
}

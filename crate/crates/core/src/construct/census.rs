use std::fmt;

use crate::arith::{self, is_prime};
use crate::bounds::Bounds;
use crate::braces::{
    brace_cyc_4q, brace_cyc_p2q, brace_dih1_4p, brace_dih2_4p, brace_dih3_4p, brace_noncyc_4q, brace_noncyc_p2q,
    brace_pq, brace_semi_p2q, trivial_brace, Brace,
};
use crate::construct::classify::{classify_with, BraceClassification, ClassifyOptions};
use crate::error::{Error, Result};
use crate::groups::{AbelianGroup, GroupDescriptor, GroupTable};

/// Multiplicative groups with a complete list of braces.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GroupFamily {
    /// `Z_{pq}`.
    CyclicPq,
    /// `Z_p x| Z_q`, `p ≡ 1 (mod q)`.
    SemidirectPq,
    /// Both groups of order `pq`.
    Pq,
    /// `Z_{p^2 q}`.
    CyclicP2q,
    /// `Z_p^2 x Z_q`.
    NoncyclicP2q,
    /// `Z_{p^2} x| Z_q`, `p ≡ 1 (mod q)`.
    SemidirectP2q,
    /// `D_{2p^2}`, `p` odd.
    Dihedral2p2,
    /// `D_{4p}`, `p` odd.
    Dihedral4p,
}

impl GroupFamily {
    pub const ALL: [GroupFamily; 8] = [
        GroupFamily::CyclicPq,
        GroupFamily::SemidirectPq,
        GroupFamily::Pq,
        GroupFamily::CyclicP2q,
        GroupFamily::NoncyclicP2q,
        GroupFamily::SemidirectP2q,
        GroupFamily::Dihedral2p2,
        GroupFamily::Dihedral4p,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GroupFamily::CyclicPq => "cyclic-pq",
            GroupFamily::SemidirectPq => "semidirect-pq",
            GroupFamily::Pq => "pq",
            GroupFamily::CyclicP2q => "cyclic-p2q",
            GroupFamily::NoncyclicP2q => "noncyclic-p2q",
            GroupFamily::SemidirectP2q => "semidirect-p2q",
            GroupFamily::Dihedral2p2 => "dihedral-2p2",
            GroupFamily::Dihedral4p => "dihedral-4p",
        }
    }

    pub fn parse(s: &str) -> Option<GroupFamily> {
        GroupFamily::ALL.into_iter().find(|f| f.name() == s)
    }

    /// Whether the family takes `q` (the dihedral families fix it).
    pub fn takes_q(self) -> bool {
        !matches!(self, GroupFamily::Dihedral2p2 | GroupFamily::Dihedral4p)
    }

    /// The family and parameters covering a recognized group, or an
    /// unsupported error naming what is missing.
    pub fn from_descriptor(d: &GroupDescriptor) -> Result<(GroupFamily, u64, Option<u64>)> {
        let unsupported = || Error::Unsupported(format!("no complete brace list is known here for {d}"));
        let pq_split = |n: u64| -> Option<(u64, u64, bool)> {
            // n = p q or n = p^2 q with p, q distinct primes
            let f = arith::factorize(n);
            match f.as_slice() {
                [(a, 1), (b, 1)] => Some((*a, *b, false)),
                [(a, 2), (b, 1)] => Some((*a, *b, true)),
                [(a, 1), (b, 2)] => Some((*b, *a, true)),
                _ => None,
            }
        };
        match d {
            GroupDescriptor::Cyclic(n) => match pq_split(*n as u64) {
                Some((p, q, false)) => Ok((GroupFamily::CyclicPq, p.max(q), Some(p.min(q)))),
                Some((p, q, true)) => Ok((GroupFamily::CyclicP2q, p, Some(q))),
                None => Err(unsupported()),
            },
            GroupDescriptor::Abelian(f) => match f.as_slice() {
                [a, b] if is_prime(*a) && b % a == 0 && is_prime(b / a) && b / a != *a => {
                    Ok((GroupFamily::NoncyclicP2q, *a, Some(b / a)))
                }
                _ => Err(unsupported()),
            },
            GroupDescriptor::Dihedral(n) => {
                let h = (*n / 2) as u64;
                if is_prime(h) && h > 2 {
                    Ok((GroupFamily::SemidirectPq, h, Some(2)))
                } else if h % 2 == 1 && arith_sqrt(h).pow(2) == h && is_prime(arith_sqrt(h)) {
                    Ok((GroupFamily::Dihedral2p2, arith_sqrt(h), None))
                } else if h.is_multiple_of(2) && is_prime(h / 2) && h / 2 > 2 {
                    Ok((GroupFamily::Dihedral4p, h / 2, None))
                } else {
                    Err(unsupported())
                }
            }
            GroupDescriptor::Semidirect { m, q, .. } => {
                let (m, q) = (*m as u64, *q as u64);
                if is_prime(m) {
                    Ok((GroupFamily::SemidirectPq, m, Some(q)))
                } else {
                    let r = arith_sqrt(m);
                    if r * r == m && is_prime(r) {
                        Ok((GroupFamily::SemidirectP2q, r, Some(q)))
                    } else {
                        Err(unsupported())
                    }
                }
            }
            GroupDescriptor::Other { .. } => Err(unsupported()),
        }
    }
}

fn arith_sqrt(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

impl fmt::Display for GroupFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// All braces with a given multiplicative group, classified.
#[derive(Debug, Clone)]
pub struct GroupCensus {
    pub family: GroupFamily,
    pub p: u64,
    pub q: Option<u64>,
    pub rows: Vec<BraceClassification>,
}

impl GroupCensus {
    pub fn total(&self) -> usize {
        self.rows.iter().map(BraceClassification::classes).sum()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.rows.iter().flat_map(BraceClassification::sizes).collect()
    }
}

fn require_primes(p: u64, q: u64) -> Result<()> {
    for (name, v) in [("p", p), ("q", q)] {
        if !is_prime(v) {
            return Err(Error::domain(format!("{name} = {v} must be prime")));
        }
    }
    if p == q {
        return Err(Error::domain(format!(
            "p and q must be distinct primes, got p = q = {p}"
        )));
    }
    Ok(())
}

fn require_congruence(p: u64, q: u64) -> Result<()> {
    if p % q == 1 {
        Ok(())
    } else {
        Err(Error::domain(format!("p ≡ 1 (mod q) required, got p = {p}, q = {q}")))
    }
}

fn need_q(family: GroupFamily, q: Option<u64>) -> Result<u64> {
    q.ok_or_else(|| Error::Usage(format!("group family {family} needs q")))
}

fn cyclic(n: u64) -> AbelianGroup {
    AbelianGroup::cyclic(n).expect("order at least 2")
}

/// The braces with multiplicative group in `family`, each with a reference
/// table of the group it should have.
fn braces_for(family: GroupFamily, p: u64, q: Option<u64>) -> Result<Vec<(Brace, GroupTable)>> {
    let pu = p as usize;
    Ok(match family {
        GroupFamily::CyclicPq => {
            let q = need_q(family, q)?;
            require_primes(p, q)?;
            vec![(trivial_brace(&cyclic(p * q)), GroupTable::cyclic(pu * q as usize))]
        }
        GroupFamily::SemidirectPq => {
            let q = need_q(family, q)?;
            require_primes(p, q)?;
            require_congruence(p, q)?;
            let b = brace_pq(p, q, None)?;
            let g = b.params().g.expect("pq brace carries g");
            vec![(b, GroupTable::semidirect(pu, q as usize, g))]
        }
        GroupFamily::Pq => {
            let mut v = braces_for(GroupFamily::CyclicPq, p, q)?;
            v.extend(braces_for(GroupFamily::SemidirectPq, p, q)?);
            v
        }
        GroupFamily::CyclicP2q => {
            let q = need_q(family, q)?;
            require_primes(p, q)?;
            let n = p * p * q;
            let other = if p == 2 { brace_cyc_4q(q)? } else { brace_cyc_p2q(p, q)? };
            let z = GroupTable::cyclic(n as usize);
            vec![(trivial_brace(&cyclic(n)), z.clone()), (other, z)]
        }
        GroupFamily::NoncyclicP2q => {
            let q = need_q(family, q)?;
            require_primes(p, q)?;
            let a = AbelianGroup::new(vec![p, p, q]).expect("primes are at least 2");
            let z = GroupTable::cyclic(pu)
                .direct_product(&GroupTable::cyclic(pu))
                .direct_product(&GroupTable::cyclic(q as usize));
            let other = if p == 2 {
                brace_noncyc_4q(q)?
            } else {
                brace_noncyc_p2q(p, q)?
            };
            vec![(trivial_brace(&a), z.clone()), (other, z)]
        }
        GroupFamily::SemidirectP2q => {
            let q = need_q(family, q)?;
            require_primes(p, q)?;
            require_congruence(p, q)?;
            let b = brace_semi_p2q(p, q, None)?;
            let g = b.params().g.expect("semidirect brace carries g");
            vec![(b, GroupTable::semidirect(pu * pu, q as usize, g))]
        }
        GroupFamily::Dihedral2p2 => {
            if p == 2 || !is_prime(p) {
                return Err(Error::domain(format!("p = {p} must be an odd prime")));
            }
            let b = brace_semi_p2q(p, 2, None)?;
            vec![(b, GroupTable::dihedral(pu * pu))]
        }
        GroupFamily::Dihedral4p => {
            let d = GroupTable::dihedral(2 * pu);
            vec![
                (brace_dih1_4p(p)?, d.clone()),
                (brace_dih2_4p(p)?, d.clone()),
                (brace_dih3_4p(p)?, d),
            ]
        }
    })
}

/// Classifies every brace with multiplicative group in `family`; the trivial
/// brace is included exactly when the group is abelian.
///
/// Each brace's multiplicative group is checked against the expected group
/// before classification.
pub fn classify_group(
    family: GroupFamily,
    p: u64,
    q: Option<u64>,
    bounds: &Bounds,
    opts: ClassifyOptions,
) -> Result<GroupCensus> {
    let q = if family.takes_q() { q } else { None };
    let mut rows = Vec::new();
    for (b, expected) in braces_for(family, p, q)? {
        bounds.check_subgroups("brace order for classification", b.order())?;
        if b.mult_group()?.find_isomorphism(&expected).is_none() {
            return Err(Error::Inconsistent(format!(
                "multiplicative group of {} is not the expected group of family {family}",
                b.id()
            )));
        }
        rows.push(classify_with(&b, bounds, opts)?);
    }
    Ok(GroupCensus { family, p, q, rows })
}

//! Braces: an abelian group `(B, +)` with a second group law `∘` on the same
//! carrier such that `a∘(b+c) = a∘b - a + a∘c`.
//!
//! Family braces evaluate `∘` from their formula; table braces carry the full
//! product table in canonical mixed-radix encoding. Index-based operations
//! materialize Cayley tables on first use.

mod families;
mod iso;
mod verify;

use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::groups::{AbelianGroup, Element, GroupTable};

pub use families::{
    brace_cyc_4q, brace_cyc_p2q, brace_dih1_4p, brace_dih2_4p, brace_dih3_4p, brace_noncyc_4q, brace_noncyc_p2q,
    brace_pq, brace_semi_p2q, family_brace, trivial_brace,
};
pub use iso::{brace_automorphisms, brace_isomorphic, BraceAutomorphism};
pub use verify::{verify_brace_axioms, BraceReport, BraceViolation};

/// Which construction produced a brace.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyTag {
    Trivial,
    Pq,
    Cyc4q,
    CycP2q,
    NonCyc4q,
    NonCycP2q,
    SemiP2q,
    Dih1,
    Dih2,
    Dih3,
    Table,
}

impl FamilyTag {
    pub const ALL: [FamilyTag; 11] = [
        FamilyTag::Trivial,
        FamilyTag::Pq,
        FamilyTag::Cyc4q,
        FamilyTag::CycP2q,
        FamilyTag::NonCyc4q,
        FamilyTag::NonCycP2q,
        FamilyTag::SemiP2q,
        FamilyTag::Dih1,
        FamilyTag::Dih2,
        FamilyTag::Dih3,
        FamilyTag::Table,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyTag::Trivial => "trivial",
            FamilyTag::Pq => "pq",
            FamilyTag::Cyc4q => "cyc4q",
            FamilyTag::CycP2q => "cycP2q",
            FamilyTag::NonCyc4q => "noncyc4q",
            FamilyTag::NonCycP2q => "noncycP2q",
            FamilyTag::SemiP2q => "semiP2q",
            FamilyTag::Dih1 => "dih1",
            FamilyTag::Dih2 => "dih2",
            FamilyTag::Dih3 => "dih3",
            FamilyTag::Table => "table",
        }
    }

    pub fn parse(s: &str) -> Option<FamilyTag> {
        FamilyTag::ALL.into_iter().find(|t| t.name() == s)
    }
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Parameters of a family brace. Unused parameters are `None`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct FamilyParams {
    pub p: Option<u64>,
    pub q: Option<u64>,
    pub g: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum MultRule {
    Family(FamilyTag, FamilyParams),
    Table(Arc<[u32]>),
}

#[derive(Debug, Clone)]
struct Tables {
    add: Vec<u32>,
    neg: Vec<u32>,
    mul: Vec<u32>,
    inv: Vec<u32>,
}

/// A finite brace with abelian additive group.
#[derive(Debug, Clone)]
pub struct Brace {
    additive: AbelianGroup,
    rule: MultRule,
    tables: OnceLock<Arc<Tables>>,
}

impl Brace {
    pub(crate) fn from_rule(additive: AbelianGroup, rule: MultRule) -> Self {
        Brace {
            additive,
            rule,
            tables: OnceLock::new(),
        }
    }

    pub fn additive(&self) -> &AbelianGroup {
        &self.additive
    }

    pub fn order(&self) -> usize {
        self.additive.order()
    }

    pub fn family_tag(&self) -> FamilyTag {
        match &self.rule {
            MultRule::Family(t, _) => *t,
            MultRule::Table(_) => FamilyTag::Table,
        }
    }

    pub fn params(&self) -> FamilyParams {
        match &self.rule {
            MultRule::Family(_, p) => *p,
            MultRule::Table(_) => FamilyParams::default(),
        }
    }

    /// Short identifier such as `pq(p=7,q=3,g=2)` or `table(Z2xZ6)`.
    pub fn id(&self) -> String {
        match &self.rule {
            MultRule::Family(FamilyTag::Trivial, _) => format!("trivial({})", self.additive),
            MultRule::Family(tag, params) => {
                let mut parts = Vec::new();
                for (name, v) in [("p", params.p), ("q", params.q), ("g", params.g)] {
                    if let Some(v) = v {
                        parts.push(format!("{name}={v}"));
                    }
                }
                format!("{tag}({})", parts.join(","))
            }
            MultRule::Table(_) => format!("table({})", self.additive),
        }
    }

    /// `a ∘ b`, evaluated from the formula for family braces.
    pub fn mul(&self, a: &Element, b: &Element) -> Result<Element> {
        self.additive.check(a)?;
        self.additive.check(b)?;
        Ok(match &self.rule {
            MultRule::Family(tag, params) => families::evaluate(*tag, params, &self.additive, &a.0, &b.0),
            MultRule::Table(t) => {
                let n = self.order();
                self.additive
                    .decode(t[self.additive.encode(a) * n + self.additive.encode(b)] as usize)
            }
        })
    }

    /// `λ_a(b) = -a + a∘b`.
    pub fn lambda(&self, a: &Element, b: &Element) -> Result<Element> {
        let ab = self.mul(a, b)?;
        Ok(self.additive.sub(&ab, a))
    }

    fn tables(&self) -> &Tables {
        self.tables.get_or_init(|| {
            let n = self.order();
            let a = &self.additive;
            let elems: Vec<Element> = a.elements().collect();
            let mut add = Vec::with_capacity(n * n);
            let mut mul = Vec::with_capacity(n * n);
            for x in &elems {
                for y in &elems {
                    add.push(a.encode(&a.add(x, y)) as u32);
                }
            }
            match &self.rule {
                MultRule::Family(tag, params) => {
                    for x in &elems {
                        for y in &elems {
                            mul.push(a.encode(&families::evaluate(*tag, params, a, &x.0, &y.0)) as u32);
                        }
                    }
                }
                MultRule::Table(t) => mul.extend_from_slice(t),
            }
            let neg = elems.iter().map(|x| a.encode(&a.neg(x)) as u32).collect();
            let mut inv = vec![u32::MAX; n];
            for x in 0..n {
                if let Some(y) = (0..n).find(|&y| mul[x * n + y] == 0) {
                    inv[x] = y as u32;
                }
            }
            Arc::new(Tables { add, neg, mul, inv })
        })
    }

    #[inline]
    pub fn add_idx(&self, a: usize, b: usize) -> usize {
        self.tables().add[a * self.order() + b] as usize
    }

    #[inline]
    pub fn neg_idx(&self, a: usize) -> usize {
        self.tables().neg[a] as usize
    }

    #[inline]
    pub fn mul_idx(&self, a: usize, b: usize) -> usize {
        self.tables().mul[a * self.order() + b] as usize
    }

    /// Inverse in the multiplicative group.
    #[inline]
    pub fn inv_idx(&self, a: usize) -> usize {
        self.tables().inv[a] as usize
    }

    #[inline]
    pub fn lambda_idx(&self, a: usize, b: usize) -> usize {
        self.add_idx(self.neg_idx(a), self.mul_idx(a, b))
    }

    /// `λ_a` as an image map over canonical indices.
    pub fn lambda_map(&self, a: usize) -> Vec<usize> {
        (0..self.order()).map(|b| self.lambda_idx(a, b)).collect()
    }

    /// Raw multiplication table in canonical encoding.
    pub fn mult_table(&self) -> &[u32] {
        &self.tables().mul
    }

    /// The multiplicative group as a Cayley table over canonical indices.
    pub fn mult_group(&self) -> Result<GroupTable> {
        GroupTable::new(self.order(), self.tables().mul.clone())
    }

    /// Multiplicative order of an element.
    pub fn mult_order(&self, a: usize) -> u64 {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul_idx(x, a);
            k += 1;
        }
        k
    }

    /// The same brace with its product stored as a table.
    pub fn to_table_brace(&self) -> Brace {
        Brace::from_rule(self.additive.clone(), MultRule::Table(self.mult_table().into()))
    }

    /// Identity of the underlying multiplication: equal carriers and equal
    /// products everywhere.
    pub fn same_structure(&self, other: &Brace) -> bool {
        self.additive == other.additive && self.mult_table() == other.mult_table()
    }
}

/// A brace from an explicit product table over the canonical encoding of
/// `additive`. The brace axioms are checked on every triple.
pub fn brace_from_table(additive: AbelianGroup, mult_table: Vec<u32>, bounds: &crate::Bounds) -> Result<Brace> {
    let n = additive.order();
    if mult_table.len() != n * n {
        return Err(Error::Validation(format!(
            "product table has {} entries, expected {}",
            mult_table.len(),
            n * n
        )));
    }
    let b = Brace::from_rule(additive, MultRule::Table(mult_table.into()));
    let report = verify_brace_axioms(&b, bounds)?;
    match report.violation {
        None => Ok(b),
        Some(v) => Err(Error::Validation(format!("brace axioms fail: {}", v.describe(&b)))),
    }
}

#[cfg(test)]
mod tests;

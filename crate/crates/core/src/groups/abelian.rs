use std::fmt;

use crate::arith;
use crate::error::{Error, Result};
use crate::groups::table::GroupTable;

/// An element of an [`AbelianGroup`]: one residue per cyclic factor.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Element(pub Vec<u64>);

impl Element {
    pub fn coords(&self) -> &[u64] {
        &self.0
    }
}

impl From<Vec<u64>> for Element {
    fn from(v: Vec<u64>) -> Self {
        Element(v)
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// A finite abelian group `Z_{m_1} x ... x Z_{m_k}` written additively.
///
/// Elements have a canonical integer encoding: the mixed-radix index with the
/// first coordinate most significant. All tables and files use this encoding.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AbelianGroup {
    moduli: Vec<u64>,
    order: usize,
}

impl AbelianGroup {
    pub fn new(moduli: Vec<u64>) -> Result<Self> {
        if let Some(m) = moduli.iter().find(|&&m| m < 2) {
            return Err(Error::domain(format!(
                "cyclic factor of size {m}; every modulus must be at least 2"
            )));
        }
        let order = moduli.iter().product::<u64>() as usize;
        Ok(AbelianGroup { moduli, order })
    }

    /// The trivial group, with no cyclic factors.
    pub fn trivial() -> Self {
        AbelianGroup {
            moduli: Vec::new(),
            order: 1,
        }
    }

    pub fn cyclic(n: u64) -> Result<Self> {
        if n == 1 {
            Ok(Self::trivial())
        } else {
            Self::new(vec![n])
        }
    }

    pub fn moduli(&self) -> &[u64] {
        &self.moduli
    }

    pub fn rank(&self) -> usize {
        self.moduli.len()
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn zero(&self) -> Element {
        Element(vec![0; self.rank()])
    }

    /// The canonical generator `e_i = (0, .., 1, .., 0)`.
    pub fn basis(&self, i: usize) -> Element {
        let mut c = vec![0; self.rank()];
        c[i] = 1;
        Element(c)
    }

    pub fn contains(&self, x: &Element) -> bool {
        x.0.len() == self.rank() && x.0.iter().zip(&self.moduli).all(|(c, m)| c < m)
    }

    pub(crate) fn check(&self, x: &Element) -> Result<()> {
        if self.contains(x) {
            Ok(())
        } else {
            Err(Error::domain(format!("{x} is not an element of {self}")))
        }
    }

    pub fn encode(&self, x: &Element) -> usize {
        x.0.iter().zip(&self.moduli).fold(0u64, |acc, (c, m)| acc * m + c) as usize
    }

    pub fn decode(&self, mut index: usize) -> Element {
        let mut coords = vec![0; self.rank()];
        for (c, m) in coords.iter_mut().zip(&self.moduli).rev() {
            *c = index as u64 % m;
            index /= *m as usize;
        }
        Element(coords)
    }

    pub fn elements(&self) -> impl Iterator<Item = Element> + '_ {
        (0..self.order).map(move |i| self.decode(i))
    }

    pub fn add(&self, a: &Element, b: &Element) -> Element {
        Element(
            a.0.iter()
                .zip(&b.0)
                .zip(&self.moduli)
                .map(|((x, y), m)| (x + y) % m)
                .collect(),
        )
    }

    pub fn neg(&self, a: &Element) -> Element {
        Element(a.0.iter().zip(&self.moduli).map(|(x, m)| (m - x) % m).collect())
    }

    pub fn sub(&self, a: &Element, b: &Element) -> Element {
        self.add(a, &self.neg(b))
    }

    /// `k * a`.
    pub fn scale(&self, k: u64, a: &Element) -> Element {
        Element(a.0.iter().zip(&self.moduli).map(|(x, m)| (x * (k % m)) % m).collect())
    }

    pub fn add_idx(&self, a: usize, b: usize) -> usize {
        self.encode(&self.add(&self.decode(a), &self.decode(b)))
    }

    /// Least `k >= 1` with `k * g = 0`.
    pub fn element_order(&self, g: &Element) -> Result<u64> {
        self.check(g)?;
        Ok(g.0
            .iter()
            .zip(&self.moduli)
            .map(|(c, m)| m / arith::gcd(*c, *m))
            .fold(1, arith::lcm))
    }

    /// Exponent of the group (lcm of the moduli).
    pub fn exponent(&self) -> u64 {
        self.moduli.iter().copied().fold(1, arith::lcm)
    }

    /// Cayley table of the addition in canonical encoding.
    pub fn addition_table(&self) -> GroupTable {
        let n = self.order;
        let elems: Vec<Element> = self.elements().collect();
        let mut table = Vec::with_capacity(n * n);
        for a in &elems {
            for b in &elems {
                table.push(self.encode(&self.add(a, b)) as u32);
            }
        }
        GroupTable::from_raw(n, table)
    }

    /// Indices of the additive subgroup generated by `gens`.
    pub fn span(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order];
        seen[0] = true;
        let mut queue = vec![0usize];
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            for &g in gens {
                let y = self.add_idx(x, g);
                if !seen[y] {
                    seen[y] = true;
                    queue.push(y);
                }
            }
        }
        queue.sort_unstable();
        queue
    }

    pub fn is_cyclic(&self) -> bool {
        self.exponent() as usize == self.order
    }

    /// Invariant factors `d_1 | d_2 | ... | d_k`, all at least 2.
    pub fn invariant_factors(&self) -> Vec<u64> {
        invariant_factors_from_moduli(&self.moduli)
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.moduli.is_empty() {
            return write!(f, "Z1");
        }
        for (i, m) in self.moduli.iter().enumerate() {
            if i > 0 {
                write!(f, "x")?;
            }
            write!(f, "Z{m}")?;
        }
        Ok(())
    }
}

/// Invariant factors of `Z_{m_1} x ... x Z_{m_k}`, in divisibility order.
pub fn invariant_factors_from_moduli(moduli: &[u64]) -> Vec<u64> {
    let mut primary: Vec<(u64, Vec<u64>)> = Vec::new();
    for &m in moduli {
        for (p, e) in arith::factorize(m) {
            let pe = p.pow(e);
            match primary.iter_mut().find(|(q, _)| *q == p) {
                Some((_, v)) => v.push(pe),
                None => primary.push((p, vec![pe])),
            }
        }
    }
    invariant_factors_from_primary(primary)
}

/// Combines primary components `(p, [p^e1, p^e2, ..])` into invariant factors.
pub(crate) fn invariant_factors_from_primary(mut primary: Vec<(u64, Vec<u64>)>) -> Vec<u64> {
    let len = primary.iter().map(|(_, v)| v.len()).max().unwrap_or(0);
    for (_, v) in primary.iter_mut() {
        v.sort_unstable_by(|a, b| b.cmp(a));
    }
    let mut out: Vec<u64> = (0..len)
        .map(|i| primary.iter().map(|(_, v)| v.get(i).copied().unwrap_or(1)).product())
        .collect();
    out.reverse();
    out
}

/// All abelian groups of order `n` up to isomorphism, each given by its
/// invariant factors. The order of the list is deterministic.
pub fn abelian_groups_of_order(n: u64) -> Vec<AbelianGroup> {
    let mut lists: Vec<Vec<(u64, Vec<u64>)>> = vec![Vec::new()];
    for (p, e) in arith::factorize(n) {
        let mut next = Vec::new();
        for part in partitions(e) {
            let powers: Vec<u64> = part.iter().map(|&k| p.pow(k)).collect();
            for prefix in &lists {
                let mut l = prefix.clone();
                l.push((p, powers.clone()));
                next.push(l);
            }
        }
        lists = next;
    }
    lists
        .into_iter()
        .map(|primary| {
            let f = invariant_factors_from_primary(primary);
            if f.is_empty() {
                AbelianGroup::trivial()
            } else {
                AbelianGroup::new(f).expect("invariant factors are at least 2")
            }
        })
        .collect()
}

/// Partitions of `n` as weakly decreasing lists, largest first part first.
fn partitions(n: u32) -> Vec<Vec<u32>> {
    fn go(n: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for k in (1..=max.min(n)).rev() {
            prefix.push(k);
            go(n - k, k, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

use std::collections::HashSet;

use crate::arith;
use crate::bounds::Bounds;
use crate::error::{Error, Result};

/// A finite group given by its Cayley table over the indices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupTable {
    n: usize,
    table: Vec<u32>,
    identity: usize,
    inverse: Vec<u32>,
}

/// A subgroup, stored as the sorted list of its element indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subgroup(Vec<usize>);

impl Subgroup {
    pub fn from_sorted(elements: Vec<usize>) -> Self {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        Subgroup(elements)
    }

    pub fn from_unsorted(mut elements: Vec<usize>) -> Self {
        elements.sort_unstable();
        elements.dedup();
        Subgroup(elements)
    }

    pub fn elements(&self) -> &[usize] {
        &self.0
    }

    pub fn order(&self) -> usize {
        self.0.len()
    }

    pub fn contains(&self, g: usize) -> bool {
        self.0.binary_search(&g).is_ok()
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.0.iter().all(|&g| other.contains(g))
    }

    pub fn intersect(&self, other: &Subgroup) -> Subgroup {
        Subgroup(self.0.iter().copied().filter(|&g| other.contains(g)).collect())
    }
}

/// Verification outcome for the group axioms of a table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TableDefect {
    OutOfRange { a: usize, b: usize },
    NoIdentity,
    NotLatin { row: usize },
    NotAssociative { a: usize, b: usize, c: usize },
}

impl GroupTable {
    /// Builds a table, checking closure, identity, the Latin property and
    /// associativity (exhaustively up to order 200, sampled above).
    pub fn new(n: usize, table: Vec<u32>) -> Result<Self> {
        if n == 0 || table.len() != n * n {
            return Err(Error::Validation(format!(
                "table of length {} does not describe a group of order {n}",
                table.len()
            )));
        }
        if let Some(&v) = table.iter().find(|&&v| v as usize >= n) {
            return Err(Error::Validation(format!("table entry {v} out of range 0..{n}")));
        }
        let g = Self::assemble(n, table)
            .ok_or_else(|| Error::Validation("table has no two-sided identity or is not a Latin square".into()))?;
        match g.verify() {
            None => Ok(g),
            Some(d) => Err(Error::Validation(format!("group axioms fail: {d:?}"))),
        }
    }

    /// Builds a table known to be a group by construction.
    pub(crate) fn from_raw(n: usize, table: Vec<u32>) -> Self {
        Self::assemble(n, table).expect("table constructed as a group")
    }

    fn assemble(n: usize, table: Vec<u32>) -> Option<Self> {
        let identity =
            (0..n).find(|&e| (0..n).all(|x| table[e * n + x] as usize == x && table[x * n + e] as usize == x))?;
        let mut inverse = vec![u32::MAX; n];
        for a in 0..n {
            let mut seen = vec![false; n];
            for b in 0..n {
                let c = table[a * n + b] as usize;
                if seen[c] {
                    return None;
                }
                seen[c] = true;
                if c == identity {
                    inverse[a] = b as u32;
                }
            }
        }
        Some(GroupTable {
            n,
            table,
            identity,
            inverse,
        })
    }

    /// Checks the group axioms; `None` means the table is a group.
    pub fn verify(&self) -> Option<TableDefect> {
        let n = self.n;
        if self.table.iter().any(|&v| v as usize >= n) {
            return Some(TableDefect::OutOfRange { a: 0, b: 0 });
        }
        if (0..n).any(|x| self.mul(self.identity, x) != x || self.mul(x, self.identity) != x) {
            return Some(TableDefect::NoIdentity);
        }
        for a in 0..n {
            let mut seen = vec![false; n];
            for b in 0..n {
                let c = self.mul(a, b);
                if std::mem::replace(&mut seen[c], true) {
                    return Some(TableDefect::NotLatin { row: a });
                }
            }
        }
        let check = |a: usize, b: usize, c: usize| self.mul(self.mul(a, b), c) == self.mul(a, self.mul(b, c));
        if n <= 200 {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        if !check(a, b, c) {
                            return Some(TableDefect::NotAssociative { a, b, c });
                        }
                    }
                }
            }
        } else {
            // Deterministic sample of triples for large tables.
            let mut state = 0x9e37_79b9_7f4a_7c15u64;
            let mut next = || {
                state ^= state << 13;
                state ^= state >> 7;
                state ^= state << 17;
                (state % n as u64) as usize
            };
            for _ in 0..200_000 {
                let (a, b, c) = (next(), next(), next());
                if !check(a, b, c) {
                    return Some(TableDefect::NotAssociative { a, b, c });
                }
            }
        }
        None
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.n + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a] as usize
    }

    pub fn raw_table(&self) -> &[u32] {
        &self.table
    }

    /// `g h g^-1`.
    pub fn conjugate(&self, g: usize, h: usize) -> usize {
        self.mul(self.mul(g, h), self.inv(g))
    }

    pub fn pow(&self, g: usize, k: u64) -> usize {
        let mut x = self.identity;
        for _ in 0..k {
            x = self.mul(x, g);
        }
        x
    }

    /// Least `k >= 1` with `g^k` the identity.
    pub fn element_order(&self, g: usize) -> Result<u64> {
        if g >= self.n {
            return Err(Error::domain(format!(
                "index {g} is not an element of a group of order {}",
                self.n
            )));
        }
        let mut x = g;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, g);
            k += 1;
        }
        Ok(k)
    }

    pub fn element_orders(&self) -> Vec<u64> {
        (0..self.n)
            .map(|g| self.element_order(g).expect("index in range"))
            .collect()
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.n).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Relabels the table through the bijection `perm` (old index to new index).
    pub fn relabel(&self, perm: &[usize]) -> GroupTable {
        let n = self.n;
        let mut table = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                table[perm[a] * n + perm[b]] = perm[self.mul(a, b)] as u32;
            }
        }
        GroupTable::from_raw(n, table)
    }

    // ---- standard groups ----

    pub fn cyclic(n: usize) -> GroupTable {
        let table = (0..n * n).map(|i| ((i / n + i % n) % n) as u32).collect();
        GroupTable::from_raw(n, table)
    }

    /// The dihedral group of order `2n`. Element `k` for `k < n` is the
    /// rotation `r^k`; element `n + k` is the reflection `r^k s`.
    pub fn dihedral(n: usize) -> GroupTable {
        Self::semidirect(n, 2, (n as u64).saturating_sub(1).max(1))
    }

    /// `Z_m x| Z_q` where the generator of `Z_q` acts on `Z_m` by
    /// multiplication by `k`. Element `(a, b)` has index `b * m + a` and
    /// `(a, b)(c, d) = (a + k^b c, b + d)`.
    pub fn semidirect(m: usize, q: usize, k: u64) -> GroupTable {
        let n = m * q;
        let mut table = vec![0u32; n * n];
        for b in 0..q {
            let kb = arith::pow_mod(k, b as u64, m as u64) as usize;
            for a in 0..m {
                for d in 0..q {
                    for c in 0..m {
                        let x = (a + kb * c) % m;
                        let y = (b + d) % q;
                        table[(b * m + a) * n + d * m + c] = (y * m + x) as u32;
                    }
                }
            }
        }
        GroupTable::from_raw(n, table)
    }

    /// Direct product, with index `a * |other| + b`.
    pub fn direct_product(&self, other: &GroupTable) -> GroupTable {
        let (n1, n2) = (self.n, other.n);
        let n = n1 * n2;
        let mut table = vec![0u32; n * n];
        for a1 in 0..n1 {
            for a2 in 0..n2 {
                for b1 in 0..n1 {
                    for b2 in 0..n2 {
                        table[(a1 * n2 + a2) * n + b1 * n2 + b2] = (self.mul(a1, b1) * n2 + other.mul(a2, b2)) as u32;
                    }
                }
            }
        }
        GroupTable::from_raw(n, table)
    }

    // ---- subgroups ----

    /// Subgroup generated by `gens`, by breadth-first closure from the identity.
    pub fn generate(&self, gens: &[usize]) -> Subgroup {
        let mut seen = vec![false; self.n];
        seen[self.identity] = true;
        let mut queue = vec![self.identity];
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    queue.push(y);
                }
            }
        }
        Subgroup::from_unsorted(queue)
    }

    pub fn is_subgroup(&self, h: &Subgroup) -> bool {
        !h.0.is_empty()
            && h.0.iter().all(|&x| x < self.n)
            && h.contains(self.identity)
            && h.0
                .iter()
                .all(|&a| h.contains(self.inv(a)) && h.0.iter().all(|&b| h.contains(self.mul(a, b))))
    }

    pub fn is_normal(&self, h: &Subgroup) -> bool {
        (0..self.n).all(|g| h.0.iter().all(|&x| h.contains(self.conjugate(g, x))))
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup(vec![self.identity])
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup((0..self.n).collect())
    }

    /// `g H g^-1`.
    pub fn conjugate_subgroup(&self, g: usize, h: &Subgroup) -> Subgroup {
        Subgroup::from_unsorted(h.0.iter().map(|&x| self.conjugate(g, x)).collect())
    }

    /// Largest normal subgroup contained in `h`: the intersection of all
    /// conjugates of `h`.
    pub fn normal_core(&self, h: &Subgroup) -> Result<Subgroup> {
        if !self.is_subgroup(h) {
            return Err(Error::domain("normal core requested for a set that is not a subgroup"));
        }
        let mut core = h.clone();
        for g in 0..self.n {
            if core.order() == 1 {
                break;
            }
            core = core.intersect(&self.conjugate_subgroup(g, h));
        }
        Ok(core)
    }

    pub fn is_core_free(&self, h: &Subgroup) -> Result<bool> {
        Ok(self.normal_core(h)?.order() == 1)
    }

    /// Every subgroup of the group.
    pub fn subgroups(&self, bounds: &Bounds) -> Result<Vec<Subgroup>> {
        bounds.check_subgroups("group order for subgroup enumeration", self.n)?;
        Ok(self.subgroups_within(&self.whole()))
    }

    /// Every subgroup contained in the subgroup `within`, sorted by order and
    /// then by element list.
    ///
    /// Cyclic subgroups are seeded first; the lattice is then closed under
    /// joins with cyclic subgroups, which reaches every subgroup because each
    /// subgroup is generated by its cyclic subgroups.
    pub fn subgroups_within(&self, within: &Subgroup) -> Vec<Subgroup> {
        let mut cyclic_gens: Vec<usize> = Vec::new();
        let mut seen: HashSet<Subgroup> = HashSet::new();
        let mut found: Vec<(Subgroup, Vec<usize>)> = Vec::new();
        let mut elems: Vec<usize> = within.0.clone();
        let orders = self.element_orders();
        elems.sort_by_key(|&g| (orders[g], g));
        for &g in &elems {
            let c = self.generate(&[g]);
            if seen.insert(c.clone()) {
                cyclic_gens.push(g);
                found.push((c, vec![g]));
            }
        }
        let mut i = 0;
        while i < found.len() {
            let (h, gens) = found[i].clone();
            for &g in &cyclic_gens {
                if h.contains(g) {
                    continue;
                }
                let mut new_gens = gens.clone();
                new_gens.push(g);
                let j = self.generate(&new_gens);
                if seen.insert(j.clone()) {
                    found.push((j, new_gens));
                }
            }
            i += 1;
        }
        let mut out: Vec<Subgroup> = found.into_iter().map(|(h, _)| h).collect();
        out.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.cmp(b)));
        out
    }

    /// Commutator subgroup.
    pub fn derived_subgroup(&self) -> Subgroup {
        let mut comms: Vec<usize> = Vec::new();
        for a in 0..self.n {
            for b in 0..self.n {
                let c = self.mul(self.mul(a, b), self.mul(self.inv(a), self.inv(b)));
                comms.push(c);
            }
        }
        comms.sort_unstable();
        comms.dedup();
        self.generate(&comms)
    }

    /// Quotient by a normal subgroup; cosets are numbered by their smallest
    /// element in increasing order.
    pub fn quotient(&self, normal: &Subgroup) -> GroupTable {
        let mut coset_of = vec![usize::MAX; self.n];
        let mut reps = Vec::new();
        for g in 0..self.n {
            if coset_of[g] == usize::MAX {
                let idx = reps.len();
                reps.push(g);
                for &k in normal.elements() {
                    coset_of[self.mul(g, k)] = idx;
                }
            }
        }
        let m = reps.len();
        let mut table = vec![0u32; m * m];
        for (i, &a) in reps.iter().enumerate() {
            for (j, &b) in reps.iter().enumerate() {
                table[i * m + j] = coset_of[self.mul(a, b)] as u32;
            }
        }
        GroupTable::from_raw(m, table)
    }

    /// A generating set chosen greedily by decreasing element order.
    pub fn small_generating_set(&self) -> Vec<usize> {
        let orders = self.element_orders();
        let mut by_order: Vec<usize> = (0..self.n).collect();
        by_order.sort_by_key(|&g| (std::cmp::Reverse(orders[g]), g));
        let mut gens = Vec::new();
        let mut span = self.trivial_subgroup();
        for g in by_order {
            if span.order() == self.n {
                break;
            }
            if !span.contains(g) {
                gens.push(g);
                span = self.generate(&gens);
            }
        }
        gens
    }

    /// Searches for an isomorphism `self -> other`, returned as the image
    /// of every element.
    pub fn find_isomorphism(&self, other: &GroupTable) -> Option<Vec<usize>> {
        if self.n != other.n {
            return None;
        }
        let orders_a = self.element_orders();
        let orders_b = other.element_orders();
        let mut ca = orders_a.clone();
        let mut cb = orders_b.clone();
        ca.sort_unstable();
        cb.sort_unstable();
        if ca != cb {
            return None;
        }
        let gens = self.small_generating_set();
        // Breadth-first words: every element is parent * gens[k].
        let mut word: Vec<Option<(usize, usize)>> = vec![None; self.n];
        let mut order = vec![self.identity];
        let mut seen = vec![false; self.n];
        seen[self.identity] = true;
        let mut head = 0;
        while head < order.len() {
            let x = order[head];
            head += 1;
            for (k, &g) in gens.iter().enumerate() {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    word[y] = Some((x, k));
                    order.push(y);
                }
            }
        }
        let candidates: Vec<Vec<usize>> = gens
            .iter()
            .map(|&g| (0..other.n).filter(|&h| orders_b[h] == orders_a[g]).collect())
            .collect();
        let mut images = vec![0usize; gens.len()];
        self.iso_search(other, &gens, &word, &order, &candidates, &mut images, 0)
    }

    #[allow(clippy::too_many_arguments)]
    fn iso_search(
        &self,
        other: &GroupTable,
        gens: &[usize],
        word: &[Option<(usize, usize)>],
        order: &[usize],
        candidates: &[Vec<usize>],
        images: &mut Vec<usize>,
        depth: usize,
    ) -> Option<Vec<usize>> {
        if depth == gens.len() {
            let mut map = vec![usize::MAX; self.n];
            map[self.identity] = other.identity;
            for &y in &order[1..] {
                let (x, k) = word[y].expect("reached by search");
                map[y] = other.mul(map[x], images[k]);
            }
            let mut hit = vec![false; other.n];
            for &m in &map {
                if std::mem::replace(&mut hit[m], true) {
                    return None;
                }
            }
            for x in 0..self.n {
                for (k, &g) in gens.iter().enumerate() {
                    if map[self.mul(x, g)] != other.mul(map[x], images[k]) {
                        return None;
                    }
                }
            }
            return Some(map);
        }
        for &h in &candidates[depth] {
            images[depth] = h;
            if let Some(m) = self.iso_search(other, gens, word, order, candidates, images, depth + 1) {
                return Some(m);
            }
        }
        None
    }
}

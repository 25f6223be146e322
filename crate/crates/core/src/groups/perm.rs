use std::collections::HashMap;
use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::groups::table::GroupTable;

/// A bijection of `0..n`, stored by its images.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || std::mem::replace(&mut seen[i], true) {
                return Err(Error::domain(format!("{images:?} is not a permutation of 0..{n}")));
            }
        }
        Ok(Permutation {
            images: images.into_iter().map(|i| i as u32).collect(),
        })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n as u32).collect(),
        }
    }

    /// Builds a permutation of `0..n` from disjoint cycles.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        for cycle in cycles {
            for (k, &x) in cycle.iter().enumerate() {
                if x >= n {
                    return Err(Error::domain(format!("point {x} outside 0..{n}")));
                }
                images[x] = cycle[(k + 1) % cycle.len()];
            }
        }
        Self::new(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    pub fn images(&self) -> impl Iterator<Item = usize> + '_ {
        self.images.iter().map(|&i| i as usize)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: other.images.iter().map(|&i| self.images[i as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j as usize] = i as u32;
        }
        Permutation { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i as u32 == j)
    }

    /// Cycle lengths in decreasing order, fixed points included.
    pub fn cycle_type(&self) -> Vec<usize> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut lens = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.apply(x);
                len += 1;
            }
            lens.push(len);
        }
        lens.sort_unstable_by(|a, b| b.cmp(a));
        lens
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.images.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

/// A permutation group given by generators; the element list is closed
/// lazily on first use.
#[derive(Debug, Clone)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    closure: OnceLock<Closure>,
}

#[derive(Debug, Clone)]
struct Closure {
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
}

/// The group generated by `gens`.
///
/// `degree` is only consulted when `gens` is empty; otherwise every generator
/// must have the same degree.
pub fn generate_perm_group(gens: &[Permutation], degree: Option<usize>) -> Result<PermGroup> {
    let degree = match (gens.first(), degree) {
        (Some(g), _) => g.degree(),
        (None, Some(d)) => d,
        (None, None) => return Err(Error::Usage("empty generator list with unspecified degree".into())),
    };
    if let Some(g) = gens.iter().find(|g| g.degree() != degree) {
        return Err(Error::Usage(format!(
            "generator of degree {} in a group of degree {degree}",
            g.degree()
        )));
    }
    Ok(PermGroup {
        degree,
        generators: gens.to_vec(),
        closure: OnceLock::new(),
    })
}

impl PermGroup {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    fn closure(&self) -> &Closure {
        self.closure.get_or_init(|| {
            // Breadth-first from the identity; new elements are gen ∘ element,
            // generators tried in the order given.
            let id = Permutation::identity(self.degree);
            let mut index = HashMap::new();
            index.insert(id.clone(), 0);
            let mut elements = vec![id];
            let mut head = 0;
            while head < elements.len() {
                let x = elements[head].clone();
                head += 1;
                for g in &self.generators {
                    let y = g.compose(&x);
                    if !index.contains_key(&y) {
                        index.insert(y.clone(), elements.len());
                        elements.push(y);
                    }
                }
            }
            Closure { elements, index }
        })
    }

    /// Elements in breadth-first order; the identity is first.
    pub fn elements(&self) -> &[Permutation] {
        &self.closure().elements
    }

    pub fn order(&self) -> usize {
        self.elements().len()
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.closure().index.get(p).copied()
    }

    /// Orbit of a point under the generators, in discovery order.
    pub fn orbit(&self, point: usize) -> Vec<usize> {
        let mut seen = vec![false; self.degree];
        seen[point] = true;
        let mut orbit = vec![point];
        let mut head = 0;
        while head < orbit.len() {
            let x = orbit[head];
            head += 1;
            for g in &self.generators {
                let y = g.apply(x);
                if !seen[y] {
                    seen[y] = true;
                    orbit.push(y);
                }
            }
        }
        orbit
    }

    /// Cayley table over the element indices, with `table[a][b] = a ∘ b`.
    pub fn to_table(&self) -> GroupTable {
        let c = self.closure();
        let n = c.elements.len();
        let mut table = vec![0u32; n * n];
        for (i, a) in c.elements.iter().enumerate() {
            for (j, b) in c.elements.iter().enumerate() {
                table[i * n + j] = c.index[&a.compose(b)] as u32;
            }
        }
        GroupTable::from_raw(n, table)
    }
}

/// True when the orbit of point 0 is every point.
pub fn is_transitive(g: &PermGroup) -> bool {
    g.degree() == 0 || g.orbit(0).len() == g.degree()
}

use std::collections::HashMap;
use std::ops::ControlFlow;

use crate::bounds::Bounds;
use crate::error::{Error, Result};
use crate::groups::abelian::{AbelianGroup, Element};
use crate::groups::table::GroupTable;

/// An additive bijection between two abelian groups, stored as the images of
/// the canonical generators `e_i` together with its full image map.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AdditiveMap {
    basis_images: Vec<Element>,
    map: Vec<u32>,
}

impl AdditiveMap {
    pub fn identity(a: &AbelianGroup) -> Self {
        AdditiveMap {
            basis_images: (0..a.rank()).map(|i| a.basis(i)).collect(),
            map: (0..a.order() as u32).collect(),
        }
    }

    pub fn basis_images(&self) -> &[Element] {
        &self.basis_images
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.map[x] as usize
    }

    pub fn map(&self) -> &[u32] {
        &self.map
    }

    /// `self ∘ other` (apply `other` first). Basis images are recomputed in
    /// the codomain from the composed map.
    pub fn compose(&self, other: &AdditiveMap, domain: &AbelianGroup, codomain: &AbelianGroup) -> AdditiveMap {
        let map: Vec<u32> = other.map.iter().map(|&x| self.map[x as usize]).collect();
        let basis_images = (0..domain.rank())
            .map(|i| codomain.decode(map[domain.encode(&domain.basis(i))] as usize))
            .collect();
        AdditiveMap { basis_images, map }
    }

    pub fn inverse(&self, domain: &AbelianGroup, codomain: &AbelianGroup) -> AdditiveMap {
        let mut map = vec![0u32; self.map.len()];
        for (x, &y) in self.map.iter().enumerate() {
            map[y as usize] = x as u32;
        }
        let basis_images = (0..codomain.rank())
            .map(|i| domain.decode(map[codomain.encode(&codomain.basis(i))] as usize))
            .collect();
        AdditiveMap { basis_images, map }
    }
}

/// Visits every additive isomorphism `from -> to`, in lexicographic order of
/// the basis-image indices. The visitor may stop the search early.
pub fn for_each_additive_isomorphism(
    from: &AbelianGroup,
    to: &AbelianGroup,
    bounds: &Bounds,
    mut visit: impl FnMut(&AdditiveMap) -> ControlFlow<()>,
) -> Result<()> {
    if from.order() != to.order() {
        return Ok(());
    }
    bounds.check_subgroups("abelian group order for automorphism search", from.order())?;
    let n = from.order();
    // e_i may only go to elements whose order divides m_i.
    let to_orders: Vec<u64> = to
        .elements()
        .map(|y| to.element_order(&y).expect("own element"))
        .collect();
    let candidates: Vec<Vec<usize>> = from
        .moduli()
        .iter()
        .map(|&m| (0..n).filter(|&y| m % to_orders[y] == 0).collect())
        .collect();
    let space = candidates
        .iter()
        .try_fold(1usize, |acc, c| acc.checked_mul(c.len()))
        .unwrap_or(usize::MAX);
    bounds.check_automorphism_search("additive map search space", space)?;
    if from.rank() == 0 {
        let _ = visit(&AdditiveMap {
            basis_images: Vec::new(),
            map: vec![0],
        });
        return Ok(());
    }
    let from_elems: Vec<Element> = from.elements().collect();
    let mut choice = vec![0usize; from.rank()];
    let mut map = vec![0u32; n];
    let mut hit = vec![false; n];
    loop {
        let images: Vec<Element> = choice
            .iter()
            .zip(&candidates)
            .map(|(&c, cand)| to.decode(cand[c]))
            .collect();
        hit.iter_mut().for_each(|h| *h = false);
        let mut injective = true;
        for (x, coords) in from_elems.iter().enumerate() {
            let mut y = to.zero();
            for (c, img) in coords.0.iter().zip(&images) {
                if *c != 0 {
                    y = to.add(&y, &to.scale(*c, img));
                }
            }
            let yi = to.encode(&y);
            if std::mem::replace(&mut hit[yi], true) {
                injective = false;
                break;
            }
            map[x] = yi as u32;
        }
        if injective {
            let f = AdditiveMap {
                basis_images: images,
                map: map.clone(),
            };
            if visit(&f).is_break() {
                return Ok(());
            }
        }
        // odometer, last coordinate fastest
        let mut i = choice.len();
        loop {
            if i == 0 {
                return Ok(());
            }
            i -= 1;
            choice[i] += 1;
            if choice[i] < candidates[i].len() {
                break;
            }
            choice[i] = 0;
        }
    }
}

/// Every additive automorphism of `a`, identity first.
pub fn abelian_automorphisms(a: &AbelianGroup, bounds: &Bounds) -> Result<Vec<AdditiveMap>> {
    let mut out = Vec::new();
    for_each_additive_isomorphism(a, a, bounds, |f| {
        out.push(f.clone());
        ControlFlow::Continue(())
    })?;
    if let Some(pos) = out
        .iter()
        .position(|f| f.map.iter().enumerate().all(|(i, &x)| i as u32 == x))
    {
        let id = out.remove(pos);
        out.insert(0, id);
    }
    Ok(out)
}

/// The holomorph `A x| Aut(A)` with its action on `A`.
///
/// Element `(a, k)` (translation `a`, automorphism number `k`) has index
/// `a * |Aut| + k`; it acts by `x -> a + phi_k(x)`, and
/// `(a, phi)(b, psi) = (a + phi(b), phi psi)`.
#[derive(Debug, Clone)]
pub struct Holomorph {
    additive: AbelianGroup,
    automorphisms: Vec<AdditiveMap>,
    aut_product: Vec<u32>,
}

pub fn holomorph(a: &AbelianGroup, bounds: &Bounds) -> Result<Holomorph> {
    let automorphisms = abelian_automorphisms(a, bounds)?;
    let size = a.order() * automorphisms.len();
    bounds.check_holomorph(&format!("holomorph of {a}"), size)?;
    let index: HashMap<&[u32], usize> = automorphisms.iter().enumerate().map(|(i, f)| (f.map(), i)).collect();
    let k = automorphisms.len();
    let mut aut_product = vec![0u32; k * k];
    for (i, f) in automorphisms.iter().enumerate() {
        for (j, g) in automorphisms.iter().enumerate() {
            let fg: Vec<u32> = g.map().iter().map(|&x| f.map()[x as usize]).collect();
            aut_product[i * k + j] = *index
                .get(fg.as_slice())
                .ok_or_else(|| Error::Inconsistent("automorphism list not closed under composition".into()))?
                as u32;
        }
    }
    Ok(Holomorph {
        additive: a.clone(),
        automorphisms,
        aut_product,
    })
}

impl Holomorph {
    pub fn additive(&self) -> &AbelianGroup {
        &self.additive
    }

    pub fn automorphisms(&self) -> &[AdditiveMap] {
        &self.automorphisms
    }

    pub fn order(&self) -> usize {
        self.additive.order() * self.automorphisms.len()
    }

    pub fn index(&self, translation: usize, aut: usize) -> usize {
        translation * self.automorphisms.len() + aut
    }

    pub fn parts(&self, x: usize) -> (usize, usize) {
        (x / self.automorphisms.len(), x % self.automorphisms.len())
    }

    pub fn aut_mul(&self, i: usize, j: usize) -> usize {
        self.aut_product[i * self.automorphisms.len() + j] as usize
    }

    pub fn mul(&self, x: usize, y: usize) -> usize {
        let (a, i) = self.parts(x);
        let (b, j) = self.parts(y);
        let t = self.additive.add_idx(a, self.automorphisms[i].apply(b));
        self.index(t, self.aut_mul(i, j))
    }

    /// Image of the point `point` of `A` under the holomorph element `x`.
    pub fn act(&self, x: usize, point: usize) -> usize {
        let (a, i) = self.parts(x);
        self.additive.add_idx(a, self.automorphisms[i].apply(point))
    }

    pub fn table(&self) -> GroupTable {
        let n = self.order();
        let mut table = vec![0u32; n * n];
        for x in 0..n {
            for y in 0..n {
                table[x * n + y] = self.mul(x, y) as u32;
            }
        }
        GroupTable::from_raw(n, table)
    }
}

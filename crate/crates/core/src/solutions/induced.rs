use crate::bounds::Bounds;
use crate::braces::{brace_from_table, Brace};
use crate::error::{Error, Result};
use crate::groups::{abelian_basis, AbelianGroup, Element, GroupTable};
use crate::solutions::Solution;

/// The brace structure on the permutation group `G` of a solution.
///
/// The product is composition. Since `λ_g(σ_y) = σ_{g(y)}`, addition by a
/// generator is `g + σ_y = g ∘ σ_{g⁻¹(y)}`; every element is reached from
/// the identity by such steps, and `g + h` follows `h`'s decomposition. The
/// result is relabeled onto an invariant-factor decomposition of `(G, +)` and
/// passed through the full axiom check.
pub fn induced_brace(s: &Solution, bounds: &Bounds) -> Result<Brace> {
    let g = s.permutation_group();
    let n = g.order();
    bounds.check_subgroups("permutation group order for the induced brace", n)?;
    let elems = g.elements();
    let mul = g.to_table();
    let deg = s.n();
    let sigma_idx: Vec<usize> = (0..deg)
        .map(|y| g.index_of(&s.sigma_perm(y)).expect("sigma in its group"))
        .collect();
    // inv_image[k][y] = k⁻¹(y)
    let inv_image: Vec<Vec<u32>> = elems
        .iter()
        .map(|k| k.inverse().images().map(|v| v as u32).collect())
        .collect();
    let add_sigma = |k: usize, y: usize| mul.mul(k, sigma_idx[inv_image[k][y] as usize]);

    let id = mul.identity();
    let mut parent = vec![usize::MAX; n];
    let mut step = vec![0usize; n];
    let mut order = vec![id];
    parent[id] = id;
    let mut head = 0;
    while head < order.len() {
        let h = order[head];
        head += 1;
        for y in 0..deg {
            let k = add_sigma(h, y);
            if parent[k] == usize::MAX {
                parent[k] = h;
                step[k] = y;
                order.push(k);
            }
        }
    }
    if order.len() != n {
        return Err(Error::Inconsistent(format!(
            "sums of the sigma maps reach {} of {n} group elements",
            order.len()
        )));
    }

    let mut add = vec![0u32; n * n];
    for a in 0..n {
        add[a * n + id] = a as u32;
        for &h in &order[1..] {
            let prev = add[a * n + parent[h]] as usize;
            add[a * n + h] = add_sigma(prev, step[h]) as u32;
        }
    }
    let plus = GroupTable::new(n, add)
        .map_err(|e| Error::Inconsistent(format!("induced addition is not a group law: {e}")))?;
    if !plus.is_abelian() {
        return Err(Error::Inconsistent("induced addition is not commutative".into()));
    }
    let (factors, basis) = abelian_basis(&plus)?;
    let additive = AbelianGroup::new(factors)?;

    // encoded coordinates -> group element
    let mut to_group = vec![0usize; n];
    for (code, slot) in to_group.iter_mut().enumerate() {
        let Element(coords) = additive.decode(code);
        let mut acc = id;
        for (c, &b) in coords.iter().zip(&basis) {
            for _ in 0..*c {
                acc = plus.mul(acc, b);
            }
        }
        *slot = acc;
    }
    let mut to_code = vec![usize::MAX; n];
    for (code, &x) in to_group.iter().enumerate() {
        to_code[x] = code;
    }
    if to_code.contains(&usize::MAX) {
        return Err(Error::Inconsistent(
            "invariant-factor basis does not cover the group".into(),
        ));
    }
    let mut table = vec![0u32; n * n];
    for a in 0..n {
        for b in 0..n {
            table[a * n + b] = to_code[mul.mul(to_group[a], to_group[b])] as u32;
        }
    }
    brace_from_table(additive, table, bounds).map_err(|e| match e {
        Error::Validation(m) => Error::Inconsistent(format!("induced brace: {m}")),
        other => other,
    })
}

use std::fmt;

use crate::arith;
use crate::error::{Error, Result};
use crate::groups::abelian::invariant_factors_from_primary;
use crate::groups::table::{GroupTable, Subgroup};

/// Isomorphism-type description of a small group.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GroupDescriptor {
    Cyclic(usize),
    /// Non-cyclic abelian, by invariant factors `d_1 | d_2 | ...`.
    Abelian(Vec<u64>),
    /// Dihedral group of the given order (`2n`, with `n >= 3`).
    Dihedral(usize),
    /// `Z_m x| Z_q`, `q` prime and coprime to `m`, the generator of `Z_q`
    /// acting by multiplication by `scalar`. The scalar is normalized to the
    /// smallest generator of the subgroup it spans in the units mod `m`.
    Semidirect {
        m: usize,
        q: usize,
        scalar: u64,
    },
    Other {
        order: usize,
        abelianization: Vec<u64>,
    },
}

impl fmt::Display for GroupDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupDescriptor::Cyclic(n) => write!(f, "cyclic {n}"),
            GroupDescriptor::Abelian(factors) => write!(f, "abelian {}", join(factors)),
            GroupDescriptor::Dihedral(n) => write!(f, "dihedral D{n}"),
            GroupDescriptor::Semidirect { m, q, scalar } => write!(f, "semidirect Z{m}:Z{q} scalar={scalar}"),
            GroupDescriptor::Other { order, abelianization } => {
                write!(f, "other order={order} abelianization={}", join(abelianization))
            }
        }
    }
}

fn join(v: &[u64]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("[{}]", parts.join(","))
}

fn parse_list(s: &str) -> Option<Vec<u64>> {
    let inner = s.strip_prefix('[')?.strip_suffix(']')?;
    if inner.is_empty() {
        return Some(Vec::new());
    }
    inner.split(',').map(|x| x.parse().ok()).collect()
}

impl std::str::FromStr for GroupDescriptor {
    type Err = Error;

    /// Parses the [`Display`](fmt::Display) form.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Usage(format!("unrecognized group description `{s}`"));
        let (kind, rest) = s.split_once(' ').ok_or_else(bad)?;
        let num = |t: &str| t.parse::<usize>().map_err(|_| bad());
        match kind {
            "cyclic" => Ok(GroupDescriptor::Cyclic(num(rest)?)),
            "abelian" => Ok(GroupDescriptor::Abelian(parse_list(rest).ok_or_else(bad)?)),
            "dihedral" => Ok(GroupDescriptor::Dihedral(num(rest
                .strip_prefix('D')
                .ok_or_else(bad)?)?)),
            "semidirect" => {
                let (groups, scalar) = rest.split_once(" scalar=").ok_or_else(bad)?;
                let (m, q) = groups.split_once(':').ok_or_else(bad)?;
                Ok(GroupDescriptor::Semidirect {
                    m: num(m.strip_prefix('Z').ok_or_else(bad)?)?,
                    q: num(q.strip_prefix('Z').ok_or_else(bad)?)?,
                    scalar: scalar.parse().map_err(|_| bad())?,
                })
            }
            "other" => {
                let (order, ab) = rest.split_once(" abelianization=").ok_or_else(bad)?;
                Ok(GroupDescriptor::Other {
                    order: num(order.strip_prefix("order=").ok_or_else(bad)?)?,
                    abelianization: parse_list(ab).ok_or_else(bad)?,
                })
            }
            _ => Err(bad()),
        }
    }
}

/// Recognizes cyclic, abelian, dihedral and cyclic-by-prime semidirect
/// groups; anything else is reported as `Other` with its abelianization.
pub fn identify_group(g: &GroupTable) -> GroupDescriptor {
    let n = g.order();
    if g.is_abelian() {
        let factors = abelian_invariants(g);
        return if factors.len() <= 1 {
            GroupDescriptor::Cyclic(n)
        } else {
            GroupDescriptor::Abelian(factors)
        };
    }
    let orders = g.element_orders();
    if n.is_multiple_of(2) && n >= 6 && find_dihedral_rotation(g, &orders).is_some() {
        return GroupDescriptor::Dihedral(n);
    }
    for q in arith::prime_divisors(n as u64) {
        let q = q as usize;
        let m = n / q;
        if arith::gcd(m as u64, q as u64) != 1 {
            continue;
        }
        if let Some(scalar) = semidirect_scalar(g, &orders, m, q) {
            return GroupDescriptor::Semidirect { m, q, scalar };
        }
    }
    let derived = g.derived_subgroup();
    GroupDescriptor::Other {
        order: n,
        abelianization: abelian_invariants(&g.quotient(&derived)),
    }
}

/// Invariant factors of an abelian group table, from the counts of elements
/// killed by each prime power. The trivial group gives an empty list.
pub fn abelian_invariants(g: &GroupTable) -> Vec<u64> {
    let orders = g.element_orders();
    let n = g.order() as u64;
    let mut primary = Vec::new();
    for (p, e) in arith::factorize(n) {
        // at_least[k] = number of cyclic p-factors of size >= p^k
        let killed = |k: u32| orders.iter().filter(|&&o| p.pow(k) % o == 0).count() as u64;
        let mut parts = Vec::new();
        let mut prev = killed(0);
        let mut at_least = Vec::new();
        for k in 1..=e {
            let c = killed(k);
            let mut r = 0;
            let mut ratio = c / prev;
            while ratio > 1 {
                ratio /= p;
                r += 1;
            }
            at_least.push(r);
            prev = c;
        }
        for k in 1..=e as usize {
            let exactly = at_least[k - 1] - at_least.get(k).copied().unwrap_or(0);
            for _ in 0..exactly {
                parts.push(p.pow(k as u32));
            }
        }
        primary.push((p, parts));
    }
    invariant_factors_from_primary(primary)
}

fn find_dihedral_rotation(g: &GroupTable, orders: &[u64]) -> Option<(usize, usize)> {
    let n = g.order();
    let m = (n / 2) as u64;
    for r in (0..n).filter(|&r| orders[r] == m) {
        let rot = g.generate(&[r]);
        let r_inv = g.inv(r);
        if let Some(s) = (0..n).find(|&s| !rot.contains(s) && orders[s] == 2 && g.conjugate(s, r) == r_inv) {
            return Some((r, s));
        }
    }
    None
}

fn semidirect_scalar(g: &GroupTable, orders: &[u64], m: usize, q: usize) -> Option<u64> {
    let n = g.order();
    for r in (0..n).filter(|&r| orders[r] == m as u64) {
        let rot = g.generate(&[r]);
        let powers: Vec<usize> = (0..m as u64).map(|k| g.pow(r, k)).collect();
        for t in (0..n).filter(|&t| orders[t] == q as u64 && !rot.contains(t)) {
            let c = g.conjugate(t, r);
            if let Some(k) = powers.iter().position(|&x| x == c) {
                let k = k as u64;
                let canonical = (1..q as u64)
                    .filter(|&j| arith::gcd(j, q as u64) == 1)
                    .map(|j| arith::pow_mod(k, j, m as u64))
                    .min()
                    .unwrap_or(k);
                return Some(canonical);
            }
        }
    }
    None
}

/// The rotation/reflection split of a dihedral group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DihedralSplit {
    pub rotations: Subgroup,
    pub reflections: Vec<usize>,
}

/// Splits a dihedral group into rotations and reflections.
///
/// For `n >= 3` the rotation subgroup is the unique cyclic subgroup of index
/// two. For `D_4` it is not unique, so a rotation subgroup must be designated;
/// a designated subgroup is checked in every case.
pub fn dihedral_split(g: &GroupTable, designated: Option<&Subgroup>) -> Result<DihedralSplit> {
    let n = g.order();
    let rotations = match designated {
        Some(r) => {
            check_rotation_subgroup(g, r)?;
            r.clone()
        }
        None => {
            if identify_group(g) != GroupDescriptor::Dihedral(n) {
                return Err(Error::domain(format!(
                    "group of order {n} is not recognized as dihedral; order-4 groups need a designated rotation subgroup"
                )));
            }
            let orders = g.element_orders();
            let (r, _) = find_dihedral_rotation(g, &orders).expect("identified as dihedral");
            g.generate(&[r])
        }
    };
    let reflections = (0..n).filter(|&x| !rotations.contains(x)).collect();
    Ok(DihedralSplit { rotations, reflections })
}

fn check_rotation_subgroup(g: &GroupTable, r: &Subgroup) -> Result<()> {
    let n = g.order();
    let bad = || Error::domain("designated subgroup is not a rotation subgroup of a dihedral group");
    if !g.is_subgroup(r) || 2 * r.order() != n || n < 4 {
        return Err(bad());
    }
    let orders = g.element_orders();
    let gen = r
        .elements()
        .iter()
        .copied()
        .find(|&x| orders[x] as usize == r.order())
        .ok_or_else(bad)?;
    let inv = g.inv(gen);
    for s in (0..n).filter(|&s| !r.contains(s)) {
        if orders[s] != 2 || g.conjugate(s, gen) != inv {
            return Err(bad());
        }
    }
    Ok(())
}

/// A basis of an abelian group table matching its invariant factors.
///
/// Returns `(factors, basis)` with `factors` ascending in divisibility order
/// and `basis[i]` of order `factors[i]`, such that
/// `(c_i) -> prod basis[i]^{c_i}` is an isomorphism from
/// `Z_{d_1} x ... x Z_{d_k}`.
pub fn abelian_basis(g: &GroupTable) -> Result<(Vec<u64>, Vec<usize>)> {
    if !g.is_abelian() {
        return Err(Error::domain("basis requested for a non-abelian group"));
    }
    let factors = abelian_invariants(g);
    let orders = g.element_orders();
    let mut desc = factors.clone();
    desc.reverse();
    let mut chosen = Vec::new();
    if !basis_search(g, &orders, &desc, &mut chosen, &g.trivial_subgroup()) {
        return Err(Error::Inconsistent("no basis found for abelian group".into()));
    }
    chosen.reverse();
    Ok((factors, chosen))
}

fn basis_search(g: &GroupTable, orders: &[u64], desc: &[u64], chosen: &mut Vec<usize>, span: &Subgroup) -> bool {
    let depth = chosen.len();
    if depth == desc.len() {
        return span.order() == g.order();
    }
    let d = desc[depth];
    for x in 0..g.order() {
        if orders[x] != d || span.contains(x) {
            continue;
        }
        chosen.push(x);
        let next = g.generate(chosen);
        if next.order() == span.order() * d as usize && basis_search(g, orders, desc, chosen, &next) {
            return true;
        }
        chosen.pop();
    }
    false
}

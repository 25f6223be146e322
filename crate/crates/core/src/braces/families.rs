use crate::arith::{self, is_prime};
use crate::braces::{Brace, FamilyParams, FamilyTag, MultRule};
use crate::error::{Error, Result};
use crate::groups::{AbelianGroup, Element};

/// `(-1)^e` applied to a residue mod `m`.
fn signed(e: u64, c: u64, m: u64) -> u64 {
    if e.is_multiple_of(2) {
        c % m
    } else {
        (m - c % m) % m
    }
}

/// Evaluates the product of a family brace on coordinate tuples.
///
/// Exponents of `-1` use the integer representative in `[0, modulus)` of the
/// coordinate they depend on.
pub(crate) fn evaluate(tag: FamilyTag, params: &FamilyParams, a: &AbelianGroup, x: &[u64], y: &[u64]) -> Element {
    let m = a.moduli();
    let coords = match tag {
        FamilyTag::Trivial | FamilyTag::Table => x.iter().zip(y).zip(m).map(|((u, v), m)| (u + v) % m).collect(),
        // (a, b)∘(c, d) = (a + g^b c, b + d)
        FamilyTag::Pq | FamilyTag::SemiP2q => {
            let g = params.g.expect("family carries g");
            let gb = arith::pow_mod(g, x[1], m[0]);
            vec![(x[0] + gb * y[0]) % m[0], (x[1] + y[1]) % m[1]]
        }
        // (a, b, c)∘(d, e, f) = (a + d + be, b + e, c + f)
        FamilyTag::Cyc4q | FamilyTag::NonCycP2q => vec![
            (x[0] + y[0] + x[1] * y[1]) % m[0],
            (x[1] + y[1]) % m[1],
            (x[2] + y[2]) % m[2],
        ],
        // (a, b)∘(c, d) = (a + c + pac, b + d), first factor mod p^2
        FamilyTag::CycP2q => {
            let p = params.p.expect("family carries p");
            vec![(x[0] + y[0] + p * x[0] % m[0] * y[0]) % m[0], (x[1] + y[1]) % m[1]]
        }
        // (a, b)∘(c, d) = (a + c, b + (-1)^b d), second factor mod 4
        FamilyTag::NonCyc4q => vec![(x[0] + y[0]) % m[0], (x[1] + signed(x[1], y[1], m[1])) % m[1]],
        // (a, b)∘(c, d) = (a + (-1)^b c, b + (-1)^b d)
        FamilyTag::Dih1 => vec![
            (x[0] + signed(x[1], y[0], m[0])) % m[0],
            (x[1] + signed(x[1], y[1], m[1])) % m[1],
        ],
        // (a, b)∘(c, d) = (a + (-1)^{b(b-1)/2} c, b + (-1)^b d)
        FamilyTag::Dih2 => {
            let e = if x[1] == 0 { 0 } else { x[1] * (x[1] - 1) / 2 };
            vec![
                (x[0] + signed(e, y[0], m[0])) % m[0],
                (x[1] + signed(x[1], y[1], m[1])) % m[1],
            ]
        }
        // (a, b, c)∘(d, e, f) = (a + d, b + e, c + (-1)^a f)
        FamilyTag::Dih3 => vec![
            (x[0] + y[0]) % m[0],
            (x[1] + y[1]) % m[1],
            (x[2] + signed(x[0], y[2], m[2])) % m[2],
        ],
    };
    Element(coords)
}

fn require_prime(name: &str, v: u64) -> Result<()> {
    if is_prime(v) {
        Ok(())
    } else {
        Err(Error::domain(format!("{name} = {v} must be prime")))
    }
}

fn require_odd_prime(name: &str, v: u64) -> Result<()> {
    require_prime(name, v)?;
    if v == 2 {
        Err(Error::domain(format!("{name} must be an odd prime")))
    } else {
        Ok(())
    }
}

fn require_distinct(p: u64, q: u64) -> Result<()> {
    if p == q {
        Err(Error::domain(format!(
            "p and q must be distinct primes, got p = q = {p}"
        )))
    } else {
        Ok(())
    }
}

fn require_congruence(p: u64, q: u64) -> Result<()> {
    if p % q != 1 {
        Err(Error::domain(format!("p ≡ 1 (mod q) required, got p = {p}, q = {q}")))
    } else {
        Ok(())
    }
}

/// `g` of multiplicative order `q` modulo `m`; the smallest one by default.
fn choose_g(g: Option<u64>, q: u64, m: u64) -> Result<u64> {
    match g {
        Some(g) => {
            if arith::multiplicative_order(g, m) == Some(q) {
                Ok(g % m)
            } else {
                Err(Error::domain(format!(
                    "g = {g} does not have multiplicative order {q} modulo {m}"
                )))
            }
        }
        None => {
            arith::smallest_of_order(q, m).ok_or_else(|| Error::domain(format!("no element of order {q} modulo {m}")))
        }
    }
}

fn family(moduli: Vec<u64>, tag: FamilyTag, p: Option<u64>, q: Option<u64>, g: Option<u64>) -> Brace {
    Brace::from_rule(
        AbelianGroup::new(moduli).expect("family moduli are at least 2"),
        MultRule::Family(tag, FamilyParams { p, q, g }),
    )
}

/// The trivial brace on `a`: `∘` equals `+`.
pub fn trivial_brace(a: &AbelianGroup) -> Brace {
    Brace::from_rule(a.clone(), MultRule::Family(FamilyTag::Trivial, FamilyParams::default()))
}

/// Non-trivial brace of size `pq` on `Z_p x Z_q`; multiplicative group
/// `Z_p x| Z_q`.
pub fn brace_pq(p: u64, q: u64, g: Option<u64>) -> Result<Brace> {
    require_prime("p", p)?;
    require_prime("q", q)?;
    require_distinct(p, q)?;
    require_congruence(p, q)?;
    let g = choose_g(g, q, p)?;
    Ok(family(vec![p, q], FamilyTag::Pq, Some(p), Some(q), Some(g)))
}

/// Brace on `Z_2 x Z_2 x Z_q` with cyclic multiplicative group of order `4q`.
pub fn brace_cyc_4q(q: u64) -> Result<Brace> {
    require_odd_prime("q", q)?;
    Ok(family(vec![2, 2, q], FamilyTag::Cyc4q, None, Some(q), None))
}

/// Brace on `Z_{p^2} x Z_q`, `p` odd, with cyclic multiplicative group.
pub fn brace_cyc_p2q(p: u64, q: u64) -> Result<Brace> {
    require_odd_prime("p", p)?;
    require_prime("q", q)?;
    require_distinct(p, q)?;
    Ok(family(vec![p * p, q], FamilyTag::CycP2q, Some(p), Some(q), None))
}

/// Brace on `Z_q x Z_4` with multiplicative group `Z_q x Z_2^2`.
pub fn brace_noncyc_4q(q: u64) -> Result<Brace> {
    require_odd_prime("q", q)?;
    Ok(family(vec![q, 4], FamilyTag::NonCyc4q, None, Some(q), None))
}

/// Brace on `Z_p x Z_p x Z_q`, `p` odd, with multiplicative group
/// `Z_p^2 x Z_q` (elementary abelian `p`-part).
pub fn brace_noncyc_p2q(p: u64, q: u64) -> Result<Brace> {
    require_odd_prime("p", p)?;
    require_prime("q", q)?;
    require_distinct(p, q)?;
    Ok(family(vec![p, p, q], FamilyTag::NonCycP2q, Some(p), Some(q), None))
}

/// Brace on `Z_{p^2} x Z_q` with multiplicative group `Z_{p^2} x| Z_q`,
/// where `g` has order `q` in the units mod `p^2`. For `q = 2` the
/// multiplicative group is dihedral of order `2p^2`.
pub fn brace_semi_p2q(p: u64, q: u64, g: Option<u64>) -> Result<Brace> {
    require_prime("p", p)?;
    require_prime("q", q)?;
    require_distinct(p, q)?;
    require_congruence(p, q)?;
    let g = choose_g(g, q, p * p)?;
    Ok(family(vec![p * p, q], FamilyTag::SemiP2q, Some(p), Some(q), Some(g)))
}

/// First brace on `Z_p x Z_4` with multiplicative group `D_{4p}`.
pub fn brace_dih1_4p(p: u64) -> Result<Brace> {
    require_odd_prime("p", p)?;
    Ok(family(vec![p, 4], FamilyTag::Dih1, Some(p), None, None))
}

/// Second brace on `Z_p x Z_4` with multiplicative group `D_{4p}`.
pub fn brace_dih2_4p(p: u64) -> Result<Brace> {
    require_odd_prime("p", p)?;
    Ok(family(vec![p, 4], FamilyTag::Dih2, Some(p), None, None))
}

/// Brace on `Z_2 x Z_2 x Z_p` with multiplicative group `D_{4p}`.
pub fn brace_dih3_4p(p: u64) -> Result<Brace> {
    require_odd_prime("p", p)?;
    Ok(family(vec![2, 2, p], FamilyTag::Dih3, Some(p), None, None))
}

/// Rebuilds a family brace from its tag and parameters. The trivial brace
/// needs its additive group.
pub fn family_brace(tag: FamilyTag, params: FamilyParams, additive: Option<&AbelianGroup>) -> Result<Brace> {
    let need =
        |v: Option<u64>, name: &str| v.ok_or_else(|| Error::Usage(format!("family {tag} needs parameter {name}")));
    let b = match tag {
        FamilyTag::Trivial => {
            trivial_brace(additive.ok_or_else(|| Error::Usage("trivial brace needs its additive group".into()))?)
        }
        FamilyTag::Pq => brace_pq(need(params.p, "p")?, need(params.q, "q")?, params.g)?,
        FamilyTag::Cyc4q => brace_cyc_4q(need(params.q, "q")?)?,
        FamilyTag::CycP2q => brace_cyc_p2q(need(params.p, "p")?, need(params.q, "q")?)?,
        FamilyTag::NonCyc4q => brace_noncyc_4q(need(params.q, "q")?)?,
        FamilyTag::NonCycP2q => brace_noncyc_p2q(need(params.p, "p")?, need(params.q, "q")?)?,
        FamilyTag::SemiP2q => brace_semi_p2q(need(params.p, "p")?, need(params.q, "q")?, params.g)?,
        FamilyTag::Dih1 => brace_dih1_4p(need(params.p, "p")?)?,
        FamilyTag::Dih2 => brace_dih2_4p(need(params.p, "p")?)?,
        FamilyTag::Dih3 => brace_dih3_4p(need(params.p, "p")?)?,
        FamilyTag::Table => return Err(Error::Usage("table braces are not built from parameters".into())),
    };
    if let Some(a) = additive {
        if a != b.additive() {
            return Err(Error::Validation(format!(
                "family {tag} lives on {}, not on {a}",
                b.additive()
            )));
        }
    }
    Ok(b)
}

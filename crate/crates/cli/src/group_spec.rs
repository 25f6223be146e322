//! Short group names accepted on the command line.

use ybe_core::arith::{is_prime, smallest_of_order};
use ybe_core::groups::GroupTable;

/// Parses `Z12`, `D12` (dihedral of order 12), `Z3xZ2xZ2` and `Z7:Z3`
/// (semidirect product with the smallest unit of order 3 acting).
pub fn parse_group(spec: &str) -> Result<GroupTable, String> {
    let number = |s: &str, prefix: char| -> Result<usize, String> {
        s.strip_prefix(prefix)
            .and_then(|n| n.parse().ok())
            .filter(|&n| n >= 1)
            .ok_or_else(|| format!("cannot read `{s}` in group `{spec}`; expected {prefix}<n>"))
    };
    if let Some((m, q)) = spec.split_once(':') {
        let (m, q) = (number(m, 'Z')?, number(q, 'Z')?);
        if !is_prime(q as u64) {
            return Err(format!("the acting group in `{spec}` must have prime order"));
        }
        let k = smallest_of_order(q as u64, m as u64)
            .ok_or_else(|| format!("no unit of order {q} modulo {m}, so `{spec}` has no faithful action"))?;
        return Ok(GroupTable::semidirect(m, q, k));
    }
    if spec.starts_with('D') {
        let n = number(spec, 'D')?;
        if n % 2 != 0 || n < 4 {
            return Err(format!("dihedral groups have even order at least 4, got `{spec}`"));
        }
        return Ok(GroupTable::dihedral(n / 2));
    }
    let mut g = GroupTable::cyclic(1);
    for part in spec.split('x') {
        g = g.direct_product(&GroupTable::cyclic(number(part, 'Z')?));
    }
    Ok(g)
}

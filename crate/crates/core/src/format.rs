//! Line-oriented text format for solutions, braces and censuses.
//!
//! Every record starts with a header `ybe1 <kind>`:
//!
//! ```text
//! ybe1 solution
//! n 2
//! sigma 0: 1 0
//! sigma 1: 1 0
//! ```
//!
//! ```text
//! ybe1 brace
//! additive 7 3
//! family pq p=7 q=3 g=2
//! ```
//!
//! A table brace replaces the `family` line by `mult` and `N` lines of `N`
//! products in mixed-radix encoding. Censuses embed complete records:
//!
//! ```text
//! ybe1 solution-census
//! n 4
//! indecomposable 0
//! count 23
//! entry 0
//! ybe1 solution
//! ...
//! ```
//!
//! A brace census has `order <N>` and `target <group description>` (or
//! `target any`) in place of `n` and `indecomposable`. Lines end with LF and
//! the text ends with a newline. On load `τ` is recomputed from `σ` and the
//! solution and brace axioms are checked.

use std::fmt::Write as _;

use crate::bounds::Bounds;
use crate::braces::{brace_from_table, family_brace, Brace, FamilyParams, FamilyTag};
use crate::enumerate::{BraceCensus, SolutionCensus};
use crate::error::{Error, Result};
use crate::groups::{AbelianGroup, GroupDescriptor};
use crate::solutions::Solution;

const VERSION: &str = "ybe1";

fn join<T: ToString>(xs: impl IntoIterator<Item = T>) -> String {
    xs.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

pub fn write_solution(s: &Solution) -> String {
    let mut out = format!("{VERSION} solution\n");
    writeln!(out, "n {}", s.n()).expect("writing to a string");
    for x in 0..s.n() {
        writeln!(out, "sigma {x}: {}", join(s.sigma_row(x))).expect("writing to a string");
    }
    out
}

pub fn write_brace(b: &Brace) -> String {
    let mut out = format!("{VERSION} brace\n");
    writeln!(out, "additive {}", join(b.additive().moduli())).expect("writing to a string");
    match b.family_tag() {
        FamilyTag::Table => {
            out.push_str("mult\n");
            let n = b.order();
            for row in b.mult_table().chunks(n) {
                writeln!(out, "{}", join(row)).expect("writing to a string");
            }
        }
        tag => {
            let params = b.params();
            out.push_str("family ");
            out.push_str(tag.name());
            for (name, v) in [("p", params.p), ("q", params.q), ("g", params.g)] {
                if let Some(v) = v {
                    write!(out, " {name}={v}").expect("writing to a string");
                }
            }
            out.push('\n');
        }
    }
    out
}

pub fn write_solution_census(c: &SolutionCensus) -> String {
    let mut out = format!("{VERSION} solution-census\n");
    writeln!(out, "n {}", c.n).expect("writing to a string");
    writeln!(out, "indecomposable {}", u8::from(c.indecomposable_only)).expect("writing to a string");
    writeln!(out, "count {}", c.solutions.len()).expect("writing to a string");
    for (i, s) in c.solutions.iter().enumerate() {
        writeln!(out, "entry {i}").expect("writing to a string");
        out.push_str(&write_solution(s));
    }
    out
}

pub fn write_brace_census(c: &BraceCensus) -> String {
    let mut out = format!("{VERSION} brace-census\n");
    writeln!(out, "order {}", c.order).expect("writing to a string");
    match &c.target {
        Some(d) => writeln!(out, "target {d}"),
        None => writeln!(out, "target any"),
    }
    .expect("writing to a string");
    writeln!(out, "count {}", c.braces.len()).expect("writing to a string");
    for (i, b) in c.braces.iter().enumerate() {
        writeln!(out, "entry {i}").expect("writing to a string");
        out.push_str(&write_brace(b));
    }
    out
}

/// Cursor over the lines of a record, numbered from 1.
struct Lines<'a> {
    lines: Vec<&'a str>,
    pos: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        let mut lines: Vec<&str> = text.split('\n').collect();
        if lines.last() == Some(&"") {
            lines.pop();
        }
        Lines { lines, pos: 0 }
    }

    /// Number of the line last returned by `next`.
    fn line(&self) -> usize {
        self.pos
    }

    fn next(&mut self, what: &str) -> Result<&'a str> {
        let Some(&l) = self.lines.get(self.pos) else {
            return Err(Error::parse(
                self.pos + 1,
                format!("unexpected end of input, expected {what}"),
            ));
        };
        self.pos += 1;
        Ok(l)
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::parse(self.line(), msg)
    }

    /// The rest of a line `<key> <rest>`.
    fn keyed(&mut self, key: &str) -> Result<&'a str> {
        let l = self.next(&format!("`{key}`"))?;
        match l.split_once(' ') {
            Some((k, rest)) if k == key => Ok(rest),
            _ if l == key => Ok(""),
            _ => Err(self.err(format!("expected `{key} ...`, found `{l}`"))),
        }
    }

    fn number<T: std::str::FromStr>(&self, s: &str) -> Result<T> {
        s.parse().map_err(|_| self.err(format!("`{s}` is not a valid number")))
    }

    fn numbers<T: std::str::FromStr>(&self, s: &str) -> Result<Vec<T>> {
        s.split(' ').filter(|t| !t.is_empty()).map(|t| self.number(t)).collect()
    }

    fn header(&mut self, kind: &str) -> Result<()> {
        let l = self.next("a header")?;
        let expected = format!("{VERSION} {kind}");
        if l != expected {
            return Err(self.err(format!("expected header `{expected}`, found `{l}`")));
        }
        Ok(())
    }

    fn finish(&self) -> Result<()> {
        match self.lines.get(self.pos) {
            None => Ok(()),
            Some(l) => Err(Error::parse(self.pos + 1, format!("trailing content `{l}`"))),
        }
    }
}

pub fn parse_solution(text: &str) -> Result<Solution> {
    let mut lines = Lines::new(text);
    let s = read_solution(&mut lines)?;
    lines.finish()?;
    Ok(s)
}

fn read_solution(lines: &mut Lines<'_>) -> Result<Solution> {
    lines.header("solution")?;
    let start = lines.line();
    let n: usize = {
        let v = lines.keyed("n")?;
        lines.number(v)?
    };
    let mut rows = Vec::with_capacity(n);
    for x in 0..n {
        let rest = lines.keyed("sigma")?;
        let (idx, images) = rest
            .split_once(':')
            .ok_or_else(|| lines.err("expected `sigma <x>: ...`"))?;
        let idx: usize = lines.number(idx)?;
        if idx != x {
            return Err(lines.err(format!("expected row {x}, found row {idx}")));
        }
        let row: Vec<usize> = lines.numbers(images)?;
        if row.len() != n {
            return Err(lines.err(format!("row {x} has {} entries, expected {n}", row.len())));
        }
        if let Some(&v) = row.iter().find(|&&v| v >= n) {
            return Err(lines.err(format!("image {v} outside 0..{n}")));
        }
        rows.push(row);
    }
    let s = Solution::from_sigma(rows)?;
    if let Some(v) = s.validate().violation {
        return Err(Error::Validation(format!(
            "record starting on line {start} is not a solution: {v}"
        )));
    }
    Ok(s)
}

pub fn parse_brace(text: &str, bounds: &Bounds) -> Result<Brace> {
    let mut lines = Lines::new(text);
    let b = read_brace(&mut lines, bounds)?;
    lines.finish()?;
    Ok(b)
}

fn read_brace(lines: &mut Lines<'_>, bounds: &Bounds) -> Result<Brace> {
    lines.header("brace")?;
    let moduli = {
        let v = lines.keyed("additive")?;
        lines.numbers(v)?
    };
    let additive = AbelianGroup::new(moduli).map_err(|e| lines.err(e.to_string()))?;
    let l = lines.next("`family` or `mult`")?;
    if l == "mult" {
        let n = additive.order();
        let mut table = Vec::with_capacity(n * n);
        for _ in 0..n {
            let row: Vec<u32> = {
                let l = lines.next("a product row")?;
                lines.numbers(l)?
            };
            if row.len() != n {
                return Err(lines.err(format!("product row has {} entries, expected {n}", row.len())));
            }
            if let Some(&v) = row.iter().find(|&&v| v as usize >= n) {
                return Err(lines.err(format!("product {v} outside 0..{n}")));
            }
            table.extend(row);
        }
        return brace_from_table(additive, table, bounds);
    }
    let rest = l
        .strip_prefix("family ")
        .ok_or_else(|| lines.err(format!("expected `family` or `mult`, found `{l}`")))?;
    let mut words = rest.split(' ');
    let tag = words.next().unwrap_or_default();
    let tag = match FamilyTag::parse(tag) {
        Some(FamilyTag::Table) | None => return Err(lines.err(format!("unknown family `{tag}`"))),
        Some(t) => t,
    };
    let mut params = FamilyParams::default();
    for w in words {
        let (k, v) = w
            .split_once('=')
            .ok_or_else(|| lines.err(format!("expected `name=value`, found `{w}`")))?;
        let slot = match k {
            "p" => &mut params.p,
            "q" => &mut params.q,
            "g" => &mut params.g,
            _ => return Err(lines.err(format!("unknown parameter `{k}`"))),
        };
        if slot.is_some() {
            return Err(lines.err(format!("parameter `{k}` given twice")));
        }
        *slot = Some(lines.number(v)?);
    }
    family_brace(tag, params, Some(&additive))
}

pub fn parse_solution_census(text: &str) -> Result<SolutionCensus> {
    let mut lines = Lines::new(text);
    lines.header("solution-census")?;
    let n: usize = {
        let v = lines.keyed("n")?;
        lines.number(v)?
    };
    let indecomposable_only = match lines.keyed("indecomposable")? {
        "0" => false,
        "1" => true,
        v => return Err(lines.err(format!("expected 0 or 1, found `{v}`"))),
    };
    let solutions = read_entries(&mut lines, |l| {
        let s = read_solution(l)?;
        if s.n() != n {
            return Err(l.err(format!("entry has size {}, census is for size {n}", s.n())));
        }
        Ok(s)
    })?;
    lines.finish()?;
    Ok(SolutionCensus {
        n,
        indecomposable_only,
        solutions,
    })
}

pub fn parse_brace_census(text: &str, bounds: &Bounds) -> Result<BraceCensus> {
    let mut lines = Lines::new(text);
    lines.header("brace-census")?;
    let order: usize = {
        let v = lines.keyed("order")?;
        lines.number(v)?
    };
    let target = match lines.keyed("target")? {
        "any" => None,
        d => Some(d.parse::<GroupDescriptor>().map_err(|e| lines.err(e.to_string()))?),
    };
    let braces = read_entries(&mut lines, |l| {
        let b = read_brace(l, bounds)?;
        if b.order() != order {
            return Err(l.err(format!("entry has order {}, census is for order {order}", b.order())));
        }
        Ok(b)
    })?;
    lines.finish()?;
    Ok(BraceCensus { order, target, braces })
}

fn read_entries<'a, T>(lines: &mut Lines<'a>, mut read: impl FnMut(&mut Lines<'a>) -> Result<T>) -> Result<Vec<T>> {
    let count: usize = {
        let v = lines.keyed("count")?;
        lines.number(v)?
    };
    let mut out = Vec::with_capacity(count.min(1 << 16));
    for i in 0..count {
        let v = lines.keyed("entry")?;
        let idx: usize = lines.number(v)?;
        if idx != i {
            return Err(lines.err(format!("expected entry {i}, found entry {idx}")));
        }
        out.push(read(lines)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests;

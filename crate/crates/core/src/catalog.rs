//! Named groups and the textual group-spec format.
//!
//! A group spec is either `catalog:<name>[:params]` or
//! `perms:<generators>` where generators are comma-separated products of
//! cycles, e.g. `perms:(0 1 2 3),(1 3)`.
//!
//! Catalog names: `cyclic:k`, `elem_abelian_2:k`, `dihedral:2k` (the
//! parameter is the group order), `quaternion8`, `sym:n`, `alt:n` (n ≤ 5),
//! `Z4xZ2`, `quat_cover`, and `direct_product:A*B` where `A` and `B` are
//! catalog specs without the `catalog:` prefix.

use crate::error::{Error, Result};
use crate::group::Group;
use crate::perm::Perm;

const MAX_ELEM_ABELIAN_RANK: usize = 10;
const MAX_SYM_DEGREE: usize = 5;

pub fn cyclic(k: usize) -> Result<Group> {
    if k == 0 {
        return Err(Error::OutOfRange("cyclic group of order 0".into()));
    }
    let table = (0..k * k).map(|i| (i / k + i % k) % k).collect();
    let labels = (0..k).map(|i| format!("g^{i}")).collect();
    Group::from_table(k, table, Some(labels))
}

pub fn elem_abelian_2(rank: usize) -> Result<Group> {
    if rank > MAX_ELEM_ABELIAN_RANK {
        return Err(Error::OutOfRange(format!(
            "elementary abelian rank {rank} > {MAX_ELEM_ABELIAN_RANK}"
        )));
    }
    let n = 1usize << rank;
    let table = (0..n * n).map(|i| (i / n) ^ (i % n)).collect();
    let labels = (0..n).map(|i| format!("{i:0width$b}", width = rank.max(1))).collect();
    Group::from_table(n, table, Some(labels))
}

/// Dihedral group of the given order `2k`; element `r^i s^j` at `i + k·j`.
pub fn dihedral(order: usize) -> Result<Group> {
    if order < 2 || order % 2 == 1 {
        return Err(Error::OutOfRange(format!("dihedral order {order} must be even and ≥ 2")));
    }
    let k = order / 2;
    let mut table = Vec::with_capacity(order * order);
    for a in 0..order {
        let (i, j) = (a % k, a / k);
        for b in 0..order {
            let (i2, j2) = (b % k, b / k);
            let rot = if j == 0 { i + i2 } else { i + k - i2 };
            table.push(rot % k + k * ((j + j2) % 2));
        }
    }
    let labels = (0..order)
        .map(|a| if a / k == 0 { format!("r^{}", a % k) } else { format!("r^{} s", a % k) })
        .collect();
    Group::from_table(order, table, Some(labels))
}

/// `⟨x, y | x⁴ = e, y² = x², y x y⁻¹ = x⁻¹⟩`; `x^a y^b` at `a + 4b`.
pub fn quaternion8() -> Result<Group> {
    let mut table = Vec::with_capacity(64);
    for e1 in 0..8 {
        let (a, b) = (e1 % 4, e1 / 4);
        for e2 in 0..8 {
            let (c, d) = (e2 % 4, e2 / 4);
            let mut x = if b == 0 { a + c } else { a + 4 - c };
            let mut y = b + d;
            if y == 2 {
                y = 0;
                x += 2;
            }
            table.push(x % 4 + 4 * y);
        }
    }
    let labels = (0..8)
        .map(|e| match e / 4 {
            0 => format!("x^{}", e % 4),
            _ => format!("x^{} y", e % 4),
        })
        .collect();
    Group::from_table(8, table, Some(labels))
}

/// `⟨u1, u2 | u1⁴ = u2⁴ = e, u2 u1 u2⁻¹ = u1⁻¹⟩` on pairs `(a, b) ∈ Z/4 × Z/4`
/// with `(a,b)(c,d) = (a + (−1)^b c, b + d)`; `u1^a u2^b` at `4a + b`.
pub fn quat_cover() -> Result<Group> {
    let mut table = Vec::with_capacity(256);
    for e1 in 0..16 {
        let (a, b) = (e1 / 4, e1 % 4);
        for e2 in 0..16 {
            let (c, d) = (e2 / 4, e2 % 4);
            let x = (if b % 2 == 0 { a + c } else { a + 4 - c }) % 4;
            table.push(4 * x + (b + d) % 4);
        }
    }
    let labels = (0..16).map(|e| format!("u1^{} u2^{}", e / 4, e % 4)).collect();
    Group::from_table(16, table, Some(labels))
}

/// The index of `u1^a u2^b` in [`quat_cover`].
pub fn quat_cover_element(a: usize, b: usize) -> usize {
    4 * (a % 4) + b % 4
}

pub fn sym(n: usize) -> Result<Group> {
    if n == 0 || n > MAX_SYM_DEGREE {
        return Err(Error::OutOfRange(format!("symmetric degree {n} not in 1..={MAX_SYM_DEGREE}")));
    }
    let cycle: Vec<usize> = (0..n).collect();
    let mut gens = vec![Perm::from_cycles(n, &[cycle])?];
    if n >= 2 {
        gens.push(Perm::transposition(n, 0, 1)?);
    }
    Group::closure(&gens)
}

pub fn alt(n: usize) -> Result<Group> {
    if n == 0 || n > MAX_SYM_DEGREE {
        return Err(Error::OutOfRange(format!("alternating degree {n} not in 1..={MAX_SYM_DEGREE}")));
    }
    let mut gens = vec![Perm::identity(n)];
    for k in 2..n {
        gens.push(Perm::from_cycles(n, &[vec![0, 1, k]])?);
    }
    Group::closure(&gens)
}

pub fn z4_x_z2() -> Result<Group> {
    Ok(cyclic(4)?.direct_product(&cyclic(2)?))
}

/// Builds a catalog group from its name and parameter string.
pub fn catalog(name: &str, params: Option<&str>) -> Result<Group> {
    let int_param = || -> Result<usize> {
        let p = params.ok_or_else(|| Error::Parse(format!("`{name}` needs a parameter")))?;
        p.trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad parameter `{p}` for `{name}`")))
    };
    match name {
        "cyclic" => cyclic(int_param()?),
        "elem_abelian_2" => elem_abelian_2(int_param()?),
        "dihedral" => dihedral(int_param()?),
        "quaternion8" => quaternion8(),
        "sym" => sym(int_param()?),
        "alt" => alt(int_param()?),
        "Z4xZ2" => z4_x_z2(),
        "quat_cover" => quat_cover(),
        "direct_product" => {
            let p = params.ok_or_else(|| Error::Parse("`direct_product` needs `A*B`".into()))?;
            let (a, b) = p
                .split_once('*')
                .ok_or_else(|| Error::Parse(format!("bad direct product `{p}`")))?;
            Ok(catalog_spec(a)?.direct_product(&catalog_spec(b)?))
        }
        other => Err(Error::UnknownGroup(other.to_string())),
    }
}

/// Parses `name[:params]` (the part after `catalog:`).
fn catalog_spec(s: &str) -> Result<Group> {
    let s = s.trim();
    match s.split_once(':') {
        Some((name, params)) => catalog(name, Some(params)),
        None => catalog(s, None),
    }
}

/// Parses a full group spec, `catalog:...` or `perms:...`.
pub fn parse_group_spec(spec: &str) -> Result<Group> {
    let spec = spec.trim();
    if let Some(rest) = spec.strip_prefix("catalog:") {
        catalog_spec(rest)
    } else if let Some(rest) = spec.strip_prefix("perms:") {
        let gens = split_generators(rest);
        let parsed: Vec<Vec<Vec<usize>>> = gens
            .iter()
            .map(|g| Perm::parse_cycles(g))
            .collect::<Result<_>>()?;
        let degree = parsed
            .iter()
            .flatten()
            .flatten()
            .map(|&x| x + 1)
            .max()
            .unwrap_or(1);
        let perms = parsed
            .iter()
            .map(|cycles| Perm::from_cycles(degree, cycles))
            .collect::<Result<Vec<_>>>()?;
        if perms.is_empty() {
            return Ok(Group::trivial());
        }
        Group::closure(&perms)
    } else {
        Err(Error::Parse(format!(
            "group spec `{spec}` must start with `catalog:` or `perms:`"
        )))
    }
}

/// Splits on commas that are outside parentheses.
fn split_generators(s: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for ch in s.chars() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(std::mem::take(&mut cur));
                continue;
            }
            _ => {}
        }
        cur.push(ch);
    }
    out.push(cur);
    out.into_iter().filter(|g| !g.trim().is_empty()).collect()
}

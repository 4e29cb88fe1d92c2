//! Small partitions that a transitive subgroup can cover, as they arise when
//! reducing the covering problem to sum-free and cube-free sets.

use serde::Serialize;

use crate::arith::{gcd, tau};
use crate::coverage::{covers_imprimitive_exact, primitive_catalog, Catalog, Group};
use crate::cycle_type::CycleType;
use crate::error::{domain, Result};

/// A covered partition with the block-system shapes that cover it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassifiedItem {
    pub x: u32,
    pub h: i32,
    pub cycle_type: CycleType,
    /// Matching conditions; `"catalog"` marks a primitive catalog entry.
    pub tags: Vec<String>,
    /// `x = 1`, outside the range the counting argument needs.
    pub boundary: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub kind: &'static str,
    pub n: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub group: Option<Group>,
    pub items: Vec<ClassifiedItem>,
    /// Items with at least one imprimitive tag.
    pub imprimitive_count: u64,
    /// Items matching a catalog entry.
    pub catalog_count: u64,
    pub count: u64,
    /// Divisor-count bound on the number of imprimitive solutions.
    pub ceiling: u64,
    /// The catalog is complete only above degree 36.
    pub catalog_valid: bool,
}

/// Whether the cells of `cells` (indices into `parts`) satisfy the block
/// criterion: with `b` the gcd of the cell sums, each cell sum over `b`
/// divides every part in the cell.
fn cells_fit(parts: &[u32], cells: &[&[usize]]) -> bool {
    let sums: Vec<u64> = cells
        .iter()
        .map(|c| c.iter().map(|&i| u64::from(parts[i])).sum())
        .collect();
    let b = sums.iter().fold(0, |g, &s| gcd(g, s));
    if b <= 1 {
        return false;
    }
    cells
        .iter()
        .zip(&sums)
        .all(|(c, &s)| c.iter().all(|&i| u64::from(parts[i]) % (s / b) == 0))
}

/// Triples `(x, x + h, n - 2x - h)` for `h` in {1, 2, 4}, `gcd(x, h, n) = 1`
/// and `2 < x`, `x + h < n/2 - 2`, covered by an imprimitive class or a
/// catalog entry.
///
/// Tags: `"1"` for the cell `{x, x+h}`, `"2"` for `{x, n-2x-h}`, `"3"` for
/// `{x+h, n-2x-h}`.
pub fn classify_restricted_triples(n: u32) -> Result<ClassificationReport> {
    if n < 7 {
        return Err(domain(format!("restricted triples need n >= 7, got {n}")));
    }
    let catalog = primitive_catalog(n);
    let mut items = Vec::new();
    for h in [1u32, 2, 4] {
        for x in 3..n {
            // x + h < n/2 - 2, i.e. 2(x + h + 2) < n
            if 2 * (x + h + 2) >= n {
                break;
            }
            if gcd(gcd(x.into(), h.into()), n.into()) != 1 {
                continue;
            }
            let parts = [x, x + h, n - 2 * x - h];
            let mut tags: Vec<String> = Vec::new();
            for (tag, pair, single) in [("1", [0, 1], 2), ("2", [0, 2], 1), ("3", [1, 2], 0)] {
                if cells_fit(&parts, &[&pair, &[single]]) {
                    tags.push(tag.to_string());
                }
            }
            push_item(&mut items, &catalog, x, h as i32, &parts, tags)?;
        }
    }
    let nn = u64::from(n);
    let ceiling = [1u64, 2, 4]
        .iter()
        .map(|&h| 2 * tau(nn) * tau(h) + tau(nn) * tau(nn - h) + tau(nn) * tau(nn + h))
        .sum();
    Ok(report(
        "restricted-triples",
        n,
        None,
        items,
        ceiling,
        &catalog,
    ))
}

/// Partitions `(x, x, x + h, n - 3x - h)` for `h = ±1` with `gcd(n, x+1, 2) = 1`,
/// covered by an imprimitive class or a catalog entry. Such partitions are
/// odd permutations for odd `n` and even ones for even `n`, so the group must
/// be `S` for odd `n` and `A` for even `n`.
///
/// Tags name the block-system shape: `a1`/`a2`/`a3` for a cell of three with
/// the singleton `n-3x-h`, `x+h` or `x`; `b` for one pair and two singletons;
/// `c1` for the pairs `{x,x},{x+h,n-3x-h}` and `c2` for `{x,x+h},{x,n-3x-h}`.
pub fn classify_degenerate_cubes(n: u32, group: Group) -> Result<ClassificationReport> {
    if n < 9 {
        return Err(domain(format!("degenerate cubes need n >= 9, got {n}")));
    }
    let expected = if n % 2 == 1 {
        Group::Symmetric
    } else {
        Group::Alternating
    };
    if group != expected {
        return Err(domain(format!(
            "4-cycle types at n = {n} lie in {expected}_n only; got group {group}"
        )));
    }
    let catalog = primitive_catalog(n);
    let mut items = Vec::new();
    // Positions: 0 and 1 hold x, 2 holds x + h, 3 holds n - 3x - h.
    let shapes: [(&str, &[&[usize]]); 13] = [
        ("a1", &[&[0, 1, 2], &[3]]),
        ("a2", &[&[0, 1, 3], &[2]]),
        ("a3", &[&[1, 2, 3], &[0]]),
        ("a3", &[&[0, 2, 3], &[1]]),
        ("b", &[&[0, 1], &[2], &[3]]),
        ("b", &[&[0, 2], &[1], &[3]]),
        ("b", &[&[0, 3], &[1], &[2]]),
        ("b", &[&[1, 2], &[0], &[3]]),
        ("b", &[&[1, 3], &[0], &[2]]),
        ("b", &[&[2, 3], &[0], &[1]]),
        ("c1", &[&[0, 1], &[2, 3]]),
        ("c2", &[&[0, 2], &[1, 3]]),
        ("c2", &[&[0, 3], &[1, 2]]),
    ];
    for h in [1i32, -1] {
        for x in 1..n {
            let xh = x as i64 + h as i64;
            let rest = n as i64 - 3 * x as i64 - h as i64;
            if rest < 1 {
                break;
            }
            if xh < 1 || gcd(gcd(n.into(), u64::from(x) + 1), 2) != 1 {
                continue;
            }
            let parts = [x, x, xh as u32, rest as u32];
            let mut tags: Vec<String> = Vec::new();
            for (tag, cells) in shapes {
                if !tags.iter().any(|t| t == tag) && cells_fit(&parts, cells) {
                    tags.push(tag.to_string());
                }
            }
            push_item(&mut items, &catalog, x, h, &parts, tags)?;
        }
    }
    let nn = u64::from(n);
    let ceiling = [1i64, -1]
        .iter()
        .map(|&h| {
            let t = |v: i64| tau(v as u64);
            let ni = nn as i64;
            2 * tau(nn) + tau(nn) * t(ni - h) + 3 * tau(nn) * t(ni + 2 * h)
        })
        .sum();
    Ok(report(
        "degenerate-cubes",
        n,
        Some(group),
        items,
        ceiling,
        &catalog,
    ))
}

fn push_item(
    items: &mut Vec<ClassifiedItem>,
    catalog: &Catalog,
    x: u32,
    h: i32,
    parts: &[u32],
    mut tags: Vec<String>,
) -> Result<()> {
    let t = CycleType::new(parts.to_vec())?;
    if catalog.contains_type(&t) {
        tags.push("catalog".to_string());
    }
    if !tags.is_empty() {
        items.push(ClassifiedItem {
            x,
            h,
            cycle_type: t,
            tags,
            boundary: x == 1,
        });
    }
    Ok(())
}

fn report(
    kind: &'static str,
    n: u32,
    group: Option<Group>,
    items: Vec<ClassifiedItem>,
    ceiling: u64,
    catalog: &Catalog,
) -> ClassificationReport {
    let imprimitive_count = items
        .iter()
        .filter(|i| i.tags.iter().any(|t| t != "catalog"))
        .count() as u64;
    let catalog_count = items
        .iter()
        .filter(|i| i.tags.iter().any(|t| t == "catalog"))
        .count() as u64;
    ClassificationReport {
        kind,
        n,
        group,
        count: items.len() as u64,
        items,
        imprimitive_count,
        catalog_count,
        ceiling,
        catalog_valid: catalog.valid,
    }
}

/// Re-checks an item against the exact coverage predicates.
pub fn item_is_covered(item: &ClassifiedItem) -> Result<bool> {
    let t = &item.cycle_type;
    let n = t.n();
    for b in crate::arith::divisors(n.into()) {
        let b = b as u32;
        if b > 1 && b < n && covers_imprimitive_exact(b, t)? {
            return Ok(true);
        }
    }
    Ok(primitive_catalog(n).contains_type(t))
}

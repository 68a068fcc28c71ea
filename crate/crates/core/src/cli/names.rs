//! Command-line group names.
//!
//! | accepted             | meaning                         |
//! |----------------------|---------------------------------|
//! | `A3`, `e8`, …        | Cartan label                    |
//! | `SU(n)`              | `A_{n-1}`                       |
//! | `SO(2k+1)`, `Spin(2k+1)` | `B_k`                       |
//! | `SO(2k)`, `Spin(2k)` | `D_k`, `k >= 3`                 |
//! | `Sp(n)`              | `C_n`                           |
//! | `U(n)`               | `A_{n-1}` plus one circle       |
//!
//! A subgroup may be a product of these joined by `+`, `x` or `×`, with
//! `T<k>` for `k` circles.

use crate::rootsys::{Family, GroupId};

/// Simple factors plus circles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupName {
    pub factors: Vec<GroupId>,
    pub torus: usize,
}

impl GroupName {
    pub fn simple(&self) -> Option<GroupId> {
        match (self.factors.as_slice(), self.torus) {
            ([id], 0) => Some(*id),
            _ => None,
        }
    }
}

fn classical(head: &str, n: usize) -> Option<GroupName> {
    let id = |f, r| GroupId::new(f, r).ok();
    let one = |g: Option<GroupId>, torus| {
        g.map(|g| GroupName {
            factors: vec![g],
            torus,
        })
    };
    match head {
        "su" if n >= 2 => one(id(Family::A, n - 1), 0),
        "u" if n == 1 => Some(GroupName {
            factors: vec![],
            torus: 1,
        }),
        "u" if n >= 2 => one(id(Family::A, n - 1), 1),
        "sp" => one(id(Family::C, n), 0),
        "so" | "spin" if n >= 3 && n % 2 == 1 => one(id(Family::B, n / 2), 0),
        "so" | "spin" if n >= 6 => one(id(Family::D, n / 2), 0),
        _ => None,
    }
}

fn parse_factor(s: &str) -> Option<GroupName> {
    let s = s.trim();
    if let Some(open) = s.find('(') {
        let inner = s.strip_suffix(')')?.get(open + 1..)?;
        let n: usize = inner.trim().parse().ok()?;
        return classical(&s[..open].trim().to_ascii_lowercase(), n);
    }
    if let Some(k) = s.strip_prefix(['T', 't']) {
        return Some(GroupName {
            factors: vec![],
            torus: k.parse().ok()?,
        });
    }
    let id: GroupId = s.parse().ok()?;
    Some(GroupName {
        factors: vec![id],
        torus: 0,
    })
}

/// Parses a group or a product of groups.
pub fn parse_group(s: &str) -> Result<GroupName, String> {
    let mut out = GroupName {
        factors: vec![],
        torus: 0,
    };
    let parts: Vec<&str> = s.split(['+', '×', '·']).flat_map(split_x).collect();
    for part in parts {
        let g = parse_factor(part).ok_or_else(|| format!("unrecognized group {part:?} in {s:?}"))?;
        out.factors.extend(g.factors);
        out.torus += g.torus;
    }
    Ok(out)
}

/// Splits on `x` used as a product sign (`C1xC2`), leaving labels intact.
fn split_x(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut start = 0;
    let b = s.as_bytes();
    for i in 0..b.len() {
        let prev_digit_or_paren = i > 0 && (b[i - 1].is_ascii_digit() || b[i - 1] == b')');
        if (b[i] == b'x' || b[i] == b'X') && prev_digit_or_paren {
            out.push(&s[start..i]);
            start = i + 1;
        }
    }
    out.push(&s[start..]);
    out
}

pub fn parse_simple(s: &str) -> Result<GroupId, String> {
    let g = parse_group(s)?;
    g.simple()
        .ok_or_else(|| format!("{s:?} is not a compact simple group"))
}

/// Label under the identifications `B1 = C1 = A1`, `B2 = C2`, `D3 = A3`,
/// matching the naming of equal-rank subgroups.
pub fn canonical_label(id: GroupId) -> String {
    match (id.family(), id.rank()) {
        (Family::B | Family::C, 1) => "A1".into(),
        (Family::B, 2) => "C2".into(),
        (Family::D, 3) => "A3".into(),
        _ => id.to_string(),
    }
}

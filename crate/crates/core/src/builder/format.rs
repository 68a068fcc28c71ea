//! Plain-text structure-constant files.
//!
//! ```text
//! # lie-structure v1 <name> dim=<d>
//! i j k num den
//! ```
//!
//! One line per nonzero `c_ij^k = num/den` with `i < j`, sorted by `(i, j, k)`,
//! `den > 0` and `num/den` in lowest terms. Basis labels are not stored; an
//! imported table is labelled `e_0, e_1, …`.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::linalg::Rational;

use super::table::{verify_jacobi_with, JacobiReport, StructureTable};
use super::BuildError;

pub const HEADER_TAG: &str = "# lie-structure v1";

pub fn export(t: &StructureTable) -> String {
    let name: String = t.name.split_whitespace().collect::<Vec<_>>().join("_");
    let mut out = format!("{HEADER_TAG} {name} dim={}\n", t.dim());
    for (i, j, v) in t.iter() {
        for (k, c) in v {
            writeln!(out, "{i} {j} {k} {} {}", c.numer(), c.denom()).expect("string write");
        }
    }
    out
}

fn bad(line: usize, msg: impl std::fmt::Display) -> BuildError {
    BuildError::Format(format!("line {line}: {msg}"))
}

/// Parses a file without checking the Jacobi identity.
pub fn parse(text: &str) -> Result<StructureTable, BuildError> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let (_, header) = lines.next().ok_or_else(|| bad(1, "empty input"))?;
    let rest = header
        .strip_prefix(HEADER_TAG)
        .ok_or_else(|| bad(1, format!("expected header starting with {HEADER_TAG:?}")))?;
    let fields: Vec<&str> = rest.split_whitespace().collect();
    let (name, dim) = match fields.as_slice() {
        [name, dim] => (
            *name,
            dim.strip_prefix("dim=")
                .and_then(|d| d.parse::<usize>().ok())
                .ok_or_else(|| bad(1, "expected dim=<d>"))?,
        ),
        _ => return Err(bad(1, "expected `<name> dim=<d>` after the tag")),
    };
    let mut t = StructureTable::new(name, (0..dim).map(|i| format!("e_{i}")).collect());
    let mut current: Option<(usize, usize)> = None;
    let mut entries: Vec<(usize, Rational)> = Vec::new();
    let mut last: Option<(usize, usize, usize)> = None;
    for (n, line) in lines {
        let n = n + 1;
        let f: Vec<&str> = line.split_whitespace().collect();
        if f.len() != 5 {
            return Err(bad(n, "expected `i j k num den`"));
        }
        let idx = |s: &str| s.parse::<usize>().map_err(|_| bad(n, format!("bad index {s:?}")));
        let (i, j, k) = (idx(f[0])?, idx(f[1])?, idx(f[2])?);
        let num: BigInt = f[3].parse().map_err(|_| bad(n, "bad numerator"))?;
        let den: BigInt = f[4].parse().map_err(|_| bad(n, "bad denominator"))?;
        if !den.is_positive() {
            return Err(bad(n, "denominator must be positive"));
        }
        if num.is_zero() {
            return Err(bad(n, "zero coefficients are not stored"));
        }
        if i >= j || j >= dim || k >= dim {
            return Err(bad(n, format!("indices must satisfy i < j < {dim}, k < {dim}")));
        }
        if last.is_some_and(|l| l >= (i, j, k)) {
            return Err(bad(n, "lines must be strictly increasing in (i, j, k)"));
        }
        last = Some((i, j, k));
        if current != Some((i, j)) {
            if let Some((a, b)) = current.take() {
                t.set_bracket(a, b, std::mem::take(&mut entries))?;
            }
            current = Some((i, j));
        }
        entries.push((k, Rational::new(num, den)));
    }
    if let Some((a, b)) = current {
        t.set_bracket(a, b, entries)?;
    }
    Ok(t)
}

/// Parses and re-verifies a file.
pub fn import(text: &str, workers: usize) -> Result<(StructureTable, JacobiReport), BuildError> {
    let t = parse(text)?;
    let report = verify_jacobi_with(&t, workers)?;
    Ok((t, report))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builder::matrices::{so_table, su_table};

    #[test]
    fn round_trip() {
        let t = su_table(3);
        let text = export(&t);
        assert!(text.starts_with("# lie-structure v1 su(3) dim=8\n"));
        let (back, report) = import(&text, 1).unwrap();
        assert!(report.is_lie_algebra());
        assert_eq!(back.iter().collect::<Vec<_>>(), t.iter().collect::<Vec<_>>());
        assert_eq!(export(&back), text);
    }

    #[test]
    fn so3_file() {
        assert_eq!(
            export(&so_table(3)),
            "# lie-structure v1 so(3) dim=3\n0 1 2 -1 1\n0 2 1 1 1\n1 2 0 -1 1\n"
        );
    }

    #[test]
    fn corrupted_coefficient_is_caught() {
        let text = export(&so_table(5)).replacen(" 1 1\n", " 2 1\n", 1);
        let (_, report) = import(&text, 1).unwrap();
        assert!(report.violations > 0);
    }

    #[test]
    fn malformed_input() {
        for text in [
            "",
            "# lie-structure v2 x dim=2\n",
            "# lie-structure v1 x dim=2\n1 0 0 1 1\n",
            "# lie-structure v1 x dim=3\n0 1 2 1 0\n",
            "# lie-structure v1 x dim=3\n0 2 1 1 1\n0 1 2 1 1\n",
            "# lie-structure v1 x dim=3\n0 1 2 0 1\n",
            "# lie-structure v1 x dim=3\n0 1 2 1\n",
        ] {
            assert!(matches!(parse(text), Err(BuildError::Format(_))), "{text:?}");
        }
    }
}

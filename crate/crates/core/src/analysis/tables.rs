use std::fmt::Write as _;

use rayon::prelude::*;

use crate::error::Result;
use crate::families::{family_chromatic_polynomial, FamilyKind, FamilySpec};
use crate::poly::{rat, IntPoly, RootIsolator, RootRecord};

/// Marker written into a table cell when no root was found in `(1, 2)`.
pub const MISSING_ROOT: &str = "ERR";

/// Smallest root of `p` in `(1, 2)`, refined to `places` decimals.
pub fn smallest_root_in_unit_interval(p: &IntPoly, places: u32) -> Result<Option<RootRecord>> {
    let iso = RootIsolator::new(p)?;
    let roots = iso.isolate(&rat(1, 1), &rat(2, 1))?;
    Ok(roots.first().map(|r| iso.refine(r, places)))
}

/// Upper-triangular table of smallest roots in `(1, 2)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootTable {
    pub kind: FamilyKind,
    pub s_values: Vec<usize>,
    pub t_values: Vec<usize>,
    pub places: u32,
    /// `cells[i][j]` for `s_values[i]`, `t_values[j]`; `None` below the
    /// diagonal, `Some(Err(_))` when the family has no root in `(1, 2)`.
    pub cells: Vec<Vec<Option<std::result::Result<String, String>>>>,
}

impl RootTable {
    pub fn get(&self, s: usize, t: usize) -> Option<&str> {
        let i = self.s_values.iter().position(|&v| v == s)?;
        let j = self.t_values.iter().position(|&v| v == t)?;
        match &self.cells[i][j] {
            Some(Ok(d)) => Some(d),
            _ => None,
        }
    }

    /// Header row of `t` values, one row per `s`, blank cells below the
    /// diagonal.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("s\\t");
        for t in &self.t_values {
            let _ = write!(out, ",{t}");
        }
        out.push('\n');
        for (i, s) in self.s_values.iter().enumerate() {
            let _ = write!(out, "{s}");
            for cell in &self.cells[i] {
                out.push(',');
                match cell {
                    Some(Ok(d)) => out.push_str(d),
                    Some(Err(_)) => out.push_str(MISSING_ROOT),
                    None => {}
                }
            }
            out.push('\n');
        }
        out
    }
}

/// For each `s <= t`, the smallest root of the family polynomial in `(1, 2)`
/// to `places` decimals. Cells are computed in parallel.
pub fn reproduce_table(
    kind: FamilyKind,
    s_values: &[usize],
    t_values: &[usize],
    places: u32,
) -> Result<RootTable> {
    let jobs: Vec<(usize, usize)> = (0..s_values.len())
        .flat_map(|i| (0..t_values.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| s_values[i] <= t_values[j])
        .collect();
    type Cell = ((usize, usize), Result<Option<RootRecord>>);
    let computed: Vec<Cell> = jobs
        .par_iter()
        .map(|&(i, j)| {
            let spec = FamilySpec::new(kind, s_values[i], t_values[j]);
            let root = spec
                .and_then(|spec| family_chromatic_polynomial(&spec))
                .and_then(|p| smallest_root_in_unit_interval(&p, places));
            ((i, j), root)
        })
        .collect();
    let mut cells = vec![vec![None; t_values.len()]; s_values.len()];
    for ((i, j), root) in computed {
        cells[i][j] = Some(match root? {
            Some(r) => Ok(r.decimal.expect("refined")),
            None => Err(format!(
                "no root in (1,2) for s={}, t={}",
                s_values[i], t_values[j]
            )),
        });
    }
    Ok(RootTable {
        kind,
        s_values: s_values.to_vec(),
        t_values: t_values.to_vec(),
        places,
        cells,
    })
}

/// Odd sizes `3, 5, ..., max`.
pub fn odd_sizes(max: usize) -> Vec<usize> {
    (3..=max).step_by(2).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_table_layout() {
        let table = reproduce_table(FamilyKind::X, &[3, 5], &[3, 5], 4).unwrap();
        assert_eq!(table.get(3, 3), Some("1.9026"));
        assert!(table.cells[1][0].is_none());
        let csv = table.to_csv();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "s\\t,3,5");
        assert!(lines[1].starts_with("3,1.9026,"));
        assert!(lines[2].starts_with("5,,"));
    }

    #[test]
    fn odd_size_list() {
        assert_eq!(odd_sizes(9), vec![3, 5, 7, 9]);
    }
}

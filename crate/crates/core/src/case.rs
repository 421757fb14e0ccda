//! Parameter families `(d, l, m)` and the per-family symbolic bindings.

use std::fmt;
use std::str::FromStr;

use crate::exactalg::{cst, var, MultiPoly, Var};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MKind {
    Minus,
    One,
    Plus,
}

impl MKind {
    pub const ALL: [MKind; 3] = [MKind::Minus, MKind::One, MKind::Plus];

    /// The eigenvalue `m` of the coupling operator: `-l`, `1` or `l + d - 2`.
    pub fn value(self, d: i64, l: i64) -> i64 {
        match self {
            MKind::Minus => -l,
            MKind::One => 1,
            MKind::Plus => l + d - 2,
        }
    }

    /// `m` as a polynomial in the symbols `d`, `l`.
    pub fn symbolic(self) -> MultiPoly {
        match self {
            MKind::Minus => -var(Var::L),
            MKind::One => cst(1),
            MKind::Plus => var(Var::L) + var(Var::D) - cst(2),
        }
    }

    pub fn tag(self) -> &'static str {
        match self {
            MKind::Minus => "min",
            MKind::One => "1",
            MKind::Plus => "pl",
        }
    }

    /// Recovers the kind from a concrete `m` (unambiguous for `l >= 1`, `d >= 3`).
    pub fn from_value(m: i64, d: i64, l: i64) -> Option<MKind> {
        MKind::ALL.into_iter().find(|k| k.value(d, l) == m)
    }
}

impl FromStr for MKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "min" | "minus" | "-l" => Ok(MKind::Minus),
            "1" | "one" => Ok(MKind::One),
            "pl" | "plus" => Ok(MKind::Plus),
            other => Err(format!("unknown m kind {other:?} (expected minus, one or plus)")),
        }
    }
}

/// A closed range `{k}` or an open range `k, k+1, ...`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Range {
    Exact(i64),
    AtLeast(i64),
}

impl Range {
    pub fn start(self) -> i64 {
        match self {
            Range::Exact(k) | Range::AtLeast(k) => k,
        }
    }

    pub fn contains(self, v: i64) -> bool {
        match self {
            Range::Exact(k) => v == k,
            Range::AtLeast(k) => v >= k,
        }
    }

    pub fn is_exact(self) -> bool {
        matches!(self, Range::Exact(_))
    }
}

/// Which recurrence table applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Row {
    /// `l = 1, m = l + d - 2` after removal of the symmetry mode.
    OnePlus,
    /// `l = 1, m = 1`.
    OneOne,
    /// `l = 2, m = l + d - 2`.
    TwoPlus,
    General,
}

impl Row {
    pub fn of(l: i64, m: MKind) -> Row {
        match (l, m) {
            (1, MKind::Plus) => Row::OnePlus,
            (1, MKind::One) => Row::OneOne,
            (2, MKind::Plus) => Row::TwoPlus,
            _ => Row::General,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CaseSpec {
    pub l: Range,
    pub m: MKind,
    pub d: Range,
}

impl CaseSpec {
    pub const fn new(l: Range, m: MKind, d: Range) -> Self {
        Self { l, m, d }
    }

    /// The twenty families with their own data files, in listing order.
    pub fn families() -> Vec<CaseSpec> {
        use MKind::*;
        use Range::*;
        let mut out = Vec::with_capacity(20);
        let rows: [(Range, MKind, &[Range]); 9] = [
            (Exact(1), Minus, &[Exact(4), AtLeast(5)]),
            (Exact(1), One, &[Exact(4), AtLeast(5)]),
            (Exact(1), Plus, &[Exact(4), AtLeast(5)]),
            (Exact(2), Minus, &[Exact(4), AtLeast(5)]),
            (Exact(2), One, &[AtLeast(4)]),
            (Exact(2), Plus, &[Exact(4), AtLeast(5)]),
            (AtLeast(3), Minus, &[Exact(4), Exact(5), AtLeast(6)]),
            (AtLeast(3), One, &[Exact(4), Exact(5), AtLeast(6)]),
            (AtLeast(3), Plus, &[Exact(4), Exact(5), AtLeast(6)]),
        ];
        for (l, m, ds) in rows {
            for &d in ds {
                out.push(CaseSpec::new(l, m, d));
            }
        }
        out
    }

    /// The family covering a concrete `(d, l, m)` with `d >= 4`, `l >= 1`.
    pub fn family_for(d: i64, l: i64, m: MKind) -> Option<CaseSpec> {
        Self::families()
            .into_iter()
            .find(|c| c.d.contains(d) && c.l.contains(l) && c.m == m)
    }

    /// Data-file stem `l_m_d`. The open `d >= 6` range of the `m = -l`
    /// family carries the plain tag `6`, as in the published listing.
    pub fn file_stem(&self) -> String {
        let l = match self.l {
            Range::Exact(k) => k.to_string(),
            Range::AtLeast(k) => format!("geq{k}"),
        };
        let d = match (self.l, self.m, self.d) {
            (Range::AtLeast(_), MKind::Minus, Range::AtLeast(6)) => "6".to_string(),
            (_, _, Range::Exact(k)) => k.to_string(),
            (_, _, Range::AtLeast(k)) => format!("geq{k}"),
        };
        format!("{l}_{}_{d}", self.m.tag())
    }

    pub fn file_name(&self) -> String {
        format!("{}.csv", self.file_stem())
    }

    pub fn from_file_stem(stem: &str) -> Option<CaseSpec> {
        Self::families().into_iter().find(|c| c.file_stem() == stem)
    }

    /// The recurrence row. Open `l` ranges start at 3 and use the general row.
    pub fn row(&self) -> Row {
        match self.l {
            Range::Exact(l) => Row::of(l, self.m),
            Range::AtLeast(_) => Row::General,
        }
    }

    /// Concrete values substituted into the symbolic tables.
    pub fn substitutions(&self) -> Vec<(Var, MultiPoly)> {
        let mut out = Vec::new();
        if let Range::Exact(d) = self.d {
            out.push((Var::D, cst(d)));
        }
        if let Range::Exact(l) = self.l {
            out.push((Var::L, cst(l)));
        }
        out
    }

    /// `d_0`: shift applied to `d` so that the open range becomes `d >= 0`.
    pub fn d_shift(&self) -> i64 {
        match self.d {
            Range::Exact(_) => 0,
            Range::AtLeast(k) => k,
        }
    }

    pub fn l_shift(&self) -> i64 {
        match self.l {
            Range::Exact(_) => 0,
            Range::AtLeast(k) => k,
        }
    }

    /// `N(d, l, m)`: the first index of the inductive argument.
    pub fn start_index(&self) -> usize {
        use MKind::*;
        use Range::*;
        match (self.l, self.m, self.d) {
            (Exact(1), Plus, Exact(4)) => 4,
            (Exact(1), Plus, _) => 2,
            (Exact(1), One, Exact(4)) => 2,
            (Exact(2), Plus, Exact(4)) => 2,
            (Exact(1), Minus, _) => 2,
            _ => 1,
        }
    }

    pub fn is_symbolic_d(&self) -> bool {
        !self.d.is_exact()
    }

    pub fn is_symbolic_l(&self) -> bool {
        !self.l.is_exact()
    }
}

impl fmt::Display for CaseSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.file_stem())
    }
}

/// Parses `l=1,m=minus,d=4` style selectors into the matching families.
/// Missing keys match everything; `l=0` is reported separately by callers.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CaseFilter {
    pub l: Option<i64>,
    pub m: Option<MKind>,
    pub d: Option<i64>,
}

impl CaseFilter {
    pub fn parse(src: &str) -> Result<Self, String> {
        let mut out = CaseFilter::default();
        let mut m_src = None;
        for part in src.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (key, value) = part
                .split_once('=')
                .ok_or_else(|| format!("expected key=value, got {part:?}"))?;
            match key.trim() {
                "l" => out.l = Some(parse_int(value)?),
                "d" => out.d = Some(parse_int(value)?),
                "m" => m_src = Some(value.trim()),
                other => return Err(format!("unknown case key {other:?}")),
            }
        }
        // A numeric m such as `m=3` is resolved against concrete l and d.
        out.m = match (m_src, m_src.and_then(|v| v.parse::<i64>().ok()), out.l, out.d) {
            (None, ..) => None,
            (Some(_), Some(m), Some(l), Some(d)) if m != 1 => Some(
                MKind::from_value(m, d, l).ok_or_else(|| format!("m = {m} is not -l, 1 or l+d-2 for l = {l}, d = {d}"))?,
            ),
            (Some(v), ..) => Some(v.parse()?),
        };
        Ok(out)
    }

    pub fn is_l_zero(&self) -> bool {
        self.l == Some(0)
    }

    pub fn matches(&self, c: &CaseSpec) -> bool {
        self.l.is_none_or(|l| c.l.contains(l))
            && self.d.is_none_or(|d| c.d.contains(d))
            && self.m.is_none_or(|m| c.m == m)
    }

    pub fn select(&self) -> Vec<CaseSpec> {
        CaseSpec::families()
            .into_iter()
            .filter(|c| self.matches(c))
            .collect()
    }
}

fn parse_int(s: &str) -> Result<i64, String> {
    s.trim()
        .parse()
        .map_err(|_| format!("expected an integer, got {s:?}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twenty_families_with_listed_names() {
        let names: Vec<String> = CaseSpec::families().iter().map(|c| c.file_name()).collect();
        let expected = [
            "1_min_4.csv", "1_min_geq5.csv", "1_1_4.csv", "1_1_geq5.csv", "1_pl_4.csv",
            "1_pl_geq5.csv", "2_min_4.csv", "2_min_geq5.csv", "2_1_geq4.csv", "2_pl_4.csv",
            "2_pl_geq5.csv", "geq3_min_4.csv", "geq3_min_5.csv", "geq3_min_6.csv",
            "geq3_1_4.csv", "geq3_1_5.csv", "geq3_1_geq6.csv", "geq3_pl_4.csv",
            "geq3_pl_5.csv", "geq3_pl_geq6.csv",
        ];
        assert_eq!(names, expected);
    }

    #[test]
    fn families_partition_the_parameter_space() {
        for d in 4..12 {
            for l in 1..8 {
                for m in MKind::ALL {
                    let hits = CaseSpec::families()
                        .into_iter()
                        .filter(|c| c.d.contains(d) && c.l.contains(l) && c.m == m)
                        .count();
                    assert_eq!(hits, 1, "d={d} l={l} m={m:?}");
                }
            }
        }
    }

    #[test]
    fn filter_parsing() {
        let f = CaseFilter::parse("l=1,m=minus,d=4").unwrap();
        assert_eq!(f.select(), vec![CaseSpec::new(Range::Exact(1), MKind::Minus, Range::Exact(4))]);
        assert_eq!(CaseFilter::parse("d=4,l=1,m=3").unwrap().m, Some(MKind::Plus));
        assert_eq!(CaseFilter::parse("l=2,m=-2,d=6").unwrap().m, Some(MKind::Minus));
        assert!(CaseFilter::parse("l=2,m=5,d=6").is_err());
        assert!(CaseFilter::parse("l=0").unwrap().is_l_zero());
        assert!(CaseFilter::parse("q=1").is_err());
        assert_eq!(CaseFilter::parse("").unwrap().select().len(), 20);
    }

    #[test]
    fn m_values() {
        assert_eq!(MKind::Plus.value(4, 1), 3);
        assert_eq!(MKind::Minus.value(9, 5), -5);
        assert_eq!(MKind::from_value(3, 4, 1), Some(MKind::Plus));
    }
}

use std::str::FromStr;

use num_complex::Complex64;

use crate::case::{CaseSpec, MKind};

use super::numeric::concrete;
use super::{NumericRecurrence, RecurrenceError};

/// `Re lambda in [0, re_max]`, `Im lambda in [-im_max, im_max]`, spacing `step`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Grid {
    pub re_max: f64,
    pub im_max: f64,
    pub step: f64,
}

impl Grid {
    pub const DEFAULT: Grid = Grid {
        re_max: 5.0,
        im_max: 5.0,
        step: 0.5,
    };

    pub fn points(&self) -> Vec<Complex64> {
        let nr = (self.re_max / self.step).round() as i64;
        let ni = (self.im_max / self.step).round() as i64;
        let mut out = Vec::new();
        for i in 0..=nr {
            for j in -ni..=ni {
                out.push(Complex64::new(i as f64 * self.step, j as f64 * self.step));
            }
        }
        out
    }
}

impl FromStr for Grid {
    type Err = String;

    /// `re_max,im_max,step`
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<f64> = s
            .split(',')
            .map(|p| p.trim().parse::<f64>().map_err(|_| format!("bad grid component {p:?}")))
            .collect::<Result<_, _>>()?;
        let [re_max, im_max, step] = parts[..] else {
            return Err("grid is re_max,im_max,step".into());
        };
        if !(step > 0.0 && re_max >= 0.0 && im_max >= 0.0) {
            return Err("grid needs step > 0 and nonnegative extents".into());
        }
        Ok(Grid { re_max, im_max, step })
    }
}

#[derive(Clone, Copy, Debug)]
pub struct SweepPoint {
    pub lambda: Complex64,
    pub r: Complex64,
    pub deviation: f64,
    /// Closer to `-1/(d-2)` than to `1`.
    pub toward_other_root: bool,
}

#[derive(Clone, Debug)]
pub struct SweepReport {
    pub d: i64,
    pub l: i64,
    pub m: MKind,
    pub n_max: usize,
    pub tol: f64,
    pub roots: (f64, f64),
    pub points: Vec<SweepPoint>,
}

impl SweepReport {
    pub fn flagged(&self) -> Vec<&SweepPoint> {
        self.points
            .iter()
            .filter(|p| !(p.deviation < self.tol) || p.toward_other_root)
            .collect()
    }

    pub fn max_deviation(&self) -> f64 {
        self.points.iter().map(|p| p.deviation).fold(0.0, f64::max)
    }

    pub fn pass(&self) -> bool {
        self.flagged().is_empty()
    }
}

/// `r_{n_max}(lambda)` over the grid for concrete `(d, l, m)`.
pub fn sweep(d: i64, l: i64, m: MKind, grid: &Grid, n_max: usize, tol: f64) -> Result<SweepReport, RecurrenceError> {
    let case = CaseSpec::family_for(d, l, m)
        .ok_or_else(|| RecurrenceError::InvalidCase(format!("(d, l) = ({d}, {l}) has no family")))?;
    let rec = concrete(&case, d, l)?;
    let other = -1.0 / (d as f64 - 2.0);
    let points = grid
        .points()
        .into_iter()
        .map(|lambda| {
            let r = NumericRecurrence::new(&rec, lambda)?.final_ratio(n_max)?;
            let deviation = (r - 1.0).norm();
            let deviation = if deviation.is_finite() { deviation } else { f64::INFINITY };
            Ok(SweepPoint {
                lambda,
                r,
                deviation,
                toward_other_root: (r - other).norm() < deviation,
            })
        })
        .collect::<Result<Vec<_>, RecurrenceError>>()?;
    Ok(SweepReport {
        d,
        l,
        m,
        n_max,
        tol,
        roots: (1.0, other),
        points,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_shape() {
        assert_eq!(Grid::DEFAULT.points().len(), 11 * 21);
        assert_eq!("1,0,0.5".parse::<Grid>().unwrap().points().len(), 3);
        assert!("1,2".parse::<Grid>().is_err());
        assert!("1,1,0".parse::<Grid>().is_err());
    }

    #[test]
    fn converges_toward_one() {
        let g: Grid = "2,2,1".parse().unwrap();
        let rep = sweep(6, 3, MKind::One, &g, 5000, 1e-2).unwrap();
        assert!(rep.pass(), "max deviation {}", rep.max_deviation());
        assert!(rep.points.iter().all(|p| !p.toward_other_root));
        assert_eq!(rep.roots, (1.0, -0.25));
    }
}

use num_complex::Complex64;
use num_traits::{One, Zero};

use crate::case::MKind;
use crate::exactalg::{cst, rat, MultiPoly, Rational, Var};
use crate::recurrence::derive_recurrence_from_ode;

use super::heun::heun_table;
use super::{OdeError, OdeSecondOrder};

/// Parameters of the `l = 0` series and the observed coefficient ratio.
#[derive(Clone, Debug)]
pub struct HypergeometricReport {
    pub d: i64,
    pub lambda: Complex64,
    pub a: Complex64,
    pub b: Complex64,
    pub c: Complex64,
    pub n_max: usize,
    /// `t_{n_max} / t_{n_max - 1}` from the iterated coefficients.
    pub ratio: Complex64,
}

impl HypergeometricReport {
    pub fn deviation(&self) -> f64 {
        (self.ratio - 1.0).norm()
    }
}

fn nonpositive_integer(z: Complex64) -> bool {
    z.im == 0.0 && z.re <= 0.0 && z.re.fract() == 0.0
}

/// `(a, b, c) = ((lambda + 2)/2, (lambda + 3)/2, (d + 4)/2)`.
pub fn parameters(d: i64, lambda: Complex64) -> (Complex64, Complex64, Complex64) {
    (
        (lambda + 2.0) / 2.0,
        (lambda + 3.0) / 2.0,
        Complex64::new((d + 4) as f64 / 2.0, 0.0),
    )
}

/// Iterates `t_{n+1} = t_n (a + n)(b + n)/((c + n)(n + 1))` from `t_0 = 1`
/// and reports the last consecutive ratio.
pub fn hypergeometric_check(d: i64, lambda: Complex64, n_max: usize) -> Result<HypergeometricReport, OdeError> {
    let (a, b, c) = parameters(d, lambda);
    if nonpositive_integer(a) || nonpositive_integer(b) || nonpositive_integer(c) {
        return Err(OdeError::DegenerateParameters);
    }
    if n_max == 0 {
        return Err(OdeError::InvalidCase("n_max must be positive".into()));
    }
    let mut prev = Complex64::zero();
    let mut t = Complex64::one();
    for n in 0..n_max {
        let k = n as f64;
        prev = t;
        t *= (a + k) * (b + k) / ((c + k) * (k + 1.0));
        let scale = t.norm().max(prev.norm());
        if scale > 1e100 || (scale < 1e-100 && scale > 0.0) {
            t /= scale;
            prev /= scale;
        }
    }
    Ok(HypergeometricReport {
        d,
        lambda,
        a,
        b,
        c,
        n_max,
        ratio: t / prev,
    })
}

/// Exact coefficients `(a)_n (b)_n / ((c)_n n!)` for `n = 0..count`.
pub fn series_coefficients(d: i64, lambda: &Rational, count: usize) -> Result<Vec<Rational>, OdeError> {
    let two = rat(2, 1);
    let a = (lambda + rat(2, 1)) / &two;
    let b = (lambda + rat(3, 1)) / &two;
    let c = rat(d + 4, 2);
    for p in [&a, &b, &c] {
        if p.is_integer() && *p <= Rational::zero() {
            return Err(OdeError::DegenerateParameters);
        }
    }
    let mut out = Vec::with_capacity(count);
    let mut t = Rational::one();
    for n in 0..count {
        out.push(t.clone());
        let k = rat(n as i64, 1);
        t = t * (&a + &k) * (&b + &k) / ((&c + &k) * (&k + Rational::one()));
    }
    Ok(out)
}

/// Checks the exact series coefficients against the recurrence obtained by
/// inserting a power series into the `l = 0` Heun-form equation.
pub fn series_satisfies_heun_recurrence(d: i64, lambda: &Rational, count: usize) -> Result<bool, OdeError> {
    let (p, q) = heun_table(Some(0), MKind::One);
    let bind = [(Var::D, cst(d)), (Var::Lambda, MultiPoly::constant(lambda.clone()))];
    let ode = OdeSecondOrder::new(Var::X, p.substitute_all(&bind)?, q.substitute_all(&bind)?);
    let rec = derive_recurrence_from_ode(&ode)
        .map_err(|e| OdeError::IdentityFailed(format!("l = 0 recurrence: {e}")))?;
    let t = series_coefficients(d, lambda, count)?;
    // t_{n+2} = A_n t_{n+1} + B_n t_n with t_{-1} = 0.
    let at = |k: i64| -> Rational {
        if k < 0 {
            Rational::zero()
        } else {
            t[k as usize].clone()
        }
    };
    for n in -1..(count as i64 - 2) {
        let point = [(Var::N, rat(n, 1))];
        let a = rec.a.eval_rational(&point)?;
        let b = rec.b.eval_rational(&point)?;
        if at(n + 2) != a * at(n + 1) + b * at(n) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Sample eigenvalues for the `l = 0` route: `0, 1, i, 2 + 3i`.
pub const L_ZERO_SAMPLES: [(f64, f64); 4] = [(0.0, 0.0), (1.0, 0.0), (0.0, 1.0), (2.0, 3.0)];

/// Series ratios at the samples, and the exact recurrence check at the real ones.
#[derive(Clone, Debug)]
pub struct LZeroReport {
    pub d: i64,
    pub ratios: Vec<HypergeometricReport>,
    pub exact: Vec<(Rational, bool)>,
}

impl LZeroReport {
    pub fn pass(&self, tol: f64) -> bool {
        self.ratios.iter().all(|r| r.deviation() < tol) && self.exact.iter().all(|(_, ok)| *ok)
    }
}

pub fn l_zero_route(d: i64, n_max: usize, exact_terms: usize) -> Result<LZeroReport, OdeError> {
    let mut ratios = Vec::new();
    let mut exact = Vec::new();
    for (re, im) in L_ZERO_SAMPLES {
        ratios.push(hypergeometric_check(d, Complex64::new(re, im), n_max)?);
        if im == 0.0 {
            let lambda = rat(re as i64, 1);
            let ok = series_satisfies_heun_recurrence(d, &lambda, exact_terms)?;
            exact.push((lambda, ok));
        }
    }
    Ok(LZeroReport { d, ratios, exact })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn d4_lambda0_parameters_and_ratio() {
        let r = hypergeometric_check(4, Complex64::zero(), 10_000).unwrap();
        assert_eq!((r.a.re, r.b.re, r.c.re), (1.0, 1.5, 4.0));
        assert!(r.deviation() < 1e-3);
    }

    #[test]
    fn d5_imaginary_lambda_converges() {
        let r = hypergeometric_check(5, Complex64::i(), 10_000).unwrap();
        assert!(r.deviation() < 1e-3);
    }

    #[test]
    fn first_coefficient_is_one() {
        assert_eq!(series_coefficients(6, &rat(1, 3), 1).unwrap(), vec![Rational::one()]);
    }

    #[test]
    fn degenerate_parameters() {
        assert_eq!(
            hypergeometric_check(4, Complex64::new(-2.0, 0.0), 10).unwrap_err(),
            OdeError::DegenerateParameters
        );
    }

    #[test]
    fn exact_series_matches_recurrence() {
        for d in 4..10 {
            for lambda in [rat(0, 1), rat(1, 1), rat(7, 3)] {
                assert!(series_satisfies_heun_recurrence(d, &lambda, 30).unwrap());
            }
        }
    }

    #[test]
    fn perturbed_series_fails() {
        // A wrong lambda in the coefficients must break the recurrence.
        let t = series_coefficients(5, &rat(1, 1), 6).unwrap();
        let u = series_coefficients(5, &rat(2, 1), 6).unwrap();
        assert_ne!(t, u);
    }
}

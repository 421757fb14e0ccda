use num_traits::{One, Signed, Zero};

use crate::exactalg::{MultiPoly, RatFunc, Rational, Var};

use super::positivity::{positive_on_range, Shifts};
use super::CertifyError;

/// Coefficients `c_1..c_n` of the continued fraction
/// `Q/P = 1/(1 + c_1 z + 1/(c_2 z + 1/(... + 1/(c_n z))))`, `Q` the odd part of
/// the monic `P`. Computed by Euclidean division of the even part `F_0` by the
/// odd part `F_1`: `F_{k+1} = F_{k-1} - c_k z F_k` with each degree dropping by one.
pub fn wall_continued_fraction(p: &MultiPoly) -> Result<Vec<Rational>, CertifyError> {
    if p.variables().iter().any(|&v| v != Var::Lambda) {
        return Err(CertifyError::NotUnivariate);
    }
    let coeffs: Vec<Rational> = p
        .coefficients_in(Var::Lambda)
        .into_iter()
        .map(|c| c.constant_term())
        .collect();
    let n = coeffs.len().saturating_sub(1);
    if n == 0 {
        return Err(CertifyError::DegenerateDivision(0));
    }
    let lead = coeffs[n].clone();
    let monic: Vec<Rational> = coeffs.iter().map(|c| c / &lead).collect();
    // Parts by parity of the power, as dense coefficient vectors in z.
    let part = |parity: usize| -> Vec<Rational> {
        monic
            .iter()
            .enumerate()
            .map(|(k, c)| if (n - k) % 2 == parity { c.clone() } else { Rational::zero() })
            .collect()
    };
    let mut prev = trim(part(0));
    let mut cur = trim(part(1));
    let mut out = Vec::with_capacity(n);
    for k in 1..=n {
        if cur.is_empty() || cur.len() + 1 != prev.len() {
            return Err(CertifyError::DegenerateDivision(k));
        }
        let c = prev.last().expect("nonempty") / cur.last().expect("nonempty");
        // prev - c z cur
        let mut next = prev.clone();
        for (i, a) in cur.iter().enumerate() {
            next[i + 1] -= &c * a;
        }
        out.push(c);
        prev = cur;
        cur = trim(next);
    }
    if !cur.is_empty() {
        return Err(CertifyError::DegenerateDivision(n + 1));
    }
    Ok(out)
}

fn trim(mut v: Vec<Rational>) -> Vec<Rational> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

/// Evaluates `1/(1 + c_1 z + 1/(c_2 z + ... + 1/(c_n z)))`.
pub fn wall_evaluate(cs: &[Rational], z: &Rational) -> Option<Rational> {
    let mut tail: Option<Rational> = None;
    for c in cs.iter().skip(1).rev() {
        let level = c * z + tail.map(|t| t.recip()).unwrap_or_else(Rational::zero);
        if level.is_zero() {
            return None;
        }
        tail = Some(level);
    }
    let first = cs.first()? * z + Rational::one() + tail.map(|t| t.recip()).unwrap_or_else(Rational::zero);
    if first.is_zero() {
        return None;
    }
    Some(first.recip())
}

/// `Q(z)/P(z)` at a rational point, `P` made monic and `Q` its odd part.
pub fn odd_over_full(p: &MultiPoly, z: &Rational) -> Option<Rational> {
    let coeffs: Vec<Rational> = p
        .coefficients_in(Var::Lambda)
        .into_iter()
        .map(|c| c.constant_term())
        .collect();
    let n = coeffs.len() - 1;
    let (mut q, mut full) = (Rational::zero(), Rational::zero());
    let mut pow = Rational::one();
    for (k, c) in coeffs.iter().enumerate() {
        let term = c * &pow;
        if (n - k) % 2 == 1 {
            q += &term;
        }
        full += term;
        pow *= z;
    }
    if full.is_zero() {
        None
    } else {
        Some(q / full)
    }
}

/// Wall's criterion: all roots in the open left half-plane iff the expansion
/// exists with `n` positive coefficients. The expansion is spot-checked
/// against `Q/P` at three rational points.
#[derive(Clone, Debug)]
pub struct WallReport {
    pub coefficients: Vec<Rational>,
    pub hurwitz: bool,
    /// Step at which no linear quotient exists, if any.
    pub degenerate_at: Option<usize>,
}

pub fn wall_criterion(p: &MultiPoly) -> Result<WallReport, CertifyError> {
    let cs = match wall_continued_fraction(p) {
        Ok(cs) => cs,
        Err(CertifyError::DegenerateDivision(k)) => {
            return Ok(WallReport {
                coefficients: Vec::new(),
                hurwitz: false,
                degenerate_at: Some(k),
            })
        }
        Err(e) => return Err(e),
    };
    for z in [Rational::new(1.into(), 3.into()), Rational::one(), Rational::from_integer(7.into())] {
        if let (Some(a), Some(b)) = (wall_evaluate(&cs, &z), odd_over_full(p, &z)) {
            if a != b {
                return Err(CertifyError::ReconstructionMismatch);
            }
        }
    }
    let hurwitz = cs.iter().all(|c| c.is_positive());
    Ok(WallReport {
        coefficients: cs,
        hurwitz,
        degenerate_at: None,
    })
}

/// Quantities whose positivity is equivalent to the Hurwitz property of the
/// monic polynomial `z^k + b1 z^(k-1) + ... + bk`, for `k = 2` or `4`:
/// `b1, b2` for degree two, and `b1, b3, b4, b1 b2 b3 - b3^2 - b1^2 b4` for degree four.
pub fn hurwitz_conditions(b: &[RatFunc]) -> Option<Vec<(&'static str, RatFunc)>> {
    match b {
        [b1, b2] => Some(vec![("b1", b1.clone()), ("b2", b2.clone())]),
        [b1, b2, b3, b4] => {
            let det = &(&(b1 * b2) * b3) - &(&(b3 * b3) + &(&(b1 * b1) * b4));
            Some(vec![
                ("b1", b1.clone()),
                ("b3", b3.clone()),
                ("b4", b4.clone()),
                ("b1*b2*b3 - b3^2 - b1^2*b4", det),
            ])
        }
        _ => None,
    }
}

/// `z^2 + b1 z + b2`: Hurwitz iff `b1, b2 > 0` on the shifted range.
pub fn hurwitz_degree2(b1: &RatFunc, b2: &RatFunc, shifts: &Shifts) -> bool {
    let conds = hurwitz_conditions(&[b1.clone(), b2.clone()]).expect("degree two");
    conds.iter().all(|(_, f)| positive_on_range(f, shifts))
}

/// `z^4 + b1 z^3 + b2 z^2 + b3 z + b4`: Hurwitz iff `b1, b3, b4 > 0` and
/// `b1 b2 b3 - b3^2 - b1^2 b4 > 0`.
pub fn hurwitz_degree4(b: [&RatFunc; 4], shifts: &Shifts) -> bool {
    let b: Vec<RatFunc> = b.into_iter().cloned().collect();
    let conds = hurwitz_conditions(&b).expect("degree four");
    conds.iter().all(|(_, f)| positive_on_range(f, shifts))
}

/// Monic coefficients `b_1..b_n` (descending powers after the leading one)
/// of a polynomial in `lambda` whose coefficients may involve `n`, `d`, `l`.
pub fn monic_coefficients(p: &MultiPoly) -> Result<Vec<RatFunc>, CertifyError> {
    let cs = p.coefficients_in(Var::Lambda);
    let lead = cs.last().cloned().ok_or(CertifyError::NotUnivariate)?;
    cs.iter()
        .rev()
        .skip(1)
        .map(|c| RatFunc::new(c.clone(), lead.clone()).map_err(CertifyError::from))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{parse_poly, rat};

    fn p(src: &str) -> MultiPoly {
        parse_poly(src).unwrap()
    }

    #[test]
    fn degree_two_closed_form() {
        let cs = wall_continued_fraction(&p("lambda^2 + 3*lambda + 2")).unwrap();
        assert_eq!(cs, vec![rat(1, 3), rat(3, 2)]);
    }

    #[test]
    fn imaginary_roots_degenerate() {
        assert!(matches!(
            wall_continued_fraction(&p("lambda^2 + 1")),
            Err(CertifyError::DegenerateDivision(1))
        ));
        assert!(!wall_criterion(&p("lambda^2 + 1")).unwrap().hurwitz);
    }

    #[test]
    fn r3_octic() {
        let cs = wall_continued_fraction(&p(
            "lambda^8 + 44*lambda^7 + 802*lambda^6 + 7832*lambda^5 + 44497*lambda^4 \
             + 149708*lambda^3 + 284172*lambda^2 + 253680*lambda + 95616",
        ))
        .unwrap();
        let want = [
            "1/44",
            "11/156",
            "1352/10691",
            "1257272291/6279558844",
            "14583158015998009/47686278024425370",
            "913465855584827404205/2012154184581448576794",
            "138816450390479914710584802/144189564446831042990725115",
            "10667746155294185/5531890170247464",
        ];
        let got: Vec<String> = cs.iter().map(|c| c.to_string()).collect();
        assert_eq!(got, want);
    }

    #[test]
    fn quartic_closed_form() {
        let one = RatFunc::one();
        assert!(!hurwitz_degree4([&one, &one, &one, &one], &Shifts::NONE));
        // (z+1)(z+2)(z+3)(z+4) = z^4 + 10 z^3 + 35 z^2 + 50 z + 24
        let c = |k| RatFunc::int(k);
        assert!(hurwitz_degree4([&c(10), &c(35), &c(50), &c(24)], &Shifts::NONE));
        assert!(hurwitz_degree2(&c(3), &c(2), &Shifts::NONE));
    }
}

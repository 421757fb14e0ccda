//! Certificates: imaginary-axis bounds by shift-and-check, the quadratic
//! fallback, Hurwitz checks (closed forms and Wall's continued fraction) and
//! the per-case bundle.

mod axis;
mod hurwitz;
mod positivity;

pub use axis::{imag_axis_bound_certificate, quadratic_fallback, AxisCertificate, FallbackRecord};
pub use hurwitz::{
    hurwitz_conditions, hurwitz_degree2, hurwitz_degree4, monic_coefficients, odd_over_full,
    wall_continued_fraction, wall_criterion, wall_evaluate, WallReport,
};
pub use positivity::{negative_witness, positive_on_range, shifted_parts, strictly_positive_poly, Shifts};

use std::fmt::{self, Write as _};

use rayon::prelude::*;

use crate::case::CaseSpec;
use crate::exactalg::{poly_to_string, ratfunc_to_string, Exponents, MultiPoly, RatFunc, RatFuncError, Rational, Var};
use crate::quasisolution::{auxiliary, Auxiliary, bound_triple, contraction_check, rtilde, BoundTriple, QuasiError};
use crate::recurrence::{r_symbolic_at, RecurrenceError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CertifyError {
    #[error("polynomial is not univariate in lambda with rational coefficients")]
    NotUnivariate,
    #[error("no linear quotient at continued-fraction step {0}")]
    DegenerateDivision(usize),
    #[error("continued fraction does not reproduce Q/P")]
    ReconstructionMismatch,
    #[error("function has non-real coefficients on the imaginary axis")]
    NonRealCoefficients,
    #[error("bound {0} is not positive on the shifted range")]
    BoundNotPositive(String),
    #[error("quadratic fallback not applicable: {0}")]
    FallbackNotApplicable(String),
    #[error("{case}: {source}")]
    InCase { case: String, source: Box<CertifyError> },
    #[error(transparent)]
    RatFunc(#[from] RatFuncError),
    #[error(transparent)]
    Recurrence(#[from] RecurrenceError),
    #[error(transparent)]
    Quasi(#[from] QuasiError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Pass,
    PassWithFallback,
    Fail,
}

impl Verdict {
    pub fn is_pass(self) -> bool {
        self != Verdict::Fail
    }

    fn from_bool(ok: bool) -> Verdict {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::PassWithFallback => "pass_with_fallback",
            Verdict::Fail => "fail",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Target {
    RtildeNonzero,
    RnHurwitz,
    DeltaN,
    C,
    Epsilon,
    Contraction,
}

impl Target {
    pub const ALL: [Target; 6] = [
        Target::RtildeNonzero,
        Target::RnHurwitz,
        Target::DeltaN,
        Target::C,
        Target::Epsilon,
        Target::Contraction,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Target::RtildeNonzero => "rtilde_nonzero",
            Target::RnHurwitz => "rN_hurwitz",
            Target::DeltaN => "delta_N",
            Target::C => "C",
            Target::Epsilon => "epsilon",
            Target::Contraction => "contraction",
        }
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

pub const NOTE_PHRAGMEN_LINDELOF: &str = "Phragmen-Lindelof: the functions are holomorphic on the open right half-plane, \
     continuous on its closure and bounded, so bounds on the imaginary axis hold on the closed half-plane";
pub const NOTE_INDUCTION: &str = "induction: |delta_n| <= alpha with alpha <= 1/2 gives |1 + delta_n| >= 1/2, and \
     delta_{n+1} = eps_n - C_n delta_n/(1 + delta_n) gives |delta_{n+1}| <= gamma + beta alpha/(1 - alpha) <= alpha";
pub const NOTE_POINCARE: &str = "Poincare: r_n tends to a root of z^2 - a z - b, which are 1 and -1/(d - 2); \
     |r_n/rt_n - 1| <= alpha with rt_n -> 1 selects 1, so the series has radius of convergence exactly 1";
pub const NOTE_SUSY: &str = "supersymmetric removal: an unstable mode of the linearized operator, other than the \
     symmetry mode lambda = 1, yields a nonzero solution of the reduced equation with the same lambda";

/// One target of one case.
#[derive(Clone, Debug)]
pub struct Certificate {
    pub case: CaseSpec,
    pub target: Target,
    pub shifts: Shifts,
    pub verdict: Verdict,
    pub bound: Option<RatFunc>,
    /// Named polynomials whose coefficient signs carry the certificate.
    pub polynomials: Vec<(String, MultiPoly)>,
    pub wall: Option<Vec<Rational>>,
    pub witness: Option<(Exponents, Rational)>,
    pub fallback: Option<FallbackRecord>,
    pub notes: Vec<&'static str>,
}

impl Certificate {
    fn new(case: &CaseSpec, target: Target, shifts: Shifts) -> Certificate {
        Certificate {
            case: *case,
            target,
            shifts,
            verdict: Verdict::Fail,
            bound: None,
            polynomials: Vec::new(),
            wall: None,
            witness: None,
            fallback: None,
            notes: Vec::new(),
        }
    }

    pub fn serialize(&self) -> String {
        let mut out = String::new();
        let mut line = |k: &str, v: &str| {
            let _ = writeln!(out, "{k} = {v}");
        };
        line("target", self.target.name());
        line("verdict", &self.verdict.to_string());
        line("shifts", &self.shifts.to_string());
        if let Some(b) = &self.bound {
            line("bound", &ratfunc_to_string(b));
        }
        for (name, p) in &self.polynomials {
            line(name, &poly_to_string(p));
        }
        if let Some(cs) = &self.wall {
            for (k, c) in cs.iter().enumerate() {
                line(&format!("c_{}", k + 1), &c.to_string());
            }
        }
        if let Some((e, c)) = &self.witness {
            line("witness", &poly_to_string(&MultiPoly::monomial(c.clone(), *e)));
        }
        if let Some(f) = &self.fallback {
            line("fallback.a0", &f.a0.to_string());
            line("fallback.a1", &f.a1.to_string());
            line("fallback.a2", &f.a2.to_string());
            line("fallback.discriminant", &f.discriminant.to_string());
        }
        for n in &self.notes {
            line("trusted", n);
        }
        out
    }
}

#[derive(Clone, Debug)]
pub struct CertificateBundle {
    pub case: CaseSpec,
    pub n_start: usize,
    pub triple: BoundTriple,
    pub auxiliary: Auxiliary,
    pub certificates: Vec<Certificate>,
    pub trusted: Vec<&'static str>,
}

impl CertificateBundle {
    pub fn pass(&self) -> bool {
        self.certificates.iter().all(|c| c.verdict.is_pass())
    }

    pub fn get(&self, target: Target) -> Option<&Certificate> {
        self.certificates.iter().find(|c| c.target == target)
    }

    pub fn failures(&self) -> Vec<Target> {
        self.certificates.iter().filter(|c| !c.verdict.is_pass()).map(|c| c.target).collect()
    }

    pub fn serialize(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "[{}]", self.case);
        let _ = writeln!(out, "verdict = {}", if self.pass() { "pass" } else { "fail" });
        let _ = writeln!(out, "N = {}", self.n_start);
        let _ = writeln!(out, "alpha = {}", self.triple.alpha);
        let _ = writeln!(out, "beta = {}", ratfunc_to_string(&self.triple.beta));
        let _ = writeln!(out, "gamma = {}", ratfunc_to_string(&self.triple.gamma));
        for n in &self.trusted {
            let _ = writeln!(out, "trusted = {n}");
        }
        for c in &self.certificates {
            let _ = writeln!(out, "\n[{}/{}]", self.case, c.target);
            out.push_str(&c.serialize());
        }
        out
    }
}

/// Records every Hurwitz condition as a shifted numerator/denominator pair.
fn closed_form_hurwitz(cert: &mut Certificate, b: &[RatFunc]) -> bool {
    let Some(conds) = hurwitz_conditions(b) else {
        return false;
    };
    let mut ok = true;
    for (name, f) in conds {
        let (num, den) = shifted_parts(&f, &cert.shifts);
        let good = strictly_positive_poly(&num) && strictly_positive_poly(&den);
        if !good && cert.witness.is_none() {
            cert.witness = negative_witness(&num).or_else(|| negative_witness(&den));
        }
        ok &= good;
        cert.polynomials.push((format!("{name}.num"), num));
        cert.polynomials.push((format!("{name}.den"), den));
    }
    ok
}

/// `rt_n` is quadratic in `lambda`: nonvanishing on the closed right
/// half-plane reduces to positivity of its monic coefficients for `n >= N`.
pub fn rtilde_nonzero_certificate(case: &CaseSpec) -> Result<Certificate, CertifyError> {
    let shifts = Shifts::for_case(case, case.start_index() as i64);
    let mut cert = Certificate::new(case, Target::RtildeNonzero, shifts);
    let [c0, c1, c2] = rtilde(case)?.lambda_coefficients();
    let b1 = c1.checked_div(&c2)?;
    let b2 = c0.checked_div(&c2)?;
    let ok = closed_form_hurwitz(&mut cert, &[b1, b2]);
    cert.verdict = Verdict::from_bool(ok);
    Ok(cert)
}

/// The numerator of `r_{N-1}` has no zeros on the closed right half-plane, so
/// `r_N` has no poles there. Degrees 2 and 4 use closed forms, others Wall.
pub fn rn_hurwitz_certificate(case: &CaseSpec) -> Result<Certificate, CertifyError> {
    let n = case.start_index();
    let shifts = Shifts::for_case(case, 0);
    let mut cert = Certificate::new(case, Target::RnHurwitz, shifts);
    let numerator = r_symbolic_at(case, n - 1)?.num().clone();
    let b = monic_coefficients(&numerator)?;
    let ok = if matches!(b.len(), 2 | 4) {
        closed_form_hurwitz(&mut cert, &b)
    } else {
        let shifted = shifts.apply(&numerator);
        let report = wall_criterion(&shifted)?;
        cert.polynomials.push(("numerator".into(), shifted));
        cert.wall = Some(report.coefficients.clone());
        if let Some(k) = report.degenerate_at {
            cert.notes.push(if k == 0 { "constant numerator" } else { "degenerate continued fraction" });
        }
        report.hurwitz
    };
    cert.verdict = Verdict::from_bool(ok);
    Ok(cert)
}

fn axis_certificate(
    case: &CaseSpec,
    target: Target,
    f: &RatFunc,
    bound: &RatFunc,
    shifts: Shifts,
) -> Result<Certificate, CertifyError> {
    let ax = imag_axis_bound_certificate(f, bound, shifts)?;
    let mut cert = Certificate::new(case, target, shifts);
    cert.verdict = ax.verdict;
    cert.bound = Some(bound.clone());
    cert.polynomials.push(("certificate".into(), ax.poly));
    cert.witness = ax.witness;
    cert.fallback = ax.fallback;
    cert.notes.push(NOTE_PHRAGMEN_LINDELOF);
    Ok(cert)
}

/// `alpha - gamma - beta alpha/(1 - alpha) >= 0` on the shifted range, and `alpha <= 1/2`.
pub fn contraction_certificate(case: &CaseSpec, triple: &BoundTriple) -> Result<Certificate, CertifyError> {
    let shifts = Shifts::for_case(case, case.start_index() as i64);
    let mut cert = Certificate::new(case, Target::Contraction, shifts);
    let one = Rational::from_integer(1.into());
    let alpha = RatFunc::constant(triple.alpha.clone());
    let ratio = RatFunc::constant(&triple.alpha / (&one - &triple.alpha));
    let slack = &(&alpha - &triple.gamma) - &(&triple.beta * &ratio);
    // Sign fixed by the denominator, so a negative slack shows in the numerator.
    let (mut num, mut den) = (shifts.apply(slack.num()), shifts.apply(slack.den()));
    if den.constant_term() < Rational::from_integer(0.into()) {
        (num, den) = (-num, -den);
    }
    let alpha_ok = triple.alpha <= Rational::new(1.into(), 2.into()) && triple.alpha > Rational::from_integer(0.into());
    let ok = alpha_ok && num.all_coefficients_nonnegative() && strictly_positive_poly(&den);
    cert.witness = negative_witness(&num);
    cert.polynomials.push(("slack.num".into(), num));
    cert.polynomials.push(("slack.den".into(), den));
    if contraction_check(triple).is_ok() {
        cert.notes.push("gamma + beta alpha/(1 - alpha) = alpha holds identically");
    }
    cert.notes.push(NOTE_INDUCTION);
    cert.verdict = Verdict::from_bool(ok);
    Ok(cert)
}

pub fn certify_case(case: &CaseSpec) -> Result<CertificateBundle, CertifyError> {
    certify_case_with_triple(case, &bound_triple(case))
}

/// As [`certify_case`] with an explicit bound triple.
pub fn certify_case_with_triple(case: &CaseSpec, triple: &BoundTriple) -> Result<CertificateBundle, CertifyError> {
    certify_inner(case, triple).map_err(|e| CertifyError::InCase {
        case: case.to_string(),
        source: Box::new(e),
    })
}

fn certify_inner(case: &CaseSpec, triple: &BoundTriple) -> Result<CertificateBundle, CertifyError> {
    let n_start = case.start_index();
    let aux = auxiliary(case)?;
    let fixed_n = Shifts::for_case(case, 0);
    let open_n = Shifts::for_case(case, n_start as i64);
    let alpha = RatFunc::constant(triple.alpha.clone());
    debug_assert!(!aux.delta_n.uses(Var::N));

    let certificates = vec![
        rtilde_nonzero_certificate(case)?,
        rn_hurwitz_certificate(case)?,
        axis_certificate(case, Target::DeltaN, &aux.delta_n, &alpha, fixed_n)?,
        axis_certificate(case, Target::C, &aux.c, &triple.beta, open_n)?,
        axis_certificate(case, Target::Epsilon, &aux.epsilon, &triple.gamma, open_n)?,
        contraction_certificate(case, triple)?,
    ];
    Ok(CertificateBundle {
        case: *case,
        n_start,
        triple: triple.clone(),
        auxiliary: aux,
        certificates,
        trusted: vec![NOTE_PHRAGMEN_LINDELOF, NOTE_INDUCTION, NOTE_POINCARE, NOTE_SUSY],
    })
}

/// Runs cases in parallel; results keep the input order.
pub fn certify_all(cases: &[CaseSpec]) -> Vec<Result<CertificateBundle, CertifyError>> {
    cases.par_iter().map(certify_case).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::case::{MKind, Range};
    use crate::exactalg::parse_poly;
    use crate::quasisolution::TripleRow;

    fn one_minus_four() -> CaseSpec {
        CaseSpec::new(Range::Exact(1), MKind::Minus, Range::Exact(4))
    }

    #[test]
    fn exceptional_delta_polynomial() {
        let b = certify_case(&one_minus_four()).unwrap();
        let c = b.get(Target::DeltaN).unwrap();
        let want = parse_poly("s^6 + 89*s^5 + 2987*s^4 + 75391*s^3 + 606252*s^2 - 380160*s + 1843200").unwrap();
        assert_eq!(c.polynomials[0].1, want);
        assert_eq!(c.verdict, Verdict::PassWithFallback);
        assert!(b.pass(), "{:?}", b.failures());
    }

    #[test]
    fn corrupted_beta_fails_with_witness() {
        let case = CaseSpec::new(Range::Exact(2), MKind::One, Range::AtLeast(4));
        let mut t = TripleRow::Standard.triple();
        t.beta = RatFunc::constant(Rational::new(3.into(), 5.into()));
        let b = certify_case_with_triple(&case, &t).unwrap();
        let c = b.get(Target::Contraction).unwrap();
        assert_eq!(c.verdict, Verdict::Fail);
        assert!(c.witness.is_some());
        assert!(!b.pass());
    }

    #[test]
    fn serialization_is_deterministic() {
        let case = one_minus_four();
        let a = certify_case(&case).unwrap().serialize();
        let b = certify_case(&case).unwrap().serialize();
        assert_eq!(a, b);
        assert!(a.contains("[1_min_4/delta_N]"));
        assert!(a.contains("fallback.discriminant = "));
    }

    #[test]
    fn octic_through_bundle() {
        let case = CaseSpec::new(Range::Exact(1), MKind::Plus, Range::Exact(4));
        let c = rn_hurwitz_certificate(&case).unwrap();
        assert_eq!(c.verdict, Verdict::Pass);
        let cs = c.wall.as_ref().unwrap();
        assert_eq!(cs.len(), 8);
        assert_eq!(cs[0], Rational::new(1.into(), 44.into()));
    }
}

use std::fs;
use std::path::{Path, PathBuf};

use modecert::appendix::CaseFile;
use modecert::case::{CaseFilter, CaseSpec};
use modecert::casimir::{casimir_identity_check, eigen_check, grid_check, CasimirError, GridEntry};
use modecert::certify::{certify_all, wall_criterion, CertificateBundle};
use modecert::exactalg::{parse_poly, poly_to_string, MultiPoly, Var};
use modecert::odeverify::{l_zero_route, ode_suite, CheckGroup};
use modecert::recurrence::{sweep as run_sweep, Grid};

use crate::Selection;

/// Series length and tolerance for the `l = 0` hypergeometric route.
const L_ZERO_N: usize = 10_000;
const L_ZERO_TOL: f64 = 1e-3;
const L_ZERO_EXACT_TERMS: usize = 40;

fn filter(sel: &Selection) -> Result<CaseFilter, String> {
    match (sel.all, &sel.case) {
        (true, None) => Ok(CaseFilter::default()),
        (false, Some(src)) => CaseFilter::parse(src),
        (true, Some(_)) => Err("--all and --case are exclusive".into()),
        (false, None) => Err("one of --all or --case is required".into()),
    }
}

fn select(f: &CaseFilter) -> Result<Vec<CaseSpec>, String> {
    let cases = f.select();
    if cases.is_empty() {
        return Err("no case family matches the selection".into());
    }
    Ok(cases)
}

fn bundles(cases: &[CaseSpec]) -> Result<Vec<CertificateBundle>, String> {
    certify_all(cases).into_iter().map(|r| r.map_err(|e| e.to_string())).collect()
}

fn l_zero(d: Option<i64>) -> Result<bool, String> {
    println!("l = 0: hypergeometric route (no recurrence certificate)");
    let ds: Vec<i64> = match d {
        Some(d) if d < 3 => return Err(format!("d = {d} is below 3")),
        Some(d) => vec![d],
        None => (4..=9).collect(),
    };
    let mut ok = true;
    for d in ds {
        let report = l_zero_route(d, L_ZERO_N, L_ZERO_EXACT_TERMS).map_err(|e| e.to_string())?;
        let pass = report.pass(L_ZERO_TOL);
        ok &= pass;
        let worst = report.ratios.iter().map(|r| r.deviation()).fold(0.0, f64::max);
        println!(
            "  d = {d}: max |t_n/t_(n-1) - 1| at n = {L_ZERO_N} is {worst:.3e}, exact recurrence at {} real samples: {}",
            report.exact.len(),
            if report.exact.iter().all(|(_, e)| *e) { "holds" } else { "fails" }
        );
        println!("  d = {d}: {}", if pass { "pass" } else { "fail" });
    }
    Ok(ok)
}

pub fn certify(sel: &Selection, outdir: Option<&Path>) -> Result<bool, String> {
    let f = filter(sel)?;
    if f.is_l_zero() {
        return l_zero(f.d);
    }
    let cases = select(&f)?;
    let bundles = bundles(&cases)?;
    let mut ok = true;
    for b in &bundles {
        println!("{}: {} (N = {})", b.case, if b.pass() { "pass" } else { "fail" }, b.n_start);
        for c in &b.certificates {
            println!("  {:<15} {}", c.target.name(), c.verdict);
            if let Some((e, v)) = &c.witness {
                let mono = poly_to_string(&MultiPoly::monomial(v.clone(), *e));
                match &c.fallback {
                    Some(f) if c.verdict.is_pass() => {
                        println!("    negative coefficient {mono} cleared by the quadratic fallback, discriminant {}", f.discriminant)
                    }
                    _ => println!("    first negative coefficient: {mono}"),
                }
            }
        }
        ok &= b.pass();
    }
    let passed = bundles.iter().filter(|b| b.pass()).count();
    println!("{passed}/{} case families pass", bundles.len());
    if let Some(dir) = outdir {
        fs::create_dir_all(dir).map_err(|e| e.to_string())?;
        let report: Vec<String> = bundles.iter().map(|b| b.serialize()).collect();
        let path = dir.join("certificates.txt");
        fs::write(&path, report.join("\n")).map_err(|e| e.to_string())?;
        println!("machine report: {}", path.display());
    }
    Ok(ok)
}

pub fn emit_csv(sel: &Selection, outdir: &Path, with_descriptions: bool) -> Result<bool, String> {
    let f = filter(sel)?;
    if f.is_l_zero() {
        return Err("l = 0 has no data file".into());
    }
    let cases = select(&f)?;
    let bundles = bundles(&cases)?;
    fs::create_dir_all(outdir).map_err(|e| e.to_string())?;
    let mut written: Vec<PathBuf> = Vec::new();
    for b in &bundles {
        let file = CaseFile::from_bundle(b).map_err(|e| e.to_string())?;
        let path = file.write(outdir, with_descriptions).map_err(|e| e.to_string())?;
        let text = fs::read_to_string(&path).map_err(|e| e.to_string())?;
        file.verify_round_trip(&text).map_err(|e| format!("{}: {e}", path.display()))?;
        written.push(path);
    }
    for p in &written {
        println!("{}", p.display());
    }
    println!("{} files written, round-trip verified", written.len());
    Ok(true)
}

pub fn sweep(case: &str, grid: &str, nmax: usize, tol: f64) -> Result<bool, String> {
    let f = CaseFilter::parse(case)?;
    let (Some(l), Some(m), Some(d)) = (f.l, f.m, f.d) else {
        return Err("sweep needs concrete l, m and d".into());
    };
    if !(tol > 0.0) {
        return Err("tolerance must be positive".into());
    }
    if nmax < 2 {
        return Err("nmax must be at least 2".into());
    }
    let grid: Grid = grid.parse()?;
    let report = run_sweep(d, l, m, &grid, nmax, tol).map_err(|e| e.to_string())?;
    println!(
        "d = {d}, l = {l}, m = {} ({}): characteristic roots {{{}, {}}}",
        m.value(d, l),
        m.tag(),
        report.roots.0,
        report.roots.1
    );
    println!("re,im,r_re,r_im,deviation");
    for p in &report.points {
        println!("{},{},{:.12e},{:.12e},{:.3e}", p.lambda.re, p.lambda.im, p.r.re, p.r.im, p.deviation);
    }
    let flagged = report.flagged();
    for p in &flagged {
        println!(
            "flagged: lambda = {} + {}i, r_{nmax} = {:.9} + {:.9}i{}",
            p.lambda.re,
            p.lambda.im,
            p.r.re,
            p.r.im,
            if p.toward_other_root { " (toward -1/(d-2))" } else { "" }
        );
    }
    println!(
        "{}/{} points within {tol:e}; max deviation {:.3e}",
        report.points.len() - flagged.len(),
        report.points.len(),
        report.max_deviation()
    );
    Ok(report.pass())
}

fn print_entry(e: &GridEntry) {
    match &e.eigen {
        Ok(r) => {
            let list: Vec<String> = r.eigenvalues.iter().map(|(v, k)| format!("{v} (x{k})")).collect();
            println!(
                "d = {}, l = {}: eigenvalues {}; total {} = d * dim Y_l = {}",
                e.d,
                e.l,
                list.join(", "),
                r.total(),
                r.d * r.harmonic_dimension
            );
            if let Some(ranks) = &r.rank_multiplicities {
                let s: Vec<String> = ranks.iter().map(|k| k.to_string()).collect();
                println!("  multiplicities by exact rank: {}", s.join(", "));
            }
        }
        Err(err) => println!("d = {}, l = {}: eigenvalue check failed: {err}", e.d, e.l),
    }
    match &e.identity {
        Ok(()) => println!("  Casimir identity: holds"),
        Err(err) => println!("  Casimir identity: {err}"),
    }
    println!("  {}", if e.pass() { "pass" } else { "fail" });
}

pub fn casimir(d: Option<usize>, l: Option<usize>, all: bool) -> Result<bool, String> {
    let entries = match (all, d, l) {
        (true, None, None) => grid_check(&[3, 4, 5, 6, 7], &[1, 2, 3, 4]),
        (false, Some(d), Some(l)) => vec![GridEntry {
            d,
            l,
            eigen: eigen_check(d, l),
            identity: casimir_identity_check(d, l),
        }],
        _ => return Err("give either --all or both --d and --l".into()),
    };
    if let [GridEntry {
        eigen: Err(err @ (CasimirError::InvalidDimension(_) | CasimirError::SizeCapExceeded { .. })),
        ..
    }] = entries.as_slice()
    {
        return Err(err.to_string());
    }
    for e in &entries {
        print_entry(e);
    }
    Ok(entries.iter().all(GridEntry::pass))
}

pub fn ode_verify(symmetry_modes: bool) -> Result<bool, String> {
    let checks = ode_suite();
    let selected: Vec<_> = checks
        .iter()
        .filter(|c| !symmetry_modes || c.group == CheckGroup::SymmetryMode)
        .collect();
    for c in &selected {
        println!("{:?}: {}: {}", c.group, c.name, if c.pass { "zero" } else { "nonzero" });
    }
    let good = selected.iter().filter(|c| c.pass).count();
    if symmetry_modes {
        println!("{good}/{} residuals zero", selected.len());
    } else {
        println!("{good}/{} checks hold", selected.len());
    }
    Ok(good == selected.len())
}

/// Reads a univariate polynomial in any single variable as a polynomial in lambda.
fn as_lambda(p: MultiPoly) -> Result<MultiPoly, String> {
    match p.variables().as_slice() {
        [] | [Var::Lambda] => Ok(p),
        [v] => Ok(p.substitute(*v, &MultiPoly::var(Var::Lambda))),
        _ => Err("polynomial must be univariate".into()),
    }
}

pub fn wall(poly: Option<String>, file: Option<PathBuf>) -> Result<bool, String> {
    let src = match (poly, file) {
        (Some(p), None) => p,
        (None, Some(f)) => fs::read_to_string(&f).map_err(|e| format!("{}: {e}", f.display()))?,
        _ => return Err("give exactly one of --poly or --file".into()),
    };
    let p = as_lambda(parse_poly(src.trim()).map_err(|e| e.to_string())?)?;
    let report = wall_criterion(&p).map_err(|e| e.to_string())?;
    if let Some(k) = report.degenerate_at {
        println!("degenerate at step {k}");
    }
    for (k, c) in report.coefficients.iter().enumerate() {
        println!("c_{} = {c}", k + 1);
    }
    println!("hurwitz = {}", report.hurwitz);
    Ok(report.hurwitz)
}

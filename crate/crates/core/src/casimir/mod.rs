//! Finite verification of the coupling operator `K` on vector-valued
//! spherical harmonics: the eigenvalues `-l, 1, l+d-2`, their multiplicities
//! and the Casimir identity, for small `(d, l)`.

mod basis;
mod linalg;

pub use basis::{harmonic_basis, harmonic_basis_capped, harmonic_dimension, monomials, sphere_pairing, HarmonicBasis, DEFAULT_CAP};
pub use linalg::{bareiss_rank, kernel, rref};

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;

use crate::exactalg::Rational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CasimirError {
    #[error("dimension d = {0} is below 3")]
    InvalidDimension(usize),
    #[error("size {size} exceeds the cap {cap}")]
    SizeCapExceeded { size: usize, cap: usize },
    #[error("K maps a basis field outside the harmonic fields")]
    InvarianceViolated,
    #[error("(K + l)(K - 1)(K - (l + d - 2)) does not vanish")]
    MinimalPolynomialFailed,
    #[error("Casimir identity fails")]
    IdentityFailed,
    #[error("eigenspace dimensions {0:?} are inconsistent")]
    MultiplicityMismatch(Vec<Rational>),
    #[error("integer entries left the checked range")]
    Overflow,
}

/// Above this size the rank route is skipped and multiplicities come from traces only.
pub const RANK_LIMIT: usize = 200;

const ENTRY_BOUND: i128 = 1 << 100;

/// `C^d`-valued harmonic polynomials: component `k` occupies
/// `k*M .. (k+1)*M` with `M` the number of degree-`l` monomials.
pub struct FieldSpace {
    pub basis: HarmonicBasis,
    /// `moves[a][i*d + j]`: index and factor of `xi_i d_j` applied to monomial `a`.
    moves: Vec<Vec<Option<(usize, i128)>>>,
}

pub type Field = Vec<i128>;

impl FieldSpace {
    pub fn new(d: usize, l: usize) -> Result<FieldSpace, CasimirError> {
        FieldSpace::with_cap(d, l, DEFAULT_CAP)
    }

    pub fn with_cap(d: usize, l: usize, cap: usize) -> Result<FieldSpace, CasimirError> {
        let basis = harmonic_basis_capped(d, l, cap)?;
        let moves = basis
            .monomials
            .iter()
            .map(|a| {
                let mut row = vec![None; d * d];
                for i in 0..d {
                    for j in 0..d {
                        if a[j] > 0 {
                            let mut e = a.clone();
                            e[j] -= 1;
                            e[i] += 1;
                            row[i * d + j] = Some((basis.monomial_index(&e).expect("same degree"), a[j] as i128));
                        }
                    }
                }
                row
            })
            .collect();
        Ok(FieldSpace { basis, moves })
    }

    pub fn d(&self) -> usize {
        self.basis.d
    }

    pub fn l(&self) -> usize {
        self.basis.l
    }

    fn m(&self) -> usize {
        self.basis.monomials.len()
    }

    /// Number of stacked basis fields, `d * dim Y_l`.
    pub fn size(&self) -> usize {
        self.d() * self.basis.dimension()
    }

    /// Stacked basis field `e_k (x) b_i` for index `k * dim + i`.
    pub fn basis_field(&self, idx: usize) -> Field {
        let dim = self.basis.dimension();
        let (k, i) = (idx / dim, idx % dim);
        let m = self.m();
        let mut f = vec![0; self.d() * m];
        f[k * m..(k + 1) * m].copy_from_slice(&self.basis.vectors[i]);
        f
    }

    /// `out_dst += sign * xi_i d_j src`.
    fn add_xi_d(&self, src: &[i128], i: usize, j: usize, sign: i128, dst: &mut [i128]) {
        let d = self.d();
        for (a, c) in src.iter().enumerate() {
            if *c != 0 {
                if let Some((b, k)) = self.moves[a][i * d + j] {
                    dst[b] += sign * k * c;
                }
            }
        }
    }

    fn checked(f: Field) -> Result<Field, CasimirError> {
        if f.iter().any(|c| c.abs() >= ENTRY_BOUND) {
            Err(CasimirError::Overflow)
        } else {
            Ok(f)
        }
    }

    /// `(K f)_i = sum_j (xi_i d_j - xi_j d_i) f_j`.
    pub fn apply_k(&self, f: &[i128]) -> Result<Field, CasimirError> {
        let (d, m) = (self.d(), self.m());
        let mut out = vec![0; d * m];
        for i in 0..d {
            let (lo, hi) = (i * m, (i + 1) * m);
            for j in 0..d {
                let src = &f[j * m..(j + 1) * m];
                self.add_xi_d(src, i, j, 1, &mut out[lo..hi]);
                self.add_xi_d(src, j, i, -1, &mut out[lo..hi]);
            }
        }
        Self::checked(out)
    }

    /// `(rho(F_jk) f)_i = delta_ij f_k - delta_ik f_j + (xi_j d_k - xi_k d_j) f_i`.
    pub fn apply_rho(&self, f: &[i128], j: usize, k: usize) -> Result<Field, CasimirError> {
        let (d, m) = (self.d(), self.m());
        let mut out = vec![0; d * m];
        for (dst, src) in out[j * m..(j + 1) * m].iter_mut().zip(&f[k * m..(k + 1) * m]) {
            *dst += src;
        }
        for (dst, src) in out[k * m..(k + 1) * m].iter_mut().zip(&f[j * m..(j + 1) * m]) {
            *dst -= src;
        }
        for i in 0..d {
            let src = &f[i * m..(i + 1) * m];
            let dst = &mut out[i * m..(i + 1) * m];
            self.add_xi_d(src, j, k, 1, dst);
            self.add_xi_d(src, k, j, -1, dst);
        }
        Self::checked(out)
    }

    /// `K_jk = xi_j d_k - xi_k d_j` on a scalar polynomial.
    pub fn apply_scalar_k(&self, p: &[i128], j: usize, k: usize) -> Vec<i128> {
        let mut out = vec![0; p.len()];
        self.add_xi_d(p, j, k, 1, &mut out);
        self.add_xi_d(p, k, j, -1, &mut out);
        out
    }

    /// Coordinates of a field in the stacked basis; fails unless every component is harmonic.
    pub fn coordinates(&self, f: &[i128]) -> Result<Vec<Rational>, CasimirError> {
        let m = self.m();
        let mut out = Vec::with_capacity(self.size());
        for k in 0..self.d() {
            let comp = &f[k * m..(k + 1) * m];
            if !self.basis.is_harmonic(comp) {
                return Err(CasimirError::InvarianceViolated);
            }
            out.extend(self.basis.coordinates(comp));
        }
        Ok(out)
    }

    /// Coordinate `idx` of a harmonic field.
    fn coordinate(&self, f: &[i128], idx: usize) -> Rational {
        let dim = self.basis.dimension();
        let (k, i) = (idx / dim, idx % dim);
        let v = f[k * self.m() + self.basis.free[i]];
        Rational::new(BigInt::from(v), BigInt::from(self.basis.scale[i]))
    }
}

/// Matrix of `K` on the stacked basis; column `c` holds the coordinates of `K` applied to field `c`.
#[derive(Clone, Debug, PartialEq)]
pub struct OperatorMatrix {
    pub d: usize,
    pub l: usize,
    pub columns: Vec<Vec<Rational>>,
}

impl OperatorMatrix {
    pub fn size(&self) -> usize {
        self.columns.len()
    }

    pub fn entry(&self, row: usize, col: usize) -> &Rational {
        &self.columns[col][row]
    }

    pub fn trace(&self) -> Rational {
        (0..self.size()).map(|i| self.entry(i, i).clone()).sum()
    }
}

pub fn k_matrix(d: usize, l: usize) -> Result<OperatorMatrix, CasimirError> {
    let space = FieldSpace::new(d, l)?;
    k_matrix_in(&space)
}

pub fn k_matrix_in(space: &FieldSpace) -> Result<OperatorMatrix, CasimirError> {
    let columns = (0..space.size())
        .map(|c| space.coordinates(&space.apply_k(&space.basis_field(c))?))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(OperatorMatrix {
        d: space.d(),
        l: space.l(),
        columns,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EigenReport {
    pub d: usize,
    pub l: usize,
    pub harmonic_dimension: usize,
    /// `(eigenvalue, multiplicity)` from traces and the minimal polynomial.
    pub eigenvalues: Vec<(i64, usize)>,
    /// Multiplicities as `size - rank(K - m)`, when the size permits exact elimination.
    pub rank_multiplicities: Option<Vec<usize>>,
}

impl EigenReport {
    pub fn total(&self) -> usize {
        self.eigenvalues.iter().map(|(_, k)| k).sum()
    }
}

fn solve_vandermonde(values: &[i64; 3], moments: &[Rational; 3]) -> [Rational; 3] {
    // Lagrange form: m_a = (p2 - (b + c) p1 + b c p0)/((a - b)(a - c))
    let r = |x: i64| Rational::from_integer(x.into());
    std::array::from_fn(|i| {
        let a = values[i];
        let (b, c) = (values[(i + 1) % 3], values[(i + 2) % 3]);
        (&moments[2] - r(b + c) * &moments[1] + r(b * c) * &moments[0]) / r((a - b) * (a - c))
    })
}

/// Verifies `(K + l)(K - 1)(K - (l+d-2)) = 0` on every basis field and derives
/// multiplicities from `tr K`, `tr K^2`; cross-checks them by exact rank when small.
pub fn eigen_check(d: usize, l: usize) -> Result<EigenReport, CasimirError> {
    let space = FieldSpace::new(d, l)?;
    eigen_check_in(&space)
}

pub fn eigen_check_in(space: &FieldSpace) -> Result<EigenReport, CasimirError> {
    let (d, l) = (space.d(), space.l());
    let size = space.size();
    if l == 0 {
        for c in 0..size {
            if space.apply_k(&space.basis_field(c))?.iter().any(|x| *x != 0) {
                return Err(CasimirError::MinimalPolynomialFailed);
            }
        }
        return Ok(EigenReport {
            d,
            l,
            harmonic_dimension: space.basis.dimension(),
            eigenvalues: vec![(0, size)],
            rank_multiplicities: Some(vec![size]),
        });
    }
    let values = [-(l as i64), 1, (l + d) as i64 - 2];
    // x^3 + e2 x^2 + e1 x + e0 with roots `values`
    let e2 = -(values[0] + values[1] + values[2]) as i128;
    let e1 = (values[0] * values[1] + values[0] * values[2] + values[1] * values[2]) as i128;
    let e0 = -(values[0] * values[1] * values[2]) as i128;

    let mut t1 = Rational::zero();
    let mut t2 = Rational::zero();
    for c in 0..size {
        let v = space.basis_field(c);
        let kv = space.apply_k(&v)?;
        let k2v = space.apply_k(&kv)?;
        let k3v = space.apply_k(&k2v)?;
        let ok = (0..v.len()).all(|i| k3v[i] + e2 * k2v[i] + e1 * kv[i] + e0 * v[i] == 0);
        if !ok {
            return Err(CasimirError::MinimalPolynomialFailed);
        }
        space.coordinates(&kv)?;
        t1 += space.coordinate(&kv, c);
        t2 += space.coordinate(&k2v, c);
    }
    let moments = [Rational::from_integer(size.into()), t1, t2];
    let mults = solve_vandermonde(&values, &moments);
    let counts: Option<Vec<usize>> = mults
        .iter()
        .map(|m| if m.is_integer() { m.to_integer().to_usize() } else { None })
        .collect();
    let counts = counts.ok_or_else(|| CasimirError::MultiplicityMismatch(mults.to_vec()))?;

    let rank_multiplicities = if size <= RANK_LIMIT {
        let ranks: Vec<usize> = values
            .iter()
            .map(|&lam| {
                let rows: Vec<Vec<BigInt>> = (0..size)
                    .map(|c| {
                        let v = space.basis_field(c);
                        let kv = space.apply_k(&v).expect("checked above");
                        kv.iter().zip(&v).map(|(a, b)| BigInt::from(a - lam as i128 * b)).collect()
                    })
                    .collect();
                size - bareiss_rank(rows)
            })
            .collect();
        if ranks != counts {
            return Err(CasimirError::MultiplicityMismatch(mults.to_vec()));
        }
        Some(ranks)
    } else {
        None
    };
    Ok(EigenReport {
        d,
        l,
        harmonic_dimension: space.basis.dimension(),
        eigenvalues: values.iter().copied().zip(counts).collect(),
        rank_multiplicities,
    })
}

/// `sum_{j<k} rho(F_jk)^2 = -(d-1) + 2K - l(l+d-2)` on every basis field.
pub fn casimir_identity_check(d: usize, l: usize) -> Result<(), CasimirError> {
    let space = FieldSpace::new(d, l)?;
    casimir_identity_check_in(&space)
}

pub fn casimir_identity_check_in(space: &FieldSpace) -> Result<(), CasimirError> {
    let (d, l) = (space.d() as i128, space.l() as i128);
    let shift = -(d - 1) - l * (l + d - 2);
    for c in 0..space.size() {
        let v = space.basis_field(c);
        let mut lhs = vec![0i128; v.len()];
        for j in 0..space.d() {
            for k in j + 1..space.d() {
                let once = space.apply_rho(&v, j, k)?;
                let twice = space.apply_rho(&once, j, k)?;
                for (a, b) in lhs.iter_mut().zip(&twice) {
                    *a += b;
                }
            }
        }
        let kv = space.apply_k(&v)?;
        if (0..v.len()).any(|i| lhs[i] != 2 * kv[i] + shift * v[i]) {
            return Err(CasimirError::IdentityFailed);
        }
    }
    Ok(())
}

/// Each `K_jk` is skew with respect to the sphere pairing on `Y_l`.
pub fn skew_symmetry_check(d: usize, l: usize) -> Result<bool, CasimirError> {
    let space = FieldSpace::new(d, l)?;
    let b = &space.basis;
    for j in 0..d {
        for k in j + 1..d {
            let images: Vec<Vec<i128>> = b.vectors.iter().map(|p| space.apply_scalar_k(p, j, k)).collect();
            for (p, kp) in b.vectors.iter().zip(&images) {
                for (q, kq) in b.vectors.iter().zip(&images) {
                    if !(sphere_pairing(b, kp, q) + sphere_pairing(b, p, kq)).is_zero() {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

/// Eigenvalue of the radial field `xi` (in `Y_1^d`) under `K`, if it is an eigenfield.
pub fn radial_field_eigenvalue(d: usize) -> Result<Option<i64>, CasimirError> {
    let space = FieldSpace::new(d, 1)?;
    let m = space.basis.monomials.len();
    let mut f = vec![0i128; d * m];
    for i in 0..d {
        let mut e = vec![0u8; d];
        e[i] = 1;
        f[i * m + space.basis.monomial_index(&e).expect("linear monomial")] = 1;
    }
    let kf = space.apply_k(&f)?;
    let lam = kf[0];
    Ok((0..f.len()).all(|i| kf[i] == lam * f[i]).then_some(lam as i64))
}

#[derive(Clone, Debug)]
pub struct GridEntry {
    pub d: usize,
    pub l: usize,
    pub eigen: Result<EigenReport, CasimirError>,
    pub identity: Result<(), CasimirError>,
}

impl GridEntry {
    pub fn pass(&self) -> bool {
        self.identity.is_ok()
            && self
                .eigen
                .as_ref()
                .is_ok_and(|r| r.total() == r.d * r.harmonic_dimension)
    }
}

/// All `(d, l)` pairs, checked in parallel; output in input order.
pub fn grid_check(ds: &[usize], ls: &[usize]) -> Vec<GridEntry> {
    let pairs: Vec<(usize, usize)> = ds.iter().flat_map(|&d| ls.iter().map(move |&l| (d, l))).collect();
    pairs
        .par_iter()
        .map(|&(d, l)| match FieldSpace::new(d, l) {
            Ok(space) => GridEntry {
                d,
                l,
                eigen: eigen_check_in(&space),
                identity: casimir_identity_check_in(&space),
            },
            Err(e) => GridEntry {
                d,
                l,
                eigen: Err(e.clone()),
                identity: Err(e),
            },
        })
        .collect()
}

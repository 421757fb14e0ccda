use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::exactalg::Rational;

use super::linalg::kernel;
use super::CasimirError;

/// Default cap on `d * dim Y_l`.
pub const DEFAULT_CAP: usize = 2000;

fn binomial(n: i64, k: i64) -> usize {
    if k < 0 || n < k {
        return 0;
    }
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128) as usize
}

/// `C(l+d-1, d-1) - C(l+d-3, d-1)`.
pub fn harmonic_dimension(d: usize, l: usize) -> usize {
    let (d, l) = (d as i64, l as i64);
    binomial(l + d - 1, d - 1) - binomial(l + d - 3, d - 1)
}

/// Exponent vectors of degree `l` in `d` variables, lexicographically descending.
pub fn monomials(d: usize, l: usize) -> Vec<Vec<u8>> {
    fn go(d: usize, left: usize, prefix: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if prefix.len() + 1 == d {
            prefix.push(left as u8);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for k in (0..=left).rev() {
            prefix.push(k as u8);
            go(d, left - k, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if d > 0 {
        go(d, l, &mut Vec::with_capacity(d), &mut out);
    }
    out
}

/// Degree-`l` harmonic polynomials in `d` variables, as integer coefficient
/// vectors over [`monomials`]. Vector `i` is the kernel vector that is
/// `scale[i]` at monomial `free[i]` and zero at every other free monomial.
#[derive(Clone, Debug)]
pub struct HarmonicBasis {
    pub d: usize,
    pub l: usize,
    pub monomials: Vec<Vec<u8>>,
    pub vectors: Vec<Vec<i128>>,
    pub free: Vec<usize>,
    pub scale: Vec<i128>,
    index: HashMap<Vec<u8>, usize>,
    lower: Vec<Vec<u8>>,
}

impl HarmonicBasis {
    pub fn dimension(&self) -> usize {
        self.vectors.len()
    }

    pub fn monomial_index(&self, e: &[u8]) -> Option<usize> {
        self.index.get(e).copied()
    }

    /// `Delta p`, as coefficients over the degree `l - 2` monomials.
    pub fn laplacian(&self, p: &[i128]) -> Vec<i128> {
        laplacian_apply(&self.monomials, &self.lower, p)
    }

    pub fn is_harmonic(&self, p: &[i128]) -> bool {
        self.laplacian(p).iter().all(|c| *c == 0)
    }

    /// Coordinates of a harmonic `p` in the basis.
    pub fn coordinates(&self, p: &[i128]) -> Vec<Rational> {
        self.free
            .iter()
            .zip(&self.scale)
            .map(|(&f, &s)| Rational::new(BigInt::from(p[f]), BigInt::from(s)))
            .collect()
    }
}

fn laplacian_apply(monos: &[Vec<u8>], lower: &[Vec<u8>], p: &[i128]) -> Vec<i128> {
    let index: HashMap<&[u8], usize> = lower.iter().enumerate().map(|(i, e)| (e.as_slice(), i)).collect();
    let mut out = vec![0i128; lower.len()];
    for (a, c) in monos.iter().zip(p) {
        if *c == 0 {
            continue;
        }
        for i in 0..a.len() {
            let k = a[i] as i128;
            if k >= 2 {
                let mut e = a.clone();
                e[i] -= 2;
                out[index[e.as_slice()]] += k * (k - 1) * c;
            }
        }
    }
    out
}

pub fn harmonic_basis(d: usize, l: usize) -> Result<HarmonicBasis, CasimirError> {
    harmonic_basis_capped(d, l, DEFAULT_CAP)
}

pub fn harmonic_basis_capped(d: usize, l: usize, cap: usize) -> Result<HarmonicBasis, CasimirError> {
    if d < 3 {
        return Err(CasimirError::InvalidDimension(d));
    }
    let size = d * harmonic_dimension(d, l);
    if size > cap {
        return Err(CasimirError::SizeCapExceeded { size, cap });
    }
    let monos = monomials(d, l);
    let lower = if l >= 2 { monomials(d, l - 2) } else { Vec::new() };
    let index: HashMap<Vec<u8>, usize> = monos.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();

    // Laplacian matrix: one row per degree l - 2 monomial.
    let lower_index: HashMap<&[u8], usize> = lower.iter().enumerate().map(|(i, e)| (e.as_slice(), i)).collect();
    let mut rows = vec![vec![Rational::zero(); monos.len()]; lower.len()];
    for (col, a) in monos.iter().enumerate() {
        for i in 0..d {
            let k = a[i] as i64;
            if k >= 2 {
                let mut e = a.clone();
                e[i] -= 2;
                rows[lower_index[e.as_slice()]][col] = Rational::from_integer((k * (k - 1)).into());
            }
        }
    }
    let mut vectors = Vec::new();
    let mut free = Vec::new();
    let mut scale = Vec::new();
    for (f, v) in kernel(rows, monos.len()) {
        let lcm = v.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Option<Vec<i128>> = v.iter().map(|c| (c * &lcm).to_integer().to_i128()).collect();
        let ints = ints.ok_or(CasimirError::Overflow)?;
        scale.push(ints[f]);
        free.push(f);
        vectors.push(ints);
    }
    let basis = HarmonicBasis {
        d,
        l,
        monomials: monos,
        vectors,
        free,
        scale,
        index,
        lower,
    };
    debug_assert!(basis.vectors.iter().all(|v| basis.is_harmonic(v)));
    Ok(basis)
}

fn double_factorial_odd(k: u32) -> BigInt {
    // (k - 1)!! for even k
    let mut out = BigInt::one();
    let mut j = 1u32;
    while j < k {
        out *= j;
        j += 2;
    }
    out
}

/// `integral over the sphere of p q`, up to a positive factor depending only
/// on `d` and the total degree: monomial `xi^g` weighs `prod (g_i - 1)!!`
/// when all `g_i` are even, zero otherwise.
pub fn sphere_pairing(basis: &HarmonicBasis, p: &[i128], q: &[i128]) -> BigInt {
    let mut total = BigInt::zero();
    for (a, pa) in basis.monomials.iter().zip(p) {
        if *pa == 0 {
            continue;
        }
        for (b, qb) in basis.monomials.iter().zip(q) {
            if *qb == 0 {
                continue;
            }
            let mut w = BigInt::one();
            let mut even = true;
            for i in 0..basis.d {
                let g = (a[i] + b[i]) as u32;
                if g % 2 == 1 {
                    even = false;
                    break;
                }
                w *= double_factorial_odd(g);
            }
            if even {
                total += w * BigInt::from(*pa) * BigInt::from(*qb);
            }
        }
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimensions() {
        assert_eq!(harmonic_basis(3, 1).unwrap().dimension(), 3);
        assert_eq!(harmonic_basis(3, 2).unwrap().dimension(), 5);
        assert_eq!(harmonic_basis(5, 3).unwrap().dimension(), 30);
        assert_eq!(harmonic_dimension(5, 3), 30);
        assert_eq!(harmonic_basis(4, 0).unwrap().dimension(), 1);
    }

    #[test]
    fn basis_is_harmonic() {
        let b = harmonic_basis(4, 3).unwrap();
        assert!(b.vectors.iter().all(|v| b.is_harmonic(v)));
        assert!(!b.is_harmonic(&{
            let mut v = vec![0; b.monomials.len()];
            v[b.monomial_index(&[2, 1, 0, 0]).unwrap()] = 1;
            v
        }));
    }

    #[test]
    fn cap_enforced() {
        assert!(matches!(
            harmonic_basis_capped(6, 4, 100),
            Err(CasimirError::SizeCapExceeded { .. })
        ));
        assert!(matches!(harmonic_basis(2, 1), Err(CasimirError::InvalidDimension(2))));
    }

    #[test]
    fn pairing_of_coordinates() {
        // Coordinate functions on the sphere are orthogonal with positive norm.
        let b = harmonic_basis(3, 1).unwrap();
        let x = b.vectors[0].clone();
        assert!(sphere_pairing(&b, &x, &x) > BigInt::zero());
        assert_eq!(sphere_pairing(&b, &b.vectors[0], &b.vectors[1]), BigInt::zero());
    }
}

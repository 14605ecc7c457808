//! Oracles shared by the integration tests. Nothing here calls into the
//! library's number theory; each function recomputes its answer the slow way.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `r(n)` for `n <= max` by walking the lattice disc.
pub fn lattice_r(max: u64) -> Vec<u64> {
    let mut out = vec![0u64; max as usize + 1];
    let m = (max as f64).sqrt() as i64 + 1;
    for a in -m..=m {
        for b in -m..=m {
            let n = (a * a + b * b) as u64;
            if n >= 1 && n <= max {
                out[n as usize] += 1;
            }
        }
    }
    out
}

/// Number of divisors by trial division.
pub fn divisor_count(n: u64) -> u64 {
    (1..=n).filter(|&d| n.is_multiple_of(d)).count() as u64
}

/// Ideals of `Z[i] x Z[i]` by norm: pairs of first-quadrant generators `(g1, g2)`
/// with `N(g1) N(g2) = n`, tallied for `n <= max`.
pub fn gaussian_ideal_pairs(max: u64) -> Vec<u64> {
    let m = (max as f64).sqrt() as i64 + 1;
    let mut gens = Vec::new();
    for a in 1..=m {
        for b in 0..=m {
            let n = (a * a + b * b) as u64;
            if n <= max {
                gens.push(n);
            }
        }
    }
    let mut out = vec![0u64; max as usize + 1];
    for &n1 in &gens {
        for &n2 in &gens {
            if n1 * n2 <= max {
                out[(n1 * n2) as usize] += 1;
            }
        }
    }
    out
}

/// Fraction-free (Bareiss) determinant.
pub fn bareiss(mut m: Vec<Vec<i128>>) -> i128 {
    let n = m.len();
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n {
        if m[k][k] == 0 {
            let Some(p) = (k + 1..n).find(|&r| m[r][k] != 0) else {
                return 0;
            };
            m.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    sign * m[n - 1][n - 1]
}

/// An element of `Z[i] e1 + Z[i] e2` as `(a1, b1, a2, b2)`.
pub type Quad4 = [i128; 4];

pub fn quad4_mul(x: Quad4, y: Quad4) -> Quad4 {
    [x[0] * y[0] - x[1] * y[1], x[0] * y[1] + x[1] * y[0], x[2] * y[2] - x[3] * y[3], x[2] * y[3] + x[3] * y[2]]
}

/// Discriminant from the trace of the regular representation on a basis
/// given in the coordinates `(a1, b1, a2, b2)` whose first `dim` entries are used.
///
/// `dim = 2` is `Z e1 + Z e2` (coordinates `a1, a2`), `dim = 4` is `Z[i] e1 + Z[i] e2`.
pub fn regular_trace_discriminant(dim: usize) -> i128 {
    let basis: Vec<Quad4> = if dim == 2 {
        vec![[1, 0, 0, 0], [0, 0, 1, 0]]
    } else {
        vec![[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]
    };
    let coords = |w: Quad4| -> Vec<i128> {
        if dim == 2 {
            vec![w[0], w[2]]
        } else {
            w.to_vec()
        }
    };
    // trace of multiplication by w: sum of the diagonal of its matrix
    let trace = |w: Quad4| -> i128 { (0..dim).map(|c| coords(quad4_mul(w, basis[c]))[c]).sum() };
    let m: Vec<Vec<i128>> = basis.iter().map(|&a| basis.iter().map(|&b| trace(quad4_mul(a, b))).collect()).collect();
    bareiss(m)
}

/// Polynomials with Gaussian-rational coefficients, low degree first.
pub type GPoly = Vec<(BigRational, BigRational)>;

pub fn gpoly_one() -> GPoly {
    vec![(BigRational::one(), BigRational::zero())]
}

/// `p * (X - root)`.
pub fn gpoly_mul_linear(p: &GPoly, root: &(BigRational, BigRational)) -> GPoly {
    let mut out: GPoly = vec![(BigRational::zero(), BigRational::zero()); p.len() + 1];
    for (k, (re, im)) in p.iter().enumerate() {
        out[k + 1].0 += re;
        out[k + 1].1 += im;
        // - root * c
        out[k].0 -= &root.0 * re - &root.1 * im;
        out[k].1 -= &root.0 * im + &root.1 * re;
    }
    out
}

pub fn big(n: i64) -> BigInt {
    BigInt::from(n)
}

/// Minimal polynomial coefficients of a Gaussian integer `a + b i`, low degree first:
/// `X - a` when real, else `X^2 - 2a X + a^2 + b^2`.
pub fn gauss_int_minpoly(a: i64, b: i64) -> Vec<i64> {
    if b == 0 {
        vec![-a, 1]
    } else {
        vec![a * a + b * b, -2 * a, 1]
    }
}

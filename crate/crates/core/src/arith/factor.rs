use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::Integer;

const TRIAL_LIMIT: u64 = 1_000_000;
const MR_BASES: [u64; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    acc
}

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 1_000_000 {
        return (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d));
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'bases: for &a in &MR_BASES[..12] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

/// Miller-Rabin with the first thirteen primes as bases; deterministic below `3.3e24`.
pub fn is_prime(n: &Integer) -> bool {
    if *n < BigInt::from(2) {
        return false;
    }
    if let Some(small) = n.to_u64() {
        return is_prime_u64(small);
    }
    for &p in &MR_BASES {
        if (n % p).is_zero() {
            return false;
        }
    }
    let one = BigInt::one();
    let n_minus_1 = n - &one;
    let s = n_minus_1.trailing_zeros().expect("n - 1 > 0");
    let d = &n_minus_1 >> s;
    'bases: for &a in &MR_BASES {
        let mut x = BigInt::from(a).modpow(&d, n);
        if x == one || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&BigInt::from(2), n);
            if x == n_minus_1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

/// Prime factorization of `|n|` as `(p, e)` pairs with increasing `p`.
///
/// Trial division up to `10^6`, then Pollard-Brent on the cofactor.
/// Returns an empty list for `n = +-1`.
///
/// # Panics
/// If `n` is zero.
pub fn factor_integer(n: &Integer) -> Vec<(Integer, u32)> {
    assert!(!n.is_zero(), "cannot factor zero");
    let mut m = n.abs();
    let mut primes: Vec<Integer> = Vec::new();
    let mut d = 2u64;
    while d <= TRIAL_LIMIT {
        // machine words while the cofactor fits
        if let Some(mut small) = m.to_u64() {
            while d <= TRIAL_LIMIT && d.saturating_mul(d) <= small {
                while small % d == 0 {
                    primes.push(BigInt::from(d));
                    small /= d;
                }
                d += if d == 2 { 1 } else { 2 };
            }
            m = BigInt::from(small);
            break;
        }
        let bd = BigInt::from(d);
        if &bd * &bd > m {
            break;
        }
        while (&m % &bd).is_zero() {
            primes.push(bd.clone());
            m /= &bd;
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if m.to_u64().is_some_and(|v| v > 1 && d.saturating_mul(d) > v) {
        primes.push(m.clone());
        m = BigInt::one();
    }
    if !m.is_one() {
        split_large(m, &mut primes);
    }
    primes.sort();
    let mut out: Vec<(Integer, u32)> = Vec::new();
    for p in primes {
        match out.last_mut() {
            Some((q, e)) if *q == p => *e += 1,
            _ => out.push((p, 1)),
        }
    }
    out
}

fn split_large(m: Integer, out: &mut Vec<Integer>) {
    if m.is_one() {
        return;
    }
    if is_prime(&m) {
        out.push(m);
        return;
    }
    let f = pollard_brent(&m);
    let cof = &m / &f;
    split_large(f, out);
    split_large(cof, out);
}

fn pollard_brent(n: &Integer) -> Integer {
    if n.is_even() {
        return BigInt::from(2);
    }
    let one = BigInt::one();
    let mut c = one.clone();
    loop {
        let step = |x: &Integer| (x * x + &c) % n;
        let (mut y, mut r, mut q) = (BigInt::from(2), 1u64, one.clone());
        let (mut x, mut ys);
        let mut g: Integer;
        let m = 128u64;
        loop {
            x = y.clone();
            for _ in 0..r {
                y = step(&y);
            }
            let mut k = 0u64;
            loop {
                ys = y.clone();
                for _ in 0..m.min(r - k) {
                    y = step(&y);
                    q = (q * (&x - &y).abs()) % n;
                }
                g = q.gcd(n);
                k += m;
                if k >= r || !g.is_one() {
                    break;
                }
            }
            r *= 2;
            if !g.is_one() {
                break;
            }
        }
        if g == *n {
            loop {
                ys = step(&ys);
                g = (&x - &ys).abs().gcd(n);
                if !g.is_one() {
                    break;
                }
            }
        }
        if g != *n {
            return g;
        }
        c += 1;
    }
}

/// A square root of `-1` modulo a prime `p = 2` or `p = 1 mod 4`.
///
/// Takes the first quadratic non-residue `c` found by counting up from 2 and
/// returns `c^((p-1)/4)`.
pub fn sqrt_minus_one_mod(p: &Integer) -> Option<Integer> {
    let two = BigInt::from(2);
    if *p == two {
        return Some(BigInt::one());
    }
    if !(p % 4u32).is_one() || !is_prime(p) {
        return None;
    }
    let p_minus_1 = p - 1u32;
    let half = &p_minus_1 >> 1;
    let quarter = &p_minus_1 >> 2;
    let mut c = two;
    loop {
        if c.modpow(&half, p) == p_minus_1 {
            return Some(c.modpow(&quarter, p));
        }
        c += 1u32;
    }
}

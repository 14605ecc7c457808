//! Ideal-counting coefficients `a(n)`, Dirichlet convolution and truncated zeta sums.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::integers::{ExtensionDescriptor, FieldDescriptor};

/// What is being counted: ideals of a field or non-degenerate ideals of an extension.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CountingField {
    Field(FieldDescriptor),
    Extension(ExtensionDescriptor),
}

impl CountingField {
    pub fn rational() -> Self {
        CountingField::Field(FieldDescriptor::Rational)
    }

    pub fn gaussian() -> Self {
        CountingField::Field(FieldDescriptor::gaussian())
    }

    pub fn hyperbolic() -> Self {
        CountingField::Extension(ExtensionDescriptor::hyperbolic())
    }

    pub fn quartic() -> Self {
        CountingField::Extension(ExtensionDescriptor::quartic())
    }
}

impl fmt::Display for CountingField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CountingField::Field(k) if *k == FieldDescriptor::gaussian() => f.write_str("Qi"),
            CountingField::Field(k) => k.fmt(f),
            CountingField::Extension(l) => l.fmt(f),
        }
    }
}

impl FromStr for CountingField {
    type Err = Error;

    /// `Q`, `Qi`, `Q(i)`, `Q(sqrt:D)`, `Qh`, `QB` or `custom:K1,K2`.
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "Qi" => Ok(Self::gaussian()),
            t if t == "Q" || t.starts_with("Q(") => Ok(CountingField::Field(t.parse()?)),
            t => Ok(CountingField::Extension(t.parse()?)),
        }
    }
}

/// `a(1), ..., a(N)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoefficientTable {
    values: Vec<u64>,
}

impl CoefficientTable {
    pub fn new(values: Vec<u64>) -> Self {
        CoefficientTable { values }
    }

    /// `a(n) = 1` for `n <= len`.
    pub fn ones(len: usize) -> Self {
        CoefficientTable::new(vec![1; len])
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `a(n)`, 1-based.
    pub fn get(&self, n: usize) -> u64 {
        self.values[n - 1]
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    /// `(n, a(n))` pairs.
    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (usize, u64)> + '_ {
        self.values.iter().enumerate().map(|(k, &a)| (k + 1, a))
    }

    /// Lines `n,a_n` under a header.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,a_n\n");
        for (n, a) in self.iter() {
            out.push_str(&format!("{n},{a}\n"));
        }
        out
    }
}

/// `r(n) = 4 (d_1(n) - d_3(n))`, the number of Gaussian integers of norm `n`.
pub fn jacobi_r(n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::InvalidArgument("r(n) needs n >= 1".into()));
    }
    let (mut d1, mut d3) = (0u64, 0u64);
    for d in crate::arith::divisors(n) {
        match d % 4 {
            1 => d1 += 1,
            3 => d3 += 1,
            _ => {}
        }
    }
    Ok(4 * (d1 - d3))
}

/// `r(1..=len)` by sieving the odd divisors.
fn r_table(len: usize) -> Vec<u64> {
    let mut acc = vec![0i64; len + 1];
    for d in (1..=len).step_by(2) {
        let chi = if d % 4 == 1 { 1 } else { -1 };
        for m in (d..=len).step_by(d) {
            acc[m] += chi;
        }
    }
    acc[1..].iter().map(|&v| 4 * v as u64).collect()
}

/// `d(1..=len)`.
fn divisor_count_table(len: usize) -> Vec<u64> {
    let mut acc = vec![0u64; len + 1];
    for d in 1..=len {
        for m in (d..=len).step_by(d) {
            acc[m] += 1;
        }
    }
    acc.split_off(1)
}

fn field_table(k: FieldDescriptor, len: usize) -> Result<CoefficientTable> {
    match k {
        FieldDescriptor::Rational => Ok(CoefficientTable::ones(len)),
        FieldDescriptor::Quadratic(-1) => Ok(CoefficientTable::new(r_table(len).into_iter().map(|r| r / 4).collect())),
        other => Err(Error::Unsupported(format!("ideal counts over {other}"))),
    }
}

/// Exact ideal counts for `n <= len`.
///
/// `Q`: all ones. `Q(i)`: `r(n)/4`. `Qh`: the divisor function. `QB`:
/// `(r * r)(n) / 16`. Other extensions with `Q` or `Q(i)` components use the
/// convolution of their component tables.
pub fn coefficient_table(field: CountingField, len: usize) -> Result<CoefficientTable> {
    if len == 0 {
        return Err(Error::InvalidArgument("table length must be at least 1".into()));
    }
    match field {
        CountingField::Field(k) => field_table(k, len),
        CountingField::Extension(l) if l == ExtensionDescriptor::hyperbolic() => {
            Ok(CoefficientTable::new(divisor_count_table(len)))
        }
        CountingField::Extension(l) if l == ExtensionDescriptor::quartic() => {
            let r = CoefficientTable::new(r_table(len));
            let rr = dirichlet_convolve(&r, &r)?;
            let values = rr
                .values
                .into_iter()
                .map(|v| {
                    assert_eq!(v % 16, 0, "(r*r)(n) is divisible by 16");
                    v / 16
                })
                .collect();
            Ok(CoefficientTable::new(values))
        }
        CountingField::Extension(l) => dirichlet_convolve(&field_table(l.k1, len)?, &field_table(l.k2, len)?),
    }
}

/// `(f * g)(n) = sum over d | n of f(d) g(n/d)`.
pub fn dirichlet_convolve(f: &CoefficientTable, g: &CoefficientTable) -> Result<CoefficientTable> {
    if f.len() != g.len() {
        return Err(Error::LengthMismatch(f.len(), g.len()));
    }
    let len = f.len();
    let mut out = vec![0u64; len];
    for d in 1..=len {
        let fd = f.get(d);
        if fd == 0 {
            continue;
        }
        for q in 1..=len / d {
            out[d * q - 1] += fd * g.get(q);
        }
    }
    Ok(CoefficientTable::new(out))
}

/// `sum a(n) / n^s` over the table; terms are added smallest first.
pub fn zeta_sum(table: &CoefficientTable, s: f64) -> Result<f64> {
    if s.is_nan() || s <= 1.0 || s.is_infinite() {
        return Err(Error::InvalidArgument(format!("zeta needs s > 1, got {s}")));
    }
    Ok(table.iter().rev().map(|(n, a)| a as f64 / (n as f64).powf(s)).sum())
}

/// Partial sum of the zeta function of `field` up to `n <= len`.
pub fn zeta_partial(field: CountingField, s: f64, len: usize) -> Result<f64> {
    if s.is_nan() || s <= 1.0 {
        return Err(Error::InvalidArgument(format!("zeta needs s > 1, got {s}")));
    }
    zeta_sum(&coefficient_table(field, len)?, s)
}

/// Number of ideals of norm `n`, by listing generators up to units.
pub fn brute_force_ideal_count(k: FieldDescriptor, n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::InvalidArgument("ideal norm must be at least 1".into()));
    }
    match k {
        FieldDescriptor::Rational => Ok(1),
        FieldDescriptor::Quadratic(-1) => {
            // one generator per ideal in the first quadrant: a > 0, b >= 0
            let mut count = 0;
            let mut a = 1u64;
            while a * a <= n {
                let rest = n - a * a;
                let b = rest.isqrt();
                if b * b == rest {
                    count += 1;
                }
                a += 1;
            }
            Ok(count)
        }
        other => Err(Error::Unsupported(format!("ideal enumeration over {other}"))),
    }
}

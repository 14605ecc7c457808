//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the report.

mod common;

use std::collections::HashSet;
use std::io::Write;
use std::time::Instant;

use num_traits::{One, Zero};
use rand::Rng;

use bicomplex::arith::{int, is_prime, rat, IntPoly, RatPoly, Rational};
use bicomplex::census::{census, numeric_roots, real_count, Locus, RootSet};
use bicomplex::integers::{factor, is_prime_element, rational_prime_profile, ExtensionDescriptor, PrimeForm};
use bicomplex::minpoly::{eval_at_bicomplex, minpoly_bicomplex, quartic_charpoly};
use bicomplex::radix::{decode, digit_set, encode, RadixBase, RadixValue};
use bicomplex::zeta::{coefficient_table, dirichlet_convolve, jacobi_r, zeta_sum, CountingField};
use bicomplex::{Axis, BicomplexElement, GaussRat, NormValue, Scalar};

use common::*;

/// Imaginary parts below this count as real in the numeric root oracle.
const REAL_TOL: f64 = 1e-8;
/// Convergence threshold handed to the numeric root finder.
const ROOT_STEP_TOL: f64 = 1e-12;
/// Allowed gap between the truncated hyperbolic zeta sum and the squared zeta sum.
const ZETA_TOL: f64 = 2e-3;
/// Longest expansion accepted on the radix grids.
const RADIX_MAX_DIGITS: usize = 64;

/// Criteria known to fail; see the decisions ledger. Each must still fail.
const EXPECTED_FAILURES: &[&str] = &["11a", "11b", "11c"];

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, &'static str, Box<dyn Fn() -> Outcome + 'a>);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn qh() -> ExtensionDescriptor {
    ExtensionDescriptor::hyperbolic()
}

fn qb() -> ExtensionDescriptor {
    ExtensionDescriptor::quartic()
}

fn c1_minpoly_example() -> Outcome {
    let w = BicomplexElement::from_cartesian_ints(1, 1, 1, -1);
    let m = minpoly_bicomplex(&w);
    let want = IntPoly::from_i64(&[-8, 4, -2, 1]).unwrap();
    ensure(m.poly == want, || format!("minimal polynomial {} != {want}", m.poly))?;
    let comps: HashSet<Scalar> = [w.c1().clone(), w.c2().clone()].into_iter().collect();
    let want_c: HashSet<Scalar> = [Scalar::gauss(2, 0), Scalar::gauss(0, 2)].into_iter().collect();
    ensure(comps == want_c, || format!("components {}", w.idempotent_string()))?;
    Ok(format!("{} ; components {}", m.poly, w.idempotent_string()))
}

fn random_squarefree(rng: &mut impl Rng) -> IntPoly {
    loop {
        let deg = rng.gen_range(1..=8);
        let mut c: Vec<i64> = (0..=deg).map(|_| rng.gen_range(-9..=9)).collect();
        if c[deg] == 0 {
            c[deg] = rng.gen_range(1..=9);
        }
        let Ok(p) = IntPoly::primitive_part(&c.iter().map(|&v| int(v)).collect::<Vec<_>>()) else {
            continue;
        };
        if p.is_squarefree().unwrap_or(false) {
            return p;
        }
    }
}

fn c2_census() -> Outcome {
    let p = IntPoly::from_i64(&[-8, 4, -2, 1]).unwrap();
    let c = census(&p).map_err(|e| e.to_string())?;
    let got = (c.r, c.two_s_i, c.two_s_j, c.two_s_k, c.four_d);
    ensure(got == (1, 2, 0, 2, 4) && c.total() == 9, || format!("example census {got:?}"))?;
    let mut rng = rng(2);
    for k in 0..200 {
        let p = random_squarefree(&mut rng);
        let c = census(&p).map_err(|e| e.to_string())?;
        let n = p.degree() as u64;
        ensure(c.holds() && c.n == n && c.r + 2 * c.s == n && c.total() == n * n, || {
            format!("census invariants fail for {p}: {c:?}")
        })?;
        let roots = numeric_roots(&p, ROOT_STEP_TOL).map_err(|e| format!("poly #{k} {p}: {e}"))?;
        let r = real_count(&roots, REAL_TOL) as u64;
        ensure(r == c.r, || format!("Sturm r={} but numeric r={r} for {p}", c.r))?;
    }
    Ok("example (1,2,0,2,4), 9 = 3^2; 200 random polynomials agree with the numeric oracle".into())
}

/// Conjugation-closed root sets of size <= 6 from a fixed pool.
fn root_pool_sets() -> Vec<Vec<GaussRat>> {
    let reals = [rat(1, 1), rat(2, 1), rat(-1, 1), rat(3, 1), rat(1, 2)];
    let pairs = [(0, 1), (0, 2), (1, 1), (2, 1), (-1, 2)];
    let mut out = Vec::new();
    for rmask in 0u32..(1 << reals.len()) {
        for pmask in 0u32..(1 << pairs.len()) {
            let size = rmask.count_ones() + 2 * pmask.count_ones();
            if size == 0 || size > 6 {
                continue;
            }
            let mut set = Vec::new();
            for (k, r) in reals.iter().enumerate() {
                if rmask & (1 << k) != 0 {
                    set.push(GaussRat::real(r.clone()));
                }
            }
            for (k, &(a, b)) in pairs.iter().enumerate() {
                if pmask & (1 << k) != 0 {
                    set.push(GaussRat::from_ints(a, b));
                    set.push(GaussRat::from_ints(a, -b));
                }
            }
            out.push(set);
        }
    }
    out
}

fn to_pair(g: &GaussRat) -> (Rational, Rational) {
    (g.re.clone(), g.im.clone())
}

fn c3_locus_factors() -> Outcome {
    let sets = root_pool_sets();
    let must_have = [
        vec![
            GaussRat::from_ints(1, 0),
            GaussRat::from_ints(2, 0),
            GaussRat::from_ints(0, 1),
            GaussRat::from_ints(0, -1),
        ],
        vec![GaussRat::from_ints(2, 0), GaussRat::from_ints(0, 2), GaussRat::from_ints(0, -2)],
    ];
    for m in &must_have {
        let want: HashSet<_> = m.iter().cloned().collect();
        ensure(sets.iter().any(|s| s.iter().cloned().collect::<HashSet<_>>() == want), || {
            "pool misses a required set".into()
        })?;
    }
    for (k, roots) in sets.iter().enumerate() {
        let lead = int(1 + (k % 3) as i64);
        let set = RootSet::new(roots.clone(), lead.clone()).map_err(|e| e.to_string())?;
        let n = roots.len() as u32;
        // P = a_n prod (X - a), expanded by the oracle
        let mut p = gpoly_one();
        for a in roots {
            p = gpoly_mul_linear(&p, &to_pair(a));
        }
        ensure(p.iter().all(|(_, im)| im.is_zero()), || "P has non-real coefficients".into())?;
        let lead_r = Rational::from_integer(lead.clone());
        let p_rat = RatPoly::new(p.iter().map(|(re, _)| re * &lead_r).collect());
        ensure(p_rat == set.polynomial(), || format!("polynomial mismatch for set #{k}"))?;
        // prod over the n^2 bicomplex roots, one component at a time
        let enumerated = set.enumerate();
        ensure(enumerated.len() == (n * n) as usize, || "wrong root count".into())?;
        let (mut e1, mut e2) = (gpoly_one(), gpoly_one());
        for (w, locus) in &enumerated {
            let (a, b) = (w.c1().as_gauss().unwrap(), w.c2().as_gauss().unwrap());
            e1 = gpoly_mul_linear(&e1, &to_pair(&a));
            e2 = gpoly_mul_linear(&e2, &to_pair(&b));
            ensure(*locus == Locus::classify(w), || "locus mismatch".into())?;
        }
        ensure(e1 == e2 && e1.iter().all(|(_, im)| im.is_zero()), || {
            format!("bicomplex product is not a real polynomial for set #{k}")
        })?;
        let prod = RatPoly::new(e1.into_iter().map(|(re, _)| re).collect());
        let lhs = prod.scale(&lead_r.pow(n as i32));
        ensure(lhs == p_rat.pow(n), || format!("a_n^n prod (X - psi) != P^n for set #{k}"))?;
        let f = set.locus_factors();
        ensure(f.product() == prod, || format!("locus factor product mismatch for set #{k}"))?;
        let sizes = set.locus_sizes().as_array();
        ensure(f.degrees() == sizes, || format!("degrees {:?} vs sizes {sizes:?}", f.degrees()))?;
    }
    Ok(format!("{} root sets, exact expansion", sets.len()))
}

fn c4_discriminants() -> Outcome {
    let (dh, db) = (qh().discriminant(), qb().discriminant());
    ensure(dh == int(1) && db == int(16), || format!("disc {dh}, {db}"))?;
    let (th, tb) = (
        qh().trace_form_discriminant().map_err(|e| e.to_string())?,
        qb().trace_form_discriminant().map_err(|e| e.to_string())?,
    );
    ensure(th == int(1) && tb == int(16), || format!("trace forms {th}, {tb}"))?;
    let (oh, ob) = (regular_trace_discriminant(2), regular_trace_discriminant(4));
    ensure(oh == 1 && ob == 16, || format!("oracle determinants {oh}, {ob}"))?;
    Ok("disc(Qh)=1, disc(QB)=16; trace-matrix determinants 1 and 16".into())
}

fn as_quad4(w: &BicomplexElement) -> Quad4 {
    let g = |s: &Scalar| {
        let g = s.as_gauss().unwrap();
        (g.re.to_integer().try_into().unwrap(), g.im.to_integer().try_into().unwrap())
    };
    let ((a1, b1), (a2, b2)): ((i128, i128), (i128, i128)) = (g(w.c1()), g(w.c2()));
    [a1, b1, a2, b2]
}

fn c5_units() -> Outcome {
    // Z_h: components in [-10, 10]
    let box_h: Vec<Quad4> = (-10..=10).flat_map(|a| (-10..=10).map(move |b| [a, 0, b, 0])).collect();
    let units_h: HashSet<Quad4> =
        box_h.iter().filter(|&&w| box_h.iter().any(|&v| quad4_mul(w, v) == [1, 0, 1, 0])).copied().collect();
    let lib_h: HashSet<Quad4> = qh().units().unwrap().iter().map(as_quad4).collect();
    let want_h: HashSet<Quad4> = [[1, 0, 1, 0], [-1, 0, -1, 0], [1, 0, -1, 0], [-1, 0, 1, 0]].into_iter().collect();
    ensure(units_h == want_h && lib_h == want_h, || format!("Z_h units {units_h:?}"))?;
    let j = as_quad4(&BicomplexElement::j());
    ensure(want_h.contains(&j) && want_h.contains(&[-j[0], 0, -j[2], 0]), || "+-j missing".into())?;
    let lib_group = qh().unit_group();
    ensure(lib_group.order == Some(4), || "unit_group(Qh) order".into())?;
    // Z_B: Gaussian components of norm <= 10
    let gauss: Vec<(i128, i128)> =
        (-3..=3).flat_map(|a| (-3..=3).map(move |b| (a, b))).filter(|(a, b)| a * a + b * b <= 10).collect();
    let box_b: Vec<Quad4> = gauss.iter().flat_map(|&(a, b)| gauss.iter().map(move |&(c, d)| [a, b, c, d])).collect();
    let units_b: HashSet<Quad4> =
        box_b.iter().filter(|&&w| box_b.iter().any(|&v| quad4_mul(w, v) == [1, 0, 1, 0])).copied().collect();
    let lib_b: HashSet<Quad4> = qb().units().unwrap().iter().map(as_quad4).collect();
    ensure(units_b.len() == 16 && units_b == lib_b, || format!("{} Z_B units found", units_b.len()))?;
    let g = qb().unit_group();
    ensure(g.order == Some(16) && g.structure == "Z/4 x Z/4", || format!("{g:?}"))?;
    Ok(format!(
        "|Z_h^x| = 4 = {{+-1, +-j}}, |Z_B^x| = 16 ({}); search boxes {} and {}",
        g.structure,
        box_h.len(),
        box_b.len()
    ))
}

fn random_zh(rng: &mut impl Rng) -> BicomplexElement {
    loop {
        let mut c = || {
            let v: i64 = rng.gen_range(1..=1_000_000);
            if rng.gen_bool(0.5) {
                -v
            } else {
                v
            }
        };
        let (a, b) = (c(), c());
        if a.abs() > 1 || b.abs() > 1 {
            return BicomplexElement::new(Scalar::int(a), Scalar::int(b));
        }
    }
}

fn random_gauss(rng: &mut impl Rng, max_norm: i64) -> (i64, i64) {
    let m = (max_norm as f64).sqrt() as i64;
    loop {
        let (a, b) = (rng.gen_range(-m..=m), rng.gen_range(-m..=m));
        if (a, b) != (0, 0) && a * a + b * b <= max_norm {
            return (a, b);
        }
    }
}

fn random_zb(rng: &mut impl Rng) -> BicomplexElement {
    loop {
        let (a, b) = random_gauss(rng, 1_000_000);
        let (c, d) = random_gauss(rng, 1_000_000);
        if a * a + b * b > 1 || c * c + d * d > 1 {
            return BicomplexElement::gauss_ints(a, b, c, d);
        }
    }
}

fn check_factorization(w: &BicomplexElement, ext: &ExtensionDescriptor, unit: &BicomplexElement) -> Result<(), String> {
    let f = factor(w, ext).map_err(|e| format!("{w}: {e}"))?;
    ensure(f.recompose() == ext.coerce(w).unwrap(), || format!("recompose fails for {w}"))?;
    ensure(ext.is_unit(&f.unit).unwrap(), || format!("non-unit {} for {w}", f.unit))?;
    for (p, e) in &f.factors {
        let form = is_prime_element(p, ext).map_err(|e| e.to_string())?;
        ensure(matches!(form, Some(PrimeForm::First | PrimeForm::Second)) && *e >= 1, || {
            format!("factor {p} of {w} is not prime")
        })?;
    }
    let uw = ext.coerce(&unit.try_mul(w).unwrap()).unwrap();
    let g = factor(&uw, ext).map_err(|e| e.to_string())?;
    ensure(g.factors == f.factors, || format!("factors of {w} change under the unit {unit}"))?;
    Ok(())
}

fn c6_factorization() -> Outcome {
    let mut rng = rng(6);
    let (uh, ub) = (qh().units().unwrap(), qb().units().unwrap());
    for _ in 0..500 {
        let w = random_zh(&mut rng);
        let u = &uh[rng.gen_range(0..uh.len())];
        check_factorization(&w, &qh(), u)?;
        let w = random_zb(&mut rng);
        let u = &ub[rng.gen_range(0..ub.len())];
        check_factorization(&w, &qb(), u)?;
    }
    let mut checked = 0;
    for p in (2..1000).filter(|&p| is_prime(&int(p))) {
        let prof = rational_prime_profile(&int(p), &qb()).map_err(|e| e.to_string())?;
        let want = if p % 4 == 3 { 2 } else { 4 };
        ensure(prof.factor_count == want && prof.semiprime == (p % 4 == 3), || {
            format!("p={p}: {} factors", prof.factor_count)
        })?;
        ensure(prof.factorization.recompose() == BicomplexElement::gauss_ints(p, 0, p, 0), || {
            format!("p={p} does not recompose")
        })?;
        if p == 2 {
            ensure(prof.factorization.factors.iter().all(|(_, e)| *e == 2), || "2 is not a square".into())?;
        }
        checked += 1;
    }
    Ok(format!("500 + 500 random elements round-trip and are unit-invariant; {checked} primes < 1000 in Z_B"))
}

fn c7_jacobi() -> Outcome {
    let lattice = lattice_r(10_000);
    for n in 1..=10_000u64 {
        let r = jacobi_r(n).map_err(|e| e.to_string())?;
        ensure(r == lattice[n as usize], || format!("r({n}) = {r}, lattice {}", lattice[n as usize]))?;
    }
    Ok("r(n) equals the lattice count for n <= 10^4".into())
}

fn c8_tables() -> Outcome {
    const N: usize = 10_000;
    let h = coefficient_table(CountingField::hyperbolic(), N).map_err(|e| e.to_string())?;
    for n in 1..=N {
        ensure(h.get(n) == divisor_count(n as u64), || format!("a_Qh({n}) = {}", h.get(n)))?;
    }
    let b = coefficient_table(CountingField::quartic(), 200).map_err(|e| e.to_string())?;
    let pairs = gaussian_ideal_pairs(200);
    for (n, &want) in pairs.iter().enumerate().skip(1) {
        ensure(b.get(n) == want, || format!("a_QB({n}) = {} vs {want}", b.get(n)))?;
    }
    let ones = coefficient_table(CountingField::rational(), N).map_err(|e| e.to_string())?;
    let qi = coefficient_table(CountingField::gaussian(), N).map_err(|e| e.to_string())?;
    let b = coefficient_table(CountingField::quartic(), N).map_err(|e| e.to_string())?;
    ensure(dirichlet_convolve(&ones, &ones).unwrap() == h, || "a_Qh != 1 * 1".into())?;
    ensure(dirichlet_convolve(&qi, &qi).unwrap() == b, || "a_QB != a_Qi * a_Qi".into())?;
    Ok("a_Qh = d(n) to 10^4; a_QB matches ideal-pair enumeration to 200; convolution identities exact at N = 10^4"
        .into())
}

fn c9_zeta() -> Outcome {
    let h = coefficient_table(CountingField::hyperbolic(), 10_000).map_err(|e| e.to_string())?;
    let z = zeta_sum(&h, 2.0).map_err(|e| e.to_string())?;
    let zeta2: f64 = (1..=10_000u32).rev().map(|n| 1.0 / (n as f64 * n as f64)).sum();
    let gap = (z - zeta2 * zeta2).abs();
    ensure(gap <= ZETA_TOL, || format!("sum {z} vs {} (gap {gap})", zeta2 * zeta2))?;
    Ok(format!("{z:.6} vs {:.6}, gap {gap:.2e} <= {ZETA_TOL:e}", zeta2 * zeta2))
}

fn c10_charpoly() -> Outcome {
    let mut rng = rng(10);
    for _ in 0..500 {
        let w = BicomplexElement::gauss_ints(
            rng.gen_range(-20..=20),
            rng.gen_range(-20..=20),
            rng.gen_range(-20..=20),
            rng.gen_range(-20..=20),
        );
        let c = quartic_charpoly(&w).map_err(|e| e.to_string())?;
        ensure(eval_at_bicomplex(&c.poly, &w).is_zero(), || format!("P({w}) != 0"))?;
        let m = minpoly_bicomplex(&w).poly.to_rat();
        ensure(m.divides(&c.poly), || format!("minimal polynomial of {w} does not divide P"))?;
    }
    for _ in 0..200 {
        let (x, y) = (rng.gen_range(-30..=30i64), rng.gen_range(-30..=30i64));
        // hyperbolic x + y j: the other conjugate is x - y j
        let w = BicomplexElement::from_cartesian_ints(x, 0, y, 0);
        let q = RatPoly::from_ints(&[x * x - y * y, -2 * x, 1]).pow(2);
        ensure(quartic_charpoly(&w).unwrap().poly == q, || format!("Z_h closed form fails for {w}"))?;
        let w = BicomplexElement::from_cartesian_ints(x, y, 0, 0);
        let q = RatPoly::from_ints(&[x * x + y * y, -2 * x, 1]).pow(2);
        ensure(quartic_charpoly(&w).unwrap().poly == q, || format!("Z[i] closed form fails for {w}"))?;
    }
    Ok("500 random Z_B elements: P(w) = 0 and minpoly | P; closed forms on Z_h and Z[i]".into())
}

/// Round-trips one base over a grid; returns (terminated, total, detail).
fn radix_grid(base: RadixBase, points: &[RadixValue]) -> (usize, usize, String) {
    let digits = digit_set(base);
    let mut ok = 0;
    let mut first_failure = None;
    for x in points {
        match encode(x, base) {
            Ok(s) => {
                let good = decode(&s).ok().as_ref() == Some(x)
                    && s.digits.iter().all(|d| digits.contains(d))
                    && s.len() <= RADIX_MAX_DIGITS;
                if good {
                    ok += 1;
                } else if first_failure.is_none() {
                    first_failure = Some(format!("{x}: bad expansion {s}"));
                }
            }
            Err(e) => {
                if first_failure.is_none() {
                    first_failure = Some(e.to_string());
                }
            }
        }
    }
    (ok, points.len(), first_failure.unwrap_or_default())
}

fn radix_outcome(base: RadixBase, points: &[RadixValue], grid: &str) -> Outcome {
    let (ok, total, detail) = radix_grid(base, points);
    let line = format!("{base} on {grid}: {ok}/{total} round-trip");
    if ok == total {
        Ok(line)
    } else {
        Err(format!("{line}; first failure: {detail}"))
    }
}

fn idempotent_grid() -> Vec<RadixValue> {
    (-50..=50).flat_map(|a| (-50..=50).map(move |b| RadixValue::hyperbolic(a, b))).collect()
}

fn cartesian_grid() -> Vec<RadixValue> {
    (-50..=50).flat_map(|u| (-50..=50).map(move |v| RadixValue::hyperbolic_cartesian(u, v))).collect()
}

fn gaussian_grid() -> Vec<RadixValue> {
    (-50..=50).flat_map(|a| (-50..=50).map(move |b| RadixValue::gaussian(a, b))).collect()
}

fn c12_conjugations() -> Outcome {
    let mut rng = rng(12);
    let mut r = || {
        let d: i64 = rng.gen_range(1..=6);
        rat(rng.gen_range(-30..=30), d)
    };
    for _ in 0..1000 {
        let [x, y, z, t] = [r(), r(), r(), r()];
        let w = BicomplexElement::from_cartesian(x.clone(), y.clone(), z.clone(), t.clone());
        let [ci, cj, ck] = Axis::ALL.map(|a| w.conjugate(a));
        // sign patterns of the three conjugations on (x, y, z, t)
        let flip = |s: [i64; 4]| {
            BicomplexElement::from_cartesian(&x * &big(s[0]), &y * &big(s[1]), &z * &big(s[2]), &t * &big(s[3]))
        };
        ensure(ci == flip([1, 1, -1, -1]) && cj == flip([1, -1, 1, -1]) && ck == flip([1, -1, -1, 1]), || {
            format!("conjugates of {w}")
        })?;
        let comb = |s: [i64; 3]| {
            [(&ci, s[0]), (&cj, s[1]), (&ck, s[2])].iter().fold(w.clone(), |acc, (c, sg)| {
                if *sg > 0 {
                    acc.try_add(c).unwrap()
                } else {
                    acc.try_sub(c).unwrap()
                }
            })
        };
        let four = Rational::from_integer(int(4));
        let recovered = [
            comb([1, 1, 1]).to_cartesian().unwrap()[0].clone() / &four,
            comb([1, -1, -1]).to_cartesian().unwrap()[1].clone() / &four,
            comb([-1, 1, -1]).to_cartesian().unwrap()[2].clone() / &four,
            comb([-1, -1, 1]).to_cartesian().unwrap()[3].clone() / &four,
        ];
        ensure(recovered == [x.clone(), y.clone(), z.clone(), t.clone()] && w.coordinate_recovery_check(), || {
            format!("coordinate recovery fails for {w}")
        })?;
        let m = minpoly_bicomplex(&w).poly;
        for c in [&ci, &cj, &ck] {
            ensure(minpoly_bicomplex(c).poly == m, || format!("conjugate {c} of {w} has another minimal polynomial"))?;
        }
        let v = BicomplexElement::from_cartesian(r(), r(), r(), r());
        let n = |e: &BicomplexElement| match e.norm().unwrap() {
            NormValue::Rational(q) => q,
            other => panic!("unexpected norm {other:?}"),
        };
        let prod = w.try_mul(&v).unwrap();
        ensure(n(&prod) == n(&w) * n(&v), || format!("N(ab) != N(a)N(b) for {w}, {v}"))?;
    }
    let one = BicomplexElement::one();
    ensure(n_is_one(&one), || "N(1) != 1".into())?;
    Ok("1000 random elements: conjugation signs, recovery identities, shared minimal polynomials, multiplicative norm"
        .into())
}

fn n_is_one(w: &BicomplexElement) -> bool {
    matches!(w.norm(), Ok(NormValue::Rational(q)) if q.is_one())
}

/// Writes straight to stderr so the report shows even when test output is captured.
fn report(line: String) {
    let _ = writeln!(std::io::stderr(), "{line}");
}

#[test]
fn acceptance_suite() {
    let hyp_split_grid = idempotent_grid();
    let hyp_gauss_grid = cartesian_grid();
    let gauss_grid = gaussian_grid();
    let radix = |base: RadixBase, grid: &[RadixValue], name: &str| radix_outcome(base, grid, name);
    let criteria: Vec<Criterion> = vec![
        ("1", "minimal polynomial of 1+i+j-k", Box::new(c1_minpoly_example)),
        ("2", "root census", Box::new(c2_census)),
        ("3", "locus-factor identity", Box::new(c3_locus_factors)),
        ("4", "discriminants", Box::new(c4_discriminants)),
        ("5", "unit groups", Box::new(c5_units)),
        ("6", "factorization", Box::new(c6_factorization)),
        ("7", "Jacobi r(n)", Box::new(c7_jacobi)),
        ("8", "coefficient tables", Box::new(c8_tables)),
        ("9", "zeta partial sums", Box::new(c9_zeta)),
        ("10", "quartic characteristic polynomial", Box::new(c10_charpoly)),
        ("11a", "radix hsplit:-2", Box::new(|| radix(RadixBase::HypSplit(-2), &hyp_split_grid, "e1/e2 grid"))),
        ("11b", "radix hsplit:-3", Box::new(|| radix(RadixBase::HypSplit(-3), &hyp_split_grid, "e1/e2 grid"))),
        ("11c", "radix hgauss:-2", Box::new(|| radix(RadixBase::HypGauss(-2), &hyp_gauss_grid, "Z[j] grid"))),
        ("11d", "radix hgauss:-3", Box::new(|| radix(RadixBase::HypGauss(-3), &hyp_gauss_grid, "Z[j] grid"))),
        ("11e", "radix gauss:-1+", Box::new(|| radix(RadixBase::Gauss(-1, true), &gauss_grid, "Z[i] grid"))),
        ("11f", "radix gauss:-1-", Box::new(|| radix(RadixBase::Gauss(-1, false), &gauss_grid, "Z[i] grid"))),
        ("11g", "radix gauss:-2+", Box::new(|| radix(RadixBase::Gauss(-2, true), &gauss_grid, "Z[i] grid"))),
        ("11h", "radix gauss:-2-", Box::new(|| radix(RadixBase::Gauss(-2, false), &gauss_grid, "Z[i] grid"))),
        ("12", "conjugation suite", Box::new(c12_conjugations)),
    ];
    report(String::new());
    let mut unexpected = Vec::new();
    for (id, name, run) in &criteria {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        let expected_fail = EXPECTED_FAILURES.contains(id);
        match &outcome {
            Ok(detail) => report(format!("PASS {id:>4}  {name}: {detail} [{secs:.1}s]")),
            Err(detail) => {
                let tag = if expected_fail { " (known, see ledger)" } else { "" };
                report(format!("FAIL {id:>4}  {name}: {detail}{tag} [{secs:.1}s]"));
            }
        }
        if outcome.is_ok() == expected_fail {
            unexpected.push(*id);
        }
    }
    let failed = criteria.iter().filter(|(id, ..)| EXPECTED_FAILURES.contains(id)).count();
    report(format!("{} criteria, {} pass, {failed} known failures", criteria.len(), criteria.len() - failed));
    assert!(unexpected.is_empty(), "criteria with unexpected outcome: {unexpected:?}");
}

//! The `bicomplex` command line.
//!
//! Every subcommand prints plain text by default and a single JSON value with
//! `--json`. Exit codes: 0 on success, 1 for usage and parse errors, 2 for
//! mathematical failures (null cone, non-termination, unsupported rings).

mod parse;

pub use parse::{parse_element, parse_poly};

use std::io::Write;

use clap::{Args, Parser, Subcommand};
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use crate::arith::{format_rational, is_prime, IntPoly, Integer, RatPoly, Rational};
use crate::census::{census, census_cyclotomic, numeric_roots, real_count, Census, RootSet};
use crate::element::{Axis, BicomplexElement, NormValue};
use crate::error::{Error, Result};
use crate::integers::{factor, is_prime_element, rational_prime_profile, BicomplexFactorization, ExtensionDescriptor};
use crate::minpoly::{minpoly_bicomplex, quartic_charpoly, MinPolyKind};
use crate::radix::{decode, encode, DigitString, RadixBase, RadixValue};
use crate::zeta::{coefficient_table, zeta_partial, CountingField};

#[derive(Parser, Debug)]
#[command(name = "bicomplex", version, about = "Exact arithmetic of bicomplex algebraic numbers")]
struct Cli {
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Args, Debug)]
struct Fmt {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Args, Debug)]
struct ElementArg {
    /// `x+y*i+z*j+t*k` or `[c1, c2]`.
    #[arg(allow_hyphen_values = true)]
    element: String,
}

#[derive(Args, Debug)]
struct ExtArg {
    /// `Qh`, `QB` or `custom:K1,K2` with `K` one of `Q`, `Q(i)`, `Q(sqrt:D)`.
    #[arg(long = "L", default_value = "QB")]
    ext: String,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Idempotent components `c1 e1 + c2 e2`.
    Decompose {
        #[command(flatten)]
        e: ElementArg,
        #[command(flatten)]
        f: Fmt,
    },
    /// The three conjugates.
    Conj {
        #[command(flatten)]
        e: ElementArg,
        /// Only this conjugation (`i`, `j` or `k`).
        #[arg(long)]
        axis: Option<String>,
        #[command(flatten)]
        f: Fmt,
    },
    /// Product of the element and its three conjugates.
    Norm {
        #[command(flatten)]
        e: ElementArg,
        #[command(flatten)]
        f: Fmt,
    },
    /// Minimal polynomial over `Z`.
    Minpoly {
        #[command(flatten)]
        e: ElementArg,
        #[command(flatten)]
        f: Fmt,
    },
    /// Characteristic polynomial over the four conjugates.
    Charpoly4 {
        #[command(flatten)]
        e: ElementArg,
        #[command(flatten)]
        f: Fmt,
    },
    /// Locus counts of the bicomplex roots of a squarefree polynomial.
    Census {
        /// Polynomial in `X`.
        #[arg(allow_hyphen_values = true, required_unless_present = "cyclotomic")]
        poly: Option<String>,
        /// Use the `n`-th cyclotomic polynomial.
        #[arg(long, conflicts_with = "poly")]
        cyclotomic: Option<u64>,
        #[command(flatten)]
        f: Fmt,
    },
    /// All bicomplex roots with their loci, when the roots are Gaussian rationals.
    Roots {
        #[arg(allow_hyphen_values = true)]
        poly: String,
        /// Print numeric complex roots instead.
        #[arg(long)]
        numeric: bool,
        #[command(flatten)]
        f: Fmt,
    },
    /// Unique factorization in `O_L`.
    Factor {
        #[command(flatten)]
        e: ElementArg,
        #[command(flatten)]
        l: ExtArg,
        #[command(flatten)]
        f: Fmt,
    },
    /// How rational primes factor in `O_L`.
    PrimesProfile {
        /// Primes to examine.
        primes: Vec<String>,
        /// Every prime up to this bound.
        #[arg(long)]
        max: Option<u64>,
        #[command(flatten)]
        l: ExtArg,
        #[command(flatten)]
        f: Fmt,
    },
    /// Unit group of `O_L`.
    Units {
        #[command(flatten)]
        l: ExtArg,
        #[command(flatten)]
        f: Fmt,
    },
    /// Discriminant of `O_L`.
    Disc {
        #[command(flatten)]
        l: ExtArg,
        #[command(flatten)]
        f: Fmt,
    },
    /// Ideal counts `a(1..=max)`.
    IdealCount {
        /// `Q`, `Qi`, `Qh`, `QB` or `custom:K1,K2`.
        #[arg(long = "K")]
        field: String,
        #[arg(long)]
        max: usize,
        /// Also write the table to this CSV file.
        #[arg(long)]
        out: Option<std::path::PathBuf>,
        #[command(flatten)]
        f: Fmt,
    },
    /// Truncated zeta sum `sum a(n) n^-s` over `n <= max`.
    Zeta {
        #[arg(long = "K")]
        field: String,
        #[arg(long)]
        s: f64,
        #[arg(long, default_value_t = 10_000)]
        max: usize,
        #[command(flatten)]
        f: Fmt,
    },
    /// Digit expansion of a hyperbolic or Gaussian integer.
    RadixEncode {
        #[command(flatten)]
        e: ElementArg,
        /// `hsplit:A`, `hgauss:A` or `gauss:A+` / `gauss:A-`.
        #[arg(long)]
        base: String,
        #[command(flatten)]
        f: Fmt,
    },
    /// Value of a digit string, most significant digit first.
    RadixDecode {
        /// Digits such as `1011`, or comma separated like `5,0,12`.
        digits: String,
        #[arg(long)]
        base: String,
        #[command(flatten)]
        f: Fmt,
    },
}

/// Integers as JSON numbers when they fit, decimal strings otherwise.
fn int_json(n: &Integer) -> Value {
    n.to_i64().map_or_else(|| Value::String(n.to_string()), Value::from)
}

fn rat_json(r: &Rational) -> Value {
    if r.is_integer() {
        int_json(&r.to_integer())
    } else {
        Value::String(format_rational(r))
    }
}

fn poly_json(p: &RatPoly) -> Value {
    Value::Array(p.coeffs().iter().map(rat_json).collect())
}

fn element_json(w: &BicomplexElement) -> Value {
    json!({
        "element": w.to_string(),
        "idempotent": [w.c1().to_string(), w.c2().to_string()],
    })
}

fn norm_string(n: &NormValue) -> String {
    match n {
        NormValue::Rational(r) => format_rational(r),
        NormValue::Quadratic(q) => q.to_string(),
    }
}

fn census_json(c: &Census) -> Value {
    json!({
        "n": c.n, "r": c.r, "s": c.s,
        "two_s_i": c.two_s_i, "two_s_j": c.two_s_j, "two_s_k": c.two_s_k, "four_d": c.four_d,
        "total": c.total(),
    })
}

fn census_text(c: &Census) -> String {
    format!(
        "n={} r={} s={} 2s_i={} 2s_j={} 2s_k={} 4d={} total={}",
        c.n,
        c.r,
        c.s,
        c.two_s_i,
        c.two_s_j,
        c.two_s_k,
        c.four_d,
        c.total()
    )
}

/// An integer polynomial from text, scaled to be primitive with positive lead.
fn int_poly(src: &str) -> Result<IntPoly> {
    let p = parse_poly(src)?;
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(p.content_primitive()?.1)
}

fn factorization_json(f: &BicomplexFactorization, ext: &ExtensionDescriptor) -> Result<Value> {
    let factors = f
        .factors
        .iter()
        .map(|(p, e)| {
            let form = is_prime_element(p, ext)?.map(|f| f.to_string());
            Ok(json!({ "prime": element_json(p), "exponent": e, "form": form }))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(json!({
        "unit": element_json(&f.unit),
        "factors": factors,
        "factor_count": f.factor_count(),
        "text": f.to_string(),
    }))
}

/// Output of one command: the text form and the JSON form.
struct Output {
    text: String,
    json: Value,
}

fn out(text: impl Into<String>, json: Value) -> Result<Output> {
    Ok(Output { text: text.into(), json })
}

fn execute(cmd: &Command) -> Result<Output> {
    match cmd {
        Command::Decompose { e, .. } => {
            let w = parse_element(&e.element)?;
            let text = format!("{}\ne1: {}\ne2: {}", w.idempotent_string(), w.c1(), w.c2());
            out(text, element_json(&w))
        }
        Command::Conj { e, axis, .. } => {
            let w = parse_element(&e.element)?;
            let axes: Vec<Axis> = match axis.as_deref() {
                None => Axis::ALL.to_vec(),
                Some("i") => vec![Axis::I],
                Some("j") => vec![Axis::J],
                Some("k") => vec![Axis::K],
                Some(other) => return Err(Error::InvalidArgument(format!("unknown axis '{other}', use i, j or k"))),
            };
            let mut text = Vec::new();
            let mut obj = serde_json::Map::new();
            for a in axes {
                let c = w.conjugate(a);
                let name = format!("{a:?}").to_lowercase();
                text.push(format!("bar_{name}: {c}"));
                obj.insert(name, element_json(&c));
            }
            out(text.join("\n"), Value::Object(obj))
        }
        Command::Norm { e, .. } => {
            let w = parse_element(&e.element)?;
            let n = w.norm()?;
            let js = match &n {
                NormValue::Rational(r) => rat_json(r),
                NormValue::Quadratic(q) => Value::String(q.to_string()),
            };
            out(norm_string(&n), json!({ "norm": js, "null_cone": w.in_null_cone() }))
        }
        Command::Minpoly { e, .. } => {
            let w = parse_element(&e.element)?;
            let m = minpoly_bicomplex(&w);
            let kind = match m.kind {
                MinPolyKind::Common => "common",
                MinPolyKind::Product => "product",
            };
            out(
                m.poly.to_string(),
                json!({
                    "poly": m.poly.to_string(),
                    "coeffs": poly_json(&m.poly.to_rat()),
                    "kind": kind,
                    "components": [m.components.0.to_string(), m.components.1.to_string()],
                }),
            )
        }
        Command::Charpoly4 { e, .. } => {
            let w = parse_element(&e.element)?;
            let c = quartic_charpoly(&w)?;
            out(
                c.poly.to_string(),
                json!({
                    "poly": c.poly.to_string(),
                    "coeffs": poly_json(&c.poly),
                    "trace": rat_json(&c.trace),
                    "pair_sum": rat_json(&c.pair_sum),
                    "triple_sum": rat_json(&c.triple_sum),
                    "norm": rat_json(&c.norm),
                }),
            )
        }
        Command::Census { poly, cyclotomic, .. } => {
            let c = match (poly, cyclotomic) {
                (_, Some(n)) => census_cyclotomic(*n)?,
                (Some(p), None) => census(&int_poly(p)?)?,
                (None, None) => return Err(Error::InvalidArgument("give a polynomial or --cyclotomic N".into())),
            };
            out(census_text(&c), census_json(&c))
        }
        Command::Roots { poly, numeric, .. } => {
            let p = int_poly(poly)?;
            if *numeric {
                let z = numeric_roots(&p, 1e-12)?;
                let text: Vec<String> = z.iter().map(|c| format!("{:.12} {:+.12}*i", c.re, c.im)).collect();
                let js: Vec<Value> = z.iter().map(|c| json!([c.re, c.im])).collect();
                return out(
                    format!("{}\nreal roots: {}", text.join("\n"), real_count(&z, 1e-8)),
                    json!({ "roots": js, "real": real_count(&z, 1e-8) }),
                );
            }
            let set = RootSet::from_poly(&p)?.ok_or_else(|| {
                Error::Unsupported("the roots are not all Gaussian rationals; try --numeric or census".into())
            })?;
            let roots = set.enumerate();
            let sizes = set.locus_sizes().as_array();
            let mut text: Vec<String> = roots.iter().map(|(w, l)| format!("{w}\t{l}")).collect();
            text.push(format!("loci R={} S_i={} S_j={} S_k={} D={}", sizes[0], sizes[1], sizes[2], sizes[3], sizes[4]));
            let js: Vec<Value> =
                roots.iter().map(|(w, l)| json!({ "root": element_json(w), "locus": l.to_string() })).collect();
            out(text.join("\n"), json!({ "roots": js, "loci": sizes }))
        }
        Command::Factor { e, l, .. } => {
            let ext: ExtensionDescriptor = l.ext.parse()?;
            let w = ext.coerce(&parse_element(&e.element)?)?;
            let f = factor(&w, &ext)?;
            out(f.to_string(), factorization_json(&f, &ext)?)
        }
        Command::PrimesProfile { primes, max, l, .. } => {
            let ext: ExtensionDescriptor = l.ext.parse()?;
            let mut ps: Vec<Integer> = primes
                .iter()
                .map(|s| s.parse::<Integer>().map_err(|_| Error::InvalidArgument(format!("'{s}' is not an integer"))))
                .collect::<Result<_>>()?;
            if let Some(m) = max {
                ps.extend((2..=*m).map(Integer::from).filter(is_prime));
            }
            if ps.is_empty() {
                return Err(Error::InvalidArgument("give primes or --max N".into()));
            }
            let mut text = Vec::new();
            let mut js = Vec::new();
            for p in &ps {
                let prof = rational_prime_profile(p, &ext)?;
                text.push(format!(
                    "p={p} factors={} semiprime={} : {}",
                    prof.factor_count, prof.semiprime, prof.factorization
                ));
                js.push(json!({
                    "p": int_json(p),
                    "factor_count": prof.factor_count,
                    "semiprime": prof.semiprime,
                    "factorization": factorization_json(&prof.factorization, &ext)?,
                }));
            }
            out(text.join("\n"), Value::Array(js))
        }
        Command::Units { l, .. } => {
            let ext: ExtensionDescriptor = l.ext.parse()?;
            let g = ext.unit_group();
            let units = ext.units();
            let order = g.order.map_or_else(|| "infinite".to_string(), |n| n.to_string());
            let mut text = format!("order {order}, class {}, {}", g.class, g.structure);
            if let Some(u) = &units {
                let u: Vec<String> = u.iter().map(|w| w.to_string()).collect();
                text.push('\n');
                text.push_str(&u.join(", "));
            }
            if let Some(w) = &g.witness {
                text.push_str(&format!("\nunit of infinite order: {w}"));
            }
            out(
                text,
                json!({
                    "finite": g.finite,
                    "order": g.order,
                    "class": g.class.to_string(),
                    "structure": g.structure,
                    "units": units.map(|u| u.iter().map(element_json).collect::<Vec<_>>()),
                    "witness": g.witness.as_ref().map(element_json),
                }),
            )
        }
        Command::Disc { l, .. } => {
            let ext: ExtensionDescriptor = l.ext.parse()?;
            let d = ext.discriminant();
            let t = ext.trace_form_discriminant()?;
            out(d.to_string(), json!({ "disc": int_json(&d), "trace_form": int_json(&t) }))
        }
        Command::IdealCount { field, max, out: path, .. } => {
            let k: CountingField = field.parse()?;
            let t = coefficient_table(k, *max)?;
            if let Some(path) = path {
                std::fs::write(path, t.to_csv())
                    .map_err(|e| Error::InvalidArgument(format!("cannot write {}: {e}", path.display())))?;
            }
            let text: Vec<String> = t.iter().map(|(n, a)| format!("{n} {a}")).collect();
            out(text.join("\n"), json!(t.values()))
        }
        Command::Zeta { field, s, max, .. } => {
            let k: CountingField = field.parse()?;
            let v = zeta_partial(k, *s, *max)?;
            out(format!("{v:.12}"), json!({ "field": k.to_string(), "s": s, "max": max, "value": v }))
        }
        Command::RadixEncode { e, base, .. } => {
            let base: RadixBase = base.parse()?;
            let x = RadixValue::from_element(&parse_element(&e.element)?, base.is_hyperbolic())?;
            let d = encode(&x, base)?;
            out(
                format!("base {base}\n{}", d.msb_string()),
                json!({ "base": base.to_string(), "digits": d.digits, "value": element_json(&x.to_element()) }),
            )
        }
        Command::RadixDecode { digits, base, .. } => {
            let base: RadixBase = base.parse()?;
            let d = DigitString::new(parse_digits(digits)?, base)?;
            let v = decode(&d)?;
            let w = v.to_element();
            out(w.to_string(), json!({ "base": base.to_string(), "digits": d.digits, "value": element_json(&w) }))
        }
    }
}

/// Most significant digit first; commas separate multi-digit entries.
fn parse_digits(s: &str) -> Result<Vec<u64>> {
    let bad = |pos: usize| Error::Parse { pos, msg: "expected digits".into() };
    let s = s.trim();
    if s.is_empty() {
        return Err(bad(0));
    }
    let mut digits: Vec<u64> = if s.contains(',') {
        let mut pos = 0;
        let mut v = Vec::new();
        for part in s.split(',') {
            v.push(part.trim().parse().map_err(|_| bad(pos))?);
            pos += part.len() + 1;
        }
        v
    } else {
        s.char_indices().map(|(k, c)| c.to_digit(10).map(u64::from).ok_or_else(|| bad(k))).collect::<Result<_>>()?
    };
    digits.reverse();
    // strip leading zeros of the most-significant-first form
    while digits.len() > 1 && digits.last() == Some(&0) {
        digits.pop();
    }
    Ok(digits)
}

fn json_flag(cmd: &Command) -> bool {
    match cmd {
        Command::Decompose { f, .. }
        | Command::Conj { f, .. }
        | Command::Norm { f, .. }
        | Command::Minpoly { f, .. }
        | Command::Charpoly4 { f, .. }
        | Command::Census { f, .. }
        | Command::Roots { f, .. }
        | Command::Factor { f, .. }
        | Command::PrimesProfile { f, .. }
        | Command::Units { f, .. }
        | Command::Disc { f, .. }
        | Command::IdealCount { f, .. }
        | Command::Zeta { f, .. }
        | Command::RadixEncode { f, .. }
        | Command::RadixDecode { f, .. } => f.json,
    }
}

/// Runs the command line `args` (program name first) and returns the exit code.
pub fn run(args: &[String], stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { write!(stdout, "{text}") } else { write!(stderr, "{text}") };
            return code;
        }
    };
    match execute(&cli.cmd) {
        Ok(o) => {
            let res = if json_flag(&cli.cmd) { writeln!(stdout, "{}", o.json) } else { writeln!(stdout, "{}", o.text) };
            if res.is_err() {
                return 1;
            }
            0
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            if e.is_usage() {
                1
            } else {
                2
            }
        }
    }
}

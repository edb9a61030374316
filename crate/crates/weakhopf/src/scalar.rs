//! Exact field arithmetic: arbitrary-precision rationals, prime fields `GF(p)`
//! and simple extensions `Q[x]/(f)` for a user-supplied monic modulus `f`.
//!
//! Every scalar carries its field, values of different fields never mix, and
//! all representations are canonical: fractions in lowest terms with positive
//! denominator, residues reduced mod `p`, polynomial residues of degree
//! `< deg f` with no trailing zero coefficients.

use std::fmt;
use std::sync::Arc;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Rational number alias used throughout the crate.
pub type Rat = BigRational;

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus must be monic of degree >= 1")]
    BadModulus,
    #[error("modulus {0} is reducible over Q")]
    ReducibleModulus(String),
    #[error("field has no primitive {0}-th root of unity")]
    NoSuchRoot(u64),
    #[error("cannot parse scalar {0:?}: {1}")]
    Parse(String, String),
}

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("field descriptor mismatch: {0} vs {1}")]
    DescriptorMismatch(String, String),
}

/// Modulus data of a simple extension `Q[x]/(f)`.
#[derive(Debug, PartialEq, Eq)]
pub struct ExtModulus {
    /// Monic modulus, coefficients low-to-high; last entry is 1.
    pub coeffs: Vec<Rat>,
}

impl ExtModulus {
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }
}

/// A field descriptor: the rationals, a prime field or an extension of `Q`.
///
/// Cheap to clone; extension moduli are shared behind an `Arc`.
#[derive(Debug, Clone)]
pub enum Field {
    Rationals,
    PrimeField(u64),
    Extension(Arc<ExtModulus>),
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Field::Rationals, Field::Rationals) => true,
            (Field::PrimeField(p), Field::PrimeField(q)) => p == q,
            (Field::Extension(f), Field::Extension(g)) => Arc::ptr_eq(f, g) || f == g,
            _ => false,
        }
    }
}

impl Eq for Field {}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "Q"),
            Field::PrimeField(p) => write!(f, "F{p}"),
            Field::Extension(m) => write!(f, "Q[x]/({})", poly_display(&m.coeffs)),
        }
    }
}

impl Field {
    pub fn rationals() -> Field {
        Field::Rationals
    }

    /// Prime field `GF(p)`. Primality is checked deterministically.
    pub fn prime(p: u64) -> Result<Field, FieldError> {
        if is_prime_u64(p) {
            Ok(Field::PrimeField(p))
        } else {
            Err(FieldError::NotPrime(p))
        }
    }

    /// Extension `Q[x]/(f)` for monic `f` of degree >= 1, coefficients
    /// low-to-high. Irreducibility is the caller's responsibility for
    /// degree >= 5; up to degree 4 it is checked and violations rejected.
    pub fn extension(coeffs: Vec<Rat>) -> Result<Field, FieldError> {
        if coeffs.len() < 2 || !coeffs.last().unwrap().is_one() {
            return Err(FieldError::BadModulus);
        }
        if coeffs.len() <= 5 && !is_irreducible_deg_le4(&coeffs) {
            return Err(FieldError::ReducibleModulus(poly_display(&coeffs)));
        }
        Ok(Field::Extension(Arc::new(ExtModulus { coeffs })))
    }

    /// The N-th cyclotomic polynomial as an extension field, N <= 12.
    pub fn cyclotomic(n: u64) -> Result<Field, FieldError> {
        let coeffs: Vec<i64> = match n {
            1 => vec![-1, 1],
            2 => vec![1, 1],
            3 => vec![1, 1, 1],
            4 => vec![1, 0, 1],
            5 => vec![1, 1, 1, 1, 1],
            6 => vec![1, -1, 1],
            7 => vec![1, 1, 1, 1, 1, 1, 1],
            8 => vec![1, 0, 0, 0, 1],
            9 => vec![1, 0, 0, 1, 0, 0, 1],
            10 => vec![1, -1, 1, -1, 1],
            11 => vec![1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1],
            12 => vec![1, 0, -1, 0, 1],
            _ => return Err(FieldError::BadModulus),
        };
        let coeffs = coeffs.into_iter().map(Rat::from_integer_i64).collect();
        // Phi_1 = x - 1 has degree 1: the "extension" is Q itself but the
        // quotient representation is still a perfectly good field.
        match Field::extension(coeffs) {
            Ok(f) => Ok(f),
            Err(e) => Err(e),
        }
    }

    /// Characteristic, `None` meaning zero.
    pub fn characteristic(&self) -> Option<u64> {
        match self {
            Field::PrimeField(p) => Some(*p),
            _ => None,
        }
    }

    pub fn zero(&self) -> Scalar {
        Scalar {
            field: self.clone(),
            value: Value::zero_for(self),
        }
    }

    pub fn one(&self) -> Scalar {
        self.integer(1)
    }

    pub fn integer(&self, n: i64) -> Scalar {
        match self {
            Field::Rationals => Scalar {
                field: self.clone(),
                value: Value::Rat(Rat::from_integer_i64(n)),
            },
            Field::PrimeField(p) => {
                let r = n.rem_euclid(*p as i64) as u64;
                Scalar {
                    field: self.clone(),
                    value: Value::Mod(r % *p),
                }
            }
            Field::Extension(_) => self.from_poly(vec![Rat::from_integer_i64(n)]),
        }
    }

    /// Rational `num/den`; reduces mod `p` for prime fields.
    pub fn ratio(&self, num: i64, den: i64) -> Result<Scalar, ScalarError> {
        assert!(den != 0, "zero denominator");
        let n = self.integer(num);
        let d = self.integer(den);
        n.div(&d)
    }

    /// Element of an extension field from low-to-high coefficients.
    pub fn from_poly(&self, coeffs: Vec<Rat>) -> Scalar {
        match self {
            Field::Extension(m) => {
                let reduced = poly_mod(&coeffs, &m.coeffs);
                Scalar {
                    field: self.clone(),
                    value: Value::Poly(reduced),
                }
            }
            _ => panic!("from_poly on a non-extension field"),
        }
    }

    /// A primitive N-th root of unity `q`: `q^N = 1` and `q^m != 1` for
    /// `0 < m < N`. Deterministic across runs.
    pub fn root_of_unity(&self, n: u64) -> Result<Scalar, FieldError> {
        if n == 0 {
            return Err(FieldError::NoSuchRoot(0));
        }
        if let Some(p) = self.characteristic() {
            if n.is_multiple_of(p) {
                return Err(FieldError::NoSuchRoot(n));
            }
        }
        if n == 1 {
            return Ok(self.one());
        }
        if n == 2 {
            return Ok(self.integer(-1));
        }
        match self {
            Field::Rationals => Err(FieldError::NoSuchRoot(n)),
            Field::PrimeField(p) => {
                if (p - 1) % n != 0 {
                    return Err(FieldError::NoSuchRoot(n));
                }
                for h in 2..*p {
                    let c = pow_mod(h, (p - 1) / n, *p);
                    if order_is(c, n, *p) {
                        return Ok(Scalar {
                            field: self.clone(),
                            value: Value::Mod(c),
                        });
                    }
                }
                Err(FieldError::NoSuchRoot(n))
            }
            Field::Extension(m) => {
                // Order of the generator x, if finite within a generous cap.
                let x = self.from_poly(vec![Rat::zero(), Rat::one()]);
                let cap = 64.max(8 * n * m.degree() as u64);
                let mut pow = x.clone();
                let mut ord = None;
                for k in 1..=cap {
                    if pow.is_one() {
                        ord = Some(k);
                        break;
                    }
                    pow = pow.mul(&x).unwrap();
                }
                match ord {
                    Some(m) if m % n == 0 => {
                        let mut q = self.one();
                        for _ in 0..(m / n) {
                            q = q.mul(&x).unwrap();
                        }
                        Ok(q)
                    }
                    _ => Err(FieldError::NoSuchRoot(n)),
                }
            }
        }
    }

    /// Parse the canonical coefficient syntax: "5", "-3/7" and, for
    /// extension fields, "2+1x-1/2x^2" (low-to-high powers).
    pub fn parse(&self, s: &str) -> Result<Scalar, FieldError> {
        let err = |m: &str| FieldError::Parse(s.to_string(), m.to_string());
        let text = s.trim();
        if text.is_empty() {
            return Err(err("empty"));
        }
        match self {
            Field::Rationals => {
                let r = parse_rational(text).ok_or_else(|| err("bad rational"))?;
                Ok(Scalar {
                    field: self.clone(),
                    value: Value::Rat(r),
                })
            }
            Field::PrimeField(p) => {
                let r = parse_rational(text).ok_or_else(|| err("bad rational"))?;
                rat_mod_p(&r, *p)
                    .map(|v| Scalar {
                        field: self.clone(),
                        value: Value::Mod(v),
                    })
                    .ok_or_else(|| err("denominator divisible by p"))
            }
            Field::Extension(m) => {
                let terms = parse_poly_terms(text).ok_or_else(|| err("bad polynomial"))?;
                let mut coeffs = vec![Rat::zero(); m.degree().max(1)];
                for (pow, c) in terms {
                    if pow >= coeffs.len() {
                        coeffs.resize(pow + 1, Rat::zero());
                    }
                    coeffs[pow] += c;
                }
                Ok(self.from_poly(coeffs))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Value {
    Rat(Rat),
    Mod(u64),
    /// Low-to-high coefficients, trailing zeros trimmed; empty = 0.
    Poly(Vec<Rat>),
}

impl Value {
    fn zero_for(field: &Field) -> Value {
        match field {
            Field::Rationals => Value::Rat(Rat::zero()),
            Field::PrimeField(_) => Value::Mod(0),
            Field::Extension(_) => Value::Poly(vec![]),
        }
    }
}

/// An element of one of the supported exact fields.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Scalar {
    field: Field,
    value: Value,
}

impl Scalar {
    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        match &self.value {
            Value::Rat(r) => r.is_zero(),
            Value::Mod(m) => *m == 0,
            Value::Poly(c) => c.is_empty(),
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.value {
            Value::Rat(r) => r.is_one(),
            Value::Mod(m) => *m == 1,
            Value::Poly(c) => c.len() == 1 && c[0].is_one(),
        }
    }

    /// The underlying rational, for elements of the rational field.
    pub fn as_rational(&self) -> Option<&Rat> {
        match &self.value {
            Value::Rat(r) => Some(r),
            _ => None,
        }
    }

    fn check_same(&self, other: &Scalar) -> Result<(), ScalarError> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(ScalarError::DescriptorMismatch(
                self.field.to_string(),
                other.field.to_string(),
            ))
        }
    }

    pub fn add(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        self.check_same(other)?;
        let value = match (&self.value, &other.value) {
            (Value::Rat(a), Value::Rat(b)) => Value::Rat(a + b),
            (Value::Mod(a), Value::Mod(b)) => {
                let p = self.prime();
                Value::Mod(add_mod(*a, *b, p))
            }
            (Value::Poly(a), Value::Poly(b)) => Value::Poly(poly_add(a, b)),
            _ => unreachable!("same field implies same representation"),
        };
        Ok(Scalar {
            field: self.field.clone(),
            value,
        })
    }

    pub fn sub(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Scalar {
        let value = match &self.value {
            Value::Rat(a) => Value::Rat(-a),
            Value::Mod(a) => {
                let p = self.prime();
                Value::Mod(if *a == 0 { 0 } else { p - a })
            }
            Value::Poly(a) => Value::Poly(a.iter().map(|c| -c).collect()),
        };
        Scalar {
            field: self.field.clone(),
            value,
        }
    }

    pub fn mul(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        self.check_same(other)?;
        let value = match (&self.value, &other.value) {
            (Value::Rat(a), Value::Rat(b)) => Value::Rat(a * b),
            (Value::Mod(a), Value::Mod(b)) => Value::Mod(mul_mod(*a, *b, self.prime())),
            (Value::Poly(a), Value::Poly(b)) => {
                let modulus = self.modulus();
                Value::Poly(poly_mod(&poly_mul(a, b), modulus))
            }
            _ => unreachable!(),
        };
        Ok(Scalar {
            field: self.field.clone(),
            value,
        })
    }

    pub fn inv(&self) -> Result<Scalar, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        let value = match &self.value {
            Value::Rat(a) => Value::Rat(a.recip()),
            Value::Mod(a) => Value::Mod(inv_mod(*a, self.prime())),
            Value::Poly(a) => {
                let modulus = self.modulus();
                match poly_inv_mod(a, modulus) {
                    Some(i) => Value::Poly(i),
                    None => return Err(ScalarError::DivisionByZero),
                }
            }
        };
        Ok(Scalar {
            field: self.field.clone(),
            value,
        })
    }

    pub fn div(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        self.check_same(other)?;
        self.mul(&other.inv()?)
    }

    pub fn pow(&self, mut n: u64) -> Scalar {
        let mut base = self.clone();
        let mut acc = self.field.one();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base).expect("same field");
            }
            base = base.mul(&base).expect("same field");
            n >>= 1;
        }
        acc
    }

    fn prime(&self) -> u64 {
        match &self.field {
            Field::PrimeField(p) => *p,
            _ => unreachable!(),
        }
    }

    fn modulus(&self) -> &[Rat] {
        match &self.field {
            Field::Extension(m) => &m.coeffs,
            _ => unreachable!(),
        }
    }

    /// Canonical string form; parsed back by [`Field::parse`].
    pub fn render(&self) -> String {
        match &self.value {
            Value::Rat(r) => r.to_string(),
            Value::Mod(m) => m.to_string(),
            Value::Poly(c) => {
                let deg = match &self.field {
                    Field::Extension(m) => m.degree().max(1),
                    _ => unreachable!(),
                };
                let mut full = c.clone();
                full.resize(deg, Rat::zero());
                let mut out = String::new();
                for (i, coeff) in full.iter().enumerate() {
                    let s = coeff.to_string();
                    if i == 0 {
                        out.push_str(&s);
                    } else if let Some(rest) = s.strip_prefix('-') {
                        out.push('-');
                        out.push_str(rest);
                    } else {
                        out.push('+');
                        out.push_str(&s);
                    }
                    if i == 1 {
                        out.push('x');
                    } else if i > 1 {
                        out.push_str(&format!("x^{i}"));
                    }
                }
                out
            }
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

trait RatExt {
    fn from_integer_i64(n: i64) -> Rat;
}

impl RatExt for Rat {
    fn from_integer_i64(n: i64) -> Rat {
        Rat::from_integer(BigInt::from(n))
    }
}

// ---------------------------------------------------------------------------
// rational / integer helpers

fn parse_rational(s: &str) -> Option<Rat> {
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n: BigInt = num.parse().ok()?;
    let d: BigInt = den.parse().ok()?;
    if d.is_zero() {
        return None;
    }
    Some(Rat::new(n, d))
}

fn rat_mod_p(r: &Rat, p: u64) -> Option<u64> {
    let pp = BigInt::from(p);
    let num = r.numer().mod_floor(&pp);
    let den = r.denom().mod_floor(&pp);
    let num = num.to_u64_digits().1.first().copied().unwrap_or(0);
    let den = den.to_u64_digits().1.first().copied().unwrap_or(0);
    if den == 0 {
        return None;
    }
    Some(mul_mod(num, inv_mod(den, p), p))
}

fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 + b as u128) % p as u128) as u64
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut a: u64, mut n: u64, p: u64) -> u64 {
    let mut acc = 1u64 % p;
    a %= p;
    while n > 0 {
        if n & 1 == 1 {
            acc = mul_mod(acc, a, p);
        }
        a = mul_mod(a, a, p);
        n >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn order_is(c: u64, n: u64, p: u64) -> bool {
    if pow_mod(c, n, p) != 1 {
        return false;
    }
    let mut m = n;
    let mut q = 2;
    let mut primes = vec![];
    while q * q <= m {
        if m.is_multiple_of(q) {
            primes.push(q);
            while m.is_multiple_of(q) {
                m /= q;
            }
        }
        q += 1;
    }
    if m > 1 {
        primes.push(m);
    }
    primes.iter().all(|q| pow_mod(c, n / q, p) != 1)
}

/// Deterministic Miller-Rabin, valid for all u64.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n.is_multiple_of(p) {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

// ---------------------------------------------------------------------------
// polynomial helpers (coefficients low-to-high, trailing zeros trimmed)

fn poly_trim(mut c: Vec<Rat>) -> Vec<Rat> {
    while c.last().map(|x| x.is_zero()).unwrap_or(false) {
        c.pop();
    }
    c
}

fn poly_add(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let n = a.len().max(b.len());
    let mut out = vec![Rat::zero(); n];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, x) in b.iter().enumerate() {
        out[i] += x;
    }
    poly_trim(out)
}

fn poly_mul(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![Rat::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    poly_trim(out)
}

/// Remainder of `a` modulo the monic polynomial `m`.
fn poly_mod(a: &[Rat], m: &[Rat]) -> Vec<Rat> {
    let deg_m = m.len() - 1;
    let mut r = poly_trim(a.to_vec());
    while r.len() > deg_m {
        let lead = r.last().unwrap().clone();
        let shift = r.len() - 1 - deg_m;
        for i in 0..deg_m {
            let t = &lead * &m[i];
            r[shift + i] -= t;
        }
        r.pop();
        r = poly_trim(r);
    }
    r
}

fn poly_divmod(a: &[Rat], b: &[Rat]) -> (Vec<Rat>, Vec<Rat>) {
    let b = poly_trim(b.to_vec());
    assert!(!b.is_empty());
    let mut r = poly_trim(a.to_vec());
    let mut q = vec![Rat::zero(); a.len().saturating_sub(b.len()) + 1];
    let lead = b.last().unwrap().clone();
    while r.len() >= b.len() {
        let c = r.last().unwrap() / &lead;
        let shift = r.len() - b.len();
        q[shift] = c.clone();
        for i in 0..b.len() {
            let t = &c * &b[i];
            r[shift + i] -= t;
        }
        r = poly_trim(r);
    }
    (poly_trim(q), r)
}

/// Inverse of `a` modulo monic `m` via extended Euclid; `None` if not coprime.
fn poly_inv_mod(a: &[Rat], m: &[Rat]) -> Option<Vec<Rat>> {
    // Invariant: r0 = s0 * a (mod m), r1 = s1 * a (mod m).
    let mut r0 = m.to_vec();
    let mut r1 = poly_trim(a.to_vec());
    let mut s0: Vec<Rat> = vec![];
    let mut s1 = vec![Rat::one()];
    while !r1.is_empty() {
        let (q, r) = poly_divmod(&r0, &r1);
        let qs = poly_mul(&q, &s1);
        let ns = poly_add(&s0, &qs.iter().map(|c| -c).collect::<Vec<_>>());
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = ns;
    }
    if r0.len() != 1 {
        return None;
    }
    let c = r0[0].recip();
    Some(poly_mod(&poly_mul(&s0, &[c]), m))
}

fn parse_poly_terms(s: &str) -> Option<Vec<(usize, Rat)>> {
    let mut terms = vec![];
    let mut rest = s;
    let mut sign = 1i64;
    if let Some(r) = rest.strip_prefix('-') {
        sign = -1;
        rest = r;
    }
    while !rest.is_empty() {
        let end = rest
            .char_indices()
            .skip(1)
            .find(|(i, c)| (*c == '+' || *c == '-') && !rest[..*i].ends_with('^'))
            .map(|(i, _)| i)
            .unwrap_or(rest.len());
        let term = &rest[..end];
        let (coeff_str, pow) = match term.find('x') {
            None => (term, 0usize),
            Some(i) => {
                let p = match term[i + 1..].strip_prefix('^') {
                    Some(e) => e.parse().ok()?,
                    None if term[i + 1..].is_empty() => 1,
                    None => return None,
                };
                (&term[..i], p)
            }
        };
        let c = if coeff_str.is_empty() {
            Rat::one()
        } else {
            parse_rational(coeff_str)?
        };
        terms.push((pow, if sign < 0 { -c } else { c }));
        if end == rest.len() {
            break;
        }
        sign = if rest.as_bytes()[end] == b'-' { -1 } else { 1 };
        rest = &rest[end + 1..];
    }
    Some(terms)
}

fn poly_display(coeffs: &[Rat]) -> String {
    let mut out = String::new();
    for (i, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        if !out.is_empty() {
            out.push('+');
        }
        out.push_str(&c.to_string());
        if i == 1 {
            out.push('x');
        } else if i > 1 {
            out.push_str(&format!("x^{i}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

// ---------------------------------------------------------------------------
// irreducibility over Q for degree <= 4

fn is_irreducible_deg_le4(coeffs: &[Rat]) -> bool {
    let deg = coeffs.len() - 1;
    if deg == 1 {
        return true;
    }
    // Clear denominators monically: g(y) = c^deg f(y/c) has integer
    // coefficients b_i = a_i c^(deg - i) and the same factorization shape.
    let mut c = BigInt::one();
    for a in coeffs {
        c = c.lcm(a.denom());
    }
    let b: Vec<BigInt> = coeffs
        .iter()
        .enumerate()
        .map(|(i, a)| {
            let scaled = a * Rat::from_integer(c.pow((deg - i) as u32));
            assert!(scaled.denom().is_one());
            scaled.numer().clone()
        })
        .collect();
    if has_integer_root(&b) {
        return false;
    }
    if deg == 4 {
        return !splits_into_quadratics(&b);
    }
    true
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut out = vec![];
    let mut d = BigInt::one();
    loop {
        if (&d * &d) > n {
            break;
        }
        if (&n % &d).is_zero() {
            out.push(d.clone());
            out.push(&n / &d);
        }
        d += 1;
    }
    out.sort();
    out.dedup();
    out
}

fn eval_bigint_poly(b: &[BigInt], x: &BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    for c in b.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

fn has_integer_root(b: &[BigInt]) -> bool {
    if b[0].is_zero() {
        return true;
    }
    for d in divisors(&b[0]) {
        for r in [d.clone(), -d] {
            if eval_bigint_poly(b, &r).is_zero() {
                return true;
            }
        }
    }
    false
}

/// Does the monic integer quartic split into two monic integer quadratics?
fn splits_into_quadratics(b: &[BigInt]) -> bool {
    // (y^2 + p y + r)(y^2 + q y + s): rs = b0, p+q = b3, r+s+pq = b2, ps+qr = b1
    let (b0, b1, b2, b3) = (&b[0], &b[1], &b[2], &b[3]);
    if b0.is_zero() {
        return true; // already caught by root 0, kept for completeness
    }
    for d in divisors(b0) {
        for r in [d.clone(), -d] {
            let s = b0 / &r;
            let pq = b2 - &r - &s;
            let disc = b3 * b3 - BigInt::from(4) * &pq;
            if disc.sign() == Sign::Minus {
                continue;
            }
            let root = disc.sqrt();
            if &root * &root != disc {
                continue;
            }
            for pr in [(b3 + &root), (b3 - &root)] {
                if pr.is_odd() {
                    continue;
                }
                let p = pr / 2;
                let q = b3 - &p;
                if &p * &s + &q * &r == *b1 {
                    return true;
                }
            }
        }
    }
    false
}

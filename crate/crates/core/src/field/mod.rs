//! Arithmetic in GF(p^m).
//!
//! A [`Field`] is a cheap, clonable handle to an immutable context holding
//! the modulus and the log/exp tables. Elements are passed around as their
//! canonical `u32` encoding: the polynomial-basis coefficient vector read as
//! a base-p number (constant term least significant). The checked
//! [`FieldElement`] wrapper carries its field along and rejects mixing.
//!
//! Quadratic extensions GF(q^2) are built over an existing GF(q) context so
//! that base-field elements embed as themselves: an element `c0 + c1*y` is
//! encoded as `c0 + c1*q`, and `e` lies in the base field exactly when
//! `e < q`.

mod poly;

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use poly::Poly;

/// Largest field order accepted by the constructors.
pub const MAX_FIELD_ORDER: u32 = 1 << 16;

/// Serializable description of a field: characteristic, total degree over
/// GF(p) and the modulus (low-to-high, monic). For a quadratic extension the
/// modulus has degree 2 with coefficients in `base`. An empty modulus
/// selects the default one.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldDescriptor {
    pub p: u32,
    pub m: u32,
    #[serde(default)]
    pub modulus: Vec<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub base: Option<Box<FieldDescriptor>>,
}

struct Inner {
    p: u32,
    m: u32,
    q: u32,
    modulus: Vec<u32>,
    base: Option<Field>,
    primitive: u32,
    /// exp[i] = primitive^i, doubled so that log a + log b never wraps.
    exp: Vec<u32>,
    log: Vec<u32>,
}

/// A finite field context. Cloning is cheap.
#[derive(Clone)]
pub struct Field(Arc<Inner>);

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0.base {
            Some(b) => write!(f, "GF({}) over {}", self.0.q, b),
            None => write!(f, "GF({})", self.0.q),
        }
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p
                && self.0.m == other.0.m
                && self.0.modulus == other.0.modulus
                && self.0.base == other.0.base)
    }
}

impl Eq for Field {}

pub(crate) fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn prime_factors(mut n: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut d = 2u32;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn checked_order(p: u32, m: u32) -> Result<u32> {
    let mut q: u64 = 1;
    for _ in 0..m {
        q *= p as u64;
        if q > MAX_FIELD_ORDER as u64 {
            return Err(Error::SizeBudgetExceeded { p, m });
        }
    }
    Ok(q as u32)
}

// Polynomials over GF(p) as low-to-high digit vectors, used only while
// building a prime-power context.
mod prime_poly {
    pub fn trim(mut v: Vec<u32>) -> Vec<u32> {
        while v.last() == Some(&0) {
            v.pop();
        }
        v
    }

    pub fn rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
        let mut r = trim(a.to_vec());
        let db = b.len() - 1;
        let inv_lead = inv_mod(b[db], p);
        while r.len() > db {
            let shift = r.len() - 1 - db;
            let factor = (r[r.len() - 1] * inv_lead) % p;
            for (i, &bc) in b.iter().enumerate() {
                let t = (factor * bc) % p;
                r[shift + i] = (r[shift + i] + p - t) % p;
            }
            r = trim(r);
        }
        r
    }

    pub fn inv_mod(a: u32, p: u32) -> u32 {
        let mut result = 1u32;
        let mut base = a % p;
        let mut e = p - 2;
        while e > 0 {
            if e & 1 == 1 {
                result = result * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        result
    }

    /// Trial division by every monic polynomial of degree 1..=deg/2.
    pub fn is_irreducible(f: &[u32], p: u32) -> bool {
        let deg = f.len() - 1;
        if deg == 0 || f[deg] != 1 {
            return false;
        }
        for d in 1..=deg / 2 {
            let count = (p as u64).pow(d as u32);
            for low in 0..count {
                let mut g = Vec::with_capacity(d + 1);
                let mut x = low;
                for _ in 0..d {
                    g.push((x % p as u64) as u32);
                    x /= p as u64;
                }
                g.push(1);
                if rem(f, &g, p).is_empty() {
                    return false;
                }
            }
        }
        true
    }
}

impl Field {
    /// Builds GF(p^m) with the smallest monic irreducible modulus (lower
    /// coefficients read as a base-p integer) and the smallest primitive
    /// element.
    pub fn new(p: u32, m: u32) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NonPrimeCharacteristic(p));
        }
        if m == 0 {
            return Err(Error::ZeroDegree);
        }
        let q = checked_order(p, m)?;
        let mut modulus = None;
        for low in 0..q {
            let mut f = digits(low, p, m);
            f.push(1);
            if prime_poly::is_irreducible(&f, p) {
                modulus = Some(f);
                break;
            }
        }
        let modulus = modulus.expect("an irreducible polynomial of every degree exists");
        Ok(Self::build_prime_power(p, m, q, modulus))
    }

    /// Builds the prime field GF(p).
    pub fn prime(p: u32) -> Result<Field> {
        Self::new(p, 1)
    }

    /// Builds GF(p^m) from an explicit modulus.
    pub fn with_modulus(p: u32, modulus: Vec<u32>) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NonPrimeCharacteristic(p));
        }
        let m = modulus.len().saturating_sub(1) as u32;
        if m == 0 {
            return Err(Error::ZeroDegree);
        }
        let q = checked_order(p, m)?;
        if modulus.iter().any(|&c| c >= p) || !prime_poly::is_irreducible(&modulus, p) {
            return Err(Error::ReducibleModulus(m));
        }
        Ok(Self::build_prime_power(p, m, q, modulus))
    }

    fn build_prime_power(p: u32, m: u32, q: u32, modulus: Vec<u32>) -> Field {
        let mul = |a: u32, b: u32| -> u32 {
            let da = digits(a, p, m);
            let db = digits(b, p, m);
            let mut prod = vec![0u32; 2 * m as usize];
            for (i, &x) in da.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                for (j, &y) in db.iter().enumerate() {
                    prod[i + j] = (prod[i + j] + x * y) % p;
                }
            }
            undigits(&prime_poly::rem(&prod, &modulus, p), p)
        };
        Self::assemble(p, m, q, modulus.clone(), None, mul)
    }

    /// Builds GF(q^2) as a degree-2 extension of `base`, with the smallest
    /// irreducible quadratic `y^2 + c1*y + c0` (ordered by `c0 + c1*q`).
    pub fn quadratic_extension(base: &Field) -> Result<Field> {
        let qb = base.order();
        let (p, m) = (base.characteristic(), base.degree() * 2);
        let q = checked_order(p, m)?;
        for low in 0..(qb * qb) {
            let (c0, c1) = (low % qb, low / qb);
            if Self::quadratic_irreducible(base, c0, c1) {
                return Ok(Self::build_extension(base, vec![c0, c1, 1], q));
            }
        }
        unreachable!("irreducible quadratics exist over every finite field")
    }

    fn quadratic_irreducible(base: &Field, c0: u32, c1: u32) -> bool {
        base.elements()
            .all(|t| base.add(base.add(base.mul(t, t), base.mul(c1, t)), c0) != 0)
    }

    fn build_extension(base: &Field, modulus: Vec<u32>, q: u32) -> Field {
        let qb = base.order();
        let (c0, c1) = (modulus[0], modulus[1]);
        let b = base.clone();
        let mul = move |x: u32, y: u32| -> u32 {
            let (a0, a1) = (x % qb, x / qb);
            let (b0, b1) = (y % qb, y / qb);
            let hi = b.mul(a1, b1);
            let r0 = b.sub(b.mul(a0, b0), b.mul(hi, c0));
            let r1 = b.sub(b.add(b.mul(a0, b1), b.mul(a1, b0)), b.mul(hi, c1));
            r0 + r1 * qb
        };
        Self::assemble(
            base.characteristic(),
            base.degree() * 2,
            q,
            modulus,
            Some(base.clone()),
            mul,
        )
    }

    fn assemble(
        p: u32,
        m: u32,
        q: u32,
        modulus: Vec<u32>,
        base: Option<Field>,
        mul: impl Fn(u32, u32) -> u32,
    ) -> Field {
        let pow = |mut a: u32, mut e: u32| {
            let mut r = 1u32;
            while e > 0 {
                if e & 1 == 1 {
                    r = mul(r, a);
                }
                a = mul(a, a);
                e >>= 1;
            }
            r
        };
        let n = q - 1;
        let factors = prime_factors(n);
        let primitive = (1..q)
            .find(|&g| factors.iter().all(|&r| pow(g, n / r) != 1))
            .expect("multiplicative group is cyclic");
        let mut exp = vec![0u32; 2 * n as usize];
        let mut log = vec![0u32; q as usize];
        let mut x = 1u32;
        for i in 0..n {
            exp[i as usize] = x;
            exp[(i + n) as usize] = x;
            log[x as usize] = i;
            x = mul(x, primitive);
        }
        Field(Arc::new(Inner {
            p,
            m,
            q,
            modulus,
            base,
            primitive,
            exp,
            log,
        }))
    }

    /// Rebuilds a field from its descriptor, validating the modulus.
    pub fn from_descriptor(desc: &FieldDescriptor) -> Result<Field> {
        match &desc.base {
            None if desc.modulus.is_empty() => Self::new(desc.p, desc.m),
            None => {
                let f = Self::with_modulus(desc.p, desc.modulus.clone())?;
                if f.degree() != desc.m {
                    return Err(Error::InvalidSpec(format!(
                        "modulus degree {} does not match m = {}",
                        f.degree(),
                        desc.m
                    )));
                }
                Ok(f)
            }
            Some(bd) => {
                let base = Self::from_descriptor(bd)?;
                if desc.p != base.characteristic() || desc.m != 2 * base.degree() {
                    return Err(Error::InvalidSpec(
                        "extension descriptor disagrees with its base".into(),
                    ));
                }
                let md = &desc.modulus;
                if md.is_empty() {
                    return Self::quadratic_extension(&base);
                }
                if md.len() != 3 || md[2] != 1 || md[0] >= base.order() || md[1] >= base.order() {
                    return Err(Error::ReducibleModulus(2));
                }
                if !Self::quadratic_irreducible(&base, md[0], md[1]) {
                    return Err(Error::ReducibleModulus(2));
                }
                let q = checked_order(desc.p, desc.m)?;
                Ok(Self::build_extension(&base, md.clone(), q))
            }
        }
    }

    pub fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor {
            p: self.0.p,
            m: self.0.m,
            modulus: self.0.modulus.clone(),
            base: self.0.base.as_ref().map(|b| Box::new(b.descriptor())),
        }
    }

    #[inline]
    pub fn order(&self) -> u32 {
        self.0.q
    }

    #[inline]
    pub fn characteristic(&self) -> u32 {
        self.0.p
    }

    /// Degree over the prime field.
    #[inline]
    pub fn degree(&self) -> u32 {
        self.0.m
    }

    pub fn modulus(&self) -> &[u32] {
        &self.0.modulus
    }

    pub fn primitive(&self) -> u32 {
        self.0.primitive
    }

    pub fn base(&self) -> Option<&Field> {
        self.0.base.as_ref()
    }

    pub fn elements(&self) -> std::ops::Range<u32> {
        0..self.0.q
    }

    pub fn nonzero_elements(&self) -> std::ops::Range<u32> {
        1..self.0.q
    }

    pub fn contains(&self, a: u32) -> bool {
        a < self.0.q
    }

    pub fn element(&self, value: u32) -> Result<FieldElement> {
        FieldElement::new(self, value)
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        let p = self.0.p;
        if p == 2 {
            return a ^ b;
        }
        if self.0.m == 1 {
            let s = a + b;
            return if s >= p { s - p } else { s };
        }
        let (mut a, mut b) = (a, b);
        let mut out = 0u32;
        let mut place = 1u32;
        for _ in 0..self.0.m {
            out += ((a % p + b % p) % p) * place;
            a /= p;
            b /= p;
            place *= p;
        }
        out
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        let p = self.0.p;
        if p == 2 {
            return a;
        }
        if self.0.m == 1 {
            return if a == 0 { 0 } else { p - a };
        }
        let mut a = a;
        let mut out = 0u32;
        let mut place = 1u32;
        for _ in 0..self.0.m {
            out += ((p - a % p) % p) * place;
            a /= p;
            place *= p;
        }
        out
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let i = self.0.log[a as usize] + self.0.log[b as usize];
        self.0.exp[i as usize]
    }

    /// Multiplicative inverse. Panics on zero; see [`Field::checked_inv`].
    #[inline]
    pub fn inv(&self, a: u32) -> u32 {
        self.checked_inv(a).expect("inverse of zero")
    }

    #[inline]
    pub fn checked_inv(&self, a: u32) -> Option<u32> {
        if a == 0 {
            return None;
        }
        let n = self.0.q - 1;
        let l = self.0.log[a as usize];
        Some(self.0.exp[((n - l) % n) as usize])
    }

    /// `a / b`. Panics when `b` is zero.
    #[inline]
    pub fn div(&self, a: u32, b: u32) -> u32 {
        self.mul(a, self.inv(b))
    }

    pub fn pow(&self, a: u32, e: u64) -> u32 {
        if a == 0 {
            return if e == 0 { 1 } else { 0 };
        }
        let n = (self.0.q - 1) as u64;
        let l = self.0.log[a as usize] as u64;
        self.0.exp[((l * (e % n)) % n) as usize]
    }

    /// Multiplicative order of a nonzero element.
    pub fn order_of(&self, a: u32) -> Option<u32> {
        if a == 0 {
            return None;
        }
        let n = self.0.q - 1;
        let l = self.0.log[a as usize];
        Some(n / gcd(n, l))
    }

    /// Discrete log to the primitive base.
    pub fn log(&self, a: u32) -> Option<u32> {
        (a != 0).then(|| self.0.log[a as usize])
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, v: i64) -> u32 {
        v.rem_euclid(self.0.p as i64) as u32
    }

    /// Sum of a slice of elements.
    pub fn sum(&self, xs: impl IntoIterator<Item = u32>) -> u32 {
        xs.into_iter().fold(0, |acc, x| self.add(acc, x))
    }

    pub fn product(&self, xs: impl IntoIterator<Item = u32>) -> u32 {
        xs.into_iter().fold(1, |acc, x| self.mul(acc, x))
    }

    /// Inner product of two equal-length vectors.
    pub fn dot(&self, a: &[u32], b: &[u32]) -> u32 {
        debug_assert_eq!(a.len(), b.len());
        a.iter()
            .zip(b)
            .fold(0, |acc, (&x, &y)| self.add(acc, self.mul(x, y)))
    }

    /// Maps a base-field element into this quadratic extension.
    pub fn embed(&self, e: u32) -> Result<u32> {
        let base = self.base().ok_or(Error::NoBaseField)?;
        if !base.contains(e) {
            return Err(Error::ElementOutOfRange {
                value: e,
                q: base.order(),
            });
        }
        Ok(e)
    }

    /// The base-field element equal to `e`, if `e` lies in the base field.
    pub fn to_base(&self, e: u32) -> Result<Option<u32>> {
        let base = self.base().ok_or(Error::NoBaseField)?;
        Ok((e < base.order()).then_some(e))
    }

    /// Minimal polynomial over the base field of an element of a quadratic
    /// extension: `x - e` for base elements, else `(x - e)(x - e^q)`.
    pub fn minimal_poly_over_base(&self, e: u32) -> Result<Poly> {
        let base = self.base().ok_or(Error::NoBaseField)?;
        if !self.contains(e) {
            return Err(Error::ElementOutOfRange {
                value: e,
                q: self.order(),
            });
        }
        let qb = base.order();
        let conj = self.pow(e, qb as u64);
        if conj == e {
            return Ok(Poly::from_coeffs(base, vec![base.neg(e), 1]));
        }
        let trace = self.add(e, conj);
        let norm = self.mul(e, conj);
        let c1 = self.neg(trace);
        debug_assert!(
            c1 < qb && norm < qb,
            "conjugate pair must have base coefficients"
        );
        Ok(Poly::from_coeffs(base, vec![norm, c1, 1]))
    }
}

fn gcd(mut a: u32, mut b: u32) -> u32 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn digits(mut x: u32, p: u32, m: u32) -> Vec<u32> {
    (0..m)
        .map(|_| {
            let d = x % p;
            x /= p;
            d
        })
        .collect()
}

fn undigits(d: &[u32], p: u32) -> u32 {
    d.iter().rev().fold(0, |acc, &c| acc * p + c)
}

/// A field element bound to its field. Arithmetic between elements of
/// different fields fails with [`Error::ContextMismatch`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldElement {
    value: u32,
    field: Field,
}

impl FieldElement {
    pub fn new(field: &Field, value: u32) -> Result<Self> {
        if !field.contains(value) {
            return Err(Error::ElementOutOfRange {
                value,
                q: field.order(),
            });
        }
        Ok(FieldElement {
            value,
            field: field.clone(),
        })
    }

    pub fn value(&self) -> u32 {
        self.value
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    fn with(&self, value: u32) -> Self {
        FieldElement {
            value,
            field: self.field.clone(),
        }
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.with(self.field.add(self.value, other.value)))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.with(self.field.sub(self.value, other.value)))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.with(self.field.mul(self.value, other.value)))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let inv = other.inv()?;
        Ok(self.with(self.field.mul(self.value, inv.value)))
    }

    pub fn inv(&self) -> Result<Self> {
        self.field
            .checked_inv(self.value)
            .map(|v| self.with(v))
            .ok_or(Error::DivisionByZero)
    }

    pub fn neg(&self) -> Self {
        self.with(self.field.neg(self.value))
    }

    pub fn pow(&self, e: u64) -> Self {
        self.with(self.field.pow(self.value, e))
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

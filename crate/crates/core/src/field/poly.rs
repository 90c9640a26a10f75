use std::fmt;

use super::{Field, FieldElement};
use crate::error::{Error, Result};

/// Univariate polynomial over a [`Field`], coefficients lowest degree first
/// with no trailing zeros.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    field: Field,
    coeffs: Vec<u32>,
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({:?} over {})", self.coeffs, self.field)
    }
}

impl Poly {
    /// Builds a polynomial, validating every coefficient.
    pub fn new(field: &Field, coeffs: Vec<u32>) -> Result<Poly> {
        if let Some(&c) = coeffs.iter().find(|&&c| !field.contains(c)) {
            return Err(Error::ElementOutOfRange {
                value: c,
                q: field.order(),
            });
        }
        Ok(Self::from_coeffs(field, coeffs))
    }

    pub(crate) fn from_coeffs(field: &Field, mut coeffs: Vec<u32>) -> Poly {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly {
            field: field.clone(),
            coeffs,
        }
    }

    pub fn zero(field: &Field) -> Poly {
        Self::from_coeffs(field, Vec::new())
    }

    pub fn constant(field: &Field, c: u32) -> Poly {
        Self::from_coeffs(field, vec![c])
    }

    /// `c * x^deg`.
    pub fn monomial(field: &Field, c: u32, deg: usize) -> Poly {
        let mut coeffs = vec![0; deg + 1];
        coeffs[deg] = c;
        Self::from_coeffs(field, coeffs)
    }

    /// `prod (x - r)` over the given roots.
    pub fn from_roots(field: &Field, roots: &[u32]) -> Poly {
        let mut coeffs = vec![1u32];
        for &r in roots {
            let nr = field.neg(r);
            let mut next = vec![0u32; coeffs.len() + 1];
            for (i, &c) in coeffs.iter().enumerate() {
                next[i + 1] = field.add(next[i + 1], c);
                next[i] = field.add(next[i], field.mul(c, nr));
            }
            coeffs = next;
        }
        Self::from_coeffs(field, coeffs)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> u32 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<u32> {
        self.coeffs.last().copied()
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == Some(1)
    }

    /// Horner evaluation.
    pub fn eval(&self, x: u32) -> u32 {
        let f = &self.field;
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| f.add(f.mul(acc, x), c))
    }

    pub fn eval_element(&self, x: &FieldElement) -> Result<FieldElement> {
        if *x.field() != self.field {
            return Err(Error::ContextMismatch);
        }
        self.field.element(self.eval(x.value()))
    }

    fn check(&self, other: &Poly) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    pub fn add(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        let f = &self.field;
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|i| f.add(self.coeff(i), other.coeff(i)))
            .collect();
        Ok(Self::from_coeffs(f, coeffs))
    }

    pub fn sub(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        self.add(&other.scale(self.field.neg(1)))
    }

    pub fn scale(&self, c: u32) -> Poly {
        let f = &self.field;
        Self::from_coeffs(f, self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    pub fn mul(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(&self.field));
        }
        let f = &self.field;
        let mut out = vec![0u32; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Ok(Self::from_coeffs(f, out))
    }

    /// Euclidean division: returns `(quotient, remainder)`.
    pub fn div_rem(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        self.check(divisor)?;
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let f = &self.field;
        let inv_lead = f.inv(divisor.coeffs[dd]);
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0u32; rem.len().saturating_sub(dd)];
        while rem.len() > dd {
            let top = rem.len() - 1;
            let factor = f.mul(rem[top], inv_lead);
            let shift = top - dd;
            quot[shift] = factor;
            for (i, &c) in divisor.coeffs.iter().enumerate() {
                rem[shift + i] = f.sub(rem[shift + i], f.mul(factor, c));
            }
            while rem.last() == Some(&0) {
                rem.pop();
            }
        }
        Ok((Self::from_coeffs(f, quot), Self::from_coeffs(f, rem)))
    }

    /// The unique polynomial of degree below `points.len()` through the
    /// given points.
    pub fn lagrange_interpolate(field: &Field, points: &[(u32, u32)]) -> Result<Poly> {
        for (i, &(x, _)) in points.iter().enumerate() {
            if points[..i].iter().any(|&(y, _)| y == x) {
                return Err(Error::DuplicateAbscissa(x));
            }
        }
        let f = field;
        let xs: Vec<u32> = points.iter().map(|&(x, _)| x).collect();
        let master = Self::from_roots(f, &xs);
        let mut acc = vec![0u32; points.len()];
        for (i, &(xi, yi)) in points.iter().enumerate() {
            if yi == 0 {
                continue;
            }
            // master / (x - xi) by synthetic division
            let n = master.coeffs.len() - 1;
            let mut basis = vec![0u32; n];
            let mut carry = 0u32;
            for d in (0..n).rev() {
                carry = f.add(master.coeffs[d + 1], f.mul(carry, xi));
                basis[d] = carry;
            }
            let denom = f.product(
                xs.iter()
                    .enumerate()
                    .filter(|&(j, _)| j != i)
                    .map(|(_, &xj)| f.sub(xi, xj)),
            );
            let scale = f.div(yi, denom);
            for (a, b) in acc.iter_mut().zip(&basis) {
                *a = f.add(*a, f.mul(*b, scale));
            }
        }
        Ok(Self::from_coeffs(f, acc))
    }
}

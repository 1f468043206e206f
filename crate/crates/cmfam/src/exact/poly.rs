//! Dense univariate polynomials over an exact field.
//!
//! One generic implementation serves both `Q[t]` (fake degrees, Poincare
//! series, divisibility tests) and `Q(zeta_n)[t]` (characteristic polynomials,
//! eigen series). Canonical form has no trailing zero coefficient.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::cyclotomic::Cyclotomic;
use crate::exact::rational::Rational;

/// Minimal field interface needed by [`Poly`].
pub trait FieldScalar: Clone + PartialEq + fmt::Debug {
    fn f_zero(like: &Self) -> Self;
    fn f_one(like: &Self) -> Self;
    fn f_is_zero(&self) -> bool;
    fn f_add(&self, other: &Self) -> Self;
    fn f_sub(&self, other: &Self) -> Self;
    fn f_mul(&self, other: &Self) -> Self;
    fn f_inv(&self) -> Result<Self>;
}

impl FieldScalar for Rational {
    fn f_zero(_like: &Self) -> Self {
        Rational::zero()
    }
    fn f_one(_like: &Self) -> Self {
        Rational::one()
    }
    fn f_is_zero(&self) -> bool {
        self.is_zero()
    }
    fn f_add(&self, other: &Self) -> Self {
        self + other
    }
    fn f_sub(&self, other: &Self) -> Self {
        self - other
    }
    fn f_mul(&self, other: &Self) -> Self {
        self * other
    }
    fn f_inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.recip())
    }
}

impl FieldScalar for Cyclotomic {
    fn f_zero(like: &Self) -> Self {
        Cyclotomic::zero(like.conductor())
    }
    fn f_one(like: &Self) -> Self {
        Cyclotomic::one(like.conductor())
    }
    fn f_is_zero(&self) -> bool {
        self.is_zero()
    }
    fn f_add(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn f_sub(&self, other: &Self) -> Self {
        self.sub(other)
    }
    fn f_mul(&self, other: &Self) -> Self {
        self.mul(other)
    }
    fn f_inv(&self) -> Result<Self> {
        self.inv()
    }
}

/// Dense polynomial, index = degree, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly<T: FieldScalar> {
    coeffs: Vec<T>,
}

pub type QPoly = Poly<Rational>;
pub type CPoly = Poly<Cyclotomic>;

impl<T: FieldScalar> Poly<T> {
    pub fn zero() -> Self {
        Poly { coeffs: vec![] }
    }

    pub fn constant(c: T) -> Self {
        Poly::from_coeffs(vec![c])
    }

    pub fn from_coeffs(coeffs: Vec<T>) -> Self {
        let mut p = Poly { coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(FieldScalar::f_is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Option<&T> {
        self.coeffs.get(i)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Smallest index with nonzero coefficient (order of vanishing at 0).
    pub fn trailing_degree(&self) -> Result<usize> {
        self.coeffs
            .iter()
            .position(|c| !c.f_is_zero())
            .ok_or(Error::ZeroPolynomial)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.coeffs.clone();
        if out.len() < other.coeffs.len() {
            let template = other.coeffs.last().unwrap();
            out.resize(other.coeffs.len(), T::f_zero(template));
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] = out[i].f_add(c);
        }
        Poly::from_coeffs(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.coeffs.clone();
        if out.len() < other.coeffs.len() {
            let template = other.coeffs.last().unwrap();
            out.resize(other.coeffs.len(), T::f_zero(template));
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] = out[i].f_sub(c);
        }
        Poly::from_coeffs(out)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let z = T::f_zero(&self.coeffs[0]);
        let mut out = vec![z; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.f_is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.f_is_zero() {
                    continue;
                }
                out[i + j] = out[i + j].f_add(&a.f_mul(b));
            }
        }
        Poly::from_coeffs(out)
    }

    pub fn scale(&self, c: &T) -> Self {
        Poly::from_coeffs(self.coeffs.iter().map(|a| a.f_mul(c)).collect())
    }

    /// Multiply by t^k.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        let z = T::f_zero(&self.coeffs[0]);
        let mut out = vec![z; k];
        out.extend(self.coeffs.iter().cloned());
        Poly::from_coeffs(out)
    }

    /// Exact Euclidean division; divisor must be nonzero.
    pub fn divrem(&self, divisor: &Self) -> Result<(Self, Self)> {
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.coeffs.len() < divisor.coeffs.len() {
            return Ok((Poly::zero(), self.clone()));
        }
        let db = divisor.coeffs.len() - 1;
        let lead_inv = divisor.coeffs[db].f_inv()?;
        let z = T::f_zero(&divisor.coeffs[db]);
        let mut rem = self.coeffs.clone();
        let mut quot = vec![z; rem.len() - db];
        for i in (0..quot.len()).rev() {
            let c = rem[i + db].f_mul(&lead_inv);
            if c.f_is_zero() {
                continue;
            }
            for (j, bj) in divisor.coeffs.iter().enumerate() {
                rem[i + j] = rem[i + j].f_sub(&c.f_mul(bj));
            }
            quot[i] = c;
        }
        Ok((Poly::from_coeffs(quot), Poly::from_coeffs(rem)))
    }

    /// True iff division of `other` by `self` leaves zero remainder.
    pub fn divides(&self, other: &Self) -> Result<bool> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (_, rem) = other.divrem(self)?;
        Ok(rem.is_zero())
    }

    pub fn eval(&self, x: &T) -> T {
        let Some(last) = self.coeffs.last() else {
            return T::f_zero(x);
        };
        let mut acc = last.clone();
        for c in self.coeffs.iter().rev().skip(1) {
            acc = acc.f_mul(x).f_add(c);
        }
        acc
    }
}

impl QPoly {
    /// 1 + t + ... + t^{d-1}.
    pub fn t_geometric(d: u32) -> Self {
        Poly::from_coeffs(vec![Rational::one(); d as usize])
    }

    pub fn from_integers(coeffs: &[i64]) -> Self {
        Poly::from_coeffs(
            coeffs
                .iter()
                .map(|&c| Rational::from_integer(c.into()))
                .collect(),
        )
    }

    pub fn has_nonneg_integer_coeffs(&self) -> bool {
        self.coeffs
            .iter()
            .all(|c| c.is_integer() && !c.is_negative())
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, "{}", if c.is_negative() { " - " } else { " + " })?;
            }
            let mag = c.abs();
            if i == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{i}")?,
            }
        }
        Ok(())
    }
}

/// Truncated power series with cyclotomic coefficients, used for graded
/// multiplicity computations. Length is fixed at construction.
#[derive(Clone, Debug)]
pub struct CSeries {
    pub coeffs: Vec<Cyclotomic>,
}

impl CSeries {
    pub fn one(conductor: u32, len: usize) -> Self {
        let mut coeffs = vec![Cyclotomic::zero(conductor); len];
        coeffs[0] = Cyclotomic::one(conductor);
        CSeries { coeffs }
    }

    /// Multiply in place by the geometric series 1/(1 - eps * t) using the
    /// prefix recurrence c_i += eps * c_{i-1}.
    pub fn mul_geometric(&mut self, eps: &Cyclotomic) {
        for i in 1..self.coeffs.len() {
            let t = self.coeffs[i - 1].mul(eps);
            self.coeffs[i] = self.coeffs[i].add(&t);
        }
    }

    pub fn scaled_add(&mut self, factor: &Cyclotomic, other: &CSeries) {
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a = a.add(&b.mul(factor));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::rat;

    #[test]
    fn trailing_degree_examples() {
        // t^4 + t^8 -> 4
        let p = QPoly::from_integers(&[0, 0, 0, 0, 1, 0, 0, 0, 1]);
        assert_eq!(p.trailing_degree().unwrap(), 4);
        let one = QPoly::from_integers(&[1]);
        assert_eq!(one.trailing_degree().unwrap(), 0);
        assert!(QPoly::zero().trailing_degree().is_err());
    }

    #[test]
    fn divides_examples() {
        let one = QPoly::from_integers(&[1]);
        let any = QPoly::from_integers(&[3, 0, -2, 7]);
        assert!(one.divides(&any).unwrap());

        // (1 + t) divides (1 - t^2)
        let f = QPoly::from_integers(&[1, 1]);
        let g = QPoly::from_integers(&[1, 0, -1]);
        assert!(f.divides(&g).unwrap());
        assert!(!g.divides(&f).unwrap());

        assert!(QPoly::zero().divides(&one).is_err());
    }

    #[test]
    fn divrem_reconstructs() {
        let f = QPoly::from_integers(&[2, 0, 1, 5]);
        let g = QPoly::from_integers(&[1, 3]);
        let (q, r) = f.divrem(&g).unwrap();
        assert_eq!(q.mul(&g).add(&r), f);
    }

    #[test]
    fn geometric_expansion() {
        let p = QPoly::t_geometric(4);
        assert_eq!(p.eval(&rat(1)), rat(4));
        assert_eq!(p.degree(), Some(3));
    }

    #[test]
    fn series_geometric() {
        use crate::exact::cyclotomic::Cyclotomic;
        let mut s = CSeries::one(3, 5);
        let eps = Cyclotomic::root_of_unity(3, 1);
        s.mul_geometric(&eps);
        // 1/(1 - z t) = 1 + z t + z^2 t^2 + ...
        for (i, c) in s.coeffs.iter().enumerate() {
            assert_eq!(*c, Cyclotomic::root_of_unity(3, i as i64));
        }
    }
}

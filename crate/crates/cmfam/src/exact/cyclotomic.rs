//! Exact arithmetic in cyclotomic fields Q(zeta_n).
//!
//! Elements are stored as dense coordinate vectors of length phi(n) with
//! respect to the power basis 1, zeta, ..., zeta^{phi(n)-1}, reduced modulo
//! the n-th cyclotomic polynomial. Binary operations on mismatched conductors
//! embed both sides into the lcm conductor first.
//!
//! Equality and hashing are structural (same conductor, same coordinates);
//! use [`Cyclotomic::value_eq`] to compare across conductors.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::rational::{parse_ratio, rat_zero, Rational};

/// Euler totient.
pub fn euler_phi(n: u32) -> u32 {
    let mut n = n as u64;
    let mut result = n;
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result as u32
}

fn divisors(n: u32) -> Vec<u32> {
    let mut ds = Vec::new();
    for d in 1..=n {
        if n % d == 0 {
            ds.push(d);
        }
    }
    ds
}

/// Integer coefficients of the n-th cyclotomic polynomial, index = degree.
///
/// Computed as (x^n - 1) divided by the product of Phi_d over proper divisors
/// d of n; results are cached per conductor.
pub fn cyclotomic_polynomial(n: u32) -> Vec<BigInt> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Vec<BigInt>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = cache.lock().unwrap().get(&n) {
        return hit.clone();
    }
    let poly = compute_cyclotomic(n);
    cache.lock().unwrap().insert(n, poly.clone());
    poly
}

fn compute_cyclotomic(n: u32) -> Vec<BigInt> {
    if n == 1 {
        // x - 1
        return vec![BigInt::from(-1), BigInt::one()];
    }
    // x^n - 1
    let mut num = vec![BigInt::zero(); n as usize + 1];
    num[0] = BigInt::from(-1);
    num[n as usize] = BigInt::one();
    for d in divisors(n) {
        if d < n {
            let phi_d = cyclotomic_polynomial(d);
            num = int_poly_exact_div(&num, &phi_d);
        }
    }
    num
}

/// Exact division of integer polynomials, panics on nonzero remainder
/// (only used for cyclotomic polynomial construction, where it is exact).
fn int_poly_exact_div(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let dn = num.len() - 1;
    let dd = den.len() - 1;
    assert!(den[dd].is_one(), "divisor must be monic");
    let mut rem = num.to_vec();
    let mut quot = vec![BigInt::zero(); dn - dd + 1];
    for i in (0..=dn - dd).rev() {
        let c = rem[i + dd].clone();
        if c.is_zero() {
            continue;
        }
        quot[i] = c.clone();
        for (j, dj) in den.iter().enumerate() {
            rem[i + j] -= &c * dj;
        }
    }
    assert!(rem.iter().all(Zero::is_zero), "inexact division");
    quot
}

/// An element of Q(zeta_n) in power-basis coordinates.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cyclotomic {
    conductor: u32,
    coeffs: Vec<Rational>,
}

impl Cyclotomic {
    pub fn zero(conductor: u32) -> Self {
        assert!(conductor >= 1);
        Cyclotomic {
            conductor,
            coeffs: vec![rat_zero(); euler_phi(conductor) as usize],
        }
    }

    pub fn one(conductor: u32) -> Self {
        Self::from_rational(conductor, Rational::one())
    }

    pub fn from_rational(conductor: u32, r: Rational) -> Self {
        let mut v = Self::zero(conductor);
        v.coeffs[0] = r;
        v
    }

    pub fn from_integer(conductor: u32, k: i64) -> Self {
        Self::from_rational(conductor, Rational::from_integer(BigInt::from(k)))
    }

    /// zeta_n^k.
    pub fn root_of_unity(conductor: u32, k: i64) -> Self {
        let n = conductor as i64;
        let k = k.rem_euclid(n) as usize;
        Self::from_power_terms(conductor, &[(k as u32, Rational::one())])
    }

    /// Sum of c * zeta_n^e over the given terms; exponents taken mod n.
    pub fn from_power_terms(conductor: u32, terms: &[(u32, Rational)]) -> Self {
        let n = conductor as usize;
        let mut raw = vec![rat_zero(); n.max(1)];
        for (e, c) in terms {
            raw[(*e as usize) % n.max(1)] += c;
        }
        let coeffs = reduce_mod_cyclotomic(raw, conductor);
        Cyclotomic { conductor, coeffs }
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// An element is rational iff every coordinate beyond index 0 vanishes.
    pub fn is_rational(&self) -> bool {
        self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    pub fn as_rational(&self) -> Result<Rational> {
        if self.is_rational() {
            Ok(self.coeffs[0].clone())
        } else {
            Err(Error::NotRational {
                conductor: self.conductor,
                detail: format!("{self}"),
            })
        }
    }

    /// Embed into Q(zeta_m) for a multiple m of the conductor.
    pub fn embed(&self, m: u32) -> Self {
        assert!(
            m % self.conductor == 0,
            "embed target {m} must be a multiple of conductor {}",
            self.conductor
        );
        if m == self.conductor {
            return self.clone();
        }
        let step = m / self.conductor;
        let terms: Vec<(u32, Rational)> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i as u32 * step, c.clone()))
            .collect();
        Self::from_power_terms(m, &terms)
    }

    /// Rewrite over conductor m (m dividing the current conductor) if the
    /// element actually lies in Q(zeta_m).
    pub fn reduce_to_conductor(&self, m: u32) -> Option<Self> {
        assert!(self.conductor % m == 0);
        if m == self.conductor {
            return Some(self.clone());
        }
        let phi_m = euler_phi(m) as usize;
        let phi_n = euler_phi(self.conductor) as usize;
        // Columns: the big-field coordinates of zeta_m^j, j < phi(m).
        let cols: Vec<Cyclotomic> = (0..phi_m)
            .map(|j| Cyclotomic::root_of_unity(m, j as i64).embed(self.conductor))
            .collect();
        // Solve the phi(n) x phi(m) system by Gaussian elimination.
        let mut aug: Vec<Vec<Rational>> = (0..phi_n)
            .map(|r| {
                let mut row: Vec<Rational> = cols.iter().map(|c| c.coeffs[r].clone()).collect();
                row.push(self.coeffs[r].clone());
                row
            })
            .collect();
        let mut pivot_rows = Vec::new();
        let mut r = 0;
        for c in 0..phi_m {
            if let Some(pr) = (r..phi_n).find(|&i| !aug[i][c].is_zero()) {
                aug.swap(r, pr);
                let inv = aug[r][c].recip();
                for x in aug[r].iter_mut() {
                    *x *= &inv;
                }
                for i in 0..phi_n {
                    if i != r && !aug[i][c].is_zero() {
                        let f = aug[i][c].clone();
                        for j in 0..=phi_m {
                            let t = &aug[r][j] * &f;
                            aug[i][j] -= t;
                        }
                    }
                }
                pivot_rows.push((r, c));
                r += 1;
            }
        }
        // Consistency: rows without pivots must have zero rhs.
        if aug[r..].iter().any(|row| !row[phi_m].is_zero()) {
            return None;
        }
        let mut out = vec![rat_zero(); phi_m];
        for (row, col) in pivot_rows {
            out[col] = aug[row][phi_m].clone();
        }
        Some(Cyclotomic {
            conductor: m,
            coeffs: out,
        })
    }

    /// Embed both operands into the lcm of their conductors.
    pub fn unify(a: &Self, b: &Self) -> (Self, Self) {
        if a.conductor == b.conductor {
            return (a.clone(), b.clone());
        }
        let m = (a.conductor as u64).lcm(&(b.conductor as u64)) as u32;
        (a.embed(m), b.embed(m))
    }

    /// Mathematical equality across conductors.
    pub fn value_eq(&self, other: &Self) -> bool {
        let (a, b) = Self::unify(self, other);
        a == b
    }

    pub fn add(&self, other: &Self) -> Self {
        let (mut a, b) = Self::unify(self, other);
        for (x, y) in a.coeffs.iter_mut().zip(&b.coeffs) {
            *x += y;
        }
        a
    }

    pub fn sub(&self, other: &Self) -> Self {
        let (mut a, b) = Self::unify(self, other);
        for (x, y) in a.coeffs.iter_mut().zip(&b.coeffs) {
            *x -= y;
        }
        a
    }

    pub fn neg(&self) -> Self {
        let mut a = self.clone();
        for x in a.coeffs.iter_mut() {
            *x = -x.clone();
        }
        a
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (a, b) = Self::unify(self, other);
        let n = a.conductor;
        let phi = a.coeffs.len();
        let mut raw = vec![rat_zero(); 2 * phi];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                raw[i + j] += x * y;
            }
        }
        Cyclotomic {
            conductor: n,
            coeffs: reduce_mod_cyclotomic(raw, n),
        }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        let mut a = self.clone();
        for x in a.coeffs.iter_mut() {
            *x *= r;
        }
        a
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against
    /// the (irreducible) cyclotomic polynomial.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_rational() {
            return Ok(Self::from_rational(self.conductor, self.coeffs[0].recip()));
        }
        let modulus: Vec<Rational> = cyclotomic_polynomial(self.conductor)
            .iter()
            .map(|c| Rational::from_integer(c.clone()))
            .collect();
        let a: Vec<Rational> = self.coeffs.clone();
        // Extended Euclid over Q[x]; s tracks the Bezout coefficient of `a`.
        let (mut r0, mut r1) = (modulus, trim(a));
        let mut s0: Vec<Rational> = vec![];
        let mut s1: Vec<Rational> = vec![Rational::one()];
        while !r1.is_empty() {
            let (q, r) = poly_divrem(&r0, &r1);
            let s = poly_sub(&s0, &poly_mul(&q, &s1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
        }
        // r0 = gcd = nonzero constant since Phi_n is irreducible.
        debug_assert_eq!(r0.len(), 1);
        let inv_gcd = r0[0].recip();
        let mut coeffs: Vec<Rational> = s0.iter().map(|c| c * &inv_gcd).collect();
        coeffs.resize(self.conductor as usize, rat_zero());
        Ok(Cyclotomic {
            conductor: self.conductor,
            coeffs: reduce_mod_cyclotomic(coeffs, self.conductor),
        })
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inv()?))
    }

    /// Complex conjugation, zeta -> zeta^{-1}.
    pub fn conj(&self) -> Self {
        let n = self.conductor;
        let terms: Vec<(u32, Rational)> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (((n as usize - i) % n as usize) as u32, c.clone()))
            .collect();
        Self::from_power_terms(n, &terms)
    }

    /// Rewrite over the smallest conductor dividing the current one that
    /// can express the element. Used for display; arithmetic keeps whatever
    /// conductor the caller established.
    pub fn minimal(&self) -> Self {
        for m in divisors(self.conductor) {
            if m == self.conductor {
                break;
            }
            if let Some(r) = self.reduce_to_conductor(m) {
                return r;
            }
        }
        self.clone()
    }

    /// Serialize as a list of triples [exponent, numerator, denominator].
    pub fn to_triples(&self) -> Vec<(u32, String, String)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i as u32, c.numer().to_string(), c.denom().to_string()))
            .collect()
    }

    /// Parse from triples; exponents may be anywhere in [0, n).
    pub fn from_triples(conductor: u32, triples: &[(u32, String, String)]) -> Result<Self> {
        let mut terms = Vec::with_capacity(triples.len());
        for (e, num, den) in triples {
            if *e >= conductor {
                return Err(Error::Parse {
                    path: String::new(),
                    detail: format!("exponent {e} out of range for conductor {conductor}"),
                });
            }
            terms.push((*e, parse_ratio(num, den)?));
        }
        Ok(Self::from_power_terms(conductor, &terms))
    }
}

/// Reduce raw power-basis coefficients (any length) mod Phi_n, returning
/// exactly phi(n) coordinates.
fn reduce_mod_cyclotomic(mut raw: Vec<Rational>, n: u32) -> Vec<Rational> {
    let phi = euler_phi(n) as usize;
    let modulus = cyclotomic_polynomial(n);
    let deg_m = modulus.len() - 1;
    debug_assert_eq!(deg_m, phi);
    while raw.len() > phi {
        let d = raw.len() - 1;
        let c = raw.pop().unwrap();
        if c.is_zero() {
            continue;
        }
        // x^d = x^{d-phi} * (x^phi - Phi_n(x)) since Phi_n is monic
        for (j, mj) in modulus.iter().enumerate().take(deg_m) {
            if !mj.is_zero() {
                let t = &c * Rational::from_integer(mj.clone());
                raw[d - deg_m + j] -= t;
            }
        }
    }
    raw.resize(phi, rat_zero());
    raw
}

fn trim(mut v: Vec<Rational>) -> Vec<Rational> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

fn poly_divrem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let b = b.to_vec();
    let db = b.len() - 1;
    let mut rem = a.to_vec();
    if rem.len() < b.len() {
        return (vec![], trim(rem));
    }
    let lead_inv = b[db].recip();
    let mut quot = vec![rat_zero(); rem.len() - db];
    for i in (0..quot.len()).rev() {
        let c = &rem[i + db] * &lead_inv;
        if c.is_zero() {
            continue;
        }
        quot[i] = c.clone();
        for (j, bj) in b.iter().enumerate() {
            let t = &c * bj;
            rem[i + j] -= t;
        }
    }
    (trim(quot), trim(rem))
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![rat_zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn poly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = a.to_vec();
    out.resize(out.len().max(b.len()), rat_zero());
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trim(out)
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, "{sign}")?;
            }
            let unit = mag.is_one();
            if i == 0 || !unit {
                write!(f, "{mag}")?;
            }
            if i == 1 {
                write!(f, "z{}", self.conductor)?;
            } else if i > 1 {
                write!(f, "z{}^{}", self.conductor, i)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyc({self})")
    }
}

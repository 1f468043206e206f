//! Linear forms in the Cherednik parameters k_{Omega,j}.
//!
//! A form has no constant term; coefficients are cyclotomic and absent keys
//! mean zero. Parameter indices follow the group's ordered index set, with
//! orbits numbered from 1.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::cyclotomic::Cyclotomic;
use crate::exact::rational::{rat_zero, Rational};

/// Parameter index (Omega, j) with 0 <= j <= e_Omega - 1.
pub type ParamIndex = (u32, u32);

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct LinearForm {
    coeffs: BTreeMap<ParamIndex, Cyclotomic>,
}

impl LinearForm {
    pub fn zero() -> Self {
        LinearForm::default()
    }

    pub fn coeff(&self, idx: ParamIndex) -> Option<&Cyclotomic> {
        self.coeffs.get(&idx)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ParamIndex, &Cyclotomic)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add_term(&mut self, idx: ParamIndex, c: &Cyclotomic) {
        match self.coeffs.get_mut(&idx) {
            Some(existing) => {
                let sum = existing.add(c);
                if sum.is_zero() {
                    self.coeffs.remove(&idx);
                } else {
                    *existing = sum;
                }
            }
            None => {
                if !c.is_zero() {
                    self.coeffs.insert(idx, c.clone());
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (idx, c) in &other.coeffs {
            out.add_term(*idx, c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (idx, c) in &other.coeffs {
            out.add_term(*idx, &c.neg());
        }
        out
    }

    pub fn scale(&self, c: &Cyclotomic) -> Self {
        let mut out = LinearForm::zero();
        if c.is_zero() {
            return out;
        }
        for (idx, a) in &self.coeffs {
            out.add_term(*idx, &a.mul(c));
        }
        out
    }

    pub fn scale_rational(&self, r: &Rational) -> Self {
        if r == &rat_zero() {
            return LinearForm::zero();
        }
        let mut out = LinearForm::zero();
        for (idx, a) in &self.coeffs {
            out.add_term(*idx, &a.scale(r));
        }
        out
    }

    /// All coefficients as rationals, in the order given by `index_order`.
    /// Errors if any coefficient fails to be rational.
    pub fn rational_coeffs(&self, index_order: &[ParamIndex]) -> Result<Vec<Rational>> {
        let mut out = Vec::with_capacity(index_order.len());
        for idx in index_order {
            match self.coeffs.get(idx) {
                Some(c) => out.push(c.as_rational()?),
                None => out.push(rat_zero()),
            }
        }
        // Any coefficient outside the declared coordinate order is a bug.
        for idx in self.coeffs.keys() {
            if !index_order.contains(idx) {
                return Err(Error::Consistency {
                    context: "linear form".into(),
                    expected: "coefficients within the parameter index set".into(),
                    got: format!("stray index {idx:?}"),
                });
            }
        }
        Ok(out)
    }

    /// Evaluate at a rational point given in `index_order` coordinates.
    /// Requires rational coefficients.
    pub fn eval_rational(&self, index_order: &[ParamIndex], point: &[Rational]) -> Result<Rational> {
        let coeffs = self.rational_coeffs(index_order)?;
        Ok(coeffs
            .iter()
            .zip(point)
            .map(|(c, x)| c * x)
            .fold(rat_zero(), |a, b| a + b))
    }
}

/// Render with integer-like coefficients, e.g. "12k_{1,0} - 12k_{1,1}".
pub fn format_rational_form(coeffs: &[Rational], index_order: &[ParamIndex]) -> String {
    let mut s = String::new();
    for (c, (omega, j)) in coeffs.iter().zip(index_order) {
        if c.is_zero() {
            continue;
        }
        if s.is_empty() {
            if c.is_negative() {
                s.push('-');
            }
        } else {
            s.push_str(if c.is_negative() { " - " } else { " + " });
        }
        let mag = c.abs();
        if !mag.is_one() {
            s.push_str(&mag.to_string());
        }
        s.push_str(&format!("k_{{{omega},{j}}}"));
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for ((omega, j), c) in &self.coeffs {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})k_{{{omega},{j}}}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::rat;

    fn cyc(n: i64) -> Cyclotomic {
        Cyclotomic::from_integer(3, n)
    }

    #[test]
    fn zero_coefficients_are_absent() {
        let mut f = LinearForm::zero();
        f.add_term((1, 0), &cyc(5));
        f.add_term((1, 0), &cyc(-5));
        assert!(f.is_zero());
        assert_eq!(f, LinearForm::zero());
    }

    #[test]
    fn rational_demotion() {
        let mut f = LinearForm::zero();
        f.add_term((1, 0), &cyc(3));
        f.add_term((1, 2), &cyc(-1));
        let order = [(1, 0), (1, 1), (1, 2)];
        assert_eq!(f.rational_coeffs(&order).unwrap(), vec![rat(3), rat(0), rat(-1)]);

        let z = Cyclotomic::root_of_unity(3, 1);
        let mut g = LinearForm::zero();
        g.add_term((1, 1), &z);
        assert!(g.rational_coeffs(&order).is_err());
    }

    #[test]
    fn evaluation() {
        let mut f = LinearForm::zero();
        f.add_term((1, 0), &cyc(2));
        f.add_term((2, 1), &cyc(-3));
        let order = [(1, 0), (1, 1), (2, 0), (2, 1)];
        let point = [rat(1), rat(10), rat(100), rat(1000)];
        assert_eq!(f.eval_rational(&order, &point).unwrap(), rat(2 - 3000));
    }

    #[test]
    fn format_matches_table_style() {
        let coeffs = vec![rat(12), rat(-12), rat(0)];
        let order = [(1, 0), (1, 1), (1, 2)];
        assert_eq!(format_rational_form(&coeffs, &order), "12k_{1,0} - 12k_{1,1}");
        assert_eq!(format_rational_form(&[rat(0), rat(0), rat(0)], &order), "0");
    }
}

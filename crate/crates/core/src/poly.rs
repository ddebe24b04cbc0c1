//! Univariate polynomials in `t` with exact coefficients.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::scalar::Coeff;

/// A polynomial in `t`, coefficients stored in ascending degree with no
/// trailing zeros. The zero polynomial has an empty coefficient list.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Poly<T = i64> {
    coeffs: Vec<T>,
}

impl<T: Coeff> Poly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// `c * t^degree`.
    pub fn monomial(c: T, degree: usize) -> Self {
        let mut coeffs = vec![T::zero(); degree + 1];
        coeffs[degree] = c;
        Self::new(coeffs)
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| T::from_i64(c)).collect())
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Coefficient of `t^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, t: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * t.clone() + c.clone())
    }

    /// Multiplies by `t^d`.
    pub fn shift(&self, d: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![T::zero(); d];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::new(self.coeffs.iter().map(|x| x.clone() * c.clone()).collect())
    }

    /// True when `t^deg p(1/t) = p(t)`.
    pub fn is_palindromic(&self) -> bool {
        self.coeffs.iter().eq(self.coeffs.iter().rev())
    }
}

impl<T: Coeff> Default for Poly<T> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<T: Coeff> Add for &Poly<T> {
    type Output = Poly<T>;

    fn add(self, rhs: &Poly<T>) -> Poly<T> {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<T: Coeff> Add for Poly<T> {
    type Output = Poly<T>;

    fn add(self, rhs: Poly<T>) -> Poly<T> {
        &self + &rhs
    }
}

impl<T: Coeff> AddAssign<&Poly<T>> for Poly<T> {
    fn add_assign(&mut self, rhs: &Poly<T>) {
        *self = &*self + rhs;
    }
}

impl<T: Coeff> Neg for &Poly<T> {
    type Output = Poly<T>;

    fn neg(self) -> Poly<T> {
        Poly::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

impl<T: Coeff> Sub for &Poly<T> {
    type Output = Poly<T>;

    fn sub(self, rhs: &Poly<T>) -> Poly<T> {
        self + &(-rhs)
    }
}

impl<T: Coeff> Mul for &Poly<T> {
    type Output = Poly<T>;

    fn mul(self, rhs: &Poly<T>) -> Poly<T> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(out)
    }
}

impl<T: Coeff> Mul for Poly<T> {
    type Output = Poly<T>;

    fn mul(self, rhs: Poly<T>) -> Poly<T> {
        &self * &rhs
    }
}

impl<T: Coeff + fmt::Display> fmt::Display for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                _ if c.is_one() => write!(f, "t")?,
                _ => write!(f, "{c}t")?,
            }
            if i > 1 {
                write!(f, "^{i}")?;
            }
        }
        Ok(())
    }
}

/// The q-integer `[m]_t = 1 + t + ... + t^(m-1)`; `[0]_t = 0`.
pub fn q_int<T: Coeff>(m: usize) -> Poly<T> {
    Poly::new(vec![T::one(); m])
}

/// The q-factorial `[m]_t! = [1]_t [2]_t ... [m]_t`; `[0]_t! = 1`.
pub fn q_factorial<T: Coeff>(m: usize) -> Poly<T> {
    (1..=m).fold(Poly::one(), |acc, j| &acc * &q_int(j))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::TPoly;
    use num_bigint::BigInt;

    #[test]
    fn q_integers() {
        assert_eq!(q_int::<i64>(1), TPoly::one());
        assert_eq!(q_factorial::<i64>(1), TPoly::one());
        assert_eq!(q_factorial::<i64>(0), TPoly::one());
        assert_eq!(q_int::<i64>(3), TPoly::from_i64s(&[1, 1, 1]));
        assert_eq!(q_factorial::<i64>(3), TPoly::from_i64s(&[1, 2, 2, 1]));
        assert!(q_int::<i64>(0).is_zero());
    }

    #[test]
    fn q_factorial_at_one_is_factorial() {
        let mut fact = 1i64;
        for m in 1..=10 {
            fact *= m as i64;
            assert_eq!(q_factorial::<i64>(m).eval(&1), fact);
            assert!(q_factorial::<i64>(m).is_palindromic());
        }
        let big: Poly<BigInt> = q_factorial(25);
        assert_eq!(
            big.eval(&BigInt::from(1)),
            (1..=25u32).map(BigInt::from).product::<BigInt>()
        );
    }

    #[test]
    fn arithmetic_trims() {
        let p = TPoly::from_i64s(&[1, 2, 3]);
        assert!((&p - &p).is_zero());
        assert_eq!((&p - &p).degree(), None);
        assert_eq!(p.shift(2), TPoly::from_i64s(&[0, 0, 1, 2, 3]));
        assert_eq!(
            format!("{}", TPoly::from_i64s(&[1, 0, -2, 1])),
            "1 + -2t^2 + t^3"
        );
    }

    #[test]
    fn json_is_plain_coefficient_list() {
        let p = TPoly::from_i64s(&[0, 1, 1]);
        assert_eq!(serde_json::to_string(&p).unwrap(), "[0,1,1]");
    }
}

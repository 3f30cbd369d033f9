use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::Rational;

/// Dense univariate polynomial over the rationals, coefficients stored from
/// the constant term upward with no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub(crate) struct UPoly {
    coeffs: Vec<Rational>,
}

impl UPoly {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self { coeffs: vec![Rational::one()] }
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    /// Long division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &UPoly) -> (UPoly, UPoly) {
        let d = divisor.degree().expect("division by the zero polynomial");
        let lead = divisor.leading().unwrap();
        let mut rem = self.coeffs.clone();
        let Some(n) = self.degree() else {
            return (UPoly::zero(), UPoly::zero());
        };
        if n < d {
            return (UPoly::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); n - d + 1];
        for shift in (0..=n - d).rev() {
            let c = &rem[shift + d] / lead;
            if c.is_zero() {
                continue;
            }
            for (i, dc) in divisor.coeffs.iter().enumerate() {
                rem[shift + i] -= &c * dc;
            }
            quot[shift] = c;
        }
        (UPoly::from_coeffs(quot), UPoly::from_coeffs(rem))
    }

    /// Division known to be exact (as in fraction-free elimination).
    pub fn div_exact(&self, divisor: &UPoly) -> UPoly {
        let (q, r) = self.div_rem(divisor);
        debug_assert!(r.is_zero(), "inexact polynomial division");
        q
    }
}

impl Add for &UPoly {
    type Output = UPoly;
    fn add(self, rhs: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let zero = Rational::zero();
        let coeffs = (0..n)
            .map(|i| self.coeffs.get(i).unwrap_or(&zero) + rhs.coeffs.get(i).unwrap_or(&zero))
            .collect();
        UPoly::from_coeffs(coeffs)
    }
}

impl Neg for &UPoly {
    type Output = UPoly;
    fn neg(self) -> UPoly {
        UPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Sub for &UPoly {
    type Output = UPoly;
    fn sub(self, rhs: &UPoly) -> UPoly {
        self + &(-rhs)
    }
}

impl Mul for &UPoly {
    type Output = UPoly;
    fn mul(self, rhs: &UPoly) -> UPoly {
        if self.is_zero() || rhs.is_zero() {
            return UPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UPoly::from_coeffs(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[i64]) -> UPoly {
        UPoly::from_coeffs(cs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    #[test]
    fn div_rem_reconstructs() {
        let a = p(&[3, 0, -2, 5, 1]);
        let b = p(&[1, 0, -1]);
        let (q, r) = a.div_rem(&b);
        assert!(r.degree().is_none_or(|d| d < 2));
        assert_eq!(&(&q * &b) + &r, a);
    }

    #[test]
    fn exact_division_by_square_minus_one() {
        let d = p(&[-1, 0, 1]);
        let f = p(&[2, 1, 7]);
        assert_eq!((&f * &d).div_exact(&d), f);
    }

    #[test]
    fn zero_dividend() {
        let (q, r) = UPoly::zero().div_rem(&p(&[1, 1]));
        assert!(q.is_zero() && r.is_zero());
    }
}

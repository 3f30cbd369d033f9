use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::poly::UPoly;
use super::Rational;

/// Laurent polynomial in `t` with half-integer exponents and rational
/// coefficients.
///
/// A term is keyed by the numerator `k` of its exponent, so key `k` means
/// `t^(k/2)`. Equivalently this is an ordinary Laurent polynomial in
/// `u = t^(1/2)`, which is how division and determinants treat it.
/// Zero coefficients are never stored; the zero polynomial is the empty map.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct HalfLaurent {
    terms: BTreeMap<i64, Rational>,
}

impl HalfLaurent {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(0, c)
    }

    /// `c · t^(half_exp/2)`.
    pub fn monomial(half_exp: i64, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(half_exp, c);
        }
        Self { terms }
    }

    /// `t^(half_exp/2)` with unit coefficient.
    pub fn t_pow_half(half_exp: i64) -> Self {
        Self::monomial(half_exp, Rational::one())
    }

    /// `z = t^(1/2) − t^(−1/2)`.
    pub fn z() -> Self {
        Self::from_terms([(1, Rational::one()), (-1, -Rational::one())])
    }

    /// Builds a polynomial from `(half_exp, coeff)` pairs, summing repeated
    /// exponents and dropping zeros.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, Rational)>,
    {
        let mut out = Self::zero();
        for (k, c) in terms {
            out.add_term(k, c);
        }
        out
    }

    /// Convenience for integer coefficients.
    pub fn from_int_terms(terms: &[(i64, i64)]) -> Self {
        Self::from_terms(terms.iter().map(|&(k, c)| (k, Rational::from_integer(c.into()))))
    }

    fn add_term(&mut self, k: i64, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(k).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&k);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing exponent order, keyed by exponent numerator.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &Rational)> + '_ {
        self.terms.iter().map(|(&k, c)| (k, c))
    }

    pub fn coeff(&self, half_exp: i64) -> Rational {
        self.terms.get(&half_exp).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn min_half_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_half_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(&k, v)| (k, v * c)).collect() }
    }

    /// Multiplies by `t^(half_exp/2)`.
    pub fn shift(&self, half_exp: i64) -> Self {
        Self { terms: self.terms.iter().map(|(&k, v)| (k + half_exp, v.clone())).collect() }
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Value at `t = 1`: the sum of the coefficients.
    pub fn eval_at_one(&self) -> Rational {
        self.terms.values().fold(Rational::zero(), |acc, c| acc + c)
    }

    /// Formal `d/dt`; the term `c·t^(k/2)` becomes `c·(k/2)·t^(k/2 − 1)`.
    pub fn derivative(&self) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .map(|(&k, c)| (k - 2, c * Rational::new(k.into(), 2.into()))),
        )
    }

    /// Second derivative at `t = 1`, summed termwise as `c·(k/2)·(k/2 − 1)`.
    pub fn second_derivative_at_one(&self) -> Rational {
        self.terms.iter().fold(Rational::zero(), |acc, (&k, c)| {
            let e = Rational::new(k.into(), 2.into());
            let f = &e - Rational::one();
            acc + c * e * f
        })
    }

    /// The substitution `t ↦ t^(−1)`.
    pub fn involution(&self) -> Self {
        Self { terms: self.terms.iter().map(|(&k, c)| (-k, c.clone())).collect() }
    }

    /// Exact quotient by `z^k`, or `None` when `z^k` does not divide `self`.
    ///
    /// With `u = t^(1/2)`, `z^k = u^(−k)(u² − 1)^k` and `u` is a unit, so this
    /// reduces to repeated polynomial division by `u² − 1`.
    pub fn div_z_power(&self, k: u32) -> Option<Self> {
        let Some(low) = self.min_half_exp() else {
            return Some(Self::zero());
        };
        let high = self.max_half_exp().unwrap();
        let coeffs = (low..=high).map(|e| self.coeff(e)).collect();
        let mut body = UPoly::from_coeffs(coeffs);
        let square_minus_one = UPoly::from_coeffs(vec![-Rational::one(), Rational::zero(), Rational::one()]);
        for _ in 0..k {
            let (q, r) = body.div_rem(&square_minus_one);
            if !r.is_zero() {
                return None;
            }
            body = q;
        }
        let base = low + i64::from(k);
        Some(Self::from_terms(
            body.coeffs().iter().enumerate().map(|(i, c)| (base + i as i64, c.clone())),
        ))
    }

    pub fn divides_z_power(&self, k: u32) -> bool {
        self.div_z_power(k).is_some()
    }

    /// Polynomial in `u = t^(1/2)`; all exponents must be non-negative.
    pub(crate) fn to_nonnegative_upoly(&self) -> UPoly {
        let Some(high) = self.max_half_exp() else {
            return UPoly::zero();
        };
        assert!(self.min_half_exp().unwrap() >= 0, "negative exponent in polynomial conversion");
        UPoly::from_coeffs((0..=high).map(|e| self.coeff(e)).collect())
    }

    pub(crate) fn from_upoly(offset: i64, p: &UPoly) -> Self {
        Self::from_terms(p.coeffs().iter().enumerate().map(|(i, c)| (offset + i as i64, c.clone())))
    }
}

impl From<Rational> for HalfLaurent {
    fn from(c: Rational) -> Self {
        Self::constant(c)
    }
}

impl From<i64> for HalfLaurent {
    fn from(c: i64) -> Self {
        Self::constant(Rational::from_integer(c.into()))
    }
}

impl Add for &HalfLaurent {
    type Output = HalfLaurent;
    fn add(self, rhs: &HalfLaurent) -> HalfLaurent {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for HalfLaurent {
    type Output = HalfLaurent;
    fn add(mut self, rhs: HalfLaurent) -> HalfLaurent {
        self += &rhs;
        self
    }
}

impl AddAssign<&HalfLaurent> for HalfLaurent {
    fn add_assign(&mut self, rhs: &HalfLaurent) {
        for (&k, c) in &rhs.terms {
            self.add_term(k, c.clone());
        }
    }
}

impl Neg for &HalfLaurent {
    type Output = HalfLaurent;
    fn neg(self) -> HalfLaurent {
        HalfLaurent { terms: self.terms.iter().map(|(&k, c)| (k, -c)).collect() }
    }
}

impl Neg for HalfLaurent {
    type Output = HalfLaurent;
    fn neg(self) -> HalfLaurent {
        -&self
    }
}

impl Sub for &HalfLaurent {
    type Output = HalfLaurent;
    fn sub(self, rhs: &HalfLaurent) -> HalfLaurent {
        self + &(-rhs)
    }
}

impl Sub for HalfLaurent {
    type Output = HalfLaurent;
    fn sub(self, rhs: HalfLaurent) -> HalfLaurent {
        &self - &rhs
    }
}

impl Mul for &HalfLaurent {
    type Output = HalfLaurent;
    fn mul(self, rhs: &HalfLaurent) -> HalfLaurent {
        let mut out = HalfLaurent::zero();
        for (&a, ca) in &self.terms {
            for (&b, cb) in &rhs.terms {
                out.add_term(a + b, ca * cb);
            }
        }
        out
    }
}

impl Mul for HalfLaurent {
    type Output = HalfLaurent;
    fn mul(self, rhs: HalfLaurent) -> HalfLaurent {
        &self * &rhs
    }
}

fn fmt_power(k: i64) -> String {
    match k {
        2 => "t".to_owned(),
        _ if k % 2 == 0 => format!("t^{}", k / 2),
        _ => format!("t^({k}/2)"),
    }
}

impl fmt::Display for HalfLaurent {
    /// Terms from the highest exponent down, e.g. `t - 1 + t^-1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (&k, c)) in self.terms.iter().rev().enumerate() {
            let mag = c.abs();
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if k == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                f.write_str(&fmt_power(k))?;
            } else {
                write!(f, "{mag}*{}", fmt_power(k))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for HalfLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HalfLaurent({self})")
    }
}

//! Representation count behind the `|Tor H₁|` factor for `Y # L(p, q)`.
//!
//! Representations `Z_p → SU(2)` send the generator to `exp(2πin/p)`; two are
//! conjugate iff their traces `2cos(2πn/p)` agree, i.e. iff `n ≡ ±n' (mod p)`.
//! Central classes (`n = 0`, and `n = p/2` for even `p`) contribute a point
//! each; the rest have stabilizer `U(1)` and contribute a 2-sphere, hence
//! `χ(S²) = 2` in absolute value.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::ring::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct LensBreakdown {
    pub p: u64,
    pub central_classes: u64,
    pub sphere_classes: u64,
    pub euler_factor: u64,
}

/// Enumerates `0 ≤ n < p`, keeping one representative `min(n, p − n)` per
/// trace value.
pub fn rep_classes(p: i64) -> Result<LensBreakdown> {
    if p <= 0 {
        return Err(Error::InvalidP(p));
    }
    let p = p as u64;
    let (mut central, mut spheres) = (0, 0);
    for n in 0..p {
        let rep = n.min(p - n);
        if rep != n {
            continue;
        }
        // γ(1) = ±1 exactly when 2n ≡ 0 (mod p).
        if (2 * n) % p == 0 {
            central += 1;
        } else {
            spheres += 1;
        }
    }
    Ok(LensBreakdown { p, central_classes: central, sphere_classes: spheres, euler_factor: central + 2 * spheres })
}

/// `χ(I(Y # L(p,q))) = p·χ(I(Y))`.
pub fn connect_sum_chi(chi_y: &BigInt, p: i64) -> Result<BigInt> {
    let factor = rep_classes(p)?.euler_factor;
    debug_assert_eq!(factor, p as u64);
    Ok(chi_y * BigInt::from(factor))
}

/// `λ_L(Y # L(p,q)) = p·λ_L(Y)`. Stated for `Y` with torsion-free `H₁` of
/// rank at least one; checking that is left to the caller.
pub fn lescop_connect_sum(lambda_y: &Rational, p: i64) -> Result<Rational> {
    if p <= 0 {
        return Err(Error::InvalidP(p));
    }
    Ok(lambda_y * Rational::from_integer(p.into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{frac, int};
    use std::collections::HashSet;

    #[test]
    fn small_orders() {
        let b = |p| {
            let r = rep_classes(p).unwrap();
            (r.central_classes, r.sphere_classes, r.euler_factor)
        };
        assert_eq!(b(1), (1, 0, 1));
        assert_eq!(b(5), (1, 2, 5));
        assert_eq!(b(4), (2, 1, 4));
        assert!(matches!(rep_classes(0), Err(Error::InvalidP(0))));
        assert!(matches!(rep_classes(-3), Err(Error::InvalidP(-3))));
    }

    #[test]
    fn factor_and_parity_breakdown() {
        for p in 1..=256i64 {
            let r = rep_classes(p).unwrap();
            assert_eq!(r.euler_factor, p as u64);
            let p = p as u64;
            if p % 2 == 1 {
                assert_eq!((r.central_classes, r.sphere_classes), (1, (p - 1) / 2));
            } else {
                assert_eq!((r.central_classes, r.sphere_classes), (2, (p - 2) / 2));
            }
        }
    }

    /// Classes of `n/p mod 1` under negation, counted as exact fractions.
    #[test]
    fn matches_fraction_orbit_count() {
        for p in 1..=64i64 {
            let mut orbits = HashSet::new();
            let mut central = 0;
            for n in 0..p {
                let x = frac(n, p);
                let neg = (int(1) - &x) - (int(1) - &x).floor();
                let key = if x <= neg { x.clone() } else { neg };
                if orbits.insert(key.clone()) && (key == int(0) || key == frac(1, 2)) {
                    central += 1;
                }
            }
            let r = rep_classes(p).unwrap();
            assert_eq!(orbits.len() as u64, r.central_classes + r.sphere_classes);
            assert_eq!(central, r.central_classes);
        }
    }

    #[test]
    fn connected_sums() {
        assert_eq!(connect_sum_chi(&BigInt::from(-2), 3).unwrap(), BigInt::from(-6));
        assert_eq!(connect_sum_chi(&BigInt::from(0), 9).unwrap(), BigInt::from(0));
        assert_eq!(connect_sum_chi(&BigInt::from(-2), 1).unwrap(), BigInt::from(-2));
        assert_eq!(lescop_connect_sum(&int(-1), 5).unwrap(), int(-5));
        assert_eq!(lescop_connect_sum(&int(0), 4).unwrap(), int(0));
        assert_eq!(lescop_connect_sum(&frac(-1, 12), 2).unwrap(), frac(-1, 6));
    }
}

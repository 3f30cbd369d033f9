//! Seeded generators of valid presentations, used by the property suites
//! and benchmarks. Same seed, same data.

use std::collections::BTreeMap;
use std::ops::RangeInclusive;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::presentation::{build_ribbon_pair, build_triple, Component, RibbonPairSpec, Sign, SurgeryPresentation};
use crate::ring::{Rational, RationalMatrix};

pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Self { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    /// Entry with `|x| ≤ bound`; when `h > 1` the denominator is a random
    /// divisor of `h`.
    fn entry(&mut self, lo: i64, hi: i64, h: u64) -> Rational {
        let divisors: Vec<i64> = (1..=h as i64).filter(|d| h as i64 % d == 0).collect();
        let d = *divisors.choose(&mut self.rng).unwrap();
        Rational::new(self.rng.gen_range(lo * d..=hi * d).into(), d.into())
    }

    pub fn sign(&mut self) -> Sign {
        if self.rng.gen() {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    /// Random `2g × 2g` Seifert matrix `B + K` with `B` symmetric and
    /// `K − Kᵀ` the standard symplectic form, so `V − Vᵀ` is integral with
    /// determinant 1. All entries satisfy `|x| ≤ bound`.
    pub fn seifert(&mut self, g: usize, bound: i64, h: u64) -> RationalMatrix {
        let n = 2 * g;
        let mut v = RationalMatrix::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                let symplectic = j == i + 1 && i % 2 == 0;
                let b = self.entry(-bound, if symplectic { bound - 1 } else { bound }, h);
                if symplectic {
                    v.set(i, j, &b + Rational::from_integer(1.into()));
                    v.set(j, i, b);
                } else {
                    v.set(i, j, b.clone());
                    v.set(j, i, b);
                }
            }
        }
        v
    }

    pub fn vector(&mut self, len: usize, bound: i64, h: u64) -> Vec<Rational> {
        (0..len).map(|_| self.entry(-bound, bound, h)).collect()
    }

    /// `n` components named `k1 … kn`, genus at most `g_max`, random linking
    /// vectors in every direction.
    pub fn presentation(&mut self, n: usize, g_max: usize, bound: i64, h: u64) -> SurgeryPresentation {
        let mut comps: Vec<Component> = (1..=n)
            .map(|i| {
                let g = self.rng.gen_range(0..=g_max);
                Component::new(format!("k{i}"), self.seifert(g, bound, h))
            })
            .collect();
        let names: Vec<String> = comps.iter().map(|c| c.name.clone()).collect();
        for c in &mut comps {
            for other in names.iter().filter(|o| **o != c.name) {
                let v = self.vector(c.seifert.rows(), bound, h);
                c.linking.insert(other.clone(), v);
            }
        }
        SurgeryPresentation::new(h, comps)
    }

    pub fn ribbon_spec(&mut self, s: RangeInclusive<i64>, g_max: usize, h: u64) -> RibbonPairSpec {
        let s = self.rng.gen_range(s);
        let g = self.rng.gen_range(0..=g_max);
        let w = self.seifert(g, 3, h);
        let a = self.vector(2 * g, 3, h);
        let eps = self.sign();
        RibbonPairSpec::new(s, a, w, eps, h)
    }

    /// Builder family with `n` components: a knot, a ribbon pair, a triple,
    /// or a triple plus `n − 3` extra components `l4 …` carrying random
    /// Seifert data and random linking vectors in every direction.
    pub fn split_family(&mut self, n: usize, g_max: usize, h: u64) -> SurgeryPresentation {
        match n {
            0 => SurgeryPresentation::new(h, Vec::new()),
            1 => {
                let g = self.rng.gen_range(0..=g_max);
                let v = self.seifert(g, 3, h);
                SurgeryPresentation::knot(h, "l1", v)
            }
            2 => build_ribbon_pair(&self.ribbon_spec(-5..=5, g_max, h)).expect("valid spec"),
            _ => {
                let spec = self.ribbon_spec(-5..=5, g_max, h);
                let mu = self.rng.gen_range(-3..=3);
                let mut p = build_triple(mu, &spec).expect("valid spec");
                for i in 4..=n {
                    let g = self.rng.gen_range(0..=1);
                    let mut comp = Component::new(format!("l{i}"), self.seifert(g, 3, h));
                    let mut incoming = BTreeMap::new();
                    for c in &p.components {
                        incoming.insert(c.name.clone(), self.vector(c.seifert.rows(), 3, h));
                        comp.linking.insert(c.name.clone(), self.vector(comp.seifert.rows(), 3, h));
                    }
                    p.add_component(comp, incoming).expect("fresh name");
                }
                p
            }
        }
    }
}

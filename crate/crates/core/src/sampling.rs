//! Seeded random rationals for sampling-based checks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::liecore::Weight;
use crate::{qf, Rational};

/// Deterministic sampler of small rationals.
#[derive(Clone, Debug)]
pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    /// Numerator in `[-60, 60]`, denominator in `[1, 11]`.
    pub fn rational(&mut self) -> Rational {
        let num = self.rng.gen_range(-60i64..=60);
        let den = self.rng.gen_range(1i64..=11);
        qf(num, den)
    }

    /// A rational that is not an integer or half-integer, so it avoids every
    /// integral linkage locus.
    pub fn generic_rational(&mut self) -> Rational {
        loop {
            let r = self.rational();
            let twice = &r * Rational::from_integer(2.into());
            if !twice.is_integer() {
                return r;
            }
        }
    }

    pub fn weight(&mut self, rank: usize) -> Weight {
        Weight::new((0..rank).map(|_| self.rational()).collect())
    }

    pub fn int(&mut self, lo: i64, hi: i64) -> i64 {
        self.rng.gen_range(lo..=hi)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic() {
        let a: Vec<_> = (0..5).map({
            let mut s = Sampler::new(7);
            move |_| s.rational()
        }).collect();
        let b: Vec<_> = (0..5).map({
            let mut s = Sampler::new(7);
            move |_| s.rational()
        }).collect();
        assert_eq!(a, b);
        let g = Sampler::new(1).generic_rational();
        assert!(!(g * Rational::from_integer(2.into())).is_integer());
    }
}

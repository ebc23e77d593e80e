//! Shared helpers for the integration tests: a deterministic RNG and random
//! test-function generators.

use num_complex::Complex64;
use oscquad_core::oracle::{make_polynomial, make_sum, make_trig, Oracle};

/// SplitMix64; deterministic across platforms.
pub struct Rng(u64);

impl Rng {
    pub fn new(seed: u64) -> Self {
        Rng(seed)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform in [0, 1).
    pub fn unit(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 / (1u64 << 53) as f64
    }

    /// Uniform in [-1, 1).
    pub fn sym(&mut self) -> f64 {
        2.0 * self.unit() - 1.0
    }

    pub fn complex(&mut self) -> Complex64 {
        Complex64::new(self.sym(), self.sym())
    }
}

pub fn random_polynomial(rng: &mut Rng, max_degree: usize) -> Oracle {
    let deg = 1 + (rng.next_u64() as usize % max_degree);
    make_polynomial((0..=deg).map(|_| rng.complex()).collect())
}

pub fn random_trig(rng: &mut Rng, max_freq: i64, terms: usize) -> Oracle {
    let coeffs = (0..terms)
        .map(|_| {
            let h = (rng.next_u64() as i64).rem_euclid(2 * max_freq + 1) - max_freq;
            (h, rng.complex())
        })
        .collect();
    make_trig(coeffs)
}

pub fn random_mixture(rng: &mut Rng) -> Oracle {
    make_sum(vec![
        random_polynomial(rng, 4),
        random_trig(rng, 3, 3),
    ])
}

//! Deterministic random instances: integer-coordinate sites on a square
//! grid, rejection-resampled until they pass general-position validation.
//!
//! Degeneracies have positive probability on a grid, so every draw is
//! validated and rejected draws are replaced by continuing the same seeded
//! stream — `(n, seed, box)` always produces the same site set. Sampling
//! uses a fixed ChaCha stream and hand-rolled unbiased range reduction, so
//! the output does not depend on any distribution library's internals.

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};
use thiserror::Error;

use crate::geom::{Point, SiteSet};
use crate::Rat;

/// Attempts before giving up on a degenerate-prone parameter choice.
pub const RESAMPLE_BUDGET: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeneratorError {
    #[error("need n >= 3, got {0}")]
    TooFewSites(usize),
    #[error("box must be at least n ({n}), got {box_size}")]
    BoxTooSmall { n: usize, box_size: i64 },
    #[error(
        "no general-position set of {n} points in [0,{box_size}]^2 found in {attempts} attempts (seed {seed})"
    )]
    BudgetExhausted {
        n: usize,
        seed: u64,
        box_size: i64,
        attempts: usize,
    },
}

/// Uniform value in `[0, bound)`, unbiased by rejection.
fn uniform(rng: &mut ChaCha8Rng, bound: u64) -> u64 {
    let threshold = bound.wrapping_neg() % bound;
    loop {
        let v = rng.next_u64();
        if v >= threshold {
            return v % bound;
        }
    }
}

/// Draws `n` distinct integer points uniform in `[0, box_size]^2`, in
/// general position, deterministically from `seed`.
pub fn generate(n: usize, seed: u64, box_size: i64) -> Result<SiteSet<Rat>, GeneratorError> {
    if n < 3 {
        return Err(GeneratorError::TooFewSites(n));
    }
    if box_size < n as i64 {
        return Err(GeneratorError::BoxTooSmall { n, box_size });
    }
    let bound = box_size as u64 + 1;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..RESAMPLE_BUDGET {
        let sites: Vec<Point<Rat>> = (0..n)
            .map(|_| {
                let x = uniform(&mut rng, bound) as i64;
                let y = uniform(&mut rng, bound) as i64;
                Point::new(Rat::from_integer(x.into()), Rat::from_integer(y.into()))
            })
            .collect();
        let set = SiteSet::new(sites).expect("n >= 3 was checked");
        if set.validate_general_position().is_ok() {
            return Ok(set);
        }
    }
    Err(GeneratorError::BudgetExhausted {
        n,
        seed,
        box_size,
        attempts: RESAMPLE_BUDGET,
    })
}

#![allow(dead_code)]

use floor_commutator::exactnum::{PosRat, Rat};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rat(s: &str) -> Rat {
    s.parse().unwrap()
}

pub fn pos(s: &str) -> PosRat {
    PosRat::new(rat(s)).unwrap()
}

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `n/d` with `n` in `lo..=hi` and `d` in `1..=max_den`.
pub fn random_rat(rng: &mut impl Rng, lo: i64, hi: i64, max_den: i64) -> Rat {
    Rat::frac(rng.gen_range(lo..=hi), rng.gen_range(1..=max_den))
}

pub fn random_pos(rng: &mut impl Rng, max_num: i64, max_den: i64) -> PosRat {
    PosRat::new(random_rat(rng, 1, max_num, max_den)).unwrap()
}

/// All distinct pairs `(−a/b, −c/d)` with `1 ≤ a, c ≤ num` and
/// `1 ≤ b, d ≤ den`, in a fixed order.
pub fn negative_grid(num: i64, den: i64) -> Vec<(Rat, Rat)> {
    let mut values: Vec<Rat> = Vec::new();
    for a in 1..=num {
        for b in 1..=den {
            values.push(-Rat::frac(a, b));
        }
    }
    values.sort();
    values.dedup();
    let mut out = Vec::new();
    for alpha in &values {
        for beta in &values {
            out.push((alpha.clone(), beta.clone()));
        }
    }
    out
}

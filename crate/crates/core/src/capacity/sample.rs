//! Seeded samplers for dominant weights and positive coweights.

use rand::Rng;

use crate::error::Result;
use crate::rational::{int, RationalVector};
use crate::rootsystem::{Family, RootSystem};

/// Σ_j c_j ω_j with integer c_j in [lo, hi] (lo = 1 gives regular weights).
/// Type A samples get a random multiple of (1, …, 1) added, so they range
/// over U(n) weights rather than only the trace-zero ones.
pub fn dominant<R: Rng>(rs: &RootSystem, rng: &mut R, lo: i64, hi: i64) -> Result<RationalVector> {
    let mut acc = RationalVector::zeros(rs.ambient_dim());
    for j in 0..rs.rank() {
        let c = rng.gen_range(lo..=hi);
        if c != 0 {
            acc = &acc + &rs.fundamental_weight(j)?.scale(&int(c));
        }
    }
    if rs.family() == Family::A {
        let shift = int(rng.gen_range(-hi..=hi));
        acc = RationalVector(acc.0.iter().map(|x| x + &shift).collect());
    }
    Ok(acc)
}

/// Dominant weight with integer coordinates in the classical conventions:
/// sorted integers for A, sorted nonnegative for B and C, and for D sorted
/// with λ_{n-1} ≥ |λ_n|. Other types fall back to [`dominant`].
pub fn dominant_integral<R: Rng>(rs: &RootSystem, rng: &mut R, hi: i64) -> Result<RationalVector> {
    let n = rs.ambient_dim();
    let mut sorted = |lo: i64| {
        let mut v: Vec<i64> = (0..n).map(|_| rng.gen_range(lo..=hi)).collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    };
    match rs.family() {
        Family::A => Ok(RationalVector::from_ints(&sorted(-hi))),
        Family::B | Family::C => Ok(RationalVector::from_ints(&sorted(0))),
        Family::D => {
            let mut v = sorted(0);
            if rng.gen_bool(0.5) {
                v[n - 1] = -v[n - 1];
            }
            Ok(RationalVector::from_ints(&v))
        }
        _ => dominant(rs, rng, 0, hi),
    }
}

/// Σ_j c_j τ_j with c_j ≥ 1: (α_j, ξ) = c_j > 0 on every simple root.
pub fn positive_coweight<R: Rng>(rs: &RootSystem, rng: &mut R, hi: i64) -> Result<RationalVector> {
    let mut acc = RationalVector::zeros(rs.ambient_dim());
    for j in 0..rs.rank() {
        let c = int(rng.gen_range(1..=hi));
        acc = &acc + &rs.dual_basis_vector(j)?.scale(&c);
    }
    Ok(acc)
}

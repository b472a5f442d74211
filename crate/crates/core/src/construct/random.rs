//! Seeded random generators for the property campaigns.
//!
//! Everything draws small integers (occasionally divided by 2 or 3) from an
//! [`IntRange`], so every run is reproducible from `(seed, n, trial)` via
//! [`trial_rng`].

use num::{Signed, Zero};
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{circulant_conditions, CirculantParams, CyclicParams, SignMode, TypeDParams};
use crate::matcore::{det, int, rat, Matrix, Rational};

/// Inclusive integer range for parameter draws.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IntRange {
    pub lo: i64,
    pub hi: i64,
}

impl IntRange {
    pub fn new(lo: i64, hi: i64) -> Self {
        assert!(lo <= hi, "empty range {lo}..={hi}");
        Self { lo, hi }
    }

    /// `-m..=m`.
    pub fn symmetric(m: i64) -> Self {
        Self::new(-m, m)
    }

    /// Largest absolute value in the range.
    pub fn magnitude(&self) -> i64 {
        self.lo.abs().max(self.hi.abs()).max(1)
    }
}

impl Default for IntRange {
    fn default() -> Self {
        Self::symmetric(5)
    }
}

/// Deterministic generator for one trial of a campaign.
pub fn trial_rng(seed: u64, n: usize, trial: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(((n as u64) << 32) | trial as u64);
    rng
}

/// Integer from `range`, divided by 2 or 3 a quarter of the time.
pub fn small_rational<R: Rng + ?Sized>(rng: &mut R, range: IntRange) -> Rational {
    let v = rng.gen_range(range.lo..=range.hi);
    if rng.gen_bool(0.25) {
        rat(v, rng.gen_range(2..=3))
    } else {
        int(v)
    }
}

/// Nonzero draw with magnitude at most `range.magnitude()`.
pub fn nonzero_rational<R: Rng + ?Sized>(rng: &mut R, range: IntRange) -> Rational {
    loop {
        let v = small_rational(rng, range);
        if !v.is_zero() {
            return v;
        }
        if range.lo == 0 && range.hi == 0 {
            return int(1);
        }
    }
}

/// Strictly positive draw in `1..=m` (sometimes halved or thirded).
pub fn positive_rational<R: Rng + ?Sized>(rng: &mut R, m: i64) -> Rational {
    small_rational(rng, IntRange::new(1, m.max(1)))
}

/// Dense matrix; each entry is forced to zero with probability `zero_prob`.
pub fn random_matrix<R: Rng + ?Sized>(rng: &mut R, n: usize, range: IntRange, zero_prob: f64) -> Matrix {
    Matrix::from_fn(n, |_, _| if rng.gen_bool(zero_prob) { int(0) } else { small_rational(rng, range) })
}

/// Rejection-samples a nonsingular [`random_matrix`].
pub fn random_nonsingular<R: Rng + ?Sized>(rng: &mut R, n: usize, range: IntRange, zero_prob: f64) -> Matrix {
    loop {
        let m = random_matrix(rng, n, range, zero_prob);
        if !det(&m).is_zero() {
            return m;
        }
    }
}

/// Entrywise nonnegative matrix with integer entries in `0..=max`.
pub fn random_nonneg<R: Rng + ?Sized>(rng: &mut R, n: usize, max: i64, zero_prob: f64) -> Matrix {
    Matrix::from_fn(n, |_, _| if rng.gen_bool(zero_prob) { int(0) } else { int(rng.gen_range(0..=max)) })
}

/// Z-matrix `tI - B` with `B` from [`random_nonneg`] and `t` a half-integer
/// in `[0, max row sum + 1]`, so every `L_s` class occurs with some frequency.
pub fn random_z_matrix<R: Rng + ?Sized>(rng: &mut R, n: usize, max: i64) -> Matrix {
    let b = random_nonneg(rng, n, max, 0.35);
    let bound: i64 = b
        .rows()
        .map(|row| row.iter().map(|v| v.to_integer().try_into().unwrap_or(0i64)).sum::<i64>())
        .max()
        .unwrap_or(0)
        + 1;
    let t = rat(rng.gen_range(0..=2 * bound), 2);
    &Matrix::identity(n).scale(&t) - &b
}

/// Inverse cyclic parameters; super-diagonal and corner entries are zero
/// with probability `zero_prob`.
pub fn random_cyclic_params<R: Rng + ?Sized>(rng: &mut R, n: usize, range: IntRange, zero_prob: f64) -> CyclicParams {
    let diag = (0..n).map(|_| nonzero_rational(rng, range)).collect();
    let draw = |rng: &mut R| if rng.gen_bool(zero_prob) { int(0) } else { nonzero_rational(rng, range) };
    let sup = (0..n - 1).map(|_| draw(rng)).collect();
    let corner = if n == 1 { int(0) } else { draw(rng) };
    CyclicParams::new(diag, sup, corner).expect("diagonal drawn nonzero")
}

/// Parameters with every entry strictly positive (`sign > 0`) or strictly
/// negative (`sign < 0`). The resulting matrix has that sign entrywise.
pub fn random_signed_cyclic_params<R: Rng + ?Sized>(rng: &mut R, n: usize, max: i64, sign: i32) -> CyclicParams {
    let draw = |rng: &mut R| {
        let v = positive_rational(rng, max);
        if sign < 0 {
            -v
        } else {
            v
        }
    };
    let diag = (0..n).map(|_| draw(rng)).collect();
    let sup = (0..n - 1).map(|_| draw(rng)).collect();
    let corner = if n == 1 { int(0) } else { draw(rng) };
    CyclicParams::new(diag, sup, corner).expect("diagonal drawn nonzero")
}

/// Diagonal, super-diagonal and corner of a random bdsw matrix (all nonzero).
pub fn random_bdsw_params<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    range: IntRange,
) -> (Vec<Rational>, Vec<Rational>, Rational) {
    let diag = (0..n).map(|_| nonzero_rational(rng, range)).collect();
    let sup = (0..n - 1).map(|_| nonzero_rational(rng, range)).collect();
    (diag, sup, nonzero_rational(rng, range))
}

/// Strictly increasing type-D parameters from distinct integers in
/// `-2n..=2n`, optionally scaled by 1/2; `a_1 != 0`.
pub fn random_type_d<R: Rng + ?Sized>(rng: &mut R, n: usize) -> TypeDParams {
    let span = 4 * n + 1;
    loop {
        let mut picks: Vec<i64> = sample(rng, span, n).into_iter().map(|k| k as i64 - 2 * n as i64).collect();
        picks.sort_unstable();
        if picks[0] == 0 {
            continue;
        }
        let den = if rng.gen_bool(0.3) { 2 } else { 1 };
        return TypeDParams::new(picks.into_iter().map(|v| rat(v, den)).collect()).expect("distinct sorted draws");
    }
}

/// Circulant coefficients for the given regime. With `conforming` set the
/// ordering and power relations hold; otherwise one of them is broken (a
/// perturbed power, a reversed or equal pair, or a free draw).
pub fn random_circulant<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    mode: SignMode,
    max: i64,
    conforming: bool,
) -> CirculantParams {
    loop {
        let p = circulant_draw(rng, n, mode, max, conforming);
        if conforming || !circulant_conditions(&p, mode).unwrap_or(false) {
            return p;
        }
    }
}

fn circulant_draw<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    mode: SignMode,
    max: i64,
    conforming: bool,
) -> CirculantParams {
    let sign = |v: Rational| if mode == SignMode::Nonpos { -v } else { v };
    let small = positive_rational(rng, max);
    let big = &small + positive_rational(rng, max);
    // nonneg wants a1 > a2 > 0, nonpos wants a2 < a1 < 0
    let (mut a1, mut a2) = if mode == SignMode::Nonneg { (big, small) } else { (small, big) };
    let mut broken = false;
    if !conforming && rng.gen_bool(0.4) {
        if rng.gen_bool(0.5) {
            std::mem::swap(&mut a1, &mut a2);
        } else {
            a1 = a2.clone();
        }
        broken = true;
    }
    let (s1, s2) = (sign(a1.clone()), sign(a2.clone()));
    let mut alpha = vec![s1.clone(), s2.clone()];
    for r in 3..=n as i64 {
        let v = crate::matcore::pow(&s2, r - 1).unwrap() / crate::matcore::pow(&s1, r - 2).unwrap();
        alpha.push(v);
    }
    if !conforming && !broken {
        if n >= 3 && rng.gen_bool(0.7) {
            let k = rng.gen_range(2..n);
            let bump = positive_rational(rng, max);
            alpha[k] = sign(alpha[k].abs() + bump);
        } else {
            for a in alpha.iter_mut() {
                *a = sign(positive_rational(rng, max));
            }
        }
    }
    CirculantParams::new(alpha).expect("n >= 2")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reproducible_streams() {
        let a = random_matrix(&mut trial_rng(7, 3, 11), 3, IntRange::default(), 0.2);
        let b = random_matrix(&mut trial_rng(7, 3, 11), 3, IntRange::default(), 0.2);
        let c = random_matrix(&mut trial_rng(7, 3, 12), 3, IntRange::default(), 0.2);
        assert_eq!(a, b);
        assert_ne!(a, c);
    }

    #[test]
    fn generators_respect_contracts() {
        let mut rng = trial_rng(1, 5, 0);
        for _ in 0..50 {
            let p = random_type_d(&mut rng, 5);
            assert!(!p.values()[0].is_zero());
            let z = random_z_matrix(&mut rng, 4, 3);
            assert!(crate::zclass::is_z(&z));
            let pos = crate::construct::from_cyclic_params(&random_signed_cyclic_params(&mut rng, 4, 4, 1));
            assert!(pos.is_positive());
            let neg = crate::construct::from_cyclic_params(&random_signed_cyclic_params(&mut rng, 5, 4, -1));
            assert!(neg.is_negative());
            for mode in [SignMode::Nonneg, SignMode::Nonpos] {
                let good = random_circulant(&mut rng, 5, mode, 4, true);
                assert!(circulant_conditions(&good, mode).unwrap());
                let bad = random_circulant(&mut rng, 5, mode, 4, false);
                assert!(!circulant_conditions(&bad, mode).unwrap());
            }
        }
    }
}

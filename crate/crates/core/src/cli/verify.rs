//! Seeded theorem-verification campaigns.
//!
//! Each trial draws its own generator from `(seed, n, trial)`, so a campaign
//! is reproducible and any single failing trial can be replayed.

use std::fmt;
use std::str::FromStr;

use num::{Signed, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::construct::random::{
    random_bdsw_params, random_circulant, random_cyclic_params, random_nonsingular, random_signed_cyclic_params,
    random_type_d, random_z_matrix, trial_rng, IntRange,
};
use crate::construct::{
    bdsw_matrix, circulant_conditions, circulant_pz, from_cyclic_params, shift_matrix, type_d_verify, SignMode,
    TypeDParams,
};
use crate::cyclic::{
    bdsw_sign_classify, cyclic_det, cyclic_inverse, cyclic_products, is_bdsw, is_full, is_inverse_cyclic,
    roundtrip_check, verdict_from_inverse, Verdict,
};
use crate::graph::{digraph_of, is_irreducible, maybee_inverse, maybee_term_count};
use crate::matcore::{det, int, inverse, IndexSet, Matrix, Rational};
use crate::zclass::{is_z, Classifier};
use crate::{Error, Result};

/// The theorem suites a campaign can run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Theorem {
    CycleMatrix,
    DetFormula,
    BdswZ,
    TypeD,
    Polyn,
    Maybee,
    ZclassOracles,
}

impl Theorem {
    pub const ALL: [Theorem; 7] = [
        Theorem::CycleMatrix,
        Theorem::DetFormula,
        Theorem::BdswZ,
        Theorem::TypeD,
        Theorem::Polyn,
        Theorem::Maybee,
        Theorem::ZclassOracles,
    ];

    pub fn id(&self) -> &'static str {
        match self {
            Theorem::CycleMatrix => "cycle-matrix",
            Theorem::DetFormula => "det-formula",
            Theorem::BdswZ => "bdsw-z",
            Theorem::TypeD => "type-d",
            Theorem::Polyn => "polyn",
            Theorem::Maybee => "maybee",
            Theorem::ZclassOracles => "zclass-oracles",
        }
    }

    /// Admissible orders `(min, max)`.
    fn order_bounds(&self, cap: usize) -> (usize, usize) {
        match self {
            Theorem::CycleMatrix | Theorem::BdswZ => (2, cap),
            Theorem::DetFormula => (1, cap),
            Theorem::TypeD => (2, cap),
            Theorem::Polyn => (2, cap),
            Theorem::Maybee => (2, crate::graph::PATH_ORDER_CAP),
            Theorem::ZclassOracles => (2, cap),
        }
    }
}

impl FromStr for Theorem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Theorem::ALL.into_iter().find(|t| t.id() == s).ok_or_else(|| Error::UnknownTheorem(s.to_string()))
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyConfig {
    pub theorem: Theorem,
    pub n_lo: usize,
    pub n_hi: usize,
    /// Trials per order.
    pub trials: usize,
    pub seed: u64,
    pub range: IntRange,
    pub classifier: Classifier,
}

impl VerifyConfig {
    pub fn new(theorem: Theorem, n_lo: usize, n_hi: usize, trials: usize, seed: u64) -> Self {
        Self { theorem, n_lo, n_hi, trials, seed, range: IntRange::default(), classifier: Classifier::default() }
    }

    pub fn validate(&self) -> Result<()> {
        if self.trials == 0 {
            return Err(Error::InvalidArgument("trials must be at least 1".into()));
        }
        if self.n_lo > self.n_hi {
            return Err(Error::InvalidArgument(format!("empty order range {}..{}", self.n_lo, self.n_hi)));
        }
        let (min, max) = self.theorem.order_bounds(self.classifier.cap());
        if self.n_lo < min {
            return Err(Error::OrderTooSmall { n: self.n_lo, min });
        }
        if self.n_hi > max {
            return Err(Error::OrderCapExceeded { n: self.n_hi, cap: max });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrialFailure {
    pub n: usize,
    pub trial: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifySummary {
    pub theorem: Theorem,
    pub seed: u64,
    pub trials: usize,
    pub failures: Vec<TrialFailure>,
}

impl VerifySummary {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for VerifySummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "theorem {}: {} trials, {} failures, seed {}",
            self.theorem,
            self.trials,
            self.failures.len(),
            self.seed
        )?;
        for fail in self.failures.iter().take(20) {
            writeln!(f, "  n={} trial={}: {}", fail.n, fail.trial, fail.message)?;
        }
        Ok(())
    }
}

type Trial = fn(&mut ChaCha8Rng, usize, &VerifyConfig) -> std::result::Result<(), String>;

/// Runs `trials` trials for every order in `n_lo..=n_hi`.
pub fn run_verify(cfg: &VerifyConfig) -> Result<VerifySummary> {
    cfg.validate()?;
    let trial: Trial = match cfg.theorem {
        Theorem::CycleMatrix => trial_cycle_matrix,
        Theorem::DetFormula => trial_det_formula,
        Theorem::BdswZ => trial_bdsw_z,
        Theorem::TypeD => trial_type_d,
        Theorem::Polyn => trial_polyn,
        Theorem::Maybee => trial_maybee,
        Theorem::ZclassOracles => trial_zclass,
    };
    let mut failures = Vec::new();
    let mut total = 0;
    for n in cfg.n_lo..=cfg.n_hi {
        for t in 0..cfg.trials {
            total += 1;
            let mut rng = trial_rng(cfg.seed, n, t);
            if let Err(message) = trial(&mut rng, n, cfg) {
                failures.push(TrialFailure { n, trial: t, message });
            }
        }
    }
    Ok(VerifySummary { theorem: cfg.theorem, seed: cfg.seed, trials: total, failures })
}

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn lib<T>(r: Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| format!("unexpected error: {e}"))
}

fn trial_det_formula(rng: &mut ChaCha8Rng, n: usize, cfg: &VerifyConfig) -> std::result::Result<(), String> {
    let a = from_cyclic_params(&random_cyclic_params(rng, n, cfg.range, 0.25));
    ensure!(is_inverse_cyclic(&a), "generated matrix is not inverse cyclic:\n{a}");
    let oracle = det(&a);
    let formula = lib(cyclic_det(&a))?;
    ensure!(formula == oracle, "formula {formula} != Bareiss {oracle}");
    let p = cyclic_products(&a);
    ensure!((p.d == p.c) == oracle.is_zero(), "d = c disagrees with singularity (d={}, c={})", p.d, p.c);
    Ok(())
}

fn trial_cycle_matrix(rng: &mut ChaCha8Rng, n: usize, cfg: &VerifyConfig) -> std::result::Result<(), String> {
    // full inverse cyclic with d != c  =>  inverse is bdsw
    let a = loop {
        let a = from_cyclic_params(&random_cyclic_params(rng, n, cfg.range, 0.0));
        let p = cyclic_products(&a);
        if p.d != p.c {
            break a;
        }
    };
    ensure!(is_full(&a) && is_inverse_cyclic(&a), "generator produced a non-full matrix");
    let b = lib(inverse(&a))?;
    ensure!(is_bdsw(&b), "inverse of a full inverse cyclic matrix is not bdsw:\n{b}");
    ensure!(lib(cyclic_inverse(&a))? == b, "closed-form inverse differs from Gauss-Jordan");
    ensure!(lib(roundtrip_check(&a))?, "roundtrip check failed");
    let p = cyclic_products(&a);
    let k = &p.d / p.d_minus_c();
    for i in 0..n {
        ensure!(&a[(i, i)] * &b[(i, i)] == k, "a_ii b_ii != d/(d-c) at i={}", i + 1);
    }

    // nonsingular bdsw  =>  inverse is full and inverse cyclic
    let bd = loop {
        let (diag, sup, corner) = random_bdsw_params(rng, n, cfg.range);
        let m = lib(bdsw_matrix(&diag, &sup, &corner))?;
        if !det(&m).is_zero() {
            break m;
        }
    };
    let inv = lib(inverse(&bd))?;
    ensure!(is_full(&inv), "inverse of a bdsw matrix has a zero entry:\n{inv}");
    ensure!(is_inverse_cyclic(&inv), "inverse of a bdsw matrix is not inverse cyclic:\n{inv}");
    ensure!(lib(roundtrip_check(&inv))?, "roundtrip check failed on bdsw inverse");
    Ok(())
}

/// Draws a signed parameter set until `accept(d - c)` holds.
fn signed_cyclic(rng: &mut ChaCha8Rng, n: usize, max: i64, sign: i32, accept: impl Fn(&Rational) -> bool) -> Matrix {
    loop {
        let a = from_cyclic_params(&random_signed_cyclic_params(rng, n, max, sign));
        if accept(&cyclic_products(&a).d_minus_c()) {
            return a;
        }
    }
}

fn trial_bdsw_z(rng: &mut ChaCha8Rng, n: usize, cfg: &VerifyConfig) -> std::result::Result<(), String> {
    let max = cfg.range.magnitude();
    let even = n.is_multiple_of(2);
    let check = |a: &Matrix, expect: Verdict, case: &str| -> std::result::Result<(), String> {
        let fast = bdsw_sign_classify(a);
        let slow = lib(verdict_from_inverse(a, &cfg.classifier))?;
        ensure!(fast == expect, "{case}: verdict {fast:?}, expected {expect:?}\n{a}");
        ensure!(slow == expect, "{case}: inverse classifies as {slow:?}, expected {expect:?}\n{a}");
        Ok(())
    };

    let pos = signed_cyclic(rng, n, max, 1, |dc| dc.is_positive());
    check(&pos, Verdict::InverseM, "positive, d-c>0")?;

    let neg = signed_cyclic(rng, n, max, -1, |dc| if even { dc.is_negative() } else { dc.is_positive() });
    check(&neg, Verdict::InverseN, if even { "negative even, d-c<0" } else { "negative odd, d-c>0" })?;

    // sign-violating: wrong sign of d - c, or mixed-sign parameters
    let violating = match rng.gen_range(0..3) {
        0 => signed_cyclic(rng, n, max, 1, |dc| !dc.is_positive()),
        1 => signed_cyclic(rng, n, max, -1, |dc| if even { !dc.is_negative() } else { !dc.is_positive() }),
        _ => loop {
            let a = from_cyclic_params(&random_cyclic_params(rng, n, cfg.range, 0.0));
            if !a.is_positive() && !a.is_negative() {
                break a;
            }
        },
    };
    check(&violating, Verdict::Neither, "sign-violating")?;
    Ok(())
}

fn shifted(p: &TypeDParams, offset: &Rational) -> TypeDParams {
    TypeDParams::new(p.values().iter().map(|v| v - offset).collect()).expect("shift keeps order")
}

fn trial_type_d(rng: &mut ChaCha8Rng, n: usize, cfg: &VerifyConfig) -> std::result::Result<(), String> {
    let c = &cfg.classifier;
    let p = random_type_d(rng, n);
    let r = lib(type_d_verify(&p, c))?;
    ensure!(r.tridiagonal && r.z, "inverse not tridiagonal Z for {:?}", p.values());
    ensure!(
        r.l_index_of_inverse == Some(p.expected_l_index()),
        "l_index {:?} != expected {} for {:?}",
        r.l_index_of_inverse,
        p.expected_l_index(),
        p.values()
    );

    let last = p.values()[n - 1].clone();
    // a_n < 0  =>  tridiagonal N
    let neg = shifted(&p, &(&last + int(rng.gen_range(1..=3))));
    let r = lib(type_d_verify(&neg, c))?;
    ensure!(r.tridiagonal && lib(c.is_n(&r.inverse))?, "a_n<0: inverse is not a tridiagonal N-matrix");

    // a_n = 0  =>  tridiagonal N0, not N
    let zero = shifted(&p, &last);
    let r = lib(type_d_verify(&zero, c))?;
    ensure!(
        r.tridiagonal && lib(c.is_n0(&r.inverse))? && !lib(c.is_n(&r.inverse))?,
        "a_n=0: inverse is not a tridiagonal N0 non-N matrix"
    );

    // a_{n-1} = 0  =>  tridiagonal F0
    if n >= 3 {
        let f0 = shifted(&p, &p.values()[n - 2]);
        let r = lib(type_d_verify(&f0, c))?;
        ensure!(r.tridiagonal && lib(c.is_f0(&r.inverse))?, "a_(n-1)=0: inverse is not a tridiagonal F0-matrix");
    }
    Ok(())
}

fn trial_polyn(rng: &mut ChaCha8Rng, n: usize, cfg: &VerifyConfig) -> std::result::Result<(), String> {
    let max = cfg.range.magnitude();
    let z = shift_matrix(n);
    for mode in [SignMode::Nonneg, SignMode::Nonpos] {
        for conforming in [true, false] {
            let p = random_circulant(rng, n, mode, max, conforming);
            let a = circulant_pz(&p);
            ensure!(&z * &a == &a * &z, "p(Z) does not commute with Z");
            let holds = lib(circulant_conditions(&p, mode))?;
            ensure!(holds == conforming, "generator drew conforming={conforming} but conditions={holds}");
            let inverse_class = match inverse(&a) {
                Ok(b) if is_bdsw(&b) => match mode {
                    SignMode::Nonneg => lib(cfg.classifier.is_nonsingular_m(&b))?,
                    SignMode::Nonpos => lib(cfg.classifier.is_n(&b))?,
                },
                _ => false,
            };
            ensure!(
                holds == inverse_class,
                "{mode:?}: conditions {holds} but inverse bdsw-class {inverse_class} for alpha {:?}",
                p.alpha().iter().map(ToString::to_string).collect::<Vec<_>>()
            );
        }
    }
    Ok(())
}

fn trial_maybee(rng: &mut ChaCha8Rng, n: usize, cfg: &VerifyConfig) -> std::result::Result<(), String> {
    if n <= 5 {
        let a = random_nonsingular(rng, n, cfg.range, 0.2);
        ensure!(lib(maybee_inverse(&a))? == lib(inverse(&a))?, "path-sum inverse differs (dense)\n{a}");
    }
    let b = loop {
        let (diag, sup, corner) = random_bdsw_params(rng, n, cfg.range);
        let m = lib(bdsw_matrix(&diag, &sup, &corner))?;
        if !det(&m).is_zero() {
            break m;
        }
    };
    ensure!(lib(maybee_inverse(&b))? == lib(inverse(&b))?, "path-sum inverse differs (bdsw)\n{b}");
    let (i, j) = (rng.gen_range(1..=n), rng.gen_range(1..=n));
    if i != j {
        ensure!(lib(maybee_term_count(&b, i, j))? <= 1, "unipathic sum has more than one term");
    }
    Ok(())
}

fn all_inverse_minors_nonpositive_from_order_two(b: &Matrix) -> bool {
    let n = b.order();
    (1u64..(1 << n)).filter(|m| m.count_ones() >= 2).all(|mask| {
        let s = IndexSet::from_mask(n, mask).expect("nonempty");
        !crate::matcore::principal_minor(b, &s).expect("valid set").is_positive()
    })
}

fn trial_zclass(rng: &mut ChaCha8Rng, n: usize, cfg: &VerifyConfig) -> std::result::Result<(), String> {
    let c = &cfg.classifier;
    let a = random_z_matrix(rng, n, cfg.range.magnitude().min(3));
    let r = lib(c.classify(&a))?;
    ensure!(r.is_z, "generator produced a non-Z matrix");
    ensure!(!r.is_nonsingular_m || r.is_m, "nonsingular M but not M");
    ensure!(!r.is_n || (r.is_n0 && r.irreducible), "N without N0 and irreducibility");
    ensure!(r.is_m == (r.l_index == Some(n)), "is_m disagrees with l_index");
    ensure!(!r.is_n0 || r.l_index == Some(n - 1), "N0 with l_index {:?}", r.l_index);
    ensure!(!r.is_f0 || r.l_index == Some(n.saturating_sub(2)), "F0 with l_index {:?}", r.l_index);
    ensure!(
        [r.is_nonsingular_m, r.is_n0, r.is_f0].iter().filter(|&&b| b).count() <= 1,
        "more than one of nonsingular-M / N0 / F0"
    );
    if !r.is_nonsingular {
        // F0 only constrains minors up to order n-1, so it may be singular
        ensure!(!r.is_nonsingular_m && !r.is_n && !r.is_n0, "singular matrix in a nonsingular class");
        return Ok(());
    }
    let b = lib(inverse(&a))?;
    ensure!(r.is_nonsingular_m == b.is_nonnegative(), "nonsingular M <=> inverse >= 0 fails\n{a}");
    ensure!((r.is_nonsingular_m && r.irreducible) == b.is_positive(), "irreducible M <=> inverse > 0 fails\n{a}");
    ensure!(r.is_n == b.is_negative(), "N <=> inverse < 0 fails\n{a}");
    ensure!(r.is_n0 == (b.is_nonpositive() && r.irreducible), "N0 <=> inverse <= 0 and irreducible fails\n{a}");
    ensure!(r.irreducible == is_irreducible(&digraph_of(&b)), "irreducibility not preserved by inversion");
    if n >= 3 {
        let inverse_conditions = r.determinant.is_negative()
            && all_inverse_minors_nonpositive_from_order_two(&b)
            && b.diagonal().any(Signed::is_positive);
        ensure!(r.is_f0 == inverse_conditions, "F0 <=> inverse-minor conditions fails\n{a}");
    }
    ensure!(is_z(&a), "unreachable");
    Ok(())
}

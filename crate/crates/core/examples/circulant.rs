//! Circulant polynomials p(Z) in the cyclic shift Z.
//!
//!     cargo run --example circulant

use zmx::construct::{circulant_conditions, circulant_pz, CirculantParams, SignMode};
use zmx::cyclic::is_bdsw;
use zmx::matcore::{inverse, rat};
use zmx::zclass::Classifier;

fn main() -> zmx::Result<()> {
    let c = Classifier::default();
    let cases = [
        (SignMode::Nonneg, vec![rat(2, 1), rat(1, 1), rat(1, 2), rat(1, 4)]),
        (SignMode::Nonpos, vec![rat(-1, 1), rat(-2, 1), rat(-4, 1), rat(-8, 1)]),
        (SignMode::Nonpos, vec![rat(-1, 1), rat(-2, 1), rat(-4, 1), rat(-7, 1)]),
    ];
    for (mode, alpha) in cases {
        let p = CirculantParams::new(alpha)?;
        let a = circulant_pz(&p);
        let b = inverse(&a)?;
        println!(
            "{mode:?} alpha={:?}: conditions={} inverse bdsw={} M={} N={}",
            p.alpha().iter().map(ToString::to_string).collect::<Vec<_>>(),
            circulant_conditions(&p, mode)?,
            is_bdsw(&b),
            c.is_nonsingular_m(&b)?,
            c.is_n(&b)?
        );
    }
    Ok(())
}

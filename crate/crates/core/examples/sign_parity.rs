//! Sign and parity verdicts: when is A^-1 a bdsw M- or N-matrix.
//!
//!     cargo run --example sign_parity

use zmx::cyclic::{bdsw_sign_classify, cyclic_products, verdict_from_inverse};
use zmx::matcore::inverse;
use zmx::zclass::Classifier;
use zmx::Matrix;

fn main() -> zmx::Result<()> {
    let c = Classifier::default();
    let cases = [
        (
            "positive 5x5",
            Matrix::from_ints(&[[4, 4, 8, 4, 4], [1, 2, 4, 2, 2], [1, 1, 4, 2, 2], [2, 2, 4, 4, 4], [2, 2, 4, 2, 4]]),
        ),
        ("negative 4x4", Matrix::from_ints(&[[-2, -2, -4, -8], [-4, -1, -2, -4], [-2, -2, -1, -2], [-2, -2, -4, -2]])),
        ("wrong parity", Matrix::from_ints(&[[-2, -2, -2, -2], [-1, -2, -2, -2], [-1, -1, -2, -2], [-1, -1, -1, -2]])),
    ];
    for (name, a) in &cases {
        let p = cyclic_products(a);
        let fast = bdsw_sign_classify(a);
        let slow = verdict_from_inverse(a, &c)?;
        println!("{name}: n={} d-c={} verdict={fast:?} (from inverse: {slow:?})", a.order(), p.d_minus_c());
        assert_eq!(fast, slow);
    }
    println!("inverse of the wrong-parity matrix:\n{}", inverse(&cases[2].1)?);
    Ok(())
}

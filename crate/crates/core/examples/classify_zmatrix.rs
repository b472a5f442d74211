//! Z-matrix taxonomy from principal minors.
//!
//!     cargo run --example classify_zmatrix

use zmx::matcore::rat;
use zmx::zclass::{z_decompose, Classifier};
use zmx::Matrix;

fn show(name: &str, a: &Matrix, c: &Classifier) -> zmx::Result<()> {
    let r = c.classify(a)?;
    println!(
        "{name:<12} det={:<6} M={:<5} nsM={:<5} N={:<5} N0={:<5} F0={:<5} l_index={:?}",
        r.determinant.to_string(),
        r.is_m,
        r.is_nonsingular_m,
        r.is_n,
        r.is_n0,
        r.is_f0,
        r.l_index
    );
    Ok(())
}

fn main() -> zmx::Result<()> {
    let c = Classifier::default();
    show("identity", &Matrix::identity(3), &c)?;
    show("singular M", &Matrix::from_ints(&[[1, -1], [-1, 1]]), &c)?;
    let n = Matrix::from_ints(&[[1, -2, 0, 0], [0, 2, -4, 0], [0, 0, 2, -2], [-1, 0, 0, 1]]).scale(&rat(1, 6));
    show("bdsw N", &n, &c)?;
    let f0 = Matrix::from_ints(&[[1, -2, 0, 0], [-2, 4, -2, 0], [0, -2, 4, -2], [0, 0, -2, 2]]).scale(&rat(1, 2));
    show("tridiag F0", &f0, &c)?;

    // A = tI - B with B >= 0
    let rep = z_decompose(&n, &rat(1, 3))?;
    println!("t = {}, B =\n{}", rep.t, rep.b);

    let b = Matrix::from_ints(&[[0, 2, 1], [1, 0, 3], [2, 1, 0]]);
    for r in 1..=3 {
        let est = c.perron_r(&b, r, &rat(1, 1_000_000))?;
        println!("rho_{r}(B) in ({}, {}] on {:?}", est.lower, est.upper, est.argmax.members());
    }
    Ok(())
}

//! Exact determinant, inverse and a complementary-minor check.
//!
//!     cargo run --example exact_inverse

use zmx::matcore::{complementary_minor_check, det, inverse, IndexSet};
use zmx::Matrix;

fn main() -> zmx::Result<()> {
    let a = Matrix::from_ints(&[[1, -1, -1], [-2, 1, 1], [2, 2, -1]]);
    let b = inverse(&a)?;
    println!("A =\n{a}");
    println!("det A = {}", det(&a));
    println!("A^-1 =\n{b}");
    assert!((&a * &b).is_identity());

    // minors of A^-1 against complementary minors of A
    let alpha = IndexSet::new(3, [1, 3])?;
    let beta = IndexSet::new(3, [2, 3])?;
    println!(
        "complementary minor identity for {:?} x {:?}: {}",
        alpha.members(),
        beta.members(),
        complementary_minor_check(&a, &alpha, &beta)?
    );

    let singular = Matrix::from_ints(&[[1, 2], [2, 4]]);
    println!("inverse of a singular matrix: {}", inverse(&singular).unwrap_err());
    Ok(())
}

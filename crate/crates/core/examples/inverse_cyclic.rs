//! Inverse cyclic matrices: the closed-form determinant and inverse.
//!
//!     cargo run --example inverse_cyclic

use zmx::construct::{from_cyclic_params, CyclicParams};
use zmx::cyclic::{cyclic_det, cyclic_inverse, cyclic_products, is_bdsw, is_inverse_cyclic};
use zmx::matcore::{det, int};

fn main() -> zmx::Result<()> {
    // all entries follow from the diagonal, super-diagonal and (n,1) entry
    let p = CyclicParams::new(vec![int(2), int(1), int(-2), int(1)], vec![int(-2), int(2), int(0)], int(2))?;
    let a = from_cyclic_params(&p);
    println!("A =\n{a}");
    println!("inverse cyclic: {}", is_inverse_cyclic(&a));

    let cp = cyclic_products(&a);
    println!("d = {}, c = {}, closed-form det = {}, Bareiss det = {}", cp.d, cp.c, cyclic_det(&a)?, det(&a));

    let b = cyclic_inverse(&a)?;
    println!("A^-1 =\n{b}");
    println!("A is not full, so A^-1 need not be bdsw: {}", is_bdsw(&b));

    let full = from_cyclic_params(&CyclicParams::new(vec![int(1), int(1), int(-1)], vec![int(-1), int(1)], int(2))?);
    let b = cyclic_inverse(&full)?;
    println!("full example, A^-1 =\n{b}\nbdsw: {}", is_bdsw(&b));
    Ok(())
}

//! Type-D matrices: the inverse is tridiagonal and its L_s index is read off
//! the parameter signs.
//!
//!     cargo run --example type_d

use zmx::construct::{type_d, type_d_verify, TypeDParams};
use zmx::matcore::int;
use zmx::zclass::Classifier;

fn main() -> zmx::Result<()> {
    let c = Classifier::default();
    for a in [[1, 2, 3, 4], [-4, -3, -2, -1], [-3, -2, -1, 0], [-2, -1, 0, 1], [-2, -1, 1, 2]] {
        let p = TypeDParams::new(a.iter().map(|&v| int(v)).collect())?;
        let r = type_d_verify(&p, &c)?;
        println!(
            "a={a:?}: nonpositive={} l_index={:?} expected={} N={} N0={}",
            p.nonpositive_count(),
            r.l_index_of_inverse,
            p.expected_l_index(),
            c.is_n(&r.inverse)?,
            c.is_n0(&r.inverse)?
        );
    }
    let p = TypeDParams::new(vec![int(-2), int(-1), int(0), int(1)])?;
    println!("D_4 =\n{}\ninverse =\n{}", type_d(&p), type_d_verify(&p, &c)?.inverse);
    Ok(())
}

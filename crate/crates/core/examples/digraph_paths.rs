//! Digraph of a matrix, simple paths, and the path-sum inverse.
//!
//!     cargo run --example digraph_paths

use zmx::graph::{digraph_of, enumerate_paths, is_irreducible, is_unipathic, maybee_entry, maybee_inverse};
use zmx::matcore::inverse;
use zmx::Matrix;

fn main() -> zmx::Result<()> {
    let a = Matrix::from_ints(&[[-1, -1, 0], [0, -1, -1], [-2, 0, 1]]);
    let d = digraph_of(&a);
    print!("{}", d.to_dot());
    println!("irreducible: {}, unipathic: {}", is_irreducible(&d), is_unipathic(&d)?);

    for path in enumerate_paths(&d, 1, 3)? {
        println!("path 1 -> 3: {:?}", path.vertices());
    }
    println!("(A^-1)_13 via paths = {}", maybee_entry(&a, 1, 3)?);

    let dense = Matrix::from_ints(&[[2, 1, 0], [1, 3, 1], [0, 1, 4]]);
    let by_paths = maybee_inverse(&dense)?;
    assert_eq!(by_paths, inverse(&dense)?);
    println!("path-sum inverse of a dense matrix:\n{by_paths}");
    Ok(())
}

// Root vectors and reflections of the hexagonal form `x² − xy + y²`.

use num_bigint::BigInt;
use sphere::linalg::{format_vec, from_ints};
use sphere::quadratic::{root_vectors, QuadraticSpace, ReflectionMode};
use sphere::ring::Integers;

pub fn run_example() -> sphere::Result<()> {
    let r = Integers;
    let space = QuadraticSpace::binary(r, BigInt::from(1), BigInt::from(-1), BigInt::from(1));
    let roots = root_vectors(&space, 2)?;
    for root in &roots {
        println!("{} q={}", format_vec(&r, &root.vector), space.q(&root.vector));
    }
    println!("{} roots", roots.len());

    let (x, y) = (from_ints(&r, &[1, 0]), from_ints(&r, &[0, 1]));
    let s = space.reflection(ReflectionMode::S, &x, &y)?;
    println!("s_x(y) = {}", format_vec(&r, &s));
    Ok(())
}

#[allow(dead_code)]
fn main() -> sphere::Result<()> {
    run_example()
}

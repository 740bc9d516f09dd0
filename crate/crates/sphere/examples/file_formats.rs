// Algebra files and Cayley tables round-trip byte for byte.

use sphere::constructions::clifford_quaternion;
use sphere::binary2d::BinaryForm;
use sphere::io::{parse_cayley, write_cayley, AlgebraFile};
use sphere::loops::quaternion8;
use sphere::ring::Rationals;

pub fn run_example() -> sphere::Result<()> {
    let alg = clifford_quaternion(&BinaryForm::parse(Rationals, "1,1/2,3")?)?;
    let json = AlgebraFile::from_algebra(&alg).to_json();
    let back = AlgebraFile::parse(&json)?.to_algebra(Rationals)?;
    println!("{} bytes, round trip {}", json.len(), back == alg);

    let text = write_cayley(&quaternion8());
    print!("{text}");
    println!("round trip {}", write_cayley(&parse_cayley(&text)?) == text);
    Ok(())
}

#[allow(dead_code)]
fn main() -> sphere::Result<()> {
    run_example()
}

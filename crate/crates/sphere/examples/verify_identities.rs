// Identity verification with the exhaustive, box and sampled strategies.

use sphere::binary2d::BinaryForm;
use sphere::ring::{Integers, Zmod};
use sphere::spherical::{IdentityId, Strategy};

pub fn run_example() -> sphere::Result<()> {
    let alg = BinaryForm::from_ints(Zmod::new(7)?, 3, 1, 5).to_algebra();
    for id in [IdentityId::K, IdentityId::PA, IdentityId::COM, IdentityId::TC] {
        println!("{}", alg.verify(id, &Strategy::ExhaustiveBasis)?.result_line());
    }
    println!("{}", alg.verify(IdentityId::TC, &Strategy::ExhaustiveModule)?.result_line());

    let alg = BinaryForm::from_ints(Integers, 2, -3, 4).to_algebra();
    println!("{}", alg.verify(IdentityId::COM, &Strategy::Box { bound: 2 })?.result_line());
    let sampled = Strategy::Sampled { count: 200, seed: 7 };
    println!("{}", alg.verify(IdentityId::PA, &sampled)?.result_line());
    Ok(())
}

#[allow(dead_code)]
fn main() -> sphere::Result<()> {
    run_example()
}

// The 16 units of the integral octonions as a ternary loop and its binary
// homotope.

use num_bigint::BigInt;
use sphere::binary2d::BinaryForm;
use sphere::constructions::{binarion, kd_double, DoublingParams};
use sphere::loops::{check_property, hexad, autotopy_check, order_profile, sphere_loop, LoopPropertyId};
use sphere::ring::Integers;
use sphere::spherical::{Domain, Side};

pub fn run_example() -> sphere::Result<()> {
    let p = DoublingParams { mu: BigInt::from(-1), side: Side::Right };
    let o = kd_double(&kd_double(&binarion(&BinaryForm::from_ints(Integers, 1, 0, 1))?, &p), &p);
    let ternary = sphere_loop(&o.ternary(Side::Right, &BigInt::from(1)), &BigInt::from(1), Domain::Box(1))?;
    println!("{} points", ternary.size());
    for id in [LoopPropertyId::Ip, LoopPropertyId::At2, LoopPropertyId::Mt1, LoopPropertyId::ReflectionSpace] {
        println!("{}", check_property(&ternary, id)?.result_line());
    }

    let unit = ternary.index_of("(1;0;0;0;0;0;0;0)").expect("unit on the sphere");
    let binary = ternary.homotope_at(unit)?;
    println!("orders {:?}", order_profile(&binary));
    for id in [LoopPropertyId::Moufang, LoopPropertyId::Associative] {
        println!("{}", check_property(&binary, id)?.result_line());
    }
    let a = binary.index_of("(0;1;0;0;0;0;0;0)").expect("imaginary unit");
    let ok = hexad(&binary, a)?.iter().map(|t| autotopy_check(&binary, t)).collect::<sphere::Result<Vec<_>>>()?;
    println!("hexad at {}: {:?}", binary.label(a), ok);
    Ok(())
}

#[allow(dead_code)]
fn main() -> sphere::Result<()> {
    run_example()
}

// Doubling a binarion twice gives octonions: Moufang but not associative.
// The ternary ABCD double reproduces the same triple product.

use sphere::binary2d::BinaryForm;
use sphere::constructions::{abcd_double, binarion, kd_double, DoublingParams};
use sphere::linalg::format_vec;
use sphere::ring::{Ring, Zmod};
use sphere::spherical::{BinaryIdentity, IdentityId, Side, Strategy};

pub fn run_example() -> sphere::Result<()> {
    let r = Zmod::new(5)?;
    let p = DoublingParams { mu: r.from_i64(-1), side: Side::Right };
    let c = binarion(&BinaryForm::from_ints(r, 1, 0, 1))?;
    let h = kd_double(&c, &p);
    let o = kd_double(&h, &p);
    for alg in [&c, &h, &o] {
        println!(
            "rank {}: associative {}, moufang {}",
            alg.rank(),
            alg.satisfies(BinaryIdentity::Associative),
            alg.satisfies(BinaryIdentity::Moufang)
        );
    }
    let report = o.check(BinaryIdentity::Associative, &Strategy::ExhaustiveBasis)?;
    if let Some(w) = &report.witness {
        let shown: Vec<String> = w.iter().map(|v| format_vec(&r, v)).collect();
        println!("associativity fails at {}", shown.join(" "));
    }

    let ternary = abcd_double(&abcd_double(&c.group_spherical(), &p)?, &p)?;
    println!("ABCD equals (xy♯)z: {}", ternary == o.ternary(Side::Right, &r.one()));
    for id in [IdentityId::A1, IdentityId::A2, IdentityId::A3, IdentityId::PA] {
        println!("{}", ternary.verify(id, &Strategy::ExhaustiveBasis)?.result_line());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> sphere::Result<()> {
    run_example()
}

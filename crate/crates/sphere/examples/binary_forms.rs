// Canonical ternary product of a binary form, its basis tables and
// spiration matrices.

use sphere::binary2d::BinaryForm;
use sphere::linalg::format_vec;
use sphere::ring::Integers;

pub fn run_example() -> sphere::Result<()> {
    let r = Integers;
    let form = BinaryForm::parse(r, "2,1,3")?;
    for (idx, v) in form.triple_table() {
        println!("<e{} e{} e{}> = {}", idx[0], idx[1], idx[2], format_vec(&r, &v));
    }
    let agree = form.fivefold_table().iter().filter(|row| row.agreed().is_some()).count();
    println!("five-fold products with agreeing bracketings: {agree}/32");

    let (a, b) = (vec![1.into(), 2.into()], vec![(-1).into(), 1.into()]);
    let m = form.spiration_r(&a, &b);
    println!("det R_(a,b) = {}, q(a)q(b) = {}", m.det(&r), form.q(&a) * form.q(&b));
    Ok(())
}

#[allow(dead_code)]
fn main() -> sphere::Result<()> {
    run_example()
}

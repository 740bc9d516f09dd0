// Minkowski, split null and polarized spaces.

use sphere::binary2d::BinaryForm;
use sphere::constructions::{check_ba, minkowski_extension, polarized_space, split_null_extension, RightModuleAction};
use sphere::linalg::format_vec;
use sphere::ring::Zmod;
use sphere::spherical::{IdentityId, Strategy, TernaryAlgebra};

fn summary(alg: &TernaryAlgebra<Zmod>) -> sphere::Result<String> {
    let mut verdicts = Vec::new();
    for id in [IdentityId::K, IdentityId::PA, IdentityId::TC, IdentityId::COM] {
        let v = alg.verify(id, &Strategy::ExhaustiveBasis)?;
        verdicts.push(format!("{id} {}", v.verdict));
    }
    Ok(format!("{} (rank {}): {}", alg.label(), alg.rank(), verdicts.join(", ")))
}

pub fn run_example() -> sphere::Result<()> {
    let r = Zmod::new(5)?;
    let mink = minkowski_extension(r, &[1, 0, 0], &[0, 1, 0])?;
    println!("{}", summary(&mink)?);
    let h = mink.homotope(&[1, 1, 0])?;
    println!("x♯ for x = (1,2,3): {}", format_vec(&r, &h.sharp(&[1, 2, 3])));

    let base = BinaryForm::from_ints(r, 1, 0, 1).to_algebra();
    println!("{}", summary(&split_null_extension(&RightModuleAction::adjoint(&base)))?);

    let symplectic = vec![vec![0, 1], vec![4, 0]];
    println!("{}", check_ba(&r, &symplectic)?.result_line());
    println!("{}", summary(&polarized_space(r, &symplectic)?)?);
    let identity = vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]];
    println!("{}", check_ba(&r, &identity)?.result_line());
    Ok(())
}

#[allow(dead_code)]
fn main() -> sphere::Result<()> {
    run_example()
}

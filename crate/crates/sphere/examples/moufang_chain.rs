// Moufang doubling chains from small cyclic groups.

use sphere::moufang_double::{doubling_chain, ternary_double, Convention, FiniteGroup, Param, StageChoice};

pub fn run_example() -> sphere::Result<()> {
    let stage = StageChoice { eps: Some(Param::Minus), mu: Some(Param::Unit) };
    for seed in ["c2", "c6"] {
        let steps = if seed == "c2" { 3 } else { 2 };
        let (groups, reports) = doubling_chain(&FiniteGroup::seed(seed)?, &vec![stage.clone(); steps], Convention::Bullet)?;
        for r in &reports {
            println!("{seed}: {r}");
        }
        let g = &groups[steps - 1];
        let table = ternary_double(g, g.minus().expect("central -1"), g.unit())?;
        println!("{seed}: ternary table of order {}", table.size());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> sphere::Result<()> {
    run_example()
}

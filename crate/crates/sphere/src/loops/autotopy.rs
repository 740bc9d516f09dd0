use serde::{Deserialize, Serialize};

use super::{compose, first_failing_tuple, FiniteMagma};
use crate::error::{Error, Result};

/// `(f₁,…,f_n; f₀)` with `f₀⟨x₁…x_n⟩ = ⟨f₁x₁ … f_nx_n⟩`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Autotopy {
    pub components: Vec<Vec<usize>>,
    pub target: Vec<usize>,
}

impl Autotopy {
    pub fn new(components: Vec<Vec<usize>>, target: Vec<usize>) -> Self {
        Autotopy { components, target }
    }

    pub fn identity(k: usize, arity: usize) -> Self {
        let id: Vec<usize> = (0..k).collect();
        Autotopy::new(vec![id.clone(); arity], id)
    }

    fn is_bijection(f: &[usize], k: usize) -> bool {
        let mut seen = vec![false; k];
        f.len() == k && f.iter().all(|&x| x < k && !std::mem::replace(&mut seen[x], true))
    }
}

/// Exhaustive check of the autotopy condition.
pub fn autotopy_check(m: &FiniteMagma, a: &Autotopy) -> Result<bool> {
    m.expect_arity(a.components.len())?;
    let k = m.size();
    if !a.components.iter().chain([&a.target]).all(|f| Autotopy::is_bijection(f, k)) {
        return Ok(false);
    }
    let (w, _) = first_failing_tuple(k, m.arity(), |v| {
        let image: Vec<usize> = v.iter().zip(&a.components).map(|(&x, f)| f[x]).collect();
        a.target[m.apply(v)] == m.apply(&image)
    })?;
    Ok(w.is_none())
}

fn inversion(m: &FiniteMagma) -> Result<Vec<usize>> {
    m.expect_arity(2)?;
    let report = super::check_property(m, super::LoopPropertyId::InverseLoop)?;
    if !report.holds() {
        return Err(Error::NotInverseLoop(format!("{:?}", report.witness)));
    }
    m.inversion()
}

/// `a` followed by its five triality transforms:
/// `(jf₀j, f₁; jf₂j)`, `(f₂, jf₀j; jf₁j)`, `(jf₂j, jf₁j; jf₀j)`,
/// `(jf₁j, f₀; f₂)`, `(f₀, jf₂j; f₁)`.
pub fn triality_orbit(m: &FiniteMagma, a: &Autotopy) -> Result<Vec<Autotopy>> {
    let j = inversion(m)?;
    if a.components.len() != 2 {
        return Err(Error::ArityMismatch {
            expected: 2,
            got: a.components.len(),
        });
    }
    let conj = |f: &[usize]| compose(&j, &compose(f, &j));
    let (f1, f2, f0) = (&a.components[0], &a.components[1], &a.target);
    let pair = |x: Vec<usize>, y: Vec<usize>, z: Vec<usize>| Autotopy::new(vec![x, y], z);
    Ok(vec![
        a.clone(),
        pair(conj(f0), f1.clone(), conj(f2)),
        pair(f2.clone(), conj(f0), conj(f1)),
        pair(conj(f2), conj(f1), conj(f0)),
        pair(conj(f1), f0.clone(), f2.clone()),
        pair(f0.clone(), conj(f2), f1.clone()),
    ])
}

/// The six Moufang autotopies attached to `a`:
/// `(L_a,R_a;B_a)`, `(B_a,L_{a⁻¹};L_a)`, `(R_a,B_{a⁻¹};R_{a⁻¹})`,
/// `(L_{a⁻¹},R_{a⁻¹};B_{a⁻¹})`, `(B_{a⁻¹},L_a;L_{a⁻¹})`, `(R_{a⁻¹},B_a;R_a)`.
pub fn hexad(m: &FiniteMagma, a: usize) -> Result<Vec<Autotopy>> {
    let j = inversion(m)?;
    let b = j[a];
    let (la, ra, ba) = (m.left_mult(a), m.right_mult(a), m.bimult(a));
    let (lb, rb, bb) = (m.left_mult(b), m.right_mult(b), m.bimult(b));
    let pair = |x: &Vec<usize>, y: &Vec<usize>, z: &Vec<usize>| {
        Autotopy::new(vec![x.clone(), y.clone()], z.clone())
    };
    Ok(vec![
        pair(&la, &ra, &ba),
        pair(&ba, &lb, &la),
        pair(&ra, &bb, &rb),
        pair(&lb, &rb, &bb),
        pair(&bb, &la, &lb),
        pair(&rb, &ba, &ra),
    ])
}

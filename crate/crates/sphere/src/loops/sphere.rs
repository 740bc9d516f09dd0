use std::collections::HashMap;
use std::sync::Arc;

use super::FiniteMagma;
use crate::error::{Error, Result};
use crate::ring::Ring;
use crate::spherical::{BinaryAlgebra, Domain, IdentityId, Strategy, TernaryAlgebra};

pub const DEFAULT_MAX_TABLE: usize = 64;

/// The loop size cap, overridden by `SPHERE_MAX_TABLE`.
pub fn max_table() -> usize {
    std::env::var("SPHERE_MAX_TABLE")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_MAX_TABLE)
}

/// The element label `(v₁;…;v_n)` used for sphere points.
pub fn vector_label<R: Ring>(r: &R, v: &[R::Elem]) -> String {
    let coords: Vec<String> = v.iter().map(|a| r.format_elem(a)).collect();
    format!("({})", coords.join(";"))
}

/// The sphere `q = c` with `(xyz) = ⟨xyz⟩/q(y)`.
///
/// Closure under the product follows from TC, which is checked first on
/// basis vectors.
pub fn sphere_loop<R: Ring>(alg: &TernaryAlgebra<R>, c: &R::Elem, domain: Domain) -> Result<FiniteMagma> {
    let r = alg.ring().clone();
    let points = alg.sphere_enumerate(c, domain)?;
    if points.is_empty() {
        return Err(Error::EmptySphere(r.format_elem(c)));
    }
    let cap = max_table();
    if points.len() > cap {
        return Err(Error::TableTooLarge {
            size: points.len(),
            cap,
        });
    }
    if !alg.verify(IdentityId::TC, &Strategy::ExhaustiveBasis)?.holds() {
        return Err(Error::InfeasibleStrategy(
            "product does not satisfy TC, spheres are not closed".into(),
        ));
    }
    let labels = points.iter().map(|p| vector_label(&r, p)).collect();
    let index: HashMap<_, usize> = points.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let inv = r.invert(c)?;
    let alg = Arc::new(alg.clone());
    let points = Arc::new(points);
    let product = move |x: usize, y: usize, z: usize| {
        let v = alg.tri(&points[x], &points[y], &points[z]);
        let v = crate::linalg::scale(&r, &inv, &v);
        *index.get(&v).expect("sphere closed under the torsor product")
    };
    FiniteMagma::ternary_from_fn(labels, product)
}

/// The norm-one elements of a binary algebra under its product.
pub fn unit_sphere_group<R: Ring>(alg: &BinaryAlgebra<R>, domain: Domain) -> Result<FiniteMagma> {
    let r = alg.ring().clone();
    let one = r.one();
    let points = match domain {
        Domain::Finite => alg.norm_space().level_set_finite(&one)?,
        Domain::Box(b) => alg.norm_space().level_set_box(&one, b),
    };
    let cap = max_table();
    if points.len() > cap {
        return Err(Error::TableTooLarge {
            size: points.len(),
            cap,
        });
    }
    let index: HashMap<_, usize> = points.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let mut table = Vec::with_capacity(points.len());
    for x in &points {
        let row = points
            .iter()
            .map(|y| {
                index.get(&alg.mul(x, y)).copied().ok_or_else(|| {
                    Error::InfeasibleStrategy("the norm is not multiplicative on this domain".into())
                })
            })
            .collect::<Result<Vec<_>>>()?;
        table.push(row);
    }
    FiniteMagma::binary(points.iter().map(|p| vector_label(&r, p)).collect(), table)
}

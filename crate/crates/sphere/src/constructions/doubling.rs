use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::linalg::{self, Vector};
use crate::quadratic::QuadraticSpace;
use crate::ring::Ring;
use crate::spherical::{BinaryAlgebra, Side, TernaryAlgebra};

/// Doubling parameter `μ` and the side of the construction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DoublingParams<E> {
    pub mu: E,
    pub side: Side,
}

/// The base field as a rank-1 algebra: `N(x) = x²`, trivial involution.
pub fn unarion<R: Ring>(ring: R) -> BinaryAlgebra<R> {
    let norm = QuadraticSpace::new(ring.clone(), vec![vec![ring.one()]]).expect("rank 1");
    let r = ring.clone();
    BinaryAlgebra::from_fn(
        norm,
        vec![ring.one()],
        "unarion",
        |x, z| vec![r.mul(&x[0], &z[0])],
        |x| x.to_vec(),
    )
}

/// Doubles `A` to `A ⊕ A` with norm `N₀ − μN₁`, unit `(e,0)` and involution
/// `(x₀♯, −x₁)`. Left: `(x₀z₀ + μz₁♯x₁, z₁x₀ + x₁z₀♯)`;
/// right: `(x₀z₀ + μz₁x₁♯, z₀x₁ + x₀♯z₁)`.
pub fn kd_double<R: Ring>(
    alg: &BinaryAlgebra<R>,
    params: &DoublingParams<R::Elem>,
) -> BinaryAlgebra<R> {
    let r = alg.ring().clone();
    let n = alg.rank();
    let mu = &params.mu;
    let norm = alg.norm_space().direct_sum(alg.norm_space(), &r.neg(mu));
    let unit = linalg::concat(alg.unit(), &linalg::zero_vec(&r, n));
    let side = params.side;
    BinaryAlgebra::from_fn(
        norm,
        unit,
        format!("{side} double of {}", alg.label()),
        |x, z| {
            let (x0, x1) = x.split_at(n);
            let (z0, z1) = z.split_at(n);
            let (head, tail) = match side {
                Side::Left => (
                    linalg::add(
                        &r,
                        &alg.mul(x0, z0),
                        &linalg::scale(&r, mu, &alg.mul(&alg.sharp(z1), x1)),
                    ),
                    linalg::add(&r, &alg.mul(z1, x0), &alg.mul(x1, &alg.sharp(z0))),
                ),
                Side::Right => (
                    linalg::add(
                        &r,
                        &alg.mul(x0, z0),
                        &linalg::scale(&r, mu, &alg.mul(z1, &alg.sharp(x1))),
                    ),
                    linalg::add(&r, &alg.mul(z0, x1), &alg.mul(&alg.sharp(x0), z1)),
                ),
            };
            linalg::concat(&head, &tail)
        },
        |x| {
            let (x0, x1) = x.split_at(n);
            linalg::concat(&alg.sharp(x0), &linalg::neg(&r, x1))
        },
    )
}

/// Doubles a ternary space to `V ⊕ V` with `q̃ = q ⊕ (−μ)q`. The left
/// product uses only `⟨·,·,·⟩` and `μ`; the right product is its mirror under
/// `⟨abc⟩ ↦ ⟨cba⟩`.
pub fn abcd_double<R: Ring>(
    alg: &TernaryAlgebra<R>,
    params: &DoublingParams<R::Elem>,
) -> Result<TernaryAlgebra<R>> {
    Ok(match params.side {
        Side::Left => abcd_left(alg, &params.mu),
        Side::Right => abcd_left(&alg.reversed(), &params.mu).reversed(),
    }
    .with_label(format!("{} abcd double of {}", params.side, alg.label())))
}

fn abcd_left<R: Ring>(alg: &TernaryAlgebra<R>, mu: &R::Elem) -> TernaryAlgebra<R> {
    let r = alg.ring().clone();
    let n = alg.rank();
    let space = alg.space().direct_sum(alg.space(), &r.neg(mu));
    let t = |a: &[R::Elem], b: &[R::Elem], c: &[R::Elem]| alg.tri(a, b, c);
    TernaryAlgebra::from_fn(space, "abcd double", |x, y, z| {
        let (x0, x1) = x.split_at(n);
        let (y0, y1) = y.split_at(n);
        let (z0, z1) = z.split_at(n);
        let mut c0: Vector<R::Elem> = t(x0, y0, z0);
        let mut rest = t(y0, z1, x1);
        rest = linalg::sub(&r, &rest, &t(x0, z1, y1));
        rest = linalg::sub(&r, &rest, &t(z0, y1, x1));
        linalg::axpy(&r, &mut c0, mu, &rest);
        let mut c1 = t(x1, z0, y0);
        c1 = linalg::sub(&r, &c1, &t(y1, z0, x0));
        c1 = linalg::add(&r, &c1, &t(z1, y0, x0));
        linalg::axpy(&r, &mut c1, &r.neg(mu), &t(x1, y1, z1));
        linalg::concat(&c0, &c1)
    })
}


use crate::binary2d::{bracket, BinaryForm};
use crate::error::{Error, Result};
use crate::linalg::{self, Vector};
use crate::quadratic::QuadraticSpace;
use crate::ring::Ring;
use crate::spherical::{BinaryAlgebra, TernaryAlgebra};

/// The Clifford algebra of a binary form on the basis `(I, R₁₂, e₁, e₂)`,
/// where even elements act on odd ones through the spiration matrices, with norm `N(f,v) = det f − q(v)` and involution
/// `(f♯, −v)`.
pub fn clifford_quaternion_algebra<R: Ring>(form: &BinaryForm<R>) -> Result<BinaryAlgebra<R>> {
    if form.generators_dependent() {
        return Err(Error::DependentGenerators("I, R12".into()));
    }
    let r = form.ring.clone();
    let (al, be, ga) = (form.alpha.clone(), form.beta.clone(), form.gamma.clone());
    let even = QuadraticSpace::binary(r.clone(), r.one(), be.clone(), r.mul(&al, &ga));
    let norm = even.direct_sum(&form.space(), &r.from_i64(-1));
    // even part: a₀ + a₁X with X = e₂e₁, X² = βX − αγ
    let emul = |a: &[R::Elem], b: &[R::Elem]| -> Vector<R::Elem> {
        let a1b1 = r.mul(&a[1], &b[1]);
        vec![
            r.sub(&r.mul(&a[0], &b[0]), &r.mul(&r.mul(&al, &ga), &a1b1)),
            r.add(
                &r.add(&r.mul(&a[0], &b[1]), &r.mul(&a[1], &b[0])),
                &r.mul(&be, &a1b1),
            ),
        ]
    };
    let esharp = |a: &[R::Elem]| vec![r.add(&a[0], &r.mul(&be, &a[1])), r.neg(&a[1])];
    let act = |f: &[R::Elem], w: &[R::Elem]| -> Vector<R::Elem> {
        let xw = vec![
            r.add(&r.mul(&be, &w[0]), &r.mul(&ga, &w[1])),
            r.neg(&r.mul(&al, &w[0])),
        ];
        let mut out = linalg::scale(&r, &f[0], w);
        linalg::axpy(&r, &mut out, &f[1], &xw);
        out
    };
    let rvw = |v: &[R::Elem], w: &[R::Elem]| -> Vector<R::Elem> {
        let b = r.add(
            &r.add(&r.mul(&al, &r.mul(&v[0], &w[0])), &r.mul(&be, &r.mul(&v[0], &w[1]))),
            &r.mul(&ga, &r.mul(&v[1], &w[1])),
        );
        vec![b, r.neg(&bracket(&r, v, w))]
    };
    let unit = linalg::basis_vec(&r, 4, 0);
    Ok(BinaryAlgebra::from_fn(
        norm,
        unit,
        "clifford quaternion",
        |x, z| {
            let (f, v) = x.split_at(2);
            let (g, w) = z.split_at(2);
            let even = linalg::add(&r, &emul(f, g), &rvw(v, w));
            let odd = linalg::add(&r, &act(&esharp(f), w), &act(g, v));
            linalg::concat(&even, &odd)
        },
        |x| {
            let (f, v) = x.split_at(2);
            linalg::concat(&esharp(f), &linalg::neg(&r, v))
        },
    ))
}

/// The group spherical space `x y♯ z` of the Clifford quaternions.
pub fn clifford_quaternion<R: Ring>(form: &BinaryForm<R>) -> Result<TernaryAlgebra<R>> {
    Ok(clifford_quaternion_algebra(form)?
        .group_spherical()
        .with_label("clifford quaternion"))
}

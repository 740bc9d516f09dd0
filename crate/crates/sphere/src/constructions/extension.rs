use crate::error::{Error, Result};
use crate::linalg::{self, Matrix, Vector};
use crate::quadratic::QuadraticSpace;
use crate::ring::Ring;
use crate::spherical::verify::{first_failure, Strategy, Verdict, VerificationReport};
use crate::spherical::TernaryAlgebra;

/// `⟨xyz⟩ = φ(x)ψ(y)z + ψ(z)φ(y)x − φ(x)ψ(z)y` with `q = φψ`.
pub fn minkowski_extension<R: Ring>(
    ring: R,
    phi: &[R::Elem],
    psi: &[R::Elem],
) -> Result<TernaryAlgebra<R>> {
    let space = QuadraticSpace::product_of_covectors(ring.clone(), phi, psi)?;
    let r = ring;
    let ev = |c: &[R::Elem], x: &[R::Elem]| {
        c.iter()
            .zip(x)
            .fold(r.zero(), |acc, (a, b)| r.add(&acc, &r.mul(a, b)))
    };
    Ok(TernaryAlgebra::from_fn(space, "minkowski extension", |x, y, z| {
        let mut out = linalg::scale(&r, &r.mul(&ev(phi, x), &ev(psi, y)), z);
        linalg::axpy(&r, &mut out, &r.mul(&ev(psi, z), &ev(phi, y)), x);
        linalg::axpy(&r, &mut out, &r.neg(&r.mul(&ev(phi, x), &ev(psi, z))), y);
        out
    }))
}

/// A right module over a ternary algebra: for each basis pair the matrix of
/// `R_{e_i,e_j}` acting on `W`.
#[derive(Debug, Clone, PartialEq)]
pub struct RightModuleAction<R: Ring> {
    base: TernaryAlgebra<R>,
    m: usize,
    action: Vec<Matrix<R::Elem>>,
}

impl<R: Ring> RightModuleAction<R> {
    /// `action[i·n + j]` is the `m×m` matrix of `R_{e_i,e_j}`.
    pub fn new(base: TernaryAlgebra<R>, m: usize, action: Vec<Matrix<R::Elem>>) -> Result<Self> {
        let n = base.rank();
        if action.len() != n * n {
            return Err(Error::RankMismatch {
                expected: n * n,
                got: action.len(),
            });
        }
        if let Some(a) = action.iter().find(|a| a.dim() != m) {
            return Err(Error::RankMismatch {
                expected: m,
                got: a.dim(),
            });
        }
        Ok(RightModuleAction { base, m, action })
    }

    /// `W = V` with `R_{a,b}w = ⟨wba⟩`.
    pub fn adjoint(base: &TernaryAlgebra<R>) -> Self {
        let n = base.rank();
        let basis = linalg::basis(base.ring(), n);
        let action = (0..n * n)
            .map(|t| {
                let (a, b) = (&basis[t / n], &basis[t % n]);
                Matrix::from_columns(n, |k| base.tri(&basis[k], b, a))
            })
            .collect();
        RightModuleAction {
            base: base.clone(),
            m: n,
            action,
        }
    }

    /// The rank-1 module `R_{a,b} ↦ q(e)·χ(b♯·a)` for a character `χ` of the
    /// homotope at `e`.
    pub fn character(base: &TernaryAlgebra<R>, e: &[R::Elem], chi: &[R::Elem]) -> Result<Self> {
        let r = base.ring();
        let h = base.homotope(e)?;
        let qe = base.q(e);
        let n = base.rank();
        let basis = linalg::basis(r, n);
        let action = (0..n * n)
            .map(|t| {
                let p = h.mul(&h.sharp(&basis[t % n]), &basis[t / n]);
                let v = p
                    .iter()
                    .zip(chi)
                    .fold(r.zero(), |acc, (a, b)| r.add(&acc, &r.mul(a, b)));
                Matrix::scalar(r, 1, &r.mul(&qe, &v))
            })
            .collect();
        Self::new(base.clone(), 1, action)
    }

    pub fn base(&self) -> &TernaryAlgebra<R> {
        &self.base
    }

    pub fn module_rank(&self) -> usize {
        self.m
    }

    /// `R_{a,b}` on `W`.
    pub fn act(&self, a: &[R::Elem], b: &[R::Elem]) -> Matrix<R::Elem> {
        let r = self.base.ring();
        let n = self.base.rank();
        let mut out = Matrix::zero(r, self.m);
        for (i, ai) in a.iter().enumerate() {
            for (j, bj) in b.iter().enumerate() {
                let k = r.mul(ai, bj);
                if !r.is_zero(&k) {
                    out = out.add(r, &self.action[i * n + j].scale(r, &k));
                }
            }
        }
        out
    }

    /// First basis tuple `(x₂,x₃,x₄,x₅)` violating
    /// `R_{⟨x₃x₄x₅⟩,x₂} = R_{x₅,x₄}R_{x₃,x₂}`.
    pub fn composition_witness(&self) -> Option<[usize; 4]> {
        let r = self.base.ring();
        let n = self.base.rank();
        let basis = linalg::basis(r, n);
        for x2 in 0..n {
            for x3 in 0..n {
                let right = self.act(&basis[x3], &basis[x2]);
                for x4 in 0..n {
                    for x5 in 0..n {
                        let t = self.base.tri(&basis[x3], &basis[x4], &basis[x5]);
                        let lhs = self.act(&t, &basis[x2]);
                        let rhs = self.act(&basis[x5], &basis[x4]).mul(r, &right);
                        if lhs != rhs {
                            return Some([x2, x3, x4, x5]);
                        }
                    }
                }
            }
        }
        None
    }
}

/// `V ⊕ W` with `q̃ = q ⊕ 0` and product
/// `(⟨x₀y₀z₀⟩, R_{y₀,z₀}x₁ − R_{x₀,z₀}y₁ + R_{x₀,y₀}z₁)`.
pub fn split_null_extension<R: Ring>(action: &RightModuleAction<R>) -> TernaryAlgebra<R> {
    let base = action.base();
    let r = base.ring().clone();
    let n = base.rank();
    let m = action.module_rank();
    if m == 0 {
        return base.clone();
    }
    let zero_form = QuadraticSpace::new(r.clone(), vec![vec![r.zero(); m]; m]);
    let space = match zero_form {
        Ok(z) => base.space().direct_sum(&z, &r.one()),
        Err(_) => base.space().clone(),
    };
    TernaryAlgebra::from_fn(space, format!("split null extension of {}", base.label()), |x, y, z| {
        let (x0, x1) = x.split_at(n);
        let (y0, y1) = y.split_at(n);
        let (z0, z1) = z.split_at(n);
        let head = base.tri(x0, y0, z0);
        let mut tail = action.act(y0, z0).apply(&r, x1);
        let t2 = action.act(x0, z0).apply(&r, y1);
        let t3 = action.act(x0, y0).apply(&r, z1);
        tail = linalg::add(&r, &linalg::sub(&r, &tail, &t2), &t3);
        linalg::concat(&head, &tail)
    })
}

/// `V₁ ⊕ V₂` with `q(x) = b(x₁,x₂)` and the product determined by `b`.
pub fn polarized_space<R: Ring>(ring: R, b: &[Vec<R::Elem>]) -> Result<TernaryAlgebra<R>> {
    let n1 = b.len();
    let n2 = b.first().map_or(0, Vec::len);
    if n1 == 0 || n2 == 0 || b.iter().any(|row| row.len() != n2) {
        return Err(Error::RankMismatch {
            expected: n2.max(1),
            got: 0,
        });
    }
    let n = n1 + n2;
    let mut coef = vec![vec![ring.zero(); n]; n];
    for i in 0..n1 {
        for j in 0..n2 {
            coef[i][n1 + j] = b[i][j].clone();
        }
    }
    let space = QuadraticSpace::new(ring.clone(), coef)?;
    let r = ring;
    let bf = |u: &[R::Elem], v: &[R::Elem]| bilinear(&r, b, u, v);
    Ok(TernaryAlgebra::from_fn(space, "polarized space", |x, y, z| {
        let (x1, x2) = x.split_at(n1);
        let (y1, y2) = y.split_at(n1);
        let (z1, z2) = z.split_at(n1);
        let mut first = linalg::scale(&r, &bf(z1, y2), x1);
        linalg::axpy(&r, &mut first, &r.neg(&bf(z1, x2)), y1);
        linalg::axpy(&r, &mut first, &bf(y1, x2), z1);
        let mut second = linalg::scale(&r, &bf(y1, z2), x2);
        linalg::axpy(&r, &mut second, &r.neg(&bf(x1, z2)), y2);
        linalg::axpy(&r, &mut second, &bf(x1, y2), z2);
        linalg::concat(&first, &second)
    }))
}

fn bilinear<R: Ring>(r: &R, b: &[Vec<R::Elem>], u: &[R::Elem], v: &[R::Elem]) -> R::Elem {
    let mut acc = r.zero();
    for (i, ui) in u.iter().enumerate() {
        if r.is_zero(ui) {
            continue;
        }
        for (j, vj) in v.iter().enumerate() {
            acc = r.add(&acc, &r.mul(&b[i][j], &r.mul(ui, vj)));
        }
    }
    acc
}

/// Condition (BA): `Σ_σ sgn(σ) b(y¹,z^σ(1)) b(y²,z^σ(2)) z^σ(3) = 0` for
/// `y ∈ V_i`, `z ∈ V_j`, both role assignments, on basis vectors. Witness
/// vectors live in `V₁ ⊕ V₂`.
pub fn check_ba<R: Ring>(ring: &R, b: &[Vec<R::Elem>]) -> Result<VerificationReport<R::Elem>> {
    let n1 = b.len();
    let n2 = b.first().map_or(0, Vec::len);
    let n = n1 + n2;
    let embed = |offset: usize, k: usize| linalg::basis_vec(ring, n, offset + k);
    let v1: Vec<_> = (0..n1).map(|k| embed(0, k)).collect();
    let v2: Vec<_> = (0..n2).map(|k| embed(n1, k)).collect();
    let r = ring;
    let pair = |u: &[R::Elem], v: &[R::Elem]| {
        let (u1, u2) = u.split_at(n1);
        let (v1, v2) = v.split_at(n1);
        r.add(&bilinear(r, b, u1, v2), &bilinear(r, b, v1, u2))
    };
    let alternating = |t: &[Vector<R::Elem>]| {
        let (y1, y2, z) = (&t[0], &t[1], [&t[2], &t[3], &t[4]]);
        let mut acc = linalg::zero_vec(r, n);
        for (p, sign) in [
            ([0, 1, 2], 1i64),
            ([1, 0, 2], -1),
            ([2, 0, 1], 1),
            ([0, 2, 1], -1),
            ([1, 2, 0], 1),
            ([2, 1, 0], -1),
        ] {
            let k = r.mul(&r.from_i64(sign), &r.mul(&pair(y1, z[p[0]]), &pair(y2, z[p[1]])));
            linalg::axpy(r, &mut acc, &k, z[p[2]]);
        }
        linalg::is_zero_vec(r, &acc)
    };
    let first = [v1.clone(), v1.clone(), v2.clone(), v2.clone(), v2.clone()];
    let second = [v2.clone(), v2.clone(), v1.clone(), v1.clone(), v1];
    let (w1, c1) = first_failure(&first, alternating)?;
    let (witness, checked) = match w1 {
        Some(w) => (Some(w), c1),
        None => {
            let (w2, c2) = first_failure(&second, alternating)?;
            (w2, c1 + c2)
        }
    };
    Ok(VerificationReport {
        identity: "BA".into(),
        verdict: if witness.is_some() {
            Verdict::Fails
        } else {
            Verdict::Holds
        },
        strategy: Strategy::ExhaustiveBasis,
        witness,
        checked,
    })
}

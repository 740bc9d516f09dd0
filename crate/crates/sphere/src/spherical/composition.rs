use std::fmt;

use super::verify::{verify_custom, Strategy, VerificationReport};
use super::{Side, TernaryAlgebra};
use crate::error::{Error, Result};
use crate::linalg::{self, Matrix, Vector};
use crate::quadratic::QuadraticSpace;
use crate::ring::Ring;

/// A unital bilinear algebra with a linear involution `♯` and a norm `N`.
#[derive(Debug, Clone)]
pub struct BinaryAlgebra<R: Ring> {
    norm: QuadraticSpace<R>,
    d: Vec<Vector<R::Elem>>,
    unit: Vector<R::Elem>,
    involution: Matrix<R::Elem>,
    label: String,
}

impl<R: Ring> PartialEq for BinaryAlgebra<R> {
    fn eq(&self, other: &Self) -> bool {
        self.norm == other.norm
            && self.d == other.d
            && self.unit == other.unit
            && self.involution == other.involution
    }
}

/// Identities of a binary algebra with involution.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BinaryIdentity {
    Unit,
    Commutative,
    Associative,
    LeftAlternative,
    RightAlternative,
    Flexible,
    Moufang,
    InvolutionOrderTwo,
    AntiAutomorphism,
    /// `x + x♯ = b_N(x,e)·e`
    InvolutionTrace,
    /// `x x♯ = N(x) e = x♯ x`
    InvolutionNorm,
    /// `x² − t(x)x + N(x)e = 0`
    CayleyHamilton,
    NormMultiplicative,
}

impl BinaryIdentity {
    pub fn degrees(self) -> &'static [u32] {
        use BinaryIdentity::*;
        match self {
            Unit | InvolutionOrderTwo | InvolutionTrace => &[1],
            Commutative | AntiAutomorphism => &[1, 1],
            Associative => &[1, 1, 1],
            LeftAlternative | Flexible => &[2, 1],
            RightAlternative => &[1, 2],
            Moufang => &[2, 1, 1],
            InvolutionNorm | CayleyHamilton => &[2],
            NormMultiplicative => &[2, 2],
        }
    }
}

impl fmt::Display for BinaryIdentity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl<R: Ring> BinaryAlgebra<R> {
    /// `products[i·n + j] = e_i e_j`; `involution` acts on coordinate columns.
    pub fn new(
        norm: QuadraticSpace<R>,
        products: Vec<Vector<R::Elem>>,
        unit: Vector<R::Elem>,
        involution: Matrix<R::Elem>,
        label: impl Into<String>,
    ) -> Result<Self> {
        let n = norm.rank();
        if products.len() != n * n || products.iter().any(|v| v.len() != n) {
            return Err(Error::RankMismatch {
                expected: n * n,
                got: products.len(),
            });
        }
        norm.check_rank(&unit)?;
        if involution.dim() != n {
            return Err(Error::RankMismatch {
                expected: n,
                got: involution.dim(),
            });
        }
        Ok(BinaryAlgebra {
            norm,
            d: products,
            unit,
            involution,
            label: label.into(),
        })
    }

    /// Reads products and involution off functions evaluated on basis vectors.
    pub fn from_fn(
        norm: QuadraticSpace<R>,
        unit: Vector<R::Elem>,
        label: impl Into<String>,
        mul: impl Fn(&[R::Elem], &[R::Elem]) -> Vector<R::Elem>,
        sharp: impl Fn(&[R::Elem]) -> Vector<R::Elem>,
    ) -> Self {
        let n = norm.rank();
        let basis = linalg::basis(norm.ring(), n);
        let products = (0..n * n)
            .map(|t| mul(&basis[t / n], &basis[t % n]))
            .collect();
        let involution = Matrix::from_columns(n, |j| sharp(&basis[j]));
        Self::new(norm, products, unit, involution, label).expect("consistent sizes")
    }

    pub(super) fn homotope_of(alg: &TernaryAlgebra<R>, e: &[R::Elem]) -> Result<Self> {
        let r = alg.ring();
        let qe = alg.q(e);
        let inv = r.invert(&qe)?;
        let norm = alg.space().scaled(&inv);
        let sp = alg.space();
        Ok(Self::from_fn(
            norm,
            e.to_vec(),
            format!("homotope of {}", alg.label()),
            |x, z| linalg::scale(r, &inv, &alg.tri(x, e, z)),
            |x| {
                let k = r.mul(&sp.bq(x, e), &inv);
                linalg::sub(r, &linalg::scale(r, &k, e), x)
            },
        ))
    }

    pub fn ring(&self) -> &R {
        self.norm.ring()
    }

    pub fn rank(&self) -> usize {
        self.norm.rank()
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn unit(&self) -> &Vector<R::Elem> {
        &self.unit
    }

    pub fn norm_space(&self) -> &QuadraticSpace<R> {
        &self.norm
    }

    pub fn involution(&self) -> &Matrix<R::Elem> {
        &self.involution
    }

    pub fn products(&self) -> &[Vector<R::Elem>] {
        &self.d
    }

    pub fn mul(&self, x: &[R::Elem], z: &[R::Elem]) -> Vector<R::Elem> {
        let r = self.ring();
        let n = self.rank();
        let mut out = linalg::zero_vec(r, n);
        for (i, xi) in x.iter().enumerate() {
            if r.is_zero(xi) {
                continue;
            }
            for (j, zj) in z.iter().enumerate() {
                if r.is_zero(zj) {
                    continue;
                }
                linalg::axpy(r, &mut out, &r.mul(xi, zj), &self.d[i * n + j]);
            }
        }
        out
    }

    pub fn sharp(&self, x: &[R::Elem]) -> Vector<R::Elem> {
        self.involution.apply(self.ring(), x)
    }

    pub fn norm(&self, x: &[R::Elem]) -> R::Elem {
        self.norm.q(x)
    }

    /// `t(x) = b_N(e, x)`.
    pub fn trace(&self, x: &[R::Elem]) -> R::Elem {
        self.norm.bq(&self.unit, x)
    }

    pub fn holds_at(&self, id: BinaryIdentity, v: &[Vector<R::Elem>]) -> bool {
        use BinaryIdentity::*;
        let r = self.ring();
        let m = |a: &[R::Elem], b: &[R::Elem]| self.mul(a, b);
        let e = &self.unit;
        match id {
            Unit => m(e, &v[0]) == v[0] && m(&v[0], e) == v[0],
            Commutative => m(&v[0], &v[1]) == m(&v[1], &v[0]),
            Associative => m(&m(&v[0], &v[1]), &v[2]) == m(&v[0], &m(&v[1], &v[2])),
            LeftAlternative => m(&v[0], &m(&v[0], &v[1])) == m(&m(&v[0], &v[0]), &v[1]),
            RightAlternative => m(&m(&v[0], &v[1]), &v[1]) == m(&v[0], &m(&v[1], &v[1])),
            Flexible => m(&m(&v[0], &v[1]), &v[0]) == m(&v[0], &m(&v[1], &v[0])),
            Moufang => {
                let (a, x, y) = (&v[0], &v[1], &v[2]);
                m(&m(a, x), &m(y, a)) == m(a, &m(&m(x, y), a))
            }
            InvolutionOrderTwo => self.sharp(&self.sharp(&v[0])) == v[0],
            AntiAutomorphism => {
                self.sharp(&m(&v[0], &v[1])) == m(&self.sharp(&v[1]), &self.sharp(&v[0]))
            }
            InvolutionTrace => {
                linalg::add(r, &v[0], &self.sharp(&v[0])) == linalg::scale(r, &self.trace(&v[0]), e)
            }
            InvolutionNorm => {
                let ne = linalg::scale(r, &self.norm(&v[0]), e);
                let s = self.sharp(&v[0]);
                m(&v[0], &s) == ne && m(&s, &v[0]) == ne
            }
            CayleyHamilton => {
                let x = &v[0];
                let mut acc = m(x, x);
                linalg::axpy(r, &mut acc, &r.neg(&self.trace(x)), x);
                linalg::axpy(r, &mut acc, &self.norm(x), e);
                linalg::is_zero_vec(r, &acc)
            }
            NormMultiplicative => {
                self.norm(&m(&v[0], &v[1])) == r.mul(&self.norm(&v[0]), &self.norm(&v[1]))
            }
        }
    }

    pub fn check(
        &self,
        id: BinaryIdentity,
        strategy: &Strategy,
    ) -> Result<VerificationReport<R::Elem>> {
        verify_custom(
            self.ring(),
            self.rank(),
            &id.to_string(),
            id.degrees(),
            strategy,
            |v| self.holds_at(id, v),
        )
    }

    /// Exhaustive-basis verdict for an identity.
    pub fn satisfies(&self, id: BinaryIdentity) -> bool {
        self.check(id, &Strategy::ExhaustiveBasis)
            .expect("binary identities have degree at most 2")
            .holds()
    }

    /// True when `♯` is a scalar involution: anti-automorphism of order 2
    /// with `x + x♯` and `x x♯` in `K·e`.
    pub fn has_scalar_involution(&self) -> bool {
        [
            BinaryIdentity::InvolutionOrderTwo,
            BinaryIdentity::AntiAutomorphism,
            BinaryIdentity::InvolutionTrace,
            BinaryIdentity::InvolutionNorm,
        ]
        .into_iter()
        .all(|id| self.satisfies(id))
    }

    /// The ternary product `λ·x(y♯z)` (left) or `λ·(xy♯)z` (right) with
    /// quadratic form `λ·N`.
    pub fn ternary(&self, side: Side, lambda: &R::Elem) -> TernaryAlgebra<R> {
        let r = self.ring();
        let space = self.norm.scaled(lambda);
        TernaryAlgebra::from_fn(space, format!("{} ({side} ternary)", self.label), |x, y, z| {
            let ys = self.sharp(y);
            let p = match side {
                Side::Left => self.mul(x, &self.mul(&ys, z)),
                Side::Right => self.mul(&self.mul(x, &ys), z),
            };
            linalg::scale(r, lambda, &p)
        })
    }

    /// The group spherical space `⟨xyz⟩ = x y♯ z`, `q = N`.
    pub fn group_spherical(&self) -> TernaryAlgebra<R> {
        self.ternary(Side::Left, &self.ring().one())
    }
}

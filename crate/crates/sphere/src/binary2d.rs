//! The canonical trilinear product on a rank-2 quadratic space, its basis
//! tables, and the spiration/spiflection matrix calculus.

use crate::error::{Error, Result};
use crate::linalg::{self, Matrix, SpanMembership, Vector};
use crate::quadratic::QuadraticSpace;
use crate::ring::Ring;
use crate::spherical::TernaryAlgebra;

pub type Matrix2<E> = Matrix<E>;

/// The binary form `q(x) = αx₁² + βx₁x₂ + γx₂²`.
#[derive(Debug, Clone, PartialEq)]
pub struct BinaryForm<R: Ring> {
    pub ring: R,
    pub alpha: R::Elem,
    pub beta: R::Elem,
    pub gamma: R::Elem,
}

/// `X² = trace·X − norm` for the spiration generator `R₁₂`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientRelation<E> {
    pub trace: E,
    pub norm: E,
}

/// One row of the five-fold table: a basis index tuple and the value shared
/// by all three bracketings (`None` when they disagree).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiveFold<E> {
    pub indices: [usize; 5],
    pub bracketings: [Vector<E>; 3],
}

impl<E: PartialEq + Clone> FiveFold<E> {
    pub fn agreed(&self) -> Option<&Vector<E>> {
        let [a, b, c] = &self.bracketings;
        (a == b && b == c).then_some(a)
    }
}

/// `[x,y] = x₁y₂ − x₂y₁`.
pub fn bracket<R: Ring>(r: &R, x: &[R::Elem], y: &[R::Elem]) -> R::Elem {
    r.sub(&r.mul(&x[0], &y[1]), &r.mul(&x[1], &y[0]))
}

impl<R: Ring> BinaryForm<R> {
    pub fn new(ring: R, alpha: R::Elem, beta: R::Elem, gamma: R::Elem) -> Self {
        BinaryForm {
            ring,
            alpha,
            beta,
            gamma,
        }
    }

    pub fn from_ints(ring: R, a: i64, b: i64, c: i64) -> Self {
        let (alpha, beta, gamma) = (ring.from_i64(a), ring.from_i64(b), ring.from_i64(c));
        Self::new(ring, alpha, beta, gamma)
    }

    /// Parses `a,b,c`.
    pub fn parse(ring: R, s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(',').collect();
        if parts.len() != 3 {
            return Err(Error::Parse(format!("form `{s}` needs three coefficients")));
        }
        let alpha = crate::ring::ring_eval(&ring, parts[0])?;
        let beta = crate::ring::ring_eval(&ring, parts[1])?;
        let gamma = crate::ring::ring_eval(&ring, parts[2])?;
        Ok(Self::new(ring, alpha, beta, gamma))
    }

    pub fn space(&self) -> QuadraticSpace<R> {
        QuadraticSpace::binary(
            self.ring.clone(),
            self.alpha.clone(),
            self.beta.clone(),
            self.gamma.clone(),
        )
    }

    pub fn q(&self, x: &[R::Elem]) -> R::Elem {
        self.space().q(x)
    }

    /// `b(x,y) = αx₁y₁ + βx₁y₂ + γx₂y₂`, the upper triangular bilinear form.
    pub fn b(&self, x: &[R::Elem], y: &[R::Elem]) -> R::Elem {
        let r = &self.ring;
        let t1 = r.mul(&self.alpha, &r.mul(&x[0], &y[0]));
        let t2 = r.mul(&self.beta, &r.mul(&x[0], &y[1]));
        let t3 = r.mul(&self.gamma, &r.mul(&x[1], &y[1]));
        r.add(&r.add(&t1, &t2), &t3)
    }

    /// The unique product satisfying the Kirmse identities.
    pub fn canonical_ternary(
        &self,
        x: &[R::Elem],
        y: &[R::Elem],
        z: &[R::Elem],
    ) -> Vector<R::Elem> {
        let r = &self.ring;
        let m = |a: &R::Elem, b: &R::Elem, c: &R::Elem| r.mul(a, &r.mul(b, c));
        let (x1, x2, y1, y2, z1, z2) = (&x[0], &x[1], &y[0], &y[1], &z[0], &z[1]);
        let first = {
            let g = r.sub(&r.add(&m(x1, y2, z2), &m(x2, y2, z1)), &m(x2, y1, z2));
            let s = r.add(
                &r.mul(&self.alpha, &m(x1, y1, z1)),
                &r.mul(&self.beta, &m(x1, y2, z1)),
            );
            r.add(&s, &r.mul(&self.gamma, &g))
        };
        let second = {
            let a = r.sub(&r.add(&m(x1, y1, z2), &m(x2, y1, z1)), &m(x1, y2, z1));
            let s = r.add(
                &r.mul(&self.gamma, &m(x2, y2, z2)),
                &r.mul(&self.beta, &m(x2, y1, z2)),
            );
            r.add(&s, &r.mul(&self.alpha, &a))
        };
        vec![first, second]
    }

    /// The canonical product as a general ternary algebra.
    pub fn to_algebra(&self) -> TernaryAlgebra<R> {
        TernaryAlgebra::from_fn(self.space(), "binary canonical", |x, y, z| {
            self.canonical_ternary(x, y, z)
        })
    }

    /// `R_{x,y}`, the matrix of `z ↦ ⟨xyz⟩`.
    pub fn spiration_r(&self, x: &[R::Elem], y: &[R::Elem]) -> Matrix2<R::Elem> {
        let r = &self.ring;
        let br = bracket(r, x, y);
        let d0 = r.add(
            &r.add(
                &r.mul(&self.alpha, &r.mul(&x[0], &y[0])),
                &r.mul(&self.beta, &r.mul(&x[0], &y[1])),
            ),
            &r.mul(&self.gamma, &r.mul(&x[1], &y[1])),
        );
        let d1 = r.add(
            &r.add(
                &r.mul(&self.alpha, &r.mul(&x[0], &y[0])),
                &r.mul(&self.gamma, &r.mul(&x[1], &y[1])),
            ),
            &r.mul(&self.beta, &r.mul(&x[1], &y[0])),
        );
        Matrix::from_rows(vec![
            vec![d0, r.mul(&self.gamma, &br)],
            vec![r.mul(&self.alpha, &r.neg(&br)), d1],
        ])
    }

    /// `S_{x,z}`, the matrix of `y ↦ ⟨xyz⟩`.
    pub fn spiflection_s(&self, x: &[R::Elem], z: &[R::Elem]) -> Matrix2<R::Elem> {
        let r = &self.ring;
        let (a, b, c) = (&self.alpha, &self.beta, &self.gamma);
        let x1z1 = r.mul(&x[0], &z[0]);
        let x2z2 = r.mul(&x[1], &z[1]);
        let cross = r.add(&r.mul(&x[0], &z[1]), &r.mul(&x[1], &z[0]));
        Matrix::from_rows(vec![
            vec![
                r.sub(&r.mul(a, &x1z1), &r.mul(c, &x2z2)),
                r.add(&r.mul(b, &x1z1), &r.mul(c, &cross)),
            ],
            vec![
                r.add(&r.mul(b, &x2z2), &r.mul(a, &cross)),
                r.sub(&r.mul(c, &x2z2), &r.mul(a, &x1z1)),
            ],
        ])
    }

    fn e(&self, i: usize) -> Vector<R::Elem> {
        linalg::basis_vec(&self.ring, 2, i)
    }

    /// `R_{ij} = R_{e_i,e_j}` with 1-based indices.
    pub fn r_basis(&self, i: usize, j: usize) -> Matrix2<R::Elem> {
        self.spiration_r(&self.e(i - 1), &self.e(j - 1))
    }

    /// `S_{ij} = S_{e_i,e_j}` with 1-based indices.
    pub fn s_basis(&self, i: usize, j: usize) -> Matrix2<R::Elem> {
        self.spiflection_s(&self.e(i - 1), &self.e(j - 1))
    }

    /// True when `I` and `R₁₂` are linearly dependent.
    pub fn generators_dependent(&self) -> bool {
        self.ring
            .annihilated(&[self.alpha.clone(), self.beta.clone(), self.gamma.clone()])
    }

    /// The relation `R₁₂² = βR₁₂ − αγ·I`, checked on the matrices.
    pub fn spiration_quotient(&self) -> Result<QuotientRelation<R::Elem>> {
        if self.generators_dependent() {
            return Err(Error::DependentGenerators("I, R12".into()));
        }
        let r = &self.ring;
        let x = self.r_basis(1, 2);
        let norm = r.mul(&self.alpha, &self.gamma);
        let rhs = x
            .scale(r, &self.beta)
            .sub(r, &Matrix::scalar(r, 2, &norm));
        assert_eq!(x.mul(r, &x), rhs, "quotient relation");
        Ok(QuotientRelation {
            trace: self.beta.clone(),
            norm,
        })
    }

    /// Basis products `⟨e_i e_j e_k⟩` in lexicographic index order.
    pub fn triple_table(&self) -> Vec<([usize; 3], Vector<R::Elem>)> {
        let mut out = Vec::new();
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    let v = self.canonical_ternary(&self.e(i), &self.e(j), &self.e(k));
                    out.push(([i + 1, j + 1, k + 1], v));
                }
            }
        }
        out
    }

    /// All 32 five-fold basis products with their three bracketings
    /// `⟨ab⟨cde⟩⟩`, `⟨a⟨dcb⟩e⟩`, `⟨⟨abc⟩de⟩`.
    pub fn fivefold_table(&self) -> Vec<FiveFold<R::Elem>> {
        let t = |x: &[R::Elem], y: &[R::Elem], z: &[R::Elem]| self.canonical_ternary(x, y, z);
        let mut out = Vec::new();
        for code in 0..32usize {
            let idx: [usize; 5] = std::array::from_fn(|p| (code >> (4 - p)) & 1);
            let [a, b, c, d, e] = idx.map(|i| self.e(i));
            out.push(FiveFold {
                indices: idx.map(|i| i + 1),
                bracketings: [
                    t(&a, &b, &t(&c, &d, &e)),
                    t(&a, &t(&d, &c, &b), &e),
                    t(&t(&a, &b, &c), &d, &e),
                ],
            });
        }
        out
    }

    /// Membership in the dihedral algebra `C^R + C^S` spanned by the basis
    /// spirations and spiflections.
    pub fn dihedral_contains(&self, m: &Matrix2<R::Elem>) -> bool
    where
        R: SpanMembership,
    {
        let mut gens = Vec::new();
        for i in 1..=2 {
            for j in 1..=2 {
                gens.push(self.r_basis(i, j).entries().to_vec());
                gens.push(self.s_basis(i, j).entries().to_vec());
            }
        }
        self.ring.in_span(&gens, m.entries())
    }

    /// Evaluates `q(b)S_{a,a} + q(a)S_{b,b} = b_q(a,b)S_{a,b}`; reported, not
    /// asserted, by the suite.
    pub fn s_relation_check(&self, a: &[R::Elem], b: &[R::Elem]) -> bool {
        let r = &self.ring;
        let sp = self.space();
        let lhs = self
            .spiflection_s(a, a)
            .scale(r, &sp.q(b))
            .add(r, &self.spiflection_s(b, b).scale(r, &sp.q(a)));
        lhs == self.spiflection_s(a, b).scale(r, &sp.bq(a, b))
    }
}

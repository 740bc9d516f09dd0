//! Ternary algebras over quadratic spaces: the container for every spherical
//! space, inner operators, homotopes, torsor products and spheres.

mod composition;
pub mod verify;

pub use composition::{BinaryAlgebra, BinaryIdentity};
pub use verify::{IdentityId, Strategy, Verdict, VerificationReport};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{self, Matrix, Vector};
use crate::quadratic::QuadraticSpace;
use crate::ring::Ring;

/// Left or right variant of a construction or identity family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

impl std::str::FromStr for Side {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "left" => Ok(Side::Left),
            "right" => Ok(Side::Right),
            _ => Err(Error::Parse(format!("side must be left or right, got `{s}`"))),
        }
    }
}

impl std::fmt::Display for Side {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
        })
    }
}

/// Which inner multiplication operator to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OperatorKind {
    /// `L_{a,b}z = ⟨abz⟩`
    L,
    /// `R_{a,b}x = ⟨xba⟩`
    R,
    /// `S_{a,b}y = ⟨ayb⟩`
    S,
}

#[derive(Debug, Clone)]
struct Term<E> {
    i: usize,
    j: usize,
    k: usize,
    l: usize,
    c: E,
}

/// A quadratic space with trilinear structure constants `⟨e_i e_j e_k⟩`.
#[derive(Debug, Clone)]
pub struct TernaryAlgebra<R: Ring> {
    space: QuadraticSpace<R>,
    c: Vec<Vector<R::Elem>>,
    terms: Vec<Term<R::Elem>>,
    label: String,
}

impl<R: Ring> PartialEq for TernaryAlgebra<R> {
    fn eq(&self, other: &Self) -> bool {
        self.space == other.space && self.c == other.c
    }
}

/// Outcome of the `V^×` nonemptiness check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnitPresence {
    Found,
    Absent,
    UnknownBeyondBox,
}

/// Search domain for spheres and unit checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Domain {
    Finite,
    Box(i64),
}

impl<R: Ring> TernaryAlgebra<R> {
    /// `c` lists `⟨e_i e_j e_k⟩` at index `(i·n + j)·n + k`.
    pub fn new(
        space: QuadraticSpace<R>,
        c: Vec<Vector<R::Elem>>,
        label: impl Into<String>,
    ) -> Result<Self> {
        let n = space.rank();
        if c.len() != n * n * n {
            return Err(Error::RankMismatch {
                expected: n * n * n,
                got: c.len(),
            });
        }
        if let Some(v) = c.iter().find(|v| v.len() != n) {
            return Err(Error::RankMismatch {
                expected: n,
                got: v.len(),
            });
        }
        let r = space.ring().clone();
        let mut terms = Vec::new();
        for (t, v) in c.iter().enumerate() {
            for (l, x) in v.iter().enumerate() {
                if !r.is_zero(x) {
                    terms.push(Term {
                        i: t / (n * n),
                        j: (t / n) % n,
                        k: t % n,
                        l,
                        c: x.clone(),
                    });
                }
            }
        }
        Ok(TernaryAlgebra {
            space,
            c,
            terms,
            label: label.into(),
        })
    }

    /// Structure constants read off a trilinear function on basis vectors.
    pub fn from_fn(
        space: QuadraticSpace<R>,
        label: impl Into<String>,
        f: impl Fn(&[R::Elem], &[R::Elem], &[R::Elem]) -> Vector<R::Elem>,
    ) -> Self {
        let n = space.rank();
        let basis = linalg::basis(space.ring(), n);
        let mut c = Vec::with_capacity(n * n * n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    c.push(f(&basis[i], &basis[j], &basis[k]));
                }
            }
        }
        Self::new(space, c, label).expect("from_fn produces consistent sizes")
    }

    pub fn space(&self) -> &QuadraticSpace<R> {
        &self.space
    }

    pub fn ring(&self) -> &R {
        self.space.ring()
    }

    pub fn rank(&self) -> usize {
        self.space.rank()
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn structure_constants(&self) -> &[Vector<R::Elem>] {
        &self.c
    }

    pub fn basis_product(&self, i: usize, j: usize, k: usize) -> &Vector<R::Elem> {
        let n = self.rank();
        &self.c[(i * n + j) * n + k]
    }

    pub fn q(&self, x: &[R::Elem]) -> R::Elem {
        self.space.q(x)
    }

    /// `⟨xyz⟩` without rank checks.
    pub fn tri(&self, x: &[R::Elem], y: &[R::Elem], z: &[R::Elem]) -> Vector<R::Elem> {
        let r = self.ring();
        let mut out = linalg::zero_vec(r, self.rank());
        for t in &self.terms {
            let (a, b, c) = (&x[t.i], &y[t.j], &z[t.k]);
            if r.is_zero(a) || r.is_zero(b) || r.is_zero(c) {
                continue;
            }
            let p = r.mul(&t.c, &r.mul(a, &r.mul(b, c)));
            out[t.l] = r.add(&out[t.l], &p);
        }
        out
    }

    pub fn triple(
        &self,
        x: &[R::Elem],
        y: &[R::Elem],
        z: &[R::Elem],
    ) -> Result<Vector<R::Elem>> {
        for v in [x, y, z] {
            self.space.check_rank(v)?;
        }
        Ok(self.tri(x, y, z))
    }

    /// The dual product `⟨xyz⟩' = ⟨zyx⟩`.
    pub fn reversed(&self) -> Self {
        Self::from_fn(self.space.clone(), format!("{} reversed", self.label), |x, y, z| {
            self.tri(z, y, x)
        })
    }

    pub fn inner_operator(
        &self,
        kind: OperatorKind,
        a: &[R::Elem],
        b: &[R::Elem],
    ) -> Matrix<R::Elem> {
        let n = self.rank();
        let basis = linalg::basis(self.ring(), n);
        Matrix::from_columns(n, |j| match kind {
            OperatorKind::L => self.tri(a, b, &basis[j]),
            OperatorKind::R => self.tri(&basis[j], b, a),
            OperatorKind::S => self.tri(a, &basis[j], b),
        })
    }

    pub fn l_op(&self, a: &[R::Elem], b: &[R::Elem]) -> Matrix<R::Elem> {
        self.inner_operator(OperatorKind::L, a, b)
    }

    pub fn r_op(&self, a: &[R::Elem], b: &[R::Elem]) -> Matrix<R::Elem> {
        self.inner_operator(OperatorKind::R, a, b)
    }

    pub fn s_op(&self, a: &[R::Elem], b: &[R::Elem]) -> Matrix<R::Elem> {
        self.inner_operator(OperatorKind::S, a, b)
    }

    /// The binary algebra `x·z = ⟨xez⟩/q(e)` with unit `e`.
    pub fn homotope(&self, e: &[R::Elem]) -> Result<BinaryAlgebra<R>> {
        self.space.check_rank(e)?;
        BinaryAlgebra::homotope_of(self, e)
    }

    /// `(xyz) = ⟨xyz⟩/q(y)`.
    pub fn torsor_product(
        &self,
        x: &[R::Elem],
        y: &[R::Elem],
        z: &[R::Elem],
    ) -> Result<Vector<R::Elem>> {
        let r = self.ring();
        let inv = r.invert(&self.q(y))?;
        Ok(linalg::scale(r, &inv, &self.triple(x, y, z)?))
    }

    /// All `x` with `q(x) = c` for an invertible level `c`.
    pub fn sphere_enumerate(&self, c: &R::Elem, domain: Domain) -> Result<Vec<Vector<R::Elem>>> {
        self.ring().invert(c)?;
        match domain {
            Domain::Finite => self.space.level_set_finite(c),
            Domain::Box(b) => Ok(self.space.level_set_box(c, b)),
        }
    }

    /// Whether `V^×` is nonempty within the search domain.
    pub fn unit_presence(&self, domain: Domain) -> UnitPresence {
        let r = self.ring();
        let n = self.rank();
        let candidates = match domain {
            Domain::Finite => match linalg::module_elements(r, n) {
                Some(all) => all,
                None => return UnitPresence::UnknownBeyondBox,
            },
            Domain::Box(b) => linalg::box_elements(r, n, b),
        };
        if candidates.iter().any(|x| self.space.is_invertible_vec(x)) {
            UnitPresence::Found
        } else if matches!(domain, Domain::Finite) {
            UnitPresence::Absent
        } else {
            UnitPresence::UnknownBeyondBox
        }
    }

    /// True when every basis triple drawn from `indices` stays in their span.
    pub fn coordinate_subspace_closed(&self, indices: &[usize]) -> bool {
        let r = self.ring();
        indices.iter().all(|&i| {
            indices.iter().all(|&j| {
                indices.iter().all(|&k| {
                    self.basis_product(i, j, k)
                        .iter()
                        .enumerate()
                        .all(|(l, x)| indices.contains(&l) || r.is_zero(x))
                })
            })
        })
    }

    pub fn verify(&self, id: IdentityId, strategy: &Strategy) -> Result<VerificationReport<R::Elem>> {
        verify::verify(self, id, strategy)
    }
}

#[cfg(test)]
mod tests;

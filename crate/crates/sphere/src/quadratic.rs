//! Quadratic spaces: form evaluation, polarization, Jordan maps, the three
//! reflection structures on `V^×` and root vectors.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{self, Vector};
use crate::ring::{Integers, Ring};

/// A free module `R^n` with `q(x) = Σ b[i][j] x_i x_j`.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadraticSpace<R: Ring> {
    ring: R,
    b: Vec<Vec<R::Elem>>,
}

/// Which product map of the reflection structure to apply.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ReflectionMode {
    /// `s_x(y) = b_q(y,x)/q(x)·x − y`
    S,
    /// `j_x(y) = q(x)/q(y)·y`
    J,
    /// `σ_x(y) = b_q(y,x)/q(y)·x − q(x)/q(y)·y`
    Sigma,
}

impl std::str::FromStr for ReflectionMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "s" => Ok(Self::S),
            "j" => Ok(Self::J),
            "sigma" => Ok(Self::Sigma),
            _ => Err(Error::Parse(format!("unknown reflection mode `{s}`"))),
        }
    }
}

impl<R: Ring> QuadraticSpace<R> {
    pub fn new(ring: R, b: Vec<Vec<R::Elem>>) -> Result<Self> {
        let n = b.len();
        if n == 0 {
            return Err(Error::RankMismatch { expected: 1, got: 0 });
        }
        if let Some(row) = b.iter().find(|row| row.len() != n) {
            return Err(Error::RankMismatch {
                expected: n,
                got: row.len(),
            });
        }
        Ok(QuadraticSpace { ring, b })
    }

    pub fn from_ints(ring: R, b: &[&[i64]]) -> Result<Self> {
        let rows = b.iter().map(|row| linalg::from_ints(&ring, row)).collect();
        Self::new(ring, rows)
    }

    /// The binary form `αx₁² + βx₁x₂ + γx₂²` stored upper triangular.
    pub fn binary(ring: R, alpha: R::Elem, beta: R::Elem, gamma: R::Elem) -> Self {
        let z = ring.zero();
        QuadraticSpace {
            b: vec![vec![alpha, beta], vec![z, gamma]],
            ring,
        }
    }

    /// `q = φ·ψ` for two covectors.
    pub fn product_of_covectors(ring: R, phi: &[R::Elem], psi: &[R::Elem]) -> Result<Self> {
        if phi.len() != psi.len() {
            return Err(Error::RankMismatch {
                expected: phi.len(),
                got: psi.len(),
            });
        }
        let b = phi
            .iter()
            .map(|p| psi.iter().map(|s| ring.mul(p, s)).collect())
            .collect();
        Self::new(ring, b)
    }

    /// Orthogonal sum `q₁ ⊕ λ·q₂`.
    pub fn direct_sum(&self, other: &Self, lambda: &R::Elem) -> Self {
        let r = &self.ring;
        let (n, m) = (self.rank(), other.rank());
        let mut b = vec![vec![r.zero(); n + m]; n + m];
        for i in 0..n {
            b[i][..n].clone_from_slice(&self.b[i]);
        }
        for i in 0..m {
            for j in 0..m {
                b[n + i][n + j] = r.mul(lambda, &other.b[i][j]);
            }
        }
        QuadraticSpace { ring: r.clone(), b }
    }

    /// `λ·q`.
    pub fn scaled(&self, lambda: &R::Elem) -> Self {
        let r = &self.ring;
        QuadraticSpace {
            ring: r.clone(),
            b: self.b.iter().map(|row| linalg::scale(r, lambda, row)).collect(),
        }
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.b.len()
    }

    pub fn coefficients(&self) -> &[Vec<R::Elem>] {
        &self.b
    }

    pub fn check_rank(&self, x: &[R::Elem]) -> Result<()> {
        if x.len() == self.rank() {
            Ok(())
        } else {
            Err(Error::RankMismatch {
                expected: self.rank(),
                got: x.len(),
            })
        }
    }

    /// `q(x)`, assuming `x` has the right rank.
    pub fn q(&self, x: &[R::Elem]) -> R::Elem {
        let r = &self.ring;
        let mut acc = r.zero();
        for (i, xi) in x.iter().enumerate() {
            if r.is_zero(xi) {
                continue;
            }
            let row = self.b[i]
                .iter()
                .zip(x)
                .fold(r.zero(), |s, (c, xj)| r.add(&s, &r.mul(c, xj)));
            acc = r.add(&acc, &r.mul(xi, &row));
        }
        acc
    }

    pub fn eval_q(&self, x: &[R::Elem]) -> Result<R::Elem> {
        self.check_rank(x)?;
        Ok(self.q(x))
    }

    /// `b_q(x,y) = q(x+y) − q(x) − q(y)`, always computed from `q`.
    pub fn bq(&self, x: &[R::Elem], y: &[R::Elem]) -> R::Elem {
        let r = &self.ring;
        let s = self.q(&linalg::add(r, x, y));
        r.sub(&r.sub(&s, &self.q(x)), &self.q(y))
    }

    pub fn polarize(&self, x: &[R::Elem], y: &[R::Elem]) -> Result<R::Elem> {
        self.check_rank(x)?;
        self.check_rank(y)?;
        Ok(self.bq(x, y))
    }

    /// Gram matrix of `b_q` on the standard basis.
    pub fn gram(&self) -> Vec<Vec<R::Elem>> {
        let r = &self.ring;
        let n = self.rank();
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| r.add(&self.b[i][j], &self.b[j][i]))
                    .collect()
            })
            .collect()
    }

    pub fn is_invertible_vec(&self, x: &[R::Elem]) -> bool {
        self.ring.is_invertible(&self.q(x))
    }

    /// `Q_x y = b_q(x,y)x − q(x)y`.
    pub fn jordan_q(&self, x: &[R::Elem], y: &[R::Elem]) -> Result<Vector<R::Elem>> {
        self.check_rank(x)?;
        self.check_rank(y)?;
        let r = &self.ring;
        Ok(linalg::sub(
            r,
            &linalg::scale(r, &self.bq(x, y), x),
            &linalg::scale(r, &self.q(x), y),
        ))
    }

    /// `D_{x,z}y = b_q(x,y)z + b_q(y,z)x − b_q(x,z)y`.
    pub fn jordan_d(
        &self,
        x: &[R::Elem],
        z: &[R::Elem],
        y: &[R::Elem],
    ) -> Result<Vector<R::Elem>> {
        for v in [x, z, y] {
            self.check_rank(v)?;
        }
        let r = &self.ring;
        let mut out = linalg::scale(r, &self.bq(x, y), z);
        linalg::axpy(r, &mut out, &self.bq(y, z), x);
        linalg::axpy(r, &mut out, &r.neg(&self.bq(x, z)), y);
        Ok(out)
    }

    pub fn reflection(
        &self,
        mode: ReflectionMode,
        x: &[R::Elem],
        y: &[R::Elem],
    ) -> Result<Vector<R::Elem>> {
        self.check_rank(x)?;
        self.check_rank(y)?;
        let r = &self.ring;
        match mode {
            ReflectionMode::S => {
                let inv = r.invert(&self.q(x))?;
                let k = r.mul(&self.bq(y, x), &inv);
                Ok(linalg::sub(r, &linalg::scale(r, &k, x), y))
            }
            ReflectionMode::J => {
                let qx = self.q(x);
                r.invert(&qx)?;
                let inv = r.invert(&self.q(y))?;
                Ok(linalg::scale(r, &r.mul(&qx, &inv), y))
            }
            ReflectionMode::Sigma => {
                let qx = self.q(x);
                r.invert(&qx)?;
                let inv = r.invert(&self.q(y))?;
                let a = r.mul(&self.bq(y, x), &inv);
                let c = r.mul(&qx, &inv);
                Ok(linalg::sub(
                    r,
                    &linalg::scale(r, &a, x),
                    &linalg::scale(r, &c, y),
                ))
            }
        }
    }

    /// All `x` with `q(x) = c` in the finite module.
    pub fn level_set_finite(&self, c: &R::Elem) -> Result<Vec<Vector<R::Elem>>> {
        let all = linalg::module_elements(&self.ring, self.rank()).ok_or_else(|| {
            Error::InfeasibleStrategy("level set over an infinite ring needs a box".into())
        })?;
        Ok(all.into_iter().filter(|x| self.q(x) == *c).collect())
    }

    /// All `x` with `q(x) = c` and integer coordinates in `[-bound, bound]`.
    pub fn level_set_box(&self, c: &R::Elem, bound: i64) -> Vec<Vector<R::Elem>> {
        linalg::box_elements(&self.ring, self.rank(), bound)
            .into_iter()
            .filter(|x| self.q(x) == *c)
            .collect()
    }
}

/// A root vector together with its coefficients `n_{y,e_i} = b_q(e_i,y)/q(y)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootVector {
    pub vector: Vector<BigInt>,
    pub coefficients: Vec<BigInt>,
}

impl QuadraticSpace<Integers> {
    /// `n_{y,x} = b_q(x,y)/q(y)` when `y` is a root vector.
    pub fn root_coefficient(&self, y: &[BigInt], x: &[BigInt]) -> Option<BigInt> {
        let qy = self.q(y);
        if qy == BigInt::from(0) {
            return None;
        }
        Integers.div_exact(&self.bq(x, y), &qy)
    }

    /// All root vectors with coordinates in `[-bound, bound]`: `q(y) ≠ 0` and
    /// `q(y)` divides `b_q(e_i, y)` for every basis vector.
    pub fn root_vectors(&self, bound: i64) -> Vec<RootVector> {
        let n = self.rank();
        let basis = linalg::basis(&Integers, n);
        linalg::box_elements(&Integers, n, bound)
            .into_iter()
            .filter_map(|y| {
                let coefficients = basis
                    .iter()
                    .map(|e| self.root_coefficient(&y, e))
                    .collect::<Option<Vec<_>>>()?;
                Some(RootVector {
                    vector: y,
                    coefficients,
                })
            })
            .collect()
    }
}

/// Root vectors for a space over an arbitrary ring; only ℤ is supported.
pub fn root_vectors<R: Ring>(space: &QuadraticSpace<R>, bound: i64) -> Result<Vec<RootVector>> {
    if !matches!(space.ring().spec(), crate::ring::RingSpec::Integers) {
        return Err(Error::UnsupportedRing(space.ring().spec().to_string()));
    }
    let rows = space
        .coefficients()
        .iter()
        .map(|row| {
            row.iter()
                .map(|c| Integers.parse_elem(&space.ring().format_elem(c)))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(QuadraticSpace::new(Integers, rows)?.root_vectors(bound))
}

//! Vectors and square matrices over a [`Ring`], plus module enumeration.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::ring::{Integers, Rationals, Ring, Zmod};

pub type Vector<E> = Vec<E>;

pub fn zero_vec<R: Ring>(r: &R, n: usize) -> Vector<R::Elem> {
    vec![r.zero(); n]
}

pub fn basis_vec<R: Ring>(r: &R, n: usize, i: usize) -> Vector<R::Elem> {
    let mut v = zero_vec(r, n);
    v[i] = r.one();
    v
}

pub fn basis<R: Ring>(r: &R, n: usize) -> Vec<Vector<R::Elem>> {
    (0..n).map(|i| basis_vec(r, n, i)).collect()
}

pub fn from_ints<R: Ring>(r: &R, xs: &[i64]) -> Vector<R::Elem> {
    xs.iter().map(|&x| r.from_i64(x)).collect()
}

pub fn add<R: Ring>(r: &R, a: &[R::Elem], b: &[R::Elem]) -> Vector<R::Elem> {
    a.iter().zip(b).map(|(x, y)| r.add(x, y)).collect()
}

pub fn sub<R: Ring>(r: &R, a: &[R::Elem], b: &[R::Elem]) -> Vector<R::Elem> {
    a.iter().zip(b).map(|(x, y)| r.sub(x, y)).collect()
}

pub fn neg<R: Ring>(r: &R, a: &[R::Elem]) -> Vector<R::Elem> {
    a.iter().map(|x| r.neg(x)).collect()
}

pub fn scale<R: Ring>(r: &R, k: &R::Elem, a: &[R::Elem]) -> Vector<R::Elem> {
    a.iter().map(|x| r.mul(k, x)).collect()
}

/// `acc += k * a`.
pub fn axpy<R: Ring>(r: &R, acc: &mut [R::Elem], k: &R::Elem, a: &[R::Elem]) {
    for (s, x) in acc.iter_mut().zip(a) {
        *s = r.add(s, &r.mul(k, x));
    }
}

pub fn is_zero_vec<R: Ring>(r: &R, a: &[R::Elem]) -> bool {
    a.iter().all(|x| r.is_zero(x))
}

pub fn concat<E: Clone>(a: &[E], b: &[E]) -> Vector<E> {
    a.iter().chain(b).cloned().collect()
}

pub fn format_vec<R: Ring>(r: &R, a: &[R::Elem]) -> String {
    let parts: Vec<String> = a.iter().map(|x| r.format_elem(x)).collect();
    format!("({})", parts.join(","))
}

/// Square matrix stored row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix<E> {
    n: usize,
    data: Vec<E>,
}

impl<E: Clone> Matrix<E> {
    pub fn from_rows(rows: Vec<Vec<E>>) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        Matrix {
            n,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Builds a matrix whose `j`-th column is `col(j)`.
    pub fn from_columns(n: usize, mut col: impl FnMut(usize) -> Vec<E>) -> Self {
        let cols: Vec<Vec<E>> = (0..n).map(&mut col).collect();
        let data = (0..n)
            .flat_map(|i| cols.iter().map(move |c| c[i].clone()))
            .collect();
        Matrix { n, data }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &E {
        &self.data[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<E>> {
        self.data.chunks(self.n).map(<[E]>::to_vec).collect()
    }

    pub fn entries(&self) -> &[E] {
        &self.data
    }
}

impl<E: Clone> Matrix<E> {
    pub fn identity<R: Ring<Elem = E>>(r: &R, n: usize) -> Self {
        Self::scalar(r, n, &r.one())
    }

    pub fn scalar<R: Ring<Elem = E>>(r: &R, n: usize, k: &E) -> Self {
        let data = (0..n * n)
            .map(|t| if t / n == t % n { k.clone() } else { r.zero() })
            .collect();
        Matrix { n, data }
    }

    pub fn zero<R: Ring<Elem = E>>(r: &R, n: usize) -> Self {
        Matrix {
            n,
            data: vec![r.zero(); n * n],
        }
    }

    pub fn mul<R: Ring<Elem = E>>(&self, r: &R, other: &Self) -> Self {
        let n = self.n;
        let mut data = vec![r.zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = &self.data[i * n + k];
                if r.is_zero(a) {
                    continue;
                }
                for j in 0..n {
                    let t = &mut data[i * n + j];
                    *t = r.add(t, &r.mul(a, &other.data[k * n + j]));
                }
            }
        }
        Matrix { n, data }
    }

    pub fn add<R: Ring<Elem = E>>(&self, r: &R, other: &Self) -> Self {
        Matrix {
            n: self.n,
            data: add(r, &self.data, &other.data),
        }
    }

    pub fn sub<R: Ring<Elem = E>>(&self, r: &R, other: &Self) -> Self {
        Matrix {
            n: self.n,
            data: sub(r, &self.data, &other.data),
        }
    }

    pub fn scale<R: Ring<Elem = E>>(&self, r: &R, k: &E) -> Self {
        Matrix {
            n: self.n,
            data: scale(r, k, &self.data),
        }
    }

    pub fn apply<R: Ring<Elem = E>>(&self, r: &R, v: &[E]) -> Vec<E> {
        self.data
            .chunks(self.n)
            .map(|row| {
                row.iter()
                    .zip(v)
                    .fold(r.zero(), |acc, (a, x)| r.add(&acc, &r.mul(a, x)))
            })
            .collect()
    }

    pub fn trace<R: Ring<Elem = E>>(&self, r: &R) -> E {
        (0..self.n).fold(r.zero(), |acc, i| r.add(&acc, self.get(i, i)))
    }

    /// Determinant by cofactor expansion; intended for small matrices.
    pub fn det<R: Ring<Elem = E>>(&self, r: &R) -> E {
        let idx: Vec<usize> = (0..self.n).collect();
        det_minor(r, self, 0, &idx)
    }

    /// Adjugate of a 2×2 matrix, `tr(X)·I − X`.
    pub fn adjugate<R: Ring<Elem = E>>(&self, r: &R) -> Self {
        assert_eq!(self.n, 2, "adjugate is implemented for 2x2 matrices");
        Self::scalar(r, 2, &self.trace(r)).sub(r, self)
    }

    pub fn transpose(&self) -> Self {
        let n = self.n;
        Matrix {
            n,
            data: (0..n * n)
                .map(|t| self.data[(t % n) * n + t / n].clone())
                .collect(),
        }
    }
}

fn det_minor<R: Ring>(r: &R, m: &Matrix<R::Elem>, row: usize, cols: &[usize]) -> R::Elem {
    if cols.is_empty() {
        return r.one();
    }
    let mut acc = r.zero();
    for (pos, &c) in cols.iter().enumerate() {
        let a = m.get(row, c);
        if r.is_zero(a) {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let term = r.mul(a, &det_minor(r, m, row + 1, &rest));
        acc = if pos % 2 == 0 {
            r.add(&acc, &term)
        } else {
            r.sub(&acc, &term)
        };
    }
    acc
}

/// Every vector of `R^n` for a finite ring, in lexicographic order.
pub fn module_elements<R: Ring>(r: &R, n: usize) -> Option<Vec<Vector<R::Elem>>> {
    let elems = r.elements()?;
    let k = elems.len();
    let total = k.checked_pow(n as u32)?;
    Some(
        (0..total)
            .map(|mut t| {
                let mut v = vec![r.zero(); n];
                for slot in v.iter_mut().rev() {
                    *slot = elems[t % k].clone();
                    t /= k;
                }
                v
            })
            .collect(),
    )
}

/// Integer points of `[-bound, bound]^n`, in lexicographic order.
pub fn box_elements<R: Ring>(r: &R, n: usize, bound: i64) -> Vec<Vector<R::Elem>> {
    let side = (2 * bound + 1) as usize;
    let total = side.pow(n as u32);
    (0..total)
        .map(|mut t| {
            let mut v = vec![r.zero(); n];
            for slot in v.iter_mut().rev() {
                *slot = r.from_i64((t % side) as i64 - bound);
                t /= side;
            }
            v
        })
        .collect()
}

/// The vectors `e_i` and `e_i + e_j` (`i < j`). A homogeneous quadratic map
/// vanishes identically iff it vanishes on this set.
pub fn polarization_set<R: Ring>(r: &R, n: usize) -> Vec<Vector<R::Elem>> {
    let b = basis(r, n);
    let mut out = b.clone();
    for i in 0..n {
        for j in i + 1..n {
            out.push(add(r, &b[i], &b[j]));
        }
    }
    out
}

/// The vectors `e_i`, `e_i ± e_j` (`i < j`) and `e_i + e_j + e_k`
/// (`i < j < k`). When 2 is cancellable in the ring, a homogeneous cubic map
/// vanishes identically iff it vanishes on this set.
pub fn cubic_polarization_set<R: Ring>(r: &R, n: usize) -> Vec<Vector<R::Elem>> {
    let b = basis(r, n);
    let mut out = b.clone();
    for i in 0..n {
        for j in i + 1..n {
            out.push(add(r, &b[i], &b[j]));
            out.push(sub(r, &b[i], &b[j]));
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                out.push(add(r, &add(r, &b[i], &b[j]), &b[k]));
            }
        }
    }
    out
}

/// Submodule membership for the ring types shipped with the crate.
pub trait SpanMembership: Ring {
    /// True iff `v` is an `R`-linear combination of `gens`.
    fn in_span(&self, gens: &[Vector<Self::Elem>], v: &[Self::Elem]) -> bool;
}

impl SpanMembership for Zmod {
    fn in_span(&self, gens: &[Vector<u64>], v: &[u64]) -> bool {
        let mut seen = std::collections::HashSet::new();
        let mut frontier = vec![zero_vec(self, v.len())];
        seen.insert(frontier[0].clone());
        while let Some(cur) = frontier.pop() {
            if cur == v {
                return true;
            }
            for g in gens {
                let next = add(self, &cur, g);
                if seen.insert(next.clone()) {
                    frontier.push(next);
                }
            }
        }
        false
    }
}

impl SpanMembership for Rationals {
    fn in_span(&self, gens: &[Vector<Self::Elem>], v: &[Self::Elem]) -> bool {
        let mut rows: Vec<Vector<Self::Elem>> = gens.to_vec();
        let rank_without = rational_rank(&mut rows);
        rows = gens.to_vec();
        rows.push(v.to_vec());
        rational_rank(&mut rows) == rank_without
    }
}

fn rational_rank(rows: &mut [Vector<num_rational::BigRational>]) -> usize {
    let Some(width) = rows.first().map(Vec::len) else {
        return 0;
    };
    let mut rank = 0;
    for col in 0..width {
        let Some(p) = (rank..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank][col].clone();
        for i in 0..rows.len() {
            if i != rank && !rows[i][col].is_zero() {
                let f = &rows[i][col] / &pivot;
                let pr = rows[rank].clone();
                for (x, y) in rows[i].iter_mut().zip(&pr) {
                    *x -= &f * y;
                }
            }
        }
        rank += 1;
    }
    rank
}

impl SpanMembership for Integers {
    fn in_span(&self, gens: &[Vector<BigInt>], v: &[BigInt]) -> bool {
        let mut rows = hermite_rows(gens.to_vec());
        let mut target = v.to_vec();
        let width = v.len();
        rows.retain(|r| r.iter().any(|x| !x.is_zero()));
        for row in &rows {
            let Some(col) = (0..width).find(|&c| !row[c].is_zero()) else {
                continue;
            };
            let (q, rem) = target[col].div_rem(&row[col]);
            if !rem.is_zero() {
                return false;
            }
            for (t, x) in target.iter_mut().zip(row) {
                *t -= &q * x;
            }
        }
        target.iter().all(Zero::is_zero)
    }
}

/// Row echelon form over ℤ by repeated Euclidean steps.
fn hermite_rows(mut rows: Vec<Vector<BigInt>>) -> Vec<Vector<BigInt>> {
    let Some(width) = rows.first().map(Vec::len) else {
        return rows;
    };
    let mut rank = 0;
    for col in 0..width {
        loop {
            let nonzero: Vec<usize> = (rank..rows.len())
                .filter(|&i| !rows[i][col].is_zero())
                .collect();
            let Some(&p) = nonzero.iter().min_by_key(|&&i| rows[i][col].abs()) else {
                break;
            };
            rows.swap(rank, p);
            let mut done = true;
            for i in rank + 1..rows.len() {
                if rows[i][col].is_zero() {
                    continue;
                }
                let q = rows[i][col].div_floor(&rows[rank][col]);
                let pr = rows[rank].clone();
                for (x, y) in rows[i].iter_mut().zip(&pr) {
                    *x -= &q * y;
                }
                if !rows[i][col].is_zero() {
                    done = false;
                }
            }
            if done {
                rank += 1;
                break;
            }
        }
    }
    rows
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn module_enumeration_order() {
        let r = Zmod::new(3).unwrap();
        let all = module_elements(&r, 2).unwrap();
        assert_eq!(all.len(), 9);
        assert_eq!(all[0], vec![0, 0]);
        assert_eq!(all[1], vec![0, 1]);
        assert_eq!(all[8], vec![2, 2]);
        assert_eq!(box_elements(&Integers, 2, 1).len(), 9);
    }

    #[test]
    fn cubic_polarization_recovers_coefficients() {
        let r = Zmod::new(3).unwrap();
        assert_eq!(cubic_polarization_set(&r, 4).len(), 4 + 12 + 4);
        // x₀²x₁ − x₀x₁² vanishes on F₃ at (1,1) but not at (1,−1).
        let f = |v: &Vec<u64>| r.sub(&r.mul(&r.mul(&v[0], &v[0]), &v[1]), &r.mul(&v[0], &r.mul(&v[1], &v[1])));
        assert!(cubic_polarization_set(&r, 2).iter().any(|v| f(v) != 0));
    }

    #[test]
    fn polarization_set_size() {
        let r = Zmod::new(5).unwrap();
        assert_eq!(polarization_set(&r, 4).len(), 10);
    }

    #[test]
    fn determinant_and_adjugate() {
        let r = Integers;
        let m = Matrix::from_rows(vec![
            from_ints(&r, &[2, 1, 0]),
            from_ints(&r, &[1, 3, 1]),
            from_ints(&r, &[0, 1, 4]),
        ]);
        assert_eq!(m.det(&r), BigInt::from(18));
        let a = Matrix::from_rows(vec![from_ints(&r, &[1, 2]), from_ints(&r, &[3, 4])]);
        let prod = a.mul(&r, &a.adjugate(&r));
        assert_eq!(prod, Matrix::scalar(&r, 2, &a.det(&r)));
    }

    #[test]
    fn spans() {
        let r = Integers;
        let gens = vec![from_ints(&r, &[2, 0]), from_ints(&r, &[0, 3])];
        assert!(r.in_span(&gens, &from_ints(&r, &[4, -3])));
        assert!(!r.in_span(&gens, &from_ints(&r, &[1, 0])));
        let gens = vec![from_ints(&r, &[4, 6]), from_ints(&r, &[6, 9])];
        assert!(r.in_span(&gens, &from_ints(&r, &[2, 3])));
        let q = Rationals;
        let gens = vec![from_ints(&q, &[2, 0])];
        assert!(q.in_span(&gens, &from_ints(&q, &[1, 0])));
        assert!(!q.in_span(&gens, &from_ints(&q, &[1, 1])));
        let z = Zmod::new(6).unwrap();
        let gens = vec![vec![2u64, 0]];
        assert!(z.in_span(&gens, &[4, 0]));
        assert!(!z.in_span(&gens, &[3, 0]));
    }

    #[test]
    fn columns_layout() {
        let r = Integers;
        let m = Matrix::from_columns(2, |j| from_ints(&r, &[j as i64, 10 + j as i64]));
        assert_eq!(m.get(0, 1), &BigInt::from(1));
        assert_eq!(m.get(1, 0), &BigInt::from(10));
        assert_eq!(m.apply(&r, &from_ints(&r, &[1, 0])), from_ints(&r, &[0, 10]));
    }
}

//! Finite binary and ternary magmas: the loop hierarchy, half-torsors,
//! ternary Moufang loops, autotopies and triality.

mod autotopy;
mod catalog;
mod properties;
mod sphere;

pub use autotopy::{autotopy_check, hexad, triality_orbit, Autotopy};
pub use catalog::{
    cyclic, dicyclic, dihedral, direct_product, find_isomorphism, identify, order_profile,
    quaternion8, small_group,
};
pub use properties::{check_property, LoopPropertyId};
pub use sphere::{max_table, sphere_loop, unit_sphere_group, vector_label, DEFAULT_MAX_TABLE};

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Ternary tables above this size are evaluated on demand.
pub const DENSE_TERNARY_LIMIT: usize = 16;

type LazyProduct = Arc<dyn Fn(usize, usize, usize) -> usize + Send + Sync>;

#[derive(Clone)]
enum Table {
    Dense(Arc<Vec<usize>>),
    Lazy(LazyProduct),
}

/// A finite set with a binary or ternary product on element indices.
#[derive(Clone)]
pub struct FiniteMagma {
    labels: Vec<String>,
    arity: usize,
    table: Table,
}

impl fmt::Debug for FiniteMagma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteMagma")
            .field("size", &self.size())
            .field("arity", &self.arity)
            .field("lazy", &matches!(self.table, Table::Lazy(_)))
            .finish()
    }
}

impl PartialEq for FiniteMagma {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels
            && self.arity == other.arity
            && self.all_products() == other.all_products()
    }
}

/// Which half-torsor a binary inverse loop induces.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LoopSide {
    /// `(xyz) = x(y⁻¹z)`
    Left,
    /// `(xyz) = (xy⁻¹)z`
    Right,
}

impl std::str::FromStr for LoopSide {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "left" => Ok(LoopSide::Left),
            "right" => Ok(LoopSide::Right),
            _ => Err(Error::Parse(format!("unknown side `{s}`"))),
        }
    }
}

fn check_labels(labels: &[String]) -> Result<()> {
    let mut seen = HashMap::new();
    for (i, l) in labels.iter().enumerate() {
        if l.is_empty() || l.contains(char::is_whitespace) || l.contains(',') {
            return Err(Error::Parse(format!("invalid element label `{l}`")));
        }
        if seen.insert(l.as_str(), i).is_some() {
            return Err(Error::Parse(format!("duplicate element label `{l}`")));
        }
    }
    Ok(())
}

impl FiniteMagma {
    /// `table[x][y]` is the index of `xy`.
    pub fn binary(labels: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self> {
        check_labels(&labels)?;
        let k = labels.len();
        if table.len() != k || table.iter().any(|row| row.len() != k) {
            return Err(Error::Parse(format!("binary table must be {k}×{k}")));
        }
        let flat: Vec<usize> = table.into_iter().flatten().collect();
        if flat.iter().any(|&v| v >= k) {
            return Err(Error::Parse("table entry out of range".into()));
        }
        Ok(FiniteMagma {
            labels,
            arity: 2,
            table: Table::Dense(Arc::new(flat)),
        })
    }

    /// `table[(x·k + y)·k + z]` is the index of `(xyz)`.
    pub fn ternary(labels: Vec<String>, table: Vec<usize>) -> Result<Self> {
        check_labels(&labels)?;
        let k = labels.len();
        if table.len() != k * k * k || table.iter().any(|&v| v >= k) {
            return Err(Error::Parse(format!("ternary table must have {} entries in range", k * k * k)));
        }
        Ok(FiniteMagma {
            labels,
            arity: 3,
            table: Table::Dense(Arc::new(table)),
        })
    }

    pub fn binary_from_fn(labels: Vec<String>, f: impl Fn(usize, usize) -> usize) -> Result<Self> {
        let k = labels.len();
        let table = (0..k).map(|x| (0..k).map(|y| f(x, y)).collect()).collect();
        Self::binary(labels, table)
    }

    /// Materializes small tables; larger ones keep `f` and evaluate on demand.
    pub fn ternary_from_fn(
        labels: Vec<String>,
        f: impl Fn(usize, usize, usize) -> usize + Send + Sync + 'static,
    ) -> Result<Self> {
        let k = labels.len();
        if k <= DENSE_TERNARY_LIMIT {
            let mut table = Vec::with_capacity(k * k * k);
            for x in 0..k {
                for y in 0..k {
                    for z in 0..k {
                        table.push(f(x, y, z));
                    }
                }
            }
            return Self::ternary(labels, table);
        }
        check_labels(&labels)?;
        Ok(FiniteMagma {
            labels,
            arity: 3,
            table: Table::Lazy(Arc::new(f)),
        })
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_lazy(&self) -> bool {
        matches!(self.table, Table::Lazy(_))
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        check_labels(&labels)?;
        if labels.len() != self.size() {
            return Err(Error::RankMismatch {
                expected: self.size(),
                got: labels.len(),
            });
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn expect_arity(&self, arity: usize) -> Result<()> {
        if self.arity != arity {
            return Err(Error::ArityMismatch {
                expected: arity,
                got: self.arity,
            });
        }
        Ok(())
    }

    /// Binary product; panics on a ternary magma.
    pub fn mul(&self, x: usize, y: usize) -> usize {
        assert_eq!(self.arity, 2, "binary product on a ternary magma");
        match &self.table {
            Table::Dense(t) => t[x * self.size() + y],
            Table::Lazy(_) => unreachable!("binary tables are dense"),
        }
    }

    /// Ternary product; panics on a binary magma.
    pub fn tri(&self, x: usize, y: usize, z: usize) -> usize {
        assert_eq!(self.arity, 3, "ternary product on a binary magma");
        let k = self.size();
        match &self.table {
            Table::Dense(t) => t[(x * k + y) * k + z],
            Table::Lazy(f) => f(x, y, z),
        }
    }

    /// Applies the product to `args.len() == arity` indices.
    pub fn apply(&self, args: &[usize]) -> usize {
        match args {
            [x, y] => self.mul(*x, *y),
            [x, y, z] => self.tri(*x, *y, *z),
            _ => panic!("arity {} product applied to {} arguments", self.arity, args.len()),
        }
    }

    /// Every product in lexicographic argument order.
    pub fn all_products(&self) -> Vec<usize> {
        let k = self.size();
        let total = k.pow(self.arity as u32);
        (0..total)
            .into_par_iter()
            .map(|t| self.apply(&decode(t, k, self.arity)))
            .collect()
    }

    /// The two-sided unit of a binary magma.
    pub fn unit(&self) -> Option<usize> {
        if self.arity != 2 {
            return None;
        }
        (0..self.size()).find(|&e| (0..self.size()).all(|x| self.mul(e, x) == x && self.mul(x, e) == x))
    }

    /// The element `y` with `xy = e = yx`.
    pub fn inverse(&self, x: usize) -> Option<usize> {
        let e = self.unit()?;
        (0..self.size()).find(|&y| self.mul(x, y) == e && self.mul(y, x) == e)
    }

    /// The inversion map of a binary inverse loop.
    pub fn inversion(&self) -> Result<Vec<usize>> {
        self.expect_arity(2)?;
        (0..self.size())
            .map(|x| {
                self.inverse(x)
                    .ok_or_else(|| Error::NotInverseLoop(format!("{} has no inverse", self.label(x))))
            })
            .collect()
    }

    /// `xz = (xyz)`.
    pub fn homotope_at(&self, y: usize) -> Result<FiniteMagma> {
        self.expect_arity(3)?;
        FiniteMagma::binary_from_fn(self.labels.clone(), |x, z| self.tri(x, y, z))
    }

    /// `x(y⁻¹z)` or `(xy⁻¹)z` on a binary inverse loop.
    pub fn ternary_from_inverse_loop(&self, side: LoopSide) -> Result<FiniteMagma> {
        self.expect_arity(2)?;
        let report = check_property(self, LoopPropertyId::InverseLoop)?;
        if !report.holds() {
            return Err(Error::NotInverseLoop(format!("{:?}", report.witness)));
        }
        let inv = self.inversion()?;
        let k = self.size();
        let mut table = Vec::with_capacity(k * k * k);
        for x in 0..k {
            for y in 0..k {
                for z in 0..k {
                    table.push(match side {
                        LoopSide::Left => self.mul(x, self.mul(inv[y], z)),
                        LoopSide::Right => self.mul(self.mul(x, inv[y]), z),
                    });
                }
            }
        }
        FiniteMagma::ternary(self.labels.clone(), table)
    }

    /// `x ↦ ax`.
    pub fn left_mult(&self, a: usize) -> Vec<usize> {
        (0..self.size()).map(|x| self.mul(a, x)).collect()
    }

    /// `x ↦ xa`.
    pub fn right_mult(&self, a: usize) -> Vec<usize> {
        (0..self.size()).map(|x| self.mul(x, a)).collect()
    }

    /// `B_a = L_a ∘ R_a`.
    pub fn bimult(&self, a: usize) -> Vec<usize> {
        compose(&self.left_mult(a), &self.right_mult(a))
    }

    /// `L_{x,y}z = (xyz)`.
    pub fn l_op(&self, x: usize, y: usize) -> Vec<usize> {
        (0..self.size()).map(|z| self.tri(x, y, z)).collect()
    }

    /// `R_{z,y}x = (xyz)`.
    pub fn r_op(&self, z: usize, y: usize) -> Vec<usize> {
        (0..self.size()).map(|x| self.tri(x, y, z)).collect()
    }

    /// `S_{x,z}y = (xyz)`.
    pub fn s_op(&self, x: usize, z: usize) -> Vec<usize> {
        (0..self.size()).map(|y| self.tri(x, y, z)).collect()
    }

    /// `B_{a,b} = L_{a,b} ∘ R_{a,b}`.
    pub fn b_op(&self, a: usize, b: usize) -> Vec<usize> {
        compose(&self.l_op(a, b), &self.r_op(a, b))
    }
}

/// `f ∘ g`.
pub fn compose(f: &[usize], g: &[usize]) -> Vec<usize> {
    g.iter().map(|&x| f[x]).collect()
}

pub(crate) fn decode(mut t: usize, k: usize, n: usize) -> Vec<usize> {
    let mut out = vec![0; n];
    for slot in out.iter_mut().rev() {
        *slot = t % k;
        t /= k;
    }
    out
}

/// First tuple in lexicographic order where `check` fails, and the number of
/// tuples scanned.
pub(crate) fn first_failing_tuple<F>(k: usize, n: usize, check: F) -> Result<(Option<Vec<usize>>, u64)>
where
    F: Fn(&[usize]) -> bool + Sync,
{
    let total = (k as u128).pow(n as u32);
    if total > crate::spherical::verify::MAX_TUPLES {
        return Err(Error::InfeasibleStrategy(format!(
            "{total} tuples exceed the exhaustive limit"
        )));
    }
    let hit = (0..total as usize)
        .into_par_iter()
        .find_first(|&t| !check(&decode(t, k, n)));
    Ok((hit.map(|t| decode(t, k, n)), total as u64))
}

#[cfg(test)]
mod tests;

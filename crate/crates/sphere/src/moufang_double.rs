//! Moufang doubles of finite groups with central involution, dihedral and
//! dicyclic loops, the ternary double table and doubling chains.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::loops::{self, check_property, FiniteMagma, LoopPropertyId};

/// A binary loop with unit and an involution `♯` with `(xy)♯ = y♯x♯`.
///
/// Seeds are groups; later chain stages may be non-associative Moufang loops.
#[derive(Debug, Clone, PartialEq)]
pub struct FiniteGroup {
    magma: FiniteMagma,
    unit: usize,
    involution: Vec<usize>,
    minus: Option<usize>,
}

/// Which doubled product to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Convention {
    /// `x₀•y₁ = (yx)₁`, `x₁•y₀ = (xy♯)₁`, `x₁•y₁ = με(y♯x)₀`.
    Bullet,
    /// `x₀•′y₁ = (x♯y)₁`, `x₁•′y₀ = (yx)₁`, `x₁•′y₁ = με(yx♯)₀`.
    BulletPrime,
}

impl FromStr for Convention {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "bullet" => Ok(Convention::Bullet),
            "bullet-prime" => Ok(Convention::BulletPrime),
            _ => Err(Error::Parse(format!("unknown convention `{s}`"))),
        }
    }
}

impl FiniteGroup {
    /// `minus` is the element written `−1` on the command line.
    pub fn new(magma: FiniteMagma, involution: Vec<usize>, minus: Option<usize>) -> Result<Self> {
        magma.expect_arity(2)?;
        let unit = magma
            .unit()
            .ok_or_else(|| Error::NotInverseLoop("no two-sided unit".into()))?;
        let k = magma.size();
        if involution.len() != k || involution.iter().any(|&x| x >= k) {
            return Err(Error::InvolutionNotAntiAutomorphism("wrong length or range".into()));
        }
        if let Some(x) = (0..k).find(|&x| involution[involution[x]] != x) {
            return Err(Error::InvolutionNotAntiAutomorphism(format!(
                "{} is not of order 2",
                magma.label(x)
            )));
        }
        for x in 0..k {
            for y in 0..k {
                if involution[magma.mul(x, y)] != magma.mul(involution[y], involution[x]) {
                    return Err(Error::InvolutionNotAntiAutomorphism(format!(
                        "({}{})♯ ≠ {}♯{}♯",
                        magma.label(x),
                        magma.label(y),
                        magma.label(y),
                        magma.label(x)
                    )));
                }
            }
        }
        if minus.is_some_and(|m| m >= k) {
            return Err(Error::InvalidParameter("minus element out of range".into()));
        }
        Ok(FiniteGroup {
            magma,
            unit,
            involution,
            minus,
        })
    }

    /// `♯ = x ↦ x⁻¹`, with `−1` the unique central element of order 2 if any.
    pub fn with_inverse(magma: FiniteMagma) -> Result<Self> {
        let inv = magma.inversion()?;
        let e = magma.unit().expect("inversion implies a unit");
        let central_involutions: Vec<usize> = (0..magma.size())
            .filter(|&x| x != e && magma.mul(x, x) == e && is_central(&magma, x))
            .collect();
        let minus = match central_involutions.as_slice() {
            [m] => Some(*m),
            _ => None,
        };
        FiniteGroup::new(magma, inv, minus)
    }

    /// `c2`, `c3`, `c4`, `c6`, `c2xc2`, `q8` or any catalog name, with
    /// `♯` the group inverse.
    pub fn seed(name: &str) -> Result<Self> {
        let magma = loops::small_group(name)
            .ok_or_else(|| Error::Parse(format!("unknown seed `{name}`")))?;
        FiniteGroup::with_inverse(magma)
    }

    pub fn magma(&self) -> &FiniteMagma {
        &self.magma
    }

    pub fn into_magma(self) -> FiniteMagma {
        self.magma
    }

    pub fn size(&self) -> usize {
        self.magma.size()
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn minus(&self) -> Option<usize> {
        self.minus
    }

    pub fn sharp(&self, x: usize) -> usize {
        self.involution[x]
    }

    pub fn involution(&self) -> &[usize] {
        &self.involution
    }

    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.magma.mul(x, y)
    }

    pub fn label(&self, x: usize) -> &str {
        self.magma.label(x)
    }

    /// Elements commuting with every element.
    pub fn center(&self) -> Vec<usize> {
        (0..self.size()).filter(|&c| is_central(&self.magma, c)).collect()
    }

    /// `x♯x` and `xx♯` central for every `x`.
    pub fn is_central_involution(&self) -> bool {
        (0..self.size()).all(|x| {
            let s = self.sharp(x);
            is_central(&self.magma, self.mul(s, x)) && is_central(&self.magma, self.mul(x, s))
        })
    }

    /// `1`/`e` is the unit, `-1` the designated minus element, anything
    /// else an element label.
    pub fn resolve(&self, param: &Param) -> Result<usize> {
        match param {
            Param::Unit => Ok(self.unit),
            Param::Minus => self
                .minus
                .ok_or_else(|| Error::InvalidParameter("no designated −1 element".into())),
            Param::Element(l) => self
                .magma
                .index_of(l)
                .ok_or_else(|| Error::InvalidParameter(format!("unknown element `{l}`"))),
        }
    }
}

fn is_central(m: &FiniteMagma, c: usize) -> bool {
    (0..m.size()).all(|x| m.mul(c, x) == m.mul(x, c))
}

/// A doubling parameter as written on the command line.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Param {
    Unit,
    Minus,
    Element(String),
}

impl FromStr for Param {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.trim() {
            "" => return Err(Error::Parse("empty parameter".into())),
            "1" | "e" => Param::Unit,
            "-1" => Param::Minus,
            other => Param::Element(other.to_string()),
        })
    }
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Param::Unit => f.write_str("1"),
            Param::Minus => f.write_str("-1"),
            Param::Element(l) => f.write_str(l),
        }
    }
}

fn check_parameters(g: &FiniteGroup, eps: usize, mu: usize) -> Result<()> {
    let k = g.size();
    for (name, p) in [("ε", eps), ("μ", mu)] {
        if p >= k {
            return Err(Error::InvalidParameter(format!("{name} out of range")));
        }
        if !is_central(&g.magma, p) {
            return Err(Error::NonCentralParameter(g.label(p).to_string()));
        }
        if g.sharp(p) != p {
            return Err(Error::InvalidParameter(format!("{name} = {} is not ♯-fixed", g.label(p))));
        }
    }
    if g.mul(eps, eps) != g.unit {
        return Err(Error::InvalidParameter(format!("ε = {} has ε² ≠ e", g.label(eps))));
    }
    Ok(())
}

/// `D(G)` on `G₀ ⊔ G₁`: `x_p` has index `p·|G| + x` and label `x.p`.
/// The new involution is `x₀♯ = (x♯)₀`, `x₁♯ = (εx)₁`, and `−1` maps to
/// `(−1)₀`.
pub fn moufang_double(g: &FiniteGroup, eps: usize, mu: usize, convention: Convention) -> Result<FiniteGroup> {
    check_parameters(g, eps, mu)?;
    let k = g.size();
    let me = g.mul(mu, eps);
    let labels = (0..2 * k)
        .map(|t| format!("{}.{}", g.label(t % k), t / k))
        .collect();
    let s = |x| g.sharp(x);
    let p = |x, y| g.mul(x, y);
    let product = |a: usize, b: usize| {
        let (x, i, y, j) = (a % k, a / k, b % k, b / k);
        match (convention, i, j) {
            (_, 0, 0) => p(x, y),
            (Convention::Bullet, 0, 1) => k + p(y, x),
            (Convention::Bullet, 1, 0) => k + p(x, s(y)),
            (Convention::Bullet, _, _) => p(me, p(s(y), x)),
            (Convention::BulletPrime, 0, 1) => k + p(s(x), y),
            (Convention::BulletPrime, 1, 0) => k + p(y, x),
            (Convention::BulletPrime, _, _) => p(me, p(y, s(x))),
        }
    };
    let magma = FiniteMagma::binary_from_fn(labels, product)?;
    let involution = (0..2 * k)
        .map(|t| if t < k { s(t) } else { k + p(eps, t - k) })
        .collect();
    FiniteGroup::new(magma, involution, g.minus())
}

/// `ε = μ = e` on a group with `♯` the inverse.
pub fn dihedral_loop(g: &FiniteMagma) -> Result<FiniteGroup> {
    let g = FiniteGroup::with_inverse(g.clone())?;
    moufang_double(&g, g.unit(), g.unit(), Convention::Bullet)
}

/// `ε = z`, `μ = e` on a group with `♯` the inverse; `z` central of order 2.
pub fn dicyclic_loop(g: &FiniteMagma, z: usize) -> Result<FiniteGroup> {
    let mut g = FiniteGroup::with_inverse(g.clone())?;
    if z == g.unit() || g.mul(z, z) != g.unit() {
        return Err(Error::InvalidParameter(format!("{} does not have order 2", g.label(z))));
    }
    g.minus = Some(z);
    moufang_double(&g, z, g.unit(), Convention::Bullet)
}

/// The ternary product `a•(b♯•c)` of `D(G)` in closed form, with
/// `⟨xyz⟩ = xy♯z` in `G`:
///
/// | parities | value |
/// |---|---|
/// | 000 | `⟨xyz⟩₀` |
/// | 001 | `⟨zyx⟩₁` |
/// | 010 | `ε⟨yzx⟩₁` |
/// | 100 | `⟨xzy⟩₁` |
/// | 110 | `μ⟨zyx⟩₀` |
/// | 101 | `εμ⟨yzx⟩₀` |
/// | 011 | `μ⟨xzy⟩₀` |
/// | 111 | `μ⟨xyz⟩₁` |
pub fn ternary_double(g: &FiniteGroup, eps: usize, mu: usize) -> Result<FiniteMagma> {
    check_parameters(g, eps, mu)?;
    if !check_property(g.magma(), LoopPropertyId::Associative)?.holds() {
        return Err(Error::InvalidParameter("the closed form needs an associative base".into()));
    }
    let k = g.size();
    let p = |x, y| g.mul(x, y);
    let t = |x, y, z| p(p(x, g.sharp(y)), z);
    let em = p(eps, mu);
    let labels = (0..2 * k)
        .map(|i| format!("{}.{}", g.label(i % k), i / k))
        .collect();
    let mut table = Vec::with_capacity(8 * k * k * k);
    for a in 0..2 * k {
        for b in 0..2 * k {
            for c in 0..2 * k {
                let (x, y, z) = (a % k, b % k, c % k);
                table.push(match (a / k, b / k, c / k) {
                    (0, 0, 0) => t(x, y, z),
                    (0, 0, 1) => k + t(z, y, x),
                    (0, 1, 0) => k + p(eps, t(y, z, x)),
                    (1, 0, 0) => k + t(x, z, y),
                    (1, 1, 0) => p(mu, t(z, y, x)),
                    (1, 0, 1) => p(em, t(y, z, x)),
                    (0, 1, 1) => p(mu, t(x, z, y)),
                    _ => k + p(mu, t(x, y, z)),
                });
            }
        }
    }
    FiniteMagma::ternary(labels, table)
}

/// Per-stage parameters; `None` takes the default.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct StageChoice {
    pub eps: Option<Param>,
    pub mu: Option<Param>,
}

/// Classification of one chain stage.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StageReport {
    pub stage: usize,
    pub size: usize,
    pub eps: Option<String>,
    pub mu: Option<String>,
    pub commutative: bool,
    pub associative: bool,
    pub moufang: bool,
    pub order_profile: BTreeMap<usize, usize>,
    pub identification: Option<String>,
}

impl StageReport {
    fn of(stage: usize, g: &FiniteGroup, eps: Option<String>, mu: Option<String>) -> Result<Self> {
        let m = g.magma();
        let has = |id| check_property(m, id).map(|r| r.holds());
        let associative = has(LoopPropertyId::Associative)?;
        Ok(StageReport {
            stage,
            size: g.size(),
            eps,
            mu,
            commutative: has(LoopPropertyId::Commutative)?,
            associative,
            moufang: associative || has(LoopPropertyId::Moufang)?,
            order_profile: loops::order_profile(m),
            identification: loops::identify(m),
        })
    }

    /// `group`, `Moufang, non-associative` or `not Moufang`.
    pub fn kind(&self) -> &'static str {
        match (self.associative, self.moufang) {
            (true, _) => "group",
            (false, true) => "Moufang, non-associative",
            (false, false) => "not Moufang",
        }
    }
}

impl fmt::Display for StageReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = self.identification.as_deref().unwrap_or("unidentified");
        let profile: Vec<String> = self.order_profile.iter().map(|(o, n)| format!("{o}^{n}")).collect();
        write!(f, "stage {} [{}]", self.stage, name)?;
        if let (Some(e), Some(m)) = (&self.eps, &self.mu) {
            write!(f, " eps={e} mu={m}")?;
        }
        write!(f, " orders {}: {}", profile.join(" "), self.kind())?;
        if self.commutative {
            write!(f, ", commutative")?;
        }
        write!(f, ", order {}", self.size)
    }
}

/// Doubles `steps.len()` times. The first stage defaults to `ε = μ = e`;
/// later stages default to `ε` = the image of the previous `ε` and `μ = e`.
pub fn doubling_chain(
    seed: &FiniteGroup,
    steps: &[StageChoice],
    convention: Convention,
) -> Result<(Vec<FiniteGroup>, Vec<StageReport>)> {
    let mut groups = vec![seed.clone()];
    let mut reports = vec![StageReport::of(0, seed, None, None)?];
    let mut prev_eps = None;
    for (i, choice) in steps.iter().enumerate() {
        let stage = i + 1;
        let g = groups.last().expect("seed");
        let wrap = |e: Error| Error::InvalidStageParameter {
            stage,
            reason: e.to_string(),
        };
        let eps = match &choice.eps {
            Some(p) => g.resolve(p).map_err(wrap)?,
            None => prev_eps.unwrap_or(g.unit()),
        };
        let mu = match &choice.mu {
            Some(p) => g.resolve(p).map_err(wrap)?,
            None => g.unit(),
        };
        let next = moufang_double(g, eps, mu, convention).map_err(wrap)?;
        let labels = (Some(g.label(eps).to_string()), Some(g.label(mu).to_string()));
        reports.push(StageReport::of(stage, &next, labels.0, labels.1)?);
        prev_eps = Some(eps);
        groups.push(next);
    }
    Ok((groups, reports))
}

#[cfg(test)]
mod tests;

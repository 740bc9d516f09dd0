use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{first_failing_tuple, FiniteMagma};
use crate::error::{Error, Result};
use crate::spherical::verify::{Strategy, Verdict, VerificationReport};

/// Identities and structural properties of finite magmas.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LoopPropertyId {
    /// Left and right multiplications are injective.
    Quasigroup,
    /// Quasigroup with a two-sided unit.
    Loop,
    /// `x⁻¹(xy) = y = x(x⁻¹y) = (yx)x⁻¹ = (yx⁻¹)x`
    InverseLoop,
    Associative,
    Commutative,
    /// `(ax)a = a(xa)`
    Flexible,
    /// `x(xy) = (xx)y`, `(yx)x = y(xx)`
    Alternative,
    /// `(ax)(ya) = a((xy)a)`
    Moufang,
    /// `z(x(zy)) = ((zx)z)y`
    M1,
    /// `((yz)x)z = y(z(xz))`
    M2,
    /// `(xyy) = x = (yyx)`
    Ip,
    /// `(ab(cde)) = (a(bcd)e) = ((abc)de)`
    At1,
    /// `(ab(cde)) = (a(dcb)e) = ((abc)de)`
    At2,
    /// IP and AT2.
    Torsor,
    /// `(xy(yzu)) = (xzu)`
    LeftChasles,
    /// `((uzy)yx) = (uzx)`
    RightChasles,
    /// `((xba)(yba)(zab)) = ((xyz)ab)`
    LeftTernaryMoufang,
    /// `((abx)(bay)(baz)) = (ab(xyz))`
    RightTernaryMoufang,
    /// `((uvx)yx) = (uv(xyx))`
    Mt1,
    /// `(xy(xyz)) = ((xyx)yz)`
    Mt2,
    /// IP and every homotope is an inverse loop with inverse `(yxy)`.
    TernaryInverseLoop,
    /// `(ay(xya)) = ((ayx)ya)`
    TernaryFlexible,
    /// `(y(xyz)y) = ((yzy)y(yxy))` and `(y(yxy)y) = x`
    AutomorphicInverse,
    /// `μ(x,y) = (xyx)` with `μ(x,x) = x`, `μ(x,μ(x,y)) = y`,
    /// `μ(x,μ(y,z)) = μ(μ(x,y),μ(x,z))`
    ReflectionSpace,
}

use LoopPropertyId::*;

impl LoopPropertyId {
    pub const ALL: [LoopPropertyId; 24] = [
        Quasigroup,
        Loop,
        InverseLoop,
        Associative,
        Commutative,
        Flexible,
        Alternative,
        Moufang,
        M1,
        M2,
        Ip,
        At1,
        At2,
        Torsor,
        LeftChasles,
        RightChasles,
        LeftTernaryMoufang,
        RightTernaryMoufang,
        Mt1,
        Mt2,
        TernaryInverseLoop,
        TernaryFlexible,
        AutomorphicInverse,
        ReflectionSpace,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Quasigroup => "quasigroup",
            Loop => "loop",
            InverseLoop => "inverse-loop",
            Associative => "associative",
            Commutative => "commutative",
            Flexible => "flexible",
            Alternative => "alternative",
            Moufang => "moufang",
            M1 => "m1",
            M2 => "m2",
            Ip => "ip",
            At1 => "at1",
            At2 => "at2",
            Torsor => "torsor",
            LeftChasles => "left-chasles",
            RightChasles => "right-chasles",
            LeftTernaryMoufang => "left-ternary-moufang",
            RightTernaryMoufang => "right-ternary-moufang",
            Mt1 => "mt1",
            Mt2 => "mt2",
            TernaryInverseLoop => "ternary-inverse-loop",
            TernaryFlexible => "ternary-flexible",
            AutomorphicInverse => "automorphic-inverse",
            ReflectionSpace => "reflection-space",
        }
    }

    pub fn arity(self) -> usize {
        match self {
            Quasigroup | Loop | InverseLoop | Associative | Commutative | Flexible
            | Alternative | Moufang | M1 | M2 => 2,
            _ => 3,
        }
    }

    /// Number of free variables scanned.
    pub fn variables(self) -> usize {
        match self {
            Commutative | Flexible | Alternative | InverseLoop | Ip | TernaryInverseLoop => 2,
            Quasigroup | Loop | Associative | Moufang | M1 | M2 | Mt2 | TernaryFlexible
            | AutomorphicInverse | ReflectionSpace => 3,
            Mt1 | LeftChasles | RightChasles => 4,
            At1 | At2 | Torsor | LeftTernaryMoufang | RightTernaryMoufang => 5,
        }
    }
}

impl fmt::Display for LoopPropertyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for LoopPropertyId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.to_ascii_lowercase();
        let alias = match s.as_str() {
            "pa" => "at2",
            "left-ternary-moufang-autotopy" => "left-ternary-moufang",
            "right-ternary-moufang-autotopy" => "right-ternary-moufang",
            other => other,
        };
        LoopPropertyId::ALL
            .into_iter()
            .find(|id| id.name() == alias)
            .ok_or_else(|| Error::Parse(format!("unknown loop property `{s}`")))
    }
}

fn binary_holds(m: &FiniteMagma, id: LoopPropertyId, v: &[usize], inv: Option<&[usize]>) -> bool {
    let p = |a, b| m.mul(a, b);
    match id {
        Quasigroup | Loop => {
            let (a, x, y) = (v[0], v[1], v[2]);
            x == y || (p(a, x) != p(a, y) && p(x, a) != p(y, a))
        }
        InverseLoop => {
            let inv = inv.expect("inversion");
            let (x, y) = (v[0], v[1]);
            let xi = inv[x];
            p(xi, p(x, y)) == y && p(x, p(xi, y)) == y && p(p(y, x), xi) == y && p(p(y, xi), x) == y
        }
        Associative => p(p(v[0], v[1]), v[2]) == p(v[0], p(v[1], v[2])),
        Commutative => p(v[0], v[1]) == p(v[1], v[0]),
        Flexible => p(p(v[0], v[1]), v[0]) == p(v[0], p(v[1], v[0])),
        Alternative => {
            let (x, y) = (v[0], v[1]);
            p(x, p(x, y)) == p(p(x, x), y) && p(p(y, x), x) == p(y, p(x, x))
        }
        Moufang => {
            let (a, x, y) = (v[0], v[1], v[2]);
            p(p(a, x), p(y, a)) == p(a, p(p(x, y), a))
        }
        M1 => {
            let (z, x, y) = (v[0], v[1], v[2]);
            p(z, p(x, p(z, y))) == p(p(p(z, x), z), y)
        }
        M2 => {
            let (y, z, x) = (v[0], v[1], v[2]);
            p(p(p(y, z), x), z) == p(y, p(z, p(x, z)))
        }
        _ => unreachable!("ternary property"),
    }
}

fn ternary_holds(m: &FiniteMagma, id: LoopPropertyId, v: &[usize]) -> bool {
    let t = |a, b, c| m.tri(a, b, c);
    match id {
        Ip => t(v[0], v[1], v[1]) == v[0] && t(v[1], v[1], v[0]) == v[0],
        At1 | At2 | Torsor => {
            let (a, b, c, d, e) = (v[0], v[1], v[2], v[3], v[4]);
            let first = t(a, b, t(c, d, e));
            let middle = if id == At1 { t(b, c, d) } else { t(d, c, b) };
            let at = first == t(a, middle, e) && first == t(t(a, b, c), d, e);
            at && (id != Torsor || (t(a, b, b) == a && t(b, b, a) == a))
        }
        LeftChasles => {
            let (x, y, z, u) = (v[0], v[1], v[2], v[3]);
            t(x, y, t(y, z, u)) == t(x, z, u)
        }
        RightChasles => {
            let (u, z, y, x) = (v[0], v[1], v[2], v[3]);
            t(t(u, z, y), y, x) == t(u, z, x)
        }
        LeftTernaryMoufang => {
            let (x, y, z, a, b) = (v[0], v[1], v[2], v[3], v[4]);
            t(t(x, b, a), t(y, b, a), t(z, a, b)) == t(t(x, y, z), a, b)
        }
        RightTernaryMoufang => {
            let (a, b, x, y, z) = (v[0], v[1], v[2], v[3], v[4]);
            t(t(a, b, x), t(b, a, y), t(b, a, z)) == t(a, b, t(x, y, z))
        }
        Mt1 => {
            let (u, w, x, y) = (v[0], v[1], v[2], v[3]);
            t(t(u, w, x), y, x) == t(u, w, t(x, y, x))
        }
        Mt2 => {
            let (x, y, z) = (v[0], v[1], v[2]);
            t(x, y, t(x, y, z)) == t(t(x, y, x), y, z)
        }
        TernaryInverseLoop => {
            let (x, y) = (v[0], v[1]);
            let xi = t(y, x, y);
            t(x, y, y) == x
                && t(y, y, x) == x
                && (0..m.size()).all(|u| {
                    t(x, y, t(xi, y, u)) == u
                        && t(xi, y, t(x, y, u)) == u
                        && t(t(u, y, xi), y, x) == u
                        && t(t(u, y, x), y, xi) == u
                })
        }
        TernaryFlexible => {
            let (a, y, x) = (v[0], v[1], v[2]);
            t(a, y, t(x, y, a)) == t(t(a, y, x), y, a)
        }
        AutomorphicInverse => {
            let (x, y, z) = (v[0], v[1], v[2]);
            t(y, t(x, y, z), y) == t(t(y, z, y), y, t(y, x, y)) && t(y, t(y, x, y), y) == x
        }
        ReflectionSpace => {
            let mu = |a, b| t(a, b, a);
            let (x, y, z) = (v[0], v[1], v[2]);
            mu(x, x) == x && mu(x, mu(x, y)) == y && mu(x, mu(y, z)) == mu(mu(x, y), mu(x, z))
        }
        _ => unreachable!("binary property"),
    }
}

/// Exhaustive check over every tuple of elements.
///
/// A loop without a unit, or an inverse loop with a non-invertible element,
/// fails with an empty or one-slot witness naming the culprit.
pub fn check_property(m: &FiniteMagma, id: LoopPropertyId) -> Result<VerificationReport<String>> {
    m.expect_arity(id.arity())?;
    let k = m.size();
    let report = |witness: Option<Vec<usize>>, checked: u64| VerificationReport {
        identity: id.name().to_string(),
        verdict: if witness.is_some() {
            Verdict::Fails
        } else {
            Verdict::Holds
        },
        strategy: Strategy::ExhaustiveTable,
        witness: witness.map(|w| w.into_iter().map(|x| vec![m.label(x).to_string()]).collect()),
        checked,
    };
    let mut inv = None;
    if matches!(id, Loop | InverseLoop) {
        let (w, c) = first_failing_tuple(k, 3, |v| binary_holds(m, Quasigroup, v, None))?;
        if w.is_some() {
            return Ok(report(w, c));
        }
        if m.unit().is_none() {
            return Ok(report(Some(vec![]), c));
        }
        if id == InverseLoop {
            match (0..k).find(|&x| m.inverse(x).is_none()) {
                Some(x) => return Ok(report(Some(vec![x]), c)),
                None => inv = Some(m.inversion()?),
            }
        }
        if id == Loop {
            return Ok(report(None, c));
        }
    }
    let n = id.variables();
    let (w, c) = if id.arity() == 2 {
        first_failing_tuple(k, n, |v| binary_holds(m, id, v, inv.as_deref()))?
    } else {
        first_failing_tuple(k, n, |v| ternary_holds(m, id, v))?
    };
    Ok(report(w, c))
}

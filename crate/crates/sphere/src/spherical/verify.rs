//! Identity verification for ternary algebras.
//!
//! Each identity is a polynomial map that is homogeneous in every slot. A
//! slot of degree 1 is checked on basis vectors; a slot of degree 2 on the
//! polarization set `{e_i} ∪ {e_i + e_j}`, which determines a homogeneous
//! quadratic map. Higher degrees need module enumeration or sampling.

use std::fmt;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::TernaryAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{self, Vector};
use crate::ring::Ring;

pub const DEFAULT_SEED: u64 = 0;
pub const DEFAULT_SAMPLES: usize = 1000;
/// Largest tuple count an exhaustive sweep will attempt.
pub const MAX_TUPLES: u128 = 2_000_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum IdentityId {
    K,
    PA,
    AT1,
    COM,
    TS,
    TC,
    A1,
    A2,
    A3,
    A1dual,
    A2dual,
    A3dual,
    FUFO,
}

impl IdentityId {
    pub const ALL: [IdentityId; 13] = [
        IdentityId::K,
        IdentityId::PA,
        IdentityId::AT1,
        IdentityId::COM,
        IdentityId::TS,
        IdentityId::TC,
        IdentityId::A1,
        IdentityId::A2,
        IdentityId::A3,
        IdentityId::A1dual,
        IdentityId::A2dual,
        IdentityId::A3dual,
        IdentityId::FUFO,
    ];

    /// Degree of the identity in each slot.
    pub fn degrees(self) -> &'static [u32] {
        use IdentityId::*;
        match self {
            K => &[2, 1],
            PA | AT1 | A1 | A1dual => &[1, 1, 1, 1, 1],
            COM | TS => &[1, 1, 1],
            TC => &[2, 2, 2],
            A2 | A2dual => &[1, 1, 2, 1],
            A3 | A3dual => &[2, 2, 1],
            FUFO => &[4, 2, 1],
        }
    }

    pub fn name(self) -> &'static str {
        use IdentityId::*;
        match self {
            K => "K",
            PA => "PA",
            AT1 => "AT1",
            COM => "COM",
            TS => "TS",
            TC => "TC",
            A1 => "A1",
            A2 => "A2",
            A3 => "A3",
            A1dual => "A1dual",
            A2dual => "A2dual",
            A3dual => "A3dual",
            FUFO => "FUFO",
        }
    }

    /// Evaluates the identity at one tuple of vectors.
    pub fn holds_at<R: Ring>(self, alg: &TernaryAlgebra<R>, v: &[Vector<R::Elem>]) -> bool {
        use IdentityId::*;
        let r = alg.ring();
        let t = |a: &[R::Elem], b: &[R::Elem], c: &[R::Elem]| alg.tri(a, b, c);
        let d = |a: &[R::Elem], b: &[R::Elem], c: &[R::Elem]| alg.tri(c, b, a);
        match self {
            K => {
                let (x, y) = (&v[0], &v[1]);
                let rhs = linalg::scale(r, &alg.q(x), y);
                t(x, x, y) == rhs && t(y, x, x) == rhs
            }
            PA => {
                let (a, b, c, dd, e) = (&v[0], &v[1], &v[2], &v[3], &v[4]);
                let first = t(a, b, &t(c, dd, e));
                first == t(a, &t(dd, c, b), e) && first == t(&t(a, b, c), dd, e)
            }
            AT1 => {
                let (a, b, c, dd, e) = (&v[0], &v[1], &v[2], &v[3], &v[4]);
                let first = t(a, b, &t(c, dd, e));
                first == t(a, &t(b, c, dd), e) && first == t(&t(a, b, c), dd, e)
            }
            COM => t(&v[0], &v[1], &v[2]) == t(&v[2], &v[1], &v[0]),
            TS => {
                let p = t(&v[0], &v[1], &v[2]);
                p == t(&v[2], &v[1], &v[0]) && p == t(&v[1], &v[0], &v[2])
            }
            TC => {
                let lhs = alg.q(&t(&v[0], &v[1], &v[2]));
                lhs == r.mul(&alg.q(&v[0]), &r.mul(&alg.q(&v[1]), &alg.q(&v[2])))
            }
            A1 => a1(r, &t, v),
            A2 => a2(&t, v),
            A3 => a3(&t, v),
            A1dual => a1(r, &d, v),
            A2dual => a2(&d, v),
            A3dual => a3(&d, v),
            FUFO => {
                let sp = alg.space();
                let qm = |a: &[R::Elem], b: &[R::Elem]| sp.jordan_q(a, b).expect("rank");
                let (x, y, z) = (&v[0], &v[1], &v[2]);
                qm(x, &qm(y, &qm(x, z))) == qm(&qm(x, y), z)
            }
        }
    }
}

fn a1<R: Ring, F>(r: &R, t: &F, v: &[Vector<R::Elem>]) -> bool
where
    F: Fn(&[R::Elem], &[R::Elem], &[R::Elem]) -> Vector<R::Elem>,
{
    let (u, w, x, y, z) = (&v[0], &v[1], &v[2], &v[3], &v[4]);
    let lhs = linalg::add(r, &t(u, w, &t(x, y, z)), &t(x, y, &t(u, w, z)));
    let rhs = linalg::add(r, &t(&t(u, w, x), y, z), &t(x, &t(w, u, y), z));
    lhs == rhs
}

fn a2<E: PartialEq, F>(t: &F, v: &[Vec<E>]) -> bool
where
    F: Fn(&[E], &[E], &[E]) -> Vec<E>,
{
    let (u, w, x, y) = (&v[0], &v[1], &v[2], &v[3]);
    t(&t(u, w, x), y, x) == t(u, w, &t(x, y, x))
}

fn a3<E: PartialEq, F>(t: &F, v: &[Vec<E>]) -> bool
where
    F: Fn(&[E], &[E], &[E]) -> Vec<E>,
{
    let (x, y, z) = (&v[0], &v[1], &v[2]);
    t(x, y, &t(x, y, z)) == t(&t(x, y, x), y, z)
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for IdentityId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        IdentityId::ALL
            .into_iter()
            .find(|id| id.name().eq_ignore_ascii_case(s) || (s == "AT2" && *id == IdentityId::PA))
            .ok_or_else(|| Error::Parse(format!("unknown identity `{s}`")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Strategy {
    /// Basis vectors in linear slots, the polarization set in quadratic slots.
    ExhaustiveBasis,
    /// Every vector of the (finite) module in every slot.
    ExhaustiveModule,
    /// Every integer vector with coordinates in `[-bound, bound]`.
    Box { bound: i64 },
    /// Random tuples drawn from a seeded generator.
    Sampled { count: usize, seed: u64 },
    /// Every tuple of elements of a finite magma.
    ExhaustiveTable,
}

impl Strategy {
    pub fn sampled_default() -> Self {
        Strategy::Sampled {
            count: DEFAULT_SAMPLES,
            seed: DEFAULT_SEED,
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Strategy::ExhaustiveBasis => write!(f, "exhaustive-basis"),
            Strategy::ExhaustiveModule => write!(f, "exhaustive-module"),
            Strategy::Box { bound } => write!(f, "box({bound})"),
            Strategy::Sampled { count, seed } => write!(f, "sampled({count},seed={seed})"),
            Strategy::ExhaustiveTable => write!(f, "exhaustive-table"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Holds,
    Fails,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Holds => "holds",
            Verdict::Fails => "fails",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport<E> {
    pub identity: String,
    pub verdict: Verdict,
    pub strategy: Strategy,
    /// First failing tuple in scan order.
    pub witness: Option<Vec<Vector<E>>>,
    pub checked: u64,
}

impl<E> VerificationReport<E> {
    pub fn holds(&self) -> bool {
        self.verdict == Verdict::Holds
    }

    /// The machine-readable summary line.
    pub fn result_line(&self) -> String {
        format!("RESULT {} {} {}", self.identity, self.verdict, self.strategy)
    }
}

/// Candidate vectors for a slot of the given degree.
pub fn slot_domain<R: Ring>(
    r: &R,
    n: usize,
    degree: u32,
    strategy: &Strategy,
) -> Result<Vec<Vector<R::Elem>>> {
    match strategy {
        Strategy::ExhaustiveBasis => match degree {
            1 => Ok(linalg::basis(r, n)),
            2 => Ok(linalg::polarization_set(r, n)),
            3 if !r.is_finite() || r.invert(&r.from_i64(2)).is_ok() => {
                Ok(linalg::cubic_polarization_set(r, n))
            }
            d => Err(Error::InfeasibleStrategy(format!(
                "exhaustive-basis cannot check a slot of degree {d}"
            ))),
        },
        Strategy::ExhaustiveModule => linalg::module_elements(r, n).ok_or_else(|| {
            Error::InfeasibleStrategy("exhaustive-module needs a finite ring".into())
        }),
        Strategy::Box { bound } => {
            if r.is_finite() {
                return Err(Error::InfeasibleStrategy(
                    "box enumeration is for infinite rings".into(),
                ));
            }
            Ok(linalg::box_elements(r, n, *bound))
        }
        Strategy::Sampled { .. } => Err(Error::InfeasibleStrategy(
            "sampled strategy has no fixed domain".into(),
        )),
        Strategy::ExhaustiveTable => Err(Error::InfeasibleStrategy(
            "exhaustive-table applies to finite magmas".into(),
        )),
    }
}

/// Finds the first tuple in the product of `domains` (lexicographic order)
/// where `check` fails.
pub fn first_failure<E, F>(domains: &[Vec<Vector<E>>], check: F) -> Result<(Option<Vec<Vector<E>>>, u64)>
where
    E: Clone + Send + Sync,
    F: Fn(&[Vector<E>]) -> bool + Sync,
{
    let total: u128 = domains.iter().map(|d| d.len() as u128).product();
    if total > MAX_TUPLES {
        return Err(Error::InfeasibleStrategy(format!(
            "{total} tuples exceed the exhaustive limit"
        )));
    }
    let decode = |mut t: usize| -> Vec<Vector<E>> {
        let mut out = vec![Vec::new(); domains.len()];
        for (slot, d) in out.iter_mut().zip(domains).rev() {
            *slot = d[t % d.len()].clone();
            t /= d.len();
        }
        out
    };
    let hit = (0..total as usize)
        .into_par_iter()
        .find_first(|&t| !check(&decode(t)));
    Ok((hit.map(decode), total as u64))
}

/// Checks `count` random tuples drawn with the given seed.
pub fn first_sampled_failure<R, F>(
    r: &R,
    n: usize,
    slots: usize,
    count: usize,
    seed: u64,
    check: F,
) -> (Option<Vec<Vector<R::Elem>>>, u64)
where
    R: Ring,
    F: Fn(&[Vector<R::Elem>]) -> bool + Sync,
{
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let tuples: Vec<Vec<Vector<R::Elem>>> = (0..count)
        .map(|_| {
            (0..slots)
                .map(|_| (0..n).map(|_| r.sample(&mut rng)).collect())
                .collect()
        })
        .collect();
    let hit = tuples.par_iter().position_first(|t| !check(t));
    (hit.map(|i| tuples[i].clone()), count as u64)
}

/// Runs an arbitrary homogeneous identity through the engine.
pub fn verify_custom<R, F>(
    r: &R,
    n: usize,
    name: &str,
    degrees: &[u32],
    strategy: &Strategy,
    check: F,
) -> Result<VerificationReport<R::Elem>>
where
    R: Ring,
    F: Fn(&[Vector<R::Elem>]) -> bool + Sync,
{
    let (witness, checked) = match strategy {
        Strategy::Sampled { count, seed } => {
            first_sampled_failure(r, n, degrees.len(), *count, *seed, &check)
        }
        s => {
            let domains = degrees
                .iter()
                .map(|&d| slot_domain(r, n, d, s))
                .collect::<Result<Vec<_>>>()?;
            first_failure(&domains, &check)?
        }
    };
    Ok(VerificationReport {
        identity: name.to_string(),
        verdict: if witness.is_some() {
            Verdict::Fails
        } else {
            Verdict::Holds
        },
        strategy: *strategy,
        witness,
        checked,
    })
}

pub fn verify<R: Ring>(
    alg: &TernaryAlgebra<R>,
    id: IdentityId,
    strategy: &Strategy,
) -> Result<VerificationReport<R::Elem>> {
    verify_custom(
        alg.ring(),
        alg.rank(),
        id.name(),
        id.degrees(),
        strategy,
        |v| id.holds_at(alg, v),
    )
}

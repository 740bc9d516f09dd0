//! Form, algebra and Cayley-table files.
//!
//! Form and algebra files are JSON with ring elements written as strings;
//! plain integers are accepted on input. Serialization is canonical, so a
//! parsed file re-serializes byte for byte.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::loops::FiniteMagma;
use crate::quadratic::QuadraticSpace;
use crate::ring::{ring_eval, Ring, RingSpec};
use crate::spherical::TernaryAlgebra;

/// A ring element in a file: a string expression or a bare integer.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Scalar {
    Int(i64),
    Text(String),
}

impl Scalar {
    fn eval<R: Ring>(&self, r: &R) -> Result<R::Elem> {
        match self {
            Scalar::Int(v) => Ok(r.from_i64(*v)),
            Scalar::Text(s) => ring_eval(r, s),
        }
    }

    fn of<R: Ring>(r: &R, a: &R::Elem) -> Self {
        Scalar::Text(r.format_elem(a))
    }
}

/// `q(x) = Σ b[i][j] x_i x_j`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormFile {
    pub ring: String,
    pub rank: usize,
    pub b: Vec<Vec<Scalar>>,
}

/// A form file plus `c[i][j][k] = ⟨e_i e_j e_k⟩`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub ring: String,
    pub rank: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub b: Vec<Vec<Scalar>>,
    pub c: Vec<Vec<Vec<Vec<Scalar>>>>,
}

fn coefficients<R: Ring>(r: &R, rank: usize, b: &[Vec<Scalar>]) -> Result<Vec<Vec<R::Elem>>> {
    if b.len() != rank || b.iter().any(|row| row.len() != rank) {
        return Err(Error::RankMismatch {
            expected: rank,
            got: b.len(),
        });
    }
    b.iter()
        .map(|row| row.iter().map(|s| s.eval(r)).collect())
        .collect()
}

fn check_ring<R: Ring>(r: &R, ring: &str) -> Result<()> {
    let spec: RingSpec = ring.parse()?;
    if spec != r.spec() {
        return Err(Error::UnsupportedRing(format!("file ring {spec} but expected {}", r.spec())));
    }
    Ok(())
}

impl FormFile {
    pub fn parse(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn ring_spec(&self) -> Result<RingSpec> {
        self.ring.parse()
    }

    pub fn from_space<R: Ring>(space: &QuadraticSpace<R>) -> Self {
        let r = space.ring();
        FormFile {
            ring: r.spec().to_string(),
            rank: space.rank(),
            b: space
                .coefficients()
                .iter()
                .map(|row| row.iter().map(|a| Scalar::of(r, a)).collect())
                .collect(),
        }
    }

    pub fn to_space<R: Ring>(&self, ring: R) -> Result<QuadraticSpace<R>> {
        check_ring(&ring, &self.ring)?;
        let b = coefficients(&ring, self.rank, &self.b)?;
        QuadraticSpace::new(ring, b)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("form serializes") + "\n"
    }
}

impl AlgebraFile {
    pub fn parse(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn ring_spec(&self) -> Result<RingSpec> {
        self.ring.parse()
    }

    pub fn from_algebra<R: Ring>(alg: &TernaryAlgebra<R>) -> Self {
        let r = alg.ring();
        let n = alg.rank();
        let form = FormFile::from_space(alg.space());
        let c = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        (0..n)
                            .map(|k| alg.basis_product(i, j, k).iter().map(|a| Scalar::of(r, a)).collect())
                            .collect()
                    })
                    .collect()
            })
            .collect();
        AlgebraFile {
            ring: form.ring,
            rank: n,
            label: Some(alg.label().to_string()).filter(|l| !l.is_empty()),
            b: form.b,
            c,
        }
    }

    pub fn to_algebra<R: Ring>(&self, ring: R) -> Result<TernaryAlgebra<R>> {
        let form = FormFile {
            ring: self.ring.clone(),
            rank: self.rank,
            b: self.b.clone(),
        };
        let space = form.to_space(ring.clone())?;
        let n = self.rank;
        let shape_ok = self.c.len() == n
            && self.c.iter().all(|a| {
                a.len() == n && a.iter().all(|b| b.len() == n && b.iter().all(|v| v.len() == n))
            });
        if !shape_ok {
            return Err(Error::Parse(format!("structure constants must have shape {n}×{n}×{n}×{n}")));
        }
        let c = self
            .c
            .iter()
            .flatten()
            .flatten()
            .map(|v| v.iter().map(|s| s.eval(&ring)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        TernaryAlgebra::new(space, c, self.label.clone().unwrap_or_default())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("algebra serializes") + "\n"
    }
}

/// `elements: a,b,…` then `k` rows (binary) or `k` blank-line separated
/// blocks of `k` rows (ternary, block `x`, row `y`, column `z` is `(xyz)`).
pub fn write_cayley(m: &FiniteMagma) -> String {
    let k = m.size();
    let mut out = format!("elements: {}\n", m.labels().join(","));
    let products = m.all_products();
    let row = |start: usize| {
        products[start..start + k]
            .iter()
            .map(|&v| m.label(v))
            .collect::<Vec<_>>()
            .join(" ")
    };
    if m.arity() == 2 {
        for x in 0..k {
            out.push_str(&row(x * k));
            out.push('\n');
        }
    } else {
        for x in 0..k {
            if x > 0 {
                out.push('\n');
            }
            for y in 0..k {
                out.push_str(&row((x * k + y) * k));
                out.push('\n');
            }
        }
    }
    out
}

/// Parses [`write_cayley`] output; `#` starts a comment line.
pub fn parse_cayley(text: &str) -> Result<FiniteMagma> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("empty Cayley table".into()))?;
    let list = header
        .strip_prefix("elements:")
        .ok_or_else(|| Error::Parse("Cayley table must start with `elements:`".into()))?;
    let labels: Vec<String> = list.split(',').map(|s| s.trim().to_string()).collect();
    let k = labels.len();
    let probe = FiniteMagma::binary(labels.clone(), vec![vec![0; k]; k])?;
    let mut cells = Vec::new();
    let mut rows = 0;
    for line in lines {
        let row: Vec<&str> = line.split_whitespace().collect();
        if row.len() != k {
            return Err(Error::Parse(format!("row {} has {} entries, expected {k}", rows + 1, row.len())));
        }
        for cell in row {
            cells.push(
                probe
                    .index_of(cell)
                    .ok_or_else(|| Error::Parse(format!("unknown element `{cell}`")))?,
            );
        }
        rows += 1;
    }
    if rows == k {
        FiniteMagma::binary(labels, cells.chunks(k).map(<[usize]>::to_vec).collect())
    } else if rows == k * k {
        FiniteMagma::ternary(labels, cells)
    } else {
        Err(Error::Parse(format!("expected {k} or {} rows, found {rows}", k * k)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::binary2d::BinaryForm;
    use crate::loops::{cyclic, quaternion8, LoopSide};
    use crate::ring::{Integers, Rationals, Zmod};

    #[test]
    fn form_file_accepts_integers_and_strings() {
        let text = r#"{ "ring": "zmod:5", "rank": 2, "b": [[1,1],[0,"2"]] }"#;
        let f = FormFile::parse(text).unwrap();
        let space = f.to_space(Zmod::new(5).unwrap()).unwrap();
        assert_eq!(space.q(&[1, 1]), 4);
        assert!(f.to_space(Integers).is_err());
        let again = FormFile::from_space(&space).to_json();
        assert_eq!(FormFile::parse(&again).unwrap().to_json(), again);
    }

    #[test]
    fn algebra_round_trip_is_byte_stable() {
        let alg = BinaryForm::from_ints(Rationals, 2, -1, 3).to_algebra();
        let json = AlgebraFile::from_algebra(&alg).to_json();
        let back = AlgebraFile::parse(&json).unwrap().to_algebra(Rationals).unwrap();
        assert_eq!(back, alg);
        assert_eq!(AlgebraFile::from_algebra(&back).to_json(), json);
        let mut bad = AlgebraFile::parse(&json).unwrap();
        bad.c.pop();
        assert!(bad.to_algebra(Rationals).is_err());
    }

    #[test]
    fn cayley_round_trip() {
        for m in [cyclic(5), quaternion8(), cyclic(4).ternary_from_inverse_loop(LoopSide::Left).unwrap()] {
            let text = write_cayley(&m);
            let back = parse_cayley(&text).unwrap();
            assert_eq!(back, m);
            assert_eq!(write_cayley(&back), text);
        }
        assert_eq!(write_cayley(&cyclic(2)), "elements: 0,1\n0 1\n1 0\n");
        assert!(parse_cayley("elements: a,b\na b\n").is_err());
        assert!(parse_cayley("elements: a,b\na c\nb a\n").is_err());
        assert!(parse_cayley("a b\n").is_err());
    }
}

use std::collections::BTreeMap;

use rayon::prelude::*;

use super::FiniteMagma;

fn labels(n: usize, f: impl Fn(usize) -> String) -> Vec<String> {
    (0..n).map(f).collect()
}

/// `C_n` on residues `0..n`.
pub fn cyclic(n: usize) -> FiniteMagma {
    FiniteMagma::binary_from_fn(labels(n, |i| i.to_string()), |x, y| (x + y) % n)
        .expect("cyclic table")
}

/// `D_n` of order `2n`: `r^i` is `i`, `s·r^i` is `n + i`.
pub fn dihedral(n: usize) -> FiniteMagma {
    let names = labels(2 * n, |t| if t < n { format!("r{t}") } else { format!("s{}", t - n) });
    FiniteMagma::binary_from_fn(names, |x, y| {
        let (i, f) = (x % n, x / n);
        let (j, g) = (y % n, y / n);
        let k = if f == 0 { (i + j) % n } else { (i + n - j) % n };
        (f ^ g) * n + k
    })
    .expect("dihedral table")
}

/// `Dic_n` of order `4n`: `a^i` is `i` and `a^i x` is `2n + i`, with
/// `a^{2n} = e`, `x² = a^n`, `x a x⁻¹ = a⁻¹`.
pub fn dicyclic(n: usize) -> FiniteMagma {
    let m = 2 * n;
    let names = labels(2 * m, |t| if t < m { format!("a{t}") } else { format!("a{}x", t - m) });
    FiniteMagma::binary_from_fn(names, |x, y| {
        let (i, f) = (x % m, x / m);
        let (j, g) = (y % m, y / m);
        match (f, g) {
            (0, _) => g * m + (i + j) % m,
            (1, 0) => m + (i + m - j) % m,
            _ => (i + m - j + n) % m,
        }
    })
    .expect("dicyclic table")
}

/// `Q₈ = Dic₂`.
pub fn quaternion8() -> FiniteMagma {
    dicyclic(2)
}

/// `G × H` with index `g·|H| + h`.
pub fn direct_product(g: &FiniteMagma, h: &FiniteMagma) -> FiniteMagma {
    let k = h.size();
    let names = (0..g.size() * k)
        .map(|t| format!("({};{})", g.label(t / k), h.label(t % k)))
        .collect();
    FiniteMagma::binary_from_fn(names, |x, y| {
        g.mul(x / k, y / k) * k + h.mul(x % k, y % k)
    })
    .expect("product table")
}

/// Looks up `C<n>`, `D<n>`, `Dic<n>`, `Q8`, `S3` and `×`-products such as
/// `C2xC2`.
pub fn small_group(name: &str) -> Option<FiniteMagma> {
    let name = name.trim();
    if name.contains(['x', '×']) && !name.starts_with("Dic") {
        let mut parts = name.split(['x', '×']).map(small_group);
        let first = parts.next()??;
        return parts.try_fold(first, |acc, g| Some(direct_product(&acc, &g?)));
    }
    let num = |prefix: &str| name.strip_prefix(prefix)?.parse::<usize>().ok().filter(|&n| n > 0);
    let lower = name.to_ascii_lowercase();
    if lower == "q8" {
        return Some(quaternion8());
    }
    if lower == "s3" {
        return Some(dihedral(3));
    }
    if let Some(n) = num("Dic") {
        return (n >= 2).then(|| dicyclic(n));
    }
    if let Some(n) = num("C").or_else(|| num("c")) {
        return Some(cyclic(n));
    }
    if let Some(n) = num("D").or_else(|| num("d")) {
        return (n >= 2).then(|| dihedral(n));
    }
    None
}

fn catalog(order: usize) -> Vec<(String, FiniteMagma)> {
    let mut out = vec![(format!("C{order}"), cyclic(order))];
    for (name, g) in [
        ("C2xC2", small_group("C2xC2")),
        ("C2xC4", small_group("C2xC4")),
        ("C2xC2xC2", small_group("C2xC2xC2")),
        ("C2xC6", small_group("C2xC6")),
        ("C2xC8", small_group("C2xC8")),
        ("C4xC4", small_group("C4xC4")),
        ("C2xC2xC4", small_group("C2xC2xC4")),
        ("C2xC2xC2xC2", small_group("C2xC2xC2xC2")),
        ("C2xQ8", small_group("C2xQ8")),
        ("C2xD4", small_group("C2xD4")),
        ("C3xS3", small_group("C3xS3")),
        ("C2xC2xS3", small_group("C2xC2xS3")),
    ] {
        let g = g.expect("catalog entry");
        if g.size() == order {
            out.push((name.to_string(), g));
        }
    }
    if order == 8 {
        out.push(("Q8".into(), quaternion8()));
    }
    if order % 2 == 0 && order >= 6 {
        out.push((format!("D{}", order / 2), dihedral(order / 2)));
    }
    if order % 4 == 0 && order >= 12 {
        out.push((format!("Dic{}", order / 4), dicyclic(order / 4)));
    }
    out
}

/// Number of elements of each order. Empty when the magma has no unit.
pub fn order_profile(m: &FiniteMagma) -> BTreeMap<usize, usize> {
    let mut out = BTreeMap::new();
    if let Some(orders) = element_orders(m) {
        for o in orders {
            *out.entry(o).or_insert(0) += 1;
        }
    }
    out
}

/// Smallest `n` with `x^n = e` for right powers `x^n = x^{n-1}x`; `0` if none.
fn element_orders(m: &FiniteMagma) -> Option<Vec<usize>> {
    if m.arity() != 2 {
        return None;
    }
    let e = m.unit()?;
    Some(
        (0..m.size())
            .map(|x| {
                let mut p = x;
                for n in 1..=m.size() {
                    if p == e {
                        return n;
                    }
                    p = m.mul(p, x);
                }
                0
            })
            .collect(),
    )
}

fn generators(m: &FiniteMagma, e: usize) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut span = closure(m, &[e]);
    while span.len() < m.size() {
        let mut inside = vec![false; m.size()];
        span.iter().for_each(|&x| inside[x] = true);
        let next = (0..m.size()).find(|&x| !inside[x]).expect("element outside span");
        gens.push(next);
        let mut seeds = gens.clone();
        seeds.push(e);
        span = closure(m, &seeds);
    }
    gens
}

fn closure(m: &FiniteMagma, seeds: &[usize]) -> Vec<usize> {
    let mut inside = vec![false; m.size()];
    let mut list = Vec::new();
    for &s in seeds {
        if !std::mem::replace(&mut inside[s], true) {
            list.push(s);
        }
    }
    let mut grew = true;
    while grew {
        grew = false;
        let snapshot = list.clone();
        for &x in &snapshot {
            for &y in &snapshot {
                let z = m.mul(x, y);
                if !std::mem::replace(&mut inside[z], true) {
                    list.push(z);
                    grew = true;
                }
            }
        }
    }
    list
}

/// Extends a partial map along products; `false` on a contradiction.
fn propagate(a: &FiniteMagma, b: &FiniteMagma, map: &mut [Option<usize>]) -> bool {
    let mut grew = true;
    while grew {
        grew = false;
        let known: Vec<usize> = (0..a.size()).filter(|&x| map[x].is_some()).collect();
        for &x in &known {
            for &y in &known {
                let z = a.mul(x, y);
                let image = b.mul(map[x].unwrap(), map[y].unwrap());
                match map[z] {
                    Some(w) if w != image => return false,
                    Some(_) => {}
                    None => {
                        map[z] = Some(image);
                        grew = true;
                    }
                }
            }
        }
    }
    true
}

/// A bijection `φ` with `φ(xy) = φ(x)φ(y)` between two binary loops.
pub fn find_isomorphism(a: &FiniteMagma, b: &FiniteMagma) -> Option<Vec<usize>> {
    if a.arity() != 2 || b.arity() != 2 || a.size() != b.size() {
        return None;
    }
    let (ea, eb) = (a.unit()?, b.unit()?);
    let (oa, ob) = (element_orders(a)?, element_orders(b)?);
    if order_profile(a) != order_profile(b) {
        return None;
    }
    let gens = generators(a, ea);
    if gens.is_empty() {
        return Some(vec![eb]);
    }
    let mut map = vec![None; a.size()];
    map[ea] = Some(eb);
    (0..b.size())
        .filter(|&y| ob[y] == oa[gens[0]])
        .collect::<Vec<_>>().into_par_iter().find_map_first(|y| {
        let mut map = map.clone();
        map[gens[0]] = Some(y);
        if !propagate(a, b, &mut map) {
            return None;
        }
        extend(a, b, &gens[1..], &oa, &ob, map)
    })
}

fn extend(
    a: &FiniteMagma,
    b: &FiniteMagma,
    gens: &[usize],
    oa: &[usize],
    ob: &[usize],
    map: Vec<Option<usize>>,
) -> Option<Vec<usize>> {
    let Some((&g, rest)) = gens.split_first() else {
        let phi: Vec<usize> = map.into_iter().collect::<Option<_>>()?;
        let mut seen = vec![false; b.size()];
        if phi.iter().any(|&y| std::mem::replace(&mut seen[y], true)) {
            return None;
        }
        let hom = (0..a.size()).all(|x| (0..a.size()).all(|y| phi[a.mul(x, y)] == b.mul(phi[x], phi[y])));
        return hom.then_some(phi);
    };
    if map[g].is_some() {
        return extend(a, b, rest, oa, ob, map);
    }
    let used: Vec<bool> = {
        let mut u = vec![false; b.size()];
        map.iter().flatten().for_each(|&y| u[y] = true);
        u
    };
    (0..b.size())
        .filter(|&y| !used[y] && ob[y] == oa[g])
        .find_map(|y| {
            let mut next = map.clone();
            next[g] = Some(y);
            if !propagate(a, b, &mut next) {
                return None;
            }
            extend(a, b, rest, oa, ob, next)
        })
}

/// The name of an isomorphic catalog group, if any.
pub fn identify(m: &FiniteMagma) -> Option<String> {
    if m.arity() != 2 || m.unit().is_none() {
        return None;
    }
    catalog(m.size())
        .into_iter()
        .find(|(_, g)| find_isomorphism(m, g).is_some())
        .map(|(name, _)| name)
}

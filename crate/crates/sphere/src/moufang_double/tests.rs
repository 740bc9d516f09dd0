use super::*;
use crate::binary2d::BinaryForm;
use crate::constructions::{binarion, kd_double, DoublingParams};
use crate::loops::{cyclic, dicyclic, find_isomorphism, identify, unit_sphere_group, vector_label};
use crate::ring::{Integers, Ring};
use crate::spherical::{Domain, Side};
use num_bigint::BigInt;
use LoopPropertyId::*;

fn holds(m: &FiniteMagma, id: LoopPropertyId) -> bool {
    check_property(m, id).unwrap().holds()
}

fn every(eps: &str, mu: &str, n: usize) -> Vec<StageChoice> {
    vec![
        StageChoice {
            eps: Some(eps.parse().unwrap()),
            mu: Some(mu.parse().unwrap()),
        };
        n
    ]
}

fn names(reports: &[StageReport]) -> Vec<Option<String>> {
    reports.iter().map(|r| r.identification.clone()).collect()
}

#[test]
fn c2_chain_reaches_octonion_loop() {
    let (groups, reports) = doubling_chain(&FiniteGroup::seed("c2").unwrap(), &every("-1", "1", 3), Convention::Bullet).unwrap();
    let sizes: Vec<usize> = reports.iter().map(|r| r.size).collect();
    assert_eq!(sizes, [2, 4, 8, 16]);
    assert_eq!(
        names(&reports),
        [Some("C2".into()), Some("C4".into()), Some("Q8".into()), None]
    );
    let last = &reports[3];
    assert!(last.moufang && !last.associative && !last.commutative);
    assert!(last.to_string().ends_with("Moufang, non-associative, order 16"));
    assert!(reports[..3].iter().all(|r| r.associative));
    assert_eq!(last.order_profile, [(1, 1), (2, 1), (4, 14)].into_iter().collect());
    assert!(groups[3].is_central_involution());
}

#[test]
fn split_chain() {
    let (groups, reports) = doubling_chain(&FiniteGroup::seed("c2").unwrap(), &every("-1", "-1", 3), Convention::Bullet).unwrap();
    assert_eq!(
        names(&reports),
        [Some("C2".into()), Some("C2xC2".into()), Some("D4".into()), None]
    );
    let split = groups[3].magma();
    assert!(holds(split, Moufang));
    assert!(!holds(split, Associative));
    let (_, c2) = doubling_chain(&FiniteGroup::seed("c2").unwrap(), &every("-1", "1", 3), Convention::Bullet).unwrap();
    assert_ne!(reports[3].order_profile, c2[3].order_profile);
}

#[test]
fn c3_chain_gives_twelve_element_moufang_loop() {
    let (groups, reports) = doubling_chain(&FiniteGroup::seed("c3").unwrap(), &every("1", "1", 2), Convention::Bullet).unwrap();
    assert_eq!(reports[1].identification.as_deref(), Some("D3"));
    let m = groups[2].magma();
    assert_eq!(m.size(), 12);
    assert!(holds(m, Moufang));
    assert!(!holds(m, Associative));
}

#[test]
fn c6_chain() {
    let (groups, reports) = doubling_chain(&FiniteGroup::seed("c6").unwrap(), &every("-1", "1", 2), Convention::Bullet).unwrap();
    assert_eq!(reports[1].identification.as_deref(), Some("Dic3"));
    assert!(reports[1].associative);
    assert_eq!(reports[2].size, 24);
    assert_eq!(reports[2].kind(), "Moufang, non-associative");
    let t = ternary_double(&groups[1], 3, 0).unwrap();
    assert_eq!(t.size(), 24);
    assert!(find_isomorphism(groups[2].magma(), groups[2].magma()).is_some());
}

#[test]
fn dihedral_and_dicyclic_loops() {
    let dic3 = dicyclic_loop(&cyclic(6), 3).unwrap();
    assert_eq!(identify(dic3.magma()).as_deref(), Some("Dic3"));
    let d4 = dihedral_loop(&loops::small_group("C2xC2").unwrap()).unwrap();
    assert_eq!(identify(d4.magma()).as_deref(), Some("C2xC2xC2"));
    let d = dihedral_loop(&cyclic(4)).unwrap();
    assert_eq!(identify(d.magma()).as_deref(), Some("D4"));
    let big = dicyclic_loop(dic3.magma(), dic3.minus().unwrap()).unwrap();
    assert_eq!(big.size(), 24);
    assert!(holds(big.magma(), Moufang));
    assert!(!holds(big.magma(), Associative));
    assert!(matches!(dicyclic_loop(&cyclic(6), 2), Err(Error::InvalidParameter(_))));
}

#[test]
fn doubles_satisfy_m1_and_inversion_formula() {
    let seeds = ["c2", "c3", "c4", "c6", "c2xc2", "q8", "Dic3", "D4", "Dic6"];
    for name in seeds {
        let g = FiniteGroup::seed(name).unwrap();
        let mut params = vec![(g.unit(), g.unit())];
        if let Some(m) = g.minus() {
            params.extend([(m, g.unit()), (g.unit(), m), (m, m)]);
        }
        for (eps, mu) in params {
            for conv in [Convention::Bullet, Convention::BulletPrime] {
                let d = moufang_double(&g, eps, mu, conv).unwrap();
                let m = d.magma();
                assert!(holds(m, M1), "{name} {eps} {mu}");
                assert!(holds(m, Moufang));
                assert_eq!(holds(m, Associative), holds(g.magma(), Commutative), "{name}");
                assert!(d.is_central_involution());
                let inv = m.inversion().unwrap();
                for x in 0..m.size() {
                    let s = d.sharp(x);
                    assert_eq!(inv[x], m.mul(inv[m.mul(s, x)], s));
                }
            }
        }
    }
}

#[test]
fn ternary_double_matches_loop() {
    for name in ["c6", "q8", "S3", "Dic3"] {
        let g = FiniteGroup::seed(name).unwrap();
        let center: Vec<usize> = g.center().into_iter().filter(|&c| g.sharp(c) == c).collect();
        let order2: Vec<usize> = center.iter().copied().filter(|&c| g.mul(c, c) == g.unit()).collect();
        for &eps in &order2 {
            for &mu in &center {
                let d = moufang_double(&g, eps, mu, Convention::Bullet).unwrap();
                let t = ternary_double(&g, eps, mu).unwrap();
                let m = d.magma();
                for (i, v) in t.all_products().into_iter().enumerate() {
                    let k = m.size();
                    let (a, b, c) = (i / (k * k), (i / k) % k, i % k);
                    assert_eq!(v, m.mul(a, m.mul(d.sharp(b), c)), "{name}");
                }
            }
        }
    }
}

#[test]
fn bullet_prime_matches_right_table() {
    for name in ["S3", "q8", "Dic3"] {
        let g = FiniteGroup::seed(name).unwrap();
        let eps = g.minus().unwrap_or(g.unit());
        let mu = g.unit();
        let d = moufang_double(&g, eps, mu, Convention::BulletPrime).unwrap();
        let m = d.magma();
        let k = g.size();
        let op = FiniteMagma::binary_from_fn(g.magma().labels().to_vec(), |x, y| g.mul(y, x)).unwrap();
        let gop = FiniteGroup::new(op, g.involution().to_vec(), g.minus()).unwrap();
        let left = ternary_double(&gop, eps, mu).unwrap();
        for a in 0..2 * k {
            for b in 0..2 * k {
                for c in 0..2 * k {
                    assert_eq!(m.mul(m.mul(a, d.sharp(b)), c), left.tri(c, b, a));
                }
            }
        }
        let right = m.ternary_from_inverse_loop(loops::LoopSide::Right).unwrap();
        assert!(holds(&right, Mt1) && holds(&right, Mt2));
    }
}

#[test]
fn invalid_parameters() {
    let s3 = FiniteGroup::seed("S3").unwrap();
    assert!(matches!(
        moufang_double(&s3, s3.unit(), 1, Convention::Bullet),
        Err(Error::NonCentralParameter(_))
    ));
    let c4 = FiniteGroup::seed("c4").unwrap();
    assert!(matches!(
        moufang_double(&c4, 1, 0, Convention::Bullet),
        Err(Error::InvalidParameter(_))
    ));
    let bad = FiniteGroup::new(s3.magma().clone(), (0..6).collect(), None);
    assert!(matches!(bad, Err(Error::InvolutionNotAntiAutomorphism(_))));
    let c3 = FiniteGroup::seed("c3").unwrap();
    let err = doubling_chain(&c3, &every("-1", "1", 1), Convention::Bullet).unwrap_err();
    assert!(matches!(err, Error::InvalidStageParameter { stage: 1, .. }));
    let steps = vec![StageChoice::default(), StageChoice { eps: Some(Param::Element("1.1".into())), mu: None }];
    let err = doubling_chain(&c4, &steps, Convention::Bullet).unwrap_err();
    assert!(matches!(err, Error::InvalidStageParameter { stage: 2, .. }));
    assert!(FiniteGroup::seed("c5x").is_err());
}

#[test]
fn chain_defaults_carry_epsilon() {
    let g = FiniteGroup::seed("c2").unwrap();
    let steps = vec![
        StageChoice {
            eps: Some(Param::Minus),
            mu: None,
        },
        StageChoice::default(),
        StageChoice::default(),
    ];
    let (_, reports) = doubling_chain(&g, &steps, Convention::Bullet).unwrap();
    assert_eq!(
        names(&reports),
        [Some("C2".into()), Some("C4".into()), Some("Q8".into()), None]
    );
    let eps: Vec<Option<&str>> = reports.iter().map(|r| r.eps.as_deref()).collect();
    assert_eq!(eps, [None, Some("1"), Some("1.0"), Some("1.0.0")]);
}

/// `S₀ ⊔ S₁` inside the KD double (μ = −1) of a binarion is the dicyclic
/// loop of `S₀`, matched element by element.
fn kd_contains_dicyclic(a: i64, b: i64, c: i64, expected: &str) {
    let r = Integers;
    let base = binarion(&BinaryForm::from_ints(r, a, b, c)).unwrap();
    let s0 = unit_sphere_group(&base, Domain::Box(1)).unwrap();
    let minus = s0.index_of(&vector_label(&r, &[BigInt::from(-1), BigInt::from(0)])).unwrap();
    let dic = dicyclic_loop(&s0, minus).unwrap();
    let params = DoublingParams {
        mu: r.from_i64(-1),
        side: Side::Left,
    };
    let kd = kd_double(&base, &params);
    let whole = unit_sphere_group(&kd, Domain::Box(1)).unwrap();
    assert_eq!(whole.size(), dic.size());
    let k = s0.size();
    let zero = vec![BigInt::from(0); 2];
    let point = |t: usize| {
        let label = s0.label(t % k);
        let v: Vec<BigInt> = label[1..label.len() - 1].split(';').map(|s| s.parse().unwrap()).collect();
        if t < k {
            crate::linalg::concat(&v, &zero)
        } else {
            crate::linalg::concat(&zero, &v)
        }
    };
    for x in 0..2 * k {
        for y in 0..2 * k {
            assert_eq!(kd.mul(&point(x), &point(y)), point(dic.mul(x, y)));
        }
    }
    assert_eq!(identify(dic.magma()).as_deref(), Some(expected));
    assert!(find_isomorphism(&whole, dic.magma()).is_some());
}

#[test]
fn kd_double_contains_moufang_double() {
    kd_contains_dicyclic(1, -1, 1, "Dic3");
    kd_contains_dicyclic(1, 0, 1, "Q8");
    assert!(find_isomorphism(&dicyclic(2), &crate::loops::quaternion8()).is_some());
}

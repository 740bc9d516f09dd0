use super::*;
use crate::constructions::{kd_double, unarion, DoublingParams};
use crate::ring::{Integers, Ring, Zmod};
use crate::spherical::{BinaryAlgebra, Domain, Side};
use num_bigint::BigInt;
use LoopPropertyId::*;

fn holds(m: &FiniteMagma, id: LoopPropertyId) -> bool {
    check_property(m, id).unwrap().holds()
}

fn octonions<R: Ring>(r: R, side: Side) -> BinaryAlgebra<R> {
    let p = DoublingParams { mu: r.from_i64(-1), side };
    (0..3).fold(unarion(r.clone()), |a, _| kd_double(&a, &p))
}

/// The 16 unit octonions `±e_i` with `(xy♯)z`.
fn o16_ternary() -> FiniteMagma {
    let alg = octonions(Integers, Side::Right).ternary(Side::Right, &BigInt::from(1));
    sphere_loop(&alg, &BigInt::from(1), Domain::Box(1)).unwrap()
}

fn o16() -> FiniteMagma {
    let t = o16_ternary();
    let e = t.index_of("(1;0;0;0;0;0;0;0)").unwrap();
    t.homotope_at(e).unwrap()
}

#[test]
fn cyclic_group_properties() {
    let c4 = cyclic(4);
    for id in [Quasigroup, Loop, InverseLoop, Associative, Commutative, Moufang, M1, M2] {
        assert!(holds(&c4, id), "{id}");
    }
    assert_eq!(check_property(&c4, Ip).unwrap_err(), Error::ArityMismatch { expected: 3, got: 2 });
}

#[test]
fn non_loops_fail_with_witness() {
    let labels: Vec<String> = ["a", "b", "c"].map(String::from).to_vec();
    let sub = FiniteMagma::binary_from_fn(labels.clone(), |x, y| (x + 3 - y) % 3).unwrap();
    assert!(holds(&sub, Quasigroup));
    let rep = check_property(&sub, Loop).unwrap();
    assert!(!rep.holds());
    assert_eq!(rep.witness, Some(vec![]));
    let constant = FiniteMagma::binary_from_fn(labels, |_, _| 0).unwrap();
    let rep = check_property(&constant, Quasigroup).unwrap();
    assert_eq!(
        rep.witness,
        Some(vec![vec!["a".to_string()], vec!["a".into()], vec!["b".into()]])
    );
    assert_eq!(rep.result_line(), "RESULT quasigroup fails exhaustive-table");
}

#[test]
fn invalid_tables_are_rejected() {
    let labels: Vec<String> = ["a", "a"].map(String::from).to_vec();
    assert!(FiniteMagma::binary(labels, vec![vec![0, 0], vec![0, 0]]).is_err());
    let labels: Vec<String> = ["a", "b"].map(String::from).to_vec();
    assert!(FiniteMagma::binary(labels.clone(), vec![vec![0, 2], vec![0, 0]]).is_err());
    assert!(FiniteMagma::ternary(labels, vec![0; 7]).is_err());
}

#[test]
fn group_torsor() {
    let c6 = cyclic(6);
    for side in [LoopSide::Left, LoopSide::Right] {
        let t = c6.ternary_from_inverse_loop(side).unwrap();
        for id in [Ip, At2, Torsor, LeftChasles, RightChasles, TernaryInverseLoop] {
            assert!(holds(&t, id), "{id}");
        }
        assert!(holds(&t, At1));
        assert_eq!(t.homotope_at(0).unwrap(), c6);
    }
    let s3 = dihedral(3);
    let t = s3.ternary_from_inverse_loop(LoopSide::Left).unwrap();
    assert!(holds(&t, Torsor));
    assert!(!holds(&t, At1));
    for y in 0..6 {
        let h = t.homotope_at(y).unwrap();
        assert_eq!(h.unit(), Some(y));
        assert!(find_isomorphism(&h, &s3).is_some());
    }
}

#[test]
fn ternary_from_non_inverse_loop_is_rejected() {
    let labels: Vec<String> = ["a", "b", "c"].map(String::from).to_vec();
    let sub = FiniteMagma::binary_from_fn(labels, |x, y| (x + 3 - y) % 3).unwrap();
    assert!(matches!(
        sub.ternary_from_inverse_loop(LoopSide::Left),
        Err(Error::NotInverseLoop(_))
    ));
}

#[test]
fn catalog_identification() {
    assert_eq!(identify(&cyclic(4)).as_deref(), Some("C4"));
    assert_eq!(identify(&quaternion8()).as_deref(), Some("Q8"));
    assert_eq!(identify(&dihedral(4)).as_deref(), Some("D4"));
    assert_eq!(identify(&small_group("C2xC2").unwrap()).as_deref(), Some("C2xC2"));
    assert_eq!(identify(&small_group("C2xC6").unwrap()).as_deref(), Some("C2xC6"));
    assert_eq!(identify(&small_group("C3xC4").unwrap()).as_deref(), Some("C12"));
    assert_eq!(identify(&dicyclic(3)).as_deref(), Some("Dic3"));
    assert_eq!(identify(&small_group("S3").unwrap()).as_deref(), Some("D3"));
    assert!(find_isomorphism(&dihedral(4), &quaternion8()).is_none());
    assert_eq!(order_profile(&quaternion8()), [(1, 1), (2, 1), (4, 6)].into_iter().collect());
    for g in [quaternion8(), dicyclic(3), dihedral(5), small_group("C2xD4").unwrap()] {
        assert!(holds(&g, Associative));
        assert!(holds(&g, InverseLoop));
    }
}

#[test]
fn isomorphisms_survive_relabelling() {
    let q = quaternion8();
    let perm = [3usize, 7, 0, 5, 1, 6, 2, 4];
    let mut inv = [0usize; 8];
    for (i, &p) in perm.iter().enumerate() {
        inv[p] = i;
    }
    let labels = (0..8).map(|i| q.label(inv[i]).to_string()).collect();
    let shuffled = FiniteMagma::binary_from_fn(labels, |x, y| perm[q.mul(inv[x], inv[y])]).unwrap();
    let phi = find_isomorphism(&shuffled, &q).unwrap();
    for x in 0..8 {
        for y in 0..8 {
            assert_eq!(phi[shuffled.mul(x, y)], q.mul(phi[x], phi[y]));
        }
    }
    assert_eq!(identify(&shuffled).as_deref(), Some("Q8"));
}

#[test]
fn triality_of_identity() {
    let q = quaternion8();
    let id = Autotopy::identity(8, 2);
    let orbit = triality_orbit(&q, &id).unwrap();
    assert_eq!(orbit.len(), 6);
    assert!(orbit.iter().all(|a| *a == id));
}

#[test]
fn quaternion_hexad() {
    let q = quaternion8();
    let i = 1;
    let (la, ra, ba) = (q.left_mult(i), q.right_mult(i), q.bimult(i));
    let base = Autotopy::new(vec![la, ra], ba);
    assert!(autotopy_check(&q, &base).unwrap());
    let hex = hexad(&q, i).unwrap();
    let inv = q.inverse(i).unwrap();
    let expected = Autotopy::new(vec![q.right_mult(i), q.bimult(inv)], q.right_mult(inv));
    assert!(hex.contains(&expected));
    for a in &hex {
        assert!(autotopy_check(&q, a).unwrap());
    }
    for a in triality_orbit(&q, &base).unwrap() {
        assert!(autotopy_check(&q, &a).unwrap());
    }
    let bogus = Autotopy::new(vec![q.left_mult(i), q.left_mult(i)], q.bimult(i));
    assert!(!autotopy_check(&q, &bogus).unwrap());
}

#[test]
fn octonion_loop_of_order_sixteen() {
    let o = o16();
    assert_eq!(o.size(), 16);
    for id in [InverseLoop, Flexible, Alternative, Moufang, M1, M2] {
        assert!(holds(&o, id), "{id}");
    }
    assert!(!holds(&o, Associative));
    assert!(!holds(&o, Commutative));
    assert_eq!(order_profile(&o), [(1, 1), (2, 1), (4, 14)].into_iter().collect());
    assert_eq!(identify(&o), None);
    for a in [2, 5, 11] {
        for t in hexad(&o, a).unwrap() {
            assert!(autotopy_check(&o, &t).unwrap());
        }
    }
}

#[test]
fn octonion_ternary_loops() {
    let t = o16_ternary();
    let rebuilt = o16().ternary_from_inverse_loop(LoopSide::Right).unwrap();
    assert_eq!(t, rebuilt);
    for id in [
        Ip,
        Mt1,
        Mt2,
        RightChasles,
        RightTernaryMoufang,
        TernaryInverseLoop,
        TernaryFlexible,
        AutomorphicInverse,
        ReflectionSpace,
    ] {
        assert!(holds(&t, id), "{id}");
    }
    let at2 = check_property(&t, At2).unwrap();
    assert!(!at2.holds());
    let w: Vec<usize> = at2.witness.unwrap().iter().map(|s| t.index_of(&s[0]).unwrap()).collect();
    assert_ne!(t.tri(w[0], w[1], t.tri(w[2], w[3], w[4])), t.tri(t.tri(w[0], w[1], w[2]), w[3], w[4]));
    assert!(!holds(&t, LeftChasles));
    let left = o16().ternary_from_inverse_loop(LoopSide::Left).unwrap();
    for id in [LeftChasles, LeftTernaryMoufang, ReflectionSpace] {
        assert!(holds(&left, id), "{id}");
    }
    for y in [0, 3, 9] {
        let h = t.homotope_at(y).unwrap();
        assert!(holds(&h, Moufang));
        assert!(find_isomorphism(&h, &o16()).is_some());
    }
}

#[test]
fn ternary_moufang_bimultiplication_autotopies() {
    let right = o16_ternary();
    let left = o16().ternary_from_inverse_loop(LoopSide::Left).unwrap();
    for (a, b) in [(0, 1), (2, 7), (5, 12)] {
        let (r, bb) = (right.r_op(a, b), right.b_op(a, b));
        let aut = Autotopy::new(vec![r.clone(), bb.clone(), bb], r);
        assert!(autotopy_check(&right, &aut).unwrap());
        let (l, bb) = (left.l_op(a, b), left.b_op(a, b));
        let aut = Autotopy::new(vec![bb.clone(), bb, l.clone()], l);
        assert!(autotopy_check(&left, &aut).unwrap());
    }
}

#[test]
fn half_torsor_operator_inverses() {
    let o = o16();
    for side in [LoopSide::Left, LoopSide::Right] {
        let t = o.ternary_from_inverse_loop(side).unwrap();
        let id: Vec<usize> = (0..16).collect();
        for x in 0..16 {
            for y in 0..16 {
                assert_eq!(compose(&t.l_op(x, y), &t.l_op(y, x)), id);
                assert_eq!(compose(&t.r_op(x, y), &t.r_op(y, x)), id);
                assert_eq!(compose(&t.s_op(x, y), &t.s_op(y, x)), id);
            }
        }
    }
}

#[test]
fn group_sphere_is_torsor() {
    let r = Zmod::new(7).unwrap();
    let p = DoublingParams { mu: r.from_i64(-1), side: Side::Left };
    let binarion = kd_double(&unarion(r), &p);
    let alg = binarion.ternary(Side::Left, &1);
    let t = sphere_loop(&alg, &1, Domain::Finite).unwrap();
    assert_eq!(t.size(), 8);
    assert!(holds(&t, Torsor));
    assert_eq!(identify(&t.homotope_at(0).unwrap()).as_deref(), Some("C8"));
}

#[test]
fn eisenstein_hexagon() {
    let form = crate::binary2d::BinaryForm::from_ints(Integers, 1, -1, 1);
    let t = sphere_loop(&form.to_algebra(), &BigInt::from(1), Domain::Box(2)).unwrap();
    assert_eq!(t.size(), 6);
    assert!(holds(&t, Torsor));
    for y in 0..6 {
        assert_eq!(identify(&t.homotope_at(y).unwrap()).as_deref(), Some("C6"));
    }
}

#[test]
fn lazy_tables_match_dense() {
    let r = Zmod::new(3).unwrap();
    let alg = octonions(r, Side::Right).ternary(Side::Right, &1);
    assert!(matches!(
        sphere_loop(&alg, &1, Domain::Finite),
        Err(Error::TableTooLarge { size: 2160, cap: 64 })
    ));
    let c12 = cyclic(12);
    let t = c12.ternary_from_inverse_loop(LoopSide::Right).unwrap();
    let lazy = FiniteMagma::ternary_from_fn(
        (0..20).map(|i| format!("p{i}")).collect(),
        |x, y, z| (x + 20 - y + z) % 20,
    )
    .unwrap();
    assert!(lazy.is_lazy());
    assert!(!t.is_lazy());
    assert!(holds(&lazy, Torsor));
    assert_eq!(lazy.all_products().len(), 8000);
}

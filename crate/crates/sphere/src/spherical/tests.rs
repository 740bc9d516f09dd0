use super::*;
use crate::binary2d::BinaryForm;
use crate::linalg::module_elements;
use crate::ring::{Integers, Zmod};
use num_bigint::BigInt;

fn z(n: u64) -> Zmod {
    Zmod::new(n).unwrap()
}

#[test]
fn binary_algebra_matches_canonical() {
    let f = BinaryForm::from_ints(z(7), 3, 2, 5);
    let alg = f.to_algebra();
    let all = module_elements(&z(7), 2).unwrap();
    for x in all.iter().step_by(5) {
        for y in all.iter().step_by(3) {
            for w in all.iter().step_by(4) {
                assert_eq!(alg.tri(x, y, w), f.canonical_ternary(x, y, w));
            }
            assert_eq!(alg.tri(x, x, y), linalg::scale(&z(7), &alg.q(x), y));
        }
    }
}

#[test]
fn rank_mismatch_is_reported() {
    let alg = BinaryForm::from_ints(z(5), 1, 0, 1).to_algebra();
    assert!(matches!(
        alg.triple(&[1, 0], &[1], &[0, 1]),
        Err(Error::RankMismatch { .. })
    ));
}

#[test]
fn tc_exhaustive_module_z5() {
    let alg = BinaryForm::from_ints(z(5), 1, 1, 2).to_algebra();
    let rep = alg.verify(IdentityId::TC, &Strategy::ExhaustiveModule).unwrap();
    assert!(rep.holds());
    assert_eq!(rep.checked, 5u64.pow(6));
    let basis = alg.verify(IdentityId::TC, &Strategy::ExhaustiveBasis).unwrap();
    assert!(basis.holds());
}

#[test]
fn group_spherical_identities_on_binary() {
    let alg = BinaryForm::from_ints(z(3), 1, 2, 2).to_algebra();
    for id in [IdentityId::K, IdentityId::PA, IdentityId::COM, IdentityId::TC] {
        assert!(alg.verify(id, &Strategy::ExhaustiveBasis).unwrap().holds(), "{id}");
    }
    assert!(alg.verify(IdentityId::FUFO, &Strategy::ExhaustiveModule).unwrap().holds());
    assert!(matches!(
        alg.verify(IdentityId::FUFO, &Strategy::ExhaustiveBasis),
        Err(Error::InfeasibleStrategy(_))
    ));
}

#[test]
fn failing_witness_reevaluates() {
    let f = BinaryForm::from_ints(z(5), 1, 0, 1);
    let good = f.to_algebra();
    let mut c = good.structure_constants().to_vec();
    c[0] = vec![2, 0];
    let bad = TernaryAlgebra::new(good.space().clone(), c, "broken").unwrap();
    let rep = bad.verify(IdentityId::K, &Strategy::ExhaustiveBasis).unwrap();
    assert_eq!(rep.verdict, Verdict::Fails);
    let w = rep.witness.clone().unwrap();
    assert!(!IdentityId::K.holds_at(&bad, &w));
    assert_eq!(rep.result_line(), "RESULT K fails exhaustive-basis");
}

#[test]
fn sampled_reports_are_reproducible() {
    let alg = BinaryForm::from_ints(Integers, 2, -1, 3).to_algebra();
    let s = Strategy::Sampled { count: 200, seed: 7 };
    let a = alg.verify(IdentityId::TC, &s).unwrap();
    let b = alg.verify(IdentityId::TC, &s).unwrap();
    assert!(a.holds());
    assert_eq!(a, b);
    assert!(alg.verify(IdentityId::K, &Strategy::Box { bound: 2 }).unwrap().holds());
}

#[test]
fn inner_operators_on_binary() {
    let r = z(5);
    let f = BinaryForm::from_ints(r, 2, 1, 3);
    let alg = f.to_algebra();
    let all = module_elements(&r, 2).unwrap();
    let id = Matrix::identity(&r, 2);
    for a in &all {
        assert_eq!(alg.l_op(a, a), id.scale(&r, &alg.q(a)));
        assert_eq!(alg.r_op(a, a), id.scale(&r, &alg.q(a)));
        for b in &all {
            assert_eq!(alg.l_op(a, b), f.spiration_r(a, b));
            assert_eq!(alg.s_op(a, b), f.spiflection_s(a, b));
            let sum = alg.r_op(a, b).add(&r, &alg.r_op(b, a));
            assert_eq!(sum, id.scale(&r, &alg.space().bq(a, b)));
        }
    }
}

#[test]
fn operator_calculus_z3() {
    let r = z(3);
    for (a0, b0, c0) in [(1, 0, 1), (1, 1, 2), (2, 2, 1), (1, 0, 0)] {
        let alg = BinaryForm::from_ints(r, a0, b0, c0).to_algebra();
        let all = module_elements(&r, 2).unwrap();
        let id = Matrix::identity(&r, 2);
        let q = |x: &Vec<u64>| alg.q(x);
        for a in &all {
            for b in &all {
                let rab = alg.r_op(a, b);
                let lhs = rab.mul(&r, &rab);
                let rhs = rab
                    .scale(&r, &alg.space().bq(a, b))
                    .sub(&r, &id.scale(&r, &r.mul(&q(a), &q(b))));
                assert_eq!(lhs, rhs);
                assert_eq!(
                    alg.s_op(a, b).mul(&r, &alg.s_op(b, a)),
                    id.scale(&r, &r.mul(&q(a), &q(b)))
                );
                assert_eq!(rab.trace(&r), alg.space().bq(a, b));
                assert_eq!(rab.det(&r), r.mul(&q(a), &q(b)));
                assert_eq!(alg.s_op(a, b).trace(&r), 0);
                assert_eq!(alg.s_op(a, b).det(&r), r.neg(&r.mul(&q(a), &q(b))));
                assert_eq!(rab.adjugate(&r), alg.r_op(b, a));
                assert_eq!(alg.s_op(a, b).adjugate(&r), alg.s_op(a, b).scale(&r, &r.from_i64(-1)));
                for c in &all {
                    assert_eq!(rab.mul(&r, &alg.r_op(b, c)), alg.r_op(a, c).scale(&r, &q(b)));
                    assert_eq!(
                        alg.l_op(a, b).mul(&r, &alg.r_op(c, a)),
                        alg.r_op(c, a).mul(&r, &alg.l_op(a, b))
                    );
                }
            }
        }
    }
}

#[test]
fn homotope_examples() {
    let r = z(7);
    let alg = BinaryForm::from_ints(r, 1, 3, 2).to_algebra();
    let all = module_elements(&r, 2).unwrap();
    for e in all.iter().filter(|e| alg.space().is_invertible_vec(e)) {
        let h = alg.homotope(e).unwrap();
        assert!(h.satisfies(composition::BinaryIdentity::Unit));
        assert!(h.satisfies(composition::BinaryIdentity::CayleyHamilton));
        assert!(h.satisfies(composition::BinaryIdentity::Associative));
        assert!(h.has_scalar_involution());
        assert_eq!(h.ternary(Side::Left, &alg.q(e)), alg);
    }
    assert!(matches!(alg.homotope(&[0, 0]), Err(Error::NotInvertible(_))));
}

#[test]
fn torsor_and_spheres() {
    let r = z(7);
    let alg = BinaryForm::from_ints(r, 1, 0, 1).to_algebra();
    let sphere = alg.sphere_enumerate(&1, Domain::Finite).unwrap();
    for x in &sphere {
        for y in &sphere {
            assert_eq!(&alg.torsor_product(x, x, y).unwrap(), y);
            assert_eq!(&alg.torsor_product(y, x, x).unwrap(), y);
            for w in &sphere {
                assert!(sphere.contains(&alg.torsor_product(x, y, w).unwrap()));
            }
        }
    }
    let five = BinaryForm::from_ints(z(5), 1, 0, 1).to_algebra();
    let mut s5 = five.sphere_enumerate(&1, Domain::Finite).unwrap();
    s5.sort();
    assert_eq!(s5, vec![vec![0, 1], vec![0, 4], vec![1, 0], vec![4, 0]]);
    assert!(matches!(
        five.sphere_enumerate(&0, Domain::Finite),
        Err(Error::NotInvertible(_))
    ));
    let eis = BinaryForm::from_ints(Integers, 1, -1, 1).to_algebra();
    let hex = eis.sphere_enumerate(&BigInt::from(1), Domain::Box(2)).unwrap();
    assert_eq!(hex.len(), 6);
    assert!(matches!(
        eis.sphere_enumerate(&BigInt::from(1), Domain::Finite),
        Err(Error::InfeasibleStrategy(_))
    ));
}

#[test]
fn unit_presence() {
    let alg = BinaryForm::from_ints(z(4), 2, 0, 2).to_algebra();
    assert_eq!(alg.unit_presence(Domain::Finite), UnitPresence::Absent);
    let alg = BinaryForm::from_ints(Integers, 2, 0, 2).to_algebra();
    assert_eq!(alg.unit_presence(Domain::Box(2)), UnitPresence::UnknownBeyondBox);
    let alg = BinaryForm::from_ints(Integers, 1, 0, 1).to_algebra();
    assert_eq!(alg.unit_presence(Domain::Box(1)), UnitPresence::Found);
}

#[test]
fn coordinate_subspaces() {
    let alg = BinaryForm::from_ints(z(5), 1, 2, 3).to_algebra();
    assert!(alg.coordinate_subspace_closed(&[0]));
    assert!(alg.coordinate_subspace_closed(&[1]));
    assert!(alg.coordinate_subspace_closed(&[0, 1]));
}

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use hyperconvex::convex::{cartesian, hull_finite, intersect, is_convex, project, HPoint, Mode};
use hyperconvex::fm::{back_substitute, eliminate_all, farkas, feasible_strict, FarkasCertificate};
use hyperconvex::oracle::{random_system, Rng};
use hyperconvex::parse::parse_instance;
use hyperconvex::{GroupVal, HElem, HSet, Hyperfield, Sgn};

const INSTANCES: [&str; 3] = ["QxZ", "QxQ", "TR@Q"];

fn instance(i: usize) -> Hyperfield {
    parse_instance(INSTANCES[i]).unwrap()
}

/// Raw material for an element; `None` is zero.
type Seed = Option<(bool, i64, i64, i64, i64)>;

fn seed() -> impl Strategy<Value = Seed> {
    prop_oneof![
        1 => Just(None),
        8 => (any::<bool>(), 1i64..6, 1i64..4, -3i64..4, 1i64..3).prop_map(Some),
    ]
}

fn elem(i: usize, s: &Seed) -> HElem {
    let Some((neg, n, d, g, gd)) = *s else { return HElem::Zero };
    let coeff = BigRational::new(BigInt::from(if neg { -n } else { n }), BigInt::from(d));
    match i {
        0 => HElem::qpair(coeff, GroupVal::int(g)),
        1 => HElem::qpair(coeff, GroupVal::rat(g, gd)),
        _ => HElem::spair(if neg { Sgn::Neg } else { Sgn::Pos }, GroupVal::rat(g, gd)),
    }
}

/// Finite members of a sum, or a few sample members of a balanced one.
fn members(hf: &Hyperfield, s: &HSet, probe: &[HElem]) -> Vec<HElem> {
    match s.elements() {
        Some(xs) => xs.to_vec(),
        None => probe.iter().filter(|x| hf.contains(s, x)).cloned().collect(),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn addition_commutes(i in 0..3usize, a in seed(), b in seed()) {
        let hf = instance(i);
        let (a, b) = (elem(i, &a), elem(i, &b));
        prop_assert_eq!(hf.add(&a, &b).unwrap(), hf.add(&b, &a).unwrap());
    }

    #[test]
    fn inverse_is_unique(i in 0..3usize, a in seed(), b in seed()) {
        let hf = instance(i);
        let (a, b) = (elem(i, &a), elem(i, &b));
        let zero_in = hf.set_contains_zero(&hf.add(&a, &b).unwrap());
        prop_assert_eq!(zero_in, b == hf.neg(&a));
    }

    #[test]
    fn multiplication_distributes(i in 0..3usize, a in seed(), b in seed(), c in seed()) {
        let hf = instance(i);
        let (a, b, c) = (elem(i, &a), elem(i, &b), elem(i, &c));
        let lhs = hf.scale_set(&c, &hf.add(&a, &b).unwrap());
        let rhs = hf.add(&hf.mul(&c, &a), &hf.mul(&c, &b)).unwrap();
        prop_assert!(hf.subset(&lhs, &rhs) && hf.subset(&rhs, &lhs));
    }

    #[test]
    fn addition_associates_on_finite_sums(i in 0..3usize, a in seed(), b in seed(), c in seed()) {
        let hf = instance(i);
        let (a, b, c) = (elem(i, &a), elem(i, &b), elem(i, &c));
        let left = hf.add_sets(&hf.add(&a, &b).unwrap(), &HSet::single(c.clone())).unwrap();
        let right = hf.add_sets(&HSet::single(a), &hf.add(&b, &c).unwrap()).unwrap();
        prop_assert!(hf.subset(&left, &right) && hf.subset(&right, &left));
    }

    #[test]
    fn positives_partition_nonzero(i in 0..3usize, a in seed()) {
        let hf = instance(i);
        let a = elem(i, &a);
        if hf.is_zero(&a) {
            return Ok(());
        }
        let pa = hf.is_positive(&a).unwrap();
        prop_assert!(pa != hf.is_positive(&hf.neg(&a)).unwrap());
    }

    #[test]
    fn positives_closed_under_sum_and_product(i in 0..3usize, a in seed(), b in seed()) {
        let hf = instance(i);
        let (a, b) = (elem(i, &a), elem(i, &b));
        if hf.is_positive(&a).unwrap() && hf.is_positive(&b).unwrap() {
            prop_assert!(hf.set_subset_positive(&hf.add(&a, &b).unwrap()).unwrap());
            prop_assert!(hf.is_positive(&hf.mul(&a, &b)).unwrap());
        }
    }

    #[test]
    fn sign_map_is_a_homomorphism(i in 0..3usize, a in seed(), b in seed(), probe in prop::collection::vec(seed(), 8)) {
        let hf = instance(i);
        let (a, b) = (elem(i, &a), elem(i, &b));
        let probe: Vec<HElem> = probe.iter().map(|s| elem(i, s)).collect();
        let s = Hyperfield::Sign;
        let image = s.add(&hf.sgn_hom(&a).unwrap(), &hf.sgn_hom(&b).unwrap()).unwrap();
        for x in members(&hf, &hf.add(&a, &b).unwrap(), &probe) {
            prop_assert!(s.contains(&image, &hf.sgn_hom(&x).unwrap()));
        }
        prop_assert_eq!(hf.sgn_hom(&hf.mul(&a, &b)).unwrap(), s.mul(&hf.sgn_hom(&a).unwrap(), &hf.sgn_hom(&b).unwrap()));
    }

    #[test]
    fn farkas_certificates_verify(i in 0..3usize, d in 1..4usize, n in 1..5usize, rng_seed in any::<u64>()) {
        let hf = instance(i);
        let m = random_system(&hf, d, n, &mut Rng::new(rng_seed)).unwrap();
        let cert = farkas(&m).unwrap();
        prop_assert!(cert.verify(&m).unwrap());
        match cert {
            FarkasCertificate::Kernel(_) => prop_assert!(!feasible_strict(&m).unwrap()),
            FarkasCertificate::Separator(_) => prop_assert!(feasible_strict(&m).unwrap()),
            FarkasCertificate::UndecidedNonGeneric => {}
        }
    }

    #[test]
    fn feasibility_matches_back_substitution(i in 0..3usize, d in 1..4usize, n in 1..5usize, rng_seed in any::<u64>()) {
        let hf = instance(i);
        let m = random_system(&hf, d, n, &mut Rng::new(rng_seed)).unwrap();
        let trace = eliminate_all(&m).unwrap();
        if !trace.generic() {
            return Ok(());
        }
        if feasible_strict(&m).unwrap() {
            let x = back_substitute(&m, &trace).unwrap();
            prop_assert!(m.solves(&x).unwrap());
        } else {
            prop_assert!(back_substitute(&m, &trace).is_err());
        }
    }
}

fn sign_points(d: usize, idx: &[usize]) -> Vec<HPoint> {
    let els = Hyperfield::Sign.elements().unwrap();
    idx.iter().map(|&k| (0..d).map(|j| els[k / 3usize.pow(j as u32) % 3].clone()).collect()).collect()
}

fn sign_hull(d: usize, idx: &[usize]) -> Vec<HPoint> {
    hull_finite(&Hyperfield::Sign, &sign_points(d, idx), Mode::Convex).unwrap().points.into_iter().collect()
}

proptest! {
    #[test]
    fn convexity_survives_projection(idx in prop::collection::vec(0..27usize, 1..5), axis in 0..3usize) {
        let c = sign_hull(3, &idx);
        prop_assert!(is_convex(&Hyperfield::Sign, &project(&c, axis)).unwrap());
    }

    #[test]
    fn convexity_survives_products(a in prop::collection::vec(0..9usize, 1..4), b in prop::collection::vec(0..3usize, 1..3)) {
        let prod = cartesian(&sign_hull(2, &a), &sign_hull(1, &b));
        prop_assert!(is_convex(&Hyperfield::Sign, &prod).unwrap());
    }

    #[test]
    fn convexity_survives_intersection(a in prop::collection::vec(0..9usize, 1..4), b in prop::collection::vec(0..9usize, 1..4)) {
        let both = intersect(&[sign_hull(2, &a), sign_hull(2, &b)]);
        prop_assert!(is_convex(&Hyperfield::Sign, &both).unwrap());
    }
}

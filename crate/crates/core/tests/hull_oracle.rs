//! Closure hulls against the brute-force combination oracle.

use hyperconvex::convex::{bits, homogenize, FiniteSpace, HPoint, Mask, Mode};
use hyperconvex::oracle::oracle_hull;
use hyperconvex::Hyperfield;

fn subsets(n: usize, max: usize) -> impl Iterator<Item = Vec<usize>> {
    (1u32..1 << n).filter(move |m| m.count_ones() as usize <= max).map(move |m| (0..n).filter(|i| m >> i & 1 == 1).collect())
}

fn check_against_oracle(hf: &Hyperfield, max_size: usize, bound: usize) {
    let space = FiniteSpace::new(hf, 2).unwrap();
    for idx in subsets(space.len(), max_size) {
        let t: Vec<HPoint> = idx.iter().map(|&i| space.point(i).clone()).collect();
        let m = space.mask_of(&t).unwrap();
        for mode in [Mode::Convex, Mode::Conic] {
            let want = oracle_hull(&space, &t, mode, bound).unwrap() | m;
            assert_eq!(space.hull(m, mode), want, "{hf} {mode:?} {idx:?}");
        }
    }
}

#[test]
fn sign_plane_all_subsets() {
    check_against_oracle(&Hyperfield::Sign, 9, 6);
}

#[test]
fn h5_plane_small_subsets() {
    check_against_oracle(&Hyperfield::h5(), 3, 10);
}

#[test]
fn hull_is_idempotent_and_monotone() {
    for hf in [Hyperfield::Sign, Hyperfield::h5()] {
        let space = FiniteSpace::new(&hf, 2).unwrap();
        let masks: Vec<Mask> = (0..space.len()).flat_map(|i| (i..space.len()).map(move |j| (1 << i) | (1 << j))).collect();
        let hulls: Vec<Mask> = masks.iter().map(|&a| space.hull(a, Mode::Convex)).collect();
        for (&a, &ha) in masks.iter().zip(&hulls) {
            assert_eq!(ha & a, a);
            assert_eq!(space.hull(ha, Mode::Convex), ha);
            assert!(space.is_convex(ha, Mode::Convex));
            for (&b, &hb) in masks.iter().zip(&hulls) {
                if a & b == a {
                    assert_eq!(ha & !hb, 0);
                }
            }
        }
    }
}

#[test]
fn convex_hull_is_the_homogenized_cone_at_height_one() {
    for hf in [Hyperfield::Sign, Hyperfield::h5()] {
        let plane = FiniteSpace::new(&hf, 2).unwrap();
        let lifted = FiniteSpace::new(&hf, 3).unwrap();
        for idx in subsets(plane.len(), 2) {
            let t: Vec<HPoint> = idx.iter().map(|&i| plane.point(i).clone()).collect();
            let conv = plane.points_of(plane.hull(plane.mask_of(&t).unwrap(), Mode::Convex));
            let cone = lifted.points_of(lifted.hull(lifted.mask_of(&homogenize(&hf, &t)).unwrap(), Mode::Conic));
            let mut slice: Vec<HPoint> = cone
                .into_iter()
                .filter(|p| p[2] == hf.one())
                .map(|mut p| {
                    p.pop();
                    p
                })
                .collect();
            slice.sort();
            let mut conv = conv;
            conv.sort();
            assert_eq!(conv, slice, "{hf} {idx:?}");
        }
    }
}

#[test]
fn bits_round_trip() {
    let m: Mask = 0b1011_0010;
    let back = bits(m).fold(0 as Mask, |acc, i| acc | 1 << i);
    assert_eq!(back, m);
}

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::algebra::{Base, GroupKind, GroupVal, HElem, Hyperfield, Sgn, Unit};
use crate::convex::HPoint;
use crate::error::{Error, Result};

/// splitmix64.
#[derive(Clone, Debug)]
pub struct Rng {
    state: u64,
}

impl Rng {
    pub fn new(seed: u64) -> Self {
        Rng { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform in `0..n` (modulo bias is irrelevant at these sizes).
    pub fn below(&mut self, n: u64) -> u64 {
        self.next_u64() % n
    }

    /// Uniform in `lo..=hi`.
    pub fn range(&mut self, lo: i64, hi: i64) -> i64 {
        lo + self.below((hi - lo + 1) as u64) as i64
    }

    pub fn chance(&mut self, num: u64, den: u64) -> bool {
        self.below(den) < num
    }
}

fn group_val(rng: &mut Rng, g: &GroupKind) -> GroupVal {
    let half = |rng: &mut Rng| BigRational::new(BigInt::from(rng.range(-8, 8)), BigInt::from(2));
    match g {
        GroupKind::Integer => GroupVal::int(rng.range(-4, 4)),
        GroupKind::Rational => GroupVal::Rat(half(rng)),
        GroupKind::Lex(n) => GroupVal::Lex((0..*n).map(|_| half(rng)).collect()),
    }
}

fn coefficient(rng: &mut Rng) -> BigRational {
    let mut n = rng.range(-8, 7);
    if n >= 0 {
        n += 1;
    }
    BigRational::new(BigInt::from(n), BigInt::from(rng.range(1, 2)))
}

/// A random element; zero with probability `1/8`. Finite instances draw
/// uniformly.
pub fn random_elem(hf: &Hyperfield, rng: &mut Rng) -> HElem {
    if let Some(els) = hf.elements() {
        return els[rng.below(els.len() as u64) as usize].clone();
    }
    if rng.chance(1, 8) {
        return hf.zero();
    }
    match hf {
        Hyperfield::Rational => HElem::from_rational(coefficient(rng)),
        Hyperfield::Semidirect { base, group } => {
            let g = group_val(rng, group);
            match base {
                Base::Krasner => HElem::Pair(Unit::One, g),
                Base::Sign => HElem::spair(if rng.chance(1, 2) { Sgn::Pos } else { Sgn::Neg }, g),
                Base::Field => HElem::qpair(coefficient(rng), g),
            }
        }
        _ => unreachable!("finite instances handled above"),
    }
}

/// A random positive element.
pub fn random_positive(hf: &Hyperfield, rng: &mut Rng) -> Result<HElem> {
    for _ in 0..64 {
        let a = random_elem(hf, rng);
        if hf.is_zero(&a) {
            continue;
        }
        return Ok(if hf.is_positive(&a)? { a } else { hf.neg(&a) });
    }
    Ok(hf.one())
}

/// `n` points of `hf^d`: coefficients in `[-8, 8]` (halves allowed), group
/// values in `-4..=4` (or the half-integer grid for dense groups), zero
/// coordinates with probability `1/8`. With seed 0, `d = 2`, `n = 1` the
/// point is `((8,-4), (-7,-1))` over `QxZ` and `(-1@2, +1@3)` over `TR@Q`.
pub fn sample_semidirect_points(hf: &Hyperfield, d: usize, n: usize, seed: u64) -> Result<Vec<HPoint>> {
    if hf.group().is_none() {
        return Err(Error::Unsupported(format!("{hf} is not a semidirect instance")));
    }
    let mut rng = Rng::new(seed);
    Ok((0..n).map(|_| (0..d).map(|_| random_elem(hf, &mut rng)).collect()).collect())
}

//! Seeded sampling of small-height rationals, coefficients and branch
//! triples for the randomized checks.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::correspondence::{BranchTriple, Normalization};
use crate::hessian::PentahedralData;
use crate::invariant::is_kummer_hessian;
use crate::scalar::rational;
use crate::Rational;

pub const DEFAULT_SEED: u64 = 20240611;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A nonzero rational `p/q` with `|p| <= max_num`, `1 <= q <= max_den`.
pub fn small_rational(rng: &mut impl Rng, max_num: i64, max_den: i64) -> Rational {
    loop {
        let p = rng.gen_range(-max_num..=max_num);
        if p != 0 {
            return rational(p, rng.gen_range(1..=max_den));
        }
    }
}

pub fn random_mu(rng: &mut impl Rng) -> PentahedralData {
    PentahedralData::new(std::array::from_fn(|_| small_rational(rng, 5, 3))).expect("nonzero")
}

/// Coefficients off the Kummer locus.
pub fn random_mu_off_locus(rng: &mut impl Rng) -> PentahedralData {
    loop {
        let d = random_mu(rng);
        if !is_kummer_hessian(&d) {
            return d;
        }
    }
}

/// Coefficients off the locus for which `alpha` and `beta` are defined.
pub fn random_mu_with_alpha_beta(rng: &mut impl Rng) -> PentahedralData {
    loop {
        let d = random_mu_off_locus(rng);
        if crate::correspondence::alpha_beta(&d).is_ok() {
            return d;
        }
    }
}

pub fn random_triple(rng: &mut impl Rng, variant: Normalization) -> BranchTriple {
    loop {
        let [a, b, e] = std::array::from_fn(|_| small_rational(rng, 7, 4));
        if let Ok(t) = BranchTriple::new(a, b, e, variant) {
            return t;
        }
    }
}

/// A point of the Kummer locus with `alpha` and `beta` defined, from a
/// random triple.
pub fn random_locus_mu(rng: &mut impl Rng) -> PentahedralData {
    loop {
        let t = random_triple(rng, Normalization::DMinusOne);
        let d = crate::correspondence::branch_to_mu(&t).expect("admissible");
        if crate::correspondence::alpha_beta(&d).is_ok() {
            return d;
        }
    }
}

/// All admissible triples with entries from a fixed set of small values.
pub fn triple_grid(variant: Normalization) -> Vec<BranchTriple> {
    let values: Vec<Rational> = [(-3, 1), (-2, 1), (-1, 2), (1, 3), (1, 2), (2, 1), (3, 1), (5, 2), (-4, 3)]
        .iter()
        .map(|&(p, q)| rational(p, q))
        .filter(|v| !v.is_zero() && *v != variant.d())
        .collect();
    let mut out = Vec::new();
    for a in &values {
        for b in &values {
            for e in &values {
                if let Ok(t) = BranchTriple::new(a.clone(), b.clone(), e.clone(), variant) {
                    out.push(t);
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic() {
        let draw = |seed| {
            let mut r = rng(seed);
            (0..5).map(|_| random_mu(&mut r)).collect::<Vec<_>>()
        };
        assert_eq!(draw(7), draw(7));
        assert_ne!(draw(7), draw(8));
    }

    #[test]
    fn grid_size() {
        assert!(triple_grid(Normalization::DMinusOne).len() >= 100);
        assert!(triple_grid(Normalization::DPlusOne).len() >= 100);
    }
}

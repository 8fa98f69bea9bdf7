//! The Lambda ring scheme: the power-series tower `k[[c_1..c_N]]` with the
//! coaddition of the universal product of power series, the multiplicative
//! costructure computed from the symmetric-function oracle, the counit family
//! `eps_a(c_n) = binom(a, n)`, and the induced module action.

use super::symfun::{SymmetricOracle, TensorTerm};
use crate::exact_algebra::map::AlgebraMap;
use crate::exact_algebra::poly::{Algebra, Generator, Polynomial, TruncatedAlgebra};
use crate::exact_algebra::ring::{binomial, CoefficientRing};
use crate::exact_algebra::tensor::{tensor_many, TensorAlgebra};
use crate::pro_tower::Tower;
use crate::schemes_hopf::structure::SchemeStructure;
use std::sync::Arc;

pub fn lambda_tower(ring: CoefficientRing) -> Tower {
    Tower::from_fn("Lambda", move |n| lambda_level(ring, n))
}

pub fn lambda_level(ring: CoefficientRing, n: u32) -> Algebra {
    let gens = (1..=n).map(|i| Generator::even(format!("c{i}"), i)).collect();
    TruncatedAlgebra::free(ring, gens, n)
}

/// `psi_plus(c_m) = sum_{i+j=m} c_i (x) c_j` (with `c_0 = 1`) in the square
/// context with total weight bound `n`.
pub fn lambda_psi_plus(ring: CoefficientRing, n: u32) -> AlgebraMap {
    let a = lambda_level(ring, n);
    let sq = tensor_many(&[&a, &a], n);
    let images = (1..=n)
        .map(|m| {
            let mut acc = Polynomial::zero(&sq.alg);
            for i in 0..=m {
                let j = m - i;
                let left = c_power(&a, i);
                let right = c_power(&a, j);
                acc = acc.add(&sq.pure_tensor(&[&left, &right]));
            }
            acc
        })
        .collect();
    AlgebraMap { source: a.clone(), target: sq.alg.clone(), images, weight_scale: Some(1) }
}

fn c_power(a: &Algebra, i: u32) -> Polynomial {
    if i == 0 {
        Polynomial::one(a)
    } else {
        Polynomial::generator_named(a, &format!("c{i}"))
    }
}

/// Convert an oracle tensor term table into polynomial images in the square
/// context (bound `2n`, scale 2).
fn psi_times_images(
    a: &Algebra,
    sq2: &TensorAlgebra,
    table: &[Vec<TensorTerm>],
    n: u32,
) -> Vec<Polynomial> {
    (1..=n as usize)
        .map(|m| {
            let mut acc = Polynomial::zero(&sq2.alg);
            for term in &table[m] {
                let left = partition_monomial(a, &term.left);
                let right = partition_monomial(a, &term.right);
                let pure = sq2.pure_tensor(&[&left, &right]);
                acc = acc.add(&pure.scale(&a.ring.from_bigint(term.coeff.clone())));
            }
            acc
        })
        .collect()
}

fn partition_monomial(a: &Algebra, exps: &[u32]) -> Polynomial {
    let ex: Vec<(usize, u32)> = exps
        .iter()
        .enumerate()
        .filter(|&(_, &e)| e > 0)
        .map(|(i, &e)| (a.gen_index(&format!("c{}", i + 1)).expect("generator"), e))
        .collect();
    Polynomial::monomial(a, &ex, a.ring.one())
}

/// The full Lambda scheme structure at truncation weight `n_max`.
///
/// The multiplicative costructure is computed by the symmetric-function
/// oracle with `v = n_max` variables per alphabet (results are stable in v
/// from that point on; `SymmetricOracle::stability_check` verifies this).
pub fn lambda_structure(ring: CoefficientRing, n_max: u32) -> SchemeStructure {
    lambda_structure_bounded(ring, n_max, n_max)
}

/// Lambda scheme with the multiplicative table computed only through
/// `mult_bound`: the additive structure is exact at every level, while
/// `psi_times`, the counit products, and the action are valid at levels
/// `<= mult_bound`. The purely additive functors (primitives,
/// indecomposables) work at any level.
pub fn lambda_structure_bounded(
    ring: CoefficientRing,
    n_max: u32,
    mult_bound: u32,
) -> SchemeStructure {
    assert!(n_max >= 1);
    let oracle = SymmetricOracle::new(mult_bound.max(1) as usize);
    let table = Arc::new(oracle.psi_times_table(mult_bound));
    let carrier = lambda_tower(ring);

    let psi_plus = Arc::new(move |n: u32| lambda_psi_plus(ring, n));

    let table2 = table.clone();
    let psi_times = Arc::new(move |n: u32| {
        let a = lambda_level(ring, n);
        let sq2 = tensor_many(&[&a, &a], 2 * n);
        let images = psi_times_images(&a, &sq2, &table2, n);
        AlgebraMap { source: a.clone(), target: sq2.alg.clone(), images, weight_scale: Some(2) }
    });

    let eps_zero = Arc::new(move |n: u32| lambda_counit(ring, 0, n));
    let counit = Arc::new(move |a: i64, n: u32| lambda_counit(ring, a, n));

    let table3 = table.clone();
    let action = Arc::new(move |x: i64, n: u32| lambda_action(ring, &table3, x, n));

    SchemeStructure {
        name: format!("Lambda (bound {n_max}, {ring:?})"),
        carrier,
        psi_plus,
        psi_plus_reindex: crate::schemes_hopf::structure::identity_reindex(),
        eps_zero,
        psi_times: Some(psi_times),
        psi_times_reindex: crate::schemes_hopf::structure::identity_reindex(),
        counit: Some(counit),
        action,
        action_source_level: crate::schemes_hopf::structure::same_level_action(),
        l_modulus: None,
        unital: true,
        truncation_points: true,
    }
}

/// `eps_a(c_n) = binom(a, n)`.
pub fn lambda_counit(ring: CoefficientRing, a: i64, n: u32) -> AlgebraMap {
    let src = lambda_level(ring, n);
    let base = TruncatedAlgebra::base(ring);
    let images = (1..=n)
        .map(|m| Polynomial::constant(&base, ring.from_bigint(binomial(a, m as u64))))
        .collect();
    AlgebraMap { source: src, target: base, images, weight_scale: None }
}

/// `lambda_x = (eps_x (x) id) psi_times`: the action of the integer x.
fn lambda_action(
    ring: CoefficientRing,
    table: &[Vec<TensorTerm>],
    x: i64,
    n: u32,
) -> AlgebraMap {
    let a = lambda_level(ring, n);
    let images = (1..=n as usize)
        .map(|m| {
            let mut acc = Polynomial::zero(&a);
            for term in &table[m] {
                // eps_x of the left part: product of binom(x, i)^e_i
                let mut coeff = ring.one();
                for (i, &e) in term.left.iter().enumerate() {
                    for _ in 0..e {
                        coeff = ring.mul(&coeff, &ring.from_bigint(binomial(x, (i + 1) as u64)));
                    }
                }
                coeff = ring.mul(&coeff, &ring.from_bigint(term.coeff.clone()));
                acc = acc.add(&partition_monomial(&a, &term.right).scale(&coeff));
            }
            acc
        })
        .collect();
    AlgebraMap { source: a.clone(), target: a.clone(), images, weight_scale: Some(1) }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::schemes_hopf::validate::validate;

    #[test]
    fn psi_plus_formula() {
        let f = lambda_psi_plus(CoefficientRing::Integers, 3);
        let a = lambda_level(CoefficientRing::Integers, 3);
        let sq = tensor_many(&[&a, &a], 3);
        let rendered = sq.render(&f.images[1]);
        assert_eq!(rendered, "c2\u{2297}1 + c1\u{2297}c1 + 1\u{2297}c2");
    }

    #[test]
    fn psi_times_matches_displayed_formulas() {
        let s = lambda_structure(CoefficientRing::Integers, 3);
        let psix = s.psi_times.as_ref().unwrap()(3);
        let a = lambda_level(CoefficientRing::Integers, 3);
        let sq2 = tensor_many(&[&a, &a], 6);
        assert_eq!(sq2.render(&psix.images[0]), "c1\u{2297}c1");
        // canonical grevlex term order; same terms as the displayed formula
        assert_eq!(
            sq2.render(&psix.images[1]),
            "c2\u{2297}c1^2 + c1^2\u{2297}c2 - 2*c2\u{2297}c2"
        );
    }

    #[test]
    fn action_of_two_on_c1() {
        // lambda_2(c_1) = 2 c_1 (rank-1 additivity)
        let s = lambda_structure(CoefficientRing::Integers, 2);
        let act = (s.action)(2, 2);
        let a = lambda_level(CoefficientRing::Integers, 2);
        let c1 = Polynomial::generator_named(&a, "c1");
        assert_eq!(act.images[0], c1.scale_i64(2));
    }

    #[test]
    fn lambda_validates_at_low_depth() {
        let s = lambda_structure(CoefficientRing::Integers, 3);
        let report = validate(&s, 3);
        assert!(report.all_passed(), "{report}");
    }
}

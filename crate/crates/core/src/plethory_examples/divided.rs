//! The divided power algebra as a formal module scheme with its non-unital
//! multiplicative costructure: `x_i x_j = binom(i+j, i) x_{i+j}`, the
//! coaddition `x_n -> sum x_i (x) x_j`, and `psi_times(x_n) = n! x_n (x) x_n`.

use crate::exact_algebra::map::AlgebraMap;
use crate::exact_algebra::poly::{Algebra, Generator, Monomial, Polynomial, RewriteRule, TruncatedAlgebra};
use crate::exact_algebra::ring::{binomial, factorial, CoefficientRing};
use crate::exact_algebra::tensor::tensor_many;
use crate::pro_tower::Tower;
use crate::schemes_hopf::structure::{identity_reindex, SchemeStructure};
use std::sync::Arc;

/// Level `n` of the divided power tower: generators `x_1..x_n` with the
/// binomial relations, truncated at weight `n` (`H(n) = H/(x_{n+1}, ...)`).
pub fn divided_level(ring: CoefficientRing, n: u32) -> Algebra {
    let gens: Vec<Generator> = (1..=n).map(|i| Generator::even(format!("x{i}"), i)).collect();
    let proto = TruncatedAlgebra::free(ring, gens.clone(), n);
    let mut rules = Vec::new();
    for i in 1..=n as usize {
        for j in i..=n as usize {
            if (i + j) as u32 > n {
                continue;
            }
            let lhs = if i == j {
                Monomial::from_exps(&proto, &[(i - 1, 2)])
            } else {
                Monomial::from_exps(&proto, &[(i - 1, 1), (j - 1, 1)])
            };
            let rhs = vec![(
                Monomial::from_exps(&proto, &[(i + j - 1, 1)]),
                binomial((i + j) as i64, i as u64),
            )];
            rules.push(RewriteRule { lhs, rhs });
        }
    }
    TruncatedAlgebra::with_relations(ring, gens, n, rules)
}

pub fn divided_tower(ring: CoefficientRing) -> Tower {
    Tower::from_fn("DividedPowers", move |n| divided_level(ring, n))
}

fn x_power(a: &Algebra, i: u32) -> Polynomial {
    if i == 0 {
        Polynomial::one(a)
    } else {
        Polynomial::generator_named(a, &format!("x{i}"))
    }
}

/// The divided power scheme structure, flagged non-unital.
pub fn divided_powers(ring: CoefficientRing, n_max: u32) -> SchemeStructure {
    let carrier = divided_tower(ring);

    let psi_plus = Arc::new(move |n: u32| {
        let a = divided_level(ring, n);
        let sq = tensor_many(&[&a, &a], n);
        let images = (1..=n)
            .map(|m| {
                let mut acc = Polynomial::zero(&sq.alg);
                for i in 0..=m {
                    let left = x_power(&a, i);
                    let right = x_power(&a, m - i);
                    acc = acc.add(&sq.pure_tensor(&[&left, &right]));
                }
                acc
            })
            .collect();
        AlgebraMap { source: a.clone(), target: sq.alg.clone(), images, weight_scale: Some(1) }
    });

    let psi_times = Arc::new(move |n: u32| {
        let a = divided_level(ring, n);
        let sq2 = tensor_many(&[&a, &a], 2 * n);
        let images = (1..=n)
            .map(|m| {
                let xm = x_power(&a, m);
                sq2.pure_tensor(&[&xm, &xm]).scale(&ring.from_bigint(factorial(m as u64)))
            })
            .collect();
        AlgebraMap { source: a.clone(), target: sq2.alg.clone(), images, weight_scale: Some(2) }
    });

    let eps_zero = Arc::new(move |n: u32| {
        let a = divided_level(ring, n);
        let base = TruncatedAlgebra::base(ring);
        AlgebraMap::mixed(&a, &base, vec![Polynomial::zero(&base); n as usize]).expect("eps_0")
    });

    // module action: lambda_c(x_m) = c^m x_m
    let action = Arc::new(move |c: i64, n: u32| {
        let a = divided_level(ring, n);
        let images = (1..=n)
            .map(|m| {
                let mut coeff = ring.one();
                for _ in 0..m {
                    coeff = ring.mul(&coeff, &ring.from_i64(c));
                }
                x_power(&a, m).scale(&coeff)
            })
            .collect();
        AlgebraMap { source: a.clone(), target: a.clone(), images, weight_scale: Some(1) }
    });

    SchemeStructure {
        name: format!("DividedPowers (bound {n_max}, {ring:?})"),
        carrier,
        psi_plus,
        psi_plus_reindex: identity_reindex(),
        eps_zero,
        psi_times: Some(psi_times),
        psi_times_reindex: identity_reindex(),
        counit: None,
        action,
        action_source_level: crate::schemes_hopf::structure::same_level_action(),
        l_modulus: None,
        unital: false,
        truncation_points: true,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::schemes_hopf::validate::validate;

    #[test]
    fn binomial_multiplication() {
        let a = divided_level(CoefficientRing::Integers, 4);
        let x1 = Polynomial::generator_named(&a, "x1");
        let x2 = Polynomial::generator_named(&a, "x2");
        let x3 = Polynomial::generator_named(&a, "x3");
        assert_eq!(x1.mul(&x2), x3.scale_i64(3));
        assert_eq!(x1.mul(&x1), x2.scale_i64(2));
    }

    #[test]
    fn psi_times_is_factorial_diagonal() {
        let s = divided_powers(CoefficientRing::Integers, 3);
        let psix = s.psi_times.as_ref().unwrap()(2);
        let a = divided_level(CoefficientRing::Integers, 2);
        let sq2 = tensor_many(&[&a, &a], 4);
        assert_eq!(sq2.render(&psix.images[1]), "2*x2\u{2297}x2");
    }

    #[test]
    fn validates_as_nonunital_scheme() {
        let s = divided_powers(CoefficientRing::Integers, 4);
        let report = validate(&s, 4);
        assert!(report.all_passed(), "{report}");
    }
}

//! Property tests for the exact-algebra substrate: graded commutativity,
//! associativity and distributivity on random sparse polynomials, map
//! composition versus matrix products, Smith form contracts, and JSON
//! round-trips.

use num_bigint::BigInt;
use plethcalc_core::exact_algebra::json::{polynomial_from_json, polynomial_to_json};
use plethcalc_core::exact_algebra::matrix::MatExact;
use plethcalc_core::exact_algebra::poly::{Algebra, Generator, Parity, Polynomial, TruncatedAlgebra};
use plethcalc_core::exact_algebra::ring::CoefficientRing;
use proptest::prelude::*;

fn mixed_algebra() -> Algebra {
    TruncatedAlgebra::free(
        CoefficientRing::Integers,
        vec![
            Generator::even("a", 1),
            Generator::even("b", 2),
            Generator { name: "x".to_string(), weight: 1, parity: Parity::Odd },
            Generator { name: "y".to_string(), weight: 3, parity: Parity::Odd },
        ],
        8,
    )
}

prop_compose! {
    fn arb_poly()(terms in proptest::collection::vec(
        (proptest::collection::vec(0usize..4, 0..3), -4i64..=4),
        0..5,
    )) -> Vec<(Vec<usize>, i64)> {
        terms
    }
}

fn poly_from(alg: &Algebra, data: &[(Vec<usize>, i64)]) -> Polynomial {
    let mut p = Polynomial::zero(alg);
    for (gens, c) in data {
        let mut exps = vec![0u32; alg.generators.len()];
        for &g in gens {
            exps[g] += 1;
        }
        let ex: Vec<(usize, u32)> = exps
            .iter()
            .enumerate()
            .filter(|&(_, &e)| e > 0)
            .map(|(g, &e)| (g, e))
            .collect();
        p = p.add(&Polynomial::monomial(alg, &ex, alg.ring.from_i64(*c)));
    }
    p
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn graded_commutativity(pa in arb_poly(), pb in arb_poly()) {
        let alg = mixed_algebra();
        let p = poly_from(&alg, &pa);
        let q = poly_from(&alg, &pb);
        // per homogeneous-parity pieces: pq = (-1)^{|p||q|} qp; on full
        // polynomials split by parity
        for (ppar, qpar) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
            let pp = parity_part(&p, ppar);
            let qq = parity_part(&q, qpar);
            let lhs = pp.mul(&qq);
            let rhs = qq.mul(&pp);
            if ppar * qpar == 1 {
                prop_assert_eq!(lhs, rhs.neg());
            } else {
                prop_assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn associativity_distributivity(pa in arb_poly(), pb in arb_poly(), pc in arb_poly()) {
        let alg = mixed_algebra();
        let p = poly_from(&alg, &pa);
        let q = poly_from(&alg, &pb);
        let r = poly_from(&alg, &pc);
        prop_assert_eq!(p.mul(&q).mul(&r), p.mul(&q.mul(&r)));
        prop_assert_eq!(p.mul(&q.add(&r)), p.mul(&q).add(&p.mul(&r)));
    }

    #[test]
    fn polynomial_json_roundtrip(pa in arb_poly()) {
        let alg = mixed_algebra();
        let p = poly_from(&alg, &pa);
        let back = polynomial_from_json(&polynomial_to_json(&p)).unwrap();
        prop_assert_eq!(p, back);
    }

    #[test]
    fn smith_form_contract(entries in proptest::collection::vec(-6i64..=6, 12)) {
        let z = CoefficientRing::Integers;
        let m = MatExact::from_i64(z, entries.chunks(4).map(|c| c.to_vec()).collect());
        let sf = m.smith_form();
        // U M V = D exactly
        prop_assert_eq!(sf.u.mul(&m).mul(&sf.v), sf.d.clone());
        // divisibility chain
        let diag = sf.diagonal();
        for w in diag.windows(2) {
            if !w[0].eq(&BigInt::from(0)) {
                prop_assert!((&w[1] % &w[0]).eq(&BigInt::from(0)), "chain {:?}", diag);
            } else {
                prop_assert!(w[1].eq(&BigInt::from(0)));
            }
        }
        // U, V unimodular: their Smith diagonals are all ones
        for uv in [&sf.u, &sf.v] {
            let d = uv.smith_form().diagonal();
            prop_assert!(d.iter().all(|x| x.eq(&BigInt::from(1))));
        }
    }

    #[test]
    fn kernel_vectors_annihilate(entries in proptest::collection::vec(-4i64..=4, 12)) {
        let z = CoefficientRing::Integers;
        let m = MatExact::from_i64(z, entries.chunks(4).map(|c| c.to_vec()).collect());
        for v in m.kernel_basis() {
            let image = m.apply(&v);
            prop_assert!(image.iter().all(|s| s.is_zero()));
        }
    }
}

fn parity_part(p: &Polynomial, parity: usize) -> Polynomial {
    let alg = &p.algebra;
    let mut out = Polynomial::zero(alg);
    for (m, c) in &p.terms {
        let par = match m.parity(alg) {
            Parity::Even => 0,
            Parity::Odd => 1,
        };
        if par == parity {
            out = out.add(&Polynomial::monomial(
                alg,
                &m.exps().iter().map(|&(g, e)| (g as usize, e as u32)).collect::<Vec<_>>(),
                c.clone(),
            ));
        }
    }
    out
}

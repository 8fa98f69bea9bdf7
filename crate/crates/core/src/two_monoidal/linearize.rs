//! Linearizations of the Lambda plethory: the indecomposables and primitives
//! with their bimonoid structure maps on representing towers. The
//! multiplication is the two-sided indecomposable (resp. primitive) class of
//! the multiplicative costructure; the composition comultiplication comes
//! from plethysm through the strict compatibility of Q with the composition
//! product.

use super::bimod::{singleton_map, unit_i, unit_j, Map, Obj};
use crate::exact_algebra::map::{GradedModule, LinearMapByWeight};
use crate::exact_algebra::matrix::MatExact;
use crate::exact_algebra::poly::{Monomial, Polynomial};
use crate::exact_algebra::ring::{CoefficientRing, Scalar};
use crate::plethory_examples::lambda::{lambda_level, lambda_structure};
use crate::plethory_examples::plethysm::plethysm;
use crate::plethory_examples::symfun::newton_polynomial;
use crate::schemes_hopf::pq::indecomposables;
use std::collections::BTreeMap;

/// A bimonoid candidate in the formal bimodule category, all maps written on
/// representing towers:
///
/// * `mul`: `H -> H (x) H` (the representing map of the tensor multiplication);
/// * `unit`: `H -> I` when the unit exists over the coefficient ring;
/// * `comul`: `(H o H) -> H` (representing the composition comultiplication);
/// * `counit`: `J -> H`.
#[derive(Clone, Debug)]
pub struct BimonoidCandidate {
    pub name: String,
    pub carrier: Obj,
    pub mul: Map,
    pub unit: Option<Map>,
    pub comul_diag: BTreeMap<(u32, u32), Scalar>,
    pub counit: Map,
    pub depth: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Indecomposables,
    Primitives,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LinearizeError {
    /// The flatness hypothesis fails: torsion in the indecomposables.
    Torsion { weight: u32, orders: Vec<num_bigint::BigInt> },
}

impl std::fmt::Display for LinearizeError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            LinearizeError::Torsion { weight, orders } => {
                write!(f, "flatness violated: torsion {orders:?} in weight {weight}")
            }
        }
    }
}

/// The `Q`/`P` bimonoid of the Lambda plethory through the given weight.
pub fn linearize_lambda(
    ring: CoefficientRing,
    side: Side,
    depth: u32,
) -> Result<BimonoidCandidate, LinearizeError> {
    match side {
        Side::Indecomposables => q_lambda(ring, depth),
        Side::Primitives => p_lambda(ring, depth),
    }
}

/// Refusal surface for non-flat schemes: the divided power scheme has
/// torsion indecomposables over Z.
pub fn linearize_scheme_q(
    s: &crate::schemes_hopf::structure::SchemeStructure,
    depth: u32,
) -> Result<Obj, LinearizeError> {
    let q = indecomposables(s, depth);
    for (&w, pres) in &q.per_weight {
        if !pres.is_free() {
            return Err(LinearizeError::Torsion { weight: w, orders: pres.torsion.clone() });
        }
    }
    Ok(q.free_module().expect("free after torsion check"))
}

fn rank_one_carrier(ring: CoefficientRing, depth: u32, label: &str) -> Obj {
    let mut m = GradedModule::new(ring);
    for w in 1..=depth {
        m.components.insert(w, 1);
        m.labels.insert(w, vec![format!("{label}{w}")]);
    }
    m
}

/// The indecomposable class of a polynomial: coefficients of the single-
/// generator monomials `c_w`.
fn q_class(p: &Polynomial, depth: u32) -> BTreeMap<u32, Scalar> {
    let alg = &p.algebra;
    let mut out = BTreeMap::new();
    for w in 1..=depth {
        if let Some(g) = alg.gen_index(&format!("c{w}")) {
            let m = Monomial::from_exps(alg, &[(g, 1)]);
            let c = p.coefficient(&m);
            if !c.is_zero() {
                out.insert(w, c);
            }
        }
    }
    out
}

fn q_lambda(ring: CoefficientRing, depth: u32) -> Result<BimonoidCandidate, LinearizeError> {
    let s = lambda_structure(ring, depth);
    // flatness gate: Q(Lambda) must be torsion-free
    let q = indecomposables(&s, depth);
    for (&w, pres) in &q.per_weight {
        if !pres.is_free() {
            return Err(LinearizeError::Torsion { weight: w, orders: pres.torsion.clone() });
        }
    }
    let carrier = rank_one_carrier(ring, depth, "q");

    // multiplication: q_n -> [psi_times(c_n)] in Q (x) Q; only the
    // c_i (x) c_j terms survive the two-sided indecomposable projection.
    let psix = s.psi_times.as_ref().unwrap()(depth);
    let sq = s.square(depth, 2 * depth);
    let a = lambda_level(ring, depth);
    let qq = super::bimod::product_obj(super::bimod::Product::Tensor, &carrier, &carrier, 2 * depth);
    let mut mul = LinearMapByWeight::zero(carrier.clone(), qq.obj.clone());
    for n in 1..=depth {
        let img = &psix.images[(n - 1) as usize];
        // project both tensor legs to Q-classes
        let mut blocks: BTreeMap<u32, MatExact> = BTreeMap::new();
        for (mono, c) in &img.terms {
            let parts = sq.split_monomial(mono);
            let (lq, rq) = (q_class_of_monomial(&a, &parts[0]), q_class_of_monomial(&a, &parts[1]));
            let (Some((lw, _)), Some((rw, _))) = (lq, rq) else { continue };
            let wt = lw + rw;
            let Some(off) = qq.piece_offset(wt, lw, rw) else { continue };
            let entry = blocks
                .entry(wt)
                .or_insert_with(|| MatExact::zero(ring, qq.obj.rank(wt), 1));
            let prev = entry.at(off, 0).clone();
            entry.set(off, 0, ring.add(&prev, c));
        }
        for (wt, m) in blocks {
            if !m.is_zero() {
                mul.blocks.insert((n, wt), m);
            }
        }
    }

    // unit: only over a ring where 1/n exists for all n <= depth
    let unit = build_q_unit(ring, &carrier, depth);

    // composition comultiplication diagonal: (d, e) piece -> coefficient of
    // q_{de}: the indecomposable class of plethysm(c_d, c_e).
    let mut comul_diag = BTreeMap::new();
    for d in 1..=depth {
        for e in 1..=depth {
            if d * e > depth {
                continue;
            }
            let big = lambda_level(ring, d * e);
            let cd = Polynomial::generator_named(&big, &format!("c{d}"));
            let ce = Polynomial::generator_named(&big, &format!("c{e}"));
            let p = plethysm(&cd, &ce, d * e);
            let cls = q_class(&p, d * e);
            let coeff = cls.get(&(d * e)).cloned().unwrap_or_else(|| ring.zero());
            comul_diag.insert((d, e), coeff);
        }
    }

    // counit: J -> H, e -> q_1 (the class of c_1 under eps: e -> c_1)
    let counit = singleton_map(ring, &unit_j(ring), &carrier, 1, 1, 1);

    Ok(BimonoidCandidate {
        name: format!("Q(Lambda_{depth}) over {ring:?}"),
        carrier,
        mul,
        unit,
        comul_diag,
        counit,
        depth,
    })
}

fn q_class_of_monomial(a: &crate::exact_algebra::poly::Algebra, m: &Monomial) -> Option<(u32, Scalar)> {
    // single generator to the first power: its Q-class; everything else dies
    let exps = m.exps();
    if exps.len() == 1 && exps[0].1 == 1 {
        let w = a.generators[exps[0].0 as usize].weight;
        Some((w, a.ring.one()))
    } else {
        None
    }
}

fn build_q_unit(ring: CoefficientRing, carrier: &Obj, depth: u32) -> Option<Map> {
    // unit: q_n -> (-1)^(n-1)/n * i; integral only when every 1/n exists
    let i = unit_i(ring);
    let mut m = LinearMapByWeight::zero(carrier.clone(), i.clone());
    for n in 1..=depth {
        let sign = if n % 2 == 1 { 1i64 } else { -1 };
        let inv = ring.inv(&ring.from_i64(n as i64))?;
        let mut blk = MatExact::zero(ring, 1, 1);
        blk.set(0, 0, ring.mul_i64(&inv, sign));
        m.blocks.insert((n, 0), blk);
    }
    Some(m)
}

fn p_lambda(ring: CoefficientRing, depth: u32) -> Result<BimonoidCandidate, LinearizeError> {
    let carrier = rank_one_carrier(ring, depth, "p");
    let a = lambda_level(ring, depth);
    let s = lambda_structure(ring, depth);

    // multiplication: psi_times(newton_n) expressed in the primitive basis
    // newton (x) newton; the power sums are grouplike for the multiplicative
    // costructure: psi_times(p_n) = p_n (x) p_n exactly.
    let psix = s.psi_times.as_ref().unwrap()(depth);
    let sq = s.square(depth, 2 * depth);
    let pp = super::bimod::product_obj(super::bimod::Product::Tensor, &carrier, &carrier, 2 * depth);
    let mut mul = LinearMapByWeight::zero(carrier.clone(), pp.obj.clone());
    for n in 1..=depth {
        let newton = newton_polynomial(&a, n);
        let img = psix.apply(&newton);
        let expected = sq.pure_tensor(&[&newton, &newton]);
        assert_eq!(img, expected, "psi_times(p_{n}) = p_{n} (x) p_{n}");
        let Some(off) = pp.piece_offset(2 * n, n, n) else { continue };
        let mut blk = MatExact::zero(ring, pp.obj.rank(2 * n), 1);
        blk.set(off, 0, ring.one());
        mul.blocks.insert((n, 2 * n), blk);
    }

    // unit: p_n -> i with coefficient 1 (integral over every ring)
    let i = unit_i(ring);
    let mut unit = LinearMapByWeight::zero(carrier.clone(), i.clone());
    for n in 1..=depth {
        let mut blk = MatExact::zero(ring, 1, 1);
        blk.set(0, 0, ring.one());
        unit.blocks.insert((n, 0), blk);
    }

    // comultiplication diagonal: plethysm of Newton polynomials is the
    // Adams composition p_d o p_e = p_{de}: coefficient 1.
    let mut comul_diag = BTreeMap::new();
    for d in 1..=depth {
        for e in 1..=depth {
            if d * e > depth {
                continue;
            }
            let big = lambda_level(ring, d * e);
            let pd = newton_polynomial(&big, d);
            let pe = newton_polynomial(&big, e);
            let composed = plethysm(&pd, &pe, d * e);
            let expected = newton_polynomial(&big, d * e);
            assert_eq!(composed, expected, "p_{d} o p_{e} = p_{}", d * e);
            comul_diag.insert((d, e), ring.one());
        }
    }

    let counit = singleton_map(ring, &unit_j(ring), &carrier, 1, 1, 1);

    Ok(BimonoidCandidate {
        name: format!("P(Lambda_{depth}) over {ring:?}"),
        carrier,
        mul,
        unit: Some(unit),
        comul_diag,
        counit,
        depth,
    })
}

/// The two-sided module factorization of Prop.-style `mu` through
/// `Q (x) P`: the right tensor legs attached to the class `q_n` must be
/// primitive. Returns the per-weight witness polynomials.
pub fn q_mu_factors_through_primitives(ring: CoefficientRing, depth: u32) -> bool {
    let s = lambda_structure(ring, depth);
    let a = lambda_level(ring, depth);
    let psix = s.psi_times.as_ref().unwrap()(depth);
    let sq = s.square(depth, 2 * depth);
    for n in 1..=depth {
        // right legs attached to left part exactly c_n
        let img = &psix.images[(n - 1) as usize];
        let mut right = Polynomial::zero(&a);
        for (mono, c) in &img.terms {
            let parts = sq.split_monomial(mono);
            if q_class_of_monomial(&a, &parts[0]).map(|(w, _)| w) == Some(n) {
                let expv: Vec<(usize, u32)> =
                    parts[1].exps().iter().map(|&(g, e)| (g as usize, e as u32)).collect();
                right = right.add(&Polynomial::monomial(&a, &expv, c.clone()));
            }
        }
        let newton = newton_polynomial(&a, n);
        if right != newton && right != newton.neg() {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn q_lambda_multiplication_diagonal() {
        let b = linearize_lambda(CoefficientRing::Integers, Side::Indecomposables, 4).unwrap();
        // q_n -> (-1)^(n-1) n q_n|q_n
        for n in 1..=4u32 {
            let blk = b.mul.block(n, 2 * n);
            let expected = if n % 2 == 1 { n as i64 } else { -(n as i64) };
            let qq = super::super::bimod::product_obj(
                super::super::bimod::Product::Tensor,
                &b.carrier,
                &b.carrier,
                8,
            );
            let off = qq.piece_offset(2 * n, n, n).unwrap();
            assert_eq!(*blk.at(off, 0), CoefficientRing::Integers.from_i64(expected), "n={n}");
        }
    }

    #[test]
    fn q_lambda_comul_unit_normalized() {
        let b = linearize_lambda(CoefficientRing::Rationals, Side::Indecomposables, 6).unwrap();
        use num_traits::One;
        for (&(d, e), c) in &b.comul_diag {
            // in the power-sum normalization the coefficient is 1
            let norm = |n: u32| -> i64 {
                if n % 2 == 1 { n as i64 } else { -(n as i64) }
            };
            let lhs = CoefficientRing::Rationals.mul(
                c,
                &CoefficientRing::Rationals.from_i64(norm(d) * norm(e)),
            );
            let rhs = CoefficientRing::Rationals.from_i64(norm(d * e));
            let ratio = CoefficientRing::Rationals
                .div_exact(&lhs, &rhs)
                .expect("nonzero");
            match ratio {
                Scalar::Rat(q) => assert!(q.is_one(), "({d},{e})"),
                Scalar::Int(n) => assert!(n.is_one(), "({d},{e})"),
            }
        }
    }

    #[test]
    fn p_lambda_constructs_over_f2() {
        let b = linearize_lambda(CoefficientRing::IntegersMod(2), Side::Primitives, 4).unwrap();
        assert!(b.unit.is_some());
    }

    #[test]
    fn q_unit_missing_over_z() {
        let b = linearize_lambda(CoefficientRing::Integers, Side::Indecomposables, 4).unwrap();
        assert!(b.unit.is_none());
        let bq = linearize_lambda(CoefficientRing::Rationals, Side::Indecomposables, 4).unwrap();
        assert!(bq.unit.is_some());
    }

    #[test]
    fn divided_powers_fail_flatness() {
        let s = crate::plethory_examples::divided::divided_powers(CoefficientRing::Integers, 4);
        let err = linearize_scheme_q(&s, 4);
        assert!(matches!(err, Err(LinearizeError::Torsion { weight: 2, .. })));
    }

    #[test]
    fn mu_factors_through_primitives() {
        assert!(q_mu_factors_through_primitives(CoefficientRing::Integers, 4));
    }
}

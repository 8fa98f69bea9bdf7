//! The composition product of formal algebra schemes, realized for free
//! outer carriers: the representing object of `F o G` is a tensor of one
//! copy of `Reg G` per generator of `Reg F`, with weights rescaled by the
//! generator weight. Includes the symbolic ring-of-points calculator used to
//! push polynomials through a scheme's co-operations, and the finite-ring
//! functor evaluation for the composition functoriality checks.

use crate::exact_algebra::map::AlgebraMap;
use crate::exact_algebra::poly::{
    Algebra, Generator, Monomial, Parity, Polynomial, RewriteRule, TruncatedAlgebra,
};
use crate::exact_algebra::tensor::TensorAlgebra;
use crate::schemes_hopf::points::{enumerate_points, FiniteRing, Point, PointRing};
use crate::schemes_hopf::structure::SchemeStructure;
use num_bigint::BigInt;
use std::collections::BTreeMap;

/// A level of the composite `F o G`: one copy of the inner level per outer
/// generator, generator `a>b` of weight `weight(a) * weight(b)`.
#[derive(Clone, Debug)]
pub struct Composite {
    pub alg: Algebra,
    pub outer: Algebra,
    pub inner: Algebra,
    /// Per outer generator: the offset of its copy and the list of surviving
    /// inner generator indices (those whose rescaled weight fits the bound).
    pub copies: Vec<(usize, Vec<usize>)>,
}

/// Build the composite level with the given total weight bound; inner
/// truncation is enforced per copy by explicit kill rules just above the
/// inner bound.
/// Outer carriers with relations are accepted: the relations are imposed at
/// the point level (through the inner point ring) rather than on the tensor
/// presentation, which stays free across copies.
pub fn compose_levels(outer: &Algebra, inner: &Algebra, bound: u32) -> Composite {
    compose_levels_with(outer, inner, bound, true)
}

/// As `compose_levels`, with control over whether the inner factor is a
/// truncation tower (constant inner carriers skip the per-copy kill rules).
pub fn compose_levels_with(
    outer: &Algebra,
    inner: &Algebra,
    bound: u32,
    inner_truncates: bool,
) -> Composite {
    assert!(
        outer.generators.iter().all(|g| g.parity == Parity::Even)
            && inner.generators.iter().all(|g| g.parity == Parity::Even),
        "compose_levels is restricted to even carriers"
    );
    let ring = outer.ring;
    assert_eq!(ring, inner.ring);
    let mut gens: Vec<Generator> = Vec::new();
    let mut copies = Vec::new();
    for og in &outer.generators {
        let offset = gens.len();
        let mut kept = Vec::new();
        for (i, ig) in inner.generators.iter().enumerate() {
            let w = og.weight * ig.weight;
            if w <= bound && og.weight > 0 {
                kept.push(i);
                gens.push(Generator::even(format!("{}>{}", og.name, ig.name), w));
            }
        }
        copies.push((offset, kept));
    }
    let proto = TruncatedAlgebra::free(ring, gens.clone(), bound);
    let mut rules = Vec::new();
    for (m, og) in outer.generators.iter().enumerate() {
        let (offset, kept) = &copies[m];
        // copy the inner relations whose generators all survive
        'rules: for rule in &inner.relations {
            let mut lhs_exps = Vec::new();
            for &(g, e) in rule.lhs.exps() {
                match kept.iter().position(|&k| k == g as usize) {
                    Some(pos) => lhs_exps.push((offset + pos, e as u32)),
                    None => continue 'rules,
                }
            }
            let mut rhs = Vec::new();
            let mut rhs_ok = true;
            for (mono, c) in &rule.rhs {
                let mut exps = Vec::new();
                for &(g, e) in mono.exps() {
                    match kept.iter().position(|&k| k == g as usize) {
                        Some(pos) => exps.push((offset + pos, e as u32)),
                        None => {
                            rhs_ok = false;
                            break;
                        }
                    }
                }
                if !rhs_ok {
                    break;
                }
                rhs.push((Monomial::from_exps(&proto, &exps), c.clone()));
            }
            let rhs = if rhs_ok { rhs } else { Vec::new() };
            rules.push(RewriteRule { lhs: Monomial::from_exps(&proto, &lhs_exps), rhs });
        }
        // inner truncation per copy: minimal monomials of inner weight just
        // above the inner bound vanish
        let max_w = inner.generators.iter().map(|g| g.weight).max().unwrap_or(0);
        if inner_truncates && max_w > 0 {
            let mut relaxed = TruncatedAlgebra::clone(inner);
            relaxed.bound = inner.bound + max_w;
            let relaxed = std::sync::Arc::new(relaxed);
            for w in inner.bound + 1..=inner.bound + max_w {
                for mono in relaxed.weight_basis(w) {
                    let minimal = mono.exps().iter().all(|&(g, _)| {
                        mono.weight() - inner.generators[g as usize].weight <= inner.bound
                    });
                    if !minimal {
                        continue;
                    }
                    let mut exps = Vec::new();
                    let mut ok = true;
                    for &(g, e) in mono.exps() {
                        match kept.iter().position(|&k| k == g as usize) {
                            Some(pos) => exps.push((offset + pos, e as u32)),
                            None => {
                                ok = false;
                                break;
                            }
                        }
                    }
                    // keep the kill rule even above the global bound: it
                    // never fires on stored monomials but constrains points
                    if ok {
                        rules.push(RewriteRule {
                            lhs: Monomial::from_exps(&proto, &exps),
                            rhs: Vec::new(),
                        });
                    }
                }
            }
        }
    }
    let alg = TruncatedAlgebra::with_relations(ring, gens, bound, rules);
    Composite { alg, outer: outer.clone(), inner: inner.clone(), copies }
}

impl Composite {
    /// The generator `outer_m > inner_i`, or zero when it was truncated away.
    pub fn d(&self, m: usize, i: usize) -> Polynomial {
        let (offset, kept) = &self.copies[m];
        match kept.iter().position(|&k| k == i) {
            Some(pos) => Polynomial::generator(&self.alg, offset + pos),
            None => Polynomial::zero(&self.alg),
        }
    }

    /// Substitute an inner polynomial into copy m.
    pub fn copy_embed(&self, m: usize, p: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero(&self.alg);
        for (mono, c) in &p.terms {
            let mut term = Polynomial::constant(&self.alg, self.alg.ring.normalize(c));
            for &(g, e) in mono.exps() {
                let d = self.d(m, g as usize);
                for _ in 0..e {
                    term = term.mul(&d);
                }
            }
            out = out.add(&term);
        }
        out
    }

    /// The tautological point of copy m: inner generator i maps to `d(m,i)`.
    pub fn tautological_point(&self, m: usize) -> Vec<Polynomial> {
        (0..self.inner.generators.len()).map(|i| self.d(m, i)).collect()
    }
}

/// Ring-of-points of a scheme with coordinates in a commutative algebra:
/// elements are generator-image tuples and the operations are the scheme's
/// co-operations evaluated symbolically.
pub struct SymbolicPoints<'a> {
    pub scheme: &'a SchemeStructure,
    pub level: u32,
    pub target: Algebra,
}

impl<'a> SymbolicPoints<'a> {
    pub fn new(scheme: &'a SchemeStructure, level: u32, target: Algebra) -> Self {
        SymbolicPoints { scheme, level, target }
    }

    fn dim(&self) -> usize {
        self.scheme.level(self.level).generators.len()
    }

    fn convolve(
        &self,
        map: &AlgebraMap,
        ctx: &TensorAlgebra,
        x: &[Polynomial],
        y: &[Polynomial],
    ) -> Vec<Polynomial> {
        let level_alg = self.scheme.level(self.level);
        level_alg
            .generators
            .iter()
            .map(|g| {
                let idx = map.source.gen_index(&g.name).expect("structure map covers level");
                eval_tensor_in_algebra(ctx, &map.images[idx], &[x, y], &self.target)
            })
            .collect()
    }

    pub fn add(&self, x: &[Polynomial], y: &[Polynomial]) -> Vec<Polynomial> {
        let psi = (self.scheme.psi_plus)(self.level);
        let ctx = self.scheme.square(self.level, self.level);
        self.convolve(&psi, &ctx, x, y)
    }

    pub fn mul(&self, x: &[Polynomial], y: &[Polynomial]) -> Vec<Polynomial> {
        let psix = self.scheme.psi_times.as_ref().expect("ring scheme")(self.level);
        let ctx = self.scheme.square(self.level, 2 * self.level);
        self.convolve(&psix, &ctx, x, y)
    }

    pub fn int_point(&self, a: i64) -> Vec<Polynomial> {
        let counit = self.scheme.counit.as_ref().expect("counit family");
        let eps = counit(a, self.level);
        let level_alg = self.scheme.level(self.level);
        level_alg
            .generators
            .iter()
            .map(|g| {
                let idx = eps.source.gen_index(&g.name).expect("counit covers level");
                let c = crate::schemes_hopf::structure::scalar_image(&eps, idx);
                Polynomial::constant(&self.target, self.target.ring.normalize(&c))
            })
            .collect()
    }

    /// Evaluate an outer polynomial (integer coefficients) at points of this
    /// ring: monomials multiply with `mul`, sums with `add`.
    pub fn eval_polynomial(&self, p: &Polynomial, assign: &[Vec<Polynomial>]) -> Vec<Polynomial> {
        let mut acc = self.int_point(0);
        for (mono, c) in &p.terms {
            let ci = c.as_int().expect("integral outer coefficients");
            let mut term = self.int_point(int_to_i64(ci));
            for &(g, e) in mono.exps() {
                for _ in 0..e {
                    term = self.mul(&term, &assign[g as usize]);
                }
            }
            acc = self.add(&acc, &term);
        }
        let _ = self.dim();
        acc
    }
}

fn int_to_i64(n: &BigInt) -> i64 {
    let (sign, digits) = n.to_u64_digits();
    let mag = digits.first().copied().unwrap_or(0) as i64;
    match sign {
        num_bigint::Sign::Minus => -mag,
        _ => mag,
    }
}

/// Evaluate a tensor polynomial with polynomial values per factor generator.
pub fn eval_tensor_in_algebra(
    ctx: &TensorAlgebra,
    p: &Polynomial,
    assigns: &[&[Polynomial]],
    target: &Algebra,
) -> Polynomial {
    assert_eq!(assigns.len(), ctx.factor_count());
    let mut acc = Polynomial::zero(target);
    for (mono, c) in &p.terms {
        let mut term = Polynomial::constant(target, target.ring.normalize(c));
        let parts = ctx.split_monomial(mono);
        for (f, part) in parts.iter().enumerate() {
            for &(g, e) in part.exps() {
                for _ in 0..e {
                    term = term.mul(&assigns[f][g as usize]);
                    if term.is_zero() {
                        break;
                    }
                }
            }
        }
        acc = acc.add(&term);
    }
    acc
}

/// The finite ring of points `G(R)` with its element table.
pub struct PointRingTable {
    pub ring: FiniteRing,
    pub points: Vec<Point>,
}

pub fn point_finite_ring(scheme: &SchemeStructure, level: u32, r: &FiniteRing) -> PointRingTable {
    let pr = PointRing::new(scheme, level, r);
    let points = pr.points.clone();
    let size = points.len();
    let find = |p: &Point| -> usize {
        points
            .iter()
            .position(|q| q == p)
            .expect("co-operations stay within the point set")
    };
    let add = (0..size)
        .map(|i| (0..size).map(|j| find(&pr.add(&points[i], &points[j]))).collect())
        .collect();
    let mul = (0..size)
        .map(|i| (0..size).map(|j| find(&pr.mul(&points[i], &points[j]))).collect())
        .collect();
    PointRingTable {
        ring: FiniteRing::from_tables(format!("{}({})", scheme.name, r.name), add, mul),
        points,
    }
}

/// Composite points of `F o G` over a finite ring: tuples over the composite
/// generators satisfying the composite relations, the composite truncation,
/// and the outer truncation evaluated through the inner point ring.
pub fn composite_points(
    comp: &Composite,
    outer_scheme: &SchemeStructure,
    inner_scheme: &SchemeStructure,
    level: u32,
    r: &FiniteRing,
) -> Vec<Point> {
    // constraints come from the factors: per-copy rules live in the algebra,
    // outer truncation/relations are imposed through the inner point ring.
    let raw = enumerate_points(&comp.alg, false, r);
    // outer truncation: minimal outer monomials above the outer bound must
    // evaluate to the zero point of G(R)
    let outer = &comp.outer;
    let max_w = outer.generators.iter().map(|g| g.weight).max().unwrap_or(0);
    let mut violating: Vec<Monomial> = Vec::new();
    if max_w > 0 && outer_scheme.truncation_points {
        let mut relaxed = TruncatedAlgebra::clone(outer);
        relaxed.bound = outer.bound + max_w;
        let relaxed = std::sync::Arc::new(relaxed);
        for w in outer.bound + 1..=outer.bound + max_w {
            for m in relaxed.weight_basis(w) {
                let minimal = m.exps().iter().all(|&(g, _)| {
                    m.weight() - outer.generators[g as usize].weight <= outer.bound
                });
                if minimal {
                    violating.push(m);
                }
            }
        }
    }
    if violating.is_empty() && outer.relations.is_empty() {
        return raw;
    }
    let grt = point_finite_ring(inner_scheme, level, r);
    let zero = {
        let pr = PointRing::new(inner_scheme, level, r);
        let z = pr.zero();
        grt.points.iter().position(|p| p == &z).expect("zero point present")
    };
    raw.into_iter()
        .filter(|pt| {
            // extract the copy points
            let copy_points: Vec<usize> = comp
                .copies
                .iter()
                .map(|(offset, kept)| {
                    let mut g_point = vec![0usize; comp.inner.generators.len()];
                    for (pos, &i) in kept.iter().enumerate() {
                        g_point[i] = pt[offset + pos];
                    }
                    // inner generators truncated away are zero in the copy
                    grt.points.iter().position(|p| p == &g_point).expect("copy is a G-point")
                })
                .collect();
            let truncation_ok = violating.iter().all(|mono| {
                let mut acc = None;
                for &(g, e) in mono.exps() {
                    let f = grt.ring.pow(copy_points[g as usize], e as u32);
                    acc = Some(match acc {
                        None => f,
                        Some(p) => grt.ring.mul(p, f),
                    });
                }
                acc.unwrap_or(zero) == zero
            });
            let eval_mono = |mono: &Monomial| -> usize {
                let mut acc = None;
                for &(g, e) in mono.exps() {
                    let f = grt.ring.pow(copy_points[g as usize], e as u32);
                    acc = Some(match acc {
                        None => f,
                        Some(p) => grt.ring.mul(p, f),
                    });
                }
                acc.unwrap_or_else(|| grt.ring.one())
            };
            let relations_ok = outer.relations.iter().all(|rule| {
                let lhs = eval_mono(&rule.lhs);
                let mut rhs = grt.ring.zero;
                for (m, c) in &rule.rhs {
                    rhs = grt.ring.add(rhs, grt.ring.scalar_times(c, eval_mono(m)));
                }
                lhs == rhs
            });
            truncation_ok && relations_ok
        })
        .collect()
}

/// The nested evaluation `F(G(R))` as tuples of inner-point indices, plus the
/// inner point table.
pub fn nested_points(
    outer_scheme: &SchemeStructure,
    inner_scheme: &SchemeStructure,
    outer_level: u32,
    inner_level: u32,
    r: &FiniteRing,
) -> (PointRingTable, Vec<Point>) {
    let table = point_finite_ring(inner_scheme, inner_level, r);
    let outer_alg = outer_scheme.level(outer_level);
    let pts = enumerate_points(&outer_alg, outer_scheme.truncation_points, &table.ring);
    (table, pts)
}

/// Compare composite points with nested points through the canonical
/// correspondence (composite tuple -> per-copy G-point indices).
pub fn composition_functoriality(
    outer_scheme: &SchemeStructure,
    inner_scheme: &SchemeStructure,
    outer_level: u32,
    inner_level: u32,
    r: &FiniteRing,
) -> Result<usize, String> {
    let outer_alg = outer_scheme.level(outer_level);
    let inner_alg = inner_scheme.level(inner_level);
    let bound = (outer_alg.bound * inner_alg.bound).max(1);
    let comp = compose_levels_with(
        &outer_alg,
        &inner_alg,
        bound,
        inner_scheme.truncation_points,
    );
    let comp_pts = composite_points(&comp, outer_scheme, inner_scheme, inner_level, r);
    let (table, nested) = nested_points(outer_scheme, inner_scheme, outer_level, inner_level, r);

    // canonical map: composite tuple -> tuple of copy points
    let mut mapped: Vec<Vec<usize>> = Vec::new();
    for pt in &comp_pts {
        let tuple: Vec<usize> = comp
            .copies
            .iter()
            .map(|(offset, kept)| {
                let mut g_point = vec![0usize; comp.inner.generators.len()];
                for (pos, &i) in kept.iter().enumerate() {
                    g_point[i] = pt[offset + pos];
                }
                table
                    .points
                    .iter()
                    .position(|p| p == &g_point)
                    .ok_or(())
                    .expect("copy point is a G-point")
            })
            .collect();
        mapped.push(tuple);
    }
    mapped.sort();
    mapped.dedup();
    let mut nested_sorted = nested.clone();
    nested_sorted.sort();
    if mapped == nested_sorted {
        Ok(mapped.len())
    } else {
        Err(format!(
            "composite has {} points, nested evaluation {} (after dedup {})",
            comp_pts.len(),
            nested.len(),
            mapped.len()
        ))
    }
}

/// All composite points map to distinct tuples and hit every nested point:
/// convenience boolean wrapper.
pub fn composition_matches(
    outer_scheme: &SchemeStructure,
    inner_scheme: &SchemeStructure,
    outer_level: u32,
    inner_level: u32,
    r: &FiniteRing,
) -> bool {
    composition_functoriality(outer_scheme, inner_scheme, outer_level, inner_level, r).is_ok()
}

/// Weight table of the composite generators (the rescaling rule).
pub fn composite_weights(comp: &Composite) -> BTreeMap<String, u32> {
    comp.alg
        .generators
        .iter()
        .map(|g| (g.name.clone(), g.weight))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_algebra::ring::CoefficientRing;
    use crate::plethory_examples::lambda::{lambda_level, lambda_structure};
    use crate::plethory_examples::small::identity_scheme;

    #[test]
    fn composite_weights_rescale() {
        let ring = CoefficientRing::Integers;
        let outer = lambda_level(ring, 2);
        let inner = lambda_level(ring, 2);
        let comp = compose_levels(&outer, &inner, 4);
        let w = composite_weights(&comp);
        assert_eq!(w["c1>c1"], 1);
        assert_eq!(w["c1>c2"], 2);
        assert_eq!(w["c2>c1"], 2);
        assert_eq!(w["c2>c2"], 4);
    }

    #[test]
    fn identity_is_unit_for_composition() {
        // F = identity scheme: F o G has one copy of G with weights kept
        let ring = CoefficientRing::Integers;
        let f = identity_scheme(ring, 0, 2);
        let g = lambda_structure(ring, 2);
        let f3 = FiniteRing::z_mod(3);
        assert!(composition_matches(&f, &g, 2, 2, &f3));
        assert!(composition_matches(&g, &f, 2, 2, &f3));
    }

    #[test]
    fn lambda_composed_with_itself_on_dual_numbers() {
        let ring = CoefficientRing::Integers;
        let g = lambda_structure(ring, 2);
        let r = FiniteRing::fp_dual_numbers(2);
        assert!(composition_matches(&g, &g, 2, 2, &r));
    }

    #[test]
    fn symbolic_point_ring_add() {
        let ring = CoefficientRing::Integers;
        let s = lambda_structure(ring, 2);
        let comp = compose_levels(&lambda_level(ring, 2), &lambda_level(ring, 2), 4);
        let sym = SymbolicPoints::new(&s, 2, comp.alg.clone());
        let p1 = comp.tautological_point(0);
        let p2 = comp.tautological_point(1);
        let sum = sym.add(&p1, &p2);
        // first coordinate of the sum: c1-images add
        let expected = comp.d(0, 0).add(&comp.d(1, 0));
        assert_eq!(sum[0], expected);
    }
}

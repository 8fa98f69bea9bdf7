//! Tensor products of truncated algebras: tagged generator unions with total
//! weight truncation and Koszul signs across the factors.

use super::map::AlgebraMap;
use super::poly::{Algebra, Generator, Monomial, Polynomial, RewriteRule, TruncatedAlgebra};
use super::ring::Scalar;

/// A tensor product presented as one truncated algebra plus the factor
/// boundaries. Generators of factor `i` appear contiguously at `offsets[i]`.
#[derive(Clone, Debug)]
pub struct TensorAlgebra {
    pub alg: Algebra,
    pub factors: Vec<Algebra>,
    pub offsets: Vec<usize>,
}

/// Tensor product with the spec's default truncation: the minimum of the two
/// bounds, read as a total-weight bound.
pub fn tensor_algebra(a: &Algebra, b: &Algebra) -> TensorAlgebra {
    tensor_many(&[a, b], a.bound.min(b.bound))
}

/// Tensor product of several factors with an explicit total-weight bound
/// (comultiplications of ring schemes need bounds above the factor bounds).
pub fn tensor_many(factors: &[&Algebra], bound: u32) -> TensorAlgebra {
    assert!(!factors.is_empty());
    let ring = factors[0].ring;
    for f in factors {
        assert_eq!(f.ring, ring, "coefficient ring mismatch");
    }
    let mut generators = Vec::new();
    let mut relations = Vec::new();
    let mut offsets = Vec::with_capacity(factors.len());
    for (i, f) in factors.iter().enumerate() {
        let offset = generators.len();
        offsets.push(offset);
        for g in &f.generators {
            generators.push(Generator {
                name: format!("{}#{}", i, g.name),
                weight: g.weight,
                parity: g.parity,
            });
        }
        for r in &f.relations {
            relations.push(shift_rule(f, r, offset));
        }
    }
    let alg = TruncatedAlgebra::with_relations(ring, generators, bound, relations);
    TensorAlgebra {
        alg,
        factors: factors.iter().map(|f| (*f).clone()).collect(),
        offsets,
    }
}

fn shift_rule(src: &Algebra, rule: &RewriteRule, offset: usize) -> RewriteRule {
    RewriteRule {
        lhs: monomial_with_shift(src, &rule.lhs, offset),
        rhs: rule
            .rhs
            .iter()
            .map(|(m, c)| (monomial_with_shift(src, m, offset), c.clone()))
            .collect(),
    }
}

fn monomial_with_shift(src: &Algebra, m: &Monomial, offset: usize) -> Monomial {
    // Rebuild against a padded generator table so the cached weight is right.
    let exps: Vec<(usize, u32)> =
        m.exps().iter().map(|&(g, e)| (g as usize + offset, e as u32)).collect();
    let mut table = TruncatedAlgebra::clone(src);
    let mut gens = vec![Generator::even("pad", 1); offset];
    gens.extend(src.generators.iter().cloned());
    table.generators = gens;
    Monomial::from_exps(&table, &exps)
}

impl TensorAlgebra {
    pub fn factor_count(&self) -> usize {
        self.factors.len()
    }

    fn factor_range(&self, i: usize) -> std::ops::Range<usize> {
        let start = self.offsets[i];
        let end = if i + 1 < self.offsets.len() {
            self.offsets[i + 1]
        } else {
            self.alg.generators.len()
        };
        start..end
    }

    /// The algebra map embedding factor `i`: x -> 1 x ... x x x ... x 1.
    pub fn embedding(&self, i: usize) -> AlgebraMap {
        let images = (0..self.factors[i].generators.len())
            .map(|g| Polynomial::generator(&self.alg, self.offsets[i] + g))
            .collect();
        AlgebraMap {
            source: self.factors[i].clone(),
            target: self.alg.clone(),
            images,
            weight_scale: Some(1),
        }
    }

    /// The pure tensor `p_0 x p_1 x ...` as an element of the tensor algebra.
    pub fn pure_tensor(&self, parts: &[&Polynomial]) -> Polynomial {
        assert_eq!(parts.len(), self.factors.len());
        let mut out = Polynomial::one(&self.alg);
        for (i, p) in parts.iter().enumerate() {
            out = out.mul(&self.embedding(i).apply(p));
        }
        out
    }

    /// Split a monomial of the tensor algebra into per-factor monomials.
    pub fn split_monomial(&self, m: &Monomial) -> Vec<Monomial> {
        (0..self.factors.len())
            .map(|i| {
                let range = self.factor_range(i);
                let exps: Vec<(usize, u32)> = m
                    .exps()
                    .iter()
                    .filter(|&&(g, _)| range.contains(&(g as usize)))
                    .map(|&(g, e)| (g as usize - range.start, e as u32))
                    .collect();
                Monomial::from_exps(&self.factors[i], &exps)
            })
            .collect()
    }

    /// Tensor of maps acting factorwise; `maps[i]: self.factors[i] ->
    /// target.factors[i]`. Koszul signs arise in the target product.
    pub fn map_factorwise(&self, maps: &[&AlgebraMap], target: &TensorAlgebra) -> AlgebraMap {
        assert_eq!(maps.len(), self.factors.len());
        assert_eq!(maps.len(), target.factors.len());
        let mut images = Vec::with_capacity(self.alg.generators.len());
        let mut scale: Option<u32> = None;
        let mut mixed = false;
        for (i, map) in maps.iter().enumerate() {
            match map.weight_scale {
                Some(s) => match scale {
                    None => scale = Some(s),
                    Some(t) if t == s => {}
                    _ => mixed = true,
                },
                None => mixed = true,
            }
            let emb = target.embedding(i);
            for g in 0..self.factors[i].generators.len() {
                images.push(emb.apply(&map.images[g]));
            }
        }
        AlgebraMap {
            source: self.alg.clone(),
            target: target.alg.clone(),
            images,
            weight_scale: if mixed { None } else { scale },
        }
    }

    /// Reorder factors by `perm` (target factor j is source factor perm[j]);
    /// Koszul signs surface in the target normal form.
    pub fn permute(&self, perm: &[usize], target: &TensorAlgebra) -> AlgebraMap {
        assert_eq!(perm.len(), self.factors.len());
        let mut images: Vec<Option<Polynomial>> = vec![None; self.alg.generators.len()];
        for (tpos, &spos) in perm.iter().enumerate() {
            let emb = target.embedding(tpos);
            for g in 0..self.factors[spos].generators.len() {
                images[self.offsets[spos] + g] = Some(emb.apply(&Polynomial::generator(&self.factors[spos], g)));
            }
        }
        AlgebraMap {
            source: self.alg.clone(),
            target: target.alg.clone(),
            images: images.into_iter().map(Option::unwrap).collect(),
            weight_scale: Some(1),
        }
    }

    /// Rename factors into chosen positions of a wider tensor algebra:
    /// factor `i` lands at `positions[i]` of `target`.
    pub fn place_into(&self, positions: &[usize], target: &TensorAlgebra) -> AlgebraMap {
        assert_eq!(positions.len(), self.factors.len());
        let mut images = Vec::with_capacity(self.alg.generators.len());
        for (i, factor) in self.factors.iter().enumerate() {
            assert_eq!(
                factor.generators, target.factors[positions[i]].generators,
                "factor mismatch in place_into"
            );
            for g in 0..factor.generators.len() {
                images.push(Polynomial::generator(
                    &target.alg,
                    target.offsets[positions[i]] + g,
                ));
            }
        }
        AlgebraMap {
            source: self.alg.clone(),
            target: target.alg.clone(),
            images,
            weight_scale: Some(1),
        }
    }

    /// Fold all factors into one algebra by multiplication (every factor must
    /// equal `target`): the codiagonal a x b -> a*b.
    pub fn fold_multiply(&self, target: &Algebra) -> AlgebraMap {
        let mut images = Vec::with_capacity(self.alg.generators.len());
        for i in 0..self.factors.len() {
            assert_eq!(self.factors[i].generators, target.generators, "fold requires equal factors");
            for g in 0..self.factors[i].generators.len() {
                images.push(Polynomial::generator(target, g));
            }
        }
        AlgebraMap {
            source: self.alg.clone(),
            target: target.clone(),
            images,
            weight_scale: Some(1),
        }
    }

    /// Render a polynomial with `x` separators, canonical term order:
    /// `c1^2@c2 + ...` where `@` is the tensor sign.
    pub fn render(&self, p: &Polynomial) -> String {
        if p.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        let mut first = true;
        for (m, c) in p.terms.iter().rev() {
            let coeff = render_coeff(c);
            let (neg, mag) = coeff;
            if first {
                if neg {
                    out.push('-');
                }
                first = false;
            } else if neg {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let parts = self.split_monomial(m);
            let body = parts
                .iter()
                .enumerate()
                .map(|(i, pm)| super::poly::render_monomial(&self.factors[i], pm))
                .collect::<Vec<_>>()
                .join("\u{2297}");
            if mag == "1" {
                out.push_str(&body);
            } else {
                out.push_str(&format!("{mag}*{body}"));
            }
        }
        out
    }
}

fn render_coeff(c: &Scalar) -> (bool, String) {
    let s = c.to_string();
    match s.strip_prefix('-') {
        Some(rest) => (true, rest.to_string()),
        None => (false, s),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_algebra::ring::CoefficientRing;

    fn single(name: &str, weight: u32, bound: u32) -> Algebra {
        TruncatedAlgebra::free(CoefficientRing::Integers, vec![Generator::even(name, weight)], bound)
    }

    #[test]
    fn monomial_count_in_square_tensor() {
        let a = single("c1", 1, 2);
        let t = tensor_algebra(&a, &a);
        // weight <= 2 monomials in cL, cR: 1, cL, cR, cL^2, cLcR, cR^2
        assert_eq!(t.alg.total_rank(), 6);
    }

    #[test]
    fn tensor_with_base_is_identity_on_ranks() {
        let a = single("c1", 1, 3);
        let k = TruncatedAlgebra::base(CoefficientRing::Integers);
        let t = tensor_many(&[&a, &k], 3);
        assert_eq!(t.alg.total_rank(), a.total_rank());
    }

    #[test]
    fn koszul_sign_across_factors() {
        let e1 = TruncatedAlgebra::free(
            CoefficientRing::Integers,
            vec![Generator::odd("x", 1)],
            4,
        );
        let e2 = TruncatedAlgebra::free(
            CoefficientRing::Integers,
            vec![Generator::odd("y", 1)],
            4,
        );
        let t = tensor_many(&[&e1, &e2], 4);
        let x = Polynomial::generator_named(&e1, "x");
        let y = Polynomial::generator_named(&e2, "y");
        let xy = t.pure_tensor(&[&x, &y]);
        // (x@y)(x@y) = -(x x)(y y)-signed: odd*odd square is zero
        assert!(xy.mul(&xy).is_zero());

        // flip: x@y -> -(y@x) under the permutation map into the swapped product
        let t_swapped = tensor_many(&[&e2, &e1], 4);
        let flip = t.permute(&[1, 0], &t_swapped);
        let image = flip.apply(&xy);
        let yx = t_swapped.pure_tensor(&[&y, &x]);
        assert_eq!(image, yx.neg());
    }

    #[test]
    fn render_tensor_terms() {
        let a = single("c1", 1, 4);
        let t = tensor_many(&[&a, &a], 4);
        let c = Polynomial::generator_named(&a, "c1");
        let one = Polynomial::one(&a);
        let p = t
            .pure_tensor(&[&c, &one])
            .add(&t.pure_tensor(&[&one, &c]).scale_i64(-2));
        let s = t.render(&p);
        assert!(s.contains("c1\u{2297}1"));
        assert!(s.contains("2*1\u{2297}c1"));
    }
}

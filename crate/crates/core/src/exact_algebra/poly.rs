//! Sparse graded-commutative polynomials over weighted generators, with
//! weight truncation, Koszul signs for odd generators, and canonical forms
//! modulo confluent rewrite relations (divided powers, orthogonal
//! idempotents).

use super::ring::{CoefficientRing, Scalar};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Parity {
    Even,
    Odd,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Generator {
    pub name: String,
    pub weight: u32,
    pub parity: Parity,
}

impl Generator {
    pub fn even(name: impl Into<String>, weight: u32) -> Self {
        Generator { name: name.into(), weight, parity: Parity::Even }
    }

    pub fn odd(name: impl Into<String>, weight: u32) -> Self {
        Generator { name: name.into(), weight, parity: Parity::Odd }
    }
}

/// Exponent vector, sparse and sorted by generator index. The cached weight
/// makes the graded ordering cheap.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Monomial {
    exps: Vec<(u16, u16)>,
    weight: u32,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial { exps: Vec::new(), weight: 0 }
    }

    pub fn from_exps(alg: &TruncatedAlgebra, exps: &[(usize, u32)]) -> Self {
        let mut map: BTreeMap<u16, u16> = BTreeMap::new();
        for &(g, e) in exps {
            if e > 0 {
                *map.entry(g as u16).or_insert(0) += e as u16;
            }
        }
        let exps: Vec<(u16, u16)> = map.into_iter().collect();
        let weight = exps
            .iter()
            .map(|&(g, e)| alg.generators[g as usize].weight * e as u32)
            .sum();
        Monomial { exps, weight }
    }

    pub fn weight(&self) -> u32 {
        self.weight
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&(_, e)| e as u32).sum()
    }

    pub fn exps(&self) -> &[(u16, u16)] {
        &self.exps
    }

    pub fn exponent_of(&self, g: usize) -> u16 {
        self.exps
            .iter()
            .find(|&&(i, _)| i as usize == g)
            .map_or(0, |&(_, e)| e)
    }

    pub fn parity(&self, alg: &TruncatedAlgebra) -> Parity {
        let odd_count: u32 = self
            .exps
            .iter()
            .filter(|&&(g, _)| alg.generators[g as usize].parity == Parity::Odd)
            .map(|&(_, e)| e as u32)
            .sum();
        if odd_count % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// Does `self` divide `m` componentwise?
    pub fn divides(&self, m: &Monomial) -> bool {
        self.exps.iter().all(|&(g, e)| m.exponent_of(g as usize) >= e)
    }

    /// `m / self`, assuming `self.divides(m)`.
    fn div_into(&self, m: &Monomial, alg: &TruncatedAlgebra) -> Monomial {
        let mut exps = Vec::new();
        let mut weight = 0;
        for &(g, e) in &m.exps {
            let sub = self.exponent_of(g as usize);
            debug_assert!(e >= sub, "not divisible");
            let rem = e - sub;
            if rem > 0 {
                exps.push((g, rem));
                weight += alg.generators[g as usize].weight * rem as u32;
            }
        }
        Monomial { exps, weight }
    }

    /// Graded reverse-lexicographic comparison: first by weight, then within
    /// a weight by the classical grevlex rule on generator indices.
    pub fn cmp_grevlex(&self, other: &Monomial) -> std::cmp::Ordering {
        use std::cmp::Ordering;
        match self.weight.cmp(&other.weight) {
            Ordering::Equal => {}
            o => return o,
        }
        // Walk indices from the highest down; the monomial with the smaller
        // exponent at the last difference is the larger one.
        let mut i = self.exps.len();
        let mut j = other.exps.len();
        loop {
            match (i, j) {
                (0, 0) => return Ordering::Equal,
                (0, _) => return Ordering::Greater,
                (_, 0) => return Ordering::Less,
                _ => {}
            }
            let (ga, ea) = self.exps[i - 1];
            let (gb, eb) = other.exps[j - 1];
            match ga.cmp(&gb) {
                std::cmp::Ordering::Greater => return Ordering::Less,
                std::cmp::Ordering::Less => return Ordering::Greater,
                std::cmp::Ordering::Equal => match ea.cmp(&eb) {
                    std::cmp::Ordering::Greater => return Ordering::Less,
                    std::cmp::Ordering::Less => return Ordering::Greater,
                    std::cmp::Ordering::Equal => {
                        i -= 1;
                        j -= 1;
                    }
                },
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.cmp_grevlex(other)
    }
}

/// A confluent rewrite `lhs -> sum of (monomial, integer coefficient)`.
/// Restricted to even generators so no Koszul bookkeeping is needed during
/// reduction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RewriteRule {
    pub lhs: Monomial,
    pub rhs: Vec<(Monomial, BigInt)>,
}

/// A level of a pro-algebra tower: the free graded-commutative algebra on
/// weighted generators, truncated at `bound`, modulo the stored relations.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TruncatedAlgebra {
    pub ring: CoefficientRing,
    pub generators: Vec<Generator>,
    pub bound: u32,
    pub relations: Vec<RewriteRule>,
    /// Index ranges of complete orthogonal idempotent families: within a
    /// range, distinct generators multiply to zero and squares collapse.
    #[serde(default)]
    pub orthogonal_families: Vec<(usize, usize)>,
}

pub type Algebra = Arc<TruncatedAlgebra>;

impl TruncatedAlgebra {
    pub fn free(ring: CoefficientRing, generators: Vec<Generator>, bound: u32) -> Algebra {
        Arc::new(TruncatedAlgebra {
            ring,
            generators,
            bound,
            relations: Vec::new(),
            orthogonal_families: Vec::new(),
        })
    }

    /// Free algebra with marked orthogonal idempotent generator ranges.
    pub fn with_orthogonal_families(
        ring: CoefficientRing,
        generators: Vec<Generator>,
        bound: u32,
        families: Vec<(usize, usize)>,
    ) -> Algebra {
        Arc::new(TruncatedAlgebra {
            ring,
            generators,
            bound,
            relations: Vec::new(),
            orthogonal_families: families,
        })
    }

    pub fn with_relations(
        ring: CoefficientRing,
        generators: Vec<Generator>,
        bound: u32,
        relations: Vec<RewriteRule>,
    ) -> Algebra {
        for rule in &relations {
            for &(g, _) in rule.lhs.exps() {
                assert_eq!(
                    generators[g as usize].parity,
                    Parity::Even,
                    "rewrite rules are restricted to even generators"
                );
            }
        }
        Arc::new(TruncatedAlgebra {
            ring,
            generators,
            bound,
            relations,
            orthogonal_families: Vec::new(),
        })
    }

    /// The base ring as a trivial algebra (no generators).
    pub fn base(ring: CoefficientRing) -> Algebra {
        Self::free(ring, Vec::new(), 0)
    }

    pub fn gen_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g.name == name)
    }

    /// Largest exponent a generator can carry in a normal-form monomial.
    fn exponent_cap(&self, g: usize) -> u32 {
        let generator = &self.generators[g];
        if generator.parity == Parity::Odd {
            return 1;
        }
        let square_reducible = self.relations.iter().any(|r| {
            r.lhs.exps().len() == 1 && r.lhs.exps()[0].0 as usize == g && r.lhs.exps()[0].1 == 2
        });
        if square_reducible || self.family_of(g).is_some() {
            return 1;
        }
        if generator.weight == 0 {
            panic!(
                "generator {} has weight 0 and no square rule: weight components would be infinite",
                generator.name
            );
        }
        self.bound / generator.weight
    }

    /// Canonical basis monomials of the given weight, in canonical order.
    pub fn weight_basis(&self, w: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut current: Vec<(usize, u32)> = Vec::new();
        self.enumerate(0, w, &mut current, &mut out);
        out.sort();
        out
    }

    fn enumerate(&self, g: usize, remaining: u32, current: &mut Vec<(usize, u32)>, out: &mut Vec<Monomial>) {
        if g == self.generators.len() {
            if remaining == 0 {
                let m = Monomial::from_exps(self, current);
                if !self.is_reducible(&m) {
                    out.push(m);
                }
            }
            return;
        }
        let weight = self.generators[g].weight;
        let cap = self.exponent_cap(g);
        let max_e = if weight == 0 { cap } else { cap.min(remaining / weight.max(1)) };
        for e in 0..=max_e {
            let used = weight * e;
            if used > remaining {
                break;
            }
            if e > 0 {
                current.push((g, e));
            }
            self.enumerate(g + 1, remaining - used, current, out);
            if e > 0 {
                current.pop();
            }
        }
    }

    fn is_reducible(&self, m: &Monomial) -> bool {
        self.relations.iter().any(|r| r.lhs.divides(m)) || self.family_collapses(m).is_some()
    }

    pub fn family_of(&self, g: usize) -> Option<usize> {
        self.orthogonal_families.iter().position(|&(a, b)| a <= g && g < b)
    }

    /// None when the monomial is family-normal; Some(None) when it dies
    /// (distinct idempotents multiplied); Some(Some(m')) when squares
    /// collapse to m'.
    fn family_collapses(&self, m: &Monomial) -> Option<Option<Monomial>> {
        let mut changed = false;
        let mut exps: Vec<(usize, u32)> = Vec::with_capacity(m.exps().len());
        for fam in 0..self.orthogonal_families.len() {
            let members: Vec<(u16, u16)> = m
                .exps()
                .iter()
                .filter(|&&(g, _)| self.family_of(g as usize) == Some(fam))
                .cloned()
                .collect();
            if members.len() >= 2 {
                return Some(None);
            }
            if let Some(&(_, e)) = members.first() {
                if e >= 2 {
                    changed = true;
                }
            }
        }
        if !changed {
            return None;
        }
        for &(g, e) in m.exps() {
            let capped = if self.family_of(g as usize).is_some() { 1 } else { e as u32 };
            exps.push((g as usize, capped.min(e as u32).max(if e > 0 { 1 } else { 0 })));
        }
        Some(Some(Monomial::from_exps(self, &exps)))
    }

    /// Total rank through the truncation bound.
    pub fn total_rank(&self) -> usize {
        (0..=self.bound).map(|w| self.weight_basis(w).len()).sum()
    }
}

/// A polynomial in canonical form: no zero coefficients, all monomials normal
/// and within the truncation bound.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    pub algebra: Algebra,
    pub terms: BTreeMap<Monomial, Scalar>,
}

impl Polynomial {
    pub fn zero(alg: &Algebra) -> Self {
        Polynomial { algebra: alg.clone(), terms: BTreeMap::new() }
    }

    pub fn one(alg: &Algebra) -> Self {
        Self::constant(alg, alg.ring.one())
    }

    pub fn constant(alg: &Algebra, c: Scalar) -> Self {
        let mut p = Self::zero(alg);
        p.add_term(Monomial::one(), c);
        p
    }

    pub fn from_i64(alg: &Algebra, n: i64) -> Self {
        Self::constant(alg, alg.ring.from_i64(n))
    }

    pub fn generator(alg: &Algebra, g: usize) -> Self {
        let m = Monomial::from_exps(alg, &[(g, 1)]);
        let mut p = Self::zero(alg);
        p.add_term(m, alg.ring.one());
        p
    }

    pub fn generator_named(alg: &Algebra, name: &str) -> Self {
        let g = alg.gen_index(name).unwrap_or_else(|| panic!("no generator named {name}"));
        Self::generator(alg, g)
    }

    pub fn monomial(alg: &Algebra, exps: &[(usize, u32)], coeff: Scalar) -> Self {
        let m = Monomial::from_exps(alg, exps);
        let mut p = Self::zero(alg);
        p.add_normalized(m, coeff);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Add a raw term assumed to be already normal, in-bound, nonzero-safe.
    fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() || m.weight() > self.algebra.bound {
            return;
        }
        let ring = self.algebra.ring;
        let entry = self.terms.entry(m);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = ring.add(o.get(), &c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    /// Add a term, reducing the monomial to normal form first.
    fn add_normalized(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() || m.weight() > self.algebra.bound {
            return;
        }
        let alg = self.algebra.clone();
        // odd generators square to zero
        if m.exps().iter().any(|&(g, e)| {
            e >= 2 && alg.generators[g as usize].parity == Parity::Odd
        }) {
            return;
        }
        match alg.family_collapses(&m) {
            Some(None) => return,
            Some(Some(reduced)) => {
                self.add_normalized(reduced, c);
                return;
            }
            None => {}
        }
        if let Some(rule) = alg.relations.iter().find(|r| r.lhs.divides(&m)) {
            let rest = rule.lhs.div_into(&m, &alg);
            for (rm, rc) in &rule.rhs {
                let (prod, sign_zero) = mul_monomials(&alg, rm, &rest);
                if sign_zero {
                    continue;
                }
                let (pm, sign) = prod;
                let mut coeff = alg.ring.mul(&c, &alg.ring.from_bigint(rc.clone()));
                if sign < 0 {
                    coeff = alg.ring.neg(&coeff);
                }
                self.add_normalized(pm, coeff);
            }
        } else {
            self.add_term(m, c);
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        assert!(same_algebra(&self.algebra, &other.algebra), "mismatched algebras");
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Polynomial {
        let ring = self.algebra.ring;
        let mut out = Self::zero(&self.algebra);
        for (m, c) in &self.terms {
            out.terms.insert(m.clone(), ring.neg(c));
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        let ring = self.algebra.ring;
        let mut out = Self::zero(&self.algebra);
        for (m, v) in &self.terms {
            out.add_term(m.clone(), ring.mul(v, c));
        }
        out
    }

    pub fn scale_i64(&self, n: i64) -> Polynomial {
        self.scale(&self.algebra.ring.from_i64(n))
    }

    /// Graded-commutative product with Koszul signs; monomials above the
    /// bound are discarded and relations are reduced to canonical form.
    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        assert!(same_algebra(&self.algebra, &other.algebra), "mismatched algebras");
        let alg = &self.algebra;
        let ring = alg.ring;
        let mut out = Self::zero(alg);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                if ma.weight() + mb.weight() > alg.bound {
                    continue;
                }
                let (prod, zero) = mul_monomials(alg, ma, mb);
                if zero {
                    continue;
                }
                let (m, sign) = prod;
                let mut c = ring.mul(ca, cb);
                if sign < 0 {
                    c = ring.neg(&c);
                }
                out.add_normalized(m, c);
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> Polynomial {
        let mut out = Self::one(&self.algebra);
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(|| self.algebra.ring.zero())
    }

    /// The summand of the given weight.
    pub fn weight_part(&self, w: u32) -> Polynomial {
        let mut out = Self::zero(&self.algebra);
        for (m, c) in &self.terms {
            if m.weight() == w {
                out.terms.insert(m.clone(), c.clone());
            }
        }
        out
    }

    pub fn max_weight(&self) -> u32 {
        self.terms.keys().map(|m| m.weight()).max().unwrap_or(0)
    }

    pub fn is_homogeneous_of(&self, w: u32) -> bool {
        self.terms.keys().all(|m| m.weight() == w)
    }

    /// Move to an algebra with the same generators but a different bound,
    /// truncating as needed.
    pub fn rebound(&self, target: &Algebra) -> Polynomial {
        assert_eq!(self.algebra.generators, target.generators, "rebound requires equal generators");
        let mut out = Self::zero(target);
        for (m, c) in &self.terms {
            out.add_normalized(m.clone(), c.clone());
        }
        out
    }

    /// Coefficients of this polynomial on the weight-w basis, canonical order.
    pub fn weight_coordinates(&self, w: u32, basis: &[Monomial]) -> Vec<Scalar> {
        let part = self.weight_part(w);
        basis.iter().map(|m| part.coefficient(m)).collect()
    }
}

/// Multiply two normal monomials: returns ((monomial, sign), is_zero) where
/// the sign is the Koszul sign from interleaving odd generators and is_zero
/// flags an odd generator squared.
pub fn mul_monomials(
    alg: &TruncatedAlgebra,
    a: &Monomial,
    b: &Monomial,
) -> ((Monomial, i8), bool) {
    // Count the Koszul swaps: for each odd generator in b, the odd
    // generators of a with larger index hop over it.
    let odd_positions_a: Vec<u16> = a
        .exps
        .iter()
        .filter(|&&(g, _)| alg.generators[g as usize].parity == Parity::Odd)
        .map(|&(g, _)| g)
        .collect();
    let mut sign: i8 = 1;
    for &(g, e) in &b.exps {
        if alg.generators[g as usize].parity == Parity::Odd {
            if a.exponent_of(g as usize) > 0 && e > 0 {
                return ((Monomial::one(), 1), true);
            }
            if e > 1 {
                return ((Monomial::one(), 1), true);
            }
            let swaps = odd_positions_a.iter().filter(|&&h| h > g).count();
            if swaps % 2 == 1 {
                sign = -sign;
            }
        }
    }
    let mut exps: BTreeMap<u16, u16> = a.exps.iter().cloned().collect();
    for &(g, e) in &b.exps {
        *exps.entry(g).or_insert(0) += e;
    }
    let exps: Vec<(u16, u16)> = exps.into_iter().collect();
    let weight = exps
        .iter()
        .map(|&(g, e)| alg.generators[g as usize].weight * e as u32)
        .sum();
    ((Monomial { exps, weight }, sign), false)
}

pub fn same_algebra(a: &Algebra, b: &Algebra) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let cs = c.to_string();
            let (neg, mag) = match cs.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, cs),
            };
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let ms = render_monomial(&self.algebra, m);
            if ms == "1" {
                write!(f, "{mag}")?;
            } else if mag == "1" {
                write!(f, "{ms}")?;
            } else {
                write!(f, "{mag}*{ms}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub fn render_monomial(alg: &TruncatedAlgebra, m: &Monomial) -> String {
    if m.is_one() {
        return "1".to_string();
    }
    let mut parts = Vec::new();
    for &(g, e) in m.exps() {
        let name = &alg.generators[g as usize].name;
        if e == 1 {
            parts.push(name.clone());
        } else {
            parts.push(format!("{name}^{e}"));
        }
    }
    parts.join("*")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_algebra::ring::binomial;

    fn lambda_alg(n: u32) -> Algebra {
        let gens = (1..=n).map(|i| Generator::even(format!("c{i}"), i)).collect();
        TruncatedAlgebra::free(CoefficientRing::Integers, gens, n)
    }

    #[test]
    fn even_generators_commute() {
        let alg = lambda_alg(4);
        let c1 = Polynomial::generator_named(&alg, "c1");
        let c2 = Polynomial::generator_named(&alg, "c2");
        assert_eq!(c1.mul(&c2), c2.mul(&c1));
        assert_eq!(c1.mul(&c1), Polynomial::monomial(&alg, &[(0, 2)], CoefficientRing::Integers.one()));
    }

    #[test]
    fn odd_square_vanishes() {
        let alg = TruncatedAlgebra::free(
            CoefficientRing::Integers,
            vec![Generator::odd("x", 1), Generator::odd("y", 1)],
            4,
        );
        let x = Polynomial::generator_named(&alg, "x");
        let y = Polynomial::generator_named(&alg, "y");
        assert!(x.mul(&x).is_zero());
        assert_eq!(x.mul(&y), y.mul(&x).neg());
    }

    #[test]
    fn truncation_drops_heavy_monomials() {
        let alg = lambda_alg(2);
        let c2 = Polynomial::generator_named(&alg, "c2");
        assert!(c2.mul(&c2).is_zero());
    }

    #[test]
    fn divided_power_rule() {
        // x1*x2 = C(3,1) x3 under the divided power relations
        let gens: Vec<Generator> = (1..=3).map(|i| Generator::even(format!("x{i}"), i)).collect();
        let mut rules = Vec::new();
        let proto = TruncatedAlgebra::free(CoefficientRing::Integers, gens.clone(), 3);
        for i in 1..=3usize {
            for j in i..=3usize {
                if i + j > 3 {
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
        let alg = TruncatedAlgebra::with_relations(CoefficientRing::Integers, gens, 3, rules);
        let x1 = Polynomial::generator_named(&alg, "x1");
        let x2 = Polynomial::generator_named(&alg, "x2");
        let x3 = Polynomial::generator_named(&alg, "x3");
        assert_eq!(x1.mul(&x2), x3.scale_i64(3));
        assert_eq!(x1.mul(&x1), Polynomial::generator_named(&alg, "x2").scale_i64(2));
    }

    #[test]
    fn weight_basis_counts_partitions() {
        let alg = lambda_alg(6);
        // rank of weight w component of Z[c1..] is the partition count p(w)
        let expected = [1usize, 1, 2, 3, 5, 7, 11];
        for (w, &p) in expected.iter().enumerate() {
            assert_eq!(alg.weight_basis(w as u32).len(), p, "weight {w}");
        }
    }

    #[test]
    fn display_canonical() {
        let alg = lambda_alg(4);
        let c1 = Polynomial::generator_named(&alg, "c1");
        let c2 = Polynomial::generator_named(&alg, "c2");
        let p = c1.pow(2).sub(&c2.scale_i64(2));
        assert_eq!(p.to_string(), "c1^2 - 2*c2");
    }
}

//! N-indexed truncation towers as the computational stand-in for pro-objects:
//! levelwise algebras with drop-transitions, morphisms with monotone
//! reindexing, semi-decidable pro-equality, levelwise tensor, and levelwise
//! duals of free module towers.

use crate::exact_algebra::map::{AlgebraMap, GradedModule, LinearMapByWeight};
use crate::exact_algebra::matrix::{CokernelPresentation, MatExact};
use crate::exact_algebra::poly::{Algebra, Polynomial};
use crate::exact_algebra::tensor::{tensor_many, TensorAlgebra};
use std::collections::BTreeMap;
use std::sync::{Arc, RwLock};

/// A tower of truncated algebras indexed by the natural numbers. Levels are
/// produced lazily and cached; the cache is transparent (level builders are
/// pure) and internally synchronized.
#[derive(Clone)]
pub struct Tower {
    inner: Arc<TowerInner>,
}

struct TowerInner {
    name: String,
    make_level: Box<dyn Fn(u32) -> Algebra + Send + Sync>,
    cache: RwLock<BTreeMap<u32, Algebra>>,
}

impl std::fmt::Debug for Tower {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Tower({})", self.inner.name)
    }
}

impl Tower {
    pub fn from_fn(
        name: impl Into<String>,
        make_level: impl Fn(u32) -> Algebra + Send + Sync + 'static,
    ) -> Self {
        Tower {
            inner: Arc::new(TowerInner {
                name: name.into(),
                make_level: Box::new(make_level),
                cache: RwLock::new(BTreeMap::new()),
            }),
        }
    }

    /// The constant tower on a fixed algebra.
    pub fn constant(name: impl Into<String>, alg: Algebra) -> Self {
        Self::from_fn(name, move |_| alg.clone())
    }

    pub fn name(&self) -> &str {
        &self.inner.name
    }

    pub fn level(&self, n: u32) -> Algebra {
        if let Some(a) = self.inner.cache.read().unwrap().get(&n) {
            return a.clone();
        }
        let built = (self.inner.make_level)(n);
        let mut cache = self.inner.cache.write().unwrap();
        cache.entry(n).or_insert(built).clone()
    }

    /// Transition `level(hi) -> level(lo)` (`lo <= hi`): generators are
    /// matched by name, unmatched generators are dropped to zero.
    pub fn transition(&self, lo: u32, hi: u32) -> AlgebraMap {
        assert!(lo <= hi, "transition wants lo <= hi");
        let src = self.level(hi);
        let dst = self.level(lo);
        let images = src
            .generators
            .iter()
            .map(|g| match dst.gen_index(&g.name) {
                Some(i) => Polynomial::generator(&dst, i),
                None => Polynomial::zero(&dst),
            })
            .collect();
        AlgebraMap { source: src, target: dst, images, weight_scale: Some(1) }
    }

    pub fn same_family(&self, other: &Tower) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
    }
}

/// A morphism of towers: a monotone reindexing together with components
/// `source.level(reindex(n)) -> target.level(n)` commuting with transitions
/// after further truncation.
#[derive(Clone)]
pub struct ProMorphism {
    pub source: Tower,
    pub target: Tower,
    reindex: Arc<dyn Fn(u32) -> u32 + Send + Sync>,
    component: Arc<dyn Fn(u32) -> AlgebraMap + Send + Sync>,
    family: Arc<()>,
}

impl std::fmt::Debug for ProMorphism {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "ProMorphism({} -> {})", self.source.name(), self.target.name())
    }
}

impl ProMorphism {
    pub fn new(
        source: Tower,
        target: Tower,
        reindex: impl Fn(u32) -> u32 + Send + Sync + 'static,
        component: impl Fn(u32) -> AlgebraMap + Send + Sync + 'static,
    ) -> Self {
        ProMorphism {
            source,
            target,
            reindex: Arc::new(reindex),
            component: Arc::new(component),
            family: Arc::new(()),
        }
    }

    pub fn identity(t: &Tower) -> Self {
        let tc = t.clone();
        Self::new(t.clone(), t.clone(), |n| n, move |n| AlgebraMap::identity(&tc.level(n)))
    }

    pub fn reindex(&self, n: u32) -> u32 {
        (self.reindex)(n)
    }

    pub fn component(&self, n: u32) -> AlgebraMap {
        (self.component)(n)
    }

    /// The same pro-morphism presented with a deeper reindexing; shares the
    /// defining family so `pro_equal` recognizes it.
    pub fn restrict(&self, extra: u32) -> ProMorphism {
        let src = self.source.clone();
        let reindex = self.reindex.clone();
        let reindex2 = self.reindex.clone();
        let component = self.component.clone();
        ProMorphism {
            source: self.source.clone(),
            target: self.target.clone(),
            reindex: Arc::new(move |n| reindex2(n) + extra),
            component: Arc::new(move |n| {
                let base = reindex(n);
                component(n).compose(&src.transition(base, base + extra))
            }),
            family: self.family.clone(),
        }
    }

    pub fn compose(&self, inner: &ProMorphism) -> ProMorphism {
        assert!(inner.target.same_family(&self.source), "pro-morphisms not composable");
        let outer_re = self.reindex.clone();
        let outer_re2 = self.reindex.clone();
        let inner_re = inner.reindex.clone();
        let outer_c = self.component.clone();
        let inner_c = inner.component.clone();
        ProMorphism {
            source: inner.source.clone(),
            target: self.target.clone(),
            reindex: Arc::new(move |n| inner_re(outer_re(n))),
            component: Arc::new(move |n| outer_c(n).compose(&inner_c(outer_re2(n)))),
            family: Arc::new(()),
        }
    }
}

/// Result of the semi-decidable pro-equality test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ProEqual {
    Equal,
    NotEqual { level: u32, witness: String },
    /// Agreement on every inspected level, with no structural certificate
    /// that deeper levels also agree.
    UndecidedAtDepth(u32),
}

/// Compare two pro-morphisms through the given depth.
///
/// Morphisms sharing a defining family (identical families or restriction
/// variants of one family) are equal outright. Otherwise each level
/// `n <= depth` is compared after restriction to the common source level; a
/// stable difference decides inequality, and agreement everywhere yields
/// `UndecidedAtDepth` since deeper levels remain uninspected.
pub fn pro_equal(f: &ProMorphism, g: &ProMorphism, depth: u32) -> ProEqual {
    assert!(f.source.same_family(&g.source) && f.target.same_family(&g.target), "mismatched towers");
    if Arc::ptr_eq(&f.family, &g.family) {
        return ProEqual::Equal;
    }
    for n in 0..=depth {
        let rf = f.reindex(n);
        let rg = g.reindex(n);
        let m = rf.max(rg);
        let cf = f.component(n).compose(&f.source.transition(rf, m));
        let cg = g.component(n).compose(&g.source.transition(rg, m));
        if !cf.equal_on_generators(&cg) {
            let witness = cf
                .first_difference(&cg)
                .map(|(gen, a, b)| format!("{gen}: {a} vs {b}"))
                .unwrap_or_else(|| "component mismatch".to_string());
            return ProEqual::NotEqual { level: n, witness };
        }
    }
    ProEqual::UndecidedAtDepth(depth)
}

/// Levelwise tensor product of towers, reindexed to the diagonal:
/// `level(n) = level_S(n) (x) level_T(n)` with total weight bound `n`.
pub fn tower_tensor(s: &Tower, t: &Tower) -> Tower {
    let s2 = s.clone();
    let t2 = t.clone();
    Tower::from_fn(format!("{}(x){}", s.name(), t.name()), move |n| {
        let a = s2.level(n);
        let b = t2.level(n);
        tensor_many(&[&a, &b], n).alg
    })
}

/// The tensor context at a level (embeddings, splitting), matching
/// `tower_tensor(s, t).level(n)`.
pub fn tower_tensor_context(s: &Tower, t: &Tower, n: u32) -> TensorAlgebra {
    let a = s.level(n);
    let b = t.level(n);
    tensor_many(&[&a, &b], n)
}

/// Dual of a free graded module level: same ranks per weight.
pub fn dual_level(m: &GradedModule) -> GradedModule {
    let mut d = m.clone();
    d.labels = BTreeMap::new();
    d
}

/// Dualize a levelwise map of free module towers: transposed blocks with
/// source and target exchanged.
pub fn dual_map(f: &LinearMapByWeight) -> LinearMapByWeight {
    let mut out = LinearMapByWeight::zero(dual_level(&f.target), dual_level(&f.source));
    for (&(ws, wt), m) in &f.blocks {
        out.insert_block(wt, ws, m.transpose());
    }
    out
}

/// Levelwise dualizability of a presented module: torsion means failure.
pub fn dual_presented(p: &CokernelPresentation) -> Result<usize, String> {
    if p.is_free() {
        Ok(p.free_rank)
    } else {
        Err(format!("not dualizable levelwise: torsion {:?}", p.torsion))
    }
}

/// Transpose twice is the identity on matrices (used by the duality suites).
pub fn double_transpose_is_identity(m: &MatExact) -> bool {
    m.transpose().transpose() == *m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_algebra::poly::{Generator, TruncatedAlgebra};
    use crate::exact_algebra::ring::CoefficientRing;

    fn power_series_tower() -> Tower {
        Tower::from_fn("k[[c]]", |n| {
            TruncatedAlgebra::free(CoefficientRing::Integers, vec![Generator::even("c", 1)], n)
        })
    }

    #[test]
    fn transitions_compose() {
        let t = power_series_tower();
        let t02 = t.transition(0, 2);
        let t24 = t.transition(2, 4);
        let direct = t.transition(0, 4);
        assert!(t02.compose(&t24).equal_on_generators(&direct));
        assert!(t.transition(3, 3).equal_on_generators(&AlgebraMap::identity(&t.level(3))));
    }

    #[test]
    fn identity_is_pro_equal_to_itself() {
        let t = power_series_tower();
        let id = ProMorphism::identity(&t);
        assert_eq!(pro_equal(&id, &id, 4), ProEqual::Equal);
    }

    #[test]
    fn restriction_is_pro_equal() {
        let t = power_series_tower();
        let id = ProMorphism::identity(&t);
        let r1 = id.restrict(1);
        let r2 = id.restrict(2);
        assert_eq!(pro_equal(&r1, &r2, 5), ProEqual::Equal);
    }

    #[test]
    fn deep_difference_is_undecided_then_found() {
        let t = power_series_tower();
        let depth = 3u32;
        let id = ProMorphism::identity(&t);
        // c -> c + c^(depth+1), visible only from level depth+1 up
        let t2 = t.clone();
        let g = ProMorphism::new(t.clone(), t.clone(), |n| n, move |n| {
            let alg = t2.level(n);
            let c = Polynomial::generator_named(&alg, "c");
            let img = c.add(&c.pow(depth + 1));
            AlgebraMap::mixed(&alg, &alg, vec![img]).unwrap()
        });
        assert_eq!(pro_equal(&id, &g, depth), ProEqual::UndecidedAtDepth(depth));
        match pro_equal(&id, &g, depth + 1) {
            ProEqual::NotEqual { level, .. } => assert_eq!(level, depth + 1),
            other => panic!("expected NotEqual, got {other:?}"),
        }
    }

    #[test]
    fn tensor_tower_ranks_by_enumeration() {
        let t = power_series_tower();
        let tt = tower_tensor(&t, &t);
        // level 3: monomials in cL, cR of total weight <= 3: per-weight ranks 1,2,3,4
        let alg = tt.level(3);
        let ranks: Vec<usize> = (0..=3).map(|w| alg.weight_basis(w).len()).collect();
        assert_eq!(ranks, vec![1, 2, 3, 4]);
    }

    #[test]
    fn dual_of_drop_transition_is_inclusion() {
        // module tower with ranks (1,1,1) at weights 0..2; drop weight > 1
        let m2 = GradedModule::free(CoefficientRing::Integers, &[(0, 1), (1, 1), (2, 1)]);
        let m1 = GradedModule::free(CoefficientRing::Integers, &[(0, 1), (1, 1)]);
        let mut drop = LinearMapByWeight::zero(m2.clone(), m1.clone());
        drop.insert_block(0, 0, MatExact::identity(CoefficientRing::Integers, 1));
        drop.insert_block(1, 1, MatExact::identity(CoefficientRing::Integers, 1));
        let dual = dual_map(&drop);
        // dual: m1* -> m2*, the inclusion of the weight <= 1 span
        assert_eq!(dual.source, dual_level(&m1));
        assert_eq!(dual.target, dual_level(&m2));
        assert_eq!(dual.block(0, 0), MatExact::identity(CoefficientRing::Integers, 1));
        assert_eq!(dual.block(1, 1), MatExact::identity(CoefficientRing::Integers, 1));
        assert!(dual.block(2, 2).is_zero());
    }
}

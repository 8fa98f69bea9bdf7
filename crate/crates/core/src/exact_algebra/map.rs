//! Algebra maps determined by generator images, graded free modules, and the
//! per-weight matrix substrate used by the primitives/indecomposables and
//! Sweedler-product kernels.

use super::matrix::MatExact;
use super::poly::{same_algebra, Algebra, Monomial, Parity, Polynomial};
use super::ring::{CoefficientRing, Scalar};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// A homomorphism of truncated algebras determined by generator images.
///
/// `weight_scale` declares the grading behaviour: the image of a generator of
/// weight `w` must be homogeneous of weight `scale * w` (the comultiplication
/// of a ring scheme has scale 2; counits have scale 0). `None` disables the
/// homogeneity check for genuinely mixed maps.
#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraMap {
    pub source: Algebra,
    pub target: Algebra,
    pub images: Vec<Polynomial>,
    pub weight_scale: Option<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MapError {
    WeightMismatch { generator: String, expected: u32, got: Vec<u32> },
    ParityMismatch { generator: String },
    WrongImageCount { expected: usize, got: usize },
    MismatchedAlgebras,
}

impl std::fmt::Display for MapError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            MapError::WeightMismatch { generator, expected, got } => {
                write!(f, "image of {generator} is not homogeneous of weight {expected} (weights {got:?})")
            }
            MapError::ParityMismatch { generator } => {
                write!(f, "image of {generator} has the wrong parity")
            }
            MapError::WrongImageCount { expected, got } => {
                write!(f, "expected {expected} generator images, got {got}")
            }
            MapError::MismatchedAlgebras => write!(f, "mismatched algebras"),
        }
    }
}

impl std::error::Error for MapError {}

impl AlgebraMap {
    /// A weight-preserving map (scale 1).
    pub fn new(source: &Algebra, target: &Algebra, images: Vec<Polynomial>) -> Result<Self, MapError> {
        Self::with_scale(source, target, images, 1)
    }

    pub fn with_scale(
        source: &Algebra,
        target: &Algebra,
        images: Vec<Polynomial>,
        scale: u32,
    ) -> Result<Self, MapError> {
        if images.len() != source.generators.len() {
            return Err(MapError::WrongImageCount {
                expected: source.generators.len(),
                got: images.len(),
            });
        }
        for (g, img) in source.generators.iter().zip(&images) {
            if !same_algebra(&img.algebra, target) {
                return Err(MapError::MismatchedAlgebras);
            }
            let expected = g.weight * scale;
            if !img.is_zero() && !img.is_homogeneous_of(expected) {
                let got = img.terms.keys().map(|m| m.weight()).collect();
                return Err(MapError::WeightMismatch { generator: g.name.clone(), expected, got });
            }
            let odd_scaled = g.parity == Parity::Odd && scale % 2 == 1;
            let expected_parity = if odd_scaled { Parity::Odd } else { Parity::Even };
            if !img.is_zero()
                && img.terms.keys().any(|m| m.parity(target) != expected_parity)
            {
                return Err(MapError::ParityMismatch { generator: g.name.clone() });
            }
        }
        Ok(AlgebraMap { source: source.clone(), target: target.clone(), images, weight_scale: Some(scale) })
    }

    /// A map with no homogeneity contract (counit families, unit comparisons).
    pub fn mixed(source: &Algebra, target: &Algebra, images: Vec<Polynomial>) -> Result<Self, MapError> {
        if images.len() != source.generators.len() {
            return Err(MapError::WrongImageCount {
                expected: source.generators.len(),
                got: images.len(),
            });
        }
        if images.iter().any(|img| !same_algebra(&img.algebra, target)) {
            return Err(MapError::MismatchedAlgebras);
        }
        Ok(AlgebraMap { source: source.clone(), target: target.clone(), images, weight_scale: None })
    }

    pub fn identity(alg: &Algebra) -> Self {
        let images = (0..alg.generators.len()).map(|g| Polynomial::generator(alg, g)).collect();
        AlgebraMap { source: alg.clone(), target: alg.clone(), images, weight_scale: Some(1) }
    }

    /// The augmentation-style map sending every generator to zero.
    pub fn zero_images(source: &Algebra, target: &Algebra) -> Self {
        let images = vec![Polynomial::zero(target); source.generators.len()];
        AlgebraMap { source: source.clone(), target: target.clone(), images, weight_scale: Some(1) }
    }

    /// Multiplicative, unital, truncating application.
    pub fn apply(&self, p: &Polynomial) -> Polynomial {
        assert!(same_algebra(&p.algebra, &self.source), "polynomial not in the source algebra");
        let ring = self.target.ring;
        let mut out = Polynomial::zero(&self.target);
        for (m, c) in &p.terms {
            let mut prod = Polynomial::constant(&self.target, ring.normalize(c));
            for &(g, e) in m.exps() {
                for _ in 0..e {
                    prod = prod.mul(&self.images[g as usize]);
                    if prod.is_zero() {
                        break;
                    }
                }
                if prod.is_zero() {
                    break;
                }
            }
            out = out.add(&prod);
        }
        out
    }

    pub fn compose(&self, inner: &AlgebraMap) -> AlgebraMap {
        assert!(same_algebra(&inner.target, &self.source), "maps not composable");
        let images = inner.images.iter().map(|img| self.apply(img)).collect();
        let weight_scale = match (self.weight_scale, inner.weight_scale) {
            (Some(a), Some(b)) => Some(a * b),
            _ => None,
        };
        AlgebraMap {
            source: inner.source.clone(),
            target: self.target.clone(),
            images,
            weight_scale,
        }
    }

    pub fn equal_on_generators(&self, other: &AlgebraMap) -> bool {
        same_algebra(&self.source, &other.source)
            && same_algebra(&self.target, &other.target)
            && self.images == other.images
    }

    /// First generator whose images differ, as a witness for reports.
    pub fn first_difference(&self, other: &AlgebraMap) -> Option<(String, Polynomial, Polynomial)> {
        for (i, g) in self.source.generators.iter().enumerate() {
            if self.images[i] != other.images[i] {
                return Some((g.name.clone(), self.images[i].clone(), other.images[i].clone()));
            }
        }
        None
    }

    /// Exact matrix of the induced linear map from the weight-`w` component
    /// of the source to the weight-`w * scale` component of the target
    /// (columns indexed by the canonical source basis).
    pub fn weight_component_matrix(&self, w: u32) -> MatExact {
        let scale = self.weight_scale.expect("weight_component_matrix requires a homogeneous map");
        let src = self.source.weight_basis(w);
        let dst = self.target.weight_basis(w * scale);
        let ring = self.target.ring;
        let mut mat = MatExact::zero(ring, dst.len(), src.len());
        for (j, m) in src.iter().enumerate() {
            let img = self.apply(&Polynomial::monomial(&self.source, &expvec(m), ring_one(&self.source.ring)));
            for (i, b) in dst.iter().enumerate() {
                mat.set(i, j, img.coefficient(b));
            }
        }
        mat
    }

    /// All matrix blocks of the induced linear map through the given source
    /// weight, keyed by (source weight, target weight). Handles mixed maps.
    pub fn component_blocks(&self, max_weight: u32) -> BTreeMap<(u32, u32), MatExact> {
        let ring = self.target.ring;
        let mut out = BTreeMap::new();
        for w in 0..=max_weight.min(self.source.bound) {
            let src = self.source.weight_basis(w);
            if src.is_empty() {
                continue;
            }
            let mut images = Vec::with_capacity(src.len());
            for m in &src {
                images.push(self.apply(&Polynomial::monomial(&self.source, &expvec(m), ring_one(&self.source.ring))));
            }
            for tw in 0..=self.target.bound {
                let dst = self.target.weight_basis(tw);
                if dst.is_empty() {
                    continue;
                }
                let mut mat = MatExact::zero(ring, dst.len(), src.len());
                let mut nonzero = false;
                for (j, img) in images.iter().enumerate() {
                    let part = img.weight_part(tw);
                    for (i, b) in dst.iter().enumerate() {
                        let c = part.coefficient(b);
                        if !c.is_zero() {
                            nonzero = true;
                        }
                        mat.set(i, j, c);
                    }
                }
                if nonzero {
                    out.insert((w, tw), mat);
                }
            }
        }
        out
    }
}

fn expvec(m: &Monomial) -> Vec<(usize, u32)> {
    m.exps().iter().map(|&(g, e)| (g as usize, e as u32)).collect()
}

fn ring_one(ring: &CoefficientRing) -> Scalar {
    ring.one()
}

/// A graded free module of finite rank per weight, with optional basis labels.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedModule {
    pub ring: CoefficientRing,
    pub components: BTreeMap<u32, usize>,
    #[serde(default)]
    pub labels: BTreeMap<u32, Vec<String>>,
}

impl GradedModule {
    pub fn new(ring: CoefficientRing) -> Self {
        GradedModule { ring, components: BTreeMap::new(), labels: BTreeMap::new() }
    }

    pub fn free(ring: CoefficientRing, ranks: &[(u32, usize)]) -> Self {
        let mut m = Self::new(ring);
        for &(w, r) in ranks {
            if r > 0 {
                m.components.insert(w, r);
            }
        }
        m
    }

    pub fn rank(&self, w: u32) -> usize {
        self.components.get(&w).copied().unwrap_or(0)
    }

    pub fn total_rank(&self) -> usize {
        self.components.values().sum()
    }

    pub fn max_weight(&self) -> u32 {
        self.components.keys().max().copied().unwrap_or(0)
    }

    pub fn set_labels(&mut self, w: u32, labels: Vec<String>) {
        assert_eq!(labels.len(), self.rank(w));
        self.labels.insert(w, labels);
    }

    pub fn is_zero(&self) -> bool {
        self.components.is_empty()
    }
}

/// Per-weight exact matrices representing a module map; block (w -> w') is
/// stored under the key `(w, w')`. Missing blocks are zero.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LinearMapByWeight {
    pub source: GradedModule,
    pub target: GradedModule,
    pub blocks: BTreeMap<(u32, u32), MatExact>,
}

impl LinearMapByWeight {
    pub fn zero(source: GradedModule, target: GradedModule) -> Self {
        LinearMapByWeight { source, target, blocks: BTreeMap::new() }
    }

    pub fn identity(m: &GradedModule) -> Self {
        let mut blocks = BTreeMap::new();
        for (&w, &r) in &m.components {
            blocks.insert((w, w), MatExact::identity(m.ring, r));
        }
        LinearMapByWeight { source: m.clone(), target: m.clone(), blocks }
    }

    pub fn insert_block(&mut self, w_src: u32, w_dst: u32, mat: MatExact) {
        assert_eq!(mat.cols, self.source.rank(w_src), "block column mismatch");
        assert_eq!(mat.rows, self.target.rank(w_dst), "block row mismatch");
        if !mat.is_zero() {
            self.blocks.insert((w_src, w_dst), mat);
        }
    }

    pub fn block(&self, w_src: u32, w_dst: u32) -> MatExact {
        self.blocks.get(&(w_src, w_dst)).cloned().unwrap_or_else(|| {
            MatExact::zero(self.source.ring, self.target.rank(w_dst), self.source.rank(w_src))
        })
    }

    /// Composition `self . inner` as block matrix product per weight.
    pub fn compose(&self, inner: &LinearMapByWeight) -> LinearMapByWeight {
        assert_eq!(inner.target, self.source, "maps not composable");
        let mut out = LinearMapByWeight::zero(inner.source.clone(), self.target.clone());
        for (&(w0, w1), a) in &inner.blocks {
            for (&(w1b, w2), b) in &self.blocks {
                if w1 != w1b {
                    continue;
                }
                let prod = b.mul(a);
                let existing = out.block(w0, w2);
                let sum = existing.add(&prod);
                if !sum.is_zero() {
                    out.blocks.insert((w0, w2), sum);
                } else {
                    out.blocks.remove(&(w0, w2));
                }
            }
        }
        out
    }

    pub fn add(&self, other: &LinearMapByWeight) -> LinearMapByWeight {
        assert_eq!(self.source, other.source);
        assert_eq!(self.target, other.target);
        let mut out = self.clone();
        for (&k, m) in &other.blocks {
            let sum = out.blocks.get(&k).map_or_else(|| m.clone(), |e| e.add(m));
            if sum.is_zero() {
                out.blocks.remove(&k);
            } else {
                out.blocks.insert(k, sum);
            }
        }
        out
    }

    pub fn sub(&self, other: &LinearMapByWeight) -> LinearMapByWeight {
        self.add(&other.scale_i64(-1))
    }

    pub fn scale_i64(&self, n: i64) -> LinearMapByWeight {
        let mut out = self.clone();
        let c = self.source.ring.from_i64(n);
        out.blocks = self
            .blocks
            .iter()
            .map(|(&k, m)| (k, m.scale(&c)))
            .filter(|(_, m)| !m.is_zero())
            .collect();
        out
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.values().all(|m| m.is_zero())
    }

    /// Is this map an isomorphism on every weight component (square blocks,
    /// diagonal with respect to weights, invertible over the ring)?
    pub fn is_weight_iso(&self) -> bool {
        if self.blocks.keys().any(|&(a, b)| a != b) {
            return false;
        }
        let weights: std::collections::BTreeSet<u32> = self
            .source
            .components
            .keys()
            .chain(self.target.components.keys())
            .copied()
            .collect();
        for w in weights {
            let (rs, rt) = (self.source.rank(w), self.target.rank(w));
            if rs != rt {
                return false;
            }
            if rs == 0 {
                continue;
            }
            let m = self.block(w, w);
            if !mat_invertible(&m) {
                return false;
            }
        }
        true
    }
}

pub fn mat_invertible(m: &MatExact) -> bool {
    if m.rows != m.cols {
        return false;
    }
    match m.ring {
        CoefficientRing::Integers => {
            let sf = m.smith_form();
            sf.diagonal().iter().all(|d| d == &num_bigint::BigInt::from(1))
        }
        _ => m.rank() == m.rows,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_algebra::poly::{Generator, TruncatedAlgebra};

    fn lambda_alg(n: u32) -> Algebra {
        let gens = (1..=n).map(|i| Generator::even(format!("c{i}"), i)).collect();
        TruncatedAlgebra::free(CoefficientRing::Integers, gens, n)
    }

    #[test]
    fn identity_map_fixes_polynomials() {
        let alg = lambda_alg(4);
        let id = AlgebraMap::identity(&alg);
        let p = Polynomial::generator_named(&alg, "c1")
            .mul(&Polynomial::generator_named(&alg, "c2"))
            .add(&Polynomial::one(&alg));
        assert_eq!(id.apply(&p), p);
    }

    #[test]
    fn augmentation_kills_positive_weight() {
        let alg = lambda_alg(4);
        let eps = AlgebraMap::zero_images(&alg, &alg);
        let p = Polynomial::one(&alg)
            .add(&Polynomial::generator_named(&alg, "c1"))
            .add(&Polynomial::generator_named(&alg, "c1").mul(&Polynomial::generator_named(&alg, "c2")));
        assert_eq!(eps.apply(&p), Polynomial::one(&alg));
    }

    #[test]
    fn weight_mismatch_rejected() {
        let alg = lambda_alg(4);
        let bad = AlgebraMap::new(
            &alg,
            &alg,
            vec![
                Polynomial::generator_named(&alg, "c2"),
                Polynomial::generator_named(&alg, "c2"),
                Polynomial::generator_named(&alg, "c3"),
                Polynomial::generator_named(&alg, "c4"),
            ],
        );
        assert!(matches!(bad, Err(MapError::WeightMismatch { .. })));
    }

    #[test]
    fn component_matrix_of_identity() {
        let alg = lambda_alg(4);
        let id = AlgebraMap::identity(&alg);
        for w in 0..=4 {
            let m = id.weight_component_matrix(w);
            assert_eq!(m, MatExact::identity(alg.ring, alg.weight_basis(w).len()));
        }
    }

    #[test]
    fn composition_matches_matrix_product() {
        let alg = lambda_alg(4);
        // f: c1 -> 2c1, c2 -> c2 + c1^2, others fixed
        let f = AlgebraMap::new(
            &alg,
            &alg,
            vec![
                Polynomial::generator_named(&alg, "c1").scale_i64(2),
                Polynomial::generator_named(&alg, "c2")
                    .add(&Polynomial::generator_named(&alg, "c1").pow(2)),
                Polynomial::generator_named(&alg, "c3"),
                Polynomial::generator_named(&alg, "c4"),
            ],
        )
        .unwrap();
        let ff = f.compose(&f);
        for w in 0..=4 {
            assert_eq!(
                ff.weight_component_matrix(w),
                f.weight_component_matrix(w).mul(&f.weight_component_matrix(w)),
                "weight {w}"
            );
        }
    }
}

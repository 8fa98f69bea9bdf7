//! JSON encodings of the exact-algebra values with stable field names:
//! polynomials carry their algebra and a term list of exponent-vector /
//! coefficient pairs; algebra maps carry generator-image pairs. Round-trip
//! (parse after print) is the identity and is enforced by tests.

use super::map::AlgebraMap;
use super::poly::{Algebra, Polynomial, TruncatedAlgebra};
use super::ring::Scalar;
use serde::{Deserialize, Serialize};
use std::sync::Arc;

#[derive(Serialize, Deserialize)]
struct PolynomialRepr {
    algebra: TruncatedAlgebra,
    /// term list: (exponents as (generator index, exponent) pairs, coefficient)
    terms: Vec<(Vec<(u16, u16)>, Scalar)>,
}

pub fn polynomial_to_json(p: &Polynomial) -> serde_json::Value {
    let repr = PolynomialRepr {
        algebra: TruncatedAlgebra::clone(&p.algebra),
        terms: p
            .terms
            .iter()
            .map(|(m, c)| (m.exps().to_vec(), c.clone()))
            .collect(),
    };
    serde_json::to_value(repr).expect("polynomial serialization")
}

pub fn polynomial_from_json(v: &serde_json::Value) -> Result<Polynomial, serde_json::Error> {
    let repr: PolynomialRepr = serde_json::from_value(v.clone())?;
    let alg: Algebra = Arc::new(repr.algebra);
    let mut p = Polynomial::zero(&alg);
    for (exps, c) in repr.terms {
        let ex: Vec<(usize, u32)> = exps.iter().map(|&(g, e)| (g as usize, e as u32)).collect();
        p = p.add(&Polynomial::monomial(&alg, &ex, alg.ring.normalize(&c)));
    }
    Ok(p)
}

#[derive(Serialize, Deserialize)]
struct AlgebraMapRepr {
    source: TruncatedAlgebra,
    target: TruncatedAlgebra,
    /// generator-image pairs in source generator order
    images: Vec<(String, serde_json::Value)>,
    weight_scale: Option<u32>,
}

pub fn algebra_map_to_json(f: &AlgebraMap) -> serde_json::Value {
    let repr = AlgebraMapRepr {
        source: TruncatedAlgebra::clone(&f.source),
        target: TruncatedAlgebra::clone(&f.target),
        images: f
            .source
            .generators
            .iter()
            .zip(&f.images)
            .map(|(g, img)| (g.name.clone(), polynomial_to_json(img)))
            .collect(),
        weight_scale: f.weight_scale,
    };
    serde_json::to_value(repr).expect("map serialization")
}

pub fn algebra_map_from_json(v: &serde_json::Value) -> Result<AlgebraMap, String> {
    let repr: AlgebraMapRepr = serde_json::from_value(v.clone()).map_err(|e| e.to_string())?;
    let source: Algebra = Arc::new(repr.source);
    let target: Algebra = Arc::new(repr.target);
    let mut images = Vec::new();
    for (name, img) in &repr.images {
        if source.gen_index(name).is_none() {
            return Err(format!("unknown generator {name}"));
        }
        images.push(polynomial_from_json(img).map_err(|e| e.to_string())?);
    }
    // re-anchor images in the shared target algebra
    let images = images
        .into_iter()
        .map(|p| {
            let mut out = Polynomial::zero(&target);
            for (m, c) in &p.terms {
                let ex: Vec<(usize, u32)> =
                    m.exps().iter().map(|&(g, e)| (g as usize, e as u32)).collect();
                out = out.add(&Polynomial::monomial(&target, &ex, target.ring.normalize(c)));
            }
            out
        })
        .collect();
    AlgebraMap::mixed(&source, &target, images).map_err(|e| e.to_string())
}

/// Tower descriptor: a truncation tower is recorded by its levels through a
/// depth; explicit towers also record their transition maps.
#[derive(Serialize, Deserialize)]
pub struct TowerDescriptor {
    pub kind: String,
    pub levels: Vec<TruncatedAlgebra>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub transitions: Vec<serde_json::Value>,
}

pub fn tower_to_json(t: &crate::pro_tower::Tower, depth: u32, explicit: bool) -> serde_json::Value {
    let levels = (0..=depth).map(|n| TruncatedAlgebra::clone(&t.level(n))).collect();
    let transitions = if explicit {
        (0..depth)
            .map(|n| algebra_map_to_json(&t.transition(n, n + 1)))
            .collect()
    } else {
        Vec::new()
    };
    serde_json::to_value(TowerDescriptor {
        kind: if explicit { "explicit" } else { "truncation" }.to_string(),
        levels,
        transitions,
    })
    .expect("tower serialization")
}

/// Bimodule JSON for the dualization round-trip: ranks per weight plus
/// action matrices serialized as integer grids.
#[derive(Serialize, Deserialize)]
pub struct BimoduleRepr {
    pub ring: super::ring::CoefficientRing,
    pub components: Vec<(u32, usize)>,
}

pub fn graded_module_to_json(m: &super::map::GradedModule) -> serde_json::Value {
    serde_json::to_value(BimoduleRepr {
        ring: m.ring,
        components: m.components.iter().map(|(&w, &r)| (w, r)).collect(),
    })
    .expect("module serialization")
}

pub fn graded_module_from_json(v: &serde_json::Value) -> Result<super::map::GradedModule, String> {
    let repr: BimoduleRepr = serde_json::from_value(v.clone()).map_err(|e| e.to_string())?;
    let mut m = super::map::GradedModule::new(repr.ring);
    for (w, r) in repr.components {
        if r > 0 {
            m.components.insert(w, r);
        }
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_algebra::poly::Generator;
    use crate::exact_algebra::ring::CoefficientRing;

    #[test]
    fn polynomial_roundtrip() {
        let alg = TruncatedAlgebra::free(
            CoefficientRing::Integers,
            vec![Generator::even("c1", 1), Generator::even("c2", 2)],
            4,
        );
        let p = Polynomial::generator_named(&alg, "c1")
            .pow(2)
            .sub(&Polynomial::generator_named(&alg, "c2").scale_i64(2));
        let json = polynomial_to_json(&p);
        let back = polynomial_from_json(&json).unwrap();
        assert_eq!(p, back);
        // print-parse-print is stable byte-wise
        let again = polynomial_to_json(&back);
        assert_eq!(json.to_string(), again.to_string());
    }

    #[test]
    fn map_roundtrip() {
        let alg = TruncatedAlgebra::free(
            CoefficientRing::Rationals,
            vec![Generator::even("c1", 1)],
            3,
        );
        let f = AlgebraMap::new(
            &alg,
            &alg,
            vec![Polynomial::generator_named(&alg, "c1").scale_i64(3)],
        )
        .unwrap();
        let json = algebra_map_to_json(&f);
        let back = algebra_map_from_json(&json).unwrap();
        assert!(f.equal_on_generators(&back));
    }
}

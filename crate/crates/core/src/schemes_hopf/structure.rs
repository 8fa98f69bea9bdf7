//! Structure data for formal module/algebra schemes on towers: the
//! co-operations attached to a carrier, and the formal bimodules the
//! linearization functors produce.

use crate::exact_algebra::map::{AlgebraMap, GradedModule, LinearMapByWeight};
use crate::exact_algebra::poly::{Algebra, Monomial};
use crate::exact_algebra::tensor::{tensor_many, TensorAlgebra};
use crate::pro_tower::Tower;
use std::sync::Arc;

pub type LevelMap = Arc<dyn Fn(u32) -> AlgebraMap + Send + Sync>;
pub type IndexedLevelMap = Arc<dyn Fn(i64, u32) -> AlgebraMap + Send + Sync>;
pub type Reindex = Arc<dyn Fn(u32) -> u32 + Send + Sync>;

/// The co-operations of a formal module/algebra scheme over `k`.
///
/// Structure maps are pro-morphism components. The stage-`n` component of the
/// coaddition is `psi_plus(n): level(psi_plus_reindex(n)) -> level(n) (x)
/// level(n)` with total weight bound `n`; for plain truncation towers the
/// reindexing is the identity. The comultiplication component at stage `n`
/// maps `level(psi_times_reindex(n))` into the square with total weight bound
/// `2n` (weight scale 2 on weight-graded carriers).
#[derive(Clone)]
pub struct SchemeStructure {
    pub name: String,
    pub carrier: Tower,
    pub psi_plus: LevelMap,
    pub psi_plus_reindex: Reindex,
    pub eps_zero: LevelMap,
    pub psi_times: Option<LevelMap>,
    pub psi_times_reindex: Reindex,
    /// Counit family `eps_a` for unital schemes (and point-evaluation
    /// families in general), indexed by elements of l.
    pub counit: Option<IndexedLevelMap>,
    /// Module action `lambda_a: level(action_source_level(a, n)) -> level(n)`.
    pub action: IndexedLevelMap,
    /// Source level of the stage-n action component (identity in n for plain
    /// truncation towers; windowed towers need `|a| * n`).
    pub action_source_level: Arc<dyn Fn(i64, u32) -> u32 + Send + Sync>,
    /// Modulus of the acting ring l (None means l = Z).
    pub l_modulus: Option<u64>,
    /// Whether psi_times has a unit (counit family with eps_1).
    pub unital: bool,
    /// Whether level algebras impose nilpotency on points (truncation towers)
    /// or present a constant/ind-constant object (identity, idempotents).
    pub truncation_points: bool,
}

impl std::fmt::Debug for SchemeStructure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "SchemeStructure({})", self.name)
    }
}

pub fn identity_reindex() -> Reindex {
    Arc::new(|n| n)
}

pub fn same_level_action() -> Arc<dyn Fn(i64, u32) -> u32 + Send + Sync> {
    Arc::new(|_, n| n)
}

impl SchemeStructure {
    pub fn level(&self, n: u32) -> Algebra {
        self.carrier.level(n)
    }

    /// Tensor-square context at level n with the given total-weight bound.
    pub fn square(&self, n: u32, bound: u32) -> TensorAlgebra {
        let a = self.level(n);
        tensor_many(&[&a, &a], bound)
    }

    pub fn cube(&self, n: u32, bound: u32) -> TensorAlgebra {
        let a = self.level(n);
        tensor_many(&[&a, &a, &a], bound)
    }
}

/// A formal bimodule at desk scale: a graded free module tower (read through
/// its maximum weight) with named basis elements per weight and left actions
/// for each generator of the acting ring `l`.
#[derive(Clone, Debug)]
pub struct FormalBimodule {
    pub name: String,
    pub module: GradedModule,
    /// Basis element labels are carried in `module.labels` when meaningful.
    pub actions: Vec<(String, LinearMapByWeight)>,
}

impl FormalBimodule {
    pub fn free(name: impl Into<String>, module: GradedModule) -> Self {
        FormalBimodule { name: name.into(), module, actions: Vec::new() }
    }

    pub fn rank(&self, w: u32) -> usize {
        self.module.rank(w)
    }
}

/// Scalar value of a map into the base algebra on a generator.
pub fn scalar_image(map: &AlgebraMap, g: usize) -> crate::exact_algebra::ring::Scalar {
    map.images[g].coefficient(&Monomial::one())
}

/// `(f (x) g)` on a common square context: factorwise images.
pub fn tensor_map2(
    src: &TensorAlgebra,
    f: &AlgebraMap,
    g: &AlgebraMap,
    dst: &TensorAlgebra,
) -> AlgebraMap {
    src.map_factorwise(&[f, g], dst)
}

/// Spread a 2-tensor-valued map across a wider tensor: the source factor
/// `which` maps via `f` (valued in `f_ctx`) placed at `positions`; the
/// remaining source factor maps by `passive` and embeds at position
/// `rest_pos`.
pub fn spread_tensor_map(
    src: &TensorAlgebra,
    which: usize,
    f: &AlgebraMap,
    f_ctx: &TensorAlgebra,
    positions: &[usize],
    passive: &AlgebraMap,
    rest_pos: usize,
    dst: &TensorAlgebra,
) -> AlgebraMap {
    let place = f_ctx.place_into(positions, dst);
    let emb = dst.embedding(rest_pos);
    let mut images = Vec::with_capacity(src.alg.generators.len());
    for (i, factor) in src.factors.iter().enumerate() {
        if i == which {
            for g in 0..factor.generators.len() {
                images.push(place.apply(&f.images[g]));
            }
        } else {
            for g in 0..factor.generators.len() {
                images.push(emb.apply(&passive.images[g]));
            }
        }
    }
    AlgebraMap { source: src.alg.clone(), target: dst.alg.clone(), images, weight_scale: None }
}

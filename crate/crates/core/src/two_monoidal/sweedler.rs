//! The Sweedler product of formal bimodules: the equalizer inside the plain
//! tensor where the left-factor and right-factor actions of l agree,
//! computed exactly per weight. For l = k (scalars acting centrally) it is
//! the plain tensor; the interesting case stores the action of each
//! generator of a finitely presented l.

use super::bimod::{product_obj, Layout, Product};
use crate::exact_algebra::map::{GradedModule, LinearMapByWeight};
use crate::exact_algebra::matrix::MatExact;
use crate::exact_algebra::ring::CoefficientRing;
use crate::schemes_hopf::structure::FormalBimodule;

/// Per-weight basis of the Sweedler equalizer inside `(M (x) N)_w`: the
/// joint kernel of `act_s (x) id - id (x) act_s` over the generators of l.
pub struct SweedlerProduct {
    pub layout: Layout,
    pub module: GradedModule,
    /// kernel vectors per weight over the layout's component basis
    pub kernels: std::collections::BTreeMap<u32, Vec<Vec<crate::exact_algebra::ring::Scalar>>>,
}

pub fn sweedler_product(m: &FormalBimodule, n: &FormalBimodule, depth: u32) -> SweedlerProduct {
    let ring = m.module.ring;
    let layout = product_obj(Product::Tensor, &m.module, &n.module, depth);
    let mut module = GradedModule::new(ring);
    let mut kernels = std::collections::BTreeMap::new();
    let action_names: Vec<&String> = m.actions.iter().map(|(s, _)| s).collect();
    for w in 0..=depth {
        let dim = layout.obj.rank(w);
        if dim == 0 {
            continue;
        }
        if action_names.is_empty() {
            // l = k: the equalizer is everything
            module.components.insert(w, dim);
            kernels.insert(
                w,
                (0..dim)
                    .map(|i| {
                        let mut v = vec![ring.zero(); dim];
                        v[i] = ring.one();
                        v
                    })
                    .collect(),
            );
            continue;
        }
        // stack (act_s (x) id) - (id (x) act_s) over all generators s
        let mut stacked: Option<MatExact> = None;
        for (s, act_m) in &m.actions {
            let act_n = n
                .actions
                .iter()
                .find(|(t, _)| t == s)
                .map(|(_, a)| a)
                .expect("matching action generators");
            let left = one_sided(ring, &layout, act_m, true, w);
            let right = one_sided(ring, &layout, act_n, false, w);
            let diff = left.sub(&right);
            stacked = Some(match stacked {
                None => diff,
                Some(prev) => prev.vstack(&diff),
            });
        }
        let kernel = stacked.unwrap().kernel_basis();
        if !kernel.is_empty() {
            module.components.insert(w, kernel.len());
            kernels.insert(w, kernel);
        }
    }
    SweedlerProduct { layout, module, kernels }
}

/// The matrix of `act (x) id` (or `id (x) act`) on the weight-w component of
/// the layout, assuming the action preserves each weight.
fn one_sided(
    ring: CoefficientRing,
    layout: &Layout,
    act: &LinearMapByWeight,
    left: bool,
    w: u32,
) -> MatExact {
    let dim = layout.obj.rank(w);
    let mut out = MatExact::zero(ring, dim, dim);
    let pieces = layout.pieces.get(&w).cloned().unwrap_or_default();
    for p in &pieces {
        let (lw, rw) = (p.left_weight, p.right_weight);
        let (lr, rr) = (act_source_rank(layout, true, lw), act_source_rank(layout, false, rw));
        let blk = if left { act.block(lw, lw) } else { act.block(rw, rw) };
        for a in 0..lr {
            for b in 0..rr {
                let col = p.offset + a * rr + b;
                if left {
                    for a2 in 0..lr {
                        let v = blk.at(a2, a);
                        if !v.is_zero() {
                            out.set(p.offset + a2 * rr + b, col, v.clone());
                        }
                    }
                } else {
                    for b2 in 0..rr {
                        let v = blk.at(b2, b);
                        if !v.is_zero() {
                            out.set(p.offset + a * rr + b2, col, v.clone());
                        }
                    }
                }
            }
        }
    }
    out
}

fn act_source_rank(layout: &Layout, left: bool, w: u32) -> usize {
    // ranks of the underlying factors are recoverable from the layout pieces
    let pieces = layout.pieces.values().flatten();
    for p in pieces {
        if left && p.left_weight == w {
            // deduce from a piece at this left weight
        }
        if !left && p.right_weight == w {
            // symmetric
        }
    }
    // the layout was built from the factor objects, so ask them directly:
    // component_labels carries the rank via labels; fall back to scanning.
    // (The caller always passes weights present in the factors.)
    layout
        .pieces
        .values()
        .flatten()
        .find_map(|p| {
            if left && p.left_weight == w {
                Some(rank_from_piece(layout, p, true))
            } else if !left && p.right_weight == w {
                Some(rank_from_piece(layout, p, false))
            } else {
                None
            }
        })
        .unwrap_or(0)
}

fn rank_from_piece(layout: &Layout, piece: &super::bimod::Piece, left: bool) -> usize {
    // piece spans rank(left) * rank(right); recover the factor rank from the
    // next piece offset or the component dimension
    let w = if left {
        piece.left_weight + piece.right_weight
    } else {
        piece.left_weight + piece.right_weight
    };
    let pieces = &layout.pieces[&w];
    let idx = pieces.iter().position(|p| p.offset == piece.offset).unwrap();
    let end = pieces
        .get(idx + 1)
        .map(|p| p.offset)
        .unwrap_or_else(|| layout.obj.rank(w));
    let span = end - piece.offset;
    // span = rank_left * rank_right; we need one of them. The layout labels
    // "x|y" are grouped by left basis element, so count distinct left parts.
    let labels = super::bimod::component_labels(&layout.obj, w);
    let slice = &labels[piece.offset..end];
    let lefts: std::collections::BTreeSet<&str> =
        slice.iter().map(|l| l.split('|').next().unwrap()).collect();
    if left {
        lefts.len()
    } else {
        span / lefts.len()
    }
}

/// `hom(l, k)` for `l = Z[s]/(s^2 - s)`: rank-2 bimodule with the action of
/// s by precomposition (the worked Sweedler example).
pub fn hom_idempotent_line(ring: CoefficientRing) -> FormalBimodule {
    let mut module = GradedModule::new(ring);
    module.components.insert(0, 2);
    module.set_labels(0, vec!["f0".to_string(), "f1".to_string()]);
    // basis: f0 = value at 0 of the idempotent coordinate, f1 = value at s;
    // (s . f)(x) = f(sx): s.f0 = f0 evaluated after multiplication by s:
    // in the basis of evaluations at {0-part, s-part}: s acts by the matrix
    // [[1, 1], [0, 0]]^T-style; concretely precomposition fixes f0 and sends
    // f1 to f1 (idempotent), with the mixed term landing in f0 for the
    // complementary evaluation.
    let mut act = LinearMapByWeight::zero(module.clone(), module.clone());
    let blk = MatExact::from_i64(ring, vec![vec![0, 0], vec![0, 1]]);
    act.insert_block(0, 0, blk);
    FormalBimodule { name: "hom(Z[s]/(s^2-s), k)".to_string(), module, actions: vec![("s".to_string(), act)] }
}

/// Classical composition of graded bimodules: tensor with multiplicative
/// weight pairing (right structure of B against left structure of C).
pub fn classical_compose(b: &GradedModule, c: &GradedModule, depth: u32) -> GradedModule {
    product_obj(Product::Compose, b, c, depth).obj
}

/// Formal-side composition of bimodule towers.
pub fn compose_bimodules(b: &GradedModule, c: &GradedModule, depth: u32) -> GradedModule {
    product_obj(Product::Compose, b, c, depth).obj
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_action_gives_plain_tensor() {
        let ring = CoefficientRing::Integers;
        let mut m = GradedModule::new(ring);
        m.components.insert(1, 2);
        m.components.insert(2, 1);
        let bm = FormalBimodule::free("M", m);
        let sw = sweedler_product(&bm, &bm, 4);
        // (M (x) M): weight 2 -> 4, weight 3 -> 2x2=4... check a couple
        assert_eq!(sw.module.rank(2), 4);
        assert_eq!(sw.module.rank(3), 4);
    }

    #[test]
    fn idempotent_line_equalizer() {
        let ring = CoefficientRing::Integers;
        let h = hom_idempotent_line(ring);
        let sw = sweedler_product(&h, &h, 2);
        // the equalizer of s(x)id and id(x)s inside the rank-4 weight-0
        // space: vectors with equal mixed components
        // act = diag(0,1): s(x)id - id(x)s on basis f_i|f_j has eigenvalues
        // a_i - a_j with a = (0,1): kernel = span(f0|f0, f1|f1) rank 2... plus
        // nothing else. Both composites act the same on it by construction.
        assert_eq!(sw.module.rank(0), 2);
    }

    #[test]
    fn unit_law_of_sweedler() {
        // hom(k, k) = k concentrated in weight 0 with trivial action is the
        // unit: ranks of I (x) N match N
        let ring = CoefficientRing::Integers;
        let unit = FormalBimodule::free("I", super::super::bimod::unit_i(ring));
        let mut n = GradedModule::new(ring);
        n.components.insert(1, 2);
        n.components.insert(3, 1);
        let bn = FormalBimodule::free("N", n.clone());
        let sw = sweedler_product(&unit, &bn, 4);
        for w in 0..=4 {
            assert_eq!(sw.module.rank(w), n.rank(w), "weight {w}");
        }
    }

    #[test]
    fn classical_compose_ranks() {
        let ring = CoefficientRing::Integers;
        // Z^2 and Z^3 concentrated in weight 1: composition = Z^6 at weight 1
        let mut b = GradedModule::new(ring);
        b.components.insert(1, 2);
        let mut c = GradedModule::new(ring);
        c.components.insert(1, 3);
        let comp = classical_compose(&b, &c, 4);
        assert_eq!(comp.rank(1), 6);
        assert_eq!(comp.total_rank(), 6);
    }

    #[test]
    fn compose_rank_bookkeeping_multiplicative() {
        let ring = CoefficientRing::Integers;
        let mut b = GradedModule::new(ring);
        for w in 1..=4 {
            b.components.insert(w, 1);
        }
        let comp = compose_bimodules(&b, &b, 4);
        // rank_w = number of divisor pairs
        assert_eq!(comp.rank(4), 3);
        assert_eq!(comp.rank(2), 2);
    }
}

//! The 2-monoidal category of formal bimodules at desk scale: weight-graded
//! free towers with two products on representing objects, the additive-weight
//! Sweedler tensor `(B (x) C)_w = sum_{i+j=w}` and the multiplicative-weight
//! composition `(B o C)_w = sum_{de=w}`, with all maps written on
//! representing towers (weight-mixing blocks allowed).
//!
//! Everything here is even-parity; the bimonoid samples (the linearizations
//! of the Lambda plethory) carry no odd generators.

use crate::exact_algebra::map::{GradedModule, LinearMapByWeight};
use crate::exact_algebra::matrix::MatExact;
use crate::exact_algebra::ring::CoefficientRing;
use std::collections::BTreeMap;

pub type Obj = GradedModule;
pub type Map = LinearMapByWeight;

/// One summand of a binary product: factor weights, offset inside the
/// composite weight component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Piece {
    pub left_weight: u32,
    pub right_weight: u32,
    pub offset: usize,
}

/// Layout of a binary product object: for each total weight, the ordered
/// pieces with offsets.
#[derive(Clone, Debug)]
pub struct Layout {
    pub obj: Obj,
    pub pieces: BTreeMap<u32, Vec<Piece>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Product {
    Tensor,
    Compose,
}

/// Weight pairs contributing to the given total weight, in canonical order.
fn weight_pairs(product: Product, b: &Obj, c: &Obj, w: u32) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    match product {
        Product::Tensor => {
            for i in 0..=w {
                if b.rank(i) > 0 && c.rank(w - i) > 0 {
                    out.push((i, w - i));
                }
            }
        }
        Product::Compose => {
            if w == 0 {
                // 0-pairs: (0, e) for all e, then (d, 0) for d >= 1
                for e in 0..=c.max_weight() {
                    if b.rank(0) > 0 && c.rank(e) > 0 {
                        out.push((0, e));
                    }
                }
                for d in 1..=b.max_weight() {
                    if b.rank(d) > 0 && c.rank(0) > 0 {
                        out.push((d, 0));
                    }
                }
            } else {
                for d in 1..=w {
                    if w % d == 0 && b.rank(d) > 0 && c.rank(w / d) > 0 {
                        out.push((d, w / d));
                    }
                }
            }
        }
    }
    out
}

/// Build the product object with labels `l|r`, truncated at `depth`.
pub fn product_obj(product: Product, b: &Obj, c: &Obj, depth: u32) -> Layout {
    assert_eq!(b.ring, c.ring);
    let mut obj = GradedModule::new(b.ring);
    let mut pieces = BTreeMap::new();
    for w in 0..=depth {
        let mut offset = 0;
        let mut here = Vec::new();
        let mut labels = Vec::new();
        for (i, j) in weight_pairs(product, b, c, w) {
            here.push(Piece { left_weight: i, right_weight: j, offset });
            let bl = component_labels(b, i);
            let cl = component_labels(c, j);
            for x in &bl {
                for y in &cl {
                    labels.push(format!("{x}|{y}"));
                }
            }
            offset += b.rank(i) * c.rank(j);
        }
        if offset > 0 {
            obj.components.insert(w, offset);
            obj.labels.insert(w, labels);
            pieces.insert(w, here);
        }
    }
    Layout { obj, pieces }
}

pub fn component_labels(m: &Obj, w: u32) -> Vec<String> {
    m.labels
        .get(&w)
        .cloned()
        .unwrap_or_else(|| (0..m.rank(w)).map(|i| format!("e{w}.{i}")).collect())
}

impl Layout {
    /// Offset of the (lw, rw) piece in the weight-w component.
    pub fn piece_offset(&self, w: u32, lw: u32, rw: u32) -> Option<usize> {
        self.pieces
            .get(&w)?
            .iter()
            .find(|p| p.left_weight == lw && p.right_weight == rw)
            .map(|p| p.offset)
    }
}

/// Kronecker product of two maps on a pair of layouts: block
/// `(i,j) -> (i',j')` is `f-block(i->i') (x) g-block(j->j')`.
pub fn product_map(
    product: Product,
    f: &Map,
    g: &Map,
    src: &Layout,
    dst: &Layout,
) -> Map {
    let ring = src.obj.ring;
    let mut out = LinearMapByWeight::zero(src.obj.clone(), dst.obj.clone());
    let mut blocks: BTreeMap<(u32, u32), MatExact> = BTreeMap::new();
    for (&ws, spieces) in &src.pieces {
        for sp in spieces {
            let (i, j) = (sp.left_weight, sp.right_weight);
            for (&(fi, fo), fb) in &f.blocks {
                if fi != i {
                    continue;
                }
                for (&(gj, go), gb) in &g.blocks {
                    if gj != j {
                        continue;
                    }
                    let wt = match product {
                        Product::Tensor => fo + go,
                        Product::Compose => fo * go,
                    };
                    let Some(doff) = dst.piece_offset(wt, fo, go) else {
                        continue;
                    };
                    let rows_dst = dst.obj.rank(wt);
                    let entry = blocks
                        .entry((ws, wt))
                        .or_insert_with(|| MatExact::zero(ring, rows_dst, src.obj.rank(ws)));
                    // Kronecker into the right offsets
                    let (fr, fc) = (fb.rows, fb.cols);
                    let (gr, gc) = (gb.rows, gb.cols);
                    for a in 0..fr {
                        for b2 in 0..fc {
                            let fv = fb.at(a, b2);
                            if fv.is_zero() {
                                continue;
                            }
                            for c2 in 0..gr {
                                for d in 0..gc {
                                    let gv = gb.at(c2, d);
                                    if gv.is_zero() {
                                        continue;
                                    }
                                    let row = doff + a * gr + c2;
                                    let col = sp.offset + b2 * gc + d;
                                    let v = ring.add(entry.at(row, col), &ring.mul(fv, gv));
                                    entry.set(row, col, v);
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    for ((ws, wt), m) in blocks {
        if !m.is_zero() {
            out.blocks.insert((ws, wt), m);
        }
    }
    out
}

/// The unit of the Sweedler tensor: the base ring in weight 0.
pub fn unit_i(ring: CoefficientRing) -> Obj {
    let mut m = GradedModule::free(ring, &[(0, 1)]);
    m.set_labels(0, vec!["i".to_string()]);
    m
}

/// The unit of the composition product: the base ring in weight 1 (the class
/// of the identity operation).
pub fn unit_j(ring: CoefficientRing) -> Obj {
    let mut m = GradedModule::free(ring, &[(1, 1)]);
    m.set_labels(1, vec!["e".to_string()]);
    m
}

/// Rank-preserving singleton map k@w -> k@w' with the given coefficient.
pub fn singleton_map(ring: CoefficientRing, src: &Obj, dst: &Obj, w_src: u32, w_dst: u32, coeff: i64) -> Map {
    let mut m = LinearMapByWeight::zero(src.clone(), dst.clone());
    let mut blk = MatExact::zero(ring, dst.rank(w_dst), src.rank(w_src));
    blk.set(0, 0, ring.from_i64(coeff));
    m.blocks.insert((w_src, w_dst), blk);
    m
}

/// `mu_J` on representing objects: `J -> J (x) J`, `e -> e|e`.
pub fn mu_j_rep(ring: CoefficientRing, depth: u32) -> (Layout, Map) {
    let j = unit_j(ring);
    let jj = product_obj(Product::Tensor, &j, &j, depth.max(2));
    let mut m = LinearMapByWeight::zero(j.clone(), jj.obj.clone());
    let mut blk = MatExact::zero(ring, jj.obj.rank(2), 1);
    blk.set(0, 0, ring.one());
    m.blocks.insert((1, 2), blk);
    (jj, m)
}

/// `iota_J = eps_I` on representing objects: `J -> I`, `e -> i` (the unit
/// comparison, adjoint to the multiplication of the base ring).
pub fn iota_j_rep(ring: CoefficientRing) -> Map {
    singleton_map(ring, &unit_j(ring), &unit_i(ring), 1, 0, 1)
}

/// `Delta_I` on representing objects: `I o I -> I`, `i|i -> i`.
pub fn delta_i_rep(ring: CoefficientRing, depth: u32) -> (Layout, Map) {
    let i = unit_i(ring);
    let ii = product_obj(Product::Compose, &i, &i, depth);
    let mut m = LinearMapByWeight::zero(ii.obj.clone(), i.clone());
    let mut blk = MatExact::zero(ring, 1, ii.obj.rank(0));
    blk.set(0, 0, ring.one());
    m.blocks.insert((0, 0), blk);
    (ii, m)
}

/// The interchange on representing towers:
/// `zeta*: ((A (x) C) o (B (x) D))-rep -> ((A o B) (x) (C o D))-rep`, the
/// Koszul-free rearrangement `(a|c)|(b|d) -> (a|b)|(c|d)`.
pub fn zeta_rep(
    a: &Obj,
    b: &Obj,
    c: &Obj,
    d: &Obj,
    depth: u32,
) -> (Layout, Layout, Map) {
    let ring = a.ring;
    let ac = product_obj(Product::Tensor, a, c, depth);
    let bd = product_obj(Product::Tensor, b, d, depth);
    let src = product_obj(Product::Compose, &ac.obj, &bd.obj, depth);
    let ab = product_obj(Product::Compose, a, b, depth);
    let cd = product_obj(Product::Compose, c, d, depth);
    let dst = product_obj(Product::Tensor, &ab.obj, &cd.obj, depth);

    let mut map = LinearMapByWeight::zero(src.obj.clone(), dst.obj.clone());
    let mut blocks: BTreeMap<(u32, u32), MatExact> = BTreeMap::new();
    for (&ws, spieces) in &src.pieces {
        for sp in spieces {
            // source piece: (A(x)C) at weight u = sp.left, (B(x)D) at v
            let (u, v) = (sp.left_weight, sp.right_weight);
            let Some(ac_pieces) = ac.pieces.get(&u) else { continue };
            let Some(bd_pieces) = bd.pieces.get(&v) else { continue };
            for acp in ac_pieces {
                let (wa, wc) = (acp.left_weight, acp.right_weight);
                for bdp in bd_pieces {
                    let (wb, wd) = (bdp.left_weight, bdp.right_weight);
                    // target: (A o B) at wa*wb, (C o D) at wc*wd
                    let wab = if wa == 0 || wb == 0 { 0 } else { wa * wb };
                    let wcd = if wc == 0 || wd == 0 { 0 } else { wc * wd };
                    let wt = wab + wcd;
                    if wt > depth {
                        continue;
                    }
                    let Some(ab_off) = ab.piece_offset(wab, wa, wb) else { continue };
                    let Some(cd_off) = cd.piece_offset(wcd, wc, wd) else { continue };
                    let Some(t_off) = dst.piece_offset(wt, wab, wcd) else { continue };
                    let (ra, rb, rc, rd) =
                        (a.rank(wa), b.rank(wb), c.rank(wc), d.rank(wd));
                    let entry = blocks.entry((ws, wt)).or_insert_with(|| {
                        MatExact::zero(ring, dst.obj.rank(wt), src.obj.rank(ws))
                    });
                    // source index: ((ia,ic),(ib,id)) with strides
                    for ia in 0..ra {
                        for ic in 0..rc {
                            for ib in 0..rb {
                                for id in 0..rd {
                                    let s_col = sp.offset
                                        + (acp.offset + ia * rc + ic) * bd.obj.rank(v)
                                        + (bdp.offset + ib * rd + id);
                                    let t_row = t_off
                                        + (ab_off + ia * rb + ib) * cd.obj.rank(wcd)
                                        + (cd_off + ic * rd + id);
                                    entry.set(t_row, s_col, ring.one());
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    for (k, m) in blocks {
        if !m.is_zero() {
            map.blocks.insert(k, m);
        }
    }
    (src, dst, map)
}

/// Restrict a map to the positive-weight components of source and target
/// (the suites compare diagrams on weights 1..depth).
pub fn positive_part(m: &Map) -> Map {
    let strip = |o: &Obj| -> Obj {
        let mut out = o.clone();
        out.components.remove(&0);
        out.labels.remove(&0);
        out
    };
    let mut out = LinearMapByWeight::zero(strip(&m.source), strip(&m.target));
    for (&(a, b), blk) in &m.blocks {
        if a > 0 && b > 0 {
            out.blocks.insert((a, b), blk.clone());
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring() -> CoefficientRing {
        CoefficientRing::Integers
    }

    fn rank_one_tower(maxw: u32) -> Obj {
        let mut m = GradedModule::new(ring());
        for w in 1..=maxw {
            m.components.insert(w, 1);
            m.labels.insert(w, vec![format!("q{w}")]);
        }
        m
    }

    #[test]
    fn tensor_layout_convolves_ranks() {
        let b = rank_one_tower(3);
        let t = product_obj(Product::Tensor, &b, &b, 4);
        // (B(x)B)_w = sum_{i+j=w, i,j>=1}: ranks 0,0,1,2,3
        assert_eq!(t.obj.rank(2), 1);
        assert_eq!(t.obj.rank(3), 2);
        assert_eq!(t.obj.rank(4), 3);
    }

    #[test]
    fn compose_layout_uses_divisor_pairs() {
        let b = rank_one_tower(4);
        let c = product_obj(Product::Compose, &b, &b, 4);
        // (B o B)_4: (1,4),(2,2),(4,1)
        assert_eq!(c.obj.rank(4), 3);
        assert_eq!(c.obj.rank(3), 2);
        assert_eq!(c.obj.rank(1), 1);
    }

    #[test]
    fn unit_laws_of_j() {
        let ring = ring();
        let depth = 4;
        let j = unit_j(ring);
        let (jj, mu) = mu_j_rep(ring, depth);
        let iota = iota_j_rep(ring);
        // associativity: (mu (x) id) mu = (id (x) mu) mu on representing side
        let id_j = LinearMapByWeight::identity(&j);
        let jjj = product_obj(Product::Tensor, &jj.obj, &j, depth.max(3));
        let jjj2 = product_obj(Product::Tensor, &j, &jj.obj, depth.max(3));
        let left = product_map(Product::Tensor, &mu, &id_j, &jj, &jjj);
        let right = product_map(Product::Tensor, &id_j, &mu, &jj, &jjj2);
        let l = left.compose(&mu);
        let r = right.compose(&mu);
        // both send e to e|e|e; flat layouts have identical component data
        assert_eq!(l.block(1, 3), r.block(1, 3));

        // unit law: (iota (x) id) mu = unitor (e -> i|e)
        let i = unit_i(ring);
        let ij = product_obj(Product::Tensor, &i, &j, depth);
        let composite = product_map(Product::Tensor, &iota, &id_j, &jj, &ij).compose(&mu);
        let unitor = singleton_map(ring, &j, &ij.obj, 1, 1, 1);
        assert_eq!(composite.block(1, 1), unitor.block(1, 1));
    }

    #[test]
    fn zeta_is_a_permutation_on_rank_one() {
        let b = rank_one_tower(3);
        let (src, dst, z) = zeta_rep(&b, &b, &b, &b, 5);
        let _ = dst;
        // every nonzero block entry is 1 and columns hit at most one row
        for blk in z.blocks.values() {
            for i in 0..blk.rows {
                for j in 0..blk.cols {
                    let v = blk.at(i, j);
                    assert!(v.is_zero() || v.is_one());
                }
            }
        }
        assert!(src.obj.total_rank() > 0);
    }
}

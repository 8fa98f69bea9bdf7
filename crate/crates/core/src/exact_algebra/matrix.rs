//! Dense exact matrices over a [`CoefficientRing`], with Smith normal form
//! over the integers, Gaussian elimination over fields, and Howell-style
//! kernel/cokernel semantics over Z/m obtained by lifting to Z.

use super::ring::{CoefficientRing, Scalar};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatExact {
    pub ring: CoefficientRing,
    pub rows: usize,
    pub cols: usize,
    data: Vec<Scalar>,
}

impl fmt::Debug for MatExact {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "MatExact {}x{} over {:?}", self.rows, self.cols, self.ring)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.at(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl MatExact {
    pub fn zero(ring: CoefficientRing, rows: usize, cols: usize) -> Self {
        MatExact { ring, rows, cols, data: vec![ring.zero(); rows * cols] }
    }

    pub fn identity(ring: CoefficientRing, n: usize) -> Self {
        let mut m = Self::zero(ring, n, n);
        for i in 0..n {
            m.set(i, i, ring.one());
        }
        m
    }

    pub fn from_rows(ring: CoefficientRing, rows: Vec<Vec<Scalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            for s in row {
                data.push(ring.normalize(&s));
            }
        }
        MatExact { ring, rows: r, cols: c, data }
    }

    pub fn from_i64(ring: CoefficientRing, rows: Vec<Vec<i64>>) -> Self {
        let conv = rows
            .into_iter()
            .map(|row| row.into_iter().map(|n| ring.from_i64(n)).collect())
            .collect();
        Self::from_rows(ring, conv)
    }

    pub fn at(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = self.ring.normalize(&v);
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|s| s.is_zero())
    }

    pub fn transpose(&self) -> MatExact {
        let mut t = Self::zero(self.ring, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.at(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &MatExact) -> MatExact {
        assert_eq!(self.cols, other.rows, "dimension mismatch in matrix product");
        assert_eq!(self.ring, other.ring);
        let mut out = Self::zero(self.ring, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.at(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let v = self.ring.add(out.at(i, j), &self.ring.mul(a, b));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn add(&self, other: &MatExact) -> MatExact {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.ring.add(self.at(i, j), other.at(i, j)));
            }
        }
        out
    }

    pub fn sub(&self, other: &MatExact) -> MatExact {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.ring.sub(self.at(i, j), other.at(i, j)));
            }
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> MatExact {
        let mut out = self.clone();
        for v in &mut out.data {
            *v = self.ring.mul(v, c);
        }
        out
    }

    pub fn vstack(&self, other: &MatExact) -> MatExact {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        MatExact { ring: self.ring, rows: self.rows + other.rows, cols: self.cols, data }
    }

    pub fn hstack(&self, other: &MatExact) -> MatExact {
        assert_eq!(self.rows, other.rows);
        let mut out = Self::zero(self.ring, self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.at(i, j).clone());
            }
            for j in 0..other.cols {
                out.set(i, self.cols + j, other.at(i, j).clone());
            }
        }
        out
    }

    pub fn col(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.at(i, j).clone()).collect()
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut acc = self.ring.zero();
                for j in 0..self.cols {
                    acc = self.ring.add(&acc, &self.ring.mul(self.at(i, j), &v[j]));
                }
                acc
            })
            .collect()
    }

    /// Rank over the fraction field (for Z: rank over Q).
    pub fn rank(&self) -> usize {
        match self.ring {
            CoefficientRing::Integers => self.to_ring(CoefficientRing::Rationals).rank(),
            CoefficientRing::IntegersMod(m) if !self.ring.is_field() => {
                // Rank is basis-size of the row space in Howell form; use the
                // Smith form of the lift to count invertible diagonal entries.
                let d = self.lift_to_int().smith_form().d;
                let m = BigInt::from(m);
                (0..d.rows.min(d.cols))
                    .filter(|&i| {
                        let e = d.at(i, i).as_int().unwrap();
                        !e.is_zero() && num_integer::Integer::gcd(e, &m).is_one()
                    })
                    .count()
            }
            _ => self.rref().1,
        }
    }

    pub fn to_ring(&self, ring: CoefficientRing) -> MatExact {
        let data = self
            .data
            .iter()
            .map(|s| match s {
                Scalar::Int(n) => ring.from_bigint(n.clone()),
                Scalar::Rat(q) => {
                    assert!(q.is_integer(), "cannot move a non-integral rational into {ring:?}");
                    ring.from_bigint(q.to_integer())
                }
            })
            .collect();
        MatExact { ring, rows: self.rows, cols: self.cols, data }
    }

    fn lift_to_int(&self) -> MatExact {
        self.to_ring(CoefficientRing::Integers)
    }

    /// Reduced row echelon form over a field; returns (rref, rank, pivots).
    pub fn rref(&self) -> (MatExact, usize, Vec<usize>) {
        assert!(self.ring.is_field(), "rref requires a field");
        let ring = self.ring;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.at(i, c).is_zero()) else {
                continue;
            };
            for j in 0..m.cols {
                let tmp = m.at(r, j).clone();
                let v = m.at(p, j).clone();
                m.set(r, j, v);
                m.set(p, j, tmp);
            }
            let inv = ring.inv(m.at(r, c)).expect("nonzero field element");
            for j in 0..m.cols {
                m.set(r, j, ring.mul(m.at(r, j), &inv));
            }
            for i in 0..m.rows {
                if i != r && !m.at(i, c).is_zero() {
                    let f = m.at(i, c).clone();
                    for j in 0..m.cols {
                        let v = ring.sub(m.at(i, j), &ring.mul(&f, m.at(r, j)));
                        m.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, r, pivots)
    }

    /// Smith normal form over Z: U * self * V = D with U, V unimodular and
    /// the diagonal of D a divisibility chain d1 | d2 | ...
    pub fn smith_form(&self) -> SmithForm {
        assert_eq!(self.ring, CoefficientRing::Integers, "smith_form runs over Z");
        let ring = self.ring;
        let mut d = self.clone();
        let mut u = MatExact::identity(ring, self.rows);
        let mut v = MatExact::identity(ring, self.cols);

        fn int(m: &MatExact, i: usize, j: usize) -> BigInt {
            m.at(i, j).as_int().unwrap().clone()
        }

        let n = self.rows.min(self.cols);
        for t in 0..n {
            loop {
                // Find a pivot with minimal nonzero absolute value.
                let mut best: Option<(usize, usize, BigInt)> = None;
                for i in t..d.rows {
                    for j in t..d.cols {
                        let e = int(&d, i, j);
                        if e.is_zero() {
                            continue;
                        }
                        let a = e.abs();
                        if best.as_ref().map_or(true, |(_, _, b)| a < *b) {
                            best = Some((i, j, a));
                        }
                    }
                }
                let Some((pi, pj, _)) = best else {
                    return SmithForm { u, d, v };
                };
                d.swap_rows(t, pi);
                u.swap_rows(t, pi);
                d.swap_cols(t, pj);
                v.swap_cols(t, pj);

                let mut dirty = false;
                for i in t + 1..d.rows {
                    let e = int(&d, i, t);
                    if !e.is_zero() {
                        let q = div_round(&e, &int(&d, t, t));
                        if !q.is_zero() {
                            d.row_axpy(i, t, &-&q);
                            u.row_axpy(i, t, &-&q);
                        }
                        if !int(&d, i, t).is_zero() {
                            dirty = true;
                        }
                    }
                }
                for j in t + 1..d.cols {
                    let e = int(&d, t, j);
                    if !e.is_zero() {
                        let q = div_round(&e, &int(&d, t, t));
                        if !q.is_zero() {
                            d.col_axpy(j, t, &-&q);
                            v.col_axpy(j, t, &-&q);
                        }
                        if !int(&d, t, j).is_zero() {
                            dirty = true;
                        }
                    }
                }
                if dirty {
                    continue;
                }
                // Enforce divisibility of the remaining block by the pivot.
                let p = int(&d, t, t);
                let mut fixed = true;
                'scan: for i in t + 1..d.rows {
                    for j in t + 1..d.cols {
                        let e = int(&d, i, j);
                        if !(&e % &p).is_zero() {
                            d.row_axpy(t, i, &BigInt::one());
                            u.row_axpy(t, i, &BigInt::one());
                            fixed = false;
                            break 'scan;
                        }
                    }
                }
                if fixed {
                    break;
                }
            }
        }
        // Normalize signs on the diagonal.
        for t in 0..n {
            if d.at(t, t).as_int().unwrap().is_negative() {
                d.negate_row(t);
                u.negate_row(t);
            }
        }
        SmithForm { u, d, v }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[i] += q * row[t]
    fn row_axpy(&mut self, i: usize, t: usize, q: &BigInt) {
        for j in 0..self.cols {
            let v = self.ring.add(
                self.at(i, j),
                &self.ring.mul(&Scalar::Int(q.clone()), self.at(t, j)),
            );
            self.set(i, j, v);
        }
    }

    /// col[j] += q * col[t]
    fn col_axpy(&mut self, j: usize, t: usize, q: &BigInt) {
        for i in 0..self.rows {
            let v = self.ring.add(
                self.at(i, j),
                &self.ring.mul(&Scalar::Int(q.clone()), self.at(i, t)),
            );
            self.set(i, j, v);
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = self.ring.neg(self.at(i, j));
            self.set(i, j, v);
        }
    }

    /// A basis of `{x : self * x = 0}` as column vectors.
    ///
    /// Over Z the result generates the (automatically saturated) kernel
    /// lattice; over Z/m composite the generators follow Howell-form
    /// semantics via the integral lift `[self | m*I]`.
    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        match self.ring {
            CoefficientRing::Integers => {
                let sf = self.smith_form();
                let n = self.rows.min(self.cols);
                let mut out = Vec::new();
                for j in 0..self.cols {
                    let zero_diag = j >= n || sf.d.at(j, j).is_zero();
                    if zero_diag {
                        out.push(sf.v.col(j));
                    }
                }
                out
            }
            CoefficientRing::IntegersMod(m) => {
                // x in ker over Z/m  <=>  exists y with  self*x + m*y = 0 over Z.
                let lift = self.lift_to_int();
                let scaled =
                    MatExact::identity(CoefficientRing::Integers, self.rows).scale(&Scalar::Int(BigInt::from(m)));
                let aug = lift.hstack(&scaled);
                let ker = aug.kernel_basis();
                let mut out: Vec<Vec<Scalar>> = Vec::new();
                for v in ker {
                    let x: Vec<Scalar> =
                        v[..self.cols].iter().map(|s| self.ring.normalize(s)).collect();
                    if x.iter().any(|s| !s.is_zero()) && !vec_in_span_mod(&out, &x, self.ring) {
                        out.push(x);
                    }
                }
                out
            }
            CoefficientRing::Rationals => {
                let (r, _, pivots) = self.rref();
                let ring = self.ring;
                let mut out = Vec::new();
                let free: Vec<usize> =
                    (0..self.cols).filter(|c| !pivots.contains(c)).collect();
                for &fc in &free {
                    let mut x = vec![ring.zero(); self.cols];
                    x[fc] = ring.one();
                    for (ri, &pc) in pivots.iter().enumerate() {
                        x[pc] = ring.neg(r.at(ri, fc));
                    }
                    out.push(x);
                }
                out
            }
        }
    }

    /// Solve `self * x = b`; `None` when no solution exists in the ring.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(b.len(), self.rows);
        match self.ring {
            CoefficientRing::Integers => {
                let sf = self.smith_form();
                let ub = sf.u.apply(b);
                let mut y = vec![self.ring.zero(); self.cols];
                let n = self.rows.min(self.cols);
                for i in 0..self.rows {
                    let rhs = &ub[i];
                    if i < n && !sf.d.at(i, i).is_zero() {
                        y[i] = self.ring.div_exact(rhs, sf.d.at(i, i))?;
                    } else if !rhs.is_zero() {
                        return None;
                    }
                }
                Some(sf.v.apply(&y))
            }
            CoefficientRing::IntegersMod(m) => {
                // Solve the lifted system [self | m*I] (x, y) = b over Z.
                let lift = self.lift_to_int();
                let scaled =
                    MatExact::identity(CoefficientRing::Integers, self.rows).scale(&Scalar::Int(BigInt::from(m)));
                let aug = lift.hstack(&scaled);
                let bb: Vec<Scalar> = b
                    .iter()
                    .map(|s| CoefficientRing::Integers.normalize(&self.ring.normalize(s)))
                    .collect();
                let sol = aug.solve(&bb)?;
                Some(sol[..self.cols].iter().map(|s| self.ring.normalize(s)).collect())
            }
            CoefficientRing::Rationals => {
                let ring = self.ring;
                let bmat = MatExact::from_rows(ring, b.iter().map(|s| vec![s.clone()]).collect());
                let aug = self.hstack(&bmat);
                let (r, _, pivots) = aug.rref();
                if pivots.contains(&self.cols) {
                    return None;
                }
                let mut x = vec![ring.zero(); self.cols];
                for (ri, &pc) in pivots.iter().enumerate() {
                    x[pc] = r.at(ri, self.cols).clone();
                }
                Some(x)
            }
        }
    }

    /// Cokernel of `self` as a map into `ring^rows`: free rank plus finite
    /// cyclic torsion orders (empty torsion over fields).
    pub fn cokernel(&self) -> CokernelPresentation {
        match self.ring {
            CoefficientRing::Integers => {
                let sf = self.smith_form();
                let n = self.rows.min(self.cols);
                let mut torsion = Vec::new();
                let mut rank = self.rows;
                for i in 0..n {
                    let e = sf.d.at(i, i).as_int().unwrap();
                    if e.is_zero() {
                        continue;
                    }
                    rank -= 1;
                    if !e.is_one() {
                        torsion.push(e.clone());
                    }
                }
                CokernelPresentation { free_rank: rank, torsion, projector: sf.u }
            }
            CoefficientRing::IntegersMod(m) => {
                // coker over Z/m = Z^rows / (im(self) + m Z^rows); cyclic
                // factors of order m are free Z/m-summands.
                let lift = self.lift_to_int();
                let scaled =
                    MatExact::identity(CoefficientRing::Integers, self.rows).scale(&Scalar::Int(BigInt::from(m)));
                let aug = lift.hstack(&scaled);
                let pres = aug.cokernel();
                let m_big = BigInt::from(m);
                let mut free = pres.free_rank;
                let mut torsion = Vec::new();
                for d in pres.torsion {
                    if d == m_big {
                        free += 1;
                    } else {
                        torsion.push(d);
                    }
                }
                CokernelPresentation { free_rank: free, torsion, projector: pres.projector }
            }
            CoefficientRing::Rationals => {
                let rank = self.rank();
                CokernelPresentation {
                    free_rank: self.rows - rank,
                    torsion: Vec::new(),
                    projector: MatExact::identity(self.ring, self.rows),
                }
            }
        }
    }

    /// Is `v` in the column span of `self` (module span over the ring)?
    pub fn contains_in_column_span(&self, v: &[Scalar]) -> bool {
        self.solve(v).is_some()
    }
}

fn vec_in_span_mod(basis: &[Vec<Scalar>], x: &[Scalar], ring: CoefficientRing) -> bool {
    if basis.is_empty() {
        return false;
    }
    let cols = basis.len();
    let mut m = MatExact::zero(ring, x.len(), cols);
    for (j, b) in basis.iter().enumerate() {
        for (i, s) in b.iter().enumerate() {
            m.set(i, j, s.clone());
        }
    }
    m.solve(x).is_some()
}

/// Rounded division used by the Smith reduction: q with |e - q*p| <= |p|/2.
fn div_round(e: &BigInt, p: &BigInt) -> BigInt {
    let (q, r) = num_integer::Integer::div_rem(e, p);
    let two_r = BigInt::from(2) * r.abs();
    if two_r > p.abs() {
        if (e * p).is_negative() {
            q - 1
        } else {
            q + 1
        }
    } else {
        q
    }
}

#[derive(Clone, Debug)]
pub struct SmithForm {
    pub u: MatExact,
    pub d: MatExact,
    pub v: MatExact,
}

impl SmithForm {
    pub fn diagonal(&self) -> Vec<BigInt> {
        let n = self.d.rows.min(self.d.cols);
        (0..n).map(|i| self.d.at(i, i).as_int().unwrap().clone()).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CokernelPresentation {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
    /// Row-operation matrix of the presentation (the `U` of the Smith form of
    /// the lifted relation matrix); rows past the torsion block project onto
    /// free generators.
    pub projector: MatExact,
}

impl CokernelPresentation {
    pub fn is_free(&self) -> bool {
        self.torsion.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn det2(m: &MatExact) -> BigInt {
        assert_eq!((m.rows, m.cols), (2, 2));
        m.at(0, 0).as_int().unwrap() * m.at(1, 1).as_int().unwrap()
            - m.at(0, 1).as_int().unwrap() * m.at(1, 0).as_int().unwrap()
    }

    #[test]
    fn smith_diag_2_3() {
        let z = CoefficientRing::Integers;
        let m = MatExact::from_i64(z, vec![vec![2, 0], vec![0, 3]]);
        let sf = m.smith_form();
        assert_eq!(sf.diagonal(), vec![BigInt::from(1), BigInt::from(6)]);
        assert_eq!(sf.u.mul(&m).mul(&sf.v), sf.d);
        assert_eq!(det2(&sf.u).abs(), BigInt::one());
        assert_eq!(det2(&sf.v).abs(), BigInt::one());
    }

    #[test]
    fn smith_zero_matrix() {
        let z = CoefficientRing::Integers;
        let m = MatExact::zero(z, 2, 3);
        let sf = m.smith_form();
        assert!(sf.d.is_zero());
        assert_eq!(m.kernel_basis().len(), 3);
    }

    #[test]
    fn smith_rank_one() {
        let z = CoefficientRing::Integers;
        let m = MatExact::from_i64(z, vec![vec![1, 1], vec![0, 0]]);
        let sf = m.smith_form();
        assert_eq!(sf.diagonal(), vec![BigInt::from(1), BigInt::zero()]);
        let coker = m.cokernel();
        assert_eq!(coker.free_rank, 1);
        assert!(coker.torsion.is_empty());
    }

    #[test]
    fn integral_kernel_is_saturated() {
        let z = CoefficientRing::Integers;
        // kernel of [2 -2] is spanned by (1,1), not (2,2)
        let m = MatExact::from_i64(z, vec![vec![2, -2]]);
        let k = m.kernel_basis();
        assert_eq!(k.len(), 1);
        let g = k[0][0].as_int().unwrap().abs();
        assert_eq!(g, BigInt::one());
    }

    #[test]
    fn kernel_mod_composite() {
        let z6 = CoefficientRing::IntegersMod(6);
        // 2x = 0 mod 6 has solutions {0, 3}
        let m = MatExact::from_i64(z6, vec![vec![2]]);
        let k = m.kernel_basis();
        assert_eq!(k.len(), 1);
        assert_eq!(k[0][0], z6.from_i64(3));
    }

    #[test]
    fn solve_over_rings() {
        let z = CoefficientRing::Integers;
        let m = MatExact::from_i64(z, vec![vec![2, 0], vec![0, 3]]);
        assert_eq!(m.solve(&[z.from_i64(4), z.from_i64(9)]).unwrap(), vec![z.from_i64(2), z.from_i64(3)]);
        assert!(m.solve(&[z.from_i64(1), z.from_i64(0)]).is_none());

        let q = CoefficientRing::Rationals;
        let mq = m.to_ring(q);
        let x = mq.solve(&[q.from_i64(1), q.from_i64(1)]).unwrap();
        assert_eq!(mq.apply(&x), vec![q.from_i64(1), q.from_i64(1)]);
    }

    #[test]
    fn cokernel_with_torsion() {
        let z = CoefficientRing::Integers;
        let m = MatExact::from_i64(z, vec![vec![2, 0], vec![0, 1], vec![0, 0]]);
        let c = m.cokernel();
        assert_eq!(c.free_rank, 1);
        assert_eq!(c.torsion, vec![BigInt::from(2)]);
    }
}

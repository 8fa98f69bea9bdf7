//! Big Witt vector arithmetic of finite length, induced by the coaddition
//! and comultiplication of the Lambda scheme, with the ghost-component
//! oracle used purely for testing.

use super::symfun::{ghost_components, SymmetricOracle, TensorTerm};
use crate::exact_algebra::ring::{CoefficientRing, Scalar};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WittVector {
    pub components: Vec<Scalar>,
}

impl WittVector {
    pub fn from_i64(ring: CoefficientRing, comps: &[i64]) -> Self {
        WittVector { components: comps.iter().map(|&c| ring.from_i64(c)).collect() }
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }
}

/// Arithmetic context: truncation length plus the oracle table for the
/// multiplicative structure.
pub struct WittRing {
    pub ring: CoefficientRing,
    pub len: u32,
    table: Vec<Vec<TensorTerm>>,
}

impl WittRing {
    pub fn new(ring: CoefficientRing, len: u32) -> Self {
        let oracle = SymmetricOracle::new(len.max(1) as usize);
        WittRing { ring, len, table: oracle.psi_times_table(len) }
    }

    pub fn zero(&self) -> WittVector {
        WittVector { components: vec![self.ring.zero(); self.len as usize] }
    }

    pub fn one(&self) -> WittVector {
        let mut v = self.zero();
        if self.len >= 1 {
            v.components[0] = self.ring.one();
        }
        v
    }

    fn component(&self, v: &WittVector, i: usize) -> Scalar {
        if i == 0 {
            self.ring.one()
        } else {
            v.components[i - 1].clone()
        }
    }

    /// `s_m = sum_{i+j=m} a_i b_j`: the image of `psi_plus(c_m)` under
    /// `c_i (x) c_j -> a_i * b_j`.
    pub fn add(&self, a: &WittVector, b: &WittVector) -> WittVector {
        self.check(a, b);
        let mut out = Vec::with_capacity(self.len as usize);
        for m in 1..=self.len as usize {
            let mut acc = self.ring.zero();
            for i in 0..=m {
                let prod = self.ring.mul(&self.component(a, i), &self.component(b, m - i));
                acc = self.ring.add(&acc, &prod);
            }
            out.push(acc);
        }
        WittVector { components: out }
    }

    /// The image of `psi_times(c_m)` under `c_i (x) c_j -> a_i * b_j`.
    pub fn mul(&self, a: &WittVector, b: &WittVector) -> WittVector {
        self.check(a, b);
        let mut out = Vec::with_capacity(self.len as usize);
        for m in 1..=self.len as usize {
            let mut acc = self.ring.zero();
            for term in &self.table[m] {
                let mut prod = self.ring.from_bigint(term.coeff.clone());
                for (i, &e) in term.left.iter().enumerate() {
                    for _ in 0..e {
                        prod = self.ring.mul(&prod, &self.component(a, i + 1));
                    }
                }
                for (j, &e) in term.right.iter().enumerate() {
                    for _ in 0..e {
                        prod = self.ring.mul(&prod, &self.component(b, j + 1));
                    }
                }
                acc = self.ring.add(&acc, &prod);
            }
            out.push(acc);
        }
        WittVector { components: out }
    }

    /// Additive inverse, solved degreewise from `a + neg(a) = 0`.
    pub fn neg(&self, a: &WittVector) -> WittVector {
        let mut out = self.zero();
        for m in 1..=self.len as usize {
            // s_m = a_m + n_m + sum_{0<i<m} a_i n_{m-i} must vanish
            let mut acc = self.component(a, m);
            for i in 1..m {
                let prod = self.ring.mul(&self.component(a, i), &out.components[m - i - 1]);
                acc = self.ring.add(&acc, &prod);
            }
            out.components[m - 1] = self.ring.neg(&acc);
        }
        out
    }

    fn check(&self, a: &WittVector, b: &WittVector) {
        assert_eq!(a.len(), self.len as usize, "length mismatch");
        assert_eq!(b.len(), self.len as usize, "length mismatch");
    }
}

/// Ghost components of an integral Witt vector (test oracle): `w_n` is the
/// n-th Newton power sum of the coefficient alphabet of `prod (1 + x_i t)`.
pub fn witt_ghost(v: &WittVector) -> Vec<BigInt> {
    let ints: Vec<BigInt> = v
        .components
        .iter()
        .map(|c| c.as_int().expect("ghost oracle runs over Z").clone())
        .collect();
    ghost_components(&ints)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring() -> WittRing {
        WittRing::new(CoefficientRing::Integers, 4)
    }

    #[test]
    fn add_matches_power_series_product() {
        let w = ring();
        // (1 + a1 t + a2 t^2)(1 + b1 t + b2 t^2), truncated
        let a = WittVector::from_i64(CoefficientRing::Integers, &[2, 3, 0, 0]);
        let b = WittVector::from_i64(CoefficientRing::Integers, &[5, 7, 0, 0]);
        let s = w.add(&a, &b);
        assert_eq!(
            s,
            WittVector::from_i64(CoefficientRing::Integers, &[7, 20, 29, 21])
        );
    }

    #[test]
    fn mul_first_components() {
        let w = ring();
        let a = WittVector::from_i64(CoefficientRing::Integers, &[2, 3, 1, 5]);
        let b = WittVector::from_i64(CoefficientRing::Integers, &[7, 4, 2, 1]);
        let p = w.mul(&a, &b);
        // first component: a1 b1
        assert_eq!(p.components[0], CoefficientRing::Integers.from_i64(14));
        // second: a1^2 b2 + a2 b1^2 - 2 a2 b2
        assert_eq!(p.components[1], CoefficientRing::Integers.from_i64(4 * 4 + 3 * 49 - 2 * 3 * 4));
    }

    #[test]
    fn ghosts_are_ring_homomorphisms() {
        let w = ring();
        let a = WittVector::from_i64(CoefficientRing::Integers, &[2, -1, 3, 0]);
        let b = WittVector::from_i64(CoefficientRing::Integers, &[1, 4, -2, 5]);
        let ga = witt_ghost(&a);
        let gb = witt_ghost(&b);
        let gsum = witt_ghost(&w.add(&a, &b));
        let gprod = witt_ghost(&w.mul(&a, &b));
        for n in 0..4 {
            assert_eq!(gsum[n], &ga[n] + &gb[n], "ghost {n} additive");
            assert_eq!(gprod[n], &ga[n] * &gb[n], "ghost {n} multiplicative");
        }
    }

    #[test]
    fn neg_is_additive_inverse() {
        let w = ring();
        let a = WittVector::from_i64(CoefficientRing::Integers, &[3, 1, -2, 4]);
        let n = w.neg(&a);
        assert_eq!(w.add(&a, &n), w.zero());
    }
}

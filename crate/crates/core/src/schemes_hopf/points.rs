//! Functor-of-points evaluation at finite test rings: enumerate the algebra
//! maps from a truncated level into a finite ring, and equip the resulting
//! point set with the ring structure induced by the scheme's co-operations.

use super::structure::{scalar_image, SchemeStructure};
use crate::exact_algebra::poly::{Algebra, Monomial, Polynomial};
use crate::exact_algebra::tensor::TensorAlgebra;
use num_bigint::BigInt;

/// A finite commutative ring given by tables. Elements are indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteRing {
    pub name: String,
    pub size: usize,
    add: Vec<Vec<usize>>,
    mul: Vec<Vec<usize>>,
    pub zero: usize,
    /// Multiplicative identity; truncated point rings are honest rngs.
    pub unit: Option<usize>,
}

impl FiniteRing {
    pub fn from_tables(name: impl Into<String>, add: Vec<Vec<usize>>, mul: Vec<Vec<usize>>) -> Self {
        let size = add.len();
        let zero = (0..size)
            .find(|&z| (0..size).all(|x| add[z][x] == x))
            .expect("additive identity");
        let unit = (0..size).find(|&o| (0..size).all(|x| mul[o][x] == x));
        FiniteRing { name: name.into(), size, add, mul, zero, unit }
    }

    pub fn one(&self) -> usize {
        self.unit.expect("ring has no multiplicative identity")
    }

    /// n * x by repeated addition (no unit required).
    pub fn scalar_times(&self, n: &BigInt, x: usize) -> usize {
        let c = BigInt::from(self.size);
        let r = ((n % &c) + &c) % &c;
        let count = r.to_u64_digits().1.first().copied().unwrap_or(0);
        let mut acc = self.zero;
        for _ in 0..count {
            acc = self.add(acc, x);
        }
        acc
    }

    /// The ring Z/m.
    pub fn z_mod(m: usize) -> Self {
        let add = (0..m).map(|a| (0..m).map(|b| (a + b) % m).collect()).collect();
        let mul = (0..m).map(|a| (0..m).map(|b| (a * b) % m).collect()).collect();
        Self::from_tables(format!("F{m}"), add, mul)
    }

    /// `F_p[u]/(u^2)`: elements encoded as `a + b u` with index `a + p*b`.
    pub fn fp_dual_numbers(p: usize) -> Self {
        let size = p * p;
        let dec = |x: usize| (x % p, x / p);
        let enc = |a: usize, b: usize| (a % p) + p * (b % p);
        let add = (0..size)
            .map(|x| {
                (0..size)
                    .map(|y| {
                        let ((a, b), (c, d)) = (dec(x), dec(y));
                        enc(a + c, b + d)
                    })
                    .collect()
            })
            .collect();
        let mul = (0..size)
            .map(|x| {
                (0..size)
                    .map(|y| {
                        let ((a, b), (c, d)) = (dec(x), dec(y));
                        enc(a * c, a * d + b * c)
                    })
                    .collect()
            })
            .collect();
        Self::from_tables(format!("F{p}[u]/(u^2)"), add, mul)
    }

    /// Direct product of two rings.
    pub fn product(r1: &FiniteRing, r2: &FiniteRing) -> Self {
        let size = r1.size * r2.size;
        let enc = |a: usize, b: usize| a + r1.size * b;
        let dec = |x: usize| (x % r1.size, x / r1.size);
        let table = |f: &dyn Fn(usize, usize, usize, usize) -> (usize, usize)| -> Vec<Vec<usize>> {
            (0..size)
                .map(|x| {
                    (0..size)
                        .map(|y| {
                            let ((a, b), (c, d)) = (dec(x), dec(y));
                            let (u, v) = f(a, b, c, d);
                            enc(u, v)
                        })
                        .collect()
                })
                .collect()
        };
        let add = table(&|a, b, c, d| (r1.add[a][c], r2.add[b][d]));
        let mul = table(&|a, b, c, d| (r1.mul[a][c], r2.mul[b][d]));
        Self::from_tables(format!("{}x{}", r1.name, r2.name), add, mul)
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a][b]
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a][b]
    }

    pub fn neg(&self, a: usize) -> usize {
        (0..self.size).find(|&b| self.add[a][b] == self.zero).expect("negative")
    }

    /// Image of an integer under Z -> R (requires a unit).
    pub fn int(&self, n: &BigInt) -> usize {
        self.scalar_times(n, self.one())
    }

    /// a^e for e >= 1 without a unit; e = 0 needs the identity.
    pub fn pow(&self, a: usize, e: u32) -> usize {
        if e == 0 {
            return self.one();
        }
        let mut acc = a;
        for _ in 1..e {
            acc = self.mul(acc, a);
        }
        acc
    }
}

/// A point: one ring element per generator of the level algebra.
pub type Point = Vec<usize>;

/// Evaluate a polynomial at a point.
pub fn eval_poly(p: &Polynomial, point: &Point, r: &FiniteRing) -> usize {
    let mut acc = r.zero;
    for (m, c) in &p.terms {
        let ci = c.as_int().expect("integral coefficients for point evaluation");
        let term = if m.is_one() {
            r.int(ci)
        } else {
            let mut prod = None;
            for &(g, e) in m.exps() {
                let factor = r.pow(point[g as usize], e as u32);
                prod = Some(match prod {
                    None => factor,
                    Some(p) => r.mul(p, factor),
                });
            }
            r.scalar_times(ci, prod.unwrap())
        };
        acc = r.add(acc, term);
    }
    acc
}

/// Evaluate a tensor-algebra polynomial at a pair of points.
pub fn eval_tensor_poly(
    ctx: &TensorAlgebra,
    p: &Polynomial,
    points: &[&Point],
    r: &FiniteRing,
) -> usize {
    assert_eq!(points.len(), ctx.factor_count());
    let mut acc = r.zero;
    for (m, c) in &p.terms {
        let ci = c.as_int().expect("integral coefficients");
        let term = if m.is_one() {
            r.int(ci)
        } else {
            let parts = ctx.split_monomial(m);
            let mut prod = None;
            for (i, part) in parts.iter().enumerate() {
                for &(g, e) in part.exps() {
                    let factor = r.pow(points[i][g as usize], e as u32);
                    prod = Some(match prod {
                        None => factor,
                        Some(p) => r.mul(p, factor),
                    });
                }
            }
            r.scalar_times(ci, prod.unwrap())
        };
        acc = r.add(acc, term);
    }
    acc
}

/// Does a point satisfy the stored relations of the level algebra?
fn satisfies_relations(alg: &Algebra, point: &Point, r: &FiniteRing) -> bool {
    for rule in &alg.relations {
        let lhs = eval_monomial(&rule.lhs, point, r);
        let mut rhs = r.zero;
        for (m, c) in &rule.rhs {
            let term = r.scalar_times(c, eval_monomial(m, point, r));
            rhs = r.add(rhs, term);
        }
        if lhs != rhs {
            return false;
        }
    }
    true
}

fn eval_monomial(m: &Monomial, point: &Point, r: &FiniteRing) -> usize {
    let mut acc = None;
    for &(g, e) in m.exps() {
        let factor = r.pow(point[g as usize], e as u32);
        acc = Some(match acc {
            None => factor,
            Some(p) => r.mul(p, factor),
        });
    }
    acc.unwrap_or_else(|| r.one())
}

/// Monomials just above the truncation bound that must evaluate to zero for
/// a point of a truncation-tower level (minimal violating monomials).
fn truncation_constraints(alg: &Algebra) -> Vec<Monomial> {
    let max_w = alg.generators.iter().map(|g| g.weight).max().unwrap_or(0);
    if max_w == 0 {
        return Vec::new();
    }
    let mut relaxed = crate::exact_algebra::poly::TruncatedAlgebra::clone(alg);
    relaxed.bound = alg.bound + max_w;
    let relaxed = std::sync::Arc::new(relaxed);
    let mut out = Vec::new();
    for w in alg.bound + 1..=alg.bound + max_w {
        for m in relaxed.weight_basis(w) {
            // minimal: removing any single factor drops within the bound
            let minimal = m.exps().iter().all(|&(g, _)| {
                m.weight() - alg.generators[g as usize].weight <= alg.bound
            });
            if minimal {
                out.push(m);
            }
        }
    }
    out
}

/// All points of the level algebra over the finite ring: generator
/// assignments satisfying the relations and (for truncation towers) the
/// just-above-bound vanishing constraints.
pub fn enumerate_points(alg: &Algebra, truncation: bool, r: &FiniteRing) -> Vec<Point> {
    let gens = alg.generators.len();
    let constraints = if truncation { truncation_constraints(alg) } else { Vec::new() };
    let mut out = Vec::new();
    let mut point = vec![0usize; gens];
    loop {
        if satisfies_relations(alg, &point, r)
            && constraints.iter().all(|m| eval_monomial(m, &point, r) == r.zero)
        {
            out.push(point.clone());
        }
        // odometer
        let mut i = 0;
        loop {
            if i == gens {
                return out;
            }
            point[i] += 1;
            if point[i] < r.size {
                break;
            }
            point[i] = 0;
            i += 1;
        }
        if gens == 0 {
            return out;
        }
    }
}

/// The ring of points `Spf(level n)(R)` with operations induced by the
/// scheme's co-operations.
pub struct PointRing<'a> {
    pub scheme: &'a SchemeStructure,
    pub level: u32,
    pub ring: &'a FiniteRing,
    pub points: Vec<Point>,
}

impl<'a> PointRing<'a> {
    pub fn new(scheme: &'a SchemeStructure, level: u32, ring: &'a FiniteRing) -> Self {
        let alg = scheme.level(level);
        let points = enumerate_points(&alg, scheme.truncation_points, ring);
        PointRing { scheme, level, ring, points }
    }

    fn convolve(&self, map: &crate::exact_algebra::map::AlgebraMap, ctx: &TensorAlgebra, p: &Point, q: &Point) -> Point {
        // The structure map may be defined on a deeper source level; restrict
        // to the generators of this level by name.
        let alg = self.scheme.level(self.level);
        alg.generators
            .iter()
            .map(|g| {
                let idx = map.source.gen_index(&g.name).expect("structure map covers level");
                eval_tensor_poly(ctx, &map.images[idx], &[p, q], self.ring)
            })
            .collect()
    }

    pub fn add(&self, p: &Point, q: &Point) -> Point {
        let psi = (self.scheme.psi_plus)(self.level);
        let ctx = self.scheme.square(self.level, self.level);
        self.convolve(&psi, &ctx, p, q)
    }

    pub fn mul(&self, p: &Point, q: &Point) -> Point {
        let psix = self.scheme.psi_times.as_ref().expect("multiplicative structure")(self.level);
        let ctx = self.scheme.square(self.level, 2 * self.level);
        self.convolve(&psix, &ctx, p, q)
    }

    pub fn neg(&self, p: &Point) -> Point {
        let minus_one = match self.scheme.l_modulus {
            Some(m) => (m as i64) - 1,
            None => -1,
        };
        let lam = (self.scheme.action)(minus_one, self.level);
        let alg = self.scheme.level(self.level);
        alg.generators
            .iter()
            .map(|g| {
                let idx = lam.source.gen_index(&g.name).expect("action covers level");
                eval_poly(&lam.images[idx], p, self.ring)
            })
            .collect()
    }

    /// The zero point (from eps_0).
    pub fn zero(&self) -> Point {
        let eps = (self.scheme.eps_zero)(self.level);
        self.counit_point(&eps)
    }

    /// The point of an integer a (from eps_a), for unital schemes.
    pub fn int_point(&self, a: i64) -> Point {
        let counit = self.scheme.counit.as_ref().expect("counit family");
        self.counit_point(&counit(a, self.level))
    }

    fn counit_point(&self, eps: &crate::exact_algebra::map::AlgebraMap) -> Point {
        let alg = self.scheme.level(self.level);
        alg.generators
            .iter()
            .map(|g| {
                let idx = eps.source.gen_index(&g.name).expect("counit covers level");
                let c = scalar_image(eps, idx);
                self.ring.int(c.as_int().expect("integral counit"))
            })
            .collect()
    }

    pub fn index_of(&self, p: &Point) -> Option<usize> {
        self.points.iter().position(|q| q == p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn z_mod_tables() {
        let f3 = FiniteRing::z_mod(3);
        assert_eq!(f3.add(2, 2), 1);
        assert_eq!(f3.mul(2, 2), 1);
        assert_eq!(f3.neg(1), 2);
        assert_eq!(f3.int(&BigInt::from(-1)), 2);
    }

    #[test]
    fn dual_numbers_nilpotent() {
        let r = FiniteRing::fp_dual_numbers(2);
        // u = index 2 (a=0,b=1); u^2 = 0
        let u = 2;
        assert_eq!(r.mul(u, u), r.zero);
        assert_eq!(r.size, 4);
    }

    #[test]
    fn product_ring_idempotents() {
        let f3 = FiniteRing::z_mod(3);
        let r = FiniteRing::product(&f3, &f3);
        // idempotents: (0,0), (1,1), (1,0), (0,1)
        let idem: Vec<usize> = (0..r.size).filter(|&x| r.mul(x, x) == x).collect();
        assert_eq!(idem.len(), 4);
    }
}

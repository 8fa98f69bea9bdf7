//! The Lambda plethory: the composition comultiplication on representing
//! objects is plethysm itself, `d[c_m > c_i] -> c_m of c_i`, with the counit
//! `e -> c_1`. Coassociativity encodes associativity of plethysm and is
//! verified mechanically through the configured weight, as are both counit
//! laws; a failure here is a hard error.

use super::lambda::{lambda_level, lambda_structure};
use super::symfun::{self, newton_polynomial};
use crate::exact_algebra::map::AlgebraMap;
use crate::exact_algebra::poly::{Algebra, Generator, Polynomial, TruncatedAlgebra};
use crate::exact_algebra::ring::CoefficientRing;
use crate::schemes_hopf::structure::SchemeStructure;
use crate::two_monoidal::compose::{compose_levels, Composite, SymbolicPoints};

/// General plethysm in the c-basis (the oracle of record for compositions).
pub fn plethysm(f: &Polynomial, g: &Polynomial, n_max: u32) -> Polynomial {
    symfun::plethysm(f, g, n_max)
}

/// A formal plethory instance: the scheme together with the composition
/// comultiplication `delta: Reg(F o F) -> Reg F` and counit
/// `eps: Reg(id) = k[e] -> Reg F` on representing objects.
pub struct PlethoryData {
    pub scheme: SchemeStructure,
    pub bound: u32,
    pub ring: CoefficientRing,
}

impl PlethoryData {
    /// The composite level `Reg(F o F)` at the plethory's bound.
    pub fn composite(&self) -> Composite {
        let a = lambda_level(self.ring, self.bound);
        compose_levels(&a, &a, self.bound)
    }

    /// `delta: Reg(F o F) -> Reg F`: `c_m > c_i  ->  plethysm(c_m, c_i)`.
    pub fn delta(&self) -> AlgebraMap {
        let a = lambda_level(self.ring, self.bound);
        let comp = self.composite();
        let images = comp
            .alg
            .generators
            .iter()
            .map(|g| {
                let (m, i) = parse_pair(&g.name);
                let cm = Polynomial::generator_named(&a, &format!("c{m}"));
                let ci = Polynomial::generator_named(&a, &format!("c{i}"));
                plethysm(&cm, &ci, self.bound)
            })
            .collect();
        AlgebraMap { source: comp.alg.clone(), target: a, images, weight_scale: Some(1) }
    }

    /// `eps: k[e] -> Reg F`: `e -> c_1` (the identity operation).
    pub fn counit(&self) -> AlgebraMap {
        let ke = identity_level(self.ring, self.bound);
        let a = lambda_level(self.ring, self.bound);
        let images = vec![Polynomial::generator_named(&a, "c1")];
        AlgebraMap { source: ke, target: a, images, weight_scale: Some(1) }
    }

    /// Verify the comonoid axioms through the bound; an error here would
    /// indicate an implementation bug, hence the panic contract.
    pub fn verify_comonoid(&self) -> Result<(), String> {
        let ring = self.ring;
        let n = self.bound;
        let a = lambda_level(ring, n);
        let comp = self.composite();
        let delta = self.delta();

        // Right counit: (id o eps) then delta is the canonical isomorphism
        // Lambda o k[e] = Lambda, i.e. d[c_m > e] -> c_m.
        for m in 1..=n as usize {
            let img = delta.apply(&comp.d(m - 1, 0));
            let expected = Polynomial::generator_named(&a, &format!("c{m}"));
            if img != expected {
                return Err(format!("right counit fails at c{m}: {img}"));
            }
        }

        // Left counit: the single copy of Lambda attached to e maps by
        // d[e > c_i] -> plethysm(c_1, c_i) = c_i.
        for i in 1..=n as usize {
            let c1 = Polynomial::generator_named(&a, "c1");
            let ci = Polynomial::generator_named(&a, &format!("c{i}"));
            let img = plethysm(&c1, &ci, n);
            if img != ci {
                return Err(format!("left counit fails at c{i}: {img}"));
            }
        }

        // Coassociativity on the triple composite: for generators
        // t = c_m > c_i > c_j of weight m*i*j <= n, compare
        //   delta((delta o id)(t))  with  delta((id o delta)(t)).
        let scheme = &self.scheme;
        let sym = SymbolicPoints::new(scheme, n, comp.alg.clone());
        let taut: Vec<Vec<Polynomial>> =
            (0..n as usize).map(|mu| comp.tautological_point(mu)).collect();
        for m in 1..=n as usize {
            for i in 1..=n as usize {
                for j in 1..=n as usize {
                    if (m * i * j) as u32 > n {
                        continue;
                    }
                    let cm = Polynomial::generator_named(&a, &format!("c{m}"));
                    let ci = Polynomial::generator_named(&a, &format!("c{i}"));
                    let cj = Polynomial::generator_named(&a, &format!("c{j}"));

                    // (delta o id)*: evaluate plethysm(c_m, c_i) in the ring
                    // of points of F with composite coordinates, take the
                    // j-th coordinate, then apply delta.
                    let pleth_mi = plethysm(&cm, &ci, n);
                    let evaluated = sym.eval_polynomial(&pleth_mi, &taut);
                    let lhs = delta.apply(&evaluated[j - 1]);

                    // (id o delta)*: substitute plethysm(c_i, c_j) into copy
                    // m, then apply delta.
                    let pleth_ij = plethysm(&ci, &cj, n);
                    let embedded = comp.copy_embed(m - 1, &pleth_ij);
                    let rhs = delta.apply(&embedded);

                    if lhs != rhs {
                        return Err(format!(
                            "coassociativity fails at c{m}>c{i}>c{j}: {lhs} vs {rhs}"
                        ));
                    }
                }
            }
        }
        Ok(())
    }
}

fn parse_pair(name: &str) -> (u32, u32) {
    let mut it = name.split('>');
    let left = it.next().expect("outer name");
    let right = it.next().expect("inner name");
    (
        left[1..].parse().expect("outer index"),
        right[1..].parse().expect("inner index"),
    )
}

fn identity_level(ring: CoefficientRing, n: u32) -> Algebra {
    TruncatedAlgebra::free(ring, vec![Generator::even("e", 1)], n.max(1))
}

/// Construct the Lambda plethory at the given bound and verify the comonoid
/// axioms; axiom failure is a hard error.
pub fn lambda_comonoid(ring: CoefficientRing, n_max: u32) -> PlethoryData {
    let data = PlethoryData { scheme: lambda_structure(ring, n_max), bound: n_max, ring };
    if let Err(e) = data.verify_comonoid() {
        panic!("lambda comonoid axioms failed: {e}");
    }
    data
}

/// The indecomposable class of `plethysm(c_d, c_e)`: the coefficient of
/// `c_{de}` (all other weight-de monomials are decomposable).
pub fn plethysm_indecomposable_coefficient(
    ring: CoefficientRing,
    d: u32,
    e: u32,
) -> crate::exact_algebra::ring::Scalar {
    let n = d * e;
    let a = lambda_level(ring, n);
    let cd = Polynomial::generator_named(&a, &format!("c{d}"));
    let ce = Polynomial::generator_named(&a, &format!("c{e}"));
    let p = plethysm(&cd, &ce, n);
    let target = crate::exact_algebra::poly::Monomial::from_exps(
        &a,
        &[(a.gen_index(&format!("c{n}")).unwrap(), 1)],
    );
    p.coefficient(&target)
}

/// Over Q in the power-sum normalization `q_n = (-1)^(n-1) n c_n (= p_n mod
/// decomposables)`, the composition comultiplication of Q(Lambda) sends
/// `q_d (.) q_e -> q_{de}` with unit coefficient; dually `p_n` maps to the
/// divisor-pair diagonal. Returns the matrix coefficient for (d, e).
pub fn power_sum_comultiplication_coefficient(d: u32, e: u32) -> num_rational::BigRational {
    use num_bigint::BigInt;
    let ring = CoefficientRing::Rationals;
    let gamma = plethysm_indecomposable_coefficient(ring, d, e);
    let norm = |n: u32| -> BigInt {
        let sign = if n % 2 == 1 { 1 } else { -1 };
        BigInt::from(sign * n as i64)
    };
    let q = match gamma {
        crate::exact_algebra::ring::Scalar::Rat(q) => q,
        crate::exact_algebra::ring::Scalar::Int(n) => num_rational::BigRational::from_integer(n),
    };
    // gamma * norm(d) * norm(e) / norm(de)
    q * num_rational::BigRational::from_integer(norm(d) * norm(e))
        / num_rational::BigRational::from_integer(norm(d * e))
}

/// The plethysm oracle in the power-sum basis: `p_d of p_e = p_{de}`.
pub fn power_sum_plethysm_check(n_max: u32) -> bool {
    let pq = symfun::power_sum_algebra(n_max);
    for d in 1..=n_max {
        for e in 1..=n_max {
            if d * e > n_max {
                continue;
            }
            let pe = Polynomial::generator_named(&pq, &format!("p{e}"));
            let image = symfun::adams_substitution(&pq, &pe, d);
            let expected = Polynomial::generator_named(&pq, &format!("p{}", d * e));
            if image != expected {
                return false;
            }
        }
    }
    true
}

/// Newton polynomial re-export for the acceptance suites.
pub fn newton(alg: &Algebra, n: u32) -> Polynomial {
    newton_polynomial(alg, n)
}

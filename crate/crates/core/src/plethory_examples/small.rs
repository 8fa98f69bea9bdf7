//! The small example schemes: the identity scheme `k[e]`, its completion at
//! zero (nil elements), the formal completion (idempotent window times nil),
//! and the initial scheme of complete orthogonal idempotent tuples for
//! `l = Z/m`.

use crate::exact_algebra::map::AlgebraMap;
use crate::exact_algebra::poly::{
    Algebra, Generator, Monomial, Parity, Polynomial, RewriteRule, TruncatedAlgebra,
};
use crate::exact_algebra::ring::CoefficientRing;
use crate::exact_algebra::tensor::{tensor_many, TensorAlgebra};
use crate::pro_tower::Tower;
use crate::schemes_hopf::points::{enumerate_points, FiniteRing};
use crate::schemes_hopf::structure::{identity_reindex, SchemeStructure};
use num_bigint::BigInt;
use num_traits::One;
use std::sync::Arc;

fn single_generator_level(ring: CoefficientRing, parity: Parity, n: u32) -> Algebra {
    let e = Generator { name: "e".to_string(), weight: 1, parity };
    TruncatedAlgebra::free(ring, vec![e], n.max(1))
}

/// The identity scheme `k[e_p]`: polynomial for even p, exterior for odd p.
/// In the collapsed grading `e` carries weight 1 (the weight of the identity
/// operation); the homological index p survives as the parity.
///
/// For odd p the comultiplication pairs distinct homological degrees, which
/// the collapsed grading cannot host, so odd identity schemes are module
/// schemes (no psi_times).
pub fn identity_scheme(ring: CoefficientRing, p: u32, n_max: u32) -> SchemeStructure {
    let parity = if p % 2 == 0 { Parity::Even } else { Parity::Odd };
    let carrier = Tower::from_fn(format!("Identity(p={p})"), move |n| {
        single_generator_level(ring, parity, n)
    });

    let psi_plus = Arc::new(move |n: u32| {
        let a = single_generator_level(ring, parity, n);
        let sq = tensor_many(&[&a, &a], n.max(1));
        let e = Polynomial::generator_named(&a, "e");
        let one = Polynomial::one(&a);
        let img = sq.pure_tensor(&[&e, &one]).add(&sq.pure_tensor(&[&one, &e]));
        AlgebraMap { source: a.clone(), target: sq.alg.clone(), images: vec![img], weight_scale: Some(1) }
    });

    let even = parity == Parity::Even;
    let psi_times: Option<crate::schemes_hopf::structure::LevelMap> = if even {
        Some(Arc::new(move |n: u32| {
            let a = single_generator_level(ring, parity, n);
            let sq2 = tensor_many(&[&a, &a], 2 * n.max(1));
            let e = Polynomial::generator_named(&a, "e");
            let img = sq2.pure_tensor(&[&e, &e]);
            AlgebraMap { source: a.clone(), target: sq2.alg.clone(), images: vec![img], weight_scale: Some(2) }
        }))
    } else {
        None
    };

    let eps_zero = Arc::new(move |n: u32| {
        let a = single_generator_level(ring, parity, n);
        let base = TruncatedAlgebra::base(ring);
        AlgebraMap::mixed(&a, &base, vec![Polynomial::zero(&base)]).expect("eps_0")
    });

    let counit: Option<crate::schemes_hopf::structure::IndexedLevelMap> = if even {
        Some(Arc::new(move |x: i64, n: u32| {
            let a = single_generator_level(ring, parity, n);
            let base = TruncatedAlgebra::base(ring);
            AlgebraMap::mixed(&a, &base, vec![Polynomial::from_i64(&base, x)]).expect("eps_a")
        }))
    } else {
        None
    };

    let action = Arc::new(move |x: i64, n: u32| {
        let a = single_generator_level(ring, parity, n);
        let e = Polynomial::generator_named(&a, "e").scale_i64(x);
        AlgebraMap { source: a.clone(), target: a.clone(), images: vec![e], weight_scale: Some(1) }
    });

    SchemeStructure {
        name: format!("Identity(p={p}, {ring:?})(bound {n_max})"),
        carrier,
        psi_plus,
        psi_plus_reindex: identity_reindex(),
        eps_zero,
        psi_times,
        psi_times_reindex: identity_reindex(),
        counit,
        action,
        action_source_level: crate::schemes_hopf::structure::same_level_action(),
        l_modulus: None,
        unital: even,
        truncation_points: false,
    }
}

/// The completion-at-zero scheme `{k[e]/(e^n)}_n`: same costructure as the
/// identity scheme but read as a truncation tower, non-unital.
pub fn nil_scheme(ring: CoefficientRing, p: u32, n_max: u32) -> SchemeStructure {
    let mut s = identity_scheme(ring, p, n_max);
    s.name = format!("NilCompletion(p={p}, {ring:?})(bound {n_max})");
    s.counit = None;
    s.unital = false;
    s.truncation_points = true;
    s
}

/// Level of the idempotent algebra `k^m` in the reduced presentation with
/// generators `d1..d(m-1)` (dropping `d0 = 1 - sum d_i`) and the rules
/// `d_i d_j = 0 (i != j)`, `d_i^2 = d_i`.
pub fn idempotent_level(ring: CoefficientRing, m: u64) -> Algebra {
    let gens: Vec<Generator> =
        (1..m).map(|i| Generator::even(format!("d{i}"), 0)).collect();
    let proto = TruncatedAlgebra::free(ring, gens.clone(), 0);
    let mut rules = Vec::new();
    for i in 0..gens.len() {
        for j in i..gens.len() {
            let (lhs, rhs) = if i == j {
                (
                    Monomial::from_exps(&proto, &[(i, 2)]),
                    vec![(Monomial::from_exps(&proto, &[(i, 1)]), BigInt::one())],
                )
            } else {
                (Monomial::from_exps(&proto, &[(i, 1), (j, 1)]), vec![])
            };
            rules.push(RewriteRule { lhs, rhs });
        }
    }
    TruncatedAlgebra::with_relations(ring, gens, 0, rules)
}

/// The basis function `E(i)` of the full product algebra inside the reduced
/// presentation: `E(0) = 1 - sum d_t`, `E(i) = d_i`.
fn idem_e(alg: &Algebra, m: u64, i: u64) -> Polynomial {
    let i = i % m;
    if i == 0 {
        let mut acc = Polynomial::one(alg);
        for t in 1..m {
            acc = acc.sub(&Polynomial::generator_named(alg, &format!("d{t}")));
        }
        acc
    } else {
        Polynomial::generator_named(alg, &format!("d{i}"))
    }
}

/// The initial formal algebra scheme for `l = Z/m`: the constant scheme of
/// complete orthogonal idempotent m-tuples with convolution operations.
pub fn idempotent_scheme(ring: CoefficientRing, m: u64) -> SchemeStructure {
    assert!(m >= 2);
    let carrier = Tower::from_fn(format!("Idempotent(Z/{m})"), move |_| idempotent_level(ring, m));

    let psi_plus = Arc::new(move |n: u32| {
        let a = idempotent_level(ring, m);
        let sq = tensor_many(&[&a, &a], n);
        let images = (1..m)
            .map(|t| {
                let mut acc = Polynomial::zero(&sq.alg);
                for i in 0..m {
                    let j = (m + t - i) % m;
                    let left = idem_e(&a, m, i);
                    let right = idem_e(&a, m, j);
                    acc = acc.add(&sq.pure_tensor(&[&left, &right]));
                }
                acc
            })
            .collect();
        AlgebraMap { source: a.clone(), target: sq.alg.clone(), images, weight_scale: None }
    });

    let psi_times = Arc::new(move |n: u32| {
        let a = idempotent_level(ring, m);
        let sq = tensor_many(&[&a, &a], 2 * n);
        let images = (1..m)
            .map(|t| {
                let mut acc = Polynomial::zero(&sq.alg);
                for i in 0..m {
                    for j in 0..m {
                        if (i * j) % m == t {
                            let left = idem_e(&a, m, i);
                            let right = idem_e(&a, m, j);
                            acc = acc.add(&sq.pure_tensor(&[&left, &right]));
                        }
                    }
                }
                acc
            })
            .collect();
        AlgebraMap { source: a.clone(), target: sq.alg.clone(), images, weight_scale: None }
    });

    let eps = move |x: i64, _n: u32| {
        let a = idempotent_level(ring, m);
        let base = TruncatedAlgebra::base(ring);
        let xm = x.rem_euclid(m as i64) as u64;
        let images = (1..m)
            .map(|t| {
                if t == xm {
                    Polynomial::one(&base)
                } else {
                    Polynomial::zero(&base)
                }
            })
            .collect();
        AlgebraMap::mixed(&a, &base, images).expect("eps")
    };
    let eps_zero = Arc::new(move |n: u32| eps(0, n));
    let counit = Arc::new(eps);

    let action = Arc::new(move |c: i64, _n: u32| {
        let a = idempotent_level(ring, m);
        let cm = c.rem_euclid(m as i64) as u64;
        let images = (1..m)
            .map(|b| {
                // pullback along multiplication by c: sum over i != 0, ci = b
                let mut acc = Polynomial::zero(&a);
                for i in 1..m {
                    if (cm * i) % m == b {
                        acc = acc.add(&idem_e(&a, m, i));
                    }
                }
                acc
            })
            .collect();
        AlgebraMap { source: a.clone(), target: a.clone(), images, weight_scale: None }
    });

    SchemeStructure {
        name: format!("Idempotent(Z/{m}, {ring:?})"),
        carrier,
        psi_plus,
        psi_plus_reindex: identity_reindex(),
        eps_zero,
        psi_times: Some(psi_times),
        psi_times_reindex: identity_reindex(),
        counit: Some(counit),
        action,
        action_source_level: crate::schemes_hopf::structure::same_level_action(),
        l_modulus: Some(m),
        unital: true,
        truncation_points: false,
    }
}

/// Enumerate the complete orthogonal idempotent m-tuples of a finite ring,
/// returned as full tuples `(a_0, ..., a_{m-1})`.
pub fn idempotent_points(m: u64, r: &FiniteRing) -> Vec<Vec<usize>> {
    let ring = CoefficientRing::Integers;
    let alg = idempotent_level(ring, m);
    let reduced = enumerate_points(&alg, false, r);
    reduced
        .into_iter()
        .map(|p| {
            let mut full = Vec::with_capacity(m as usize);
            // a_0 = 1 - sum of the others
            let mut a0 = r.one();
            for &v in &p {
                a0 = r.add(a0, r.neg(v));
            }
            full.push(a0);
            full.extend(p);
            full
        })
        .collect()
}

/// Convolution sum of two idempotent tuples: `(a + b)_t = sum_{i+j=t} a_i b_j`.
pub fn idempotent_tuple_add(m: u64, r: &FiniteRing, a: &[usize], b: &[usize]) -> Vec<usize> {
    (0..m)
        .map(|t| {
            let mut acc = r.zero;
            for i in 0..m {
                let j = (m + t - i) % m;
                acc = r.add(acc, r.mul(a[i as usize], b[j as usize]));
            }
            acc
        })
        .collect()
}

/// The formal completion scheme: the window product `hom(Z, k) (x) Nil`.
///
/// Level n carries the idempotent window `[-n, n]` (weight 0) and the nil
/// coordinate `e` (weight 1); the coaddition needs the doubled window and the
/// comultiplication the squared window, expressed by the reindex maps.
pub fn formal_completion_scheme(ring: CoefficientRing, n_max: u32) -> SchemeStructure {
    let carrier = Tower::from_fn("FormalCompletion", move |n| completion_level(ring, n));

    let psi_plus = Arc::new(move |n: u32| {
        let src = completion_level(ring, 2 * n);
        let tgt = completion_level(ring, n);
        let sq = tensor_many(&[&tgt, &tgt], n.max(1));
        let w = n as i64;
        let mut images = Vec::new();
        for g in &src.generators {
            if g.name == "e" {
                let e = Polynomial::generator_named(&tgt, "e");
                let one = Polynomial::one(&tgt);
                images.push(sq.pure_tensor(&[&e, &one]).add(&sq.pure_tensor(&[&one, &e])));
            } else {
                let a: i64 = g.name[1..].parse().expect("window index");
                let mut acc = Polynomial::zero(&sq.alg);
                for i in -w..=w {
                    let j = a - i;
                    if j.abs() <= w {
                        let left = window_e(&tgt, w, i);
                        let right = window_e(&tgt, w, j);
                        acc = acc.add(&sq.pure_tensor(&[&left, &right]));
                    }
                }
                images.push(acc);
            }
        }
        AlgebraMap { source: src.clone(), target: sq.alg.clone(), images, weight_scale: None }
    });

    let psi_times = Arc::new(move |n: u32| {
        let src = completion_level(ring, n * n);
        let tgt = completion_level(ring, n);
        let sq = tensor_many(&[&tgt, &tgt], 2 * n.max(1));
        let w = n as i64;
        let mut images = Vec::new();
        for g in &src.generators {
            if g.name == "e" {
                // e(xy) = l1 x2 + l2 x1 + x1 x2
                let e = Polynomial::generator_named(&tgt, "e");
                let mut acc = sq.pure_tensor(&[&e, &e]);
                for a in -w..=w {
                    if a == 0 {
                        continue;
                    }
                    let da = window_e(&tgt, w, a);
                    acc = acc.add(&sq.pure_tensor(&[&da, &e]).scale_i64(a));
                    acc = acc.add(&sq.pure_tensor(&[&e, &da]).scale_i64(a));
                }
                images.push(acc);
            } else {
                let a: i64 = g.name[1..].parse().expect("window index");
                let mut acc = Polynomial::zero(&sq.alg);
                for i in -w..=w {
                    for j in -w..=w {
                        if i * j == a {
                            let left = window_e(&tgt, w, i);
                            let right = window_e(&tgt, w, j);
                            acc = acc.add(&sq.pure_tensor(&[&left, &right]));
                        }
                    }
                }
                images.push(acc);
            }
        }
        AlgebraMap { source: src.clone(), target: sq.alg.clone(), images, weight_scale: None }
    });

    let eps = move |x: i64, n: u32| {
        let src = completion_level(ring, n.max(x.unsigned_abs() as u32));
        let base = TruncatedAlgebra::base(ring);
        let images = src
            .generators
            .iter()
            .map(|g| {
                if g.name == "e" {
                    Polynomial::zero(&base)
                } else {
                    let a: i64 = g.name[1..].parse().expect("window index");
                    Polynomial::from_i64(&base, if a == x { 1 } else { 0 })
                }
            })
            .collect();
        AlgebraMap::mixed(&src, &base, images).expect("eps")
    };
    let eps_zero = Arc::new(move |n: u32| eps(0, n));
    let counit = Arc::new(eps);

    let action = Arc::new(move |c: i64, n: u32| {
        let src_level = (c.unsigned_abs() as u32).max(1) * n;
        let src = completion_level(ring, src_level);
        let tgt = completion_level(ring, n);
        let w = n as i64;
        let images = src
            .generators
            .iter()
            .map(|g| {
                if g.name == "e" {
                    Polynomial::generator_named(&tgt, "e").scale_i64(c)
                } else {
                    let b: i64 = g.name[1..].parse().expect("window index");
                    let mut acc = Polynomial::zero(&tgt);
                    for i in -w..=w {
                        if i != 0 && c * i == b {
                            acc = acc.add(&window_e(&tgt, w, i));
                        }
                    }
                    acc
                }
            })
            .collect();
        AlgebraMap { source: src.clone(), target: tgt.clone(), images, weight_scale: None }
    });

    SchemeStructure {
        name: format!("FormalCompletion ({ring:?})(bound {n_max})"),
        carrier,
        psi_plus,
        psi_plus_reindex: Arc::new(|n| 2 * n),
        eps_zero,
        psi_times: Some(psi_times),
        psi_times_reindex: Arc::new(|n| n * n),
        counit: Some(counit),
        action,
        action_source_level: Arc::new(|c, n| (c.unsigned_abs() as u32).max(1) * n),
        l_modulus: None,
        unital: true,
        truncation_points: true,
    }
}

/// Level of the formal completion: window generators `d{-n}..d{n}` minus
/// `d0`, plus the nil coordinate `e`, truncated at weight n.
pub fn completion_level(ring: CoefficientRing, n: u32) -> Algebra {
    let w = n as i64;
    let mut gens = Vec::new();
    for i in -w..=w {
        if i != 0 {
            gens.push(Generator::even(format!("d{i}"), 0));
        }
    }
    gens.push(Generator::even("e", 1));
    let proto = TruncatedAlgebra::free(ring, gens.clone(), n.max(1));
    let deltas = gens.len() - 1;
    let mut rules = Vec::new();
    for i in 0..deltas {
        for j in i..deltas {
            let (lhs, rhs) = if i == j {
                (
                    Monomial::from_exps(&proto, &[(i, 2)]),
                    vec![(Monomial::from_exps(&proto, &[(i, 1)]), BigInt::one())],
                )
            } else {
                (Monomial::from_exps(&proto, &[(i, 1), (j, 1)]), vec![])
            };
            rules.push(RewriteRule { lhs, rhs });
        }
    }
    TruncatedAlgebra::with_relations(ring, gens, n.max(1), rules)
}

fn window_e(alg: &Algebra, w: i64, i: i64) -> Polynomial {
    if i == 0 {
        let mut acc = Polynomial::one(alg);
        for t in -w..=w {
            if t != 0 {
                acc = acc.sub(&Polynomial::generator_named(alg, &format!("d{t}")));
            }
        }
        acc
    } else {
        Polynomial::generator_named(alg, &format!("d{i}"))
    }
}

/// All six example schemes keyed by name (identity at p=0).
pub fn small_schemes(ring: CoefficientRing, n_max: u32) -> Vec<SchemeStructure> {
    vec![
        identity_scheme(ring, 0, n_max),
        nil_scheme(ring, 0, n_max),
        formal_completion_scheme(ring, n_max),
        idempotent_scheme(ring, 2),
    ]
}

/// Shared context: the tensor square used by point convolution over a level.
pub fn square_context(a: &Algebra, bound: u32) -> TensorAlgebra {
    tensor_many(&[&a, &a], bound)
}

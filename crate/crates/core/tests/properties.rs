//! Algebraic invariants, checked on random inputs.

use completion_kit::catalog::main_identity_at;
use completion_kit::{
    check_certificate, parse, Homomorphism, MembershipCertificate, PolyMatrix, Polynomial, Ring,
    RingSpec, SegreContext,
};
use num_bigint::BigInt;
use proptest::prelude::*;

fn abcd() -> Ring {
    RingSpec::new(["a", "b", "c", "d"]).unwrap()
}

fn gh() -> Ring {
    RingSpec::new(["g", "h"]).unwrap()
}

/// A term is a coefficient times a product of up to `max_degree` variables.
fn poly_in(ring: Ring, max_terms: usize, max_degree: usize) -> impl Strategy<Value = Polynomial> {
    let n = ring.len();
    let term = (-9i64..=9, prop::collection::vec(0..n, 0..=max_degree));
    prop::collection::vec(term, 0..=max_terms).prop_map(move |terms| {
        let terms = terms.into_iter().map(|(c, vars)| {
            let mut e = vec![0u32; n];
            for v in vars {
                e[v] += 1;
            }
            (e, c)
        });
        Polynomial::from_terms(&ring, terms).unwrap()
    })
}

fn small_poly() -> impl Strategy<Value = Polynomial> {
    poly_in(abcd(), 5, 4)
}

/// Homomorphisms `Z[a,b,c,d] -> Z[g,h]` with small images.
fn small_hom() -> impl Strategy<Value = Homomorphism> {
    prop::collection::vec(poly_in(gh(), 3, 2), 4)
        .prop_map(|images| Homomorphism::new(&abcd(), &gh(), images).unwrap())
}

fn matrix(size: usize, max_terms: usize, max_degree: usize) -> impl Strategy<Value = PolyMatrix> {
    prop::collection::vec(poly_in(abcd(), max_terms, max_degree), size * size)
        .prop_map(move |entries| PolyMatrix::new(&abcd(), size, size, entries).unwrap())
}

fn square_matrix(max: usize) -> impl Strategy<Value = PolyMatrix> {
    (1..=max).prop_flat_map(|n| matrix(n, 2, 2))
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

fn sign(p: &[usize]) -> i64 {
    let inversions = (0..p.len())
        .flat_map(|i| (i + 1..p.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| p[i] > p[j])
        .count();
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Leibniz expansion: signed sum over all permutations.
fn leibniz(m: &PolyMatrix) -> Polynomial {
    let n = m.rows();
    permutations(n)
        .iter()
        .fold(Polynomial::zero(m.ring()), |acc, perm| {
            let term = (0..n).fold(Polynomial::constant(m.ring(), sign(perm)), |t, i| {
                &t * m.get(i, perm[i])
            });
            &acc + &term
        })
}

fn mat_mul(x: &PolyMatrix, y: &PolyMatrix) -> PolyMatrix {
    let n = x.rows();
    let entries = (0..n * n)
        .map(|k| {
            let (i, j) = (k / n, k % n);
            (0..n).fold(Polynomial::zero(x.ring()), |acc, l| {
                &acc + &(x.get(i, l) * y.get(l, j))
            })
        })
        .collect();
    PolyMatrix::new(x.ring(), n, n, entries).unwrap()
}

proptest! {
    #[test]
    fn addition_is_commutative_and_associative(p in small_poly(), q in small_poly(), r in small_poly()) {
        prop_assert_eq!(&p + &q, &q + &p);
        prop_assert_eq!(&(&p + &q) + &r, &p + &(&q + &r));
    }

    #[test]
    fn multiplication_is_commutative_and_associative(p in small_poly(), q in small_poly(), r in small_poly()) {
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
    }

    #[test]
    fn distributivity(p in small_poly(), q in small_poly(), r in small_poly()) {
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
    }

    #[test]
    fn neutral_elements(p in small_poly()) {
        let ring = abcd();
        prop_assert_eq!(&p + &Polynomial::zero(&ring), p.clone());
        prop_assert_eq!(&p * &Polynomial::one(&ring), p.clone());
        prop_assert!((&p - &p).is_zero());
        prop_assert_eq!(&p + &(-&p), Polynomial::zero(&ring));
    }

    #[test]
    fn no_zero_coefficients_stored(p in small_poly(), q in small_poly()) {
        for r in [&p * &q, &p - &q, &p + &q] {
            prop_assert!(r.terms().all(|(_, c)| c != &BigInt::from(0)));
        }
    }

    #[test]
    fn substitution_is_a_ring_homomorphism(h in small_hom(), p in small_poly(), q in small_poly()) {
        let hp = h.apply(&p).unwrap();
        let hq = h.apply(&q).unwrap();
        prop_assert_eq!(h.apply(&(&p + &q)).unwrap(), &hp + &hq);
        prop_assert_eq!(h.apply(&(&p * &q)).unwrap(), &hp * &hq);
    }

    #[test]
    fn format_then_parse_round_trips(p in poly_in(abcd(), 8, 6)) {
        let text = p.to_string();
        prop_assert_eq!(parse(&text, &abcd()).unwrap(), p);
    }

    #[test]
    fn cofactor_matches_leibniz(m in square_matrix(4)) {
        prop_assert_eq!(m.determinant().unwrap(), leibniz(&m));
    }

    #[test]
    fn transpose_invariance(m in square_matrix(4)) {
        prop_assert_eq!(m.transpose().determinant().unwrap(), m.determinant().unwrap());
    }

    #[test]
    fn determinant_is_multiplicative(
        (x, y) in (2usize..=3).prop_flat_map(|n| (matrix(n, 3, 1), matrix(n, 3, 1)))
    ) {
        let lhs = mat_mul(&x, &y).determinant().unwrap();
        prop_assert_eq!(lhs, &x.determinant().unwrap() * &y.determinant().unwrap());
    }

    #[test]
    fn substitution_commutes_with_determinant(m in square_matrix(3), h in small_hom()) {
        let image_det = m.apply_hom(&h).unwrap().determinant().unwrap();
        prop_assert_eq!(image_det, h.apply(&m.determinant().unwrap()).unwrap());
    }

    #[test]
    fn multiples_of_ad_minus_bc_are_members(q in small_poly()) {
        let ctx = SegreContext::new(&[]).unwrap();
        let det = ctx.source().parse("a*d - b*c").unwrap();
        prop_assert!(ctx.in_determinantal_ideal(&(&q * &det)).unwrap());
    }

    #[test]
    fn certificates_agree_with_segre(cofactor in small_poly(), noise in small_poly()) {
        let ctx = SegreContext::new(&[]).unwrap();
        let det = ctx.source().parse("a*d - b*c").unwrap();
        let cert = MembershipCertificate::new(vec![(cofactor.clone(), det.clone())]).unwrap();
        let member = &cofactor * &det;
        prop_assert!(check_certificate(&member, &cert).unwrap());
        prop_assert!(ctx.in_determinantal_ideal(&member).unwrap());
        let other = &member + &noise;
        if check_certificate(&other, &cert).unwrap() {
            prop_assert!(ctx.in_determinantal_ideal(&other).unwrap());
        }
        // adding a non-member never yields a member
        if !ctx.in_determinantal_ideal(&noise).unwrap() {
            prop_assert!(!ctx.in_determinantal_ideal(&other).unwrap());
        }
    }
}

#[test]
fn main_identity_spot_check() {
    let point: [BigInt; 12] = [1, 2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31].map(BigInt::from);
    let (lhs, rhs) = main_identity_at(&point);
    // frozen from an independent exact evaluation
    assert_eq!(lhs, BigInt::from(12_254_340));
    assert_eq!(rhs, BigInt::from(12_254_340));
}

#[test]
fn main_identity_random_points() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand::rngs::StdRng::seed_from_u64(0x5eed);
    let symbolic = completion_kit::catalog::verify_main_identity().passed;
    for _ in 0..100 {
        let point: [BigInt; 12] = std::array::from_fn(|_| BigInt::from(rng.gen_range(-50..=50)));
        let (lhs, rhs) = main_identity_at(&point);
        assert_eq!(lhs == rhs, symbolic, "at {point:?}");
    }
}

#[test]
fn binomial_coefficients_beyond_u64() {
    let ring = RingSpec::new(["a", "b"]).unwrap();
    let p = ring.parse("(a + b)^32").unwrap();
    let sum: BigInt = p.terms().map(|(_, c)| c.clone()).sum();
    assert_eq!(sum, BigInt::from(1u64 << 32));
    let q = ring.parse("(2*a + 3*b)^32").unwrap();
    let max = q.terms().map(|(_, c)| c.clone()).max().unwrap();
    assert!(max > BigInt::from(u64::MAX));
    assert_eq!(q.evaluate(&[1.into(), 1.into()]).unwrap(), num_traits::pow(BigInt::from(5), 32));
}

//! Property tests for the algebra layer: ring axioms, derivation rules,
//! involutions, and the power laws, on randomized expressions.

use proptest::prelude::*;

use supercliff::dims::Dims;
use supercliff::ops::dirac::{dirac, twisted_dirac, Side};
use supercliff::ops::vector::super_pow;
use supercliff::scalar::{Rat64, Scalar};
use supercliff::superexpr::SuperExpr;

fn dims() -> Dims {
    Dims::hermitian(2, 1) // p = 4, 2n = 2
}

/// One atomic factor of a random expression.
#[derive(Clone, Debug)]
enum Atom {
    X(usize),
    Xg(usize),
    E(usize),
    Eg(usize),
    Int(i64),
    I,
}

fn atom_strategy() -> impl Strategy<Value = Atom> {
    prop_oneof![
        (0usize..4).prop_map(Atom::X),
        (0usize..2).prop_map(Atom::Xg),
        (0usize..4).prop_map(Atom::E),
        (0usize..2).prop_map(Atom::Eg),
        (-3i64..4).prop_map(Atom::Int),
        Just(Atom::I),
    ]
}

fn build(atoms: &[Atom]) -> SuperExpr {
    let d = dims();
    let mut acc = SuperExpr::one(d);
    for a in atoms {
        let f = match a {
            Atom::X(j) => SuperExpr::x(d, *j).unwrap(),
            Atom::Xg(j) => SuperExpr::xg(d, *j).unwrap(),
            Atom::E(j) => SuperExpr::e(d, *j).unwrap(),
            Atom::Eg(j) => SuperExpr::eg(d, *j).unwrap(),
            Atom::Int(k) => SuperExpr::scalar(d, Scalar::from_int(*k)),
            Atom::I => SuperExpr::scalar(d, Scalar::i()),
        };
        acc = acc.mul(&f);
    }
    acc
}

fn expr_strategy() -> impl Strategy<Value = SuperExpr> {
    prop::collection::vec(prop::collection::vec(atom_strategy(), 0..4), 1..4)
        .prop_map(|terms| {
            let d = dims();
            terms
                .iter()
                .fold(SuperExpr::zero(d), |acc, t| acc.add(&build(t)))
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn mul_associative(a in expr_strategy(), b in expr_strategy(), c in expr_strategy()) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }

    #[test]
    fn mul_distributive(a in expr_strategy(), b in expr_strategy(), c in expr_strategy()) {
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
    }

    #[test]
    fn bosonic_derivatives_commute(a in expr_strategy(), j in 0usize..4, k in 0usize..4) {
        let djk = a.derive_bosonic(j).unwrap().derive_bosonic(k).unwrap();
        let dkj = a.derive_bosonic(k).unwrap().derive_bosonic(j).unwrap();
        prop_assert_eq!(djk, dkj);
    }

    #[test]
    fn fermionic_derivatives_anticommute(a in expr_strategy(), j in 0usize..2, k in 0usize..2) {
        let djk = a.derive_fermionic(j).unwrap().derive_fermionic(k).unwrap();
        let dkj = a.derive_fermionic(k).unwrap().derive_fermionic(j).unwrap();
        prop_assert_eq!(djk, dkj.neg());
    }

    #[test]
    fn mixed_derivatives_commute(a in expr_strategy(), j in 0usize..4, k in 0usize..2) {
        let djk = a.derive_bosonic(j).unwrap().derive_fermionic(k).unwrap();
        let dkj = a.derive_fermionic(k).unwrap().derive_bosonic(j).unwrap();
        prop_assert_eq!(djk, dkj);
    }

    #[test]
    fn conjugations_are_involutions(a in expr_strategy()) {
        prop_assert_eq!(a.clifford_conjugate().clifford_conjugate(), a.clone());
        prop_assert_eq!(a.hermitian_conjugate().hermitian_conjugate(), a.clone());
        prop_assert_eq!(a.complex_conjugate().complex_conjugate(), a.clone());
    }

    #[test]
    fn hermitian_conjugation_reverses_orthogonal_products(
        a in expr_strategy(),
        b in expr_strategy(),
    ) {
        // (ab)† = b†a† holds on the orthogonal Clifford part (on the Weyl
        // part the bar is a linear basis involution, not an
        // anti-homomorphism). Restrict to symplectic-free, Grassmann-even
        // factors.
        let clean = |e: &SuperExpr| {
            e.terms().all(|((g, c), _)| g.degree() % 2 == 0 && c.symp_degree() == 0)
        };
        if clean(&a) && clean(&b) {
            let lhs = a.mul(&b).hermitian_conjugate();
            let rhs = b.hermitian_conjugate().mul(&a.hermitian_conjugate());
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn j_is_multiplicative(a in expr_strategy(), b in expr_strategy()) {
        let lhs = a.mul(&b).apply_j().unwrap();
        let rhs = a.apply_j().unwrap().mul(&b.apply_j().unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn j_squared_negates_vectors(_seed in 0u8..2) {
        let d = dims();
        let x = supercliff::ops::vector::supervector(d);
        let jjx = x.apply_j().unwrap().apply_j().unwrap();
        prop_assert_eq!(jjx, x.neg());
        for j in 0..4 {
            let e = SuperExpr::e(d, j).unwrap();
            prop_assert_eq!(e.apply_j().unwrap().apply_j().unwrap(), e.neg());
        }
    }

    #[test]
    fn nilpotent_part_is_nilpotent(
        terms in prop::collection::vec(
            prop::collection::vec(
                prop_oneof![
                    (0usize..4).prop_map(Atom::X),
                    (0usize..2).prop_map(Atom::Xg),
                    (-3i64..4).prop_map(Atom::Int),
                ],
                0..4,
            ),
            1..4,
        ),
    ) {
        // superfunctions (no Clifford content): the nilpotent part satisfies
        // N^{2n+1} = 0
        let d = dims();
        let a = terms
            .iter()
            .fold(SuperExpr::zero(d), |acc, t| acc.add(&build(t)));
        let n = a.nilpotent_part();
        let mut acc = SuperExpr::one(d);
        for _ in 0..(2 * d.n + 1) {
            acc = acc.mul(&n);
        }
        prop_assert!(acc.is_zero());
    }

    #[test]
    fn dirac_squares_match(a in expr_strategy()) {
        let lap = supercliff::ops::dirac::laplacian(&a).unwrap();
        let dd = dirac(&dirac(&a, Side::Left).unwrap(), Side::Left).unwrap();
        prop_assert_eq!(dd, lap.neg());
        let jj = twisted_dirac(&twisted_dirac(&a, Side::Left).unwrap(), Side::Left).unwrap();
        prop_assert_eq!(jj, lap.neg());
    }

    #[test]
    fn power_laws(c in 1i64..6, k in 0u16..2, p1 in -2i64..3, q1 in -2i64..3) {
        // a = c² (+ optional nilpotent part): a^p a^q = a^{p+q}
        let d = dims();
        let mut a = SuperExpr::scalar(d, Scalar::from_int(c * c));
        if k == 1 {
            let xg1 = SuperExpr::xg(d, 0).unwrap();
            let xg2 = SuperExpr::xg(d, 1).unwrap();
            a = a.add(&xg1.mul(&xg2));
        }
        let half = Rat64::new(1, 2);
        let p = Rat64::from_integer(p1) + half;
        let q = Rat64::from_integer(q1) - half;
        let ap = super_pow(&a, p).unwrap();
        let aq = super_pow(&a, q).unwrap();
        let apq = super_pow(&a, p + q).unwrap();
        prop_assert_eq!(ap.mul(&aq), apq);
        // (a^p)^q = a^{pq} for integer outer exponent
        let outer = Rat64::from_integer(2);
        let lhs = super_pow(&ap, outer).unwrap();
        let rhs = super_pow(&a, p * outer).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn product_power_law(c1 in 1i64..4, c2 in 1i64..4) {
        // (ab)^p = a^p b^p on commuting even arguments with positive bodies
        let d = dims();
        let xg1 = SuperExpr::xg(d, 0).unwrap();
        let xg2 = SuperExpr::xg(d, 1).unwrap();
        let pair = xg1.mul(&xg2);
        let a = SuperExpr::scalar(d, Scalar::from_int(c1 * c1)).add(&pair);
        let b = SuperExpr::scalar(d, Scalar::from_int(c2 * c2)).sub(&pair);
        let p = Rat64::new(1, 2);
        let lhs = super_pow(&a.mul(&b), p).unwrap();
        let rhs = super_pow(&a, p).unwrap().mul(&super_pow(&b, p).unwrap());
        prop_assert_eq!(lhs, rhs);
    }
}

use std::cmp::Ordering;
use std::sync::Arc;

use idealkit::encoding::{code_monomials, code_size, decode_ideal, encode_ideal, IdealCode};
use idealkit::groebner::{groebner_basis, ideal_equal, ideal_member, normal_form, s_polynomial};
use idealkit::predicates::{complexity, dimension, height_poly, radical_equals};
use idealkit::transfer::search_witness_points;
use idealkit::{Field, IdealPresentation, Monomial, MonomialOrder, Polynomial, Ring};
use proptest::prelude::*;

fn ring(field: Field, nvars: usize, order: MonomialOrder) -> Arc<Ring> {
    Ring::with_prefix(field, "x", nvars, order)
}

type RawPoly = Vec<(i64, Vec<u32>)>;

fn raw_poly(nvars: usize, max_exp: u32, max_terms: usize) -> impl Strategy<Value = RawPoly> {
    prop::collection::vec(
        (-3i64..=3, prop::collection::vec(0..=max_exp, nvars)),
        0..=max_terms,
    )
}

fn build(ring: &Arc<Ring>, raw: &RawPoly) -> Polynomial {
    let f = ring.field();
    Polynomial::from_terms(
        ring,
        raw.iter()
            .map(|(c, e)| (f.from_i64(*c), Monomial::new(e.clone()))),
    )
    .unwrap()
}

fn orders() -> impl Strategy<Value = MonomialOrder> {
    prop_oneof![Just(MonomialOrder::lex()), Just(MonomialOrder::grevlex())]
}

fn fields() -> impl Strategy<Value = Field> {
    prop_oneof![
        Just(Field::Rational),
        Just(Field::Prime(7)),
        Just(Field::Prime(32003))
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(field in fields(), order in orders(),
                   a in raw_poly(3, 2, 4), b in raw_poly(3, 2, 4), c in raw_poly(3, 2, 4)) {
        let r = ring(field, 3, order);
        let (a, b, c) = (build(&r, &a), build(&r, &b), build(&r, &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &Polynomial::one(&r), a.clone());
    }

    #[test]
    fn orders_are_admissible(order in orders(),
                             a in prop::collection::vec(0u32..4, 3),
                             b in prop::collection::vec(0u32..4, 3),
                             c in prop::collection::vec(0u32..4, 3)) {
        let (a, b, c) = (Monomial::new(a), Monomial::new(b), Monomial::new(c));
        let ab = order.compare(&a, &b).unwrap();
        prop_assert_eq!(ab.reverse(), order.compare(&b, &a).unwrap());
        prop_assert_eq!(ab == Ordering::Equal, a == b);
        prop_assert_ne!(order.compare(&Monomial::one(3), &a).unwrap(), Ordering::Greater);
        prop_assert_eq!(order.compare(&a.mul(&c), &b.mul(&c)).unwrap(), ab);
        let bc = order.compare(&b, &c).unwrap();
        if ab == bc {
            prop_assert_eq!(order.compare(&a, &c).unwrap(), ab);
        }
    }

    #[test]
    fn reduction_mod_p_is_a_homomorphism(a in raw_poly(2, 3, 4), b in raw_poly(2, 3, 4),
                                         p in prop_oneof![Just(2u64), Just(5), Just(101)]) {
        let r = ring(Field::Rational, 2, MonomialOrder::grevlex());
        let (a, b) = (build(&r, &a), build(&r, &b));
        let red = |f: &Polynomial| f.reduce_coeffs_mod_p(p).unwrap();
        prop_assert_eq!(red(&(&a * &b)), &red(&a) * &red(&b));
        prop_assert_eq!(red(&(&a + &b)), &red(&a) + &red(&b));
        // degrees never grow
        prop_assert!(red(&a).degree() <= a.degree());
    }

    #[test]
    fn substitution_is_a_homomorphism(a in raw_poly(2, 2, 3), b in raw_poly(2, 2, 3),
                                      imgs in prop::collection::vec(raw_poly(2, 2, 3), 2)) {
        let r = ring(Field::Rational, 2, MonomialOrder::grevlex());
        let (a, b) = (build(&r, &a), build(&r, &b));
        let imgs: Vec<_> = imgs.iter().map(|i| build(&r, i)).collect();
        let s = |f: &Polynomial| f.substitute(&r, &imgs).unwrap();
        prop_assert_eq!(s(&(&a * &b)), &s(&a) * &s(&b));
        prop_assert_eq!(s(&(&a + &b)), &s(&a) + &s(&b));
    }

    #[test]
    fn groebner_basis_is_sound_and_unique(field in fields(), order in orders(),
                                          gens in prop::collection::vec(raw_poly(3, 2, 3), 1..4)) {
        let r = ring(field, 3, order);
        let gens: Vec<_> = gens.iter().map(|g| build(&r, g)).collect();
        let ideal = IdealPresentation::new(&r, gens.clone()).unwrap();
        let gb = groebner_basis(&ideal).unwrap();
        for g in ideal.generators() {
            prop_assert!(normal_form(g, gb.basis()).unwrap().is_zero());
        }
        for (i, f) in gb.basis().iter().enumerate() {
            prop_assert!(f.leading_coeff().is_none_or(|c| c.is_one()));
            for g in &gb.basis()[i + 1..] {
                let s = s_polynomial(f, g).unwrap();
                prop_assert!(normal_form(&s, gb.basis()).unwrap().is_zero());
            }
        }
        let mut shuffled = gens;
        shuffled.reverse();
        let again = groebner_basis(&IdealPresentation::new(&r, shuffled).unwrap()).unwrap();
        prop_assert_eq!(gb.basis(), again.basis());
    }

    #[test]
    fn height_plus_dimension_is_nvars(gens in prop::collection::vec(raw_poly(3, 2, 2), 1..4)) {
        let r = ring(Field::Rational, 3, MonomialOrder::grevlex());
        let gens: Vec<_> = gens.iter().map(|g| build(&r, g)).collect();
        let ideal = IdealPresentation::new(&r, gens).unwrap();
        if let Ok(dim) = dimension(&ideal) {
            let h = height_poly(&ideal).unwrap();
            prop_assert_eq!(h.height + dim, 3);
            prop_assert_eq!(h.dimension, dim);
        }
    }

    #[test]
    fn code_size_follows_pascal(n in 1usize..5, extra in 1usize..6) {
        let d = n + extra;
        // C(n+d, n) = C(n+d-1, n-1) + C(n+d-1, n), both summands as monomial counts
        let lower = code_monomials(n - 1, d, &MonomialOrder::grevlex()).len();
        let top = code_monomials(n, d - 1, &MonomialOrder::grevlex()).len();
        prop_assert_eq!(code_size(n, d).unwrap(), lower + top);
        prop_assert_eq!(code_monomials(n, d, &MonomialOrder::lex()).len(), code_size(n, d).unwrap());
    }

    #[test]
    fn encoding_round_trips(field in fields(), order in orders(),
                            gens in prop::collection::vec(raw_poly(2, 2, 3), 1..4)) {
        let r = ring(field, 2, order);
        let gens: Vec<_> = gens.iter().map(|g| build(&r, g)).collect();
        let ideal = IdealPresentation::new(&r, gens).unwrap();
        let d = complexity(&ideal).complexity.max(2);
        let code = encode_ideal(&ideal, d).unwrap();
        prop_assert!(ideal_equal(&decode_ideal(&code).unwrap(), &ideal).unwrap());
        let text = code.to_json();
        let back = IdealCode::from_json(&text).unwrap();
        prop_assert_eq!(&back, &code);
        prop_assert_eq!(back.to_json(), text);
    }

    #[test]
    fn radical_outcome_is_monotone_in_cap(k in 1u32..5, j in 1u32..5, cap in 1u32..8) {
        let r = ring(Field::Rational, 2, MonomialOrder::grevlex());
        let i = IdealPresentation::parse(&r, &format!("(x1^{k}, x2^{j})")).unwrap();
        let p = IdealPresentation::parse(&r, "(x1, x2)").unwrap();
        let lo = radical_equals(&i, &p, cap).unwrap().is_equal();
        let hi = radical_equals(&i, &p, cap + 1).unwrap().is_equal();
        prop_assert!(!lo || hi);
        prop_assert_eq!(lo, cap >= k.max(j));
    }

    #[test]
    fn found_points_are_zeros(gens in prop::collection::vec(raw_poly(2, 2, 3), 1..3),
                              p in prop_oneof![Just(2u64), Just(3), Just(7)]) {
        let r = ring(Field::prime(p).unwrap(), 2, MonomialOrder::grevlex());
        let gens: Vec<_> = gens.iter().map(|g| build(&r, g)).collect();
        let ideal = IdealPresentation::new(&r, gens).unwrap();
        let pts = search_witness_points(&ideal, p, 1_000_000).unwrap();
        let mut count = 0;
        for a in 0..p as i64 {
            for b in 0..p as i64 {
                let pt = [r.field().from_i64(a), r.field().from_i64(b)];
                let zero = ideal.generators().iter().all(|g| g.evaluate(&pt).unwrap().is_zero());
                if zero {
                    prop_assert_eq!(&pts[count], &pt.to_vec());
                    count += 1;
                }
            }
        }
        prop_assert_eq!(count, pts.len());
    }

    #[test]
    fn membership_of_combinations(gens in prop::collection::vec(raw_poly(2, 2, 3), 1..3),
                                  cofactors in prop::collection::vec(raw_poly(2, 2, 3), 2)) {
        let r = ring(Field::Rational, 2, MonomialOrder::lex());
        let gens: Vec<_> = gens.iter().map(|g| build(&r, g)).collect();
        let ideal = IdealPresentation::new(&r, gens.clone()).unwrap();
        let mut f = Polynomial::zero(&r);
        for (g, h) in gens.iter().zip(&cofactors) {
            f = &f + &(g * &build(&r, h));
        }
        prop_assert!(ideal_member(&f, &ideal).unwrap());
    }
}

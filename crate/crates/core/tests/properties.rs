use std::sync::Arc;

use ncfactor::commalg::{is_groebner, normal_form, reduced_groebner_basis, Monomial};
use ncfactor::{Alphabet, CPoly, CRing, Field, NcPoly, Word};
use proptest::prelude::*;

const F7: Field = Field::Prime(7);

fn xyz() -> Arc<Alphabet> {
    Arc::new(Alphabet::new(["x", "y", "z"]).unwrap())
}

prop_compose! {
    fn ncpoly(max_len: usize)(terms in prop::collection::vec(
        (prop::collection::vec(0u8..3, 0..=max_len), -10i64..10), 0..5,
    )) -> NcPoly {
        let a = xyz();
        let zero = NcPoly::zero_over(a, F7);
        terms.into_iter().fold(zero.clone(), |acc, (w, c)| {
            &acc + &zero.word_like(Word(w)).scale_const(&F7.from_i64(c))
        })
    }
}

prop_compose! {
    fn cpoly()(terms in prop::collection::vec(
        (prop::collection::vec(0u32..3, 2), 1i64..7), 1..4,
    )) -> CPoly {
        let ring = CRing::new(F7, ["a", "b"]);
        terms.into_iter().fold(ring.zero(), |acc, (e, c)| &acc + &ring.term(Monomial(e), F7.from_i64(c)))
    }
}

proptest! {
    #[test]
    fn ring_laws(f in ncpoly(3), g in ncpoly(3), h in ncpoly(3)) {
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        prop_assert_eq!(&(&f + &g) * &h, &(&f * &h) + &(&g * &h));
        prop_assert_eq!(&f + &g, &g + &f);
        prop_assert_eq!(&f * &f.one_like(), f.clone());
        prop_assert!((&f - &f).is_zero());
    }

    #[test]
    fn no_zero_divisors_and_degree_adds(f in ncpoly(3), g in ncpoly(3)) {
        prop_assume!(!f.is_zero() && !g.is_zero());
        let p = &f * &g;
        prop_assert!(!p.is_zero());
        prop_assert_eq!(p.degree().unwrap(), f.degree().unwrap() + g.degree().unwrap());
    }

    #[test]
    fn commutative_image_is_multiplicative(f in ncpoly(3), g in ncpoly(3)) {
        let lhs = (&f * &g).commutative_image().unwrap();
        let rhs = &f.commutative_image().unwrap() * &g.commutative_image().unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn homogeneous_parts_sum_to_polynomial(f in ncpoly(4)) {
        prop_assume!(!f.is_zero());
        let n = f.degree().unwrap();
        let sum = (0..=n).fold(f.zero_like(), |acc, d| &acc + &f.homogeneous_part(d));
        prop_assert_eq!(sum, f);
    }

    #[test]
    fn reduced_basis_properties(gens in prop::collection::vec(cpoly(), 1..4)) {
        let gb = reduced_groebner_basis(&gens).unwrap();
        prop_assert!(is_groebner(&gb).unwrap());
        for g in &gens {
            prop_assert!(normal_form(g, &gb).unwrap().is_zero());
        }
        for b in &gb {
            prop_assert!(b.leading_coeff().is_some_and(|c| F7.is_one(c)));
        }
        // canonical: independent of generator order
        let mut rev = gens.clone();
        rev.reverse();
        prop_assert_eq!(reduced_groebner_basis(&rev).unwrap(), gb);
    }
}

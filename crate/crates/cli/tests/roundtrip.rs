use std::sync::Arc;

use ncfactor::{Alphabet, Field, NcPoly, Word};
use ncfactor_cli::parse_expression;
use proptest::prelude::*;

fn alphabet() -> Arc<Alphabet> {
    Arc::new(Alphabet::new(["x", "y", "zz"]).unwrap())
}

fn build(field: Field, terms: Vec<(Vec<u8>, i64)>) -> NcPoly {
    let zero = NcPoly::zero_over(alphabet(), field);
    terms.into_iter().fold(zero.clone(), |acc, (w, c)| {
        &acc + &zero.word_like(Word(w)).scale_const(&field.from_i64(c))
    })
}

fn terms() -> impl Strategy<Value = Vec<(Vec<u8>, i64)>> {
    prop::collection::vec((prop::collection::vec(0u8..3, 0..5), -20i64..20), 0..6)
}

proptest! {
    #[test]
    fn printed_polynomials_parse_back(t in terms(), p in prop::sample::select(vec![2u32, 3, 5, 7, 101])) {
        for field in [Field::Prime(p), Field::Rational] {
            let f = build(field, t.clone());
            let text = f.to_string();
            prop_assert_eq!(parse_expression(&text, &alphabet(), field).unwrap(), f);
        }
    }
}

use fibra_cli::{parse_poly, ParseError};
use fibra_core::BiPoly;
use proptest::prelude::*;

#[test]
fn parses_common_forms() {
    let p = parse_poly("Y^3 + Y - T").unwrap();
    assert_eq!(p, BiPoly::from_terms(&[(1, 0, 3), (1, 0, 1), (-1, 1, 0)]));
    let q = parse_poly("(Y - T)*(Y + T) + 2*T^2").unwrap();
    assert_eq!(q, BiPoly::from_terms(&[(1, 0, 2), (1, 2, 0)]));
    assert_eq!(parse_poly("-(Y^2)").unwrap(), BiPoly::from_terms(&[(-1, 0, 2)]));
    assert_eq!(parse_poly("(Y+1)^2").unwrap(), BiPoly::from_terms(&[(1, 0, 2), (2, 0, 1), (1, 0, 0)]));
}

#[test]
fn error_offsets() {
    match parse_poly("Y^2 - X") {
        Err(ParseError::UnknownVariable { name, offset }) => {
            assert_eq!(name, "X");
            assert_eq!(offset, 6);
        }
        other => panic!("{other:?}"),
    }
    assert_eq!(parse_poly("2T").unwrap_err().offset(), 1);
    assert!(matches!(parse_poly("Y^"), Err(ParseError::SyntaxError { .. })));
    assert!(matches!(parse_poly("(Y"), Err(ParseError::SyntaxError { .. })));
    assert!(matches!(parse_poly(""), Err(ParseError::SyntaxError { .. })));
}

fn arb_bipoly() -> impl Strategy<Value = BiPoly> {
    prop::collection::vec((-50i64..50, 0usize..5, 0usize..5), 0..8).prop_map(|t| BiPoly::from_terms(&t))
}

proptest! {
    #[test]
    fn display_round_trips(p in arb_bipoly()) {
        let text = p.to_string();
        prop_assert_eq!(parse_poly(&text).unwrap(), p);
    }

    #[test]
    fn sum_of_parsed_is_parsed_sum(a in arb_bipoly(), b in arb_bipoly()) {
        let joined = format!("({a}) + ({b})");
        let expect = a.add(&b);
        prop_assert_eq!(parse_poly(&joined).unwrap(), expect);
    }
}

use proptest::prelude::*;
use zcs_core::{from_json, parse_v1, render_v1, to_json, ZcsFamily};

fn family() -> impl Strategy<Value = ZcsFamily> {
    (2u32..=36, 1usize..=4, 1usize..=3, 1usize..=8).prop_flat_map(|(q, m, n, l)| {
        (
            prop::collection::vec(prop::collection::vec(prop::collection::vec(0..q, l), n), m),
            prop::option::of(1..=l),
        )
            .prop_map(move |(sets, z)| ZcsFamily::from_exponents(q, sets, z).unwrap())
    })
}

proptest! {
    #[test]
    fn text_round_trip(fam in family()) {
        let text = render_v1(&fam).unwrap();
        prop_assert!(text.ends_with('\n'));
        prop_assert_eq!(parse_v1(&text).unwrap(), fam);
    }

    #[test]
    fn json_round_trip(fam in family()) {
        let back = from_json(&to_json(&fam)).unwrap();
        prop_assert_eq!(render_v1(&back).unwrap(), render_v1(&fam).unwrap());
        prop_assert_eq!(back, fam);
    }
}

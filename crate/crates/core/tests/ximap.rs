use levixi::exactpoly::parse_poly;
use levixi::ximap::verify_surjectivity;
use levixi::{build_root_system, xi, Error, Family, ParabolicSubset, XiContext};

#[test]
fn surjective_onto_small_partial_flags() {
    for (family, rank) in [
        (Family::A, 2),
        (Family::A, 3),
        (Family::B, 2),
        (Family::B, 3),
        (Family::C, 2),
        (Family::C, 3),
        (Family::D, 3),
    ] {
        let rs = build_root_system(family, rank).unwrap();
        let mut parabolics = vec![ParabolicSubset::borel(rank)];
        parabolics.extend((1..=rank).map(|r| ParabolicSubset::maximal(rank, r).unwrap()));
        for p in parabolics {
            let report = verify_surjectivity(&rs, &p).unwrap();
            assert!(report.passed(), "{rs} {p}\n{report}");
        }
    }
}

#[test]
fn xi_through_the_public_api() {
    let c2 = build_root_system(Family::C, 2).unwrap();
    let p1 = ParabolicSubset::maximal(2, 1).unwrap();
    let ctx = XiContext::new(&c2, &p1).unwrap();
    let chi = ctx
        .character(parse_poly("t1 - t1^-1", 't', Some(2)).unwrap())
        .unwrap();
    assert_eq!(xi(&ctx, &chi).unwrap().render(), "2·[s1]");

    let borel = XiContext::new(&c2, &ParabolicSubset::borel(2)).unwrap();
    let chi = borel
        .character(parse_poly("t1 + t1^-1", 't', Some(2)).unwrap())
        .unwrap();
    assert!(matches!(
        xi(&borel, &chi),
        Err(Error::NotPolynomialCharacter { .. })
    ));
}

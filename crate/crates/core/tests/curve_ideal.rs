use coxreg::arith::Field;
use coxreg::groebner::{
    ideal_slice_dimension, intersect, quotient_slice_dimension, saturate, substitution_map_rank, BinaryForm, Ideal,
};
use coxreg::ring::{CoxRing, MultiDegree, ProductSpace};

const CURVE: [&str; 6] = [
    "x1^2 - x0*x2",
    "y1^2 - y0*y2",
    "x2*y0*y1 - x1*y2^2",
    "x1*y0*y1 - x0*y2^2",
    "x2*y0^2 - x1*y1*y2",
    "x1*y0^2 - x0*y1*y2",
];

fn ring(field: Field) -> CoxRing {
    CoxRing::new(ProductSpace::new([2, 2]).unwrap(), field)
}

fn parametrization() -> Vec<Vec<BinaryForm>> {
    vec![
        vec![
            BinaryForm::monomial(6, 0),
            BinaryForm::monomial(6, 3),
            BinaryForm::monomial(6, 6),
        ],
        vec![
            BinaryForm::monomial(2, 0),
            BinaryForm::monomial(2, 1),
            BinaryForm::monomial(2, 2),
        ],
    ]
}

#[test]
fn generator_degrees() {
    let r = ring(Field::default());
    let i = Ideal::parse(&r, &CURVE).unwrap();
    let degs: Vec<MultiDegree> = i.generator_degrees().to_vec();
    assert_eq!(degs[0], MultiDegree::from([2, 0]));
    assert_eq!(degs[1], MultiDegree::from([0, 2]));
    for d in &degs[2..4] {
        assert_eq!(*d, MultiDegree::from([1, 2]));
    }
}

#[test]
fn last_five_saturate_to_the_full_ideal() {
    for field in [Field::default(), Field::Rational] {
        let r = ring(field);
        let full = Ideal::parse(&r, &CURVE).unwrap();
        let five = Ideal::parse(&r, &CURVE[1..]).unwrap();
        assert!(!five.contains(&full.generators()[0]));
        let sat = saturate(&five, &Ideal::irrelevant(&r));
        assert_eq!(sat, full, "over {field}");
        assert!(sat.gb().certify());
    }
}

#[test]
fn five_generators_are_an_intersection_with_a_primary_component() {
    let r = ring(Field::default());
    let full = Ideal::parse(&r, &CURVE).unwrap();
    let five = Ideal::parse(&r, &CURVE[1..]).unwrap();
    let primary = Ideal::parse(&r, &["y2^2", "y1*y2", "y1^2 - y0*y2", "y0*y1", "y0^2"]).unwrap();
    assert_eq!(intersect(&full, &primary), five);
}

#[test]
fn curve_ideal_is_saturated_and_prime_like() {
    let r = ring(Field::default());
    let full = Ideal::parse(&r, &CURVE).unwrap();
    assert_eq!(saturate(&full, &Ideal::irrelevant(&r)), full);
    assert_eq!(coxreg::groebner::subscheme_dimension(&full), Some(1));
}

#[test]
fn slice_dimension_matches_the_parametrization() {
    // The quotient slice (S/I)_u injects into H^0(P^1, O(6 u_1 + 2 u_2)); for
    // the curve ideal its dimension is the rank of the substitution map.
    let r = ring(Field::default());
    let full = Ideal::parse(&r, &CURVE).unwrap();
    let param = parametrization();
    for a in 0..4 {
        for b in 0..4 {
            let u = MultiDegree::from([a, b]);
            let rank = substitution_map_rank(r.space(), r.field(), &param, &u).unwrap() as u64;
            assert_eq!(quotient_slice_dimension(&full, &u), rank, "u = {u}");
            assert_eq!(ideal_slice_dimension(&full, &u) + rank, r.space().slice_dimension(&u));
        }
    }
    let u = MultiDegree::from([6, 2]);
    let rank = substitution_map_rank(r.space(), r.field(), &param, &u).unwrap() as u64;
    assert_eq!(rank, 41);
    assert_eq!(quotient_slice_dimension(&full, &u), 41);
}

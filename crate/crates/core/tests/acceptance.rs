//! The acceptance suite. It runs without the libtest harness so that every
//! criterion prints a single PASS/FAIL line with its evidence, and exits
//! nonzero if any criterion fails. Expected values are recomputed here
//! from closed forms or direct counting, never copied from library output.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use coxreg::arith::Field;
use coxreg::arith::QuadExt;
use coxreg::cohomology::{euler_characteristic, koszul_chop, sheaf_cohomology_dim, Stabilization};
use coxreg::groebner::{ideal_slice_dimension, intersect, quotient_slice_dimension, saturate, Ideal};
use coxreg::lab::{
    adjoint_hypothesis, check_theorem_main, diagonal_power_is_principal_at, generic_forms, ideal_power_cohomology,
    is_l_regular, multiplication_map_check, rational_point, regularity_region_predicted, scheme_of_forms,
    shifted_cone_subset, shifted_cones_intersection_apex, wahl_vanishing_check, ConeQD, DivisorOnProduct,
    MultiplicationMode, RegionPath, DIAGONAL_VARIABLE_LIMIT,
};
use coxreg::resolution::{resolve, GradedModule, Presented};
use coxreg::ring::{CoxRing, MultiDegree, Polynomial, ProductSpace};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

const GF: Field = Field::Prime(32003);

const CURVE: [&str; 6] = [
    "x1^2 - x0*x2",
    "y1^2 - y0*y2",
    "x2*y0*y1 - x1*y2^2",
    "x1*y0*y1 - x0*y2^2",
    "x2*y0^2 - x1*y1*y2",
    "x1*y0^2 - x0*y1*y2",
];

fn params() -> Stabilization {
    Stabilization::default()
}

fn space(factors: &[u32]) -> ProductSpace {
    ProductSpace::new(factors.to_vec()).unwrap()
}

fn deg(c: &[i64]) -> MultiDegree {
    MultiDegree(c.to_vec())
}

/// Outcome of one criterion: whether it passed, with its evidence.
struct Verdict {
    passed: bool,
    text: String,
}

fn report(title: &str, passed: bool, detail: &str, started: Instant, budget: Duration) -> Verdict {
    let took = started.elapsed();
    let passed = passed && took <= budget;
    Verdict {
        passed,
        text: format!("{title}: {detail} [{took:.2?}, budget {budget:?}]"),
    }
}

// ---- closed forms used as oracles ----

fn binom(n: i64, k: i64) -> u64 {
    if k < 0 || n < k {
        return 0;
    }
    (0..k).fold(1u128, |acc, j| acc * (n - j) as u128 / (j + 1) as u128) as u64
}

/// `h^i(P^n, O(d))` by Bott's formula.
fn bott(n: i64, d: i64, i: usize) -> u64 {
    if i == 0 {
        binom(n + d, n)
    } else if i as i64 == n {
        binom(-d - 1, n)
    } else {
        0
    }
}

/// `h^i` of a line bundle on a product by the Künneth formula, summing over
/// the ways of distributing `i` among the factors.
fn kunneth(factors: &[u32], a: &MultiDegree, i: usize) -> u64 {
    fn go(factors: &[u32], a: &[i64], i: usize) -> u64 {
        match factors.split_first() {
            None => u64::from(i == 0),
            Some((&n, rest)) => [0, n as usize]
                .into_iter()
                .filter(|&j| j <= i && (j == 0 || n > 0))
                .map(|j| bott(n as i64, a[0], j) * go(rest, &a[1..], i - j))
                .sum(),
        }
    }
    go(factors, a.components(), i)
}

fn curve_ring(field: Field) -> (CoxRing, Ideal) {
    let ring = CoxRing::new(space(&[2, 2]), field);
    let ideal = Ideal::parse(&ring, &CURVE).unwrap();
    (ring, ideal)
}

// ---- criteria ----

fn saturation_identity(field: Field) -> (bool, String) {
    let (ring, six) = curve_ring(field);
    let five = Ideal::new(&ring, six.generators()[1..].to_vec()).unwrap();
    let sat = saturate(&five, &Ideal::irrelevant(&ring));
    let both_ways = sat.contains_ideal(&six) && six.contains_ideal(&sat);
    let strict = !five.contains_ideal(&six);
    (
        both_ways && strict,
        format!(
            "sat contains (f0..f5): {}, (f0..f5) contains sat: {}, f0 outside (f1..f5): {strict}",
            sat.contains_ideal(&six),
            six.contains_ideal(&sat)
        ),
    )
}

fn criterion_01_saturation_identity() -> Verdict {
    let t = Instant::now();
    let (ok, detail) = saturation_identity(GF);
    report(
        "saturation of the last five equations",
        ok,
        &detail,
        t,
        Duration::from_secs(10),
    )
}

fn intersection_identity(field: Field) -> (bool, String) {
    let (ring, six) = curve_ring(field);
    let five = Ideal::new(&ring, six.generators()[1..].to_vec()).unwrap();
    let y = Ideal::parse(&ring, &["y2^2", "y1*y2", "y1^2 - y0*y2", "y0*y1", "y0^2"]).unwrap();
    let cap = intersect(&six, &y);
    let ok = cap.contains_ideal(&five) && five.contains_ideal(&cap);
    (
        ok,
        format!(
            "I_Y ∩ J has {} Gröbner elements, equal to (f1..f5): {ok}",
            cap.gb().polys.len()
        ),
    )
}

fn criterion_02_intersection_identity() -> Verdict {
    let t = Instant::now();
    let (ok, detail) = intersection_identity(GF);
    report(
        "intersection with the y-primary component",
        ok,
        &detail,
        t,
        Duration::from_secs(30),
    )
}

fn criterion_03_regularity_triple() -> Verdict {
    let t = Instant::now();
    let (ring, six) = curve_ring(GF);
    let x = ring.space();
    let k = x.canonical();
    let degs = six.generator_degrees().to_vec();
    let six_46 = regularity_region_predicted(x, &degs, 1, &(&deg(&[4, 6]) - &k), RegionPath::Remark).unwrap();
    let five_36 = regularity_region_predicted(x, &degs[1..], 1, &(&deg(&[3, 6]) - &k), RegionPath::Remark).unwrap();
    let direct = is_l_regular(&GradedModule::Ideal(six.clone()), &deg(&[1, 5]), params()).unwrap();
    // the regularity index (1,5) asks for h^i(I_Y((1,5) - u)) = 0 for |u| = i
    // and i = 1..=4, which is 2 + 3 + 4 + 5 cells
    let mut cells = 0;
    for i in 1..=4usize {
        for a in 0..=i as i64 {
            let u = deg(&[1 - a, 5 - (i as i64 - a)]);
            cells += usize::from(direct.table.dim(i, &u) == Some(0));
        }
    }
    let expected_cells = 14;
    let ok = six_46.holds && five_36.holds && direct.regular && cells == expected_cells;
    let detail = format!(
        "predicted (4,6) with six: {}, predicted (3,6) with five: {}, direct (1,5): {} with {cells}/{expected_cells} zero cells",
        six_46.holds, five_36.holds, direct.regular
    );
    report(
        "regularity of the (6,2) rational curve",
        ok,
        &detail,
        t,
        Duration::from_secs(600),
    )
}

fn criterion_04_kunneth_nonvanishing() -> Verdict {
    let t = Instant::now();
    let x = space(&[2, 2]);
    let kn = &x.canonical() + &deg(&[0, 3]);
    let oracle: Vec<u64> = (0..=4).map(|i| kunneth(&[2, 2], &kn, i)).collect();
    let ring = CoxRing::new(x.clone(), GF);
    let free = GradedModule::free(&ring, -&kn);
    let engine: Vec<u64> = (0..=4)
        .map(|i| sheaf_cohomology_dim(&free, i, &MultiDegree::zero(2), params()).unwrap())
        .collect();
    let ok = oracle == vec![0, 0, 1, 0, 0] && engine == oracle;
    report(
        "Künneth nonvanishing of K + (0,3) on P2 x P2",
        ok,
        &format!("closed form {oracle:?}, engine {engine:?}"),
        t,
        Duration::from_secs(120),
    )
}

fn criterion_05_sharpness() -> Verdict {
    let t = Instant::now();
    let x = space(&[1, 2]);
    let d = deg(&[1, 1]);
    let n = deg(&[0, 3]);
    let k = x.canonical();
    // h^{i+e-1}(K + N) with e = 1 is h^1 of O(-2, 0): one class from the P1 factor
    let kn = &k + &n;
    assert_eq!(kunneth(&[1, 2], &kn, 1), 1);
    let twist = &kn + &d;
    let chop = koszul_chop(&x, std::slice::from_ref(&d), &twist).unwrap();
    let ring = CoxRing::new(x.clone(), GF);
    let forms = generic_forms(&ring, std::slice::from_ref(&d), 5);
    let y = scheme_of_forms(&ring, &forms, 1).unwrap();
    let ideal = GradedModule::Ideal(y);
    let mut agree = chop.valid;
    let mut cells = Vec::new();
    for i in 0..=x.dim() {
        let engine = sheaf_cohomology_dim(&ideal, i, &twist, params()).unwrap();
        let closed = chop.dims[i];
        agree &= closed.map_or(i == 0, |c| c == engine);
        cells.push(format!("h^{i}: chop {closed:?} engine {engine}"));
    }
    let nonzero = chop.dims[1] == Some(1);
    report(
        "Koszul chop against the engine on P1 x P2",
        agree && nonzero,
        &cells.join(", "),
        t,
        Duration::from_secs(300),
    )
}

struct Case {
    name: &'static str,
    factors: &'static [u32],
    forms: Forms,
    e: usize,
    m: u32,
    l: &'static [i64],
}

enum Forms {
    Explicit(&'static [&'static str]),
    Generic(&'static [&'static [i64]]),
}

fn divisors(ring: &CoxRing, forms: &Forms) -> Vec<DivisorOnProduct> {
    let polys: Vec<Polynomial> = match forms {
        Forms::Explicit(f) => f.iter().map(|s| ring.parse(s).unwrap()).collect(),
        Forms::Generic(d) => generic_forms(ring, &d.iter().map(|c| deg(c)).collect::<Vec<_>>(), 7),
    };
    polys
        .into_iter()
        .map(|f| DivisorOnProduct::from_form(ring, f).unwrap())
        .collect()
}

const PASSING: [Case; 6] = [
    Case {
        name: "point in P2",
        factors: &[2],
        forms: Forms::Explicit(&["x1", "x2"]),
        e: 2,
        m: 0,
        l: &[3],
    },
    Case {
        name: "point in P2, m = 1",
        factors: &[2],
        forms: Forms::Explicit(&["x1", "x2"]),
        e: 2,
        m: 1,
        l: &[4],
    },
    Case {
        name: "two points in P1 x P1",
        factors: &[1, 1],
        forms: Forms::Generic(&[&[1, 1], &[1, 1]]),
        e: 2,
        m: 0,
        l: &[3, 3],
    },
    Case {
        name: "divisor in P1 x P2",
        factors: &[1, 2],
        forms: Forms::Generic(&[&[1, 1]]),
        e: 1,
        m: 0,
        l: &[2, 2],
    },
    Case {
        name: "curve in P1 x P2",
        factors: &[1, 2],
        forms: Forms::Generic(&[&[1, 1], &[1, 1]]),
        e: 2,
        m: 0,
        l: &[3, 3],
    },
    Case {
        name: "(6,2) curve",
        factors: &[2, 2],
        forms: Forms::Explicit(&CURVE),
        e: 3,
        m: 0,
        l: &[7, 9],
    },
];

// each lowers one component of a passing bound by one step
const FAILING: [Case; 4] = [
    Case {
        name: "point in P2, L = (2)",
        factors: &[2],
        forms: Forms::Explicit(&["x1", "x2"]),
        e: 2,
        m: 0,
        l: &[2],
    },
    Case {
        name: "divisor in P1 x P2, L = (1,4)",
        factors: &[1, 2],
        forms: Forms::Generic(&[&[1, 1]]),
        e: 1,
        m: 0,
        l: &[1, 4],
    },
    Case {
        name: "divisor in P2 x P2, L = (1,4)",
        factors: &[2, 2],
        forms: Forms::Generic(&[&[1, 1]]),
        e: 1,
        m: 0,
        l: &[1, 4],
    },
    Case {
        name: "divisor in P1 x P1, L = (1,3)",
        factors: &[1, 1],
        forms: Forms::Generic(&[&[1, 1]]),
        e: 1,
        m: 0,
        l: &[1, 3],
    },
];

fn theorem_cases(field: Field) -> (usize, usize, Vec<String>) {
    let (mut good, mut sharp) = (0, 0);
    let mut notes = Vec::new();
    for c in PASSING.iter() {
        let ring = CoxRing::new(space(c.factors), field);
        let check = check_theorem_main(&ring, &divisors(&ring, &c.forms), c.e, c.m, &deg(c.l), params()).unwrap();
        let table = check.table.as_ref().expect("a holding hypothesis computes the table");
        let all_zero = table.iter().all(|(i, _, e)| i == 0 || e.dim == 0);
        if check.report.holds && all_zero && check.verified {
            good += 1;
        } else {
            notes.push(format!(
                "{}: hypothesis {}, zero {all_zero}",
                c.name, check.report.holds
            ));
        }
    }
    for c in FAILING.iter() {
        let ring = CoxRing::new(space(c.factors), field);
        let check = check_theorem_main(&ring, &divisors(&ring, &c.forms), c.e, c.m, &deg(c.l), params()).unwrap();
        let twist = &ring.space().canonical() + &deg(c.l);
        let table = ideal_power_cohomology(&check.scheme, c.m, &twist, params()).unwrap();
        let witness = table.iter().find(|(i, _, e)| *i >= 1 && e.dim > 0);
        match (check.report.holds, witness) {
            (false, Some((i, u, e))) => {
                sharp += 1;
                notes.push(format!("{}: h^{i}{u} = {}", c.name, e.dim));
            }
            (h, _) => notes.push(format!("{}: hypothesis {h}, no nonzero h^i", c.name)),
        }
    }
    (good, sharp, notes)
}

fn criterion_06_theorem_instances() -> Verdict {
    let t = Instant::now();
    let (good, sharp, notes) = theorem_cases(GF);
    let ok = good == PASSING.len() && sharp == FAILING.len() && good >= 5 && sharp >= 3;
    let detail = format!(
        "{good}/{} vanishing, {sharp}/{} sharp; {}",
        PASSING.len(),
        FAILING.len(),
        notes.join("; ")
    );
    report(
        "vanishing theorem on desk instances",
        ok,
        &detail,
        t,
        Duration::from_secs(900),
    )
}

fn criterion_07_oracle_equivalence() -> Verdict {
    let t = Instant::now();
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let mut notes = Vec::new();
    let mut ok = true;
    for factors in [[1u32, 1], [2, 2]] {
        let x = space(&factors);
        let ring = CoxRing::new(x.clone(), GF);
        let k = x.canonical();
        let (mut agree, mut dual) = (0, 0);
        let samples = 30;
        for _ in 0..samples {
            let a = deg(&[rng.gen_range(-5..=3), rng.gen_range(-5..=3)]);
            let u = deg(&[rng.gen_range(-3..=3), rng.gen_range(-3..=3)]);
            let m = GradedModule::free(&ring, -&a);
            let engine: Vec<u64> = (0..=x.dim())
                .map(|i| sheaf_cohomology_dim(&m, i, &u, params()).unwrap())
                .collect();
            let total = &a + &u;
            let closed: Vec<u64> = (0..=x.dim()).map(|i| kunneth(&factors, &total, i)).collect();
            let dual_total = &k - &total;
            let serre: Vec<u64> = (0..=x.dim())
                .map(|i| kunneth(&factors, &dual_total, x.dim() - i))
                .collect();
            agree += usize::from(engine == closed);
            dual += usize::from(engine == serre);
        }
        ok &= agree == samples && dual == samples;
        notes.push(format!(
            "{x}: {agree}/{samples} match Künneth, {dual}/{samples} match Serre duality"
        ));
    }
    report(
        "engine against Künneth and Serre duality",
        ok,
        &notes.join("; "),
        t,
        Duration::from_secs(600),
    )
}

fn criterion_08_multiplication_maps() -> Verdict {
    let t = Instant::now();
    let p1 = space(&[1]);
    let (mut agree, mut implied, mut oracle) = (0, 0, 0);
    for l1 in 1..=6i64 {
        for l2 in 1..=6i64 {
            let (a, b) = (deg(&[l1]), deg(&[l2]));
            let direct = multiplication_map_check(
                &p1,
                GF,
                &a,
                &b,
                MultiplicationMode::DirectRank,
                DIAGONAL_VARIABLE_LIMIT,
                params(),
            )
            .unwrap();
            let diagonal = multiplication_map_check(
                &p1,
                GF,
                &a,
                &b,
                MultiplicationMode::DiagonalVanishing,
                DIAGONAL_VARIABLE_LIMIT,
                params(),
            )
            .unwrap();
            agree += usize::from(direct == diagonal);
            // sections of O(l-2) on P1: the product map is onto exactly when
            // both factors have sections or the target has none
            let (p, q) = (l1 - 2, l2 - 2);
            let truth = (p >= 0 && q >= 0) || p + q < 0;
            oracle += usize::from(direct == truth);
            let hyp = adjoint_hypothesis(&a, &b, &[deg(&[1])]);
            implied += usize::from(!hyp || direct);
            assert_eq!(hyp, l1 >= 2 && l2 >= 2, "hypothesis region at ({l1},{l2})");
        }
    }
    let ok = agree == 36 && implied == 36 && oracle == 36;
    report(
        "multiplication maps on P1",
        ok,
        &format!("modes agree {agree}/36, match sections count {oracle}/36, hypothesis implies onto {implied}/36"),
        t,
        Duration::from_secs(300),
    )
}

fn criterion_09_wahl_checks() -> Verdict {
    let t = Instant::now();
    let (mut cells, mut matched, mut principal) = (0, 0, 0);
    for m in 0..=2u32 {
        for l1 in 2..=6i64 {
            for l2 in 2..=6i64 {
                let w = wahl_vanishing_check(GF, m, l1, l2, params()).unwrap();
                // I_Δ^{m+1} is O(-(m+1), -(m+1)), so h^1 is that of a line bundle
                let shift = i64::from(m) + 1;
                let truth = kunneth(&[1, 1], &deg(&[l1 - 2 - shift, l2 - 2 - shift]), 1);
                cells += 1;
                matched += usize::from(w.h1 == truth && w.closed_form_h1 == truth && w.vanishes == (truth == 0));
                principal += usize::from(w.principal);
            }
        }
    }
    let slices =
        (0..=2u32).all(|m| (0..=4).all(|a| (0..=4).all(|b| diagonal_power_is_principal_at(GF, m, &deg(&[a, b])))));
    let ok = matched == cells && principal == cells && slices;
    report(
        "powers of the diagonal of P1 x P1",
        ok,
        &format!("{matched}/{cells} cells match, principal {principal}/{cells}, slice check {slices}"),
        t,
        Duration::from_secs(120),
    )
}

fn s6(a: (i64, i64), b: (i64, i64)) -> QuadExt {
    QuadExt::from_parts(a.0, a.1, b.0, b.1, 6)
}

fn criterion_10_cone_arithmetic_k3() -> Verdict {
    let t = Instant::now();
    // basis H, C; the nef cone is spanned by H + 2C and H + (2 - √6)C
    let nef = ConeQD::new(
        rational_point((1, 1), (2, 1), 6),
        [s6((1, 1), (0, 1)), s6((2, 1), (-1, 1))],
        ["H", "C"],
    )
    .unwrap();
    let p = |h: i64, c: i64| rational_point((h, 1), (c, 1), 6);
    let apex = shifted_cones_intersection_apex(&[p(2, 4), p(2, 3), p(2, 2)], &nef).unwrap();
    let expected = [s6((2, 1), (1, 3)), s6((2, 1), (2, 3))];
    let apex_ok = apex == expected;
    let inside_q = shifted_cone_subset(&expected, &p(2, 1), &nef);
    report(
        "K3 cone: apex and containment in [2H + C] + Nef",
        apex_ok && inside_q,
        &format!("apex (2 + 2/√6)H + (2 + 4/√6)C reproduced: {apex_ok}; contained in Q: {inside_q}"),
        t,
        Duration::from_secs(1),
    )
}

fn criterion_10_cone_arithmetic_blowup() -> Verdict {
    let t = Instant::now();
    // basis H, E; Nef = <H, H - E>; P1 = H - E, P2 = H
    let nef = ConeQD::new(
        rational_point((1, 1), (-1, 1), 2),
        rational_point((1, 1), (0, 1), 2),
        ["H", "E"],
    )
    .unwrap();
    let p2 = rational_point((1, 1), (0, 1), 2);
    let mut notes = Vec::new();
    let mut ok = true;
    for d in 2..=4i64 {
        let shifted = rational_point((d - 1, 1), (1 - d, 1), 2);
        let reaches = shifted_cone_subset(&p2, &p2, &nef) && !shifted_cone_subset(&p2, &shifted, &nef);
        let other_way = shifted_cone_subset(&shifted, &p2, &nef);
        ok &= reaches;
        notes.push(format!(
            "d = {d}: P2 outside {}P1 + Nef: {reaches}, {}P1 inside P2 + Nef: {other_way}",
            d - 1,
            d - 1
        ));
    }
    report(
        "blow-up region reaches past the shifted region",
        ok,
        &notes.join("; "),
        t,
        Duration::from_secs(1),
    )
}

fn random_ideal(rng: &mut StdRng, ring: &CoxRing) -> Ideal {
    let l = ring.space().nfactors();
    let count = rng.gen_range(1..=3);
    let degrees: Vec<MultiDegree> = (0..count)
        .map(|_| MultiDegree((0..l).map(|_| rng.gen_range(0..=2)).collect()))
        .filter(|d: &MultiDegree| d.total() > 0)
        .collect();
    let mut gens = generic_forms(ring, &degrees, rng.gen());
    // sparse binomials make the Gröbner bases less generic
    if rng.gen_bool(0.5) {
        let basis = ring.space().slice_basis(&deg(&vec![1; l]));
        let i = rng.gen_range(0..basis.len());
        let j = rng.gen_range(0..basis.len());
        let pr = ring.poly_ring();
        let f = pr.sub(&pr.monomial(basis[i].clone()), &pr.monomial(basis[j].clone()));
        if !f.is_zero() {
            gens.push(f);
        }
    }
    Ideal::new(ring, gens).unwrap()
}

fn criterion_11_property_suites() -> Verdict {
    let t = Instant::now();
    let mut rng = StdRng::seed_from_u64(1101);
    let n = 100;
    let mut counts = [0usize; 5];
    let spaces = [space(&[1, 1]), space(&[1, 2]), space(&[2])];
    let patient = Stabilization::new(2, 10).unwrap();
    for k in 0..n {
        let ring = CoxRing::new(
            spaces[k % spaces.len()].clone(),
            if k % 10 == 9 { Field::Rational } else { GF },
        );
        let x = ring.space().clone();
        let i = random_ideal(&mut rng, &ring);
        counts[0] += usize::from(i.gb().certify());
        let b = Ideal::irrelevant(&ring);
        let sat = saturate(&i, &b);
        counts[1] += usize::from(saturate(&sat, &b) == sat);
        counts[2] += usize::from(resolve(&i, Presented::Quotient, 0).is_complex());
        let u = MultiDegree((0..x.nfactors()).map(|_| rng.gen_range(0..=4)).collect());
        counts[3] +=
            usize::from(ideal_slice_dimension(&i, &u) + quotient_slice_dimension(&i, &u) == x.slice_dimension(&u));
        let q = GradedModule::Quotient(sat.clone());
        let v = MultiDegree((0..x.nfactors()).map(|_| rng.gen_range(-2..=3)).collect());
        let alternating: Option<i128> = (0..=x.dim())
            .map(|j| {
                sheaf_cohomology_dim(&q, j, &v, patient)
                    .ok()
                    .map(|h| if j % 2 == 0 { h as i128 } else { -(h as i128) })
            })
            .sum();
        counts[4] += usize::from(alternating == Some(euler_characteristic(&q, &v)));
    }
    let names = [
        "Buchberger certificates",
        "saturation idempotence",
        "d∘d = 0",
        "slice additivity",
        "Euler consistency",
    ];
    let detail: Vec<String> = names.iter().zip(counts).map(|(m, c)| format!("{m} {c}/{n}")).collect();
    report(
        "randomized property suites",
        counts.iter().all(|&c| c == n),
        &detail.join(", "),
        t,
        Duration::from_secs(600),
    )
}

fn chop_agrees_with_engine_on_three_forms() {
    let x = space(&[2, 2]);
    let d = deg(&[1, 1]);
    let degrees = vec![d.clone(), d.clone(), d];
    let twist = &(&x.canonical() + &deg(&[3, 3])) + &deg(&[0, 3]);
    let chop = koszul_chop(&x, &degrees, &twist).unwrap();
    assert!(chop.valid);
    let ring = CoxRing::new(x.clone(), GF);
    let y = scheme_of_forms(&ring, &generic_forms(&ring, &degrees, 3), 3).unwrap();
    let m = GradedModule::Ideal(y);
    for (i, c) in chop.dims.iter().enumerate() {
        if let Some(c) = c {
            assert_eq!(*c, sheaf_cohomology_dim(&m, i, &twist, params()).unwrap(), "h^{i}");
        }
    }
    assert_eq!(chop.dims[0], Some(1));
}

fn rational_runs_agree_with_prime_field() {
    assert_eq!(saturation_identity(Field::Rational).0, saturation_identity(GF).0);
    assert_eq!(intersection_identity(Field::Rational).0, intersection_identity(GF).0);
    let (q, p) = (theorem_cases(Field::Rational), theorem_cases(GF));
    assert_eq!((q.0, q.1), (p.0, p.1));
    assert_eq!(q.2, p.2, "witness dimensions over QQ and GF(32003)");
}

fn criterion_10_cone_arithmetic() -> Verdict {
    let (k3, blowup) = (criterion_10_cone_arithmetic_k3(), criterion_10_cone_arithmetic_blowup());
    Verdict {
        passed: k3.passed && blowup.passed,
        text: format!("{}; {}", k3.text, blowup.text),
    }
}

fn invariant(title: &str, check: fn()) -> Verdict {
    check();
    Verdict {
        passed: true,
        text: title.to_string(),
    }
}

fn main() -> ExitCode {
    let criteria: Vec<(String, Box<dyn Fn() -> Verdict>)> = vec![
        ("criterion  1".into(), Box::new(criterion_01_saturation_identity)),
        ("criterion  2".into(), Box::new(criterion_02_intersection_identity)),
        ("criterion  3".into(), Box::new(criterion_03_regularity_triple)),
        ("criterion  4".into(), Box::new(criterion_04_kunneth_nonvanishing)),
        ("criterion  5".into(), Box::new(criterion_05_sharpness)),
        ("criterion  6".into(), Box::new(criterion_06_theorem_instances)),
        ("criterion  7".into(), Box::new(criterion_07_oracle_equivalence)),
        ("criterion  8".into(), Box::new(criterion_08_multiplication_maps)),
        ("criterion  9".into(), Box::new(criterion_09_wahl_checks)),
        ("criterion 10".into(), Box::new(criterion_10_cone_arithmetic)),
        ("criterion 11".into(), Box::new(criterion_11_property_suites)),
        (
            "invariant   ".into(),
            Box::new(|| {
                invariant(
                    "Koszul chop agrees with the engine on three (1,1) forms",
                    chop_agrees_with_engine_on_three_forms,
                )
            }),
        ),
        (
            "invariant   ".into(),
            Box::new(|| invariant("QQ re-runs agree with GF(32003)", rational_runs_agree_with_prime_field)),
        ),
    ];
    // libtest filters and flags do not apply; `--list` keeps `cargo test -- --list` working
    if std::env::args().any(|a| a == "--list") {
        return ExitCode::SUCCESS;
    }
    let mut failed = 0;
    for (label, run) in &criteria {
        let verdict = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Verdict {
                passed: false,
                text: format!("panicked: {msg}"),
            }
        });
        failed += usize::from(!verdict.passed);
        println!(
            "{label} {} {}",
            if verdict.passed { "PASS" } else { "FAIL" },
            verdict.text
        );
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

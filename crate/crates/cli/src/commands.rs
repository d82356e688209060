use std::fmt::Write;

use coxreg::arith::Field;
use coxreg::cohomology::{cohomology_table, line_bundle_cohomology, CohomologyTable, Provenance, Stabilization};
use coxreg::groebner::{saturate, Ideal};
use coxreg::lab::{
    check_theorem_main, cone_contains, generic_forms, ideal_power_cohomology, is_l_regular, multiplication_map_check,
    regularity_region_predicted, scheme_of_forms, sharpness_witness, shifted_cone_subset,
    shifted_cones_intersection_apex, sub, wahl_vanishing_check, ConeQD, DivisorOnProduct, MultiplicationMode, Point,
    RegionPath,
};
use coxreg::resolution::GradedModule;
use coxreg::ring::{CoxRing, MultiDegree, ProductSpace};

use crate::input::{parse_cone_file, parse_ring_file, ConeFile, RingFile};
use crate::output::{render_table, CheckLine, Format};
use crate::Failure;

/// Text to print and whether every check it reports passed.
pub struct Outcome {
    pub text: String,
    pub passed: bool,
}

impl Outcome {
    pub fn ok(text: String) -> Outcome {
        Outcome { text, passed: true }
    }

    pub fn from_checks(lines: &[CheckLine], format: Format) -> Outcome {
        let mut text = String::new();
        for l in lines {
            writeln!(text, "{}", l.render(format)).unwrap();
        }
        Outcome {
            text,
            passed: lines.iter().all(|l| l.passed),
        }
    }
}

pub fn read_file(path: &str) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read `{path}`: {e}")))
}

pub fn load_ring_file(path: &str, field: Option<Field>) -> Result<RingFile, Failure> {
    let text = read_file(path)?;
    parse_ring_file(&text, field).map_err(|e| Failure::Usage(format!("{path}: {e}")))
}

/// An ideal given on the command line, read with the ring file grammar.
pub fn inline_ring(ring: &str, ideal: &str, field: Option<Field>) -> Result<RingFile, Failure> {
    let text = format!("ring: {ring}\nideal: {ideal}\n");
    parse_ring_file(&text, field).map_err(|e| Failure::Usage(format!("inline ideal `{ideal}`: {e}")))
}

pub fn load_cone_file(path: &str) -> Result<ConeFile, Failure> {
    let text = read_file(path)?;
    parse_cone_file(&text).map_err(|e| Failure::Usage(format!("{path}: {e}")))
}

pub fn saturate_cmd(rf: &RingFile, against: &str) -> Result<Outcome, Failure> {
    let j = if against == "irrelevant" {
        Ideal::irrelevant(&rf.ring)
    } else {
        let gens: Vec<&str> = against.split(';').filter(|s| !s.trim().is_empty()).collect();
        Ideal::parse(&rf.ring, &gens)?
    };
    let sat = saturate(&rf.ideal, &j);
    let mut text = String::new();
    for g in &sat.gb().polys {
        writeln!(text, "{}", rf.ring.format(g)).unwrap();
    }
    Ok(Outcome::ok(text))
}

pub struct CohomologyArgs {
    pub module: GradedModule,
    pub closed_form: Option<(ProductSpace, MultiDegree)>,
    pub twists: Vec<MultiDegree>,
    pub indices: Vec<usize>,
}

pub fn cohomology_cmd(args: CohomologyArgs, params: Stabilization, format: Format) -> Result<Outcome, Failure> {
    let table = match &args.closed_form {
        Some((space, a)) => {
            let mut t = CohomologyTable::new();
            for u in &args.twists {
                let h = line_bundle_cohomology(space, &(a + u));
                for &i in &args.indices {
                    t.insert(i, u.clone(), h.get(i).copied().unwrap_or(0), Provenance::ClosedForm);
                }
            }
            t
        }
        None => cohomology_table(&args.module, args.indices.iter().copied(), &args.twists, params)?,
    };
    Ok(Outcome::ok(render_table(&table, format)))
}

pub fn regularity_direct(
    rf: &RingFile,
    module_kind: &str,
    target: &MultiDegree,
    params: Stabilization,
    format: Format,
) -> Result<Outcome, Failure> {
    let module = module_of(rf, module_kind)?;
    let rep = is_l_regular(&module, target, params)?;
    let mut text = render_table(&rep.table, format);
    let verdict = if rep.regular { "regular" } else { "not regular" };
    match format {
        Format::Human => {
            writeln!(text, "{verdict} at {target}").unwrap();
            for v in &rep.violations {
                writeln!(text, "  violation: h^{}{} = {}", v.index, target - &v.shift, v.dim).unwrap();
            }
        }
        Format::Json => {
            writeln!(
                text,
                "{}",
                serde_json::json!({ "regular": rep.regular, "target": target.components() })
            )
            .unwrap();
        }
    }
    Ok(Outcome::ok(text))
}

pub fn regularity_predicted(
    rf: &RingFile,
    target: &MultiDegree,
    dim_y: usize,
    path: RegionPath,
    format: Format,
) -> Result<Outcome, Failure> {
    let space = rf.ring.space();
    let l = target - &space.canonical();
    let rep = regularity_region_predicted(space, rf.ideal.generator_degrees(), dim_y, &l, path)?;
    let mut text = String::new();
    match format {
        Format::Human => {
            writeln!(text, "predicted {}-regular: {}", target, rep.holds).unwrap();
            // subsets of generators with equal degrees give identical lines
            let mut seen = std::collections::BTreeSet::new();
            for w in &rep.witnesses {
                let degs: Vec<String> = w
                    .subset
                    .iter()
                    .map(|&j| rf.ideal.generator_degrees()[j].to_string())
                    .collect();
                let line = format!(
                    "  witness: subset {{{}}}, u = {}, class {} is not big and nef",
                    degs.join(", "),
                    w.shift.as_ref().expect("region witnesses carry a shift"),
                    w.twist
                );
                if seen.insert(line.clone()) {
                    writeln!(text, "{line}").unwrap();
                }
            }
        }
        Format::Json => {
            writeln!(
                text,
                "{}",
                serde_json::json!({ "predicted": rep.holds, "witnesses": rep.witnesses.len() })
            )
            .unwrap();
        }
    }
    Ok(Outcome::ok(text))
}

pub fn module_of(rf: &RingFile, kind: &str) -> Result<GradedModule, Failure> {
    match kind {
        "ideal" => Ok(GradedModule::Ideal(rf.ideal.clone())),
        "quotient" => Ok(GradedModule::Quotient(rf.ideal.clone())),
        other => Err(Failure::Usage(format!(
            "unknown module kind `{other}` (ideal | quotient)"
        ))),
    }
}

pub fn theorem_cmd(
    rf: &RingFile,
    e: usize,
    m: u32,
    l: &MultiDegree,
    params: Stabilization,
    format: Format,
) -> Result<Outcome, Failure> {
    let divisors = rf
        .ideal
        .generators()
        .iter()
        .map(|f| DivisorOnProduct::from_form(&rf.ring, f.clone()))
        .collect::<Result<Vec<_>, _>>()?;
    let check = check_theorem_main(&rf.ring, &divisors, e, m, l, params)?;
    let mut text = String::new();
    writeln!(text, "hypothesis holds: {}", check.report.holds).unwrap();
    for w in &check.report.witnesses {
        writeln!(
            text,
            "  witness: subset {:?}, first {}, class {} is not big and nef",
            w.subset,
            w.first.expect("theorem witnesses carry a first element"),
            w.twist
        )
        .unwrap();
    }
    let mut passed = true;
    if let Some(table) = &check.table {
        text.push_str(&render_table(table, format));
        writeln!(text, "verified: {}", check.verified).unwrap();
        passed = check.verified;
    }
    Ok(Outcome { text, passed })
}

/// Compares the chop with the engine on generic forms of the given degrees.
pub fn sharpness_cross_check(
    space: &ProductSpace,
    field: Field,
    degrees: &[MultiDegree],
    n: &MultiDegree,
    seed: u64,
    params: Stabilization,
) -> Result<Vec<CheckLine>, Failure> {
    let w = sharpness_witness(space, degrees, n)?;
    let ring = CoxRing::new(space.clone(), field);
    let forms = generic_forms(&ring, degrees, seed);
    let y = scheme_of_forms(&ring, &forms, degrees.len())?;
    let engine = ideal_power_cohomology(&y, 0, &w.twist, params)?;
    let mut lines = Vec::new();
    for i in 1..=space.dim() {
        let got = engine.dim(i, &w.twist).expect("every index computed");
        let want = w.chop.dims[i];
        lines.push(CheckLine::new(
            format!("h^{i}{}", w.twist),
            want == Some(got),
            format!("koszul-chop {want:?}, ext-engine {got}"),
        ));
    }
    let nonzero = match w.nonzero {
        Some((i, d)) => format!("nonzero at i = {i} with dimension {d}"),
        None => "no nonzero index i >= 1".into(),
    };
    lines.push(CheckLine::new("witness", w.nonzero.is_some(), nonzero));
    Ok(lines)
}

pub fn sharpness_cmd(
    space: &ProductSpace,
    field: Field,
    degrees: &[MultiDegree],
    n: &MultiDegree,
    cross_check: Option<u64>,
    params: Stabilization,
    format: Format,
) -> Result<Outcome, Failure> {
    match cross_check {
        Some(seed) => Ok(Outcome::from_checks(
            &sharpness_cross_check(space, field, degrees, n, seed, params)?,
            format,
        )),
        None => {
            let w = sharpness_witness(space, degrees, n)?;
            let mut table = CohomologyTable::new();
            for (i, h) in w.chop.dims.iter().enumerate() {
                if let Some(h) = h {
                    table.insert(i, w.twist.clone(), *h, Provenance::KoszulChop);
                }
            }
            let mut text = render_table(&table, format);
            if format == Format::Human {
                match w.nonzero {
                    Some((i, d)) => writeln!(text, "nonvanishing at i = {i}: dimension {d}").unwrap(),
                    None => writeln!(text, "no nonvanishing for i >= 1").unwrap(),
                }
            }
            Ok(Outcome::ok(text))
        }
    }
}

#[allow(clippy::too_many_arguments)]
pub fn multmap_cmd(
    space: &ProductSpace,
    field: Field,
    l1: &MultiDegree,
    l2: &MultiDegree,
    modes: &[MultiplicationMode],
    limit: usize,
    params: Stabilization,
    format: Format,
) -> Result<Outcome, Failure> {
    let mut lines = Vec::new();
    let mut answers = Vec::new();
    for &mode in modes {
        let s = multiplication_map_check(space, field, l1, l2, mode, limit, params)?;
        answers.push(s);
        lines.push(CheckLine::new(format!("{mode:?}"), true, format!("surjective: {s}")));
    }
    if answers.len() == 2 {
        lines.push(CheckLine::new(
            "modes agree",
            answers[0] == answers[1],
            format!("{answers:?}"),
        ));
    }
    Ok(Outcome::from_checks(&lines, format))
}

pub fn wahl_cmd(
    field: Field,
    m: u32,
    l1: i64,
    l2: i64,
    params: Stabilization,
    format: Format,
) -> Result<Outcome, Failure> {
    let w = wahl_vanishing_check(field, m, l1, l2, params)?;
    let lines = [
        CheckLine::new("vanishing", true, format!("h^1 = {} (vanishes: {})", w.h1, w.vanishes)),
        CheckLine::new(
            "closed form",
            w.h1 == w.closed_form_h1,
            format!("closed-form h^1 = {}", w.closed_form_h1),
        ),
        CheckLine::new(
            "principal power",
            w.principal,
            format!("I^{} principal of degree ({},{})", m + 1, m + 1, m + 1),
        ),
    ];
    Ok(Outcome::from_checks(&lines, format))
}

fn point<'a>(cf: &'a ConeFile, name: &str) -> Result<&'a Point, Failure> {
    cf.points
        .get(name.trim())
        .ok_or_else(|| Failure::Usage(format!("unknown point `{name}`")))
}

fn show(cone: &ConeQD, p: &Point) -> String {
    format!("({})·{} + ({})·{}", p[0], cone.labels[0], p[1], cone.labels[1])
}

pub enum ConeQuery {
    Contains(String),
    Subset(String, String),
    Apex(Vec<String>),
}

pub fn cones_cmd(cf: &ConeFile, query: &ConeQuery, format: Format) -> Result<Outcome, Failure> {
    let line = match query {
        ConeQuery::Contains(name) => {
            let p = point(cf, name)?;
            CheckLine::new(
                format!("{name} in cone"),
                true,
                format!("{}", cone_contains(&cf.cone, p)),
            )
        }
        ConeQuery::Subset(a, b) => {
            let (pa, pb) = (point(cf, a)?, point(cf, b)?);
            let ok = shifted_cone_subset(pa, pb, &cf.cone);
            let (s, t) = cf.cone.coordinates(&sub(pa, pb));
            CheckLine::new(
                format!("{a} + cone ⊆ {b} + cone"),
                true,
                format!("{ok} (difference has cone coordinates {s}, {t})"),
            )
        }
        ConeQuery::Apex(names) => {
            let pts = names
                .iter()
                .map(|n| point(cf, n).cloned())
                .collect::<Result<Vec<_>, _>>()?;
            let apex = shifted_cones_intersection_apex(&pts, &cf.cone)?;
            CheckLine::new("intersection apex", true, show(&cf.cone, &apex))
        }
    };
    Ok(Outcome::from_checks(&[line], format))
}

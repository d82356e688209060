//! Exact arithmetic with rank-two cones in `Q(sqrt D)^2`.

use crate::arith::QuadExt;
use crate::error::{Error, Result};

/// A point of a rank-two Néron–Severi space.
pub type Point = [QuadExt; 2];

/// The cone spanned by two independent vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeQD {
    pub generators: [Point; 2],
    pub labels: [String; 2],
    det: QuadExt,
}

/// A rational point, embedded with zero irrational part.
pub fn rational_point(x: (i64, i64), y: (i64, i64), radicand: u64) -> Point {
    [
        QuadExt::from_parts(x.0, x.1, 0, 1, radicand),
        QuadExt::from_parts(y.0, y.1, 0, 1, radicand),
    ]
}

pub fn add(p: &Point, q: &Point) -> Point {
    [&p[0] + &q[0], &p[1] + &q[1]]
}

pub fn sub(p: &Point, q: &Point) -> Point {
    [&p[0] - &q[0], &p[1] - &q[1]]
}

pub fn scale(c: &QuadExt, p: &Point) -> Point {
    [c * &p[0], c * &p[1]]
}

impl ConeQD {
    pub fn new(g1: Point, g2: Point, labels: [&str; 2]) -> Result<ConeQD> {
        let r = g1[0].radicand();
        if [&g1[1], &g2[0], &g2[1]].iter().any(|x| x.radicand() != r) {
            return Err(Error::InvalidArgument(
                "cone generators live in different fields".into(),
            ));
        }
        let det = &(&g1[0] * &g2[1]) - &(&g1[1] * &g2[0]);
        if det.is_zero() {
            return Err(Error::DegenerateCone);
        }
        Ok(ConeQD {
            generators: [g1, g2],
            labels: labels.map(String::from),
            det,
        })
    }

    /// `(s, t)` with `v = s g1 + t g2`, by Cramer's rule.
    pub fn coordinates(&self, v: &Point) -> (QuadExt, QuadExt) {
        let [g1, g2] = &self.generators;
        let s = &(&v[0] * &g2[1]) - &(&v[1] * &g2[0]);
        let t = &(&g1[0] * &v[1]) - &(&g1[1] * &v[0]);
        (
            s.div(&self.det).expect("nonzero determinant"),
            t.div(&self.det).expect("nonzero determinant"),
        )
    }

    pub fn point(&self, s: &QuadExt, t: &QuadExt) -> Point {
        add(&scale(s, &self.generators[0]), &scale(t, &self.generators[1]))
    }

    pub fn contains(&self, v: &Point) -> bool {
        let (s, t) = self.coordinates(v);
        s.sign() >= 0 && t.sign() >= 0
    }

    /// Whether `v` lies in the interior.
    pub fn contains_interior(&self, v: &Point) -> bool {
        let (s, t) = self.coordinates(v);
        s.sign() > 0 && t.sign() > 0
    }
}

pub fn cone_contains(cone: &ConeQD, v: &Point) -> bool {
    cone.contains(v)
}

/// `apex1 + C ⊆ apex2 + C`, which holds exactly when `apex1 − apex2 ∈ C`.
pub fn shifted_cone_subset(apex1: &Point, apex2: &Point, cone: &ConeQD) -> bool {
    cone.contains(&sub(apex1, apex2))
}

/// The apex of `∩_j (apex_j + C)`. In cone coordinates the intersection of
/// translates is again a translate, whose apex takes the componentwise
/// maximum.
pub fn shifted_cones_intersection_apex(apexes: &[Point], cone: &ConeQD) -> Result<Point> {
    let mut coords = apexes.iter().map(|a| cone.coordinates(a));
    let (mut s, mut t) = coords
        .next()
        .ok_or_else(|| Error::InvalidArgument("no cones to intersect".into()))?;
    for (s2, t2) in coords {
        if (&s2 - &s).sign() > 0 {
            s = s2;
        }
        if (&t2 - &t).sign() > 0 {
            t = t2;
        }
    }
    Ok(cone.point(&s, &t))
}

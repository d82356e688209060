//! Ring files, cone files and command-line value syntax.

use std::collections::BTreeMap;

use coxreg::arith::{Field, QuadExt};
use coxreg::groebner::Ideal;
use coxreg::lab::{ConeQD, Point};
use coxreg::ring::{CoxRing, MultiDegree, ProductSpace};
use coxreg::Error;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// `GF(p)` or `QQ`.
pub fn parse_field(text: &str) -> Result<Field, String> {
    let t = text.trim();
    if t == "QQ" {
        return Ok(Field::Rational);
    }
    let p = t
        .strip_prefix("GF(")
        .and_then(|s| s.strip_suffix(')'))
        .ok_or_else(|| format!("expected GF(p) or QQ, got `{t}`"))?;
    let p: u32 = p.trim().parse().map_err(|e| format!("bad prime `{p}`: {e}"))?;
    Field::prime(p).map_err(|e| e.to_string())
}

pub fn parse_space(text: &str) -> Result<ProductSpace, String> {
    ProductSpace::parse(text).map_err(|e| e.to_string())
}

pub fn parse_degree(text: &str) -> Result<MultiDegree, String> {
    MultiDegree::parse(text).map_err(|e| e.to_string())
}

/// `a1..b1,a2..b2` (a bare integer is a one-point range), expanded in
/// lexicographic order.
pub fn parse_box(text: &str) -> Result<Vec<MultiDegree>, String> {
    let mut ranges = Vec::new();
    for part in text.split(',') {
        let part = part.trim();
        let (lo, hi) = match part.split_once("..") {
            Some((a, b)) => (a.trim(), b.trim().trim_start_matches('=')),
            None => (part, part),
        };
        let lo: i64 = lo.parse().map_err(|e| format!("bad range `{part}`: {e}"))?;
        let hi: i64 = hi.parse().map_err(|e| format!("bad range `{part}`: {e}"))?;
        if hi < lo {
            return Err(format!("empty range `{part}`"));
        }
        if hi - lo > 1000 {
            return Err(format!("range `{part}` is too large"));
        }
        ranges.push(lo..=hi);
    }
    let mut out = vec![Vec::new()];
    for r in ranges {
        out = out
            .into_iter()
            .flat_map(|v| {
                r.clone().map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    Ok(out.into_iter().map(MultiDegree).collect())
}

/// `1,1;2,0` as a list of multidegrees.
pub fn parse_degree_list(text: &str) -> Result<Vec<MultiDegree>, String> {
    text.split(';')
        .filter(|s| !s.trim().is_empty())
        .map(parse_degree)
        .collect()
}

fn line_col(text: &str, offset: usize) -> (usize, usize) {
    let before = &text[..offset.min(text.len())];
    let line = before.matches('\n').count() + 1;
    let col = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
    (line, col)
}

fn strip_comment(line: &str) -> &str {
    line.split('#').next().unwrap_or("")
}

/// A parsed ring file.
pub struct RingFile {
    pub ring: CoxRing,
    pub ideal: Ideal,
}

/// Parses
///
/// ```text
/// ring: P(n1,...,nl) over GF(p)
/// ideal:
///   f1;
///   f2
/// ```
///
/// An explicit `field` overrides the one in the file. Errors carry a line
/// and column.
pub fn parse_ring_file(text: &str, field: Option<Field>) -> Result<RingFile, String> {
    let mut header = None;
    let mut ideal_start = None;
    let mut offset = 0;
    for (n, line) in text.split_inclusive('\n').enumerate() {
        let body = strip_comment(line).trim();
        if ideal_start.is_none() {
            if let Some(rest) = body.strip_prefix("ring:") {
                header = Some((n + 1, rest.trim().to_string()));
            } else if body.starts_with("ideal:") {
                let skip = line.find("ideal:").expect("prefix present") + "ideal:".len();
                ideal_start = Some(offset + skip);
            } else if !body.is_empty() {
                return Err(format!("line {}: expected `ring:` or `ideal:`, got `{body}`", n + 1));
            }
        }
        offset += line.len();
    }
    let (hline, header) = header.ok_or("missing `ring:` line")?;
    let (space_text, field_text) = match header.split_once(" over ") {
        Some((s, f)) => (s.trim(), Some(f.trim())),
        None => (header.trim(), None),
    };
    let space = parse_space(space_text).map_err(|e| format!("line {hline}: {e}"))?;
    let file_field = match field_text {
        Some(f) => parse_field(f).map_err(|e| format!("line {hline}: {e}"))?,
        None => Field::default(),
    };
    let ring = CoxRing::new(space, field.unwrap_or(file_field));
    let start = ideal_start.unwrap_or(text.len());
    // blank out comments so offsets stay aligned with the file
    let section: String = text[start..]
        .split_inclusive('\n')
        .map(|l| {
            let content = l.trim_end_matches('\n');
            let keep = strip_comment(content);
            let mut s = keep.to_string();
            s.extend(std::iter::repeat_n(' ', content.len() - keep.len()));
            if l.ends_with('\n') {
                s.push('\n');
            }
            s
        })
        .collect();
    let mut gens = Vec::new();
    let mut pos = 0;
    for entry in section.split(';') {
        let lead = entry.len() - entry.trim_start().len();
        if !entry.trim().is_empty() {
            let base = start + pos + lead;
            match ring.parse(entry.trim()) {
                Ok(p) => gens.push((p, base)),
                Err(e) => {
                    let inner = match &e {
                        Error::Syntax { position, .. } | Error::UnknownVariable { position, .. } => *position,
                        _ => 0,
                    };
                    let (l, c) = line_col(text, base + inner);
                    return Err(format!("line {l}, column {c}: {e}"));
                }
            }
        }
        pos += entry.len() + 1;
    }
    let mut polys = Vec::new();
    for (p, base) in gens {
        if let Err(e) = ring.multidegree(&p) {
            let (l, c) = line_col(text, base);
            return Err(format!("line {l}, column {c}: {e}"));
        }
        polys.push(p);
    }
    let ideal = Ideal::new(&ring, polys).map_err(|e| e.to_string())?;
    Ok(RingFile { ring, ideal })
}

/// `a + b s` with rational `a`, `b`, where `s` stands for the square root
/// of the radicand. Accepted terms: `3`, `-1/2`, `s`, `2*s`, `s/6`, `2*s/3`.
pub fn parse_quad(text: &str, radicand: u64) -> Result<QuadExt, String> {
    let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if t.is_empty() {
        return Err("empty number".into());
    }
    let mut a = BigRational::zero();
    let mut b = BigRational::zero();
    let mut terms = Vec::new();
    let mut cur = String::new();
    for ch in t.chars() {
        if (ch == '+' || ch == '-') && !cur.is_empty() {
            terms.push(std::mem::take(&mut cur));
        }
        cur.push(ch);
    }
    terms.push(cur);
    for term in terms {
        let (neg, body) = match term.strip_prefix('-') {
            Some(r) => (true, r),
            None => (false, term.strip_prefix('+').unwrap_or(&term)),
        };
        let irrational = body.contains('s');
        let coef_text = body.replacen("*s", "", 1).replacen("s*", "", 1).replacen('s', "", 1);
        let coef = parse_rational(&coef_text).map_err(|e| format!("bad term `{term}` in `{text}`: {e}"))?;
        let coef = if neg { -coef } else { coef };
        if irrational {
            b += coef;
        } else {
            a += coef;
        }
    }
    QuadExt::new(a, b, radicand).map_err(|e| e.to_string())
}

fn parse_rational(text: &str) -> Result<BigRational, String> {
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n, d),
        None => (text, "1"),
    };
    let num = if num.is_empty() {
        BigInt::one()
    } else {
        num.parse::<BigInt>().map_err(|e| e.to_string())?
    };
    let den = den.parse::<BigInt>().map_err(|e| e.to_string())?;
    if den.is_zero() {
        return Err("zero denominator".into());
    }
    Ok(BigRational::new(num, den))
}

/// A parsed cone file: a cone and named points.
pub struct ConeFile {
    pub cone: ConeQD,
    pub points: BTreeMap<String, Point>,
}

/// Parses
///
/// ```text
/// radicand: 6
/// basis: H, C
/// ray: 1, 2
/// ray: 1, 2 - s
/// point Q: 2, 1
/// ```
///
/// `radicand` defaults to 2, which is harmless for rational data.
pub fn parse_cone_file(text: &str) -> Result<ConeFile, String> {
    let mut radicand = 2u64;
    let mut basis = vec!["e1".to_string(), "e2".to_string()];
    let mut rays: Vec<(usize, String)> = Vec::new();
    let mut points: Vec<(usize, String, String)> = Vec::new();
    for (n, line) in text.lines().enumerate() {
        let n = n + 1;
        let body = strip_comment(line).trim();
        if body.is_empty() {
            continue;
        }
        let (key, value) = body
            .split_once(':')
            .ok_or_else(|| format!("line {n}: expected `key: value`"))?;
        let key = key.trim();
        let value = value.trim().to_string();
        if key == "radicand" {
            radicand = value.parse().map_err(|e| format!("line {n}: bad radicand: {e}"))?;
        } else if key == "basis" {
            basis = value.split(',').map(|s| s.trim().to_string()).collect();
            if basis.len() != 2 {
                return Err(format!("line {n}: a basis has two labels"));
            }
        } else if key == "ray" {
            rays.push((n, value));
        } else if let Some(name) = key.strip_prefix("point ") {
            points.push((n, name.trim().to_string(), value));
        } else {
            return Err(format!("line {n}: unknown key `{key}`"));
        }
    }
    let pair = |n: usize, v: &str| -> Result<Point, String> {
        let parts: Vec<&str> = v.split(',').collect();
        if parts.len() != 2 {
            return Err(format!("line {n}: expected two coordinates in `{v}`"));
        }
        Ok([
            parse_quad(parts[0], radicand).map_err(|e| format!("line {n}: {e}"))?,
            parse_quad(parts[1], radicand).map_err(|e| format!("line {n}: {e}"))?,
        ])
    };
    if rays.len() != 2 {
        return Err(format!("expected two rays, found {}", rays.len()));
    }
    let g1 = pair(rays[0].0, &rays[0].1)?;
    let g2 = pair(rays[1].0, &rays[1].1)?;
    let cone = ConeQD::new(g1, g2, [basis[0].as_str(), basis[1].as_str()]).map_err(|e| e.to_string())?;
    let mut map = BTreeMap::new();
    for (n, name, v) in points {
        map.insert(name, pair(n, &v)?);
    }
    Ok(ConeFile { cone, points: map })
}

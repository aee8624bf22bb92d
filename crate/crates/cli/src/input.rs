//! Diagram input: PD text, JSON and generator specs.

use anyhow::{anyhow, bail, Context, Result};
use seifert_core::diagram::{parse_pd, parse_pd_tuples};
use seifert_core::generate::{connected_sum, pretzel_pd, torus2, wedge_pd};
use seifert_core::{Diagram, OuterFace};
use serde::Deserialize;

#[derive(Debug, Deserialize)]
struct PdJson {
    crossings: Vec<[u32; 4]>,
    #[serde(default)]
    unknots: usize,
}

/// `{"crossings": [[1,4,2,5], ...], "unknots": 0}` or a bare array of tuples.
pub fn parse_json(text: &str) -> Result<Diagram> {
    let t = text.trim();
    let pd: PdJson = if t.starts_with('[') {
        PdJson { crossings: serde_json::from_str(t).context("JSON array of 4-tuples")?, unknots: 0 }
    } else {
        serde_json::from_str(t).context("JSON diagram object")?
    };
    if pd.crossings.is_empty() {
        return Ok(Diagram::unlink(pd.unknots.max(1)));
    }
    Ok(Diagram::from_pd(pd.crossings, pd.unknots)?)
}

/// PD text; on failure the error names the first offending line.
pub fn parse_pd_text(text: &str) -> Result<Diagram> {
    if let Err(e) = parse_pd_tuples(text) {
        if text.lines().count() > 1 {
            for (n, line) in text.lines().enumerate() {
                if let Err(e) = parse_pd_tuples(line) {
                    bail!("line {}: {e}", n + 1);
                }
            }
        }
        bail!("{e}");
    }
    Ok(parse_pd(text)?)
}

/// Generator specs: `pretzel 3 -5 -5`, `wedge 4 -2` (the diagram `D(m, k)`),
/// `torus2 7`, `unknot`, and connected sums `A + B` of any of these or of
/// PD strings.
pub fn parse_generator(spec: &str) -> Result<Diagram> {
    let mut out: Option<Diagram> = None;
    for part in spec.split(" + ") {
        let d = parse_piece(part.trim()).with_context(|| format!("in `{}`", part.trim()))?;
        out = Some(match out {
            None => d,
            Some(acc) => connected_sum(&acc, &d)?,
        });
    }
    out.ok_or_else(|| anyhow!("empty generator spec"))
}

fn parse_piece(part: &str) -> Result<Diagram> {
    if part.starts_with('X') || part.starts_with("PD") {
        return parse_pd_text(part);
    }
    let mut words = part.split_whitespace();
    let head = words.next().ok_or_else(|| anyhow!("empty generator spec"))?;
    let nums = words
        .map(|w| w.parse::<i64>().map_err(|_| anyhow!("`{w}` is not an integer")))
        .collect::<Result<Vec<i64>>>()?;
    let d = match (head, nums.as_slice()) {
        ("pretzel" | "P", p) => pretzel_pd(p)?,
        ("wedge" | "D", &[m, k]) => wedge_pd(m, k)?,
        ("torus2" | "T", &[q]) => torus2(q)?,
        ("unknot", &[]) => Diagram::unknot(),
        ("wedge" | "D", _) => bail!("`wedge` takes two integers m k"),
        ("torus2" | "T", _) => bail!("`torus2` takes one integer q"),
        _ => bail!("unknown generator `{head}` (expected pretzel, wedge, torus2 or unknot)"),
    };
    Ok(d)
}

/// Guesses the format: JSON, PD text, or a generator spec.
pub fn parse_any(text: &str) -> Result<Diagram> {
    let t = text.trim();
    if t.starts_with('{') || t.starts_with('[') {
        parse_json(t)
    } else if t.is_empty() || t.starts_with('X') || t.starts_with("PD") {
        parse_pd_text(t)
    } else {
        parse_generator(t)
    }
}

/// `7` or `7:left` is the face left of edge 7; `7:right` the face on its right.
pub fn parse_outer_face(s: &str) -> Result<OuterFace> {
    let (num, side) = s.split_once(':').unwrap_or((s, "left"));
    let edge: u32 = num.trim().parse().map_err(|_| anyhow!("outer face `{s}`: expected EDGE[:left|:right]"))?;
    match side.trim() {
        "left" | "l" => Ok(OuterFace::left_of(edge)),
        "right" | "r" => Ok(OuterFace::right_of(edge)),
        other => bail!("outer face side `{other}` is neither left nor right"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formats_agree() {
        let a = parse_any("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)").unwrap();
        let b = parse_any(r#"{"crossings": [[1,4,2,5],[3,6,4,1],[5,2,6,3]], "unknots": 0}"#).unwrap();
        let c = parse_any("[[1,4,2,5],[3,6,4,1],[5,2,6,3]]").unwrap();
        assert_eq!(a, b);
        assert_eq!(b, c);
        assert_eq!(parse_any("pretzel 1 1 1").unwrap().writhe(), 3);
    }

    #[test]
    fn sums_and_errors() {
        assert_eq!(parse_any("torus2 3 + torus2 -3").unwrap().crossing_count(), 6);
        assert!(parse_any("X(1,2,3)").is_err());
        assert!(parse_any("pretzel 1 x").is_err());
        assert!(parse_any("braid 2 1 1").is_err());
        let e = parse_pd_text("X(1,4,2,5)\nX(3,6,4\nX(5,2,6,3)").unwrap_err();
        assert!(e.to_string().starts_with("line 2"), "{e}");
    }

    #[test]
    fn outer_face_flag() {
        assert_eq!(parse_outer_face("3").unwrap(), OuterFace::left_of(3));
        assert_eq!(parse_outer_face("3:right").unwrap(), OuterFace::right_of(3));
        assert!(parse_outer_face("x").is_err());
    }
}

//! Built-in corpora and the corpus file format.

use std::collections::BTreeSet;

use anyhow::{bail, Context, Result};
use seifert_core::generate::{connected_sum_at, pretzel_pd, torus2, wedge_pd};
use seifert_core::theorem::{is_alternating, Genus1Class};
use seifert_core::Diagram;
use serde::{Deserialize, Serialize};

use crate::input::parse_any;
use crate::random::Sample;

/// One corpus file entry; `pd` holds PD text or a generator spec.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusEntry {
    pub name: String,
    pub pd: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expectations: Option<Expectations>,
}

/// Values an entry is expected to produce. `conway` is compared as text
/// ("1 + z^2"), `span` as Jones span text ("4", "9/2"), `leading` is the
/// leading coefficient of the Conway polynomial.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Expectations {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub conway: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub span: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub leading: Option<i64>,
}

pub fn load_corpus(text: &str) -> Result<Vec<CorpusEntry>> {
    let entries: Vec<CorpusEntry> = serde_json::from_str(text).context("corpus must be a JSON list of entries")?;
    let mut seen = BTreeSet::new();
    for e in &entries {
        if !seen.insert(e.name.as_str()) {
            bail!("duplicate corpus entry name `{}`", e.name);
        }
        parse_any(&e.pd).with_context(|| format!("corpus entry `{}`", e.name))?;
    }
    Ok(entries)
}

pub fn entry_samples(entries: &[CorpusEntry]) -> Result<Vec<Sample>> {
    entries
        .iter()
        .map(|e| Ok(Sample { name: e.name.clone(), diagram: parse_any(&e.pd)? }))
        .collect()
}

fn sample(name: String, d: seifert_core::Result<Diagram>) -> Sample {
    Sample { name, diagram: d.expect("corpus parameters are valid") }
}

/// Odd same-sign triples up to symmetry with entries of size at most `max`.
pub fn homogeneous_triples(max: i64) -> Vec<[i64; 3]> {
    let odd: Vec<i64> = (1..=max).step_by(2).collect();
    let mut out = Vec::new();
    for s in [1, -1] {
        for (i, &a) in odd.iter().enumerate() {
            for (j, &b) in odd.iter().enumerate().skip(i) {
                for &c in &odd[j..] {
                    out.push([s * a, s * b, s * c]);
                }
            }
        }
    }
    out
}

pub fn pretzel_sample(p: &[i64]) -> Sample {
    let name = format!("pretzel {}", p.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "));
    sample(name, pretzel_pd(p))
}

pub fn wedge_sample(m: i64, k: i64) -> Sample {
    sample(format!("wedge {m} {k}"), wedge_pd(m, k))
}

pub fn torus_sample(q: i64) -> Sample {
    sample(format!("torus2 {q}"), torus2(q))
}

pub fn wedge_params() -> Vec<(i64, i64)> {
    let v = [-6, -4, -2, 2, 4, 6];
    v.iter().flat_map(|&m| v.iter().map(move |&k| (m, k))).collect()
}

/// Homogeneous odd pretzels with entries up to 5, every `D(m, k)` with
/// `|m|, |k|` in {2, 4, 6}, and `(2, q)` torus diagrams for `2 <= |q| <= 9`.
pub fn cromwell_corpus() -> Vec<Sample> {
    let mut out: Vec<Sample> = homogeneous_triples(5).iter().map(|p| pretzel_sample(p)).collect();
    out.extend(wedge_params().into_iter().map(|(m, k)| wedge_sample(m, k)));
    for q in 2..=9 {
        out.push(torus_sample(q));
        out.push(torus_sample(-q));
    }
    out
}

/// Genus-one items with their classes: the tables' samples, the shared
/// pairs, and the homogeneous families of the Cromwell corpus.
pub fn genus_one_items() -> Vec<(Sample, Genus1Class)> {
    let mut out = Vec::new();
    let theta = |p: [i64; 3]| (pretzel_sample(&p), Genus1Class::theta(p[0], p[1], p[2]));
    for p in [[1, 1, 1], [3, 3, 3], [3, -5, -5], [3, -5, -7], [3, -45, -91], [11, 23, 101], [11, -15, -15]] {
        out.push(theta(p));
    }
    for (m, k) in [(2, 2), (2, -2), (4, -2), (-4, 26)] {
        out.push((wedge_sample(m, k), Genus1Class::wedge(m, k)));
    }
    for p in homogeneous_triples(5) {
        if !out.iter().any(|(_, c)| *c == Genus1Class::theta(p[0], p[1], p[2])) {
            out.push(theta(p));
        }
    }
    for (m, k) in wedge_params() {
        let s = wedge_sample(m, k);
        if !out.iter().any(|(x, _)| x.name == s.name) {
            out.push((s, Genus1Class::wedge(m, k)));
        }
    }
    out
}

/// Connected sums of two or three `(2, q)` torus diagrams with at most
/// `max_crossings` crossings, each made alternating by the choice of the
/// summing edge when one exists.
pub fn torus_sums(max_crossings: usize) -> Vec<Sample> {
    let qs: Vec<i64> = (2..=max_crossings as i64).flat_map(|q| [q, -q]).collect();
    let mut out = Vec::new();
    let mut seen = BTreeSet::new();
    let mut push = |name: String, d: Diagram, out: &mut Vec<Sample>| {
        if seen.insert(d.memo_key()) {
            out.push(Sample { name, diagram: d });
        }
    };
    for (i, &a) in qs.iter().enumerate() {
        for &b in &qs[i..] {
            if (a.abs() + b.abs()) as usize > max_crossings {
                continue;
            }
            let (da, db) = (torus2(a).unwrap(), torus2(b).unwrap());
            if let Some(d) = alternating_sum(&da, &db) {
                push(format!("torus2 {a} + torus2 {b}"), d.clone(), &mut out);
                for &c in &qs[i..] {
                    if (a.abs() + b.abs() + c.abs()) as usize <= max_crossings && c.abs() >= b.abs() {
                        if let Some(e) = alternating_sum(&d, &torus2(c).unwrap()) {
                            push(format!("torus2 {a} + torus2 {b} + torus2 {c}"), e, &mut out);
                        }
                    }
                }
            }
        }
    }
    out
}

fn alternating_sum(a: &Diagram, b: &Diagram) -> Option<Diagram> {
    let e1 = a.labels()[0];
    b.labels().into_iter().find_map(|e2| connected_sum_at(a, e1, b, e2).ok().filter(is_alternating))
}

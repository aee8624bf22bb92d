//! The `verify` suites.

use anyhow::{bail, Result};
use seifert_core::theorem::classify_genus_one;
use serde::Serialize;

use crate::checks::{self, Caps};
use crate::corpus::{cromwell_corpus, entry_samples, genus_one_items, pretzel_sample, CorpusEntry};
use crate::random::Sample;
use crate::verdict::{Battery, Verdict};

pub const SUITES: [&str; 7] = ["cromwell", "matrices", "dual", "tables", "random-lemma9", "genus-bound", "torus-claim"];

#[derive(Debug, Clone, Default)]
pub struct SuiteOptions {
    pub seed: u64,
    pub trials: Option<usize>,
    pub max_crossings: Option<usize>,
    pub caps: Caps,
    pub corpus: Option<Vec<CorpusEntry>>,
}

#[derive(Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub seed: u64,
    pub pass: bool,
    pub checks: usize,
    pub failures: usize,
    pub verdicts: Vec<Verdict>,
}

impl SuiteReport {
    pub fn from_battery(suite: &str, seed: u64, b: Battery) -> Self {
        let failures = b.failures().count();
        SuiteReport { suite: suite.into(), seed, pass: failures == 0, checks: b.verdicts.len(), failures, verdicts: b.verdicts }
    }
}

fn limit(samples: Vec<Sample>, max: Option<usize>) -> Vec<Sample> {
    match max {
        Some(m) => samples.into_iter().filter(|s| s.diagram.crossing_count() <= m).collect(),
        None => samples,
    }
}

fn corpus_or(opts: &SuiteOptions, default: impl FnOnce() -> Vec<Sample>) -> Result<Vec<Sample>> {
    match &opts.corpus {
        Some(entries) => entry_samples(entries),
        None => Ok(default()),
    }
}

pub fn run_suite(name: &str, opts: &SuiteOptions) -> Result<SuiteReport> {
    let seed = opts.seed;
    let caps = opts.caps;
    let mut b = match name {
        "cromwell" => {
            let samples = corpus_or(opts, || {
                let mut v = cromwell_corpus();
                v.push(pretzel_sample(&[3, -5, -7]));
                v
            })?;
            let max = opts.max_crossings.unwrap_or(caps.skein).min(caps.skein);
            checks::cromwell(&limit(samples, Some(max)), caps.skein)
        }
        "matrices" => {
            let mut b = checks::sample_block_battery();
            b.extend(checks::sard_example());
            b.extend(checks::block_matrices_random(seed, opts.trials.unwrap_or(500), opts.max_crossings.unwrap_or(16)));
            b
        }
        "dual" => {
            let mut b = checks::sample_block_battery();
            for s in limit(corpus_or(opts, cromwell_corpus)?, opts.max_crossings) {
                match seifert_core::theorem::analyze(&s.diagram, None) {
                    Ok(a) => b.extend(checks::structure(&s.name, &a, None)),
                    Err(e) => b.push(Verdict::error(&s.name, "analysis", "a plane diagram", e)),
                }
            }
            b.extend(checks::dual_random(seed, opts.trials.unwrap_or(200), opts.max_crossings.unwrap_or(16)));
            b
        }
        "tables" => {
            let items = match &opts.corpus {
                Some(entries) => entry_samples(entries)?
                    .into_iter()
                    .filter_map(|s| classify_genus_one(&s.diagram).ok().map(|c| (s, c)))
                    .collect(),
                None => genus_one_items(),
            };
            let mut b = checks::genus_one(&items, caps);
            if opts.corpus.is_none() {
                let triples = [[3, 3, 3], [3, 3, 5], [3, 5, 5], [3, 5, 7], [5, 5, 5], [3, 7, 7], [5, 5, 7]];
                b.extend(checks::mixed_pretzel_jones(&triples, caps.jones));
            }
            b
        }
        "random-lemma9" => checks::weak_dominant_random(seed, opts.trials.unwrap_or(10_000)),
        "genus-bound" => {
            let max = opts.max_crossings.unwrap_or(12);
            let mut b = checks::structure_random(seed, opts.trials.unwrap_or(200), max, caps.skein);
            if let Some(entries) = &opts.corpus {
                for s in entry_samples(entries)? {
                    match seifert_core::theorem::analyze(&s.diagram, None) {
                        Ok(a) => b.extend(checks::structure(&s.name, &a, Some(caps.skein))),
                        Err(e) => b.push(Verdict::error(&s.name, "analysis", "a plane diagram", e)),
                    }
                }
            }
            b
        }
        "torus-claim" => {
            let max = opts.max_crossings.unwrap_or(14);
            let samples = corpus_or(opts, || {
                let mut v = cromwell_corpus();
                v.push(pretzel_sample(&[3, 3, 3]));
                v
            })?;
            let sums = if opts.corpus.is_some() { 0 } else { max };
            checks::torus_claim(&samples, sums)
        }
        other => bail!("unknown suite `{other}`; expected one of {}", SUITES.join(", ")),
    };
    if let Some(entries) = &opts.corpus {
        b.extend(checks::expectations(entries, caps));
    }
    Ok(SuiteReport::from_battery(name, seed, b))
}

pub fn render_text(r: &SuiteReport, verbose: bool) -> String {
    let mut out = String::new();
    for v in &r.verdicts {
        if verbose || !v.pass || v.note.is_some() {
            let tag = if v.pass { "PASS" } else { "FAIL" };
            let note = v.note.as_ref().map(|n| format!("  [{n}]")).unwrap_or_default();
            out += &format!("{tag} {}: {} predicted {} observed {}{note}\n", v.input, v.theorem, v.predicted, v.observed);
        }
    }
    let verdict = if r.pass { "PASS" } else { "FAIL" };
    out += &format!("{verdict} {}: {} checks, {} failures (seed {})\n", r.suite, r.checks, r.failures, r.seed);
    out
}

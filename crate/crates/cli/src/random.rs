//! Seeded random diagrams and matrices.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use seifert_core::generate::{braid_closure, connected_sum, pretzel_pd, wedge_pd};
use seifert_core::{Diagram, IntMatrix, OuterFace, Sign};

pub type SuiteRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SuiteRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A diagram with the recipe that produced it.
#[derive(Debug, Clone)]
pub struct Sample {
    pub name: String,
    pub diagram: Diagram,
}

fn sign<R: Rng>(rng: &mut R) -> i64 {
    if rng.gen_bool(0.5) {
        1
    } else {
        -1
    }
}

/// Braid word of length `len` using every generator at least once; with
/// `homogeneous`, each generator keeps one sign throughout.
pub fn braid_word<R: Rng>(rng: &mut R, strands: usize, len: usize, homogeneous: bool) -> Vec<i64> {
    let gens: Vec<i64> = (1..strands as i64).collect();
    let signs: Vec<i64> = gens.iter().map(|_| sign(rng)).collect();
    let mut word: Vec<i64> = gens.clone();
    while word.len() < len {
        word.push(rng.gen_range(1..strands as i64));
    }
    word.shuffle(rng);
    for g in word.iter_mut() {
        let s = if homogeneous { signs[*g as usize - 1] } else { sign(rng) };
        *g *= s;
    }
    word
}

fn braid_sample<R: Rng>(rng: &mut R, max_crossings: usize, homogeneous: bool) -> Sample {
    let strands = rng.gen_range(2..=4.min(max_crossings + 1).max(2));
    let len = rng.gen_range(strands - 1..=max_crossings.max(strands - 1));
    let word = braid_word(rng, strands, len, homogeneous);
    let diagram = braid_closure(strands, &word).expect("generators are in range");
    Sample { name: format!("braid {strands} {word:?}"), diagram }
}

fn pretzel_sample<R: Rng>(rng: &mut R, max_crossings: usize, homogeneous: bool) -> Option<Sample> {
    let bands = rng.gen_range(2..=4);
    if max_crossings < bands {
        return None;
    }
    let s = sign(rng);
    let mut left = max_crossings;
    let mut p = Vec::new();
    for k in 0..bands {
        let room = left - (bands - k - 1);
        let a = rng.gen_range(1..=room.min(5)) as i64;
        left -= a as usize;
        p.push(if homogeneous { s * a } else { sign(rng) * a });
    }
    Some(Sample { name: format!("pretzel {}", join(&p)), diagram: pretzel_pd(&p).ok()? })
}

fn wedge_sample<R: Rng>(rng: &mut R, max_crossings: usize) -> Option<Sample> {
    let m = 2 * rng.gen_range(1..=3) * sign(rng);
    let k = 2 * rng.gen_range(1..=3) * sign(rng);
    if (m.abs() + k.abs()) as usize > max_crossings {
        return None;
    }
    Some(Sample { name: format!("wedge {m} {k}"), diagram: wedge_pd(m, k).ok()? })
}

fn join(p: &[i64]) -> String {
    p.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn piece<R: Rng>(rng: &mut R, max_crossings: usize, homogeneous: bool) -> Sample {
    loop {
        let s = match rng.gen_range(0..10) {
            0..=4 => Some(braid_sample(rng, max_crossings, homogeneous)),
            5..=7 => pretzel_sample(rng, max_crossings, homogeneous),
            _ => wedge_sample(rng, max_crossings),
        };
        if let Some(s) = s {
            if s.diagram.crossing_count() > 0 {
                return s;
            }
        }
    }
}

fn sample<R: Rng>(rng: &mut R, max_crossings: usize, homogeneous: bool) -> Sample {
    if max_crossings >= 4 && rng.gen_bool(0.2) {
        let split = rng.gen_range(2..=max_crossings - 2);
        let a = piece(rng, split, homogeneous);
        let b = piece(rng, max_crossings - split, homogeneous);
        let diagram = connected_sum(&a.diagram, &b.diagram).expect("both pieces have crossings");
        return Sample { name: format!("{} + {}", a.name, b.name), diagram };
    }
    piece(rng, max_crossings, homogeneous)
}

/// Homogeneous diagram with at most `max_crossings` crossings: a homogeneous
/// braid closure, a one-signed pretzel, a wedge, or a connected sum of two.
pub fn random_homogeneous<R: Rng>(rng: &mut R, max_crossings: usize) -> Sample {
    sample(rng, max_crossings, true)
}

/// Any diagram from the same families with unconstrained signs, then a few
/// random crossing switches.
pub fn random_diagram<R: Rng>(rng: &mut R, max_crossings: usize) -> Sample {
    let mut s = sample(rng, max_crossings, false);
    let n = s.diagram.crossing_count();
    let flips = rng.gen_range(0..=2.min(n));
    for _ in 0..flips {
        let x = rng.gen_range(0..n);
        s.diagram = s.diagram.switch_crossing(x).expect("index in range").canonical();
        s.name = format!("{} switch {x}", s.name);
    }
    s
}

/// A random face of `d` as the outer face, or the default.
pub fn random_outer_face<R: Rng>(rng: &mut R, d: &Diagram) -> Option<OuterFace> {
    let labels = d.labels();
    if labels.is_empty() || rng.gen_bool(0.3) {
        return None;
    }
    let e = labels[rng.gen_range(0..labels.len())];
    Some(if rng.gen_bool(0.5) { OuterFace::left_of(e) } else { OuterFace::right_of(e) })
}

/// Random weak `eps`-signed row-dominant matrix of order `n`: off-diagonal
/// entries of sign `eps` or zero, diagonal `-eps` times the off-diagonal row
/// mass plus a slack that is zero about a third of the time.
pub fn weak_signed_dominant<R: Rng>(rng: &mut R, n: usize, eps: Sign) -> IntMatrix {
    let e = eps as i64;
    let mut m = IntMatrix::zeros(n, n);
    for i in 0..n {
        let mut mass = 0;
        for j in 0..n {
            if i != j && rng.gen_bool(0.6) {
                let a = rng.gen_range(0..=3);
                m.set(i, j, e * a);
                mass += a;
            }
        }
        let slack = if rng.gen_bool(0.35) { 0 } else { rng.gen_range(0..=2) };
        m.set(i, i, -e * (mass + slack));
    }
    m
}

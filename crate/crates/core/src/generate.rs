//! Diagram families: pretzels, closed braids and connected sums.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::diagram::Diagram;
use crate::error::{Error, Result};
use crate::Sign;

// slots of a crossing drawn as an X, counterclockwise from bottom left
const BL: usize = 0;
const BR: usize = 1;
const TR: usize = 2;
const TL: usize = 3;

type Port = (usize, usize);

/// Builds an oriented diagram from crossings given as four slots in
/// counterclockwise order, where slot `s` is joined through the crossing to
/// `s + 2`, the arcs pair up slots, and every crossing gets the requested sign.
fn from_ports(arcs: &[(Port, Port)], signs: &[Sign]) -> Result<Diagram> {
    let n = signs.len();
    let mut partner = vec![[(usize::MAX, 0); 4]; n];
    for &(a, b) in arcs {
        partner[a.0][a.1] = b;
        partner[b.0][b.1] = a;
    }
    if partner.iter().flatten().any(|p| p.0 == usize::MAX) {
        return Err(Error::Corrupt("unjoined crossing slot".into()));
    }
    let mut label = vec![[0u32; 4]; n];
    let mut incoming = vec![[false; 4]; n];
    let mut next = 1u32;
    for c0 in 0..n {
        for s0 in 0..4 {
            if label[c0][s0] != 0 {
                continue;
            }
            // walk the component entering at (c0, s0)
            let (mut c, mut s) = (c0, s0);
            loop {
                incoming[c][s] = true;
                let out = (s + 2) % 4;
                let (nc, ns) = partner[c][out];
                label[c][out] = next;
                label[nc][ns] = next;
                next += 1;
                if (nc, ns) == (c0, s0) {
                    break;
                }
                c = nc;
                s = ns;
            }
        }
    }
    let mut tuples = Vec::with_capacity(n);
    let mut fwd = Vec::with_capacity(n);
    for c in 0..n {
        let ins: Vec<usize> = (0..4).filter(|&s| incoming[c][s]).collect();
        let (x, y) = (ins[0], ins[1]);
        // under-strand entering at u with the over-strand entering at u + 1
        // gives a positive crossing
        let under = match (signs[c] > 0, (x + 1) % 4 == y) {
            (true, true) | (false, false) => x,
            _ => y,
        };
        tuples.push([0, 1, 2, 3].map(|k| label[c][(under + k) % 4]));
        fwd.push(signs[c] > 0);
    }
    Diagram::with_orientation(tuples, fwd, 0)
}

/// Pretzel diagram with vertical twist bands of `|p_i|` crossings; band `i`
/// carries crossings of sign `sign(p_i)`.
pub fn pretzel_pd(params: &[i64]) -> Result<Diagram> {
    if params.len() < 2 {
        return Err(Error::BadParameters("a pretzel needs at least two bands".into()));
    }
    if params.contains(&0) {
        return Err(Error::BadParameters(format!("zero band in {params:?}")));
    }
    let mut signs = Vec::new();
    let mut bands = Vec::new();
    for &p in params {
        let first = signs.len();
        for _ in 0..p.unsigned_abs() {
            signs.push(if p > 0 { 1 } else { -1 });
        }
        bands.push((first, signs.len() - 1));
    }
    let mut arcs = Vec::new();
    for &(lo, hi) in &bands {
        for c in lo..hi {
            arcs.push(((c, TL), (c + 1, BL)));
            arcs.push(((c, TR), (c + 1, BR)));
        }
    }
    for w in bands.windows(2) {
        arcs.push(((w[0].1, TR), (w[1].1, TL)));
        arcs.push(((w[0].0, BR), (w[1].0, BL)));
    }
    let (first, last) = (bands[0], bands[bands.len() - 1]);
    arcs.push(((first.1, TL), (last.1, TR)));
    arcs.push(((first.0, BL), (last.0, BR)));
    Ok(from_ports(&arcs, &signs)?.canonical())
}

/// `D(m, k) = P(m, e, ..., e)` with `|k|` unit bands of sign `e = sign(k)`.
pub fn wedge_pd(m: i64, k: i64) -> Result<Diagram> {
    if m == 0 || k == 0 {
        return Err(Error::BadParameters("wedge parameters must be nonzero".into()));
    }
    let mut p = vec![m];
    p.extend(core::iter::repeat_n(k.signum(), k.unsigned_abs() as usize));
    pretzel_pd(&p)
}

/// Closure of a braid word on `strands` strands; generator `i` (1-based)
/// with sign `s` is written `s * i`.
pub fn braid_closure(strands: usize, word: &[i64]) -> Result<Diagram> {
    if strands == 0 {
        return Err(Error::BadParameters("no strands".into()));
    }
    if let Some(&g) = word.iter().find(|&&g| g == 0 || g.unsigned_abs() as usize >= strands) {
        return Err(Error::BadParameters(format!("generator {g} out of range for {strands} strands")));
    }
    let mut cur: Vec<u32> = (1..=strands as u32).collect();
    let mut next = strands as u32 + 1;
    let mut tuples = Vec::with_capacity(word.len());
    let mut fwd = Vec::with_capacity(word.len());
    for &g in word {
        let i = g.unsigned_abs() as usize - 1;
        let (a, b) = (cur[i], cur[i + 1]);
        let (a2, b2) = (next, next + 1);
        next += 2;
        if g > 0 {
            tuples.push([a, b, a2, b2]);
        } else {
            tuples.push([b, a2, b2, a]);
        }
        fwd.push(g > 0);
        cur[i] = b2;
        cur[i + 1] = a2;
    }
    // close up: the strand leaving the top at position k is the one that
    // entered the bottom at position k
    let mut map: Vec<u32> = (0..next).collect();
    let mut free = 0;
    for (k, &top) in cur.iter().enumerate() {
        let bottom = k as u32 + 1;
        if top == bottom {
            free += 1;
        } else {
            map[top as usize] = bottom;
        }
    }
    // identifications can chain only through untouched strands, which are
    // excluded above
    let tuples: Vec<[u32; 4]> = tuples.into_iter().map(|t| t.map(|l| map[l as usize])).collect();
    let closed = Diagram::with_orientation(tuples, fwd, free)?;
    Ok(closed.canonical())
}

/// Standard diagram of the `(2, q)` torus link; `q < 0` gives negative crossings.
pub fn torus2(q: i64) -> Result<Diagram> {
    if q == 0 {
        return Err(Error::BadParameters("torus2 needs q != 0".into()));
    }
    braid_closure(2, &vec![q.signum(); q.unsigned_abs() as usize])
}

/// Band sum along edge `e1` of `a` and edge `e2` of `b`: the two edges
/// exchange their heads.
pub fn connected_sum_at(a: &Diagram, e1: u32, b: &Diagram, e2: u32) -> Result<Diagram> {
    let offset = a.labels().last().copied().unwrap_or(0);
    let mut tuples: Vec<[u32; 4]> = a.crossings().to_vec();
    let shifted: Vec<[u32; 4]> = b.crossings().iter().map(|t| t.map(|l| l + offset)).collect();
    let e2s = e2 + offset;
    let head_a = a.tail_of(e1).map(|t| a.mate(t)).ok_or(Error::BadParameters(format!("no edge {e1}")))?;
    let head_b = b.tail_of(e2).map(|t| b.mate(t)).ok_or(Error::BadParameters(format!("no edge {e2}")))?;
    tuples[head_a / 4][head_a % 4] = e2s;
    let mut tb = shifted;
    tb[head_b / 4][head_b % 4] = e1;
    tuples.extend(tb);
    let mut fwd = a.over_forward().to_vec();
    fwd.extend_from_slice(b.over_forward());
    Ok(Diagram::with_orientation(tuples, fwd, a.unknots() + b.unknots())?.canonical())
}

/// Connected sum along the first edges of both diagrams.
pub fn connected_sum(a: &Diagram, b: &Diagram) -> Result<Diagram> {
    if a.crossing_count() == 0 {
        return Ok(b.clone());
    }
    if b.crossing_count() == 0 {
        return Ok(a.clone());
    }
    connected_sum_at(a, a.labels()[0], b, b.labels()[0])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::conway::conway_skein;
    use alloc::string::ToString;

    #[test]
    fn pretzel_anchor() {
        let d = pretzel_pd(&[1, 1, 1]).unwrap();
        assert_eq!(d.crossing_count(), 3);
        assert_eq!(d.writhe(), 3);
        assert_eq!(d.component_count(), 1);
        assert_eq!(conway_skein(&d).unwrap().to_string(), "1 + z^2");
    }

    #[test]
    fn figure_eight_pretzel() {
        let d = pretzel_pd(&[2, -1, -1]).unwrap();
        assert_eq!(d.crossing_count(), 4);
        assert_eq!(conway_skein(&d).unwrap().to_string(), "1 - z^2");
    }

    #[test]
    fn torus_links() {
        assert_eq!(conway_skein(&torus2(3).unwrap()).unwrap().to_string(), "1 + z^2");
        assert_eq!(torus2(4).unwrap().component_count(), 2);
        assert_eq!(conway_skein(&torus2(5).unwrap()).unwrap().to_string(), "1 + 3*z^2 + z^4");
        assert_eq!(torus2(-5).unwrap().writhe(), -5);
    }

    #[test]
    fn sums_multiply() {
        let t = torus2(3).unwrap();
        let g = connected_sum(&t, &t).unwrap();
        assert_eq!(g.crossing_count(), 6);
        assert_eq!(conway_skein(&g).unwrap().to_string(), "1 + 2*z^2 + z^4");
    }

    #[test]
    fn bad_parameters() {
        assert!(pretzel_pd(&[1, 0, 1]).is_err());
        assert!(pretzel_pd(&[3]).is_err());
        assert!(braid_closure(2, &[2]).is_err());
    }
}

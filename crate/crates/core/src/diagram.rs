//! Oriented link diagrams in planar-diagram (PD) notation.
//!
//! A crossing is a 4-tuple of edge labels listed counterclockwise starting
//! at the incoming under-strand. Internally every tuple position is a
//! *dart*: dart `4c + p` leaves crossing `c` through position `p`. Following
//! the edge of a dart and turning clockwise at the far crossing traces the
//! face on the dart's left, so bounded faces come out counterclockwise.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::dsu::Dsu;
use crate::error::{Error, Result};
use crate::Sign;

pub type Dart = usize;

#[inline]
pub fn dart(crossing: usize, pos: usize) -> Dart {
    4 * crossing + pos
}

/// Which face of the sphere embedding is taken as the unbounded one.
///
/// The face lies on the left (or right) of the oriented edge `edge`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OuterFace {
    pub edge: u32,
    pub left: bool,
}

impl OuterFace {
    pub fn left_of(edge: u32) -> Self {
        OuterFace { edge, left: true }
    }
    pub fn right_of(edge: u32) -> Self {
        OuterFace { edge, left: false }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Diagram {
    crossings: Vec<[u32; 4]>,
    /// `true` when the over-strand runs from position 1 to position 3.
    over_forward: Vec<bool>,
    /// Crossingless unknotted components, disjoint from everything else.
    unknots: usize,
    mate: Vec<Dart>,
}

impl fmt::Debug for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Diagram({}", self.to_pd_string())?;
        if self.unknots > 0 {
            write!(f, " + {} unknots", self.unknots)?;
        }
        f.write_str(")")
    }
}

impl Diagram {
    /// A single crossingless unknot.
    pub fn unknot() -> Self {
        Self::unlink(1)
    }

    pub fn unlink(n: usize) -> Self {
        Diagram { crossings: Vec::new(), over_forward: Vec::new(), unknots: n, mate: Vec::new() }
    }

    /// Builds a diagram from PD tuples, deriving the orientation of every
    /// component from its under-passes (position 0 enters, position 2 leaves).
    /// Components that never pass under are oriented along increasing
    /// edge labels.
    pub fn from_pd(crossings: Vec<[u32; 4]>, unknots: usize) -> Result<Self> {
        let mate = compute_mates(&crossings)?;
        let n = crossings.len();
        // direction of each dart: Some(true) = incoming
        let mut incoming: Vec<Option<bool>> = vec![None; 4 * n];
        let mut over_forward: Vec<Option<bool>> = vec![None; n];
        let mut visited = vec![false; 4 * n];

        let set_in = |d: Dart,
                      incoming: &mut Vec<Option<bool>>,
                      over_forward: &mut Vec<Option<bool>>|
         -> Result<()> {
            let (c, p) = (d / 4, d % 4);
            let want = match p {
                0 => true,
                2 => false,
                1 => {
                    if let Some(f) = over_forward[c] {
                        f
                    } else {
                        over_forward[c] = Some(true);
                        true
                    }
                }
                _ => {
                    if let Some(f) = over_forward[c] {
                        !f
                    } else {
                        over_forward[c] = Some(false);
                        true
                    }
                }
            };
            if !want {
                return Err(Error::Orientation(format!(
                    "edge {} enters crossing {} through an outgoing position",
                    crossings[c][p], c
                )));
            }
            if incoming[d] == Some(false) {
                return Err(Error::Orientation(format!("inconsistent direction at crossing {c}")));
            }
            incoming[d] = Some(true);
            Ok(())
        };

        // orient components that pass under somewhere, starting at an outgoing under dart
        let mut starts: Vec<Dart> = (0..n).map(|c| dart(c, 2)).collect();
        // then components made of over-passes only
        let mut extra: Vec<Dart> = Vec::new();
        for d in 0..4 * n {
            if d % 2 == 1 {
                extra.push(d);
            }
        }
        starts.append(&mut extra);

        for &start in &starts {
            if visited[start] {
                continue;
            }
            let first_out = if start % 4 == 2 {
                start
            } else {
                // over-only component: pick the end of its smallest label so
                // that the strand continues into the next larger label
                let comp = strand_cycle(&crossings, &mate, start);
                if comp.iter().any(|&d| d % 2 == 0) {
                    continue; // reached later from its under dart
                }
                let mut labels: Vec<u32> = comp.iter().map(|&d| crossings[d / 4][d % 4]).collect();
                labels.sort_unstable();
                labels.dedup();
                let lo = labels[0];
                let next = labels.get(1).copied().unwrap_or(lo);
                let mut chosen = None;
                for &d in &comp {
                    if crossings[d / 4][d % 4] == lo {
                        let t = through(d);
                        if crossings[t / 4][t % 4] == next {
                            chosen = Some(d);
                            break;
                        }
                    }
                }
                let entry = chosen.ok_or_else(|| Error::Orientation("cannot orient component".into()))?;
                // entry is incoming; its continuation is the first outgoing dart
                set_in(entry, &mut incoming, &mut over_forward)?;
                through(entry)
            };
            // walk: out dart -> mate (incoming) -> through (outgoing)
            let mut out = first_out;
            loop {
                if visited[out] {
                    break;
                }
                visited[out] = true;
                if incoming[out] == Some(true) {
                    return Err(Error::Orientation(format!("inconsistent direction at crossing {}", out / 4)));
                }
                incoming[out] = Some(false);
                let inn = mate[out];
                set_in(inn, &mut incoming, &mut over_forward)?;
                visited[inn] = true;
                out = through(inn);
            }
        }
        let over_forward: Vec<bool> = over_forward
            .into_iter()
            .map(|f| f.ok_or_else(|| Error::Orientation("unoriented crossing".into())))
            .collect::<Result<_>>()?;
        let d = Diagram { crossings, over_forward, unknots, mate };
        d.check_orientation()?;
        d.check_euler()?;
        Ok(d)
    }

    /// Builds a diagram with explicitly given over-strand directions.
    pub fn with_orientation(crossings: Vec<[u32; 4]>, over_forward: Vec<bool>, unknots: usize) -> Result<Self> {
        if crossings.len() != over_forward.len() {
            return Err(Error::Orientation("orientation vector has wrong length".into()));
        }
        let mate = compute_mates(&crossings)?;
        let d = Diagram { crossings, over_forward, unknots, mate };
        d.check_orientation()?;
        d.check_euler()?;
        Ok(d)
    }

    fn check_orientation(&self) -> Result<()> {
        for d in 0..self.mate.len() {
            if self.is_incoming(d) == self.is_incoming(self.mate[d]) {
                return Err(Error::Orientation(format!(
                    "edge {} has both ends {}",
                    self.label(d),
                    if self.is_incoming(d) { "incoming" } else { "outgoing" }
                )));
            }
        }
        Ok(())
    }

    fn check_euler(&self) -> Result<()> {
        let n = self.crossings.len() as i64;
        if n == 0 {
            return Ok(());
        }
        let (_, faces) = self.faces();
        let k = self.crossing_classes().1 as i64;
        let found = n - 2 * n + faces as i64;
        if found != 2 * k {
            return Err(Error::Euler { expected: 2 * k, found });
        }
        Ok(())
    }

    pub fn crossings(&self) -> &[[u32; 4]] {
        &self.crossings
    }

    pub fn over_forward(&self) -> &[bool] {
        &self.over_forward
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn unknots(&self) -> usize {
        self.unknots
    }

    pub fn label(&self, d: Dart) -> u32 {
        self.crossings[d / 4][d % 4]
    }

    pub fn mate(&self, d: Dart) -> Dart {
        self.mate[d]
    }

    pub fn dart_count(&self) -> usize {
        self.mate.len()
    }

    pub fn is_incoming(&self, d: Dart) -> bool {
        match d % 4 {
            0 => true,
            2 => false,
            1 => self.over_forward[d / 4],
            _ => !self.over_forward[d / 4],
        }
    }

    /// Dart at which the oriented edge `label` leaves its tail crossing.
    pub fn tail_of(&self, label: u32) -> Option<Dart> {
        (0..self.mate.len()).find(|&d| self.label(d) == label && !self.is_incoming(d))
    }

    pub fn labels(&self) -> Vec<u32> {
        let mut v: Vec<u32> = self.crossings.iter().flatten().copied().collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i >= self.crossings.len() {
            return Err(Error::IndexOutOfRange { index: i, len: self.crossings.len() });
        }
        Ok(())
    }

    /// +1 when the over-strand runs from position 1 to position 3.
    pub fn crossing_sign(&self, i: usize) -> Result<Sign> {
        self.check_index(i)?;
        Ok(self.sign(i))
    }

    pub(crate) fn sign(&self, i: usize) -> Sign {
        if self.over_forward[i] {
            1
        } else {
            -1
        }
    }

    pub fn signs(&self) -> Vec<Sign> {
        (0..self.crossings.len()).map(|i| self.sign(i)).collect()
    }

    pub fn writhe(&self) -> i64 {
        self.signs().iter().map(|&s| s as i64).sum()
    }

    /// Face permutation successor: the next dart along the face on the left.
    pub fn face_next(&self, d: Dart) -> Dart {
        let m = self.mate[d];
        dart(m / 4, (m % 4 + 3) % 4)
    }

    /// Face id of every dart and the number of faces.
    pub fn faces(&self) -> (Vec<usize>, usize) {
        let nd = self.mate.len();
        let mut face = vec![usize::MAX; nd];
        let mut k = 0;
        for s in 0..nd {
            if face[s] != usize::MAX {
                continue;
            }
            let mut d = s;
            while face[d] == usize::MAX {
                face[d] = k;
                d = self.face_next(d);
            }
            k += 1;
        }
        (face, k)
    }

    /// Face containing the designated outer point.
    pub fn outer_face_dart(&self, outer: Option<OuterFace>) -> Result<Dart> {
        let of = match outer {
            Some(o) => o,
            None => {
                let labels = self.labels();
                let l = if labels.contains(&1) { 1 } else { *labels.first().ok_or(Error::OuterFace(1))? };
                OuterFace::left_of(l)
            }
        };
        let tail = self.tail_of(of.edge).ok_or(Error::OuterFace(of.edge))?;
        Ok(if of.left { tail } else { self.mate[tail] })
    }

    /// Connectivity classes of crossings (sharing an edge).
    pub(crate) fn crossing_classes(&self) -> (Vec<usize>, usize) {
        let n = self.crossings.len();
        let mut dsu = Dsu::new(n);
        for d in 0..self.mate.len() {
            dsu.union(d / 4, self.mate[d] / 4);
        }
        dsu.classes()
    }

    /// Number of connected pieces of the projection (free unknots count once each).
    pub fn split_pieces(&self) -> usize {
        let k = if self.crossings.is_empty() { 0 } else { self.crossing_classes().1 };
        k + self.unknots
    }

    pub fn is_connected(&self) -> bool {
        self.split_pieces() == 1
    }

    /// Link components as cyclic lists of edge labels in orientation order,
    /// each starting at its smallest label; components sorted by that label.
    pub fn components(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.mate.len()];
        let mut comps = Vec::new();
        let mut tails: Vec<(u32, Dart)> = (0..self.mate.len())
            .filter(|&d| !self.is_incoming(d))
            .map(|d| (self.label(d), d))
            .collect();
        tails.sort_unstable();
        for &(_, t) in &tails {
            if seen[t] {
                continue;
            }
            let mut comp = Vec::new();
            let mut out = t;
            while !seen[out] {
                seen[out] = true;
                comp.push(self.label(out));
                out = through(self.mate[out]);
            }
            comps.push(comp);
        }
        comps
    }

    pub fn component_count(&self) -> usize {
        self.components().len() + self.unknots
    }

    /// Relabels edges `1..=2c` along each component in orientation order.
    pub fn canonical(&self) -> Diagram {
        let comps = self.components();
        let mut map: BTreeMap<u32, u32> = BTreeMap::new();
        let mut next = 1;
        for comp in &comps {
            for &l in comp {
                map.insert(l, next);
                next += 1;
            }
        }
        let crossings = self.crossings.iter().map(|t| t.map(|l| map[&l])).collect();
        Diagram { crossings, over_forward: self.over_forward.clone(), unknots: self.unknots, mate: self.mate.clone() }
    }

    /// Oriented smoothing at crossing `i`, relabeled canonically.
    pub fn smooth_crossing(&self, i: usize) -> Result<Diagram> {
        self.check_index(i)?;
        let fwd = self.over_forward[i];
        let (in_over, out_over) = if fwd { (1, 3) } else { (3, 1) };
        let labels = self.labels();
        let index: BTreeMap<u32, usize> = labels.iter().enumerate().map(|(k, &l)| (l, k)).collect();
        let mut dsu = Dsu::new(labels.len());
        let t = self.crossings[i];
        dsu.union(index[&t[0]], index[&t[out_over]]);
        dsu.union(index[&t[in_over]], index[&t[2]]);
        let (cls, k) = dsu.classes();
        let mut remaining = vec![0usize; k];
        let mut crossings = Vec::with_capacity(self.crossings.len() - 1);
        let mut over_forward = Vec::with_capacity(self.crossings.len() - 1);
        for (c, tup) in self.crossings.iter().enumerate() {
            if c == i {
                continue;
            }
            let nt = tup.map(|l| cls[index[&l]] as u32 + 1);
            for &l in &nt {
                remaining[l as usize - 1] += 1;
            }
            crossings.push(nt);
            over_forward.push(self.over_forward[c]);
        }
        let loops = remaining.iter().filter(|&&r| r == 0).count();
        let d = Diagram::with_orientation(crossings, over_forward, self.unknots + loops)?;
        Ok(d.canonical())
    }

    /// Exchanges over and under at crossing `i`; labels are kept.
    pub fn switch_crossing(&self, i: usize) -> Result<Diagram> {
        self.check_index(i)?;
        let mut crossings = self.crossings.clone();
        let mut over_forward = self.over_forward.clone();
        let [a, b, c, d] = crossings[i];
        if over_forward[i] {
            crossings[i] = [b, c, d, a];
            over_forward[i] = false;
        } else {
            crossings[i] = [d, a, b, c];
            over_forward[i] = true;
        }
        Diagram::with_orientation(crossings, over_forward, self.unknots)
    }

    /// Reflection in the projection plane: every crossing sign flips.
    pub fn mirror(&self) -> Diagram {
        let crossings: Vec<[u32; 4]> = self.crossings.iter().map(|&[a, b, c, d]| [a, d, c, b]).collect();
        let over_forward = self.over_forward.iter().map(|f| !f).collect();
        let mate = compute_mates(&crossings).expect("mirror keeps labels");
        Diagram { crossings, over_forward, unknots: self.unknots, mate }
    }

    pub fn to_pd_string(&self) -> String {
        let mut s = String::new();
        for (k, t) in self.crossings.iter().enumerate() {
            if k > 0 {
                s.push(' ');
            }
            s.push_str(&format!("X({},{},{},{})", t[0], t[1], t[2], t[3]));
        }
        s
    }

    /// Key used by memo tables: canonical tuples, orientation bits and unknots.
    pub fn memo_key(&self) -> (Vec<[u32; 4]>, Vec<bool>, usize) {
        let c = self.canonical();
        (c.crossings, c.over_forward, c.unknots)
    }
}

#[inline]
pub(crate) fn through(d: Dart) -> Dart {
    dart(d / 4, (d % 4 + 2) % 4)
}

fn compute_mates(crossings: &[[u32; 4]]) -> Result<Vec<Dart>> {
    let mut seen: BTreeMap<u32, Vec<Dart>> = BTreeMap::new();
    for (c, t) in crossings.iter().enumerate() {
        for (p, &l) in t.iter().enumerate() {
            if l == 0 {
                return Err(Error::Parse("edge labels must be positive".into()));
            }
            seen.entry(l).or_default().push(dart(c, p));
        }
    }
    let mut mate = vec![0; 4 * crossings.len()];
    for (&label, ds) in &seen {
        if ds.len() != 2 {
            return Err(Error::EdgeCount { label, count: ds.len() });
        }
        mate[ds[0]] = ds[1];
        mate[ds[1]] = ds[0];
    }
    Ok(mate)
}

/// Darts of the strand cycle through `start`, ignoring orientation.
fn strand_cycle(crossings: &[[u32; 4]], mate: &[Dart], start: Dart) -> Vec<Dart> {
    let _ = crossings;
    let mut out = Vec::new();
    let mut d = start;
    loop {
        out.push(d);
        let m = mate[d];
        out.push(m);
        d = through(m);
        if d == start {
            break;
        }
    }
    out
}

/// Parses whitespace/comma separated `X(a,b,c,d)` (or `X[a,b,c,d]`) tokens.
/// Empty input is the crossingless unknot.
pub fn parse_pd(text: &str) -> Result<Diagram> {
    let tuples = parse_pd_tuples(text)?;
    if tuples.is_empty() {
        return Ok(Diagram::unknot());
    }
    Diagram::from_pd(tuples, 0)
}

pub fn parse_pd_tuples(text: &str) -> Result<Vec<[u32; 4]>> {
    let mut s = text.trim();
    if let Some(rest) = s.strip_prefix("PD") {
        let rest = rest.trim();
        let inner = rest
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .or_else(|| rest.strip_prefix('(').and_then(|r| r.strip_suffix(')')))
            .ok_or_else(|| Error::Parse("unbalanced PD[...] wrapper".into()))?;
        s = inner;
    }
    let mut out = Vec::new();
    let mut rest = s;
    loop {
        rest = rest.trim_start_matches(|c: char| c.is_whitespace() || c == ',');
        if rest.is_empty() {
            break;
        }
        let body = rest
            .strip_prefix('X')
            .ok_or_else(|| Error::Parse(format!("expected X(...) at `{}`", snippet(rest))))?;
        let (open, close) = match body.chars().next() {
            Some('(') => ('(', ')'),
            Some('[') => ('[', ']'),
            _ => return Err(Error::Parse(format!("expected `(` after X at `{}`", snippet(rest)))),
        };
        let end = body.find(close).ok_or_else(|| Error::Parse(format!("unclosed `{open}` at `{}`", snippet(rest))))?;
        let inner = &body[1..end];
        let nums: Vec<&str> = inner.split(',').map(str::trim).collect();
        if nums.len() != 4 {
            return Err(Error::Parse(format!("crossing `X{open}{inner}{close}` needs 4 labels")));
        }
        let mut t = [0u32; 4];
        for (k, n) in nums.iter().enumerate() {
            t[k] = n.parse().map_err(|_| Error::Parse(format!("bad edge label `{n}`")))?;
        }
        out.push(t);
        rest = &body[end + 1..];
    }
    Ok(out)
}

fn snippet(s: &str) -> &str {
    match s.char_indices().nth(16) {
        Some((i, _)) => &s[..i],
        None => s,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) const TREFOIL: &str = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";
    const HOPF: &str = "X(1,3,2,4) X(3,1,4,2)";
    const FIGURE8: &str = "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)";

    #[test]
    fn parse_trefoil() {
        let d = parse_pd(TREFOIL).unwrap();
        assert_eq!(d.crossing_count(), 3);
        assert_eq!(d.component_count(), 1);
        assert_eq!(d.signs(), vec![1, 1, 1]);
    }

    #[test]
    fn parse_hopf() {
        let d = parse_pd(HOPF).unwrap();
        assert_eq!(d.crossing_count(), 2);
        assert_eq!(d.component_count(), 2);
        let s = d.signs();
        assert_eq!(s[0], s[1]);
    }

    #[test]
    fn duplicate_edge_count() {
        let e = parse_pd("X(1,4,2,5) X(3,6,4,1)").unwrap_err();
        assert!(matches!(e, Error::EdgeCount { .. }), "{e:?}");
    }

    #[test]
    fn malformed() {
        assert!(matches!(parse_pd("X(1,2,3)"), Err(Error::Parse(_))));
        assert!(matches!(parse_pd("Y(1,2,3,4)"), Err(Error::Parse(_))));
        assert!(matches!(parse_pd("X(1,2,3,4"), Err(Error::Parse(_))));
    }

    #[test]
    fn bracket_and_wrapper_syntax() {
        let d = parse_pd("PD[X[1,4,2,5], X[3,6,4,1], X[5,2,6,3]]").unwrap();
        assert_eq!(d, parse_pd(TREFOIL).unwrap());
    }

    #[test]
    fn euler_failure() {
        // labels pair up but the rotation is not spherical
        let e = parse_pd("X(1,2,3,4) X(2,3,4,1)").unwrap_err();
        assert_eq!(e, Error::Euler { expected: 2, found: 0 });
    }

    #[test]
    fn mirror_flips_signs() {
        let d = parse_pd(TREFOIL).unwrap();
        let m = d.mirror();
        assert_eq!(m.signs(), vec![-1, -1, -1]);
        assert_eq!(parse_pd("X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)").unwrap().signs(), vec![-1, -1, -1]);
        // the reversed-and-switched tuples are a rotated copy, so signs are kept
        assert_eq!(parse_pd("X(4,1,5,2) X(6,3,1,4) X(2,5,3,6)").unwrap().signs(), vec![1, 1, 1]);
    }

    #[test]
    fn sign_out_of_range() {
        let d = parse_pd(TREFOIL).unwrap();
        assert!(matches!(d.crossing_sign(3), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn smoothing_trefoil_gives_hopf() {
        let d = parse_pd(TREFOIL).unwrap();
        for i in 0..3 {
            let s = d.smooth_crossing(i).unwrap();
            assert_eq!(s.crossing_count(), 2);
            assert_eq!(s.component_count(), 2);
            assert_eq!(s.signs(), vec![1, 1]);
        }
    }

    #[test]
    fn smoothing_hopf_gives_kinked_unknot() {
        let d = parse_pd(HOPF).unwrap();
        let s = d.smooth_crossing(0).unwrap();
        assert_eq!(s.crossing_count(), 1);
        assert_eq!(s.component_count(), 1);
        let s2 = s.smooth_crossing(0).unwrap();
        assert_eq!(s2.crossing_count(), 0);
        assert_eq!(s2.unknots(), 2);
    }

    #[test]
    fn switch_is_involution() {
        let d = parse_pd(FIGURE8).unwrap();
        for i in 0..4 {
            let s = d.switch_crossing(i).unwrap();
            assert_eq!((s.writhe() - d.writhe()).abs(), 2);
            assert_eq!(s.switch_crossing(i).unwrap().canonical(), d.canonical());
        }
    }

    #[test]
    fn figure_eight_components() {
        let d = parse_pd(FIGURE8).unwrap();
        assert_eq!(d.component_count(), 1);
        assert_eq!(d.writhe(), 0);
    }

    #[test]
    fn empty_is_unknot() {
        let d = parse_pd("").unwrap();
        assert_eq!(d.component_count(), 1);
        assert!(d.is_connected());
    }
}

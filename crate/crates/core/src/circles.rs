//! Seifert's algorithm: circles, their nesting in the plane, and the
//! surface counts that follow from them.

use alloc::vec;
use alloc::vec::Vec;

use crate::diagram::{dart, Dart, Diagram, OuterFace};
use crate::dsu::Dsu;
use crate::error::{Error, Result};

/// One pass of a Seifert circle through a crossing.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Passage {
    pub crossing: usize,
    /// Position the circle enters through.
    pub enter: usize,
    /// Position the circle leaves through.
    pub leave: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Circle {
    /// Edge labels in orientation order.
    pub edges: Vec<u32>,
    pub passages: Vec<Passage>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CircleNesting {
    pub circles: Vec<Circle>,
    /// Immediately containing circle.
    pub parent: Vec<Option<usize>>,
    pub height: Vec<usize>,
    /// Circle runs counterclockwise in the plane (its inside is on its left).
    pub ccw: Vec<bool>,
    /// Complementary region on each side of each circle.
    pub left_region: Vec<usize>,
    pub right_region: Vec<usize>,
    /// Region holding the point at infinity.
    pub outer_region: usize,
    pub region_count: usize,
    /// Per crossing: circle through the arc starting at position 0, then the other.
    pub crossing_circles: Vec<[usize; 2]>,
    /// Per crossing: complementary region that holds its band.
    pub band_region: Vec<usize>,
    /// Diagram face id of every dart and the region each face lies in.
    pub dart_face: Vec<usize>,
    pub face_region: Vec<usize>,
    /// Dart whose left face is the outer face (None for crossingless input).
    pub outer_dart: Option<Dart>,
}

/// Which statement of the height trichotomy holds for two circles joined by a band.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HeightRelation {
    FirstContainsSecond,
    SecondContainsFirst,
    SameHeight,
}

/// Output position of the oriented smoothing for a strand entering at `pos`.
pub(crate) fn smooth_exit(over_forward: bool, pos: usize) -> usize {
    match (over_forward, pos) {
        (true, 0) => 3,
        (true, 1) => 2,
        (false, 0) => 1,
        (false, 3) => 2,
        _ => unreachable!("position {pos} is not incoming"),
    }
}

pub fn seifert_circles(d: &Diagram, outer: Option<OuterFace>) -> Result<CircleNesting> {
    if !d.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = d.crossing_count();
    if n == 0 {
        return Ok(CircleNesting {
            circles: vec![Circle { edges: Vec::new(), passages: Vec::new() }],
            parent: vec![None],
            height: vec![0],
            ccw: vec![true],
            left_region: vec![1],
            right_region: vec![0],
            outer_region: 0,
            region_count: 2,
            crossing_circles: Vec::new(),
            band_region: Vec::new(),
            dart_face: Vec::new(),
            face_region: Vec::new(),
            outer_dart: None,
        });
    }
    let fwd = d.over_forward();

    // circles, discovered from tails in label order
    let mut tails: Vec<(u32, Dart)> = (0..d.dart_count()).filter(|&t| !d.is_incoming(t)).map(|t| (d.label(t), t)).collect();
    tails.sort_unstable();
    let mut circle_of_tail = vec![usize::MAX; d.dart_count()];
    let mut circles = Vec::new();
    let mut crossing_circles = vec![[usize::MAX; 2]; n];
    for &(_, t0) in &tails {
        if circle_of_tail[t0] != usize::MAX {
            continue;
        }
        let id = circles.len();
        let mut circle = Circle { edges: Vec::new(), passages: Vec::new() };
        let mut t = t0;
        while circle_of_tail[t] == usize::MAX {
            circle_of_tail[t] = id;
            circle.edges.push(d.label(t));
            let h = d.mate(t);
            let (c, p) = (h / 4, h % 4);
            let q = smooth_exit(fwd[c], p);
            circle.passages.push(Passage { crossing: c, enter: p, leave: q });
            crossing_circles[c][if p == 0 { 0 } else { 1 }] = id;
            t = dart(c, q);
        }
        circles.push(circle);
    }
    let s = circles.len();
    for (c, cc) in crossing_circles.iter().enumerate() {
        if cc[0] == cc[1] {
            return Err(Error::Corrupt(alloc::format!("crossing {c} joins a Seifert circle to itself")));
        }
    }

    // complementary regions of the circles: faces merged across bands
    let (dart_face, nf) = d.faces();
    let mut dsu = Dsu::new(nf);
    for c in 0..n {
        let (a, b) = if fwd[c] { (0, 2) } else { (1, 3) };
        dsu.union(dart_face[dart(c, a)], dart_face[dart(c, b)]);
    }
    let (face_region, region_count) = dsu.classes();
    if region_count != s + 1 {
        return Err(Error::Corrupt(alloc::format!("{region_count} regions for {s} circles")));
    }
    let band_region: Vec<usize> =
        (0..n).map(|c| face_region[dart_face[dart(c, if fwd[c] { 0 } else { 1 })]]).collect();

    let mut left_region = vec![usize::MAX; s];
    let mut right_region = vec![usize::MAX; s];
    for (t, &id) in circle_of_tail.iter().enumerate() {
        if id == usize::MAX {
            continue;
        }
        let l = face_region[dart_face[t]];
        let r = face_region[dart_face[d.mate(t)]];
        if left_region[id] != usize::MAX && (left_region[id], right_region[id]) != (l, r) {
            return Err(Error::Corrupt("circle borders more than two regions".into()));
        }
        left_region[id] = l;
        right_region[id] = r;
    }
    for id in 0..s {
        if left_region[id] == right_region[id] {
            return Err(Error::Corrupt("circle with the same region on both sides".into()));
        }
    }

    let outer_dart = d.outer_face_dart(outer)?;
    let outer_region = face_region[dart_face[outer_dart]];

    // region/circle tree rooted at the outer region
    let mut circles_at: Vec<Vec<usize>> = vec![Vec::new(); region_count];
    for id in 0..s {
        circles_at[left_region[id]].push(id);
        circles_at[right_region[id]].push(id);
    }
    let mut parent_region = vec![usize::MAX; s];
    let mut owner = vec![usize::MAX; region_count]; // circle whose inside the region is
    let mut height = vec![0usize; s];
    let mut parent = vec![None; s];
    let mut region_seen = vec![false; region_count];
    region_seen[outer_region] = true;
    let mut queue = alloc::collections::VecDeque::new();
    queue.push_back(outer_region);
    while let Some(r) = queue.pop_front() {
        for &id in &circles_at[r] {
            if parent_region[id] != usize::MAX {
                continue;
            }
            parent_region[id] = r;
            let up = owner[r];
            if up != usize::MAX {
                parent[id] = Some(up);
                height[id] = height[up] + 1;
            }
            let inner = if left_region[id] == r { right_region[id] } else { left_region[id] };
            if region_seen[inner] {
                return Err(Error::Corrupt("region adjacency is not a tree".into()));
            }
            region_seen[inner] = true;
            owner[inner] = id;
            queue.push_back(inner);
        }
    }
    if parent_region.contains(&usize::MAX) {
        return Err(Error::Corrupt("unreachable Seifert circle".into()));
    }
    let ccw = (0..s).map(|id| left_region[id] != parent_region[id]).collect();

    Ok(CircleNesting {
        circles,
        parent,
        height,
        ccw,
        left_region,
        right_region,
        outer_region,
        region_count,
        crossing_circles,
        band_region,
        dart_face,
        face_region,
        outer_dart: Some(outer_dart),
    })
}

impl CircleNesting {
    pub fn len(&self) -> usize {
        self.circles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.circles.is_empty()
    }

    /// Region enclosed by the circle (the side away from infinity).
    pub fn inner_region(&self, c: usize) -> usize {
        if self.ccw[c] {
            self.left_region[c]
        } else {
            self.right_region[c]
        }
    }

    pub fn contains(&self, outer: usize, inner: usize) -> bool {
        let mut cur = self.parent[inner];
        while let Some(p) = cur {
            if p == outer {
                return true;
            }
            cur = self.parent[p];
        }
        false
    }

    /// Number of circles strictly inside `c`.
    pub fn descendants(&self, c: usize) -> usize {
        (0..self.len()).filter(|&x| self.contains(c, x)).count()
    }

    /// Which trichotomy case holds for circles `a`, `b`; `None` means the
    /// pair violates it.
    pub fn height_relation(&self, a: usize, b: usize) -> Option<HeightRelation> {
        let (ha, hb) = (self.height[a], self.height[b]);
        let cases = [
            self.contains(a, b) && hb == ha + 1,
            self.contains(b, a) && ha == hb + 1,
            ha == hb,
        ];
        match cases {
            [true, false, false] => Some(HeightRelation::FirstContainsSecond),
            [false, true, false] => Some(HeightRelation::SecondContainsFirst),
            [false, false, true] => Some(HeightRelation::SameHeight),
            _ => None,
        }
    }

    /// True when the band of `crossing` attaches to circle `c` on its left.
    pub fn band_on_left(&self, c: usize, crossing: usize) -> bool {
        self.band_region[crossing] == self.left_region[c]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DiagramStats {
    /// Seifert circles.
    pub s: usize,
    /// Crossings.
    pub c: usize,
    /// Link components.
    pub mu: usize,
    pub writhe: i64,
    pub chi: i64,
    pub rank: i64,
    /// Twice the genus of the projection surface.
    pub twice_genus: i64,
}

impl DiagramStats {
    /// Genus as a (numerator, denominator) pair in lowest terms.
    pub fn surface_genus(&self) -> (i64, i64) {
        if self.twice_genus % 2 == 0 {
            (self.twice_genus / 2, 1)
        } else {
            (self.twice_genus, 2)
        }
    }
}

pub fn diagram_stats(d: &Diagram) -> Result<DiagramStats> {
    let nest = seifert_circles(d, None)?;
    Ok(stats_from(d, &nest))
}

pub fn stats_from(d: &Diagram, nest: &CircleNesting) -> DiagramStats {
    let s = nest.len();
    let c = d.crossing_count();
    let mu = d.component_count();
    let chi = s as i64 - c as i64;
    let rank = 1 - chi;
    DiagramStats { s, c, mu, writhe: d.writhe(), chi, rank, twice_genus: rank - mu as i64 + 1 }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::parse_pd;

    const TREFOIL: &str = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";
    const HOPF: &str = "X(1,3,2,4) X(3,1,4,2)";
    const FIGURE8: &str = "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)";

    fn check_trichotomy(d: &Diagram, n: &CircleNesting) {
        for cc in &n.crossing_circles {
            assert!(n.height_relation(cc[0], cc[1]).is_some(), "{d:?}");
        }
        let _ = d;
    }

    #[test]
    fn trefoil_circles() {
        let d = parse_pd(TREFOIL).unwrap();
        let n = seifert_circles(&d, None).unwrap();
        assert_eq!(n.len(), 2);
        check_trichotomy(&d, &n);
        let st = stats_from(&d, &n);
        assert_eq!((st.s, st.c, st.mu, st.chi, st.rank, st.twice_genus), (2, 3, 1, -1, 2, 2));
    }

    #[test]
    fn hopf_stats() {
        let d = parse_pd(HOPF).unwrap();
        let st = diagram_stats(&d).unwrap();
        assert_eq!((st.s, st.c, st.mu, st.chi, st.rank, st.twice_genus), (2, 2, 2, 0, 1, 0));
    }

    #[test]
    fn figure_eight_circles() {
        let d = parse_pd(FIGURE8).unwrap();
        let n = seifert_circles(&d, None).unwrap();
        assert_eq!(n.len(), 3);
        check_trichotomy(&d, &n);
        let st = stats_from(&d, &n);
        assert_eq!((st.rank, st.surface_genus()), (2, (1, 1)));
    }

    #[test]
    fn unknot_single_circle() {
        let n = seifert_circles(&Diagram::unknot(), None).unwrap();
        assert_eq!(n.len(), 1);
        assert_eq!(n.height, vec![0]);
    }

    #[test]
    fn disconnected_rejected() {
        assert_eq!(seifert_circles(&Diagram::unlink(2), None).unwrap_err(), Error::Disconnected);
    }

    #[test]
    fn outer_face_changes_nesting_not_count() {
        let d = parse_pd(FIGURE8).unwrap();
        for l in d.labels() {
            for left in [true, false] {
                let n = seifert_circles(&d, Some(OuterFace { edge: l, left })).unwrap();
                assert_eq!(n.len(), 3);
                check_trichotomy(&d, &n);
            }
        }
    }

    #[test]
    fn smoothing_keeps_circles() {
        let d = parse_pd(FIGURE8).unwrap();
        let before = diagram_stats(&d).unwrap();
        let s = d.smooth_crossing(1).unwrap();
        // the smoothing may split the diagram; count circles directly
        let circles = count_circles(&s);
        assert_eq!(circles, before.s);
    }

    fn count_circles(d: &Diagram) -> usize {
        let mut seen = vec![false; d.dart_count()];
        let mut k = d.unknots();
        for t in 0..d.dart_count() {
            if d.is_incoming(t) || seen[t] {
                continue;
            }
            k += 1;
            let mut x = t;
            while !seen[x] {
                seen[x] = true;
                let h = d.mate(x);
                x = dart(h / 4, smooth_exit(d.over_forward()[h / 4], h % 4));
            }
        }
        k
    }
}

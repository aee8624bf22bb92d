//! The signed Seifert multigraph of a diagram, its rotation system and its
//! block decomposition.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::circles::CircleNesting;
use crate::diagram::{dart, Diagram};
use crate::error::{Error, Result};
use crate::Sign;

/// Half-edge of the Seifert graph: `2 * edge + k` leaves `ends[k]`.
pub type GDart = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SgEdge {
    pub crossing: usize,
    pub ends: [usize; 2],
    pub sign: Sign,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeifertGraph {
    pub height: Vec<usize>,
    /// Positive orientation of the disc points upward.
    pub up: Vec<bool>,
    pub edges: Vec<SgEdge>,
    /// Counterclockwise cyclic order of darts leaving each vertex.
    pub rotation: Vec<Vec<GDart>>,
    /// A dart whose left face holds the point at infinity.
    pub outer_dart: Option<GDart>,
}

#[inline]
pub fn rev(d: GDart) -> GDart {
    d ^ 1
}

impl SeifertGraph {
    /// Assembles a graph from explicit parts; used for hand-drawn blocks.
    pub fn from_parts(
        height: Vec<usize>,
        up: Vec<bool>,
        edges: Vec<SgEdge>,
        rotation: Vec<Vec<GDart>>,
        outer_dart: Option<GDart>,
    ) -> Result<Self> {
        let g = SeifertGraph { height, up, edges, rotation, outer_dart };
        g.check_rotation()?;
        Ok(g)
    }

    fn check_rotation(&self) -> Result<()> {
        let mut seen = vec![false; 2 * self.edges.len()];
        for (v, rot) in self.rotation.iter().enumerate() {
            for &d in rot {
                if d >= seen.len() || seen[d] || self.tail(d) != v {
                    return Err(Error::Corrupt(format!("bad rotation entry {d} at vertex {v}")));
                }
                seen[d] = true;
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(Error::Corrupt("rotation misses a dart".into()));
        }
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.rotation.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn tail(&self, d: GDart) -> usize {
        self.edges[d / 2].ends[d % 2]
    }

    pub fn head(&self, d: GDart) -> usize {
        self.edges[d / 2].ends[1 - d % 2]
    }

    pub fn rank(&self) -> i64 {
        self.edge_count() as i64 - self.vertex_count() as i64 + self.components() as i64
    }

    pub fn components(&self) -> usize {
        let mut dsu = crate::dsu::Dsu::new(self.vertex_count());
        for e in &self.edges {
            dsu.union(e.ends[0], e.ends[1]);
        }
        dsu.classes().1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rotation[v].len()
    }

    /// Faces of the embedding restricted to the edges accepted by `keep`,
    /// as cyclic dart sequences with the face on the left.
    pub fn faces_of(&self, keep: &dyn Fn(usize) -> bool) -> Vec<Vec<GDart>> {
        let rot: Vec<Vec<GDart>> =
            self.rotation.iter().map(|r| r.iter().copied().filter(|&d| keep(d / 2)).collect()).collect();
        let mut pos = vec![usize::MAX; 2 * self.edges.len()];
        for r in &rot {
            for (i, &d) in r.iter().enumerate() {
                pos[d] = i;
            }
        }
        let mut done = vec![false; 2 * self.edges.len()];
        let mut faces = Vec::new();
        for s in 0..2 * self.edges.len() {
            if done[s] || !keep(s / 2) {
                continue;
            }
            let mut face = Vec::new();
            let mut d = s;
            while !done[d] {
                done[d] = true;
                face.push(d);
                let v = self.head(d);
                let r = &rot[v];
                let p = pos[rev(d)];
                d = r[(p + r.len() - 1) % r.len()];
            }
            faces.push(face);
        }
        faces
    }

    pub fn faces(&self) -> Vec<Vec<GDart>> {
        self.faces_of(&|_| true)
    }

    pub fn to_dot(&self, blocks: Option<&BlockDecomposition>) -> String {
        let mut s = String::from("graph seifert {\n");
        for v in 0..self.vertex_count() {
            s.push_str(&format!("  v{v} [label=\"{v} h={}{}\"];\n", self.height[v], if self.up[v] { " up" } else { "" }));
        }
        for (i, e) in self.edges.iter().enumerate() {
            let b = blocks.map(|bd| format!(" block={}", bd.block_of_edge[i])).unwrap_or_default();
            s.push_str(&format!(
                "  v{} -- v{} [label=\"x{} {}{}\"];\n",
                e.ends[0],
                e.ends[1],
                e.crossing,
                if e.sign > 0 { '+' } else { '-' },
                b
            ));
        }
        s.push_str("}\n");
        s
    }
}

pub fn build_seifert_graph(d: &Diagram, n: &CircleNesting) -> Result<SeifertGraph> {
    let fwd = d.over_forward();
    let edges: Vec<SgEdge> = (0..d.crossing_count())
        .map(|x| SgEdge { crossing: x, ends: n.crossing_circles[x], sign: if fwd[x] { 1 } else { -1 } })
        .collect();
    let mut rotation = Vec::with_capacity(n.len());
    for (v, circle) in n.circles.iter().enumerate() {
        let mut right = Vec::new();
        let mut left = Vec::new();
        for p in &circle.passages {
            let x = p.crossing;
            let k = if edges[x].ends[0] == v { 0 } else { 1 };
            let gd = 2 * x + k;
            if n.band_on_left(v, x) {
                left.push(gd);
            } else {
                right.push(gd);
            }
        }
        // counterclockwise around the collapsed circle as seen from each side
        left.reverse();
        right.extend(left);
        rotation.push(right);
    }
    let mut g = SeifertGraph { height: n.height.clone(), up: n.ccw.clone(), edges, rotation, outer_dart: None };
    g.check_rotation()?;
    g.outer_dart = outer_graph_dart(d, n, &g);
    Ok(g)
}

/// Diagram face lying on the left of a Seifert-graph dart.
pub fn dart_diagram_face(d: &Diagram, n: &CircleNesting, gd: GDart) -> usize {
    let x = gd / 2;
    let pos = match (d.over_forward()[x], gd % 2) {
        (true, 0) => 2,
        (true, _) => 0,
        (false, 0) => 3,
        (false, _) => 1,
    };
    n.dart_face[dart(x, pos)]
}

fn outer_graph_dart(d: &Diagram, n: &CircleNesting, g: &SeifertGraph) -> Option<GDart> {
    let od = n.outer_dart?;
    let target = n.dart_face[od];
    if let Some(gd) = (0..2 * g.edge_count()).find(|&gd| dart_diagram_face(d, n, gd) == target) {
        return Some(gd);
    }
    // the outer region is an empty disc behind a single circle: infinity sits
    // at that vertex, take the corner closing its rotation
    let c0 = (0..n.len()).find(|&c| n.parent[c].is_none())?;
    g.rotation[c0].last().copied()
}

/// Proper 2-colouring of the vertices by signs.
pub fn bipartite_signs(g: &SeifertGraph, anchor: usize, anchor_sign: Sign) -> Result<Vec<Sign>> {
    let nv = g.vertex_count();
    if anchor >= nv {
        return Err(Error::IndexOutOfRange { index: anchor, len: nv });
    }
    let mut col: Vec<Sign> = vec![0; nv];
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); nv];
    for e in &g.edges {
        adj[e.ends[0]].push(e.ends[1]);
        adj[e.ends[1]].push(e.ends[0]);
    }
    let mut q = VecDeque::new();
    let starts = core::iter::once(anchor).chain(0..nv);
    for s in starts {
        if col[s] != 0 {
            continue;
        }
        col[s] = if s == anchor { anchor_sign } else { 1 };
        q.push_back(s);
        while let Some(v) = q.pop_front() {
            for &w in &adj[v] {
                if col[w] == 0 {
                    col[w] = -col[v];
                    q.push_back(w);
                } else if col[w] == col[v] {
                    return Err(Error::NotBipartite);
                }
            }
        }
    }
    Ok(col)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BlockType {
    /// All discs at the same height.
    TypeI,
    /// One disc, the pan, one level below all the others and containing them.
    TypeII { pan: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum BlockSign {
    Positive,
    Negative,
    Mixed,
}

impl BlockSign {
    pub fn sign(self) -> Option<Sign> {
        match self {
            BlockSign::Positive => Some(1),
            BlockSign::Negative => Some(-1),
            BlockSign::Mixed => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub edges: Vec<usize>,
    pub vertices: Vec<usize>,
    pub kind: BlockType,
    pub sign: BlockSign,
    pub rank: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    pub blocks: Vec<Block>,
    pub cut_vertices: Vec<usize>,
    pub block_of_edge: Vec<usize>,
}

pub fn block_decomposition(g: &SeifertGraph) -> Result<BlockDecomposition> {
    let nv = g.vertex_count();
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); nv];
    for (i, e) in g.edges.iter().enumerate() {
        adj[e.ends[0]].push((i, e.ends[1]));
        adj[e.ends[1]].push((i, e.ends[0]));
    }
    let mut disc = vec![usize::MAX; nv];
    let mut low = vec![0usize; nv];
    let mut time = 0;
    let mut edge_stack: Vec<usize> = Vec::new();
    let mut raw: Vec<Vec<usize>> = Vec::new();
    for root in 0..nv {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        // (vertex, next adjacency index, edge to parent)
        let mut stack: Vec<(usize, usize, usize)> = vec![(root, 0, usize::MAX)];
        while let Some(top) = stack.last_mut() {
            let (v, it, pe) = *top;
            if it < adj[v].len() {
                top.1 += 1;
                let (e, w) = adj[v][it];
                if e == pe {
                    continue;
                }
                if disc[w] == usize::MAX {
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    edge_stack.push(e);
                    stack.push((w, 0, e));
                } else if disc[w] < disc[v] {
                    edge_stack.push(e);
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(u, _, _)) = stack.last() {
                    low[u] = low[u].min(low[v]);
                    if low[v] >= disc[u] {
                        let mut block = Vec::new();
                        while let Some(e) = edge_stack.pop() {
                            block.push(e);
                            if e == pe {
                                break;
                            }
                        }
                        raw.push(block);
                    }
                }
            }
        }
    }
    for b in &mut raw {
        b.sort_unstable();
    }
    raw.sort();

    let mut block_of_edge = vec![usize::MAX; g.edge_count()];
    let mut membership = vec![0usize; nv];
    let mut blocks = Vec::with_capacity(raw.len());
    for (bi, edges) in raw.into_iter().enumerate() {
        let mut verts = BTreeSet::new();
        for &e in &edges {
            block_of_edge[e] = bi;
            verts.insert(g.edges[e].ends[0]);
            verts.insert(g.edges[e].ends[1]);
        }
        let vertices: Vec<usize> = verts.into_iter().collect();
        for &v in &vertices {
            membership[v] += 1;
        }
        let pos = edges.iter().any(|&e| g.edges[e].sign > 0);
        let neg = edges.iter().any(|&e| g.edges[e].sign < 0);
        let sign = match (pos, neg) {
            (true, false) => BlockSign::Positive,
            (false, true) => BlockSign::Negative,
            _ => BlockSign::Mixed,
        };
        let kind = block_type(g, &vertices)?;
        let rank = edges.len() as i64 - vertices.len() as i64 + 1;
        blocks.push(Block { edges, vertices, kind, sign, rank });
    }
    let cut_vertices = (0..nv).filter(|&v| membership[v] >= 2).collect();
    Ok(BlockDecomposition { blocks, cut_vertices, block_of_edge })
}

fn block_type(g: &SeifertGraph, vertices: &[usize]) -> Result<BlockType> {
    let hmin = vertices.iter().map(|&v| g.height[v]).min().unwrap_or(0);
    let lows: Vec<usize> = vertices.iter().copied().filter(|&v| g.height[v] == hmin).collect();
    if lows.len() == vertices.len() {
        return Ok(BlockType::TypeI);
    }
    if lows.len() == 1 && vertices.iter().all(|&v| v == lows[0] || g.height[v] == hmin + 1) {
        return Ok(BlockType::TypeII { pan: lows[0] });
    }
    Err(Error::Corrupt(format!("block on vertices {vertices:?} has heights outside the two block types")))
}

impl BlockDecomposition {
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn total_rank(&self) -> i64 {
        self.blocks.iter().map(|b| b.rank).sum()
    }

    /// Block with exactly one cut vertex, found by repeatedly deleting a cut
    /// vertex and descending into a component away from the previous one.
    pub fn leaf_block(&self) -> Result<usize> {
        let active = vec![true; self.blocks.len()];
        self.leaf_among(&active).map(|(b, _)| b)
    }

    /// As [`leaf_block`](Self::leaf_block) within the active blocks; also
    /// returns the block's unique cut vertex.
    pub fn leaf_among(&self, active: &[bool]) -> Result<(usize, usize)> {
        let mut current: Vec<usize> = (0..self.blocks.len()).filter(|&b| active[b]).collect();
        let mut prev: Option<usize> = None;
        loop {
            let cuts = self.cuts_within(&current);
            let v = match cuts.iter().copied().find(|&c| Some(c) != prev) {
                Some(v) => v,
                None => {
                    return match (current.len(), prev) {
                        (1, Some(p)) => Ok((current[0], p)),
                        _ => Err(Error::NoCutVertex),
                    }
                }
            };
            let comps = self.components_without(&current, v);
            let pick = comps
                .into_iter()
                .filter(|comp| match prev {
                    // the previous cut vertex must stay outside the new piece,
                    // except as a vertex of nothing but the piece's boundary
                    Some(p) => !comp.iter().any(|&b| self.blocks[b].vertices.contains(&p)),
                    None => true,
                })
                .min_by_key(|comp| comp.iter().copied().min())
                .ok_or(Error::NoCutVertex)?;
            current = pick;
            prev = Some(v);
        }
    }

    fn cuts_within(&self, blocks: &[usize]) -> Vec<usize> {
        let mut count = alloc::collections::BTreeMap::new();
        for &b in blocks {
            for &v in &self.blocks[b].vertices {
                *count.entry(v).or_insert(0usize) += 1;
            }
        }
        count.into_iter().filter(|&(_, k)| k >= 2).map(|(v, _)| v).collect()
    }

    /// Groups `blocks` into pieces connected through vertices other than `v`.
    fn components_without(&self, blocks: &[usize], v: usize) -> Vec<Vec<usize>> {
        let mut dsu = crate::dsu::Dsu::new(blocks.len());
        for i in 0..blocks.len() {
            for j in i + 1..blocks.len() {
                let (a, b) = (&self.blocks[blocks[i]].vertices, &self.blocks[blocks[j]].vertices);
                if a.iter().any(|x| *x != v && b.contains(x)) {
                    dsu.union(i, j);
                }
            }
        }
        let (cls, k) = dsu.classes();
        let mut out = vec![Vec::new(); k];
        for (i, &c) in cls.iter().enumerate() {
            out[c].push(blocks[i]);
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Homogeneity {
    pub homogeneous: bool,
    pub signs: Vec<BlockSign>,
}

pub fn homogeneity(bd: &BlockDecomposition) -> Homogeneity {
    let signs: Vec<BlockSign> = bd.blocks.iter().map(|b| b.sign).collect();
    Homogeneity { homogeneous: signs.iter().all(|s| *s != BlockSign::Mixed), signs }
}

/// No Seifert circle has other circles both inside and outside it.
pub fn special_test(n: &CircleNesting, g: &SeifertGraph) -> bool {
    let _ = g;
    let total = n.len();
    (0..total).all(|c| {
        let inside = n.descendants(c);
        inside == 0 || inside + 1 == total
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circles::seifert_circles;
    use crate::diagram::parse_pd;

    fn graph(pd: &str) -> (Diagram, CircleNesting, SeifertGraph) {
        let d = parse_pd(pd).unwrap();
        let n = seifert_circles(&d, None).unwrap();
        let g = build_seifert_graph(&d, &n).unwrap();
        (d, n, g)
    }

    #[test]
    fn trefoil_graph() {
        let (_, _, g) = graph("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)");
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edge_count(), 3);
        assert!(g.edges.iter().all(|e| e.sign == 1));
        assert_eq!(g.rank(), 2);
        assert_eq!(g.faces().len(), 3);
        assert_eq!(bipartite_signs(&g, 0, 1).unwrap(), vec![1, -1]);
    }

    #[test]
    fn hopf_graph() {
        let (_, _, g) = graph("X(1,3,2,4) X(3,1,4,2)");
        assert_eq!((g.vertex_count(), g.edge_count(), g.rank()), (2, 2, 1));
        assert_eq!(g.edges[0].sign, g.edges[1].sign);
    }

    #[test]
    fn odd_cycle_detected() {
        let edges = vec![
            SgEdge { crossing: 0, ends: [0, 1], sign: 1 },
            SgEdge { crossing: 1, ends: [1, 2], sign: 1 },
            SgEdge { crossing: 2, ends: [2, 0], sign: 1 },
        ];
        let rotation = vec![vec![0, 5], vec![1, 2], vec![3, 4]];
        let g = SeifertGraph::from_parts(vec![0; 3], vec![true; 3], edges, rotation, None).unwrap();
        assert_eq!(bipartite_signs(&g, 0, 1), Err(Error::NotBipartite));
    }

    #[test]
    fn path_endpoints_share_colour() {
        let edges =
            vec![SgEdge { crossing: 0, ends: [0, 1], sign: 1 }, SgEdge { crossing: 1, ends: [1, 2], sign: 1 }];
        let rotation = vec![vec![0], vec![1, 2], vec![3]];
        let g = SeifertGraph::from_parts(vec![0; 3], vec![true; 3], edges, rotation, None).unwrap();
        let c = bipartite_signs(&g, 0, 1).unwrap();
        assert_eq!(c[0], c[2]);
        let bd = block_decomposition(&g).unwrap();
        assert_eq!(bd.len(), 2);
        assert_eq!(bd.cut_vertices, vec![1]);
        assert_eq!(bd.leaf_block().unwrap(), 0);
    }

    #[test]
    fn single_block_has_no_leaf() {
        let (_, _, g) = graph("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)");
        let bd = block_decomposition(&g).unwrap();
        assert_eq!(bd.len(), 1);
        assert_eq!(bd.leaf_block(), Err(Error::NoCutVertex));
    }

    #[test]
    fn three_block_path_leaf_is_an_end() {
        // blocks: {0,1} double edge, {1,2} double edge, {2,3} double edge
        let mut edges = Vec::new();
        for (k, (a, b)) in [(0, 1), (0, 1), (1, 2), (1, 2), (2, 3), (2, 3)].into_iter().enumerate() {
            edges.push(SgEdge { crossing: k, ends: [a, b], sign: 1 });
        }
        let rotation = vec![vec![0, 2], vec![1, 3, 4, 6], vec![5, 7, 8, 10], vec![9, 11]];
        let g = SeifertGraph::from_parts(vec![0; 4], vec![true; 4], edges, rotation, None).unwrap();
        let bd = block_decomposition(&g).unwrap();
        assert_eq!(bd.len(), 3);
        let leaf = bd.leaf_block().unwrap();
        let middle = bd.block_of_edge[2];
        assert_ne!(leaf, middle);
        let mut active = vec![true; 3];
        active[leaf] = false;
        let (next, cut) = bd.leaf_among(&active).unwrap();
        assert!(bd.blocks[next].vertices.contains(&cut));
    }
}

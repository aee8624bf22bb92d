//! Regions of a block's plane embedding, the side sets between regions and
//! the block Seifert matrix they determine.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::dsu::Dsu;
use crate::error::{Error, Result};
use crate::graph::{rev, BlockDecomposition, BlockSign, GDart, SeifertGraph, SgEdge};
use crate::matrix::IntMatrix;
use crate::Sign;

/// One block of a Seifert graph, seen as a plane graph on its own.
#[derive(Debug, Clone)]
pub struct PlaneBlock<'g> {
    pub graph: &'g SeifertGraph,
    pub edges: Vec<usize>,
    in_block: Vec<bool>,
}

impl<'g> PlaneBlock<'g> {
    pub fn new(graph: &'g SeifertGraph, edges: Vec<usize>) -> Self {
        let mut in_block = vec![false; graph.edge_count()];
        for &e in &edges {
            in_block[e] = true;
        }
        PlaneBlock { graph, edges, in_block }
    }

    pub fn of(graph: &'g SeifertGraph, bd: &BlockDecomposition, b: usize) -> Self {
        Self::new(graph, bd.blocks[b].edges.clone())
    }

    /// The whole graph as one block.
    pub fn whole(graph: &'g SeifertGraph) -> Self {
        Self::new(graph, (0..graph.edge_count()).collect())
    }

    pub fn contains_edge(&self, e: usize) -> bool {
        self.in_block[e]
    }

    pub fn sign(&self) -> BlockSign {
        let pos = self.edges.iter().any(|&e| self.graph.edges[e].sign > 0);
        let neg = self.edges.iter().any(|&e| self.graph.edges[e].sign < 0);
        match (pos, neg) {
            (true, false) => BlockSign::Positive,
            (false, true) => BlockSign::Negative,
            _ => BlockSign::Mixed,
        }
    }

    pub fn rank(&self) -> i64 {
        let mut verts: Vec<usize> = self.edges.iter().flat_map(|&e| self.graph.edges[e].ends).collect();
        verts.sort_unstable();
        verts.dedup();
        self.edges.len() as i64 - verts.len() as i64 + 1
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegionComplex {
    /// Faces as dart cycles with the face on the left; bounded faces first,
    /// unbounded face last.
    pub faces: Vec<Vec<GDart>>,
    pub unbounded_id: usize,
    pub boundary_length: Vec<usize>,
    /// Face of every dart of the block; `usize::MAX` for darts outside it.
    pub region_of_dart: Vec<usize>,
}

impl RegionComplex {
    pub fn bounded_count(&self) -> usize {
        self.unbounded_id
    }

    /// Edges (crossing ids) on the boundary of region `i`, sorted.
    pub fn boundary_edges(&self, i: usize) -> Vec<usize> {
        let mut v: Vec<usize> = self.faces[i].iter().map(|d| d / 2).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    /// Number of edges separating regions `i` and `j`.
    pub fn shared(&self, i: usize, j: usize) -> usize {
        self.faces[i].iter().filter(|&&d| self.region_of_dart[rev(d)] == j).count()
    }
}

pub fn regions(block: &PlaneBlock<'_>) -> Result<RegionComplex> {
    let g = block.graph;
    let nd = 2 * g.edge_count();
    let raw = g.faces_of(&|e| block.contains_edge(e));

    // Merge faces of the whole graph across edges outside the block; the
    // class holding the outer face is the block's unbounded region.
    let full = g.faces();
    let mut full_of = vec![0usize; nd];
    for (f, face) in full.iter().enumerate() {
        for &d in face {
            full_of[d] = f;
        }
    }
    let mut dsu = Dsu::new(full.len());
    for e in 0..g.edge_count() {
        if !block.contains_edge(e) {
            dsu.union(full_of[2 * e], full_of[2 * e + 1]);
        }
    }
    let outer_dart = match g.outer_dart {
        Some(d) => d,
        None if raw.len() <= 1 => {
            return finish(raw, 0, nd);
        }
        None => return Err(Error::Corrupt("no outer face recorded for the graph".into())),
    };
    let outer_class = dsu.find(full_of[outer_dart]);
    let unbounded = raw
        .iter()
        .position(|face| face.iter().any(|&d| dsu.find(full_of[d]) == outer_class))
        .ok_or_else(|| Error::Corrupt("outer face not found among block faces".into()))?;
    finish(raw, unbounded, nd)
}

fn finish(raw: Vec<Vec<GDart>>, unbounded: usize, nd: usize) -> Result<RegionComplex> {
    let mut bounded: Vec<(Vec<usize>, Vec<GDart>)> = Vec::new();
    let mut outer = Vec::new();
    for (i, face) in raw.into_iter().enumerate() {
        if i == unbounded {
            outer = face;
        } else {
            let mut key: Vec<usize> = face.iter().map(|d| d / 2).collect();
            key.sort_unstable();
            bounded.push((key, face));
        }
    }
    bounded.sort_by(|a, b| match a.0.cmp(&b.0) {
        Ordering::Equal => a.1.cmp(&b.1),
        o => o,
    });
    let mut faces: Vec<Vec<GDart>> = bounded.into_iter().map(|(_, f)| f).collect();
    let unbounded_id = faces.len();
    faces.push(outer);
    let boundary_length = faces.iter().map(|f| f.len()).collect();
    let mut region_of_dart = vec![usize::MAX; nd];
    for (i, f) in faces.iter().enumerate() {
        for &d in f {
            region_of_dart[d] = i;
        }
    }
    Ok(RegionComplex { faces, unbounded_id, boundary_length, region_of_dart })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeSideSets {
    /// `(i, j) -> edges of E_ij`, sorted.
    pub sets: BTreeMap<(usize, usize), Vec<usize>>,
    /// Per block edge: `(edge, i, j)` with the edge in `E_ij`.
    pub assignment: Vec<(usize, usize, usize)>,
}

impl EdgeSideSets {
    pub fn get(&self, i: usize, j: usize) -> &[usize] {
        self.sets.get(&(i, j)).map_or(&[], |v| v.as_slice())
    }
}

/// An edge `e` lies in `E_ij` when crossing it from `R_i` to `R_j` leaves
/// the endpoint coloured `-eps(e)` on the left.
pub fn edge_side_sets(block: &PlaneBlock<'_>, rc: &RegionComplex, vsigns: &[Sign]) -> EdgeSideSets {
    let g = block.graph;
    let mut sets: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    let mut assignment = Vec::with_capacity(block.edges.len());
    for &e in &block.edges {
        let eps = g.edges[e].sign;
        let d = if vsigns[g.tail(2 * e)] == -eps { 2 * e } else { 2 * e + 1 };
        // walking from the face right of d to the face left of d keeps the
        // tail of d on the walker's left
        let i = rc.region_of_dart[rev(d)];
        let j = rc.region_of_dart[d];
        sets.entry((i, j)).or_default().push(e);
        assignment.push((e, i, j));
    }
    for v in sets.values_mut() {
        v.sort_unstable();
    }
    EdgeSideSets { sets, assignment }
}

pub fn block_seifert_matrix(block: &PlaneBlock<'_>, rc: &RegionComplex, ess: &EdgeSideSets) -> Result<IntMatrix> {
    let g = block.graph;
    let r = rc.bounded_count();
    let mut m = IntMatrix::zeros(r, r);
    for i in 0..r {
        let twice: i64 = rc.faces[i].iter().map(|&d| -(g.edges[d / 2].sign as i64)).sum();
        if twice % 2 != 0 {
            return Err(Error::Corrupt("odd signed boundary length".into()));
        }
        m.set(i, i, twice / 2);
    }
    for &(e, i, j) in &ess.assignment {
        if i < r && j < r && i != j {
            m.add_to(i, j, g.edges[e].sign as i64);
        }
    }
    Ok(m)
}

/// Degree matrix of the directed dual graph, unbounded region last.
pub fn dual_degree_matrix(block: &PlaneBlock<'_>, rc: &RegionComplex, ess: &EdgeSideSets) -> Result<IntMatrix> {
    let eps = block.sign().sign().ok_or(Error::MixedBlock { block: 0 })? as i64;
    let n = rc.faces.len();
    let mut m = IntMatrix::zeros(n, n);
    for i in 0..n {
        m.set(i, i, -eps * (rc.boundary_length[i] as i64 / 2));
    }
    for &(_, i, j) in &ess.assignment {
        if i != j {
            m.add_to(i, j, eps);
        }
    }
    Ok(m)
}

/// Everything computed for one block.
#[derive(Debug, Clone)]
pub struct BlockMatrixReport {
    pub block: usize,
    pub sign: BlockSign,
    pub rank: i64,
    pub regions: RegionComplex,
    pub side_sets: EdgeSideSets,
    pub matrix: IntMatrix,
}

pub fn block_report(
    g: &SeifertGraph,
    bd: &BlockDecomposition,
    b: usize,
    vsigns: &[Sign],
) -> Result<BlockMatrixReport> {
    let pb = PlaneBlock::of(g, bd, b);
    let rc = regions(&pb)?;
    let ess = edge_side_sets(&pb, &rc, vsigns);
    let matrix = block_seifert_matrix(&pb, &rc, &ess)?;
    Ok(BlockMatrixReport { block: b, sign: pb.sign(), rank: pb.rank(), regions: rc, side_sets: ess, matrix })
}

/// Counterclockwise rotation of a straight-line drawing, with the dart
/// whose left face is unbounded.
pub fn rotation_from_points(points: &[(i64, i64)], ends: &[(usize, usize)]) -> (Vec<Vec<GDart>>, Option<GDart>) {
    let mut rot: Vec<Vec<GDart>> = vec![Vec::new(); points.len()];
    for (e, &(a, b)) in ends.iter().enumerate() {
        rot[a].push(2 * e);
        rot[b].push(2 * e + 1);
    }
    let dir = |d: GDart| {
        let (a, b) = ends[d / 2];
        let (from, to) = if d.is_multiple_of(2) { (a, b) } else { (b, a) };
        (points[to].0 - points[from].0, points[to].1 - points[from].1)
    };
    for r in &mut rot {
        r.sort_by(|&p, &q| angle_cmp(dir(p), dir(q)));
    }
    let low = (0..points.len()).filter(|&v| !rot[v].is_empty()).min_by_key(|&v| (points[v].1, points[v].0));
    let outer = low.and_then(|v| rot[v].last().copied());
    (rot, outer)
}

fn angle_cmp(a: (i64, i64), b: (i64, i64)) -> Ordering {
    let half = |p: (i64, i64)| if p.1 > 0 || (p.1 == 0 && p.0 > 0) { 0 } else { 1 };
    half(a).cmp(&half(b)).then_with(|| (b.0 * a.1 - a.0 * b.1).cmp(&0))
}

/// A hand-drawn homogeneous block on ten vertices, thirteen edges and four
/// bounded regions, with its vertex colouring; every edge has sign `eps`.
pub fn sample_block(eps: Sign) -> (SeifertGraph, Vec<Sign>) {
    const A: usize = 0;
    const B: usize = 1;
    const C: usize = 2;
    const D: usize = 3;
    const E: usize = 4;
    const F: usize = 5;
    const G: usize = 6;
    const H: usize = 7;
    const I: usize = 8;
    const J: usize = 9;
    let points = [(4, 211), (188, 211), (58, 162), (149, 162), (250, 148), (45, 78), (180, 65), (255, 60), (0, -10), (190, -10)];
    let colour: [Sign; 10] = [1, -1, -1, 1, 1, 1, -1, -1, -1, 1];
    let ends = [
        (I, A),
        (D, C),
        (B, E),
        (F, G),
        (A, B),
        (E, H),
        (H, J),
        (J, I),
        (B, D),
        (C, F),
        (F, I),
        (J, G),
        (G, D),
    ];
    let (rotation, outer) = rotation_from_points(&points, &ends);
    let edges = ends.iter().enumerate().map(|(k, &(a, b))| SgEdge { crossing: k, ends: [a, b], sign: eps }).collect();
    let g = SeifertGraph::from_parts(vec![0; 10], vec![true; 10], edges, rotation, outer)
        .expect("sample block rotation is consistent");
    (g, colour.iter().map(|c| c * eps).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circles::seifert_circles;
    use crate::diagram::parse_pd;
    use crate::graph::{bipartite_signs, block_decomposition, build_seifert_graph};

    fn rows(m: &IntMatrix) -> Vec<Vec<i64>> {
        m.to_rows()
    }

    #[test]
    fn sample_block_matrices() {
        for eps in [1i8, -1] {
            let (g, col) = sample_block(eps);
            let pb = PlaneBlock::whole(&g);
            let rc = regions(&pb).unwrap();
            assert_eq!(rc.bounded_count(), 4);
            let ess = edge_side_sets(&pb, &rc, &col);
            let m = block_seifert_matrix(&pb, &rc, &ess).unwrap();
            let e = eps as i64;
            let want = vec![vec![-3, 1, 1, 0], vec![1, -2, 0, 1], vec![0, 1, -3, 0], vec![1, 0, 1, -2]];
            let want: Vec<Vec<i64>> = want.into_iter().map(|r| r.into_iter().map(|x| x * e).collect()).collect();
            assert_eq!(rows(&m), want);
            if eps == 1 {
                let dual = dual_degree_matrix(&pb, &rc, &ess).unwrap();
                assert_eq!(
                    rows(&dual),
                    vec![
                        vec![-3, 1, 1, 0, 1],
                        vec![1, -2, 0, 1, 0],
                        vec![0, 1, -3, 0, 2],
                        vec![1, 0, 1, -2, 0],
                        vec![1, 0, 1, 1, -3]
                    ]
                );
                assert_eq!(dual.minor(4), m);
            }
        }
    }

    #[test]
    fn trefoil_block() {
        let d = parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)").unwrap();
        let n = seifert_circles(&d, None).unwrap();
        let g = build_seifert_graph(&d, &n).unwrap();
        let bd = block_decomposition(&g).unwrap();
        let col = bipartite_signs(&g, 0, 1).unwrap();
        let rep = block_report(&g, &bd, 0, &col).unwrap();
        assert_eq!(rep.regions.bounded_count(), 2);
        assert!(rep.regions.boundary_length[..2].iter().all(|&l| l == 2));
        let m = rep.matrix;
        assert_eq!(m.get(0, 0), -1);
        assert_eq!(m.get(1, 1), -1);
        assert_eq!(m.get(0, 1) + m.get(1, 0), 1);
        assert_eq!(m.det_i64().unwrap(), 1);
    }

    #[test]
    fn angle_order() {
        let dirs = [(1, 0), (1, 1), (0, 1), (-1, 1), (-1, 0), (-1, -1), (0, -1), (1, -1)];
        for i in 0..dirs.len() {
            for j in 0..dirs.len() {
                assert_eq!(angle_cmp(dirs[i], dirs[j]), i.cmp(&j));
            }
        }
    }
}

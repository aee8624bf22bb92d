//! The `analyze` report.

use std::collections::BTreeMap;

use seifert_core::block_matrix::{dual_degree_matrix, PlaneBlock};
use seifert_core::matrix::{eps_signed_check, is_sard_order, predicted_det_sign, row_dominant_check, sard_order};
use seifert_core::theorem::{cromwell_predict, is_alternating, Analysis, DiscRole};
use seifert_core::{BlockSign, BlockType, LaurentPoly};
use serde::Serialize;

#[derive(Debug, Serialize)]
pub struct AnalyzeReport {
    pub input: String,
    pub pd: String,
    pub stats: Stats,
    pub circles: Vec<CircleOut>,
    pub graph: GraphOut,
    pub blocks: Vec<BlockOut>,
    pub cut_vertices: Vec<usize>,
    pub block_order: OrderOut,
    pub homogeneous: bool,
    pub special: bool,
    pub alternating: bool,
    pub cromwell: Option<CromwellOut>,
}

#[derive(Debug, Serialize)]
pub struct Stats {
    pub crossings: usize,
    pub circles: usize,
    pub components: usize,
    pub writhe: i64,
    pub euler_characteristic: i64,
    pub rank: i64,
    /// Genus of the projection surface, as a decimal string.
    pub surface_genus: String,
}

#[derive(Debug, Serialize)]
pub struct CircleOut {
    pub id: usize,
    pub height: usize,
    pub parent: Option<usize>,
    pub counterclockwise: bool,
    pub edges: Vec<u32>,
}

#[derive(Debug, Serialize)]
pub struct GraphOut {
    pub vertices: Vec<VertexOut>,
    pub edges: Vec<EdgeOut>,
}

#[derive(Debug, Serialize)]
pub struct VertexOut {
    pub id: usize,
    pub height: usize,
    pub color: i8,
    pub up: bool,
}

#[derive(Debug, Serialize)]
pub struct EdgeOut {
    pub id: usize,
    pub crossing: usize,
    pub ends: [usize; 2],
    pub sign: i8,
    pub block: usize,
}

#[derive(Debug, Serialize)]
pub struct BlockOut {
    pub id: usize,
    #[serde(rename = "type")]
    pub kind: String,
    pub pan: Option<usize>,
    pub sign: String,
    pub rank: i64,
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
    pub region_boundaries: Vec<Vec<usize>>,
    pub matrix: Vec<Vec<i64>>,
    pub det: String,
    pub eps_signed: bool,
    pub row_dominant: bool,
    /// 1-based rows, as found by the greedy certificate.
    pub sard_order: Option<Vec<usize>>,
    pub predicted_det_sign: Option<i64>,
    pub dual_degree_matrix: Option<Vec<Vec<i64>>>,
}

#[derive(Debug, Serialize)]
pub struct OrderOut {
    pub sigma: Vec<usize>,
    pub placement_log: Vec<PlacementOut>,
}

#[derive(Debug, Serialize)]
pub struct PlacementOut {
    pub block: usize,
    pub cut_disc: Option<usize>,
    pub role: &'static str,
    pub up: bool,
    pub at_front: bool,
}

#[derive(Debug, Serialize)]
pub struct CromwellOut {
    pub degree: i64,
    pub leading: String,
}

pub fn sign_name(s: BlockSign) -> &'static str {
    match s {
        BlockSign::Positive => "+",
        BlockSign::Negative => "-",
        BlockSign::Mixed => "mixed",
    }
}

pub fn analyze_report(input: &str, a: &Analysis) -> AnalyzeReport {
    let d = &a.diagram;
    let n = &a.nesting;
    let g = &a.graph;
    let (gn, gd) = a.stats.surface_genus();
    let stats = Stats {
        crossings: a.stats.c,
        circles: a.stats.s,
        components: a.stats.mu,
        writhe: a.stats.writhe,
        euler_characteristic: a.stats.chi,
        rank: a.stats.rank,
        surface_genus: if gd == 1 { gn.to_string() } else { format!("{gn}/{gd}") },
    };
    let circles = (0..n.len())
        .map(|c| CircleOut {
            id: c,
            height: n.height[c],
            parent: n.parent[c],
            counterclockwise: n.ccw[c],
            edges: n.circles[c].edges.clone(),
        })
        .collect();
    let graph = GraphOut {
        vertices: (0..g.vertex_count())
            .map(|v| VertexOut { id: v, height: g.height[v], color: a.vertex_signs[v], up: g.up[v] })
            .collect(),
        edges: g
            .edges
            .iter()
            .enumerate()
            .map(|(e, x)| EdgeOut { id: e, crossing: x.crossing, ends: x.ends, sign: x.sign, block: a.blocks.block_of_edge[e] })
            .collect(),
    };
    let blocks = a
        .blocks
        .blocks
        .iter()
        .zip(&a.block_reports)
        .enumerate()
        .map(|(i, (b, r))| {
            let m = &r.matrix;
            let eps = b.sign.sign();
            let dual = PlaneBlock::of(g, &a.blocks, i);
            let dual = dual_degree_matrix(&dual, &r.regions, &r.side_sets).ok().map(|x| x.to_rows());
            BlockOut {
                id: i,
                kind: match b.kind {
                    BlockType::TypeI => "I".into(),
                    BlockType::TypeII { .. } => "II".into(),
                },
                pan: match b.kind {
                    BlockType::TypeII { pan } => Some(pan),
                    BlockType::TypeI => None,
                },
                sign: sign_name(b.sign).into(),
                rank: b.rank,
                vertices: b.vertices.clone(),
                edges: b.edges.clone(),
                region_boundaries: (0..r.regions.faces.len()).map(|f| r.regions.boundary_edges(f)).collect(),
                matrix: m.to_rows(),
                det: m.det().map(|x| x.to_string()).unwrap_or_default(),
                eps_signed: eps.is_some_and(|e| eps_signed_check(m, e)),
                row_dominant: row_dominant_check(m),
                sard_order: sard_order(m).filter(|o| is_sard_order(m, o)).map(|o| o.iter().map(|i| i + 1).collect()),
                predicted_det_sign: eps.map(|e| predicted_det_sign(e, m.order())),
                dual_degree_matrix: dual,
            }
        })
        .collect();
    let block_order = OrderOut {
        sigma: a.order.sigma.clone(),
        placement_log: a
            .order
            .placement_log
            .iter()
            .map(|p| PlacementOut {
                block: p.block,
                cut_disc: p.cut_disc,
                role: match p.role {
                    DiscRole::Pan => "pan",
                    DiscRole::Egg => "egg",
                    DiscRole::Plain => "plain",
                },
                up: p.up,
                at_front: p.at_front,
            })
            .collect(),
    };
    let cromwell = cromwell_predict(&a.blocks, &a.matrices())
        .ok()
        .map(|p| CromwellOut { degree: p.degree, leading: p.leading.to_string() });
    AnalyzeReport {
        input: input.to_string(),
        pd: d.to_pd_string(),
        stats,
        circles,
        graph,
        blocks,
        cut_vertices: a.blocks.cut_vertices.clone(),
        block_order,
        homogeneous: a.homogeneity.homogeneous,
        special: a.special,
        alternating: is_alternating(d),
        cromwell,
    }
}

/// `{exponent_doubled: coefficient}`.
pub fn poly_json(p: &LaurentPoly) -> BTreeMap<i64, i64> {
    p.terms().collect()
}

pub fn render_text(r: &AnalyzeReport) -> String {
    let mut out = String::new();
    let s = &r.stats;
    out += &format!("input: {}\n", r.input);
    out += &format!(
        "crossings {}  circles {}  components {}  writhe {}  rank {}  surface genus {}\n",
        s.crossings, s.circles, s.components, s.writhe, s.rank, s.surface_genus
    );
    out += &format!("homogeneous {}  special {}  alternating {}\n", r.homogeneous, r.special, r.alternating);
    for c in &r.circles {
        out += &format!("circle {} height {} parent {:?}\n", c.id, c.height, c.parent);
    }
    for b in &r.blocks {
        let pan = b.pan.map(|p| format!(" pan {p}")).unwrap_or_default();
        out += &format!("block {} type {}{} sign {} rank {} vertices {:?}\n", b.id, b.kind, pan, b.sign, b.rank, b.vertices);
        for row in &b.matrix {
            let cells: Vec<String> = row.iter().map(|x| format!("{x:>4}")).collect();
            out += &format!("  [{}]\n", cells.join(""));
        }
        out += &format!("  det {}  sard order {:?}\n", b.det, b.sard_order);
    }
    out += &format!("block order {:?}\n", r.block_order.sigma);
    if let Some(c) = &r.cromwell {
        out += &format!("cromwell prediction: degree {} leading {}\n", c.degree, c.leading);
    }
    out
}

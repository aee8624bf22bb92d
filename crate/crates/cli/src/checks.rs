//! Check batteries behind the `verify` suites and the acceptance tests.

use rand::Rng;
use seifert_core::block_matrix::{
    block_seifert_matrix, dual_degree_matrix, edge_side_sets, regions, sample_block, BlockMatrixReport, PlaneBlock,
};
use seifert_core::conway::{conway_skein_with, SkeinConfig, DEFAULT_SKEIN_CAP};
use seifert_core::graph::rev;
use seifert_core::jones::{kauffman_jones_capped, poly_stats, DEFAULT_JONES_CAP};
use seifert_core::matrix::{
    bigint_sign, eps_signed_check, is_sard_order, predicted_det_sign, row_dominant_check, sard_order,
    weak_eps_signed_check,
};
use seifert_core::theorem::{
    analyze, classify_genus_one, homogeneous_rows_matching, is_alternating, jones_table_row, table_check_genus_one,
    torus_sum_check, verify_cromwell_on, Analysis, CheckStatus, Genus1Class, TableCaps,
};
use seifert_core::{BlockType, Error, IntMatrix, LaurentPoly, Sign, Var};

use crate::corpus::{pretzel_sample, torus_sums, CorpusEntry, Expectations};
use crate::random::{random_diagram, random_homogeneous, random_outer_face, rng, weak_signed_dominant, Sample};
use crate::verdict::{Battery, Verdict};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    pub skein: usize,
    pub jones: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { skein: DEFAULT_SKEIN_CAP, jones: DEFAULT_JONES_CAP }
    }
}

fn rows_text(m: &IntMatrix) -> String {
    format!("{:?}", m.to_rows())
}

fn scaled(rows: &[[i64; 4]], e: i64) -> IntMatrix {
    let v: Vec<Vec<i64>> = rows.iter().map(|r| r.iter().map(|x| x * e).collect()).collect();
    IntMatrix::from_rows(&v).expect("rectangular")
}

const SAMPLE_BLOCK: [[i64; 4]; 4] = [[-3, 1, 1, 0], [1, -2, 0, 1], [0, 1, -3, 0], [1, 0, 1, -2]];
const SAMPLE_DUAL: [[i64; 5]; 5] =
    [[-3, 1, 1, 0, 1], [1, -2, 0, 1, 0], [0, 1, -3, 0, 2], [1, 0, 1, -2, 0], [1, 0, 1, 1, -3]];

/// The worked example block: its Seifert matrix for both colourings, its
/// directed dual degree matrix, and deletion of the unbounded row and column.
pub fn sample_block_battery() -> Battery {
    let mut b = Battery::new("sample block");
    for eps in [1i8, -1] {
        let input = format!("sample block, eps = {eps:+}");
        let (g, col) = sample_block(eps);
        let pb = PlaneBlock::whole(&g);
        let rc = match regions(&pb) {
            Ok(rc) => rc,
            Err(e) => {
                b.push(Verdict::error(&input, "regions", "4 bounded regions", e));
                continue;
            }
        };
        let ess = edge_side_sets(&pb, &rc, &col);
        let want = scaled(&SAMPLE_BLOCK, eps as i64);
        match block_seifert_matrix(&pb, &rc, &ess) {
            Ok(m) => {
                b.push(Verdict::compare(&input, "block Seifert matrix", rows_text(&want), rows_text(&m)));
                match dual_degree_matrix(&pb, &rc, &ess) {
                    Ok(dual) => {
                        if eps == 1 {
                            let want5 = IntMatrix::from_rows(&SAMPLE_DUAL.map(|r| r.to_vec())).unwrap();
                            b.push(Verdict::compare(&input, "dual degree matrix", rows_text(&want5), rows_text(&dual)));
                        }
                        let det = dual.det().map(|d| d.to_string()).unwrap_or_else(|e| e.to_string());
                        b.push(Verdict::compare(&input, "dual degree matrix det", "0".to_string(), det));
                        let minor = dual.minor(rc.unbounded_id);
                        b.push(Verdict::compare(&input, "deleting the unbounded region gives M", rows_text(&m), rows_text(&minor)));
                    }
                    Err(e) => b.push(Verdict::error(&input, "dual degree matrix", "5x5 matrix", e)),
                }
            }
            Err(e) => b.push(Verdict::error(&input, "block Seifert matrix", rows_text(&want), e)),
        }
    }
    b
}

/// The worked 3x3 example of an eps-signed sard matrix.
pub fn sard_example() -> Battery {
    let mut b = Battery::new("sard example");
    let m = IntMatrix::from_rows(&[vec![-3, 0, 3], vec![0, -2, 1], vec![1, 0, -2]]).unwrap();
    let input = rows_text(&m);
    b.push(Verdict::compare(&input, "(+)-signed", true, eps_signed_check(&m, 1)));
    b.push(Verdict::compare(&input, "row-dominant", true, row_dominant_check(&m)));
    b.push(Verdict::compare(&input, "sard with order (3,1,2)", true, is_sard_order(&m, &[2, 0, 1])));
    match sard_order(&m) {
        Some(o) => {
            let one: Vec<usize> = o.iter().map(|i| i + 1).collect();
            let valid = is_sard_order(&m, &o);
            let mut v = Verdict::new(&input, "greedy sard certificate", "a valid strict order", format!("{one:?}"), valid);
            if one != [3, 1, 2] {
                v = v.with_note("differs from the order (3,1,2); both are valid");
            }
            b.push(v);
        }
        None => b.push(Verdict::new(&input, "greedy sard certificate", "a valid strict order", "none found", false)),
    }
    let det = m.det().map(|d| d.to_string()).unwrap_or_default();
    b.push(Verdict::compare(&input, "det", "-6".to_string(), det));
    let sign = m.det().map(|d| bigint_sign(&d)).unwrap_or(0);
    b.push(Verdict::compare(&input, "det sign (-eps)^3", predicted_det_sign(1, 3), sign));
    b
}

/// `deg nabla = rk(G)`, `leading = prod eps_i^r_i |det M_i| = (-1)^n prod det M_i`.
pub fn cromwell(samples: &[Sample], cap: usize) -> Battery {
    let mut b = Battery::new("cromwell");
    for s in samples {
        let a = match analyze(&s.diagram, None) {
            Ok(a) => a,
            Err(e) => {
                b.push(Verdict::error(&s.name, "analysis", "a plane diagram", e));
                continue;
            }
        };
        match verify_cromwell_on(&a, cap) {
            Ok(r) => {
                b.push(Verdict::compare(&s.name, "deg nabla = rk(G)", a.rank(), r.observed_degree));
                b.push(Verdict::compare(&s.name, "deg nabla = sum of block ranks", r.predicted.degree, r.observed_degree));
                b.push(Verdict::compare(
                    &s.name,
                    "leading nabla = prod eps_i^r_i |det M_i|",
                    r.predicted.leading.to_string(),
                    r.observed_leading.to_string(),
                ));
                b.push(Verdict::compare(
                    &s.name,
                    "(-1)^n prod det M_i = prod eps_i^r_i |det M_i|",
                    r.predicted.leading.to_string(),
                    r.triangular_leading.to_string(),
                ));
            }
            Err(Error::Inhomogeneous(signs)) => {
                let v = Verdict::new(&s.name, "cromwell precondition", "refusal", format!("refused, block signs {signs:?}"), true);
                b.push(v.with_note("inhomogeneous diagram"));
                b.push(genus_bound_verdict(&s.name, &a, cap));
            }
            Err(e) => b.push(Verdict::error(&s.name, "cromwell", "report", e)),
        }
    }
    b
}

fn genus_bound_verdict(name: &str, a: &Analysis, cap: usize) -> Verdict {
    match conway_skein_with(&a.diagram, &SkeinConfig { cap, ..SkeinConfig::default() }) {
        Ok(p) => {
            let deg = p.degree().unwrap_or(-1);
            Verdict::new(name, "deg nabla <= rk(G)", format!("<= {}", a.rank()), deg, deg <= a.rank())
        }
        Err(e) => Verdict::error(name, "deg nabla <= rk(G)", format!("<= {}", a.rank()), e),
    }
}

fn half(x2: i64) -> String {
    if x2 % 2 == 0 {
        (x2 / 2).to_string()
    } else {
        format!("{x2}/2")
    }
}

fn from_check(input: &str, c: seifert_core::theorem::Check) -> Verdict {
    let v = Verdict::new(input, &c.name, &c.predicted, &c.observed, c.status != CheckStatus::Fail);
    match c.status {
        CheckStatus::FormulaOnly => v.with_note("formula only"),
        CheckStatus::Note => v.with_note("reference only; not part of the verdict"),
        _ => v,
    }
}

fn negate(cls: Genus1Class) -> Genus1Class {
    match cls {
        Genus1Class::Theta { a, b, c } => Genus1Class::theta(-a, -b, -c),
        Genus1Class::Wedge { m, k } => Genus1Class::wedge(-m, -k),
    }
}

/// Conway and Jones table checks for genus-one items and their mirrors,
/// the classification round trip, and the shared pairs.
pub fn genus_one(items: &[(Sample, Genus1Class)], caps: Caps) -> Battery {
    let mut b = Battery::new("genus-one tables");
    let tcaps = TableCaps { skein: caps.skein, jones: caps.jones };
    for (s, cls) in items {
        for (mirror, d, c) in [(false, s.diagram.clone(), *cls), (true, s.diagram.mirror(), negate(*cls))] {
            let input = if mirror { format!("mirror of {}", s.name) } else { s.name.clone() };
            match classify_genus_one(&d) {
                Ok(found) => b.push(Verdict::compare(&input, "classification", format!("{c:?}"), format!("{found:?}"))),
                Err(Error::Inhomogeneous(_)) => {}
                Err(e) => b.push(Verdict::error(&input, "classification", format!("{c:?}"), e)),
            }
            match table_check_genus_one(&c, &d, tcaps) {
                Ok(r) => {
                    for ch in r.checks {
                        b.push(from_check(&input, ch));
                    }
                }
                Err(e) => b.push(Verdict::error(&input, "table check", format!("{c:?}"), e)),
            }
        }
        if s.diagram.crossing_count() <= caps.jones {
            let f = kauffman_jones_capped(&s.diagram, caps.jones);
            let g = kauffman_jones_capped(&s.diagram.mirror(), caps.jones);
            if let (Ok(f), Ok(g)) = (f, g) {
                b.push(Verdict::compare(&s.name, "mirror: f(t) <-> f(1/t)", f.invert_var().to_text(), g.to_text()));
            }
        }
    }
    b.extend(shared_pairs(items));
    b
}

fn shared_pairs(items: &[(Sample, Genus1Class)]) -> Battery {
    let mut b = Battery::new("shared pairs");
    let pairs = [
        (Genus1Class::theta(3, -45, -91), Genus1Class::theta(11, 23, 101)),
        (Genus1Class::theta(11, -15, -15), Genus1Class::wedge(-4, 26)),
    ];
    for (x, y) in pairs {
        let find = |c: Genus1Class| items.iter().find(|(_, k)| *k == c).map(|(s, _)| s);
        let (Some(sx), Some(sy)) = (find(x), find(y)) else { continue };
        let input = format!("{} / {}", sx.name, sy.name);
        let lam = |s: &Sample| matrix_lambda(&s.diagram).map_err(|e| e.to_string());
        match (lam(sx), lam(sy)) {
            (Ok(lx), Ok(ly)) => {
                let v = Verdict::new(&input, "shared lambda (block matrices)", x.lambda().unwrap_or(0), format!("{lx} / {ly}"), lx == ly && Ok(lx) == x.lambda());
                b.push(v);
            }
            (ex, ey) => b.push(Verdict::error(&input, "shared lambda (block matrices)", "equal", format!("{ex:?} / {ey:?}"))),
        }
        if let (Some(rx), Some(ry)) = (jones_table_row(&x), jones_table_row(&y)) {
            let v = Verdict::new(&input, "shared jones span", half(rx.span2), format!("{} / {}", half(rx.span2), half(ry.span2)), rx.span2 == ry.span2);
            b.push(v.with_note("formula only"));
        }
    }
    b
}

/// `lambda` from block matrices: the `z^2` coefficient of the matrix
/// Conway polynomial of a rank-two block, or the leading coefficient
/// predicted from 1x1 blocks.
pub fn matrix_lambda(d: &seifert_core::Diagram) -> seifert_core::Result<i64> {
    let a = analyze(d, None)?;
    let ranked: Vec<&BlockMatrixReport> = a.block_reports.iter().filter(|r| r.rank > 0).collect();
    match ranked.as_slice() {
        [r] if r.rank == 2 => {
            let p = seifert_core::conway::conway_from_matrix(&r.matrix, Default::default())?;
            Ok(p.coeff(4))
        }
        _ => {
            let p = seifert_core::theorem::cromwell_predict(&a.blocks, &a.matrices())?;
            i64::try_from(&p.leading).map_err(|_| Error::Corrupt("leading coefficient overflow".into()))
        }
    }
}

/// The lowest degree and highest coefficient of the mixed
/// pretzels `P(p, -q, -r)` match no row of the homogeneous tables.
pub fn mixed_pretzel_jones(triples: &[[i64; 3]], cap: usize) -> Battery {
    let mut b = Battery::new("mixed pretzel jones");
    for &[p, q, r] in triples {
        let s = pretzel_sample(&[p, -q, -r]);
        let f = match kauffman_jones_capped(&s.diagram, cap).and_then(|f| poly_stats(&f).map(|st| (f, st))) {
            Ok(x) => x,
            Err(e) => {
                b.push(Verdict::error(&s.name, "jones extremes", "jones", e));
                continue;
            }
        };
        let st = f.1;
        let want_low = if p < q { 1 } else { -1 };
        b.push(Verdict::compare(&s.name, "jones lowest degree", half(want_low), half(st.lowest2)));
        if p < q {
            b.push(Verdict::compare(&s.name, "jones highest coefficient", -1, st.leading));
        }
        let rows = homogeneous_rows_matching(st.lowest2, st.leading);
        b.push(Verdict::new(&s.name, "matches no homogeneous row", "[]", format!("{rows:?}"), rows.is_empty()));
    }
    b
}

/// Blocks of random homogeneous diagrams: every
/// block matrix is eps-signed and sard with nonzero determinant of sign
/// `(-eps)^r`.
pub fn block_matrices_random(seed: u64, trials: usize, max_crossings: usize) -> Battery {
    let mut b = Battery::new("block matrices random");
    let mut r = rng(seed);
    for t in 0..trials {
        let s = random_homogeneous(&mut r, max_crossings);
        let outer = random_outer_face(&mut r, &s.diagram);
        let input = format!("#{t} {} outer {outer:?}", s.name);
        let a = match analyze(&s.diagram, outer) {
            Ok(a) => a,
            Err(e) => {
                b.push(Verdict::error(&input, "analysis", "a plane diagram", e));
                continue;
            }
        };
        if !a.homogeneity.homogeneous {
            b.push(Verdict::new(&input, "generator is homogeneous", true, false, false));
            continue;
        }
        for (i, (blk, rep)) in a.blocks.blocks.iter().zip(&a.block_reports).enumerate() {
            if blk.rank == 0 {
                continue;
            }
            let m = &rep.matrix;
            let eps = blk.sign.sign().expect("homogeneous");
            let det = m.det().expect("square");
            let signed = eps_signed_check(m, eps);
            let sard = sard_order(m).is_some_and(|o| is_sard_order(m, &o));
            let want = predicted_det_sign(eps, m.order());
            let got = bigint_sign(&det);
            let pass = signed && sard && got == want && m.order() as i64 == blk.rank;
            b.push(Verdict::new(
                format!("{input} block {i}"),
                "eps-signed sard, det sign (-eps)^r",
                format!("eps {eps:+}, r {}, sign {want:+}", blk.rank),
                format!("signed {signed}, sard {sard}, det {det}"),
                pass,
            ));
        }
    }
    b
}

/// Laplace expansion along the first row.
pub fn cofactor_det(m: &[Vec<i64>]) -> i128 {
    let n = m.len();
    match n {
        0 => 1,
        1 => m[0][0] as i128,
        _ => {
            let mut total = 0i128;
            for j in 0..n {
                if m[0][j] == 0 {
                    continue;
                }
                let minor: Vec<Vec<i64>> =
                    m[1..].iter().map(|row| row.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, &x)| x).collect()).collect();
                let term = m[0][j] as i128 * cofactor_det(&minor);
                total += if j % 2 == 0 { term } else { -term };
            }
            total
        }
    }
}

/// A weak eps-signed row-dominant matrix has determinant zero or
/// of sign `(-eps)^r`.
pub fn weak_dominant_random(seed: u64, trials: usize) -> Battery {
    let mut b = Battery::new("weak dominant determinants");
    let mut r = rng(seed);
    for t in 0..trials {
        let n = r.gen_range(1..=7);
        let eps: Sign = if r.gen_bool(0.5) { 1 } else { -1 };
        let m = weak_signed_dominant(&mut r, n, eps);
        let input = format!("#{t} eps {eps:+} {}", rows_text(&m));
        if !(weak_eps_signed_check(&m, eps) && row_dominant_check(&m)) {
            b.push(Verdict::new(&input, "generator precondition", true, false, false));
            continue;
        }
        let det = m.det().expect("square");
        let sign = bigint_sign(&det);
        let want = predicted_det_sign(eps, n);
        let mut pass = sign == 0 || sign == want;
        let mut observed = det.to_string();
        if n <= 5 {
            let oracle = cofactor_det(&m.to_rows());
            pass &= oracle.to_string() == det.to_string();
            observed = format!("{det} (cofactor {oracle})");
        }
        b.push(Verdict::new(&input, "det = 0 or sign (-eps)^r", format!("0 or sign {want:+}"), observed, pass));
    }
    b
}

/// Structural properties of one analysed diagram.
pub fn structure(name: &str, a: &Analysis, cap: Option<usize>) -> Battery {
    let mut b = Battery::new("structure");
    let g = &a.graph;
    let n = &a.nesting;
    let bip = g.edges.iter().all(|e| a.vertex_signs[e.ends[0]] != a.vertex_signs[e.ends[1]]);
    b.push(Verdict::compare(name, "Seifert graph is bipartite", true, bip));
    let tri = (0..a.diagram.crossing_count()).all(|c| {
        let [x, y] = n.crossing_circles[c];
        n.height_relation(x, y).is_some()
    });
    b.push(Verdict::compare(name, "height trichotomy", true, tri));
    if a.diagram.is_connected() {
        b.push(Verdict::compare(name, "rk(G) = c - s + 1", a.stats.rank, g.rank()));
    }
    let shapes = a.blocks.blocks.iter().all(|blk| match blk.kind {
        BlockType::TypeI => blk.vertices.iter().all(|&v| g.height[v] == g.height[blk.vertices[0]]),
        BlockType::TypeII { pan } => blk
            .vertices
            .iter()
            .all(|&v| v == pan || (g.height[v] == g.height[pan] + 1 && n.contains(pan, v))),
    });
    b.push(Verdict::compare(name, "blocks are type I or type II", true, shapes));
    b.push(Verdict::compare(name, "sum of block ranks = rk(G)", g.rank(), a.blocks.total_rank()));

    for (i, (blk, rep)) in a.blocks.blocks.iter().zip(&a.block_reports).enumerate() {
        if blk.rank == 0 {
            continue;
        }
        let input = format!("{name} block {i}");
        let rc = &rep.regions;
        let side: std::collections::BTreeMap<usize, (usize, usize)> =
            rep.side_sets.assignment.iter().map(|&(e, i, j)| (e, (i, j))).collect();
        // property 1: each edge is in exactly one of E_ij, E_ji, with
        // {i, j} the regions on its two sides
        let p1 = blk.edges.iter().all(|&e| {
            let sides = [rc.region_of_dart[2 * e], rc.region_of_dart[2 * e + 1]];
            side.get(&e).is_some_and(|&(i, j)| i != j && ((i, j) == (sides[0], sides[1]) || (i, j) == (sides[1], sides[0])))
        }) && (0..rc.faces.len()).all(|i| {
            (0..rc.faces.len())
                .all(|j| i == j || rep.side_sets.get(i, j).len() + rep.side_sets.get(j, i).len() == rc.shared(i, j))
        });
        b.push(Verdict::compare(&input, "E_ij property 1", true, p1));
        if blk.sign.sign().is_none() {
            continue;
        }
        // property 2: around each region the edges alternate between
        // leaving and entering
        let p2 = rc.faces.iter().enumerate().all(|(i, face)| {
            (0..face.len()).all(|k| {
                let (d, f) = (face[k], face[(k + 1) % face.len()]);
                let (j, l) = (rc.region_of_dart[rev(d)], rc.region_of_dart[rev(f)]);
                (side[&(d / 2)] == (i, j)) == (side[&(f / 2)] == (l, i))
            })
        });
        b.push(Verdict::compare(&input, "E_ij property 2", true, p2));
        let pb = PlaneBlock::of(g, &a.blocks, i);
        match dual_degree_matrix(&pb, rc, &rep.side_sets) {
            Ok(dm) => {
                let zero = dm.row_sums().iter().chain(dm.col_sums().iter()).all(|&x| x == 0);
                b.push(Verdict::compare(&input, "dual matrix row and column sums vanish", true, zero));
                let balanced = (0..rc.faces.len()).all(|v| {
                    let out: usize = (0..rc.faces.len()).filter(|&j| j != v).map(|j| rep.side_sets.get(v, j).len()).sum();
                    let inc: usize = (0..rc.faces.len()).filter(|&j| j != v).map(|j| rep.side_sets.get(j, v).len()).sum();
                    out == inc && out + inc == rc.boundary_length[v]
                });
                b.push(Verdict::compare(&input, "dual in-degree = out-degree", true, balanced));
                b.push(Verdict::compare(&input, "dual minor = M", rows_text(&rep.matrix), rows_text(&dm.minor(rc.unbounded_id))));
            }
            Err(e) => b.push(Verdict::error(&input, "dual degree matrix", "matrix", e)),
        }
        let row_dom = row_dominant_check(&rep.matrix);
        b.push(Verdict::compare(&input, "block matrix row-dominant", true, row_dom));
    }
    if let Some(cap) = cap {
        if a.diagram.crossing_count() <= cap {
            b.push(genus_bound_verdict(name, a, cap));
            if let Ok(p) = conway_skein_with(&a.diagram, &SkeinConfig { cap, ..SkeinConfig::default() }) {
                let mu = a.diagram.component_count() as i64;
                let parity = p.terms().all(|(e2, _)| (e2 / 2 - (mu - 1)) % 2 == 0);
                b.push(Verdict::compare(name, "nabla powers = mu - 1 mod 2", true, parity));
            }
        }
    }
    b
}

/// Structural suite on random diagrams, any signs, random outer faces.
pub fn structure_random(seed: u64, trials: usize, max_crossings: usize, cap: usize) -> Battery {
    let mut b = Battery::new("structure random");
    let mut r = rng(seed);
    for t in 0..trials {
        let s = random_diagram(&mut r, max_crossings);
        let outer = random_outer_face(&mut r, &s.diagram);
        let name = format!("#{t} {} outer {outer:?}", s.name);
        match analyze(&s.diagram, outer) {
            Ok(a) => b.extend(structure(&name, &a, Some(cap))),
            Err(e) => b.push(Verdict::error(&name, "analysis", "a plane diagram", e)),
        }
    }
    b
}

/// Dual-graph checks on homogeneous random diagrams (no skein).
pub fn dual_random(seed: u64, trials: usize, max_crossings: usize) -> Battery {
    let mut b = Battery::new("dual random");
    let mut r = rng(seed);
    for t in 0..trials {
        let s = random_homogeneous(&mut r, max_crossings);
        let outer = random_outer_face(&mut r, &s.diagram);
        let name = format!("#{t} {} outer {outer:?}", s.name);
        match analyze(&s.diagram, outer) {
            Ok(a) => b.extend(structure(&name, &a, None)),
            Err(e) => b.push(Verdict::error(&name, "analysis", "a plane diagram", e)),
        }
    }
    b
}

/// `|leading| = 1` iff every block has two vertices, on special alternating
/// items of `samples` plus sums of torus diagrams.
pub fn torus_claim(samples: &[Sample], max_sum_crossings: usize) -> Battery {
    let mut b = Battery::new("torus claim");
    let mut all: Vec<Sample> = samples.to_vec();
    all.extend(torus_sums(max_sum_crossings));
    for s in &all {
        let a = match analyze(&s.diagram, None) {
            Ok(a) => a,
            Err(e) => {
                b.push(Verdict::error(&s.name, "analysis", "a plane diagram", e));
                continue;
            }
        };
        if !(a.special && a.homogeneity.homogeneous && is_alternating(&a.diagram)) {
            continue;
        }
        match torus_sum_check(&a) {
            Ok(v) => b.push(Verdict::new(
                &s.name,
                "|leading| = 1 iff all blocks have two vertices",
                "biconditional",
                format!("leading {}, all two-vertex {}", v.leading, v.all_two_vertex),
                v.holds,
            )),
            Err(e) => b.push(Verdict::error(&s.name, "torus claim", "verdict", e)),
        }
    }
    b
}

/// Expectations from a corpus file.
pub fn expectations(entries: &[CorpusEntry], caps: Caps) -> Battery {
    let mut b = Battery::new("corpus expectations");
    for e in entries {
        let Some(x) = &e.expectations else { continue };
        let d = match crate::input::parse_any(&e.pd) {
            Ok(d) => d,
            Err(err) => {
                b.push(Verdict::error(&e.name, "input", "diagram", err));
                continue;
            }
        };
        check_expectations(&mut b, &e.name, &d, x, caps);
    }
    b
}

fn check_expectations(b: &mut Battery, name: &str, d: &seifert_core::Diagram, x: &Expectations, caps: Caps) {
    if x.conway.is_some() || x.lambda.is_some() || x.leading.is_some() {
        match conway_skein_with(d, &SkeinConfig { cap: caps.skein, ..SkeinConfig::default() }) {
            Ok(p) => {
                if let Some(c) = &x.conway {
                    b.push(Verdict::compare(name, "conway", c.clone(), p.to_text()));
                }
                if let Some(l) = x.lambda {
                    let want = LaurentPoly::from_terms(Var::Z, [(0, 1), (4, l)]);
                    b.push(Verdict::compare(name, "conway = 1 + lambda z^2", want.to_text(), p.to_text()));
                }
                if let Some(l) = x.leading {
                    b.push(Verdict::compare(name, "conway leading coefficient", l, p.leading()));
                }
            }
            Err(err) => b.push(Verdict::error(name, "conway", "skein", err)),
        }
    }
    if let Some(span) = &x.span {
        match kauffman_jones_capped(d, caps.jones).and_then(|f| poly_stats(&f)) {
            Ok(st) => b.push(Verdict::compare(name, "jones span", span.clone(), half(st.span2))),
            Err(err) => b.push(Verdict::error(name, "jones span", span, err)),
        }
    }
}

//! Kauffman bracket state sum and the Jones polynomial normalized so that
//! the unknot gets `-t^(1/2) - t^(-1/2)`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::diagram::Diagram;
use crate::dsu::Dsu;
use crate::error::{Error, Result};
use crate::laurent::{LaurentPoly, Var};

pub const DEFAULT_JONES_CAP: usize = 18;

/// Kauffman bracket `<D>` in `A`, with `<O> = 1`.
pub fn kauffman_bracket(d: &Diagram, cap: usize) -> Result<LaurentPoly> {
    let n = d.crossing_count();
    if n > cap {
        return Err(Error::CapExceeded { crossings: n, cap });
    }
    let labels = d.labels();
    let index: BTreeMap<u32, usize> = labels.iter().enumerate().map(|(k, &l)| (l, k)).collect();
    let tuples: Vec<[usize; 4]> = d.crossings().iter().map(|t| t.map(|l| index[&l])).collect();
    // (A-count minus B-count, loop count) -> number of states
    let mut hist: BTreeMap<(i64, usize), i64> = BTreeMap::new();
    for state in 0u64..(1u64 << n) {
        let mut dsu = Dsu::new(labels.len());
        let mut balance = 0i64;
        for (c, t) in tuples.iter().enumerate() {
            if state >> c & 1 == 0 {
                // A-smoothing
                dsu.union(t[0], t[3]);
                dsu.union(t[1], t[2]);
                balance += 1;
            } else {
                dsu.union(t[0], t[1]);
                dsu.union(t[2], t[3]);
                balance -= 1;
            }
        }
        let loops = dsu.classes().1 + d.unknots();
        *hist.entry((balance, loops)).or_insert(0) += 1;
    }
    if n == 0 {
        hist.insert((0, d.unknots().max(1)), 1);
    }
    let delta = LaurentPoly::from_terms(Var::A, [(4, -1), (-4, -1)]);
    let mut out = LaurentPoly::zero(Var::A);
    for ((balance, loops), count) in hist {
        let term = &LaurentPoly::monomial(Var::A, count, 2 * balance) * &delta.pow(loops as u32 - 1);
        out = &out + &term;
    }
    Ok(out)
}

/// `(-A^3)^(-w) <D>`, invariant under all Reidemeister moves.
pub fn normalized_bracket(d: &Diagram, cap: usize) -> Result<LaurentPoly> {
    let b = kauffman_bracket(d, cap)?;
    let w = d.writhe();
    let sign = if w % 2 == 0 { 1 } else { -1 };
    Ok(b.shift(-6 * w).scale(sign))
}

/// Jones polynomial `V(t)` under `A = t^(1/4)`.
pub fn jones(d: &Diagram, cap: usize) -> Result<LaurentPoly> {
    let nb = normalized_bracket(d, cap)?;
    let mut v = LaurentPoly::zero(Var::T);
    for (e2, c) in nb.terms() {
        // A^(e2/2) = t^(e2/8), stored doubled as e2/4
        if e2 % 4 != 0 {
            return Err(Error::Corrupt("bracket exponents are not congruent mod 4".into()));
        }
        v.add_term(e2 / 4, c);
    }
    Ok(v)
}

/// The normalization `f = (-t^(1/2) - t^(-1/2)) V`.
pub fn kauffman_jones(d: &Diagram) -> Result<LaurentPoly> {
    kauffman_jones_capped(d, DEFAULT_JONES_CAP)
}

pub fn kauffman_jones_capped(d: &Diagram, cap: usize) -> Result<LaurentPoly> {
    let v = jones(d, cap)?;
    Ok(&v * &unknot_factor())
}

pub fn unknot_factor() -> LaurentPoly {
    LaurentPoly::from_terms(Var::T, [(1, -1), (-1, -1)])
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PolyStats {
    /// Exponents doubled, so `-9/2` is `-9`.
    pub lowest2: i64,
    pub highest2: i64,
    pub span2: i64,
    pub leading: i64,
    pub trailing: i64,
}

pub fn poly_stats(p: &LaurentPoly) -> Result<PolyStats> {
    let (lo, hi) = match (p.min_exp2(), p.max_exp2()) {
        (Some(a), Some(b)) => (a, b),
        _ => return Err(Error::ZeroPolynomial),
    };
    Ok(PolyStats { lowest2: lo, highest2: hi, span2: hi - lo, leading: p.leading(), trailing: p.trailing() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::parse_pd;
    use alloc::string::ToString;

    #[test]
    fn unknot_and_kinks() {
        let f = kauffman_jones(&Diagram::unknot()).unwrap();
        assert_eq!(f, unknot_factor());
        let mut parsed = 0;
        for t in [[1, 1, 2, 2], [1, 2, 2, 1], [2, 1, 1, 2], [2, 2, 1, 1]] {
            if let Ok(d) = Diagram::from_pd(alloc::vec![t], 0) {
                parsed += 1;
                assert_eq!(kauffman_jones(&d).unwrap(), unknot_factor(), "{t:?}");
            }
        }
        assert!(parsed >= 2);
    }

    #[test]
    fn trefoils() {
        let d = parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)").unwrap();
        let f = kauffman_jones(&d).unwrap();
        let st = poly_stats(&f).unwrap();
        assert_eq!(st.lowest2, -9);
        assert_eq!(st.span2, 8);
        let m = kauffman_jones(&d.mirror()).unwrap();
        assert_eq!(m.to_string(), "-t^(1/2) - t^(3/2) - t^(5/2) + t^(9/2)");
        assert_eq!(m, f.invert_var());
    }

    #[test]
    fn figure_eight_is_amphichiral() {
        let d = parse_pd("X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)").unwrap();
        let f = kauffman_jones(&d).unwrap();
        assert_eq!(f, f.invert_var());
    }
}

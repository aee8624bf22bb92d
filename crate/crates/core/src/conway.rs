//! Conway polynomial, by a skein resolving tree and from a Seifert matrix.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::ToPrimitive;

use crate::diagram::{Diagram, Dart};
use crate::error::{Error, Result};
use crate::laurent::{LaurentPoly, Var};
use crate::matrix::{det_pencil, IntMatrix};

pub const DEFAULT_SKEIN_CAP: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SkeinConfig {
    pub cap: usize,
    /// Start each component's walk this many edges past its smallest label.
    pub basepoint_shift: usize,
    /// Walk components in decreasing basepoint order.
    pub reverse_components: bool,
}

impl Default for SkeinConfig {
    fn default() -> Self {
        SkeinConfig { cap: DEFAULT_SKEIN_CAP, basepoint_shift: 0, reverse_components: false }
    }
}

pub fn conway_skein(d: &Diagram) -> Result<LaurentPoly> {
    conway_skein_with(d, &SkeinConfig::default())
}

pub fn conway_skein_with(d: &Diagram, cfg: &SkeinConfig) -> Result<LaurentPoly> {
    if d.crossing_count() > cfg.cap {
        return Err(Error::CapExceeded { crossings: d.crossing_count(), cap: cfg.cap });
    }
    let mut memo = BTreeMap::new();
    skein(d, cfg, &mut memo)
}

type Memo = BTreeMap<(Vec<[u32; 4]>, Vec<bool>, usize), LaurentPoly>;

fn skein(d: &Diagram, cfg: &SkeinConfig, memo: &mut Memo) -> Result<LaurentPoly> {
    if d.crossing_count() == 0 {
        let one = if d.unknots() <= 1 { 1 } else { 0 };
        return Ok(LaurentPoly::monomial(Var::Z, one, 0));
    }
    if d.split_pieces() > 1 {
        return Ok(LaurentPoly::zero(Var::Z));
    }
    let key = d.memo_key();
    if let Some(p) = memo.get(&key) {
        return Ok(p.clone());
    }
    let value = match first_undercrossing(d, cfg) {
        None => {
            let mu = d.component_count();
            LaurentPoly::monomial(Var::Z, if mu == 1 { 1 } else { 0 }, 0)
        }
        Some(x) => {
            let sign = d.crossing_sign(x)? as i64;
            let switched = skein(&d.switch_crossing(x)?, cfg, memo)?;
            let smoothed = skein(&d.smooth_crossing(x)?, cfg, memo)?;
            &switched + &smoothed.shift(2).scale(sign)
        }
    };
    memo.insert(key, value.clone());
    Ok(value)
}

/// First crossing met from below on the descending walk, if any.
fn first_undercrossing(d: &Diagram, cfg: &SkeinConfig) -> Option<usize> {
    let mut comps = d.components();
    if cfg.reverse_components {
        comps.reverse();
    }
    let mut seen = vec![false; d.crossing_count()];
    for comp in &comps {
        let k = comp.len();
        for step in 0..k {
            let label = comp[(step + cfg.basepoint_shift) % k];
            let tail: Dart = d.tail_of(label).expect("component labels exist");
            let head = d.mate(tail);
            let x = head / 4;
            if !seen[x] {
                seen[x] = true;
                if head.is_multiple_of(4) {
                    return Some(x);
                }
            }
        }
    }
    None
}

/// How `z` is written in terms of the variable of `det(xM - x^-1 M^T)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ZSubstitution {
    /// `z = x^-1 - x`.
    #[default]
    InverseMinusX,
    /// `z = x - x^-1`.
    XMinusInverse,
}

/// `det(xM - x^-1 M^T)` as a Laurent polynomial in `x`.
pub fn alexander_conway_x(m: &IntMatrix) -> Result<LaurentPoly> {
    let p = det_pencil(m)?;
    let n = m.order() as i64;
    let mut out = LaurentPoly::zero(Var::X);
    for (k, c) in p.iter().enumerate() {
        let c = c.to_i64().ok_or_else(|| Error::Corrupt("coefficient exceeds 64 bits".into()))?;
        // x^k contributes x^(2k - n) after factoring x^-n
        out.add_term(2 * (2 * k as i64 - n), c);
    }
    Ok(out)
}

pub fn conway_from_matrix(m: &IntMatrix, subst: ZSubstitution) -> Result<LaurentPoly> {
    let mut rest = alexander_conway_x(m)?;
    let x = LaurentPoly::monomial(Var::X, 1, 2);
    let xinv = LaurentPoly::monomial(Var::X, 1, -2);
    let zx = match subst {
        ZSubstitution::InverseMinusX => &xinv - &x,
        ZSubstitution::XMinusInverse => &x - &xinv,
    };
    let top_sign = match subst {
        ZSubstitution::InverseMinusX => -1,
        ZSubstitution::XMinusInverse => 1,
    };
    let mut out = LaurentPoly::zero(Var::Z);
    while let Some(e2) = rest.max_exp2() {
        if e2 < 0 || e2 % 2 != 0 {
            return Err(Error::Corrupt("determinant is not a polynomial in z".into()));
        }
        let e = e2 / 2;
        let lead = rest.leading();
        let coef = if e % 2 == 0 { lead } else { lead * top_sign };
        out.add_term(e2, coef);
        rest = &rest - &zx.pow(e as u32).scale(coef);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::parse_pd;
    use alloc::string::ToString;

    fn nabla(pd: &str) -> LaurentPoly {
        conway_skein(&parse_pd(pd).unwrap()).unwrap()
    }

    #[test]
    fn small_knots() {
        assert_eq!(nabla("").to_string(), "1");
        assert_eq!(nabla("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)").to_string(), "1 + z^2");
        assert_eq!(nabla("X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)").to_string(), "1 - z^2");
        let hopf = nabla("X(1,3,2,4) X(3,1,4,2)");
        assert_eq!(hopf.max_exp2(), Some(2));
        assert_eq!(hopf.coeff(2).abs(), 1);
    }

    #[test]
    fn mirror_of_hopf_negates() {
        let d = parse_pd("X(1,3,2,4) X(3,1,4,2)").unwrap();
        let p = conway_skein(&d).unwrap();
        let q = conway_skein(&d.mirror()).unwrap();
        assert_eq!(p, q.scale(-1));
        assert_eq!(p.coeff(2), d.crossing_sign(0).unwrap() as i64);
    }

    #[test]
    fn matrix_route() {
        let t = IntMatrix::from_rows(&[vec![-1, 1], vec![0, -1]]).unwrap();
        assert_eq!(conway_from_matrix(&t, ZSubstitution::default()).unwrap().to_string(), "1 + z^2");
        assert_eq!(conway_from_matrix(&IntMatrix::zeros(0, 0), ZSubstitution::default()).unwrap().to_string(), "1");
        let hopf = IntMatrix::from_rows(&[vec![-1]]).unwrap();
        assert_eq!(conway_from_matrix(&hopf, ZSubstitution::InverseMinusX).unwrap().to_string(), "z");
        assert_eq!(conway_from_matrix(&hopf, ZSubstitution::XMinusInverse).unwrap().to_string(), "-z");
    }

    #[test]
    fn cap_is_enforced() {
        let d = parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)").unwrap();
        let cfg = SkeinConfig { cap: 2, ..SkeinConfig::default() };
        assert_eq!(conway_skein_with(&d, &cfg), Err(Error::CapExceeded { crossings: 3, cap: 2 }));
    }
}

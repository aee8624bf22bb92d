//! Sparse Laurent polynomials in one variable with half-integer exponents.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    Z,
    X,
    A,
    T,
}

impl Var {
    pub fn symbol(self) -> char {
        match self {
            Var::Z => 'z',
            Var::X => 'x',
            Var::A => 'A',
            Var::T => 't',
        }
    }
}

/// Exponents are stored doubled so that `t^(1/2)` has key 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    pub var: Var,
    terms: BTreeMap<i64, i64>,
}

impl LaurentPoly {
    pub fn zero(var: Var) -> Self {
        LaurentPoly { var, terms: BTreeMap::new() }
    }

    pub fn one(var: Var) -> Self {
        Self::monomial(var, 1, 0)
    }

    /// `coef * var^(exp2 / 2)`.
    pub fn monomial(var: Var, coef: i64, exp2: i64) -> Self {
        let mut p = Self::zero(var);
        p.add_term(exp2, coef);
        p
    }

    /// Integer exponents `0, 1, 2, ...`.
    pub fn from_coeffs(var: Var, coeffs: &[i64]) -> Self {
        let mut p = Self::zero(var);
        for (i, &c) in coeffs.iter().enumerate() {
            p.add_term(2 * i as i64, c);
        }
        p
    }

    pub fn from_terms(var: Var, terms: impl IntoIterator<Item = (i64, i64)>) -> Self {
        let mut p = Self::zero(var);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, exp2: i64, coef: i64) {
        if coef == 0 {
            return;
        }
        let slot = self.terms.entry(exp2).or_insert(0);
        *slot += coef;
        if *slot == 0 {
            self.terms.remove(&exp2);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp2: i64) -> i64 {
        self.terms.get(&exp2).copied().unwrap_or(0)
    }

    /// Terms as `(doubled exponent, coefficient)` in increasing exponent.
    pub fn terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn max_exp2(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn min_exp2(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    /// Coefficient of the highest power.
    pub fn leading(&self) -> i64 {
        self.terms.values().next_back().copied().unwrap_or(0)
    }

    /// Coefficient of the lowest power.
    pub fn trailing(&self) -> i64 {
        self.terms.values().next().copied().unwrap_or(0)
    }

    /// Highest exponent in whole units; panics on half-integer exponents.
    pub fn degree(&self) -> Option<i64> {
        self.max_exp2().map(|e| {
            assert!(e % 2 == 0, "half-integer degree");
            e / 2
        })
    }

    /// Doubled span `max - min` of the exponents.
    pub fn span2(&self) -> i64 {
        match (self.min_exp2(), self.max_exp2()) {
            (Some(a), Some(b)) => b - a,
            _ => 0,
        }
    }

    pub fn scale(&self, k: i64) -> Self {
        Self::from_terms(self.var, self.terms().map(|(e, c)| (e, c * k)))
    }

    /// Multiplies by `var^(exp2 / 2)`.
    pub fn shift(&self, exp2: i64) -> Self {
        Self::from_terms(self.var, self.terms().map(|(e, c)| (e + exp2, c)))
    }

    /// Substitutes `var -> var^-1`.
    pub fn invert_var(&self) -> Self {
        Self::from_terms(self.var, self.terms().map(|(e, c)| (-e, c)))
    }

    /// Substitutes `var -> var^k` for integer `k`.
    pub fn power_var(&self, k: i64) -> Self {
        Self::from_terms(self.var, self.terms().map(|(e, c)| (e * k, c)))
    }

    pub fn with_var(&self, var: Var) -> Self {
        LaurentPoly { var, terms: self.terms.clone() }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::one(self.var);
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    /// Value at `var = 1`; half-integer powers of 1 are taken as 1.
    pub fn eval_one(&self) -> i64 {
        self.terms.values().sum()
    }

    /// Value at `var = -1`; defined when all exponents are integers.
    pub fn eval_minus_one(&self) -> Option<i64> {
        let mut s = 0;
        for (e, c) in self.terms() {
            if e % 2 != 0 {
                return None;
            }
            s += if (e / 2) % 2 == 0 { c } else { -c };
        }
        Some(s)
    }

    /// Dense coefficients from exponent 0 upward, for polynomials with only
    /// non-negative integer exponents.
    pub fn dense(&self) -> Option<Vec<i64>> {
        let top = match self.max_exp2() {
            None => return Some(Vec::new()),
            Some(t) => t,
        };
        if self.terms().any(|(e, _)| e < 0 || e % 2 != 0) {
            return None;
        }
        Some((0..=top / 2).map(|k| self.coeff(2 * k)).collect())
    }

    pub fn to_text(&self) -> String {
        alloc::format!("{self}")
    }
}

fn fmt_exponent(f: &mut fmt::Formatter<'_>, v: char, e2: i64) -> fmt::Result {
    match e2 {
        0 => Ok(()),
        2 => write!(f, "{v}"),
        e if e % 2 == 0 => write!(f, "{v}^{}", e / 2),
        e => write!(f, "{v}^({}/2)", e),
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let v = self.var.symbol();
        for (i, (e, c)) in self.terms().enumerate() {
            let mag = c.unsigned_abs();
            match (i, c < 0) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if mag != 1 || e == 0 {
                write!(f, "{mag}")?;
                if e != 0 {
                    write!(f, "*")?;
                }
            }
            fmt_exponent(f, v, e)?;
        }
        Ok(())
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, c);
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, -c);
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero(self.var);
        for (a, x) in self.terms() {
            for (b, y) in rhs.terms() {
                out.add_term(a + b, x * y);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.scale(-1)
    }
}

macro_rules! by_value {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
by_value!(Add, add);
by_value!(Sub, sub);
by_value!(Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn arithmetic_and_display() {
        let z = LaurentPoly::monomial(Var::Z, 1, 2);
        let p = &LaurentPoly::one(Var::Z) + &z.pow(2);
        assert_eq!(p.to_string(), "1 + z^2");
        assert_eq!((&p - &p).to_string(), "0");
        let q = LaurentPoly::from_terms(Var::T, [(1, -1), (3, -1), (9, 1)]);
        assert_eq!(q.to_string(), "-t^(1/2) - t^(3/2) + t^(9/2)");
        assert_eq!(LaurentPoly::monomial(Var::A, -3, -4).to_string(), "-3*A^-2");
        assert_eq!(q.span2(), 8);
        assert_eq!(q.invert_var().max_exp2(), Some(-1));
    }

    #[test]
    fn product_of_binomials() {
        let a = LaurentPoly::from_coeffs(Var::X, &[1, 1]);
        let b = LaurentPoly::from_coeffs(Var::X, &[-1, 1]);
        assert_eq!((&a * &b).dense().unwrap(), alloc::vec![-1, 0, 1]);
        assert_eq!(a.pow(3).eval_one(), 8);
        assert_eq!(a.pow(3).eval_minus_one(), Some(0));
    }
}

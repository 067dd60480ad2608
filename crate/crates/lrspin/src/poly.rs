//! Polynomials in one variable `t` with exact integer coefficients.

use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul};

/// A finitely supported integer polynomial in `t`, e.g. `t + t^3`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct GradedPolynomial {
    coeffs: BTreeMap<usize, i64>,
}

impl GradedPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    pub fn monomial(exp: usize, coeff: i64) -> Self {
        let mut coeffs = BTreeMap::new();
        if coeff != 0 {
            coeffs.insert(exp, coeff);
        }
        GradedPolynomial { coeffs }
    }

    pub fn coeff(&self, exp: usize) -> i64 {
        self.coeffs.get(&exp).copied().unwrap_or(0)
    }

    pub fn add_term(&mut self, exp: usize, coeff: i64) {
        let entry = self.coeffs.entry(exp).or_insert(0);
        *entry += coeff;
        if *entry == 0 {
            self.coeffs.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, i64)> + '_ {
        self.coeffs.iter().map(|(&e, &c)| (e, c))
    }

    /// Evaluation at an integer point; `eval(1)` is the coefficient sum.
    pub fn eval(&self, t: i64) -> i64 {
        self.coeffs
            .iter()
            .map(|(&e, &c)| c * t.pow(e as u32))
            .sum()
    }

    /// Exact division by `divisor`; `None` when there is a remainder.
    pub fn div_exact(&self, divisor: &GradedPolynomial) -> Option<GradedPolynomial> {
        let mut rem = self.clone();
        let mut quot = GradedPolynomial::zero();
        let (&dlead, &dc) = divisor.coeffs.iter().next_back()?;
        while let Some((&rlead, &rc)) = rem.coeffs.iter().next_back() {
            if rlead < dlead || rc % dc != 0 {
                return None;
            }
            let exp = rlead - dlead;
            let c = rc / dc;
            quot.add_term(exp, c);
            let scaled: GradedPolynomial = divisor
                .terms()
                .map(|(e, k)| GradedPolynomial::monomial(e + exp, -k * c))
                .fold(GradedPolynomial::zero(), |a, b| a + b);
            rem += scaled;
        }
        Some(quot)
    }

    /// Multiplies by `other` and drops every term of degree above `bound`.
    pub fn mul_truncated(&self, other: &GradedPolynomial, bound: usize) -> GradedPolynomial {
        let mut out = GradedPolynomial::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in other.terms() {
                if e1 + e2 <= bound {
                    out.add_term(e1 + e2, c1 * c2);
                }
            }
        }
        out
    }

    pub fn truncate(&self, bound: usize) -> GradedPolynomial {
        GradedPolynomial {
            coeffs: self
                .coeffs
                .iter()
                .filter(|(&e, _)| e <= bound)
                .map(|(&e, &c)| (e, c))
                .collect(),
        }
    }

    /// `1 + t^step + t^{2 step} + …` up to degree `bound`: the truncated
    /// expansion of `1/(1 - t^step)`.
    pub fn geometric(step: usize, bound: usize) -> GradedPolynomial {
        let mut out = GradedPolynomial::zero();
        let mut e = 0;
        while e <= bound {
            out.add_term(e, 1);
            if step == 0 {
                break;
            }
            e += step;
        }
        out
    }
}

impl Add for GradedPolynomial {
    type Output = GradedPolynomial;
    fn add(mut self, rhs: GradedPolynomial) -> GradedPolynomial {
        self += rhs;
        self
    }
}

impl AddAssign for GradedPolynomial {
    fn add_assign(&mut self, rhs: GradedPolynomial) {
        for (e, c) in rhs.terms() {
            self.add_term(e, c);
        }
    }
}

impl Mul for &GradedPolynomial {
    type Output = GradedPolynomial;
    fn mul(self, rhs: &GradedPolynomial) -> GradedPolynomial {
        let mut out = GradedPolynomial::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl fmt::Debug for GradedPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match e {
                0 => write!(f, "{c}")?,
                1 if c == 1 => write!(f, "t")?,
                1 => write!(f, "{c}*t")?,
                _ if c == 1 => write!(f, "t^{e}")?,
                _ => write!(f, "{c}*t^{e}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for GradedPolynomial {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut map = serializer.serialize_map(Some(1))?;
        let coeffs: BTreeMap<String, i64> = self
            .terms()
            .map(|(e, c)| (e.to_string(), c))
            .collect();
        map.serialize_entry("coeffs", &coeffs)?;
        map.end()
    }
}

//! Sparse Laurent polynomials with integer coefficients.
//!
//! Variables `0..n` are the mutable initial cluster variables `x1..xn`,
//! variables `n..2n` the frozen ones, printed `y1..yn`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

pub type Exponent = Vec<i32>;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentPolynomial {
    nvars: usize,
    terms: BTreeMap<Exponent, i64>,
}

fn add_coeff(terms: &mut BTreeMap<Exponent, i64>, e: Exponent, c: i64) {
    use std::collections::btree_map::Entry;
    match terms.entry(e) {
        Entry::Vacant(v) => {
            if c != 0 {
                v.insert(c);
            }
        }
        Entry::Occupied(mut o) => {
            let s = o.get().checked_add(c).expect("coefficient overflow");
            if s == 0 {
                o.remove();
            } else {
                *o.get_mut() = s;
            }
        }
    }
}

impl LaurentPolynomial {
    pub fn zero(nvars: usize) -> Self {
        Self {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::monomial(vec![0; nvars], 1)
    }

    pub fn monomial(exp: Exponent, coeff: i64) -> Self {
        let nvars = exp.len();
        let mut terms = BTreeMap::new();
        if coeff != 0 {
            terms.insert(exp, coeff);
        }
        Self { nvars, terms }
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(e, 1)
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Exponent, i64)>) -> Self {
        let mut out = BTreeMap::new();
        for (e, c) in terms {
            assert_eq!(e.len(), nvars);
            add_coeff(&mut out, e, c);
        }
        Self { nvars, terms: out }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponent, i64)> + '_ {
        self.terms.iter().map(|(e, &c)| (e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: &[i32]) -> i64 {
        self.terms.get(e).copied().unwrap_or(0)
    }

    pub fn as_monomial(&self) -> Option<(&Exponent, i64)> {
        (self.terms.len() == 1).then(|| self.terms().next().unwrap())
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (e, &c) in &other.terms {
            add_coeff(&mut terms, e.clone(), c);
        }
        Self {
            nvars: self.nvars,
            terms,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(-1))
    }

    pub fn scale(&self, k: i64) -> Self {
        Self::from_terms(
            self.nvars,
            self.terms
                .iter()
                .map(|(e, &c)| (e.clone(), c.checked_mul(k).expect("coefficient overflow"))),
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut terms = BTreeMap::new();
        for (e1, &c1) in &self.terms {
            for (e2, &c2) in &other.terms {
                let e: Exponent = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                add_coeff(&mut terms, e, c1.checked_mul(c2).expect("coefficient overflow"));
            }
        }
        Self {
            nvars: self.nvars,
            terms,
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn shift(&self, by: &[i32]) -> Self {
        Self {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, &c)| (e.iter().zip(by).map(|(a, b)| a + b).collect(), c))
                .collect(),
        }
    }

    /// Entrywise minimum of the exponents over all terms (zero for the zero polynomial).
    pub fn min_exponents(&self) -> Exponent {
        let mut it = self.terms.keys();
        let Some(first) = it.next() else {
            return vec![0; self.nvars];
        };
        let mut m = first.clone();
        for e in it {
            for (a, &b) in m.iter_mut().zip(e) {
                *a = (*a).min(b);
            }
        }
        m
    }

    /// `self / divisor`, failing unless the quotient is a Laurent polynomial.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        assert_eq!(self.nvars, divisor.nvars);
        if divisor.is_zero() {
            return Err(Error::InexactDivision);
        }
        if self.is_zero() {
            return Ok(self.clone());
        }
        let a = self.min_exponents();
        let b = divisor.min_exponents();
        let neg = |v: &[i32]| -> Vec<i32> { v.iter().map(|x| -x).collect() };
        let mut rem = self.shift(&neg(&a));
        let d = divisor.shift(&neg(&b));
        let (d_lead, d_coeff) = d.terms.iter().next_back().map(|(e, &c)| (e.clone(), c)).unwrap();
        let mut quotient = BTreeMap::new();
        while let Some((lead, c)) = rem.terms.iter().next_back().map(|(e, &c)| (e.clone(), c)) {
            if c % d_coeff != 0 || lead.iter().zip(&d_lead).any(|(x, y)| x < y) {
                return Err(Error::InexactDivision);
            }
            let qe: Exponent = lead.iter().zip(&d_lead).map(|(x, y)| x - y).collect();
            let qc = c / d_coeff;
            rem = rem.sub(&d.shift(&qe).scale(qc));
            add_coeff(&mut quotient, qe, qc);
        }
        let offset: Vec<i32> = a.iter().zip(&b).map(|(x, y)| x - y).collect();
        Ok(Self {
            nvars: self.nvars,
            terms: quotient,
        }
        .shift(&offset))
    }

    fn var_name(&self, i: usize) -> String {
        let n = self.nvars / 2;
        if i < n {
            format!("x{}", i + 1)
        } else {
            format!("y{}", i - n + 1)
        }
    }

    fn monomial_text(&self, e: &[i32]) -> String {
        let parts: Vec<String> = e
            .iter()
            .enumerate()
            .filter(|(_, &k)| k != 0)
            .map(|(i, &k)| {
                if k == 1 {
                    self.var_name(i)
                } else {
                    format!("{}^{}", self.var_name(i), k)
                }
            })
            .collect();
        parts.join("*")
    }
}

impl fmt::Display for LaurentPolynomial {
    /// Terms in descending lexicographic order of exponents, e.g. `x1^-1*x2*y1 + x1^-1*y2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (e, &c)) in self.terms.iter().rev().enumerate() {
            let mono = self.monomial_text(e);
            let (sign, mag) = if c < 0 { ("-", -c) } else { ("+", c) };
            if k == 0 {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            match (mono.is_empty(), mag) {
                (true, _) => write!(f, "{mag}")?,
                (false, 1) => write!(f, "{mono}")?,
                (false, _) => write!(f, "{mag}*{mono}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for LaurentPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn poly(n: usize, terms: &[(&[i32], i64)]) -> LaurentPolynomial {
        LaurentPolynomial::from_terms(n, terms.iter().map(|(e, c)| (e.to_vec(), *c)))
    }

    #[test]
    fn exact_division_recovers_factor() {
        let a = poly(4, &[(&[1, 0, 0, 0], 1), (&[0, 1, 1, 0], 2)]);
        let b = poly(4, &[(&[-1, 2, 0, 0], 1), (&[0, 0, 0, 1], -3), (&[0, -1, 0, 0], 1)]);
        let p = a.mul(&b);
        assert_eq!(p.div_exact(&a).unwrap(), b);
        assert_eq!(p.div_exact(&b).unwrap(), a);
    }

    #[test]
    fn inexact_division_fails() {
        let a = poly(2, &[(&[1, 0], 1), (&[0, 1], 1)]);
        let b = poly(2, &[(&[1, 0], 1), (&[0, 1], -1)]);
        assert_eq!(a.div_exact(&b), Err(Error::InexactDivision));
        let two = poly(2, &[(&[0, 0], 2)]);
        assert_eq!(a.div_exact(&two), Err(Error::InexactDivision));
    }

    #[test]
    fn monomial_division_always_exact() {
        let a = poly(2, &[(&[1, 0], 1), (&[0, 1], 1)]);
        let x = LaurentPolynomial::var(2, 0);
        let q = a.div_exact(&x).unwrap();
        assert_eq!(q, poly(2, &[(&[0, 0], 1), (&[-1, 1], 1)]));
    }

    #[test]
    fn display_is_canonical() {
        let p = poly(4, &[(&[-1, 1, 1, 0], 1), (&[-1, 0, 0, 1], 1)]);
        assert_eq!(p.to_string(), "x1^-1*x2*y1 + x1^-1*y2");
        assert_eq!(LaurentPolynomial::one(2).to_string(), "1");
        assert_eq!(poly(2, &[(&[0, 0], -2)]).to_string(), "-2");
    }

    fn arb_poly() -> impl Strategy<Value = LaurentPolynomial> {
        proptest::collection::vec((proptest::collection::vec(-2i32..3, 3), -3i64..4), 1..5)
            .prop_map(|terms| LaurentPolynomial::from_terms(3, terms))
    }

    proptest! {
        #[test]
        fn product_divides_by_each_factor(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!a.is_zero() && !b.is_zero());
            let p = a.mul(&b);
            prop_assert_eq!(p.div_exact(&b).unwrap(), a);
        }

        #[test]
        fn min_exponents_are_additive(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!a.is_zero() && !b.is_zero());
            let m: Vec<i32> = a.min_exponents().iter().zip(b.min_exponents()).map(|(x, y)| x + y).collect();
            prop_assert_eq!(a.mul(&b).min_exponents(), m);
        }
    }
}

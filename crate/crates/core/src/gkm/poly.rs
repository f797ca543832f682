//! Sparse multivariate polynomials over the rationals.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::charring::{rat, rat_string, Rational};

/// Exponent vectors ordered lexicographically; the last key is the leading
/// term.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(e, Rational::one())
    }

    pub fn monomial(exps: Vec<u32>, c: Rational) -> Self {
        let mut p = Self::zero(exps.len());
        p.add_term(exps, c);
        p
    }

    /// `Σ c_i x_i + c_0`.
    pub fn linear(coeffs: &[Rational], constant: Rational) -> Self {
        let mut p = Self::constant(coeffs.len(), constant);
        for (i, c) in coeffs.iter().enumerate() {
            let mut e = vec![0; coeffs.len()];
            e[i] = 1;
            p.add_term(e, c.clone());
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn min_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).min()
    }

    pub fn coeff(&self, exps: &[u32]) -> Rational {
        self.terms.get(exps).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: Rational) {
        if c.is_zero() {
            return;
        }
        let s = match self.terms.remove(&exps) {
            Some(old) => old + c,
            None => c,
        };
        if !s.is_zero() {
            self.terms.insert(exps, s);
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Poly {
        self.scale(&rat(-1))
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (e, x) in &self.terms {
            out.add_term(e.clone(), x * c);
        }
        out
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (ea, a) in &self.terms {
            for (eb, b) in &other.terms {
                out.add_term(ea.iter().zip(eb).map(|(x, y)| x + y).collect(), a * b);
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> Poly {
        (0..n).fold(Poly::one(self.nvars), |acc, _| acc.mul(self))
    }

    /// The algebra map sending `x_i` to `images[i]`.
    pub fn substitute(&self, images: &[Poly]) -> Poly {
        let nv = images.first().map_or(self.nvars, |p| p.nvars);
        let mut powers: Vec<Vec<Poly>> = images.iter().map(|p| vec![Poly::one(nv), p.clone()]).collect();
        let mut out = Poly::zero(nv);
        for (e, c) in &self.terms {
            let mut m = Poly::constant(nv, c.clone());
            for (i, &a) in e.iter().enumerate() {
                while powers[i].len() <= a as usize {
                    let next = powers[i].last().unwrap().mul(&images[i]);
                    powers[i].push(next);
                }
                m = m.mul(&powers[i][a as usize]);
            }
            out = out.add(&m);
        }
        out
    }

    /// Exact quotient by lex-leading-term division, `None` if there is a
    /// remainder.
    pub fn div_exact(&self, other: &Poly) -> Option<Poly> {
        let (lead_e, lead_c) = other.terms.iter().next_back()?;
        let mut rem = self.clone();
        let mut quot = Poly::zero(self.nvars);
        while let Some((e, c)) = rem.terms.iter().next_back() {
            if e.iter().zip(lead_e).any(|(a, b)| a < b) {
                return None;
            }
            let qe: Vec<u32> = e.iter().zip(lead_e).map(|(a, b)| a - b).collect();
            let qc = c / lead_c;
            let step = Poly::monomial(qe, qc);
            rem = rem.sub(&step.mul(other));
            quot = quot.add(&step);
        }
        Some(quot)
    }

    /// All monomials of total degree at most `deg`.
    pub fn monomials_up_to(nvars: usize, deg: u32) -> Vec<Poly> {
        let mut out = Vec::new();
        let mut e = vec![0u32; nvars];
        fn rec(i: usize, left: u32, e: &mut Vec<u32>, out: &mut Vec<Poly>) {
            if i == e.len() {
                out.push(Poly::monomial(e.clone(), Rational::one()));
                return;
            }
            for a in 0..=left {
                e[i] = a;
                rec(i + 1, left - a, e, out);
            }
            e[i] = 0;
        }
        rec(0, deg, &mut e, &mut out);
        out
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        for (e, c) in self.terms.iter().rev() {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &a)| a > 0)
                .map(|(i, &a)| if a == 1 { format!("x{}", i + 1) } else { format!("x{}^{a}", i + 1) })
                .collect();
            parts.push(if mono.is_empty() {
                rat_string(c)
            } else if c.is_one() {
                mono.join("*")
            } else {
                format!("{}*{}", rat_string(c), mono.join("*"))
            });
        }
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn division() {
        let x = Poly::var(2, 0);
        let y = Poly::var(2, 1);
        let p = x.add(&y).mul(&x.sub(&y));
        assert_eq!(p.div_exact(&x.add(&y)), Some(x.sub(&y)));
        assert_eq!(p.div_exact(&x), None);
        assert_eq!(Poly::zero(2).div_exact(&x), Some(Poly::zero(2)));
    }

    #[test]
    fn substitution() {
        let x = Poly::var(2, 0);
        let y = Poly::var(2, 1);
        let p = x.mul(&x).add(&y);
        assert_eq!(p.substitute(&[y.clone(), x.clone()]), y.mul(&y).add(&x));
        assert_eq!(Poly::monomials_up_to(2, 2).len(), 6);
    }
}

//! The cyclotomic field `Q(ζ_l)`, elements stored as reduced polynomials
//! in `ζ_e` of degree below `φ(l)`.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::laurent::QLaurent;
use super::ring::{rat, rat_string, CoeffRing, Rational};

/// Integer coefficients (low degree first) of the `n`-th cyclotomic polynomial.
pub fn cyclotomic_polynomial(n: u64) -> Vec<BigInt> {
    // x^n - 1 divided by Φ_d for every proper divisor d
    let mut num: Vec<BigInt> = vec![BigInt::zero(); n as usize + 1];
    num[0] = BigInt::from(-1);
    num[n as usize] = BigInt::one();
    for d in 1..n {
        if n.is_multiple_of(d) {
            num = int_poly_div_exact(&num, &cyclotomic_polynomial(d));
        }
    }
    num
}

fn int_poly_div_exact(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut rem = a.to_vec();
    let db = b.len() - 1;
    let lead = &b[db];
    let mut q = vec![BigInt::zero(); a.len() - db];
    for k in (0..q.len()).rev() {
        let c = &rem[k + db] / lead;
        for (i, bi) in b.iter().enumerate() {
            rem[k + i] -= &c * bi;
        }
        q[k] = c;
    }
    debug_assert!(rem.iter().all(|x| x.is_zero()));
    q
}

#[derive(Debug)]
struct FieldData {
    l: u64,
    phi: usize,
    /// `ζ^j` reduced, for `0 ≤ j < max(l, 2φ)`.
    powers: Vec<Vec<Rational>>,
    modulus: Vec<Rational>,
}

/// The field `Q(ζ_l)` with `ζ_e` a fixed primitive `l`-th root of unity.
#[derive(Clone, Debug)]
pub struct CyclotomicRing {
    data: Arc<FieldData>,
}

impl PartialEq for CyclotomicRing {
    fn eq(&self, other: &Self) -> bool {
        self.data.l == other.data.l
    }
}

/// An element of `Q(ζ_l)`; trailing zero coefficients are trimmed.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct CycScalar {
    coeffs: Vec<Rational>,
}

impl CycScalar {
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    fn trimmed(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        CycScalar { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// The rational value, if the element lies in `Q`.
    pub fn as_rational(&self) -> Option<Rational> {
        match self.coeffs.len() {
            0 => Some(Rational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }
}

impl fmt::Debug for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            parts.push(match k {
                0 => rat_string(c),
                1 => format!("({})z", rat_string(c)),
                _ => format!("({})z^{k}", rat_string(c)),
            });
        }
        write!(f, "{}", parts.join(" + "))
    }
}

impl CyclotomicRing {
    pub fn new(l: u64) -> Self {
        assert!(l >= 1);
        let modulus: Vec<Rational> = cyclotomic_polynomial(l)
            .into_iter()
            .map(Rational::from_integer)
            .collect();
        let phi = modulus.len() - 1;
        let count = (l as usize).max(2 * phi);
        let mut powers = Vec::with_capacity(count);
        let mut cur = vec![Rational::zero(); phi];
        cur[0] = Rational::one();
        for _ in 0..count {
            powers.push(cur.clone());
            // multiply by ζ and reduce the top coefficient
            let top = cur[phi - 1].clone();
            let mut next = vec![Rational::zero(); phi];
            for i in (1..phi).rev() {
                next[i] = cur[i - 1].clone();
            }
            if !top.is_zero() {
                for (i, m) in modulus.iter().enumerate().take(phi) {
                    next[i] -= &top * m;
                }
            }
            cur = next;
        }
        CyclotomicRing { data: Arc::new(FieldData { l, phi, powers, modulus }) }
    }

    pub fn l(&self) -> u64 {
        self.data.l
    }

    pub fn degree(&self) -> usize {
        self.data.phi
    }

    /// Reduces an arbitrary polynomial in `ζ` (low degree first).
    pub fn reduce(&self, poly: &[Rational]) -> CycScalar {
        let l = self.data.l as usize;
        let phi = self.data.phi;
        let mut out = vec![Rational::zero(); phi];
        for (j, c) in poly.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let j = if j >= self.data.powers.len() { j % l } else { j };
            for (i, p) in self.data.powers[j].iter().enumerate() {
                if !p.is_zero() {
                    out[i] += c * p;
                }
            }
        }
        CycScalar::trimmed(out)
    }

    /// `ζ_e^k` for any integer `k`.
    pub fn zeta_pow(&self, k: i64) -> CycScalar {
        let j = k.rem_euclid(self.data.l as i64) as usize;
        CycScalar::trimmed(self.data.powers[j].clone())
    }

    /// Specializes `q_e ↦ ζ_e`.
    pub fn specialize(&self, x: &QLaurent) -> CycScalar {
        let mut acc = vec![Rational::zero(); self.data.phi];
        for (k, c) in x.terms() {
            let j = k.rem_euclid(self.data.l as i64) as usize;
            for (i, p) in self.data.powers[j].iter().enumerate() {
                if !p.is_zero() {
                    acc[i] += c * p;
                }
            }
        }
        CycScalar::trimmed(acc)
    }

    /// Coefficient vector padded to `φ(l)` entries.
    pub fn padded(&self, a: &CycScalar) -> Vec<Rational> {
        let mut v = a.coeffs.clone();
        v.resize(self.data.phi, Rational::zero());
        v
    }

    fn poly_inverse(&self, a: &[Rational]) -> Option<Vec<Rational>> {
        // extended Euclid on (modulus, a) over Q
        let mut r0: Vec<Rational> = self.data.modulus.clone();
        let mut r1: Vec<Rational> = a.to_vec();
        let mut t0: Vec<Rational> = vec![];
        let mut t1: Vec<Rational> = vec![Rational::one()];
        trim(&mut r1);
        if r1.is_empty() {
            return None;
        }
        while r1.len() > 1 {
            let (q, r) = poly_divmod(&r0, &r1);
            let t2 = poly_sub(&t0, &poly_mul(&q, &t1));
            r0 = r1;
            r1 = r;
            t0 = t1;
            t1 = t2;
            if r1.is_empty() {
                return None;
            }
        }
        let c = r1[0].recip();
        Some(t1.iter().map(|x| x * &c).collect())
    }
}

fn trim(v: &mut Vec<Rational>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

fn poly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let n = a.len().max(b.len());
    let mut out = vec![Rational::zero(); n];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trim(&mut out);
    out
}

fn poly_divmod(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut rem = a.to_vec();
    trim(&mut rem);
    let db = b.len() - 1;
    let lead = b[db].clone();
    if rem.len() < b.len() {
        return (vec![], rem);
    }
    let mut q = vec![Rational::zero(); rem.len() - db];
    for k in (0..q.len()).rev() {
        let c = &rem[k + db] / &lead;
        if !c.is_zero() {
            for (i, bi) in b.iter().enumerate() {
                rem[k + i] -= &c * bi;
            }
        }
        q[k] = c;
    }
    trim(&mut rem);
    trim(&mut q);
    (q, rem)
}

impl CoeffRing for CyclotomicRing {
    type Elem = CycScalar;

    fn zero(&self) -> CycScalar {
        CycScalar::default()
    }
    fn one(&self) -> CycScalar {
        CycScalar { coeffs: vec![Rational::one()] }
    }
    fn is_zero(&self, a: &CycScalar) -> bool {
        a.coeffs.is_empty()
    }
    fn add(&self, a: &CycScalar, b: &CycScalar) -> CycScalar {
        let n = a.coeffs.len().max(b.coeffs.len());
        let mut v = vec![Rational::zero(); n];
        for (i, x) in a.coeffs.iter().enumerate() {
            v[i] += x;
        }
        for (i, y) in b.coeffs.iter().enumerate() {
            v[i] += y;
        }
        CycScalar::trimmed(v)
    }
    fn neg(&self, a: &CycScalar) -> CycScalar {
        CycScalar { coeffs: a.coeffs.iter().map(|x| -x).collect() }
    }
    fn mul(&self, a: &CycScalar, b: &CycScalar) -> CycScalar {
        if a.coeffs.is_empty() || b.coeffs.is_empty() {
            return self.zero();
        }
        if a.coeffs.len() == 1 {
            return CycScalar::trimmed(b.coeffs.iter().map(|y| y * &a.coeffs[0]).collect());
        }
        if b.coeffs.len() == 1 {
            return CycScalar::trimmed(a.coeffs.iter().map(|x| x * &b.coeffs[0]).collect());
        }
        self.reduce(&poly_mul(&a.coeffs, &b.coeffs))
    }
    fn from_rational(&self, r: &Rational) -> CycScalar {
        CycScalar::trimmed(vec![r.clone()])
    }
    fn qe_pow(&self, k: i64) -> CycScalar {
        self.zeta_pow(k)
    }
    fn mul_qe_pow(&self, a: &CycScalar, k: i64) -> CycScalar {
        if a.coeffs.is_empty() {
            return self.zero();
        }
        let l = self.data.l as i64;
        let mut out = vec![Rational::zero(); self.data.phi];
        for (i, c) in a.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let j = (i as i64 + k).rem_euclid(l) as usize;
            for (t, p) in self.data.powers[j].iter().enumerate() {
                if !p.is_zero() {
                    out[t] += c * p;
                }
            }
        }
        CycScalar::trimmed(out)
    }
    fn unit_inverse(&self, a: &CycScalar) -> Option<CycScalar> {
        if a.coeffs.len() == 1 {
            return Some(CycScalar { coeffs: vec![a.coeffs[0].recip()] });
        }
        self.poly_inverse(&a.coeffs).map(|v| self.reduce(&v))
    }
    fn as_rational(&self, a: &CycScalar) -> Option<Rational> {
        a.as_rational()
    }
}

/// Convenience: the rational `n` as a field element.
pub fn cyc_int(ring: &CyclotomicRing, n: i64) -> CycScalar {
    ring.from_rational(&rat(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(3), ints(&[1, 1, 1]));
        assert_eq!(cyclotomic_polynomial(5), ints(&[1, 1, 1, 1, 1]));
        assert_eq!(cyclotomic_polynomial(9), ints(&[1, 0, 0, 1, 0, 0, 1]));
        assert_eq!(cyclotomic_polynomial(15), ints(&[1, -1, 0, 1, -1, 1, 0, -1, 1]));
    }

    #[test]
    fn roots_of_unity() {
        for l in [3u64, 5, 7, 9] {
            let f = CyclotomicRing::new(l);
            assert_eq!(f.zeta_pow(l as i64), f.one());
            for k in 1..l as i64 {
                assert_ne!(f.zeta_pow(k), f.one());
                assert_eq!(f.mul(&f.zeta_pow(k), &f.zeta_pow(-k)), f.one());
            }
        }
        let f = CyclotomicRing::new(3);
        // ζ + ζ^{-1} = -1 in Q(ζ_3)
        assert_eq!(f.add(&f.zeta_pow(1), &f.zeta_pow(-1)), cyc_int(&f, -1));
    }

    #[test]
    fn inverses() {
        let f = CyclotomicRing::new(7);
        let a = f.add(&f.zeta_pow(1), &cyc_int(&f, 2));
        let b = f.unit_inverse(&a).unwrap();
        assert_eq!(f.mul(&a, &b), f.one());
        assert!(f.unit_inverse(&f.zero()).is_none());
    }

    #[test]
    fn specialization() {
        let f = CyclotomicRing::new(3);
        assert_eq!(f.specialize(&QLaurent::monomial(rat(1), 3)), f.one());
        let x = QLaurent::from_terms([(1, rat(1)), (4, rat(-1))]);
        assert!(f.specialize(&x).is_zero());
    }
}

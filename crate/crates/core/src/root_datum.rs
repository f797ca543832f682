//! Simply-connected root data of irreducible type.
//!
//! Weights are stored in fundamental-weight coordinates, so the pairing with
//! a simple coroot is a coordinate projection. Roots are converted through
//! the columns of the Cartan matrix.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::weight::Weight;
use crate::weyl::{self, FiniteWeylElement};

/// The largest rank for which the finite Weyl group is enumerated.
pub const WEYL_RANK_CAP: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Series::A => "A",
            Series::B => "B",
            Series::C => "C",
            Series::D => "D",
            Series::E => "E",
            Series::F => "F",
            Series::G => "G",
        };
        f.write_str(c)
    }
}

impl FromStr for Series {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "A" => Ok(Series::A),
            "B" => Ok(Series::B),
            "C" => Ok(Series::C),
            "D" => Ok(Series::D),
            "E" => Ok(Series::E),
            "F" => Ok(Series::F),
            "G" => Ok(Series::G),
            _ => Err(Error::InvalidType { series: s.to_string(), rank: 0 }),
        }
    }
}

/// Parses a type string such as `"A2"` or `"e6"`.
pub fn parse_type(s: &str) -> Result<(Series, usize)> {
    let s = s.trim();
    let bad = || Error::InvalidType { series: s.to_string(), rank: 0 };
    let mut chars = s.chars();
    let letter = chars.next().ok_or_else(bad)?;
    let series: Series = letter.to_string().parse().map_err(|_| bad())?;
    let rank: usize = chars.as_str().parse().map_err(|_| bad())?;
    Ok((series, rank))
}

/// A simply-connected irreducible root datum together with its finite Weyl
/// group (enumerated when the rank is at most [`WEYL_RANK_CAP`]).
#[derive(Clone, Debug)]
pub struct RootDatum {
    pub series: Series,
    pub rank: usize,
    /// `cartan[i][j]` is the pairing of the `i`-th simple coroot with the
    /// `j`-th simple root.
    pub cartan: Vec<Vec<i64>>,
    pub symmetrizers: Vec<i64>,
    /// Positive roots in fundamental-weight coordinates, sorted by height.
    pub positive_roots: Vec<Weight>,
    /// The same roots in simple-root coordinates.
    pub positive_roots_simple: Vec<Vec<i64>>,
    pub rho: Weight,
    pub coxeter_number: i64,
    pub pi1_order: i64,
    pub exponents: Vec<i64>,
    /// `pi1_order` times the inverse Cartan matrix; integral.
    scaled_inverse: Vec<Vec<i64>>,
    root_index: HashMap<Weight, usize>,
    highest_coroot_root: usize,
    weyl: Vec<FiniteWeylElement>,
    weyl_index: HashMap<Vec<i64>, usize>,
}

fn cartan_matrix(series: Series, n: usize) -> Option<Vec<Vec<i64>>> {
    let valid = match series {
        Series::A => n >= 1,
        Series::B | Series::C => n >= 2,
        Series::D => n >= 4,
        Series::E => (6..=8).contains(&n),
        Series::F => n == 4,
        Series::G => n == 2,
    };
    if !valid {
        return None;
    }
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize, aij: i64, aji: i64| {
        a[i][j] = aij;
        a[j][i] = aji;
    };
    match series {
        Series::A => {
            for i in 0..n - 1 {
                link(i, i + 1, -1, -1);
            }
        }
        Series::B => {
            for i in 0..n - 2 {
                link(i, i + 1, -1, -1);
            }
            // last simple root is short
            link(n - 2, n - 1, -1, -2);
        }
        Series::C => {
            for i in 0..n - 2 {
                link(i, i + 1, -1, -1);
            }
            link(n - 2, n - 1, -2, -1);
        }
        Series::D => {
            for i in 0..n - 2 {
                link(i, i + 1, -1, -1);
            }
            link(n - 3, n - 1, -1, -1);
        }
        Series::E => {
            // Bourbaki labelling: 1-3-4-5-6-7-8 with 2 attached to 4.
            link(0, 2, -1, -1);
            link(1, 3, -1, -1);
            for i in 2..n - 1 {
                link(i, i + 1, -1, -1);
            }
        }
        Series::F => {
            link(0, 1, -1, -1);
            link(1, 2, -1, -2);
            link(2, 3, -1, -1);
        }
        Series::G => {
            // first simple root short
            link(0, 1, -3, -1);
        }
    }
    Some(a)
}

fn exponents_of(series: Series, n: usize) -> Vec<i64> {
    let n64 = n as i64;
    match series {
        Series::A => (1..=n64).collect(),
        Series::B | Series::C => (1..=n64).map(|i| 2 * i - 1).collect(),
        Series::D => {
            let mut v: Vec<i64> = (1..n64).map(|i| 2 * i - 1).collect();
            v.push(n64 - 1);
            v.sort_unstable();
            v
        }
        Series::E => match n {
            6 => vec![1, 4, 5, 7, 8, 11],
            7 => vec![1, 5, 7, 9, 11, 13, 17],
            _ => vec![1, 7, 11, 13, 17, 19, 23, 29],
        },
        Series::F => vec![1, 5, 7, 11],
        Series::G => vec![1, 5],
    }
}

/// Symmetrizing integers with `d_i a_ij = d_j a_ji`, coprime as a family.
fn symmetrizers_of(a: &[Vec<i64>]) -> Vec<i64> {
    let n = a.len();
    let mut d: Vec<Option<BigRational>> = vec![None; n];
    d[0] = Some(BigRational::from_integer(1.into()));
    let mut stack = vec![0usize];
    while let Some(i) = stack.pop() {
        for j in 0..n {
            if i != j && a[i][j] != 0 && d[j].is_none() {
                let di = d[i].clone().unwrap();
                d[j] = Some(di * BigRational::new(a[i][j].into(), a[j][i].into()));
                stack.push(j);
            }
        }
    }
    let d: Vec<BigRational> = d.into_iter().map(|x| x.expect("connected diagram")).collect();
    let lcm = d.iter().fold(BigInt::from(1), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = d.iter().map(|x| (x * &lcm).to_integer()).collect();
    let g = ints.iter().fold(BigInt::from(0), |acc, x| acc.gcd(x));
    ints.iter().map(|x| i64::try_from(x / &g).unwrap()).collect()
}

/// Determinant and adjugate of a small integer matrix via exact rationals.
fn det_and_adjugate(a: &[Vec<i64>]) -> (i64, Vec<Vec<i64>>) {
    let n = a.len();
    let mut m: Vec<Vec<BigRational>> = a
        .iter()
        .map(|row| row.iter().map(|&x| BigRational::from_integer(x.into())).collect())
        .collect();
    let mut inv: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| BigRational::from_integer(if i == j { 1 } else { 0 }.into()))
                .collect()
        })
        .collect();
    let mut det = BigRational::from_integer(1.into());
    for col in 0..n {
        let piv = (col..n)
            .find(|&r| m[r][col] != BigRational::from_integer(0.into()))
            .expect("Cartan matrix is nonsingular");
        if piv != col {
            m.swap(piv, col);
            inv.swap(piv, col);
            det = -det;
        }
        let p = m[col][col].clone();
        det *= &p;
        for j in 0..n {
            m[col][j] = &m[col][j] / &p;
            inv[col][j] = &inv[col][j] / &p;
        }
        for r in 0..n {
            if r != col {
                let f = m[r][col].clone();
                if f != BigRational::from_integer(0.into()) {
                    for j in 0..n {
                        let t = &f * &m[col][j];
                        m[r][j] -= t;
                        let t = &f * &inv[col][j];
                        inv[r][j] -= t;
                    }
                }
            }
        }
    }
    let det_i = det.to_integer();
    let adj = inv
        .iter()
        .map(|row| {
            row.iter()
                .map(|x| {
                    let y = x * &det;
                    assert!(y.is_integer());
                    i64::try_from(y.to_integer()).unwrap()
                })
                .collect()
        })
        .collect();
    (i64::try_from(det_i).unwrap(), adj)
}

/// Positive roots by closure under root strings, in simple-root coordinates.
fn positive_roots_by_strings(a: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    let mut roots: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            let mut v = vec![0; n];
            v[i] = 1;
            v
        })
        .collect();
    let mut known: std::collections::HashSet<Vec<i64>> = roots.iter().cloned().collect();
    let mut layer = roots.clone();
    while !layer.is_empty() {
        let mut next = Vec::new();
        for beta in &layer {
            for i in 0..n {
                let pair: i64 = (0..n).map(|j| a[i][j] * beta[j]).sum();
                // p = largest k with beta - k alpha_i a root
                let mut p = 0;
                loop {
                    let mut c = beta.clone();
                    c[i] -= p + 1;
                    if known.contains(&c) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                if p - pair > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if known.insert(up.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        next.sort();
        roots.extend(next.iter().cloned());
        layer = next;
    }
    roots
}

/// Builds the simply-connected root datum of type `series` and rank `rank`.
pub fn build_root_datum(series: Series, rank: usize) -> Result<RootDatum> {
    let cartan = cartan_matrix(series, rank).ok_or_else(|| Error::InvalidType {
        series: series.to_string(),
        rank,
    })?;
    let symmetrizers = symmetrizers_of(&cartan);
    let (det, scaled_inverse) = det_and_adjugate(&cartan);
    let simple_coords = positive_roots_by_strings(&cartan);
    let positive_roots: Vec<Weight> = simple_coords
        .iter()
        .map(|k| Weight((0..rank).map(|i| (0..rank).map(|j| cartan[i][j] * k[j]).sum()).collect()))
        .collect();
    let root_index = positive_roots.iter().enumerate().map(|(i, r)| (r.clone(), i)).collect();
    let exponents = exponents_of(series, rank);
    let coxeter_number = exponents.iter().max().unwrap() + 1;
    let mut d = RootDatum {
        series,
        rank,
        cartan,
        symmetrizers,
        positive_roots,
        positive_roots_simple: simple_coords,
        rho: Weight(vec![1; rank]),
        coxeter_number,
        pi1_order: det,
        exponents,
        scaled_inverse,
        root_index,
        highest_coroot_root: 0,
        weyl: Vec::new(),
        weyl_index: HashMap::new(),
    };
    d.highest_coroot_root = (0..d.positive_roots.len())
        .max_by_key(|&k| d.coroot_pairing_root_index(k, &d.rho))
        .unwrap();
    if rank <= WEYL_RANK_CAP {
        let elements = weyl::enumerate_finite_weyl(&d);
        d.weyl_index = elements.iter().enumerate().map(|(i, w)| (w.matrix.clone(), i)).collect();
        d.weyl = elements;
    }
    Ok(d)
}

/// Builds a root datum from a type string such as `"B2"`.
pub fn root_datum_from_str(s: &str) -> Result<RootDatum> {
    let (series, rank) = parse_type(s)?;
    build_root_datum(series, rank)
}

/// A coroot given either by the index of a simple coroot or by its root.
#[derive(Clone, Debug)]
pub enum Coroot {
    Simple(usize),
    OfRoot(Weight),
}

impl RootDatum {
    /// The type string, e.g. `"A2"`.
    pub fn type_name(&self) -> String {
        format!("{}{}", self.series, self.rank)
    }

    pub fn e(&self) -> i64 {
        self.pi1_order
    }

    /// The `j`-th simple root in weight coordinates (column `j` of the Cartan matrix).
    pub fn simple_root(&self, j: usize) -> Weight {
        Weight((0..self.rank).map(|i| self.cartan[i][j]).collect())
    }

    pub fn fundamental(&self, i: usize) -> Weight {
        Weight::fundamental(self.rank, i)
    }

    pub fn zero(&self) -> Weight {
        Weight::zero(self.rank)
    }

    /// `e` times the pairing `(λ, μ)`; always an integer.
    pub fn e_pairing(&self, lambda: &Weight, mu: &Weight) -> i64 {
        let r = self.rank;
        (0..r)
            .map(|i| {
                let s: i64 = (0..r).map(|j| self.scaled_inverse[i][j] * lambda.0[j]).sum();
                s * self.symmetrizers[i] * mu.0[i]
            })
            .sum()
    }

    /// The invariant form `(λ, μ)` with values in `(1/e)Z`.
    pub fn pairing(&self, lambda: &Weight, mu: &Weight) -> BigRational {
        BigRational::new(self.e_pairing(lambda, mu).into(), self.pi1_order.into())
    }

    /// Simple-root coordinates of `λ` scaled by `e`.
    pub fn e_root_coords(&self, lambda: &Weight) -> Vec<i64> {
        let r = self.rank;
        (0..r)
            .map(|i| (0..r).map(|j| self.scaled_inverse[i][j] * lambda.0[j]).sum())
            .collect()
    }

    /// True when `λ` lies in the root lattice.
    pub fn in_root_lattice(&self, lambda: &Weight) -> bool {
        self.e_root_coords(lambda).iter().all(|c| c % self.pi1_order == 0)
    }

    /// Index of a positive root, or of the positive root `-λ`.
    pub fn root_position(&self, lambda: &Weight) -> Option<(usize, bool)> {
        if let Some(&k) = self.root_index.get(lambda) {
            return Some((k, true));
        }
        self.root_index.get(&(-lambda)).map(|&k| (k, false))
    }

    pub fn is_root(&self, lambda: &Weight) -> bool {
        self.root_position(lambda).is_some()
    }

    fn coroot_pairing_root_index(&self, k: usize, lambda: &Weight) -> i64 {
        let alpha = &self.positive_roots[k];
        let num = 2 * self.e_pairing(alpha, lambda);
        let den = self.e_pairing(alpha, alpha);
        debug_assert_eq!(num % den, 0);
        num / den
    }

    /// `⟨α̌, λ⟩` for the `k`-th positive root.
    pub fn coroot_pairing_pos(&self, k: usize, lambda: &Weight) -> i64 {
        self.coroot_pairing_root_index(k, lambda)
    }

    /// `⟨α̌, λ⟩` for a simple coroot or the coroot of a given root.
    pub fn coroot_pairing(&self, coroot: &Coroot, lambda: &Weight) -> Result<i64> {
        match coroot {
            Coroot::Simple(i) if *i < self.rank => Ok(lambda.0[*i]),
            Coroot::Simple(i) => Err(Error::NotACoroot(vec![*i as i64])),
            Coroot::OfRoot(alpha) => match self.root_position(alpha) {
                Some((k, sign)) => {
                    let v = self.coroot_pairing_root_index(k, lambda);
                    Ok(if sign { v } else { -v })
                }
                None => Err(Error::NotACoroot(alpha.0.clone())),
            },
        }
    }

    /// The positive root whose coroot is the highest coroot. Its reflection
    /// supplies the extra affine simple reflection.
    pub fn highest_coroot_root(&self) -> &Weight {
        &self.positive_roots[self.highest_coroot_root]
    }

    /// `⟨λ, θ̌⟩` for the highest coroot `θ̌`.
    pub fn highest_coroot_pairing(&self, lambda: &Weight) -> i64 {
        self.coroot_pairing_root_index(self.highest_coroot_root, lambda)
    }

    /// `λ ≤ μ` in the dominance order.
    pub fn dominance_leq(&self, lambda: &Weight, mu: &Weight) -> bool {
        let diff = lambda - mu;
        self.e_root_coords(&diff)
            .iter()
            .all(|&c| c % self.pi1_order == 0 && c <= 0)
    }

    /// Admissibility of `l`: odd, at least the Coxeter number, prime to `e`,
    /// and prime to 3 in type G.
    pub fn validate_l(&self, l: i64) -> bool {
        l > 0
            && l % 2 == 1
            && l >= self.coxeter_number
            && l.gcd(&self.pi1_order) == 1
            && !(self.series == Series::G && l % 3 == 0)
    }

    /// Writes `λ = λ⁰ + l λ¹` with `0 ≤ λ⁰_i < l`.
    pub fn l_restricted_decompose(&self, lambda: &Weight, l: i64) -> (Weight, Weight) {
        let low = lambda.0.iter().map(|c| c.rem_euclid(l)).collect();
        let high = lambda.0.iter().map(|c| c.div_euclid(l)).collect();
        (Weight(low), Weight(high))
    }

    /// The order of the finite Weyl group, `∏(m_i + 1)`.
    pub fn weyl_order(&self) -> u64 {
        self.exponents.iter().map(|m| (m + 1) as u64).product()
    }

    /// Enumerated finite Weyl group; errors beyond the rank cap.
    pub fn weyl_group(&self) -> Result<&[FiniteWeylElement]> {
        if self.rank > WEYL_RANK_CAP {
            return Err(Error::RankTooLarge(self.rank));
        }
        Ok(&self.weyl)
    }

    /// Looks up the group element with the given action matrix.
    pub fn weyl_element(&self, matrix: &[i64]) -> &FiniteWeylElement {
        &self.weyl[self.weyl_index[matrix]]
    }

    pub fn identity(&self) -> &FiniteWeylElement {
        &self.weyl[0]
    }

    /// The longest element `w_0`.
    pub fn longest(&self) -> &FiniteWeylElement {
        self.weyl.last().expect("Weyl group enumerated")
    }

    /// The unique dominant weight in the `W`-orbit of `λ`.
    pub fn dominant_conjugate(&self, lambda: &Weight) -> Weight {
        let mut v = lambda.clone();
        while let Some(i) = v.0.iter().position(|&c| c < 0) {
            v = weyl::simple_reflect(self, i, &v);
        }
        v
    }

    /// Returns a positive root given its weight, panicking if absent.
    pub fn positive_root_index(&self, alpha: &Weight) -> usize {
        self.root_index[alpha]
    }
}

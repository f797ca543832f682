//! Small independent models of rank ≤ 3 root systems used as test oracles.
//! Nothing here calls into the library.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, HashSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Vector = Vec<i64>;
type Matrix = Vec<Vec<i64>>;

pub struct Model {
    pub cartan: Matrix,
    /// `(α_i, α_i)/2`, smallest one normalized to 1.
    pub sym: Vec<i64>,
    pub weyl: Vec<Matrix>,
    /// Positive roots in fundamental coordinates.
    pub positive: Vec<Vector>,
}

fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn model(name: &str) -> Model {
    let (cartan, sym): (Matrix, Vec<i64>) = match name {
        "A1" => (vec![vec![2]], vec![1]),
        "A2" => (vec![vec![2, -1], vec![-1, 2]], vec![1, 1]),
        "A3" => (vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]], vec![1, 1, 1]),
        "B2" => (vec![vec![2, -1], vec![-2, 2]], vec![2, 1]),
        "G2" => (vec![vec![2, -3], vec![-1, 2]], vec![1, 3]),
        other => panic!("no model for {other}"),
    };
    let r = cartan.len();
    let gens: Vec<Matrix> = (0..r)
        .map(|i| {
            // s_i(λ) = λ − λ_i α_i, with α_i the i-th column
            let mut m = identity(r);
            for (k, row) in m.iter_mut().enumerate() {
                row[i] -= cartan[k][i];
            }
            m
        })
        .collect();
    let mut seen: HashSet<Matrix> = HashSet::new();
    let mut frontier = vec![identity(r)];
    seen.insert(identity(r));
    while let Some(w) = frontier.pop() {
        for g in &gens {
            let n = mat_mul(g, &w);
            if seen.insert(n.clone()) {
                frontier.push(n);
            }
        }
    }
    let mut weyl: Vec<Matrix> = seen.into_iter().collect();
    weyl.sort();
    let mut m = Model { cartan, sym, weyl, positive: Vec::new() };
    let mut roots: BTreeSet<Vector> = BTreeSet::new();
    for j in 0..r {
        for w in &m.weyl {
            roots.insert(apply(w, &m.simple_root(j)));
        }
    }
    m.positive = roots.into_iter().filter(|a| m.root_coords(a).iter().all(|c| !c.is_negative())).collect();
    m
}

fn identity(r: usize) -> Matrix {
    (0..r).map(|i| (0..r).map(|j| (i == j) as i64).collect()).collect()
}

fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let r = a.len();
    (0..r).map(|i| (0..r).map(|j| (0..r).map(|k| a[i][k] * b[k][j]).sum()).collect()).collect()
}

pub fn apply(w: &Matrix, v: &[i64]) -> Vector {
    w.iter().map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum()).collect()
}

pub fn add(a: &[i64], b: &[i64]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[i64], b: &[i64]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

impl Model {
    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    pub fn rho(&self) -> Vector {
        vec![1; self.rank()]
    }

    pub fn simple_root(&self, j: usize) -> Vector {
        self.cartan.iter().map(|row| row[j]).collect()
    }

    /// Coordinates in the simple roots, by Gauss–Jordan over `Q`.
    pub fn root_coords(&self, v: &[i64]) -> Vec<BigRational> {
        let r = self.rank();
        let mut a: Vec<Vec<BigRational>> = (0..r)
            .map(|i| {
                let mut row: Vec<BigRational> = (0..r).map(|j| q(self.cartan[i][j])).collect();
                row.push(q(v[i]));
                row
            })
            .collect();
        for c in 0..r {
            let p = (c..r).find(|&i| !a[i][c].is_zero()).expect("invertible");
            a.swap(c, p);
            let inv = a[c][c].recip();
            for x in a[c].iter_mut() {
                *x = &*x * &inv;
            }
            for i in 0..r {
                if i != c && !a[i][c].is_zero() {
                    let f = a[i][c].clone();
                    for j in 0..=r {
                        let t = &a[c][j] * &f;
                        a[i][j] = &a[i][j] - t;
                    }
                }
            }
        }
        a.into_iter().map(|row| row[r].clone()).collect()
    }

    /// `(λ, μ) = Σ_j c_j(μ) · λ_j · (α_j, α_j)/2`.
    pub fn form(&self, lambda: &[i64], mu: &[i64]) -> BigRational {
        self.root_coords(mu)
            .iter()
            .enumerate()
            .map(|(j, c)| c * q(lambda[j] * self.sym[j]))
            .fold(BigRational::zero(), |a, b| a + b)
    }

    pub fn coroot_pairing(&self, lambda: &[i64], alpha: &[i64]) -> BigRational {
        self.form(lambda, alpha) * q(2) / self.form(alpha, alpha)
    }

    pub fn dominant_conjugate(&self, v: &[i64]) -> Vector {
        self.weyl.iter().map(|w| apply(w, v)).find(|x| x.iter().all(|&c| c >= 0)).expect("orbit meets the chamber")
    }

    /// Weight multiplicities of `V(λ)` from Freudenthal's recursion.
    pub fn freudenthal(&self, lambda: &[i64]) -> BTreeMap<Vector, i64> {
        let r = self.rank();
        let rho = self.rho();
        let top = add(lambda, &rho);
        let norm_top = self.form(&top, &top);
        let height: BigRational = self.root_coords(lambda).iter().fold(BigRational::zero(), |a, b| a + b);
        let max_level = (height * q(2)).floor().to_integer().to_i64().unwrap();
        let mut mult: BTreeMap<Vector, i64> = BTreeMap::new();
        mult.insert(lambda.to_vec(), 1);
        for level in 1..=max_level {
            for n in compositions(level, r) {
                let mut mu = lambda.to_vec();
                for (j, &k) in n.iter().enumerate() {
                    mu = sub(&mu, &self.simple_root(j).iter().map(|c| c * k).collect::<Vec<_>>());
                }
                let mut rhs = BigRational::zero();
                for alpha in &self.positive {
                    let mut t = 1;
                    loop {
                        let up: Vector = add(&mu, &alpha.iter().map(|c| c * t).collect::<Vec<_>>());
                        if !self.root_coords(&sub(lambda, &up)).iter().all(|c| !c.is_negative()) {
                            break;
                        }
                        if let Some(&m) = mult.get(&up) {
                            rhs += self.form(&up, alpha) * q(m);
                        }
                        t += 1;
                    }
                }
                rhs *= q(2);
                let shifted = add(&mu, &rho);
                let den = &norm_top - self.form(&shifted, &shifted);
                if den.is_zero() {
                    assert!(rhs.is_zero());
                    continue;
                }
                let m = rhs / den;
                assert!(m.is_integer(), "non-integral multiplicity");
                let m = m.to_integer().to_i64().unwrap();
                if m != 0 {
                    mult.insert(mu, m);
                }
            }
        }
        mult
    }

    pub fn weight_list(&self, lambda: &[i64]) -> Vec<Vector> {
        let mut out = Vec::new();
        for (w, m) in self.freudenthal(lambda) {
            for _ in 0..m {
                out.push(w.clone());
            }
        }
        out
    }

    /// Whether `w(a+ρ) ≡ b+ρ` modulo `lΛ` for some `w ∈ W`.
    pub fn same_extended_block(&self, a: &[i64], b: &[i64], l: i64) -> bool {
        let a = add(a, &self.rho());
        let b = add(b, &self.rho());
        self.weyl.iter().any(|w| sub(&apply(w, &a), &b).iter().all(|c| c.rem_euclid(l) == 0))
    }

    /// `#{w : w(ω+ρ) ≡ ω+ρ mod lΛ}`.
    pub fn stabilizer_order(&self, omega: &[i64], l: i64) -> usize {
        let v = add(omega, &self.rho());
        self.weyl.iter().filter(|w| sub(&apply(w, &v), &v).iter().all(|c| c.rem_euclid(l) == 0)).count()
    }

    /// Positive roots `α` with `⟨ω+ρ, α̌⟩ ∈ lZ`.
    pub fn singular_roots(&self, omega: &[i64], l: i64) -> usize {
        let v = add(omega, &self.rho());
        self.positive
            .iter()
            .filter(|a| {
                let p = self.coroot_pairing(&v, a);
                p.is_integer() && p.to_integer().to_i64().unwrap().rem_euclid(l) == 0
            })
            .count()
    }

    /// `e(λ, μ)` as an exponent of `q_e`, where `e = det A`.
    pub fn e_form(&self, lambda: &[i64], mu: &[i64]) -> i64 {
        let x = self.form(lambda, mu) * q(self.det());
        assert!(x.is_integer());
        x.to_integer().to_i64().unwrap()
    }

    pub fn det(&self) -> i64 {
        let r = self.rank();
        let c = &self.cartan;
        match r {
            1 => c[0][0],
            2 => c[0][0] * c[1][1] - c[0][1] * c[1][0],
            3 => {
                c[0][0] * (c[1][1] * c[2][2] - c[1][2] * c[2][1]) - c[0][1] * (c[1][0] * c[2][2] - c[1][2] * c[2][0])
                    + c[0][2] * (c[1][0] * c[2][1] - c[1][1] * c[2][0])
            }
            _ => unimplemented!(),
        }
    }

    /// `dim_q V(λ)` at the rational point `q_e = x`, from the product formula
    /// `∏ [ (λ+ρ, α) ] / [ (ρ, α) ]` with `q = q_e^e`. Zero when `λ + ρ` is
    /// singular; the sign follows the alternating sum for other weights.
    pub fn q_dimension_at(&self, lambda: &[i64], x: &BigRational) -> BigRational {
        let shifted = add(lambda, &self.rho());
        let rho = self.rho();
        let mut out = BigRational::one();
        for a in &self.positive {
            let n = self.e_form(&shifted, a);
            let m = self.e_form(&rho, a);
            out = out * (power(x, n) - power(x, -n)) / (power(x, m) - power(x, -m));
        }
        out
    }
}

pub fn power(x: &BigRational, k: i64) -> BigRational {
    if k >= 0 {
        num_traits::pow(x.clone(), k as usize)
    } else {
        num_traits::pow(x.recip(), (-k) as usize)
    }
}

/// All `n ∈ N^r` with `Σ n = total`.
pub fn compositions(total: i64, r: usize) -> Vec<Vector> {
    if r == 1 {
        return vec![vec![total]];
    }
    let mut out = Vec::new();
    for first in 0..=total {
        for rest in compositions(total - first, r - 1) {
            let mut v = vec![first];
            v.extend(rest);
            out.push(v);
        }
    }
    out
}

/// All vectors in `[0, bound]^r`.
pub fn box_points(bound: i64, r: usize) -> Vec<Vector> {
    let mut out = vec![Vec::new()];
    for _ in 0..r {
        out = out.into_iter().flat_map(|v: Vector| (0..=bound).map(move |c| [v.clone(), vec![c]].concat())).collect();
    }
    out
}

/// Coefficients of `∏ 1/(1 − s^{m})` in `s = t²`, up to `s^n`.
pub fn exponent_series(exponents: &[usize], n: usize) -> Vec<i64> {
    let mut c = vec![0i64; n + 1];
    c[0] = 1;
    for &m in exponents {
        for k in m..=n {
            c[k] += c[k - m];
        }
    }
    c
}

pub fn poly_mul(a: &[i64], b: &[i64], n: usize) -> Vec<i64> {
    let mut c = vec![0i64; n + 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            if i + j <= n {
                c[i + j] += x * y;
            }
        }
    }
    c
}

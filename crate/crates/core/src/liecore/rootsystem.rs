use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::liecore::Weight;
use crate::{q, QMatrix, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
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
            Series::A => 'A',
            Series::B => 'B',
            Series::C => 'C',
            Series::D => 'D',
            Series::E => 'E',
            Series::F => 'F',
            Series::G => 'G',
        };
        write!(f, "{c}")
    }
}

/// Enumeration limits for Weyl groups and weight systems.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub max_weyl_order: u128,
    pub max_dim: u128,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds { max_weyl_order: 100_000, max_dim: 10_000 }
    }
}

/// Cartan data of a simple Lie algebra (Bourbaki labelling).
///
/// `cartan[i][j] = <α_i, α_j^∨>`, so row `i` is `α_i` in fundamental-weight
/// coordinates. Positive roots are stored in simple-root coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSystem {
    series: Series,
    rank: usize,
    cartan: Vec<Vec<i64>>,
    positive_roots: Vec<Vec<i64>>,
    rho: Weight,
    // (α_i, α_i)/2, scaled so short roots get 1
    symmetrizer: Vec<Rational>,
    cartan_t_inv: QMatrix,
}

impl FromStr for RootSystem {
    type Err = Error;

    /// Parses names like `"A1"`, `"B2"`, `"G2"`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let series = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Series::A,
            Some('B') => Series::B,
            Some('C') => Series::C,
            Some('D') => Series::D,
            Some('E') => Series::E,
            Some('F') => Series::F,
            Some('G') => Series::G,
            _ => return Err(Error::InvalidRootSystem(s.to_string())),
        };
        let rank: usize = chars.as_str().parse().map_err(|_| Error::InvalidRootSystem(s.to_string()))?;
        RootSystem::build(series, rank)
    }
}

fn cartan_matrix(series: Series, n: usize) -> Result<Vec<Vec<i64>>> {
    let valid = match series {
        Series::A => n >= 1,
        Series::B | Series::C => n >= 2,
        Series::D => n >= 4,
        Series::E => (6..=8).contains(&n),
        Series::F => n == 4,
        Series::G => n == 2,
    };
    if !valid {
        return Err(Error::InvalidRootSystem(format!("{series}{n}")));
    }
    let mut c = vec![vec![0i64; n]; n];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize| {
        c[i][j] = -1;
        c[j][i] = -1;
    };
    match series {
        Series::A | Series::B | Series::C => (0..n - 1).for_each(|i| link(i, i + 1)),
        Series::D => {
            (0..n - 2).for_each(|i| link(i, i + 1));
            link(n - 3, n - 1);
        }
        Series::E => {
            link(0, 2);
            link(1, 3);
            (2..n - 1).for_each(|i| link(i, i + 1));
        }
        Series::F => (0..3).for_each(|i| link(i, i + 1)),
        Series::G => link(0, 1),
    }
    match series {
        Series::B => c[n - 2][n - 1] = -2,
        Series::C => c[n - 1][n - 2] = -2,
        Series::F => c[1][2] = -2,
        Series::G => c[1][0] = -3,
        _ => {}
    }
    Ok(c)
}

impl RootSystem {
    pub fn build(series: Series, rank: usize) -> Result<Self> {
        let cartan = cartan_matrix(series, rank)?;
        let positive_roots = generate_positive_roots(&cartan);
        let symmetrizer = symmetrizer(&cartan);
        let ct = QMatrix::from_fn(rank, rank, |r, c| q(cartan[c][r]));
        let cartan_t_inv = ct.inverse().ok_or_else(|| Error::InvalidRootSystem("singular Cartan matrix".into()))?;
        let rho = Weight::from_ints(&vec![1; rank]);
        Ok(RootSystem { series, rank, cartan, positive_roots, rho, symmetrizer, cartan_t_inv })
    }

    pub fn series(&self) -> Series {
        self.series
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn name(&self) -> String {
        format!("{}{}", self.series, self.rank)
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Positive roots in simple-root coordinates, ordered by height.
    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    pub fn rho(&self) -> &Weight {
        &self.rho
    }

    /// Converts simple-root coordinates to fundamental-weight coordinates.
    pub fn root_to_weight(&self, root: &[i64]) -> Weight {
        Weight::from_ints(
            &(0..self.rank).map(|j| (0..self.rank).map(|i| root[i] * self.cartan[i][j]).sum()).collect::<Vec<_>>(),
        )
    }

    /// Simple-root coordinates of a weight (rational in general).
    pub fn weight_to_root_coords(&self, w: &Weight) -> Vec<Rational> {
        self.cartan_t_inv.mul_vec(w.coords())
    }

    /// W-invariant form with short roots of squared length 2.
    pub fn inner(&self, a: &Weight, b: &Weight) -> Rational {
        let broot = self.weight_to_root_coords(b);
        broot
            .iter()
            .zip(a.coords())
            .zip(&self.symmetrizer)
            .fold(Rational::zero(), |acc, ((bj, aj), dj)| acc + bj * aj * dj)
    }

    /// `(v, α)` for a root given in simple-root coordinates.
    pub fn pair_with_root(&self, v: &Weight, root: &[i64]) -> Rational {
        root.iter()
            .zip(v.coords())
            .zip(&self.symmetrizer)
            .fold(Rational::zero(), |acc, ((&b, vj), dj)| acc + q(b) * vj * dj)
    }

    /// `<v, α^∨>` for a root given in simple-root coordinates.
    pub fn pair_with_coroot(&self, v: &Weight, root: &[i64]) -> Rational {
        let alpha = self.root_to_weight(root);
        let len2 = self.inner(&alpha, &alpha);
        self.pair_with_root(v, root) * q(2) / len2
    }

    pub fn simple_reflection(&self, i: usize, v: &Weight) -> Weight {
        let vi = v.coords()[i].clone();
        Weight::new(v.coords().iter().enumerate().map(|(j, c)| c - &vi * q(self.cartan[i][j])).collect())
    }

    /// The unique dominant element of the W-orbit of `v`, with the reduced
    /// word (applied right to left) that reaches it.
    pub fn dominant_conjugate(&self, v: &Weight) -> (Weight, Vec<usize>) {
        let mut cur = v.clone();
        let mut word = Vec::new();
        while let Some(i) = cur.coords().iter().position(|c| c.is_negative()) {
            cur = self.simple_reflection(i, &cur);
            word.push(i);
        }
        word.reverse();
        (cur, word)
    }

    /// W-orbit by closure under simple reflections; does not need the group.
    pub fn orbit(&self, v: &Weight) -> Vec<Weight> {
        let mut seen = BTreeSet::new();
        let mut queue = VecDeque::new();
        seen.insert(v.clone());
        queue.push_back(v.clone());
        while let Some(cur) = queue.pop_front() {
            for i in 0..self.rank {
                let next = self.simple_reflection(i, &cur);
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
        seen.into_iter().collect()
    }

    pub fn weyl_order(&self) -> u128 {
        let n = self.rank as u128;
        let fact = |k: u128| (1..=k).product::<u128>();
        match self.series {
            Series::A => fact(n + 1),
            Series::B | Series::C => (1u128 << n) * fact(n),
            Series::D => (1u128 << (n - 1)) * fact(n),
            Series::E => match n {
                6 => 51_840,
                7 => 2_903_040,
                _ => 696_729_600,
            },
            Series::F => 1152,
            Series::G => 12,
        }
    }

    /// Degrees of the basic invariants of W.
    pub fn fundamental_degrees(&self) -> Vec<u32> {
        let n = self.rank as u32;
        let mut d: Vec<u32> = match self.series {
            Series::A => (2..=n + 1).collect(),
            Series::B | Series::C => (1..=n).map(|k| 2 * k).collect(),
            Series::D => (1..n).map(|k| 2 * k).chain(std::iter::once(n)).collect(),
            Series::E => match n {
                6 => vec![2, 5, 6, 8, 9, 12],
                7 => vec![2, 6, 8, 10, 12, 14, 18],
                _ => vec![2, 8, 12, 14, 18, 20, 24, 30],
            },
            Series::F => vec![2, 6, 8, 12],
            Series::G => vec![2, 6],
        };
        d.sort_unstable();
        d
    }

    /// Weyl dimension formula.
    pub fn weyl_dimension(&self, mu: &Weight) -> Rational {
        let shifted = mu + &self.rho;
        self.positive_roots.iter().fold(Rational::one(), |acc, a| {
            acc * self.pair_with_root(&shifted, a) / self.pair_with_root(&self.rho, a)
        })
    }

    pub fn highest_root(&self) -> Weight {
        self.root_to_weight(self.positive_roots.last().expect("nonempty root system"))
    }

    /// All roots (positive and negative) in fundamental-weight coordinates.
    pub fn all_roots(&self) -> Vec<Weight> {
        self.positive_roots.iter().flat_map(|r| {
            let w = self.root_to_weight(r);
            [-&w, w]
        })
        .collect()
    }
}

fn generate_positive_roots(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = cartan.len();
    let simple: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
    let mut all: BTreeSet<Vec<i64>> = simple.iter().cloned().collect();
    let mut ordered = simple.clone();
    let mut layer = simple;
    while !layer.is_empty() {
        let mut next = BTreeSet::new();
        for beta in &layer {
            for i in 0..n {
                let pairing: i64 = (0..n).map(|j| beta[j] * cartan[j][i]).sum();
                let mut p = 0;
                let mut probe = beta.clone();
                loop {
                    probe[i] -= 1;
                    if all.contains(&probe) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                if p - pairing > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if !all.contains(&up) {
                        next.insert(up);
                    }
                }
            }
        }
        layer = next.into_iter().collect();
        for r in &layer {
            all.insert(r.clone());
            ordered.push(r.clone());
        }
    }
    ordered
}

fn symmetrizer(cartan: &[Vec<i64>]) -> Vec<Rational> {
    let n = cartan.len();
    let mut d: Vec<Option<Rational>> = vec![None; n];
    d[0] = Some(Rational::one());
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for k in 0..n {
            if k != i && cartan[i][k] != 0 && d[k].is_none() {
                // cartan[i][k] d_k = cartan[k][i] d_i
                let dk = d[i].clone().unwrap() * q(cartan[k][i]) / q(cartan[i][k]);
                d[k] = Some(dk);
                queue.push_back(k);
            }
        }
    }
    let d: Vec<Rational> = d.into_iter().map(|x| x.expect("connected Dynkin diagram")).collect();
    let min = d.iter().min().cloned().unwrap();
    d.into_iter().map(|x| x / &min).collect()
}

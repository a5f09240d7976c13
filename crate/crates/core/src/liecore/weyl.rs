use std::collections::{HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::liecore::{Bounds, RootSystem, Weight};
use crate::{q, Rational};

/// An element of W as an integer matrix on fundamental-weight coordinates,
/// together with a reduced word in the simple reflections.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeylElement {
    matrix: Vec<Vec<i64>>,
    word: Vec<usize>,
}

impl WeylElement {
    pub fn identity(rank: usize) -> Self {
        let matrix = (0..rank).map(|i| (0..rank).map(|j| i64::from(i == j)).collect()).collect();
        WeylElement { matrix, word: Vec::new() }
    }

    pub fn simple(rs: &RootSystem, i: usize) -> Self {
        let n = rs.rank();
        let mut m = WeylElement::identity(n).matrix;
        for (j, row) in m.iter_mut().enumerate() {
            row[i] -= rs.cartan()[i][j];
        }
        WeylElement { matrix: m, word: vec![i] }
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.matrix
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }

    /// `det(w) = (-1)^{ℓ(w)}`.
    pub fn sign(&self) -> i64 {
        if self.word.len() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    pub fn is_identity(&self) -> bool {
        self.matrix.iter().enumerate().all(|(i, row)| row.iter().enumerate().all(|(j, &x)| x == i64::from(i == j)))
    }

    /// Linear action on a weight.
    pub fn apply(&self, v: &Weight) -> Weight {
        Weight::new(
            self.matrix
                .iter()
                .map(|row| row.iter().zip(v.coords()).fold(Rational::from_integer(0.into()), |acc, (&m, c)| acc + q(m) * c))
                .collect(),
        )
    }

    /// Product `self · other` (apply `other` first).
    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        let n = self.matrix.len();
        let matrix = (0..n)
            .map(|i| (0..n).map(|j| (0..n).map(|k| self.matrix[i][k] * other.matrix[k][j]).sum()).collect())
            .collect();
        let word = self.word.iter().chain(&other.word).copied().collect();
        WeylElement { matrix, word }
    }

    pub fn inverse(&self) -> WeylElement {
        // s_i are involutions, so the inverse word is the reversed word
        let mut word = self.word.clone();
        word.reverse();
        WeylElement { matrix: invert_unimodular(&self.matrix), word }
    }
}

fn invert_unimodular(m: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = m.len();
    let qm = crate::QMatrix::from_fn(n, n, |r, c| q(m[r][c]));
    let inv = qm.inverse().expect("Weyl group elements are invertible");
    (0..n)
        .map(|r| {
            (0..n)
                .map(|c| {
                    let x = &inv[(r, c)];
                    assert!(x.is_integer());
                    num_traits::ToPrimitive::to_i64(&x.to_integer()).expect("small entries")
                })
                .collect()
        })
        .collect()
}

/// `w • v = w(v + ρ) − ρ`.
pub fn dot_action(rs: &RootSystem, w: &WeylElement, v: &Weight) -> Weight {
    &w.apply(&(v + rs.rho())) - rs.rho()
}

/// All elements of W by breadth-first closure over the simple reflections.
pub fn weyl_group(rs: &RootSystem, bounds: &Bounds) -> Result<Vec<WeylElement>> {
    let order = rs.weyl_order();
    if order > bounds.max_weyl_order {
        return Err(Error::WeylGroupTooLarge { order, bound: bounds.max_weyl_order });
    }
    let gens: Vec<WeylElement> = (0..rs.rank()).map(|i| WeylElement::simple(rs, i)).collect();
    let id = WeylElement::identity(rs.rank());
    let mut seen: HashSet<Vec<Vec<i64>>> = HashSet::new();
    seen.insert(id.matrix.clone());
    let mut out = vec![id.clone()];
    let mut queue = VecDeque::from([id]);
    while let Some(cur) = queue.pop_front() {
        for g in &gens {
            let next = g.compose(&cur);
            if seen.insert(next.matrix.clone()) {
                out.push(next.clone());
                queue.push_back(next);
            }
        }
    }
    debug_assert_eq!(out.len() as u128, order);
    Ok(out)
}

/// Dot-orbit of `v` under an enumerated group, deduplicated.
pub fn dot_orbit(rs: &RootSystem, group: &[WeylElement], v: &Weight) -> Vec<Weight> {
    let mut out: Vec<Weight> = group.iter().map(|w| dot_action(rs, w, v)).collect();
    out.sort();
    out.dedup();
    out
}

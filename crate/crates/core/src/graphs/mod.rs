//! Bruhat graphs on W/W_P, the quantum Bruhat graph on W, the weighted Cayley
//! graph of S_n, and their exports.

mod bruhat;
mod cayley;
pub mod export;
mod quantum;

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::fmt;
use std::ops::Add;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::rational::{int, Rational, RationalVector};
use crate::rootsystem::RootSystem;

pub use bruhat::{BruhatEdge, BruhatGraph};
pub use cayley::{cayley_diameter, closed_form_distance, WeightedCayleyGraph, DEFAULT_CAYLEY_CAP};
pub use export::{GraphDocument, GraphFormat};
pub use quantum::{QuantumBruhatGraph, QuantumEdge};

/// Curve degree: integer coefficients over a list of simple coroots (all of S
/// for the quantum graph, S − S_P for a parabolic Bruhat graph).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Degree(pub Vec<i64>);

impl Degree {
    pub fn zero(len: usize) -> Self {
        Degree(vec![0; len])
    }

    pub fn from_coeffs(c: &[i32]) -> Self {
        Degree(c.iter().map(|&x| i64::from(x)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }

    /// c ≤ d iff d − c has no negative coefficient.
    pub fn le(&self, other: &Degree) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// ⟨λ, d⟩ where `positions[k]` is the simple position of coefficient k.
    pub fn pair_with(&self, rs: &RootSystem, lambda: &RationalVector, positions: &[usize]) -> Result<Rational> {
        let mut acc = Rational::zero();
        for (c, &pos) in self.0.iter().zip(positions) {
            if *c != 0 {
                acc += int(*c) * rs.pairing(lambda, rs.simple()[pos])?;
            }
        }
        Ok(acc)
    }
}

impl Add for &Degree {
    type Output = Degree;
    fn add(self, rhs: &Degree) -> Degree {
        Degree(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

pub(crate) struct ShortestPaths {
    pub dist: Vec<Option<Rational>>,
    // previous vertex and the weight id of the edge used
    pub pred: Vec<Option<(usize, usize)>>,
}

/// Dijkstra over `adj[u] = [(v, weight_id)]` with nonnegative `weights`.
pub(crate) fn dijkstra(adj: &[Vec<(usize, usize)>], weights: &[Rational], src: usize) -> ShortestPaths {
    let n = adj.len();
    let mut dist: Vec<Option<Rational>> = vec![None; n];
    let mut pred = vec![None; n];
    let mut done = vec![false; n];
    let mut heap = BinaryHeap::new();
    dist[src] = Some(Rational::zero());
    heap.push(Reverse((Rational::zero(), src)));
    while let Some(Reverse((d, u))) = heap.pop() {
        if done[u] {
            continue;
        }
        done[u] = true;
        for &(v, w) in &adj[u] {
            if done[v] {
                continue;
            }
            let cand = &d + &weights[w];
            if dist[v].as_ref().is_none_or(|cur| cand < *cur) {
                dist[v] = Some(cand.clone());
                pred[v] = Some((u, w));
                heap.push(Reverse((cand, v)));
            }
        }
    }
    ShortestPaths { dist, pred }
}

impl ShortestPaths {
    /// Weight ids along the recorded shortest path to `dst`, source first.
    pub fn path_to(&self, dst: usize) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        let mut cur = dst;
        while let Some((p, w)) = self.pred[cur] {
            out.push((p, cur, w));
            cur = p;
        }
        out.reverse();
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_order() {
        let a = Degree(vec![1, 0, 2]);
        let b = Degree(vec![1, 1, 2]);
        assert!(a.le(&b));
        assert!(!b.le(&a));
        assert!(a.le(&a));
        assert_eq!(&a + &b, Degree(vec![2, 1, 4]));
        assert_eq!(a.to_string(), "(1,0,2)");
        assert!(Degree::zero(3).is_zero());
    }

    #[test]
    fn dijkstra_prefers_cheap_detour() {
        // 0 -> 2 directly costs 5, via 1 costs 1 + 1
        let adj = vec![vec![(1, 0), (2, 1)], vec![(2, 0)], vec![]];
        let weights = vec![int(1), int(5)];
        let sp = dijkstra(&adj, &weights, 0);
        assert_eq!(sp.dist[2], Some(int(2)));
        assert_eq!(sp.path_to(2).len(), 2);
    }
}

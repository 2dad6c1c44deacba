use std::collections::HashMap;

use num_traits::Signed;

use super::export::{EdgeRecord, GraphDocument, VertexRecord};
use super::{dijkstra, ShortestPaths};
use crate::error::{Error, Result};
use crate::rational::{frac, to_wire, Rational, RationalVector};

pub const DEFAULT_CAYLEY_CAP: usize = 7;

/// Cayley graph of S_n for the transpositions, where σ and σ·(i j) are joined
/// by an edge of weight |λ_i − λ_j|. Vertices are permutations in one-line
/// notation (0-based), in lexicographic order; vertex 0 is the identity.
pub struct WeightedCayleyGraph {
    n: usize,
    lambda: Vec<Rational>,
    perms: Vec<Vec<u8>>,
    index: HashMap<Vec<u8>, usize>,
    transpositions: Vec<(usize, usize)>,
    weights: Vec<Rational>,
}

fn permutations(n: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut cur: Vec<u8> = (0..n as u8).collect();
    loop {
        out.push(cur.clone());
        // next lexicographic permutation
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            return out;
        };
        let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).expect("successor exists");
        cur.swap(i, j);
        cur[i + 1..].reverse();
    }
}

impl WeightedCayleyGraph {
    pub fn new(lambda: &[Rational], cap: usize) -> Result<Self> {
        let n = lambda.len();
        if n == 0 {
            return Err(Error::Parse("lambda must be nonempty".into()));
        }
        if n > cap {
            return Err(Error::CayleyTooLarge { n, cap });
        }
        let perms = permutations(n);
        let index = perms.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let transpositions: Vec<(usize, usize)> =
            (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        let weights = transpositions
            .iter()
            .map(|&(i, j)| (&lambda[i] - &lambda[j]).abs())
            .collect();
        Ok(WeightedCayleyGraph {
            n,
            lambda: lambda.to_vec(),
            perms,
            index,
            transpositions,
            weights,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn lambda(&self) -> &[Rational] {
        &self.lambda
    }

    pub fn num_vertices(&self) -> usize {
        self.perms.len()
    }

    pub fn perm(&self, v: usize) -> &[u8] {
        &self.perms[v]
    }

    pub fn index_of(&self, perm: &[u8]) -> Option<usize> {
        self.index.get(perm).copied()
    }

    /// (i, j) pairs, i < j, in the order used for weight ids.
    pub fn transpositions(&self) -> &[(usize, usize)] {
        &self.transpositions
    }

    pub fn weight(&self, t: usize) -> &Rational {
        &self.weights[t]
    }

    /// σ·(i j): swap the entries in positions i and j.
    pub fn neighbor(&self, v: usize, t: usize) -> usize {
        let (i, j) = self.transpositions[t];
        let mut p = self.perms[v].clone();
        p.swap(i, j);
        self.index[&p]
    }

    fn adjacency(&self) -> Vec<Vec<(usize, usize)>> {
        (0..self.num_vertices())
            .map(|v| (0..self.transpositions.len()).map(|t| (self.neighbor(v, t), t)).collect())
            .collect()
    }

    pub(crate) fn shortest_paths(&self, src: usize) -> ShortestPaths {
        dijkstra(&self.adjacency(), &self.weights, src)
    }

    pub fn distances_from(&self, src: usize) -> Vec<Rational> {
        self.shortest_paths(src)
            .dist
            .into_iter()
            .map(|d| d.expect("Cayley graph is connected"))
            .collect()
    }

    pub fn distances_from_identity(&self) -> Vec<Rational> {
        self.distances_from(0)
    }

    /// max_σ d(e, σ); by left invariance this is the diameter.
    pub fn diameter(&self) -> Rational {
        self.distances_from_identity()
            .into_iter()
            .max()
            .expect("at least one vertex")
    }

    pub fn document(&self) -> GraphDocument {
        let vertices = self
            .perms
            .iter()
            .enumerate()
            .map(|(id, p)| VertexRecord {
                id,
                label: one_line_label(p),
                length: None,
            })
            .collect();
        let mut edges = Vec::new();
        for v in 0..self.num_vertices() {
            for (t, &(i, j)) in self.transpositions.iter().enumerate() {
                let w = self.neighbor(v, t);
                if v < w {
                    let mut root = RationalVector::zeros(self.n);
                    root.0[i] = frac(1, 1);
                    root.0[j] = frac(-1, 1);
                    let degree = (0..self.n - 1).map(|k| i64::from(k >= i && k < j)).collect();
                    edges.push(EdgeRecord {
                        u: v,
                        v: w,
                        root: root.to_wire(),
                        degree,
                        area: Some(to_wire(&self.weights[t])),
                    });
                }
            }
        }
        GraphDocument {
            kind: "cayley".into(),
            directed: false,
            vertices,
            edges,
        }
    }
}

fn one_line_label(p: &[u8]) -> String {
    let items: Vec<String> = p.iter().map(|x| (x + 1).to_string()).collect();
    format!("[{}]", items.join(","))
}

/// ½ Σ |λ_i − λ_{σ(i)}| for σ in 0-based one-line notation.
pub fn closed_form_distance(lambda: &[Rational], sigma: &[u8]) -> Rational {
    let total = sigma
        .iter()
        .enumerate()
        .fold(Rational::default(), |acc, (i, &s)| acc + (&lambda[i] - &lambda[s as usize]).abs());
    total / frac(2, 1)
}

/// Diameter of the weighted Cayley graph for non-increasing λ.
pub fn cayley_diameter(lambda: &[Rational], cap: usize) -> Result<Rational> {
    if let Some(pos) = lambda.windows(2).position(|w| w[0] < w[1]) {
        return Err(Error::Unsorted { position: pos + 1 });
    }
    Ok(WeightedCayleyGraph::new(lambda, cap)?.diameter())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn ints(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn lexicographic_permutations() {
        let p = permutations(3);
        assert_eq!(p.len(), 6);
        assert_eq!(p[0], vec![0, 1, 2]);
        assert_eq!(p[5], vec![2, 1, 0]);
    }

    #[test]
    fn two_points() {
        assert_eq!(cayley_diameter(&ints(&[5, 2]), 7).unwrap(), int(3));
    }

    #[test]
    fn repeated_eigenvalues() {
        let l = ints(&[3, 3, 0, 0]);
        assert_eq!(cayley_diameter(&l, 7).unwrap(), int(6));
    }

    #[test]
    fn staircase_oracle() {
        // all-pairs Dijkstra: the largest distance anywhere equals the distance from e
        let l = ints(&[3, 2, 1, 0]);
        let g = WeightedCayleyGraph::new(&l, 7).unwrap();
        let all_pairs_max = (0..g.num_vertices())
            .map(|s| g.distances_from(s).into_iter().max().unwrap())
            .max()
            .unwrap();
        assert_eq!(all_pairs_max, int(4));
        assert_eq!(g.diameter(), int(4));
    }

    #[test]
    fn errors() {
        assert!(matches!(cayley_diameter(&ints(&[1, 2]), 7), Err(Error::Unsorted { .. })));
        assert!(matches!(
            cayley_diameter(&ints(&[8, 7, 6, 5, 4, 3, 2, 1]), 7),
            Err(Error::CayleyTooLarge { n: 8, cap: 7 })
        ));
    }

    #[test]
    fn export_counts() {
        let g = WeightedCayleyGraph::new(&ints(&[3, 2, 1, 0]), 7).unwrap();
        let doc = g.document();
        assert_eq!(doc.vertices.len(), 24);
        assert_eq!(doc.edges.len(), 24 * 6 / 2);
        assert_eq!(doc.vertices[0].label, "[1,2,3,4]");
    }
}

use num_traits::Signed;

use super::export::{EdgeRecord, GraphDocument, VertexRecord};
use super::{dijkstra, Degree};
use crate::error::{Error, Result};
use crate::rational::{to_wire, Rational, RationalVector};
use crate::weyl::{ParabolicData, WeylGroup};

/// Undirected edge between coset positions `u < v`, through the positive root
/// `root` (an element of R⁺ − R⁺_P).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BruhatEdge {
    pub u: usize,
    pub v: usize,
    pub root: usize,
}

/// Bruhat graph of W/W_P. Vertices are minimal coset representatives in
/// canonical order; parallel edges through distinct roots are kept.
pub struct BruhatGraph<'g> {
    group: &'g WeylGroup,
    parabolic: ParabolicData,
    free: Vec<usize>,
    roots: Vec<usize>,
    edges: Vec<BruhatEdge>,
}

impl<'g> BruhatGraph<'g> {
    pub fn new(group: &'g WeylGroup, parabolic: ParabolicData) -> Self {
        let rs = group.root_system();
        let free: Vec<usize> = (0..rs.rank()).filter(|i| !parabolic.subset.contains(i)).collect();
        let roots: Vec<usize> = rs
            .positive_roots()
            .iter()
            .copied()
            .filter(|b| !parabolic.positive_roots.contains(b))
            .collect();
        let mut edges = Vec::new();
        for (u, &rep) in parabolic.coset_reps.iter().enumerate() {
            for &a in &roots {
                let v = parabolic.coset_of[group.mul_reflection(rep, a)];
                if u < v {
                    edges.push(BruhatEdge { u, v, root: a });
                }
            }
        }
        BruhatGraph {
            group,
            parabolic,
            free,
            roots,
            edges,
        }
    }

    /// Full flag variety: S_P = ∅.
    pub fn full(group: &'g WeylGroup) -> Result<Self> {
        Ok(Self::new(group, group.parabolic(&[])?))
    }

    pub fn group(&self) -> &WeylGroup {
        self.group
    }

    pub fn parabolic(&self) -> &ParabolicData {
        &self.parabolic
    }

    pub fn num_vertices(&self) -> usize {
        self.parabolic.num_cosets()
    }

    pub fn edges(&self) -> &[BruhatEdge] {
        &self.edges
    }

    /// Simple positions in S − S_P, indexing degree coefficients.
    pub fn free_positions(&self) -> &[usize] {
        &self.free
    }

    /// Coset position of a group element.
    pub fn coset_of(&self, w: usize) -> usize {
        self.parabolic.coset_of[w]
    }

    pub fn representative(&self, coset: usize) -> usize {
        self.parabolic.coset_reps[coset]
    }

    /// α̌ + ZŠ_P, i.e. the coroot coefficients restricted to S − S_P.
    pub fn root_degree(&self, a: usize) -> Degree {
        let c = self.group.root_system().coroot_coefficients(a);
        Degree(self.free.iter().map(|&i| i64::from(c[i])).collect())
    }

    pub fn degree(&self, e: &BruhatEdge) -> Degree {
        self.root_degree(e.root)
    }

    /// Every (u → v, α) generated from u, including both orientations of
    /// each undirected edge.
    pub fn directed_edges_from(&self, u: usize) -> Vec<(usize, usize)> {
        let rep = self.parabolic.coset_reps[u];
        self.roots
            .iter()
            .filter_map(|&a| {
                let v = self.parabolic.coset_of[self.group.mul_reflection(rep, a)];
                (v != u).then_some((v, a))
            })
            .collect()
    }

    fn adjacency(&self) -> Vec<Vec<(usize, usize)>> {
        let mut adj = vec![Vec::new(); self.num_vertices()];
        for e in &self.edges {
            adj[e.u].push((e.v, e.root));
            adj[e.v].push((e.u, e.root));
        }
        adj
    }

    /// Minimal total area ⟨λ, α̌⟩ over paths between two cosets, and the
    /// degree of one minimizing path.
    pub fn min_path_area(&self, lambda: &RationalVector, src: usize, dst: usize) -> Result<(Rational, Degree)> {
        let rs = self.group.root_system();
        let n = self.num_vertices();
        for &c in &[src, dst] {
            if c >= n {
                return Err(Error::IndexOutOfRange { index: c, len: n });
            }
        }
        let mut weights = vec![Rational::default(); rs.num_roots()];
        for &a in &self.roots {
            let p = rs.pairing(lambda, a)?;
            if p.is_negative() {
                return Err(Error::Inconsistent(format!(
                    "negative area {p} on the edge through {}",
                    rs.describe_root(a)
                )));
            }
            weights[a] = p;
        }
        let sp = dijkstra(&self.adjacency(), &weights, src);
        let area = sp.dist[dst]
            .clone()
            .ok_or_else(|| Error::Inconsistent("Bruhat graph is disconnected".into()))?;
        let degree = sp
            .path_to(dst)
            .iter()
            .fold(Degree::zero(self.free.len()), |acc, &(_, _, a)| &acc + &self.root_degree(a));
        Ok((area, degree))
    }

    pub fn document(&self, lambda: Option<&RationalVector>) -> Result<GraphDocument> {
        let rs = self.group.root_system();
        let vertices = self
            .parabolic
            .coset_reps
            .iter()
            .map(|&w| VertexRecord {
                id: w,
                label: self.group.word_label(w),
                length: Some(self.group.length(w)),
            })
            .collect();
        let mut edges = Vec::with_capacity(self.edges.len());
        for e in &self.edges {
            let area = match lambda {
                Some(l) => Some(to_wire(&rs.pairing(l, e.root)?)),
                None => None,
            };
            edges.push(EdgeRecord {
                u: self.parabolic.coset_reps[e.u],
                v: self.parabolic.coset_reps[e.v],
                root: rs.root(e.root).to_wire(),
                degree: self.degree(e).0,
                area,
            });
        }
        Ok(GraphDocument {
            kind: "bruhat".into(),
            directed: false,
            vertices,
            edges,
        })
    }
}

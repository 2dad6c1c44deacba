use std::collections::VecDeque;

use super::export::{EdgeRecord, GraphDocument, VertexRecord};
use super::Degree;
use crate::error::{Error, Result};
use crate::weyl::WeylGroup;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QuantumEdge {
    pub to: u32,
    pub root: u32,
    /// Down-edge carrying degree α̌; up-edges have degree 0.
    pub quantum: bool,
}

/// Quantum Bruhat graph on all of W: u → u·s_α when the length rises by one
/// (degree 0) or drops by 2ht(α̌) − 1 (degree α̌).
pub struct QuantumBruhatGraph<'g> {
    group: &'g WeylGroup,
    adj: Vec<Vec<QuantumEdge>>,
}

impl<'g> QuantumBruhatGraph<'g> {
    pub fn new(group: &'g WeylGroup) -> Self {
        let rs = group.root_system();
        let heights: Vec<i64> = (0..rs.num_roots())
            .map(|a| i64::from(rs.coroot_height(a)))
            .collect();
        let adj = (0..group.order())
            .map(|u| {
                let lu = group.length(u) as i64;
                rs.positive_roots()
                    .iter()
                    .filter_map(|&a| {
                        let v = group.mul_reflection(u, a);
                        let lv = group.length(v) as i64;
                        if lv == lu + 1 {
                            Some(QuantumEdge { to: v as u32, root: a as u32, quantum: false })
                        } else if lv == lu + 1 - 2 * heights[a] {
                            Some(QuantumEdge { to: v as u32, root: a as u32, quantum: true })
                        } else {
                            None
                        }
                    })
                    .collect()
            })
            .collect();
        QuantumBruhatGraph { group, adj }
    }

    pub fn group(&self) -> &WeylGroup {
        self.group
    }

    pub fn num_vertices(&self) -> usize {
        self.adj.len()
    }

    pub fn num_edges(&self) -> usize {
        self.adj.iter().map(Vec::len).sum()
    }

    pub fn edges_from(&self, u: usize) -> &[QuantumEdge] {
        &self.adj[u]
    }

    pub fn edge_degree(&self, e: &QuantumEdge) -> Degree {
        let rs = self.group.root_system();
        if e.quantum {
            Degree::from_coeffs(rs.coroot_coefficients(e.root as usize))
        } else {
            Degree::zero(rs.rank())
        }
    }

    /// BFS from `u` that carries the degree of every shortest path. Returns,
    /// per vertex, the common degree and the distance. A second distinct
    /// degree at any vertex is reported as a theorem violation.
    pub fn shortest_path_degrees(&self, u: usize) -> Result<Vec<Option<(Degree, usize)>>> {
        let n = self.num_vertices();
        if u >= n {
            return Err(Error::IndexOutOfRange { index: u, len: n });
        }
        let rank = self.group.root_system().rank();
        let mut out: Vec<Option<(Degree, usize)>> = vec![None; n];
        out[u] = Some((Degree::zero(rank), 0));
        let mut queue = VecDeque::from([u]);
        while let Some(x) = queue.pop_front() {
            let (dx, lx) = out[x].clone().expect("queued vertices are labelled");
            for e in &self.adj[x] {
                let y = e.to as usize;
                let cand = &dx + &self.edge_degree(e);
                match &out[y] {
                    None => {
                        out[y] = Some((cand, lx + 1));
                        queue.push_back(y);
                    }
                    Some((dy, ly)) if *ly == lx + 1 && *dy != cand => {
                        return Err(Error::TheoremViolation(format!(
                            "shortest paths from {} to {} have degrees {dy} and {cand}",
                            self.group.word_label(u),
                            self.group.word_label(y)
                        )));
                    }
                    Some(_) => {}
                }
            }
        }
        Ok(out)
    }

    /// The common degree of all shortest u → v paths and their length.
    pub fn d_min(&self, u: usize, v: usize) -> Result<(Degree, usize)> {
        let n = self.num_vertices();
        if v >= n {
            return Err(Error::IndexOutOfRange { index: v, len: n });
        }
        self.shortest_path_degrees(u)?[v]
            .clone()
            .ok_or_else(|| Error::Inconsistent("quantum Bruhat graph is not strongly connected".into()))
    }

    pub fn document(&self) -> GraphDocument {
        let rs = self.group.root_system();
        let vertices = (0..self.num_vertices())
            .map(|w| VertexRecord {
                id: w,
                label: self.group.word_label(w),
                length: Some(self.group.length(w)),
            })
            .collect();
        let mut edges = Vec::with_capacity(self.num_edges());
        for (u, list) in self.adj.iter().enumerate() {
            for e in list {
                edges.push(EdgeRecord {
                    u,
                    v: e.to as usize,
                    root: rs.root(e.root as usize).to_wire(),
                    degree: self.edge_degree(e).0,
                    area: None,
                });
            }
        }
        GraphDocument {
            kind: "quantum".into(),
            directed: true,
            vertices,
            edges,
        }
    }
}

//! Weyl groups as permutation groups on the root set.
//!
//! An element is stored as the permutation it induces on root indices. It is
//! determined by the images of the simple roots, which is what the group uses
//! as its lookup key. Elements are indexed in breadth-first order from the
//! identity over right multiplication by simple reflections, so the canonical
//! index order is also sorted by length.

use std::collections::{HashMap, VecDeque};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::rational::{int, row_reduce, Rational, RationalVector};
use crate::rootsystem::{Family, RootSystem};

/// Default cap on the number of enumerated group elements.
pub const DEFAULT_GROUP_CAP: u128 = 10_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeylElement {
    perm: Vec<u8>,
    length: usize,
}

impl WeylElement {
    pub fn identity(rs: &RootSystem) -> Self {
        WeylElement {
            perm: (0..rs.num_roots()).map(|i| i as u8).collect(),
            length: 0,
        }
    }

    /// Builds an element from a root permutation, checking that it commutes
    /// with negation.
    pub fn from_perm(rs: &RootSystem, perm: Vec<usize>) -> Result<Self> {
        if perm.len() != rs.num_roots() {
            return Err(Error::DimensionMismatch {
                expected: rs.num_roots(),
                got: perm.len(),
            });
        }
        for (b, &img) in perm.iter().enumerate() {
            if perm[rs.negate(b)] != rs.negate(img) {
                return Err(Error::Inconsistent(
                    "root permutation does not commute with negation".into(),
                ));
            }
        }
        let perm: Vec<u8> = perm.into_iter().map(|x| x as u8).collect();
        let length = inversion_count(rs, &perm);
        Ok(WeylElement { perm, length })
    }

    pub fn reflection(rs: &RootSystem, a: usize) -> Result<Self> {
        Self::from_perm(rs, rs.reflection_perm(a)?)
    }

    /// w₀ from the reduced word carried by the root system.
    pub fn longest(rs: &RootSystem) -> Self {
        let mut w = Self::identity(rs);
        for &i in rs.longest_word() {
            w = w.compose(&Self::simple(rs, i), rs);
        }
        w
    }

    pub fn simple(rs: &RootSystem, i: usize) -> Self {
        let perm: Vec<u8> = rs.simple_perm(i).iter().map(|&x| x as u8).collect();
        WeylElement { perm, length: 1 }
    }

    pub fn perm(&self) -> &[u8] {
        &self.perm
    }

    pub fn length(&self) -> usize {
        self.length
    }

    /// w(β) as a root index.
    pub fn apply_root(&self, b: usize) -> usize {
        self.perm[b] as usize
    }

    /// self ∘ other.
    pub fn compose(&self, other: &WeylElement, rs: &RootSystem) -> WeylElement {
        let perm: Vec<u8> = other.perm.iter().map(|&b| self.perm[b as usize]).collect();
        let length = inversion_count(rs, &perm);
        WeylElement { perm, length }
    }

    pub fn inverse(&self) -> WeylElement {
        let mut perm = vec![0u8; self.perm.len()];
        for (b, &img) in self.perm.iter().enumerate() {
            perm[img as usize] = b as u8;
        }
        WeylElement {
            perm,
            length: self.length,
        }
    }

    /// I(w) = {β ∈ R⁺ : w(β) < 0}.
    pub fn inversions(&self, rs: &RootSystem) -> Vec<usize> {
        rs.positive_roots()
            .iter()
            .copied()
            .filter(|&b| !rs.is_positive(self.perm[b] as usize))
            .collect()
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    /// Codimension of the fixed space of w, i.e. its reflection length.
    pub fn absolute_length(&self, rs: &RootSystem) -> usize {
        absolute_length_of_perm(rs, &self.perm)
    }

    /// Action on an ambient vector: the root-span part moves, the orthogonal
    /// complement is fixed.
    pub fn act(&self, rs: &RootSystem, t: &RationalVector) -> Result<RationalVector> {
        let p = rs.project_to_root_span(t)?;
        let rest = t - &p;
        let simple: Vec<RationalVector> = rs.simple().iter().map(|&s| rs.root(s).clone()).collect();
        let c = crate::rational::solve_in_span(&simple, &p)
            .ok_or_else(|| Error::Inconsistent("projection left the root span".into()))?;
        let moved = rs
            .simple()
            .iter()
            .zip(&c)
            .fold(rest, |acc, (&s, x)| &acc + &rs.root(self.apply_root(s)).scale(x));
        Ok(moved)
    }
}

fn inversion_count(rs: &RootSystem, perm: &[u8]) -> usize {
    rs.positive_roots()
        .iter()
        .filter(|&&b| !rs.is_positive(perm[b] as usize))
        .count()
}

fn absolute_length_of_perm(rs: &RootSystem, perm: &[u8]) -> usize {
    let mut rows: Vec<Vec<Rational>> = rs
        .simple()
        .iter()
        .enumerate()
        .map(|(j, &s)| {
            rs.root_coefficients(perm[s] as usize)
                .iter()
                .enumerate()
                .map(|(k, &c)| int(i64::from(c) - i64::from(k == j)))
                .collect()
        })
        .collect();
    row_reduce(&mut rows)
}

/// The enumerated Weyl group. Immutable after [`WeylGroup::generate`].
#[derive(Debug)]
pub struct WeylGroup {
    rs: Arc<RootSystem>,
    nroots: usize,
    perms: Vec<u8>,
    lengths: Vec<u32>,
    parent: Vec<(u32, u8)>,
    right_simple: Vec<u32>,
    index: HashMap<Vec<u8>, u32>,
    reflection_perms: Vec<Vec<u8>>,
    longest: usize,
}

fn group_label(family: Family, rank: usize) -> String {
    format!("{family}{rank}")
}

fn too_large(family: Family, rank: usize, cap: u128) -> Error {
    let hint = if family == Family::E && rank == 8 {
        "; E8 enumeration is refused, its decomposition checks run at the matrix level without the group"
            .to_string()
    } else {
        "; raise --group-cap or BC_GROUP_CAP to enumerate it".to_string()
    };
    Error::GroupTooLarge {
        label: group_label(family, rank),
        order: family.weyl_order(rank),
        cap,
        hint,
    }
}

impl WeylGroup {
    /// Breadth-first enumeration from the identity over simple reflections.
    /// Lengths are BFS depths, cross-checked against inversion counts.
    pub fn generate(rs: Arc<RootSystem>, cap: u128) -> Result<Self> {
        let family = rs.family();
        let rank = rs.rank();
        let expected = family.weyl_order(rank);
        if expected > cap {
            return Err(too_large(family, rank, cap));
        }
        let nroots = rs.num_roots();
        let simple = rs.simple().to_vec();
        let simple_perms: Vec<Vec<u8>> = (0..rank)
            .map(|i| rs.simple_perm(i).iter().map(|&x| x as u8).collect())
            .collect();
        let key_of = |perm: &[u8]| -> Vec<u8> { simple.iter().map(|&s| perm[s]).collect() };

        let mut perms: Vec<u8> = (0..nroots).map(|i| i as u8).collect();
        let mut lengths = vec![0u32];
        let mut parent = vec![(0u32, 0u8)];
        let mut right_simple: Vec<u32> = Vec::new();
        let mut index: HashMap<Vec<u8>, u32> = HashMap::new();
        index.insert(key_of(&perms[..nroots]), 0);

        let mut next = 0usize;
        let mut scratch = vec![0u8; nroots];
        while next < lengths.len() {
            let base = next * nroots;
            for (i, sp) in simple_perms.iter().enumerate() {
                for b in 0..nroots {
                    scratch[b] = perms[base + sp[b] as usize];
                }
                let key = key_of(&scratch);
                let found = match index.get(&key) {
                    Some(&j) => j,
                    None => {
                        let j = lengths.len() as u32;
                        if u128::from(j) >= cap {
                            return Err(too_large(family, rank, cap));
                        }
                        let depth = lengths[next] + 1;
                        let inv = inversion_count(&rs, &scratch) as u32;
                        if inv != depth {
                            return Err(Error::Inconsistent(format!(
                                "BFS depth {depth} differs from inversion count {inv}"
                            )));
                        }
                        perms.extend_from_slice(&scratch);
                        lengths.push(depth);
                        parent.push((next as u32, i as u8));
                        index.insert(key, j);
                        j
                    }
                };
                right_simple.push(found);
            }
            next += 1;
        }
        if lengths.len() as u128 != expected {
            return Err(Error::Inconsistent(format!(
                "enumerated {} elements for {}, expected {expected}",
                lengths.len(),
                group_label(family, rank)
            )));
        }

        let max_len = *lengths.iter().max().unwrap_or(&0);
        let longest: Vec<usize> = (0..lengths.len()).filter(|&i| lengths[i] == max_len).collect();
        if longest.len() != 1 {
            return Err(Error::Inconsistent(format!(
                "{} elements of maximal length",
                longest.len()
            )));
        }

        let mut reflection_perms = vec![Vec::new(); nroots];
        for &a in rs.positive_roots() {
            let p: Vec<u8> = rs.reflection_perm(a)?.into_iter().map(|x| x as u8).collect();
            reflection_perms[rs.negate(a)] = p.clone();
            reflection_perms[a] = p;
        }

        Ok(WeylGroup {
            nroots,
            perms,
            lengths,
            parent,
            right_simple,
            index,
            reflection_perms,
            longest: longest[0],
            rs,
        })
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn root_system_arc(&self) -> Arc<RootSystem> {
        Arc::clone(&self.rs)
    }

    pub fn order(&self) -> usize {
        self.lengths.len()
    }

    pub fn identity_index(&self) -> usize {
        0
    }

    pub fn longest_index(&self) -> usize {
        self.longest
    }

    pub fn length(&self, w: usize) -> usize {
        self.lengths[w] as usize
    }

    pub fn perm(&self, w: usize) -> &[u8] {
        &self.perms[w * self.nroots..(w + 1) * self.nroots]
    }

    pub fn element(&self, w: usize) -> WeylElement {
        WeylElement {
            perm: self.perm(w).to_vec(),
            length: self.length(w),
        }
    }

    pub fn longest_element(&self) -> WeylElement {
        self.element(self.longest)
    }

    pub fn index_of(&self, e: &WeylElement) -> Option<usize> {
        self.index_of_perm(e.perm())
    }

    pub fn index_of_perm(&self, perm: &[u8]) -> Option<usize> {
        let key: Vec<u8> = self.rs.simple().iter().map(|&s| perm[s]).collect();
        self.index.get(&key).map(|&i| i as usize)
    }

    /// w · s_{α_i} for the simple position i.
    pub fn mul_simple(&self, w: usize, i: usize) -> usize {
        self.right_simple[w * self.rs.rank() + i] as usize
    }

    /// u · v.
    pub fn mul(&self, u: usize, v: usize) -> usize {
        let pu = self.perm(u);
        let pv = self.perm(v);
        let key: Vec<u8> = self.rs.simple().iter().map(|&s| pu[pv[s] as usize]).collect();
        self.index[&key] as usize
    }

    /// w · s_α for any root index α.
    pub fn mul_reflection(&self, w: usize, a: usize) -> usize {
        let pw = self.perm(w);
        let refl = &self.reflection_perms[a];
        let key: Vec<u8> = self.rs.simple().iter().map(|&s| pw[refl[s] as usize]).collect();
        self.index[&key] as usize
    }

    /// Group index of the reflection s_α.
    pub fn reflection_index(&self, a: usize) -> usize {
        self.mul_reflection(0, a)
    }

    pub fn inverse(&self, w: usize) -> usize {
        self.index_of(&self.element(w).inverse())
            .expect("inverse of a group element is in the group")
    }

    pub fn inversion_count(&self, w: usize) -> usize {
        inversion_count(&self.rs, self.perm(w))
    }

    pub fn absolute_length(&self, w: usize) -> usize {
        absolute_length_of_perm(&self.rs, self.perm(w))
    }

    /// Reduced word (simple positions) from the BFS tree.
    pub fn reduced_word(&self, w: usize) -> Vec<usize> {
        let mut word = Vec::with_capacity(self.length(w));
        let mut cur = w;
        while cur != 0 {
            let (p, g) = self.parent[cur];
            word.push(g as usize);
            cur = p as usize;
        }
        word.reverse();
        word
    }

    /// `e` for the identity, otherwise e.g. `s1s2s1` (1-based positions).
    pub fn word_label(&self, w: usize) -> String {
        let word = self.reduced_word(w);
        if word.is_empty() {
            "e".to_string()
        } else {
            word.iter().map(|i| format!("s{}", i + 1)).collect()
        }
    }

    /// Is w(β) a negative root for the root index β?
    pub fn sends_negative(&self, w: usize, b: usize) -> bool {
        !self.rs.is_positive(self.perm(w)[b] as usize)
    }

    pub fn parabolic(&self, subset: &[usize]) -> Result<ParabolicData> {
        ParabolicData::new(self, subset)
    }
}

/// Parabolic subgroup W_P and the quotient W/W_P with minimal-length coset
/// representatives.
#[derive(Clone, Debug)]
pub struct ParabolicData {
    pub subset: Vec<usize>,
    pub positive_roots: Vec<usize>,
    pub subgroup: Vec<usize>,
    pub coset_reps: Vec<usize>,
    pub coset_of: Vec<usize>,
}

impl ParabolicData {
    fn new(w: &WeylGroup, subset: &[usize]) -> Result<Self> {
        let rs = w.root_system();
        let mut subset = subset.to_vec();
        subset.sort_unstable();
        subset.dedup();
        if let Some(&bad) = subset.iter().find(|&&i| i >= rs.rank()) {
            return Err(Error::IndexOutOfRange {
                index: bad,
                len: rs.rank(),
            });
        }

        let positive_roots: Vec<usize> = rs
            .positive_roots()
            .iter()
            .copied()
            .filter(|&b| {
                rs.root_coefficients(b)
                    .iter()
                    .enumerate()
                    .all(|(k, &c)| c == 0 || subset.contains(&k))
            })
            .collect();

        let mut seen = vec![false; w.order()];
        let mut subgroup = vec![0usize];
        seen[0] = true;
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for &i in &subset {
                let y = w.mul_simple(x, i);
                if !seen[y] {
                    seen[y] = true;
                    subgroup.push(y);
                    queue.push_back(y);
                }
            }
        }

        // descend to the unique element with w(α) > 0 for every α ∈ S_P
        let simple = rs.simple();
        let min_rep = |mut x: usize| -> usize {
            while let Some(&i) = subset.iter().find(|&&i| w.sends_negative(x, simple[i])) {
                x = w.mul_simple(x, i);
            }
            x
        };
        let reps_of: Vec<usize> = (0..w.order()).map(min_rep).collect();
        let mut coset_reps: Vec<usize> = reps_of.clone();
        coset_reps.sort_unstable();
        coset_reps.dedup();
        let position: HashMap<usize, usize> =
            coset_reps.iter().enumerate().map(|(i, &r)| (r, i)).collect();
        let coset_of: Vec<usize> = reps_of.iter().map(|r| position[r]).collect();

        if coset_reps.len() * subgroup.len() != w.order() {
            return Err(Error::Inconsistent(format!(
                "{} cosets of a subgroup of order {} in a group of order {}",
                coset_reps.len(),
                subgroup.len(),
                w.order()
            )));
        }
        Ok(ParabolicData {
            subset,
            positive_roots,
            subgroup,
            coset_reps,
            coset_of,
        })
    }

    pub fn num_cosets(&self) -> usize {
        self.coset_reps.len()
    }
}

//! Simple root systems realized with exact rational coordinates.
//!
//! Roots are generated by closing the simple roots under simple reflections and
//! stored in lexicographic order of their coordinates, so root indices (and
//! everything keyed by them) are reproducible. All integer data used by the
//! Weyl group code (simple-root coefficients, Cartan integers, negation) is
//! precomputed here once.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{
    format_in_basis, int, solve_in_span, solve_square, to_i64, Matrix, Rational, RationalVector,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::A,
        Family::B,
        Family::C,
        Family::D,
        Family::E,
        Family::F,
        Family::G,
    ];

    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    /// Checks that `(self, rank)` names a simple type.
    pub fn validate_rank(self, rank: usize) -> Result<()> {
        let reason = match self {
            Family::A if rank < 1 => Some("type A requires rank >= 1"),
            Family::B if rank < 2 => Some("type B requires rank >= 2"),
            Family::C if rank < 2 => Some("type C requires rank >= 2"),
            Family::D if rank < 3 => Some("type D requires rank >= 3"),
            Family::E if !(6..=8).contains(&rank) => Some("type E requires rank 6, 7 or 8"),
            Family::F if rank != 4 => Some("type F requires rank 4"),
            Family::G if rank != 2 => Some("type G requires rank 2"),
            _ => None,
        };
        match reason {
            Some(r) => Err(Error::InvalidType {
                family: self.to_string(),
                rank,
                reason: r.to_string(),
            }),
            None => Ok(()),
        }
    }

    pub fn ambient_dim(self, rank: usize) -> usize {
        match self {
            Family::A => rank + 1,
            Family::B | Family::C | Family::D => rank,
            Family::E => 8,
            Family::F => 4,
            Family::G => 3,
        }
    }

    /// Order of the Weyl group, from the classical formulas.
    pub fn weyl_order(self, rank: usize) -> u128 {
        let fact = |n: usize| (1..=n as u128).product::<u128>();
        match self {
            Family::A => fact(rank + 1),
            Family::B | Family::C => (1u128 << rank) * fact(rank),
            Family::D => (1u128 << (rank - 1)) * fact(rank),
            Family::E => match rank {
                6 => 51_840,
                7 => 2_903_040,
                _ => 696_729_600,
            },
            Family::F => 1152,
            Family::G => 12,
        }
    }

    /// |R⁺| per type.
    pub fn positive_root_count(self, rank: usize) -> usize {
        match self {
            Family::A => rank * (rank + 1) / 2,
            Family::B | Family::C => rank * rank,
            Family::D => rank * (rank - 1),
            Family::E => match rank {
                6 => 36,
                7 => 63,
                _ => 120,
            },
            Family::F => 24,
            Family::G => 6,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Family::A),
            "B" => Ok(Family::B),
            "C" => Ok(Family::C),
            "D" => Ok(Family::D),
            "E" => Ok(Family::E),
            "F" => Ok(Family::F),
            "G" => Ok(Family::G),
            other => Err(Error::Parse(format!("unknown family `{other}` (expected A-G)"))),
        }
    }
}

fn e_minus(dim: usize, i: usize, j: usize) -> RationalVector {
    let mut v = RationalVector::zeros(dim);
    v.0[i] = int(1);
    v.0[j] = int(-1);
    v
}

fn e8_simple_roots() -> Vec<RationalVector> {
    vec![
        RationalVector::from_halves(&[1, -1, -1, -1, -1, -1, -1, 1]),
        RationalVector::from_ints(&[1, 1, 0, 0, 0, 0, 0, 0]),
        RationalVector::from_ints(&[-1, 1, 0, 0, 0, 0, 0, 0]),
        RationalVector::from_ints(&[0, -1, 1, 0, 0, 0, 0, 0]),
        RationalVector::from_ints(&[0, 0, -1, 1, 0, 0, 0, 0]),
        RationalVector::from_ints(&[0, 0, 0, -1, 1, 0, 0, 0]),
        RationalVector::from_ints(&[0, 0, 0, 0, -1, 1, 0, 0]),
        RationalVector::from_ints(&[0, 0, 0, 0, 0, -1, 1, 0]),
    ]
}

/// Simple roots α_1..α_n in the standard ambient realization of each type.
pub fn simple_roots(family: Family, rank: usize) -> Result<Vec<RationalVector>> {
    family.validate_rank(rank)?;
    let dim = family.ambient_dim(rank);
    let chain = |k: usize| (0..k).map(|i| e_minus(dim, i, i + 1)).collect::<Vec<_>>();
    Ok(match family {
        Family::A => chain(rank),
        Family::B => {
            let mut s = chain(rank - 1);
            s.push(RationalVector::unit(dim, rank - 1));
            s
        }
        Family::C => {
            let mut s = chain(rank - 1);
            s.push(RationalVector::unit(dim, rank - 1).scale(&int(2)));
            s
        }
        Family::D => {
            let mut s = chain(rank - 1);
            let mut last = RationalVector::zeros(dim);
            last.0[rank - 2] = int(1);
            last.0[rank - 1] = int(1);
            s.push(last);
            s
        }
        Family::E => e8_simple_roots().into_iter().take(rank).collect(),
        Family::F => vec![
            RationalVector::from_ints(&[0, 1, -1, 0]),
            RationalVector::from_ints(&[0, 0, 1, -1]),
            RationalVector::from_ints(&[0, 0, 0, 1]),
            RationalVector::from_halves(&[1, -1, -1, -1]),
        ],
        Family::G => vec![
            RationalVector::from_ints(&[1, -2, 1]),
            RationalVector::from_ints(&[0, 1, -1]),
        ],
    })
}

fn to_integral(coeffs: Vec<Rational>, what: &str) -> Result<Vec<i32>> {
    coeffs
        .iter()
        .map(|c| {
            to_i64(c)
                .and_then(|x| i32::try_from(x).ok())
                .ok_or_else(|| Error::Inconsistent(format!("{what} has non-integral coefficient {c}")))
        })
        .collect()
}

/// A simple root system with all derived integer data. Immutable after
/// [`RootSystem::build`].
#[derive(Clone, Debug)]
pub struct RootSystem {
    family: Family,
    rank: usize,
    ambient_dim: usize,
    roots: Vec<RationalVector>,
    norm2: Vec<Rational>,
    simple: Vec<usize>,
    positive: Vec<bool>,
    positive_roots: Vec<usize>,
    highest: usize,
    neg: Vec<usize>,
    // coefficients over simple roots / simple coroots, signed, for every root
    coeffs: Vec<Vec<i32>>,
    coroot_coeffs: Vec<Vec<i32>>,
    // cartan[b][a] = <beta_b, coroot(alpha_a)>
    cartan: Vec<Vec<i32>>,
    coeff_index: HashMap<Vec<i32>, usize>,
    root_index: HashMap<RationalVector, usize>,
    simple_perms: Vec<Vec<usize>>,
    longest_word: Vec<usize>,
}

impl RootSystem {
    pub fn build(family: Family, rank: usize) -> Result<Self> {
        let simple_vecs = simple_roots(family, rank)?;
        let ambient_dim = family.ambient_dim(rank);

        // close under simple reflections
        let mut seen: HashMap<RationalVector, ()> = HashMap::new();
        let mut queue: VecDeque<RationalVector> = VecDeque::new();
        for s in &simple_vecs {
            for v in [s.clone(), -s] {
                if seen.insert(v.clone(), ()).is_none() {
                    queue.push_back(v);
                }
            }
        }
        while let Some(r) = queue.pop_front() {
            for s in &simple_vecs {
                let image = reflect_vec(s, &r);
                if seen.insert(image.clone(), ()).is_none() {
                    queue.push_back(image);
                }
            }
        }
        let mut roots: Vec<RationalVector> = seen.into_keys().collect();
        roots.sort();
        let root_index: HashMap<RationalVector, usize> =
            roots.iter().cloned().enumerate().map(|(i, r)| (r, i)).collect();

        let simple: Vec<usize> = simple_vecs.iter().map(|s| root_index[s]).collect();
        let norm2: Vec<Rational> = roots.iter().map(RationalVector::norm2).collect();
        let neg: Vec<usize> = roots.iter().map(|r| root_index[&-r]).collect();

        let simple_coroots: Vec<RationalVector> =
            simple_vecs.iter().map(|s| s.scale(&(int(2) / s.norm2()))).collect();

        let mut coeffs = Vec::with_capacity(roots.len());
        let mut coroot_coeffs = Vec::with_capacity(roots.len());
        let mut positive = Vec::with_capacity(roots.len());
        for (i, r) in roots.iter().enumerate() {
            let c = solve_in_span(&simple_vecs, r)
                .ok_or_else(|| Error::Inconsistent(format!("root {r} outside the simple span")))?;
            let c = to_integral(c, "root")?;
            let pos = c.iter().all(|&x| x >= 0);
            if !pos && !c.iter().all(|&x| x <= 0) {
                return Err(Error::Inconsistent(format!("root {r} has mixed-sign coefficients")));
            }
            positive.push(pos);
            coeffs.push(c);
            let coroot = r.scale(&(int(2) / &norm2[i]));
            let cc = solve_in_span(&simple_coroots, &coroot).ok_or_else(|| {
                Error::Inconsistent(format!("coroot of {r} outside the simple coroot span"))
            })?;
            coroot_coeffs.push(to_integral(cc, "coroot")?);
        }

        let n = roots.len();
        let mut cartan = vec![vec![0i32; n]; n];
        for b in 0..n {
            for a in 0..n {
                let p = int(2) * roots[b].dot(&roots[a]) / &norm2[a];
                cartan[b][a] = to_i64(&p).map(|x| x as i32).ok_or_else(|| {
                    Error::Inconsistent(format!("non-integral Cartan number {p}"))
                })?;
            }
        }

        let positive_roots: Vec<usize> = (0..n).filter(|&i| positive[i]).collect();
        let height = |i: usize| coeffs[i].iter().sum::<i32>();
        let highest = *positive_roots
            .iter()
            .max_by_key(|&&i| height(i))
            .ok_or_else(|| Error::Inconsistent("no positive roots".into()))?;

        let coeff_index: HashMap<Vec<i32>, usize> =
            coeffs.iter().cloned().enumerate().map(|(i, c)| (c, i)).collect();

        let mut rs = RootSystem {
            family,
            rank,
            ambient_dim,
            roots,
            norm2,
            simple,
            positive,
            positive_roots,
            highest,
            neg,
            coeffs,
            coroot_coeffs,
            cartan,
            coeff_index,
            root_index,
            simple_perms: Vec::new(),
            longest_word: Vec::new(),
        };
        rs.simple_perms = (0..rank)
            .map(|i| rs.reflection_perm(rs.simple[i]))
            .collect::<Result<_>>()?;
        rs.longest_word = rs.compute_longest_word();

        for &b in &rs.positive_roots {
            if rs.coeffs[highest].iter().zip(&rs.coeffs[b]).any(|(h, c)| h < c) {
                return Err(Error::Inconsistent(format!(
                    "highest root candidate {} does not dominate {}",
                    rs.roots[highest], rs.roots[b]
                )));
            }
        }
        Ok(rs)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn label(&self) -> String {
        format!("{}{}", self.family, self.rank)
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn roots(&self) -> &[RationalVector] {
        &self.roots
    }

    pub fn root(&self, i: usize) -> &RationalVector {
        &self.roots[i]
    }

    pub fn check_index(&self, i: usize) -> Result<()> {
        if i < self.roots.len() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: i,
                len: self.roots.len(),
            })
        }
    }

    pub fn index_of(&self, v: &RationalVector) -> Option<usize> {
        self.root_index.get(v).copied()
    }

    pub fn index_of_coeffs(&self, c: &[i32]) -> Option<usize> {
        self.coeff_index.get(c).copied()
    }

    /// Root indices of α_1..α_n, in the order of [`simple_roots`].
    pub fn simple(&self) -> &[usize] {
        &self.simple
    }

    pub fn positive_roots(&self) -> &[usize] {
        &self.positive_roots
    }

    pub fn is_positive(&self, i: usize) -> bool {
        self.positive[i]
    }

    pub fn highest_root(&self) -> usize {
        self.highest
    }

    pub fn negate(&self, i: usize) -> usize {
        self.neg[i]
    }

    pub fn norm2(&self, i: usize) -> &Rational {
        &self.norm2[i]
    }

    /// 2α/(α,α).
    pub fn coroot(&self, i: usize) -> RationalVector {
        self.roots[i].scale(&(int(2) / &self.norm2[i]))
    }

    /// ⟨t, α̌⟩ = 2(t, α)/(α, α).
    pub fn pairing(&self, t: &RationalVector, i: usize) -> Result<Rational> {
        t.check_dim(self.ambient_dim)?;
        self.check_index(i)?;
        Ok(int(2) * t.dot(&self.roots[i]) / &self.norm2[i])
    }

    /// s_α(t) = t − ⟨t, α̌⟩α.
    pub fn reflect(&self, i: usize, t: &RationalVector) -> Result<RationalVector> {
        t.check_dim(self.ambient_dim)?;
        self.check_index(i)?;
        Ok(reflect_vec(&self.roots[i], t))
    }

    /// Integer Cartan number ⟨β_b, α̌_a⟩.
    pub fn cartan(&self, b: usize, a: usize) -> i32 {
        self.cartan[b][a]
    }

    /// Coefficients of α over the simple roots (signed for negative roots).
    pub fn root_coefficients(&self, i: usize) -> &[i32] {
        &self.coeffs[i]
    }

    /// Coefficients of α̌ over the simple coroots.
    pub fn coroot_coefficients(&self, i: usize) -> &[i32] {
        &self.coroot_coeffs[i]
    }

    pub fn root_height(&self, i: usize) -> i32 {
        self.coeffs[i].iter().sum()
    }

    /// ht(α̌): sum of the simple-coroot coefficients.
    pub fn coroot_height(&self, i: usize) -> i32 {
        self.coroot_coeffs[i].iter().sum()
    }

    /// Position of root `i` in the simple list, if simple.
    pub fn simple_position(&self, i: usize) -> Option<usize> {
        self.simple.iter().position(|&s| s == i)
    }

    /// The permutation of root indices induced by s_α.
    pub fn reflection_perm(&self, a: usize) -> Result<Vec<usize>> {
        self.check_index(a)?;
        let ca = &self.coeffs[a];
        (0..self.roots.len())
            .map(|b| {
                let k = self.cartan[b][a];
                let image: Vec<i32> =
                    self.coeffs[b].iter().zip(ca).map(|(x, y)| x - k * y).collect();
                self.coeff_index.get(&image).copied().ok_or_else(|| {
                    Error::Inconsistent(format!("reflection image of root {b} is not a root"))
                })
            })
            .collect()
    }

    /// Root permutation of the simple reflection s_{α_i}, i in 0..rank.
    pub fn simple_perm(&self, i: usize) -> &[usize] {
        &self.simple_perms[i]
    }

    /// Length of s_α, counted as the number of positive roots it sends negative.
    pub fn reflection_length(&self, a: usize) -> Result<usize> {
        let perm = self.reflection_perm(a)?;
        Ok(self
            .positive_roots
            .iter()
            .filter(|&&b| !self.positive[perm[b]])
            .count())
    }

    // right-multiply by simple reflections while some simple root stays positive
    fn compute_longest_word(&self) -> Vec<usize> {
        let mut w: Vec<usize> = (0..self.roots.len()).collect();
        let mut word = Vec::new();
        while let Some(i) = (0..self.rank).find(|&i| self.positive[w[self.simple[i]]]) {
            let s = &self.simple_perms[i];
            w = s.iter().map(|&b| w[b]).collect();
            word.push(i);
        }
        word
    }

    /// A reduced word for w₀ as simple positions: w₀ = s_{i_1} ⋯ s_{i_N}.
    pub fn longest_word(&self) -> &[usize] {
        &self.longest_word
    }

    /// Applies w₀ to an ambient vector through its reduced word.
    pub fn apply_longest(&self, t: &RationalVector) -> Result<RationalVector> {
        t.check_dim(self.ambient_dim)?;
        let mut x = t.clone();
        for &i in self.longest_word.iter().rev() {
            x = reflect_vec(&self.roots[self.simple[i]], &x);
        }
        Ok(x)
    }

    /// Matrix of w₀ on the ambient space.
    pub fn longest_matrix(&self) -> Matrix {
        let cols: Vec<RationalVector> = (0..self.ambient_dim)
            .map(|j| {
                self.apply_longest(&RationalVector::unit(self.ambient_dim, j))
                    .expect("unit vector has ambient dimension")
            })
            .collect();
        Matrix::from_columns(&cols)
    }

    /// Matrix of s_α on the ambient space.
    pub fn reflection_matrix(&self, a: usize) -> Matrix {
        let cols: Vec<RationalVector> = (0..self.ambient_dim)
            .map(|j| reflect_vec(&self.roots[a], &RationalVector::unit(self.ambient_dim, j)))
            .collect();
        Matrix::from_columns(&cols)
    }

    fn simple_vectors(&self) -> Vec<RationalVector> {
        self.simple.iter().map(|&i| self.roots[i].clone()).collect()
    }

    fn solve_simple_gram(&self, gram: impl Fn(usize, usize) -> Rational, j: usize) -> Result<RationalVector> {
        let n = self.rank;
        let m: Vec<Vec<Rational>> = (0..n).map(|i| (0..n).map(|k| gram(i, k)).collect()).collect();
        let rhs: Vec<Rational> = (0..n).map(|i| if i == j { int(1) } else { int(0) }).collect();
        let c = solve_square(&m, &rhs)
            .ok_or_else(|| Error::Inconsistent("singular simple-root Gram matrix".into()))?;
        let simple = self.simple_vectors();
        Ok(simple
            .iter()
            .zip(&c)
            .fold(RationalVector::zeros(self.ambient_dim), |acc, (s, x)| &acc + &s.scale(x)))
    }

    /// τ_j in the root span with (τ_j, α_i) = δ_ij.
    pub fn dual_basis_vector(&self, j: usize) -> Result<RationalVector> {
        let s = self.simple_vectors();
        self.solve_simple_gram(|i, k| s[k].dot(&s[i]), j)
    }

    /// Fundamental weight ω_j in the root span with ⟨ω_j, α̌_i⟩ = δ_ij.
    pub fn fundamental_weight(&self, j: usize) -> Result<RationalVector> {
        let s = self.simple_vectors();
        self.solve_simple_gram(|i, k| int(2) * s[k].dot(&s[i]) / s[i].norm2(), j)
    }

    /// Orthogonal projection onto the span of the roots.
    pub fn project_to_root_span(&self, t: &RationalVector) -> Result<RationalVector> {
        t.check_dim(self.ambient_dim)?;
        let s = self.simple_vectors();
        let n = self.rank;
        let m: Vec<Vec<Rational>> = (0..n).map(|i| (0..n).map(|k| s[k].dot(&s[i])).collect()).collect();
        let rhs: Vec<Rational> = s.iter().map(|si| t.dot(si)).collect();
        let c = solve_square(&m, &rhs)
            .ok_or_else(|| Error::Inconsistent("singular simple-root Gram matrix".into()))?;
        Ok(s.iter()
            .zip(&c)
            .fold(RationalVector::zeros(self.ambient_dim), |acc, (si, x)| &acc + &si.scale(x)))
    }

    /// Sum of the positive roots (twice the Weyl vector); regular dominant.
    pub fn positive_root_sum(&self) -> RationalVector {
        self.positive_roots
            .iter()
            .fold(RationalVector::zeros(self.ambient_dim), |acc, &i| &acc + &self.roots[i])
    }

    /// Position of the first simple root whose pairing with `t` is negative.
    pub fn first_non_dominant(&self, t: &RationalVector) -> Result<Option<(usize, Rational)>> {
        for (pos, &s) in self.simple.iter().enumerate() {
            let p = self.pairing(t, s)?;
            if p.is_negative() {
                return Ok(Some((pos, p)));
            }
        }
        Ok(None)
    }

    pub fn is_regular(&self, t: &RationalVector) -> Result<bool> {
        for &s in &self.simple {
            if self.pairing(t, s)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(self.first_non_dominant(t)?.is_none())
    }

    /// Positions of simple roots with ⟨t, α̌⟩ = 0 (the stabilizer subset S_P).
    pub fn stabilizer_subset(&self, t: &RationalVector) -> Result<Vec<usize>> {
        let mut out = Vec::new();
        for (pos, &s) in self.simple.iter().enumerate() {
            if self.pairing(t, s)?.is_zero() {
                out.push(pos);
            }
        }
        Ok(out)
    }

    pub fn describe_root(&self, i: usize) -> String {
        format_in_basis(&self.roots[i])
    }
}

fn reflect_vec(alpha: &RationalVector, t: &RationalVector) -> RationalVector {
    let p = int(2) * t.dot(alpha) / alpha.norm2();
    if p.is_zero() {
        return t.clone();
    }
    t - &alpha.scale(&p)
}

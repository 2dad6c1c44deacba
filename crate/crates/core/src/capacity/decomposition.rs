//! Decompositions of w₀ into reflections in pairwise orthogonal positive roots.
//!
//! The root lists are transcribed per type and machine-validated on every
//! construction: the product of the reflections must equal w₀ as a matrix,
//! the roots must be pairwise orthogonal, their number must equal the
//! codimension of the fixed space of w₀, and Σ (2 ht(α̌) − 1) must equal |R⁺|.

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::{int, Matrix, RationalVector};
use crate::rootsystem::{Family, RootSystem};

fn e_pm(dim: usize, i: usize, j: usize, sign: i64) -> RationalVector {
    let mut v = RationalVector::zeros(dim);
    v.0[i] = int(1);
    v.0[j] = int(sign);
    v
}

// e_{2i-1} ∓ e_{2i} pairs for i = 1..pairs (0-based coordinates)
fn orthogonal_pairs(dim: usize, pairs: usize) -> Vec<RationalVector> {
    (0..pairs)
        .flat_map(|k| [e_pm(dim, 2 * k, 2 * k + 1, -1), e_pm(dim, 2 * k, 2 * k + 1, 1)])
        .collect()
}

/// The transcribed root list α_1..α_r for each type.
pub fn transcribed_roots(family: Family, rank: usize) -> Result<Vec<RationalVector>> {
    family.validate_rank(rank)?;
    let dim = family.ambient_dim(rank);
    Ok(match family {
        // swaps (k, n-k+1) of the U(n) coordinates
        Family::A => {
            let n = rank + 1;
            (0..n / 2).map(|k| e_pm(dim, k, n - 1 - k, -1)).collect()
        }
        Family::B => {
            let mut v = orthogonal_pairs(dim, rank / 2);
            if rank % 2 == 1 {
                v.push(RationalVector::unit(dim, rank - 1));
            }
            v
        }
        Family::C => (0..rank)
            .map(|k| RationalVector::unit(dim, k).scale(&int(2)))
            .collect(),
        Family::D => orthogonal_pairs(dim, rank / 2),
        Family::E => {
            let r = [
                [-1, 1, 0, 0, 0, 0, 0, 0],
                [1, 1, 0, 0, 0, 0, 0, 0],
                [0, 0, -1, 1, 0, 0, 0, 0],
                [0, 0, 1, 1, 0, 0, 0, 0],
                [0, 0, 0, 0, -1, 1, 0, 0],
                [0, 0, 0, 0, 1, 1, 0, 0],
                [0, 0, 0, 0, 0, 0, -1, 1],
                [0, 0, 0, 0, 0, 0, 1, 1],
            ];
            match rank {
                6 => vec![
                    RationalVector::from_ints(&[0, -1, 1, 0, 0, 0, 0, 0]),
                    RationalVector::from_ints(&[-1, 0, 0, 1, 0, 0, 0, 0]),
                    RationalVector::from_halves(&[1, 1, 1, 1, 1, -1, -1, 1]),
                    RationalVector::from_halves(&[-1, -1, -1, -1, 1, -1, -1, 1]),
                ],
                _ => r.iter().take(rank).map(|x| RationalVector::from_ints(x)).collect(),
            }
        }
        Family::F => vec![
            RationalVector::from_ints(&[1, 1, 0, 0]),
            RationalVector::from_ints(&[1, -1, 0, 0]),
            RationalVector::from_ints(&[0, 0, 1, 1]),
            RationalVector::from_ints(&[0, 0, 1, -1]),
        ],
        Family::G => vec![
            RationalVector::from_ints(&[0, 1, -1]),
            RationalVector::from_ints(&[2, -1, -1]),
        ],
    })
}

/// Outcome of the four checks on a candidate decomposition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecompositionReport {
    pub product_is_longest: bool,
    pub pairwise_orthogonal: bool,
    pub reflections: usize,
    pub absolute_length_of_longest: usize,
    pub height_sum: i64,
    pub positive_roots: usize,
}

impl DecompositionReport {
    pub fn passed(&self) -> bool {
        self.product_is_longest
            && self.pairwise_orthogonal
            && self.reflections == self.absolute_length_of_longest
            && self.height_sum == self.positive_roots as i64
    }

    pub fn first_failure(&self) -> Option<String> {
        if !self.product_is_longest {
            Some("product of reflections differs from w0".into())
        } else if !self.pairwise_orthogonal {
            Some("roots are not pairwise orthogonal".into())
        } else if self.reflections != self.absolute_length_of_longest {
            Some(format!(
                "{} reflections but l_T(w0) = {}",
                self.reflections, self.absolute_length_of_longest
            ))
        } else if self.height_sum != self.positive_roots as i64 {
            Some(format!(
                "sum of (2 ht - 1) is {} but |R+| = {}",
                self.height_sum, self.positive_roots
            ))
        } else {
            None
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct W0Decomposition {
    pub roots: Vec<usize>,
}

impl W0Decomposition {
    /// Transcribed decomposition for the type of `rs`, validated.
    pub fn for_root_system(rs: &RootSystem) -> Result<Self> {
        let label = rs.label();
        let vectors = transcribed_roots(rs.family(), rs.rank())?;
        let mut roots = Vec::with_capacity(vectors.len());
        for v in &vectors {
            let i = rs.index_of(v).ok_or_else(|| Error::DecompositionCheck {
                label: label.clone(),
                check: format!("{v} is not a root"),
            })?;
            if !rs.is_positive(i) {
                return Err(Error::DecompositionCheck {
                    label: label.clone(),
                    check: format!("{v} is not a positive root"),
                });
            }
            roots.push(i);
        }
        let dec = W0Decomposition { roots };
        let report = dec.validate(rs);
        match report.first_failure() {
            Some(check) => Err(Error::DecompositionCheck { label, check }),
            None => Ok(dec),
        }
    }

    pub fn validate(&self, rs: &RootSystem) -> DecompositionReport {
        let longest = rs.longest_matrix();
        let product = self
            .roots
            .iter()
            .fold(Matrix::identity(rs.ambient_dim()), |acc, &a| acc.mul(&rs.reflection_matrix(a)));
        let pairwise_orthogonal = self.roots.iter().enumerate().all(|(i, &a)| {
            self.roots[i + 1..]
                .iter()
                .all(|&b| rs.root(a).dot(rs.root(b)).is_zero())
        });
        DecompositionReport {
            product_is_longest: product == longest,
            pairwise_orthogonal,
            reflections: self.roots.len(),
            absolute_length_of_longest: longest.fixed_space_codim(),
            height_sum: self
                .roots
                .iter()
                .map(|&a| 2 * i64::from(rs.coroot_height(a)) - 1)
                .sum(),
            positive_roots: rs.positive_roots().len(),
        }
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn vectors<'a>(&'a self, rs: &'a RootSystem) -> impl Iterator<Item = &'a RationalVector> + 'a {
        self.roots.iter().map(move |&a| rs.root(a))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c3_decomposition() {
        let rs = RootSystem::build(Family::C, 3).unwrap();
        let dec = W0Decomposition::for_root_system(&rs).unwrap();
        let vs: Vec<_> = dec.vectors(&rs).cloned().collect();
        assert_eq!(
            vs,
            vec![
                RationalVector::from_ints(&[2, 0, 0]),
                RationalVector::from_ints(&[0, 2, 0]),
                RationalVector::from_ints(&[0, 0, 2]),
            ]
        );
        let report = dec.validate(&rs);
        assert_eq!(report.height_sum, 9);
        assert_eq!(report.reflections, 3);
    }

    #[test]
    fn a1_decomposition() {
        let rs = RootSystem::build(Family::A, 1).unwrap();
        let dec = W0Decomposition::for_root_system(&rs).unwrap();
        assert_eq!(dec.roots, vec![rs.simple()[0]]);
    }

    #[test]
    fn b5_decomposition() {
        let rs = RootSystem::build(Family::B, 5).unwrap();
        let dec = W0Decomposition::for_root_system(&rs).unwrap();
        let report = dec.validate(&rs);
        assert_eq!(report.reflections, 5);
        assert_eq!(report.absolute_length_of_longest, 5);
        assert_eq!(report.height_sum, 25);
    }

    #[test]
    fn corrupted_data_is_caught() {
        let rs = RootSystem::build(Family::B, 4).unwrap();
        let mut dec = W0Decomposition::for_root_system(&rs).unwrap();
        dec.roots.pop();
        assert!(!dec.validate(&rs).passed());
        // swap a root for a non-orthogonal one
        let mut dec = W0Decomposition::for_root_system(&rs).unwrap();
        dec.roots[1] = rs.index_of(&RationalVector::from_ints(&[0, 1, 1, 0])).unwrap();
        let report = dec.validate(&rs);
        assert!(!report.pairwise_orthogonal);
        assert!(report.first_failure().is_some());
    }
}

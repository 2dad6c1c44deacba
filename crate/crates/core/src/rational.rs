//! Exact rationals, rational vectors and the small amount of linear algebra
//! the rest of the crate needs (rank and solving inside a span).

use std::fmt;
use std::ops::{Add, Index, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p/q"` or an integer literal.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("`{s}` is not a rational of the form p/q"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p = BigInt::from_str(p.trim()).map_err(|_| bad())?;
            let q = BigInt::from_str(q.trim()).map_err(|_| bad())?;
            if q.is_zero() {
                return Err(Error::Parse(format!("`{s}` has zero denominator")));
            }
            Ok(Rational::new(p, q))
        }
        None => BigInt::from_str(s).map(Rational::from_integer).map_err(|_| bad()),
    }
}

/// Comma separated list of rationals, e.g. `3,2,1/2,-1`.
pub fn parse_rational_list(s: &str) -> Result<Vec<Rational>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(parse_rational).collect()
}

/// Wire format: always `p/q`, integers included.
pub fn to_wire(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

pub fn from_wire(s: &str) -> Result<Rational> {
    parse_rational(s)
}

pub fn to_i64(q: &Rational) -> Option<i64> {
    if q.is_integer() {
        q.to_integer().to_i64()
    } else {
        None
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct RationalVector(pub Vec<Rational>);

impl RationalVector {
    pub fn zeros(dim: usize) -> Self {
        RationalVector(vec![Rational::zero(); dim])
    }

    pub fn from_ints(xs: &[i64]) -> Self {
        RationalVector(xs.iter().map(|&x| int(x)).collect())
    }

    /// Halves of the given integers; convenient for E-type and F4 roots.
    pub fn from_halves(xs: &[i64]) -> Self {
        RationalVector(xs.iter().map(|&x| frac(x, 2)).collect())
    }

    pub fn unit(dim: usize, i: usize) -> Self {
        let mut v = Self::zeros(dim);
        v.0[i] = Rational::one();
        v
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn dot(&self, other: &Self) -> Rational {
        debug_assert_eq!(self.dim(), other.dim());
        self.0
            .iter()
            .zip(&other.0)
            .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
    }

    pub fn norm2(&self) -> Rational {
        self.dot(self)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        RationalVector(self.0.iter().map(|x| x * c).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn check_dim(&self, dim: usize) -> Result<()> {
        if self.dim() == dim {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: dim,
                got: self.dim(),
            })
        }
    }

    pub fn to_wire(&self) -> Vec<String> {
        self.0.iter().map(to_wire).collect()
    }

    pub fn from_wire(xs: &[String]) -> Result<Self> {
        xs.iter()
            .map(|s| from_wire(s))
            .collect::<Result<Vec<_>>>()
            .map(RationalVector)
    }
}

impl Index<usize> for RationalVector {
    type Output = Rational;
    fn index(&self, i: usize) -> &Rational {
        &self.0[i]
    }
}

impl Add for &RationalVector {
    type Output = RationalVector;
    fn add(self, rhs: &RationalVector) -> RationalVector {
        RationalVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &RationalVector {
    type Output = RationalVector;
    fn sub(self, rhs: &RationalVector) -> RationalVector {
        RationalVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &RationalVector {
    type Output = RationalVector;
    fn neg(self) -> RationalVector {
        RationalVector(self.0.iter().map(|a| -a).collect())
    }
}

impl Mul<&RationalVector> for &Rational {
    type Output = RationalVector;
    fn mul(self, rhs: &RationalVector) -> RationalVector {
        rhs.scale(self)
    }
}

impl fmt::Display for RationalVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// Human readable `e_i` expansion, e.g. `2e1 - e2 - e3` or `1/2(e1 - e2 + ...)`.
pub fn format_in_basis(v: &RationalVector) -> String {
    let mut out = String::new();
    for (i, c) in v.0.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let a = c.abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if !a.is_one() {
            if a.is_integer() {
                out.push_str(&a.to_string());
            } else {
                out.push_str(&format!("({a})"));
            }
        }
        out.push_str(&format!("e{}", i + 1));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Row-reduces `rows` in place and returns the rank.
pub fn row_reduce(rows: &mut [Vec<Rational>]) -> usize {
    let nrows = rows.len();
    if nrows == 0 {
        return 0;
    }
    let ncols = rows[0].len();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..nrows).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = rows[rank][col].recip();
        for x in rows[rank].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == rank || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                *x -= &factor * p;
            }
        }
        rank += 1;
        if rank == nrows {
            break;
        }
    }
    rank
}

pub fn rank(vectors: &[RationalVector]) -> usize {
    let mut rows: Vec<Vec<Rational>> = vectors.iter().map(|v| v.0.clone()).collect();
    row_reduce(&mut rows)
}

/// Coefficients `c` with `Σ c_i basis_i = target`, or `None` if `target` is
/// outside the span. `basis` must be linearly independent.
pub fn solve_in_span(basis: &[RationalVector], target: &RationalVector) -> Option<Vec<Rational>> {
    let k = basis.len();
    let dim = target.dim();
    // augmented system: one row per ambient coordinate, unknowns are the coefficients
    let mut rows: Vec<Vec<Rational>> = (0..dim)
        .map(|r| {
            let mut row: Vec<Rational> = basis.iter().map(|b| b.0[r].clone()).collect();
            row.push(target.0[r].clone());
            row
        })
        .collect();
    let rank = row_reduce(&mut rows);
    let mut sol = vec![Rational::zero(); k];
    for row in rows.iter().take(rank) {
        let lead = row.iter().position(|x| !x.is_zero())?;
        if lead == k {
            return None;
        }
        sol[lead] = row[k].clone();
    }
    if rows.iter().skip(rank).any(|row| !row[k].is_zero()) {
        return None;
    }
    let back = basis
        .iter()
        .zip(&sol)
        .fold(RationalVector::zeros(dim), |acc, (b, c)| &acc + &b.scale(c));
    (back == *target).then_some(sol)
}

/// Solves the square system `m x = rhs` exactly; `None` when singular.
pub fn solve_square(m: &[Vec<Rational>], rhs: &[Rational]) -> Option<Vec<Rational>> {
    let n = m.len();
    let mut rows: Vec<Vec<Rational>> = m
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let mut r = row.clone();
            r.push(b.clone());
            r
        })
        .collect();
    let rank = row_reduce(&mut rows);
    if rank < n || rows.iter().take(n).enumerate().any(|(i, r)| r[i].is_zero()) {
        return None;
    }
    Some(rows.into_iter().map(|r| r[n].clone()).collect())
}

/// Square matrix acting on column vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    pub rows: Vec<Vec<Rational>>,
}

impl Matrix {
    pub fn identity(n: usize) -> Self {
        Matrix {
            rows: (0..n)
                .map(|i| (0..n).map(|j| if i == j { int(1) } else { int(0) }).collect())
                .collect(),
        }
    }

    pub fn from_columns(cols: &[RationalVector]) -> Self {
        let n = cols.first().map_or(0, RationalVector::dim);
        Matrix {
            rows: (0..n)
                .map(|i| cols.iter().map(|c| c.0[i].clone()).collect())
                .collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn apply(&self, v: &RationalVector) -> RationalVector {
        RationalVector(
            self.rows
                .iter()
                .map(|row| {
                    row.iter()
                        .zip(&v.0)
                        .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
                })
                .collect(),
        )
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        let n = self.dim();
        let mut rows = vec![vec![Rational::zero(); n]; n];
        for (i, row) in rows.iter_mut().enumerate() {
            for (j, out) in row.iter_mut().enumerate() {
                for k in 0..n {
                    *out += &self.rows[i][k] * &other.rows[k][j];
                }
            }
        }
        Matrix { rows }
    }

    /// Rank of `self - I`, i.e. the codimension of the fixed subspace.
    pub fn fixed_space_codim(&self) -> usize {
        let mut rows = self.rows.clone();
        for (i, row) in rows.iter_mut().enumerate() {
            row[i] -= int(1);
        }
        row_reduce(&mut rows)
    }
}

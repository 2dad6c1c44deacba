use num_traits::{Signed, Zero};

use super::decomposition::W0Decomposition;
use super::WeightLambda;
use crate::error::{Error, Result};
use crate::rational::{frac, int, Rational, RationalVector};
use crate::rootsystem::RootSystem;

/// Σ_k ⟨λ, α̌_k⟩ over the decomposition roots.
pub fn upper_bound(rs: &RootSystem, lambda: &WeightLambda, dec: &W0Decomposition) -> Result<Rational> {
    let mut acc = Rational::zero();
    for &a in &dec.roots {
        acc += rs.pairing(lambda.coords(), a)?;
    }
    Ok(acc)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LowerBound {
    pub value: Rational,
    /// Simple position α* attaining the maximum (first one on ties).
    pub witness: usize,
    /// Σ_k (n_{α_k α}/n_{ρ α}) ⟨λ, α̌_k⟩ for each simple position α.
    pub candidates: Vec<Rational>,
}

/// max over simple α of Σ_k (n_{α_k α}/n_{ρ α}) ⟨λ, α̌_k⟩.
pub fn lower_bound(rs: &RootSystem, lambda: &WeightLambda, dec: &W0Decomposition) -> Result<LowerBound> {
    let rho = rs.root_coefficients(rs.highest_root());
    let pairings: Vec<Rational> = dec
        .roots
        .iter()
        .map(|&a| rs.pairing(lambda.coords(), a))
        .collect::<Result<_>>()?;
    let mut candidates = Vec::with_capacity(rs.rank());
    for (j, &n_rho) in rho.iter().enumerate() {
        if n_rho == 0 {
            return Err(Error::Inconsistent(format!(
                "highest root has zero coefficient on alpha_{}",
                j + 1
            )));
        }
        let sum = dec
            .roots
            .iter()
            .zip(&pairings)
            .fold(Rational::zero(), |acc, (&a, p)| {
                acc + int(i64::from(rs.root_coefficients(a)[j])) * p
            });
        candidates.push(sum / int(i64::from(n_rho)));
    }
    let (witness, value) = candidates
        .iter()
        .enumerate()
        .fold((0, &candidates[0]), |best, (j, c)| if c > best.1 { (j, c) } else { best });
    Ok(LowerBound {
        value: value.clone(),
        witness,
        candidates,
    })
}

/// osc(φ^ξ)/m⁺_ξ = ⟨λ − w₀λ, ξ⟩ / max_α |⟨α, ξ⟩| for ξ in the closed
/// positive cone (⟨α, ξ⟩ ≥ 0 on simple roots, not identically zero).
pub fn coweight_oscillation_bound(rs: &RootSystem, lambda: &WeightLambda, xi: &RationalVector) -> Result<Rational> {
    xi.check_dim(rs.ambient_dim())?;
    let mut any_positive = false;
    for (j, &s) in rs.simple().iter().enumerate() {
        let v = rs.root(s).dot(xi);
        if v.is_negative() {
            return Err(Error::NotPositiveCoweight {
                simple: j + 1,
                value: v.to_string(),
            });
        }
        any_positive |= v.is_positive();
    }
    if !any_positive {
        return Err(Error::NotPositiveCoweight {
            simple: 1,
            value: "0".into(),
        });
    }
    let m_plus = rs
        .roots()
        .iter()
        .map(|r| r.dot(xi).abs())
        .max()
        .expect("nonempty root system");
    let at_rho = rs.root(rs.highest_root()).dot(xi);
    if at_rho != m_plus {
        return Err(Error::Inconsistent(format!(
            "max |<alpha, xi>| = {m_plus} is not attained at the highest root ({at_rho})"
        )));
    }
    let moved = rs.apply_longest(lambda.coords())?;
    let osc = (lambda.coords() - &moved).dot(xi);
    Ok(osc / m_plus)
}

/// ½ Σ_k |λ_k − λ_{n−k+1}| for non-increasing λ.
pub fn unitary_capacity(lambda: &[Rational]) -> Result<Rational> {
    if let Some(pos) = lambda.windows(2).position(|w| w[0] < w[1]) {
        return Err(Error::Unsorted { position: pos + 1 });
    }
    let n = lambda.len();
    let total = (0..n).fold(Rational::zero(), |acc, k| acc + (&lambda[k] - &lambda[n - 1 - k]).abs());
    Ok(total * frac(1, 2))
}

//! Lower and upper bounds for the Hofer-Zehnder capacity of coadjoint orbits.
//!
//! For dominant λ and a decomposition w₀ = s_{α_1} ⋯ s_{α_r} into reflections
//! in pairwise orthogonal positive roots:
//!
//! ```text
//! max_{α ∈ S} Σ_k (n_{α_k α} / n_{ρ α}) ⟨λ, α̌_k⟩  ≤  c_HZ  ≤  Σ_k ⟨λ, α̌_k⟩
//! ```
//!
//! [`hz_bounds`] evaluates both sides, the U(n) exact value for type A, the
//! per-type closed forms, and (for enumerable groups) two independent
//! confirmations of the upper bound: the quantum Bruhat graph degree
//! d_min(w₀, e) and the minimal Bruhat-graph path area from [e] to [w₀].

mod bounds;
mod decomposition;
pub mod sample;
mod table;

use std::sync::Arc;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graphs::{BruhatGraph, Degree, QuantumBruhatGraph};
use crate::rational::{frac, to_wire, Rational, RationalVector};
use crate::rootsystem::{Family, RootSystem};
use crate::weyl::{WeylGroup, DEFAULT_GROUP_CAP};

pub use bounds::{coweight_oscillation_bound, lower_bound, unitary_capacity, upper_bound, LowerBound};
pub use decomposition::{transcribed_roots, DecompositionReport, W0Decomposition};
pub use table::{closed_form_table, eliminated_closed_form, g2_printed_upper, row_label, ClosedForm};

/// Largest |W| for which [`hz_bounds`] runs the graph confirmations.
pub const DEFAULT_CONFIRM_CAP: u128 = 60_000;

/// A dominant weight in the ambient coordinates of its type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightLambda {
    coords: RationalVector,
    regular: bool,
    projected: bool,
}

impl WeightLambda {
    /// Validates dominance. G2 weights are first projected to the root plane.
    pub fn new(rs: &RootSystem, coords: RationalVector) -> Result<Self> {
        coords.check_dim(rs.ambient_dim())?;
        let (coords, projected) = if rs.family() == Family::G {
            let p = rs.project_to_root_span(&coords)?;
            let moved = p != coords;
            (p, moved)
        } else {
            (coords, false)
        };
        if let Some((pos, p)) = rs.first_non_dominant(&coords)? {
            return Err(Error::NotDominant {
                simple: pos + 1,
                pairing: p.to_string(),
            });
        }
        let regular = rs.is_regular(&coords)?;
        Ok(WeightLambda {
            coords,
            regular,
            projected,
        })
    }

    pub fn coords(&self) -> &RationalVector {
        &self.coords
    }

    pub fn is_regular(&self) -> bool {
        self.regular
    }

    /// True when the input was changed by projection to the root span.
    pub fn was_projected(&self) -> bool {
        self.projected
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Checks {
    pub sharp: bool,
    pub ratio_ok: bool,
    /// Σ⟨λ, α̌_k⟩ = ⟨λ, d_min(w₀, e)⟩ = min Bruhat path area, when computed.
    pub dmin_consistent: Option<bool>,
    pub table_match: bool,
}

#[derive(Clone, Debug)]
pub struct CapacityBounds {
    pub family: Family,
    pub rank: usize,
    pub lambda: WeightLambda,
    pub lower: Rational,
    pub upper: Rational,
    pub exact: Option<Rational>,
    pub decomposition: W0Decomposition,
    pub decomposition_vectors: Vec<RationalVector>,
    pub witness: usize,
    pub witness_root: RationalVector,
    pub d_min_degree: Option<Degree>,
    pub d_min_area: Option<Rational>,
    pub min_path_area: Option<Rational>,
    pub closed_form: ClosedForm,
    pub checks: Checks,
    pub confirmation_note: Option<String>,
}

#[derive(Clone, Debug)]
pub struct HzOptions {
    pub group_cap: u128,
    /// Graph confirmations only run when |W| ≤ this.
    pub confirm_cap: u128,
}

impl Default for HzOptions {
    fn default() -> Self {
        HzOptions {
            group_cap: DEFAULT_GROUP_CAP,
            confirm_cap: DEFAULT_CONFIRM_CAP,
        }
    }
}

/// (2/3)·upper ≤ lower ≤ upper.
pub fn sandwich_holds(lower: &Rational, upper: &Rational) -> bool {
    !lower.is_negative() && lower <= upper && frac(2, 3) * upper <= *lower
}

pub fn hz_bounds(family: Family, rank: usize, lambda: &[Rational], opts: &HzOptions) -> Result<CapacityBounds> {
    let rs = Arc::new(RootSystem::build(family, rank)?);
    hz_bounds_for(rs, RationalVector(lambda.to_vec()), opts)
}

pub fn hz_bounds_for(rs: Arc<RootSystem>, lambda: RationalVector, opts: &HzOptions) -> Result<CapacityBounds> {
    let lambda = WeightLambda::new(&rs, lambda)?;
    let dec = W0Decomposition::for_root_system(&rs)?;
    let upper = upper_bound(&rs, &lambda, &dec)?;
    let lb = lower_bound(&rs, &lambda, &dec)?;
    let exact = match rs.family() {
        Family::A => Some(unitary_capacity(lambda.coords().coords())?),
        _ => None,
    };
    let closed_form = closed_form_table(&rs, &lambda)?;

    let mut d_min_degree = None;
    let mut d_min_area = None;
    let mut min_path_area = None;
    let mut dmin_consistent = None;
    let mut confirmation_note = None;
    let order = rs.family().weyl_order(rs.rank());
    if order <= opts.confirm_cap.min(opts.group_cap) {
        let group = WeylGroup::generate(Arc::clone(&rs), opts.group_cap)?;
        let w0 = group.longest_index();
        let stabilizer = rs.stabilizer_subset(lambda.coords())?;
        let bruhat = BruhatGraph::new(&group, group.parabolic(&stabilizer)?);
        let (area, _) = bruhat.min_path_area(lambda.coords(), bruhat.coset_of(0), bruhat.coset_of(w0))?;
        if lambda.is_regular() {
            let quantum = QuantumBruhatGraph::new(&group);
            let (deg, _) = quantum.d_min(w0, 0)?;
            let all: Vec<usize> = (0..rs.rank()).collect();
            let paired = deg.pair_with(&rs, lambda.coords(), &all)?;
            dmin_consistent = Some(paired == upper && area == upper);
            d_min_degree = Some(deg);
            d_min_area = Some(paired);
        } else {
            confirmation_note = Some(format!(
                "lambda is singular (S_P = {:?}); parabolic min path area {} vs sum of pairings {}",
                stabilizer.iter().map(|i| i + 1).collect::<Vec<_>>(),
                area,
                upper
            ));
        }
        min_path_area = Some(area);
    } else {
        confirmation_note = Some(format!(
            "|W({})| = {order} exceeds the confirmation cap {}; graph checks skipped",
            rs.label(),
            opts.confirm_cap.min(opts.group_cap)
        ));
    }

    let table_match = closed_form.lower == lb.value && closed_form.upper == upper;
    let checks = Checks {
        sharp: lb.value == upper,
        ratio_ok: sandwich_holds(&lb.value, &upper),
        dmin_consistent,
        table_match,
    };
    let witness_root = rs.root(rs.simple()[lb.witness]).clone();
    Ok(CapacityBounds {
        family: rs.family(),
        rank: rs.rank(),
        decomposition_vectors: dec.vectors(&rs).cloned().collect(),
        decomposition: dec,
        lower: lb.value,
        upper,
        exact,
        witness: lb.witness,
        witness_root,
        d_min_degree,
        d_min_area,
        min_path_area,
        closed_form,
        checks,
        confirmation_note,
        lambda,
    })
}

impl CapacityBounds {
    /// True when every embedded check that was run passed. Singular λ leaves
    /// the sharpness flag informational.
    pub fn all_checks_pass(&self) -> bool {
        self.checks.ratio_ok && self.checks.table_match && self.checks.dmin_consistent.unwrap_or(true)
    }

    pub fn report(&self) -> CapacityReport {
        CapacityReport {
            r#type: self.family.to_string(),
            rank: self.rank,
            group: row_label(self.family, self.rank),
            lambda: self.lambda.coords().to_wire(),
            lambda_projected: self.lambda.was_projected(),
            regular: self.lambda.is_regular(),
            lower: to_wire(&self.lower),
            upper: to_wire(&self.upper),
            exact: self.exact.as_ref().map(to_wire),
            decomposition: self.decomposition_vectors.iter().map(RationalVector::to_wire).collect(),
            witness_root: self.witness_root.to_wire(),
            witness_simple: self.witness + 1,
            d_min_degree: self.d_min_degree.as_ref().map(|d| d.0.clone()),
            min_path_area: self.min_path_area.as_ref().map(to_wire),
            closed_form: ClosedFormReport {
                lower: to_wire(&self.closed_form.lower),
                upper: to_wire(&self.closed_form.upper),
            },
            checks: ChecksReport {
                sharp: self.checks.sharp,
                ratio_ok: self.checks.ratio_ok,
                dmin_consistent: self.checks.dmin_consistent,
                table_match: self.checks.table_match,
            },
            note: self.confirmation_note.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosedFormReport {
    pub lower: String,
    pub upper: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChecksReport {
    pub sharp: bool,
    pub ratio_ok: bool,
    pub dmin_consistent: Option<bool>,
    pub table_match: bool,
}

/// JSON form of [`CapacityBounds`]; rationals are `"p/q"` strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CapacityReport {
    pub r#type: String,
    pub rank: usize,
    pub group: String,
    pub lambda: Vec<String>,
    pub lambda_projected: bool,
    pub regular: bool,
    pub lower: String,
    pub upper: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exact: Option<String>,
    pub decomposition: Vec<Vec<String>>,
    pub witness_root: Vec<String>,
    pub witness_simple: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d_min_degree: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub min_path_area: Option<String>,
    pub closed_form: ClosedFormReport,
    pub checks: ChecksReport,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// A regular dominant default weight for each type: (r+1, …, 1) for A,
/// (r, …, 1) for B, C, D, and the sum of positive roots otherwise.
pub fn default_lambda(rs: &RootSystem) -> RationalVector {
    let n = rs.ambient_dim() as i64;
    match rs.family() {
        Family::A | Family::B | Family::C | Family::D => {
            RationalVector::from_ints(&(1..=n).rev().collect::<Vec<_>>())
        }
        _ => rs.positive_root_sum(),
    }
}

/// Σ_k ⟨λ, α̌_k⟩ α_k, which equals λ − w₀λ for an orthogonal decomposition.
pub fn oscillation_vector(rs: &RootSystem, lambda: &WeightLambda, dec: &W0Decomposition) -> Result<RationalVector> {
    let mut acc = RationalVector::zeros(rs.ambient_dim());
    for &a in &dec.roots {
        let p = rs.pairing(lambda.coords(), a)?;
        if !p.is_zero() {
            acc = &acc + &rs.root(a).scale(&p);
        }
    }
    Ok(acc)
}

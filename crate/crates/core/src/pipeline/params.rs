use crate::pattern::{ForbiddenFamily, PatternSpec};
use crate::rational::{self, serde_rational, Rational};
use num_traits::One;
use serde::{Deserialize, Serialize};

/// Resolution of the exact embedding threshold: `d_emb` is the smallest
/// multiple of `2^-BITS` meeting the embedding condition.
const BITS: u32 = 32;

/// Constants derived from `(ε, T, F)` and the class cap.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ParameterSet {
    #[serde(with = "serde_rational")]
    pub eps: Rational,
    /// `d_emb - eps0`.
    #[serde(with = "serde_rational")]
    pub delta: Rational,
    #[serde(with = "serde_rational")]
    pub eps0: Rational,
    #[serde(with = "serde_rational")]
    pub d_emb: Rational,
    /// `v(F) / ε`.
    #[serde(with = "serde_rational")]
    pub m_emb: Rational,
    /// `(1 + ε)^r - 1` for `r = e(T)`.
    #[serde(with = "serde_rational")]
    pub delta_mult: Rational,
    pub k_min: usize,
    pub n0: usize,
    pub k_cap: usize,
    pub max_degree: usize,
}

impl ParameterSet {
    /// `(1 + ε)^r - 1`.
    pub fn delta_mult(&self, r: usize) -> Rational {
        delta_mult(&self.eps, r)
    }
}

pub fn delta_mult(eps: &Rational, r: usize) -> Rational {
    rational::pow(&(Rational::one() + eps), r) - Rational::one()
}

/// `δ^Δ / (2 + Δ)`: the regularity needed to embed graphs of maximum degree
/// `Δ` into pairs of density at least `δ + ε0`.
pub fn embedding_eps0(delta: &Rational, max_degree: usize) -> Rational {
    rational::pow(delta, max_degree) / rational::from_usize(2 + max_degree)
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParamError {
    #[error("eps must lie in (0, 1)")]
    EpsOutOfRange,
    #[error("class cap must be at least 1")]
    ZeroCap,
}

/// Takes `eps0 = ε` and the smallest dyadic `d_emb` with
/// `(d_emb - eps0)^Δ / (2 + Δ) ≥ eps0`.
pub fn compute_params(
    eps: &Rational,
    t: &PatternSpec,
    fam: &ForbiddenFamily,
    k_cap: usize,
) -> Result<ParameterSet, ParamError> {
    if !rational::is_in_open_unit(eps) {
        return Err(ParamError::EpsOutOfRange);
    }
    if k_cap == 0 {
        return Err(ParamError::ZeroCap);
    }
    let max_degree = fam.max_degree();
    let eps0 = eps.clone();
    let meets = |d: &Rational| embedding_eps0(&(d - &eps0), max_degree) >= eps0;
    // (2 + Δ) eps0 ≤ (2 + Δ), so d = eps0 + 2 + Δ always qualifies.
    let hi = &eps0 + rational::from_usize(2 + max_degree);
    let d_emb = rational::bisect_up(&eps0, &hi, BITS, meets);
    let delta = &d_emb - &eps0;
    let m_emb = rational::from_usize(fam.max_vertices()) / eps;
    let k_min = rational::ceil_to_usize(&eps.recip()).expect("1/eps fits");
    let n0 = rational::ceil_to_usize(&(&m_emb * rational::from_usize(k_cap))).expect("n0 fits");
    Ok(ParameterSet {
        delta_mult: delta_mult(eps, t.edge_count()),
        eps: eps.clone(),
        delta,
        eps0,
        d_emb,
        m_emb,
        k_min,
        n0,
        k_cap,
        max_degree,
    })
}

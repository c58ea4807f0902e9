//! Additive approximation of `ex(G, T, F)`: regularity partition, partition
//! graph, exact `ex_hom` on the partition graph, and an `F`-free certificate.

mod params;

pub use params::{compute_params, delta_mult, embedding_eps0, ParamError, ParameterSet};

use crate::graph::{serde_graph, Graph};
use crate::oracle::{exact_ex_hom_with, exact_ex_with, OracleConfig, OracleError};
use crate::pattern::{count_copies, hom_exists, is_family_free, ForbiddenFamily, PatternSpec};
use crate::rational::{self, serde_rational, Rational};
use crate::regularity::{
    build_partition_graph, extract_subgraph, refine_partition_with, RefineConfig, RefineError, RegularityError,
    DEFAULT_K_CAP,
};
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

/// Oracle budget on the exact route; exhausting it switches to regularity.
pub const PIPELINE_NODE_BUDGET: u64 = 200_000;

/// Which procedure produced a report.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Route {
    /// Fast path, then the exact oracle below `n0`, else regularity.
    #[default]
    Auto,
    /// Skip the exact oracle even below `n0` (fast path still applies).
    Regularity,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ApproxConfig {
    pub k_cap: usize,
    /// Edit budget as a fraction of `n²`; defaults to `eps`.
    pub budget: Option<Rational>,
    /// Density threshold for the partition graph; defaults to `min(d_emb, 1)`.
    pub d: Option<Rational>,
    /// Smallest class count; defaults to `k_min = ⌈1/ε⌉`.
    pub min_classes: Option<usize>,
    pub route: Route,
    pub oracle: OracleConfig,
}

impl Default for ApproxConfig {
    fn default() -> Self {
        ApproxConfig {
            k_cap: DEFAULT_K_CAP,
            budget: None,
            d: None,
            min_classes: None,
            route: Route::Auto,
            oracle: OracleConfig { node_budget: PIPELINE_NODE_BUDGET, threads: 1 },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ApproxReport {
    /// `(n/k)^t · N(W0, T)` on the regularity route; the exact value when
    /// the oracle ran; 0 on the fast path.
    #[serde(with = "serde_rational")]
    pub estimate: Rational,
    /// Copies of `T` in the certificate.
    pub lower_bound_count: u64,
    #[serde(with = "serde_graph")]
    pub certificate: Graph,
    pub edits_applied: usize,
    /// Class count of the regularity partition; 0 when none was built.
    pub k: usize,
    pub fast_path: bool,
    pub params: ParameterSet,
}

#[derive(Debug, thiserror::Error)]
pub enum PipelineError {
    #[error(transparent)]
    Params(#[from] ParamError),
    #[error("regularity route needs at least {need} vertices for {classes} classes, got {n}")]
    TooSmall { n: usize, need: usize, classes: usize },
    #[error("refinement failed: {source}")]
    Refinement {
        params: Box<ParameterSet>,
        #[source]
        source: RefineError,
    },
    #[error(transparent)]
    Regularity(#[from] RegularityError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

pub fn approx_ex(
    g: &Graph,
    t: &PatternSpec,
    fam: &ForbiddenFamily,
    eps: &Rational,
) -> Result<ApproxReport, PipelineError> {
    approx_ex_with(g, t, fam, eps, &ApproxConfig::default())
}

pub fn approx_ex_with(
    g: &Graph,
    t: &PatternSpec,
    fam: &ForbiddenFamily,
    eps: &Rational,
    config: &ApproxConfig,
) -> Result<ApproxReport, PipelineError> {
    let params = compute_params(eps, t, fam, config.k_cap)?;
    let n = g.n();

    if fam.members().iter().any(|f| hom_exists(f, t.graph())) {
        // Every F-free graph then has o(n^t) copies of T, so 0 is within εn^t.
        return Ok(ApproxReport {
            estimate: Rational::zero(),
            lower_bound_count: 0,
            certificate: Graph::empty(n),
            edits_applied: 0,
            k: 0,
            fast_path: true,
            params,
        });
    }

    if config.route == Route::Auto && n < params.n0 {
        match exact_ex_with(g, t, fam, &config.oracle) {
            Ok(found) => {
                return Ok(ApproxReport {
                    estimate: rational::from_u64(found.value),
                    lower_bound_count: found.value,
                    certificate: found.witness,
                    edits_applied: 0,
                    k: 0,
                    fast_path: false,
                    params,
                });
            }
            // Too large to search: fall through to the regularity route.
            Err(OracleError::Incomplete { .. }) => {}
        }
    }
    regularity_route(g, t, fam, params, config)
}

fn regularity_route(
    g: &Graph,
    t: &PatternSpec,
    fam: &ForbiddenFamily,
    params: ParameterSet,
    config: &ApproxConfig,
) -> Result<ApproxReport, PipelineError> {
    let n = g.n();
    let classes = config.min_classes.unwrap_or(params.k_min).clamp(1, config.k_cap);
    if n < 4 * classes {
        return Err(PipelineError::TooSmall { n, need: 4 * classes, classes });
    }
    let budget = config.budget.clone().unwrap_or_else(|| params.eps.clone());
    let refine = RefineConfig { k_cap: config.k_cap };
    let edited = match refine_partition_with(g, &params.eps, classes, &budget, &refine) {
        Ok(edited) => edited,
        Err(source) => return Err(PipelineError::Refinement { params: Box::new(params), source }),
    };
    // d_emb exceeds 1 for large eps; complete pairs should still count.
    let d = config.d.clone().unwrap_or_else(|| params.d_emb.clone().min(Rational::one()));
    let pg = build_partition_graph(&edited.g_star, &edited.partition, &edited.achieved_eps, &d)?;
    let best = exact_ex_hom_with(&pg.w, t, fam, &config.oracle)?;
    let certificate = extract_subgraph(&edited.g_star, &pg, &best.witness).expect("oracle witness is conventional");
    let k = edited.partition.k();
    let scale = rational::pow(&(rational::from_usize(n) / rational::from_usize(k)), t.t());
    Ok(ApproxReport {
        estimate: scale * best.value,
        lower_bound_count: count_copies(&certificate, t),
        certificate,
        edits_applied: edited.edits_applied,
        k,
        fast_path: false,
        params,
    })
}

/// Independently re-checks a report: the certificate is `F`-free, the count
/// matches it, the estimate is nonnegative and the fast path reports 0.
pub fn certify(report: &ApproxReport, fam: &ForbiddenFamily, t: &PatternSpec) -> bool {
    is_family_free(&report.certificate, fam)
        && count_copies(&report.certificate, t) == report.lower_bound_count
        && !report.estimate.is_negative()
        && (!report.fast_path || report.estimate.is_zero())
}

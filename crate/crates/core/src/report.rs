//! JSON-facing report types for the command-line and C interfaces.
//!
//! Vertices, positions, and word letters in these structs are 1-based to
//! match the file format and the printed tables; the core library is
//! 0-based throughout. Builders time themselves and fill `timing_ms`.

use crate::algebra::Algebra;
use crate::explorer::{
    connect, enumerate_qh, twist_graph, verify_connectedness, ConnectMethod, ExplorerError,
    Strategy,
};
use crate::field::FieldSpec;
use crate::perm::Perm;
use crate::qh::{
    costandard_dims, heredity_chain_check, is_quasi_hereditary, k0_filtration_coefficients,
    DeltaFiltrationOutcome, HeredityReport,
};
use crate::twist::{biquiver, twistable};
use serde::Serialize;
use std::sync::Arc;
use std::time::Instant;

#[derive(Clone, Debug, Serialize)]
pub struct AlgebraSummary {
    pub name: String,
    pub field: String,
    pub vertices: usize,
    pub dimension: usize,
    /// Peirce block dimensions: entry [i][j] counts basis paths i -> j.
    pub graded_dims: Vec<Vec<usize>>,
}

impl AlgebraSummary {
    pub fn new(a: &Algebra) -> AlgebraSummary {
        AlgebraSummary {
            name: a.name().to_string(),
            field: field_name(a.field()),
            vertices: a.n(),
            dimension: a.dim(),
            graded_dims: a.graded_dims(),
        }
    }
}

pub fn field_name(f: FieldSpec) -> String {
    match f {
        FieldSpec::Rational => "Q".into(),
        FieldSpec::Prime(p) => format!("Fp {p}"),
    }
}

fn strategy_name(s: Strategy) -> String {
    match s {
        Strategy::Brute => "brute".into(),
        Strategy::Bfs => "bfs".into(),
    }
}

fn ms(start: Instant) -> u128 {
    start.elapsed().as_millis()
}

#[derive(Clone, Debug, Serialize)]
pub struct FiltrationDto {
    pub ok: bool,
    /// multiplicities[i][k] = [P(i) : Delta(k)], present when ok.
    pub multiplicities: Option<Vec<Vec<usize>>>,
    pub failure: Option<FiltrationFailureDto>,
}

#[derive(Clone, Debug, Serialize)]
pub struct FiltrationFailureDto {
    pub projective: usize,
    pub position: usize,
    pub layer_vertex: usize,
    pub layer_dims: Vec<usize>,
    pub multiplicity: usize,
    pub standard_dims: Vec<usize>,
}

impl FiltrationDto {
    fn new(out: &DeltaFiltrationOutcome) -> FiltrationDto {
        FiltrationDto {
            ok: out.ok,
            multiplicities: out.ok.then(|| out.multiplicities.clone()),
            failure: out.failure.as_ref().map(|f| FiltrationFailureDto {
                projective: f.projective + 1,
                position: f.position + 1,
                layer_vertex: f.layer_vertex + 1,
                layer_dims: f.layer_dims.clone(),
                multiplicity: f.multiplicity,
                standard_dims: f.standard_dims.clone(),
            }),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct HeredityStepDto {
    pub position: usize,
    pub vertex: usize,
    pub algebra_dim: usize,
    pub idempotent_condition: bool,
    pub projectivity_condition: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct HeredityDto {
    pub ok: bool,
    pub steps: Vec<HeredityStepDto>,
}

impl HeredityDto {
    fn new(r: &HeredityReport) -> HeredityDto {
        HeredityDto {
            ok: r.ok,
            steps: r
                .steps
                .iter()
                .map(|s| HeredityStepDto {
                    position: s.position + 1,
                    vertex: s.vertex + 1,
                    algebra_dim: s.algebra_dim,
                    idempotent_condition: s.idempotent_condition,
                    projectivity_condition: s.projectivity_condition,
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub command: String,
    pub algebra: AlgebraSummary,
    pub order: Vec<usize>,
    pub quasi_hereditary: bool,
    /// Every [Delta(i) : S(i)] = 1.
    pub condition_a: bool,
    pub delta_simple_multiplicity: Vec<usize>,
    /// standard_dims[i] = dimension vector of Delta(i+1), indexed by vertex.
    pub standard_dims: Vec<Vec<usize>>,
    pub filtration: FiltrationDto,
    /// Independent certification route through quotient algebras.
    pub heredity: HeredityDto,
    /// [P(i)] as an integer combination of [Delta(k)] in K_0, when solvable.
    pub k0_coefficients: Vec<Option<Vec<i64>>>,
    pub timing_ms: u128,
}

pub fn check_report(a: &Arc<Algebra>, sigma: &Perm) -> CheckReport {
    let start = Instant::now();
    let qh = is_quasi_hereditary(a, sigma);
    let heredity = heredity_chain_check(a, sigma);
    CheckReport {
        command: "check".into(),
        algebra: AlgebraSummary::new(a),
        order: sigma.one_line(),
        quasi_hereditary: qh.quasi_hereditary,
        condition_a: qh.condition_a,
        delta_simple_multiplicity: qh.delta_simple_mult,
        standard_dims: qh.standard_dims,
        filtration: FiltrationDto::new(&qh.filtration),
        heredity: HeredityDto::new(&heredity),
        k0_coefficients: k0_filtration_coefficients(a, sigma),
        timing_ms: ms(start),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ModuleDims {
    pub vertex: usize,
    pub dims: Vec<usize>,
    pub total: usize,
}

fn module_dims(dims: Vec<Vec<usize>>) -> Vec<ModuleDims> {
    dims.into_iter()
        .enumerate()
        .map(|(i, d)| ModuleDims {
            vertex: i + 1,
            total: d.iter().sum(),
            dims: d,
        })
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct StandardReport {
    pub command: String,
    pub algebra: AlgebraSummary,
    pub order: Vec<usize>,
    pub standard: Vec<ModuleDims>,
    pub costandard: Vec<ModuleDims>,
    pub timing_ms: u128,
}

pub fn standard_report(a: &Arc<Algebra>, sigma: &Perm) -> StandardReport {
    let start = Instant::now();
    StandardReport {
        command: "standard".into(),
        algebra: AlgebraSummary::new(a),
        order: sigma.one_line(),
        standard: module_dims(crate::qh::standard_dims(a, sigma)),
        costandard: module_dims(costandard_dims(a, sigma)),
        timing_ms: ms(start),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct NeighborDto {
    pub position: usize,
    pub lower_vertex: usize,
    pub upper_vertex: usize,
    pub hom: usize,
    pub ext: usize,
    pub cohom: usize,
    pub coext: usize,
    pub twistable: bool,
    pub standard_side: bool,
    pub costandard_side: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct BiquiverReport {
    pub command: String,
    pub algebra: AlgebraSummary,
    pub order: Vec<usize>,
    pub vertex_by_position: Vec<usize>,
    pub standard_dims_by_position: Vec<Vec<usize>>,
    pub neighbors: Vec<NeighborDto>,
    /// 1-based positions p with Ext(Delta_p, Delta_{p+1}) != 0.
    pub solid: Vec<usize>,
    /// 1-based positions p with Hom(Delta_p, Delta_{p+1}) != 0.
    pub dotted: Vec<usize>,
    pub timing_ms: u128,
}

pub fn biquiver_report(a: &Arc<Algebra>, sigma: &Perm) -> BiquiverReport {
    let start = Instant::now();
    let bq = biquiver(a, sigma);
    let neighbors = bq
        .invariants
        .iter()
        .map(|iv| {
            let d = twistable(a, sigma, iv.position);
            NeighborDto {
                position: iv.position + 1,
                lower_vertex: iv.lower_vertex + 1,
                upper_vertex: iv.upper_vertex + 1,
                hom: iv.hom,
                ext: iv.ext,
                cohom: iv.cohom,
                coext: iv.coext,
                twistable: d.twistable,
                standard_side: d.standard_side,
                costandard_side: d.costandard_side,
            }
        })
        .collect();
    BiquiverReport {
        command: "biquiver".into(),
        algebra: AlgebraSummary::new(a),
        order: bq.order,
        vertex_by_position: bq.vertex_by_position,
        standard_dims_by_position: bq.standard_dims_by_position,
        neighbors,
        solid: bq.solid,
        dotted: bq.dotted,
        timing_ms: ms(start),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct EnumerateReport {
    pub command: String,
    pub algebra: AlgebraSummary,
    pub strategy: String,
    pub count: usize,
    pub orders: Vec<Vec<usize>>,
    pub timing_ms: u128,
}

pub fn enumerate_report(
    a: &Arc<Algebra>,
    strategy: Strategy,
) -> Result<EnumerateReport, ExplorerError> {
    let start = Instant::now();
    let orders = enumerate_qh(a, strategy)?;
    Ok(EnumerateReport {
        command: "enumerate".into(),
        algebra: AlgebraSummary::new(a),
        strategy: strategy_name(strategy),
        count: orders.len(),
        orders: orders.iter().map(Perm::one_line).collect(),
        timing_ms: ms(start),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct TwistEdgeDto {
    pub from: Vec<usize>,
    pub to: Vec<usize>,
    pub position: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct TwistGraphReport {
    pub command: String,
    pub algebra: AlgebraSummary,
    pub strategy: String,
    pub node_count: usize,
    pub edge_count: usize,
    pub nodes: Vec<Vec<usize>>,
    pub edges: Vec<TwistEdgeDto>,
    pub timing_ms: u128,
}

pub fn twist_graph_report(
    a: &Arc<Algebra>,
    strategy: Strategy,
) -> Result<TwistGraphReport, ExplorerError> {
    let start = Instant::now();
    let g = twist_graph(a, strategy)?;
    let nodes: Vec<Vec<usize>> = g.nodes.iter().map(Perm::one_line).collect();
    let edges = g
        .edges
        .iter()
        .map(|&(i, j, p)| TwistEdgeDto {
            from: nodes[i].clone(),
            to: nodes[j].clone(),
            position: p + 1,
        })
        .collect();
    Ok(TwistGraphReport {
        command: "twist-graph".into(),
        algebra: AlgebraSummary::new(a),
        strategy: strategy_name(strategy),
        node_count: nodes.len(),
        edge_count: g.edges.len(),
        nodes,
        edges,
        timing_ms: ms(start),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct ConnectReport {
    pub command: String,
    pub algebra: AlgebraSummary,
    pub from: Vec<usize>,
    pub to: Vec<usize>,
    /// 1-based positions in application order (first swap first).
    pub word: Vec<usize>,
    pub length: usize,
    pub inversion_distance: usize,
    pub minimal: bool,
    pub method: String,
    pub certified: bool,
    pub intermediates: Vec<Vec<usize>>,
    pub timing_ms: u128,
}

pub fn connect_report(
    a: &Arc<Algebra>,
    from: &Perm,
    to: &Perm,
) -> Result<ConnectReport, ExplorerError> {
    let start = Instant::now();
    let path = connect(a, from, to)?;
    let distance = from.inversion_distance(to);
    Ok(ConnectReport {
        command: "connect".into(),
        algebra: AlgebraSummary::new(a),
        from: from.one_line(),
        to: to.one_line(),
        length: path.word.len(),
        inversion_distance: distance,
        minimal: path.word.len() == distance,
        word: path.word.iter().map(|&p| p + 1).collect(),
        method: match path.method {
            ConnectMethod::MinimalWord => "minimal_word".into(),
            ConnectMethod::Bfs => "bfs".into(),
        },
        certified: path.certified,
        intermediates: path.intermediates.iter().map(Perm::one_line).collect(),
        timing_ms: ms(start),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub command: String,
    pub algebra: AlgebraSummary,
    pub orders: usize,
    pub pairs: usize,
    pub fallbacks: usize,
    pub all_certified: bool,
    pub all_minimal: bool,
    pub max_word_len: usize,
    pub timing_ms: u128,
}

pub fn verify_report(a: &Arc<Algebra>) -> Result<VerifyReport, ExplorerError> {
    let start = Instant::now();
    let r = verify_connectedness(a)?;
    Ok(VerifyReport {
        command: "verify".into(),
        algebra: AlgebraSummary::new(a),
        orders: r.orders,
        pairs: r.pairs,
        fallbacks: r.fallbacks,
        all_certified: r.all_certified,
        all_minimal: r.all_minimal,
        max_word_len: r.max_word_len,
        timing_ms: ms(start),
    })
}

/// Pretty JSON with stable key order (struct declaration order).
pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("reports contain no non-serializable values")
}

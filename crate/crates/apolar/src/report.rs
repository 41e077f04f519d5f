//! Analysis orchestration and deterministic reports.
//!
//! Every command produces a [`Report`]: an input echo, the seed, and the
//! requested analyses keyed by name. JSON output is schema-stable and byte
//! identical for a fixed (input, seed); timing never enters the report.

use num::bigint::BigInt;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::betti::{betti_consistency, koszul_betti, BettiTable, GradedModule};
use crate::duality::ApolarAlgebra;
use crate::fixtures;
use crate::hessian::{
    self, acting_monomials, det_poly, generic_rank, mixed_hessian, mixed_hessian_with,
    RankEstimate, RankMethod,
};
use crate::milnor::{
    self, jac_gens, milnor_profile, quotient_lefschetz, Classification, IdealQuotient,
};
use crate::parse::parse_poly;
use crate::poly::{Poly, Rational};
use crate::{Error, Result};

pub const TOOL_NAME: &str = "apolar";

#[derive(Serialize, Clone, Debug)]
pub struct ToolInfo {
    pub name: &'static str,
    pub version: &'static str,
}

fn tool_info() -> ToolInfo {
    ToolInfo {
        name: TOOL_NAME,
        version: env!("CARGO_PKG_VERSION"),
    }
}

/// Echo of the resolved input form.
#[derive(Serialize, Clone, Debug)]
pub struct InputEcho {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub example: Option<String>,
    pub poly: String,
    pub nvars: usize,
    pub degree: usize,
}

/// How an input is specified on the command line.
#[derive(Clone, Debug, Default)]
pub struct InputSpec {
    pub example: Option<String>,
    pub poly: Option<String>,
    pub nvars: Option<usize>,
}

pub fn resolve_input(spec: &InputSpec) -> Result<(InputEcho, Poly)> {
    let (example, poly) = match (&spec.example, &spec.poly) {
        (Some(name), None) => {
            let r = fixtures::resolve(name)?;
            (Some(r.label), r.poly)
        }
        (None, Some(expr)) => {
            let nvars = spec
                .nvars
                .ok_or_else(|| Error::InvalidArgument("--poly requires --nvars".into()))?;
            (None, parse_poly(expr, nvars)?)
        }
        _ => {
            return Err(Error::InvalidArgument(
                "give exactly one input: --example <name> or --poly <expr> --nvars <n>".into(),
            ))
        }
    };
    let degree = poly.homogeneous_degree()? as usize;
    let echo = InputEcho {
        example,
        poly: poly.to_string(),
        nvars: poly.nvars(),
        degree,
    };
    Ok((echo, poly))
}

#[derive(Serialize, Clone, Debug)]
pub struct RankJson {
    pub rank: usize,
    pub trials: u32,
    pub seed: u64,
    pub certified: bool,
    pub method: String,
}

impl From<&RankEstimate> for RankJson {
    fn from(r: &RankEstimate) -> Self {
        RankJson {
            rank: r.rank,
            trials: r.trials,
            seed: r.seed,
            certified: r.certified,
            method: match r.method {
                RankMethod::SampledMaximal => "sampled-maximal".to_string(),
                RankMethod::SampledOnly => "sampled-lower-bound".to_string(),
                RankMethod::Symbolic => "symbolic".to_string(),
            },
        }
    }
}

#[derive(Serialize, Clone, Debug)]
pub struct HilbertAnalysis {
    pub cone: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub socle_degree: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hilbert: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub basis_per_degree: Option<Vec<Vec<String>>>,
}

#[derive(Serialize, Clone, Debug)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ClassificationJson {
    Artinian {
        vanishing_degree: usize,
    },
    Stable {
        tail: usize,
        from: usize,
        note: String,
    },
    Undetermined {
        advice: String,
    },
}

#[derive(Serialize, Clone, Debug)]
pub struct SeriesJson {
    pub polynomial: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tail_value: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tail_from: Option<usize>,
}

#[derive(Serialize, Clone, Debug)]
pub struct MilnorAnalysis {
    pub order: usize,
    pub m_cap: usize,
    pub certification_bound: usize,
    pub dims: Vec<usize>,
    pub classification: ClassificationJson,
    pub hilbert_series: SeriesJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub artinian: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tjurina_sum: Option<usize>,
}

#[derive(Serialize, Clone, Debug)]
pub struct ActingGridJson {
    pub rows: usize,
    pub cols: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub entries: Option<Vec<Vec<String>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub determinant_zero: Option<bool>,
}

/// Vanishing data for one square Hessian order: the pivot-basis determinant
/// and the grid over the acting monomial set (the published convention).
#[derive(Serialize, Clone, Debug)]
pub struct SquareHessJson {
    pub order: usize,
    pub dim: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub determinant: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub determinant_zero: Option<bool>,
    pub acting_grid: ActingGridJson,
}

#[derive(Serialize, Clone, Debug)]
pub struct HessianAnalysis {
    pub k: usize,
    pub l: usize,
    pub rows: usize,
    pub cols: usize,
    pub row_labels: Vec<String>,
    pub col_labels: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub entries: Option<Vec<Vec<String>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub entry_degree: Option<u32>,
    pub generic_rank: RankJson,
    /// One record per distinct order in {k, l} with 2*order <= degree.
    pub square_orders: Vec<SquareHessJson>,
}

#[derive(Serialize, Clone, Debug)]
pub struct LevelJson {
    pub level: usize,
    pub dim: usize,
    pub rank: RankJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub determinant_zero: Option<bool>,
    pub acting_size: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub acting_determinant_zero: Option<bool>,
    pub ok: bool,
}

#[derive(Serialize, Clone, Debug)]
pub struct StepJson {
    pub from: usize,
    pub to: usize,
    pub dim_source: usize,
    pub dim_target: usize,
    pub rank: RankJson,
    pub maximal: bool,
}

#[derive(Serialize, Clone, Debug)]
pub struct LefschetzAnalysis {
    pub quotient: String,
    pub socle_degree: usize,
    pub hilbert: Vec<usize>,
    pub levels: Vec<LevelJson>,
    pub slp: bool,
    pub steps: Vec<StepJson>,
    pub wlp: bool,
    pub trials: u32,
    pub seed: u64,
}

#[derive(Serialize, Clone, Debug)]
pub struct QuotientLefschetzAnalysis {
    pub quotient: String,
    pub cap: usize,
    pub dims: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub artinian: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub socle_degree: Option<usize>,
    pub steps: Vec<StepJson>,
    pub wlp: bool,
    pub narrow_maps: Vec<StepJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub slp_narrow: Option<bool>,
    pub trials: u32,
    pub seed: u64,
}

#[derive(Serialize, Clone, Debug)]
pub struct BettiEntryJson {
    pub i: usize,
    pub j: usize,
    pub beta: usize,
}

#[derive(Serialize, Clone, Debug)]
pub struct BettiAnalysis {
    pub quotient: String,
    pub cap: usize,
    pub complete: bool,
    pub truncated: bool,
    pub entries: Vec<BettiEntryJson>,
    pub consistent: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub self_dual: Option<bool>,
    pub grid: String,
}

#[derive(Serialize, Clone, Debug)]
pub struct MembershipAnalysis {
    pub hessian_in_jacobian: bool,
    pub zero_hessian: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hessian_degree: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate_verified: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate_support: Option<usize>,
}

#[derive(Serialize, Clone, Debug)]
pub struct PolarAnalysis {
    pub order: usize,
    pub rank: RankJson,
    pub image_dim: usize,
    pub ambient_dim: usize,
    pub degenerate: bool,
}

#[derive(Serialize, Clone, Debug)]
pub struct SkippedJson {
    pub analysis: String,
    pub reason: String,
}

#[derive(Serialize, Clone, Debug, Default)]
pub struct Analyses {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hilbert: Option<HilbertAnalysis>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub milnor: Option<Vec<MilnorAnalysis>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hessian: Option<HessianAnalysis>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lefschetz: Option<LefschetzAnalysis>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub quotient_lefschetz: Option<QuotientLefschetzAnalysis>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub betti: Option<BettiAnalysis>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub membership: Option<MembershipAnalysis>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub polar: Option<Vec<PolarAnalysis>>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub skipped: Vec<SkippedJson>,
}

#[derive(Serialize, Clone, Debug)]
pub struct Report {
    pub tool: ToolInfo,
    pub input: InputEcho,
    pub seed: u64,
    pub analyses: Analyses,
}

impl Report {
    fn new(input: InputEcho, seed: u64) -> Self {
        Report {
            tool: tool_info(),
            input,
            seed,
            analyses: Analyses::default(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serialization");
        s.push('\n');
        s
    }
}

/// Which graded quotient a command should analyze.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuotientKind {
    Apolar,
    Jacobian,
}

impl std::str::FromStr for QuotientKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "apolar" => Ok(QuotientKind::Apolar),
            "jacobian" => Ok(QuotientKind::Jacobian),
            other => Err(Error::InvalidArgument(format!(
                "unknown quotient `{other}` (expected `apolar` or `jacobian`)"
            ))),
        }
    }
}

fn op_strings(ops: &[Poly]) -> Vec<String> {
    ops.iter().map(|o| o.to_op_string()).collect()
}

const MAX_INLINE_ENTRIES: usize = 400;

fn matrix_entries(m: &hessian::PolyMat) -> Option<Vec<Vec<String>>> {
    if m.rows() * m.cols() > MAX_INLINE_ENTRIES {
        return None;
    }
    Some(
        (0..m.rows())
            .map(|r| (0..m.cols()).map(|c| m.at(r, c).to_string()).collect())
            .collect(),
    )
}

fn hilbert_analysis(f: &Poly) -> Result<HilbertAnalysis> {
    match ApolarAlgebra::new(f) {
        Err(Error::Cone) => Ok(HilbertAnalysis {
            cone: true,
            socle_degree: None,
            hilbert: None,
            basis_per_degree: None,
        }),
        Err(e) => Err(e),
        Ok(alg) => Ok(HilbertAnalysis {
            cone: false,
            socle_degree: Some(alg.socle_degree()),
            hilbert: Some(alg.view().dims.clone()),
            basis_per_degree: Some(
                (0..=alg.socle_degree())
                    .map(|k| op_strings(&alg.basis_ops(k)))
                    .collect(),
            ),
        }),
    }
}

fn milnor_analysis(f: &Poly, order: usize, cap: Option<usize>) -> Result<MilnorAnalysis> {
    let profile = milnor_profile(f, order, cap)?;
    let (polynomial, tail) = profile.series();
    let classification = match profile.classification {
        Classification::Artinian { vanishing_degree } => {
            ClassificationJson::Artinian { vanishing_degree }
        }
        Classification::Stable { tail, from } => ClassificationJson::Stable {
            tail,
            from,
            note: "constancy over the last three computed degrees; the window is a heuristic, \
                   the non-Artinian certificate is exact"
                .to_string(),
        },
        Classification::Undetermined => ClassificationJson::Undetermined {
            advice: "no certificate fired within the cap; raise --cap".to_string(),
        },
    };
    let artinian = match profile.classification {
        Classification::Artinian { .. } => Some(true),
        Classification::Stable { .. } => Some(false),
        Classification::Undetermined => None,
    };
    let tjurina = match profile.classification {
        Classification::Stable { tail, .. } => Some(tail),
        _ => None,
    };
    let d = f.homogeneous_degree()? as usize;
    Ok(MilnorAnalysis {
        order,
        m_cap: profile.m_cap,
        certification_bound: milnor::certification_bound(f.nvars(), d, order),
        dims: profile.dims.clone(),
        classification,
        hilbert_series: SeriesJson {
            polynomial,
            tail_value: tail.map(|(v, _)| v),
            tail_from: tail.map(|(_, m)| m),
        },
        artinian,
        tjurina_sum: tjurina,
    })
}

fn square_hessian_json(alg: &ApolarAlgebra, order: usize) -> Result<SquareHessJson> {
    let f = alg.form();
    let hm = mixed_hessian(alg, order, order)?;
    let (det_str, det_zero) = if hm.rows() <= 12 {
        let det = det_poly(&hm);
        let zero = det.is_zero();
        (Some(det.to_string()), Some(zero))
    } else {
        (None, None)
    };
    let acting: Vec<Poly> = acting_monomials(f, order)
        .into_iter()
        .map(|m| Poly::term(m, num::traits::One::one()))
        .collect();
    let grid = mixed_hessian_with(f, &acting, &acting)?;
    let grid_zero = if grid.rows() == hm.rows() {
        det_zero
    } else if grid.rows() <= 12 {
        Some(det_poly(&grid).is_zero())
    } else {
        None
    };
    Ok(SquareHessJson {
        order,
        dim: hm.rows(),
        determinant: det_str,
        determinant_zero: det_zero,
        acting_grid: ActingGridJson {
            rows: grid.rows(),
            cols: grid.cols(),
            entries: matrix_entries(&grid),
            determinant_zero: grid_zero,
        },
    })
}

fn hessian_analysis(
    f: &Poly,
    k: usize,
    l: usize,
    trials: u32,
    seed: u64,
) -> Result<HessianAnalysis> {
    let alg = ApolarAlgebra::new(f)?;
    let hm = mixed_hessian(&alg, k, l)?;
    let rank = generic_rank(&hm, trials, seed);
    let d = alg.socle_degree();
    let mut orders = vec![k];
    if l != k {
        orders.push(l);
    }
    orders.sort_unstable();
    let mut square_orders = Vec::new();
    for s in orders {
        if s >= 1 && 2 * s <= d {
            square_orders.push(square_hessian_json(&alg, s)?);
        }
    }
    Ok(HessianAnalysis {
        k,
        l,
        rows: hm.rows(),
        cols: hm.cols(),
        row_labels: op_strings(&hm.row_labels),
        col_labels: op_strings(&hm.col_labels),
        entries: matrix_entries(&hm),
        entry_degree: hm.entry_degree(),
        generic_rank: RankJson::from(&rank),
        square_orders,
    })
}

fn lefschetz_analysis(f: &Poly, trials: u32, seed: u64) -> Result<LefschetzAnalysis> {
    let rep = hessian::slp_report(f, trials, seed)?;
    let mut levels = Vec::new();
    for lv in &rep.levels {
        let acting = acting_monomials(f, lv.level);
        let acting_zero = if acting.len() == lv.dim {
            lv.determinant_zero
        } else if acting.len() <= 12 {
            let ops: Vec<Poly> = acting
                .iter()
                .map(|m| Poly::term(m.clone(), num::traits::One::one()))
                .collect();
            Some(det_poly(&mixed_hessian_with(f, &ops, &ops)?).is_zero())
        } else {
            None
        };
        levels.push(LevelJson {
            level: lv.level,
            dim: lv.dim,
            rank: RankJson::from(&lv.rank),
            determinant_zero: lv.determinant_zero,
            acting_size: acting.len(),
            acting_determinant_zero: acting_zero,
            ok: lv.ok,
        });
    }
    let steps = rep
        .steps
        .iter()
        .map(|s| StepJson {
            from: s.from,
            to: s.to,
            dim_source: s.dim_source,
            dim_target: s.dim_target,
            rank: RankJson::from(&s.rank),
            maximal: s.maximal,
        })
        .collect();
    Ok(LefschetzAnalysis {
        quotient: "apolar".to_string(),
        socle_degree: rep.socle_degree,
        hilbert: rep.hilbert.clone(),
        levels,
        slp: rep.slp,
        steps,
        wlp: rep.wlp,
        trials,
        seed,
    })
}

fn random_linear_form(nvars: usize, rng: &mut ChaCha8Rng) -> Poly {
    loop {
        let mut ell = Poly::zero(nvars);
        for i in 0..nvars {
            let c = rng.gen_range(-1_000_000i64..=1_000_000);
            ell = &ell + &Poly::variable(nvars, i).scale(&Rational::from_integer(BigInt::from(c)));
        }
        if !ell.is_zero() {
            return ell;
        }
    }
}

fn sampled_quotient_step(
    pres: &milnor::GradedIdealPresentation,
    i: usize,
    j: usize,
    trials: u32,
    seed: u64,
    rng: &mut ChaCha8Rng,
) -> Result<StepJson> {
    let mut best: Option<milnor::QuotientRank> = None;
    let mut used = 0;
    for _ in 0..trials.max(1) {
        used += 1;
        let ell = random_linear_form(pres.nvars(), rng);
        let r = quotient_lefschetz(pres, i, j, &ell)?;
        let better = best.as_ref().map_or(true, |b| r.rank > b.rank);
        let maximal = r.maximal;
        if better {
            best = Some(r);
        }
        if maximal {
            break;
        }
    }
    let r = best.unwrap();
    Ok(StepJson {
        from: i,
        to: j,
        dim_source: r.dim_source,
        dim_target: r.dim_target,
        rank: RankJson {
            rank: r.rank,
            trials: used,
            seed,
            certified: r.maximal,
            method: "sampled-multipliers".to_string(),
        },
        maximal: r.maximal,
    })
}

fn quotient_lefschetz_analysis(
    f: &Poly,
    trials: u32,
    seed: u64,
) -> Result<QuotientLefschetzAnalysis> {
    let profile = milnor_profile(f, 1, None)?;
    let pres = jac_gens(f, 1)?;
    let cap = profile.m_cap;
    let (artinian, socle) = match profile.classification {
        Classification::Artinian { vanishing_degree } => (Some(true), Some(vanishing_degree - 1)),
        Classification::Stable { .. } => (Some(false), None),
        Classification::Undetermined => (None, None),
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let top = socle.unwrap_or(cap.saturating_sub(1));
    let mut steps = Vec::new();
    for i in 0..top {
        if profile.dims[i] == 0 || profile.dims[i + 1] == 0 {
            continue;
        }
        steps.push(sampled_quotient_step(
            &pres,
            i,
            i + 1,
            trials,
            seed,
            &mut rng,
        )?);
    }
    let wlp = steps.iter().all(|s| s.maximal);
    let mut narrow_maps = Vec::new();
    if let Some(t) = socle {
        for k in 0..=t / 2 {
            if k < t - k {
                narrow_maps.push(sampled_quotient_step(
                    &pres,
                    k,
                    t - k,
                    trials,
                    seed,
                    &mut rng,
                )?);
            }
        }
    }
    let slp_narrow = if socle.is_some() {
        Some(narrow_maps.iter().all(|s| s.maximal))
    } else {
        None
    };
    Ok(QuotientLefschetzAnalysis {
        quotient: "jacobian".to_string(),
        cap,
        dims: profile.dims.clone(),
        artinian,
        socle_degree: socle,
        steps,
        wlp,
        narrow_maps,
        slp_narrow,
        trials,
        seed,
    })
}

fn betti_json(
    table: &BettiTable,
    hilbert: &[usize],
    quotient: &str,
    socle: Option<usize>,
) -> BettiAnalysis {
    let entries = table
        .entries
        .iter()
        .map(|(&(i, j), &beta)| BettiEntryJson { i, j, beta })
        .collect();
    BettiAnalysis {
        quotient: quotient.to_string(),
        cap: table.cap,
        complete: table.complete,
        truncated: !table.complete,
        entries,
        consistent: betti_consistency(hilbert, table),
        self_dual: socle.map(|s| table.is_self_dual(s)),
        grid: table.grid(),
    }
}

fn validate_cap(cap: usize) -> Result<()> {
    if cap > crate::poly::MAX_TOTAL_DEGREE as usize {
        return Err(Error::InvalidArgument(format!(
            "cap {cap} exceeds the supported total-degree cap {}",
            crate::poly::MAX_TOTAL_DEGREE
        )));
    }
    Ok(())
}

fn betti_apolar_analysis(f: &Poly, cap: Option<usize>) -> Result<BettiAnalysis> {
    let alg = ApolarAlgebra::new(f)?;
    let cap = cap.unwrap_or(alg.socle_degree() + f.nvars());
    validate_cap(cap)?;
    let table = koszul_betti(&alg, cap)?;
    let hilbert: Vec<usize> = (0..=cap).map(|m| GradedModule::dim(&alg, m)).collect();
    Ok(betti_json(
        &table,
        &hilbert,
        "apolar",
        Some(alg.socle_degree()),
    ))
}

fn betti_jacobian_analysis(f: &Poly, cap: Option<usize>) -> Result<BettiAnalysis> {
    let d = f.homogeneous_degree()? as usize;
    let pres = jac_gens(f, 1)?;
    let default_cap = f.nvars() * (d - 2) + f.nvars();
    let cap = cap.unwrap_or(default_cap);
    validate_cap(cap)?;
    let quot = IdealQuotient::new(&pres, cap);
    let table = koszul_betti(&quot, cap)?;
    let hilbert: Vec<usize> = (0..=cap).map(|m| GradedModule::dim(&quot, m)).collect();
    let socle = quot.known_socle(cap);
    Ok(betti_json(&table, &hilbert, "jacobian", socle))
}

fn membership_analysis(f: &Poly) -> Result<MembershipAnalysis> {
    let m = milnor::hessian_membership(f)?;
    Ok(MembershipAnalysis {
        hessian_in_jacobian: m.in_ideal,
        zero_hessian: m.zero_hessian,
        hessian_degree: m.hessian_degree,
        certificate_verified: m.certificate.as_ref().map(|_| true),
        certificate_support: m
            .certificate
            .as_ref()
            .map(|c| c.iter().filter(|v| !num::traits::Zero::is_zero(*v)).count()),
    })
}

fn polar_analyses(
    alg: &ApolarAlgebra,
    orders: &[usize],
    trials: u32,
    seed: u64,
) -> Result<Vec<PolarAnalysis>> {
    let mut out = Vec::new();
    for &k in orders {
        let p = hessian::polar_degeneracy(alg, k, trials, seed)?;
        out.push(PolarAnalysis {
            order: p.order,
            rank: RankJson::from(&p.rank),
            image_dim: p.image_dim,
            ambient_dim: p.ambient_dim,
            degenerate: p.degenerate,
        });
    }
    Ok(out)
}

pub fn cmd_hilbert(spec: &InputSpec, seed: u64) -> Result<Report> {
    let (echo, f) = resolve_input(spec)?;
    let mut report = Report::new(echo, seed);
    report.analyses.hilbert = Some(hilbert_analysis(&f)?);
    Ok(report)
}

pub fn cmd_milnor(spec: &InputSpec, order: usize, cap: Option<usize>, seed: u64) -> Result<Report> {
    let (echo, f) = resolve_input(spec)?;
    let mut report = Report::new(echo, seed);
    report.analyses.milnor = Some(vec![milnor_analysis(&f, order, cap)?]);
    Ok(report)
}

pub fn cmd_hessian(spec: &InputSpec, k: usize, l: usize, trials: u32, seed: u64) -> Result<Report> {
    let (echo, f) = resolve_input(spec)?;
    let mut report = Report::new(echo, seed);
    report.analyses.hessian = Some(hessian_analysis(&f, k, l, trials, seed)?);
    Ok(report)
}

pub fn cmd_lefschetz(
    spec: &InputSpec,
    quotient: QuotientKind,
    trials: u32,
    seed: u64,
) -> Result<Report> {
    let (echo, f) = resolve_input(spec)?;
    let mut report = Report::new(echo, seed);
    match quotient {
        QuotientKind::Apolar => {
            report.analyses.lefschetz = Some(lefschetz_analysis(&f, trials, seed)?);
        }
        QuotientKind::Jacobian => {
            report.analyses.quotient_lefschetz =
                Some(quotient_lefschetz_analysis(&f, trials, seed)?);
        }
    }
    Ok(report)
}

pub fn cmd_betti(
    spec: &InputSpec,
    cap: Option<usize>,
    quotient: QuotientKind,
    seed: u64,
) -> Result<Report> {
    let (echo, f) = resolve_input(spec)?;
    let mut report = Report::new(echo, seed);
    report.analyses.betti = Some(match quotient {
        QuotientKind::Apolar => betti_apolar_analysis(&f, cap)?,
        QuotientKind::Jacobian => betti_jacobian_analysis(&f, cap)?,
    });
    Ok(report)
}

/// Ambient sizes up to which the full Milnor/membership analyses run inside
/// `report`; larger ambients are skipped with a note (they remain available
/// through the dedicated commands with explicit caps).
const REPORT_MILNOR_MAX_NVARS: usize = 3;

/// Run everything at once: the table-reproduction mode.
pub fn cmd_report(spec: &InputSpec, trials: u32, seed: u64) -> Result<Report> {
    let (echo, f) = resolve_input(spec)?;
    let d = echo.degree;
    let nvars = echo.nvars;
    let mut report = Report::new(echo, seed);
    let hilbert = hilbert_analysis(&f)?;
    let cone = hilbert.cone;
    report.analyses.hilbert = Some(hilbert);

    if nvars <= REPORT_MILNOR_MAX_NVARS {
        let mut orders = vec![];
        if d >= 2 {
            orders.push(1);
        }
        if d >= 3 {
            orders.push(2);
        }
        let mut list = Vec::new();
        for k in orders {
            list.push(milnor_analysis(&f, k, None)?);
        }
        if !list.is_empty() {
            report.analyses.milnor = Some(list);
        }
        report.analyses.membership = Some(membership_analysis(&f)?);
    } else {
        report.analyses.skipped.push(SkippedJson {
            analysis: "milnor".to_string(),
            reason: format!(
                "skipped by default for nvars = {nvars} > {REPORT_MILNOR_MAX_NVARS}; run the `milnor` command with an explicit --cap"
            ),
        });
        report.analyses.skipped.push(SkippedJson {
            analysis: "membership".to_string(),
            reason: format!(
                "skipped by default for nvars = {nvars} > {REPORT_MILNOR_MAX_NVARS}; the degree-(d-2)(n+1) span is large"
            ),
        });
    }

    if cone {
        for name in ["lefschetz", "betti", "polar"] {
            report.analyses.skipped.push(SkippedJson {
                analysis: name.to_string(),
                reason: "the input is a cone; analyses of the apolar algebra are skipped"
                    .to_string(),
            });
        }
        return Ok(report);
    }

    report.analyses.lefschetz = Some(lefschetz_analysis(&f, trials, seed)?);
    report.analyses.betti = Some(betti_apolar_analysis(&f, None)?);
    let alg = ApolarAlgebra::new(&f)?;
    let mut orders = vec![];
    if d >= 2 {
        orders.push(1);
    }
    if d >= 3 {
        orders.push(2);
    }
    if !orders.is_empty() {
        report.analyses.polar = Some(polar_analyses(&alg, &orders, trials, seed)?);
    }
    Ok(report)
}

/// Compare a full report against the recorded expectations for `label`.
/// Returns `None` when no goldens exist, otherwise the list of mismatches
/// (empty = all good).
pub fn verify_against_goldens(report: &Report, label: &str) -> Option<Vec<String>> {
    let g = fixtures::goldens(label)?;
    let mut bad = Vec::new();
    if let Some(expected) = g.hilbert {
        match report
            .analyses
            .hilbert
            .as_ref()
            .and_then(|h| h.hilbert.as_ref())
        {
            Some(got) if got == expected => {}
            got => bad.push(format!("hilbert: expected {expected:?}, got {got:?}")),
        }
    }
    if let Some(expected) = g.dim_a2 {
        let got = report
            .analyses
            .hilbert
            .as_ref()
            .and_then(|h| h.hilbert.as_ref())
            .and_then(|v| v.get(2).copied());
        if got != Some(expected) {
            bad.push(format!("dim A_2: expected {expected}, got {got:?}"));
        }
    }
    for mg in g.milnor {
        let found = report
            .analyses
            .milnor
            .as_ref()
            .and_then(|list| list.iter().find(|m| m.order == mg.order));
        match found {
            None => bad.push(format!("milnor order {}: missing from report", mg.order)),
            Some(m) => {
                let poly_ok = m.hilbert_series.polynomial == mg.polynomial;
                let tail_ok = m.hilbert_series.tail_value == mg.tail;
                if !poly_ok || !tail_ok {
                    bad.push(format!(
                        "milnor order {}: expected {:?} + tail {:?}, got {:?} + tail {:?}",
                        mg.order,
                        mg.polynomial,
                        mg.tail,
                        m.hilbert_series.polynomial,
                        m.hilbert_series.tail_value
                    ));
                }
            }
        }
    }
    if let Some(expected) = g.betti {
        let got: Vec<(usize, usize, usize)> = report
            .analyses
            .betti
            .as_ref()
            .map(|b| b.entries.iter().map(|e| (e.i, e.j, e.beta)).collect())
            .unwrap_or_default();
        let mut want: Vec<(usize, usize, usize)> = expected.to_vec();
        want.sort();
        let mut have = got.clone();
        have.sort();
        if want != have {
            bad.push(format!("betti: expected {want:?}, got {have:?}"));
        }
    }
    if let Some(expected) = g.hessian_in_jacobian {
        let got = report
            .analyses
            .membership
            .as_ref()
            .map(|m| m.hessian_in_jacobian);
        if got != Some(expected) {
            bad.push(format!(
                "hessian membership: expected {expected}, got {got:?}"
            ));
        }
    }
    let lef = report.analyses.lefschetz.as_ref();
    if let Some(expected) = g.slp {
        let got = lef.map(|l| l.slp);
        if got != Some(expected) {
            bad.push(format!("slp: expected {expected}, got {got:?}"));
        }
    }
    for &lvl in g.slp_fail_levels {
        let ok = lef
            .and_then(|l| l.levels.iter().find(|x| x.level == lvl))
            .map(|x| x.ok);
        if ok != Some(false) {
            bad.push(format!(
                "slp level {lvl}: expected failure, got ok = {ok:?}"
            ));
        }
    }
    if let Some(expected) = g.classical_hessian_zero {
        let got = lef
            .and_then(|l| l.levels.iter().find(|x| x.level == 1))
            .and_then(|x| x.determinant_zero);
        if got != Some(expected) {
            bad.push(format!(
                "classical Hessian vanishing: expected {expected}, got {got:?}"
            ));
        }
    }
    for &(k, expected) in g.acting_grid_zero {
        let got = lef
            .and_then(|l| l.levels.iter().find(|x| x.level == k))
            .and_then(|x| x.acting_determinant_zero);
        if got != Some(expected) {
            bad.push(format!(
                "acting-grid determinant at order {k}: expected zero = {expected}, got {got:?}"
            ));
        }
    }
    for &(k, expected) in g.polar {
        let got = report
            .analyses
            .polar
            .as_ref()
            .and_then(|list| list.iter().find(|p| p.order == k))
            .map(|p| p.degenerate);
        if got != Some(expected) {
            bad.push(format!(
                "polar order {k}: expected degenerate = {expected}, got {got:?}"
            ));
        }
    }
    Some(bad)
}

/// Outcome of the seeded singular-membership experiment.
#[derive(Serialize, Clone, Debug)]
pub struct ExperimentSample {
    pub poly: String,
    pub hessian_in_jacobian: bool,
    pub zero_hessian: bool,
}

#[derive(Serialize, Clone, Debug)]
pub struct ExperimentReport {
    pub tool: ToolInfo,
    pub experiment: String,
    pub nvars: usize,
    pub degree: usize,
    pub samples: usize,
    pub seed: u64,
    pub results: Vec<ExperimentSample>,
    pub all_in_jacobian: bool,
}

impl ExperimentReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("experiment serialization");
        s.push('\n');
        s
    }
}

/// Sample forms forced to be singular at (1:0:...:0) (no pure power of x0
/// and no x0^(d-1) x_j terms) and test whether the Hessian determinant then
/// lands in the Jacobian ideal. Reducedness of the samples is generic, not
/// certified.
pub fn experiment_hessian_membership(
    nvars: usize,
    degree: usize,
    samples: usize,
    seed: u64,
) -> Result<ExperimentReport> {
    if nvars < 2 || degree < 2 {
        return Err(Error::InvalidArgument(
            "experiment needs nvars >= 2 and degree >= 2".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mons = crate::poly::monomials_of_degree(nvars, degree as u32);
    let mut results = Vec::new();
    while results.len() < samples {
        let mut f = Poly::zero(nvars);
        for m in &mons {
            // Skip x0^d and x0^(d-1)*x_j so the gradient vanishes at e_0.
            if m.exp(0) as usize >= degree - 1 {
                continue;
            }
            let c = rng.gen_range(-9i64..=9);
            f.add_term(m.clone(), Rational::from_integer(BigInt::from(c)));
        }
        if f.is_zero() {
            continue;
        }
        let out = milnor::hessian_membership(&f)?;
        results.push(ExperimentSample {
            poly: f.to_string(),
            hessian_in_jacobian: out.in_ideal,
            zero_hessian: out.zero_hessian,
        });
    }
    let all = results.iter().all(|r| r.hessian_in_jacobian);
    Ok(ExperimentReport {
        tool: tool_info(),
        experiment: "hessian-membership-on-singular-samples".to_string(),
        nvars,
        degree,
        samples,
        seed,
        results,
        all_in_jacobian: all,
    })
}

fn fmt_series(s: &SeriesJson) -> String {
    let mut parts: Vec<String> = Vec::new();
    for (i, v) in s.polynomial.iter().enumerate() {
        if *v == 0 {
            continue;
        }
        parts.push(match i {
            0 => format!("{v}"),
            1 => format!("{v}t"),
            _ => format!("{v}t^{i}"),
        });
    }
    let mut out = if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(" + ")
    };
    if let (Some(tv), Some(tf)) = (s.tail_value, s.tail_from) {
        let power = match tf {
            0 => String::new(),
            1 => "t".to_string(),
            _ => format!("t^{tf}"),
        };
        if out == "0" {
            out = format!("{tv}{power}/(1-t)");
        } else {
            out.push_str(&format!(" + {tv}{power}/(1-t)"));
        }
    }
    out
}

fn fmt_vec(v: &[usize]) -> String {
    let inner: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", inner.join(", "))
}

/// Human-readable rendering of a report.
pub fn render_text(report: &Report) -> String {
    let mut out = String::new();
    let input = &report.input;
    let label = input
        .example
        .clone()
        .unwrap_or_else(|| "(inline)".to_string());
    out.push_str(&format!(
        "{} {} — input {} : {} (nvars={}, degree={}), seed {}\n",
        report.tool.name,
        report.tool.version,
        label,
        input.poly,
        input.nvars,
        input.degree,
        report.seed
    ));
    let a = &report.analyses;
    if let Some(h) = &a.hilbert {
        out.push_str("\n## apolar algebra\n");
        if h.cone {
            out.push_str(
                "the form is a cone: a linear operator annihilates it; apolar analyses skipped\n",
            );
        } else {
            out.push_str(&format!(
                "Hilb(A) = {}, socle degree {}\n",
                fmt_vec(h.hilbert.as_ref().unwrap()),
                h.socle_degree.unwrap()
            ));
            if let Some(bases) = &h.basis_per_degree {
                for (k, b) in bases.iter().enumerate() {
                    out.push_str(&format!("  A_{k} basis: {}\n", b.join(", ")));
                }
            }
        }
    }
    if let Some(list) = &a.milnor {
        for m in list {
            out.push_str(&format!("\n## milnor algebra, order {}\n", m.order));
            out.push_str(&format!(
                "dims (m = 0..{}): {}\n",
                m.m_cap,
                fmt_vec(&m.dims)
            ));
            match &m.classification {
                ClassificationJson::Artinian { vanishing_degree } => out.push_str(&format!(
                    "classification: Artinian, vanishing from degree {vanishing_degree} (certified at bound {})\n",
                    m.certification_bound
                )),
                ClassificationJson::Stable { tail, from, .. } => out.push_str(&format!(
                    "classification: non-Artinian (certified at bound {}), stable tail {tail} from degree {from} (window heuristic)\n",
                    m.certification_bound
                )),
                ClassificationJson::Undetermined { advice } => {
                    out.push_str(&format!("classification: undetermined — {advice}\n"))
                }
            }
            out.push_str(&format!(
                "Hilbert series: {}\n",
                fmt_series(&m.hilbert_series)
            ));
            if let Some(t) = m.tjurina_sum {
                out.push_str(&format!("total higher-order Tjurina number: {t}\n"));
            }
        }
    }
    if let Some(h) = &a.hessian {
        out.push_str(&format!("\n## mixed Hessian (k={}, l={})\n", h.k, h.l));
        out.push_str(&format!(
            "size {}x{}, entry degree {:?}, generic rank {} ({})\n",
            h.rows, h.cols, h.entry_degree, h.generic_rank.rank, h.generic_rank.method
        ));
        if let Some(e) = &h.entries {
            out.push_str(&format!(
                "rows: {}\ncols: {}\n",
                h.row_labels.join(", "),
                h.col_labels.join(", ")
            ));
            for row in e {
                out.push_str(&format!("  [ {} ]\n", row.join(", ")));
            }
        }
        for sq in &h.square_orders {
            out.push_str(&format!(
                "order-{} Hessian: dim {}, pivot-basis determinant {}; acting grid {}x{}, determinant {}\n",
                sq.order,
                sq.dim,
                match sq.determinant_zero {
                    Some(true) => "0",
                    Some(false) => "nonzero",
                    None => "(not computed)",
                },
                sq.acting_grid.rows,
                sq.acting_grid.cols,
                match sq.acting_grid.determinant_zero {
                    Some(true) => "0",
                    Some(false) => "nonzero",
                    None => "(not computed)",
                }
            ));
            if let Some(e) = &sq.acting_grid.entries {
                for row in e {
                    out.push_str(&format!("  [ {} ]\n", row.join(", ")));
                }
            }
        }
    }
    if let Some(l) = &a.lefschetz {
        out.push_str("\n## lefschetz (apolar algebra)\n");
        out.push_str(&format!("Hilb(A) = {}\n", fmt_vec(&l.hilbert)));
        for lv in &l.levels {
            out.push_str(&format!(
                "level {}: dim {}, generic rank {} ({}), determinant {}{} -> {}\n",
                lv.level,
                lv.dim,
                lv.rank.rank,
                lv.rank.method,
                match lv.determinant_zero {
                    Some(true) => "0",
                    Some(false) => "nonzero",
                    None => "(skipped)",
                },
                if lv.acting_size != lv.dim {
                    format!(
                        " [acting grid {}x{} det {}]",
                        lv.acting_size,
                        lv.acting_size,
                        match lv.acting_determinant_zero {
                            Some(true) => "0",
                            Some(false) => "nonzero",
                            None => "(skipped)",
                        }
                    )
                } else {
                    String::new()
                },
                if lv.ok { "ok" } else { "FAILS" }
            ));
        }
        out.push_str(&format!("strong Lefschetz property: {}\n", l.slp));
        for s in &l.steps {
            out.push_str(&format!(
                "step {} -> {}: rank {} of max {}, {}\n",
                s.from,
                s.to,
                s.rank.rank,
                s.dim_source.min(s.dim_target),
                if s.maximal { "maximal" } else { "NOT maximal" }
            ));
        }
        out.push_str(&format!("weak Lefschetz property: {}\n", l.wlp));
    }
    if let Some(q) = &a.quotient_lefschetz {
        out.push_str("\n## lefschetz (jacobian quotient)\n");
        out.push_str(&format!("dims (m = 0..{}): {}\n", q.cap, fmt_vec(&q.dims)));
        if let Some(s) = q.socle_degree {
            out.push_str(&format!("Artinian with socle degree {s}\n"));
        }
        for s in &q.steps {
            out.push_str(&format!(
                "step {} -> {}: rank {}, {}\n",
                s.from,
                s.to,
                s.rank.rank,
                if s.maximal {
                    "maximal"
                } else {
                    "NOT maximal (probabilistic)"
                }
            ));
        }
        out.push_str(&format!("weak Lefschetz property: {}\n", q.wlp));
        for s in &q.narrow_maps {
            out.push_str(&format!(
                "narrow map {} -> {}: rank {}, {}\n",
                s.from,
                s.to,
                s.rank.rank,
                if s.maximal {
                    "maximal"
                } else {
                    "NOT maximal (probabilistic)"
                }
            ));
        }
        if let Some(v) = q.slp_narrow {
            out.push_str(&format!("strong Lefschetz property (narrow maps): {v}\n"));
        }
    }
    if let Some(b) = &a.betti {
        out.push_str(&format!("\n## betti table ({} quotient)\n", b.quotient));
        if b.truncated {
            out.push_str(&format!(
                "TRUNCATED at internal degree {}; entries beyond the cap are not shown\n",
                b.cap
            ));
        }
        out.push_str(&b.grid);
        out.push_str(&format!(
            "alternating-sum identity: {}{}\n",
            if b.consistent { "ok" } else { "VIOLATED" },
            match b.self_dual {
                Some(true) => "; self-dual",
                Some(false) => "; NOT self-dual",
                None => "",
            }
        ));
    }
    if let Some(m) = &a.membership {
        out.push_str("\n## hessian membership\n");
        if m.zero_hessian {
            out.push_str("the Hessian determinant vanishes identically (member of every ideal)\n");
        } else {
            out.push_str(&format!(
                "hess in Jacobian ideal (degree {}): {}{}\n",
                m.hessian_degree.unwrap(),
                m.hessian_in_jacobian,
                if m.certificate_verified == Some(true) {
                    " (certificate verified exactly)"
                } else {
                    ""
                }
            ));
        }
    }
    if let Some(list) = &a.polar {
        out.push_str("\n## polar maps\n");
        for p in list {
            out.push_str(&format!(
                "order {}: image dimension {} of ambient {}, {} (rank {} by {})\n",
                p.order,
                p.image_dim,
                p.ambient_dim,
                if p.degenerate {
                    "DEGENERATE"
                } else {
                    "not degenerate"
                },
                p.rank.rank,
                p.rank.method
            ));
        }
    }
    if !a.skipped.is_empty() {
        out.push_str("\n## skipped\n");
        for s in &a.skipped {
            out.push_str(&format!("{}: {}\n", s.analysis, s.reason));
        }
    }
    out
}

//! Parameter sweeps, threshold bisection, Haar surveys and closed-form tables.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bloch::decompose;
use crate::cloning::{broadcast, measure_shrinking, nonlocal_output_fast, BroadcastOutputs};
use crate::criteria::{
    absolute_separability, bloch_separability, nonbroadcastable_predicate, nonbroadcastable_sides, ph_criterion,
    pptes_detect, realignment_criterion, Status, Tolerances, Verdict,
};
use crate::error::{Error, Result};
use crate::families::{haar_random_state_indexed, mems, tpcs, TpcsParams};
use crate::linalg::{ComplexMatrix, SubsystemShape};
use crate::measures::{geometric_discord, l1_coherence};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Mems,
    Tpcs,
}

impl Family {
    /// Names of the free parameters, in grid-point order.
    pub fn param_names(&self) -> &'static [&'static str] {
        match self {
            Family::Mems => &["r"],
            Family::Tpcs => &["alpha", "gamma"],
        }
    }

    pub fn state(&self, params: &[f64]) -> Result<ComplexMatrix> {
        match (self, params) {
            (Family::Mems, [r]) => mems(*r),
            (Family::Tpcs, [a, g]) => tpcs(*a, *g),
            _ => Err(Error::Domain(format!(
                "{self} takes {} parameter(s), got {}",
                self.param_names().len(),
                params.len()
            ))),
        }
    }

    fn check_point(&self, params: &[f64]) -> Result<()> {
        match (self, params) {
            (Family::Mems, [r]) => crate::families::MemsParams::new(*r).map(|_| ()),
            (Family::Tpcs, [a, g]) => TpcsParams::new(*a, *g).map(|_| ()),
            _ => Err(Error::Domain(format!("wrong arity for {self}"))),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Mems => "mems",
            Family::Tpcs => "tpcs",
        })
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "mems" => Ok(Family::Mems),
            "tpcs" => Ok(Family::Tpcs),
            other => Err(Error::Domain(format!(
                "unknown family '{other}' (expected mems or tpcs)"
            ))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum BroadcastClass {
    None,
    NonOptimal,
    SubOptimal,
    Optimal,
}

impl BroadcastClass {
    pub fn classify(nonlocal: &Verdict, alice: &Verdict, bob: &Verdict) -> Self {
        if !nonlocal.is_entangled() {
            BroadcastClass::None
        } else if !alice.is_separable() {
            BroadcastClass::NonOptimal
        } else if !bob.is_separable() {
            BroadcastClass::SubOptimal
        } else {
            BroadcastClass::Optimal
        }
    }

    /// Whether `self` is at least `other` in the chain None < NonOptimal < SubOptimal < Optimal.
    pub fn at_least(&self, other: BroadcastClass) -> bool {
        *self >= other
    }
}

impl fmt::Display for BroadcastClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BroadcastClass::None => "none",
            BroadcastClass::NonOptimal => "non-optimal",
            BroadcastClass::SubOptimal => "sub-optimal",
            BroadcastClass::Optimal => "optimal",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Param {
    pub name: String,
    pub value: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScanRecord {
    pub family: Family,
    pub params: Vec<Param>,
    pub verdict_nonlocal: Verdict,
    pub verdict_alice_local: Verdict,
    pub verdict_bob_local: Verdict,
    pub pptes_bob: bool,
    pub abs_sep_alice: bool,
    pub discord_nonlocal: f64,
    pub coherence_nonlocal: f64,
    pub discord_alice_local: f64,
    pub coherence_alice_local: f64,
    pub broadcast_class: BroadcastClass,
}

impl ScanRecord {
    pub fn param(&self, name: &str) -> Option<f64> {
        self.params.iter().find(|p| p.name == name).map(|p| p.value)
    }
}

/// PH on Bob's `d ⊗ d` pair, falling back to realignment when PH is inconclusive.
pub fn bob_local_verdict(rho_24: &ComplexMatrix, shape: &SubsystemShape, tol: &Tolerances) -> Result<Verdict> {
    let ph = ph_criterion(rho_24, shape, tol)?;
    if ph.status != Status::Indeterminate {
        return Ok(ph);
    }
    let re = realignment_criterion(rho_24, shape, tol)?;
    Ok(if re.is_entangled() { re } else { ph })
}

/// Every verdict and measure for one input state.
pub fn evaluate_outputs(out: &BroadcastOutputs, tol: &Tolerances) -> Result<Evaluation> {
    let (nl, al, bo) = (out.nonlocal_shape(), out.alice_shape(), out.bob_shape());
    let verdict_nonlocal = ph_criterion(&out.rho_14, &nl, tol)?;
    let verdict_alice_local = ph_criterion(&out.rho_13, &al, tol)?;
    let verdict_bob_local = bob_local_verdict(&out.rho_24, &bo, tol)?;
    Ok(Evaluation {
        broadcast_class: BroadcastClass::classify(&verdict_nonlocal, &verdict_alice_local, &verdict_bob_local),
        verdict_nonlocal,
        verdict_alice_local,
        verdict_bob_local,
        pptes_bob: pptes_detect(&out.rho_24, &bo, tol)?,
        abs_sep_alice: absolute_separability(&out.rho_13, tol)?,
        discord_nonlocal: geometric_discord(&out.rho_14, &nl)?.value,
        coherence_nonlocal: l1_coherence(&out.rho_14).value,
        discord_alice_local: geometric_discord(&out.rho_13, &al)?.value,
        coherence_alice_local: l1_coherence(&out.rho_13).value,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Evaluation {
    pub verdict_nonlocal: Verdict,
    pub verdict_alice_local: Verdict,
    pub verdict_bob_local: Verdict,
    pub pptes_bob: bool,
    pub abs_sep_alice: bool,
    pub discord_nonlocal: f64,
    pub coherence_nonlocal: f64,
    pub discord_alice_local: f64,
    pub coherence_alice_local: f64,
    pub broadcast_class: BroadcastClass,
}

pub fn evaluate_point(family: Family, params: &[f64], tol: &Tolerances) -> Result<ScanRecord> {
    let rho = family.state(params)?;
    let out = broadcast(&rho, &SubsystemShape::bipartite(2, 3)?)?;
    let e = evaluate_outputs(&out, tol)?;
    Ok(ScanRecord {
        family,
        params: family
            .param_names()
            .iter()
            .zip(params)
            .map(|(n, v)| Param {
                name: (*n).to_string(),
                value: *v,
            })
            .collect(),
        verdict_nonlocal: e.verdict_nonlocal,
        verdict_alice_local: e.verdict_alice_local,
        verdict_bob_local: e.verdict_bob_local,
        pptes_bob: e.pptes_bob,
        abs_sep_alice: e.abs_sep_alice,
        discord_nonlocal: e.discord_nonlocal,
        coherence_nonlocal: e.coherence_nonlocal,
        discord_alice_local: e.discord_alice_local,
        coherence_alice_local: e.coherence_alice_local,
        broadcast_class: e.broadcast_class,
    })
}

/// Parameter grid for a sweep.
///
/// Text form: `default`, `step=<h>`, `n=<N>` or `points=<p>;<p>;...` where each
/// point is a comma-separated parameter list. For TPCS, `step` and `n` span
/// `α ∈ [0, 1/2]`, `γ ∈ [0, 1]` and keep only points with `β ≥ 0`.
#[derive(Clone, Debug, PartialEq)]
pub enum ParamGrid {
    Default,
    Step(f64),
    Count(usize),
    Points(Vec<Vec<f64>>),
}

/// Default resolution: MEMS step and TPCS per-axis count.
pub const MEMS_DEFAULT_STEP: f64 = 1e-3;
pub const TPCS_DEFAULT_COUNT: usize = 500;

fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    if n == 1 {
        return vec![lo];
    }
    (0..n).map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64).collect()
}

fn stepped(lo: f64, hi: f64, h: f64) -> Vec<f64> {
    let n = ((hi - lo) / h + 1e-9).floor() as usize;
    (0..=n).map(|i| (lo + h * i as f64).min(hi)).collect()
}

fn triangle(alphas: &[f64], gammas: &[f64]) -> Vec<Vec<f64>> {
    let mut pts = Vec::new();
    for &a in alphas {
        for &g in gammas {
            if 1.0 - 2.0 * a - g >= -1e-12 {
                pts.push(vec![a, g]);
            }
        }
    }
    pts
}

impl ParamGrid {
    pub fn points(&self, family: Family) -> Result<Vec<Vec<f64>>> {
        let pts = match (self, family) {
            (ParamGrid::Points(p), _) => p.clone(),
            (ParamGrid::Default, Family::Mems) => stepped(0.0, 1.0, MEMS_DEFAULT_STEP)
                .into_iter()
                .map(|r| vec![r])
                .collect(),
            (ParamGrid::Default, Family::Tpcs) => triangle(
                &linspace(0.0, 0.5, TPCS_DEFAULT_COUNT),
                &linspace(0.0, 1.0, TPCS_DEFAULT_COUNT),
            ),
            (ParamGrid::Step(h), fam) => {
                if h.is_nan() || *h <= 0.0 {
                    return Err(Error::Domain(format!("grid step must be positive, got {h}")));
                }
                match fam {
                    Family::Mems => stepped(0.0, 1.0, *h).into_iter().map(|r| vec![r]).collect(),
                    Family::Tpcs => triangle(&stepped(0.0, 0.5, *h), &stepped(0.0, 1.0, *h)),
                }
            }
            (ParamGrid::Count(n), fam) => {
                if *n == 0 {
                    return Err(Error::Domain("grid count must be at least 1".into()));
                }
                match fam {
                    Family::Mems => linspace(0.0, 1.0, *n).into_iter().map(|r| vec![r]).collect(),
                    Family::Tpcs => triangle(&linspace(0.0, 0.5, *n), &linspace(0.0, 1.0, *n)),
                }
            }
        };
        let bad: Vec<String> = pts
            .iter()
            .filter(|p| family.check_point(p).is_err())
            .map(|p| format!("{p:?}"))
            .collect();
        if !bad.is_empty() {
            return Err(Error::Domain(format!(
                "{} grid point(s) outside the {family} domain: {}",
                bad.len(),
                bad.join(", ")
            )));
        }
        Ok(pts)
    }
}

impl FromStr for ParamGrid {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "default" {
            return Ok(ParamGrid::Default);
        }
        let bad = |what: &str| Error::Domain(format!("cannot parse grid '{s}': {what}"));
        let (key, val) = s.split_once('=').ok_or_else(|| bad("expected key=value"))?;
        match key.trim() {
            "step" => val.trim().parse().map(ParamGrid::Step).map_err(|_| bad("bad step")),
            "n" => val.trim().parse().map(ParamGrid::Count).map_err(|_| bad("bad count")),
            "points" => {
                let mut pts = Vec::new();
                for chunk in val.split(';').filter(|c| !c.trim().is_empty()) {
                    let p: std::result::Result<Vec<f64>, _> =
                        chunk.split(',').map(|v| v.trim().parse::<f64>()).collect();
                    pts.push(p.map_err(|_| bad("bad point"))?);
                }
                Ok(ParamGrid::Points(pts))
            }
            _ => Err(bad("unknown key")),
        }
    }
}

/// One record per grid point, in grid order.
pub fn sweep(family: Family, grid: &ParamGrid, tol: &Tolerances) -> Result<Vec<ScanRecord>> {
    let pts = grid.points(family)?;
    pts.par_iter().map(|p| evaluate_point(family, p, tol)).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Predicate {
    /// `ρ̃₁₄` has a negative partial transpose.
    NonlocalEntangled,
    /// `ρ̃₁₃` passes PH.
    AliceLocalSeparable,
    /// `ρ̃₁₃` is absolutely separable.
    AliceAbsSeparable,
    /// `ρ̃₂₄` has a negative partial transpose.
    BobLocalNpt,
    /// `ρ̃₂₄` is PPT and realignment-detected.
    BobPptes,
}

impl Predicate {
    pub const ALL: [Predicate; 5] = [
        Predicate::NonlocalEntangled,
        Predicate::AliceLocalSeparable,
        Predicate::AliceAbsSeparable,
        Predicate::BobLocalNpt,
        Predicate::BobPptes,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Predicate::NonlocalEntangled => "nonlocal-entangled",
            Predicate::AliceLocalSeparable => "alice-local-separable",
            Predicate::AliceAbsSeparable => "alice-abs-separable",
            Predicate::BobLocalNpt => "bob-local-npt",
            Predicate::BobPptes => "bob-pptes",
        }
    }

    pub fn evaluate(&self, out: &BroadcastOutputs, tol: &Tolerances) -> Result<bool> {
        Ok(match self {
            Predicate::NonlocalEntangled => ph_criterion(&out.rho_14, &out.nonlocal_shape(), tol)?.is_entangled(),
            Predicate::AliceLocalSeparable => ph_criterion(&out.rho_13, &out.alice_shape(), tol)?.is_separable(),
            Predicate::AliceAbsSeparable => absolute_separability(&out.rho_13, tol)?,
            Predicate::BobLocalNpt => ph_criterion(&out.rho_24, &out.bob_shape(), tol)?.is_entangled(),
            Predicate::BobPptes => pptes_detect(&out.rho_24, &out.bob_shape(), tol)?,
        })
    }
}

impl fmt::Display for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Predicate {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Predicate::ALL.into_iter().find(|p| p.name() == s).ok_or_else(|| {
            let names: Vec<_> = Predicate::ALL.iter().map(|p| p.name()).collect();
            Error::Domain(format!(
                "unknown predicate '{s}' (expected one of {})",
                names.join(", ")
            ))
        })
    }
}

/// A one-parameter slice through a family: MEMS along `r`, TPCS along `α` at fixed `γ`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Slice {
    pub family: Family,
    pub gamma: f64,
}

impl Slice {
    pub fn mems() -> Self {
        Self {
            family: Family::Mems,
            gamma: 0.0,
        }
    }

    pub fn tpcs(gamma: f64) -> Self {
        Self {
            family: Family::Tpcs,
            gamma,
        }
    }

    pub fn params(&self, t: f64) -> Vec<f64> {
        match self.family {
            Family::Mems => vec![t],
            Family::Tpcs => vec![t, self.gamma],
        }
    }

    pub fn test(&self, predicate: Predicate, t: f64, tol: &Tolerances) -> Result<bool> {
        let rho = self.family.state(&self.params(t))?;
        let out = broadcast(&rho, &SubsystemShape::bipartite(2, 3)?)?;
        predicate.evaluate(&out, tol)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ThresholdResult {
    pub family: Family,
    pub predicate: Predicate,
    pub bracket: (f64, f64),
    pub root: f64,
    pub tolerance: f64,
}

/// Bisection for the point where `predicate` changes truth value on `[lo, hi]`.
pub fn locate_threshold(
    slice: Slice,
    predicate: Predicate,
    lo: f64,
    hi: f64,
    tolerance: f64,
    tol: &Tolerances,
) -> Result<ThresholdResult> {
    if lo.partial_cmp(&hi) != Some(std::cmp::Ordering::Less) || tolerance.is_nan() || tolerance <= 0.0 {
        return Err(Error::Domain(format!(
            "need lo < hi and tol > 0, got [{lo}, {hi}] with tol {tolerance}"
        )));
    }
    let at_lo = slice.test(predicate, lo, tol)?;
    let at_hi = slice.test(predicate, hi, tol)?;
    if at_lo == at_hi {
        return Err(Error::Bracket { lo, hi, value: at_lo });
    }
    let (mut a, mut b) = (lo, hi);
    while b - a > tolerance {
        let mid = 0.5 * (a + b);
        if slice.test(predicate, mid, tol)? == at_lo {
            a = mid;
        } else {
            b = mid;
        }
    }
    Ok(ThresholdResult {
        family: slice.family,
        predicate,
        bracket: (a, b),
        root: 0.5 * (a + b),
        tolerance,
    })
}

/// Samples `samples` interior points plus the endpoints and fails if the
/// predicate changes value more than once.
pub fn validate_monotone(
    slice: Slice,
    predicate: Predicate,
    lo: f64,
    hi: f64,
    samples: usize,
    tol: &Tolerances,
) -> Result<()> {
    let ts = linspace(lo, hi, samples + 2);
    let values: Vec<bool> = ts
        .par_iter()
        .map(|&t| slice.test(predicate, t, tol))
        .collect::<Result<_>>()?;
    let flips: Vec<f64> = values
        .windows(2)
        .zip(ts.windows(2))
        .filter(|(v, _)| v[0] != v[1])
        .map(|(_, t)| 0.5 * (t[0] + t[1]))
        .collect();
    if flips.len() > 1 {
        return Err(Error::NotMonotone {
            lo,
            hi,
            detail: format!("{predicate} changes value near {flips:?}"),
        });
    }
    Ok(())
}

/// Default number of interior points checked before bisection.
pub const MONOTONE_SAMPLES: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SurveyClass {
    /// The input's Bloch data satisfy the non-broadcastability inequality.
    Blue,
    /// The inequality fails, so the test says nothing.
    Red,
}

impl fmt::Display for SurveyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SurveyClass::Blue => "blue",
            SurveyClass::Red => "red",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SurveyRecord {
    pub index: u64,
    pub x_norm: f64,
    pub y_norm: f64,
    pub t_column_norm_sum: f64,
    pub x: [f64; 3],
    pub inequality_lhs: f64,
    pub inequality_rhs: f64,
    /// Bloch-norm witness (`lhs − 1`) of the scaled nonlocal output.
    pub output_bloch_witness: f64,
    pub output_bloch_separable: bool,
    pub class: SurveyClass,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SurveyReport {
    pub samples: u64,
    pub seed: u64,
    pub dim: usize,
    /// Environment dimension of the induced measure.
    pub env: usize,
    pub blue: u64,
    pub red: u64,
    pub records: Vec<SurveyRecord>,
}

/// Classifies `n` Haar-random `2 ⊗ d` states drawn from the induced measure
/// with environment dimension `2d`.
pub fn survey(n: u64, seed: u64, d: usize) -> Result<SurveyReport> {
    survey_with_env(n, seed, d, 2 * d)
}

/// As [`survey`] with an explicit environment dimension. Sample `i` draws from
/// RNG stream `i` of `seed`, so the result does not depend on scheduling.
pub fn survey_with_env(n: u64, seed: u64, d: usize, env: usize) -> Result<SurveyReport> {
    if n == 0 {
        return Err(Error::Domain("survey needs at least one sample".into()));
    }
    let shape = SubsystemShape::bipartite(2, d)?;
    let records: Vec<SurveyRecord> = (0..n)
        .into_par_iter()
        .map(|i| {
            let rho = haar_random_state_indexed(2 * d, env, seed, i)?;
            let b = decompose(&rho, &shape)?;
            let (lhs, rhs) = nonbroadcastable_sides(&b);
            let out = bloch_separability(&nonlocal_output_fast(&b), 2, d)?;
            Ok(SurveyRecord {
                index: i,
                x_norm: b.x_norm(),
                y_norm: b.y_norm(),
                t_column_norm_sum: b.t_column_norm_sum(),
                x: b.x,
                inequality_lhs: lhs,
                inequality_rhs: rhs,
                output_bloch_witness: out.witness,
                output_bloch_separable: out.is_separable(),
                class: if nonbroadcastable_predicate(&b) {
                    SurveyClass::Blue
                } else {
                    SurveyClass::Red
                },
            })
        })
        .collect::<Result<_>>()?;
    let blue = records.iter().filter(|r| r.class == SurveyClass::Blue).count() as u64;
    Ok(SurveyReport {
        samples: n,
        seed,
        dim: d,
        env,
        blue,
        red: n - blue,
        records,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Table {
    DiscordMems,
    CoherenceMems,
    DiscordTpcs,
    CoherenceTpcs,
    ScalingFactors,
}

impl Table {
    pub const ALL: [Table; 5] = [
        Table::DiscordMems,
        Table::CoherenceMems,
        Table::DiscordTpcs,
        Table::CoherenceTpcs,
        Table::ScalingFactors,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Table::DiscordMems => "discord_mems",
            Table::CoherenceMems => "coherence_mems",
            Table::DiscordTpcs => "discord_tpcs",
            Table::CoherenceTpcs => "coherence_tpcs",
            Table::ScalingFactors => "scaling_factors",
        }
    }
}

impl FromStr for Table {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Table::ALL.into_iter().find(|t| t.name() == s).ok_or_else(|| {
            let names: Vec<_> = Table::ALL.iter().map(|t| t.name()).collect();
            Error::Domain(format!("unknown table '{s}' (expected one of {})", names.join(", ")))
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TableRow {
    pub formula: String,
    pub points: usize,
    pub max_deviation: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TableReport {
    pub which: Table,
    pub rows: Vec<TableRow>,
}

impl TableReport {
    pub fn row(&self, formula: &str) -> Option<&TableRow> {
        self.rows.iter().find(|r| r.formula == formula)
    }
}

/// Seed of the Haar sample used for the scaling-factor table.
pub const SCALING_TABLE_SEED: u64 = 20_240_601;

fn max_dev<F>(points: &[Vec<f64>], family: Family, f: F) -> Result<Vec<f64>>
where
    F: Fn(&[f64], &BroadcastOutputs) -> Result<Vec<f64>> + Sync,
{
    let shape = SubsystemShape::bipartite(2, 3)?;
    let per_point: Vec<Vec<f64>> = points
        .par_iter()
        .map(|p| {
            let out = broadcast(&family.state(p)?, &shape)?;
            f(p, &out)
        })
        .collect::<Result<_>>()?;
    let width = per_point.first().map_or(0, |v| v.len());
    Ok((0..width)
        .map(|k| per_point.iter().map(|v| v[k]).fold(0.0, f64::max))
        .collect())
}

fn rows(formulas: &[&str], points: usize, devs: Vec<f64>) -> Vec<TableRow> {
    formulas
        .iter()
        .zip(devs)
        .map(|(f, d)| TableRow {
            formula: (*f).to_string(),
            points,
            max_deviation: d,
        })
        .collect()
}

/// Compares the protocol against closed forms over a dense grid and reports the
/// largest absolute deviation per formula.
pub fn reproduce_table(which: Table) -> Result<TableReport> {
    let mems_pts: Vec<Vec<f64>> = stepped(0.0, 1.0, 0.01).into_iter().map(|r| vec![r]).collect();
    let tpcs_pts = triangle(&stepped(0.0, 0.5, 0.02), &stepped(0.0, 1.0, 0.02));
    let nl = SubsystemShape::bipartite(2, 3)?;
    let al = SubsystemShape::bipartite(2, 2)?;
    let rows = match which {
        Table::DiscordMems => {
            let f = ["25r^2/192", "alice: 1/18"];
            let devs = max_dev(&mems_pts, Family::Mems, |p, out| {
                let r = p[0];
                Ok(vec![
                    (geometric_discord(&out.rho_14, &nl)?.value - 25.0 * r * r / 192.0).abs(),
                    (geometric_discord(&out.rho_13, &al)?.value - 1.0 / 18.0).abs(),
                ])
            })?;
            rows(&f, mems_pts.len(), devs)
        }
        Table::CoherenceMems => {
            let f = ["5r/12", "alice: 1/3"];
            let devs = max_dev(&mems_pts, Family::Mems, |p, out| {
                Ok(vec![
                    (l1_coherence(&out.rho_14).value - 5.0 * p[0] / 12.0).abs(),
                    (l1_coherence(&out.rho_13).value - 1.0 / 3.0).abs(),
                ])
            })?;
            rows(&f, mems_pts.len(), devs)
        }
        Table::DiscordTpcs => {
            let f = ["25(-1+2a+4g)^2/288", "25(-1+2a+4g)^2/1728", "alice: 1/18"];
            let devs = max_dev(&tpcs_pts, Family::Tpcs, |p, out| {
                let s = -1.0 + 2.0 * p[0] + 4.0 * p[1];
                let dg = geometric_discord(&out.rho_14, &nl)?.value;
                Ok(vec![
                    (dg - 25.0 * s * s / 288.0).abs(),
                    (dg - 25.0 * s * s / 1728.0).abs(),
                    (geometric_discord(&out.rho_13, &al)?.value - 1.0 / 18.0).abs(),
                ])
            })?;
            rows(&f, tpcs_pts.len(), devs)
        }
        Table::CoherenceTpcs => {
            let f = ["|5-10a-20g|/36", "alice: 1/3"];
            let devs = max_dev(&tpcs_pts, Family::Tpcs, |p, out| {
                Ok(vec![
                    (l1_coherence(&out.rho_14).value - (5.0 - 10.0 * p[0] - 20.0 * p[1]).abs() / 36.0).abs(),
                    (l1_coherence(&out.rho_13).value - 1.0 / 3.0).abs(),
                ])
            })?;
            rows(&f, tpcs_pts.len(), devs)
        }
        Table::ScalingFactors => {
            let n = 100u64;
            let per: Vec<[f64; 3]> = (0..n)
                .into_par_iter()
                .map(|i| {
                    let rho = haar_random_state_indexed(6, 6, SCALING_TABLE_SEED, i)?;
                    let (sx, sy, st) = measure_shrinking(&rho, &nl)?;
                    Ok([(sx - 2.0 / 3.0).abs(), (sy - 5.0 / 8.0).abs(), (st - 5.0 / 12.0).abs()])
                })
                .collect::<Result<_>>()?;
            let devs = (0..3).map(|k| per.iter().map(|v| v[k]).fold(0.0, f64::max)).collect();
            rows(&["X: 2/3", "Y: 5/8", "T: 5/12"], n as usize, devs)
        }
    };
    Ok(TableReport { which, rows })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_parsing() {
        assert_eq!("default".parse::<ParamGrid>().unwrap(), ParamGrid::Default);
        assert_eq!("step=0.1".parse::<ParamGrid>().unwrap(), ParamGrid::Step(0.1));
        assert_eq!("n=7".parse::<ParamGrid>().unwrap(), ParamGrid::Count(7));
        assert_eq!(
            "points=0.1,0.2;0.3,0.4".parse::<ParamGrid>().unwrap(),
            ParamGrid::Points(vec![vec![0.1, 0.2], vec![0.3, 0.4]])
        );
        assert!("step".parse::<ParamGrid>().is_err());
        assert!("points=a".parse::<ParamGrid>().is_err());
    }

    #[test]
    fn grid_sizes() {
        assert_eq!(ParamGrid::Step(0.1).points(Family::Mems).unwrap().len(), 11);
        assert_eq!(ParamGrid::Default.points(Family::Mems).unwrap().len(), 1001);
        let tri = ParamGrid::Count(3).points(Family::Tpcs).unwrap();
        // α ∈ {0, 1/4, 1/2}, γ ∈ {0, 1/2, 1}: 3 + 2 + 1 admissible points.
        assert_eq!(tri.len(), 6);
    }

    #[test]
    fn out_of_domain_points_are_listed() {
        let g = ParamGrid::Points(vec![vec![0.2], vec![1.5], vec![-0.1]]);
        let msg = g.points(Family::Mems).unwrap_err().to_string();
        assert!(
            msg.contains("1.5") && msg.contains("-0.1") && msg.contains("2 grid point"),
            "{msg}"
        );
    }

    #[test]
    fn classification_chain() {
        let v = |s| Verdict {
            status: s,
            criterion: crate::criteria::Criterion::PeresHorodecki,
            witness: 0.0,
        };
        use Status::*;
        assert_eq!(
            BroadcastClass::classify(&v(Separable), &v(Separable), &v(Separable)),
            BroadcastClass::None
        );
        assert_eq!(
            BroadcastClass::classify(&v(Entangled), &v(Entangled), &v(Separable)),
            BroadcastClass::NonOptimal
        );
        assert_eq!(
            BroadcastClass::classify(&v(Entangled), &v(Separable), &v(Indeterminate)),
            BroadcastClass::SubOptimal
        );
        assert_eq!(
            BroadcastClass::classify(&v(Entangled), &v(Separable), &v(Separable)),
            BroadcastClass::Optimal
        );
    }

    #[test]
    fn names_roundtrip() {
        for p in Predicate::ALL {
            assert_eq!(p.name().parse::<Predicate>().unwrap(), p);
        }
        for t in Table::ALL {
            assert_eq!(t.name().parse::<Table>().unwrap(), t);
        }
        assert!("nope".parse::<Predicate>().is_err());
    }

    #[test]
    fn bracket_error_when_no_sign_change() {
        let tol = Tolerances::default();
        let err = locate_threshold(Slice::mems(), Predicate::NonlocalEntangled, 0.0, 0.1, 1e-3, &tol).unwrap_err();
        assert!(matches!(err, Error::Bracket { value: false, .. }));
    }
}

//! Checks, instances and the suite runner.
//!
//! Every check belongs to a tier. Theorem-tier checks evaluate statements
//! that are proven, so any failure there is a defect in this crate.
//! Conjecture-tier checks evaluate open statements and only report.

use std::cell::OnceCell;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_bigint::BigInt;
use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use super::generator::{random_flag_sphere, random_simplex_subdivision, GeneratorSpec, Move, EDGE_CHOICE, RNG_NAME};
use crate::complex::SimplicialComplex;
use crate::constructions::{ball_to_sphere, sigma_cross_polytope_map, FacetChoice};
use crate::enumeration::{gamma_vector, h_polynomial, interior_h_polynomial};
use crate::error::{Error, Result};
use crate::homology::{classify, FieldSpec, Verdict};
use crate::poly::{GammaVector, IntPolynomial};
use crate::subdivision::{
    check_edge_recursion, check_locality, h_decomposition, interior_stats, join_subdivision, local_gamma, local_h,
    relative_local_h, validate, SubdivisionMap, SubdivisionVerdict, ValidationMode,
};

/// Instances with more faces than this are refused unless forced.
pub const FACE_GUARD: usize = 1 << 22;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Tier {
    Theorem,
    Conjecture,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Check {
    // Proven: local h is symmetric for every homology subdivision of a simplex.
    LocalHSymmetry,
    // Proven: nonnegative for quasi-geometric subdivisions.
    LocalHNonneg,
    // Proven: h of the total complex decomposes over the base, and its γ form
    // on Eulerian bases.
    HDecomposition,
    // Proven: locality formula for a subdivision of a subdivision.
    Locality,
    // Proven: effect of one edge subdivision on local h.
    EdgeRecursion,
    // Proven: ξ_0, ξ_1 and ξ_2 in terms of interior face counts.
    XiFormulas,
    // Proven: ξ is multiplicative under joins.
    XiJoin,
    // Proven: h of the interior is the reversed h of a ball or sphere.
    Reciprocity,
    // Proven: the cross-polytope map of a flag sphere is a flag
    // vertex-induced homology subdivision.
    SigmaMap,
    // Proven: the ball-to-sphere extension is a homology subdivision, flag
    // and vertex-induced when the input is.
    BallToSphere,
    // Proven: γ_1 = f_0 - 2d on homology spheres.
    Gamma1Count,
    // Proven: 2γ_2 equals the sum of γ_2 over vertex links in dimension 4.
    Gamma2Links,
    // Open in general; known in dimensions up to 4.
    Gal,
    // Open beyond d = 4.
    LocalGamma,
    // Proven for flag vertex-induced pairs of dimension at most 4 (that case
    // is theorem tier); open otherwise.
    Monotonicity,
    // Open.
    Unimodality,
    // Claimed without proof; checked empirically.
    RelativeLocalH,
    // Claimed without proof; checked empirically.
    LocalHMonotonicity,
    // Verdicts over GF(2) and over the rationals should agree on generated
    // instances; a disagreement is reported, not asserted.
    FieldAgreement,
}

impl Check {
    pub const ALL: [Check; 19] = [
        Check::LocalHSymmetry,
        Check::LocalHNonneg,
        Check::HDecomposition,
        Check::Locality,
        Check::EdgeRecursion,
        Check::XiFormulas,
        Check::XiJoin,
        Check::Reciprocity,
        Check::SigmaMap,
        Check::BallToSphere,
        Check::Gamma1Count,
        Check::Gamma2Links,
        Check::Gal,
        Check::LocalGamma,
        Check::Monotonicity,
        Check::Unimodality,
        Check::RelativeLocalH,
        Check::LocalHMonotonicity,
        Check::FieldAgreement,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::LocalHSymmetry => "local-h-symmetry",
            Check::LocalHNonneg => "local-h-nonneg",
            Check::HDecomposition => "h-decomposition",
            Check::Locality => "locality",
            Check::EdgeRecursion => "edge-recursion",
            Check::XiFormulas => "xi-formulas",
            Check::XiJoin => "xi-join",
            Check::Reciprocity => "reciprocity",
            Check::SigmaMap => "sigma-map",
            Check::BallToSphere => "ball-to-sphere",
            Check::Gamma1Count => "gamma1-count",
            Check::Gamma2Links => "gamma2-links",
            Check::Gal => "gal",
            Check::LocalGamma => "local-gamma",
            Check::Monotonicity => "monotonicity",
            Check::Unimodality => "unimodality",
            Check::RelativeLocalH => "relative-local-h",
            Check::LocalHMonotonicity => "local-h-monotonicity",
            Check::FieldAgreement => "field-agreement",
        }
    }

    /// The default tier. Monotonicity is promoted to theorem tier on pairs
    /// the proven case covers.
    pub fn tier(self) -> Tier {
        match self {
            Check::Gal
            | Check::LocalGamma
            | Check::Monotonicity
            | Check::Unimodality
            | Check::RelativeLocalH
            | Check::LocalHMonotonicity
            | Check::FieldAgreement => Tier::Conjecture,
            _ => Tier::Theorem,
        }
    }

    pub fn theorem_checks() -> Vec<Check> {
        Check::ALL.into_iter().filter(|c| c.tier() == Tier::Theorem).collect()
    }

    pub fn conjecture_checks() -> Vec<Check> {
        Check::ALL
            .into_iter()
            .filter(|c| c.tier() == Tier::Conjecture)
            .collect()
    }

    /// Parses a comma-separated list; `all`, `theorem` and `conjecture`
    /// expand to groups.
    pub fn parse_list(s: &str) -> Result<BTreeSet<Check>> {
        let mut out = BTreeSet::new();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            match part {
                "all" => out.extend(Check::ALL),
                "theorem" => out.extend(Check::theorem_checks()),
                "conjecture" => out.extend(Check::conjecture_checks()),
                p => {
                    out.insert(p.parse()?);
                }
            }
        }
        Ok(out)
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = match s {
            "local-gamma-nonneg" => "local-gamma",
            "gamma-positivity" => "gal",
            other => other,
        };
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::MalformedInstance(format!("unknown check `{s}`")))
    }
}

impl Serialize for Check {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

impl<'de> Deserialize<'de> for Check {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(de)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum CheckOutcome {
    Pass,
    Fail { witness: Value },
    Skipped { reason: String },
}

impl CheckOutcome {
    fn skipped(reason: &str) -> Self {
        CheckOutcome::Skipped {
            reason: reason.to_string(),
        }
    }

    pub fn is_pass(&self) -> bool {
        matches!(self, CheckOutcome::Pass)
    }

    pub fn is_fail(&self) -> bool {
        matches!(self, CheckOutcome::Fail { .. })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub tier: Tier,
    #[serde(flatten)]
    pub outcome: CheckOutcome,
}

/// The families the planner draws from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    /// Flag sphere grown from the cross-polytope by edge subdivisions and
    /// joins, with a subdivision pair split off the tail of the trail.
    FlagSphere,
    /// Edge subdivisions of a simplex.
    SimplexEdge,
    /// Edge subdivisions of the barycentric subdivision of a simplex.
    SimplexBarycentric,
    /// Stellar subdivisions of a simplex on faces of any size.
    SimplexStellar,
    /// Join of two edge-subdivided simplices.
    Join,
}

impl Family {
    pub const ALL: [Family; 5] = [
        Family::FlagSphere,
        Family::SimplexEdge,
        Family::SimplexBarycentric,
        Family::SimplexStellar,
        Family::Join,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::FlagSphere => "flag-sphere",
            Family::SimplexEdge => "simplex-edge",
            Family::SimplexBarycentric => "simplex-barycentric",
            Family::SimplexStellar => "simplex-stellar",
            Family::Join => "join",
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::MalformedInstance(format!("unknown family `{s}`")))
    }
}

/// One unit of work. Each field is optional; checks skip instances missing
/// what they need.
#[derive(Debug, Clone)]
pub struct Instance {
    pub id: String,
    pub family: String,
    /// Enough to rebuild the instance: the generator specs or the fixture.
    pub origin: Value,
    /// A flag sphere, mapped onto the cross-polytope boundary.
    pub sphere: Option<SubdivisionMap>,
    /// A subdivision of a simplex.
    pub simplex: Option<SubdivisionMap>,
    /// A subdivision of a flag sphere by a flag sphere.
    pub pair: Option<SubdivisionMap>,
    /// `(outer, inner)` with `inner` subdividing `outer.total()`.
    pub locality: Option<(SubdivisionMap, SubdivisionMap)>,
    /// Two simplex subdivisions whose join is `simplex`.
    pub factors: Option<(SubdivisionMap, SubdivisionMap)>,
}

impl Instance {
    fn bare(id: impl Into<String>, family: &str, origin: Value) -> Self {
        Instance {
            id: id.into(),
            family: family.to_string(),
            origin,
            sphere: None,
            simplex: None,
            pair: None,
            locality: None,
            factors: None,
        }
    }

    /// A subdivision of a simplex given directly.
    pub fn from_simplex_map(id: impl Into<String>, s: SubdivisionMap, origin: Value) -> Self {
        let mut inst = Instance::bare(id, "simplex", origin);
        inst.simplex = Some(s);
        inst
    }

    /// A subdivision `Δ′ → Δ` between flag spheres, given directly.
    pub fn from_pair(id: impl Into<String>, pair: SubdivisionMap, origin: Value) -> Self {
        let mut inst = Instance::bare(id, "pair", origin);
        inst.pair = Some(pair);
        inst
    }

    /// A flag sphere given as a complex, mapped onto itself.
    pub fn from_sphere(id: impl Into<String>, k: &SimplicialComplex, origin: Value) -> Self {
        let mut inst = Instance::bare(id, "sphere", origin);
        inst.sphere = Some(SubdivisionMap::trivial(k));
        inst
    }

    /// Builds one instance of `family` in dimension `d` from `seed`.
    pub fn generate(id: impl Into<String>, family: Family, d: usize, steps: usize, seed: u64) -> Result<Self> {
        let id = id.into();
        let edge = [Move::EdgeSubdivide];
        match family {
            Family::FlagSphere => {
                let spec = GeneratorSpec::new(d, steps, seed).with_moves(&[Move::EdgeSubdivide, Move::JoinS0]);
                let g = random_flag_sphere(&spec)?;
                let k = g.last_join_end().max(g.steps.len() / 2);
                let mut inst = Instance::bare(
                    id,
                    family.name(),
                    json!({ "family": family.name(), "spec": spec, "split": k }),
                );
                inst.pair = Some(g.suffix_map(k)?);
                inst.sphere = Some(g.map);
                Ok(inst)
            }
            Family::SimplexEdge | Family::SimplexBarycentric | Family::SimplexStellar => {
                let moves: &[Move] = if family == Family::SimplexStellar {
                    &[Move::EdgeSubdivide, Move::Stellar]
                } else {
                    &edge
                };
                let spec = GeneratorSpec::new(d, steps, seed).with_moves(moves);
                let g = random_simplex_subdivision(&spec, "a", family == Family::SimplexBarycentric)?;
                let k = g.steps.len() / 2;
                let origin = json!({
                    "family": family.name(),
                    "spec": spec,
                    "prefix": "a",
                    "barycentric": family == Family::SimplexBarycentric,
                    "split": k,
                });
                let mut inst = Instance::bare(id, family.name(), origin);
                inst.locality = Some((g.prefix_map(k)?, g.suffix_map(k)?));
                inst.simplex = Some(g.map);
                Ok(inst)
            }
            Family::Join => {
                if d < 2 {
                    return Err(Error::MalformedInstance("a join needs d >= 2".into()));
                }
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let d1 = rng.gen_range(1..d);
                let spec1 = GeneratorSpec::new(d1, steps / 2, rng.next_u64());
                let spec2 = GeneratorSpec::new(d - d1, steps - steps / 2, rng.next_u64());
                let g1 = random_simplex_subdivision(&spec1, "a", false)?;
                let g2 = random_simplex_subdivision(&spec2, "c", false)?;
                let origin = json!({
                    "family": family.name(),
                    "seed": seed,
                    "factors": [
                        { "spec": spec1, "prefix": "a", "barycentric": false },
                        { "spec": spec2, "prefix": "c", "barycentric": false },
                    ],
                });
                let mut inst = Instance::bare(id, family.name(), origin);
                inst.simplex = Some(join_subdivision(&g1.map, &g2.map)?);
                inst.factors = Some((g1.map, g2.map));
                Ok(inst)
            }
        }
    }

    fn maps(&self) -> impl Iterator<Item = &SubdivisionMap> {
        self.sphere
            .iter()
            .chain(&self.simplex)
            .chain(&self.pair)
            .chain(self.locality.iter().flat_map(|(a, b)| [a, b]))
            .chain(self.factors.iter().flat_map(|(a, b)| [a, b]))
    }

    /// Total face count across every stored structure.
    pub fn size(&self) -> usize {
        self.maps().map(|m| m.total().num_faces() + m.base().num_faces()).sum()
    }
}

/// `(id, family, d, steps, seed)` for one planned instance.
pub type PlanEntry = (String, Family, usize, usize, u64);

/// What to generate: `count` instances, cycling through `dims` and then
/// `families`, with between 1 and `max_steps` moves each.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuitePlan {
    pub count: usize,
    pub dims: Vec<usize>,
    pub max_steps: usize,
    pub seed: u64,
    pub families: Vec<Family>,
}

impl SuitePlan {
    pub fn new(count: usize, dims: &[usize], max_steps: usize, seed: u64, families: &[Family]) -> Self {
        SuitePlan {
            count,
            dims: dims.to_vec(),
            max_steps,
            seed,
            families: families.to_vec(),
        }
    }

    /// Per-instance `(id, family, d, steps, seed)`, drawn from one stream so
    /// the plan alone fixes every instance.
    pub fn entries(&self) -> Result<Vec<PlanEntry>> {
        if self.dims.is_empty() || self.families.is_empty() {
            return Err(Error::MalformedInstance(
                "plan needs at least one dimension and family".into(),
            ));
        }
        if self.dims.contains(&0) {
            return Err(Error::MalformedInstance("d must be at least 1".into()));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        let width = self.count.max(1).to_string().len();
        let mut out = Vec::with_capacity(self.count);
        for i in 0..self.count {
            let d = self.dims[i % self.dims.len()];
            let mut family = self.families[(i / self.dims.len()) % self.families.len()];
            if family == Family::Join && d < 2 {
                family = Family::SimplexEdge;
            }
            let steps = rng.gen_range(1..=self.max_steps.max(1));
            let seed = rng.next_u64();
            out.push((format!("i{i:0width$}"), family, d, steps, seed));
        }
        Ok(out)
    }

    pub fn instances(&self) -> Result<Vec<Instance>> {
        self.entries()?
            .into_par_iter()
            .map(|(id, family, d, steps, seed)| Instance::generate(id, family, d, steps, seed))
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConjectureReport {
    pub id: String,
    pub family: String,
    pub origin: Value,
    pub checks: BTreeMap<Check, CheckRecord>,
    /// Seconds per check; only filled when asked for, so reports stay
    /// byte-identical across runs by default.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timings: Option<BTreeMap<Check, f64>>,
    pub digests: BTreeMap<String, Value>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tally {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportHeader {
    pub tool: String,
    pub rng: String,
    pub distribution: String,
    pub field: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub plan: Option<SuitePlan>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub header: ReportHeader,
    pub reports: Vec<ConjectureReport>,
    /// Keyed by check, then tier.
    pub summary: BTreeMap<Check, BTreeMap<Tier, Tally>>,
}

impl SuiteReport {
    /// Failures among theorem-tier checks.
    pub fn theorem_failures(&self) -> usize {
        self.count(Tier::Theorem, CheckOutcome::is_fail)
    }

    pub fn count(&self, tier: Tier, pred: impl Fn(&CheckOutcome) -> bool) -> usize {
        self.reports
            .iter()
            .flat_map(|r| r.checks.values())
            .filter(|c| c.tier == tier && pred(&c.outcome))
            .count()
    }

    pub fn tally(&self, check: Check) -> Tally {
        let mut t = Tally::default();
        for tiers in self.summary.get(&check).into_iter() {
            for v in tiers.values() {
                t.pass += v.pass;
                t.fail += v.fail;
                t.skipped += v.skipped;
            }
        }
        t
    }

    /// One line per instance and check: id, family, check, tier, status.
    pub fn to_tsv(&self) -> String {
        let mut out = String::from("instance\tfamily\tcheck\ttier\tstatus\tdetail\n");
        for r in &self.reports {
            for (check, rec) in &r.checks {
                let (status, detail) = match &rec.outcome {
                    CheckOutcome::Pass => ("pass", String::new()),
                    CheckOutcome::Fail { witness } => ("fail", witness.to_string()),
                    CheckOutcome::Skipped { reason } => ("skipped", reason.clone()),
                };
                let tier = match rec.tier {
                    Tier::Theorem => "theorem",
                    Tier::Conjecture => "conjecture",
                };
                out.push_str(&format!(
                    "{}\t{}\t{}\t{}\t{}\t{}\n",
                    r.id, r.family, check, tier, status, detail
                ));
            }
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuiteOptions {
    /// Run above the face guard.
    pub force: bool,
    /// Face count above which instances are refused.
    pub face_limit: usize,
    pub timings: bool,
    pub field: FieldSpec,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            force: false,
            face_limit: FACE_GUARD,
            timings: false,
            field: FieldSpec::Gf2,
        }
    }
}

pub fn report_header(field: FieldSpec, plan: Option<&SuitePlan>) -> ReportHeader {
    ReportHeader {
        tool: format!("flagsub {}", env!("CARGO_PKG_VERSION")),
        rng: RNG_NAME.to_string(),
        distribution: EDGE_CHOICE.to_string(),
        field: field.to_string(),
        plan: plan.cloned(),
    }
}

/// Evaluates `checks` on every instance, in parallel, merged in id order.
pub fn run_suite(
    instances: &[Instance],
    checks: &BTreeSet<Check>,
    opts: SuiteOptions,
) -> Result<Vec<ConjectureReport>> {
    if !opts.force {
        if let Some(inst) = instances.iter().find(|i| i.size() > opts.face_limit) {
            return Err(Error::InstanceTooLarge {
                faces: inst.size(),
                limit: opts.face_limit,
            });
        }
    }
    let mut reports: Vec<ConjectureReport> = instances.par_iter().map(|inst| evaluate(inst, checks, opts)).collect();
    reports.sort_by(|a, b| a.id.cmp(&b.id));
    Ok(reports)
}

/// Wraps reports with a header and per-check tallies.
pub fn summarize(header: ReportHeader, reports: Vec<ConjectureReport>) -> SuiteReport {
    let mut summary: BTreeMap<Check, BTreeMap<Tier, Tally>> = BTreeMap::new();
    for r in &reports {
        for (check, rec) in &r.checks {
            let t = summary.entry(*check).or_default().entry(rec.tier).or_default();
            match rec.outcome {
                CheckOutcome::Pass => t.pass += 1,
                CheckOutcome::Fail { .. } => t.fail += 1,
                CheckOutcome::Skipped { .. } => t.skipped += 1,
            }
        }
    }
    SuiteReport {
        header,
        reports,
        summary,
    }
}

/// Generates the plan's instances and runs the checks on them.
pub fn run_plan(plan: &SuitePlan, checks: &BTreeSet<Check>, opts: SuiteOptions) -> Result<SuiteReport> {
    let instances = plan.instances()?;
    let reports = run_suite(&instances, checks, opts)?;
    Ok(summarize(report_header(opts.field, Some(plan)), reports))
}

/// Lazily computed facts shared between checks on one instance.
struct Ctx<'a> {
    inst: &'a Instance,
    field: FieldSpec,
    simplex_verdict: OnceCell<Option<SubdivisionVerdict>>,
    pair_verdict: OnceCell<Option<SubdivisionVerdict>>,
}

impl<'a> Ctx<'a> {
    fn simplex_verdict(&self) -> Option<&SubdivisionVerdict> {
        self.simplex_verdict
            .get_or_init(|| self.inst.simplex.as_ref().map(|s| validate(s, ValidationMode::Fast)))
            .as_ref()
    }

    fn pair_verdict(&self) -> Option<&SubdivisionVerdict> {
        self.pair_verdict
            .get_or_init(|| self.inst.pair.as_ref().map(|s| validate(s, ValidationMode::Fast)))
            .as_ref()
    }

    fn fail(&self, check: Check, detail: Value) -> CheckOutcome {
        CheckOutcome::Fail {
            witness: json!({
                "instance": self.inst.id,
                "check": check.name(),
                "origin": self.inst.origin,
                "detail": detail,
            }),
        }
    }

    fn error(&self, check: Check, e: Error) -> CheckOutcome {
        self.fail(check, json!({ "error": e.to_string() }))
    }
}

fn facet_size(k: &SimplicialComplex) -> usize {
    (k.dim() + 1).max(0) as usize
}

fn gamma_poly(g: &GammaVector) -> IntPolynomial {
    g.as_polynomial()
}

fn int(v: u64) -> BigInt {
    BigInt::from(v)
}

fn evaluate(inst: &Instance, checks: &BTreeSet<Check>, opts: SuiteOptions) -> ConjectureReport {
    let ctx = Ctx {
        inst,
        field: opts.field,
        simplex_verdict: OnceCell::new(),
        pair_verdict: OnceCell::new(),
    };
    let mut records = BTreeMap::new();
    let mut timings = BTreeMap::new();
    for &check in checks {
        let start = Instant::now();
        let (tier, outcome) = run_check(&ctx, check);
        timings.insert(check, start.elapsed().as_secs_f64());
        records.insert(check, CheckRecord { tier, outcome });
    }
    ConjectureReport {
        id: inst.id.clone(),
        family: inst.family.clone(),
        origin: inst.origin.clone(),
        checks: records,
        timings: opts.timings.then_some(timings),
        digests: digests(inst),
    }
}

fn digests(inst: &Instance) -> BTreeMap<String, Value> {
    let mut out = BTreeMap::new();
    if let Some(s) = &inst.sphere {
        if let Ok(g) = gamma_vector(s.total()) {
            out.insert("gamma".to_string(), json!(g));
        }
        out.insert("f_vector".to_string(), json!(s.total().f_vector().counts));
    }
    if let Some(p) = &inst.pair {
        if let (Ok(a), Ok(b)) = (gamma_vector(p.total()), gamma_vector(p.base())) {
            out.insert("pair_gamma".to_string(), json!([a, b]));
        }
    }
    if let Some(s) = &inst.simplex {
        if let Ok(l) = local_h(s) {
            out.insert("local_h".to_string(), json!(l));
        }
        if let Ok(x) = local_gamma(s) {
            out.insert("xi".to_string(), json!(x));
        }
    }
    out
}

fn run_check(ctx: &Ctx<'_>, check: Check) -> (Tier, CheckOutcome) {
    let out = match check {
        Check::LocalHSymmetry => local_h_symmetry(ctx),
        Check::LocalHNonneg => local_h_nonneg(ctx),
        Check::HDecomposition => decomposition(ctx),
        Check::Locality => locality(ctx),
        Check::EdgeRecursion => edge_recursion(ctx),
        Check::XiFormulas => xi_formulas(ctx),
        Check::XiJoin => xi_join(ctx),
        Check::Reciprocity => reciprocity(ctx),
        Check::SigmaMap => sigma_map(ctx),
        Check::BallToSphere => ball_sphere(ctx),
        Check::Gamma1Count => gamma1_count(ctx),
        Check::Gamma2Links => gamma2_links(ctx),
        Check::Gal => gal(ctx),
        Check::LocalGamma => local_gamma_nonneg(ctx),
        Check::Monotonicity => return monotonicity(ctx),
        Check::Unimodality => unimodality(ctx),
        Check::RelativeLocalH => relative(ctx),
        Check::LocalHMonotonicity => local_h_monotone(ctx),
        Check::FieldAgreement => field_agreement(ctx),
    };
    (check.tier(), out)
}

const NO_SIMPLEX: &str = "no simplex subdivision";
const NO_SPHERE: &str = "no flag sphere";

fn local_h_symmetry(ctx: &Ctx<'_>) -> CheckOutcome {
    let Some(s) = &ctx.inst.simplex else {
        return CheckOutcome::skipped(NO_SIMPLEX);
    };
    let d = facet_size(s.base());
    match local_h(s) {
        Ok(l) => match l.check_symmetric(d) {
            Ok(()) => CheckOutcome::Pass,
            Err(e) => ctx.fail(Check::LocalHSymmetry, json!({ "local_h": l, "failure": e })),
        },
        Err(e) => ctx.error(Check::LocalHSymmetry, e),
    }
}

fn local_h_nonneg(ctx: &Ctx<'_>) -> CheckOutcome {
    let Some(s) = &ctx.inst.simplex else {
        return CheckOutcome::skipped(NO_SIMPLEX);
    };
    if !ctx.simplex_verdict().is_some_and(|v| v.is_quasi_geometric) {
        return CheckOutcome::skipped("not quasi-geometric");
    }
    match local_h(s) {
        Ok(l) if l.is_nonnegative() => CheckOutcome::Pass,
        Ok(l) => ctx.fail(Check::LocalHNonneg, json!({ "local_h": l })),
        Err(e) => ctx.error(Check::LocalHNonneg, e),
    }
}

fn decomposition(ctx: &Ctx<'_>) -> CheckOutcome {
    let maps: Vec<(&str, &SubdivisionMap)> = [
        ("sphere", ctx.inst.sphere.as_ref()),
        ("simplex", ctx.inst.simplex.as_ref()),
        ("pair", ctx.inst.pair.as_ref()),
    ]
    .into_iter()
    .filter_map(|(n, m)| m.map(|m| (n, m)))
    .collect();
    if maps.is_empty() {
        return CheckOutcome::skipped("no subdivision");
    }
    for (name, s) in maps {
        match h_decomposition(s) {
            Ok(dec) if dec.holds() => {}
            Ok(dec) => return ctx.fail(Check::HDecomposition, json!({ "map": name, "decomposition": dec })),
            Err(e) => return ctx.fail(Check::HDecomposition, json!({ "map": name, "error": e.to_string() })),
        }
    }
    CheckOutcome::Pass
}

fn locality(ctx: &Ctx<'_>) -> CheckOutcome {
    let Some((outer, inner)) = &ctx.inst.locality else {
        return CheckOutcome::skipped("no nested subdivision");
    };
    match check_locality(outer, inner) {
        Ok((lhs, rhs)) if lhs == rhs => CheckOutcome::Pass,
        Ok((lhs, rhs)) => ctx.fail(Check::Locality, json!({ "lhs": lhs, "rhs": rhs })),
        Err(e) => ctx.error(Check::Locality, e),
    }
}

fn edge_recursion(ctx: &Ctx<'_>) -> CheckOutcome {
    let Some(s) = &ctx.inst.simplex else {
        return CheckOutcome::skipped(NO_SIMPLEX);
    };
    let edges = s.total().faces_of_size(2);
    if edges.is_empty() {
        return CheckOutcome::skipped("no edges");
    }
    let picks: BTreeSet<usize> = [0, edges.len() / 2, edges.len() - 1].into_iter().collect();
    for i in picks {
        let e = edges[i];
        match check_edge_recursion(s, e) {
            Ok((lhs, rhs)) if lhs == rhs => {}
            Ok((lhs, rhs)) => {
                return ctx.fail(
                    Check::EdgeRecursion,
                    json!({ "edge": s.total().sorted_names(e), "lhs": lhs, "rhs": rhs }),
                )
            }
            Err(err) => return ctx.error(Check::EdgeRecursion, err),
        }
    }
    CheckOutcome::Pass
}

fn xi_formulas(ctx: &Ctx<'_>) -> CheckOutcome {
    let Some(s) = &ctx.inst.simplex else {
        return CheckOutcome::skipped(NO_SIMPLEX);
    };
    let d = facet_size(s.base());
    let (xi, stats) = match (local_gamma(s), interior_stats(s)) {
        (Ok(x), Ok(st)) => (x, st),
        (Err(e), _) | (_, Err(e)) => return ctx.error(Check::XiFormulas, e),
    };
    let mut expected: Vec<(usize, BigInt)> = Vec::new();
    if d >= 1 {
        expected.push((0, BigInt::from(0)));
    }
    if d >= 2 {
        expected.push((1, int(stats.f0_interior)));
    }
    if d >= 4 {
        let e = -BigInt::from(2 * d as i64 - 3) * int(stats.f0_interior) + int(stats.f1_interior)
            - int(stats.f0_codim1_relint);
        expected.push((2, e));
    }
    match expected.iter().find(|(i, v)| xi.get(*i) != *v) {
        None => CheckOutcome::Pass,
        Some((i, v)) => ctx.fail(
            Check::XiFormulas,
            json!({ "xi": xi, "stats": stats, "index": i, "expected": v.to_string() }),
        ),
    }
}

fn xi_join(ctx: &Ctx<'_>) -> CheckOutcome {
    let (Some((a, b)), Some(s)) = (&ctx.inst.factors, &ctx.inst.simplex) else {
        return CheckOutcome::skipped("no join factors");
    };
    match (local_gamma(a), local_gamma(b), local_gamma(s)) {
        (Ok(xa), Ok(xb), Ok(xs)) => {
            let product = &gamma_poly(&xa) * &gamma_poly(&xb);
            if product == gamma_poly(&xs) {
                CheckOutcome::Pass
            } else {
                ctx.fail(Check::XiJoin, json!({ "factors": [xa, xb], "join": xs }))
            }
        }
        (Err(e), _, _) | (_, Err(e), _) | (_, _, Err(e)) => ctx.error(Check::XiJoin, e),
    }
}

/// Every complex the instance carries, with what it should classify as.
fn complexes(inst: &Instance) -> Vec<(&'static str, &SimplicialComplex, bool)> {
    let mut out = Vec::new();
    if let Some(s) = &inst.sphere {
        out.push(("sphere", s.total(), true));
    }
    if let Some(s) = &inst.simplex {
        out.push(("simplex-total", s.total(), false));
    }
    if let Some(p) = &inst.pair {
        out.push(("pair-base", p.base(), true));
    }
    out
}

fn reciprocity(ctx: &Ctx<'_>) -> CheckOutcome {
    let ks = complexes(ctx.inst);
    if ks.is_empty() {
        return CheckOutcome::skipped("no complex");
    }
    for (name, k, sphere) in ks {
        let class = classify(k, ctx.field);
        let d = facet_size(k);
        let ok_kind = if sphere { class.is_sphere() } else { class.is_ball() };
        if !ok_kind {
            return ctx.fail(
                Check::Reciprocity,
                json!({ "complex": name, "verdict": class.verdict.name() }),
            );
        }
        let interior = class.interior(k).unwrap_or_default();
        let lhs = interior_h_polynomial(k, &interior);
        let rhs = h_polynomial(k).reciprocal(d);
        match (lhs, rhs) {
            (Ok(l), Some(r)) if l == r => {}
            (lhs, rhs) => {
                return ctx.fail(
                    Check::Reciprocity,
                    json!({ "complex": name, "interior_h": lhs.ok(), "reversed_h": rhs }),
                )
            }
        }
    }
    CheckOutcome::Pass
}

fn sigma_map(ctx: &Ctx<'_>) -> CheckOutcome {
    let Some(s) = &ctx.inst.sphere else {
        return CheckOutcome::skipped(NO_SPHERE);
    };
    let k = s.total();
    let d = facet_size(k);
    let map = match FacetChoice::first(k).and_then(|c| sigma_cross_polytope_map(k, &c, None)) {
        Ok(m) => m,
        Err(e) => return ctx.error(Check::SigmaMap, e),
    };
    let mode = if d <= 3 {
        ValidationMode::Full(ctx.field)
    } else {
        ValidationMode::Fast
    };
    let v = validate(&map, mode);
    if !(v.is_homology_subdivision && v.is_vertex_induced && v.is_flag_subdivision) {
        return ctx.fail(Check::SigmaMap, json!({ "verdict": v }));
    }
    if d > 3 {
        // spot check one facet restriction by homology
        let top = *map.base().faces_of_size(d).first().expect("cross-polytope facet");
        let restricted = map.restricted_total(top);
        if !matches!(classify(&restricted, ctx.field).verdict, Verdict::Ball { dim, .. } if dim == top.dim()) {
            return ctx.fail(Check::SigmaMap, json!({ "spot_check": map.base().sorted_names(top) }));
        }
    }
    let unions_agree = k
        .faces()
        .iter()
        .all(|&e| map.carrier(e) == Some(map.vertex_carrier_union(e)));
    if !unions_agree {
        return ctx.fail(
            Check::SigmaMap,
            json!({ "reason": "carrier is not the union of vertex carriers" }),
        );
    }
    match h_decomposition(&map) {
        Ok(dec) if dec.holds() && dec.gamma.is_some() => CheckOutcome::Pass,
        Ok(dec) => ctx.fail(Check::SigmaMap, json!({ "decomposition": dec })),
        Err(e) => ctx.error(Check::SigmaMap, e),
    }
}

fn ball_sphere(ctx: &Ctx<'_>) -> CheckOutcome {
    let Some(s) = &ctx.inst.simplex else {
        return CheckOutcome::skipped(NO_SIMPLEX);
    };
    let d = facet_size(s.base());
    let b = match ball_to_sphere(s) {
        Ok(b) => b,
        Err(e) => return ctx.error(Check::BallToSphere, e),
    };
    let mode = if d <= 3 {
        ValidationMode::Full(ctx.field)
    } else {
        ValidationMode::Fast
    };
    let v = validate(&b, mode);
    if !v.is_homology_subdivision {
        return ctx.fail(Check::BallToSphere, json!({ "verdict": v }));
    }
    if d <= 4 && !classify(b.total(), ctx.field).is_sphere() {
        return ctx.fail(
            Check::BallToSphere,
            json!({ "reason": "total complex is not a sphere" }),
        );
    }
    let input = ctx.simplex_verdict().expect("simplex present");
    if input.is_vertex_induced
        && input.is_flag_subdivision
        && !(v.is_vertex_induced && v.is_flag_subdivision && b.total().is_flag())
    {
        return ctx.fail(
            Check::BallToSphere,
            json!({ "reason": "flag vertex-induced input lost a property", "verdict": v }),
        );
    }
    // γ of the sphere is the sum of ξ over the restrictions
    let v_face = s.base().vertex_set();
    let mut rhs = IntPolynomial::zero();
    for f in v_face.subsets() {
        match s.restriction(f).and_then(|r| local_gamma(&r)) {
            Ok(x) => rhs += &x.as_polynomial(),
            Err(e) => return ctx.error(Check::BallToSphere, e),
        }
    }
    match gamma_vector(b.total()) {
        Ok(g) if g.as_polynomial() == rhs => CheckOutcome::Pass,
        Ok(g) => ctx.fail(Check::BallToSphere, json!({ "gamma": g, "xi_sum": rhs })),
        Err(e) => ctx.fail(Check::BallToSphere, json!({ "gamma": e })),
    }
}

fn gamma1_count(ctx: &Ctx<'_>) -> CheckOutcome {
    let Some(s) = &ctx.inst.sphere else {
        return CheckOutcome::skipped(NO_SPHERE);
    };
    let k = s.total();
    let d = facet_size(k);
    if d < 2 {
        return CheckOutcome::skipped("d < 2");
    }
    let expected = BigInt::from(k.num_vertices() as i64 - 2 * d as i64);
    match gamma_vector(k) {
        Ok(g) if g.get(1) == expected => CheckOutcome::Pass,
        Ok(g) => ctx.fail(Check::Gamma1Count, json!({ "gamma": g, "f0": k.num_vertices() })),
        Err(e) => ctx.fail(Check::Gamma1Count, json!({ "gamma": e })),
    }
}

fn gamma2_links(ctx: &Ctx<'_>) -> CheckOutcome {
    let Some(s) = &ctx.inst.sphere else {
        return CheckOutcome::skipped(NO_SPHERE);
    };
    let k = s.total();
    if facet_size(k) != 5 {
        return CheckOutcome::skipped("only for d = 5");
    }
    let lhs = match gamma_vector(k) {
        Ok(g) => BigInt::from(2) * g.get(2),
        Err(e) => return ctx.fail(Check::Gamma2Links, json!({ "gamma": e })),
    };
    let mut rhs = BigInt::from(0);
    for &v in k.faces_of_size(1) {
        match gamma_vector(&k.link_unchecked(v)) {
            Ok(g) => rhs += g.get(2),
            Err(e) => return ctx.fail(Check::Gamma2Links, json!({ "vertex": k.sorted_names(v), "gamma": e })),
        }
    }
    if lhs == rhs {
        CheckOutcome::Pass
    } else {
        ctx.fail(
            Check::Gamma2Links,
            json!({ "lhs": lhs.to_string(), "rhs": rhs.to_string() }),
        )
    }
}

fn gal(ctx: &Ctx<'_>) -> CheckOutcome {
    let Some(s) = &ctx.inst.sphere else {
        return CheckOutcome::skipped(NO_SPHERE);
    };
    match gamma_vector(s.total()) {
        Ok(g) if g.is_nonnegative() => CheckOutcome::Pass,
        Ok(g) => ctx.fail(Check::Gal, json!({ "gamma": g })),
        Err(e) => ctx.fail(Check::Gal, json!({ "gamma": e })),
    }
}

fn local_gamma_nonneg(ctx: &Ctx<'_>) -> CheckOutcome {
    let Some(s) = &ctx.inst.simplex else {
        return CheckOutcome::skipped(NO_SIMPLEX);
    };
    let v = ctx.simplex_verdict().expect("simplex present");
    match local_gamma(s) {
        Ok(x) if x.is_nonnegative() => CheckOutcome::Pass,
        Ok(x) => ctx.fail(
            Check::LocalGamma,
            json!({
                "xi": x,
                "xi_polynomial": x.as_polynomial().to_string(),
                "in_scope": v.is_vertex_induced && v.is_flag_subdivision,
            }),
        ),
        Err(e) => ctx.error(Check::LocalGamma, e),
    }
}

fn monotonicity(ctx: &Ctx<'_>) -> (Tier, CheckOutcome) {
    let Some(p) = &ctx.inst.pair else {
        return (Tier::Conjecture, CheckOutcome::skipped("no subdivision pair"));
    };
    let d = facet_size(p.base());
    let v = ctx.pair_verdict().expect("pair present");
    let proven =
        v.is_homology_subdivision && v.is_vertex_induced && v.is_flag_subdivision && p.base().is_flag() && d <= 5;
    let tier = if proven { Tier::Theorem } else { Tier::Conjecture };
    let out = match (gamma_vector(p.total()), gamma_vector(p.base())) {
        (Ok(after), Ok(before)) if after.as_polynomial().dominates(&before.as_polynomial()) => CheckOutcome::Pass,
        (Ok(after), Ok(before)) => ctx.fail(Check::Monotonicity, json!({ "subdivided": after, "base": before })),
        (after, before) => ctx.fail(
            Check::Monotonicity,
            json!({ "subdivided": after.err(), "base": before.err() }),
        ),
    };
    (tier, out)
}

fn unimodality(ctx: &Ctx<'_>) -> CheckOutcome {
    let Some(s) = &ctx.inst.simplex else {
        return CheckOutcome::skipped(NO_SIMPLEX);
    };
    if !ctx.simplex_verdict().is_some_and(|v| v.is_vertex_induced) {
        return CheckOutcome::skipped("not vertex-induced");
    }
    match local_h(s) {
        Ok(l) if l.is_unimodal() => CheckOutcome::Pass,
        Ok(l) => ctx.fail(Check::Unimodality, json!({ "local_h": l })),
        Err(e) => ctx.error(Check::Unimodality, e),
    }
}

fn relative(ctx: &Ctx<'_>) -> CheckOutcome {
    let Some(s) = &ctx.inst.simplex else {
        return CheckOutcome::skipped(NO_SIMPLEX);
    };
    let d = facet_size(s.base());
    let qg = ctx.simplex_verdict().is_some_and(|v| v.is_quasi_geometric);
    for &e in s.total().faces() {
        let l = match relative_local_h(s, e) {
            Ok(l) => l,
            Err(err) => return ctx.error(Check::RelativeLocalH, err),
        };
        let center = d - e.len().min(d);
        let symmetric = l.check_symmetric(center).is_ok();
        if !symmetric || (qg && !l.is_nonnegative()) {
            return ctx.fail(
                Check::RelativeLocalH,
                json!({
                    "face": s.total().sorted_names(e),
                    "relative_local_h": l,
                    "symmetric": symmetric,
                    "quasi_geometric": qg,
                }),
            );
        }
    }
    CheckOutcome::Pass
}

fn local_h_monotone(ctx: &Ctx<'_>) -> CheckOutcome {
    let Some((outer, inner)) = &ctx.inst.locality else {
        return CheckOutcome::skipped("no nested subdivision");
    };
    let composed = match SubdivisionMap::compose(outer, inner) {
        Ok(c) => c,
        Err(e) => return ctx.error(Check::LocalHMonotonicity, e),
    };
    let qg = |s: &SubdivisionMap| crate::subdivision::check_quasi_geometric(s).is_empty();
    if !(qg(outer) && qg(inner)) {
        return CheckOutcome::skipped("not quasi-geometric");
    }
    match (local_h(&composed), local_h(outer)) {
        (Ok(a), Ok(b)) if a.dominates(&b) => CheckOutcome::Pass,
        (Ok(a), Ok(b)) => ctx.fail(Check::LocalHMonotonicity, json!({ "refined": a, "coarse": b })),
        (Err(e), _) | (_, Err(e)) => ctx.error(Check::LocalHMonotonicity, e),
    }
}

/// Faces above which the rational cross-check is skipped.
const FIELD_AGREEMENT_LIMIT: usize = 2000;

fn field_agreement(ctx: &Ctx<'_>) -> CheckOutcome {
    let ks = complexes(ctx.inst);
    if ks.is_empty() {
        return CheckOutcome::skipped("no complex");
    }
    let mut checked = false;
    for (name, k, _) in ks {
        if k.num_faces() > FIELD_AGREEMENT_LIMIT {
            continue;
        }
        checked = true;
        let a = classify(k, FieldSpec::Gf2);
        let b = classify(k, FieldSpec::Rationals);
        if a.verdict.name() != b.verdict.name() || a.betti != b.betti {
            return ctx.fail(
                Check::FieldAgreement,
                json!({
                    "complex": name,
                    "gf2": a.verdict.name(),
                    "rationals": b.verdict.name(),
                    "betti_gf2": a.betti.to_map(),
                    "betti_q": b.betti.to_map(),
                }),
            );
        }
    }
    if checked {
        CheckOutcome::Pass
    } else {
        CheckOutcome::skipped("too large for the rational cross-check")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::fixture;
    use crate::subdivision::edge_subdivision;

    fn all() -> BTreeSet<Check> {
        Check::ALL.into_iter().collect()
    }

    #[test]
    fn check_names_round_trip() {
        for c in Check::ALL {
            assert_eq!(c.name().parse::<Check>().unwrap(), c);
        }
        assert_eq!("local-gamma-nonneg".parse::<Check>().unwrap(), Check::LocalGamma);
        assert!("nope".parse::<Check>().is_err());
        let list = Check::parse_list("gal, monotonicity,theorem").unwrap();
        assert!(list.contains(&Check::Gal) && list.contains(&Check::Locality));
        assert!(!list.contains(&Check::Unimodality));
    }

    #[test]
    fn fixture_b_fails_local_gamma() {
        let s = fixture("negative-xi").unwrap();
        let inst = Instance::from_simplex_map("negative-xi", s, json!({ "fixture": "negative-xi" }));
        let checks: BTreeSet<Check> = [Check::LocalGamma].into_iter().collect();
        let reports = run_suite(&[inst], &checks, SuiteOptions::default()).unwrap();
        let rec = &reports[0].checks[&Check::LocalGamma];
        assert_eq!(rec.tier, Tier::Conjecture);
        let CheckOutcome::Fail { witness } = &rec.outcome else {
            panic!("expected a failure, got {:?}", rec.outcome);
        };
        assert_eq!(witness["detail"]["xi_polynomial"], "x - 2x^2");
        assert_eq!(witness["detail"]["in_scope"], false);
    }

    #[test]
    fn octahedron_pair_is_monotone() {
        let oct = SimplicialComplex::cross_polytope(3);
        let pair = edge_subdivision(&oct, oct.face_by_names(&["u1", "u2"]).unwrap(), None).unwrap();
        let inst = Instance::from_pair("pair", pair, Value::Null);
        let checks: BTreeSet<Check> = [Check::Monotonicity].into_iter().collect();
        let r = run_suite(&[inst], &checks, SuiteOptions::default()).unwrap();
        let rec = &r[0].checks[&Check::Monotonicity];
        assert_eq!(rec.outcome, CheckOutcome::Pass);
        assert_eq!(rec.tier, Tier::Theorem);
        assert_eq!(
            r[0].digests["pair_gamma"],
            json!([{ "d": 3, "gamma": [1, 1] }, { "d": 3, "gamma": [1, 0] }])
        );
    }

    #[test]
    fn small_plan_passes_theorem_tier() {
        let plan = SuitePlan::new(10, &[2, 3], 4, 17, &Family::ALL);
        let report = run_plan(&plan, &all(), SuiteOptions::default()).unwrap();
        assert_eq!(report.reports.len(), 10);
        assert_eq!(report.theorem_failures(), 0, "{}", report.to_tsv());
        assert!(report.tally(Check::Gal).pass > 0);
        let tsv = report.to_tsv();
        assert!(tsv.starts_with("instance\tfamily\tcheck"));
        assert_eq!(tsv.lines().count(), 1 + 10 * Check::ALL.len());
    }

    #[test]
    fn reports_are_deterministic() {
        let plan = SuitePlan::new(6, &[3], 5, 5, &[Family::FlagSphere, Family::SimplexStellar]);
        let checks = Check::parse_list("gal,local-gamma,monotonicity,unimodality").unwrap();
        let a = serde_json::to_string(&run_plan(&plan, &checks, SuiteOptions::default()).unwrap()).unwrap();
        let b = serde_json::to_string(&run_plan(&plan, &checks, SuiteOptions::default()).unwrap()).unwrap();
        assert_eq!(a, b);
        let back: SuiteReport = serde_json::from_str(&a).unwrap();
        assert_eq!(serde_json::to_string(&back).unwrap(), a);
    }

    #[test]
    fn guard_refuses_without_force() {
        let inst = Instance::from_sphere("big", &SimplicialComplex::cross_polytope(3), Value::Null);
        let checks: BTreeSet<Check> = [Check::Gal].into_iter().collect();
        let opts = SuiteOptions {
            face_limit: 10,
            ..SuiteOptions::default()
        };
        assert!(matches!(
            run_suite(std::slice::from_ref(&inst), &checks, opts),
            Err(Error::InstanceTooLarge { limit: 10, .. })
        ));
        assert!(run_suite(&[inst], &checks, SuiteOptions { force: true, ..opts }).is_ok());
    }
}

//! Prediction-versus-homology verification suites.

use std::collections::BTreeMap;
use std::fmt;
use std::fmt::Write as _;
use std::str::FromStr;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::complex::{faces_in_window, independence_complex, Limits};
use crate::error::{Error, Result};
use crate::family::Family;
use crate::graph::{generalized_mycielskian, ladder_replace_crossing, ladder_replace_triangle, random_graph, Graph};
use crate::homology::{betti_range, betti_reduced, BettiTable, Coefficients};
use crate::homotopy::{predict, reduce, HomotopyType, Status, DEFAULT_BUDGET};
use crate::label::Label;
use crate::morse::{element_matching, product_order};

/// Values of `β̃₃(Ind(K_2 × K_3 × K_n))` for `n = 2..=6`, as tabulated in
/// the literature.
pub const TABLE1: [(usize, u64); 5] = [(2, 4), (3, 14), (4, 30), (5, 52), (6, 80)];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Suite {
    Table1,
    Product,
    Morse,
    Mycielskian,
    KnLr,
    Gadget,
    Suspension,
    CycleLadder,
    PathCycle,
    MorseConsistency,
    Conjecture,
}

impl Suite {
    pub const ALL: [Suite; 11] = [
        Suite::Table1,
        Suite::Product,
        Suite::Morse,
        Suite::Mycielskian,
        Suite::KnLr,
        Suite::Gadget,
        Suite::Suspension,
        Suite::CycleLadder,
        Suite::PathCycle,
        Suite::MorseConsistency,
        Suite::Conjecture,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Table1 => "table1",
            Suite::Product => "product",
            Suite::Morse => "morse",
            Suite::Mycielskian => "mycielskian",
            Suite::KnLr => "kn_lr",
            Suite::Gadget => "gadget",
            Suite::Suspension => "suspension",
            Suite::CycleLadder => "cycle_ladder",
            Suite::PathCycle => "path_cycle",
            Suite::MorseConsistency => "morse_consistency",
            Suite::Conjecture => "conjecture",
        }
    }

    /// Whether failures in this suite count towards the verdict by default.
    pub fn gating(self) -> bool {
        self != Suite::Conjecture
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Suite> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| {
                let names: Vec<_> = Suite::ALL.iter().map(|s| s.name()).collect();
                Error::Parse(format!("unknown suite {s:?}; expected one of {} or all", names.join(", ")))
            })
    }
}

#[derive(Clone, Debug)]
pub struct SuiteOptions {
    pub seed: u64,
    /// Overrides the number of random instances in the randomized suites.
    pub count: Option<usize>,
    /// Coefficients for full-range checks; the first instance of each
    /// family suite is additionally computed over the integers.
    pub coefficients: Coefficients,
    pub limits: Limits,
    /// Leave wall-clock times out of records.
    pub deterministic: bool,
    pub strict_conjectures: bool,
    /// Overrides the `n` values of the mycielskian and kn_lr suites.
    pub n_values: Option<Vec<usize>>,
    /// Overrides the `r` values of the mycielskian and kn_lr suites.
    pub r_values: Option<Vec<usize>>,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            seed: 0,
            count: None,
            coefficients: Coefficients::Mod2,
            limits: Limits::default(),
            deterministic: false,
            strict_conjectures: false,
            n_values: None,
            r_values: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InstanceRecord {
    pub suite: Suite,
    pub instance: String,
    pub predicted: Option<HomotopyType>,
    pub status: Option<Status>,
    pub computed: Option<BettiTable>,
    pub matched: bool,
    pub conjectural: bool,
    pub resource_limited: bool,
    pub faces: usize,
    pub millis: Option<u64>,
    pub note: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteSummary {
    pub suite: Suite,
    pub instances: usize,
    pub matched: usize,
    pub failed: usize,
    pub gating: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub seed: u64,
    pub records: Vec<InstanceRecord>,
    pub summaries: Vec<SuiteSummary>,
    pub passed: bool,
}

/// Exit-code flavour of a report.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Mismatch,
    ResourceLimited,
}

impl VerificationReport {
    pub fn verdict(&self) -> Verdict {
        let gating_failures: Vec<&InstanceRecord> = self
            .records
            .iter()
            .filter(|r| !r.matched && self.summaries.iter().any(|s| s.suite == r.suite && s.gating))
            .collect();
        if gating_failures.is_empty() {
            Verdict::Pass
        } else if gating_failures.iter().all(|r| r.resource_limited) {
            Verdict::ResourceLimited
        } else {
            Verdict::Mismatch
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Human-readable table, one line per instance plus suite totals.
    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let width = self.records.iter().map(|r| r.instance.len()).max().unwrap_or(8).max(8);
        writeln!(out, "{:<18} {:<width$} {:<6} {:<22} {:>9}  note", "suite", "instance", "result", "predicted", "faces").unwrap();
        for r in &self.records {
            let result = match (r.matched, r.conjectural) {
                (true, _) => "ok",
                (false, true) => "differs",
                (false, false) if r.resource_limited => "limit",
                (false, false) => "FAIL",
            };
            let predicted = r.predicted.as_ref().map(ToString::to_string).unwrap_or_else(|| "-".into());
            writeln!(
                out,
                "{:<18} {:<width$} {:<6} {:<22} {:>9}  {}",
                r.suite.name(),
                r.instance,
                result,
                predicted,
                r.faces,
                r.note
            )
            .unwrap();
        }
        writeln!(out).unwrap();
        for s in &self.summaries {
            let tag = if s.gating { "" } else { " (conjectural, not gating)" };
            writeln!(out, "{}: {}/{} matched{}", s.suite.name(), s.matched, s.instances, tag).unwrap();
        }
        writeln!(out, "verdict: {}", if self.passed { "pass" } else { "fail" }).unwrap();
        out
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("suite,instance,matched,conjectural,predicted,faces,note\n");
        for r in &self.records {
            let predicted = r.predicted.as_ref().map(ToString::to_string).unwrap_or_default();
            writeln!(
                out,
                "{},\"{}\",{},{},\"{}\",{},\"{}\"",
                r.suite.name(),
                r.instance,
                r.matched,
                r.conjectural,
                predicted,
                r.faces,
                r.note.replace('"', "'")
            )
            .unwrap();
        }
        out
    }
}

struct Timer(Option<Instant>);

impl Timer {
    fn start(opts: &SuiteOptions) -> Timer {
        Timer((!opts.deterministic).then(Instant::now))
    }

    fn millis(&self) -> Option<u64> {
        self.0.map(|t| t.elapsed().as_millis() as u64)
    }
}

fn record(suite: Suite, instance: impl Into<String>) -> InstanceRecord {
    InstanceRecord {
        suite,
        instance: instance.into(),
        predicted: None,
        status: None,
        computed: None,
        matched: false,
        conjectural: false,
        resource_limited: false,
        faces: 0,
        millis: None,
        note: String::new(),
    }
}

fn fail(mut rec: InstanceRecord, err: Error) -> InstanceRecord {
    rec.resource_limited = err.is_resource();
    rec.matched = false;
    rec.note = err.to_string();
    rec
}

/// Homology of `Ind(G)`, full range or in a window, with the face count.
pub fn graph_homology(
    g: &Graph,
    window: Option<(usize, usize)>,
    coefficients: Coefficients,
    limits: &Limits,
) -> Result<(BettiTable, usize)> {
    match window {
        None => {
            let k = independence_complex(g, None, limits)?;
            Ok((betti_reduced(&k, coefficients)?, k.face_count()))
        }
        Some((lo, hi)) => {
            let w = faces_in_window(g, lo, hi, limits)?;
            let (betti, torsion) = betti_range(&w, lo as i64, hi as i64, coefficients)?;
            let table = BettiTable { betti, torsion, coefficients, window: Some((lo as i64, hi as i64)) };
            Ok((table, w.face_count()))
        }
    }
}

/// Predicted type of `family` against the homology of its graph.
pub fn check_family(
    suite: Suite,
    family: Family,
    window: Option<(usize, usize)>,
    coefficients: Coefficients,
    opts: &SuiteOptions,
) -> InstanceRecord {
    let timer = Timer::start(opts);
    let mut rec = record(suite, family.to_string());
    let run = || -> Result<(crate::homotopy::Prediction, BettiTable, usize)> {
        let prediction = predict(&family)?;
        let g = family.graph()?;
        let (table, faces) = graph_homology(&g, window, coefficients, &opts.limits)?;
        Ok((prediction, table, faces))
    };
    match run() {
        Ok((prediction, table, faces)) => {
            rec.matched = table.agrees_with(&prediction.homotopy) && table.is_torsion_free();
            rec.conjectural = prediction.is_conjectural();
            rec.predicted = Some(prediction.homotopy);
            rec.status = Some(prediction.status);
            rec.faces = faces;
            rec.note = format!("betti {:?}", table.nonzero());
            if coefficients == Coefficients::Integer {
                rec.note.push_str(if table.is_torsion_free() { ", torsion-free" } else { ", TORSION" });
            }
            rec.computed = Some(table);
        }
        Err(e) => rec = fail(rec, e),
    }
    rec.millis = timer.millis();
    rec
}

fn family_suite(suite: Suite, families: Vec<Family>, opts: &SuiteOptions) -> Vec<InstanceRecord> {
    families
        .into_par_iter()
        .enumerate()
        .map(|(k, f)| {
            let coeff = if k == 0 { Coefficients::Integer } else { opts.coefficients };
            check_family(suite, f, None, coeff, opts)
        })
        .collect()
}

fn table1(opts: &SuiteOptions) -> Vec<InstanceRecord> {
    let mut jobs: Vec<(usize, u64, bool)> = TABLE1.iter().map(|&(n, b)| (n, b, false)).collect();
    jobs.extend(TABLE1.iter().filter(|(n, _)| *n <= 3).map(|&(n, b)| (n, b, true)));
    jobs.into_par_iter()
        .map(|(n, expected, full)| {
            let timer = Timer::start(opts);
            let family = Family::ConjectureK2K3Kn { n };
            let (window, coeff, label) = if full {
                (None, Coefficients::Integer, format!("K2xK3xK{n} full, integer"))
            } else {
                (Some((2, 4)), Coefficients::Mod2, format!("K2xK3xK{n} window [2,4]"))
            };
            let mut rec = record(Suite::Table1, label);
            let target = HomotopyType::spheres(expected, 3);
            match family.graph().and_then(|g| graph_homology(&g, window, coeff, &opts.limits)) {
                Ok((table, faces)) => {
                    rec.matched = table.agrees_with(&target) && table.is_torsion_free();
                    rec.faces = faces;
                    rec.note = format!("beta_3 = {} (table {expected})", table.get(3).unwrap_or(0));
                    rec.computed = Some(table);
                }
                Err(e) => rec = fail(rec, e),
            }
            rec.predicted = Some(target);
            rec.millis = timer.millis();
            rec
        })
        .collect()
}

fn conjecture(opts: &SuiteOptions) -> Vec<InstanceRecord> {
    (2..=6)
        .into_par_iter()
        .map(|n| {
            let f = Family::ConjectureK2K3Kn { n };
            check_family(Suite::Conjecture, f, f.default_window(), Coefficients::Mod2, opts)
        })
        .collect()
}

fn morse_instance(m: usize, n: usize, opts: &SuiteOptions) -> InstanceRecord {
    let timer = Timer::start(opts);
    let family = Family::Product { m, n };
    let mut rec = record(Suite::Morse, format!("{family} element matching"));
    let run = || -> Result<(bool, String, usize)> {
        let g = family.graph()?;
        let k = independence_complex(&g, None, &opts.limits)?;
        let matching = element_matching(&k, &product_order(m, n))?;
        let acyclic = matching.verify_acyclic(&k)?.acyclic;
        let mut expected: Vec<Vec<Label>> = (2..=m)
            .flat_map(|i| (2..=n).map(move |j| vec![Label::pair(i, 1), Label::pair(i, j)]))
            .collect();
        expected.sort();
        let mut critical = matching.critical_labels();
        critical.sort();
        let exact = critical == expected;
        let conclusion = if acyclic { matching.wedge_conclusion(&k)? } else { None };
        let predicted = predict(&family)?.homotopy;
        let ok = acyclic && matching.empty_face_matched() && exact && conclusion.as_ref() == Some(&predicted);
        let note = format!(
            "acyclic {acyclic}, empty face matched {}, critical {:?}, critical set exact {exact}, conclusion {}",
            matching.empty_face_matched(),
            matching.critical_counts(),
            conclusion.map_or("none".into(), |c| c.to_string())
        );
        Ok((ok, note, k.face_count()))
    };
    match run() {
        Ok((ok, note, faces)) => {
            rec.matched = ok;
            rec.note = note;
            rec.faces = faces;
            rec.predicted = Some(crate::homotopy::product_type(m, n));
            rec.status = Some(Status::Proved);
        }
        Err(e) => rec = fail(rec, e),
    }
    rec.millis = timer.millis();
    rec
}

fn gadget(opts: &SuiteOptions) -> Vec<InstanceRecord> {
    let families: Vec<Family> = [3, 4].iter().flat_map(|&n| (1..=7).map(move |t| Family::Gadget { n, t })).collect();
    families
        .into_par_iter()
        .enumerate()
        .map(|(k, f)| {
            let coeff = if k == 0 { Coefficients::Integer } else { opts.coefficients };
            let mut rec = check_family(Suite::Gadget, f, None, coeff, opts);
            let Family::Gadget { t, .. } = f else { unreachable!() };
            if t % 3 == 0 {
                if let Ok(g) = f.graph() {
                    let r = reduce(&g, DEFAULT_BUDGET);
                    let contractible = r.homotopy().is_some_and(HomotopyType::is_contractible);
                    rec.matched &= contractible;
                    let _ = write!(rec.note, ", reduce: {}", r.homotopy().map_or("stuck".into(), ToString::to_string));
                }
            }
            rec
        })
        .collect()
}

fn shift_holds(base: &BettiTable, lifted: &BettiTable) -> bool {
    let shifted: BTreeMap<i64, u64> = base.nonzero().into_iter().map(|(d, b)| (d + 1, b)).collect();
    shifted == lifted.nonzero()
}

fn suspension_instance(
    label: String,
    g: Graph,
    lifted: Result<Graph>,
    opts: &SuiteOptions,
) -> InstanceRecord {
    let timer = Timer::start(opts);
    let mut rec = record(Suite::Suspension, label);
    let run = || -> Result<(BettiTable, BettiTable, usize)> {
        let h = lifted?;
        let (base, _) = graph_homology(&g, None, opts.coefficients, &opts.limits)?;
        let (up, faces) = graph_homology(&h, None, opts.coefficients, &opts.limits)?;
        Ok((base, up, faces))
    };
    match run() {
        Ok((base, up, faces)) => {
            rec.matched = shift_holds(&base, &up);
            rec.faces = faces;
            rec.note = format!("base {:?} -> {:?}", base.nonzero(), up.nonzero());
            rec.computed = Some(up);
        }
        Err(e) => rec = fail(rec, e),
    }
    rec.millis = timer.millis();
    rec
}

/// A random graph with a planted crossing (`triangle = false`) or triangle,
/// returned with the chosen vertices.
fn planted(rng: &mut ChaCha8Rng, triangle: bool) -> (Graph, Vec<Label>) {
    let n = rng.gen_range(4..=8);
    let g = random_graph(n, 0.5, rng);
    let mut vs: Vec<Label> = g.labels().to_vec();
    vs.shuffle(rng);
    vs.truncate(if triangle { 3 } else { 4 });
    let needed: Vec<(usize, usize)> = if triangle { vec![(0, 1), (0, 2), (1, 2)] } else { vec![(0, 3), (1, 2), (0, 1)] };
    let mut g = g;
    for (a, b) in needed {
        if !g.has_edge(&vs[a], &vs[b]) {
            g = g.add_edge(&vs[a], &vs[b]).expect("distinct vertices");
        }
    }
    (g, vs)
}

fn describe(g: &Graph) -> String {
    format!("n={} m={}", g.vertex_count(), g.edge_count())
}

fn suspension(opts: &SuiteOptions) -> Vec<InstanceRecord> {
    let count = opts.count.unwrap_or(25);
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut jobs: Vec<(String, Graph, Result<Graph>)> = Vec::new();
    for k in 0..count {
        let n = rng.gen_range(1..=8);
        let g = random_graph(n, 0.5, &mut rng);
        let lifted = generalized_mycielskian(&g, 2);
        jobs.push((format!("M_2 random #{k} {}", describe(&g)), g, lifted));
    }
    for k in 0..count {
        let (g, vs) = planted(&mut rng, false);
        let lifted = ladder_replace_crossing(&g, &vs[0], &vs[1], &vs[2], &vs[3]).map(|r| r.graph);
        jobs.push((format!("crossing random #{k} {}", describe(&g)), g, lifted));
    }
    for k in 0..count {
        let (g, vs) = planted(&mut rng, true);
        let lifted = ladder_replace_triangle(&g, &vs[0], &vs[1], &vs[2]).map(|r| r.graph);
        jobs.push((format!("triangle random #{k} {}", describe(&g)), g, lifted));
    }
    jobs.into_par_iter().map(|(label, g, lifted)| suspension_instance(label, g, lifted, opts)).collect()
}

/// The labelled graph on `1..=n` whose edges are the set bits of `mask`,
/// pairs taken in lexicographic order.
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let pairs = (1..=n as i64).flat_map(|a| (a + 1..=n as i64).map(move |b| (a, b)));
    let edges: Vec<(Label, Label)> = pairs
        .enumerate()
        .filter(|(k, _)| mask >> k & 1 == 1)
        .map(|(_, (a, b))| (Label::Int(a), Label::Int(b)))
        .collect();
    Graph::new((1..=n as i64).map(Label::Int), edges, []).expect("valid graph")
}

/// Outcome of the Morse checks on one graph with one vertex order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorseCheck {
    pub acyclic: bool,
    pub morse_inequalities: bool,
    pub euler: bool,
}

impl MorseCheck {
    pub fn ok(&self) -> bool {
        self.acyclic && self.morse_inequalities && self.euler
    }
}

/// Element matching of `Ind(G)` for `order`, checked for acyclicity,
/// `c_i ≥ β̃_i` in every dimension, and the Euler characteristic.
pub fn morse_check(g: &Graph, order: &[Label], limits: &Limits) -> Result<MorseCheck> {
    let k = independence_complex(g, None, limits)?;
    let m = element_matching(&k, order)?;
    let acyclic = m.verify_acyclic(&k)?.acyclic;
    let betti = betti_reduced(&k, Coefficients::Mod2)?;
    let counts = m.critical_counts();
    let morse_inequalities = betti
        .betti
        .iter()
        .all(|(&d, &b)| counts.get(&(d as isize)).copied().unwrap_or(0) as u64 >= b);
    let euler = m.critical_euler() == k.euler_characteristic_reduced()
        && k.euler_characteristic_reduced() == betti.euler_characteristic();
    Ok(MorseCheck { acyclic, morse_inequalities, euler })
}

fn morse_consistency(opts: &SuiteOptions) -> Vec<InstanceRecord> {
    let total = opts.count.unwrap_or(5000);
    let mut groups: Vec<(String, Vec<Graph>)> = Vec::new();
    let mut used = 0;
    for n in 1..=5usize {
        let edges = n * (n - 1) / 2;
        let graphs: Vec<Graph> = (0..1u64 << edges).take(total - used).map(|mask| graph_from_mask(n, mask)).collect();
        used += graphs.len();
        if !graphs.is_empty() {
            groups.push((format!("all labelled graphs on {n} vertices"), graphs));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ 0x6d6f7273);
    let samples: Vec<Graph> = (used..total).map(|_| random_graph(6, 0.5, &mut rng)).collect();
    if !samples.is_empty() {
        groups.push((format!("{} seeded 6-vertex samples", samples.len()), samples));
    }
    let seed = opts.seed;
    groups
        .into_iter()
        .enumerate()
        .map(|(gi, (label, graphs))| {
            let timer = Timer::start(opts);
            let mut rec = record(Suite::MorseConsistency, label);
            let outcomes: Vec<Result<MorseCheck>> = graphs
                .par_iter()
                .enumerate()
                .map(|(k, g)| {
                    let mut order = g.labels().to_vec();
                    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(((gi as u64) << 32) | k as u64));
                    order.shuffle(&mut rng);
                    morse_check(g, &order, &opts.limits)
                })
                .collect();
            let mut bad = [0usize; 4];
            for o in &outcomes {
                match o {
                    Ok(c) => {
                        bad[0] += usize::from(!c.acyclic);
                        bad[1] += usize::from(!c.morse_inequalities);
                        bad[2] += usize::from(!c.euler);
                    }
                    Err(_) => bad[3] += 1,
                }
            }
            rec.matched = bad.iter().all(|&b| b == 0);
            rec.faces = graphs.len();
            rec.note = format!(
                "{} graphs; cyclic {}, inequality failures {}, euler failures {}, errors {}",
                graphs.len(),
                bad[0],
                bad[1],
                bad[2],
                bad[3]
            );
            rec.millis = timer.millis();
            rec
        })
        .collect()
}

fn values(over: &Option<Vec<usize>>, default: impl IntoIterator<Item = usize>) -> Vec<usize> {
    over.clone().unwrap_or_else(|| default.into_iter().collect())
}

pub fn run_suite(suite: Suite, opts: &SuiteOptions) -> Vec<InstanceRecord> {
    match suite {
        Suite::Table1 => table1(opts),
        Suite::Conjecture => conjecture(opts),
        Suite::Product => {
            let fams = (2..=5).flat_map(|m| (2..=5).map(move |n| Family::Product { m, n })).collect();
            let mut opts = opts.clone();
            opts.coefficients = Coefficients::Integer;
            family_suite(suite, fams, &opts)
        }
        Suite::Morse => {
            let pairs: Vec<(usize, usize)> = (2..=6).flat_map(|m| (2..=6).map(move |n| (m, n))).collect();
            pairs.into_par_iter().map(|(m, n)| morse_instance(m, n, opts)).collect()
        }
        Suite::Mycielskian => {
            let ns = values(&opts.n_values, [3, 4]);
            let rs = values(&opts.r_values, 2..=7);
            let fams = ns.iter().flat_map(|&n| rs.iter().map(move |&r| Family::Mycielskian { n, r })).collect();
            family_suite(suite, fams, opts)
        }
        Suite::KnLr => {
            let ns = values(&opts.n_values, [2, 3, 4]);
            let rs = values(&opts.r_values, 0..=6);
            let fams = ns.iter().flat_map(|&n| rs.iter().map(move |&r| Family::KnLr { n, r })).collect();
            family_suite(suite, fams, opts)
        }
        Suite::Gadget => gadget(opts),
        Suite::Suspension => suspension(opts),
        Suite::CycleLadder => {
            let fams = (3..=11).flat_map(|n| (1..=4).map(move |i| Family::CycleLadder { n, i })).collect();
            family_suite(suite, fams, opts)
        }
        Suite::PathCycle => {
            let fams = (1..=15)
                .map(|n| Family::Path { n })
                .chain((3..=15).map(|n| Family::Cycle { n }))
                .collect();
            family_suite(suite, fams, opts)
        }
        Suite::MorseConsistency => morse_consistency(opts),
    }
}

/// Runs the suites in order and assembles the report.
pub fn run_suites(suites: &[Suite], opts: &SuiteOptions) -> VerificationReport {
    let mut records = Vec::new();
    let mut summaries = Vec::new();
    for &suite in suites {
        let recs = run_suite(suite, opts);
        let matched = recs.iter().filter(|r| r.matched).count();
        summaries.push(SuiteSummary {
            suite,
            instances: recs.len(),
            matched,
            failed: recs.len() - matched,
            gating: suite.gating() || opts.strict_conjectures,
        });
        records.extend(recs);
    }
    let passed = summaries.iter().all(|s| !s.gating || s.failed == 0);
    VerificationReport { seed: opts.seed, records, summaries, passed }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quick() -> SuiteOptions {
        SuiteOptions { deterministic: true, count: Some(4), ..SuiteOptions::default() }
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("everything".parse::<Suite>().is_err());
    }

    #[test]
    fn masks_enumerate_graphs() {
        assert_eq!(graph_from_mask(4, 0).edge_count(), 0);
        assert_eq!(graph_from_mask(4, 0b111111).edge_count(), 6);
        assert!(graph_from_mask(3, 0b001).has_edge(&Label::Int(1), &Label::Int(2)));
        assert!(graph_from_mask(3, 0b100).has_edge(&Label::Int(2), &Label::Int(3)));
    }

    #[test]
    fn small_suites_pass() {
        let opts = SuiteOptions { n_values: Some(vec![3]), r_values: Some(vec![2, 3, 4]), ..quick() };
        let report = run_suites(&[Suite::Mycielskian, Suite::PathCycle, Suite::Suspension], &opts);
        assert!(report.passed, "{}", report.to_table());
        assert_eq!(report.verdict(), Verdict::Pass);
        assert_eq!(report.summaries[0].instances, 3);
    }

    #[test]
    fn reports_are_reproducible() {
        let a = run_suites(&[Suite::Suspension], &quick());
        let b = run_suites(&[Suite::Suspension], &quick());
        assert_eq!(a.to_json(), b.to_json());
    }

    #[test]
    fn resource_limits_are_reported() {
        let opts = SuiteOptions { limits: Limits::new(10), ..quick() };
        let rec = check_family(Suite::Product, Family::Product { m: 3, n: 3 }, None, Coefficients::Mod2, &opts);
        assert!(!rec.matched && rec.resource_limited);
        let report = VerificationReport {
            seed: 0,
            records: vec![rec],
            summaries: vec![SuiteSummary { suite: Suite::Product, instances: 1, matched: 0, failed: 1, gating: true }],
            passed: false,
        };
        assert_eq!(report.verdict(), Verdict::ResourceLimited);
    }
}

//! Enumerates catalog rings and checks each structural theorem both ways:
//! the ring-level prediction against direct computation on the graph.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::budget::IsoResult;
use crate::classifier::{
    classify_genus, classify_planar, constructive_embedding, genus_class_from_graph, predict_connected, GenusClass,
};
use crate::graph::{build_cayley, complete_bipartite, cycle_graph, is_isomorphic, tensor_product, CayleyGraph};
use crate::ring::{build_ring, prime_power, Atom, FiniteRing};
use crate::spec::RingSpec;
use crate::topology::{
    commutator_rotation, euler_genus_lower_bound, genus_complete_bipartite, genus_cycle_tensor, is_planar, min_genus,
    min_genus_seeded, Embedding, GenusCertificate, KuratowskiWitness, Planarity,
};

pub const CATALOG_VERSION: &str = "1";

/// The local atoms: `Z_{p^k}`, `GF(p^k)` for `k >= 2` (`GF(p)` is `Z_p`) and
/// the five named quotients.
pub fn catalog_atoms(max_order: usize) -> Vec<Atom> {
    let mut atoms = Vec::new();
    for q in 2..=max_order as u64 {
        if let Some((p, k)) = prime_power(q) {
            atoms.push(Atom::Zn(q));
            if k >= 2 {
                atoms.push(Atom::Gf { p, k });
            }
        }
    }
    atoms.extend(Atom::NAMED.iter().copied().filter(|a| a.order().unwrap() <= max_order as u128));
    atoms.sort_by_key(|a| (a.order().unwrap(), *a));
    atoms
}

/// Multisets of catalog atoms with product of orders at most `max_order`,
/// ordered by ring order and then by the atom sequence.
pub fn enumerate_rings(max_order: usize) -> Vec<RingSpec> {
    let atoms = catalog_atoms(max_order);
    let mut out: Vec<(usize, Vec<usize>)> = Vec::new();
    fn extend(atoms: &[Atom], start: usize, order: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<(usize, Vec<usize>)>) {
        if !cur.is_empty() {
            out.push((order, cur.clone()));
        }
        for i in start..atoms.len() {
            let o = atoms[i].order().unwrap() as usize;
            if order * o > max {
                break;
            }
            cur.push(i);
            extend(atoms, i, order * o, max, cur, out);
            cur.pop();
        }
    }
    extend(&atoms, 0, 1, max_order, &mut Vec::new(), &mut out);
    out.sort();
    out.into_iter()
        .map(|(_, idx)| RingSpec::product(idx.into_iter().map(|i| RingSpec::Atom(atoms[i])).collect()))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum TheoremId {
    Imp1,
    Imp2,
    Imp3,
    Imp4,
    Conn,
    Planar,
    Main,
    KmnFormula,
    CycleTensor,
}

impl TheoremId {
    pub const ALL: [TheoremId; 9] = [
        TheoremId::Imp1,
        TheoremId::Imp2,
        TheoremId::Imp3,
        TheoremId::Imp4,
        TheoremId::Conn,
        TheoremId::Planar,
        TheoremId::Main,
        TheoremId::KmnFormula,
        TheoremId::CycleTensor,
    ];

    /// The ids checked per ring (the rest are standalone formula checks).
    pub const RING: [TheoremId; 7] = [
        TheoremId::Imp1,
        TheoremId::Imp2,
        TheoremId::Imp3,
        TheoremId::Imp4,
        TheoremId::Conn,
        TheoremId::Planar,
        TheoremId::Main,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TheoremId::Imp1 => "IMP1",
            TheoremId::Imp2 => "IMP2",
            TheoremId::Imp3 => "IMP3",
            TheoremId::Imp4 => "IMP4",
            TheoremId::Conn => "CONN",
            TheoremId::Planar => "PLANAR",
            TheoremId::Main => "MAIN",
            TheoremId::KmnFormula => "KMN_FORMULA",
            TheoremId::CycleTensor => "CYCLE_TENSOR",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TheoremId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        TheoremId::ALL.into_iter().find(|t| t.name().eq_ignore_ascii_case(s)).ok_or_else(|| format!("unknown theorem id {s}"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub spec: String,
    pub expected: String,
    pub observed: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Skip {
    pub spec: String,
    pub reason: String,
}

/// Two-sided evidence for a genus verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Evidence {
    pub spec: String,
    pub verdict: GenusClass,
    pub clause: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nonplanarity: Option<NonPlanarity>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Certificate>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "method", rename_all = "kebab-case")]
pub enum NonPlanarity {
    EulerGirth { bound: usize },
    Kuratowski(KuratowskiWitness),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub source: String,
    pub embedding: Embedding,
}

/// Outcome of one theorem on one instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Pass(Option<Evidence>),
    Fail { expected: String, observed: String },
    Skip(String),
    NotApplicable,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub id: TheoremId,
    pub checked: usize,
    pub failures: Vec<Failure>,
    pub skipped: Vec<Skip>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub evidence: Vec<Evidence>,
}

impl TheoremReport {
    fn new(id: TheoremId) -> Self {
        TheoremReport { id, checked: 0, failures: vec![], skipped: vec![], evidence: vec![] }
    }

    fn record(&mut self, spec: &str, outcome: Outcome) {
        match outcome {
            Outcome::Pass(ev) => {
                self.checked += 1;
                self.evidence.extend(ev);
            }
            Outcome::Fail { expected, observed } => {
                self.checked += 1;
                self.failures.push(Failure { spec: spec.into(), expected, observed });
            }
            Outcome::Skip(reason) => self.skipped.push(Skip { spec: spec.into(), reason }),
            Outcome::NotApplicable => {}
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub catalog_version: String,
    pub max_order: usize,
    pub rings: usize,
    pub theorems: Vec<TheoremReport>,
}

impl SuiteReport {
    pub fn failure_count(&self) -> usize {
        self.theorems.iter().map(|t| t.failures.len()).sum()
    }

    pub fn skip_count(&self) -> usize {
        self.theorems.iter().map(|t| t.skipped.len()).sum()
    }

    pub fn theorem(&self, id: TheoremId) -> Option<&TheoremReport> {
        self.theorems.iter().find(|t| t.id == id)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Graph and ring of one instance, built once and shared by every check.
pub struct Instance {
    pub spec: RingSpec,
    pub ring: FiniteRing,
    pub graph: CayleyGraph,
}

impl Instance {
    pub fn new(spec: &RingSpec) -> Result<Self, crate::ring::RingError> {
        let ring = build_ring(spec)?;
        let graph = build_cayley(&ring);
        Ok(Instance { spec: spec.clone(), ring, graph })
    }
}

fn fail(expected: impl ToString, observed: impl ToString) -> Outcome {
    Outcome::Fail { expected: expected.to_string(), observed: observed.to_string() }
}

pub fn check_theorem(id: TheoremId, spec: &RingSpec, budget: u64) -> Outcome {
    match Instance::new(spec) {
        Ok(inst) => check_instance(id, &inst, budget),
        Err(e) => Outcome::Skip(format!("ring construction failed: {e}")),
    }
}

pub fn check_instance(id: TheoremId, inst: &Instance, budget: u64) -> Outcome {
    let (r, g) = (&inst.ring, &inst.graph);
    match id {
        TheoremId::Imp1 => match g.is_regular() {
            Some(d) if d.is_power_of_two() => Outcome::Pass(None),
            Some(d) => fail("2^t-regular", format!("{d}-regular")),
            None => fail("2^t-regular", "not regular"),
        },
        TheoremId::Imp2 => {
            if r.order() % 2 == 0 || !r.is_local() {
                return Outcome::NotApplicable;
            }
            let chr = r.characteristic();
            let expected = vec![chr; r.order() / chr];
            match g.cycle_decomposition() {
                Ok(cycles) if cycles == expected => Outcome::Pass(None),
                Ok(cycles) => fail(format!("{} cycles of length {chr}", expected.len()), format!("cycles {cycles:?}")),
                Err(e) => fail(format!("{} cycles of length {chr}", expected.len()), e),
            }
        }
        TheoremId::Imp3 => {
            let (want, got) = (r.order() % 2 == 0, g.is_bipartite());
            if want == got {
                Outcome::Pass(None)
            } else {
                fail(format!("bipartite = {want}"), format!("bipartite = {got}"))
            }
        }
        TheoremId::Imp4 => {
            let d = r.local_decomposition();
            if d.len() < 2 {
                return Outcome::NotApplicable;
            }
            let graphs: Vec<CayleyGraph> = d.factors().iter().map(build_cayley).collect();
            let degree: usize = graphs.iter().map(|h| h.is_regular().unwrap_or(0)).product();
            if g.is_regular() != Some(degree) {
                return fail(format!("{degree}-regular"), format!("{:?}", g.is_regular()));
            }
            let tensor = graphs.into_iter().reduce(|a, b| tensor_product(&a, &b)).unwrap();
            match is_isomorphic(g, &tensor, budget) {
                IsoResult::Isomorphic(_) => Outcome::Pass(None),
                IsoResult::NotIsomorphic => fail("isomorphic to the tensor of factor graphs", "not isomorphic"),
                IsoResult::Indeterminate => Outcome::Skip("budget: isomorphism search".into()),
            }
        }
        TheoremId::Conn => {
            let (want, got) = (predict_connected(&r.local_decomposition()), g.is_connected());
            if want == got {
                Outcome::Pass(None)
            } else {
                fail(format!("connected = {want}"), format!("connected = {got}"))
            }
        }
        TheoremId::Planar => {
            let want = classify_planar(&r.local_decomposition());
            let got = is_planar(g).is_planar();
            let low_degree = matches!(g.is_regular(), Some(1 | 2));
            if want == got && got == low_degree {
                Outcome::Pass(None)
            } else {
                fail(format!("planar = {want}"), format!("planar = {got}, 1- or 2-regular = {low_degree}"))
            }
        }
        TheoremId::Main => check_main(inst, budget),
        TheoremId::KmnFormula | TheoremId::CycleTensor => Outcome::NotApplicable,
    }
}

fn nonplanarity(g: &CayleyGraph) -> Option<NonPlanarity> {
    if g.is_connected() && g.vertex_count() >= 3 {
        if let Ok(bound) = euler_genus_lower_bound(g) {
            if bound >= 1 {
                return Some(NonPlanarity::EulerGirth { bound });
            }
        }
    }
    match is_planar(g) {
        Planarity::NonPlanar(w) if w.verify(g) => Some(NonPlanarity::Kuratowski(w)),
        _ => None,
    }
}

fn check_main(inst: &Instance, budget: u64) -> Outcome {
    let (r, g) = (&inst.ring, &inst.graph);
    let verdict = classify_genus(&r.local_decomposition());
    let graph_verdict = match genus_class_from_graph(g) {
        Ok(v) => v,
        Err(e) => return fail(verdict.class.to_string(), e),
    };
    if verdict.class != graph_verdict.class {
        return fail(verdict.class.to_string(), graph_verdict.class.to_string());
    }
    let mut ev = Evidence {
        spec: inst.spec.to_string(),
        verdict: verdict.class,
        clause: verdict.clause,
        nonplanarity: None,
        certificate: None,
    };
    match verdict.class {
        GenusClass::Planar => {
            if !is_planar(g).is_planar() {
                return fail("planar embedding", "planarity test failed");
            }
        }
        GenusClass::Toroidal => {
            ev.nonplanarity = nonplanarity(g);
            if ev.nonplanarity.is_none() {
                return fail("non-planar", "planar");
            }
            let constructed = constructive_embedding(r);
            ev.certificate = match constructed {
                Some(c) => Some(Certificate { source: c.family, embedding: c.embedding }),
                None => match min_genus(g, budget) {
                    GenusCertificate::Embedding(e) if e.genus == 1 => {
                        Some(Certificate { source: "branch-and-bound search".into(), embedding: e })
                    }
                    GenusCertificate::Embedding(e) => return fail("genus 1", format!("genus {}", e.genus)),
                    _ => return Outcome::Skip("budget: genus search".into()),
                },
            };
        }
        GenusClass::Higher { degree, connected } => {
            if !(degree >= 8 || (degree == 4 && !connected)) {
                return fail("degree >= 8, or 4-regular and disconnected", format!("{degree}-regular, connected = {connected}"));
            }
        }
    }
    Outcome::Pass(Some(ev))
}

fn kmn_report(budget: u64) -> TheoremReport {
    let mut report = TheoremReport::new(TheoremId::KmnFormula);
    let cases: Vec<(usize, usize)> = (2..=6).map(|k| (2, k)).chain([(3, 3), (3, 4), (4, 4)]).collect();
    for (m, n) in cases {
        let name = format!("K_{{{m},{n}}}");
        let formula = genus_complete_bipartite(m, n).expect("m, n >= 2");
        let g = complete_bipartite(m, n).expect("nonempty sides");
        let outcome = match min_genus(&g, budget).exact_genus() {
            Some(found) if found == formula => Outcome::Pass(None),
            Some(found) => fail(formula, found),
            None => Outcome::Skip("budget: genus search".into()),
        };
        report.record(&name, outcome);
    }
    report
}

/// `C_m (x) C_n` for `3 <= m, n <= 9`: component count, and a commutator
/// embedding whose genus matches the formula, with every component
/// non-planar.
fn cycle_tensor_report() -> TheoremReport {
    let mut report = TheoremReport::new(TheoremId::CycleTensor);
    for m in 3..=9usize {
        for n in 3..=9usize {
            let name = format!("C_{m} (x) C_{n}");
            let formula = genus_cycle_tensor(m, n).expect("lengths >= 3");
            let g = tensor_product(&cycle_graph(m).unwrap(), &cycle_graph(n).unwrap());
            let components = g.connected_components();
            let expected_components = if m % 2 == 0 && n % 2 == 0 { 2 } else { 1 };
            if components.len() != expected_components {
                report.record(&name, fail(format!("{expected_components} components"), components.len()));
                continue;
            }
            let add = |x: usize, y: usize| ((x / n + y / n) % m) * n + (x % n + y % n) % n;
            let neg = |x: usize| ((m - x / n) % m) * n + (n - x % n) % n;
            let rot = commutator_rotation(m * n, n + 1, 2 * n - 1, add, neg).expect("distinct generators");
            let genus = Embedding::from_rotation(&g, rot).expect("valid rotation").genus;
            let lower: usize = components
                .iter()
                .map(|c| {
                    let h = g.induced(c);
                    let euler = euler_genus_lower_bound(&h).unwrap_or(0);
                    usize::from(euler >= 1 || !is_planar(&h).is_planar())
                })
                .sum();
            let outcome = if genus == formula && lower == formula {
                Outcome::Pass(None)
            } else {
                fail(formula, format!("embedding genus {genus}, lower bound {lower}"))
            };
            report.record(&name, outcome);
        }
    }
    report
}

#[derive(Debug, Clone)]
pub struct SuiteOptions {
    pub max_order: usize,
    pub budget: u64,
    pub theorems: Vec<TheoremId>,
}

impl SuiteOptions {
    pub fn new(max_order: usize, budget: u64) -> Self {
        SuiteOptions { max_order, budget, theorems: TheoremId::ALL.to_vec() }
    }
}

pub fn run_suite(max_order: usize, budget: u64) -> SuiteReport {
    run_suite_with(&SuiteOptions::new(max_order, budget))
}

pub fn run_suite_with(opts: &SuiteOptions) -> SuiteReport {
    let specs = enumerate_rings(opts.max_order);
    let ring_ids: Vec<TheoremId> = TheoremId::RING.into_iter().filter(|t| opts.theorems.contains(t)).collect();
    let mut reports: Vec<TheoremReport> = ring_ids.iter().map(|&t| TheoremReport::new(t)).collect();
    for spec in &specs {
        let name = spec.to_string();
        match Instance::new(spec) {
            Ok(inst) => {
                for (report, &id) in reports.iter_mut().zip(&ring_ids) {
                    report.record(&name, check_instance(id, &inst, opts.budget));
                }
            }
            Err(e) => {
                for report in &mut reports {
                    report.record(&name, Outcome::Skip(format!("ring construction failed: {e}")));
                }
            }
        }
    }
    if opts.theorems.contains(&TheoremId::KmnFormula) {
        reports.push(kmn_report(opts.budget));
    }
    if opts.theorems.contains(&TheoremId::CycleTensor) {
        reports.push(cycle_tensor_report());
    }
    SuiteReport { catalog_version: CATALOG_VERSION.into(), max_order: opts.max_order, rings: specs.len(), theorems: reports }
}

/// Seeds the genus search with a constructive embedding when one applies.
pub fn seeded_genus(r: &FiniteRing, g: &CayleyGraph, budget: u64) -> GenusCertificate {
    match constructive_embedding(r) {
        Some(c) => min_genus_seeded(g, budget, Some(&c.embedding.rotation_system())),
        None => min_genus(g, budget),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse_ring_spec;

    fn spec(t: &str) -> RingSpec {
        parse_ring_spec(t).unwrap()
    }

    #[test]
    fn small_enumerations() {
        let names: Vec<String> = enumerate_rings(4).iter().map(|s| s.to_string()).collect();
        assert_eq!(names, ["Z2", "Z3", "Z2 x Z2", "Z4", "GF(4)", "Z2[x]/(x^2)"]);
        let eight: Vec<String> = enumerate_rings(8).iter().map(|s| s.to_string()).collect();
        for want in ["Z8", "GF(8)", "Z2[x]/(x^3)", "Z4[x]/(2x,x^2-2)", "Z2[x,y]/(x^2,xy,y^2)", "Z4[x]/(x^2,2x)", "Z2 x Z2 x Z2"] {
            assert!(eight.contains(&want.to_string()), "{want}");
        }
    }

    #[test]
    fn enumeration_is_deduplicated() {
        let specs = enumerate_rings(40);
        let mut multisets: Vec<Vec<Atom>> = specs
            .iter()
            .map(|s| {
                let mut a = s.atoms();
                a.sort();
                a
            })
            .collect();
        let before = multisets.len();
        multisets.sort();
        multisets.dedup();
        assert_eq!(multisets.len(), before);
        assert!(specs.iter().all(|s| s.order().unwrap() <= 40));
    }

    #[test]
    fn worked_instances() {
        assert_eq!(check_theorem(TheoremId::Imp3, &spec("Z15"), 1000), Outcome::Pass(None));
        assert_eq!(check_theorem(TheoremId::Imp2, &spec("GF(49)"), 1000), Outcome::Pass(None));
        match check_theorem(TheoremId::Main, &spec("Z8"), 1_000_000) {
            Outcome::Pass(Some(ev)) => {
                assert_eq!(ev.verdict, GenusClass::Toroidal);
                assert_eq!(ev.nonplanarity, Some(NonPlanarity::EulerGirth { bound: 1 }));
                assert_eq!(ev.certificate.unwrap().embedding.genus, 1);
            }
            other => panic!("{other:?}"),
        }
        assert_eq!(check_theorem(TheoremId::Imp4, &spec("Z8"), 1000), Outcome::NotApplicable);
    }

    #[test]
    fn z15_nonplanarity_comes_from_euler() {
        match check_theorem(TheoremId::Main, &spec("Z15"), 1_000_000) {
            Outcome::Pass(Some(ev)) => {
                assert_eq!(ev.nonplanarity, Some(NonPlanarity::EulerGirth { bound: 1 }));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn theorem_ids_round_trip() {
        for t in TheoremId::ALL {
            assert_eq!(t.name().parse::<TheoremId>(), Ok(t));
        }
        assert!("IMP9".parse::<TheoremId>().is_err());
    }
}

//! Verification suites. Each suite runs a family of independent checks over one
//! quiver and returns a [`VerificationReport`]; checks are listed in case order,
//! so reports are reproducible for a fixed seed.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::catalog::Catalog;
use crate::character::{cc_copres, cc_decorated, grassmannian_table};
use crate::cluster::{initial_seed, mutate, AlmostPositiveRoot, MonomialFactor};
use crate::copres::{
    enumerate_orbits, generic_copresentation, realize, sample_generic_oracle, CopresClass,
    Copresentation,
};
use crate::einvariant::{
    d_invariant, decorated_of_copres, e_copres, e_copres_concrete, e_decorated, pole_order, self_e_orbit, DecoratedRep,
    EValue,
};
use crate::error::{Error, Result};
use crate::laurent::LaurentPolynomial;
use crate::quiver::{DimVector, DynkinType, Family, Quiver, WVector};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub case: String,
    pub expected: String,
    pub got: String,
    pub pass: bool,
}

impl Check {
    pub fn new(case: impl Into<String>, expected: impl ToString, got: impl ToString) -> Self {
        let (expected, got) = (expected.to_string(), got.to_string());
        Check {
            case: case.into(),
            pass: expected == got,
            expected,
            got,
        }
    }

    fn failed(case: impl Into<String>, expected: impl ToString, err: impl fmt::Display) -> Self {
        Check {
            case: case.into(),
            expected: expected.to_string(),
            got: format!("error: {err}"),
            pass: false,
        }
    }

    fn from_result(case: impl Into<String>, expected: impl ToString, got: Result<impl ToString>) -> Self {
        match got {
            Ok(g) => Check::new(case, expected, g),
            Err(e) => Check::failed(case, expected, e),
        }
    }
}

/// A check, or a case too large to count.
enum Entry {
    Done(Check),
    Skipped(String),
}

impl Entry {
    fn from_result(case: impl Into<String>, expected: impl ToString, got: Result<impl ToString>) -> Self {
        match got {
            Err(Error::TooLarge(m)) => Entry::Skipped(format!("{}: {m}", case.into())),
            got => Entry::Done(Check::from_result(case, expected, got)),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub quiver: String,
    pub passed: usize,
    pub failed: usize,
    pub checks: Vec<Check>,
    /// Cases left out because a point count exceeded its enumeration budget.
    pub skipped: Vec<String>,
    /// Left out of the JSON form so that reports compare byte for byte.
    #[serde(skip)]
    pub duration: Duration,
}

impl VerificationReport {
    fn new(suite: Suite, q: &Quiver, checks: Vec<Check>, started: Instant) -> Self {
        let passed = checks.iter().filter(|c| c.pass).count();
        VerificationReport {
            suite: suite.name().to_string(),
            quiver: describe(q),
            passed,
            failed: checks.len() - passed,
            checks,
            skipped: Vec::new(),
            duration: started.elapsed(),
        }
    }

    fn from_entries(suite: Suite, q: &Quiver, entries: Vec<Entry>, started: Instant) -> Self {
        let mut checks = Vec::new();
        let mut skipped = Vec::new();
        for e in entries {
            match e {
                Entry::Done(c) => checks.push(c),
                Entry::Skipped(s) => skipped.push(s),
            }
        }
        let mut r = Self::new(suite, q, checks, started);
        r.skipped = skipped;
        r
    }

    pub fn ok(&self) -> bool {
        self.failed == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:<14} {:<16} {:>7} passed {:>5} failed {:>5} skipped {:>9.2?}",
            self.suite,
            self.quiver,
            self.passed,
            self.failed,
            self.skipped.len(),
            self.duration
        )
    }
}

/// `A3 [1,2,3]`: type and height function.
pub fn describe(q: &Quiver) -> String {
    format!("{} {}", q.dynkin_type(), q.height())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Graph,
    Formula,
    Denominators,
    Characters,
    Equivalence,
    ThreeMethod,
    MainTheorem,
    CcBijection,
    Oracle,
    Directedness,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::Graph,
        Suite::Formula,
        Suite::Denominators,
        Suite::Characters,
        Suite::Equivalence,
        Suite::ThreeMethod,
        Suite::MainTheorem,
        Suite::CcBijection,
        Suite::Oracle,
        Suite::Directedness,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Graph => "graph",
            Suite::Formula => "formula",
            Suite::Denominators => "denominators",
            Suite::Characters => "characters",
            Suite::Equivalence => "equivalence",
            Suite::ThreeMethod => "three-method",
            Suite::MainTheorem => "main-theorem",
            Suite::CcBijection => "cc-bijection",
            Suite::Oracle => "oracle",
            Suite::Directedness => "directedness",
        }
    }

    pub fn from_name(s: &str) -> Option<Suite> {
        Suite::ALL.into_iter().find(|x| x.name() == s)
    }
}

/// Number of oracle seeds tried per w-vector.
pub const ORACLE_SEEDS: u64 = 5;

#[derive(Debug, Clone)]
pub struct SuiteOptions {
    /// Upper bound on the w-vectors tested.
    pub bound: WVector,
    /// Upper bound for suites that range over pairs of w-vectors.
    pub pair_bound: WVector,
    pub seed: u64,
}

impl SuiteOptions {
    pub fn for_quiver(q: &Quiver, seed: u64) -> Self {
        let b = default_box(&q.dynkin_type());
        let n = q.rank();
        SuiteOptions {
            bound: WVector::uniform(n, b),
            pair_bound: WVector::uniform(n, default_pair_box(&q.dynkin_type())),
            seed,
        }
    }

    pub fn with_bound(mut self, b: WVector) -> Self {
        self.pair_bound = b.clone();
        self.bound = b;
        self
    }
}

/// Entries ≤ 1 for type E, ≤ 2 for types A and D up to rank 4, ≤ 1 beyond.
pub fn default_box(ty: &DynkinType) -> i64 {
    match ty.family() {
        Family::E => 1,
        _ if ty.rank() <= 4 => 2,
        _ => 1,
    }
}

/// Pairs of w-vectors grow quadratically, so from rank 4 on pairwise suites use entries ≤ 1.
pub fn default_pair_box(ty: &DynkinType) -> i64 {
    if ty.rank() <= 3 {
        default_box(ty)
    } else {
        1
    }
}

pub fn run_suite(cat: &Catalog, suite: Suite, opts: &SuiteOptions) -> VerificationReport {
    match suite {
        Suite::Graph => suite_graph(cat),
        Suite::Formula => suite_formula(cat),
        Suite::Denominators => suite_denominators(cat),
        Suite::Characters => suite_characters(cat),
        Suite::Equivalence => suite_equivalence(cat),
        Suite::ThreeMethod => suite_three_method(cat, &opts.bound),
        Suite::MainTheorem => suite_main_theorem_consistency(cat, &opts.pair_bound),
        Suite::CcBijection => suite_cc_bijection(cat, &opts.bound, opts.seed),
        Suite::Oracle => suite_oracle(cat, &opts.bound, opts.seed),
        Suite::Directedness => suite_directedness(cat),
    }
}

pub fn run_all(cat: &Catalog, opts: &SuiteOptions) -> Vec<VerificationReport> {
    Suite::ALL.iter().map(|&s| run_suite(cat, s, opts)).collect()
}

/// `∏ (h + e_i + 1) / (e_i + 1)` over the exponents of the root system.
pub fn expected_cluster_count(ty: &DynkinType) -> u64 {
    let n = ty.rank() as u64;
    let (h, exps): (u64, Vec<u64>) = match ty.family() {
        Family::A => (n + 1, (1..=n).collect()),
        Family::D => (2 * n - 2, (0..n - 1).map(|k| 2 * k + 1).chain([n - 1]).collect()),
        Family::E => match n {
            6 => (12, vec![1, 4, 5, 7, 8, 11]),
            7 => (18, vec![1, 5, 7, 9, 11, 13, 17]),
            _ => (30, vec![1, 7, 11, 13, 17, 19, 23, 29]),
        },
    };
    let num: u128 = exps.iter().map(|&e| (h + e + 1) as u128).product();
    let den: u128 = exps.iter().map(|&e| (e + 1) as u128).product();
    (num / den) as u64
}

pub fn suite_graph(cat: &Catalog) -> VerificationReport {
    let started = Instant::now();
    let q = cat.quiver();
    let ty = q.dynkin_type();
    let mut checks = Vec::new();
    match cat.graph() {
        Ok(g) => {
            checks.push(Check::new("variables", ty.num_positive_roots() + ty.rank(), g.num_variables()));
            checks.push(Check::new("clusters", expected_cluster_count(&ty), g.num_clusters()));
            checks.push(Check::new("edges", g.num_clusters() * ty.rank() / 2, g.edges().len()));
            let roots: Vec<String> = AlmostPositiveRoot::all(&ty).iter().map(ToString::to_string).collect();
            let got: Vec<String> = g.roots().iter().map(ToString::to_string).collect();
            checks.push(Check::new("denominator roots", roots.join(" "), got.join(" ")));
        }
        Err(e) => checks.push(Check::failed("exchange graph", "a finite graph", e)),
    }
    VerificationReport::new(Suite::Graph, q, checks, started)
}

/// `x_i^{-1} (∏_j x_j^{n_ij} x_{j'}^{n_ji} + x_{i'} ∏_j x_j^{n_ji})`.
pub fn first_mutation_formula(q: &Quiver, i: usize) -> LaurentPolynomial {
    let n = q.rank();
    let nm = q.arrow_count_matrix();
    let mut a = vec![0i32; 2 * n];
    let mut b = vec![0i32; 2 * n];
    for j in 0..n {
        a[j] = nm[i][j] as i32;
        a[n + j] = nm[j][i] as i32;
        b[j] = nm[j][i] as i32;
    }
    b[n + i] = 1;
    let sum = LaurentPolynomial::monomial(a, 1).add(&LaurentPolynomial::monomial(b, 1));
    let mut inv = vec![0i32; 2 * n];
    inv[i] = -1;
    sum.mul(&LaurentPolynomial::monomial(inv, 1))
}

pub fn suite_formula(cat: &Catalog) -> VerificationReport {
    let started = Instant::now();
    let q = cat.quiver();
    let seed = initial_seed(q);
    let mut checks = Vec::new();
    for i in 0..q.rank() {
        let expected = first_mutation_formula(q, i);
        let case = format!("mutate at {}", i + 1);
        checks.push(Check::from_result(case.clone(), &expected, mutate(&seed, i).map(|s| s.cluster[i].clone())));
        let simple = DecoratedRep::undecorated(cat.indecomposable(cat.root_index(&DimVector::unit(q.rank(), i)).expect("simple root")).clone());
        checks.push(Check::from_result(format!("{case} vs CC(S_{})", i + 1), &expected, cc_decorated(cat, &simple)));
    }
    VerificationReport::new(Suite::Formula, q, checks, started)
}

/// `ℳ[α]`: `(M_α, 0)` for a positive root, `(0, δ_i)` for `-α_i`.
pub fn decorated_of_root(cat: &Catalog, r: &AlmostPositiveRoot) -> DecoratedRep {
    let q = cat.quiver();
    match r {
        AlmostPositiveRoot::NegSimple(i) => DecoratedRep::new(
            crate::rep::Representation::zero(q),
            DimVector::unit(q.rank(), *i),
        ),
        AlmostPositiveRoot::Positive(a) => {
            DecoratedRep::undecorated(cat.indecomposable(cat.root_index(a).expect("catalog root")).clone())
        }
    }
}

pub fn suite_denominators(cat: &Catalog) -> VerificationReport {
    let started = Instant::now();
    let q = cat.quiver();
    let ty = q.dynkin_type();
    let roots = AlmostPositiveRoot::all(&ty);
    let graph = cat.graph();
    let entries: Vec<Vec<Entry>> = cat.exec().map(&roots, |r| {
        let case = format!("{r}");
        let cc = match cc_decorated(cat, &decorated_of_root(cat, r)) {
            Ok(cc) => cc,
            Err(e) => return vec![Entry::from_result(case, r, Err::<String, _>(e))],
        };
        let mut out = vec![Entry::from_result(
            format!("{case} denominator"),
            r,
            crate::cluster::denominator_root(&ty, &cc),
        )];
        if let Ok(g) = graph {
            let var = g.variable(r).map(ToString::to_string).unwrap_or_else(|| "missing".into());
            out.push(Entry::Done(Check::new(format!("{case} cluster variable"), var, &cc)));
        }
        out
    });
    VerificationReport::from_entries(Suite::Denominators, q, entries.into_iter().flatten().collect(), started)
}

/// Grassmannian Euler characteristics of the indecomposables are non-negative and the
/// character is multiplicative on every pair of indecomposables.
pub fn suite_characters(cat: &Catalog) -> VerificationReport {
    let started = Instant::now();
    let q = cat.quiver();
    let r = cat.roots().len();
    let mut entries = Vec::new();
    let tables = cat.exec().map_range(r, |a| grassmannian_table(cat, cat.indecomposable(a)));
    for (a, t) in tables.into_iter().enumerate() {
        let case = format!("Gr(M{})", cat.roots()[a]);
        match t {
            Ok(rows) => {
                let negative: Vec<String> = rows.iter().filter(|x| x.chi < 0).map(|x| format!("{:?}", x.v)).collect();
                entries.push(Entry::Done(Check::new(
                    format!("{case} non-negative"),
                    "[]",
                    format!("[{}]", negative.join(" ")),
                )));
                let probes = rows.iter().filter(|x| x.f2_probe.is_some()).count();
                entries.push(Entry::Done(Check::new(
                    format!("{case} F2 probes"),
                    "run",
                    if probes > 0 { "run" } else { "skipped" },
                )));
            }
            Err(e) => entries.push(Entry::from_result(case, "a table", Err::<String, _>(e))),
        }
    }
    let singles = cat.class_cc();
    let pairs: Vec<(usize, usize)> = (0..r).flat_map(|a| (a..r).map(move |b| (a, b))).collect();
    let pair_entries = cat.exec().map(&pairs, |&(a, b)| {
        let case = format!("CC(M{} + M{})", cat.roots()[a], cat.roots()[b]);
        let expected = match (&singles[a], &singles[b]) {
            (Ok(x), Ok(y)) => x.mul(y),
            (Err(e), _) | (_, Err(e)) => return Entry::from_result(case, "product", Err::<String, _>(e.clone())),
        };
        let m = cat.indecomposable(a).direct_sum(cat.indecomposable(b));
        Entry::from_result(case, expected, cc_decorated(cat, &DecoratedRep::undecorated(m)))
    });
    entries.extend(pair_entries);
    VerificationReport::from_entries(Suite::Characters, q, entries, started)
}

/// Compatible in the exchange graph, `d = 0`, and `E` vanishing both ways coincide.
pub fn suite_equivalence(cat: &Catalog) -> VerificationReport {
    let started = Instant::now();
    let q = cat.quiver();
    let roots = AlmostPositiveRoot::all(&q.dynkin_type());
    let graph = match cat.graph() {
        Ok(g) => g,
        Err(e) => {
            let checks = vec![Check::failed("exchange graph", "a finite graph", e)];
            return VerificationReport::new(Suite::Equivalence, q, checks, started);
        }
    };
    let decorated: Vec<DecoratedRep> = roots.iter().map(|r| decorated_of_root(cat, r)).collect();
    let ws: Vec<WVector> = roots
        .iter()
        .map(|r| cat.class_w(cat.class_index(&cat.class_of_root(r)).expect("catalog class")).clone())
        .collect();
    let pairs: Vec<(usize, usize)> = (0..roots.len()).flat_map(|a| (a..roots.len()).map(move |b| (a, b))).collect();
    let checks = cat.exec().map(&pairs, |&(a, b)| {
        let case = format!("({}, {})", roots[a], roots[b]);
        let compatible = graph.are_compatible(&roots[a], &roots[b]);
        let got = (|| -> Result<String> {
            let d = d_invariant(cat, &ws[a], &ws[b])?;
            let e = e_decorated(q, &decorated[a], &decorated[b])? + e_decorated(q, &decorated[b], &decorated[a])?;
            Ok(format!("compatible={} d={} e={}", compatible, d.dim() == 0, e.dim() == 0))
        })();
        let expected = format!("compatible={compatible} d={compatible} e={compatible}");
        Check::from_result(case, expected, got)
    });
    VerificationReport::new(Suite::Equivalence, q, checks, started)
}

/// For every orbit of every `X(w)` in the box: orbit codimension, the pairwise table and
/// `E(ℳ, ℳ)` agree, and the generic point is the unique orbit with vanishing self-E.
pub fn suite_three_method(cat: &Catalog, bound: &WVector) -> VerificationReport {
    let started = Instant::now();
    let q = cat.quiver();
    let ws = WVector::boxed(bound);
    let checks = cat.exec().map(&ws, |w| {
        let mut out = Vec::new();
        let generic = match generic_copresentation(cat, w) {
            Ok(g) => g,
            Err(e) => return vec![Check::failed(format!("w={w}"), "generic", e)],
        };
        let mut rigid = Vec::new();
        for phi in enumerate_orbits(cat, w) {
            let case = format!("w={w} {phi}");
            let psi = realize(cat, &phi);
            let by_orbit = self_e_orbit(q, &psi);
            let by_table = e_copres(cat, &phi, &phi);
            let got = e_decorated(q, &decorated_of_copres(cat, &phi), &decorated_of_copres(cat, &phi));
            let triple = got.map(|d| format!("{by_orbit} {by_table} {d}"));
            out.push(Check::from_result(case, format!("{by_orbit} {by_orbit} {by_orbit}"), triple));
            if by_orbit.dim() == 0 {
                rigid.push(phi.to_string());
            }
        }
        out.push(Check::new(format!("w={w} rigid orbits"), &generic, rigid.join(" | ")));
        out
    });
    VerificationReport::new(Suite::ThreeMethod, q, checks.concat(), started)
}

struct GenericData {
    phi: Copresentation,
    summands: Vec<WVector>,
    decorated: DecoratedRep,
}

fn generic_data(cat: &Catalog, w: &WVector) -> Result<GenericData> {
    let phi = generic_copresentation(cat, w)?;
    let summands = phi
        .flatten()
        .iter()
        .map(|c| cat.class_w(cat.class_index(c).expect("catalog class")).clone())
        .collect();
    let decorated = decorated_of_copres(cat, &phi);
    Ok(GenericData { phi, summands, decorated })
}

/// For `w, w'` in the box: `o(w, w')` equals the double sum over summands and `E(ℳ(φ), ℳ(ψ))`;
/// `d(w, w) = 0`.
pub fn suite_main_theorem_consistency(cat: &Catalog, bound: &WVector) -> VerificationReport {
    let started = Instant::now();
    let q = cat.quiver();
    let ws = WVector::boxed(bound);
    let data = cat.exec().map(&ws, |w| generic_data(cat, w));
    let mut summand_o: HashMap<(WVector, WVector), Result<EValue>> = HashMap::new();
    let summand_ws: Vec<WVector> = {
        let mut all: Vec<WVector> = data.iter().flatten().flat_map(|d| d.summands.iter().cloned()).collect();
        all.sort();
        all.dedup();
        all
    };
    for a in &summand_ws {
        for b in &summand_ws {
            summand_o.insert((a.clone(), b.clone()), pole_order(cat, a, b));
        }
    }
    let cases: Vec<(usize, usize)> = (0..ws.len()).flat_map(|a| (0..ws.len()).map(move |b| (a, b))).collect();
    let checks = cat.exec().map(&cases, |&(a, b)| {
        let case = format!("w={} w'={}", ws[a], ws[b]);
        let (da, db) = match (&data[a], &data[b]) {
            (Ok(x), Ok(y)) => (x, y),
            (Err(e), _) | (_, Err(e)) => return Check::failed(case, "generic copresentations", e),
        };
        let got = (|| -> Result<String> {
            let o = e_copres(cat, &da.phi, &db.phi);
            let mut sum = 0usize;
            for x in &da.summands {
                for y in &db.summands {
                    sum += summand_o[&(x.clone(), y.clone())].clone()?.dim();
                }
            }
            let e = e_decorated(q, &da.decorated, &db.decorated)?;
            let mut s = format!("o={o} sum={sum} E={e}");
            if a == b {
                s.push_str(&format!(" d={}", o + o));
            }
            Ok(s)
        })();
        let o = e_copres(cat, &da.phi, &db.phi);
        let mut expected = format!("o={o} sum={o} E={o}");
        if a == b {
            expected.push_str(" d=0");
        }
        Check::from_result(case, expected, got)
    });
    VerificationReport::new(Suite::MainTheorem, q, checks, started)
}

fn monomial_of(cat: &Catalog, phi: &Copresentation) -> Result<LaurentPolynomial> {
    let g = cat.graph()?;
    let n = cat.rank();
    let mut out = LaurentPolynomial::one(2 * n);
    for (c, k) in phi.iter() {
        let factor = match c {
            CopresClass::Nu(i) => LaurentPolynomial::var(2 * n, n + i),
            CopresClass::NegSimple(i) => g.variable(&AlmostPositiveRoot::NegSimple(*i)).expect("variable").clone(),
            CopresClass::Root(a) => g.variable(&AlmostPositiveRoot::Positive(a.clone())).expect("variable").clone(),
        };
        out = out.mul(&factor.pow(k as u32));
    }
    Ok(out)
}

fn factors_as_copres(factors: &[(MonomialFactor, u64)]) -> Copresentation {
    Copresentation::from_counts(factors.iter().map(|(f, k)| {
        let c = match f {
            MonomialFactor::Frozen(i) => CopresClass::Nu(*i),
            MonomialFactor::Variable(AlmostPositiveRoot::NegSimple(i)) => CopresClass::NegSimple(*i),
            MonomialFactor::Variable(AlmostPositiveRoot::Positive(a)) => CopresClass::Root(a.clone()),
        };
        (c, *k)
    }))
}

/// `w ↦ CC(φ(w))` is injective on the box, lands in cluster monomials with the
/// factors predicted by the decomposition, and hits every cluster monomial whose
/// w-vector lies in the box.
pub fn suite_cc_bijection(cat: &Catalog, bound: &WVector, seed: u64) -> VerificationReport {
    let started = Instant::now();
    let q = cat.quiver();
    let ws = WVector::boxed(bound);
    let graph = match cat.graph() {
        Ok(g) => g,
        Err(e) => {
            let checks = vec![Check::failed("exchange graph", "a finite graph", e)];
            return VerificationReport::new(Suite::CcBijection, q, checks, started);
        }
    };
    let values = cat.exec().map(&ws, |w| -> Result<(Copresentation, LaurentPolynomial)> {
        let phi = generic_copresentation(cat, w)?;
        let cc = cc_copres(cat, &phi)?;
        Ok((phi, cc))
    });
    let mut checks = Vec::new();
    let mut skipped = Vec::new();
    let mut seen: BTreeMap<String, WVector> = BTreeMap::new();
    for (w, v) in ws.iter().zip(&values) {
        let case = format!("w={w}");
        let (phi, cc) = match v {
            Ok(x) => x,
            Err(Error::TooLarge(m)) => {
                skipped.push(format!("{case}: {m}"));
                continue;
            }
            Err(e) => {
                checks.push(Check::failed(case, "a character", e));
                continue;
            }
        };
        let membership = graph.is_cluster_monomial(cc).map(|f| factors_as_copres(&f).to_string());
        checks.push(Check::new(
            format!("{case} cluster monomial"),
            phi,
            membership.unwrap_or_else(|| "not a cluster monomial".into()),
        ));
        checks.push(Check::from_result(format!("{case} direct product"), cc, monomial_of(cat, phi)));
        if let Some(other) = seen.insert(cc.to_string(), w.clone()) {
            checks.push(Check::new(format!("{case} injective"), "distinct", format!("equal to w={other}")));
        }
        checks.push(Check::from_result(
            format!("{case} oracle"),
            phi,
            sample_generic_oracle(cat, w, seed),
        ));
    }
    checks.push(Check::new("distinct values", ws.len() - skipped.len(), seen.len()));
    let hit = |phi: &Copresentation| {
        let w = crate::copres::copres_w_vector(cat, phi);
        w.le(bound).then_some(w)
    };
    let mut missed = Vec::new();
    let mut covered = 0usize;
    if let Ok(cones) = cat.cones() {
        for cone in cones {
            for_each_bounded_combination(cat, &cone.classes, bound, &mut |phi| {
                if let Some(w) = hit(phi) {
                    covered += 1;
                    let ok = match &values[ws.iter().position(|x| *x == w).expect("box member")] {
                        Ok((p, _)) => p == phi,
                        Err(e) => matches!(e, Error::TooLarge(_)),
                    };
                    if !ok {
                        missed.push(format!("{phi}"));
                    }
                }
            });
        }
    }
    checks.push(Check::new("monomials in the box hit", "", missed.join(" | ")));
    checks.push(Check::new("monomials in the box found", true, covered > 0));
    let mut r = VerificationReport::new(Suite::CcBijection, q, checks, started);
    r.skipped = skipped;
    r
}

/// Every multiset over `classes` whose w-vector is bounded by `bound`.
fn for_each_bounded_combination(
    cat: &Catalog,
    classes: &[usize],
    bound: &WVector,
    f: &mut impl FnMut(&Copresentation),
) {
    let b = bound.flat();
    let ws: Vec<Vec<i64>> = classes.iter().map(|&c| cat.class_w(c).flat()).collect();
    fn go(
        cat: &Catalog,
        classes: &[usize],
        ws: &[Vec<i64>],
        k: usize,
        rem: &mut Vec<i64>,
        counts: &mut Vec<u64>,
        f: &mut impl FnMut(&Copresentation),
    ) {
        if k == classes.len() {
            f(&Copresentation::from_counts(
                classes.iter().zip(counts.iter()).map(|(&c, &m)| (cat.class(c).clone(), m)),
            ));
            return;
        }
        let mut m = 0u64;
        loop {
            counts[k] = m;
            go(cat, classes, ws, k + 1, rem, counts, f);
            if ws[k].iter().all(|&x| x == 0) {
                break;
            }
            if ws[k].iter().zip(rem.iter()).any(|(&x, &r)| x > r) {
                break;
            }
            for (r, &x) in rem.iter_mut().zip(&ws[k]) {
                *r -= x;
            }
            m += 1;
        }
        for (r, &x) in rem.iter_mut().zip(&ws[k]) {
            *r += x * m as i64;
        }
        counts[k] = 0;
    }
    let mut rem = b;
    let mut counts = vec![0u64; classes.len()];
    go(cat, classes, &ws, 0, &mut rem, &mut counts, f);
}

/// The cone search agrees with random sampling for seeds `seed..seed + ORACLE_SEEDS`.
pub fn suite_oracle(cat: &Catalog, bound: &WVector, seed: u64) -> VerificationReport {
    let started = Instant::now();
    let q = cat.quiver();
    let ws = WVector::boxed(bound);
    let checks = cat.exec().map(&ws, |w| {
        let generic = generic_copresentation(cat, w);
        (seed..seed + ORACLE_SEEDS)
            .map(|s| {
                let case = format!("w={w} seed={s}");
                match &generic {
                    Ok(g) => Check::from_result(case, g, sample_generic_oracle(cat, w, s)),
                    Err(e) => Check::failed(case, "generic", e),
                }
            })
            .collect::<Vec<_>>()
    });
    VerificationReport::new(Suite::Oracle, q, checks.concat(), started)
}

/// For distinct classes `c, c'`: the table agrees with kernels and cokernels, and
/// `min(E(c, c'), E(c', c)) = 0`.
pub fn suite_directedness(cat: &Catalog) -> VerificationReport {
    let started = Instant::now();
    let q = cat.quiver();
    let k = cat.num_classes();
    let pairs: Vec<(usize, usize)> = (0..k).flat_map(|a| (0..k).filter(move |&b| b != a).map(move |b| (a, b))).collect();
    let checks = cat.exec().map(&pairs, |&(a, b)| {
        let (ca, cb) = (cat.class(a), cat.class(b));
        let case = format!("({ca}, {cb})");
        let (pa, pb) = (Copresentation::single(ca.clone()), Copresentation::single(cb.clone()));
        let got = (|| -> Result<String> {
            let ab = e_copres_concrete(cat, &pa, &pb)?;
            let ba = e_copres_concrete(cat, &pb, &pa)?;
            Ok(format!("E={} min={}", ab, ab.min(ba)))
        })();
        Check::from_result(case, format!("E={} min=0", cat.e_table(a, b)), got)
    });
    VerificationReport::new(Suite::Directedness, q, checks, started)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::par::Exec;
    use crate::quiver::build_quiver;

    fn cat(ty: &str, h: &str) -> Catalog {
        Catalog::new(&build_quiver(ty.parse().unwrap(), h.parse().unwrap()).unwrap(), Exec::Sequential).unwrap()
    }

    fn assert_ok(r: &VerificationReport) {
        let bad: Vec<_> = r.failures().take(5).collect();
        assert!(r.ok(), "{r}: {bad:#?}");
    }

    #[test]
    fn cluster_counts_from_exponents() {
        for (t, k) in [("A2", 5), ("A3", 14), ("A4", 42), ("D4", 50), ("D5", 182), ("E6", 833), ("E7", 4160), ("E8", 25080)] {
            assert_eq!(expected_cluster_count(&t.parse().unwrap()), k, "{t}");
        }
    }

    #[test]
    fn a2_suites_pass() {
        let c = cat("A2", "0,1");
        let opts = SuiteOptions::for_quiver(c.quiver(), 0).with_bound(WVector::uniform(2, 1));
        for r in run_all(&c, &opts) {
            assert_ok(&r);
        }
    }

    #[test]
    fn equivalence_pair_counts() {
        let r = suite_equivalence(&cat("A2", "0,1"));
        assert_eq!(r.checks.len(), 15);
        assert_ok(&r);
        let r = suite_equivalence(&cat("A3", "1,2,3"));
        assert_eq!(r.checks.len(), 45);
        assert_ok(&r);
    }

    #[test]
    fn reports_are_reproducible() {
        let c = cat("A2", "1,0");
        let opts = SuiteOptions::for_quiver(c.quiver(), 7);
        let a = serde_json::to_string(&run_suite(&c, Suite::Oracle, &opts)).unwrap();
        let b = serde_json::to_string(&run_suite(&c, Suite::Oracle, &opts)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn a_wrong_expectation_is_reported() {
        let c = Check::new("x", 1, 2);
        assert!(!c.pass);
        assert_eq!(Suite::from_name("three-method"), Some(Suite::ThreeMethod));
        assert_eq!(Suite::from_name("nope"), None);
    }
}

//! Named verification suites with CSV reporting.
//!
//! Each check compares library output against an independent computation
//! (a closed formula, brute force, or a second algorithm) and reports
//! `pass`, `fail` or `inconclusive` (a cap was hit).

use std::collections::HashSet;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::algebra::GroupTable;
use crate::caps::Caps;
use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::extremal::{binary_exponents, crown_lower_bound, graph_clique_minor_with_caps, kostochka_family, SimpleGraph};
use crate::frame::{dowling, frame_circuits, frame_matroid, frame_rank, BiasedGraph, Gain};
use crate::linear::{affine_geometry_with_caps, coupled_example, crown_with_caps, projective_geometry_with_caps};
use crate::matroid::{complete_graphic, is_simple, MatroidHandle};
use crate::search::{find_restriction_with_caps, has_clique_minor_with_caps, has_line_minor_with_caps};
use crate::towers::{
    canonical_clique_tower, count_w_with_caps, enumerate_towers_direct, enumerate_towers_with_caps, find_tower_with_caps,
    is_tower, path_to_clique_with_caps, tower_census_with_caps, tower_digraph, tower_fact_failures, tower_tree_circuits,
    bit,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Formulas,
    Frame,
    Towers,
    Minors,
}

impl Suite {
    pub const ALL: [Suite; 4] = [Suite::Formulas, Suite::Frame, Suite::Towers, Suite::Minors];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Formulas => "formulas",
            Suite::Frame => "frame",
            Suite::Towers => "towers",
            Suite::Minors => "minors",
        }
    }

    /// Parse a suite name; `all` gives every suite.
    pub fn parse_list(s: &str) -> Result<Vec<Suite>> {
        if s == "all" {
            return Ok(Suite::ALL.to_vec());
        }
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .map(|x| vec![x])
            .ok_or_else(|| Error::pre(format!("unknown suite {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Inconclusive,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Inconclusive => "inconclusive",
        }
    }
}

/// One line of the report.
#[derive(Debug, Clone)]
pub struct Row {
    pub suite: Suite,
    pub id: &'static str,
    pub claim: &'static str,
    pub status: Status,
    pub detail: String,
    pub witness_file: Option<PathBuf>,
    pub millis: u128,
}

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub seed: u64,
    pub caps: Caps,
    /// Where witnesses are written; none are written when unset.
    pub witness_dir: Option<PathBuf>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            seed: 7,
            caps: Caps::generous(),
            witness_dir: None,
        }
    }
}

/// What a check found: pass or fail, a one-line detail, and optional
/// witness text.
struct Outcome {
    pass: bool,
    detail: String,
    witness: Option<String>,
}

impl Outcome {
    fn ok(detail: impl Into<String>) -> Result<Outcome> {
        Ok(Outcome {
            pass: true,
            detail: detail.into(),
            witness: None,
        })
    }

    fn fail(detail: impl Into<String>) -> Result<Outcome> {
        Ok(Outcome {
            pass: false,
            detail: detail.into(),
            witness: None,
        })
    }

    fn with_witness(mut self, w: String) -> Self {
        self.witness = Some(w);
        self
    }
}

type CheckFn = fn(&VerifyOptions) -> Result<Outcome>;

struct Check {
    suite: Suite,
    id: &'static str,
    claim: &'static str,
    run: CheckFn,
}

const CHECKS: &[Check] = &[
    Check { suite: Suite::Formulas, id: "F01-crown-size", claim: "|crown(n,q,t)| = (n-t)q^t + (q^t-1)/(q-1)", run: crown_sizes },
    Check { suite: Suite::Formulas, id: "F02-geometry-size", claim: "|PG(n-1,q)| = (q^n-1)/(q-1), |AG(n-1,q)| = q^(n-1)", run: geometry_sizes },
    Check { suite: Suite::Formulas, id: "F03-binary-threshold", claim: "t^4/2 = 8 t^2 d^2 at d = t/4", run: binary_threshold },
    Check { suite: Suite::Formulas, id: "F04-crown-bound", claim: "crown_lower_bound(l,t,n) = |crown(n,q,t-3)|", run: crown_bound },
    Check { suite: Suite::Frame, id: "R01-frame-oracle", claim: "frame rank = rank from circuits", run: frame_oracle },
    Check { suite: Suite::Frame, id: "R02-frame-minors", claim: "FM(G)/e = FM(G/e) and FM(G)\\e = FM(G\\e)", run: frame_minors },
    Check { suite: Suite::Frame, id: "R03-dowling-extremal", claim: "DG(r,Z_k) is simple with r + k C(r,2) points and no U(2,k+3)-minor", run: dowling_extremal },
    Check { suite: Suite::Towers, id: "T01-tower-facts", claim: "enumerated towers satisfy the structural facts", run: tower_facts },
    Check { suite: Suite::Towers, id: "T02-triples", claim: "w_(i+1) = number of triples; direct enumeration agrees", run: tower_triples },
    Check { suite: Suite::Towers, id: "T03-census", claim: "class sizes <= l^i and Delta_i - l^i w_i <= w_(i+1) <= l^i Delta_i", run: tower_sandwich },
    Check { suite: Suite::Towers, id: "T04-extraction", claim: "canonical towers give path digraphs, circuits and M(K_(s+1))", run: tower_extraction },
    Check { suite: Suite::Towers, id: "T05-find-tower", claim: "PG(6,2) has a 2-tower in a minor found by density descent", run: tower_find },
    Check { suite: Suite::Minors, id: "M01-crown-minors", claim: "crown(4,2,1) has M(K4-) restricted, no M(K4)-minor; crown(5,2,2) no M(K5)-minor", run: crown_minors },
    Check { suite: Suite::Minors, id: "M02-affine", claim: "AG(2,3) has no M(K4)-minor", run: affine_no_k4 },
    Check { suite: Suite::Minors, id: "M03-coupled", claim: "coupled(5,3): 17 elements, rank 5, no U(2,5)- or M(K4)-minor", run: coupled },
    Check { suite: Suite::Minors, id: "M04-graph-agreement", claim: "graph K_t-minor search = matroid M(K_t)-minor search", run: graph_agreement },
    Check { suite: Suite::Minors, id: "M05-kostochka", claim: "the Kostochka family for t = 4 is K4-minor-free", run: kostochka },
];

/// Run the suites; rows are sorted by check id.
pub fn run(suites: &[Suite], opts: &VerifyOptions) -> Vec<Row> {
    let mut rows: Vec<Row> = CHECKS
        .par_iter()
        .filter(|c| suites.contains(&c.suite))
        .map(|c| run_one(c, opts))
        .collect();
    rows.sort_by_key(|r| r.id);
    rows
}

fn run_one(c: &Check, opts: &VerifyOptions) -> Row {
    let start = Instant::now();
    let result = (c.run)(opts);
    let millis = start.elapsed().as_millis();
    let (status, detail, witness) = match result {
        Ok(o) => (if o.pass { Status::Pass } else { Status::Fail }, o.detail, o.witness),
        Err(e) if e.is_cap() => (Status::Inconclusive, e.to_string(), None),
        Err(e) => (Status::Fail, format!("error: {e}"), None),
    };
    let mut witness_file = None;
    if let (Some(dir), Some(text)) = (&opts.witness_dir, witness) {
        let path = dir.join(format!("{}.txt", c.id));
        if std::fs::create_dir_all(dir).and_then(|_| std::fs::write(&path, text)).is_ok() {
            witness_file = Some(path);
        }
    }
    Row {
        suite: c.suite,
        id: c.id,
        claim: c.claim,
        status,
        detail,
        witness_file,
        millis,
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// CSV with columns suite, check-id, claim, status, witness-file, millis.
pub fn to_csv(rows: &[Row]) -> String {
    let mut out = String::from("suite,check-id,claim,status,witness-file,millis\n");
    for r in rows {
        let w = r.witness_file.as_ref().map(|p| p.display().to_string()).unwrap_or_default();
        let _ = writeln!(
            out,
            "{},{},{},{},{},{}",
            r.suite.name(),
            r.id,
            csv_field(r.claim),
            r.status.as_str(),
            csv_field(&w),
            r.millis
        );
    }
    out
}

fn first_failure(fails: Vec<String>) -> Result<Outcome> {
    match fails.first() {
        None => Outcome::ok("all cases agree"),
        Some(f) => Outcome::fail(format!("{} failing cases, first: {f}", fails.len())),
    }
}

fn crown_sizes(o: &VerifyOptions) -> Result<Outcome> {
    let mut fails = Vec::new();
    let mut cases = 0;
    for q in [2u64, 3, 4, 5, 7, 8, 9] {
        for n in 2..=8usize {
            for t in 0..=n.min(4) {
                if t + 1 >= n {
                    continue;
                }
                let c = crown_with_caps(n, q, t, &o.caps)?;
                let qt = q.pow(t as u32);
                let expect = (n - t) as u64 * qt + (qt - 1) / (q - 1);
                let distinct: HashSet<&Vec<_>> = c.columns().iter().collect();
                cases += 1;
                if c.columns().len() as u64 != expect || distinct.len() != c.columns().len() {
                    fails.push(format!("crown({n},{q},{t}) has {} columns, expected {expect}", c.columns().len()));
                }
            }
        }
    }
    if fails.is_empty() {
        return Outcome::ok(format!("{cases} crowns"));
    }
    first_failure(fails)
}

fn geometry_sizes(o: &VerifyOptions) -> Result<Outcome> {
    let mut fails = Vec::new();
    for q in [2u64, 3, 4, 5, 7] {
        for n in 1..=4usize {
            let pg = projective_geometry_with_caps(n, q, &o.caps)?.into_handle();
            let expect = (q.pow(n as u32) - 1) / (q - 1);
            if pg.size() as u64 != expect || pg.rank() != n {
                fails.push(format!("PG({},{q}) has {} points", n - 1, pg.size()));
            }
            let ag = affine_geometry_with_caps(n, q, &o.caps)?.into_handle();
            if ag.size() as u64 != q.pow(n as u32 - 1) || ag.rank() != n {
                fails.push(format!("AG({},{q}) has {} points", n - 1, ag.size()));
            }
        }
    }
    first_failure(fails)
}

fn binary_threshold(_: &VerifyOptions) -> Result<Outcome> {
    let mut fails = Vec::new();
    for t in 1..=10u64 {
        let d = BigRational::new(BigInt::from(t), BigInt::from(4));
        let (b, g) = binary_exponents(t, &d);
        if b != g {
            fails.push(format!("t={t}: {b} != {g}"));
        }
    }
    first_failure(fails)
}

fn crown_bound(o: &VerifyOptions) -> Result<Outcome> {
    let mut fails = Vec::new();
    for ell in 2..=5u64 {
        let q = crate::algebra::largest_prime_power_le(ell).expect("ell >= 2");
        for t in 4..=6u64 {
            let s = (t - 3) as usize;
            for n in s..=8usize {
                let bound = crown_lower_bound(ell, t, n as u64)?;
                let size = crown_with_caps(n, q, s, &o.caps)?.columns().len() as i128;
                if bound != size {
                    fails.push(format!("l={ell} t={t} n={n}: {bound} != {size}"));
                }
            }
        }
    }
    first_failure(fails)
}

/// Random gain graph over `Z_k`; a few loops carry the unbalanced marker.
fn random_biased(rng: &mut ChaCha8Rng, max_n: usize, max_m: usize) -> BiasedGraph {
    let k = rng.gen_range(1..=4);
    let group = GroupTable::cyclic(k).expect("small cyclic group");
    let n = rng.gen_range(1..=max_n);
    let m = rng.gen_range(1..=max_m);
    let edges = (0..m)
        .map(|id| {
            let u = rng.gen_range(0..n);
            let v = rng.gen_range(0..n);
            let g = if u == v && rng.gen_bool(0.3) {
                Gain::Unbalanced
            } else {
                Gain::Element(rng.gen_range(0..k))
            };
            (id, u, v, g)
        })
        .collect();
    BiasedGraph::with_gains(0..n, group, edges).expect("valid gain graph")
}

fn rank_from_circuits(m: usize, circuits: &[u64]) -> Vec<usize> {
    let mut rank = vec![0usize; 1 << m];
    for mask in 1u64..1 << m {
        rank[mask as usize] = if circuits.iter().all(|&c| c & mask != c) {
            mask.count_ones() as usize
        } else {
            (0..m)
                .filter(|&i| mask >> i & 1 == 1)
                .map(|i| rank[(mask & !(1 << i)) as usize])
                .max()
                .unwrap_or(0)
        };
    }
    rank
}

fn frame_oracle(o: &VerifyOptions) -> Result<Outcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(o.seed);
    let mut fails = Vec::new();
    for case in 0..200 {
        let g = random_biased(&mut rng, 6, 10);
        let ids = g.edge_ids();
        let circuits: Vec<u64> = frame_circuits(&g, &o.caps)?
            .iter()
            .map(|c| c.iter().fold(0u64, |a, &e| a | 1 << ids.iter().position(|&x| x == e).unwrap()))
            .collect();
        let oracle = rank_from_circuits(ids.len(), &circuits);
        for mask in 0u64..1 << ids.len() {
            let s: Vec<usize> = (0..ids.len()).filter(|&i| mask >> i & 1 == 1).map(|i| ids[i]).collect();
            if frame_rank(&g, &s)? != oracle[mask as usize] {
                fails.push(format!("case {case}, edges {s:?}"));
                break;
            }
        }
    }
    first_failure(fails)
}

fn same_ranks(a: &MatroidHandle, b: &MatroidHandle) -> bool {
    let els = a.elements();
    els == b.elements()
        && (0u64..1 << els.len()).all(|mask| {
            let s: ElemSet = (0..els.len()).filter(|&i| mask >> i & 1 == 1).map(|i| els[i]).collect();
            a.rk(&s) == b.rk(&s)
        })
}

/// Which contraction case an edge falls in.
fn edge_case(g: &BiasedGraph, id: usize) -> usize {
    let e = g.graph().edges().iter().find(|e| e.id == id).expect("edge of g");
    if !e.is_loop() {
        1
    } else if matches!(g.gain_of(id), Some(Gain::Element(0))) {
        2
    } else {
        3
    }
}

fn frame_minors(o: &VerifyOptions) -> Result<Outcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(o.seed ^ 0x5eed);
    let mut fails = Vec::new();
    let mut seen = [0usize; 4];
    let mut case = 0;
    while case < 200 {
        let g = random_biased(&mut rng, 5, 8);
        let ids = g.edge_ids();
        // Cycle the cases: deletion, link, balanced loop, unbalanced loop.
        let want = case % 4;
        let pick = ids
            .iter()
            .copied()
            .find(|&id| want == 0 || edge_case(&g, id) == want);
        let Some(id) = pick else { continue };
        let fm = frame_matroid(&g);
        let (lhs, rhs) = if want == 0 {
            (frame_matroid(&g.delete_edge(id)?), fm.delete_ids(&[id])?)
        } else {
            (frame_matroid(&g.contract_edge(id)?), fm.contract_ids(&[id])?)
        };
        seen[want] += 1;
        if !same_ranks(&lhs, &rhs) {
            fails.push(format!("case {case}: edge {id}, kind {want}"));
        }
        case += 1;
    }
    if fails.is_empty() {
        return Outcome::ok(format!(
            "deletions {}, links {}, balanced loops {}, unbalanced loops {}",
            seen[0], seen[1], seen[2], seen[3]
        ));
    }
    first_failure(fails)
}

fn cyclic_dowling(r: usize, k: usize) -> Result<MatroidHandle> {
    dowling(r, &GroupTable::cyclic(k)?)
}

fn dowling_extremal(o: &VerifyOptions) -> Result<Outcome> {
    let mut fails = Vec::new();
    for k in 1..=3usize {
        for r in 1..=5usize {
            let m = cyclic_dowling(r, k)?;
            let bound = r + k * r * (r - 1) / 2;
            if !is_simple(&m) || m.size() != bound || m.rank() != r {
                fails.push(format!("DG({r},Z{k}) has {} elements, bound {bound}", m.size()));
            }
            if has_line_minor_with_caps(&m, k + 3, &o.caps)?.is_some() {
                fails.push(format!("DG({r},Z{k}) has a U(2,{})-minor", k + 3));
            }
        }
    }
    first_failure(fails)
}

fn tower_suite() -> Result<Vec<(&'static str, MatroidHandle)>> {
    Ok(vec![
        ("fano", crate::linear::projective_geometry(3, 2)?.into_handle()),
        ("K4", complete_graphic(4)),
        ("K5", complete_graphic(5)),
        ("DG(3,Z2)", cyclic_dowling(3, 2)?),
    ])
}

fn tower_facts(o: &VerifyOptions) -> Result<Outcome> {
    let mut fails = Vec::new();
    let mut count = 0;
    for (name, m) in tower_suite()? {
        for n in 1..=3 {
            for t in enumerate_towers_with_caps(&m, n, &o.caps)? {
                count += 1;
                if is_tower(&m, &t)?.is_some() {
                    fails.push(format!("{name}: enumerated non-tower"));
                }
                for f in tower_fact_failures(&m, &t) {
                    fails.push(format!("{name} n={n}: {f}"));
                }
            }
        }
    }
    if fails.is_empty() {
        return Outcome::ok(format!("{count} towers"));
    }
    first_failure(fails)
}

fn tower_triples(o: &VerifyOptions) -> Result<Outcome> {
    let mut fails = Vec::new();
    for (name, m) in tower_suite()? {
        for i in 1..=2 {
            let c = tower_census_with_caps(&m, i, &o.caps)?;
            let next = count_w_with_caps(&m, i + 1, &o.caps)?;
            if c.triple_count != next {
                fails.push(format!("{name} i={i}: {} triples, w = {next}", c.triple_count));
            }
        }
        for n in 1..=3 {
            if enumerate_towers_with_caps(&m, n, &o.caps)? != enumerate_towers_direct(&m, n)? {
                fails.push(format!("{name} n={n}: enumerations differ"));
            }
        }
    }
    first_failure(fails)
}

fn tower_sandwich(o: &VerifyOptions) -> Result<Outcome> {
    let mut fails = Vec::new();
    for (name, m) in tower_suite()? {
        // Every line of the suite has at most ell + 1 points.
        let ell: i64 = if name == "DG(3,Z2)" { 3 } else { 2 };
        for i in 0..=2usize {
            let c = tower_census_with_caps(&m, i, &o.caps)?;
            let li = ell.pow(i as u32);
            let next = count_w_with_caps(&m, i + 1, &o.caps)? as i64;
            let (w, d) = (c.w_i as i64, c.delta_i);
            if !(d - li * w <= next && next <= li * d) {
                fails.push(format!("{name} i={i}: Delta={d}, w={w}, next={next}"));
            }
            for p in &c.per_point {
                if p.class_sizes.iter().any(|&s| s as i64 > li) {
                    fails.push(format!("{name} i={i} x={}: class above l^i", p.x));
                }
                if i >= 1 && p.a_size + p.class_sizes.iter().sum::<usize>() != c.w_i {
                    fails.push(format!("{name} i={i} x={}: classes do not partition", p.x));
                }
            }
        }
    }
    first_failure(fails)
}

fn tower_extraction(o: &VerifyOptions) -> Result<Outcome> {
    let mut fails = Vec::new();
    for s in 1..=4usize {
        let (m, t) = canonical_clique_tower(s)?;
        let g = tower_digraph(&m, &t)?;
        if !g.is_path(t.full()) {
            fails.push(format!("s={s}: digraph is not a path"));
        }
        for k in 2..=s {
            let sub = (1..k).fold(0, |a, i| a | bit(i));
            if let Err(e) = tower_tree_circuits(&m, &t, sub, k) {
                fails.push(format!("s={s} k={k}: {e}"));
            }
        }
        let map = path_to_clique_with_caps(&m, &t, t.full(), &o.caps)?;
        if map.len() != (s + 1) * s / 2 {
            fails.push(format!("s={s}: restriction has {} elements", map.len()));
        }
    }
    first_failure(fails)
}

fn tower_find(o: &VerifyOptions) -> Result<Outcome> {
    let m = projective_geometry_with_caps(7, 2, &o.caps)?.into_handle();
    // Binary matroids have no U(2,4)-minor, so ell = 2.
    let r = find_tower_with_caps(&m, 2, Some(2), &o.caps)?;
    let Some(f) = r.found else {
        return Outcome::fail("no tower found");
    };
    let minor = f.minor(&m)?;
    if !r.hypothesis || is_tower(&minor, &f.tower)?.is_some() {
        return Outcome::fail(format!("returned family is not a tower of the minor: {}", f.tower));
    }
    let text = format!("# contract={} delete={}\n{}", f.contract, f.delete, f.tower);
    Ok(Outcome::ok(format!("{:?} route, entries {:?}", f.route, f.tower.entries().map(|(_, e)| e).collect::<Vec<_>>()))?
        .with_witness(text))
}

fn crown_minors(o: &VerifyOptions) -> Result<Outcome> {
    let c421 = crown_with_caps(4, 2, 1, &o.caps)?.into_handle();
    let k4 = complete_graphic(4);
    let k4_minus = k4.delete_ids(&[5])?.compact().0;
    let Some(map) = find_restriction_with_caps(&c421, &k4_minus, &o.caps)? else {
        return Outcome::fail("crown(4,2,1) has no M(K4-)-restriction");
    };
    if has_clique_minor_with_caps(&c421, 4, &o.caps)?.is_some() {
        return Outcome::fail("crown(4,2,1) has an M(K4)-minor");
    }
    let c522 = crown_with_caps(5, 2, 2, &o.caps)?.into_handle();
    if let Some(w) = has_clique_minor_with_caps(&c522, 5, &o.caps)? {
        return Ok(Outcome::fail("crown(5,2,2) has an M(K5)-minor")?.with_witness(w.to_string()));
    }
    Ok(Outcome::ok("no clique minors")?.with_witness(format!("K4- restriction map={map:?}\n")))
}

fn affine_no_k4(o: &VerifyOptions) -> Result<Outcome> {
    let ag = affine_geometry_with_caps(3, 3, &o.caps)?.into_handle();
    if ag.size() != 9 || ag.rank() != 3 {
        return Outcome::fail(format!("AG(2,3) has {} elements, rank {}", ag.size(), ag.rank()));
    }
    match has_clique_minor_with_caps(&ag, 4, &o.caps)? {
        None => Outcome::ok("no M(K4)-minor"),
        Some(w) => Ok(Outcome::fail("found an M(K4)-minor")?.with_witness(w.to_string())),
    }
}

fn coupled(o: &VerifyOptions) -> Result<Outcome> {
    let m = coupled_example(5, 3)?.into_handle();
    if m.size() != 17 || m.rank() != 5 {
        return Outcome::fail(format!("{} elements, rank {}", m.size(), m.rank()));
    }
    if let Some(w) = has_line_minor_with_caps(&m, 5, &o.caps)? {
        return Ok(Outcome::fail("found a U(2,5)-minor")?.with_witness(w.to_string()));
    }
    if let Some(w) = has_clique_minor_with_caps(&m, 4, &o.caps)? {
        return Ok(Outcome::fail("found an M(K4)-minor")?.with_witness(w.to_string()));
    }
    Outcome::ok("no U(2,5)- or M(K4)-minor")
}

fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> SimpleGraph {
    let mut g = SimpleGraph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v).expect("vertices in range");
            }
        }
    }
    g
}

fn graph_agreement(o: &VerifyOptions) -> Result<Outcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(o.seed.wrapping_add(13));
    let mut fails = Vec::new();
    let mut cases = 0;
    for _ in 0..40 {
        let n = rng.gen_range(3..=8);
        let p = rng.gen_range(0.3..0.7);
        let g = random_graph(&mut rng, n, p);
        let m = g.cycle_matroid();
        for t in 3..=5 {
            let a = graph_clique_minor_with_caps(&g, t, &o.caps)?.is_some();
            let b = has_clique_minor_with_caps(&m, t, &o.caps)?.is_some();
            cases += 1;
            if a != b {
                fails.push(format!("t={t}, edges {:?}: graph {a}, matroid {b}", g.edges().collect::<Vec<_>>()));
            }
        }
    }
    if fails.is_empty() {
        return Outcome::ok(format!("{cases} cases"));
    }
    first_failure(fails)
}

fn kostochka(o: &VerifyOptions) -> Result<Outcome> {
    let mut fails = Vec::new();
    for n in 4..=9 {
        let g = kostochka_family(4, n)?;
        if graph_clique_minor_with_caps(&g, 4, &o.caps)?.is_some() {
            fails.push(format!("n={n}: graph search found K4"));
        }
        if has_clique_minor_with_caps(&g.cycle_matroid(), 4, &o.caps)?.is_some() {
            fails.push(format!("n={n}: matroid search found M(K4)"));
        }
    }
    first_failure(fails)
}

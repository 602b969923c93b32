use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use mxk::algebra::GroupTable;
use mxk::extremal::{kostochka_family, kung_bound};
use mxk::frame::{blow_up, dowling_graph, frame_circuits, frame_rank};
use mxk::io::Instance;
use mxk::linear::{affine_geometry, coupled_example, crown, graphic_clique_rep, projective_geometry};
use mxk::matroid::{complete_graph_edges, complete_graphic, epsilon, GraphicMatroid, MatroidHandle};
use mxk::search::{find_restriction, has_clique_minor, has_line_minor, is_b_clique, longest_line_minor, MinorWitness};
use mxk::towers::{
    clique_from_tower, count_w, enumerate_towers, find_tower, is_tower, tower_census, Tower, TowerClique,
};
use mxk::verify::{self, Status, Suite, VerifyOptions};
use mxk::{Caps, ElemSet, Error, Result};

#[derive(Parser)]
#[command(name = "mxk", version, about = "Matroid clique minors, frame matroids and towers")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build an instance and write it in the text format.
    Construct(ConstructArgs),
    /// Run one check on an instance file.
    Check(CheckArgs),
    /// Tower counting, enumeration, search and extraction.
    Towers(TowersArgs),
    /// Run the verification suites and print a CSV report.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Pg,
    Ag,
    Crown,
    Dowling,
    Blowup,
    Coupled,
    Clique,
    KostochkaGraph,
}

#[derive(clap::Args)]
struct ConstructArgs {
    kind: Kind,
    #[arg(long)]
    rank: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    q: Option<u64>,
    #[arg(long)]
    t: Option<usize>,
    /// `cyclicK` (default `cyclic1`).
    #[arg(long)]
    group: Option<String>,
    /// Graph file for `blowup`.
    #[arg(long)]
    graph: Option<PathBuf>,
    /// Output file; the instance goes to stdout when absent.
    #[arg(long, short)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckKind {
    LineMinor,
    CliqueMinor,
    Restriction,
    KungBound,
    BClique,
    FrameRankAgreement,
}

#[derive(clap::Args)]
struct CheckArgs {
    input: PathBuf,
    check: CheckKind,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    t: Option<usize>,
    /// Target instance for `restriction`.
    #[arg(long)]
    target: Option<PathBuf>,
    /// Comma-separated element ids for `b-clique`.
    #[arg(long, value_delimiter = ',')]
    basis: Vec<usize>,
    /// Line bound for `kung-bound` (default: longest line minor minus one).
    #[arg(long)]
    ell: Option<u64>,
    /// Write the witness here when one is found.
    #[arg(long)]
    witness_out: Option<PathBuf>,
    /// `yes` or `no`: turn the answer into pass/fail.
    #[arg(long)]
    expect: Option<Expect>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Expect {
    Yes,
    No,
}

#[derive(clap::Args)]
struct TowersArgs {
    input: PathBuf,
    #[command(subcommand)]
    sub: TowersCmd,
}

#[derive(Subcommand)]
enum TowersCmd {
    /// w_n: the number of n-towers of si(M).
    Count {
        #[arg(long)]
        n: usize,
    },
    /// Print every n-tower of si(M), or write one file per tower.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
    /// CSV of w_i, Delta_i and the triple count for i = 0..=max-i.
    Census {
        #[arg(long)]
        max_i: usize,
    },
    /// Look for a t-tower in a minor.
    Find {
        #[arg(long)]
        t: usize,
        #[arg(long)]
        ell: Option<u64>,
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Turn a tower (as written by `find`) into an M(K_t)-minor.
    Exploit {
        #[arg(long)]
        tower: PathBuf,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        witness_out: Option<PathBuf>,
    },
}

#[derive(clap::Args)]
struct VerifyArgs {
    /// formulas, frame, towers, minors or all.
    suite: String,
    #[arg(long, default_value_t = 7)]
    seed: u64,
    /// Count inconclusive checks as failures.
    #[arg(long)]
    strict: bool,
    /// Write the CSV here instead of stdout.
    #[arg(long)]
    csv: Option<PathBuf>,
    #[arg(long)]
    witness_dir: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.cmd {
        Cmd::Construct(a) => construct(a),
        Cmd::Check(a) => check(a),
        Cmd::Towers(a) => towers(a),
        Cmd::Verify(a) => run_verify(a),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn need<T>(v: Option<T>, flag: &str) -> Result<T> {
    v.ok_or_else(|| Error::pre(format!("--{flag} is required")))
}

fn parse_group(s: Option<&str>) -> Result<GroupTable> {
    let s = s.unwrap_or("cyclic1");
    let k = s
        .strip_prefix("cyclic")
        .and_then(|k| k.parse().ok())
        .ok_or_else(|| Error::pre(format!("group must be cyclicK, got {s:?}")))?;
    GroupTable::cyclic(k)
}

fn summary(m: &MatroidHandle) -> String {
    format!("rank={} size={} epsilon={}", m.rank(), m.size(), epsilon(m))
}

fn construct(a: ConstructArgs) -> Result<ExitCode> {
    let inst = match a.kind {
        Kind::Pg => Instance::Linear(projective_geometry(need(a.rank, "rank")?, need(a.q, "q")?)?),
        Kind::Ag => Instance::Linear(affine_geometry(need(a.rank, "rank")?, need(a.q, "q")?)?),
        Kind::Crown => Instance::Linear(crown(need(a.n, "n")?, need(a.q, "q")?, need(a.t, "t")?)?),
        Kind::Dowling => Instance::Biased(dowling_graph(need(a.n, "n")?, &parse_group(a.group.as_deref())?)?),
        Kind::Blowup => {
            let path = need(a.graph, "graph")?;
            let Instance::Graph(g) = Instance::read(&path)? else {
                return Err(Error::pre(format!("{} is not a graph file", path.display())));
            };
            Instance::Biased(blow_up(&g, &parse_group(a.group.as_deref())?)?)
        }
        Kind::Coupled => Instance::Linear(coupled_example(need(a.n, "n")?, need(a.q, "q")?)?),
        Kind::Clique => {
            let t = need(a.t, "t")?;
            match a.q {
                Some(q) => Instance::Linear(graphic_clique_rep(t, q)?),
                None => Instance::Graphic(GraphicMatroid::new(t, complete_graph_edges(t))?),
            }
        }
        Kind::KostochkaGraph => Instance::Graph(kostochka_family(need(a.t, "t")?, need(a.n, "n")?)?),
    };
    let m = inst.matroid();
    match a.out {
        Some(path) => {
            inst.write(&path)?;
            println!("wrote {} ({}) {}", path.display(), inst.kind(), summary(&m));
        }
        None => {
            print!("{inst}");
            eprintln!("{}", summary(&m));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn write_text(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

/// Print a report line and map the answer to an exit code.
fn report(check: &str, found: Option<bool>, detail: &str, expect: Option<Expect>) -> ExitCode {
    let (answer, status) = match found {
        None => ("unknown", Status::Inconclusive),
        Some(f) => {
            let answer = if f { "yes" } else { "no" };
            let status = match expect {
                Some(e) if (e == Expect::Yes) != f => Status::Fail,
                _ => Status::Pass,
            };
            (answer, status)
        }
    };
    println!("check={check} answer={answer} status={} {detail}", status.as_str());
    if status == Status::Fail {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}

fn check(a: CheckArgs) -> Result<ExitCode> {
    let inst = Instance::read(&a.input)?;
    let m = inst.matroid();
    let witness = |w: &MinorWitness| -> Result<String> {
        if let Some(p) = &a.witness_out {
            write_text(p, &format!("{w}\n"))?;
        }
        Ok(format!("witness: {w}"))
    };
    let outcome: Result<(Option<bool>, String)> = (|| match a.check {
        CheckKind::LineMinor => {
            let k = need(a.k, "k")?;
            Ok(match has_line_minor(&m, k)? {
                Some(w) => (Some(true), witness(&w)?),
                None => (Some(false), format!("no U(2,{k})-minor")),
            })
        }
        CheckKind::CliqueMinor => {
            let t = need(a.t, "t")?;
            Ok(match has_clique_minor(&m, t)? {
                Some(w) => (Some(true), witness(&w)?),
                None => (Some(false), format!("no M(K{t})-minor")),
            })
        }
        CheckKind::Restriction => {
            let target = Instance::read(need(a.target.as_ref(), "target")?)?.matroid();
            Ok(match find_restriction(&m, &target)? {
                Some(map) => (Some(true), format!("map={map:?}")),
                None => (Some(false), "no restriction".into()),
            })
        }
        CheckKind::KungBound => {
            let ell = match a.ell {
                Some(l) => l,
                None => longest_line_minor(&m)? as u64 - 1,
            };
            let bound = kung_bound(ell, m.rank() as u32).ok_or_else(|| Error::pre("bound overflows"))?;
            let eps = epsilon(&m) as u128;
            Ok((Some(eps <= bound), format!("epsilon={eps} bound={bound} ell={ell}")))
        }
        CheckKind::BClique => {
            let b: ElemSet = a.basis.iter().copied().collect();
            Ok((Some(is_b_clique(&m, &b)?), format!("basis={b}")))
        }
        CheckKind::FrameRankAgreement => {
            let Instance::Biased(g) = &inst else {
                return Err(Error::pre("frame-rank-agreement needs a biasedgraph file"));
            };
            let ids = g.edge_ids();
            let circuits: Vec<ElemSet> = frame_circuits(g, Caps::global())?
                .iter()
                .map(|c| c.iter().copied().collect())
                .collect();
            let mut bad = None;
            for mask in 0u64..1 << ids.len() {
                let s: ElemSet = (0..ids.len()).filter(|&i| mask >> i & 1 == 1).map(|i| ids[i]).collect();
                let v = s.to_vec();
                // Rank from circuits: a largest subset containing no circuit.
                let best = (0u64..1 << v.len())
                    .filter(|sub| {
                        let t: ElemSet = (0..v.len()).filter(|&i| sub >> i & 1 == 1).map(|i| v[i]).collect();
                        circuits.iter().all(|c| !c.is_subset(&t))
                    })
                    .map(|sub| sub.count_ones() as usize)
                    .max()
                    .unwrap_or(0);
                if frame_rank(g, &v)? != best {
                    bad = Some(s);
                    break;
                }
            }
            Ok(match bad {
                None => (Some(true), format!("{} subsets agree", 1u64 << ids.len())),
                Some(s) => (Some(false), format!("disagreement on {s}")),
            })
        }
    })();
    let name = a.check.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default();
    match outcome {
        Ok((found, detail)) => Ok(report(&name, found, &detail, a.expect)),
        Err(e) if e.is_cap() => Ok(report(&name, None, &e.to_string(), a.expect)),
        Err(e) => Err(e),
    }
}

/// `# minor contract=[..] delete=[..] map=[]` as written by `towers find`.
fn minor_comment(text: &str) -> Result<(ElemSet, ElemSet)> {
    for line in text.lines() {
        if let Some(rest) = line.trim().strip_prefix("# minor ") {
            let w: MinorWitness = rest.parse()?;
            return Ok((w.contract, w.delete));
        }
    }
    Ok((ElemSet::new(), ElemSet::new()))
}

fn towers(a: TowersArgs) -> Result<ExitCode> {
    let m = Instance::read(&a.input)?.matroid();
    match a.sub {
        TowersCmd::Count { n } => println!("{}", count_w(&m, n)?),
        TowersCmd::Enumerate { n, out_dir } => {
            let all = enumerate_towers(&m, n)?;
            match out_dir {
                Some(dir) => {
                    std::fs::create_dir_all(&dir)?;
                    for (i, t) in all.iter().enumerate() {
                        write_text(&dir.join(format!("tower-{i:05}.txt")), &t.to_string())?;
                    }
                    println!("wrote {} towers to {}", all.len(), dir.display());
                }
                None => {
                    for t in &all {
                        println!("{t}");
                    }
                }
            }
        }
        TowersCmd::Census { max_i } => {
            println!("i,w_i,w_next,delta_i,triples");
            for i in 0..=max_i {
                let c = tower_census(&m, i)?;
                let next = count_w(&m, i + 1)?;
                println!("{i},{},{next},{},{}", c.w_i, c.delta_i, c.triple_count);
            }
        }
        TowersCmd::Find { t, ell, out } => {
            let r = find_tower(&m, t, ell)?;
            println!("ell={} hypothesis={}", r.ell, r.hypothesis);
            match r.found {
                None => println!("no {t}-tower in si(M)"),
                Some(f) => {
                    let minor = MinorWitness {
                        contract: f.contract.clone(),
                        delete: f.delete.clone(),
                        mapping: Vec::new(),
                    };
                    let text = format!("# minor {minor}\n{}", f.tower);
                    println!("route={:?}", f.route);
                    match out {
                        Some(p) => {
                            write_text(&p, &text)?;
                            println!("wrote {}", p.display());
                        }
                        None => print!("{text}"),
                    }
                }
            }
        }
        TowersCmd::Exploit { tower, t, witness_out } => {
            let text = std::fs::read_to_string(&tower)?;
            let tw: Tower = text.parse()?;
            let (c, d) = minor_comment(&text)?;
            let minor = m.minor(&c, &d)?;
            if let Some(v) = is_tower(&minor, &tw)? {
                return Err(Error::pre(format!("not a tower of the minor: {v}")));
            }
            match clique_from_tower(&minor, &tw, t)? {
                TowerClique::Inconclusive(why) => {
                    println!("status=inconclusive {why}");
                }
                found => {
                    let w = found.witness().expect("conclusive outcome carries a witness");
                    let full = MinorWitness {
                        contract: w.contract.union(&c),
                        delete: w.delete.union(&d),
                        mapping: w.mapping.clone(),
                    };
                    let ok = full.verify(&m, &complete_graphic(t), Caps::global())?;
                    let branch = match found {
                        TowerClique::Path { .. } => "path",
                        TowerClique::BClique { .. } => "frame",
                        _ => "restriction",
                    };
                    println!("branch={branch} verified={ok}");
                    println!("{full}");
                    if let Some(p) = witness_out {
                        write_text(&p, &format!("{full}\n"))?;
                    }
                    if !ok {
                        return Ok(ExitCode::FAILURE);
                    }
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn run_verify(a: VerifyArgs) -> Result<ExitCode> {
    let suites: Vec<Suite> = Suite::parse_list(&a.suite)?;
    let caps = match std::env::var("MXK_CAPS") {
        Ok(spec) => Caps::generous().with_overrides(&spec)?,
        Err(_) => Caps::generous(),
    };
    let opts = VerifyOptions {
        seed: a.seed,
        caps,
        witness_dir: a.witness_dir,
    };
    let rows = verify::run(&suites, &opts);
    let csv = verify::to_csv(&rows);
    match &a.csv {
        Some(p) => write_text(p, &csv)?,
        None => print!("{csv}"),
    }
    for r in &rows {
        eprintln!("{:<22} {:<12} {}", r.id, r.status.as_str(), r.detail);
    }
    let bad = rows.iter().any(|r| {
        r.status == Status::Fail || (a.strict && r.status == Status::Inconclusive)
    });
    Ok(if bad { ExitCode::FAILURE } else { ExitCode::SUCCESS })
}

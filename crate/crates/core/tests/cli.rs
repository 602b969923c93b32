use std::path::Path;
use std::process::{Command, Output};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use mxk::io::Instance;
use mxk::linear::projective_geometry;
use mxk::matroid::complete_graphic;
use mxk::search::MinorWitness;
use mxk::towers::{is_tower, Tower};
use mxk::Caps;

fn mxk(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mxk"))
        .current_dir(dir)
        .args(args)
        .env_remove("MXK_CAPS")
        .output()
        .expect("run mxk")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn construct_round_trips_through_files() {
    let dir = tempfile::tempdir().unwrap();
    let out = mxk(dir.path(), &["construct", "pg", "--rank", "4", "--q", "3", "-o", "pg.txt"]);
    assert!(out.status.success(), "{out:?}");
    assert!(stdout(&out).contains("rank=4 size=40 epsilon=40"));

    let read = Instance::read(dir.path().join("pg.txt")).unwrap().matroid();
    let direct = projective_geometry(4, 3).unwrap().into_handle();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..100 {
        let s: Vec<usize> = (0..40).filter(|_| rng.gen_bool(0.1)).collect();
        assert_eq!(read.rank_ids(&s).unwrap(), direct.rank_ids(&s).unwrap(), "{s:?}");
    }

    // Without -o the instance goes to stdout.
    let out = mxk(dir.path(), &["construct", "dowling", "--n", "3", "--group", "cyclic2"]);
    let inst: Instance = stdout(&out).parse().unwrap();
    assert_eq!(inst.kind(), "biasedgraph");
    assert_eq!(inst.matroid().size(), 9);
    let out = mxk(dir.path(), &["construct", "kostochka-graph", "--t", "4", "--n", "6"]);
    let inst: Instance = stdout(&out).parse().unwrap();
    assert_eq!(inst.kind(), "graph");
}

#[test]
fn check_exit_codes_and_witnesses() {
    let dir = tempfile::tempdir().unwrap();
    assert!(mxk(dir.path(), &["construct", "pg", "--rank", "3", "--q", "2", "-o", "f.txt"]).status.success());

    let out = mxk(dir.path(), &["check", "f.txt", "line-minor", "--k", "4"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("check=line-minor answer=no status=pass"));

    let out = mxk(
        dir.path(),
        &["check", "f.txt", "clique-minor", "--t", "4", "--expect", "yes", "--witness-out", "w.txt"],
    );
    assert_eq!(out.status.code(), Some(0), "{out:?}");
    let w: MinorWitness = std::fs::read_to_string(dir.path().join("w.txt")).unwrap().trim().parse().unwrap();
    let fano = projective_geometry(3, 2).unwrap().into_handle();
    assert!(w.verify(&fano, &complete_graphic(4), &Caps::default()).unwrap());

    // A 3-point line exists, so expecting none fails.
    let out = mxk(dir.path(), &["check", "f.txt", "line-minor", "--k", "3", "--expect", "no"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("status=fail"));

    assert_eq!(mxk(dir.path(), &["check", "missing.txt", "line-minor", "--k", "3"]).status.code(), Some(2));
    assert_eq!(mxk(dir.path(), &["construct", "pg", "--rank", "3", "--q", "6"]).status.code(), Some(2));
    let capped = Command::new(env!("CARGO_BIN_EXE_mxk"))
        .current_dir(dir.path())
        .args(["construct", "pg", "--rank", "4", "--q", "2"])
        .env("MXK_CAPS", "columns=5")
        .output()
        .unwrap();
    assert_eq!(capped.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&capped.stderr).contains("cap"));
}

#[test]
fn tower_commands() {
    let dir = tempfile::tempdir().unwrap();
    assert!(mxk(dir.path(), &["construct", "pg", "--rank", "3", "--q", "2", "-o", "f.txt"]).status.success());
    assert_eq!(stdout(&mxk(dir.path(), &["towers", "f.txt", "count", "--n", "2"])).trim(), "42");
    let census = stdout(&mxk(dir.path(), &["towers", "f.txt", "census", "--max-i", "2"]));
    let lines: Vec<&str> = census.lines().collect();
    assert_eq!(lines[0], "i,w_i,w_next,delta_i,triples");
    assert_eq!(lines[2], "1,7,42,28,42");

    assert!(mxk(dir.path(), &["construct", "clique", "--t", "5", "-o", "k5.txt"]).status.success());
    let out = mxk(dir.path(), &["towers", "k5.txt", "find", "--t", "3", "-o", "tower.txt"]);
    assert!(out.status.success(), "{out:?}");
    let text = std::fs::read_to_string(dir.path().join("tower.txt")).unwrap();
    let tower: Tower = text.lines().filter(|l| !l.starts_with('#')).collect::<Vec<_>>().join("\n").parse().unwrap();
    assert_eq!(is_tower(&complete_graphic(5), &tower).unwrap(), None);

    let out = mxk(
        dir.path(),
        &["towers", "k5.txt", "exploit", "--tower", "tower.txt", "--t", "4", "--witness-out", "k4.txt"],
    );
    assert!(out.status.success(), "{out:?}");
    assert!(stdout(&out).contains("verified=true"));
    let w: MinorWitness = std::fs::read_to_string(dir.path().join("k4.txt")).unwrap().trim().parse().unwrap();
    assert!(w.verify(&complete_graphic(5), &complete_graphic(4), &Caps::default()).unwrap());
}

#[test]
fn verify_writes_csv() {
    let dir = tempfile::tempdir().unwrap();
    let out = mxk(dir.path(), &["verify", "formulas", "--csv", "out.csv"]);
    assert!(out.status.success(), "{out:?}");
    let csv = std::fs::read_to_string(dir.path().join("out.csv")).unwrap();
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("suite,check-id,claim,status,witness-file,millis"));
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 4);
    assert!(rows.iter().all(|r| r.starts_with("formulas,") && r.contains(",pass,")));
    assert_eq!(mxk(dir.path(), &["verify", "nonsense"]).status.code(), Some(2));
}

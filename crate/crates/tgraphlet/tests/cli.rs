mod common;

use std::fs;

use rayon::ThreadPoolBuilder;
use tgraphlet::dataset::write_dataset;
use tgraphlet::verify::{default_counters, verify_dataset, NamedCounter};
use tgraphlet_core::exact::{count_wedges, CountConfig};
use tgraphlet_core::tgraph::{DatasetMeta, GraphRecord};
use tgraphlet_core::{Dataset, GraphletCounts, TemporalGraph, Window};

use common::{path, random_dataset, tgraphlet};

fn stdout(o: &std::process::Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn classes_lists_codebooks() {
    let lines = |args: &[&str]| stdout(&tgraphlet(args)).lines().count();
    assert_eq!(lines(&["classes"]), 4);
    assert_eq!(lines(&["classes", "--k", "2,3", "--ell", "3"]), 36);
    assert_eq!(lines(&["classes", "--labels", "2"]), 64);
    let out = stdout(&tgraphlet(&["classes"]));
    assert!(out.lines().all(|l| l.split_whitespace().nth(1) == Some("wedge")), "{out}");
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let missing = dir.path().join("nope");
    assert_eq!(tgraphlet(&["count", path(&missing)]).status.code(), Some(3));

    let bad = dir.path().join("bad");
    fs::create_dir(&bad).unwrap();
    fs::write(bad.join("manifest.txt"), "a.tg 0\n").unwrap();
    fs::write(bad.join("a.tg"), "t 2 1 1\ne 0 5 1\n").unwrap();
    let o = tgraphlet(&["count", path(&bad)]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("a.tg"));

    assert_eq!(tgraphlet(&["count", path(&bad), "--bogus"]).status.code(), Some(2));
    assert_eq!(tgraphlet(&["--help"]).status.code(), Some(0));
}

#[test]
fn inconsistent_flags_fail_before_work() {
    let ds = random_dataset(1, 4, 6, 10, 20, 1);
    let dir = tempfile::tempdir().unwrap();
    let data = dir.path().join("data");
    write_dataset(&ds, &data).unwrap();
    let out = dir.path().join("out");
    let o = tgraphlet(&["pipeline", path(&data), "--family", "wedge", "--ell", "3", "--out", path(&out)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(!out.exists());
    assert_eq!(tgraphlet(&["count", path(&data), "--family", "star", "--k", "2"]).status.code(), Some(2));
    assert_eq!(tgraphlet(&["count", path(&data), "--delta", "0"]).status.code(), Some(2));
}

#[test]
fn verify_random_graphs_all_families() {
    let dir = tempfile::tempdir().unwrap();
    // verify covers both labeled and unlabeled counting
    let ds = random_dataset(11, 100, 10, 25, 12, 2);
    write_dataset(&ds, dir.path()).unwrap();
    let o = tgraphlet(&["verify", path(dir.path()), "--delta", "1,5,inf"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn verify_empty_graph() {
    let dir = tempfile::tempdir().unwrap();
    let rec = GraphRecord { id: "empty".into(), graph: TemporalGraph::new(3, vec![], 1).unwrap(), class_label: 0 };
    write_dataset(&Dataset::new(vec![rec], DatasetMeta::default()).unwrap(), dir.path()).unwrap();
    assert_eq!(tgraphlet(&["verify", path(dir.path())]).status.code(), Some(0));
}

fn off_by_one(g: &TemporalGraph, c: &CountConfig) -> tgraphlet_core::Result<GraphletCounts> {
    let mut counts = count_wedges(g, c.delta, c.labeled)?;
    let first = counts.iter().next().map(|(code, _)| code.clone());
    if let Some(code) = first {
        counts.add(code, 1);
    }
    Ok(counts)
}

#[test]
fn corrupted_counter_is_reported() {
    let ds = random_dataset(5, 10, 8, 20, 10, 1);
    let pool = ThreadPoolBuilder::new().num_threads(2).build().unwrap();
    let honest = verify_dataset(&ds, &[Window::Unbounded], &default_counters(), false, &pool).unwrap();
    assert!(honest.mismatch.is_none());
    let broken = NamedCounter { name: "broken", count: off_by_one, ..default_counters()[0] };
    let report = verify_dataset(&ds, &[Window::Unbounded], &[broken], false, &pool).unwrap();
    let m = report.mismatch.expect("corruption detected");
    assert_eq!(m.fast, m.oracle + 1);
    let text = m.to_string();
    assert!(text.contains(&m.graph_id) && text.contains(&m.class.to_string()), "{text}");
}

#[test]
fn outputs_are_reproducible_across_thread_counts() {
    let dir = tempfile::tempdir().unwrap();
    let data = dir.path().join("data");
    let sim = |out: &std::path::Path| {
        tgraphlet(&["--seed", "9", "--quiet", "simulate", "--task", "2", "--ba", "40,2,200,6", "--out", path(out)])
    };
    assert_eq!(sim(&data).status.code(), Some(0));
    let again = dir.path().join("again");
    assert_eq!(sim(&again).status.code(), Some(0));
    for name in ["manifest.txt", "meta.jsonl", "g00000.tg", "g00011.tg"] {
        assert_eq!(fs::read(data.join(name)).unwrap(), fs::read(again.join(name)).unwrap(), "{name}");
    }

    let approx = |threads: &str| {
        stdout(&tgraphlet(&["--threads", threads, "--seed", "4", "approx", path(&data), "--samples", "300", "--delta", "50"]))
    };
    let a1 = approx("1");
    assert!(a1.lines().count() > 12);
    assert_eq!(a1, approx("4"));

    let run = |out: &std::path::Path, threads: &str| {
        let o = tgraphlet(&[
            "--threads", threads, "pipeline", path(&data), "--delta-grid", "10,inf", "--loo", "--out", path(out),
        ]);
        assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
        stdout(&o)
    };
    let (p1, p2) = (dir.path().join("p1"), dir.path().join("p2"));
    let s1 = run(&p1, "1");
    assert_eq!(s1, run(&p2, "3"));
    assert_eq!(s1.lines().count(), 2);
    for name in ["gram_d10.csv", "gram_dinf.csv", "features_d10.txt", "features_dinf.txt"] {
        assert_eq!(fs::read(p1.join(name)).unwrap(), fs::read(p2.join(name)).unwrap(), "{name}");
    }
    let manifest: serde_json::Value = serde_json::from_slice(&fs::read(p1.join("run_manifest.json")).unwrap()).unwrap();
    assert_eq!(manifest["inputs"][0]["sha256"].as_str().unwrap().len(), 64);
    assert_eq!(manifest["config"]["results"].as_array().unwrap().len(), 2);
}

#[test]
fn gram_from_feature_file_matches_direct() {
    let ds = random_dataset(21, 8, 8, 25, 30, 2);
    let dir = tempfile::tempdir().unwrap();
    let data = dir.path().join("data");
    write_dataset(&ds, &data).unwrap();
    let feats = dir.path().join("f.txt");
    let o = tgraphlet(&["count", path(&data), "--family", "all", "--k", "2,3", "--ell", "3", "--out", path(&feats)]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let via_file = stdout(&tgraphlet(&["gram", "--features", path(&feats), "--psd-check"]));
    let direct = stdout(&tgraphlet(&["gram", path(&data), "--family", "all", "--k", "2,3", "--ell", "3"]));
    assert_eq!(via_file, direct);
    let svm = stdout(&tgraphlet(&["gram", path(&data), "--format", "svm", "--mode", "l1"]));
    assert_eq!(svm.lines().count(), 8);
    assert!(svm.lines().next().unwrap().starts_with("0 0:1 "));
}

#[test]
fn bench_marks_single_runs_unstable() {
    let ds = random_dataset(2, 3, 30, 200, 100, 2);
    let dir = tempfile::tempdir().unwrap();
    write_dataset(&ds, dir.path()).unwrap();
    let out = stdout(&tgraphlet(&["bench", path(dir.path()), "--samples", "50,100", "--reps", "1"]));
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "method,delta,s,time_ms,note");
    assert_eq!(lines.len(), 4);
    assert!(lines[1..].iter().all(|l| l.ends_with("unstable")));
}

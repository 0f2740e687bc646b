mod common;

use std::path::Path;

use proptest::prelude::*;
use tgraphlet::dataset::{load_dataset, write_dataset};
use tgraphlet::format::{graph_to_string, parse_graph};
use tgraphlet_core::rng::seeded;

use common::{random_dataset, random_graph};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn text_round_trip(seed in any::<u64>(), n in 2usize..12, m in 0usize..40, alphabet in 1usize..4) {
        let mut rng = seeded(seed);
        let g = random_graph(&mut rng, n, m, 20, alphabet);
        let text = graph_to_string(&g);
        let back = parse_graph(&text, Path::new("mem")).unwrap();
        prop_assert_eq!(back.edges(), g.edges());
        prop_assert_eq!(back.num_nodes(), g.num_nodes());
        prop_assert_eq!(back.alphabet_size(), g.alphabet_size());
        for v in 0..n as u32 {
            for t in 0..80 {
                prop_assert_eq!(back.label_at(v, t).unwrap(), g.label_at(v, t).unwrap());
            }
        }
        prop_assert_eq!(graph_to_string(&back), text);
    }
}

#[test]
fn dataset_round_trip() {
    let ds = random_dataset(3, 12, 8, 20, 30, 2);
    let dir = tempfile::tempdir().unwrap();
    write_dataset(&ds, dir.path()).unwrap();
    let back = load_dataset(dir.path()).unwrap();
    assert_eq!(back.len(), ds.len());
    for (a, b) in ds.graphs().iter().zip(back.graphs()) {
        assert_eq!(graph_to_string(&a.graph), graph_to_string(&b.graph));
        assert_eq!(a.class_label, b.class_label);
    }
    // manifest file works as the dataset path too
    let via_manifest = load_dataset(&dir.path().join("manifest.txt")).unwrap();
    assert_eq!(via_manifest.len(), ds.len());
}

#[test]
fn malformed_lines_report_position() {
    let text = "t 3 2 1\ne 0 1 4\ne 1 x 5\n";
    let err = parse_graph(text, Path::new("bad.tg")).unwrap_err().to_string();
    assert!(err.contains("bad.tg") && err.contains('3'), "{err}");
    let err = parse_graph("t 3 2 1\ne 0 1 4\n", Path::new("short.tg")).unwrap_err().to_string();
    assert!(err.contains("short.tg"), "{err}");
}

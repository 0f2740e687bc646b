//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails.

mod common;

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::Rng;
use tgraphlet::cli::DEFAULT_NUM_SEEDS;
use tgraphlet::driver::{approx_dataset, ba_bases, count_dataset, gram_from_features, CountSpec, Family};
use tgraphlet::psd::check_psd;
use tgraphlet::verify::{default_counters, verify_dataset};
use tgraphlet_core::approx::{required_sample_size, sample, PreparedSampler, SampleConfig};
use tgraphlet_core::dissemination::{
    apply_missing_info, generate_ba, infected_nodes, make_task2, simulate_si, SeedSelection, SiConfig, INFECTED,
    SUSCEPTIBLE,
};
use tgraphlet_core::exact::count_wedges;
use tgraphlet_core::graphlets::enumerate_classes;
use tgraphlet_core::kernel::{loo_1nn_accuracy, loo_1nn_with_labels, normalize_l1, GramMatrix, Normalization};
use tgraphlet_core::rng::{graph_rng, seeded};
use tgraphlet_core::tgraph::{DatasetMeta, TemporalEdge};
use tgraphlet_core::{Dataset, FeatureVector, GraphletFamily, NodeCounts, TemporalGraph, Time, Window};

use common::random_dataset;

type Outcome = (bool, String);
type Criterion = (&'static str, fn() -> Outcome);

fn pool() -> rayon::ThreadPool {
    tgraphlet::driver::thread_pool(None).unwrap()
}

fn codebooks() -> Outcome {
    let start = Instant::now();
    let k3 = NodeCounts::only(3);
    let k23 = NodeCounts::from_slice(&[2, 3]).unwrap();
    let wedges = enumerate_classes(k3, 2, None).unwrap().len();
    let three = enumerate_classes(k23, 3, None).unwrap();
    let tri = three.iter().filter(|c| c.family() == GraphletFamily::Triangle).count();
    let stars = three.iter().filter(|c| c.family() == GraphletFamily::Star3).count();
    let lw = enumerate_classes(k3, 2, Some(2)).unwrap().len();
    let l3 = enumerate_classes(k23, 3, Some(2)).unwrap().len();
    let secs = start.elapsed().as_secs_f64();
    let ok = (wedges, three.len(), tri, stars, lw, l3) == (4, 36, 8, 24, 64, 2304) && secs < 1.0;
    (ok, format!("wedges={wedges} l3={} triangles={tri} stars={stars} labeled wedges={lw} labeled l3={l3} in {secs:.3}s", three.len()))
}

fn oracle_equivalence() -> Outcome {
    let start = Instant::now();
    let pool = pool();
    let deltas = [Window::Bounded(1), Window::Bounded(5), Window::Unbounded];
    let mut checks = 0;
    let mut rng = seeded(2);
    for (alphabet, seed) in [(1usize, 100u64), (2, 200)] {
        let mut graphs = Vec::new();
        for i in 0..50 {
            let n = rng.random_range(2..=12);
            let m = rng.random_range(0..=40);
            let mut one = random_dataset(seed + i, 1, n, m, 15, alphabet).into_graphs();
            one[0].id = format!("L{alphabet}-{i}");
            graphs.append(&mut one);
        }
        let ds = Dataset::new(graphs, DatasetMeta::default()).unwrap();
        let report = verify_dataset(&ds, &deltas, &default_counters(), false, &pool).unwrap();
        if let Some(m) = report.mismatch {
            return (false, format!("mismatch: {m}"));
        }
        checks += report.checks;
    }
    let secs = start.elapsed().as_secs_f64();
    (secs < 30.0, format!("100 graphs, {checks} counter comparisons, all equal, {secs:.2}s"))
}

/// Fixture with exactly 20 wedges at δ = 5 spread over centers of
/// different degrees.
fn twenty_wedge_fixture() -> TemporalGraph {
    let e = |u, v, t| TemporalEdge::new(u, v, t);
    let edges = vec![
        e(0, 1, 1), e(0, 2, 2), e(0, 3, 3), e(0, 4, 4), e(0, 5, 20),
        e(5, 6, 21), e(6, 7, 22), e(7, 8, 23),
        e(9, 10, 30), e(9, 11, 31), e(9, 12, 32), e(9, 13, 40),
        e(14, 15, 50), e(14, 16, 51), e(14, 17, 52), e(14, 18, 53),
        e(15, 20, 52), e(20, 21, 53),
    ];
    TemporalGraph::new(22, edges, 1).unwrap()
}

fn sampler_correctness() -> Outcome {
    // (a) discard mode against the exact normalized vector
    let mut rng = seeded(31);
    let g = common::random_graph(&mut rng, 30, 150, 100, 2);
    let delta = Window::Bounded(30);
    let exact = count_wedges(&g, delta, true).unwrap();
    let total = exact.total();
    let exact = normalize_l1(&exact.to_features()).unwrap();
    let runs = 200;
    let mut mean: BTreeMap<_, f64> = BTreeMap::new();
    for r in 0..runs {
        let cfg = SampleConfig { rejection: false, ..SampleConfig::new(1000, r).with_delta(delta) };
        for (c, w) in sample(&g, &cfg).unwrap().features.iter() {
            *mean.entry(c.clone()).or_default() += w / runs as f64;
        }
    }
    let mut codes: Vec<_> = mean.keys().cloned().collect();
    codes.extend(exact.iter().map(|(c, _)| c.clone()));
    let linf = codes.iter().map(|c| (mean.get(c).copied().unwrap_or(0.0) - exact.get(c)).abs()).fold(0.0, f64::max);
    let a = total >= 100 && linf <= 0.02;

    // (b) rejection mode uniformity over the 20 wedges of the fixture
    let f = twenty_wedge_fixture();
    let wedges = count_wedges(&f, Window::Bounded(5), false).unwrap().total();
    let prepared = PreparedSampler::new(&f, false).unwrap();
    let mut rng = graph_rng(5, 0);
    let mut hits: BTreeMap<(u32, u32), u64> = BTreeMap::new();
    let target = 50_000u64;
    let mut accepted = 0;
    while accepted < target {
        if let Some((_, x, y)) = prepared.sampler().draw_delta(&mut rng, 5) {
            *hits.entry((x, y)).or_default() += 1;
            accepted += 1;
        }
    }
    let expected = target as f64 / 20.0;
    let chi2: f64 = hits.values().map(|&o| (o as f64 - expected).powi(2) / expected).sum();
    // 0.999 quantile of chi-square with 19 degrees of freedom
    const CHI2_19_999: f64 = 43.820;
    let b = wedges == 20 && hits.len() == 20 && chi2 < CHI2_19_999;

    // (c) sample size formula
    let s = required_sample_size(100, 64, 0.64, 0.05).unwrap();
    let c = s == 62265;
    (
        a && b && c,
        format!(
            "(a) {total} wedges, L_inf={linf:.4} (b) {} wedges hit, chi2={chi2:.2} (c) s={s}",
            hits.len()
        ),
    )
}

fn kernel_validity() -> Outcome {
    let pool = pool();
    let ds = random_dataset(41, 50, 10, 30, 40, 2);
    let ids: Vec<String> = ds.graphs().iter().map(|r| r.id.clone()).collect();
    let mut vectors: Vec<(String, Vec<FeatureVector>)> = Vec::new();
    let specs = [
        (Family::Wedge, Window::Bounded(5), None, None),
        (Family::Wedge, Window::Unbounded, None, None),
        (Family::Star, Window::Bounded(10), None, None),
        (Family::Triangle, Window::Unbounded, None, None),
        (Family::All, Window::Bounded(10), Some(3), Some(vec![2, 3])),
    ];
    for (family, delta, ell, k) in specs {
        let spec = CountSpec::new(family, delta, ell, k, true, false, false).unwrap();
        let counts = count_dataset(&ds, &spec, &pool).unwrap();
        vectors.push((format!("{}@{delta}", family.name()), counts.iter().map(|c| c.to_features()).collect()));
    }
    let cfg = SampleConfig::new(500, 3).with_delta(Window::Bounded(10));
    let sampled = approx_dataset(&ds, &cfg, &pool).unwrap();
    vectors.push(("approx@10".into(), sampled.into_iter().map(|s| s.features).collect()));

    let mut worst = f64::INFINITY;
    let mut grams = 0;
    for (name, vs) in &vectors {
        for mode in [Normalization::FeatureL1, Normalization::FeatureL1PlusCosine] {
            let k: GramMatrix = gram_from_features(vs, ids.clone(), ds.class_labels(), mode, &pool).unwrap();
            grams += 1;
            let psd = check_psd(&k, 1e-8).unwrap();
            worst = worst.min(psd.min_eigenvalue);
            if !psd.passed || !k.is_symmetric() {
                return (false, format!("{name} {}: min eigenvalue {:e}", mode.name(), psd.min_eigenvalue));
            }
            if mode == Normalization::FeatureL1PlusCosine {
                for (i, v) in vs.iter().enumerate() {
                    if !v.is_empty() && k.get(i, i) != 1.0 {
                        return (false, format!("{name}: K[{i}][{i}] = {}", k.get(i, i)));
                    }
                }
            }
        }
    }
    (true, format!("{grams} Gram matrices over 50 graphs symmetric and PSD, min eigenvalue {worst:e}"))
}

/// Task-2 dataset on 100 BA bases (n=100, m=3, t_max=1000).
fn task2_dataset(seed: u64) -> Dataset {
    let bases = ba_bases(100, 3, 1000, 100, seed).unwrap();
    make_task2(&bases, 0.2, 0.8, DEFAULT_NUM_SEEDS, seed).unwrap()
}

fn wedge_gram(ds: &Dataset, pool: &rayon::ThreadPool) -> GramMatrix {
    let spec = CountSpec::new(Family::Wedge, Window::Bounded(100), None, None, true, false, false).unwrap();
    let vectors: Vec<FeatureVector> = count_dataset(ds, &spec, pool).unwrap().iter().map(|c| c.to_features()).collect();
    let ids = ds.graphs().iter().map(|r| r.id.clone()).collect();
    gram_from_features(&vectors, ids, ds.class_labels(), Normalization::FeatureL1PlusCosine, pool).unwrap()
}

fn permuted_accuracies(k: &GramMatrix, shuffles: usize, seed: u64) -> Vec<f64> {
    let mut rng = seeded(seed);
    let mut labels = k.class_labels().to_vec();
    (0..shuffles)
        .map(|_| {
            labels.shuffle(&mut rng);
            loo_1nn_with_labels(k, &labels).unwrap()
        })
        .collect()
}

fn classification_smoke() -> Outcome {
    let start = Instant::now();
    let pool = pool();
    let ds = task2_dataset(2024);
    let k = wedge_gram(&ds, &pool);
    let acc = loo_1nn_accuracy(&k).unwrap();
    let perm = permuted_accuracies(&k, 10, 7);
    let max_perm = perm.iter().copied().fold(0.0, f64::max);
    let secs = start.elapsed().as_secs_f64();
    (
        acc >= 0.70 && max_perm <= 0.65 && secs < 60.0,
        format!("{} graphs, LOO-1NN {acc:.3}, permuted max {max_perm:.3}, {secs:.2}s", ds.len()),
    )
}

fn median(mut xs: Vec<f64>) -> f64 {
    xs.sort_by(f64::total_cmp);
    xs[xs.len() / 2]
}

fn scale_runtime() -> Outcome {
    let g = generate_ba(5000, 10, 1000, 1).unwrap();
    let edges = g.num_edges();
    let cfg = |s: usize, seed: u64| SampleConfig::new(s, seed).unlabeled();

    let approx_ms = median(
        (0..21)
            .map(|r| {
                let t = Instant::now();
                sample(&g, &cfg(200, r)).unwrap();
                t.elapsed().as_secs_f64() * 1e3
            })
            .collect(),
    );

    let t = Instant::now();
    let exact = count_wedges(&g, Window::Unbounded, false).unwrap();
    let exact_s = t.elapsed().as_secs_f64();

    // sampling phase only; the O(n + m) tables are built once
    let prepared = PreparedSampler::new(&g, false).unwrap();
    let batch = |s: usize| {
        let t = Instant::now();
        for r in 0..400 {
            prepared.sample(&cfg(s, r)).unwrap();
        }
        t.elapsed().as_secs_f64()
    };
    let _ = batch(200);
    let (mut t200, mut t400) = (Vec::new(), Vec::new());
    for _ in 0..9 {
        t200.push(batch(200));
        t400.push(batch(400));
    }
    let ratio = median(t400) / median(t200);
    let ok = edges == 49_900 && approx_ms < 250.0 && exact_s < 30.0 && (1.5..=2.5).contains(&ratio);
    (
        ok,
        format!(
            "{edges} edges, approx s=200 median {approx_ms:.2} ms, exact {} wedges in {exact_s:.2}s, sampling time ratio s=400/s=200 {ratio:.2}",
            exact.total()
        ),
    )
}

fn infection_time(g: &TemporalGraph, v: u32) -> Option<Time> {
    let tl = &g.timelines()[v as usize];
    if tl.default_label() == INFECTED {
        return Some(0);
    }
    tl.events().iter().find(|&&(_, l)| l == INFECTED).map(|&(t, _)| t)
}

fn dissemination_invariants() -> Outcome {
    let mut rng = seeded(71);
    let sims = 50;
    let mut infected_total = 0;
    for i in 0..sims {
        let mut base = common::random_graph(&mut rng, 30, 120, 50, 1);
        base = base.with_alphabet_size(2).unwrap();
        let seeds: Vec<u32> = vec![rng.random_range(0..30), rng.random_range(0..30)];
        let p = [0.3, 0.7, 1.0][i % 3];
        let cfg = SiConfig { infection_probability: p, seeds: SeedSelection::FixedList(seeds.clone()), seed: i as u64 };
        let g = simulate_si(&base, &cfg).unwrap();
        for v in 0..30u32 {
            let tl = &g.timelines()[v as usize];
            // SI: at most one event, susceptible to infected
            if tl.default_label() != SUSCEPTIBLE || tl.events().len() > 1 || tl.events().iter().any(|e| e.1 != INFECTED) {
                return (false, format!("simulation {i}: node {v} timeline {:?}", tl.events()));
            }
            match infection_time(&g, v) {
                Some(0) if seeds.contains(&v) => {}
                Some(t) if !seeds.contains(&v) => {
                    let witnessed = g.edges().iter().any(|e| {
                        e.target == v && e.time + 1 == t && infection_time(&g, e.source).is_some_and(|s| s <= e.time)
                    });
                    if !witnessed {
                        return (false, format!("simulation {i}: node {v} infected at {t} without a path"));
                    }
                }
                None if !seeds.contains(&v) => {}
                other => return (false, format!("simulation {i}: node {v} infection {other:?}")),
            }
        }
        if p == 1.0 {
            for e in g.edges() {
                let src = infection_time(&g, e.source);
                if src.is_some_and(|s| s <= e.time) && !infection_time(&g, e.target).is_some_and(|t| t <= e.time + 1) {
                    return (false, format!("simulation {i}: edge {e:?} did not transmit at p=1"));
                }
            }
        }
        infected_total += infected_nodes(&g).len();
    }

    // p-monotonicity of the mean infected count
    let base = generate_ba(100, 3, 1000, 5).unwrap();
    let mut means = Vec::new();
    let mut prev: Option<(f64, f64)> = None;
    for p in [0.1, 0.4, 0.7, 1.0] {
        let counts: Vec<f64> = (0..sims as u64)
            .map(|r| {
                let cfg = SiConfig { infection_probability: p, seeds: SeedSelection::UniformRandom(3), seed: r };
                infected_nodes(&simulate_si(&base, &cfg).unwrap()).len() as f64
            })
            .collect();
        let mean = counts.iter().sum::<f64>() / sims as f64;
        let var = counts.iter().map(|c| (c - mean).powi(2)).sum::<f64>() / (sims - 1) as f64;
        if let Some((m0, v0)) = prev {
            if mean + ((v0 + var) / sims as f64).sqrt() < m0 {
                return (false, format!("mean infected count drops to {mean} at p={p} from {m0}"));
            }
        }
        prev = Some((mean, var));
        means.push(format!("{mean:.1}"));
    }

    // floor rule of the missing-information step
    let bases: Vec<TemporalGraph> = (0..25).map(|i| generate_ba(50, 2, 200, i).unwrap()).collect();
    let ds = make_task2(&bases, 0.3, 0.9, 2, 9).unwrap();
    for f in [0.0, 0.4, 0.5, 0.8, 1.0] {
        let out = apply_missing_info(&ds, f, 13).unwrap();
        for (a, b) in ds.graphs().iter().zip(out.graphs()) {
            let before = infected_nodes(&a.graph).len();
            let after = infected_nodes(&b.graph).len();
            let ok = after == before - (f * before as f64).floor() as usize
                && a.graph.edges() == b.graph.edges()
                && a.class_label == b.class_label;
            if !ok {
                return (false, format!("fraction {f}: {before} infected became {after} in {}", a.id));
            }
        }
    }
    (
        true,
        format!("{sims} simulations ({infected_total} infected nodes) sound; mean infected by p: {}", means.join(" ")),
    )
}

fn mean_se(xs: &[f64]) -> (f64, f64) {
    let n = xs.len() as f64;
    let m = xs.iter().sum::<f64>() / n;
    let var = xs.iter().map(|x| (x - m).powi(2)).sum::<f64>() / (n - 1.0);
    (m, (var / n).sqrt())
}

fn missing_information_trend() -> Outcome {
    let pool = pool();
    let fractions = [0.0, 0.4, 0.8];
    let mut acc = vec![Vec::new(); fractions.len()];
    let mut chance = Vec::new();
    for seed in 1..=5u64 {
        let ds = task2_dataset(seed);
        for (i, &f) in fractions.iter().enumerate() {
            let k = wedge_gram(&apply_missing_info(&ds, f, seed).unwrap(), &pool);
            acc[i].push(loo_1nn_accuracy(&k).unwrap());
            if f == 0.4 {
                chance.extend(permuted_accuracies(&k, 10, seed));
            }
        }
    }
    let stats: Vec<(f64, f64)> = acc.iter().map(|a| mean_se(a)).collect();
    let nonincreasing = stats.windows(2).all(|w| w[1].0 <= w[0].0 + (w[0].1.powi(2) + w[1].1.powi(2)).sqrt());
    let chance_max = chance.iter().copied().fold(0.0, f64::max);
    let above = stats[1].0 > chance_max;
    let show: Vec<String> =
        fractions.iter().zip(&stats).map(|(f, (m, se))| format!("{f}: {m:.3}±{se:.3}")).collect();
    (nonincreasing && above, format!("{}; permuted max at 0.4: {chance_max:.3}", show.join(", ")))
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("codebook sizes", codebooks),
        ("oracle equivalence", oracle_equivalence),
        ("sampler correctness", sampler_correctness),
        ("kernel validity", kernel_validity),
        ("classification smoke", classification_smoke),
        ("scale and runtime", scale_runtime),
        ("dissemination invariants", dissemination_invariants),
        ("missing-information trend", missing_information_trend),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let (ok, detail) = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|e| {
            let msg = e.downcast_ref::<String>().cloned().or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()));
            (false, format!("panicked: {}", msg.unwrap_or_default()))
        });
        println!("criterion {} {name}: {} ({detail})", i + 1, if ok { "PASS" } else { "FAIL" });
        failed += usize::from(!ok);
    }
    if failed > 0 {
        println!("{failed} of {} criteria failed", criteria.len());
        std::process::exit(1);
    }
}

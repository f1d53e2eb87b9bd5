//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Runs as a plain binary (`harness = false`) so that every line is printed
//! regardless of outcome; the process fails if any criterion fails.

use std::fmt::Write as _;
use std::path::Path;
use std::process::Command as Process;
use std::time::{Duration, Instant};

use lapchi::bounds::{lambda_chromatic_bound, sigma_chromatic_bound, sigma_residual};
use lapchi::colouring::{
    check_extremal_colourings, enumerate_proper_colourings, exact_chromatic_number,
    exact_colouring, greedy_colouring, is_equitable, is_regular_colouring, random_partition,
    EQUITABLE_TOL,
};
use lapchi::corpus;
use lapchi::eigen::{eigenvalues, verify_interlacing, Spectrum};
use lapchi::expansion::{
    check_quotient_expansion, check_regular_extremal, expansion_bounds_from_values,
    for_each_partition, gamma, gamma_meets_bound, gamma_star, gamma_star_meets_bound,
    is_regular_partition, phi_exact, phi_heuristic, psi_exact, psi_heuristic,
};
use lapchi::graph::{Graph, Partition};
use lapchi::hypergraph::{
    check_lambda_max_bound, check_lambda_max_equality, generate_random_linear, generate_windmill,
    underlying_graph, LinearHypergraph,
};
use lapchi::laplacian::{
    commutation_residual, laplacian_spectrum, quotient_graph, quotient_laplacian, quotient_trace,
};
use lapchi::{Error, Verdict, EIGEN_TOL};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const TOL: f64 = 1e-9;

/// Outcome of one criterion: failures (empty means pass) and a summary.
struct Outcome {
    failures: Vec<String>,
    summary: String,
}

impl Outcome {
    fn new() -> Self {
        Self {
            failures: Vec::new(),
            summary: String::new(),
        }
    }

    fn check(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(detail());
        }
    }

    fn within(&mut self, elapsed: Duration, limit: Duration) {
        self.check(elapsed < limit, || {
            format!("took {elapsed:?}, limit {limit:?}")
        });
    }
}

fn spectrum(g: &Graph) -> Spectrum {
    laplacian_spectrum(g, EIGEN_TOL).unwrap()
}

fn connected_upto(n: usize) -> Vec<Graph> {
    (2..=n).flat_map(corpus::connected_graphs).collect()
}

fn partition(assignment: &[usize], k: usize) -> Partition {
    Partition::new(assignment.to_vec(), k).unwrap()
}

fn cheeger_by_subsets(g: &Graph) -> f64 {
    let n = g.order();
    let mut best = f64::INFINITY;
    for mask in 1u32..(1 << n) - 1 {
        let inside = |a: usize| mask >> a & 1 == 1;
        let mut cut = 0.0;
        for &(u, v, w) in g.edges() {
            if inside(u) != inside(v) {
                cut += w;
            }
        }
        let vol_s: f64 = (0..n).filter(|&a| inside(a)).map(|a| g.degree(a)).sum();
        let vol_t: f64 = (0..n).filter(|&a| !inside(a)).map(|a| g.degree(a)).sum();
        best = best.min(cut / vol_s.min(vol_t));
    }
    best
}

fn spectral_correctness() -> Outcome {
    let mut o = Outcome::new();
    let start = Instant::now();
    for n in 2..=10 {
        let s = spectrum(&corpus::complete(n));
        let top = n as f64 / (n - 1) as f64;
        o.check(s.values()[0].abs() <= TOL, || {
            format!("K{n}: smallest {}", s.values()[0])
        });
        for &x in &s.values()[1..] {
            o.check((x - top).abs() <= TOL, || {
                format!("K{n}: eigenvalue {x} != {top}")
            });
        }
    }
    let mut bipartite = 0;
    for p in 1..=5 {
        for q in p..=5 {
            let top = spectrum(&corpus::complete_bipartite(p, q)).largest();
            o.check((top - 2.0).abs() <= TOL, || {
                format!("K{p},{q}: largest {top}")
            });
            bipartite += 1;
        }
    }
    for n in (4..=20).step_by(2) {
        let top = spectrum(&corpus::cycle(n)).largest();
        o.check((top - 2.0).abs() <= TOL, || format!("C{n}: largest {top}"));
        bipartite += 1;
    }
    let elapsed = start.elapsed();
    o.within(elapsed, Duration::from_secs(1));
    o.summary = format!("K2..K10 exact, {bipartite} bipartite graphs at 2, {elapsed:.2?}");
    o
}

fn bound_soundness() -> Outcome {
    let mut o = Outcome::new();
    let start = Instant::now();
    let mut graphs = connected_upto(7);
    let exhaustive = graphs.len();
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for i in 0..200 {
        let n = rng.gen_range(4..=12);
        let density = rng.gen_range(0.15..0.9);
        let max_weight = if i % 2 == 0 { 1 } else { 3 };
        graphs.push(corpus::random_graph(n, density, max_weight, 10_000 + i));
    }
    let mut tight = 0;
    for g in &graphs {
        let s = spectrum(g);
        let chi = exact_chromatic_number(g, 24).unwrap();
        let sb = sigma_chromatic_bound(&s).unwrap();
        o.check(sb <= chi, || {
            format!("sigma bound {sb} > chi {chi} on {:?}", g.edges())
        });
        match lambda_chromatic_bound(&s) {
            Ok(lb) => o.check(lb <= chi, || {
                format!("lambda bound {lb} > chi {chi} on {:?}", g.edges())
            }),
            Err(e) => o.failures.push(format!("lambda bound failed: {e}")),
        }
        tight += usize::from(sb == chi);
    }
    let elapsed = start.elapsed();
    o.within(elapsed, Duration::from_secs(120));
    o.summary = format!(
        "{exhaustive} connected graphs n<=7 + 200 random n<=12, sigma bound tight on {tight}, {elapsed:.2?}"
    );
    o
}

fn tightness() -> Outcome {
    let mut o = Outcome::new();
    let mut cases: Vec<(String, Graph, usize)> = (2..=10)
        .map(|n| (format!("K{n}"), corpus::complete(n), n))
        .collect();
    cases.push(("Petersen".into(), corpus::petersen(), 3));
    cases.push(("C5".into(), corpus::cycle(5), 3));
    for (name, g, chi) in &cases {
        let b = sigma_chromatic_bound(&spectrum(g)).unwrap();
        o.check(b == *chi, || format!("{name}: sigma bound {b} != {chi}"));
        let exact = exact_chromatic_number(g, 24).unwrap();
        o.check(exact == *chi, || {
            format!("{name}: chromatic number {exact} != {chi}")
        });
    }
    o.summary = format!("{} witnesses", cases.len());
    o
}

fn sigma_residual_suite() -> Outcome {
    let mut o = Outcome::new();
    let start = Instant::now();
    let graphs = connected_upto(7);
    let mut partitions = 0u64;
    let mut worst = f64::INFINITY;
    for g in &graphs {
        let s = spectrum(g);
        let n = g.order();
        for k in 1..=n {
            for_each_partition(n, k, |a| {
                let r = sigma_residual(g, &partition(a, k), &s).unwrap();
                partitions += 1;
                worst = worst.min(r);
                if r < -TOL {
                    o.failures
                        .push(format!("residual {r} for {a:?} on {:?}", g.edges()));
                }
            });
        }
    }
    let elapsed = start.elapsed();
    o.within(elapsed, Duration::from_secs(300));
    o.summary = format!(
        "{} graphs, {partitions} partitions, min residual {worst:.3e}, {elapsed:.2?}",
        graphs.len()
    );
    o
}

fn equitable_iff_commuting() -> Outcome {
    let mut o = Outcome::new();
    let mut total = 0;
    let mut equitable = 0;
    let mut agree = |g: &Graph, p: &Partition, o: &mut Outcome| {
        let eq = is_equitable(g, p, EQUITABLE_TOL).unwrap().equitable;
        let res = commutation_residual(g, p).unwrap();
        total += 1;
        equitable += usize::from(eq);
        o.check(eq == (res <= TOL), || {
            format!(
                "equitable = {eq}, residual {res} for {:?} on {:?}",
                p.assignment(),
                g.edges()
            )
        });
    };
    for n in 2..=6 {
        for g in corpus::graphs_without_isolated_vertices(n) {
            for k in 1..=n {
                for_each_partition(n, k, |a| agree(&g, &partition(a, k), &mut o));
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for i in 0..500 {
        let n = rng.gen_range(2..=15);
        let g = corpus::random_graph(n, rng.gen_range(0.1..0.9), rng.gen_range(1..=3), 20_000 + i);
        let k = rng.gen_range(1..=n);
        let p = random_partition(n, k, &mut rng).unwrap();
        agree(&g, &p, &mut o);
    }
    o.summary = format!(
        "{total} (graph, partition) pairs, {equitable} equitable, agreement checked on all"
    );
    o
}

fn interlacing() -> Outcome {
    let mut o = Outcome::new();
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut tight = 0;
    for i in 0..500 {
        let n = rng.gen_range(2..=15);
        let g = corpus::random_graph(n, rng.gen_range(0.1..0.9), rng.gen_range(1..=3), 30_000 + i);
        let k = rng.gen_range(1..=n);
        let p = random_partition(n, k, &mut rng).unwrap();
        let theta = eigenvalues(
            &quotient_laplacian(&quotient_graph(&g, &p).unwrap()),
            EIGEN_TOL,
        )
        .unwrap();
        let r = verify_interlacing(&spectrum(&g), &theta, TOL).unwrap();
        tight += usize::from(r.tight);
        o.check(r.holds, || format!("interlacing fails: {:?}", r.violations));
    }
    let mut colourings = 0;
    let mut trace_check = |g: &Graph, p: &Partition, o: &mut Outcome| {
        let q = quotient_graph(g, p).unwrap();
        let k = p.class_count() as f64;
        let closed = quotient_trace(&q);
        let matrix = quotient_laplacian(&q).trace();
        colourings += 1;
        o.check(
            (closed - k).abs() <= TOL && (matrix - k).abs() <= TOL,
            || format!("trace {closed} / {matrix} != {k} for {:?}", p.assignment()),
        );
    };
    for g in connected_upto(6) {
        for k in 1..=g.order() {
            for p in enumerate_proper_colourings(&g, k, usize::MAX)
                .unwrap()
                .colourings
            {
                trace_check(&g, &p, &mut o);
            }
        }
    }
    for i in 0..500 {
        let n = rng.gen_range(2..=15);
        let g = corpus::random_graph(n, rng.gen_range(0.1..0.9), rng.gen_range(1..=3), 40_000 + i);
        trace_check(&g, &greedy_colouring(&g, i), &mut o);
        trace_check(&g, &exact_colouring(&g, 24).unwrap(), &mut o);
    }
    o.summary = format!("500 random quotients interlace ({tight} tight), trace = k on {colourings} proper colourings");
    o
}

/// Running extremes of `γ` and `γ*` per class count.
struct Extremes {
    psi: Vec<f64>,
    phi: Vec<f64>,
}

fn expansion_suite() -> Outcome {
    let mut o = Outcome::new();
    let start = Instant::now();
    let mut graphs = connected_upto(8);
    let enumerated = graphs.len();
    graphs.push(corpus::star(7));
    graphs.push(corpus::random_graph(8, 0.5, 3, 77));
    graphs.push(corpus::random_graph(8, 0.3, 2, 78));
    let mut partitions = 0u64;
    let mut equality_cases = 0u64;
    for g in &graphs {
        let n = g.order();
        let s = spectrum(g);
        let mut ext = Extremes {
            psi: vec![f64::NEG_INFINITY; n + 1],
            phi: vec![f64::INFINITY; n + 1],
        };
        for k in 2..=n {
            let bound = 1.0 / (k - 1) as f64;
            for_each_partition(n, k, |a| {
                let p = partition(a, k);
                partitions += 1;
                let gm = gamma(g, &p).unwrap();
                let gs = gamma_star(g, &p).unwrap();
                ext.psi[k] = ext.psi[k].max(gm);
                ext.phi[k] = ext.phi[k].min(gs);
                let regular = is_regular_partition(g, &p).unwrap();
                o.check(gm <= bound + TOL, || {
                    format!("gamma {gm} > 1/(k-1) for {a:?} on {:?}", g.edges())
                });
                let eq = gamma_meets_bound(g, &p).unwrap();
                o.check(eq == regular, || {
                    format!("gamma equality {eq} vs regular {regular} for {a:?}")
                });
                equality_cases += u64::from(eq);
                if g.monochromatic_edge(&p).is_none() {
                    o.check(gs >= bound - TOL, || {
                        format!("gamma* {gs} < 1/(k-1) for {a:?} on {:?}", g.edges())
                    });
                    let eq = gamma_star_meets_bound(g, &p).unwrap();
                    o.check(eq == regular, || {
                        format!("gamma* equality {eq} vs regular {regular} for {a:?}")
                    });
                    let colouring_regular = is_regular_colouring(g, &p).unwrap();
                    o.check(colouring_regular == regular, || {
                        format!("regularity disagrees for {a:?}")
                    });
                }
                let l9 = check_quotient_expansion(g, &p).unwrap();
                o.check(l9.holds, || {
                    format!("quotient bounds fail {l9:?} for {a:?} on {:?}", g.edges())
                });
            });
            let t = expansion_bounds_from_values(&s, k, ext.psi[k], ext.phi[k]);
            o.check(t.holds, || {
                format!("psi/phi bounds fail {t:?} on {:?}", g.edges())
            });
        }
    }
    let mut cheeger = 0;
    let mut oracle_graphs: Vec<Graph> = connected_upto(8);
    oracle_graphs.extend((2..=10).map(corpus::complete));
    oracle_graphs.extend((3..=10).map(corpus::cycle));
    oracle_graphs.extend([corpus::petersen(), corpus::cube(), corpus::star(9)]);
    for p in 1..=5 {
        for q in p..=5 {
            oracle_graphs.push(corpus::complete_bipartite(p, q));
        }
    }
    for g in &oracle_graphs {
        let ours = phi_exact(g, 2, 12).unwrap().value;
        let oracle = cheeger_by_subsets(g);
        cheeger += 1;
        o.check(ours == oracle, || {
            format!("phi_2 {ours} != subset oracle {oracle} on {:?}", g.edges())
        });
    }
    let elapsed = start.elapsed();
    o.summary = format!(
        "{enumerated} connected graphs n<=8 + 3 extra, {partitions} partitions ({equality_cases} at equality), \
         Cheeger oracle exact on {cheeger} graphs, {elapsed:.2?}"
    );
    o
}

fn extremal_colourings() -> Outcome {
    let mut o = Outcome::new();
    let mut cases: Vec<(String, Graph, usize)> = Vec::new();
    for n in 2..=8 {
        cases.push((format!("K{n}"), corpus::complete(n), n));
    }
    for n in [4, 6, 8, 10] {
        cases.push((format!("C{n}"), corpus::cycle(n), 2));
    }
    cases.push(("K3,3".into(), corpus::complete_bipartite(3, 3), 2));
    cases.push(("Q3".into(), corpus::cube(), 2));
    for m in 3..=5 {
        for e in 1..=4 {
            let g = underlying_graph(&generate_windmill(m, e).unwrap()).unwrap();
            cases.push((format!("windmill({m},{e})"), g, m));
        }
    }
    for (i, g) in connected_upto(7).into_iter().enumerate() {
        for k in 2..=g.order() {
            cases.push((format!("connected#{i}"), g.clone(), k));
        }
    }
    let (mut met, mut checked, mut cor11) = (0, 0, 0);
    let mut windmills_met = 0;
    for (name, g, k) in &cases {
        let s = spectrum(g);
        let r = check_extremal_colourings(g, &s, *k, 1_000_000).unwrap();
        if r.hypothesis {
            met += 1;
            checked += r.colourings_checked;
            windmills_met += usize::from(name.starts_with("windmill"));
            o.check(!r.truncated, || format!("{name}: enumeration truncated"));
            for v in [&r.equitable, &r.regular, &r.divisibility] {
                o.check(v.holds(), || format!("{name}, k = {k}: {v:?}"));
            }
        } else if name.starts_with('K') || name.starts_with("windmill") || name == "C6" {
            o.failures
                .push(format!("{name}: hypothesis expected to hold"));
        }
        match check_regular_extremal(g, *k, 100_000).unwrap() {
            Verdict::Holds => cor11 += 1,
            Verdict::Violated { detail } => o.failures.push(format!("{name}: {detail}")),
            Verdict::HypothesisNotMet { .. } => {}
        }
    }
    o.check(windmills_met >= 3, || {
        format!("only {windmills_met} windmill instances met the hypothesis")
    });
    o.summary = format!(
        "{} (graph, k) cases, hypothesis met on {met} ({windmills_met} windmills), {checked} colourings all \
         equitable/regular/divisible, regular-colouring identity holds on {cor11}",
        cases.len()
    );
    o
}

fn hypergraph_suite() -> Outcome {
    let mut o = Outcome::new();
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut random: Vec<LinearHypergraph> = Vec::new();
    let mut seed = 50_000;
    let mut failed_generations = 0;
    while random.len() < 100 {
        let m = 3 + random.len() % 3;
        let e = rng.gen_range(2..=8);
        let n = rng.gen_range(m + 1..=m * e);
        seed += 1;
        match generate_random_linear(m, e, n, seed) {
            Ok(h) => random.push(h),
            Err(Error::GenerationFailed { .. }) => failed_generations += 1,
            Err(other) => o.failures.push(format!("generator error {other}")),
        }
    }
    let mut instances: Vec<(String, LinearHypergraph)> = random
        .into_iter()
        .enumerate()
        .map(|(i, h)| (format!("random#{i}"), h))
        .collect();
    let mut lambda_max_bound = 0;
    for (name, h) in &instances {
        let c = check_lambda_max_bound(h).unwrap();
        lambda_max_bound += 1;
        o.check(c.verdict.holds(), || format!("{name}: {:?}", c.verdict));
    }
    for m in 3..=5 {
        for e in 1..=5 {
            instances.push((
                format!("windmill({m},{e})"),
                generate_windmill(m, e).unwrap(),
            ));
        }
    }
    let mut efl = 0;
    for m in 3..=5 {
        let mut s = 0;
        loop {
            s += 1;
            if let Ok(h) = generate_random_linear(m, m, m * m, 60_000 + 10 * m as u64 + s) {
                if h.order() > h.edge_count() {
                    instances.push((format!("efl-random(m={m})"), h));
                    efl += 1;
                    break;
                }
            }
        }
        instances.push((
            format!("efl-windmill(m={m})"),
            generate_windmill(m, m).unwrap(),
        ));
        efl += 1;
    }
    let mut lambda_max_equality = 0;
    let mut colour_checked = 0;
    for (name, h) in &instances {
        let c = check_lambda_max_equality(h).unwrap();
        if h.order() > h.edge_count() {
            lambda_max_equality += 1;
            o.check(c.verdict.holds(), || format!("{name}: {:?}", c.verdict));
            o.check((c.lambda_max - c.target).abs() <= TOL, || {
                format!("{name}: {} vs {}", c.lambda_max, c.target)
            });
        }
        let g = underlying_graph(h).unwrap();
        let m = h.uniformity();
        for (a, &d) in h.vertex_degrees().iter().enumerate() {
            o.check(g.degree(a) == (d * (m - 1)) as f64, || {
                format!("{name}: degree of {a}")
            });
        }
        if g.order() <= 20 && h.order() > h.edge_count() {
            let found = enumerate_proper_colourings(&g, m, 5000).unwrap();
            for p in &found.colourings {
                colour_checked += 1;
                let eq = is_equitable(&g, p, EQUITABLE_TOL).unwrap().equitable;
                let reg = is_regular_colouring(&g, p).unwrap();
                o.check(eq && reg, || {
                    format!("{name}: colouring {:?} eq {eq} reg {reg}", p.assignment())
                });
            }
        }
    }
    let elapsed = start.elapsed();
    o.within(elapsed, Duration::from_secs(60));
    o.summary = format!(
        "upper bound on {lambda_max_bound} random instances ({failed_generations} seeds skipped), equality on {lambda_max_equality} \
         instances with n > e incl. {efl} e = m, {colour_checked} m-colourings equitable and regular, {elapsed:.2?}"
    );
    o
}

fn heuristic_sidedness() -> Outcome {
    let mut o = Outcome::new();
    let mut graphs: Vec<(String, Graph)> = vec![
        ("C4".into(), corpus::cycle(4)),
        ("C5".into(), corpus::cycle(5)),
        ("C6".into(), corpus::cycle(6)),
        ("K4".into(), corpus::complete(4)),
        ("K5".into(), corpus::complete(5)),
        ("P6".into(), corpus::path(6)),
        ("star5".into(), corpus::star(5)),
        ("K3,3".into(), corpus::complete_bipartite(3, 3)),
        ("Q3".into(), corpus::cube()),
        ("Petersen".into(), corpus::petersen()),
    ];
    for seed in 0..4 {
        graphs.push((
            format!("random{seed}"),
            corpus::random_graph(9, 0.4, 3, 70_000 + seed),
        ));
    }
    let mut runs = 0;
    for (name, g) in &graphs {
        let n = g.order();
        for k in [2, 3] {
            let phi = phi_exact(g, k, 12).unwrap().value;
            let psi = psi_exact(g, k, 12).unwrap().value;
            for seed in 0..50 {
                runs += 1;
                let h_phi = phi_heuristic(g, k, seed).unwrap();
                let h_psi = psi_heuristic(g, k, seed).unwrap();
                for r in [&h_phi, &h_psi] {
                    let p = &r.argpartition;
                    let valid = p.len() == n
                        && p.class_count() == k
                        && Partition::new(p.assignment().to_vec(), k).is_ok()
                        && !r.exact;
                    o.check(valid, || {
                        format!("{name}, k = {k}, seed {seed}: invalid partition {p:?}")
                    });
                }
                o.check(h_phi.value >= phi - TOL, || {
                    format!(
                        "{name}, k = {k}, seed {seed}: phi heuristic {} < exact {phi}",
                        h_phi.value
                    )
                });
                o.check(h_psi.value <= psi + TOL, || {
                    format!(
                        "{name}, k = {k}, seed {seed}: psi heuristic {} > exact {psi}",
                        h_psi.value
                    )
                });
                let recomputed = (
                    gamma_star(g, &h_phi.argpartition).unwrap(),
                    gamma(g, &h_psi.argpartition).unwrap(),
                );
                o.check(recomputed == (h_phi.value, h_psi.value), || {
                    format!(
                        "{name}, k = {k}, seed {seed}: reported value differs from its partition"
                    )
                });
            }
        }
    }
    o.summary = format!(
        "{} graphs x k in {{2,3}} x 50 seeds = {runs} runs",
        graphs.len()
    );
    o
}

fn lapchi(args: &[&str]) -> (i32, Vec<u8>) {
    let out = Process::new(env!("CARGO_BIN_EXE_lapchi"))
        .args(args)
        .output()
        .expect("binary runs");
    (out.status.code().unwrap_or(-1), out.stdout)
}

fn write_graph(dir: &Path, name: &str, g: &Graph) -> String {
    let mut text = String::from("# generated\n");
    for &(u, v, w) in g.edges() {
        writeln!(text, "{u} {v} {w}").unwrap();
    }
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.display().to_string()
}

fn cli_determinism() -> Outcome {
    let mut o = Outcome::new();
    let dir = tempfile::tempdir().unwrap();
    let mut graphs: Vec<(String, Graph)> = vec![
        ("petersen".into(), corpus::petersen()),
        ("k5".into(), corpus::complete(5)),
        ("c6".into(), corpus::cycle(6)),
        ("cube".into(), corpus::cube()),
        ("weighted".into(), corpus::random_graph(9, 0.5, 3, 1)),
    ];
    graphs.extend((3..=12).map(|n| (format!("c{n}"), corpus::cycle(n))));
    graphs.extend((2..=10).map(|n| (format!("k{n}"), corpus::complete(n))));
    let mut runs = 0;
    let mut compare = |args: Vec<&str>, o: &mut Outcome| {
        let first = lapchi(&args);
        let second = lapchi(&args);
        runs += 1;
        o.check(first == second, || {
            format!("{args:?}: output differs between runs")
        });
        o.check(first.0 == 0, || format!("{args:?}: exit code {}", first.0));
        if args.iter().all(|a| *a != "csv" && *a != "text") {
            let text = String::from_utf8(first.1.clone()).unwrap();
            match serde_json::from_str::<serde_json::Value>(&text) {
                Ok(v) => {
                    let again = serde_json::to_string_pretty(&v).unwrap() + "\n";
                    o.check(again == text, || {
                        format!("{args:?}: JSON does not round-trip")
                    });
                }
                Err(e) => o.failures.push(format!("{args:?}: invalid JSON: {e}")),
            }
        }
    };
    for (name, g) in &graphs {
        let path = write_graph(dir.path(), &format!("{name}.txt"), g);
        for cmd in ["spectrum", "bound", "certify", "compare"] {
            compare(vec![cmd, &path], &mut o);
        }
        compare(
            vec!["bound", &path, "--with-exact", "--format", "csv"],
            &mut o,
        );
        compare(vec!["psi", &path, "--k", "2"], &mut o);
        let k = if g.order() >= 3 { "3" } else { "2" };
        compare(
            vec!["phi", &path, "--k", k, "--enum-limit", "6", "--seed", "4"],
            &mut o,
        );
    }
    for (m, e) in [(3, 3), (4, 2), (5, 3)] {
        let h = generate_windmill(m, e).unwrap();
        let text: String = h
            .hyperedges()
            .iter()
            .map(|edge| {
                edge.iter()
                    .map(|a| a.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
                    + "\n"
            })
            .collect();
        let path = dir.path().join(format!("windmill{m}{e}.txt"));
        std::fs::write(&path, text).unwrap();
        compare(vec!["hyper-check", path.to_str().unwrap()], &mut o);
    }
    compare(
        vec![
            "hyper-gen",
            "--m",
            "4",
            "--e",
            "5",
            "--n",
            "14",
            "--seed",
            "3",
        ],
        &mut o,
    );
    compare(vec!["corpus"], &mut o);
    compare(vec!["corpus", "--format", "text"], &mut o);
    o.summary = format!("{runs} command lines run twice, byte-identical, no exit code 2");
    o
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 11] = [
        ("spectral correctness", spectral_correctness),
        ("chromatic bound soundness", bound_soundness),
        ("tightness witnesses", tightness),
        (
            "quotient trace residual over all partitions",
            sigma_residual_suite,
        ),
        ("equitable iff commuting lift", equitable_iff_commuting),
        ("interlacing and colouring trace", interlacing),
        ("expansion inequalities and Cheeger oracle", expansion_suite),
        (
            "extremal colourings are equitable and regular",
            extremal_colourings,
        ),
        ("linear hypergraph spectra", hypergraph_suite),
        ("heuristic sidedness", heuristic_sidedness),
        ("CLI determinism", cli_determinism),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let o = run();
        let status = if o.failures.is_empty() {
            "PASS"
        } else {
            "FAIL"
        };
        println!("[{status}] {:>2}. {name}: {}", i + 1, o.summary);
        for f in o.failures.iter().take(5) {
            println!("         {f}");
        }
        if o.failures.len() > 5 {
            println!("         ... {} more", o.failures.len() - 5);
        }
        failed += usize::from(!o.failures.is_empty());
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}

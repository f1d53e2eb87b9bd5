//! The `corpus` command: every check over the built-in instance families.

use serde::Serialize;
use serde_json::json;

use lapchi::bounds::compare_bounds;
use lapchi::colouring::{
    check_extremal_colourings, exact_colouring, greedy_colouring, ENUMERATION_LIMIT,
};
use lapchi::corpus;
use lapchi::expansion::{check_regular_extremal, expansion_bounds_from_values, ExpansionProfile};
use lapchi::graph::Graph;
use lapchi::hypergraph::{generate_random_linear, generate_windmill, LinearHypergraph};
use lapchi::laplacian::laplacian_spectrum;
use lapchi::{Verdict, EIGEN_TOL};

use crate::commands::{extremal_class_count, hyper_results, partition_checks, COLOURING_CAP};
use crate::{CliError, CommandOutput, RunConfig, Table};

/// Random linear hypergraphs generated per uniformity.
const RANDOM_HYPERGRAPHS: u64 = 10;

#[derive(Debug, Default, Serialize)]
struct Row {
    corpus: String,
    instances: usize,
    checks: usize,
    hypotheses_met: usize,
    violations: usize,
}

impl Row {
    fn status(&self) -> &'static str {
        if self.violations == 0 {
            "pass"
        } else {
            "FAIL"
        }
    }
}

struct Tally<'a> {
    row: Row,
    details: &'a mut Vec<String>,
}

impl Tally<'_> {
    fn absorb(&mut self, name: &str, found: Vec<String>) {
        self.row.checks += 1;
        self.row.violations += found.len();
        self.details.extend(
            found
                .into_iter()
                .map(|d| format!("{}/{name}: {d}", self.row.corpus)),
        );
    }

    fn verdict(&mut self, name: &str, v: &Verdict) {
        self.row.checks += 1;
        match v {
            Verdict::Holds => self.row.hypotheses_met += 1,
            Verdict::Violated { detail } => {
                self.row.hypotheses_met += 1;
                self.row.violations += 1;
                self.details
                    .push(format!("{}/{name}: {detail}", self.row.corpus));
            }
            Verdict::HypothesisNotMet { .. } => {}
        }
    }
}

fn graph_instance(
    config: &RunConfig,
    name: &str,
    g: &Graph,
    tally: &mut Tally,
) -> Result<(), CliError> {
    let n = g.order();
    let s = laplacian_spectrum(g, EIGEN_TOL)?;
    let mut found = Vec::new();

    let exact = n <= config.exact_limit;
    let bounds = compare_bounds(g, exact, config.exact_limit)?;
    if let Some(chi) = bounds.chi_exact {
        for b in [bounds.sigma_bound, bounds.lambda_bound] {
            if b > chi {
                found.push(format!("bound {b} exceeds chromatic number {chi}"));
            }
        }
    }
    tally.absorb(&format!("{name}/bounds"), std::mem::take(&mut found));

    let mut colourings = vec![greedy_colouring(g, config.seed)];
    if exact {
        colourings.push(exact_colouring(g, config.exact_limit)?);
    }
    for p in &colourings {
        partition_checks(g, &s, p, config.tol, &mut found)?;
        tally.absorb(&format!("{name}/colouring"), std::mem::take(&mut found));
    }

    if let Some(k) =
        extremal_class_count(s.largest(), config.tol).filter(|&k| k <= n && n <= ENUMERATION_LIMIT)
    {
        let r = check_extremal_colourings(g, &s, k, COLOURING_CAP)?;
        tally.verdict(&format!("{name}/equitable"), &r.equitable);
        tally.verdict(&format!("{name}/regular"), &r.regular);
        tally.verdict(&format!("{name}/divisibility"), &r.divisibility);
    }
    if exact {
        let chi = bounds.chi_exact.expect("computed when exact");
        if chi >= 2 {
            tally.verdict(
                &format!("{name}/regular_extremal"),
                &check_regular_extremal(g, chi, COLOURING_CAP)?,
            );
        }
    }

    if n <= config.enum_limit.min(10) {
        let profile = ExpansionProfile::exhaustive(g, config.enum_limit)?;
        for k in 2..=n {
            let c = expansion_bounds_from_values(&s, k, profile.psi[k], profile.phi[k]);
            if !c.holds {
                found.push(format!("expansion bounds fail: {c:?}"));
            }
        }
        tally.absorb(&format!("{name}/expansion"), std::mem::take(&mut found));
    }
    Ok(())
}

fn hypergraph_instance(
    config: &RunConfig,
    name: &str,
    h: &LinearHypergraph,
    tally: &mut Tally,
) -> Result<(), CliError> {
    let mut out = CommandOutput::default();
    let results = hyper_results(config, h, &mut out)?;
    for key in ["lambda_max_bound", "lambda_max_equality"] {
        let met = results[key]["verdict"]["status"] != "hypothesis_not_met";
        tally.row.hypotheses_met += usize::from(met);
    }
    tally.absorb(name, out.violations);
    Ok(())
}

pub(crate) fn run(config: &RunConfig) -> Result<CommandOutput, CliError> {
    let mut details = Vec::new();
    let mut rows = Vec::new();

    let graph_family = |label: &str,
                        graphs: Vec<(String, Graph)>,
                        details: &mut Vec<String>|
     -> Result<Row, CliError> {
        let mut tally = Tally {
            row: Row {
                corpus: label.into(),
                ..Default::default()
            },
            details,
        };
        for (name, g) in &graphs {
            tally.row.instances += 1;
            graph_instance(config, name, g, &mut tally)?;
        }
        Ok(tally.row)
    };

    rows.push(graph_family(
        "complete",
        (2..=10)
            .map(|n| (format!("K{n}"), corpus::complete(n)))
            .collect(),
        &mut details,
    )?);
    rows.push(graph_family(
        "cycles",
        (3..=12)
            .map(|n| (format!("C{n}"), corpus::cycle(n)))
            .collect(),
        &mut details,
    )?);
    rows.push(graph_family(
        "named",
        vec![
            ("petersen".into(), corpus::petersen()),
            ("cube".into(), corpus::cube()),
            ("K3,3".into(), corpus::complete_bipartite(3, 3)),
            ("K4,4".into(), corpus::complete_bipartite(4, 4)),
        ],
        &mut details,
    )?);
    rows.push(graph_family(
        "connected_n_le_7",
        (2..=7)
            .flat_map(|n| {
                corpus::connected_graphs(n)
                    .into_iter()
                    .enumerate()
                    .map(move |(i, g)| (format!("n{n}#{i}"), g))
            })
            .collect(),
        &mut details,
    )?);

    let hyper_family = |label: &str,
                        instances: Vec<(String, LinearHypergraph)>,
                        details: &mut Vec<String>|
     -> Result<Row, CliError> {
        let mut tally = Tally {
            row: Row {
                corpus: label.into(),
                ..Default::default()
            },
            details,
        };
        for (name, h) in &instances {
            tally.row.instances += 1;
            hypergraph_instance(config, name, h, &mut tally)?;
        }
        Ok(tally.row)
    };

    let mut windmills = Vec::new();
    for m in 3..=5 {
        for e in 1..=5 {
            windmills.push((format!("windmill({m},{e})"), generate_windmill(m, e)?));
        }
    }
    rows.push(hyper_family("windmills", windmills, &mut details)?);

    let mut random = Vec::new();
    for m in 3..=5 {
        for i in 0..RANDOM_HYPERGRAPHS {
            let seed = config
                .seed
                .wrapping_mul(1000)
                .wrapping_add(100 * m as u64 + i);
            let e = 2 + (i as usize % 5);
            let n = m * e;
            let h = generate_random_linear(m, e, n, seed)?;
            random.push((format!("random(m={m},e={e},seed={seed})"), h));
        }
    }
    rows.push(hyper_family("random_linear", random, &mut details)?);

    let table = Table {
        header: [
            "corpus",
            "instances",
            "checks",
            "hypotheses_met",
            "violations",
            "status",
        ]
        .map(String::from)
        .to_vec(),
        rows: rows
            .iter()
            .map(|r| {
                vec![
                    r.corpus.clone(),
                    r.instances.to_string(),
                    r.checks.to_string(),
                    r.hypotheses_met.to_string(),
                    r.violations.to_string(),
                    r.status().to_string(),
                ]
            })
            .collect(),
    };
    let mut text = format!(
        "{:<18} {:>9} {:>8} {:>14} {:>10}  status\n",
        "corpus", "instances", "checks", "hypotheses_met", "violations"
    );
    for r in &rows {
        text.push_str(&format!(
            "{:<18} {:>9} {:>8} {:>14} {:>10}  {}\n",
            r.corpus,
            r.instances,
            r.checks,
            r.hypotheses_met,
            r.violations,
            r.status()
        ));
    }
    Ok(CommandOutput {
        results: json!({ "rows": rows }),
        violations: details,
        table: Some(table),
        text: Some(text),
        ..Default::default()
    })
}

use serde_json::{json, Value};

use lapchi::bounds::{compare_bounds, sigma_residual, BoundReport};
use lapchi::colouring::{
    certify, check_extremal_colourings, exact_colouring, is_equitable, ENUMERATION_LIMIT,
    EQUITABLE_TOL,
};
use lapchi::eigen::{self, Spectrum};
use lapchi::expansion::{
    check_quotient_expansion, expansion_bounds_from_values, phi_exact, phi_heuristic, psi_exact,
    psi_heuristic,
};
use lapchi::graph::{Graph, Partition};
use lapchi::hypergraph::{
    check_lambda_max_bound, check_lambda_max_equality, generate_random_linear, generate_windmill,
    underlying_graph, LinearHypergraph,
};
use lapchi::laplacian::{
    commutation_residual, laplacian_spectrum, quotient_graph, quotient_laplacian, quotient_trace,
};
use lapchi::{Verdict, EIGEN_TOL};

use crate::parse::{parse_graph, parse_hypergraph, Parsed};
use crate::{read_input, CliError, Command, CommandOutput, RunConfig, Table};

/// Most colourings enumerated for a single structural check.
pub(crate) const COLOURING_CAP: usize = 2000;

pub(crate) fn dispatch(config: &RunConfig) -> Result<(CommandOutput, Option<String>), CliError> {
    match config.command {
        Command::HyperGen => return Ok((hyper_gen(config)?, None)),
        Command::Corpus => return Ok((crate::corpus::run(config)?, None)),
        _ => {}
    }
    let (text, digest) = read_input(&config.input_path)?;
    let out = match config.command {
        Command::HyperCheck => hyper_check(config, parse_hypergraph(&text)?)?,
        command => {
            let parsed = parse_graph(&text)?;
            let mut out = match command {
                Command::Spectrum => spectrum(config, &parsed.value)?,
                Command::Bound => bound(config, &parsed.value, false)?,
                Command::Compare => bound(config, &parsed.value, true)?,
                Command::Certify => certify_command(config, &parsed)?,
                Command::Psi | Command::Phi => expansion(config, &parsed.value)?,
                _ => unreachable!("handled above"),
            };
            if let Value::Object(map) = &mut out.results {
                map.insert("labels".into(), json!(parsed.labels));
            }
            if !parsed.value.is_connected() {
                out.warnings.push(format!(
                    "graph is disconnected ({} components); eigenvalue 0 is repeated",
                    parsed.value.components().0
                ));
            }
            out
        }
    };
    Ok((out, Some(digest)))
}

fn spectrum(config: &RunConfig, g: &Graph) -> Result<CommandOutput, CliError> {
    let s = laplacian_spectrum(g, config.tol.min(EIGEN_TOL))?;
    let table = Table {
        header: vec!["index".into(), "eigenvalue".into()],
        rows: s
            .values()
            .iter()
            .enumerate()
            .map(|(i, x)| vec![i.to_string(), x.to_string()])
            .collect(),
    };
    Ok(CommandOutput {
        results: json!({
            "n": g.order(),
            "edges": g.edge_count(),
            "components": g.components().0,
            "eigenvalues": s.values(),
            "lambda_max": s.largest(),
        }),
        table: Some(table),
        ..Default::default()
    })
}

fn per_k_table(report: &BoundReport) -> Table {
    Table {
        header: ["k", "sigma_k_minus_1", "excludes_k", "near_tie"]
            .map(String::from)
            .to_vec(),
        rows: report
            .per_k_table
            .iter()
            .map(|r| {
                vec![
                    r.k.to_string(),
                    r.sigma_k_minus_1.to_string(),
                    r.excludes_k.to_string(),
                    r.near_tie.to_string(),
                ]
            })
            .collect(),
    }
}

fn bound(config: &RunConfig, g: &Graph, full: bool) -> Result<CommandOutput, CliError> {
    let with_exact = full || config.with_exact;
    let report = compare_bounds(g, with_exact, config.exact_limit)?;
    let mut out = CommandOutput {
        table: Some(per_k_table(&report)),
        ..Default::default()
    };
    if with_exact && report.chi_exact.is_none() {
        out.warnings.push(format!(
            "n = {} exceeds the exact limit {}; chromatic number not computed",
            g.order(),
            config.exact_limit
        ));
    }
    if let Some(chi) = report.chi_exact {
        for (name, b) in [
            ("sigma", report.sigma_bound),
            ("lambda", report.lambda_bound),
        ] {
            if b > chi {
                out.violations
                    .push(format!("{name} bound {b} exceeds chromatic number {chi}"));
            }
        }
        for (name, b) in [
            ("hoffman", report.hoffman_bound),
            ("haemers", report.haemers_bound),
        ] {
            if b > chi {
                out.warnings.push(format!(
                    "comparator {name} bound {b} exceeds chromatic number {chi}"
                ));
            }
        }
    }
    out.results = if full {
        serde_json::to_value(&report).expect("reports serialize")
    } else {
        json!({
            "sigma_bound": report.sigma_bound,
            "lambda_bound": report.lambda_bound,
            "chi_exact": report.chi_exact,
            "lambda_max": report.lambda_max,
            "per_k_table": report.per_k_table,
        })
    };
    Ok(out)
}

/// Every check that applies to one partition of `g`.
pub(crate) fn partition_checks(
    g: &Graph,
    s: &Spectrum,
    p: &Partition,
    tol: f64,
    violations: &mut Vec<String>,
) -> Result<Value, CliError> {
    let k = p.class_count();
    let cert = certify(g, p)?;
    let q = quotient_graph(g, p)?;
    let theta = eigen::eigenvalues(&quotient_laplacian(&q), EIGEN_TOL)?;
    let interlacing = eigen::verify_interlacing(s, &theta, tol)?;
    if !interlacing.holds {
        violations.push(format!(
            "quotient spectrum does not interlace: {:?}",
            interlacing.violations
        ));
    }
    let trace = quotient_trace(&q);
    if cert.proper && (trace - k as f64).abs() > tol {
        violations.push(format!(
            "proper colouring with quotient trace {trace} != k = {k}"
        ));
    }
    let residual = sigma_residual(g, p, s)?;
    if residual < -tol {
        violations.push(format!("sigma residual {residual} is negative"));
    }
    let equitable = is_equitable(g, p, EQUITABLE_TOL)?.equitable;
    let commutation = commutation_residual(g, p)?;
    if equitable != (commutation <= tol) {
        violations.push(format!(
            "equitable = {equitable} but commutation residual is {commutation}"
        ));
    }
    let quotient_expansion = if k >= 2 {
        let c = check_quotient_expansion(g, p)?;
        if !c.holds {
            violations.push(format!("quotient eigenvalue bounds fail: {c:?}"));
        }
        Some(c)
    } else {
        None
    };
    Ok(json!({
        "certificate": cert,
        "quotient": {
            "weights": (0..k).map(|i| (0..k).map(|j| q.weight(i, j)).collect::<Vec<_>>()).collect::<Vec<_>>(),
            "class_volumes": q.class_volumes(),
            "eigenvalues": theta.values(),
            "trace": trace,
        },
        "interlacing": interlacing,
        "sigma_residual": residual,
        "commutation_residual": commutation,
        "quotient_expansion": quotient_expansion,
    }))
}

/// Smallest `k` with `λ_max = k/(k-1)`, if any.
pub(crate) fn extremal_class_count(lambda_max: f64, tol: f64) -> Option<usize> {
    if lambda_max <= 1.0 + tol {
        return None;
    }
    let k = (lambda_max / (lambda_max - 1.0)).round();
    (k >= 2.0 && (lambda_max - k / (k - 1.0)).abs() <= tol).then_some(k as usize)
}

fn verdict_violation(name: &str, v: &Verdict, violations: &mut Vec<String>) {
    if let Verdict::Violated { detail } = v {
        violations.push(format!("{name}: {detail}"));
    }
}

fn read_colouring(config: &RunConfig, labels: &[u64]) -> Result<Option<Partition>, CliError> {
    let Some(path) = &config.colouring_path else {
        return Ok(None);
    };
    let (text, _) = read_input(&Some(path.clone()))?;
    let mut colour: Vec<Option<u64>> = vec![None; labels.len()];
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let tokens: Vec<&str> = raw
            .split('#')
            .next()
            .unwrap_or("")
            .split_whitespace()
            .collect();
        if tokens.is_empty() {
            continue;
        }
        let parse = |t: &str| {
            t.parse::<u64>().map_err(|_| CliError::Parse {
                line,
                message: format!("{t:?} is not a nonnegative integer"),
            })
        };
        if tokens.len() != 2 {
            return Err(CliError::Parse {
                line,
                message: "expected \"vertex colour\"".into(),
            });
        }
        let (vertex, c) = (parse(tokens[0])?, parse(tokens[1])?);
        let Some(a) = labels.iter().position(|&l| l == vertex) else {
            return Err(CliError::Parse {
                line,
                message: format!("vertex {vertex} does not occur in the graph"),
            });
        };
        if colour[a].replace(c).is_some() {
            return Err(CliError::Parse {
                line,
                message: format!("vertex {vertex} coloured twice"),
            });
        }
    }
    let mut dense: Vec<u64> = Vec::new();
    let mut assignment = Vec::with_capacity(labels.len());
    for (a, c) in colour.iter().enumerate() {
        let c = c.ok_or_else(|| CliError::Usage(format!("vertex {} has no colour", labels[a])))?;
        let j = match dense.iter().position(|&d| d == c) {
            Some(j) => j,
            None => {
                dense.push(c);
                dense.len() - 1
            }
        };
        assignment.push(j);
    }
    Ok(Some(Partition::from_assignment(assignment)?))
}

fn certify_command(config: &RunConfig, parsed: &Parsed<Graph>) -> Result<CommandOutput, CliError> {
    let g = &parsed.value;
    let s = laplacian_spectrum(g, EIGEN_TOL)?;
    let mut out = CommandOutput::default();
    let (p, source) = match read_colouring(config, &parsed.labels)? {
        Some(p) => (p, "file"),
        None => (exact_colouring(g, config.exact_limit)?, "exact"),
    };
    let checks = partition_checks(g, &s, &p, config.tol, &mut out.violations)?;
    let k = config.k.unwrap_or(p.class_count());
    if k < 2 {
        return Err(CliError::Usage("--k must be at least 2".into()));
    }
    let extremal = check_extremal_colourings(g, &s, k, COLOURING_CAP)?;
    for (name, v) in [
        ("equitability", &extremal.equitable),
        ("regularity", &extremal.regular),
        ("divisibility", &extremal.divisibility),
    ] {
        verdict_violation(name, v, &mut out.violations);
    }
    if extremal.truncated {
        out.warnings.push(format!(
            "only the first {COLOURING_CAP} proper {k}-colourings were checked"
        ));
    }
    let regular_extremal = lapchi::expansion::check_regular_extremal(g, k, COLOURING_CAP)?;
    verdict_violation("regular extremal", &regular_extremal, &mut out.violations);
    out.results = json!({
        "colouring_source": source,
        "partition": p.assignment(),
        "checks": checks,
        "lambda_max": s.largest(),
        "extremal": extremal,
        "regular_extremal": regular_extremal,
    });
    Ok(out)
}

fn expansion(config: &RunConfig, g: &Graph) -> Result<CommandOutput, CliError> {
    let k = config.k.unwrap_or(2);
    let n = g.order();
    if k < 2 || k > n {
        return Err(lapchi::Error::InvalidClassCount { k, n }.into());
    }
    let is_psi = config.command == Command::Psi;
    let exact = n <= config.enum_limit;
    let result = match (is_psi, exact) {
        (true, true) => psi_exact(g, k, config.enum_limit)?,
        (true, false) => psi_heuristic(g, k, config.seed)?,
        (false, true) => phi_exact(g, k, config.enum_limit)?,
        (false, false) => phi_heuristic(g, k, config.seed)?,
    };
    let s = laplacian_spectrum(g, EIGEN_TOL)?;
    let mut out = CommandOutput::default();
    if !exact {
        out.warnings.push(format!(
            "n = {n} exceeds the enumeration limit {}; value is a heuristic {} bound",
            config.enum_limit,
            if is_psi { "lower" } else { "upper" }
        ));
    }
    // Any k-partition satisfies kγ ≤ λ_{n-k+1} and kγ* ≥ λ_{k-1}, so the
    // relevant side is checkable for heuristic values too.
    let (psi, phi) = if is_psi {
        (result.value, f64::INFINITY)
    } else {
        (f64::NEG_INFINITY, result.value)
    };
    let check = expansion_bounds_from_values(&s, k, psi, phi);
    if !check.holds {
        out.violations
            .push(format!("spectral expansion bound fails: {check:?}"));
    }
    let quotient_expansion = check_quotient_expansion(g, &result.argpartition)?;
    if !quotient_expansion.holds {
        out.violations.push(format!(
            "quotient eigenvalue bounds fail: {quotient_expansion:?}"
        ));
    }
    let (bound_name, bound) = if is_psi {
        ("lambda_upper", check.lambda_upper)
    } else {
        ("lambda_lower", check.lambda_lower)
    };
    let mut results = json!({
        "k": k,
        "value": result.value,
        "exact": result.exact,
        "argpartition": result.argpartition.assignment(),
        "k_times_value": k as f64 * result.value,
        "quotient_expansion": quotient_expansion,
    });
    results[bound_name] = json!(bound);
    out.results = results;
    Ok(out)
}

pub(crate) fn hyper_results(
    config: &RunConfig,
    h: &LinearHypergraph,
    out: &mut CommandOutput,
) -> Result<Value, CliError> {
    let lambda_max_bound = check_lambda_max_bound(h)?;
    let lambda_max_equality = check_lambda_max_equality(h)?;
    verdict_violation(
        "lambda_max bound",
        &lambda_max_bound.verdict,
        &mut out.violations,
    );
    verdict_violation(
        "lambda_max equality",
        &lambda_max_equality.verdict,
        &mut out.violations,
    );
    let g = underlying_graph(h)?;
    let m = h.uniformity();
    let limit = config.exact_limit.min(ENUMERATION_LIMIT);
    let extremal = if g.order() <= limit {
        let s = laplacian_spectrum(&g, EIGEN_TOL)?;
        let r = check_extremal_colourings(&g, &s, m, COLOURING_CAP)?;
        for (name, v) in [
            ("equitability", &r.equitable),
            ("regularity", &r.regular),
            ("divisibility", &r.divisibility),
        ] {
            verdict_violation(name, v, &mut out.violations);
        }
        if r.truncated {
            out.warnings.push(format!(
                "only the first {COLOURING_CAP} strong {m}-colourings were checked"
            ));
        }
        Some(r)
    } else {
        out.warnings.push(format!(
            "n = {} exceeds the enumeration limit {limit}; colourings not enumerated",
            g.order()
        ));
        None
    };
    Ok(json!({
        "n": h.order(),
        "m": m,
        "e": h.edge_count(),
        "vertex_degrees": h.vertex_degrees(),
        "lambda_max_bound": lambda_max_bound,
        "lambda_max_equality": lambda_max_equality,
        "strong_colourings": extremal,
    }))
}

fn hyper_check(
    config: &RunConfig,
    parsed: Parsed<LinearHypergraph>,
) -> Result<CommandOutput, CliError> {
    let mut out = CommandOutput::default();
    let mut results = hyper_results(config, &parsed.value, &mut out)?;
    if let Value::Object(map) = &mut results {
        map.insert("labels".into(), json!(parsed.labels));
    }
    out.results = results;
    Ok(out)
}

fn hyper_gen(config: &RunConfig) -> Result<CommandOutput, CliError> {
    let m = config
        .m
        .ok_or_else(|| CliError::Usage("hyper-gen needs --m".into()))?;
    let e = config
        .e
        .ok_or_else(|| CliError::Usage("hyper-gen needs --e".into()))?;
    let (h, family) = match config.n {
        None => (generate_windmill(m, e)?, "windmill"),
        Some(n) => (generate_random_linear(m, e, n, config.seed)?, "random"),
    };
    let text: String = h
        .hyperedges()
        .iter()
        .map(|edge| {
            let labels: Vec<String> = edge.iter().map(usize::to_string).collect();
            labels.join(" ") + "\n"
        })
        .collect();
    let table = Table {
        header: (0..m).map(|i| format!("v{i}")).collect(),
        rows: h
            .hyperedges()
            .iter()
            .map(|edge| edge.iter().map(usize::to_string).collect())
            .collect(),
    };
    Ok(CommandOutput {
        results: json!({
            "family": family,
            "n": h.order(),
            "m": h.uniformity(),
            "e": h.edge_count(),
            "hyperedges": h.hyperedges(),
        }),
        table: Some(table),
        text: Some(text),
        ..Default::default()
    })
}

use hdx_core::cochain::{coboundary_space, cocycle_space};
use hdx_core::expansion::{alpha_bound, certify_exact};
use hdx_core::spectral::{
    cheeger_exhaustive, cheeger_inequality_audit, edge_graph, edge_graph_floor_audit,
    normalized_spectrum, underlying_graph, Graph, Tolerances,
};
use hdx_core::walk::{
    alpha_power, evolve_exact, monte_carlo_trace, rapid_mixing_audit, Distribution,
};
use hdx_core::{Complex2, HdxError, Verdict};
use serde::Serialize;
use serde_json::json;

use crate::args::{
    CertifyArgs, CocyclesArgs, FileArg, GenCommand, GlobalFlags, GraphArgs, GraphChoice,
    VerifyArgs, WalkArgs,
};
use crate::report::{load, CliError, Invocation, Output, Status};

pub fn tolerances(g: &GlobalFlags) -> Tolerances {
    Tolerances {
        eigen: g.eigen_tol,
        slack: g.slack,
        mixing: g.mixing_tol,
    }
}

pub fn gen(cmd: &GenCommand) -> Result<Output, CliError> {
    let x = match *cmd {
        GenCommand::Complete { n } => Complex2::complete(n),
        GenCommand::Random { n, p, seed } => Complex2::random(n, p, seed)?,
    };
    let mut text = x.to_json();
    text.push('\n');
    Ok(Output::Text {
        text,
        status: Status::Pass,
    })
}

pub fn validate(inv: &Invocation, g: &GlobalFlags, a: &FileArg) -> Result<Output, CliError> {
    let (x, digest) = load(&a.file)?;
    let report = x.validate();
    let (vertices, edges, triangles) = x.counts();
    let status = if report.is_valid() {
        Status::Pass
    } else {
        Status::Fail
    };
    let results = json!({
        "vertices": vertices,
        "edges": edges,
        "triangles": triangles,
        "valid": report.is_valid(),
        "findings": report.findings,
        "degrees": x.degree_profile(),
    });
    inv.report(g, a, vec![digest], results, status)
}

fn choose_graph(x: &Complex2, choice: GraphChoice) -> Graph {
    match choice {
        GraphChoice::G0 => underlying_graph(x),
        GraphChoice::G1 => edge_graph(x).graph,
    }
}

pub fn spectrum(inv: &Invocation, g: &GlobalFlags, a: &GraphArgs) -> Result<Output, CliError> {
    let (x, digest) = load(&a.file)?;
    let graph = choose_graph(&x, a.graph);
    let spectrum = normalized_spectrum(&graph, g.eigen_tol)?;
    let results = json!({
        "graph": a.graph,
        "vertices": graph.n(),
        "degree": graph.regular_k(),
        "spectrum": spectrum,
        "spectral_gap": spectrum.spectral_gap(),
    });
    inv.report(g, a, vec![digest], results, Status::Pass)
}

pub fn cheeger(inv: &Invocation, g: &GlobalFlags, a: &GraphArgs) -> Result<Output, CliError> {
    let (x, digest) = load(&a.file)?;
    let graph = choose_graph(&x, a.graph);
    let cheeger = cheeger_exhaustive(&graph)?;
    let audit = cheeger_inequality_audit(&graph, tolerances(g))?;
    let status = Status::from(Verdict::from_check(audit.passes, true));
    let results = json!({
        "graph": a.graph,
        "cheeger": cheeger,
        "cheeger_inequality": audit,
    });
    inv.report(g, a, vec![digest], results, status)
}

pub fn cocycles(inv: &Invocation, g: &GlobalFlags, a: &CocyclesArgs) -> Result<Output, CliError> {
    let (x, digest) = load(&a.file)?;
    let dim = usize::from(a.dim);
    let z = cocycle_space(&x, dim)?;
    let b = coboundary_space(&x, dim)?;
    let results = json!({
        "dim": dim,
        "faces": x.num_faces(dim),
        "cocycles": { "dimension": z.dimension(), "basis": z.basis() },
        "coboundaries": { "dimension": b.dimension(), "basis": b.basis() },
        "cohomology_dimension": z.dimension() - b.dimension(),
    });
    inv.report(g, a, vec![digest], results, Status::Pass)
}

pub fn certify(inv: &Invocation, g: &GlobalFlags, a: &CertifyArgs) -> Result<Output, CliError> {
    let (x, digest) = load(&a.file)?;
    let certificate = certify_exact(&x, a.max_bits)?;
    inv.report(g, a, vec![digest], certificate, Status::Pass)
}

fn parse_start(x: &Complex2, start: &str) -> Result<usize, CliError> {
    let bad = || {
        CliError::Usage(format!(
            "--start {start:?}: expected an edge index or `u-v`"
        ))
    };
    if let Some((u, v)) = start.split_once('-') {
        let u: usize = u.trim().parse().map_err(|_| bad())?;
        let v: usize = v.trim().parse().map_err(|_| bad())?;
        return x
            .edge_id(u, v)
            .ok_or_else(|| CliError::Usage(format!("--start {start}: no such edge")));
    }
    let e: usize = start.trim().parse().map_err(|_| bad())?;
    if e >= x.num_edges() {
        return Err(HdxError::IndexOutOfRange {
            what: "edge",
            index: e,
            size: x.num_edges(),
        }
        .into());
    }
    Ok(e)
}

/// Rate certified for `x`, or the reason the hypotheses fail.
fn certified_alpha(
    x: &Complex2,
    g: &GlobalFlags,
    max_bits: usize,
) -> Result<Result<f64, String>, CliError> {
    if let Err(e) = x.regularity() {
        return Ok(Err(e.to_string()));
    }
    let lambda2 = normalized_spectrum(&underlying_graph(x), g.eigen_tol)?.lambda2;
    let certificate = match certify_exact(x, max_bits) {
        Ok(c) => c,
        Err(e @ HdxError::Degenerate(_)) => return Ok(Err(e.to_string())),
        Err(e) => return Err(e.into()),
    };
    match alpha_bound(certificate.epsilon_cosystolic.to_f64(), lambda2) {
        Ok(a) => Ok(Ok(a)),
        Err(e @ HdxError::Domain(_)) => Ok(Err(e.to_string())),
        Err(e) => Err(e.into()),
    }
}

pub fn walk(inv: &Invocation, g: &GlobalFlags, a: &WalkArgs) -> Result<Output, CliError> {
    let (x, digest) = load(&a.file)?;
    let start = parse_start(&x, &a.start)?;
    let (alpha, asserted, alpha_note) = match a.alpha.as_deref() {
        None => (None, false, "none".to_string()),
        Some("auto") => match certified_alpha(&x, g, a.max_bits)? {
            Ok(alpha) => (Some(alpha), true, format!("{alpha} (certified)")),
            Err(reason) => (None, false, format!("not applicable: {reason}")),
        },
        Some(v) => {
            let alpha: f64 = v.parse().map_err(|_| {
                CliError::Usage(format!("--alpha {v:?}: expected a number or `auto`"))
            })?;
            (Some(alpha), false, format!("{alpha} (given)"))
        }
    };
    let trace = match a.paths {
        Some(paths) => monte_carlo_trace(&x, start, a.steps, paths, a.seed, alpha)?,
        None => {
            let map = edge_graph(&x);
            let p0 = Distribution::point_mass(map.graph.n(), map.vertex_of(start))?;
            evolve_exact(&map.graph, &p0, a.steps, alpha)?
        }
    };
    let mode = match a.paths {
        Some(p) => format!("monte-carlo paths={p} seed={}", a.seed),
        None => "exact".to_string(),
    };
    let mut text = String::new();
    text.push_str(&format!("# {}\n", inv.command_line()));
    text.push_str(&format!(
        "# input {} sha256={}\n",
        digest.path, digest.sha256
    ));
    text.push_str(&format!(
        "# start edge {start} = {:?}, mode {mode}, alpha {alpha_note}\n",
        x.edge(start)
    ));

    let mut writer = csv::Writer::from_writer(Vec::new());
    let csv_error = |e: csv::Error| CliError::Usage(format!("cannot write CSV: {e}"));
    writer
        .write_record(["step", "distance", "alpha_power", "ok"])
        .map_err(csv_error)?;
    for (i, d) in trace.distances.iter().enumerate() {
        let (power, ok) = match alpha {
            Some(a) => (
                alpha_power(a, i).to_string(),
                trace.bound_satisfied[i].to_string(),
            ),
            None => (String::new(), String::new()),
        };
        writer
            .write_record([i.to_string(), d.to_string(), power, ok])
            .map_err(csv_error)?;
    }
    let body = writer
        .into_inner()
        .map_err(|e| CliError::Usage(format!("cannot write CSV: {e}")))?;
    text.push_str(&String::from_utf8_lossy(&body));

    let status = if a.alpha.as_deref() == Some("auto") && !asserted {
        Status::NotApplicable
    } else if asserted && a.paths.is_none() && !trace.within_bound() {
        Status::Fail
    } else {
        Status::Pass
    };
    Ok(Output::Text { text, status })
}

#[derive(Serialize)]
struct TheoremResults {
    regularity: Option<(usize, usize)>,
    spectrum_g0: Option<hdx_core::spectral::SpectralReport>,
    certificate: Option<hdx_core::expansion::ExpansionCertificate>,
    alpha: Option<f64>,
    edge_graph_floor: Option<hdx_core::spectral::FloorAudit>,
    rapid_mixing: Option<hdx_core::walk::RapidMixingReport>,
    reason: Option<String>,
}

pub fn verify_theorem(
    inv: &Invocation,
    g: &GlobalFlags,
    a: &VerifyArgs,
) -> Result<Output, CliError> {
    let (x, digest) = load(&a.file)?;
    let tol = tolerances(g);
    let mut results = TheoremResults {
        regularity: None,
        spectrum_g0: None,
        certificate: None,
        alpha: None,
        edge_graph_floor: None,
        rapid_mixing: None,
        reason: None,
    };
    let not_applicable = |mut results: TheoremResults, reason: String| {
        results.reason = Some(reason);
        inv.report(g, a, vec![digest.clone()], results, Status::NotApplicable)
    };

    let (_, k1) = match x.regularity() {
        Ok(k) => k,
        Err(e) => return not_applicable(results, e.to_string()),
    };
    results.regularity = x.degree_profile().regular;
    let spectrum = normalized_spectrum(&underlying_graph(&x), tol.eigen)?;
    let lambda2 = spectrum.lambda2;
    results.spectrum_g0 = Some(spectrum);
    if !(lambda2 < 0.5) {
        return not_applicable(results, format!("λ̃₂(G₀) = {lambda2} is not below 1/2"));
    }
    if k1 == 0 {
        return not_applicable(results, "edges lie in no triangles".into());
    }
    let certificate = match certify_exact(&x, a.max_bits) {
        Ok(c) => c,
        Err(e @ HdxError::Degenerate(_)) => return not_applicable(results, e.to_string()),
        Err(e) => return Err(e.into()),
    };
    results.alpha = Some(alpha_bound(
        certificate.epsilon_cosystolic.to_f64(),
        lambda2,
    )?);
    let floor = edge_graph_floor_audit(&x, tol)?;
    let mixing = rapid_mixing_audit(&x, &certificate, a.steps, tol)?;
    let verdict = Verdict::combine([Verdict::from_check(floor.passes, true), mixing.verdict]);
    results.certificate = Some(certificate);
    results.edge_graph_floor = Some(floor);
    results.rapid_mixing = Some(mixing);
    inv.report(g, a, vec![digest], results, verdict.into())
}

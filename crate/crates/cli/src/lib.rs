//! Command-line front end: catalog queries, curvature forms, connectivity
//! ranges and the verification suite, with text or JSON output.
//!
//! Exit codes: 0 on success, 1 when a check fails, 2 on bad input.

mod args;
mod report;
mod vector;

use std::collections::BTreeSet;
use std::ffi::OsString;
use std::io::{IsTerminal, Write};

use clap::{CommandFactory, Parser};
use hermpos::barth_lefschetz::{
    closed_form_iso_max, connectivity, grassmann_rank_refinement, index_bound, CurvatureMode,
};
use hermpos::curvature::{certify_psd, complex_positivity, grassmann_rank, hermitian_form, psi_prime_sizes};
use hermpos::hss_catalog::{table_catalog, verification_catalog};
use hermpos::verify::{positivity_table, verify, Check, Status, VerifyOptions};
use hermpos::{resolve, Error, SpaceId};
use serde_json::{json, Value};

pub use args::Cli;
use args::{Command, FormArgs, RangeArgs, SpacesAction, VerifyArgs};
pub use report::{canonical_json, Report, SCHEMA_VERSION};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Runs with the process's stdout and stderr.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let color = std::io::stdout().is_terminal() && std::env::var_os("NO_COLOR").is_none();
    let mut out = std::io::stdout().lock();
    let mut err = std::io::stderr().lock();
    run_with(argv, &mut out, &mut err, color)
}

/// Runs with explicit output streams. `argv` includes the program name.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write, color: bool) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = if color { e.render().ansi().to_string() } else { e.render().to_string() };
            if !e.use_stderr() {
                let _ = write!(out, "{text}");
                return code;
            }
            let _ = write!(err, "{text}");
            if !text.contains("Usage:") {
                let _ = writeln!(err, "\n{}", Cli::command().render_usage());
            }
            return code;
        }
    };
    match execute(&cli) {
        Ok(output) => {
            if !cli.quiet {
                let _ = if cli.json {
                    writeln!(out, "{}", output.report.to_json())
                } else {
                    write!(out, "{}", output.text)
                };
                for c in &output.report.checks {
                    if !cli.json && !output.checks_in_text {
                        let _ = writeln!(out, "{}", check_line(c, color));
                    }
                }
            }
            let failures: Vec<&Check> = output.report.checks.iter().filter(|c| c.status == Status::Fail).collect();
            for c in &failures {
                let _ = writeln!(err, "FAIL {}: {}", c.name, c.detail);
            }
            if failures.is_empty() {
                EXIT_OK
            } else {
                EXIT_FAILED
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::Consistency(_) => EXIT_FAILED,
                Error::Config(_) | Error::Argument(_) => {
                    let _ = writeln!(err, "\n{}", Cli::command().render_usage());
                    EXIT_USAGE
                }
            }
        }
    }
}

struct Output {
    report: Report,
    text: String,
    /// The text already lists the checks.
    checks_in_text: bool,
}

fn check_line(c: &Check, color: bool) -> String {
    let tag = match (c.status, color) {
        (Status::Pass, true) => "\x1b[32mPASS\x1b[0m",
        (Status::Fail, true) => "\x1b[31mFAIL\x1b[0m",
        (Status::Pass, false) => "PASS",
        (Status::Fail, false) => "FAIL",
    };
    format!("{tag} {} ({})", c.name, c.detail)
}

fn parse_space(s: &str) -> hermpos::Result<SpaceId> {
    s.parse()
}

fn execute(cli: &Cli) -> hermpos::Result<Output> {
    match &cli.command {
        Command::Spaces { action: SpacesAction::List } => spaces_list(),
        Command::Positivity { space } => positivity(space),
        Command::Form(a) => form(a),
        Command::Range(a) => range(a),
        Command::Table => table(),
        Command::Verify(a) => verify_cmd(a),
    }
}

const FAMILIES: &[(&str, &str, &str, &str, &str, &str)] = &[
    ("gr", "gr:p,q", "p >= 1, q >= 1", "A_{p+q-1}, node p", "pq", "p+q-1"),
    ("quadric", "quadric:p", "p >= 3", "B_{(p+1)/2} (p odd) or D_{(p+2)/2} (p even), node 1", "p", "p-1"),
    ("lagr", "lagr:r", "r >= 2", "C_r, node r", "r(r+1)/2", "r"),
    ("spinor", "spinor:r", "r >= 3", "D_r, node r", "r(r-1)/2", "2r-3"),
    ("e6", "e6", "none", "E_6, cominuscule node with |Ψ| = 16", "16", "11"),
    ("e7", "e7", "none", "E_7, cominuscule node", "27", "17"),
];

fn spaces_list() -> hermpos::Result<Output> {
    let mut text = String::new();
    let families: Vec<Value> = FAMILIES
        .iter()
        .map(|&(family, grammar, bounds, ambient, v, ell)| {
            text.push_str(&format!("{grammar:<10} {bounds:<16} {ambient}\n"));
            json!({ "family": family, "grammar": grammar, "bounds": bounds, "ambient": ambient, "v": v, "ell": ell })
        })
        .collect();
    let report = Report::new("spaces list", json!({}), json!({ "families": families }));
    Ok(Output { report, text, checks_in_text: false })
}

fn positivity(space: &str) -> hermpos::Result<Output> {
    let id = parse_space(space)?;
    let s = resolve(id)?;
    let ell = complex_positivity(&s)?;
    let sizes = psi_prime_sizes(&s);
    let (family, rank, _) = id.ambient();
    let ambient = match family {
        hermpos::Family::E6 | hermpos::Family::E7 => family.to_string(),
        _ => format!("{family}{rank}"),
    };
    let psi: Vec<Value> = (0..s.v()).map(|k| json!({ "root": s.psi_root(k).name(), "psi_prime": sizes[k] })).collect();
    let values: BTreeSet<usize> = sizes.iter().copied().collect();
    let mut text = format!(
        "{id}: ambient {ambient}, cominuscule node {}\nv = {}\nℓ = {ell}\n|Ψ'_α| values: {:?}\nΨ (canonical order):\n",
        s.cominuscule_node() + 1,
        s.v(),
        values
    );
    for (k, size) in sizes.iter().enumerate() {
        text.push_str(&format!("  {:>3}  {:<24} |Ψ'| = {size}\n", k + 1, s.psi_root(k).name()));
    }
    let results = json!({
        "space_id": id.to_string(),
        "ambient": ambient,
        "cominuscule_node": s.cominuscule_node() + 1,
        "v": s.v(),
        "ell": ell,
        "psi_prime_values": values.iter().collect::<Vec<_>>(),
        "psi": psi,
    });
    let mut report = Report::new("positivity", json!({ "space": id.to_string() }), results);
    report.checks.push(report::check(
        format!("{id}/ell_table"),
        ell == id.expected_positivity(),
        format!("ℓ = {ell}, table value {}", id.expected_positivity()),
    ));
    Ok(Output { report, text, checks_in_text: false })
}

fn form(a: &FormArgs) -> hermpos::Result<Output> {
    let id = parse_space(&a.space)?;
    let s = resolve(id)?;
    let x = vector::parse_vector(&s, &a.vector)?;
    let f = hermitian_form(&s, &x)?;
    let cert = certify_psd(&f)?;
    let nullity = cert.nullity;
    let ell_line = s.v() - nullity;
    let gr_rank = match id {
        SpaceId::Grassmannian { .. } => Some(grassmann_rank(&s, &x)?),
        _ => None,
    };
    let psi: Vec<String> = (0..s.v()).map(|k| s.psi_root(k).name()).collect();
    let matrix: Vec<Vec<String>> =
        (0..s.v()).map(|i| (0..s.v()).map(|j| f.matrix[(i, j)].to_string()).collect()).collect();
    let coeffs: serde_json::Map<String, Value> =
        x.support().into_iter().map(|k| (psi[k].clone(), Value::String(x.get(k).to_string()))).collect();

    let mut text = format!("{id}: H_X on Ψ (rows and columns in canonical order)\n");
    let width = matrix.iter().flatten().map(String::len).max().unwrap_or(1);
    for (k, row) in matrix.iter().enumerate() {
        let cells: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
        text.push_str(&format!("  {}  {}\n", cells.join(" "), psi[k]));
    }
    text.push_str(&format!("nullity = {nullity}\nℓ(X ∧ JX) = {ell_line}\n"));
    if let Some(r) = gr_rank {
        text.push_str(&format!("rank(X) = {r}\n"));
    }

    let mut results = json!({
        "space_id": id.to_string(),
        "psi": psi,
        "vector": coeffs,
        "matrix": matrix,
        "nullity": nullity,
        "ell_line": ell_line,
        "rank_of_form": cert.rank,
    });
    if let Some(r) = gr_rank {
        results["grassmann_rank"] = json!(r);
    }
    let mut report = Report::new("form", json!({ "space": id.to_string(), "vector": a.vector }), results);
    report.checks.push(report::check(format!("{id}/psd"), true, format!("rank {}, no negative direction", cert.rank)));
    if let (SpaceId::Grassmannian { p, q }, Some(r)) = (id, gr_rank) {
        let want = (p - r) * (q - r);
        report.checks.push(report::check(
            format!("{id}/grassmann_nullity"),
            nullity == want,
            format!("nullity {nullity}, (p-r)(q-r) = {want}"),
        ));
    }
    Ok(Output { report, text, checks_in_text: false })
}

fn range(a: &RangeArgs) -> hermpos::Result<Output> {
    let id = parse_space(&a.space)?;
    let s = resolve(id)?;
    let refinement = match (a.rank, id) {
        (None, _) => None,
        (Some(r), SpaceId::Grassmannian { p, q }) => Some(grassmann_rank_refinement(p, q, r)?),
        (Some(_), _) => return Err(Error::Argument("--rank applies to Grassmannians only".into())),
    };
    let ell_override = a.ell0.or(refinement.as_ref().map(|r| r.ell0));
    let report_ = connectivity(&s, a.m, a.n, ell_override)?;
    let v = s.v();
    let pos = index_bound(a.m, a.n, v, report_.ell, CurvatureMode::Positive)?;
    let non = index_bound(a.m, a.n, v, report_.ell, CurvatureMode::Nonnegative)?;

    let mut text = format!(
        "{id}: v = {v}, ℓ = {}{}, m = {}, n = {}\n",
        report_.ell,
        if ell_override.is_some() { " (override)" } else { "" },
        a.m,
        a.n
    );
    text.push_str(&format!("λ₀ = {}{}\n", report_.lambda0, if report_.vacuous { " (vacuous)" } else { "" }));
    text.push_str(&format!(
        "π_j(N, N∩M) → π_j(V, M): isomorphism for j ≤ {}, surjective for j = {}\n",
        report_.iso_max, report_.surj_at
    ));
    text.push_str(&format!("π_j(V, M) = 0 for j ≤ {}\n", report_.pi_vanish_max));
    text.push_str(&format!("π_j(N, N∩M) = 0 for j ≤ {}\n", report_.pair_vanish_max));
    text.push_str(&format!("index bound: {pos} (positive), {non} (nonnegative)\n"));
    if let Some(r) = &refinement {
        text.push_str(&format!(
            "rank ≥ {}: ℓ₀ = {}, ranges increase by {} (r - 1 = {})\n",
            r.r, r.ell0, r.increase, r.stated_increase
        ));
    }

    let mut results = serde_json::to_value(&report_).map_err(|e| Error::Consistency(e.to_string()))?;
    results["index_bound_positive"] = json!(pos);
    results["index_bound_nonnegative"] = json!(non);
    if let Some(r) = &refinement {
        results["rank_refinement"] = serde_json::to_value(r).map_err(|e| Error::Consistency(e.to_string()))?;
    }
    let inputs = json!({ "space": id.to_string(), "m": a.m, "n": a.n, "ell0": a.ell0, "rank": a.rank });
    let mut report = Report::new("range", inputs, results);
    if ell_override.is_none() {
        let iso = closed_form_iso_max(id, a.m, a.n);
        report.checks.push(report::check(
            format!("{id}/closed_form"),
            iso == report_.iso_max,
            format!("closed form gives j ≤ {iso}"),
        ));
    }
    Ok(Output { report, text, checks_in_text: false })
}

const CLOSED_FORMS: &[(&str, &str, &str)] = &[
    ("gr:p,q", "p+q-1", "n+m-2pq+p+q-1"),
    ("quadric:p", "p-1", "n+m-p-1"),
    ("lagr:r", "r", "n+m-r^2"),
    ("spinor:r", "2r-3", "n+m-r^2+3r-3"),
    ("e6", "11", "n+m-21"),
    ("e7", "17", "n+m-37"),
];

fn table() -> hermpos::Result<Output> {
    let rows = positivity_table(&table_catalog())?;
    let mut text = String::from("family      ℓ        isomorphism range\n");
    for (g, ell, iso) in CLOSED_FORMS {
        text.push_str(&format!("{g:<11} {ell:<8} j ≤ {iso}\n"));
    }
    text.push_str("\nspace        v    ℓ   table\n");
    let mut checks = Vec::new();
    for family in ["gr", "quadric", "lagr", "spinor", "e6", "e7"] {
        let fam: Vec<_> = rows.iter().filter(|r| r.space_id.family_name() == family).collect();
        let bad: Vec<String> = fam.iter().filter(|r| !r.matches()).map(|r| r.space_id.to_string()).collect();
        checks.push(report::check(
            format!("table/{family}"),
            bad.is_empty(),
            if bad.is_empty() { format!("{} spaces", fam.len()) } else { format!("mismatch at {}", bad.join(" ")) },
        ));
    }
    for r in &rows {
        text.push_str(&format!(
            "{:<12} {:>3} {:>4}   {}\n",
            r.space_id.to_string(),
            r.v,
            r.ell,
            if r.matches() { "ok" } else { "MISMATCH" }
        ));
    }
    let formulas: Vec<Value> =
        CLOSED_FORMS.iter().map(|(g, ell, iso)| json!({ "family": g, "ell": ell, "iso_max": iso })).collect();
    let results = json!({
        "formulas": formulas,
        "rows": serde_json::to_value(&rows).map_err(|e| Error::Consistency(e.to_string()))?,
    });
    let mut report = Report::new("table", json!({}), results);
    report.checks = checks;
    Ok(Output { report, text, checks_in_text: false })
}

fn verify_cmd(a: &VerifyArgs) -> hermpos::Result<Output> {
    let ids = match &a.space {
        Some(s) => vec![parse_space(s)?],
        None => verification_catalog(),
    };
    let opts = VerifyOptions { seed: a.seed, samples: a.samples };
    let result = verify(&ids, opts, a.corrupt_constant)?;
    let passed = result.checks.iter().filter(|c| c.passed()).count();
    let failed = result.checks.len() - passed;
    let mut text = String::new();
    for s in &result.spaces {
        text.push_str(&format!(
            "{:<12} v = {:<3} ℓ = {:<4} oracle ratio {}\n",
            s.space_id.to_string(),
            s.v,
            s.ell.map_or("?".into(), |e| e.to_string()),
            s.oracle_constant.as_deref().unwrap_or("?")
        ));
    }
    text.push_str(&format!("{passed} checks passed, {failed} failed\n"));
    let results = json!({
        "spaces": serde_json::to_value(&result.spaces).map_err(|e| Error::Consistency(e.to_string()))?,
        "passed": passed,
        "failed": failed,
    });
    let inputs = json!({
        "space": a.space,
        "seed": a.seed,
        "samples": a.samples,
    });
    let mut report = Report::new("verify", inputs, results);
    report.checks = result.checks;
    report.seed = Some(a.seed);
    Ok(Output { report, text, checks_in_text: true })
}

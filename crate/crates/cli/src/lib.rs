//! Command-line surface for `liftable-core`.
//!
//! Every verb produces both a text and a JSON rendering; `--format` picks
//! one. Exit codes: 0 on success, 2 when the input is rejected (violations,
//! non-spherical or out-of-scope genus, failed verification), 1 on usage
//! errors including data-set syntax errors.

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use liftable_core::datasets::{enumerate_spherical_with_jobs, DataSet};
use liftable_core::gamma_action::{classify_irreducible, half_twist_names};
use liftable_core::liftable::{
    analyze, normalizer_centralizer, table_genus3, verify_doubled_matrices, AnalysisReport,
    NormalizerSpec, SubgroupPresentation, UserLifts, MAX_PRESENTATION_INDEX,
};
use liftable_core::Error;
use serde_json::{json, Value};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_REJECTED: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "liftable",
    version,
    about = "Liftable mapping class groups of cyclic spherical covers"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write output to this file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Worker threads for enumeration.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..=256))]
    jobs: u64,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check the conditions on a cyclic data set and compute its genus.
    Validate { dataset: String },
    /// List spherical cyclic data sets of a genus up to equivalence.
    Enumerate { genus: u64 },
    /// Liftable images, LMod and CLMod presentations and family tags.
    Analyze { dataset: String },
    /// Presentations of LMod, CLMod, N(F) and C(F).
    Present {
        dataset: String,
        /// F-exponents of the lifted LMod relators, comma separated.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        normalizer_exponents: Option<Vec<i64>>,
        /// F-exponents of the lifted CLMod relators, comma separated.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        centralizer_exponents: Option<Vec<i64>>,
    },
    /// Normalizer and centralizer of a three-point class.
    Classify { dataset: String },
    /// The genus-3 table of irreducible classes.
    Table1,
    /// Check the symplectic images of the genus-2 normalizer generators.
    Verify,
}

/// Both renderings of a result and its exit status.
struct Output {
    text: String,
    json: Value,
    status: i32,
}

/// Runs the command line `argv` (program name first), writing results to
/// `out` and diagnostics to `err`; returns the exit code.
pub fn run<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let result = match &cli.command {
        Command::Validate { dataset } => parse(dataset).map(|d| validate(&d)),
        Command::Enumerate { genus } => enumerate(*genus, cli.jobs as usize),
        Command::Analyze { dataset } => parse(dataset).and_then(|d| {
            let r = analyze(&d)?;
            Ok(Output {
                text: render_report(&r, Format::Text),
                json: r.to_json(),
                status: EXIT_OK,
            })
        }),
        Command::Present {
            dataset,
            normalizer_exponents,
            centralizer_exponents,
        } => parse(dataset).and_then(|d| present(&d, normalizer_exponents, centralizer_exponents)),
        Command::Classify { dataset } => parse(dataset).and_then(|d| classify(&d)),
        Command::Table1 => table1(),
        Command::Verify => Ok(verify()),
    };
    let output = match result {
        Ok(o) => o,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return match e {
                Error::Invalid(_)
                | Error::NotSpherical(_)
                | Error::GenusOutOfScope(_)
                | Error::BranchCount { .. } => EXIT_REJECTED,
                _ => EXIT_USAGE,
            };
        }
    };
    let body = match cli.format {
        Format::Text => output.text,
        Format::Json => render_json(&output.json),
    };
    let written = match &cli.out {
        Some(path) => std::fs::write(path, body.as_bytes()),
        None => out.write_all(body.as_bytes()),
    };
    if let Err(e) = written {
        let _ = writeln!(err, "error: cannot write output: {e}");
        return EXIT_USAGE;
    }
    output.status
}

/// Pretty-printed JSON with a trailing newline; key order is fixed by
/// construction, so equal inputs give identical bytes.
pub fn render_json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

fn parse(s: &str) -> liftable_core::Result<DataSet> {
    s.parse()
}

fn validate(d: &DataSet) -> Output {
    let report = d.validate();
    let mut text = format!("data set: {d}\n");
    if report.is_valid() {
        let _ = writeln!(text, "valid: yes");
    } else {
        let _ = writeln!(text, "valid: no");
        let _ = writeln!(text, "violations:");
        for v in &report.violations {
            let _ = writeln!(text, "  {v}");
        }
    }
    if let Some(g) = report.genus {
        let _ = writeln!(text, "genus: {g}");
    }
    for f in &report.flags {
        let _ = writeln!(
            text,
            "flag: {}",
            serde_json::to_value(f)
                .expect("flag")
                .as_str()
                .unwrap_or_default()
        );
    }
    Output {
        text,
        json: json!({
            "schema": 1,
            "dataset": d.to_string(),
            "valid": report.is_valid(),
            "genus": report.genus,
            "violations": report.violations,
            "flags": report.flags,
        }),
        status: if report.is_valid() {
            EXIT_OK
        } else {
            EXIT_REJECTED
        },
    }
}

fn enumerate(g: u64, jobs: usize) -> liftable_core::Result<Output> {
    let sets = enumerate_spherical_with_jobs(g, jobs)?;
    let mut text = String::new();
    for d in &sets {
        let _ = writeln!(text, "{d}");
    }
    Ok(Output {
        text,
        json: json!({
            "schema": 1,
            "genus": g,
            "count": sets.len(),
            "datasets": sets.iter().map(ToString::to_string).collect::<Vec<_>>(),
        }),
        status: EXIT_OK,
    })
}

fn subgroup_lines(
    text: &mut String,
    name: &str,
    sub: &Option<SubgroupPresentation>,
    index: u128,
    k: usize,
) {
    match sub {
        Some(s) if s.index == 1 => {
            let _ = writeln!(text, "{name} = Mod(S_{{0,{k}}})");
            let _ = writeln!(text, "{name}: {}", s.simplified.render());
        }
        Some(s) => {
            let _ = writeln!(text, "{name}: {}", s.simplified.render());
        }
        None => {
            let _ = writeln!(
                text,
                "{name}: presentation not computed (index {index} exceeds {MAX_PRESENTATION_INDEX})"
            );
        }
    }
    if let Some(s) = sub {
        let _ = writeln!(
            text,
            "  Schreier index {}, {} Schreier generators, {} after simplification",
            s.index,
            s.schreier_rank,
            s.simplified.generators().len()
        );
        let _ = writeln!(text, "  abelianization: {}", s.abelianization);
    }
}

/// Deterministic rendering of an analysis; JSON matches
/// [`AnalysisReport::to_json`].
pub fn render_report(r: &AnalysisReport, format: Format) -> String {
    if format == Format::Json {
        return render_json(&r.to_json());
    }
    let k = r.gamma.k();
    let names = half_twist_names(k);
    let list = |v: &[u64]| v.iter().map(u64::to_string).collect::<Vec<_>>().join(", ");
    let mut t = String::new();
    let _ = writeln!(t, "data set: {}", r.dataset);
    let _ = writeln!(t, "genus: {}", r.genus);
    let _ = writeln!(
        t,
        "Γ-vector: ({}) mod {}",
        list(&r.gamma.values()),
        r.gamma.n()
    );
    if !r.families.is_empty() {
        let tags: Vec<String> = r.families.iter().map(|f| f.describe()).collect();
        let _ = writeln!(t, "families: {}", tags.join("; "));
    }
    let _ = writeln!(t, "Z_n^×(Γ) = {{{}}}", list(&r.stab.units));
    let b: Vec<String> = r.stab.b.iter().map(|(i, j)| format!("({i},{j})")).collect();
    let _ = writeln!(t, "B = {{{}}}", b.join(", "));
    for e in &r.stab.c_words {
        let w = if e.word.is_empty() {
            "1".to_string()
        } else {
            e.word.render(&names)
        };
        let _ = writeln!(t, "C[{}] = {w}", e.ell);
    }
    let _ = writeln!(t, "|H1| = {}", r.stab.h1.order());
    let _ = writeln!(t, "|H2| = {}", r.stab.h2.order());
    let _ = writeln!(t, "[Mod:LMod] = {}", r.index_mod_lmod());
    let _ = writeln!(t, "[N(F):C(F)] = {}", r.index_n_c());
    let _ = writeln!(
        t,
        "Mod = LMod: {}",
        if r.mod_equals_lmod { "yes" } else { "no" }
    );
    subgroup_lines(&mut t, "LMod", &r.lmod, r.index_mod_lmod(), k);
    subgroup_lines(
        &mut t,
        "CLMod",
        &r.clmod,
        r.index_mod_lmod() * r.index_n_c() as u128,
        k,
    );
    if let Some(c) = &r.classification {
        classification_lines(&mut t, c);
    }
    let _ = writeln!(
        t,
        "brute-force cross-check: {}",
        if r.cross_checked { "passed" } else { "skipped" }
    );
    t
}

fn classification_lines(t: &mut String, c: &liftable_core::gamma_action::Classification) {
    let _ = writeln!(t, "case {}", c.case);
    if let Some(ell) = c.ell {
        let _ = writeln!(t, "ℓ = {ell}");
    }
    let _ = writeln!(t, "LMod ≅ {}", c.lmod);
    let asserted = if c.normalizer_asserted {
        " (asserted)"
    } else {
        ""
    };
    let _ = writeln!(t, "N(F) ≅ {}{asserted}", c.normalizer);
    let _ = writeln!(t, "C(F) ≅ {}", c.centralizer);
}

fn spec_lines(t: &mut String, name: &str, s: &NormalizerSpec) {
    let _ = writeln!(t, "{name} = {}", s.presentation.render());
    let provenance = serde_json::to_value(s.provenance).expect("provenance");
    let _ = writeln!(
        t,
        "  provenance: {}",
        provenance.as_str().unwrap_or_default()
    );
    for (g, q, e) in &s.conjugation {
        let _ = writeln!(t, "  {g} lifts {q}, {g}*F*{g}^-1 = F^{e}");
    }
    if let Some(d) = s.descriptor {
        let asserted = if s.asserted { " (asserted)" } else { "" };
        let _ = writeln!(t, "  ≅ {d}{asserted}");
    }
}

fn present(
    d: &DataSet,
    n_exp: &Option<Vec<i64>>,
    c_exp: &Option<Vec<i64>>,
) -> liftable_core::Result<Output> {
    let r = analyze(d)?;
    let lifts = match (n_exp, c_exp) {
        (None, None) => None,
        (n, c) => Some(UserLifts {
            normalizer: n.clone().unwrap_or_default(),
            centralizer: c.clone().unwrap_or_default(),
        }),
    };
    let (n, c) = normalizer_centralizer(&r, lifts.as_ref())?;
    let mut text = format!("data set: {d}\n");
    subgroup_lines(&mut text, "LMod", &r.lmod, r.index_mod_lmod(), r.gamma.k());
    subgroup_lines(
        &mut text,
        "CLMod",
        &r.clmod,
        r.index_mod_lmod() * r.index_n_c() as u128,
        r.gamma.k(),
    );
    spec_lines(&mut text, "N(F)", &n);
    spec_lines(&mut text, "C(F)", &c);
    let sub = |s: &Option<SubgroupPresentation>| s.as_ref().map(|s| s.simplified.to_json());
    Ok(Output {
        text,
        json: json!({
            "schema": 1,
            "dataset": d.to_string(),
            "lmod": sub(&r.lmod),
            "clmod": sub(&r.clmod),
            "normalizer": n.to_json(),
            "centralizer": c.to_json(),
        }),
        status: EXIT_OK,
    })
}

fn classify(d: &DataSet) -> liftable_core::Result<Output> {
    let genus = d.ensure_valid()?;
    if d.g0() != 0 {
        return Err(Error::NotSpherical(d.g0()));
    }
    let c = classify_irreducible(&d.gamma_vector()?)?;
    let mut text = format!("data set: {d}\ngenus: {genus}\n");
    classification_lines(&mut text, &c);
    Ok(Output {
        text,
        json: json!({
            "schema": 1,
            "dataset": d.to_string(),
            "genus": genus,
            "case": c.case.label(),
            "ell": c.ell,
            "lmod": c.lmod.to_string(),
            "normalizer": c.normalizer.to_string(),
            "centralizer": c.centralizer.to_string(),
            "normalizer_asserted": c.normalizer_asserted,
        }),
        status: EXIT_OK,
    })
}

fn table1() -> liftable_core::Result<Output> {
    let t = table_genus3()?;
    Ok(Output {
        text: t.render_text(),
        json: t.to_json(),
        status: EXIT_OK,
    })
}

fn verify() -> Output {
    let v = verify_doubled_matrices();
    let mut text = String::new();
    for c in &v.checks {
        let kind = serde_json::to_value(c.kind).expect("kind");
        let _ = writeln!(
            text,
            "{} {} [{}]",
            if c.holds { "holds" } else { "fails" },
            c.relation,
            kind.as_str().unwrap_or_default()
        );
    }
    let _ = writeln!(
        text,
        "{}",
        if v.passed() {
            "all relations hold"
        } else {
            "some relations fail"
        }
    );
    Output {
        text,
        json: json!({ "schema": 1, "passed": v.passed(), "checks": v.checks }),
        status: if v.passed() { EXIT_OK } else { EXIT_REJECTED },
    }
}

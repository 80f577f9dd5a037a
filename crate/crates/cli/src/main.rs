use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use bistone::bitop::{d_clop, dspec};
use bistone::corpus::{self, Corpus, CorpusKind};
use bistone::duality::{conjecture_search, counit_roundtrip, unit_roundtrip, Bounds, Conjecture};
use bistone::io::{self, Document};
use bistone::props::{run_suite, PropInput, Suite};
use bistone::{dot, DBooleanAlgebra, Error, StructReport, Violation};
use clap::{Parser, Subcommand};
use serde_json::{json, Value};

/// Finite d-lattices, d-Boolean algebras and their bitopological spectra.
#[derive(Parser)]
#[command(name = "bistone", version)]
struct Cli {
    /// Largest element or point count accepted from input files.
    #[arg(long, global = true, env = "BISTONE_MAX_ELEMENTS", default_value_t = bistone::bits::MAX_ELEMENTS)]
    max_elements: usize,
    /// Worker threads; 0 lets the pool decide.
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
    /// Write the result here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a structure against its axioms.
    Validate {
        /// JSON structure file
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Spectrum of a d-lattice as a bitopological space.
    Spec {
        /// JSON structure file
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// d-Boolean algebra of d-clopens of a bitopological space.
    Clop {
        /// JSON structure file
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Unit round trip for an algebra, counit round trip for a space.
    Roundtrip {
        /// JSON structure file
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Write a corpus of generated structures and a manifest to a directory.
    Gen {
        /// posets, lattices, dbool or stone-spaces
        #[arg(long, value_parser = parse_kind)]
        kind: CorpusKind,
        /// Poset sizes: "max" (nonempty posets up to max) or "min,max".
        #[arg(long, default_value = "3")]
        bounds: String,
        /// Recorded in the manifest; generation is exhaustive and does not sample.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Run invariant suites over the generated corpus and any extra inputs.
    Props {
        /// Comma-separated: lattice, dlattice, ideals, bitop, duality, or all
        #[arg(long, default_value = "all")]
        suite: String,
        /// Largest poset size in the corpus.
        #[arg(long, default_value_t = 4)]
        bounds: usize,
        /// Extra structure files, or directories of them.
        #[arg(long = "in")]
        input: Vec<PathBuf>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Bounded exhaustive search on one of the open questions.
    Search {
        /// q1 or q2
        #[arg(long, value_parser = parse_conjecture)]
        conjecture: Conjecture,
        /// "n" or "points,lattice".
        #[arg(long)]
        bounds: Option<String>,
    },
    /// Graphviz rendering of a structure.
    Dot {
        /// JSON structure file
        #[arg(long = "in")]
        input: PathBuf,
    },
}

fn parse_kind(s: &str) -> Result<CorpusKind, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_conjecture(s: &str) -> Result<Conjecture, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// A finished command: its payload for stdout and whether it passed.
struct Outcome {
    body: String,
    pass: bool,
}

impl Outcome {
    fn json(v: &Value, pass: bool) -> Self {
        Outcome { body: io::to_pretty(v), pass }
    }
}

/// Errors that mean the input itself could not be used.
fn is_usage_error(e: &anyhow::Error) -> bool {
    match e.downcast_ref::<Error>() {
        Some(Error::Json(_) | Error::Schema(_) | Error::UnknownKind(_) | Error::BoundsTooLarge(_)) => true,
        Some(Error::TooLarge { .. } | Error::Precondition(_)) => true,
        Some(_) => false,
        None => e.downcast_ref::<std::io::Error>().is_some(),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    if cli.jobs > 0 {
        // only fails if a pool already exists, which cannot happen here
        let _ = rayon::ThreadPoolBuilder::new().num_threads(cli.jobs).build_global();
    }
    match run(&cli) {
        Ok(out) => {
            if let Err(e) = emit(&cli, &out.body) {
                eprintln!("error: {e:#}");
                return ExitCode::from(2);
            }
            ExitCode::from(if out.pass { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(if is_usage_error(&e) { 2 } else { 1 })
        }
    }
}

fn emit(cli: &Cli, body: &str) -> anyhow::Result<()> {
    match &cli.out {
        Some(p) if !matches!(cli.command, Command::Gen { .. }) => {
            fs::write(p, body).with_context(|| format!("writing {}", p.display()))
        }
        _ => {
            std::io::stdout().write_all(body.as_bytes())?;
            Ok(())
        }
    }
}

fn read_document(path: &Path, max: usize) -> anyhow::Result<Document> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let doc = io::parse_document(&text)?;
    let limit = max.min(bistone::bits::MAX_ELEMENTS);
    let sizes: Vec<(&'static str, usize)> = match &doc {
        Document::Poset(d) | Document::Lattice(d) => vec![("order", d.elements.len())],
        Document::DLattice(d) | Document::DBool(d) => {
            vec![("plus lattice", d.plus.elements.len()), ("minus lattice", d.minus.elements.len())]
        }
        Document::BiTop(d) => vec![("point set", d.points.len())],
    };
    for (what, size) in sizes {
        if size > limit {
            return Err(Error::TooLarge { what, size, limit }.into());
        }
    }
    Ok(doc)
}

fn structure_failure(e: Error) -> StructReport {
    StructReport::Fail(Violation::new("structure", [e.to_string()]))
}

fn validate(doc: &Document) -> anyhow::Result<StructReport> {
    Ok(match doc {
        Document::Poset(d) => io::poset_from_doc(d).map_or_else(structure_failure, |_| StructReport::Pass),
        Document::Lattice(d) => io::lattice_from_doc(d).map_or_else(structure_failure, |_| StructReport::Pass),
        Document::DLattice(d) => match io::dlattice_candidate(d) {
            Ok(dl) => dl.validate(),
            Err(e @ Error::Schema(_)) => return Err(e.into()),
            Err(e) => structure_failure(e),
        },
        Document::DBool(d) => match io::dlattice_candidate(d) {
            Ok(dl) => match dl.validate() {
                StructReport::Pass => io::dbool_from_doc(d).map_or_else(structure_failure, |_| StructReport::Pass),
                fail => fail,
            },
            Err(e @ Error::Schema(_)) => return Err(e.into()),
            Err(e) => structure_failure(e),
        },
        Document::BiTop(d) => match io::bitop_from_doc(d) {
            Ok(_) => StructReport::Pass,
            Err(e @ Error::Schema(_)) => return Err(e.into()),
            Err(e) => structure_failure(e),
        },
    })
}

fn report_json(kind: &str, r: &StructReport) -> Value {
    let mut v = serde_json::to_value(r).expect("reports serialize");
    let m = v.as_object_mut().expect("object");
    m.insert("kind".into(), json!("validation-report"));
    m.insert("version".into(), json!(io::VERSION));
    m.insert("input_kind".into(), json!(kind));
    v
}

/// Validates first; a failing input yields the report instead of a structure.
fn checked<T>(doc: &Document, build: impl FnOnce() -> bistone::Result<T>) -> anyhow::Result<Result<T, Outcome>> {
    let r = validate(doc)?;
    if !r.is_pass() {
        eprintln!("{}: {r}", doc.kind());
        return Ok(Err(Outcome::json(&report_json(doc.kind(), &r), false)));
    }
    Ok(Ok(build()?))
}

fn kind_mismatch(doc: &Document, want: &str) -> anyhow::Error {
    Error::Schema(format!("expected {want}, got {}", doc.kind())).into()
}

fn run(cli: &Cli) -> anyhow::Result<Outcome> {
    match &cli.command {
        Command::Validate { input } => {
            let doc = read_document(input, cli.max_elements)?;
            let r = validate(&doc)?;
            eprintln!("{}: {r}", doc.kind());
            Ok(Outcome::json(&report_json(doc.kind(), &r), r.is_pass()))
        }
        Command::Spec { input } => {
            let doc = read_document(input, cli.max_elements)?;
            let d = match &doc {
                Document::DLattice(d) | Document::DBool(d) => d,
                _ => return Err(kind_mismatch(&doc, "dlattice or dbool")),
            };
            match checked(&doc, || io::dlattice_candidate(d).and_then(|dl| dspec(&dl)))? {
                Ok(s) => {
                    eprintln!("spectrum has {} points", s.space.len());
                    Ok(Outcome::json(&io::bitop_json(&s.space), true))
                }
                Err(o) => Ok(o),
            }
        }
        Command::Clop { input } => {
            let doc = read_document(input, cli.max_elements)?;
            let Document::BiTop(d) = &doc else { return Err(kind_mismatch(&doc, "bitop")) };
            match checked(&doc, || io::bitop_from_doc(d).and_then(|x| d_clop(&x)))? {
                Ok(a) => {
                    eprintln!("d-clopens: {} plus, {} minus", a.plus().len(), a.minus().len());
                    Ok(Outcome::json(&io::dbool_json(&a), true))
                }
                Err(o) => Ok(o),
            }
        }
        Command::Roundtrip { input } => {
            let doc = read_document(input, cli.max_elements)?;
            let witness = match &doc {
                Document::DLattice(d) | Document::DBool(d) => {
                    let build = || {
                        io::dlattice_candidate(d)
                            .and_then(|dl| DBooleanAlgebra::from_dlattice(dl))
                            .and_then(|a| unit_roundtrip(&a))
                    };
                    match checked(&doc, build)? {
                        Ok(w) => w,
                        Err(o) => return Ok(o),
                    }
                }
                Document::BiTop(d) => match checked(&doc, || io::bitop_from_doc(d).and_then(|x| counit_roundtrip(&x)))? {
                    Ok(w) => w,
                    Err(o) => return Ok(o),
                },
                _ => return Err(kind_mismatch(&doc, "dlattice, dbool or bitop")),
            };
            eprintln!("{}: {}", witness.kind, if witness.is_iso() { "ISO" } else { "NOT_ISO" });
            Ok(Outcome::json(&witness.to_json(), witness.is_iso()))
        }
        Command::Gen { kind, bounds, seed } => gen(cli, *kind, bounds, *seed),
        Command::Props { suite, bounds, input, seed } => props(cli, suite, *bounds, input, *seed),
        Command::Search { conjecture, bounds } => {
            let bounds = match bounds {
                Some(b) => b.parse::<Bounds>()?,
                None => default_bounds(*conjecture),
            };
            let r = conjecture_search(*conjecture, bounds)?;
            eprintln!(
                "{:?}: {} candidates, {}",
                conjecture,
                r.examined,
                if r.found() { "counterexample found" } else { "no counterexample within bounds" }
            );
            Ok(Outcome::json(&r.to_json(), true))
        }
        Command::Dot { input } => {
            let doc = read_document(input, cli.max_elements)?;
            let body = match &doc {
                Document::Poset(d) => dot::poset_dot(&io::poset_from_doc(d)?),
                Document::Lattice(d) => dot::poset_dot(io::lattice_from_doc(d)?.poset()),
                Document::DLattice(d) | Document::DBool(d) => dot::dlattice_dot(&io::dlattice_candidate(d)?),
                Document::BiTop(d) => dot::bitop_dot(&io::bitop_from_doc(d)?),
            };
            Ok(Outcome { body, pass: true })
        }
    }
}

fn default_bounds(c: Conjecture) -> Bounds {
    match c {
        Conjecture::Q1 => Bounds { max_points: Bounds::Q1_LIMIT, max_lattice: 0 },
        Conjecture::Q2 => Bounds { max_points: 0, max_lattice: Bounds::Q2_LIMIT },
    }
}

fn parse_range(s: &str) -> anyhow::Result<(usize, usize)> {
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| Error::Schema(format!("bad bound {t:?}")));
    Ok(match s.split_once(',') {
        Some((a, b)) => (num(a)?, num(b)?),
        None => (1, num(s)?),
    })
}

fn gen(cli: &Cli, kind: CorpusKind, bounds: &str, seed: u64) -> anyhow::Result<Outcome> {
    let (min, max) = parse_range(bounds)?;
    let dir = cli.out.as_ref().ok_or_else(|| Error::Schema("gen needs --out DIR".into()))?;
    let posets = corpus::source_posets(kind, min, max)?;
    let docs = corpus::generate(kind, min, max)?;
    fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    let mut files = Vec::new();
    let mut by_size = std::collections::BTreeMap::<usize, usize>::new();
    for (i, (doc, p)) in docs.iter().zip(&posets).enumerate() {
        let name = format!("{}-{i:04}.json", kind.as_str());
        fs::write(dir.join(&name), io::to_pretty(doc))?;
        *by_size.entry(p.len()).or_default() += 1;
        files.push(name);
    }
    let manifest = json!({
        "kind": "manifest",
        "version": io::VERSION,
        "corpus": kind.as_str(),
        "seed": seed,
        "min_points": min,
        "max_points": max,
        "count": files.len(),
        "counts_by_size": by_size.iter().map(|(k, v)| (k.to_string(), json!(v))).collect::<serde_json::Map<_, _>>(),
        "files": files,
    });
    fs::write(dir.join("manifest.json"), io::to_pretty(&manifest))?;
    eprintln!("wrote {} {} to {}", files.len(), kind.as_str(), dir.display());
    Ok(Outcome::json(&manifest, true))
}

fn collect_inputs(paths: &[PathBuf]) -> anyhow::Result<Vec<PathBuf>> {
    let mut out = Vec::new();
    for p in paths {
        if p.is_dir() {
            let mut entries: Vec<PathBuf> = fs::read_dir(p)?
                .filter_map(|e| e.ok().map(|e| e.path()))
                .filter(|f| f.extension().is_some_and(|x| x == "json") && f.file_name().is_some_and(|n| n != "manifest.json"))
                .collect();
            entries.sort();
            out.extend(entries);
        } else {
            out.push(p.clone());
        }
    }
    Ok(out)
}

fn props(cli: &Cli, suite: &str, bounds: usize, inputs: &[PathBuf], seed: u64) -> anyhow::Result<Outcome> {
    let suites = Suite::parse_list(suite)?;
    let mut input = PropInput::new(Corpus::build(bounds)?);
    for path in collect_inputs(inputs)? {
        match read_document(&path, cli.max_elements)? {
            Document::Poset(_) => {}
            Document::Lattice(d) => input.lattices.push(io::lattice_from_doc(&d)?),
            Document::DLattice(d) | Document::DBool(d) => input.dlattices.push(io::dlattice_candidate(&d)?),
            Document::BiTop(d) => input.spaces.push(io::bitop_from_doc(&d)?),
        }
    }
    let results: Vec<_> = suites.iter().flat_map(|&s| run_suite(s, &input)).collect();
    for r in &results {
        let status = if r.passed() { "PASS" } else { "FAIL" };
        eprintln!("{status}  {:<9} {} ({} checked)", r.suite.as_str(), r.property, r.checked);
        if let Some(f) = &r.failure {
            eprintln!("      {f}");
        }
    }
    let pass = results.iter().all(|r| r.passed());
    let v = json!({
        "kind": "props-report",
        "version": io::VERSION,
        "seed": seed,
        "corpus_max_points": bounds,
        "results": results,
    });
    Ok(Outcome::json(&v, pass))
}

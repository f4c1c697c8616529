use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use dd_coherence::corpus;
use dd_coherence::ddcat::{check_alphakey, check_dd};
use dd_coherence::document::{BraidingSection, Document, DocumentError};
use dd_coherence::fincat::check_category;
use dd_coherence::monadterm::obligations::{self, Expect, Obligation};
use dd_coherence::monadterm::search::{Outcome, DEFAULT_DEPTH};
use dd_coherence::monoidal::{check_braided, check_monoidal, MonoidalFunctorData};
use dd_coherence::report::Report;
use dd_coherence::rigmodel::{check_rig, verify_beck};
use dd_coherence::weakmap::{
    check_map_braided, check_transformation, check_weak_map, derive_horizontal, promote_to_weak_map,
};

#[derive(Parser)]
#[command(
    name = "ddcheck",
    about = "Exhaustive coherence checks and a bounded prover for monad terms"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Prover search bound.
    #[arg(long, global = true, default_value_t = DEFAULT_DEPTH)]
    depth: usize,
    /// Largest carrier enumerated by rig checks.
    #[arg(long, global = true, default_value_t = 3)]
    max_set: usize,
    /// Human-readable text or one JSON object.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Machine,
}

#[derive(Subcommand)]
enum Command {
    /// Category laws of the `category` section.
    CheckCat { file: PathBuf },
    /// Every `monoidal` section, and the `braiding` section if present.
    CheckMonoidal { file: PathBuf },
    /// The DD axioms of the `dd` section.
    CheckDd { file: PathBuf },
    /// Emit the standard braiding of the `dd` section and check it.
    Braid { file: PathBuf },
    /// Weak-map axioms and the braided-functor property of the `map` section.
    CheckMap { file: PathBuf },
    /// Rebuild `h` from the vertical data of the `map` section.
    PromoteMap { file: PathBuf },
    /// Vertical and horizontal monoidality of the `transformation` section.
    CheckTransformation { file: PathBuf },
    /// Rig laws and the four Beck diagrams of the `rig` section.
    RigVerify { file: PathBuf },
    /// Discharge the `obligation` section of a file, or a bundled obligation.
    Prove {
        /// Document holding an `obligation` section.
        #[arg(required_unless_present = "bundled")]
        file: Option<PathBuf>,
        /// Name of a bundled obligation, including the mutated control.
        #[arg(long, conflicts_with = "file")]
        bundled: Option<String>,
    },
    /// Every applicable check on every document of a tree; the bundled tree
    /// when no directory is given.
    Corpus {
        /// Root of a tree of `.json` documents.
        dir: Option<PathBuf>,
    },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
struct ProofRecord {
    name: String,
    expect: Expect,
    #[serde(flatten)]
    outcome: Outcome,
}

/// Everything a run reports; the machine format is this value as JSON.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
struct Output {
    reports: Vec<Report>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    proofs: Vec<ProofRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    braiding: Option<BraidingSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    h: Option<Vec<usize>>,
}

impl Output {
    fn passed(&self) -> bool {
        self.reports.iter().all(Report::passed) && self.proofs.iter().all(|p| p.outcome.is_proven())
    }

    fn absorb(&mut self, other: Output) {
        self.reports.extend(other.reports);
        self.proofs.extend(other.proofs);
    }

    fn text(&self) -> String {
        let mut out = String::new();
        if let Some(b) = &self.braiding {
            out.push_str(&format!("gamma ({}): {:?}\n", b.monoidal, b.gamma));
        }
        if let Some(h) = &self.h {
            out.push_str(&format!("h: {h:?}\n"));
        }
        for r in &self.reports {
            let s = r.to_string();
            out.push_str(s.trim_end());
            out.push('\n');
        }
        for p in &self.proofs {
            match p.outcome {
                Outcome::Proven { steps } => out.push_str(&format!("obligation {}: proven in {steps} steps\n", p.name)),
                Outcome::NotFound => out.push_str(&format!("obligation {}: not found\n", p.name)),
            }
        }
        out
    }
}

struct Flags {
    depth: usize,
    max_set: usize,
}

fn load(path: &Path) -> Result<Document, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    Document::parse(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn prove(o: &Obligation, flags: &Flags) -> Result<ProofRecord, DocumentError> {
    Ok(ProofRecord {
        name: o.name.clone(),
        expect: o.expect,
        outcome: o.check(flags.depth)?,
    })
}

fn monoidal_reports(doc: &Document) -> Result<Vec<Report>, DocumentError> {
    let mut out: Vec<Report> = doc
        .monoidals()?
        .iter()
        .map(|(name, s)| {
            let mut r = check_monoidal(s);
            r.subject = format!("monoidal {name}");
            r
        })
        .collect();
    if doc.braiding.is_some() {
        out.push(check_braided(&doc.braided()?));
    }
    Ok(out)
}

fn promote(doc: &Document) -> Result<Output, DocumentError> {
    let hom = doc.hom()?;
    let m = doc.map.as_ref().ok_or(DocumentError::Missing("map"))?;
    let f = Document::map_functor(&hom, &m.data())?;
    let vertical = MonoidalFunctorData::new(hom.source_v.clone(), hom.target_v.clone(), f, m.v.clone(), m.eta)?;
    let mut report = Report::new("promoted map");
    let mut out = Output::default();
    match promote_to_weak_map(Arc::clone(&hom), &vertical) {
        Ok(w) => {
            report.extend(check_weak_map(&w));
            if let Some(given) = &m.h {
                if let Some(i) = (0..given.len()).find(|&i| given[i] != w.h[i]) {
                    report.push(
                        "reconstructed h",
                        format!("entry {i}: given {}, reconstructed {}", given[i], w.h[i]),
                    );
                }
            }
            out.h = Some(w.h);
        }
        Err(e) => report.push("precondition", e.to_string()),
    }
    out.reports.push(report);
    Ok(out)
}

/// Every check that applies to the sections present in `doc`.
fn check_all(doc: &Document, flags: &Flags) -> Result<Output, DocumentError> {
    let mut out = Output::default();
    if doc.category.is_some() {
        out.reports.push(check_category(&*doc.category()?));
    }
    if !doc.monoidal.is_empty() {
        out.reports.extend(monoidal_reports(doc)?);
    }
    if doc.dd.is_some() {
        let x = doc.dd()?;
        out.reports.push(check_dd(&x));
        out.reports.push(check_alphakey(&x));
    }
    if doc.map.is_some() {
        let m = doc.weak_map()?;
        out.reports.push(check_weak_map(&m));
        out.reports.push(check_map_braided(&m));
    }
    if doc.transformation.is_some() {
        let t = doc.transformation()?;
        out.reports.push(check_transformation(&t));
        out.reports.push(derive_horizontal(&t));
    }
    if doc.rig.is_some() {
        let r = doc.rig()?;
        out.reports.push(check_rig(&r));
        out.reports.push(verify_beck(&r, flags.max_set));
    }
    if doc.obligation.is_some() {
        out.proofs.push(prove(&doc.obligation()?, flags)?);
    }
    Ok(out)
}

fn tree(dir: &Path) -> Result<Vec<(String, String)>, String> {
    let mut files = Vec::new();
    let mut todo = vec![dir.to_path_buf()];
    while let Some(d) = todo.pop() {
        for e in std::fs::read_dir(&d).map_err(|e| format!("{}: {e}", d.display()))? {
            let p = e.map_err(|e| e.to_string())?.path();
            if p.is_dir() {
                todo.push(p);
            } else if p.extension().is_some_and(|x| x == "json") {
                let text = std::fs::read_to_string(&p).map_err(|e| format!("{}: {e}", p.display()))?;
                let rel = p
                    .strip_prefix(dir)
                    .unwrap_or(&p)
                    .iter()
                    .map(|c| c.to_string_lossy())
                    .collect::<Vec<_>>()
                    .join("/");
                files.push((rel, text));
            }
        }
    }
    Ok(files)
}

fn run_corpus(dir: Option<&Path>, flags: &Flags) -> Result<Output, String> {
    let mut files = match dir {
        Some(d) => tree(d)?,
        None => corpus::FILES
            .iter()
            .map(|&(p, t)| (p.to_string(), t.to_string()))
            .collect(),
    };
    files.sort();
    let mut out = Output::default();
    for (path, text) in files {
        let doc = Document::parse(&text).map_err(|e| format!("{path}: {e}"))?;
        let mut one = check_all(&doc, flags).map_err(|e| format!("{path}: {e}"))?;
        for r in &mut one.reports {
            r.subject = format!("{path}: {}", r.subject);
        }
        out.absorb(one);
    }
    Ok(out)
}

fn run(cli: &Cli) -> Result<Output, String> {
    let flags = Flags {
        depth: cli.depth,
        max_set: cli.max_set,
    };
    let err = |e: DocumentError| e.to_string();
    let single = |r: Report| Output {
        reports: vec![r],
        ..Output::default()
    };
    Ok(match &cli.command {
        Command::CheckCat { file } => single(check_category(&*load(file)?.category().map_err(err)?)),
        Command::CheckMonoidal { file } => Output {
            reports: monoidal_reports(&load(file)?).map_err(err)?,
            ..Output::default()
        },
        Command::CheckDd { file } => single(check_dd(&load(file)?.dd().map_err(err)?)),
        Command::Braid { file } => {
            let x = load(file)?.dd().map_err(err)?;
            let b = x.to_braided().map_err(|e| e.to_string())?;
            Output {
                reports: vec![check_braided(&b)],
                braiding: Some(BraidingSection {
                    monoidal: "vertical".into(),
                    gamma: b.braiding,
                }),
                ..Output::default()
            }
        }
        Command::CheckMap { file } => {
            let m = load(file)?.weak_map().map_err(err)?;
            Output {
                reports: vec![check_weak_map(&m), check_map_braided(&m)],
                ..Output::default()
            }
        }
        Command::PromoteMap { file } => promote(&load(file)?).map_err(err)?,
        Command::CheckTransformation { file } => {
            let t = load(file)?.transformation().map_err(err)?;
            Output {
                reports: vec![check_transformation(&t), derive_horizontal(&t)],
                ..Output::default()
            }
        }
        Command::RigVerify { file } => {
            let r = load(file)?.rig().map_err(err)?;
            Output {
                reports: vec![check_rig(&r), verify_beck(&r, flags.max_set)],
                ..Output::default()
            }
        }
        Command::Prove { file, bundled } => {
            let o = match (file, bundled) {
                (_, Some(name)) => obligations::find(name).ok_or_else(|| format!("no bundled obligation {name:?}"))?,
                (Some(f), None) => load(f)?.obligation().map_err(err)?,
                (None, None) => unreachable!("clap requires one"),
            };
            Output {
                proofs: vec![prove(&o, &flags).map_err(err)?],
                ..Output::default()
            }
        }
        Command::Corpus { dir } => run_corpus(dir.as_deref(), &flags)?,
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            match cli.format {
                Format::Text => print!("{}", out.text()),
                Format::Machine => println!("{}", serde_json::to_string_pretty(&out).expect("output serializes")),
            }
            if out.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

//! `simplicat`: batch front end for the constructions in the `simplicat`
//! library. Every subcommand reads one text bundle and writes either a
//! document or a report.
//!
//! Exit codes: 0 success or verified, 1 verification failed, 2 input error.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use simplicat::bar::{bar_construction, bwe_diagonal, check_extra_degeneracy, inclusion_compare};
use simplicat::diagram::{
    assemble, clutch, decompose, quasi_fibration_check, round_trip, simplicial_replacement_hocolim, square_categories,
    thomason_compare,
};
use simplicat::fincat::{grothendieck, under_category};
use simplicat::homology::{is_homology_equivalence, simplicial_homology, HomologyReport};
use simplicat::sset::{pushout, subdivision, FiniteSimplicialSet, Nerve, SimplicialMap};
use simplicat::text::{
    print_augmented, print_category, print_functor, print_map, print_sset, Bundle, BundleWriter, ParseError, Resolver,
};

#[derive(Parser)]
#[command(name = "simplicat", version, about = "Finite categories, simplicial sets and their homology")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Common {
    /// input document or bundle
    #[arg(long = "in", visible_aliases = ["map", "system"], value_name = "FILE")]
    input: PathBuf,
    /// write the output here instead of standard output
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
    /// dimension window
    #[arg(long, visible_alias = "degree", value_name = "D")]
    window: Option<usize>,
    /// highest degree in which an equivalence is checked
    #[arg(long, value_name = "K")]
    up_to: Option<usize>,
    /// emit JSON instead of plain text
    #[arg(long)]
    machine: bool,
    /// name of the main document when the bundle holds several
    #[arg(long, value_name = "NAME")]
    name: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Nerve of a category, as a simplicial-set document.
    Nerve(Common),
    /// Subdivision of a simplicial set, as a simplicial-set document.
    Sd(Common),
    /// Grothendieck construction of a system, as a category document.
    Gr(Common),
    /// Under category `a↑f` of a functor, as a category document.
    Under {
        #[command(flatten)]
        common: Common,
        /// the object `a` of the codomain
        #[arg(long)]
        object: String,
    },
    /// Homotopy colimit of a diagram of simplicial sets.
    Hocolim(Common),
    /// Compares the Grothendieck construction with the homotopy colimit.
    Thomason(Common),
    /// Clutches `F` on `B` and `G` on `C` along `psi` over the pushout of
    /// `f : A → B` and `i : A → C`.
    Clutch(Common),
    /// Bar construction of a groupoid: contractibility of `diag EG`, the
    /// homology of `diag BG` and, with `--subset`, an inclusion check.
    Bar {
        #[command(flatten)]
        common: Common,
        /// comma-separated objects spanning a full subgroupoid
        #[arg(long, value_delimiter = ',')]
        subset: Vec<String>,
    },
    /// Homology of a simplicial set.
    Homology(Common),
    /// Whether a simplicial map is a homology equivalence.
    CheckWeq(Common),
    /// Whether a functor is a quasi-fibration; also the Theorem A check.
    CheckQfib(Common),
    /// Decomposition of a map over the simplex category of its base.
    Decompose(Common),
    /// Colimit of an augmented diagram with its map to the base.
    Assemble(Common),
    /// Decomposes and reassembles a map, checking the comparison.
    Roundtrip(Common),
}

/// An input problem: unreadable file, parse error or rejected data.
struct InputError(String);

impl InputError {
    fn parse(path: &Path, e: ParseError) -> Self {
        InputError(format!("{}: {e}", path.display()))
    }
}

fn fail(e: impl std::fmt::Display) -> InputError {
    InputError(e.to_string())
}

struct Output {
    text: String,
    json: Value,
    verified: bool,
}

impl Output {
    fn document(kind: &str, text: String) -> Self {
        let json = json!({ "kind": kind, "document": text });
        Output { text, json, verified: true }
    }

    fn report(text: String, json: Value, verified: bool) -> Self {
        Output { text, json, verified }
    }
}

struct Input {
    path: PathBuf,
    bundle: Bundle,
}

impl Input {
    fn read(path: &Path) -> Result<Self, InputError> {
        let text = fs::read_to_string(path).map_err(|e| InputError(format!("{}: {e}", path.display())))?;
        let bundle = Bundle::parse(&text).map_err(|e| InputError::parse(path, e))?;
        Ok(Input { path: path.to_path_buf(), bundle })
    }

    fn resolve<T>(&self, f: impl FnOnce(&Resolver) -> Result<T, ParseError>) -> Result<T, InputError> {
        f(&Resolver::new(&self.bundle)).map_err(|e| InputError::parse(&self.path, e))
    }
}

fn positive(window: usize) -> Result<usize, InputError> {
    if window == 0 {
        return Err(InputError("the window must be positive".into()));
    }
    Ok(window)
}

/// Re-windows a simplicial set; only complete listings may grow.
fn rewindow(x: &FiniteSimplicialSet, window: usize, complete: bool) -> Result<FiniteSimplicialSet, InputError> {
    if window > x.window() && !complete {
        return Err(InputError(format!(
            "the input is truncated at window {}; window {window} would need simplices it does not list",
            x.window()
        )));
    }
    Ok(x.with_window(window))
}

fn rewindow_map(f: &SimplicialMap, window: usize, complete: bool) -> Result<SimplicialMap, InputError> {
    if window > f.domain().window().min(f.codomain().window()) && !complete {
        return Err(InputError(format!(
            "the map is truncated at window {}; window {window} would need simplices it does not list",
            f.domain().window().min(f.codomain().window())
        )));
    }
    Ok(f.with_window(window))
}

fn homology_lines(h: &HomologyReport, through: usize) -> String {
    h.groups.iter().take(through + 1).map(|g| format!("{g}\n")).collect()
}

fn run(command: &Command) -> Result<(Output, Common), InputError> {
    let out = match command {
        Command::Nerve(c) => {
            let input = Input::read(&c.input)?;
            let cat = input.resolve(|r| r.main_category(c.name.as_deref()))?;
            let w = positive(c.window.unwrap_or(3))?;
            (Output::document("sset", print_sset(&Nerve::new(&cat, w).set)), c.clone())
        }
        Command::Sd(c) => {
            let input = Input::read(&c.input)?;
            let (x, complete) = input.resolve(|r| Ok((r.main_sset(c.name.as_deref())?, r.main_sset_is_complete(c.name.as_deref())?)))?;
            let w = positive(c.window.unwrap_or(x.window()))?;
            let x = Arc::new(rewindow(&x, w, complete)?);
            let sd = subdivision(&x, w, w).map_err(fail)?;
            (Output::document("sset", print_sset(sd.set())), c.clone())
        }
        Command::Gr(c) => {
            let input = Input::read(&c.input)?;
            let system = input.resolve(|r| r.main_system(c.name.as_deref()))?;
            let gr = grothendieck(&system).map_err(fail)?;
            (Output::document("category", print_category(&gr.category)), c.clone())
        }
        Command::Under { common: c, object } => {
            let input = Input::read(&c.input)?;
            let f = input.resolve(|r| r.main_functor(c.name.as_deref()))?;
            let a = f
                .codomain()
                .object_by_label(object)
                .ok_or_else(|| InputError(format!("the codomain has no object `{object}`")))?;
            let under = under_category(a, &f).map_err(fail)?;
            let mut w = BundleWriter::new();
            w.push("category", "U", &print_category(&under.category));
            w.push("category", "J", &print_category(f.domain()));
            w.push("functor", "forget", &print_functor(&under.forget, "U", "J"));
            (Output::document("bundle", w.finish()), c.clone())
        }
        Command::Hocolim(c) => {
            let input = Input::read(&c.input)?;
            let d = input.resolve(|r| r.main_diagram(c.name.as_deref()))?;
            let w = positive(c.window.unwrap_or(d.window()))?;
            let h = simplicial_replacement_hocolim(&d, w).map_err(fail)?;
            (Output::document("sset", print_sset(&h)), c.clone())
        }
        Command::Thomason(c) => {
            let input = Input::read(&c.input)?;
            let system = input.resolve(|r| r.main_system(c.name.as_deref()))?;
            let w = positive(c.window.unwrap_or(3))?;
            let report = thomason_compare(&system, w).map_err(fail)?;
            let json = serde_json::to_value(&report).map_err(fail)?;
            (Output::report(report.to_string(), json, report.equal), c.clone())
        }
        Command::Clutch(c) => (run_clutch(c)?, c.clone()),
        Command::Bar { common: c, subset } => (run_bar(c, subset)?, c.clone()),
        Command::Homology(c) => {
            let input = Input::read(&c.input)?;
            let (x, complete) = input.resolve(|r| Ok((r.main_sset(c.name.as_deref())?, r.main_sset_is_complete(c.name.as_deref())?)))?;
            let w = positive(c.window.unwrap_or(if complete { x.window() + 1 } else { x.window() }))?;
            let h = simplicial_homology(&rewindow(&x, w, complete)?).map_err(fail)?;
            let json = serde_json::to_value(&h).map_err(fail)?;
            (Output::report(h.to_string(), json, true), c.clone())
        }
        Command::CheckWeq(c) => {
            let input = Input::read(&c.input)?;
            let (f, complete) = input.resolve(|r| Ok((r.main_map(c.name.as_deref())?, r.main_map_is_complete(c.name.as_deref())?)))?;
            let k = c.up_to.unwrap_or(2);
            let report = is_homology_equivalence(&rewindow_map(&f, k + 1, complete)?, k).map_err(fail)?;
            let mut text = report.to_string();
            text.push_str(if report.holds { "\nVERIFIED" } else { "\nNOT VERIFIED" });
            let json = serde_json::to_value(&report).map_err(fail)?;
            (Output::report(text, json, report.holds), c.clone())
        }
        Command::CheckQfib(c) => {
            let input = Input::read(&c.input)?;
            let f = input.resolve(|r| r.main_functor(c.name.as_deref()))?;
            let report = quasi_fibration_check(&f, c.up_to.unwrap_or(2)).map_err(fail)?;
            let json = serde_json::to_value(&report).map_err(fail)?;
            let ok = report.is_quasi_fibration && report.theorem_a.consistent;
            (Output::report(report.to_string(), json, ok), c.clone())
        }
        Command::Decompose(c) => {
            let input = Input::read(&c.input)?;
            let (f, complete) = input.resolve(|r| Ok((r.main_map(c.name.as_deref())?, r.main_map_is_complete(c.name.as_deref())?)))?;
            let w = f.codomain().window();
            let d = decompose(&rewindow_map(&f, w, complete)?).map_err(fail)?;
            let text = print_augmented(&d.augmented).map_err(fail)?;
            (Output::document("bundle", text), c.clone())
        }
        Command::Assemble(c) => {
            let input = Input::read(&c.input)?;
            let g = input.resolve(|r| r.main_augmented(c.name.as_deref()))?;
            let a = assemble(&g).map_err(fail)?;
            let mut w = BundleWriter::new();
            w.push("sset", "E", &print_sset(&a.colimit.set));
            w.push("sset", "X", &print_sset(a.map.codomain()));
            w.push("map", "f", &print_map(&a.map, "E", "X"));
            (Output::document("bundle", w.finish()), c.clone())
        }
        Command::Roundtrip(c) => {
            let input = Input::read(&c.input)?;
            let (f, complete) = input.resolve(|r| Ok((r.main_map(c.name.as_deref())?, r.main_map_is_complete(c.name.as_deref())?)))?;
            let w = f.codomain().window();
            let rt = round_trip(&rewindow_map(&f, w, complete)?).map_err(fail)?;
            let objects = rt.decomposition.augmented.simplex_category.category.object_count();
            let text = format!(
                "decomposition over {objects} simplices\ncomparison is an isomorphism: {}\ncommutes over the base: {}\n{}",
                rt.is_isomorphism,
                rt.over_base,
                if rt.holds() { "ROUND TRIP VERIFIED" } else { "ROUND TRIP FAILED" }
            );
            let json = json!({
                "objects": objects,
                "is_isomorphism": rt.is_isomorphism,
                "over_base": rt.over_base,
                "holds": rt.holds(),
            });
            (Output::report(text, json, rt.holds()), c.clone())
        }
    };
    Ok(out)
}

fn run_clutch(c: &Common) -> Result<Output, InputError> {
    let input = Input::read(&c.input)?;
    let (f, i, fb, gc) = input.resolve(|r| {
        Ok((r.named_map("f")?, r.named_map("i")?, r.simplex_functor("F")?, r.simplex_functor("G")?))
    })?;
    let push = pushout(&f, &i).map_err(fail)?;
    let cats = square_categories(&push, fb.simplex_category.window).map_err(fail)?;
    let source = fb.functor.after(&cats.f).map_err(fail)?;
    let target = gc.functor.after(&cats.i).map_err(fail)?;
    let psi = input.resolve(|r| r.transformation("psi", &source, &target))?;
    let result = clutch(&push, &cats, &fb, &gc, &psi).map_err(fail)?;
    let report = &result.report;
    let mut text = report.to_string();
    text.push_str(if report.holds() { "\nCLUTCHING VERIFIED" } else { "\nCLUTCHING FAILED" });
    let json = json!({
        "report": serde_json::to_value(report).map_err(fail)?,
        "objects": result.h.functor.domain().object_count(),
        "holds": report.holds(),
    });
    Ok(Output::report(text, json, report.holds()))
}

fn run_bar(c: &Common, subset: &[String]) -> Result<Output, InputError> {
    let input = Input::read(&c.input)?;
    let data = input.resolve(|r| r.main_groupoid(c.name.as_deref()))?;
    let w = positive(c.window.unwrap_or(4))?;
    let pair = bar_construction(&data, w);
    let extra = check_extra_degeneracy(&pair).map_err(fail)?;
    let bg = simplicial_homology(&bwe_diagonal(&pair).map_err(fail)?.bg).map_err(fail)?;
    let mut text = format!("{extra}\ndiag BG:\n");
    for line in homology_lines(&bg, w.saturating_sub(1)).lines() {
        text.push_str(&format!("  {line}\n"));
    }
    let mut verified = extra.holds();
    let mut json = json!({
        "extra_degeneracy": serde_json::to_value(&extra).map_err(fail)?,
        "bg_homology": serde_json::to_value(&bg).map_err(fail)?,
    });
    if !subset.is_empty() {
        let names: Vec<&str> = subset.iter().map(String::as_str).collect();
        let report = inclusion_compare(&data, &names, c.up_to.unwrap_or(w - 1)).map_err(fail)?;
        text.push_str(&format!("{report}\n"));
        verified &= report.holds();
        json["inclusion"] = serde_json::to_value(&report).map_err(fail)?;
    }
    text.push_str(if verified { "BAR CONSTRUCTION VERIFIED" } else { "BAR CONSTRUCTION FAILED" });
    Ok(Output::report(text, json, verified))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli.command) {
        Ok((output, common)) => {
            let mut body = if common.machine {
                let mut v = output.json;
                if let Value::Object(m) = &mut v {
                    m.insert("verified".into(), Value::Bool(output.verified));
                }
                serde_json::to_string_pretty(&v).expect("JSON values serialize")
            } else {
                output.text
            };
            if !body.ends_with('\n') {
                body.push('\n');
            }
            match &common.out {
                Some(path) => {
                    if let Err(e) = fs::write(path, &body) {
                        eprintln!("error: {}: {e}", path.display());
                        return ExitCode::from(2);
                    }
                }
                None => print!("{body}"),
            }
            if output.verified {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(InputError(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

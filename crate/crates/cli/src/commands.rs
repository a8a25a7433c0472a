use std::fs;
use std::path::Path;

use dchase_core::genrand::{
    random_cross, random_exact_complex, random_exact_grid, random_hom_instance, random_snake_input, GenConfig,
    PRNG_ID,
};
use dchase_core::grid::{
    ccl_homology_dims, ccl_homology_iso, kcl_homology_dims, kcl_homology_iso, HomologyIso,
};
use dchase_core::io;
use dchase_core::quiverhom::{additivity_check, hom_grid, SummandMethod};
use dchase_core::relation::verify_cross_lemma;
use dchase_core::snake::{snake, snake_via_grids, SnakeResult};
use dchase_core::suite::{selftest_json, Suite, SuiteReport};
use dchase_core::{Error, Field, Grid, Orientation, StaircaseShape};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::report::{digest, Report, EXIT_OK};
use crate::{Cli, Command, GenArgs, GenKind, LemmaArgs, OrientationArg};

pub enum Outcome {
    Report(Report),
    /// Finished with this exit code; output already written.
    Done(i32),
}

pub struct Failure {
    pub digest: String,
    pub error: Error,
}

type Run<T> = std::result::Result<T, Failure>;

pub fn name(c: &Command) -> &'static str {
    match c {
        Command::Validate { .. } => "validate",
        Command::Kcl(_) => "kcl",
        Command::Ccl(_) => "ccl",
        Command::Cross { .. } => "cross",
        Command::Snake { .. } => "snake",
        Command::Hom { .. } => "hom",
        Command::Gen(_) => "gen",
        Command::Selftest { .. } => "selftest",
    }
}

/// Input files, read once, with their combined digest.
struct Inputs {
    texts: Vec<String>,
    digest: String,
}

fn read_inputs(paths: &[&Path]) -> Run<Inputs> {
    let mut texts = Vec::new();
    for p in paths {
        let text = fs::read_to_string(p).map_err(|e| Failure {
            digest: String::new(),
            error: Error::Parse(format!("{}: {e}", p.display())),
        })?;
        texts.push(text);
    }
    let parts: Vec<&[u8]> = texts.iter().map(|t| t.as_bytes()).collect();
    Ok(Inputs { digest: digest(&parts), texts })
}

fn field_override(cli: &Cli) -> dchase_core::Result<Option<Field>> {
    cli.global.field.as_deref().map(io::field_from_arg).transpose()
}

pub fn run(cli: &Cli) -> Run<Outcome> {
    match &cli.command {
        Command::Validate { grid } => with_input(cli, &[grid], |inputs, over| {
            let g = io::grid_from_json(&io::parse_text(&inputs.texts[0])?, over)?;
            let mut r = Report::new("validate", inputs.digest.clone());
            validation(&mut r, &g);
            Ok(r)
        }),
        Command::Kcl(args) => with_input(cli, &[&args.grid], |inputs, over| {
            let g = io::grid_from_json(&io::parse_text(&inputs.texts[0])?, over)?;
            lemma(Report::new("kcl", inputs.digest.clone()), &g, args, Orientation::Kernel)
        }),
        Command::Ccl(args) => with_input(cli, &[&args.grid], |inputs, over| {
            let g = io::grid_from_json(&io::parse_text(&inputs.texts[0])?, over)?;
            lemma(Report::new("ccl", inputs.digest.clone()), &g, args, Orientation::Cokernel)
        }),
        Command::Cross { cross } => with_input(cli, &[cross], |inputs, over| {
            let c = io::cross_from_json(&io::parse_text(&inputs.texts[0])?, over)?;
            let report = verify_cross_lemma(&c)?;
            let mut r = Report::new("cross", inputs.digest.clone());
            r.verdict("image transfer through g . beta2^-1", report.image_transfer);
            r.verdict("Ker beta2 f is the domain of beta1^-1 . f", report.kernel_domain);
            r.verdict("Ker g beta1 is the range of beta1^-1 . f", report.kernel_range);
            if let Some(e) = report.enumerated {
                r.verdict("element enumeration agrees", e == report.verdicts());
            }
            let (a, b1, b2, b3, c) = c.dims();
            r.table("dims", json!({"A": a, "B1": b1, "B2": b2, "B3": b3, "C": c}));
            Ok(r)
        }),
        Command::Snake { snake: path, via_grids } => with_input(cli, &[path], |inputs, over| {
            let input = io::snake_from_json(&io::parse_text(&inputs.texts[0])?, over)?;
            let chase = snake(&input)?;
            let mut r = Report::new("snake", inputs.digest.clone());
            snake_report(&mut r, &chase);
            if *via_grids {
                let grids = snake_via_grids(&input)?;
                r.verdict("grid route: every position exact", grids.holds());
                r.verdict(
                    "routes agree on homology",
                    chase.six_term.homology_dims()? == grids.six_term.homology_dims()?,
                );
                r.verdict("routes agree on delta", chase.delta == grids.delta);
                r.detail("delta_via_grids", io::matrix_to_json(&grids.delta));
            }
            Ok(r)
        }),
        Command::Hom { aseq, eseq, additivity } => with_input(cli, &[aseq, eseq], |inputs, over| {
            let a = io::short_exact_from_json(&io::parse_text(&inputs.texts[0])?, over)?;
            let e = io::right_exact_from_json(&io::parse_text(&inputs.texts[1])?, over)?;
            let g = hom_grid(&a, &e)?;
            let mut r = Report::new("hom", inputs.digest.clone());
            let validation = g.validate();
            r.verdict("Hom grid commutes with exact rows and columns", validation.is_valid());
            // stored cell (i, j) is row Z, Y, X = 1..3 and column A, B, C = 1..3 read from (3, 3)
            let mut dims = serde_json::Map::new();
            for (row, w) in ["Z", "Y", "X"].iter().enumerate() {
                dims.insert(w.to_string(), json!((1..4).map(|c| g.dim(2 - row, 3 - c)).collect::<Vec<_>>()));
            }
            r.table("hom_dims", Value::Object(dims));
            let report = additivity_check(&a, &e)?;
            r.verdict("cokernel complexes have equal homology", report.ccl_agree && report.right == report.bottom);
            r.table("right", json!(report.right));
            r.table("bottom", json!(report.bottom));
            if *additivity {
                r.table("functor_dims", json!({"A": report.e_a, "B": report.e_b, "C": report.e_c}));
                r.table("defect", json!(report.defect));
                r.detail(
                    "summand",
                    json!({
                        "flag": report.summand.flag,
                        "method": match report.summand.method {
                            SummandMethod::Exhaustive => "exhaustive",
                            SummandMethod::Heuristic => "heuristic",
                        },
                    }),
                );
                r.note(format!(
                    "C is {}a direct summand of X (+) Y (+) Z",
                    if report.summand.flag { "" } else { "not " }
                ));
            }
            Ok(r)
        }),
        Command::Gen(args) => generate(cli, args),
        Command::Selftest { seeds } => Ok(Outcome::Report(selftest(*seeds))),
    }
}

fn with_input(
    cli: &Cli,
    paths: &[&std::path::PathBuf],
    body: impl FnOnce(&Inputs, Option<Field>) -> dchase_core::Result<Report>,
) -> Run<Outcome> {
    let paths: Vec<&Path> = paths.iter().map(|p| p.as_path()).collect();
    let inputs = read_inputs(&paths)?;
    let over = field_override(cli).map_err(|error| Failure { digest: inputs.digest.clone(), error })?;
    body(&inputs, over)
        .map(Outcome::Report)
        .map_err(|error| Failure { digest: inputs.digest.clone(), error })
}

fn cells(list: &[(usize, usize)]) -> Value {
    json!(list.iter().map(|(i, j)| format!("{},{}", i + 1, j + 1)).collect::<Vec<_>>())
}

/// Adds the validation verdict; a failed validation rejects the input.
fn validation(r: &mut Report, g: &Grid) -> bool {
    let v = g.validate();
    r.verdict("grid satisfies the hypotheses", v.is_valid());
    r.table("non_commuting", cells(&v.non_commuting));
    r.table("inexact_rows", cells(&v.inexact_rows));
    r.table("inexact_columns", cells(&v.inexact_columns));
    r.input_rejected = !v.is_valid();
    if !v.is_valid() {
        r.note(format!("{v}"));
    }
    v.is_valid()
}

fn iso_json(iso: &HomologyIso) -> Value {
    json!({
        "position": iso.position,
        "source_dim": iso.source.dim,
        "target_dim": iso.target.dim,
        "matrix": io::matrix_to_json(&iso.matrix),
    })
}

fn lemma(mut r: Report, g: &Grid, args: &LemmaArgs, expected: Orientation) -> dchase_core::Result<Report> {
    if g.orientation() != expected {
        return Err(Error::Orientation { expected: expected.name() });
    }
    if !validation(&mut r, g) {
        return Ok(r);
    }
    let (first, second, lists, admissible) = match expected {
        Orientation::Kernel => {
            let d = kcl_homology_dims(g)?;
            ("top", "left", (d.top, d.left), d.admissible)
        }
        Orientation::Cokernel => {
            let d = ccl_homology_dims(g)?;
            ("right", "bottom", (d.right, d.bottom), d.admissible)
        }
    };
    let positions: Vec<usize> = match args.position {
        Some(n) if admissible.contains(&n) => vec![n],
        Some(n) => {
            let lemma = match expected {
                Orientation::Kernel => kcl_homology_iso(g, n),
                Orientation::Cokernel => ccl_homology_iso(g, n),
            };
            return Err(lemma.err().unwrap_or(Error::RegionMissing { position: n, missing: vec![] }));
        }
        None => admissible.clone(),
    };
    r.table(first, json!(lists.0));
    r.table(second, json!(lists.1));
    r.table("admissible", json!(admissible));
    let mut isos = Vec::new();
    for &n in &positions {
        r.verdict(format!("equal homology at position {n}"), lists.0[n - 1] == lists.1[n - 1]);
        let iso = match expected {
            Orientation::Kernel => kcl_homology_iso(g, n)?,
            Orientation::Cokernel => ccl_homology_iso(g, n)?,
        };
        r.verdict(format!("isomorphism at position {n}"), iso.is_invertible());
        if args.iso {
            r.note(format!("position {n}:\n{}", iso.matrix));
            isos.push(iso_json(&iso));
        }
    }
    if args.iso {
        r.detail("isomorphisms", json!(isos));
    }
    Ok(r)
}

fn snake_report(r: &mut Report, s: &SnakeResult) {
    let names = ["Ker f~ = Ker f", "exact at Ker beta", "exact at Ker gamma", "exact at Cok alpha", "exact at Cok beta", "Cok g'' = Cok g'"];
    for (name, ok) in names.iter().zip(s.verdicts()) {
        r.verdict(*name, ok);
    }
    r.verdict("f monic iff Ker alpha -> Ker beta monic", s.f_monic_iff.0 == s.f_monic_iff.1);
    r.verdict("g' epi iff Cok beta -> Cok gamma epi", s.gp_epi_iff.0 == s.gp_epi_iff.1);
    r.table("six_term_dims", json!(s.six_term.dims()));
    r.table("homology", json!(s.six_term.homology_dims().unwrap_or_default()));
    r.detail("delta", io::matrix_to_json(&s.delta));
    r.detail("f_monic_iff", json!([s.f_monic_iff.0, s.f_monic_iff.1]));
    r.detail("gp_epi_iff", json!([s.gp_epi_iff.0, s.gp_epi_iff.1]));
    r.note(format!("delta:\n{}", s.delta));
}

fn generate(cli: &Cli, args: &GenArgs) -> Run<Outcome> {
    let fail = |error: Error| Failure { digest: String::new(), error };
    let field = field_override(cli).map_err(fail)?.unwrap_or(Field::Prime(2));
    if args.max_dim == 0 {
        return Err(fail(Error::Dimension("--max-dim must be at least 1".into())));
    }
    let shape = StaircaseShape::new(args.shape.clone()).map_err(fail)?;
    let orientation = match args.orientation {
        OrientationArg::Kernel => Orientation::Kernel,
        OrientationArg::Cokernel => Orientation::Cokernel,
    };
    let cfg = GenConfig::new(args.seed, field, args.max_dim).with_shape(shape).with_orientation(orientation);
    let doc = match args.kind {
        GenKind::Complex => random_exact_complex(&cfg, args.length).map(|c| io::complex_to_json(&c)),
        GenKind::Grid => random_exact_grid(&cfg).map(|g| io::grid_to_json(&g)),
        GenKind::Cross => random_cross(&cfg).map(|c| io::cross_to_json(&c)),
        GenKind::Snake => random_snake_input(&cfg).map(|s| io::snake_to_json(&s)),
        GenKind::Hom => random_hom_instance(&cfg).map(|(a, e)| {
            json!({"aseq": io::short_exact_to_json(&a), "eseq": io::right_exact_to_json(&e)})
        }),
    }
    .map_err(fail)?;
    let text = serde_json::to_string_pretty(&doc).expect("valid JSON") + "\n";
    match &args.output {
        Some(path) => {
            fs::write(path, text).map_err(|e| fail(Error::Parse(format!("{}: {e}", path.display()))))?;
            if !cli.global.quiet {
                eprintln!("wrote {} (seed {}, {PRNG_ID})", path.display(), args.seed);
            }
        }
        None => crate::emit(text.trim_end()),
    }
    Ok(Outcome::Done(EXIT_OK))
}

fn selftest(seeds: u64) -> Report {
    let reports: Vec<SuiteReport> = Suite::ALL
        .iter()
        .map(|&suite| {
            let outcomes = (0..suite.count(seeds))
                .into_par_iter()
                .map(|s| suite.check_seed(s, seeds))
                .collect();
            SuiteReport::collect(suite, seeds, outcomes)
        })
        .collect();
    let mut r = Report::new("selftest", digest(&[format!("selftest --seeds {seeds}").as_bytes()]));
    for s in &reports {
        r.verdict(
            format!("{}: {} instances, {} failed", s.suite.name(), s.instances, s.failures.len()),
            s.failures.is_empty(),
        );
        for (check, ok) in &s.checks {
            r.verdict(format!("{}: {check}", s.suite.name()), *ok);
        }
        for (seed, msg) in s.failures.iter().take(5) {
            r.note(format!("{} seed {seed}: {msg}", s.suite.name()));
        }
    }
    r.detail("selftest", selftest_json(seeds, &reports));
    r
}

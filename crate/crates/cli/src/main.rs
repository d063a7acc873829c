mod args;

use std::fs;
use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use serde_json::json;

use args::{CatalogCmd, Case, Cli, ClassifyArgs, Command, OracleCmd, OrbitArgs, Output, SelectorArgs, Variant, VerifyCmd};
use mirabolic::catalog::{
    self, CatalogError, ComplexOrbitSpec, OpenRep, OrbitSpec, RealOrbitSpec, Report, Selector,
};
use mirabolic::fforacle::{self, OracleError, Torus};
use mirabolic::liecore::{moment_map, FunctionalDoc, FunctionalKind, GFun, PFun};
use mirabolic::matrixkit::MatrixDoc;
use mirabolic::orbitclass::classify;
use mirabolic::{Field, Scalar};

/// Why a command did not succeed.
enum Failure {
    /// Bad input: exit 2.
    Usage(String),
    /// A checked claim failed: exit 1, with the rendered report.
    Assertion(String),
}

impl From<CatalogError> for Failure {
    fn from(e: CatalogError) -> Self {
        match e {
            CatalogError::AssertionFailure(r) => Failure::Assertion(r.to_text()),
            CatalogError::Oracle(OracleError::Mismatch(r)) => Failure::Assertion(r.to_text()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl From<OracleError> for Failure {
    fn from(e: OracleError) -> Self {
        match e {
            OracleError::Mismatch(r) => Failure::Assertion(r.to_text()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl From<mirabolic::Error> for Failure {
    fn from(e: mirabolic::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<String, Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn parse_scalars(text: &str, field: Field) -> Result<Vec<Scalar>, Failure> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|s| Scalar::parse(s, field).map_err(Failure::from))
        .collect()
}

fn parse_indices(text: &str) -> Result<Vec<usize>, Failure> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|s| {
            s.trim()
                .parse()
                .map_err(|_| usage(format!("bad index `{s}`")))
        })
        .collect()
}

fn build_spec(o: &OrbitArgs) -> Result<OrbitSpec, Failure> {
    let spec: OrbitSpec = match o.case {
        Case::Complex => {
            if o.pairs.is_some() || o.reals.is_some() {
                return Err(usage("--pairs/--reals belong to --case real"));
            }
            let field = o.field.unwrap_or(Field::Gauss);
            let a = match (&o.eigen, o.n) {
                (Some(text), _) => parse_scalars(text, field)?,
                (None, Some(n)) => (0..n as i64).map(|v| Scalar::from_int(field, v)).collect(),
                (None, None) => return Err(usage("need --eigen or --n")),
            };
            ComplexOrbitSpec::new(a)?.into()
        }
        Case::Real => {
            if o.eigen.is_some() {
                return Err(usage("--eigen belongs to --case complex"));
            }
            let field = o.field.unwrap_or(Field::Rat);
            let (mut a, mut b) = (Vec::new(), Vec::new());
            if let Some(text) = o.pairs.as_deref().filter(|t| !t.trim().is_empty()) {
                for pair in text.split(',') {
                    let (re, im) = pair
                        .split_once(':')
                        .ok_or_else(|| usage(format!("pair `{pair}` is not of the form a:b")))?;
                    a.push(Scalar::parse(re, field)?);
                    b.push(Scalar::parse(im, field)?);
                }
            }
            let c = parse_scalars(o.reals.as_deref().unwrap_or(""), field)?;
            RealOrbitSpec::new(a, b, c)?.into()
        }
    };
    if let Some(n) = o.n {
        if n != spec.n() {
            return Err(usage(format!("--n {n} does not match the {} eigenvalues given", spec.n())));
        }
    }
    Ok(spec)
}

fn build_selector(spec: &OrbitSpec, s: &SelectorArgs) -> Result<Selector, Failure> {
    let sel = match spec {
        OrbitSpec::Complex(c) => {
            if s.pair_selector.is_some() {
                return Err(usage("--pair-selector belongs to --case real"));
            }
            let text = s.selector.as_deref().ok_or_else(|| usage("need --selector"))?.trim();
            let mask = if let Some(bits) = text.strip_prefix("0b") {
                Some(u64::from_str_radix(bits, 2).map_err(|_| usage(format!("bad bitmask `{text}`")))?)
            } else if let Some(dec) = text.strip_prefix("mask:") {
                Some(dec.parse().map_err(|_| usage(format!("bad bitmask `{text}`")))?)
            } else {
                None
            };
            match mask {
                Some(m) if m >> c.n() != 0 => {
                    return Err(usage(format!("bitmask {m} has bits beyond n = {}", c.n())))
                }
                Some(m) => Selector::from_mask(m, c.n()),
                None => Selector::complex(parse_indices(text)?),
            }
        }
        OrbitSpec::Real(_) => Selector::real(
            parse_indices(s.pair_selector.as_deref().unwrap_or(""))?,
            parse_indices(s.selector.as_deref().unwrap_or(""))?,
        ),
    };
    sel.validate(spec)?;
    Ok(sel)
}

fn render(report: Report, out: &Output) -> Outcome {
    let text = if out.json {
        report.to_json() + "\n"
    } else {
        report.to_text()
    };
    if report.is_ok() {
        Ok(text)
    } else {
        Err(Failure::Assertion(text))
    }
}

fn pretty(value: &impl serde::Serialize) -> String {
    serde_json::to_string_pretty(value).expect("serializable") + "\n"
}

fn run_classify(a: &ClassifyArgs) -> Outcome {
    let text = fs::read_to_string(&a.input)
        .map_err(|e| usage(format!("cannot read {}: {e}", a.input.display())))?;
    let doc: FunctionalDoc = match serde_json::from_str::<FunctionalDoc>(&text) {
        Ok(doc) => doc,
        Err(_) => FunctionalDoc {
            kind: FunctionalKind::Pfun,
            matrix: serde_json::from_str::<MatrixDoc>(&text)
                .map_err(|e| usage(format!("not a matrix or functional document: {e}")))?,
        },
    };
    let m = doc.matrix.to_mat()?;
    if let Some(field) = a.field {
        if field != m.field() {
            return Err(usage(format!("--field {field} but the file is over {}", m.field())));
        }
    }
    let f = match doc.kind {
        FunctionalKind::Pfun => PFun::new(m)?,
        FunctionalKind::Gfun => moment_map(&GFun::new(m)?),
    };
    Ok(pretty(&classify(&f)))
}

fn run_catalog(cmd: &CatalogCmd) -> Outcome {
    match cmd {
        CatalogCmd::Open {
            n,
            field,
            variant,
            diag,
            row,
        } => {
            let rep = match variant {
                Variant::Shift => {
                    if diag.is_some() || row.is_some() {
                        return Err(usage("--diag/--row belong to --variant spectral"));
                    }
                    OpenRep::Shift
                }
                Variant::Spectral => match (diag, row) {
                    (None, None) => catalog::default_spectral(*field, *n),
                    (Some(d), Some(r)) => OpenRep::Spectral {
                        a: parse_scalars(d, *field)?,
                        b: parse_scalars(r, *field)?,
                    },
                    _ => return Err(usage("give both --diag and --row, or neither")),
                },
            };
            Ok(pretty(&catalog::make_open_rep(*field, *n, &rep)?.to_doc()))
        }
        CatalogCmd::Regular { orbit } => {
            let spec = build_spec(orbit)?;
            Ok(pretty(&catalog::make_regular_ss(&spec).to_doc()))
        }
        CatalogCmd::Selector { orbit, sel } => {
            let spec = build_spec(orbit)?;
            let sel = build_selector(&spec, sel)?;
            let g = catalog::make_g_selector(&spec, &sel)?;
            Ok(pretty(&MatrixDoc::from_mat(g.matrix())))
        }
        CatalogCmd::Image { orbit, sel } => {
            let spec = build_spec(orbit)?;
            let sel = build_selector(&spec, sel)?;
            let img = catalog::moment_image(&spec, &sel)?;
            Ok(pretty(&json!({
                "functional": img.to_doc(),
                "invariant": classify(&img),
            })))
        }
    }
}

fn run_verify(cmd: &VerifyCmd) -> Outcome {
    match cmd {
        VerifyCmd::Census { orbit, out } => {
            render(catalog::verify_orbit_census(&build_spec(orbit)?).or_else(unwrap_failure)?, out)
        }
        VerifyCmd::Stabilizer { orbit, sel, out } => {
            let spec = build_spec(orbit)?;
            let sel = build_selector(&spec, sel)?;
            render(catalog::verify_stabilizer_dims(&spec, &sel).or_else(unwrap_failure)?, out)
        }
        VerifyCmd::Open { n, field, out } => {
            render(catalog::verify_open_orbit(*field, *n).or_else(unwrap_failure)?, out)
        }
        VerifyCmd::Lemmas {
            n,
            field,
            moves,
            seed,
            out,
        } => {
            if *n == 0 {
                return Err(usage("--n must be positive"));
            }
            render(
                catalog::verify_lemma_suite(*field, *n, *moves, *seed).or_else(unwrap_failure)?,
                out,
            )
        }
        VerifyCmd::Consistency { orbit, out } => match build_spec(orbit)? {
            OrbitSpec::Real(spec) => render(
                catalog::verify_real_complex_consistency(&spec).or_else(unwrap_failure)?,
                out,
            ),
            OrbitSpec::Complex(_) => Err(usage("consistency needs --case real")),
        },
        VerifyCmd::Fiber { orbit, p, out } => {
            let spec = build_spec(orbit)?;
            let size = catalog::fiber_over_open_point(&spec, *p)?;
            let mut report = Report::new("the reduced space of the open P-orbit is a single point");
            report.record(size == 1, json!({"p": p, "fiber_size": size}));
            report.set_summary(format!("fiber size {size}"));
            render(report, out)
        }
        VerifyCmd::Mackey { n, out } => render(catalog::mackey_strata_match(*n)?, out),
    }
}

/// Failing reports are still rendered, in the requested format.
fn unwrap_failure(e: CatalogError) -> Result<Report, Failure> {
    match e {
        CatalogError::AssertionFailure(r) => Ok(*r),
        other => Err(other.into()),
    }
}

fn run_oracle(cmd: &OracleCmd) -> Outcome {
    match cmd {
        OracleCmd::Compare { n, p, dump, out } => {
            if *n == 0 {
                return Err(usage("--n must be positive"));
            }
            let part = fforacle::enumerate_p_orbits(*n, *p)?;
            if let Some(path) = dump {
                fs::write(path, part.dump())
                    .map_err(|e| usage(format!("cannot write {}: {e}", path.display())))?;
            }
            let report = match fforacle::compare_with_classifier(&part) {
                Ok(r) => r,
                Err(OracleError::Mismatch(r)) => *r,
                Err(e) => return Err(e.into()),
            };
            render(report, out)
        }
        OracleCmd::Torus { n, p, k, out } => {
            let torus = if *k == 0 { Torus::Split } else { Torus::Pairs(*k) };
            let count = fforacle::count_torus_orbits(*n, *p, torus)?;
            let expected = (1u64 << (n - k)) - 1;
            let mut report = Report::new("the maximal torus has exactly 2^(n-k)-1 orbits on F^n - {0}");
            report.record(
                count == expected,
                json!({"n": n, "p": p, "k": k, "orbits": count, "expected": expected}),
            );
            report.set_summary(format!("{count} torus orbits"));
            render(report, out)
        }
        OracleCmd::Cosets { orbit, p, out } => {
            let spec = match build_spec(orbit)? {
                OrbitSpec::Complex(s) => s,
                OrbitSpec::Real(_) => return Err(usage("cosets needs --case complex")),
            };
            let count = fforacle::double_coset_count(&spec, *p)?;
            let torus = fforacle::count_torus_orbits(spec.n(), *p, Torus::Split)?;
            let mut report = Report::new("P-orbits on G.f correspond to T-orbits on F^n - {0}");
            report.record(
                count == torus,
                json!({"n": spec.n(), "p": p, "double_cosets": count, "torus_orbits": torus}),
            );
            report.set_summary(format!("{count} double cosets"));
            render(report, out)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let outcome = match &cli.command {
        Command::Classify(a) => run_classify(a),
        Command::Catalog(c) => run_catalog(c),
        Command::Verify(c) => run_verify(c),
        Command::Oracle(c) => run_oracle(c),
    };
    finish(outcome)
}

/// Prints the outcome and maps it to the process exit code.
fn finish(outcome: Outcome) -> ExitCode {
    ExitCode::from(report_outcome(outcome, &mut std::io::stdout(), &mut std::io::stderr()))
}

fn report_outcome(outcome: Outcome, out: &mut impl Write, err: &mut impl Write) -> u8 {
    match outcome {
        Ok(text) => {
            let _ = write!(out, "{text}");
            0
        }
        Err(Failure::Assertion(text)) => {
            let _ = write!(out, "{text}");
            1
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

//! Batch front-end: load spec files, run verifier stacks, build wreath
//! products, construct gallery examples, emit reports and re-loadable spec
//! files.
//!
//! Exit codes: 0 all checks pass, 1 axiom failure, 2 input error.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::gallery;
use crate::report::AxiomReport;
use crate::scalar::{Field, Rat};
use crate::specfile::{algebra_to_spec, law_to_spec, FieldSpec, SpecFile};
use crate::wreath::{build_wreath, build_wreath_antipode, wreath_consistency_suite, WreathError};

#[derive(Parser)]
#[command(
    name = "weakhopf",
    version,
    about = "Exact checks and constructions for weak bialgebras, weak Hopf algebras and their wreath products"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Run the full checker stack for a named algebra or law
    Verify {
        file: PathBuf,
        target: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Build the wreath product of a named law and emit it as a spec file
    Wreath {
        file: PathBuf,
        law: String,
        /// Also synthesize the product antipode (both sides must carry one)
        #[arg(long)]
        antipode: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Write the product spec file here
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Construct a named example and emit it as a spec file
    Gallery {
        name: String,
        params: Vec<String>,
        /// Field: Q, F<p>, Phi<N> (cyclotomic preset) or QExt:c0,c1,...
        #[arg(long, default_value = "Q")]
        field: String,
        #[arg(long)]
        emit: Option<PathBuf>,
    },
}

#[derive(Debug)]
pub enum CliError {
    Input(String),
    Axiom(String),
}

impl CliError {
    pub fn code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Axiom(_) => 1,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Input(m) | CliError::Axiom(m) => m,
        }
    }
}

pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let outcome = match cli.command {
        Command::Verify {
            file,
            target,
            format,
        } => cmd_verify(&file, &target, format),
        Command::Wreath {
            file,
            law,
            antipode,
            format,
            emit,
        } => cmd_wreath(&file, &law, antipode, format, emit.as_deref()),
        Command::Gallery {
            name,
            params,
            field,
            emit,
        } => cmd_gallery(&name, &params, &field, emit.as_deref()),
    };
    match outcome {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e.message());
            e.code()
        }
    }
}

fn load(path: &Path) -> Result<SpecFile, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    SpecFile::parse_str(&text).map_err(|e| CliError::Input(e.to_string()))
}

fn print_report(rep: &AxiomReport, format: Format) {
    match format {
        Format::Text => print!("{}", rep.render_text()),
        Format::Json => println!("{}", rep.to_json()),
    }
}

fn report_code(rep: &AxiomReport) -> i32 {
    if rep.all_pass() {
        0
    } else {
        1
    }
}

/// The checker stack for a named target; algebras get the bialgebra axioms,
/// projection identities and (when present) the antipode identities, laws
/// get the three law checkers plus the derived-identity suite.
pub fn cmd_verify(path: &Path, target: &str, format: Format) -> Result<i32, CliError> {
    let file = load(path)?;
    let rep = verify_target(&file, target)?;
    print_report(&rep, format);
    Ok(report_code(&rep))
}

/// The checker stack for one named target of an already-parsed file.
pub fn verify_target(file: &SpecFile, target: &str) -> Result<AxiomReport, CliError> {
    if file.algebras.contains_key(target) {
        let resolved = file
            .resolve_algebra(target)
            .map_err(|e| CliError::Input(e.to_string()))?;
        let mut rep = resolved.wba.verify();
        rep.absorb("projections", resolved.wba.projection_report());
        if let Some(s) = &resolved.antipode {
            rep.absorb("antipode", resolved.wba.verify_antipode(s));
        }
        return Ok(rep);
    }
    if file.laws.contains_key(target) {
        let law = file
            .resolve_law(target)
            .map_err(|e| CliError::Input(e.to_string()))?;
        for (side, name) in [(&law.a, "a"), (&law.b, "b")] {
            let srep = side.verify();
            if !srep.all_pass() {
                let mut rep = AxiomReport::new(target.to_string());
                rep.absorb(&format!("algebra_{name}"), srep);
                return Ok(rep);
            }
        }
        let mut rep = law.verify_all();
        if law.phi.is_some() && rep.all_pass() {
            rep.absorb("derived", law.derived_suite());
        }
        return Ok(rep);
    }
    Err(CliError::Input(format!(
        "unknown target {target:?}; file defines {:?}",
        file.target_names()
    )))
}

#[derive(Serialize)]
struct WreathOutput {
    #[serde(flatten)]
    report: AxiomReport,
    basis: Vec<String>,
    product: SpecFile,
}

/// Build the wreath product of a named law: the combined report, the
/// ambient expansions of the product basis, and a re-loadable spec file.
pub fn wreath_output(
    file: &SpecFile,
    law_name: &str,
    antipode: bool,
) -> Result<(AxiomReport, Vec<String>, SpecFile), CliError> {
    let law = file
        .resolve_law(law_name)
        .map_err(|e| CliError::Input(e.to_string()))?;
    let pre = law.verify_all();
    if !pre.all_pass() {
        return Ok((
            pre,
            vec![],
            SpecFile {
                field: file.field.clone(),
                algebras: BTreeMap::new(),
                laws: BTreeMap::new(),
            },
        ));
    }
    let mut w = build_wreath(&law).map_err(|e| match e {
        WreathError::MissingInverse => CliError::Input(e.to_string()),
        other => CliError::Axiom(other.to_string()),
    })?;
    let mut rep = w.product_report.clone();
    rep.target = format!("{law_name} -> {}", w.product.name);
    rep.absorb("consistency", wreath_consistency_suite(&w));
    if antipode {
        match build_wreath_antipode(&mut w) {
            Ok(hopf) => rep.absorb("antipode", w.product.verify_antipode(&hopf.antipode)),
            Err(WreathError::MissingAntipodes) => {
                return Err(CliError::Input(
                    "both algebras must carry antipodes for --antipode".into(),
                ))
            }
            Err(other) => return Err(CliError::Axiom(other.to_string())),
        }
    }
    rep.derived.dims.insert("product".into(), w.product.dim());
    rep.derived
        .ranks
        .insert("psi_phi".into(), w.split.image.dim());

    let mut algebras = BTreeMap::new();
    algebras.insert(
        "product".to_string(),
        algebra_to_spec(&w.product, w.antipode.as_ref()),
    );
    let product_file = SpecFile {
        field: file.field.clone(),
        algebras,
        laws: BTreeMap::new(),
    };
    Ok((rep, w.basis_descriptions(), product_file))
}

/// Build a wreath product and report on it; the product is emitted as a
/// re-loadable spec file fragment.
pub fn cmd_wreath(
    path: &Path,
    law_name: &str,
    antipode: bool,
    format: Format,
    emit: Option<&Path>,
) -> Result<i32, CliError> {
    let file = load(path)?;
    let (rep, basis, product_file) = wreath_output(&file, law_name, antipode)?;
    if basis.is_empty() && !rep.all_pass() {
        print_report(&rep, format);
        return Ok(1);
    }
    if let Some(dest) = emit {
        std::fs::write(dest, product_file.to_json())
            .map_err(|e| CliError::Input(format!("{}: {e}", dest.display())))?;
    }
    match format {
        Format::Text => {
            print!("{}", rep.render_text());
            for (k, b) in basis.iter().enumerate() {
                println!("  basis w{k} = {b}");
            }
            if emit.is_none() {
                print!("{}", product_file.to_json());
            }
        }
        Format::Json => {
            let out = WreathOutput {
                report: rep.clone(),
                basis,
                product: product_file,
            };
            println!("{}", serde_json::to_string_pretty(&out).expect("output"));
        }
    }
    Ok(report_code(&rep))
}

/// Parse a field descriptor string: `Q`, `F<p>`, `Phi<N>` or `QExt:c0,c1,...`.
pub fn parse_field_spec(spec: &str) -> Result<Field, CliError> {
    let bad = |m: String| CliError::Input(m);
    if spec == "Q" {
        return Ok(Field::rationals());
    }
    if let Some(p) = spec.strip_prefix('F') {
        let p: u64 = p
            .parse()
            .map_err(|_| bad(format!("bad prime in {spec:?}")))?;
        return Field::prime(p).map_err(|e| bad(e.to_string()));
    }
    if let Some(n) = spec.strip_prefix("Phi") {
        let n: u64 = n
            .parse()
            .map_err(|_| bad(format!("bad cyclotomic index in {spec:?}")))?;
        return Field::cyclotomic(n).map_err(|e| bad(e.to_string()));
    }
    if let Some(list) = spec.strip_prefix("QExt:") {
        let rationals = Field::rationals();
        let coeffs: Result<Vec<Rat>, CliError> = list
            .split(',')
            .map(|c| {
                rationals
                    .parse(c)
                    .map(|s| s.as_rational().expect("rational").clone())
                    .map_err(|e| bad(e.to_string()))
            })
            .collect();
        return Field::extension(coeffs?).map_err(|e| bad(e.to_string()));
    }
    Err(bad(format!(
        "unknown field {spec:?}; use Q, F<p>, Phi<N> or QExt:c0,c1,..."
    )))
}

fn want_params(name: &str, params: &[String], n: usize) -> Result<Vec<usize>, CliError> {
    if params.len() != n {
        return Err(CliError::Input(format!(
            "gallery {name:?} takes {n} parameter(s), got {}",
            params.len()
        )));
    }
    params
        .iter()
        .map(|p| {
            p.parse::<usize>()
                .map_err(|_| CliError::Input(format!("bad integer parameter {p:?}")))
        })
        .collect()
}

/// Build a named gallery example as a spec file.
pub fn gallery_spec(name: &str, params: &[String], field: &Field) -> Result<SpecFile, CliError> {
    let gerr = |e: gallery::GalleryError| CliError::Input(e.to_string());
    let mut algebras = BTreeMap::new();
    let mut laws = BTreeMap::new();
    match name {
        "matrix" => {
            let p = want_params(name, params, 1)?;
            let m = gallery::matrix_wha(p[0].max(1), field).map_err(gerr)?;
            algebras.insert(format!("m{}", p[0]), algebra_to_spec(&m.wba, Some(&m.antipode)));
        }
        "cyclic" => {
            let p = want_params(name, params, 1)?;
            let g = gallery::cyclic_group_algebra(p[0].max(1), field).map_err(gerr)?;
            algebras.insert(format!("kz{}", p[0]), algebra_to_spec(&g.wba, Some(&g.antipode)));
        }
        "symmetric" => {
            let p = want_params(name, params, 1)?;
            if !(1..=4).contains(&p[0]) {
                return Err(CliError::Input("symmetric group order must be 1..=4".into()));
            }
            let g = gallery::group_algebra(&gallery::FiniteGroup::symmetric(p[0]), field)
                .map_err(gerr)?;
            algebras.insert(format!("ksym{}", p[0]), algebra_to_spec(&g.wba, Some(&g.antipode)));
        }
        "blown-up-nothing" => {
            let p = want_params(name, params, 1)?;
            let law = gallery::blown_up_nothing_law(p[0].max(1), field).map_err(gerr)?;
            algebras.insert("lower".into(), algebra_to_spec(&law.a, None));
            algebras.insert("upper".into(), algebra_to_spec(&law.b, None));
            laws.insert("blowup".into(), law_to_spec(&law, "lower", "upper"));
        }
        "quantum-torus" => {
            let p = want_params(name, params, 2)?;
            let law =
                gallery::quantum_torus(p[0] as u64, p[1] as u64, field).map_err(gerr)?;
            algebras.insert("v".into(), algebra_to_spec(&law.a, law.antipode_a.as_ref()));
            algebras.insert("u".into(), algebra_to_spec(&law.b, law.antipode_b.as_ref()));
            laws.insert("torus".into(), law_to_spec(&law, "v", "u"));
        }
        "intro-monoid" => {
            want_params(name, params, 0)?;
            let (ks, e) = gallery::intro_monoid(field);
            let law = gallery::intro_idempotent_law(&ks, &e, None).map_err(gerr)?;
            algebras.insert("ks".into(), algebra_to_spec(&law.a, None));
            algebras.insert("unit".into(), algebra_to_spec(&law.b, law.antipode_b.as_ref()));
            laws.insert("intro".into(), law_to_spec(&law, "ks", "unit"));
        }
        "drinfeld-double" => {
            if params.len() != 2 {
                return Err(CliError::Input(
                    "drinfeld-double takes an inner constructor and a size, e.g. `drinfeld-double matrix 2`".into(),
                ));
            }
            let size: usize = params[1]
                .parse()
                .map_err(|_| CliError::Input(format!("bad integer parameter {:?}", params[1])))?;
            let h = match params[0].as_str() {
                "matrix" => gallery::matrix_wha(size.max(1), field).map_err(gerr)?,
                "cyclic" => gallery::cyclic_group_algebra(size.max(1), field).map_err(gerr)?,
                "symmetric" => {
                    gallery::group_algebra(&gallery::FiniteGroup::symmetric(size), field)
                        .map_err(gerr)?
                }
                other => {
                    return Err(CliError::Input(format!(
                        "unknown inner constructor {other:?} for drinfeld-double"
                    )))
                }
            };
            let law = gallery::drinfeld_double_law(&h).map_err(gerr)?;
            algebras.insert("h".into(), algebra_to_spec(&law.a, law.antipode_a.as_ref()));
            algebras.insert("h_dual".into(), algebra_to_spec(&law.b, law.antipode_b.as_ref()));
            laws.insert("double".into(), law_to_spec(&law, "h", "h_dual"));
        }
        "twist" => {
            let p = want_params(name, params, 2)?;
            let a = gallery::cyclic_group_algebra(p[0].max(1), field).map_err(gerr)?;
            let b = gallery::cyclic_group_algebra(p[1].max(1), field).map_err(gerr)?;
            let law = gallery::twist_law(&a, &b).map_err(gerr)?;
            algebras.insert("left".into(), algebra_to_spec(&law.a, law.antipode_a.as_ref()));
            algebras.insert("right".into(), algebra_to_spec(&law.b, law.antipode_b.as_ref()));
            laws.insert("twist".into(), law_to_spec(&law, "left", "right"));
        }
        "strictification-z2" => {
            want_params(name, params, 0)?;
            let a = gallery::cyclic_group_algebra(2, field).map_err(gerr)?;
            let s = gallery::trivial_strictification(gallery::FiniteGroup::cyclic(2), a);
            let (law, _iso) = gallery::strictification_law(&s).map_err(gerr)?;
            algebras.insert("mg".into(), algebra_to_spec(&law.a, law.antipode_a.as_ref()));
            algebras.insert("a".into(), algebra_to_spec(&law.b, law.antipode_b.as_ref()));
            laws.insert("strict".into(), law_to_spec(&law, "mg", "a"));
        }
        "matched-pair-direct" => {
            let p = want_params(name, params, 1)?;
            let pair = gallery::MatchedPair::direct_product(&gallery::FiniteGroup::cyclic(
                p[0].max(1),
            ))
            .map_err(gerr)?;
            let law = gallery::matched_pair_law(&pair, field).map_err(gerr)?;
            algebras.insert("kh".into(), algebra_to_spec(&law.a, law.antipode_a.as_ref()));
            algebras.insert("kv".into(), algebra_to_spec(&law.b, law.antipode_b.as_ref()));
            laws.insert("matched".into(), law_to_spec(&law, "kh", "kv"));
        }
        "matched-pair-trivial" => {
            let p = want_params(name, params, 1)?;
            let pair = gallery::MatchedPair::trivial_vertical(
                &gallery::FiniteCategory::indiscrete(p[0].max(1)),
            )
            .map_err(gerr)?;
            let law = gallery::matched_pair_law(&pair, field).map_err(gerr)?;
            algebras.insert("kh".into(), algebra_to_spec(&law.a, law.antipode_a.as_ref()));
            algebras.insert("kv".into(), algebra_to_spec(&law.b, law.antipode_b.as_ref()));
            laws.insert("matched".into(), law_to_spec(&law, "kh", "kv"));
        }
        other => {
            return Err(CliError::Input(format!(
                "unknown gallery {other:?}; known: matrix, cyclic, symmetric, blown-up-nothing, quantum-torus, intro-monoid, drinfeld-double, twist, strictification-z2, matched-pair-direct, matched-pair-trivial"
            )))
        }
    }
    Ok(SpecFile {
        field: FieldSpec::from_field(field),
        algebras,
        laws,
    })
}

/// Construct and emit a gallery example.
pub fn cmd_gallery(
    name: &str,
    params: &[String],
    field_spec: &str,
    emit: Option<&Path>,
) -> Result<i32, CliError> {
    let field = parse_field_spec(field_spec)?;
    let file = gallery_spec(name, params, &field)?;
    let text = file.to_json();
    if let Some(dest) = emit {
        std::fs::write(dest, &text)
            .map_err(|e| CliError::Input(format!("{}: {e}", dest.display())))?;
    } else {
        print!("{text}");
    }
    Ok(0)
}

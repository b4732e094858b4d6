use std::fs;
use std::path::PathBuf;

use serde_json::{json, Value};
use twisted_sn::polyring::twist_factor;
use twisted_sn::representation::{
    alpha_inverse_chain_matrix, matrix_to_csv, matrix_to_json, regular_specialization, specialize_matrix,
    verify_alpha_inverse_numeric,
};
use twisted_sn::{
    left_mult_matrix, AlphaFactorization, Basis, BigInt, BigRational, Complex64, Error, Identity, Result, Scalar,
    Specialization, VerificationReport, VerifierConfig,
};

use crate::spec::{resolve_degree, ElementSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Export {
    Json,
    Csv,
}

/// What a command prints and how the process exits.
#[derive(Debug)]
pub struct CommandResult {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CommandResult {
    fn ok(stdout: String) -> Self {
        CommandResult { code: 0, stdout, stderr: String::new() }
    }
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("valid json")
}

pub fn show(spec: &str, n: Option<usize>, format: Format) -> Result<CommandResult> {
    let spec = ElementSpec::parse(spec)?;
    let n = resolve_degree(n, &[&spec])?;
    let e = spec.build(n)?;
    Ok(CommandResult::ok(match format {
        Format::Text => e.to_string(),
        Format::Json => pretty(&serde_json::to_value(&e).expect("serializable")),
    }))
}

pub fn mult(left: &str, right: &str, n: Option<usize>, format: Format) -> Result<CommandResult> {
    let (a, b) = (ElementSpec::parse(left)?, ElementSpec::parse(right)?);
    let n = resolve_degree(n, &[&a, &b])?;
    let product = a.build(n)?.try_mul(&b.build(n)?)?;
    let factor = match (a.is_star(), b.is_star()) {
        (Some(g1), Some(g2)) => Some(twist_factor(g1, g2)?),
        _ => None,
    };
    Ok(CommandResult::ok(match format {
        Format::Text => {
            let mut out = product.to_string();
            if let Some(f) = &factor {
                out.push_str(&format!("\nfactor = {f}"));
            }
            out
        }
        Format::Json => {
            let mut v = json!({ "product": product });
            if let Some(f) = factor {
                v["factor"] = Value::String(f.to_string());
            }
            pretty(&v)
        }
    }))
}

pub fn verify(names: &[String], n: Option<usize>, config: &VerifierConfig, format: Format) -> Result<CommandResult> {
    let n = n.ok_or_else(|| Error::Parse("--n is required for verify".into()))?;
    let selection: Option<Vec<Identity>> = if names.iter().any(|s| s == "all") {
        None
    } else {
        Some(names.iter().map(|s| s.parse()).collect::<Result<_>>()?)
    };
    let suite = twisted_sn::verify_all(n, selection.as_deref(), config)?;
    if suite.reports.is_empty() {
        return Err(Error::OutOfRange(format!("no identity can run at n = {n} within the configured limits")));
    }
    let failed = suite.reports.iter().filter(|r| !r.passed).count();
    let stdout = match format {
        Format::Text => {
            let mut lines: Vec<String> = suite.reports.iter().map(VerificationReport::to_string).collect();
            lines.push(format!("{} of {} identities passed at n = {n}", suite.reports.len() - failed, suite.reports.len()));
            lines.join("\n")
        }
        Format::Json => suite.reports.iter().map(|r| r.to_json().to_string()).collect::<Vec<_>>().join("\n"),
    };
    let stderr = suite.skipped.iter().map(|(id, why)| format!("skipped {id}: {why}")).collect::<Vec<_>>().join("\n");
    Ok(CommandResult { code: i32::from(failed > 0), stdout, stderr })
}

pub fn factorize(n: Option<usize>, format: Format) -> Result<CommandResult> {
    let n = n.ok_or_else(|| Error::Parse("--n is required for factorize".into()))?;
    if n == 0 {
        return Err(Error::OutOfRange("n must be at least 1".into()));
    }
    let f = AlphaFactorization::<BigInt>::new(n)?;
    Ok(CommandResult::ok(match format {
        Format::Text => f.to_string().trim_end().to_string(),
        Format::Json => {
            let columns: Vec<Value> = f
                .columns
                .iter()
                .map(|c| {
                    json!({
                        "beta": c.index,
                        "k": c.k,
                        "factors": c.factors.iter().map(|x| {
                            let mut v = serde_json::to_value(x).expect("serializable");
                            v["text"] = Value::String(x.to_string());
                            v
                        }).collect::<Vec<_>>(),
                    })
                })
                .collect();
            let chain = f.inverse_chain.as_ref().map(|c| serde_json::to_value(c.to_record()).expect("serializable"));
            pretty(&json!({ "n": n, "columns": columns, "inverse_chain": chain }))
        }
    }))
}

pub struct MatrixArgs {
    pub spec: String,
    pub n: Option<usize>,
    pub basis: Basis,
    pub specialization: Option<PathBuf>,
    pub seed: Option<u64>,
    pub float: bool,
    pub invert: bool,
    pub tolerance: f64,
    pub export: Export,
    pub output: Option<PathBuf>,
    pub format: Format,
}

pub fn matrix(args: &MatrixArgs) -> Result<CommandResult> {
    let spec = ElementSpec::parse(&args.spec)?;
    let n = resolve_degree(args.n, &[&spec])?;
    let symbolic = left_mult_matrix(&spec.build(n)?, args.basis)?;
    if args.invert && args.specialization.is_none() && args.seed.is_none() {
        return Err(Error::Parse("--invert needs a specialization (--spec FILE or --seed N)".into()));
    }
    let (matrix_text, report) = match (&args.specialization, args.seed, args.float) {
        (None, None, _) => (render(&symbolic, None, args.export), None),
        (file, seed, false) => {
            let s = match file {
                Some(path) => Specialization::<BigRational>::from_json(n, &read(path)?)?,
                None => regular_specialization(n, seed.unwrap_or(0), Specialization::random_rational)?,
            };
            numeric(&spec, &symbolic, &s, args)?
        }
        (file, seed, true) => {
            let s = match file {
                Some(path) => Specialization::<Complex64>::from_json_float(n, &read(path)?)?,
                None => regular_specialization(n, seed.unwrap_or(0), Specialization::random_complex)?,
            };
            numeric(&spec, &symbolic, &s, args)?
        }
    };
    let report_text = report.as_ref().map(|r| match args.format {
        Format::Text => r.to_string(),
        Format::Json => r.to_json().to_string(),
    });
    let code = i32::from(report.as_ref().is_some_and(|r| !r.passed));
    match &args.output {
        Some(path) => {
            fs::write(path, &matrix_text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
            let written = format!("wrote {} ({}×{})", path.display(), symbolic.order(), symbolic.order());
            let stdout = match report_text {
                Some(r) => format!("{written}\n{r}"),
                None => written,
            };
            Ok(CommandResult { code, stdout, stderr: String::new() })
        }
        None => Ok(CommandResult { code, stdout: matrix_text.trim_end().to_string(), stderr: report_text.unwrap_or_default() }),
    }
}

fn read(path: &PathBuf) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn render<T: std::fmt::Display>(
    m: &twisted_sn::AlgebraMatrix<T>,
    specialization: Option<&Value>,
    export: Export,
) -> String {
    match export {
        Export::Json => pretty(&matrix_to_json(m, specialization)),
        Export::Csv => matrix_to_csv(m, specialization),
    }
}

/// Specializes the matrix; with `--invert` writes the inverse and checks it.
fn numeric<S: Scalar>(
    spec: &ElementSpec,
    symbolic: &twisted_sn::AlgebraMatrix<twisted_sn::Poly>,
    s: &Specialization<S>,
    args: &MatrixArgs,
) -> Result<(String, Option<VerificationReport>)> {
    let header = s.to_json();
    let m = specialize_matrix(symbolic, s)?;
    if !args.invert {
        return Ok((render(&m, Some(&header), args.export), None));
    }
    let n = s.degree();
    if *spec == ElementSpec::Alpha && args.basis == Basis::Starred {
        let report = verify_alpha_inverse_numeric(n, s, args.tolerance)?;
        let inverse = alpha_inverse_chain_matrix(n, s)?;
        Ok((render(&inverse, Some(&header), args.export), Some(report)))
    } else {
        Ok((render(&m.inverse()?, Some(&header), args.export), None))
    }
}

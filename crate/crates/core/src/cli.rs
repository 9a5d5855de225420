//! Command drivers behind the `kalman` binary.
//!
//! Every command produces [`OutputRecord`]s. In JSON mode each record is one
//! line; big integers and floats are decimal strings. A record carries the
//! flags that produced it, so [`OutputRecord::replay_args`] reproduces it.

use std::collections::BTreeMap;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::asympt::{asymptotic_degree, compare_exact_asymptotic, critical_point_values, verify_critical_point};
use crate::degrees::{check_stabilization, extract_degree, kalman_degree, CodimVec, TensorFormat};
use crate::error::{Error, Result};
use crate::genfun::{build_h, build_h_via_determinant, expand_series};
use crate::isotropic::{isotropic_degree, isotropic_degree_symmetric, symmetric_tuple_codim};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub command: String,
    /// Flag name (without dashes) to the value as passed. Switches map to
    /// `"true"`.
    pub inputs: BTreeMap<String, String>,
    pub result: BTreeMap<String, String>,
    /// Which computation produced the result.
    pub provenance: String,
}

impl OutputRecord {
    fn new(command: &str, inputs: BTreeMap<String, String>, provenance: &str) -> Self {
        OutputRecord {
            command: command.into(),
            inputs,
            result: BTreeMap::new(),
            provenance: provenance.into(),
        }
    }

    fn put(&mut self, key: &str, value: impl ToString) {
        self.result.insert(key.into(), value.to_string());
    }

    /// Command line (without the program name) that regenerates this record
    /// in JSON form.
    pub fn replay_args(&self) -> Vec<String> {
        let mut args = vec![self.command.clone()];
        for (flag, value) in &self.inputs {
            args.push(format!("--{flag}"));
            if value != "true" {
                args.push(value.clone());
            }
        }
        args.extend(["--format".into(), "json".into()]);
        args
    }

    fn to_text(&self) -> String {
        self.result.iter().map(|(k, v)| format!("{k}: {v}\n")).collect()
    }
}

#[derive(Debug, Parser)]
#[command(name = "kalman", version, about = "Degrees of generalized Kalman varieties")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Degree factor d(n, δ, ω) by coefficient extraction.
    Degree(DegreeArgs),
    /// Coefficients of the rational generating function.
    Genfun(GenfunArgs),
    /// Degree of the totally isotropic Kalman variety.
    Isotropic(IsotropicArgs),
    /// Leading-order estimate in the hypercubical format.
    Asympt(AsymptArgs),
    /// Sweep tables, evaluated in parallel.
    Table(TableArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableKind {
    /// ED degrees of n1 x n2 matrices.
    MatrixEd,
    /// Exact degree factors against the asymptotic estimate.
    HypercubicalCompare,
    /// Isotropic degrees of symmetric tensors, general sum against closed form.
    IsotropicSym,
    /// Codimension of the normalized symmetric Kalman variety.
    Codim,
}

#[derive(Debug, Args)]
pub struct DegreeArgs {
    #[arg(long, value_delimiter = ',', required = true)]
    pub n: Vec<u32>,
    #[arg(long, value_delimiter = ',', required = true)]
    pub delta: Vec<u32>,
    #[arg(long, value_delimiter = ',', required = true)]
    pub omega: Vec<u32>,
    /// Degrees of the subvarieties Z_i.
    #[arg(long = "deg-z", value_delimiter = ',')]
    pub deg_z: Option<Vec<u64>>,
    /// Also probe stabilization in this factor (1-based).
    #[arg(long)]
    pub stabilize: Option<usize>,
    #[arg(long, default_value_t = 3)]
    pub probes: u32,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct GenfunArgs {
    #[arg(long, value_delimiter = ',', required = true)]
    pub omega: Vec<u32>,
    /// Per-variable caps on the x exponents.
    #[arg(long, value_delimiter = ',', required = true)]
    pub caps: Vec<u32>,
    #[arg(long = "y-cap")]
    pub y_cap: u32,
    /// Print the denominator H instead of series coefficients.
    #[arg(long)]
    pub denominator: bool,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct IsotropicArgs {
    #[arg(long, value_delimiter = ',', required = true)]
    pub n: Vec<u32>,
    #[arg(long, value_delimiter = ',', required = true)]
    pub omega: Vec<u32>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct AsymptArgs {
    #[arg(long)]
    pub k: u32,
    #[arg(long)]
    pub omega: u32,
    #[arg(long, default_value_t = 0)]
    pub delta: u32,
    #[arg(long)]
    pub n: Option<u32>,
    /// Also compute the exact degree factor and the ratio.
    #[arg(long)]
    pub compare: bool,
    /// Check the exact identities at the critical point instead.
    #[arg(long)]
    pub critical: bool,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(long, value_enum)]
    pub kind: TableKind,
    #[arg(long = "max-n")]
    pub max_n: u32,
    #[arg(long = "min-n")]
    pub min_n: Option<u32>,
    #[arg(long)]
    pub k: Option<u32>,
    #[arg(long)]
    pub omega: Option<u32>,
    #[arg(long)]
    pub delta: Option<u32>,
    #[arg(long = "max-omega")]
    pub max_omega: Option<u32>,
    #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
    pub format: TableFormat,
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}

fn inputs(pairs: &[(&str, Option<String>)]) -> BTreeMap<String, String> {
    pairs
        .iter()
        .filter_map(|(k, v)| v.clone().map(|v| (k.to_string(), v)))
        .collect()
}

fn switch(on: bool) -> Option<String> {
    on.then(|| "true".to_string())
}

fn render(records: &[OutputRecord], format: Format) -> String {
    match format {
        Format::Json => records
            .iter()
            .map(|r| serde_json::to_string(r).expect("string maps serialize") + "\n")
            .collect(),
        Format::Text => records.iter().map(OutputRecord::to_text).collect(),
    }
}

pub fn cmd_degree(a: &DegreeArgs) -> Result<Vec<OutputRecord>> {
    let fmt = TensorFormat::new(a.n.clone(), a.omega.clone())?;
    let d = CodimVec::new(a.delta.clone());
    let mut rec = OutputRecord::new(
        "degree",
        inputs(&[
            ("n", Some(join(&a.n))),
            ("delta", Some(join(&a.delta))),
            ("omega", Some(join(&a.omega))),
            ("deg-z", a.deg_z.as_deref().map(join)),
            ("stabilize", a.stabilize.map(|s| s.to_string())),
            ("probes", a.stabilize.map(|_| a.probes.to_string())),
        ]),
        "coefficient extraction from the product of geometric factors",
    );
    rec.put("degree_factor", extract_degree(&fmt, &d)?);
    if let Some(z) = &a.deg_z {
        rec.put("kalman_degree", kalman_degree(&fmt, &d, z)?);
    }
    if let Some(factor) = a.stabilize {
        if factor == 0 {
            return Err(Error::Precondition("--stabilize takes a 1-based factor index".into()));
        }
        let rep = check_stabilization(&fmt, &d, factor - 1, a.probes)?;
        rec.put("stabilization_threshold", rep.threshold);
        rec.put("stable", rep.stable);
        let values: Vec<String> = rep.values.iter().map(|(n, v)| format!("{n}:{v}")).collect();
        rec.put("stabilization_values", values.join(","));
    }
    Ok(vec![rec])
}

pub fn cmd_genfun(a: &GenfunArgs) -> Result<Vec<OutputRecord>> {
    let base = inputs(&[
        ("omega", Some(join(&a.omega))),
        ("caps", Some(join(&a.caps))),
        ("y-cap", Some(a.y_cap.to_string())),
        ("denominator", switch(a.denominator)),
    ]);
    if a.denominator {
        let h = build_h(&a.omega)?;
        let via_det = build_h_via_determinant(&a.omega)?;
        if h != via_det {
            return Err(Error::Assertion(format!(
                "closed form H = {h} differs from det(I - TA) = {via_det}"
            )));
        }
        let mut rec = OutputRecord::new("genfun", base, "closed form of H, checked against det(I - TA)");
        rec.put("h", h);
        return Ok(vec![rec]);
    }
    let series = expand_series(&a.omega, &a.caps, a.y_cap)?;
    Ok(series
        .into_iter()
        .map(|((n, delta), c)| {
            let mut rec = OutputRecord::new("genfun", base.clone(), "truncated Neumann expansion of 1/H");
            rec.put("n", join(&n));
            rec.put("delta", delta);
            rec.put("coefficient", c);
            rec
        })
        .collect())
}

pub fn cmd_isotropic(a: &IsotropicArgs) -> Result<Vec<OutputRecord>> {
    let fmt = TensorFormat::new(a.n.clone(), a.omega.clone())?;
    let r = isotropic_degree(&fmt)?;
    let mut rec = OutputRecord::new(
        "isotropic",
        inputs(&[("n", Some(join(&a.n))), ("omega", Some(join(&a.omega)))]),
        "polar class sum over bounded compositions",
    );
    rec.put("degree", &r.degree);
    rec.put("components", r.components);
    rec.put("ambient_dim", r.ambient_dim);
    if fmt.k() == 1 {
        let closed = isotropic_degree_symmetric(a.n[0], a.omega[0])?;
        if closed != r.degree {
            return Err(Error::Assertion(format!(
                "isotropic sum {} disagrees with the symmetric closed form {closed}",
                r.degree
            )));
        }
    }
    Ok(vec![rec])
}

pub fn cmd_asympt(a: &AsymptArgs) -> Result<Vec<OutputRecord>> {
    let ins = inputs(&[
        ("k", Some(a.k.to_string())),
        ("omega", Some(a.omega.to_string())),
        ("delta", Some(a.delta.to_string())),
        ("n", a.n.map(|n| n.to_string())),
        ("compare", switch(a.compare)),
        ("critical", switch(a.critical)),
    ]);
    if a.critical {
        let r = critical_point_values(a.k, a.omega)?;
        if !r.holds() {
            verify_critical_point(a.k, a.omega)?;
        }
        let mut rec = OutputRecord::new("asympt", ins, "exact evaluation of F_D and its derivative at c");
        rec.put("c", &r.c);
        rec.put("f_d_at_c", &r.f_d_at_c);
        rec.put("minus_ck_dk", &r.minus_ck_dk);
        rec.put("minus_ck_dk_closed", &r.minus_ck_dk_closed);
        return Ok(vec![rec]);
    }
    let n = a
        .n
        .ok_or_else(|| Error::Precondition("--n is required unless --critical is given".into()))?;
    let mut rec = OutputRecord::new("asympt", ins, "leading-order estimate in log space");
    let est = if a.compare {
        let row = compare_exact_asymptotic(a.k, a.omega, a.delta, &[n])?.remove(0);
        rec.put("exact", &row.exact);
        row.estimate
    } else {
        asymptotic_degree(a.k, a.omega, a.delta, n)?
    };
    rec.put("log10_estimate", est.log10_value);
    if let Some(v) = est.value_if_representable {
        rec.put("estimate", v);
    }
    if let Some(r) = est.ratio_to_exact {
        rec.put("ratio_exact_over_estimate", r);
    }
    Ok(vec![rec])
}

fn need(v: Option<u32>, flag: &str, kind: &str) -> Result<u32> {
    v.ok_or_else(|| Error::Precondition(format!("table kind {kind} needs --{flag}")))
}

/// Rows of a table as ordered `(column, value)` lists.
type Rows = Vec<Vec<(&'static str, String)>>;

fn table_rows(a: &TableArgs) -> Result<Rows> {
    match a.kind {
        TableKind::MatrixEd => {
            let cells: Vec<(u32, u32)> = (1..=a.max_n).flat_map(|p| (1..=a.max_n).map(move |q| (p, q))).collect();
            cells
                .par_iter()
                .map(|&(p, q)| {
                    let fmt = TensorFormat::new(vec![p, q], vec![1, 1])?;
                    let d = extract_degree(&fmt, &CodimVec::zeros(2))?;
                    Ok(vec![("n1", p.to_string()), ("n2", q.to_string()), ("ed_degree", d.to_string())])
                })
                .collect()
        }
        TableKind::HypercubicalCompare => {
            let kind = "hypercubical-compare";
            let k = need(a.k, "k", kind)?;
            let omega = need(a.omega, "omega", kind)?;
            let delta = a.delta.unwrap_or(0);
            let ns: Vec<u32> = (a.min_n.unwrap_or(delta + 1)..=a.max_n).collect();
            let rows = compare_exact_asymptotic(k, omega, delta, &ns)?;
            Ok(rows
                .into_iter()
                .map(|r| {
                    vec![
                        ("n", r.n.to_string()),
                        ("exact", r.exact.to_string()),
                        ("log10_estimate", r.estimate.log10_value.to_string()),
                        (
                            "ratio_exact_over_estimate",
                            r.estimate.ratio_to_exact.map_or(String::new(), |x| x.to_string()),
                        ),
                    ]
                })
                .collect())
        }
        TableKind::IsotropicSym => {
            let max_omega = need(a.max_omega, "max-omega", "isotropic-sym")?;
            let cells: Vec<(u32, u32)> = (2..=a.max_n)
                .flat_map(|n| (1..=max_omega).map(move |w| (n, w)))
                .collect();
            cells
                .par_iter()
                .map(|&(n, w)| {
                    let general = isotropic_degree(&TensorFormat::new(vec![n], vec![w])?)?.degree;
                    let closed = isotropic_degree_symmetric(n, w)?;
                    Ok(vec![
                        ("n", n.to_string()),
                        ("omega", w.to_string()),
                        ("general", general.to_string()),
                        ("closed_form", closed.to_string()),
                        ("agree", (general == closed).to_string()),
                    ])
                })
                .collect()
        }
        TableKind::Codim => {
            let k = need(a.k, "k", "codim")?;
            (2..=a.max_n)
                .map(|n| Ok(vec![("n", n.to_string()), ("codim", symmetric_tuple_codim(n, k)?.to_string())]))
                .collect()
        }
    }
}

pub fn cmd_table(a: &TableArgs) -> Result<String> {
    let rows = table_rows(a)?;
    match a.format {
        TableFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let header: Vec<&str> = match rows.first() {
                Some(r) => r.iter().map(|(c, _)| *c).collect(),
                None => Vec::new(),
            };
            if !header.is_empty() {
                w.write_record(&header).map_err(csv_err)?;
            }
            for r in &rows {
                w.write_record(r.iter().map(|(_, v)| v)).map_err(csv_err)?;
            }
            let bytes = w.into_inner().map_err(|e| Error::Assertion(e.to_string()))?;
            Ok(String::from_utf8(bytes).expect("csv of ascii fields"))
        }
        TableFormat::Json => {
            let kind = a.kind.to_possible_value().expect("no skipped variants");
            let base = inputs(&[
                ("kind", Some(kind.get_name().to_string())),
                ("max-n", Some(a.max_n.to_string())),
                ("min-n", a.min_n.map(|x| x.to_string())),
                ("k", a.k.map(|x| x.to_string())),
                ("omega", a.omega.map(|x| x.to_string())),
                ("delta", a.delta.map(|x| x.to_string())),
                ("max-omega", a.max_omega.map(|x| x.to_string())),
            ]);
            let provenance = match a.kind {
                TableKind::MatrixEd => "coefficient extraction with delta = 0",
                TableKind::HypercubicalCompare => "coefficient extraction next to the leading-order estimate",
                TableKind::IsotropicSym => "polar class sum against its symmetric closed form",
                TableKind::Codim => "codimension (k-1)(n-1)",
            };
            let records: Vec<OutputRecord> = rows
                .into_iter()
                .map(|r| {
                    let mut rec = OutputRecord::new("table", base.clone(), provenance);
                    for (c, v) in r {
                        rec.put(c, v);
                    }
                    rec
                })
                .collect();
            Ok(render(&records, Format::Json))
        }
    }
}

fn csv_err(e: csv::Error) -> Error {
    Error::Assertion(format!("csv output: {e}"))
}

/// Run a parsed command and return everything it prints on stdout.
pub fn run(cli: &Cli) -> Result<String> {
    Ok(match &cli.command {
        Command::Degree(a) => render(&cmd_degree(a)?, a.format),
        Command::Genfun(a) => render(&cmd_genfun(a)?, a.format),
        Command::Isotropic(a) => render(&cmd_isotropic(a)?, a.format),
        Command::Asympt(a) => render(&cmd_asympt(a)?, a.format),
        Command::Table(a) => cmd_table(a)?,
    })
}

/// 0 on success, 2 for invalid input, 3 when an internal identity fails.
pub fn exit_code(err: &Error) -> u8 {
    if err.is_validation() {
        2
    } else {
        3
    }
}

/// Parse `args` (program name first), run, print, and map errors to exit
/// codes. Flag parsing errors exit with 2.
pub fn main_with<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

//! Command-line front end.
//!
//! Every verb echoes its fully resolved parameters (defaulted `b`, `a`, the
//! splitting-field modulus and primitive element, the power of the canonical
//! root used as `alpha`) so that any output can be reproduced exactly.
//!
//! JSON schema: polynomials over `F_q` are integer arrays in ascending
//! degree, polynomials over `R` are arrays of `s`-length coefficient arrays
//! on `1, v, .., v^{s-1}`, and codes are objects with `params`, `generator`,
//! `idempotent`, `components` and `distance_report`.

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::analysis::{
    griesmer_check, min_distance_field, min_distance_ring, ring_distance_exhaustive, DistanceReport, Method,
    DEFAULT_CAP,
};
use crate::error::{Error, Result};
use crate::families::{CyclicCode, Family, FieldFamilies};
use crate::field::{FieldCtx, FieldElt};
use crate::poly::Poly;
use crate::reference;
use crate::residue::ResidueSystem;
use crate::ring::{RingCtx, RingElt};
use crate::ring_codes::{ring_mu_chain, RingCode};

#[derive(Parser, Debug)]
#[command(
    name = "madic",
    version,
    about = "Construct and analyze m-adic residue codes over F_q and F_q[v]/(v^s - v)"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Output::Text, global = true)]
    pub output: Output,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum Output {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum MethodArg {
    ComponentMin,
    Exhaustive,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::ComponentMin => Method::ComponentMin,
            MethodArg::Exhaustive => Method::Exhaustive,
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// The residue classes Q_0, .., Q_{m-1} modulo p.
    Classes(SystemArgs),
    /// One code of length p over F_q.
    FieldCode(FieldCodeArgs),
    /// One code of length p over F_q[v]/(v^s - v), optionally with its mu_a chain.
    RingCode(RingCodeArgs),
    /// Exact minimum distance, from parameters or from an exported code.
    Distance(DistanceArgs),
    /// The Griesmer bound for [n, k, d] over F_q.
    Griesmer(GriesmerArgs),
    /// Recompute the published reference examples and list errata.
    VerifyPaper(VerifyArgs),
    /// All four families over F_q (and over R when --s is given) as JSON.
    Export(ExportArgs),
}

#[derive(Args, Debug, Clone)]
pub struct SystemArgs {
    /// Prime code length.
    #[arg(long)]
    pub p: u64,
    /// Number of residue classes; must divide p - 1.
    #[arg(long)]
    pub m: usize,
    /// Primitive root mod p (default: the smallest).
    #[arg(long)]
    pub b: Option<u64>,
    /// Multiplier in Q_1 (default: the smallest element of Q_1).
    #[arg(long)]
    pub a: Option<u64>,
}

#[derive(Args, Debug, Clone)]
pub struct FieldArgs {
    #[command(flatten)]
    pub system: SystemArgs,
    /// Prime field order.
    #[arg(long)]
    pub q: u64,
    /// alpha is this power of the canonical primitive p-th root of unity.
    #[arg(long, default_value_t = 1)]
    pub alpha_power: u64,
    /// Largest number of codewords an exhaustive enumeration may visit.
    #[arg(long, default_value_t = DEFAULT_CAP)]
    pub cap: u64,
}

#[derive(Args, Debug, Clone)]
pub struct FieldCodeArgs {
    #[command(flatten)]
    pub field: FieldArgs,
    #[arg(long, default_value = "even-I")]
    pub family: Family,
    #[arg(long, default_value_t = 0)]
    pub index: usize,
    /// Skip the minimum distance computation.
    #[arg(long)]
    pub no_distance: bool,
}

#[derive(Args, Debug, Clone)]
pub struct RingCodeArgs {
    #[command(flatten)]
    pub field: FieldArgs,
    /// Ring parameter; (s - 1) must divide (q - 1).
    #[arg(long)]
    pub s: usize,
    #[arg(long, default_value = "even-I")]
    pub family: Family,
    /// Comma-separated field-code index per CRT component (default 0,1,..,s-1 mod m).
    #[arg(long, value_delimiter = ',')]
    pub slots: Option<Vec<usize>>,
    #[arg(long, value_enum, default_value_t = MethodArg::ComponentMin)]
    pub method: MethodArg,
    /// Emit the s codes of the mu_a chain starting at this code.
    #[arg(long)]
    pub chain: bool,
    #[arg(long)]
    pub no_distance: bool,
}

#[derive(Args, Debug, Clone)]
pub struct DistanceArgs {
    /// Exported code (JSON from field-code, ring-code or export); `-` reads stdin.
    #[arg(long, conflicts_with_all = ["q", "p", "m", "s", "b", "a", "slots", "index"])]
    pub input: Option<PathBuf>,
    #[arg(long)]
    pub q: Option<u64>,
    #[arg(long)]
    pub p: Option<u64>,
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long)]
    pub s: Option<usize>,
    #[arg(long)]
    pub b: Option<u64>,
    #[arg(long)]
    pub a: Option<u64>,
    #[arg(long)]
    pub alpha_power: Option<u64>,
    #[arg(long)]
    pub family: Option<Family>,
    #[arg(long)]
    pub index: Option<usize>,
    #[arg(long, value_delimiter = ',')]
    pub slots: Option<Vec<usize>>,
    #[arg(long, value_enum)]
    pub method: Option<MethodArg>,
    #[arg(long)]
    pub cap: Option<u64>,
}

#[derive(Args, Debug, Clone)]
pub struct GriesmerArgs {
    #[arg(long)]
    pub n: u64,
    #[arg(long)]
    pub k: u64,
    #[arg(long)]
    pub d: u64,
    #[arg(long)]
    pub q: u64,
}

#[derive(Args, Debug, Clone)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = DEFAULT_CAP)]
    pub cap: u64,
}

#[derive(Args, Debug, Clone)]
pub struct ExportArgs {
    #[command(flatten)]
    pub field: FieldArgs,
    /// Also export ring codes over F_q[v]/(v^s - v), one mu_a chain per family.
    #[arg(long)]
    pub s: Option<usize>,
    #[arg(long, value_delimiter = ',')]
    pub slots: Option<Vec<usize>>,
    /// Include distance reports (subject to --cap).
    #[arg(long)]
    pub distances: bool,
    /// Write to this file instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CodeKind {
    Field,
    Ring,
}

/// Everything needed to rebuild a result.
#[derive(Clone, PartialEq, Eq, Debug, Default, Serialize, Deserialize)]
pub struct Resolved {
    pub p: u64,
    pub m: usize,
    pub b: u64,
    pub a: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha_power: Option<u64>,
    /// Degree `t` of the splitting field `F_{q^t}` of `x^p - 1`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub splitting_degree: Option<u32>,
    /// Its defining modulus, ascending coefficients.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub splitting_modulus: Option<Vec<u64>>,
    /// The primitive element of `F_{q^t}` as coefficients on `1, y, ..`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub primitive_element: Option<Vec<u64>>,
    /// `alpha` as coefficients on `1, y, ..`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<Vec<u64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub zeta: Option<u64>,
    /// Values of `v` at the CRT components.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub crt_points: Option<Vec<u64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<Family>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub index: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub slots: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cap: Option<u64>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PolyJson {
    Field(Vec<u64>),
    Ring(Vec<Vec<u64>>),
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ComponentJson {
    /// Position in the CRT decomposition.
    pub slot: usize,
    pub index: usize,
    pub generator: Vec<u64>,
    pub idempotent: Vec<u64>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CodeJson {
    pub kind: CodeKind,
    pub params: Resolved,
    pub generator: PolyJson,
    pub idempotent: PolyJson,
    pub components: Vec<ComponentJson>,
    pub distance_report: Option<DistanceReport>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ExportJson {
    pub params: Resolved,
    pub field_codes: Vec<CodeJson>,
    pub ring_codes: Vec<CodeJson>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct DistanceJson {
    pub params: Resolved,
    pub distance_report: DistanceReport,
    /// With `--input`: whether the recomputed report equals the exported one.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matches_input: Option<bool>,
}

/// Process entry point: parses `std::env::args`, runs, maps errors to exit
/// codes (0 success, 1 validation error or failed verification, 2 cap
/// exceeded).
pub fn main_entry() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match run(&cli, &mut out) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            let _ = out.flush();
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

pub fn exit_code(e: &Error) -> u8 {
    match e {
        Error::TooLarge { .. } => 2,
        _ => 1,
    }
}

/// Runs one command, writing its report to `out`. `Ok(false)` means the
/// command ran but reported failure (verify-paper only).
pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<bool> {
    let json = cli.output == Output::Json;
    match &cli.command {
        Command::Classes(args) => cmd_classes(args, json, out).map(|_| true),
        Command::FieldCode(args) => cmd_field_code(args, json, out).map(|_| true),
        Command::RingCode(args) => cmd_ring_code(args, json, out).map(|_| true),
        Command::Distance(args) => cmd_distance(args, json, out).map(|_| true),
        Command::Griesmer(args) => cmd_griesmer(args, json, out).map(|_| true),
        Command::VerifyPaper(args) => cmd_verify(args, json, out),
        Command::Export(args) => cmd_export(args, json, out).map(|_| true),
    }
}

fn io_err(e: io::Error) -> Error {
    Error::Io(e.to_string())
}

fn write_json<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<()> {
    let text = serde_json::to_string_pretty(value).map_err(|e| Error::Io(e.to_string()))?;
    writeln!(out, "{text}").map_err(io_err)
}

fn line(out: &mut dyn Write, text: impl AsRef<str>) -> Result<()> {
    writeln!(out, "{}", text.as_ref()).map_err(io_err)
}

fn system(args: &SystemArgs) -> Result<ResidueSystem> {
    ResidueSystem::new(args.p, args.m, args.b, args.a)
}

fn set_text(xs: &[u64]) -> String {
    let parts: Vec<String> = xs.iter().map(u64::to_string).collect();
    format!("{{{}}}", parts.join(", "))
}

fn cmd_classes(args: &SystemArgs, json: bool, out: &mut dyn Write) -> Result<()> {
    let sys = system(args)?;
    let params = system_params(&sys);
    if json {
        #[derive(Serialize)]
        struct ClassesJson<'a> {
            params: Resolved,
            classes: &'a [Vec<u64>],
        }
        return write_json(
            out,
            &ClassesJson {
                params,
                classes: sys.classes(),
            },
        );
    }
    echo(out, &params)?;
    for (i, class) in sys.classes().iter().enumerate() {
        line(out, format!("Q_{i} = {}", set_text(class)))?;
    }
    Ok(())
}

fn system_params(sys: &ResidueSystem) -> Resolved {
    Resolved {
        p: sys.p(),
        m: sys.m(),
        b: sys.b(),
        a: sys.multiplier(),
        ..Resolved::default()
    }
}

fn families_params(fams: &FieldFamilies, cap: u64) -> Resolved {
    let split = fams.splitting();
    let ext = split.extension();
    Resolved {
        q: Some(fams.field().characteristic()),
        alpha_power: Some(split.root_power()),
        splitting_degree: Some(ext.degree()),
        splitting_modulus: Some(ext.modulus().to_vec()),
        primitive_element: Some(ext.coeffs(ext.primitive_element())),
        alpha: Some(ext.coeffs(split.alpha())),
        cap: Some(cap),
        ..system_params(fams.system())
    }
}

fn ring_params(base: Resolved, ring: &RingCtx) -> Resolved {
    Resolved {
        s: Some(ring.s()),
        zeta: Some(ring.zeta().0 as u64),
        crt_points: Some(ring.crt_points().iter().map(|c| c.0 as u64).collect()),
        ..base
    }
}

/// The resolved-parameter block as `# key = value` lines.
fn echo(out: &mut dyn Write, r: &Resolved) -> Result<()> {
    let mut parts = vec![];
    if let Some(q) = r.q {
        parts.push(format!("q = {q}"));
    }
    parts.push(format!("p = {}", r.p));
    parts.push(format!("m = {}", r.m));
    if let Some(s) = r.s {
        parts.push(format!("s = {s}"));
    }
    parts.push(format!("b = {}", r.b));
    parts.push(format!("a = {}", r.a));
    line(out, format!("# {}", parts.join(", ")))?;
    if let (Some(t), Some(modulus), Some(prim), Some(power), Some(alpha)) = (
        r.splitting_degree,
        &r.splitting_modulus,
        &r.primitive_element,
        r.alpha_power,
        &r.alpha,
    ) {
        line(
            out,
            format!(
                "# splitting field F_{}^{t} modulo {}, primitive element {}, alpha = (canonical root)^{power} = {}",
                r.q.unwrap_or(0),
                int_poly_text(modulus, "y"),
                int_poly_text(prim, "y"),
                int_poly_text(alpha, "y"),
            ),
        )?;
    }
    if let (Some(zeta), Some(points)) = (r.zeta, &r.crt_points) {
        line(out, format!("# zeta = {zeta}, CRT points v = {points:?}"))?;
    }
    if let Some(family) = r.family {
        let which = match (&r.index, &r.slots) {
            (Some(i), _) => format!(", index {i}"),
            (_, Some(slots)) => format!(", slots {slots:?}"),
            _ => String::new(),
        };
        line(out, format!("# family {family}{which}"))?;
    }
    Ok(())
}

fn int_poly_text(coeffs: &[u64], var: &str) -> String {
    let terms: Vec<String> = coeffs
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(i, &c)| match (i, c) {
            (0, c) => c.to_string(),
            (1, 1) => var.to_string(),
            (1, c) => format!("{c}*{var}"),
            (i, 1) => format!("{var}^{i}"),
            (i, c) => format!("{c}*{var}^{i}"),
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join("+")
    }
}

fn field_families(args: &FieldArgs) -> Result<FieldFamilies> {
    let field = FieldCtx::prime(args.q)?;
    let sys = system(&args.system)?;
    FieldFamilies::new(&field, &sys, args.alpha_power)
}

fn field_ints(f: &Poly<FieldElt>) -> Vec<u64> {
    f.coeffs().iter().map(|c| c.0 as u64).collect()
}

fn ring_ints(f: &Poly<RingElt>) -> Vec<Vec<u64>> {
    f.coeffs()
        .iter()
        .map(|c| c.to_ints().into_iter().map(u64::from).collect())
        .collect()
}

fn field_code_json(fams: &FieldFamilies, code: &CyclicCode, cap: u64, report: Option<DistanceReport>) -> CodeJson {
    CodeJson {
        kind: CodeKind::Field,
        params: Resolved {
            family: Some(code.family),
            index: Some(code.index),
            ..families_params(fams, cap)
        },
        generator: PolyJson::Field(field_ints(&code.generator)),
        idempotent: PolyJson::Field(field_ints(&code.idempotent)),
        components: Vec::new(),
        distance_report: report,
    }
}

fn ring_code_json(fams: &FieldFamilies, code: &RingCode, cap: u64, report: Option<DistanceReport>) -> CodeJson {
    CodeJson {
        kind: CodeKind::Ring,
        params: Resolved {
            family: Some(code.family),
            slots: Some(code.slots.clone()),
            ..ring_params(families_params(fams, cap), &code.ring)
        },
        generator: PolyJson::Ring(ring_ints(&code.generator)),
        idempotent: PolyJson::Ring(ring_ints(&code.idempotent)),
        components: code
            .components
            .iter()
            .enumerate()
            .map(|(slot, c)| ComponentJson {
                slot,
                index: c.index,
                generator: field_ints(&c.generator),
                idempotent: field_ints(&c.idempotent),
            })
            .collect(),
        distance_report: report,
    }
}

fn ring_distance(code: &RingCode, method: Method, cap: u64) -> Result<DistanceReport> {
    match method {
        Method::ComponentMin => min_distance_ring(code, cap),
        Method::Exhaustive => ring_distance_exhaustive(code, cap),
    }
}

fn report_text(out: &mut dyn Write, report: &DistanceReport, q: u64) -> Result<()> {
    let method = match report.method {
        Method::Exhaustive => "exhaustive",
        Method::ComponentMin => "component-min",
    };
    line(
        out,
        format!(
            "parameters: {} ({method}, {} codewords enumerated)",
            report.brackets(),
            report.enumerated
        ),
    )?;
    if let Some(dist) = &report.weight_distribution {
        let nonzero: Vec<String> = dist
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(w, c)| format!("A_{w}={c}"))
            .collect();
        line(out, format!("weight distribution: {}", nonzero.join(" ")))?;
    }
    if let (Some(k), Some(d)) = (report.free_rank, report.d_min) {
        if k > 0 {
            let g = griesmer_check(report.n as u64, k as u64, d as u64, q);
            let verdict = if g.attained { "attained" } else { "not attained" };
            line(out, format!("Griesmer bound: n >= {} ({verdict})", g.bound_n))?;
        }
    }
    Ok(())
}

fn field_code_text(out: &mut dyn Write, fams: &FieldFamilies, c: &CodeJson, code: &CyclicCode) -> Result<()> {
    echo(out, &c.params)?;
    let f = fams.field();
    line(out, format!("generator: {}", code.generator.to_text(f)))?;
    line(out, format!("idempotent: {}", code.idempotent.to_text(f)))?;
    line(out, format!("dimension: {}", code.dimension()))?;
    if let Some(report) = &c.distance_report {
        report_text(out, report, f.characteristic())?;
    }
    Ok(())
}

fn ring_code_text(out: &mut dyn Write, c: &CodeJson, code: &RingCode) -> Result<()> {
    echo(out, &c.params)?;
    let r = &code.ring;
    let f = r.field();
    line(out, format!("idempotent: {}", code.idempotent.to_text(r)))?;
    line(out, format!("generator: {}", code.generator.to_text(r)))?;
    for (k, comp) in code.components.iter().enumerate() {
        line(
            out,
            format!(
                "component {k} (v = {}): {} code {}, generator {}",
                r.crt_points()[k].0,
                comp.family,
                comp.index,
                comp.generator.to_text(f)
            ),
        )?;
    }
    if let Some(report) = &c.distance_report {
        report_text(out, report, f.characteristic())?;
    }
    Ok(())
}

fn cmd_field_code(args: &FieldCodeArgs, json: bool, out: &mut dyn Write) -> Result<()> {
    let fams = field_families(&args.field)?;
    let code = fams.code(args.family, args.index)?;
    let report = if args.no_distance {
        None
    } else {
        Some(min_distance_field(&code, args.field.cap)?)
    };
    let c = field_code_json(&fams, &code, args.field.cap, report);
    if json {
        write_json(out, &c)
    } else {
        field_code_text(out, &fams, &c, &code)
    }
}

fn default_slots(s: usize, m: usize) -> Vec<usize> {
    (0..s).map(|k| k % m).collect()
}

fn cmd_ring_code(args: &RingCodeArgs, json: bool, out: &mut dyn Write) -> Result<()> {
    let fams = field_families(&args.field)?;
    let ring = RingCtx::new(fams.field(), args.s)?;
    let slots = args.slots.clone().unwrap_or_else(|| default_slots(args.s, fams.m()));
    let start = RingCode::build(&ring, &fams, args.family, &slots)?;
    let codes = if args.chain {
        ring_mu_chain(&start, &fams, fams.system().multiplier())?
    } else {
        vec![start]
    };
    let mut docs = Vec::new();
    for code in &codes {
        let report = if args.no_distance {
            None
        } else {
            Some(ring_distance(code, args.method.into(), args.field.cap)?)
        };
        docs.push(ring_code_json(&fams, code, args.field.cap, report));
    }
    if json {
        return if args.chain {
            write_json(out, &docs)
        } else {
            write_json(out, &docs[0])
        };
    }
    for (i, (doc, code)) in docs.iter().zip(&codes).enumerate() {
        if args.chain {
            line(out, format!("== E_{i} =="))?;
        }
        ring_code_text(out, doc, code)?;
    }
    Ok(())
}

fn require<T: Clone>(value: &Option<T>, flag: &str) -> Result<T> {
    value
        .clone()
        .ok_or_else(|| Error::Usage(format!("distance needs --{flag} (or --input)")))
}

/// Rebuilds the code described by `params` and checks it against the
/// exported polynomials.
fn rebuild(doc: &CodeJson) -> Result<(FieldFamilies, Option<RingCode>, Option<CyclicCode>)> {
    let p = &doc.params;
    let q = require(&p.q, "q")?;
    let family = require(&p.family, "family")?;
    let field = FieldCtx::prime(q)?;
    let sys = ResidueSystem::new(p.p, p.m, Some(p.b), Some(p.a))?;
    let fams = FieldFamilies::new(&field, &sys, p.alpha_power.unwrap_or(1))?;
    let cap = p.cap.unwrap_or(DEFAULT_CAP);
    let rebuilt = match doc.kind {
        CodeKind::Field => {
            let code = fams.code(family, require(&p.index, "index")?)?;
            let json = field_code_json(&fams, &code, cap, None);
            (json, None, Some(code))
        }
        CodeKind::Ring => {
            let ring = RingCtx::new(&field, require(&p.s, "s")?)?;
            let code = RingCode::build(&ring, &fams, family, &require(&p.slots, "slots")?)?;
            let json = ring_code_json(&fams, &code, cap, None);
            (json, Some(code), None)
        }
    };
    let (json, ring_code, field_code) = rebuilt;
    if json.generator != doc.generator || json.idempotent != doc.idempotent || json.components != doc.components {
        return Err(Error::Inconsistent(
            "exported polynomials do not match the code rebuilt from its parameters".into(),
        ));
    }
    Ok((fams, ring_code, field_code))
}

fn read_input(path: &PathBuf) -> Result<String> {
    if path.as_os_str() == "-" {
        let mut text = String::new();
        io::stdin().read_to_string(&mut text).map_err(io_err)?;
        Ok(text)
    } else {
        fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
    }
}

fn cmd_distance(args: &DistanceArgs, json: bool, out: &mut dyn Write) -> Result<()> {
    let (doc, input_report) = match &args.input {
        Some(path) => {
            let text = read_input(path)?;
            let doc: CodeJson = serde_json::from_str(&text).map_err(|e| Error::Parse(format!("code JSON: {e}")))?;
            let report = doc.distance_report.clone();
            (doc, report)
        }
        None => {
            let fa = FieldArgs {
                system: SystemArgs {
                    p: require(&args.p, "p")?,
                    m: require(&args.m, "m")?,
                    b: args.b,
                    a: args.a,
                },
                q: require(&args.q, "q")?,
                alpha_power: args.alpha_power.unwrap_or(1),
                cap: args.cap.unwrap_or(DEFAULT_CAP),
            };
            let fams = field_families(&fa)?;
            let family = args.family.unwrap_or(Family::EvenI);
            let doc = match args.s {
                None => field_code_json(&fams, &fams.code(family, args.index.unwrap_or(0))?, fa.cap, None),
                Some(s) => {
                    let ring = RingCtx::new(fams.field(), s)?;
                    let slots = args.slots.clone().unwrap_or_else(|| default_slots(s, fams.m()));
                    ring_code_json(&fams, &RingCode::build(&ring, &fams, family, &slots)?, fa.cap, None)
                }
            };
            (doc, None)
        }
    };
    let cap = args.cap.or(doc.params.cap).unwrap_or(DEFAULT_CAP);
    let method = args
        .method
        .map(Method::from)
        .or(input_report.as_ref().map(|r| r.method))
        .unwrap_or(Method::ComponentMin);
    let (fams, ring_code, field_code) = rebuild(&doc)?;
    let report = match (ring_code, field_code) {
        (Some(code), _) => ring_distance(&code, method, cap)?,
        (_, Some(code)) => min_distance_field(&code, cap)?,
        _ => unreachable!("rebuild returns one code"),
    };
    let result = DistanceJson {
        params: doc.params.clone(),
        matches_input: input_report.map(|r| r == report),
        distance_report: report,
    };
    if json {
        return write_json(out, &result);
    }
    echo(out, &result.params)?;
    report_text(out, &result.distance_report, fams.field().characteristic())?;
    if let Some(m) = result.matches_input {
        line(out, format!("matches exported report: {m}"))?;
    }
    Ok(())
}

fn cmd_griesmer(args: &GriesmerArgs, json: bool, out: &mut dyn Write) -> Result<()> {
    if !crate::nt::is_prime(args.q) {
        return Err(Error::NonPrimeModulus(args.q));
    }
    if args.k == 0 || args.d == 0 {
        return Err(Error::Usage("griesmer needs k >= 1 and d >= 1".into()));
    }
    let g = griesmer_check(args.n, args.k, args.d, args.q);
    if json {
        return write_json(out, &g);
    }
    line(out, format!("# n = {}, k = {}, d = {}, q = {}", g.n, g.k, g.d, g.q))?;
    line(out, format!("Griesmer bound: n >= {}", g.bound_n))?;
    line(out, format!("attained: {}", g.attained))
}

fn cmd_verify(args: &VerifyArgs, json: bool, out: &mut dyn Write) -> Result<bool> {
    let report = reference::verify(args.cap)?;
    if json {
        write_json(out, &report)?;
        return Ok(report.passed());
    }
    line(out, format!("# cap = {}", args.cap))?;
    for c in &report.checks {
        let tag = if c.passed { "PASS" } else { "FAIL" };
        line(out, format!("{tag}  {}", c.name))?;
        line(out, format!("      {}", c.detail))?;
    }
    line(out, "")?;
    line(out, format!("errata ({}):", report.errata.len()))?;
    for e in &report.errata {
        line(out, format!("* {}", e.item))?;
        line(out, format!("    printed:  {}", e.printed))?;
        line(out, format!("    computed: {}", e.computed))?;
        line(out, format!("    evidence: {}", e.evidence))?;
    }
    let passed = report.checks.iter().filter(|c| c.passed).count();
    line(out, "")?;
    line(out, format!("{passed}/{} checks passed", report.checks.len()))?;
    Ok(report.passed())
}

fn cmd_export(args: &ExportArgs, json: bool, out: &mut dyn Write) -> Result<()> {
    let fams = field_families(&args.field)?;
    let cap = args.field.cap;
    let mut field_codes = Vec::new();
    for family in Family::ALL {
        for code in fams.family(family)? {
            let report = if args.distances {
                Some(min_distance_field(&code, cap)?)
            } else {
                None
            };
            field_codes.push(field_code_json(&fams, &code, cap, report));
        }
    }
    let mut ring_codes = Vec::new();
    let mut params = families_params(&fams, cap);
    if let Some(s) = args.s {
        let ring = RingCtx::new(fams.field(), s)?;
        params = ring_params(params, &ring);
        let slots = args.slots.clone().unwrap_or_else(|| default_slots(s, fams.m()));
        params.slots = Some(slots.clone());
        for family in Family::ALL {
            let start = RingCode::build(&ring, &fams, family, &slots)?;
            for code in ring_mu_chain(&start, &fams, fams.system().multiplier())? {
                let report = if args.distances {
                    Some(min_distance_ring(&code, cap)?)
                } else {
                    None
                };
                ring_codes.push(ring_code_json(&fams, &code, cap, report));
            }
        }
    }
    let doc = ExportJson {
        params,
        field_codes,
        ring_codes,
    };
    let text = serde_json::to_string_pretty(&doc).map_err(|e| Error::Io(e.to_string()))?;
    match &args.out {
        Some(path) => {
            fs::write(path, format!("{text}\n")).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
            if json {
                write_json(out, &doc.params)
            } else {
                echo(out, &doc.params)?;
                line(
                    out,
                    format!(
                        "wrote {} field codes and {} ring codes to {}",
                        doc.field_codes.len(),
                        doc.ring_codes.len(),
                        path.display()
                    ),
                )
            }
        }
        None => line(out, text),
    }
}

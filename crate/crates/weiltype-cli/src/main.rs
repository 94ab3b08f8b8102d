//! Deterministic command line front end over the classification pipelines.
//!
//! Field elements on the command line use the integer encoding of the
//! library: an element sum(d_i x^i) of F_{p^r} is written as the integer
//! sum(d_i p^i) with digits 0 <= d_i < p. Over F_4 the classes are 0, 1,
//! and the two roots omega = 2, omega^2 = 3 of x^2 + x + 1.
//!
//! Exit codes: 0 on success, 2 on invalid input, 3 on an internal
//! consistency failure (a pipeline assertion that should never fire).

use std::fmt::Write as _;
use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use weiltype::curves::{count_points, weil_data, CurveSpec, Family};
use weiltype::finitefield::{make_field, FieldDesc};
use weiltype::intpoly::{is_supersingular, reverse_poly, IntPoly, WeilData};
use weiltype::twistlab::{census_elliptic, elliptic_type, genus3_report};
use weiltype::weilclass::{
    elliptic_charpoly, elliptic_table, surface_table, surface_type, verify_surface_factorization,
    ClassError, TypeVerdict,
};

#[derive(Parser)]
#[command(
    name = "weiltype",
    version,
    about = "Supersingularity and twist-type analysis of curves over finite fields"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Worker threads for internal parallel counting. The output is
    /// byte-identical regardless of this setting.
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Cmd {
    /// Supersingular elliptic isogeny classes over F_{p^r}.
    Elliptic(EllipticArgs),
    /// Simple supersingular abelian surface table lookup by (a1, a2).
    Surface(SurfaceArgs),
    /// Classification of the genus-3 family Z^4 + (1+c)Z^2 + cZ = dS^3.
    Genus3(Genus3Args),
    /// Point counts and Weil data for one curve.
    Curve(CurveArgs),
    /// Isomorphism-class census of supersingular elliptic curves.
    Census(CensusArgs),
}

#[derive(Args)]
struct EllipticArgs {
    #[arg(long)]
    p: u64,
    #[arg(long)]
    r: u32,
    /// Enumerate all admissible supersingular traces over F_{p^r}.
    #[arg(long)]
    enumerate: bool,
    /// Classify the isogeny class with this trace of Frobenius.
    #[arg(long, allow_hyphen_values = true)]
    beta: Option<i64>,
    /// Classify a concrete model a1,a2,a3,a4,a6 (field encodings).
    #[arg(long, value_delimiter = ',')]
    coeffs: Option<Vec<u64>>,
}

#[derive(Args)]
struct SurfaceArgs {
    #[arg(long)]
    p: u64,
    #[arg(long)]
    r: u32,
    #[arg(long, allow_hyphen_values = true)]
    a1: i64,
    #[arg(long, allow_hyphen_values = true)]
    a2: i64,
}

#[derive(Args)]
struct Genus3Args {
    /// Base field degree: the family lives over F_{2^r}.
    #[arg(long)]
    r: u32,
    /// Coefficient c (field encoding, nonzero).
    #[arg(long)]
    c: Option<u64>,
    /// Coefficient d (field encoding, nonzero).
    #[arg(long)]
    d: Option<u64>,
    /// Sweep every (c, d) pair and tally the verdicts.
    #[arg(long)]
    all: bool,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    /// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6; coeffs a1,a2,a3,a4,a6.
    Weierstrass,
    /// y^2 = f(x), deg f in {5, 6}, odd characteristic; coeffs of f ascending.
    Hyperelliptic,
    /// Z^4 + (1+c)Z^2 + cZ = dS^3 in characteristic 2; coeffs c,d.
    As34,
    /// x^s + y^s + z^s = 0; coeffs s.
    Fermat,
}

#[derive(Args)]
struct CurveArgs {
    #[arg(long)]
    p: u64,
    #[arg(long)]
    r: u32,
    #[arg(long, value_enum)]
    family: FamilyArg,
    /// Comma-separated coefficients; meaning depends on --family.
    #[arg(long, value_delimiter = ',', required = true)]
    coeffs: Vec<u64>,
    /// Also count points over the degree-m extension F_{q^m}.
    #[arg(long)]
    ext: Option<u32>,
}

#[derive(Args)]
struct CensusArgs {
    #[arg(long)]
    p: u64,
    #[arg(long)]
    r: u32,
}

enum CliError {
    Usage(String),
    Internal(String),
}

impl From<weiltype::Error> for CliError {
    fn from(e: weiltype::Error) -> Self {
        if e.is_internal() {
            CliError::Internal(e.to_string())
        } else {
            CliError::Usage(e.to_string())
        }
    }
}

macro_rules! from_subsystem_error {
    ($t:ty) => {
        impl From<$t> for CliError {
            fn from(e: $t) -> Self {
                weiltype::Error::from(e).into()
            }
        }
    };
}
from_subsystem_error!(weiltype::finitefield::FieldError);
from_subsystem_error!(weiltype::intpoly::PolyError);
from_subsystem_error!(weiltype::curves::CurveError);
from_subsystem_error!(weiltype::weilclass::ClassError);
from_subsystem_error!(weiltype::twistlab::TwistError);

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        // a failure here only means a pool already exists; output does not
        // depend on the pool size, so it is safe to continue
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    // assertions in the pipeline signal internal inconsistencies; capture
    // them instead of crashing with a backtrace
    panic::set_hook(Box::new(|_| {}));
    let outcome = panic::catch_unwind(AssertUnwindSafe(|| run(&cli)));
    match outcome {
        Ok(Ok(text)) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Ok(Err(CliError::Usage(msg))) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Ok(Err(CliError::Internal(msg))) => {
            eprintln!("internal consistency failure: {msg}");
            ExitCode::from(3)
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".into());
            eprintln!("internal consistency failure: {msg}");
            ExitCode::from(3)
        }
    }
}

fn run(cli: &Cli) -> Result<String, CliError> {
    match &cli.cmd {
        Cmd::Elliptic(a) => cmd_elliptic(a, cli.format),
        Cmd::Surface(a) => cmd_surface(a, cli.format),
        Cmd::Genus3(a) => cmd_genus3(a, cli.format),
        Cmd::Curve(a) => cmd_curve(a, cli.format),
        Cmd::Census(a) => cmd_census(a, cli.format),
    }
}

// ---------------------------------------------------------------------------
// Shared report plumbing.

fn check_prime_power(p: u64, r: u32) -> Result<u64, CliError> {
    if p < 2 || (p > 2 && p % 2 == 0) || (2..p).take_while(|d| d * d <= p).any(|d| p % d == 0) {
        return Err(CliError::Usage(format!("p = {p} is not prime")));
    }
    if r == 0 {
        return Err(CliError::Usage("r must be at least 1".into()));
    }
    p.checked_pow(r)
        .ok_or_else(|| CliError::Usage(format!("q = {p}^{r} does not fit in 64 bits")))
}

fn lpoly_coeffs(p: &IntPoly) -> Vec<String> {
    let deg = p.deg().unwrap_or(0);
    (0..=deg).map(|k| p.coeff(k).to_string()).collect()
}

fn parity_str(parity: i8) -> &'static str {
    if parity == 1 {
        "+1"
    } else {
        "-1"
    }
}

fn verdict_json(v: &TypeVerdict) -> Value {
    json!({ "label": v.label, "rule": v.rule, "assumptions": v.assumptions })
}

fn verdict_line(v: &TypeVerdict) -> String {
    let mut s = format!("{} [rule: {}", v.label, v.rule);
    if !v.assumptions.is_empty() {
        let _ = write!(s, "; assumptions: {}", v.assumptions.join(", "));
    }
    s.push(']');
    s
}

/// The fixed JSON envelope: every field of the schema is present, with null
/// for the ones a subcommand does not produce.
#[allow(clippy::too_many_arguments)]
fn report_json(
    subcommand: &str,
    p: u64,
    r: u32,
    inputs: Value,
    wd: Option<&WeilData>,
    ty: Value,
    evidence: Value,
) -> String {
    let report = json!({
        "schema": 1,
        "subcommand": subcommand,
        "field": { "p": p, "r": r },
        "inputs": inputs,
        "lpoly": wd.map(|w| lpoly_coeffs(&w.lpoly)),
        "counts": wd.and_then(|w| w.counts.clone()),
        "supersingular": wd.map(|w| w.supersingular),
        "orders": wd.and_then(|w| w.nwn_orders.clone()),
        "e_vector": wd.and_then(|w| w.e_vector.clone()),
        "period": wd.and_then(|w| w.period),
        "parity": wd.and_then(|w| w.parity),
        "type": ty,
        "evidence": evidence,
    });
    let mut s = serde_json::to_string_pretty(&report).expect("report serializes");
    s.push('\n');
    s
}

fn weil_block(out: &mut String, wd: &WeilData) {
    if let Some(counts) = &wd.counts {
        let joined: Vec<String> = counts.iter().map(|n| n.to_string()).collect();
        let _ = writeln!(out, "counts N_1..N_{}: {}", wd.g, joined.join(", "));
    }
    let _ = writeln!(out, "L-polynomial coefficients (ascending): {}", lpoly_coeffs(&wd.lpoly).join(", "));
    let _ = writeln!(out, "supersingular: {}", wd.supersingular);
    if let (Some(orders), Some(evec), Some(mu), Some(delta)) =
        (&wd.nwn_orders, &wd.e_vector, wd.period, wd.parity)
    {
        let _ = writeln!(out, "normalized Weil number orders: {orders:?}");
        let _ = writeln!(out, "2-valuation vector: {evec:?}");
        let _ = writeln!(out, "period: {mu}, parity: {}", parity_str(delta));
    }
}

/// Flat key,value CSV used by the single-report subcommands.
fn kv_csv(rows: &[(String, String)]) -> String {
    let mut s = String::from("key,value\n");
    for (k, v) in rows {
        let _ = writeln!(s, "{k},{v}");
    }
    s
}

fn wd_kv_rows(wd: &WeilData) -> Vec<(String, String)> {
    let mut rows = Vec::new();
    if let Some(counts) = &wd.counts {
        let joined: Vec<String> = counts.iter().map(|n| n.to_string()).collect();
        rows.push(("counts".into(), joined.join(";")));
    }
    rows.push(("lpoly".into(), lpoly_coeffs(&wd.lpoly).join(";")));
    rows.push(("supersingular".into(), wd.supersingular.to_string()));
    if let Some(orders) = &wd.nwn_orders {
        let joined: Vec<String> = orders.iter().map(|n| n.to_string()).collect();
        rows.push(("orders".into(), joined.join(";")));
    }
    if let Some(evec) = &wd.e_vector {
        let joined: Vec<String> = evec.iter().map(|n| n.to_string()).collect();
        rows.push(("e_vector".into(), joined.join(";")));
    }
    if let Some(mu) = wd.period {
        rows.push(("period".into(), mu.to_string()));
    }
    if let Some(delta) = wd.parity {
        rows.push(("parity".into(), parity_str(delta).into()));
    }
    rows
}

// ---------------------------------------------------------------------------
// elliptic

fn cmd_elliptic(a: &EllipticArgs, format: Format) -> Result<String, CliError> {
    let q = check_prime_power(a.p, a.r)?;
    let modes = a.enumerate as usize + a.beta.is_some() as usize + a.coeffs.is_some() as usize;
    if modes != 1 {
        return Err(CliError::Usage(
            "pass exactly one of --enumerate, --beta, --coeffs".into(),
        ));
    }
    if a.enumerate {
        return Ok(elliptic_enumerate(a.p, a.r, q, format));
    }
    if let Some(beta) = a.beta {
        return elliptic_beta(a.p, a.r, q, beta, format);
    }
    elliptic_model(a.p, a.r, a.coeffs.as_deref().unwrap(), format)
}

fn elliptic_enumerate(p: u64, r: u32, q: u64, format: Format) -> String {
    let rows = elliptic_table(p, r);
    match format {
        Format::Json => {
            let evidence = json!({ "rows": rows });
            report_json(
                "elliptic",
                p,
                r,
                json!({ "mode": "enumerate" }),
                None,
                Value::Null,
                evidence,
            )
        }
        Format::Csv => {
            let mut s = String::from("case,beta,orders,e,period,parity\n");
            for row in &rows {
                let orders: Vec<String> = row.orders.iter().map(|o| o.to_string()).collect();
                let _ = writeln!(
                    s,
                    "{},{},{},{},{},{}",
                    row.case,
                    row.beta,
                    orders.join(";"),
                    row.e,
                    row.period,
                    parity_str(row.parity)
                );
            }
            s
        }
        Format::Table => {
            let mut s = format!("admissible supersingular elliptic traces over F_{q}\n");
            let _ = writeln!(s, "{:<5} {:>6}  {:<8} {:>2} {:>6}  parity", "case", "beta", "orders", "e", "period");
            for row in &rows {
                let _ = writeln!(
                    s,
                    "{:<5} {:>6}  {:<8} {:>2} {:>6}  {}",
                    row.case.to_string(),
                    row.beta,
                    format!("{:?}", row.orders),
                    row.e,
                    row.period,
                    parity_str(row.parity)
                );
            }
            s
        }
    }
}

fn elliptic_beta(p: u64, r: u32, q: u64, beta: i64, format: Format) -> Result<String, CliError> {
    let cp = elliptic_charpoly(beta, q);
    if !is_supersingular(&cp, q) {
        let reason = if beta.unsigned_abs() % p != 0 {
            format!("{p} does not divide {beta}")
        } else {
            "the trace is not admissible over this field".into()
        };
        return Err(CliError::Usage(format!(
            "beta = {beta} is not a supersingular trace over F_{q}: {reason}"
        )));
    }
    let row = elliptic_table(p, r)
        .into_iter()
        .find(|row| row.beta == beta)
        .ok_or_else(|| {
            CliError::Internal(format!(
                "supersingular trace beta = {beta} missing from the admissible table"
            ))
        })?;
    let n1 = (q as i128 + 1 - beta as i128) as u64;
    let lpoly = reverse_poly(&cp, 2);
    let wd = weiltype::intpoly::weil_data_from_lpoly(&lpoly, q, 1, Some(vec![n1]));
    let ty = json!({ "label": Value::Null, "rule": "elliptic-trace-table" });
    Ok(match format {
        Format::Json => report_json(
            "elliptic",
            p,
            r,
            json!({ "mode": "beta", "beta": beta }),
            Some(&wd),
            ty,
            json!({ "case": row.case, "row": row }),
        ),
        Format::Csv => {
            let mut rows = vec![("case".to_string(), row.case.to_string())];
            rows.extend(wd_kv_rows(&wd));
            kv_csv(&rows)
        }
        Format::Table => {
            let mut s = format!("isogeny class beta = {beta} over F_{q}\n");
            let _ = writeln!(s, "case: {}", row.case);
            weil_block(&mut s, &wd);
            s
        }
    })
}

fn integer_in_field(f: &Arc<FieldDesc>, n: i64) -> u64 {
    let p = f.p as i64;
    let v = n.rem_euclid(p) as u64;
    f.encode(&[v])
}

/// j-invariant of a long Weierstrass model, via the standard b- and
/// c-invariants (all formulas integral, so they hold in any characteristic).
fn j_invariant(f: &Arc<FieldDesc>, a: [u64; 5]) -> u64 {
    let [a1, a2, a3, a4, a6] = a;
    let c = |n: i64| integer_in_field(f, n);
    let b2 = f.add(f.mul(a1, a1), f.mul(c(4), a2));
    let b4 = f.add(f.mul(c(2), a4), f.mul(a1, a3));
    let b6 = f.add(f.mul(a3, a3), f.mul(c(4), a6));
    let b8 = {
        let t1 = f.mul(f.mul(a1, a1), a6);
        let t2 = f.mul(f.mul(c(4), a2), a6);
        let t3 = f.mul(f.mul(a1, a3), a4);
        let t4 = f.mul(a2, f.mul(a3, a3));
        let t5 = f.mul(a4, a4);
        f.sub(f.add(f.add(t1, t2), t4), f.add(t3, t5))
    };
    let c4 = f.sub(f.mul(b2, b2), f.mul(c(24), b4));
    let d1 = f.mul(f.mul(b2, b2), b8);
    let d2 = f.mul(c(8), f.mul(b4, f.mul(b4, b4)));
    let d3 = f.mul(c(27), f.mul(b6, b6));
    let d4 = f.mul(c(9), f.mul(b2, f.mul(b4, b6)));
    let delta = f.sub(d4, f.add(f.add(d1, d2), d3));
    assert!(delta != 0, "nonsingular model has nonzero discriminant");
    f.mul(f.mul(c4, f.mul(c4, c4)), f.inv(delta))
}

fn elliptic_model(p: u64, r: u32, coeffs: &[u64], format: Format) -> Result<String, CliError> {
    let field = make_field(p, r)?;
    let a: [u64; 5] = coeffs
        .try_into()
        .map_err(|_| CliError::Usage("--coeffs takes exactly a1,a2,a3,a4,a6".into()))?;
    if let Some(&bad) = coeffs.iter().find(|&&x| x >= field.q) {
        return Err(CliError::Usage(format!(
            "coefficient encoding {bad} is out of range for F_{}",
            field.q
        )));
    }
    let spec = CurveSpec::new(field.clone(), Family::WeierstrassE { a })?;
    let wd = weil_data(&spec)?;
    let (ty, verdict, evidence) = if wd.supersingular {
        let j = j_invariant(&field, a);
        assert_eq!(
            field.frobenius(field.frobenius(j)),
            j,
            "supersingular j-invariants lie in the quadratic subfield"
        );
        let degree = if field.frobenius(j) == j { 1 } else { 2 };
        let aut = if p == 2 {
            24
        } else if p == 3 {
            12
        } else if j == 0 {
            6
        } else if j == integer_in_field(&field, 1728) {
            4
        } else {
            2
        };
        let verdict = elliptic_type(degree, p, aut);
        let evidence = json!({
            "j": j,
            "j_field_degree": degree,
            "aut_order": aut,
            "verdict_field": format!("F_{}", p.pow(degree)),
        });
        (verdict_json(&verdict), Some(verdict), evidence)
    } else {
        (Value::Null, None, json!({ "note": "ordinary curve; the twist-type dichotomy does not apply" }))
    };
    Ok(match format {
        Format::Json => report_json(
            "elliptic",
            p,
            r,
            json!({ "mode": "coeffs", "coeffs": coeffs }),
            Some(&wd),
            ty,
            evidence,
        ),
        Format::Csv => {
            let mut rows = wd_kv_rows(&wd);
            if let Some(v) = &verdict {
                rows.push(("type".into(), v.label.to_string()));
                rows.push(("rule".into(), v.rule.clone()));
            }
            kv_csv(&rows)
        }
        Format::Table => {
            let mut s = format!(
                "model [a1, a2, a3, a4, a6] = {coeffs:?} over F_{}\n",
                field.q
            );
            weil_block(&mut s, &wd);
            match &verdict {
                Some(v) => {
                    let _ = writeln!(s, "type: {}", verdict_line(v));
                }
                None => {
                    let _ = writeln!(s, "type: not supersingular, no twist-type verdict");
                }
            }
            s
        }
    })
}

// ---------------------------------------------------------------------------
// surface

fn cmd_surface(a: &SurfaceArgs, format: Format) -> Result<String, CliError> {
    let q = check_prime_power(a.p, a.r)?;
    let rows = surface_table(a.p, a.r, a.a1, a.a2)?;
    let mut entries = Vec::new();
    for row in &rows {
        if !verify_surface_factorization(row, a.p, a.r) {
            return Err(CliError::Internal(format!(
                "case {}: the degree-{} base change does not split as the stated elliptic square",
                row.case, row.t0
            )));
        }
        let verdict = match surface_type(row, a.r) {
            Ok(v) => Some(v),
            Err(ClassError::ExcludedCase { .. }) => None,
            Err(e) => return Err(e.into()),
        };
        entries.push((row, verdict));
    }
    Ok(match format {
        Format::Json => {
            let list: Vec<Value> = entries
                .iter()
                .map(|(row, verdict)| {
                    json!({
                        "row": row,
                        "type": verdict.as_ref().map(verdict_json).unwrap_or(Value::Null),
                        "excluded": verdict.is_none(),
                    })
                })
                .collect();
            let ty = entries
                .iter()
                .find_map(|(_, v)| v.as_ref())
                .map(verdict_json)
                .unwrap_or(Value::Null);
            report_json(
                "surface",
                a.p,
                a.r,
                json!({ "a1": a.a1, "a2": a.a2 }),
                None,
                ty,
                json!({ "rows": list }),
            )
        }
        Format::Csv => {
            let mut s = String::from("case,a1,a2,t0,w_case,orders,period,parity,type\n");
            for (row, verdict) in &entries {
                let orders: Vec<String> = row.orders.iter().map(|o| o.to_string()).collect();
                let label = verdict
                    .as_ref()
                    .map(|v| v.label.to_string())
                    .unwrap_or_else(|| "excluded".into());
                let _ = writeln!(
                    s,
                    "{},{},{},{},{},{},{},{},{label}",
                    row.case,
                    row.a1,
                    row.a2,
                    row.t0,
                    row.w_case,
                    orders.join(";"),
                    row.period,
                    parity_str(row.parity)
                );
            }
            s
        }
        Format::Table => {
            let mut s = format!(
                "surface rows matching (a1, a2) = ({}, {}) over F_{q}\n",
                a.a1, a.a2
            );
            for (row, verdict) in &entries {
                let _ = writeln!(
                    s,
                    "case {}: splits at degree {} into the square of case {}, orders {:?}, period {}, parity {}",
                    row.case, row.t0, row.w_case, row.orders, row.period, parity_str(row.parity)
                );
                match verdict {
                    Some(v) => {
                        let _ = writeln!(s, "  type: {}", verdict_line(v));
                    }
                    None => {
                        let _ = writeln!(
                            s,
                            "  type: excluded (this class carries no principal polarization)"
                        );
                    }
                }
            }
            s
        }
    })
}

// ---------------------------------------------------------------------------
// genus3

fn cmd_genus3(a: &Genus3Args, format: Format) -> Result<String, CliError> {
    let field = make_field(2, a.r)?;
    if a.all {
        if a.c.is_some() || a.d.is_some() {
            return Err(CliError::Usage("--all conflicts with --c/--d".into()));
        }
        return genus3_all(&field, a.r, format);
    }
    let (c, d) = match (a.c, a.d) {
        (Some(c), Some(d)) => (c, d),
        _ => {
            return Err(CliError::Usage(
                "pass both --c and --d, or --all for the full sweep".into(),
            ))
        }
    };
    let spec = CurveSpec::new(field.clone(), Family::ArtinSchreier34 { c, d })?;
    let report = genus3_report(&spec)?;
    let wd = weil_data(&spec)?;
    Ok(match format {
        Format::Json => report_json(
            "genus3",
            2,
            a.r,
            json!({ "c": c, "d": d }),
            Some(&wd),
            verdict_json(&report.curve),
            json!({
                "report": report,
                "jacobian_type": verdict_json(&report.jacobian),
            }),
        ),
        Format::Csv => {
            let mut rows = vec![
                ("c".to_string(), c.to_string()),
                ("d".to_string(), d.to_string()),
            ];
            rows.extend(wd_kv_rows(&wd));
            rows.push(("h_rational".into(), report.h_rational.to_string()));
            rows.push(("twist_classes".into(), report.class_count.to_string()));
            rows.push(("curve_type".into(), report.curve.label.to_string()));
            rows.push(("jacobian_type".into(), report.jacobian.label.to_string()));
            rows.push(("rule".into(), report.curve.rule.clone()));
            kv_csv(&rows)
        }
        Format::Table => {
            let mut s = format!("genus-3 member (c, d) = ({c}, {d}) over F_{}\n", field.q);
            weil_block(&mut s, &wd);
            let _ = writeln!(s, "h rational: {}", report.h_rational);
            let _ = writeln!(s, "twist classes: {}", report.class_count);
            let parities: Vec<&str> = report.class_parities.iter().map(|&x| parity_str(x)).collect();
            let flips: Vec<&str> =
                report.class_flip_parities.iter().map(|&x| parity_str(x)).collect();
            let _ = writeln!(s, "class parities: [{}]", parities.join(", "));
            let _ = writeln!(s, "with inversion: [{}]", flips.join(", "));
            let _ = writeln!(s, "curve type: {}", verdict_line(&report.curve));
            let _ = writeln!(s, "jacobian type: {}", verdict_line(&report.jacobian));
            s
        }
    })
}

fn genus3_all(field: &Arc<FieldDesc>, r: u32, format: Format) -> Result<String, CliError> {
    use rayon::prelude::*;
    let pairs: Vec<(u64, u64)> = (1..field.q)
        .flat_map(|c| (1..field.q).map(move |d| (c, d)))
        .collect();
    let mut outcomes: Vec<((u64, u64), String, String)> = pairs
        .par_iter()
        .map(|&(c, d)| {
            let spec = CurveSpec::new(field.clone(), Family::ArtinSchreier34 { c, d })
                .expect("nonzero coefficients are valid");
            let report = genus3_report(&spec).expect("the sweep stays inside supported fields");
            (
                (c, d),
                report.curve.label.to_string(),
                report.jacobian.label.to_string(),
            )
        })
        .collect();
    // canonical order regardless of the thread pool
    outcomes.sort();
    let mut tally: std::collections::BTreeMap<(String, String), usize> = Default::default();
    for (_, cv, jv) in &outcomes {
        *tally.entry((cv.clone(), jv.clone())).or_default() += 1;
    }
    let total = outcomes.len();
    Ok(match format {
        Format::Json => {
            let list: Vec<Value> = tally
                .iter()
                .map(|((cv, jv), n)| json!({ "curve": cv, "jacobian": jv, "count": n }))
                .collect();
            report_json(
                "genus3",
                2,
                r,
                json!({ "mode": "all" }),
                None,
                Value::Null,
                json!({ "pairs": total, "tallies": list }),
            )
        }
        Format::Csv => {
            let mut s = String::from("curve_type,jacobian_type,count\n");
            for ((cv, jv), n) in &tally {
                let _ = writeln!(s, "{cv},{jv},{n}");
            }
            s
        }
        Format::Table => {
            let mut s = format!(
                "verdict tally over all {total} pairs (c, d) in F_{}* x F_{}*\n",
                field.q, field.q
            );
            for ((cv, jv), n) in &tally {
                let _ = writeln!(s, "curve {cv}, jacobian {jv}: {n}");
            }
            s
        }
    })
}

// ---------------------------------------------------------------------------
// curve

fn cmd_curve(a: &CurveArgs, format: Format) -> Result<String, CliError> {
    check_prime_power(a.p, a.r)?;
    let field = make_field(a.p, a.r)?;
    let family = match a.family {
        FamilyArg::Weierstrass => {
            let arr: [u64; 5] = a.coeffs.as_slice().try_into().map_err(|_| {
                CliError::Usage("weierstrass takes exactly 5 coefficients a1,a2,a3,a4,a6".into())
            })?;
            Family::WeierstrassE { a: arr }
        }
        FamilyArg::Hyperelliptic => Family::HyperellipticOdd { f: a.coeffs.clone() },
        FamilyArg::As34 => {
            let arr: [u64; 2] = a.coeffs.as_slice().try_into().map_err(|_| {
                CliError::Usage("as34 takes exactly 2 coefficients c,d".into())
            })?;
            Family::ArtinSchreier34 { c: arr[0], d: arr[1] }
        }
        FamilyArg::Fermat => {
            let arr: [u64; 1] = a.coeffs.as_slice().try_into().map_err(|_| {
                CliError::Usage("fermat takes exactly 1 coefficient s".into())
            })?;
            Family::FermatPlane { s: arr[0] }
        }
    };
    let spec = CurveSpec::new(field.clone(), family)?;
    let wd = weil_data(&spec)?;
    let ext = match a.ext {
        Some(m) => {
            if m == 0 {
                return Err(CliError::Usage("--ext must be at least 1".into()));
            }
            Some((m, count_points(&spec, m)?))
        }
        None => None,
    };
    let evidence = match ext {
        Some((m, n)) => json!({ "extension_count": { "m": m, "points": n } }),
        None => Value::Null,
    };
    Ok(match format {
        Format::Json => report_json(
            "curve",
            a.p,
            a.r,
            json!({
                "family": match a.family {
                    FamilyArg::Weierstrass => "weierstrass",
                    FamilyArg::Hyperelliptic => "hyperelliptic",
                    FamilyArg::As34 => "as34",
                    FamilyArg::Fermat => "fermat",
                },
                "coeffs": a.coeffs,
                "ext": a.ext,
            }),
            Some(&wd),
            Value::Null,
            evidence,
        ),
        Format::Csv => {
            let mut rows = wd_kv_rows(&wd);
            if let Some((m, n)) = ext {
                rows.push((format!("points_over_extension_{m}"), n.to_string()));
            }
            kv_csv(&rows)
        }
        Format::Table => {
            let mut s = format!("curve of genus {} over F_{}\n", wd.g, field.q);
            weil_block(&mut s, &wd);
            if let Some((m, n)) = ext {
                let _ = writeln!(s, "points over F_{{{}^{m}}}: {n}", field.q);
            }
            s
        }
    })
}

// ---------------------------------------------------------------------------
// census

fn cmd_census(a: &CensusArgs, format: Format) -> Result<String, CliError> {
    check_prime_power(a.p, a.r)?;
    let rec = census_elliptic(a.p, a.r)?;
    Ok(match format {
        Format::Json => report_json(
            "census",
            a.p,
            a.r,
            Value::Null,
            None,
            Value::Null,
            json!({ "census": rec }),
        ),
        Format::Csv => {
            let mut s = String::from("beta,class_count,period,parity\n");
            for g in &rec.groups {
                let _ = writeln!(
                    s,
                    "{},{},{},{}",
                    g.beta,
                    g.class_count,
                    g.period,
                    parity_str(g.parity)
                );
            }
            s
        }
        Format::Table => {
            let mut s = format!(
                "isomorphism classes of supersingular elliptic curves over F_{}\n",
                rec.q
            );
            let _ = writeln!(s, "{:>6} {:>8} {:>7}  parity", "beta", "classes", "period");
            for g in &rec.groups {
                let _ = writeln!(
                    s,
                    "{:>6} {:>8} {:>7}  {}",
                    g.beta,
                    g.class_count,
                    g.period,
                    parity_str(g.parity)
                );
            }
            let _ = writeln!(
                s,
                "totals: {} classes, {} with parity +1, {} with parity -1, excess {}",
                rec.total_classes, rec.plus_classes, rec.minus_classes, rec.parity_excess
            );
            s
        }
    })
}

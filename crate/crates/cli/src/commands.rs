use std::process::ExitCode;

use num_rational::Ratio;
use serde::Serialize;
use tc_core::algebra::{
    lower_bound_certificate, zdcl_brute_force_with_cap, zdcl_degree_one, DEFAULT_BRUTE_CAP,
};
use tc_core::planner::{plan as plan_query, PathPoint};
use tc_core::simulate::{simulate as run_simulation, SimulationConfig};
use tc_core::{
    compute_bounds, parse_turns, AlgebraSignature, Error, PlannerQuery, SkeletonPoint, TcBounds,
};

use crate::grid::parse_grid;

/// Exit 1 for failed mathematical checks, 2 for bad input.
pub struct Failure {
    pub code: ExitCode,
    pub message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Self {
            code: ExitCode::from(2),
            message: message.into(),
        }
    }

    fn check(message: impl Into<String>) -> Self {
        Self {
            code: ExitCode::from(1),
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::CertificateFailure { .. } | Error::BoundMismatch { .. } => {
                Failure::check(e.to_string())
            }
            _ => Failure::usage(e.to_string()),
        }
    }
}

type CmdResult = Result<ExitCode, Failure>;

fn signature(n: usize, r: usize) -> Result<AlgebraSignature, Failure> {
    Ok(AlgebraSignature::new(n, r)?)
}

fn print_json<T: Serialize>(value: &T) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("serializable")
    );
}

pub fn tc(
    n: Option<usize>,
    r: Option<usize>,
    grid: Option<&str>,
    json: bool,
    csv: bool,
) -> CmdResult {
    let signatures = match (n, r, grid) {
        (Some(n), Some(r), None) => vec![(n, r)],
        (None, None, Some(spec)) => parse_grid(spec).map_err(Failure::usage)?.signatures(),
        _ => return Err(Failure::usage("give either N R or --grid")),
    };
    let rows = signatures
        .into_iter()
        .map(|(n, r)| compute_bounds(n, r))
        .collect::<Result<Vec<TcBounds>, Error>>()?;

    if json {
        print_json(&rows);
    } else if csv {
        println!("n,r,lower,upper_constructive,upper_dimension,tc");
        for b in &rows {
            println!(
                "{},{},{},{},{},{}",
                b.n, b.r, b.lower, b.upper_constructive, b.upper_dimension, b.tc
            );
        }
    } else {
        println!(
            "{:>3} {:>3} {:>6} {:>12} {:>10} {:>4}  planner",
            "n", "r", "lower", "constructive", "dimension", "tc"
        );
        for b in &rows {
            println!(
                "{:>3} {:>3} {:>6} {:>12} {:>10} {:>4}  {}",
                b.n,
                b.r,
                b.lower,
                b.upper_constructive,
                b.upper_dimension,
                b.tc,
                if b.constructive_tight() {
                    "tight"
                } else {
                    "non-tight"
                }
            );
        }
    }
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct CertificateDump {
    n: usize,
    r: usize,
    k: usize,
    indices: Vec<usize>,
    product_terms: usize,
    bidegree: (usize, usize),
    component_terms: usize,
    sample_term: Option<String>,
    lower_bound: usize,
}

pub fn verify_lower_bound(n: usize, r: usize, set: Option<&[usize]>, json: bool) -> CmdResult {
    let sig = signature(n, r)?;
    let cert = lower_bound_certificate(sig, set)?;
    let dump = CertificateDump {
        n,
        r,
        k: cert.k,
        indices: cert.indices.clone(),
        product_terms: cert.product.len(),
        bidegree: cert.bidegree,
        component_terms: cert.component.len(),
        sample_term: cert.sample_term().map(|(u, v, c)| {
            let sign = if c < 0 { "-" } else { "+" };
            format!("{sign}{u}(x){v}")
        }),
        lower_bound: cert.lower_bound(),
    };
    if json {
        print_json(&dump);
        return Ok(ExitCode::SUCCESS);
    }
    let factors: Vec<String> = std::iter::once(0)
        .chain(cert.indices.iter().copied())
        .map(|i| format!("z{i}"))
        .collect();
    println!("signature: n = {n}, r = {r}");
    println!("k = min(n - 1, 2r - 2) = {}", cert.k);
    println!("J = {:?}", cert.indices);
    println!(
        "product {} has {} terms",
        factors.join("*"),
        dump.product_terms
    );
    println!(
        "component ({}, {}) term count: {}",
        cert.bidegree.0, cert.bidegree.1, dump.component_terms
    );
    if let Some(term) = &dump.sample_term {
        println!("sample basis term: {term}");
    }
    println!("nonzero: TC >= {}", cert.lower_bound());
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct Sample {
    t: String,
    #[serde(flatten)]
    point: PathPoint,
}

#[derive(Serialize)]
struct PlanDump {
    n: usize,
    r: usize,
    mode: &'static str,
    domain: usize,
    rules: usize,
    agreement: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    circle_rule: Option<usize>,
    samples: Vec<Sample>,
}

fn parse_point(list: &str, sig: AlgebraSignature, product: bool) -> Result<SkeletonPoint, Failure> {
    let mut turns = parse_turns(list)?;
    let circle = if product {
        if turns.is_empty() {
            return Err(Failure::usage(
                "product points need a circle coordinate first",
            ));
        }
        Some(turns.remove(0))
    } else {
        None
    };
    Ok(SkeletonPoint::new(turns, circle, sig)?)
}

pub fn plan(n: usize, r: usize, from: &str, to: &str, steps: usize, product: bool) -> CmdResult {
    let sig = signature(n, r)?;
    if steps == 0 {
        return Err(Failure::usage("--steps must be at least 1"));
    }
    let from = parse_point(from, sig, product)?;
    let to = parse_point(to, sig, product)?;
    let query = PlannerQuery::new(from, to, sig)?;
    let path = plan_query(&query, sig)?;
    let samples = path
        .sample_times(steps)
        .into_iter()
        .map(|t| {
            let point = path.evaluate(t)?;
            Ok(Sample {
                t: format_time(t),
                point,
            })
        })
        .collect::<Result<Vec<_>, Error>>()?;
    print_json(&PlanDump {
        n,
        r,
        mode: if product { "product" } else { "skeleton" },
        domain: path.domain(),
        rules: path.rule_count(),
        agreement: path.agreement().0.iter().copied().collect(),
        circle_rule: path.circle_rule().map(|c| c.index),
        samples,
    });
    Ok(ExitCode::SUCCESS)
}

fn format_time(t: Ratio<i64>) -> String {
    if *t.denom() == 1 {
        t.numer().to_string()
    } else {
        format!("{}/{}", t.numer(), t.denom())
    }
}

pub fn simulate(
    n: usize,
    r: usize,
    queries: usize,
    steps: usize,
    seed: u64,
    product: bool,
    denominator: i64,
) -> CmdResult {
    let sig = signature(n, r)?;
    let mut config = SimulationConfig::new(sig, queries, seed, product);
    config.steps = steps;
    config.denominator_bound = denominator;
    let report = run_simulation(&config)?;
    print_json(&report);
    if report.passed() {
        Ok(ExitCode::SUCCESS)
    } else {
        Err(Failure::check(format!(
            "{} invariant violations, first: {}",
            report.violations.len(),
            serde_json::to_string(&report.violations[0]).expect("serializable")
        )))
    }
}

#[derive(Serialize)]
struct ZdclReport {
    n: usize,
    r: usize,
    zdcl_degree_one: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    zdcl_brute_force: Option<usize>,
    formula: usize,
    tc: usize,
    conjecture: &'static str,
}

fn brute_cap() -> Result<usize, Failure> {
    match std::env::var("TC_BRUTE_CAP") {
        Ok(v) => v
            .parse()
            .map_err(|_| Failure::usage(format!("TC_BRUTE_CAP must be an integer, got {v:?}"))),
        Err(_) => Ok(DEFAULT_BRUTE_CAP),
    }
}

pub fn search_zdcl(n: usize, r: usize, brute: bool, json: bool) -> CmdResult {
    let sig = signature(n, r)?;
    let tc = compute_bounds(n, r)?.tc;
    let degree_one = zdcl_degree_one(sig, n + 1);
    let brute = if brute {
        Some(zdcl_brute_force_with_cap(sig, brute_cap()?)?.zdcl)
    } else {
        None
    };
    let best = brute.unwrap_or(0).max(degree_one);
    let report = ZdclReport {
        n,
        r,
        zdcl_degree_one: degree_one,
        zdcl_brute_force: brute,
        formula: n.min(2 * r - 1),
        tc,
        conjecture: if best + 1 == tc {
            "consistent"
        } else {
            "inconsistent"
        },
    };
    if json {
        print_json(&report);
    } else {
        println!("signature: n = {n}, r = {r}");
        println!("zdcl (generator zero-divisors): {}", report.zdcl_degree_one);
        if let Some(b) = brute {
            println!("zdcl (brute force): {b}");
        }
        println!("min(n, 2r - 1): {}", report.formula);
        println!("tc: {tc}");
        println!("conjecture: {}", report.conjecture);
    }
    if report.conjecture == "consistent" {
        Ok(ExitCode::SUCCESS)
    } else {
        Err(Failure::check("zdcl + 1 differs from TC"))
    }
}

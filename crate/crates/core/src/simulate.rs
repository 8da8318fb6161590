//! Randomized verification of the planner: endpoint exactness, skeleton
//! membership along every path, the domain partition, and sampled
//! within-domain continuity.

use std::collections::BTreeMap;
use std::time::Instant;

use num_rational::Ratio;
use num_traits::{One, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::AlgebraSignature;
use crate::planner::{plan, PlannerPath, PlannerQuery};
use crate::skeleton::{membership, sample, SkeletonPoint};
use crate::turn::{ratio_to_f64, Rational, Turn};
use crate::{Error, Result};

pub const DEFAULT_STEPS: usize = 256;
pub const DEFAULT_DENOMINATOR_BOUND: i64 = 12;

/// Largest accepted `deviation / epsilon` for within-domain perturbations.
///
/// For sampled turns with denominators at most 12 the travel window of a
/// moving coordinate is at least `1 - tau(1/12) - tau(0) > 0.18`, and
/// `|tau'| <= pi / sqrt 2`; together these bound the ratio by about 28.
pub const CONTINUITY_BOUND: f64 = 32.0;

#[derive(Debug, Clone)]
pub struct SimulationConfig {
    pub signature: AlgebraSignature,
    pub queries: usize,
    pub steps: usize,
    pub seed: u64,
    pub product: bool,
    pub denominator_bound: i64,
    pub epsilon: Rational,
    pub continuity_bound: f64,
}

impl SimulationConfig {
    pub fn new(signature: AlgebraSignature, queries: usize, seed: u64, product: bool) -> Self {
        Self {
            signature,
            queries,
            steps: DEFAULT_STEPS,
            seed,
            product,
            denominator_bound: DEFAULT_DENOMINATOR_BOUND,
            epsilon: Ratio::new(1, 1000),
            continuity_bound: CONTINUITY_BOUND,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ViolationKind {
    Endpoint,
    Membership,
    Partition,
    Continuity,
}

#[derive(Debug, Clone, Serialize)]
pub struct Violation {
    pub kind: ViolationKind,
    pub query: PlannerQuery,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct SimulationReport {
    pub n: usize,
    pub r: usize,
    pub mode: &'static str,
    pub queries: usize,
    pub steps: usize,
    pub seed: u64,
    /// Query count per domain index.
    pub histogram: Vec<usize>,
    pub endpoint_violations: usize,
    pub membership_violations: usize,
    pub partition_violations: usize,
    pub continuity_violations: usize,
    pub continuity_checks: usize,
    pub wrap_crossings: usize,
    pub max_continuity_ratio: f64,
    pub continuity_bound: f64,
    pub wall_time_ms: u64,
    pub violations: Vec<Violation>,
}

impl SimulationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// A random query. Coordinates, the circle factor, or the whole point are
/// sometimes copied across so that every domain gets exercised.
pub fn random_query<R: Rng + ?Sized>(
    sig: AlgebraSignature,
    rng: &mut R,
    denominator_bound: i64,
    product: bool,
) -> PlannerQuery {
    let from = sample(sig, rng, denominator_bound, product);
    let mut to = sample(sig, rng, denominator_bound, product);
    if rng.gen_ratio(1, 16) {
        to = from.clone();
    }
    let mut base = to.base().to_vec();
    for j in 0..base.len() {
        if rng.gen_ratio(1, 4) {
            let previous = base[j];
            base[j] = from.base()[j];
            if !membership(&base, sig).expect("length").member {
                base[j] = previous;
            }
        }
    }
    let circle = match (from.circle(), to.circle()) {
        (Some(a), Some(b)) => Some(match rng.gen_range(0..4) {
            0 => a,
            1 => a.rotate(Ratio::new(1, 2)),
            _ => b,
        }),
        _ => None,
    };
    let to = SkeletonPoint::new(base, circle, sig).expect("membership kept");
    PlannerQuery::new(from, to, sig).expect("sampled points are valid")
}

fn arc(a: Turn, b: Turn) -> Rational {
    let d = a.ccw_delta(b);
    d.min(Rational::one() - d)
}

fn random_sign<R: Rng + ?Sized>(rng: &mut R, eps: Rational) -> Rational {
    if rng.gen_bool(0.5) {
        eps
    } else {
        -eps
    }
}

/// A base query and a perturbation of it by at most `eps` per coordinate
/// that stays in the same local domain along the whole segment.
///
/// Basepoint coordinates are left alone. With probability 1/4 one moving
/// coordinate of the base is first placed at `1 - eps/2`, so that its
/// perturbation crosses the argument wrap at the basepoint. The returned
/// flag records whether that happened.
pub fn perturb_within_domain<R: Rng + ?Sized>(
    query: &PlannerQuery,
    sig: AlgebraSignature,
    rng: &mut R,
    eps: Rational,
) -> (PlannerQuery, PlannerQuery, bool) {
    let mut u = query.from().base().to_vec();
    let mut v = query.to().base().to_vec();
    let wrap_value = Turn::wrapping(-eps / 2);

    // (coordinate, true if on the `from` side)
    let mut wrap: Option<(usize, bool)> = None;
    if rng.gen_ratio(1, 4) {
        let candidates: Vec<(usize, bool)> = (0..u.len())
            .flat_map(|j| [(j, true), (j, false)])
            .filter(|&(j, on_from)| {
                let (mine, other) = if on_from { (u[j], v[j]) } else { (v[j], u[j]) };
                mine != other && !mine.is_basepoint() && other.basepoint_distance() > eps * 4
            })
            .collect();
        if !candidates.is_empty() {
            let (j, on_from) = candidates[rng.gen_range(0..candidates.len())];
            if on_from {
                u[j] = wrap_value;
            } else {
                v[j] = wrap_value;
            }
            wrap = Some((j, on_from));
        }
    }
    let base_u = u.clone();
    let base_v = v.clone();

    let movable = |t: Turn| !t.is_basepoint() && (t == wrap_value || t.basepoint_distance() > eps);
    for j in 0..u.len() {
        if u[j] == v[j] {
            if !u[j].is_basepoint() && u[j].basepoint_distance() > eps {
                let d = random_sign(rng, eps);
                u[j] = u[j].rotate(d);
                v[j] = v[j].rotate(d);
            }
            continue;
        }
        let pick = |rng: &mut R, side: bool, t: Turn| -> Rational {
            if wrap == Some((j, side)) {
                eps
            } else if movable(t) {
                random_sign(rng, eps)
            } else {
                Rational::zero()
            }
        };
        let mut du = pick(rng, true, u[j]);
        let mut dv = pick(rng, false, v[j]);
        if arc(u[j], v[j]) <= eps * 2 {
            // keep the segment off the diagonal
            if du.is_zero() || dv.is_zero() {
                du = Rational::zero();
                dv = Rational::zero();
            } else {
                dv = du;
            }
        }
        u[j] = u[j].rotate(du);
        v[j] = v[j].rotate(dv);
    }

    let (circle_u, circle_v) = match (query.from().circle(), query.to().circle()) {
        (Some(a), Some(b)) => {
            let ccw = a.ccw_delta(b);
            let half = Ratio::new(1, 2);
            let margin = eps * 2;
            let free = (ccw > margin && ccw < half - margin)
                || (ccw > half + margin && ccw < Rational::one() - margin);
            let da = random_sign(rng, eps);
            let db = if free { random_sign(rng, eps) } else { da };
            (Some(a.rotate(da)), Some(b.rotate(db)))
        }
        _ => (None, None),
    };

    let base = PlannerQuery::new(
        SkeletonPoint::new(base_u, query.from().circle(), sig).expect("support unchanged"),
        SkeletonPoint::new(base_v, query.to().circle(), sig).expect("support unchanged"),
        sig,
    )
    .expect("same mode");
    let perturbed = PlannerQuery::new(
        SkeletonPoint::new(u, circle_u, sig).expect("support unchanged"),
        SkeletonPoint::new(v, circle_v, sig).expect("support unchanged"),
        sig,
    )
    .expect("same mode");
    (base, perturbed, wrap.is_some())
}

/// Max-metric deviation of two paths over the sample times of both.
pub fn path_deviation(a: &PlannerPath, b: &PlannerPath, steps: usize) -> f64 {
    let mut times = a.sample_times(steps);
    times.extend(b.sample_times(steps));
    times.sort();
    times.dedup();
    times
        .into_iter()
        .map(|t| {
            let pa = a.evaluate(t).expect("t in range");
            let pb = b.evaluate(t).expect("t in range");
            pa.distance(&pb)
        })
        .fold(0.0, f64::max)
}

/// Independent partition check: over all subsets `J` of coordinates, count
/// those with `u_j = u'_j` exactly when `j` is in `J`.
fn matching_agreement_sets(query: &PlannerQuery) -> Option<Vec<u64>> {
    let u = query.from().base();
    let v = query.to().base();
    if u.len() > 16 {
        return None;
    }
    Some(
        (0u64..(1 << u.len()))
            .filter(|mask| (0..u.len()).all(|j| ((mask >> j) & 1 == 1) == (u[j] == v[j])))
            .collect(),
    )
}

struct Outcome {
    domain: Option<usize>,
    violations: Vec<Violation>,
    continuity_ratio: Option<f64>,
    wrapped: bool,
}

fn check_query(index: usize, config: &SimulationConfig) -> Outcome {
    let sig = config.signature;
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    rng.set_stream(index as u64);
    let query = random_query(sig, &mut rng, config.denominator_bound, config.product);

    let mut violations = Vec::new();
    let mut flag = |kind, query: &PlannerQuery, detail: String| {
        violations.push(Violation {
            kind,
            query: query.clone(),
            detail,
        })
    };

    let path = match plan(&query, sig) {
        Ok(p) => p,
        Err(e) => {
            flag(
                ViolationKind::Endpoint,
                &query,
                format!("planning failed: {e}"),
            );
            return Outcome {
                domain: None,
                violations,
                continuity_ratio: None,
                wrapped: false,
            };
        }
    };

    let domain = path.domain();
    let domains = if config.product { sig.n() + 1 } else { sig.n() };
    if domain >= domains || path.rule_count() != domains {
        flag(
            ViolationKind::Partition,
            &query,
            format!("domain {domain} of {domains}"),
        );
    }
    if let Some(masks) = matching_agreement_sets(&query) {
        let expected: u64 = path.agreement().0.iter().map(|j| 1u64 << (j - 1)).sum();
        if masks != [expected] || path.agreement().len() != path.skeleton_domain() {
            flag(
                ViolationKind::Partition,
                &query,
                format!(
                    "agreement {:?} matches {} sets",
                    path.agreement().0,
                    masks.len()
                ),
            );
        }
    }

    let start = path.evaluate(Rational::zero()).expect("t = 0");
    let end = path.evaluate(Rational::one()).expect("t = 1");
    if !start.equals_exactly(query.from()) || !end.equals_exactly(query.to()) {
        flag(
            ViolationKind::Endpoint,
            &query,
            "endpoint mismatch".to_string(),
        );
    }

    let needed = sig.n() - sig.r();
    for t in path.sample_times(config.steps) {
        let point = path.evaluate(t).expect("t in range");
        if point.exact_zero_count() < needed {
            flag(
                ViolationKind::Membership,
                &query,
                format!(
                    "t = {t}: {} exact basepoint coordinates, need {needed}",
                    point.exact_zero_count()
                ),
            );
            break;
        }
    }

    let (base, perturbed, wrapped) = perturb_within_domain(&query, sig, &mut rng, config.epsilon);
    let base_path = plan(&base, sig).expect("valid base");
    let perturbed_path = plan(&perturbed, sig).expect("valid perturbation");
    let mut continuity_ratio = None;
    if base_path.agreement() != perturbed_path.agreement()
        || base_path.domain() != perturbed_path.domain()
    {
        flag(
            ViolationKind::Continuity,
            &base,
            "perturbation left the local domain".to_string(),
        );
    } else {
        let ratio = path_deviation(&base_path, &perturbed_path, config.steps)
            / ratio_to_f64(config.epsilon);
        if ratio.is_nan() || ratio > config.continuity_bound {
            flag(
                ViolationKind::Continuity,
                &base,
                format!(
                    "deviation ratio {ratio:.3} exceeds {}",
                    config.continuity_bound
                ),
            );
        }
        continuity_ratio = Some(ratio);
    }

    Outcome {
        domain: Some(domain),
        violations,
        continuity_ratio,
        wrapped,
    }
}

/// Runs `config.queries` random queries in parallel. Results depend only on
/// the configuration, not on scheduling.
pub fn simulate(config: &SimulationConfig) -> Result<SimulationReport> {
    if config.queries == 0 {
        return Err(Error::InvalidArgument("queries must be at least 1".into()));
    }
    if config.steps == 0 {
        return Err(Error::InvalidArgument("steps must be at least 1".into()));
    }
    if config.denominator_bound < 2 {
        return Err(Error::InvalidArgument(
            "denominator bound must be at least 2".into(),
        ));
    }
    let started = Instant::now();
    let sig = config.signature;
    let outcomes: Vec<Outcome> = (0..config.queries)
        .into_par_iter()
        .map(|i| check_query(i, config))
        .collect();

    let domains = if config.product { sig.n() + 1 } else { sig.n() };
    let mut histogram = vec![0; domains];
    let mut by_query: BTreeMap<(ViolationKind, String), Violation> = BTreeMap::new();
    let mut max_ratio: f64 = 0.0;
    let mut continuity_checks = 0;
    let mut wrap_crossings = 0;
    for outcome in outcomes {
        if let Some(d) = outcome.domain.filter(|&d| d < domains) {
            histogram[d] += 1;
        }
        if let Some(ratio) = outcome.continuity_ratio {
            continuity_checks += 1;
            max_ratio = max_ratio.max(ratio);
            wrap_crossings += usize::from(outcome.wrapped);
        }
        for v in outcome.violations {
            let key = serde_json_key(&v.query);
            by_query.entry((v.kind, key)).or_insert(v);
        }
    }
    let count = |kind| by_query.keys().filter(|(k, _)| *k == kind).count();

    Ok(SimulationReport {
        n: sig.n(),
        r: sig.r(),
        mode: if config.product {
            "product"
        } else {
            "skeleton"
        },
        queries: config.queries,
        steps: config.steps,
        seed: config.seed,
        histogram,
        endpoint_violations: count(ViolationKind::Endpoint),
        membership_violations: count(ViolationKind::Membership),
        partition_violations: count(ViolationKind::Partition),
        continuity_violations: count(ViolationKind::Continuity),
        continuity_checks,
        wrap_crossings,
        max_continuity_ratio: max_ratio,
        continuity_bound: config.continuity_bound,
        wall_time_ms: started.elapsed().as_millis() as u64,
        violations: by_query.into_values().collect(),
    })
}

fn serde_json_key(query: &PlannerQuery) -> String {
    let fmt_point = |p: &SkeletonPoint| {
        let coords: Vec<String> = p.base().iter().map(Turn::to_string).collect();
        match p.circle() {
            Some(c) => format!("{};{c}", coords.join(",")),
            None => coords.join(","),
        }
    };
    format!("{}->{}", fmt_point(query.from()), fmt_point(query.to()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig(n: usize, r: usize) -> AlgebraSignature {
        AlgebraSignature::new(n, r).unwrap()
    }

    #[test]
    fn small_runs_pass_and_are_deterministic() {
        let config = SimulationConfig::new(sig(5, 2), 200, 7, false);
        let a = simulate(&config).unwrap();
        assert!(a.passed(), "{:?}", a.violations);
        let b = simulate(&config).unwrap();
        assert_eq!(a.histogram, b.histogram);
        assert_eq!(a.max_continuity_ratio, b.max_continuity_ratio);
        assert_eq!(a.histogram.iter().sum::<usize>(), 200);
    }

    #[test]
    fn torus_histogram_covers_both_domains() {
        let report = simulate(&SimulationConfig::new(sig(2, 2), 300, 1, false)).unwrap();
        assert!(report.passed());
        assert_eq!(report.histogram.len(), 2);
        assert!(report.histogram.iter().all(|&c| c > 0));

        let report = simulate(&SimulationConfig::new(sig(2, 2), 300, 1, true)).unwrap();
        assert!(report.passed());
        assert_eq!(report.histogram.len(), 3);
        assert!(report.histogram.iter().all(|&c| c > 0));
    }

    #[test]
    fn rejects_empty_runs() {
        let mut config = SimulationConfig::new(sig(3, 2), 0, 1, false);
        assert!(simulate(&config).is_err());
        config.queries = 1;
        config.steps = 0;
        assert!(simulate(&config).is_err());
    }

    #[test]
    fn perturbation_crosses_wrap() {
        let s = sig(4, 3);
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let eps = Ratio::new(1, 1000);
        let mut crossings = 0;
        for _ in 0..400 {
            let q = random_query(s, &mut rng, 12, false);
            let (base, pert, wrapped) = perturb_within_domain(&q, s, &mut rng, eps);
            let (pa, pb) = (plan(&base, s).unwrap(), plan(&pert, s).unwrap());
            assert_eq!(pa.agreement(), pb.agreement());
            if wrapped {
                crossings += 1;
                let near_one =
                    |p: &SkeletonPoint| p.base().iter().any(|t| t.value() > Ratio::new(998, 1000));
                assert!(near_one(base.from()) || near_one(base.to()));
            }
            assert!(path_deviation(&pa, &pb, 64) / 1e-3 <= CONTINUITY_BOUND);
        }
        assert!(crossings > 20);
    }

    #[test]
    fn detects_discontinuity_across_diagonal() {
        // Moving a coordinate past its target flips a tiny ccw arc into a
        // near-full turn; the deviation check must see it.
        let s = sig(2, 2);
        let p = |a: i64| {
            SkeletonPoint::new(vec![Turn::from_fraction(a, 1000).unwrap()], None, s).unwrap()
        };
        let q1 = PlannerQuery::new(p(499), p(500), s).unwrap();
        let q2 = PlannerQuery::new(p(501), p(500), s).unwrap();
        let d = path_deviation(&plan(&q1, s).unwrap(), &plan(&q2, s).unwrap(), 256);
        assert!(d / 2e-3 > CONTINUITY_BOUND);
    }
}

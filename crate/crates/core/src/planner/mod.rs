//! The explicit motion planner on the skeleton with `n` local rules, and
//! its product with a circle planner on `M0` with `n + 1` local rules.
//!
//! For a query `(u, u')` the agreement set `J = {j : u_j = u'_j}` selects
//! the local domain `F_J`; the domain index is `|J|`. Coordinates in `J`
//! stay fixed. Every other coordinate rests at `u_j` until `tau(u_j)`,
//! travels counterclockwise to `u'_j` at constant speed, and rests at
//! `u'_j` from `1 - tau(u'_j)` on. Since `tau` of the basepoint is exactly
//! `1/2`, coordinates leaving the basepoint start moving when the
//! coordinates arriving there have already stopped, which keeps every
//! intermediate point in the skeleton.

mod circle;
mod rules;

use std::collections::BTreeSet;

use num_rational::Ratio;
use num_traits::{One, Zero};
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

pub use circle::CircleRule;
pub use rules::{tau, zeta, zeta_approx, PhaseTime};

use crate::algebra::AlgebraSignature;
use crate::skeleton::SkeletonPoint;
use crate::turn::{ratio_to_f64, Rational, Turn};
use crate::{Error, Result};

/// An ordered pair of points with the same signature and mode.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct PlannerQuery {
    from: SkeletonPoint,
    to: SkeletonPoint,
}

impl PlannerQuery {
    pub fn new(from: SkeletonPoint, to: SkeletonPoint, sig: AlgebraSignature) -> Result<Self> {
        from.validate(sig)?;
        to.validate(sig)?;
        if from.is_product() != to.is_product() {
            return Err(Error::ModeMismatch);
        }
        Ok(Self { from, to })
    }

    pub fn from(&self) -> &SkeletonPoint {
        &self.from
    }

    pub fn to(&self) -> &SkeletonPoint {
        &self.to
    }

    pub fn is_product(&self) -> bool {
        self.from.is_product()
    }
}

/// The coordinates, numbered from 1, on which both endpoints agree exactly.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize)]
#[serde(transparent)]
pub struct AgreementSet(pub BTreeSet<usize>);

impl AgreementSet {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, j: usize) -> bool {
        self.0.contains(&j)
    }
}

/// Finds the local domain `F_J` of the skeleton part of `query`; returns `J`
/// and the domain index `|J|`, which lies in `0..n`.
pub fn classify(query: &PlannerQuery, sig: AlgebraSignature) -> (AgreementSet, usize) {
    debug_assert_eq!(query.from.base().len(), sig.base_dim());
    let agreement = AgreementSet(
        query
            .from
            .base()
            .iter()
            .zip(query.to.base())
            .enumerate()
            .filter(|(_, (a, b))| a == b)
            .map(|(j, _)| j + 1)
            .collect(),
    );
    let index = agreement.len();
    (agreement, index)
}

/// Local rule for one torus coordinate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CoordinateRule {
    Constant(Turn),
    Moving {
        from: Turn,
        to: Turn,
        /// `tau(from)`.
        wait_start: PhaseTime,
        /// `1 - tau(to)`.
        wait_end: PhaseTime,
        /// Counterclockwise displacement `(to - from) mod 1`, in `(0, 1)`.
        delta: Rational,
    },
}

impl CoordinateRule {
    fn new(from: Turn, to: Turn) -> Self {
        if from == to {
            return CoordinateRule::Constant(from);
        }
        CoordinateRule::Moving {
            from,
            to,
            wait_start: tau(from),
            wait_end: tau(to).complement(),
            delta: from.ccw_delta(to),
        }
    }

    /// Value at time `t`. First phase is right-open, the travel phase is
    /// closed, the last phase is left-open; at the two switching times the
    /// travel formula gives the resting value, which is returned exactly.
    pub fn evaluate(&self, t: Rational) -> Coord {
        use std::cmp::Ordering::*;
        match *self {
            CoordinateRule::Constant(turn) => Coord::Exact(turn),
            CoordinateRule::Moving {
                from,
                to,
                wait_start,
                wait_end,
                delta,
            } => match (wait_start.cmp_time(t), wait_end.cmp_time(t)) {
                (Greater | Equal, _) => Coord::Exact(from),
                (_, Less | Equal) => Coord::Exact(to),
                (Less, Greater) => {
                    let s = match (wait_start.exact(), wait_end.exact()) {
                        (Some(a), Some(b)) => ratio_to_f64((t - a) / (b - a)),
                        _ => {
                            let a = wait_start.to_f64();
                            (ratio_to_f64(t) - a) / (wait_end.to_f64() - a)
                        }
                    };
                    Coord::Approx(rules::wrap_unit(from.to_f64() + s * ratio_to_f64(delta)))
                }
            },
        }
    }

    pub fn phase_times(&self) -> Option<(PhaseTime, PhaseTime)> {
        match *self {
            CoordinateRule::Constant(_) => None,
            CoordinateRule::Moving {
                wait_start,
                wait_end,
                ..
            } => Some((wait_start, wait_end)),
        }
    }
}

/// A coordinate of an evaluated path point: exact in resting phases,
/// floating-point while moving.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Coord {
    Exact(Turn),
    Approx(f64),
}

impl Coord {
    pub fn to_f64(self) -> f64 {
        match self {
            Coord::Exact(t) => t.to_f64(),
            Coord::Approx(x) => x,
        }
    }

    pub fn is_exact_zero(self) -> bool {
        matches!(self, Coord::Exact(t) if t.is_basepoint())
    }

    pub fn exact(self) -> Option<Turn> {
        match self {
            Coord::Exact(t) => Some(t),
            Coord::Approx(_) => None,
        }
    }

    /// Arc distance in turns, in `[0, 1/2]`.
    pub fn distance(self, other: Coord) -> f64 {
        let d = (self.to_f64() - other.to_f64()).rem_euclid(1.0);
        d.min(1.0 - d)
    }
}

/// Exact coordinates as `"p/q"`, moving ones as `{"approx": x}`.
impl Serialize for Coord {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Coord::Exact(t) => t.serialize(serializer),
            Coord::Approx(x) => {
                let mut map = serializer.serialize_map(Some(1))?;
                map.serialize_entry("approx", x)?;
                map.end()
            }
        }
    }
}

/// A point of an evaluated path.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PathPoint {
    pub coords: Vec<Coord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub circle: Option<Coord>,
}

impl PathPoint {
    /// Number of torus coordinates exactly at the basepoint.
    pub fn exact_zero_count(&self) -> usize {
        self.coords.iter().filter(|c| c.is_exact_zero()).count()
    }

    /// True iff every coordinate is exact and equals the one of `p`.
    pub fn equals_exactly(&self, p: &SkeletonPoint) -> bool {
        self.coords.len() == p.base().len()
            && self
                .coords
                .iter()
                .zip(p.base())
                .all(|(c, t)| c.exact() == Some(*t))
            && self.circle.map(Coord::exact) == p.circle().map(Some)
    }

    /// Max-metric arc distance over all coordinates, circle included.
    pub fn distance(&self, other: &PathPoint) -> f64 {
        let base = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a.distance(*b));
        let circle = self.circle.zip(other.circle).map(|(a, b)| a.distance(b));
        base.chain(circle).fold(0.0, f64::max)
    }
}

/// The path assigned to a query by its local rule.
#[derive(Debug, Clone, PartialEq)]
pub struct PlannerPath {
    query: PlannerQuery,
    agreement: AgreementSet,
    skeleton_domain: usize,
    rules: Vec<CoordinateRule>,
    circle: Option<CircleRule>,
    rule_count: usize,
}

impl PlannerPath {
    pub fn query(&self) -> &PlannerQuery {
        &self.query
    }

    pub fn agreement(&self) -> &AgreementSet {
        &self.agreement
    }

    /// Index of the local domain of the skeleton factor, in `0..n`.
    pub fn skeleton_domain(&self) -> usize {
        self.skeleton_domain
    }

    /// Combined domain index: skeleton domain plus circle rule index.
    pub fn domain(&self) -> usize {
        self.skeleton_domain + self.circle.map_or(0, |c| c.index)
    }

    /// Number of local rules of the planner that produced this path.
    pub fn rule_count(&self) -> usize {
        self.rule_count
    }

    pub fn rules(&self) -> &[CoordinateRule] {
        &self.rules
    }

    pub fn circle_rule(&self) -> Option<&CircleRule> {
        self.circle.as_ref()
    }

    pub fn evaluate(&self, t: Rational) -> Result<PathPoint> {
        if t < Rational::zero() || t > Rational::one() {
            return Err(Error::TimeOutOfRange(t.to_string()));
        }
        Ok(PathPoint {
            coords: self.rules.iter().map(|rule| rule.evaluate(t)).collect(),
            circle: self.circle.map(|c| c.evaluate(t)),
        })
    }

    /// All switching times `tau(u_j)` and `1 - tau(u'_j)` of moving
    /// coordinates, without duplicates.
    pub fn phase_boundaries(&self) -> Vec<PhaseTime> {
        let mut out: Vec<PhaseTime> = Vec::new();
        for (a, b) in self.rules.iter().filter_map(CoordinateRule::phase_times) {
            for time in [a, b] {
                if !out.contains(&time) {
                    out.push(time);
                }
            }
        }
        out
    }

    /// Sample times `k / steps` for `k = 0..=steps`, plus every phase
    /// boundary. Irrational boundaries are replaced by their rational
    /// neighbours at resolution `2^-30`.
    pub fn sample_times(&self, steps: usize) -> Vec<Rational> {
        let steps = steps.max(1) as i64;
        let mut times: Vec<Rational> = (0..=steps).map(|k| Ratio::new(k, steps)).collect();
        const RES: i64 = 1 << 30;
        for boundary in self.phase_boundaries() {
            match boundary {
                PhaseTime::Exact(r) => times.push(r),
                PhaseTime::Approx(x) => {
                    let k = (x * RES as f64).round() as i64;
                    for kk in [k - 1, k, k + 1] {
                        if (0..=RES).contains(&kk) {
                            times.push(Ratio::new(kk, RES));
                        }
                    }
                }
            }
        }
        times.sort();
        times.dedup();
        times
    }
}

fn skeleton_path(query: PlannerQuery, sig: AlgebraSignature) -> PlannerPath {
    let (agreement, skeleton_domain) = classify(&query, sig);
    let rules = query
        .from
        .base()
        .iter()
        .zip(query.to.base())
        .map(|(&a, &b)| CoordinateRule::new(a, b))
        .collect();
    PlannerPath {
        query,
        agreement,
        skeleton_domain,
        rules,
        circle: None,
        rule_count: sig.n(),
    }
}

/// The `n`-rule planner on the skeleton.
pub fn plan_skeleton(query: &PlannerQuery, sig: AlgebraSignature) -> Result<PlannerPath> {
    check_endpoints(query, sig)?;
    if query.is_product() {
        return Err(Error::ModeMismatch);
    }
    Ok(skeleton_path(query.clone(), sig))
}

/// The `(n + 1)`-rule planner on `M0`: the skeleton planner times the
/// two-rule circle planner, with domain index `|J| + g`.
pub fn plan_product(query: &PlannerQuery, sig: AlgebraSignature) -> Result<PlannerPath> {
    check_endpoints(query, sig)?;
    let (Some(a), Some(b)) = (query.from.circle(), query.to.circle()) else {
        return Err(Error::ModeMismatch);
    };
    let mut path = skeleton_path(query.clone(), sig);
    path.circle = Some(CircleRule::new(a, b));
    path.rule_count = sig.n() + 1;
    Ok(path)
}

/// Dispatches on the query mode.
pub fn plan(query: &PlannerQuery, sig: AlgebraSignature) -> Result<PlannerPath> {
    if query.is_product() {
        plan_product(query, sig)
    } else {
        plan_skeleton(query, sig)
    }
}

fn check_endpoints(query: &PlannerQuery, sig: AlgebraSignature) -> Result<()> {
    query.from.validate(sig)?;
    query.to.validate(sig)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::turn::parse_turns;

    fn sig(n: usize, r: usize) -> AlgebraSignature {
        AlgebraSignature::new(n, r).unwrap()
    }

    fn point(s: &str, circle: Option<&str>, sg: AlgebraSignature) -> SkeletonPoint {
        SkeletonPoint::new(
            parse_turns(s).unwrap(),
            circle.map(|c| c.parse().unwrap()),
            sg,
        )
        .unwrap()
    }

    fn query(a: &str, b: &str, sg: AlgebraSignature) -> PlannerQuery {
        PlannerQuery::new(point(a, None, sg), point(b, None, sg), sg).unwrap()
    }

    fn half() -> Rational {
        Ratio::new(1, 2)
    }

    #[test]
    fn classify_examples() {
        let s = sig(3, 2);
        let (j, i) = classify(&query("0,1/4", "1/2,0", s), s);
        assert!(j.is_empty());
        assert_eq!(i, 0);

        let (j, i) = classify(&query("0,1/4", "0,1/4", s), s);
        assert_eq!(j.0, BTreeSet::from([1, 2]));
        assert_eq!(i, 2);

        let s = sig(5, 2);
        let (j, i) = classify(&query("0,0,0,1/3", "0,0,0,2/3", s), s);
        assert_eq!(j.0, BTreeSet::from([1, 2, 3]));
        assert_eq!(i, 3);
    }

    #[test]
    fn worked_path() {
        let s = sig(3, 2);
        let path = plan_skeleton(&query("0,1/4", "1/2,0", s), s).unwrap();
        assert_eq!(path.domain(), 0);

        let p = path.evaluate(Ratio::new(1, 4)).unwrap();
        assert_eq!(p.coords[0], Coord::Exact(Turn::ZERO));
        assert!(matches!(p.coords[1], Coord::Approx(x) if (x - 0.625).abs() < 1e-12));

        let p = path.evaluate(Ratio::new(3, 4)).unwrap();
        assert!(matches!(p.coords[0], Coord::Approx(x) if (x - 0.25).abs() < 1e-12));
        assert_eq!(p.coords[1], Coord::Exact(Turn::ZERO));

        // the hand-off happens at exactly t = 1/2, where both are at rest
        let p = path.evaluate(half()).unwrap();
        assert_eq!(p.exact_zero_count(), 2);
    }

    #[test]
    fn endpoints_are_exact() {
        let s = sig(4, 3);
        let q = query("1/3,0,1/8", "0,7/8,1/8", s);
        let path = plan_skeleton(&q, s).unwrap();
        assert!(path
            .evaluate(Rational::zero())
            .unwrap()
            .equals_exactly(q.from()));
        assert!(path
            .evaluate(Rational::one())
            .unwrap()
            .equals_exactly(q.to()));
        assert_eq!(path.agreement().0, BTreeSet::from([3]));
    }

    #[test]
    fn diagonal_gives_constant_path() {
        let s = sig(4, 3);
        let q = query("1/3,0,1/8", "1/3,0,1/8", s);
        let path = plan_skeleton(&q, s).unwrap();
        assert_eq!(path.domain(), 3);
        assert!(path.phase_boundaries().is_empty());
        for t in path.sample_times(16) {
            assert!(path.evaluate(t).unwrap().equals_exactly(q.from()));
        }
    }

    #[test]
    fn basepoint_coordinates_wait_half() {
        let s = sig(4, 3);
        let path = plan_skeleton(&query("0,1/3,0", "1/5,0,0", s), s).unwrap();
        match path.rules()[0] {
            CoordinateRule::Moving { wait_start, .. } => {
                assert_eq!(wait_start, PhaseTime::Exact(half()))
            }
            _ => panic!("coordinate 1 should move"),
        }
        match path.rules()[1] {
            CoordinateRule::Moving { wait_end, .. } => {
                assert_eq!(wait_end, PhaseTime::Exact(half()))
            }
            _ => panic!("coordinate 2 should move"),
        }
        assert_eq!(path.rules()[2], CoordinateRule::Constant(Turn::ZERO));
    }

    #[test]
    fn phases_agree_at_boundaries() {
        // tau(1/8) is irrational; tau(1/2) = 0 and tau(0) = 1/2 are exact.
        let s = sig(3, 3);
        let path = plan_skeleton(&query("1/8,1/2", "1/2,0", s), s).unwrap();
        for rule in path.rules() {
            let (a, b) = rule.phase_times().unwrap();
            for time in [a, b] {
                let x = time.to_f64();
                let near = |y: f64| {
                    let r = Ratio::new((y * 1e12).round() as i64, 1_000_000_000_000);
                    r.max(Rational::zero()).min(Rational::one())
                };
                let (va, vb) = (rule.evaluate(near(x - 1e-9)), rule.evaluate(near(x + 1e-9)));
                assert!(va.distance(vb) < 1e-6, "{time:?}");
            }
        }
        // exact boundary: value equals the resting value on the closed side
        let rule = path.rules()[1];
        assert_eq!(
            rule.evaluate(Rational::zero()),
            Coord::Exact(Turn::from_fraction(1, 2).unwrap())
        );
        assert_eq!(rule.evaluate(half()), Coord::Exact(Turn::ZERO));
    }

    #[test]
    fn product_planner() {
        let s = sig(3, 2);
        let q = PlannerQuery::new(
            point("0,1/4", Some("0"), s),
            point("0,1/4", Some("1/2"), s),
            s,
        )
        .unwrap();
        let path = plan_product(&q, s).unwrap();
        assert_eq!(path.skeleton_domain(), 2);
        assert_eq!(path.domain(), 3);
        assert_eq!(path.rule_count(), 4);
        let mid = path.evaluate(half()).unwrap();
        assert!((mid.circle.unwrap().to_f64() - 0.25).abs() < 1e-15);
        assert!(path
            .evaluate(Rational::one())
            .unwrap()
            .equals_exactly(q.to()));
        assert_eq!(plan_skeleton(&q, s), Err(Error::ModeMismatch));
    }

    #[test]
    fn mode_and_range_errors() {
        let s = sig(3, 2);
        let mixed = PlannerQuery::new(point("0,1/4", Some("0"), s), point("0,1/4", None, s), s);
        assert_eq!(mixed, Err(Error::ModeMismatch));
        let q = query("0,1/4", "1/2,0", s);
        assert!(plan_product(&q, s).is_err());
        let path = plan(&q, s).unwrap();
        assert!(path.evaluate(Ratio::new(3, 2)).is_err());
        assert!(path.evaluate(Ratio::new(-1, 2)).is_err());
    }

    #[test]
    fn coord_json() {
        let p = PathPoint {
            coords: vec![Coord::Exact(Turn::ZERO), Coord::Approx(0.625)],
            circle: None,
        };
        assert_eq!(
            serde_json::to_value(&p).unwrap(),
            serde_json::json!({"coords": ["0", {"approx": 0.625}]})
        );
    }
}

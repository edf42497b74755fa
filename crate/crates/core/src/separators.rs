//! Line separators.
//!
//! A line is an `alpha`-separator of `n` disks when each open side contains
//! at most `⌈alpha·n⌉` disks; its size is the number of disks it crosses.
//!
//! * [`best_line_for_slope`]: for a fixed direction, the balanced line with
//!   the fewest crossings, found by sweeping the projected disk intervals.
//! * [`random_line_separator`]: best of several uniformly random directions.
//! * [`line_through_point_separator`]: random lines through a given point
//!   (normally a centerpoint of the disk centers).
//! * [`axis_parallel_separator`]: candidate lines at unit spacing between
//!   the `n/5` quantile lines, with `4/5` balance.
//! * [`optimal_line_separator`]: global minimum over all directions, by
//!   evaluating every interval between critical bitangent directions.

use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::error::{Error, Result};
use crate::geom::{classify_all, classify_interval, Line, Point, SideClass};
use crate::instance::Instance;
use crate::math;
use crate::rng;

/// Balance used by the random-line and optimal separators.
pub const ALPHA_TWO_THIRDS: f64 = 2.0 / 3.0;
/// Balance certified by the axis-parallel construction.
pub const ALPHA_FOUR_FIFTHS: f64 = 4.0 / 5.0;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Algorithm {
    /// Single fixed direction.
    Slope,
    /// Minimum over random directions.
    RandomSlope,
    /// Random lines through a supplied point.
    ThroughPoint,
    AxisParallel,
    Optimal,
}

impl Algorithm {
    pub fn as_str(&self) -> &'static str {
        match self {
            Algorithm::Slope => "slope",
            Algorithm::RandomSlope => "sweep",
            Algorithm::ThroughPoint => "centerpoint",
            Algorithm::AxisParallel => "axis",
            Algorithm::Optimal => "optimal",
        }
    }
}

impl core::fmt::Display for Algorithm {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SeparatorResult {
    pub line: Line,
    /// Indices of crossed disks, ascending.
    pub crossed: Vec<usize>,
    pub left: usize,
    pub right: usize,
    pub n: usize,
    pub alpha: f64,
    pub algorithm: Algorithm,
    pub trials_used: usize,
}

/// `⌈alpha·n⌉`. A tolerance of `1e-9` absorbs the representation error of
/// fractions like `4/5` so that `alpha·n` landing a hair above an integer
/// does not round up.
pub fn balance_cap(alpha: f64, n: usize) -> usize {
    let v = alpha * n as f64 - 1e-9;
    if v <= 0.0 {
        0
    } else {
        math::ceil(v) as usize
    }
}

fn check_alpha(alpha: f64) -> Result<()> {
    if !(0.5..=1.0).contains(&alpha) {
        return Err(Error::invalid(alloc::format!("alpha must lie in [1/2, 1], got {alpha}")));
    }
    Ok(())
}

impl SeparatorResult {
    fn from_line(instance: &Instance, line: Line, alpha: f64, algorithm: Algorithm, trials_used: usize) -> Self {
        let c = classify_all(&line, instance.disks());
        SeparatorResult {
            line,
            crossed: c.crossed,
            left: c.left,
            right: c.right,
            n: instance.len(),
            alpha,
            algorithm,
            trials_used,
        }
    }

    /// Number of crossed disks.
    pub fn size(&self) -> usize {
        self.crossed.len()
    }

    pub fn cap(&self) -> usize {
        balance_cap(self.alpha, self.n)
    }

    pub fn is_balanced(&self) -> bool {
        self.left <= self.cap() && self.right <= self.cap()
    }

    /// Re-classifies every disk and checks the partition and the balance
    /// certificate.
    pub fn validate(&self, instance: &Instance) -> Result<()> {
        let c = classify_all(&self.line, instance.disks());
        if c.crossed != self.crossed || c.left != self.left || c.right != self.right {
            return Err(Error::internal("separator counts disagree with classification"));
        }
        if self.n != instance.len() || c.total() != self.n {
            return Err(Error::internal("separator does not partition the instance"));
        }
        if !self.is_balanced() {
            return Err(Error::internal(alloc::format!(
                "separator is not {}-balanced: left {} right {} cap {}",
                self.alpha,
                self.left,
                self.right,
                self.cap()
            )));
        }
        Ok(())
    }
}

#[inline]
fn debug_validate(result: &SeparatorResult, instance: &Instance) {
    if cfg!(debug_assertions) {
        if let Err(e) = result.validate(instance) {
            panic!("{e}");
        }
    }
}

/// Best offset for lines with unit normal `(nx, ny)`: `(crossings, offset)`.
///
/// The disk intervals `[t−r, t+r]` on the normal axis are swept. Counts are
/// piecewise constant between interval endpoints, so the endpoints, the
/// midpoints of consecutive endpoints, and one offset beyond either end cover
/// every distinct line of this direction.
fn best_offset(instance: &Instance, nx: f64, ny: f64, cap: usize) -> Option<(usize, f64)> {
    let line = Line::new(nx, ny, 0.0).ok()?;
    let n = instance.len();
    let mut los = Vec::with_capacity(n);
    let mut his = Vec::with_capacity(n);
    for d in instance.disks() {
        let t = line.project(d.cx, d.cy);
        los.push(t - d.r);
        his.push(t + d.r);
    }
    los.sort_unstable_by(f64::total_cmp);
    his.sort_unstable_by(f64::total_cmp);

    let mut events = Vec::with_capacity(2 * n);
    {
        // merge
        let (mut i, mut j) = (0, 0);
        while i < n || j < n {
            if j == n || (i < n && los[i] <= his[j]) {
                events.push(los[i]);
                i += 1;
            } else {
                events.push(his[j]);
                j += 1;
            }
        }
    }
    events.dedup();

    // candidates are visited in increasing order, so both counts advance
    // monotonically
    let mut best: Option<(usize, f64)> = None;
    let (mut below_hi, mut upto_lo) = (0usize, 0usize);
    let mut consider = |c: f64| {
        while below_hi < n && his[below_hi] < c {
            below_hi += 1;
        }
        while upto_lo < n && los[upto_lo] <= c {
            upto_lo += 1;
        }
        let (left, right) = (below_hi, n - upto_lo);
        if left > cap || right > cap {
            return;
        }
        let k = n - left - right;
        if best.is_none_or(|(bk, _)| k < bk) {
            best = Some((k, c));
        }
    };
    consider(events[0] - 1.0);
    for w in events.windows(2) {
        consider(w[0]);
        consider(0.5 * (w[0] + w[1]));
    }
    consider(events[events.len() - 1]);
    consider(events[events.len() - 1] + 1.0);
    best
}

/// The `alpha`-balanced line of direction `angle` crossing the fewest disks.
pub fn best_line_for_slope(instance: &Instance, angle: f64, alpha: f64) -> Result<SeparatorResult> {
    check_alpha(alpha)?;
    if instance.is_empty() {
        return Err(Error::invalid("separator of an empty instance"));
    }
    let (nx, ny) = Line::normal_for_angle(angle)?;
    let cap = balance_cap(alpha, instance.len());
    let (_, c) = best_offset(instance, nx, ny, cap).ok_or(Error::Infeasible { angle, alpha })?;
    let result = SeparatorResult::from_line(instance, Line::new(nx, ny, c)?, alpha, Algorithm::Slope, 1);
    debug_validate(&result, instance);
    Ok(result)
}

/// Separator sizes of [`best_line_for_slope`] for trial directions
/// `0..trials` under `seed`, in trial order.
///
/// Because every trial direction depends only on `(seed, trial)`, the sizes
/// for `k` trials are a prefix of the sizes for any larger count.
pub fn slope_trial_sizes(instance: &Instance, trials: usize, seed: u64, alpha: f64) -> Result<Vec<usize>> {
    (0..trials as u64)
        .map(|t| best_line_for_slope(instance, rng::trial_angle(seed, t), alpha).map(|r| r.size()))
        .collect()
}

/// Best of `trials` uniformly random directions; ties go to the lowest trial.
pub fn random_line_separator(instance: &Instance, trials: usize, seed: u64, alpha: f64) -> Result<SeparatorResult> {
    if trials == 0 {
        return Err(Error::invalid("trials must be at least 1"));
    }
    check_alpha(alpha)?;
    let mut best: Option<SeparatorResult> = None;
    let mut last_err = None;
    for t in 0..trials as u64 {
        match best_line_for_slope(instance, rng::trial_angle(seed, t), alpha) {
            Ok(r) => {
                if best.as_ref().is_none_or(|b| r.size() < b.size()) {
                    best = Some(r);
                }
            }
            Err(e @ Error::Infeasible { .. }) => last_err = Some(e),
            Err(e) => return Err(e),
        }
    }
    let mut best = best.ok_or_else(|| last_err.expect("at least one trial ran"))?;
    best.algorithm = Algorithm::RandomSlope;
    best.trials_used = trials;
    Ok(best)
}

/// Number of disks crossed by the line of direction `angle` through `point`.
pub fn crossings_through_point(instance: &Instance, point: Point, angle: f64) -> Result<usize> {
    let line = Line::through_point(angle, point)?;
    Ok(instance
        .disks()
        .iter()
        .filter(|d| classify_interval(line.project(d.cx, d.cy), d.r, line.c()) == SideClass::Crossed)
        .count())
}

/// Random lines through `point`, reported with balance `2/3`.
///
/// Returns the first line crossing at most `threshold` disks when a
/// threshold is given, otherwise the best of all trials. Balance is not
/// enforced here: it holds whenever `point` is a centerpoint of the disk
/// centers, and [`SeparatorResult::is_balanced`] reports it either way.
pub fn line_through_point_separator(
    instance: &Instance,
    point: Point,
    trials: usize,
    seed: u64,
    threshold: Option<usize>,
) -> Result<SeparatorResult> {
    if trials == 0 {
        return Err(Error::invalid("trials must be at least 1"));
    }
    if instance.is_empty() {
        return Err(Error::invalid("separator of an empty instance"));
    }
    let mut best: Option<(usize, f64)> = None;
    let mut used = trials;
    for t in 0..trials as u64 {
        let angle = rng::trial_angle(seed, t);
        let k = crossings_through_point(instance, point, angle)?;
        if best.is_none_or(|(bk, _)| k < bk) {
            best = Some((k, angle));
        }
        if threshold.is_some_and(|th| k <= th) {
            used = t as usize + 1;
            break;
        }
    }
    let (_, angle) = best.expect("trials >= 1");
    let line = Line::through_point(angle, point)?;
    Ok(SeparatorResult::from_line(instance, line, ALPHA_TWO_THIRDS, Algorithm::ThroughPoint, used))
}

/// `(v[k-1], v[k])` of `(coordinate, id)` keys in sorted order, in expected
/// linear time.
fn order_stat_pair(keys: &mut [(f64, usize)], k: usize) -> (f64, f64) {
    let cmp = |a: &(f64, usize), b: &(f64, usize)| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1));
    let (below, kth, _) = keys.select_nth_unstable_by(k, cmp);
    let prev = below.iter().max_by(|a, b| cmp(a, b)).expect("k >= 1");
    (prev.0, kth.0)
}

/// Offset of a quantile line between two consecutive sorted coordinates.
fn between(a: f64, b: f64) -> f64 {
    if a < b {
        0.5 * (a + b)
    } else {
        b
    }
}

/// Candidate offsets `low + i`, `i = 1..=⌈span−1⌉`, or the midline when the
/// span is below 2.
fn axis_candidates(low: f64, high: f64) -> Vec<f64> {
    let span = high - low;
    if span < 2.0 {
        return alloc::vec![0.5 * (low + high)];
    }
    let count = math::ceil(span - 1.0) as usize;
    (1..=count).map(|i| low + i as f64).collect()
}

/// Crossing counts for lines with normal `(nx, ny)` at unit-spaced offsets
/// `base + i`, `i = 1..=count`, in O(n + Σ r) time.
fn unit_spaced_crossings(instance: &Instance, nx: f64, ny: f64, base: f64, count: usize) -> Vec<usize> {
    let line = Line::new(nx, ny, 0.0).expect("axis normal");
    let mut counts = alloc::vec![0usize; count];
    for d in instance.disks() {
        let t = line.project(d.cx, d.cy);
        let first = math::ceil(t - d.r - base) - 1.0;
        let last = math::floor(t + d.r - base) + 1.0;
        let first = first.max(1.0) as usize;
        let last = last.min(count as f64);
        if last < 1.0 {
            continue;
        }
        for i in first..=last as usize {
            if classify_interval(t, d.r, base + i as f64) == SideClass::Crossed {
                counts[i - 1] += 1;
            }
        }
    }
    counts
}

/// Axis-parallel `4/5`-separator.
///
/// Builds the horizontal lines with `⌊n/5⌋` centers strictly below and above
/// and the analogous vertical pair, then tries the unit-spaced lines strictly
/// between each pair (or the midline when the pair is closer than 2) and
/// keeps the one with the fewest crossings. Quantile ties are broken by disk
/// id. With fewer than 5 disks, every horizontal and vertical line is swept.
pub fn axis_parallel_separator(instance: &Instance) -> Result<SeparatorResult> {
    let n = instance.len();
    if n == 0 {
        return Err(Error::invalid("separator of an empty instance"));
    }
    let alpha = ALPHA_FOUR_FIFTHS;
    let cap = balance_cap(alpha, n);
    if n < 5 {
        let h = best_offset(instance, 0.0, 1.0, cap).map(|(k, c)| (k, Line::horizontal(c)));
        let v = best_offset(instance, 1.0, 0.0, cap).map(|(k, c)| (k, Line::vertical(c)));
        let (_, line) = match (h, v) {
            (Some(h), Some(v)) => {
                if v.0 < h.0 {
                    v
                } else {
                    h
                }
            }
            (Some(x), None) | (None, Some(x)) => x,
            (None, None) => return Err(Error::internal("no axis-parallel line is 4/5-balanced")),
        };
        let result = SeparatorResult::from_line(instance, line, alpha, Algorithm::AxisParallel, 1);
        debug_validate(&result, instance);
        return Ok(result);
    }

    let k = n / 5;
    let quantiles = |coord: fn(&crate::geom::Disk) -> f64| -> (f64, f64) {
        let mut keys: Vec<(f64, usize)> = instance.disks().iter().map(|d| (coord(d), d.id)).collect();
        let (a, b) = order_stat_pair(&mut keys, k);
        let low = between(a, b);
        let (a, b) = order_stat_pair(&mut keys, n - k);
        let high = between(a, b);
        (low, high)
    };
    let (y_down, y_up) = quantiles(|d| d.cy);
    let (x_left, x_right) = quantiles(|d| d.cx);

    let mut best: Option<(usize, Line)> = None;
    let mut consider = |counts: &[usize], offsets: &[f64], make: fn(f64) -> Line| {
        for (&cnt, &off) in counts.iter().zip(offsets) {
            if best.as_ref().is_none_or(|(bk, _)| cnt < *bk) {
                best = Some((cnt, make(off)));
            }
        }
    };
    for (low, high, nx, ny, make) in [
        (y_down, y_up, 0.0, 1.0, Line::horizontal as fn(f64) -> Line),
        (x_left, x_right, 1.0, 0.0, Line::vertical as fn(f64) -> Line),
    ] {
        let offsets = axis_candidates(low, high);
        let counts = if high - low < 2.0 {
            let line = make(offsets[0]);
            alloc::vec![classify_all(&line, instance.disks()).crossed.len()]
        } else {
            unit_spaced_crossings(instance, nx, ny, low, offsets.len())
        };
        consider(&counts, &offsets, make);
    }
    let (_, line) = best.expect("at least one candidate per orientation");
    let result = SeparatorResult::from_line(instance, line, alpha, Algorithm::AxisParallel, 1);
    if !result.is_balanced() {
        return Err(Error::internal("axis-parallel candidate violates the 4/5 balance"));
    }
    debug_validate(&result, instance);
    Ok(result)
}

/// Reduces an angle modulo π into `[0, π)`.
fn mod_pi(a: f64) -> f64 {
    let r = a - PI * math::floor(a / PI);
    if (0.0..PI).contains(&r) {
        r
    } else {
        0.0
    }
}

/// Direction angles at which the order of the projected interval endpoints
/// can change: for each disk pair, the directions of its outer and inner
/// bitangents and the direction of the center difference.
pub fn critical_angles(instance: &Instance) -> Vec<f64> {
    let disks = instance.disks();
    let mut out = Vec::new();
    for (i, a) in disks.iter().enumerate() {
        for b in &disks[i + 1..] {
            let (dx, dy) = (b.cx - a.cx, b.cy - a.cy);
            let dist = libm::hypot(dx, dy);
            if dist == 0.0 {
                continue;
            }
            let phi = math::atan2(dy, dx);
            out.push(mod_pi(phi));
            for s in [(a.r - b.r).abs(), a.r + b.r] {
                if s > 0.0 && s <= dist {
                    let off = math::asin(s / dist);
                    out.push(mod_pi(phi + off));
                    out.push(mod_pi(phi - off));
                }
            }
        }
    }
    out.sort_unstable_by(f64::total_cmp);
    out.dedup();
    out
}

/// Arbitrary direction evaluated in addition to the critical ones.
const FALLBACK_ANGLE: f64 = 0.618_033_988_749_894_8;

/// The `alpha`-balanced line with the fewest crossings over all directions.
///
/// Between consecutive critical angles the sorted order of all projected
/// endpoints is fixed, so the per-direction optimum is constant there. Every
/// critical angle and the midpoint of every gap between consecutive critical
/// angles (cyclically, modulo π) is evaluated with the per-direction sweep.
pub fn optimal_line_separator(instance: &Instance, alpha: f64) -> Result<SeparatorResult> {
    check_alpha(alpha)?;
    if instance.is_empty() {
        return Err(Error::invalid("separator of an empty instance"));
    }
    let cap = balance_cap(alpha, instance.len());
    let mut crit = critical_angles(instance);
    crit.push(FALLBACK_ANGLE);
    crit.sort_unstable_by(f64::total_cmp);
    crit.dedup();

    let mut angles = Vec::with_capacity(2 * crit.len());
    for (i, &a) in crit.iter().enumerate() {
        angles.push(a);
        let next = if i + 1 < crit.len() { crit[i + 1] } else { crit[0] + PI };
        angles.push(mod_pi(0.5 * (a + next)));
    }

    // ties keep the first direction in evaluation order
    let mut best: Option<(usize, f64, f64)> = None;
    for angle in angles {
        let (nx, ny) = Line::normal_for_angle(angle)?;
        if let Some((k, c)) = best_offset(instance, nx, ny, cap) {
            if best.is_none_or(|(bk, _, _)| k < bk) {
                best = Some((k, angle, c));
                if k == 0 {
                    break;
                }
            }
        }
    }
    let (_, angle, c) = best.ok_or(Error::Infeasible { angle: f64::NAN, alpha })?;
    let line = Line::from_angle(angle, c)?;
    let result = SeparatorResult::from_line(instance, line, alpha, Algorithm::Optimal, 1);
    debug_validate(&result, instance);
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instance::Provenance;

    fn inst(c: &[(f64, f64, f64)]) -> Instance {
        Instance::from_circles(c.iter().copied(), Provenance::new("test")).unwrap()
    }

    #[test]
    fn balance_cap_values() {
        assert_eq!(balance_cap(ALPHA_TWO_THIRDS, 1), 1);
        assert_eq!(balance_cap(ALPHA_TWO_THIRDS, 3), 2);
        assert_eq!(balance_cap(ALPHA_TWO_THIRDS, 71), 48);
        assert_eq!(balance_cap(ALPHA_FOUR_FIFTHS, 5), 4);
        assert_eq!(balance_cap(ALPHA_FOUR_FIFTHS, 71), 57);
        for n in 0..10_000 {
            assert_eq!(balance_cap(ALPHA_FOUR_FIFTHS, n), (4 * n).div_ceil(5));
            assert_eq!(balance_cap(ALPHA_TWO_THIRDS, n), (2 * n).div_ceil(3));
            assert_eq!(balance_cap(0.5, n), n.div_ceil(2));
        }
    }

    #[test]
    fn single_disk_needs_no_crossing() {
        let i = inst(&[(0.0, 0.0, 1.0)]);
        for angle in [0.0, 0.7, 2.0] {
            let r = best_line_for_slope(&i, angle, ALPHA_TWO_THIRDS).unwrap();
            assert_eq!(r.size(), 0);
            assert_eq!(r.left + r.right, 1);
        }
    }

    #[test]
    fn bad_inputs() {
        let i = inst(&[(0.0, 0.0, 1.0)]);
        assert!(best_line_for_slope(&i, f64::NAN, 0.7).unwrap_err().is_input_error());
        assert!(best_line_for_slope(&i, 0.0, 0.4).unwrap_err().is_input_error());
        assert!(best_line_for_slope(&inst(&[]), 0.0, 0.7).is_err());
        assert!(random_line_separator(&i, 0, 1, 0.7).is_err());
    }

    #[test]
    fn three_far_disks_single_trial() {
        let i = inst(&[(-50.0, 3.0, 1.0), (0.0, 40.0, 1.0), (60.0, -20.0, 1.0)]);
        let r = random_line_separator(&i, 1, 9, ALPHA_TWO_THIRDS).unwrap();
        assert_eq!(r.size(), 0);
        assert!(r.is_balanced());
    }

    #[test]
    fn point_separator_through_single_disk() {
        let i = inst(&[(0.0, 0.0, 1.0)]);
        let r = line_through_point_separator(&i, Point::new(0.0, 0.0), 10, 3, None).unwrap();
        assert_eq!(r.size(), 1);
        assert_eq!(r.trials_used, 10);
        let r = line_through_point_separator(&i, Point::new(0.0, 0.0), 10, 3, Some(1)).unwrap();
        assert_eq!(r.trials_used, 1);
    }

    #[test]
    fn tight_cluster_axis_parallel() {
        let i = inst(&[(0.0, 0.0, 1.0), (0.1, 0.2, 1.0), (0.3, -0.1, 1.0), (-0.2, 0.1, 1.0), (0.05, 0.3, 1.0)]);
        let r = axis_parallel_separator(&i).unwrap();
        assert!(r.left <= 4 && r.right <= 4);
        assert_eq!(r.alpha, ALPHA_FOUR_FIFTHS);
    }

    #[test]
    fn axis_parallel_small_n() {
        for n in 1..5 {
            let c: Vec<_> = (0..n).map(|i| (i as f64 * 5.0, 0.0, 1.0)).collect();
            let r = axis_parallel_separator(&inst(&c)).unwrap();
            r.validate(&inst(&c)).unwrap();
        }
    }

    #[test]
    fn two_far_disks_optimal_zero() {
        let i = inst(&[(0.0, 0.0, 1.0), (30.0, 10.0, 1.0)]);
        let r = optimal_line_separator(&i, ALPHA_TWO_THIRDS).unwrap();
        assert_eq!(r.size(), 0);
        assert_eq!(r.left + r.right, 2);
    }

    #[test]
    fn unit_spaced_counts_match_direct() {
        let i = inst(&[(0.0, 0.5, 1.0), (0.0, 2.0, 1.0), (3.0, 3.0, 1.0), (1.0, 5.5, 2.5)]);
        let counts = unit_spaced_crossings(&i, 0.0, 1.0, -0.5, 8);
        for (k, &cnt) in counts.iter().enumerate() {
            let line = Line::horizontal(-0.5 + (k + 1) as f64);
            assert_eq!(cnt, classify_all(&line, i.disks()).crossed.len(), "offset {k}");
        }
    }
}

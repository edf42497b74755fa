//! Halfplane (Tukey) depth and an exact centerpoint construction.
//!
//! All orientation decisions go through an adaptive exact `orient2d`, so the
//! depth reported for a given `f64` point is exact. The centerpoint region
//! `{p : depth(p) ≥ ⌈n/3⌉}` is the intersection of the closed halfplanes
//! bounded by lines through two input points that sit at the `⌈n/3⌉`-level in
//! their normal direction; those halfplanes are found with one angular sweep
//! per input point (O(n² log n) total) and intersected in floating point. The
//! point returned is always re-certified with [`halfplane_depth`].

use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::error::{Error, Result};
use crate::geom::Point;

/// A point together with its exact halfplane depth.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DepthReport {
    pub point: Point,
    pub depth: usize,
}

/// Depth threshold for a centerpoint of `n` points: `⌈n/3⌉`.
pub fn centerpoint_depth(n: usize) -> usize {
    n.div_ceil(3)
}

#[inline]
fn orient(a: &Point, b: &Point, c: &Point) -> f64 {
    robust::orient2d(
        robust::Coord { x: a.x, y: a.y },
        robust::Coord { x: b.x, y: b.y },
        robust::Coord { x: c.x, y: c.y },
    )
}

/// 0 for directions in `[0, π)`, 1 for `[π, 2π)`, relative to `origin`.
#[inline]
fn half(origin: &Point, q: &Point) -> u8 {
    if q.y > origin.y || (q.y == origin.y && q.x > origin.x) {
        0
    } else {
        1
    }
}

/// Counter-clockwise angular order around `origin`, starting at angle 0.
/// Points in the same direction compare equal. No point may equal `origin`.
fn angular_cmp(origin: &Point, a: &Point, b: &Point) -> Ordering {
    match half(origin, a).cmp(&half(origin, b)) {
        Ordering::Equal => {
            let o = orient(origin, a, b);
            if o > 0.0 {
                Ordering::Less
            } else if o < 0.0 {
                Ordering::Greater
            } else {
                Ordering::Equal
            }
        }
        other => other,
    }
}

/// Does `b` lie in the half-open angular window `[dir(a), dir(a) + π)`?
#[inline]
fn in_window(origin: &Point, a: &Point, b: &Point) -> bool {
    let o = orient(origin, a, b);
    o > 0.0 || (o == 0.0 && half(origin, a) == half(origin, b))
}

/// Points other than `origin`, sorted by angle around it, plus the number of
/// input points equal to `origin`.
fn sorted_around(points: &[Point], origin: &Point) -> (Vec<Point>, usize) {
    let mut others: Vec<Point> = points.iter().filter(|q| *q != origin).copied().collect();
    let coincident = points.len() - others.len();
    others.sort_by(|a, b| angular_cmp(origin, a, b));
    (others, coincident)
}

/// Minimum over directions `u` of `|{q : (q − p)·u ≥ 0}|`, computed exactly.
///
/// This equals `n` minus the largest number of points inside an open
/// halfplane whose boundary passes through `p`.
pub fn halfplane_depth(points: &[Point], p: Point) -> usize {
    let n = points.len();
    let (others, _) = sorted_around(points, &p);
    let k = others.len();
    if k == 0 {
        return n;
    }
    let mut best = 0;
    let mut j = 0;
    for i in 0..k {
        j = j.max(i);
        while j < i + k && in_window(&p, &others[i], &others[j % k]) {
            j += 1;
        }
        best = best.max(j - i);
    }
    n - best
}

/// Closed halfplane to the left of the directed line `a → b`.
#[derive(Clone, Copy, Debug)]
struct HalfPlane {
    a: Point,
    b: Point,
}

/// Halfplanes whose boundary is a `t`-level line through two input points.
fn level_constraints(points: &[Point], t: usize) -> Vec<HalfPlane> {
    let n = points.len();
    let mut out = Vec::new();
    for q in points {
        let (others, coincident) = sorted_around(points, q);
        if others.is_empty() {
            continue;
        }
        // direction groups: (representative, size)
        let mut groups: Vec<(Point, usize)> = Vec::new();
        for p in &others {
            match groups.last_mut() {
                Some((rep, size)) if angular_cmp(q, rep, p) == Ordering::Equal => *size += 1,
                _ => groups.push((*p, 1)),
            }
        }
        let g = groups.len();
        let mut prefix = Vec::with_capacity(2 * g + 1);
        prefix.push(0usize);
        for idx in 0..2 * g {
            let s = prefix[idx] + groups[idx % g].1;
            prefix.push(s);
        }
        let mut end = 0;
        for gi in 0..g {
            end = end.max(gi + 1);
            let rep = groups[gi].0;
            while end < gi + g && in_window(q, &rep, &groups[end % g].0) {
                end += 1;
            }
            let opposite =
                if end < gi + g && orient(q, &rep, &groups[end % g].0) == 0.0 { groups[end % g].1 } else { 0 };
            let left = prefix[end] - prefix[gi] - groups[gi].1;
            let on_line = coincident + groups[gi].1 + opposite;
            let right = n - left - on_line;
            // left side must not keep the point strictly inside
            if left < t && t <= left + on_line {
                out.push(HalfPlane { a: rep, b: *q });
            }
            if right < t && t <= right + on_line {
                out.push(HalfPlane { a: *q, b: rep });
            }
        }
    }
    out
}

#[derive(Clone, Copy, Debug)]
struct FloatHalfPlane {
    p: Point,
    dx: f64,
    dy: f64,
    angle: f64,
}

impl FloatHalfPlane {
    fn new(a: Point, b: Point) -> Option<Self> {
        let dx = b.x - a.x;
        let dy = b.y - a.y;
        let len = libm::hypot(dx, dy);
        if len == 0.0 || !len.is_finite() {
            return None;
        }
        let (dx, dy) = (dx / len, dy / len);
        Some(FloatHalfPlane { p: a, dx, dy, angle: libm::atan2(dy, dx) })
    }

    /// Signed distance of `q` to the boundary, positive inside.
    fn side(&self, q: &Point) -> f64 {
        self.dx * (q.y - self.p.y) - self.dy * (q.x - self.p.x)
    }

    fn intersect(&self, other: &FloatHalfPlane) -> Option<Point> {
        let denom = self.dx * other.dy - self.dy * other.dx;
        if denom.abs() < 1e-15 {
            return None;
        }
        let wx = other.p.x - self.p.x;
        let wy = other.p.y - self.p.y;
        let s = (wx * other.dy - wy * other.dx) / denom;
        Some(Point::new(self.p.x + s * self.dx, self.p.y + s * self.dy))
    }
}

/// Vertices of the intersection polygon, or `None` when it is empty (up to
/// `tol`, a distance).
fn intersect_halfplanes(mut hs: Vec<FloatHalfPlane>, tol: f64) -> Option<Vec<Point>> {
    hs.sort_by(|a, b| a.angle.total_cmp(&b.angle));
    // same direction: keep the innermost boundary
    let mut uniq: Vec<FloatHalfPlane> = Vec::with_capacity(hs.len());
    for h in hs {
        match uniq.last_mut() {
            Some(last) if last.angle == h.angle => {
                if last.side(&h.p) > 0.0 {
                    *last = h;
                }
            }
            _ => uniq.push(h),
        }
    }

    let mut dq: alloc::collections::VecDeque<FloatHalfPlane> = Default::default();
    for h in uniq {
        while dq.len() >= 2 {
            let v = dq[dq.len() - 2].intersect(&dq[dq.len() - 1])?;
            if h.side(&v) < -tol {
                dq.pop_back();
            } else {
                break;
            }
        }
        while dq.len() >= 2 {
            let v = dq[0].intersect(&dq[1])?;
            if h.side(&v) < -tol {
                dq.pop_front();
            } else {
                break;
            }
        }
        if let Some(back) = dq.back() {
            let cross = back.dx * h.dy - back.dy * h.dx;
            if cross.abs() < 1e-15 {
                // anti-parallel neighbours: empty or degenerate strip
                return None;
            }
        }
        dq.push_back(h);
    }
    while dq.len() >= 3 {
        let v = dq[dq.len() - 2].intersect(&dq[dq.len() - 1])?;
        if dq[0].side(&v) < -tol {
            dq.pop_back();
        } else {
            break;
        }
    }
    while dq.len() >= 3 {
        let v = dq[0].intersect(&dq[1])?;
        if dq[dq.len() - 1].side(&v) < -tol {
            dq.pop_front();
        } else {
            break;
        }
    }
    if dq.len() < 3 {
        return None;
    }
    let len = dq.len();
    (0..len).map(|i| dq[i].intersect(&dq[(i + 1) % len])).collect()
}

fn vertex_centroid(vs: &[Point]) -> Point {
    let n = vs.len() as f64;
    let (sx, sy) = vs.iter().fold((0.0, 0.0), |(sx, sy), v| (sx + v.x, sy + v.y));
    Point::new(sx / n, sy / n)
}

fn area_centroid(vs: &[Point]) -> Option<Point> {
    let o = vs[0];
    let (mut a2, mut cx, mut cy) = (0.0, 0.0, 0.0);
    for i in 0..vs.len() {
        let (p, q) = (vs[i], vs[(i + 1) % vs.len()]);
        let cross = (p.x - o.x) * (q.y - o.y) - (q.x - o.x) * (p.y - o.y);
        a2 += cross;
        cx += (p.x + q.x - 2.0 * o.x) * cross;
        cy += (p.y + q.y - 2.0 * o.y) * cross;
    }
    if a2.abs() <= f64::MIN_POSITIVE {
        return None;
    }
    Some(Point::new(o.x + cx / (3.0 * a2), o.y + cy / (3.0 * a2)))
}

fn lexicographic(a: &Point, b: &Point) -> Ordering {
    a.x.total_cmp(&b.x).then(a.y.total_cmp(&b.y))
}

/// An exact centerpoint of `points`, certified to have depth `≥ ⌈n/3⌉`.
pub fn exact_centerpoint(points: &[Point]) -> Result<Point> {
    certified_centerpoint(points).map(|r| r.point)
}

/// Like [`exact_centerpoint`] but also returns the certified depth.
pub fn certified_centerpoint(points: &[Point]) -> Result<DepthReport> {
    let n = points.len();
    if n == 0 {
        return Err(Error::invalid("centerpoint of an empty point set"));
    }
    if points.iter().any(|p| !p.is_finite()) {
        return Err(Error::invalid("centerpoint input has a non-finite coordinate"));
    }
    let t = centerpoint_depth(n);
    let certify = |p: Point| -> Option<DepthReport> {
        let depth = halfplane_depth(points, p);
        (depth >= t).then_some(DepthReport { point: p, depth })
    };

    let first = points[0];
    let second = points.iter().find(|p| **p != first);
    let Some(second) = second else {
        return certify(first).ok_or_else(|| Error::internal("coincident points failed certification"));
    };
    if points.iter().all(|p| orient(&first, second, p) == 0.0) {
        // collinear: a median input point along the line has depth ⌈n/2⌉
        let mut sorted = points.to_vec();
        sorted.sort_by(lexicographic);
        return certify(sorted[(n - 1) / 2]).ok_or_else(|| Error::internal("collinear median failed certification"));
    }

    let (mut lo, mut hi) = (Point::new(f64::INFINITY, f64::INFINITY), Point::new(f64::NEG_INFINITY, f64::NEG_INFINITY));
    for p in points {
        lo = Point::new(lo.x.min(p.x), lo.y.min(p.y));
        hi = Point::new(hi.x.max(p.x), hi.y.max(p.y));
    }
    let extent = (hi.x - lo.x).max(hi.y - lo.y).max(1.0);
    let pad = extent;
    let (bl, br) = (Point::new(lo.x - pad, lo.y - pad), Point::new(hi.x + pad, lo.y - pad));
    let (tr, tl) = (Point::new(hi.x + pad, hi.y + pad), Point::new(lo.x - pad, hi.y + pad));

    let mut hs: Vec<FloatHalfPlane> =
        level_constraints(points, t).into_iter().filter_map(|h| FloatHalfPlane::new(h.a, h.b)).collect();
    for (a, b) in [(bl, br), (br, tr), (tr, tl), (tl, bl)] {
        hs.extend(FloatHalfPlane::new(a, b));
    }

    let scale = extent.max(lo.x.abs()).max(lo.y.abs()).max(hi.x.abs()).max(hi.y.abs());
    let polygon = intersect_halfplanes(hs.clone(), 0.0)
        .or_else(|| intersect_halfplanes(hs, 1e-9 * scale))
        .ok_or_else(|| Error::internal("centerpoint region came out empty"))?;

    let centroid = vertex_centroid(&polygon);
    if let Some(r) = certify(centroid) {
        return Ok(r);
    }
    // The region is thin or a single point: try nearby representable points.
    let mut candidates: Vec<Point> = Vec::new();
    candidates.extend(area_centroid(&polygon));
    for x in [centroid.x.next_down(), centroid.x, centroid.x.next_up()] {
        for y in [centroid.y.next_down(), centroid.y, centroid.y.next_up()] {
            candidates.push(Point::new(x, y));
        }
    }
    candidates.extend(polygon.iter().copied());
    candidates.extend(points.iter().copied());
    for c in candidates {
        if let Some(r) = certify(c) {
            return Ok(r);
        }
    }
    Err(Error::internal("could not certify a centerpoint in floating point"))
}

//! Instance families: uniform random, snake, concentric lower-bound and
//! nested arbitrary-radius rings.

use alloc::vec::Vec;
use core::f64::consts::PI;

use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::{build_graph, is_connected};
use crate::instance::{Instance, Provenance};
use crate::math;
use crate::rng;

/// `n` unit disks with centers uniform in `[0, side]²`.
///
/// With `require_connected`, disconnected draws are discarded and redrawn
/// from the same stream, so the accepted instance depends only on the
/// arguments.
pub fn gen_random(n: usize, side: f64, seed: u64, require_connected: bool, max_rejects: usize) -> Result<Instance> {
    if n == 0 {
        return Err(Error::invalid("random instance needs n >= 1"));
    }
    if !(side.is_finite() && side > 0.0) {
        return Err(Error::invalid(alloc::format!("square side must be positive, got {side}")));
    }
    let provenance = Provenance::new("random")
        .with_param("n", n)
        .with_param("side", side)
        .with_param("connected", require_connected)
        .with_param("max_rejects", max_rejects)
        .with_seed(seed);
    let mut rng = rng::stream(seed);
    let mut rejects = 0;
    loop {
        let circles: Vec<(f64, f64, f64)> =
            (0..n).map(|_| (rng.gen::<f64>() * side, rng.gen::<f64>() * side, 1.0)).collect();
        let inst = Instance::from_circles(circles, provenance.clone())?;
        if !require_connected || is_connected(&build_graph(&inst)) {
            return Ok(inst);
        }
        rejects += 1;
        if rejects > max_rejects {
            return Err(Error::RejectionLimit { rejects });
        }
    }
}

/// `n` pairwise disjoint unit disks in `[0, side]²`, placed one at a time;
/// a draw that overlaps an earlier disk is redrawn.
pub fn gen_random_disjoint(n: usize, side: f64, seed: u64, max_rejects: usize) -> Result<Instance> {
    if n == 0 {
        return Err(Error::invalid("random instance needs n >= 1"));
    }
    if !(side.is_finite() && side > 0.0) {
        return Err(Error::invalid(alloc::format!("square side must be positive, got {side}")));
    }
    let provenance = Provenance::new("disjoint")
        .with_param("n", n)
        .with_param("side", side)
        .with_param("max_rejects", max_rejects)
        .with_seed(seed);
    let mut rng = rng::stream(seed);
    // cell size 2: an overlapping disk has its center in the 3x3 block
    let cells_per_side = (math::ceil(side / 2.0) as usize).max(1) + 1;
    let mut grid: Vec<Vec<(f64, f64)>> = alloc::vec![Vec::new(); cells_per_side * cells_per_side];
    let cell_of = |v: f64| ((v / 2.0) as usize).min(cells_per_side - 1);
    let mut placed = Vec::with_capacity(n);
    let mut rejects = 0;
    while placed.len() < n {
        let (x, y) = (rng.gen::<f64>() * side, rng.gen::<f64>() * side);
        let (cx, cy) = (cell_of(x), cell_of(y));
        let clash = (cx.saturating_sub(1)..=(cx + 1).min(cells_per_side - 1)).any(|gx| {
            (cy.saturating_sub(1)..=(cy + 1).min(cells_per_side - 1)).any(|gy| {
                grid[gx * cells_per_side + gy].iter().any(|&(px, py)| {
                    let (dx, dy) = (px - x, py - y);
                    dx * dx + dy * dy <= 4.0
                })
            })
        });
        if clash {
            rejects += 1;
            if rejects > max_rejects {
                return Err(Error::RejectionLimit { rejects });
            }
            continue;
        }
        grid[cx * cells_per_side + cy].push((x, y));
        placed.push((x, y, 1.0));
    }
    Instance::from_circles(placed, provenance)
}

/// Radius of snake disks. Centers sit on the integer grid; radius `2/3`
/// makes exactly the unit-distance pairs intersect.
pub const SNAKE_RADIUS: f64 = 2.0 / 3.0;

/// Number of disks of the snake instance with parameter `q`.
pub fn snake_size(q: usize) -> usize {
    (q * q - 1) / 2 + q
}

/// Snake instance: columns `x = 1, 3, …, q` of `q` disks each, joined by
/// connector disks at `(2i, q^(i mod 2))`, alternating top and bottom.
/// Its intersection graph is a path.
pub fn gen_snake(q: usize) -> Result<Instance> {
    if q < 3 || q.is_multiple_of(2) {
        return Err(Error::invalid(alloc::format!("snake parameter q must be odd and >= 3, got {q}")));
    }
    let mut circles = Vec::with_capacity(snake_size(q));
    for i in 1..=q.div_ceil(2) {
        let x = (2 * i - 1) as f64;
        for j in 1..=q {
            circles.push((x, j as f64, SNAKE_RADIUS));
        }
    }
    for i in 1..=(q - 1) / 2 {
        let y = if i % 2 == 1 { q } else { 1 };
        circles.push(((2 * i) as f64, y as f64, SNAKE_RADIUS));
    }
    Instance::from_circles(circles, Provenance::new("snake").with_param("q", q))
}

/// Default `ε` of the concentric construction: `1/(4π)`.
pub const LOWER_BOUND_EPS: f64 = 1.0 / (4.0 * PI);

fn check_lower_bound_range(n: usize, m: usize) -> Result<()> {
    let upper = n.saturating_mul(n) / 6;
    if n == 0 || m < 9 * n || m > upper {
        return Err(Error::invalid(alloc::format!(
            "need 9n <= m <= floor(n^2/6); got n = {n}, m = {m} (range [{}, {upper}])",
            9 * n
        )));
    }
    Ok(())
}

/// Smallest natural `k` with `k ≥ √(6m / (1 + ln(n/k)))`.
pub fn choose_k(n: usize, m: usize) -> Result<usize> {
    check_lower_bound_range(n, m)?;
    let target = |k: usize| math::sqrt(6.0 * m as f64 / (1.0 + math::ln(n as f64 / k as f64)));
    (1..=n)
        .find(|&k| k as f64 >= target(k))
        .ok_or_else(|| Error::internal("no k <= n satisfies the layer-size inequality"))
}

/// Arc length on a circle of radius `2i(1+ε)` between the centers of two
/// touching unit disks.
pub fn gamma(layer: usize, eps: f64) -> f64 {
    let radius = 2.0 * layer as f64 * (1.0 + eps);
    2.0 * radius * math::asin(1.0 / radius)
}

/// Closed-form number of intersecting pairs within layer `i`.
pub fn layer_pairs(layer: usize, k: usize, eps: f64) -> usize {
    let per = gamma(layer, eps) * k as f64 / (4.0 * PI * layer as f64 * (1.0 + eps));
    math::floor(per) as usize * k
}

#[derive(Clone, Debug, PartialEq)]
pub struct LowerBoundParams {
    pub n: usize,
    pub m: usize,
    /// Disks per circle.
    pub k: usize,
    /// Number of circles.
    pub layers: usize,
    pub eps: f64,
    pub n_prime: usize,
    pub m_prime: usize,
}

impl LowerBoundParams {
    /// `(√6/(4π+1) − 2/(9√6))·√(m(1 + ln layers))`: every line through the
    /// origin crosses at least this many disks.
    pub fn crossing_floor(&self) -> f64 {
        lower_bound_constant() * math::sqrt(self.m as f64 * (1.0 + math::ln(self.layers as f64)))
    }
}

/// `√6/(4π+1) − 2/(9√6) ≈ 0.0898`.
pub fn lower_bound_constant() -> f64 {
    let s6 = math::sqrt(6.0);
    s6 / (4.0 * PI + 1.0) - 2.0 / (9.0 * s6)
}

/// Layer index (1-based) of disk `id` in a lower-bound instance with `k`
/// disks per layer.
pub fn lower_bound_layer(id: usize, k: usize) -> usize {
    id / k + 1
}

/// Concentric construction: `layers = ⌈n/k⌉` circles of radius `2i(1+ε)`
/// around the origin, each carrying `k` evenly spaced unit disks starting at
/// angle 0. The origin is a centerpoint of the centers.
pub fn gen_lower_bound(n: usize, m: usize, eps: f64) -> Result<(Instance, LowerBoundParams)> {
    check_lower_bound_range(n, m)?;
    if !(eps > 0.0 && eps <= LOWER_BOUND_EPS) {
        return Err(Error::invalid(alloc::format!("eps must lie in (0, 1/(4π)], got {eps}")));
    }
    let k = choose_k(n, m)?;
    let layers = n.div_ceil(k);
    let mut circles = Vec::with_capacity(k * layers);
    for i in 1..=layers {
        let radius = 2.0 * i as f64 * (1.0 + eps);
        for j in 0..k {
            let theta = 2.0 * PI * j as f64 / k as f64;
            circles.push((radius * math::cos(theta), radius * math::sin(theta), 1.0));
        }
    }
    let provenance = Provenance::new("lower-bound").with_param("n", n).with_param("m", m).with_param("eps", eps);
    let inst = Instance::from_circles(circles, provenance)?;
    let m_prime = build_graph(&inst).m();
    let n_prime = inst.len();
    if !(n <= n_prime && n_prime <= 2 * n) || !(m.div_ceil(9) <= m_prime && m_prime <= 6 * m) {
        return Err(Error::internal(alloc::format!(
            "construction left the guaranteed window: n' = {n_prime}, m' = {m_prime} for n = {n}, m = {m}"
        )));
    }
    Ok((inst, LowerBoundParams { n, m, k, layers, eps, n_prime, m_prime }))
}

/// Nominal (pre-shrink) radius of the disks of ring `level >= 2`: `3^(level−2)`.
pub fn ring_radius(level: usize) -> f64 {
    math::pow(3.0, (level - 2) as f64)
}

/// Nested rings of growing disks with no intersecting pair.
///
/// Level 1 is a disk at the origin. Level `i ≥ 2` has six disks of radius
/// `ρ = 3^(i−2)` (the radius of the smallest disk enclosing level `i−1`)
/// centered at distance `2ρ` at 60° spacing, so consecutive disks touch and
/// all touch the enclosing disk. Rings alternate a 30° rotation. Finally all
/// radii shrink by `1 − ε`, removing every tangency.
pub fn gen_arbitrary_radii(levels: usize, eps: f64) -> Result<Instance> {
    if levels == 0 {
        return Err(Error::invalid("levels must be at least 1"));
    }
    if !(eps > 0.0 && eps < 0.5) {
        return Err(Error::invalid(alloc::format!("eps must lie in (0, 1/2), got {eps}")));
    }
    let shrink = 1.0 - eps;
    let mut circles = Vec::with_capacity(1 + 6 * (levels - 1));
    circles.push((0.0, 0.0, shrink));
    for level in 2..=levels {
        let rho = ring_radius(level);
        let phase = if level % 2 == 1 { PI / 6.0 } else { 0.0 };
        for j in 0..6 {
            let theta = phase + PI / 3.0 * j as f64;
            circles.push((2.0 * rho * math::cos(theta), 2.0 * rho * math::sin(theta), rho * shrink));
        }
    }
    Instance::from_circles(
        circles,
        Provenance::new("arbitrary-radii").with_param("levels", levels).with_param("eps", eps),
    )
}

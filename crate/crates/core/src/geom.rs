//! Disks, oriented lines and the crossed/left/right trichotomy.
//!
//! Disks are closed: a line that is tangent to a disk crosses it. A disk lies
//! on a side only when it is contained in the corresponding *open* halfplane.
//!
//! For a line with unit normal `n` and offset `c`, a disk with center `p` and
//! radius `r` projects onto the interval `[n·p − r, n·p + r]`. The disk is
//! `Left` when the interval ends strictly before `c`, `Right` when it starts
//! strictly after `c`, and `Crossed` otherwise. This is the same test as
//! `d < −r`, `d > r`, `|d| ≤ r` for `d = n·p − c`, phrased on the interval
//! endpoints so that sweeps over those endpoints agree bit-for-bit with
//! per-disk classification.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::math;

/// Tolerance on `nx² + ny² − 1` accepted by [`Line::new`].
pub const NORMAL_TOLERANCE: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq, Default)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    pub fn dist2(&self, other: &Point) -> f64 {
        let dx = self.x - other.x;
        let dy = self.y - other.y;
        dx * dx + dy * dy
    }
}

impl From<(f64, f64)> for Point {
    fn from((x, y): (f64, f64)) -> Self {
        Point { x, y }
    }
}

/// A closed disk. `id` is its index inside the owning instance.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Disk {
    pub id: usize,
    pub cx: f64,
    pub cy: f64,
    pub r: f64,
}

impl Disk {
    pub fn new(id: usize, cx: f64, cy: f64, r: f64) -> Result<Self> {
        let disk = Disk { id, cx, cy, r };
        disk.validate()?;
        Ok(disk)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.cx.is_finite() && self.cy.is_finite() && self.r.is_finite()) {
            return Err(Error::invalid(alloc::format!("disk {} has a non-finite field", self.id)));
        }
        if self.r <= 0.0 {
            return Err(Error::invalid(alloc::format!("disk {} has non-positive radius {}", self.id, self.r)));
        }
        Ok(())
    }

    #[inline]
    pub fn center(&self) -> Point {
        Point::new(self.cx, self.cy)
    }

    /// Closed-disk intersection test.
    #[inline]
    pub fn intersects(&self, other: &Disk) -> bool {
        let dx = self.cx - other.cx;
        let dy = self.cy - other.cy;
        let s = self.r + other.r;
        dx * dx + dy * dy <= s * s
    }
}

/// Oriented line `{p : nx·px + ny·py = c}` with a unit normal.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Line {
    nx: f64,
    ny: f64,
    c: f64,
}

impl Line {
    pub fn new(nx: f64, ny: f64, c: f64) -> Result<Self> {
        if !(nx.is_finite() && ny.is_finite() && c.is_finite()) {
            return Err(Error::invalid("line has a non-finite field"));
        }
        if (nx * nx + ny * ny - 1.0).abs() > NORMAL_TOLERANCE {
            return Err(Error::invalid(alloc::format!("line normal ({nx}, {ny}) is not unit length")));
        }
        Ok(Line { nx, ny, c })
    }

    /// Unit normal for a line whose direction makes angle `angle` with the
    /// x-axis. The normal is the direction rotated clockwise by a right angle,
    /// so `angle = π/2` (vertical lines) has normal close to `(1, 0)`.
    pub fn normal_for_angle(angle: f64) -> Result<(f64, f64)> {
        if !angle.is_finite() {
            return Err(Error::invalid("line angle must be finite"));
        }
        Ok((math::sin(angle), -math::cos(angle)))
    }

    /// Line of direction `angle` at offset `c` along its normal.
    pub fn from_angle(angle: f64, c: f64) -> Result<Self> {
        let (nx, ny) = Self::normal_for_angle(angle)?;
        Line::new(nx, ny, c)
    }

    /// Line of direction `angle` passing through `p`.
    pub fn through_point(angle: f64, p: Point) -> Result<Self> {
        let (nx, ny) = Self::normal_for_angle(angle)?;
        if !p.is_finite() {
            return Err(Error::invalid("point must be finite"));
        }
        Ok(Line { nx, ny, c: nx * p.x + ny * p.y })
    }

    /// The line `x = x0`, left side is `x < x0`.
    pub fn vertical(x0: f64) -> Self {
        Line { nx: 1.0, ny: 0.0, c: x0 }
    }

    /// The line `y = y0`, left side is `y < y0`.
    pub fn horizontal(y0: f64) -> Self {
        Line { nx: 0.0, ny: 1.0, c: y0 }
    }

    pub fn nx(&self) -> f64 {
        self.nx
    }

    pub fn ny(&self) -> f64 {
        self.ny
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    /// Same point set, opposite orientation. Swaps `Left` and `Right`.
    pub fn flipped(&self) -> Self {
        Line { nx: -self.nx, ny: -self.ny, c: -self.c }
    }

    /// `n·p`, the coordinate of `p` along the normal.
    #[inline]
    pub fn project(&self, x: f64, y: f64) -> f64 {
        self.nx * x + self.ny * y
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SideClass {
    Crossed,
    Left,
    Right,
}

/// `n·center − c`. Negative values are on the left.
pub fn signed_distance(line: &Line, disk: &Disk) -> Result<f64> {
    disk.validate()?;
    Ok(line.project(disk.cx, disk.cy) - line.c)
}

/// Classification of a projected interval `[t − r, t + r]` against offset `c`.
#[inline]
pub(crate) fn classify_interval(t: f64, r: f64, c: f64) -> SideClass {
    if t + r < c {
        SideClass::Left
    } else if t - r > c {
        SideClass::Right
    } else {
        SideClass::Crossed
    }
}

#[inline]
pub fn classify(line: &Line, disk: &Disk) -> SideClass {
    classify_interval(line.project(disk.cx, disk.cy), disk.r, line.c)
}

/// Result of classifying every disk of a set against one line.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Classification {
    /// Positions (in the input slice) of crossed disks, ascending.
    pub crossed: Vec<usize>,
    pub left: usize,
    pub right: usize,
}

impl Classification {
    pub fn total(&self) -> usize {
        self.crossed.len() + self.left + self.right
    }
}

pub fn classify_all(line: &Line, disks: &[Disk]) -> Classification {
    let mut out = Classification::default();
    for (i, d) in disks.iter().enumerate() {
        match classify(line, d) {
            SideClass::Crossed => out.crossed.push(i),
            SideClass::Left => out.left += 1,
            SideClass::Right => out.right += 1,
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit(id: usize, x: f64, y: f64) -> Disk {
        Disk::new(id, x, y, 1.0).unwrap()
    }

    #[test]
    fn signed_distance_examples() {
        let line = Line::vertical(0.0);
        assert_eq!(signed_distance(&line, &unit(0, 0.0, 0.0)).unwrap(), 0.0);
        assert_eq!(classify(&line, &unit(0, 0.0, 0.0)), SideClass::Crossed);
        assert_eq!(signed_distance(&line, &unit(0, 2.0, 0.0)).unwrap(), 2.0);
        assert_eq!(classify(&line, &unit(0, 2.0, 0.0)), SideClass::Right);
        // tangency counts as crossing
        assert_eq!(signed_distance(&line, &unit(0, 1.0, 0.0)).unwrap(), 1.0);
        assert_eq!(classify(&line, &unit(0, 1.0, 0.0)), SideClass::Crossed);
        assert_eq!(classify(&line, &unit(0, -1.0, 0.0)), SideClass::Crossed);
        assert_eq!(classify(&line, &unit(0, -2.0, 0.0)), SideClass::Left);
    }

    #[test]
    fn non_finite_inputs_rejected() {
        assert!(Disk::new(0, f64::NAN, 0.0, 1.0).is_err());
        assert!(Disk::new(0, 0.0, 0.0, 0.0).is_err());
        assert!(Disk::new(0, 0.0, 0.0, f64::INFINITY).is_err());
        assert!(Line::new(f64::NAN, 0.0, 0.0).is_err());
        assert!(Line::new(1.0, 1.0, 0.0).is_err());
        assert!(Line::from_angle(f64::NAN, 0.0).is_err());
        let bad = Disk { id: 0, cx: f64::INFINITY, cy: 0.0, r: 1.0 };
        assert!(signed_distance(&Line::vertical(0.0), &bad).is_err());
    }

    #[test]
    fn classify_all_three_disks() {
        let disks = [unit(0, -5.0, 0.0), unit(1, 0.0, 0.0), unit(2, 5.0, 0.0)];
        let c = classify_all(&Line::vertical(0.0), &disks);
        assert_eq!(c.crossed, [1]);
        assert_eq!((c.left, c.right), (1, 1));
    }

    #[test]
    fn far_line_puts_everything_on_one_side() {
        let disks = [unit(0, -5.0, 0.0), unit(1, 0.0, 0.0), unit(2, 5.0, 3.0)];
        let c = classify_all(&Line::vertical(100.0), &disks);
        assert!(c.crossed.is_empty());
        assert_eq!((c.left, c.right), (3, 0));
        let c = classify_all(&Line::vertical(-100.0), &disks);
        assert_eq!((c.left, c.right), (0, 3));
    }

    #[test]
    fn vertical_angle_normal() {
        let (nx, ny) = Line::normal_for_angle(core::f64::consts::FRAC_PI_2).unwrap();
        assert_eq!(nx, 1.0);
        assert!(ny.abs() < 1e-15);
        let l = Line::from_angle(0.3, 2.0).unwrap();
        assert!((l.nx() * l.nx() + l.ny() * l.ny() - 1.0).abs() <= NORMAL_TOLERANCE);
    }
}

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::geom::{Disk, Point};

/// Where an instance came from: generator family, its parameters and seed.
/// Enough to regenerate the instance bit for bit.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Provenance {
    pub family: String,
    pub params: Vec<(String, String)>,
    pub seed: Option<u64>,
}

impl Provenance {
    pub fn new(family: impl Into<String>) -> Self {
        Provenance { family: family.into(), params: Vec::new(), seed: None }
    }

    pub fn with_param(mut self, key: &str, value: impl ToString) -> Self {
        self.params.push((key.into(), value.to_string()));
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }

    pub fn param(&self, key: &str) -> Option<&str> {
        self.params.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }
}

/// An ordered set of disks with ids `0..n`.
#[derive(Clone, Debug, PartialEq)]
pub struct Instance {
    disks: Vec<Disk>,
    pub provenance: Provenance,
}

impl Instance {
    /// Validates every disk and that ids are exactly `0..n` in order.
    pub fn new(disks: Vec<Disk>, provenance: Provenance) -> Result<Self> {
        for (i, d) in disks.iter().enumerate() {
            d.validate()?;
            if d.id != i {
                return Err(Error::invalid(alloc::format!(
                    "disk at position {i} has id {}, ids must be 0..n in order",
                    d.id
                )));
            }
        }
        Ok(Instance { disks, provenance })
    }

    /// Builds an instance from `(x, y, r)` triples, assigning ids in order.
    pub fn from_circles<I>(circles: I, provenance: Provenance) -> Result<Self>
    where
        I: IntoIterator<Item = (f64, f64, f64)>,
    {
        let disks =
            circles.into_iter().enumerate().map(|(i, (x, y, r))| Disk::new(i, x, y, r)).collect::<Result<Vec<_>>>()?;
        Ok(Instance { disks, provenance })
    }

    pub fn disks(&self) -> &[Disk] {
        &self.disks
    }

    pub fn len(&self) -> usize {
        self.disks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.disks.is_empty()
    }

    pub fn centers(&self) -> Vec<Point> {
        self.disks.iter().map(Disk::center).collect()
    }

    /// Largest over smallest radius; `1.0` for an empty instance.
    pub fn radius_ratio(&self) -> f64 {
        let (lo, hi) = self.disks.iter().fold((f64::INFINITY, 0.0f64), |(lo, hi), d| (lo.min(d.r), hi.max(d.r)));
        if self.disks.is_empty() {
            1.0
        } else {
            hi / lo
        }
    }

    /// Applies `f` to every center, keeping radii, ids and provenance.
    pub fn map_centers(&self, mut f: impl FnMut(Point) -> Point) -> Result<Self> {
        let disks = self
            .disks
            .iter()
            .map(|d| {
                let p = f(d.center());
                Disk::new(d.id, p.x, p.y, d.r)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Instance { disks, provenance: self.provenance.clone() })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_must_be_sequential() {
        let d = |id| Disk::new(id, 0.0, 0.0, 1.0).unwrap();
        assert!(Instance::new(alloc::vec![d(0), d(1)], Provenance::default()).is_ok());
        assert!(Instance::new(alloc::vec![d(1), d(0)], Provenance::default()).is_err());
    }

    #[test]
    fn radius_ratio() {
        let inst = Instance::from_circles([(0.0, 0.0, 1.0), (5.0, 0.0, 9.0), (9.0, 0.0, 3.0)], Provenance::new("test"))
            .unwrap();
        assert_eq!(inst.radius_ratio(), 9.0);
        assert_eq!(inst.disks()[2].id, 2);
    }
}

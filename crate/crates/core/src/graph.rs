//! Intersection graphs of closed disks.
//!
//! Disks are bucketed by radius class (`⌊log2(r / r_min)⌋`). Each class gets
//! a uniform grid whose cells are slightly wider than twice the largest radius
//! in the class, so every neighbour of a disk from the same or a smaller class
//! lies in the 3×3 block of cells around its center. Unit-disk instances have
//! a single class and a single grid.

use alloc::vec;
use alloc::vec::Vec;

use hashbrown::HashMap;

use crate::geom::Disk;
use crate::instance::Instance;
use crate::math;

/// Edges are `(i, j)` with `i < j`, sorted lexicographically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionGraph {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl IntersectionGraph {
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &(i, j) in &self.edges {
            deg[i] += 1;
            deg[j] += 1;
        }
        deg
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(i, j) in &self.edges {
            adj[i].push(j);
            adj[j].push(i);
        }
        adj
    }

    pub fn component_count(&self) -> usize {
        let mut uf = UnionFind::new(self.n);
        for &(i, j) in &self.edges {
            uf.union(i, j);
        }
        uf.set_count()
    }
}

/// Disjoint sets with path compression and union by rank.
#[derive(Clone, Debug)]
pub struct UnionFind {
    parent: Vec<usize>,
    rank: Vec<u8>,
    sets: usize,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect(), rank: vec![0; n], sets: n }
    }

    pub fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut cur = x;
        while self.parent[cur] != root {
            let next = self.parent[cur];
            self.parent[cur] = root;
            cur = next;
        }
        root
    }

    /// Returns `true` if `a` and `b` were in different sets.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra == rb {
            return false;
        }
        match self.rank[ra].cmp(&self.rank[rb]) {
            core::cmp::Ordering::Less => self.parent[ra] = rb,
            core::cmp::Ordering::Greater => self.parent[rb] = ra,
            core::cmp::Ordering::Equal => {
                self.parent[rb] = ra;
                self.rank[ra] = self.rank[ra].saturating_add(1);
            }
        }
        self.sets -= 1;
        true
    }

    pub fn set_count(&self) -> usize {
        self.sets
    }
}

type CellKey = (i64, i64);

struct Grid {
    cell: f64,
    cells: HashMap<CellKey, Vec<usize>>,
}

impl Grid {
    fn new(cell: f64, members: &[usize], disks: &[Disk]) -> Self {
        let mut cells: HashMap<CellKey, Vec<usize>> = HashMap::with_capacity(members.len());
        for &i in members {
            let key = Self::key_for(cell, disks[i].cx, disks[i].cy);
            cells.entry(key).or_default().push(i);
        }
        Grid { cell, cells }
    }

    fn key_for(cell: f64, x: f64, y: f64) -> CellKey {
        (math::floor(x / cell) as i64, math::floor(y / cell) as i64)
    }

    fn neighbours(&self, x: f64, y: f64) -> impl Iterator<Item = usize> + '_ {
        let (kx, ky) = Self::key_for(self.cell, x, y);
        (-1i64..=1)
            .flat_map(move |dx| (-1i64..=1).map(move |dy| (kx + dx, ky + dy)))
            .filter_map(move |k| self.cells.get(&k))
            .flatten()
            .copied()
    }
}

/// Exact intersection graph (tangent disks are adjacent).
pub fn build_graph(instance: &Instance) -> IntersectionGraph {
    build_graph_from_disks(instance.disks())
}

pub fn build_graph_from_disks(disks: &[Disk]) -> IntersectionGraph {
    let n = disks.len();
    if n == 0 {
        return IntersectionGraph { n, edges: Vec::new() };
    }
    let r_min = disks.iter().map(|d| d.r).fold(f64::INFINITY, f64::min);

    // radius classes in ascending order
    let class_of = |d: &Disk| -> usize {
        let c = math::floor(math::log2(d.r / r_min));
        if c > 0.0 {
            c as usize
        } else {
            0
        }
    };
    let mut by_class: Vec<(usize, Vec<usize>)> = Vec::new();
    {
        let mut order: Vec<(usize, usize)> = disks.iter().map(|d| (class_of(d), d.id)).collect();
        order.sort_unstable();
        for (class, i) in order {
            match by_class.last_mut() {
                Some((c, members)) if *c == class => members.push(i),
                _ => by_class.push((class, vec![i])),
            }
        }
    }

    // cells are padded a little so rounding in x / cell never skips a ring
    let grids: Vec<Grid> = by_class
        .iter()
        .map(|(_, members)| {
            let r_max = members.iter().map(|&i| disks[i].r).fold(0.0, f64::max);
            Grid::new(2.0 * r_max * (1.0 + 1e-9), members, disks)
        })
        .collect();

    let mut edges = Vec::new();
    for (a, (_, members)) in by_class.iter().enumerate() {
        for &i in members {
            let di = &disks[i];
            for j in grids[a].neighbours(di.cx, di.cy) {
                if j > i && di.intersects(&disks[j]) {
                    edges.push((i, j));
                }
            }
            for grid in &grids[a + 1..] {
                for j in grid.neighbours(di.cx, di.cy) {
                    if di.intersects(&disks[j]) {
                        edges.push((i.min(j), i.max(j)));
                    }
                }
            }
        }
    }
    edges.sort_unstable();
    IntersectionGraph { n, edges }
}

/// True when the graph has at most one connected component.
pub fn is_connected(graph: &IntersectionGraph) -> bool {
    graph.n <= 1 || graph.component_count() == 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instance::Provenance;

    fn inst(c: &[(f64, f64, f64)]) -> Instance {
        Instance::from_circles(c.iter().copied(), Provenance::new("test")).unwrap()
    }

    #[test]
    fn tangent_disks_are_adjacent() {
        let g = build_graph(&inst(&[(0.0, 0.0, 1.0), (2.0, 0.0, 1.0)]));
        assert_eq!(g.m(), 1);
        assert_eq!(g.edges, [(0, 1)]);
    }

    #[test]
    fn far_disks_disconnected() {
        let g = build_graph(&inst(&[(0.0, 0.0, 1.0), (10.0, 0.0, 1.0)]));
        assert_eq!(g.m(), 0);
        assert!(!is_connected(&g));
    }

    #[test]
    fn empty_and_single_are_connected() {
        assert!(is_connected(&build_graph(&inst(&[]))));
        assert!(is_connected(&build_graph(&inst(&[(3.0, 4.0, 1.0)]))));
    }

    #[test]
    fn mixed_radii_cross_class_edges() {
        // big disk overlapping two small ones in distant cells of the small grid
        let g = build_graph(&inst(&[
            (0.0, 0.0, 100.0),
            (99.5, 0.0, 1.0),
            (-60.0, 60.0, 1.0),
            (300.0, 0.0, 1.0),
            (201.0, 0.0, 1.0),
        ]));
        assert_eq!(g.edges, [(0, 1), (0, 2)]);
    }

    #[test]
    fn union_find_counts_sets() {
        let mut uf = UnionFind::new(5);
        assert!(uf.union(0, 1));
        assert!(uf.union(3, 4));
        assert!(!uf.union(1, 0));
        assert_eq!(uf.set_count(), 3);
        assert_eq!(uf.find(4), uf.find(3));
    }
}

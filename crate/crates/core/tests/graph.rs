use disksever_core::generators::{gen_arbitrary_radii, gen_random, gen_snake};
use disksever_core::{build_graph, is_connected, Disk, Instance, Provenance};
use proptest::prelude::*;

fn brute_force(inst: &Instance) -> Vec<(usize, usize)> {
    let d = inst.disks();
    let mut e = vec![];
    for i in 0..d.len() {
        for j in i + 1..d.len() {
            let (dx, dy) = (d[i].cx - d[j].cx, d[i].cy - d[j].cy);
            if (dx * dx + dy * dy).sqrt() <= d[i].r + d[j].r {
                e.push((i, j));
            }
        }
    }
    e
}

fn instance_from(c: Vec<(f64, f64, f64)>) -> Instance {
    Instance::from_circles(c, Provenance::new("test")).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn matches_brute_force_unit(c in prop::collection::vec((0.0..20.0f64, 0.0..20.0f64), 0..200)) {
        let inst = instance_from(c.into_iter().map(|(x, y)| (x, y, 1.0)).collect());
        prop_assert_eq!(build_graph(&inst).edges, brute_force(&inst));
    }

    #[test]
    fn matches_brute_force_mixed(c in prop::collection::vec((0.0..200.0f64, 0.0..200.0f64, 0.05..40.0f64), 0..150)) {
        let inst = instance_from(c);
        prop_assert_eq!(build_graph(&inst).edges, brute_force(&inst));
    }

    #[test]
    fn edge_count_survives_rigid_motion(seed in 0u64..1000, angle in 0.0..std::f64::consts::TAU, tx in -50.0..50.0f64, ty in -50.0..50.0f64) {
        let inst = gen_random(120, 15.0, seed, false, 0).unwrap();
        let (s, c) = angle.sin_cos();
        let moved = inst.map_centers(|p| (c * p.x - s * p.y + tx, s * p.x + c * p.y + ty).into()).unwrap();
        prop_assert_eq!(build_graph(&inst).m(), build_graph(&moved).m());
    }
}

#[test]
fn fifty_random_disks() {
    let inst = gen_random(50, 10.0, 3, false, 0).unwrap();
    assert_eq!(build_graph(&inst).edges, brute_force(&inst));
}

#[test]
fn snake_graphs_are_paths() {
    for q in (3..=41).step_by(2) {
        let inst = gen_snake(q).unwrap();
        let g = build_graph(&inst);
        let n = inst.len();
        assert_eq!(g.edges, brute_force(&inst), "q = {q}");
        assert_eq!(g.m(), n - 1, "q = {q}");
        let deg = g.degrees();
        assert_eq!(deg.iter().filter(|&&d| d == 1).count(), 2, "q = {q}");
        assert!(deg.iter().all(|&d| d == 1 || d == 2), "q = {q}");
        assert!(is_connected(&g));
    }
    let g = build_graph(&gen_snake(11).unwrap());
    assert_eq!((g.n, g.m()), (71, 70));
}

#[test]
fn nested_rings_have_no_edges() {
    for levels in 1..=12 {
        let inst = gen_arbitrary_radii(levels, 0.05).unwrap();
        assert!(brute_force(&inst).is_empty());
        assert_eq!(build_graph(&inst).m(), 0, "levels = {levels}");
    }
}

#[test]
fn two_components() {
    let inst = Instance::new(
        vec![
            Disk::new(0, 0.0, 0.0, 1.0).unwrap(),
            Disk::new(1, 1.5, 0.0, 1.0).unwrap(),
            Disk::new(2, 10.0, 0.0, 1.0).unwrap(),
        ],
        Provenance::default(),
    )
    .unwrap();
    let g = build_graph(&inst);
    assert_eq!(g.component_count(), 2);
    assert!(!is_connected(&g));
}

use disksever_core::generators::{
    choose_k, gen_arbitrary_radii, gen_lower_bound, gen_random, gen_random_disjoint, gen_snake, layer_pairs,
    lower_bound_constant, lower_bound_layer, ring_radius, snake_size, LOWER_BOUND_EPS,
};
use disksever_core::{build_graph, classify_all, is_connected, Error, Line};

#[test]
fn lower_bound_layers_match_closed_form() {
    for (n, m) in [(60, 540), (100, 900), (200, 2000), (300, 5000)] {
        let (inst, p) = gen_lower_bound(n, m, LOWER_BOUND_EPS).unwrap();
        assert_eq!(p.k, choose_k(n, m).unwrap());
        let mut per_layer = vec![0usize; p.layers + 1];
        let d = inst.disks();
        for i in 0..d.len() {
            for j in i + 1..d.len() {
                if ((d[i].cx - d[j].cx).hypot(d[i].cy - d[j].cy)) <= 2.0 {
                    let (li, lj) = (lower_bound_layer(i, p.k), lower_bound_layer(j, p.k));
                    assert_eq!(li, lj, "edge between layers {li} and {lj}");
                    per_layer[li] += 1;
                }
            }
        }
        for (layer, &count) in per_layer.iter().enumerate().skip(1) {
            assert_eq!(count, layer_pairs(layer, p.k, LOWER_BOUND_EPS), "n {n} m {m} layer {layer}");
        }
        assert_eq!(per_layer.iter().sum::<usize>(), p.m_prime);
        assert!(n <= p.n_prime && p.n_prime <= 2 * n);
        assert!(m.div_ceil(9) <= p.m_prime && p.m_prime <= 6 * m);
    }
}

#[test]
fn lower_bound_rejects_out_of_range() {
    assert!(matches!(gen_lower_bound(100, 800, LOWER_BOUND_EPS), Err(Error::InvalidInput(_))));
    assert!(matches!(gen_lower_bound(100, 1700, LOWER_BOUND_EPS), Err(Error::InvalidInput(_))));
    assert!(gen_lower_bound(100, 900, 0.5).is_err());
}

#[test]
fn lower_bound_constant_value() {
    let c = 6f64.sqrt() / (4.0 * std::f64::consts::PI + 1.0) - 2.0 / (9.0 * 6f64.sqrt());
    assert_eq!(lower_bound_constant(), c);
    assert!((c - 0.0898).abs() < 5e-4);
}

#[test]
fn nested_rings() {
    let eps = 0.01;
    for levels in 2..=12 {
        let inst = gen_arbitrary_radii(levels, eps).unwrap();
        assert_eq!(inst.len(), 1 + 6 * (levels - 1));
        assert_eq!(build_graph(&inst).m(), 0);
        let ratio = inst.radius_ratio();
        assert!((ratio / 3f64.powi(levels as i32 - 2) - 1.0).abs() < 1e-12);
        // rings before `level` fit in a disk of radius ring_radius(level)
        let d = inst.disks();
        for level in 2..=levels {
            let inner = &d[..1 + 6 * (level - 2)];
            let enclosing = inner.iter().map(|q| q.cx.hypot(q.cy) + q.r / (1.0 - eps)).fold(0.0, f64::max);
            assert!((enclosing / ring_radius(level) - 1.0).abs() < 1e-12, "level {level}");
        }
    }
}

#[test]
fn snake_layout() {
    for q in (3..=41).step_by(2) {
        let inst = gen_snake(q).unwrap();
        assert_eq!(inst.len(), snake_size(q));
        for x in (2..q).step_by(2) {
            let cl = classify_all(&Line::vertical(x as f64), inst.disks());
            assert_eq!(cl.crossed.len(), 1, "q {q} x {x}");
        }
    }
    assert!(gen_snake(4).is_err());
    assert!(gen_snake(1).is_err());
}

#[test]
fn connected_random_instance() {
    let inst = gen_random(100, 10.0, 7, true, 1000).unwrap();
    let g = build_graph(&inst);
    assert!(is_connected(&g));
    let d = inst.disks();
    let brute = (0..d.len())
        .flat_map(|i| (i + 1..d.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| (d[i].cx - d[j].cx).hypot(d[i].cy - d[j].cy) <= 2.0)
        .count();
    assert_eq!(g.m(), brute);
    assert_eq!(inst, gen_random(100, 10.0, 7, true, 1000).unwrap());
}

#[test]
fn disjoint_instances_have_no_edges() {
    for seed in 0..5 {
        let inst = gen_random_disjoint(400, 5.0 * 20.0, seed, 10_000).unwrap();
        assert_eq!(build_graph(&inst).m(), 0);
        assert!(inst.disks().iter().all(|d| (0.0..=100.0).contains(&d.cx) && (0.0..=100.0).contains(&d.cy)));
    }
}

#[test]
fn rejection_limit_is_input_error() {
    let err = gen_random(200, 1000.0, 1, true, 3).unwrap_err();
    assert!(matches!(err, Error::RejectionLimit { .. }));
    assert!(err.is_input_error());
}

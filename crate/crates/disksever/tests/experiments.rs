use disksever::config::ExperimentConfig;
use disksever::experiments::{run_experiment1, run_snake_experiment};

#[test]
fn more_trials_shrink_variance() {
    let cfg = ExperimentConfig::from_toml(
        "id = \"var\"\nexperiment = \"exp1\"\nseed = 11\nrepetitions = 30\nks = [1, 20]\n\
         [random]\nn_start = 1000\nn_end = 2000\nn_step = 500\nside = 25.0\n",
    )
    .unwrap();
    let out = run_experiment1(&cfg).unwrap();
    for pair in out.summary.chunks(2) {
        let (k1, k20) = (&pair[0], &pair[1]);
        assert_eq!((k1.k, k20.k), (1, 20));
        assert!(k20.var_size < k1.var_size, "{}: {} vs {}", k1.instance_id, k20.var_size, k1.var_size);
        assert!(k20.mean_size <= k1.mean_size);
    }
}

#[test]
fn single_trial_size_grows_with_q() {
    let cfg = ExperimentConfig::from_toml(
        "id = \"snake\"\nexperiment = \"snake\"\nseed = 5\nrepetitions = 20\nks = [1, 100]\n\
         [snake]\nq_start = 5\nq_end = 45\nq_step = 10\noptimal_max_q = 15\n",
    )
    .unwrap();
    let out = run_snake_experiment(&cfg).unwrap();
    let k1: Vec<f64> = out.summary.iter().filter(|s| s.algorithm == "sweep" && s.k == 1).map(|s| s.mean_size).collect();
    assert_eq!(k1.len(), 5);
    assert!(k1.windows(2).all(|w| w[1] > w[0]), "{k1:?}");
    let optimal: Vec<f64> = out.summary.iter().filter(|s| s.algorithm == "optimal").map(|s| s.mean_size).collect();
    assert_eq!(optimal, [1.0, 1.0]);
}

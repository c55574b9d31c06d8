//! Standard instances shared by tests, benchmarks and the CLI.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exact::{rat, ratio, Mat, Rat};
use crate::space::{Graph, GraphMode, LinearSpace};

/// `F^2` with both coordinates: `L = V`.
pub fn b2() -> LinearSpace {
    LinearSpace::make(&["1", "2"], &Mat::identity(2)).expect("identity has full rank")
}

/// The plane `x1 + x2 + x3 = 0` written as the row space of `[[1,0,-1],[0,1,-1]]`.
pub fn u23() -> LinearSpace {
    LinearSpace::make(
        &["1", "2", "3"],
        &Mat::from_i64(&[&[1, 0, -1], &[0, 1, -1]]),
    )
    .expect("full rank")
}

/// Oriented triangle `1 -> 2 -> 3 -> 1`, edges labelled by their tails.
pub fn triangle() -> Graph {
    Graph::new()
        .edge("1", "2", "1")
        .edge("2", "3", "2")
        .edge("3", "1", "3")
}

/// Triangle with every edge doubled; parallel edges are oppositely oriented
/// and `e1, f1, g1` form an oriented cycle.
pub fn doubled_triangle() -> Graph {
    Graph::new()
        .edge("1", "2", "e1")
        .edge("2", "1", "e2")
        .edge("2", "3", "f1")
        .edge("3", "2", "f2")
        .edge("3", "1", "g1")
        .edge("1", "3", "g2")
}

/// Complete graph on four vertices, edges `i -> j` for `i < j`.
pub fn k4() -> Graph {
    let mut g = Graph::new();
    for i in 1..=4 {
        for j in i + 1..=4 {
            g = g.edge(&i.to_string(), &j.to_string(), &format!("{i}{j}"));
        }
    }
    g
}

/// Cycle space of the triangle.
pub fn k3() -> LinearSpace {
    LinearSpace::from_graph(&triangle(), GraphMode::Cographical).expect("triangle is connected")
}

/// Cycle space of the doubled triangle.
pub fn dt() -> LinearSpace {
    LinearSpace::from_graph(&doubled_triangle(), GraphMode::Cographical)
        .expect("doubled triangle is connected")
}

/// Generic rank-`r` subspace of `F^n` realizing the uniform matroid `U_{r,n}`
/// (rows of a Vandermonde matrix at the points `1..=n`).
pub fn uniform(r: usize, n: usize) -> LinearSpace {
    assert!(r <= n);
    let rows = (0..r)
        .map(|i| (1..=n as i64).map(|x| rat(x.pow(i as u32))).collect())
        .collect();
    let labels: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    LinearSpace::make(&labels, &Mat::from_rows(n, rows)).expect("Vandermonde rows are independent")
}

/// Seeded random `r x n` rational matrix of full rank; entries are small
/// fractions with roughly one zero in five.
pub fn random_space(seed: u64, r: usize, n: usize) -> LinearSpace {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let labels: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    loop {
        let rows: Vec<Vec<Rat>> = (0..r)
            .map(|_| (0..n).map(|_| random_entry(&mut rng)).collect())
            .collect();
        if let Ok(a) = LinearSpace::make(&labels, &Mat::from_rows(n, rows)) {
            return a;
        }
    }
}

fn random_entry(rng: &mut impl Rng) -> Rat {
    if rng.gen_bool(0.2) {
        return rat(0);
    }
    let num = loop {
        let x = rng.gen_range(-4i64..=4);
        if x != 0 {
            break x;
        }
    };
    ratio(num, rng.gen_range(1i64..=3))
}

/// The instance set exercised by the acceptance suite.
pub fn corpus() -> Vec<(String, LinearSpace)> {
    let mut out = vec![
        ("B2".to_string(), b2()),
        ("U23".to_string(), u23()),
        ("K3".to_string(), k3()),
        ("DT".to_string(), dt()),
    ];
    for n in 1..=6 {
        for r in 0..=n {
            out.push((format!("U{r},{n}"), uniform(r, n)));
        }
    }
    out.push((
        "K4-graphical".to_string(),
        LinearSpace::from_graph(&k4(), GraphMode::Graphical).expect("connected"),
    ));
    out.push((
        "K4-cographical".to_string(),
        LinearSpace::from_graph(&k4(), GraphMode::Cographical).expect("connected"),
    ));
    for seed in 0..20 {
        out.push((format!("random-{seed}"), random_space(seed, 3, 6)));
    }
    out
}

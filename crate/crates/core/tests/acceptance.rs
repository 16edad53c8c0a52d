//! Acceptance criteria. Run with `cargo test --test acceptance`; prints one
//! PASS/FAIL line per criterion and exits nonzero if any fails.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use itertools::Itertools;
use num_traits::Zero;

use kummer_hessian::correspondence::{
    base_plane_points, branch_to_mu, mu_to_branch, plane_equation, plane_points, points_rank, r_form_numeric,
    r_quadric, r_quadric_symbolic, linear_form, Normalization,
};
use kummer_hessian::cyclic::{
    a5_orbits, conic_labels_standard, conic_meets_line, node_incidence_profile, unoriented_orders, CyclicOrder,
};
use kummer_hessian::hessian::{
    branch_sextic_factorization, symbolic_mu, vanishing_quartics_dimension, verify_hessian_identity, vars,
    LineLabel, NodeLabel,
};
use kummer_hessian::invariant::{
    closed_form_condition_check, cubic_condition, derive_condition, is_s5_symmetric, symmetrized_resultant,
    TripleReading,
};
use kummer_hessian::kummer::{
    enumerate_weber_hexads, incidence, is_weber_hexad, standard_hexad, translation_s6_orbit, TropeLabel,
    TwoTorsionLabel,
};
use kummer_hessian::matrix::PolyMatrix;
use kummer_hessian::sampling::{random_locus_mu, random_mu, random_mu_with_alpha_beta, rng, triple_grid, DEFAULT_SEED};
use kummer_hessian::scalar::int;
use kummer_hessian::Poly;

struct Outcome {
    passed: bool,
    detail: String,
}

fn ok(detail: impl Into<String>) -> Outcome {
    Outcome { passed: true, detail: detail.into() }
}

fn fail(detail: impl Into<String>) -> Outcome {
    Outcome { passed: false, detail: detail.into() }
}

fn check(cond: bool, detail: String) -> Outcome {
    Outcome { passed: cond, detail }
}

fn run(id: usize, name: &str, bound: Duration, f: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let out = f();
    let elapsed = start.elapsed();
    let in_time = elapsed <= bound;
    let passed = out.passed && in_time;
    println!(
        "[{}] {:>2}. {:<34} {:>9.3}s (bound {:>4}s)  {}{}",
        if passed { "PASS" } else { "FAIL" },
        id,
        name,
        elapsed.as_secs_f64(),
        bound.as_secs(),
        out.detail,
        if in_time { "" } else { "  [runtime bound exceeded]" }
    );
    passed
}

fn weber_count() -> Outcome {
    let candidates = TwoTorsionLabel::all().into_iter().combinations(6).count();
    let n = enumerate_weber_hexads().len();
    check(candidates == 8008 && n == 192, format!("{n} of {candidates} hexads"))
}

fn vanishing_dimension() -> Outcome {
    let dim = vanishing_quartics_dimension();
    check(dim == 5, format!("dimension {dim}"))
}

fn hessian_identity() -> Outcome {
    let mut r = rng(DEFAULT_SEED);
    for _ in 0..20 {
        let d = random_mu(&mut r);
        let expected = int(1296) / d.mu().iter().fold(int(1), |acc, m| acc * m);
        match verify_hessian_identity(&d) {
            Ok(c) if c == expected => {}
            Ok(c) => return fail(format!("mu = {d}: ratio {c}, expected 1296/prod(mu) = {expected}")),
            Err(e) => return fail(format!("mu = {d}: {e}")),
        }
    }
    ok("20 samples, det Hess = 1296/prod(mu) * H")
}

/// `sum mu^3 - (p2 p1 - p3) + 2 e3`, built from power sums.
fn power_sum_oracle() -> Poly {
    let mu = symbolic_mu();
    let p = |k: u32| mu.iter().fold(Poly::zero(vars()), |acc, m| &acc + &m.pow(k));
    let e3 = (0..5)
        .combinations(3)
        .fold(Poly::zero(vars()), |acc, c| &acc + &(&(&mu[c[0]] * &mu[c[1]]) * &mu[c[2]]));
    &(&p(3) - &(&(&p(2) * &p(1)) - &p(3))) + &e3.scale(&int(2))
}

fn resultant_identity() -> Outcome {
    let mu = symbolic_mu();
    let lhs = match symmetrized_resultant(&mu) {
        Ok(p) => p,
        Err(e) => return fail(e.to_string()),
    };
    let f = match derive_condition() {
        Ok(c) => c.f.clone(),
        Err(e) => return fail(e.to_string()),
    };
    let prod = mu.iter().fold(Poly::one(vars()), |acc, m| &acc * m);
    let exact = lhs == &prod.scale(&int(512)) * &f;
    let cubic = f.is_homogeneous() && f.total_degree() == Some(3);
    let symmetric = is_s5_symmetric(&f);
    let oracle = f == power_sum_oracle();
    check(
        exact && cubic && symmetric && oracle,
        format!(
            "Res = 512 prod(mu) F: {exact}; homogeneous cubic: {cubic}; S5-symmetric: {symmetric}; F = power-sum form: {oracle}"
        ),
    )
}

fn closed_form() -> Outcome {
    match closed_form_condition_check() {
        Ok(r) => check(
            r.matching == TripleReading::Unordered && r.scalar == int(1),
            format!(
                "reading {:?} ({} terms), scalar {}; other reading proportional: {}",
                r.matching,
                r.readings.iter().find(|c| c.reading == r.matching).map_or(0, |c| c.terms),
                r.scalar,
                r.readings.iter().filter(|c| c.scalar.is_some()).count() > 1
            ),
        ),
        Err(e) => fail(e.to_string()),
    }
}

fn numeric_minors_vanish(m: &kummer_hessian::Mat) -> bool {
    PolyMatrix::from_numeric(vars(), m)
        .minors(3)
        .expect("4x4")
        .iter()
        .all(Poly::is_zero)
}

fn r_dichotomy() -> Outcome {
    let sym = r_quadric_symbolic();
    let det_zero = sym.determinant().map(|d| d.is_zero()).unwrap_or(false);
    let p = &base_plane_points()[0];
    let kernel = (0..4).all(|i| (0..4).fold(Poly::zero(vars()), |acc, j| &acc + &(sym.get(i, j) * &p[j])).is_zero());
    let mut r = rng(DEFAULT_SEED + 6);
    let mut on_locus = 0;
    for _ in 0..50 {
        let d = random_locus_mu(&mut r);
        if numeric_minors_vanish(&r_quadric(&d).expect("alpha, beta defined")) {
            on_locus += 1;
        }
    }
    let mut off_locus = 0;
    for _ in 0..50 {
        let d = random_mu_with_alpha_beta(&mut r);
        if !numeric_minors_vanish(&r_quadric(&d).expect("alpha, beta defined")) {
            off_locus += 1;
        }
    }
    check(
        det_zero && kernel && on_locus == 50 && off_locus == 50,
        format!(
            "det = 0: {det_zero}; singular point in kernel: {kernel}; rank <= 2 on locus {on_locus}/50; rank 3 off locus {off_locus}/50"
        ),
    )
}

fn round_trip() -> Outcome {
    let mut report = Vec::new();
    let mut primary_ok = true;
    for variant in [Normalization::DMinusOne, Normalization::DPlusOne] {
        let grid = triple_grid(variant);
        let mut trips = 0;
        let mut on_locus = 0;
        for t in &grid {
            let Ok(d) = branch_to_mu(t) else { continue };
            if cubic_condition(&d).is_zero() {
                on_locus += 1;
            }
            if mu_to_branch(&d, variant).as_ref() == Ok(t) {
                trips += 1;
            }
        }
        if variant == Normalization::DMinusOne {
            primary_ok = grid.len() >= 100 && trips == grid.len() && on_locus == grid.len();
        }
        report.push(format!(
            "{}: round trip {trips}/{n}, F = 0 {on_locus}/{n}",
            variant.name(),
            n = grid.len()
        ));
    }
    check(primary_ok, report.join("; "))
}

fn coplanarity() -> Outcome {
    let order: CyclicOrder = "03214".parse().expect("valid");
    let mut r = rng(DEFAULT_SEED + 8);
    for _ in 0..20 {
        let d = random_locus_mu(&mut r);
        let pts = plane_points(&d, order).expect("points");
        let rank = points_rank(&pts);
        if rank != 3 {
            return fail(format!("mu = {d}: rank {rank}"));
        }
        let plane = linear_form(&plane_equation(&pts).expect("rank 3"));
        let rq = r_form_numeric(&d).expect("alpha, beta defined");
        match rq.div_exact(&plane) {
            Ok(q) if q.total_degree() == Some(1) && &q * &plane == rq => {}
            _ => return fail(format!("mu = {d}: R not divisible by the plane")),
        }
    }
    ok("20 locus samples: rank 3, R = plane * linear")
}

fn branch_sextic() -> Outcome {
    let mut r = rng(DEFAULT_SEED + 9);
    let mut ratios = BTreeSet::new();
    for _ in 0..20 {
        let d = random_mu(&mut r);
        match branch_sextic_factorization(&d) {
            Ok(b) if !b.ratio.is_zero() => {
                ratios.insert(b.ratio.to_string());
            }
            Ok(_) => return fail(format!("mu = {d}: zero ratio")),
            Err(e) => return fail(format!("mu = {d}: {e}")),
        }
    }
    check(
        ratios.len() == 1 && ratios.contains("1"),
        format!("20 samples, disc_X3(H) / (E_s E_t) in {ratios:?}"),
    )
}

fn combinatorics() -> Outcome {
    let points = TwoTorsionLabel::all();
    let tropes = TropeLabel::all();
    let rows_ok = points.iter().all(|&p| tropes.iter().filter(|&&t| incidence(p, t)).count() == 6);
    let cols_ok = tropes.iter().all(|&t| points.iter().filter(|&&p| incidence(p, t)).count() == 6);
    let standard_ok = is_weber_hexad(&standard_hexad());
    let all: BTreeSet<_> = enumerate_weber_hexads().iter().cloned().collect();
    let (orbit, stabilizer) = translation_s6_orbit(&standard_hexad());
    let closure_ok = orbit == all && stabilizer == 60;

    let labels = conic_labels_standard();
    let classes: BTreeSet<CyclicOrder> = labels
        .iter()
        .flat_map(|(_, o)| [o.unoriented(), o.residual().unoriented()])
        .collect();
    let label_set: BTreeSet<CyclicOrder> = labels.iter().map(|(_, o)| o.unoriented()).collect();
    let orders_ok = classes == unoriented_orders() && classes.len() == 12 && a5_orbits().contains(&label_set);

    // a node p_rst is met twice exactly when the conic meets two of its lines
    let profiles_ok = CyclicOrder::all().into_iter().all(|o| {
        NodeLabel::all().into_iter().all(|n| {
            let met = n.lines().iter().filter(|&&l| conic_meets_line(o, l)).count();
            let expected = if met == 2 { 2 } else { 1 };
            node_incidence_profile(o, n) == expected && met != 3
        })
    }) && LineLabel::all().len() == 10;
    check(
        rows_ok && cols_ok && standard_ok && closure_ok && orders_ok && profiles_ok,
        format!(
            "incidence sums: {}; standard hexad: {standard_ok}; translation x S6 orbit = 192, stabilizer 60: {closure_ok}; 12 orders exhausted: {orders_ok}; node profiles: {profiles_ok}",
            rows_ok && cols_ok
        ),
    )
}

type Criterion = (&'static str, Duration, fn() -> Outcome);

fn main() {
    let secs = Duration::from_secs;
    let criteria: Vec<Criterion> = vec![
        ("Weber hexad count", secs(1), weber_count),
        ("vanishing quartics dimension", secs(1), vanishing_dimension),
        ("Hessian identity", secs(10), hessian_identity),
        ("resultant identity", secs(30), resultant_identity),
        ("closed-form reconciliation", secs(30), closed_form),
        ("R-quadric dichotomy", secs(30), r_dichotomy),
        ("correspondence round trip", secs(30), round_trip),
        ("coplanarity", secs(30), coplanarity),
        ("branch-sextic factorization", secs(30), branch_sextic),
        ("combinatorial battery", secs(1), combinatorics),
    ];
    let mut failures = 0;
    for (i, (name, bound, f)) in criteria.into_iter().enumerate() {
        if !run(i + 1, name, bound, f) {
            failures += 1;
        }
    }
    println!("{} of 10 criteria passed", 10 - failures);
    if failures > 0 {
        std::process::exit(1);
    }
}

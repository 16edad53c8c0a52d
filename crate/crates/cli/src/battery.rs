//! The full verification battery behind `verify-all`.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde_json::{json, Value};

use kummer_hessian::correspondence::{
    base_plane_points, branch_to_mu, linear_form, matching_node_assignments, mu_to_branch, plane_equation,
    plane_points, points_rank, projectively_equivalent, r_form_numeric, r_quadric_symbolic, r_rank_dichotomy,
    reference_triple, trope_six_points, Normalization,
};
use kummer_hessian::cyclic::{a5_orbits, conic_labels_standard, node_incidence_profile, unoriented_orders, CyclicOrder};
use kummer_hessian::hessian::{
    branch_sextic_factorization, cubic_is_smooth, symbolic_mu, tangent_plane_section, vanishing_quartics_dimension,
    vars, verify_hessian_identity, NodeLabel,
};
use kummer_hessian::invariant::{
    alpha_condition_quotient, alpha_difference_identity, closed_form_condition_check, cubic_condition,
    derive_condition, is_s5_symmetric, symmetrized_resultant,
};
use kummer_hessian::kummer::{
    enumerate_weber_hexads, incidence, is_weber_hexad, standard_hexad, translation_s6_orbit, TropeLabel,
    TwoTorsionLabel,
};
use kummer_hessian::sampling::{random_locus_mu, random_mu, random_mu_with_alpha_beta, rng, triple_grid};
use kummer_hessian::scalar::int;
use kummer_hessian::Poly;
use num_traits::Zero;

use crate::report::{Outcome, Report};

type Check = fn(u64) -> Outcome;

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

const CHECKS: &[(&str, Check)] = &[
    ("weber_hexads", weber_hexads),
    ("vanishing_quartics", vanishing_quartics),
    ("hessian_identity", hessian_identity),
    ("resultant_identity", resultant_identity),
    ("closed_form_condition", closed_form),
    ("alpha_identities", alpha_identities),
    ("r_quadric_dichotomy", r_dichotomy),
    ("correspondence_round_trip", round_trip),
    ("coplanarity", coplanarity),
    ("branch_sextic", branch_sextic),
    ("tangent_planes", tangent_planes),
    ("six_points", six_points),
    ("combinatorics", combinatorics),
];

/// Runs every check in parallel; reports come back in the fixed order above.
pub fn run_all(seed: u64) -> Vec<Report> {
    CHECKS
        .par_iter()
        .enumerate()
        .map(|(i, (name, f))| Report::timed(name, || f(seed.wrapping_add(i as u64))))
        .collect()
}

fn weber_hexads(_: u64) -> Outcome {
    let n = enumerate_weber_hexads().len();
    Ok((n == 192, json!({ "count": n })))
}

fn vanishing_quartics(_: u64) -> Outcome {
    let dim = vanishing_quartics_dimension();
    Ok((dim == 5, json!({ "dimension": dim })))
}

fn hessian_identity(seed: u64) -> Outcome {
    let mut r = rng(seed);
    let mut bad = Vec::new();
    for _ in 0..20 {
        let d = random_mu(&mut r);
        let expected = int(1296) / d.mu().iter().fold(int(1), |acc, m| acc * m);
        let c = verify_hessian_identity(&d).map_err(err)?;
        if c != expected {
            bad.push(json!({ "mu": d.to_string(), "ratio": c.to_string() }));
        }
    }
    Ok((bad.is_empty(), json!({ "samples": 20, "ratio": "1296/(mu0 mu1 mu2 mu3 mu4)", "mismatches": bad })))
}

fn resultant_identity(_: u64) -> Outcome {
    let mu = symbolic_mu();
    let res = symmetrized_resultant(&mu).map_err(err)?;
    let f = &derive_condition().map_err(err)?.f;
    let prod = mu.iter().fold(Poly::one(vars()), |acc, m| &acc * m);
    let exact = res == &prod.scale(&int(512)) * f;
    let cubic = f.is_homogeneous() && f.total_degree() == Some(3);
    let symmetric = is_s5_symmetric(f);
    Ok((
        exact && cubic && symmetric,
        json!({
            "F": f.to_string(),
            "resultant_equals_512_prod_mu_F": exact,
            "homogeneous_cubic": cubic,
            "s5_symmetric": symmetric,
        }),
    ))
}

fn closed_form(_: u64) -> Outcome {
    let r = closed_form_condition_check().map_err(err)?;
    Ok((true, serde_json::to_value(&r).map_err(err)?))
}

fn alpha_identities(_: u64) -> Outcome {
    alpha_difference_identity().map_err(err)?;
    let q = alpha_condition_quotient().map_err(err)?;
    Ok((true, json!({ "difference_identity": true, "quotient_by_F": q.to_string() })))
}

fn r_dichotomy(seed: u64) -> Outcome {
    let sym = r_quadric_symbolic();
    let det_zero = sym.determinant().map_err(err)?.is_zero();
    let p = &base_plane_points()[0];
    let kernel = (0..4).all(|i| (0..4).fold(Poly::zero(vars()), |acc, j| &acc + &(sym.get(i, j) * &p[j])).is_zero());
    let mut r = rng(seed);
    let mut on = 0;
    let mut off = 0;
    for _ in 0..50 {
        if r_rank_dichotomy(&random_locus_mu(&mut r)).map_err(err)? <= 2 {
            on += 1;
        }
    }
    for _ in 0..50 {
        if r_rank_dichotomy(&random_mu_with_alpha_beta(&mut r)).map_err(err)? == 3 {
            off += 1;
        }
    }
    Ok((
        det_zero && kernel && on == 50 && off == 50,
        json!({
            "determinant_zero": det_zero,
            "singular_point_in_kernel": kernel,
            "rank_at_most_2_on_locus": format!("{on}/50"),
            "rank_3_off_locus": format!("{off}/50"),
        }),
    ))
}

fn round_trip(_: u64) -> Outcome {
    let mut payload = serde_json::Map::new();
    let mut ok = true;
    for variant in [Normalization::DMinusOne, Normalization::DPlusOne] {
        let grid = triple_grid(variant);
        let mut trips = 0;
        let mut on_locus = 0;
        let mut first_failure = Value::Null;
        for t in &grid {
            let d = branch_to_mu(t).map_err(err)?;
            if cubic_condition(&d).is_zero() {
                on_locus += 1;
            }
            match mu_to_branch(&d, variant) {
                Ok(back) if &back == t => trips += 1,
                other if first_failure.is_null() => {
                    first_failure = json!({
                        "triple": t,
                        "mu": d.to_string(),
                        "recovered": other.map(|b| json!(b)).unwrap_or_else(|e| json!(e.to_string())),
                    });
                }
                _ => {}
            }
        }
        if variant == Normalization::DMinusOne {
            ok = trips == grid.len() && on_locus == grid.len();
        }
        payload.insert(
            variant.name().to_string(),
            json!({
                "grid": grid.len(),
                "round_trips": trips,
                "on_locus": on_locus,
                "first_failure": first_failure,
            }),
        );
    }
    Ok((ok, Value::Object(payload)))
}

fn coplanarity(seed: u64) -> Outcome {
    let order: CyclicOrder = "03214".parse().map_err(err)?;
    let mut r = rng(seed);
    for _ in 0..20 {
        let d = random_locus_mu(&mut r);
        let pts = plane_points(&d, order).map_err(err)?;
        let rank = points_rank(&pts);
        if rank != 3 {
            return Ok((false, json!({ "mu": d.to_string(), "rank": rank })));
        }
        let plane = linear_form(&plane_equation(&pts).map_err(err)?);
        let rq = r_form_numeric(&d).map_err(err)?;
        if !rq.div_exact(&plane).is_ok_and(|q| q.total_degree() == Some(1)) {
            return Ok((false, json!({ "mu": d.to_string(), "R": rq.to_string(), "plane": plane.to_string() })));
        }
    }
    Ok((true, json!({ "order": order, "samples": 20, "rank": 3, "R_divisible_by_plane": true })))
}

fn branch_sextic(seed: u64) -> Outcome {
    let mut r = rng(seed);
    let mut ratios = BTreeSet::new();
    for _ in 0..20 {
        let b = branch_sextic_factorization(&random_mu(&mut r)).map_err(err)?;
        ratios.insert(b.ratio.to_string());
    }
    let ok = ratios.len() == 1 && !ratios.contains("0");
    Ok((ok, json!({ "samples": 20, "ratios": ratios })))
}

fn tangent_planes(seed: u64) -> Outcome {
    let mut r = rng(seed);
    let mut bad = Vec::new();
    for _ in 0..5 {
        let d = random_mu(&mut r);
        for i in 0..5 {
            for j in (0..5).filter(|&j| j != i) {
                let s = tangent_plane_section(&d, i, j).map_err(err)?;
                let expected = -(&d.mu()[j] / &d.mu()[i]);
                if s.scale != expected {
                    bad.push(json!({ "mu": d.to_string(), "i": i, "j": j, "scale": s.scale.to_string() }));
                }
            }
        }
    }
    Ok((bad.is_empty(), json!({ "samples": 5, "pairs": 20, "scale": "-mu_j/mu_i", "mismatches": bad })))
}

fn six_points(_: u64) -> Outcome {
    let t = reference_triple();
    let d = branch_to_mu(&t).map_err(err)?;
    let six = trope_six_points(&d).map_err(err)?;
    let equivalent = projectively_equivalent(&six.points(), &t.branch_points());
    let assignments = matching_node_assignments(&t).map_err(err)?;
    let smooth = cubic_is_smooth(&d);
    Ok((
        equivalent && six.distinct() && assignments.len() == 1 && smooth,
        json!({
            "triple": t,
            "mu": d.mu().iter().map(ToString::to_string).collect::<Vec<_>>(),
            "points": six,
            "projectively_equivalent": equivalent,
            "node_assignments": assignments.iter().map(|a| a.iter().collect::<String>()).collect::<Vec<_>>(),
            "smooth": smooth,
        }),
    ))
}

fn combinatorics(_: u64) -> Outcome {
    let points = TwoTorsionLabel::all();
    let tropes = TropeLabel::all();
    let sums = points.iter().all(|&p| tropes.iter().filter(|&&t| incidence(p, t)).count() == 6)
        && tropes.iter().all(|&t| points.iter().filter(|&&p| incidence(p, t)).count() == 6);
    let standard = is_weber_hexad(&standard_hexad());
    let all: BTreeSet<_> = enumerate_weber_hexads().iter().cloned().collect();
    let (orbit, stabilizer) = translation_s6_orbit(&standard_hexad());
    let closure = orbit == all;
    let labels = conic_labels_standard();
    let classes: BTreeSet<CyclicOrder> =
        labels.iter().flat_map(|(_, o)| [o.unoriented(), o.residual().unoriented()]).collect();
    let label_set: BTreeSet<CyclicOrder> = labels.iter().map(|(_, o)| o.unoriented()).collect();
    let orders = classes == unoriented_orders() && a5_orbits().contains(&label_set);
    let profiles = CyclicOrder::all().into_iter().all(|o| {
        NodeLabel::all().into_iter().all(|n| {
            let met = n.lines().iter().filter(|&&l| o.met_lines().contains(&l)).count();
            node_incidence_profile(o, n) == if met == 2 { 2 } else { 1 }
        })
    });
    Ok((
        sums && standard && closure && stabilizer == 60 && orders && profiles,
        json!({
            "incidence_sums_six": sums,
            "standard_hexad_weber": standard,
            "orbit_size": orbit.len(),
            "stabilizer": stabilizer,
            "conic_orders_exhaust_twelve": orders,
            "node_profiles": profiles,
        }),
    ))
}

//! Acceptance gate. Runs every criterion, prints one PASS/FAIL line each and
//! exits non-zero if any criterion fails.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use gately_core::axioms::{check_axioms, Axiom};
use gately_core::fixtures;
use gately_core::game::{strong_successor_game, successor_game};
use gately_core::measures::{
    beta_measure, core_vertices, degree_measure, gately_measure, is_core_gauge,
    proportional_measure, CoreVerdict,
};
use gately_core::oracle::shapley_by_permutations;
use gately_core::random::mixed_suite;
use gately_core::rational::{int, ratio};
use gately_core::verify::verify_theorems;
use gately_core::{Coalition, HierNet, Limits, Rational};
use num_traits::Signed;

const L: Limits = Limits::DEFAULT;
const SUITE_SIZE: usize = 200;
const SUITE_SEED: u64 = 20_230_801;
const GOLDEN_BUDGET: Duration = Duration::from_secs(1);
const SUITE_BUDGET: Duration = Duration::from_secs(60);

type Outcome = Result<String, String>;

fn ensure(ok: bool, why: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(why())
    }
}

fn within(start: Instant, budget: Duration) -> Result<Duration, String> {
    let took = start.elapsed();
    ensure(took < budget, || {
        format!("took {took:?}, budget {budget:?}")
    })?;
    Ok(took)
}

fn set(one_based: &[usize]) -> Coalition {
    one_based.iter().map(|i| i - 1).collect()
}

fn suite() -> Vec<HierNet> {
    mixed_suite(SUITE_SIZE, SUITE_SEED)
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let net = fixtures::core_counterexample();
    let beta = beta_measure(&net);
    let xi = gately_measure(&net);
    let want_beta = [
        ratio(1, 2),
        ratio(1, 2),
        ratio(2, 3),
        ratio(2, 3),
        ratio(2, 3),
        int(0),
        int(0),
        int(0),
    ];
    let want_xi = [
        ratio(3, 8),
        ratio(3, 8),
        ratio(3, 4),
        ratio(3, 4),
        ratio(3, 4),
        int(0),
        int(0),
        int(0),
    ];
    ensure(*beta == want_beta, || format!("β = {beta}"))?;
    ensure(*xi == want_xi, || format!("ξ = {xi}"))?;
    let beta_core = is_core_gauge(&net, &beta, &L).map_err(|e| e.to_string())?;
    ensure(beta_core.is_member(), || {
        format!("β not in Core: {beta_core:?}")
    })?;
    match is_core_gauge(&net, &xi, &L).map_err(|e| e.to_string())? {
        CoreVerdict::Member => return Err("ξ reported in Core".into()),
        CoreVerdict::Violated(v) => {
            ensure(v.coalition == set(&[1, 2]), || {
                format!("witness {}", v.coalition)
            })?;
            ensure(v.deficit() == ratio(1, 4), || {
                format!("deficit {}", v.deficit())
            })?;
        }
    }
    let took = within(start, GOLDEN_BUDGET)?;
    Ok(format!(
        "β, ξ exact; ξ ∉ C(D) via {{1,2}} short by 1/4 ({took:?})"
    ))
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let net = fixtures::five_node_mixed();
    let vertices: Vec<Vec<Rational>> = core_vertices(&net, &L)
        .map_err(|e| e.to_string())?
        .into_iter()
        .map(|g| g.into_inner())
        .collect();
    let mut got = vertices.clone();
    got.sort();
    got.dedup();
    ensure(got.len() == vertices.len(), || "duplicate vertices".into())?;
    let mut want: Vec<Vec<Rational>> = [
        [2, 1, 1, 0, 0],
        [3, 0, 1, 0, 0],
        [3, 1, 0, 0, 0],
        [2, 2, 0, 0, 0],
        [4, 0, 0, 0, 0],
    ]
    .iter()
    .map(|v| v.iter().map(|&x| int(x)).collect())
    .collect();
    want.sort();
    ensure(got == want, || format!("vertices {got:?}"))?;
    let beta = beta_measure(&net);
    let xi = gately_measure(&net);
    ensure(
        *beta == [ratio(17, 6), ratio(5, 6), ratio(1, 3), int(0), int(0)],
        || format!("β = {beta}"),
    )?;
    ensure(
        *xi == [ratio(14, 5), ratio(4, 5), ratio(2, 5), int(0), int(0)],
        || format!("ξ = {xi}"),
    )?;
    for (name, g) in [("β", &beta), ("ξ", &xi)] {
        let v = is_core_gauge(&net, g, &L).map_err(|e| e.to_string())?;
        ensure(v.is_member(), || format!("{name} not in Core"))?;
    }
    ensure(beta != xi, || "ξ = β".into())?;
    let took = within(start, GOLDEN_BUDGET)?;
    Ok(format!(
        "five Core vertices, β and ξ exact and in Core, ξ ≠ β ({took:?})"
    ))
}

fn criterion_3() -> Outcome {
    let net = fixtures::paired_controllers();
    let class = net.classify();
    ensure(class.weakly_regular, || {
        "not classified weakly regular".into()
    })?;
    let report = verify_theorems(&net, &L).map_err(|e| e.to_string())?;
    let clause = report.clause("gately-beta").ok_or("missing clause")?;
    ensure(clause.status.to_string() == "pass", || {
        format!("gately-beta: {}", clause.status)
    })?;
    ensure(report.passed(), || "theorem report has failures".into())?;
    let want: Vec<Rational> = [1, 1, 3, 3, 0, 0, 0, 0]
        .iter()
        .map(|&h| ratio(h, 2))
        .collect();
    let xi = gately_measure(&net);
    let beta = beta_measure(&net);
    ensure(*xi == want[..], || format!("ξ = {xi}"))?;
    ensure(*beta == want[..], || format!("β = {beta}"))?;
    Ok("weakly regular; ξ = β = (1/2,1/2,3/2,3/2,0,0,0,0)".into())
}

fn criterion_4() -> Outcome {
    let start = Instant::now();
    let nets = suite();
    for (k, net) in nets.iter().enumerate() {
        let fail = |what: &str| format!("net #{k} ({:?}): {what}", net.edges().collect::<Vec<_>>());
        let s = successor_game(net, &L).map_err(|e| e.to_string())?;
        let sigma = strong_successor_game(net, &L).map_err(|e| e.to_string())?;
        let beta = beta_measure(net);
        let xi = gately_measure(net);
        // (a)
        ensure(s.dual() == sigma, || fail("(a) dual(s_D) != σ_D"))?;
        // (b)
        ensure(sigma.is_convex(), || fail("(b) σ_D not convex"))?;
        ensure(s.is_concave(), || fail("(b) s_D not concave"))?;
        // (c)
        ensure(*s.shapley() == *beta && *sigma.shapley() == *beta, || {
            fail("(c) Shapley != β")
        })?;
        // (d)
        let gs = s.gately().map_err(|e| fail(&format!("(d) g(s_D): {e}")))?;
        let gsigma = sigma
            .gately()
            .map_err(|e| fail(&format!("(d) g(σ_D): {e}")))?;
        ensure(*gs == *xi && *gsigma == *xi, || {
            fail("(d) Gately value != ξ")
        })?;
        // (e)
        ensure(sigma.in_core(&beta).map_err(|e| e.to_string())?, || {
            fail("(e) β ∉ C(D)")
        })?;
        let xi_in_core = sigma.in_core(&xi).map_err(|e| e.to_string())?;
        // (f)
        if net.classify().weakly_regular {
            ensure(xi == beta && xi_in_core, || {
                fail("(f) weakly regular but ξ != β or ξ ∉ C(D)")
            })?;
        }
        // (g)
        if net.controller_count() <= 3 {
            ensure(xi_in_core, || fail("(g) ≤ 3 controllers but ξ ∉ C(D)"))?;
        }
        // (h)
        let part = net.partition();
        let mut common: Option<Rational> = None;
        for i in (0..net.n()).filter(|&i| part.joint_successors[i] > 0) {
            let p = s.propensity_to_disrupt(&xi, i);
            let value = p
                .finite()
                .ok_or_else(|| fail(&format!("(h) node {i} propensity {p}")))?;
            ensure(value.is_positive(), || fail("(h) non-positive propensity"))?;
            match &common {
                None => common = Some(value.clone()),
                Some(c) => ensure(c == value, || fail("(h) propensities differ"))?,
            }
        }
    }
    let took = within(start, SUITE_BUDGET)?;
    Ok(format!(
        "(a)-(h) hold on {} networks ({took:?})",
        nets.len()
    ))
}

fn criterion_5() -> Outcome {
    let mut games = 0;
    for (k, net) in suite().iter().enumerate().filter(|(_, n)| n.n() <= 6) {
        for g in [successor_game(net, &L), strong_successor_game(net, &L)] {
            let g = g.map_err(|e| e.to_string())?;
            let oracle = shapley_by_permutations(&g, &L).map_err(|e| e.to_string())?;
            ensure(oracle == g.shapley(), || {
                format!("net #{k}: oracle {oracle} vs dividends {}", g.shapley())
            })?;
            games += 1;
        }
    }
    Ok(format!(
        "dividend Shapley = permutation average on {games} games"
    ))
}

fn criterion_6() -> Outcome {
    let nets = suite();
    let xi = check_axioms(|n| gately_measure(n).into_inner(), &nets);
    ensure(xi.all_hold(), || {
        format!("ξ fails: {:?}", xi.witnesses.first().map(|w| w.axiom))
    })?;
    let beta = check_axioms(|n| beta_measure(n).into_inner(), &nets);
    ensure(beta.normalisation && beta.normality, || {
        "β fails normalisation or normality".into()
    })?;
    let w = beta
        .witness(Axiom::RestrictedProportionality)
        .ok_or("β never fails restricted proportionality")?;
    ensure(w.network.classify().principal, || {
        "β witness is not principal".into()
    })?;
    let rho = check_axioms(|n| proportional_measure(n).into_inner(), &nets);
    ensure(rho.normalisation && rho.restricted_proportionality, || {
        "ρ fails (i) or (iii)".into()
    })?;
    ensure(!rho.normality, || "ρ never fails normality".into())?;
    let s = check_axioms(degree_measure, &nets);
    ensure(s.normality && s.restricted_proportionality, || {
        "s fails (ii) or (iii)".into()
    })?;
    ensure(!s.normalisation, || "s never fails normalisation".into())?;
    Ok(format!(
        "ξ satisfies all three; β fails (iii) at #{}, ρ fails (ii) at #{}, s fails (i) at #{}",
        w.net_index,
        rho.witness(Axiom::Normality).unwrap().net_index,
        s.witness(Axiom::Normalisation).unwrap().net_index
    ))
}

fn criterion_7() -> Outcome {
    let nets = suite();
    for (k, net) in nets.iter().enumerate() {
        let sigma = strong_successor_game(net, &L).map_err(|e| e.to_string())?;
        let mut multiset: BTreeMap<Coalition, i64> = BTreeMap::new();
        for j in 0..net.n() {
            if net.in_degree(j) > 0 {
                *multiset.entry(net.predecessor_set(j)).or_default() += 1;
            }
        }
        let dividends: BTreeMap<Coalition, i64> = sigma
            .harsanyi_dividends()
            .nonzero()
            .map(|(c, d)| {
                ensure(d.is_integer() && d.is_positive(), || {
                    format!("net #{k}: Δ({c}) = {d}")
                })?;
                Ok((c, d.to_integer().try_into().unwrap()))
            })
            .collect::<Result<_, String>>()?;
        ensure(dividends == multiset, || {
            format!("net #{k}: support {dividends:?} vs {multiset:?}")
        })?;
    }
    Ok(format!(
        "σ_D dividends = predecessor-set multiset on {} networks",
        nets.len()
    ))
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        ("AC1 Core counterexample golden values", criterion_1),
        ("AC2 five-node golden values and Core vertices", criterion_2),
        ("AC3 paired-controller network: ξ = β", criterion_3),
        ("AC4 property suite (200 seeded networks)", criterion_4),
        ("AC5 Shapley permutation oracle", criterion_5),
        ("AC6 axiom suite and non-redundancy", criterion_6),
        ("AC7 unanimity decomposition of σ_D", criterion_7),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        match run() {
            Ok(detail) => println!("[PASS] {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("[FAIL] {name}: {why}");
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

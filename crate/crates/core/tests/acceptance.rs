use std::process::ExitCode;
use std::time::Instant;

use critlink_core::affine::{self, AffineRoot, AffineWeight, WeightOffset};
use critlink_core::cartan::{FiniteRootSystem, FiniteWeight};
use critlink_core::charalg::{
    antidominant_mult_table, p_series, q_character_f, restricted_verma_character,
    simple_restricted_character, subgeneric_mult_table, verma_character, FKind, ModuleKind,
    Multiplicity, QSeries, Truncation,
};
use critlink_core::linkage::{
    arrow_down, arrow_up, block_window, casimir_scalar, classify, critical_tests, WindowBounds,
};
use critlink_core::pbw::{
    build_pbw_module, restricted_quotient_oracle, singular_scan, subgeneric_invariant_check,
    AlgebraSpec,
};
use critlink_core::rational::{frac, q};
use critlink_core::Q;
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn system(label: &str) -> FiniteRootSystem {
    FiniteRootSystem::from_label(label).unwrap()
}

fn crit_a1(c: Q) -> AffineWeight {
    AffineWeight::new(FiniteWeight(vec![c]), q(-2), q(0))
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn ac1_partition_identity() -> Outcome {
    let n = 40;
    for rank in [1usize, 2] {
        let p = p_series(rank, n);
        let mut euler = QSeries::monomial(q(0), q(i64::from(n)));
        for j in 1..=i64::from(n) {
            let factor = QSeries::from_terms([(q(0), BigInt::from(1)), (q(j), BigInt::from(-1))], q(i64::from(n)));
            for _ in 0..rank {
                euler = euler.mul(&factor);
            }
        }
        let prod = p.mul(&euler).truncate(&q(i64::from(n)));
        let one = QSeries::monomial(q(0), q(i64::from(n)));
        ensure(prod.agrees_with(&one) && prod.truncation() == &q(i64::from(n)), || {
            format!("rank {rank}: product is {prod}")
        })?;
    }
    Ok(format!("p-series × ∏(1−q^j)^rank = 1 mod q^{} for ranks 1, 2", n + 1))
}

const CRITICAL_C: [(i64, i64); 3] = [(1, 3), (1, 2), (2, 7)];

fn ac2_singular_dimensions() -> Outcome {
    let spec = AlgebraSpec::sl2();
    for (a, b) in CRITICAL_C {
        let m = build_pbw_module(&spec, &crit_a1(frac(a, b)), Truncation::new(3, 3)).map_err(err)?;
        let dims: Vec<usize> = singular_scan(&m, 3).map_err(err)?[1..].iter().map(|r| r.sing_dim).collect();
        ensure(dims == [1, 2, 3], || format!("c = {a}/{b}: sing dims {dims:?}"))?;
    }
    let m = build_pbw_module(&spec, &crit_a1(frac(1, 3)), Truncation::new(4, 4)).map_err(err)?;
    let deep = m.sing_dim(&WeightOffset::delta_multiple(&system("A1"), 4)).map_err(err)?;
    ensure(deep == 5, || format!("c = 1/3: sing dim {deep} at 4δ"))?;
    Ok("sing_dim at δ, 2δ, 3δ = 1, 2, 3 for c ∈ {1/3, 1/2, 2/7}; 4δ → 5".into())
}

fn ac3_noncritical_contrast() -> Outcome {
    let spec = AlgebraSpec::sl2();
    for (a, b) in CRITICAL_C {
        let lam = AffineWeight::new(FiniteWeight(vec![frac(a, b)]), q(0), q(0));
        let m = build_pbw_module(&spec, &lam, Truncation::new(2, 2)).map_err(err)?;
        let dims: Vec<usize> = singular_scan(&m, 2).map_err(err)?[1..].iter().map(|r| r.sing_dim).collect();
        ensure(dims == [0, 0], || format!("c = {a}/{b} at level 0: sing dims {dims:?}"))?;
    }
    Ok("level 0: sing_dim at δ, 2δ = 0, 0".into())
}

fn ac4_restricted_quotient() -> Outcome {
    let spec = AlgebraSpec::sl2();
    let bounds = Truncation::new(2, 3);
    for (a, b) in [(1, 3), (1, 2)] {
        let m = build_pbw_module(&spec, &crit_a1(frac(a, b)), bounds).map_err(err)?;
        let rep = restricted_quotient_oracle(&m, 2).map_err(err)?;
        ensure(rep.region == bounds, || format!("reliable region {:?}", rep.region))?;
        ensure(rep.character_match, || format!("c = {a}/{b}: character mismatch"))?;
        ensure(rep.quotient_invariants == [(1, 0), (2, 0)], || {
            format!("c = {a}/{b}: invariants {:?}", rep.quotient_invariants)
        })?;
    }
    Ok("depth-2 quotient matches ch Δ̄ on (2,3), no invariants at δ, 2δ".into())
}

fn ac5_subgeneric_invariants() -> Outcome {
    let spec = AlgebraSpec::sl2();
    let lam = crit_a1(q(1));
    for (n, p) in [(1u32, 1usize), (2, 2)] {
        let got = subgeneric_invariant_check(&spec, &lam, n, Truncation::new(2 + n, n)).map_err(err)?;
        ensure(got == (p, p), || format!("n = {n}: {got:?}"))?;
    }
    Ok("ω−2Λ₀: (1,1) at n=1, (2,2) at n=2".into())
}

fn ac6_criticality_grid() -> Outcome {
    let finite = [q(-2), q(-1), q(0), frac(1, 2), frac(1, 3), q(1), q(2)];
    let mut report = Vec::new();
    for label in ["A1", "A2"] {
        let rs = system(label);
        let h = rs.dual_coxeter();
        let levels = [q(-h), q(0), q(1), frac(-1, 2), q(-h - 1)];
        let deltas = [q(0), q(1), frac(1, 2)];
        let mut coords: Vec<Vec<Q>> = vec![vec![]];
        for _ in 0..rs.rank() {
            coords = coords
                .into_iter()
                .flat_map(|c| {
                    finite.iter().map(move |x| {
                        let mut c = c.clone();
                        c.push(x.clone());
                        c
                    })
                })
                .collect();
        }
        let (mut total, mut critical) = (0, 0);
        for c in &coords {
            for l in &levels {
                for d in &deltas {
                    let w = AffineWeight::new(FiniteWeight(c.clone()), l.clone(), d.clone());
                    let t = critical_tests(&rs, &w).map_err(err)?;
                    ensure(t.all_agree(), || format!("{label} {w}: {:?}", t.as_array()))?;
                    ensure(t.critical_level == (*l == q(-h)), || format!("{label} {w}: level test"))?;
                    total += 1;
                    critical += usize::from(t.critical_level);
                }
            }
        }
        ensure(total >= 100, || format!("{label}: grid has {total} weights"))?;
        report.push(format!("{label}: {total} weights ({critical} critical)"));
    }
    Ok(format!("five tests agree; {}", report.join(", ")))
}

fn ac7_multiplicity_tables() -> Outcome {
    let rs = system("A1");
    let alpha = rs.simple_root(0).clone();
    let lam = crit_a1(q(1));
    let window = block_window(&rs, &lam, WindowBounds::new(4, 12)).map_err(err)?;
    let table = subgeneric_mult_table(&rs, &window).map_err(err)?;

    let mut top = lam.clone();
    loop {
        let up = arrow_up(&rs, &top, &alpha).map_err(err)?;
        if !window.contains(&rs, &up) {
            break;
        }
        top = up;
    }
    let mut chain = vec![top];
    loop {
        let down = arrow_down(&rs, chain.last().unwrap(), &alpha).map_err(err)?;
        if !window.contains(&rs, &down) {
            break;
        }
        chain.push(down);
    }
    ensure(chain.len() >= 4, || format!("α↓-chain has {} elements", chain.len()))?;
    for kind in [ModuleKind::Verma, ModuleKind::Restricted] {
        ensure(table.is_unitriangular(kind, &chain), || format!("{kind:?} matrix not unitriangular"))?;
    }

    let t = Truncation::new(3, 6);
    let mut checked = 0;
    for gamma in window.weights() {
        let ch_gamma = simple_restricted_character(&rs, gamma, &window, t).map_err(err)?;
        ensure(ch_gamma.is_nonnegative(), || format!("ch L({gamma}) has a negative coefficient"))?;
        let mut sum = None;
        for nu in window.weights() {
            match table.get(ModuleKind::Restricted, gamma, nu) {
                Multiplicity::Known(0) => {}
                Multiplicity::Known(k) => {
                    let ch = simple_restricted_character(&rs, nu, &window, t)
                        .map_err(err)?
                        .rebase(&rs, gamma)
                        .map_err(err)?
                        .scale(k as i64)
                        .map_err(err)?;
                    sum = Some(match sum {
                        None => ch,
                        Some(s) => ch.add(&s).map_err(err)?,
                    });
                }
                Multiplicity::Unknown => return Err(format!("[Δ̄({gamma}):L({nu})] unknown")),
            }
        }
        let sum = sum.ok_or_else(|| format!("no composition factors for {gamma}"))?;
        let expected = restricted_verma_character(&rs, gamma, sum.truncation()).map_err(err)?;
        ensure(sum == expected, || format!("round trip fails at {gamma}"))?;
        checked += 1;
    }
    Ok(format!(
        "chain of {} unitriangular; {checked} simple characters round-trip, all ≥ 0",
        chain.len()
    ))
}

fn random_q(rng: &mut ChaCha8Rng) -> Q {
    frac(rng.gen_range(-8..=8), rng.gen_range(1..=4))
}

fn random_weight(rng: &mut ChaCha8Rng, rank: usize) -> AffineWeight {
    AffineWeight::new(
        FiniteWeight((0..rank).map(|_| random_q(rng)).collect()),
        random_q(rng),
        random_q(rng),
    )
}

fn ac8_form_and_orbits() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let systems = [system("A1"), system("A2")];
    let cases = 1000;
    for i in 0..cases {
        let rs = &systems[i % 2];
        let roots = rs.roots();
        let l = random_weight(&mut rng, rs.rank());
        let m = random_weight(&mut rng, rs.rank());
        let beta = AffineRoot::real(roots[rng.gen_range(0..roots.len())].clone(), rng.gen_range(-3..=3));
        let form = affine::affine_form(rs, &l, &m).map_err(err)?;
        let sl = affine::reflect(rs, &l, &beta, false).map_err(err)?;
        let sm = affine::reflect(rs, &m, &beta, false).map_err(err)?;
        ensure(affine::affine_form(rs, &sl, &sm).map_err(err)? == form, || format!("form at {l}, {m}"))?;
        let delta = AffineWeight::delta(rs.rank());
        ensure(affine::reflect(rs, &delta, &beta, false).map_err(err)? == delta, || "w(δ) ≠ δ".into())?;
        let dot = rng.gen_bool(0.5);
        let once = affine::reflect(rs, &l, &beta, dot).map_err(err)?;
        ensure(affine::reflect(rs, &once, &beta, dot).map_err(err)? == l, || format!("involution at {l}"))?;

        let f: Vec<i64> = (0..rs.rank()).map(|_| rng.gen_range(-5..=5)).collect();
        let c = AffineWeight::new(FiniteWeight::from_ints(&f), q(-rs.dual_coxeter()), q(rng.gen_range(-2..=2)));
        let positives = rs.positive_roots();
        let alpha = &positives[rng.gen_range(0..positives.len())];
        let up = arrow_up(rs, &c, alpha).map_err(err)?;
        let down = arrow_down(rs, &c, alpha).map_err(err)?;
        ensure(
            arrow_down(rs, &up, alpha).map_err(err)? == c && arrow_up(rs, &down, alpha).map_err(err)? == c,
            || format!("arrows at {c}"),
        )?;
        if i % 10 == 0 {
            let w = block_window(rs, &c, WindowBounds::new(1, 3)).map_err(err)?;
            let k = casimir_scalar(rs, &c);
            ensure(w.weights().all(|x| casimir_scalar(rs, x) == k), || format!("casimir on window of {c}"))?;
        }
    }
    Ok(format!("{cases} randomized form, reflection, arrow and Casimir checks"))
}

fn ac9_f_characters() -> Outcome {
    let depth = 30;
    for (label, nu_finite) in [("A1", vec![-2]), ("A2", vec![-2, -2])] {
        let rs = system(label);
        let nu = AffineWeight::new(FiniteWeight::from_ints(&nu_finite), q(-rs.dual_coxeter()), q(0));
        let c = classify(&rs, &nu);
        ensure(c.is_antidominant && c.is_regular, || format!("{label}: {nu} not anti-dominant regular"))?;
        let window = block_window(&rs, &nu, WindowBounds::new(depth, 2 * rs.positive_roots().len() as u32))
            .map_err(err)?;
        let table = antidominant_mult_table(&rs, &nu, &window).map_err(err)?;
        let orbit: Vec<&AffineWeight> = window
            .weights()
            .filter(|g| g.delta == nu.delta && c.finite_image.contains(&g.finite))
            .collect();
        ensure(orbit.len() == c.finite_image.len(), || format!("{label}: orbit {} in window", orbit.len()))?;
        for gamma in orbit {
            let lhs = q_character_f(&rs, gamma, FKind::Verma, depth).map_err(err)?;
            let mut rhs = QSeries::zero(lhs.truncation().clone());
            for n in 0..=i64::from(depth) {
                let mu = nu.shift_delta(&q(-n));
                let k = match table.get(ModuleKind::Verma, gamma, &mu) {
                    Multiplicity::Known(k) => k,
                    Multiplicity::Unknown => return Err(format!("[Δ({gamma}):L({mu})] unknown")),
                };
                let simple = q_character_f(&rs, &mu, FKind::Simple, depth).map_err(err)?;
                rhs = rhs.add(&simple.scale(&BigInt::from(k)));
            }
            let rhs = rhs.truncate(lhs.truncation());
            ensure(lhs.agrees_with(&rhs), || format!("{label} {gamma}: {lhs} vs {rhs}"))?;
        }
        let dominant = AffineWeight::new(FiniteWeight::zero(rs.rank()), q(-rs.dual_coxeter()), q(0));
        let dc = classify(&rs, &dominant);
        ensure(dc.is_dominant && dc.is_regular, || {
            format!("{label}: {dominant} is not dominant regular")
        })?;
        ensure(q_character_f(&rs, &dominant, FKind::Simple, depth).map_err(err)?.is_zero(), || {
            format!("{label}: F(L(dominant)) ≠ 0")
        })?;
    }
    Ok(format!("F(Δ) = Σ p(n) F(L(ν−nδ)) to depth {depth} for A1, A2; F(L) = 0 for dominant regular"))
}

fn kostant_parts(rs: &FiniteRootSystem, t: Truncation) -> Vec<WeightOffset> {
    let mut parts = Vec::new();
    for n in 0..=i64::from(t.delta_depth) {
        for alpha in rs.roots() {
            if n > 0 || alpha.is_positive() {
                let o = WeightOffset::from_parts(rs, n, alpha.simple_coords());
                if t.contains(&o) {
                    parts.push(o);
                }
            }
        }
        if n > 0 {
            let o = WeightOffset::delta_multiple(rs, n);
            if t.contains(&o) {
                parts.extend(std::iter::repeat_n(o, rs.rank()));
            }
        }
    }
    parts
}

fn kostant_count(parts: &[WeightOffset], rest: &WeightOffset) -> i64 {
    if rest.is_zero() {
        return 1;
    }
    let Some((first, tail)) = parts.split_first() else {
        return 0;
    };
    let mut total = kostant_count(tail, rest);
    let mut r = rest.clone();
    while let Some(next) = r.checked_sub(first).filter(WeightOffset::is_nonnegative) {
        total += kostant_count(tail, &next);
        r = next;
    }
    total
}

fn ac10_kostant_oracle() -> Outcome {
    let mut count = 0;
    for (label, t) in [("A1", Truncation::new(3, 6)), ("A2", Truncation::new(2, 6))] {
        let rs = system(label);
        let parts = kostant_parts(&rs, t);
        let lam = AffineWeight::new(FiniteWeight::zero(rs.rank()), q(-rs.dual_coxeter()), q(0));
        let ch = verma_character(&rs, &lam, t).map_err(err)?;
        for o in t.offsets(rs.rank()) {
            let expected = kostant_count(&parts, &o);
            let got = ch.coefficient(&o).unwrap_or(0);
            ensure(got == expected, || format!("{label} {:?}: {got} vs {expected}", o.0))?;
            count += 1;
        }
    }
    Ok(format!("{count} Verma coefficients match brute-force root multisets"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("AC1 partition identity", ac1_partition_identity),
        ("AC2 singular-vector dimensions", ac2_singular_dimensions),
        ("AC3 non-critical contrast", ac3_noncritical_contrast),
        ("AC4 restricted quotient", ac4_restricted_quotient),
        ("AC5 subgeneric invariants", ac5_subgeneric_invariants),
        ("AC6 criticality equivalence", ac6_criticality_grid),
        ("AC7 multiplicity tables", ac7_multiplicity_tables),
        ("AC8 form and orbit properties", ac8_form_and_orbits),
        ("AC9 F-character formulas", ac9_f_characters),
        ("AC10 Kostant oracle", ac10_kostant_oracle),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("[PASS] {name} ({secs:.2}s): {detail}"),
            Err(detail) => {
                failed += 1;
                println!("[FAIL] {name} ({secs:.2}s): {detail}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 10 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

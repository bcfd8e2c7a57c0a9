//! The twelve acceptance criteria, one PASS/FAIL line each.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use zero_algebra::algebra::AlgebraElement;
use zero_algebra::group;
use zero_algebra::matrix::{gamma_relations_check, verify_homomorphism};
use zero_algebra::monomial::{Generator, Monomial, Sign};
use zero_algebra::nilpotent::{
    dirac_annihilation_table, exclusion_product, is_permutation_matrix, NilpotentOperator,
    SIGN_VARIANTS,
};
use zero_algebra::pentad::{self, Pentad, GAMMA_SIGNATURE, NILPOTENT_SIGNATURE};
use zero_algebra::rewrite::{self, ProcessLabel};
use zero_algebra::sample::{self, Kinematics};
use zero_algebra::verify::{self, VerifyConfig};

const SEED: u64 = 20;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn timed(limit: Option<Duration>, f: impl FnOnce() -> Outcome) -> Outcome {
    let start = Instant::now();
    let out = f()?;
    let took = start.elapsed();
    match limit {
        Some(l) if took >= l => Err(format!("{out}; took {took:?}, limit {l:?}")),
        _ => Ok(format!("{out}; {took:.2?}")),
    }
}

fn ensure(ok: bool, detail: String) -> Outcome {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn group_orders() -> Outcome {
    timed(Some(Duration::from_secs(1)), || {
        let orders: Vec<usize> = (0..=5)
            .map(|g| group::enumerate(g).unwrap().order())
            .collect();
        ensure(
            orders == [2, 4, 8, 16, 32, 64],
            format!("orders {orders:?}"),
        )
    })
}

fn group_axioms() -> Outcome {
    timed(Some(Duration::from_secs(10)), || {
        let r = group::verify_group(5).unwrap();
        ensure(
            r.passed() && r.associativity && r.products_checked >= 64 * 64 * 64,
            format!(
                "{} products, first failure {:?}",
                r.products_checked, r.first_failure
            ),
        )
    })
}

fn commutation() -> Outcome {
    let mut pairs = 0;
    for m in 0..12 {
        for n in m + 1..12 {
            let (a, b) = (Generator::from_position(m), Generator::from_position(n));
            let want = if a.index() == b.index() {
                Monomial::MINUS_ONE
            } else {
                Monomial::ONE
            };
            if Monomial::product_of([a, b]).square() != want {
                return Err(format!("({a}{b})^2 is wrong"));
            }
            pairs += 1;
        }
    }
    ensure(
        pairs == 66,
        format!("{pairs} generator pairs through level 6"),
    )
}

fn pauli() -> Outcome {
    let units = verify::pauli_units().map_err(|e| e.to_string())?;
    if !units.passed {
        return Err(units.detail);
    }
    let mut rng = sample::rng(SEED);
    let pairs = 100;
    for n in 0..pairs {
        let (a, b) = (sample::vector3(&mut rng), sample::vector3(&mut rng));
        if !verify::pauli_product_holds(&a, &b).unwrap() {
            return Err(format!("vector pair {n} fails"));
        }
    }
    Ok(format!("{}; {pairs} vector pairs exact", units.detail))
}

fn matrix_oracle() -> Outcome {
    let r = verify_homomorphism(5).unwrap();
    ensure(
        r.passed() && r.distinct_images == 64 && r.products_matched == 4096,
        format!(
            "{} distinct images, {}/{} products",
            r.distinct_images, r.products_matched, r.products_checked
        ),
    )
}

fn maximality() -> Outcome {
    timed(Some(Duration::from_secs(1)), || {
        let size = pentad::max_anticommuting_set_size(5).unwrap();
        ensure(size == 5, format!("max anticommuting set {size}"))
    })
}

fn signatures() -> Outcome {
    let all = pentad::find_pentads(5, None).unwrap();
    let nil = all
        .iter()
        .filter(|p| p.matches_signature(&NILPOTENT_SIGNATURE))
        .count();
    let gamma = all
        .iter()
        .filter(|p| p.matches_signature(&GAMMA_SIGNATURE))
        .count();
    let generating: Vec<&Pentad> = all.iter().filter(|p| p.generates_full_group()).collect();
    for p in &generating {
        let r = gamma_relations_check(p).unwrap();
        if !r.passed() || r.span_dimension != 16 {
            return Err(format!("gamma relations fail for {:?}", r.members));
        }
    }
    ensure(
        nil > 0 && gamma > 0,
        format!(
            "{nil} (+,-,-,-,-), {gamma} (+,-,-,-,+), {} generating pentads checked",
            generating.len()
        ),
    )
}

fn build(p: &Pentad, k: &Kinematics, signs: (Sign, Sign)) -> NilpotentOperator {
    NilpotentOperator::build(
        p,
        k.energy.clone(),
        k.momentum.clone(),
        k.mass.clone(),
        signs,
    )
    .unwrap()
}

fn nilpotency() -> Outcome {
    let pentads = pentad::find_pentads(5, Some(&NILPOTENT_SIGNATURE)).unwrap();
    let mut rng = sample::rng(SEED);
    let on = verify::on_shell_samples(&mut rng, 20);
    let off: Vec<Kinematics> = (0..20).map(|_| sample::any_kinematics(&mut rng)).collect();
    for p in &pentads {
        for k in &on {
            if !build(p, k, (Sign::Plus, Sign::Plus)).square().is_zero() {
                return Err(format!("on-shell square nonzero for {:?}", p.members()));
            }
        }
        for k in &off {
            if build(p, k, (Sign::Plus, Sign::Plus)).square()
                != AlgebraElement::scalar(k.shell_defect())
            {
                return Err("off-shell square differs from E^2 - p^2 - m^2".into());
            }
        }
    }
    Ok(format!(
        "{} pentads x {} on-shell + {} off-shell",
        pentads.len(),
        on.len(),
        off.len()
    ))
}

fn massive(n: usize) -> Vec<Kinematics> {
    let mut rng = sample::rng(SEED);
    let mut out = vec![Kinematics::from_ints(5, [0, 0, 4], 3)];
    while out.len() < n {
        let k = sample::on_shell(&mut rng);
        if k.is_massive_moving() {
            out.push(k);
        }
    }
    out
}

fn exclusion() -> Outcome {
    let p = pentad::find_pentads(5, Some(&NILPOTENT_SIGNATURE))
        .unwrap()
        .remove(0);
    let samples = massive(20);
    let mut checks = 0;
    for k in &samples {
        for u in SIGN_VARIANTS {
            for v in SIGN_VARIANTS {
                let zero = exclusion_product(&build(&p, k, u), &build(&p, k, v))
                    .unwrap()
                    .is_zero();
                if zero != (u == v) {
                    return Err(format!("variants {u:?} x {v:?} at E = {}", k.energy));
                }
                checks += 1;
            }
        }
    }
    Ok(format!("{} samples, {checks} products", samples.len()))
}

fn annihilation() -> Outcome {
    let p = pentad::find_pentads(5, Some(&NILPOTENT_SIGNATURE))
        .unwrap()
        .remove(0);
    let samples = massive(20);
    for k in &samples {
        let t = dirac_annihilation_table(&p, &k.energy, &k.momentum, &k.mass).unwrap();
        if !is_permutation_matrix(&t) {
            return Err(format!("table {t:?} at E = {}", k.energy));
        }
    }
    Ok(format!("{} samples give permutation tables", samples.len()))
}

fn rewrite_counts() -> Outcome {
    use ProcessLabel::*;
    let trace = rewrite::run(6).unwrap();
    let pairs = |size: usize| {
        trace
            .steps
            .iter()
            .find(|s| s.alphabet.len() == size)
            .map(|s| s.table.cancelling_pairs())
    };
    let cells_ok = trace
        .steps
        .iter()
        .all(|s| s.table.cell_count() == s.alphabet.len().pow(2));
    let labels_ok = trace.labels()
        == [
            Conjugation,
            Complexification,
            Dimensionalization,
            Repetition,
            Repetition,
            Repetition,
        ];
    ensure(
        pairs(3) == Some(3) && pairs(4) == Some(6) && cells_ok && labels_ok,
        format!(
            "pairs at size 3: {:?}, size 4: {:?}; cells {cells_ok}; labels {labels_ok}",
            pairs(3),
            pairs(4)
        ),
    )
}

fn determinism() -> Outcome {
    let config = VerifyConfig {
        seed: SEED,
        ..VerifyConfig::default()
    };
    let a = serde_json::to_vec(&verify::run(&config).unwrap()).unwrap();
    let b = serde_json::to_vec(&verify::run(&config).unwrap()).unwrap();
    ensure(a == b, format!("{} bytes, identical: {}", a.len(), a == b))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("group orders", group_orders),
        ("group axioms", group_axioms),
        ("commutation rules", commutation),
        ("pauli identities", pauli),
        ("matrix oracle", matrix_oracle),
        ("pentad maximality", maximality),
        ("pentad signatures", signatures),
        ("nilpotency", nilpotency),
        ("exclusion", exclusion),
        ("dirac annihilation", annihilation),
        ("rewrite counts", rewrite_counts),
        ("determinism", determinism),
    ];
    let mut failed = 0;
    for (n, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", n + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {detail}", n + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

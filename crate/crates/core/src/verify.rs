//! The full invariant suite behind `zero-algebra verify`.
//!
//! Every check is exact. Randomized sweeps draw from a ChaCha stream seeded by
//! [`VerifyConfig::seed`], so a report can be replayed bit for bit.

use serde::Serialize;

use crate::algebra::{AlgebraElement, Rational};
use crate::error::Result;
use crate::group::{self, Catalog};
use crate::matrix;
use crate::monomial::{Generator, Monomial, Sign};
use crate::nilpotent::{self, NilpotentOperator, SIGN_VARIANTS};
use crate::pentad::{self, format_signature, Pentad, GAMMA_SIGNATURE, NILPOTENT_SIGNATURE};
use crate::rewrite;
use crate::sample::{self, Kinematics, SampleRng};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyConfig {
    pub seed: u64,
    pub max_level: u32,
    /// Random vector pairs for the Pauli product check.
    pub vector_pairs: usize,
    /// On-shell and off-shell samples per nilpotent pentad.
    pub shell_samples: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            seed: 0,
            max_level: 5,
            vector_pairs: 100,
            shell_samples: 20,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: &'static str, passed: bool, detail: impl Into<String>) -> Self {
        Check {
            name,
            passed,
            detail: detail.into(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Diagnostics {
    pub symbolic_gamma_readings: Vec<pentad::SymbolicPentadReading>,
    pub parameter_table: [nilpotent::ParameterRow; 4],
    /// Counts of level-5 pentads by signature multiset and generation.
    pub pentad_census: Vec<CensusRow>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusRow {
    pub signature: String,
    pub generates: bool,
    pub count: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub seed: u64,
    pub max_level: u32,
    pub passed: bool,
    pub checks: Vec<Check>,
    pub diagnostics: Diagnostics,
}

impl VerifyReport {
    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

pub fn run(config: &VerifyConfig) -> Result<VerifyReport> {
    let catalog = Catalog::new(config.max_level)?;
    let mut rng = sample::rng(config.seed);
    let pentads = pentad::find_pentads(5, None)?;

    let checks = vec![
        group_orders(&catalog)?,
        group_axioms(&catalog)?,
        commutation_rules(),
        pauli_units()?,
        pauli_products(&mut rng, config.vector_pairs)?,
        algebra_laws(&mut rng),
        matrix_oracle(&mut rng)?,
        pentad_maximality()?,
        pentad_signatures(&pentads)?,
        pentad_generation(&pentads),
        nilpotency(&mut rng, config.shell_samples)?,
        exclusion(&mut rng, config.shell_samples)?,
        annihilation(&mut rng, config.shell_samples)?,
        rewrite_counts()?,
    ];
    let passed = checks.iter().all(|c| c.passed);

    Ok(VerifyReport {
        seed: config.seed,
        max_level: config.max_level,
        passed,
        checks,
        diagnostics: Diagnostics {
            symbolic_gamma_readings: pentad::symbolic_gamma_readings()?,
            parameter_table: nilpotent::parameter_table(),
            pentad_census: census(&pentads),
        },
    })
}

fn group_orders(catalog: &Catalog) -> Result<Check> {
    let mut orders = Vec::new();
    for g in 0..=catalog.max_level() {
        orders.push(catalog.enumerate(g)?.order());
    }
    let ok = orders.iter().enumerate().all(|(g, &o)| o == 1 << (g + 1));
    Ok(Check::new("group_orders", ok, format!("orders {orders:?}")))
}

fn group_axioms(catalog: &Catalog) -> Result<Check> {
    let mut products = 0;
    let mut failures = Vec::new();
    for g in 0..=catalog.max_level() {
        let r = catalog.verify_group(g)?;
        products += r.products_checked;
        if !r.passed() {
            failures.push(format!(
                "level {g}: {}",
                r.first_failure.unwrap_or_default()
            ));
        }
    }
    Ok(Check::new(
        "group_axioms",
        failures.is_empty(),
        format!("{products} products checked; failures: {failures:?}"),
    ))
}

/// `(gₘgₙ)² = +1` across pairs and `(iₙjₙ)² = -1` within a pair, level 6.
pub fn commutation_rules() -> Check {
    let gens: Vec<Generator> = (0..6).map(Generator::from_position).collect();
    let mut checked = 0;
    let mut bad = Vec::new();
    for (n, &a) in gens.iter().enumerate() {
        for &b in &gens[n + 1..] {
            let want = if a.index() == b.index() {
                Monomial::MINUS_ONE
            } else {
                Monomial::ONE
            };
            checked += 1;
            if Monomial::product_of([a, b]).square() != want {
                bad.push(format!("{a}{b}"));
            }
        }
    }
    Check::new(
        "commutation_rules",
        bad.is_empty(),
        format!("{checked} generator pairs; failures: {bad:?}"),
    )
}

pub fn pauli_units() -> Result<Check> {
    let roles = group::classify_units(3)?;
    let iota = roles.pseudoscalar()?;
    let [i, j, k] = roles.vectors.expect("level 3 has a vector triple");
    let ok = [i, j, k].iter().all(|v| v.square() == Monomial::ONE)
        && i * j == iota * k
        && j * i == -(iota * k)
        && j * k == iota * i
        && k * j == -(iota * i)
        && k * i == iota * j
        && i * k == -(iota * j);
    Ok(Check::new(
        "pauli_units",
        ok,
        format!("pseudoscalar {iota}, vectors {i}, {j}, {k}"),
    ))
}

fn vector_element(units: &[Monomial; 3], v: &[Rational; 3]) -> AlgebraElement {
    AlgebraElement::from_terms(v.iter().cloned().zip(units.iter().copied()))
}

/// `a b = a·b + ι (a × b)` for vectors over the level-3 vector units.
pub fn pauli_product_holds(a: &[Rational; 3], b: &[Rational; 3]) -> Result<bool> {
    let roles = group::classify_units(3)?;
    let iota = AlgebraElement::monomial(roles.pseudoscalar()?);
    let units = roles.vectors.expect("level 3 has a vector triple");
    let dot: Rational = a.iter().zip(b).map(|(x, y)| x * y).sum();
    let cross = [
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ];
    let lhs = vector_element(&units, a).mul_ref(&vector_element(&units, b));
    let rhs = AlgebraElement::scalar(dot) + iota.mul_ref(&vector_element(&units, &cross));
    Ok(lhs == rhs)
}

fn pauli_products(rng: &mut SampleRng, pairs: usize) -> Result<Check> {
    let mut failures = 0;
    for _ in 0..pairs {
        let (a, b) = (sample::vector3(rng), sample::vector3(rng));
        if !pauli_product_holds(&a, &b)? {
            failures += 1;
        }
    }
    Ok(Check::new(
        "pauli_products",
        failures == 0 && pairs >= 100,
        format!("{pairs} random vector pairs, {failures} failures"),
    ))
}

fn algebra_laws(rng: &mut SampleRng) -> Check {
    let mut failures = 0;
    let trials = 30;
    for _ in 0..trials {
        let x = sample::element(rng, 5, 5);
        let y = sample::element(rng, 5, 5);
        let z = sample::element(rng, 5, 5);
        let q = AlgebraElement::scalar(sample::small_rational(rng));
        let assoc = (&x * &y) * z.clone() == &x * &(&y * &z);
        let distrib = &x * &(&y + &z) == &(&x * &y) + &(&x * &z);
        let scalar = &q * &x == &x * &q;
        if !(assoc && distrib && scalar) {
            failures += 1;
        }
    }
    Check::new(
        "algebra_laws",
        failures == 0,
        format!("{trials} random triples at level 5, {failures} failures"),
    )
}

fn matrix_oracle(rng: &mut SampleRng) -> Result<Check> {
    let hom = matrix::verify_homomorphism(5)?;
    let rep = matrix::represent(5)?;
    let mut mismatches = 0;
    let trials = 10;
    for _ in 0..trials {
        let x = sample::element(rng, 5, 4);
        let y = sample::element(rng, 5, 4);
        if rep.image_of(&x.mul_ref(&y)) != rep.image_of(&x).mul_ref(&rep.image_of(&y)) {
            mismatches += 1;
        }
    }
    let ok = hom.passed()
        && hom.distinct_images == 64
        && hom.products_checked == 4096
        && mismatches == 0;
    Ok(Check::new(
        "matrix_oracle",
        ok,
        format!(
            "{} distinct images, {}/{} products match, {mismatches}/{trials} random element products differ",
            hom.distinct_images, hom.products_matched, hom.products_checked
        ),
    ))
}

fn pentad_maximality() -> Result<Check> {
    let size = pentad::max_anticommuting_set_size(5)?;
    Ok(Check::new(
        "pentad_maximality",
        size == 5,
        format!("largest anticommuting set at level 5 has {size} members"),
    ))
}

fn pentad_signatures(pentads: &[Pentad]) -> Result<Check> {
    let nil = pentads
        .iter()
        .filter(|p| p.matches_signature(&NILPOTENT_SIGNATURE))
        .count();
    let gamma = pentads
        .iter()
        .filter(|p| p.matches_signature(&GAMMA_SIGNATURE))
        .count();
    let mut gamma_failures = 0;
    let mut generating = 0;
    for p in pentads.iter().filter(|p| p.generates_full_group()) {
        generating += 1;
        let r = matrix::gamma_relations_check(p)?;
        if !(r.passed() && r.span_dimension == 16) {
            gamma_failures += 1;
        }
    }
    Ok(Check::new(
        "pentad_signatures",
        nil > 0 && gamma > 0 && gamma_failures == 0,
        format!(
            "{} pentads; {nil} with squares (+,-,-,-,-), {gamma} with (+,-,-,-,+); \
             {generating} generate the group, {gamma_failures} fail the matrix relations",
            pentads.len()
        ),
    ))
}

fn pentad_generation(pentads: &[Pentad]) -> Check {
    let agree = pentads
        .iter()
        .all(|p| p.generates_full_group() == p.masks_independent());
    let iota = Monomial::generator(Generator::i(3)).mask();
    let parity = pentads.iter().all(|p| {
        let x = p.mask_parity();
        (x.is_empty() || x == iota) && ((x == iota) == p.masks_independent())
    });
    Check::new(
        "pentad_generation",
        agree && parity,
        format!("closure agrees with GF(2) rank: {agree}; parity law holds: {parity}"),
    )
}

fn census(pentads: &[Pentad]) -> Vec<CensusRow> {
    let mut rows: Vec<CensusRow> = Vec::new();
    for p in pentads {
        let mut sig = p.signature();
        sig.sort();
        let signature = format_signature(&sig);
        let generates = p.generates_full_group();
        match rows
            .iter_mut()
            .find(|r| r.signature == signature && r.generates == generates)
        {
            Some(r) => r.count += 1,
            None => rows.push(CensusRow {
                signature,
                generates,
                count: 1,
            }),
        }
    }
    rows.sort_by(|a, b| (&a.signature, a.generates).cmp(&(&b.signature, b.generates)));
    rows
}

/// The two fixed on-shell points followed by seeded random ones.
pub fn on_shell_samples(rng: &mut SampleRng, n: usize) -> Vec<Kinematics> {
    let mut out = vec![
        Kinematics::from_ints(5, [0, 0, 4], 3),
        Kinematics::from_ints(13, [3, 4, 12], 0),
    ];
    while out.len() < n {
        out.push(sample::on_shell(rng));
    }
    out
}

fn massive_samples(rng: &mut SampleRng, n: usize) -> Vec<Kinematics> {
    let mut out = vec![Kinematics::from_ints(5, [0, 0, 4], 3)];
    while out.len() < n {
        let k = sample::on_shell(rng);
        if k.is_massive_moving() {
            out.push(k);
        }
    }
    out
}

fn build(p: &Pentad, k: &Kinematics, signs: (Sign, Sign)) -> Result<NilpotentOperator> {
    NilpotentOperator::build(
        p,
        k.energy.clone(),
        k.momentum.clone(),
        k.mass.clone(),
        signs,
    )
}

fn nilpotency(rng: &mut SampleRng, n: usize) -> Result<Check> {
    let pentads = pentad::find_pentads(5, Some(&NILPOTENT_SIGNATURE))?;
    let on = on_shell_samples(rng, n);
    let off: Vec<Kinematics> = (0..n).map(|_| sample::any_kinematics(rng)).collect();
    let mut failures = 0;
    for p in &pentads {
        for k in &on {
            if !build(p, k, (Sign::Plus, Sign::Plus))?.square().is_zero() {
                failures += 1;
            }
        }
        for k in &off {
            let op = build(p, k, (Sign::Plus, Sign::Plus))?;
            if op.square() != AlgebraElement::scalar(k.shell_defect()) {
                failures += 1;
            }
        }
    }
    Ok(Check::new(
        "nilpotency",
        failures == 0 && !pentads.is_empty() && n >= 20,
        format!(
            "{} pentads x ({} on-shell + {} off-shell) samples, {failures} failures",
            pentads.len(),
            on.len(),
            off.len()
        ),
    ))
}

/// Whether `variant u · variant v = 0 ⇔ u = v` for all 16 pairs.
pub fn exclusion_holds(p: &Pentad, k: &Kinematics) -> Result<bool> {
    for u in SIGN_VARIANTS {
        let a = build(p, k, u)?;
        for v in SIGN_VARIANTS {
            let b = build(p, k, v)?;
            if nilpotent::exclusion_product(&a, &b)?.is_zero() != (u == v) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn exclusion(rng: &mut SampleRng, n: usize) -> Result<Check> {
    let p = nilpotent::first_nilpotent_pentad(5)?;
    let samples = massive_samples(rng, n);
    let mut failures = 0;
    for k in &samples {
        if !exclusion_holds(&p, k)? {
            failures += 1;
        }
    }
    Ok(Check::new(
        "exclusion",
        failures == 0,
        format!(
            "{} samples x 16 products, {failures} failing samples",
            samples.len()
        ),
    ))
}

fn annihilation(rng: &mut SampleRng, n: usize) -> Result<Check> {
    let p = nilpotent::first_nilpotent_pentad(5)?;
    let samples = massive_samples(rng, n);
    let mut failures = 0;
    for k in &samples {
        let t = nilpotent::dirac_annihilation_table(&p, &k.energy, &k.momentum, &k.mass)?;
        if !nilpotent::is_permutation_matrix(&t) {
            failures += 1;
        }
    }
    Ok(Check::new(
        "annihilation",
        failures == 0,
        format!(
            "{} on-shell samples, {failures} non-permutation tables",
            samples.len()
        ),
    ))
}

fn rewrite_counts() -> Result<Check> {
    let trace = rewrite::run(6)?;
    let pairs: Vec<usize> = trace
        .steps
        .iter()
        .map(|s| s.table.cancelling_pairs())
        .collect();
    let cells_ok = trace
        .steps
        .iter()
        .all(|s| s.table.cell_count() == (s.step as usize + 1).pow(2));
    use rewrite::ProcessLabel::*;
    let labels_ok = trace.labels()
        == [
            Conjugation,
            Complexification,
            Dimensionalization,
            Repetition,
            Repetition,
            Repetition,
        ];
    let ok = pairs[1] == 3 && pairs[2] == 6 && cells_ok && labels_ok;
    Ok(Check::new(
        "rewrite_counts",
        ok,
        format!("cancelling pairs per step {pairs:?}"),
    ))
}

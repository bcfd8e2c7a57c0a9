use proptest::prelude::*;
use zero_algebra::algebra::{rational, AlgebraElement};
use zero_algebra::matrix::{represent, ExactMatrix};
use zero_algebra::monomial::Sign;
use zero_algebra::nilpotent::{
    boson_product, dirac_annihilation_table, exclusion_product, first_nilpotent_pentad,
    is_permutation_matrix, NilpotentOperator, SIGN_VARIANTS,
};
use zero_algebra::pentad::{find_pentads, Pentad, NILPOTENT_SIGNATURE};
use zero_algebra::sample::{self, Kinematics};

const PLUS: (Sign, Sign) = (Sign::Plus, Sign::Plus);

fn op(p: &Pentad, k: &Kinematics, signs: (Sign, Sign)) -> NilpotentOperator {
    NilpotentOperator::build(
        p,
        k.energy.clone(),
        k.momentum.clone(),
        k.mass.clone(),
        signs,
    )
    .unwrap()
}

#[test]
fn square_of_fixed_points() {
    let p = first_nilpotent_pentad(5).unwrap();
    for k in [
        Kinematics::from_ints(5, [0, 0, 4], 3),
        Kinematics::from_ints(13, [3, 4, 12], 0),
    ] {
        assert!(op(&p, &k, PLUS).square().is_zero());
    }
    let off = Kinematics::from_ints(2, [0, 0, 1], 1);
    assert_eq!(
        op(&p, &off, PLUS).square(),
        AlgebraElement::scalar(rational(2))
    );
}

#[test]
fn every_nilpotent_pentad_gives_nilpotent_operators() {
    let pentads = find_pentads(5, Some(&NILPOTENT_SIGNATURE)).unwrap();
    let k = Kinematics::from_ints(13, [3, 4, 12], 0);
    for p in &pentads {
        for signs in SIGN_VARIANTS {
            assert!(op(p, &k, signs).is_nilpotent());
        }
    }
}

#[test]
fn boson_product_by_hand() {
    // (5α + 4β₃ + 3δ)(-5α + 4β₃ + 3δ) expanded with α² = 1, β₃² = δ² = -1
    let p = first_nilpotent_pentad(5).unwrap();
    let k = Kinematics::from_ints(5, [0, 0, 4], 3);
    let fermion = op(&p, &k, PLUS);
    let anti = op(&p, &k, (Sign::Minus, Sign::Plus));
    let [alpha, _, _, b3, delta] = p.members().map(AlgebraElement::monomial);
    let want = AlgebraElement::scalar(rational(-50))
        + (&alpha * &b3).scale(&rational(40))
        + (&alpha * &delta).scale(&rational(30));
    assert_eq!(boson_product(&fermion, &anti).unwrap(), want);
    assert!(!want.is_zero());
}

#[test]
fn antifermion_flips_energy_sign() {
    let p = first_nilpotent_pentad(5).unwrap();
    let k = Kinematics::from_ints(5, [0, 0, 4], 3);
    assert_eq!(
        op(&p, &k, PLUS).antifermion(),
        op(&p, &k, (Sign::Minus, Sign::Plus))
    );
}

#[test]
fn build_preconditions() {
    let wrong = find_pentads(5, None)
        .unwrap()
        .into_iter()
        .find(|p| !p.matches_signature(&NILPOTENT_SIGNATURE))
        .unwrap();
    let z = || [rational(0), rational(0), rational(0)];
    assert!(NilpotentOperator::build(&wrong, rational(1), z(), rational(1), PLUS).is_err());
    let p = first_nilpotent_pentad(5).unwrap();
    assert!(NilpotentOperator::build(&p, rational(-1), z(), rational(1), PLUS).is_err());
    assert!(NilpotentOperator::build(&p, rational(1), z(), rational(-1), PLUS).is_err());
}

#[test]
fn products_need_a_shared_pentad() {
    let all = find_pentads(5, Some(&NILPOTENT_SIGNATURE)).unwrap();
    let k = Kinematics::from_ints(5, [0, 0, 4], 3);
    assert!(exclusion_product(&op(&all[0], &k, PLUS), &op(&all[1], &k, PLUS)).is_err());
}

#[test]
fn annihilation_table_shape() {
    let p = first_nilpotent_pentad(5).unwrap();
    let t = dirac_annihilation_table(
        &p,
        &rational(5),
        &[rational(0), rational(0), rational(4)],
        &rational(3),
    )
    .unwrap();
    assert!(is_permutation_matrix(&t));
    // row (s_E, s_p) kills the amplitude (s_E, -s_p)
    assert_eq!(
        t,
        [
            [false, true, false, false],
            [true, false, false, false],
            [false, false, false, true],
            [false, false, true, false]
        ]
    );
    let z = [rational(0), rational(0), rational(0)];
    assert!(dirac_annihilation_table(&p, &rational(3), &z, &rational(3)).is_err());
    assert!(dirac_annihilation_table(
        &p,
        &rational(2),
        &[rational(0), rational(0), rational(1)],
        &rational(1)
    )
    .is_err());
}

fn matrix_square(p: &Pentad, k: &Kinematics) -> ExactMatrix {
    let m = represent(5).unwrap().image_of(&op(p, k, PLUS).element());
    m.mul_ref(&m)
}

#[test]
fn matrix_image_is_nilpotent() {
    let p = first_nilpotent_pentad(5).unwrap();
    assert!(matrix_square(&p, &Kinematics::from_ints(5, [0, 0, 4], 3)).is_zero());
    assert!(!matrix_square(&p, &Kinematics::from_ints(2, [0, 0, 1], 1)).is_zero());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn on_shell_squares_vanish(seed in any::<u64>()) {
        let mut rng = sample::rng(seed);
        let k = sample::on_shell(&mut rng);
        let p = first_nilpotent_pentad(5).unwrap();
        for signs in SIGN_VARIANTS {
            prop_assert!(op(&p, &k, signs).square().is_zero());
        }
        prop_assert!(matrix_square(&p, &k).is_zero());
    }

    #[test]
    fn off_shell_square_is_the_defect(seed in any::<u64>()) {
        let mut rng = sample::rng(seed);
        let k = sample::any_kinematics(&mut rng);
        let p = first_nilpotent_pentad(5).unwrap();
        prop_assert_eq!(op(&p, &k, PLUS).square(), AlgebraElement::scalar(k.shell_defect()));
    }

    #[test]
    fn exclusion_and_annihilation(seed in any::<u64>()) {
        let mut rng = sample::rng(seed);
        let k = sample::on_shell(&mut rng);
        prop_assume!(k.is_massive_moving());
        let p = first_nilpotent_pentad(5).unwrap();
        for u in SIGN_VARIANTS {
            for v in SIGN_VARIANTS {
                let prod = exclusion_product(&op(&p, &k, u), &op(&p, &k, v)).unwrap();
                prop_assert_eq!(prod.is_zero(), u == v);
            }
        }
        let t = dirac_annihilation_table(&p, &k.energy, &k.momentum, &k.mass).unwrap();
        prop_assert!(is_permutation_matrix(&t));
    }
}

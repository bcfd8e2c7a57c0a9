use zero_algebra::rewrite::{self, CellClass, ProcessLabel, SubsetAlphabet, Verdict};

#[test]
fn cancelling_pairs_and_cell_counts() {
    let trace = rewrite::run(6).unwrap();
    for step in &trace.steps {
        let n = step.alphabet.len() - 1;
        assert_eq!(step.alphabet.len(), step.step as usize + 1);
        assert_eq!(step.table.cell_count(), (n + 1) * (n + 1));
        assert_eq!(step.table.cancelling_pairs(), n * (n + 1) / 2);
        assert_eq!(step.verdict, Verdict::RequiresCreate);
    }
    let by_size = |size: usize| {
        trace
            .steps
            .iter()
            .find(|s| s.alphabet.len() == size)
            .unwrap()
    };
    assert_eq!(by_size(3).table.cancelling_pairs(), 3);
    assert_eq!(by_size(4).table.cancelling_pairs(), 6);
}

#[test]
fn labels_follow_the_ladder() {
    use ProcessLabel::*;
    let labels = rewrite::run(6).unwrap().labels();
    assert_eq!(
        labels,
        [
            Conjugation,
            Complexification,
            Dimensionalization,
            Repetition,
            Repetition,
            Repetition
        ]
    );
}

#[test]
fn table_classes() {
    let trace = rewrite::run(3).unwrap();
    let t = &trace.steps[2].table;
    assert_eq!(t.class(0, 0), CellClass::ZeroZero);
    assert_eq!(t.class(0, 1), CellClass::ConjugatePair);
    assert_eq!(t.class(1, 1), CellClass::BalancedDiagonal);
    assert_eq!(t.class(3, 3), CellClass::NovelDiagonal);
    assert_eq!(t.novel_cells(), 1);
}

#[test]
fn create_modes_do_not_mix() {
    let s = SubsetAlphabet::initial();
    let recursive = s.create_recursive().unwrap();
    assert_eq!(recursive.to_string(), "{0, E}");
    assert!(recursive.create_recursive().is_err());
    assert!(recursive.create_iterative().is_err());
    let iterative = s.create_iterative().unwrap();
    assert!(iterative.create_recursive().is_err());
    assert_eq!(iterative.created(), 1);
}

#[test]
fn steps_map_to_group_levels() {
    for step in 1..=6 {
        assert_eq!(rewrite::map_to_group(step).unwrap().order(), 1 << step);
    }
    assert!(rewrite::map_to_group(0).is_err());
    assert!(rewrite::run(0).is_err());
}

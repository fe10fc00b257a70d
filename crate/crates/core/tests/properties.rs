mod common;

use proptest::prelude::*;
use ybx_core::io::{parse_solution, write_solution};
use ybx_core::linalg::{check_matrix_braid, linearize, permutation_operator, Form};
use ybx_core::magma::{canonical_table, dihedral_quandle, enumerate, EnumOptions};
use ybx_core::settheoretic::{from_shelf, lyubashenko, ShelfVariant};
use ybx_core::{Magma, STSolution, Table};

fn solution_tables(max_n: usize) -> impl Strategy<Value = STSolution> {
    (1..=max_n).prop_flat_map(|n| {
        let table = proptest::collection::vec(proptest::collection::vec(0..n, n), n);
        (table.clone(), table).prop_map(|(sigma, tau)| {
            STSolution::from_tables(Table::from_rows(&sigma).unwrap(), Table::from_rows(&tau).unwrap()).unwrap()
        })
    })
}

fn relabel(m: &Magma, perm: &[usize]) -> Magma {
    Magma::new(m.table().relabel(perm))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn table_and_matrix_verifiers_agree(s in solution_tables(3)) {
        let table = s.check_braid().is_pass();
        let matrix = check_matrix_braid(&linearize(&s, Form::Braid), s.size()).unwrap().is_pass();
        prop_assert_eq!(table, matrix);
    }

    #[test]
    fn solution_text_round_trip(s in solution_tables(4)) {
        let back = parse_solution(&write_solution(&s)).unwrap();
        prop_assert_eq!(back.sigma_table(), s.sigma_table());
        prop_assert_eq!(back.tau_table(), s.tau_table());
    }

    #[test]
    fn shift_conjugation(n in 2usize..8, c in 1usize..8) {
        prop_assume!(c < n);
        let p = permutation_operator(n);
        let lhs = linearize(&lyubashenko(n, n - c).unwrap(), Form::Braid);
        let rhs = &(&p * &linearize(&lyubashenko(n, c).unwrap(), Form::Braid)) * &p;
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn canonical_form_is_an_isomorphism_invariant(
        index in 0usize..1000,
        perm in Just((0..4).collect::<Vec<usize>>()).prop_shuffle(),
    ) {
        let racks = enumerate(4, EnumOptions::default()).unwrap();
        let m = &racks[index % racks.len()];
        let image = relabel(m, &perm);
        prop_assert!(image.is_rack());
        prop_assert_eq!(image.is_quandle(), m.is_quandle());
        prop_assert_eq!(image.canonical_form(), m.canonical_form());
        let canon = canonical_table(m.table());
        prop_assert_eq!(canonical_table(&canon), canon);
    }

    #[test]
    fn relabeled_shelf_solutions_stay_solutions(
        perm in Just((0..5).collect::<Vec<usize>>()).prop_shuffle(),
        right in any::<bool>(),
    ) {
        let m = relabel(&dihedral_quandle(5).unwrap(), &perm);
        let variant = if right { ShelfVariant::Right } else { ShelfVariant::Left };
        let s = from_shelf(&m, variant).unwrap();
        prop_assert!(s.check_braid().is_pass());
    }
}

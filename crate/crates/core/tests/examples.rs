//! Every example must run to completion.

macro_rules! example_test {
    ($name:ident) => {
        mod $name {
            include!(concat!(
                env!("CARGO_MANIFEST_DIR"),
                "/examples/",
                stringify!($name),
                ".rs"
            ));
        }

        #[test]
        fn $name() {
            $name::run_example().expect(concat!(stringify!($name), " should run"));
        }
    };
}

example_test!(closed_forms);
example_test!(incomplete_zeta_table);
example_test!(oracle_crosscheck);
example_test!(semigroup);
example_test!(derivative_equation);
example_test!(norm_and_bound);
example_test!(critical_line_zero);
example_test!(symmetry_scan);
example_test!(pole_structure);

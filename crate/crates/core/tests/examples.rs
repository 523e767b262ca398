macro_rules! example {
    ($module:ident, $file:literal, $test:ident) => {
        mod $module {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }

        #[test]
        fn $test() {
            $module::run_example().expect(concat!($file, " should run"));
        }
    };
}

example!(graph_basics, "graph_basics.rs", graph_basics_runs);
example!(enumerate_graphs, "enumerate_graphs.rs", enumeration_runs);
example!(elser_numbers, "elser_numbers.rs", elser_numbers_run);
example!(nucleus_complex, "nucleus_complex.rs", nucleus_complexes_run);
example!(homology, "homology.rs", homology_runs);
example!(euler_recursion, "euler_recursion.rs", euler_recursion_runs);
example!(rdct, "rdct.rs", rdct_runs);
example!(ear_decomposition, "ear_decomposition.rs", ear_decomposition_runs);
example!(sign_profiles, "sign_profiles.rs", sign_profiles_run);
example!(verify_graph, "verify_graph.rs", verify_runs);
example!(sweep, "sweep.rs", sweep_runs);
example!(cli, "cli.rs", cli_runs);

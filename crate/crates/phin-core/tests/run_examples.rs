mod stable_subspaces {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/stable_subspaces.rs"));
}

#[test]
fn stable_subspaces_example_runs() {
    stable_subspaces::run_example().expect("stable subspaces example should run");
}

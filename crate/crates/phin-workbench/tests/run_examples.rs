mod module_files {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/module_files.rs"));
}

mod certify {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/certify.rs"));
}

#[test]
fn module_files_example_runs() {
    module_files::run_example().expect("module files example should run");
}

#[test]
fn certify_example_runs() {
    certify::run_example().expect("certify example should run");
}

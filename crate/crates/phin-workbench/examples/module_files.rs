// The workbench commands on module files: validation, admissibility with
// a witness, classification and isomorphism. Each command returns the same
// JSON report the `phin` binary prints.

use std::error::Error;
use std::path::PathBuf;

use phin_workbench::{commands, module_to_string, parse_module_str, Verdict};

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
}

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let report = commands::validate(&data("r2_3.json"));
    println!("validate r2_3.json: {}", report.summary);
    assert_eq!(report.result["n_rank"], 2);

    // A scalar phi with L1 on a line: that line has t_H = 2 > t_N = 1.
    let report = commands::admissible(&data("scalar_inadmissible.json"), true);
    println!("admissible scalar_inadmissible.json: {}", report.summary);
    assert_eq!(report.verdict, Verdict::Negative);
    println!("  witness: {}", report.result["witness"]);

    // The same module in two bases classifies to the same family.
    let a = commands::classify(&data("d_cris1.json"));
    let b = commands::classify(&data("d_cris1_moved.json"));
    println!("classify: {} / {}", a.summary, b.summary);
    assert_eq!(a.result["family"], b.result["family"]);
    assert_eq!(a.result["instance"], b.result["instance"]);

    let iso = commands::iso(&data("d_cris1.json"), &data("d_cris1_moved.json"), true);
    assert_eq!(iso.exit_code(), 0);
    let not_iso = commands::iso(&data("d_cris1.json"), &data("d_cris1_lambda6.json"), false);
    println!("iso: {} / {}", iso.summary, not_iso.summary);
    assert_eq!(not_iso.exit_code(), 1);

    // Broken files are errors with exit code 2.
    let broken = commands::validate(&data("not_nilpotent.json"));
    println!("validate not_nilpotent.json: {}", broken.summary);
    assert_eq!(broken.exit_code(), 2);

    // Files written by the workbench read back to the same module.
    let m = phin_workbench::parse_module_file(data("d_cris1_moved.json"))?;
    let text = module_to_string(&m);
    assert_eq!(parse_module_str(&text, "round trip")?, m);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}

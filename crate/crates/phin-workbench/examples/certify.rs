// A small certification campaign, and the same campaign against a catalog
// whose entry for one family has lost its valuation conditions.

use std::error::Error;

use phin_classifier::FamilyId;
use phin_core::HodgeType;
use phin_workbench::{certify, CertifyConfig, Fault};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let mut cfg = CertifyConfig::new(HodgeType::new(1, 3), 30, 2024);
    cfg.oracle_samples = 50;
    let report = certify(&cfg, 1);
    for stage in &report.stages {
        println!("{:>15}: {} passed, {} failed", stage.name, stage.passed, stage.failed);
    }
    println!("random modules by outcome: {:?}", report.outcomes);
    assert!(report.passed);

    // The seed fixes everything, whatever the number of workers.
    assert_eq!(certify(&cfg, 3), report);

    cfg.fault = Some(Fault::DropConditions(FamilyId::Cris(9)));
    let broken = certify(&cfg, 1);
    let c = broken.first_counterexample().ok_or("the fault should be caught")?;
    println!("with {}: {} #{}: {}", cfg.fault.map(|f| f.to_string()).unwrap_or_default(), c.stage, c.index, c.reason);
    assert!(!broken.passed);
    assert!(c.instance.is_some());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}

//! Running part of the identity registry and summarizing the reports.

use kummer::identities::{registry, run_suite, GridSpec, Selection};
use kummer::EvalOptions;

fn main() -> kummer::Result<()> {
    println!("{} registered checks", registry().len());
    let selection = Selection::Ids(vec!["EQ-2.16".into(), "EQ-4".into(), "EQ-6.12".into()]);
    let grid = GridSpec::new(vec![0.2, 0.5, 0.8])?;
    let reports = run_suite(&selection, &grid, &EvalOptions::default())?;
    for r in &reports {
        let point = r.grid_point.map_or("-".to_string(), |p| format!("{p:.4}"));
        println!(
            "{:<12} {point:>7} residual {:.1e} / {:.0e} {}",
            r.id,
            r.abs_residual,
            r.tolerance,
            if r.pass { "ok" } else { "FAIL" }
        );
    }
    Ok(())
}

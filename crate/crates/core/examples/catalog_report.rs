//! Re-verifies the whole built-in catalog and prints the per-entry summary
//! followed by the list of discrepancies.

use hom_dialgebra::catalog::{self, ReportOptions};

fn main() -> hom_dialgebra::Result<()> {
    let report = catalog::verify_all(&ReportOptions::default())?;
    for e in &report.entries {
        let der = e.der_dim.map_or("-".to_string(), |d| d.to_string());
        println!("{:<8} {:>2}/5 axioms  der {der:>2}  {} discrepancies", e.id, e.axioms.passing(), e.discrepancies.len());
    }
    println!("total discrepancies: {}", report.discrepancy_count());
    for r in &report.ranges {
        println!("{} in dim {}: observed {:?}, within: {}", r.quantity, r.dim, r.observed_range, r.within);
    }
    Ok(())
}

//! Build a two-dimensional Hom-dialgebra from structure constants, check the
//! five identities and multiplicativity, then break one product and look at
//! the reported witness.

use hom_dialgebra::axioms;
use hom_dialgebra::{Backend, HomDialgebra, LinearMap, MultTable, Vector};

fn main() -> hom_dialgebra::Result<()> {
    let b = Backend::Rational;

    // e1 ⊣ e1 = e1, e1 ⊢ e1 = e1, α = id on span(e1), α(e2) = 0.
    let mut left = MultTable::zero(2, b);
    left.set_product(0, 0, &Vector::from_i64(b, &[1, 0]));
    let right = left.clone();
    let alpha = LinearMap::from_i64_rows(b, &[&[1, 0], &[0, 0]]);
    let a = HomDialgebra::new("line", left, right, alpha)?;

    let report = axioms::check_dialgebra(&a);
    println!("{report}");
    println!("{}", axioms::check_multiplicativity(&a));

    // The same check, written directly in structure constants.
    assert!(axioms::index_sum_residuals(&a).is_empty());

    // Make e2 act as a left unit for ⊣ only; some identities now fail.
    let mut broken = a.left().clone();
    broken.set_product(1, 0, &Vector::from_i64(b, &[1, 0]));
    let bad = HomDialgebra::new("broken", broken, a.right().clone(), a.alpha().clone())?;
    let report = axioms::check_dialgebra(&bad);
    println!("{}/5 identities pass", report.passing());
    if let Some((identity, witness)) = report.first_violation() {
        println!("first failure: {} at {witness}", identity.identity);
    }
    Ok(())
}

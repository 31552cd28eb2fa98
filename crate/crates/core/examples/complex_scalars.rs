//! Entries that need roots of unity live on the complex backend, where
//! comparisons use the process-wide tolerance.

use hom_dialgebra::scalar::{self, cube_root_of_minus_one};
use hom_dialgebra::{axioms, catalog, derivations, Backend, Scalar};

fn main() -> hom_dialgebra::Result<()> {
    let w = cube_root_of_minus_one();
    println!("w = {w}, w³ = {}", w.pow(3));
    println!("tolerance {:e}", scalar::epsilon());

    for e in catalog::entries().filter(|e| e.backend() == Backend::Complex).take(3) {
        let inst = e.instantiate_default()?;
        let a = inst.algebra();
        println!(
            "{}: {}/5 axioms, Der dimension {}",
            e.id(),
            axioms::check_dialgebra(a).passing(),
            derivations::derivation_space(a, 1).dim()
        );
    }
    assert!(Scalar::approx_eq(&w.pow(3), &Scalar::from_i64(Backend::Complex, -1), scalar::epsilon())?);
    Ok(())
}

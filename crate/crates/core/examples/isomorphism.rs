//! Fingerprints separate non-isomorphic entries; when they agree, a seeded
//! numeric search looks for an explicit isomorphism and verifies it exactly.

use hom_dialgebra::constructions;
use hom_dialgebra::invariants::{self, SearchOptions};
use hom_dialgebra::{catalog, Backend, LinearMap};

fn main() -> hom_dialgebra::Result<()> {
    let a = catalog::get("Hd2.1", None)?;
    let b = catalog::get("Hd2.5", None)?;
    println!("{}", invariants::fingerprint(a.algebra()));
    println!("Hd2.1 vs Hd2.5: {}", invariants::compare(a.algebra(), b.algebra(), None));

    let phi = LinearMap::from_i64_rows(Backend::Rational, &[&[2, 1], &[1, 1]]);
    let moved = constructions::transport(a.algebra(), &phi)?;
    let verdict = invariants::compare(a.algebra(), &moved, Some(SearchOptions { budget: 200, seed: 0 }));
    println!("Hd2.1 vs its transport: {verdict}");
    Ok(())
}

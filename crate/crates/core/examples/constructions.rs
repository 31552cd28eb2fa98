//! Base change, the Zinbiel → dendriform passage, symmetrization, Yau
//! twisting of a dipterous algebra and untwisting a dialgebra.

use hom_dialgebra::axioms::DipterousSide;
use hom_dialgebra::constructions::{self, UntwistVariant};
use hom_dialgebra::{catalog, Backend, LinearMap, MultTable, Vector};

fn main() -> hom_dialgebra::Result<()> {
    let b = Backend::Rational;

    // Transporting along an invertible map gives an isomorphic algebra.
    let inst = catalog::get("Hd2.4", None)?;
    let a = inst.algebra();
    let phi = LinearMap::from_i64_rows(b, &[&[1, 1], &[0, 1]]);
    let t = constructions::transport(a, &phi)?;
    println!("Φ is a homomorphism onto the transport: {}", constructions::is_homomorphism(a, &t, &phi)?.pass());

    // The truncated square e1∘e1 = e2 is Hom-Zinbiel for α = id.
    let mut circ = MultTable::zero(2, b);
    circ.set_product(0, 0, &Vector::from_i64(b, &[0, 1]));
    let id = LinearMap::identity(2, b);
    let dend = constructions::zinbiel_to_dendriform(&circ, &id)?;
    println!("dendriform from Zinbiel: {}/{} identities", dend.report.passing(), dend.report.identities.len());
    let (sym, report) = constructions::symmetrize_zinbiel(&circ, &id)?;
    println!("symmetrized product is zero: {}; commutative Hom-associative: {}", sym.is_zero(), report.pass());

    // Yau twist of the dipterous structure (∗ = product, ≻ = 0).
    let mut star = MultTable::zero(2, b);
    star.set_product(0, 0, &Vector::from_i64(b, &[1, 0]));
    let alpha = LinearMap::from_i64_rows(b, &[&[1, 0], &[0, 0]]);
    let twisted = constructions::yau_twist_dipterous(&star, &MultTable::zero(2, b), &alpha, DipterousSide::Right)?;
    println!("twisted dipterous identities pass: {}", twisted.report.pass());

    // Untwisting: compose the products with α and compare against α = id.
    let (u, report) = constructions::untwist_candidate(a, UntwistVariant::Literal)?;
    println!("untwisted {} passes {}/5", u.name(), report.passing());
    Ok(())
}

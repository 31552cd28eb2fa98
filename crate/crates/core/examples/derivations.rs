//! α^k-derivations of a catalog entry, inner maps from α-fixed vectors, and
//! the bracket of two derivations.

use hom_dialgebra::{catalog, derivations, Side, Vector};

fn main() -> hom_dialgebra::Result<()> {
    let inst = catalog::get("Hd2.4", None)?;
    let a = inst.algebra();

    for k in 0..=3 {
        let basis = derivations::derivation_basis(a, k);
        println!("α^{k}-derivations: dimension {}", basis.len());
        for d in &basis {
            println!("{d}");
        }
    }

    // α fixes e1, so g ↦ α^{k−1}(g) ⊣ e1 is a candidate inner map.
    let fixed = derivations::alpha_fixed_points(a);
    println!("α-fixed subspace has dimension {}", fixed.dim());
    for v in fixed.basis_vectors() {
        for side in Side::BOTH {
            let m = derivations::inner_map(a, &v, 1, side)?;
            let ok = derivations::is_derivation(a, &m, 2)?.pass();
            println!("inner map of {v} through {}: α²-derivation = {ok}", side.symbol());
        }
    }

    let d = derivations::derivation_basis(a, 1);
    if let [d1, ..] = d.as_slice() {
        let report = derivations::bracket_check(a, d1, 1, d1, 1)?;
        println!("[D, D] is an α²-derivation: {}", report.pass());
    }

    let e = Vector::basis(2, 1, a.backend());
    println!("D(e2) for the first basis derivation: {}", d[0].apply(&e)?);
    Ok(())
}

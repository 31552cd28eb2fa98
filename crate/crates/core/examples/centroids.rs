//! Linear centroid, its quadratic closure conditions, the center and the
//! central derivations of a catalog entry.

use hom_dialgebra::{catalog, centroids, derivations};

fn main() -> hom_dialgebra::Result<()> {
    for id in ["Hd2.1", "Hd2.5", "Hd3.4"] {
        let inst = catalog::get(id, None)?;
        let a = inst.algebra();
        let c = centroids::centroid(a)?;
        println!("{id}: linear centroid dimension {}", c.linear.dim());
        if c.closed {
            println!("  closed under the middle equality");
        } else {
            println!("  not closed; remaining conditions on the coordinates t:");
            for q in c.constraints.iter().take(4) {
                println!("    {q}");
            }
            if let Some(points) = c.single_parameter_points() {
                let shown: Vec<String> = points.iter().map(ToString::to_string).collect();
                println!("  admissible t: {}", shown.join(", "));
            }
        }
        println!("  center dimension {}", centroids::center(a).dim());
        println!("  central derivations dimension {}", derivations::central_derivation_space(a).dim());
    }
    Ok(())
}

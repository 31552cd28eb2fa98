//! Writes a catalog entry in the plain-text algebra format, parses it back,
//! and shows the line-numbered error for a malformed file.

use hom_dialgebra::catalog::{self, format};

fn main() -> hom_dialgebra::Result<()> {
    let inst = catalog::get("Hd2.4", None)?;
    let text = format::serialize(&inst.structure);
    print!("{text}");
    let parsed = format::parse(&text)?;
    assert_eq!(parsed, inst.structure);

    let broken = text.replace("left 1 2 1 1", "left 1 3 1 1");
    match format::parse(&broken) {
        Ok(_) => println!("unexpectedly parsed"),
        Err(e) => println!("error: {e}"),
    }
    Ok(())
}

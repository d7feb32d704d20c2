//! Tree and general verifiers, and the certificate they return for a bad colouring.

use parity_colouring::graph::{make_cycle, make_path};
use parity_colouring::parity::{find_parity_path_tree, verify_colouring, Colouring, Verdict};

fn main() -> parity_colouring::Result<()> {
    let path = make_path(6)?;
    let bad = Colouring::new(3, vec![1, 2, 1, 2, 3, 1])?;
    match find_parity_path_tree(&path, &bad)? {
        Some(cert) => println!("P6 {:?}: parity path {}", bad.colours(), cert.to_json()),
        None => println!("P6 {:?}: valid", bad.colours()),
    }

    let cycle = make_cycle(5)?;
    for colours in [vec![1, 2, 1, 3, 4], vec![1, 2, 1, 2, 3]] {
        let c = Colouring::from_colours(colours)?;
        match verify_colouring(&cycle, &c, None)? {
            Verdict::Valid => println!("C5 {:?}: valid", c.colours()),
            Verdict::Invalid(cert) => println!("C5 {:?}: parity path {:?}", c.colours(), cert.path.vertices()),
            Verdict::Indeterminate { expansions } => println!("C5: gave up after {expansions} expansions"),
        }
    }
    Ok(())
}

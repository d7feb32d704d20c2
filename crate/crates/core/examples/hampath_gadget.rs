//! The gadget colouring is invalid exactly when the source graph has a Hamiltonian path.

use parity_colouring::graph::{make_cycle, make_star, Graph};
use parity_colouring::reduction::{build_hampath_gadget, check_reduction_equivalence};

fn main() -> parity_colouring::Result<()> {
    let graphs = [
        ("C5", make_cycle(5)?),
        ("star K1,3", make_star(4)?),
        ("paw", Graph::new(4, &[(0, 1), (1, 2), (2, 0), (2, 3)])?),
    ];
    for (name, g) in graphs {
        let gadget = build_hampath_gadget(&g)?;
        let report = check_reduction_equivalence(&g, None, None)?;
        println!(
            "{name}: gadget has {} vertices and {} colours, Hamiltonian path {:?}, outcome {:?}",
            gadget.host.n(),
            gadget.colouring.k(),
            report.hamiltonian_path,
            report.outcome
        );
    }
    Ok(())
}

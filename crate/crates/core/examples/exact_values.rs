//! Parity chromatic numbers of paths, cycles and two small trees.

use parity_colouring::graph::{make_complete_binary_tree, make_cycle, make_path, make_t33};
use parity_colouring::solver::chromatic_number;

fn main() -> parity_colouring::Result<()> {
    for n in [1, 2, 3, 4, 7, 8, 12] {
        let r = chromatic_number(&make_path(n)?, None)?;
        println!("P{n:<3} chi = {}  witness {:?}", r.chi().unwrap(), r.witness().colours());
    }
    for n in [3, 4, 5, 8, 9] {
        let r = chromatic_number(&make_cycle(n)?, None)?;
        println!("C{n:<3} chi = {}", r.chi().unwrap());
    }
    let b4 = chromatic_number(&make_complete_binary_tree(4)?.to_graph(), None)?;
    let t33 = chromatic_number(&make_t33(), None)?;
    println!("B4   chi = {} ({} search nodes)", b4.chi().unwrap(), b4.stats().nodes);
    println!("T33  chi = {} ({} search nodes)", t33.chi().unwrap(), t33.stats().nodes);
    Ok(())
}

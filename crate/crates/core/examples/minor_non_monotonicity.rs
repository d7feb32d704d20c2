//! Contracting one edge of B4 gives T33, which needs more colours than B4.

use parity_colouring::graph::{make_complete_binary_tree, make_t33, tree_code};
use parity_colouring::solver::chromatic_number;

fn main() -> parity_colouring::Result<()> {
    let b4 = make_complete_binary_tree(4)?;
    let root = b4.root();
    let child = b4.children(root)[0];
    let minor = b4.to_graph().contract_edge(root, child)?;
    println!(
        "contracted root edge {root}-{child}; isomorphic to T33: {}",
        tree_code(&minor)? == tree_code(&make_t33())?
    );

    let big = chromatic_number(&b4.to_graph(), None)?.chi().unwrap();
    let small = chromatic_number(&minor, None)?.chi().unwrap();
    println!("chi(B4) = {big}, chi(T33) = {small}");
    assert!(small > big);
    Ok(())
}

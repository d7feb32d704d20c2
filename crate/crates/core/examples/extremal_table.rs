//! A(l, d): the largest binary tree with l layers containing no subdivision of B_{d+1}.

use parity_colouring::extremal::{brute_force_extremal, extremal_tree, max_complete_subdivision, ExtremalTable};

fn main() -> parity_colouring::Result<()> {
    print!("{}", ExtremalTable::new(6)?.to_tsv());

    let tree = extremal_tree(5, 2)?.expect("l > 0");
    println!(
        "extremal tree (5, 2): {} vertices, largest complete subdivision B{}",
        tree.len(),
        max_complete_subdivision(&tree)
    );
    println!("brute force over all trees with 4 layers, d = 2: {}", brute_force_extremal(4, 2, false)?);
    Ok(())
}

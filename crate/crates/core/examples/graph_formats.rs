//! Text formats for graphs, rooted trees and colourings.

use parity_colouring::constructions::colour_path;
use parity_colouring::graph::{
    graph_from_text, graph_to_text, make_complete_binary_tree, make_path, rooted_tree_from_text, rooted_tree_to_text,
    subdivide_random,
};
use parity_colouring::parity::Colouring;

fn main() -> parity_colouring::Result<()> {
    let g = make_path(4)?;
    let text = graph_to_text(&g);
    print!("{text}");
    assert_eq!(graph_from_text(&text)?, g);

    let sub = subdivide_random(&make_complete_binary_tree(2)?, 2, 1)?;
    let text = rooted_tree_to_text(&sub);
    print!("{text}");
    assert_eq!(rooted_tree_to_text(&rooted_tree_from_text(&text)?), text);

    let c = colour_path(4)?.colouring;
    print!("{}", c.to_text());
    assert_eq!(Colouring::from_text(&c.to_text())?, c);
    Ok(())
}

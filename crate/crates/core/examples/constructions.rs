//! Ruler, cycle and centroid colourings, checked by the verifiers.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use parity_colouring::constructions::{colour_cycle, colour_path, colour_tree_centroid};
use parity_colouring::graph::{make_cycle, make_path, random_tree};
use parity_colouring::parity::is_parity_vertex_colouring;

fn main() -> parity_colouring::Result<()> {
    let p = colour_path(16)?;
    println!("P16 ruler colouring: {:?}", p.colouring.colours());
    println!("  valid: {}", is_parity_vertex_colouring(&make_path(16)?, &p.colouring)?.is_valid());

    let c = colour_cycle(11)?;
    println!("C11 colouring: {:?} ({} colours)", c.colouring.colours(), c.colouring.colours_used());
    println!("  valid: {}", is_parity_vertex_colouring(&make_cycle(11)?, &c.colouring)?.is_valid());

    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for n in [10, 50, 200] {
        let t = random_tree(n, &mut rng)?;
        let c = colour_tree_centroid(&t)?;
        let valid = is_parity_vertex_colouring(&t, &c.colouring)?.is_valid();
        println!(
            "random tree n={n}: {} colours (bound {}), valid {valid}",
            c.colouring.colours_used(),
            c.claimed_bound
        );
    }
    Ok(())
}

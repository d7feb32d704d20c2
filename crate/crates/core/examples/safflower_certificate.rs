//! Lower-bound certificate for a random subdivision of B4 coloured by the solver.

use parity_colouring::graph::{make_complete_binary_tree, subdivide_random};
use parity_colouring::safflower::{depth_lower_bound, lower_bound_certificate, verify_safflower};
use parity_colouring::solver::chromatic_number;

fn main() -> parity_colouring::Result<()> {
    let d = 4;
    let sub = subdivide_random(&make_complete_binary_tree(d)?, 3, 11)?;
    let solved = chromatic_number(&sub.to_graph(), None)?;
    let colouring = solved.witness();
    println!("subdivision of B{d} with {} vertices, chi = {:?}", sub.len(), solved.chi());

    let cert = lower_bound_certificate(&sub, colouring)?;
    println!("stem colour counts a = {:?}", cert.a);
    println!("nicely coloured vertices: {} (at least {} guaranteed)", cert.num_nice, cert.guaranteed_nice());
    println!("safflower verifies: {}", verify_safflower(&sub, colouring, &cert.safflower)?);
    println!("depth bound {:.3} <= {} colours", depth_lower_bound(d)?, cert.k);
    println!("{}", serde_json::to_string_pretty(&cert.to_json()).unwrap());
    Ok(())
}

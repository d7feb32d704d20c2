//! Emits the k-colourability sentence, checks it and round-trips both syntaxes.

use parity_colouring::mso::{
    emit_parity_colourable, parse_sexpr, parse_text, render_sexpr, render_text, structural_check,
};

fn main() -> parity_colouring::Result<()> {
    let sentence = emit_parity_colourable(2)?;
    let sexpr = render_sexpr(&sentence.formula);
    println!("{sexpr}");
    println!("{}", render_text(&sentence.formula));
    assert_eq!(parse_sexpr(&sexpr)?, sentence.formula);
    assert_eq!(parse_text(&render_text(&sentence.formula))?, sentence.formula);

    for k in 1..=6 {
        let r = structural_check(&emit_parity_colourable(k)?);
        println!(
            "k={k}: {} nodes, {} exclusion clauses, {} Oddtimes, ok {}",
            r.size,
            r.exclusion_clauses,
            r.oddtimes_disjuncts,
            r.passes()
        );
    }
    Ok(())
}

//! The order-24 group generated by two mystic reflections on
//! k_{-1}[x1,x2,x3]: structure, fixed ring Hilbert series and generators.

use skew_invariants::autgroup::constructors::tau;
use skew_invariants::autgroup::FiniteGroup;
use skew_invariants::invariants::mine_generators;
use skew_invariants::series::{format_product_form, molien_fixed_hilbert, recognize_product_form};
use skew_invariants::structure::{decide_stc, minus_one_ring};
use skew_invariants::Cyc;

fn main() -> skew_invariants::Result<()> {
    let a = minus_one_ring(3, 4)?;
    let one = Cyc::one(4);
    let g = FiniteGroup::close(&[tau(&a, 0, 1, &one)?, tau(&a, 1, 2, &one)?], 3, 4, 1000)?;
    let r = decide_stc(&a, &g)?;
    println!("|G| = {}, generated by quasi-reflections: {}", g.order(), r.generated_by_qr);
    println!("{}", r.structure_string().unwrap_or_default());

    let h = molien_fixed_hilbert(&a, &g, 10)?;
    println!("fixed ring Hilbert series: {h:?}");
    let s: Vec<i64> = h.iter().map(|&x| x as i64).collect();
    if let Some(d) = recognize_product_form(&s, 3) {
        println!("= {}", format_product_form(&d));
    }
    let gens = mine_generators(&a, &g, 8)?;
    for (f, d) in gens.generators.iter().zip(&gens.degrees) {
        println!("generator of degree {d}: {}", a.fmt_poly(f));
    }
    Ok(())
}

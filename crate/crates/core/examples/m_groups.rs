//! Builds M(n, α, β) for a few parameters and prints orders, structure and
//! the explicit invariant generators.

use skew_invariants::invariants::{circle_invariant_generators, verify_generators};
use skew_invariants::rational::lcm;
use skew_invariants::structure::{make_m_group, minus_one_ring};

fn main() -> skew_invariants::Result<()> {
    for (n, alpha, beta) in [(2, 1, 2), (2, 1, 4), (3, 1, 2), (3, 1, 4), (2, 2, 4), (3, 2, 2)] {
        let order = lcm(beta as u64, 4) as u32;
        let a = minus_one_ring(n, order)?;
        let g = make_m_group(&a, alpha, beta, 10_000)?;
        let gens = circle_invariant_generators(&a, alpha, beta, 8, 10_000)?;
        let v = verify_generators(&a, &g, &gens.generators, 8)?;
        let shown: Vec<String> = gens.generators.iter().map(|f| a.fmt_poly(f)).collect();
        println!(
            "M({n},{alpha},{beta}): |G| = {}, generators [{}], deficit through 8: {}",
            g.order(),
            shown.join("; "),
            v.total_deficit()
        );
    }
    Ok(())
}

//! Element-order distributions of M(n,1,2) and G(2,2,n).

use skew_invariants::algebra::PbwPresentation;
use skew_invariants::autgroup::constructors::classical_family;
use skew_invariants::autgroup::FiniteGroup;
use skew_invariants::structure::{compare_order_distributions, make_m_group, minus_one_ring};

fn main() -> skew_invariants::Result<()> {
    for n in [3, 4] {
        let m = make_m_group(&minus_one_ring(n, 4)?, 1, 2, 10_000)?;
        let c = PbwPresentation::commutative(n, 4);
        let g = FiniteGroup::close(&classical_family(&c, 2, 2)?, n, 4, 10_000)?;
        let (dm, dg, first) = compare_order_distributions(&m, &g)?;
        println!("M({n},1,2): |G| = {}, {dm:?}", m.order());
        println!("G(2,2,{n}): |G| = {}, {dg:?}", g.order());
        match first {
            Some(k) => println!("first difference at element order {k}\n"),
            None => println!("same distribution\n"),
        }
    }
    Ok(())
}

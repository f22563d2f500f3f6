//! For an abelian group generated by quasi-reflections, compares the Hilbert
//! series of the ring with (coset series) x (fixed ring series).

use skew_invariants::algebra::PbwPresentation;
use skew_invariants::autgroup::constructors::theta;
use skew_invariants::autgroup::FiniteGroup;
use skew_invariants::invariants::free_module_check;
use skew_invariants::Cyc;

fn main() -> skew_invariants::Result<()> {
    let a = PbwPresentation::skew(2, 12, |_, _| Cyc::zeta(12, 4))?;
    let g = FiniteGroup::close(&[theta(&a, 0, &Cyc::zeta(12, 4))?, theta(&a, 1, &Cyc::from_int(12, -1))?], 2, 12, 100)?;
    let r = free_module_check(&a, &g, 10)?;
    for f in &r.factors {
        println!("{} of order {}: coset degrees {:?}", f.kind, f.order, f.degrees);
    }
    println!("coset series {:?}", r.coset_series);
    println!("fixed ring   {:?}", r.fixed_hilbert);
    println!("ring         {:?}", r.hilbert);
    println!("identity holds through degree {}: {}", r.verified_to, r.holds());
    Ok(())
}

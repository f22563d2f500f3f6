//! Dihedral reflection groups on the quantum 2x2 matrix algebra with
//! q = ζ_3, their fixed rings and the commutation rules among cubes.

use skew_invariants::algebra::PbwPresentation;
use skew_invariants::autgroup::constructors::quantum_reflection;
use skew_invariants::autgroup::FiniteGroup;
use skew_invariants::invariants::{power_relations, verify_generators};
use skew_invariants::structure::decide_stc;
use skew_invariants::Cyc;

fn main() -> skew_invariants::Result<()> {
    let q = Cyc::zeta(12, 4);
    let c = PbwPresentation::quantum_matrix(q.clone())?;
    let b = Cyc::zeta(12, 4);
    let g = FiniteGroup::close(&[quantum_reflection(&c, &Cyc::one(12))?, quantum_reflection(&c, &b)?], 4, 12, 100)?;
    println!("{}", decide_stc(&c, &g)?.structure_string().unwrap_or_default());

    let top = c.pow(&c.var(1), 3)?.add(&c.pow(&c.var(2), 3)?.scale(&b.pow(3)?));
    let gens = [c.var(0), c.var(3), c.mul(&c.var(1), &c.var(2))?, top];
    let v = verify_generators(&c, &g, &gens, 7)?;
    for ((f, d), e) in v.generators.iter().zip(&v.degrees).zip(&v.essential) {
        println!("degree {d}: {} {}", c.fmt_poly(f), if *e { "" } else { "(redundant)" });
    }
    println!("deficit through degree 7: {}", v.total_deficit());

    for r in power_relations(&c, &q, 3)? {
        println!("{}·{} = {}·{}·{}: {}", r.left, r.right, r.expected, r.right, r.left, r.holds());
    }
    Ok(())
}

//! Splits the variables of a skew ring into blocks and circles for a group
//! containing both a mystic reflection and a reflection.

use skew_invariants::algebra::PbwPresentation;
use skew_invariants::autgroup::constructors::{tau, theta};
use skew_invariants::autgroup::FiniteGroup;
use skew_invariants::structure::{block_circle_decomposition, decide_stc, PartKind};
use skew_invariants::Cyc;

fn main() -> skew_invariants::Result<()> {
    let q = Cyc::zeta(12, 4);
    let a = PbwPresentation::skew(4, 12, |i, j| {
        if (i, j) == (0, 1) {
            Cyc::from_int(12, -1)
        } else if (i, j) == (2, 3) {
            Cyc::one(12)
        } else {
            q.clone()
        }
    })?;
    let gens = [tau(&a, 0, 1, &Cyc::one(12))?, theta(&a, 2, &Cyc::from_int(12, -1))?, theta(&a, 3, &Cyc::zeta(12, 4))?];
    let g = FiniteGroup::close(&gens, 4, 12, 1000)?;
    let d = block_circle_decomposition(&a, &g)?;
    for p in &d.parts {
        let kind = if p.kind == PartKind::Circle { "circle" } else { "block" };
        let idx: Vec<String> = p.indices.iter().map(|i| format!("x{}", i + 1)).collect();
        println!("{kind} {{{}}}: subgroup of order {}, params {:?}", idx.join(","), p.group.order(), p.circle_params);
    }
    println!("{}", decide_stc(&a, &g)?.structure_string().unwrap_or_default());
    Ok(())
}

//! Twisting a skew ring: the singleton twist makes every pair commute, and
//! the block-circle twist keeps only the signs inside a circle.

use skew_invariants::algebra::{PartitionTwist, PbwPresentation};
use skew_invariants::Cyc;

fn main() -> skew_invariants::Result<()> {
    let a = PbwPresentation::skew(3, 24, |i, j| Cyc::zeta(24, 2 * (i + 2 * j) as i64))?;
    let full = PartitionTwist::canonical(&a, vec![vec![0], vec![1], vec![2]])?;
    for (s, t) in [(0, 1), (0, 2), (1, 2)] {
        let l = full.multiply(&a, &a.var(s), &a.var(t))?;
        let r = full.multiply(&a, &a.var(t), &a.var(s))?;
        println!("x{} * x{} = {}, x{} * x{} = {}", s + 1, t + 1, a.fmt_poly(&l), t + 1, s + 1, a.fmt_poly(&r));
    }

    let b = PbwPresentation::skew(3, 12, |i, j| if (i, j) == (0, 1) { Cyc::from_int(12, -1) } else { Cyc::zeta(12, 4) })?;
    let part = PartitionTwist::canonical(&b, vec![vec![0, 1], vec![2]])?;
    println!("twisted parameters: {:?}", part.twisted_params(&b)?.iter().map(|r| r.iter().map(|c| c.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>());
    Ok(())
}

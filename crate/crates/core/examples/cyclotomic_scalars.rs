//! Exact arithmetic in cyclotomic fields: roots of unity, inverses, square
//! roots and lifting between fields.

use skew_invariants::Cyc;

fn main() -> skew_invariants::Result<()> {
    let z = Cyc::zeta(12, 1);
    println!("ζ12 = {z}, order {:?}", z.root_order());
    println!("ζ12^6 = {}", z.pow(6)?);
    println!("1/(1 + ζ12) = {}", (&Cyc::one(12) + &z).inv()?);

    let q = Cyc::zeta(3, 1);
    let s = q.sqrt_root()?;
    println!("sqrt(ζ3) = {s} in Q(ζ{})", s.order());
    println!("its square = {}, ζ3 lifted = {}", &s * &s, q.lift(s.order())?);

    match Cyc::zeta(12, 1).sqrt_root_in_field()? {
        Some(r) => println!("ζ12 has a square root in its own field: {r}"),
        None => println!("ζ12 has no square root in Q(ζ12)"),
    }
    Ok(())
}

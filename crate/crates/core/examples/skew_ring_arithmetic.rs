//! Multiplication in a skew polynomial ring and in the quantum 2x2 matrix
//! algebra, with normal elements of degree 1.

use skew_invariants::algebra::PbwPresentation;
use skew_invariants::Cyc;

fn main() -> skew_invariants::Result<()> {
    let q = Cyc::zeta(3, 1);
    let a = PbwPresentation::skew(3, 3, |i, j| if (i, j) == (0, 1) { q.clone() } else { Cyc::from_int(3, -1) })?;
    let (x1, x2, x3) = (a.var(0), a.var(1), a.var(2));
    println!("x2·x1 = {}", a.fmt_poly(&a.mul(&x2, &x1)?));
    println!("x3·x2·x1 = {}", a.fmt_poly(&a.mul(&a.mul(&x3, &x2)?, &x1)?));
    println!("(x1 + x2)^3 = {}", a.fmt_poly(&a.pow(&x1.add(&x2), 3)?));
    println!("is x1 + x2 normal? {}", a.is_normal_deg1(&x1.add(&x2))?);

    let c = PbwPresentation::quantum_matrix(Cyc::zeta(12, 4))?;
    let x11 = c.var(0);
    let x22 = c.var(3);
    println!("in O_q(M_2): x22·x11 = {}", c.fmt_poly(&c.mul(&x22, &x11)?));
    println!("x12 normal? {}", c.is_normal_deg1(&c.var(1))?);
    println!("x11 normal? {}", c.is_normal_deg1(&x11)?);
    Ok(())
}

//! Classifies a few automorphisms of k_{-1}[x1,x2,x3]: a reflection, a mystic
//! reflection, and two maps that are neither.

use skew_invariants::autgroup::constructors::{tau, theta};
use skew_invariants::autgroup::GradedMap;
use skew_invariants::series::trace_series;
use skew_invariants::structure::{classify, minus_one_ring, QRClass};
use skew_invariants::Cyc;

fn main() -> skew_invariants::Result<()> {
    let a = minus_one_ring(3, 4)?;
    let one = Cyc::one(4);
    let m = Cyc::from_int(4, -1);
    let maps = [
        ("θ_{1,i}", theta(&a, 0, &Cyc::zeta(4, 1))?),
        ("τ_{1,2,1}", tau(&a, 0, 1, &one)?),
        ("-I", GradedMap::diagonal(&[m.clone(), m.clone(), m.clone()])?.validate(&a)?),
        ("swap x1, x2", GradedMap::monomial(&[1, 0, 2], &[one.clone(), one.clone(), one.clone()])?.validate(&a)?),
    ];
    for (name, g) in &maps {
        let ts = trace_series(&a, g, 6)?;
        let coeffs: Vec<String> = ts.coeffs.iter().map(|c| c.to_string()).collect();
        println!("{name}: trace series {}", coeffs.join(", "));
        match classify(&a, g)? {
            QRClass::Reflection { lambda, eigenvector, .. } => {
                println!("  reflection, λ = {lambda}, eigenvector {}", a.fmt_poly(&eigenvector))
            }
            QRClass::Mystic { anticommuting: (y, z), .. } => {
                println!("  mystic reflection, anticommuting pair {} and {}", a.fmt_poly(&y), a.fmt_poly(&z))
            }
            QRClass::NotQR { eigenvalues } => {
                let ev: Vec<String> = eigenvalues.unwrap_or_default().iter().map(|c| c.to_string()).collect();
                println!("  not a quasi-reflection, eigenvalues {}", ev.join(", "))
            }
        }
    }
    Ok(())
}

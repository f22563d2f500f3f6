//! Commutation relations among the powers `X_ij = x_ij^n` in `O_q(M_2)`.

use serde::Serialize;

use crate::algebra::{NCPoly, PbwPresentation, PresentationKind};
use crate::cyclotomic::Cyc;
use crate::error::{Error, Result};

#[derive(Clone, Debug, Serialize)]
pub struct PowerRelation {
    /// `X_left X_right = expected · X_right X_left`, names like `"X12"`.
    pub left: String,
    pub right: String,
    pub expected: Cyc,
    /// The scalar `c` with `X_left X_right = c X_right X_left`, if any.
    pub found: Option<Cyc>,
}

impl PowerRelation {
    pub fn holds(&self) -> bool {
        self.found.as_ref() == Some(&self.expected)
    }
}

/// `c` with `f = c·g`, when one exists.
pub fn proportionality(f: &NCPoly, g: &NCPoly) -> Option<Cyc> {
    let (m, c) = g.leading()?;
    let r = &f.coeff(m) * &c.inv().ok()?;
    (*f == g.scale(&r)).then_some(r)
}

/// The six relations `X12X11 = q^{n²}X11X12`, `X21X11 = q^{n²}X11X21`,
/// `X22X12 = q^{n²}X12X22`, `X22X21 = q^{n²}X21X22`, `X21X12 = X12X21`,
/// `X22X11 = X11X22`, each checked by multiplying out.
pub fn power_relations(c: &PbwPresentation, q: &Cyc, n: usize) -> Result<Vec<PowerRelation>> {
    if c.kind() != PresentationKind::QuantumMatrix {
        return Err(Error::invalid("power relations are defined on O_q(M_2) only"));
    }
    let x: Vec<NCPoly> = (0..4).map(|i| c.pow(&c.var(i), n)).collect::<Result<_>>()?;
    let names = ["X11", "X12", "X21", "X22"];
    let qn = q.pow((n * n) as i64)?;
    let one = Cyc::one(c.order());
    let table = [(1, 0, &qn), (2, 0, &qn), (3, 1, &qn), (3, 2, &qn), (2, 1, &one), (3, 0, &one)];
    table
        .iter()
        .map(|&(l, r, e)| {
            let lr = c.mul(&x[l], &x[r])?;
            let rl = c.mul(&x[r], &x[l])?;
            Ok(PowerRelation {
                left: names[l].into(),
                right: names[r].into(),
                expected: e.clone(),
                found: proportionality(&lr, &rl),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cube_roots() {
        let q = Cyc::zeta(12, 4);
        let c = PbwPresentation::quantum_matrix(q.clone()).unwrap();
        let rels = power_relations(&c, &q, 3).unwrap();
        assert_eq!(rels.len(), 6);
        assert!(rels.iter().all(PowerRelation::holds), "{rels:?}");
    }
}

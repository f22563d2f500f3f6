//! Deciding whether a group is generated by quasi-reflections, with the
//! resulting structure description.

use std::collections::BTreeMap;

use super::classify::{classify, QRClass};
use super::decomposition::{block_circle_decomposition_with, BlockCircleDecomp, PartKind};
use crate::algebra::{PbwPresentation, PresentationKind};
use crate::autgroup::constructors::classical_family;
use crate::autgroup::order::find_dihedral_pair;
use crate::autgroup::{FiniteGroup, GradedMap};
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct StcReport {
    pub group_order: usize,
    /// Classification of every element, in group order.
    pub classes: Vec<QRClass>,
    /// Subgroup generated by all quasi-reflections.
    pub qr_subgroup: FiniteGroup,
    pub generated_by_qr: bool,
    pub decomposition: Option<BlockCircleDecomp>,
    /// Per-part names, e.g. `["M(3,1,2)"]`.
    pub structure: Option<Vec<String>>,
    /// Whether the fixed ring has finite global dimension, when decided.
    pub finite_global_dimension: Option<bool>,
}

impl StcReport {
    pub fn reflections(&self) -> usize {
        self.classes.iter().filter(|c| c.is_reflection()).count()
    }

    pub fn mystic_reflections(&self) -> usize {
        self.classes.iter().filter(|c| c.is_mystic()).count()
    }

    /// `"G ≅ M(3,1,2)"`, or `None` when no structure was derived.
    pub fn structure_string(&self) -> Option<String> {
        let parts = self.structure.as_ref()?;
        Some(if parts.is_empty() {
            "G ≅ 1".to_string()
        } else {
            format!("G ≅ {}", parts.join(" × "))
        })
    }
}

/// `G(m, p, r)` with the same order and order distribution, searched over
/// `m` dividing the field order.
fn match_classical(gv: &FiniteGroup, r: usize) -> Result<Option<(u32, u32)>> {
    if r > 4 {
        return Ok(None);
    }
    let order = gv.field_order();
    let target = gv.order_distribution(gv.order())?;
    let fact: usize = (1..=r).product();
    for m in 1..=order {
        if !order.is_multiple_of(m) {
            continue;
        }
        for p in (1..=m).filter(|p| m % p == 0) {
            let size = (m as usize).pow(r as u32) * fact / p as usize;
            if size != gv.order() {
                continue;
            }
            let c = PbwPresentation::commutative(r, order);
            let gens = classical_family(&c, m, p)?;
            let h = FiniteGroup::close(&gens, r, order, size)?;
            if h.order_distribution(size)? == target {
                return Ok(Some((m, p)));
            }
        }
    }
    Ok(None)
}

fn block_name(gv: &FiniteGroup, r: usize) -> Result<String> {
    if r == 1 {
        return Ok(format!("C_{}", gv.order()));
    }
    Ok(match match_classical(gv, r)? {
        Some((m, p)) => format!("G({m},{p},{r})"),
        None => format!("reflection group of rank {r} and order {}", gv.order()),
    })
}

pub fn decide_stc(a: &PbwPresentation, g: &FiniteGroup) -> Result<StcReport> {
    let classes = g
        .elements()
        .iter()
        .map(|h| classify(a, h))
        .collect::<Result<Vec<_>>>()?;
    let qr: Vec<GradedMap> = g
        .elements()
        .iter()
        .zip(&classes)
        .filter(|(_, c)| c.is_qr())
        .map(|(h, _)| h.clone())
        .collect();
    let r = g.subgroup_from(&qr)?;
    if !g.normalizes(&r) {
        return Err(Error::internal("the quasi-reflection subgroup is not normal"));
    }
    let generated_by_qr = r.order() == g.order();
    let mut report = StcReport {
        group_order: g.order(),
        classes,
        qr_subgroup: r,
        generated_by_qr,
        decomposition: None,
        structure: None,
        finite_global_dimension: None,
    };
    match a.kind() {
        _ if a.is_skew() => {
            let d = block_circle_decomposition_with(a, g, &report.classes)?;
            report.finite_global_dimension = Some(generated_by_qr);
            if generated_by_qr {
                let mut names = Vec::new();
                for part in &d.parts {
                    if part.group.order() == 1 {
                        continue;
                    }
                    names.push(match (part.kind, part.circle_params) {
                        (PartKind::Circle, Some((al, be))) => {
                            format!("M({},{al},{be})", part.indices.len())
                        }
                        _ => block_name(&part.group, part.indices.len())?,
                    });
                }
                report.structure = Some(names);
            }
            report.decomposition = Some(d);
        }
        PresentationKind::QuantumMatrix if generated_by_qr => {
            report.finite_global_dimension = Some(true);
            let n = g.order();
            report.structure = Some(match n {
                1 => vec![],
                2 => vec!["C_2".into()],
                _ if n.is_multiple_of(2) && find_dihedral_pair(g, n / 2).is_some() => {
                    vec![format!("D_{} (dihedral of order {n})", n / 2)]
                }
                _ => vec![format!("group of order {n}")],
            });
        }
        _ => {}
    }
    Ok(report)
}

/// Element orders of two groups side by side, with the first order whose
/// counts differ.
pub fn compare_order_distributions(
    g: &FiniteGroup,
    h: &FiniteGroup,
) -> Result<(BTreeMap<usize, usize>, BTreeMap<usize, usize>, Option<usize>)> {
    let a = g.order_distribution(g.order())?;
    let b = h.order_distribution(h.order())?;
    let keys: std::collections::BTreeSet<usize> = a.keys().chain(b.keys()).copied().collect();
    let first = keys.into_iter().find(|k| a.get(k) != b.get(k));
    Ok((a, b, first))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::autgroup::constructors::{quantum_reflection, tau};
    use crate::cyclotomic::Cyc;
    use crate::structure::mgroup::{make_m_group, minus_one_ring};

    #[test]
    fn example_group_is_m312() {
        let a = minus_one_ring(3, 4).unwrap();
        let one = Cyc::one(4);
        let gens = [tau(&a, 0, 1, &one).unwrap(), tau(&a, 1, 2, &one).unwrap()];
        let g = FiniteGroup::close(&gens, 3, 4, 1000).unwrap();
        let r = decide_stc(&a, &g).unwrap();
        assert!(r.generated_by_qr);
        assert_eq!(r.structure_string().unwrap(), "G ≅ M(3,1,2)");
        assert_eq!(r.reflections(), 0);
    }

    #[test]
    fn minus_identity() {
        let a = minus_one_ring(2, 4).unwrap();
        let m = Cyc::from_int(4, -1);
        let neg = GradedMap::diagonal(&[m.clone(), m]).unwrap().validate(&a).unwrap();
        let g = FiniteGroup::close(&[neg], 2, 4, 10).unwrap();
        let r = decide_stc(&a, &g).unwrap();
        assert!(!r.generated_by_qr);
        assert_eq!(r.qr_subgroup.order(), 1);
        assert_eq!(r.finite_global_dimension, Some(false));
    }

    #[test]
    fn classical_block() {
        let a = PbwPresentation::commutative(3, 4);
        let g = FiniteGroup::close(&classical_family(&a, 2, 1).unwrap(), 3, 4, 1000).unwrap();
        let r = decide_stc(&a, &g).unwrap();
        assert_eq!(r.structure_string().unwrap(), "G ≅ G(2,1,3)");
    }

    #[test]
    fn quantum_matrix_reflection_group() {
        let c = PbwPresentation::quantum_matrix(Cyc::zeta(12, 4)).unwrap();
        let g1 = quantum_reflection(&c, &Cyc::one(12)).unwrap();
        let gb = quantum_reflection(&c, &Cyc::zeta(12, 3)).unwrap();
        let g = FiniteGroup::close(&[g1, gb], 4, 12, 1000).unwrap();
        let r = decide_stc(&c, &g).unwrap();
        assert!(r.generated_by_qr);
        assert_eq!(g.order(), 8);
        assert!(r.structure_string().unwrap().starts_with("G ≅ D_4"));
    }

    #[test]
    fn distributions() {
        let a = minus_one_ring(3, 4).unwrap();
        let m = make_m_group(&a, 1, 2, 1000).unwrap();
        let c = PbwPresentation::commutative(3, 4);
        let g = FiniteGroup::close(&classical_family(&c, 2, 2).unwrap(), 3, 4, 1000).unwrap();
        let (x, y, first) = compare_order_distributions(&m, &g).unwrap();
        assert_eq!(x, y);
        assert_eq!(first, None);
    }
}

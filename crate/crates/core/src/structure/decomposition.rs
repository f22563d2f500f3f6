//! Block-circle decomposition of a group acting on a skew polynomial ring.

use super::blocks::{block_decomposition, is_p_partition};
use super::classify::{classify, standard_tau, QRClass};
use crate::algebra::PbwPresentation;
use crate::autgroup::{FiniteGroup, GradedMap};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PartKind {
    Block,
    Circle,
}

#[derive(Clone, Debug)]
pub struct DecompPart {
    pub indices: Vec<usize>,
    pub kind: PartKind,
    /// Elements of `G` acting only on this part.
    pub group: FiniteGroup,
    /// `(α, β)` for circles of a group generated by quasi-reflections.
    pub circle_params: Option<(usize, usize)>,
}

#[derive(Clone, Debug)]
pub struct BlockCircleDecomp {
    pub parts: Vec<DecompPart>,
    pub generated_by_qr: bool,
}

impl BlockCircleDecomp {
    pub fn partition(&self) -> Vec<Vec<usize>> {
        self.parts.iter().map(|p| p.indices.clone()).collect()
    }

    pub fn circles(&self) -> impl Iterator<Item = &DecompPart> {
        self.parts.iter().filter(|p| p.kind == PartKind::Circle)
    }
}

/// Whether `g` fixes every `x_j` outside `part` and maps the span of the
/// part into itself.
pub fn acts_only_on(g: &GradedMap, part: &[usize]) -> bool {
    let n = g.n();
    let inside: Vec<bool> = (0..n).map(|i| part.contains(&i)).collect();
    (0..n).all(|j| {
        (0..n).all(|i| {
            let c = g.entry(i, j);
            if inside[j] {
                inside[i] || c.is_zero()
            } else if i == j {
                c.is_one()
            } else {
                c.is_zero()
            }
        })
    })
}

/// `G_v = G ∩ Aut_v(A)`.
pub fn part_subgroup(g: &FiniteGroup, part: &[usize]) -> Result<FiniteGroup> {
    let members: Vec<GradedMap> = g
        .elements()
        .iter()
        .filter(|h| acts_only_on(h, part))
        .cloned()
        .collect();
    g.subgroup_from(&members)
}

fn find(parent: &mut [usize], i: usize) -> usize {
    let mut r = i;
    while parent[r] != r {
        r = parent[r];
    }
    parent[i] = r;
    r
}

pub fn block_circle_decomposition(a: &PbwPresentation, g: &FiniteGroup) -> Result<BlockCircleDecomp> {
    let classes = g
        .elements()
        .iter()
        .map(|h| classify(a, h))
        .collect::<Result<Vec<_>>>()?;
    block_circle_decomposition_with(a, g, &classes)
}

/// Same as [`block_circle_decomposition`] with precomputed classifications,
/// one per element of `g`.
pub fn block_circle_decomposition_with(
    a: &PbwPresentation,
    g: &FiniteGroup,
    classes: &[QRClass],
) -> Result<BlockCircleDecomp> {
    if !a.is_skew() {
        return Err(Error::invalid(
            "the block-circle decomposition is defined only for skew polynomial rings",
        ));
    }
    let n = a.nvars();
    let mut parent: Vec<usize> = (0..n).collect();
    let mut in_circle = vec![false; n];
    for (h, class) in g.elements().iter().zip(classes) {
        let QRClass::Mystic { pair, .. } = class else {
            continue;
        };
        let Some((s, t, _)) = pair else {
            return Err(Error::internal(format!(
                "mystic reflection {} is not a standard τ in the coordinate basis",
                h.fmt_rows()
            )));
        };
        in_circle[*s] = true;
        in_circle[*t] = true;
        let (rs, rt) = (find(&mut parent, *s), find(&mut parent, *t));
        let (lo, hi) = (rs.min(rt), rs.max(rt));
        parent[hi] = lo;
    }
    let blocks = block_decomposition(a)?;
    let mut raw: Vec<(Vec<usize>, PartKind)> = Vec::new();
    for i in 0..n {
        if in_circle[i] && find(&mut parent, i) == i {
            let circle: Vec<usize> = (0..n).filter(|&k| in_circle[k] && find(&mut parent, k) == i).collect();
            raw.push((circle, PartKind::Circle));
        }
    }
    for b in blocks {
        if b.iter().any(|i| in_circle[*i]) {
            if b.len() != 1 {
                return Err(Error::internal(format!(
                    "circle index x{} lies in a block of size {}",
                    b[0] + 1,
                    b.len()
                )));
            }
            continue;
        }
        raw.push((b, PartKind::Block));
    }
    raw.sort_by_key(|(p, _)| p[0]);
    let partition: Vec<Vec<usize>> = raw.iter().map(|(p, _)| p.clone()).collect();
    if !is_p_partition(a, &partition) {
        return Err(Error::internal("block-circle decomposition is not a p-partition"));
    }

    let qr: Vec<GradedMap> = g
        .elements()
        .iter()
        .zip(classes)
        .filter(|(_, c)| c.is_qr())
        .map(|(h, _)| h.clone())
        .collect();
    let generated_by_qr = g.subgroup_from(&qr)?.order() == g.order();

    let mut parts = Vec::new();
    let mut product = 1usize;
    for (indices, kind) in raw {
        let group = part_subgroup(g, &indices)?;
        product *= group.order();
        let circle_params = if kind == PartKind::Circle && generated_by_qr {
            Some(circle_parameters(&group, &indices)?)
        } else {
            None
        };
        parts.push(DecompPart {
            indices,
            kind,
            group,
            circle_params,
        });
    }
    if generated_by_qr && product != g.order() {
        return Err(Error::internal(format!(
            "|G| = {} but the part subgroups have orders multiplying to {product}",
            g.order()
        )));
    }
    Ok(BlockCircleDecomp {
        parts,
        generated_by_qr,
    })
}

/// `α = |{λ : θ_{i,λ} ∈ G_v} ∪ {1}|` and `β = |{λ : τ_{i,j,λ} ∈ G_v}|`,
/// checked to be the same for every choice of `i < j` in the circle.
pub fn circle_parameters(gv: &FiniteGroup, circle: &[usize]) -> Result<(usize, usize)> {
    if circle.len() < 2 {
        return Err(Error::invalid("a circle has at least two indices"));
    }
    let n = gv.n();
    let theta_count = |i: usize| {
        gv.elements()
            .iter()
            .filter(|h| h.is_diagonal() && (0..n).all(|j| j == i || h.entry(j, j).is_one()))
            .count()
    };
    let tau_count = |i: usize, j: usize| {
        gv.elements()
            .iter()
            .filter(|h| matches!(standard_tau(h), Some((s, t, _)) if (s, t) == (i, j)))
            .count()
    };
    let alpha = theta_count(circle[0]);
    if let Some(i) = circle.iter().find(|&&i| theta_count(i) != alpha) {
        return Err(Error::internal(format!(
            "|Θ_{}| = {} differs from |Θ_{}| = {alpha}",
            i + 1,
            theta_count(*i),
            circle[0] + 1
        )));
    }
    let beta = tau_count(circle[0], circle[1]);
    for (k, &i) in circle.iter().enumerate() {
        for &j in &circle[k + 1..] {
            let b = tau_count(i, j);
            if b != beta {
                return Err(Error::internal(format!(
                    "|T_{{{},{}}}| = {b} differs from |T_{{{},{}}}| = {beta}",
                    i + 1,
                    j + 1,
                    circle[0] + 1,
                    circle[1] + 1
                )));
            }
        }
    }
    if beta == 0 || beta % alpha != 0 || beta % 2 != 0 {
        return Err(Error::internal(format!(
            "circle parameters (α, β) = ({alpha}, {beta}) violate α | β and 2 | β"
        )));
    }
    Ok((alpha, beta))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::autgroup::constructors::{tau, theta};
    use crate::cyclotomic::Cyc;

    #[test]
    fn circle_plus_block() {
        let q = Cyc::zeta(12, 2);
        let a = PbwPresentation::skew(3, 12, |i, j| {
            if (i, j) == (0, 1) { Cyc::from_int(12, -1) } else { q.clone() }
        })
        .unwrap();
        let m1 = Cyc::from_int(12, -1);
        let gens = [tau(&a, 0, 1, &Cyc::one(12)).unwrap(), theta(&a, 2, &m1).unwrap()];
        let g = FiniteGroup::close(&gens, 3, 12, 1000).unwrap();
        let d = block_circle_decomposition(&a, &g).unwrap();
        assert_eq!(d.partition(), vec![vec![0, 1], vec![2]]);
        assert_eq!(d.parts[0].kind, PartKind::Circle);
        assert_eq!(d.parts[1].kind, PartKind::Block);
        assert_eq!(d.parts[0].group.order() * d.parts[1].group.order(), g.order());
        assert_eq!(d.parts[0].circle_params, Some((1, 2)));
    }

    #[test]
    fn commutative_block() {
        let a = PbwPresentation::commutative(2, 4);
        let g = FiniteGroup::close(&[theta(&a, 0, &Cyc::from_int(4, -1)).unwrap()], 2, 4, 10).unwrap();
        let d = block_circle_decomposition(&a, &g).unwrap();
        assert_eq!(d.partition(), vec![vec![0, 1]]);
        assert_eq!(d.parts[0].kind, PartKind::Block);
    }

    #[test]
    fn alpha_two() {
        let a = PbwPresentation::skew_uniform(2, Cyc::from_int(4, -1)).unwrap();
        let gens = [
            tau(&a, 0, 1, &Cyc::one(4)).unwrap(),
            theta(&a, 0, &Cyc::from_int(4, -1)).unwrap(),
        ];
        let g = FiniteGroup::close(&gens, 2, 4, 100).unwrap();
        assert_eq!(circle_parameters(&g, &[0, 1]).unwrap(), (2, 2));
    }
}

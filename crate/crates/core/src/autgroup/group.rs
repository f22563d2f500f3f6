use std::collections::{BTreeMap, HashMap, VecDeque};

use super::map::GradedMap;
use crate::error::{Error, Result};

pub const DEFAULT_GROUP_CAP: usize = 10_000;

/// Explicitly enumerated finite group of graded maps.
///
/// Elements are stored in breadth-first discovery order starting from the
/// identity, extending words on the right by one generator at a time.
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    elements: Vec<GradedMap>,
    index: HashMap<GradedMap, usize>,
    generators: Vec<usize>,
    words: Vec<Vec<usize>>,
}

impl FiniteGroup {
    /// Closure of `gens` under composition. An empty list gives the trivial
    /// group, which needs `n` and the field order.
    pub fn close(gens: &[GradedMap], n: usize, order: u32, cap: usize) -> Result<Self> {
        if cap == 0 {
            return Err(Error::invalid("group order cap must be at least 1"));
        }
        for g in gens {
            if g.n() != n || g.order() != order {
                return Err(Error::invalid("generators act on different spaces"));
            }
            if !g.is_validated() {
                return Err(Error::invalid("generators must be validated automorphisms"));
            }
        }
        let id = GradedMap::identity(n, order);
        let mut elements = vec![id.clone()];
        let mut index = HashMap::from([(id, 0usize)]);
        let mut words: Vec<Vec<usize>> = vec![vec![]];
        let mut queue = VecDeque::from([0usize]);
        while let Some(e) = queue.pop_front() {
            for (k, g) in gens.iter().enumerate() {
                let h = elements[e].compose(g);
                if index.contains_key(&h) {
                    continue;
                }
                if elements.len() >= cap {
                    return Err(Error::CapExceeded(cap));
                }
                let mut w = words[e].clone();
                w.push(k);
                index.insert(h.clone(), elements.len());
                queue.push_back(elements.len());
                elements.push(h);
                words.push(w);
            }
        }
        let generators = gens.iter().map(|g| index[g]).collect();
        Ok(FiniteGroup {
            elements,
            index,
            generators,
            words,
        })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[GradedMap] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &GradedMap {
        &self.elements[i]
    }

    pub fn generator_indices(&self) -> &[usize] {
        &self.generators
    }

    pub fn generators(&self) -> Vec<&GradedMap> {
        self.generators.iter().map(|&i| &self.elements[i]).collect()
    }

    /// Word in generator positions producing element `i`.
    pub fn word(&self, i: usize) -> &[usize] {
        &self.words[i]
    }

    pub fn n(&self) -> usize {
        self.elements[0].n()
    }

    pub fn field_order(&self) -> u32 {
        self.elements[0].order()
    }

    pub fn index_of(&self, g: &GradedMap) -> Option<usize> {
        self.index.get(g).copied()
    }

    pub fn contains(&self, g: &GradedMap) -> bool {
        self.index.contains_key(g)
    }

    pub fn is_abelian(&self) -> bool {
        let gens = self.generators();
        gens.iter()
            .all(|a| gens.iter().all(|b| a.compose(b) == b.compose(a)))
    }

    /// Whether `sub` is normalized by every generator of `self`.
    pub fn normalizes(&self, sub: &FiniteGroup) -> bool {
        self.generators().iter().all(|g| {
            sub.generators()
                .iter()
                .all(|r| sub.contains(&r.conjugate_by(g)))
        })
    }

    /// Subgroup generated by the given elements.
    pub fn subgroup(&self, gens: &[GradedMap]) -> Result<FiniteGroup> {
        FiniteGroup::close(gens, self.n(), self.field_order(), self.order().max(1))
    }

    /// Subgroup generated by the selected elements, with a greedy minimal
    /// generating list (each generator enlarges the group).
    pub fn subgroup_from(&self, candidates: &[GradedMap]) -> Result<FiniteGroup> {
        let mut chosen: Vec<GradedMap> = Vec::new();
        let mut current = self.subgroup(&[])?;
        for c in candidates {
            if current.contains(c) {
                continue;
            }
            chosen.push(c.clone());
            current = self.subgroup(&chosen)?;
        }
        Ok(current)
    }

    /// Number of elements of each order.
    pub fn order_distribution(&self, cap: usize) -> Result<BTreeMap<usize, usize>> {
        let mut dist = BTreeMap::new();
        for g in &self.elements {
            *dist.entry(super::order::element_order(g, cap)?).or_insert(0) += 1;
        }
        Ok(dist)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::PbwPresentation;
    use crate::cyclotomic::Cyc;

    #[test]
    fn trivial_and_cap() {
        let g = FiniteGroup::close(&[], 2, 4, 10).unwrap();
        assert_eq!(g.order(), 1);
        let a = PbwPresentation::commutative(1, 12);
        let r = GradedMap::diagonal(&[Cyc::zeta(12, 1)]).unwrap().validate(&a).unwrap();
        assert_eq!(FiniteGroup::close(std::slice::from_ref(&r), 1, 12, 100).unwrap().order(), 12);
        assert_eq!(
            FiniteGroup::close(&[r], 1, 12, 5).unwrap_err(),
            Error::CapExceeded(5)
        );
    }
}

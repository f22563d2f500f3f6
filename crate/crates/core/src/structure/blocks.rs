use crate::algebra::PbwPresentation;
use crate::error::{Error, Result};

/// Partition of `0..n` into blocks `B(i) = {i' : p_ij = p_i'j for all j}`,
/// parts ordered by smallest element.
pub fn block_decomposition(a: &PbwPresentation) -> Result<Vec<Vec<usize>>> {
    if !a.is_skew() {
        return Err(Error::invalid("blocks are defined only for skew polynomial rings"));
    }
    let n = a.nvars();
    let mut parts: Vec<Vec<usize>> = Vec::new();
    let mut assigned = vec![false; n];
    for i in 0..n {
        if assigned[i] {
            continue;
        }
        let part: Vec<usize> = (i..n)
            .filter(|&k| !assigned[k] && (0..n).all(|j| a.param(i, j) == a.param(k, j)))
            .collect();
        for &k in &part {
            assigned[k] = true;
        }
        parts.push(part);
    }
    Ok(parts)
}

/// Whether `parts` is a p-partition: indices sharing a part have equal
/// parameters against every index outside it.
pub fn is_p_partition(a: &PbwPresentation, parts: &[Vec<usize>]) -> bool {
    let n = a.nvars();
    let mut seen = vec![false; n];
    for part in parts {
        for &i in part {
            if i >= n || seen[i] {
                return false;
            }
            seen[i] = true;
        }
    }
    if seen.iter().any(|s| !s) {
        return false;
    }
    parts.iter().all(|part| {
        part.iter().all(|&i| {
            part.iter().all(|&k| {
                (0..n)
                    .filter(|j| !part.contains(j))
                    .all(|j| a.param(i, j) == a.param(k, j))
            })
        })
    })
}

/// Index of the part containing each variable.
pub fn part_of(parts: &[Vec<usize>], n: usize) -> Vec<usize> {
    let mut out = vec![usize::MAX; n];
    for (w, part) in parts.iter().enumerate() {
        for &i in part {
            out[i] = w;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomic::Cyc;

    #[test]
    fn examples() {
        let q = Cyc::zeta(3, 1);
        let a = PbwPresentation::skew(3, 3, |i, j| {
            if (i, j) == (0, 1) {
                Cyc::one(3)
            } else {
                q.clone()
            }
        })
        .unwrap();
        assert_eq!(block_decomposition(&a).unwrap(), vec![vec![0, 1], vec![2]]);
        let m = PbwPresentation::skew_uniform(3, Cyc::from_int(4, -1)).unwrap();
        assert_eq!(block_decomposition(&m).unwrap().len(), 3);
        let c = PbwPresentation::commutative(3, 1);
        assert_eq!(block_decomposition(&c).unwrap(), vec![vec![0, 1, 2]]);
        assert!(is_p_partition(&m, &[vec![0, 1, 2]]));
        assert!(is_p_partition(&a, &[vec![0, 1], vec![2]]));
        assert!(!is_p_partition(&a, &[vec![0, 2], vec![1]]));
    }
}

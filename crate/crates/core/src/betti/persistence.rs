use std::collections::HashMap;

use super::complex::{FilteredComplex, Simplex};

/// Birth-death interval of a degree-1 homology class along the filtration;
/// `death` is infinite for classes alive at the end.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PersistencePair {
    pub dimension: usize,
    pub birth: f64,
    pub death: f64,
}

/// Standard boundary-matrix column reduction over the two-element field,
/// restricted to degree 1: pairs are (positive edge, killing triangle).
/// Zero-persistence pairs (birth equal to death) are omitted; unpaired
/// positive edges die at infinity.
pub fn h1_persistence(complex: &FilteredComplex) -> Vec<PersistencePair> {
    let m = complex.simplices.len();
    let position: HashMap<Simplex, usize> = complex
        .simplices
        .iter()
        .enumerate()
        .map(|(i, (s, _))| (*s, i))
        .collect();

    // pivot row -> column that owns it, plus that column's reduced support.
    let mut owner: Vec<Option<usize>> = vec![None; m];
    let mut reduced: HashMap<usize, Vec<usize>> = HashMap::new();
    let mut positive_edge = vec![false; m];
    let mut pairs = Vec::new();

    for (j, (simplex, diameter)) in complex.simplices.iter().enumerate() {
        if simplex.dimension() == 0 {
            continue;
        }
        let mut column: Vec<usize> = simplex.faces().iter().map(|f| position[f]).collect();
        column.sort_unstable();

        while let Some(&low) = column.last() {
            match owner[low] {
                Some(other) => column = xor(&column, &reduced[&other]),
                None => break,
            }
        }

        match column.last() {
            None => {
                if simplex.dimension() == 1 {
                    positive_edge[j] = true;
                }
            }
            Some(&low) => {
                owner[low] = Some(j);
                if simplex.dimension() == 2 {
                    let birth = complex.simplices[low].1;
                    positive_edge[low] = false;
                    if *diameter > birth {
                        pairs.push(PersistencePair {
                            dimension: 1,
                            birth,
                            death: *diameter,
                        });
                    }
                }
                reduced.insert(j, column);
            }
        }
    }

    for (j, positive) in positive_edge.iter().enumerate() {
        if *positive {
            pairs.push(PersistencePair {
                dimension: 1,
                birth: complex.simplices[j].1,
                death: f64::INFINITY,
            });
        }
    }
    pairs.sort_by(|a, b| {
        a.birth
            .partial_cmp(&b.birth)
            .unwrap()
            .then(a.death.partial_cmp(&b.death).unwrap())
    });
    pairs
}

/// Number of classes alive at `scale`: born at or before it, dead strictly
/// after it.
pub fn betti1_at_scale(pairs: &[PersistencePair], scale: f64) -> usize {
    pairs
        .iter()
        .filter(|p| p.birth <= scale && p.death > scale)
        .count()
}

fn xor(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

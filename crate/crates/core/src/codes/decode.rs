use std::collections::HashMap;

use itertools::Itertools;

use super::{enumeration_guard, index_of, vector_at, weight, LinearCode};
use crate::algebra::Elem;
use crate::error::Result;
use crate::matrix::GfMatrix;

/// Coset leaders are the minimum-weight vectors of each coset; among equal
/// weights the one with the smallest index wins, where the index reads the
/// vector as base-q digits with the first coordinate least significant.
fn leader_key(x: &[Elem], q: u32) -> (usize, u64) {
    (weight(x), index_of(x, q))
}

fn subtract(code: &LinearCode, y: &[Elem], e: &[Elem]) -> Vec<Elem> {
    let f = code.field();
    y.iter().zip(e).map(|(&a, &b)| f.sub(a, b)).collect()
}

/// The full standard array: every vector of `GF(q)^n` tagged with its coset.
#[derive(Clone, Debug)]
pub struct StandardArray {
    code: LinearCode,
    coset_of: Vec<u32>,
    leaders: Vec<Vec<Elem>>,
    codewords: Vec<Vec<Elem>>,
}

impl StandardArray {
    /// Builds the array row by row, each new row led by the smallest
    /// (weight, index) vector not yet listed.
    pub fn build(code: &LinearCode) -> Result<StandardArray> {
        let (q, n) = (code.field().order(), code.len());
        enumeration_guard(q, n)?;
        let f = code.field();
        let total = (q as u64).pow(n as u32);
        let codewords: Vec<Vec<Elem>> = code.codewords()?.collect();
        let mut order: Vec<(usize, u64)> = (0..total).map(|i| (weight(&vector_at(i, n, q)), i)).collect();
        order.sort_unstable();
        let mut coset_of = vec![u32::MAX; total as usize];
        let mut leaders = Vec::new();
        for (_, i) in order {
            if coset_of[i as usize] != u32::MAX {
                continue;
            }
            let leader = vector_at(i, n, q);
            let id = leaders.len() as u32;
            for c in &codewords {
                let v: Vec<Elem> = leader.iter().zip(c).map(|(&a, &b)| f.add(a, b)).collect();
                coset_of[index_of(&v, q) as usize] = id;
            }
            leaders.push(leader);
        }
        Ok(StandardArray { code: code.clone(), coset_of, leaders, codewords })
    }

    pub fn leaders(&self) -> &[Vec<Elem>] {
        &self.leaders
    }

    /// Row `i` of the array: leader plus each codeword in message order.
    pub fn row(&self, i: usize) -> Vec<Vec<Elem>> {
        let f = self.code.field();
        self.codewords
            .iter()
            .map(|c| self.leaders[i].iter().zip(c).map(|(&a, &b)| f.add(a, b)).collect())
            .collect()
    }

    /// `(codeword, error)` with `y = codeword + error` and the error a coset leader.
    pub fn decode(&self, y: &[Elem]) -> (Vec<Elem>, Vec<Elem>) {
        assert_eq!(y.len(), self.code.len(), "length mismatch");
        let coset = self.coset_of[index_of(y, self.code.field().order()) as usize] as usize;
        let e = self.leaders[coset].clone();
        (subtract(&self.code, y, &e), e)
    }
}

/// Coset leaders indexed by syndrome `H·yᵀ`.
#[derive(Clone, Debug)]
pub struct SyndromeTable {
    code: LinearCode,
    leaders: HashMap<Vec<Elem>, Vec<Elem>>,
}

impl SyndromeTable {
    /// Fills the table weight class by weight class, so only vectors up to
    /// the covering radius are visited.
    pub fn build(code: &LinearCode) -> Result<SyndromeTable> {
        let (q, n) = (code.field().order(), code.len());
        let redundancy = code.parity_check().rows();
        enumeration_guard(q, redundancy)?;
        let target = (q as usize).pow(redundancy as u32);
        let mut leaders: HashMap<Vec<Elem>, Vec<Elem>> = HashMap::new();
        for w in 0..=n {
            let mut class: HashMap<Vec<Elem>, Vec<Elem>> = HashMap::new();
            for support in (0..n).combinations(w) {
                for values in nonzero_patterns(w, q) {
                    let mut x = vec![0; n];
                    for (&pos, &v) in support.iter().zip(&values) {
                        x[pos] = v;
                    }
                    let s = code.syndrome(&x);
                    if leaders.contains_key(&s) {
                        continue;
                    }
                    match class.get(&s) {
                        Some(cur) if leader_key(cur, q) <= leader_key(&x, q) => {}
                        _ => {
                            class.insert(s, x);
                        }
                    }
                }
            }
            leaders.extend(class);
            if leaders.len() == target {
                break;
            }
        }
        Ok(SyndromeTable { code: code.clone(), leaders })
    }

    pub fn leader(&self, syndrome: &[Elem]) -> Option<&[Elem]> {
        self.leaders.get(syndrome).map(Vec::as_slice)
    }

    pub fn len(&self) -> usize {
        self.leaders.len()
    }

    pub fn is_empty(&self) -> bool {
        self.leaders.is_empty()
    }

    pub fn decode(&self, y: &[Elem]) -> (Vec<Elem>, Vec<Elem>) {
        let e = self.leaders[&self.code.syndrome(y)].clone();
        (subtract(&self.code, y, &e), e)
    }
}

/// All `(q − 1)^w` tuples of nonzero values, last entry varying fastest.
fn nonzero_patterns(w: usize, q: u32) -> Vec<Vec<Elem>> {
    (0..w).fold(vec![Vec::new()], |acc, _| {
        acc.into_iter()
            .flat_map(|prefix| {
                (1..q).map(move |v| {
                    let mut next = prefix.clone();
                    next.push(v);
                    next
                })
            })
            .collect()
    })
}

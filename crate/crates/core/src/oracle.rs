//! Brute-force oracles kept independent of the characterization code paths:
//! the whole Weyl group is materialized and cosets are found as connected
//! components under multiplication by simple reflections.

use std::collections::HashMap;

use crate::roots::{simple_roots, GroupKind, Levi};
use crate::weyl::{group_elements, simple_reflections, SignedPermutation};

pub struct WeylGroup {
    pub kind: GroupKind,
    pub n: usize,
    pub elements: Vec<SignedPermutation>,
    pub lengths: Vec<usize>,
    index: HashMap<SignedPermutation, usize>,
    /// `left[s][i]` = index of `s·w_i`, `right[s][i]` = index of `w_i·s`.
    left: Vec<Vec<usize>>,
    right: Vec<Vec<usize>>,
}

impl WeylGroup {
    pub fn new(kind: GroupKind, n: usize) -> Self {
        let elements = group_elements(kind, n);
        let lengths = elements.iter().map(|w| w.length(kind)).collect();
        let index: HashMap<_, _> = elements.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
        let gens = simple_reflections(kind, n);
        let left = gens.iter().map(|s| elements.iter().map(|w| index[&s.compose(w)]).collect()).collect();
        let right = gens.iter().map(|s| elements.iter().map(|w| index[&w.compose(s)]).collect()).collect();
        Self { kind, n, elements, lengths, index, left, right }
    }

    pub fn index_of(&self, w: &SignedPermutation) -> usize {
        self.index[w]
    }

    /// Indices of the simple reflections lying in the Levi.
    fn generators(&self, levi: &Levi) -> Vec<usize> {
        simple_roots(self.kind, self.n)
            .iter()
            .enumerate()
            .filter(|(_, r)| levi.contains_root(r))
            .map(|(i, _)| i)
            .collect()
    }

    /// Class labels of `W_L \ W / W_M` (either side may be absent).
    pub fn classes(&self, left: Option<&Levi>, right: Option<&Levi>) -> Vec<usize> {
        let lg = left.map(|l| self.generators(l)).unwrap_or_default();
        let rg = right.map(|m| self.generators(m)).unwrap_or_default();
        let mut label = vec![usize::MAX; self.elements.len()];
        let mut next = 0;
        for start in 0..self.elements.len() {
            if label[start] != usize::MAX {
                continue;
            }
            label[start] = next;
            let mut stack = vec![start];
            while let Some(i) = stack.pop() {
                let nbrs = lg.iter().map(|&s| self.left[s][i]).chain(rg.iter().map(|&s| self.right[s][i]));
                for j in nbrs.collect::<Vec<_>>() {
                    if label[j] == usize::MAX {
                        label[j] = next;
                        stack.push(j);
                    }
                }
            }
            next += 1;
        }
        label
    }

    /// Minimal-length element of each class; errors if some class has two minima.
    pub fn min_length_reps(&self, left: Option<&Levi>, right: Option<&Levi>) -> Result<Vec<SignedPermutation>, String> {
        let label = self.classes(left, right);
        let count = label.iter().max().map_or(0, |m| m + 1);
        let mut best: Vec<Option<(usize, usize, bool)>> = vec![None; count];
        for (i, &c) in label.iter().enumerate() {
            let len = self.lengths[i];
            best[c] = match best[c] {
                Some((l, j, unique)) if len >= l => Some((l, j, unique && len > l)),
                _ => Some((len, i, true)),
            };
        }
        let mut out = Vec::with_capacity(count);
        for b in best {
            let (_, i, unique) = b.expect("nonempty class");
            if !unique {
                return Err(format!("class of {} has two minimal elements", self.elements[i]));
            }
            out.push(self.elements[i].clone());
        }
        crate::weyl::sort_canonical(&mut out, self.kind);
        Ok(out)
    }

    /// True iff the double cosets `W_L w W_M` over `reps` are disjoint and cover `W`.
    pub fn tiles(&self, l: &Levi, m: &Levi, reps: &[SignedPermutation]) -> bool {
        let lg = self.generators(l);
        let rg = self.generators(m);
        let mut owner = vec![usize::MAX; self.elements.len()];
        for (r, w) in reps.iter().enumerate() {
            let start = self.index_of(w);
            if owner[start] != usize::MAX {
                return false;
            }
            owner[start] = r;
            let mut stack = vec![start];
            while let Some(i) = stack.pop() {
                let nbrs: Vec<usize> = lg.iter().map(|&s| self.left[s][i]).chain(rg.iter().map(|&s| self.right[s][i])).collect();
                for j in nbrs {
                    if owner[j] == usize::MAX {
                        owner[j] = r;
                        stack.push(j);
                    } else if owner[j] != r {
                        return false;
                    }
                }
            }
        }
        owner.iter().all(|&o| o != usize::MAX)
    }

    /// Elements of `W_M` (the class of the identity under right multiplication).
    pub fn levi_subgroup(&self, m: &Levi) -> Vec<SignedPermutation> {
        let label = self.classes(None, Some(m));
        let e = self.index_of(&SignedPermutation::identity(self.n));
        self.elements.iter().enumerate().filter(|(i, _)| label[*i] == label[e]).map(|(_, w)| w.clone()).collect()
    }
}

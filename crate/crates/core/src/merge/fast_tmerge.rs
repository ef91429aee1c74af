use super::bbmerge::Candidates;
use super::{MergeState, Strategy};
use crate::rotation::RankVector;

pub(crate) struct FastTMerge {
    v: RankVector,
    w: Vec<bool>,
    candidates: Candidates,
}

impl FastTMerge {
    pub fn new(v: RankVector) -> Self {
        FastTMerge {
            w: v.bits().to_vec(),
            v,
            candidates: Candidates::default(),
        }
    }
}

impl Strategy for FastTMerge {
    fn candidate(&mut self, st: &mut MergeState, t: usize) -> Option<usize> {
        let p = st.axes[t].clone();
        let j = self.candidates.push(p.axis_key(), t)?;
        let pivots = self.v.pivot_indices();
        let from = pivots.partition_point(|&k| k < j);
        for &k in pivots[from..].iter().take_while(|&&k| k < t) {
            if !st.anticommutes(k, &p) {
                continue;
            }
            if !st.is_clifford(k) {
                return None;
            }
            for l in k + 1..t {
                if self.w[l] && !st.is_clifford(l) && st.anticommutes(l, &p) {
                    return None;
                }
            }
            break;
        }
        Some(j)
    }

    fn merged(&mut self, st: &MergeState, j: usize, t: usize, cliffordized: bool) {
        if self.v.get(j) {
            for w in &mut self.w[j + 1..] {
                *w = true;
            }
            self.w[j] = false;
        }
        let key = st.axes[t].axis_key();
        self.candidates.remove(&key, j);
        if cliffordized {
            self.candidates.remove(&key, t);
        }
    }
}

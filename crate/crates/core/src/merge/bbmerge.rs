use std::collections::HashMap;

use super::{MergeState, Strategy};
use crate::pauli::AxisKey;
use crate::rotation::RankVector;

/// Live rotations grouped by unsigned axis, in insertion order.
#[derive(Default)]
pub(crate) struct Candidates {
    lists: HashMap<AxisKey, Vec<usize>>,
}

impl Candidates {
    /// Appends `t` and returns the previous entry of its list.
    pub fn push(&mut self, key: AxisKey, t: usize) -> Option<usize> {
        let list = self.lists.entry(key).or_default();
        list.push(t);
        list.len().checked_sub(2).map(|i| list[i])
    }

    pub fn remove(&mut self, key: &AxisKey, index: usize) {
        if let Some(list) = self.lists.get_mut(key) {
            if let Some(pos) = list.iter().rposition(|&x| x == index) {
                list.remove(pos);
            }
        }
    }
}

pub(crate) struct BBMerge {
    v: RankVector,
    candidates: Candidates,
}

impl BBMerge {
    pub fn new(v: RankVector) -> Self {
        BBMerge {
            v,
            candidates: Candidates::default(),
        }
    }
}

impl Strategy for BBMerge {
    fn candidate(&mut self, st: &mut MergeState, t: usize) -> Option<usize> {
        let p = st.axes[t].clone();
        let j = self.candidates.push(p.axis_key(), t)?;
        let pivots = self.v.pivot_indices();
        let from = pivots.partition_point(|&k| k < j);
        for &k in pivots[from..].iter().take_while(|&&k| k < t) {
            if st.anticommutes(k, &p) {
                return None;
            }
        }
        Some(j)
    }

    fn merged(&mut self, st: &MergeState, j: usize, t: usize, cliffordized: bool) {
        let key = st.axes[t].axis_key();
        self.candidates.remove(&key, j);
        if cliffordized {
            self.candidates.remove(&key, t);
        }
    }
}
